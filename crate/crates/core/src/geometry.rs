//! Finite fields of order up to 16, the projective planes PG(2,q), their
//! point-line incidence graphs, regular hyperovals, and the two-condition
//! checker that certifies when a point set together with its skew lines forms
//! a k-DIS of the incidence graph.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("unsupported field order {q}; supported: 2,3,4,5,7,8,9,11,13,16")]
    UnsupportedOrder { q: usize },
    #[error("regular hyperovals need even q > 2, got q = {q}")]
    HyperovalOrder { q: usize },
    #[error("point index {index} out of range ({count} points)")]
    PointIndex { index: usize, count: usize },
    #[error("point parse error on line {line}: {msg}")]
    PointParse { line: usize, msg: String },
}

/// Arithmetic tables for F_q, q = p^m <= 16.
///
/// Elements are indices `0..q`; the base-p digits of an index are the
/// coefficients of the corresponding polynomial in the fixed basis
/// `1, α, α², ...` where `α` is a root of the stored irreducible polynomial
/// (the value-least monic irreducible of degree m over F_p).
#[derive(Debug, Clone)]
pub struct FiniteField {
    q: usize,
    p: usize,
    /// Coefficients of the irreducible modulus, ascending degree (monic).
    irreducible: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
}

const SUPPORTED_Q: [usize; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

fn factor_prime_power(q: usize) -> Option<(usize, u32)> {
    for p in [2usize, 3, 5, 7, 11, 13] {
        if q.is_multiple_of(p) {
            let mut m = 0u32;
            let mut rest = q;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return (rest == 1).then_some((p, m));
        }
    }
    None
}

/// Polynomials over F_p as ascending coefficient vectors.
mod poly {
    pub fn trim(mut v: Vec<u8>) -> Vec<u8> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn rem(mut a: Vec<u8>, b: &[u8], p: u8) -> Vec<u8> {
        debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
        while a.len() >= b.len() {
            let lead = *a.last().unwrap();
            if lead != 0 {
                let shift = a.len() - b.len();
                for (i, &bc) in b.iter().enumerate() {
                    let sub = (lead as u16 * bc as u16) % p as u16;
                    a[shift + i] = ((a[shift + i] as u16 + p as u16 - sub) % p as u16) as u8;
                }
            }
            a.pop();
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    pub fn mul(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u8; a.len() + b.len() - 1];
        for (i, &ac) in a.iter().enumerate() {
            for (j, &bc) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u16 + ac as u16 * bc as u16) % p as u16) as u8;
            }
        }
        trim(out)
    }
}

fn index_to_poly(mut idx: usize, p: usize) -> Vec<u8> {
    let mut out = Vec::new();
    while idx > 0 {
        out.push((idx % p) as u8);
        idx /= p;
    }
    out
}

fn poly_to_index(poly: &[u8], p: usize) -> usize {
    poly.iter()
        .rev()
        .fold(0usize, |acc, &c| acc * p + c as usize)
}

impl FiniteField {
    /// Builds F_q and verifies the field axioms exhaustively.
    pub fn new(q: usize) -> Result<Self, GeometryError> {
        if !SUPPORTED_Q.contains(&q) {
            return Err(GeometryError::UnsupportedOrder { q });
        }
        let (p, m) = factor_prime_power(q).expect("supported orders are prime powers");
        let irreducible = if m == 1 {
            vec![0, 1] // x, unused for primes but recorded for uniformity
        } else {
            Self::least_irreducible(p, m)
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                if m == 1 {
                    add[a * q + b] = ((a + b) % p) as u8;
                    mul[a * q + b] = ((a * b) % p) as u8;
                } else {
                    let pa = index_to_poly(a, p);
                    let pb = index_to_poly(b, p);
                    let mut sum = vec![0u8; pa.len().max(pb.len())];
                    for (i, slot) in sum.iter_mut().enumerate() {
                        let x = *pa.get(i).unwrap_or(&0) as usize;
                        let y = *pb.get(i).unwrap_or(&0) as usize;
                        *slot = ((x + y) % p) as u8;
                    }
                    add[a * q + b] = poly_to_index(&poly::trim(sum), p) as u8;
                    let prod = poly::rem(poly::mul(&pa, &pb, p as u8), &irreducible, p as u8);
                    mul[a * q + b] = poly_to_index(&prod, p) as u8;
                }
            }
        }
        let field = FiniteField {
            q,
            p,
            irreducible,
            add,
            mul,
        };
        field.check_axioms();
        Ok(field)
    }

    /// Value-least monic irreducible of degree m over F_p, where the value of
    /// `x^m + c` is `p^m + index(c)`.
    fn least_irreducible(p: usize, m: u32) -> Vec<u8> {
        let pm = p.pow(m);
        'candidates: for c in 0..pm {
            let mut candidate = index_to_poly(c, p);
            candidate.resize(m as usize, 0);
            candidate.push(1);
            // Trial division by every monic polynomial of degree 1..=m/2.
            for d in 1..=(m as usize / 2) {
                for lower in 0..p.pow(d as u32) {
                    let mut divisor = index_to_poly(lower, p);
                    divisor.resize(d, 0);
                    divisor.push(1);
                    if poly::rem(candidate.clone(), &divisor, p as u8).is_empty() {
                        continue 'candidates;
                    }
                }
            }
            return candidate;
        }
        unreachable!("irreducible polynomials exist for every prime power")
    }

    fn check_axioms(&self) {
        let q = self.q;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.mul(a, 0), 0);
            assert!((0..q).any(|b| self.add(a, b) == 0), "missing -{a}");
            if a != 0 {
                assert!((0..q).any(|b| self.mul(a, b) == 1), "missing 1/{a}");
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c)),
                        "distributivity at ({a},{b},{c})"
                    );
                }
            }
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// Ascending coefficients of the modulus used for extension fields.
    pub fn modulus(&self) -> &[u8] {
        &self.irreducible
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a != 0);
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }
}

/// A point or line of PG(2,q) in normalized homogeneous coordinates (first
/// nonzero coordinate scaled to 1).
pub type HomogeneousTriple = [usize; 3];

/// The Desarguesian projective plane of order q.
///
/// Points and lines are sorted lexicographically by their normalized triples,
/// giving stable indices. A point lies on a line when the dot product of
/// their triples vanishes in F_q.
pub struct ProjectivePlane {
    field: FiniteField,
    points: Vec<HomogeneousTriple>,
    lines: Vec<HomogeneousTriple>,
    line_points: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
}

fn normalize(field: &FiniteField, t: HomogeneousTriple) -> HomogeneousTriple {
    let lead = t.iter().copied().find(|&c| c != 0).expect("nonzero triple");
    let inv = field.inv(lead);
    [
        field.mul(t[0], inv),
        field.mul(t[1], inv),
        field.mul(t[2], inv),
    ]
}

/// Builds PG(2,q). Plane invariants (counts, line sizes, pencil sizes,
/// unique joining lines) are verified before returning.
pub fn build_pg2(q: usize) -> Result<ProjectivePlane, GeometryError> {
    let field = FiniteField::new(q)?;
    let mut points: Vec<HomogeneousTriple> = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                if (x, y, z) == (0, 0, 0) {
                    continue;
                }
                let n = normalize(&field, [x, y, z]);
                if n == [x, y, z] {
                    points.push(n);
                }
            }
        }
    }
    points.sort_unstable();
    let lines = points.clone(); // self-dual coordinate set
    let count = q * q + q + 1;
    assert_eq!(points.len(), count);

    let dot = |a: &HomogeneousTriple, b: &HomogeneousTriple| {
        let mut acc = 0usize;
        for i in 0..3 {
            acc = field.add(acc, field.mul(a[i], b[i]));
        }
        acc
    };
    let mut line_points = vec![Vec::new(); count];
    let mut point_lines = vec![Vec::new(); count];
    for (li, line) in lines.iter().enumerate() {
        for (pi, point) in points.iter().enumerate() {
            if dot(line, point) == 0 {
                line_points[li].push(pi);
                point_lines[pi].push(li);
            }
        }
    }
    for (li, pts) in line_points.iter().enumerate() {
        assert_eq!(pts.len(), q + 1, "line {li} size");
    }
    for (pi, pencil) in point_lines.iter().enumerate() {
        assert_eq!(pencil.len(), q + 1, "point {pi} pencil size");
    }
    // Any two distinct points lie on exactly one common line.
    for a in 0..count {
        for b in (a + 1)..count {
            let common = point_lines[a]
                .iter()
                .filter(|l| point_lines[b].contains(l))
                .count();
            assert_eq!(common, 1, "points {a},{b} share {common} lines");
        }
    }
    Ok(ProjectivePlane {
        field,
        points,
        lines,
        line_points,
        point_lines,
    })
}

impl ProjectivePlane {
    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Number of points (equal to the number of lines).
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, index: usize) -> HomogeneousTriple {
        self.points[index]
    }

    pub fn line(&self, index: usize) -> HomogeneousTriple {
        self.lines[index]
    }

    pub fn points_on_line(&self, line: usize) -> &[usize] {
        &self.line_points[line]
    }

    pub fn lines_through_point(&self, point: usize) -> &[usize] {
        &self.point_lines[point]
    }

    /// Index of a (not necessarily normalized) nonzero triple.
    pub fn point_index(&self, triple: HomogeneousTriple) -> Option<usize> {
        if triple.iter().all(|&c| c == 0) || triple.iter().any(|&c| c >= self.field.order()) {
            return None;
        }
        let n = normalize(&self.field, triple);
        self.points.binary_search(&n).ok()
    }

    /// Per-line intersection sizes with a point set.
    pub fn line_profile(&self, q_set: &[usize]) -> Vec<usize> {
        let mut in_q = vec![false; self.size()];
        for &p in q_set {
            in_q[p] = true;
        }
        self.line_points
            .iter()
            .map(|pts| pts.iter().filter(|&&p| in_q[p]).count())
            .collect()
    }

    /// Lines meeting the point set in no point.
    pub fn skew_lines(&self, q_set: &[usize]) -> Vec<usize> {
        self.line_profile(q_set)
            .iter()
            .enumerate()
            .filter_map(|(l, &c)| (c == 0).then_some(l))
            .collect()
    }

    /// Lines meeting the point set in exactly one point.
    pub fn tangent_lines(&self, q_set: &[usize]) -> Vec<usize> {
        self.line_profile(q_set)
            .iter()
            .enumerate()
            .filter_map(|(l, &c)| (c == 1).then_some(l))
            .collect()
    }
}

/// Bipartite point-line incidence graph: points take indices
/// `0..q²+q+1`, lines follow.
pub fn incidence_graph(plane: &ProjectivePlane) -> Graph {
    let count = plane.size();
    let mut edges = Vec::with_capacity(count * (plane.order() + 1));
    for line in 0..count {
        for &point in plane.points_on_line(line) {
            edges.push((point, count + line));
        }
    }
    Graph::from_edges(2 * count, &edges).expect("incidence graph within vertex cap")
}

/// The regular hyperoval of PG(2,q) for even q > 2: the conic
/// `{(1, t, t²) : t ∈ F_q} ∪ {(0,0,1)}` together with its nucleus `(0,1,0)`.
/// Every line meets it in 0 or 2 points (verified before returning).
pub fn regular_hyperoval(plane: &ProjectivePlane) -> Result<Vec<usize>, GeometryError> {
    let q = plane.order();
    if q <= 2 || !q.is_multiple_of(2) {
        return Err(GeometryError::HyperovalOrder { q });
    }
    let f = plane.field();
    let mut pts: Vec<usize> = (0..q)
        .map(|t| plane.point_index([1, t, f.mul(t, t)]).unwrap())
        .collect();
    pts.push(plane.point_index([0, 0, 1]).unwrap());
    pts.push(plane.point_index([0, 1, 0]).unwrap());
    pts.sort_unstable();
    assert_eq!(pts.len(), q + 2);
    for (line, meet) in plane.line_profile(&pts).iter().enumerate() {
        assert!(
            *meet == 0 || *meet == 2,
            "line {line} meets the hyperoval in {meet} points"
        );
    }
    Ok(pts)
}

/// Vertex set of the incidence graph consisting of a point set and the lines
/// skew to it. For a hyperoval this is a 2-DIS.
pub fn point_set_dis(plane: &ProjectivePlane, q_set: &[usize]) -> VertexSet {
    let count = plane.size();
    let mut s = VertexSet::from_iter(q_set.iter().copied());
    for line in plane.skew_lines(q_set) {
        s.insert(count + line);
    }
    s
}

/// A failed condition together with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcViolation {
    /// A line meets the set in between 1 and k-1 points.
    LineMeetsFewPoints { line: usize, meets: usize },
    /// A point outside the set lies on fewer than k skew lines.
    PointLacksSkewLines { point: usize, skew: usize },
}

/// Outcome of [`check_arc_conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCheck {
    pub holds: bool,
    pub violations: Vec<ArcViolation>,
}

/// Checks the two conditions under which a point set `Q` plus its skew lines
/// is a k-DIS of the incidence graph:
///
/// 1. every line meets `Q` in 0 or at least k points;
/// 2. every point outside `Q` lies on at least k lines skew to `Q`.
pub fn check_arc_conditions(
    plane: &ProjectivePlane,
    q_set: &[usize],
    k: usize,
) -> Result<ArcCheck, GeometryError> {
    let count = plane.size();
    for &p in q_set {
        if p >= count {
            return Err(GeometryError::PointIndex {
                index: p,
                count,
            });
        }
    }
    let profile = plane.line_profile(q_set);
    let mut violations = Vec::new();
    for (line, &meets) in profile.iter().enumerate() {
        if meets != 0 && meets < k {
            violations.push(ArcViolation::LineMeetsFewPoints { line, meets });
        }
    }
    let mut in_q = vec![false; count];
    for &p in q_set {
        in_q[p] = true;
    }
    for (point, _) in in_q.iter().enumerate().filter(|(_, &inside)| !inside) {
        let skew = plane
            .lines_through_point(point)
            .iter()
            .filter(|&&l| profile[l] == 0)
            .count();
        if skew < k {
            violations.push(ArcViolation::PointLacksSkewLines { point, skew });
        }
    }
    Ok(ArcCheck {
        holds: violations.is_empty(),
        violations,
    })
}

/// Parses the point-set file format: one point per line as `x:y:z`, field
/// elements written as their index in the fixed basis representation.
pub fn parse_point_set(plane: &ProjectivePlane, text: &str) -> Result<Vec<usize>, GeometryError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(':').collect();
        let err = |msg: &str| GeometryError::PointParse {
            line: idx + 1,
            msg: msg.into(),
        };
        if fields.len() != 3 {
            return Err(err("expected x:y:z"));
        }
        let mut triple = [0usize; 3];
        for (slot, field) in triple.iter_mut().zip(&fields) {
            *slot = field
                .trim()
                .parse()
                .map_err(|_| err("coordinates must be nonnegative integers"))?;
        }
        let point = plane
            .point_index(triple)
            .ok_or_else(|| err("not a point of the plane"))?;
        out.push(point);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Renders a point set in the `x:y:z` file format.
pub fn format_point_set(plane: &ProjectivePlane, q_set: &[usize]) -> String {
    q_set
        .iter()
        .map(|&p| {
            let [x, y, z] = plane.point(p);
            format!("{x}:{y}:{z}\n")
        })
        .collect()
}
