//! Parametric graph families, combinators and the generator expression
//! language used by the CLI.
//!
//! Labeling conventions are fixed because golden tests depend on them:
//! Cartesian products are row-major (`(a, x) -> a * |V(H)| + x`), disjoint
//! unions offset the second operand, cones put the apex last, Kneser vertices
//! are the t-subsets in colexicographic order, stars have their center at
//! index 0.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::search::is_kdis;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parameter must be positive: {what}")]
    NonPositive { what: &'static str },
    #[error("kneser(n, t) requires t < n/2, got n = {n}, t = {t}")]
    KneserRange { n: usize, t: usize },
    #[error("turan(n, r) requires 1 <= r <= n, got n = {n}, r = {r}")]
    TuranRange { n: usize, r: usize },
    #[error("resulting graph would have {n} vertices, exceeding the {MAX_VERTICES} cap")]
    TooLarge { n: usize },
    #[error("prufer label {label} out of range for n = {n}")]
    PruferLabel { label: usize, n: usize },
    #[error("star {star} has {leaves} leaves, fewer than k = {k}")]
    StarTooSmall { star: usize, leaves: usize, k: usize },
    #[error("identification references {what} out of range")]
    IdentificationRange { what: &'static str },
    #[error("identifications merge two leaves of star {star}")]
    IdentificationSameStar { star: usize },
    #[error("center edge endpoints must be distinct stars")]
    CenterEdgeLoop,
    #[error("expression error at byte {at}: {msg}")]
    Expr { at: usize, msg: String },
}

fn check_size(n: usize) -> Result<usize, GeneratorError> {
    if n > MAX_VERTICES {
        Err(GeneratorError::TooLarge { n })
    } else {
        Ok(n)
    }
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::NonPositive { what: "complete(n)" });
    }
    check_size(n)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Path on n vertices, edges i — i+1.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::NonPositive { what: "path(n)" });
    }
    check_size(n)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::NonPositive { what: "cycle(n >= 3)" });
    }
    check_size(n)?;
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Star K_{1,t}: center 0, leaves 1..=t.
pub fn star(t: usize) -> Result<Graph, GeneratorError> {
    if t == 0 {
        return Err(GeneratorError::NonPositive { what: "star(t)" });
    }
    check_size(t + 1)?;
    let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
    Ok(Graph::from_edges(t + 1, &edges)?)
}

/// Complete bipartite graph K_{a,b}: side A is 0..a, side B is a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GeneratorError> {
    if a == 0 || b == 0 {
        return Err(GeneratorError::NonPositive {
            what: "complete_bipartite sides",
        });
    }
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph; parts occupy consecutive index ranges.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(GeneratorError::NonPositive {
            what: "multipartite part sizes",
        });
    }
    let n = check_size(sizes.iter().sum())?;
    let mut part = vec![0usize; n];
    let mut idx = 0;
    for (p, &s) in sizes.iter().enumerate() {
        for _ in 0..s {
            part[idx] = p;
            idx += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Turán graph T_{n,r}: complete r-partite with balanced parts. The first
/// `n mod r` parts get the extra vertex.
pub fn turan(n: usize, r: usize) -> Result<Graph, GeneratorError> {
    if r == 0 || r > n {
        return Err(GeneratorError::TuranRange { n, r });
    }
    let small = n / r;
    let extra = n % r;
    let sizes: Vec<usize> = (0..r)
        .map(|i| if i < extra { small + 1 } else { small })
        .collect();
    complete_multipartite(&sizes)
}

/// Kneser graph KN(n, t): vertices are the t-subsets of an n-set in
/// colexicographic order, adjacent when disjoint. Requires t < n/2.
pub fn kneser(n: usize, t: usize) -> Result<Graph, GeneratorError> {
    if t == 0 {
        return Err(GeneratorError::NonPositive { what: "kneser t" });
    }
    if 2 * t >= n {
        return Err(GeneratorError::KneserRange { n, t });
    }
    // Ascending bitmask order restricted to fixed popcount is colex order.
    let mut subsets: Vec<u64> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == t {
            subsets.push(mask);
        }
    }
    check_size(subsets.len())?;
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(subsets.len(), &edges)?)
}

/// The t-subsets indexing the vertices of [`kneser`], in vertex order.
pub fn kneser_vertex_subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == t {
            out.push((0..n).filter(|&e| (mask >> e) & 1 != 0).collect());
        }
    }
    out
}

/// Cartesian product: (a, x) adjacent to (b, y) iff a = b and x ~ y, or
/// x = y and a ~ b. Vertex (a, x) has index a * |V(H)| + x.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GeneratorError> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    if gn == 0 || hn == 0 {
        return Err(GeneratorError::NonPositive {
            what: "product operands",
        });
    }
    let n = check_size(gn * hn)?;
    let mut edges = Vec::new();
    for a in 0..gn {
        for x in 0..hn {
            let base = a * hn + x;
            for y in h.neighbors(x).iter() {
                if y > x {
                    edges.push((base, a * hn + y));
                }
            }
            for b in g.neighbors(a).iter() {
                if b > a {
                    edges.push((base, b * hn + x));
                }
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// t-fold Cartesian power, folded left: ((G □ G) □ G) …
pub fn power(g: &Graph, t: usize) -> Result<Graph, GeneratorError> {
    if t == 0 {
        return Err(GeneratorError::NonPositive { what: "power exponent" });
    }
    let mut acc = g.clone();
    for _ in 1..t {
        acc = cartesian_product(&acc, g)?;
    }
    Ok(acc)
}

/// Disjoint union; vertices of `h` are offset by `|V(g)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GeneratorError> {
    let gn = g.vertex_count();
    let n = check_size(gn + h.vertex_count())?;
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + gn, v + gn)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Adds one new vertex (index n) joined to every vertex of `g`.
pub fn cone(g: &Graph) -> Result<Graph, GeneratorError> {
    let gn = g.vertex_count();
    let n = check_size(gn + 1)?;
    let mut edges = g.edges();
    edges.extend((0..gn).map(|v| (v, gn)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Decodes a Prüfer sequence of length n-2 into the labeled tree on n
/// vertices it encodes (n >= 2).
pub fn pruefer_tree(seq: &[usize]) -> Result<Graph, GeneratorError> {
    let n = seq.len() + 2;
    check_size(n)?;
    for &label in seq {
        if label >= n {
            return Err(GeneratorError::PruferLabel { label, n });
        }
    }
    let mut edges = Vec::with_capacity(n - 1);
    pruefer_decode_into(seq, n, &mut edges);
    Ok(Graph::from_edges(n, &edges)?)
}

/// Prüfer decoding into a reusable edge buffer, without the Graph wrapper.
/// Used by the exhaustive tree scans where n is small but volume is large.
///
/// O(n) pointer sweep: consumed leaves drop to degree 0, so the scan can
/// restart from the current pointer; a vertex below the pointer that just
/// became a leaf is used immediately. The smallest available leaf is always
/// picked, matching the textbook decoding.
pub fn pruefer_decode_into(seq: &[usize], n: usize, edges: &mut Vec<(usize, usize)>) {
    edges.clear();
    debug_assert!(n >= 2 && seq.len() + 2 == n);
    let mut deg = vec![1u32; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut ptr = 0usize;
    while deg[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        deg[leaf] -= 1;
        deg[s] -= 1;
        if deg[s] == 1 && s < ptr {
            leaf = s;
        } else {
            while deg[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

/// The record-holding construction for 2-DIS counts: a disjoint union of
/// `alpha` copies of K₃□K₃ and `beta` copies of K₄□K₄ on n = 9·alpha + 16·beta
/// vertices (beta <= 8), realizing 6^alpha · 24^beta many 2-DISes.
///
/// Returns `None` when n is not expressible this way; alpha and beta are
/// uniquely determined by n (beta ≡ 4n mod 9).
pub fn two_dis_record_graph(n: usize) -> Option<Graph> {
    let beta = (4 * n) % 9;
    let rest = n.checked_sub(16 * beta)?;
    if rest % 9 != 0 {
        return None;
    }
    let alpha = rest / 9;
    let mut g = Graph::empty(0).ok()?;
    let rook3 = power(&complete(3).ok()?, 2).ok()?;
    let rook4 = power(&complete(4).ok()?, 2).ok()?;
    for _ in 0..alpha {
        g = disjoint_union(&g, &rook3).ok()?;
    }
    for _ in 0..beta {
        g = disjoint_union(&g, &rook4).ok()?;
    }
    Some(g)
}

/// One star of the assembly: `leaves` is t_i, the leaf count.
#[derive(Debug, Clone, Copy)]
pub struct StarSpec {
    pub leaves: usize,
}

/// A leaf-pair identification between two distinct stars (star index, leaf
/// index within the star).
pub type LeafIdentification = ((usize, usize), (usize, usize));

/// Assembles a graph from disjoint stars by identifying leaf pairs of
/// distinct stars and adding edges between centers.
///
/// Centers take indices `0..stars.len()`; merged leaf classes follow in order
/// of their smallest (star, leaf) member. The union of the leaves is verified
/// to be a k-DIS of the result before returning.
pub fn construction1_assemble(
    stars: &[StarSpec],
    identifications: &[LeafIdentification],
    center_edges: &[(usize, usize)],
    k: usize,
) -> Result<(Graph, VertexSet), GeneratorError> {
    let s = stars.len();
    if s == 0 || k == 0 {
        return Err(GeneratorError::NonPositive {
            what: "stars and k",
        });
    }
    for (i, st) in stars.iter().enumerate() {
        if st.leaves < k {
            return Err(GeneratorError::StarTooSmall {
                star: i,
                leaves: st.leaves,
                k,
            });
        }
    }
    // Flat leaf ids, then union-find over identifications.
    let leaf_base: Vec<usize> = stars
        .iter()
        .scan(0usize, |acc, st| {
            let b = *acc;
            *acc += st.leaves;
            Some(b)
        })
        .collect();
    let total_leaves: usize = stars.iter().map(|st| st.leaves).sum();
    let mut parent: Vec<usize> = (0..total_leaves).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &((si, li), (sj, lj)) in identifications {
        if si >= s || sj >= s {
            return Err(GeneratorError::IdentificationRange { what: "star index" });
        }
        if li >= stars[si].leaves || lj >= stars[sj].leaves {
            return Err(GeneratorError::IdentificationRange { what: "leaf index" });
        }
        if si == sj {
            return Err(GeneratorError::IdentificationSameStar { star: si });
        }
        let (a, b) = (find(&mut parent, leaf_base[si] + li), find(&mut parent, leaf_base[sj] + lj));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    // Two leaves of one star must stay distinct even after transitive merges,
    // otherwise the center would lose a neighbor to edge collapse.
    let mut class_star: Vec<Option<usize>> = vec![None; total_leaves];
    for si in 0..s {
        for li in 0..stars[si].leaves {
            let root = find(&mut parent, leaf_base[si] + li);
            match class_star[root] {
                Some(prev) if prev == si => {
                    return Err(GeneratorError::IdentificationSameStar { star: si })
                }
                _ => class_star[root] = Some(si),
            }
        }
    }
    // Compact vertex numbering: centers, then leaf classes by smallest member.
    let mut class_vertex: Vec<Option<usize>> = vec![None; total_leaves];
    let mut next = s;
    let mut edges = Vec::new();
    for si in 0..s {
        for li in 0..stars[si].leaves {
            let root = find(&mut parent, leaf_base[si] + li);
            let v = *class_vertex[root].get_or_insert_with(|| {
                let v = next;
                next += 1;
                v
            });
            edges.push((si, v));
        }
    }
    for &(ci, cj) in center_edges {
        if ci >= s || cj >= s {
            return Err(GeneratorError::IdentificationRange {
                what: "center index",
            });
        }
        if ci == cj {
            return Err(GeneratorError::CenterEdgeLoop);
        }
        edges.push((ci, cj));
    }
    check_size(next)?;
    let g = Graph::from_edges(next, &edges)?;
    let leaves = VertexSet::from_iter(s..next);
    assert!(
        is_kdis(&g, &leaves, k),
        "assembled leaf set must be a {k}-DIS"
    );
    Ok((g, leaves))
}

/// Dispatch by family name; the string names double as the expression
/// language primitives.
pub fn family(name: &str, params: &[usize]) -> Result<Graph, GeneratorError> {
    let want = |count: usize| -> Result<(), GeneratorError> {
        if params.len() == count {
            Ok(())
        } else {
            Err(GeneratorError::Expr {
                at: 0,
                msg: format!("{name} expects {count} numeric parameter(s)"),
            })
        }
    };
    match name {
        "complete" => {
            want(1)?;
            complete(params[0])
        }
        "path" => {
            want(1)?;
            path(params[0])
        }
        "cycle" => {
            want(1)?;
            cycle(params[0])
        }
        "star" => {
            want(1)?;
            star(params[0])
        }
        "empty" => {
            want(1)?;
            check_size(params[0])?;
            Ok(Graph::empty(params[0])?)
        }
        "Kb" => {
            want(2)?;
            complete_bipartite(params[0], params[1])
        }
        "turan" => {
            want(2)?;
            turan(params[0], params[1])
        }
        "kneser" => {
            want(2)?;
            kneser(params[0], params[1])
        }
        "multi" => complete_multipartite(params),
        _ => Err(GeneratorError::Expr {
            at: 0,
            msg: format!("unknown graph family {name:?}"),
        }),
    }
}

// ---------------------------------------------------------------------------
// Generator expression language: name(args) with nesting, whitespace ignored.
// "K5", "Kb(3,3)", "turan(9,3)", "kneser(5,2)", "cart(K3,K3)", "pow(K3,4)",
// "union(A,B)", "cone(A)", "path(7)", "cycle(5)", "star(4)".
// ---------------------------------------------------------------------------

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Arg {
    Number(usize),
    Graph(Graph),
}

impl<'a> ExprParser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, GeneratorError> {
        Err(GeneratorError::Expr {
            at: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize, GeneratorError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn ident(&mut self) -> Result<&'a str, GeneratorError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a generator name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn arg(&mut self) -> Result<Arg, GeneratorError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Arg::Number(self.number()?)),
            _ => Ok(Arg::Graph(self.graph()?)),
        }
    }

    fn args(&mut self) -> Result<Vec<Arg>, GeneratorError> {
        if self.peek() != Some(b'(') {
            return Ok(Vec::new());
        }
        self.pos += 1;
        let mut out = vec![self.arg()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.arg()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return self.err("expected ',' or ')'"),
            }
        }
    }

    fn graph(&mut self) -> Result<Graph, GeneratorError> {
        let name = self.ident()?;
        // "K5" shorthand for complete(5).
        if let Some(rest) = name.strip_prefix('K') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                return complete(rest.parse().or_else(|_| self.err("number out of range"))?);
            }
        }
        let args = self.args()?;
        let numbers = |args: &[Arg]| -> Result<Vec<usize>, GeneratorError> {
            args.iter()
                .map(|a| match a {
                    Arg::Number(v) => Ok(*v),
                    Arg::Graph(_) => Err(GeneratorError::Expr {
                        at: self.pos,
                        msg: format!("{name} takes numeric arguments"),
                    }),
                })
                .collect()
        };
        match name {
            "cart" | "union" => {
                let [Arg::Graph(a), Arg::Graph(b)] = &args[..] else {
                    return self.err(format!("{name} expects two graph arguments"));
                };
                if name == "cart" {
                    cartesian_product(a, b)
                } else {
                    disjoint_union(a, b)
                }
            }
            "pow" => {
                let [Arg::Graph(a), Arg::Number(t)] = &args[..] else {
                    return self.err("pow expects a graph and an exponent");
                };
                power(a, *t)
            }
            "cone" => {
                let [Arg::Graph(a)] = &args[..] else {
                    return self.err("cone expects one graph argument");
                };
                cone(a)
            }
            _ => family(name, &numbers(&args)?),
        }
    }
}

/// Parses a generator expression like `cart(K3,K3)` or `kneser(5,2)`.
pub fn parse_graph_expr(text: &str) -> Result<Graph, GeneratorError> {
    let mut p = ExprParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let g = p.graph()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{count_kdis, enumerate_kdis};

    #[test]
    fn kneser_5_2_is_petersen() {
        let g = kneser(5, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn kneser_rejects_large_t() {
        assert!(matches!(kneser(4, 2), Err(GeneratorError::KneserRange { .. })));
    }

    #[test]
    fn turan_9_3_is_k333() {
        let g = turan(9, 3).unwrap();
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(g, k333);
        assert!((0..9).all(|v| g.degree(v) == 6));
    }

    #[test]
    fn complete_bipartite_2_2_is_c4() {
        let g = complete_bipartite(2, 2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn products_have_expected_regularity() {
        let k3 = complete(3).unwrap();
        let rook = cartesian_product(&k3, &k3).unwrap();
        assert_eq!(rook.vertex_count(), 9);
        assert!((0..9).all(|v| rook.degree(v) == 4));

        let cube = power(&k3, 3).unwrap();
        assert_eq!(cube.vertex_count(), 27);
        assert!((0..27).all(|v| cube.degree(v) == 6));

        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn row_major_product_indexing() {
        // In K3 □ K3, vertex (a, x) = 3a + x; (0,0) ~ (0,1) and (0,0) ~ (1,0).
        let k3 = complete(3).unwrap();
        let rook = cartesian_product(&k3, &k3).unwrap();
        assert!(rook.has_edge(0, 1));
        assert!(rook.has_edge(0, 3));
        assert!(!rook.has_edge(0, 4));
    }

    #[test]
    fn union_and_cone_conventions() {
        let k3 = complete(3).unwrap();
        let two_k3 = disjoint_union(&k3, &k3).unwrap();
        assert_eq!(two_k3.vertex_count(), 6);
        assert!(two_k3.has_edge(3, 4) && !two_k3.has_edge(2, 3));

        let k22 = complete_bipartite(2, 2).unwrap();
        let coned = cone(&k22).unwrap();
        assert_eq!(coned.vertex_count(), 5);
        assert_eq!(coned.degree(4), 4);
        // Coning preserves the number of 2-DISes.
        assert_eq!(count_kdis(&coned, 2).unwrap(), count_kdis(&k22, 2).unwrap());

        let empty = Graph::empty(0).unwrap();
        let same = disjoint_union(&k3, &empty).unwrap();
        assert_eq!(same, k3);
    }

    #[test]
    fn pruefer_examples() {
        let g = pruefer_tree(&[0]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);

        let g = pruefer_tree(&[0, 0]).unwrap();
        assert_eq!(g.degree(0), 3); // K_{1,3} centered at 0

        let g = pruefer_tree(&[1, 2]).unwrap();
        // Path 0 - 1 - 2 - 3.
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        assert!(matches!(
            pruefer_tree(&[7]),
            Err(GeneratorError::PruferLabel { label: 7, n: 3 })
        ));
    }

    #[test]
    fn pruefer_n2_is_single_edge() {
        let g = pruefer_tree(&[]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn pruefer_pointer_sweep_matches_heap_reference() {
        fn heap_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
            use std::cmp::Reverse;
            use std::collections::BinaryHeap;
            let mut deg = vec![1u32; n];
            for &s in seq {
                deg[s] += 1;
            }
            let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
                .filter(|&v| deg[v] == 1)
                .map(Reverse)
                .collect();
            let mut edges = Vec::new();
            for &s in seq {
                let Reverse(u) = leaves.pop().unwrap();
                deg[s] -= 1;
                edges.push((u, s));
                if deg[s] == 1 {
                    leaves.push(Reverse(s));
                }
            }
            let Reverse(u) = leaves.pop().unwrap();
            let Reverse(v) = leaves.pop().unwrap();
            edges.push((u, v));
            edges
        }
        let mut edges = Vec::new();
        for n in 3..=6usize {
            let total: usize = n.pow(n as u32 - 2);
            for rank in 0..total {
                let mut seq = vec![0usize; n - 2];
                let mut r = rank;
                for slot in seq.iter_mut() {
                    *slot = r % n;
                    r /= n;
                }
                pruefer_decode_into(&seq, n, &mut edges);
                let expect = heap_decode(&seq, n);
                let norm = |mut e: Vec<(usize, usize)>| {
                    for p in e.iter_mut() {
                        *p = (p.0.min(p.1), p.0.max(p.1));
                    }
                    e.sort();
                    e
                };
                assert_eq!(norm(edges.clone()), norm(expect), "seq {seq:?}");
            }
        }
    }

    #[test]
    fn assembly_examples() {
        // Two stars t = (2,2), one leaf pair identified: 5 vertices, merged
        // leaves form a 2-DIS.
        let (g, leaves) = construction1_assemble(
            &[StarSpec { leaves: 2 }, StarSpec { leaves: 2 }],
            &[((0, 1), (1, 0))],
            &[],
            2,
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(leaves.len(), 3);

        // A single star with t = k.
        let (g, leaves) = construction1_assemble(&[StarSpec { leaves: 3 }], &[], &[], 3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(leaves.len(), 3);

        // Two stars joined by a center edge.
        let (g, leaves) = construction1_assemble(
            &[StarSpec { leaves: 2 }, StarSpec { leaves: 2 }],
            &[],
            &[(0, 1)],
            2,
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(leaves.len(), 4);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn assembly_rejects_bad_input() {
        assert!(matches!(
            construction1_assemble(&[StarSpec { leaves: 1 }], &[], &[], 2),
            Err(GeneratorError::StarTooSmall { .. })
        ));
        assert!(matches!(
            construction1_assemble(
                &[StarSpec { leaves: 2 }, StarSpec { leaves: 2 }],
                &[((0, 0), (0, 1))],
                &[],
                2
            ),
            Err(GeneratorError::IdentificationSameStar { star: 0 })
        ));
        // Transitive merge of two leaves of star 0 through star 1.
        assert!(matches!(
            construction1_assemble(
                &[StarSpec { leaves: 2 }, StarSpec { leaves: 2 }],
                &[((0, 0), (1, 0)), ((1, 0), (0, 1))],
                &[],
                2
            ),
            Err(GeneratorError::IdentificationSameStar { star: 0 })
        ));
    }

    #[test]
    fn bipartite_and_turan_kdis_counts() {
        for t in 1..=6 {
            let g = complete_bipartite(t, t).unwrap();
            for k in 1..=t {
                assert_eq!(count_kdis(&g, k).unwrap(), 2, "K_{{{t},{t}}}, k={k}");
            }
        }
        for p in 2..=3 {
            let g = turan(p * p, p).unwrap();
            for k in 1..=p {
                assert_eq!(count_kdis(&g, k).unwrap(), p as u128);
            }
        }
    }

    #[test]
    fn petersen_fixed_element_families() {
        let g = kneser(5, 2).unwrap();
        let subsets = kneser_vertex_subsets(5, 2);
        for element in 0..5 {
            let family = VertexSet::from_iter(
                (0..subsets.len()).filter(|&v| subsets[v].contains(&element)),
            );
            assert_eq!(family.len(), 4);
            assert!(is_kdis(&g, &family, 2), "family of element {element}");
        }
        // The exact census: the five families are the only 2-DISes.
        assert_eq!(enumerate_kdis(&g, 2).unwrap().len(), 5);
    }

    #[test]
    fn moon_moser_union() {
        let k3 = complete(3).unwrap();
        let g = disjoint_union(&k3, &k3).unwrap();
        assert_eq!(count_kdis(&g, 1).unwrap(), 9);
    }

    #[test]
    fn expression_language() {
        assert_eq!(parse_graph_expr("K5").unwrap(), complete(5).unwrap());
        assert_eq!(
            parse_graph_expr("Kb(3,3)").unwrap(),
            complete_bipartite(3, 3).unwrap()
        );
        assert_eq!(parse_graph_expr("turan(9,3)").unwrap(), turan(9, 3).unwrap());
        assert_eq!(parse_graph_expr("kneser(5,2)").unwrap(), kneser(5, 2).unwrap());
        let k3 = complete(3).unwrap();
        assert_eq!(
            parse_graph_expr("cart(K3, K3)").unwrap(),
            cartesian_product(&k3, &k3).unwrap()
        );
        assert_eq!(parse_graph_expr("pow(K3,4)").unwrap(), power(&k3, 4).unwrap());
        assert_eq!(
            parse_graph_expr(" union( K3 , cone(K2) ) ").unwrap(),
            disjoint_union(&k3, &cone(&complete(2).unwrap()).unwrap()).unwrap()
        );
        assert_eq!(parse_graph_expr("path(7)").unwrap(), path(7).unwrap());
        assert_eq!(parse_graph_expr("cycle(5)").unwrap(), cycle(5).unwrap());
        assert_eq!(parse_graph_expr("star(4)").unwrap(), star(4).unwrap());
        assert_eq!(
            parse_graph_expr("multi(2,2,2)").unwrap(),
            complete_multipartite(&[2, 2, 2]).unwrap()
        );

        assert!(parse_graph_expr("frob(3)").is_err());
        assert!(parse_graph_expr("K5 junk").is_err());
        assert!(parse_graph_expr("cart(K3)").is_err());
        assert!(parse_graph_expr("pow(K3,999)").is_err());
    }
}
