//! Decision, enumeration and counting of k-dominating independent sets.
//!
//! A set `D` is a k-DIS when it induces no edge and every vertex outside `D`
//! has at least `k` neighbors inside `D`. The worker here is a
//! branch-and-bound over vertex decisions with unit propagation; a subset-scan
//! brute force serves as the independent oracle for small graphs.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("k must be at least 1")]
    KZero,
    #[error("brute force subset scan is limited to n <= {max}, got n = {n}")]
    BruteForceTooLarge { n: usize, max: usize },
    #[error("set is not a {k}-dominating independent set")]
    NotAKdis { k: usize },
}

/// True iff `s` induces no edge of `g`.
pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// True iff every vertex outside `s` has at least `k` neighbors in `s`.
pub fn is_k_dominating(g: &Graph, s: &VertexSet, k: usize) -> bool {
    (0..g.vertex_count())
        .filter(|&v| !s.contains(v))
        .all(|v| g.neighbors(v).intersection_len(s) >= k)
}

/// True iff `s` is a k-dominating independent set of `g`.
pub fn is_kdis(g: &Graph, s: &VertexSet, k: usize) -> bool {
    is_independent(g, s) && is_k_dominating(g, s, k)
}

struct Searcher<'a> {
    g: &'a Graph,
    k: usize,
    full: VertexSet,
}

enum NodeOutcome {
    Dead,
    Leaf,
    Branch(usize),
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Searcher {
            g,
            k,
            full: VertexSet::full(g.vertex_count()),
        }
    }

    /// Runs unit propagation until fixpoint.
    ///
    /// State: `in_d` are chosen vertices, `undecided` the open ones; everything
    /// else is excluded. Invariant: no undecided vertex is adjacent to `in_d`
    /// (neighbors are excluded the moment a vertex enters `in_d`), so the
    /// potential dominator pool of any vertex v outside `in_d` is
    /// `N(v) ∩ (in_d ∪ undecided)`.
    ///
    /// `needy` tracks excluded vertices not yet known to have k dominators in
    /// `in_d`; it only ever shrinks along a search path.
    fn propagate(
        &self,
        in_d: &mut VertexSet,
        undecided: &mut VertexSet,
        needy: &mut VertexSet,
    ) -> NodeOutcome {
        loop {
            let mut changed = false;
            // A vertex that cannot collect k dominators if left outside D is
            // forced inside.
            let snapshot = *undecided;
            for v in snapshot.iter() {
                if !undecided.contains(v) {
                    continue; // excluded by an earlier forcing in this pass
                }
                if self.g.neighbors(v).intersection_len(undecided) < self.k {
                    debug_assert!(!self.g.neighbors(v).intersects(in_d));
                    in_d.insert(v);
                    undecided.remove(v);
                    let newly_excluded = self.g.neighbors(v).intersection(undecided);
                    *undecided = undecided.difference(&newly_excluded);
                    *needy = needy.union(&newly_excluded);
                    changed = true;
                }
            }
            // Excluded vertices must still be able to reach k dominators.
            let snapshot = *needy;
            for v in snapshot.iter() {
                if !needy.contains(v) {
                    continue;
                }
                let have = self.g.neighbors(v).intersection_len(in_d);
                if have >= self.k {
                    needy.remove(v);
                    continue;
                }
                let open = self.g.neighbors(v).intersection(undecided);
                let potential = open.len();
                if have + potential < self.k {
                    return NodeOutcome::Dead;
                }
                if have + potential == self.k {
                    // Every open neighbor is required; force them in one at a
                    // time (forcing may exclude one of the others, which the
                    // next pass will catch as Dead).
                    if let Some(u) = open.first() {
                        debug_assert!(undecided.contains(u));
                        in_d.insert(u);
                        undecided.remove(u);
                        let newly_excluded = self.g.neighbors(u).intersection(undecided);
                        *undecided = undecided.difference(&newly_excluded);
                        *needy = needy.union(&newly_excluded);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if undecided.is_empty() {
            debug_assert!(needy
                .iter()
                .all(|v| self.g.neighbors(v).intersection_len(in_d) >= self.k));
            NodeOutcome::Leaf
        } else {
            // Branch on an undecided vertex of minimum remaining degree.
            let v = undecided
                .iter()
                .min_by_key(|&v| (self.g.neighbors(v).intersection_len(undecided), v))
                .unwrap();
            NodeOutcome::Branch(v)
        }
    }

    fn run<F: FnMut(&VertexSet)>(
        &self,
        mut in_d: VertexSet,
        mut undecided: VertexSet,
        mut needy: VertexSet,
        emit: &mut F,
    ) {
        match self.propagate(&mut in_d, &mut undecided, &mut needy) {
            NodeOutcome::Dead => {}
            NodeOutcome::Leaf => emit(&in_d),
            NodeOutcome::Branch(v) => {
                // v ∈ D
                {
                    let mut in_d2 = in_d;
                    let mut undecided2 = undecided;
                    let mut needy2 = needy;
                    in_d2.insert(v);
                    undecided2.remove(v);
                    let newly_excluded = self.g.neighbors(v).intersection(&undecided2);
                    undecided2 = undecided2.difference(&newly_excluded);
                    needy2 = needy2.union(&newly_excluded);
                    self.run(in_d2, undecided2, needy2, emit);
                }
                // v ∉ D
                {
                    let mut undecided2 = undecided;
                    undecided2.remove(v);
                    let mut needy2 = needy;
                    needy2.insert(v);
                    self.run(in_d, undecided2, needy2, emit);
                }
            }
        }
    }

    fn search<F: FnMut(&VertexSet)>(&self, emit: &mut F) {
        self.run(VertexSet::EMPTY, self.full, VertexSet::EMPTY, emit);
    }
}

/// All k-DISes of `g`, sorted lexicographically by ascending vertex list.
pub fn enumerate_kdis(g: &Graph, k: usize) -> Result<Vec<VertexSet>, SearchError> {
    if k == 0 {
        return Err(SearchError::KZero);
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    let searcher = Searcher::new(g, k);
    searcher.search(&mut |s: &VertexSet| {
        debug_assert!(is_kdis(g, s, k));
        found.push(s.to_vec());
    });
    found.sort();
    Ok(found.into_iter().map(VertexSet::from_iter).collect())
}

/// Number of k-DISes of `g`.
///
/// Accumulates in 128 bits; panics if the count would overflow (unreachable
/// at the graph sizes supported here).
pub fn count_kdis(g: &Graph, k: usize) -> Result<u128, SearchError> {
    if k == 0 {
        return Err(SearchError::KZero);
    }
    let mut count: u128 = 0;
    let searcher = Searcher::new(g, k);
    searcher.search(&mut |_| {
        count = count.checked_add(1).expect("k-DIS count overflowed u128");
    });
    Ok(count)
}

/// Largest n accepted by [`count_kdis_bruteforce`].
pub const BRUTE_FORCE_MAX_N: usize = 25;

/// Counts k-DISes by scanning all 2^n subsets. Oracle for the search path.
pub fn count_kdis_bruteforce(g: &Graph, k: usize) -> Result<u128, SearchError> {
    if k == 0 {
        return Err(SearchError::KZero);
    }
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_N {
        return Err(SearchError::BruteForceTooLarge {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    // Single-word masks; n <= 25 keeps the scan under 2^25 subsets.
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | (1 << u)))
        .collect();
    let mut count: u128 = 0;
    'subsets: for s in 0u32..(1u32 << n) {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & s != 0 {
                continue 'subsets; // induced edge
            }
        }
        let mut outside = !s & ((1u32 << n) - 1);
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if (adj[v] & s).count_ones() < k as u32 {
                continue 'subsets;
            }
        }
        count += 1;
    }
    Ok(count)
}

/// Size of a maximum independent set (the independence number).
pub fn max_independent_set_size(g: &Graph) -> usize {
    fn rec(g: &Graph, candidates: VertexSet, depth: usize, best: &mut usize) {
        let remaining = candidates.len();
        if depth + remaining <= *best {
            return;
        }
        let Some(v) = candidates
            .iter()
            .max_by_key(|&v| g.neighbors(v).intersection_len(&candidates))
        else {
            *best = (*best).max(depth);
            return;
        };
        // Take v...
        let mut without_nv = candidates;
        without_nv.remove(v);
        rec(
            g,
            without_nv.difference(g.neighbors(v)),
            depth + 1,
            best,
        );
        // ...or skip it.
        rec(g, without_nv, depth, best);
    }
    let mut best = 0;
    rec(g, VertexSet::full(g.vertex_count()), 0, &mut best);
    best
}

/// The star decomposition certificate of a k-DIS: for each vertex outside `d`,
/// the star whose center it is and whose leaves are its neighbors inside `d`.
///
/// Every leaf set has size >= k, and the leaf sets jointly cover exactly the
/// `d`-endpoints of edges between `d` and its complement.
pub fn star_witness(
    g: &Graph,
    d: &VertexSet,
    k: usize,
) -> Result<Vec<(usize, VertexSet)>, SearchError> {
    if k == 0 {
        return Err(SearchError::KZero);
    }
    g.validate_set(d)?;
    if !is_kdis(g, d, k) {
        return Err(SearchError::NotAKdis { k });
    }
    let stars: Vec<(usize, VertexSet)> = (0..g.vertex_count())
        .filter(|&v| !d.contains(v))
        .map(|v| (v, g.neighbors(v).intersection(d)))
        .collect();
    debug_assert!(stars.iter().all(|(_, leaves)| leaves.len() >= k));
    Ok(stars)
}
