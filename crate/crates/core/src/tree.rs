//! Finds the unique k-dominating independent set of a forest (k >= 2), or
//! certifies that none exists, in near-linear time.
//!
//! The solver repeatedly picks a leaf-neighbor `q` with at most one neighbor
//! outside the leaf set. Leaves adjacent to `q` are forced into the solution
//! and `q` out of it; when `q` is one dominator short, its single non-leaf
//! neighbor is split into one copy per remaining edge so that the copies
//! (which are leaves) carry the pending domination obligation. Copies map
//! back to their original vertex, so the returned set lives on the input
//! forest.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeSolveError {
    #[error("input is not a forest; cycle: {cycle:?}")]
    NotAForest { cycle: Vec<usize> },
    #[error("edge ({u}, {v}) has an endpoint out of range (n = {n})")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("k = 1 asks for maximal independent sets, which trees have many of; this solver requires k >= 2 (use the enumeration path for k = 1)")]
    KTooSmall,
}

/// Verifies acyclicity; on failure returns the vertices of a cycle.
fn check_forest(n: usize, edges: &[(usize, usize)]) -> Result<(), TreeSolveError> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(TreeSolveError::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            return Err(TreeSolveError::NotAForest { cycle: vec![u] });
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            // Closing edge of a cycle: walk the existing forest from u to v.
            let mut prev = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([u]);
            prev[u] = u;
            while let Some(x) = queue.pop_front() {
                if x == v {
                    break;
                }
                for &y in &adj[x] {
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            let mut cycle = vec![v];
            let mut x = v;
            while x != u {
                x = prev[x];
                cycle.push(x);
            }
            cycle.reverse();
            return Err(TreeSolveError::NotAForest { cycle });
        }
        parent[ru] = rv;
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(())
}

/// Mutable working forest. Edges carry their endpoints so that splitting a
/// vertex into copies re-points edges without touching the other endpoint's
/// incidence list.
struct Workspace {
    ends: Vec<[usize; 2]>,
    edge_alive: Vec<bool>,
    inc: Vec<Vec<usize>>,
    alive: Vec<bool>,
    deg: Vec<u32>,
    leaf_nbr: Vec<u32>,
    origin: Vec<usize>,
    alive_count: usize,
    queue: BinaryHeap<Reverse<usize>>,
}

impl Workspace {
    fn eligible(&self, v: usize) -> bool {
        self.alive[v]
            && self.deg[v] >= 2
            && self.leaf_nbr[v] >= 1
            && self.deg[v] - self.leaf_nbr[v] <= 1
    }

    fn push_if_eligible(&mut self, v: usize) {
        if self.eligible(v) {
            self.queue.push(Reverse(v));
        }
    }

    fn alive_neighbors(&self, v: usize) -> Vec<(usize, usize)> {
        self.inc[v]
            .iter()
            .filter(|&&e| self.edge_alive[e])
            .map(|&e| {
                let w = if self.ends[e][0] == v {
                    self.ends[e][1]
                } else {
                    self.ends[e][0]
                };
                (e, w)
            })
            .collect()
    }

    /// Kills the edge towards `u` coming from a dying vertex and updates
    /// `u`'s degree and, if `u` just became a leaf, its neighbor's leaf count.
    fn drop_edge_to(&mut self, e: usize, u: usize) {
        self.edge_alive[e] = false;
        self.deg[u] -= 1;
        self.push_if_eligible(u);
        if self.deg[u] == 1 {
            // u turned into a leaf; tell its remaining neighbor.
            if let Some(&(_, w)) = self.alive_neighbors(u).first() {
                self.leaf_nbr[w] += 1;
                self.push_if_eligible(w);
            }
        }
    }
}

/// Runs the solver on a forest given as an edge list. Returns the unique
/// k-DIS as sorted original vertex indices, or `None` when no k-DIS exists.
pub fn solve_forest_kdis(
    n: usize,
    edges: &[(usize, usize)],
    k: usize,
) -> Result<Option<Vec<usize>>, TreeSolveError> {
    if k < 2 {
        return Err(TreeSolveError::KTooSmall);
    }
    check_forest(n, edges)?;

    let mut ws = Workspace {
        ends: edges.iter().map(|&(u, v)| [u, v]).collect(),
        edge_alive: vec![true; edges.len()],
        inc: vec![Vec::new(); n],
        alive: vec![true; n],
        deg: vec![0; n],
        leaf_nbr: vec![0; n],
        origin: (0..n).collect(),
        alive_count: n,
        queue: BinaryHeap::new(),
    };
    for (e, &(u, v)) in edges.iter().enumerate() {
        ws.inc[u].push(e);
        ws.inc[v].push(e);
        ws.deg[u] += 1;
        ws.deg[v] += 1;
    }

    let mut in_d = vec![false; n];
    let mut in_d_prime = vec![false; n];

    // Isolated vertices can only be dominated by themselves.
    for (v, chosen) in in_d.iter_mut().enumerate() {
        if ws.deg[v] == 0 {
            *chosen = true;
            ws.alive[v] = false;
            ws.alive_count -= 1;
        }
    }
    for (e, &(u, v)) in edges.iter().enumerate() {
        debug_assert!(ws.edge_alive[e]);
        if ws.deg[u] == 1 {
            ws.leaf_nbr[v] += 1;
        }
        if ws.deg[v] == 1 {
            ws.leaf_nbr[u] += 1;
        }
    }
    for v in 0..n {
        ws.push_if_eligible(v);
    }

    while let Some(Reverse(q)) = ws.queue.pop() {
        if !ws.eligible(q) {
            continue; // stale entry
        }
        let nbrs = ws.alive_neighbors(q);
        let leaves: Vec<(usize, usize)> = nbrs
            .iter()
            .copied()
            .filter(|&(_, w)| ws.deg[w] == 1)
            .collect();
        let others: Vec<(usize, usize)> = nbrs
            .iter()
            .copied()
            .filter(|&(_, w)| ws.deg[w] != 1)
            .collect();
        let c = leaves.len();
        debug_assert_eq!(c as u32, ws.leaf_nbr[q]);
        debug_assert!(others.len() <= 1);

        let progresses = c >= k || (c == k - 1 && others.len() == 1);
        if !progresses {
            // q is adjacent to a leaf, so it cannot join the set; but its
            // dominator supply (leaf neighbors plus at most one other) is
            // short of k.
            return Ok(None);
        }

        in_d_prime[ws.origin[q]] = true;
        for &(e, x) in &leaves {
            in_d[ws.origin[x]] = true;
            ws.alive[x] = false;
            ws.edge_alive[e] = false;
        }
        ws.alive[q] = false;
        ws.alive_count -= 1 + c;
        if let Some(&(e, u)) = others.first() {
            ws.drop_edge_to(e, u);
            if c == k - 1 {
                // q still needs one dominator: u (through its copies) must
                // end up in the set. Split u into one leaf copy per
                // remaining edge; a copy, being a leaf, is forced into the
                // set later and records origin[u].
                if ws.deg[u] >= 2 {
                    let u_edges: Vec<(usize, usize)> = ws.alive_neighbors(u);
                    ws.alive[u] = false;
                    ws.alive_count -= 1;
                    for &(e, w) in &u_edges {
                        let copy = ws.alive.len();
                        ws.alive.push(true);
                        ws.deg.push(1);
                        ws.leaf_nbr.push(0);
                        ws.origin.push(ws.origin[u]);
                        ws.inc.push(vec![e]);
                        if ws.ends[e][0] == u {
                            ws.ends[e][0] = copy;
                        } else {
                            ws.ends[e][1] = copy;
                        }
                        ws.alive_count += 1;
                        debug_assert_eq!(ws.deg[copy], 1, "copies must be leaves");
                        // w sees a leaf copy where the non-leaf u used to be.
                        ws.leaf_nbr[w] += 1;
                        ws.push_if_eligible(w);
                    }
                }
                // deg[u] == 1: u is already a leaf; splitting one edge is a
                // relabeling, so keep u as its own "copy".
            }
        }
    }

    if ws.alive_count > 0 {
        // No eligible vertex remains, so every alive component has an empty
        // leaf-neighbor set; such components are single edges, which admit no
        // k-DIS for k >= 2.
        debug_assert!((0..ws.alive.len()).all(|v| !ws.eligible(v)));
        return Ok(None);
    }

    debug_assert!((0..n).all(|v| !(in_d[v] && in_d_prime[v])));
    Ok(Some((0..n).filter(|&v| in_d[v]).collect()))
}

/// Convenience wrapper over [`solve_forest_kdis`] for graphs within the
/// library vertex cap.
pub fn solve_tree_kdis(g: &Graph, k: usize) -> Result<Option<VertexSet>, TreeSolveError> {
    let res = solve_forest_kdis(g.vertex_count(), &g.edges(), k)?;
    Ok(res.map(VertexSet::from_iter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::search::{enumerate_kdis, is_kdis};

    #[test]
    fn star_leaves_form_the_kdis() {
        let g = generators::star(3).unwrap();
        let d = solve_tree_kdis(&g, 2).unwrap().unwrap();
        assert_eq!(d.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn p4_has_none_p5_has_endpoints_and_center() {
        let p4 = generators::path(4).unwrap();
        assert_eq!(solve_tree_kdis(&p4, 2).unwrap(), None);

        let p5 = generators::path(5).unwrap();
        let d = solve_tree_kdis(&p5, 2).unwrap().unwrap();
        assert_eq!(d.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn isolated_vertices_join_the_set() {
        assert_eq!(solve_forest_kdis(1, &[], 2).unwrap(), Some(vec![0]));
        assert_eq!(solve_forest_kdis(0, &[], 2).unwrap(), Some(vec![]));
        // A star plus two isolated vertices.
        let d = solve_forest_kdis(6, &[(0, 1), (0, 2)], 2).unwrap().unwrap();
        assert_eq!(d, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn single_edge_has_no_kdis() {
        assert_eq!(solve_forest_kdis(2, &[(0, 1)], 2).unwrap(), None);
    }

    #[test]
    fn rejects_k_one_and_cycles() {
        let p3 = generators::path(3).unwrap();
        assert_eq!(solve_tree_kdis(&p3, 1), Err(TreeSolveError::KTooSmall));

        let c5 = generators::cycle(5).unwrap();
        match solve_tree_kdis(&c5, 2) {
            Err(TreeSolveError::NotAForest { cycle }) => {
                assert_eq!(cycle.len(), 5);
                // Consecutive certificate vertices are adjacent, and the ends
                // close up.
                for w in cycle.windows(2) {
                    assert!(c5.has_edge(w[0], w[1]));
                }
                assert!(c5.has_edge(cycle[0], *cycle.last().unwrap()));
            }
            other => panic!("expected cycle certificate, got {other:?}"),
        }
    }

    #[test]
    fn duplication_cascade_examples() {
        // Spider with legs 2,2,1 from the center has no 2-DIS.
        let broom = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(solve_tree_kdis(&broom, 2).unwrap(), None);

        // Two P5s sharing structure through a forest: both solvable parts.
        let forest = solve_forest_kdis(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
            ],
            2,
        )
        .unwrap()
        .unwrap();
        assert_eq!(forest, vec![0, 2, 4, 5, 7, 9]);
    }

    #[test]
    fn agrees_with_enumeration_on_all_small_trees() {
        // Exhaustive over labeled trees on up to 7 vertices, k in {2, 3}.
        let mut edges = Vec::new();
        for n in 2..=7usize {
            let total: usize = n.pow(n as u32 - 2);
            for rank in 0..total {
                let mut seq = vec![0usize; n - 2];
                let mut r = rank;
                for slot in seq.iter_mut() {
                    *slot = r % n;
                    r /= n;
                }
                generators::pruefer_decode_into(&seq, n, &mut edges);
                let g = Graph::from_edges(n, &edges).unwrap();
                for k in 2..=3usize {
                    let enumerated = enumerate_kdis(&g, k).unwrap();
                    assert!(enumerated.len() <= 1, "tree with two {k}-DISes: {g:?}");
                    let solved = solve_tree_kdis(&g, k).unwrap();
                    match (&solved, enumerated.first()) {
                        (Some(a), Some(b)) => assert_eq!(a, b, "{g:?} k={k}"),
                        (None, None) => {}
                        _ => panic!("solver/enumeration mismatch on {g:?}, k={k}"),
                    }
                    if let Some(d) = solved {
                        assert!(is_kdis(&g, &d, k));
                    }
                }
            }
        }
    }

    #[test]
    fn no_quadratic_blowup_on_long_paths_and_large_random_trees() {
        use std::time::Instant;

        fn random_tree_edges(n: usize, seed: u64) -> Vec<(usize, usize)> {
            // Random attachment: vertex v attaches to a uniform earlier vertex.
            let mut state = seed | 1;
            let mut edges = Vec::with_capacity(n - 1);
            for v in 1..n {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                edges.push(((state as usize) % v, v));
            }
            edges
        }

        let time_solve = |n: usize| {
            let edges = random_tree_edges(n, 0x5eed);
            let start = Instant::now();
            let res = solve_forest_kdis(n, &edges, 2).unwrap();
            let elapsed = start.elapsed();
            (res, elapsed)
        };
        let (_, small) = time_solve(100_000);
        let (_, large) = time_solve(1_000_000);
        // 10x the input should stay within ~linear growth; allow generous
        // noise headroom before calling it quadratic.
        assert!(
            large < small * 40 + std::time::Duration::from_millis(200),
            "10^5: {small:?}, 10^6: {large:?}"
        );
    }
}
