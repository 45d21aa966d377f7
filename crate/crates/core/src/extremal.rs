//! Exhaustive extremal search over all labeled graphs (and labeled trees) of
//! small order, the growth-rate constants of the k-DIS counting function, and
//! the random-graph expectation of the number of size-t k-DISes.
//!
//! The labeled scans are sharded over contiguous ranges of the edge-mask (or
//! Prüfer-rank) space; the merged report is independent of the shard count
//! and of scheduling.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::generators::pruefer_decode_into;
use crate::graph::{graph6_encode, Graph};
use crate::search;

#[derive(Debug, Error)]
pub enum ExtremalError {
    #[error("exhaustive scan over all graphs supports n <= {max}, got n = {n}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("n = 9 scans 2^36 graphs and must be explicitly enabled")]
    HeavyRunNotEnabled,
    #[error("tree scan supports 2 <= n <= 9, got n = {n}")]
    TreeOrderOutOfRange { n: usize },
    #[error("k must be at least 1")]
    KZero,
    #[error("parameters out of range: {msg}")]
    BadParams { msg: String },
    #[error("no sign change of the polynomial on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("checkpoint I/O: {0}")]
    Checkpoint(#[from] std::io::Error),
}

/// Outcome of an exhaustive scan.
///
/// Serializes to `{n, k, max, witnesses, scanned, seconds}`; `witnesses` are
/// graph6 strings of the first attaining graphs in scan order, capped.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub n: u32,
    pub k: u32,
    pub max: u64,
    pub witnesses: Vec<String>,
    pub scanned: u64,
    pub seconds: f64,
}

/// Options for the labeled-graph and labeled-tree scans.
#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Number of contiguous shards the index space is split into. The result
    /// is shard-count independent; shards only bound parallelism.
    pub shards: usize,
    /// Opt-in for the n = 9 graph scan (2^36 graphs).
    pub allow_heavy: bool,
    /// Resumable checkpoint for heavy runs: one line `shard_id max_in_shard`
    /// per completed shard. Witnesses of shards completed in an earlier run
    /// are not reconstructed on resume.
    pub checkpoint: Option<PathBuf>,
    /// Restrict the scan to connected graphs.
    pub connected_only: bool,
    /// Maximum number of witnesses kept in the report.
    pub witness_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            shards: 1,
            allow_heavy: false,
            checkpoint: None,
            connected_only: false,
            witness_cap: 100,
        }
    }
}

/// Largest order accepted without the heavy-run opt-in.
pub const SCAN_MAX_N: usize = 8;
/// Absolute largest order of the labeled-graph scan.
pub const SCAN_HARD_MAX_N: usize = 9;

/// Edge order of the scan bit-space: bit b of a graph mask corresponds to
/// `SCAN_PAIRS(n)[b]`, the upper-triangle pairs in column-major order
/// (matching graph6 bit order).
fn scan_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Counts k-DISes of a graph given as per-vertex adjacency masks (n <= 9 fits
/// in u16 masks and keeps the recursion word-sized).
///
/// Exposed so bulk scans and tests can bypass the general searcher; equality
/// with [`search::count_kdis`] is covered by the property suite.
pub fn count_kdis_masks(adj: &[u16], k: usize) -> u64 {
    let n = adj.len();
    debug_assert!(n <= 16);
    let full: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let k = k as u32;
    // A vertex of degree < k cannot be k-dominated from outside, so it lies
    // in every k-DIS; two adjacent such vertices rule out any k-DIS.
    let mut forced: u16 = 0;
    for (v, &row) in adj.iter().enumerate() {
        if row.count_ones() < k {
            forced |= 1 << v;
        }
    }
    let mut forced_nbrs: u16 = 0;
    {
        let mut rest = forced;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & forced != 0 {
                return 0;
            }
            forced_nbrs |= adj[v];
        }
    }

    fn rec(adj: &[u16], full: u16, k: u32, chosen: u16, cands: u16) -> u64 {
        let Some(v) = (cands != 0).then(|| cands.trailing_zeros() as usize) else {
            // Leaf: verify domination of everything outside.
            let mut outside = full & !chosen;
            while outside != 0 {
                let u = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                if (adj[u] & chosen).count_ones() < k {
                    return 0;
                }
            }
            return 1;
        };
        let without = cands & !(1u16 << v);
        // Include v (its neighbors leave the candidate pool)...
        let mut total = rec(adj, full, k, chosen | (1 << v), without & !adj[v]);
        // ...or exclude it, while it can still reach k dominators.
        if (adj[v] & without).count_ones() >= k {
            total += rec(adj, full, k, chosen, without);
        }
        total
    }
    rec(adj, full, k, forced, full & !forced & !forced_nbrs)
}

fn is_connected_masks(adj: &[u16], n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    let full: u16 = (1u16 << n) - 1;
    let mut visited: u16 = 1;
    loop {
        let mut frontier = 0u16;
        let mut rest = visited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            frontier |= adj[v];
        }
        let grown = visited | frontier;
        if grown == visited {
            return visited == full;
        }
        visited = grown;
    }
}

struct ShardResult {
    shard: usize,
    max: u64,
    witnesses: Vec<u64>, // graph masks attaining max, ascending, capped
    scanned: u64,
}

fn scan_shard(
    n: usize,
    k: usize,
    pairs: &[(usize, usize)],
    (lo, hi): (u64, u64),
    shard: usize,
    opts: &ScanOptions,
) -> ShardResult {
    let mut adj = [0u16; 16];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if (lo >> b) & 1 != 0 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut max = 0u64;
    let mut witnesses: Vec<u64> = Vec::new();
    let mut mask = lo;
    loop {
        if !opts.connected_only || is_connected_masks(&adj, n) {
            let count = count_kdis_masks(&adj[..n], k);
            if count > max {
                max = count;
                witnesses.clear();
                witnesses.push(mask);
            } else if count == max && witnesses.len() < opts.witness_cap {
                witnesses.push(mask);
            }
        }
        if mask + 1 == hi {
            break;
        }
        // Step to the next mask, toggling exactly the bits that differ.
        let mut diff = mask ^ (mask + 1);
        while diff != 0 {
            let b = diff.trailing_zeros() as usize;
            diff &= diff - 1;
            let (i, j) = pairs[b];
            adj[i] ^= 1 << j;
            adj[j] ^= 1 << i;
        }
        mask += 1;
    }
    ShardResult {
        shard,
        max,
        witnesses,
        scanned: hi - lo,
    }
}

fn mask_to_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(b, _)| (mask >> b) & 1 != 0)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edges(n, &edges).expect("scan masks are valid graphs")
}

fn shard_ranges(total: u64, shards: usize) -> Vec<(u64, u64)> {
    let shards = shards.max(1) as u64;
    let step = total.div_ceil(shards);
    (0..shards)
        .map(|s| (s * step, ((s + 1) * step).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn load_checkpoint(path: &PathBuf) -> Result<Vec<(usize, u64)>, ExtremalError> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for line in fs::read_to_string(path)?.lines() {
        let mut it = line.split_whitespace();
        if let (Some(id), Some(max)) = (it.next(), it.next()) {
            if let (Ok(id), Ok(max)) = (id.parse(), max.parse()) {
                out.push((id, max));
            }
        }
    }
    Ok(out)
}

/// Exact maximum of the k-DIS count over all 2^C(n,2) labeled graphs on n
/// vertices. Witnesses are re-verified with the general counter on emission.
pub fn max_kdis_count(n: usize, k: usize, opts: &ScanOptions) -> Result<SearchReport, ExtremalError> {
    if k == 0 {
        return Err(ExtremalError::KZero);
    }
    if n > SCAN_HARD_MAX_N {
        return Err(ExtremalError::OrderTooLarge {
            n,
            max: SCAN_HARD_MAX_N,
        });
    }
    if n > SCAN_MAX_N && !opts.allow_heavy {
        return Err(ExtremalError::HeavyRunNotEnabled);
    }
    let start = Instant::now();
    let pairs = scan_pairs(n);
    let total: u64 = 1u64 << pairs.len();
    let ranges = shard_ranges(total, opts.shards);

    let done: Vec<(usize, u64)> = match &opts.checkpoint {
        Some(path) => load_checkpoint(path)?,
        None => Vec::new(),
    };
    let checkpoint_file = match &opts.checkpoint {
        Some(path) => Some(Mutex::new(
            fs::OpenOptions::new().create(true).append(true).open(path)?,
        )),
        None => None,
    };

    let fresh: Vec<ShardResult> = ranges
        .par_iter()
        .enumerate()
        .filter(|(s, _)| !done.iter().any(|&(id, _)| id == *s))
        .map(|(s, &range)| {
            let res = scan_shard(n, k, &pairs, range, s, opts);
            if let Some(file) = &checkpoint_file {
                let mut f = file.lock().unwrap();
                let _ = writeln!(f, "{} {}", res.shard, res.max);
            }
            res
        })
        .collect();

    // Merge: global max, then witnesses in ascending mask order (shards are
    // contiguous ascending ranges, so ordering by shard id suffices).
    let mut results: Vec<ShardResult> = fresh;
    results.sort_by_key(|r| r.shard);
    let mut max = done.iter().map(|&(_, m)| m).max().unwrap_or(0);
    for r in &results {
        max = max.max(r.max);
    }
    let scanned: u64 = results.iter().map(|r| r.scanned).sum();
    let mut witnesses = Vec::new();
    for r in &results {
        if r.max == max {
            for &mask in &r.witnesses {
                if witnesses.len() >= opts.witness_cap {
                    break;
                }
                let g = mask_to_graph(n, &pairs, mask);
                let recount = search::count_kdis(&g, k).expect("k >= 1");
                assert_eq!(recount as u64, max, "witness re-verification failed");
                witnesses.push(graph6_encode(&g));
            }
        }
    }
    Ok(SearchReport {
        n: n as u32,
        k: k as u32,
        max,
        witnesses,
        scanned,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Exact maximum of the k-DIS count over all n^(n-2) labeled trees on n
/// vertices (2 <= n <= 9), scanned through Prüfer sequences.
pub fn max_kdis_count_trees(
    n: usize,
    k: usize,
    opts: &ScanOptions,
) -> Result<SearchReport, ExtremalError> {
    if k == 0 {
        return Err(ExtremalError::KZero);
    }
    if !(2..=9).contains(&n) {
        return Err(ExtremalError::TreeOrderOutOfRange { n });
    }
    let start = Instant::now();
    let total: u64 = (n as u64).pow(n as u32 - 2);
    let ranges = shard_ranges(total, opts.shards);

    struct TreeShard {
        shard: usize,
        max: u64,
        ranks: Vec<u64>,
    }
    let results: Vec<TreeShard> = ranges
        .par_iter()
        .enumerate()
        .map(|(s, &(lo, hi))| {
            let mut seq = vec![0usize; n - 2];
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
            let mut max = 0u64;
            let mut ranks = Vec::new();
            for rank in lo..hi {
                let mut r = rank;
                for slot in seq.iter_mut() {
                    *slot = (r % n as u64) as usize;
                    r /= n as u64;
                }
                pruefer_decode_into(&seq, n, &mut edges);
                let mut adj = [0u16; 16];
                for &(u, v) in &edges {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                let count = count_kdis_masks(&adj[..n], k);
                if count > max {
                    max = count;
                    ranks.clear();
                    ranks.push(rank);
                } else if count == max && ranks.len() < opts.witness_cap {
                    ranks.push(rank);
                }
            }
            TreeShard {
                shard: s,
                max,
                ranks,
            }
        })
        .collect();

    let mut results = results;
    results.sort_by_key(|r| r.shard);
    let max = results.iter().map(|r| r.max).max().unwrap_or(0);
    let mut witnesses = Vec::new();
    let mut seq = vec![0usize; n - 2];
    let mut edges = Vec::with_capacity(n - 1);
    for r in &results {
        if r.max == max {
            for &rank in &r.ranks {
                if witnesses.len() >= opts.witness_cap {
                    break;
                }
                let mut rr = rank;
                for slot in seq.iter_mut() {
                    *slot = (rr % n as u64) as usize;
                    rr /= n as u64;
                }
                pruefer_decode_into(&seq, n, &mut edges);
                let g = Graph::from_edges(n, &edges).expect("tree edges are valid");
                let recount = search::count_kdis(&g, k).expect("k >= 1");
                assert_eq!(recount as u64, max, "tree witness re-verification failed");
                witnesses.push(graph6_encode(&g));
            }
        }
    }
    Ok(SearchReport {
        n: n as u32,
        k: k as u32,
        max,
        witnesses,
        scanned: total,
        seconds: start.elapsed().as_secs_f64(),
    })
}

// ---------------------------------------------------------------------------
// Growth-rate constants
// ---------------------------------------------------------------------------

/// The branching-bound base for k-DIS counting: the maximum over the minimum
/// degree d of ((k+d)/k)^(1/(d+1)), so that a graph with minimum degree d
/// loses d+1 vertices per factor (k+d)/k of the count.
///
/// For k = 2 the low-degree cases d <= 3 admit sharper recurrences (their
/// roots all lie below 3^(1/5)), so the generic branch binds only from d = 4
/// and the maximum is taken there; the resulting base is 3^(1/5). For other k
/// the maximum ranges over all d >= 1. The window [1, 8k+8] suffices because
/// the objective decreases in d from d = k on.
pub fn alpha_bound(k: usize) -> (f64, usize) {
    assert!(k >= 1);
    let d_lo = if k == 2 { 4 } else { 1 };
    let mut best = (f64::MIN, 0usize);
    for d in d_lo..=(8 * k + 8) {
        let val = ((k + d) as f64 / k as f64).powf(1.0 / (d + 1) as f64);
        if val > best.0 {
            best = (val, d);
        }
    }
    best
}

/// Bisection root finding on a bracket with a sign change; coefficients in
/// ascending degree order. The returned root satisfies |P(root)| < 1e-10 on
/// the polynomials used here.
pub fn poly_root(coeffs: &[f64], lo: f64, hi: f64) -> Result<f64, ExtremalError> {
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
    let (mut lo, mut hi) = (lo, hi);
    let (flo, fhi) = (eval(lo), eval(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(ExtremalError::NoSignChange { lo, hi });
    }
    let neg_at_lo = flo < 0.0;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        let fmid = eval(mid);
        if (fmid < 0.0) == neg_at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

/// Parameters of the G(n,p) model and the size-t k-DIS statistic.
#[derive(Debug, Clone)]
pub struct RandomModelParams {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub p: f64,
    pub samples: usize,
    pub seed: u64,
}

impl RandomModelParams {
    fn validate(&self) -> Result<(), ExtremalError> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(ExtremalError::BadParams {
                msg: format!("p = {} not in [0,1]", self.p),
            });
        }
        if self.t > self.n || self.k == 0 || self.k > self.t {
            return Err(ExtremalError::BadParams {
                msg: format!("need 1 <= k <= t <= n, got n={}, t={}, k={}", self.n, self.t, self.k),
            });
        }
        Ok(())
    }
}

fn binomial(n: usize, t: usize) -> f64 {
    if t > n {
        return 0.0;
    }
    let mut acc = 1f64;
    for i in 0..t.min(n - t) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Expected number of size-t k-DISes of G(n,p):
/// `C(n,t) (1-p)^C(t,2) (1 - Σ_{j<k} C(t,j) p^j (1-p)^(t-j))^(n-t)`.
///
/// The t chosen vertices must induce no edge; each of the other n-t vertices
/// must avoid having fewer than k neighbors among the chosen ones.
pub fn expected_kdis_count(params: &RandomModelParams) -> Result<f64, ExtremalError> {
    params.validate()?;
    let (n, t, k, p) = (params.n, params.t, params.k, params.p);
    let q = 1.0 - p;
    let no_inner_edge = q.powi((t * (t - 1) / 2) as i32);
    let mut under_dominated = 0.0;
    for j in 0..k {
        under_dominated += binomial(t, j) * p.powi(j as i32) * q.powi((t - j) as i32);
    }
    let per_outside = 1.0 - under_dominated;
    Ok(binomial(n, t) * no_inner_edge * per_outside.powi((n - t) as i32))
}

/// Samples G(n,p) with the given generator; edge (i,j), i < j, is drawn in
/// row-major pair order.
pub fn sample_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are valid")
}

/// Seeded, reproducible generator for all randomized operations: ChaCha12,
/// keyed by the 64-bit seed in the low word.
pub fn seeded_rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Monte Carlo estimate (mean, standard error) of the size-t k-DIS count in
/// G(n,p). Deterministic per seed.
pub fn monte_carlo_expected(params: &RandomModelParams) -> Result<(f64, f64), ExtremalError> {
    params.validate()?;
    if params.samples < 1000 {
        return Err(ExtremalError::BadParams {
            msg: format!("need at least 1000 samples, got {}", params.samples),
        });
    }
    let mut rng = seeded_rng(params.seed);
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for _ in 0..params.samples {
        let g = sample_gnp(params.n, params.p, &mut rng);
        let mut count = 0u64;
        for s in search::enumerate_kdis(&g, params.k).expect("k >= 1") {
            if s.len() == params.t {
                count += 1;
            }
        }
        sum += count as f64;
        sum_sq += (count * count) as f64;
    }
    let m = params.samples as f64;
    let mean = sum / m;
    let variance = (sum_sq - sum * sum / m) / (m - 1.0);
    let stderr = (variance.max(0.0) / m).sqrt();
    Ok((mean, stderr))
}

// ---------------------------------------------------------------------------
// Count envelopes
// ---------------------------------------------------------------------------

/// Exact-integer check of the per-vertex growth envelope: counts of k-DISes
/// of an n-vertex graph satisfy count <= base_k^n where base_1 = 3^(1/3),
/// base_2 = 3^(1/5), base_3 = 2^(1/4); larger k fall back to the
/// [`alpha_bound`] base with a small floating-point slack.
pub fn alpha_envelope_holds(count: u128, n: usize, k: usize) -> bool {
    let int_check = |root: u32, base: u128| -> bool {
        count.checked_pow(root).is_some_and(|c| {
            base.checked_pow(n as u32).is_some_and(|b| c <= b)
        })
    };
    match k {
        1 => int_check(3, 3),
        2 => int_check(5, 3),
        3 => int_check(4, 2),
        _ => {
            let (alpha, _) = alpha_bound(k);
            (count as f64) <= alpha.powi(n as i32) * (1.0 + 1e-9)
        }
    }
}

/// Exact-integer check of the chain bound for k > 2: every k+1 vertices cost
/// at most a factor 2, with one extra factor 2 of boundary slack, i.e.
/// count^(k+1) <= 2^(n+k+1).
pub fn chain_envelope_holds(count: u128, n: usize, k: usize) -> bool {
    debug_assert!(k > 2);
    count
        .checked_pow(k as u32 + 1)
        .is_some_and(|c| 2u128.checked_pow((n + k + 1) as u32).is_some_and(|b| c <= b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::search::count_kdis;

    #[test]
    fn masks_counter_agrees_with_general_search_on_all_tiny_graphs() {
        // Every labeled graph on up to 5 vertices, k in {1, 2, 3}.
        for n in 0..=5usize {
            let pairs = scan_pairs(n);
            for mask in 0u64..(1 << pairs.len()) {
                let g = mask_to_graph(n, &pairs, mask);
                let mut adj = [0u16; 16];
                for &(i, j) in g.edges().iter() {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                for k in 1..=3usize {
                    assert_eq!(
                        count_kdis_masks(&adj[..n], k),
                        count_kdis(&g, k).unwrap() as u64,
                        "n={n} mask={mask} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_extremal_values() {
        let opts = ScanOptions::default();
        let r32 = max_kdis_count(3, 2, &opts).unwrap();
        assert_eq!(r32.max, 1);
        let p3 = generators::path(3).unwrap();
        assert!(r32.witnesses.contains(&graph6_encode(&p3)));

        assert_eq!(max_kdis_count(4, 2, &opts).unwrap().max, 2);
        assert_eq!(max_kdis_count(5, 1, &opts).unwrap().max, 6);

        let r62 = max_kdis_count(6, 2, &opts).unwrap();
        assert_eq!(r62.max, 3);
        let octahedron = generators::complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(r62.witnesses.contains(&graph6_encode(&octahedron)));
    }

    #[test]
    fn scan_is_shard_count_independent() {
        for n in [4usize, 5, 6] {
            let base = max_kdis_count(n, 2, &ScanOptions::default()).unwrap();
            for shards in [2usize, 3, 7] {
                let opts = ScanOptions {
                    shards,
                    ..ScanOptions::default()
                };
                let r = max_kdis_count(n, 2, &opts).unwrap();
                assert_eq!(r.max, base.max);
                assert_eq!(r.witnesses, base.witnesses);
                assert_eq!(r.scanned, base.scanned);
            }
        }
    }

    #[test]
    fn witnesses_include_the_known_extremal_graph() {
        let report = max_kdis_count(6, 1, &ScanOptions::default()).unwrap();
        assert_eq!(report.max, 9);
        let k3 = generators::complete(3).unwrap();
        let two_k3 = generators::disjoint_union(&k3, &k3).unwrap();
        let target = graph6_encode(&two_k3);
        assert!(report.witnesses.contains(&target));
    }

    #[test]
    fn heavy_run_is_gated() {
        assert!(matches!(
            max_kdis_count(9, 2, &ScanOptions::default()),
            Err(ExtremalError::HeavyRunNotEnabled)
        ));
        assert!(matches!(
            max_kdis_count(10, 2, &ScanOptions::default()),
            Err(ExtremalError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn tree_scan_matches_formulas() {
        let opts = ScanOptions::default();
        // k >= 2: at most one k-DIS per tree.
        assert_eq!(max_kdis_count_trees(8, 2, &opts).unwrap().max, 1);
        // k = 1 maxima on trees, even/odd closed forms.
        assert_eq!(max_kdis_count_trees(8, 1, &opts).unwrap().max, 9);
        assert_eq!(max_kdis_count_trees(7, 1, &opts).unwrap().max, 8);
        assert!(max_kdis_count_trees(10, 1, &opts).is_err());
    }

    #[test]
    fn connectivity_filter() {
        let all = max_kdis_count(5, 1, &ScanOptions::default()).unwrap();
        let conn = max_kdis_count(
            5,
            1,
            &ScanOptions {
                connected_only: true,
                ..ScanOptions::default()
            },
        )
        .unwrap();
        assert_eq!(all.max, 6);
        assert!(conn.max <= all.max);
        // Every witness of the connected scan is connected.
        for w in &conn.witnesses {
            let g = crate::graph::graph6_decode(w).unwrap();
            let mut adj = [0u16; 16];
            for (i, j) in g.edges() {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            assert!(is_connected_masks(&adj, g.vertex_count()));
        }
    }

    #[test]
    fn alpha_bound_values() {
        let (a1, d1) = alpha_bound(1);
        assert!((a1 - 3f64.powf(1.0 / 3.0)).abs() < 1e-12);
        assert_eq!(d1, 2);

        let (a2, d2) = alpha_bound(2);
        assert!((a2 - 3f64.powf(0.2)).abs() < 1e-12);
        assert_eq!(d2, 4);

        let (a3, d3) = alpha_bound(3);
        assert!((a3 - 2f64.powf(0.25)).abs() < 1e-12);
        assert_eq!(d3, 3);
    }

    #[test]
    fn polynomial_roots() {
        // x^4 - x - 1
        let t1 = poly_root(&[-1.0, -1.0, 0.0, 0.0, 1.0], 1.0, 2.0).unwrap();
        assert!((t1 - 1.2207440846).abs() < 1e-9);
        // x^8 - x^4 - x - 2
        let t2 = poly_root(&[-2.0, -1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0], 1.0, 2.0).unwrap();
        assert!((t2 - 1.2406).abs() < 1e-3);
        // x^7 - x^3 - 2
        let t3 = poly_root(&[-2.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0], 1.0, 2.0).unwrap();
        let tau = 3f64.powf(0.2);
        assert!(t1 < tau && t2 < tau && t3 < tau);
        assert!(poly_root(&[1.0, 0.0, 1.0], 0.0, 1.0).is_err());
    }

    #[test]
    fn expectation_formula_edge_cases() {
        // t = n: only the all-vertices set, which must induce no edge.
        let e = expected_kdis_count(&RandomModelParams {
            n: 4,
            t: 4,
            k: 2,
            p: 0.3,
            samples: 1000,
            seed: 0,
        })
        .unwrap();
        assert!((e - 0.7f64.powi(6)).abs() < 1e-12);

        // n=2, t=1, k=1, p=1/2: hand enumeration over both 2-vertex graphs.
        let e = expected_kdis_count(&RandomModelParams {
            n: 2,
            t: 1,
            k: 1,
            p: 0.5,
            samples: 1000,
            seed: 0,
        })
        .unwrap();
        assert!((e - 1.0).abs() < 1e-12);

        // k = t, p = 1: complete graph; zero for t >= 2, n for t = 1.
        let e = expected_kdis_count(&RandomModelParams {
            n: 5,
            t: 3,
            k: 3,
            p: 1.0,
            samples: 1000,
            seed: 0,
        })
        .unwrap();
        assert_eq!(e, 0.0);
        let e = expected_kdis_count(&RandomModelParams {
            n: 5,
            t: 1,
            k: 1,
            p: 1.0,
            samples: 1000,
            seed: 0,
        })
        .unwrap();
        assert!((e - 5.0).abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_degenerate_p() {
        // p = 0: empty graph; a size-t set is a k-DIS iff t = n.
        let (mean, _) = monte_carlo_expected(&RandomModelParams {
            n: 5,
            t: 3,
            k: 2,
            p: 0.0,
            samples: 1000,
            seed: 7,
        })
        .unwrap();
        assert_eq!(mean, 0.0);
        let (mean, _) = monte_carlo_expected(&RandomModelParams {
            n: 5,
            t: 5,
            k: 2,
            p: 0.0,
            samples: 1000,
            seed: 7,
        })
        .unwrap();
        assert_eq!(mean, 1.0);
        // p = 1: complete graph, no 2-DIS of size t < n.
        let (mean, _) = monte_carlo_expected(&RandomModelParams {
            n: 5,
            t: 3,
            k: 2,
            p: 1.0,
            samples: 1000,
            seed: 7,
        })
        .unwrap();
        assert_eq!(mean, 0.0);
    }

    #[test]
    fn monte_carlo_is_reproducible_per_seed() {
        let params = RandomModelParams {
            n: 6,
            t: 2,
            k: 2,
            p: 0.5,
            samples: 1000,
            seed: 42,
        };
        assert_eq!(
            monte_carlo_expected(&params).unwrap(),
            monte_carlo_expected(&params).unwrap()
        );
    }

    #[test]
    fn envelopes_on_known_counts() {
        // Moon-Moser equality case: 9 = 3^(6/3) must pass (not fail) k=1.
        assert!(alpha_envelope_holds(9, 6, 1));
        assert!(!alpha_envelope_holds(10, 6, 1));
        // Rook graphs against 3^(n/5).
        assert!(alpha_envelope_holds(6, 9, 2));
        assert!(alpha_envelope_holds(24, 16, 2));
        // k = 3 instances.
        assert!(alpha_envelope_holds(12, 27, 3));
        assert!(alpha_envelope_holds(3, 9, 3));
        assert!(chain_envelope_holds(2, 8, 4));
    }

    #[test]
    fn zeta_orderings() {
        // 6^(1/9) > 24^(1/16) and 12^(1/27) < 2^(1/6) < 3^(1/9).
        assert!(6f64.powf(1.0 / 9.0) > 24f64.powf(1.0 / 16.0));
        assert!(12f64.powf(1.0 / 27.0) < 2f64.powf(1.0 / 6.0));
        assert!(2f64.powf(1.0 / 6.0) < 3f64.powf(1.0 / 9.0));
        // Zeta values come from actual counts.
        let k3 = generators::complete(3).unwrap();
        let rook = generators::cartesian_product(&k3, &k3).unwrap();
        assert_eq!(count_kdis(&rook, 2).unwrap(), 6);
        let cube = generators::power(&k3, 3).unwrap();
        assert_eq!(count_kdis(&cube, 3).unwrap(), 12);
        let k33 = generators::complete_bipartite(3, 3).unwrap();
        assert_eq!(count_kdis(&k33, 3).unwrap(), 2);
        let t93 = generators::turan(9, 3).unwrap();
        assert_eq!(count_kdis(&t93, 3).unwrap(), 3);
    }

    #[test]
    fn checkpointed_scan_resumes() {
        let dir = std::env::temp_dir().join(format!("kdis-ckpt-{}", std::process::id()));
        let _ = fs::create_dir_all(&dir);
        let path = dir.join("n5.ckpt");
        let _ = fs::remove_file(&path);
        let opts = ScanOptions {
            shards: 4,
            checkpoint: Some(path.clone()),
            ..ScanOptions::default()
        };
        let first = max_kdis_count(5, 2, &opts).unwrap();
        assert_eq!(first.max, 2);
        let lines = fs::read_to_string(&path).unwrap();
        assert_eq!(lines.lines().count(), 4);
        // Resume: nothing left to scan, max recovered from the checkpoint.
        let resumed = max_kdis_count(5, 2, &opts).unwrap();
        assert_eq!(resumed.max, 2);
        assert_eq!(resumed.scanned, 0);
        let _ = fs::remove_file(&path);
    }

    #[test]
    fn report_serializes_with_stable_keys() {
        let report = SearchReport {
            n: 3,
            k: 2,
            max: 1,
            witnesses: vec!["Bw".into()],
            scanned: 8,
            seconds: 0.01,
        };
        let json = serde_json::to_value(&report).unwrap();
        for key in ["n", "k", "max", "witnesses", "scanned", "seconds"] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn record_union_graph_counts() {
        // 9 -> one 3x3 rook block (count 6); 25 -> rook 3x3 + rook 4x4 (144).
        let g9 = generators::two_dis_record_graph(9).unwrap();
        assert_eq!(count_kdis(&g9, 2).unwrap(), 6);
        let g25 = generators::two_dis_record_graph(25).unwrap();
        assert_eq!(g25.vertex_count(), 25);
        assert_eq!(count_kdis(&g25, 2).unwrap(), 144);
        assert!(generators::two_dis_record_graph(5).is_none());
    }

    #[test]
    fn petersen_count_is_five() {
        let pet = generators::kneser(5, 2).unwrap();
        assert_eq!(count_kdis(&pet, 2).unwrap(), 5);
    }
}
