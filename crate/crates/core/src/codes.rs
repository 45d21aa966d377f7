//! Ternary codes of length k with the Hamming metric, and the bijection
//! between k-DISes of (K₃)^k and the (k, 3^(k-1), 2)₃ MDS codes.
//!
//! A k-DIS of the product corresponds to a set of 3^(k-1) words hitting every
//! "line" of F₃^k (fix all but one coordinate) exactly once, i.e. a code
//! meeting the Singleton bound with minimum distance 2.

use thiserror::Error;

use crate::generators;
use crate::graph::VertexSet;
use crate::search::{self, SearchError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("word length {got} does not match the code length {expected}")]
    WordLength { expected: usize, got: usize },
    #[error("digit {digit} is not a ternary symbol")]
    BadDigit { digit: u8 },
    #[error("k = {k} out of range for this operation (max {max})")]
    KOutOfRange { k: usize, max: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Sentinel distance of a single-word code: no pair exists, so every distance
/// requirement holds vacuously.
pub const INFINITE_DISTANCE: u32 = u32::MAX;

/// A set of length-k words over {0,1,2}, kept sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TernaryCode {
    k: usize,
    words: Vec<Vec<u8>>,
}

impl TernaryCode {
    pub fn new(k: usize, mut words: Vec<Vec<u8>>) -> Result<Self, CodeError> {
        for w in &words {
            if w.len() != k {
                return Err(CodeError::WordLength {
                    expected: k,
                    got: w.len(),
                });
            }
            if let Some(&digit) = w.iter().find(|&&d| d > 2) {
                return Err(CodeError::BadDigit { digit });
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(TernaryCode { k, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_length(&self) -> usize {
        self.k
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.words.binary_search_by(|w| w.as_slice().cmp(word)).is_ok()
    }

    /// Coordinatewise translation by `shift` (mod 3).
    pub fn translate(&self, shift: &[u8]) -> TernaryCode {
        let words = self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .zip(shift)
                    .map(|(&a, &b)| (a + b) % 3)
                    .collect::<Vec<u8>>()
            })
            .collect();
        TernaryCode::new(self.k, words).expect("translate preserves validity")
    }

    /// One word per line, digits concatenated.
    pub fn render(&self) -> String {
        self.words
            .iter()
            .map(|w| {
                let mut line: String = w.iter().map(|d| (b'0' + d) as char).collect();
                line.push('\n');
                line
            })
            .collect()
    }

    /// Minimum pairwise Hamming distance; [`INFINITE_DISTANCE`] for a single
    /// word, `None` for an empty code.
    pub fn min_distance(&self) -> Option<u32> {
        if self.words.is_empty() {
            return None;
        }
        if self.words.len() == 1 {
            return Some(INFINITE_DISTANCE);
        }
        let mut best = u32::MAX;
        for i in 0..self.words.len() {
            for j in (i + 1)..self.words.len() {
                let d = hamming(&self.words[i], &self.words[j]);
                best = best.min(d);
            }
        }
        Some(best)
    }
}

pub fn hamming(a: &[u8], b: &[u8]) -> u32 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u32
}

/// True iff the code has the size and distance of a ternary MDS code of
/// length k and minimum distance 2: 3^(k-1) words, all pairs at distance
/// at least 2.
pub fn is_mds2(code: &TernaryCode, k: usize) -> bool {
    code.word_length() == k
        && code.len() == 3usize.pow(k as u32 - 1)
        && code.min_distance().is_some_and(|d| d >= 2)
}

/// Word for a vertex of (K₃)^k under row-major product labeling: the
/// most-significant base-3 digit varies slowest.
pub fn vertex_to_word(index: usize, k: usize) -> Vec<u8> {
    let mut w = vec![0u8; k];
    let mut rest = index;
    for slot in w.iter_mut().rev() {
        *slot = (rest % 3) as u8;
        rest /= 3;
    }
    debug_assert_eq!(rest, 0);
    w
}

pub fn word_to_vertex(word: &[u8]) -> usize {
    word.iter().fold(0usize, |acc, &d| acc * 3 + d as usize)
}

/// Interprets a vertex set of (K₃)^k as a ternary code.
pub fn kdis_to_code(d: &VertexSet, k: usize) -> TernaryCode {
    let words = d.iter().map(|v| vertex_to_word(v, k)).collect();
    TernaryCode::new(k, words).expect("vertex indices of (K3)^k give valid words")
}

/// Inverse of [`kdis_to_code`].
pub fn code_to_kdis(code: &TernaryCode) -> VertexSet {
    VertexSet::from_iter(code.words().iter().map(|w| word_to_vertex(w)))
}

const VIA_KDIS_MAX_K: usize = 4;

/// Counts the (k, 3^(k-1), 2)₃ MDS codes by counting k-DISes of (K₃)^k.
pub fn count_mds_via_kdis(k: usize) -> Result<u128, CodeError> {
    if k == 0 || k > VIA_KDIS_MAX_K {
        return Err(CodeError::KOutOfRange {
            k,
            max: VIA_KDIS_MAX_K,
        });
    }
    let product = generators::power(&generators::complete(3).unwrap(), k)
        .expect("(K3)^4 has 81 vertices, within the cap");
    Ok(search::count_kdis(&product, k)?)
}

/// Enumerates the codes behind [`count_mds_via_kdis`].
pub fn enumerate_mds_via_kdis(k: usize) -> Result<Vec<TernaryCode>, CodeError> {
    if k == 0 || k > VIA_KDIS_MAX_K {
        return Err(CodeError::KOutOfRange {
            k,
            max: VIA_KDIS_MAX_K,
        });
    }
    let product = generators::power(&generators::complete(3).unwrap(), k)
        .expect("(K3)^4 has 81 vertices, within the cap");
    let sets = search::enumerate_kdis(&product, k)?;
    Ok(sets.iter().map(|d| kdis_to_code(d, k)).collect())
}

const BRUTE_FORCE_MAX_K: usize = 3;

/// Counts the same codes as proper 3-colorings of the Hamming graph
/// H(k-1, 3): a code picks exactly one word per fixed (k-1)-prefix... seen as
/// a function F₃^(k-1) → F₃ whose values differ on Hamming-adjacent
/// arguments; the graph of such a function is exactly an MDS code.
pub fn count_mds_bruteforce(k: usize) -> Result<u128, CodeError> {
    if k == 0 || k > BRUTE_FORCE_MAX_K {
        return Err(CodeError::KOutOfRange {
            k,
            max: BRUTE_FORCE_MAX_K,
        });
    }
    let domain = 3usize.pow(k as u32 - 1);
    // Hamming adjacency over the domain indices.
    let mut adjacent: Vec<(usize, usize)> = Vec::new();
    for a in 0..domain {
        for b in (a + 1)..domain {
            let wa = vertex_to_word(a, k - 1);
            let wb = vertex_to_word(b, k - 1);
            if hamming(&wa, &wb) == 1 {
                adjacent.push((a, b));
            }
        }
    }
    let mut count: u128 = 0;
    let total = 3usize.pow(domain as u32);
    'assignments: for assignment in 0..total {
        let mut colors = vec![0u8; domain];
        let mut rest = assignment;
        for c in colors.iter_mut() {
            *c = (rest % 3) as u8;
            rest /= 3;
        }
        for &(a, b) in &adjacent {
            if colors[a] == colors[b] {
                continue 'assignments;
            }
        }
        count += 1;
    }
    Ok(count)
}

const LINEAR_MAX_K: usize = 8;

/// Linear (k, 3^(k-1), 2)₃ MDS codes: kernels of functionals with all
/// coefficients nonzero, counted modulo nonzero scalars (fix a₁ = 1).
pub fn enumerate_linear_mds_q3(k: usize) -> Result<Vec<TernaryCode>, CodeError> {
    if k == 0 || k > LINEAR_MAX_K {
        return Err(CodeError::KOutOfRange { k, max: LINEAR_MAX_K });
    }
    let mut out = Vec::new();
    // Coefficient vectors (1, a₂, ..., a_k) with aᵢ ∈ {1, 2}.
    for pattern in 0..(1usize << (k - 1)) {
        let mut coeffs = vec![1u8; k];
        for (i, c) in coeffs.iter_mut().enumerate().skip(1) {
            if (pattern >> (i - 1)) & 1 != 0 {
                *c = 2;
            }
        }
        let words: Vec<Vec<u8>> = (0..3usize.pow(k as u32))
            .map(|v| vertex_to_word(v, k))
            .filter(|w| {
                w.iter()
                    .zip(&coeffs)
                    .map(|(&d, &c)| (d * c) as usize)
                    .sum::<usize>()
                    % 3
                    == 0
            })
            .collect();
        let code = TernaryCode::new(k, words).expect("kernel words are valid");
        assert!(is_mds2(&code, k), "kernel of {coeffs:?} must be MDS");
        out.push(code);
    }
    Ok(out)
}

/// Number of linear (k, 3^(k-1), 2)₃ MDS codes; equals 2^(k-1).
pub fn count_linear_mds_q3(k: usize) -> Result<u128, CodeError> {
    Ok(enumerate_linear_mds_q3(k)?.len() as u128)
}

/// Connectivity and bipartiteness of the graph on the codewords with nonzero
/// first coordinate, joined when at Hamming distance 1 after dropping that
/// coordinate.
pub fn residual_graph_connected_bipartite(code: &TernaryCode) -> (bool, bool) {
    let tails: Vec<Vec<u8>> = code
        .words()
        .iter()
        .filter(|w| w[0] != 0)
        .map(|w| w[1..].to_vec())
        .collect();
    let n = tails.len();
    if n == 0 {
        return (true, true);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if hamming(&tails[i], &tails[j]) == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut color = vec![-1i8; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    color[0] = 0;
    let mut seen = 1usize;
    let mut bipartite = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if color[v] == -1 {
                color[v] = 1 - color[u];
                seen += 1;
                queue.push_back(v);
            } else if color[v] == color[u] {
                bipartite = false;
            }
        }
    }
    (seen == n, bipartite)
}
