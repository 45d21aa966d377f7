//! Undirected simple graphs on up to [`MAX_VERTICES`] vertices, with bit-packed
//! adjacency rows, plus the graph6 and edge-list interchange formats.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count.
///
/// One 64-bit word covers 64 vertices; nine words cover every structure built
/// here, the largest being the point-line incidence graph of the projective
/// plane of order 16 (546 vertices).
pub const MAX_VERTICES: usize = 576;

/// Number of 64-bit words backing a [`VertexSet`].
pub const WORDS: usize = MAX_VERTICES / 64;

/// A subset of vertices with O(1) membership, stored as a fixed bitset.
///
/// Sets are `Copy`; search code passes them by value and mutates local copies.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    /// Set containing the single vertex `v`.
    #[inline]
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// Set containing all vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut s = Self::EMPTY;
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.words[w] = u64::MAX;
            } else if n > lo {
                s.words[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        (self.words[v >> 6] >> (v & 63)) & 1 != 0
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of vertices in the set.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] |= other.words[w];
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] &= other.words[w];
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] &= !other.words[w];
        }
        out
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let mut c = 0usize;
        for w in 0..WORDS {
            c += (self.words[w] & other.words[w]).count_ones() as usize;
        }
        c
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        (0..WORDS).any(|w| self.words[w] & other.words[w] != 0)
    }

    #[inline]
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        (0..WORDS).all(|w| self.words[w] & !other.words[w] == 0)
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for w in 0..WORDS {
            if self.words[w] != 0 {
                return Some(w * 64 + self.words[w].trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            std::iter::successors(
                if word == 0 { None } else { Some(word) },
                |&rem| {
                    let next = rem & (rem - 1);
                    if next == 0 {
                        None
                    } else {
                        Some(next)
                    }
                },
            )
            .map(move |rem| wi * 64 + rem.trailing_zeros() as usize)
        })
    }

    /// Vertices as a sorted `Vec` (handy for display and golden tests).
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Errors from graph construction and the interchange formats.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {n} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("edge ({u}, {v}) has an endpoint out of range (n = {n})")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph6 error at byte {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
}

/// What went wrong while decoding a graph6 string.
#[derive(Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    /// Character outside the printable range 63..=126.
    CharOutOfRange,
    /// Truncated or otherwise invalid size header.
    MalformedHeader,
    /// Fewer data characters than the vertex count requires.
    TruncatedData,
    /// More data characters than the vertex count requires.
    TrailingData,
    /// Padding bits of the final character are not zero.
    TrailingBitsNonzero,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Graph6ErrorKind::CharOutOfRange => "character out of printable range",
            Graph6ErrorKind::MalformedHeader => "malformed size header",
            Graph6ErrorKind::TruncatedData => "truncated adjacency data",
            Graph6ErrorKind::TrailingData => "trailing data after adjacency bits",
            Graph6ErrorKind::TrailingBitsNonzero => "nonzero padding bits",
        };
        f.write_str(msg)
    }
}

/// An undirected simple graph with bit-packed adjacency rows.
///
/// Immutable after construction; every constructor checks symmetry,
/// irreflexivity and the vertex bound before returning.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Result of a neighborhood query: degree, open and closed neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhood {
    pub degree: usize,
    pub open: VertexSet,
    pub closed: VertexSet,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.debug_check_invariants();
        Ok(g)
    }

    /// Internal constructor from prevalidated rows.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let g = Graph { n: adj.len(), adj };
        g.debug_check_invariants();
        g
    }

    fn debug_check_invariants(&self) {
        if cfg!(debug_assertions) {
            let full = VertexSet::full(self.n);
            for v in 0..self.n {
                debug_assert!(self.adj[v].is_subset_of(&full), "bit beyond n in row {v}");
                debug_assert!(!self.adj[v].contains(v), "self-loop at {v}");
                for u in self.adj[v].iter() {
                    debug_assert!(self.adj[u].contains(v), "asymmetry at ({u},{v})");
                }
            }
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Neighbor set of `v`. Panics if `v >= n`; use [`Graph::neighborhood`]
    /// for a checked variant.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degree plus open and closed neighborhood of `v`.
    pub fn neighborhood(&self, v: usize) -> Result<Neighborhood, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let open = self.adj[v];
        let mut closed = open;
        closed.insert(v);
        Ok(Neighborhood {
            degree: open.len(),
            open,
            closed,
        })
    }

    /// Checks that `s` only uses vertices below `n`.
    pub fn validate_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.is_subset_of(&VertexSet::full(self.n)) {
            Ok(())
        } else {
            let v = s.difference(&VertexSet::full(self.n)).first().unwrap();
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Induced subgraph on the given vertex set, relabelled `0..|keep|` in
    /// ascending old-index order. Returns the graph and the old→new map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut old_to_new = vec![None; self.n];
        let mut idx = 0usize;
        for v in keep.iter() {
            old_to_new[v] = Some(idx);
            idx += 1;
        }
        let mut adj = vec![VertexSet::EMPTY; idx];
        for v in keep.iter() {
            let nv = old_to_new[v].unwrap();
            for u in self.adj[v].intersection(keep).iter() {
                adj[nv].insert(old_to_new[u].unwrap());
            }
        }
        (Graph::from_rows(adj), old_to_new)
    }

    /// Removes the closed neighborhood of every vertex in `seeds` and returns
    /// the induced subgraph on the rest, with the old→new index map.
    pub fn delete_closed_neighborhoods(
        &self,
        seeds: &VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.validate_set(seeds)?;
        let mut removed = *seeds;
        for v in seeds.iter() {
            removed = removed.union(&self.adj[v]);
        }
        let keep = VertexSet::full(self.n).difference(&removed);
        Ok(self.induced_subgraph(&keep))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Encodes a graph in graph6 format (size header, then the upper triangle in
/// column-major order, six bits per printable character).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push((n + 63) as u8);
    } else {
        // 63 <= n <= 258047: '~' followed by three 6-bit chars, big-endian.
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

/// Decodes a graph6 string. Errors carry the byte offset of the offending
/// character.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6 {
                offset,
                kind: Graph6ErrorKind::CharOutOfRange,
            });
        }
    }
    let malformed = |offset| GraphError::Graph6 {
        offset,
        kind: Graph6ErrorKind::MalformedHeader,
    };
    if bytes.is_empty() {
        return Err(malformed(0));
    }
    let (n, data_start) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else {
        // Long form. The 8-byte form ('~~' prefix) encodes n > 258047, which
        // is far beyond MAX_VERTICES; reject it as oversized below.
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(GraphError::TooManyVertices { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(malformed(bytes.len()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        if n <= 62 {
            return Err(malformed(1));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() < data_start + nchars {
        return Err(GraphError::Graph6 {
            offset: bytes.len(),
            kind: Graph6ErrorKind::TruncatedData,
        });
    }
    if bytes.len() > data_start + nchars {
        return Err(GraphError::Graph6 {
            offset: data_start + nchars,
            kind: Graph6ErrorKind::TrailingData,
        });
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let ch = bytes[data_start + bit / 6] - 63;
            if (ch >> (5 - bit % 6)) & 1 != 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    // Padding bits of the final character must be zero.
    if nbits % 6 != 0 {
        let last = bytes[data_start + nchars - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6 {
                offset: data_start + nchars - 1,
                kind: Graph6ErrorKind::TrailingBitsNonzero,
            });
        }
    }
    Ok(Graph::from_rows(adj))
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" header, then one "u v" line per edge.
// ---------------------------------------------------------------------------

/// Parses the `"n m\nu v\n..."` edge-list format into raw counts and pairs,
/// without constructing a [`Graph`] (and hence without the vertex cap; the
/// forest solver accepts much larger inputs than bit-packed graphs do).
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>), GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines.next().ok_or_else(|| GraphError::EdgeListParse {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let parse_pair = |line: usize, s: &str| -> Result<(usize, usize), GraphError> {
        let mut it = s.split_whitespace();
        let bad = |msg: &str| GraphError::EdgeListParse {
            line: line + 1,
            msg: msg.into(),
        };
        let a = it
            .next()
            .ok_or_else(|| bad("expected two integers"))?
            .parse()
            .map_err(|_| bad("expected two integers"))?;
        let b = it
            .next()
            .ok_or_else(|| bad("expected two integers"))?
            .parse()
            .map_err(|_| bad("expected two integers"))?;
        if it.next().is_some() {
            return Err(bad("expected exactly two integers"));
        }
        Ok((a, b))
    };
    let (n, m) = parse_pair(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        edges.push(parse_pair(line_no, line)?);
    }
    if edges.len() != m {
        return Err(GraphError::EdgeListParse {
            line: line_no + 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

/// Parses the `"n m\nu v\n..."` edge-list format.
pub fn edge_list_decode(text: &str) -> Result<Graph, GraphError> {
    let (n, edges) = parse_edge_list(text)?;
    Graph::from_edges(n, &edges)
}

/// Writes the `"n m\nu v\n..."` edge-list format.
pub fn edge_list_encode(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
