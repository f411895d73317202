//! Finite simple undirected graphs with dense 0-based vertex labels,
//! plus the edge-list text format used by the CLI.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Vertices of a graph on `n` vertices are exactly `0..n`.
pub type VertexId = usize;

/// Undirected simple graph as sorted adjacency lists.
///
/// Invariants: adjacency is symmetric, loop-free, duplicate-free, and every
/// list is sorted ascending. `m` is the number of unordered edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from unordered edge pairs. Duplicate edges collapse to
    /// one; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Param(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Param(format!(
                    "edge ({u}, {v}) out of range for n={n}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m == self.n() - 1 && self.is_connected()
    }

    /// Subgraph induced by `keep`, relabeled densely in the order of `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let mut relabel = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if keep.contains(u) && keep.contains(v) {
                edges.push((relabel[u], relabel[v]));
            }
        }
        Graph::from_edges(keep.len(), edges).expect("induced edges are in range")
    }

    /// Parses the edge-list text format: header `n m`, then exactly `m`
    /// lines `u v`. Blank lines and lines starting with `#` are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        let mut line_count = 0;
        for (idx, raw) in text.lines().enumerate() {
            line_count = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |msg: &str| Error::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let mut fields = line.split_whitespace();
            let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(malformed("expected two whitespace-separated fields")),
            };
            let parse = |s: &str| -> Result<usize> {
                s.parse()
                    .map_err(|_| malformed(&format!("not a non-negative integer: {s:?}")))
            };
            match header {
                None => header = Some((parse(a)?, parse(b)?)),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(malformed(&format!("unexpected content after {m} edges")));
                    }
                    let (u, v) = (parse(a)?, parse(b)?);
                    if u >= n || v >= n {
                        return Err(malformed(&format!(
                            "vertex index out of range for n={n}: {} {}",
                            u, v
                        )));
                    }
                    if u == v {
                        return Err(malformed(&format!("self-loop at vertex {u}")));
                    }
                    edges.push((u, v));
                }
            }
        }
        let Some((n, m)) = header else {
            return Err(Error::Parse {
                line: 1,
                msg: "missing header line \"n m\"".to_string(),
            });
        };
        if edges.len() < m {
            return Err(Error::Parse {
                line: line_count,
                msg: format!("expected {m} edge lines, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Canonical edge-list text: round-trips through `from_edge_list`.
    /// Edges appear smaller endpoint first, in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            out.push('\n');
            out.push_str(&format!("{u} {v}"));
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m)
    }
}

/// Set of vertices over a fixed universe `0..universe`, stored as a bitset.
/// Iteration is always in ascending vertex order.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices(universe: usize, vertices: &[VertexId]) -> Result<Self> {
        let mut s = Self::empty(universe);
        for &v in vertices {
            if v >= universe {
                return Err(Error::Param(format!(
                    "vertex {v} out of range for universe {universe}"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns true if `v` was newly inserted. Panics if `v` is outside the
    /// universe.
    pub fn insert(&mut self, v: VertexId) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.words[v / 64] &= !(1 << (v % 64));
        self.len -= 1;
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            // peel bits low to high: w & (w - 1) clears the lowest set bit
            std::iter::successors(Some(word), |&w| Some(w & w.wrapping_sub(1)))
                .take_while(|&w| w != 0)
                .map(move |w| i * 64 + w.trailing_zeros() as usize)
        })
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet {
            universe: self.universe,
            words,
            len,
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Asserts the representation invariants; used by tests and generators.
pub fn check_graph_invariants(g: &Graph) -> Result<()> {
    let mut half_edges = 0;
    for u in 0..g.n() {
        let list = g.neighbors(u);
        half_edges += list.len();
        for w in list.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Structure(format!(
                    "adjacency of {u} not sorted/deduplicated"
                )));
            }
        }
        for &v in list {
            if v == u {
                return Err(Error::Structure(format!("self-loop at {u}")));
            }
            if v >= g.n() {
                return Err(Error::Structure(format!("neighbor {v} of {u} out of range")));
            }
            if !g.neighbors(v).contains(&u) {
                return Err(Error::Structure(format!("edge ({u}, {v}) not symmetric")));
            }
        }
    }
    if half_edges != 2 * g.m() {
        return Err(Error::Structure(format!(
            "edge count {} inconsistent with adjacency total {half_edges}",
            g.m()
        )));
    }
    Ok(())
}
