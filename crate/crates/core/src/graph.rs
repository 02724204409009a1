//! Simple undirected graphs on at most 64 vertices, with the constructions
//! and invariants the rest of the crate builds on.
//!
//! Vertices are dense labels `0..n`. Adjacency is a `u64` bitset per vertex,
//! which caps the order at 64; everything downstream (graph6 I/O, engines,
//! canonical labeling) has tighter limits of its own.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors from graph construction and text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge ({0},{0}) not allowed")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("order {n} exceeds supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Hard cap imposed by the `u64` adjacency bitsets.
pub const MAX_ORDER: usize = 64;

/// An immutable simple graph: no loops, no parallel edges.
///
/// The edge list is sorted lexicographically with `u < v` in every pair, and
/// the adjacency bitsets always agree with it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Pairs may come in any order
    /// and orientation; loops and duplicates are rejected rather than merged.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let w = u.max(v);
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, edges, adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor bitset of `v`.
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Connectivity via bitset BFS. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0u64;
            let mut t = frontier;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Relabels vertices by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edge_list(self.n, &pairs).expect("relabeling preserves validity")
    }

    /// Degree statistics: per-vertex degrees, minimum degree, the counts
    /// `a_k` of vertices having each degree, and the common degree when the
    /// graph is regular.
    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let delta = degrees.iter().copied().min();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in &degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        let regular_k = match (counts.len(), self.n) {
            (1, n) if n > 0 => Some(degrees[0]),
            _ => None,
        };
        DegreeStats {
            degrees,
            delta,
            counts,
            regular_k,
        }
    }

    /// The corona of `self` with the edgeless graph on `i` vertices: every
    /// original vertex gains `i` fresh pendant neighbors. Order grows to
    /// `n(1+i)` and size to `m + n*i`.
    pub fn corona_empty(&self, i: usize) -> Result<Self, GraphError> {
        assert!(i >= 1, "corona copy count must be positive");
        let total = self.n * (1 + i);
        if total > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                n: total,
                max: MAX_ORDER,
            });
        }
        let mut pairs = self.edges.clone();
        for v in 0..self.n {
            for t in 0..i {
                pairs.push((v, self.n + v * i + t));
            }
        }
        Graph::from_edge_list(total, &pairs)
    }

    /// Disjoint union; the second graph's labels are shifted up by `n1`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let total = self.n + other.n;
        if total > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                n: total,
                max: MAX_ORDER,
            });
        }
        let mut pairs = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::from_edge_list(total, &pairs)
    }

    /// The Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9 (vertex
    /// `5+i` adjacent to `5+((i+2) mod 5)`), spokes `i ~ i+5`.
    pub fn petersen() -> Self {
        let mut pairs = Vec::with_capacity(15);
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
            pairs.push((i, i + 5));
        }
        Graph::from_edge_list(10, &pairs).expect("static construction")
    }

    /// Maximum matching size, exact, by branch and bound over the lowest
    /// undecided vertex. Fine at this crate's scale; no blossom machinery.
    pub fn maximum_matching_size(&self) -> usize {
        let full: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut best = 0usize;
        self.matching_rec(full, 0, &mut best);
        best
    }

    fn matching_rec(&self, avail: u64, current: usize, best: &mut usize) {
        if current > *best {
            *best = current;
        }
        if avail == 0 {
            return;
        }
        // Even a perfect matching on the remaining vertices cannot beat best.
        if current + (avail.count_ones() as usize) / 2 <= *best {
            return;
        }
        let v = avail.trailing_zeros() as usize;
        let rest = avail & !(1 << v);
        let mut candidates = self.adj[v] & rest;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.matching_rec(rest & !(1 << u), current + 1, best);
        }
        // v stays unmatched.
        self.matching_rec(rest, current, best);
    }

    /// Edge covering number: the size of a smallest set of edges touching
    /// every vertex. Zero when an isolated vertex makes covering impossible
    /// (and for the empty graph). Computed via the Gallai identity
    /// `rho + nu = n` from the maximum matching size `nu`.
    pub fn edge_cover_number(&self) -> usize {
        if self.n == 0 || self.has_isolated_vertex() {
            return 0;
        }
        self.n - self.maximum_matching_size()
    }

    /// Parses the "n m" / "u v" edge-list text format (0-based labels).
    pub fn parse_edge_list_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::MalformedEdgeList("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::MalformedEdgeList("bad header".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::MalformedEdgeList("bad header".into()))?;
        let mut pairs = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line {line:?}")))?;
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(GraphError::MalformedEdgeList(format!(
                "header promises {m} edges, found {}",
                pairs.len()
            )));
        }
        Graph::from_edge_list(n, &pairs)
    }

    /// Writes the "n m" / "u v" edge-list text format.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Degree data of a graph, as used by the coefficient identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// Per-vertex degrees, indexed by vertex.
    pub degrees: Vec<usize>,
    /// Minimum degree; `None` only for the empty graph.
    pub delta: Option<usize>,
    /// `a_k`: how many vertices have degree `k` (absent keys mean zero).
    pub counts: BTreeMap<usize, usize>,
    /// The common degree if every vertex has the same one.
    pub regular_k: Option<usize>,
}

impl DegreeStats {
    pub fn a(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }
}
