//! Canonical labeling for graphs of order at most 16.
//!
//! Equitable degree refinement narrows the vertex partition, then a
//! backtracking search individualizes vertices of the first non-singleton
//! cell and keeps the lexicographically smallest upper-triangle adjacency
//! encoding over all consistent labelings. Automorphisms discovered when two
//! leaves tie are used to skip candidates in the same orbit, which keeps
//! highly symmetric inputs (empty, complete, vertex-transitive graphs) from
//! exploding the search.
//!
//! Two graphs receive byte-equal codes iff they are isomorphic.

use crate::graph::{Graph, GraphError};
use crate::graph6::to_graph6;

/// Largest order the canonical labeler accepts.
pub const MAX_CANON_ORDER: usize = 16;

/// Canonical graph6 string of a graph; byte equality is isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical relabeling of `g`: isomorphic inputs map to the identical graph.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(GraphError::OrderTooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    if n == 0 {
        return Ok(g.clone());
    }
    let mut search = Search::new(g);
    let initial: Vec<usize> = vec![0; n];
    search.descend(initial, &[]);
    let positions = search.best_perm.expect("search visits at least one leaf");
    // positions[i] = vertex placed at position i; relabel wants old -> new.
    let mut perm = vec![0usize; n];
    for (i, &v) in positions.iter().enumerate() {
        perm[v] = i;
    }
    Ok(g.relabel(&perm))
}

/// Canonical graph6 code of `g` (order at most 16).
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    Ok(CanonicalCode(to_graph6(&canonical_form(g)?)?))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: Option<u128>,
    best_perm: Option<Vec<usize>>,
    /// Automorphism generators discovered from tying leaves, as old -> new maps.
    generators: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            best_bits: None,
            best_perm: None,
            generators: Vec::new(),
        }
    }

    fn descend(&mut self, mut colors: Vec<usize>, prefix: &[usize]) {
        refine(self.g, &mut colors);
        let cells = cells_of(&colors);
        match cells.iter().find(|c| c.len() > 1) {
            None => self.visit_leaf(&colors),
            Some(cell) => {
                let mut tried: Vec<usize> = Vec::new();
                for &v in cell {
                    if self.in_explored_orbit(v, &tried, prefix) {
                        continue;
                    }
                    tried.push(v);
                    let mut child = Vec::with_capacity(self.n);
                    // Give v a fresh color just below its cellmates.
                    for (u, &c) in colors.iter().enumerate() {
                        child.push(if u == v { 2 * c } else { 2 * c + 1 });
                    }
                    let mut path = prefix.to_vec();
                    path.push(v);
                    self.descend(child, &path);
                }
            }
        }
    }

    fn visit_leaf(&mut self, colors: &[usize]) {
        let mut positions = vec![0usize; self.n];
        for (v, &c) in colors.iter().enumerate() {
            positions[c] = v;
        }
        let bits = encode(self.g, &positions);
        match self.best_bits {
            None => {
                self.best_bits = Some(bits);
                self.best_perm = Some(positions);
            }
            Some(best) if bits < best => {
                self.best_bits = Some(bits);
                self.best_perm = Some(positions);
            }
            Some(best) if bits == best => {
                // Two labelings with identical encodings compose to an
                // automorphism: send the vertex at each position of the new
                // labeling to the vertex at the same position of the best.
                let best_perm = self.best_perm.as_ref().expect("best set with bits");
                let mut auto = vec![0usize; self.n];
                for i in 0..self.n {
                    auto[positions[i]] = best_perm[i];
                }
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.generators.push(auto);
                }
            }
            _ => {}
        }
    }

    /// True if `v` lies in the orbit of an already-tried candidate under the
    /// subgroup generated by automorphisms fixing `prefix` pointwise.
    fn in_explored_orbit(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        if tried.is_empty() || self.generators.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for (a, &b) in gen.iter().enumerate() {
                uf.union(a, b);
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&t| uf.find(t) == root)
    }
}

/// Equitable refinement: repeatedly split cells by the multiset of neighbor
/// colors until stable. Color ids are assigned by signature order, so the
/// result is invariant under relabeling.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.order();
    loop {
        let before = colors.iter().max().copied().unwrap_or(0);
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut neigh: Vec<usize> = {
                    let mut t = g.adj(v);
                    let mut out = Vec::with_capacity(g.degree(v));
                    while t != 0 {
                        out.push(colors[t.trailing_zeros() as usize]);
                        t &= t - 1;
                    }
                    out
                };
                neigh.sort_unstable();
                (colors[v], neigh, v)
            })
            .collect();
        sigs.sort();
        let mut next = 0usize;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        if next == before {
            return;
        }
    }
}

fn cells_of(colors: &[usize]) -> Vec<Vec<usize>> {
    let k = colors.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        cells[c].push(v);
    }
    cells
}

/// Upper-triangle adjacency bits in graph6 column order under the labeling
/// `positions[i] = vertex at position i`, packed most significant first.
fn encode(g: &Graph, positions: &[usize]) -> u128 {
    let n = positions.len();
    let mut bits = 0u128;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | u128::from(g.has_edge(positions[i], positions[j]));
        }
    }
    bits
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
