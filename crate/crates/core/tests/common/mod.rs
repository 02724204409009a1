//! Shared test oracles, deliberately independent of the library's own
//! canonical labeling and counting paths.

#![allow(dead_code)]

use ecpoly::graph::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Backtracking isomorphism test over vertex mappings. Independent of
/// `ecpoly::canon`; used to validate it and the cubic generator.
pub fn brute_iso(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.order()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.order()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map[v] = w;
                used[w] = true;
                if extend(a, b, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    let mut map = vec![0usize; a.order()];
    let mut used = vec![false; a.order()];
    extend(a, b, 0, &mut map, &mut used)
}

/// Graph from an upper-triangle bitmask in column-major (graph6) bit order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if (mask >> pos) & 1 == 1 {
                pairs.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::from_edge_list(n, &pairs).expect("mask encodes a simple graph")
}

/// All labeled simple graphs on `n` vertices (2^C(n,2) of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * (n - 1) / 2;
    (0u64..(1 << bits)).map(move |mask| graph_from_mask(n, mask))
}

/// Exhaustive labeled enumeration of 3-regular graphs on `n` vertices,
/// deduped by `brute_iso`: one representative per isomorphism class.
/// Masks run over exactly the C(n(n-1)/2, 3n/2) patterns with the right
/// number of edges (Gosper's hack), then a degree filter applies.
pub fn cubic_classes_by_labeled_enumeration(n: usize) -> Vec<Graph> {
    assert!(n.is_multiple_of(2) && (4..=8).contains(&n), "oracle scale");
    let bits = n * (n - 1) / 2;
    let edges = 3 * n / 2;
    // Map bit position -> endpoints, column-major.
    let mut ends = Vec::with_capacity(bits);
    for j in 1..n {
        for i in 0..j {
            ends.push((i, j));
        }
    }
    let mut reps: Vec<Graph> = Vec::new();
    let mut mask: u64 = (1 << edges) - 1;
    let limit: u64 = 1 << bits;
    while mask < limit {
        let mut deg = [0u8; 8];
        let mut t = mask;
        while t != 0 {
            let b = t.trailing_zeros() as usize;
            t &= t - 1;
            deg[ends[b].0] += 1;
            deg[ends[b].1] += 1;
        }
        if deg[..n].iter().all(|&d| d == 3) {
            let g = graph_from_mask(n, mask);
            if !reps.iter().any(|r| brute_iso(r, &g)) {
                reps.push(g);
            }
        }
        // Gosper: next mask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    reps
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (n <= 7), via labeled enumeration deduped by canonical code.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    use rayon::prelude::*;
    assert!((1..=7).contains(&n));
    let bits = n * (n - 1) / 2;
    let total: u64 = 1 << bits;
    let chunk: u64 = 1 << 16;
    let maps: Vec<std::collections::BTreeMap<String, Graph>> = (0..total)
        .step_by(chunk as usize)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|lo| {
            let mut local = std::collections::BTreeMap::new();
            for mask in lo..(lo + chunk).min(total) {
                let g = graph_from_mask(n, mask);
                if !g.is_connected() {
                    continue;
                }
                let code = ecpoly::canon::canonical_code(&g).unwrap();
                local.entry(code.0).or_insert(g);
            }
            local
        })
        .collect();
    let mut merged = std::collections::BTreeMap::new();
    for map in maps {
        merged.extend(map);
    }
    merged.into_values().collect()
}

/// Deterministic corpus of random isolated-free graphs with orders in
/// `lo..=hi`.
pub fn random_isolated_free(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(lo..=hi);
        let p = rng.random_range(0.18..0.55);
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &pairs).unwrap();
        if !g.has_isolated_vertex() {
            out.push(g);
        }
    }
    out
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..a {
        for v in 0..b {
            pairs.push((u, a + v));
        }
    }
    Graph::from_edge_list(a + b, &pairs).unwrap()
}
