//! Three independent engines counting edge covers by size.
//!
//! * `brute` enumerates every nonempty edge subset and keeps the covering
//!   ones: the reference procedure, exponential in the size.
//! * `ie` runs inclusion-exclusion over the set of uncovered vertices,
//!   exponential in the order but only through cheap machine-word buckets.
//! * `dp` is a dynamic program over covered-vertex bitmask states.
//!
//! All three return identical tables on any input they accept; the test
//! suite leans on that agreement heavily.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::par;
use crate::poly::{binomial, EcPolynomial};

/// Edge subsets enumerated by `brute`: at most `2^25`.
pub const BRUTE_MAX_EDGES: usize = 25;
/// Vertex subsets enumerated by `ie`: at most `2^28`.
pub const IE_MAX_ORDER: usize = 28;
/// Covered-set states stored by `dp`: at most `2^26` states...
pub const DP_MAX_ORDER: usize = 26;
/// ...and at most this many table entries, to keep allocations sane.
pub const DP_MAX_ENTRIES: u64 = 1 << 26;
/// `dp` counts in `u128`; totals are bounded by `2^m`, so cap `m` at 127.
pub const DP_MAX_EDGES: usize = 127;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph has {m} edges, engine handles at most {max}")]
    TooManyEdges { m: usize, max: usize },
    #[error("graph has order {n}, engine handles at most {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("dp state table would need {entries} entries (limit {limit})")]
    StateSpaceTooLarge { entries: u64, limit: u64 },
    #[error("graph has an isolated vertex, so no edge cover exists")]
    IsolatedVertex,
}

/// An edge cover as a sorted list of sorted vertex pairs.
pub type EdgeCover = Vec<(usize, usize)>;

/// Which counting engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Brute,
    InclusionExclusion,
    Dp,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Brute, Engine::InclusionExclusion, Engine::Dp];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::InclusionExclusion => "ie",
            Engine::Dp => "dp",
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Engine::Brute),
            "ie" => Ok(Engine::InclusionExclusion),
            "dp" => Ok(Engine::Dp),
            other => Err(format!("unknown engine {other:?} (expected brute|ie|dp)")),
        }
    }
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-size edge cover counts, the raw engine output. Entries are strictly
/// increasing in the size and every stored count is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverTable {
    engine: Engine,
    counts: Vec<(usize, BigUint)>,
}

impl CoverTable {
    pub fn new(engine: Engine, counts: Vec<(usize, BigUint)>) -> Self {
        debug_assert!(counts.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(counts.iter().all(|(_, c)| !c.is_zero()));
        CoverTable { engine, counts }
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn counts(&self) -> &[(usize, BigUint)] {
        &self.counts
    }

    pub fn count(&self, i: usize) -> BigUint {
        self.counts
            .iter()
            .find(|(j, _)| *j == i)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    /// `{"engine": "...", "counts": [[i, "count"], ...]}` with decimal-string
    /// counts.
    pub fn to_json(&self) -> serde_json::Value {
        let counts: Vec<serde_json::Value> = self
            .counts
            .iter()
            .map(|(i, c)| serde_json::json!([i, c.to_string()]))
            .collect();
        serde_json::json!({ "engine": self.engine.name(), "counts": counts })
    }

    fn from_dense_u64(engine: Engine, dense: &[u64]) -> Self {
        let counts = dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, BigUint::from(c)))
            .collect();
        CoverTable::new(engine, counts)
    }

    fn from_dense_u128(engine: Engine, dense: &[u128]) -> Self {
        let counts = dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, BigUint::from(c)))
            .collect();
        CoverTable::new(engine, counts)
    }
}

fn unit_table(engine: Engine) -> CoverTable {
    CoverTable::new(engine, vec![(0, BigUint::from(1u32))])
}

fn zero_table(engine: Engine) -> CoverTable {
    CoverTable::new(engine, Vec::new())
}

/// Reference engine: walk every nonempty edge subset, keep those whose
/// endpoints reach all vertices. Exact for `m <= 25`.
pub fn count_covers_brute(g: &Graph) -> Result<CoverTable, EngineError> {
    let (n, m) = (g.order(), g.size());
    if m > BRUTE_MAX_EDGES {
        return Err(EngineError::TooManyEdges {
            m,
            max: BRUTE_MAX_EDGES,
        });
    }
    if n == 0 {
        return Ok(unit_table(Engine::Brute));
    }
    if g.has_isolated_vertex() {
        return Ok(zero_table(Engine::Brute));
    }
    let full: u64 = (1u64 << n) - 1;
    let masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect();

    // Split the edge set in half and precompute endpoint unions per half so
    // each subset costs two lookups instead of a walk over its bits.
    let lo_bits = m / 2;
    let lo_union = half_unions(&masks[..lo_bits]);
    let hi_union = half_unions(&masks[lo_bits..]);

    let total: u64 = 1u64 << m;
    let dense = par::fold_ranges(
        total,
        1 << 16,
        vec![0u64; m + 1],
        |range| {
            let mut local = vec![0u64; m + 1];
            for subset in range {
                let covered = lo_union[(subset & ((1 << lo_bits) - 1)) as usize]
                    | hi_union[(subset >> lo_bits) as usize];
                if covered == full {
                    local[subset.count_ones() as usize] += 1;
                }
            }
            local
        },
        |mut acc, part| {
            for (a, p) in acc.iter_mut().zip(part) {
                *a += p;
            }
            acc
        },
    );
    // The empty subset covers nothing once n > 0, so dense[0] is already 0.
    Ok(CoverTable::from_dense_u64(Engine::Brute, &dense))
}

fn half_unions(masks: &[u64]) -> Vec<u64> {
    let mut unions = vec![0u64; 1 << masks.len()];
    for s in 1..unions.len() {
        let low = s.trailing_zeros() as usize;
        unions[s] = unions[s & (s - 1)] | masks[low];
    }
    unions
}

/// Inclusion-exclusion over uncovered-vertex sets:
/// `e(G, i) = sum_S (-1)^|S| C(avoid(S), i)` where `avoid(S)` counts edges
/// with no endpoint in `S`. Subsets sharing an `avoid` value are bucketed
/// with machine integers; the binomials enter only at the very end.
pub fn count_covers_ie(g: &Graph) -> Result<CoverTable, EngineError> {
    let (n, m) = (g.order(), g.size());
    if n > IE_MAX_ORDER {
        return Err(EngineError::OrderTooLarge {
            n,
            max: IE_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(unit_table(Engine::InclusionExclusion));
    }
    if g.has_isolated_vertex() {
        return Ok(zero_table(Engine::InclusionExclusion));
    }

    // Signed subset counts per avoid value. Chunks fix the high vertex bits
    // and Gray-walk the low ones, so each flip updates avoid incrementally.
    let low_bits = n.min(18);
    let high_bits = n - low_bits;
    let chunks: u64 = 1 << high_bits;
    let net = par::fold_ranges(
        chunks,
        1,
        vec![0i64; m + 1],
        |range| {
            let mut local = vec![0i64; m + 1];
            for high in range {
                gray_walk(g, high << low_bits, low_bits, &mut local);
            }
            local
        },
        |mut acc, part| {
            for (a, p) in acc.iter_mut().zip(part) {
                *a += p;
            }
            acc
        },
    );

    let counts = assemble_ie(&net, m);
    Ok(CoverTable::new(Engine::InclusionExclusion, counts))
}

/// Visits every subset `base | gray` for `gray` over the low `low_bits`
/// vertices, accumulating `(-1)^|S|` into `net[avoid(S)]`.
fn gray_walk(g: &Graph, base: u64, low_bits: usize, net: &mut [i64]) {
    let mut s = base;
    let mut avoid = g
        .edges()
        .iter()
        .filter(|&&(u, v)| (s >> u) & 1 == 0 && (s >> v) & 1 == 0)
        .count();
    let mut sign: i64 = if s.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    };
    net[avoid] += sign;
    for step in 1u64..(1 << low_bits) {
        let v = step.trailing_zeros() as usize;
        if (s >> v) & 1 == 0 {
            // v enters S: edges at v not already killed by S stop avoiding.
            avoid -= g.degree(v) - ((g.adj(v) & s).count_ones() as usize);
            s |= 1 << v;
        } else {
            s &= !(1 << v);
            avoid += g.degree(v) - ((g.adj(v) & s).count_ones() as usize);
        }
        sign = -sign;
        net[avoid] += sign;
    }
}

fn assemble_ie(net: &[i64], m: usize) -> Vec<(usize, BigUint)> {
    let mut counts = Vec::new();
    for i in 0..=m {
        let mut acc = BigInt::zero();
        for (a, &w) in net.iter().enumerate() {
            if w != 0 {
                acc += BigInt::from(w) * BigInt::from(binomial(a, i));
            }
        }
        debug_assert!(acc >= BigInt::zero(), "cover count must be nonnegative");
        let val = acc
            .to_biguint()
            .expect("nonnegative by inclusion-exclusion");
        if !val.is_zero() {
            counts.push((i, val));
        }
    }
    counts
}

/// Dynamic program over covered-vertex states: process edges one at a time;
/// `dp[state][k]` counts k-edge subsets of the processed prefix whose
/// endpoints are exactly `state`. Runs in `O(m * 2^n)` state updates.
pub fn count_covers_dp(g: &Graph) -> Result<CoverTable, EngineError> {
    let (n, m) = (g.order(), g.size());
    if n > DP_MAX_ORDER {
        return Err(EngineError::OrderTooLarge {
            n,
            max: DP_MAX_ORDER,
        });
    }
    if m > DP_MAX_EDGES {
        return Err(EngineError::TooManyEdges {
            m,
            max: DP_MAX_EDGES,
        });
    }
    let entries = (1u64 << n) * (m as u64 + 1);
    if entries > DP_MAX_ENTRIES {
        return Err(EngineError::StateSpaceTooLarge {
            entries,
            limit: DP_MAX_ENTRIES,
        });
    }
    if n == 0 {
        return Ok(unit_table(Engine::Dp));
    }
    if g.has_isolated_vertex() {
        return Ok(zero_table(Engine::Dp));
    }

    let states = 1usize << n;
    let width = m + 1;
    let mut dp = vec![0u128; states * width];
    dp[0] = 1; // empty state, zero edges

    for &(u, v) in g.edges() {
        let mask = (1usize << u) | (1usize << v);
        // Descending state order lets the update run in place: a state is
        // folded into itself (both endpoints already covered) before any
        // lower state writes into it.
        for s in (0..states).rev() {
            let row = s * width;
            if s & mask == mask {
                for k in (0..m).rev() {
                    let add = dp[row + k];
                    if add != 0 {
                        dp[row + k + 1] += add;
                    }
                }
            } else {
                let target = (s | mask) * width;
                for k in (0..m).rev() {
                    let add = dp[row + k];
                    if add != 0 {
                        dp[target + k + 1] += add;
                    }
                }
            }
        }
    }

    let full_row = (states - 1) * width;
    Ok(CoverTable::from_dense_u128(
        Engine::Dp,
        &dp[full_row..full_row + width],
    ))
}

/// Runs the selected engine and wraps the table as a polynomial. A graph
/// with an isolated vertex yields the zero polynomial; the empty graph
/// yields the unit polynomial.
pub fn edge_cover_polynomial(g: &Graph, engine: Engine) -> Result<EcPolynomial, EngineError> {
    let table = match engine {
        Engine::Brute => count_covers_brute(g)?,
        Engine::InclusionExclusion => count_covers_ie(g)?,
        Engine::Dp => count_covers_dp(g)?,
    };
    Ok(EcPolynomial::from_cover_table(&table))
}

/// Every minimum edge cover, each as a sorted list of sorted vertex pairs,
/// the whole list in lexicographic order.
pub fn enumerate_minimum_covers(g: &Graph) -> Result<Vec<EdgeCover>, EngineError> {
    let (n, m) = (g.order(), g.size());
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    if g.has_isolated_vertex() {
        return Err(EngineError::IsolatedVertex);
    }
    if m > BRUTE_MAX_EDGES {
        return Err(EngineError::TooManyEdges {
            m,
            max: BRUTE_MAX_EDGES,
        });
    }
    let rho = g.edge_cover_number();
    let full: u64 = (1u64 << n) - 1;
    let masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect();
    // Suffix unions: what the remaining edges could still cover.
    let mut suffix = vec![0u64; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] | masks[i];
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(rho);
    min_cover_rec(g, &masks, &suffix, full, rho, 0, 0, &mut chosen, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn min_cover_rec(
    g: &Graph,
    masks: &[u64],
    suffix: &[u64],
    full: u64,
    rho: usize,
    next: usize,
    covered: u64,
    chosen: &mut Vec<usize>,
    out: &mut Vec<EdgeCover>,
) {
    if chosen.len() == rho {
        if covered == full {
            out.push(chosen.iter().map(|&i| g.edges()[i]).collect());
        }
        return;
    }
    let need = rho - chosen.len();
    if masks.len() - next < need {
        return;
    }
    if covered | suffix[next] != full {
        return;
    }
    for i in next..masks.len() {
        chosen.push(i);
        min_cover_rec(
            g,
            masks,
            suffix,
            full,
            rho,
            i + 1,
            covered | masks[i],
            chosen,
            out,
        );
        chosen.pop();
    }
}
