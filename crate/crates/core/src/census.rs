//! Cubic graph census: generate all 3-regular graphs of a small even order
//! up to isomorphism, compute their edge cover polynomials, and partition
//! any corpus into classes of polynomial-equal graphs.

use std::collections::HashMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::engines::{
    edge_cover_polynomial, enumerate_minimum_covers, EdgeCover, Engine, EngineError,
};
use crate::graph::{Graph, GraphError};
use crate::par;
use crate::poly::EcPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("cubic graphs need an even order, got {0}")]
    OddOrder(usize),
    #[error("order {n} outside supported range {lo}..={hi}")]
    OrderOutOfRange { n: usize, lo: usize, hi: usize },
    #[error("only degree 3 is supported, got {0}")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

pub const MIN_CUBIC_ORDER: usize = 4;
pub const MAX_CUBIC_ORDER: usize = 12;

/// All 3-regular simple graphs on `n` vertices, one per isomorphism class,
/// sorted by canonical code. Disconnected graphs are included.
pub fn generate_cubic(n: usize) -> Result<Vec<Graph>, CensusError> {
    if !n.is_multiple_of(2) {
        return Err(CensusError::OddOrder(n));
    }
    if !(MIN_CUBIC_ORDER..=MAX_CUBIC_ORDER).contains(&n) {
        return Err(CensusError::OrderOutOfRange {
            n,
            lo: MIN_CUBIC_ORDER,
            hi: MAX_CUBIC_ORDER,
        });
    }
    let mut gen = CubicGen::new(n);
    // Up to relabeling, vertex 0 is adjacent to exactly 1, 2, 3; fixing that
    // cuts the labeled search space by a factor of C(n-1, 3).
    gen.adj[0] = 0b1110;
    for v in 1..=3 {
        gen.adj[v] = 1;
        gen.deg[v] = 1;
    }
    gen.deg[0] = 3;
    gen.touched = 4;
    gen.recurse();
    let mut reps: Vec<(CanonicalCode, Graph)> = gen.found.into_iter().collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(reps.into_iter().map(|(_, g)| g).collect())
}

struct CubicGen {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
    /// Vertices with at least one edge so far; untouched vertices are
    /// interchangeable, so new neighbors are always taken as a prefix of them.
    touched: usize,
    found: HashMap<CanonicalCode, Graph>,
}

impl CubicGen {
    fn new(n: usize) -> Self {
        CubicGen {
            n,
            adj: vec![0; n],
            deg: vec![0; n],
            touched: 0,
            found: HashMap::new(),
        }
    }

    fn recurse(&mut self) {
        // Lowest vertex still short of degree 3; vertices below it are done,
        // so all its missing edges go to higher-labeled vertices.
        let v = match self.deg.iter().position(|&d| d < 3) {
            None => {
                self.emit();
                return;
            }
            Some(v) => v,
        };
        let saved_touched = self.touched;
        if v >= self.touched {
            // v starts a new component; untouched vertices are
            // interchangeable, so it is always the next fresh label.
            debug_assert_eq!(v, self.touched);
            self.touched = v + 1;
        }
        let need = 3 - self.deg[v];
        // Candidates among touched vertices, plus at most `need` fresh ones.
        let mut candidates: Vec<usize> = (v + 1..self.touched)
            .filter(|&u| self.deg[u] < 3 && (self.adj[v] >> u) & 1 == 0)
            .collect();
        let fresh = (self.n - self.touched).min(need);
        for t in 0..fresh {
            candidates.push(self.touched + t);
        }
        if candidates.len() >= need {
            let mut choice = Vec::with_capacity(need);
            self.choose_neighbors(v, need, 0, &candidates, &mut choice);
        }
        self.touched = saved_touched;
    }

    fn choose_neighbors(
        &mut self,
        v: usize,
        need: usize,
        from: usize,
        candidates: &[usize],
        choice: &mut Vec<usize>,
    ) {
        if choice.len() == need {
            // Untouched picks must form a prefix of the untouched block:
            // skipping an interchangeable vertex only duplicates work.
            let mut next_fresh = self.touched;
            for &u in choice.iter() {
                if u >= self.touched {
                    if u != next_fresh {
                        return;
                    }
                    next_fresh += 1;
                }
            }
            let saved_touched = self.touched;
            for &u in choice.iter() {
                self.adj[v] |= 1 << u;
                self.adj[u] |= 1 << v;
                self.deg[u] += 1;
            }
            self.deg[v] = 3;
            self.touched = next_fresh;
            self.recurse();
            self.touched = saved_touched;
            self.deg[v] -= need;
            for &u in choice.iter() {
                self.adj[v] &= !(1 << u);
                self.adj[u] &= !(1 << v);
                self.deg[u] -= 1;
            }
            return;
        }
        for idx in from..candidates.len() {
            if candidates.len() - idx < need - choice.len() {
                return;
            }
            choice.push(candidates[idx]);
            self.choose_neighbors(v, need, idx + 1, candidates, choice);
            choice.pop();
        }
    }

    fn emit(&mut self) {
        let mut pairs = Vec::with_capacity(3 * self.n / 2);
        for u in 0..self.n {
            let mut t = self.adj[u] >> (u + 1);
            while t != 0 {
                let v = u + 1 + t.trailing_zeros() as usize;
                t &= t - 1;
                pairs.push((u, v));
            }
        }
        let g = Graph::from_edge_list(self.n, &pairs).expect("generator emits valid graphs");
        let code = canonical_code(&g).expect("order within canon limit");
        self.found.entry(code).or_insert(g);
    }
}

/// A set of graphs sharing one edge cover polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub polynomial: EcPolynomial,
    /// Canonical codes of the members, sorted and duplicate-free.
    pub members: Vec<CanonicalCode>,
}

/// Groups graphs by exact polynomial equality. Classes are ordered by
/// lowest nonzero exponent, then lexicographic coefficients; members are
/// sorted by canonical code. Isomorphic duplicates collapse to one entry.
pub fn partition_by_polynomial(
    graphs: &[Graph],
    engine: Engine,
) -> Result<Vec<EquivClass>, CensusError> {
    let polys: Vec<Result<EcPolynomial, EngineError>> =
        par::map_ordered(graphs, |g| edge_cover_polynomial(g, engine));
    let mut classes: HashMap<Vec<BigUint>, Vec<CanonicalCode>> = HashMap::new();
    for (g, poly) in graphs.iter().zip(polys) {
        let poly = poly?;
        let code = canonical_code(g)?;
        let members = classes.entry(poly.coeffs().to_vec()).or_default();
        if !members.contains(&code) {
            members.push(code);
        }
    }
    let mut out: Vec<EquivClass> = classes
        .into_iter()
        .map(|(coeffs, mut members)| {
            members.sort();
            EquivClass {
                polynomial: EcPolynomial::from_coeffs(coeffs),
                members,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        let ka = (a.polynomial.low_degree(), a.polynomial.coeffs());
        let kb = (b.polynomial.low_degree(), b.polynomial.coeffs());
        ka.cmp(&kb)
    });
    Ok(out)
}

/// Census of all k-regular graphs of order `n`: coefficient matrix plus the
/// polynomial-equality partition.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub order: usize,
    pub degree: usize,
    /// Canonical codes, sorted; row `i` of `matrix` belongs to `graphs[i]`.
    pub graphs: Vec<CanonicalCode>,
    pub connected: Vec<bool>,
    /// Coefficients `e(rho) ..= e(m)` per graph.
    pub matrix: Vec<Vec<BigUint>>,
    pub classes: Vec<EquivClass>,
    /// Common lowest exponent rho = n/2 and degree m = k*n/2.
    pub rho: usize,
    pub m: usize,
}

impl CensusReport {
    pub fn is_determining(&self) -> bool {
        self.classes.iter().all(|c| c.members.len() == 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let matrix: Vec<serde_json::Value> = self
            .matrix
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|c| serde_json::json!(c.to_string()))
                        .collect(),
                )
            })
            .collect();
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                serde_json::json!({
                    "polynomial": c.polynomial.to_json(),
                    "members": c.members.iter().map(|m| m.as_str()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "order": self.order,
            "degree": self.degree,
            "rho": self.rho,
            "m": self.m,
            "graphs": self.graphs.iter().map(|g| g.as_str()).collect::<Vec<_>>(),
            "connected": self.connected,
            "matrix": matrix,
            "classes": classes,
        })
    }

    /// CSV with one row per graph: code, connectivity, then `e(rho)..e(m)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph,connected");
        for j in self.rho..=self.m {
            out.push_str(&format!(",j{j}"));
        }
        out.push('\n');
        for ((code, row), conn) in self.graphs.iter().zip(&self.matrix).zip(&self.connected) {
            out.push_str(code.as_str());
            out.push(',');
            out.push_str(if *conn { "1" } else { "0" });
            for c in row {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Runs the full census for degree-`k` graphs of order `n` (currently k=3).
pub fn census_report(n: usize, k: usize, engine: Engine) -> Result<CensusReport, CensusError> {
    if k != 3 {
        return Err(CensusError::UnsupportedDegree(k));
    }
    let graphs = generate_cubic(n)?;
    let rho = n / 2;
    let m = 3 * n / 2;
    let polys: Vec<Result<EcPolynomial, EngineError>> =
        par::map_ordered(&graphs, |g| edge_cover_polynomial(g, engine));
    let mut matrix = Vec::with_capacity(graphs.len());
    for poly in polys {
        let poly = poly?;
        debug_assert_eq!(poly.low_degree(), Some(rho));
        debug_assert_eq!(poly.degree(), Some(m));
        matrix.push((rho..=m).map(|i| poly.coeff(i)).collect());
    }
    let codes: Vec<CanonicalCode> = graphs
        .iter()
        .map(|g| canonical_code(g).expect("census orders fit canon"))
        .collect();
    let connected: Vec<bool> = graphs.iter().map(|g| g.is_connected()).collect();
    let classes = partition_by_polynomial(&graphs, engine)?;
    Ok(CensusReport {
        order: n,
        degree: k,
        graphs: codes,
        connected,
        matrix,
        classes,
        rho,
        m,
    })
}

/// Per-graph minimum covers for the degree-`k` census of order `n`:
/// `(canonical code, connected, covers)`, where `covers.len() = e(G, rho)`.
pub fn min_cover_census(
    n: usize,
    k: usize,
) -> Result<Vec<(CanonicalCode, bool, Vec<EdgeCover>)>, CensusError> {
    if k != 3 {
        return Err(CensusError::UnsupportedDegree(k));
    }
    let graphs = generate_cubic(n)?;
    let covers: Vec<Result<Vec<EdgeCover>, EngineError>> =
        par::map_ordered(&graphs, enumerate_minimum_covers);
    graphs
        .iter()
        .zip(covers)
        .map(|(g, c)| {
            Ok((
                canonical_code(g).expect("census orders fit canon"),
                g.is_connected(),
                c?,
            ))
        })
        .collect()
}

pub mod golden {
    //! Comparison of a census against a golden coefficient CSV.
    //!
    //! Golden format: header `graph,j5,...,j15[,note]`, one row per graph.
    //! Row labels are informational only; the comparison is on the multiset
    //! of coefficient rows. A cell under dispute between two published
    //! values is annotated in its row's `note` column as `jK:alt=VALUE`:
    //! that cell is excluded from strict equality and the comparison reports
    //! which of the two recorded values the computed census supports.

    use super::CensusReport;
    use num_bigint::BigUint;
    use std::collections::BTreeMap;

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct GoldenRow {
        pub label: String,
        /// Coefficient per column exponent.
        pub cells: Vec<(usize, BigUint)>,
        /// Disputed cells: exponent -> alternative recorded value.
        pub alternates: BTreeMap<usize, BigUint>,
    }

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct GoldenTable {
        pub exponents: Vec<usize>,
        pub rows: Vec<GoldenRow>,
    }

    #[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
    pub enum GoldenError {
        #[error("golden csv: {0}")]
        Malformed(String),
    }

    pub fn parse(text: &str) -> Result<GoldenTable, GoldenError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GoldenError::Malformed("empty file".into()))?;
        let fields: Vec<&str> = header.split(',').collect();
        if fields.first() != Some(&"graph") {
            return Err(GoldenError::Malformed(
                "header must start with 'graph'".into(),
            ));
        }
        let has_note = fields.last() == Some(&"note");
        let coeff_fields = &fields[1..fields.len() - usize::from(has_note)];
        let exponents: Vec<usize> = coeff_fields
            .iter()
            .map(|f| {
                f.strip_prefix('j')
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| GoldenError::Malformed(format!("bad column {f:?}")))
            })
            .collect::<Result<_, _>>()?;
        let mut rows = Vec::new();
        for line in lines {
            let cells: Vec<&str> = line.split(',').collect();
            let expected = 1 + exponents.len();
            if cells.len() != expected && cells.len() != expected + usize::from(has_note) {
                return Err(GoldenError::Malformed(format!(
                    "row {:?} has {} fields, expected {expected}",
                    cells.first().unwrap_or(&""),
                    cells.len()
                )));
            }
            let label = cells[0].to_string();
            let values: Vec<(usize, BigUint)> = exponents
                .iter()
                .zip(&cells[1..1 + exponents.len()])
                .map(|(&j, cell)| {
                    cell.trim()
                        .parse::<BigUint>()
                        .map(|v| (j, v))
                        .map_err(|_| GoldenError::Malformed(format!("bad value {cell:?}")))
                })
                .collect::<Result<_, _>>()?;
            let mut alternates = BTreeMap::new();
            if cells.len() == expected + 1 {
                for ann in cells[expected].split(';').filter(|a| !a.trim().is_empty()) {
                    let (col, alt) = ann
                        .trim()
                        .split_once(":alt=")
                        .ok_or_else(|| GoldenError::Malformed(format!("bad note {ann:?}")))?;
                    let j: usize = col
                        .strip_prefix('j')
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| {
                            GoldenError::Malformed(format!("bad note column {col:?}"))
                        })?;
                    let v: BigUint = alt
                        .parse()
                        .map_err(|_| GoldenError::Malformed(format!("bad note value {alt:?}")))?;
                    alternates.insert(j, v);
                }
            }
            rows.push(GoldenRow {
                label,
                cells: values,
                alternates,
            });
        }
        Ok(GoldenTable { exponents, rows })
    }

    /// What happened at one annotated (disputed) cell.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct DisputeReport {
        pub row_label: String,
        pub exponent: usize,
        pub computed: BigUint,
        pub primary: BigUint,
        pub alternate: BigUint,
        /// Which recorded value the computation supports, if either.
        pub supports: Option<Support>,
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum Support {
        Primary,
        Alternate,
    }

    #[derive(Debug, Clone)]
    pub struct Comparison {
        /// Multiset of rows matches, disputed cells aside.
        pub matches: bool,
        pub disputes: Vec<DisputeReport>,
        /// Human-readable mismatch descriptions when `matches` is false.
        pub mismatches: Vec<String>,
    }

    /// Multiset comparison of the census coefficient rows against the golden
    /// table, excluding annotated cells and reporting which recorded value
    /// each annotated cell supports.
    pub fn compare(report: &CensusReport, golden: &GoldenTable) -> Comparison {
        let mut mismatches = Vec::new();
        let expected_cols: Vec<usize> = (report.rho..=report.m).collect();
        if golden.exponents != expected_cols {
            mismatches.push(format!(
                "column mismatch: golden {:?}, census j{}..j{}",
                golden.exponents, report.rho, report.m
            ));
            return Comparison {
                matches: false,
                disputes: Vec::new(),
                mismatches,
            };
        }
        if golden.rows.len() != report.matrix.len() {
            mismatches.push(format!(
                "row count mismatch: golden {}, census {}",
                golden.rows.len(),
                report.matrix.len()
            ));
        }

        // Greedy multiset matching: pair each golden row with an unused
        // census row equal on every non-annotated cell.
        let mut used = vec![false; report.matrix.len()];
        let mut disputes = Vec::new();
        for row in &golden.rows {
            let candidate = report.matrix.iter().enumerate().find(|(idx, census_row)| {
                !used[*idx]
                    && row.cells.iter().enumerate().all(|(col, (j, val))| {
                        row.alternates.contains_key(j) || census_row[col] == *val
                    })
            });
            match candidate {
                Some((idx, census_row)) => {
                    used[idx] = true;
                    for (col, (j, primary)) in row.cells.iter().enumerate() {
                        if let Some(alt) = row.alternates.get(j) {
                            let computed = census_row[col].clone();
                            let supports = if computed == *primary {
                                Some(Support::Primary)
                            } else if computed == *alt {
                                Some(Support::Alternate)
                            } else {
                                None
                            };
                            if supports.is_none() {
                                mismatches.push(format!(
                                    "row {} j{j}: computed {computed} matches neither {primary} nor {alt}",
                                    row.label
                                ));
                            }
                            disputes.push(DisputeReport {
                                row_label: row.label.clone(),
                                exponent: *j,
                                computed,
                                primary: primary.clone(),
                                alternate: alt.clone(),
                                supports,
                            });
                        }
                    }
                }
                None => mismatches.push(format!(
                    "golden row {} has no matching census row",
                    row.label
                )),
            }
        }
        Comparison {
            matches: mismatches.is_empty(),
            disputes,
            mismatches,
        }
    }
}
