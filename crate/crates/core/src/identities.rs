//! Validators for the closed-form identities linking a graph's edge cover
//! polynomial to its degree data: tail binomials, the coefficient lower
//! bound and its equality range, the tail recurrence, degree-count
//! recovery, the regularity criterion, and the corona closed form.
//!
//! Everything is exact integer arithmetic: identities stated with rational
//! factors are multiplied through by their denominators before comparison,
//! so there is no tolerance anywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::engines::{edge_cover_polynomial, Engine, EngineError};
use crate::graph::{Graph, GraphError};
use crate::poly::{binomial, EcPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero or unit polynomial carries no structure to infer")]
    ZeroOrUnitPolynomial,
    #[error("minimum degree {delta} is below 2, criterion does not apply")]
    DeltaTooSmall { delta: usize },
    #[error("identity produced a non-integer or negative term at k={k}")]
    NonIntegerTerm { k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Size, covering number, and minimum degree, read off a polynomial alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InferredQuantities {
    pub m: usize,
    pub rho: usize,
    pub delta: usize,
}

/// Reads `m` (degree), `rho` (lowest nonzero exponent), and `delta` off a
/// monic polynomial: `delta = m - i0 + 1` where `i0` is the least exponent
/// whose coefficient already equals the plain binomial `C(m, i0)`.
pub fn infer_from_polynomial(p: &EcPolynomial) -> Result<InferredQuantities, IdentityError> {
    if p.is_zero() || p.is_unit() {
        return Err(IdentityError::ZeroOrUnitPolynomial);
    }
    let m = p.degree().expect("nonzero");
    if p.coeff(m) != BigUint::from(1u32) {
        return Err(IdentityError::NotMonic);
    }
    let rho = p.low_degree().expect("nonzero");
    let i0 = (0..=m)
        .find(|&i| p.coeff(i) == binomial(m, i))
        .expect("coefficient at m is 1 = C(m, m)");
    Ok(InferredQuantities {
        m,
        rho,
        delta: m - i0 + 1,
    })
}

/// Regularity criterion for `delta >= 2`: the graph is regular iff
/// `e(m - delta) = C(m, delta) - 2m/delta`, compared here multiplied
/// through by `delta`.
pub fn check_regularity(p: &EcPolynomial, m: usize, delta: usize) -> Result<bool, IdentityError> {
    if delta < 2 {
        return Err(IdentityError::DeltaTooSmall { delta });
    }
    let lhs = BigInt::from(delta) * BigInt::from(p.coeff(m - delta));
    let rhs = BigInt::from(delta) * BigInt::from(binomial(m, delta)) - BigInt::from(2 * m);
    Ok(lhs == rhs)
}

/// Outcome of a single identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::NotApplicable(_) => "not_applicable",
        }
    }
}

/// Tail recurrence, multiplied through by `i + 1`:
/// `(i+1) e(i+1) = (m-i) e(i) + sum_v d(v) C(m - d(v), i)`
/// for every `i` from `m - 2*delta + 2` through `m - 1`.
pub fn check_tail_recurrence(p: &EcPolynomial, g: &Graph) -> Verdict {
    if g.order() == 0 || g.has_isolated_vertex() {
        return Verdict::NotApplicable("graph has no edge cover polynomial structure".into());
    }
    let m = g.size();
    let delta = g.degree_stats().delta.expect("nonempty");
    let start = (m + 2).saturating_sub(2 * delta);
    if start >= m {
        return Verdict::NotApplicable(format!("empty range: start {start} >= m {m}"));
    }
    for i in start..m {
        let lhs = BigInt::from(i + 1) * BigInt::from(p.coeff(i + 1));
        let mut rhs = BigInt::from(m - i) * BigInt::from(p.coeff(i));
        for v in 0..g.order() {
            let d = g.degree(v);
            rhs += BigInt::from(d) * BigInt::from(binomial(m - d, i));
        }
        if lhs != rhs {
            return Verdict::Fail(format!("recurrence fails at i={i}: {lhs} != {rhs}"));
        }
    }
    Verdict::Pass
}

/// Recovers `a_1 ... a_{2*delta - 2}` from the polynomial, via the exact
/// recurrence (multiplied through by `k`):
/// `k a_k = (m-k+1) e(m-k+1) - k e(m-k) - sum_{j<k} j a_j C(m-j, m-k)`.
pub fn recover_degree_counts(
    p: &EcPolynomial,
    m: usize,
    delta: usize,
) -> Result<Vec<(usize, BigUint)>, IdentityError> {
    let mut recovered: Vec<(usize, BigUint)> = Vec::new();
    if delta < 2 {
        return Ok(recovered); // the range 1..=2*delta-2 is empty
    }
    for k in 1..=(2 * delta - 2) {
        let mut acc = BigInt::from(m - k + 1) * BigInt::from(p.coeff(m - k + 1))
            - BigInt::from(k) * BigInt::from(p.coeff(m - k));
        for &(j, ref aj) in &recovered {
            acc -=
                BigInt::from(j) * BigInt::from(aj.clone()) * BigInt::from(binomial(m - j, m - k));
        }
        if acc < BigInt::zero() || (&acc % BigInt::from(k)) != BigInt::zero() {
            return Err(IdentityError::NonIntegerTerm { k });
        }
        let ak = (acc / BigInt::from(k))
            .to_biguint()
            .expect("nonnegative checked");
        recovered.push((k, ak));
    }
    Ok(recovered)
}

/// `a_delta = C(m, m - delta) - e(m - delta)`, valid whenever no connected
/// component is a single edge.
pub fn min_degree_count(
    p: &EcPolynomial,
    m: usize,
    delta: usize,
) -> Result<BigUint, IdentityError> {
    let lhs = BigInt::from(binomial(m, m - delta)) - BigInt::from(p.coeff(m - delta));
    lhs.to_biguint()
        .ok_or(IdentityError::NonIntegerTerm { k: delta })
}

/// True when some connected component is a single edge.
pub fn has_single_edge_component(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
}

/// Engine-computed polynomial of the corona with `i` pendant copies equals
/// the closed form `x^{i n} (1 + x)^m` coefficient for coefficient.
pub fn check_corona_identity(g: &Graph, i: usize, engine: Engine) -> Result<bool, IdentityError> {
    let corona = g.corona_empty(i)?;
    let computed = edge_cover_polynomial(&corona, engine)?;
    let closed = EcPolynomial::monomial_times_binomial_power(i * g.order(), g.size());
    Ok(computed == closed)
}

/// Every iterated corona up to `depth` has a polynomial of the exact shape
/// `x^a (1 + x)^b`, i.e. roots only at -1 and 0.
pub fn check_root_family(
    g: &Graph,
    i: usize,
    depth: usize,
    engine: Engine,
) -> Result<bool, IdentityError> {
    assert!(depth >= 1, "depth must be positive");
    let mut current = g.clone();
    for _ in 0..depth {
        current = current.corona_empty(i)?;
        let p = edge_cover_polynomial(&current, engine)?;
        if p.as_monomial_times_binomial_power()?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One named check inside an [`IdentityReport`].
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    /// Machine-friendly check id.
    pub name: &'static str,
    /// The identity being checked, written out.
    pub anchor: &'static str,
    pub verdict: Verdict,
}

/// Everything the identity validators can say about one graph/polynomial
/// pair, plus the quantities inferred from the polynomial alone.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub derived: Option<InferredQuantities>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.verdict, Verdict::Fail(_)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = serde_json::json!({
                    "check": c.name,
                    "anchor": c.anchor,
                    "status": c.verdict.status(),
                });
                match &c.verdict {
                    Verdict::Fail(d) | Verdict::NotApplicable(d) => {
                        v["details"] = serde_json::json!(d);
                    }
                    Verdict::Pass => {}
                }
                v
            })
            .collect();
        let derived = self
            .derived
            .map(|d| serde_json::json!({"m": d.m, "rho": d.rho, "delta": d.delta}));
        serde_json::json!({ "derived": derived, "checks": checks })
    }
}

/// Runs every applicable identity check on `g` against the polynomial the
/// selected engine computes for it.
pub fn identity_report(g: &Graph, engine: Engine) -> Result<IdentityReport, IdentityError> {
    let p = edge_cover_polynomial(g, engine)?;
    let mut checks = Vec::new();
    let push = |checks: &mut Vec<IdentityCheck>, name, anchor, verdict| {
        checks.push(IdentityCheck {
            name,
            anchor,
            verdict,
        });
    };

    if g.order() == 0 {
        push(
            &mut checks,
            "empty_graph_unit",
            "E = 1 when the graph has no vertices",
            if p.is_unit() {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("expected 1, computed {p}"))
            },
        );
        return Ok(IdentityReport {
            checks,
            derived: None,
        });
    }
    if g.has_isolated_vertex() {
        push(
            &mut checks,
            "isolated_vertex_zero",
            "E = 0 when some vertex is isolated",
            if p.is_zero() {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("expected 0, computed {p}"))
            },
        );
        return Ok(IdentityReport {
            checks,
            derived: None,
        });
    }

    let stats = g.degree_stats();
    let m = g.size();
    let n = g.order();
    let delta = stats.delta.expect("nonempty graph");
    let rho = g.edge_cover_number();

    push(
        &mut checks,
        "monic_degree",
        "E is monic of degree m",
        if p.degree() == Some(m) && p.coeff(m) == BigUint::from(1u32) {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("degree {:?}, leading {}", p.degree(), p.coeff(m)))
        },
    );

    push(
        &mut checks,
        "order_bound",
        "n <= 2*rho",
        if n <= 2 * rho {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("n={n} > 2*rho={}", 2 * rho))
        },
    );

    // Tail binomials plus recovery of m, rho, delta from the polynomial.
    let inferred = infer_from_polynomial(&p)?;
    let tail_ok = ((m + 1).saturating_sub(delta)..=m).all(|i| p.coeff(i) == binomial(m, i));
    push(
        &mut checks,
        "tail_binomial",
        "e(i) = C(m,i) for i > m - delta, and delta = m - i0 + 1",
        if tail_ok && inferred == (InferredQuantities { m, rho, delta }) {
            Verdict::Pass
        } else {
            Verdict::Fail(format!(
                "inferred (m,rho,delta) = ({}, {}, {}), structural ({m}, {rho}, {delta})",
                inferred.m, inferred.rho, inferred.delta
            ))
        },
    );

    // Lower bound everywhere, equality on the stated range.
    let bound_at = |i: usize| -> BigInt {
        let mut b = BigInt::from(binomial(m, i));
        for v in 0..n {
            b -= BigInt::from(binomial(m - g.degree(v), i));
        }
        b
    };
    let mut lower = Verdict::Pass;
    for i in 0..=m {
        if BigInt::from(p.coeff(i)) < bound_at(i) {
            lower = Verdict::Fail(format!("bound violated at i={i}"));
            break;
        }
    }
    push(
        &mut checks,
        "coefficient_lower_bound",
        "e(i) >= C(m,i) - sum_v C(m - d(v), i)",
        lower,
    );

    let eq_start = (m + 2).saturating_sub(2 * delta);
    let mut equality = Verdict::Pass;
    if eq_start > m {
        equality = Verdict::NotApplicable("empty range".into());
    } else {
        for i in eq_start..=m {
            if BigInt::from(p.coeff(i)) != bound_at(i) {
                equality = Verdict::Fail(format!("equality fails at i={i}"));
                break;
            }
        }
    }
    push(
        &mut checks,
        "coefficient_equality_range",
        "e(i) = C(m,i) - sum_v C(m - d(v), i) for i >= m - 2*delta + 2",
        equality,
    );

    push(
        &mut checks,
        "tail_recurrence",
        "(i+1) e(i+1) = (m-i) e(i) + sum_v d(v) C(m - d(v), i) for i >= m - 2*delta + 2",
        check_tail_recurrence(&p, g),
    );

    let recovery = match recover_degree_counts(&p, m, delta) {
        Err(e) => Verdict::Fail(format!("recovery produced a non-count: {e}")),
        Ok(recovered) => {
            match recovered
                .iter()
                .find(|(k, ak)| BigUint::from(stats.a(*k)) != *ak)
            {
                Some((k, ak)) => {
                    Verdict::Fail(format!("a_{k}: recovered {ak}, structural {}", stats.a(*k)))
                }
                None => Verdict::Pass,
            }
        }
    };
    push(
        &mut checks,
        "degree_count_recovery",
        "k a_k = (m-k+1) e(m-k+1) - k e(m-k) - sum_{j<k} j a_j C(m-j, m-k) for k <= 2*delta - 2",
        recovery,
    );

    let min_degree = if has_single_edge_component(g) {
        Verdict::NotApplicable("graph has a single-edge component".into())
    } else {
        match min_degree_count(&p, m, delta) {
            Ok(a) if a == BigUint::from(stats.a(delta)) => Verdict::Pass,
            Ok(a) => Verdict::Fail(format!(
                "a_delta: recovered {a}, structural {}",
                stats.a(delta)
            )),
            Err(e) => Verdict::Fail(format!("{e}")),
        }
    };
    push(
        &mut checks,
        "min_degree_count",
        "a_delta = C(m, m - delta) - e(m - delta)",
        min_degree,
    );

    let regularity = if delta < 2 {
        Verdict::NotApplicable("delta < 2".into())
    } else {
        match check_regularity(&p, m, delta) {
            Ok(verdict) if verdict == stats.regular_k.is_some() => Verdict::Pass,
            Ok(verdict) => Verdict::Fail(format!(
                "criterion says regular={verdict}, structure says {}",
                stats.regular_k.is_some()
            )),
            Err(e) => Verdict::Fail(format!("{e}")),
        }
    };
    push(
        &mut checks,
        "regularity_criterion",
        "for delta >= 2: regular iff delta*e(m - delta) = delta*C(m, delta) - 2m",
        regularity,
    );

    // The aggregate report caps this extra check at corona order 20 to stay
    // fast; check_corona_identity itself runs at any size an engine accepts.
    let corona = if 2 * n > 20 {
        Verdict::NotApplicable(format!(
            "corona order {} skipped in aggregate report",
            2 * n
        ))
    } else {
        match check_corona_identity(g, 1, Engine::InclusionExclusion) {
            Ok(true) => Verdict::Pass,
            Ok(false) => Verdict::Fail("corona polynomial differs from x^n (1+x)^m".into()),
            Err(e) => Verdict::Fail(format!("{e}")),
        }
    };
    push(
        &mut checks,
        "corona_closed_form",
        "E(G with one pendant per vertex) = x^n (1+x)^m",
        corona,
    );

    Ok(IdentityReport {
        checks,
        derived: Some(inferred),
    })
}
