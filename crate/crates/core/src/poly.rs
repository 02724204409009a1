//! Exact polynomials with nonnegative arbitrary-precision coefficients, as
//! produced by the edge cover counting engines.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::engines::CoverTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
}

/// Exact binomial coefficient; out-of-range `k` gives 0.
pub fn binomial(m: usize, k: usize) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(m - t) / BigUint::from(t + 1);
    }
    acc
}

/// An edge cover polynomial: dense nonnegative coefficients indexed by
/// exponent. The zero polynomial (a graph with an isolated vertex) has an
/// empty coefficient vector; the unit polynomial (the empty graph) is the
/// single coefficient 1 at exponent 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EcPolynomial {
    coeffs: Vec<BigUint>,
}

impl EcPolynomial {
    pub fn zero() -> Self {
        EcPolynomial { coeffs: Vec::new() }
    }

    pub fn unit() -> Self {
        EcPolynomial {
            coeffs: vec![BigUint::one()],
        }
    }

    /// Builds from dense coefficients (index = exponent), trimming any zero
    /// tail so the leading coefficient is nonzero.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EcPolynomial { coeffs }
    }

    /// Polynomial with exactly the cover table's counts.
    pub fn from_cover_table(table: &CoverTable) -> Self {
        let m = table.counts().last().map_or(0, |&(i, _)| i);
        let mut coeffs = vec![BigUint::zero(); m + 1];
        for (i, count) in table.counts() {
            coeffs[*i] = count.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// The closed form `x^a (1+x)^b`, expanded.
    pub fn monomial_times_binomial_power(a: usize, b: usize) -> Self {
        let coeffs = (0..a)
            .map(|_| BigUint::zero())
            .chain((0..=b).map(|k| binomial(b, k)))
            .collect();
        EcPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the leading term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Dense coefficient slice, constant term first. Empty for zero.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Exact convolution product.
    pub fn multiply(&self, other: &EcPolynomial) -> EcPolynomial {
        if self.is_zero() || other.is_zero() {
            return EcPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        EcPolynomial::from_coeffs(coeffs)
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn evaluate(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + BigInt::from(c.clone());
        }
        acc
    }

    /// Recognizes the exact closed form `p = x^a (1+x)^b`, coefficient by
    /// coefficient. Returns `None` when `p` is not of that shape.
    pub fn as_monomial_times_binomial_power(&self) -> Result<Option<(usize, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let a = self.low_degree().expect("nonzero");
        let m = self.degree().expect("nonzero");
        let b = m - a;
        for k in 0..=b {
            if self.coeffs[a + k] != binomial(b, k) {
                return Ok(None);
            }
        }
        Ok(Some((a, b)))
    }

    /// JSON form with coefficients as decimal strings:
    /// `{"m": int, "rho": int, "coeffs": [[i, "e_i"], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| serde_json::json!([i, c.to_string()]))
            .collect();
        serde_json::json!({
            "m": self.degree().unwrap_or(0),
            "rho": self.low_degree().unwrap_or(0),
            "coeffs": coeffs,
        })
    }
}

impl std::fmt::Display for EcPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}
