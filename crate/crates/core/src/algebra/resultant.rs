//! Sylvester resultants and the resultant-based quartic discriminant.
//!
//! This is the independent route to the explicit 16-term discriminant in
//! `pencil::quartic_discriminant`; the two must never share code.

use super::ring::{Field, Scalar};
use crate::error::{Error, Result};
use crate::matrix::bareiss_det;

/// Univariate polynomial, coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

/// Determinant of the Sylvester matrix of `p` and `q`.
///
/// Both inputs must be nonzero with degree at least 1.
pub fn resultant<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> Result<F> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    if m == 0 || n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let size = m + n;
    let mut rows = vec![vec![F::zero(); size]; size];
    // n shifted copies of p, then m shifted copies of q; leading
    // coefficient first in each row.
    for i in 0..n {
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    Ok(bareiss_det(rows))
}

/// Discriminant of the monic quartic `t⁴ − a t³ + b t² − c t + d`,
/// computed as `Res(P, P′)`.
///
/// For a monic quartic the general factor `(−1)^{n(n−1)/2} / lc` is `+1`.
pub fn quartic_discriminant_oracle(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Scalar {
    let p = UniPoly::new(vec![
        d.clone(),
        -c.clone(),
        b.clone(),
        -a.clone(),
        Scalar::from_integer(1.into()),
    ]);
    let dp = p.derivative();
    resultant(&p, &dp).expect("monic quartic and its cubic derivative are nonconstant")
}
