//! Coefficient ring abstractions shared by the matrix and pencil code.
//!
//! Everything in this crate is a ℚ-algebra, so a ring only has to know how
//! to embed a rational constant. The numeric layer reuses the same traits
//! with `Complex64` so the fixed-size matrix code is written once.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
pub use num_traits::{One, Zero};
use num_traits::{Signed, ToPrimitive};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Scalar) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Scalar::from_integer(BigInt::from(n)))
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Multiplication by a rational constant.
    fn scale(&self, r: &Scalar) -> Self {
        self.clone() * Self::from_rational(r)
    }
}

pub trait Field: Ring + Div<Output = Self> {
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Scalar {
    fn from_rational(r: &Scalar) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Scalar) -> Self {
        self * r
    }
}

impl Field for Scalar {
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for Complex64 {
    fn from_rational(r: &Scalar) -> Self {
        Complex64::new(scalar_to_f64(r), 0.0)
    }
}

impl Field for Complex64 {
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}

/// Fields in which the normalization steps can ask for square roots.
pub trait SqrtField: Field {
    /// Below this magnitude (relative to the data) an entry counts as zero.
    const EPS: f64;

    fn try_sqrt(&self) -> crate::Result<Self>;

    fn magnitude(&self) -> f64;
}

impl SqrtField for Scalar {
    const EPS: f64 = 0.0;

    fn try_sqrt(&self) -> crate::Result<Self> {
        rational_sqrt(self)
            .ok_or_else(|| crate::Error::NeedsNumericExtension(super::format_scalar(self)))
    }

    fn magnitude(&self) -> f64 {
        scalar_to_f64(&self.abs())
    }
}

impl SqrtField for Complex64 {
    const EPS: f64 = 1e-12;

    fn try_sqrt(&self) -> crate::Result<Self> {
        Ok(self.sqrt())
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Nearest double; falls back to a scaled quotient when either part
/// overflows `f64` on its own.
pub fn scalar_to_f64(r: &Scalar) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact square root when the argument is the square of a rational.
pub fn rational_sqrt(r: &Scalar) -> Option<Scalar> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}
