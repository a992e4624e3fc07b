//! Formal quotients of polynomials.
//!
//! No gcd cancellation is attempted; equality is decided by
//! cross-multiplication. Constant denominators are folded into the
//! numerator so that polynomial-valued results stay readable.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::mpoly::{MPoly, Var};
use super::ring::{Field, Ring, Scalar};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        match den.as_constant() {
            Some(c) if !c.is_one() => RatFunc {
                num: num.scale(&c.recip()),
                den: MPoly::one(),
            },
            _ if num.is_zero() => RatFunc {
                num,
                den: MPoly::one(),
            },
            _ => RatFunc { num, den },
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    /// The polynomial value, when the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<MPoly> {
        match self.den.as_constant() {
            Some(c) => Some(self.num.scale(&c.recip())),
            None => self.num.div_exact(&self.den),
        }
    }

    pub fn eval_with<F: Fn(Var) -> Option<Scalar> + Copy>(&self, lookup: F) -> Result<Scalar> {
        let d = self.den.eval_with(lookup)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_with(lookup)? / d)
    }

    pub fn partial_eval(&self, values: &[(Var, Scalar)]) -> Result<RatFunc> {
        RatFunc::new(self.num.partial_eval(values), self.den.partial_eval(values))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        (&self.num * &other.den - &other.num * &self.den).is_zero()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den);
        }
        RatFunc::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    /// Panics on division by the zero function; use `try_inv` to check.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: RatFunc) -> RatFunc {
        let inv = rhs
            .try_inv()
            .expect("division by the zero rational function");
        self * inv
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(MPoly::one())
    }
}

impl Ring for RatFunc {
    fn from_rational(r: &Scalar) -> Self {
        RatFunc::from_poly(MPoly::constant(r.clone()))
    }
    fn scale(&self, r: &Scalar) -> Self {
        RatFunc::normalized(self.num.scale(r), self.den.clone())
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::normalized(self.den.clone(), self.num.clone()))
        }
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Scalar> for RatFunc {
    fn from(c: Scalar) -> Self {
        RatFunc::from_poly(MPoly::constant(c))
    }
}
