//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! All polynomials live over one global variable order, so any two of them
//! can be combined without an explicit embedding step. Exponent vectors are
//! trimmed of trailing zeros, which makes the term map canonical: two
//! polynomials are equal iff their term maps are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::{Ring, Scalar};
use crate::error::{Error, Result};

/// Global variable order: slice parameters first, then the slice
/// coordinates, then auxiliaries.
pub const VARIABLE_ORDER: [&str; 21] = [
    "p", "q", "s", "t", "a", "b", "d", "e", "c", "f", "x", "y", "z", "w", "alpha", "beta", "gamma",
    "delta", "epsilon", "lambda", "mu",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u8);

impl Var {
    pub const P: Var = Var(0);
    pub const Q: Var = Var(1);
    pub const S: Var = Var(2);
    pub const T: Var = Var(3);
    pub const A: Var = Var(4);
    pub const B: Var = Var(5);
    pub const D: Var = Var(6);
    pub const E: Var = Var(7);
    pub const C: Var = Var(8);
    pub const F: Var = Var(9);
    pub const X: Var = Var(10);
    pub const Y: Var = Var(11);
    pub const Z: Var = Var(12);
    pub const W: Var = Var(13);
    pub const ALPHA: Var = Var(14);
    pub const BETA: Var = Var(15);
    pub const GAMMA: Var = Var(16);
    pub const DELTA: Var = Var(17);
    pub const EPSILON: Var = Var(18);
    pub const LAMBDA: Var = Var(19);
    pub const MU: Var = Var(20);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        VARIABLE_ORDER[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        VARIABLE_ORDER
            .iter()
            .position(|n| *n == name)
            .map(|i| Var(i as u8))
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..VARIABLE_ORDER.len()).map(|i| Var(i as u8))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by `Var::index`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, k: u16) -> Self {
        let mut e = vec![0; v.index() + 1];
        e[v.index()] = k;
        Monomial(e).trimmed()
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut e = long.0.clone();
        for (i, &x) in short.0.iter().enumerate() {
            e[i] += x;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e <= other.0.get(i).copied().unwrap_or(0))
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0.clone();
        for (i, &x) in self.0.iter().enumerate() {
            e[i] -= x;
        }
        Monomial(e).trimmed()
    }

    fn with_exponent(&self, v: Var, k: u16) -> Monomial {
        let mut e = self.0.clone();
        if e.len() <= v.index() {
            e.resize(v.index() + 1, 0);
        }
        e[v.index()] = k;
        Monomial(e).trimmed()
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var(i as u8), e))
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Scalar::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Scalar::one(), Monomial::var(v))
    }

    pub fn monomial(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Scalar, Monomial)>>(it: I) -> Self {
        let mut p = MPoly::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Variables that occur with a positive exponent, in global order.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen = vec![false; VARIABLE_ORDER.len()];
        for m in self.terms.keys() {
            for (v, _) in m.vars() {
                seen[v.index()] = true;
            }
        }
        Var::all().filter(|v| seen[v.index()]).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(n, k)| (n.mul(m), k.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        Ring::pow(self, n)
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let k = m.exponent(v);
            (k > 0).then(|| {
                (
                    c * Scalar::from_integer(k.into()),
                    m.with_exponent(v, k - 1),
                )
            })
        }))
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let deg = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![MPoly::one()];
        for i in 1..=deg as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exponent(v) as usize;
            let rest = MPoly::monomial(c.clone(), m.with_exponent(v, 0));
            out = out + &rest * &powers[k];
        }
        out
    }

    /// Substitutes rational values for the listed variables and keeps the
    /// remaining ones symbolic.
    pub fn partial_eval(&self, values: &[(Var, Scalar)]) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (v, val) in values {
                let k = mono.exponent(*v);
                if k > 0 {
                    coeff *= Ring::pow(val, k as u32);
                    mono = mono.with_exponent(*v, 0);
                }
            }
            (coeff, mono)
        }))
    }

    /// Full evaluation; every occurring variable must be assigned.
    pub fn eval(&self, assignment: &HashMap<Var, Scalar>) -> Result<Scalar> {
        self.eval_with(|v| assignment.get(&v).cloned())
    }

    pub fn eval_with<F: Fn(Var) -> Option<Scalar>>(&self, lookup: F) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, k) in m.vars() {
                let val = lookup(v).ok_or(Error::MissingAssignment(v.name()))?;
                term *= Ring::pow(&val, k as u32);
            }
            total += term;
        }
        Ok(total)
    }

    /// Coefficients with respect to `v`: `self = Σ_k coeffs[k] · v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(v) as usize;
            out[k].add_term(m.with_exponent(v, 0), c.clone());
        }
        out
    }

    /// Greatest monomial dividing every term (the "monomial content").
    pub fn monomial_gcd(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::one();
        };
        let mut g = first.0.clone();
        for m in iter {
            g.truncate(m.0.len());
            for (i, e) in g.iter_mut().enumerate() {
                *e = (*e).min(m.0[i]);
            }
        }
        Monomial::from_exponents(g)
    }

    /// Lexicographically leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let t = MPoly::monomial(c / lc, lm.quotient_of(m));
            rem = rem - &t * divisor;
            quot = quot + t;
        }
        Some(quot)
    }

    /// Divides by a monomial, returning `None` unless it divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MPoly> {
        if !self.terms.keys().all(|n| m.divides(n)) {
            return None;
        }
        Some(MPoly {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (m.quotient_of(n), c.clone()))
                .collect(),
        })
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Scalar::one())
    }
}

impl Ring for MPoly {
    fn from_rational(r: &Scalar) -> Self {
        MPoly::constant(r.clone())
    }
    fn scale(&self, r: &Scalar) -> Self {
        MPoly::scale(self, r)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly { (&self).$f(rhs) }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Scalar> for MPoly {
    fn from(c: Scalar) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (v, k) in m.vars() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    /// Terms by descending total degree, e.g. `a^2 - 2*q*a*b + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| {
            m2.total_degree()
                .cmp(&m1.total_degree())
                .then_with(|| m2.cmp(m1))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

/// Shorthand for `MPoly::var`.
pub fn v(var: Var) -> MPoly {
    MPoly::var(var)
}

/// Shorthand for an integer constant polynomial.
pub fn k(n: i64) -> MPoly {
    MPoly::int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{int, ratio};

    #[test]
    fn difference_of_squares() {
        let (x, y) = (v(Var::X), v(Var::Y));
        let lhs = (&x + &y) * (&x - &y);
        let rhs = x.pow(2) - y.pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn evaluation() {
        let x = v(Var::X);
        let f = x.pow(2) + k(1);
        let mut asg = HashMap::new();
        asg.insert(Var::X, int(2));
        assert_eq!(f.eval(&asg).unwrap(), int(5));
    }

    #[test]
    fn missing_assignment_rejected() {
        let f = v(Var::X) * v(Var::Y);
        let mut asg = HashMap::new();
        asg.insert(Var::X, int(2));
        assert_eq!(f.eval(&asg), Err(Error::MissingAssignment("y")));
    }

    #[test]
    fn cancellation_is_canonical_zero() {
        let f = v(Var::X) + k(1);
        let z = &f - &f;
        assert!(z.is_zero());
        assert_eq!(z.terms().count(), 0);
        assert_eq!(z, MPoly::zero());
    }

    #[test]
    fn derivative_and_substitution() {
        let (a, b) = (v(Var::A), v(Var::B));
        let f = a.pow(3) * &b + k(2) * &a;
        assert_eq!(f.derivative(Var::A), k(3) * a.pow(2) * &b + k(2));
        assert_eq!(
            f.substitute(Var::A, &(&b + k(1))),
            (&b + k(1)).pow(3) * &b + k(2) * (&b + k(1))
        );
    }

    #[test]
    fn coefficients_and_display() {
        let (s, t) = (v(Var::S), v(Var::T));
        let f = (&s + &t).pow(2);
        let c = f.coefficients_in(Var::S);
        assert_eq!(c, vec![t.pow(2), k(2) * &t, k(1)]);
        assert_eq!(f.to_string(), "s^2 + 2*s*t + t^2");
        let g = MPoly::constant(ratio(-1, 2)) * v(Var::A) + k(3);
        assert_eq!(g.to_string(), "-1/2*a + 3");
        assert_eq!(g.variables(), vec![Var::A]);
    }

    #[test]
    fn exact_division() {
        let (p, q) = (v(Var::P), v(Var::Q));
        let d = k(4) * &p * &q - k(1);
        let f = &d * (p.pow(2) + &q);
        assert_eq!(f.div_exact(&d), Some(p.pow(2) + &q));
        assert_eq!((&f + k(1)).div_exact(&d), None);
        assert_eq!(f.div_exact(&MPoly::zero()), None);
    }

    #[test]
    fn monomial_content() {
        let (p, q) = (v(Var::P), v(Var::Q));
        let f = p.pow(3) * q.pow(2) + p.pow(2) * q.pow(5);
        let g = f.monomial_gcd();
        assert_eq!(g, Monomial::from_exponents(vec![2, 2]));
        assert_eq!(f.div_monomial(&g).unwrap(), &p + q.pow(3));
    }

    #[test]
    fn variable_names_round_trip() {
        for var in Var::all() {
            assert_eq!(Var::from_name(var.name()), Some(var));
        }
        assert_eq!(Var::from_name("nope"), None);
    }
}
