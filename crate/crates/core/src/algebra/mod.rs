//! Exact scalars, multivariate polynomials, rational functions and
//! resultants.

pub mod mpoly;
pub mod ratfunc;
pub mod resultant;
pub mod ring;

pub use mpoly::{MPoly, Monomial, Var};
pub use ratfunc::RatFunc;
pub use resultant::{quartic_discriminant_oracle, resultant, UniPoly};
pub use ring::{
    int, ratio, rational_sqrt, scalar_to_f64, Field, One, Ring, Scalar, SqrtField, Zero,
};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Canonical text form: `"num/den"`, or `"num"` when the denominator is 1.
pub fn format_scalar(r: &Scalar) -> String {
    r.to_string()
}

/// Parses `"n"`, `"n/d"` or a finite decimal such as `"-0.25"` exactly.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Scalar::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Scalar::new(n, d);
        return Ok(if negative { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Scalar::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_text_forms() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_scalar("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_scalar("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1.").is_err());
        assert_eq!(format_scalar(&ratio(35152, 9)), "35152/9");
        assert_eq!(format_scalar(&ratio(-4, 2)), "-2");
    }
}
