//! Exact rational scalars.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms by `num`.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p` or `p/q`. Floats are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not an exact rational: {text:?}"));
    let parse_int = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(parse_int(text)?)),
    }
}

/// `numerator/denominator`, or just the numerator for integers.
pub fn format_scalar(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    num::pow(base.clone(), exp)
}

/// Signed integer power; fails on `0^(-k)`.
pub fn pow_signed(base: &Scalar, exp: i64) -> Result<Scalar> {
    if exp >= 0 {
        return Ok(pow(base, exp as usize));
    }
    if base.is_zero() {
        return Err(Error::InvalidArgument("zero raised to a negative power".into()));
    }
    Ok(pow(&base.recip(), exp.unsigned_abs() as usize))
}

pub fn is_unit_magnitude(value: &Scalar) -> bool {
    value.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("-1/3").unwrap(), ratio(-1, 3));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("1e3").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(pow(&int(0), 0), int(1));
        assert_eq!(pow_signed(&int(2), -2).unwrap(), ratio(1, 4));
        assert!(pow_signed(&int(0), -1).is_err());
    }

    #[test]
    fn formats_losslessly() {
        assert_eq!(format_scalar(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(38)), "38");
    }
}
