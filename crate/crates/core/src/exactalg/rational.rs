use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; `num-rational` keeps it reduced with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"`, with an optional leading `-` (ASCII or U+2212).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let s = text.trim();
    let (negative, body) = if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, s)
    };
    let digits = |part: &str| -> Result<BigInt> {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        part.parse::<BigInt>().map_err(|_| err())
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n)?, digits(d)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(err());
    }
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is the square of a rational.
pub fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let perfect = |n: &BigInt| {
        let root = n.sqrt();
        &root * &root == *n
    };
    perfect(r.numer()) && perfect(r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational("\u{2212}2/3").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
        for bad in ["", "1/0", "a", "1/-2", "--1", "1.5", "/2", "2/"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_zero_and_format() {
        let z = rat(0, -7);
        assert!(z.denom().is_one());
        assert_eq!(format_rational(&z), "0");
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
    }

    #[test]
    fn squares() {
        assert!(is_rational_square(&rat(4, 9)));
        assert!(is_rational_square(&int(0)));
        assert!(!is_rational_square(&int(2)));
        assert!(!is_rational_square(&rat(-1, 4)));
        assert!(!is_rational_square(&rat(4, 3)));
    }
}
