//! Exact rational scalars and the small helpers every other module leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` (a leading `-` or `−` is accepted).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let t = s.trim().replace('−', "-");
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim().to_string(), q.trim().to_string()),
        None => (t.clone(), "1".to_string()),
    };
    let p: BigInt = num.parse().map_err(|_| err())?;
    let q: BigInt = den.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

/// Canonical string form: `"p/q"`, or `"p"` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(n: u32) -> Rational {
    rising(&Rational::one(), n)
}

/// Classical binomial coefficient `C(n, k)` for integer `n` (may be negative).
pub fn binomial_int(n: i64, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k as i64 {
        acc *= int(n - i);
    }
    acc / factorial(k)
}

/// Integer power with a possibly negative exponent.
pub fn pow(x: &Rational, e: i64) -> Result<Rational> {
    if e >= 0 {
        Ok(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        Err(Error::ZeroDenominator("negative power of zero"))
    } else {
        Ok(num_traits::pow(x.recip(), (-e) as usize))
    }
}

pub fn ensure_positive_d(d: &Rational) -> Result<()> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveD(format_rational(d)))
    }
}

/// `d / 2`, the Jack parameter as it appears in every shifted point.
pub fn half(d: &Rational) -> Rational {
    d / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("−1/30").unwrap(), frac(-1, 30));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&frac(-2, 4)), "-1/2");
        assert_eq!(format_rational(&int(5)), "5");
    }

    #[test]
    fn rising_factorial() {
        assert_eq!(rising(&int(2), 3), int(24));
        assert_eq!(rising(&frac(1, 2), 2), frac(3, 4));
        assert_eq!(rising(&int(-1), 2), int(0));
        assert_eq!(rising(&int(5), 0), int(1));
    }

    #[test]
    fn binomials_and_powers() {
        assert_eq!(binomial_int(5, 2), int(10));
        assert_eq!(binomial_int(2, 3), int(0));
        assert_eq!(binomial_int(-1, 3), int(-1));
        assert_eq!(pow(&int(2), -3).unwrap(), frac(1, 8));
        assert!(pow(&int(0), -1).is_err());
    }
}
