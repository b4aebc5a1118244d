//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps values reduced with a positive denominator, so it
//! is used directly; this module only adds constructors and the canonical text
//! form (`"num/den"`, or `"num"` when the denominator is one).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Canonical text form.
pub fn to_text(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"a"` or `"a/b"`; the result is always reduced.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(big),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(to_text(&int(3)), "3");
        assert_eq!(to_text(&frac(6, -4)), "-3/2");
        assert_eq!(to_text(&int(0)), "0");
        assert_eq!(parse("-3/2"), Some(frac(-3, 2)));
        assert_eq!(parse("4/2"), Some(int(2)));
        assert_eq!(parse("1/0"), None);
    }

    #[test]
    fn canonical_zero() {
        let z = frac(0, 7);
        assert!(z.denom().is_one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
