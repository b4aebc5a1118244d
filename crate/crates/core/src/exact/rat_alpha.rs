//! Rational functions in α, kept in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly::PolyAlpha;
use super::rational::Rational;

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatAlpha {
    num: PolyAlpha,
    den: PolyAlpha,
}

impl RatAlpha {
    /// Normalizes an arbitrary fraction. Panics if `den` is zero.
    pub fn new(num: PolyAlpha, den: PolyAlpha) -> Self {
        assert!(!den.is_zero(), "RatAlpha with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = Rational::one() / den.coeff(0);
            return RatAlpha {
                num: num.scale(&inv),
                den: PolyAlpha::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatAlpha { num, den }
    }

    pub fn from_poly(p: PolyAlpha) -> Self {
        RatAlpha {
            num: p,
            den: PolyAlpha::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(PolyAlpha::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyAlpha::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyAlpha::one())
    }

    pub fn alpha() -> Self {
        Self::from_poly(PolyAlpha::x())
    }

    /// `α^e` for any integer exponent.
    pub fn alpha_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(PolyAlpha::monomial(Rational::one(), e as usize))
        } else {
            RatAlpha {
                num: PolyAlpha::one(),
                den: PolyAlpha::monomial(Rational::one(), (-e) as usize),
            }
        }
    }

    pub fn num(&self) -> &PolyAlpha {
        &self.num
    }

    pub fn den(&self) -> &PolyAlpha {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&PolyAlpha> {
        self.is_polynomial().then_some(&self.num)
    }

    /// The value as a rational constant, if it does not depend on α.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatAlpha {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Value at `α = a`, or `None` at a pole.
    pub fn eval(&self, a: &Rational) -> Option<Rational> {
        let d = self.den.eval(a);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(a) / d)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatAlpha {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl fmt::Display for RatAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatAlpha[{self}]")
    }
}

impl From<PolyAlpha> for RatAlpha {
    fn from(p: PolyAlpha) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RatAlpha {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for RatAlpha {
    fn from(c: i64) -> Self {
        Self::from_poly(PolyAlpha::from(c))
    }
}

impl<'a> Add<&'a RatAlpha> for &'a RatAlpha {
    type Output = RatAlpha;
    fn add(self, rhs: &RatAlpha) -> RatAlpha {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatAlpha::from_poly(&self.num + &rhs.num);
            }
            return RatAlpha::new(&self.num + &rhs.num, self.den.clone());
        }
        RatAlpha::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatAlpha> for &'a RatAlpha {
    type Output = RatAlpha;
    fn sub(self, rhs: &RatAlpha) -> RatAlpha {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatAlpha> for &'a RatAlpha {
    type Output = RatAlpha;
    fn mul(self, rhs: &RatAlpha) -> RatAlpha {
        if self.is_zero() || rhs.is_zero() {
            return RatAlpha::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatAlpha::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying to keep operands small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = rhs.den.div_rem(&g1).0;
        let n2 = rhs.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        RatAlpha::new(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a RatAlpha> for &'a RatAlpha {
    type Output = RatAlpha;
    fn div(self, rhs: &RatAlpha) -> RatAlpha {
        self * &rhs.inv()
    }
}

impl Neg for &RatAlpha {
    type Output = RatAlpha;
    fn neg(self) -> RatAlpha {
        RatAlpha {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatAlpha {
    type Output = RatAlpha;
    fn neg(self) -> RatAlpha {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatAlpha> for RatAlpha {
            type Output = RatAlpha;
            fn $m(self, rhs: RatAlpha) -> RatAlpha {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatAlpha> for RatAlpha {
            type Output = RatAlpha;
            fn $m(self, rhs: &RatAlpha) -> RatAlpha {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatAlpha> for RatAlpha {
    fn add_assign(&mut self, rhs: &RatAlpha) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&RatAlpha> for RatAlpha {
    fn sub_assign(&mut self, rhs: &RatAlpha) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for RatAlpha {
    fn sum<I: Iterator<Item = RatAlpha>>(iter: I) -> Self {
        iter.fold(RatAlpha::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    fn p(c: &[i64]) -> PolyAlpha {
        PolyAlpha::from_ints(c)
    }

    #[test]
    fn normalization() {
        let r = RatAlpha::new(p(&[-2, 0, 2]), p(&[2, 2]));
        assert_eq!(r, RatAlpha::from_poly(p(&[-1, 1])));
        let s = RatAlpha::new(p(&[1]), p(&[0, 2]));
        assert_eq!(s.den(), &p(&[0, 1]));
        assert_eq!(s.num(), &PolyAlpha::constant(frac(1, 2)));
    }

    #[test]
    fn field_ops() {
        let a = RatAlpha::new(p(&[1, 1]), p(&[0, 1]));
        let b = RatAlpha::new(p(&[0, 1]), p(&[1, 1]));
        assert!((&a * &b).is_one());
        let c = &a + &b;
        assert_eq!(&c - &b, a);
        assert_eq!(RatAlpha::alpha_pow(-2) * RatAlpha::alpha_pow(3), RatAlpha::alpha());
        assert_eq!(a.eval(&int(1)), Some(int(2)));
        assert_eq!(a.eval(&int(0)), None);
    }
}
