//! Sparse polynomials in `p_1..p_d, r_1..r_d` with coefficients in `Q(α)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{PolyAlpha, UniPoly};
use super::rat_alpha::RatAlpha;
use super::rational::{int, parse, to_text, Rational};
use super::ExactError;

/// Exponent vector `(a_1..a_d, b_1..b_d)`: first the `p` exponents, then the `r` ones.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vector compared entry by entry in the variable order `p_1 < … < p_d < r_1 < … < r_d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(d: usize) -> Self {
        Monomial(vec![0; 2 * d])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.0.len() / 2
    }

    pub fn p_exps(&self) -> &[u32] {
        &self.0[..self.dim()]
    }

    pub fn r_exps(&self) -> &[u32] {
        &self.0[self.dim()..]
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical JSON term: `{"alpha": c, "p": [..], "r": [..], "coeff": "num/den"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub alpha: u32,
    pub p: Vec<u32>,
    pub r: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    d: usize,
    terms: BTreeMap<Monomial, RatAlpha>,
}

impl MultiPoly {
    pub fn zero(d: usize) -> Self {
        MultiPoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(d: usize, c: RatAlpha) -> Self {
        let mut out = Self::zero(d);
        out.add_term(Monomial::one(d), c);
        out
    }

    pub fn one(d: usize) -> Self {
        Self::constant(d, RatAlpha::one())
    }

    /// The variable `p_i` (1-based).
    pub fn p(d: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= d);
        let mut m = Monomial::one(d);
        m.0[i - 1] = 1;
        Self::from_terms(d, [(m, RatAlpha::one())])
    }

    /// The variable `r_j` (1-based).
    pub fn r(d: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= d);
        let mut m = Monomial::one(d);
        m.0[d + j - 1] = 1;
        Self::from_terms(d, [(m, RatAlpha::one())])
    }

    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (Monomial, RatAlpha)>) -> Self {
        let mut out = Self::zero(d);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Builds a polynomial from `(p exponents, r exponents, coefficient)` triples.
    pub fn from_exps(d: usize, terms: &[(&[u32], &[u32], RatAlpha)]) -> Self {
        Self::from_terms(
            d,
            terms.iter().map(|(a, b, c)| {
                assert_eq!(a.len(), d);
                assert_eq!(b.len(), d);
                let mut v = a.to_vec();
                v.extend_from_slice(b);
                (Monomial(v), c.clone())
            }),
        )
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatAlpha)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RatAlpha {
        self.terms.get(m).cloned().unwrap_or_else(RatAlpha::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: RatAlpha) {
        debug_assert_eq!(m.0.len(), 2 * self.d);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &MultiPoly) {
        assert_eq!(self.d, other.d, "dimension mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &RatAlpha) {
        assert_eq!(self.d, other.d, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &RatAlpha) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.d);
        }
        MultiPoly {
            d: self.d,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> MultiPoly {
        self.scale(&RatAlpha::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.d);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when every coefficient is a polynomial in α.
    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(RatAlpha::is_polynomial)
    }

    /// Substitutes `α = a` in every coefficient.
    pub fn specialize_alpha(&self, a: &Rational) -> Result<MultiPoly, ExactError> {
        let mut out = MultiPoly::zero(self.d);
        for (m, c) in &self.terms {
            let v = c.eval(a).ok_or(ExactError::PoleEncountered)?;
            out.add_term(m.clone(), RatAlpha::constant(v));
        }
        Ok(out)
    }

    /// Evaluates at nonnegative integer coordinates.
    pub fn eval(&self, p: &[i64], r: &[i64]) -> RatAlpha {
        assert_eq!(p.len(), self.d);
        assert_eq!(r.len(), self.d);
        let vals: Vec<Rational> = p.iter().chain(r).map(|&x| int(x)).collect();
        self.eval_rational(&vals)
    }

    /// Evaluates at a rational point given as `(p_1..p_d, r_1..r_d)`.
    pub fn eval_rational(&self, point: &[Rational]) -> RatAlpha {
        assert_eq!(point.len(), 2 * self.d);
        let mut acc = RatAlpha::zero();
        for (m, c) in &self.terms {
            let mut v = Rational::one();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    v *= x;
                }
            }
            if !v.is_zero() {
                acc += &c.scale(&v);
            }
        }
        acc
    }

    /// Replaces each of the `2d` variables with a polynomial (all in a common dimension).
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), 2 * self.d);
        let target = images[0].d;
        let mut out = MultiPoly::zero(target);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|x| vec![MultiPoly::one(target), x.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                while powers[v].len() <= e as usize {
                    let next = &powers[v][powers[v].len() - 1] * &images[v];
                    powers[v].push(next);
                }
                if e > 0 {
                    t = &t * &powers[v][e as usize];
                }
            }
            out.add_assign_ref(&t);
        }
        out
    }

    /// `u(self)` for a univariate polynomial `u` over the rationals.
    pub fn compose_into(u: &UniPoly, arg: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero(arg.d);
        for c in u.coeffs().iter().rev() {
            acc = &acc * arg;
            acc.add_term(Monomial::one(arg.d), RatAlpha::constant(c.clone()));
        }
        acc
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, deg: u32) -> MultiPoly {
        MultiPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical JSON terms; fails if some coefficient is not a polynomial in α.
    pub fn to_json_terms(&self) -> Result<Vec<JsonTerm>, ExactError> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let poly = c.as_polynomial().ok_or(ExactError::NonPolynomialAlpha)?;
            for (k, q) in poly.coeffs().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                out.push(JsonTerm {
                    alpha: k as u32,
                    p: m.p_exps().to_vec(),
                    r: m.r_exps().to_vec(),
                    coeff: to_text(q),
                });
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Result<serde_json::Value, ExactError> {
        Ok(serde_json::to_value(self.to_json_terms()?).expect("serializable"))
    }

    pub fn from_json_terms(d: usize, terms: &[JsonTerm]) -> Result<MultiPoly, ExactError> {
        let mut out = MultiPoly::zero(d);
        for t in terms {
            if t.p.len() != d || t.r.len() != d {
                return Err(ExactError::Schema(format!("term has wrong dimension, expected {d}")));
            }
            let q = parse(&t.coeff).ok_or_else(|| ExactError::Schema(format!("bad coefficient {:?}", t.coeff)))?;
            let mut v = t.p.clone();
            v.extend_from_slice(&t.r);
            out.add_term(Monomial(v), RatAlpha::from_poly(PolyAlpha::monomial(q, t.alpha as usize)));
        }
        Ok(out)
    }

    fn var_name(&self, v: usize) -> String {
        if self.d == 1 {
            if v == 0 { "p".into() } else { "r".into() }
        } else if v < self.d {
            format!("p{}", v + 1)
        } else {
            format!("r{}", v - self.d + 1)
        }
    }

    /// Human-readable form, one term per summand, highest degree first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { self.var_name(v) } else { format!("{}^{}", self.var_name(v), e) })
                .collect();
            let coeff = if c.is_polynomial() && c.num().coeffs().len() > 1 {
                format!("({c})")
            } else {
                c.to_string()
            };
            if mono.is_empty() {
                parts.push(coeff);
            } else if c.is_one() {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("{}*{}", coeff, mono.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[d={}]({})", self.d, self.to_text())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs);
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.d, rhs.d, "dimension mismatch");
        let mut out = MultiPoly::zero(self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
