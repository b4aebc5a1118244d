//! The α-falling-factorial basis `α^c ∏(p_i)_{a_i} ∏(r_j)_{b_j}` and conversions to it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::multipoly::{JsonTerm, Monomial, MultiPoly};
use super::poly::PolyAlpha;
use super::rat_alpha::RatAlpha;
use super::rational::{big, parse, to_text, Rational};
use super::ExactError;

/// Number of set-partitions of an `n`-set into `k` blocks.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    stirling_table(n, false).get(k as usize).cloned().unwrap_or_default()
}

/// Signed Stirling numbers of the first kind: `(x)_n = Σ_k s(n,k) x^k`.
pub fn stirling1_signed(n: u32, k: u32) -> BigInt {
    stirling_table(n, true).get(k as usize).cloned().unwrap_or_default()
}

/// Row `n` of the Stirling triangle, indexed by `k`.
fn stirling_table(n: u32, first_kind: bool) -> Vec<BigInt> {
    let n = n as usize;
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let carry = row.get(k - 1).cloned().unwrap_or_default();
            let stay = row.get(k).cloned().unwrap_or_default();
            let factor = if first_kind {
                -BigInt::from(m - 1)
            } else {
                BigInt::from(k)
            };
            next[k] = carry + factor * stay;
        }
        row = next;
    }
    row
}

/// `(x)_k = x(x-1)…(x-k+1)` evaluated at an integer.
pub fn falling(x: &BigInt, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (x - BigInt::from(i)))
}

/// Basis element `α^alpha ∏(p_i)_{a_i} ∏(r_j)_{b_j}`; ordered by monomial, then α-power.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FfKey {
    pub mono: Monomial,
    pub alpha: u32,
}

impl FfKey {
    pub fn new(alpha: u32, a: &[u32], b: &[u32]) -> Self {
        assert_eq!(a.len(), b.len());
        let mut v = a.to_vec();
        v.extend_from_slice(b);
        FfKey {
            mono: Monomial(v),
            alpha,
        }
    }

    pub fn a(&self) -> &[u32] {
        self.mono.p_exps()
    }

    pub fn b(&self) -> &[u32] {
        self.mono.r_exps()
    }
}

impl fmt::Display for FfKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.mono.dim();
        let mut parts = Vec::new();
        if self.alpha > 0 {
            parts.push(if self.alpha == 1 { "a".to_string() } else { format!("a^{}", self.alpha) });
        }
        for (i, &e) in self.a().iter().enumerate() {
            if e > 0 {
                let name = if d == 1 { "p".to_string() } else { format!("p{}", i + 1) };
                parts.push(format!("({name})_{e}"));
            }
        }
        for (j, &e) in self.b().iter().enumerate() {
            if e > 0 {
                let name = if d == 1 { "r".to_string() } else { format!("r{}", j + 1) };
                parts.push(format!("({name})_{e}"));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A polynomial written over the α-falling-factorial basis with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FFExpansion {
    d: usize,
    terms: BTreeMap<FfKey, Rational>,
}

/// Outcome of a nonnegativity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Pass,
    /// Every basis element whose coefficient is negative.
    Fail(Vec<(FfKey, Rational)>),
}

impl Certificate {
    pub fn is_pass(&self) -> bool {
        matches!(self, Certificate::Pass)
    }

    pub fn witnesses(&self) -> &[(FfKey, Rational)] {
        match self {
            Certificate::Pass => &[],
            Certificate::Fail(w) => w,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Pass => f.write_str("PASS"),
            Certificate::Fail(w) => {
                write!(f, "FAIL")?;
                for (k, c) in w {
                    write!(f, " [{} : {}]", k, to_text(c))?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Serialize)]
struct CertificateJson {
    status: &'static str,
    witnesses: Vec<JsonTerm>,
}

impl Certificate {
    pub fn to_json(&self) -> serde_json::Value {
        let witnesses = self
            .witnesses()
            .iter()
            .map(|(k, c)| JsonTerm {
                alpha: k.alpha,
                p: k.a().to_vec(),
                r: k.b().to_vec(),
                coeff: to_text(c),
            })
            .collect();
        let status = if self.is_pass() { "PASS" } else { "FAIL" };
        serde_json::to_value(CertificateJson { status, witnesses }).expect("serializable")
    }
}

impl FFExpansion {
    pub fn zero(d: usize) -> Self {
        FFExpansion {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FfKey, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &FfKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: FfKey, c: Rational) {
        assert_eq!(key.mono.dim(), self.d, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (FfKey, Rational)>) -> Self {
        let mut out = Self::zero(d);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `PASS`, or `FAIL` listing every negative coefficient.
    pub fn is_nonnegative(&self) -> Certificate {
        let bad: Vec<_> = self
            .terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        if bad.is_empty() {
            Certificate::Pass
        } else {
            Certificate::Fail(bad)
        }
    }

    /// Value at integer coordinates, as a polynomial in α.
    pub fn eval(&self, p: &[i64], r: &[i64]) -> PolyAlpha {
        let point: Vec<BigInt> = p.iter().chain(r).map(|&x| BigInt::from(x)).collect();
        let mut acc = PolyAlpha::zero();
        for (k, c) in &self.terms {
            let v = k
                .mono
                .0
                .iter()
                .zip(&point)
                .fold(BigInt::one(), |acc, (&e, x)| acc * falling(x, e));
            if !v.is_zero() {
                acc += &PolyAlpha::monomial(c * big(v), k.alpha as usize);
            }
        }
        acc
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(k, c)| JsonTerm {
                alpha: k.alpha,
                p: k.a().to_vec(),
                r: k.b().to_vec(),
                coeff: to_text(c),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("serializable")
    }

    pub fn from_json_terms(d: usize, terms: &[JsonTerm]) -> Result<Self, ExactError> {
        let mut out = Self::zero(d);
        for t in terms {
            if t.p.len() != d || t.r.len() != d {
                return Err(ExactError::Schema(format!("term has wrong dimension, expected {d}")));
            }
            let c = parse(&t.coeff).ok_or_else(|| ExactError::Schema(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(FfKey::new(t.alpha, &t.p, &t.r), c);
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| if c.is_one() { k.to_string() } else { format!("{}*{}", to_text(c), k) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for FFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for FFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFExpansion[d={}]({})", self.d, self.to_text())
    }
}

/// Rewrites a polynomial over the α-falling-factorial basis.
///
/// Each power `x^e` becomes `Σ_k S(e,k) (x)_k`; α stays in the power basis.
pub fn to_falling_factorial(poly: &MultiPoly) -> Result<FFExpansion, ExactError> {
    let d = poly.dim();
    let mut out = FFExpansion::zero(d);
    for (m, c) in poly.terms() {
        let alpha_poly = c.as_polynomial().ok_or(ExactError::NonPolynomialAlpha)?;
        // Expand each variable separately, then take the product of the expansions.
        let mut partial: Vec<(Vec<u32>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for &e in &m.0 {
            let row = stirling_table(e, false);
            let mut next = Vec::new();
            for (prefix, w) in &partial {
                for (k, s) in row.iter().enumerate().take(e as usize + 1) {
                    if s.is_zero() {
                        continue;
                    }
                    let mut v = prefix.clone();
                    v.push(k as u32);
                    next.push((v, w * s));
                }
            }
            partial = next;
        }
        for (v, w) in partial {
            for (a, q) in alpha_poly.coeffs().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                out.add_term(
                    FfKey {
                        mono: Monomial(v.clone()),
                        alpha: a as u32,
                    },
                    q * big(w.clone()),
                );
            }
        }
    }
    Ok(out)
}

/// Inverse of [`to_falling_factorial`].
pub fn from_falling_factorial(ff: &FFExpansion) -> MultiPoly {
    let d = ff.dim();
    let mut out = MultiPoly::zero(d);
    for (k, c) in ff.terms() {
        let mut partial: Vec<(Vec<u32>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for &e in &k.mono.0 {
            let row = stirling_table(e, true);
            let mut next = Vec::new();
            for (prefix, w) in &partial {
                for (j, s) in row.iter().enumerate().take(e as usize + 1) {
                    if s.is_zero() {
                        continue;
                    }
                    let mut v = prefix.clone();
                    v.push(j as u32);
                    next.push((v, w * s));
                }
            }
            partial = next;
        }
        let alpha = PolyAlpha::monomial(c.clone(), k.alpha as usize);
        for (v, w) in partial {
            out.add_term(Monomial(v), RatAlpha::from_poly(alpha.scale(&big(w))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling1_signed(3, 1), BigInt::from(2));
        assert_eq!(stirling1_signed(3, 2), BigInt::from(-3));
    }

    #[test]
    fn stirling2_recurrence() {
        for n in 1..=12u32 {
            for k in 1..=12u32 {
                let lhs = stirling2(n, k);
                let rhs = BigInt::from(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
                assert_eq!(lhs, rhs, "S({n},{k})");
            }
        }
    }

    #[test]
    fn power_to_falling() {
        let p = MultiPoly::p(1, 1);
        let ff = to_falling_factorial(&p.pow(2)).unwrap();
        assert_eq!(ff.len(), 2);
        assert_eq!(ff.coeff(&FfKey::new(0, &[2], &[0])), int(1));
        assert_eq!(ff.coeff(&FfKey::new(0, &[1], &[0])), int(1));

        let r3 = to_falling_factorial(&MultiPoly::r(1, 1).pow(3)).unwrap();
        assert_eq!(r3.coeff(&FfKey::new(0, &[0], &[3])), int(1));
        assert_eq!(r3.coeff(&FfKey::new(0, &[0], &[2])), int(3));
        assert_eq!(r3.coeff(&FfKey::new(0, &[0], &[1])), int(1));

        let pr = to_falling_factorial(&(&MultiPoly::p(1, 1) * &MultiPoly::r(1, 1))).unwrap();
        assert_eq!(pr.len(), 1);
        assert_eq!(pr.coeff(&FfKey::new(0, &[1], &[1])), int(1));
    }

    #[test]
    fn falling_to_power() {
        let ff = FFExpansion::from_terms(1, [(FfKey::new(0, &[2], &[0]), int(1))]);
        let p = MultiPoly::p(1, 1);
        assert_eq!(from_falling_factorial(&ff), &p.pow(2) - &p);
        assert!(from_falling_factorial(&FFExpansion::zero(1)).is_zero());
        let ff = FFExpansion::from_terms(1, [(FfKey::new(0, &[1], &[2]), int(1))]);
        let r = MultiPoly::r(1, 1);
        assert_eq!(from_falling_factorial(&ff), &(&p * &r.pow(2)) - &(&p * &r));
    }

    #[test]
    fn certificates() {
        let ok = FFExpansion::from_terms(1, [(FfKey::new(0, &[1], &[2]), frac(1, 2))]);
        assert!(ok.is_nonnegative().is_pass());
        let bad = FFExpansion::from_terms(1, [(FfKey::new(1, &[1], &[0]), int(-1))]);
        assert_eq!(bad.is_nonnegative().witnesses().len(), 1);

        // p r^2 - p^2 r: coefficient of (p)_2 (r)_1 is -1.
        let p = MultiPoly::p(1, 1);
        let r = MultiPoly::r(1, 1);
        let ch2 = &(&p * &r.pow(2)) - &(&p.pow(2) * &r);
        let cert = to_falling_factorial(&ch2).unwrap().is_nonnegative();
        assert!(cert
            .witnesses()
            .iter()
            .any(|(k, c)| k == &FfKey::new(0, &[2], &[1]) && c == &int(-1)));
    }

    #[test]
    fn rejects_rational_alpha() {
        let f = MultiPoly::p(1, 1).scale(&RatAlpha::alpha_pow(-1));
        assert_eq!(to_falling_factorial(&f), Err(ExactError::NonPolynomialAlpha));
    }
}
