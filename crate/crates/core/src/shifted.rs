//! Shifted symmetric functions: `p*_k`, `Ψ`, `p^θ_k`, shifted Schur and shifted
//! Jack values, and reconstruction of `F(r^p)` as a polynomial in `p, r`.
//!
//! Reconstruction expands a function of bounded degree over the products
//! `p*_ν = ∏ p*_{ν_i}` by solving the square system `F(λ) = Σ_ν c_ν p*_ν(λ)`
//! over all `|λ|, |ν| ≤ k`, then substitutes the multirectangular form of each `p*_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exact::faulhaber::faulhaber_table;
use crate::exact::linalg::{det_rational, LuSolver};
use crate::exact::rational::{big, binomial, frac, int};
use crate::exact::{ExactError, MultiPoly, PolyAlpha, RatAlpha, Rational, UniPoly};
use crate::jack;
use crate::partitions::{partitions_of, partitions_up_to, MultiRect, Partition};
use crate::symfun::{kostka, syt_count};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShiftedError {
    #[error("the p* system for degree {0} is singular")]
    SingularSystem(usize),
    #[error("{name}: p*-expansion of degree {k} disagrees with direct evaluation at {lambda}")]
    DegreeGuardFailed { name: String, k: usize, lambda: Partition },
    #[error("{0}: reconstructed polynomial has a coefficient with a nontrivial alpha-denominator")]
    DenominatorNotCleared(String),
    #[error("evaluation hit a pole")]
    PoleEncountered,
}

impl From<ExactError> for ShiftedError {
    fn from(_: ExactError) -> Self {
        ShiftedError::PoleEncountered
    }
}

/// Whether α stays a symbol or is fixed to a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlphaMode {
    Symbolic,
    Value(Rational),
}

impl AlphaMode {
    pub fn one() -> Self {
        AlphaMode::Value(Rational::one())
    }

    pub fn specialize(&self, x: &RatAlpha) -> Result<RatAlpha, ShiftedError> {
        match self {
            AlphaMode::Symbolic => Ok(x.clone()),
            AlphaMode::Value(a) => x.eval(a).map(RatAlpha::constant).ok_or(ShiftedError::PoleEncountered),
        }
    }
}

impl fmt::Display for AlphaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaMode::Symbolic => f.write_str("symbolic"),
            AlphaMode::Value(a) => write!(f, "{}", crate::exact::rational::to_text(a)),
        }
    }
}

type EvalFn = dyn Fn(&Partition) -> RatAlpha + Send + Sync;

/// A function on Young diagrams with a declared degree bound.
#[derive(Clone)]
pub struct DiagramFunction {
    pub name: String,
    pub degree: usize,
    eval: Arc<EvalFn>,
}

impl DiagramFunction {
    pub fn new(name: impl Into<String>, degree: usize, f: impl Fn(&Partition) -> RatAlpha + Send + Sync + 'static) -> Self {
        DiagramFunction {
            name: name.into(),
            degree,
            eval: Arc::new(f),
        }
    }

    pub fn eval(&self, lambda: &Partition) -> RatAlpha {
        (self.eval)(lambda)
    }

    /// `Ch^{(α)}_μ`.
    pub fn ch(mu: &Partition) -> Self {
        let m = mu.clone();
        Self::new(format!("Ch_{mu}"), mu.size(), move |l| jack::ch(&m, l).into())
    }

    /// `Ko^{(α)}_μ`.
    pub fn ko(mu: &Partition) -> Self {
        let m = mu.clone();
        Self::new(format!("Ko_{mu}"), mu.size(), move |l| jack::ko(&m, l).into())
    }

    /// `J*^{(α)}_μ`.
    pub fn jstar(mu: &Partition) -> Self {
        let m = mu.clone();
        Self::new(format!("J*_{mu}"), mu.size(), move |l| shifted_jack(&m, l))
    }

    /// `α^{|μ|-μ_1} J*_μ`, the normalization with polynomial coefficients.
    pub fn jstar_normalized(mu: &Partition) -> Self {
        let m = mu.clone();
        let shift = RatAlpha::alpha_pow((mu.size() - mu.part(1)) as i64);
        Self::new(format!("a^{}*J*_{mu}", mu.size() - mu.part(1)), mu.size(), move |l| {
            &shift * &shifted_jack(&m, l)
        })
    }

    /// Shifted Schur `S*_μ` (an α = 1 object).
    pub fn shifted_schur(mu: &Partition) -> Self {
        let m = mu.clone();
        Self::new(format!("S*_{mu}"), mu.size(), move |l| shifted_schur(&m, l).into())
    }

    /// `p*_ν`.
    pub fn pstar(nu: &Partition) -> Self {
        let n = nu.clone();
        Self::new(format!("p*_{nu}"), nu.size(), move |l| p_star_product(&n, l).into())
    }
}

impl fmt::Debug for DiagramFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagramFunction({}, degree {})", self.name, self.degree)
    }
}

/// `p*_k(λ) = Σ_i [(αλ_i - i + 1/2)^k - (-i + 1/2)^k]`.
pub fn p_star(k: u32, lambda: &Partition) -> PolyAlpha {
    let mut acc = PolyAlpha::zero();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let shift = frac(1, 2) - int(idx as i64 + 1);
        let base = PolyAlpha::linear(int(part as i64), shift.clone());
        acc += &base.pow(k);
        acc -= &PolyAlpha::constant(num_traits::Pow::pow(&shift, k));
    }
    acc
}

/// `p*_ν(λ) = ∏_i p*_{ν_i}(λ)`; equals 1 for `ν = ∅`.
pub fn p_star_product(nu: &Partition, lambda: &Partition) -> PolyAlpha {
    nu.parts()
        .iter()
        .fold(PolyAlpha::one(), |acc, &k| &acc * &p_star(k as u32, lambda))
}

/// `Ψ(λ; z) = z/(z+ℓ) ∏_i (z - αλ_i + i)/(z - αλ_i + i - 1)`.
pub fn psi(lambda: &Partition, z: &Rational) -> Result<RatAlpha, ShiftedError> {
    let l = lambda.len() as i64;
    let den0 = z + int(l);
    if den0.is_zero() {
        return Err(ShiftedError::PoleEncountered);
    }
    let mut acc = RatAlpha::constant(z / den0);
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = int(idx as i64 + 1);
        let num = PolyAlpha::linear(-int(part as i64), z + &i);
        let den = PolyAlpha::linear(-int(part as i64), z + &i - int(1));
        if den.is_zero() {
            return Err(ShiftedError::PoleEncountered);
        }
        acc = &acc * &RatAlpha::new(num, den);
    }
    Ok(acc)
}

/// The product form of `Ψ(r^p; z)`:
/// `z ∏_{s≤d}(z - αq_s + P_s) / ∏_{s≤d+1}(z - αq_s + P_{s-1})` with `q_{d+1} = 0`, `P_s = p_1+…+p_s`.
pub fn psi_multirect(m: &MultiRect, z: &Rational) -> Result<RatAlpha, ShiftedError> {
    let q = m.q();
    let d = m.d();
    let mut prefix = vec![0i64; d + 1];
    for s in 0..d {
        prefix[s + 1] = prefix[s] + m.p[s] as i64;
    }
    let qv = |s: usize| -> i64 { if s < d { q[s] as i64 } else { 0 } };
    let mut num = PolyAlpha::constant(z.clone());
    for s in 0..d {
        num = &num * &PolyAlpha::linear(int(-qv(s)), z + int(prefix[s + 1]));
    }
    let mut den = PolyAlpha::one();
    for s in 0..=d {
        den = &den * &PolyAlpha::linear(int(-qv(s)), z + int(prefix[s]));
    }
    if den.is_zero() {
        return Err(ShiftedError::PoleEncountered);
    }
    Ok(RatAlpha::new(num, den))
}

/// Truncated power series in `w = 1/z` with coefficients in `Q[α]`.
fn series_mul(a: &[PolyAlpha], b: &[PolyAlpha], order: usize) -> Vec<PolyAlpha> {
    let mut out = vec![PolyAlpha::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

/// `1/(1 - c w)` truncated.
fn geometric(c: &PolyAlpha, order: usize) -> Vec<PolyAlpha> {
    let mut out = Vec::with_capacity(order + 1);
    let mut pow = PolyAlpha::one();
    for _ in 0..=order {
        out.push(pow.clone());
        pow = &pow * c;
    }
    out
}

/// `Ψ(λ; z)` as a power series in `w = 1/z`, up to `w^order`.
pub fn psi_series(lambda: &Partition, order: usize) -> Vec<PolyAlpha> {
    // z/(z+ℓ) = 1/(1 + ℓw); each row gives (1 - c_i w)/(1 - (c_i + 1) w), c_i = αλ_i - i.
    let l = int(lambda.len() as i64);
    let mut acc = geometric(&PolyAlpha::constant(-l), order);
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let c = PolyAlpha::linear(int(part as i64), -int(idx as i64 + 1));
        let mut numer = vec![PolyAlpha::zero(); order + 1];
        numer[0] = PolyAlpha::one();
        if order >= 1 {
            numer[1] = -&c;
        }
        let c1 = &c + &PolyAlpha::one();
        acc = series_mul(&acc, &numer, order);
        acc = series_mul(&acc, &geometric(&c1, order), order);
    }
    acc
}

/// `p^θ_k(λ) = k [z^{-k}] log Ψ(λ; z)`, from the series of `Ψ` at `z = ∞`.
pub fn p_theta(k: usize, lambda: &Partition) -> PolyAlpha {
    if k == 0 {
        return PolyAlpha::zero();
    }
    let series = psi_series(lambda, k);
    // Ψ = 1 + f with f = O(w); log(1+f) = Σ_m (-1)^{m+1} f^m / m.
    let mut f = series;
    f[0] = PolyAlpha::zero();
    let mut log = vec![PolyAlpha::zero(); k + 1];
    let mut pow = f.clone();
    for m in 1..=k {
        let sign = if m % 2 == 1 { int(1) } else { int(-1) };
        let scale = sign / int(m as i64);
        for (slot, c) in log.iter_mut().zip(&pow) {
            *slot += &c.scale(&scale);
        }
        pow = series_mul(&pow, &f, k);
    }
    log[k].scale(&int(k as i64))
}

/// `S*_μ(λ)` as the ratio `det[(x_i+n-i)_{μ_j+n-j}] / det[(x_i+n-i)_{n-j}]`.
pub fn shifted_schur(mu: &Partition, lambda: &Partition) -> Rational {
    shifted_schur_n(mu, lambda, lambda.len().max(mu.len()))
}

/// The determinant ratio with an explicit number `n ≥ max(ℓ(λ), ℓ(μ))` of variables.
pub fn shifted_schur_n(mu: &Partition, lambda: &Partition, n: usize) -> Rational {
    assert!(n >= lambda.len().max(mu.len()));
    let falling = |x: i64, k: usize| -> Rational {
        (0..k as i64).fold(int(1), |acc, t| acc * int(x - t))
    };
    let x: Vec<i64> = (1..=n).map(|i| (lambda.part(i) + n - i) as i64).collect();
    let num: Vec<Vec<Rational>> = (0..n)
        .map(|i| (1..=n).map(|j| falling(x[i], mu.part(j) + n - j)).collect())
        .collect();
    let den: Vec<Vec<Rational>> = (0..n)
        .map(|i| (1..=n).map(|j| falling(x[i], n - j)).collect())
        .collect();
    det_rational(num) / det_rational(den)
}

/// `J*_μ(λ) = Σ_{ν ⊢ |μ|} θ_ν(μ) α^{ℓ(ν)-|μ|} Ch_ν(λ)`.
pub fn shifted_jack(mu: &Partition, lambda: &Partition) -> RatAlpha {
    let k = mu.size();
    let mut acc = RatAlpha::zero();
    for nu in partitions_of(k) {
        let th = jack::theta(&nu, mu).expect("same size");
        if th.is_zero() {
            continue;
        }
        let ch = jack::ch(&nu, lambda);
        if ch.is_zero() {
            continue;
        }
        let term = RatAlpha::from_poly(&th * &ch) * RatAlpha::alpha_pow(nu.len() as i64 - k as i64);
        acc += &term;
    }
    acc
}

/// `Σ_{ν ⊢ |μ|} K^ν_μ S*_ν(λ)`, the α = 1 value of `Ko_μ(λ)`.
pub fn ko_via_shifted_schur(mu: &Partition, lambda: &Partition) -> Rational {
    partitions_of(mu.size())
        .iter()
        .map(|nu| {
            let k = kostka(nu, mu).expect("same size");
            if k == 0 {
                Rational::zero()
            } else {
                big(BigInt::from(k)) * shifted_schur(nu, lambda)
            }
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `S*_μ(λ) = (n)_k f^{λ/μ} / f^λ` with `n = |λ|`, `k = |μ|`.
pub fn shifted_schur_via_syt(mu: &Partition, lambda: &Partition) -> Rational {
    if !lambda.contains(mu) {
        return Rational::zero();
    }
    let (n, k) = (lambda.size(), mu.size());
    let falling: BigInt = ((n - k + 1)..=n).map(BigInt::from).product();
    let skew = syt_count(lambda, mu).expect("contained");
    let full = syt_count(lambda, &Partition::empty()).expect("contained");
    Rational::new(falling * skew, full)
}

/// Coefficients over the products `p*_ν` with `|ν| ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PStarExpansion {
    pub degree: usize,
    pub coeffs: BTreeMap<Partition, RatAlpha>,
}

impl PStarExpansion {
    pub fn eval(&self, lambda: &Partition) -> RatAlpha {
        self.coeffs
            .iter()
            .map(|(nu, c)| c * &RatAlpha::from_poly(p_star_product(nu, lambda)))
            .sum()
    }

    pub fn get(&self, nu: &Partition) -> RatAlpha {
        self.coeffs.get(nu).cloned().unwrap_or_else(RatAlpha::zero)
    }
}

/// The factored system `M[λ][ν] = p*_ν(λ)` for one degree bound and α mode.
struct PStarSystem {
    basis: Vec<Partition>,
    solver: LuSolver,
}

fn pstar_system(k: usize, mode: &AlphaMode) -> Result<Arc<PStarSystem>, ShiftedError> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, AlphaMode), Arc<PStarSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (k, mode.clone());
    if let Some(s) = cache.lock().expect("cache lock").get(&key) {
        return Ok(s.clone());
    }
    let basis = partitions_up_to(k);
    let matrix = basis
        .par_iter()
        .map(|lambda| {
            basis
                .iter()
                .map(|nu| mode.specialize(&RatAlpha::from_poly(p_star_product(nu, lambda))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let solver = LuSolver::new(matrix).map_err(|_| ShiftedError::SingularSystem(k))?;
    let sys = Arc::new(PStarSystem { basis, solver });
    Ok(cache.lock().expect("cache lock").entry(key).or_insert(sys).clone())
}

/// Expands `F` over `{p*_ν : |ν| ≤ k}` and checks the result on every partition
/// of size `k+1` and `k+2` (the degree guard).
pub fn expand_in_pstar(f: &DiagramFunction, k: usize, mode: &AlphaMode) -> Result<PStarExpansion, ShiftedError> {
    let sys = pstar_system(k, mode)?;
    let values = sys
        .basis
        .par_iter()
        .map(|lambda| mode.specialize(&f.eval(lambda)))
        .collect::<Result<Vec<_>, _>>()?;
    let x = sys.solver.solve(&values);
    let coeffs = sys
        .basis
        .iter()
        .cloned()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let exp = PStarExpansion { degree: k, coeffs };
    let guard: Vec<Partition> = partitions_of(k + 1).into_iter().chain(partitions_of(k + 2)).collect();
    let bad = guard.par_iter().find_any(|lambda| {
        let direct = mode.specialize(&f.eval(lambda));
        let via = exp.eval(lambda);
        match (direct, mode.specialize(&via)) {
            (Ok(a), Ok(b)) => a != b,
            _ => true,
        }
    });
    if let Some(lambda) = bad {
        return Err(ShiftedError::DegreeGuardFailed {
            name: f.name.clone(),
            k,
            lambda: lambda.clone(),
        });
    }
    Ok(exp)
}

/// `p*_k(r^p)` as a polynomial in `p, r` (symbolic α).
///
/// Rows `P_{s-1}+1 ..= P_s` have length `q_s`; the sum over each block of rows
/// is done with Faulhaber polynomials in `P_s`.
pub fn pstar_on_multirect(k: usize, d: usize) -> MultiPoly {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), MultiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&(k, d)) {
        return p.clone();
    }
    let faul = faulhaber_table(k as u32);
    let half = RatAlpha::constant(frac(1, 2));
    let mut prefix = vec![MultiPoly::zero(d)];
    for s in 1..=d {
        prefix.push(&prefix[s - 1] + &MultiPoly::p(d, s));
    }
    // Σ_{i=P_{s-1}+1}^{P_s} i^m for each block s and power m.
    let block_sums: Vec<Vec<MultiPoly>> = (1..=d)
        .map(|s| {
            (0..=k)
                .map(|m| {
                    &MultiPoly::compose_into(&faul[m], &prefix[s]) - &MultiPoly::compose_into(&faul[m], &prefix[s - 1])
                })
                .collect()
        })
        .collect();
    let mut total = MultiPoly::zero(d);
    for s in 1..=d {
        // A = α q_s + 1/2, q_s = r_s + … + r_d.
        let mut q = MultiPoly::zero(d);
        for j in s..=d {
            q.add_assign_ref(&MultiPoly::r(d, j));
        }
        let a = &q.scale(&RatAlpha::alpha()) + &MultiPoly::constant(d, half.clone());
        let mut a_pow = vec![MultiPoly::one(d)];
        for e in 1..=k {
            a_pow.push(&a_pow[e - 1] * &a);
        }
        let half_pow: Vec<Rational> = (0..=k).map(|e| num_traits::Pow::pow(&frac(1, 2), e as u32)).collect();
        // (A - i)^k - (1/2 - i)^k = Σ_m C(k,m) (-1)^m i^m (A^{k-m} - (1/2)^{k-m}).
        for m in 0..=k {
            let sign = if m % 2 == 0 { int(1) } else { int(-1) };
            let c = sign * big(binomial(k as u64, m as u64));
            let diff = &a_pow[k - m] - &MultiPoly::constant(d, RatAlpha::constant(half_pow[k - m].clone()));
            if diff.is_zero() {
                continue;
            }
            let term = &diff * &block_sums[s - 1][m];
            total.add_scaled(&term, &RatAlpha::constant(c));
        }
    }
    cache.lock().expect("cache lock").insert((k, d), total.clone());
    total
}

/// `p*_ν(r^p) = ∏ p*_{ν_i}(r^p)`.
pub fn pstar_product_on_multirect(nu: &Partition, d: usize) -> MultiPoly {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), MultiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&(nu.clone(), d)) {
        return p.clone();
    }
    let out = if nu.is_empty() {
        MultiPoly::one(d)
    } else {
        let first = pstar_on_multirect(nu.part(1), d);
        let rest = Partition::new(nu.parts()[1..].to_vec()).expect("suffix of a partition");
        &first * &pstar_product_on_multirect(&rest, d)
    };
    cache.lock().expect("cache lock").insert((nu.clone(), d), out.clone());
    out
}

/// Substitutes the multirectangular form of each `p*_ν` into an expansion.
pub fn expansion_on_multirect(exp: &PStarExpansion, d: usize, mode: &AlphaMode) -> Result<MultiPoly, ShiftedError> {
    let mut out = MultiPoly::zero(d);
    for (nu, c) in &exp.coeffs {
        let mut p = pstar_product_on_multirect(nu, d);
        if let AlphaMode::Value(a) = mode {
            p = p.specialize_alpha(a)?;
        }
        out.add_scaled(&p, c);
    }
    Ok(out)
}

/// `F(r^p)` as a polynomial in `p_1..p_d, r_1..r_d`.
pub fn reconstruct_multirect(f: &DiagramFunction, d: usize, mode: &AlphaMode) -> Result<MultiPoly, ShiftedError> {
    let exp = expand_in_pstar(f, f.degree, mode)?;
    let poly = expansion_on_multirect(&exp, d, mode)?;
    if !poly.has_polynomial_coeffs() {
        return Err(ShiftedError::DenominatorNotCleared(f.name.clone()));
    }
    Ok(poly)
}

/// Evaluates a `p, r` polynomial at a diagram's coordinates.
pub fn eval_on(poly: &MultiPoly, m: &MultiRect) -> RatAlpha {
    poly.eval(&m.p_i64(), &m.r_i64())
}

/// The univariate polynomial `t ↦ Σ_{i=1}^t i^k`, re-exported for callers that
/// build their own block sums.
pub fn power_sum_poly(k: u32) -> UniPoly {
    crate::exact::faulhaber(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::multirect_grid;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn p_star_values() {
        for lam in partitions_up_to(6) {
            assert_eq!(p_star(1, &lam), PolyAlpha::monomial(int(lam.size() as i64), 1));
        }
        assert!(p_star(3, &Partition::empty()).is_zero());
        assert_eq!(p_star(2, &part(&[1])), PolyAlpha::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn psi_values() {
        let z = frac(7, 3);
        assert!(psi(&Partition::empty(), &z).unwrap().is_one());
        let one = psi(&part(&[1]), &z).unwrap();
        let expected = RatAlpha::new(
            PolyAlpha::linear(-&z, &z * (&z + int(1))),
            PolyAlpha::linear(-(&z + int(1)), (&z + int(1)) * &z),
        );
        assert_eq!(one, expected);
        assert!(psi(&part(&[2, 1]), &int(-2)).is_err());
    }

    #[test]
    fn psi_product_formula() {
        let zs = [frac(7, 3), frac(-11, 5), int(13)];
        for d in 1..=2 {
            for m in multirect_grid(d, 3) {
                for z in &zs {
                    let lam = m.to_partition();
                    assert_eq!(psi(&lam, z).unwrap(), psi_multirect(&m, z).unwrap(), "{m:?}");
                }
            }
        }
    }

    /// `p^θ_k = (-ℓ)^k + Σ_i [(αλ_i - i + 1)^k - (αλ_i - i)^k]`, from summing logarithms.
    fn p_theta_closed(k: u32, lam: &Partition) -> PolyAlpha {
        let mut acc = PolyAlpha::constant(num_traits::Pow::pow(&int(-(lam.len() as i64)), k));
        for (idx, &part) in lam.parts().iter().enumerate() {
            let c = PolyAlpha::linear(int(part as i64), -int(idx as i64 + 1));
            acc += &(&c + &PolyAlpha::one()).pow(k);
            acc -= &c.pow(k);
        }
        acc
    }

    #[test]
    fn p_theta_values() {
        for lam in partitions_up_to(6) {
            assert!(p_theta(1, &lam).is_zero());
            for k in 2..=6 {
                assert_eq!(p_theta(k, &lam), p_theta_closed(k as u32, &lam), "k={k} {lam}");
            }
        }
        assert!(p_theta(3, &Partition::empty()).is_zero());
    }

    #[test]
    fn psi_product_formula_random_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 20 {
            let d = rng.gen_range(1..=3);
            let p: Vec<usize> = (0..d).map(|_| rng.gen_range(0..4)).collect();
            let r: Vec<usize> = (0..d).map(|_| rng.gen_range(0..4)).collect();
            let m = MultiRect::new(p, r);
            let z = frac(rng.gen_range(-40..40), rng.gen_range(1..7));
            let a = frac(rng.gen_range(1..30), rng.gen_range(1..5));
            let (Ok(lhs), Ok(rhs)) = (psi(&m.to_partition(), &z), psi_multirect(&m, &z)) else {
                continue;
            };
            if let (Some(x), Some(y)) = (lhs.eval(&a), rhs.eval(&a)) {
                assert_eq!(x, y, "{m:?} z={z} a={a}");
                checked += 1;
            }
        }
    }

    #[test]
    fn p_theta_two_on_single_box() {
        // log Ψ((1); z) = log(1 - (α-1)w) - log(1+w) - log(1-αw); the w² coefficient is
        // -(α-1)²/2 + 1/2 + α²/2 = α.
        assert_eq!(p_theta(2, &part(&[1])), PolyAlpha::monomial(int(2), 1));
    }

    #[test]
    fn jstar_one_part_is_factorial_times_ko() {
        for k in 1..=4usize {
            let mu = part(&[k]);
            let fact = RatAlpha::constant(big(crate::exact::rational::factorial(k as u64)));
            for lam in partitions_up_to(6) {
                assert_eq!(shifted_jack(&mu, &lam), &fact * &RatAlpha::from_poly(jack::ko(&mu, &lam)), "{lam}");
            }
        }
    }

    #[test]
    fn jstar_at_one_is_multiple_of_shifted_schur() {
        let one = int(1);
        for k in 1..=3 {
            for mu in partitions_of(k) {
                let mut ratio: Option<Rational> = None;
                for lam in partitions_up_to(k + 2).into_iter().filter(|l| l.contains(&mu)) {
                    let j = shifted_jack(&mu, &lam).eval(&one).unwrap();
                    let r = j / shifted_schur(&mu, &lam);
                    match &ratio {
                        None => ratio = Some(r),
                        Some(prev) => assert_eq!(prev, &r, "{mu} {lam}"),
                    }
                }
            }
        }
    }

    #[test]
    fn shifted_schur_values() {
        for lam in partitions_up_to(6) {
            assert_eq!(shifted_schur(&part(&[1]), &lam), int(lam.size() as i64));
            for k in 1..=4 {
                for mu in partitions_of(k) {
                    let v = shifted_schur(&mu, &lam);
                    assert_eq!(v, shifted_schur_via_syt(&mu, &lam), "mu={mu} lam={lam}");
                    let n = lam.len().max(mu.len());
                    assert_eq!(v, shifted_schur_n(&mu, &lam, n + 1));
                }
            }
        }
        assert_eq!(shifted_schur(&part(&[2, 1]), &part(&[2, 1])), int(3));
        assert!(shifted_schur(&part(&[3]), &part(&[2, 2])).is_zero());
    }

    #[test]
    fn ko_via_schur_examples() {
        assert_eq!(ko_via_shifted_schur(&part(&[2]), &part(&[2, 1])), int(3));
        assert_eq!(ko_via_shifted_schur(&part(&[1, 1]), &part(&[1, 1])), int(2));
        for lam in partitions_up_to(5) {
            assert_eq!(ko_via_shifted_schur(&part(&[1]), &lam), int(lam.size() as i64));
        }
    }

    #[test]
    fn jstar_vanishing_and_diagonal() {
        for k in 1..=3 {
            for mu in partitions_of(k) {
                for lam in partitions_up_to(k) {
                    let v = shifted_jack(&mu, &lam);
                    if lam == mu {
                        let (h, hp) = mu.hook_products();
                        let expected = RatAlpha::from_poly(&h * &hp) * RatAlpha::alpha_pow(-(k as i64));
                        assert_eq!(v, expected);
                    } else {
                        assert!(v.is_zero(), "J*_{mu}({lam}) = {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn pstar_multirect_matches_direct() {
        for k in 1..=5 {
            for d in 1..=2 {
                let poly = pstar_on_multirect(k, d);
                for m in multirect_grid(d, 2) {
                    let direct = p_star(k as u32, &m.to_partition());
                    assert_eq!(eval_on(&poly, &m), RatAlpha::from_poly(direct), "k={k} {m:?}");
                }
            }
        }
        let m = MultiRect::new(vec![1, 2], vec![2, 1]);
        for k in 1..=5 {
            assert_eq!(eval_on(&pstar_on_multirect(k, 2), &m), p_star(k as u32, &part(&[3, 1, 1])).into());
        }
        // p*_1 = α Σ_s p_s q_s.
        let d = 2;
        let expected = (&(&MultiPoly::p(d, 1) * &(&MultiPoly::r(d, 1) + &MultiPoly::r(d, 2)))
            + &(&MultiPoly::p(d, 2) * &MultiPoly::r(d, 2)))
            .scale(&RatAlpha::alpha());
        assert_eq!(pstar_on_multirect(1, d), expected);
    }

    #[test]
    fn expansion_examples() {
        let nu = part(&[2, 1]);
        let e = expand_in_pstar(&DiagramFunction::pstar(&nu), 3, &AlphaMode::Symbolic).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert!(e.get(&nu).is_one());

        let e = expand_in_pstar(&DiagramFunction::ch(&part(&[1])), 1, &AlphaMode::Symbolic).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.get(&part(&[1])), RatAlpha::alpha_pow(-1));

        let e = expand_in_pstar(&DiagramFunction::ko(&part(&[2])), 2, &AlphaMode::Symbolic).unwrap();
        assert_eq!(e.eval(&part(&[2])), PolyAlpha::from_ints(&[1, 1]).into());
        assert_eq!(e.eval(&part(&[2, 1])), PolyAlpha::from_ints(&[2, 1]).into());
        assert!(e.eval(&part(&[1, 1])).is_zero());
    }

    #[test]
    fn degree_guard_rejects_wrong_bound() {
        let f = DiagramFunction::ko(&part(&[3]));
        let mut lowered = f.clone();
        lowered.degree = 2;
        assert!(matches!(
            expand_in_pstar(&lowered, 2, &AlphaMode::Symbolic),
            Err(ShiftedError::DegreeGuardFailed { .. })
        ));
    }

    #[test]
    fn reconstruction_examples() {
        let d = 2;
        let ch1 = reconstruct_multirect(&DiagramFunction::ch(&part(&[1])), d, &AlphaMode::Symbolic).unwrap();
        let expected = &(&(&MultiPoly::p(d, 1) * &MultiPoly::r(d, 1)) + &(&MultiPoly::p(d, 1) * &MultiPoly::r(d, 2)))
            + &(&MultiPoly::p(d, 2) * &MultiPoly::r(d, 2));
        assert_eq!(ch1, expected);

        let p = MultiPoly::p(1, 1);
        let r = MultiPoly::r(1, 1);
        let ch2 = reconstruct_multirect(&DiagramFunction::ch(&part(&[2])), 1, &AlphaMode::one()).unwrap();
        assert_eq!(ch2, &(&p * &r.pow(2)) - &(&p.pow(2) * &r));

        // (1+α) p r(r-1)/2 + p(p-1) r(r-1)/2
        let ko2 = reconstruct_multirect(&DiagramFunction::ko(&part(&[2])), 1, &AlphaMode::Symbolic).unwrap();
        let rr = &r * &(&r - &MultiPoly::one(1));
        let pp = &p * &(&p - &MultiPoly::one(1));
        let one_plus_a = RatAlpha::from_poly(PolyAlpha::from_ints(&[1, 1]));
        let expected = (&(&p * &rr).scale(&one_plus_a) + &(&pp * &rr)).scale_rational(&frac(1, 2));
        assert_eq!(ko2, expected);
    }

    #[test]
    fn reconstruction_matches_grid_for_cheap_functions() {
        for d in 1..=2 {
            for mu in partitions_up_to(3).into_iter().skip(1) {
                let f = DiagramFunction::shifted_schur(&mu);
                let poly = reconstruct_multirect(&f, d, &AlphaMode::one()).unwrap();
                for m in multirect_grid(d, 3) {
                    assert_eq!(eval_on(&poly, &m), f.eval(&m.to_partition()), "{mu} {m:?}");
                }
            }
        }
    }
}
