//! α = 1 formulas in multirectangular coordinates, built from the polynomials
//! `N_{σ,τ}(r, p)` over compatible colorings of cycles.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{permutations, young_subgroup, CombError, Permutation, SetPartition};
use crate::exact::rational::{big, factorial};
use crate::exact::{Monomial, MultiPoly, RatAlpha, Rational};
use crate::partitions::{partitions_of, Partition};
use crate::symfun::character;

/// Colorings `v` of the blocks of `S` and `w` of the blocks of `T` by `1..=d`
/// with `v(S_i) ≤ w(T_j)` whenever `S_i ∩ T_j ≠ ∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePair {
    pub v: Vec<usize>,
    pub w: Vec<usize>,
}

/// Pairs of blocks `(i, j)` with `S_i ∩ T_j ≠ ∅`.
fn meeting_blocks(s: &SetPartition, t: &SetPartition) -> Vec<(usize, usize)> {
    let ls = s.labels();
    let lt = t.labels();
    let mut out: Vec<(usize, usize)> = ls.iter().zip(&lt).map(|(&a, &b)| (a, b)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// All maps `{0..n-1} → {1..=d}` as vectors, lexicographically.
fn all_maps(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=d).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Enumerates every compatible pair for the set-partitions `s`, `t`.
pub fn compatible_pairs(s: &SetPartition, t: &SetPartition, d: usize) -> Vec<CompatiblePair> {
    let meet = meeting_blocks(s, t);
    let ws = all_maps(t.num_blocks(), d);
    let mut out = Vec::new();
    for v in all_maps(s.num_blocks(), d) {
        for w in &ws {
            if meet.iter().all(|&(i, j)| v[i] <= w[j]) {
                out.push(CompatiblePair { v: v.clone(), w: w.clone() });
            }
        }
    }
    out
}

/// Integer-coefficient polynomial in `p_1..p_d, r_1..r_d`, used for the sums below.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IntPoly {
    d: usize,
    terms: HashMap<Vec<u32>, i64>,
}

impl IntPoly {
    pub(crate) fn zero(d: usize) -> Self {
        IntPoly { d, terms: HashMap::new() }
    }

    pub(crate) fn add_monomial(&mut self, exps: Vec<u32>, c: i64) {
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += c;
    }

    pub(crate) fn add_scaled(&mut self, other: &IntPoly, c: i64) {
        if c == 0 {
            return;
        }
        for (m, x) in &other.terms {
            *self.terms.entry(m.clone()).or_insert(0) += c * x;
        }
    }

    pub(crate) fn to_multipoly(&self, scale: &Rational) -> MultiPoly {
        MultiPoly::from_terms(
            self.d,
            self.terms
                .iter()
                .filter(|(_, &c)| c != 0)
                .map(|(m, &c)| (Monomial(m.clone()), RatAlpha::constant(big(BigInt::from(c)) * scale))),
        )
    }
}

fn n_poly_int(s: &SetPartition, t: &SetPartition, d: usize) -> IntPoly {
    let mut out = IntPoly::zero(d);
    for pair in compatible_pairs(s, t, d) {
        let mut exps = vec![0u32; 2 * d];
        for &c in &pair.v {
            exps[c - 1] += 1;
        }
        for &c in &pair.w {
            exps[d + c - 1] += 1;
        }
        out.add_monomial(exps, 1);
    }
    out
}

/// `N` depends only on the cycle partitions; memoized by `(C(σ), C(τ), d)`.
pub(crate) fn n_cached(s: &SetPartition, t: &SetPartition, d: usize) -> Arc<IntPoly> {
    static CACHE: OnceLock<Mutex<HashMap<(SetPartition, SetPartition, usize), Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (s.clone(), t.clone(), d);
    if let Some(p) = cache.lock().expect("cache lock").get(&key) {
        return p.clone();
    }
    let p = Arc::new(n_poly_int(s, t, d));
    cache.lock().expect("cache lock").insert(key, p.clone());
    p
}

/// `N_{σ,τ}(r, p)` summed over compatible colorings of the cycles.
pub fn n_poly(sigma: &Permutation, tau: &Permutation, d: usize) -> MultiPoly {
    assert_eq!(sigma.size(), tau.size());
    n_cached(&sigma.cycles(), &tau.cycles(), d).to_multipoly(&Rational::one())
}

/// The same polynomial from injective compatible colorings of coarsenings
/// `S ≥ C(σ)`, `T ≥ C(τ)`, with exponents `|C(σ)/S_i|` and `|C(τ)/T_j|`.
pub fn n_poly_injective(sigma: &Permutation, tau: &Permutation, d: usize) -> MultiPoly {
    let cs = sigma.cycles();
    let ct = tau.cycles();
    let mut out = IntPoly::zero(d);
    for s in cs.coarsenings().into_iter().filter(|s| s.num_blocks() <= d) {
        let ms = s.induced_counts(&cs);
        for t in ct.coarsenings().into_iter().filter(|t| t.num_blocks() <= d) {
            let mt = t.induced_counts(&ct);
            for pair in compatible_pairs(&s, &t, d) {
                if !is_injective(&pair.v) || !is_injective(&pair.w) {
                    continue;
                }
                let mut exps = vec![0u32; 2 * d];
                for (i, &c) in pair.v.iter().enumerate() {
                    exps[c - 1] += ms[i] as u32;
                }
                for (j, &c) in pair.w.iter().enumerate() {
                    exps[d + c - 1] += mt[j] as u32;
                }
                out.add_monomial(exps, 1);
            }
        }
    }
    out.to_multipoly(&Rational::one())
}

fn is_injective(v: &[usize]) -> bool {
    let mut seen = v.to_vec();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// `Σ_{στ = π} ε(τ) N_{σ,τ}` for one permutation `π`.
fn factorization_sum(pi: &Permutation, d: usize) -> Result<IntPoly, CombError> {
    let k = pi.size();
    let perms = permutations(k)?;
    let parts: Vec<IntPoly> = perms
        .par_iter()
        .map(|sigma| {
            // τ = σ^{-1} π, so σ ∘ τ = π.
            let tau = sigma.inverse().compose(pi);
            let mut acc = IntPoly::zero(d);
            acc.add_scaled(&n_cached(&sigma.cycles(), &tau.cycles(), d), tau.sign());
            acc
        })
        .collect();
    let mut out = IntPoly::zero(d);
    for p in &parts {
        out.add_scaled(p, 1);
    }
    Ok(out)
}

fn ch_int(mu: &Partition, d: usize) -> Result<Arc<IntPoly>, CombError> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&(mu.clone(), d)) {
        return Ok(p.clone());
    }
    let p = Arc::new(factorization_sum(&Permutation::of_cycle_type(mu), d)?);
    cache.lock().expect("cache lock").insert((mu.clone(), d), p.clone());
    Ok(p)
}

/// `Ch^{(1)}_μ(r^p) = Σ_{στ = π_μ} ε(τ) N_{σ,τ}`.
pub fn ch1_multirect(mu: &Partition, d: usize) -> Result<MultiPoly, CombError> {
    Ok(ch_int(mu, d)?.to_multipoly(&Rational::one()))
}

/// `S*_μ(r^p) = (1/k!) Σ_{σ,τ} χ^μ(στ) ε(τ) N_{σ,τ}`, summed class by class:
/// each class `ν` contributes `(k!/z_ν) χ^μ_ν` times its factorization sum.
pub fn shifted_schur_multirect(mu: &Partition, d: usize) -> Result<MultiPoly, CombError> {
    let k = mu.size();
    let mut acc = MultiPoly::zero(d);
    for nu in partitions_of(k) {
        let chi = character(mu, &nu).expect("same size");
        if chi == 0 {
            continue;
        }
        let weight = Rational::new(BigInt::from(chi), nu.z());
        acc.add_scaled(&ch_int(&nu, d)?.to_multipoly(&weight), &RatAlpha::one());
    }
    Ok(acc)
}

/// The double sum over all of `𝔖_k × 𝔖_k` without grouping by class; for cross-checks.
pub fn shifted_schur_multirect_raw(mu: &Partition, d: usize) -> Result<MultiPoly, CombError> {
    let k = mu.size();
    let perms = permutations(k)?;
    let chi: HashMap<Partition, i64> = partitions_of(k)
        .into_iter()
        .map(|nu| {
            let c = character(mu, &nu).expect("same size");
            (nu, c)
        })
        .collect();
    let mut out = IntPoly::zero(d);
    for sigma in &perms {
        for tau in &perms {
            let c = chi[&sigma.compose(tau).cycle_type()] * tau.sign();
            out.add_scaled(&n_cached(&sigma.cycles(), &tau.cycles(), d), c);
        }
    }
    Ok(out.to_multipoly(&Rational::new(BigInt::one(), factorial(k as u64))))
}

/// `Ko_μ(r^p) = (1/∏μ_i!) Σ_{C(στ) ≤ U} ε(τ) N_{σ,τ}` for a set-partition `U` of type `μ`.
pub fn ko_multirect_with(u: &SetPartition, d: usize) -> Result<MultiPoly, CombError> {
    let k = u.ground_size();
    let perms = permutations(k)?;
    // C(στ) ≤ U means π = στ lies in the Young subgroup of U; then τ = σ^{-1} π.
    let young = young_subgroup(u);
    let parts: Vec<IntPoly> = perms
        .par_iter()
        .map(|sigma| {
            let inv = sigma.inverse();
            let mut acc = IntPoly::zero(d);
            for pi in &young {
                let tau = inv.compose(pi);
                acc.add_scaled(&n_cached(&sigma.cycles(), &tau.cycles(), d), tau.sign());
            }
            acc
        })
        .collect();
    let mut out = IntPoly::zero(d);
    for p in &parts {
        out.add_scaled(p, 1);
    }
    let denom: BigInt = u.block_sizes().parts().iter().map(|&m| factorial(m as u64)).product();
    Ok(out.to_multipoly(&Rational::new(BigInt::one(), denom)))
}

/// `Ko^{(1)}_μ(r^p)` with `U_μ` the interval set-partition.
pub fn ko_multirect_sym(mu: &Partition, d: usize) -> Result<MultiPoly, CombError> {
    ko_multirect_with(&SetPartition::intervals(mu.parts()), d)
}

/// Stanley's rectangle formula `Σ_{στ = π_μ} ε(τ) p^{|C(σ)|} r^{|C(τ)|}` at `d = 1`,
/// computed from cycle counts alone.
pub fn rectangle_formula(mu: &Partition) -> Result<MultiPoly, CombError> {
    let pi = Permutation::of_cycle_type(mu);
    let mut out = IntPoly::zero(1);
    for sigma in permutations(mu.size())? {
        let tau = sigma.inverse().compose(&pi);
        out.add_monomial(vec![sigma.num_cycles() as u32, tau.num_cycles() as u32], tau.sign());
    }
    Ok(out.to_multipoly(&Rational::one()))
}

/// Rewrites a polynomial in `(p, r)` in Stanley's coordinates `(p, q)`,
/// `q_i = r_i + … + r_d`; the result stores `q_i` in the `r_i` slot.
pub fn to_stanley_coordinates(poly: &MultiPoly) -> MultiPoly {
    let d = poly.dim();
    let mut images: Vec<MultiPoly> = (1..=d).map(|i| MultiPoly::p(d, i)).collect();
    for j in 1..=d {
        // r_j = q_j - q_{j+1}
        let mut img = MultiPoly::r(d, j);
        if j < d {
            img = &img - &MultiPoly::r(d, j + 1);
        }
        images.push(img);
    }
    poly.substitute(&images)
}

/// Checks that `(-1)^{|μ|} Ch_μ`, written in `(p, -q)`, has nonnegative coefficients.
pub fn stanley_sign_pattern_holds(mu: &Partition, d: usize) -> Result<bool, CombError> {
    let ch = to_stanley_coordinates(&ch1_multirect(mu, d)?);
    let k = mu.size() as u32;
    let ok = ch.terms().all(|(m, c)| {
        let q_deg: u32 = m.r_exps().iter().sum();
        let c = c.as_constant().expect("α-free");
        if (k + q_deg) % 2 == 0 {
            c >= Rational::zero()
        } else {
            c <= Rational::zero()
        }
    });
    Ok(ok)
}

/// Character values `χ^μ` indexed by cycle type.
fn character_table_row(mu: &Partition) -> HashMap<Partition, i64> {
    partitions_of(mu.size())
        .into_iter()
        .map(|nu| {
            let c = character(mu, &nu).expect("same size");
            (nu, c)
        })
        .collect()
}

/// `A^μ_{S,T}` as a polynomial with `x_i` in the slot of `p_i` and `y_j` in that
/// of `r_j` (dimension `max(|S|, |T|)`).
pub fn a_poly(mu: &Partition, s: &SetPartition, t: &SetPartition) -> MultiPoly {
    let d = s.num_blocks().max(t.num_blocks());
    let chi = character_table_row(mu);
    let ys = young_subgroup(s);
    let yt = young_subgroup(t);
    let mut out = IntPoly::zero(d);
    for sigma in &ys {
        let ms = s.induced_counts(&sigma.cycles());
        for tau in &yt {
            let c = chi[&sigma.compose(tau).cycle_type()] * tau.sign();
            if c == 0 {
                continue;
            }
            let mt = t.induced_counts(&tau.cycles());
            let mut exps = vec![0u32; 2 * d];
            for (i, &m) in ms.iter().enumerate() {
                exps[i] = m as u32;
            }
            for (j, &m) in mt.iter().enumerate() {
                exps[d + j] = m as u32;
            }
            out.add_monomial(exps, c);
        }
    }
    out.to_multipoly(&Rational::one())
}

/// `B^μ_{S,T} = Σ_{σ ∈ 𝔖_S, τ ∈ 𝔖_T} χ^μ(στ) ε(τ)`.
pub fn b_coeff(mu: &Partition, s: &SetPartition, t: &SetPartition) -> i64 {
    let chi = character_table_row(mu);
    b_coeff_with(&chi, &young_subgroup(s), &young_subgroup(t))
}

fn b_coeff_with(chi: &HashMap<Partition, i64>, ys: &[Permutation], yt: &[Permutation]) -> i64 {
    let mut total = 0;
    for sigma in ys {
        for tau in yt {
            total += chi[&sigma.compose(tau).cycle_type()] * tau.sign();
        }
    }
    total
}

/// Outcome of checking `B^μ_{S,T} ≥ 0` over every `μ ⊢ k` and pair `(S, T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BReport {
    pub k: usize,
    pub cases: usize,
    pub negative: Vec<(Partition, SetPartition, SetPartition, i64)>,
}

pub fn verify_b(k: usize) -> Result<BReport, CombError> {
    let sps = crate::combinatorics::set_partitions(k)?;
    let groups: Vec<Vec<Permutation>> = sps.iter().map(young_subgroup).collect();
    let mut cases = 0;
    let mut negative = Vec::new();
    for mu in partitions_of(k) {
        let chi = character_table_row(&mu);
        let found: Vec<_> = (0..sps.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let chi = &chi;
                let groups = &groups;
                (0..sps.len()).filter_map(move |j| {
                    let b = b_coeff_with(chi, &groups[i], &groups[j]);
                    (b < 0).then_some((i, j, b))
                })
            })
            .collect();
        cases += sps.len() * sps.len();
        negative.extend(found.into_iter().map(|(i, j, b)| (mu.clone(), sps[i].clone(), sps[j].clone(), b)));
    }
    Ok(BReport { k, cases, negative })
}

/// `Σ_{σ ∈ 𝔖_S, τ ∈ 𝔖_T, στ ∈ 𝔖_U} ε(τ)`; no sign is guaranteed.
pub fn question_bad_sum(s: &SetPartition, t: &SetPartition, u: &SetPartition) -> i64 {
    let yt = young_subgroup(t);
    young_subgroup(s)
        .iter()
        .map(|sigma| {
            yt.iter()
                .filter(|tau| sigma.compose(tau).preserves_blocks(u))
                .map(|tau| tau.sign())
                .sum::<i64>()
        })
        .sum()
}

/// Searches all triples of set-partitions of `[k]` for a negative `question_bad_sum`.
/// Returns the number of triples and the first negative one found, if any.
pub fn question_bad_search(k: usize) -> Result<(usize, Option<(SetPartition, SetPartition, SetPartition, i64)>), CombError> {
    let sps = crate::combinatorics::set_partitions(k)?;
    let groups: Vec<Vec<Permutation>> = sps.iter().map(young_subgroup).collect();
    let n = sps.len();
    let hit = (0..n * n).into_par_iter().find_map_first(|ij| {
        let (i, j) = (ij / n, ij % n);
        sps.iter().find_map(|u| {
            let mut total = 0;
            for sigma in &groups[i] {
                for tau in &groups[j] {
                    if sigma.compose(tau).preserves_blocks(u) {
                        total += tau.sign();
                    }
                }
            }
            (total < 0).then(|| (sps[i].clone(), sps[j].clone(), u.clone(), total))
        })
    });
    Ok((n * n * n, hit))
}

trait BlockPreserving {
    fn preserves_blocks(&self, u: &SetPartition) -> bool;
}

impl BlockPreserving for Permutation {
    /// Whether every cycle lies inside a block of `u`.
    fn preserves_blocks(&self, u: &SetPartition) -> bool {
        let labels = u.labels();
        (0..self.size()).all(|x| labels[x] == labels[self.apply(x)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::set_partitions;
    use crate::exact::rational::int;
    use crate::exact::{to_falling_factorial, FfKey};
    use crate::partitions::{multirect_grid, MultiRect};
    use crate::shifted::{eval_on, shifted_schur};

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn pr(d: usize, i: usize, j: usize) -> MultiPoly {
        &MultiPoly::p(d, i) * &MultiPoly::r(d, j)
    }

    #[test]
    fn n_single_point() {
        let id = Permutation::identity(1);
        let n = n_poly(&id, &id, 3);
        let mut expected = MultiPoly::zero(3);
        for i in 1..=3 {
            for j in i..=3 {
                expected.add_assign_ref(&pr(3, i, j));
            }
        }
        assert_eq!(n, expected);
    }

    #[test]
    fn n_at_d_one() {
        for sigma in permutations(3).unwrap() {
            for tau in permutations(3).unwrap() {
                let expected = &MultiPoly::p(1, 1).pow(sigma.num_cycles() as u32)
                    * &MultiPoly::r(1, 1).pow(tau.num_cycles() as u32);
                assert_eq!(n_poly(&sigma, &tau, 1), expected);
            }
        }
    }

    #[test]
    fn n_routes_agree() {
        for k in 1..=4 {
            let perms = permutations(k).unwrap();
            for d in 1..=3 {
                for sigma in &perms {
                    for tau in perms.iter().step_by(if k == 4 { 5 } else { 1 }) {
                        assert_eq!(n_poly(sigma, tau, d), n_poly_injective(sigma, tau, d), "{sigma:?} {tau:?} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn n_conjugation_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let perms = permutations(4).unwrap();
        for _ in 0..50 {
            let s = perms.choose(&mut rng).unwrap();
            let t = perms.choose(&mut rng).unwrap();
            let rho = perms.choose(&mut rng).unwrap();
            assert_eq!(n_poly(s, t, 2), n_poly(&s.conjugate_by(rho), &t.conjugate_by(rho), 2));
        }
    }

    #[test]
    fn ch_examples() {
        let p = MultiPoly::p(1, 1);
        let r = MultiPoly::r(1, 1);
        assert_eq!(ch1_multirect(&part(&[2]), 1).unwrap(), &(&p * &r.pow(2)) - &(&p.pow(2) * &r));
        let expected = &(&pr(2, 1, 1) + &pr(2, 1, 2)) + &pr(2, 2, 2);
        assert_eq!(ch1_multirect(&part(&[1]), 2).unwrap(), expected);
        assert_eq!(ko_multirect_sym(&part(&[1]), 2).unwrap(), expected);
        assert_eq!(shifted_schur_multirect(&part(&[1]), 1).unwrap(), pr(1, 1, 1));
    }

    #[test]
    fn class_grouping_matches_raw_double_sum() {
        for k in 1..=3 {
            for mu in partitions_of(k) {
                for d in 1..=2 {
                    assert_eq!(
                        shifted_schur_multirect(&mu, d).unwrap(),
                        shifted_schur_multirect_raw(&mu, d).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn shifted_schur_matches_determinant() {
        let m = MultiRect::new(vec![2], vec![2]);
        for k in 1..=4 {
            for mu in partitions_of(k) {
                let poly = shifted_schur_multirect(&mu, 1).unwrap();
                assert_eq!(eval_on(&poly, &m), RatAlpha::constant(shifted_schur(&mu, &part(&[2, 2]))));
            }
        }
        for mu in partitions_of(3) {
            let poly = shifted_schur_multirect(&mu, 2).unwrap();
            for m in multirect_grid(2, 2) {
                assert_eq!(eval_on(&poly, &m), RatAlpha::constant(shifted_schur(&mu, &m.to_partition())));
            }
        }
    }

    #[test]
    fn two_column_schur_is_ff_positive() {
        let ff = to_falling_factorial(&shifted_schur_multirect(&part(&[1, 1]), 1).unwrap()).unwrap();
        assert!(ff.is_nonnegative().is_pass());
    }

    #[test]
    fn ko_independent_of_u() {
        let mu = part(&[2, 1, 1]);
        let base = ko_multirect_sym(&mu, 2).unwrap();
        for blocks in [
            vec![vec![0, 3], vec![1], vec![2]],
            vec![vec![1, 2], vec![0], vec![3]],
            vec![vec![2, 3], vec![1], vec![0]],
        ] {
            assert_eq!(ko_multirect_with(&SetPartition::from_blocks(4, blocks), 2).unwrap(), base);
        }
    }

    #[test]
    fn rectangle_formula_matches() {
        for k in 1..=5 {
            for mu in partitions_of(k) {
                assert_eq!(ch1_multirect(&mu, 1).unwrap(), rectangle_formula(&mu).unwrap());
            }
        }
    }

    #[test]
    fn stanley_signs() {
        for k in 1..=3 {
            for mu in partitions_of(k) {
                for d in 1..=2 {
                    assert!(stanley_sign_pattern_holds(&mu, d).unwrap(), "{mu} d={d}");
                }
            }
        }
    }

    #[test]
    fn a_poly_two_point_example() {
        let full = SetPartition::one_block(2);
        let a = a_poly(&part(&[2]), &full, &full);
        let x = MultiPoly::p(1, 1);
        let y = MultiPoly::r(1, 1);
        let expected = &(&(&x.pow(2) * &y.pow(2)) - &(&x.pow(2) * &y)) + &(&(&x * &y.pow(2)) - &(&x * &y));
        assert_eq!(a, expected);
        assert_eq!(b_coeff(&part(&[2]), &full, &full), 0);
    }

    #[test]
    fn b_on_singletons_is_dimension() {
        for k in 1..=4 {
            let s = SetPartition::singletons(k);
            for mu in partitions_of(k) {
                assert_eq!(b_coeff(&mu, &s, &s), character(&mu, &Partition::ones(k)).unwrap());
            }
        }
    }

    #[test]
    fn a_poly_falling_factorial_form() {
        for k in 1..=3 {
            let sps = set_partitions(k).unwrap();
            for mu in partitions_of(k) {
                for s in &sps {
                    for t in &sps {
                        let d = s.num_blocks().max(t.num_blocks());
                        let ff = to_falling_factorial(&a_poly(&mu, s, t)).unwrap();
                        let mut expected: HashMap<FfKey, i64> = HashMap::new();
                        for s2 in sps.iter().filter(|x| x.refines(s)) {
                            for t2 in sps.iter().filter(|x| x.refines(t)) {
                                let mut a = vec![0u32; d];
                                let mut b = vec![0u32; d];
                                for (i, c) in s.induced_counts(s2).into_iter().enumerate() {
                                    a[i] = c as u32;
                                }
                                for (j, c) in t.induced_counts(t2).into_iter().enumerate() {
                                    b[j] = c as u32;
                                }
                                *expected.entry(FfKey::new(0, &a, &b)).or_insert(0) += b_coeff(&mu, s2, t2);
                            }
                        }
                        for (key, c) in &expected {
                            assert_eq!(ff.coeff(key), int(*c), "{mu} {s} {t}");
                        }
                        assert!(ff.terms().all(|(key, _)| expected.contains_key(key)));
                    }
                }
            }
        }
    }

    #[test]
    fn b_nonnegative_small() {
        for k in 1..=4 {
            let rep = verify_b(k).unwrap();
            assert!(rep.negative.is_empty(), "{:?}", rep.negative);
        }
    }

    #[test]
    fn question_sum_small_cases() {
        let full = SetPartition::one_block(2);
        assert_eq!(question_bad_sum(&full, &full, &full), 0);
        let s = SetPartition::singletons(3);
        assert_eq!(question_bad_sum(&s, &s, &s), 1);
        for k in 1..=3 {
            let (count, hit) = question_bad_search(k).unwrap();
            assert_eq!(count, set_partitions(k).unwrap().len().pow(3));
            assert!(hit.is_none());
        }
    }

    #[test]
    fn schur_assembly_from_a_polys() {
        for k in 1..=3 {
            let sps = set_partitions(k).unwrap();
            for mu in partitions_of(k) {
                for d in 1..=2 {
                    let mut acc = MultiPoly::zero(d);
                    for s in &sps {
                        for t in &sps {
                            if s.num_blocks() > d || t.num_blocks() > d {
                                continue;
                            }
                            let a = a_poly(&mu, s, t);
                            let m = s.num_blocks().max(t.num_blocks());
                            for pair in compatible_pairs(s, t, d) {
                                if !is_injective(&pair.v) || !is_injective(&pair.w) {
                                    continue;
                                }
                                let mut images: Vec<MultiPoly> = (0..m)
                                    .map(|i| pair.v.get(i).map_or_else(|| MultiPoly::zero(d), |&c| MultiPoly::p(d, c)))
                                    .collect();
                                images.extend(
                                    (0..m).map(|j| pair.w.get(j).map_or_else(|| MultiPoly::zero(d), |&c| MultiPoly::r(d, c))),
                                );
                                acc.add_assign_ref(&a.substitute(&images));
                            }
                        }
                    }
                    let scale = Rational::new(BigInt::one(), factorial(k as u64));
                    assert_eq!(acc.scale_rational(&scale), shifted_schur_multirect(&mu, d).unwrap(), "{mu} d={d}");
                }
            }
        }
    }
}
