//! α = 2 formulas in multirectangular coordinates, indexed by pair-partitions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{pair_partitions, pair_partitions_below, type_of_pair, type_representative, CombError};
use crate::combinatorics::{PairPartition, SetPartition};
use crate::exact::rational::{big, factorial};
use crate::exact::{MultiPoly, Rational};
use crate::jack::zonal_spherical;
use crate::partitions::{partitions_of, Partition};
use crate::stanley::{n_cached, IntPoly};

/// Default bound on `k` for the sums over triples of pair-partitions.
pub const DEFAULT_MAX_K: usize = 4;

/// The arguments of `N_{(S_0,S_1,S_2)}` together with the number of blocks `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleN {
    pub s0: PairPartition,
    pub s1: PairPartition,
    pub s2: PairPartition,
    pub d: usize,
}

impl TripleN {
    pub fn new(s0: PairPartition, s1: PairPartition, s2: PairPartition, d: usize) -> Self {
        assert!(s0.k() == s1.k() && s1.k() == s2.k(), "pair-partitions of different sizes");
        TripleN { s0, s1, s2, d }
    }

    /// `v` colors the blocks of `U(S_0,S_2)`, `w` those of `U(S_0,S_1)`.
    pub fn poly(&self) -> MultiPoly {
        n2_poly(&self.s0, &self.s1, &self.s2, self.d)
    }
}

/// `N_{(S_0,S_1,S_2)}(r, p)`: compatible colorings of `U(S_0,S_2)` (by `p`) and `U(S_0,S_1)` (by `r`).
pub fn n2_poly(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition, d: usize) -> MultiPoly {
    n_cached(&s0.join(s2), &s0.join(s1), d).to_multipoly(&Rational::one())
}

fn check_k(k: usize, unbounded: bool) -> Result<(), CombError> {
    if k > DEFAULT_MAX_K && !unbounded {
        return Err(CombError::LimitExceeded {
            what: "pair-partition triple sums",
            k,
            max: DEFAULT_MAX_K,
        });
    }
    Ok(())
}

fn pow_neg2(e: usize) -> i64 {
    (-2i64).pow(e as u32)
}

/// Sums `Σ c · N(U(S_0,S_2), U(S_0,S_1))` after bucketing the triples by their two joins.
fn assemble(buckets: HashMap<(SetPartition, SetPartition), Rational>, d: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(d);
    for ((j2, j1), c) in buckets {
        if c.is_zero() {
            continue;
        }
        let n = n_cached(&j2, &j1, d);
        out.add_assign_ref(&n.to_multipoly(&c));
    }
    out
}

/// `Ch^{(2)}_μ(r^p)` from a fixed pair `(S_1, S_2)` of type `μ`.
pub fn ch2_multirect_with(mu: &Partition, s1: &PairPartition, s2: &PairPartition, d: usize) -> Result<MultiPoly, CombError> {
    let k = mu.size();
    assert_eq!(type_of_pair(s1, s2), *mu, "pair has the wrong type");
    let mut total = IntPoly::zero(d);
    for s0 in pair_partitions(k)? {
        let j1 = s0.join(s1);
        let c = pow_neg2(j1.num_blocks());
        total.add_scaled(&n_cached(&s0.join(s2), &j1, d), c);
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let scale = Rational::new(BigInt::from(sign), BigInt::from(2).pow(mu.len() as u32));
    Ok(total.to_multipoly(&scale))
}

/// `Ch^{(2)}_μ(r^p) = ((-1)^k / 2^{ℓ(μ)}) Σ_{S_0} (-2)^{|U(S_0,S_1^μ)|} N_{(S_0,S_1^μ,S_2^μ)}`.
pub fn ch2_multirect(mu: &Partition, d: usize) -> Result<MultiPoly, CombError> {
    let (s1, s2) = type_representative(mu);
    ch2_multirect_with(mu, &s1, &s2, d)
}

/// `Z*_μ(r^p) = ((-1)^k k!/(2k)!) Σ_{S_0,S_1,S_2} w^μ_{(S_1,S_2)} (-2)^{|U(S_0,S_1)|} N_{(S_0,S_1,S_2)}`.
pub fn zstar_multirect(mu: &Partition, d: usize, unbounded: bool) -> Result<MultiPoly, CombError> {
    let k = mu.size();
    check_k(k, unbounded)?;
    let pps = pair_partitions(k)?;
    let types = partitions_of(k);
    let w: HashMap<Partition, Rational> = types
        .iter()
        .map(|nu| (nu.clone(), zonal_spherical(mu, nu).expect("same size")))
        .collect();
    // Per (join(S0,S2), join(S0,S1)): integer counts per type of (S1, S2), weighted by (-2)^{|join(S0,S1)|}.
    let partial: Vec<HashMap<(SetPartition, SetPartition), HashMap<Partition, i64>>> = pps
        .par_iter()
        .map(|s1| {
            let mut local: HashMap<(SetPartition, SetPartition), HashMap<Partition, i64>> = HashMap::new();
            for s2 in &pps {
                let nu = type_of_pair(s1, s2);
                if w[&nu].is_zero() {
                    continue;
                }
                for s0 in &pps {
                    let j1 = s0.join(s1);
                    let c = pow_neg2(j1.num_blocks());
                    *local.entry((s0.join(s2), j1)).or_default().entry(nu.clone()).or_insert(0) += c;
                }
            }
            local
        })
        .collect();
    let mut buckets: HashMap<(SetPartition, SetPartition), Rational> = HashMap::new();
    for local in partial {
        for (key, counts) in local {
            let slot = buckets.entry(key).or_insert_with(Rational::zero);
            for (nu, c) in counts {
                *slot += &w[&nu] * big(BigInt::from(c));
            }
        }
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let scale = Rational::new(BigInt::from(sign) * factorial(k as u64), factorial(2 * k as u64));
    Ok(assemble(buckets, d).scale_rational(&scale))
}

/// `Ko^{(2)}_μ(r^p)` for a set-partition `U` of `[2k]` with block sizes `2μ_i`.
///
/// The sum runs over `S_1, S_2 ≤ U` and all `S_0`: the weight `L_{ν,μ}` of a pair
/// `(S_1, S_2)` of type `ν` counts fillings constant on the blocks of `U(S_1, S_2)`.
pub fn ko2_multirect_with(u: &SetPartition, d: usize, unbounded: bool) -> Result<MultiPoly, CombError> {
    ko2_sum(u, d, unbounded, Constraint::S1S2)
}

/// The variant constraining `S_0, S_1 ≤ U` instead; it does not reproduce `Ko^{(2)}`
/// (e.g. it is 3 instead of 0 for `μ = (1,1)` on a single box) and is kept for comparison.
pub fn ko2_multirect_s0s1(u: &SetPartition, d: usize, unbounded: bool) -> Result<MultiPoly, CombError> {
    ko2_sum(u, d, unbounded, Constraint::S0S1)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Constraint {
    S1S2,
    S0S1,
}

fn ko2_sum(u: &SetPartition, d: usize, unbounded: bool, which: Constraint) -> Result<MultiPoly, CombError> {
    let n = u.ground_size();
    assert!(n % 2 == 0 && u.blocks().iter().all(|b| b.len() % 2 == 0), "U needs even blocks");
    let k = n / 2;
    check_k(k, unbounded)?;
    let below = pair_partitions_below(u);
    let all = pair_partitions(k)?;
    let (s0_range, s1_range, s2_range) = match which {
        Constraint::S1S2 => (&all, &below, &below),
        Constraint::S0S1 => (&below, &below, &all),
    };
    let partial: Vec<HashMap<(SetPartition, SetPartition), i64>> = s1_range
        .par_iter()
        .map(|s1| {
            let mut local = HashMap::new();
            for s0 in s0_range.iter() {
                let j1 = s0.join(s1);
                let c = pow_neg2(j1.num_blocks());
                for s2 in s2_range.iter() {
                    *local.entry((s0.join(s2), j1.clone())).or_insert(0) += c;
                }
            }
            local
        })
        .collect();
    let mut buckets: HashMap<(SetPartition, SetPartition), Rational> = HashMap::new();
    for local in partial {
        for (key, c) in local {
            *buckets.entry(key).or_insert_with(Rational::zero) += big(BigInt::from(c));
        }
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let denom: BigInt = u.blocks().iter().map(|b| factorial(b.len() as u64)).product();
    Ok(assemble(buckets, d).scale_rational(&Rational::new(BigInt::from(sign), denom)))
}

/// `Ko^{(2)}_μ(r^p) = ((-1)^k/∏(2μ_i)!) Σ_{S_0; S_1,S_2 ≤ U_μ} (-2)^{|U(S_0,S_1)|} N_{(S_0,S_1,S_2)}`.
pub fn ko2_multirect(mu: &Partition, d: usize, unbounded: bool) -> Result<MultiPoly, CombError> {
    ko2_multirect_with(&u_mu(mu), d, unbounded)
}

/// The interval set-partition of `[2k]` with blocks of sizes `2μ_i`.
pub fn u_mu(mu: &Partition) -> SetPartition {
    let doubled: Vec<usize> = mu.parts().iter().map(|&m| 2 * m).collect();
    SetPartition::intervals(&doubled)
}

/// Number of ordered pairs `(S_1, S_2)` of each type.
pub fn type_census(k: usize) -> Result<HashMap<Partition, u64>, CombError> {
    let pps = pair_partitions(k)?;
    let mut out = HashMap::new();
    for s1 in &pps {
        for s2 in &pps {
            *out.entry(type_of_pair(s1, s2)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// The expected census `(2k)!/(z_ν 2^{ℓ(ν)})`.
pub fn type_census_formula(nu: &Partition) -> BigInt {
    factorial(2 * nu.size() as u64) / (nu.z() * BigInt::from(2).pow(nu.len() as u32))
}

/// The α = 2 counterpart of `B^μ_{V,W}`: the coefficient obtained by grouping the
/// triple sum for `Z*_μ` by `U(S_0,S_2) ≤ V` and `U(S_0,S_1) ≤ W`, times `(-1)^k`.
/// Exploratory; no sign is guaranteed.
pub fn b2_coeff(mu: &Partition, v: &SetPartition, w_part: &SetPartition) -> Result<Rational, CombError> {
    let k = mu.size();
    let pps = pair_partitions(k)?;
    let mut total = Rational::zero();
    for s0 in pps.iter().filter(|s| s.refines(v) && s.refines(w_part)) {
        for s1 in pps.iter().filter(|s| s.refines(w_part)) {
            let j1 = s0.join(s1);
            if !j1.refines(w_part) {
                continue;
            }
            for s2 in pps.iter().filter(|s| s.refines(v)) {
                let w = zonal_spherical(mu, &type_of_pair(s1, s2)).expect("same size");
                total += w * big(BigInt::from(pow_neg2(j1.num_blocks())));
            }
        }
    }
    if k % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

/// Scans all `μ ⊢ k` and pairs of set-partitions of `[2k]` with even blocks for a
/// negative [`b2_coeff`]; returns the number of cases and the first negative one.
pub fn b2_search(k: usize) -> Result<(usize, Option<(Partition, SetPartition, SetPartition, Rational)>), CombError> {
    let even: Vec<SetPartition> = crate::combinatorics::set_partitions(2 * k)?
        .into_iter()
        .filter(|s| s.blocks().iter().all(|b| b.len() % 2 == 0))
        .collect();
    let mut cases = 0;
    for mu in partitions_of(k) {
        let hit = even
            .par_iter()
            .flat_map_iter(|v| even.iter().map(move |w| (v, w)))
            .find_map_first(|(v, w)| {
                let b = b2_coeff(&mu, v, w).ok()?;
                (b < Rational::zero()).then(|| (mu.clone(), v.clone(), w.clone(), b))
            });
        cases += even.len() * even.len();
        if hit.is_some() {
            return Ok((cases, hit));
        }
    }
    Ok((cases, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;
    use crate::exact::rational::int;
    use crate::exact::RatAlpha;
    use crate::partitions::MultiRect;
    use crate::shifted::eval_on;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn size_poly(d: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(d);
        for i in 1..=d {
            for j in i..=d {
                out.add_assign_ref(&(&MultiPoly::p(d, i) * &MultiPoly::r(d, j)));
            }
        }
        out
    }

    #[test]
    fn n2_small_cases() {
        let s = PairPartition::star(1);
        assert_eq!(n2_poly(&s, &s, &s, 2), size_poly(2));
        let pps = pair_partitions(2).unwrap();
        for a in &pps {
            for b in &pps {
                for c in &pps {
                    let expected = &MultiPoly::p(1, 1).pow(a.join(c).num_blocks() as u32)
                        * &MultiPoly::r(1, 1).pow(a.join(b).num_blocks() as u32);
                    assert_eq!(TripleN::new(a.clone(), b.clone(), c.clone(), 1).poly(), expected);
                }
            }
        }
    }

    #[test]
    fn n2_action_invariant() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let pps = pair_partitions(3).unwrap();
        let perms = crate::combinatorics::permutations(6).unwrap();
        for _ in 0..20 {
            let a = pps.choose(&mut rng).unwrap();
            let b = pps.choose(&mut rng).unwrap();
            let c = pps.choose(&mut rng).unwrap();
            let g: &Permutation = perms.choose(&mut rng).unwrap();
            assert_eq!(n2_poly(a, b, c, 2), n2_poly(&a.act(g), &b.act(g), &c.act(g), 2));
        }
    }

    #[test]
    fn one_box_formulas() {
        let mu = part(&[1]);
        for d in 1..=2 {
            assert_eq!(ch2_multirect(&mu, d).unwrap(), size_poly(d));
            assert_eq!(zstar_multirect(&mu, d, false).unwrap(), size_poly(d));
            assert_eq!(ko2_multirect(&mu, d, false).unwrap(), size_poly(d));
        }
    }

    #[test]
    fn ko2_single_row_value() {
        let poly = ko2_multirect(&part(&[2]), 1, false).unwrap();
        assert_eq!(eval_on(&poly, &MultiRect::new(vec![1], vec![2])), RatAlpha::constant(int(3)));
    }

    #[test]
    fn zstar_vanishes_on_single_box() {
        let m = MultiRect::new(vec![1], vec![1]);
        for k in 2..=3 {
            for mu in partitions_of(k) {
                assert!(eval_on(&zstar_multirect(&mu, 1, false).unwrap(), &m).is_zero());
            }
        }
    }

    #[test]
    fn ch2_independent_of_representative() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let pps = pair_partitions(3).unwrap();
        for mu in partitions_of(3) {
            let base = ch2_multirect(&mu, 2).unwrap();
            let mut pairs = Vec::new();
            for a in &pps {
                for b in &pps {
                    if type_of_pair(a, b) == mu {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
            for (a, b) in pairs.choose_multiple(&mut rng, 3) {
                assert_eq!(ch2_multirect_with(&mu, a, b, 2).unwrap(), base);
            }
        }
    }

    #[test]
    fn ko2_independent_of_u() {
        let mu = part(&[2, 1]);
        let base = ko2_multirect(&mu, 2, false).unwrap();
        for blocks in [vec![vec![0, 2, 3, 5], vec![1, 4]], vec![vec![1, 2, 3, 4], vec![0, 5]]] {
            assert_eq!(ko2_multirect_with(&SetPartition::from_blocks(6, blocks), 2, false).unwrap(), base);
        }
    }

    #[test]
    fn s0_s1_constraint_differs() {
        let u = u_mu(&part(&[1, 1]));
        let m = MultiRect::new(vec![1], vec![1]);
        assert!(eval_on(&ko2_multirect_with(&u, 1, false).unwrap(), &m).is_zero());
        assert_eq!(eval_on(&ko2_multirect_s0s1(&u, 1, false).unwrap(), &m), RatAlpha::constant(int(3)));
    }

    #[test]
    fn census() {
        for k in 1..=4 {
            let counts = type_census(k).unwrap();
            for nu in partitions_of(k) {
                assert_eq!(BigInt::from(counts[&nu]), type_census_formula(&nu), "{nu}");
            }
        }
    }

    #[test]
    fn limit_gate() {
        assert!(zstar_multirect(&part(&[5]), 1, false).is_err());
    }

    #[test]
    fn b2_on_finest_is_positive() {
        for k in 1..=2 {
            let star = PairPartition::star(k).as_set_partition();
            for mu in partitions_of(k) {
                assert!(b2_coeff(&mu, &star, &star).unwrap() > Rational::zero());
            }
        }
    }
}
