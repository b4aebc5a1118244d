//! Classical symmetric-function data: power-sum/monomial transition numbers,
//! Kostka numbers, standard tableau counts, and symmetric group characters.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{RatAlpha, Rational};
use crate::partitions::{count_bin_fillings, partitions_of, Partition, PartitionError};

/// `L_{ν,μ}`: coefficient of `M_μ` in `p_ν`.
///
/// Counts assignments of the (distinguishable) parts of `ν` to the parts of `μ`
/// such that the parts sent to `μ_i` sum to `μ_i`.
pub fn l_coeff(nu: &Partition, mu: &Partition) -> Result<u64, PartitionError> {
    nu.check_same_size(mu)?;
    Ok(count_bin_fillings(nu.parts(), mu.parts(), false))
}

/// The matrix `L_{ν,μ}` over all partitions of `k`.
pub struct LTable {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    entries: Vec<Vec<u64>>,
}

impl LTable {
    fn build(k: usize) -> Self {
        let parts = partitions_of(k);
        let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let entries = parts
            .iter()
            .map(|nu| parts.iter().map(|mu| l_coeff(nu, mu).expect("same size")).collect())
            .collect();
        LTable { parts, index, entries }
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// `L_{ν,μ}` by index.
    pub fn get(&self, nu: usize, mu: usize) -> u64 {
        self.entries[nu][mu]
    }

    /// Indices ordered from finest (`1^k`) to coarsest (`(k)`): by decreasing length.
    pub fn finest_first(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.parts.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.parts[i].len()));
        order
    }
}

/// Shared `L` table for partitions of `k`.
pub fn l_table(k: usize) -> Arc<LTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<LTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&k) {
        return t.clone();
    }
    let t = Arc::new(LTable::build(k));
    cache.lock().expect("cache lock").entry(k).or_insert(t).clone()
}

/// Number of semistandard tableaux of shape `λ` and type `τ`.
///
/// Entries equal to `i` form a horizontal strip, so the tableaux are enumerated
/// as chains of shapes that grow by a horizontal strip of size `τ_i` at step `i`.
pub fn kostka(lambda: &Partition, tau: &Partition) -> Result<u64, PartitionError> {
    lambda.check_same_size(tau)?;
    Ok(kostka_composition(lambda, tau.parts()))
}

/// Kostka number for an arbitrary composition as the type.
pub fn kostka_composition(lambda: &Partition, tau: &[usize]) -> u64 {
    fn go(target: &[usize], shape: &mut Vec<usize>, tau: &[usize]) -> u64 {
        let Some((&strip, rest)) = tau.split_first() else {
            return (shape.as_slice() == target) as u64;
        };
        // Place `strip` boxes in a horizontal strip: row i may grow up to the old length of row i-1.
        fn place(
            row: usize,
            left: usize,
            target: &[usize],
            old: &[usize],
            shape: &mut Vec<usize>,
            rest: &[usize],
        ) -> u64 {
            if left == 0 {
                return go(target, shape, rest);
            }
            if row >= target.len() {
                return 0;
            }
            let cap = if row == 0 { target[0] } else { old[row - 1].min(target[row]) };
            let cur = old[row];
            let mut total = 0;
            for add in 0..=left.min(cap.saturating_sub(cur)) {
                shape[row] = cur + add;
                total += place(row + 1, left - add, target, old, shape, rest);
            }
            shape[row] = cur;
            total
        }
        let old = shape.clone();
        place(0, strip, target, &old, shape, rest)
    }
    if lambda.size() != tau.iter().sum::<usize>() {
        return 0;
    }
    let target = lambda.parts().to_vec();
    let mut shape = vec![0; target.len()];
    go(&target, &mut shape, tau)
}

/// Number of standard tableaux of skew shape `λ/μ`, by adding boxes one at a time.
pub fn syt_count(lambda: &Partition, mu: &Partition) -> Result<BigInt, PartitionError> {
    if !lambda.contains(mu) {
        return Err(PartitionError::NotContained {
            outer: lambda.clone(),
            inner: mu.clone(),
        });
    }
    fn go(shape: &mut Vec<usize>, target: &[usize], memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if shape.as_slice() == target {
            return BigInt::one();
        }
        if let Some(v) = memo.get(shape.as_slice()) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..target.len() {
            let fits_above = i == 0 || shape[i - 1] > shape[i];
            if shape[i] < target[i] && fits_above {
                shape[i] += 1;
                total += go(shape, target, memo);
                shape[i] -= 1;
            }
        }
        memo.insert(shape.clone(), total.clone());
        total
    }
    let target = lambda.parts().to_vec();
    let mut shape: Vec<usize> = (1..=target.len()).map(|i| mu.part(i)).collect();
    Ok(go(&mut shape, &target, &mut HashMap::new()))
}

/// Irreducible character `χ^λ` on the class of cycle type `τ` (Murnaghan–Nakayama).
pub fn character(lambda: &Partition, tau: &Partition) -> Result<i64, PartitionError> {
    lambda.check_same_size(tau)?;
    let n = lambda.len();
    let beta: Vec<usize> = (1..=n).map(|i| lambda.part(i) + n - i).collect();
    let mut memo = HashMap::new();
    Ok(mn_beta(beta, tau.parts(), &mut memo))
}

/// Removes border strips of lengths `hooks[0], hooks[1], …` from the diagram with
/// bead positions `beta`; a strip of length `h` moves one bead down by `h`.
fn mn_beta(beta: Vec<usize>, hooks: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&h, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beta.clone(), hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - h && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = b - h;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn_beta(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Which basis a [`BasisExpansion`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    PowerSum,
}

/// A homogeneous symmetric function as coefficients over a partition-indexed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub degree: usize,
    pub coeffs: BTreeMap<Partition, RatAlpha>,
}

impl BasisExpansion {
    pub fn new(basis: Basis, degree: usize) -> Self {
        BasisExpansion {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, p: Partition, c: RatAlpha) {
        assert_eq!(p.size(), self.degree, "index of wrong size");
        if c.is_zero() {
            self.coeffs.remove(&p);
        } else {
            self.coeffs.insert(p, c);
        }
    }

    pub fn get(&self, p: &Partition) -> RatAlpha {
        self.coeffs.get(p).cloned().unwrap_or_else(RatAlpha::zero)
    }
}

/// Rewrites `Σ c_μ M_μ` as `Σ d_ν p_ν`, solving `c_μ = Σ_ν d_ν L_{ν,μ}`.
///
/// `L` is triangular for refinement, so the solve runs from `1^k` up to `(k)`.
pub fn monomial_to_powersum(e: &BasisExpansion) -> BasisExpansion {
    assert_eq!(e.basis, Basis::Monomial);
    let table = l_table(e.degree);
    let mut d: Vec<RatAlpha> = vec![RatAlpha::zero(); table.parts.len()];
    for mu in table.finest_first() {
        let mut acc = e.get(&table.parts[mu]);
        for (nu, dn) in d.iter().enumerate() {
            if nu != mu && !dn.is_zero() {
                let l = table.get(nu, mu);
                if l != 0 {
                    acc -= &dn.scale(&Rational::from_integer(BigInt::from(l)));
                }
            }
        }
        let diag = Rational::from_integer(BigInt::from(table.get(mu, mu)));
        d[mu] = acc.scale(&(Rational::one() / diag));
    }
    let mut out = BasisExpansion::new(Basis::PowerSum, e.degree);
    for (i, c) in d.into_iter().enumerate() {
        out.insert(table.parts[i].clone(), c);
    }
    out
}

/// Rewrites `Σ d_ν p_ν` in the monomial basis.
pub fn powersum_to_monomial(e: &BasisExpansion) -> BasisExpansion {
    assert_eq!(e.basis, Basis::PowerSum);
    let table = l_table(e.degree);
    let mut out = BasisExpansion::new(Basis::Monomial, e.degree);
    for (mi, mu) in table.parts.iter().enumerate() {
        let mut acc = RatAlpha::zero();
        for (nu, c) in &e.coeffs {
            let l = table.get(table.index_of(nu), mi);
            if l != 0 {
                acc += &c.scale(&Rational::from_integer(BigInt::from(l)));
            }
        }
        out.insert(mu.clone(), acc);
    }
    out
}
