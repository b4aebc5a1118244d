//! Jack polynomials `J_λ` in the monomial basis via admissible tableaux, their
//! power-sum coefficients `θ`, and the normalized functions `Ch_μ`, `Ko_μ`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::rational::{big, binomial, factorial, int};
use crate::exact::{PolyAlpha, RatAlpha, Rational};
use crate::partitions::{partitions_of, Partition, PartitionError};
use crate::symfun::{monomial_to_powersum, Basis, BasisExpansion};

/// `hatK^λ_τ`: the coefficient of `M_τ` in `J_λ`.
///
/// Sums, over admissible tableaux of shape `λ` and content `τ`, the product over
/// critical boxes `s` of `α(a(s)+1) + l(s) + 1`. A filling is admissible when
/// values do not repeat in a column and `T(i,j) ≠ T(i',j-1)` for `i' < i`; a box
/// is critical when it equals its left neighbour.
pub fn hat_k(lambda: &Partition, tau: &Partition) -> Result<PolyAlpha, PartitionError> {
    lambda.check_same_size(tau)?;
    Ok(hat_k_cached(lambda, tau))
}

fn hat_k_cached(lambda: &Partition, tau: &Partition) -> PolyAlpha {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), PolyAlpha>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), tau.clone());
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let counts = admissible_weight_counts(lambda, tau.parts());
    let poly = PolyAlpha::new(counts.into_iter().map(|c| big(BigInt::from(c))).collect());
    cache.lock().expect("cache lock").insert(key, poly.clone());
    poly
}

/// Coefficients (by power of α) of the admissible-tableau weight sum.
///
/// Admissibility and criticality only compare values for equality, so values
/// with the same budget that have not been used yet are interchangeable: the
/// search tries one representative and multiplies by the size of the group.
pub fn admissible_weight_counts(lambda: &Partition, content: &[usize]) -> Vec<u128> {
    let n = lambda.size();
    if content.iter().sum::<usize>() != n {
        return Vec::new();
    }
    let shape = lambda.parts();
    let conj = lambda.conjugate();
    let boxes: Vec<(usize, usize)> = lambda.boxes().map(|b| (b.row - 1, b.col - 1)).collect();
    let factors: Vec<(u128, u128)> = boxes
        .iter()
        .map(|&(i, j)| {
            let arm = shape[i] - j - 1;
            let leg = conj.part(j + 1) - i - 1;
            (arm as u128 + 1, leg as u128 + 1)
        })
        .collect();

    struct Search<'a> {
        boxes: &'a [(usize, usize)],
        factors: &'a [(u128, u128)],
        content: &'a [usize],
        budget: Vec<usize>,
        col_mask: Vec<u64>,
        row_vals: Vec<Vec<usize>>,
        stack: Vec<Vec<u128>>,
        total: Vec<u128>,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) {
            if depth == self.boxes.len() {
                for (t, c) in self.total.iter_mut().zip(&self.stack[depth]) {
                    *t += c;
                }
                return;
            }
            let (i, j) = self.boxes[depth];
            let left = if j > 0 { Some(self.row_vals[i][j - 1]) } else { None };
            let mut forbidden = self.col_mask[j];
            if let Some(l) = left {
                // Values in column j-1 strictly above row i.
                forbidden |= self.col_mask[j - 1] & !(1u64 << l);
            }
            let mut tried_fresh: Vec<usize> = Vec::new();
            for v in 0..self.content.len() {
                if self.budget[v] == 0 || forbidden >> v & 1 == 1 {
                    continue;
                }
                let mut mult: u128 = 1;
                if self.budget[v] == self.content[v] {
                    // Fresh value: one representative per original budget.
                    if tried_fresh.contains(&self.content[v]) {
                        continue;
                    }
                    tried_fresh.push(self.content[v]);
                    mult = (v..self.content.len())
                        .filter(|&u| self.content[u] == self.content[v] && self.budget[u] == self.content[u])
                        .count() as u128;
                }
                let critical = left == Some(v);
                let (cur, rest) = self.stack.split_at_mut(depth + 1);
                let cur = &cur[depth];
                let next = &mut rest[0];
                next.iter_mut().for_each(|x| *x = 0);
                if critical {
                    let (a, b) = self.factors[depth];
                    for e in 0..cur.len() - 1 {
                        next[e] += cur[e] * b * mult;
                        next[e + 1] += cur[e] * a * mult;
                    }
                } else {
                    for e in 0..cur.len() {
                        next[e] = cur[e] * mult;
                    }
                }
                self.budget[v] -= 1;
                self.col_mask[j] |= 1u64 << v;
                self.row_vals[i][j] = v;
                self.go(depth + 1);
                self.col_mask[j] &= !(1u64 << v);
                self.budget[v] += 1;
            }
        }
    }

    assert!(content.len() <= 64, "content too long");
    let width = n + 1;
    let mut stack = vec![vec![0u128; width]; n + 1];
    stack[0][0] = 1;
    let mut s = Search {
        boxes: &boxes,
        factors: &factors,
        content,
        budget: content.to_vec(),
        col_mask: vec![0; lambda.part(1)],
        row_vals: shape.iter().map(|&l| vec![usize::MAX; l]).collect(),
        stack,
        total: vec![0; width],
    };
    s.go(0);
    let mut total = s.total;
    while total.last() == Some(&0) {
        total.pop();
    }
    total
}

/// `J_λ = Σ_τ hatK^λ_τ M_τ`.
pub fn monomial_expansion(lambda: &Partition) -> BasisExpansion {
    let n = lambda.size();
    let mut out = BasisExpansion::new(Basis::Monomial, n);
    for tau in partitions_of(n) {
        let c = hat_k_cached(lambda, &tau);
        out.insert(tau, RatAlpha::from_poly(c));
    }
    out
}

/// `J_λ = Σ_τ θ_τ(λ) p_τ`, cached per `λ`.
pub fn powersum_expansion(lambda: &Partition) -> Arc<BasisExpansion> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<BasisExpansion>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(lambda) {
        return v.clone();
    }
    let v = Arc::new(monomial_to_powersum(&monomial_expansion(lambda)));
    cache.lock().expect("cache lock").entry(lambda.clone()).or_insert(v).clone()
}

/// `θ_τ(λ)`, the coefficient of `p_τ` in `J_λ`.
pub fn theta(tau: &Partition, lambda: &Partition) -> Result<PolyAlpha, PartitionError> {
    tau.check_same_size(lambda)?;
    let c = powersum_expansion(lambda).get(tau);
    Ok(c.as_polynomial().expect("power-sum coefficients of J are polynomial in alpha").clone())
}

/// `Ch_μ(λ) = C(n-k+m_1(μ), m_1(μ)) z_μ θ_{μ1^{n-k}}(λ)`, and 0 when `n < k`.
pub fn ch(mu: &Partition, lambda: &Partition) -> PolyAlpha {
    let (n, k) = (lambda.size(), mu.size());
    if n < k {
        return PolyAlpha::zero();
    }
    let m1 = mu.multiplicity(1) as u64;
    let pre = big(binomial((n - k) as u64 + m1, m1) * mu.z());
    theta(&mu.with_ones(n - k), lambda).expect("sizes match").scale(&pre)
}

/// `Ko_μ(λ) = hatK^λ_{μ1^{n-k}} / (n-k)!`, and 0 when `n < k`.
pub fn ko(mu: &Partition, lambda: &Partition) -> PolyAlpha {
    let (n, k) = (lambda.size(), mu.size());
    if n < k {
        return PolyAlpha::zero();
    }
    let h = hat_k_cached(lambda, &mu.with_ones(n - k));
    h.scale(&(Rational::one() / big(factorial((n - k) as u64))))
}

/// Zonal spherical value `w^μ_ν = z_ν 2^{ℓ(ν)} θ^{(2)}_ν(μ) / (2^k k!)`.
pub fn zonal_spherical(mu: &Partition, nu: &Partition) -> Result<Rational, PartitionError> {
    let th = theta(nu, mu)?;
    let k = mu.size();
    let num = th.eval(&int(2)) * big(nu.z() * BigInt::from(2).pow(nu.len() as u32));
    Ok(num / big(BigInt::from(2).pow(k as u32) * factorial(k as u64)))
}

/// True when every coefficient is a nonnegative integer.
pub fn has_nonneg_integer_coeffs(p: &PolyAlpha) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && *c >= Rational::zero())
}
