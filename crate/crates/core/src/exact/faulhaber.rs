//! Power sums `Σ_{i=1}^n i^k` as polynomials in `n`.

use num_traits::One;

use super::poly::UniPoly;
use super::rational::{big, binomial, int, Rational};

/// `S_k(n) = Σ_{i=1}^n i^k`.
///
/// Uses `(n+1)^{k+1} - 1 = Σ_{j=0}^{k} C(k+1, j) S_j(n)`.
pub fn faulhaber(k: u32) -> UniPoly {
    faulhaber_table(k).pop().expect("nonempty table")
}

/// `[S_0, …, S_k]`.
pub fn faulhaber_table(k: u32) -> Vec<UniPoly> {
    let n_plus_one = UniPoly::linear(Rational::one(), Rational::one());
    let mut table: Vec<UniPoly> = Vec::with_capacity(k as usize + 1);
    for m in 0..=k {
        let mut acc = &n_plus_one.pow(m + 1) - &UniPoly::one();
        for (j, s) in table.iter().enumerate() {
            acc -= &s.scale(&big(binomial(m as u64 + 1, j as u64)));
        }
        table.push(acc.scale(&(Rational::one() / int(m as i64 + 1))));
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn small_cases() {
        assert_eq!(faulhaber(0), UniPoly::x());
        let s1 = UniPoly::new(vec![int(0), frac(1, 2), frac(1, 2)]);
        assert_eq!(faulhaber(1), s1);
        let s2 = UniPoly::new(vec![int(0), frac(1, 6), frac(1, 2), frac(1, 3)]);
        assert_eq!(faulhaber(2), s2);
    }

    #[test]
    fn matches_direct_sums() {
        for k in 0..8u32 {
            let s = faulhaber(k);
            for n in 0..=20i64 {
                let direct: i64 = (1..=n).map(|i| i.pow(k)).sum();
                assert_eq!(s.eval(&int(n)), int(direct), "k={k} n={n}");
            }
        }
    }
}
