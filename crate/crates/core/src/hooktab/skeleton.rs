//! Skeletons of column-distinct sets in a multirectangular diagram.
//!
//! In `λ = r^p`, row block `i` has `p_i` rows and column block `j` has `r_j`
//! columns; a row of block `i` meets the columns of block `j` iff `i ≤ j`.
//! Dropping the rows and columns that miss a column-distinct set `A` leaves
//! its skeleton, which fixes the weight `∏ P_{|R∩A|}` and is shared by
//! exactly `∏ C(p_i, a_i) C(r_j, b_j)` sets.

use std::collections::BTreeMap;

use super::p_weight;
use crate::exact::rational::{big, factorial};
use crate::exact::{FFExpansion, FfKey, PolyAlpha, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    /// Active rows per row block.
    pub a: Vec<usize>,
    /// Active columns per column block; sums to `k`.
    pub b: Vec<usize>,
    /// For each active column (block by block, left to right within a block)
    /// the index of its row among the active rows (ordered by block).
    pub assignment: Vec<usize>,
}

impl Skeleton {
    /// Marks in each active row.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.a.iter().sum()];
        for &r in &self.assignment {
            counts[r] += 1;
        }
        counts
    }

    /// `∏_rows P_{marks in row}(α)`.
    pub fn weight(&self) -> PolyAlpha {
        self.row_counts().iter().fold(PolyAlpha::one(), |acc, &i| acc * p_weight(i))
    }
}

/// Weak compositions of `n` into `d` parts, in colex order.
fn compositions(n: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for last in 0..=n {
        for mut head in compositions(n - last, d - 1) {
            head.push(last);
            out.push(head);
        }
    }
    out
}

fn blocks_of(counts: &[usize]) -> Vec<usize> {
    counts.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat_n(i, n)).collect()
}

/// Calls `f` on every skeleton with `k` marks and `d` blocks.
fn for_each_skeleton(k: usize, d: usize, f: &mut dyn FnMut(&Skeleton)) {
    fn assign(
        col_blocks: &[usize],
        row_blocks: &[usize],
        counts: &mut [usize],
        sk: &mut Skeleton,
        f: &mut dyn FnMut(&Skeleton),
    ) {
        let pos = sk.assignment.len();
        if pos == col_blocks.len() {
            if counts.iter().all(|&c| c > 0) {
                f(sk);
            }
            return;
        }
        let empty = counts.iter().filter(|&&c| c == 0).count();
        if empty > col_blocks.len() - pos {
            return;
        }
        for (r, &rb) in row_blocks.iter().enumerate() {
            if rb <= col_blocks[pos] {
                counts[r] += 1;
                sk.assignment.push(r);
                assign(col_blocks, row_blocks, counts, sk, f);
                sk.assignment.pop();
                counts[r] -= 1;
            }
        }
    }
    for b in compositions(k, d) {
        let col_blocks = blocks_of(&b);
        for rows in 1..=k {
            for a in compositions(rows, d) {
                let row_blocks = blocks_of(&a);
                let mut sk = Skeleton {
                    a,
                    b: b.clone(),
                    assignment: Vec::with_capacity(k),
                };
                assign(&col_blocks, &row_blocks, &mut vec![0; rows], &mut sk, f);
            }
        }
    }
}

/// Every skeleton with `k` marks and `d` blocks.
pub fn skeletons(k: usize, d: usize) -> Vec<Skeleton> {
    let mut out = Vec::new();
    for_each_skeleton(k, d, &mut |s| out.push(s.clone()));
    out
}

/// `Ko_(k)(r^p)` in the α-falling-factorial basis, summed skeleton by skeleton:
/// each contributes `w(Â) ∏ (p_i)_{a_i}/a_i! ∏ (r_j)_{b_j}/b_j!`.
pub fn ko_onepart_ff(k: usize, d: usize) -> FFExpansion {
    // Aggregate integer weights per (a, b) before dividing.
    let mut by_shape: BTreeMap<(Vec<usize>, Vec<usize>), PolyAlpha> = BTreeMap::new();
    for_each_skeleton(k, d, &mut |s| {
        let e = by_shape.entry((s.a.clone(), s.b.clone())).or_insert_with(PolyAlpha::zero);
        *e += &s.weight();
    });
    let mut out = FFExpansion::zero(d);
    for ((a, b), w) in by_shape {
        let denom: Rational = a.iter().chain(&b).map(|&x| big(factorial(x as u64))).product();
        let a32: Vec<u32> = a.iter().map(|&x| x as u32).collect();
        let b32: Vec<u32> = b.iter().map(|&x| x as u32).collect();
        for (e, c) in w.coeffs().iter().enumerate() {
            out.add_term(FfKey::new(e as u32, &a32, &b32), c / &denom);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::falling::from_falling_factorial;
    use crate::exact::rational::frac;
    use crate::exact::MultiPoly;
    use crate::hooktab::ko_onepart_subsets;
    use crate::jack;
    use crate::partitions::{multirect_grid, Partition};
    use crate::shifted::{reconstruct_multirect, AlphaMode, DiagramFunction};

    #[test]
    fn small_expansions() {
        let one = ko_onepart_ff(1, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one.coeff(&FfKey::new(0, &[1], &[1])), frac(1, 1));
        let two = ko_onepart_ff(2, 1);
        assert_eq!(two.len(), 3);
        assert_eq!(two.coeff(&FfKey::new(0, &[1], &[2])), frac(1, 2));
        assert_eq!(two.coeff(&FfKey::new(1, &[1], &[2])), frac(1, 2));
        assert_eq!(two.coeff(&FfKey::new(0, &[2], &[2])), frac(1, 2));
    }

    #[test]
    fn skeleton_counts() {
        // d = 1: one row block, one column block; skeletons are surjections.
        assert_eq!(skeletons(3, 1).len(), 1 + 6 + 6);
        for s in skeletons(3, 2) {
            assert_eq!(s.b.iter().sum::<usize>(), 3);
            assert!(s.row_counts().iter().all(|&c| c > 0));
        }
    }

    #[test]
    fn matches_subset_formula_on_grid() {
        for k in 1..=4 {
            let ff = ko_onepart_ff(k, 2);
            for m in multirect_grid(2, 2) {
                let lambda = m.to_partition();
                let direct = ko_onepart_subsets(k, &lambda);
                assert_eq!(ff.eval(&m.p_i64(), &m.r_i64()), direct, "k={k} {m:?}");
            }
        }
    }

    #[test]
    fn matches_reconstruction() {
        for k in 1..=4 {
            let mu = Partition::new(vec![k]).unwrap();
            for d in 1..=2 {
                let ff = ko_onepart_ff(k, d);
                assert!(ff.is_nonnegative().is_pass());
                let rec = reconstruct_multirect(&DiagramFunction::ko(&mu), d, &AlphaMode::Symbolic).unwrap();
                assert_eq!(from_falling_factorial(&ff), rec, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn jstar_is_k_factorial_ko() {
        for k in 1..=4usize {
            let mu = Partition::new(vec![k]).unwrap();
            for d in 1..=2 {
                let ko = from_falling_factorial(&ko_onepart_ff(k, d));
                let js = reconstruct_multirect(&DiagramFunction::jstar(&mu), d, &AlphaMode::Symbolic).unwrap();
                let kf = big(factorial(k as u64));
                assert_eq!(js, ko.scale_rational(&kf), "k={k} d={d}");
                let _: &MultiPoly = &js;
            }
            let lambda = Partition::new(vec![3, 1]).unwrap();
            assert_eq!(
                ko_onepart_ff(k, 2).eval(&[1, 1], &[2, 1]),
                jack::ko(&mu, &lambda)
            );
        }
    }
}
