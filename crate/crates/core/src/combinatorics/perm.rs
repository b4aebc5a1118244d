//! Permutations of `{0, …, k-1}` with cycle structure.
//!
//! Internally 0-based; [`Permutation::from_word`] and `Display` use the
//! 1-based one-line notation.

use std::fmt;

use super::setpart::SetPartition;
use super::CombError;
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// From 0-based images; panics if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Permutation(images)
    }

    /// From a 1-based one-line word such as `[4, 2, 5, 1, 3]`.
    pub fn from_word(word: &[usize]) -> Self {
        Self::from_images(word.iter().map(|&x| x - 1).collect())
    }

    /// From disjoint 0-based cycles; unspecified points are fixed.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                images[x] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    /// `π_μ`: consecutive cycles `(1 … μ_1)(μ_1+1 … μ_1+μ_2)…`.
    pub fn of_cycle_type(mu: &Partition) -> Self {
        let mut start = 0;
        let mut cycles = Vec::new();
        for &m in mu.parts() {
            cycles.push((start..start + m).collect());
            start += m;
        }
        Self::from_cycles(mu.size(), &cycles)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `ρ^{-1} σ ρ`.
    pub fn conjugate_by(&self, rho: &Permutation) -> Permutation {
        rho.inverse().compose(self).compose(rho)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles as lists starting from their minimum, ordered by minimum.
    pub fn cycle_list(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        let mut seen = vec![false; self.size()];
        let mut count = 0;
        for start in 0..self.size() {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.0[x];
                }
            }
        }
        count
    }

    /// Orbits as a set-partition.
    pub fn cycles(&self) -> SetPartition {
        SetPartition::from_blocks(self.size(), self.cycle_list())
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_list().iter().map(Vec::len).collect())
    }

    /// `ε(σ) = (-1)^{k - #cycles}`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True when every cycle stays inside a block of `s`.
    pub fn preserves(&self, s: &SetPartition) -> bool {
        let labels = s.labels();
        self.0.iter().enumerate().all(|(i, &x)| labels[i] == labels[x])
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", w.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Largest `k` for which [`permutations`] materializes `S_k`.
pub const MAX_PERMUTATION_K: usize = 10;

/// All of `S_k` in lexicographic order of one-line notation.
pub fn permutations(k: usize) -> Result<Vec<Permutation>, CombError> {
    if k > MAX_PERMUTATION_K {
        return Err(CombError::LimitExceeded {
            what: "permutations",
            k,
            max: MAX_PERMUTATION_K,
        });
    }
    Ok(permutations_unbounded(k))
}

pub fn permutations_unbounded(k: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(Permutation(cur.clone()));
        // Next permutation in lexicographic order.
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// The Young subgroup `𝔖_S`: permutations whose cycles lie inside blocks of `s`.
pub fn young_subgroup(s: &SetPartition) -> Vec<Permutation> {
    let k = s.ground_size();
    let mut out = vec![Permutation::identity(k)];
    for block in s.blocks() {
        let local = permutations_unbounded(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for base in &out {
            for lp in &local {
                let mut images = base.0.clone();
                for (i, &x) in block.iter().enumerate() {
                    images[x] = block[lp.0[i]];
                }
                next.push(Permutation(images));
            }
        }
        out = next;
    }
    out
}

/// Number of left-to-right minima of a nonempty word.
pub fn lrmin(word: &[usize]) -> usize {
    assert!(!word.is_empty(), "lrmin of an empty word");
    let mut count = 0;
    let mut min = usize::MAX;
    for &x in word {
        if x < min {
            min = x;
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_signs() {
        let id = Permutation::identity(3);
        assert_eq!(id.cycles().num_blocks(), 3);
        let t = Permutation::from_word(&[2, 1, 3]);
        assert_eq!(t.cycles(), SetPartition::from_blocks(3, vec![vec![0, 1], vec![2]]));
        assert_eq!(t.sign(), -1);
        for s in permutations(4).unwrap() {
            let direct: Vec<usize> = {
                let mut v: Vec<usize> = s.cycles().blocks().iter().map(Vec::len).collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            };
            assert_eq!(s.cycle_type().parts(), &direct[..]);
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(permutations(0).unwrap().len(), 1);
        assert_eq!(permutations(5).unwrap().len(), 120);
        assert!(permutations(11).is_err());
        let ys = young_subgroup(&SetPartition::from_blocks(4, vec![vec![0, 2], vec![1, 3]]));
        assert_eq!(ys.len(), 4);
    }

    #[test]
    fn lrmin_examples() {
        assert_eq!(lrmin(&[4, 2, 5, 1, 3]), 3);
        assert_eq!(lrmin(&[1, 2, 3, 4]), 1);
        assert_eq!(lrmin(&[4, 3, 2, 1]), 4);
    }

    #[test]
    fn lrmin_generating_function() {
        // Σ_π t^{lrmin(π)} = t(t+1)…(t+j-1): compare coefficient lists.
        for j in 1..=7usize {
            let mut counts = vec![0u64; j + 1];
            for p in permutations(j).unwrap() {
                counts[lrmin(p.images())] += 1;
            }
            let mut rising = vec![0u64; j + 1];
            rising[0] = 1;
            for i in 0..j {
                let mut next = vec![0u64; j + 1];
                for e in 0..j {
                    next[e + 1] += rising[e];
                    next[e] += i as u64 * rising[e];
                }
                rising = next;
            }
            assert_eq!(counts, rising, "j={j}");
        }
    }

    #[test]
    fn cycles_of_product_below_join() {
        for k in 1..=5 {
            let perms = permutations(k).unwrap();
            for s in &perms {
                for t in &perms {
                    let j = s.cycles().join(&t.cycles()).unwrap();
                    assert!(s.compose(t).cycles().refines(&j));
                }
            }
        }
    }
}
