//! Set-partitions of `{0, …, k-1}` and their lattice operations.

use std::fmt;

use super::perm::Permutation;
use super::CombError;
use crate::partitions::Partition;

/// Blocks sorted internally and ordered by their minimum, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes `blocks`; panics unless they partition `{0..k-1}`.
    pub fn from_blocks(k: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        let mut seen = vec![false; k];
        for b in &mut blocks {
            assert!(!b.is_empty(), "empty block");
            b.sort_unstable();
            for &x in b.iter() {
                assert!(x < k && !seen[x], "blocks do not partition the ground set");
                seen[x] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "blocks do not cover the ground set");
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { k, blocks }
    }

    /// Elements with equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, Vec<usize>)> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match map.iter_mut().find(|(x, _)| *x == l) {
                Some((_, b)) => b.push(i),
                None => map.push((l, vec![i])),
            }
        }
        SetPartition {
            k: labels.len(),
            blocks: map.into_iter().map(|(_, b)| b).collect(),
        }
    }

    pub fn singletons(k: usize) -> Self {
        SetPartition {
            k,
            blocks: (0..k).map(|i| vec![i]).collect(),
        }
    }

    pub fn one_block(k: usize) -> Self {
        if k == 0 {
            return Self::singletons(0);
        }
        SetPartition {
            k,
            blocks: vec![(0..k).collect()],
        }
    }

    /// Consecutive intervals of the given sizes (`U_μ` for `sizes = μ`).
    pub fn intervals(sizes: &[usize]) -> Self {
        let mut start = 0;
        let mut blocks = Vec::new();
        for &s in sizes {
            if s > 0 {
                blocks.push((start..start + s).collect());
                start += s;
            }
        }
        SetPartition { k: start, blocks }
    }

    pub fn ground_size(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each element.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.k];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x] = i;
            }
        }
        out
    }

    pub fn block_sizes(&self) -> Partition {
        Partition::from_unsorted(self.blocks.iter().map(Vec::len).collect())
    }

    /// `self ≤ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.k != other.k {
            return false;
        }
        let labels = other.labels();
        self.blocks.iter().all(|b| b.iter().all(|&x| labels[x] == labels[b[0]]))
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition, CombError> {
        if self.k != other.k {
            return Err(CombError::GroundSetMismatch(self.k, other.k));
        }
        let mut uf = UnionFind::new(self.k);
        for b in self.blocks.iter().chain(&other.blocks) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Ok(uf.into_partition())
    }

    /// Image under `σ`: blocks `{σ(x) : x ∈ B}`.
    pub fn act(&self, sigma: &Permutation) -> SetPartition {
        assert_eq!(sigma.size(), self.k);
        SetPartition::from_blocks(
            self.k,
            self.blocks.iter().map(|b| b.iter().map(|&x| sigma.apply(x)).collect()).collect(),
        )
    }

    /// For each block `S_i` of `self`, the number `|finer / S_i|` of blocks of `finer` inside it.
    pub fn induced_counts(&self, finer: &SetPartition) -> Vec<usize> {
        let labels = self.labels();
        let mut counts = vec![0; self.blocks.len()];
        for b in &finer.blocks {
            counts[labels[b[0]]] += 1;
        }
        counts
    }

    /// Every set-partition coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        set_partitions_unbounded(self.blocks.len())
            .into_iter()
            .map(|grouping| {
                let blocks = grouping
                    .blocks
                    .iter()
                    .map(|g| g.iter().flat_map(|&i| self.blocks[i].iter().copied()).collect())
                    .collect();
                SetPartition::from_blocks(self.k, blocks)
            })
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|x| (x + 1).to_string()).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "{{{}}}", bs.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn into_partition(mut self) -> SetPartition {
        let n = self.parent.len();
        let labels: Vec<usize> = (0..n).map(|i| self.find(i)).collect();
        SetPartition::from_labels(&labels)
    }
}

/// Largest ground set for which [`set_partitions`] enumerates.
pub const MAX_SET_PARTITION_K: usize = 12;

/// All set-partitions of `{0..k-1}`, as restricted growth strings in lexicographic order.
pub fn set_partitions(k: usize) -> Result<Vec<SetPartition>, CombError> {
    if k > MAX_SET_PARTITION_K {
        return Err(CombError::LimitExceeded {
            what: "set-partitions",
            k,
            max: MAX_SET_PARTITION_K,
        });
    }
    Ok(set_partitions_unbounded(k))
}

pub(crate) fn set_partitions_unbounded(k: usize) -> Vec<SetPartition> {
    fn go(k: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if rgs.len() == k {
            out.push(SetPartition::from_labels(rgs));
            return;
        }
        let limit = if rgs.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            rgs.push(l);
            go(k, rgs, max.max(l), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let bell: Vec<usize> = (0..=6).map(|k| set_partitions(k).unwrap().len()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn join_examples() {
        let s = SetPartition::from_blocks(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        let t = SetPartition::from_blocks(6, vec![vec![0, 2], vec![1, 3], vec![4, 5]]);
        assert_eq!(s.join(&s).unwrap(), s);
        assert_eq!(
            s.join(&t).unwrap(),
            SetPartition::from_blocks(6, vec![vec![0, 1, 2, 3], vec![4, 5]])
        );
        assert_eq!(s.join(&SetPartition::singletons(6)).unwrap(), s);
        assert!(s.join(&SetPartition::singletons(5)).is_err());
    }

    #[test]
    fn lattice_laws() {
        for k in 0..=4 {
            let all = set_partitions(k).unwrap();
            for a in &all {
                assert!(a.refines(a));
                assert_eq!(a.join(a).unwrap(), *a);
                for b in &all {
                    let ab = a.join(b).unwrap();
                    assert_eq!(ab, b.join(a).unwrap());
                    assert!(a.refines(&ab) && b.refines(&ab));
                    if a.refines(b) && b.refines(a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        assert_eq!(ab.join(c).unwrap(), a.join(&b.join(c).unwrap()).unwrap());
                        if a.refines(c) && b.refines(c) {
                            assert!(ab.refines(c));
                        }
                        if a.refines(b) && b.refines(c) {
                            assert!(a.refines(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coarsenings_are_exactly_the_upper_set() {
        let s = SetPartition::from_blocks(4, vec![vec![0, 1], vec![2], vec![3]]);
        let up = s.coarsenings();
        assert_eq!(up.len(), 5);
        let expected: Vec<_> = set_partitions(4).unwrap().into_iter().filter(|t| s.refines(t)).collect();
        assert_eq!(up.len(), expected.len());
        assert!(up.iter().all(|t| expected.contains(t)));
    }
}
