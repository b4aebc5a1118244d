//! Pair-partitions (perfect matchings) of `{0, …, 2k-1}`.

use std::fmt;

use super::perm::Permutation;
use super::setpart::{SetPartition, UnionFind};
use super::CombError;
use crate::partitions::Partition;

/// Stored as the fixed-point-free involution `partner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartition {
    partner: Vec<usize>,
}

impl PairPartition {
    /// Panics unless the pairs form a perfect matching of `{0..2k-1}`.
    pub fn from_pairs(k: usize, pairs: &[(usize, usize)]) -> Self {
        let mut partner = vec![usize::MAX; 2 * k];
        assert_eq!(pairs.len(), k, "need exactly k pairs");
        for &(a, b) in pairs {
            assert!(a != b && a < 2 * k && b < 2 * k, "bad pair ({a},{b})");
            assert!(partner[a] == usize::MAX && partner[b] == usize::MAX, "pairs overlap");
            partner[a] = b;
            partner[b] = a;
        }
        PairPartition { partner }
    }

    /// `S_⋆ = {{1,2},{3,4},…}`.
    pub fn star(k: usize) -> Self {
        PairPartition {
            partner: (0..2 * k).map(|i| i ^ 1).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, x: usize) -> usize {
        self.partner[x]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| (i, self.partner[i]))
            .collect()
    }

    pub fn as_set_partition(&self) -> SetPartition {
        SetPartition::from_blocks(
            self.partner.len(),
            self.pairs().into_iter().map(|(a, b)| vec![a, b]).collect(),
        )
    }

    /// Join of the two matchings, computed directly.
    pub fn join(&self, other: &PairPartition) -> SetPartition {
        assert_eq!(self.k(), other.k(), "different ground sets");
        let mut uf = UnionFind::new(self.partner.len());
        for i in 0..self.partner.len() {
            uf.union(i, self.partner[i]);
            uf.union(i, other.partner[i]);
        }
        uf.into_partition()
    }

    /// Number of blocks of the join, `|𝒰(self, other)|`.
    pub fn join_count(&self, other: &PairPartition) -> usize {
        let n = self.partner.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            // Alternate the two matchings around the cycle.
            let mut x = start;
            loop {
                seen[x] = true;
                let y = self.partner[x];
                seen[y] = true;
                x = other.partner[y];
                if x == start {
                    break;
                }
            }
        }
        count
    }

    /// `σ·S = {{σ(a), σ(b)}}`.
    pub fn act(&self, sigma: &Permutation) -> PairPartition {
        assert_eq!(sigma.size(), self.partner.len());
        let mut partner = vec![0; self.partner.len()];
        for (a, &b) in self.partner.iter().enumerate() {
            partner[sigma.apply(a)] = sigma.apply(b);
        }
        PairPartition { partner }
    }

    /// True when each pair lies inside a block of `u`.
    pub fn refines(&self, u: &SetPartition) -> bool {
        let labels = u.labels();
        self.partner.iter().enumerate().all(|(a, &b)| labels[a] == labels[b])
    }
}

/// Half the block sizes of the join, sorted decreasingly.
pub fn type_of_pair(s1: &PairPartition, s2: &PairPartition) -> Partition {
    let join = s1.join(s2);
    Partition::from_unsorted(join.blocks().iter().map(|b| b.len() / 2).collect())
}

/// `type(S_⋆, σ·S_⋆)` for `σ` acting on `2k` points.
pub fn coset_type(sigma: &Permutation) -> Result<Partition, CombError> {
    if !sigma.size().is_multiple_of(2) {
        return Err(CombError::OddGroundSet(sigma.size()));
    }
    let star = PairPartition::star(sigma.size() / 2);
    Ok(type_of_pair(&star, &star.act(sigma)))
}

/// A fixed pair `(S_1^μ, S_2^μ)` of type `μ`: on each interval of length `2μ_i`,
/// `S_1` pairs consecutive elements and `S_2` closes the cycle shifted by one.
pub fn type_representative(mu: &Partition) -> (PairPartition, PairPartition) {
    let k = mu.size();
    let s1 = PairPartition::star(k);
    let mut pairs = Vec::new();
    let mut start = 0;
    for &m in mu.parts() {
        let len = 2 * m;
        for j in 0..m {
            let a = start + 2 * j + 1;
            let b = start + (2 * j + 2) % len;
            pairs.push((a, b));
        }
        start += len;
    }
    (s1, PairPartition::from_pairs(k, &pairs))
}

/// Largest `k` for which [`pair_partitions`] enumerates matchings of `[2k]`.
pub const MAX_PAIR_PARTITION_K: usize = 6;

/// All `(2k-1)!!` matchings of `{0..2k-1}`, lexicographic in the pairing of the smallest free element.
pub fn pair_partitions(k: usize) -> Result<Vec<PairPartition>, CombError> {
    if k > MAX_PAIR_PARTITION_K {
        return Err(CombError::LimitExceeded {
            what: "pair-partitions",
            k,
            max: MAX_PAIR_PARTITION_K,
        });
    }
    Ok(matchings_of(&(0..2 * k).collect::<Vec<_>>(), 2 * k))
}

/// All matchings of `{0..2k-1}` that refine `u` (each block of `u` must have even size).
pub fn pair_partitions_below(u: &SetPartition) -> Vec<PairPartition> {
    let n = u.ground_size();
    let mut out = vec![vec![usize::MAX; n]];
    for block in u.blocks() {
        let local = matchings_of(block, n);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for base in &out {
            for m in &local {
                let mut partner = base.clone();
                for &x in block {
                    partner[x] = m.partner[x];
                }
                next.push(partner);
            }
        }
        out = next;
    }
    out.into_iter().map(|partner| PairPartition { partner }).collect()
}

/// Matchings of the points in `elems`, embedded in a ground set of size `n`
/// (other entries of `partner` are left as `usize::MAX`).
fn matchings_of(elems: &[usize], n: usize) -> Vec<PairPartition> {
    fn go(free: &mut Vec<usize>, partner: &mut Vec<usize>, out: &mut Vec<PairPartition>) {
        if free.is_empty() {
            out.push(PairPartition {
                partner: partner.clone(),
            });
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            partner[a] = b;
            partner[b] = a;
            go(free, partner, out);
            partner[a] = usize::MAX;
            partner[b] = usize::MAX;
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    if !elems.len().is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(&mut elems.to_vec(), &mut vec![usize::MAX; n], &mut out);
    out
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{{{},{}}}", a + 1, b + 1)).collect();
        write!(f, "{{{}}}", ps.join(","))
    }
}

impl fmt::Debug for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm::permutations;
    use crate::partitions::partitions_of;
    use num_bigint::BigInt;
    use std::collections::HashMap;

    fn pp(k: usize, pairs: &[(usize, usize)]) -> PairPartition {
        // 1-based pairs in tests, as written on paper.
        let z: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        PairPartition::from_pairs(k, &z)
    }

    #[test]
    fn counts() {
        let c: Vec<usize> = (0..=4).map(|k| pair_partitions(k).unwrap().len()).collect();
        assert_eq!(c, vec![1, 1, 3, 15, 105]);
    }

    #[test]
    fn type_examples() {
        let s1 = pp(3, &[(1, 2), (3, 4), (5, 6)]);
        let s2 = pp(3, &[(1, 3), (2, 4), (5, 6)]);
        assert_eq!(type_of_pair(&s1, &s2), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(s1.join_count(&s2), 2);
        assert_eq!(type_of_pair(&s1, &s1), Partition::ones(3));
    }

    #[test]
    fn coset_types_in_s4() {
        let t = Permutation::from_word(&[1, 3, 2, 4]);
        assert_eq!(coset_type(&t).unwrap(), Partition::new(vec![2]).unwrap());
        assert_eq!(coset_type(&Permutation::identity(4)).unwrap(), Partition::ones(2));
        let h2 = permutations(4)
            .unwrap()
            .iter()
            .filter(|s| coset_type(s).unwrap() == Partition::ones(2))
            .count();
        assert_eq!(h2, 8);
    }

    #[test]
    fn coset_type_census_sums_to_factorial() {
        for k in 1..=3 {
            let mut census: HashMap<Partition, usize> = HashMap::new();
            for s in permutations(2 * k).unwrap() {
                *census.entry(coset_type(&s).unwrap()).or_default() += 1;
            }
            let total: usize = census.values().sum();
            assert_eq!(total, (1..=2 * k).product::<usize>());
            // σ ↦ σ·S_⋆ is |H_k|-to-one, so each class is |H_k| times a matching count.
            let hk = (1 << k) * (1..=k).product::<usize>();
            let star = PairPartition::star(k);
            for (nu, count) in census {
                let matchings = pair_partitions(k).unwrap().iter().filter(|m| type_of_pair(&star, m) == nu).count();
                assert_eq!(count, hk * matchings);
            }
        }
    }

    #[test]
    fn representatives_have_their_type() {
        for k in 1..=5 {
            for mu in partitions_of(k) {
                let (s1, s2) = type_representative(&mu);
                assert_eq!(type_of_pair(&s1, &s2), mu);
            }
        }
    }

    #[test]
    fn type_census() {
        for k in 1..=4 {
            let all = pair_partitions(k).unwrap();
            let mut census: HashMap<Partition, usize> = HashMap::new();
            for a in &all {
                for b in &all {
                    *census.entry(type_of_pair(a, b)).or_default() += 1;
                }
            }
            for nu in partitions_of(k) {
                let fact: BigInt = (1..=2 * k).map(BigInt::from).product();
                let expected = fact / (nu.z() * BigInt::from(2).pow(nu.len() as u32));
                assert_eq!(BigInt::from(census[&nu]), expected, "k={k} nu={nu}");
            }
        }
    }

    #[test]
    fn below_interval_partition() {
        let u = SetPartition::intervals(&[4, 2]);
        let below = pair_partitions_below(&u);
        assert_eq!(below.len(), 3);
        assert!(below.iter().all(|p| p.refines(&u)));
    }
}
