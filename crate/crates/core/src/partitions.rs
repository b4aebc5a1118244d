//! Integer partitions, Young diagrams, hooks, and multirectangular coordinates.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exact::{PolyAlpha, Rational};
use crate::exact::rational::int;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("partitions have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("partition has {distinct} distinct parts but only {d} rectangles are available")]
    TooManyBlocks { distinct: usize, d: usize },
    #[error("{outer} does not contain {inner}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("invalid partition: {0}")]
    Invalid(String),
}

/// A weakly decreasing list of positive parts. The empty list is the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// A cell of a Young diagram, 1-based, rows numbered top to bottom.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Box {
    pub row: usize,
    pub col: usize,
}

impl Box {
    pub fn new(row: usize, col: usize) -> Self {
        Box { row, col }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::Invalid(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i`, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Multiplicity `m_j(λ)`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&x| x == j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    /// The partition with `n` extra parts equal to one.
    pub fn with_ones(&self, n: usize) -> Partition {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(1, n));
        Partition(v)
    }

    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Box::new(i + 1, j)))
    }

    pub fn contains_box(&self, b: Box) -> bool {
        b.row >= 1 && b.col >= 1 && self.part(b.row) >= b.col
    }

    pub fn arm(&self, b: Box) -> usize {
        self.part(b.row) - b.col
    }

    pub fn leg(&self, b: Box) -> usize {
        self.0.iter().filter(|&&x| x >= b.col).count() - b.row
    }

    /// `(H, H')` with `H = ∏(α a + l + 1)` and `H' = ∏(α a + l + α)`.
    pub fn hook_products(&self) -> (PolyAlpha, PolyAlpha) {
        let mut h = PolyAlpha::one();
        let mut hp = PolyAlpha::one();
        for b in self.boxes() {
            let a = self.arm(b) as i64;
            let l = self.leg(b) as i64;
            h = &h * &PolyAlpha::linear(int(a), int(l + 1));
            hp = &hp * &PolyAlpha::linear(int(a + 1), int(l));
        }
        (h, hp)
    }

    /// Classical hook product `∏ (a + l + 1)`.
    pub fn hook_product_classical(&self) -> BigInt {
        self.boxes()
            .map(|b| BigInt::from(self.arm(b) + self.leg(b) + 1))
            .fold(BigInt::one(), |a, x| a * x)
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut m = 0;
            while i < self.0.len() && self.0[i] == v {
                m += 1;
                i += 1;
                acc *= BigInt::from(v) * BigInt::from(m);
            }
        }
        acc
    }

    pub fn z_rational(&self) -> Rational {
        Rational::from_integer(self.z())
    }

    /// `λ_i ≥ μ_i` for every `i`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn dominates(&self, mu: &Partition) -> Result<bool, PartitionError> {
        self.check_same_size(mu)?;
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(mu.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += mu.0.get(i).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when the parts of `self` can be grouped so that the groups sum to the parts of `mu`.
    pub fn refines(&self, mu: &Partition) -> Result<bool, PartitionError> {
        self.check_same_size(mu)?;
        Ok(count_bin_fillings(&self.0, &mu.0, true) > 0)
    }

    pub fn check_same_size(&self, other: &Partition) -> Result<(), PartitionError> {
        if self.size() == other.size() {
            Ok(())
        } else {
            Err(PartitionError::SizeMismatch(self.size(), other.size()))
        }
    }

    /// Replaces each box by an `s × s` block.
    pub fn dilate(&self, s: usize) -> Partition {
        Partition(self.0.iter().flat_map(|&x| std::iter::repeat_n(x * s, s)).collect())
    }

    /// Distinct part values with their multiplicities, largest first.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

/// Number of ways to place the (distinguishable) `items` into bins so that bin
/// `i` receives total exactly `bins[i]`. With `stop_at_first`, returns 0 or 1.
pub(crate) fn count_bin_fillings(items: &[usize], bins: &[usize], stop_at_first: bool) -> u64 {
    fn go(items: &[usize], idx: usize, room: &mut [usize], stop: bool) -> u64 {
        if idx == items.len() {
            return room.iter().all(|&r| r == 0) as u64;
        }
        let x = items[idx];
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= x {
                room[i] -= x;
                total += go(items, idx + 1, room, stop);
                room[i] += x;
                if stop && total > 0 {
                    return total;
                }
            }
        }
        total
    }
    if items.iter().sum::<usize>() != bins.iter().sum::<usize>() {
        return 0;
    }
    let mut room = bins.to_vec();
    go(items, 0, &mut room, stop_at_first)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    /// Accepts `"2,1"`, `"(2,1)"`, or `""` for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| PartitionError::Invalid(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first, `(1^n)` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for x in (1..=max.min(n)).rev() {
            prefix.push(x);
            go(n - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by increasing size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Multirectangular coordinates: `p_s` rows of length `q_s = r_s + … + r_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiRect {
    pub p: Vec<usize>,
    pub r: Vec<usize>,
}

impl MultiRect {
    pub fn new(p: Vec<usize>, r: Vec<usize>) -> Self {
        assert_eq!(p.len(), r.len(), "p and r must have the same length");
        MultiRect { p, r }
    }

    pub fn d(&self) -> usize {
        self.p.len()
    }

    /// `q_s = r_s + … + r_d`.
    pub fn q(&self) -> Vec<usize> {
        let mut q = vec![0; self.d()];
        let mut acc = 0;
        for s in (0..self.d()).rev() {
            acc += self.r[s];
            q[s] = acc;
        }
        q
    }

    pub fn to_partition(&self) -> Partition {
        let q = self.q();
        let mut parts = Vec::new();
        for (s, &len) in q.iter().enumerate() {
            if len > 0 {
                parts.extend(std::iter::repeat_n(len, self.p[s]));
            }
        }
        Partition(parts)
    }

    /// Canonical coordinates of `λ` using its distinct part values, padded with
    /// leading empty blocks up to `d`.
    pub fn from_partition(lambda: &Partition, d: usize) -> Result<Self, PartitionError> {
        let blocks = lambda.blocks();
        if blocks.len() > d {
            return Err(PartitionError::TooManyBlocks {
                distinct: blocks.len(),
                d,
            });
        }
        let pad = d - blocks.len();
        let mut p = vec![0; pad];
        let mut q = vec![blocks.first().map_or(0, |b| b.0); pad];
        for &(v, m) in &blocks {
            p.push(m);
            q.push(v);
        }
        let r = (0..d).map(|s| q[s] - q.get(s + 1).copied().unwrap_or(0)).collect();
        Ok(MultiRect { p, r })
    }

    pub fn dilate(&self, s: usize) -> Self {
        MultiRect {
            p: self.p.iter().map(|x| x * s).collect(),
            r: self.r.iter().map(|x| x * s).collect(),
        }
    }

    pub fn p_i64(&self) -> Vec<i64> {
        self.p.iter().map(|&x| x as i64).collect()
    }

    pub fn r_i64(&self) -> Vec<i64> {
        self.r.iter().map(|&x| x as i64).collect()
    }
}

/// Every coordinate vector in `{0..=max}^{2d}`.
pub fn multirect_grid(d: usize, max: usize) -> Vec<MultiRect> {
    let mut out = Vec::new();
    let total = (max + 1).pow(2 * d as u32);
    for mut code in 0..total {
        let mut v = Vec::with_capacity(2 * d);
        for _ in 0..2 * d {
            v.push(code % (max + 1));
            code /= max + 1;
        }
        let r = v.split_off(d);
        out.push(MultiRect { p: v, r });
    }
    out
}
