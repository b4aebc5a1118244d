//! One-part Jack characters via hook tableaux.
//!
//! Knop–Sahi hook tableaux ([`HookTableau`]) and permuted tableaux
//! ([`PermutedTableau`]) both count `Ko_(k)(λ)`; [`psi`] and [`phi`] are
//! mutually inverse weight-preserving bijections between them. The
//! column-distinct formula and its skeleton expansion give the manifestly
//! nonnegative falling-factorial form of `Ko_(k)` in multirectangular
//! coordinates.
//!
//! Text format (used by `Display`/`FromStr`): rows separated by `/`, cells
//! by whitespace. Hook tableau cells are `.`, `*`, `*^j` (right arrow `j`
//! steps) or `*_j` (down arrow `j` steps); permuted tableau cells are `.` or
//! a positive label.

mod bijection;
mod skeleton;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{lrmin, permutations};
use crate::exact::PolyAlpha;
use crate::partitions::{Box, Partition};

pub use bijection::{phi, phi_trace, psi, psi_trace, TraceStep};
pub use skeleton::{ko_onepart_ff, skeletons, Skeleton};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HooktabError {
    #[error("box ({}, {}) lies outside the shape", .0.row, .0.col)]
    OutsideShape(Box),
    #[error("column {0} holds more than one marked box")]
    SharedColumn(usize),
    #[error("marked box ({}, {}) is down-right of ({}, {}) in adjacent columns", .0.row, .0.col, .1.row, .1.col)]
    Forbidden(Box, Box),
    #[error("arrow on ({}, {}), which is not critical", .0.row, .0.col)]
    ArrowOnNonCritical(Box),
    #[error("arrow on ({}, {}) points outside the shape", .0.row, .0.col)]
    ArrowOutOfShape(Box),
    #[error("labels in row {0} are not a permutation of 1..j")]
    BadRowLabels(usize),
    #[error("cannot parse tableau: {0}")]
    Parse(String),
}

/// Arrow on a critical box, stored as an offset from the box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    /// Points `j ≥ 0` steps to the right (`j = 0` points at the box itself).
    Right(usize),
    /// Points `j ≥ 1` steps down.
    Down(usize),
}

impl Arrow {
    pub fn target(self, b: Box) -> Box {
        match self {
            Arrow::Right(j) => Box::new(b.row, b.col + j),
            Arrow::Down(j) => Box::new(b.row + j, b.col),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookTableau {
    shape: Partition,
    marked: BTreeSet<Box>,
    arrows: BTreeMap<Box, Arrow>,
}

impl HookTableau {
    pub fn new(
        shape: Partition,
        marked: BTreeSet<Box>,
        arrows: BTreeMap<Box, Arrow>,
    ) -> Result<Self, HooktabError> {
        let t = Self::new_relaxed(shape, marked, arrows)?;
        if let Some((lower, upper)) = t.forbidden_pair() {
            return Err(HooktabError::Forbidden(lower, upper));
        }
        Ok(t)
    }

    /// Checks everything except the down-right adjacency condition, which the
    /// bijection never inspects.
    pub fn new_relaxed(
        shape: Partition,
        marked: BTreeSet<Box>,
        arrows: BTreeMap<Box, Arrow>,
    ) -> Result<Self, HooktabError> {
        let mut cols = BTreeSet::new();
        for &b in &marked {
            if !shape.contains_box(b) {
                return Err(HooktabError::OutsideShape(b));
            }
            if !cols.insert(b.col) {
                return Err(HooktabError::SharedColumn(b.col));
            }
        }
        let t = HookTableau { shape, marked, arrows };
        for (&b, &a) in &t.arrows {
            if !t.is_critical(b) {
                return Err(HooktabError::ArrowOnNonCritical(b));
            }
            if matches!(a, Arrow::Down(0)) || !t.shape.contains_box(a.target(b)) {
                return Err(HooktabError::ArrowOutOfShape(b));
            }
        }
        Ok(t)
    }

    fn forbidden_pair(&self) -> Option<(Box, Box)> {
        let by_col: BTreeMap<usize, usize> = self.marked.iter().map(|b| (b.col, b.row)).collect();
        by_col.iter().find_map(|(&c, &r)| {
            let &left = by_col.get(&c.checked_sub(1)?)?;
            (r > left).then(|| (Box::new(r, c), Box::new(left, c - 1)))
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn marked(&self) -> &BTreeSet<Box> {
        &self.marked
    }

    pub fn arrows(&self) -> &BTreeMap<Box, Arrow> {
        &self.arrows
    }

    pub fn k(&self) -> usize {
        self.marked.len()
    }

    /// Right box of two adjacent marked boxes in a row.
    pub fn is_critical(&self, b: Box) -> bool {
        b.col > 1 && self.marked.contains(&b) && self.marked.contains(&Box::new(b.row, b.col - 1))
    }

    /// `α^{#right arrows}`.
    pub fn weight(&self) -> PolyAlpha {
        alpha_pow(self.arrows.values().filter(|a| matches!(a, Arrow::Right(_))).count())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutedTableau {
    shape: Partition,
    labeled: BTreeMap<Box, usize>,
}

impl PermutedTableau {
    pub fn new(shape: Partition, labeled: BTreeMap<Box, usize>) -> Result<Self, HooktabError> {
        let mut cols = BTreeSet::new();
        for &b in labeled.keys() {
            if !shape.contains_box(b) {
                return Err(HooktabError::OutsideShape(b));
            }
            if !cols.insert(b.col) {
                return Err(HooktabError::SharedColumn(b.col));
            }
        }
        let t = PermutedTableau { shape, labeled };
        for (r, word) in t.row_words() {
            let mut sorted = word.clone();
            sorted.sort_unstable();
            if sorted.iter().enumerate().any(|(i, &x)| x != i + 1) {
                return Err(HooktabError::BadRowLabels(r));
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn labeled(&self) -> &BTreeMap<Box, usize> {
        &self.labeled
    }

    pub fn k(&self) -> usize {
        self.labeled.len()
    }

    /// Labels of each nonempty row read left to right.
    pub fn row_words(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        // BTreeMap<Box, _> iterates by row, then column.
        for (b, &l) in &self.labeled {
            rows.entry(b.row).or_default().push(l);
        }
        rows
    }

    /// `∏_rows α^{j − lrmin(π_r)}`.
    pub fn weight(&self) -> PolyAlpha {
        alpha_pow(self.row_words().values().map(|w| w.len() - lrmin(w)).sum())
    }
}

pub(crate) fn alpha_pow(e: usize) -> PolyAlpha {
    PolyAlpha::monomial(crate::exact::rational::int(1), e)
}

/// `P_i(α) = ∏_{j<i} (1 + jα)`.
pub fn p_weight(i: usize) -> PolyAlpha {
    (0..i).fold(PolyAlpha::one(), |acc, j| acc * PolyAlpha::from_ints(&[1, j as i64]))
}

/// Which family [`ko_onepart_tableaux`] sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Hook,
    Permuted,
}

/// Calls `f` with every choice of one row per column for `k` distinct columns,
/// as `(col, row)` pairs in increasing column order.
fn for_each_column_distinct(lambda: &Partition, k: usize, f: &mut dyn FnMut(&[(usize, usize)])) {
    fn go(
        heights: &[usize],
        col: usize,
        k: usize,
        cur: &mut Vec<(usize, usize)>,
        f: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        if heights.len() - col < k - cur.len() {
            return;
        }
        go(heights, col + 1, k, cur, f);
        for row in 1..=heights[col] {
            cur.push((col + 1, row));
            go(heights, col + 1, k, cur, f);
            cur.pop();
        }
    }
    let heights = lambda.conjugate().parts().to_vec();
    go(&heights, 0, k, &mut Vec::new(), f);
}

/// Every Knop–Sahi hook tableau of shape `λ` with `k` marked boxes.
pub fn hook_tableaux(lambda: &Partition, k: usize) -> Vec<HookTableau> {
    let mut out = Vec::new();
    for_each_column_distinct(lambda, k, &mut |cells| {
        let forbidden = cells
            .windows(2)
            .any(|w| w[1].0 == w[0].0 + 1 && w[1].1 > w[0].1);
        if forbidden {
            return;
        }
        let marked: BTreeSet<Box> = cells.iter().map(|&(c, r)| Box::new(r, c)).collect();
        let critical: Vec<Box> = cells
            .windows(2)
            .filter(|w| w[1].0 == w[0].0 + 1 && w[1].1 == w[0].1)
            .map(|w| Box::new(w[1].1, w[1].0))
            .collect();
        let options: Vec<Vec<Option<Arrow>>> = critical
            .iter()
            .map(|&b| {
                let mut o = vec![None];
                o.extend((0..=lambda.arm(b)).map(|j| Some(Arrow::Right(j))));
                o.extend((1..=lambda.leg(b)).map(|j| Some(Arrow::Down(j))));
                o
            })
            .collect();
        let mut idx = vec![0; critical.len()];
        loop {
            let arrows = critical
                .iter()
                .zip(idx.iter().zip(&options))
                .filter_map(|(&b, (&i, o))| o[i].map(|a| (b, a)))
                .collect();
            out.push(HookTableau {
                shape: lambda.clone(),
                marked: marked.clone(),
                arrows,
            });
            if !advance(&mut idx, &options) {
                break;
            }
        }
    });
    out
}

/// Odometer increment; false once every combination was visited.
fn advance<T>(idx: &mut [usize], options: &[Vec<T>]) -> bool {
    for (i, o) in idx.iter_mut().zip(options) {
        *i += 1;
        if *i < o.len() {
            return true;
        }
        *i = 0;
    }
    false
}

/// Every permuted tableau of shape `λ` with `k` labeled boxes.
pub fn permuted_tableaux(lambda: &Partition, k: usize) -> Vec<PermutedTableau> {
    let mut out = Vec::new();
    for_each_column_distinct(lambda, k, &mut |cells| {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(c, r) in cells {
            rows.entry(r).or_default().push(c);
        }
        let rows: Vec<(usize, Vec<usize>)> = rows.into_iter().collect();
        let perms: Vec<_> = rows
            .iter()
            .map(|(_, cols)| permutations(cols.len()).expect("row length within limit"))
            .collect();
        let mut idx = vec![0; rows.len()];
        loop {
            let mut labeled = BTreeMap::new();
            for ((r, cols), (ps, &i)) in rows.iter().zip(perms.iter().zip(&idx)) {
                for (&c, &x) in cols.iter().zip(ps[i].images()) {
                    labeled.insert(Box::new(*r, c), x + 1);
                }
            }
            out.push(PermutedTableau {
                shape: lambda.clone(),
                labeled,
            });
            if !advance(&mut idx, &perms) {
                break;
            }
        }
    });
    out
}

/// `Ko_(k)(λ)` as the weighted count of a tableau family.
pub fn ko_onepart_tableaux(k: usize, lambda: &Partition, family: Family) -> PolyAlpha {
    match family {
        Family::Hook => hook_tableaux(lambda, k)
            .iter()
            .fold(PolyAlpha::zero(), |acc, t| acc + t.weight()),
        Family::Permuted => permuted_tableaux(lambda, k)
            .iter()
            .fold(PolyAlpha::zero(), |acc, t| acc + t.weight()),
    }
}

/// `Ko_(k)(λ) = Σ_A ∏_rows P_{|R∩A|}(α)` over column-distinct `k`-subsets `A`.
pub fn ko_onepart_subsets(k: usize, lambda: &Partition) -> PolyAlpha {
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for_each_column_distinct(lambda, k, &mut |cells| {
        let mut per_row = vec![0; lambda.len()];
        for &(_, r) in cells {
            per_row[r - 1] += 1;
        }
        per_row.sort_unstable();
        *counts.entry(per_row).or_default() += 1;
    });
    let mut total = PolyAlpha::zero();
    for (per_row, n) in counts {
        let w = per_row.iter().fold(PolyAlpha::one(), |acc, &i| acc * p_weight(i));
        total += &w.scale(&crate::exact::rational::int(n as i64));
    }
    total
}

/// Outcome of [`verify_bijection`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BijectionReport {
    /// `(λ, k)` pairs examined.
    pub cases: usize,
    /// Hook tableaux pushed through `Ψ` (and as many permuted ones through `Φ`).
    pub tableaux: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive check over `|λ| ≤ max_size`, `k ≤ min(max_k, |λ|)`: `Ψ` and `Φ`
/// are mutually inverse and weight-preserving, and the hook, permuted,
/// column-distinct and Knop–Sahi values of `Ko_(k)(λ)` agree.
pub fn verify_bijection(max_size: usize, max_k: usize) -> BijectionReport {
    use rayon::prelude::*;
    let cases: Vec<(Partition, usize)> = crate::partitions::partitions_up_to(max_size)
        .into_iter()
        .flat_map(|l| (1..=l.size().min(max_k)).map(move |k| (l.clone(), k)))
        .collect();
    let results: Vec<(usize, Vec<String>)> = cases
        .par_iter()
        .map(|(lambda, k)| {
            let mut fails = Vec::new();
            let hts = hook_tableaux(lambda, *k);
            let pts = permuted_tableaux(lambda, *k);
            let mut ht_sum = PolyAlpha::zero();
            let mut images = std::collections::HashSet::new();
            for h in &hts {
                let p = psi(h);
                if p.weight() != h.weight() || &phi(&p) != h {
                    fails.push(format!("λ={lambda} k={k}: Φ(Ψ(T)) ≠ T or weight changed for T = {h}"));
                }
                ht_sum += &h.weight();
                images.insert(p);
            }
            let mut pt_sum = PolyAlpha::zero();
            for p in &pts {
                if &psi(&phi(p)) != p {
                    fails.push(format!("λ={lambda} k={k}: Ψ(Φ(T)) ≠ T for T = {p}"));
                }
                pt_sum += &p.weight();
            }
            if images.len() != pts.len() {
                fails.push(format!("λ={lambda} k={k}: Ψ hits {} of {} permuted tableaux", images.len(), pts.len()));
            }
            let ks = crate::jack::ko(&Partition::from_unsorted(vec![*k]), lambda);
            let cd = ko_onepart_subsets(*k, lambda);
            if ht_sum != pt_sum || pt_sum != cd || cd != ks {
                fails.push(format!("λ={lambda} k={k}: HT {ht_sum}, PT {pt_sum}, subsets {cd}, Knop–Sahi {ks}"));
            }
            (hts.len(), fails)
        })
        .collect();
    let mut report = BijectionReport {
        cases: cases.len(),
        ..Default::default()
    };
    for (n, f) in results {
        report.tableaux += n;
        report.failures.extend(f);
    }
    report
}

fn parse_shape_rows(s: &str) -> Result<(Partition, Vec<Vec<String>>), HooktabError> {
    let rows: Vec<Vec<String>> = s
        .split('/')
        .map(|r| r.split_whitespace().map(str::to_string).collect())
        .collect();
    let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
    let shape = Partition::new(lens).map_err(|e| HooktabError::Parse(e.to_string()))?;
    if shape.len() != rows.len() {
        return Err(HooktabError::Parse("empty row".into()));
    }
    Ok((shape, rows))
}

fn parse_num(s: &str) -> Result<usize, HooktabError> {
    s.parse().map_err(|_| HooktabError::Parse(format!("bad number `{s}`")))
}

impl FromStr for HookTableau {
    type Err = HooktabError;

    /// Parses with [`HookTableau::new_relaxed`]; call [`HookTableau::new`] on the
    /// parts for the full check.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (shape, rows) = parse_shape_rows(s)?;
        let mut marked = BTreeSet::new();
        let mut arrows = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let b = Box::new(i + 1, j + 1);
                if cell == "." {
                    continue;
                }
                let rest = cell
                    .strip_prefix('*')
                    .ok_or_else(|| HooktabError::Parse(format!("bad cell `{cell}`")))?;
                marked.insert(b);
                if let Some(j) = rest.strip_prefix('^') {
                    arrows.insert(b, Arrow::Right(parse_num(j)?));
                } else if let Some(j) = rest.strip_prefix('_') {
                    arrows.insert(b, Arrow::Down(parse_num(j)?));
                } else if !rest.is_empty() {
                    return Err(HooktabError::Parse(format!("bad cell `{cell}`")));
                }
            }
        }
        HookTableau::new_relaxed(shape, marked, arrows)
    }
}

impl FromStr for PermutedTableau {
    type Err = HooktabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (shape, rows) = parse_shape_rows(s)?;
        let mut labeled = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if cell != "." {
                    labeled.insert(Box::new(i + 1, j + 1), parse_num(cell)?);
                }
            }
        }
        PermutedTableau::new(shape, labeled)
    }
}

/// Renders a diagram whose cells are given by `cell`.
pub(crate) fn render(shape: &Partition, cell: impl Fn(Box) -> String) -> String {
    let rows: Vec<String> = (1..=shape.len())
        .map(|r| {
            (1..=shape.part(r))
                .map(|c| cell(Box::new(r, c)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    rows.join(" / ")
}

pub(crate) fn arrow_suffix(a: Option<&Arrow>) -> String {
    match a {
        None => String::new(),
        Some(Arrow::Right(j)) => format!("^{j}"),
        Some(Arrow::Down(j)) => format!("_{j}"),
    }
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.shape, |b| {
            if self.marked.contains(&b) {
                format!("*{}", arrow_suffix(self.arrows.get(&b)))
            } else {
                ".".into()
            }
        }))
    }
}

impl fmt::Display for PermutedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.shape, |b| {
            self.labeled.get(&b).map_or(".".into(), ToString::to_string)
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack;
    use crate::partitions::partitions_up_to;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn p_weights() {
        assert_eq!(p_weight(0), PolyAlpha::one());
        assert_eq!(p_weight(1), PolyAlpha::one());
        assert_eq!(p_weight(2), PolyAlpha::from_ints(&[1, 1]));
        assert_eq!(p_weight(3), PolyAlpha::from_ints(&[1, 3, 2]));
    }

    #[test]
    fn weights() {
        let t: PermutedTableau = "2 . . . . 1 . . . / . 4 1 . . . 5 2 3 / . . . . . . . / . . . 1 .".parse().unwrap();
        assert_eq!(t.weight(), alpha_pow(3));
        let inc: PermutedTableau = "1 2 3 4".parse().unwrap();
        assert_eq!(inc.weight(), alpha_pow(3));
        let ones: PermutedTableau = "1 . / . 1".parse().unwrap();
        assert_eq!(ones.weight(), PolyAlpha::one());
        let h: HookTableau = "* . . . . * *^2 *^1 *_1 / . * *^4 *_2 . . . . . / . . . . . . . / . . . . .".parse().unwrap();
        assert_eq!(h.weight(), alpha_pow(3));
        assert_eq!(h.arrows().keys().filter(|&&b| h.is_critical(b)).count(), 5);
    }

    #[test]
    fn validation() {
        assert!(matches!("* . / *".parse::<HookTableau>(), Err(HooktabError::SharedColumn(1))));
        assert!(matches!("*^0 *".parse::<HookTableau>(), Err(HooktabError::ArrowOnNonCritical(_))));
        assert!(matches!("* *^1".parse::<HookTableau>(), Err(HooktabError::ArrowOutOfShape(_))));
        assert!(matches!("* *_1 / .".parse::<HookTableau>(), Err(HooktabError::ArrowOutOfShape(_))));
        let t: HookTableau = "* . / . *".parse().unwrap();
        assert!(matches!(
            HookTableau::new(t.shape().clone(), t.marked().clone(), t.arrows().clone()),
            Err(HooktabError::Forbidden(..))
        ));
        assert!(matches!("1 1".parse::<PermutedTableau>(), Err(HooktabError::BadRowLabels(1))));
        assert!(matches!("2 .".parse::<PermutedTableau>(), Err(HooktabError::BadRowLabels(1))));
        assert!("1 . / . 1 / 3".parse::<PermutedTableau>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let s = "* *^0 . . / . . * *_1 / . . . .";
        assert_eq!(s.parse::<HookTableau>().unwrap().to_string(), s);
        let s = "2 . 1 / . 1";
        assert_eq!(s.parse::<PermutedTableau>().unwrap().to_string(), s);
    }

    #[test]
    fn small_values() {
        let two = part(&[2]);
        assert_eq!(ko_onepart_tableaux(2, &two, Family::Hook), PolyAlpha::from_ints(&[1, 1]));
        assert_eq!(ko_onepart_tableaux(2, &two, Family::Permuted), PolyAlpha::from_ints(&[1, 1]));
        assert_eq!(ko_onepart_subsets(2, &part(&[1, 1])), PolyAlpha::zero());
        assert_eq!(ko_onepart_tableaux(2, &part(&[1, 1]), Family::Hook), PolyAlpha::zero());
        assert_eq!(ko_onepart_subsets(2, &part(&[2, 1])), PolyAlpha::from_ints(&[2, 1]));
        for lambda in partitions_up_to(5) {
            let n = PolyAlpha::from_ints(&[lambda.size() as i64]);
            assert_eq!(ko_onepart_subsets(1, &lambda), n);
            assert_eq!(ko_onepart_tableaux(1, &lambda, Family::Hook), n);
            assert_eq!(ko_onepart_tableaux(1, &lambda, Family::Permuted), n);
        }
    }

    #[test]
    fn verify_small() {
        let r = verify_bijection(4, 3);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.cases > 0 && r.tableaux > 0);
    }

    #[test]
    fn four_way_agreement() {
        for lambda in partitions_up_to(7) {
            for k in 1..=lambda.size() {
                let mu = part(&[k]);
                let expected = jack::ko(&mu, &lambda);
                assert_eq!(ko_onepart_subsets(k, &lambda), expected, "subsets k={k} λ={lambda}");
                assert_eq!(ko_onepart_tableaux(k, &lambda, Family::Hook), expected, "HT k={k} λ={lambda}");
                assert_eq!(ko_onepart_tableaux(k, &lambda, Family::Permuted), expected, "PT k={k} λ={lambda}");
            }
        }
    }
}
