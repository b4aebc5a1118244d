//! The bijection `Ψ: HT(λ,k) → PT(λ,k)` and its inverse `Φ`.
//!
//! Both maps act on a working state holding at most one box per column,
//! each optionally labeled. `Ψ` sweeps the marked boxes right to left,
//! `Φ` sweeps the labeled boxes left to right.

use std::collections::BTreeMap;

use super::{arrow_suffix, render, Arrow, HookTableau, PermutedTableau};
use crate::partitions::{Box, Partition};

#[derive(Clone, Copy, Debug)]
struct Cell {
    row: usize,
    label: Option<usize>,
}

/// One step of a `Ψ` or `Φ` run: the rule applied and the resulting state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: &'static str,
    pub active: Box,
    pub state: String,
}

struct State<'a> {
    shape: &'a Partition,
    cells: BTreeMap<usize, Cell>,
    arrows: BTreeMap<Box, Arrow>,
}

impl State<'_> {
    /// `1 +` the largest label in `row`, or 1 if the row has none.
    fn new_max(&self, row: usize) -> usize {
        1 + self.max_in_row(row).map_or(0, |(_, l)| l)
    }

    /// Column and value of the largest label in `row`.
    fn max_in_row(&self, row: usize) -> Option<(usize, usize)> {
        self.cells
            .iter()
            .filter(|(_, c)| c.row == row)
            .filter_map(|(&col, c)| c.label.map(|l| (col, l)))
            .max_by_key(|&(_, l)| l)
    }

    fn set_label(&mut self, col: usize, label: Option<usize>) {
        self.cells.get_mut(&col).expect("marked column").label = label;
    }

    /// Columns of row `row` holding a box, within `from..to`.
    fn row_cols(&self, row: usize, from: usize, to: usize) -> Vec<usize> {
        self.cells.range(from..to).filter(|(_, c)| c.row == row).map(|(&col, _)| col).collect()
    }

    /// Moves the labels on `slots` (columns of one row) one slot to the left:
    /// `slots[i]` receives the label of `slots[i + 1]` and the last slot is
    /// emptied. `slots[0]` may be empty beforehand.
    fn shift_left(&mut self, row: usize, slots: &[usize]) {
        let labels: Vec<Option<usize>> = slots[1..].iter().map(|c| self.cells[c].label).collect();
        self.cells.remove(slots.last().expect("nonempty slots"));
        for (&col, label) in slots.iter().zip(labels) {
            self.cells.insert(col, Cell { row, label });
        }
    }

    /// Inverse of [`Self::shift_left`]: `slots[i + 1]` receives the label of
    /// `slots[i]` and the first slot is emptied. The last slot may be empty
    /// beforehand.
    fn shift_right(&mut self, row: usize, slots: &[usize]) {
        let labels: Vec<Option<usize>> = slots[..slots.len() - 1].iter().map(|c| self.cells[c].label).collect();
        self.cells.remove(&slots[0]);
        for (&col, label) in slots[1..].iter().zip(labels) {
            self.cells.insert(col, Cell { row, label });
        }
    }

    fn render(&self) -> String {
        render(self.shape, |b| match self.cells.get(&b.col) {
            Some(c) if c.row == b.row => {
                let base = c.label.map_or("*".to_string(), |l| l.to_string());
                format!("{base}{}", arrow_suffix(self.arrows.get(&b)))
            }
            _ => ".".into(),
        })
    }
}

/// `Ψ(T)` with every intermediate state.
pub fn psi_trace(t: &HookTableau) -> (PermutedTableau, Vec<TraceStep>) {
    let mut st = State {
        shape: t.shape(),
        cells: t.marked().iter().map(|b| (b.col, Cell { row: b.row, label: None })).collect(),
        arrows: t.arrows().clone(),
    };
    let order: Vec<usize> = st.cells.keys().rev().copied().collect();
    let mut steps = Vec::new();
    if let Some(&first) = order.first() {
        st.set_label(first, Some(1));
    }
    for (idx, &c) in order.iter().enumerate() {
        let Cell { row, label } = st.cells[&c];
        let a = label.expect("active box is labeled");
        let active = Box::new(row, c);
        let rule = match st.arrows.remove(&active) {
            None => {
                if let Some(&next) = order.get(idx + 1) {
                    let m = st.new_max(st.cells[&next].row);
                    st.set_label(next, Some(m));
                }
                "N"
            }
            Some(arrow) => {
                // Critical, so the left neighbour is the next active box.
                st.set_label(c - 1, Some(a));
                st.cells.remove(&c);
                match arrow {
                    Arrow::Down(j) => {
                        let m = st.new_max(row + j);
                        st.cells.insert(c, Cell { row: row + j, label: Some(m) });
                        "D"
                    }
                    Arrow::Right(j) => {
                        let cp = c + j;
                        match st.cells.get(&cp).map(|x| x.row) {
                            None => {
                                let m = st.new_max(row);
                                st.cells.insert(cp, Cell { row, label: Some(m) });
                                "Re"
                            }
                            Some(r) => {
                                let mut slots = vec![c];
                                slots.extend(st.row_cols(r, c + 1, cp + 1));
                                st.shift_left(r, &slots);
                                if r <= row {
                                    let m = st.new_max(row);
                                    st.cells.insert(cp, Cell { row, label: Some(m) });
                                    "Ra"
                                } else {
                                    let m = st.new_max(r);
                                    st.cells.insert(cp, Cell { row: r, label: Some(m) });
                                    "Rb"
                                }
                            }
                        }
                    }
                }
            }
        };
        steps.push(TraceStep {
            rule,
            active,
            state: st.render(),
        });
    }
    let labeled = st
        .cells
        .iter()
        .map(|(&col, c)| (Box::new(c.row, col), c.label.expect("all boxes labeled at the end")))
        .collect();
    let out = PermutedTableau::new(t.shape().clone(), labeled).expect("Ψ produces a permuted tableau");
    (out, steps)
}

pub fn psi(t: &HookTableau) -> PermutedTableau {
    psi_trace(t).0
}

/// `Φ(T)` with every intermediate state.
pub fn phi_trace(t: &PermutedTableau) -> (HookTableau, Vec<TraceStep>) {
    let mut st = State {
        shape: t.shape(),
        cells: t.labeled().iter().map(|(b, &l)| (b.col, Cell { row: b.row, label: Some(l) })).collect(),
        arrows: BTreeMap::new(),
    };
    let mut steps = Vec::new();
    while let Some((&c, &Cell { row, label })) = st.cells.iter().find(|(_, x)| x.label.is_some()) {
        let a = label.expect("filtered on labeled");
        let next = st.cells.get(&(c + 1)).copied();
        let is_max = st.max_in_row(row).map(|(_, l)| l) == Some(a);
        st.set_label(c, None);
        let rule = match next {
            Some(b) if b.row > row => {
                let (cm, m) = st.max_in_row(b.row).expect("row of a labeled box");
                if b.label == Some(m) {
                    st.cells.remove(&(c + 1));
                    st.arrows.insert(Box::new(row, c + 1), Arrow::Down(b.row - row));
                    st.cells.insert(c + 1, Cell { row, label: Some(a) });
                    "Bm"
                } else {
                    move_max_right(&mut st, row, c, a, b.row, cm);
                    "Bn"
                }
            }
            _ if is_max => "M",
            None => {
                let (cm, _) = st.max_in_row(row).expect("active row is labeled");
                st.cells.remove(&cm);
                st.arrows.insert(Box::new(row, c + 1), Arrow::Right(cm - (c + 1)));
                st.cells.insert(c + 1, Cell { row, label: Some(a) });
                "E"
            }
            Some(b) => {
                let (cm, _) = st.max_in_row(row).expect("active row is labeled");
                move_max_right(&mut st, row, c, a, b.row, cm);
                "A"
            }
        };
        steps.push(TraceStep {
            rule,
            active: Box::new(row, c),
            state: st.render(),
        });
    }
    let marked = st.cells.iter().map(|(&col, x)| Box::new(x.row, col)).collect();
    let out = HookTableau::new_relaxed(t.shape().clone(), marked, st.arrows).expect("Φ produces a hook tableau");
    (out, steps)
}

/// Shared tail of rules (A) and (Bn): unmark the maximum at column `cm`, shift
/// row `r` one slot right over columns `c+1..cm`, then mark `(row, c+1)` with
/// label `a` and a right arrow to column `cm`.
fn move_max_right(st: &mut State<'_>, row: usize, c: usize, a: usize, r: usize, cm: usize) {
    st.cells.remove(&cm);
    let mut slots = st.row_cols(r, c + 1, cm);
    slots.push(cm);
    if slots.len() > 1 {
        st.shift_right(r, &slots);
    }
    st.arrows.insert(Box::new(row, c + 1), Arrow::Right(cm - (c + 1)));
    st.cells.insert(c + 1, Cell { row, label: Some(a) });
}

pub fn phi(t: &PermutedTableau) -> HookTableau {
    phi_trace(t).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hooktab::{hook_tableaux, permuted_tableaux};
    use crate::partitions::partitions_up_to;
    use std::collections::HashSet;

    const KS_EXAMPLE: &str = "* . . . . * *^2 *^1 *_1 / . * *^4 *_2 . . . . . / . . . . . . . / . . . . .";
    const PT_EXAMPLE: &str = "2 . . . . 1 . . . / . 4 1 . . . 5 2 3 / . . . . . . . / . . . 1 .";

    #[test]
    fn psi_worked_example() {
        let t: HookTableau = KS_EXAMPLE.parse().unwrap();
        let (pt, steps) = psi_trace(&t);
        assert_eq!(pt, PT_EXAMPLE.parse().unwrap());
        assert_eq!(pt.weight(), t.weight());
        let rules: Vec<_> = steps.iter().map(|s| s.rule).collect();
        assert_eq!(rules, ["D", "Rb", "Rb", "N", "D", "Ra", "N", "N"]);
        // The printed tableau has (2,2) down-right of (1,1), so it is not a
        // valid hook tableau and Φ returns the valid preimage instead.
        let strict = HookTableau::new(t.shape().clone(), t.marked().clone(), t.arrows().clone());
        assert!(matches!(strict, Err(crate::hooktab::HooktabError::Forbidden(..))));
        let back = phi(&pt);
        assert_eq!(back.to_string().split(" / ").next().unwrap(), "* *^5 *_1 *_3 . * *^2 *^1 *_1");
        assert_eq!(back.weight(), t.weight());
        assert_eq!(psi(&back), pt);
    }

    #[test]
    fn phi_worked_example() {
        let shape = ". 2 . . . . . . 3 . 1 / 2 . . 1 . . . 3 . 4 . / . . 2 . 3 . 1";
        let out = ". . . . . . . . * *^0 * / * *^8 *^2 *^4 *_1 . . * . . . / . . . . . . *";
        let t: PermutedTableau = shape.parse().unwrap();
        let (h, steps) = phi_trace(&t);
        assert_eq!(h, out.parse().unwrap());
        let rules: Vec<_> = steps.iter().map(|s| s.rule).collect();
        assert_eq!(&rules[..4], ["A", "Bn", "A", "Bm"]);
        assert_eq!(psi(&h), t);
        assert_eq!(h.weight(), t.weight());
    }

    #[test]
    fn small_cases() {
        let single: HookTableau = ". . / . . / *".parse().unwrap();
        assert_eq!(psi(&single), ". . / . . / 1".parse().unwrap());
        let pair: HookTableau = "* * .".parse().unwrap();
        let pt = psi(&pair);
        assert_eq!(pt, "2 1 .".parse().unwrap());
        assert_eq!(phi(&pt), pair);
        let self_arrow: HookTableau = "* *^0".parse().unwrap();
        assert_eq!(psi(&self_arrow), "1 2".parse().unwrap());
    }

    #[test]
    fn exhaustive_round_trip() {
        for lambda in partitions_up_to(6) {
            for k in 1..=lambda.size().min(4) {
                let hts = hook_tableaux(&lambda, k);
                let pts = permuted_tableaux(&lambda, k);
                assert_eq!(hts.len(), pts.len(), "λ={lambda} k={k}");
                let mut images = HashSet::new();
                for h in &hts {
                    let p = psi(h);
                    assert_eq!(p.weight(), h.weight(), "{h}");
                    assert_eq!(&phi(&p), h, "{h}");
                    images.insert(p);
                }
                assert_eq!(images.len(), pts.len());
                for p in &pts {
                    let h = phi(p);
                    assert!(HookTableau::new(h.shape().clone(), h.marked().clone(), h.arrows().clone()).is_ok(), "{p}");
                    assert_eq!(&psi(&h), p, "{p}");
                }
            }
        }
    }
}
