//! Exact linear algebra over `Q(α)` and `Q`.

use num_traits::{One, Zero};

use super::rat_alpha::RatAlpha;
use super::rational::Rational;

/// LU factorization with row pivoting of a square matrix over `Q(α)`.
///
/// The factors are reused across right-hand sides, which is how the p*-basis
/// expansions of many functions share one elimination.
#[derive(Clone, Debug)]
pub struct LuSolver {
    n: usize,
    /// Row `i` of the permuted system is original row `perm[i]`.
    perm: Vec<usize>,
    /// Strictly lower part holds the multipliers; upper part holds U.
    lu: Vec<Vec<RatAlpha>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("matrix is singular (no pivot in column {0})")]
pub struct Singular(pub usize);

/// Cost proxy for choosing pivots: smaller rational functions keep the fill-in small.
fn weight(x: &RatAlpha) -> (usize, usize) {
    let deg = x.num().degree().unwrap_or(0) + x.den().degree().unwrap_or(0);
    let bits: usize = x
        .num()
        .coeffs()
        .iter()
        .chain(x.den().coeffs())
        .map(|c| (c.numer().bits() + c.denom().bits()) as usize)
        .sum();
    (deg, bits)
}

impl LuSolver {
    pub fn new(matrix: Vec<Vec<RatAlpha>>) -> Result<Self, Singular> {
        let n = matrix.len();
        assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
        let mut a = matrix;
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| weight(&a[r][col]))
                .ok_or(Singular(col))?;
            a.swap(col, pivot);
            perm.swap(col, pivot);
            let inv = a[col][col].inv();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                for c in col + 1..n {
                    if !a[col][c].is_zero() {
                        let delta = &factor * &a[col][c];
                        a[r][c] -= &delta;
                    }
                }
                a[r][col] = factor;
            }
        }
        Ok(LuSolver { n, perm, lu: a })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[RatAlpha]) -> Vec<RatAlpha> {
        assert_eq!(b.len(), self.n);
        let mut y: Vec<RatAlpha> = self.perm.iter().map(|&i| b[i].clone()).collect();
        for i in 0..self.n {
            for j in 0..i {
                if !self.lu[i][j].is_zero() && !y[j].is_zero() {
                    let t = &self.lu[i][j] * &y[j];
                    y[i] -= &t;
                }
            }
        }
        for i in (0..self.n).rev() {
            for j in i + 1..self.n {
                if !self.lu[i][j].is_zero() && !y[j].is_zero() {
                    let t = &self.lu[i][j] * &y[j];
                    y[i] -= &t;
                }
            }
            y[i] = &y[i] / &self.lu[i][i];
        }
        y
    }
}

/// Determinant over `Q` by Gaussian elimination.
pub fn det_rational(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::PolyAlpha;
    use crate::exact::rational::int;

    #[test]
    fn solves_symbolic_system() {
        // [[α, 1], [1, α]] x = [1, 0]  =>  x = [α/(α²-1), -1/(α²-1)]
        let a = RatAlpha::alpha();
        let one = RatAlpha::one();
        let lu = LuSolver::new(vec![vec![a.clone(), one.clone()], vec![one.clone(), a.clone()]]).unwrap();
        let x = lu.solve(&[one.clone(), RatAlpha::zero()]);
        let den = PolyAlpha::from_ints(&[-1, 0, 1]);
        assert_eq!(x[0], RatAlpha::new(PolyAlpha::x(), den.clone()));
        assert_eq!(x[1], RatAlpha::new(PolyAlpha::from_ints(&[-1]), den));
    }

    #[test]
    fn singular_detected() {
        let one = RatAlpha::one();
        assert!(LuSolver::new(vec![vec![one.clone(), one.clone()], vec![one.clone(), one]]).is_err());
    }

    #[test]
    fn determinant() {
        let m = vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(3), int(1)],
            vec![int(0), int(1), int(4)],
        ];
        assert_eq!(det_rational(m), int(18));
        assert_eq!(det_rational(vec![vec![int(0), int(1)], vec![int(1), int(0)]]), int(-1));
    }
}
