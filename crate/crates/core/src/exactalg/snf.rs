//! Smith normal form with unimodular transforms.
//!
//! Pivoting always takes the smallest nonzero magnitude in the active
//! submatrix, scanning row-major and keeping the first minimum, so results
//! are reproducible bit for bit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal entries `d_1 | d_2 | ...`, nonnegative, length `min(rows, cols)`.
    pub diag: Vec<BigInt>,
    /// Row transform, `rows × rows`, determinant ±1.
    pub u: IntMatrix,
    /// Column transform, `cols × cols`, determinant ±1.
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// `diag` embedded in a `rows × cols` matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.u.rows(), self.v.rows());
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }

    /// Invariant factors of the cokernel `ℤ^rows / (column span)`, with 1s
    /// dropped and free summands reported as 0.
    pub fn cokernel_factors(&self) -> Vec<BigInt> {
        let rows = self.u.rows();
        let mut out: Vec<BigInt> = self
            .diag
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
        out.extend((self.diag.len()..rows).map(|_| BigInt::zero()));
        out
    }

    /// Order of the cokernel, or `None` when it is infinite.
    pub fn cokernel_order(&self) -> Option<BigInt> {
        let f = self.cokernel_factors();
        if f.iter().any(Zero::is_zero) {
            None
        } else {
            Some(f.iter().product())
        }
    }
}

pub fn snf(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    'outer: for t in 0..steps {
        loop {
            let Some((pr, pc)) = smallest_entry(&d, t) else {
                break 'outer;
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let pivot = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let q = &d[(i, t)] / &pivot;
                if !q.is_zero() {
                    let nq = -q;
                    d.add_row_multiple(i, t, &nq);
                    u.add_row_multiple(i, t, &nq);
                }
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &d[(t, j)] / &pivot;
                if !q.is_zero() {
                    let nq = -q;
                    d.add_col_multiple(j, t, &nq);
                    v.add_col_multiple(j, t, &nq);
                }
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let diag = (0..steps).map(|i| d[(i, i)].clone()).collect();
    SnfResult { diag, u, v }
}

fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            let x = &d[(r, c)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((r, c, a));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let r = snf(&IntMatrix::from_rows(rows));
        r.diag.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn check_identity(m: &IntMatrix) {
        let r = snf(m);
        assert_eq!(&(&r.u * m) * &r.v, r.diagonal_matrix());
        assert_eq!(r.u.det().unwrap().abs(), BigInt::one());
        assert_eq!(r.v.det().unwrap().abs(), BigInt::one());
        for w in r.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero());
        }
    }

    #[test]
    fn examples() {
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag_of(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(diag_of(&[vec![1, 4], vec![2, -1]]), vec![1, 9]);
        assert_eq!(diag_of(&[vec![2, 4], vec![4, 8]]), vec![2, 0]);
        assert_eq!(diag_of(&[vec![6, 10, 15]]), vec![1]);
    }

    #[test]
    fn rectangular_and_degenerate() {
        for rows in [
            vec![vec![0i64, 0], vec![0, 0], vec![0, 0]],
            vec![vec![4, 6, 8], vec![2, 2, 2]],
            vec![vec![3], vec![6], vec![9]],
            vec![vec![0, 5], vec![7, 0]],
        ] {
            check_identity(&IntMatrix::from_rows(&rows));
        }
        let empty = snf(&IntMatrix::zeros(0, 0));
        assert!(empty.diag.is_empty());
    }

    #[test]
    fn cokernel() {
        let r = snf(&IntMatrix::from_rows(&[vec![1i64, 4], vec![2, -1]]));
        assert_eq!(r.cokernel_factors(), vec![BigInt::from(9)]);
        assert_eq!(r.cokernel_order(), Some(BigInt::from(9)));
        let free = snf(&IntMatrix::from_rows(&[vec![2i64], vec![0]]));
        assert_eq!(free.cokernel_order(), None);
    }
}
