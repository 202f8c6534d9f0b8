use std::fmt;
use std::ops::{Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share a length.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .flat_map(|r| r.iter().cloned().map(Into::into))
                .collect(),
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scaled(&self, s: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &IntMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(Signed::abs).max().unwrap_or_default()
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Inverse over ℚ, returned only when every entry is an integer.
    pub fn integral_inverse(&self) -> Option<IntMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> = self
                    .row(r)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect();
                row.extend((0..n).map(|c| {
                    if c == r {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, p);
            let piv = a[k][k].clone();
            for x in a[k].iter_mut() {
                *x /= &piv;
            }
            for r in 0..n {
                if r != k && !a[r][k].is_zero() {
                    let f = a[r][k].clone();
                    for c in 0..2 * n {
                        let v = &f * &a[k][c];
                        a[r][c] -= v;
                    }
                }
            }
        }
        let mut inv = IntMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let x = &a[r][n + c];
                if !x.is_integer() {
                    return None;
                }
                inv[(r, c)] = x.to_integer();
            }
        }
        Some(inv)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k · row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k · col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let i = r * self.cols + c;
            self.data[i] = -std::mem::take(&mut self.data[i]);
        }
    }
}

impl PartialOrd for IntMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntMatrix {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rows(), self.cols())
            .cmp(&(other.rows(), other.cols()))
            .then_with(|| self.to_rows().cmp(&other.to_rows()))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = self
                .row(r)
                .iter()
                .map(|x| format!("{x:>width$}"))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
