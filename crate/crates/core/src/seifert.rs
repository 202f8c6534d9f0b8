//! Seifert matrices and the invariants read directly off them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{poly_gcd, IntMatrix, IntPoly};

/// A validated Seifert matrix: square, even-dimensional, with
/// `det(Aᵀ - A) = 1`. The empty matrix is the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    a: IntMatrix,
}

/// Alexander polynomial normalized as `det(A - t·Aᵀ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPoly(IntPoly);

impl AlexanderPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    /// `t^(2g) Δ(1/t) = ±Δ(t)`.
    pub fn is_symmetric(&self, genus: usize) -> bool {
        let mut padded = self.0.coeffs().to_vec();
        padded.resize(2 * genus + 1, BigInt::zero());
        let rev = IntPoly::new(padded.into_iter().rev().collect());
        rev == self.0 || rev == -self.0.clone()
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl SeifertMatrix {
    pub fn validate(a: IntMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() % 2 != 0 {
            return Err(Error::OddDimension(a.rows()));
        }
        let d = (&a.transpose() - &a).det()?;
        if !d.is_one() {
            return Err(Error::NotUnimodularIntersection(d.to_string()));
        }
        Ok(SeifertMatrix { a })
    }

    pub fn unknot() -> Self {
        SeifertMatrix {
            a: IntMatrix::zeros(0, 0),
        }
    }

    /// The twist knot `T_k` with Seifert matrix `[[-1, 1], [0, k]]`.
    pub fn twist(k: i64) -> Self {
        Self::validate(IntMatrix::from_rows(&[vec![-1i64, 1], vec![0, k]]))
            .expect("twist matrices are always valid")
    }

    /// Recognizes `[[-1, 1], [0, k]]` and returns `k`.
    pub fn as_twist(&self) -> Option<i64> {
        let a = &self.a;
        if a.rows() != 2 {
            return None;
        }
        let base = [(0, 0, -1i64), (0, 1, 1), (1, 0, 0)];
        if base.iter().all(|&(r, c, v)| a[(r, c)] == BigInt::from(v)) {
            i64::try_from(&a[(1, 1)]).ok()
        } else {
            None
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn genus(&self) -> usize {
        self.a.rows() / 2
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    /// Seifert form `θ(x, y) = xᵀ A y`.
    pub fn theta(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        x.iter().zip(self.a.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// `Δ(t) = det(A - t·Aᵀ)`, recovered exactly by interpolating the
    /// integer determinant at `t = 0, 1, ..., 2g`.
    pub fn alexander(&self) -> AlexanderPoly {
        let n = self.dim();
        let at = self.a.transpose();
        let samples: Vec<(BigInt, BigInt)> = (0..=n as i64)
            .map(|x| {
                let x = BigInt::from(x);
                let m = &self.a - &at.scaled(&x);
                let d = m.det().expect("square");
                (x, d)
            })
            .collect();
        AlexanderPoly(interpolate(&samples))
    }

    /// `G = (Aᵀ - A)⁻¹ Aᵀ`, integral because `det(Aᵀ - A) = 1`.
    pub fn monodromy_g(&self) -> Result<IntMatrix> {
        if self.genus() == 0 {
            return Err(Error::EmptyMatrix);
        }
        let at = self.a.transpose();
        let inv = (&at - &self.a)
            .integral_inverse()
            .expect("unimodular intersection form");
        Ok(&inv * &at)
    }

    /// Block-diagonal sum, the Seifert matrix of a connected sum.
    pub fn block_sum(parts: &[(&SeifertMatrix, usize)]) -> Result<Self> {
        if parts.iter().any(|&(_, m)| m == 0) {
            return Err(Error::ZeroMultiplicity);
        }
        let blocks: Vec<&IntMatrix> = parts
            .iter()
            .flat_map(|&(s, m)| std::iter::repeat_n(&s.a, m))
            .collect();
        Ok(SeifertMatrix {
            a: IntMatrix::block_diag(&blocks),
        })
    }

    /// Mirror image with reversed orientation, `A ↦ -Aᵀ`.
    pub fn mirror(&self) -> Self {
        SeifertMatrix {
            a: self.a.transpose().scaled(&BigInt::from(-1)),
        }
    }

    pub fn is_nonsingular(&self) -> bool {
        !self.a.det().expect("square").is_zero()
    }

    /// Text form: one whitespace-separated row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.dim() {
            let row: Vec<String> = self.a.row(r).iter().map(ToString::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Whether the Alexander polynomials are coprime in ℚ[t, t⁻¹].
pub fn alexander_coprime(s1: &SeifertMatrix, s2: &SeifertMatrix) -> bool {
    let f = s1.alexander().0.laurent_normalized().to_rat();
    let g = s2.alexander().0.laurent_normalized().to_rat();
    poly_gcd(&f, &g).is_unit()
}

impl FromStr for SeifertMatrix {
    type Err = Error;

    /// Lines starting with `#` and blank lines are ignored; every other line
    /// is a row of whitespace-separated integers.
    fn from_str(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    parse_int(tok).ok_or_else(|| Error::Parse {
                        line: idx + 1,
                        msg: format!("not an integer: {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("expected {} entries, found {}", first.len(), row.len()),
                    });
                }
            }
            rows.push(row);
        }
        SeifertMatrix::validate(IntMatrix::from_rows(&rows))
    }
}

// accepts the unicode minus sign as well as '-'
fn parse_int(tok: &str) -> Option<BigInt> {
    let normalized = tok.replace('\u{2212}', "-");
    normalized.parse().ok()
}

/// Lagrange interpolation through integer points; the result must be integral.
fn interpolate(points: &[(BigInt, BigInt)]) -> IntPoly {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.clone());
            }
            basis = next;
            denom *= BigRational::from_integer(xi - xj);
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    IntPoly::new(
        acc.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral interpolant");
                c.to_integer()
            })
            .collect(),
    )
}
