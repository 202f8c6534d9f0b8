//! Independent oracles and generators shared by the integration suites.
#![allow(dead_code)]

use concordance_core::exactalg::IntMatrix;
use concordance_core::SeifertMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut acc = BigInt::zero();
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `min |Σ n_i s_i|` over `0 ≤ n_i ≤ cap`, not all zero.
pub fn brute_min(sums: &[BigRational], cap: u64) -> BigRational {
    let len = sums.len();
    let mut n = vec![0u64; len];
    let mut best: Option<BigRational> = None;
    loop {
        let mut i = 0;
        while i < len && n[i] == cap {
            n[i] = 0;
            i += 1;
        }
        if i == len {
            return best.unwrap_or_else(BigRational::zero);
        }
        n[i] += 1;
        let v: BigRational = sums
            .iter()
            .zip(&n)
            .map(|(s, &k)| s * BigRational::from_integer(BigInt::from(k)))
            .sum::<BigRational>()
            .abs();
        if best.as_ref().map_or(true, |b| &v < b) {
            best = Some(v);
        }
    }
}

/// A product of random elementary operations and swaps on the identity.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n < 2 {
        return IntMatrix::from_rows(&m);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        match rng.gen_range(0..3) {
            0 => m.swap(i, j),
            1 => {
                for c in 0..n {
                    m[i][c] = -m[i][c];
                }
            }
            _ => {
                let k: i64 = rng.gen_range(-2..=2);
                for c in 0..n {
                    m[i][c] += k * m[j][c];
                }
            }
        }
    }
    IntMatrix::from_rows(&m)
}

/// `diag([[0,1],[0,0]], …) + S` with `S` symmetric: `Aᵀ - A` stays the
/// standard symplectic form, so the result is always valid.
pub fn random_seifert<R: Rng>(rng: &mut R, genus: usize, entry: i64) -> SeifertMatrix {
    let n = 2 * genus;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..genus {
        a[2 * i][2 * i + 1] = 1;
    }
    for i in 0..n {
        for j in i..n {
            let s = rng.gen_range(-entry..=entry);
            a[i][j] += s;
            if i != j {
                a[j][i] += s;
            }
        }
    }
    SeifertMatrix::validate(IntMatrix::from_rows(&a)).expect("symplectic part is standard")
}

pub fn congruent(s: &SeifertMatrix, p: &IntMatrix) -> SeifertMatrix {
    let a = &(&p.transpose() * s.matrix()) * p;
    SeifertMatrix::validate(a).expect("congruence preserves validity")
}

pub fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}
