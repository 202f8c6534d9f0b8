//! Bounded search for the primes `q` with `p | |H₁(Σ^{q^r}(K))|`, and the
//! banded all-ones determinant.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cover::{is_prime, order_fox};
use crate::error::{Error, Result};
use crate::exactalg::{resultant_subresultant, sylvester_matrix, IntMatrix, IntPoly};
use crate::seifert::SeifertMatrix;

/// Primes `q ≤ qmax` such that `p` divides the cover order for some
/// `q^r`, `r ≤ rmax`. An under-approximation outside those bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSet {
    pub p: u64,
    pub members: BTreeSet<u64>,
    pub qmax: u64,
    pub rmax: u32,
}

pub fn spk_enumerate(s: &SeifertMatrix, p: u64, qmax: u64, rmax: u32) -> Result<PrimeSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if qmax < 1 || rmax < 1 {
        return Err(Error::InvalidArgument("qmax and rmax must be at least 1".into()));
    }
    let pb = BigInt::from(p);
    let mut members = BTreeSet::new();
    for q in (2..=qmax).filter(|&q| is_prime(q)) {
        let mut n = 1u64;
        for _ in 0..rmax {
            n = n
                .checked_mul(q)
                .ok_or_else(|| Error::InvalidArgument(format!("{q}^{rmax} overflows")))?;
            if order_fox(s, n)?.is_multiple_of(&pb) {
                members.insert(q);
                break;
            }
        }
    }
    Ok(PrimeSet {
        p,
        members,
        qmax,
        rmax,
    })
}

/// `A(m, n)`: `n - 1` shifted rows of `m` ones over `m - 1` shifted rows of
/// `n` ones, i.e. the Sylvester matrix of `1 + … + t^{m-1}` and
/// `1 + … + t^{n-1}`.
pub fn lemma3_matrix(m: usize, n: usize) -> Result<IntMatrix> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument("m and n must be at least 2".into()));
    }
    sylvester_matrix(&IntPoly::all_ones(m), &IntPoly::all_ones(n))
}

/// `det A(m, n)`, checked against the subresultant computation of the
/// resultant of the two polynomials.
pub fn lemma3_det(m: usize, n: usize) -> Result<BigInt> {
    let det = lemma3_matrix(m, n)?.det()?;
    let res = resultant_subresultant(&IntPoly::all_ones(m), &IntPoly::all_ones(n))?;
    assert_eq!(det, res, "determinant and resultant disagree at ({m}, {n})");
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes(s: &SeifertMatrix, p: u64, qmax: u64, rmax: u32) -> Vec<u64> {
        spk_enumerate(s, p, qmax, rmax).unwrap().members.into_iter().collect()
    }

    #[test]
    fn spk_examples() {
        assert_eq!(primes(&SeifertMatrix::twist(2), 3, 20, 2), vec![2]);
        assert_eq!(primes(&SeifertMatrix::twist(1), 5, 10, 1), vec![2]);
        assert!(primes(&SeifertMatrix::unknot(), 7, 30, 3).is_empty());
        assert!(matches!(
            spk_enumerate(&SeifertMatrix::twist(1), 4, 10, 1),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn lemma3_examples() {
        assert_eq!(
            lemma3_matrix(2, 3).unwrap(),
            IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]])
        );
        assert_eq!(lemma3_det(2, 3).unwrap(), BigInt::from(1));
        assert_eq!(lemma3_det(4, 6).unwrap(), BigInt::from(0));
        for m in 2..8 {
            assert_eq!(lemma3_det(m, m).unwrap(), BigInt::from(0));
        }
        assert!(lemma3_det(1, 3).is_err());
    }
}
