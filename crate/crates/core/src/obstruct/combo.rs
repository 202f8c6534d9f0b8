//! Order-`p` subgroups and the minimum over nonnegative combinations of
//! their value sums.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cover::{is_prime, FiniteAbelianGroup, SmallGroup};
use crate::dinv::CorrectionTable;
use crate::error::{Error, Result};

/// The order-`p` subgroups of a group, each as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupFamily {
    pub group: SmallGroup,
    pub p: u64,
    pub subgroups: Vec<Vec<usize>>,
}

impl SubgroupFamily {
    /// `S_H = Σ_{h ∈ H} φ(h)` for every subgroup `H`.
    pub fn sums(&self, table: &CorrectionTable) -> Vec<BigRational> {
        self.subgroups
            .iter()
            .map(|h| h.iter().map(|&i| table.value(i)).sum())
            .collect()
    }
}

/// Enumerates order-`p` subgroups of `e`, which must have at most `bound`
/// elements.
pub fn order_p_subgroups(e: &FiniteAbelianGroup, p: u64, bound: u64) -> Result<SubgroupFamily> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(order_p_subgroups_in(&e.small(bound)?, p))
}

pub(crate) fn order_p_subgroups_in(g: &SmallGroup, p: u64) -> SubgroupFamily {
    let mut covered = vec![false; g.order()];
    let mut subgroups = Vec::new();
    if g.order() as u64 % p == 0 {
        for a in 1..g.order() {
            if covered[a] || g.scale(a, p) != 0 {
                continue;
            }
            let h: BTreeSet<usize> = (0..p).map(|i| g.scale(a, i)).collect();
            for &x in &h {
                covered[x] = true;
            }
            subgroups.push(h.into_iter().collect::<Vec<_>>());
        }
    }
    subgroups.sort();
    SubgroupFamily {
        group: g.clone(),
        p,
        subgroups,
    }
}

/// `min |Σ n_H s_H|` over `n_H ≥ 0`, not all zero, with coefficients attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionValue {
    pub value: BigRational,
    pub coefficients: Vec<BigInt>,
}

impl ObstructionValue {
    fn zero_without_witness() -> Self {
        ObstructionValue {
            value: BigRational::zero(),
            coefficients: vec![],
        }
    }
}

/// Closed form: 0 if some `s_H` vanishes or two have opposite signs,
/// otherwise the smallest magnitude.
pub fn min_combo(sums: &[BigRational]) -> ObstructionValue {
    assert!(!sums.is_empty(), "min_combo needs at least one sum");
    let unit = |i: usize| {
        let mut c = vec![BigInt::zero(); sums.len()];
        c[i] = BigInt::one();
        c
    };
    if let Some(i) = sums.iter().position(Zero::is_zero) {
        return ObstructionValue {
            value: BigRational::zero(),
            coefficients: unit(i),
        };
    }
    let pos = sums.iter().position(Signed::is_positive);
    let neg = sums.iter().position(Signed::is_negative);
    if let (Some(i), Some(j)) = (pos, neg) {
        // n_i·(a/b) = n_j·(c/d)  with  n_i = c·b, n_j = a·d
        let (a, b) = (sums[i].numer(), sums[i].denom());
        let (c, d) = (-sums[j].numer(), sums[j].denom());
        let (ni, nj) = (&c * b, a * d);
        let g = ni.gcd(&nj);
        let mut coefficients = vec![BigInt::zero(); sums.len()];
        coefficients[i] = ni / &g;
        coefficients[j] = nj / &g;
        return ObstructionValue {
            value: BigRational::zero(),
            coefficients,
        };
    }
    let (i, best) = sums
        .iter()
        .map(Signed::abs)
        .enumerate()
        .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
        .unwrap();
    ObstructionValue {
        value: best,
        coefficients: unit(i),
    }
}

/// `min_combo` of the order-`p` subgroup sums of `table`, or 0 when `p`
/// does not divide the group order. On a barred table this is `D̄_p`.
pub fn d_obstruction(table: &CorrectionTable, p: u64) -> Result<ObstructionValue> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if table.small().order() as u64 % p != 0 {
        return Ok(ObstructionValue::zero_without_witness());
    }
    let family = order_p_subgroups_in(table.small(), p);
    Ok(min_combo(&family.sums(table)))
}

/// Evaluates `|Σ n_H s_H|` for a coefficient vector.
pub fn combo_value(sums: &[BigRational], coefficients: &[BigInt]) -> BigRational {
    sums.iter()
        .zip(coefficients)
        .map(|(s, n)| s * BigRational::from_integer(n.clone()))
        .sum::<BigRational>()
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dinv::dbar_table;
    use crate::rational::ratio;

    /// Exhaustive minimum with every `n_H ≤ cap`.
    fn min_combo_brute(sums: &[BigRational], cap: u64) -> BigRational {
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
                break;
            }
            n[i] += 1;
            let coeffs: Vec<BigInt> = n.iter().map(|&x| BigInt::from(x)).collect();
            let v = combo_value(sums, &coeffs);
            if best.as_ref().is_none_or(|b| &v < b) {
                best = Some(v);
            }
        }
        best.unwrap_or_else(BigRational::zero)
    }

    fn group(factors: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(factors.iter().map(|&d| BigInt::from(d)).collect()).unwrap()
    }

    #[test]
    fn subgroup_examples() {
        let z9 = order_p_subgroups(&group(&[9]), 3, 1000).unwrap();
        assert_eq!(z9.subgroups, vec![vec![0, 3, 6]]);
        assert_eq!(order_p_subgroups(&group(&[3, 3]), 3, 1000).unwrap().subgroups.len(), 4);
        assert!(order_p_subgroups(&group(&[5]), 3, 1000).unwrap().subgroups.is_empty());
        assert_eq!(order_p_subgroups(&group(&[2, 4, 8]), 2, 1000).unwrap().subgroups.len(), 7);
        assert!(matches!(
            order_p_subgroups(&group(&[9]), 4, 1000),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            order_p_subgroups(&group(&[1009, 1009]), 1009, 1_000_000),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn combo_examples() {
        assert_eq!(min_combo(&[ratio(1, 2)]).value, ratio(1, 2));
        let mixed = [ratio(1, 3), ratio(-1, 2)];
        let v = min_combo(&mixed);
        assert!(v.value.is_zero());
        assert_eq!(v.coefficients, vec![BigInt::from(3), BigInt::from(2)]);
        assert!(combo_value(&mixed, &v.coefficients).is_zero());
        assert_eq!(min_combo(&[ratio(2, 9), ratio(5, 9)]).value, ratio(2, 9));
        assert_eq!(min_combo_brute(&[ratio(2, 9), ratio(5, 9)], 12), ratio(2, 9));
        assert_eq!(min_combo_brute(&mixed, 12), ratio(0, 1));
        assert_eq!(min_combo(&[ratio(-3, 4), ratio(0, 1)]).value, ratio(0, 1));
    }

    #[test]
    fn obstruction_examples() {
        let at = |k: i64, p: u64| d_obstruction(&dbar_table(k).unwrap(), p).unwrap().value;
        assert_eq!(at(2, 3), ratio(0, 1));
        assert_eq!(at(1, 5), ratio(0, 1));
        assert_eq!(at(3, 13), ratio(4, 1));
        assert_eq!(at(6, 5), ratio(4, 1));
        assert_eq!(at(3, 7), ratio(0, 1));
        assert!(matches!(
            d_obstruction(&dbar_table(3).unwrap(), 6),
            Err(Error::NotPrime(6))
        ));
    }
}
