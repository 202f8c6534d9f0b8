//! Finite abelian groups in invariant-factor form.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Default cap on `|E|` for anything that enumerates group elements.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// `ℤ/d₁ ⊕ ... ⊕ ℤ/d_r` with `d_i ≥ 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FiniteAbelianGroup {
    factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    /// Drops factors equal to 1 and checks the divisibility chain.
    pub fn new(factors: Vec<BigInt>) -> Result<Self> {
        let factors: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        if let Some(bad) = factors.iter().find(|d| *d < &BigInt::from(2)) {
            return Err(Error::InvalidArgument(format!(
                "invariant factor {bad} must be at least 2"
            )));
        }
        if factors.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidArgument(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![BigInt::from(n)]).expect("n >= 1")
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Number of invariant factors divisible by `p`.
    pub fn p_rank(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.factors.iter().filter(|d| d.is_multiple_of(&p)).count()
    }

    /// Direct sum, re-normalized to invariant factors.
    pub fn direct_sum(&self, other: &FiniteAbelianGroup) -> FiniteAbelianGroup {
        let diag: Vec<BigInt> = self.factors.iter().chain(&other.factors).cloned().collect();
        let mut m = crate::exactalg::IntMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        let s = crate::exactalg::snf(&m);
        FiniteAbelianGroup::new(s.diag).expect("snf output is a chain")
    }

    /// Element-level view, available when `|E| ≤ bound`.
    pub fn small(&self, bound: u64) -> Result<SmallGroup> {
        let order = self.order();
        match order.to_u64() {
            Some(o) if o <= bound => Ok(SmallGroup::new(
                self.factors.iter().map(|d| d.to_u64().unwrap()).collect(),
            )),
            _ => Err(Error::GroupTooLarge {
                order: order.to_string(),
                bound,
            }),
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finite abelian group small enough to index its elements.
///
/// Elements are numbered in mixed radix with the first coordinate most
/// significant, so for cyclic groups the index is the residue itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGroup {
    factors: Vec<u64>,
    order: usize,
}

impl SmallGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        let order = factors.iter().product::<u64>() as usize;
        SmallGroup { factors, order }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index_of(&self, coords: &[u64]) -> usize {
        assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &d)| acc * d as usize + (c % d) as usize)
    }

    pub fn coords(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (index % d as usize) as u64;
            index /= d as usize;
        }
        out
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<u64> = ca
            .iter()
            .zip(&cb)
            .zip(&self.factors)
            .map(|((x, y), d)| (x + y) % d)
            .collect();
        self.index_of(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(x, d)| (d - x) % d)
            .collect();
        self.index_of(&c)
    }

    pub fn scale(&self, a: usize, k: u64) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((x as u128 * k as u128) % d as u128) as u64)
            .collect();
        self.index_of(&c)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / x.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut members: BTreeSet<usize> = BTreeSet::from([0]);
        for &g in gens {
            if members.contains(&g) {
                continue;
            }
            let base: Vec<usize> = members.iter().copied().collect();
            let mut shift = g;
            while !members.contains(&shift) {
                for &b in &base {
                    members.insert(self.add(b, shift));
                }
                shift = self.add(shift, g);
            }
        }
        members.into_iter().collect()
    }

    /// `<sub, x>` for a subgroup `sub` given as sorted indices.
    pub fn extend(&self, sub: &[usize], x: usize) -> Vec<usize> {
        let mut members: BTreeSet<usize> = sub.iter().copied().collect();
        let mut shift = x;
        while !members.contains(&shift) {
            for &b in sub {
                members.insert(self.add(b, shift));
            }
            shift = self.add(shift, x);
        }
        members.into_iter().collect()
    }

    /// Every subgroup of order exactly `m`, each as sorted element indices,
    /// listed in lexicographic order.
    pub fn subgroups_of_order(&self, m: usize) -> Vec<Vec<usize>> {
        if m == 0 || self.order % m != 0 {
            return vec![];
        }
        let candidates: Vec<usize> = (1..self.order)
            .filter(|&a| m % self.element_order(a) as usize == 0)
            .collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier = vec![vec![0usize]];
        if m == 1 {
            return frontier;
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for sub in &frontier {
                for &x in &candidates {
                    if sub.binary_search(&x).is_ok() {
                        continue;
                    }
                    let grown = self.extend(sub, x);
                    if m % grown.len() != 0 {
                        continue;
                    }
                    if grown.len() == m {
                        found.insert(grown);
                    } else if seen.insert(grown.clone()) {
                        next.push(grown);
                    }
                }
            }
            frontier = next;
        }
        found.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(f.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(g(&[1, 9]).factors(), &[BigInt::from(9)]);
        assert!(FiniteAbelianGroup::new(vec![BigInt::from(2), BigInt::from(3)]).is_err());
        assert!(FiniteAbelianGroup::new(vec![BigInt::from(0)]).is_err());
        assert_eq!(g(&[3, 3]).order(), BigInt::from(9));
        assert_eq!(g(&[]).to_string(), "0");
        assert_eq!(g(&[3, 9]).to_string(), "Z/3 + Z/9");
    }

    #[test]
    fn direct_sum_normalizes() {
        assert_eq!(g(&[2]).direct_sum(&g(&[3])), g(&[6]));
        assert_eq!(g(&[3]).direct_sum(&g(&[3])), g(&[3, 3]));
        assert_eq!(g(&[4]).direct_sum(&g(&[6])), g(&[2, 12]));
    }

    #[test]
    fn indexing() {
        let s = g(&[3, 6]).small(100).unwrap();
        for i in 0..s.order() {
            assert_eq!(s.index_of(&s.coords(i)), i);
            assert_eq!(s.add(i, s.neg(i)), 0);
        }
        assert_eq!(s.element_order(s.index_of(&[1, 1])), 6);
        assert_eq!(s.element_order(s.index_of(&[1, 2])), 3);
        assert!(g(&[1000, 1000]).small(1000).is_err());
    }

    #[test]
    fn subgroup_counts() {
        let c9 = g(&[9]).small(100).unwrap();
        assert_eq!(c9.subgroups_of_order(3), vec![vec![0, 3, 6]]);
        let e9 = g(&[3, 3]).small(100).unwrap();
        assert_eq!(e9.subgroups_of_order(3).len(), 4);
        assert_eq!(e9.subgroups_of_order(9).len(), 1);
        assert_eq!(e9.subgroups_of_order(1), vec![vec![0]]);
        // subgroups of order p^2 in (Z/p)^3: (p^3-1)(p^3-p)/((p^2-1)(p^2-p)) = 7 for p=2
        let e8 = g(&[2, 2, 2]).small(100).unwrap();
        assert_eq!(e8.subgroups_of_order(4).len(), 7);
        assert!(c9.subgroups_of_order(2).is_empty());
    }
}
