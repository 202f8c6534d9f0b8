//! Metabolizers of Seifert forms: validation, bounded search, and splitting
//! along a block decomposition.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::lattice::{is_primitive_basis, left_kernel, row_hnf};
use crate::exactalg::IntMatrix;
use crate::seifert::{alexander_coprime, SeifertMatrix};

/// A half-rank direct summand `Z ⊂ ℤ^{2g}` with `θ(Z, Z) = 0`, stored as the
/// rows of a `g × 2g` matrix in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Metabolizer {
    basis: IntMatrix,
}

impl Metabolizer {
    /// Validates `basis` (one vector per row) against the form of `s`.
    pub fn new(s: &SeifertMatrix, basis: IntMatrix) -> Result<Self> {
        check(s, &basis)?;
        Ok(Metabolizer {
            basis: row_hnf(&basis),
        })
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Re-checks both invariants against a (possibly different) form.
    pub fn check_against(&self, s: &SeifertMatrix) -> Result<()> {
        check(s, &self.basis)
    }
}

fn check(s: &SeifertMatrix, basis: &IntMatrix) -> Result<()> {
    let g = s.genus();
    if basis.cols() != s.dim() {
        return Err(Error::NotMetabolizer(format!(
            "vectors have length {}, form has rank {}",
            basis.cols(),
            s.dim()
        )));
    }
    if basis.rows() != g {
        return Err(Error::NotMetabolizer(format!(
            "{} basis vectors, need {g}",
            basis.rows()
        )));
    }
    let rows = basis.to_rows();
    for x in &rows {
        for y in &rows {
            if !s.theta(x, y).is_zero() {
                return Err(Error::NotMetabolizer("form does not vanish on the span".into()));
            }
        }
    }
    if !is_primitive_basis(basis) {
        return Err(Error::NotMetabolizer("span is not a direct summand".into()));
    }
    Ok(())
}

/// All metabolizers having a basis with entries in `[-bound, bound]`,
/// deduplicated by span and sorted by their Hermite basis.
pub fn metabolizer_search(s: &SeifertMatrix, bound: u64) -> Result<Vec<Metabolizer>> {
    let g = s.genus();
    if g == 0 {
        return Ok(vec![Metabolizer {
            basis: IntMatrix::zeros(0, 0),
        }]);
    }
    let form = SmallForm::new(s)?;
    let bound = i64::try_from(bound).map_err(|_| Error::InvalidArgument("bound too large".into()))?;
    let isotropic = form.isotropic_vectors(bound);

    let mut found: BTreeSet<Metabolizer> = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(g);
    extend_clique(&form, &isotropic, g, 0, &mut chosen, &mut found);
    for m in &found {
        debug_assert!(m.check_against(s).is_ok());
    }
    Ok(found.into_iter().collect())
}

fn extend_clique(
    form: &SmallForm,
    vecs: &[Vec<i64>],
    g: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    found: &mut BTreeSet<Metabolizer>,
) {
    if chosen.len() == g {
        let rows: Vec<Vec<BigInt>> = chosen
            .iter()
            .map(|&i| vecs[i].iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        found.insert(Metabolizer {
            basis: row_hnf(&IntMatrix::from_rows(&rows)),
        });
        return;
    }
    for i in start..vecs.len() {
        let v = &vecs[i];
        if !chosen
            .iter()
            .all(|&c| form.theta(&vecs[c], v) == 0 && form.theta(v, &vecs[c]) == 0)
        {
            continue;
        }
        chosen.push(i);
        // a partial basis of a direct summand is itself primitive
        if chosen.len() == 1 || is_primitive_basis(&rows_of(vecs, chosen)) {
            extend_clique(form, vecs, g, i + 1, chosen, found);
        }
        chosen.pop();
    }
}

fn rows_of(vecs: &[Vec<i64>], idx: &[usize]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = idx.iter().map(|&i| vecs[i].clone()).collect();
    IntMatrix::from_rows(&rows)
}

/// Machine-integer copy of a Seifert form for enumeration.
struct SmallForm {
    dim: usize,
    a: Vec<i64>,
}

impl SmallForm {
    fn new(s: &SeifertMatrix) -> Result<Self> {
        let m = s.matrix();
        let a = m
            .to_rows()
            .iter()
            .flatten()
            .map(|x| {
                x.to_i64()
                    .ok_or_else(|| Error::InvalidArgument("Seifert entries too large to search".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SmallForm { dim: m.rows(), a })
    }

    fn theta(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0 {
                continue;
            }
            let row = &self.a[r * self.dim..(r + 1) * self.dim];
            let dot: i128 = row.iter().zip(y).map(|(&a, &b)| a as i128 * b as i128).sum();
            acc += xr as i128 * dot;
        }
        acc
    }

    /// Primitive vectors with `θ(v, v) = 0`, first nonzero entry positive.
    fn isotropic_vectors(&self, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut v = vec![-bound; self.dim];
        loop {
            let lead = v.iter().find(|&&x| x != 0);
            if lead.is_some_and(|&x| x > 0)
                && v.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1
                && self.theta(&v, &v) == 0
            {
                out.push(v.clone());
            }
            // odometer, last coordinate fastest
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if v[i] < bound {
                    v[i] += 1;
                    break;
                }
                v[i] = -bound;
            }
        }
    }
}

/// Intersects a metabolizer of `s1 ⊕ s2` with each summand.
///
/// Requires coprime Alexander polynomials and at least one nonsingular form.
/// Each intersection is re-validated as a metabolizer of its factor.
pub fn split_metabolizer(
    s1: &SeifertMatrix,
    s2: &SeifertMatrix,
    z: &Metabolizer,
) -> Result<(Metabolizer, Metabolizer)> {
    if !alexander_coprime(s1, s2) {
        return Err(Error::HypothesisViolation(
            "Alexander polynomials are not coprime".into(),
        ));
    }
    if !s1.is_nonsingular() && !s2.is_nonsingular() {
        return Err(Error::HypothesisViolation("both Seifert forms are singular".into()));
    }
    let sum = SeifertMatrix::block_sum(&[(s1, 1), (s2, 1)])?;
    z.check_against(&sum)?;

    let (d1, d2) = (s1.dim(), s2.dim());
    let b = z.basis();
    let rows = b.rows();
    let first = b.submatrix(0..rows, 0..d1);
    let second = b.submatrix(0..rows, d1..d1 + d2);

    // Z ∩ (ℤ^{d1} ⊕ 0): combinations whose second block vanishes
    let in_first = &left_kernel(&second) * b;
    let in_second = &left_kernel(&first) * b;
    let z1 = in_first.submatrix(0..in_first.rows(), 0..d1);
    let z2 = in_second.submatrix(0..in_second.rows(), d1..d1 + d2);
    Ok((Metabolizer::new(s1, z1)?, Metabolizer::new(s2, z2)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[Vec<i64>]) -> IntMatrix {
        row_hnf(&IntMatrix::from_rows(rows))
    }

    fn spans(ms: &[Metabolizer]) -> BTreeSet<IntMatrix> {
        ms.iter().map(|m| m.basis().clone()).collect()
    }

    #[test]
    fn search_examples() {
        let t2 = metabolizer_search(&SeifertMatrix::twist(2), 5).unwrap();
        assert_eq!(
            spans(&t2),
            BTreeSet::from([span(&[vec![2, 1]]), span(&[vec![1, -1]])])
        );
        assert!(metabolizer_search(&SeifertMatrix::twist(1), 20).unwrap().is_empty());
        let t6 = metabolizer_search(&SeifertMatrix::twist(6), 5).unwrap();
        assert_eq!(
            spans(&t6),
            BTreeSet::from([span(&[vec![3, 1]]), span(&[vec![2, -1]])])
        );
        let u = metabolizer_search(&SeifertMatrix::unknot(), 3).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].rank(), 0);
    }

    #[test]
    fn search_genus_two() {
        let sum = SeifertMatrix::block_sum(&[(&SeifertMatrix::twist(2), 1), (&SeifertMatrix::twist(6), 1)])
            .unwrap();
        let found = metabolizer_search(&sum, 3).unwrap();
        // by the splitting lemma only the four product metabolizers exist
        let expect: BTreeSet<IntMatrix> = [
            (vec![2, 1, 0, 0], vec![0, 0, 3, 1]),
            (vec![2, 1, 0, 0], vec![0, 0, 2, -1]),
            (vec![1, -1, 0, 0], vec![0, 0, 3, 1]),
            (vec![1, -1, 0, 0], vec![0, 0, 2, -1]),
        ]
        .into_iter()
        .map(|(a, b)| span(&[a, b]))
        .collect();
        assert_eq!(spans(&found), expect);
    }

    #[test]
    fn validation() {
        let t2 = SeifertMatrix::twist(2);
        assert!(Metabolizer::new(&t2, IntMatrix::from_rows(&[vec![2i64, 1]])).is_ok());
        assert!(matches!(
            Metabolizer::new(&t2, IntMatrix::from_rows(&[vec![4i64, 2]])),
            Err(Error::NotMetabolizer(_))
        ));
        assert!(matches!(
            Metabolizer::new(&t2, IntMatrix::from_rows(&[vec![1i64, 0]])),
            Err(Error::NotMetabolizer(_))
        ));
        assert!(matches!(
            Metabolizer::new(&t2, IntMatrix::from_rows(&[vec![2i64, 1], vec![1, -1]])),
            Err(Error::NotMetabolizer(_))
        ));
    }

    #[test]
    fn split_examples() {
        let (t2, t6) = (SeifertMatrix::twist(2), SeifertMatrix::twist(6));
        let sum = SeifertMatrix::block_sum(&[(&t2, 1), (&t6, 1)]).unwrap();
        let cases = [
            ([2i64, 1], [3i64, 1]),
            ([1, -1], [2, -1]),
        ];
        for (a, b) in cases {
            let z = Metabolizer::new(
                &sum,
                IntMatrix::from_rows(&[vec![a[0], a[1], 0, 0], vec![0, 0, b[0], b[1]]]),
            )
            .unwrap();
            let (z1, z2) = split_metabolizer(&t2, &t6, &z).unwrap();
            assert_eq!(z1.basis(), &span(&[a.to_vec()]));
            assert_eq!(z2.basis(), &span(&[b.to_vec()]));
        }
    }

    #[test]
    fn split_hypotheses() {
        let t2 = SeifertMatrix::twist(2);
        let sum = SeifertMatrix::block_sum(&[(&t2, 2)]).unwrap();
        let z = Metabolizer::new(
            &sum,
            IntMatrix::from_rows(&[vec![2i64, 1, 0, 0], vec![0, 0, 2, 1]]),
        )
        .unwrap();
        assert!(matches!(
            split_metabolizer(&t2, &t2, &z),
            Err(Error::HypothesisViolation(_))
        ));
    }
}
