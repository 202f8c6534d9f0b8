//! Necessary-condition check: some subgroup of square-root order on which
//! the barred correction terms vanish.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::cover::{homology, FiniteAbelianGroup};
use crate::dinv::{dbar_table, CorrectionTable};
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// `M` has `|M|² = |H₁|` and `d̄` vanishes on it. Not a sliceness proof.
    Passes { witness: Vec<usize> },
    /// `|H₁|` is not a square, or no subgroup has its square root as order.
    NoSquareOrderSubgroup { order: BigInt },
    /// Every candidate subgroup, with the `d̄` values on its elements.
    NoVanishingSubgroup { evidence: Vec<(Vec<usize>, Vec<BigRational>)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// `H₁(Σⁿ(K))`; subgroup elements are indices in its `SmallGroup` order.
    pub group: FiniteAbelianGroup,
    pub outcome: Outcome,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        !matches!(self.outcome, Outcome::Passes { .. })
    }

    pub fn name(&self) -> &'static str {
        match self.outcome {
            Outcome::Passes { .. } => "Passes",
            Outcome::NoSquareOrderSubgroup { .. } => "Obstructed(NoSquareOrderSubgroup)",
            Outcome::NoVanishingSubgroup { .. } => "Obstructed(NoVanishingSubgroup)",
        }
    }
}

/// Looks for `M ⊂ H₁(Σⁿ(K))` with `|M|² = |H₁|` and `d̄ = 0` on `M`.
///
/// Without `table`, only twist knots with `n = 2` are supported. A supplied
/// table is barred first and must live on the same invariant factors.
pub fn theorem1_verdict(
    s: &SeifertMatrix,
    n: u64,
    table: Option<&CorrectionTable>,
    bound: u64,
) -> Result<Verdict> {
    let group = homology(s, n)?.group;
    let order = group.order();
    let root = order.sqrt();
    if &root * &root != order {
        return Ok(Verdict {
            group,
            outcome: Outcome::NoSquareOrderSubgroup { order },
        });
    }
    if order.is_one() {
        return Ok(Verdict {
            group,
            outcome: Outcome::Passes { witness: vec![0] },
        });
    }
    let table = match table {
        Some(t) => {
            if t.group() != &group {
                return Err(Error::Table(format!(
                    "table is defined on {}, homology is {}",
                    t.group(),
                    group
                )));
            }
            t.bar()
        }
        None => match (s.as_twist(), n) {
            (Some(k), 2) => dbar_table(k)?,
            _ => return Err(Error::MissingTable),
        },
    };
    debug_assert_eq!(table.group(), &group);
    let small = group.small(bound)?;
    let m = root.to_usize().expect("bounded by the group order");
    let candidates = small.subgroups_of_order(m);
    if candidates.is_empty() {
        return Ok(Verdict {
            group,
            outcome: Outcome::NoSquareOrderSubgroup { order },
        });
    }
    let mut evidence = Vec::with_capacity(candidates.len());
    for sub in candidates {
        let values: Vec<BigRational> = sub.iter().map(|&i| table.value(i).clone()).collect();
        if values.iter().all(Zero::is_zero) {
            return Ok(Verdict {
                group,
                outcome: Outcome::Passes { witness: sub },
            });
        }
        evidence.push((sub, values));
    }
    Ok(Verdict {
        group,
        outcome: Outcome::NoVanishingSubgroup { evidence },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::DEFAULT_ENUMERATION_BOUND;
    use crate::rational::ratio;

    fn verdict(k: i64) -> Verdict {
        theorem1_verdict(&SeifertMatrix::twist(k), 2, None, DEFAULT_ENUMERATION_BOUND).unwrap()
    }

    #[test]
    fn twist_examples() {
        assert_eq!(verdict(2).outcome, Outcome::Passes { witness: vec![0, 3, 6] });
        assert_eq!(
            verdict(3).outcome,
            Outcome::NoSquareOrderSubgroup { order: 13.into() }
        );
        let zero = ratio(0, 1);
        let two = ratio(-2, 1);
        assert_eq!(
            verdict(6).outcome,
            Outcome::NoVanishingSubgroup {
                evidence: vec![(
                    vec![0, 5, 10, 15, 20],
                    vec![zero.clone(), zero.clone(), two.clone(), two, zero]
                )]
            }
        );
        assert!(!verdict(0).is_obstructed());
        let unknot = theorem1_verdict(&SeifertMatrix::unknot(), 3, None, 10).unwrap();
        assert_eq!(unknot.outcome, Outcome::Passes { witness: vec![0] });
    }

    #[test]
    fn tables() {
        let s = SeifertMatrix::block_sum(&[(&SeifertMatrix::twist(2), 1), (&SeifertMatrix::twist(6), 1)])
            .unwrap();
        assert!(matches!(
            theorem1_verdict(&s, 2, None, DEFAULT_ENUMERATION_BOUND),
            Err(Error::MissingTable)
        ));
        let t2 = SeifertMatrix::twist(2);
        let wrong = dbar_table(6).unwrap();
        assert!(matches!(
            theorem1_verdict(&t2, 2, Some(&wrong), DEFAULT_ENUMERATION_BOUND),
            Err(Error::Table(_))
        ));
        // shifting every value leaves the barred table, and so the verdict, unchanged
        let base = dbar_table(2).unwrap();
        let shifted = CorrectionTable::new(
            base.group().clone(),
            base.values().iter().map(|v| v + ratio(3, 4)).collect(),
        )
        .unwrap();
        assert_eq!(
            theorem1_verdict(&t2, 2, Some(&shifted), DEFAULT_ENUMERATION_BOUND).unwrap(),
            verdict(2)
        );
    }
}
