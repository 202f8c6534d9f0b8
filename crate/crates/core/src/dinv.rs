//! Correction terms of the lens spaces `L(4k+1, 2)` that double branch cover
//! the twist knots, plus the general lens-space recursion and the relabeling
//! that reconciles the two.
//!
//! Tables are keyed by `j`, the label of `s₀ + j`; the recursion's own
//! spin^c numbering never leaves this module except through [`lens_table`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cover::{FiniteAbelianGroup, SmallGroup, DEFAULT_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::rational;

/// A rational-valued function on every element of a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionTable {
    group: FiniteAbelianGroup,
    small: SmallGroup,
    values: Vec<BigRational>,
}

impl CorrectionTable {
    /// `values[i]` belongs to the element with index `i` in [`SmallGroup`] order.
    pub fn new(group: FiniteAbelianGroup, values: Vec<BigRational>) -> Result<Self> {
        let small = group.small(DEFAULT_ENUMERATION_BOUND)?;
        if values.len() != small.order() {
            return Err(Error::Table(format!(
                "{} values for a group of order {}",
                values.len(),
                small.order()
            )));
        }
        Ok(CorrectionTable {
            group,
            small,
            values,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn small(&self) -> &SmallGroup {
        &self.small
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, index: usize) -> &BigRational {
        &self.values[index]
    }

    /// `φ̄(e) = φ(e) - φ(0)`.
    pub fn bar(&self) -> CorrectionTable {
        let base = self.values[0].clone();
        CorrectionTable {
            group: self.group.clone(),
            small: self.small.clone(),
            values: self.values.iter().map(|v| v - &base).collect(),
        }
    }

    /// `φ(m) = φ(-m)` for every element.
    pub fn is_conjugation_symmetric(&self) -> bool {
        (0..self.values.len()).all(|i| self.values[i] == self.values[self.small.neg(i)])
    }

    /// JSON label of an element: a bare integer for cyclic groups, otherwise
    /// the coordinate array.
    pub fn label(&self, index: usize) -> Value {
        if self.group.is_cyclic() {
            json!(index)
        } else {
            json!(self.small.coords(index))
        }
    }

    /// `{"group": [factors], "values": [[label, "num/den"], ...]}`.
    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .group
            .factors()
            .iter()
            .map(|d| json!(d.to_u64().unwrap()))
            .collect();
        let values: Vec<Value> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| json!([self.label(i), rational::format(v)]))
            .collect();
        json!({ "group": factors, "values": values })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Table(format!("invalid JSON: {e}")))?;
        let factors = v
            .get("group")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Table("missing \"group\" array".into()))?
            .iter()
            .map(|f| {
                f.as_u64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Table(format!("bad invariant factor {f}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let group = FiniteAbelianGroup::new(factors).map_err(|e| Error::Table(e.to_string()))?;
        let small = group.small(DEFAULT_ENUMERATION_BOUND)?;
        let entries = v
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Table("missing \"values\" array".into()))?;
        let mut values: Vec<Option<BigRational>> = vec![None; small.order()];
        for e in entries {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Table(format!("entry {e} is not [label, value]")))?;
            let index = parse_label(&small, &pair[0])?;
            let value = pair[1]
                .as_str()
                .and_then(rational::parse)
                .or_else(|| pair[1].as_i64().map(|x| BigRational::from_integer(x.into())))
                .ok_or_else(|| Error::Table(format!("bad value {}", pair[1])))?;
            if values[index].replace(value).is_some() {
                return Err(Error::Table(format!("duplicate label {}", pair[0])));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Table(format!("no value for element {:?}", small.coords(i)))))
            .collect::<Result<Vec<_>>>()?;
        CorrectionTable::new(group, values)
    }
}

fn parse_label(small: &SmallGroup, label: &Value) -> Result<usize> {
    let bad = || Error::Table(format!("bad label {label}"));
    let coords: Vec<u64> = match label {
        Value::Number(n) if small.factors().len() <= 1 => vec![n.as_u64().ok_or_else(bad)?],
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_u64().ok_or_else(bad))
            .collect::<Result<_>>()?,
        _ => return Err(bad()),
    };
    if small.factors().is_empty() {
        return if coords.iter().all(|&c| c == 0) { Ok(0) } else { Err(bad()) };
    }
    if coords.len() != small.factors().len()
        || coords.iter().zip(small.factors()).any(|(c, d)| c >= d)
    {
        return Err(bad());
    }
    Ok(small.index_of(&coords))
}

/// Closed form for `d(L(4k+1, 2), s₀ + j)`.
///
/// For `0 ≤ j ≤ 2k` this is `1/4 - j²/(8k+2) ± 1/4` (plus for odd `j`);
/// larger `j` use `d(j) = d(4k+1-j)`.
pub fn d_twist(k: i64, j: i64) -> Result<BigRational> {
    if k < 0 {
        return Err(Error::NegativeK(k));
    }
    let n = 4 * k + 1;
    let mut j = j.rem_euclid(n);
    if j > 2 * k {
        j = n - j;
    }
    let parity = if j % 2 == 1 { 1 } else { -1 };
    Ok(rational::ratio(1, 4) - rational::ratio(j * j, 8 * k + 2) + rational::ratio(parity, 4))
}

/// Lens space parameters with `gcd(p, q) = 1` and `0 ≤ q < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LensParams {
    p: i64,
    q: i64,
}

impl LensParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidArgument(format!("lens space order p = {p} < 1")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(LensParams {
            p,
            q: q.rem_euclid(p),
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// `d(L(p, q), i)` by the recursion
/// `d(p, q, i) = ((2i + 1 - p - q)² - pq) / 4pq - d(q, p mod q, i mod q)`,
/// `d(1, 0, 0) = 0`.
pub fn d_lens(p: i64, q: i64, i: i64) -> Result<BigRational> {
    let params = LensParams::new(p, q)?;
    let (mut p, mut q) = (params.p, params.q);
    let mut i = i.rem_euclid(p);
    let mut acc = BigRational::zero();
    let mut sign = 1i64;
    while p > 1 {
        let num = BigInt::from(2 * i + 1 - p - q).pow(2) - BigInt::from(p) * q;
        let term = BigRational::new(num, BigInt::from(4) * p * q);
        if sign > 0 {
            acc += term;
        } else {
            acc -= term;
        }
        sign = -sign;
        (p, q, i) = (q, p % q, i % q);
    }
    Ok(acc)
}

/// `(ε, a, b)` with `ε · d_lens(4k+1, 2, a·j + b) = d_twist(k, j)` for all `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alignment {
    pub sign: i64,
    pub scale: i64,
    pub shift: i64,
}

impl Alignment {
    pub fn apply(&self, j: i64, modulus: i64) -> i64 {
        (self.scale * j + self.shift).rem_euclid(modulus)
    }
}

/// Searches signs, then shifts, then unit scales, in increasing order, and
/// returns the first relabeling that matches every value.
pub fn align(k: i64) -> Result<Alignment> {
    if k < 0 {
        return Err(Error::NegativeK(k));
    }
    let n = 4 * k + 1;
    let lens: Vec<BigRational> = (0..n).map(|i| d_lens(n, 2, i)).collect::<Result<_>>()?;
    let twist: Vec<BigRational> = (0..n).map(|j| d_twist(k, j)).collect::<Result<_>>()?;
    for sign in [1i64, -1] {
        let signed = |v: &BigRational| if sign > 0 { v.clone() } else { -v.clone() };
        for shift in 0..n {
            if signed(&lens[shift as usize]) != twist[0] {
                continue;
            }
            for scale in (1..n.max(2)).filter(|a| a.gcd(&n) == 1) {
                let cand = Alignment { sign, scale, shift };
                let ok = (0..n).all(|j| signed(&lens[cand.apply(j, n) as usize]) == twist[j as usize]);
                if ok {
                    return Ok(cand);
                }
            }
        }
    }
    Err(Error::NoAlignment(k))
}

/// `d̄(L_k, s₀ + j)` on `ℤ/(4k+1)`. Since `d(L_k, s₀) = 0`, this equals `d`.
pub fn dbar_table(k: i64) -> Result<CorrectionTable> {
    let n = 4 * k + 1;
    let values: Vec<BigRational> = (0..n.max(1)).map(|j| d_twist(k, j)).collect::<Result<_>>()?;
    assert!(values[0].is_zero(), "d(L_k, s0) must vanish");
    let group = FiniteAbelianGroup::cyclic(n as u64);
    CorrectionTable::new(group, values)
}

/// `d(L(p, q), i)` for every `i ∈ ℤ/p`, in the recursion's labels.
pub fn lens_table(p: i64, q: i64) -> Result<CorrectionTable> {
    let params = LensParams::new(p, q)?;
    let values = (0..params.p)
        .map(|i| d_lens(params.p, params.q, i))
        .collect::<Result<Vec<_>>>()?;
    CorrectionTable::new(FiniteAbelianGroup::cyclic(params.p as u64), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn closed_form_examples() {
        for k in [0i64, 1, 7, 40] {
            assert_eq!(d_twist(k, 0).unwrap(), ratio(0, 1));
        }
        assert_eq!(d_twist(1, 1).unwrap(), ratio(2, 5));
        assert_eq!(d_twist(2, 3).unwrap(), ratio(0, 1));
        assert_eq!(d_twist(2, 4).unwrap(), ratio(-8, 9));
        assert_eq!(d_twist(-1, 0), Err(Error::NegativeK(-1)));
    }

    #[test]
    fn lens_examples() {
        assert_eq!(d_lens(1, 0, 0).unwrap(), ratio(0, 1));
        assert_eq!(d_lens(2, 1, 0).unwrap(), ratio(1, 4));
        assert_eq!(d_lens(2, 1, 1).unwrap(), ratio(-1, 4));
        assert_eq!(d_lens(4, 2, 0), Err(Error::NotCoprime { p: 4, q: 2 }));

        let mut lens: Vec<BigRational> = (0..9).map(|i| -d_lens(9, 2, i).unwrap()).collect();
        let mut twist: Vec<BigRational> = (0..9).map(|j| d_twist(2, j).unwrap()).collect();
        lens.sort();
        twist.sort();
        assert_eq!(lens, twist);
    }

    #[test]
    fn lens_denominators_divide_4pq() {
        for (p, q) in [(9i64, 2i64), (13, 5), (21, 8), (401, 2)] {
            for i in 0..p {
                let d = d_lens(p, q, i).unwrap();
                assert!((BigInt::from(4 * p * q) % d.denom()).is_zero());
            }
        }
    }

    #[test]
    fn alignment_examples() {
        for k in [1i64, 2, 3] {
            let a = align(k).unwrap();
            let n = 4 * k + 1;
            for j in 0..n {
                let l = d_lens(n, 2, a.apply(j, n)).unwrap();
                let l = if a.sign > 0 { l } else { -l };
                assert_eq!(l, d_twist(k, j).unwrap());
            }
        }
        let a = align(0).unwrap();
        assert_eq!(a, Alignment { sign: 1, scale: 1, shift: 0 });
    }

    #[test]
    fn table_examples() {
        let t = dbar_table(2).unwrap();
        let expect: Vec<BigRational> = [(0, 1), (4, 9), (-2, 9), (0, 1), (-8, 9), (-8, 9), (0, 1), (-2, 9), (4, 9)]
            .iter()
            .map(|&(n, d)| ratio(n, d))
            .collect();
        assert_eq!(t.values(), &expect[..]);
        assert_eq!(dbar_table(0).unwrap().values(), &[ratio(0, 1)]);
        let t1: Vec<BigRational> = [(0, 1), (2, 5), (-2, 5), (-2, 5), (2, 5)]
            .iter()
            .map(|&(n, d)| ratio(n, d))
            .collect();
        assert_eq!(dbar_table(1).unwrap().values(), &t1[..]);
        assert!(dbar_table(-3).is_err());
        assert!(t.is_conjugation_symmetric());
        assert_eq!(t.bar(), t);
    }

    #[test]
    fn json_round_trip() {
        let t = dbar_table(2).unwrap();
        let text = t.to_json().to_string();
        assert!(text.contains("\"-8/9\""));
        assert_eq!(CorrectionTable::from_json(&text).unwrap(), t);

        let g = FiniteAbelianGroup::new(vec![3.into(), 3.into()]).unwrap();
        let vals: Vec<BigRational> = (0..9).map(|i| ratio(i, 3)).collect();
        let t = CorrectionTable::new(g, vals).unwrap();
        let text = t.to_json().to_string();
        assert!(text.contains("[[0,0],\"0\"]"));
        assert_eq!(CorrectionTable::from_json(&text).unwrap(), t);
    }

    #[test]
    fn json_rejects_partial_tables() {
        let missing = r#"{"group":[3],"values":[[0,"0"],[1,"1/3"]]}"#;
        assert!(matches!(CorrectionTable::from_json(missing), Err(Error::Table(_))));
        let dup = r#"{"group":[2],"values":[[0,"0"],[0,"1"],[1,"1"]]}"#;
        assert!(matches!(CorrectionTable::from_json(dup), Err(Error::Table(_))));
        let range = r#"{"group":[2],"values":[[0,"0"],[2,"1"]]}"#;
        assert!(matches!(CorrectionTable::from_json(range), Err(Error::Table(_))));
        let trivial = r#"{"group":[],"values":[[0,"5/2"]]}"#;
        assert_eq!(CorrectionTable::from_json(trivial).unwrap().values(), &[ratio(5, 2)]);
    }
}
