//! Dense univariate polynomials over ℤ and ℚ in the variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with integer coefficients, stored low-to-high degree.
///
/// The stored vector never ends in a zero coefficient, so the zero polynomial
/// is the empty vector and `degree == len - 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t^n - 1`.
    pub fn cyclotomic_product(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    /// `1 + t + ... + t^(m-1)`.
    pub fn all_ones(m: usize) -> Self {
        Self::new(vec![BigInt::one(); m])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// `t^deg · f(1/t)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Divides out the largest power of `t`, so the constant term is nonzero.
    /// This is the normal form for units `±t^k` of the Laurent ring.
    pub fn laurent_normalized(&self) -> Self {
        let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        Self::new(self.coeffs[shift..].to_vec())
    }

    /// Whether `self = ±t^k · other` for some integer `k`.
    pub fn equals_up_to_unit(&self, other: &IntPoly) -> bool {
        let a = self.laurent_normalized();
        let b = other.laurent_normalized();
        a == b || a == -b
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division of every coefficient by `c`. Panics if inexact.
    pub fn div_exact(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact coefficient division");
                    q
                })
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(divisor)^(deg self - deg divisor + 1) · self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return IntPoly::zero();
        };
        if sd < dd {
            return self.clone();
        }
        // one elimination step per degree from sd down to dd, each scaling by lc
        for top in (dd..=sd).rev() {
            let lead = std::mem::take(&mut r[top]);
            r.truncate(top);
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in divisor.coeffs[..dd].iter().enumerate() {
                r[top - dd + i] -= &lead * dc;
            }
        }
        IntPoly::new(r)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

fn write_terms<T: fmt::Display + Signed + Zero>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    is_one: impl Fn(&T) -> bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let show_coeff = deg == 0 || !is_one(&mag);
        if show_coeff {
            write!(f, "{mag}")?;
        }
        match deg {
            0 => {}
            1 => write!(f, "t")?,
            _ => write!(f, "t^{deg}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, One::is_one)
    }
}

/// Polynomial with rational coefficients, same normalization as [`IntPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => Self::new(self.coeffs.iter().map(|c| c / lc).collect()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&d| d >= dd) else {
            return (RatPoly::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for top in (dd..=sd).rev() {
            let q = &rem[top] / lc;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &q * c;
                }
            }
            quot[top - dd] = q;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, One::is_one)
    }
}

/// Monic gcd over ℚ; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}
