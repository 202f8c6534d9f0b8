//! Resultants of integer polynomials.
//!
//! Two independent routes: the Sylvester determinant (Bareiss) and the
//! subresultant pseudo-remainder sequence. [`resultant`] picks the first for
//! small degrees and the second otherwise.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Largest degree routed through the Sylvester determinant.
pub const SYLVESTER_MAX_DEGREE: usize = 64;

/// Sylvester matrix: `deg g` shifted rows of `f` followed by `deg f` shifted
/// rows of `g`, leading coefficients first.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Result<IntMatrix> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    let size = m + n;
    let mut s = IntMatrix::zeros(size, size);
    for r in 0..n {
        for (i, c) in f.coeffs().iter().rev().enumerate() {
            s[(r, r + i)] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.coeffs().iter().rev().enumerate() {
            s[(n + r, r + i)] = c.clone();
        }
    }
    Ok(s)
}

pub fn resultant_sylvester(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    sylvester_matrix(f, g)?.det()
}

/// Subresultant PRS (Collins–Brown), exact over ℤ.
pub fn resultant_subresultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if df == 0 || dg == 0 {
        return Ok(constant_case(f, g));
    }
    let (ca, cb) = (f.content(), g.content());
    let mut a = f.div_exact(&ca);
    let mut b = g.div_exact(&cb);
    let t = num_traits::pow(ca, dg) * num_traits::pow(cb, df);
    let mut sign = BigInt::one();
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            sign = -sign;
        }
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let denom = &gg * num_traits::pow(h.clone(), delta);
        b = r.div_exact(&denom);
        gg = a.leading().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(gg.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let lb = b.leading().unwrap().clone();
            let h_final = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
            return Ok(sign * t * h_final);
        }
    }
}

fn constant_case(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if dg == 0 {
        num_traits::pow(g.coeff(0), df)
    } else {
        num_traits::pow(f.coeff(0), dg)
    }
}

/// `Res(f, g)`; both inputs must be nonzero.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if df.max(dg) <= SYLVESTER_MAX_DEGREE {
        resultant_sylvester(f, g)
    } else {
        resultant_subresultant(f, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        for route in [resultant_sylvester, resultant_subresultant] {
            assert_eq!(route(&p(&[-1, 1]), &p(&[1, 1])).unwrap(), BigInt::from(2));
            assert_eq!(route(&p(&[-1, 1]), &p(&[-1, 0, 1])).unwrap(), BigInt::zero());
            assert_eq!(route(&p(&[1, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn constants() {
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[-2])).unwrap(), BigInt::from(4));
        assert_eq!(resultant(&p(&[5]), &p(&[7])).unwrap(), BigInt::one());
        assert_eq!(
            resultant_subresultant(&p(&[5]), &p(&[7])).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(resultant(&IntPoly::zero(), &p(&[1, 1])), Err(Error::ZeroPolynomial));
        assert_eq!(
            resultant_subresultant(&p(&[1]), &IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn routes_agree_on_fox_orders() {
        // Res(t^n - 1, Δ_{T_2}) = ±(2^n - 1)^2
        let delta = p(&[-2, 5, -2]);
        for n in 1..=12usize {
            let tn = IntPoly::cyclotomic_product(n);
            let a = resultant_sylvester(&tn, &delta).unwrap();
            let b = resultant_subresultant(&tn, &delta).unwrap();
            assert_eq!(a, b, "n = {n}");
            let expect = BigInt::from((1i64 << n) - 1).pow(2);
            assert_eq!(num_traits::Signed::abs(&a), expect);
        }
    }

    #[test]
    fn high_degree_uses_prs() {
        let tn = IntPoly::cyclotomic_product(81);
        let delta = p(&[-2, 5, -2]);
        let r = resultant(&tn, &delta).unwrap();
        let expect = (BigInt::one() << 81usize) - 1;
        assert_eq!(num_traits::Signed::abs(&r), &expect * &expect);
    }
}
