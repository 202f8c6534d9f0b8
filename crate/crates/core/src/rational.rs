//! `"num/den"` text form for exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Lowest terms, `"n"` when the denominator is 1.
pub fn format(q: &BigRational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Option<BigRational> {
    let s = s.trim().replace('\u{2212}', "-");
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for (n, d) in [(-8, 9), (0, 1), (4, 1), (6, -4)] {
            let q = ratio(n, d);
            assert_eq!(parse(&format(&q)), Some(q));
        }
        assert_eq!(format(&ratio(-8, 9)), "-8/9");
        assert_eq!(format(&ratio(8, 2)), "4");
        assert_eq!(parse("3/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(parse("\u{2212}2/5"), Some(ratio(-2, 5)));
    }
}
