//! Row lattices in ℤ^n: Hermite normal form, saturation checks, kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::snf;

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
///
/// Zero rows are dropped. Two row sets span the same lattice iff their HNFs
/// are equal.
pub fn row_hnf(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            let best = (pr..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()));
            let Some(best) = best else { break };
            a.swap_rows(pr, best);
            let mut clean = true;
            for i in pr + 1..rows {
                let q = &a[(i, c)] / &a[(pr, c)];
                a.add_row_multiple(i, pr, &-q);
                clean &= a[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if a[(pr, c)].is_zero() {
            continue;
        }
        if a[(pr, c)].is_negative() {
            a.negate_row(pr);
        }
        for i in 0..pr {
            let q = a[(i, c)].div_floor(&a[(pr, c)]);
            a.add_row_multiple(i, pr, &-q);
        }
        pr += 1;
    }
    a.submatrix(0..pr, 0..cols)
}

/// Whether the rows of `m` are independent and span a direct summand of ℤ^cols,
/// i.e. every invariant factor of `m` equals 1.
pub fn is_primitive_basis(m: &IntMatrix) -> bool {
    m.rows() <= m.cols() && snf(m).diag.iter().all(One::is_one)
}

/// Basis (as rows) of `{ c ∈ ℤ^rows : c · m = 0 }`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let s = snf(m);
    let rank = s.rank();
    s.u.submatrix(rank..m.rows(), 0..m.rows())
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}
