//! First homology of prime-power cyclic branched covers, from Seifert data.
//!
//! Two presentations are available. The small one, `Gⁿ - (G - I)ⁿ`, is
//! `2g × 2g` and is what [`homology`] uses. The block-circulant one is
//! `2gn × 2gn`; it is where `⊕ⁿ Z` lives naturally, so [`submodule_image`]
//! works there. Both present the cokernel of their columns.

pub mod group;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use group::{FiniteAbelianGroup, SmallGroup, DEFAULT_ENUMERATION_BOUND};

use crate::error::{Error, Result};
use crate::exactalg::{resultant, snf, IntMatrix, IntPoly};
use crate::obstruct::Metabolizer;
use crate::seifert::SeifertMatrix;

/// Splits `n = q^r` with `q` prime and `r ≥ 1`, by trial division.
pub fn prime_power(n: u64) -> Result<(u64, u32)> {
    if n < 2 {
        return Err(Error::NotPrimePower(n));
    }
    let q = smallest_prime_factor(n);
    let mut m = n;
    let mut r = 0;
    while m % q == 0 {
        m /= q;
        r += 1;
    }
    if m == 1 {
        Ok((q, r))
    } else {
        Err(Error::NotPrimePower(n))
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n % p == 0 {
            n /= p;
        }
    }
    out
}

fn exponent(n: u64) -> Result<u32> {
    prime_power(n)?;
    u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("cover degree {n} too large")))
}

/// `Gⁿ - (G - I)ⁿ`, empty for the unknot.
pub fn presentation_small(s: &SeifertMatrix, n: u64) -> Result<IntMatrix> {
    let e = exponent(n)?;
    if s.genus() == 0 {
        return Ok(IntMatrix::zeros(0, 0));
    }
    let g = s.monodromy_g()?;
    let g_minus_i = &g - &IntMatrix::identity(g.rows());
    Ok(&g.pow(e) - &g_minus_i.pow(e))
}

/// Block-circulant matrix with `G` on the diagonal and `I - G` on the
/// superdiagonal, wrapping to the bottom-left corner.
pub fn presentation_block(s: &SeifertMatrix, n: u64) -> Result<IntMatrix> {
    let e = exponent(n)? as usize;
    if s.genus() == 0 {
        return Ok(IntMatrix::zeros(0, 0));
    }
    let g = s.monodromy_g()?;
    let d = g.rows();
    let i_minus_g = &IntMatrix::identity(d) - &g;
    let mut f = IntMatrix::zeros(d * e, d * e);
    for i in 0..e {
        f.set_block(i * d, i * d, &g);
        f.set_block(i * d, ((i + 1) % e) * d, &i_minus_g);
    }
    Ok(f)
}

/// Both presentations for one cover.
#[derive(Clone, Debug)]
pub struct CoverPresentation {
    pub n: u64,
    pub small: IntMatrix,
    pub block: IntMatrix,
}

impl CoverPresentation {
    pub fn new(s: &SeifertMatrix, n: u64) -> Result<Self> {
        Ok(CoverPresentation {
            n,
            small: presentation_small(s, n)?,
            block: presentation_block(s, n)?,
        })
    }
}

/// Cokernel of a presentation matrix together with the map from lattice
/// vectors to group coordinates.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FiniteAbelianGroup,
    /// One row per invariant factor; `x ↦ projection · x mod factors`.
    projection: IntMatrix,
}

impl Cokernel {
    /// `ℤ^rows / (column span of m)`, which must be finite.
    pub fn of(m: &IntMatrix) -> Result<Self> {
        let s = snf(m);
        if s.diag.len() < m.rows() || s.diag.iter().any(Zero::is_zero) {
            return Err(Error::InfiniteHomology);
        }
        let keep: Vec<usize> = (0..s.diag.len()).filter(|&i| !s.diag[i].is_one()).collect();
        let mut projection = IntMatrix::zeros(keep.len(), m.rows());
        for (r, &i) in keep.iter().enumerate() {
            for c in 0..m.rows() {
                projection[(r, c)] = s.u[(i, c)].clone();
            }
        }
        let group = FiniteAbelianGroup::new(keep.iter().map(|&i| s.diag[i].clone()).collect())
            .expect("snf output is a chain");
        Ok(Cokernel { group, projection })
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    /// Image of a lattice vector, reduced into `[0, d_i)`.
    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.projection
            .mul_vec(x)
            .into_iter()
            .zip(self.group.factors())
            .map(|(v, d)| {
                let r = v % d;
                if r.is_negative() {
                    r + d
                } else {
                    r
                }
            })
            .collect()
    }
}

/// `H₁(Σⁿ(K); ℤ)` from the small presentation.
pub fn homology(s: &SeifertMatrix, n: u64) -> Result<Cokernel> {
    Cokernel::of(&presentation_small(s, n)?)
}

/// `|Res(tⁿ - 1, Δ_K)|`.
pub fn order_fox(s: &SeifertMatrix, n: u64) -> Result<BigInt> {
    prime_power(n)?;
    let n = usize::try_from(n).map_err(|_| Error::InvalidArgument("n too large".into()))?;
    let delta = s.alexander().into_poly();
    Ok(resultant(&IntPoly::cyclotomic_product(n), &delta)?.abs())
}

/// The image of `⊕ⁿ Z` in `H₁(Σⁿ(K))`.
#[derive(Clone, Debug)]
pub struct ImageSubgroup {
    /// Ambient group, in the coordinates of the presentation used.
    pub group: FiniteAbelianGroup,
    /// Images of the generators of `⊕ⁿ Z`, in group coordinates.
    pub generators: Vec<Vec<BigInt>>,
    /// Lattice index `[⊕Z + Im f : Im f]`.
    pub order: BigInt,
}

impl ImageSubgroup {
    /// Sorted element indices, when `|group| ≤ bound`.
    pub fn elements(&self, bound: u64) -> Result<(SmallGroup, Vec<usize>)> {
        let small = self.group.small(bound)?;
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| small.index_of(&g.iter().map(|x| x.to_u64().unwrap()).collect::<Vec<_>>()))
            .collect();
        let members = small.closure(&gens);
        debug_assert_eq!(BigInt::from(members.len()), self.order);
        Ok((small, members))
    }
}

fn image_in(presentation: &IntMatrix, gens: &[Vec<BigInt>]) -> Result<ImageSubgroup> {
    let coker = Cokernel::of(presentation)?;
    let total = coker.group.order();
    let mut aug = presentation.clone();
    for g in gens {
        let col = IntMatrix::from_vec(g.len(), 1, g.clone());
        aug = aug.hstack(&col);
    }
    let quotient = snf(&aug)
        .cokernel_order()
        .ok_or(Error::InfiniteHomology)?;
    Ok(ImageSubgroup {
        generators: gens.iter().map(|g| coker.project(g)).collect(),
        order: total / quotient,
        group: coker.group,
    })
}

/// Image of `⊕ⁿ Z ⊂ ℤ^{2gn}` in the cokernel of the block presentation.
pub fn submodule_image(s: &SeifertMatrix, z: &Metabolizer, n: u64) -> Result<ImageSubgroup> {
    z.check_against(s)?;
    let block = presentation_block(s, n)?;
    let d = s.dim();
    let copies = block.rows() / d.max(1);
    let mut gens = Vec::new();
    for i in 0..copies {
        for r in 0..z.basis().rows() {
            let mut v = vec![BigInt::zero(); block.rows()];
            for (c, x) in z.basis().row(r).iter().enumerate() {
                v[i * d + c] = x.clone();
            }
            gens.push(v);
        }
    }
    image_in(&block, &gens)
}

/// Image of `Z ⊂ ℤ^{2g}` in the cokernel of the small presentation, i.e. in
/// the coordinates of [`homology`].
pub fn submodule_image_small(s: &SeifertMatrix, z: &Metabolizer, n: u64) -> Result<ImageSubgroup> {
    z.check_against(s)?;
    let small = presentation_small(s, n)?;
    let gens: Vec<Vec<BigInt>> = z.basis().to_rows();
    image_in(&small, &gens)
}
