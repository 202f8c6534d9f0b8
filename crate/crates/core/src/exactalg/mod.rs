//! Exact integer and rational algebra: polynomials, resultants, determinants
//! and Smith normal form. No floating point is used anywhere below here.

pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod resultant;
pub mod snf;

pub use matrix::IntMatrix;
pub use poly::{poly_gcd, IntPoly, RatPoly};
pub use resultant::{resultant, resultant_subresultant, resultant_sylvester, sylvester_matrix};
pub use snf::{snf, SnfResult};
