//! Exact-arithmetic knot concordance obstructions from Seifert matrices.
//!
//! Everything is computed over `ℤ` or `ℚ` with arbitrary precision; no
//! floating point appears in any result.

pub mod cli;
pub mod cover;
pub mod dinv;
pub mod error;
pub mod exactalg;
pub mod obstruct;
pub mod rational;
pub mod seifert;

pub use error::{Error, Result};
pub use seifert::SeifertMatrix;
