//! Concordance obstructions built on metabolizers, cover homology and
//! correction terms.

pub mod combo;
pub mod metabolizer;
pub mod primes;
pub mod twist;
pub mod verdict;

pub use combo::{combo_value, d_obstruction, min_combo, order_p_subgroups, ObstructionValue, SubgroupFamily};
pub use metabolizer::{metabolizer_search, split_metabolizer, Metabolizer};
pub use primes::{lemma3_det, lemma3_matrix, spk_enumerate, PrimeSet};
pub use twist::{twist_alg_class, twist_report, AlgClass, TwistRow};
pub use verdict::{theorem1_verdict, Outcome, Verdict};
