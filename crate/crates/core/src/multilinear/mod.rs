//! Skew-symmetric matrices of linear forms, Pfaffians, and the matrices
//! attached to sections of `C^5 ⊗ ∧²C^5` and `∧³C^9`.

mod alternating;
mod section;
mod skew;

pub use alternating::AlternatingVector;
pub use section::{random_section, Case, Section, SectionTerm, SplitMix64};
pub use skew::{c5w25_matrix, pfaffian, pfaffian_ideal, w39_matrix, SkewMatrix};
