//! Prime-field polynomial arithmetic under graded reverse lexicographic
//! order (and the block orders used for elimination).

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{degrevlex_cmp, Monomial, TermOrder, MAX_VARS};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Term};
pub use ring::Ring;

pub(crate) use polynomial::{merge_add, mul_term};
pub(crate) use ring::same_ring;
