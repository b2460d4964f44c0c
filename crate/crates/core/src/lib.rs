//! Computer algebra for Pfaffian degeneracy loci of theta-representations:
//! Gröbner bases over prime fields, Pfaffians and sections of alternating
//! tensors, Borel–Weil–Bott bookkeeping, and the orbit classification for
//! three-forms in seven variables.

pub mod bott;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod multilinear;
pub mod pipeline;
pub mod poly;
pub mod vinberg;

pub use error::{Error, Result};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use groebner::{GroebnerBasis, HilbertData, Ideal, IntPoly};
pub use poly::{Monomial, Polynomial, Ring, Term, TermOrder};
