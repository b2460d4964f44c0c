//! Fixed inputs for the benchmarks in `benches/`.

use theta_loci_core::multilinear::{c5w25_matrix, random_section, w39_matrix, Case, SkewMatrix};
use theta_loci_core::{Ideal, Polynomial, Result};

pub const PRIME: u64 = 101;
pub const SEED: u64 = 42;

/// The `5×5` matrix of linear forms for the default c5w25 section.
pub fn c5w25() -> Result<SkewMatrix> {
    c5w25_matrix(&random_section(Case::C5w25, SEED, PRIME)?)
}

/// The `8×8` matrix of linear forms for the default three-form, chart `z_9`.
pub fn w39(case: Case) -> Result<SkewMatrix> {
    let v = random_section(case, SEED, PRIME)?.to_alternating()?;
    w39_matrix(&v, 9)
}

/// Last variable of the matrix ring, the one the pipeline saturates by.
pub fn last_var(m: &SkewMatrix) -> Polynomial {
    let ring = m.ring();
    Polynomial::var(ring, ring.nvars() - 1)
}

/// A fresh copy of `ideal` with no cached Gröbner basis.
pub fn uncached(ideal: &Ideal) -> Result<Ideal> {
    Ideal::new(ideal.ring(), ideal.generators().to_vec())
}
