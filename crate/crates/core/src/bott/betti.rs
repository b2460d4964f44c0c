//! Ranks of equivariant free resolutions listed by their Schur modules.

use num_bigint::BigUint;

use super::{schur_dim, Partition};
use crate::error::Result;

/// One homological degree: Schur modules `S_λ` with multiplicities.
pub type BettiColumn = Vec<(Partition, u64)>;

const GR36: [&[(&str, u64)]; 11] = [
    &[],
    &[("2,1^4", 1)],
    &[("2^4,1", 1), ("3,2,1^4", 1)],
    &[("3^2,2^2,1^2", 1), ("3^5", 1), ("5,2^5", 1)],
    &[("4^3,2^3", 1), ("4^2,3^3,1", 1), ("5,3^3,2^2", 1)],
    &[("5,4^2,3^2,2", 2)],
    &[("5^2,4^3,2", 1), ("5^3,3^3", 1), ("6,4^3,3^2", 1)],
    &[("7,4^5", 1), ("5^5,2", 1), ("6^2,5^2,4^2", 1)],
    &[("6^4,5,4", 1), ("7,6,5^4", 1)],
    &[("7,6^4,5", 1)],
    &[("7^6", 1)],
];

/// The minimal free resolution of the affine cone over `Gr(3, 6)` in
/// `∧³C^6` over a field of characteristic 0, as `GL_6` partitions.
pub fn gr36_resolution() -> Vec<BettiColumn> {
    GR36.iter()
        .map(|col| {
            if col.is_empty() {
                return vec![(Partition::empty(), 1)];
            }
            col.iter().map(|&(s, m)| (s.parse().expect("valid partition literal"), m)).collect()
        })
        .collect()
}

/// Total rank of each column, `Σ m · dim S_λ(C^n)`.
pub fn betti_totals(resolution: &[BettiColumn], n: usize) -> Result<Vec<BigUint>> {
    resolution
        .iter()
        .map(|col| {
            col.iter().try_fold(BigUint::default(), |acc, (lambda, m)| {
                let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
                Ok(acc + schur_dim(&parts, n)? * BigUint::from(*m))
            })
        })
        .collect()
}
