//! Borel–Weil–Bott for `GL_N` and `Sp_{2n}`, Schur and Weyl dimensions,
//! the explicit Schur functor, cohomology of resolutions, and the
//! Verlinde formula.

mod betti;
mod construct;
mod partition;
mod resolution;
mod weights;

pub use betti::{betti_totals, gr36_resolution, BettiColumn};
pub use construct::{schur_image, schur_module_construct, RowMonomial, CONSTRUCT_GUARD};
pub use partition::{parse_weight, schur_dim, Partition};
pub use resolution::{
    cohomology_of_resolution, koszul_resolution, resolution_euler_characteristic, verlinde, w39_locus_resolution,
    w48_locus_resolution, CohomologyTable, Contribution, Resolution, ResolutionTerm, Space,
};
pub use weights::{bott_type_a, bott_type_c, rho_type_a, rho_type_c, type_c_length, weyl_dim_type_c, BottOutcome};

pub(crate) fn ser_big<S: serde::Serializer>(v: &num_bigint::BigUint, s: S) -> Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}
