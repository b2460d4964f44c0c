mod common;

use proptest::prelude::*;
use theta_loci_core::multilinear::{pfaffian, pfaffian_ideal, random_section, w39_matrix, Case, SkewMatrix};
use theta_loci_core::{PrimeField, Ring};

use common::{constant_value, det_mod, permutation_sign, random_constant_skew, Rng};

const P: u64 = 101;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squared_is_determinant(seed in any::<u64>(), half in 1usize..=4) {
        let ring = Ring::standard(P, 1).unwrap();
        let (m, num) = random_constant_skew(&mut Rng::new(seed), &ring, 2 * half);
        let pf = constant_value(&pfaffian(&m));
        prop_assert_eq!(pf * pf % P, det_mod(num, P));
    }

    #[test]
    fn odd_skew_determinant_vanishes(seed in any::<u64>(), half in 1usize..=3) {
        let ring = Ring::standard(P, 1).unwrap();
        let (m, num) = random_constant_skew(&mut Rng::new(seed), &ring, 2 * half + 1);
        prop_assert!(pfaffian(&m).is_zero());
        prop_assert_eq!(det_mod(num, P), 0);
    }

    #[test]
    fn relabelling_multiplies_by_the_sign(seed in any::<u64>(), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let ring = Ring::standard(P, 1).unwrap();
        let (m, _) = random_constant_skew(&mut Rng::new(seed), &ring, 6);
        let pf = constant_value(&pfaffian(&m));
        let moved = constant_value(&pfaffian(&m.permuted(&perm)));
        let expect = if permutation_sign(&perm) == 1 { pf } else { (P - pf) % P };
        prop_assert_eq!(moved, expect);
    }

    #[test]
    fn three_form_matrix_is_linear(a in any::<u64>(), b in any::<u64>(), c in 0u64..P, chart in 1usize..=9) {
        let v = random_section(Case::W39, a, P).unwrap().to_alternating().unwrap();
        let w = random_section(Case::W39, b, P).unwrap().to_alternating().unwrap();
        let combined = w39_matrix(&v.add(&w.scale(c)).unwrap(), chart).unwrap();
        let mv = w39_matrix(&v, chart).unwrap();
        let mw = w39_matrix(&w, chart).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let expect = mv.entry(i, j) + &mw.entry(i, j).scale_mod(c);
                prop_assert_eq!(combined.entry(i, j), &expect);
            }
        }
    }
}

#[test]
fn pfaffians_of_principal_minors_match_submatrices() {
    let m = SkewMatrix::generic(P, 6).unwrap();
    let ideal = pfaffian_ideal(&m, 4).unwrap();
    assert_eq!(ideal.generators().len(), 15);
    let minor = pfaffian(&m.submatrix(&[0, 1, 2, 3]));
    assert!(ideal.contains(&minor).unwrap());
    // generic 4x4 Pfaffians of a 6x6 matrix define the cone over Gr(2,6): codim 6, degree 14
    let h = ideal.hilbert().unwrap();
    assert_eq!((h.codim(), h.degree), (6, 14));
}

#[test]
fn pfaffian_of_three_form_matrix_is_cubic_generator() {
    let v = random_section(Case::W39, 9, P).unwrap().to_alternating().unwrap();
    let m = w39_matrix(&v, 9).unwrap();
    let pf = pfaffian(&m);
    // an 8x8 Pfaffian of linear forms has degree 4 and is divisible by z_9
    assert_eq!(pf.degree(), Some(4));
    let z9 = theta_loci_core::Polynomial::var(m.ring(), 8);
    assert!(pf.div_exact(&z9).unwrap().is_some());
    assert_eq!(v.field(), PrimeField::new(P).unwrap());
}
