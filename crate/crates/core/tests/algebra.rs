mod common;

use std::sync::Arc;

use proptest::prelude::*;
use theta_loci_core::groebner::{ideal_intersection, saturate, saturate_by_ideal, saturate_iterated_quotient};
use theta_loci_core::poly::{degrevlex_cmp, parse_polynomial};
use theta_loci_core::{Ideal, Monomial, Polynomial, Ring};

use common::{check_groebner, random_form, random_poly, Rng};

fn ring4() -> Arc<Ring> {
    Ring::standard(101, 4).unwrap()
}

fn poly(ring: &Arc<Ring>, seed: u64, terms: usize, deg: u32) -> Polynomial {
    random_poly(&mut Rng::new(seed), ring, terms, deg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let r = ring4();
        let (f, g, h) = (poly(&r, a, 6, 4), poly(&r, b, 6, 4), poly(&r, c, 6, 4));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in any::<u64>(), b in any::<u64>(), pt in prop::collection::vec(0u64..101, 4)) {
        let r = ring4();
        let (f, g) = (poly(&r, a, 6, 4), poly(&r, b, 6, 4));
        let field = r.field();
        prop_assert_eq!((&f * &g).eval(&pt).unwrap(), field.mul(f.eval(&pt).unwrap(), g.eval(&pt).unwrap()));
        prop_assert_eq!((&f + &g).eval(&pt).unwrap(), field.add(f.eval(&pt).unwrap(), g.eval(&pt).unwrap()));
    }

    #[test]
    fn text_forms_parse_back(a in any::<u64>()) {
        let r = ring4();
        let f = poly(&r, a, 8, 5);
        prop_assert_eq!(parse_polynomial(&r, &f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(parse_polynomial(&r, &f.to_canonical_string()).unwrap(), f);
    }

    #[test]
    fn degrevlex_is_multiplicative(x in prop::collection::vec(0u32..4, 3), y in prop::collection::vec(0u32..4, 3), z in prop::collection::vec(0u32..4, 3)) {
        let (a, b, m) = (
            Monomial::from_exponents(&x).unwrap(),
            Monomial::from_exponents(&y).unwrap(),
            Monomial::from_exponents(&z).unwrap(),
        );
        let before = degrevlex_cmp(&a, &b).unwrap();
        prop_assert_eq!(degrevlex_cmp(&a.mul(&m), &b.mul(&m)).unwrap(), before);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn buchberger_output_is_a_reduced_groebner_basis(seed in any::<u64>()) {
        let r = Ring::standard(101, 3).unwrap();
        let mut rng = Rng::new(seed);
        let k = 2 + rng.below(2) as usize;
        let gens = (0..k).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
        let ideal = Ideal::new(&r, gens).unwrap();
        prop_assert_eq!(check_groebner(&ideal), Ok(()));
        // homogeneous inputs are never the unit ideal, so the basis is not trivial
        let forms = (0..k)
            .map(|_| {
                let d = 2 + rng.below(2) as u32;
                random_form(&mut rng, &r, 4, d)
            })
            .collect();
        let ideal = Ideal::new(&r, forms).unwrap();
        prop_assert!(!ideal.is_unit());
        prop_assert_eq!(check_groebner(&ideal), Ok(()));
    }

    #[test]
    fn combinations_are_members(seed in any::<u64>()) {
        let r = Ring::standard(101, 3).unwrap();
        let mut rng = Rng::new(seed);
        let f = random_poly(&mut rng, &r, 3, 2);
        let g = random_poly(&mut rng, &r, 3, 2);
        let ideal = Ideal::new(&r, vec![f.clone(), g.clone()]).unwrap();
        let a = random_poly(&mut rng, &r, 4, 2);
        let b = random_poly(&mut rng, &r, 4, 2);
        prop_assert!(ideal.contains(&(&(&a * &f) + &(&b * &g))).unwrap());
    }

    #[test]
    fn intersection_membership(seed in any::<u64>()) {
        let r = Ring::standard(101, 3).unwrap();
        let mut rng = Rng::new(seed);
        let i = Ideal::new(&r, vec![random_poly(&mut rng, &r, 2, 2)]).unwrap();
        let j = Ideal::new(&r, vec![random_poly(&mut rng, &r, 2, 2)]).unwrap();
        let meet = ideal_intersection(&i, &j).unwrap();
        let both = &i.generators()[0] * &j.generators()[0];
        prop_assert!(meet.contains(&both).unwrap());
        for g in meet.groebner_basis().elements() {
            prop_assert!(i.contains(g).unwrap() && j.contains(g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn saturation_is_idempotent_and_routes_agree(seed in any::<u64>()) {
        let r = Ring::standard(101, 3).unwrap();
        let mut rng = Rng::new(seed);
        let x = Polynomial::var(&r, 0);
        // an ideal with a component along x = 0 mixed in
        let f = random_poly(&mut rng, &r, 3, 2);
        let g = random_poly(&mut rng, &r, 3, 2);
        let ideal = Ideal::new(&r, vec![&x * &f, &(&x * &x) * &g]).unwrap();
        let sat = saturate(&ideal, &x).unwrap();
        prop_assert!(saturate(&sat, &x).unwrap().same_ideal(&sat));
        let by = Ideal::new(&r, vec![x.clone()]).unwrap();
        prop_assert!(saturate_by_ideal(&ideal, &by).unwrap().same_ideal(&sat));
        prop_assert!(saturate_iterated_quotient(&ideal, &by).unwrap().same_ideal(&sat));
        for h in ideal.generators() {
            prop_assert!(sat.contains(h).unwrap());
        }
    }

    #[test]
    fn hilbert_function_counts_standard_monomials(seed in any::<u64>()) {
        // For a monomial ideal the Hilbert function in degree d is the number
        // of degree-d monomials outside the ideal.
        let r = Ring::standard(101, 3).unwrap();
        let mut rng = Rng::new(seed);
        let gens: Vec<Monomial> = (0..3)
            .map(|_| {
                let e: Vec<u32> = (0..3).map(|_| rng.below(4) as u32).collect();
                Monomial::from_exponents(&e).unwrap()
            })
            .filter(|m| !m.is_one())
            .collect();
        let ideal = Ideal::new(&r, gens.iter().map(|m| Polynomial::monomial(&r, *m, 1)).collect()).unwrap();
        let h = ideal.hilbert().unwrap();
        for d in 0..9u32 {
            let mut count = 0;
            for a in 0..=d {
                for b in 0..=d - a {
                    let m = Monomial::from_exponents(&[a, b, d - a - b]).unwrap();
                    if !gens.iter().any(|g| g.divides(&m)) {
                        count += 1;
                    }
                }
            }
            prop_assert_eq!(h.hilbert_function(d as usize), count, "degree {}", d);
        }
    }
}
