use super::*;
use crate::poly::parse_polynomial;

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(
        crate::field::PrimeField::new(101).unwrap(),
        names.iter().map(|s| s.to_string()).collect(),
        TermOrder::DegRevLex,
    )
    .unwrap()
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
}

fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

#[test]
fn twisted_cubic() {
    let r = ring(&["x", "y", "z", "w"]);
    let i = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
    let gb = i.groebner_basis();
    assert_eq!(gb.len(), 3);
    let h = i.hilbert().unwrap();
    assert_eq!(h.krull_dimension, 2);
    assert_eq!(h.degree, 3);
    assert_eq!(h.polynomial_string(), "3t + 1");
    assert_eq!(h.numerator, IntPoly::new(vec![1, 0, -3, 2]));
}

#[test]
fn fat_point() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y", "y^2"]);
    let h = i.hilbert().unwrap();
    assert_eq!(h.numerator, IntPoly::new(vec![1, 0, -3, 2]));
    assert_eq!(h.krull_dimension, 0);
    assert_eq!(h.degree, 3);
}

#[test]
fn zero_and_unit_ideals() {
    let r = ring(&["x", "y"]);
    let z = Ideal::zero(&r);
    let h = z.hilbert().unwrap();
    assert_eq!(h.numerator, IntPoly::one());
    assert_eq!(h.krull_dimension, 2);
    assert_eq!(h.polynomial_string(), "t + 1");
    let u = ideal(&r, &["x", "y", "x + 1"]);
    assert!(u.is_unit());
    let h = u.hilbert().unwrap();
    assert_eq!(h.krull_dimension, -1);
    assert!(h.numerator.is_zero());
}

#[test]
fn normal_form_of_members_vanishes() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2 - y*z", "y^2 - x*z"]);
    let f = p(&r, "(x^2 - y*z)*(x + 3*z) + (y^2 - x*z)*y^2");
    assert!(i.contains(&f).unwrap());
    assert!(!i.contains(&p(&r, "x*y")).unwrap());
}

#[test]
fn s_polynomial_cancels_leading_terms() {
    let r = ring(&["x", "y"]);
    let f = p(&r, "x^2 + y");
    let g = p(&r, "x*y + 1");
    let s = s_polynomial(&f, &g).unwrap();
    assert_eq!(s, p(&r, "y^2 - x"));
}

#[test]
fn eliminate_parametrization() {
    // twisted cubic from its parametrization
    let r = ring(&["s", "t", "x", "y", "z", "w"]);
    let i = ideal(&r, &["x - s^3", "y - s^2*t", "z - s*t^2", "w - t^3"]);
    let e = eliminate(&i, &[0, 1]).unwrap();
    let expected = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
    assert!(e.same_ideal(&expected));
}

#[test]
fn saturation_routes_agree() {
    let r = ring(&["x", "y", "z"]);
    // <x^2, xy> = <x> ∩ <x^2, y>; the embedded part lives on x = y = 0
    let i = ideal(&r, &["x^2", "x*y"]);
    let x = ideal(&r, &["x"]);
    assert!(saturate(&i, &p(&r, "y")).unwrap().same_ideal(&x));
    assert!(saturate(&i, &p(&r, "x + y")).unwrap().same_ideal(&x));
    // y + z does not vanish on the embedded point
    assert!(saturate(&i, &p(&r, "y + z")).unwrap().same_ideal(&i));
    let j = ideal(&r, &["y", "x + y"]);
    let a = saturate_by_ideal(&i, &j).unwrap();
    let b = saturate_iterated_quotient(&i, &j).unwrap();
    assert!(a.same_ideal(&b));
    assert!(a.same_ideal(&x));
    let m = ideal(&r, &["x", "y", "z"]);
    assert!(saturate_by_ideal(&i, &m).unwrap().same_ideal(&i));
    assert!(saturate_iterated_quotient(&i, &m).unwrap().same_ideal(&i));
}

#[test]
fn intersection_and_quotient() {
    let r = ring(&["x", "y"]);
    let a = ideal(&r, &["x"]);
    let b = ideal(&r, &["y"]);
    let meet = ideal_intersection(&a, &b).unwrap();
    assert!(meet.same_ideal(&ideal(&r, &["x*y"])));
    let q = ideal_quotient(&meet, &a).unwrap();
    assert!(q.same_ideal(&b));
    let s = ideal_sum(&a, &b).unwrap();
    assert!(s.same_ideal(&ideal(&r, &["x", "y"])));
}

#[test]
fn minimal_generators_drop_redundancy() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2", "x^2 + x*y", "x*y*z", "y^3"]);
    assert_eq!(i.degree_profile().unwrap(), vec![(2, 2), (3, 1)]);
}
