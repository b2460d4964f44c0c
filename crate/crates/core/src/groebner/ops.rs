//! Elimination, saturation, quotients, sums and intersections of ideals.

use std::sync::Arc;

use super::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::poly::{same_ring, Polynomial, Ring, TermOrder};

fn check_same(a: &Ideal, b: &Ideal) -> Result<()> {
    if same_ring(a.ring(), b.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Eliminates the variables with the given indices: returns `I ∩ k[rest]`,
/// expressed in the ring of `ideal`.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut drop = 0u32;
    for &v in vars {
        if v >= n {
            return Err(Error::Usage(format!("variable index {v} out of range")));
        }
        drop |= 1 << v;
    }
    if drop == 0 {
        return Ok(ideal.clone());
    }
    let elim_ring = ring.with_order(TermOrder::Elimination { drop });
    let gens = ideal.generators().iter().map(|g| g.to_ring(&elim_ring)).collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::compute(&elim_ring, &gens);
    let kept = gb
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|t| (0..n).all(|i| drop >> i & 1 == 0 || t.mono.exponent(i) == 0)))
        .map(|p| p.to_ring(ring))
        .collect::<Result<Vec<_>>>()?;
    basis_ideal(ring, kept)
}

/// Ideal from a list that is a Gröbner basis in the ring's own order.
fn basis_ideal(ring: &Arc<Ring>, polys: Vec<Polynomial>) -> Result<Ideal> {
    Ok(Ideal::from_basis(GroebnerBasis::from_groebner_generators(ring, polys)))
}

/// Adjoins one new variable `t` as the last variable of an elimination
/// order that drops it, maps the generators in and returns the pieces.
fn with_aux(ring: &Arc<Ring>) -> Result<(Arc<Ring>, Polynomial)> {
    let n = ring.nvars();
    let ext = ring.extended(&["t"], TermOrder::Elimination { drop: 1 << n })?;
    let t = Polynomial::var(&ext, n);
    Ok((ext, t))
}

/// Runs the elimination in the extended ring and brings back the part
/// free of `t`. The result is a Gröbner basis of the elimination ideal for
/// the degrevlex order on the original variables.
fn eliminate_aux(ring: &Arc<Ring>, ext: &Arc<Ring>, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let gb = GroebnerBasis::compute(ext, gens);
    gb.elements()
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.mono.exponent(n) == 0))
        .map(|p| p.to_ring(ring))
        .collect()
}

fn finish(ring: &Arc<Ring>, polys: Vec<Polynomial>) -> Result<Ideal> {
    if ring.order() == TermOrder::DegRevLex {
        basis_ideal(ring, polys)
    } else {
        Ideal::new(ring, polys)
    }
}

/// `I : f^∞`.
///
/// For homogeneous `I` and `f` a variable this uses the degrevlex basis with
/// that variable last (whose elements, divided by their largest power of
/// the variable, generate the saturation). A monomial is handled one
/// variable at a time. Any other `f` goes through `I + <t f - 1>` with `t`
/// eliminated.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if !same_ring(ideal.ring(), f.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(Ideal::unit(ideal.ring()));
    }
    if f.is_constant() || ideal.is_zero() {
        return Ok(ideal.clone().mark_saturated());
    }
    if ideal.is_homogeneous() && f.len() == 1 {
        let mono = f.terms()[0].mono;
        let mut cur = ideal.clone();
        for v in 0..ideal.ring().nvars() {
            if mono.exponent(v) > 0 {
                cur = saturate_by_variable(&cur, v)?;
            }
        }
        return Ok(cur.mark_saturated());
    }
    saturate_aux(ideal, f).map(Ideal::mark_saturated)
}

fn saturate_by_variable(ideal: &Ideal, v: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(v, n - 1);
    let pring = ring.permuted(&perm).with_order(TermOrder::DegRevLex);
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.permute(&pring, &perm)).collect();
    let gb = GroebnerBasis::compute(&pring, &gens);
    let divided: Vec<Polynomial> = gb
        .elements()
        .iter()
        .map(|p| {
            let e = p.terms().iter().map(|t| t.mono.exponent(n - 1)).min().unwrap_or(0);
            p.div_monomial(&crate::poly::Monomial::var(n, n - 1, e)).expect("common power divides")
        })
        .collect();
    // perm is an involution, so it also maps back
    let back: Vec<Polynomial> = divided.iter().map(|p| p.permute(ring, &perm)).collect();
    if v == n - 1 && ring.order() == TermOrder::DegRevLex {
        basis_ideal(ring, back)
    } else {
        Ideal::new(ring, back)
    }
}

fn saturate_aux(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = ideal.ring();
    let (ext, t) = with_aux(ring)?;
    let mut gens = ideal.generators().iter().map(|g| g.to_ring(&ext)).collect::<Result<Vec<_>>>()?;
    gens.push(t.try_mul(&f.to_ring(&ext)?)?.try_sub(&Polynomial::one(&ext))?);
    let kept = eliminate_aux(ring, &ext, &gens)?;
    finish(ring, kept)
}

/// `I ∩ J`, from `t I + (1 - t) J` with `t` eliminated.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    let (ext, t) = with_aux(ring)?;
    let one_minus_t = Polynomial::one(&ext).try_sub(&t)?;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(t.try_mul(&g.to_ring(&ext)?)?);
    }
    for g in b.generators() {
        gens.push(one_minus_t.try_mul(&g.to_ring(&ext)?)?);
    }
    let kept = eliminate_aux(ring, &ext, &gens)?;
    finish(ring, kept)
}

/// `I + J`.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same(a, b)?;
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    Ideal::new(a.ring(), gens)
}

/// `I : g` for a single polynomial.
fn quotient_by(ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = ideal.ring();
    if g.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let meet = ideal_intersection(ideal, &principal)?;
    let gens = meet
        .generators()
        .iter()
        .map(|h| {
            h.div_exact(g)?
                .ok_or_else(|| Error::Usage("intersection element not divisible by the quotient generator".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `I : J`, as the intersection of `I : g` over the generators `g` of `J`.
pub fn ideal_quotient(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    check_same(ideal, by)?;
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let q = quotient_by(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => ideal_intersection(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())))
}

/// `I : J^∞`, as the intersection of `I : g^∞` over the generators `g` of `J`.
pub fn saturate_by_ideal(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    check_same(ideal, by)?;
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let s = saturate(ideal, g)?;
        acc = Some(match acc {
            None => s,
            Some(a) => ideal_intersection(&a, &s)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())).mark_saturated())
}

/// `I : J^∞` by iterating `I ← I : J` until the ideal stops growing.
/// Slower than [`saturate_by_ideal`]; kept as an independent route.
pub fn saturate_iterated_quotient(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    let mut cur = ideal.clone();
    loop {
        let next = ideal_quotient(&cur, by)?;
        if next.same_ideal(&cur) {
            return Ok(next.mark_saturated());
        }
        cur = next;
    }
}
