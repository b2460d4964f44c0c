//! Gröbner bases over prime fields and the ideal operations built on them.

mod buchberger;
mod hilbert;
mod ops;
mod reduce;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{merge_add, mul_term, same_ring, Polynomial, Ring, TermOrder};

pub use hilbert::{hilbert, monomial_ideal_numerator, resolution_hilbert_numerator, HilbertData, IntPoly};
pub use ops::{
    eliminate, ideal_intersection, ideal_quotient, ideal_sum, saturate, saturate_by_ideal, saturate_iterated_quotient,
};

use buchberger::{reduce_groebner_generators, Buchberger};
use reduce::{reduce_full, Reducers};

/// An ideal given by generators, with its reduced Gröbner basis computed
/// on first use.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    saturated: bool,
    gb: OnceLock<GroebnerBasis>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("generators", &self.generators).field("homogeneous", &self.homogeneous).finish()
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal { ring: ring.clone(), generators, homogeneous, saturated: false, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![]).unwrap()
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub(crate) fn from_basis(gb: GroebnerBasis) -> Ideal {
        let ring = gb.ring.clone();
        let generators = gb.elements.clone();
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ideal { ring, generators, homogeneous, saturated: false, gb: cell }
    }

    pub(crate) fn mark_saturated(mut self) -> Ideal {
        self.saturated = true;
        self
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Set on ideals produced by a saturation.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.ring, &self.generators))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.groebner_basis().reduce(f)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Equality of ideals (via reduced bases).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        same_ring(&self.ring, &other.ring) && self.groebner_basis() == other.groebner_basis()
    }

    pub fn hilbert(&self) -> Result<HilbertData> {
        hilbert(self)
    }

    /// Degrees of a minimal homogeneous generating set, as `(degree, count)`
    /// in increasing degree. Requires a homogeneous ideal.
    pub fn degree_profile(&self) -> Result<Vec<(u32, usize)>> {
        let gens = self.minimal_generators()?;
        let mut profile: Vec<(u32, usize)> = Vec::new();
        for g in &gens {
            let d = g.degree().unwrap_or(0);
            match profile.iter_mut().find(|(e, _)| *e == d) {
                Some((_, c)) => *c += 1,
                None => profile.push((d, 1)),
            }
        }
        profile.sort();
        Ok(profile)
    }

    /// A minimal homogeneous generating set, extracted degree by degree from
    /// the reduced basis. In degree `d` the basis elements span `I_d` modulo
    /// the ideal of the generators already kept, so an element is kept when
    /// its normal form is linearly independent of the earlier ones.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if !self.homogeneous {
            return Err(Error::Usage("minimal generators need a homogeneous ideal".into()));
        }
        let gb = self.groebner_basis();
        let mut elems: Vec<&Polynomial> = gb.elements().iter().collect();
        elems.sort_by_key(|p| p.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        for group in elems.chunk_by(|a, b| a.degree() == b.degree()) {
            let lower = (!kept.is_empty()).then(|| GroebnerBasis::compute(&self.ring, &kept));
            // Residues in echelon form, with distinct monic leading terms.
            let mut echelon: Vec<Polynomial> = Vec::new();
            for &e in group {
                let mut r = match &lower {
                    Some(b) => b.reduce(e)?,
                    None => e.clone(),
                };
                while let Some(q) =
                    r.leading_monomial().and_then(|m| echelon.iter().find(|q| q.leading_monomial() == Some(m)))
                {
                    let c = r.leading_term().map_or(0, |t| t.coeff as u64);
                    r = r.try_sub(&q.scale_mod(c))?;
                }
                if !r.is_zero() {
                    echelon.push(r.monic());
                    kept.push(e.clone());
                }
            }
        }
        Ok(kept)
    }
}

/// A reduced Gröbner basis: monic elements, no term of any element divisible
/// by another element's leading monomial, sorted by increasing leading
/// monomial in the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub(crate) fn compute(ring: &Arc<Ring>, generators: &[Polynomial]) -> GroebnerBasis {
        let mut engine = Buchberger::new(ring.order(), ring.field());
        for g in generators {
            engine.add_generator(g.terms().to_vec());
        }
        let (elems, _) = engine.run();
        GroebnerBasis {
            ring: ring.clone(),
            elements: elems.into_iter().map(|t| Polynomial::from_sorted(ring, t)).collect(),
        }
    }

    /// Reduced basis from a list already known to be a Gröbner basis.
    pub(crate) fn from_groebner_generators(ring: &Arc<Ring>, polys: Vec<Polynomial>) -> GroebnerBasis {
        let terms = polys.into_iter().map(Polynomial::into_terms).collect();
        let elems = reduce_groebner_generators(terms, ring.order(), ring.field());
        GroebnerBasis {
            ring: ring.clone(),
            elements: elems.into_iter().map(|t| Polynomial::from_sorted(ring, t)).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Normal form with respect to this basis (unique since it is a
    /// Gröbner basis).
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut reducers = Reducers::new();
        for g in &self.elements {
            reducers.push(g.terms());
        }
        let r = reduce_full(f.terms().to_vec(), &reducers, self.ring.order(), self.ring.field());
        Ok(Polynomial::from_sorted(&self.ring, r))
    }
}

/// Computes the reduced Gröbner basis of an ideal in its ring's order.
pub fn buchberger_reduced(ideal: &Ideal) -> GroebnerBasis {
    ideal.groebner_basis().clone()
}

/// Multivariate division remainder of `f` by an arbitrary list `divisors`:
/// no term of the result is divisible by a leading monomial of a divisor,
/// and `f - r` lies in the ideal they generate.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring();
    for g in divisors {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let monic: Vec<Polynomial> = divisors.iter().filter(|g| !g.is_zero()).map(Polynomial::monic).collect();
    let mut reducers = Reducers::new();
    for g in &monic {
        reducers.push(g.terms());
    }
    let r = reduce_full(f.terms().to_vec(), &reducers, ring.order(), ring.field());
    Ok(Polynomial::from_sorted(ring, r))
}

/// The S-polynomial `lcm/lt(f) * f - lcm/lt(g) * g` (monic leading terms).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Ok(Polynomial::zero(f.ring()));
    };
    let ring = f.ring();
    let field = ring.field();
    let (f, g) = (f.monic(), g.monic());
    let l = lf.lcm(lg);
    let a = mul_term(f.terms(), &l.div(lf).unwrap(), 1, field);
    let b = mul_term(g.terms(), &l.div(lg).unwrap(), field.neg(1), field);
    Ok(Polynomial::from_sorted(ring, merge_add(&a, &b, ring.order(), field)))
}

#[cfg(test)]
mod tests;
