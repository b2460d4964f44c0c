use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, TermOrder};
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// One term: a monomial with a nonzero coefficient in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// A polynomial in canonical form: nonzero coefficients, distinct
/// monomials, strictly decreasing in the ring's term order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for t in &self.terms {
            t.mono.hash(state);
            t.coeff.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Polynomial::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, 1)
    }

    /// The `i`-th variable (0-based).
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), i, 1), 1)
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Monomial, c: u64) -> Self {
        let c = ring.field().reduce(c);
        let terms = if c == 0 { vec![] } else { vec![Term { mono, coeff: c as u32 }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds the canonical form of an arbitrary list of terms.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Result<Self> {
        let field = ring.field();
        let mut raw: Vec<Term> = Vec::new();
        for (mono, c) in terms {
            if mono.width() != ring.nvars() {
                return Err(Error::WidthMismatch(mono.width(), ring.nvars()));
            }
            let c = field.reduce(c);
            if c != 0 {
                raw.push(Term { mono, coeff: c as u32 });
            }
        }
        Ok(Polynomial { ring: ring.clone(), terms: canonicalize(raw, ring.order(), field) })
    }

    /// Wraps terms already in canonical form for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.terms, &other.terms, self.ring.order(), self.ring.field()),
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let order = self.ring.order();
        // multiply by the shorter factor term by term, merging as we go
        let (short, long) =
            if self.len() <= other.len() { (&self.terms, &other.terms) } else { (&other.terms, &self.terms) };
        let mut acc: Vec<Term> = Vec::new();
        for t in short {
            let row = mul_term(long, &t.mono, t.coeff as u64, field);
            acc = merge_add(&acc, &row, order, field);
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: acc })
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        let c = self.ring.field().from_i64(c);
        self.scale_mod(c)
    }

    pub fn scale_mod(&self, c: u64) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono, coeff: field.mul(t.coeff as u64, c) as u32 })
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale_mod(self.ring.field().modulus() - 1)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u64) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: mul_term(&self.terms, m, c, field) }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one(&self.ring);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(t.coeff as u64);
                self.scale_mod(inv)
            }
        }
    }

    /// Evaluation at a point of `F_p^n`.
    pub fn eval(&self, point: &[u64]) -> Result<u64> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::WidthMismatch(point.len(), n));
        }
        let field = self.ring.field();
        let mut acc = 0;
        for t in &self.terms {
            let mut v = t.coeff as u64;
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    v = field.mul(v, field.pow(point[i], e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        Ok(acc)
    }

    /// Substitutes polynomials (all in one target ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::WidthMismatch(images.len(), self.ring.nvars()));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(Polynomial::constant(&self.ring, self.terms.first().map_or(0, |t| t.coeff as i64))),
        };
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut v = Polynomial::constant(&target, t.coeff as i64);
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    v = v.try_mul(&images[i].pow(e as u32))?;
                }
            }
            acc = acc.try_add(&v)?;
        }
        Ok(acc)
    }

    /// Re-expresses this polynomial in a ring of the same width and field
    /// (typically the same variables under a different order).
    pub fn to_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let n = ring.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mono = t
                .mono
                .with_width(n)
                .ok_or_else(|| Error::Usage(format!("{self} does not fit in a ring of width {n}")))?;
            terms.push(Term { mono, coeff: t.coeff });
        }
        Ok(Polynomial { ring: ring.clone(), terms: canonicalize(terms, ring.order(), ring.field()) })
    }

    /// Moves variable `i` to slot `perm[i]` of `ring`.
    pub fn permute(&self, ring: &Arc<Ring>, perm: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.permuted(perm), coeff: t.coeff }).collect();
        Polynomial { ring: ring.clone(), terms: canonicalize(terms, ring.order(), ring.field()) }
    }

    /// Exact quotient by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term { mono: t.mono.div(m)?, coeff: t.coeff });
        }
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(g)?;
        let Some(lg) = g.terms.first().copied() else {
            return Ok(None);
        };
        let field = self.ring.field();
        let order = self.ring.order();
        let lg_inv = field.inv(lg.coeff as u64);
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(lt) = rem.first().copied() {
            let Some(q) = lt.mono.div(&lg.mono) else {
                return Ok(None);
            };
            let c = field.mul(lt.coeff as u64, lg_inv);
            quot.push(Term { mono: q, coeff: c as u32 });
            let sub = mul_term(&g.terms, &q, field.neg(c), field);
            rem = merge_add(&rem, &sub, order, field);
        }
        Ok(Some(Polynomial { ring: self.ring.clone(), terms: quot }))
    }
}

/// Sorts descending and combines like terms.
pub(crate) fn canonicalize(mut raw: Vec<Term>, order: TermOrder, field: PrimeField) -> Vec<Term> {
    raw.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
    let mut out: Vec<Term> = Vec::with_capacity(raw.len());
    for t in raw {
        match out.last_mut() {
            Some(last) if last.mono == t.mono => {
                last.coeff = field.add(last.coeff as u64, t.coeff as u64) as u32;
                if last.coeff == 0 {
                    out.pop();
                }
            }
            _ => out.push(t),
        }
    }
    out
}

/// Sum of two canonical term lists.
pub(crate) fn merge_add(a: &[Term], b: &[Term], order: TermOrder, field: PrimeField) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].coeff as u64, b[j].coeff as u64);
                if c != 0 {
                    out.push(Term { mono: a[i].mono, coeff: c as u32 });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `c * m * terms`; order is preserved since term orders are multiplicative.
#[inline]
pub(crate) fn mul_term(terms: &[Term], m: &Monomial, c: u64, field: PrimeField) -> Vec<Term> {
    terms.iter().map(|t| Term { mono: t.mono.mul(m), coeff: field.mul(t.coeff as u64, c) as u32 }).collect()
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings; use the
            /// `try_` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl std::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl Polynomial {
    /// Text form with every coefficient written as its representative in
    /// `[0, p)`, e.g. `100*z_1^2 + z_2`. Parses back to the same polynomial.
    pub fn to_canonical_string(&self) -> String {
        let mut s = String::new();
        self.write_terms(&mut s, false).expect("writing to a String");
        s
    }

    fn write_terms(&self, f: &mut impl fmt::Write, balanced: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, t) in self.terms.iter().enumerate() {
            let c = if balanced { field.to_signed(t.coeff as u64) } else { t.coeff as i64 };
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if c.abs() != 1 || t.mono.is_one() {
                factors.push(c.abs().to_string());
            }
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Coefficients print as balanced representatives in `(-p/2, p/2]`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, true)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(p: u64, names: &[&str]) -> Arc<Ring> {
        Ring::new(PrimeField::new(p).unwrap(), names.iter().map(|s| s.to_string()).collect(), TermOrder::DegRevLex)
            .unwrap()
    }

    #[test]
    fn binomial_square() {
        let r = ring(101, &["x", "y"]);
        let s = parse_polynomial(&r, "x + y").unwrap();
        assert_eq!((&s * &s).to_string(), "x^2 + 2*x*y + y^2");
        let r2 = ring(2, &["x", "y"]);
        let s2 = parse_polynomial(&r2, "x + y").unwrap();
        assert_eq!((&s2 * &s2).to_string(), "x^2 + y^2");
    }

    #[test]
    fn additive_inverse_is_empty() {
        let r = ring(101, &["x", "y", "z"]);
        let f = parse_polynomial(&r, "3*x^2*y + 7*z - 1").unwrap();
        let g = &f + &f.scale(-1);
        assert!(g.is_zero());
        assert_eq!(g.terms().len(), 0);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring(101, &["x"]), 0);
        let b = Polynomial::var(&ring(103, &["x"]), 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = ring(101, &["x", "y"]);
        let f = parse_polynomial(&r, "x^2 - y^2").unwrap();
        let g = parse_polynomial(&r, "x - y").unwrap();
        assert_eq!(f.div_exact(&g).unwrap().unwrap().to_string(), "x + y");
        let h = parse_polynomial(&r, "x + 2*y").unwrap();
        assert_eq!(f.div_exact(&h).unwrap(), None);
    }
}
