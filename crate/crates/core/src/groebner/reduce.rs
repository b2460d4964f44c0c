//! Multivariate division: geobucket accumulator and full reduction.

use crate::field::PrimeField;
use crate::poly::{merge_add, mul_term, Monomial, Term, TermOrder};

/// Geometric buckets (Yan): bucket `i` holds at most `4^(i+1)` terms, so
/// repeated additions of short polynomials to a long one stay cheap.
pub(crate) struct GeoBucket {
    buckets: Vec<(Vec<Term>, usize)>,
    order: TermOrder,
    field: PrimeField,
}

fn bucket_cap(i: usize) -> usize {
    4usize << (2 * i)
}

impl GeoBucket {
    pub(crate) fn new(order: TermOrder, field: PrimeField) -> Self {
        GeoBucket { buckets: Vec::new(), order, field }
    }

    pub(crate) fn add(&mut self, mut p: Vec<Term>) {
        if p.is_empty() {
            return;
        }
        let mut i = 0;
        while bucket_cap(i) < p.len() {
            i += 1;
        }
        loop {
            if i >= self.buckets.len() {
                self.buckets.resize_with(i + 1, || (Vec::new(), 0));
            }
            let (b, start) = std::mem::take(&mut self.buckets[i]);
            if start < b.len() {
                p = merge_add(&b[start..], &p, self.order, self.field);
            }
            if p.len() <= bucket_cap(i) {
                self.buckets[i] = (p, 0);
                return;
            }
            i += 1;
        }
    }

    /// Removes and returns the leading term of the accumulated sum.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        loop {
            let mut best: Option<Monomial> = None;
            for (b, start) in &self.buckets {
                if let Some(t) = b.get(*start) {
                    match best {
                        Some(m) if self.order.cmp(&t.mono, &m) != std::cmp::Ordering::Greater => {}
                        _ => best = Some(t.mono),
                    }
                }
            }
            let mono = best?;
            let mut c = 0u64;
            for (b, start) in &mut self.buckets {
                if let Some(t) = b.get(*start) {
                    if t.mono == mono {
                        c = self.field.add(c, t.coeff as u64);
                        *start += 1;
                    }
                }
            }
            if c != 0 {
                return Some(Term { mono, coeff: c as u32 });
            }
        }
    }
}

/// A set of monic reducers indexed for divisibility lookups.
pub(crate) struct Reducers<'a> {
    pub(crate) entries: Vec<(u64, Monomial, &'a [Term])>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new() -> Self {
        Reducers { entries: Vec::new() }
    }

    /// `terms` must be monic.
    pub(crate) fn push(&mut self, terms: &'a [Term]) {
        debug_assert_eq!(terms[0].coeff, 1);
        self.entries.push((terms[0].mono.sev(), terms[0].mono, terms));
    }

    /// Shortest reducer whose leading monomial divides `m`.
    #[inline]
    pub(crate) fn find(&self, m: &Monomial) -> Option<&'a [Term]> {
        let s = m.sev();
        let mut best: Option<&'a [Term]> = None;
        for (sev, lm, terms) in &self.entries {
            if sev & !s == 0 && lm.divides(m) && best.is_none_or(|b| terms.len() < b.len()) {
                best = Some(terms);
            }
        }
        best
    }
}

/// Fully reduces `f` by the monic reducers: the result has no term divisible
/// by any reducer's leading monomial.
pub(crate) fn reduce_full(f: Vec<Term>, reducers: &Reducers<'_>, order: TermOrder, field: PrimeField) -> Vec<Term> {
    let mut acc = GeoBucket::new(order, field);
    acc.add(f);
    let mut rem = Vec::new();
    while let Some(t) = acc.pop_leading() {
        match reducers.find(&t.mono) {
            Some(g) => {
                let q = t.mono.div(&g[0].mono).expect("reducer divides");
                acc.add(mul_term(&g[1..], &q, field.neg(t.coeff as u64), field));
            }
            None => rem.push(t),
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Polynomial, Ring};

    #[test]
    fn geobucket_sums_match_direct_sums() {
        let r = Ring::standard(101, 3).unwrap();
        let polys = [
            "z_1^2 + 3*z_2*z_3 + 1",
            "100*z_1^2 + z_3^2",
            "z_1*z_2*z_3 + 5*z_2 + 100",
            "98*z_2*z_3",
            "z_1 + z_2 + z_3 + z_1^3",
        ];
        let mut gb = GeoBucket::new(r.order(), r.field());
        let mut direct = Polynomial::zero(&r);
        for s in polys {
            let p = parse_polynomial(&r, s).unwrap();
            direct = &direct + &p;
            gb.add(p.into_terms());
        }
        let mut popped = vec![];
        while let Some(t) = gb.pop_leading() {
            popped.push(t);
        }
        assert_eq!(popped, direct.terms());
    }
}
