//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Pairs are processed by increasing sugar degree (which coincides with the
//! normal strategy on homogeneous input), ties broken by lcm degree and then
//! by creation order so runs are deterministic.

use std::collections::BTreeMap;

use super::reduce::{reduce_full, Reducers};
use crate::field::PrimeField;
use crate::poly::{merge_add, mul_term, Monomial, Term, TermOrder};

struct Element {
    terms: Vec<Term>,
    lm: Monomial,
    sugar: u32,
    alive: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Key orders pairs by (sugar, lcm degree, creation sequence).
type PairKey = (u32, u32, u64);

pub(crate) struct Stats {
    pub(crate) pairs_reduced: usize,
    pub(crate) zero_reductions: usize,
}

pub(crate) struct Buchberger {
    order: TermOrder,
    field: PrimeField,
    basis: Vec<Element>,
    pairs: BTreeMap<PairKey, Pair>,
    pending: BTreeMap<PairKey, Vec<Term>>,
    seq: u64,
    pub(crate) stats: Stats,
}

fn sugar_of(terms: &[Term]) -> u32 {
    terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
}

fn make_monic(mut terms: Vec<Term>, field: PrimeField) -> Vec<Term> {
    if let Some(t) = terms.first() {
        if t.coeff != 1 {
            let inv = field.inv(t.coeff as u64);
            for t in &mut terms {
                t.coeff = field.mul(t.coeff as u64, inv) as u32;
            }
        }
    }
    terms
}

impl Buchberger {
    pub(crate) fn new(order: TermOrder, field: PrimeField) -> Self {
        Buchberger {
            order,
            field,
            basis: Vec::new(),
            pairs: BTreeMap::new(),
            pending: BTreeMap::new(),
            seq: 0,
            stats: Stats { pairs_reduced: 0, zero_reductions: 0 },
        }
    }

    pub(crate) fn add_generator(&mut self, terms: Vec<Term>) {
        if terms.is_empty() {
            return;
        }
        let sugar = sugar_of(&terms);
        let key = (sugar, terms[0].mono.degree(), self.next_seq());
        self.pending.insert(key, terms);
    }

    fn next_seq(&mut self) -> u64 {
        self.seq += 1;
        self.seq
    }

    fn s_poly(&self, p: &Pair) -> (Vec<Term>, u32) {
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        let uf = p.lcm.div(&f.lm).unwrap();
        let ug = p.lcm.div(&g.lm).unwrap();
        let a = mul_term(&f.terms[1..], &uf, 1, self.field);
        let b = mul_term(&g.terms[1..], &ug, self.field.neg(1), self.field);
        let sugar = (f.sugar + uf.degree()).max(g.sugar + ug.degree());
        (merge_add(&a, &b, self.order, self.field), sugar)
    }

    fn reducers(&self) -> Reducers<'_> {
        let mut r = Reducers::new();
        for e in self.basis.iter().filter(|e| e.alive) {
            r.push(&e.terms);
        }
        r
    }

    /// Runs to completion and returns the reduced Gröbner basis as monic
    /// term lists sorted by increasing leading monomial.
    pub(crate) fn run(mut self) -> (Vec<Vec<Term>>, Stats) {
        loop {
            let next_pair = self.pairs.first_key_value().map(|(k, _)| *k);
            let next_gen = self.pending.first_key_value().map(|(k, _)| *k);
            let (poly, sugar) = match (next_pair, next_gen) {
                (None, None) => break,
                (None, Some(_)) => {
                    let (k, t) = self.pending.pop_first().unwrap();
                    (t, k.0)
                }
                (Some(kp), Some(kg)) if kg <= kp => {
                    let (k, t) = self.pending.pop_first().unwrap();
                    (t, k.0)
                }
                _ => {
                    let (_, pair) = self.pairs.pop_first().unwrap();
                    self.stats.pairs_reduced += 1;
                    self.s_poly(&pair)
                }
            };
            let reduced = {
                let reducers = self.reducers();
                reduce_full(poly, &reducers, self.order, self.field)
            };
            if reduced.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let reduced = make_monic(reduced, self.field);
            let is_unit = reduced[0].mono.is_one();
            self.update(reduced, sugar);
            if is_unit {
                self.pairs.clear();
                self.pending.clear();
                break;
            }
        }
        let mut out: Vec<Vec<Term>> = Vec::new();
        let alive: Vec<usize> = (0..self.basis.len()).filter(|&i| self.basis[i].alive).collect();
        for &i in &alive {
            let mut reducers = Reducers::new();
            for &j in &alive {
                if j != i {
                    reducers.push(&self.basis[j].terms);
                }
            }
            let e = &self.basis[i];
            let mut tail = reduce_full(e.terms[1..].to_vec(), &reducers, self.order, self.field);
            let mut terms = vec![e.terms[0]];
            terms.append(&mut tail);
            out.push(terms);
        }
        out.sort_by(|a, b| self.order.cmp(&a[0].mono, &b[0].mono));
        (out, self.stats)
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, terms: Vec<Term>, sugar: u32) {
        let lm = terms[0].mono;
        let k = self.basis.len();

        // candidate pairs (i, k)
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, e) in self.basis.iter().enumerate() {
            if e.alive {
                cands.push((i, e.lm.lcm(&lm), e.lm.is_coprime(&lm)));
            }
        }
        // M: drop (i,k) if some (j,k) has lcm properly dividing lcm(i,k)
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && cands[b].1.divides(&cands[a].1) && cands[b].1 != cands[a].1 {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F: among equal lcms keep one, and none if any of them is coprime
        let mut by_lcm: Vec<(Monomial, Vec<usize>)> = Vec::new();
        for a in (0..cands.len()).filter(|&a| keep[a]) {
            match by_lcm.iter_mut().find(|(m, _)| *m == cands[a].1) {
                Some((_, v)) => v.push(a),
                None => by_lcm.push((cands[a].1, vec![a])),
            }
        }
        let mut new_pairs: Vec<Pair> = Vec::new();
        for (m, group) in by_lcm {
            if group.iter().any(|&a| cands[a].2) {
                continue;
            }
            new_pairs.push(Pair { i: cands[group[0]].0, j: k, lcm: m });
        }

        // B_k: old pairs whose lcm is divisible by lm and which are not
        // "guarded" by equal lcms with the new element
        let basis = &self.basis;
        self.pairs.retain(|_, p| {
            if !lm.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lm.lcm(&lm);
            let lj = basis[p.j].lm.lcm(&lm);
            li == p.lcm || lj == p.lcm
        });

        for e in self.basis.iter_mut() {
            if e.alive && lm.divides(&e.lm) {
                e.alive = false;
            }
        }
        self.basis.push(Element { terms, lm, sugar, alive: true });
        for p in new_pairs {
            let (fi, fk) = (&self.basis[p.i], &self.basis[p.j]);
            let s = (fi.sugar + p.lcm.degree() - fi.lm.degree()).max(fk.sugar + p.lcm.degree() - fk.lm.degree());
            let key = (s, p.lcm.degree(), self.next_seq());
            self.pairs.insert(key, p);
        }
    }
}

/// Interreduces a list that is already a Gröbner basis (in the same order):
/// removes redundant elements, normalizes and tail-reduces.
pub(crate) fn reduce_groebner_generators(polys: Vec<Vec<Term>>, order: TermOrder, field: PrimeField) -> Vec<Vec<Term>> {
    let mut polys: Vec<Vec<Term>> = polys.into_iter().filter(|p| !p.is_empty()).map(|p| make_monic(p, field)).collect();
    polys.sort_by(|a, b| order.cmp(&a[0].mono, &b[0].mono).then(a.len().cmp(&b.len())));
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for p in polys {
        if !minimal.iter().any(|q| q[0].mono.divides(&p[0].mono)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let mut reducers = Reducers::new();
        for (j, q) in minimal.iter().enumerate() {
            if j != i {
                reducers.push(q);
            }
        }
        let mut tail = reduce_full(minimal[i][1..].to_vec(), &reducers, order, field);
        let mut terms = vec![minimal[i][0]];
        terms.append(&mut tail);
        out.push(terms);
    }
    out
}
