//! Helpers shared by the integration tests: a seeded generator and
//! oracles that do not go through the library code under test.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use theta_loci_core::multilinear::{SkewMatrix, SplitMix64};
use theta_loci_core::{Ideal, Monomial, Polynomial, Ring};

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(SplitMix64::new(seed))
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.0.next_u64() % n
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Determinant mod `p` by Gaussian elimination.
pub fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let inv = |x: u64| {
        let (mut r, mut b, mut e) = (1u64, x % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = (r as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    let mut det = 1u64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        det = (det as u128 * a[c][c] as u128 % p as u128) as u64;
        let ic = inv(a[c][c]);
        for r in c + 1..n {
            let f = (a[r][c] as u128 * ic as u128 % p as u128) as u64;
            if f == 0 {
                continue;
            }
            for k in c..n {
                let sub = (f as u128 * a[c][k] as u128 % p as u128) as u64;
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
    }
    det
}

/// A random skew matrix with constant entries, and the same matrix as
/// numbers mod `p`.
pub fn random_constant_skew(rng: &mut Rng, ring: &Arc<Ring>, n: usize) -> (SkewMatrix, Vec<Vec<u64>>) {
    let p = ring.field().modulus();
    let mut num = vec![vec![0u64; n]; n];
    let m = SkewMatrix::from_upper(ring, n, |i, j| {
        let c = rng.below(p);
        num[i][j] = c;
        num[j][i] = (p - c) % p;
        Polynomial::constant(ring, c as i64)
    });
    (m, num)
}

/// Value of a constant polynomial as a residue.
pub fn constant_value(f: &Polynomial) -> u64 {
    assert!(f.is_constant(), "{f} is not constant");
    f.terms().first().map_or(0, |t| t.coeff as u64)
}

pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub type Reflection = fn(&[i64], usize) -> Vec<i64>;

/// Breadth-first search over the orbit of the regular vector `start` under
/// the given generators (each a map on vectors). Returns the word length of
/// every orbit point.
pub fn word_lengths(start: Vec<i64>, gens: &[Reflection], n: usize) -> HashMap<Vec<i64>, usize> {
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for g in gens {
            for i in 0..n {
                let w = g(&v, i);
                if w != v && !dist.contains_key(&w) {
                    dist.insert(w.clone(), d + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// Simple reflection `s_i` (swap positions `i`, `i+1`); identity when out of range.
pub fn swap_adjacent(v: &[i64], i: usize) -> Vec<i64> {
    let mut w = v.to_vec();
    if i + 1 < v.len() {
        w.swap(i, i + 1);
    }
    w
}

/// The type C reflection `s_n` negating the last entry (only for `i = 0`).
pub fn negate_last(v: &[i64], i: usize) -> Vec<i64> {
    let mut w = v.to_vec();
    if i == 0 {
        let k = w.len() - 1;
        w[k] = -w[k];
    }
    w
}

/// A random polynomial with up to `terms` terms of degree at most `deg`.
pub fn random_poly(rng: &mut Rng, ring: &Arc<Ring>, terms: usize, deg: u32) -> Polynomial {
    let n = ring.nvars();
    let p = ring.field().modulus();
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut budget = rng.below(deg as u64 + 1) as u32;
        for e in exps.iter_mut() {
            let k = rng.below(budget as u64 + 1) as u32;
            *e = k;
            budget -= k;
        }
        out.push((Monomial::from_exponents(&exps).unwrap(), rng.below(p)));
    }
    Polynomial::from_terms(ring, out).unwrap()
}

/// Checks the defining properties of a reduced Gröbner basis of `ideal`
/// directly: every S-polynomial and every generator reduces to zero, the
/// elements are monic and no term is divisible by another leading monomial.
pub fn check_groebner(ideal: &Ideal) -> Result<(), String> {
    use theta_loci_core::groebner::{normal_form, s_polynomial};
    let gb = ideal.groebner_basis().elements().to_vec();
    for (i, f) in gb.iter().enumerate() {
        if f.leading_term().map(|t| t.coeff) != Some(1) {
            return Err(format!("element {f} is not monic"));
        }
        for (j, g) in gb.iter().enumerate() {
            if i < j {
                let s = s_polynomial(f, g).unwrap();
                let r = normal_form(&s, &gb).unwrap();
                if !r.is_zero() {
                    return Err(format!("S({f}, {g}) reduces to {r}"));
                }
            }
            if i != j {
                let lm = g.leading_monomial().unwrap();
                if f.terms().iter().any(|t| lm.divides(&t.mono)) {
                    return Err(format!("{f} is not reduced with respect to {g}"));
                }
            }
        }
    }
    for g in ideal.generators() {
        if !normal_form(g, &gb).unwrap().is_zero() {
            return Err(format!("generator {g} is not in the span of the basis"));
        }
    }
    Ok(())
}

/// A random form of degree exactly `deg` with up to `terms` terms.
pub fn random_form(rng: &mut Rng, ring: &Arc<Ring>, terms: usize, deg: u32) -> Polynomial {
    let n = ring.nvars();
    let p = ring.field().modulus();
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.below(n as u64) as usize] += 1;
        }
        out.push((Monomial::from_exponents(&exps).unwrap(), 1 + rng.below(p - 1)));
    }
    Polynomial::from_terms(ring, out).unwrap()
}
