//! Hilbert series of graded quotients, computed on leading-term ideals.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::MAX_VARS;

/// Integer polynomial in one variable, coefficients from degree 0 up, with
/// no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn one() -> IntPoly {
        IntPoly(vec![1])
    }

    /// `1 - t^d`
    pub fn one_minus_power(d: usize) -> IntPoly {
        let mut c = vec![0; d + 1];
        c[0] += 1;
        c[d] -= 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut c = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn shift(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::default();
        }
        let mut c = vec![0; d];
        c.extend_from_slice(&self.0);
        IntPoly(c)
    }

    /// Exact division by `1 - t`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() || self.eval(1) != 0 {
            return None;
        }
        // p = (1 - t) q  ⇒  q_i = Σ_{j ≤ i} p_j
        let mut q = Vec::with_capacity(self.0.len() - 1);
        let mut acc = 0;
        for &c in &self.0[..self.0.len() - 1] {
            acc += c;
            q.push(acc);
        }
        Some(IntPoly::new(q))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.0.iter().map(|&c| Rational64::from_integer(c)).collect(), false)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: Vec<Rational64>, descending: bool) -> fmt::Result {
    let var = "t";
    let mut first = true;
    let mut order: Vec<usize> = (0..coeffs.len()).collect();
    if descending {
        order.reverse();
    }
    for i in order {
        let c = &coeffs[i];
        if c.is_zero() {
            continue;
        }
        let neg = *c < Rational64::zero();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let coeff = if a.is_integer() { a.to_integer().to_string() } else { format!("({a})") };
        let power = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if i == 0 {
            write!(f, "{coeff}")?;
        } else if a.is_one() {
            write!(f, "{power}")?;
        } else {
            write!(f, "{coeff}{power}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Hilbert series data of `S/I` for a homogeneous ideal `I` of
/// `S = k[z_1..z_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `K(t)` with `HS(t) = K(t) / (1 - t)^n`.
    pub numerator: IntPoly,
    /// Krull dimension of `S/I`; -1 for the unit ideal.
    pub krull_dimension: i64,
    pub degree: i64,
    /// Coefficients of the Hilbert polynomial in `t`, constant term first.
    pub hilbert_polynomial: Vec<Rational64>,
    nvars: usize,
}

impl HilbertData {
    pub fn from_numerator(numerator: IntPoly, nvars: usize) -> HilbertData {
        if numerator.is_zero() {
            return HilbertData { numerator, krull_dimension: -1, degree: 0, hilbert_polynomial: vec![], nvars };
        }
        let mut q = numerator.clone();
        let mut k = 0;
        while let Some(next) = q.div_one_minus_t() {
            q = next;
            k += 1;
        }
        let d = nvars - k;
        HilbertData {
            degree: q.eval(1),
            hilbert_polynomial: hilbert_polynomial(&q, d),
            krull_dimension: d as i64,
            numerator,
            nvars,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Codimension of `I` in the polynomial ring.
    pub fn codim(&self) -> i64 {
        self.nvars as i64 - self.krull_dimension.max(0)
    }

    /// Value of the Hilbert polynomial at `k`.
    pub fn polynomial_value(&self, k: i64) -> Rational64 {
        let k = Rational64::from_integer(k);
        self.hilbert_polynomial.iter().rev().fold(Rational64::zero(), |acc, c| acc * k + c)
    }

    /// `dim_k (S/I)_k`, from the series expansion.
    pub fn hilbert_function(&self, k: usize) -> i64 {
        // coefficient of t^k in K(t) (1-t)^{-n} = Σ_i K_i binom(k - i + n - 1, n - 1)
        let n = self.nvars as i64;
        self.numerator
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i <= k)
            .map(|(i, &c)| c * binom(k as i64 - i as i64 + n - 1, n - 1))
            .sum()
    }

    /// Hilbert polynomial, highest degree first, e.g. `5t` or `t + 1`.
    pub fn polynomial_string(&self) -> String {
        struct P<'a>(&'a [Rational64]);
        impl fmt::Display for P<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_poly(f, self.0.to_vec(), true)
            }
        }
        P(&self.hilbert_polynomial).to_string()
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `HP(t) = Σ_i q_i binom(t - i + d - 1, d - 1)`, with `d` the Krull dimension.
fn hilbert_polynomial(q: &IntPoly, d: usize) -> Vec<Rational64> {
    if d == 0 {
        return vec![];
    }
    let m = d - 1;
    let mut fact = 1i64;
    for i in 1..=m as i64 {
        fact *= i;
    }
    let mut out = vec![Rational64::zero(); d];
    for (i, &qi) in q.coeffs().iter().enumerate() {
        if qi == 0 {
            continue;
        }
        // binom(x, m) with x = t - i + m, as a polynomial in t
        let mut b = vec![Rational64::one()];
        for r in 0..m as i64 {
            let shift = Rational64::from_integer(m as i64 - i as i64 - r);
            let mut nb = vec![Rational64::zero(); b.len() + 1];
            for (j, c) in b.iter().enumerate() {
                nb[j + 1] += *c;
                nb[j] += *c * shift;
            }
            b = nb;
        }
        for (j, c) in b.into_iter().enumerate() {
            out[j] += c * Rational64::new(qi, fact);
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

type Mon = [u16; MAX_VARS];

fn divides(a: &Mon, b: &Mon) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn degree(a: &Mon) -> usize {
    a.iter().map(|&e| e as usize).sum()
}

/// Removes non-minimal generators and sorts for use as a memo key.
fn minimalize(mut gens: Vec<Mon>) -> Vec<Mon> {
    gens.sort_by_key(degree);
    gens.dedup();
    let mut out: Vec<Mon> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

struct Pivot {
    memo: HashMap<Vec<Mon>, IntPoly>,
}

impl Pivot {
    fn numerator(&mut self, gens: Vec<Mon>) -> IntPoly {
        if gens.is_empty() {
            return IntPoly::one();
        }
        if gens.iter().any(|g| degree(g) == 0) {
            return IntPoly::default();
        }
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let mut counts = [0usize; MAX_VARS];
        for g in &gens {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
        let (var, &most) = counts.iter().enumerate().max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i))).unwrap();
        let result = if most <= 1 {
            // pairwise coprime
            gens.iter().fold(IntPoly::one(), |acc, g| acc.mul(&IntPoly::one_minus_power(degree(g))))
        } else {
            // pivot on var^e with e the median positive exponent
            let mut exps: Vec<u16> = gens.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
            exps.sort_unstable();
            let mut e = exps[exps.len() / 2];
            // var^e must stay outside the ideal for both branches to shrink
            if let Some(a) = gens.iter().filter(|g| degree(g) == g[var] as usize).map(|g| g[var]).min() {
                e = e.min(a - 1);
            }
            let mut p = [0u16; MAX_VARS];
            p[var] = e;
            let mut with_p = gens.clone();
            with_p.push(p);
            let quotient: Vec<Mon> = gens
                .iter()
                .map(|g| {
                    let mut h = *g;
                    h[var] = h[var].saturating_sub(e);
                    h
                })
                .collect();
            let a = self.numerator(minimalize(with_p));
            let b = self.numerator(minimalize(quotient));
            a.add(&b.shift(e as usize))
        };
        self.memo.insert(gens, result.clone());
        result
    }
}

/// Numerator `K(t)` of the Hilbert series of `S / <monomials>`, for
/// monomials given by exponent vectors of width at most 16.
pub fn monomial_ideal_numerator(monomials: &[Vec<u16>]) -> Result<IntPoly> {
    let mut gens = Vec::with_capacity(monomials.len());
    for m in monomials {
        if m.len() > MAX_VARS {
            return Err(Error::TooManyVariables(m.len()));
        }
        let mut a = [0u16; MAX_VARS];
        a[..m.len()].copy_from_slice(m);
        gens.push(a);
    }
    let mut pivot = Pivot { memo: HashMap::new() };
    Ok(pivot.numerator(minimalize(gens)))
}

/// Hilbert data of `S/I` for a homogeneous ideal.
pub fn hilbert(ideal: &Ideal) -> Result<HilbertData> {
    if ideal.is_unit() {
        return Ok(HilbertData::from_numerator(IntPoly::default(), ideal.ring().nvars()));
    }
    if let Some(index) = ideal.generators().iter().position(|g| !g.is_homogeneous()) {
        return Err(Error::Inhomogeneous { index });
    }
    let gb = ideal.groebner_basis();
    let lead: Vec<Vec<u16>> =
        gb.elements().iter().filter_map(|p| p.leading_monomial()).map(|m| m.exponents().to_vec()).collect();
    let numerator = monomial_ideal_numerator(&lead)?;
    Ok(HilbertData::from_numerator(numerator, ideal.ring().nvars()))
}

/// `Σ_h (-1)^h rank_h t^{twist_h}` for resolution terms given as
/// `(rank, twist, homological index)`.
pub fn resolution_hilbert_numerator(terms: &[(u64, u32, usize)]) -> IntPoly {
    let mut c: Vec<i64> = Vec::new();
    for &(rank, twist, h) in terms {
        let t = twist as usize;
        if c.len() <= t {
            c.resize(t + 1, 0);
        }
        let sign = if h % 2 == 0 { 1 } else { -1 };
        c[t] += sign * rank as i64;
    }
    IntPoly::new(c)
}
