use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// An element of `∧^k F^n`, stored by its nonzero coordinates on the basis
/// `e_S = e_{s1} ∧ ... ∧ e_{sk}` with `S` strictly increasing and 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingVector {
    field: PrimeField,
    n: usize,
    k: usize,
    coeffs: BTreeMap<Vec<usize>, u64>,
}

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub(crate) fn sort_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl AlternatingVector {
    pub fn zero(field: PrimeField, n: usize, k: usize) -> Self {
        AlternatingVector { field, n, k, coeffs: BTreeMap::new() }
    }

    /// Builds `Σ c · e_{i1} ∧ ... ∧ e_{ik}`; index lists need not be sorted
    /// (the wedge sign is applied).
    pub fn from_terms(field: PrimeField, n: usize, k: usize, terms: &[(Vec<usize>, i64)]) -> Result<Self> {
        let mut v = AlternatingVector::zero(field, n, k);
        for (idx, c) in terms {
            v.add_term(idx, field.from_i64(*c))?;
        }
        Ok(v)
    }

    /// Adds `c · e_{idx}`.
    pub fn add_term(&mut self, idx: &[usize], c: u64) -> Result<()> {
        if idx.len() != self.k {
            return Err(Error::Usage(format!("expected {} indices, got {}", self.k, idx.len())));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(Error::Usage(format!("index {bad} outside 1..={}", self.n)));
        }
        let mut key = idx.to_vec();
        let Some(sign) = sort_sign(&mut key) else {
            return Ok(());
        };
        let c = if sign < 0 { self.field.neg(c) } else { self.field.reduce(c) };
        let entry = self.coeffs.entry(key.clone()).or_insert(0);
        *entry = self.field.add(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&key);
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> u64 {
        self.coeffs.get(idx).copied().unwrap_or(0)
    }

    /// Nonzero coordinates in lexicographic order of the index sets.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], u64)> {
        self.coeffs.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn support(&self) -> Vec<Vec<usize>> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.field, self.n, self.k) != (other.field, other.n, other.k) {
            return Err(Error::Usage("alternating vectors of different shapes".into()));
        }
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(idx, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = AlternatingVector::zero(self.field, self.n, self.k);
        for (idx, v) in self.terms() {
            out.add_term(idx, self.field.mul(v, c)).expect("same shape");
        }
        out
    }

    /// `∧^k g` applied to this vector, for an `n×n` matrix `g` (row-major,
    /// `g[i][j]` the coefficient of `e_i` in `g e_j`, 0-based).
    pub fn transform(&self, g: &[Vec<u64>]) -> Self {
        let mut out = AlternatingVector::zero(self.field, self.n, self.k);
        for (idx, c) in self.terms() {
            // expand g e_{s1} ∧ ... ∧ g e_{sk}
            let mut partial: Vec<(Vec<usize>, u64)> = vec![(vec![], c)];
            for &s in idx {
                let mut next = Vec::new();
                for (pre, pc) in &partial {
                    for i in 1..=self.n {
                        let a = g[i - 1][s - 1];
                        if a == 0 || pre.contains(&i) {
                            continue;
                        }
                        let mut k = pre.clone();
                        k.push(i);
                        next.push((k, self.field.mul(*pc, a)));
                    }
                }
                partial = next;
            }
            for (k, v) in partial {
                out.add_term(&k, v).expect("indices in range");
            }
        }
        out
    }
}

impl fmt::Display for AlternatingVector {
    /// Bracket notation, e.g. `[1,2,3]+2[4,5,6]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.terms().enumerate() {
            let s = self.field.to_signed(c);
            if n > 0 {
                write!(f, "{}", if s < 0 { "-" } else { "+" })?;
            } else if s < 0 {
                write!(f, "-")?;
            }
            if s.abs() != 1 {
                write!(f, "{}", s.abs())?;
            }
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_sign_on_insertion() {
        let f = PrimeField::new(101).unwrap();
        let v = AlternatingVector::from_terms(f, 5, 3, &[(vec![2, 1, 3], 1)]).unwrap();
        assert_eq!(v.coeff(&[1, 2, 3]), 100);
        let w = AlternatingVector::from_terms(f, 5, 3, &[(vec![1, 1, 3], 1)]).unwrap();
        assert!(w.is_zero());
        assert_eq!(v.add(&v.scale(100)).unwrap(), AlternatingVector::zero(f, 5, 3));
    }

    #[test]
    fn transform_by_permutation() {
        let f = PrimeField::new(101).unwrap();
        let v = AlternatingVector::from_terms(f, 3, 2, &[(vec![1, 2], 1)]).unwrap();
        // swap e1 and e2
        let g = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
        assert_eq!(v.transform(&g).coeff(&[1, 2]), 100);
        assert_eq!(v.to_string(), "[1,2]");
    }
}
