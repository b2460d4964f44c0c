use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{AlternatingVector, Case, Section};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_polynomial, same_ring, Polynomial, Ring};

/// A skew-symmetric matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix {
    ring: Arc<Ring>,
    n: usize,
    entries: Vec<Polynomial>,
}

impl SkewMatrix {
    pub fn zero(ring: &Arc<Ring>, n: usize) -> Self {
        SkewMatrix { ring: ring.clone(), n, entries: vec![Polynomial::zero(ring); n * n] }
    }

    /// Validates skew-symmetry (including a zero diagonal).
    pub fn new(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        let mut m = SkewMatrix::zero(ring, n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Usage(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for (j, e) in row.into_iter().enumerate() {
                if !same_ring(e.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                m.entries[i * n + j] = e;
            }
        }
        for i in 0..n {
            for j in i..n {
                if m.entry(i, j) != &-m.entry(j, i) {
                    return Err(Error::NotSkew(i + 1, j + 1));
                }
            }
        }
        Ok(m)
    }

    /// Parses a matrix given row by row as polynomial strings.
    pub fn parse(ring: &Arc<Ring>, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(ring, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SkewMatrix::new(ring, rows)
    }

    /// Builds the matrix from its strictly upper triangle.
    pub fn from_upper(ring: &Arc<Ring>, n: usize, mut upper: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut m = SkewMatrix::zero(ring, n);
        for i in 0..n {
            for j in i + 1..n {
                let e = upper(i, j);
                m.entries[j * n + i] = -&e;
                m.entries[i * n + j] = e;
            }
        }
        m
    }

    /// Generic skew matrix in a fresh ring with variables `x_ij`, `i < j`.
    pub fn generic(p: u64, n: usize) -> Result<Self> {
        let mut names = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                names.push(format!("x_{i}{j}"));
            }
        }
        let ring = Ring::new(crate::field::PrimeField::new(p)?, names, crate::poly::TermOrder::DegRevLex)?;
        let mut k = 0;
        Ok(SkewMatrix::from_upper(&ring, n, |_, _| {
            k += 1;
            Polynomial::var(&ring, k - 1)
        }))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    /// Adds `x` at `(i, j)` and `-x` at `(j, i)`.
    fn place(&mut self, i: usize, j: usize, x: &Polynomial) {
        let n = self.n;
        self.entries[i * n + j] = &self.entries[i * n + j] + x;
        self.entries[j * n + i] = &self.entries[j * n + i] - x;
    }

    pub fn try_add(&self, other: &SkewMatrix) -> Result<SkewMatrix> {
        if self.n != other.n || !same_ring(&self.ring, &other.ring) {
            return Err(Error::Usage("matrices of different shapes".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.try_add(b)).collect::<Result<Vec<_>>>()?;
        Ok(SkewMatrix { ring: self.ring.clone(), n: self.n, entries })
    }

    /// Principal submatrix on the given 0-based indices.
    pub fn submatrix(&self, idx: &[usize]) -> SkewMatrix {
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.entry(i, j).clone());
            }
        }
        SkewMatrix { ring: self.ring.clone(), n: k, entries }
    }

    /// Same matrix with rows and columns moved: index `i` goes to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SkewMatrix {
        let n = self.n;
        let mut entries = vec![Polynomial::zero(&self.ring); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = self.entry(i, j).clone();
            }
        }
        SkewMatrix { ring: self.ring.clone(), n, entries }
    }
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format!("{:>width$}", cells[i * self.n + j])).collect();
            writeln!(f, "| {} |", row.join("  "))?;
        }
        Ok(())
    }
}

/// Pfaffians of principal submatrices, memoized on index subsets (as bit
/// masks) so that all submatrices of one matrix share work.
struct PfaffianMemo<'a> {
    m: &'a SkewMatrix,
    memo: HashMap<u32, Polynomial>,
}

impl<'a> PfaffianMemo<'a> {
    fn new(m: &'a SkewMatrix) -> Self {
        PfaffianMemo { m, memo: HashMap::new() }
    }

    /// Expansion along the first row: `Pf(S) = Σ_b ± m[a][b] Pf(S \ {a, b})`
    /// with `a = min S` and signs alternating from `+` over `b` in order.
    fn pf(&mut self, mask: u32) -> Polynomial {
        let ring = self.m.ring.clone();
        if mask == 0 {
            return Polynomial::one(&ring);
        }
        if mask.count_ones() % 2 == 1 {
            return Polynomial::zero(&ring);
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let a = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << a);
        let mut acc = Polynomial::zero(&ring);
        let mut positive = true;
        let mut bits = rest;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let e = self.m.entry(a, b);
            if !e.is_zero() {
                let minor = self.pf(rest & !(1 << b));
                let t = e * &minor;
                acc = if positive { acc + t } else { acc - t };
            }
            positive = !positive;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// The Pfaffian, normalized so that `Pf([[0, a], [-a, 0]]) = a`; zero for
/// odd size.
pub fn pfaffian(m: &SkewMatrix) -> Polynomial {
    if m.n > 32 {
        panic!("Pfaffian of a {}×{} matrix is out of reach", m.n, m.n);
    }
    let full = if m.n == 32 { u32::MAX } else { (1u32 << m.n) - 1 };
    PfaffianMemo::new(m).pf(full)
}

/// Ideal of the Pfaffians of all principal `size × size` submatrices.
pub fn pfaffian_ideal(m: &SkewMatrix, size: usize) -> Result<Ideal> {
    if size % 2 == 1 {
        return Err(Error::Usage(format!("Pfaffians have even size, got {size}")));
    }
    if size > m.n {
        return Err(Error::Usage(format!("size {size} exceeds matrix size {}", m.n)));
    }
    let mut memo = PfaffianMemo::new(m);
    let mut gens = Vec::new();
    for mask in subsets(m.n, size) {
        let p = memo.pf(mask);
        if !p.is_zero() {
            gens.push(p);
        }
    }
    Ideal::new(&m.ring, gens)
}

/// `k`-subsets of `0..n` as bit masks, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<u32> {
    fn go(start: usize, n: usize, k: usize, mask: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..=n - k {
            go(i + 1, n, k - 1, mask | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    go(0, n, k, 0, &mut out);
    out
}

/// The `8×8` matrix of a three-form `v` on `C^9`, in the ring
/// `F_p[z_1..z_9]`. Rows and columns are indexed by `{1..9} \ {chart}`.
///
/// A triple `i < j < k` avoiding the chart index contributes `-z_k` at
/// `(i, j)`, `z_j` at `(i, k)` and `-z_i` at `(j, k)` (with the opposite
/// signs below the diagonal). A triple containing the chart index only
/// contributes the entry whose row and column avoid it.
pub fn w39_matrix(v: &AlternatingVector, chart: usize) -> Result<SkewMatrix> {
    if v.ambient() != 9 || v.degree() != 3 {
        return Err(Error::Usage("expected a three-form on a 9-dimensional space".into()));
    }
    if !(1..=9).contains(&chart) {
        return Err(Error::Usage(format!("chart index {chart} outside 1..=9")));
    }
    let field = v.field();
    let ring = Ring::standard(field.modulus(), 9)?;
    let z = |i: usize| Polynomial::var(&ring, i - 1);
    let slot = |i: usize| if i < chart { i - 1 } else { i - 2 };
    let mut m = SkewMatrix::zero(&ring, 8);
    for (idx, c) in v.terms() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let c = c as i64;
        match idx.iter().position(|&s| s == chart) {
            None => {
                m.place(slot(i), slot(j), &z(k).scale(-c));
                m.place(slot(i), slot(k), &z(j).scale(c));
                m.place(slot(j), slot(k), &z(i).scale(-c));
            }
            Some(pos) => {
                let rest: Vec<usize> = idx.iter().copied().filter(|&s| s != chart).collect();
                let sign = if pos == 1 { 1 } else { -1 };
                m.place(slot(rest[0]), slot(rest[1]), &z(chart).scale(sign * c));
            }
        }
    }
    Ok(m)
}

/// `Σ_a z_a M_a` for a section of `A ⊗ ∧²B`, where `M_a` is the constant
/// skew matrix with `(i, j)` entry the coefficient of `e_a ⊗ e_i ∧ e_j`.
pub fn c5w25_matrix(section: &Section) -> Result<SkewMatrix> {
    if section.case != Case::C5w25 {
        return Err(Error::Usage(format!("expected a c5w25 section, got {}", section.case)));
    }
    section.validate()?;
    let ring = Ring::standard(section.prime, 5)?;
    let mut m = SkewMatrix::zero(&ring, 5);
    for t in &section.terms {
        let [a, i, j] = t.indices;
        let x = Polynomial::var(&ring, a - 1).scale_mod(t.coeff);
        m.place(i - 1, j - 1, &x);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn two_by_two_anchor() {
        let m = SkewMatrix::generic(101, 2).unwrap();
        assert_eq!(pfaffian(&m).to_string(), "x_12");
    }

    #[test]
    fn generic_four_by_four() {
        let m = SkewMatrix::generic(101, 4).unwrap();
        let r = m.ring().clone();
        let expected = parse_polynomial(&r, "x_12*x_34 - x_13*x_24 + x_14*x_23").unwrap();
        assert_eq!(pfaffian(&m), expected);
    }

    #[test]
    fn odd_size_vanishes() {
        let m = SkewMatrix::generic(101, 5).unwrap();
        assert!(pfaffian(&m).is_zero());
        assert_eq!(pfaffian_ideal(&m, 4).unwrap().generators().len(), 5);
        assert!(pfaffian_ideal(&m, 3).is_err());
    }

    #[test]
    fn rejects_non_skew() {
        let r = Ring::standard(101, 2).unwrap();
        assert_eq!(SkewMatrix::parse(&r, &[&["0", "z_1"], &["z_1", "0"]]).unwrap_err(), Error::NotSkew(1, 2));
        assert!(SkewMatrix::parse(&r, &[&["z_1", "0"], &["0", "0"]]).is_err());
    }

    #[test]
    fn basic_three_form_matrices() {
        let f = PrimeField::new(101).unwrap();
        let v = AlternatingVector::from_terms(f, 9, 3, &[(vec![5, 6, 7], 1)]).unwrap();
        let m = w39_matrix(&v, 9).unwrap();
        assert_eq!(m.entry(4, 5).to_string(), "-z_7");
        assert_eq!(m.entry(4, 6).to_string(), "z_6");
        assert_eq!(m.entry(5, 6).to_string(), "-z_5");
        assert_eq!(m.entry(6, 4).to_string(), "-z_6");
        let nonzero =
            (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).filter(|&(i, j)| !m.entry(i, j).is_zero()).count();
        assert_eq!(nonzero, 6);

        let v = AlternatingVector::from_terms(f, 9, 3, &[(vec![1, 2, 9], 1)]).unwrap();
        let m = w39_matrix(&v, 9).unwrap();
        assert_eq!(m.entry(0, 1).to_string(), "-z_9");
        assert_eq!(m.entry(1, 0).to_string(), "z_9");
        let nonzero =
            (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).filter(|&(i, j)| !m.entry(i, j).is_zero()).count();
        assert_eq!(nonzero, 2);

        let zero = AlternatingVector::zero(f, 9, 3);
        assert_eq!(w39_matrix(&zero, 9).unwrap(), SkewMatrix::zero(&Ring::standard(101, 9).unwrap(), 8));
    }

    #[test]
    fn single_term_c5w25() {
        let s = Section {
            prime: 101,
            case: Case::C5w25,
            terms: vec![super::super::SectionTerm { indices: [1, 1, 2], coeff: 1 }],
        };
        let m = c5w25_matrix(&s).unwrap();
        assert_eq!(m.entry(0, 1).to_string(), "z_1");
        assert_eq!(m.entry(1, 0).to_string(), "-z_1");
    }
}
