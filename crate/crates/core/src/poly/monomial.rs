use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ring width supported by the packed exponent vector.
pub const MAX_VARS: usize = 16;

/// A monomial as a dense exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    n: u8,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], deg: 0, n: n as u8 }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            let e = u16::try_from(e).map_err(|_| Error::Usage(format!("exponent {e} too large")))?;
            m.exps[i] = e;
            m.deg += e as u32;
        }
        Ok(m)
    }

    /// `x_i^e` in a ring of width `n`.
    pub fn var(n: usize, i: usize, e: u16) -> Self {
        let mut m = Monomial::one(n);
        assert!(i < n, "variable index {i} out of range for width {n}");
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.n as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n, other.n);
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    /// Whether `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].min(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Same exponents viewed in a ring of another width. Exponents of
    /// dropped variables must be zero.
    pub fn with_width(&self, n: usize) -> Option<Monomial> {
        if n > MAX_VARS || self.exps[n.min(MAX_VARS)..].iter().any(|&e| e != 0) {
            return None;
        }
        let mut m = *self;
        m.n = n as u8;
        Some(m)
    }

    /// Exponent of variable `i` moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut m = *self;
        m.exps = [0; MAX_VARS];
        for (i, &j) in perm.iter().enumerate() {
            m.exps[j] = self.exps[i];
        }
        m
    }

    /// Bitmask for quick non-divisibility rejection: if `a | b` then
    /// `a.sev() & !b.sev() == 0`.
    #[inline]
    pub fn sev(&self) -> u64 {
        let mut s = 0u64;
        for i in 0..MAX_VARS {
            let e = self.exps[i].min(4) as u64;
            // set the lowest `e` of the four bits belonging to variable i
            s |= ((1u64 << e) - 1) << (4 * i);
        }
        s
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Graded reverse lexicographic comparison.
///
/// Higher total degree is larger; on ties the monomial with the smaller
/// exponent in the last variable where they differ is larger.
pub fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.n != b.n {
        return Err(Error::WidthMismatch(a.width(), b.width()));
    }
    Ok(TermOrder::DegRevLex.cmp(a, b))
}

/// Monomial orders understood by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    DegRevLex,
    /// Two-block product order: the variables in `drop` (a bitmask),
    /// compared by degrevlex among themselves, dominate; ties are broken by
    /// degrevlex on the remaining variables.
    Elimination {
        drop: u32,
    },
}

impl TermOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::DegRevLex => {
                match a.deg.cmp(&b.deg) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for i in (0..a.n as usize).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            TermOrder::Elimination { drop } => {
                let n = a.n as usize;
                match block_cmp(a, b, n, drop) {
                    Ordering::Equal => block_cmp(a, b, n, !drop),
                    o => o,
                }
            }
        }
    }

    pub fn is_elimination(&self) -> bool {
        matches!(self, TermOrder::Elimination { .. })
    }
}

#[inline]
fn block_cmp(a: &Monomial, b: &Monomial, n: usize, mask: u32) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    for i in 0..n {
        if mask >> i & 1 == 1 {
            da += a.exps[i] as u32;
            db += b.exps[i] as u32;
        }
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..n).rev() {
        if mask >> i & 1 == 1 && a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        // x1^2 > x1 x2
        assert_eq!(degrevlex_cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ok(Ordering::Greater));
        // x2^2 > x1 x3
        assert_eq!(degrevlex_cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ok(Ordering::Greater));
        assert_eq!(degrevlex_cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ok(Ordering::Equal));
        assert_eq!(degrevlex_cmp(&m(&[1, 2]), &m(&[1, 2, 0])), Err(Error::WidthMismatch(2, 3)));
    }

    fn all_monomials(n: usize, max_deg: u32) -> Vec<Monomial> {
        let mut out = vec![];
        let mut e = vec![0u32; n];
        loop {
            if e.iter().sum::<u32>() <= max_deg {
                out.push(m(&e));
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                e[i] += 1;
                if e[i] <= max_deg {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn degrevlex_is_total_and_multiplicative() {
        let mons = all_monomials(3, 4);
        for a in &mons {
            for b in &mons {
                let o = degrevlex_cmp(a, b).unwrap();
                assert_eq!(o == Ordering::Equal, a == b);
                assert_eq!(o.reverse(), degrevlex_cmp(b, a).unwrap());
                if o == Ordering::Greater {
                    for c in &mons {
                        assert_eq!(degrevlex_cmp(&a.mul(c), &b.mul(c)).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn elimination_order_prefers_dropped_block() {
        let ord = TermOrder::Elimination { drop: 0b100 };
        // t * x < t^2 even though degrees tie; t beats any pure x,y monomial
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 0, 2])), Ordering::Less);
        assert_eq!(ord.cmp(&m(&[2, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn sev_filters_divisibility() {
        let mons = all_monomials(3, 3);
        for a in &mons {
            for b in &mons {
                if a.divides(b) {
                    assert_eq!(a.sev() & !b.sev(), 0);
                }
            }
        }
    }
}
