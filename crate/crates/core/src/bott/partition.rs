use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; the parts must be weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Usage(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Cells `(i, j)`, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// `c(i, j) = j - i`
    pub fn content(&self, i: usize, j: usize) -> i64 {
        j as i64 - i as i64
    }

    /// `h(i, j) = λ_i - i + λ'_j - j + 1`
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let conj = self.conjugate();
        self.0[i - 1] + conj.0[j - 1] + 1 - i as u32 - j as u32
    }

    /// Rows of contents, e.g. `[[0,1,2,3],[-1,0,1],[-2]]` for `(4,3,1)`.
    pub fn content_rows(&self) -> Vec<Vec<i64>> {
        self.0.iter().enumerate().map(|(i, &p)| (1..=p as usize).map(|j| self.content(i + 1, j)).collect()).collect()
    }

    pub fn hook_rows(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| (1..=p as usize).map(|j| p + conj.0[j - 1] - i as u32 - j as u32).collect())
            .collect()
    }
}

impl fmt::Display for Partition {
    /// Exponent notation for repeated parts: `(2,1^4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            groups.push(if run == 1 { p.to_string() } else { format!("{p}^{run}") });
            i += run;
        }
        write!(f, "({})", groups.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1,1,1,1`, `2,1^4` or `(2,1^4)`.
    fn from_str(s: &str) -> Result<Partition> {
        parse_weight(s).and_then(|w| {
            let parts = w
                .into_iter()
                .map(|x| u32::try_from(x).map_err(|_| Error::Usage(format!("negative part {x} in a partition"))))
                .collect::<Result<Vec<_>>>()?;
            Partition::new(parts)
        })
    }
}

/// Parses a comma-separated integer sequence with optional `a^k`
/// repetition and optional surrounding parentheses.
pub fn parse_weight(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if t.is_empty() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for piece in t.split(',') {
        let piece = piece.trim();
        let bad = || Error::Usage(format!("cannot read `{piece}` as an integer or a^k"));
        let (base, reps) = match piece.split_once('^') {
            Some((b, k)) => (b.trim(), k.trim().parse::<usize>().map_err(|_| bad())?),
            None => (piece, 1),
        };
        let v: i64 = base.parse().map_err(|_| bad())?;
        out.extend(std::iter::repeat_n(v, reps));
    }
    Ok(out)
}

/// `dim S_λ C^n` by the hook content formula. `λ` may be any weakly
/// decreasing integer sequence with at most `n` entries (padded with zeros);
/// negative entries are handled by twisting with a power of the
/// determinant, which does not change the dimension. More than `n` nonzero
/// parts gives 0.
pub fn schur_dim(lambda: &[i64], n: usize) -> Result<BigUint> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Usage(format!("{lambda:?} is not weakly decreasing")));
    }
    let mut l = lambda.to_vec();
    while l.len() > n && l.last() == Some(&0) {
        l.pop();
    }
    if l.len() > n {
        if l.iter().all(|&x| x >= 0) {
            return Ok(BigUint::zero());
        }
        return Err(Error::Usage(format!("weight of length {} for GL_{n}", l.len())));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    l.resize(n, 0);
    let shift = *l.last().unwrap();
    let parts: Vec<u32> = l.iter().map(|&x| (x - shift) as u32).collect();
    let p = Partition::new(parts)?;
    Ok(hook_content(&p, n))
}

fn hook_content(p: &Partition, n: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in p.cells() {
        let c = n as i64 + p.content(i, j);
        if c <= 0 {
            return BigUint::zero();
        }
        num *= c as u64;
        den *= p.hook(i, j) as u64;
    }
    num / den
}
