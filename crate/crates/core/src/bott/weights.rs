use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::schur_dim;
use crate::error::{Error, Result};

/// Result of applying Bott's theorem to a line bundle on a flag variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum BottOutcome {
    /// All cohomology vanishes.
    Vanishes,
    /// Cohomology concentrated in one degree.
    Nonzero {
        degree: usize,
        dominant_weight: Vec<i64>,
        #[serde(serialize_with = "crate::bott::ser_big")]
        dimension: BigUint,
    },
}

impl BottOutcome {
    /// `(degree, dimension)` when nonzero.
    pub fn cohomology(&self) -> Option<(usize, &BigUint)> {
        match self {
            BottOutcome::Vanishes => None,
            BottOutcome::Nonzero { degree, dimension, .. } => Some((*degree, dimension)),
        }
    }
}

/// `ρ = (N-1, ..., 1, 0)`
pub fn rho_type_a(n: usize) -> Vec<i64> {
    (0..n as i64).rev().collect()
}

/// `ρ = (n, ..., 1)`
pub fn rho_type_c(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

/// Bott's theorem for `GL_N`: cohomology of the line bundle of weight
/// `alpha` on the full flag variety of `C^N`.
///
/// `alpha + ρ` with a repeated entry gives vanishing. Otherwise the unique
/// sorting permutation `w` has length equal to the number of inversions,
/// and the cohomology in that degree is the irreducible representation of
/// highest weight `sort(alpha + ρ) - ρ`.
pub fn bott_type_a(alpha: &[i64]) -> BottOutcome {
    let n = alpha.len();
    let rho = rho_type_a(n);
    let v: Vec<i64> = alpha.iter().zip(&rho).map(|(a, r)| a + r).collect();
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return BottOutcome::Vanishes;
    }
    let degree = (0..n).map(|i| (i + 1..n).filter(|&j| v[i] < v[j]).count()).sum();
    let dominant_weight: Vec<i64> = sorted.iter().zip(&rho).map(|(s, r)| s - r).collect();
    let dimension = schur_dim(&dominant_weight, n).expect("dominant weight");
    BottOutcome::Nonzero { degree, dominant_weight, dimension }
}

/// Number of positive roots of `C_n` pairing negatively with `v`; for a
/// regular `v` this is the length of the Weyl group element taking `v` to
/// the dominant chamber.
pub fn type_c_length(v: &[i64]) -> usize {
    let n = v.len();
    let mut len = 0;
    for i in 0..n {
        for j in i + 1..n {
            len += usize::from(v[i] < v[j]) + usize::from(v[i] + v[j] < 0);
        }
        len += usize::from(v[i] < 0);
    }
    len
}

/// Bott's theorem for `Sp_{2n}`: `alpha + ρ` with a zero entry or two
/// entries of equal absolute value gives vanishing; otherwise the degree is
/// the length of the signed permutation making it strictly decreasing and
/// positive, and the representation has highest weight
/// `sort(|alpha + ρ|) - ρ`.
pub fn bott_type_c(alpha: &[i64]) -> BottOutcome {
    let n = alpha.len();
    let rho = rho_type_c(n);
    let v: Vec<i64> = alpha.iter().zip(&rho).map(|(a, r)| a + r).collect();
    let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    if abs.last() == Some(&0) || abs.windows(2).any(|w| w[0] == w[1]) {
        return BottOutcome::Vanishes;
    }
    let dominant_weight: Vec<i64> = abs.iter().zip(&rho).map(|(s, r)| s - r).collect();
    let dimension = weyl_dim_type_c(&dominant_weight).expect("dominant weight");
    BottOutcome::Nonzero { degree: type_c_length(&v), dominant_weight, dimension }
}

/// Weyl dimension formula for `Sp_{2n}`, `n = lambda.len()`: the product
/// over positive roots `e_i ± e_j`, `2e_i` of `<λ+ρ, α> / <ρ, α>`.
pub fn weyl_dim_type_c(lambda: &[i64]) -> Result<BigUint> {
    if lambda.windows(2).any(|w| w[0] < w[1]) || lambda.last().is_some_and(|&x| x < 0) {
        return Err(Error::Usage(format!("{lambda:?} is not a dominant weight for Sp")));
    }
    let n = lambda.len();
    let rho = rho_type_c(n);
    let l: Vec<i64> = lambda.iter().zip(&rho).map(|(a, r)| a + r).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= ((l[i] - l[j]) * (l[i] + l[j])) as u64;
            den *= ((rho[i] - rho[j]) * (rho[i] + rho[j])) as u64;
        }
        num *= l[i] as u64;
        den *= rho[i] as u64;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_rho_a(v: &[i64]) -> Vec<i64> {
        v.iter().zip(rho_type_a(v.len())).map(|(a, r)| a - r).collect()
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(bott_type_a(&minus_rho_a(&[4, 7, 5, 4, 3, 2, 1, 0, -2])), BottOutcome::Vanishes);
        assert_eq!(
            bott_type_a(&minus_rho_a(&[5, 7, 6, 4, 3, 2, 1, 0, -1])),
            BottOutcome::Nonzero { degree: 2, dominant_weight: vec![-1; 9], dimension: BigUint::one() }
        );
        let dom = bott_type_a(&[2, 1, 0]);
        assert_eq!(dom.cohomology(), Some((0, &BigUint::from(8u32))));
    }

    #[test]
    fn type_c_examples() {
        assert_eq!(bott_type_c(&[-1, 0]), BottOutcome::Vanishes);
        assert_eq!(
            bott_type_c(&[-3, 1, 1, 1]),
            BottOutcome::Nonzero { degree: 3, dominant_weight: vec![0; 4], dimension: BigUint::one() }
        );
        assert_eq!(bott_type_c(&[1, 0, 0]).cohomology(), Some((0, &BigUint::from(6u32))));
    }

    #[test]
    fn symplectic_dimensions() {
        assert_eq!(weyl_dim_type_c(&[1, 1, 1]).unwrap(), BigUint::from(14u32));
        assert_eq!(weyl_dim_type_c(&[1, 0, 0]).unwrap(), BigUint::from(6u32));
        assert_eq!(weyl_dim_type_c(&[2, 0, 0]).unwrap(), BigUint::from(21u32));
        assert_eq!(weyl_dim_type_c(&[1, 1, 0]).unwrap(), BigUint::from(14u32));
    }
}
