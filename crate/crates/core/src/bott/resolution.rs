//! Cohomology of sheaves given by locally free resolutions on projective
//! space, term by term via Bott's theorem.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{bott_type_a, bott_type_c, BottOutcome};
use crate::error::{Error, Result};

/// The ambient projective space and the homogeneous bundle the weights
/// refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Space {
    /// `P^{N-1} = P(V*)` with `dim V = N`; weights are applied to the
    /// tautological quotient bundle `Q` of rank `N - 1`.
    A {
        #[serde(rename = "N")]
        n: usize,
    },
    /// `P^{2n-1}` for a symplectic space of dimension `2n`; weights are
    /// applied to `R^⊥/R` (rank `2n - 2`) as `Sp_{2n-2}` weights.
    C { n: usize },
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::A { n } => n - 1,
            Space::C { n } => 2 * n - 1,
        }
    }

    fn weight_len(self) -> usize {
        match self {
            Space::A { n } | Space::C { n } => n - 1,
        }
    }

    /// Line bundle weight on the flag variety for `S_λ(bundle)(d)`.
    ///
    /// Type A: `(d, -λ_{N-1}, ..., -λ_1)`. Type C: `(d, λ_1, ..., λ_{n-1})`.
    pub fn flag_weight(self, lambda: &[i64], twist: i64) -> Result<Vec<i64>> {
        let len = self.weight_len();
        if lambda.len() > len {
            return Err(Error::Usage(format!("weight {lambda:?} longer than {len}")));
        }
        let mut l = lambda.to_vec();
        l.resize(len, 0);
        let mut mu = vec![twist];
        match self {
            Space::A { .. } => mu.extend(l.iter().rev().map(|x| -x)),
            Space::C { .. } => mu.extend(l),
        }
        Ok(mu)
    }

    pub fn bott(self, mu: &[i64]) -> BottOutcome {
        match self {
            Space::A { .. } => bott_type_a(mu),
            Space::C { .. } => bott_type_c(mu),
        }
    }
}

/// `mult` copies of `S_weight(bundle)(twist)` in homological degree `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub weight: Vec<i64>,
    pub twist: i64,
    pub h: usize,
    #[serde(default = "one")]
    pub mult: u64,
}

fn one() -> u64 {
    1
}

impl ResolutionTerm {
    pub fn new(weight: &[i64], twist: i64, h: usize, mult: u64) -> Self {
        ResolutionTerm { weight: weight.to_vec(), twist, h, mult }
    }
}

/// A resolution together with its ambient space, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub space: Space,
    pub terms: Vec<ResolutionTerm>,
}

/// One line of the per-term log: the nonzero cohomology group, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub h: usize,
    pub weight: Vec<i64>,
    pub twist: i64,
    pub flag_weight: Vec<i64>,
    /// Cohomological degree `j` of the nonzero group.
    pub degree: Option<usize>,
    /// `mult · dim H^j`
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    /// `h^i` of the resolved sheaf for `i = 0..=dim`; `None` when the
    /// spectral sequence could not be shown to degenerate.
    pub entries: Option<Vec<u64>>,
    pub log: Vec<Contribution>,
    pub degeneration_verified: bool,
    /// Pairs of cells cancelled because one of them sits in negative total
    /// degree and has a single possible partner.
    pub forced_cancellations: Vec<((usize, usize), (usize, usize))>,
}

/// Can `d_r` (some `r ≥ 1`) connect cell `(h, j)` to cell `(h2, j2)`?
/// Cell `(h, j)` sits at `E_1^{-h, j}`; `d_r` goes to `E^{-h+r, j-r+1}`.
fn connects(src: (usize, usize), dst: (usize, usize)) -> bool {
    let (h, j) = src;
    let (h2, j2) = dst;
    h > h2 && j + 1 >= (h - h2) && j2 == j + 1 - (h - h2)
}

/// Runs the hypercohomology spectral sequence of the resolution.
///
/// `H^j(F_h)` contributes to `H^{j-h}` of the resolved sheaf. The table is
/// certified when no differential `d_r`, `r ≥ 1`, has both ends nonzero.
/// Before checking, a cell of negative total degree whose only possible
/// partner is a single cell of the same dimension (itself with no other
/// partner) is cancelled against it, since the limit vanishes there.
pub fn cohomology_of_resolution(space: Space, terms: &[ResolutionTerm]) -> Result<CohomologyTable> {
    let mut log = Vec::with_capacity(terms.len());
    let mut cells: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for t in terms {
        let mu = space.flag_weight(&t.weight, t.twist)?;
        let outcome = space.bott(&mu);
        let (degree, dimension) = match outcome.cohomology() {
            None => (None, 0),
            Some((j, d)) => {
                let d = d.to_u64().ok_or_else(|| Error::Guard("cohomology dimension overflows u64".into()))?;
                (Some(j), d * t.mult)
            }
        };
        if let Some(j) = degree {
            if dimension > 0 {
                *cells.entry((t.h, j)).or_insert(0) += dimension;
            }
        }
        log.push(Contribution { h: t.h, weight: t.weight.clone(), twist: t.twist, flag_weight: mu, degree, dimension });
    }

    let mut forced = Vec::new();
    loop {
        let keys: Vec<(usize, usize)> = cells.keys().copied().collect();
        let partners = |c: (usize, usize)| -> Vec<(usize, usize)> {
            keys.iter().copied().filter(|&o| o != c && (connects(c, o) || connects(o, c))).collect()
        };
        let pick = keys.iter().copied().find_map(|c| {
            if c.1 >= c.0 {
                return None;
            }
            let p = partners(c);
            if p.len() != 1 || cells[&p[0]] != cells[&c] || partners(p[0]).len() != 1 {
                return None;
            }
            Some((c, p[0]))
        });
        match pick {
            Some((a, b)) => {
                cells.remove(&a);
                cells.remove(&b);
                forced.push((a, b));
            }
            None => break,
        }
    }

    let keys: Vec<(usize, usize)> = cells.keys().copied().collect();
    let blocked = keys.iter().any(|&a| keys.iter().any(|&b| connects(a, b)));
    let negative = keys.iter().any(|&(h, j)| j < h);
    let degeneration_verified = !blocked && !negative;
    let entries = degeneration_verified.then(|| {
        let mut e = vec![0u64; space.dim() + 1];
        for (&(h, j), &d) in &cells {
            e[j - h] += d;
        }
        e
    });
    Ok(CohomologyTable { entries, log, degeneration_verified, forced_cancellations: forced })
}

/// `χ(F(k)) = Σ_j (-1)^j h^j(F(k))` of the resolved sheaf, as the
/// alternating sum over the terms (this needs no degeneration argument).
pub fn resolution_euler_characteristic(space: Space, terms: &[ResolutionTerm], k: i64) -> Result<i64> {
    let mut chi = 0i64;
    for t in terms {
        let mu = space.flag_weight(&t.weight, t.twist + k)?;
        if let Some((j, d)) = space.bott(&mu).cohomology() {
            let d = d.to_i64().ok_or_else(|| Error::Guard("dimension overflows i64".into()))?;
            let sign = if (j + t.h) % 2 == 0 { 1 } else { -1 };
            chi += sign * d * t.mult as i64;
        }
    }
    Ok(chi)
}

/// Resolution of the codimension-6 Pfaffian locus of a three-form on
/// `C^9`, restricted to `P^8` (weights on the rank-8 quotient bundle).
/// `h4_twist` is the twist of the second `S_{2,1^6}Q` term (degree 4).
pub fn w39_locus_resolution(h4_twist: i64) -> Vec<ResolutionTerm> {
    vec![
        ResolutionTerm::new(&[], 0, 0, 1),
        ResolutionTerm::new(&[1, 1, 1, 1, 1, 1], -3, 1, 1),
        ResolutionTerm::new(&[2, 1, 1, 1, 1, 1, 1], -4, 2, 1),
        ResolutionTerm::new(&[2], -4, 3, 1),
        ResolutionTerm::new(&[0, 0, 0, 0, 0, 0, 0, -2], -5, 3, 1),
        ResolutionTerm::new(&[2, 1, 1, 1, 1, 1, 1], h4_twist, 4, 1),
        ResolutionTerm::new(&[1, 1], -7, 5, 1),
        ResolutionTerm::new(&[], -9, 6, 1),
    ]
}

/// Resolution of the codimension-4 locus for a section of `∧^4_0 C^8`,
/// on `P^7`, with weights on `R^⊥/R`.
pub fn w48_locus_resolution() -> Vec<ResolutionTerm> {
    vec![
        ResolutionTerm::new(&[], 0, 0, 1),
        ResolutionTerm::new(&[1, 1, 1], -3, 1, 1),
        ResolutionTerm::new(&[2], -4, 2, 1),
        ResolutionTerm::new(&[1, 1], -6, 3, 1),
        ResolutionTerm::new(&[1], -7, 4, 1),
    ]
}

/// Koszul complex `∧^i V ⊗ O(-i)` on `P^{N-1}`, resolving zero.
pub fn koszul_resolution(n: usize) -> Vec<ResolutionTerm> {
    let mut binom = 1u64;
    (0..=n)
        .map(|i| {
            let t = ResolutionTerm::new(&[], -(i as i64), i, binom);
            binom = binom * (n - i) as u64 / (i as u64 + 1);
            t
        })
        .collect()
}

/// `h^0(SU_C(2), L^k)` for a curve of genus `g`, by the Verlinde formula
/// `((k+2)/2)^{g-1} Σ_{j=1}^{k+1} sin(πj/(k+2))^{2-2g}`.
pub fn verlinde(g: u32, k: u32) -> Result<u64> {
    if g < 2 || k < 1 {
        return Err(Error::Usage(format!("need g ≥ 2 and k ≥ 1, got g = {g}, k = {k}")));
    }
    let kk = k as f64 + 2.0;
    let sum: f64 = (1..=k + 1).map(|j| (std::f64::consts::PI * j as f64 / kk).sin().powi(2 - 2 * g as i32)).sum();
    let value = (kk / 2.0).powi(g as i32 - 1) * sum;
    let rounded = value.round();
    if (value - rounded).abs() > 1e-6 * rounded.max(1.0) {
        return Err(Error::Guard(format!("Verlinde sum {value} is not close to an integer")));
    }
    Ok(rounded as u64)
}
