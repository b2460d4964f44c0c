//! Orbits of `GL_7` on `∧³C^7` via support configurations: tuples of
//! weight vectors `e_i ∧ e_j ∧ e_k` whose pairings match the simple roots
//! of a root subsystem.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{rank_mod, RANK_PRIME};
use crate::multilinear::AlternatingVector;

/// Strictly increasing 3-subset of `{1..7}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple([u8; 3]);

impl Triple {
    pub fn new(mut idx: [u8; 3]) -> Result<Triple> {
        idx.sort_unstable();
        if idx[0] == 0 || idx[2] > 7 || idx[0] == idx[1] || idx[1] == idx[2] {
            return Err(Error::Usage(format!("{idx:?} is not a 3-subset of 1..=7")));
        }
        Ok(Triple(idx))
    }

    pub fn indices(&self) -> [u8; 3] {
        self.0
    }

    /// All 35 triples in lexicographic order.
    pub fn all() -> Vec<Triple> {
        let mut out = Vec::with_capacity(35);
        for i in 1..=7 {
            for j in i + 1..=7 {
                for k in j + 1..=7 {
                    out.push(Triple([i, j, k]));
                }
            }
        }
        out
    }

    /// Image under a permutation of `{1..7}` given 0-based (`sigma[i-1]` is
    /// the image of `i`, also 0-based).
    pub fn permuted(&self, sigma: &[u8; 7]) -> Triple {
        let mut idx = self.0.map(|i| sigma[i as usize - 1] + 1);
        idx.sort_unstable();
        Triple(idx)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// The invariant form transported to weight vectors: `|S ∩ T| - 1`.
pub fn triple_pairing(s: &Triple, t: &Triple) -> i32 {
    s.0.iter().filter(|i| t.0.contains(i)).count() as i32 - 1
}

/// Root subsystems that occur as supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SupportType {
    A1,
    TwoA1,
    ThreeA1,
    FourA1,
    A2,
    A2A1,
    A2TwoA1,
    A2ThreeA1,
}

impl SupportType {
    pub const ALL: [SupportType; 8] = [
        SupportType::A1,
        SupportType::TwoA1,
        SupportType::ThreeA1,
        SupportType::FourA1,
        SupportType::A2,
        SupportType::A2A1,
        SupportType::A2TwoA1,
        SupportType::A2ThreeA1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SupportType::A1 => "A1",
            SupportType::TwoA1 => "2A1",
            SupportType::ThreeA1 => "3A1",
            SupportType::FourA1 => "4A1",
            SupportType::A2 => "A2",
            SupportType::A2A1 => "A2+A1",
            SupportType::A2TwoA1 => "A2+2A1",
            SupportType::A2ThreeA1 => "A2+3A1",
        }
    }

    /// `(has an A2 factor, number of A1 factors)`
    fn shape(self) -> (bool, usize) {
        match self {
            SupportType::A1 => (false, 1),
            SupportType::TwoA1 => (false, 2),
            SupportType::ThreeA1 => (false, 3),
            SupportType::FourA1 => (false, 4),
            SupportType::A2 => (true, 0),
            SupportType::A2A1 => (true, 1),
            SupportType::A2TwoA1 => (true, 2),
            SupportType::A2ThreeA1 => (true, 3),
        }
    }

    pub fn rank(self) -> usize {
        let (a2, a1) = self.shape();
        a1 + if a2 { 2 } else { 0 }
    }

    /// Gram matrix of the simple roots (all roots have squared length 2,
    /// so matching the ratios in the support condition is matching the
    /// pairings themselves). The A2 roots, if any, come first.
    pub fn gram(self) -> Vec<Vec<i32>> {
        let (a2, _) = self.shape();
        let r = self.rank();
        let mut g = vec![vec![0; r]; r];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        if a2 {
            g[0][1] = -1;
            g[1][0] = -1;
        }
        g
    }
}

impl fmt::Display for SupportType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SupportType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SupportType> {
        let norm: String =
            s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('₁', "1").replace('₂', "2");
        SupportType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::Unknown { kind: "support type", name: s.to_string() })
    }
}

/// Roots of `E_7` in weight coordinates on `Z^7`: degree 0 roots
/// `ε_a - ε_b`, degree ±1 roots `±(ε_i + ε_j + ε_k)` and degree ±2 roots
/// `±(ε_1 + ... + ε_7 - ε_m)`. The invariant form is
/// `(x, y) = x·y - s(x) s(y) / 9` with `s` the coordinate sum, which on
/// triples is [`triple_pairing`].
pub fn e7_roots() -> Vec<[i64; 7]> {
    let mut out = Vec::with_capacity(126);
    for a in 0..7 {
        for b in 0..7 {
            if a != b {
                let mut r = [0; 7];
                r[a] = 1;
                r[b] = -1;
                out.push(r);
            }
        }
    }
    for t in Triple::all() {
        let mut r = [0; 7];
        for i in t.0 {
            r[i as usize - 1] = 1;
        }
        out.push(r);
        out.push(r.map(|x| -x));
    }
    for m in 0..7 {
        let mut r = [1; 7];
        r[m] = 0;
        out.push(r);
        out.push(r.map(|x| -x));
    }
    out
}

fn weight_of(t: &Triple) -> [i64; 7] {
    let mut r = [0; 7];
    for i in t.0 {
        r[i as usize - 1] = 1;
    }
    r
}

fn rank_of(vectors: &[[i64; 7]]) -> usize {
    let rows =
        vectors.iter().map(|v| v.iter().map(|&x| crate::linalg::reduce_signed(x, RANK_PRIME)).collect()).collect();
    rank_mod(rows, RANK_PRIME)
}

/// Number of roots of the subsystem spanned by a support configuration
/// whose pairings are those of `ty` (2 per `A1` factor, 6 per `A2`).
fn root_count(ty_roots_a1: usize, a2: bool) -> usize {
    2 * ty_roots_a1 + if a2 { 6 } else { 0 }
}

/// A support is complete when no larger regular subalgebra of the same
/// rank contains it, i.e. when the only roots of `E_7` in the rational span
/// of its simple roots are its own roots.
pub fn is_complete(ty: SupportType, config: &[Triple]) -> bool {
    let basis: Vec<[i64; 7]> = config.iter().map(weight_of).collect();
    let r = rank_of(&basis);
    let inside = e7_roots()
        .into_iter()
        .filter(|root| {
            let mut with = basis.clone();
            with.push(*root);
            rank_of(&with) == r
        })
        .count();
    let (a2, a1) = ty.shape();
    inside == root_count(a1, a2)
}

/// Sorted list of triples, minimized over all of `S_7`.
pub fn canonical_form(config: &[Triple]) -> Vec<Triple> {
    let mut best: Option<Vec<Triple>> = None;
    for sigma in permutations7() {
        let mut img: Vec<Triple> = config.iter().map(|t| t.permuted(&sigma)).collect();
        img.sort_unstable();
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
    }
    best.unwrap_or_default()
}

/// All 5040 permutations of `0..7`.
pub fn permutations7() -> Vec<[u8; 7]> {
    let mut out = Vec::with_capacity(5040);
    let mut cur = [0u8; 7];
    fn go(k: usize, used: u8, cur: &mut [u8; 7], out: &mut Vec<[u8; 7]>) {
        if k == 7 {
            out.push(*cur);
            return;
        }
        for v in 0..7u8 {
            if used >> v & 1 == 0 {
                cur[k] = v;
                go(k + 1, used | 1 << v, cur, out);
            }
        }
    }
    go(0, 0, &mut cur, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportClasses {
    pub support_type: SupportType,
    /// Canonical representatives, sorted.
    pub representatives: Vec<Vec<Triple>>,
    /// Number of ordered tuples found with the first triple fixed to `[123]`.
    pub raw_tuples: usize,
    /// Classes satisfying the pairing conditions that were dropped because
    /// the support is not complete.
    pub incomplete: Vec<Vec<Triple>>,
}

impl SupportClasses {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }
}

/// All tuples of triples whose pairing matrix equals the Gram matrix of
/// `ty`, up to `S_7`. Since `S_7` is transitive on triples the first one is
/// fixed to `[123]`.
pub fn enumerate_supports(ty: SupportType) -> SupportClasses {
    let gram = ty.gram();
    let all = Triple::all();
    let mut classes: BTreeSet<Vec<Triple>> = BTreeSet::new();
    let mut raw = 0;
    let mut tuple = vec![Triple([1, 2, 3])];
    fn extend(
        tuple: &mut Vec<Triple>,
        gram: &[Vec<i32>],
        all: &[Triple],
        raw: &mut usize,
        classes: &mut BTreeSet<Vec<Triple>>,
    ) {
        let k = tuple.len();
        if k == gram.len() {
            *raw += 1;
            classes.insert(canonical_form(tuple));
            return;
        }
        for t in all {
            if (0..k).all(|i| triple_pairing(&tuple[i], t) == gram[i][k]) && triple_pairing(t, t) == gram[k][k] {
                tuple.push(*t);
                extend(tuple, gram, all, raw, classes);
                tuple.pop();
            }
        }
    }
    extend(&mut tuple, &gram, &all, &mut raw, &mut classes);
    let (representatives, incomplete) = classes.into_iter().partition(|c| is_complete(ty, c));
    SupportClasses { support_type: ty, representatives, raw_tuples: raw, incomplete }
}

/// Triples orthogonal to every triple of `base` (the ways to add one more
/// `A1` factor to a configuration of `A1`s).
pub fn orthogonal_completions(base: &[Triple]) -> Vec<Triple> {
    Triple::all().into_iter().filter(|t| !base.contains(t) && base.iter().all(|b| triple_pairing(b, t) == 0)).collect()
}

/// The orthogonal completions giving a complete `(k+1)A1` support.
pub fn complete_a1_completions(base: &[Triple]) -> Result<Vec<Triple>> {
    let ty = match base.len() + 1 {
        1 => SupportType::A1,
        2 => SupportType::TwoA1,
        3 => SupportType::ThreeA1,
        4 => SupportType::FourA1,
        n => return Err(Error::Usage(format!("no {n}A1 supports in this representation"))),
    };
    Ok(orthogonal_completions(base)
        .into_iter()
        .filter(|t| {
            let mut c = base.to_vec();
            c.push(*t);
            is_complete(ty, &c)
        })
        .collect())
}

/// Sum of the given triples with coefficient 1, over the rank-computation
/// prime.
pub fn support_vector(config: &[Triple]) -> AlternatingVector {
    let field = PrimeField::new(RANK_PRIME).expect("prime");
    let mut v = AlternatingVector::zero(field, 7, 3);
    for t in config {
        let idx: Vec<usize> = t.0.iter().map(|&i| i as usize).collect();
        v.add_term(&idx, 1).expect("valid triple");
    }
    v
}

/// Parses bracket notation: `[1,2,3]+[4,5,6]`, `[123]-2[145]`.
pub fn parse_brackets(s: &str, n: usize, field: PrimeField) -> Result<AlternatingVector> {
    let mut v = AlternatingVector::zero(field, n, 3);
    let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if body == "0" || body.is_empty() {
        return Ok(v);
    }
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg} in `{s}`") };
    let mut rest = body.as_str();
    while !rest.is_empty() {
        let (sign, r) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if rest.len() == body.len() => (1, rest),
            _ => return Err(bad("expected + or -")),
        };
        let open = r.find('[').ok_or_else(|| bad("missing ["))?;
        let close = r.find(']').ok_or_else(|| bad("missing ]"))?;
        let coeff: i64 =
            if open == 0 { 1 } else { r[..open].trim_end_matches('*').parse().map_err(|_| bad("bad coefficient"))? };
        let inner = &r[open + 1..close];
        let idx: Vec<usize> = if inner.contains(',') {
            inner.split(',').map(|x| x.parse().map_err(|_| bad("bad index"))).collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad index")))
                .collect::<Result<_>>()?
        };
        v.add_term(&idx, field.from_i64(sign * coeff))?;
        rest = &r[close + 1..];
    }
    Ok(v)
}

/// Dimension of the `GL_7`-orbit of `v`: the rank of `X ↦ X·v` on
/// `gl_7`, computed over `F_p` for the field of `v` (which should be
/// large so the rank matches characteristic zero).
pub fn orbit_dimension(v: &AlternatingVector) -> Result<usize> {
    let n = v.ambient();
    if v.degree() != 3 {
        return Err(Error::Usage("orbit dimension needs a three-form".into()));
    }
    let field = v.field();
    let p = field.modulus();
    let basis: Vec<Vec<usize>> = {
        let mut b = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    b.push(vec![i, j, k]);
                }
            }
        }
        b
    };
    let mut rows = Vec::with_capacity(n * n);
    for a in 1..=n {
        for b in 1..=n {
            // E_ab sends e_b to e_a, acting as a derivation on each slot
            let mut img = AlternatingVector::zero(field, n, 3);
            for (idx, c) in v.terms() {
                for slot in 0..3 {
                    if idx[slot] == b {
                        let mut t = idx.to_vec();
                        t[slot] = a;
                        img.add_term(&t, c)?;
                    }
                }
            }
            rows.push(basis.iter().map(|s| img.coeff(s)).collect());
        }
    }
    Ok(rank_mod(rows, p))
}

/// A row of the orbit table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub label: usize,
    /// `None` for the zero orbit.
    pub support_type: Option<SupportType>,
    pub representative: Vec<Triple>,
    pub expected_dimension: usize,
    pub dimension: usize,
}

impl OrbitRecord {
    pub fn verified(&self) -> bool {
        self.dimension == self.expected_dimension
    }

    pub fn representative_string(&self) -> String {
        if self.representative.is_empty() {
            return "0".into();
        }
        self.representative.iter().map(Triple::to_string).collect::<Vec<_>>().join("+")
    }
}

type TableRow = (Option<SupportType>, &'static [[u8; 3]], usize);

const TABLE: [TableRow; 10] = [
    (None, &[], 0),
    (Some(SupportType::A1), &[[1, 2, 3]], 13),
    (Some(SupportType::TwoA1), &[[1, 2, 3], [1, 4, 5]], 20),
    (Some(SupportType::ThreeA1), &[[1, 2, 3], [1, 4, 5], [1, 6, 7]], 21),
    (Some(SupportType::ThreeA1), &[[1, 2, 3], [1, 4, 5], [2, 4, 6]], 25),
    (Some(SupportType::A2), &[[1, 2, 3], [4, 5, 6]], 26),
    (Some(SupportType::FourA1), &[[1, 2, 3], [1, 4, 5], [1, 6, 7], [3, 5, 7]], 28),
    (Some(SupportType::A2A1), &[[1, 2, 3], [4, 5, 6], [1, 4, 7]], 31),
    (Some(SupportType::A2TwoA1), &[[1, 2, 3], [4, 5, 6], [1, 4, 7], [2, 5, 7]], 34),
    (Some(SupportType::A2ThreeA1), &[[1, 2, 3], [4, 5, 6], [1, 4, 7], [2, 5, 7], [3, 6, 7]], 35),
];

/// The ten orbits with their orbit dimensions recomputed.
pub fn orbit_table() -> Result<Vec<OrbitRecord>> {
    TABLE
        .iter()
        .enumerate()
        .map(|(label, &(support_type, triples, expected_dimension))| {
            let representative: Vec<Triple> = triples.iter().map(|&t| Triple(t)).collect();
            let dimension = orbit_dimension(&support_vector(&representative))?;
            Ok(OrbitRecord { label, support_type, representative, expected_dimension, dimension })
        })
        .collect()
}

/// Checks that the representative's triples realize its support type.
pub fn is_support_config(ty: SupportType, config: &[Triple]) -> bool {
    // the A2 pair, when present, must come first
    let gram = ty.gram();
    config.len() == gram.len()
        && (0..gram.len()).all(|i| (0..gram.len()).all(|j| triple_pairing(&config[i], &config[j]) == gram[i][j]))
}
