//! The Schur functor as the image of comultiplication followed by
//! multiplication, built as an explicit matrix.

use std::collections::{BTreeMap, HashMap};

use super::Partition;
use crate::error::{Error, Result};
use crate::linalg::{rank_mod, reduce_signed, RANK_PRIME};

/// Largest source or target dimension the construction will build.
pub const CONSTRUCT_GUARD: u64 = 10_000;

/// A basis tensor of `S^{λ_1}E ⊗ ... ⊗ S^{λ_r}E`: one sorted multiset of
/// basis indices (1-based) per row.
pub type RowMonomial = Vec<Vec<usize>>;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All permutations of `0..k` with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in signed_permutations(k - 1) {
        // insert k-1 at position i; moving it left past (k-1-i) entries
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            let sign = if (k - 1 - i) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// Image of `∧^{c_1} ⊗ ... ⊗ ∧^{c_m}` basis element `columns` (column `j`
/// filled top to bottom with the listed vectors, 1-based) in
/// `S^{λ_1} ⊗ ... ⊗ S^{λ_r}`, with integer coefficients.
pub fn schur_image(lambda: &Partition, columns: &[Vec<usize>]) -> Result<BTreeMap<RowMonomial, i64>> {
    let conj = lambda.conjugate();
    if columns.len() != conj.len() || columns.iter().zip(conj.parts()).any(|(c, &h)| c.len() != h as usize) {
        return Err(Error::Usage(format!("column fillings do not match the shape {lambda}")));
    }
    let perms: Vec<Vec<(Vec<usize>, i64)>> = conj.parts().iter().map(|&h| signed_permutations(h as usize)).collect();
    let mut out: BTreeMap<RowMonomial, i64> = BTreeMap::new();
    // iterate over one permutation per column
    let mut choice = vec![0usize; columns.len()];
    loop {
        let mut rows: RowMonomial = vec![Vec::new(); lambda.len()];
        let mut sign = 1;
        for (j, col) in columns.iter().enumerate() {
            let (perm, s) = &perms[j][choice[j]];
            sign *= s;
            for (i, &p) in perm.iter().enumerate() {
                rows[i].push(col[p]);
            }
        }
        for r in &mut rows {
            r.sort_unstable();
        }
        *out.entry(rows).or_insert(0) += sign;
        // advance the mixed-radix counter
        let mut j = 0;
        loop {
            if j == choice.len() {
                out.retain(|_, c| *c != 0);
                return Ok(out);
            }
            choice[j] += 1;
            if choice[j] < perms[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// Strictly increasing `k`-subsets of `1..=n`.
fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of the explicit map `∧^{λ'_1}E ⊗ ... → S^{λ_1}E ⊗ ...` for
/// `E = F^n`, computed modulo a large prime. Equals `dim S_λ E`.
pub fn schur_module_construct(lambda: &Partition, n: usize) -> Result<usize> {
    let conj = lambda.conjugate();
    let source: u64 = conj.parts().iter().fold(1u64, |a, &h| a.saturating_mul(binom(n as u64, h as u64)));
    let target: u64 =
        lambda.parts().iter().fold(1u64, |a, &l| a.saturating_mul(binom(n as u64 + l as u64 - 1, l as u64)));
    if source > CONSTRUCT_GUARD || target > CONSTRUCT_GUARD {
        return Err(Error::Guard(format!(
            "Schur construction for {lambda} with n = {n} needs a {source}×{target} matrix"
        )));
    }
    if source == 0 {
        return Ok(0);
    }
    let column_bases: Vec<Vec<Vec<usize>>> = conj.parts().iter().map(|&h| increasing(n, h as usize)).collect();
    let mut index: HashMap<RowMonomial, usize> = HashMap::new();
    let mut sparse_rows: Vec<Vec<(usize, i64)>> = Vec::new();
    let mut choice = vec![0usize; column_bases.len()];
    loop {
        let columns: Vec<Vec<usize>> = choice.iter().zip(&column_bases).map(|(&c, b)| b[c].clone()).collect();
        let image = schur_image(lambda, &columns)?;
        let row = image
            .into_iter()
            .map(|(m, c)| {
                let next = index.len();
                (*index.entry(m).or_insert(next), c)
            })
            .collect();
        sparse_rows.push(row);
        let mut j = 0;
        loop {
            if j == choice.len() {
                let width = index.len();
                let dense = sparse_rows
                    .into_iter()
                    .map(|r| {
                        let mut d = vec![0u64; width];
                        for (k, c) in r {
                            d[k] = reduce_signed(c, RANK_PRIME);
                        }
                        d
                    })
                    .collect();
                return Ok(rank_mod(dense, RANK_PRIME));
            }
            choice[j] += 1;
            if choice[j] < column_bases[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}
