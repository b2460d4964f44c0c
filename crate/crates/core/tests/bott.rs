mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use theta_loci_core::bott::{
    betti_totals, bott_type_a, bott_type_c, cohomology_of_resolution, gr36_resolution, rho_type_a, rho_type_c,
    schur_dim, schur_module_construct, type_c_length, w39_locus_resolution, w48_locus_resolution, BottOutcome,
    Partition, Space,
};

use common::{negate_last, swap_adjacent, word_lengths};

fn dominant(raw: Vec<i64>) -> Vec<i64> {
    let mut v = raw;
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn type_a_dotted_action(raw in prop::collection::vec(-5i64..=5, 4)) {
        let lambda = dominant(raw);
        let rho = rho_type_a(4);
        let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(l, r)| l + r).collect();
        for w in permutations(4) {
            // (w·v)_i = v_{w(i)}; w•λ = w(λ + ρ) - ρ
            let alpha: Vec<i64> = (0..4).map(|i| shifted[w[i]] - rho[i]).collect();
            match bott_type_a(&alpha) {
                BottOutcome::Nonzero { degree, dominant_weight, .. } => {
                    prop_assert_eq!(degree, inversions(&w));
                    prop_assert_eq!(&dominant_weight, &lambda);
                }
                BottOutcome::Vanishes => prop_assert!(false, "regular weight vanished"),
            }
        }
    }

    #[test]
    fn serre_duality_on_projective_space(n in 3usize..=5, raw in prop::collection::vec(-3i64..=3, 4), d in -8i64..=8) {
        let space = Space::A { n };
        let lambda = dominant(raw[..n - 1].to_vec());
        let dual: Vec<i64> = lambda.iter().rev().map(|x| -x).collect();
        let a = space.bott(&space.flag_weight(&lambda, d).unwrap());
        let b = space.bott(&space.flag_weight(&dual, -d - n as i64).unwrap());
        match (a.cohomology(), b.cohomology()) {
            (None, None) => {}
            (Some((i, x)), Some((j, y))) => {
                prop_assert_eq!(i + j, n - 1);
                prop_assert_eq!(x, y);
            }
            (x, y) => prop_assert!(false, "one side vanishes: {:?} vs {:?}", x, y),
        }
    }
}

#[test]
fn type_c_length_matches_word_length() {
    for n in 1..=3 {
        let rho = rho_type_c(n);
        let lengths = word_lengths(rho.clone(), &[swap_adjacent, negate_last], n);
        assert_eq!(lengths.len(), (1..=n).product::<usize>() << n, "order of the group of rank {n}");
        for (v, &len) in &lengths {
            assert_eq!(type_c_length(v), len, "w·ρ = {v:?}");
            let alpha: Vec<i64> = v.iter().zip(&rho).map(|(x, r)| x - r).collect();
            match bott_type_c(&alpha) {
                BottOutcome::Nonzero { degree, dominant_weight, dimension } => {
                    assert_eq!(degree, len);
                    assert!(dominant_weight.iter().all(|&x| x == 0));
                    assert_eq!(dimension, BigUint::from(1u32));
                }
                BottOutcome::Vanishes => panic!("regular weight {v:?} vanished"),
            }
        }
    }
}

#[test]
fn type_a_length_matches_word_length() {
    for n in 1..=5 {
        let rho = rho_type_a(n);
        let lengths = word_lengths(rho.clone(), &[swap_adjacent], n);
        assert_eq!(lengths.len(), (1..=n).product::<usize>());
        for (v, &len) in &lengths {
            let alpha: Vec<i64> = v.iter().zip(&rho).map(|(x, r)| x - r).collect();
            assert_eq!(bott_type_a(&alpha).cohomology().map(|(d, _)| d), Some(len));
        }
    }
}

#[test]
fn schur_construction_matches_hook_content() {
    for a in 0..=3u32 {
        for b in 0..=a {
            for c in 0..=b {
                let lambda = Partition::new(vec![a, b, c]).unwrap();
                for n in 1..=3 {
                    let rank = schur_module_construct(&lambda, n).unwrap();
                    let dim = schur_dim(&[a as i64, b as i64, c as i64], n).unwrap();
                    assert_eq!(BigUint::from(rank), dim, "λ = {lambda}, n = {n}");
                }
            }
        }
    }
}

#[test]
fn schur_dims_count_semistandard_tableaux() {
    // brute force: fillings of (4,3,1) with entries ≤ 3, rows weakly and columns strictly increasing
    let shape = [4usize, 3, 1];
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(i, &l)| (0..l).map(move |j| (i, j))).collect();
    let mut count = 0;
    let total = 3usize.pow(cells.len() as u32);
    for code in 0..total {
        let mut t = [[0usize; 4]; 3];
        let mut x = code;
        for &(i, j) in &cells {
            t[i][j] = x % 3 + 1;
            x /= 3;
        }
        let ok = cells.iter().all(|&(i, j)| (j == 0 || t[i][j - 1] <= t[i][j]) && (i == 0 || t[i - 1][j] < t[i][j]));
        count += usize::from(ok);
    }
    assert_eq!(count, 15);
    assert_eq!(schur_dim(&[4, 3, 1], 3).unwrap(), BigUint::from(15u32));
}

#[test]
fn grassmannian_betti_totals() {
    let totals: Vec<u64> =
        betti_totals(&gr36_resolution(), 6).unwrap().into_iter().map(|b| b.try_into().unwrap()).collect();
    assert_eq!(totals, vec![1, 35, 140, 301, 735, 1080, 735, 301, 140, 35, 1]);
}

#[test]
fn calibration_tables() {
    let t = cohomology_of_resolution(Space::A { n: 9 }, &w39_locus_resolution(-7)).unwrap();
    assert!(t.degeneration_verified);
    assert_eq!(t.entries.unwrap()[..3], [1, 2, 1]);
    let t = cohomology_of_resolution(Space::C { n: 4 }, &w48_locus_resolution()).unwrap();
    assert!(t.degeneration_verified);
    assert_eq!(t.entries.unwrap(), vec![1, 0, 3, 0, 0, 0, 0, 0]);
}
