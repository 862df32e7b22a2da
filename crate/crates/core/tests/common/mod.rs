#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_stiefel::matroid::Matroid;
use tropical_stiefel::subset::{k_subsets, Subset};
use tropical_stiefel::trop::{Trop, TropMatrix, TropPoint};
use tropical_stiefel::ValuatedMatroid;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_entry(rng: &mut ChaCha8Rng, inf_prob: f64) -> Trop {
    if rng.gen_bool(inf_prob) {
        Trop::Inf
    } else {
        let den = *[1i64, 1, 2].choose(rng).unwrap();
        Trop::frac(rng.gen_range(0..=3), den)
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize, inf_prob: f64) -> TropMatrix {
    loop {
        let rows: Vec<Vec<Trop>> = (0..d)
            .map(|_| (0..n).map(|_| random_entry(rng, inf_prob)).collect())
            .collect();
        if rows.iter().all(|r| r.iter().any(Trop::is_finite)) {
            return TropMatrix::new(rows).unwrap();
        }
    }
}

/// A random in-domain matrix whose Stiefel image is coloop-free with
/// `d < n`.
pub fn random_presented(rng: &mut ChaCha8Rng) -> (TropMatrix, ValuatedMatroid) {
    loop {
        let n = rng.gen_range(3..=6);
        let d = rng.gen_range(1..=3.min(n - 1));
        let a = random_matrix(rng, d, n, 0.25);
        let Ok(v) = a.stiefel() else { continue };
        if v.underlying().coloops().is_empty() {
            return (a, v);
        }
    }
}

/// Change one entry of the matrix.
pub fn perturb(rng: &mut ChaCha8Rng, a: &TropMatrix) -> TropMatrix {
    loop {
        let mut rows = a.entries().to_vec();
        let i = rng.gen_range(0..a.rows());
        let j = rng.gen_range(0..a.cols());
        let old = rows[i][j].clone();
        rows[i][j] = random_entry(rng, 0.3);
        if rows[i][j] == old || rows[i].iter().all(Trop::is_inf) {
            continue;
        }
        return TropMatrix::new(rows).unwrap();
    }
}

pub fn points(a: &TropMatrix) -> Vec<TropPoint> {
    a.row_points().unwrap()
}

pub fn presents(a: &TropMatrix, v: &ValuatedMatroid) -> bool {
    a.stiefel().ok().as_ref() == Some(v)
}

/// All matroids on `[n]`, `n ≤ 5`, up to nothing: every basis family
/// satisfying exchange.
pub fn all_matroids(n: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for d in 0..=n {
        let sets = k_subsets(n, d);
        assert!(sets.len() <= 20);
        for mask in 1u64..(1u64 << sets.len()) {
            let bases: Vec<Subset> = (0..sets.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| sets[k])
                .collect();
            if let Ok(m) = Matroid::new(n, bases) {
                out.push(m);
            }
        }
    }
    out
}

/// Like [`random_presented`], additionally without loops.
pub fn random_loopless(rng: &mut ChaCha8Rng) -> (TropMatrix, ValuatedMatroid) {
    loop {
        let (a, v) = random_presented(rng);
        if v.underlying().loops().is_empty() {
            return (a, v);
        }
    }
}
