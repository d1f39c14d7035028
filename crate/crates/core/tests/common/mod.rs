#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_nash::lattice::{lattice_index, ExponentSet, LatticePoint};

pub fn set(pairs: &[(i64, i64)]) -> ExponentSet {
    ExponentSet::from_pairs(pairs).unwrap()
}

pub fn small(p: &LatticePoint) -> (i64, i64) {
    (i64::try_from(&p.x).unwrap(), i64::try_from(&p.y).unwrap())
}

/// Random sets in `Z × Z_{>0}` generating `Z²`: 3–6 distinct points,
/// `|x| ≤ 6`, `1 ≤ y ≤ 6`.
pub fn upper_corpus(seed: u64, n: usize) -> Vec<ExponentSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let k = rng.gen_range(3..=6);
        let pts: Vec<(i64, i64)> = (0..k)
            .map(|_| (rng.gen_range(-6..=6), rng.gen_range(1..=6)))
            .collect();
        let xs = set(&pts);
        if xs.len() >= 3 && lattice_index(&xs).is_one() {
            out.push(xs);
        }
    }
    out
}

/// A linear form with small integer coefficients strictly positive on all
/// points, found by exhaustive search.
pub fn small_separating_form(points: &[(i64, i64)]) -> Option<(i64, i64)> {
    (-20i64..=20)
        .flat_map(|a| (-20i64..=20).map(move |b| (a, b)))
        .find(|&(a, b)| points.iter().all(|&(x, y)| a * x + b * y > 0))
}

/// Whether `g` is a non-negative integer combination of `gens`, by
/// enumerating every coefficient vector allowed by a separating form.
pub fn brute_member(g: (i64, i64), gens: &[(i64, i64)]) -> bool {
    if g == (0, 0) {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let (a, b) = small_separating_form(gens).expect("pointed generators");
    let p = |v: (i64, i64)| a * v.0 + b * v.1;
    fn rec(k: usize, r: (i64, i64), gens: &[(i64, i64)], p: &dyn Fn((i64, i64)) -> i64) -> bool {
        if r == (0, 0) {
            return true;
        }
        if k == gens.len() || p(r) <= 0 {
            return false;
        }
        let gk = gens[k];
        (0..=p(r) / p(gk)).any(|l| rec(k + 1, (r.0 - l * gk.0, r.1 - l * gk.1), gens, p))
    }
    rec(0, g, gens, &p)
}

/// Hilbert basis by brute force: the points not generated by the others.
pub fn brute_hilbert(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = points
        .iter()
        .enumerate()
        .filter(|&(k, &g)| {
            let others: Vec<(i64, i64)> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &q)| q)
                .collect();
            !brute_member(g, &others)
        })
        .map(|(_, &g)| g)
        .collect();
    out.sort();
    out
}

/// Random non-empty point lists with coordinates in `[-8, 8]` whose origin
/// avoids the convex hull, at most six points.
pub fn pointed_lists(seed: u64, n: usize) -> Vec<Vec<(i64, i64)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let k = rng.gen_range(1..=6);
        let mut pts: Vec<(i64, i64)> = (0..k)
            .map(|_| (rng.gen_range(-8..=8), rng.gen_range(-8..=8)))
            .collect();
        pts.sort();
        pts.dedup();
        if pts.contains(&(0, 0)) {
            continue;
        }
        if small_separating_form(&pts).is_some() {
            out.push(pts);
        }
    }
    out
}

pub fn pow2(w: usize) -> BigInt {
    BigInt::one() << w
}
