//! Membership in pointed affine semigroups of `Z²` and their minimal generators.
//!
//! A separating form `P` (positive on every generator) bounds the search: a
//! representation of `g` uses each generator at most `P(g) / min P(gens)`
//! times. The search walks residuals `g − Σ λ_k·gens_k`, pruning those that
//! leave the cone or go below `P = 0`, and memoizes every residual it settles.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::hull::{pointed_cone, PointedCone};
use super::point::{ExponentSet, LatticePoint};
use crate::error::{Error, Result};

/// Decides membership in `Z_{≥0}·gens` for a fixed generating set.
pub struct SemigroupOracle {
    cone: PointedCone,
    /// Generators with their `P`-values, largest first.
    gens: Vec<(LatticePoint, BigInt)>,
    memo: HashMap<LatticePoint, bool>,
}

impl SemigroupOracle {
    pub fn new<'a>(gens: impl IntoIterator<Item = &'a LatticePoint>) -> Result<Self> {
        let gens: Vec<LatticePoint> = gens.into_iter().cloned().collect();
        let cone = pointed_cone(gens.iter()).ok_or(Error::OriginInHull)?;
        let mut gens: Vec<(LatticePoint, BigInt)> = gens
            .into_iter()
            .map(|g| {
                let v = cone.value(&g);
                (g, v)
            })
            .collect();
        gens.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        gens.dedup_by(|a, b| a.0 == b.0);
        Ok(SemigroupOracle {
            cone,
            gens,
            memo: HashMap::new(),
        })
    }

    fn admissible(&self, r: &LatticePoint) -> bool {
        self.cone.contains(r)
    }

    /// Whether `target` is a non-negative integer combination of the generators.
    /// The empty combination counts, so `0` is always a member.
    pub fn contains(&mut self, target: &LatticePoint) -> bool {
        if target.is_zero() {
            return true;
        }
        if let Some(&known) = self.memo.get(target) {
            return known;
        }
        if !self.admissible(target) {
            return false;
        }
        // explicit stack of (residual, P(residual), next generator to try)
        let mut stack: Vec<(LatticePoint, BigInt, usize)> =
            vec![(target.clone(), self.cone.value(target), 0)];
        while let Some(top) = stack.last_mut() {
            let k = top.2;
            if k == self.gens.len() {
                let (r, _, _) = stack.pop().expect("non-empty");
                self.memo.insert(r, false);
                continue;
            }
            top.2 += 1;
            let (g, gv) = &self.gens[k];
            if top.1 < *gv {
                continue;
            }
            let next = &top.0 - g;
            let found = if next.is_zero() {
                true
            } else {
                match self.memo.get(&next) {
                    Some(&known) => known,
                    None if !self.admissible(&next) => {
                        self.memo.insert(next, false);
                        false
                    }
                    None => {
                        let v = &top.1 - gv;
                        stack.push((next, v, 0));
                        continue;
                    }
                }
            };
            if found {
                for (r, _, _) in stack.drain(..) {
                    self.memo.insert(r, true);
                }
                return true;
            }
        }
        false
    }
}

/// Whether `g ∈ Z_{≥0}·gens`. Fails when the origin is in the hull of `gens`.
pub fn member(g: &LatticePoint, gens: &ExponentSet) -> Result<bool> {
    Ok(SemigroupOracle::new(gens.iter())?.contains(g))
}

/// The Hilbert basis of the pointed semigroup `Z_{≥0}·xs`: the points of `xs`
/// that are not generated by the others.
///
/// Points are scanned by increasing `P`-value. A point is reducible exactly
/// when it lies in the semigroup of the basis elements with smaller `P`, so
/// each test only searches over the (small) basis found so far.
pub fn minimal_generators(xs: &ExponentSet) -> Result<ExponentSet> {
    let cone = pointed_cone(xs.iter()).ok_or(Error::OriginInHull)?;
    let mut by_value: Vec<(BigInt, &LatticePoint)> =
        xs.iter().map(|p| (cone.value(p), p)).collect();
    by_value.sort();
    let mut basis: Vec<LatticePoint> = Vec::new();
    let mut start = 0;
    while start < by_value.len() {
        let level = &by_value[start].0;
        let end = start
            + by_value[start..]
                .iter()
                .take_while(|(v, _)| v == level)
                .count();
        let fresh: Vec<LatticePoint> = if basis.is_empty() {
            by_value[start..end]
                .iter()
                .map(|(_, p)| (*p).clone())
                .collect()
        } else {
            let mut oracle = SemigroupOracle::new(basis.iter())?;
            by_value[start..end]
                .iter()
                .filter(|(_, p)| !oracle.contains(p))
                .map(|(_, p)| (*p).clone())
                .collect()
        };
        basis.extend(fresh);
        start = end;
    }
    basis.sort();
    Ok(ExponentSet::from_sorted_unchecked(basis))
}

/// Whether two pointed generating sets generate the same semigroup.
pub fn same_semigroup(a: &ExponentSet, b: &ExponentSet) -> Result<bool> {
    let mut in_a = SemigroupOracle::new(a.iter())?;
    let mut in_b = SemigroupOracle::new(b.iter())?;
    Ok(b.iter().all(|p| in_a.contains(p)) && a.iter().all(|p| in_b.contains(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(pairs: &[(i64, i64)]) -> ExponentSet {
        ExponentSet::from_pairs(pairs).unwrap()
    }

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn member_examples() {
        assert!(member(&pt(-1, 2), &set(&[(-2, 1), (1, 0)])).unwrap());
        assert!(member(&pt(1, 1), &set(&[(1, 0), (0, 1)])).unwrap());
        assert!(!member(&pt(1, 1), &set(&[(2, 0), (0, 1)])).unwrap());
        assert!(member(&pt(0, 0), &set(&[(2, 0), (0, 1)])).unwrap());
        assert!(!member(&pt(-1, 0), &set(&[(2, 0), (0, 1)])).unwrap());
        assert_eq!(
            member(&pt(1, 1), &set(&[(1, 0), (-1, 0)])),
            Err(Error::OriginInHull)
        );
    }

    #[test]
    fn minimal_generator_examples() {
        let chart_12 = set(&[(-1, 2), (-1, 3), (-2, 1), (-2, 2), (1, 0), (2, 1)]);
        assert_eq!(
            minimal_generators(&chart_12).unwrap(),
            set(&[(-2, 1), (1, 0)])
        );
        let chart_13 = set(&[(1, 1), (2, -1), (0, 1), (1, 0), (0, 2)]);
        assert_eq!(
            minimal_generators(&chart_13).unwrap(),
            set(&[(0, 1), (1, 0), (2, -1)])
        );
        assert_eq!(
            minimal_generators(&set(&[(1, 0), (2, 0)])).unwrap(),
            set(&[(1, 0)])
        );
        assert_eq!(
            minimal_generators(&set(&[(1, 0), (-1, 0)])),
            Err(Error::OriginInHull)
        );
    }

    #[test]
    fn deep_search_does_not_overflow() {
        // a representation needs 10^5 copies of (1,0)
        let gens = set(&[(1, 0), (0, 1)]);
        assert!(member(&pt(100_000, 3), &gens).unwrap());
        assert!(!member(&pt(100_000, -1), &gens).unwrap());
    }

    /// Brute force: enumerate every coefficient vector with λ_k ≤ P(g)/P(gens_k)
    /// for a separating form found by small-coefficient search.
    fn brute_member(g: (i64, i64), gens: &[(i64, i64)]) -> bool {
        if g == (0, 0) {
            return true;
        }
        let (a, b) = (-20i64..=20)
            .flat_map(|a| (-20i64..=20).map(move |b| (a, b)))
            .find(|&(a, b)| gens.iter().all(|&(x, y)| a * x + b * y > 0))
            .expect("pointed");
        let p = |v: (i64, i64)| a * v.0 + b * v.1;
        if p(g) <= 0 {
            return false;
        }
        fn rec(
            k: usize,
            r: (i64, i64),
            gens: &[(i64, i64)],
            p: &dyn Fn((i64, i64)) -> i64,
        ) -> bool {
            if r == (0, 0) {
                return true;
            }
            if k == gens.len() || p(r) < 0 {
                return false;
            }
            let gk = gens[k];
            let max = p(r) / p(gk);
            (0..=max).any(|l| rec(k + 1, (r.0 - l * gk.0, r.1 - l * gk.1), gens, p))
        }
        rec(0, g, gens, &p)
    }

    fn pointed_pairs() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-8i64..=8, -8i64..=8), 1..=6).prop_filter("pointed", |v| {
            let pts: Vec<_> = v.iter().map(|&(x, y)| pt(x, y)).collect();
            v.iter().all(|&p| p != (0, 0)) && pointed_cone(pts.iter()).is_some()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn hilbert_basis_matches_brute_force(pairs in pointed_pairs()) {
            let xs = set(&pairs);
            let h = minimal_generators(&xs).unwrap();
            let pts: Vec<(i64, i64)> = xs.iter().map(|p| (i64::try_from(&p.x).unwrap(), i64::try_from(&p.y).unwrap())).collect();
            for (k, &g) in pts.iter().enumerate() {
                let others: Vec<_> = pts.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &q)| q).collect();
                let reducible = !others.is_empty() && brute_member(g, &others);
                prop_assert_eq!(h.contains(&pt(g.0, g.1)), !reducible, "point {:?} of {:?}", g, pts);
            }
        }

        #[test]
        fn hilbert_basis_is_idempotent_and_generates(pairs in pointed_pairs()) {
            let xs = set(&pairs);
            let h = minimal_generators(&xs).unwrap();
            prop_assert_eq!(minimal_generators(&h).unwrap(), h.clone());
            for p in xs.iter() {
                prop_assert!(member(p, &h).unwrap());
            }
            let mut rev = pairs.clone();
            rev.reverse();
            prop_assert_eq!(minimal_generators(&set(&rev)).unwrap(), h);
        }

        #[test]
        fn member_matches_brute_force(pairs in pointed_pairs(), g in (-8i64..=8, -8i64..=8)) {
            let xs = set(&pairs);
            let gens: Vec<(i64, i64)> = xs.iter().map(|p| (i64::try_from(&p.x).unwrap(), i64::try_from(&p.y).unwrap())).collect();
            prop_assert_eq!(member(&pt(g.0, g.1), &xs).unwrap(), brute_member(g, &gens));
        }
    }
}
