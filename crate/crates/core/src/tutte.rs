//! Tutte, Potts and characteristic polynomials of the underlying matroid.

use std::collections::BTreeMap;

use crate::algebra::rational::int;
use crate::algebra::{BiPoly, UniPoly};
use crate::coflow::Config;
use crate::error::{Error, Result};
use crate::matroid::OrientedMatroid;

/// `(rank(E) - rank(S), |S| - rank(S))` counted over all subsets S.
fn corank_nullity_counts(m: &OrientedMatroid, cfg: &Config) -> Result<BTreeMap<(u32, u32), i64>> {
    let work = 1u128 << m.len();
    if work > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { required: work, budget: cfg.budget });
    }
    let r = m.rank() as u32;
    let mut counts = BTreeMap::new();
    for s in 0..=m.ground() {
        let rs = m.rank_of(s) as u32;
        *counts.entry((r - rs, s.count_ones() - rs)).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `T(x, y) = sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))`.
pub fn tutte(m: &OrientedMatroid, cfg: &Config) -> Result<BiPoly> {
    let xm1 = &BiPoly::var(0) - &BiPoly::one();
    let ym1 = &BiPoly::var(1) - &BiPoly::one();
    let mut out = BiPoly::zero();
    for ((a, b), c) in corank_nullity_counts(m, cfg)? {
        out = out + (&xm1.pow(a) * &ym1.pow(b)).scale(&int(c));
    }
    Ok(out)
}

/// `P(q, y) = sum_S y^(|E|-|S|) (1-y)^|S| q^(r(E)-r(S))`.
pub fn potts(m: &OrientedMatroid, cfg: &Config) -> Result<BiPoly> {
    let work = 1u128 << m.len();
    if work > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { required: work, budget: cfg.budget });
    }
    let n = m.len() as u32;
    let r = m.rank() as u32;
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for s in 0..=m.ground() {
        *counts.entry((s.count_ones(), r - m.rank_of(s) as u32)).or_insert(0) += 1;
    }
    let y = BiPoly::var(1);
    let one_minus_y = &BiPoly::one() - &y;
    let mut out = BiPoly::zero();
    for ((k, c), count) in counts {
        let t = &(&y.pow(n - k) * &one_minus_y.pow(k)) * &BiPoly::monomial([c, 0], int(count));
        out = out + t;
    }
    Ok(out)
}

/// Characteristic polynomial `(-1)^r T(1-q, 0)`.
pub fn characteristic(m: &OrientedMatroid, cfg: &Config) -> Result<UniPoly> {
    let t = tutte(m, cfg)?;
    let q = UniPoly::var(0);
    let c = t.compose(&[&UniPoly::one() - &q, UniPoly::zero()]);
    Ok(if m.rank() % 2 == 1 { -c } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QMatrix;
    use crate::matroid::{Digraph, MatroidOptions};

    #[test]
    fn triangle_tutte() {
        let m = OrientedMatroid::from_digraph(&Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()).unwrap();
        let t = tutte(&m, &Config::default()).unwrap();
        let expected = BiPoly::from_terms([([2, 0], int(1)), ([1, 0], int(1)), ([0, 1], int(1))]);
        assert_eq!(t, expected);
        // Chromatic polynomial of a triangle divided by q: (q-1)(q-2).
        let chi = characteristic(&m, &Config::default()).unwrap();
        let q = UniPoly::var(0);
        assert_eq!(chi, &(&q - &UniPoly::int(1)) * &(&q - &UniPoly::int(2)));
    }

    #[test]
    fn uniform_matroid_tutte_and_potts() {
        let r = QMatrix::from_ints(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]], 4);
        let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
        let m = OrientedMatroid::from_matrix(&r, labels, MatroidOptions::assume_tu()).unwrap();
        let cfg = Config::default();
        let t = tutte(&m, &cfg).unwrap();
        let x2 = BiPoly::from_terms([([2, 0], int(1)), ([1, 0], int(2)), ([0, 1], int(2)), ([0, 2], int(1))]);
        assert_eq!(t, x2);
        let p = potts(&m, &cfg).unwrap();
        let expected = BiPoly::from_terms([
            ([2, 4], int(1)),
            ([1, 4], int(-4)),
            ([1, 3], int(4)),
            ([0, 4], int(3)),
            ([0, 3], int(-4)),
            ([0, 0], int(1)),
        ]);
        assert_eq!(p, expected);
    }
}
