//! Cocycles and the cocycle reversing system.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::rational::int;
use crate::algebra::{F2Space, UniPoly};
use crate::coflow::{even_char_polys, Config};
use crate::error::{Error, Result};
use crate::identities::{compare, is_regular, negative_controls, CheckReport, Q};
use crate::io::Instance;
use crate::matroid::signed::{Mask, SignedSubset};
use crate::matroid::OrientedMatroid;
use crate::tutte::tutte;

/// GF(2) span of the cocircuit supports.
pub fn cocycle_space(n: &OrientedMatroid) -> F2Space {
    F2Space::span(n.cocircuits().iter().map(|c| c.support()))
}

/// Every circuit meets `s` in an even number of elements.
pub fn has_even_circuit_intersections(n: &OrientedMatroid, s: Mask) -> bool {
    n.circuits().iter().all(|c| (c.support() & s).count_ones() % 2 == 0)
}

fn signed_intersection(c: &SignedSubset, s: Mask) -> i64 {
    (c.pos & s).count_ones() as i64 - (c.neg & s).count_ones() as i64
}

/// A disjoint union of positive cocircuits, tested against the fundamental circuits.
pub fn is_positive_cocycle(n: &OrientedMatroid, s: Mask) -> bool {
    let fundamental = n.fundamental_circuits(n.basis()).expect("the stored basis is a basis");
    fundamental.iter().all(|(_, c)| signed_intersection(c, s) == 0) && cocycle_space(n).contains(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    Cocycles,
    All,
}

impl std::str::FromStr for Universe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cocycles" => Ok(Universe::Cocycles),
            "all" => Ok(Universe::All),
            _ => Err(Error::InvalidArgument(format!("universe must be cocycles or all, not {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReorientationClasses {
    pub universe: Universe,
    /// Each class sorted, classes ordered by smallest member.
    pub classes: Vec<Vec<Mask>>,
    pub acyclic: Vec<bool>,
    /// False if some class mixes acyclic and non-acyclic reorientations.
    pub acyclicity_constant: bool,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// The smaller root wins, so each class is represented by its smallest index.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn is_positive_up_to_sign(c: &SignedSubset) -> bool {
    c.pos == 0 || c.neg == 0
}

/// Classes of reorientations `-S N` under reversal of positive cocircuits.
pub fn reorientation_classes(n: &OrientedMatroid, universe: Universe, cfg: &Config) -> Result<ReorientationClasses> {
    let members: Vec<Mask> = match universe {
        Universe::All => {
            let count = 1u128 << n.len();
            if count > cfg.budget as u128 {
                return Err(Error::BudgetExceeded { required: count, budget: cfg.budget });
            }
            (0..=n.ground()).collect()
        }
        Universe::Cocycles => {
            let space = cocycle_space(n);
            let count = 1u128 << space.dim();
            if count > cfg.budget as u128 {
                return Err(Error::BudgetExceeded { required: count, budget: cfg.budget });
            }
            space.elements()
        }
    };
    let index = |m: Mask| members.binary_search(&m).expect("the universe is closed under the moves");
    let cocircuits = n.cocircuits();
    let mut uf = UnionFind::new(members.len());
    for (i, &s) in members.iter().enumerate() {
        for d in &cocircuits {
            if is_positive_up_to_sign(&d.reorient(s)) {
                uf.union(i, index(s ^ d.support()));
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Mask>> = BTreeMap::new();
    for (i, &s) in members.iter().enumerate() {
        let root = uf.find(i);
        groups.entry(root).or_default().push(s);
    }
    let classes: Vec<Vec<Mask>> = groups.into_values().collect();
    let mut acyclicity_constant = true;
    let acyclic = classes
        .iter()
        .map(|c| {
            let flags: Vec<bool> = c.iter().map(|&s| n.reoriented_is_acyclic(s)).collect();
            acyclicity_constant &= flags.iter().all(|&f| f == flags[0]);
            flags[0]
        })
        .collect();
    Ok(ReorientationClasses { universe, classes, acyclic, acyclicity_constant })
}

impl ReorientationClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn acyclic_count(&self) -> usize {
        self.acyclic.iter().filter(|&&a| a).count()
    }
}

/// Half the signed intersection of `s` with each fundamental circuit; `None` if some entry is not an integer.
pub fn alpha_signature(fundamental: &[(usize, SignedSubset)], s: Mask) -> Option<Vec<i64>> {
    fundamental
        .iter()
        .map(|(_, c)| {
            let v = signed_intersection(c, s);
            (v % 2 == 0).then_some(v / 2)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaCounts {
    pub omega_geq: usize,
    pub omega_gt: usize,
}

/// Class counts over the cocycle universe by union-find.
pub fn omega_counts(n: &OrientedMatroid, cfg: &Config) -> Result<OmegaCounts> {
    let c = reorientation_classes(n, Universe::Cocycles, cfg)?;
    Ok(OmegaCounts { omega_geq: c.count(), omega_gt: c.acyclic_count() })
}

/// The same counts by grouping cocycles on their signature over the fundamental circuits.
pub fn omega_counts_by_signature(n: &OrientedMatroid) -> Result<OmegaCounts> {
    let fundamental = n.fundamental_circuits(n.basis())?;
    let mut groups: BTreeMap<Vec<i64>, bool> = BTreeMap::new();
    for s in cocycle_space(n).elements() {
        let sig = alpha_signature(&fundamental, s)
            .ok_or_else(|| Error::InvalidArgument("a cocycle has a half-integral signature".into()))?;
        let acyclic = n.reoriented_is_acyclic(s);
        *groups.entry(sig).or_insert(false) |= acyclic;
    }
    Ok(OmegaCounts { omega_geq: groups.len(), omega_gt: groups.values().filter(|&&a| a).count() })
}

fn flag(check: &str, name: &str, ok: bool) -> CheckReport {
    compare(check, name, &Q, &UniPoly::int(ok as i64), &UniPoly::one())
}

/// Class counts against Tutte evaluations and the even lattice polynomials, plus structural checks.
pub fn verify_class_counts(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let n = &inst.om;
    let name = inst.name.as_str();
    let space = cocycle_space(n);
    let parity_agrees = (0..=n.ground()).all(|s| space.contains(s) == has_even_circuit_intersections(n, s));
    let mut out = vec![flag("cocycle_space_matches_parity", name, parity_agrees)];

    let cocycles = reorientation_classes(n, Universe::Cocycles, cfg)?;
    let all = reorientation_classes(n, Universe::All, cfg)?;
    out.push(flag("acyclicity_is_class_invariant", name, cocycles.acyclicity_constant && all.acyclicity_constant));
    let by_uf = UniPoly::from_terms([([0], int(cocycles.count() as i64)), ([1], int(cocycles.acyclic_count() as i64))]);
    let sig = omega_counts_by_signature(n)?;
    let by_sig = UniPoly::from_terms([([0], int(sig.omega_geq as i64)), ([1], int(sig.omega_gt as i64))]);
    out.push(compare("class_counts_by_signature", name, &Q, &by_uf, &by_sig));

    let even = even_char_polys(n, cfg)?;
    let zero = [int(0)];
    let sign = if n.rank() % 2 == 0 { int(1) } else { int(-1) };
    out.push(compare(
        "classes_match_weak_even_at_zero",
        name,
        &Q,
        &UniPoly::int(cocycles.count() as i64),
        &UniPoly::constant(even.weak.eval(&zero)),
    ));
    out.push(compare(
        "acyclic_classes_match_strict_even_at_zero",
        name,
        &Q,
        &UniPoly::int(cocycles.acyclic_count() as i64),
        &UniPoly::constant(even.strict.eval(&zero) * sign),
    ));
    let t = tutte(n, cfg)?;
    out.push(compare(
        "all_classes_match_tutte_1_2",
        name,
        &Q,
        &UniPoly::int(all.count() as i64),
        &UniPoly::constant(t.eval(&[int(1), int(2)])),
    ));
    out.push(compare(
        "acyclic_classes_match_tutte_1_0",
        name,
        &Q,
        &UniPoly::int(all.acyclic_count() as i64),
        &UniPoly::constant(t.eval(&[int(1), int(0)])),
    ));

    // Transport: S positive for N and S' positive for -S N give S xor S' positive for N.
    let elements = space.elements();
    let positive: Vec<Mask> = elements.iter().copied().filter(|&s| is_positive_cocycle(n, s)).collect();
    let mut closed = true;
    for &s in &positive {
        let r = n.reorient(s);
        for &t in elements.iter().filter(|&&t| is_positive_cocycle(&r, t)) {
            closed &= is_positive_cocycle(n, s ^ t);
        }
    }
    out.push(flag("positive_cocycles_closed_under_transport", name, closed));
    Ok(out)
}
