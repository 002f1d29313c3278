//! Machine checks of the A-polynomial identities. Each check computes both
//! sides along separate routes (enumeration on one side, substitution into
//! an interpolated polynomial on the other) and compares them exactly.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::rational::{frac, int, pow};
use crate::algebra::{homog_substitute, BiPoly, Eisenstein, HomogMode, Poly, Rational, TriPoly, TuStatus, UniPoly};
use crate::coflow::{
    a_eval, a_even_poly, a_poly_cached, b_poly, brute_coflow_histogram, char_polys, coflow_histogram, digraph_a_eval,
    specialize_q, CharPolys, Config,
};
use crate::error::{Error, Result};
use crate::io::{poly_to_json, Instance};
use crate::matroid::oriented::DEFAULT_EXHAUSTIVE_LIMIT;
use crate::matroid::signed::{compress, elements, full, Mask};
use crate::matroid::{Digraph, OrientedMatroid};
use crate::tutte::{characteristic, potts, tutte};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An identity that must fail on this input did fail.
    Xfail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub lhs: Value,
    pub rhs: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Turns a check that must fail into `Xfail`, and an unexpected pass into a failure.
    pub fn expect_failure(mut self) -> Self {
        match self.status {
            Status::Fail => self.status = Status::Xfail,
            _ => {
                self.status = Status::Fail;
                self.witness = Some(json!("identity held where it must fail"));
            }
        }
        self
    }
}

pub const TRI: [&str; 3] = ["q", "y", "z"];
pub const QY: [&str; 2] = ["q", "y"];
pub const YZ: [&str; 2] = ["y", "z"];
pub const XY: [&str; 2] = ["x", "y"];
pub const Q: [&str; 1] = ["q"];
pub const QUAD: [&str; 4] = ["q", "y", "z", "w"];

pub fn compare<const N: usize>(check: &str, instance: &str, vars: &[&str; N], lhs: &Poly<N>, rhs: &Poly<N>) -> CheckReport {
    let witness = lhs.first_difference(rhs).map(|e| json!(e.to_vec()));
    CheckReport {
        check: check.to_string(),
        instance: instance.to_string(),
        lhs: poly_to_json(lhs, vars),
        rhs: poly_to_json(rhs, vars),
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
    }
}

/// Pointwise comparison; the witness is the index of the first disagreeing point.
pub fn compare_points<T: PartialEq + std::fmt::Debug>(
    check: &str,
    instance: &str,
    points: &[String],
    lhs: &[T],
    rhs: &[T],
) -> CheckReport {
    let bad = lhs.iter().zip(rhs).position(|(a, b)| a != b);
    let show = |v: &[T]| json!(v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>());
    CheckReport {
        check: check.to_string(),
        instance: instance.to_string(),
        lhs: show(lhs),
        rhs: show(rhs),
        status: if bad.is_none() { Status::Pass } else { Status::Fail },
        witness: bad.map(|i| json!({"point": points[i]})),
    }
}

/// `false` when the representation has a square submatrix with determinant outside {-1, 0, 1}.
pub fn is_regular(om: &OrientedMatroid) -> bool {
    !matches!(om.rep().tu_status(DEFAULT_EXHAUSTIVE_LIMIT), TuStatus::Violated { .. } | TuStatus::NonIntegral { .. })
}

/// For a non-regular input: the coflow count is not the Potts polynomial, and the
/// basis extension does not produce coflows. Both must fail.
pub fn negative_controls(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    let om = &inst.om;
    let q = 3;
    let brute = brute_coflow_histogram(om, q, cfg)?;
    let mut counted = BiPoly::zero();
    for (&(g, l), &c) in &brute.counts {
        counted.add_term([0, (g + l) as u32], int(c as i64));
    }
    let p = specialize_q_bi(&potts(om, cfg)?, &int(q as i64));
    let mut out = vec![compare("potts_counts_coflows_q3", &inst.name, &QY, &counted, &p).expect_failure()];
    let ext = coflow_histogram(om, q, cfg)?;
    out.push(
        compare("basis_extension_counts_coflows_q3", &inst.name, &YZ, &ext.to_bipoly(), &brute.to_bipoly()).expect_failure(),
    );
    Ok(out)
}

fn specialize_q_bi(p: &BiPoly, q0: &Rational) -> BiPoly {
    BiPoly::from_terms(p.terms().map(|(e, c)| ([0, e[1]], c * pow(q0, e[0]))))
}

fn tq() -> TriPoly {
    TriPoly::var(0)
}
fn ty() -> TriPoly {
    TriPoly::var(1)
}
fn tz() -> TriPoly {
    TriPoly::var(2)
}

/// `1 + ((q-1)/2)(y+z)`, the contribution of a coloop.
pub fn coloop_factor() -> TriPoly {
    let half = (&tq() - &TriPoly::one()).scale(&frac(1, 2));
    &TriPoly::one() + &(&half * &(&ty() + &tz()))
}

fn lift(u: &UniPoly, qshift: u32, ys: u32, zs: u32, coef: &Rational) -> TriPoly {
    TriPoly::from_terms(u.terms().map(|(e, c)| ([e[0] + qshift, ys, zs], c * coef)))
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn char_polys_cached(om: &OrientedMatroid, cfg: &Config) -> Result<CharPolys> {
    static CACHE: OnceLock<Mutex<HashMap<String, CharPolys>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = om.key();
    if let Some(c) = cache.lock().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let c = char_polys(om, cfg)?;
    cache.lock().unwrap().insert(key, c.clone());
    Ok(c)
}

fn require_partitions(om: &OrientedMatroid, cfg: &Config) -> Result<()> {
    let work = 3u128.pow(om.len() as u32);
    if work > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { required: work, budget: cfg.budget });
    }
    Ok(())
}

/// Elementary properties: symmetry, refinements by zero values, loops,
/// coloops, direct sums, and the coloring formula for digraphs.
pub fn verify_basic(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let n = &inst.om;
    let name = inst.name.as_str();
    let size = n.len() as u32;
    let a = a_poly_cached(n, cfg)?;
    let mut out = vec![compare("symmetry", name, &TRI, &a, &a.compose(&[tq(), tz(), ty()]))];
    for q in [3u64, 5] {
        let h = coflow_histogram(n, q, cfg)?;
        let aq = specialize_q(&a, &int(q as i64));
        out.push(compare(
            &format!("coflow_total_q{q}"),
            name,
            &Q,
            &UniPoly::int(h.total() as i64),
            &UniPoly::int((q as i64).pow(n.rank() as u32)),
        ));
        // Refinement by the number of zero values, with x in the first slot.
        let mut lhs = TriPoly::zero();
        let mut lhs_weak = BiPoly::zero();
        for (&(g, l), &c) in &h.counts {
            let zeros = size - (g + l) as u32;
            lhs.add_term([zeros, g as u32, l as u32], int(c as i64));
            lhs_weak.add_term([g as u32 + zeros, l as u32 + zeros], int(c as i64));
        }
        let rhs = TriPoly::from_terms(aq.terms().map(|(e, c)| ([size - e[0] - e[1], e[0], e[1]], c.clone())));
        out.push(compare(&format!("zero_refinement_q{q}"), name, &["x", "y", "z"], &lhs, &rhs));
        let rhs_weak = BiPoly::from_terms(aq.terms().map(|(e, c)| ([size - e[0], size - e[1]], c.clone())));
        out.push(compare(&format!("weak_refinement_q{q}"), name, &YZ, &lhs_weak, &rhs_weak));
    }
    out.push(compare("empty", name, &TRI, &a_poly_cached(&n.delete(n.ground()), cfg)?, &TriPoly::one()));
    for e in 0..n.len() {
        let label = n.label(e);
        if n.is_loop(e) {
            out.push(compare(&format!("loop[{label}]"), name, &TRI, &a, &a_poly_cached(&n.delete(1 << e), cfg)?));
        }
        if n.is_coloop(e) {
            let rhs = &coloop_factor() * &a_poly_cached(&n.contract(1 << e), cfg)?;
            out.push(compare(&format!("coloop[{label}]"), name, &TRI, &a, &rhs));
        }
    }
    let arc = OrientedMatroid::from_digraph(&Digraph::new(2, vec![(0, 1)])?)?;
    let lp = OrientedMatroid::from_digraph(&Digraph::new(1, vec![(0, 0)])?)?;
    let tri = OrientedMatroid::from_digraph(&Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)])?)?;
    for (tag, other) in [("coloop", &arc), ("loop", &lp), ("triangle", &tri)] {
        if n.len() + other.len() > crate::matroid::oriented::DEFAULT_GROUND_LIMIT {
            continue;
        }
        let sum = n.direct_sum(other);
        let rhs = &a * &a_poly_cached(other, cfg)?;
        out.push(compare(&format!("direct_sum[{tag}]"), name, &TRI, &a_poly_cached(&sum, cfg)?, &rhs));
    }
    if let Some(d) = &inst.digraph {
        for q in [1u64, 3, 5] {
            out.push(compare(&format!("coloring_formula_q{q}"), name, &YZ, &digraph_a_eval(d, q, cfg)?, &a_eval(n, q, cfg)?));
        }
    }
    Ok(out)
}

/// All complete orientations of `double(m)`: for each element keep either the
/// original or its negated copy.
fn orientations_of_double(m: &OrientedMatroid) -> Vec<OrientedMatroid> {
    let n = m.len();
    let d = m.double();
    (0..1u32 << n)
        .map(|s| {
            // Element e keeps its copy e' when bit e of s is set.
            let del = (full(n) & !s) << n | s;
            d.delete(del)
        })
        .collect()
}

/// Relations with the Potts, Tutte and characteristic polynomials of the underlying matroid.
pub fn verify_tutte_relations(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let m = &inst.om;
    let name = inst.name.as_str();
    let p = potts(m, cfg)?;
    let yz = &ty() * &tz();
    let avg = (&ty() + &tz()).scale(&frac(1, 2));
    let mut out =
        vec![compare("oriented_matroid_is_potts", name, &TRI, &a_poly_cached(&m.double(), cfg)?, &p.compose(&[tq(), yz]))];

    let orientations = orientations_of_double(m);
    let weight = Rational::one() / Rational::from_integer(num_bigint::BigInt::from(1u64 << m.len()));
    let mut sum = TriPoly::zero();
    let mut chi_sum = UniPoly::zero();
    for o in &orientations {
        sum = sum + a_poly_cached(o, cfg)?;
        chi_sum = chi_sum + char_polys_cached(o, cfg)?.strict;
    }
    out.push(compare("orientation_average_is_potts", name, &TRI, &sum.scale(&weight), &p.compose(&[tq(), avg.clone()])));

    let a = a_poly_cached(m, cfg)?;
    let (bq, by) = (BiPoly::var(0), BiPoly::var(1));
    out.push(compare("diagonal_is_potts", name, &QY, &a.compose(&[bq.clone(), by.clone(), by.clone()]), &p));

    let chi = characteristic(m, cfg)?;
    out.push(compare("characteristic_sums_strict_over_orientations", name, &Q, &chi_sum, &chi));
    for q in [3u64, 5, 7] {
        let h = coflow_histogram(m, q, cfg)?;
        let nowhere_zero: u64 = h.counts.iter().filter(|(&(g, l), _)| g + l == m.len()).map(|(_, &c)| c).sum();
        let at = chi.eval(&[int(q as i64)]);
        out.push(compare(
            &format!("characteristic_counts_nowhere_zero_q{q}"),
            name,
            &Q,
            &UniPoly::int(nowhere_zero as i64),
            &UniPoly::constant(at),
        ));
        let mut counted = BiPoly::zero();
        for (&(g, l), &c) in &h.counts {
            counted.add_term([0, (g + l) as u32], int(c as i64));
        }
        out.push(compare(&format!("potts_counts_coflows_q{q}"), name, &QY, &counted, &specialize_q_bi(&p, &int(q as i64))));
    }

    // Potts against Tutte at rational points away from y in {0, 1}.
    let t = tutte(m, cfg)?;
    let pts = [(int(3), frac(1, 2)), (int(5), frac(2, 3)), (int(-2), int(3))];
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut labels = Vec::new();
    for (q, y) in &pts {
        let inv = Rational::one() / y - Rational::one();
        lhs.push(p.eval(&[q.clone(), y.clone()]));
        rhs.push(
            pow(y, m.len() as u32) * pow(&inv, m.rank() as u32) * t.eval(&[Rational::one() + q / &inv, Rational::one() / y]),
        );
        labels.push(format!("q={q}, y={y}"));
    }
    out.push(compare_points("potts_from_tutte", name, &labels, &lhs, &rhs));

    for e in 0..m.len() {
        let label = m.label(e);
        let rhs = if m.is_loop(e) {
            &BiPoly::var(1) * &tutte(&m.delete(1 << e), cfg)?
        } else if m.is_coloop(e) {
            &BiPoly::var(0) * &tutte(&m.contract(1 << e), cfg)?
        } else {
            tutte(&m.delete(1 << e), cfg)? + tutte(&m.contract(1 << e), cfg)?
        };
        out.push(compare(&format!("tutte_deletion_contraction[{label}]"), name, &XY, &t, &rhs));
    }

    let even_double = a_even_poly(&m.double(), cfg)?;
    let lhs = even_double.compose(&[tq(), ty().pow(2), tz().pow(2), &ty() * &tz()]);
    out.push(compare("even_oriented_matroid_is_potts", name, &TRI, &lhs, &p.compose(&[tq(), (&ty() * &tz()).pow(2)])));
    let mut even_sum = TriPoly::zero();
    for o in &orientations {
        even_sum = even_sum + a_even_poly(o, cfg)?.compose(&[tq(), ty(), tz(), avg.clone()]);
    }
    out.push(compare("even_orientation_average_is_potts", name, &TRI, &even_sum.scale(&weight), &p.compose(&[tq(), avg])));
    let even = a_even_poly(m, cfg)?;
    out.push(compare("even_diagonal_is_potts", name, &QY, &even.compose(&[bq.clone(), by.clone(), by.clone(), by]), &p));
    Ok(out)
}

/// Per ordered partition `A = R + S + T`: the reoriented deletion and contraction minors.
struct PartitionTerm {
    s: Mask,
    t: Mask,
    del_rank: usize,
    con_rank: usize,
    del: CharPolys,
    con: CharPolys,
    del_class: (bool, bool),
    con_class: (bool, bool),
}

fn acyclic_totally_cyclic(om: &OrientedMatroid) -> (bool, bool) {
    let c = om.classify();
    (c.acyclic, c.totally_cyclic)
}

fn partition_terms(n: &OrientedMatroid, cfg: &Config) -> Result<Vec<PartitionTerm>> {
    require_partitions(n, cfg)?;
    let size = n.len();
    let all = n.ground();
    let mut out = Vec::new();
    for r in 0..=all {
        let del = n.delete(r);
        let con = n.contract(r);
        let rest = all & !r;
        // Enumerate T over subsets of the remaining elements.
        let mut t = 0u32;
        loop {
            let tc = compress(t, r, size);
            let (d, c) = (del.reorient(tc), con.reorient(tc));
            out.push(PartitionTerm {
                s: rest & !t,
                t,
                del_rank: del.rank(),
                con_rank: con.rank(),
                del: char_polys_cached(&d, cfg)?,
                con: char_polys_cached(&c, cfg)?,
                del_class: acyclic_totally_cyclic(&d),
                con_class: acyclic_totally_cyclic(&c),
            });
            if t == rest {
                break;
            }
            t = (t.wrapping_sub(rest)) & rest;
        }
    }
    Ok(out)
}

/// The four expansions into strict and weak characteristic polynomials, their
/// single-operation specializations, and the reorientation generating functions.
pub fn verify_expansions(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let n = &inst.om;
    let name = inst.name.as_str();
    let size = n.len() as u32;
    let r = n.rank();
    let a = a_poly_cached(n, cfg)?;
    let terms = partition_terms(n, cfg)?;
    let one = Rational::one();
    let (mut e1, mut e2, mut e3, mut e4) = (TriPoly::zero(), TriPoly::zero(), TriPoly::zero(), TriPoly::zero());
    let (mut d1, mut d2, mut c1, mut c2) = (BiPoly::zero(), BiPoly::zero(), BiPoly::zero(), BiPoly::zero());
    let (mut g1, mut g2) = (BiPoly::zero(), BiPoly::zero());
    for pt in &terms {
        let (s, t) = (pt.s.count_ones(), pt.t.count_ones());
        let shift = (r - pt.del_rank) as u32;
        e1 = e1 + lift(&pt.del.strict, shift, s, t, &one);
        e2 = e2 + lift(&pt.del.weak, shift, s, t, &one);
        e3 = e3 + lift(&pt.con.strict, 0, s, t, &one);
        e4 = e4 + lift(&pt.con.weak, 0, s, t, &one);
        if t == 0 {
            let to_bi = |u: &UniPoly, qs: u32| BiPoly::from_terms(u.terms().map(|(e, c)| ([e[0] + qs, s], c.clone())));
            d1 = d1 + to_bi(&pt.del.strict, shift);
            d2 = d2 + to_bi(&pt.del.weak, shift);
            c1 = c1 + to_bi(&pt.con.strict, 0);
            c2 = c2 + to_bi(&pt.con.weak, 0);
        }
        if s + t == size {
            // No contracted element: the reorientation generating functions in alpha.
            let to_bi = |u: &UniPoly| BiPoly::from_terms(u.terms().map(|(e, c)| ([e[0], t], c.clone())));
            g1 = g1 + to_bi(&pt.con.strict);
            g2 = g2 + to_bi(&pt.con.weak);
        }
    }
    let one_t = TriPoly::one();
    let mut out = vec![
        compare("expansion_deletion_strict", name, &TRI, &e1, &a.compose(&[tq(), &one_t + &ty(), &one_t + &tz()])),
        compare("expansion_deletion_weak", name, &TRI, &e2, &homog_substitute(&a, size, HomogMode::Shifted)?),
        compare("expansion_contraction_strict", name, &TRI, &e3, &a),
        compare("expansion_contraction_weak", name, &TRI, &e4, &homog_substitute(&a, size, HomogMode::Plain)?),
    ];
    // Single-operation specializations, polynomials in (q, y).
    let (bq, by, b1) = (BiPoly::var(0), BiPoly::var(1), BiPoly::one());
    out.push(compare("deletion_strict", name, &QY, &d1, &a.compose(&[bq.clone(), &by + &b1, b1.clone()])));
    let mut rhs = BiPoly::zero();
    for (e, c) in a.terms() {
        rhs = rhs + &BiPoly::monomial([e[0], 0], c.clone()) * &(&by + &b1).pow(size - e[1]);
    }
    out.push(compare("deletion_weak", name, &QY, &d2, &rhs));
    out.push(compare("contraction_strict", name, &QY, &c1, &a.compose(&[bq.clone(), by.clone(), BiPoly::zero()])));
    let mut rhs = BiPoly::zero();
    for (e, c) in a.terms().filter(|(e, _)| e[2] == 0) {
        rhs = rhs + &BiPoly::monomial([e[0], e[1]], c.clone()) * &(&by + &b1).pow(size - e[1]);
    }
    out.push(compare("contraction_weak", name, &QY, &c2, &rhs));
    // Reorientation generating functions, polynomials in (q, alpha).
    let mut rhs1 = BiPoly::zero();
    let mut rhs2 = BiPoly::zero();
    for (e, c) in a.terms() {
        if e[1] + e[2] == size {
            rhs1.add_term([e[0], e[2]], c.clone());
        }
        rhs2 = rhs2 + &BiPoly::monomial([e[0], e[2]], c.clone()) * &(&by + &b1).pow(size - e[1] - e[2]);
    }
    out.push(compare("reorientation_strict", name, &["q", "alpha"], &g1, &rhs1));
    out.push(compare("reorientation_weak", name, &["q", "alpha"], &g2, &rhs2));
    Ok(out)
}

/// Reciprocity at q = -1, the cyclic-flat duality of the characteristic
/// polynomials, and the indicator evaluations.
pub fn verify_reciprocity(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let n = &inst.om;
    let name = inst.name.as_str();
    let size = n.len() as u32;
    let r = n.rank();
    let a = a_poly_cached(n, cfg)?;
    let terms = partition_terms(n, cfg)?;
    let (mut l1, mut l2, mut l3, mut l4) = (BiPoly::zero(), BiPoly::zero(), BiPoly::zero(), BiPoly::zero());
    for pt in &terms {
        let m = [pt.s.count_ones(), pt.t.count_ones()];
        if pt.del_class.0 {
            l1.add_term(m, Rational::one());
        }
        if pt.del_class.1 {
            l2.add_term(m, sign(pt.del_rank));
        }
        if pt.con_class.0 {
            l3.add_term(m, sign(pt.con_rank));
        }
        if pt.con_class.1 {
            l4.add_term(m, Rational::one());
        }
    }
    let minus_one = -Rational::one();
    let sr = sign(r);
    let (by, bz, b1) = (BiPoly::var(0), BiPoly::var(1), BiPoly::one());
    let a_m1 = specialize_q(&a, &minus_one);
    let rhs1 = a_m1.compose(&[&b1 + &by, &b1 + &bz]).scale(&sr);
    let shifted = specialize_q(&homog_substitute(&a, size, HomogMode::Shifted)?, &minus_one).scale(&sr);
    let plain = specialize_q(&homog_substitute(&a, size, HomogMode::Plain)?, &minus_one);
    let mut out = vec![
        compare("acyclic_deletions_reorientations", name, &YZ, &l1, &rhs1),
        compare("totally_cyclic_deletions_reorientations", name, &YZ, &l2, &shifted),
        compare("acyclic_contractions_reorientations", name, &YZ, &l3, &a_m1),
        compare("totally_cyclic_contractions_reorientations", name, &YZ, &l4, &plain),
    ];
    let cp = char_polys_cached(n, cfg)?;
    let neg_q = [-UniPoly::var(0)];
    let mut rhs = UniPoly::zero();
    for t in n.cyclic_flats() {
        rhs = rhs + char_polys_cached(&n.contract(t), cfg)?.strict.scale(&sign(r - n.rank_of(t)));
    }
    out.push(compare("cyclic_flat_duality", name, &Q, &cp.weak.compose(&neg_q), &rhs));
    let class = n.classify();
    let at = |u: &UniPoly| UniPoly::constant(u.eval(&[minus_one.clone()]));
    let ind_weak = UniPoly::int(class.totally_cyclic as i64);
    let ind_strict = if class.acyclic { UniPoly::constant(sr.clone()) } else { UniPoly::zero() };
    out.push(compare("weak_at_minus_one_indicates_totally_cyclic", name, &Q, &at(&cp.weak), &ind_weak));
    out.push(compare("strict_at_minus_one_indicates_acyclic", name, &Q, &at(&cp.strict), &ind_strict));
    Ok(out)
}

fn eval_eisenstein(p: &BiPoly, y: &Eisenstein, z: &Eisenstein) -> Eisenstein {
    let mut total = Eisenstein::zero();
    for (e, c) in p.terms() {
        let t = (&y.pow(e[0]) * &z.pow(e[1])).scale(c);
        total = &total + &t;
    }
    total
}

/// Duality at q = -1 and q = 3, the symmetry of acyclic matroids, and the bridge to B at q = -1.
pub fn verify_duality(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let n = &inst.om;
    let name = inst.name.as_str();
    let size = n.len() as u32;
    let r = n.rank();
    let dual = n.dual();
    let a = a_poly_cached(n, cfg)?;
    let ad = a_poly_cached(&dual, cfg)?;
    let minus_one = -Rational::one();
    let lhs = specialize_q(&ad, &minus_one);
    let rhs = specialize_q(&homog_substitute(&specialize_q_tri(&a, &minus_one), size, HomogMode::Dual)?, &Rational::zero())
        .scale(&sign(dual.rank()));
    let mut out = vec![compare("duality_at_minus_one", name, &YZ, &lhs, &rhs)];

    let a3 = specialize_q(&a, &int(3));
    let ad3 = specialize_q(&ad, &int(3));
    let tau = Eisenstein::tau();
    let tau_bar = tau.conj();
    let per_var = (n.len() + 1).max(3) as i64;
    let (mut lhs, mut rhs, mut labels) = (Vec::new(), Vec::new(), Vec::new());
    let scale = Rational::one() / pow(&int(3), (n.len() - r) as u32);
    for i in 0..per_var {
        for j in 0..per_var {
            let (y, z) = (int(i + 1), int(j + 2));
            let s = Rational::one() + &y + &z;
            let ye = Eisenstein::from_rational(y.clone());
            let ze = Eisenstein::from_rational(z.clone());
            let inv = Eisenstein::from_rational(Rational::one() / &s);
            let u = &(&(&Eisenstein::one() + &(&tau_bar * &ye)) + &(&tau * &ze)) * &inv;
            let v = &(&(&Eisenstein::one() + &(&tau * &ye)) + &(&tau_bar * &ze)) * &inv;
            lhs.push(Eisenstein::from_rational(a3.eval(&[y.clone(), z.clone()])));
            rhs.push(eval_eisenstein(&ad3, &u, &v).scale(&(pow(&s, size) * &scale)));
            labels.push(format!("y={y}, z={z}"));
        }
    }
    out.push(compare_points("duality_at_three", name, &labels, &lhs, &rhs));

    if n.classify().acyclic {
        let (bq, by) = (BiPoly::var(0), BiPoly::var(1));
        let lhs = a.compose(&[-bq.clone(), by.clone(), BiPoly::one()]);
        let mut rhs = BiPoly::zero();
        for (e, c) in a.terms() {
            rhs.add_term([e[0], size - e[1]], c * sign(r));
        }
        out.push(compare("acyclic_symmetry", name, &QY, &lhs, &rhs));
    }
    if let Some(d) = &inst.digraph {
        let b = b_poly(d, cfg)?;
        let rhs = specialize_q(&b, &minus_one).scale(&sign(d.components()));
        out.push(compare("matches_b_polynomial_at_minus_one", name, &YZ, &specialize_q(&a, &minus_one), &rhs));
    }
    Ok(out)
}

fn specialize_q_tri(p: &TriPoly, q0: &Rational) -> TriPoly {
    crate::coflow::at_q(p, q0)
}

/// Deletion-contraction-reorientation recurrences and the opposite-pair recurrence.
pub fn verify_recurrences(inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    if !is_regular(&inst.om) {
        return negative_controls(inst, cfg);
    }
    let n = &inst.om;
    let name = inst.name.as_str();
    let a = a_poly_cached(n, cfg)?;
    let mut out = Vec::new();
    for e in 0..n.len() {
        let label = n.label(e);
        let con = a_poly_cached(&n.contract(1 << e), cfg)?;
        if n.is_coloop(e) {
            out.push(compare(&format!("coloop_recurrence[{label}]"), name, &TRI, &a, &(&coloop_factor() * &con)));
        } else {
            let lhs = &a + &a_poly_cached(&n.reorient(1 << e), cfg)?;
            let del = a_poly_cached(&n.delete(1 << e), cfg)?;
            let s = &ty() + &tz();
            let rhs = &(&s * &del) + &(&(&TriPoly::int(2) - &s) * &con);
            out.push(compare(&format!("general_recurrence[{label}]"), name, &TRI, &lhs, &rhs));
        }
    }
    let cocircuit_supports: Vec<Mask> = n.cocircuits().iter().map(|c| c.support()).collect();
    for c in n.circuits().iter().filter(|c| c.support().count_ones() == 2 && c.is_positive()) {
        let pair = c.support();
        let labels: Vec<&str> = elements(pair).map(|e| n.label(e)).collect();
        let tag = labels.join(",");
        let yz = &ty() * &tz();
        let con = a_poly_cached(&n.contract(pair), cfg)?;
        if cocircuit_supports.contains(&pair) {
            let f = &TriPoly::one() + &(&(&tq() - &TriPoly::one()) * &yz);
            out.push(compare(&format!("opposite_pair_cocircuit[{tag}]"), name, &TRI, &a, &(&f * &con)));
        } else {
            let del = a_poly_cached(&n.delete(pair), cfg)?;
            let rhs = &(&yz * &del) + &(&(&TriPoly::one() - &yz) * &con);
            out.push(compare(&format!("opposite_pair[{tag}]"), name, &TRI, &a, &rhs));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_instance;

    fn inst(text: &str) -> Instance {
        parse_instance(text, "t", false).unwrap()
    }

    fn all_pass(r: Vec<CheckReport>) {
        for c in &r {
            assert!(c.passed(), "{}", serde_json::to_string_pretty(c).unwrap());
        }
        assert!(!r.is_empty());
    }

    #[test]
    fn suites_pass_on_a_small_digraph() {
        let i = inst(r#"{"vertices":3,"arcs":[[0,1],[1,0],[1,2],[2,0]]}"#);
        let cfg = Config::default();
        all_pass(verify_basic(&i, &cfg).unwrap());
        all_pass(verify_tutte_relations(&i, &cfg).unwrap());
        all_pass(verify_expansions(&i, &cfg).unwrap());
        all_pass(verify_reciprocity(&i, &cfg).unwrap());
        all_pass(verify_duality(&i, &cfg).unwrap());
        all_pass(verify_recurrences(&i, &cfg).unwrap());
    }

    #[test]
    fn failures_carry_a_witness() {
        let r = compare("x", "t", &Q, &UniPoly::var(0), &UniPoly::one());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
        assert_eq!(r.clone().expect_failure().status, Status::Xfail);
        let ok = compare("x", "t", &Q, &UniPoly::one(), &UniPoly::one());
        assert_eq!(ok.expect_failure().status, Status::Fail);
    }

    #[test]
    fn uniform_matroid_gets_negative_controls() {
        let i = parse_instance(r#"{"rows":[[1,0,1,1],[0,1,1,-1]]}"#, "u24", true).unwrap();
        assert!(!is_regular(&i.om));
        let r = verify_tutte_relations(&i, &Config::default()).unwrap();
        assert!(r.iter().all(|c| c.status == Status::Xfail));
    }
}
