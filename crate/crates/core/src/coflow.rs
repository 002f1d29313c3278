//! Enumeration of q-coflows and the polynomials interpolated from their counts.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::algebra::rational::int;
use crate::algebra::{BiPoly, Interpolator, QuadPoly, Rational, TriPoly, UniPoly};
use crate::error::{Error, Result};
use crate::matroid::{Digraph, OrientedMatroid};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Work limits shared by every enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    /// Maximum number of enumerated assignments per polynomial build.
    pub budget: u64,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, jobs: 1 }
    }
}

impl Config {
    pub fn with_jobs(jobs: usize) -> Self {
        Self { jobs: jobs.max(1), ..Self::default() }
    }
}

fn require(cfg: &Config, work: u128) -> Result<()> {
    if work > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { required: work, budget: cfg.budget });
    }
    Ok(())
}

fn count_work(radix: u64, digits: usize) -> u128 {
    (radix as u128).checked_pow(digits as u32).unwrap_or(u128::MAX)
}

/// Visits every vector in `lo..=hi` to the power `digits`, split over `jobs` threads.
/// Returns one accumulator per worker.
fn enumerate<T, I, V>(digits: usize, lo: i64, hi: i64, jobs: usize, init: I, visit: V) -> Vec<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &[i64]) + Sync,
{
    if hi < lo && digits > 0 {
        return vec![init()];
    }
    let radix = (hi - lo + 1).max(1) as u64;
    let total = radix.pow(digits as u32);
    let jobs = (jobs.max(1) as u64).min(total.max(1));
    let run = |start: u64, end: u64| {
        let mut acc = init();
        let mut d = vec![lo; digits];
        let mut x = start;
        for slot in d.iter_mut() {
            *slot = lo + (x % radix) as i64;
            x /= radix;
        }
        for _ in start..end {
            visit(&mut acc, &d);
            for slot in d.iter_mut() {
                if *slot < hi {
                    *slot += 1;
                    break;
                }
                *slot = lo;
            }
        }
        acc
    };
    if jobs <= 1 {
        return vec![run(0, total)];
    }
    let chunk = total.div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let (a, b) = (j * chunk, ((j + 1) * chunk).min(total));
                let run = &run;
                s.spawn(move || run(a, b))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Residue class of a coflow value: 0 zero, 1 in the positive half, 2 in the negative half, 3 exactly q/2.
fn value_classes(q: u64) -> Vec<u8> {
    (0..q)
        .map(|v| {
            if v == 0 {
                0
            } else if 2 * v == q {
                3
            } else if 2 * v < q {
                1
            } else {
                2
            }
        })
        .collect()
}

/// Basis-extension data: `f(a) = sum_i coeffs[a][i] * x_i (mod q)`.
struct Extension {
    coeffs: Vec<Vec<i64>>,
    rank: usize,
}

impl Extension {
    fn new(om: &OrientedMatroid) -> Result<Self> {
        Ok(Self { coeffs: om.extension_coefficients()?, rank: om.rank() })
    }

    fn value(&self, a: usize, x: &[i64], q: i64) -> i64 {
        self.coeffs[a].iter().zip(x).map(|(c, v)| c * v).sum::<i64>().rem_euclid(q)
    }
}

/// Counts of coflows by (positive, negative, half) statistics, flattened.
#[derive(Clone, Debug)]
struct Tally {
    n: usize,
    counts: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Self {
        Self { n, counts: vec![0; (n + 1).pow(3)] }
    }

    fn index(&self, g: usize, l: usize, h: usize) -> usize {
        (g * (self.n + 1) + l) * (self.n + 1) + h
    }

    fn merge(mut parts: Vec<Tally>) -> Tally {
        let mut out = parts.pop().unwrap();
        for p in parts {
            for (a, b) in out.counts.iter_mut().zip(p.counts) {
                *a += b;
            }
        }
        out
    }

    fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        let m = self.n + 1;
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(move |(i, &c)| ((i / (m * m), (i / m) % m, i % m), c))
    }
}

/// Work of the cheaper of the two tally routes at one q.
fn tally_work(om: &OrientedMatroid, q: u64) -> u128 {
    direct_work(om, q).min(transfer_work(om, q))
}

fn direct_work(om: &OrientedMatroid, q: u64) -> u128 {
    count_work(q, om.rank())
}

/// States times transitions of the transfer route, with the tally dimensions folded in.
fn transfer_work(om: &OrientedMatroid, q: u64) -> u128 {
    let r = om.rank() as u128;
    count_work(q, om.len() - om.rank() + 1).saturating_mul(r.max(1) * (r + 1).pow(3))
}

fn coflow_tally(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<Tally> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    if transfer_work(om, q) < direct_work(om, q) {
        require(cfg, transfer_work(om, q))?;
        return coflow_tally_transfer(om, q);
    }
    coflow_tally_direct(om, q, cfg)
}

/// Enumerates every assignment of the basis and extends it.
fn coflow_tally_direct(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<Tally> {
    require(cfg, direct_work(om, q))?;
    let ext = Extension::new(om)?;
    let classes = value_classes(q);
    let n = om.len();
    let parts = enumerate(
        ext.rank,
        0,
        q as i64 - 1,
        cfg.jobs,
        || Tally::new(n),
        |t, x| {
            let mut s = [0usize; 4];
            for a in 0..n {
                s[classes[ext.value(a, x, q as i64) as usize] as usize] += 1;
            }
            let i = t.index(s[1], s[2], s[3]);
            t.counts[i] += 1;
        },
    );
    Ok(Tally::merge(parts))
}

/// Same tally by a transfer over the basis coordinates: the state is the vector of
/// partial sums of the non-basis values plus the statistics of the basis values so far.
/// Cheaper than direct enumeration when the corank is small.
fn coflow_tally_transfer(om: &OrientedMatroid, q: u64) -> Result<Tally> {
    let ext = Extension::new(om)?;
    let n = om.len();
    let r = ext.rank;
    let pivots = om.pivots();
    let others: Vec<usize> = (0..n).filter(|a| !pivots.contains(a)).collect();
    let m = others.len();
    let classes = value_classes(q);
    let qi = q as i64;
    let sums = (q as usize).pow(m as u32);
    let t = (r + 1).pow(3);
    let tidx = |g: usize, l: usize, h: usize| (g * (r + 1) + l) * (r + 1) + h;
    let decode = |mut code: usize, digits: &mut [i64]| {
        for d in digits.iter_mut() {
            *d = (code % q as usize) as i64;
            code /= q as usize;
        }
    };
    let encode = |digits: &[i64]| digits.iter().rev().fold(0usize, |c, &d| c * q as usize + d as usize);
    let mut cur = vec![0u64; sums * t];
    cur[tidx(0, 0, 0)] = 1;
    let mut digits = vec![0i64; m];
    let mut next_digits = vec![0i64; m];
    for i in 0..r {
        let mut next = vec![0u64; sums * t];
        for code in 0..sums {
            let row = &cur[code * t..(code + 1) * t];
            if row.iter().all(|&c| c == 0) {
                continue;
            }
            decode(code, &mut digits);
            for v in 0..qi {
                for (k, &a) in others.iter().enumerate() {
                    next_digits[k] = (digits[k] + ext.coeffs[a][i] * v).rem_euclid(qi);
                }
                let base = encode(&next_digits) * t;
                let c = classes[v as usize];
                for g in 0..=i {
                    for l in 0..=i - g {
                        for h in 0..=i - g - l {
                            let count = row[tidx(g, l, h)];
                            if count == 0 {
                                continue;
                            }
                            let (g2, l2, h2) = match c {
                                1 => (g + 1, l, h),
                                2 => (g, l + 1, h),
                                3 => (g, l, h + 1),
                                _ => (g, l, h),
                            };
                            next[base + tidx(g2, l2, h2)] += count;
                        }
                    }
                }
            }
        }
        cur = next;
    }
    let mut out = Tally::new(n);
    for code in 0..sums {
        decode(code, &mut digits);
        let mut extra = [0usize; 4];
        for &d in &digits {
            extra[classes[d as usize] as usize] += 1;
        }
        for g in 0..=r {
            for l in 0..=r - g {
                for h in 0..=r - g - l {
                    let count = cur[code * t + tidx(g, l, h)];
                    if count > 0 {
                        let i = out.index(g + extra[1], l + extra[2], h + extra[3]);
                        out.counts[i] += count;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Number of q-coflows with `g` values in the positive half and `l` in the negative half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoflowHistogram {
    pub q: u64,
    pub counts: BTreeMap<(usize, usize), u64>,
}

impl CoflowHistogram {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, g: usize, l: usize) -> u64 {
        self.counts.get(&(g, l)).copied().unwrap_or(0)
    }

    /// `sum count * y^g z^l`.
    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(self.counts.iter().map(|(&(g, l), &c)| ([g as u32, l as u32], int(c as i64))))
    }
}

fn require_odd(q: u64) -> Result<()> {
    if q % 2 == 0 {
        return Err(Error::InvalidArgument(format!("q = {q} must be odd")));
    }
    Ok(())
}

pub fn coflow_histogram(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<CoflowHistogram> {
    require_odd(q)?;
    let t = coflow_tally(om, q, cfg)?;
    let mut counts = BTreeMap::new();
    for ((g, l, _), c) in t.entries() {
        *counts.entry((g, l)).or_insert(0) += c;
    }
    Ok(CoflowHistogram { q, counts })
}

/// Reference enumerator: every map `A -> Z/q`, kept when all signed circuit sums vanish.
/// Correct for any oriented matroid, regular or not.
pub fn brute_coflow_histogram(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<CoflowHistogram> {
    require_odd(q)?;
    let n = om.len();
    require(cfg, count_work(q, n))?;
    let classes = value_classes(q);
    let circuits = om.circuits().to_vec();
    let parts = enumerate(n, 0, q as i64 - 1, cfg.jobs, BTreeMap::new, |m: &mut BTreeMap<(usize, usize), u64>, x| {
        if circuits.iter().all(|c| c.pairing(x).rem_euclid(q as i64) == 0) {
            let mut s = [0usize; 4];
            for &v in x {
                s[classes[v as usize] as usize] += 1;
            }
            *m.entry((s[1], s[2])).or_insert(0) += 1;
        }
    });
    let mut counts = BTreeMap::new();
    for p in parts {
        for (k, v) in p {
            *counts.entry(k).or_insert(0) += v;
        }
    }
    Ok(CoflowHistogram { q, counts })
}

/// `A(q, y, z)` at one odd `q`, as a polynomial in `y, z`.
pub fn a_eval(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<BiPoly> {
    Ok(coflow_histogram(om, q, cfg)?.to_bipoly())
}

fn odd_nodes(count: usize) -> Vec<u64> {
    (0..count as u64).map(|k| 2 * k + 1).collect()
}

fn even_nodes(count: usize) -> Vec<u64> {
    (1..=count as u64).map(|k| 2 * k).collect()
}

fn total_work(nodes: &[u64], digits: usize) -> u128 {
    nodes.iter().map(|&q| count_work(q, digits)).fold(0u128, |a, b| a.saturating_add(b))
}

fn interpolator(nodes: &[u64]) -> Interpolator {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u64>, Interpolator>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(i) = cache.lock().unwrap().get(nodes) {
        return i.clone();
    }
    let xs: Vec<Rational> = nodes.iter().map(|&q| int(q as i64)).collect();
    let i = Interpolator::new(&xs).expect("nodes are distinct");
    cache.lock().unwrap().insert(nodes.to_vec(), i.clone());
    i
}

/// Fits one polynomial in q per monomial key from per-node count tables.
fn fit_by_key<K: Ord + Copy>(interp: &Interpolator, tables: &[BTreeMap<K, u64>]) -> BTreeMap<K, UniPoly> {
    let keys: std::collections::BTreeSet<K> = tables.iter().flat_map(|t| t.keys().copied()).collect();
    keys.into_iter()
        .map(|k| {
            let vals: Vec<Rational> = tables.iter().map(|t| int(t.get(&k).copied().unwrap_or(0) as i64)).collect();
            (k, interp.fit(&vals))
        })
        .collect()
}

/// Substitutes `q = value` into the q-variable (index 0) of a polynomial.
pub fn at_q<const N: usize>(p: &crate::algebra::Poly<N>, q: &Rational) -> crate::algebra::Poly<N> {
    let mut out = crate::algebra::Poly::zero();
    for (e, c) in p.terms() {
        let mut e2 = *e;
        e2[0] = 0;
        out.add_term(e2, c * crate::algebra::rational::pow(q, e[0]));
    }
    out
}

/// Drops the q-variable of a polynomial that no longer depends on it.
fn strip_q(p: &TriPoly) -> BiPoly {
    BiPoly::from_terms(p.terms().map(|(e, c)| ([e[1], e[2]], c.clone())))
}

/// `p(q0, y, z)` as a polynomial in `y, z`.
pub fn specialize_q(p: &TriPoly, q0: &Rational) -> BiPoly {
    strip_q(&at_q(p, q0))
}

/// The full polynomial `A(q, y, z)`, interpolated over odd q and checked at one extra node.
pub fn a_poly(om: &OrientedMatroid, cfg: &Config) -> Result<TriPoly> {
    let r = om.rank();
    let nodes = odd_nodes(r + 1);
    let safety = 2 * r as u64 + 3;
    let mut all = nodes.clone();
    all.push(safety);
    require(cfg, all.iter().map(|&q| tally_work(om, q)).fold(0u128, |a, b| a.saturating_add(b)))?;
    let tables: Vec<BTreeMap<(usize, usize), u64>> =
        nodes.iter().map(|&q| coflow_histogram(om, q, cfg).map(|h| h.counts)).collect::<Result<_>>()?;
    let fitted = fit_by_key(&interpolator(&nodes), &tables);
    let mut out = TriPoly::zero();
    for ((g, l), p) in fitted {
        for (e, c) in p.terms() {
            out.add_term([e[0], g as u32, l as u32], c.clone());
        }
    }
    if strip_q(&at_q(&out, &int(safety as i64))) != a_eval(om, safety, cfg)? {
        return Err(Error::DegreeSafetyCheckFailed { q: safety });
    }
    Ok(out)
}

/// `a_poly` memoized on the circuit set, for callers that rebuild the same minors repeatedly.
pub fn a_poly_cached(om: &OrientedMatroid, cfg: &Config) -> Result<TriPoly> {
    static CACHE: OnceLock<Mutex<HashMap<String, TriPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = om.key();
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = a_poly(om, cfg)?;
    cache.lock().unwrap().insert(key, p.clone());
    Ok(p)
}

/// Coflows whose values, read as residues in `0..q`, all lie in `lo..=hi`.
pub fn box_count(om: &OrientedMatroid, q: u64, lo: i64, hi: i64, cfg: &Config) -> Result<u64> {
    let ext = Extension::new(om)?;
    let radix = if hi >= lo { (hi - lo + 1) as u64 } else { 0 };
    require(cfg, count_work(radix, ext.rank))?;
    let n = om.len();
    let parts = enumerate(
        ext.rank,
        lo,
        hi,
        cfg.jobs,
        || 0u64,
        |c, x| {
            if (0..n).all(|a| {
                let v = ext.value(a, x, q as i64);
                lo <= v && v <= hi
            }) {
                *c += 1;
            }
        },
    );
    Ok(parts.into_iter().sum())
}

/// Strict and weak characteristic counts at odd `q`: coflows with every value
/// in `1..=(q-1)/2`, respectively `0..=(q-1)/2`.
pub fn char_counts(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<(u64, u64)> {
    require_odd(q)?;
    let p = (q as i64 - 1) / 2;
    Ok((box_count(om, q, 1, p, cfg)?, box_count(om, q, 0, p, cfg)?))
}

/// Characteristic polynomials `(chi_strict, chi_weak)` in q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolys {
    pub strict: UniPoly,
    pub weak: UniPoly,
}

fn fit_counts<F>(nodes: &[u64], safety: &[u64], count: F) -> Result<UniPoly>
where
    F: Fn(u64) -> Result<u64>,
{
    let vals: Vec<Rational> = nodes.iter().map(|&q| count(q).map(|c| int(c as i64))).collect::<Result<_>>()?;
    let p = interpolator(nodes).fit(&vals);
    for &q in safety {
        if p.eval(&[int(q as i64)]) != int(count(q)? as i64) {
            return Err(Error::DegreeSafetyCheckFailed { q });
        }
    }
    Ok(p)
}

pub fn char_polys(om: &OrientedMatroid, cfg: &Config) -> Result<CharPolys> {
    let r = om.rank();
    let nodes = odd_nodes(r + 1);
    let safety = [2 * r as u64 + 3];
    let half = |q: u64| (q + 1) / 2;
    let work: u128 = nodes.iter().chain(&safety).map(|&q| 2 * count_work(half(q), r)).sum();
    require(cfg, work)?;
    let strict = fit_counts(&nodes, &safety, |q| char_counts(om, q, cfg).map(|c| c.0))?;
    let weak = fit_counts(&nodes, &safety, |q| char_counts(om, q, cfg).map(|c| c.1))?;
    Ok(CharPolys { strict, weak })
}

/// Integer points of `[0, q/2]^A` (or the open box `(0, q/2)^A`) whose signed
/// circuit sums are divisible by q, counted through the basis extension.
pub fn lattice_count(om: &OrientedMatroid, q: u64, open: bool, cfg: &Config) -> Result<u64> {
    let (lo, hi) = lattice_range(q, open);
    box_count(om, q, lo, hi, cfg)
}

fn lattice_range(q: u64, open: bool) -> (i64, i64) {
    let q = q as i64;
    if open {
        (1, (q - 1) / 2)
    } else {
        (0, q / 2)
    }
}

/// The same count by testing every point of the box against every circuit.
pub fn lattice_count_box(om: &OrientedMatroid, q: u64, open: bool, cfg: &Config) -> Result<u64> {
    let (lo, hi) = lattice_range(q, open);
    let n = om.len();
    let radix = if hi >= lo { (hi - lo + 1) as u64 } else { 0 };
    require(cfg, count_work(radix, n))?;
    let circuits = om.circuits().to_vec();
    let parts = enumerate(
        n,
        lo,
        hi,
        cfg.jobs,
        || 0u64,
        |c, x| {
            if circuits.iter().all(|k| k.pairing(x).rem_euclid(q as i64) == 0) {
                *c += 1;
            }
        },
    );
    Ok(parts.into_iter().sum())
}

/// Even-q lattice polynomials `(weak_even, strict_even)` from the closed and open box counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCharPolys {
    pub weak: UniPoly,
    pub strict: UniPoly,
}

pub fn even_char_polys(om: &OrientedMatroid, cfg: &Config) -> Result<EvenCharPolys> {
    let r = om.rank();
    let nodes = even_nodes(r + 1);
    let safety = [2 * r as u64 + 4];
    let weak = fit_counts(&nodes, &safety, |q| lattice_count(om, q, false, cfg))?;
    let strict = fit_counts(&nodes, &safety, |q| lattice_count(om, q, true, cfg))?;
    Ok(EvenCharPolys { weak, strict })
}

/// `A^even(q, y, z, w)` at one even q: values strictly inside either half count
/// in `y` or `z`, the value `q/2` counts in `w`.
pub fn a_even_eval(om: &OrientedMatroid, q: u64, cfg: &Config) -> Result<TriPoly> {
    if q % 2 == 1 {
        return Err(Error::InvalidArgument(format!("q = {q} must be even")));
    }
    let t = coflow_tally(om, q, cfg)?;
    Ok(TriPoly::from_terms(t.entries().map(|((g, l, h), c)| ([g as u32, l as u32, h as u32], int(c as i64)))))
}

/// `A^even` as a polynomial in `(q, y, z, w)`, interpolated over even q.
pub fn a_even_poly(om: &OrientedMatroid, cfg: &Config) -> Result<QuadPoly> {
    let r = om.rank();
    let nodes = even_nodes(r + 1);
    let safety = [2 * r as u64 + 4, 2 * r as u64 + 6];
    let mut all = nodes.clone();
    all.extend(safety);
    require(cfg, total_work(&all, r))?;
    let tables: Vec<BTreeMap<(usize, usize, usize), u64>> =
        nodes.iter().map(|&q| coflow_tally(om, q, cfg).map(|t| t.entries().collect())).collect::<Result<_>>()?;
    let fitted = fit_by_key(&interpolator(&nodes), &tables);
    let mut out = QuadPoly::zero();
    for ((g, l, h), p) in fitted {
        for (e, c) in p.terms() {
            out.add_term([e[0], g as u32, l as u32, h as u32], c.clone());
        }
    }
    for q in safety {
        let at = at_q(&out, &int(q as i64));
        let got = TriPoly::from_terms(at.terms().map(|(e, c)| ([e[1], e[2], e[3]], c.clone())));
        if got != a_even_eval(om, q, cfg)? {
            return Err(Error::DegreeSafetyCheckFailed { q });
        }
    }
    Ok(out)
}

/// `A(q, y, z)` of a digraph's oriented matroid from vertex colorings:
/// `q^(-components) * sum_f y^#{arcs with f(v)-f(u) in 1..p} z^#{arcs with f(u)-f(v) in 1..p}`.
pub fn digraph_a_eval(d: &Digraph, q: u64, cfg: &Config) -> Result<BiPoly> {
    require_odd(q)?;
    require(cfg, count_work(q, d.vertices()))?;
    let classes = value_classes(q);
    let arcs = d.arcs().to_vec();
    let qi = q as i64;
    let parts = enumerate(d.vertices(), 0, qi - 1, cfg.jobs, BTreeMap::new, |m: &mut BTreeMap<(u32, u32), u64>, f| {
        let (mut g, mut l) = (0, 0);
        for &(u, v) in &arcs {
            match classes[(f[v] - f[u]).rem_euclid(qi) as usize] {
                1 => g += 1,
                2 => l += 1,
                _ => {}
            }
        }
        *m.entry((g, l)).or_insert(0) += 1;
    });
    let div = BigInt::from(q).pow(d.components() as u32);
    let mut out = BiPoly::zero();
    for p in parts {
        for ((g, l), c) in p {
            out.add_term([g, l], int(c as i64));
        }
    }
    let mut scaled = BiPoly::zero();
    for (e, c) in out.terms() {
        let r = c / Rational::from_integer(div.clone());
        if !crate::algebra::rational::is_integer(&r) {
            return Err(Error::NonPolynomialResult("coloring count not divisible by q^components".into()));
        }
        scaled.add_term(*e, r);
    }
    Ok(scaled)
}

/// `B(q, y, z)` at one positive integer q: colorings `V -> 1..=q` weighted by
/// `y` per descending arc and `z` per ascending arc.
pub fn b_eval(d: &Digraph, q: u64, cfg: &Config) -> Result<BiPoly> {
    require(cfg, count_work(q, d.vertices()))?;
    let arcs = d.arcs().to_vec();
    let parts = enumerate(d.vertices(), 1, q as i64, cfg.jobs, BTreeMap::new, |m: &mut BTreeMap<(u32, u32), u64>, f| {
        let (mut g, mut l) = (0, 0);
        for &(u, v) in &arcs {
            if f[u] > f[v] {
                g += 1;
            } else if f[u] < f[v] {
                l += 1;
            }
        }
        *m.entry((g, l)).or_insert(0) += 1;
    });
    let mut out = BiPoly::zero();
    for p in parts {
        for ((g, l), c) in p {
            out.add_term([g, l], int(c as i64));
        }
    }
    Ok(out)
}

/// `B(q, y, z)` interpolated over `q = 1..=|V|+1` with two safety nodes.
pub fn b_poly(d: &Digraph, cfg: &Config) -> Result<TriPoly> {
    let nv = d.vertices();
    let nodes: Vec<u64> = (1..=nv as u64 + 1).collect();
    let safety = [nv as u64 + 2, nv as u64 + 3];
    let mut all = nodes.clone();
    all.extend(safety);
    require(cfg, total_work(&all, nv))?;
    let tables: Vec<BTreeMap<(u32, u32), u64>> = nodes
        .iter()
        .map(|&q| {
            b_eval(d, q, cfg)
                .map(|p| p.terms().map(|(e, c)| ((e[0], e[1]), crate::algebra::rational::to_i64(c).unwrap() as u64)).collect())
        })
        .collect::<Result<_>>()?;
    let fitted = fit_by_key(&interpolator(&nodes), &tables);
    let mut out = TriPoly::zero();
    for ((g, l), p) in fitted {
        for (e, c) in p.terms() {
            out.add_term([e[0], g, l], c.clone());
        }
    }
    for q in safety {
        if strip_q(&at_q(&out, &int(q as i64))) != b_eval(d, q, cfg)? {
            return Err(Error::DegreeSafetyCheckFailed { q });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QMatrix;
    use crate::matroid::MatroidOptions;

    fn om(vertices: usize, arcs: &[(usize, usize)]) -> OrientedMatroid {
        OrientedMatroid::from_digraph(&Digraph::new(vertices, arcs.to_vec()).unwrap()).unwrap()
    }

    /// Closed form for a single coloop: `1 + ((q-1)/2)(y+z)`.
    #[test]
    fn coloop_closed_form() {
        let m = om(2, &[(0, 1)]);
        let a = a_poly(&m, &Config::default()).unwrap();
        let expected = TriPoly::from_terms([
            ([0, 0, 0], int(1)),
            ([1, 1, 0], crate::algebra::rational::frac(1, 2)),
            ([0, 1, 0], crate::algebra::rational::frac(-1, 2)),
            ([1, 0, 1], crate::algebra::rational::frac(1, 2)),
            ([0, 0, 1], crate::algebra::rational::frac(-1, 2)),
        ]);
        assert_eq!(a, expected);
    }

    #[test]
    fn transfer_matches_direct() {
        let cases = [
            om(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]),
            om(2, &[(0, 1), (0, 1), (1, 0), (0, 0)]),
            om(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]),
            om(3, &[(0, 1), (1, 2)]),
        ];
        for m in &cases {
            for q in [1, 2, 3, 4, 5, 6, 7] {
                let direct = coflow_tally_direct(m, q, &Config::default()).unwrap();
                let transfer = coflow_tally_transfer(m, q).unwrap();
                assert_eq!(direct.counts, transfer.counts, "q={q}");
            }
        }
    }

    #[test]
    fn loop_contributes_nothing() {
        let m = om(1, &[(0, 0)]);
        assert_eq!(a_poly(&m, &Config::default()).unwrap(), TriPoly::one());
    }

    #[test]
    fn histogram_total_is_q_to_rank() {
        let m = om(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]);
        for q in [1, 3, 5, 7] {
            assert_eq!(coflow_histogram(&m, q, &Config::default()).unwrap().total(), q.pow(m.rank() as u32));
        }
    }

    #[test]
    fn basis_extension_matches_brute_force_on_regular_input() {
        let m = om(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
        for q in [3, 5] {
            let cfg = Config::default();
            assert_eq!(coflow_histogram(&m, q, &cfg).unwrap(), brute_coflow_histogram(&m, q, &cfg).unwrap());
        }
    }

    #[test]
    fn uniform_matroid_brute_force_sees_only_zero() {
        let r = QMatrix::from_ints(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]], 4);
        let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
        let m = OrientedMatroid::from_matrix(&r, labels, MatroidOptions::assume_tu()).unwrap();
        let h = brute_coflow_histogram(&m, 3, &Config::default()).unwrap();
        assert_eq!(h.total(), 1);
        assert_eq!(h.get(0, 0), 1);
    }

    #[test]
    fn parallel_and_serial_agree() {
        let m = om(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let a = coflow_histogram(&m, 7, &Config::default()).unwrap();
        let b = coflow_histogram(&m, 7, &Config::with_jobs(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_is_enforced() {
        let m = om(4, &[(0, 1), (1, 2), (2, 3)]);
        let cfg = Config { budget: 10, jobs: 1 };
        assert!(matches!(a_poly(&m, &cfg), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn lattice_routes_agree() {
        let m = om(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 3)]);
        let cfg = Config::default();
        for q in 1..=8 {
            for open in [false, true] {
                assert_eq!(lattice_count(&m, q, open, &cfg).unwrap(), lattice_count_box(&m, q, open, &cfg).unwrap());
            }
        }
    }

    #[test]
    fn a_even_of_a_coloop() {
        let m = om(2, &[(0, 1)]);
        let e = a_even_eval(&m, 2, &Config::default()).unwrap();
        assert_eq!(e, &TriPoly::one() + &TriPoly::var(2));
        let p = a_even_poly(&m, &Config::default()).unwrap();
        // 1 + (q/2 - 1)(y + z) + w
        let q = QuadPoly::var(0).scale(&crate::algebra::rational::frac(1, 2));
        let expected =
            &(&QuadPoly::one() + &(&(&q - &QuadPoly::one()) * &(&QuadPoly::var(1) + &QuadPoly::var(2)))) + &QuadPoly::var(3);
        assert_eq!(p, expected);
    }

    #[test]
    fn b_polynomial_of_a_single_arc() {
        let d = Digraph::new(2, vec![(0, 1)]).unwrap();
        // q same-color pairs plus C(q,2) in each direction.
        let b = b_poly(&d, &Config::default()).unwrap();
        for q in 1..6i64 {
            let at = strip_q(&at_q(&b, &int(q)));
            let pairs = q * (q - 1) / 2;
            assert_eq!(at, BiPoly::from_terms([([0, 0], int(q)), ([1, 0], int(pairs)), ([0, 1], int(pairs))]));
        }
    }

    #[test]
    fn coloring_route_matches_coflow_route() {
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 0), (1, 0), (3, 3)]).unwrap();
        let m = OrientedMatroid::from_digraph(&d).unwrap();
        for q in [1, 3, 5] {
            let cfg = Config::default();
            assert_eq!(digraph_a_eval(&d, q, &cfg).unwrap(), a_eval(&m, q, &cfg).unwrap());
        }
    }
}
