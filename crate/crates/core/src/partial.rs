//! Partially oriented matroids and their two Tutte polynomials.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::rational::{frac, int, pow};
use crate::algebra::{BiPoly, Rational, UniPoly};
use crate::coflow::{a_poly_cached, Config};
use crate::error::{Error, Result};
use crate::identities::{char_polys_cached, compare, CheckReport, Q, XY};
use crate::io::Instance;
use crate::matroid::signed::{elements, Mask};
use crate::matroid::OrientedMatroid;
use crate::tutte::tutte;

/// A block of the ground partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Oriented(usize),
    /// Two opposite elements standing for one unoriented element.
    Unoriented(usize, usize),
}

impl Block {
    pub fn mask(&self) -> Mask {
        match *self {
            Block::Oriented(a) => 1 << a,
            Block::Unoriented(a, b) => 1 << a | 1 << b,
        }
    }

    /// The element standing for the block in the underlying matroid.
    pub fn representative(&self) -> usize {
        match *self {
            Block::Oriented(a) | Block::Unoriented(a, _) => a,
        }
    }

    pub fn is_unoriented(&self) -> bool {
        matches!(self, Block::Unoriented(..))
    }

    fn remap(&self, removed: Mask) -> Self {
        let shift = |e: usize| e - (removed & ((1u32 << e) - 1)).count_ones() as usize;
        match *self {
            Block::Oriented(a) => Block::Oriented(shift(a)),
            Block::Unoriented(a, b) => Block::Unoriented(shift(a), shift(b)),
        }
    }
}

/// Which of the two generalized Tutte polynomials to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    First,
    Second,
}

#[derive(Clone, Debug)]
pub struct PartialOrientedMatroid {
    om: OrientedMatroid,
    blocks: Vec<Block>,
}

/// Builds a partially oriented matroid whose doubletons are `pairs`; every other element is oriented.
pub fn make_pom(om: OrientedMatroid, pairs: &[(usize, usize)]) -> Result<PartialOrientedMatroid> {
    let mut used: Mask = 0;
    let mut blocks = Vec::new();
    for &(a, b) in pairs {
        let name = format!("{{{}, {}}}", label_or(&om, a), label_or(&om, b));
        if a >= om.len() || b >= om.len() || a == b {
            return Err(Error::InvalidPartition(format!("block {name} is not a pair of ground elements")));
        }
        let m: Mask = 1 << a | 1 << b;
        if used & m != 0 {
            return Err(Error::InvalidPartition(format!("block {name} overlaps another block")));
        }
        // Both elements may be loops once the block has been contracted away from its neighbours.
        let loops = om.is_loop(a) && om.is_loop(b);
        if !loops && !om.circuits().iter().any(|c| c.support() == m && c.is_positive()) {
            return Err(Error::InvalidPartition(format!("block {name} is not a pair of opposite elements")));
        }
        used |= m;
        blocks.push(Block::Unoriented(a.min(b), a.max(b)));
    }
    blocks.extend((0..om.len()).filter(|&e| used >> e & 1 == 0).map(Block::Oriented));
    blocks.sort_by_key(|b| b.representative());
    Ok(PartialOrientedMatroid { om, blocks })
}

fn label_or(om: &OrientedMatroid, e: usize) -> String {
    if e < om.len() {
        om.label(e).to_string()
    } else {
        format!("#{e}")
    }
}

/// Resolves the label pairs of an instance into a partially oriented matroid.
pub fn pom_from_instance(inst: &Instance) -> Result<PartialOrientedMatroid> {
    let find = |l: &str| inst.om.index_of(l).ok_or_else(|| Error::InvalidPartition(format!("unknown element {l:?}")));
    let pairs: Vec<(usize, usize)> = inst.pairs.iter().map(|(a, b)| Ok((find(a)?, find(b)?))).collect::<Result<_>>()?;
    make_pom(inst.om.clone(), &pairs)
}

/// The all-unoriented partially oriented matroid of a doubled matroid.
pub fn doubled_pom(m: &OrientedMatroid) -> PartialOrientedMatroid {
    let n = m.len();
    let pairs: Vec<(usize, usize)> = (0..n).map(|e| (e, e + n)).collect();
    make_pom(m.double(), &pairs).expect("an element and its negated copy are opposite")
}

impl PartialOrientedMatroid {
    pub fn om(&self) -> &OrientedMatroid {
        &self.om
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.om.rank()
    }

    /// Indices of the unoriented blocks.
    pub fn unoriented(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].is_unoriented()).collect()
    }

    pub fn oriented_count(&self) -> usize {
        self.blocks.len() - self.unoriented().len()
    }

    fn reps(&self, blocks: impl IntoIterator<Item = usize>) -> Mask {
        blocks.into_iter().fold(0, |m, i| m | 1 << self.blocks[i].representative())
    }

    fn block_mask(&self, blocks: impl IntoIterator<Item = usize>) -> Mask {
        blocks.into_iter().fold(0, |m, i| m | self.blocks[i].mask())
    }

    /// Rank of a set of blocks in the underlying matroid.
    pub fn rank_of_blocks(&self, blocks: impl IntoIterator<Item = usize>) -> usize {
        self.om.rank_of(self.reps(blocks))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.om.is_loop(self.blocks[i].representative())
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.om.rank_of(self.om.ground() & !self.blocks[i].mask()) < self.rank()
    }

    /// Deletes the blocks `del` and contracts the blocks `con`.
    pub fn minor(&self, del: &[usize], con: &[usize]) -> Self {
        let dm = self.block_mask(del.iter().copied());
        let cm = self.block_mask(con.iter().copied());
        let om = self.om.minor(dm, cm).expect("disjoint block sets");
        let removed = dm | cm;
        let blocks = self.blocks.iter().filter(|b| b.mask() & removed == 0).map(|b| b.remap(removed)).collect();
        Self { om, blocks }
    }

    /// One oriented matroid per choice of an element in each doubleton.
    pub fn complete_orientations(&self, cfg: &Config) -> Result<Vec<OrientedMatroid>> {
        let pairs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .filter_map(|b| match *b {
                Block::Unoriented(a, b) => Some((a, b)),
                Block::Oriented(_) => None,
            })
            .collect();
        let count = 1u128 << pairs.len();
        if count > cfg.budget as u128 {
            return Err(Error::BudgetExceeded { required: count, budget: cfg.budget });
        }
        Ok((0..1u32 << pairs.len())
            .map(|s| {
                let del = pairs.iter().enumerate().fold(0, |m, (i, &(a, b))| m | 1 << if s >> i & 1 == 1 { a } else { b });
                self.om.delete(del)
            })
            .collect())
    }
}

fn q_of_xy() -> BiPoly {
    let one = BiPoly::one();
    &(&BiPoly::var(0) - &one) * &(&BiPoly::var(1) - &one)
}

/// Substitutes `q = (x-1)(y-1)` into a polynomial in `(q, y)` and divides by `(y-1)^r`.
fn finish(p: &BiPoly, r: usize) -> Result<BiPoly> {
    let mut out = p.compose(&[q_of_xy(), BiPoly::var(1)]);
    for _ in 0..r {
        out = out.div_linear(1, &Rational::one())?;
    }
    Ok(out)
}

/// Both invariants from their definitions through the A-polynomial.
pub fn t_poly(p: &PartialOrientedMatroid, v: Variant, cfg: &Config) -> Result<BiPoly> {
    let e = p.blocks.len() as u32;
    let n = p.om.len() as u32;
    let r = p.rank();
    match v {
        Variant::First => {
            // y^|E| A(q, 1/y, 1) = y^(|E|-|A|) * sum c q^k y^(|A|-i)
            let a = a_poly_cached(&p.om, cfg)?;
            let lifted = BiPoly::from_terms(a.terms().map(|(x, c)| ([x[0], n - x[1]], c.clone())));
            finish(&lifted.div_var_pow(1, n - e)?, r)
        }
        Variant::Second => {
            let y = BiPoly::var(1);
            let two_minus_y = &BiPoly::int(2) - &y;
            let mut sum = BiPoly::zero();
            for o in p.complete_orientations(cfg)? {
                for (x, c) in a_poly_cached(&o, cfg)?.terms() {
                    let t = &BiPoly::monomial([x[0], e - x[1]], c.clone()) * &two_minus_y.pow(x[1]);
                    sum = sum + t;
                }
            }
            finish(&sum.scale(&pow(&frac(1, 2), e)), r)
        }
    }
}

pub fn t1(p: &PartialOrientedMatroid, cfg: &Config) -> Result<BiPoly> {
    t_poly(p, Variant::First, cfg)
}

pub fn t2(p: &PartialOrientedMatroid, cfg: &Config) -> Result<BiPoly> {
    t_poly(p, Variant::Second, cfg)
}

fn xm1_pow(k: usize) -> BiPoly {
    (&BiPoly::var(0) - &BiPoly::one()).pow(k as u32)
}

fn ym1_pow(k: usize) -> BiPoly {
    (&BiPoly::var(1) - &BiPoly::one()).pow(k as u32)
}

/// Expansion into strict characteristic polynomials of deletions, summed over deleted sets.
pub fn t_by_expansion(p: &PartialOrientedMatroid, v: Variant, cfg: &Config) -> Result<BiPoly> {
    let oms = match v {
        Variant::First => vec![p.om.clone()],
        Variant::Second => p.complete_orientations(cfg)?,
    };
    let e = p.blocks.len();
    let r = p.rank();
    let q = q_of_xy();
    let half_y = BiPoly::var(1).scale(&frac(1, 2));
    let mut out = BiPoly::zero();
    for om in &oms {
        for del in 0..=om.ground() {
            let minor = om.delete(del);
            let chi = char_polys_cached(&minor, cfg)?.strict;
            if chi.is_zero() {
                continue;
            }
            let kept = minor.len();
            let rk = minor.rank();
            let yfac = match v {
                Variant::First if kept > e => {
                    return Err(Error::NonPolynomialResult("negative power of y in the expansion".into()));
                }
                Variant::First => BiPoly::var(1).pow((e - kept) as u32),
                Variant::Second => half_y.pow(del.count_ones()),
            };
            let sign = if kept % 2 == 0 { Rational::one() } else { -Rational::one() };
            let term = &(&(&xm1_pow(r - rk) * &yfac) * &ym1_pow(kept - rk)) * &chi.compose(&[q.clone()]);
            out = out + term.scale(&sign);
        }
    }
    Ok(out)
}

/// Eliminates the unoriented blocks in `order` (indices into the current block list,
/// eliminated left to right) by deletion and contraction.
pub fn t_by_recurrence(p: &PartialOrientedMatroid, v: Variant, order: &[usize], cfg: &Config) -> Result<BiPoly> {
    let Some((&first, rest)) = order.split_first() else {
        return t_poly(p, v, cfg);
    };
    if !p.blocks.get(first).is_some_and(Block::is_unoriented) {
        return Err(Error::InvalidArgument(format!("block {first} is not an unoriented block")));
    }
    // Blocks after `first` shift down by one once it is removed.
    let rest: Vec<usize> = rest.iter().map(|&i| if i > first { i - 1 } else { i }).collect();
    if p.is_loop(first) {
        Ok(&BiPoly::var(1) * &t_by_recurrence(&p.minor(&[first], &[]), v, &rest, cfg)?)
    } else if p.is_coloop(first) {
        Ok(&BiPoly::var(0) * &t_by_recurrence(&p.minor(&[], &[first]), v, &rest, cfg)?)
    } else {
        Ok(t_by_recurrence(&p.minor(&[first], &[]), v, &rest, cfg)? + t_by_recurrence(&p.minor(&[], &[first]), v, &rest, cfg)?)
    }
}

fn subsets(items: &[usize]) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
    (0..1u32 << items.len()).map(move |s| {
        let (inside, outside): (Vec<(usize, usize)>, Vec<(usize, usize)>) =
            items.iter().copied().enumerate().partition(|&(i, _)| s >> i & 1 == 1);
        (inside.into_iter().map(|x| x.1).collect(), outside.into_iter().map(|x| x.1).collect())
    })
}

/// The subset expansion over all sets of unoriented blocks.
pub fn t_by_subsets(p: &PartialOrientedMatroid, v: Variant, cfg: &Config) -> Result<BiPoly> {
    let h = p.unoriented();
    let r = p.rank();
    let mut out = BiPoly::zero();
    for (s, sbar) in subsets(&h) {
        let kept = p.minor(&sbar, &[]);
        let xe = r - kept.rank();
        let ye = s.len() - p.rank_of_blocks(s.iter().copied());
        let t = t_poly(&p.minor(&sbar, &s), v, cfg)?;
        out = out + &(&xm1_pow(xe) * &ym1_pow(ye)) * &t;
    }
    Ok(out)
}

/// Potential bases with their internal and external activities, all as block indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialBasis {
    pub basis: Vec<usize>,
    pub internal: Vec<usize>,
    pub external: Vec<usize>,
}

/// Independent sets of unoriented blocks that extend to a basis with oriented blocks.
/// `order` lists the unoriented blocks from smallest to largest.
pub fn potential_bases(p: &PartialOrientedMatroid, order: &[usize]) -> Vec<PotentialBasis> {
    let r = p.rank();
    let h = p.unoriented();
    let oriented: Vec<usize> = (0..p.blocks.len()).filter(|i| !h.contains(i)).collect();
    let rank_under = |s: &[usize]| p.rank_of_blocks(s.iter().copied());
    let position = |e: usize| order.iter().position(|&x| x == e).expect("order covers the unoriented blocks");
    // Supports of circuits and cocircuits of the underlying matroid, as block sets.
    let rep_block: Vec<(usize, usize)> = p.blocks.iter().enumerate().map(|(i, b)| (b.representative(), i)).collect();
    let reps = p.reps(0..p.blocks.len());
    let under = p.om.restrict(reps);
    let rep_elems: Vec<usize> = elements(reps).collect();
    let to_blocks =
        |m: Mask| -> Vec<usize> { elements(m).map(|k| rep_block.iter().find(|(r, _)| *r == rep_elems[k]).unwrap().1).collect() };
    let circuits: Vec<Vec<usize>> = under.circuits().iter().map(|c| to_blocks(c.support())).collect();
    let cocircuits: Vec<Vec<usize>> = under.cocircuits().iter().map(|c| to_blocks(c.support())).collect();
    let min_of = |set: &[usize]| set.iter().copied().min_by_key(|&e| position(e));
    let mut out = Vec::new();
    for (b, bbar) in subsets(&h) {
        let with_oriented: Vec<usize> = b.iter().chain(&oriented).copied().collect();
        if rank_under(&b) != b.len() || rank_under(&with_oriented) != r {
            continue;
        }
        let internal: Vec<usize> = b
            .iter()
            .copied()
            .filter(|&e| {
                cocircuits.iter().any(|d| d.contains(&e) && d.iter().all(|x| *x == e || bbar.contains(x)) && min_of(d) == Some(e))
            })
            .collect();
        let external: Vec<usize> = bbar
            .iter()
            .copied()
            .filter(|&e| {
                circuits.iter().any(|c| c.contains(&e) && c.iter().all(|x| *x == e || b.contains(x)) && min_of(c) == Some(e))
            })
            .collect();
        out.push(PotentialBasis { basis: b, internal, external });
    }
    out
}

/// The activity expansion over potential bases for the given linear order of unoriented blocks.
pub fn t_by_activities(p: &PartialOrientedMatroid, v: Variant, order: &[usize], cfg: &Config) -> Result<BiPoly> {
    let h = p.unoriented();
    let mut out = BiPoly::zero();
    for pb in potential_bases(p, order) {
        let bbar: Vec<usize> = h.iter().copied().filter(|e| !pb.basis.contains(e)).collect();
        let t = t_poly(&p.minor(&bbar, &pb.basis), v, cfg)?;
        let mono = BiPoly::monomial([pb.internal.len() as u32, pb.external.len() as u32], Rational::one());
        out = out + &mono * &t;
    }
    Ok(out)
}

/// Seeded random orders of the unoriented blocks.
pub fn random_orders(p: &PartialOrientedMatroid, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut h = p.unoriented();
            h.shuffle(&mut rng);
            h
        })
        .collect()
}

fn at(p: &BiPoly, x: i64, y: i64) -> UniPoly {
    UniPoly::constant(p.eval(&[int(x), int(y)]))
}

/// Evaluations at special points and on the lines `y = 0`, `y = 1`, against direct enumeration.
pub fn pom_evaluations(p: &PartialOrientedMatroid, name: &str, cfg: &Config) -> Result<Vec<CheckReport>> {
    let first = t1(p, cfg)?;
    let second = t2(p, cfg)?;
    let orientations = p.complete_orientations(cfg)?;
    let acyclic = orientations.iter().filter(|o| o.classify().acyclic).count() as i64;
    let cyclic = orientations.iter().filter(|o| o.classify().totally_cyclic).count() as i64;
    let mut out = vec![
        compare("t1_counts_acyclic_orientations", name, &Q, &at(&first, 2, 0), &UniPoly::int(acyclic)),
        compare("t2_counts_acyclic_orientations", name, &Q, &at(&second, 2, 0), &UniPoly::int(acyclic)),
        compare("t2_counts_totally_cyclic_orientations", name, &Q, &at(&second, 0, 2), &UniPoly::int(cyclic)),
    ];
    // Independent-set sums, in the shifted variable x + 1.
    let x = UniPoly::var(0);
    let r = p.rank();
    let (mut ind1, mut ind2) = (UniPoly::zero(), UniPoly::zero());
    let blocks: Vec<usize> = (0..p.blocks.len()).collect();
    for (f, _) in subsets(&blocks) {
        if p.rank_of_blocks(f.iter().copied()) != f.len() {
            continue;
        }
        let mono = x.pow((r - f.len()) as u32);
        let oriented_in_f = f.iter().filter(|&&i| !p.blocks[i].is_unoriented()).count() as u32;
        ind1 = ind1 + mono.scale(&pow(&frac(1, 2), oriented_in_f));
        ind2 = ind2 + mono;
    }
    let ind2 = ind2.scale(&pow(&frac(1, 2), p.oriented_count() as u32));
    let shift = [&x + &UniPoly::one(), UniPoly::one()];
    out.push(compare("t1_on_y_equals_one", name, &["x"], &first.compose(&shift), &ind1));
    out.push(compare("t2_on_y_equals_one", name, &["x"], &second.compose(&shift), &ind2));
    // y = 0 against strict characteristic polynomials at 1 - x.
    let mut chi_sum = UniPoly::zero();
    for o in &orientations {
        chi_sum = chi_sum + char_polys_cached(o, cfg)?.strict;
    }
    let sign = if r % 2 == 0 { Rational::one() } else { -Rational::one() };
    let rhs = chi_sum.compose(&[&UniPoly::one() - &x]).scale(&sign);
    let on_axis = [x.clone(), UniPoly::zero()];
    out.push(compare("t1_on_y_equals_zero", name, &["x"], &first.compose(&on_axis), &rhs));
    out.push(compare("t2_on_y_equals_zero", name, &["x"], &second.compose(&on_axis), &rhs));
    Ok(out)
}

/// Every algorithm for both invariants must agree; the all-unoriented case must give the Tutte polynomial.
pub fn verify_pom(p: &PartialOrientedMatroid, name: &str, cfg: &Config) -> Result<Vec<CheckReport>> {
    let mut out = pom_evaluations(p, name, cfg)?;
    let seed = name.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    let orders = random_orders(p, 2, seed);
    for (v, tag) in [(Variant::First, "t1"), (Variant::Second, "t2")] {
        let t = t_poly(p, v, cfg)?;
        out.push(compare(&format!("{tag}_by_expansion"), name, &XY, &t_by_expansion(p, v, cfg)?, &t));
        out.push(compare(&format!("{tag}_by_subsets"), name, &XY, &t_by_subsets(p, v, cfg)?, &t));
        for (k, order) in orders.iter().enumerate() {
            out.push(compare(&format!("{tag}_by_recurrence[{k}]"), name, &XY, &t_by_recurrence(p, v, order, cfg)?, &t));
            out.push(compare(&format!("{tag}_by_activities[{k}]"), name, &XY, &t_by_activities(p, v, order, cfg)?, &t));
        }
    }
    if p.oriented_count() == 0 {
        let under = p.om.restrict(p.reps(0..p.blocks.len()));
        let t = tutte(&under, cfg)?;
        out.push(compare("t1_is_tutte", name, &XY, &t1(p, cfg)?, &t));
        out.push(compare("t2_is_tutte", name, &XY, &t2(p, cfg)?, &t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Digraph;

    fn digraph(n: usize, arcs: &[(usize, usize)]) -> OrientedMatroid {
        OrientedMatroid::from_digraph(&Digraph::new(n, arcs.to_vec()).unwrap()).unwrap()
    }

    /// Triangle on 0, 1, 2 with unoriented a = 01, b = 12, c = 02 and an oriented d parallel to a.
    fn p2() -> PartialOrientedMatroid {
        let om = digraph(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0), (0, 1)]);
        make_pom(om, &[(0, 1), (2, 3), (4, 5)]).unwrap()
    }

    #[test]
    fn validation() {
        let om = digraph(2, &[(0, 1), (0, 1)]);
        assert!(matches!(make_pom(om, &[(0, 1)]), Err(Error::InvalidPartition(_))));
        let digon = digraph(2, &[(0, 1), (1, 0)]);
        let p = make_pom(digon, &[(0, 1)]).unwrap();
        let cfg = Config::default();
        let os = p.complete_orientations(&cfg).unwrap();
        assert_eq!(os.len(), 2);
        assert!(os.iter().all(|o| o.len() == 1));
    }

    #[test]
    fn doubled_triangle_gives_tutte() {
        let tri = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let p = doubled_pom(&tri);
        let cfg = Config::default();
        let t = tutte(&tri, &cfg).unwrap();
        assert_eq!(t1(&p, &cfg).unwrap(), t);
        assert_eq!(t2(&p, &cfg).unwrap(), t);
        assert_eq!(t.eval(&[int(2), int(0)]), int(6));
    }

    #[test]
    fn oriented_coloop_closed_form() {
        // y (1 + (q - 1)(1/y + 1)/2) / (y - 1) with q = (x-1)(y-1), checked pointwise.
        let p = make_pom(digraph(2, &[(0, 1)]), &[]).unwrap();
        let t = t1(&p, &Config::default()).unwrap();
        for (x, y) in [(2, 3), (5, -1), (0, 7)] {
            let (xr, yr) = (int(x), int(y));
            let q = (&xr - int(1)) * (&yr - int(1));
            let expect = &yr * (int(1) + (q - int(1)) * (int(1) / &yr + int(1)) / int(2)) / (&yr - int(1));
            assert_eq!(t.eval(&[xr, yr]), expect);
        }
    }

    #[test]
    fn recurrence_on_loops_and_coloops() {
        let cfg = Config::default();
        let digon = make_pom(digraph(2, &[(0, 1), (1, 0)]), &[(0, 1)]).unwrap();
        assert!(digon.is_coloop(0));
        let rest = t_poly(&digon.minor(&[], &[0]), Variant::First, &cfg).unwrap();
        assert_eq!(t1(&digon, &cfg).unwrap(), &BiPoly::var(0) * &rest);
        let loops = make_pom(digraph(1, &[(0, 0), (0, 0)]), &[(0, 1)]).unwrap();
        assert!(loops.is_loop(0));
        let rest = t_poly(&loops.minor(&[0], &[]), Variant::Second, &cfg).unwrap();
        assert_eq!(t2(&loops, &cfg).unwrap(), &BiPoly::var(1) * &rest);
    }

    #[test]
    fn p2_activities_and_linear_relation() {
        let p = p2();
        let h = p.unoriented();
        assert_eq!(h, vec![0, 1, 2]);
        let pbs = potential_bases(&p, &h);
        let bases: Vec<Vec<usize>> = pbs.iter().map(|b| b.basis.clone()).collect();
        assert_eq!(bases.len(), 5);
        for b in [vec![0, 1], vec![0, 2], vec![1, 2], vec![1], vec![2]] {
            assert!(bases.contains(&b), "{b:?}");
        }
        let ab = pbs.iter().find(|b| b.basis == vec![0, 1]).unwrap();
        assert_eq!((ab.internal.clone(), ab.external.clone()), (vec![1], vec![]));
        let bc = pbs.iter().find(|b| b.basis == vec![1, 2]).unwrap();
        assert_eq!((bc.internal.clone(), bc.external.clone()), (vec![], vec![0]));

        let cfg = Config::default();
        // P0 is a single oriented loop, P1 a single oriented coloop.
        let p0 = make_pom(digraph(1, &[(0, 0)]), &[]).unwrap();
        let p1 = make_pom(digraph(2, &[(0, 1)]), &[]).unwrap();
        let (x, y, one) = (BiPoly::var(0), BiPoly::var(1), BiPoly::one());
        for v in [Variant::First, Variant::Second] {
            let lhs = t_poly(&p, v, &cfg).unwrap();
            let rhs = &(&(&x + &y) + &one) * &t_poly(&p0, v, &cfg).unwrap() + &(&x + &one) * &t_poly(&p1, v, &cfg).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn recurrence_rejects_oriented_blocks() {
        let p = p2();
        assert!(matches!(t_by_recurrence(&p, Variant::First, &[3], &Config::default()), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn p2_suite_passes() {
        let r = verify_pom(&p2(), "p2", &Config::default()).unwrap();
        for c in &r {
            assert!(c.passed(), "{}", serde_json::to_string(c).unwrap());
        }
    }
}
