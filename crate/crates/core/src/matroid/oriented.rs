use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::digraph::Digraph;
use super::signed::{elements, full, mask_of, Mask, SignedSubset};
use crate::algebra::matrix::combinations;
use crate::algebra::rational::{to_i64, Rational};
use crate::algebra::{QMatrix, TuStatus};
use crate::error::{Error, Result};

pub const DEFAULT_GROUND_LIMIT: usize = 16;
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 6;
const AXIOM_CHECK_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuPolicy {
    /// Exhaustive check within the size limit, refuse beyond it.
    Verify,
    /// Trust the caller; beyond the size limit every circuit vector must still be a {-1, 0, 1} vector.
    Assume,
}

#[derive(Clone, Copy, Debug)]
pub struct MatroidOptions {
    pub tu: TuPolicy,
    pub exhaustive_limit: usize,
    pub ground_limit: usize,
}

impl Default for MatroidOptions {
    fn default() -> Self {
        Self { tu: TuPolicy::Verify, exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT, ground_limit: DEFAULT_GROUND_LIMIT }
    }
}

impl MatroidOptions {
    pub fn assume_tu() -> Self {
        Self { tu: TuPolicy::Assume, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub acyclic: bool,
    pub totally_cyclic: bool,
    /// Elements lying on some positive circuit.
    pub cyclic_part: Mask,
}

/// Oriented matroid of a real matrix, stored with its reduced row echelon
/// representation and the canonical representatives of its signed circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMatroid {
    labels: Vec<String>,
    rep: QMatrix,
    pivots: Vec<usize>,
    circuits: Vec<SignedSubset>,
}

impl OrientedMatroid {
    pub fn from_matrix(m: &QMatrix, labels: Vec<String>, opts: MatroidOptions) -> Result<Self> {
        check_labels(&labels, m.cols(), opts.ground_limit)?;
        let guard = match opts.tu {
            TuPolicy::Verify => match m.tu_status(opts.exhaustive_limit) {
                TuStatus::TotallyUnimodular => false,
                TuStatus::Violated { rows, cols, det } => {
                    return Err(Error::NotTotallyUnimodular(format!(
                        "submatrix on rows {rows:?}, columns {cols:?} has determinant {det}"
                    )))
                }
                TuStatus::NonIntegral { row, col } => {
                    return Err(Error::NotTotallyUnimodular(format!("entry ({row}, {col}) is not an integer")))
                }
                TuStatus::Unchecked => {
                    return Err(Error::TuUnverified { rows: m.rows(), cols: m.cols(), limit: opts.exhaustive_limit })
                }
            },
            TuPolicy::Assume => m.rows().min(m.cols()) > opts.exhaustive_limit,
        };
        let om = Self::build(m, labels, guard)?;
        if om.len() <= AXIOM_CHECK_LIMIT {
            check_circuit_axioms(&om.circuits).map_err(Error::InvalidArgument)?;
        }
        Ok(om)
    }

    /// Incidence matrices of digraphs are always unimodular, so no check runs.
    pub fn from_digraph(d: &Digraph) -> Result<Self> {
        check_labels(d.labels(), d.arcs().len(), DEFAULT_GROUND_LIMIT)?;
        Self::build(&d.incidence(), d.labels().to_vec(), false)
    }

    fn build(m: &QMatrix, labels: Vec<String>, guard: bool) -> Result<Self> {
        let (rep, pivots) = m.rref();
        let circuits = compute_circuits(&rep, guard)?;
        Ok(Self { labels, rep, pivots, circuits })
    }

    /// Same circuits with a new representation, used after operations that keep validity.
    fn rebuild(rep: &QMatrix, labels: Vec<String>) -> Self {
        Self::build(rep, labels, false).expect("unguarded rebuild cannot fail")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ground(&self) -> Mask {
        full(self.len())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row-reduced representation with independent rows.
    pub fn rep(&self) -> &QMatrix {
        &self.rep
    }

    /// Pivot columns of the representation, a basis.
    pub fn basis(&self) -> Mask {
        mask_of(&self.pivots)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// One representative per pair `{C, -C}`, in canonical form, sorted.
    pub fn circuits(&self) -> &[SignedSubset] {
        &self.circuits
    }

    pub fn rank_of(&self, s: Mask) -> usize {
        let cols: Vec<usize> = elements(s & self.ground()).collect();
        self.rep.rank_of_columns(&cols)
    }

    pub fn closure(&self, s: Mask) -> Mask {
        let r = self.rank_of(s);
        (0..self.len()).filter(|&e| s >> e & 1 == 1 || self.rank_of(s | 1 << e) == r).fold(0, |m, e| m | 1 << e)
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.rank_of(s) == s.count_ones() as usize
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(1 << e) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.ground() & !(1 << e)) < self.rank()
    }

    /// `f(a) = sum_i coeff[a][i] * f(pivot_i)` for every element, valid for
    /// coflows when the coefficients are integers.
    pub fn extension_coefficients(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.len())
            .map(|a| {
                (0..self.rank())
                    .map(|i| {
                        to_i64(self.rep.get(i, a)).ok_or_else(|| {
                            Error::NotTotallyUnimodular(format!(
                                "element {} has a non-integral coordinate in the pivot basis",
                                self.labels[a]
                            ))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Fundamental circuits of the elements outside `basis`, each oriented
    /// so the non-basis element is positive.
    pub fn fundamental_circuits(&self, basis: Mask) -> Result<Vec<(usize, SignedSubset)>> {
        if basis.count_ones() as usize != self.rank() || !self.is_independent(basis) {
            return Err(Error::NotABasis(format!("{:?}", elements(basis).collect::<Vec<_>>())));
        }
        let mut out = Vec::new();
        for e in (0..self.len()).filter(|&e| basis >> e & 1 == 0) {
            let cols: Vec<usize> = elements(basis | 1 << e).collect();
            let k = self.rep.kernel_of_columns(&cols);
            debug_assert_eq!(k.len(), 1);
            let v = &k[0];
            let ei = cols.iter().position(|&c| c == e).unwrap();
            let flip = v[ei].is_negative();
            let (mut pos, mut neg) = (0, 0);
            for (x, &c) in v.iter().zip(&cols) {
                if x.is_zero() {
                    continue;
                }
                if x.is_positive() != flip {
                    pos |= 1 << c;
                } else {
                    neg |= 1 << c;
                }
            }
            out.push((e, SignedSubset::new(pos, neg)));
        }
        Ok(out)
    }

    /// Dual oriented matroid on the same labels, represented by `[-D^T | I]`.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut rows = vec![vec![Rational::zero(); n]; free.len()];
        for (k, &j) in free.iter().enumerate() {
            rows[k][j] = Rational::from_integer(1.into());
            for (i, &p) in self.pivots.iter().enumerate() {
                rows[k][p] = -self.rep.get(i, j).clone();
            }
        }
        Self::rebuild(&QMatrix::from_rows(rows, n), self.labels.clone())
    }

    /// Signed cocircuits, the circuits of the dual.
    pub fn cocircuits(&self) -> Vec<SignedSubset> {
        self.dual().circuits
    }

    /// Deletes `del` and contracts `contr`; the remaining elements keep their order.
    pub fn minor(&self, del: Mask, contr: Mask) -> Result<Self> {
        if del & contr != 0 {
            return Err(Error::InvalidArgument("deletion and contraction sets overlap".into()));
        }
        let n = self.len();
        let mut rows = self.rep.to_rows();
        for e in elements(contr) {
            if let Some(i) = rows.iter().position(|r| !r[e].is_zero()) {
                let pivot_row = rows.remove(i);
                for r in rows.iter_mut() {
                    if !r[e].is_zero() {
                        let f = &r[e] / &pivot_row[e];
                        for j in 0..n {
                            let d = &f * &pivot_row[j];
                            r[j] -= d;
                        }
                    }
                }
            }
        }
        let keep: Vec<usize> = (0..n).filter(|&e| (del | contr) >> e & 1 == 0).collect();
        let m = QMatrix::from_rows(rows, n).select_columns(&keep);
        let labels = keep.iter().map(|&e| self.labels[e].clone()).collect();
        Ok(Self::rebuild(&m, labels))
    }

    pub fn delete(&self, s: Mask) -> Self {
        self.minor(s, 0).unwrap()
    }

    pub fn contract(&self, s: Mask) -> Self {
        self.minor(0, s).unwrap()
    }

    /// Restriction to `s`, i.e. deletion of the complement.
    pub fn restrict(&self, s: Mask) -> Self {
        self.delete(self.ground() & !s)
    }

    /// Negates the elements of `s`.
    pub fn reorient(&self, s: Mask) -> Self {
        let cols: Vec<usize> = elements(s & self.ground()).collect();
        let (rep, pivots) = self.rep.negate_columns(&cols).rref();
        let mut circuits: Vec<SignedSubset> = self.circuits.iter().map(|c| c.reorient(s).canonical()).collect();
        circuits.sort();
        Self { labels: self.labels.clone(), rep, pivots, circuits }
    }

    /// Whether reorienting `s` leaves no positive circuit, without building the reorientation.
    pub fn reoriented_is_acyclic(&self, s: Mask) -> bool {
        !self.circuits.iter().any(|c| c.reorient(s).is_positive())
    }

    pub fn classify(&self) -> Classification {
        let cyclic_part = self.circuits.iter().filter(|c| c.is_positive()).fold(0, |m, c| m | c.support());
        Classification { acyclic: cyclic_part == 0, totally_cyclic: cyclic_part == self.ground(), cyclic_part }
    }

    /// Appends a negated copy `e'` of every element `e`; element `e'` sits at index `e + n`.
    pub fn double(&self) -> Self {
        let n = self.len();
        let rows: Vec<Vec<Rational>> = self
            .rep
            .to_rows()
            .into_iter()
            .map(|r| {
                let neg: Vec<Rational> = r.iter().map(|x| -x.clone()).collect();
                r.into_iter().chain(neg).collect()
            })
            .collect();
        let labels = self.labels.iter().cloned().chain(self.labels.iter().map(|l| format!("{l}'"))).collect();
        Self::rebuild(&QMatrix::from_rows(rows, 2 * n), labels)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.len(), other.len());
        let mut rows = Vec::new();
        for r in self.rep.to_rows() {
            rows.push(r.into_iter().chain(std::iter::repeat(Rational::zero()).take(n2)).collect());
        }
        for r in other.rep.to_rows() {
            rows.push(std::iter::repeat(Rational::zero()).take(n1).chain(r).collect());
        }
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('+');
            }
            labels.push(l);
        }
        Self::rebuild(&QMatrix::from_rows(rows, n1 + n2), labels)
    }

    /// Flats that are unions of positive circuits.
    pub fn cyclic_flats(&self) -> Vec<Mask> {
        let supports: Vec<Mask> = self.circuits.iter().filter(|c| c.is_positive()).map(|c| c.support()).collect();
        (0..=self.ground())
            .filter(|&t| {
                let covered = supports.iter().filter(|&&c| c & !t == 0).fold(0, |m, &c| m | c);
                covered == t && self.closure(t) == t
            })
            .collect()
    }

    /// Sets whose reorientation leaves the circuit set unchanged.
    pub fn stabilizer(&self) -> Vec<Mask> {
        (0..=self.ground())
            .filter(|&s| {
                let mut c: Vec<SignedSubset> = self.circuits.iter().map(|c| c.reorient(s).canonical()).collect();
                c.sort();
                c == self.circuits
            })
            .collect()
    }

    pub fn same_circuits(&self, other: &Self) -> bool {
        self.len() == other.len() && self.circuits == other.circuits
    }

    /// Serialization of the circuit set, invariant under the choice of representation.
    pub fn key(&self) -> String {
        circuit_key(self.len(), &self.circuits)
    }

    /// Lexicographically smallest circuit serialization over all relabelings of the ground set.
    pub fn isomorphism_key(&self) -> String {
        let n = self.len();
        let mut best: Option<Vec<SignedSubset>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut visit = |perm: &[usize]| {
            let mut c: Vec<SignedSubset> = self.circuits.iter().map(|c| c.permute(perm).canonical()).collect();
            c.sort();
            if best.as_ref().map_or(true, |b| c < *b) {
                best = Some(c);
            }
        };
        heap_permutations(&mut perm, n, &mut visit);
        circuit_key(n, &best.unwrap_or_default())
    }
}

fn circuit_key(n: usize, circuits: &[SignedSubset]) -> String {
    let body: Vec<String> = circuits.iter().map(|c| format!("{:x}/{:x}", c.pos, c.neg)).collect();
    format!("{n}:{}", body.join(","))
}

fn heap_permutations<F: FnMut(&[usize])>(a: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k <= 1 {
        visit(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, visit);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(a, k - 1, visit);
}

fn check_labels(labels: &[String], cols: usize, limit: usize) -> Result<()> {
    if cols > limit {
        return Err(Error::GroundTooLarge { size: cols, limit });
    }
    if labels.len() != cols {
        return Err(Error::InvalidArgument(format!("{} labels for {cols} columns", labels.len())));
    }
    let set: BTreeSet<&String> = labels.iter().collect();
    if set.len() != labels.len() {
        return Err(Error::InvalidArgument("element labels must be distinct".into()));
    }
    Ok(())
}

/// Minimal dependent column sets, signed by their kernel vectors.
fn compute_circuits(rep: &QMatrix, guard: bool) -> Result<Vec<SignedSubset>> {
    let n = rep.cols();
    let r = rep.rows();
    let mut found: Vec<SignedSubset> = Vec::new();
    for k in 1..=(r + 1).min(n) {
        for cols in combinations(n, k) {
            let m = mask_of(&cols);
            if found.iter().any(|c| c.support() & !m == 0) {
                continue;
            }
            if rep.rank_of_columns(&cols) == k {
                continue;
            }
            let kernel = rep.kernel_of_columns(&cols);
            let v = &kernel[0];
            if guard {
                let scale = v.iter().find(|x| !x.is_zero()).unwrap().abs();
                if v.iter().any(|x| (x / &scale).abs() != Rational::from_integer(1.into())) {
                    return Err(Error::NotTotallyUnimodular(format!(
                        "circuit on columns {cols:?} has kernel vector outside {{-1, 0, 1}}"
                    )));
                }
            }
            let (mut pos, mut neg) = (0, 0);
            for (x, &c) in v.iter().zip(&cols) {
                if x.is_positive() {
                    pos |= 1 << c;
                } else if x.is_negative() {
                    neg |= 1 << c;
                }
            }
            found.push(SignedSubset::new(pos, neg).canonical());
        }
    }
    found.sort();
    Ok(found)
}

/// Checks the signed circuit axioms on a list of canonical representatives.
pub fn check_circuit_axioms(circuits: &[SignedSubset]) -> std::result::Result<(), String> {
    let all: Vec<SignedSubset> = circuits.iter().flat_map(|c| [*c, c.negate()]).collect();
    let set: BTreeSet<SignedSubset> = all.iter().copied().collect();
    for c in &all {
        if c.support() == 0 {
            return Err("empty circuit".into());
        }
    }
    for c in &all {
        for d in &all {
            if c != d && *c != d.negate() && c.support() & !d.support() == 0 {
                return Err(format!("circuit {c:?} has support inside {d:?}"));
            }
        }
    }
    for c in &all {
        for d in &all {
            if *c == d.negate() {
                continue;
            }
            for e in elements(c.pos & d.neg) {
                let pos = (c.pos | d.pos) & !(1 << e);
                let neg = (c.neg | d.neg) & !(1 << e);
                if !set.iter().any(|z| z.pos & !pos == 0 && z.neg & !neg == 0) {
                    return Err(format!("elimination of {e} between {c:?} and {d:?} fails"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::matroid::signed::sign_overlap;

    fn triangle_with_pendant() -> OrientedMatroid {
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        OrientedMatroid::from_digraph(&d).unwrap()
    }

    fn u24() -> QMatrix {
        QMatrix::from_ints(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]], 4)
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(crate::matroid::digraph::default_label).collect()
    }

    #[test]
    fn digraph_circuits() {
        let m = triangle_with_pendant();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.circuits(), &[SignedSubset::new(0b0111, 0)]);
        assert!(m.is_coloop(3));
        let c = m.classify();
        assert!(!c.acyclic && !c.totally_cyclic);
        assert_eq!(c.cyclic_part, 0b0111);
    }

    #[test]
    fn digraph_matches_its_incidence_matrix() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap();
        let a = OrientedMatroid::from_digraph(&d).unwrap();
        let b = OrientedMatroid::from_matrix(&d.incidence(), labels(4), MatroidOptions::default()).unwrap();
        assert!(a.same_circuits(&b));
    }

    #[test]
    fn tu_policies() {
        let m = u24();
        assert!(matches!(
            OrientedMatroid::from_matrix(&m, labels(4), MatroidOptions::default()),
            Err(Error::NotTotallyUnimodular(_))
        ));
        let om = OrientedMatroid::from_matrix(&m, labels(4), MatroidOptions::assume_tu()).unwrap();
        assert_eq!(om.circuits().len(), 4);
        // With the exhaustive limit below the size the kernel guard catches it.
        let opts = MatroidOptions { exhaustive_limit: 1, ..MatroidOptions::assume_tu() };
        assert!(matches!(OrientedMatroid::from_matrix(&m, labels(4), opts), Err(Error::NotTotallyUnimodular(_))));
        let opts = MatroidOptions { exhaustive_limit: 1, ..MatroidOptions::default() };
        assert!(matches!(OrientedMatroid::from_matrix(&m, labels(4), opts), Err(Error::TuUnverified { .. })));
    }

    #[test]
    fn ground_limit() {
        let m = QMatrix::from_ints(&[vec![1; 17]], 17);
        assert!(matches!(
            OrientedMatroid::from_matrix(&m, labels(17), MatroidOptions::default()),
            Err(Error::GroundTooLarge { size: 17, .. })
        ));
    }

    #[test]
    fn orthogonality_of_circuits_and_cocircuits() {
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3), (0, 3), (1, 3)]).unwrap();
        let m = OrientedMatroid::from_digraph(&d).unwrap();
        let cocircuits = m.cocircuits();
        assert_eq!(m.dual().rank(), m.len() - m.rank());
        for c in m.circuits() {
            for k in &cocircuits {
                let (a, b) = sign_overlap(c, k);
                assert!((a == 0 && b == 0) || (a > 0 && b > 0), "{c:?} vs {k:?}");
            }
        }
        assert!(m.dual().dual().same_circuits(&m));
    }

    #[test]
    fn minors_of_a_triangle() {
        let m = triangle_with_pendant();
        let c = m.contract(1 << 0);
        assert_eq!(c.len(), 3);
        assert_eq!(c.circuits(), &[SignedSubset::new(0b011, 0)]);
        let d = m.delete(1 << 0);
        assert!(d.circuits().is_empty());
        // Contracting a loop equals deleting it.
        let l = m.contract(0b0011);
        assert_eq!(l.circuits(), &[SignedSubset::new(0b01, 0)]);
        assert!(l.contract(1).same_circuits(&l.delete(1)));
    }

    #[test]
    fn fundamental_circuits_and_basis_errors() {
        let m = triangle_with_pendant();
        let fc = m.fundamental_circuits(0b1011).unwrap();
        assert_eq!(fc, vec![(2, SignedSubset::new(0b0111, 0))]);
        assert!(matches!(m.fundamental_circuits(0b0111), Err(Error::NotABasis(_))));
    }

    #[test]
    fn doubling_creates_opposite_pairs() {
        let m = triangle_with_pendant();
        let d = m.double();
        for e in 0..4 {
            assert!(d.circuits().contains(&SignedSubset::new(1 << e | 1 << (e + 4), 0)));
        }
        assert_eq!(d.rank(), m.rank());
    }

    #[test]
    fn stabilizer_of_disconnected_reorientation() {
        // A coloop can be reversed without changing any circuit.
        let m = triangle_with_pendant();
        let stab = m.stabilizer();
        assert_eq!(stab, vec![0, 0b0111, 0b1000, 0b1111]);
        assert_eq!(m.cyclic_flats(), vec![0, 0b0111]);
    }

    #[test]
    fn direct_sum_ranks_add() {
        let m = triangle_with_pendant();
        let s = m.direct_sum(&m);
        assert_eq!(s.rank(), 6);
        assert_eq!(s.circuits().len(), 2);
        assert_eq!(s.rep().get(0, 0), &int(1));
    }

    #[test]
    fn isomorphism_key_ignores_labels() {
        let a = OrientedMatroid::from_digraph(&Digraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 0)]).unwrap()).unwrap();
        let b = OrientedMatroid::from_digraph(&Digraph::new(3, vec![(1, 1), (2, 0), (0, 1), (1, 2)]).unwrap()).unwrap();
        assert_ne!(a.key(), b.key());
        assert_eq!(a.isomorphism_key(), b.isomorphism_key());
    }
}
