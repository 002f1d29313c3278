use num_traits::{One, Signed, Zero};

use super::rational::{int, to_i64, Rational};

/// Dense matrix over Q, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
    /// Integer copy of `data` when every entry is integral.
    ints: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TuStatus {
    TotallyUnimodular,
    /// Row and column indices of a square submatrix with determinant outside {-1, 0, 1}.
    Violated {
        rows: Vec<usize>,
        cols: Vec<usize>,
        det: i128,
    },
    NonIntegral {
        row: usize,
        col: usize,
    },
    /// Too large for the exhaustive check.
    Unchecked,
}

impl QMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<Rational> = rows
            .into_iter()
            .flat_map(|row| {
                assert_eq!(row.len(), cols, "ragged matrix");
                row
            })
            .collect();
        Self::from_data(r, cols, data)
    }

    pub fn from_ints(rows: &[Vec<i64>], cols: usize) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), cols)
    }

    fn from_data(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        let ints = data.iter().map(to_i64).collect::<Option<Vec<i64>>>();
        Self { rows, cols, data, ints }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_data(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.ints.is_some()
    }

    pub fn int_entry(&self, r: usize, c: usize) -> Option<i64> {
        self.ints.as_ref().map(|v| v[r * self.cols + c])
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Keeps the listed columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Self::from_data(self.rows, cols.len(), data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        Self::from_data(rows.len(), self.cols, data)
    }

    /// Negates the listed columns.
    pub fn negate_columns(&self, cols: &[usize]) -> Self {
        let mut data = self.data.clone();
        for r in 0..self.rows {
            for &c in cols {
                let x = &mut data[r * self.cols + c];
                *x = -x.clone();
            }
        }
        Self::from_data(self.rows, self.cols, data)
    }

    /// Reduced row echelon form with zero rows removed, and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            let inv = Rational::one() / &m[r][c];
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..self.cols {
                        let d = &f * &m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (QMatrix::from_rows(m, self.cols), pivots)
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.cols).collect();
        self.rank_of_columns(&all)
    }

    pub fn rank_of_columns(&self, cols: &[usize]) -> usize {
        if cols.is_empty() || self.rows == 0 {
            return 0;
        }
        match &self.ints {
            Some(ints) => {
                let mut m: Vec<Vec<i128>> =
                    (0..self.rows).map(|r| cols.iter().map(|&c| ints[r * self.cols + c] as i128).collect()).collect();
                bareiss_rank(&mut m)
            }
            None => self.select_columns(cols).rref().1.len(),
        }
    }

    /// Basis of the right kernel of the submatrix on `cols`, indexed like `cols`.
    pub fn kernel_of_columns(&self, cols: &[usize]) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.select_columns(cols).rref();
        let k = cols.len();
        let mut out = Vec::new();
        for free in (0..k).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); k];
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Exhaustive unimodularity check over all square submatrices when
    /// `min(rows, cols) <= limit`.
    pub fn tu_status(&self, limit: usize) -> TuStatus {
        if self.rows.min(self.cols) > limit {
            return TuStatus::Unchecked;
        }
        let Some(ints) = &self.ints else {
            let (row, col) = (0..self.rows)
                .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
                .find(|&(r, c)| to_i64(self.get(r, c)).is_none())
                .unwrap();
            return TuStatus::NonIntegral { row, col };
        };
        let n = self.rows.min(self.cols);
        for k in 1..=n {
            for rs in combinations(self.rows, k) {
                for cs in combinations(self.cols, k) {
                    let mut m: Vec<Vec<i128>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| ints[r * self.cols + c] as i128).collect()).collect();
                    let d = bareiss_det(&mut m);
                    if d.abs() > 1 {
                        return TuStatus::Violated { rows: rs, cols: cs, det: d };
                    }
                }
            }
        }
        TuStatus::TotallyUnimodular
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.to_rows();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Rational::zero() };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            for i in c + 1..n {
                if !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[c][c];
                    for j in c..n {
                        let d = &f * &m[c][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        det
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }
}

fn bareiss_rank(m: &mut [Vec<i128>]) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        let piv = m[rank][c];
        for i in rank + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[i][j] * piv - m[i][c] * m[rank][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn bareiss_det(m: &mut [Vec<i128>]) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else { return 0 };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn detects_uniform_minor() {
        let m = QMatrix::from_ints(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]], 4);
        match m.tu_status(6) {
            TuStatus::Violated { det, cols, .. } => {
                assert_eq!(det.abs(), 2);
                assert_eq!(cols, vec![2, 3]);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn incidence_matrix_is_unimodular() {
        // Directed triangle plus a pendant arc.
        let m = QMatrix::from_ints(&[vec![-1, 0, 1, 0], vec![1, -1, 0, 0], vec![0, 1, -1, -1], vec![0, 0, 0, 1]], 4);
        assert_eq!(m.tu_status(6), TuStatus::TotallyUnimodular);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let m = QMatrix::from_ints(&[vec![1, 0, 1], vec![0, 1, 1]], 3);
        let k = m.kernel_of_columns(&[0, 1, 2]);
        assert_eq!(k, vec![vec![int(-1), int(-1), int(1)]]);
    }

    proptest! {
        #[test]
        fn integer_and_rational_rank_agree(entries in prop::collection::vec(-3i64..4, 12)) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let m = QMatrix::from_ints(&rows, 4);
            prop_assert_eq!(m.rank(), m.rref().1.len());
        }

        #[test]
        fn bareiss_matches_rational_determinant(entries in prop::collection::vec(-3i64..4, 9)) {
            let rows: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let m = QMatrix::from_ints(&rows, 3);
            let mut im: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            prop_assert_eq!(int(bareiss_det(&mut im) as i64), m.determinant());
        }
    }
}
