//! Dense matrices and sparse row echelon bases over cyclotomic fields.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::Cyclotomic;

/// Square or rectangular matrix with exact entries, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one();
        }
        m
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conjugate());
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `Some(c)` if the matrix equals `c·1`.
    pub fn scalar_value(&self) -> Option<Cyclotomic> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Cyclotomic>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Cyclotomic::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Cyclotomic::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det = &det * &p;
            let inv = p.inv().expect("nonzero pivot");
            let pivot_row = a[col].clone();
            for row in a.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let f = &row[col] * &inv;
                for (x, y) in row.iter_mut().zip(pivot_row.iter()).skip(col) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        det
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn direct_sum(blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Sparse vector keyed by coordinate.
pub type SparseVec = BTreeMap<usize, Cyclotomic>;

/// Incrementally built row echelon basis of a subspace.
///
/// Each stored row is normalized so that its pivot (first coordinate) is 1,
/// and no stored row has a nonzero entry at another row's pivot.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduced echelon rows, sorted by pivot.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn reduce(&self, v: &mut SparseVec) {
        for row in &self.rows {
            let (&pivot, _) = row.iter().next().expect("stored rows are nonzero");
            let Some(c) = v.get(&pivot).cloned() else {
                continue;
            };
            for (&k, x) in row {
                let entry = v.entry(k).or_insert_with(Cyclotomic::zero);
                *entry = &*entry - &(&c * x);
                if entry.is_zero() {
                    v.remove(&k);
                }
            }
        }
    }

    /// Adds `v` to the span; returns `false` if it was already contained.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, x| !x.is_zero());
        self.reduce(&mut v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        for x in v.values_mut() {
            *x = &*x * &inv;
        }
        // clear the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                for (&k, x) in &v {
                    let entry = row.entry(k).or_insert_with(Cyclotomic::zero);
                    *entry = &*entry - &(&c * x);
                    if entry.is_zero() {
                        row.remove(&k);
                    }
                }
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| *r.keys().next().unwrap() > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        v.retain(|_, x| !x.is_zero());
        self.reduce(&mut v);
        v.is_empty()
    }
}

/// Rank of a dense matrix.
pub fn rank(m: &Matrix) -> usize {
    let mut basis = EchelonBasis::new();
    for i in 0..m.rows() {
        let v: SparseVec = m
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect();
        basis.insert(v);
    }
    basis.rank()
}

/// Basis of the right nullspace `{x : m·x = 0}`.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Cyclotomic>> {
    let mut basis = EchelonBasis::new();
    for i in 0..m.rows() {
        let v: SparseVec = m
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect();
        basis.insert(v);
    }
    let pivots: Vec<usize> = basis
        .rows()
        .iter()
        .map(|r| *r.keys().next().unwrap())
        .collect();
    let mut out = Vec::new();
    for free in (0..m.cols()).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Cyclotomic::zero(); m.cols()];
        x[free] = Cyclotomic::one();
        for (row, &p) in basis.rows().iter().zip(pivots.iter()) {
            if let Some(c) = row.get(&free) {
                x[p] = -c;
            }
        }
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, root_of_unity};

    fn q(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::rational(rational(n, d))
    }

    #[test]
    fn determinant_small() {
        let m = Matrix::from_rows(vec![
            vec![q(1, 1), q(2, 1)],
            vec![q(3, 1), q(4, 1)],
        ])
        .unwrap();
        assert_eq!(m.determinant(), q(-2, 1));
        let w = root_of_unity(3, 1);
        let d = Matrix::from_rows(vec![
            vec![w.clone(), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), w.conjugate()],
        ])
        .unwrap();
        assert!(d.determinant().is_one());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = Matrix::from_rows(vec![
            vec![q(1, 1), q(1, 1), q(1, 1)],
            vec![q(2, 1), q(2, 1), q(2, 1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = Matrix::from_rows(v.into_iter().map(|x| vec![x]).collect()).unwrap();
            let prod = m.mul(&col);
            assert!((0..prod.rows()).all(|i| prod.get(i, 0).is_zero()));
        }
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut b = EchelonBasis::new();
        let v1: SparseVec = [(0, q(1, 1)), (2, q(1, 2))].into_iter().collect();
        let v2: SparseVec = [(1, q(3, 1))].into_iter().collect();
        let v3: SparseVec = [(0, q(2, 1)), (1, q(6, 1)), (2, q(1, 1))].into_iter().collect();
        assert!(b.insert(v1));
        assert!(b.insert(v2));
        assert!(!b.insert(v3.clone()));
        assert!(b.contains(&v3));
        assert_eq!(b.rank(), 2);
    }
}
