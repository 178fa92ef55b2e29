//! Dense exact matrices and subspaces.
//!
//! Matrices act on column vectors. Every elimination uses the first
//! non-zero entry (scanning rows top to bottom) of the current column as
//! pivot, so results are reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.format(self.get(r, c)))?;
            }
        }
        write!(f, "]")
    }
}

/// Output of row reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Mat<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &F, rows: usize, cols: usize, entries: Vec<Vec<F::Elem>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(alloc::format!("expected a {rows}x{cols} matrix")));
        }
        Ok(Mat { field: field.clone(), rows, cols, data: entries.into_iter().flatten().collect() })
    }

    /// Integer entries, convenient for fixtures.
    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Mat { field: field.clone(), rows, cols, data: entries.iter().map(|&x| field.from_i64(x)).collect() }
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn row(&self, r: usize) -> Vec<F::Elem> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }
    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let k = &self.field;
        let mut out = Mat::zeros(k, self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if k.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(m, c);
                    if k.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = k.add(&out.data[idx], &k.mul(a, b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let k = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = k.zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !k.is_zero(a) && !k.is_zero(x) {
                        acc = k.add(&acc, &k.mul(a, x));
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, other: &Mat<F>, f: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape");
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Mat<F>) -> Mat<F> {
        let k = self.field.clone();
        self.zip_with(other, |a, b| k.add(a, b))
    }

    pub fn sub(&self, other: &Mat<F>) -> Mat<F> {
        let k = self.field.clone();
        self.zip_with(other, |a, b| k.sub(a, b))
    }

    pub fn scale(&self, s: &F::Elem) -> Mat<F> {
        let k = &self.field;
        Mat { field: k.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| k.mul(a, s)).collect() }
    }

    pub fn neg(&self) -> Mat<F> {
        let k = &self.field;
        Mat { field: k.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| k.neg(a)).collect() }
    }

    pub fn transpose(&self) -> Mat<F> {
        Mat::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn pow(&self, e: usize) -> Mat<F> {
        let mut acc = Mat::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `[self other]`.
    pub fn hstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.rows, other.rows, "hstack rows");
        Mat::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block matrix from a grid of blocks; all blocks in a row share a height
    /// and all blocks in a column share a width.
    pub fn blocks(field: &F, row_dims: &[usize], col_dims: &[usize], f: impl Fn(usize, usize) -> Option<Mat<F>>) -> Mat<F> {
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut r0 = 0;
        for (bi, &h) in row_dims.iter().enumerate() {
            let mut c0 = 0;
            for (bj, &w) in col_dims.iter().enumerate() {
                if let Some(b) = f(bi, bj) {
                    assert_eq!((b.rows, b.cols), (h, w), "block shape");
                    for r in 0..h {
                        for c in 0..w {
                            out.set(r0 + r, c0 + c, b.get(r, c).clone());
                        }
                    }
                }
                c0 += w;
            }
            r0 += h;
        }
        out
    }

    pub fn block_diag(field: &F, parts: &[Mat<F>]) -> Mat<F> {
        let rd: Vec<usize> = parts.iter().map(|m| m.rows).collect();
        let cd: Vec<usize> = parts.iter().map(|m| m.cols).collect();
        Mat::blocks(field, &rd, &cd, |i, j| if i == j { Some(parts[i].clone()) } else { None })
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Mat<F> {
        Mat::from_fn(&self.field, rows.len(), cols.len(), |r, c| self.get(rows.start + r, cols.start + c).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat<F> {
        Mat::from_fn(&self.field, idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat<F> {
        Mat::from_fn(&self.field, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref<F> {
        let k = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !k.is_zero(m.get(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = k.inv(m.get(row, col)).expect("pivot is non-zero");
            for c in col..m.cols {
                let v = k.mul(m.get(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if k.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let sub = k.mul(&factor, m.get(row, c));
                    let v = k.sub(m.get(r, c), &sub);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { rank: pivots.len(), pivots, reduced: m }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<F::Elem>> {
        let k = &self.field;
        let Rref { pivots, reduced, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = k.neg(reduced.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Null-space basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Mat<F> {
        Mat::from_columns(&self.field, self.cols, &self.null_space())
    }

    /// One solution of `A X = B`, if any.
    pub fn solve(&self, b: &Mat<F>) -> Option<Mat<F>> {
        assert_eq!(self.rows, b.rows, "solve shape");
        let k = &self.field;
        let aug = self.hstack(b);
        let Rref { pivots, reduced, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(k, self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, reduced.get(r, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let bm = Mat::from_columns(&self.field, self.rows, &[b.to_vec()]);
        self.solve(&bm).map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Mat::identity(&self.field, self.rows))?;
        if self.mul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Smallest `t` with `A^t = 0`, if the square matrix is nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut p = Mat::identity(&self.field, self.rows);
        for t in 0..=self.rows {
            if p.is_zero() {
                return Some(t);
            }
            p = p.mul(self);
        }
        None
    }
}

/// A subspace of `F^n`, stored as the non-zero rows of a reduced row-echelon
/// basis. Coordinates of a member are its entries at the pivot positions.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Mat<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the columns of `m`.
    pub fn column_span(m: &Mat<F>) -> Self {
        Self::row_span(&m.transpose())
    }

    /// Span of the rows of `m`.
    pub fn row_span(m: &Mat<F>) -> Self {
        let Rref { rank, pivots, reduced } = m.rref();
        let basis = reduced.submatrix(0..rank, 0..m.cols());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn from_vectors(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        Self::row_span(&Mat::from_columns(field, ambient, vectors).transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn field(&self) -> &F {
        self.basis.field()
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Mat<F> {
        self.basis.transpose()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    /// Non-pivot coordinates; they index a basis of the quotient.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v` minus its component along the basis (pivot entries become zero).
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.field();
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if k.is_zero(&c) {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.get(i, j);
                if !k.is_zero(b) {
                    out[j] = k.sub(&out[j], &k.mul(&c, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let k = self.field();
        self.reduce(v).iter().all(|x| k.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of a member in the stored basis.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Matrix of `F^n -> F^n / S` in the complement coordinates.
    pub fn quotient_projection(&self) -> Mat<F> {
        let k = self.field().clone();
        let comp = self.complement();
        Mat::from_fn(&k, comp.len(), self.ambient, |t, j| {
            let q = comp[t];
            if j == q {
                return k.one();
            }
            match self.pivots.iter().position(|&p| p == j) {
                Some(i) => k.neg(self.basis.get(i, q)),
                None => k.zero(),
            }
        })
    }

    /// Matrix of the section `F^n / S -> F^n` picking complement coordinates.
    pub fn quotient_section(&self) -> Mat<F> {
        let k = self.field().clone();
        let comp = self.complement();
        Mat::from_fn(&k, self.ambient, comp.len(), |r, t| if comp[t] == r { k.one() } else { k.zero() })
    }

    /// Matrix expressing members in basis coordinates (`dim x ambient`),
    /// valid only on vectors of the subspace.
    pub fn coordinate_matrix(&self) -> Mat<F> {
        let k = self.field().clone();
        Mat::from_fn(&k, self.dim(), self.ambient, |i, j| if self.pivots[i] == j { k.one() } else { k.zero() })
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        Subspace::row_span(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        let k = self.field().clone();
        // x in S and in T  <=>  x = B_s a = B_t b.
        let bs = self.basis_matrix();
        let bt = other.basis_matrix();
        let sys = bs.hstack(&bt.neg());
        let sols = sys.null_space();
        let vecs: Vec<Vec<F::Elem>> = sols.iter().map(|s| bs.apply(&s[..self.dim()])).collect();
        Subspace::from_vectors(&k, self.ambient, &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rref_examples() {
        let q = Rationals;
        let id = Mat::identity(&q, 2);
        let r = id.rref();
        assert_eq!((r.rank, r.pivots.clone()), (2, vec![0, 1]));
        let z = Mat::zeros(&q, 3, 2);
        assert_eq!(z.rref().rank, 0);
        assert!(z.rref().pivots.is_empty());
        let a = Mat::from_i64(&q, 2, 2, &[1, 2, 2, 4]);
        let r = a.rref();
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
        assert_eq!(r.reduced, Mat::from_i64(&q, 2, 2, &[1, 2, 0, 0]));
    }

    #[test]
    fn null_space_examples() {
        let q = Rationals;
        assert!(Mat::identity(&q, 3).null_space().is_empty());
        assert_eq!(Mat::zeros(&q, 2, 3).null_space().len(), 3);
        // Enumerating all 8 vectors of GF(2)^3: exactly 4 satisfy v0 + v1 = 0,
        // so the kernel has dimension 2.
        let k = PrimeField::new(2).unwrap();
        let a = Mat::from_i64(&k, 1, 3, &[1, 1, 0]);
        let brute = (0..8u64)
            .filter(|bits| {
                let v: Vec<u64> = (0..3).map(|i| (bits >> i) & 1).collect();
                a.apply(&v) == vec![0]
            })
            .count();
        assert_eq!(brute, 4);
        let ns = a.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(k.add(&v[0], &v[1]), 0);
        }
    }

    #[test]
    fn solve_and_inverse() {
        let q = Rationals;
        let a = Mat::from_i64(&q, 2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let singular = Mat::from_i64(&q, 2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
        let b = Mat::from_i64(&q, 2, 1, &[1, 3]);
        assert!(singular.solve(&b).is_none());
    }

    #[test]
    fn subspace_quotient_maps() {
        let q = Rationals;
        let s = Subspace::from_vectors(&q, 3, &[vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)]]);
        let pi = s.quotient_projection();
        let sec = s.quotient_section();
        assert!(pi.mul(&sec).is_identity());
        assert!(pi.mul(&s.basis_matrix()).is_zero());
        let t = Subspace::from_vectors(&q, 3, &[vec![q.from_i64(0), q.from_i64(1), q.from_i64(0)], vec![q.from_i64(1), q.from_i64(0), q.from_i64(0)]]);
        assert_eq!(s.intersection(&t).dim(), 1);
        assert_eq!(s.sum(&t).dim(), 2);
    }
}
