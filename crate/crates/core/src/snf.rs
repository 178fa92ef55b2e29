//! Smith normal form of integer matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMat { rows, cols, data: entries.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(m, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + f * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) + f * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

/// `left * A * right` is diagonal with diagonal `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: Vec<BigInt>,
    pub left: IntMat,
    pub right: IntMat,
}

impl SnfResult {
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMat {
        let mut m = IntMat::zeros(rows, cols);
        for (i, x) in self.d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }
}

pub fn smith_normal_form(a: &IntMat) -> SnfResult {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut left = IntMat::identity(m);
    let mut right = IntMat::identity(n);

    for t in 0..m.min(n) {
        loop {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for r in t..m {
                for c in t..n {
                    let v = d.get(r, c);
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(br, bc)| v.abs() < d.get(br, bc).abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                return finish(d, left, right);
            };
            d.swap_rows(t, pr);
            left.swap_rows(t, pr);
            d.swap_cols(t, pc);
            right.swap_cols(t, pc);

            let mut clean = true;
            for r in t + 1..m {
                let q = -(d.get(r, t).div_floor(d.get(t, t)));
                if !q.is_zero() {
                    d.add_row(r, t, &q);
                    left.add_row(r, t, &q);
                }
                if !d.get(r, t).is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..n {
                let q = -(d.get(t, c).div_floor(d.get(t, t)));
                if !q.is_zero() {
                    d.add_col(c, t, &q);
                    right.add_col(c, t, &q);
                }
                if !d.get(t, c).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let piv = d.get(t, t).clone();
            let offending = (t + 1..m).find(|&r| (t + 1..n).any(|c| !d.get(r, c).is_multiple_of(&piv)));
            match offending {
                Some(r) => {
                    let one = BigInt::one();
                    d.add_row(t, r, &one);
                    left.add_row(t, r, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }
    finish(d, left, right)
}

fn finish(d: IntMat, left: IntMat, right: IntMat) -> SnfResult {
    let diag = (0..d.rows.min(d.cols)).map(|i| d.get(i, i).clone()).collect();
    SnfResult { d: diag, left, right }
}

/// Invariant factors of `Z^cols / rowspace(a)`: the non-unit diagonal
/// entries followed by a `0` for every free summand.
pub fn cokernel_invariants(a: &IntMat) -> Vec<BigInt> {
    let snf = smith_normal_form(a);
    let mut out: Vec<BigInt> = snf.d.iter().filter(|x| !x.is_one()).cloned().collect();
    let extra = a.cols.saturating_sub(snf.d.len());
    out.extend((0..extra).map(|_| BigInt::zero()));
    // Zeros from the diagonal are free summands as well; keep them last.
    out.sort_by(|x, y| match (x.is_zero(), y.is_zero()) {
        (true, true) => core::cmp::Ordering::Equal,
        (true, false) => core::cmp::Ordering::Greater,
        (false, true) => core::cmp::Ordering::Less,
        (false, false) => x.cmp(y),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMat) -> SnfResult {
        let s = smith_normal_form(a);
        let recon = s.left.mul(a).mul(&s.right);
        assert_eq!(recon, s.diagonal_matrix(a.rows, a.cols));
        assert!(s.left.determinant().abs().is_one());
        assert!(s.right.determinant().abs().is_one());
        for w in s.d.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                // zeros trail
            }
        }
        s
    }

    #[test]
    fn diagonal_input() {
        let s = check(&IntMat::from_i64(2, 2, &[2, 0, 0, 6]));
        assert_eq!(s.d, vec![BigInt::from(2), BigInt::from(6)]);
    }

    #[test]
    fn pushout_relation_row() {
        // gcd(2, 3) = 1: Z^2 / <(2, -3)> is free of rank one.
        let a = IntMat::from_i64(1, 2, &[2, -3]);
        let s = check(&a);
        assert_eq!(s.d, vec![BigInt::one()]);
        assert_eq!(cokernel_invariants(&a), vec![BigInt::zero()]);
        let b = IntMat::from_i64(1, 2, &[2, -2]);
        assert_eq!(check(&b).d, vec![BigInt::from(2)]);
        assert_eq!(cokernel_invariants(&b), vec![BigInt::from(2), BigInt::zero()]);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not in Smith form; Z/2 + Z/3 = Z/6.
        let s = check(&IntMat::from_i64(2, 2, &[2, 0, 0, 3]));
        assert_eq!(s.d, vec![BigInt::one(), BigInt::from(6)]);
    }
}
