//! Dense square and rectangular matrices over any [`Entry`] domain.

use std::fmt;

use crate::num::{Cq, Entry, Field, Quat};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Entry> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Build from nested rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Build from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_i64(x)).collect()).collect())
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(<[T]>::to_vec).collect()
    }

    /// Entries as rows of display strings (the JSON form of a matrix).
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.row_vecs().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg)
    }

    /// Left scalar multiple `s·M`.
    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.mul(x))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out: Mat<T> = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Plain entrywise transpose (entries are not conjugated).
    pub fn transpose(&self) -> Self {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise conjugation.
    pub fn conj(&self) -> Self {
        self.map(T::conj)
    }

    /// Kronecker product, with `self` as the outer factor.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.set(i * o.rows + k, j * o.cols + l, a.mul(o.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Entry::is_zero)
    }

    /// `Some(s)` when the matrix equals `s·I` with `s = ±1`.
    pub fn unit_sign(&self) -> Option<i8> {
        if !self.is_square() {
            return None;
        }
        let id = Mat::identity(self.rows);
        if *self == id {
            Some(1)
        } else if *self == id.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// `AB − BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    /// Sign relating `AB` and `BA`: `+1` commute, `-1` anticommute, `0` neither.
    pub fn commutation_sign(&self, o: &Self) -> i8 {
        let ab = self.mul(o);
        let ba = o.mul(self);
        if ab == ba {
            1
        } else if ab == ba.neg() {
            -1
        } else {
            0
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        *self == self.transpose().neg()
    }

    /// `Some(±1)` if `self = ±o`.
    pub fn sign_relative_to(&self, o: &Self) -> Option<i8> {
        if self == o {
            Some(1)
        } else if *self == o.neg() {
            Some(-1)
        } else {
            None
        }
    }
}

impl<T: Field> Mat<T> {
    /// Exact inverse by Gauss–Jordan elimination (works over skew fields).
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.set(col, j, p.mul(a.get(col, j)));
                inv.set(col, j, p.mul(inv.get(col, j)));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let va = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, va);
                    let vi = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, vi);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Mat<Quat> {
    /// Complex form with each quaternion `α + βj` (`α, β ∈ C`) replaced by the
    /// block `[[α, β], [−β̄, ᾱ]]`.
    pub fn to_complex_blocks(&self) -> Mat<Cq> {
        let mut out = Mat::zeros(2 * self.rows, 2 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let h = self.get(i, j);
                let a = Cq::new(h.w.clone(), h.x.clone());
                let b = Cq::new(h.y.clone(), h.z.clone());
                out.set(2 * i, 2 * j, a.clone());
                out.set(2 * i, 2 * j + 1, b.clone());
                out.set(2 * i + 1, 2 * j, b.conj().neg());
                out.set(2 * i + 1, 2 * j + 1, a.conj());
            }
        }
        out
    }
}

/// Rank of a list of vectors over a commutative field.
pub fn rank<T: Field>(vectors: &[Vec<T>]) -> usize {
    let mut rows: Vec<Vec<T>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(piv, rank);
        let p = rows[rank][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<T> = rows[rank].iter().map(|x| p.mul(x)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub(&f.mul(y));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

impl<T: Entry> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{q, Q};

    #[test]
    fn inverse_roundtrip() {
        let m: Mat<Q> = Mat::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
    }

    #[test]
    fn quaternion_inverse() {
        let m = Mat::from_rows(vec![vec![Quat::i(), Quat::j()], vec![Quat::zero(), Quat::k()]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert_eq!(inv.mul(&m), Mat::identity(2));
    }

    #[test]
    fn kron_shapes_and_mixed_product() {
        let a: Mat<Cq> = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        let b: Mat<Cq> = Mat::diag(vec![Cq::one(), Cq::int(-1)]);
        let ab = a.kron(&b);
        assert_eq!(ab.rows(), 4);
        assert_eq!(ab.mul(&ab), a.mul(&a).kron(&b.mul(&b)));
    }

    #[test]
    fn complex_blocks_are_multiplicative() {
        let a = Mat::from_rows(vec![vec![Quat::i(), Quat::j()], vec![Quat::k(), Quat::from_ints(1, 2, -1, 3)]]);
        let b = Mat::from_rows(vec![vec![Quat::j(), Quat::from_ints(0, 1, 1, 0)], vec![Quat::one(), Quat::k()]]);
        assert_eq!(a.mul(&b).to_complex_blocks(), a.to_complex_blocks().mul(&b.to_complex_blocks()));
    }

    #[test]
    fn rank_detects_dependence() {
        let v = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]];
        assert_eq!(rank(&v), 2);
    }
}
