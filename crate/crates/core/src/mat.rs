//! Dense constant matrices over F_p.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [FieldElem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, f: &Field, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        let mut acc = vec![0u128; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += f.mul(a, b) as u128;
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.set(i, j, f.reduce_u128(x));
            }
        }
        Ok(out)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, f: &Field) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&r| a.get(r, c) != 0) else {
                continue;
            };
            a.swap_rows(p, rank);
            let inv = f.inv(a.get(rank, c)).expect("nonzero pivot");
            for r in 0..a.rows {
                if r != rank && a.get(r, c) != 0 {
                    let factor = f.mul(a.get(r, c), inv);
                    a.axpy_row(f, r, rank, f.neg(factor));
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self, f: &Field) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| a.get(r, c) != 0).ok_or(Error::Singular)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv_inv = f.inv(a.get(c, c))?;
            a.scale_row(f, c, piv_inv);
            inv.scale_row(f, c, piv_inv);
            for r in 0..n {
                let factor = a.get(r, c);
                if r != c && factor != 0 {
                    a.axpy_row(f, r, c, f.neg(factor));
                    inv.axpy_row(f, r, c, f.neg(factor));
                }
            }
        }
        Ok(inv)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j) == 0))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, f: &Field, r: usize, c: FieldElem) {
        for x in self.row_mut(r) {
            *x = f.mul(*x, c);
        }
    }

    // row[dst] += c * row[src]
    fn axpy_row(&mut self, f: &Field, dst: usize, src: usize, c: FieldElem) {
        for j in 0..self.cols {
            let v = f.add(self.get(dst, j), f.mul(c, self.get(src, j)));
            self.set(dst, j, v);
        }
    }
}
