//! Dense matrices of polynomials and their multiplication backends.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::mat::Mat;
use crate::ntt::NttPlan;
use crate::poly::{mac_schoolbook, mul_karatsuba, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

/// Multiplication algorithm for [`PolyMat::mul_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MulBackend {
    /// Pick by size, see [`MulThresholds`].
    Auto,
    Schoolbook,
    Karatsuba,
    /// Evaluation at roots of unity; falls back to Karatsuba when the field
    /// has too few of them.
    Ntt,
}

/// Size thresholds for switching to transform based multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MulThresholds {
    /// Minimum degree bound of the product.
    pub transform_degree: usize,
    /// Minimum inner dimension.
    pub transform_inner: usize,
}

impl Default for MulThresholds {
    fn default() -> Self {
        MulThresholds {
            transform_degree: 32,
            transform_inner: 2,
        }
    }
}

static TRANSFORM_DEGREE: AtomicUsize = AtomicUsize::new(32);
static TRANSFORM_INNER: AtomicUsize = AtomicUsize::new(2);
const KARATSUBA_ENTRY_CUTOFF: usize = 32;

/// Process-wide thresholds used by [`MulBackend::Auto`].
pub fn set_mul_thresholds(t: MulThresholds) {
    TRANSFORM_DEGREE.store(t.transform_degree, Ordering::Relaxed);
    TRANSFORM_INNER.store(t.transform_inner, Ordering::Relaxed);
}

pub fn mul_thresholds() -> MulThresholds {
    MulThresholds {
        transform_degree: TRANSFORM_DEGREE.load(Ordering::Relaxed),
        transform_inner: TRANSFORM_INNER.load(Ordering::Relaxed),
    }
}

impl PolyMat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> PolyMat {
        PolyMat {
            field,
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> PolyMat {
        PolyMat::from_fn(field, n, n, |i, j| {
            if i == j {
                Poly::constant(1)
            } else {
                Poly::zero()
            }
        })
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut g: impl FnMut(usize, usize) -> Poly,
    ) -> PolyMat {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(g(i, j));
            }
        }
        PolyMat {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Row-major entries; panics if the count does not match.
    pub fn from_entries(field: Field, rows: usize, cols: usize, entries: Vec<Poly>) -> PolyMat {
        assert_eq!(entries.len(), rows * cols, "entry count");
        PolyMat {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor from signed coefficient lists.
    pub fn from_i64(field: Field, rows: &[Vec<Vec<i64>>]) -> PolyMat {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        PolyMat::from_fn(field, m, n, |i, j| Poly::from_i64(&field, &rows[i][j]))
    }

    pub fn from_mat(field: Field, c: &Mat) -> PolyMat {
        PolyMat::from_fn(field, c.rows(), c.cols(), |i, j| Poly::constant(c.get(i, j)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Poly {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Maximum entry degree, `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn cdeg(&self) -> Vec<Option<usize>> {
        (0..self.cols)
            .map(|j| (0..self.rows).filter_map(|i| self.get(i, j).degree()).max())
            .collect()
    }

    pub fn rdeg(&self) -> Vec<Option<usize>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().filter_map(Poly::degree).max())
            .collect()
    }

    /// `max_j deg(P_ij) + s_j` for row `i`, `None` for a zero row.
    pub fn row_degree_shifted(&self, i: usize, s: &[i64]) -> Option<i64> {
        self.row(i)
            .iter()
            .zip(s)
            .filter_map(|(p, &sj)| p.degree().map(|d| d as i64 + sj))
            .max()
    }

    /// Shifted row degrees. Zero rows map to `None`, which orders below
    /// every finite degree.
    pub fn rdeg_shifted(&self, s: &[i64]) -> Result<Vec<Option<i64>>> {
        check_shift(s, self.cols)?;
        Ok((0..self.rows).map(|i| self.row_degree_shifted(i, s)).collect())
    }

    /// Constant matrix of the coefficients of degree `k`.
    pub fn coeff_mat(&self, k: usize) -> Mat {
        let mut c = Mat::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                c.set(i, j, self.get(i, j).coeff(k));
            }
        }
        c
    }

    pub fn transpose(&self) -> PolyMat {
        PolyMat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> PolyMat {
        PolyMat::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> PolyMat {
        PolyMat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMat {
        PolyMat::from_fn(self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading_principal(&self, k: usize) -> PolyMat {
        let idx: Vec<usize> = (0..k).collect();
        self.submatrix(&idx, &idx)
    }

    pub fn hstack(&self, other: &PolyMat) -> Result<PolyMat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row counts differ".into()));
        }
        let c = self.cols;
        Ok(PolyMat::from_fn(self.field, self.rows, c + other.cols, |i, j| {
            if j < c {
                self.get(i, j).clone()
            } else {
                other.get(i, j - c).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &PolyMat) -> Result<PolyMat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(PolyMat::from_entries(
            self.field,
            self.rows + other.rows,
            self.cols,
            entries,
        ))
    }

    pub fn add(&self, other: &PolyMat) -> Result<PolyMat> {
        self.check_same_shape(other)?;
        let f = self.field;
        Ok(PolyMat::from_fn(f, self.rows, self.cols, |i, j| {
            self.get(i, j).add(&f, other.get(i, j))
        }))
    }

    pub fn sub(&self, other: &PolyMat) -> Result<PolyMat> {
        self.check_same_shape(other)?;
        let f = self.field;
        Ok(PolyMat::from_fn(f, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(&f, other.get(i, j))
        }))
    }

    pub fn neg(&self) -> PolyMat {
        let f = self.field;
        PolyMat::from_fn(f, self.rows, self.cols, |i, j| self.get(i, j).neg(&f))
    }

    /// `X^k * self`.
    pub fn shift_up(&self, k: usize) -> PolyMat {
        PolyMat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).shift_up(k))
    }

    /// `self mod X^d`, column by column.
    pub fn truncate_cols(&self, d: &[usize]) -> PolyMat {
        assert_eq!(d.len(), self.cols);
        PolyMat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).truncate(d[j]))
    }

    /// `self mod X^k` entrywise.
    pub fn truncate(&self, k: usize) -> PolyMat {
        PolyMat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).truncate(k))
    }

    /// Column `j` becomes `(X^-lo_j * col_j) mod X^(hi_j - lo_j)`.
    pub fn window_cols(&self, lo: &[usize], hi: &[usize]) -> PolyMat {
        PolyMat::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).window(lo[j], hi[j])
        })
    }

    /// `self * X^e` with `e` a tuple of column exponents.
    pub fn shift_cols(&self, e: &[usize]) -> PolyMat {
        assert_eq!(e.len(), self.cols);
        PolyMat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).shift_up(e[j]))
    }

    /// Column `j` is checked to have degree below `d_j`.
    pub fn check_orders(&self, d: &[usize]) -> Result<()> {
        if d.len() != self.cols {
            return Err(Error::OrderLength {
                expected: self.cols,
                got: d.len(),
            });
        }
        for (j, c) in self.cdeg().into_iter().enumerate() {
            if let Some(deg) = c {
                if deg >= d[j] {
                    return Err(Error::OrderViolation {
                        col: j,
                        deg,
                        order: d[j],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &PolyMat) -> Result<PolyMat> {
        self.mul_with(other, MulBackend::Auto)
    }

    pub fn mul_with(&self, other: &PolyMat, backend: MulBackend) -> Result<PolyMat> {
        self.check_mul(other)?;
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Ok(PolyMat::zeros(self.field, self.rows, other.cols));
        };
        if backend == MulBackend::Auto {
            if let Some(c) = self.mul_monomial(other) {
                return Ok(c);
            }
        }
        Ok(match self.pick_backend(backend, da, db) {
            MulBackend::Schoolbook | MulBackend::Auto => self.mul_schoolbook(other, da + db),
            MulBackend::Karatsuba => self.mul_karatsuba(other),
            MulBackend::Ntt => match NttPlan::new(&self.field, (da + db + 1).next_power_of_two()) {
                Some(plan) => self.mul_ntt(other, &plan),
                None => self.mul_karatsuba(other),
            },
        })
    }

    /// Coefficients `lo..hi` of every entry of `self * other`. With the
    /// transform backend the product is computed cyclically, with a length
    /// just large enough for the wrapped part to miss the window.
    pub fn mul_window(&self, other: &PolyMat, lo: usize, hi: usize) -> Result<PolyMat> {
        self.check_mul(other)?;
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Ok(PolyMat::zeros(self.field, self.rows, other.cols));
        };
        if lo >= hi || da + db < lo {
            return Ok(PolyMat::zeros(self.field, self.rows, other.cols));
        }
        if let Some(c) = self.mul_monomial(other) {
            return Ok(PolyMat::from_fn(self.field, c.rows, c.cols, |i, j| c.get(i, j).window(lo, hi)));
        }
        if self.pick_backend(MulBackend::Auto, da, db) == MulBackend::Ntt {
            let len = hi.max(da + db + 1 - lo).next_power_of_two();
            if let Some(plan) = NttPlan::new(&self.field, len) {
                let c = self.mul_ntt(other, &plan);
                return Ok(PolyMat::from_fn(self.field, c.rows, c.cols, |i, j| c.get(i, j).window(lo, hi)));
            }
        }
        let c = self.mul(other)?;
        Ok(PolyMat::from_fn(self.field, c.rows, c.cols, |i, j| c.get(i, j).window(lo, hi)))
    }

    /// `(row, col, c, e)` for every nonzero entry `c X^e`, or `None` as soon
    /// as an entry has two terms.
    fn monomial_terms(&self) -> Option<Vec<(usize, usize, FieldElem, usize)>> {
        let mut terms = Vec::new();
        for (t, p) in self.entries.iter().enumerate() {
            let mut nz = p.coeffs().iter().enumerate().filter(|(_, &c)| c != 0);
            if let Some((e, &c)) = nz.next() {
                if nz.next().is_some() {
                    return None;
                }
                terms.push((t / self.cols, t % self.cols, c, e));
            }
        }
        Some(terms)
    }

    /// Product by shifts and scalings when one side only has monomial
    /// entries, as for the diagonal bases of generic instances.
    fn mul_monomial(&self, other: &PolyMat) -> Option<PolyMat> {
        let f = self.field;
        let mut c = PolyMat::zeros(f, self.rows, other.cols);
        if let Some(terms) = self.monomial_terms() {
            for (i, l, a, e) in terms {
                for j in 0..other.cols {
                    c.get_mut(i, j).add_scaled_shifted(&f, other.get(l, j), a, e);
                }
            }
            return Some(c);
        }
        let terms = other.monomial_terms()?;
        for (l, j, b, e) in terms {
            for i in 0..self.rows {
                c.get_mut(i, j).add_scaled_shifted(&f, self.get(i, l), b, e);
            }
        }
        Some(c)
    }

    fn check_mul(&self, other: &PolyMat) -> Result<()> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn pick_backend(&self, backend: MulBackend, da: usize, db: usize) -> MulBackend {
        match backend {
            MulBackend::Auto => {
                let t = mul_thresholds();
                if da + db >= t.transform_degree && self.cols >= t.transform_inner {
                    MulBackend::Ntt
                } else if da.min(db) + 1 >= KARATSUBA_ENTRY_CUTOFF {
                    MulBackend::Karatsuba
                } else {
                    MulBackend::Schoolbook
                }
            }
            b => b,
        }
    }

    fn mul_schoolbook(&self, other: &PolyMat, deg: usize) -> PolyMat {
        let f = self.field;
        let mut acc = vec![0u128; deg + 1];
        PolyMat::from_fn(f, self.rows, other.cols, |i, j| {
            acc.iter_mut().for_each(|x| *x = 0);
            for l in 0..self.cols {
                let (a, b) = (self.get(i, l), other.get(l, j));
                if !a.is_zero() && !b.is_zero() {
                    mac_schoolbook(&f, &mut acc, a.coeffs(), b.coeffs());
                }
            }
            Poly::from_coeffs(acc.iter().map(|&x| f.reduce_u128(x)).collect())
        })
    }

    fn mul_karatsuba(&self, other: &PolyMat) -> PolyMat {
        let f = self.field;
        PolyMat::from_fn(f, self.rows, other.cols, |i, j| {
            let mut sum = Poly::zero();
            for l in 0..self.cols {
                let (a, b) = (self.get(i, l), other.get(l, j));
                if !a.is_zero() && !b.is_zero() {
                    let prod = Poly::from_coeffs(mul_karatsuba(&f, a.coeffs(), b.coeffs()));
                    sum.add_assign(&f, &prod);
                }
            }
            sum
        })
    }

    fn mul_ntt(&self, other: &PolyMat, plan: &NttPlan) -> PolyMat {
        let f = self.field;
        let n = plan.len();
        let (rows, inner, cols) = (self.rows, self.cols, other.cols);
        // evaluations stored point-major: one scalar matrix per point
        let evaluate = |m: &PolyMat| -> Vec<FieldElem> {
            let size = m.entries.len();
            let mut out = vec![0; n * size];
            let mut v = vec![0; n];
            for (e, p) in m.entries.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                v.iter_mut().for_each(|x| *x = 0);
                if p.len() <= n {
                    v[..p.len()].copy_from_slice(p.coeffs());
                } else {
                    // cyclic product: fold modulo X^n - 1
                    for (e, &c) in p.coeffs().iter().enumerate() {
                        v[e % n] = f.add(v[e % n], c);
                    }
                }
                plan.forward(&f, &mut v);
                for (k, &x) in v.iter().enumerate() {
                    out[k * size + e] = x;
                }
            }
            out
        };
        let ea = evaluate(self);
        let eb = evaluate(other);
        let mut ec = vec![0; n * rows * cols];
        // below 2^30, fifteen products and a reduced value fit in a u64
        let lazy = f.modulus() < (1 << 30);
        for k in 0..n {
            let a = &ea[k * rows * inner..(k + 1) * rows * inner];
            let b = &eb[k * inner * cols..(k + 1) * inner * cols];
            let c = &mut ec[k * rows * cols..(k + 1) * rows * cols];
            for i in 0..rows {
                let ci = &mut c[i * cols..(i + 1) * cols];
                for l in 0..inner {
                    let x = a[i * inner + l];
                    if x == 0 {
                        continue;
                    }
                    let bl = &b[l * cols..(l + 1) * cols];
                    if lazy {
                        for (slot, &y) in ci.iter_mut().zip(bl) {
                            *slot += x * y;
                        }
                        if l % 15 == 14 {
                            ci.iter_mut().for_each(|z| *z = f.reduce_u64(*z));
                        }
                    } else {
                        for (slot, &y) in ci.iter_mut().zip(bl) {
                            *slot = f.add(*slot, f.mul(x, y));
                        }
                    }
                }
                if lazy {
                    ci.iter_mut().for_each(|z| *z = f.reduce_u64(*z));
                }
            }
        }
        let size = rows * cols;
        let mut v = vec![0; n];
        PolyMat::from_fn(f, rows, cols, |i, j| {
            let e = i * cols + j;
            for (k, x) in v.iter_mut().enumerate() {
                *x = ec[k * size + e];
            }
            if v.iter().all(|&x| x == 0) {
                return Poly::zero();
            }
            plan.inverse(&f, &mut v);
            Poly::from_coeffs(v.clone())
        })
    }

    fn check_field(&self, other: &PolyMat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &PolyMat) -> Result<()> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} versus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_shift(s: &[i64], expected: usize) -> Result<()> {
    if s.len() != expected {
        return Err(Error::ShiftLength {
            expected,
            got: s.len(),
        });
    }
    Ok(())
}
