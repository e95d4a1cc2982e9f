//! Shifted reduced, ordered weak Popov and Popov forms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::mat::Mat;
use crate::poly::Poly;
use crate::polymat::{check_shift, PolyMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Reduced,
    /// Ordered weak Popov: the shifted leading matrix is lower triangular
    /// and invertible.
    Owp,
    Popov,
}

/// Pivot index and pivot degree of each row. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotProfile {
    pub index: Vec<usize>,
    pub degree: Vec<usize>,
}

/// A nonsingular square basis with its pivot profile and form tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisResult {
    pub matrix: PolyMat,
    pub pivots: PivotProfile,
    pub form: Form,
}

impl BasisResult {
    /// Wraps a matrix whose pivots lie on the diagonal, reading the pivot
    /// degrees off the diagonal.
    pub fn from_ordered(matrix: PolyMat, form: Form) -> BasisResult {
        let m = matrix.rows();
        let degree = (0..m)
            .map(|i| matrix.get(i, i).degree().expect("nonzero diagonal"))
            .collect();
        BasisResult {
            matrix,
            pivots: PivotProfile {
                index: (0..m).collect(),
                degree,
            },
            form,
        }
    }

    /// Like [`BasisResult::from_ordered`] but fails on a zero diagonal entry.
    pub fn from_ordered_checked(matrix: PolyMat, form: Form) -> Result<BasisResult> {
        if let Some(i) = (0..matrix.rows()).find(|&i| matrix.get(i, i).is_zero()) {
            return Err(Error::ZeroRow(i));
        }
        Ok(BasisResult::from_ordered(matrix, form))
    }

    pub fn identity(field: Field, m: usize) -> BasisResult {
        BasisResult::from_ordered(PolyMat::identity(field, m), Form::Popov)
    }

    /// The pivot degree tuple.
    pub fn delta(&self) -> &[usize] {
        &self.pivots.degree
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Entry `(i, j)` is the coefficient of degree `rdeg_s(row i) - s_j` of
/// `P_ij`. Zero rows give zero rows.
pub fn leading_matrix(p: &PolyMat, s: &[i64]) -> Result<Mat> {
    check_shift(s, p.cols())?;
    let mut lm = Mat::zeros(p.rows(), p.cols());
    for i in 0..p.rows() {
        let Some(r) = p.row_degree_shifted(i, s) else {
            continue;
        };
        for j in 0..p.cols() {
            let k = r - s[j];
            if k >= 0 {
                lm.set(i, j, p.get(i, j).coeff(k as usize));
            }
        }
    }
    Ok(lm)
}

pub fn check_form(p: &PolyMat, s: &[i64], form: Form) -> Result<bool> {
    if !p.is_square() {
        return Err(Error::Dimension("form check needs a square matrix".into()));
    }
    check_shift(s, p.cols())?;
    let f = p.field();
    let m = p.rows();
    if (0..m).any(|i| p.row(i).iter().all(Poly::is_zero)) {
        return Ok(false);
    }
    let lm = leading_matrix(p, s)?;
    match form {
        Form::Reduced => Ok(lm.rank(f) == m),
        Form::Owp => Ok(is_owp_leading(&lm)),
        Form::Popov => {
            if !is_owp_leading(&lm) {
                return Ok(false);
            }
            for j in 0..m {
                let diag = p.get(j, j);
                if diag.lc() != 1 {
                    return Ok(false);
                }
                let dj = diag.degree();
                if (0..m).any(|i| i != j && p.get(i, j).degree() >= dj) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn is_owp_leading(lm: &Mat) -> bool {
    lm.is_lower_triangular() && (0..lm.rows()).all(|i| lm.get(i, i) != 0)
}

/// Pivot of each row: the rightmost entry attaining the shifted row degree.
/// Fails on zero rows and when two rows share a pivot index.
pub fn pivot_profile(p: &PolyMat, s: &[i64]) -> Result<PivotProfile> {
    check_shift(s, p.cols())?;
    let mut index = Vec::with_capacity(p.rows());
    let mut degree = Vec::with_capacity(p.rows());
    let mut seen = vec![false; p.cols()];
    for i in 0..p.rows() {
        let (j, d) = row_pivot(p.row(i), s).ok_or(Error::ZeroRow(i))?;
        if seen[j] {
            return Err(Error::NotWeakPopov);
        }
        seen[j] = true;
        index.push(j);
        degree.push(d);
    }
    Ok(PivotProfile { index, degree })
}

/// `(pivot index, pivot degree)` of a row vector, `None` if it is zero.
pub fn row_pivot(row: &[Poly], s: &[i64]) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for (j, (p, &sj)) in row.iter().zip(s).enumerate() {
        if let Some(d) = p.degree() {
            let v = d as i64 + sj;
            if best.is_none_or(|(b, _, _)| v >= b) {
                best = Some((v, j, d));
            }
        }
    }
    best.map(|(_, j, d)| (j, d))
}

/// `LM_{-delta}(R)^-1 * R`.
pub fn normalize_to_popov(r: &PolyMat, delta: &[usize]) -> Result<PolyMat> {
    if !r.is_square() {
        return Err(Error::Dimension("normalization needs a square matrix".into()));
    }
    let shift: Vec<i64> = delta.iter().map(|&d| -(d as i64)).collect();
    let lm = leading_matrix(r, &shift)?;
    let inv = lm.inverse(r.field())?;
    PolyMat::from_mat(*r.field(), &inv).mul(r)
}

/// Reduces the row `v` against the rows of `p`, which must be in
/// `s`-ordered weak Popov form. The remainder is zero iff `v` lies in the row
/// space of `p`.
pub fn membership_reduce(v: &[Poly], p: &PolyMat, s: &[i64]) -> Result<Vec<Poly>> {
    if !p.is_square() || v.len() != p.cols() {
        return Err(Error::Dimension("membership_reduce".into()));
    }
    check_shift(s, p.cols())?;
    let f = *p.field();
    let mut v = v.to_vec();
    let lc_inv: Vec<_> = (0..p.rows())
        .map(|i| f.inv(p.get(i, i).lc()))
        .collect::<Result<_>>()
        .map_err(|_| Error::NotWeakPopov)?;
    while let Some((j, e)) = row_pivot(&v, s) {
        let pj = p.get(j, j);
        let dj = pj.degree().expect("nonzero pivot");
        if e < dj {
            break;
        }
        let c = f.neg(f.mul(v[j].lc(), lc_inv[j]));
        for (k, vk) in v.iter_mut().enumerate() {
            vk.add_scaled_shifted(&f, p.get(j, k), c, e - dj);
        }
    }
    Ok(v)
}

/// `pi * P * pi^-1` where row `k` of the result is row `order[k]` of `P`.
pub fn conjugate(p: &PolyMat, order: &[usize]) -> PolyMat {
    p.submatrix(order, order)
}

/// Inverse of [`conjugate`]: entry `(order[k], order[l])` of the result is
/// entry `(k, l)` of `q`.
pub fn unconjugate(q: &PolyMat, order: &[usize]) -> PolyMat {
    let mut pos = vec![0; order.len()];
    for (k, &o) in order.iter().enumerate() {
        pos[o] = k;
    }
    q.submatrix(&pos, &pos)
}

fn partition_order(m: usize, first: &[usize]) -> Result<Vec<usize>> {
    if first.windows(2).any(|w| w[0] >= w[1]) || first.iter().any(|&i| i >= m) {
        return Err(Error::InvalidPartition(format!(
            "{first:?} is not a strictly increasing subset of 0..{m}"
        )));
    }
    let mut order = first.to_vec();
    order.extend((0..m).filter(|i| !first.contains(i)));
    Ok(order)
}

/// Leading principal `r x r` block of `pi * P * pi^-1` for the partition
/// `first | rest` of the row indices, i.e. the submatrix of `P` on rows and
/// columns `first`. It is in ordered weak Popov form for the restricted
/// shift whenever `P` is.
pub fn submatrix_permute_owp(p: &PolyMat, first: &[usize]) -> Result<PolyMat> {
    partition_order(p.rows(), first)?;
    Ok(p.submatrix(first, first))
}

/// Builds `[[P, Q], [0, X^d]]` and conjugates it back to the original index
/// order of the partition `first | rest`.
pub fn embed_block_triangular(
    p: &PolyMat,
    q: &PolyMat,
    d: &[usize],
    first: &[usize],
) -> Result<PolyMat> {
    let r = p.rows();
    let m = r + d.len();
    if q.rows() != r || q.cols() != d.len() || first.len() != r {
        return Err(Error::Dimension("embed_block_triangular".into()));
    }
    let order = partition_order(m, first)?;
    let block = PolyMat::from_fn(*p.field(), m, m, |i, j| match (i < r, j < r) {
        (true, true) => p.get(i, j).clone(),
        (true, false) => q.get(i, j - r).clone(),
        (false, true) => Poly::zero(),
        (false, false) if i == j => Poly::monomial(1, d[i - r]),
        _ => Poly::zero(),
    });
    Ok(unconjugate(&block, &order))
}
