//! Reduction of the column dimension below the row dimension through a
//! ladder of uniform-order bases on power-of-two orders.

use crate::basecase::mbasis1;
use crate::error::{Error, Result};
use crate::forms::{BasisResult, Form};
use crate::pmbasis::{pm_basis, shifted_row_degrees};
use crate::poly::Poly;
use crate::polymat::{check_shift, PolyMat};
use crate::residual::residual;

/// Output of [`reduce_coldim`].
#[derive(Clone, Debug)]
pub struct ColDimReduction {
    /// `d_j - d_m` for the `nu < m` columns with `d_j > d_m`.
    pub orders: Vec<usize>,
    /// `X^-d_m * (P * F_j mod X^d_j)` for those columns.
    pub system: PolyMat,
    /// `rdeg_s(P)`.
    pub shift: Vec<i64>,
    /// `s`-ordered weak Popov basis at order `(d_m, ..., d_m, d_(m+1), ..., d_n)`.
    pub basis: BasisResult,
}

/// The intermediate bases of [`reduce_coldim`]. Column `j` is padded to
/// `F_j * X^(padded_orders_j - d_j)`, and `rungs[i]` is the accumulated basis
/// at order `min(2^i, padded_orders_j)` of the padded matrix.
#[derive(Clone, Debug, Default)]
pub struct LadderTrace {
    pub padded_orders: Vec<usize>,
    pub rungs: Vec<PolyMat>,
}

/// Requires `n >= m`, `d` nonincreasing and positive, `cdeg(F) < d`.
pub fn reduce_coldim(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<ColDimReduction> {
    ladder(d, f, s, None)
}

pub fn reduce_coldim_traced(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<(ColDimReduction, LadderTrace)> {
    let mut trace = LadderTrace::default();
    let red = ladder(d, f, s, Some(&mut trace))?;
    Ok((red, trace))
}

fn ladder(d: &[usize], f: &PolyMat, s: &[i64], mut trace: Option<&mut LadderTrace>) -> Result<ColDimReduction> {
    let (m, n) = (f.rows(), f.cols());
    check_shift(s, m)?;
    f.check_orders(d)?;
    if n < m || m == 0 {
        return Err(Error::Precondition(format!(
            "reduce_coldim needs n >= m >= 1, got m={m}, n={n}"
        )));
    }
    if d.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Unsorted);
    }
    if d[n - 1] == 0 {
        return Err(Error::Precondition("orders must be positive".into()));
    }
    let field = *f.field();
    let dm = d[m - 1];
    let dtm = dm.next_power_of_two();
    let dt: Vec<usize> = (0..n)
        .map(|j| if j < m - 1 { d[j] + dtm - dm } else { d[j].next_power_of_two() })
        .collect();
    // column j of the padded matrix is F_j * X^ext_j
    let ext: Vec<usize> = (0..n).map(|j| dt[j] - d[j]).collect();
    let padded_window = |cols: usize, k: usize| {
        PolyMat::from_fn(field, m, cols, |i, j| {
            if k <= ext[j] {
                Poly::zero()
            } else {
                f.get(i, j).truncate(k - ext[j]).shift_up(ext[j])
            }
        })
    };

    let mut p = mbasis1(&field, &padded_window(n, 1).coeff_mat(0), s)?.matrix;
    if let Some(t) = trace.as_deref_mut() {
        t.padded_orders = dt.clone();
        t.rungs.push(p.clone());
    }
    let levels = dtm.trailing_zeros();
    for i in 1..=levels {
        let h = 1usize << (i - 1);
        let mu = dt.partition_point(|&x| x >= 2 * h);
        let window = padded_window(mu, 2 * h);
        let g = residual(&p, &window, &vec![2 * h; mu], &vec![h; mu])?;
        let t = shifted_row_degrees(&p, s);
        let p2 = pm_basis(h, &g, &t)?;
        p = p2.matrix.mul(&p)?;
        if let Some(t) = trace.as_deref_mut() {
            t.rungs.push(p.clone());
        }
    }

    let nu = d.partition_point(|&x| x > dm);
    let head: Vec<usize> = (0..nu).collect();
    let system = residual(&p, &f.select_cols(&head), &d[..nu], &vec![dm; nu])?;
    let shift = shifted_row_degrees(&p, s);
    Ok(ColDimReduction {
        orders: d[..nu].iter().map(|&x| x - dm).collect(),
        system,
        shift,
        basis: BasisResult::from_ordered(p, Form::Owp),
    })
}
