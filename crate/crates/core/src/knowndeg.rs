//! Shifted Popov basis when the shifted minimal degree is known in advance.

use crate::coldim::reduce_coldim;
use crate::error::{Error, Result};
use crate::forms::{check_form, normalize_to_popov, BasisResult, Form};
use crate::linearize::{col_par_lin, lift_back, overlapping_lin};
use crate::pmbasis::pm_basis;
use crate::polymat::{check_shift, PolyMat};
use crate::residual::residual;

/// The `s`-Popov basis of the approximants of `F` at order `d`, given its
/// `s`-minimal degree `delta`. A wrong `delta` is reported as an error
/// (always caught by the debug-build verification).
pub fn known_deg_appbasis(
    d: &[usize],
    f: &PolyMat,
    s: &[i64],
    delta: &[usize],
) -> Result<BasisResult> {
    let m = f.rows();
    check_shift(s, m)?;
    f.check_orders(d)?;
    if delta.len() != m {
        return Err(Error::Dimension(format!(
            "delta has length {}, expected {m}",
            delta.len()
        )));
    }
    let field = *f.field();
    let sigma: usize = d.iter().sum();
    if m == 0 {
        return Ok(BasisResult::identity(field, 0));
    }
    if delta.iter().sum::<usize>() > sigma {
        return Err(Error::Precondition("sum of delta exceeds sigma".into()));
    }
    let deg_exp = sigma.div_ceil(m).max(1);
    let neg_delta: Vec<i64> = delta.iter().map(|&x| -(x as i64)).collect();
    let sdiff = neg_delta.iter().copied().max().unwrap_or(0);
    let cpl = col_par_lin(&neg_delta, deg_exp, sdiff)?;
    let m_hat = cpl.m_hat;

    // sort the orders, nonincreasing and stable
    let mut cols: Vec<usize> = (0..f.cols()).collect();
    cols.sort_by(|&a, &b| d[b].cmp(&d[a]));
    let ds: Vec<usize> = cols.iter().map(|&j| d[j]).collect();
    let fs = cpl.linearized_system(&f.select_cols(&cols), &ds);

    let (d_hat, f_hat, s_hat, r1) = if !ds.is_empty() && fs.cols() >= m_hat {
        let red = reduce_coldim(&ds, &fs, &cpl.shift)?;
        (red.orders, red.system, red.shift, red.basis.matrix)
    } else {
        (ds, fs, cpl.shift.clone(), PolyMat::identity(field, m_hat))
    };

    let r2 = if d_hat.is_empty() {
        PolyMat::identity(field, m_hat)
    } else {
        let ovl = overlapping_lin(&d_hat, &f_hat, deg_exp)?;
        let mut t = s_hat.clone();
        t.extend(std::iter::repeat_n(-(deg_exp as i64), ovl.n_tilde));
        let top = ovl.lin_orders.iter().copied().max().unwrap_or(0);
        let pad: Vec<usize> = ovl.lin_orders.iter().map(|&o| top - o).collect();
        let p_hat = pm_basis(top, &ovl.lin_matrix.shift_cols(&pad), &t)?;
        lift_back(&p_hat.matrix, m_hat)?
    };

    let full = cpl.expansion.right_mul(&r2.mul(&r1)?);
    let r = full.select_rows(&cpl.pivot_rows());
    let popov = normalize_to_popov(&r, delta)?;
    let out = BasisResult::from_ordered_checked(popov, Form::Popov)?;
    if out.delta() != delta {
        return Err(Error::Precondition(
            "delta is not the minimal degree: pivot degrees differ".into(),
        ));
    }
    if cfg!(debug_assertions) {
        verify_output(&out, d, f, s)?;
    }
    Ok(out)
}

fn verify_output(out: &BasisResult, d: &[usize], f: &PolyMat, s: &[i64]) -> Result<()> {
    let zero_offsets = vec![0; d.len()];
    let res = residual(&out.matrix, f, d, &zero_offsets)?;
    if !res.is_zero() {
        return Err(Error::Precondition("delta is not the minimal degree: not an approximant".into()));
    }
    if !check_form(&out.matrix, s, Form::Popov)? {
        return Err(Error::Precondition("delta is not the minimal degree: form check failed".into()));
    }
    Ok(())
}
