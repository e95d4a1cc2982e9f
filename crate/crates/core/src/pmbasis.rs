//! Divide and conquer approximant bases at uniform order.

use crate::basecase::mbasis1;
use crate::error::{Error, Result};
use crate::forms::{normalize_to_popov, BasisResult, Form};
use crate::polymat::{check_shift, PolyMat};
use crate::residual::residual;

/// An `s`-ordered weak Popov basis of the approximants of `F` at order
/// `(sigma, ..., sigma)`, of degree at most `sigma`. Requires `deg(F) < sigma`.
pub fn pm_basis(sigma: usize, f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    check_shift(s, f.rows())?;
    if let Some(deg) = f.degree() {
        if deg >= sigma {
            return Err(Error::Precondition(format!(
                "pm_basis needs deg(F) < sigma, got {deg} >= {sigma}"
            )));
        }
    }
    let p = pm_rec(sigma, f, s)?;
    Ok(BasisResult::from_ordered(p, Form::Owp))
}

fn pm_rec(sigma: usize, f: &PolyMat, s: &[i64]) -> Result<PolyMat> {
    let field = *f.field();
    if sigma == 0 || f.cols() == 0 || f.is_zero() {
        return Ok(PolyMat::identity(field, f.rows()));
    }
    if sigma == 1 {
        return Ok(mbasis1(&field, &f.coeff_mat(0), s)?.matrix);
    }
    let h = sigma.div_ceil(2);
    let p1 = pm_rec(h, &f.truncate(h), s)?;
    let g = residual(&p1, f, &vec![sigma; f.cols()], &vec![h; f.cols()])?;
    let t = shifted_row_degrees(&p1, s);
    let p2 = pm_rec(sigma - h, &g, &t)?;
    p2.mul(&p1)
}

/// Shifted row degrees of a nonsingular matrix.
pub(crate) fn shifted_row_degrees(p: &PolyMat, s: &[i64]) -> Vec<i64> {
    (0..p.rows())
        .map(|i| p.row_degree_shifted(i, s).expect("nonsingular basis"))
        .collect()
}

/// `(max d, F * X^(max d - d))`: approximants at order `d` are exactly the
/// approximants of the padded matrix at uniform order `max d`.
pub fn pad_orders(d: &[usize], f: &PolyMat) -> (usize, PolyMat) {
    let sigma = d.iter().copied().max().unwrap_or(0);
    let e: Vec<usize> = d.iter().map(|&dj| sigma - dj).collect();
    (sigma, f.shift_cols(&e))
}

/// The `s`-Popov basis of the approximants of `F` at order `d`: a first pass
/// reveals the minimal degree `delta`, a second pass with shift `-delta`
/// gives a basis that is normalized by its leading matrix.
pub fn popov_pm_basis(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    check_shift(s, f.rows())?;
    f.check_orders(d)?;
    let (sigma, g) = pad_orders(d, f);
    let p = pm_basis(sigma, &g, s)?;
    let delta = p.delta().to_vec();
    let neg: Vec<i64> = delta.iter().map(|&x| -(x as i64)).collect();
    let r = pm_basis(sigma, &g, &neg)?;
    let popov = normalize_to_popov(&r.matrix, &delta)?;
    Ok(BasisResult::from_ordered(popov, Form::Popov))
}
