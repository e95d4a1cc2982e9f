//! Divide and conquer computation of the shifted Popov approximant basis.

use crate::coldim::reduce_coldim;
use crate::error::Result;
use crate::forms::BasisResult;
use crate::knowndeg::known_deg_appbasis;
use crate::pmbasis::popov_pm_basis;
use crate::polymat::{check_shift, PolyMat};
use crate::residual::{residual_with, ResidualStrategy};

/// Removes columns of order zero (they impose no condition).
pub fn drop_zero_orders(d: &[usize], f: &PolyMat) -> (Vec<usize>, PolyMat) {
    let keep: Vec<usize> = (0..d.len()).filter(|&j| d[j] > 0).collect();
    (keep.iter().map(|&j| d[j]).collect(), f.select_cols(&keep))
}

/// Stable sort of the columns by nonincreasing order.
pub(crate) fn sort_orders(d: &[usize], f: &PolyMat) -> (Vec<usize>, PolyMat) {
    let mut cols: Vec<usize> = (0..d.len()).collect();
    cols.sort_by(|&a, &b| d[b].cmp(&d[a]));
    (cols.iter().map(|&j| d[j]).collect(), f.select_cols(&cols))
}

/// The `s`-Popov basis of `{p : p F = 0 mod X^d}`.
///
/// Instances with `sigma <= m` are solved by the two-pass uniform-order
/// algorithm; otherwise the order is split in halves, the two half bases
/// reveal the minimal degree, and the basis is computed from it.
pub fn popov_appbasis(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    check_shift(s, f.rows())?;
    f.check_orders(d)?;
    let (d, f) = drop_zero_orders(d, f);
    solve(&d, &f, s, false)
}

fn solve(d: &[usize], f: &PolyMat, s: &[i64], reduced: bool) -> Result<BasisResult> {
    let (m, n) = (f.rows(), f.cols());
    let sigma: usize = d.iter().sum();
    if n == 0 {
        return Ok(BasisResult::identity(*f.field(), m));
    }
    if sigma <= m {
        return popov_pm_basis(d, f, s);
    }
    if n >= m {
        debug_assert!(!reduced, "column reduction entered twice");
        let (ds, fs) = sort_orders(d, f);
        let red = reduce_coldim(&ds, &fs, s)?;
        let p2 = solve(&red.orders, &red.system, &red.shift, true)?;
        let delta: Vec<usize> = red.basis.delta().iter().zip(p2.delta()).map(|(a, b)| a + b).collect();
        return known_deg_appbasis(d, f, s, &delta);
    }

    let target = sigma / 2;
    let mut acc = 0;
    let mut i0 = 0;
    while acc + d[i0] < target {
        acc += d[i0];
        i0 += 1;
    }
    let dd = target - acc;
    let mut d1: Vec<usize> = d[..i0].to_vec();
    d1.push(dd);
    let head: Vec<usize> = (0..=i0).collect();
    let f1 = f.select_cols(&head).truncate_cols(&d1);
    let p1 = solve(&d1, &f1, s, true)?;

    let tail: Vec<usize> = (i0..n).collect();
    let mut offsets = vec![0; tail.len()];
    offsets[0] = dd;
    let g = residual_with(&p1.matrix, &f.select_cols(&tail), &d[i0..], &offsets, ResidualStrategy::SliceLeft)?;
    let mut d2: Vec<usize> = d[i0..].to_vec();
    d2[0] -= dd;
    let (d2, g) = drop_zero_orders(&d2, &g);
    let s2: Vec<i64> = s.iter().zip(p1.delta()).map(|(&x, &y)| x + y as i64).collect();
    let p2 = solve(&d2, &g, &s2, true)?;
    let delta: Vec<usize> = p1.delta().iter().zip(p2.delta()).map(|(a, b)| a + b).collect();
    known_deg_appbasis(d, f, s, &delta)
}
