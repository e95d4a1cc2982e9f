//! Approximant bases for shifts concentrated around their minimum or their
//! maximum value.

use crate::coldim::reduce_coldim;
use crate::error::Result;
use crate::forms::{BasisResult, Form};
use crate::knowndeg::known_deg_appbasis;
use crate::linearize::{col_par_lin, doubling_structs, overlapping_lin};
use crate::pmbasis::{pad_orders, pm_basis, shifted_row_degrees};
use crate::poly::Poly;
use crate::polymat::{check_shift, PolyMat};
use crate::residual::residual;
use crate::solver::{drop_zero_orders, sort_orders};

/// One pass of the doubling loop of [`shift_around_min`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinIteration {
    pub deg_exp: usize,
    /// Rows of the linearized basis at the start of the pass.
    pub rows: usize,
    /// Rows not yet settled at the start of the pass.
    pub unsettled: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinTrace {
    pub initial_deg_exp: usize,
    pub iterations: Vec<MinIteration>,
}

/// Number of rows of `F` kept in the system by [`shift_around_max`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MaxTrace {
    /// At the start of each pass of the loop.
    pub active: Vec<usize>,
    /// When the loop exits.
    pub remaining: usize,
}

impl MaxTrace {
    /// Each pass removes at least half of the rows.
    pub fn halves(&self) -> bool {
        let mut sizes = self.active.clone();
        sizes.push(self.remaining);
        sizes.windows(2).all(|w| w[1] <= w[0] / 2)
    }
}

/// An `s`-ordered weak Popov basis of the approximants of `F` at order `d`,
/// efficient when `sum(s - min(s))` is at most about `sigma`.
pub fn shift_around_min(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    shift_around_min_traced(d, f, s).map(|(p, _)| p)
}

pub fn shift_around_min_traced(
    d: &[usize],
    f: &PolyMat,
    s: &[i64],
) -> Result<(BasisResult, MinTrace)> {
    check_shift(s, f.rows())?;
    f.check_orders(d)?;
    let (d, f) = drop_zero_orders(d, f);
    let mut trace = MinTrace::default();
    let p = around_min(&d, &f, s, &mut trace)?;
    Ok((p, trace))
}

fn around_min(d: &[usize], f: &PolyMat, s: &[i64], trace: &mut MinTrace) -> Result<BasisResult> {
    let field = *f.field();
    let (m, n) = (f.rows(), f.cols());
    if n == 0 || m == 0 {
        return Ok(BasisResult::identity(field, m));
    }
    if n >= m {
        let (ds, fs) = sort_orders(d, f);
        let red = reduce_coldim(&ds, &fs, s)?;
        let p2 = if red.orders.is_empty() {
            BasisResult::identity(field, m)
        } else {
            around_min(&red.orders, &red.system, &red.shift, trace)?
        };
        let delta: Vec<usize> = red.basis.delta().iter().zip(p2.delta()).map(|(a, b)| a + b).collect();
        return known_deg_appbasis(d, f, s, &delta);
    }

    let sigma: usize = d.iter().sum();
    let smin = s.iter().copied().min().unwrap_or(0);
    let s0: Vec<i64> = s.iter().map(|&x| x - smin).collect();
    let amplitude = sigma + s0.iter().sum::<i64>() as usize;
    let mut deg_exp = amplitude.div_ceil(m).max(1);
    trace.initial_deg_exp = deg_exp;

    let lin = overlapping_lin(d, f, deg_exp)?;
    let mut n_tilde = lin.n_tilde;
    let extended = |n_tilde: usize| -> Vec<i64> {
        s0.iter().copied().chain(std::iter::repeat_n(0, n_tilde)).collect()
    };
    let pad: Vec<usize> = lin.lin_orders.iter().map(|&o| 2 * deg_exp - o).collect();
    let mut p = pm_basis(2 * deg_exp, &lin.lin_matrix.shift_cols(&pad), &extended(n_tilde))?.matrix;
    let mut settled = vec![false; m];
    mark_settled(&p, m, deg_exp, &mut settled);

    while settled.iter().any(|&x| !x) {
        let open: Vec<usize> = (0..m + n_tilde).filter(|&i| i >= m || !settled[i]).collect();
        trace.iterations.push(MinIteration { deg_exp, rows: m + n_tilde, unsettled: open.len() });
        let dbl = doubling_structs(d, f, deg_exp)?;
        let rem: Vec<usize> = (0..dbl.nu.len()).filter(|&j| dbl.nu[j] > dbl.mu[j]).collect();
        if !rem.is_empty() {
            let p_open = p.select_rows(&open);
            let nu: Vec<usize> = rem.iter().map(|&j| dbl.nu[j]).collect();
            let mu: Vec<usize> = rem.iter().map(|&j| dbl.mu[j]).collect();
            let g = residual(&p_open, &dbl.f2.select_cols(&rem), &nu, &mu)?;
            let pad: Vec<usize> = nu.iter().zip(&mu).map(|(a, b)| 2 * deg_exp - (a - b)).collect();
            let t = shifted_row_degrees(&p_open, &extended(n_tilde));
            let p2 = pm_basis(2 * deg_exp, &g.shift_cols(&pad), &t)?;
            let updated = p2.matrix.mul(&p_open)?;
            for (k, &i) in open.iter().enumerate() {
                for j in 0..p.cols() {
                    p.set(i, j, updated.get(k, j).clone());
                }
            }
        }
        n_tilde = dbl.lin2.n_tilde;
        let keep = &dbl.order[..m + n_tilde];
        p = p.submatrix(keep, keep);
        deg_exp *= 2;
        mark_settled(&p, m, deg_exp, &mut settled);
    }
    Ok(BasisResult::from_ordered(p.leading_principal(m), Form::Owp))
}

/// Marks rows `i < m` of `[p q]` with `rdeg(q) < rdeg(p) <= deg_exp`.
fn mark_settled(p: &PolyMat, m: usize, deg_exp: usize, settled: &mut [bool]) {
    for (i, flag) in settled.iter_mut().enumerate() {
        if *flag {
            continue;
        }
        let row = p.row(i);
        let head = row[..m].iter().filter_map(Poly::degree).max();
        let tail = row[m..].iter().filter_map(Poly::degree).max();
        if let Some(dp) = head {
            if dp <= deg_exp && tail.is_none_or(|dq| dq < dp) {
                *flag = true;
            }
        }
    }
}

/// An `s`-ordered weak Popov basis of the approximants of `F` at order `d`,
/// efficient when `sum(max(s) - s)` is at most about `sigma`.
pub fn shift_around_max(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    shift_around_max_traced(d, f, s).map(|(p, _)| p)
}

pub fn shift_around_max_traced(
    d: &[usize],
    f: &PolyMat,
    s: &[i64],
) -> Result<(BasisResult, MaxTrace)> {
    check_shift(s, f.rows())?;
    f.check_orders(d)?;
    let (d, f) = drop_zero_orders(d, f);
    let field = *f.field();
    let m = f.rows();
    let mut trace = MaxTrace::default();
    if f.cols() == 0 || m == 0 {
        return Ok((BasisResult::identity(field, m), trace));
    }
    let sigma: usize = d.iter().sum();
    let dmax = d.iter().copied().max().unwrap_or(0);
    let smax = s.iter().copied().max().unwrap_or(0);
    let gap: usize = s.iter().map(|&x| (smax - x) as usize).sum();

    // `system` indexes the rows of F still in play; `unknown` those of its
    // rows not yet known to reach the minimal degree. Every unknown row keeps
    // its best candidate so far, which has the right pivot index.
    let mut out = PolyMat::zeros(field, m, m);
    let mut best: Vec<Option<usize>> = vec![None; m];
    let mut system: Vec<usize> = (0..m).collect();
    let mut unknown = vec![true; m];
    let mut store = |out: &mut PolyMat, i: usize, deg: usize, cols: &[usize], row: &PolyMat, k: usize| {
        if best[i].is_none_or(|b| deg < b) {
            best[i] = Some(deg);
            for j in 0..m {
                out.set(i, j, Poly::zero());
            }
            for (l, &j) in cols.iter().enumerate() {
                out.set(i, j, row.get(k, l).clone());
            }
        }
    };
    while system.iter().any(|&i| unknown[i]) && sigma + gap <= system.len() * dmax {
        trace.active.push(system.len());
        let deg_exp = 1 + 2 * (gap / system.len());
        let s_sys: Vec<i64> = system.iter().map(|&i| s[i]).collect();
        let cpl = col_par_lin(&s_sys, deg_exp, deg_exp as i64)?;
        let lin_sys = cpl.linearized_system(&f.select_rows(&system), &d);
        let p_hat = shift_around_min(&d, &lin_sys, &cpl.shift)?;
        let rows = cpl.expansion.right_mul(&p_hat.matrix.select_rows(&cpl.pivot_rows()));
        let mut next = Vec::new();
        for (k, &i) in system.iter().enumerate() {
            let low = cpl.t[k] < 0;
            if unknown[i] {
                let r = cpl.pivot_rows()[k];
                let big = p_hat.matrix.row_degree_shifted(r, &cpl.shift).is_some_and(|x| x > 0);
                let deg = rows.get(k, k).degree().expect("pivot on the diagonal");
                store(&mut out, i, deg, &system, &rows, k);
                if !low || big {
                    unknown[i] = false;
                }
            }
            if low {
                next.push(i);
            }
        }
        if next.len() == system.len() {
            break;
        }
        system = next;
    }
    trace.remaining = system.len();

    if system.iter().any(|&i| unknown[i]) {
        let s_sys: Vec<i64> = system.iter().map(|&i| s[i]).collect();
        let f_sys = f.select_rows(&system);
        let (ds, fs) = sort_orders(&d, &f_sys);
        let delta = if fs.cols() >= system.len() {
            let red = reduce_coldim(&ds, &fs, &s_sys)?;
            let p2 = if red.orders.is_empty() {
                BasisResult::identity(field, system.len())
            } else {
                let (top, g) = pad_orders(&red.orders, &red.system);
                pm_basis(top, &g, &red.shift)?
            };
            red.basis.delta().iter().zip(p2.delta()).map(|(a, b)| a + b).collect::<Vec<_>>()
        } else {
            let (top, g) = pad_orders(&ds, &fs);
            pm_basis(top, &g, &s_sys)?.delta().to_vec()
        };
        let p = known_deg_appbasis(&d, &f_sys, &s_sys, &delta)?;
        for (k, &i) in system.iter().enumerate() {
            if unknown[i] {
                store(&mut out, i, delta[k], &system, &p.matrix, k);
            }
        }
    }
    Ok((BasisResult::from_ordered_checked(out, Form::Owp)?, trace))
}
