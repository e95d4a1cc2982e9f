//! Partial linearizations: output column linearization (expanding the rows
//! of the basis according to a guessed column degree), overlapping
//! linearization (splitting high-order columns of the input), and the
//! structures relating two overlapping linearizations at degrees `D` and `2D`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::polymat::PolyMat;

/// A matrix whose rows are monomial multiples `X^exp * e_col` of unit
/// vectors, stored as `(col, exp)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMatrix {
    cols: usize,
    entries: Vec<(usize, usize)>,
}

impl ExpansionMatrix {
    pub fn new(cols: usize, entries: Vec<(usize, usize)>) -> ExpansionMatrix {
        assert!(entries.iter().all(|&(c, _)| c < cols));
        ExpansionMatrix { cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(col, exp)` of each row.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn to_polymat(&self, field: Field) -> PolyMat {
        PolyMat::from_fn(field, self.rows(), self.cols, |r, c| {
            let (col, e) = self.entries[r];
            if col == c {
                Poly::monomial(1, e)
            } else {
                Poly::zero()
            }
        })
    }

    /// `E * F mod X^d`.
    pub fn apply_truncated(&self, f: &PolyMat, d: &[usize]) -> PolyMat {
        assert_eq!(f.rows(), self.cols);
        PolyMat::from_fn(*f.field(), self.rows(), f.cols(), |r, j| {
            let (col, e) = self.entries[r];
            if e >= d[j] {
                Poly::zero()
            } else {
                f.get(col, j).truncate(d[j] - e).shift_up(e)
            }
        })
    }

    /// `P * E`.
    pub fn right_mul(&self, p: &PolyMat) -> PolyMat {
        assert_eq!(p.cols(), self.rows());
        let field = *p.field();
        let mut out = PolyMat::zeros(field, p.rows(), self.cols);
        for (r, &(col, e)) in self.entries.iter().enumerate() {
            for i in 0..p.rows() {
                let src = p.get(i, r);
                if !src.is_zero() {
                    out.get_mut(i, col).add_scaled_shifted(&field, src, 1, e);
                }
            }
        }
        out
    }
}

/// Output column linearization data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColParLinData {
    /// The expanded shift, of length `m_hat`.
    pub shift: Vec<i64>,
    /// `m_hat x m` matrix with rows `X^(k * deg_exp) e_i`, `k < alpha_i`.
    pub expansion: ExpansionMatrix,
    pub alphas: Vec<usize>,
    pub betas: Vec<i64>,
    /// `s - max(s) + sdiff`.
    pub t: Vec<i64>,
    pub m_hat: usize,
    pub deg_exp: usize,
}

impl ColParLinData {
    /// Indices (0-based) of rows `alpha_1 + ... + alpha_i`, one per original row.
    pub fn pivot_rows(&self) -> Vec<usize> {
        self.alphas
            .iter()
            .scan(0, |acc, &a| {
                *acc += a;
                Some(*acc - 1)
            })
            .collect()
    }

    /// `E * F mod X^d`.
    pub fn linearized_system(&self, f: &PolyMat, d: &[usize]) -> PolyMat {
        self.expansion.apply_truncated(f, d)
    }
}

/// Builds the expansion for the shift `s` with parameters `deg_exp` and
/// `sdiff`. Row `i` is split into `alpha_i` rows where
/// `-t_i = (alpha_i - 1) deg_exp + beta_i` with `1 <= beta_i <= deg_exp` if
/// `t_i < 0`, and `alpha_i = 1`, `beta_i = -t_i` otherwise.
pub fn col_par_lin(s: &[i64], deg_exp: usize, sdiff: i64) -> Result<ColParLinData> {
    if deg_exp == 0 {
        return Err(Error::Precondition("deg_exp must be at least 1".into()));
    }
    let m = s.len();
    let de = deg_exp as i64;
    let smax = s.iter().copied().max().unwrap_or(0);
    let t: Vec<i64> = s.iter().map(|&x| x - smax + sdiff).collect();
    let mut alphas = Vec::with_capacity(m);
    let mut betas = Vec::with_capacity(m);
    let mut shift = Vec::new();
    let mut entries = Vec::new();
    for (i, &ti) in t.iter().enumerate() {
        let (alpha, beta) = if ti < 0 {
            let a = (-ti + de - 1) / de;
            (a as usize, -ti - (a - 1) * de)
        } else {
            (1, -ti)
        };
        for k in 0..alpha {
            shift.push(if k + 1 == alpha { -beta } else { -de });
            entries.push((i, k * deg_exp));
        }
        alphas.push(alpha);
        betas.push(beta);
    }
    Ok(ColParLinData {
        m_hat: shift.len(),
        shift,
        expansion: ExpansionMatrix::new(m, entries),
        alphas,
        betas,
        t,
        deg_exp,
    })
}

/// Rows `alpha_1 + ... + alpha_i` of `P_hat * E`, with flags marking rows
/// whose expanded shifted row degree is at most zero.
pub fn project_rows(p_hat: &PolyMat, lin: &ColParLinData) -> Result<(PolyMat, Vec<bool>)> {
    if p_hat.rows() != lin.m_hat || p_hat.cols() != lin.m_hat {
        return Err(Error::Dimension("project_rows: basis is not m_hat x m_hat".into()));
    }
    let rows = lin.pivot_rows();
    let selected = p_hat.select_rows(&rows);
    let flags = rows
        .iter()
        .map(|&r| p_hat.row_degree_shifted(r, &lin.shift).is_none_or(|d| d <= 0))
        .collect();
    Ok((lin.expansion.right_mul(&selected), flags))
}

/// Overlapping linearization data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvlpLinData {
    pub lin_orders: Vec<usize>,
    /// `(m + n_tilde) x (n + n_tilde)`.
    pub lin_matrix: PolyMat,
    pub n_tilde: usize,
    pub alphas: Vec<usize>,
    pub deg_exp: usize,
    /// First linearized column of each original column.
    pub col_start: Vec<usize>,
    /// First selector row (counted after the `m` original rows) of each column.
    pub sel_start: Vec<usize>,
}

impl OvlpLinData {
    /// Number of linearized columns produced by original column `i`.
    pub fn width(&self, i: usize) -> usize {
        self.alphas[i].max(1)
    }

    /// Number of selector rows produced by original column `i`.
    pub fn selector_rows(&self, i: usize) -> usize {
        self.alphas[i].saturating_sub(1)
    }
}

/// `alpha = ceil(d / deg_exp - 1)`.
pub fn ovlp_alpha(d: usize, deg_exp: usize) -> usize {
    d.div_ceil(deg_exp).saturating_sub(1)
}

/// Column `i` with `alpha_i > 1` becomes the `alpha_i` overlapping slices
/// `f^(k) + f^(k+1) X^deg_exp` of its `X^deg_exp`-adic expansion, with
/// orders `(2 deg_exp, ..., 2 deg_exp, deg_exp + beta_i)` and a selector
/// block `[0 I]`; other columns are copied.
pub fn overlapping_lin(d: &[usize], f: &PolyMat, deg_exp: usize) -> Result<OvlpLinData> {
    if deg_exp == 0 {
        return Err(Error::Precondition("deg_exp must be at least 1".into()));
    }
    f.check_orders(d)?;
    let (m, n) = (f.rows(), f.cols());
    let field = *f.field();
    let alphas: Vec<usize> = d.iter().map(|&x| ovlp_alpha(x, deg_exp)).collect();
    let n_tilde: usize = alphas.iter().map(|&a| a.saturating_sub(1)).sum();
    let mut lin = PolyMat::zeros(field, m + n_tilde, n + n_tilde);
    let mut lin_orders = Vec::with_capacity(n + n_tilde);
    let mut col_start = Vec::with_capacity(n);
    let mut sel_start = Vec::with_capacity(n);
    let (mut c, mut r) = (0, 0);
    for j in 0..n {
        col_start.push(c);
        sel_start.push(r);
        let a = alphas[j];
        if a > 1 {
            for k in 0..a {
                for i in 0..m {
                    lin.set(i, c + k, f.get(i, j).window(k * deg_exp, (k + 2) * deg_exp));
                }
                lin_orders.push(if k + 1 < a { 2 * deg_exp } else { d[j] - (a - 1) * deg_exp });
            }
            for k in 0..a - 1 {
                lin.set(m + r + k, c + k + 1, Poly::constant(1));
            }
            c += a;
            r += a - 1;
        } else {
            for i in 0..m {
                lin.set(i, c, f.get(i, j).clone());
            }
            lin_orders.push(d[j]);
            c += 1;
        }
    }
    Ok(OvlpLinData {
        lin_orders,
        lin_matrix: lin,
        n_tilde,
        alphas,
        deg_exp,
        col_start,
        sel_start,
    })
}

/// The leading principal `m x m` block.
pub fn lift_back(p_hat: &PolyMat, m: usize) -> Result<PolyMat> {
    if p_hat.rows() < m || p_hat.cols() < m {
        return Err(Error::Dimension("lift_back: basis smaller than m".into()));
    }
    Ok(p_hat.leading_principal(m))
}

/// Structures relating the overlapping linearizations at `deg_exp` and
/// `2 deg_exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Doubling {
    pub lin: OvlpLinData,
    pub lin2: OvlpLinData,
    /// The linearization at `2 deg_exp` with zero rows inserted at the odd
    /// selector positions, `(m + n_tilde) x (n + n_tilde2)`.
    pub f2: PolyMat,
    /// Row `k` of `pi * A` is row `order[k]` of `A`: original rows, then the
    /// even selector rows of every block, then the odd ones.
    pub order: Vec<usize>,
    /// Columns of the `deg_exp` linearization kept at `2 deg_exp`.
    pub sel: Vec<usize>,
    /// The complementary columns.
    pub sel_comp: Vec<usize>,
    /// Orders of the kept columns at `deg_exp`.
    pub mu: Vec<usize>,
    /// Orders at `2 deg_exp`.
    pub nu: Vec<usize>,
}

pub fn doubling_structs(d: &[usize], f: &PolyMat, deg_exp: usize) -> Result<Doubling> {
    let lin = overlapping_lin(d, f, deg_exp)?;
    let lin2 = overlapping_lin(d, f, 2 * deg_exp)?;
    let m = f.rows();
    let n = f.cols();
    let mut sel = Vec::new();
    let mut sel_comp = Vec::new();
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for j in 0..n {
        let a = lin.alphas[j];
        let c0 = lin.col_start[j];
        let kept = (a / 2).max(1);
        for k in 0..lin.width(j) {
            if k % 2 == 0 && k / 2 < kept {
                sel.push(c0 + k);
            } else {
                sel_comp.push(c0 + k);
            }
        }
        // selector row r picks column r + 1; it survives iff r + 1 is kept
        for r in 0..lin.selector_rows(j) {
            let row = m + lin.sel_start[j] + r;
            if r % 2 == 1 && r.div_ceil(2) < kept {
                even.push(row);
            } else {
                odd.push(row);
            }
        }
    }
    debug_assert_eq!(even.len(), lin2.n_tilde);
    let order: Vec<usize> = (0..m).chain(even.iter().copied()).chain(odd).collect();
    let rows = m + lin.n_tilde;
    let cols = lin2.lin_matrix.cols();
    let mut f2 = PolyMat::zeros(*f.field(), rows, cols);
    for k in 0..m + lin2.n_tilde {
        for c in 0..cols {
            f2.set(order[k], c, lin2.lin_matrix.get(k, c).clone());
        }
    }
    let mu = sel.iter().map(|&c| lin.lin_orders[c]).collect();
    let nu = lin2.lin_orders.clone();
    Ok(Doubling {
        lin,
        lin2,
        f2,
        order,
        sel,
        sel_comp,
        mu,
        nu,
    })
}
