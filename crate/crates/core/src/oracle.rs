//! Reference solver and certificate checks. The iterative solver processes
//! one coefficient of one column at a time; it is slow but independent of
//! the fast algorithms, apart from the order-one base case.

use crate::basecase::mbasis1;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{check_form, membership_reduce, normalize_to_popov, pivot_profile, BasisResult, Form};
use crate::mat::Mat;
use crate::poly::Poly;
use crate::polymat::{check_shift, PolyMat};
use crate::residual::{residual_with, ResidualStrategy};
use crate::solver::popov_appbasis;

/// An `s`-ordered weak Popov basis of the approximants of `F` at order `d`.
pub fn iterative_appbasis(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    check_shift(s, f.rows())?;
    f.check_orders(d)?;
    let field = *f.field();
    let m = f.rows();
    let mut p = PolyMat::identity(field, m);
    let mut t = s.to_vec();
    let top = d.iter().copied().max().unwrap_or(0);
    for k in 0..top {
        for (j, _) in d.iter().enumerate().filter(|(_, &dj)| dj > k) {
            let mut c = Mat::zeros(m, 1);
            for i in 0..m {
                c.set(i, 0, coeff_of_product(&field, p.row(i), f, j, k));
            }
            if c.is_zero() {
                continue;
            }
            let step = mbasis1(&field, &c, &t)?.matrix;
            apply_step(&field, &step, &mut p);
            for (i, ti) in t.iter_mut().enumerate() {
                if step.get(i, i).degree() == Some(1) {
                    *ti += 1;
                }
            }
        }
    }
    Ok(BasisResult::from_ordered(p, Form::Owp))
}

/// Coefficient `k` of `row * F_j`.
fn coeff_of_product(field: &Field, row: &[Poly], f: &PolyMat, j: usize, k: usize) -> u64 {
    let mut acc = 0;
    for (l, pl) in row.iter().enumerate() {
        let fl = f.get(l, j);
        for (a, &x) in pl.coeffs().iter().enumerate().take(k + 1) {
            let y = fl.coeff(k - a);
            if x != 0 && y != 0 {
                acc = field.add(acc, field.mul(x, y));
            }
        }
    }
    acc
}

/// `P <- S * P` for an order-one step `S`: rows with `X` on the diagonal are
/// shifted, the other rows are constant combinations of the unshifted ones.
fn apply_step(field: &Field, step: &PolyMat, p: &mut PolyMat) {
    let m = p.rows();
    let old = p.clone();
    for i in 0..m {
        if step.get(i, i).degree() == Some(1) {
            continue;
        }
        for j in 0..m {
            let c = step.get(i, j).coeff(0);
            if j != i && c != 0 {
                for l in 0..m {
                    p.get_mut(i, l).add_scaled_shifted(field, old.get(j, l), c, 0);
                }
            }
        }
    }
    for i in 0..m {
        if step.get(i, i).degree() == Some(1) {
            for l in 0..m {
                let v = old.get(i, l).shift_up(1);
                p.set(i, l, v);
            }
        }
    }
}

/// The `s`-Popov basis computed by the iterative solver: a first pass gives
/// the minimal degree `delta`, a second pass with shift `-delta` gives a
/// basis that normalizes to the Popov form.
pub fn canonical_basis(d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    let first = iterative_appbasis(d, f, s)?;
    let delta = first.delta().to_vec();
    let neg: Vec<i64> = delta.iter().map(|&x| -(x as i64)).collect();
    let second = iterative_appbasis(d, f, &neg)?;
    let popov = normalize_to_popov(&second.matrix, &delta)?;
    Ok(BasisResult::from_ordered(popov, Form::Popov))
}

/// Independent checks of a claimed approximant basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// `P * F = 0 mod X^d`.
    pub approximant: bool,
    /// The shifted form matches the tag of the result.
    pub form: bool,
    /// `sum(delta) <= sigma` and `max(delta) <= max(d)`.
    pub degrees: bool,
    /// Every reference basis row reduces to zero against `P`, and both have
    /// the same degree sum.
    pub generation: bool,
}

impl VerifyReport {
    pub fn all(&self) -> bool {
        self.approximant && self.form && self.degrees && self.generation
    }
}

pub fn verify_basis(p: &BasisResult, d: &[usize], f: &PolyMat, s: &[i64]) -> Result<VerifyReport> {
    check_shift(s, f.rows())?;
    f.check_orders(d)?;
    let m = f.rows();
    let pm = &p.matrix;
    if pm.rows() != m || pm.cols() != m {
        return Err(Error::Dimension(format!("basis is {}x{}, expected {m}x{m}", pm.rows(), pm.cols())));
    }
    let approximant = residual_with(pm, f, d, &vec![0; d.len()], ResidualStrategy::Naive)?.is_zero();
    let form = check_form(pm, s, p.form)?;
    let owp = form && (p.form != Form::Reduced || check_form(pm, s, Form::Owp)?);
    let profile = pivot_profile(pm, s).ok();
    let sigma: usize = d.iter().sum();
    let dmax = d.iter().copied().max().unwrap_or(0);
    let degrees = profile.as_ref().is_some_and(|pr| {
        pr.degree.iter().sum::<usize>() <= sigma && pr.degree.iter().all(|&x| x <= dmax)
    });
    let generation = owp && profile.is_some() && {
        let reference = iterative_appbasis(d, f, s)?;
        let same_sum = reference.delta().iter().sum::<usize>() == profile.as_ref().map_or(0, |pr| pr.degree.iter().sum());
        let mut ok = same_sum;
        for i in 0..m {
            if !ok {
                break;
            }
            let rem = membership_reduce(reference.matrix.row(i), pm, s)?;
            ok = rem.iter().all(Poly::is_zero);
        }
        ok
    };
    Ok(VerifyReport { approximant, form, degrees, generation })
}

/// `A * B` for square matrices of the same size, read off the Popov
/// approximant basis of a block system encoding the product.
pub fn matmul_embed(a: &PolyMat, b: &PolyMat) -> Result<PolyMat> {
    let n = a.rows();
    if !a.is_square() || !b.is_square() || b.rows() != n || a.field() != b.field() {
        return Err(Error::Dimension("matmul_embed needs two square matrices of equal size".into()));
    }
    let field = *a.field();
    let d = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let e = 2 * d + 1;
    let xe = Poly::monomial(1, e);
    let minus_one = Poly::constant(field.neg(1));
    let f = PolyMat::from_fn(field, 4 * n, 2 * n, |i, j| {
        let (bi, ri) = (i / n, i % n);
        let (bj, cj) = (j / n, j % n);
        match (bi, bj) {
            (0, 0) | (1, 1) if ri == cj => xe.clone(),
            (0, 1) => b.get(ri, cj).clone(),
            (1, 0) => a.get(ri, cj).shift_up(e).neg(&field),
            (2, 0) | (3, 1) if ri == cj => minus_one.clone(),
            _ => Poly::zero(),
        }
    });
    let order = vec![6 * d + 4; 2 * n];
    let basis = popov_appbasis(&order, &f, &vec![0; 4 * n])?;
    let idx: Vec<usize> = (3 * n..4 * n).collect();
    let block = basis.matrix.submatrix(&idx, &idx);
    Ok(PolyMat::from_fn(field, n, n, |i, j| {
        if i == j {
            block.get(i, j).sub(&field, &xe)
        } else {
            block.get(i, j).clone()
        }
    }))
}
