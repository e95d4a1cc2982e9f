//! Truncated products `X^-offsets * (P * F mod X^d)` computed through column
//! partial linearization, so that every multiplication has balanced degrees.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polymat::PolyMat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualStrategy {
    /// Full product followed by truncation and shift.
    Naive,
    /// Split the columns of `F` into slices of degree at most `deg(P)`.
    SliceRight,
    /// Split the columns of `P` into slices of degree below
    /// `ceil(|d| / rows(P))`, i.e. `P = Phat * E`, and multiply `Phat` by
    /// `E * F mod X^d`.
    SliceLeft,
}

/// Column `j` of the result is `(X^-offsets_j * (P * F_j mod X^d_j))`.
pub fn residual(p: &PolyMat, f: &PolyMat, d: &[usize], offsets: &[usize]) -> Result<PolyMat> {
    residual_with(p, f, d, offsets, ResidualStrategy::SliceRight)
}

pub fn residual_with(
    p: &PolyMat,
    f: &PolyMat,
    d: &[usize],
    offsets: &[usize],
    strategy: ResidualStrategy,
) -> Result<PolyMat> {
    if p.cols() != f.rows() {
        return Err(Error::Dimension(format!(
            "residual: {}x{} times {}x{}",
            p.rows(),
            p.cols(),
            f.rows(),
            f.cols()
        )));
    }
    if d.len() != f.cols() || offsets.len() != f.cols() {
        return Err(Error::OrderLength {
            expected: f.cols(),
            got: d.len().min(offsets.len()),
        });
    }
    for (j, (&o, &dj)) in offsets.iter().zip(d).enumerate() {
        if o > dj {
            return Err(Error::OffsetTooLarge {
                col: j,
                offset: o,
                order: dj,
            });
        }
    }
    let f = f.truncate_cols(d);
    let uniform = |v: &[usize]| v.windows(2).all(|w| w[0] == w[1]);
    if strategy != ResidualStrategy::Naive && !d.is_empty() && uniform(d) && uniform(offsets) {
        return p.mul_window(&f, offsets[0], d[0]);
    }
    match strategy {
        ResidualStrategy::Naive => Ok(p.mul(&f)?.window_cols(offsets, d)),
        ResidualStrategy::SliceRight => slice_right(p, &f, d, offsets),
        ResidualStrategy::SliceLeft => slice_left(p, &f, d, offsets),
    }
}

fn slice_right(p: &PolyMat, f: &PolyMat, d: &[usize], offsets: &[usize]) -> Result<PolyMat> {
    let field = *p.field();
    let Some(dp) = p.degree() else {
        return Ok(PolyMat::zeros(field, p.rows(), f.cols()));
    };
    let len = dp + 1;
    // (column, slice index) for every slice that can reach the window
    let mut slices = Vec::new();
    for j in 0..f.cols() {
        let count = d[j].div_ceil(len);
        for k in 0..count {
            if k * len + 2 * len - 1 > offsets[j] {
                slices.push((j, k));
            }
        }
    }
    let flin = PolyMat::from_fn(field, f.rows(), slices.len(), |i, c| {
        let (j, k) = slices[c];
        f.get(i, j).window(k * len, (k + 1) * len)
    });
    let q = p.mul(&flin)?;
    let mut bufs: Vec<Vec<u64>> = (0..p.rows() * f.cols())
        .map(|t| vec![0; d[t % f.cols()] - offsets[t % f.cols()]])
        .collect();
    for (c, &(j, k)) in slices.iter().enumerate() {
        let (lo, hi) = (offsets[j], d[j]);
        for i in 0..p.rows() {
            let buf = &mut bufs[i * f.cols() + j];
            for (e, &coef) in q.get(i, c).coeffs().iter().enumerate() {
                let pos = k * len + e;
                if pos >= lo && pos < hi {
                    buf[pos - lo] = field.add(buf[pos - lo], coef);
                }
            }
        }
    }
    let mut it = bufs.into_iter();
    Ok(PolyMat::from_fn(field, p.rows(), f.cols(), |_, _| {
        Poly::from_coeffs(it.next().expect("buffer per entry"))
    }))
}

fn slice_left(p: &PolyMat, f: &PolyMat, d: &[usize], offsets: &[usize]) -> Result<PolyMat> {
    let field = *p.field();
    let sigma: usize = d.iter().sum();
    let width = sigma.div_ceil(p.rows().max(1)).max(1);
    // (column of P, slice index)
    let mut slices = Vec::new();
    for (c, deg) in p.cdeg().into_iter().enumerate() {
        if let Some(deg) = deg {
            for l in 0..(deg + 1).div_ceil(width) {
                slices.push((c, l));
            }
        }
    }
    if slices.is_empty() {
        return Ok(PolyMat::zeros(field, p.rows(), f.cols()));
    }
    let phat = PolyMat::from_fn(field, p.rows(), slices.len(), |i, s| {
        let (c, l) = slices[s];
        p.get(i, c).window(l * width, (l + 1) * width)
    });
    // rows X^(l*width) * F_c mod X^d
    let ef = PolyMat::from_fn(field, slices.len(), f.cols(), |s, j| {
        let (c, l) = slices[s];
        let shift = l * width;
        if shift >= d[j] {
            Poly::zero()
        } else {
            f.get(c, j).truncate(d[j] - shift).shift_up(shift)
        }
    });
    Ok(phat.mul(&ef)?.window_cols(offsets, d))
}
