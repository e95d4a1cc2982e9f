//! Shifted Popov approximant basis at order `(1, ..., 1)`.

use crate::error::Result;
use crate::field::Field;
use crate::forms::{BasisResult, Form};
use crate::lsp::lsp_rank_profile;
use crate::mat::Mat;
use crate::poly::Poly;
use crate::polymat::{check_shift, PolyMat};

/// Stable permutation sorting rows by `(s_i, i)`: entry `k` is the original
/// index placed at position `k`.
pub fn shift_sort(s: &[i64]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..s.len()).collect();
    perm.sort_by_key(|&i| (s[i], i));
    perm
}

/// The `s`-Popov basis of the vectors `p` with `p * C = 0 mod X` for a
/// constant `C`. Rows in the rank profile of the permuted matrix become
/// `X e_i`, the others are the left nullspace vectors read from `L`.
pub fn mbasis1(field: &Field, c: &Mat, s: &[i64]) -> Result<BasisResult> {
    let m = c.rows();
    check_shift(s, m)?;
    let perm = shift_sort(s);
    let mut sorted = Mat::zeros(m, c.cols());
    for (k, &i) in perm.iter().enumerate() {
        sorted.row_mut(k).copy_from_slice(c.row(i));
    }
    let (rho, l) = lsp_rank_profile(field, &sorted);
    let mut in_rho = vec![false; m];
    for &k in &rho {
        in_rho[k] = true;
    }
    let mut out = PolyMat::zeros(*field, m, m);
    for k in 0..m {
        let i = perm[k];
        if in_rho[k] {
            out.set(i, i, Poly::monomial(1, 1));
        } else {
            out.set(i, i, Poly::constant(1));
            for j in 0..k {
                let v = l.get(k, j);
                if v != 0 {
                    out.set(i, perm[j], Poly::constant(field.neg(v)));
                }
            }
        }
    }
    Ok(BasisResult::from_ordered(out, Form::Popov))
}
