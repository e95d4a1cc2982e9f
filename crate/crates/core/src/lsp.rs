//! Row rank profile and the unit lower triangular factor of an LSP-type
//! decomposition `C = L * S`, where `S` keeps the rows of `C` at the rank
//! profile and is zero elsewhere.

use crate::field::Field;
use crate::mat::Mat;

/// Returns `(rho, L)`.
///
/// `rho` is the lexicographically smallest set of row indices whose rows form
/// a basis of the row space of `c`. `L` is unit lower triangular, its column
/// `j` is the identity column for `j` outside `rho`, and for `i` outside `rho`
/// row `i` of `L` expresses row `i` of `c` in terms of the earlier rows in
/// `rho`. Negating the off-diagonal part of that row gives a vector of the
/// left nullspace of `c`.
pub fn lsp_rank_profile(f: &Field, c: &Mat) -> (Vec<usize>, Mat) {
    let m = c.rows();
    let mut l = Mat::identity(m);
    let mut rho = Vec::new();
    // echelon rows with their pivot column and their expression in terms of
    // the original rows, stored as coefficients over `rho` positions
    let mut basis: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    for i in 0..m {
        let mut r = c.row(i).to_vec();
        // combination of rows of c, indexed by original row
        let mut comb = vec![0u64; m];
        comb[i] = 1;
        for (piv, brow, bcomb) in &basis {
            let a = r[*piv];
            if a == 0 {
                continue;
            }
            let na = f.neg(a);
            // brow vanishes before its pivot, bcomb after the current row
            for (x, &y) in r[*piv..].iter_mut().zip(&brow[*piv..]) {
                *x = f.add(*x, f.mul(na, y));
            }
            for (x, &y) in comb[..=i].iter_mut().zip(&bcomb[..=i]) {
                *x = f.add(*x, f.mul(na, y));
            }
        }
        match r.iter().position(|&x| x != 0) {
            Some(piv) => {
                let inv = f.inv(r[piv]).expect("nonzero pivot");
                r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((piv, r, comb));
                rho.push(i);
            }
            None => {
                // comb = e_i - sum_j lambda_j e_j with lambda supported on rho
                for j in 0..i {
                    l.set(i, j, f.neg(comb[j]));
                }
            }
        }
    }
    (rho, l)
}
