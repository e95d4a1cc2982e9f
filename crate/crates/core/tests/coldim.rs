mod common;

use appbas::forms::membership_reduce;
use appbas::oracle::canonical_basis;
use appbas::random::{random_instance, random_orders, seeded_rng};
use appbas::coldim::reduce_coldim_traced;
use appbas::{check_form, reduce_coldim, residual, Error, Field, Form, Poly, PolyMat};
use common::{shift, SHIFT_KINDS};
use rand::Rng;

fn sorted_instance<R: Rng>(rng: &mut R, f: &Field, k: usize) -> (Vec<usize>, PolyMat, Vec<i64>) {
    let m = rng.random_range(1..=6);
    let n = rng.random_range(m..=8);
    let budget = rng.random_range(n..=48);
    let mut d = random_orders(rng, n, 16, budget);
    d.sort_by(|a, b| b.cmp(a));
    let mat = random_instance(rng, f, m, &d);
    let sigma = d.iter().sum();
    (d, mat, shift(rng, SHIFT_KINDS[k % 3], m, sigma))
}

#[test]
fn equal_orders_leave_nothing() {
    let f = Field::default();
    let mut rng = seeded_rng(1);
    let mat = random_instance(&mut rng, &f, 2, &[2, 2, 2]);
    let red = reduce_coldim(&[2, 2, 2], &mat, &[0, 0]).unwrap();
    assert!(red.orders.is_empty());
    assert_eq!(red.system.cols(), 0);
    assert_eq!(red.basis.delta(), canonical_basis(&[2, 2, 2], &mat, &[0, 0]).unwrap().delta());
    assert!(residual(&red.basis.matrix, &mat, &[2, 2, 2], &[0, 0, 0]).unwrap().is_zero());
}

#[test]
fn one_long_column() {
    let f = Field::default();
    let mut rng = seeded_rng(2);
    let mat = random_instance(&mut rng, &f, 2, &[4, 1, 1]);
    let red = reduce_coldim(&[4, 1, 1], &mat, &[0, 0]).unwrap();
    assert_eq!(red.orders, vec![3]);
    assert_eq!(red.basis.delta(), canonical_basis(&[1, 1, 1], &mat.truncate(1), &[0, 0]).unwrap().delta());
}

#[test]
fn rejects_bad_input() {
    let f = Field::default();
    let mut rng = seeded_rng(3);
    let mat = random_instance(&mut rng, &f, 3, &[2, 2]);
    assert!(matches!(reduce_coldim(&[2, 2], &mat, &[0, 0, 0]), Err(Error::Precondition(_))));
    let mat = random_instance(&mut rng, &f, 2, &[1, 3]);
    assert!(matches!(reduce_coldim(&[1, 3], &mat, &[0, 0]), Err(Error::Unsorted)));
}

#[test]
fn output_bounds_and_recombination() {
    let f = Field::default();
    let mut rng = seeded_rng(4);
    for k in 0..150 {
        let (d, mat, s) = sorted_instance(&mut rng, &f, k);
        let (m, n) = (mat.rows(), mat.cols());
        let sigma: usize = d.iter().sum();
        let red = reduce_coldim(&d, &mat, &s).unwrap();
        let nu = red.orders.len();
        assert!(nu < m);
        assert!(red.orders.iter().sum::<usize>() <= sigma);
        assert!(red.basis.matrix.degree().unwrap_or(0) * m <= 2 * sigma);
        assert!(check_form(&red.basis.matrix, &s, Form::Owp).unwrap());
        let dm = d[m - 1];
        let partial: Vec<usize> = (0..n).map(|j| if j < nu { dm } else { d[j] }).collect();
        assert!(residual(&red.basis.matrix, &mat, &partial, &vec![0; n]).unwrap().is_zero());
        let t: Vec<i64> = (0..m).map(|i| red.basis.matrix.row_degree_shifted(i, &s).unwrap()).collect();
        assert_eq!(red.shift, t);
        let head: Vec<usize> = (0..nu).collect();
        let want = residual(&red.basis.matrix, &mat.select_cols(&head), &d[..nu], &vec![dm; nu]).unwrap();
        assert_eq!(red.system, want);

        // recombination through a basis of the reduced problem
        let q = canonical_basis(&red.orders, &red.system, &red.shift).unwrap();
        let qp = q.matrix.mul(&red.basis.matrix).unwrap();
        let full = canonical_basis(&d, &mat, &s).unwrap();
        let additive: Vec<usize> = q.delta().iter().zip(red.basis.delta()).map(|(a, b)| a + b).collect();
        assert_eq!(additive, full.delta());
        assert!(residual(&qp, &mat, &d, &vec![0; n]).unwrap().is_zero());
        assert!(check_form(&qp, &s, Form::Owp).unwrap());
        for i in 0..m {
            assert!(membership_reduce(full.matrix.row(i), &qp, &s).unwrap().iter().all(Poly::is_zero));
            assert!(membership_reduce(qp.row(i), &full.matrix, &s).unwrap().iter().all(Poly::is_zero));
        }
    }
}

#[test]
fn ladder_rungs_are_bases_at_their_order() {
    let f = Field::default();
    let mut rng = seeded_rng(5);
    for k in 0..60 {
        let (d, mat, s) = sorted_instance(&mut rng, &f, k);
        let (red, trace) = reduce_coldim_traced(&d, &mat, &s).unwrap();
        let dt = &trace.padded_orders;
        let ext: Vec<usize> = dt.iter().zip(&d).map(|(a, b)| a - b).collect();
        let padded = mat.shift_cols(&ext);
        for (i, p) in trace.rungs.iter().enumerate() {
            let order: Vec<usize> = dt.iter().map(|&x| x.min(1 << i)).collect();
            assert!(check_form(p, &s, Form::Owp).unwrap(), "rung {i}");
            assert!(residual(p, &padded, &order, &vec![0; order.len()]).unwrap().is_zero(), "rung {i}");
            let want: usize = canonical_basis(&order, &padded.truncate_cols(&order), &s).unwrap().delta().iter().sum();
            let got: usize = (0..p.rows()).map(|r| p.get(r, r).degree().unwrap()).sum();
            assert_eq!(got, want, "rung {i}");
        }
        assert_eq!(trace.rungs.last(), Some(&red.basis.matrix));
    }
}
