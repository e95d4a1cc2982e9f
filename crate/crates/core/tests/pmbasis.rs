mod common;

use appbas::oracle::canonical_basis;
use appbas::pmbasis::pad_orders;
use appbas::random::{random_instance, random_polymat, seeded_rng};
use appbas::{check_form, mbasis1, pm_basis, popov_pm_basis, residual, verify_basis, Field, Form, PolyMat};
use common::{instance, SHIFT_KINDS};
use rand::Rng;

fn f7() -> Field {
    Field::new(7).unwrap()
}

fn hand_instance() -> PolyMat {
    PolyMat::from_i64(f7(), &[vec![vec![1]], vec![vec![1, 1]]])
}

#[test]
fn order_one_delegates_to_base_case() {
    let f = Field::default();
    let mut rng = seeded_rng(1);
    let m = random_polymat(&mut rng, &f, 4, 3, 1);
    assert_eq!(pm_basis(1, &m, &[0, 1, 2, 0]).unwrap().matrix, mbasis1(&f, &m.coeff_mat(0), &[0, 1, 2, 0]).unwrap().matrix);
}

#[test]
fn unit_series() {
    let f = f7();
    let one = PolyMat::from_i64(f, &[vec![vec![1]]]);
    assert_eq!(pm_basis(3, &one, &[0]).unwrap().matrix, PolyMat::from_i64(f, &[vec![vec![0, 0, 0, 1]]]));
}

#[test]
fn hand_instance_degrees() {
    let p = pm_basis(2, &hand_instance(), &[0, 0]).unwrap();
    assert_eq!(p.delta(), &[1, 1]);
    assert_eq!(p.form, Form::Owp);
    assert!(check_form(&p.matrix, &[0, 0], Form::Owp).unwrap());
}

#[test]
fn rejects_high_degree_input() {
    assert!(pm_basis(1, &hand_instance(), &[0, 0]).is_err());
}

#[test]
fn pad_orders_examples() {
    let f = Field::default();
    let mut rng = seeded_rng(2);
    let m = random_instance(&mut rng, &f, 2, &[3, 3]);
    assert_eq!(pad_orders(&[3, 3], &m), (3, m.clone()));
    let m = random_instance(&mut rng, &f, 2, &[2, 1]);
    let (sigma, g) = pad_orders(&[2, 1], &m);
    assert_eq!(sigma, 2);
    assert_eq!(g.get(1, 1), &m.get(1, 1).shift_up(1));
    assert_eq!(g.get(0, 0), m.get(0, 0));
}

#[test]
fn popov_pm_examples() {
    let f = f7();
    let zero = PolyMat::zeros(f, 3, 2);
    assert_eq!(popov_pm_basis(&[2, 5], &zero, &[0, 0, 0]).unwrap().matrix, PolyMat::identity(f, 3));
    let p = popov_pm_basis(&[2], &hand_instance(), &[0, 0]).unwrap();
    assert_eq!(p.matrix, PolyMat::from_i64(f, &[vec![vec![1, 1], vec![6]], vec![vec![1], vec![6, 1]]]));
}

#[test]
fn pm_basis_invariants() {
    let f = Field::default();
    let mut rng = seeded_rng(3);
    for k in 0..120 {
        let m = rng.random_range(1..=6);
        let n = rng.random_range(1..=6);
        let sigma = rng.random_range(1..=20);
        let mat = random_polymat(&mut rng, &f, m, n, sigma);
        let s: Vec<i64> = common::shift(&mut rng, SHIFT_KINDS[k % 3], m, sigma * n);
        let p = pm_basis(sigma, &mat, &s).unwrap();
        assert!(p.matrix.degree().unwrap() <= sigma);
        assert!(check_form(&p.matrix, &s, Form::Owp).unwrap());
        assert!(residual(&p.matrix, &mat, &vec![sigma; n], &vec![0; n]).unwrap().is_zero());
        // predictable degree property across one split
        let h = sigma.div_ceil(2);
        let p1 = pm_basis(h, &mat.truncate(h), &s).unwrap();
        let t: Vec<i64> = (0..m).map(|i| p1.matrix.row_degree_shifted(i, &s).unwrap()).collect();
        let g = residual(&p1.matrix, &mat, &vec![sigma; n], &vec![h; n]).unwrap();
        let p2 = pm_basis(sigma - h, &g, &t).unwrap();
        let prod = p2.matrix.mul(&p1.matrix).unwrap();
        assert_eq!(prod.rdeg_shifted(&s).unwrap(), p2.matrix.rdeg_shifted(&t).unwrap());
    }
}

#[test]
fn popov_pm_matches_reference_and_is_column_permutation_invariant() {
    let f = Field::default();
    let mut rng = seeded_rng(4);
    for k in 0..120 {
        let inst = instance(&mut rng, &f, 6, 30, SHIFT_KINDS[k % 3]);
        let p = popov_pm_basis(&inst.d, &inst.f, &inst.s).unwrap();
        assert_eq!(p, canonical_basis(&inst.d, &inst.f, &inst.s).unwrap());
        assert!(verify_basis(&p, &inst.d, &inst.f, &inst.s).unwrap().all());
        let first = pm_basis(*inst.d.iter().max().unwrap(), &pad_orders(&inst.d, &inst.f).1, &inst.s).unwrap();
        assert_eq!(first.delta(), p.delta());
        let mut cols: Vec<usize> = (0..inst.d.len()).collect();
        cols.reverse();
        let d2: Vec<usize> = cols.iter().map(|&j| inst.d[j]).collect();
        assert_eq!(popov_pm_basis(&d2, &inst.f.select_cols(&cols), &inst.s).unwrap(), p);
    }
}
