mod common;

use appbas::oracle::canonical_basis;
use appbas::random::seeded_rng;
use appbas::unbalanced::{shift_around_max_traced, shift_around_min_traced};
use appbas::{popov_appbasis, verify_basis, Field, Form, PolyMat};
use common::{instance, ShiftKind, SHIFT_KINDS};

#[test]
fn hand_example_mod_7() {
    let f = Field::new(7).unwrap();
    let m = PolyMat::from_i64(f, &[vec![vec![1]], vec![vec![1, 1]]]);
    let p = popov_appbasis(&[2], &m, &[0, 0]).unwrap();
    let expected = PolyMat::from_i64(f, &[vec![vec![1, 1], vec![6]], vec![vec![1], vec![6, 1]]]);
    assert_eq!(p.matrix, expected);
    assert_eq!(p.form, Form::Popov);
}

#[test]
fn split_carry_instance() {
    let f = Field::default();
    let m = PolyMat::from_i64(f, &[vec![vec![1]], vec![vec![0, 1]]]);
    for s in [[0, 0], [0, 3], [2, 0]] {
        let p = popov_appbasis(&[4], &m, &s).unwrap();
        assert_eq!(p, canonical_basis(&[4], &m, &s).unwrap());
    }
}

#[test]
fn popov_appbasis_matches_reference() {
    let field = Field::default();
    let mut rng = seeded_rng(11);
    for kind in SHIFT_KINDS {
        for _ in 0..60 {
            let inst = instance(&mut rng, &field, 6, 30, kind);
            let p = popov_appbasis(&inst.d, &inst.f, &inst.s).unwrap();
            let c = canonical_basis(&inst.d, &inst.f, &inst.s).unwrap();
            assert_eq!(p.matrix, c.matrix, "d={:?} s={:?}", inst.d, inst.s);
        }
    }
}

#[test]
fn shift_around_min_matches_reference_degrees() {
    let field = Field::default();
    let mut rng = seeded_rng(12);
    for _ in 0..80 {
        let inst = instance(&mut rng, &field, 6, 30, ShiftKind::Random);
        let (p, _) = shift_around_min_traced(&inst.d, &inst.f, &inst.s).unwrap();
        let c = canonical_basis(&inst.d, &inst.f, &inst.s).unwrap();
        assert_eq!(p.delta(), c.delta(), "d={:?} s={:?}", inst.d, inst.s);
        assert!(verify_basis(&p, &inst.d, &inst.f, &inst.s).unwrap().all());
    }
}

#[test]
fn shift_around_max_matches_reference_degrees() {
    let field = Field::default();
    let mut rng = seeded_rng(13);
    for _ in 0..80 {
        let inst = instance(&mut rng, &field, 6, 30, ShiftKind::Random);
        let (p, trace) = shift_around_max_traced(&inst.d, &inst.f, &inst.s).unwrap();
        let c = canonical_basis(&inst.d, &inst.f, &inst.s).unwrap();
        assert_eq!(p.delta(), c.delta(), "d={:?} s={:?}", inst.d, inst.s);
        assert!(verify_basis(&p, &inst.d, &inst.f, &inst.s).unwrap().all());
        assert!(trace.halves(), "{trace:?}");
    }
}

#[test]
fn order_one_is_the_base_case() {
    let f = Field::default();
    let mut rng = seeded_rng(14);
    let m = appbas::random::random_polymat(&mut rng, &f, 3, 1, 1);
    let s = [1, -2, 0];
    assert_eq!(popov_appbasis(&[1], &m, &s).unwrap(), appbas::mbasis1(&f, &m.coeff_mat(0), &s).unwrap());
}

#[test]
fn zero_orders_and_column_order_do_not_matter() {
    let field = Field::default();
    let mut rng = seeded_rng(15);
    for kind in SHIFT_KINDS {
        for _ in 0..30 {
            let inst = instance(&mut rng, &field, 6, 30, kind);
            let p = popov_appbasis(&inst.d, &inst.f, &inst.s).unwrap();
            let n = inst.d.len();
            let mut cols: Vec<usize> = (0..n).collect();
            cols.rotate_left(n / 2);
            let d2: Vec<usize> = cols.iter().map(|&j| inst.d[j]).collect();
            assert_eq!(popov_appbasis(&d2, &inst.f.select_cols(&cols), &inst.s).unwrap(), p);
            let mut d3 = inst.d.clone();
            d3.push(0);
            let f3 = inst.f.hstack(&PolyMat::zeros(field, inst.f.rows(), 1)).unwrap();
            assert_eq!(popov_appbasis(&d3, &f3, &inst.s).unwrap(), p);
        }
    }
}

#[test]
fn rejects_inconsistent_input() {
    let f = Field::default();
    let m = PolyMat::from_i64(f, &[vec![vec![1, 2, 3]], vec![vec![1]]]);
    assert!(popov_appbasis(&[2], &m, &[0, 0]).is_err());
    assert!(popov_appbasis(&[3], &m, &[0]).is_err());
    assert!(popov_appbasis(&[3, 3], &m, &[0, 0]).is_err());
}

mod props {
    use super::*;
    use appbas::random::{random_instance, random_orders};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn canonical_and_verified(seed: u64, m in 1usize..7, n in 1usize..7, budget in 1usize..40, kind in 0usize..3) {
            let f = Field::default();
            let mut rng = seeded_rng(seed);
            let d = random_orders(&mut rng, n, 40, budget.max(n));
            let mat = random_instance(&mut rng, &f, m, &d);
            let sigma = d.iter().sum();
            let s = common::shift(&mut rng, SHIFT_KINDS[kind], m, sigma);
            let p = popov_appbasis(&d, &mat, &s).unwrap();
            prop_assert!(verify_basis(&p, &d, &mat, &s).unwrap().all());
            prop_assert_eq!(&p, &canonical_basis(&d, &mat, &s).unwrap());
        }
    }
}
