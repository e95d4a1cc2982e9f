mod common;

use appbas::oracle::canonical_basis;
use appbas::random::{random_polymat, seeded_rng};
use appbas::{iterative_appbasis, matmul_embed, mbasis1, popov_pm_basis, verify_basis, BasisResult, Field, Form, Poly, PolyMat};
use common::{instance, SHIFT_KINDS};
use rand::Rng;

fn f7() -> Field {
    Field::new(7).unwrap()
}

#[test]
fn order_one_is_the_base_case() {
    let f = Field::default();
    let mut rng = seeded_rng(1);
    let m = random_polymat(&mut rng, &f, 4, 1, 1);
    let s = [2, 0, -1, 0];
    let want = mbasis1(&f, &m.coeff_mat(0), &s).unwrap();
    assert_eq!(iterative_appbasis(&[1], &m, &s).unwrap().matrix, want.matrix);
}

#[test]
fn hand_trace() {
    let f = f7();
    let m = PolyMat::from_i64(f, &[vec![vec![1]], vec![vec![1, 1]]]);
    let p = iterative_appbasis(&[2], &m, &[0, 0]).unwrap();
    assert_eq!(p.matrix, PolyMat::from_i64(f, &[vec![vec![1, 1], vec![6]], vec![vec![0, 6], vec![0, 1]]]));
    let c = canonical_basis(&[2], &m, &[0, 0]).unwrap();
    assert_eq!(c.matrix, PolyMat::from_i64(f, &[vec![vec![1, 1], vec![6]], vec![vec![1], vec![6, 1]]]));
}

#[test]
fn agrees_with_two_pass_basis() {
    let f = Field::default();
    let mut rng = seeded_rng(2);
    for k in 0..150 {
        let inst = instance(&mut rng, &f, 6, 30, SHIFT_KINDS[k % 3]);
        assert_eq!(canonical_basis(&inst.d, &inst.f, &inst.s).unwrap(), popov_pm_basis(&inst.d, &inst.f, &inst.s).unwrap());
    }
}

#[test]
fn verify_examples() {
    let f = f7();
    let m = PolyMat::from_i64(f, &[vec![vec![1]], vec![vec![1, 1]]]);
    let c = canonical_basis(&[2], &m, &[0, 0]).unwrap();
    assert!(verify_basis(&c, &[2], &m, &[0, 0]).unwrap().all());

    let scaled = BasisResult::from_ordered(c.matrix.shift_up(1), Form::Popov);
    let r = verify_basis(&scaled, &[2], &m, &[0, 0]).unwrap();
    assert!(r.approximant && r.form);
    // sum of the degrees is 4 > sigma
    assert!(!r.degrees);
    assert!(!r.generation);

    let mut zeroed = c.clone();
    zeroed.matrix.set(1, 0, Poly::zero());
    zeroed.matrix.set(1, 1, Poly::zero());
    assert!(!verify_basis(&zeroed, &[2], &m, &[0, 0]).unwrap().form);

    assert!(verify_basis(&BasisResult::identity(f, 3), &[2], &m, &[0, 0]).is_err());
}

#[test]
fn single_corruptions_are_caught() {
    let f = Field::default();
    let mut rng = seeded_rng(3);
    let mut trials = 0;
    while trials < 100 {
        let inst = instance(&mut rng, &f, 5, 24, SHIFT_KINDS[trials % 3]);
        let m = inst.f.rows();
        let c = canonical_basis(&inst.d, &inst.f, &inst.s).unwrap();
        let mut bad = c.clone();
        match trials % 3 {
            0 => {
                let (i, j) = (rng.random_range(0..m), rng.random_range(0..m));
                let mut coeffs = bad.matrix.get(i, j).coeffs().to_vec();
                let k = rng.random_range(0..=coeffs.len());
                if k == coeffs.len() {
                    coeffs.push(0);
                }
                coeffs[k] = f.add(coeffs[k], rng.random_range(1..f.modulus()));
                bad.matrix.set(i, j, Poly::from_coeffs(coeffs));
            }
            1 => {
                let i = rng.random_range(0..m);
                let c = rng.random_range(2..f.modulus());
                for j in 0..m {
                    let v = bad.matrix.get(i, j).scale(&f, c);
                    bad.matrix.set(i, j, v);
                }
            }
            _ => {
                if m < 2 {
                    continue;
                }
                let mut order: Vec<usize> = (0..m).collect();
                order.swap(0, m - 1);
                bad.matrix = bad.matrix.select_rows(&order);
            }
        }
        if bad.matrix == c.matrix {
            continue;
        }
        let r = verify_basis(&bad, &inst.d, &inst.f, &inst.s).unwrap();
        assert!(!r.all(), "corruption {} not caught", trials % 3);
        trials += 1;
    }
}

#[test]
fn matmul_examples() {
    let f = f7();
    let zero = PolyMat::zeros(f, 2, 2);
    assert_eq!(matmul_embed(&zero, &zero).unwrap(), zero);
    let a = PolyMat::from_i64(f, &[vec![vec![2]]]);
    let b = PolyMat::from_i64(f, &[vec![vec![3]]]);
    assert_eq!(matmul_embed(&a, &b).unwrap(), PolyMat::from_i64(f, &[vec![vec![6]]]));
    assert!(matmul_embed(&a, &zero).is_err());
}

#[test]
fn matmul_matches_direct_product() {
    let f = Field::default();
    let mut rng = seeded_rng(4);
    for _ in 0..30 {
        let n = rng.random_range(1..=4);
        let d = rng.random_range(0..=5);
        let a = random_polymat(&mut rng, &f, n, n, d + 1);
        let b = random_polymat(&mut rng, &f, n, n, d + 1);
        assert_eq!(matmul_embed(&a, &b).unwrap(), a.mul(&b).unwrap());
    }
}
