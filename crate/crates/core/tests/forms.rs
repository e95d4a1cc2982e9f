mod common;

use appbas::forms::{
    conjugate, embed_block_triangular, leading_matrix, membership_reduce, normalize_to_popov, submatrix_permute_owp,
    unconjugate,
};
use appbas::random::{random_poly, seeded_rng};
use appbas::{check_form, iterative_appbasis, pivot_profile, popov_appbasis, Error, Field, Form, Mat, Poly, PolyMat};
use common::{instance, SHIFT_KINDS};
use rand::Rng;

fn f7() -> Field {
    Field::new(7).unwrap()
}

fn pm(f: Field, rows: &[Vec<Vec<i64>>]) -> PolyMat {
    PolyMat::from_i64(f, rows)
}

fn popov_example() -> PolyMat {
    pm(f7(), &[vec![vec![1, 1], vec![6]], vec![vec![1], vec![6, 1]]])
}

#[test]
fn leading_matrix_examples() {
    let f = f7();
    let x = PolyMat::identity(f, 2).shift_up(1);
    assert_eq!(leading_matrix(&x, &[0, 0]).unwrap(), Mat::identity(2));
    assert_eq!(leading_matrix(&popov_example(), &[-1, -1]).unwrap(), Mat::identity(2));
    let p = pm(f, &[vec![vec![0, 1], vec![]], vec![vec![6], vec![1]]]);
    assert_eq!(leading_matrix(&p, &[0, 0]).unwrap(), Mat::from_rows(vec![vec![1, 0], vec![6, 1]]));
    assert!(matches!(leading_matrix(&p, &[0]), Err(Error::ShiftLength { .. })));
}

#[test]
fn check_form_examples() {
    let f = f7();
    for form in [Form::Reduced, Form::Owp, Form::Popov] {
        assert!(check_form(&PolyMat::identity(f, 3), &[4, -2, 0], form).unwrap());
    }
    assert!(check_form(&popov_example(), &[0, 0], Form::Popov).unwrap());
    let q = pm(f, &[vec![vec![1, 1], vec![6]], vec![vec![0, 6], vec![0, 1]]]);
    assert!(check_form(&q, &[0, 0], Form::Owp).unwrap());
    assert!(!check_form(&q, &[0, 0], Form::Popov).unwrap());
    let rect = PolyMat::zeros(f, 2, 3);
    assert!(check_form(&rect, &[0, 0], Form::Owp).is_err());
}

#[test]
fn pivot_profile_examples() {
    let f = f7();
    let x = PolyMat::identity(f, 2).shift_up(1);
    let pr = pivot_profile(&x, &[0, 0]).unwrap();
    assert_eq!((pr.index, pr.degree), (vec![0, 1], vec![1, 1]));
    let p = pm(f, &[vec![vec![0, 1], vec![]], vec![vec![6], vec![1]]]);
    let pr = pivot_profile(&p, &[0, 0]).unwrap();
    assert_eq!((pr.index.clone(), pr.degree.clone()), (vec![0, 1], vec![1, 0]));
    assert_eq!(pivot_profile(&p, &[5, 5]).unwrap(), pr);
    let zero_row = pm(f, &[vec![vec![1], vec![]], vec![vec![], vec![]]]);
    assert!(matches!(pivot_profile(&zero_row, &[0, 0]), Err(Error::ZeroRow(1))));
    let clash = pm(f, &[vec![vec![1], vec![]], vec![vec![1], vec![]]]);
    assert!(matches!(pivot_profile(&clash, &[0, 0]), Err(Error::NotWeakPopov)));
}

#[test]
fn normalize_examples() {
    let f = f7();
    assert_eq!(normalize_to_popov(&popov_example(), &[1, 1]).unwrap(), popov_example());
    let r = pm(f, &[vec![vec![1, 1], vec![6]], vec![vec![0, 6], vec![0, 1]]]);
    let p = normalize_to_popov(&r, &[1, 1]).unwrap();
    assert_eq!(p, popov_example());
    assert_eq!(leading_matrix(&p, &[-1, -1]).unwrap(), Mat::identity(2));
    let singular = pm(f, &[vec![vec![0, 1], vec![]], vec![vec![0, 1], vec![]]]);
    assert!(normalize_to_popov(&singular, &[1, 1]).is_err());
}

#[test]
fn membership_examples() {
    let f = f7();
    let p = popov_example();
    let is_zero = |v: Vec<Poly>| v.iter().all(Poly::is_zero);
    assert!(is_zero(membership_reduce(p.row(0), &p, &[0, 0]).unwrap()));
    let v: Vec<Poly> = (0..2).map(|j| p.get(0, j).shift_up(1).add(&f, p.get(1, j))).collect();
    assert!(is_zero(membership_reduce(&v, &p, &[0, 0]).unwrap()));
    let e1 = vec![Poly::constant(1), Poly::zero()];
    assert!(!is_zero(membership_reduce(&e1, &p, &[0, 0]).unwrap()));
}

#[test]
fn permutation_examples() {
    let f = f7();
    let p = pm(f, &[vec![vec![0, 1], vec![]], vec![vec![6], vec![1]]]);
    assert_eq!(submatrix_permute_owp(&p, &[0, 1]).unwrap(), p);
    let block = submatrix_permute_owp(&p, &[1]).unwrap();
    assert_eq!(block, pm(f, &[vec![vec![1]]]));
    assert!(check_form(&block, &[0], Form::Owp).unwrap());
    assert!(submatrix_permute_owp(&p, &[1, 0]).is_err());
    assert!(submatrix_permute_owp(&p, &[2]).is_err());
    let order = [1, 0];
    assert_eq!(unconjugate(&conjugate(&p, &order), &order), p);
}

#[test]
fn block_triangular_embedding_is_owp() {
    let f = Field::default();
    let mut rng = seeded_rng(8);
    let mut checked = 0;
    while checked < 50 {
        let inst = instance(&mut rng, &f, 5, 20, common::ShiftKind::Random);
        let m = inst.f.rows();
        if m < 2 {
            continue;
        }
        let first: Vec<usize> = (0..m).filter(|_| rng.random_bool(0.5)).collect();
        if first.is_empty() || first.len() == m {
            continue;
        }
        let rest: Vec<usize> = (0..m).filter(|i| !first.contains(i)).collect();
        let s_first: Vec<i64> = first.iter().map(|&i| inst.s[i]).collect();
        let p = popov_appbasis(&inst.d, &inst.f.select_rows(&first), &s_first).unwrap();
        // entries of Q stay strictly below the shifted row degree of P
        let q = PolyMat::from_fn(f, first.len(), rest.len(), |i, j| {
            let rdeg = p.delta()[i] as i64 + s_first[i];
            random_poly(&mut rng, &f, (rdeg - inst.s[rest[j]]).max(0) as usize)
        });
        let e: Vec<usize> = rest.iter().map(|_| rng.random_range(0..4)).collect();
        let emb = embed_block_triangular(&p.matrix, &q, &e, &first).unwrap();
        let mut order = first.clone();
        order.extend(&rest);
        assert_eq!(conjugate(&emb, &order).leading_principal(first.len()), p.matrix);
        assert!(check_form(&emb, &inst.s, Form::Owp).unwrap());
        checked += 1;
    }
}

#[test]
fn leading_principal_blocks_stay_owp() {
    let f = Field::default();
    let mut rng = seeded_rng(9);
    let mut checked = 0;
    while checked < 100 {
        let kind = SHIFT_KINDS[checked % 3];
        let inst = instance(&mut rng, &f, 6, 24, kind);
        let m = inst.f.rows();
        let p = iterative_appbasis(&inst.d, &inst.f, &inst.s).unwrap();
        let first: Vec<usize> = (0..m).filter(|_| rng.random_bool(0.5)).collect();
        if first.is_empty() {
            continue;
        }
        let block = submatrix_permute_owp(&p.matrix, &first).unwrap();
        let s: Vec<i64> = first.iter().map(|&i| inst.s[i]).collect();
        assert!(check_form(&block, &s, Form::Owp).unwrap());
        checked += 1;
    }
}

#[test]
fn form_hierarchy_and_degree_budget() {
    let f = Field::default();
    let mut rng = seeded_rng(10);
    for k in 0..90 {
        let inst = instance(&mut rng, &f, 6, 24, SHIFT_KINDS[k % 3]);
        let p = popov_appbasis(&inst.d, &inst.f, &inst.s).unwrap();
        let owp = iterative_appbasis(&inst.d, &inst.f, &inst.s).unwrap();
        for (mat, top) in [(&p.matrix, Form::Popov), (&owp.matrix, Form::Owp)] {
            assert!(check_form(mat, &inst.s, top).unwrap());
            assert!(check_form(mat, &inst.s, Form::Owp).unwrap());
            assert!(check_form(mat, &inst.s, Form::Reduced).unwrap());
        }
        let sigma: usize = inst.d.iter().sum();
        let dmax = *inst.d.iter().max().unwrap();
        let pr = pivot_profile(&p.matrix, &inst.s).unwrap();
        assert!(pr.degree.iter().sum::<usize>() <= sigma);
        assert!(pr.degree.iter().all(|&x| x <= dmax));
        let c = rng.random_range(-50..50);
        let shifted: Vec<i64> = inst.s.iter().map(|x| x + c).collect();
        assert_eq!(pivot_profile(&p.matrix, &shifted).unwrap(), pr);
        assert_eq!(pivot_profile(&owp.matrix, &inst.s).unwrap().degree, pr.degree);
        // any polynomial combination of the rows is a member
        let lambda: Vec<Poly> = (0..p.dim()).map(|_| random_poly(&mut rng, &f, 6)).collect();
        let v: Vec<Poly> = (0..p.dim())
            .map(|j| {
                let mut acc = Poly::zero();
                for (i, l) in lambda.iter().enumerate() {
                    acc.add_assign(&f, &l.mul(&f, p.matrix.get(i, j)));
                }
                acc
            })
            .collect();
        assert!(membership_reduce(&v, &p.matrix, &inst.s).unwrap().iter().all(Poly::is_zero));
    }
}
