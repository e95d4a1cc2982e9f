//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElem};
use crate::poly::Poly;
use crate::polymat::PolyMat;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_elem<R: Rng + ?Sized>(rng: &mut R, f: &Field) -> FieldElem {
    rng.random_range(0..f.modulus())
}

/// A polynomial with `len` uniformly random coefficients.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, f: &Field, len: usize) -> Poly {
    Poly::from_coeffs((0..len).map(|_| random_elem(rng, f)).collect())
}

/// An `m x n` matrix with entries of degree less than `bound`.
pub fn random_polymat<R: Rng + ?Sized>(rng: &mut R, f: &Field, m: usize, n: usize, bound: usize) -> PolyMat {
    PolyMat::from_fn(*f, m, n, |_, _| random_poly(rng, f, bound))
}

/// An `m x n` matrix whose column `j` has degree less than `d[j]`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, f: &Field, m: usize, d: &[usize]) -> PolyMat {
    PolyMat::from_fn(*f, m, d.len(), |_, j| random_poly(rng, f, d[j]))
}

/// `n` orders in `1..=max` whose sum is at most `budget`.
pub fn random_orders<R: Rng + ?Sized>(rng: &mut R, n: usize, max: usize, budget: usize) -> Vec<usize> {
    let mut d = Vec::with_capacity(n);
    let mut left = budget;
    for k in 0..n {
        let reserve = n - k - 1;
        let hi = max.min(left.saturating_sub(reserve)).max(1);
        let v = rng.random_range(1..=hi);
        left = left.saturating_sub(v);
        d.push(v);
    }
    d
}
