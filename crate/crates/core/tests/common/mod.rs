#![allow(dead_code)]

use appbas::random::{random_instance, random_orders};
use appbas::{Field, PolyMat};
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftKind {
    Uniform,
    Random,
    Hermite,
}

pub const SHIFT_KINDS: [ShiftKind; 3] = [ShiftKind::Uniform, ShiftKind::Random, ShiftKind::Hermite];

pub fn shift<R: Rng>(rng: &mut R, kind: ShiftKind, m: usize, sigma: usize) -> Vec<i64> {
    match kind {
        ShiftKind::Uniform => vec![0; m],
        ShiftKind::Random => (0..m).map(|_| rng.random_range(-10..=10)).collect(),
        ShiftKind::Hermite => (1..=m).map(|i| (i * sigma) as i64).collect(),
    }
}

pub struct Instance {
    pub d: Vec<usize>,
    pub f: PolyMat,
    pub s: Vec<i64>,
}

/// `m, n <= max_dim`, `sigma <= max_sigma`, orders at most `max_sigma`.
pub fn instance<R: Rng>(rng: &mut R, field: &Field, max_dim: usize, max_sigma: usize, kind: ShiftKind) -> Instance {
    let m = rng.random_range(1..=max_dim);
    let n = rng.random_range(1..=max_dim.min(max_sigma));
    let budget = rng.random_range(n..=max_sigma);
    let d = random_orders(rng, n, max_sigma, budget);
    let mut f = random_instance(rng, field, m, &d);
    // sparsify some instances so that degenerate rank profiles appear
    if rng.random_bool(0.3) {
        for i in 0..m {
            for j in 0..n {
                if rng.random_bool(0.5) {
                    f.set(i, j, appbas::Poly::zero());
                }
            }
        }
    }
    let sigma = d.iter().sum();
    let s = shift(rng, kind, m, sigma);
    Instance { d, f, s }
}

pub fn default_field() -> Field {
    Field::default()
}
