//! Fixed instances shared by the benchmarks.

use appbas::random::{random_instance, random_polymat, seeded_rng};
use appbas::{Field, PolyMat};

/// An `m x n` instance with every order equal to `order`, and the shift
/// `(order, 2 order, ...)` when `hermite` is set.
pub fn instance(m: usize, n: usize, order: usize, hermite: bool) -> (Vec<usize>, PolyMat, Vec<i64>) {
    let field = Field::default();
    let mut rng = seeded_rng((m * 1000 + n * 100 + order) as u64);
    let d = vec![order; n];
    let f = random_instance(&mut rng, &field, m, &d);
    let sigma = (order * n) as i64;
    let s = if hermite { (1..=m as i64).map(|i| i * sigma).collect() } else { vec![0; m] };
    (d, f, s)
}

/// Two square matrices of size `n` and degree below `len`.
pub fn square_pair(n: usize, len: usize) -> (PolyMat, PolyMat) {
    let field = Field::default();
    let mut rng = seeded_rng((n * 1000 + len) as u64);
    let a = random_polymat(&mut rng, &field, n, n, len);
    let b = random_polymat(&mut rng, &field, n, n, len);
    (a, b)
}
