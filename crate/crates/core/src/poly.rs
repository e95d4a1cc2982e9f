//! Dense univariate polynomials. Arithmetic takes the field explicitly.

use crate::field::{Field, FieldElem};
use crate::ntt::NttPlan;

/// Coefficients low degree first, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

const KARATSUBA_CUTOFF: usize = 32;
const NTT_CUTOFF: usize = 64;

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Takes ownership of already reduced coefficients and trims them.
    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Reduces arbitrary integers into the field.
    pub fn from_i64(f: &Field, values: &[i64]) -> Poly {
        Poly::from_coeffs(values.iter().map(|&v| f.from_i64(v)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored coefficients, that is degree + 1.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn lc(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Keeps coefficients `0..k`.
    pub fn truncate(&self, k: usize) -> Poly {
        let n = self.coeffs.len().min(k);
        Poly::from_coeffs(self.coeffs[..n].to_vec())
    }

    /// Coefficients `lo..hi` as a polynomial, i.e. `(X^-lo * p) mod X^(hi-lo)`.
    pub fn window(&self, lo: usize, hi: usize) -> Poly {
        let hi = hi.min(self.coeffs.len());
        if lo >= hi {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs[lo..hi].to_vec())
    }

    /// `X^k * p`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(f, other);
        out
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled_shifted(f, other, f.neg(1), 0);
        out
    }

    pub fn neg(&self, f: &Field) -> Poly {
        self.scale(f, f.neg(1))
    }

    pub fn add_assign(&mut self, f: &Field, other: &Poly) {
        self.add_scaled_shifted(f, other, 1, 0);
    }

    /// `self += c * X^k * other`.
    pub fn add_scaled_shifted(&mut self, f: &Field, other: &Poly, c: FieldElem, k: usize) {
        if c == 0 || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + k;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (dst, &src) in self.coeffs[k..].iter_mut().zip(&other.coeffs) {
            *dst = f.add(*dst, f.mul(c, src));
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, f: &Field, c: FieldElem) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        Poly::from_coeffs(mul_coeffs(f, &self.coeffs, &other.coeffs))
    }

    pub fn eval(&self, f: &Field, x: FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

/// Product of coefficient slices, choosing schoolbook, Karatsuba or NTT by size.
pub fn mul_coeffs(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let small = a.len().min(b.len());
    if small >= NTT_CUTOFF {
        if let Some(out) = mul_ntt(f, a, b) {
            return out;
        }
    }
    if small >= KARATSUBA_CUTOFF {
        mul_karatsuba(f, a, b)
    } else {
        mul_schoolbook(f, a, b)
    }
}

pub fn mul_schoolbook(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    mac_schoolbook(f, &mut acc, a, b);
    acc.into_iter().map(|x| f.reduce_u128(x)).collect()
}

/// `acc += a * b` without reduction. Safe for up to 2^60 terms per slot.
pub(crate) fn mac_schoolbook(f: &Field, acc: &mut [u128], a: &[FieldElem], b: &[FieldElem]) {
    if f.modulus() < (1 << 32) {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(b) {
                *slot += (x * y) as u128;
            }
        }
    } else {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(b) {
                *slot += f.mul(x, y) as u128;
            }
        }
    }
}

pub fn mul_karatsuba(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len().max(b.len());
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.resize(n, 0);
    y.resize(n, 0);
    let mut out = karatsuba_rec(f, &x, &y);
    out.truncate(a.len() + b.len() - 1);
    out
}

// Equal-length operands, result of length 2n - 1.
fn karatsuba_rec(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let n = a.len();
    if n < KARATSUBA_CUTOFF {
        let mut out = mul_schoolbook(f, a, b);
        out.resize(2 * n - 1, 0);
        return out;
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    // a1, b1 have length n - h >= h
    let mut sa = a1.to_vec();
    let mut sb = b1.to_vec();
    for i in 0..h {
        sa[i] = f.add(sa[i], a0[i]);
        sb[i] = f.add(sb[i], b0[i]);
    }
    let mut a0p = a0.to_vec();
    let mut b0p = b0.to_vec();
    a0p.resize(n - h, 0);
    b0p.resize(n - h, 0);
    let z0 = karatsuba_rec(f, &a0p, &b0p);
    let z2 = karatsuba_rec(f, a1, b1);
    let z1 = karatsuba_rec(f, &sa, &sb);
    let mut out = vec![0; 2 * n - 1];
    for (i, &v) in z0.iter().enumerate() {
        if i < out.len() {
            out[i] = f.add(out[i], v);
        }
    }
    for (i, &v) in z2.iter().enumerate() {
        out[i + 2 * h] = f.add(out[i + 2 * h], v);
    }
    for i in 0..z1.len() {
        let mid = f.sub(f.sub(z1[i], z0[i]), z2[i]);
        if i + h < out.len() {
            out[i + h] = f.add(out[i + h], mid);
        }
    }
    out
}

/// NTT product, or `None` when the field has too few roots of unity.
pub fn mul_ntt(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Option<Vec<FieldElem>> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let out_len = a.len() + b.len() - 1;
    let plan = NttPlan::new(f, out_len.next_power_of_two())?;
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.resize(plan.len(), 0);
    y.resize(plan.len(), 0);
    plan.forward(f, &mut x);
    plan.forward(f, &mut y);
    for (u, &v) in x.iter_mut().zip(&y) {
        *u = f.mul(*u, v);
    }
    plan.inverse(f, &mut x);
    x.truncate(out_len);
    Some(x)
}
