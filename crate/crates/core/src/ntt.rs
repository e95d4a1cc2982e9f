//! Radix-2 number theoretic transform over a field with enough 2-adic roots.

use crate::field::{Field, FieldElem};

/// Precomputed twiddle factors for one transform length.
pub struct NttPlan {
    len: usize,
    // twiddles[k] for the stage of half-size 2^s start at offset 2^s - 1
    fwd: Vec<FieldElem>,
    inv: Vec<FieldElem>,
    // floor(w * 2^32 / p) for each twiddle w, only when p < 2^32
    fwd_shoup: Vec<u64>,
    inv_shoup: Vec<u64>,
    len_inv: FieldElem,
}

impl NttPlan {
    /// Plan for length `len` (a power of two), or `None` when the field lacks
    /// a primitive root of that order.
    pub fn new(f: &Field, len: usize) -> Option<NttPlan> {
        assert!(len.is_power_of_two());
        let k = len.trailing_zeros();
        let w = f.root_of_unity(k)?;
        let w_inv = f.inv(w).ok()?;
        let mut fwd = Vec::with_capacity(len);
        let mut inv = Vec::with_capacity(len);
        let mut half = 1;
        while half < len {
            // root of order 2 * half
            let step = f.pow(w, (len / (2 * half)) as u64);
            let step_inv = f.pow(w_inv, (len / (2 * half)) as u64);
            let (mut a, mut b) = (1, 1);
            for _ in 0..half {
                fwd.push(a);
                inv.push(b);
                a = f.mul(a, step);
                b = f.mul(b, step_inv);
            }
            half *= 2;
        }
        let len_inv = f.inv(len as u64 % f.modulus()).ok()?;
        let p = f.modulus();
        let shoup = |w: &[FieldElem]| -> Vec<u64> {
            if p < 1 << 32 {
                w.iter().map(|&x| (x << 32) / p).collect()
            } else {
                Vec::new()
            }
        };
        Some(NttPlan {
            len,
            fwd_shoup: shoup(&fwd),
            inv_shoup: shoup(&inv),
            fwd,
            inv,
            len_inv,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn forward(&self, f: &Field, a: &mut [FieldElem]) {
        if self.fwd_shoup.is_empty() {
            self.transform(f, a, &self.fwd);
        } else {
            self.transform_shoup(f.modulus(), a, &self.fwd, &self.fwd_shoup);
        }
    }

    pub fn inverse(&self, f: &Field, a: &mut [FieldElem]) {
        if self.inv_shoup.is_empty() {
            self.transform(f, a, &self.inv);
        } else {
            self.transform_shoup(f.modulus(), a, &self.inv, &self.inv_shoup);
        }
        for x in a.iter_mut() {
            *x = f.mul(*x, self.len_inv);
        }
    }

    fn transform(&self, f: &Field, a: &mut [FieldElem], tw: &[FieldElem]) {
        let n = self.len;
        debug_assert_eq!(a.len(), n);
        bit_reverse(a);
        let mut half = 1;
        while half < n {
            let t = &tw[half - 1..2 * half - 1];
            for chunk in a.chunks_mut(2 * half) {
                let (lo, hi) = chunk.split_at_mut(half);
                for k in 0..half {
                    let u = lo[k];
                    let v = f.mul(hi[k], t[k]);
                    lo[k] = f.add(u, v);
                    hi[k] = f.sub(u, v);
                }
            }
            half *= 2;
        }
    }
}

impl NttPlan {
    /// Same as `transform` for `p < 2^32`, with precomputed quotients so that
    /// each twiddle product needs only 64-bit arithmetic.
    fn transform_shoup(&self, p: u64, a: &mut [FieldElem], tw: &[FieldElem], tw_q: &[u64]) {
        let n = self.len;
        debug_assert_eq!(a.len(), n);
        bit_reverse(a);
        let mut half = 1;
        while half < n {
            let t = &tw[half - 1..2 * half - 1];
            let tq = &tw_q[half - 1..2 * half - 1];
            for chunk in a.chunks_mut(2 * half) {
                let (lo, hi) = chunk.split_at_mut(half);
                for k in 0..half {
                    let x = hi[k];
                    let q = (x * tq[k]) >> 32;
                    let v = (x * t[k]).wrapping_sub(q * p);
                    let v = v.min(v.wrapping_sub(p));
                    let u = lo[k];
                    let sum = u + v;
                    lo[k] = sum.min(sum.wrapping_sub(p));
                    let diff = u.wrapping_sub(v);
                    hi[k] = diff.min(diff.wrapping_add(p));
                }
            }
            half *= 2;
        }
    }
}

fn bit_reverse(a: &mut [FieldElem]) {
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
}
