//! Arithmetic in a prime field F_p for an odd prime p < 2^62.

use crate::error::{Error, Result};

/// Canonical representative of a field element, always in `[0, p)`.
pub type FieldElem = u64;

/// Default modulus: 998244353 = 119 * 2^23 + 1.
pub const DEFAULT_MODULUS: u64 = 998_244_353;

const MAX_MODULUS: u64 = 1 << 62;

/// A prime field together with the constants used by fast reduction and the
/// number theoretic transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    // floor((2^64 - 1) / p), used for Barrett reduction when p < 2^32
    barrett: u64,
    // 2^64 mod p
    wrap: u64,
    two_adicity: u32,
    // primitive 2^two_adicity-th root of unity
    root: u64,
}

impl Default for Field {
    fn default() -> Self {
        Field::new(DEFAULT_MODULUS).expect("default modulus is prime")
    }
}

impl Field {
    pub fn new(p: u64) -> Result<Field> {
        if !(3..MAX_MODULUS).contains(&p) || p % 2 == 0 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        let mut f = Field {
            p,
            barrett: u64::MAX / p,
            wrap: ((1u128 << 64) % p as u128) as u64,
            two_adicity: (p - 1).trailing_zeros(),
            root: 1,
        };
        let g = f.non_residue();
        f.root = f.pow(g, (p - 1) >> f.two_adicity);
        Ok(f)
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Largest k such that 2^k divides p - 1.
    pub fn two_adicity(&self) -> u32 {
        self.two_adicity
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        // min picks s when s < p, where s - p wraps around
        let s = a + b;
        s.min(s.wrapping_sub(self.p))
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let d = a.wrapping_sub(b);
        d.min(d.wrapping_add(self.p))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p < (1 << 32) {
            self.reduce_u64(a * b)
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    /// Reduces `x` when `p < 2^32`.
    #[inline]
    pub(crate) fn reduce_u64(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        // the quotient estimate is short by at most 2
        let r = x - q * self.p;
        let r = r.min(r.wrapping_sub(self.p));
        r.min(r.wrapping_sub(self.p))
    }

    /// Reduces an arbitrary 128-bit accumulator.
    #[inline]
    pub fn reduce_u128(&self, x: u128) -> FieldElem {
        if self.p >= 1 << 32 {
            return (x % self.p as u128) as u64;
        }
        let lo = self.reduce_u64(x as u64);
        let hi = (x >> 64) as u64;
        if hi == 0 {
            return lo;
        }
        let h = self.reduce_u64(self.reduce_u64(hi) * self.wrap);
        self.add(h, lo)
    }

    /// Maps a signed integer to its residue.
    pub fn from_i64(&self, v: i64) -> FieldElem {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, mut a: FieldElem, mut e: u64) -> FieldElem {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a % self.p == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Primitive `2^k`-th root of unity, if the field has one.
    pub fn root_of_unity(&self, k: u32) -> Option<FieldElem> {
        if k > self.two_adicity {
            return None;
        }
        let mut w = self.root;
        for _ in k..self.two_adicity {
            w = self.mul(w, w);
        }
        Some(w)
    }

    fn non_residue(&self) -> u64 {
        let half = (self.p - 1) / 2;
        (2..self.p)
            .find(|&g| self.pow(g, half) == self.p - 1)
            .expect("odd prime field has a non-residue")
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, a);
            }
            a = mulm(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
