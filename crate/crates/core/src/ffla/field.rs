use serde::{Deserialize, Serialize};

use super::LinalgError;

/// What a prime field is used for. Module coefficients live in characteristic
/// `p`; the auxiliary field used to split class matrices lives in
/// characteristic `q`. The marker never changes arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldPurpose {
    Module,
    CharacterTable,
}

/// A prime field `F_p`. Elements are `u64` values reduced into `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u64,
    purpose: FieldPurpose,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn new(characteristic: u64, purpose: FieldPurpose) -> Result<Self, LinalgError> {
        // Products of two reduced elements must fit in a u64.
        if !is_prime(characteristic) || characteristic >= 1 << 31 {
            return Err(LinalgError::NotPrime(characteristic));
        }
        Ok(FieldSpec { characteristic, purpose })
    }

    pub fn module(p: u64) -> Result<Self, LinalgError> {
        Self::new(p, FieldPurpose::Module)
    }

    pub fn character_table(q: u64) -> Result<Self, LinalgError> {
        Self::new(q, FieldPurpose::CharacterTable)
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.characteristic
    }

    pub fn purpose(&self) -> FieldPurpose {
        self.purpose
    }

    /// Two field specs are arithmetically interchangeable when their
    /// characteristics agree.
    pub fn same_as(&self, other: &FieldSpec) -> bool {
        self.characteristic == other.characteristic
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.characteristic as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.characteristic {
            s - self.characteristic
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.characteristic - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.characteristic - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.characteristic
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.characteristic;
        base %= self.characteristic;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64, LinalgError> {
        let a = a % self.characteristic;
        if a == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        let (mut old_r, mut r) = (a as i64, self.characteristic as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        Ok(self.reduce(old_s))
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let p = self.characteristic;
        if p == 2 {
            return 1;
        }
        let factors = prime_factors(p - 1);
        (2..p)
            .find(|&g| factors.iter().all(|&f| self.pow(g, (p - 1) / f) != 1))
            .expect("every prime field has a primitive root")
    }
}

/// `a · a⁻¹ ≡ 1 (mod p)`; fails on zero.
pub fn field_inverse(a: u64, field: &FieldSpec) -> Result<u64, LinalgError> {
    field.inv(a)
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
