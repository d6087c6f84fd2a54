use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

/// `Σ_u c_u ζ_E^u` with integer coefficients. The coefficient vector is not
/// reduced; comparisons go through [`CycInt::canonical`].
#[derive(Clone, Debug, Serialize)]
pub struct CycInt {
    exponent: usize,
    coeffs: Vec<i64>,
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<usize, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    if let Some(c) = cyclotomic_cache().lock().unwrap().get(&n) {
        return c.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_divide(&num, &cyclotomic_polynomial(d));
    }
    cyclotomic_cache().lock().unwrap().insert(n, num.clone());
    num
}

/// Division by a monic integer polynomial with zero remainder.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CycInt {
    pub fn new(exponent: usize, mut coeffs: Vec<i64>) -> Self {
        assert!(exponent >= 1);
        let mut reduced = vec![0i64; exponent];
        for (i, c) in coeffs.drain(..).enumerate() {
            reduced[i % exponent] += c;
        }
        CycInt { exponent, coeffs: reduced }
    }

    pub fn zero(exponent: usize) -> Self {
        CycInt { exponent, coeffs: vec![0; exponent] }
    }

    pub fn from_int(exponent: usize, n: i64) -> Self {
        let mut z = Self::zero(exponent);
        z.coeffs[0] = n;
        z
    }

    /// `ζ_E^k`
    pub fn root(exponent: usize, k: usize) -> Self {
        let mut z = Self::zero(exponent);
        z.coeffs[k % exponent] = 1;
        z
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn same_exponent(&self, other: &CycInt) -> (CycInt, CycInt) {
        if self.exponent == other.exponent {
            return (self.clone(), other.clone());
        }
        let l = self.exponent / gcd(self.exponent, other.exponent) * other.exponent;
        (self.lift_to(l), other.lift_to(l))
    }

    /// Same number written over `ζ_L` with `E | L`.
    pub fn lift_to(&self, l: usize) -> CycInt {
        assert!(l.is_multiple_of(self.exponent), "exponent must divide the target");
        let step = l / self.exponent;
        let mut out = Self::zero(l);
        for (u, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[u * step] = c;
        }
        out
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        let (a, b) = self.same_exponent(other);
        CycInt { exponent: a.exponent, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycInt {
        CycInt { exponent: self.exponent, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: i64) -> CycInt {
        CycInt { exponent: self.exponent, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        let (a, b) = self.same_exponent(other);
        let e = a.exponent;
        let mut out = vec![0i64; e];
        let bn: Vec<(usize, i64)> = b.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(j, y) in &bn {
                out[(i + j) % e] += x * y;
            }
        }
        CycInt { exponent: e, coeffs: out }
    }

    /// Adds `k·self·other` into `acc` without allocating; all share one
    /// exponent.
    pub fn mul_acc(acc: &mut [i64], a: &CycInt, b: &CycInt, k: i64) {
        let e = acc.len();
        debug_assert!(a.exponent == e && b.exponent == e);
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    acc[(i + j) % e] += k * x * y;
                }
            }
        }
    }

    /// Complex conjugate: `ζ^u ↦ ζ^{-u}`.
    pub fn conj(&self) -> CycInt {
        self.galois(self.exponent - 1)
    }

    /// `ζ^u ↦ ζ^{mu}`; a field automorphism when `gcd(m, E) = 1`.
    pub fn galois(&self, m: usize) -> CycInt {
        let e = self.exponent;
        let mut out = vec![0i64; e];
        for (u, &c) in self.coeffs.iter().enumerate() {
            out[(u * m) % e] += c;
        }
        CycInt { exponent: e, coeffs: out }
    }

    /// Remainder modulo `Φ_E`: coefficients of `1, ζ, …, ζ^{φ(E)-1}`.
    pub fn canonical(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.exponent);
        let deg = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for i in (deg..r.len()).rev() {
            let c = r[i];
            if c != 0 {
                for (j, &pc) in phi.iter().enumerate() {
                    r[i - deg + j] -= c * pc;
                }
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|&c| c == 0)
    }

    pub fn equals(&self, other: &CycInt) -> bool {
        self.sub(other).is_zero()
    }

    /// `Some(n)` when the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.canonical();
        c[1..].iter().all(|&x| x == 0).then_some(c[0])
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (u, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (u, c) {
                (0, _) => write!(f, "{c}")?,
                (_, 1) => write!(f, "z{}^{u}", self.exponent)?,
                _ => write!(f, "{c}*z{}^{u}", self.exponent)?,
            }
        }
        Ok(())
    }
}
