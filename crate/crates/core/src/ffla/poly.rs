//! Dense univariate polynomials over a prime field, with enough factoring
//! machinery (square-free, distinct-degree and Cantor–Zassenhaus
//! equal-degree splitting) to split minimal polynomials of matrices.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FieldSpec, Matrix};

/// Coefficients are stored lowest degree first and kept trimmed, so the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u64>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: FieldSpec, coeffs: Vec<u64>) -> Self {
        let p = field.p();
        let mut poly = Poly { field, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        poly.trim();
        poly
    }

    pub fn from_signed(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: FieldSpec, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    /// `x`
    pub fn x(field: FieldSpec) -> Self {
        Self::new(field, vec![0, 1])
    }

    /// `x - a`
    pub fn linear(field: FieldSpec, a: u64) -> Self {
        Self::new(field, vec![field.neg(a % field.p()), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|k| f.add(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|k| f.sub(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = self.field;
        let mut rem = self.coeffs.clone();
        let dd = divisor.deg();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        self.mul(other).div_exact(&self.gcd(other)).monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        Self::new(f, self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| f.mul(c, k as u64 % f.p())).collect())
    }

    pub fn mulmod(&self, other: &Poly, modulus: &Poly) -> Poly {
        self.mul(other).rem(modulus)
    }

    pub fn powmod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut acc = Self::one(self.field).rem(modulus);
        let mut base = self.rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mulmod(&base, modulus);
            }
            base = base.mulmod(&base, modulus);
            exp >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(m.field(), n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(m.field(), n).scale(c));
        }
        acc
    }

    /// `v · f(M)` without forming `f(M)`.
    pub fn eval_at_vector(&self, m: &Matrix, v: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut acc = vec![0u64; v.len()];
        for &c in self.coeffs.iter().rev() {
            acc = m.vec_mul(&acc);
            for (a, &x) in acc.iter_mut().zip(v) {
                *a = f.add(*a, f.mul(c, x));
            }
        }
        acc
    }

    /// Inverse of the Frobenius on coefficients: for `f(x) = g(x^p)` over
    /// `F_p` returns `g`, so that `f = g^p`.
    fn pth_root(&self) -> Poly {
        let p = self.field.p() as usize;
        Self::new(self.field, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Square-free decomposition of a monic polynomial: pairs `(g, m)` with
    /// `g` square-free and `f = ∏ g^m`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y);
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_exact(&w);
        }
        if !c.is_one() {
            let p = self.field.p() as usize;
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// `(g, d)` where `g` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree_factorization(&self) -> Vec<(Poly, usize)> {
        let field = self.field;
        let mut out = Vec::new();
        let mut rest = self.monic();
        let x = Self::x(field);
        let mut h = x.rem(&rest);
        let mut d = 1;
        while rest.deg() >= 2 * d {
            h = h.powmod(field.p(), &rest);
            let g = rest.gcd(&h.sub(&x));
            if !g.is_one() {
                rest = rest.div_exact(&g);
                h = h.rem(&rest);
                out.push((g, d));
            }
            d += 1;
        }
        if rest.deg() > 0 {
            let dr = rest.deg();
            out.push((rest, dr));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic square-free product of
    /// irreducibles all of degree `d`.
    fn equal_degree_split(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
        let n = self.deg();
        if n == d {
            out.push(self.clone());
            return;
        }
        let field = self.field;
        let p = field.p();
        loop {
            let a = Self::new(field, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if p == 2 {
                // Absolute trace F_{2^d} -> F_2.
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((p^d - 1)/2) = (∏_{i<d} a^{p^i})^((p - 1)/2)
                let mut t = a.rem(self);
                let mut norm = t.clone();
                for _ in 1..d {
                    t = t.powmod(p, self);
                    norm = norm.mulmod(&t, self);
                }
                norm.powmod((p - 1) / 2, self).sub(&Self::one(field))
            };
            let g = self.gcd(&b);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let other = self.div_exact(&g);
                g.equal_degree_split(d, rng, out);
                other.equal_degree_split(d, rng, out);
                return;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients. The splitting randomness is
    /// internal and seeded, and the sorted output does not depend on it.
    pub fn factor(&self) -> Vec<(Poly, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0f_ac70);
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition() {
            for (block, d) in g.distinct_degree_factorization() {
                let mut pieces = Vec::new();
                block.equal_degree_split(d, &mut rng, &mut pieces);
                out.extend(pieces.into_iter().map(|q| (q, m)));
            }
        }
        out.sort_by(|a, b| {
            (a.0.coeffs.len(), a.0.coeffs.iter().rev().collect::<Vec<_>>())
                .cmp(&(b.0.coeffs.len(), b.0.coeffs.iter().rev().collect::<Vec<_>>()))
        });
        out
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(n) => {
                let f = self.monic();
                if !f.gcd(&f.derivative()).is_one() {
                    return false;
                }
                let ddf = f.distinct_degree_factorization();
                ddf.len() == 1 && ddf[0].1 == n
            }
        }
    }

    /// Roots in the prime field, each listed once, ascending.
    pub fn roots(&self) -> Vec<u64> {
        let mut r: Vec<u64> = self
            .factor()
            .into_iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, _)| self.field.neg(g.coeff(0)))
            .collect();
        r.sort_unstable();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::module(p).unwrap()
    }

    fn product(parts: &[(Poly, usize)], field: FieldSpec) -> Poly {
        parts.iter().fold(Poly::one(field), |acc, (g, m)| (0..*m).fold(acc, |a, _| a.mul(g)))
    }

    #[test]
    fn divrem_reconstructs() {
        let fld = f(7);
        let a = Poly::from_signed(fld, &[3, 0, 5, 1, 6]);
        let b = Poly::from_signed(fld, &[1, 2, 3]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn factors_cyclotomic_over_f2() {
        // x^7 - 1 = (x + 1)(x^3 + x + 1)(x^3 + x^2 + 1) over F_2
        let fld = f(2);
        let mut c = vec![0u64; 8];
        c[0] = 1;
        c[7] = 1;
        let poly = Poly::new(fld, c);
        let fac = poly.factor();
        assert_eq!(fac.len(), 3);
        assert_eq!(fac[0].0, Poly::new(fld, vec![1, 1]));
        assert_eq!(fac[1].0, Poly::new(fld, vec![1, 1, 0, 1]));
        assert_eq!(fac[2].0, Poly::new(fld, vec![1, 0, 1, 1]));
        assert_eq!(product(&fac, fld), poly);
    }

    #[test]
    fn factors_with_repeated_roots() {
        // (x - 1)^3 (x^2 + 1) over F_3, and x^4 + 1 = (x+1)^4 over F_2.
        let fld = f(3);
        let lin = Poly::linear(fld, 1);
        let quad = Poly::new(fld, vec![1, 0, 1]);
        let poly = lin.mul(&lin).mul(&lin).mul(&quad);
        let fac = poly.factor();
        assert_eq!(fac, vec![(lin, 3), (quad, 1)]);

        let f2 = f(2);
        let poly = Poly::new(f2, vec![1, 0, 0, 0, 1]);
        assert_eq!(poly.factor(), vec![(Poly::new(f2, vec![1, 1]), 4)]);
    }

    #[test]
    fn roots_over_split_field() {
        // x^6 - 1 over F_7 splits into six linear factors.
        let fld = f(7);
        let poly = Poly::from_signed(fld, &[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(poly.roots(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn irreducibility() {
        let f2 = f(2);
        assert!(Poly::new(f2, vec![1, 1, 1]).is_irreducible());
        assert!(!Poly::new(f2, vec![1, 0, 1]).is_irreducible());
        assert!(Poly::new(f2, vec![1, 1, 1, 1, 1]).is_irreducible());
        let f3 = f(3);
        assert!(Poly::new(f3, vec![2, 1, 1]).is_irreducible());
        assert!(!Poly::new(f3, vec![2, 0, 1]).is_irreducible());
    }

    proptest::proptest! {
        #[test]
        fn factorization_multiplies_back(coeffs in proptest::collection::vec(0u64..5, 2..12)) {
            let fld = f(5);
            let poly = Poly::new(fld, coeffs).monic();
            if poly.degree().unwrap_or(0) >= 1 {
                let fac = poly.factor();
                for (g, _) in &fac {
                    proptest::prop_assert!(g.is_irreducible());
                }
                proptest::prop_assert_eq!(product(&fac, fld), poly);
            }
        }
    }
}
