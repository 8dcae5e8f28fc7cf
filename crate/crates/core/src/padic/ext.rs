//! Z_p[pi] with pi = zeta_p - 1, in the power basis 1, pi, ..., pi^(p-2).
//!
//! Coefficients are kept modulo p^m, so the ring is O/pi^(m(p-1)). Elements
//! carry a pi-adic shift and a relative precision, like [`PadicNumber`].

use alloc::vec;
use alloc::vec::Vec;

use super::PadicNumber;
use crate::arith::{add_mod, binomial, checked_pow, inv_mod, mul_mod, neg_mod, sub_mod};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExtRing {
    p: u64,
    digits: u32,
    modulus: u128,
    /// pi^(p-1) = sum_j top[j] pi^j
    top: Vec<u128>,
    /// p / pi as a polynomial in pi
    p_over_pi: Vec<u128>,
}

/// `pi^shift * unit`, the unit known modulo pi^rel. Zero has an empty unit
/// and `shift` equal to its absolute precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    shift: i64,
    coeffs: Vec<u128>,
    rel: u64,
}

impl ExtElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// pi-adic valuation; the precision bound for zero.
    pub fn valuation(&self) -> i64 {
        self.shift
    }

    pub fn relative_precision(&self) -> u64 {
        self.rel
    }

    pub fn absolute_precision(&self) -> i64 {
        self.shift + self.rel as i64
    }

    /// Unit-part coefficients in the basis pi^j.
    pub fn unit_coeffs(&self) -> &[u128] {
        &self.coeffs
    }
}

impl ExtRing {
    /// The ring for prime `p` with coefficients modulo `p^digits`.
    pub fn new(p: u64, digits: u32) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = checked_pow(p, digits + 1).map(|_| (p as u128).pow(digits))?;
        let d = (p - 1) as usize;
        // Phi_p(1+X) = sum_{j<p} C(p, j+1) X^j, monic of degree p-1
        let top = (0..d)
            .map(|j| neg_mod(binomial(p, j as u64 + 1) % modulus, modulus))
            .collect();
        let p_over_pi = (0..d)
            .map(|i| neg_mod(binomial(p, i as u64 + 2) % modulus, modulus))
            .collect();
        Ok(ExtRing { p, digits, modulus, top, p_over_pi })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    fn degree(&self) -> usize {
        (self.p - 1) as usize
    }

    /// Full pi-adic precision of the coefficient ring.
    pub fn max_precision(&self) -> u64 {
        self.digits as u64 * (self.p - 1)
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement { shift: self.max_precision() as i64, coeffs: Vec::new(), rel: 0 }
    }

    pub fn one(&self) -> ExtElement {
        let mut c = vec![0; self.degree()];
        c[0] = 1 % self.modulus;
        ExtElement { shift: 0, coeffs: c, rel: self.max_precision() }
    }

    pub fn pi(&self) -> ExtElement {
        ExtElement { shift: 1, ..self.one() }
    }

    pub fn zeta_p(&self) -> ExtElement {
        self.add(&self.one(), &self.pi())
    }

    pub fn from_int(&self, n: i128) -> ExtElement {
        let mut c = vec![0; self.degree()];
        c[0] = crate::arith::reduce_i128(n, self.modulus);
        self.normalize(0, c, self.max_precision())
    }

    /// Embed a p-adic number of `Q_p`.
    pub fn from_padic(&self, x: &PadicNumber) -> Result<ExtElement> {
        if x.p() != self.p {
            return Err(Error::Mismatch("prime"));
        }
        let p1 = (self.p - 1) as i64;
        if x.is_zero() {
            let abs = x.valuation().saturating_mul(p1);
            return Ok(self.zero_at(abs));
        }
        let rel = (x.relative_precision() as u64 * (self.p - 1)).min(self.max_precision());
        let mut c = vec![0; self.degree()];
        c[0] = x.unit() % self.modulus;
        let u = self.normalize(0, c, rel);
        let pv = self.pow(&self.from_int(self.p as i128), x.valuation())?;
        Ok(self.mul(&u, &pv))
    }

    fn zero_at(&self, abs: i64) -> ExtElement {
        ExtElement { shift: abs, coeffs: Vec::new(), rel: 0 }
    }

    fn mul_poly(&self, a: &[u128], b: &[u128]) -> Vec<u128> {
        let d = self.degree();
        let m = self.modulus;
        let mut prod = vec![0u128; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, m), m);
                }
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..d {
                prod[k - d + j] = add_mod(prod[k - d + j], mul_mod(c, self.top[j], m), m);
            }
        }
        prod.truncate(d);
        prod
    }

    fn times_pi(&self, a: &mut Vec<u128>) {
        let d = self.degree();
        let m = self.modulus;
        let c = a[d - 1];
        for k in (1..d).rev() {
            a[k] = a[k - 1];
        }
        a[0] = 0;
        if c != 0 {
            for j in 0..d {
                a[j] = add_mod(a[j], mul_mod(c, self.top[j], m), m);
            }
        }
    }

    fn pi_valuation(&self, a: &[u128]) -> Option<u64> {
        let p1 = self.p - 1;
        let pp = self.p as u128;
        a.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mut v = 0u64;
                let mut c = c;
                while c % pp == 0 {
                    c /= pp;
                    v += 1;
                }
                i as u64 + p1 * v
            })
            .min()
    }

    /// `pi^shift * a` with `a` known modulo pi^rel, rewritten with a unit part.
    fn normalize(&self, shift: i64, mut a: Vec<u128>, rel: u64) -> ExtElement {
        let rel = rel.min(self.max_precision());
        let w = match self.pi_valuation(&a) {
            Some(w) if w < rel => w,
            _ => return self.zero_at(shift + rel as i64),
        };
        let d = self.degree();
        let m = self.modulus;
        let pp = self.p as u128;
        for _ in 0..w {
            let b = a[0] / pp;
            for k in 0..d - 1 {
                a[k] = a[k + 1];
            }
            a[d - 1] = 0;
            if b != 0 {
                for j in 0..d {
                    a[j] = add_mod(a[j], mul_mod(b, self.p_over_pi[j], m), m);
                }
            }
        }
        ExtElement { shift: shift + w as i64, coeffs: a, rel: rel - w }
    }

    pub fn neg(&self, a: &ExtElement) -> ExtElement {
        let coeffs = a.coeffs.iter().map(|&c| neg_mod(c, self.modulus)).collect();
        ExtElement { coeffs, ..a.clone() }
    }

    pub fn add(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let abs = a.absolute_precision().min(b.absolute_precision());
        if a.is_zero() {
            return self.truncate_abs(b, abs);
        }
        if b.is_zero() {
            return self.truncate_abs(a, abs);
        }
        let (lo, hi) = if a.shift <= b.shift { (a, b) } else { (b, a) };
        if abs <= lo.shift {
            return self.zero_at(abs);
        }
        let rel = (abs - lo.shift) as u64;
        if hi.shift >= abs {
            return self.truncate_abs(lo, abs);
        }
        let mut h = hi.coeffs.clone();
        for _ in 0..(hi.shift - lo.shift) {
            self.times_pi(&mut h);
        }
        let m = self.modulus;
        let s = lo.coeffs.iter().zip(h.iter()).map(|(&x, &y)| add_mod(x, y, m)).collect();
        self.normalize(lo.shift, s, rel)
    }

    fn truncate_abs(&self, a: &ExtElement, abs: i64) -> ExtElement {
        if a.is_zero() || abs <= a.shift {
            return self.zero_at(abs.min(a.absolute_precision()));
        }
        ExtElement { rel: a.rel.min((abs - a.shift) as u64), ..a.clone() }
    }

    pub fn sub(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        if a.is_zero() || b.is_zero() {
            return self.zero_at(a.shift + b.shift);
        }
        let c = self.mul_poly(&a.coeffs, &b.coeffs);
        let rel = a.rel.min(b.rel);
        // the product of units is a unit, no renormalisation needed
        ExtElement { shift: a.shift + b.shift, coeffs: c, rel }
    }

    pub fn inv(&self, a: &ExtElement) -> Result<ExtElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.modulus;
        let a0 = inv_mod(a.coeffs[0], m).ok_or(Error::NotUnit)?;
        let mut x = vec![0u128; self.degree()];
        x[0] = a0;
        let mut prec = 1u64;
        let two = {
            let mut t = vec![0u128; self.degree()];
            t[0] = 2 % m;
            t
        };
        while prec < self.max_precision() {
            let ax = self.mul_poly(&a.coeffs, &x);
            let e: Vec<u128> = two.iter().zip(ax.iter()).map(|(&s, &t)| sub_mod(s, t, m)).collect();
            x = self.mul_poly(&x, &e);
            prec *= 2;
        }
        Ok(ExtElement { shift: -a.shift, coeffs: x, rel: a.rel })
    }

    pub fn div(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &ExtElement, e: i64) -> Result<ExtElement> {
        if e < 0 {
            return self.pow(&self.inv(a)?, -e);
        }
        let mut r = self.one();
        let mut b = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        Ok(r)
    }

    /// The Dwork uniformizer: the root of X^(p-1) = -p congruent to pi mod pi^2.
    pub fn dwork_pi(&self) -> Result<ExtElement> {
        let pi = self.pi();
        let w = self.div(&self.from_int(-(self.p as i128)), &self.pow(&pi, (self.p - 1) as i64)?)?;
        let e = (self.p - 1) as i64;
        let de = self.from_int(e as i128);
        let mut y = self.one();
        let mut prec = 1u64;
        while prec < 2 * self.max_precision() {
            let f = self.sub(&self.pow(&y, e)?, &w);
            let df = self.mul(&de, &self.pow(&y, e - 1)?);
            y = self.sub(&y, &self.div(&f, &df)?);
            prec *= 2;
        }
        Ok(self.mul(&pi, &y))
    }

    /// True when `a - b` has pi-valuation at least `k`.
    pub fn agrees_to(&self, a: &ExtElement, b: &ExtElement, k: i64) -> bool {
        self.sub(a, b).valuation() >= k
    }

    /// Agreement in `digits` p-adic digits beyond the valuation of `a`.
    pub fn agrees_digits(&self, a: &ExtElement, b: &ExtElement, digits: u32) -> bool {
        if a.is_zero() || b.is_zero() || a.shift != b.shift {
            return false;
        }
        self.agrees_to(a, b, a.shift + (digits as i64) * (self.p as i64 - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_order_p() {
        for p in [2u64, 3, 5, 7, 13] {
            let r = ExtRing::new(p, 8).unwrap();
            let z = r.zeta_p();
            let zp = r.pow(&z, p as i64).unwrap();
            assert!(r.agrees_to(&zp, &r.one(), r.max_precision() as i64), "p={p}");
            let z1 = r.pow(&z, 1).unwrap();
            assert!(!r.agrees_to(&z1, &r.one(), 2));
        }
    }

    #[test]
    fn p_has_valuation_p_minus_one() {
        for p in [3u64, 5, 11] {
            let r = ExtRing::new(p, 6).unwrap();
            assert_eq!(r.from_int(p as i128).valuation(), (p - 1) as i64);
            assert_eq!(r.from_int((p * p) as i128 * 7).valuation(), 2 * (p - 1) as i64);
        }
    }

    #[test]
    fn dwork_root() {
        for p in [3u64, 5, 7, 13] {
            let r = ExtRing::new(p, 8).unwrap();
            let d = r.dwork_pi().unwrap();
            let lhs = r.pow(&d, (p - 1) as i64).unwrap();
            let rhs = r.from_int(-(p as i128));
            assert!(r.agrees_digits(&lhs, &rhs, 7), "p={p}");
            // congruent to pi modulo pi^2
            assert!(r.agrees_to(&d, &r.pi(), 2));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let r = ExtRing::new(7, 6).unwrap();
        let x = r.add(&r.zeta_p(), &r.from_int(3));
        let y = r.inv(&x).unwrap();
        assert!(r.agrees_to(&r.mul(&x, &y), &r.one(), r.max_precision() as i64));
        let z = r.mul(&r.pi(), &r.pi());
        let zi = r.inv(&z).unwrap();
        assert_eq!(zi.valuation(), -2);
    }
}
