//! Truncated p-adic numbers and the totally ramified ring Z_p[zeta_p].
//!
//! A [`PadicNumber`] is `p^v * u` with `u` a unit known modulo `p^k`, where
//! `k` is the relative precision. Results never claim more precision than
//! their inputs justify.

mod ext;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use ext::{ExtElement, ExtRing};

use crate::arith::{self, checked_pow, inv_mod, mul_mod, pow_mod, reduce_i128};
use crate::error::{Error, Result};

/// Default number of p-adic digits carried by computations.
pub const DEFAULT_PRECISION: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNumber {
    p: u64,
    /// `p^v`; for zero this is the absolute precision bound
    valuation: i64,
    /// unit part modulo `p^rel`, or 0 for zero
    unit: u128,
    rel: u32,
}

impl PadicNumber {
    /// Zero known modulo `p^abs`.
    pub fn zero(p: u64, abs: i64) -> Self {
        PadicNumber { p, valuation: abs, unit: 0, rel: 0 }
    }

    /// The rational `num/den` with `rel` digits of relative precision.
    pub fn from_rational(num: i128, den: i128, p: u64, rel: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        checked_pow(p, rel + 1)?;
        if num == 0 {
            return Ok(PadicNumber::zero(p, rel as i64));
        }
        let vn = arith::val(num, p) as i64;
        let vd = arith::val(den, p) as i64;
        let pi = p as i128;
        let (mut n, mut d) = (num, den);
        for _ in 0..vn {
            n /= pi;
        }
        for _ in 0..vd {
            d /= pi;
        }
        let m = checked_pow(p, rel)?;
        let dinv = inv_mod(reduce_i128(d, m), m).ok_or(Error::NotUnit)?;
        let unit = mul_mod(reduce_i128(n, m), dinv, m);
        Ok(PadicNumber { p, valuation: vn - vd, unit, rel })
    }

    pub fn from_int(n: i128, p: u64, rel: u32) -> Result<Self> {
        Self::from_rational(n, 1, p, rel)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.unit == 0
    }

    /// Valuation; for a zero this is the precision bound.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn relative_precision(&self) -> u32 {
        self.rel
    }

    /// Absolute precision: the value is known modulo `p^absolute_precision`.
    pub fn absolute_precision(&self) -> i64 {
        if self.is_zero() {
            self.valuation
        } else {
            self.valuation + self.rel as i64
        }
    }

    /// The unit part as an integer in `[0, p^rel)`.
    pub fn unit(&self) -> u128 {
        self.unit
    }

    /// Base-p digits of the unit part, least significant first.
    pub fn unit_digits(&self) -> Vec<u64> {
        let mut u = self.unit;
        let p = self.p as u128;
        (0..self.rel)
            .map(|_| {
                let d = u % p;
                u /= p;
                d as u64
            })
            .collect()
    }

    fn modulus(&self) -> u128 {
        (self.p as u128).pow(self.rel)
    }

    fn normalize(p: u64, v: i64, mut u: u128, mut rel: u32) -> Self {
        let pp = p as u128;
        if u == 0 || rel == 0 {
            return PadicNumber::zero(p, v + rel as i64);
        }
        let mut v = v;
        while u % pp == 0 {
            u /= pp;
            v += 1;
            rel -= 1;
        }
        PadicNumber { p, valuation: v, unit: u, rel }
    }

    /// Reduce to `p^abs` absolute precision (no-op if already coarser).
    pub fn truncate_abs(&self, abs: i64) -> Self {
        if self.absolute_precision() <= abs {
            return self.clone();
        }
        if self.is_zero() || abs <= self.valuation {
            return PadicNumber::zero(self.p, abs.min(self.absolute_precision()));
        }
        let rel = (abs - self.valuation) as u32;
        let m = (self.p as u128).pow(rel);
        PadicNumber { p: self.p, valuation: self.valuation, unit: self.unit % m, rel }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::Mismatch("prime"));
        }
        let abs = self.absolute_precision().min(other.absolute_precision());
        if self.is_zero() {
            return Ok(other.truncate_abs(abs));
        }
        if other.is_zero() {
            return Ok(self.truncate_abs(abs));
        }
        let v = self.valuation.min(other.valuation);
        if abs <= v {
            return Ok(PadicNumber::zero(self.p, abs));
        }
        let rel = (abs - v) as u32;
        let m = checked_pow(self.p, rel)?;
        let lift = |x: &Self| {
            let shift = (x.valuation - v) as u32;
            mul_mod(x.unit % m, (self.p as u128).pow(shift) % m, m)
        };
        let s = arith::add_mod(lift(self), lift(other), m);
        Ok(Self::normalize(self.p, v, s, rel))
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.modulus();
        PadicNumber { unit: m - self.unit, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::Mismatch("prime"));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(PadicNumber::zero(self.p, self.valuation + other.valuation));
        }
        let rel = self.rel.min(other.rel);
        let m = (self.p as u128).pow(rel);
        let u = mul_mod(self.unit % m, other.unit % m, m);
        Ok(PadicNumber { p: self.p, valuation: self.valuation + other.valuation, unit: u, rel })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.modulus();
        let u = inv_mod(self.unit, m).ok_or(Error::NotUnit)?;
        Ok(PadicNumber { p: self.p, valuation: -self.valuation, unit: u, rel: self.rel })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if self.is_zero() {
            if e == 0 {
                return Self::from_int(1, self.p, self.rel.max(1));
            }
            return Ok(PadicNumber::zero(self.p, self.valuation * e));
        }
        let m = self.modulus();
        Ok(PadicNumber {
            p: self.p,
            valuation: self.valuation * e,
            unit: pow_mod(self.unit, e as u128, m),
            rel: self.rel,
        })
    }

    /// Residue of a p-adic integer modulo `p^k`, as an integer in `[0, p^k)`.
    pub fn residue(&self, k: u32) -> Result<u128> {
        if self.valuation < 0 && !self.is_zero() {
            return Err(Error::NotIntegral);
        }
        if self.absolute_precision() < k as i64 {
            return Err(Error::InvalidInput("residue beyond known precision"));
        }
        if self.is_zero() || self.valuation >= k as i64 {
            return Ok(0);
        }
        let m = checked_pow(self.p, k)?;
        let shift = (self.p as u128).pow(self.valuation as u32);
        Ok(mul_mod(self.unit % m, shift, m))
    }

    /// True when `self - other` vanishes modulo `p^k`.
    pub fn agrees_to(&self, other: &Self, k: i64) -> bool {
        match self.sub(other) {
            Ok(d) => d.valuation >= k,
            Err(_) => false,
        }
    }
}

/// Teichmüller representative of the residue of `a` modulo `p`, to `k` digits.
pub fn teichmuller_lift(a: u128, p: u64, k: u32) -> Result<PadicNumber> {
    let m = checked_pow(p, k)?;
    let pp = p as u128;
    if a % pp == 0 {
        return Err(Error::NotUnit);
    }
    let mut x = a % m;
    for _ in 0..k {
        x = pow_mod(x, pp, m);
    }
    Ok(PadicNumber { p, valuation: 0, unit: x, rel: k })
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        let abs = self.absolute_precision();
        if self.is_zero() {
            return write!(f, "O({p}^{abs})");
        }
        let mut terms: Vec<String> = Vec::new();
        for (i, d) in self.unit_digits().iter().enumerate() {
            if *d == 0 {
                continue;
            }
            let e = self.valuation + i as i64;
            terms.push(match e {
                0 => alloc::format!("{d}"),
                1 => alloc::format!("{d}*{p}"),
                _ => alloc::format!("{d}*{p}^{e}"),
            });
        }
        for t in &terms {
            write!(f, "{t} + ")?;
        }
        write!(f, "O({p}^{abs})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip() {
        let x = PadicNumber::from_rational(1, 2, 3, 10).unwrap();
        let two = PadicNumber::from_int(2, 3, 10).unwrap();
        let one = PadicNumber::from_int(1, 3, 10).unwrap();
        assert_eq!(x.mul(&two).unwrap(), one);
        // 1/2 = 2 + 1*3 + 1*3^2 + ... in Z_3
        assert_eq!(x.unit_digits()[..4], [2, 1, 1, 1]);
    }

    #[test]
    fn valuations_and_display() {
        let x = PadicNumber::from_rational(18, 5, 3, 4).unwrap();
        assert_eq!(x.valuation(), 2);
        let s = alloc::format!("{x}");
        assert!(s.ends_with("O(3^6)"), "{s}");
        let z = PadicNumber::from_int(9, 3, 3).unwrap().sub(&PadicNumber::from_int(9, 3, 3).unwrap()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.absolute_precision(), 5);
    }

    #[test]
    fn teichmuller_is_root_of_unity() {
        for p in [3u64, 5, 7, 13, 31] {
            for a in 1..p {
                let t = teichmuller_lift(a as u128, p, 20).unwrap();
                let one = PadicNumber::from_int(1, p, 20).unwrap();
                assert_eq!(t.pow((p - 1) as i64).unwrap(), one);
                assert_eq!(t.unit() % p as u128, a as u128);
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(PadicNumber::from_int(1, 31, 30).is_err());
    }
}
