//! Exact values `alpha * p^(h/2) * a_p^s` with `alpha` cyclotomic.
//!
//! The coefficient `a_p` of a newform is not known to this crate, so it is
//! carried as a formal power. Two values are comparable only when their
//! `a_p` powers agree.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::arith::{lcm, val};
use crate::cyclotomic::{sqrt_p, CycloElement, CyclotomicField, RootOfUnity};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct EpsilonValue {
    p: u64,
    alg: CycloElement,
    half: i32,
    ap: i32,
}

impl EpsilonValue {
    pub fn new(p: u64, alg: CycloElement, half: i32) -> Self {
        EpsilonValue { p, alg, half, ap: 0 }
    }

    pub fn one(p: u64) -> Self {
        EpsilonValue::new(p, CyclotomicField::new(1).from_int(1), 0)
    }

    pub fn from_int(p: u64, k: i64) -> Self {
        EpsilonValue::new(p, CyclotomicField::new(1).from_int(k), 0)
    }

    pub fn root(p: u64, r: &RootOfUnity) -> Self {
        let f = CyclotomicField::new(r.order());
        EpsilonValue::new(p, f.root(r).expect("order matches"), 0)
    }

    /// `p^(h/2)`.
    pub fn p_half_power(p: u64, h: i32) -> Self {
        EpsilonValue::new(p, CyclotomicField::new(1).from_int(1), h)
    }

    /// The formal symbol `a_p^s`.
    pub fn ap_symbol(p: u64, s: i32) -> Self {
        EpsilonValue { ap: s, ..EpsilonValue::one(p) }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn algebraic(&self) -> &CycloElement {
        &self.alg
    }

    pub fn half_power(&self) -> i32 {
        self.half
    }

    pub fn ap_power(&self) -> i32 {
        self.ap
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.p != o.p {
            return Err(Error::Mismatch("prime"));
        }
        let f = CyclotomicField::new(lcm(self.alg.order(), o.alg.order()));
        let alg = f.mul(&f.inflate(&self.alg)?, &f.inflate(&o.alg)?)?;
        Ok(EpsilonValue { p: self.p, alg, half: self.half + o.half, ap: self.ap + o.ap })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = EpsilonValue::one(self.p);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        let f = CyclotomicField::new(self.alg.order());
        EpsilonValue { alg: f.neg(&self.alg), ..self.clone() }
    }

    /// Inverse, defined when `alpha * conj(alpha)` is a power of `p`.
    pub fn inv(&self) -> Result<Self> {
        let f = CyclotomicField::new(self.alg.order());
        let c = f.conj(&self.alg)?;
        let norm = f.mul(&self.alg, &c)?.as_integer().ok_or(Error::InvalidInput(
            "inverse needs an element of absolute value a power of sqrt(p)",
        ))?;
        if norm <= 0 {
            return Err(Error::DivisionByZero);
        }
        let j = val(norm as i128, self.p);
        if (self.p as i128).pow(j) != norm as i128 {
            return Err(Error::InvalidInput("absolute value is not a power of sqrt(p)"));
        }
        Ok(EpsilonValue { p: self.p, alg: c, half: -self.half - 2 * j as i32, ap: -self.ap })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inv()?)
    }

    /// `alpha * p^(d/2)` as an element of a cyclotomic ring, for `d >= 0`.
    fn lift(&self, d: i32) -> CycloElement {
        let mut x = self.alg.clone();
        let mut f = CyclotomicField::new(x.order());
        if d % 2 == 1 {
            let s = sqrt_p(self.p);
            f = CyclotomicField::new(lcm(x.order(), s.order()));
            x = f.mul(&f.inflate(&x).unwrap(), &f.inflate(&s).unwrap()).unwrap();
        }
        f.scale(&x, (self.p as i64).pow((d / 2) as u32))
    }

    pub fn equals(&self, o: &Self) -> Result<bool> {
        if self.p != o.p {
            return Err(Error::Mismatch("prime"));
        }
        if self.ap != o.ap {
            return Err(Error::Mismatch("different powers of a_p are not comparable"));
        }
        let m = self.half.min(o.half);
        let x = self.lift(self.half - m);
        let y = o.lift(o.half - m);
        let f = CyclotomicField::new(lcm(x.order(), y.order()));
        f.equal(&x, &y)
    }

    /// Complex value with `a_p` set to 1.
    pub fn complex(&self) -> (f64, f64) {
        let (re, im) = self.alg.complex_embed();
        let s = libm::pow(self.p as f64, self.half as f64 / 2.0);
        (re * s, im * s)
    }

    /// `(c, zeta)` with `alpha = c * zeta` exactly, if such a pair exists.
    pub fn as_scaled_root(&self) -> Option<(i64, RootOfUnity)> {
        let (re, im) = self.alg.complex_embed();
        let r = libm::sqrt(re * re + im * im);
        let c = libm::round(r) as i64;
        if c == 0 || libm::fabs(r - c as f64) > 1e-6 {
            return None;
        }
        let n = lcm(self.alg.order(), 2);
        let t = libm::atan2(im, re) / (2.0 * core::f64::consts::PI) * n as f64;
        let k = libm::round(t) as i128;
        let z = RootOfUnity::new(k, n);
        let f = CyclotomicField::new(n);
        let cand = f.scale(&f.root(&z).ok()?, c);
        (cand == f.inflate(&self.alg).ok()?).then_some((c, z))
    }
}

fn fmt_root(z: &RootOfUnity) -> String {
    match (z.num(), z.order()) {
        (0, 1) => String::from("1"),
        (1, 2) => String::from("-1"),
        (1, 4) => String::from("i"),
        (3, 4) => String::from("-i"),
        (1, n) => format!("zeta_{n}"),
        (k, n) => format!("zeta_{n}^{k}"),
    }
}

impl fmt::Display for EpsilonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = alloc::vec::Vec::new();
        let mut half = self.half;
        match self.as_scaled_root() {
            Some((mut c, z)) => {
                while c % self.p as i64 == 0 {
                    c /= self.p as i64;
                    half += 2;
                }
                let r = fmt_root(&z);
                match (c, r.as_str()) {
                    (1, "1") if half != 0 || self.ap != 0 => {}
                    (1, _) => parts.push(r),
                    (_, "1") => parts.push(format!("{c}")),
                    (_, "-1") => parts.push(format!("-{c}")),
                    _ => parts.push(format!("{c}*{r}")),
                }
            }
            None => {
                let (re, im) = self.alg.complex_embed();
                parts.push(format!("({re:.6}{im:+.6}i)"));
            }
        }
        if half != 0 {
            if half % 2 == 0 {
                parts.push(format!("{}^{}", self.p, half / 2));
            } else {
                parts.push(format!("{}^({}/2)", self.p, half));
            }
        }
        if self.ap != 0 {
            parts.push(format!("a_{}^{}", self.p, self.ap));
        }
        if parts.is_empty() {
            parts.push(String::from("1"));
        }
        let s = parts.join("*");
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_halves_compare_exactly() {
        for p in [2u64, 3, 5, 7] {
            let a = EpsilonValue::p_half_power(p, 1);
            let b = EpsilonValue::new(p, sqrt_p(p), 0);
            assert!(a.equals(&b).unwrap());
            let sq = a.mul(&a).unwrap();
            assert!(sq.equals(&EpsilonValue::from_int(p, p as i64)).unwrap());
            assert!(!a.equals(&EpsilonValue::one(p)).unwrap());
        }
    }

    #[test]
    fn inverse_and_display() {
        let i = EpsilonValue::root(5, &RootOfUnity::new(1, 4));
        assert_eq!(format!("{i}"), "i");
        let x = i.mul(&EpsilonValue::p_half_power(5, -3)).unwrap();
        assert_eq!(format!("{x}"), "i*5^(-3/2)");
        let y = x.mul(&x.inv().unwrap()).unwrap();
        assert!(y.equals(&EpsilonValue::one(5)).unwrap());
        let s = EpsilonValue::new(5, sqrt_p(5), 0);
        assert!(s.inv().unwrap().equals(&EpsilonValue::p_half_power(5, -1)).unwrap());
        let z = EpsilonValue::ap_symbol(3, 1);
        assert!(z.equals(&EpsilonValue::one(3)).is_err());
        assert_eq!(format!("{}", z.neg()), "-1*a_3^1");
    }
}
