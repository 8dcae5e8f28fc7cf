//! Morita's p-adic gamma function.
//!
//! `Gamma_p(n) = (-1)^n prod_{0<j<n, p !| j} j` for integers `n >= 1`, and
//! `Gamma_p(z)` is the p-adic limit along integers `n -> z`. Evaluating the
//! product directly costs `p^k` steps, so products over aligned blocks of
//! length `p^i` are read off from the polynomials
//! `F_i(x) = prod_{0<=j<p^i, p !| j} (x + j)`, truncated below degree `k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{add_mod, binomial, checked_pow, mul_mod, neg_mod, reduce_i128};
use crate::error::{Error, Result};
use crate::padic::PadicNumber;

/// Precomputed block polynomials for one prime and precision.
#[derive(Clone, Debug)]
pub struct MoritaGamma {
    p: u64,
    digits: u32,
    modulus: u128,
    /// blocks[i] = F_i truncated, for i >= 1
    blocks: Vec<Vec<u128>>,
}

impl MoritaGamma {
    pub fn new(p: u64, digits: u32) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if digits == 0 {
            return Err(Error::InvalidInput("precision must be positive"));
        }
        // integers are taken modulo p^(k+2), so that power must fit
        checked_pow(p, digits + 2)?;
        let modulus = (p as u128).pow(digits);
        let deg = digits as usize;
        let mut f1 = vec![0u128; deg];
        f1[0] = 1;
        for j in 1..p {
            f1 = poly_mul(&f1, &[j as u128 % modulus, 1], deg, modulus);
        }
        let mut blocks = vec![Vec::new(), f1];
        for i in 1..(digits + 2) {
            let prev = &blocks[i as usize];
            let step = (p as u128).pow(i) % modulus;
            let mut next = vec![0u128; deg];
            next[0] = 1;
            for c in 0..p as u128 {
                let h = mul_mod(c, step, modulus);
                next = poly_mul(&next, &taylor_shift(prev, h, modulus), deg, modulus);
            }
            blocks.push(next);
        }
        Ok(MoritaGamma { p, digits, modulus, blocks })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// `prod_{0<j<n, p !| j} j mod p^k`.
    fn partial_product(&self, n: u128) -> u128 {
        let p = self.p as u128;
        let m = self.modulus;
        let mut digits = Vec::new();
        let mut t = n;
        while t > 0 {
            digits.push(t % p);
            t /= p;
        }
        let mut acc = 1 % m;
        let mut base: u128 = 0;
        for i in (0..digits.len()).rev() {
            let len = p.pow(i as u32);
            for _ in 0..digits[i] {
                let b = if i == 0 {
                    if base % p == 0 {
                        1
                    } else {
                        base % m
                    }
                } else {
                    horner(&self.blocks[i], base % m, m)
                };
                acc = mul_mod(acc, b, m);
                base += len;
            }
        }
        acc
    }

    /// `Gamma_p(n)` for an integer `n >= 0`.
    pub fn eval_integer(&self, n: u128) -> PadicNumber {
        let m = self.modulus;
        let top = (self.p as u128).pow(self.digits + 2);
        let n = match n % top {
            0 => top,
            r => r,
        };
        let prod = self.partial_product(n);
        let v = if n % 2 == 1 { neg_mod(prod, m) } else { prod };
        unit(self.p, v, self.digits)
    }

    /// `Gamma_p(z)` for a p-adic integer `z`.
    pub fn eval(&self, z: &PadicNumber) -> Result<PadicNumber> {
        if z.p() != self.p {
            return Err(Error::Mismatch("prime"));
        }
        let need = self.digits + 2;
        if z.absolute_precision() < need as i64 {
            return Err(Error::InvalidInput("argument known to too few digits"));
        }
        let mut n = z.residue(need)?;
        if n == 0 {
            n = (self.p as u128).pow(need);
        }
        Ok(self.eval_integer(n))
    }

    /// `Gamma_p(num/den)`, `p` not dividing `den`.
    pub fn eval_rational(&self, num: i128, den: i128) -> Result<PadicNumber> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        if den % self.p as i128 == 0 {
            return Err(Error::NotIntegral);
        }
        let n = rational_residue(num, den, self.p, self.digits + 2)?;
        Ok(self.eval_integer(n))
    }
}

fn unit(p: u64, v: u128, digits: u32) -> PadicNumber {
    // Gamma_p takes unit values
    PadicNumber::from_int(v as i128, p, digits)
        .expect("modulus fits by construction")
        .truncate_abs(digits as i64)
}

fn poly_mul(a: &[u128], b: &[u128], deg: usize, m: u128) -> Vec<u128> {
    let mut out = vec![0u128; deg];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 || i >= deg {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if i + j >= deg {
                break;
            }
            if y != 0 {
                out[i + j] = add_mod(out[i + j], mul_mod(x, y, m), m);
            }
        }
    }
    out
}

/// Coefficients of `f(x + h)`.
fn taylor_shift(f: &[u128], h: u128, m: u128) -> Vec<u128> {
    let deg = f.len();
    let mut hp = vec![1 % m; deg];
    for e in 1..deg {
        hp[e] = mul_mod(hp[e - 1], h, m);
    }
    let mut out = vec![0u128; deg];
    for (e, &c) in f.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for j in 0..=e {
            let t = mul_mod(binomial(e as u64, j as u64) % m, hp[e - j], m);
            out[j] = add_mod(out[j], mul_mod(c, t, m), m);
        }
    }
    out
}

fn horner(f: &[u128], x: u128, m: u128) -> u128 {
    f.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, m), c, m))
}

/// `Gamma_p(n) mod p^k` straight from the defining product.
pub fn gamma_p_naive(n: u128, p: u64, k: u32) -> Result<u128> {
    let m = checked_pow(p, k)?;
    let pp = p as u128;
    let mut acc = 1 % m;
    for j in 1..n {
        if j % pp != 0 {
            acc = mul_mod(acc, j % m, m);
        }
    }
    Ok(if n % 2 == 1 { neg_mod(acc, m) } else { acc })
}

/// `Gamma_p(num/den)` at `k` digits.
pub fn gamma_p(num: i128, den: i128, p: u64, k: u32) -> Result<PadicNumber> {
    MoritaGamma::new(p, k)?.eval_rational(num, den)
}

/// Integer representative in `[1, p^k]` of `num/den` modulo `p^k`.
pub fn rational_residue(num: i128, den: i128, p: u64, k: u32) -> Result<u128> {
    let m = checked_pow(p, k)?;
    let d = crate::arith::inv_mod(reduce_i128(den, m), m).ok_or(Error::NotIntegral)?;
    let r = mul_mod(reduce_i128(num, m), d, m);
    Ok(if r == 0 { m } else { r })
}

/// The constant `c_p` attached to a principal series with `omega_p` of
/// conductor exponent `N_p` and restriction to units of order `m`.
#[derive(Clone, Debug, PartialEq)]
pub enum CpConstant {
    One,
    /// `(-p)^{-1/2m} * ratio` with `ratio = Gamma_p(1/2m) / Gamma_p(1/m)`;
    /// the root is only fixed up to a `2m`-th root of unity.
    Root { m: u64, ratio: PadicNumber },
}

pub fn c_p_constant(p: u64, n_p: u32, m: u64, digits: u32) -> Result<CpConstant> {
    if m == 0 {
        return Err(Error::InvalidInput("order m must be positive"));
    }
    if p == 2 || n_p != 1 || m % 2 == 1 {
        return Ok(CpConstant::One);
    }
    if (p - 1) % m != 0 {
        return Err(Error::InvalidInput("a tame character has order dividing p-1"));
    }
    let g = MoritaGamma::new(p, digits)?;
    let ratio = g.eval_rational(1, 2 * m as i128)?.div(&g.eval_rational(1, m as i128)?)?;
    Ok(CpConstant::Root { m, ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn block_method_matches_naive_product() {
        for p in [2u64, 3, 5, 7] {
            let g = MoritaGamma::new(p, 4).unwrap();
            for n in 0..400u128 {
                let fast = g.eval_integer(n).residue(4).unwrap();
                assert_eq!(fast, gamma_p_naive(n, p, 4).unwrap(), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn c_p_branches() {
        assert_eq!(c_p_constant(2, 1, 2, 6).unwrap(), CpConstant::One);
        assert_eq!(c_p_constant(7, 2, 3, 6).unwrap(), CpConstant::One);
        assert_eq!(c_p_constant(7, 1, 3, 6).unwrap(), CpConstant::One);
        assert!(c_p_constant(7, 1, 0, 6).is_err());
        match c_p_constant(5, 1, 4, 6).unwrap() {
            CpConstant::Root { m, ratio } => {
                assert_eq!(m, 4);
                let g = MoritaGamma::new(5, 6).unwrap();
                let back = ratio.mul(&g.eval_rational(1, 4).unwrap()).unwrap();
                assert_eq!(back, g.eval_rational(1, 8).unwrap());
            }
            CpConstant::One => panic!("expected the p-adic branch"),
        }
    }

    #[test]
    fn small_values() {
        // Gamma_p(1) = -1, Gamma_p(2) = 1, Gamma_p(3) = -2 for p > 2
        let g = MoritaGamma::new(5, 6).unwrap();
        let m = 5u128.pow(6);
        assert_eq!(g.eval_rational(1, 1).unwrap().residue(6).unwrap(), m - 1);
        assert_eq!(g.eval_rational(2, 1).unwrap().residue(6).unwrap(), 1);
        assert_eq!(g.eval_rational(3, 1).unwrap().residue(6).unwrap(), m - 2);
        assert_eq!(g.eval_rational(0, 1).unwrap().residue(6).unwrap(), 1);
    }

    #[test]
    fn half_squared_at_three() {
        // Gamma_p(1/2)^2 = (-1)^((p+1)/2)
        let g = MoritaGamma::new(3, 10).unwrap();
        let h = g.eval_rational(1, 2).unwrap();
        let one = PadicNumber::from_int(1, 3, 10).unwrap();
        assert_eq!(h.mul(&h).unwrap(), one);
        let g = MoritaGamma::new(5, 10).unwrap();
        let h = g.eval_rational(1, 2).unwrap();
        let m1 = PadicNumber::from_int(-1, 5, 10).unwrap();
        assert_eq!(h.mul(&h).unwrap(), m1);
    }

    #[test]
    fn default_precision_at_largest_prime() {
        let g = MoritaGamma::new(31, 20).unwrap();
        let x = g.eval_rational(1, 3).unwrap();
        assert_eq!(x.relative_precision(), 20);
        assert!(MoritaGamma::new(31, 24).is_err());
    }

    proptest! {
        #[test]
        fn reflection(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), num in -500i128..500, den in 1i128..60) {
            prop_assume!(den % p as i128 != 0);
            let k = 8;
            let g = MoritaGamma::new(p, k).unwrap();
            let a = g.eval_rational(num, den).unwrap();
            let b = g.eval_rational(den - num, den).unwrap();
            // x0 in {1..p} congruent to x mod p
            let r = rational_residue(num, den, p, 1).unwrap();
            let sign = if r % 2 == 1 { -1 } else { 1 };
            let rhs = PadicNumber::from_int(sign, p, k).unwrap();
            prop_assert_eq!(a.mul(&b).unwrap(), rhs);
        }

        #[test]
        fn functional_equation(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), num in -500i128..500, den in 1i128..60) {
            prop_assume!(den % p as i128 != 0);
            let k = 8;
            let g = MoritaGamma::new(p, k).unwrap();
            let x = PadicNumber::from_rational(num, den, p, k).unwrap();
            let a = g.eval_rational(num, den).unwrap();
            let b = g.eval_rational(num + den, den).unwrap();
            let unit = !x.is_zero() && x.valuation() == 0;
            let rhs = if unit { x.neg().mul(&a).unwrap() } else { a.neg() };
            prop_assert_eq!(b, rhs.truncate_abs(k as i64));
        }
    }
}
