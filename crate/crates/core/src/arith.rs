//! Integer helpers shared by the other modules.
//!
//! Moduli are `u128` so that `p^(K+2)` fits for the default precision at
//! every prime below 64. Products are taken through a 256-bit intermediate.

use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors with multiplicities, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(q, _)| acc / q * (q - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// `p^k` as `u128`, or an error when it overflows.
pub fn checked_pow(p: u64, k: u32) -> Result<u128> {
    (p as u128)
        .checked_pow(k)
        .ok_or(Error::PrecisionOverflow { p, k })
}

/// p-adic valuation of a nonzero integer.
pub fn val(mut n: i128, p: u64) -> u32 {
    debug_assert!(n != 0);
    let p = p as i128;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let mask = u64::MAX as u128;
    let (a0, a1) = (a & mask, a >> 64);
    let (b0, b1) = (b & mask, b >> 64);
    let ll = a0 * b0;
    let lh = a0 * b1;
    let hl = a1 * b0;
    let hh = a1 * b1;
    let mid = (ll >> 64) + (lh & mask) + (hl & mask);
    let lo = (ll & mask) | (mid << 64);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

/// `a * b mod m` for `a, b < m`.
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if (a | b) >> 64 == 0 {
        return (a * b) % m;
    }
    let (hi, lo) = mul_wide(a, b);
    if hi == 0 {
        return lo % m;
    }
    // shift-subtract reduction of the 256-bit product
    let mut r = hi % m;
    for i in (0..128).rev() {
        let carry = r >> 127;
        r <<= 1;
        r |= (lo >> i) & 1;
        if carry == 1 || r >= m {
            r = r.wrapping_sub(m);
        }
    }
    r
}

pub fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let (s, over) = a.overflowing_add(b);
    if over || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

pub fn sub_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn neg_mod(a: u128, m: u128) -> u128 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

pub fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u128, m: u128) -> Option<u128> {
    if m == 1 {
        return Some(0);
    }
    // extended Euclid on signed pairs kept reduced mod m
    let (mut r0, mut r1) = (m, a % m);
    let (mut s0, mut s1) = (0u128, 1u128);
    while r1 != 0 {
        let q = r0 / r1;
        let r2 = r0 - q * r1;
        let s2 = sub_mod(s0, mul_mod(q % m, s1, m), m);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if r0 == 1 {
        Some(s0)
    } else {
        None
    }
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_i128(a: i128, m: u128) -> u128 {
    let r = a.rem_euclid(m as i128);
    r as u128
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = factorize(p - 1);
    (2..p)
        .find(|&g| {
            fs.iter()
                .all(|&(q, _)| pow_mod(g as u128, ((p - 1) / q) as u128, p as u128) != 1)
        })
        .expect("every prime has a primitive root")
}

/// Legendre symbol `(a/p)` for odd `p`.
pub fn legendre(a: i128, p: u64) -> i32 {
    let a = reduce_i128(a, p as u128);
    if a == 0 {
        return 0;
    }
    if pow_mod(a, ((p - 1) / 2) as u128, p as u128) == 1 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}
