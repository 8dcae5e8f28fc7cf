//! Finite fields F_{p^r} for small r, as polynomials modulo a fixed irreducible.
//!
//! An element is stored as its code `sum c_i p^i` over the coefficients of
//! `1, x, ..., x^(r-1)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    r: u32,
    q: u64,
    /// monic modulus, low coefficients c_0..c_{r-1}
    modulus: Vec<u64>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
}

fn decode(mut c: u64, p: u64, r: u32) -> Vec<u64> {
    (0..r)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn encode(v: &[u64], p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic `m` (both low-first, `m` includes its leading 1).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let d = m.len() - 1;
    while a.len() > d {
        let c = a.pop().unwrap();
        if c != 0 {
            let k = a.len() - d;
            for j in 0..d {
                a[k + j] = (a[k + j] + (p - c) * m[j]) % p;
            }
        }
    }
    a
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let r = m.len() - 1;
    for deg in 1..=r / 2 {
        for code in 0..p.pow(deg as u32) {
            let mut f = decode(code, p, deg as u32);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// `F_{p^r}` with the least irreducible monic modulus and least generator.
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 || r > 4 {
            return Err(Error::InvalidInput("degree must be between 1 and 4"));
        }
        let q = p.pow(r);
        if q > 1 << 24 {
            return Err(Error::TooLarge { size: q, limit: 1 << 24 });
        }
        let modulus = (0..q)
            .map(|c| decode(c, p, r))
            .find(|low| {
                let mut m = low.clone();
                m.push(1);
                r == 1 || is_irreducible(&m, p)
            })
            .expect("irreducible polynomials exist in every degree");
        let mut f = FiniteField {
            p,
            r,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            trace: Vec::new(),
        };
        let order = q - 1;
        let fs = crate::arith::factorize(order);
        let g = (1..q as u32)
            .find(|&g| fs.iter().all(|&(l, _)| f.pow_slow(g, order / l) != 1))
            .expect("F_q^x is cyclic");
        f.generator = g;
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1u32;
        for k in 0..order as usize {
            exp[k] = x;
            log[x as usize] = k as u32;
            x = f.mul_slow(x, g);
        }
        f.exp = exp;
        f.log = log;
        let mut trace = vec![0u32; q as usize];
        for c in 0..q as u32 {
            let mut acc = vec![0u64; r as usize];
            let mut y = c;
            for _ in 0..r {
                for (a, b) in acc.iter_mut().zip(decode(y as u64, p, r)) {
                    *a = (*a + b) % p;
                }
                y = f.pow_slow(y, p);
            }
            debug_assert!(acc[1..].iter().all(|&d| d == 0));
            trace[c as usize] = acc[0] as u32;
        }
        f.trace = trace;
        Ok(f)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, r) = (self.p, self.r);
        let x = decode(a as u64, p, r);
        let y = decode(b as u64, p, r);
        let mut prod = vec![0u64; 2 * r as usize - 1];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        let mut m = self.modulus.clone();
        m.push(1);
        encode(&poly_rem(&prod, &m, p), p) as u32
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        r
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Low coefficients of the monic modulus.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// `g^k`.
    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q - 1)) as usize]
    }

    /// Discrete logarithm base the generator.
    pub fn log(&self, x: u32) -> Result<u64> {
        match self.log.get(x as usize) {
            Some(&k) if k != u32::MAX => Ok(k as u64),
            _ => Err(Error::NotUnit),
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp(k)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let x = decode(a as u64, self.p, self.r);
        let y = decode(b as u64, self.p, self.r);
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        encode(&s, self.p) as u32
    }

    /// Absolute trace to F_p.
    pub fn trace(&self, x: u32) -> u64 {
        self.trace[x as usize] as u64
    }

    /// Absolute norm to F_p, as an integer in `[0, p)`.
    pub fn norm(&self, x: u32) -> u64 {
        if x == 0 {
            return 0;
        }
        let e = (self.q - 1) / (self.p - 1);
        let y = self.exp(self.log[x as usize] as u64 * e);
        debug_assert!((y as u64) < self.p);
        y as u64
    }

    /// The element of F_p given by an integer.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}
