//! Exact arithmetic in Z[zeta_N].
//!
//! Elements are integer vectors in the power basis `1, zeta, ..., zeta^(phi(N)-1)`
//! of `Z[x]/(Phi_N)`. Sums of roots of unity are first collected in the group
//! ring `Z[C_N]` and reduced once.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{factorize, gcd, lcm, legendre};
use crate::error::{Error, Result};
use crate::padic::{ExtElement, ExtRing, PadicNumber};

/// `exp(2 pi i num / den)`, with `0 <= num < den` and `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub fn new(num: i128, den: u64) -> Self {
        assert!(den > 0, "root of unity with zero order");
        let n = num.rem_euclid(den as i128) as u64;
        let g = gcd(n, den);
        if n == 0 {
            return RootOfUnity { num: 0, den: 1 };
        }
        RootOfUnity { num: n / g, den: den / g }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { num: 1, den: 2 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    /// Exact multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = lcm(self.den, o.den);
        let n = self.num as i128 * (d / self.den) as i128 + o.num as i128 * (d / o.den) as i128;
        RootOfUnity::new(n, d)
    }

    pub fn inv(&self) -> Self {
        RootOfUnity::new(-(self.num as i128), self.den)
    }

    pub fn pow(&self, e: i64) -> Self {
        RootOfUnity::new(self.num as i128 * e as i128, self.den)
    }

    /// Exponent `k` with `self = zeta_n^k`; requires `order | n`.
    pub fn exponent_in(&self, n: u64) -> u64 {
        debug_assert!(n % self.den == 0);
        self.num * (n / self.den)
    }
}

/// Phi_n as dense integer coefficients, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let rad: u64 = factorize(n).iter().map(|&(q, _)| q).product();
    let base = squarefree_cyclotomic(rad);
    let s = (n / rad) as usize;
    let mut out = vec![0i64; (base.len() - 1) * s + 1];
    for (i, &c) in base.iter().enumerate() {
        out[i * s] = c;
    }
    out
}

fn squarefree_cyclotomic(m: u64) -> Vec<i64> {
    // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}
    let primes: Vec<u64> = factorize(m).iter().map(|&(q, _)| q).collect();
    let mut num = vec![1i64];
    let mut den: Vec<u64> = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let mut d = m;
        for (i, q) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d /= q;
            }
        }
        if mask.count_ones() % 2 == 0 {
            num = mul_binomial(&num, d as usize);
        } else {
            den.push(d);
        }
    }
    for d in den {
        num = div_binomial(&num, d as usize);
    }
    num
}

fn mul_binomial(a: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + d];
    for (i, &c) in a.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_binomial(a: &[i64], d: usize) -> Vec<i64> {
    // exact division by x^d - 1
    let mut rem = a.to_vec();
    let qlen = a.len() - d;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + d];
        q[k] = c;
        rem[k + d] = 0;
        rem[k] += c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// The ring Z[zeta_n] together with its defining polynomial.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    n: u64,
    degree: usize,
    /// nonzero coefficients of Phi_n below the leading term
    low_terms: Vec<(usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElement {
    n: u64,
    coeffs: Vec<i64>,
}

impl CycloElement {
    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Image under zeta_n -> exp(2 pi i / n).
    pub fn complex_embed(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        let n = self.n as f64;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let t = 2.0 * core::f64::consts::PI * k as f64 / n;
                re += c as f64 * libm::cos(t);
                im += c as f64 * libm::sin(t);
            }
        }
        (re, im)
    }
}

impl CyclotomicField {
    pub fn new(n: u64) -> Self {
        assert!(n > 0);
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let low_terms = phi[..degree]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        CyclotomicField { n, degree, low_terms }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduce a polynomial in zeta of any length.
    pub fn reduce(&self, mut a: Vec<i64>) -> CycloElement {
        let d = self.degree;
        for k in (d..a.len()).rev() {
            let c = a[k];
            if c == 0 {
                continue;
            }
            a[k] = 0;
            for &(j, t) in &self.low_terms {
                a[k - d + j] -= c * t;
            }
        }
        a.resize(d, 0);
        CycloElement { n: self.n, coeffs: a }
    }

    pub fn zero(&self) -> CycloElement {
        CycloElement { n: self.n, coeffs: vec![0; self.degree] }
    }

    pub fn from_int(&self, k: i64) -> CycloElement {
        let mut z = self.zero();
        z.coeffs[0] = k;
        z
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(&self, k: i64) -> CycloElement {
        let e = k.rem_euclid(self.n as i64) as usize;
        let mut a = vec![0i64; e + 1];
        a[e] = 1;
        self.reduce(a)
    }

    pub fn root(&self, r: &RootOfUnity) -> Result<CycloElement> {
        if self.n % r.order() != 0 {
            return Err(Error::Mismatch("root order does not divide field order"));
        }
        Ok(self.zeta_pow(r.exponent_in(self.n) as i64))
    }

    fn check(&self, a: &CycloElement) -> Result<()> {
        if a.n != self.n {
            return Err(Error::Mismatch("cyclotomic order"));
        }
        Ok(())
    }

    pub fn add(&self, a: &CycloElement, b: &CycloElement) -> Result<CycloElement> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(CycloElement { n: self.n, coeffs })
    }

    pub fn neg(&self, a: &CycloElement) -> CycloElement {
        CycloElement { n: a.n, coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, a: &CycloElement, b: &CycloElement) -> Result<CycloElement> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &CycloElement, k: i64) -> CycloElement {
        CycloElement { n: a.n, coeffs: a.coeffs.iter().map(|x| x * k).collect() }
    }

    pub fn mul(&self, a: &CycloElement, b: &CycloElement) -> Result<CycloElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = vec![0i64; 2 * self.degree];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Ok(self.reduce(out))
    }

    pub fn pow(&self, a: &CycloElement, mut e: u64) -> Result<CycloElement> {
        let mut r = self.from_int(1);
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b)?;
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b)?;
            }
        }
        Ok(r)
    }

    /// The automorphism zeta -> zeta^s, `gcd(s, n) = 1`.
    pub fn galois(&self, a: &CycloElement, s: i64) -> Result<CycloElement> {
        self.check(a)?;
        let n = self.n as i64;
        if gcd(s.rem_euclid(n) as u64, self.n) != 1 {
            return Err(Error::InvalidInput("Galois exponent not prime to the order"));
        }
        let mut out = vec![0i64; self.n as usize];
        for (k, &c) in a.coeffs.iter().enumerate() {
            out[(k as i64 * s).rem_euclid(n) as usize] += c;
        }
        Ok(self.reduce(out))
    }

    /// Complex conjugation.
    pub fn conj(&self, a: &CycloElement) -> Result<CycloElement> {
        self.galois(a, -1)
    }

    /// View `a` (with order dividing `self.order()`) inside this field.
    pub fn inflate(&self, a: &CycloElement) -> Result<CycloElement> {
        if self.n % a.n != 0 {
            return Err(Error::Mismatch("cannot inflate into a smaller field"));
        }
        let s = (self.n / a.n) as usize;
        let mut out = vec![0i64; a.coeffs.len() * s + 1];
        for (k, &c) in a.coeffs.iter().enumerate() {
            out[k * s] = c;
        }
        Ok(self.reduce(out))
    }

    pub fn equal(&self, a: &CycloElement, b: &CycloElement) -> Result<bool> {
        Ok(self.inflate(a)? == self.inflate(b)?)
    }
}

/// Accumulator for integer combinations of roots of unity of order `n`.
#[derive(Clone, Debug)]
pub struct RootSum {
    n: u64,
    counts: Vec<i64>,
}

impl RootSum {
    pub fn new(n: u64) -> Self {
        RootSum { n, counts: vec![0; n as usize] }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Add `c * zeta_n^k`.
    pub fn add_power(&mut self, k: u64, c: i64) {
        self.counts[(k % self.n) as usize] += c;
    }

    pub fn add_root(&mut self, r: &RootOfUnity, c: i64) {
        self.add_power(r.exponent_in(self.n), c);
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Product in the group ring Z[C_n].
    pub fn mul(&self, o: &RootSum) -> RootSum {
        assert_eq!(self.n, o.n);
        let n = self.n as usize;
        let mut out = vec![0i64; n];
        let nz: Vec<(usize, i64)> =
            o.counts.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        for (i, &x) in self.counts.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(j, y) in &nz {
                let k = if i + j >= n { i + j - n } else { i + j };
                out[k] += x * y;
            }
        }
        RootSum { n: self.n, counts: out }
    }

    /// Image under zeta -> zeta^s.
    pub fn galois(&self, s: i64) -> RootSum {
        let n = self.n as i64;
        let mut out = vec![0i64; self.n as usize];
        for (k, &c) in self.counts.iter().enumerate() {
            out[(k as i64 * s).rem_euclid(n) as usize] += c;
        }
        RootSum { n: self.n, counts: out }
    }

    /// Coordinates in the basis of products of `zeta_{q}^j`, `j < (l-1) q / l`,
    /// over the prime powers `q = l^e` dividing `n`. Two sums are equal in
    /// `Q(zeta_n)` exactly when these agree; the cost is linear in `n`.
    pub fn canonical(&self) -> Vec<i64> {
        let n = self.n;
        let mut a = self.counts.clone();
        for (l, e) in crate::arith::factorize(n) {
            let q = l.pow(e);
            let s = q / l;
            let rest = n / q;
            // idempotent for the q-component of Z/n
            let unit = rest * crate::arith::inv_mod((rest % q) as u128, q as u128).unwrap_or(0) as u64 % n;
            let top = (l - 1) * s;
            for k in 0..n {
                let c = k % q;
                let v = a[k as usize];
                if c < top || v == 0 {
                    continue;
                }
                a[k as usize] = 0;
                let r = c - top;
                for t in 0..l - 1 {
                    let target = r + t * s;
                    let shift = (target + q - c) % q;
                    let k2 = ((k as u128 + shift as u128 * unit as u128) % n as u128) as usize;
                    a[k2] -= v;
                }
            }
        }
        a
    }

    pub fn equals(&self, o: &RootSum) -> bool {
        self.n == o.n && self.canonical() == o.canonical()
    }

    pub fn to_element(&self, field: &CyclotomicField) -> Result<CycloElement> {
        if field.order() != self.n {
            return Err(Error::Mismatch("cyclotomic order"));
        }
        Ok(field.reduce(self.counts.clone()))
    }
}

/// `sqrt(p)` as an element of Z[zeta_n], with n = p, 4p or 8.
pub fn sqrt_p(p: u64) -> CycloElement {
    if p == 2 {
        // zeta_8 + zeta_8^7
        let f = CyclotomicField::new(8);
        return f.add(&f.zeta_pow(1), &f.zeta_pow(7)).expect("same field");
    }
    let n = if p % 4 == 1 { p } else { 4 * p };
    let f = CyclotomicField::new(n);
    let mut s = RootSum::new(n);
    for x in 1..p {
        s.add_power(x * (n / p), legendre(x as i128, p) as i64);
    }
    let g = s.to_element(&f).expect("same field");
    if p % 4 == 1 {
        g
    } else {
        // g = i sqrt(p), so sqrt(p) = -i g
        let minus_i = f.zeta_pow(3 * (n / 4) as i64);
        f.mul(&minus_i, &g).expect("same field")
    }
}

/// The embedding Z[zeta_{(p-1)p}] -> Z_p[zeta_p]: zeta_{p-1} goes to the
/// Teichmüller lift of the least primitive root, zeta_p to 1 + pi.
#[derive(Clone, Debug)]
pub struct PadicEmbedding {
    ring: ExtRing,
    /// image of zeta_{(p-1)p}
    base: ExtElement,
}

impl PadicEmbedding {
    pub fn new(ring: ExtRing) -> Result<Self> {
        let p = ring.p();
        let g = crate::arith::primitive_root(p);
        let t = crate::padic::teichmuller_lift(g as u128, p, ring.digits())?;
        let t = ring.from_padic(&t)?;
        let z = ring.pow(&ring.zeta_p(), (p - 1) as i64)?;
        let base = ring.mul(&t, &z);
        Ok(PadicEmbedding { ring, base })
    }

    pub fn ring(&self) -> &ExtRing {
        &self.ring
    }

    pub fn embed(&self, a: &CycloElement) -> Result<ExtElement> {
        let p = self.ring.p();
        let big = (p - 1) * p;
        if big % a.order() != 0 {
            return Err(Error::Mismatch("element order does not divide (p-1)p"));
        }
        let z = self.ring.pow(&self.base, (big / a.order()) as i64)?;
        let mut acc = self.ring.zero();
        let mut zk = self.ring.one();
        for &c in a.coeffs() {
            if c != 0 {
                acc = self.ring.add(&acc, &self.ring.mul(&self.ring.from_int(c as i128), &zk));
            }
            zk = self.ring.mul(&zk, &z);
        }
        Ok(acc)
    }

    pub fn embed_root(&self, r: &RootOfUnity) -> Result<ExtElement> {
        let p = self.ring.p();
        let big = (p - 1) * p;
        if big % r.order() != 0 {
            return Err(Error::Mismatch("root order does not divide (p-1)p"));
        }
        self.ring.pow(&self.base, r.exponent_in(big) as i64)
    }

    pub fn embed_padic(&self, x: &PadicNumber) -> Result<ExtElement> {
        self.ring.from_padic(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(30), vec![1, 1, 0, -1, -1, -1, 0, 1, 1]);
        assert_eq!(cyclotomic_polynomial(105)[7], -2);
        assert_eq!(cyclotomic_polynomial(960).len() - 1, 256);
    }

    proptest::proptest! {
        #[test]
        fn canonical_form_decides_equality(
            n in proptest::sample::select(alloc::vec![1u64, 2, 4, 6, 9, 12, 15, 20, 24, 30, 36]),
            terms in proptest::collection::vec((0u64..360, -3i64..4), 0..12),
        ) {
            let f = CyclotomicField::new(n);
            let mut a = RootSum::new(n);
            for &(k, c) in &terms {
                a.add_power(k, c);
            }
            let zero = f.reduce(a.counts().to_vec()).is_zero();
            proptest::prop_assert_eq!(zero, a.equals(&RootSum::new(n)));
            proptest::prop_assert_eq!(zero, a.canonical().iter().all(|&c| c == 0));
        }

        #[test]
        fn vanishing_coset_sums_are_invisible(
            n in proptest::sample::select(alloc::vec![2u64, 6, 12, 15, 30, 36, 60]),
            terms in proptest::collection::vec((0u64..360, -3i64..4), 0..12),
            shifts in proptest::collection::vec((0u64..360, 0usize..3, -2i64..3), 1..4),
        ) {
            let mut a = RootSum::new(n);
            for &(k, c) in &terms {
                a.add_power(k, c);
            }
            let primes = crate::arith::factorize(n);
            let mut b = a.clone();
            for &(k, i, c) in &shifts {
                let l = primes[i % primes.len()].0;
                for j in 0..l {
                    b.add_power(k + j * (n / l), c);
                }
            }
            proptest::prop_assert!(a.equals(&b));
        }
    }

    #[test]
    fn sum_of_primitive_roots_is_mobius() {
        // sum over primitive n-th roots = mu(n)
        for (n, mu) in [(12u64, 0i64), (30, -1), (35, 1), (7, -1), (16, 0)] {
            let f = CyclotomicField::new(n);
            let mut s = RootSum::new(n);
            for k in 0..n {
                if gcd(k, n) == 1 {
                    s.add_power(k, 1);
                }
            }
            assert_eq!(s.to_element(&f).unwrap().as_integer(), Some(mu), "n={n}");
        }
    }

    #[test]
    fn sqrt_p_squares_to_p() {
        for p in [2u64, 3, 5, 7, 11, 13, 31] {
            let s = sqrt_p(p);
            let f = CyclotomicField::new(s.order());
            let sq = f.mul(&s, &s).unwrap();
            assert_eq!(sq.as_integer(), Some(p as i64), "p={p}");
            let (re, im) = s.complex_embed();
            assert!((re - (p as f64).sqrt()).abs() < 1e-9 && im.abs() < 1e-9, "p={p}");
        }
    }

    #[test]
    fn galois_and_inflation() {
        let f = CyclotomicField::new(12);
        let z = f.zeta_pow(1);
        let zc = f.conj(&z).unwrap();
        assert_eq!(f.mul(&z, &zc).unwrap().as_integer(), Some(1));
        let g = CyclotomicField::new(36);
        let zi = g.inflate(&z).unwrap();
        assert_eq!(zi, g.zeta_pow(3));
    }

    #[test]
    fn padic_embedding_respects_orders() {
        let r = ExtRing::new(7, 6).unwrap();
        let e = PadicEmbedding::new(r.clone()).unwrap();
        let f = CyclotomicField::new(42);
        let z = f.zeta_pow(1);
        let img = e.embed(&z).unwrap();
        let w = r.pow(&img, 42).unwrap();
        assert!(r.agrees_to(&w, &r.one(), r.max_precision() as i64));
        let w6 = r.pow(&img, 6).unwrap();
        assert!(!r.agrees_to(&w6, &r.one(), r.max_precision() as i64));
        // zeta_7 = zeta_42^6 goes to 1 + pi
        assert!(r.agrees_to(&e.embed(&f.zeta_pow(6)).unwrap(), &r.zeta_p(), r.max_precision() as i64));
    }
}
