//! Q_p and its quadratic extensions, residue rings O/pi^a and their unit groups.
//!
//! Elements of `K = Q_p(sqrt t)` are integer pairs `(a, b)` meaning `a + b w`
//! with `w^2 = s w + n`. For unramified `K` the pair is an integral basis
//! whose image spans the residue field; for ramified `K` the element `w` is a
//! uniformizer. Over `Q_p` the second coordinate is always zero.

pub mod finite;
pub use finite::FiniteField;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{checked_pow, gcd, inv_mod, is_prime, legendre, primitive_root, reduce_i128};
use crate::cyclotomic::RootOfUnity;
use crate::error::{Error, Result};

/// Largest unit group the enumeration code will build.
pub const MAX_GROUP_SIZE: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ramification {
    /// The base field Q_p itself.
    Split,
    Unramified,
    Ramified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elt {
    pub a: i128,
    pub b: i128,
}

impl Elt {
    pub const fn new(a: i128, b: i128) -> Self {
        Elt { a, b }
    }

    pub const fn int(a: i128) -> Self {
        Elt { a, b: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalField {
    p: u64,
    t: Option<i64>,
    kind: Ramification,
    s: i128,
    n: i128,
    /// unit `w0` with `N(pi) = p^f w0`
    norm_pi_unit: i128,
    disc_val: u32,
}

fn squarefree(t: i64) -> bool {
    let t = t.unsigned_abs();
    crate::arith::factorize(t).iter().all(|&(_, e)| e == 1)
}

impl LocalField {
    pub fn rationals(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(LocalField {
            p,
            t: None,
            kind: Ramification::Split,
            s: 0,
            n: 0,
            norm_pi_unit: 1,
            disc_val: 0,
        })
    }

    /// `Q_p(sqrt t)` for a squarefree integer `t` that is not a square in `Q_p`.
    pub fn quadratic(p: u64, t: i64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 || t == 1 || !squarefree(t) {
            return Err(Error::InvalidInput("t must be squarefree and not 0 or 1"));
        }
        let ti = t as i128;
        let pi = p as i128;
        let (kind, s, n, disc_val) = if p == 2 {
            match t.rem_euclid(8) {
                1 => return Err(Error::InvalidInput("t is a square in Q_2")),
                5 => (Ramification::Unramified, 1, (ti - 1) / 4, 0),
                3 | 7 => (Ramification::Ramified, 2, ti - 1, 2),
                _ => (Ramification::Ramified, 0, ti, 3),
            }
        } else if ti % pi == 0 {
            (Ramification::Ramified, 0, ti, 1)
        } else if legendre(ti, p) == 1 {
            return Err(Error::InvalidInput("t is a square in Q_p"));
        } else {
            (Ramification::Unramified, 0, ti, 0)
        };
        let norm_pi_unit = match kind {
            Ramification::Ramified => -n / pi,
            _ => 1,
        };
        Ok(LocalField { p, t: Some(t), kind, s, n, norm_pi_unit, disc_val })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn t(&self) -> Option<i64> {
        self.t
    }

    pub fn kind(&self) -> Ramification {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        if self.kind == Ramification::Split {
            1
        } else {
            2
        }
    }

    /// Residue degree f.
    pub fn residue_degree(&self) -> u32 {
        if self.kind == Ramification::Unramified {
            2
        } else {
            1
        }
    }

    pub fn ramification_index(&self) -> u32 {
        if self.kind == Ramification::Ramified {
            2
        } else {
            1
        }
    }

    /// Size of the residue field.
    pub fn q(&self) -> u64 {
        self.p.pow(self.residue_degree())
    }

    /// Valuation of the discriminant of `K/Q_p`.
    pub fn disc_valuation(&self) -> u32 {
        self.disc_val
    }

    /// Relation `w^2 = s w + n`.
    pub fn relation(&self) -> (i128, i128) {
        (self.s, self.n)
    }

    pub fn uniformizer(&self) -> Elt {
        match self.kind {
            Ramification::Ramified => Elt::new(0, 1),
            _ => Elt::int(self.p as i128),
        }
    }

    pub fn mul(&self, x: &Elt, y: &Elt) -> Elt {
        Elt::new(
            x.a * y.a + self.n * x.b * y.b,
            x.a * y.b + x.b * y.a + self.s * x.b * y.b,
        )
    }

    pub fn conj(&self, x: &Elt) -> Elt {
        if self.kind == Ramification::Split {
            return *x;
        }
        Elt::new(x.a + self.s * x.b, -x.b)
    }

    pub fn norm(&self, x: &Elt) -> i128 {
        if self.kind == Ramification::Split {
            return x.a;
        }
        x.a * x.a + self.s * x.a * x.b - self.n * x.b * x.b
    }

    pub fn trace(&self, x: &Elt) -> i128 {
        if self.kind == Ramification::Split {
            return x.a;
        }
        2 * x.a + self.s * x.b
    }

    /// Normalized valuation of a nonzero integral element.
    pub fn valuation(&self, x: &Elt) -> u32 {
        let v = |c: i128| if c == 0 { u32::MAX / 4 } else { crate::arith::val(c, self.p) };
        match self.kind {
            Ramification::Split => v(x.a),
            Ramification::Unramified => v(x.a).min(v(x.b)),
            Ramification::Ramified => (2 * v(x.a)).min(2 * v(x.b) + 1),
        }
    }

    /// Moduli for the two coordinates of O/pi^k.
    pub fn coordinate_moduli(&self, k: u32) -> (u128, u128) {
        let p = self.p as u128;
        match self.kind {
            Ramification::Split => (p.pow(k), 1),
            Ramification::Unramified => (p.pow(k), p.pow(k)),
            Ramification::Ramified => (p.pow(k.div_ceil(2)), p.pow(k / 2)),
        }
    }

    /// Canonical representative of `x` modulo pi^k.
    pub fn reduce(&self, x: &Elt, k: u32) -> Elt {
        let (ma, mb) = self.coordinate_moduli(k);
        Elt::new(reduce_i128(x.a, ma) as i128, reduce_i128(x.b, mb) as i128)
    }

    pub fn is_unit(&self, x: &Elt) -> bool {
        let p = self.p as i128;
        match self.kind {
            Ramification::Unramified => x.a % p != 0 || x.b % p != 0,
            _ => x.a % p != 0,
        }
    }

    /// All canonical representatives of O/pi^k, in increasing order.
    pub fn representatives(&self, k: u32) -> Vec<Elt> {
        let (ma, mb) = self.coordinate_moduli(k);
        let mut out = Vec::with_capacity((ma * mb) as usize);
        for a in 0..ma as i128 {
            for b in 0..mb as i128 {
                out.push(Elt::new(a, b));
            }
        }
        out
    }

    /// `x^e mod pi^k`.
    pub fn pow_mod(&self, x: &Elt, mut e: u128, k: u32) -> Elt {
        let mut r = self.reduce(&Elt::int(1), k);
        let mut b = self.reduce(x, k);
        while e > 0 {
            if e & 1 == 1 {
                r = self.reduce(&self.mul(&r, &b), k);
            }
            b = self.reduce(&self.mul(&b, &b), k);
            e >>= 1;
        }
        r
    }

    /// Write an integral `x != 0` as `pi^v u` and return `v` and `u mod pi^k`.
    pub fn split_unit(&self, x: &Elt, k: u32) -> Result<(u32, Elt)> {
        if x.a == 0 && x.b == 0 {
            return Err(Error::DivisionByZero);
        }
        let v = self.valuation(x);
        let p = self.p as i128;
        // work modulo p^(v+k+1) so that the divisions below stay exact
        let big = checked_pow(self.p, v + k + 2)?;
        let mut u = Elt::new(reduce_i128(x.a, big) as i128, reduce_i128(x.b, big) as i128);
        match self.kind {
            Ramification::Ramified => {
                let cp = self.conj(&self.uniformizer());
                let w_inv = inv_mod(reduce_i128(self.norm_pi_unit, big), big).ok_or(Error::NotUnit)?
                    as i128;
                for _ in 0..v {
                    let y = self.mul(&u, &cp);
                    debug_assert!(y.a % p == 0 && y.b % p == 0);
                    u = Elt::new(y.a / p * w_inv % big as i128, y.b / p * w_inv % big as i128);
                }
            }
            _ => {
                for _ in 0..v {
                    u = Elt::new(u.a / p, u.b / p);
                }
            }
        }
        Ok((v, self.reduce(&u, k)))
    }

    /// `phi_p(scale * Tr(x * pi^-m))` for integral `x`, with `scale = unit * p^sv`
    /// and `phi_p(y) = exp(2 pi i {y}_p)`.
    pub fn additive_phase(&self, x: &Elt, m: i64, unit: i128, sv: i64) -> Result<RootOfUnity> {
        // Tr(x pi^-m) = Tr(x conj(pi)^m) / (p^{f m} w0^m)
        let (num, den_pow, w_pow) = if m <= 0 {
            let pm = self.pow_int(&self.uniformizer(), (-m) as u32);
            (self.trace(&self.mul(x, &pm)), 0i64, 0u32)
        } else {
            match self.kind {
                Ramification::Split => (x.a, m, 0),
                Ramification::Unramified => (self.trace(x), m, 0),
                Ramification::Ramified => {
                    let cp = self.pow_int(&self.conj(&self.uniformizer()), m as u32);
                    (self.trace(&self.mul(x, &cp)), m, m as u32)
                }
            }
        };
        let e = den_pow - sv;
        if e <= 0 {
            return Ok(RootOfUnity::one());
        }
        let e = e as u32;
        let modulus = checked_pow(self.p, e)?;
        let mut r = reduce_i128(num, modulus);
        r = crate::arith::mul_mod(r, reduce_i128(unit, modulus), modulus);
        if w_pow > 0 {
            let w = reduce_i128(self.norm_pi_unit, modulus);
            let winv = inv_mod(w, modulus).ok_or(Error::NotUnit)?;
            r = crate::arith::mul_mod(r, crate::arith::pow_mod(winv, w_pow as u128, modulus), modulus);
        }
        Ok(RootOfUnity::new(r as i128, modulus as u64))
    }

    fn pow_int(&self, x: &Elt, e: u32) -> Elt {
        let mut r = Elt::int(1);
        for _ in 0..e {
            r = self.mul(&r, x);
        }
        r
    }

    /// Additive conductor of `phi o Tr` when `n(phi) = n`.
    pub fn trace_conductor(&self, n: i64) -> i64 {
        match self.kind {
            Ramification::Split | Ramification::Unramified => n,
            Ramification::Ramified => 2 * n + self.disc_val as i64,
        }
    }

    /// A generator of the residue field's multiplicative group, as an element.
    fn residue_generator(&self) -> Elt {
        let p = self.p;
        if self.kind != Ramification::Unramified {
            return Elt::int(primitive_root(p) as i128);
        }
        let order = (p * p - 1) as u128;
        let fs = crate::arith::factorize(p * p - 1);
        for a in 0..p as i128 {
            for b in 1..p as i128 {
                let x = Elt::new(a, b);
                let ok = fs.iter().all(|&(q, _)| {
                    let y = self.pow_mod(&x, order / q as u128, 1);
                    y != Elt::new(1, 0)
                });
                if ok {
                    return x;
                }
            }
        }
        unreachable!("F_q^x is cyclic")
    }
}

/// The norm residue symbol `(x, K|Q_p)`, tabulated on `Z_p^x / (1 + p^level)`.
#[derive(Clone, Debug)]
pub struct NormSymbol {
    p: u64,
    level: u32,
    modulus: u128,
    unit_norm: Vec<bool>,
    at_p: i8,
}

impl NormSymbol {
    pub fn new(field: &LocalField) -> Result<Self> {
        let p = field.p();
        let level = if p == 2 { 3 } else { 1 };
        let modulus = checked_pow(p, level)?;
        let mut unit_norm = vec![false; modulus as usize];
        if field.kind() == Ramification::Split {
            for u in 0..modulus {
                unit_norm[u as usize] = u % p as u128 != 0;
            }
            return Ok(NormSymbol { p, level, modulus, unit_norm, at_p: 1 });
        }
        // N(1 + pi^{e l} O) lies in 1 + p^l Z_p
        let k = level * field.ramification_index();
        for x in field.representatives(k) {
            if field.is_unit(&x) {
                unit_norm[reduce_i128(field.norm(&x), modulus) as usize] = true;
            }
        }
        let units = (0..modulus).filter(|u| u % p as u128 != 0).count();
        let norms = unit_norm.iter().filter(|&&b| b).count();
        let expected = if field.kind() == Ramification::Ramified { units / 2 } else { units };
        if norms != expected {
            return Err(Error::InvalidInput("unit norm group has the wrong index"));
        }
        let at_p = match field.kind() {
            Ramification::Unramified => -1,
            // N(pi) = p w0, so p is a norm iff w0 is
            _ => {
                if unit_norm[reduce_i128(field.norm_pi_unit, modulus) as usize] {
                    1
                } else {
                    -1
                }
            }
        };
        Ok(NormSymbol { p, level, modulus, unit_norm, at_p })
    }

    /// Every unit congruent to 1 mod `p^level` is a norm.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Symbol of a unit given by an integer prime to p.
    pub fn unit(&self, u: i128) -> Result<i8> {
        let r = reduce_i128(u, self.modulus);
        if r % self.p as u128 == 0 {
            return Err(Error::NotUnit);
        }
        Ok(if self.unit_norm[r as usize] { 1 } else { -1 })
    }

    /// `(p, K|Q_p)`.
    pub fn at_p(&self) -> i8 {
        self.at_p
    }

    /// `(num/den, K|Q_p)` for a nonzero rational.
    pub fn eval(&self, num: i128, den: i128) -> Result<i8> {
        if num == 0 || den == 0 {
            return Err(Error::DivisionByZero);
        }
        let p = self.p as i128;
        let (mut n, mut d, mut v) = (num, den, 0i64);
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        while d % p == 0 {
            d /= p;
            v -= 1;
        }
        let s = self.unit(n)? * self.unit(d)?;
        Ok(if v.rem_euclid(2) == 1 { s * self.at_p } else { s })
    }
}

/// `(x, K|Q_p)` for a nonzero rational `x = num/den`.
pub fn norm_symbol(num: i128, den: i128, field: &LocalField) -> Result<i8> {
    NormSymbol::new(field)?.eval(num, den)
}

/// `(O/pi^a)^x` with a fixed generating set and discrete logarithms.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    field: LocalField,
    level: u32,
    size: u64,
    gens: Vec<Elt>,
    orders: Vec<u64>,
    exponent: u64,
    mb: u128,
    /// per code: exponent vector, or empty for non-units
    dlog: Vec<u32>,
    /// per code: largest m with x in U^m (0 outside U^1)
    depth: Vec<u8>,
}

impl UnitGroup {
    pub fn new(field: &LocalField, level: u32) -> Result<Arc<Self>> {
        let q = field.q();
        let size = if level == 0 {
            1
        } else {
            let big = (q as u128 - 1) * (q as u128).pow(level - 1);
            if big > MAX_GROUP_SIZE as u128 {
                return Err(Error::TooLarge {
                    size: big.min(u64::MAX as u128) as u64,
                    limit: MAX_GROUP_SIZE,
                });
            }
            big as u64
        };
        let (ma, mb) = field.coordinate_moduli(level);
        let codes = (ma * mb) as usize;
        let code = |x: &Elt| (x.a as u128 * mb + x.b as u128) as usize;
        let reps = field.representatives(level);
        let one = field.reduce(&Elt::int(1), level);

        let mut gens = Vec::new();
        let mut orders = Vec::new();
        if level >= 1 && q > 2 {
            let r = field.residue_generator();
            let t = field.pow_mod(&r, (field.p as u128).pow(level), level);
            gens.push(t);
            orders.push(q - 1);
        }

        // p-part: greedy choice of independent elements of maximal order
        let p = field.p as u128;
        let mut depth = vec![0u8; codes];
        let mut principal = Vec::new();
        for x in &reps {
            if !field.is_unit(x) {
                continue;
            }
            let d = field.valuation(&Elt::new(x.a - one.a, x.b - one.b)).min(level);
            depth[code(x)] = d as u8;
            if d >= 1 {
                principal.push(*x);
            }
        }
        let p_order = |x: &Elt| -> u64 {
            let mut y = *x;
            let mut o = 1u64;
            while y != one {
                y = field.pow_mod(&y, p, level);
                o *= p as u64;
            }
            o
        };
        let mut ords: Vec<(u64, Elt)> = principal.iter().map(|x| (p_order(x), *x)).collect();
        // stable: larger order first, then canonical order
        ords.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let target = if level == 0 { 1 } else { (q as u128).pow(level - 1) as u64 };
        let mut span = vec![false; codes];
        span[code(&one)] = true;
        let mut members = vec![one];
        while (members.len() as u64) < target {
            let pick = ords.iter().find(|(o, x)| {
                if *o == 1 {
                    return false;
                }
                let low = field.pow_mod(x, (*o / p as u64) as u128, level);
                !span[code(&low)]
            });
            let (o, g) = match pick {
                Some(&(o, g)) => (o, g),
                None => return Err(Error::InvalidInput("unit group decomposition failed")),
            };
            let mut next = Vec::with_capacity(members.len() * o as usize);
            let mut gp = one;
            for _ in 0..o {
                for m in &members {
                    let y = field.reduce(&field.mul(m, &gp), level);
                    span[code(&y)] = true;
                    next.push(y);
                }
                gp = field.reduce(&field.mul(&gp, &g), level);
            }
            members = next;
            gens.push(g);
            orders.push(o);
        }
        if orders.iter().product::<u64>() != size {
            return Err(Error::InvalidInput("generator orders do not multiply to the group order"));
        }

        let k = gens.len();
        let mut dlog = vec![u32::MAX; codes * k.max(1)];
        let mut exps = vec![0u64; k];
        let mut cur = one;
        for _ in 0..size {
            let c = code(&cur);
            for i in 0..k {
                dlog[c * k + i] = exps[i] as u32;
            }
            // odometer step
            let mut i = 0;
            while i < k {
                exps[i] += 1;
                cur = field.reduce(&field.mul(&cur, &gens[i]), level);
                if exps[i] < orders[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
        let exponent = orders.iter().fold(1u64, |acc, &o| acc / gcd(acc, o) * o);
        Ok(Arc::new(UnitGroup {
            field: field.clone(),
            level,
            size,
            gens,
            orders,
            exponent,
            mb,
            dlog,
            depth,
        }))
    }

    pub fn field(&self) -> &LocalField {
        &self.field
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn generators(&self) -> &[Elt] {
        &self.gens
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Least common multiple of the generator orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    fn code(&self, x: &Elt) -> usize {
        (x.a as u128 * self.mb + x.b as u128) as usize
    }

    /// Exponents of a unit in terms of the generators.
    pub fn dlog(&self, x: &Elt) -> Result<Vec<u64>> {
        let y = self.field.reduce(x, self.level);
        let k = self.gens.len();
        if k == 0 {
            return if self.field.is_unit(&y) || self.level == 0 { Ok(Vec::new()) } else { Err(Error::NotUnit) };
        }
        let c = self.code(&y);
        if self.dlog[c * k] == u32::MAX {
            return Err(Error::NotUnit);
        }
        Ok(self.dlog[c * k..(c + 1) * k].iter().map(|&e| e as u64).collect())
    }

    /// Largest `m <= level` with `x` in U^m; 0 when `x` is not 1 mod pi.
    pub fn depth(&self, x: &Elt) -> u32 {
        let y = self.field.reduce(x, self.level);
        self.depth[self.code(&y)] as u32
    }

    /// Elements generating `U^j` modulo `U^(j+1)`: the tame generator for
    /// `j = 0`, and `1 + pi^j beta` over an F_p-basis of the residue field otherwise.
    pub fn layer_generators(&self, j: u32) -> Vec<Elt> {
        let f = &self.field;
        if j >= self.level {
            return Vec::new();
        }
        if j == 0 {
            return if f.q() > 2 { vec![self.gens[0]] } else { Vec::new() };
        }
        let pij = f.pow_int(&f.uniformizer(), j);
        let basis: &[Elt] = if f.kind == Ramification::Unramified {
            &[Elt::int(1), Elt::new(0, 1)]
        } else {
            &[Elt::int(1)]
        };
        basis
            .iter()
            .map(|b| {
                let y = f.mul(&pij, b);
                f.reduce(&Elt::new(y.a + 1, y.b), self.level)
            })
            .collect()
    }

    pub fn inv(&self, x: &Elt) -> Elt {
        self.field.pow_mod(x, self.exponent as u128 - 1, self.level)
    }

    /// All units, as canonical representatives.
    pub fn elements(&self) -> Vec<Elt> {
        self.field
            .representatives(self.level)
            .into_iter()
            .filter(|x| self.level == 0 || self.field.is_unit(x))
            .collect()
    }

    pub fn mul(&self, x: &Elt, y: &Elt) -> Elt {
        self.field.reduce(&self.field.mul(x, y), self.level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_types() {
        let k = LocalField::quadratic(3, -1).unwrap();
        assert_eq!(k.kind(), Ramification::Unramified);
        let k = LocalField::quadratic(3, 3).unwrap();
        assert_eq!(k.kind(), Ramification::Ramified);
        assert_eq!(k.disc_valuation(), 1);
        for (t, d) in [(-1, 2), (3, 2), (2, 3), (-2, 3), (6, 3), (-6, 3)] {
            let k = LocalField::quadratic(2, t).unwrap();
            assert_eq!(k.kind(), Ramification::Ramified);
            assert_eq!(k.disc_valuation(), d, "t={t}");
            // the uniformizer has valuation one
            assert_eq!(k.valuation(&k.uniformizer()), 1);
            assert_eq!(crate::arith::val(k.norm(&k.uniformizer()), 2), 1);
        }
        let k = LocalField::quadratic(2, -3).unwrap();
        assert_eq!(k.kind(), Ramification::Unramified);
        assert!(LocalField::quadratic(2, 17).is_err());
        assert!(LocalField::quadratic(5, -1).is_err());
    }

    #[test]
    fn group_orders() {
        for (p, t, a) in [(3u64, Some(-1i64), 3u32), (3, Some(3), 4), (2, Some(-1), 6), (2, Some(6), 5), (5, None, 3), (2, None, 5), (2, Some(-3), 3)] {
            let k = match t {
                Some(t) => LocalField::quadratic(p, t).unwrap(),
                None => LocalField::rationals(p).unwrap(),
            };
            let g = UnitGroup::new(&k, a).unwrap();
            let q = k.q();
            assert_eq!(g.size(), (q - 1) * q.pow(a - 1));
            assert_eq!(g.orders().iter().product::<u64>(), g.size());
            assert_eq!(g.elements().len() as u64, g.size());
            // dlogs are distinct
            let mut seen: Vec<Vec<u64>> = g.elements().iter().map(|x| g.dlog(x).unwrap()).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len() as u64, g.size());
        }
    }

    #[test]
    fn two_adic_units_mod_eight() {
        let q2 = LocalField::rationals(2).unwrap();
        let g = UnitGroup::new(&q2, 3).unwrap();
        assert_eq!(g.orders(), &[2, 2]);
        let g = UnitGroup::new(&q2, 5).unwrap();
        let mut o = g.orders().to_vec();
        o.sort();
        assert_eq!(o, vec![2, 8]);
    }

    #[test]
    fn guard_rejects_large_groups() {
        let k = LocalField::quadratic(31, -1).unwrap();
        assert!(matches!(UnitGroup::new(&k, 3), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn split_unit_and_phase() {
        let k = LocalField::quadratic(3, 3).unwrap();
        let x = Elt::new(3, 6); // 3(1 + 2 sqrt 3)
        let (v, u) = k.split_unit(&x, 3).unwrap();
        assert_eq!(v, 2);
        // pi^2 u == x modulo pi^5
        let pi = k.uniformizer();
        let back = k.reduce(&k.mul(&k.mul(&pi, &pi), &u), 5);
        assert_eq!(back, k.reduce(&x, 5));
        // phi(Tr(1/pi^2)) with phi canonical: Tr(1/3) = 2/3
        assert_eq!(k.additive_phase(&Elt::int(1), 2, 1, 0).unwrap(), RootOfUnity::new(2, 3));
    }

    #[test]
    fn norm_symbol_examples() {
        // p = N(p) up to the unit check: unramified K has (p, K) = -1 since v(N x) is even
        let k = LocalField::quadratic(5, 2).unwrap();
        assert_eq!(norm_symbol(5, 1, &k).unwrap(), -1);
        assert_eq!(norm_symbol(25, 3, &k).unwrap(), 1);
        // K = Q_5(sqrt(-5 * 2)) where 2 is a non-square unit
        let k = LocalField::quadratic(5, -10).unwrap();
        assert_eq!(norm_symbol(5, 1, &k).unwrap(), -1);
        let k = LocalField::quadratic(5, -5).unwrap();
        assert_eq!(norm_symbol(5, 1, &k).unwrap(), 1);
    }

    #[test]
    fn norm_symbol_is_trivial_on_norms_and_multiplicative() {
        let fields = [(3u64, -1i64), (3, 3), (3, -3), (5, 5), (5, 10), (7, -7), (2, -3), (2, -1), (2, 3), (2, 2), (2, -2), (2, 6), (2, -6)];
        for (p, t) in fields {
            let k = LocalField::quadratic(p, t).unwrap();
            let s = NormSymbol::new(&k).unwrap();
            for x in k.representatives(4) {
                if x == Elt::int(0) {
                    continue;
                }
                assert_eq!(s.eval(k.norm(&x), 1).unwrap(), 1, "p={p} t={t} x={x:?}");
            }
            let qs: Vec<i128> = (1..40).filter(|x| x % p as i128 != 0).collect();
            for &a in &qs {
                for &b in &qs {
                    let lhs = s.eval(a * b * p as i128, 1).unwrap();
                    let rhs = s.eval(a * p as i128, 1).unwrap() * s.eval(b, 1).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
