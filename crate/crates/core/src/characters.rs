//! Multiplicative and additive characters of Q_p, its quadratic extensions
//! and finite fields.
//!
//! A multiplicative character lives on a unit group `(O/pi^L)^x` and is
//! given by one exponent per generator, so `chi(g_i) = zeta_{ord_i}^{e_i}`.
//! Its value at the uniformizer is carried separately and may be unset.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, lcm};
use crate::cyclotomic::RootOfUnity;
use crate::error::{Error, Result};
use crate::residue::{Elt, FiniteField, LocalField, NormSymbol, Ramification, UnitGroup};

#[derive(Clone, Debug)]
pub struct MultChar {
    group: Arc<UnitGroup>,
    exps: Vec<u64>,
    unif: Option<RootOfUnity>,
    conductor: u32,
}

impl PartialEq for MultChar {
    fn eq(&self, o: &Self) -> bool {
        self.group.field() == o.group.field()
            && self.group.level() == o.group.level()
            && self.exps == o.exps
            && self.unif == o.unif
    }
}

impl MultChar {
    pub fn new(group: Arc<UnitGroup>, exps: Vec<u64>, unif: Option<RootOfUnity>) -> Result<Self> {
        if exps.len() != group.orders().len() {
            return Err(Error::BadCharacter("one exponent per generator expected"));
        }
        let exps = exps.iter().zip(group.orders()).map(|(&e, &o)| e % o).collect();
        let mut c = MultChar { group, exps, unif, conductor: 0 };
        c.conductor = c.compute_conductor();
        Ok(c)
    }

    pub fn trivial(group: Arc<UnitGroup>) -> Self {
        let n = group.orders().len();
        MultChar::new(group, alloc::vec![0; n], Some(RootOfUnity::one())).expect("shape matches")
    }

    /// The character agreeing with `f` on the generators. `f` must be a
    /// homomorphism trivial on `U^L`; only the generator orders are checked.
    pub fn from_values<F>(group: Arc<UnitGroup>, unif: Option<RootOfUnity>, f: F) -> Result<Self>
    where
        F: Fn(&Elt) -> Result<RootOfUnity>,
    {
        let mut exps = Vec::with_capacity(group.orders().len());
        for (g, &o) in group.generators().iter().zip(group.orders()) {
            let v = f(g)?;
            if o % v.order() != 0 {
                return Err(Error::BadCharacter("value order does not divide generator order"));
            }
            exps.push(v.num() * (o / v.order()));
        }
        MultChar::new(group, exps, unif)
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    pub fn field(&self) -> &LocalField {
        self.group.field()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn uniformizer_value(&self) -> Option<RootOfUnity> {
        self.unif
    }

    pub fn with_uniformizer(&self, u: Option<RootOfUnity>) -> Self {
        MultChar { unif: u, ..self.clone() }
    }

    /// Order of the restriction to the units.
    pub fn order(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.group.orders())
            .fold(1, |acc, (&e, &o)| lcm(acc, o / gcd(e, o)))
    }

    pub fn is_trivial_on_units(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn from_dlog(&self, d: &[u64]) -> RootOfUnity {
        let m = self.group.exponent() as u128;
        let mut num = 0u128;
        for ((&e, &x), &o) in self.exps.iter().zip(d).zip(self.group.orders()) {
            num = (num + e as u128 * x as u128 % o as u128 * (m / o as u128)) % m;
        }
        RootOfUnity::new(num as i128, m as u64)
    }

    /// `chi(u)` for a unit `u`.
    pub fn value_unit(&self, u: &Elt) -> Result<RootOfUnity> {
        Ok(self.from_dlog(&self.group.dlog(u)?))
    }

    fn unif_pow(&self, v: i64) -> Result<RootOfUnity> {
        if v == 0 {
            return Ok(RootOfUnity::one());
        }
        self.unif
            .map(|r| r.pow(v))
            .ok_or(Error::BadCharacter("value at the uniformizer is not set"))
    }

    /// `chi(pi^v u)`.
    pub fn value_scaled(&self, v: i64, u: &Elt) -> Result<RootOfUnity> {
        Ok(self.unif_pow(v)?.mul(&self.value_unit(u)?))
    }

    /// `chi(x)` for a nonzero integral element.
    pub fn value(&self, x: &Elt) -> Result<RootOfUnity> {
        let (v, u) = self.field().split_unit(x, self.group.level())?;
        self.value_scaled(v as i64, &u)
    }

    /// `chi(num/den)` for a nonzero rational number.
    pub fn value_rational(&self, num: i128, den: i128) -> Result<RootOfUnity> {
        if num == 0 || den == 0 {
            return Err(Error::DivisionByZero);
        }
        let p = self.field().p() as i128;
        let (mut n, mut d, mut v) = (num, den, 0i64);
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        while d % p == 0 {
            d /= p;
            v -= 1;
        }
        let at_p = if v == 0 { RootOfUnity::one() } else { self.value(&Elt::int(p))?.pow(v) };
        let un = self.value_unit(&Elt::int(n))?;
        let ud = self.value_unit(&Elt::int(d))?;
        Ok(at_p.mul(&un).mul(&ud.inv()))
    }

    fn compute_conductor(&self) -> u32 {
        let level = self.group.level();
        let mut a = 0;
        for j in (0..level).rev() {
            let trivial = self.group.layer_generators(j).iter().all(|g| {
                self.value_unit(g).map(|r| r == RootOfUnity::one()).unwrap_or(false)
            });
            if !trivial {
                a = j + 1;
                break;
            }
        }
        a
    }

    /// Least `m` with `chi` trivial on `U^m`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    fn same_group(&self, o: &Self) -> Result<()> {
        if self.group.field() != o.group.field() || self.group.level() != o.group.level() {
            return Err(Error::Mismatch("characters live on different groups"));
        }
        Ok(())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_group(o)?;
        let exps = self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect();
        let unif = match (self.unif, o.unif) {
            (Some(a), Some(b)) => Some(a.mul(&b)),
            _ => None,
        };
        MultChar::new(self.group.clone(), exps, unif)
    }

    pub fn pow(&self, k: i64) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(self.group.orders())
            .map(|(&e, &o)| ((e as i128 * k as i128).rem_euclid(o as i128)) as u64)
            .collect();
        MultChar::new(self.group.clone(), exps, self.unif.map(|r| r.pow(k))).expect("shape matches")
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// The same character on another unit group of the same field.
    pub fn transfer(&self, group: Arc<UnitGroup>) -> Result<Self> {
        if group.field() != self.field() || group.level() < self.conductor {
            return Err(Error::Mismatch("character is deeper than the target group"));
        }
        MultChar::from_values(group, self.unif, |g| self.value_unit(g))
    }

    /// `theta o N_{K|Q_p}` on a unit group of `K`.
    pub fn norm_inflate(&self, group: Arc<UnitGroup>) -> Result<Self> {
        if self.field().kind() != Ramification::Split {
            return Err(Error::Mismatch("norm inflation starts from a character of Q_p"));
        }
        let k = group.field().clone();
        if k.p() != self.field().p() {
            return Err(Error::Mismatch("prime"));
        }
        let e = k.ramification_index();
        if group.level().div_ceil(e) < self.conductor {
            return Err(Error::BadCharacter("unit group level too small for the inflated character"));
        }
        let unif = match self.unif {
            Some(_) => Some(self.value_rational(k.norm(&k.uniformizer()), 1)?),
            None => None,
        };
        MultChar::from_values(group, unif, |x| self.value_rational(k.norm(x), 1))
    }

    /// Whether `chi` is trivial on the norm-one elements of `U^m`, i.e. whether
    /// `chi` restricted to `U^m` factors through the norm.
    pub fn factors_through_norm_on(&self, m: u32) -> Result<bool> {
        let g = &self.group;
        let k = g.field();
        if k.kind() == Ramification::Split {
            return Ok(true);
        }
        let level = g.level();
        // norm-one elements are y / conj(y) with y a unit or pi times a unit
        let shift = match k.kind() {
            Ramification::Ramified => {
                let (_, u) = k.split_unit(&k.conj(&k.uniformizer()), level)?;
                Some(g.inv(&u))
            }
            _ => None,
        };
        for y in g.elements() {
            let z = g.mul(&y, &g.inv(&k.reduce(&k.conj(&y), level)));
            let mut cands = alloc::vec![z];
            if let Some(s) = shift {
                cands.push(g.mul(&z, &s));
            }
            for z in cands {
                let deep = if m == 0 { true } else { g.depth(&z) >= m };
                if deep && self.value_unit(&z)? != RootOfUnity::one() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Conditions (1) and (2) of an admissible pair, and minimality:
    /// `chi` on `U^{a-1}` does not factor through the norm.
    pub fn admissible_and_minimal(&self) -> Result<(bool, bool)> {
        let k = self.field();
        if k.kind() == Ramification::Split {
            return Err(Error::Mismatch("admissible pairs need a quadratic extension"));
        }
        let mut admissible = !self.factors_through_norm_on(0)?;
        if k.kind() == Ramification::Ramified {
            admissible = admissible && !self.factors_through_norm_on(1)?;
        }
        let l = self.conductor.max(1) - 1;
        let minimal = !self.factors_through_norm_on(l)?;
        Ok((admissible, minimal))
    }
}

/// Every character of `group`, exponents in lexicographic order.
pub fn enumerate_mult_chars(group: &Arc<UnitGroup>, unif: Option<RootOfUnity>) -> Vec<MultChar> {
    let orders = group.orders().to_vec();
    let mut out = Vec::with_capacity(group.size() as usize);
    let mut exps = alloc::vec![0u64; orders.len()];
    loop {
        out.push(MultChar::new(group.clone(), exps.clone(), unif).expect("shape matches"));
        let mut i = orders.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
        }
    }
}

/// The norm residue character `omega_{K|Q_p}` on a unit group of Q_p.
pub fn norm_residue_char(k: &LocalField, group: Arc<UnitGroup>) -> Result<MultChar> {
    let sym = NormSymbol::new(k)?;
    if group.field().kind() != Ramification::Split || group.field().p() != k.p() {
        return Err(Error::Mismatch("expected a unit group of Q_p"));
    }
    let sign = |s: i8| if s == 1 { RootOfUnity::one() } else { RootOfUnity::minus_one() };
    let unif = Some(sign(sym.at_p()));
    if group.level() >= sym.level() {
        return MultChar::from_values(group, unif, |u| Ok(sign(sym.unit(u.a)?)));
    }
    let full = UnitGroup::new(group.field(), sym.level())?;
    let w = MultChar::from_values(full, unif, |u| Ok(sign(sym.unit(u.a)?)))?;
    if w.conductor() > group.level() {
        return Err(Error::BadCharacter("norm residue character is deeper than the group"));
    }
    MultChar::from_values(group, unif, |u| w.value_unit(u))
}

/// The quadratic character of Q_p^x used for twisting: the Legendre symbol
/// on units for odd p, the Hilbert symbol `(x, 2)` for p = 2; value 1 at p.
pub fn quadratic_twist(group: Arc<UnitGroup>) -> Result<MultChar> {
    let p = group.field().p();
    if p == 2 {
        let k = LocalField::quadratic(2, 2)?;
        return norm_residue_char(&k, group);
    }
    MultChar::from_values(group, Some(RootOfUnity::one()), |u| {
        Ok(if crate::arith::legendre(u.a, p) == 1 {
            RootOfUnity::one()
        } else {
            RootOfUnity::minus_one()
        })
    })
}

/// Additive character `x -> phi_p(s Tr(x))` with `s = unit * p^sv` and
/// `phi_p(y) = exp(2 pi i {y}_p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AddChar {
    field: LocalField,
    unit: i128,
    sv: i64,
}

impl AddChar {
    pub fn new(field: &LocalField, unit: i128, sv: i64) -> Result<Self> {
        if unit % field.p() as i128 == 0 {
            return Err(Error::InvalidInput("scale unit must be prime to p"));
        }
        Ok(AddChar { field: field.clone(), unit, sv })
    }

    /// `p^{-n} phi_p` composed with the trace, so the base character has conductor `n`.
    pub fn with_conductor(field: &LocalField, n: i64) -> Self {
        AddChar { field: field.clone(), unit: 1, sv: n }
    }

    pub fn field(&self) -> &LocalField {
        &self.field
    }

    pub fn scale(&self) -> (i128, i64) {
        (self.unit, self.sv)
    }

    /// Conductor of the underlying character of Q_p.
    pub fn base_conductor(&self) -> i64 {
        self.sv
    }

    /// Conductor on the field itself, in powers of its uniformizer.
    pub fn conductor(&self) -> i64 {
        self.field.trace_conductor(self.sv)
    }

    /// `phi(x pi^-m)` for integral `x`.
    pub fn eval(&self, x: &Elt, m: i64) -> Result<RootOfUnity> {
        self.field.additive_phase(x, m, self.unit, self.sv)
    }

    /// The same base character on another field (composed with its trace).
    pub fn on(&self, field: &LocalField) -> Self {
        AddChar { field: field.clone(), ..self.clone() }
    }
}

/// Solution of `chi(1 + x) = phi(c x)` for `x` in `p^r`, returned as
/// `(v(c), u)` with `c = pi^v(c) u`.
pub fn solve_c(chi: &MultChar, phi: &AddChar, r: u32) -> Result<(i64, Elt)> {
    let k = chi.field();
    if phi.field() != k {
        return Err(Error::Mismatch("characters on different fields"));
    }
    let a = chi.conductor();
    let n = phi.conductor();
    if a == 0 {
        return Ok((-n, Elt::int(1)));
    }
    if r == 0 || 2 * r < a {
        return Err(Error::InvalidInput("need 2r >= a(chi) and r >= 1"));
    }
    let v = -(a as i64 + n);
    let span = a.saturating_sub(r);
    let pir = {
        let mut t = Elt::int(1);
        for _ in 0..r {
            t = k.mul(&t, &k.uniformizer());
        }
        t
    };
    let ys = k.representatives(span);
    let units: Vec<Elt> = if span == 0 {
        alloc::vec![Elt::int(1)]
    } else {
        ys.iter().copied().filter(|y| k.is_unit(y)).collect()
    };
    let lhs: Vec<RootOfUnity> = ys
        .iter()
        .map(|y| {
            let x = k.mul(&pir, y);
            chi.value_unit(&Elt::new(x.a + 1, x.b))
        })
        .collect::<Result<_>>()?;
    for u in units {
        let mut ok = true;
        for (y, l) in ys.iter().zip(&lhs) {
            // c x = u y pi^{v + r}
            if phi.eval(&k.mul(&u, y), -(v + r as i64))? != *l {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok((v, u));
        }
    }
    Err(Error::BadCharacter("no c satisfies chi(1+x) = phi(cx)"))
}

/// A character of `F_q^x`: `chi(g) = zeta_{q-1}^exp` for the fixed generator `g`.
#[derive(Clone, Debug)]
pub struct FiniteFieldChar {
    field: Arc<FiniteField>,
    exp: u64,
}

impl FiniteFieldChar {
    pub fn new(field: Arc<FiniteField>, exp: u64) -> Self {
        let m = field.order() - 1;
        FiniteFieldChar { field, exp: exp % m }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn order(&self) -> u64 {
        let m = self.field.order() - 1;
        m / gcd(self.exp, m)
    }

    pub fn is_trivial(&self) -> bool {
        self.exp == 0
    }

    pub fn value(&self, x: u32) -> Result<RootOfUnity> {
        let m = self.field.order() - 1;
        let k = self.field.log(x)?;
        Ok(RootOfUnity::new((self.exp as u128 * k as u128 % m as u128) as i128, m))
    }

    pub fn pow(&self, k: i64) -> Self {
        let m = (self.field.order() - 1) as i128;
        FiniteFieldChar::new(self.field.clone(), (self.exp as i128 * k as i128).rem_euclid(m) as u64)
    }

    /// `chi o N` on an extension of the prime field.
    pub fn norm_lift(&self, ext: Arc<FiniteField>) -> Result<Self> {
        if self.field.degree() != 1 || ext.p() != self.field.p() {
            return Err(Error::Mismatch("norm lift starts from the prime field"));
        }
        let p = self.field.p();
        let big = ext.order() - 1;
        let j = self.field.log(ext.norm(ext.generator()) as u32)?;
        let e = self.exp as u128 * j as u128 % (p - 1) as u128 * (big / (p - 1)) as u128;
        Ok(FiniteFieldChar::new(ext, (e % big as u128) as u64))
    }
}

/// Every character of `F_q^x`, by exponent.
pub fn enumerate_finite_chars(field: &Arc<FiniteField>) -> Vec<FiniteFieldChar> {
    (0..field.order() - 1).map(|e| FiniteFieldChar::new(field.clone(), e)).collect()
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.field();
        write!(f, "{}^{}", k.p(), self.group.level())?;
        if let Some(t) = k.t() {
            write!(f, "[{t}]")?;
        }
        write!(f, ":exponents=[")?;
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]:unif=")?;
        match self.unif {
            Some(r) => write!(f, "ζ_{}^{}", r.order(), r.num()),
            None => write!(f, "?"),
        }
    }
}

/// Parsed form of `p^a[t]:exponents=[...]:unif=ζ_M^k`; `[t]` is present for
/// characters of `Q_p(sqrt t)` and `unif=?` leaves the uniformizer value unset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSpec {
    pub p: u64,
    pub level: u32,
    pub t: Option<i64>,
    pub exps: Vec<u64>,
    pub unif: Option<RootOfUnity>,
}

impl CharSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = Error::InvalidInput("malformed character");
        let mut parts = s.trim().split(':');
        let head = parts.next().ok_or(bad.clone())?;
        let exps_part = parts.next().ok_or(bad.clone())?;
        let unif_part = parts.next().ok_or(bad.clone())?;
        if parts.next().is_some() {
            return Err(bad);
        }
        let (pa, t) = match head.find('[') {
            Some(i) => {
                let t = head[i + 1..].strip_suffix(']').ok_or(bad.clone())?;
                (&head[..i], Some(t.parse::<i64>().map_err(|_| bad.clone())?))
            }
            None => (head, None),
        };
        let (p, level) = pa.split_once('^').ok_or(bad.clone())?;
        let p = p.parse().map_err(|_| bad.clone())?;
        let level = level.parse().map_err(|_| bad.clone())?;
        let list = exps_part
            .strip_prefix("exponents=[")
            .and_then(|x| x.strip_suffix(']'))
            .ok_or(bad.clone())?;
        let exps = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',').map(|x| x.trim().parse::<u64>().map_err(|_| bad.clone())).collect::<Result<_>>()?
        };
        let u = unif_part.strip_prefix("unif=").ok_or(bad.clone())?;
        let unif = if u == "?" {
            None
        } else {
            let body = u.strip_prefix("ζ_").or_else(|| u.strip_prefix("zeta_")).ok_or(bad.clone())?;
            let (m, k) = body.split_once('^').unwrap_or((body, "1"));
            let m: u64 = m.parse().map_err(|_| bad.clone())?;
            let k: i128 = k.parse().map_err(|_| bad.clone())?;
            if m == 0 {
                return Err(bad);
            }
            Some(RootOfUnity::new(k, m))
        };
        Ok(CharSpec { p, level, t, exps, unif })
    }

    pub fn build(&self) -> Result<MultChar> {
        let field = match self.t {
            Some(t) => LocalField::quadratic(self.p, t)?,
            None => LocalField::rationals(self.p)?,
        };
        MultChar::new(UnitGroup::new(&field, self.level)?, self.exps.clone(), self.unif)
    }
}

pub fn format_char(c: &MultChar) -> String {
    alloc::format!("{c}")
}
