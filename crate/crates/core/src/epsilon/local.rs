//! Local Gauss sums and epsilon factors.
//!
//! For `chi` of conductor `a` and `phi` of conductor `n` on the field `F`,
//! `eps(chi, phi) = q^{-a/2} chi(pi)^{a+n} tau(chi, phi)` with
//! `tau(chi, phi) = sum_{x in (O/pi^a)^x} chi^{-1}(x) phi(x pi^{-(a+n)})`.

use alloc::vec::Vec;

use crate::arith::lcm;
use crate::characters::{solve_c, AddChar, MultChar};
use crate::cyclotomic::{CycloElement, CyclotomicField, RootOfUnity, RootSum};
use crate::epsilon::EpsilonValue;
use crate::error::{Error, Result};
use crate::residue::{Elt, LocalField};

fn check_fields(chi: &MultChar, phi: &AddChar) -> Result<()> {
    if chi.field() != phi.field() {
        return Err(Error::Mismatch("characters on different fields"));
    }
    Ok(())
}

fn pi_power(k: &LocalField, e: u32) -> Elt {
    let mut t = Elt::int(1);
    for _ in 0..e {
        t = k.mul(&t, &k.uniformizer());
    }
    t
}

/// `tau(chi, phi)`, summing over the representatives `x + pi^a shift`.
/// An unramified `chi` has `tau = 1`.
pub fn local_gauss_sum_shifted(chi: &MultChar, phi: &AddChar, shift: &Elt) -> Result<CycloElement> {
    check_fields(chi, phi)?;
    let k = chi.field();
    let a = chi.conductor();
    if a == 0 {
        return Ok(CyclotomicField::new(1).from_int(1));
    }
    let m = a as i64 + phi.conductor();
    let offset = k.mul(&pi_power(k, a), shift);
    let mut terms: Vec<RootOfUnity> = Vec::new();
    for x in k.representatives(a) {
        if !k.is_unit(&x) {
            continue;
        }
        let y = Elt::new(x.a + offset.a, x.b + offset.b);
        let c = chi.value_unit(&x)?.inv();
        terms.push(c.mul(&phi.eval(&y, m)?));
    }
    let n = terms.iter().fold(1, |acc, r| lcm(acc, r.order()));
    let mut s = RootSum::new(n);
    for t in &terms {
        s.add_root(t, 1);
    }
    s.to_element(&CyclotomicField::new(n))
}

pub fn local_gauss_sum(chi: &MultChar, phi: &AddChar) -> Result<CycloElement> {
    local_gauss_sum_shifted(chi, phi, &Elt::int(0))
}

fn unif_power(chi: &MultChar, e: i64) -> Result<RootOfUnity> {
    chi.value_scaled(e, &Elt::int(1))
}

/// `eps(chi, phi)`; needs `chi(pi)` unless `a(chi) + n(phi) = 0`.
pub fn epsilon_factor(chi: &MultChar, phi: &AddChar) -> Result<EpsilonValue> {
    check_fields(chi, phi)?;
    let p = chi.field().p();
    let a = chi.conductor() as i64;
    let n = phi.conductor();
    let z = EpsilonValue::root(p, &unif_power(chi, a + n)?);
    if a == 0 {
        return Ok(z);
    }
    let tau = EpsilonValue::new(p, local_gauss_sum(chi, phi)?, 0);
    let f = chi.field().residue_degree() as i32;
    z.mul(&tau)?.mul(&EpsilonValue::p_half_power(p, -f * a as i32))
}

/// `phi_a(x) = phi(a x)` for `a = p^v u` rational.
pub fn scaled_additive(phi: &AddChar, u: i128, v: i64) -> Result<AddChar> {
    let (unit, sv) = phi.scale();
    AddChar::new(phi.field(), unit * u, sv + v)
}

/// Both sides of `eps(chi, phi_a) = chi(a) |a|^{-1} eps(chi, phi)`, `a = p^v u`.
pub fn additive_scaling_sides(
    chi: &MultChar,
    phi: &AddChar,
    u: i128,
    v: i64,
) -> Result<(EpsilonValue, EpsilonValue)> {
    let k = chi.field();
    let p = k.p();
    let lhs = epsilon_factor(chi, &scaled_additive(phi, u, v)?)?;
    let pv = (p as i128).pow(v.unsigned_abs() as u32);
    let (num, den) = if v >= 0 { (pv * u, 1) } else { (u, pv) };
    let chi_a = chi.value_rational(num, den)?;
    let abs_inv = EpsilonValue::p_half_power(p, 2 * k.degree() as i32 * v as i32);
    let rhs = EpsilonValue::root(p, &chi_a).mul(&abs_inv)?.mul(&epsilon_factor(chi, phi)?)?;
    Ok((lhs, rhs))
}

/// Both sides of `eps(theta chi, phi) = theta(pi)^{a(chi) + n(phi)} eps(chi, phi)`
/// for the unramified `theta` with `theta(pi) = z`.
pub fn unramified_twist_sides(
    chi: &MultChar,
    phi: &AddChar,
    z: &RootOfUnity,
) -> Result<(EpsilonValue, EpsilonValue)> {
    let p = chi.field().p();
    let theta = MultChar::trivial(chi.group().clone()).with_uniformizer(Some(*z));
    let lhs = epsilon_factor(&chi.mul(&theta)?, phi)?;
    let e = chi.conductor() as i64 + phi.conductor();
    let rhs = EpsilonValue::root(p, &z.pow(e)).mul(&epsilon_factor(chi, phi)?)?;
    Ok((lhs, rhs))
}

/// Both sides of inductivity in degree zero for a quadratic `K`:
/// `eps(theta o N, phi o Tr) = eps(theta, phi) eps(theta omega, phi) / eps(omega, phi)`.
/// `theta` and `omega` are characters of Q_p on a common group, `omega` the
/// norm residue character of `K`, and `theta_k` is `theta o N` on `K`.
pub fn inductivity_sides(
    theta: &MultChar,
    omega: &MultChar,
    theta_k: &MultChar,
    phi: &AddChar,
) -> Result<(EpsilonValue, EpsilonValue)> {
    let lhs = epsilon_factor(theta_k, &phi.on(theta_k.field()))?;
    let rhs = epsilon_factor(theta, phi)?
        .mul(&epsilon_factor(&theta.mul(omega)?, phi)?)?
        .div(&epsilon_factor(omega, phi)?)?;
    Ok((lhs, rhs))
}

/// Both sides of the twist formula `eps(alpha beta, phi) = beta^{-1}(c) eps(alpha, phi)`,
/// with `c` from [`solve_c`] at depth `ceil(a(alpha)/2)`. The formula is only
/// claimed when `a(alpha) >= 2 a(beta)`; the sides are returned regardless.
pub fn deligne_twist_sides(
    alpha: &MultChar,
    beta: &MultChar,
    phi: &AddChar,
) -> Result<(EpsilonValue, EpsilonValue)> {
    let a = alpha.conductor();
    if a == 0 {
        return Err(Error::BadCharacter("alpha must be ramified"));
    }
    let p = alpha.field().p();
    let lhs = epsilon_factor(&alpha.mul(beta)?, phi)?;
    let (v, u) = solve_c(alpha, phi, a.div_ceil(2))?;
    let b = beta.value_scaled(v, &u)?.inv();
    let rhs = EpsilonValue::root(p, &b).mul(&epsilon_factor(alpha, phi)?)?;
    Ok((lhs, rhs))
}

pub fn deligne_twist_check(alpha: &MultChar, beta: &MultChar, phi: &AddChar) -> Result<bool> {
    if alpha.conductor() < 2 * beta.conductor() {
        return Err(Error::InvalidInput("twist formula needs a(alpha) >= 2 a(beta)"));
    }
    let (l, r) = deligne_twist_sides(alpha, beta, phi)?;
    l.equals(&r)
}

/// Tate's local constant `eps(mu |.|^{s-1/2}, phi)` of a character of Q_p,
/// written as `coefficient * (p^{-s})^{exponent}` with exponent `a(mu) + n(phi)`.
/// For `n(phi) = -1` and `mu` of level `n` this is
/// `p^{n(1/2-s)} mu(c) tau(mu, phi) / p^{(n+1)/2}`.
pub fn tate_constant(mu: &MultChar, phi: &AddChar) -> Result<(EpsilonValue, i64)> {
    if mu.field().degree() != 1 {
        return Err(Error::Mismatch("Tate's constant is taken over Q_p"));
    }
    let e = mu.conductor() as i64 + phi.conductor();
    let eps = epsilon_factor(mu, phi)?;
    Ok((eps.mul(&EpsilonValue::p_half_power(mu.field().p(), e as i32))?, e))
}

/// `coefficient * (p^{-s})^{exponent}` at `s = 1/2`.
pub fn tate_at_half(c: &(EpsilonValue, i64)) -> Result<EpsilonValue> {
    c.0.mul(&EpsilonValue::p_half_power(c.0.p(), -c.1 as i32))
}
