//! Gauss sums over finite fields, `G(chi) = sum_x chi(x) zeta_p^Tr(x)`.

use alloc::sync::Arc;

use crate::arith::lcm;
use crate::characters::FiniteFieldChar;
use crate::cyclotomic::{CycloElement, CyclotomicField, PadicEmbedding, RootOfUnity, RootSum};
use crate::error::{Error, Result};
use crate::gamma::MoritaGamma;
use crate::padic::{ExtElement, ExtRing};
use crate::residue::FiniteField;

/// Order of the cyclotomic ring holding `G(chi)`.
pub fn gauss_order(chi: &FiniteFieldChar) -> u64 {
    lcm(chi.order(), chi.field().p())
}

/// `G(chi)` in the group ring of roots of unity of order `n`, a multiple of [`gauss_order`].
pub fn gauss_sum_in(chi: &FiniteFieldChar, n: u64) -> Result<RootSum> {
    if n % gauss_order(chi) != 0 {
        return Err(Error::Mismatch("ring too small for the Gauss sum"));
    }
    let f = chi.field();
    let p = f.p();
    let mut s = RootSum::new(n);
    for x in 1..f.order() as u32 {
        let c = chi.value(x)?;
        let a = RootOfUnity::new(f.trace(x) as i128, p);
        s.add_root(&c.mul(&a), 1);
    }
    Ok(s)
}

pub fn gauss_sum(chi: &FiniteFieldChar) -> Result<CycloElement> {
    let n = gauss_order(chi);
    gauss_sum_in(chi, n)?.to_element(&CyclotomicField::new(n))
}

/// `chi(-1)`.
pub fn parity(chi: &FiniteFieldChar) -> Result<RootOfUnity> {
    chi.value(chi.field().from_int(-1))
}

/// Both sides of the Davenport-Hasse lifting relation
/// `-G_r(chi o N) = (-G_1(chi))^r` for a character of the prime field.
pub fn davenport_hasse(chi: &FiniteFieldChar, r: u32) -> Result<(CycloElement, CycloElement)> {
    let ext = Arc::new(FiniteField::new(chi.field().p(), r)?);
    let lifted = chi.norm_lift(ext)?;
    let n = gauss_order(chi);
    let field = CyclotomicField::new(n);
    let lhs = field.neg(&gauss_sum_in(&lifted, n)?.to_element(&field)?);
    let base = gauss_sum_in(chi, n)?;
    let mut minus = RootSum::new(n);
    for (k, &c) in base.counts().iter().enumerate() {
        minus.add_power(k as u64, -c);
    }
    let mut acc = RootSum::new(n);
    acc.add_power(0, 1);
    for _ in 0..r {
        acc = acc.mul(&minus);
    }
    Ok((lhs, acc.to_element(&field)?))
}

/// A Gauss sum of `F_p` and a right-hand side, both in `Z_p[zeta_p]`.
#[derive(Clone, Debug)]
pub struct PadicComparison {
    pub ring: ExtRing,
    pub lhs: ExtElement,
    pub rhs: ExtElement,
}

impl PadicComparison {
    /// Agreement to `digits` p-adic digits past the common valuation.
    pub fn agrees(&self, digits: u32) -> bool {
        self.ring.agrees_digits(&self.lhs, &self.rhs, digits)
    }
}

fn embedded_gauss(p: u64, exp: u64, ring: &ExtRing) -> Result<ExtElement> {
    let f = Arc::new(FiniteField::new(p, 1)?);
    let chi = FiniteFieldChar::new(f, exp);
    let emb = PadicEmbedding::new(ring.clone())?;
    emb.embed(&gauss_sum(&chi)?)
}

/// `G(omega^-a)` against `-pi_D^a Gamma_p(a/(p-1))`, where `omega` is the
/// Teichmüller character and `zeta_p = 1 + pi_D mod pi_D^2`.
pub fn gross_koblitz(p: u64, a: u64, digits: u32) -> Result<PadicComparison> {
    if p == 2 {
        return Err(Error::NotPrime(p));
    }
    let ring = ExtRing::new(p, digits)?;
    let m = p - 1;
    let lhs = embedded_gauss(p, (m - a % m) % m, &ring)?;
    let g = MoritaGamma::new(p, digits)?.eval_rational((a % m) as i128, m as i128)?;
    let pid = ring.dwork_pi()?;
    let t = ring.mul(&ring.pow(&pid, (a % m) as i64)?, &ring.from_padic(&g)?);
    Ok(PadicComparison { lhs, rhs: ring.neg(&t), ring })
}

/// `G_1(chi^r)` for `chi = omega^{-(p-1)/k}` against
/// `pi_D^{r(p-1)/k} Gamma_p(r/k)`, with no sign in front.
pub fn gross_koblitz_unsigned(p: u64, k: u64, r: u64, digits: u32) -> Result<PadicComparison> {
    if p == 2 || k == 0 || (p - 1) % k != 0 {
        return Err(Error::InvalidInput("need odd p and k dividing p-1"));
    }
    let ring = ExtRing::new(p, digits)?;
    let m = p - 1;
    let a = r * (m / k) % m;
    let lhs = embedded_gauss(p, (m - a) % m, &ring)?;
    let g = MoritaGamma::new(p, digits)?.eval_rational(r as i128, k as i128)?;
    let pid = ring.dwork_pi()?;
    let rhs = ring.mul(&ring.pow(&pid, (r * (m / k)) as i64)?, &ring.from_padic(&g)?);
    Ok(PadicComparison { ring, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_finite_chars;

    #[test]
    fn absolute_value_and_parity() {
        for (p, r) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (2, 3), (5, 2)] {
            let f = Arc::new(FiniteField::new(p, r).unwrap());
            let q = f.order() as i64;
            for chi in enumerate_finite_chars(&f) {
                let n = gauss_order(&chi);
                let field = CyclotomicField::new(n);
                let g = gauss_sum_in(&chi, n).unwrap();
                let gbar = g.galois(-1);
                let abs2 = g.mul(&gbar).to_element(&field).unwrap();
                let ginv = gauss_sum_in(&chi.pow(-1), n).unwrap();
                let prod = g.mul(&ginv).to_element(&field).unwrap();
                if chi.is_trivial() {
                    assert_eq!(abs2.as_integer(), Some(1));
                    continue;
                }
                assert_eq!(abs2.as_integer(), Some(q));
                let sign = field.root(&parity(&chi).unwrap()).unwrap();
                assert_eq!(prod, field.scale(&sign, q));
            }
        }
    }

    #[test]
    fn quadratic_gauss_sum_is_sqrt_of_signed_p() {
        for p in [3u64, 5, 7, 11, 13] {
            let f = Arc::new(FiniteField::new(p, 1).unwrap());
            let chi = FiniteFieldChar::new(f, (p - 1) / 2);
            let g = gauss_sum(&chi).unwrap();
            let field = CyclotomicField::new(g.order());
            let sq = field.mul(&g, &g).unwrap();
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(sq.as_integer(), Some(sign * p as i64));
        }
    }

    #[test]
    fn davenport_hasse_holds() {
        for (p, r) in [(3u64, 2u32), (5, 2), (7, 2), (3, 3), (2, 3), (2, 4), (3, 4)] {
            let f = Arc::new(FiniteField::new(p, 1).unwrap());
            for chi in enumerate_finite_chars(&f) {
                let (l, rr) = davenport_hasse(&chi, r).unwrap();
                assert_eq!(l, rr, "p={p} r={r} chi={}", chi.exponent());
            }
        }
    }

    #[test]
    fn gross_koblitz_with_sign() {
        for p in [3u64, 5, 7, 11, 13] {
            for a in 0..p - 1 {
                let c = gross_koblitz(p, a, 6).unwrap();
                assert!(c.agrees(5), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn unsigned_form_is_off_by_a_sign() {
        for (p, k) in [(7u64, 3u64), (13, 4), (11, 5)] {
            for r in 1..k {
                let c = gross_koblitz_unsigned(p, k, r, 6).unwrap();
                assert!(!c.agrees(1));
                let neg = c.ring.neg(&c.rhs);
                assert!(c.ring.agrees_digits(&c.lhs, &neg, 5));
            }
        }
    }
}
