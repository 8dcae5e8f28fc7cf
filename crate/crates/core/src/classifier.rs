//! Local type of a newform at `p` from the level and nebentypus exponents,
//! and the quadratic field a dihedral supercuspidal component is induced from.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::legendre;
use crate::error::{Error, Result};
use crate::residue::{LocalField, Ramification};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct NewformLocalDatum {
    pub p: u64,
    pub n_p: u32,
    pub c_p: u32,
    /// `None` when p-minimality is not known.
    pub minimal: Option<bool>,
    pub weight: Option<u32>,
    pub a_p: Option<String>,
    /// Global root number of `f`.
    pub eps_f: Option<i8>,
    /// `(t, eps(f x chi_t))`: `t = p` for the twist by `chi_p` at odd `p`,
    /// `t` in `{-1, 2, -2}` at `p = 2`.
    pub eps_twist: Vec<(i64, i8)>,
    /// Factorization of the prime-to-p part `N'` of the level.
    pub nprime_factors: Option<Vec<(u64, u32)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `K = Q_p(sqrt t)`, or the non-dihedral possibility at `p = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldLabel {
    Quadratic { t: i64, ramified: bool },
    PossiblyNonDihedral,
}

impl FieldLabel {
    pub fn describe(&self, p: u64) -> String {
        match self {
            FieldLabel::Quadratic { t, ramified } => {
                let kind = if *ramified { "ramified" } else { "unramified" };
                format!("Q_{p}(sqrt({t})) {kind}")
            }
            FieldLabel::PossiblyNonDihedral => String::from("possibly non-dihedral (S4 type)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub field: FieldLabel,
    pub epsilon_p: Option<String>,
    /// Set when the candidate belongs to one minimality branch only.
    pub branch: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalType {
    /// `N_p = 0`.
    Unramified,
    Steinberg,
    PrincipalSeries,
    Supercuspidal { candidates: Vec<Candidate> },
}

impl LocalType {
    pub fn name(&self) -> &'static str {
        match self {
            LocalType::Unramified => "unramified principal series",
            LocalType::Steinberg => "Steinberg",
            LocalType::PrincipalSeries => "principal series",
            LocalType::Supercuspidal { .. } => "supercuspidal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub claim: String,
    pub reference: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalTypeReport {
    pub local_type: LocalType,
    pub epsilon_p: Option<String>,
    pub reasoning: Vec<Step>,
}

/// Least quadratic non-residue mod an odd prime.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p).find(|&u| legendre(u as i128, p) == -1).unwrap_or(1)
}

/// Exponent of `p` in the conductor of `Ind chi` from `K`:
/// `v_p(disc K) + f(K) a(chi)`.
pub fn conductor_of_induced(k: &LocalField, a_chi: u32) -> Result<u32> {
    match k.kind() {
        Ramification::Split => Err(Error::InvalidInput("K must be a quadratic extension")),
        Ramification::Unramified if a_chi == 0 => {
            Err(Error::InvalidInput("an admissible chi on unramified K is ramified"))
        }
        Ramification::Ramified if a_chi < 2 => {
            Err(Error::InvalidInput("an admissible chi on ramified K has a(chi) >= 2"))
        }
        _ => Ok(k.disc_valuation() + k.residue_degree() * a_chi),
    }
}

/// Parity of `N_p` for a dihedral supercuspidal induced from `K`.
/// At `p = 2` with `K` ramified, `level_at_least_d` must say `l(chi) >= d`.
pub fn parity_characterize(
    p: u64,
    kind: Ramification,
    minimal: Option<bool>,
    level_at_least_d: Option<bool>,
) -> Result<Parity> {
    match kind {
        Ramification::Split => Err(Error::InvalidInput("K must be a quadratic extension")),
        Ramification::Unramified => Ok(Parity::Even),
        Ramification::Ramified => {
            if p == 2 {
                match level_at_least_d {
                    None => return Err(Error::InvalidInput("p = 2 ramified needs the l(chi) >= d flag")),
                    Some(false) => return Err(Error::InvalidInput("parity is only claimed for l(chi) >= d")),
                    Some(true) => {}
                }
            }
            match minimal {
                None => Err(Error::InvalidInput("ramified parity needs the minimality flag")),
                Some(true) => Ok(Parity::Odd),
                Some(false) => Ok(Parity::Even),
            }
        }
    }
}

/// Parity of `a(chi)` behind [`parity_characterize`]; at `p = 2` it flips
/// between discriminant valuations 2 and 3.
pub fn chi_conductor_parity(k: &LocalField, minimal: bool) -> Result<Parity> {
    match k.kind() {
        Ramification::Split => Err(Error::InvalidInput("K must be a quadratic extension")),
        Ramification::Unramified => Err(Error::InvalidInput("no parity constraint on a(chi) for K unramified")),
        Ramification::Ramified => {
            let odd_when_minimal = k.p() == 2 && k.disc_valuation() == 2;
            Ok(if odd_when_minimal == minimal { Parity::Odd } else { Parity::Even })
        }
    }
}

/// Value at `N'` of the quadratic character of the twist: `(q/p)` for odd `p`,
/// and `chi_t(q)` for `t` in `{-1, 2, -2}` at `p = 2`.
pub fn twist_character_at(p: u64, t: i64, factors: &[(u64, u32)]) -> Result<i8> {
    let mut s = 1i8;
    for &(q, e) in factors {
        if q == p {
            return Err(Error::InvalidInput("N' must be prime to p"));
        }
        let v = if p != 2 {
            legendre(q as i128, p)
        } else {
            let r = q % 8;
            let minus_one = if r % 4 == 1 { 1 } else { -1 };
            let two = if r == 1 || r == 7 { 1 } else { -1 };
            match t {
                -1 => minus_one,
                2 => two,
                -2 => minus_one * two,
                _ => return Err(Error::InvalidInput("p = 2 twists are t = -1, 2, -2")),
            }
        };
        if e % 2 == 1 {
            s *= v as i8;
        }
    }
    Ok(s)
}

/// `eps(f x chi) = eps(f) chi(N') eps_p`.
pub fn global_epsilon_relation(eps_f: i8, chi_of_nprime: i8, eps_p: i8) -> i8 {
    eps_f * chi_of_nprime * eps_p
}

/// Sign `s` with `eps(f x chi_t) = s chi_t(N') eps(f)`.
fn relation_sign(d: &NewformLocalDatum, t: i64) -> Result<Option<i8>> {
    let Some(&(_, tw)) = d.eps_twist.iter().find(|(u, _)| *u == t) else {
        return Ok(None);
    };
    let (Some(f), Some(fac)) = (d.eps_f, d.nprime_factors.as_ref()) else {
        return Err(Error::InvalidInput("the twist relation needs eps(f) and the factorization of N'"));
    };
    let chi = twist_character_at(d.p, t, fac)?;
    Ok(Some(tw * chi * f))
}

/// Which ramified `K` a p-minimal supercuspidal with `N_p >= 3` odd comes
/// from, `p == 3 mod 4`, read off the global twist relation.
pub fn deduce_ramified_field(d: &NewformLocalDatum) -> Result<i64> {
    let p = d.p;
    if p == 2 || p % 4 != 3 {
        return Err(Error::InvalidInput("the field is only determined for p == 3 mod 4"));
    }
    let s = relation_sign(d, p as i64)?.ok_or(Error::InvalidInput("eps(f x chi_p) not supplied"))?;
    let t = -(p as i64);
    Ok(if s == 1 { t } else { t * least_nonresidue(p) as i64 })
}

fn step(reasoning: &mut Vec<Step>, claim: String, reference: &'static str) {
    reasoning.push(Step { claim, reference });
}

fn sp_value(d: &NewformLocalDatum) -> String {
    let p = d.p;
    let k = d.weight.map(|k| format!("{}", 3 - k as i64)).unwrap_or_else(|| String::from("3-k"));
    if p == 2 {
        let k = d.weight.map(|k| format!("{}", 1 - k as i64)).unwrap_or_else(|| String::from("1-k"));
        return format!("-2^(({k})/2)*a_2");
    }
    let sign = if p % 4 == 1 { "-" } else { "" };
    format!("{sign}{p}^(({k})/2)*a_{p}")
}

fn odd_ramified_eps(p: u64, a: u32, t: i64) -> String {
    if a % 2 == 1 || t == -(p as i64) {
        String::from("1")
    } else {
        format!("{}", legendre(-1, p))
    }
}

pub fn classify_local_type(d: &NewformLocalDatum) -> Result<LocalTypeReport> {
    if !crate::arith::is_prime(d.p) {
        return Err(Error::NotPrime(d.p));
    }
    if d.c_p > d.n_p {
        return Err(Error::InvalidInput("C_p cannot exceed N_p"));
    }
    let p = d.p;
    let mut why = Vec::new();
    if d.n_p == 0 {
        step(&mut why, String::from("N_p = 0: unramified at p"), "level decomposition");
        return Ok(LocalTypeReport { local_type: LocalType::Unramified, epsilon_p: None, reasoning: why });
    }
    if d.n_p == 1 && d.c_p == 0 {
        step(&mut why, String::from("N_p = 1 and C_p = 0"), "Corollary mainkoro (1)");
        return Ok(LocalTypeReport {
            local_type: LocalType::Steinberg,
            epsilon_p: Some(sp_value(d)),
            reasoning: why,
        });
    }
    if d.n_p == d.c_p {
        step(&mut why, format!("N_p = C_p = {}", d.n_p), "Corollary mainkoro (2)");
        let eps = if p == 2 {
            String::from("2^(-k/2)*a_2")
        } else {
            let unit = if p % 4 == 1 { "" } else { "i*" };
            format!("{unit}{p}^((1-k)/2)*a_{p}*c_{p}")
        };
        return Ok(LocalTypeReport {
            local_type: LocalType::PrincipalSeries,
            epsilon_p: Some(eps),
            reasoning: why,
        });
    }
    step(&mut why, format!("N_p = {} > C_p = {}", d.n_p, d.c_p), "Corollary mainkoro (3)");
    let branches: Vec<bool> = match d.minimal {
        Some(m) => alloc::vec![m],
        None => {
            step(&mut why, String::from("p-minimality unknown: both branches kept"), "classifier policy");
            alloc::vec![true, false]
        }
    };
    let mut candidates: Vec<Candidate> = Vec::new();
    for minimal in branches {
        let label = match (d.minimal, minimal) {
            (Some(_), _) => None,
            (None, true) => Some("p-minimal"),
            (None, false) => Some("not p-minimal"),
        };
        let found = if p == 2 {
            two_candidates(d, minimal, &mut why)?
        } else {
            odd_candidates(d, minimal, &mut why)?
        };
        for mut c in found {
            c.branch = label;
            if !candidates.iter().any(|o| o.field == c.field && o.epsilon_p == c.epsilon_p) {
                candidates.push(c);
            }
        }
    }
    if candidates.is_empty() {
        return Err(Error::InvalidInput("no dihedral or non-dihedral field fits the datum"));
    }
    let first = candidates[0].epsilon_p.clone();
    let epsilon_p = if candidates.iter().all(|c| c.epsilon_p == first) { first } else { None };
    Ok(LocalTypeReport { local_type: LocalType::Supercuspidal { candidates }, epsilon_p, reasoning: why })
}

fn unramified_candidate(p: u64, n_p: u32) -> Candidate {
    let t = if p == 2 { -3 } else { least_nonresidue(p) as i64 };
    // a(chi) = N_p / 2; for a(chi) = 1 the tame theorems apply instead
    let eps = if n_p >= 4 { Some(String::from("1")) } else { None };
    Candidate { field: FieldLabel::Quadratic { t, ramified: false }, epsilon_p: eps, branch: None }
}

fn odd_candidates(d: &NewformLocalDatum, minimal: bool, why: &mut Vec<Step>) -> Result<Vec<Candidate>> {
    let p = d.p;
    let ram = [-(p as i64), -(p as i64) * least_nonresidue(p) as i64];
    let a = d.n_p.saturating_sub(1);
    let ramified = |t: i64| Candidate {
        field: FieldLabel::Quadratic { t, ramified: true },
        epsilon_p: Some(odd_ramified_eps(p, a, t)),
        branch: None,
    };
    let mut out = Vec::new();
    if d.n_p % 2 == 0 {
        if minimal {
            step(why, String::from("N_p even and p-minimal: K unramified"), "Proposition np; Corollary mainkoro (3)");
            out.push(unramified_candidate(p, d.n_p));
        } else {
            step(why, String::from("N_p even, not p-minimal: K unramified or ramified"), "Proposition np");
            out.push(unramified_candidate(p, d.n_p));
            out.extend(ram.iter().map(|&t| ramified(t)));
        }
        return Ok(out);
    }
    if !minimal {
        step(
            why,
            String::from("N_p odd excludes a non-minimal pair; branch yields no field"),
            "Proposition np (2)",
        );
        return Ok(out);
    }
    step(why, String::from("N_p odd: K ramified"), "Proposition np");
    if p % 4 == 1 {
        step(
            why,
            String::from("p == 1 mod 4: the two ramified fields cannot be told apart"),
            "Corollary mainkoro (3)",
        );
        out.extend(ram.iter().map(|&t| ramified(t)));
        return Ok(out);
    }
    match relation_sign(d, p as i64)? {
        Some(s) => {
            let t = deduce_ramified_field(d)?;
            let r = if s == 1 { "Corollary mainkoro 3(a)" } else { "Corollary mainkoro 3(b)" };
            step(why, format!("eps(f x chi_p) = {s} chi_p(N') eps(f)"), r);
            out.push(ramified(t));
        }
        None => {
            step(why, String::from("global root numbers not supplied"), "Corollary mainkoro (3)");
            out.extend(ram.iter().map(|&t| ramified(t)));
        }
    }
    Ok(out)
}

/// Ramified fields over Q_2 and their twist relation (I: +1, II: -1).
fn two_relation(t: i64, minimal: bool) -> i8 {
    match (t, minimal) {
        (6 | -6, true) => -1,
        (3, false) => -1,
        _ => 1,
    }
}

fn two_candidates(d: &NewformLocalDatum, minimal: bool, why: &mut Vec<Step>) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    if [3, 4, 6, 7].contains(&d.n_p) {
        step(why, format!("N_2 = {} allows a non-dihedral component", d.n_p), "remark after Proposition n2");
        out.push(Candidate { field: FieldLabel::PossiblyNonDihedral, epsilon_p: None, branch: None });
    }
    let even = d.n_p % 2 == 0;
    if even {
        out.push(unramified_candidate(2, d.n_p));
        if minimal {
            step(why, String::from("N_2 even and 2-minimal: K unramified when l(chi) >= d"), "Corollary corop=2");
            // l(chi) = d - 1 is allowed for minimal chi and gives N_2 = 2d
            let mut edge = Vec::new();
            for t in [-1i64, 2, -2, 3, 6, -6] {
                if 2 * LocalField::quadratic(2, t)?.disc_valuation() == d.n_p {
                    edge.push(Candidate {
                        field: FieldLabel::Quadratic { t, ramified: true },
                        epsilon_p: None,
                        branch: None,
                    });
                }
            }
            if !edge.is_empty() {
                step(
                    why,
                    format!("l(chi) = d - 1 with d = {}: ramified K not excluded", d.n_p / 2),
                    "Proposition n2 (outside its hypothesis l(chi) >= d)",
                );
                out.extend(edge);
            }
            return Ok(out);
        }
        step(
            why,
            String::from("not 2-minimal: unramified and ramified K both give N_2 even"),
            "remark after Corollary corop=2",
        );
    } else if !minimal {
        step(why, String::from("N_2 odd excludes a non-minimal pair"), "Proposition n2");
        return Ok(out);
    } else {
        step(why, String::from("N_2 odd and 2-minimal: K ramified"), "Proposition n2");
    }
    let mut signs = Vec::new();
    for t in [-1i64, 2, -2] {
        if let Some(s) = relation_sign(d, t)? {
            signs.push(s);
        }
    }
    signs.dedup();
    let sign = match signs.as_slice() {
        [] => None,
        [s] => Some(*s),
        _ => {
            step(why, String::from("twist relations disagree in sign"), "Corollary corop=2");
            None
        }
    };
    if let Some(s) = sign {
        let rel = if s == 1 { "I" } else { "II" };
        step(why, format!("relation {rel} holds"), "Corollary corop=2");
    }
    for t in [-1i64, 2, -2, 3, 6, -6] {
        let rel = two_relation(t, minimal);
        if sign.is_some_and(|s| s != rel) {
            continue;
        }
        // a(chi) must be at least 2 for the conductor to fit
        let k = LocalField::quadratic(2, t)?;
        let Some(a) = d.n_p.checked_sub(k.disc_valuation()) else { continue };
        if a < 2 || even != !minimal {
            continue;
        }
        out.push(Candidate {
            field: FieldLabel::Quadratic { t, ramified: true },
            epsilon_p: Some(format!("{rel}")),
            branch: None,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_mult_chars;
    use crate::cyclotomic::RootOfUnity;
    use crate::residue::UnitGroup;

    fn datum(p: u64, n_p: u32, c_p: u32, minimal: Option<bool>) -> NewformLocalDatum {
        NewformLocalDatum { p, n_p, c_p, minimal, ..Default::default() }
    }

    fn fields(r: &LocalTypeReport) -> Vec<FieldLabel> {
        match &r.local_type {
            LocalType::Supercuspidal { candidates } => candidates.iter().map(|c| c.field.clone()).collect(),
            _ => Vec::new(),
        }
    }

    #[test]
    fn induced_conductors() {
        let u = LocalField::quadratic(3, -1).unwrap();
        assert_eq!(conductor_of_induced(&u, 2).unwrap(), 4);
        let r = LocalField::quadratic(3, -3).unwrap();
        assert_eq!(conductor_of_induced(&r, 2).unwrap(), 3);
        let two = LocalField::quadratic(2, 2).unwrap();
        assert_eq!(conductor_of_induced(&two, 2).unwrap(), 5);
        let two = LocalField::quadratic(2, 3).unwrap();
        assert_eq!(conductor_of_induced(&two, 2).unwrap(), 4);
        assert!(conductor_of_induced(&r, 1).is_err());
    }

    #[test]
    fn parity_rules() {
        assert_eq!(parity_characterize(5, Ramification::Ramified, Some(true), None).unwrap(), Parity::Odd);
        assert_eq!(parity_characterize(5, Ramification::Ramified, Some(false), None).unwrap(), Parity::Even);
        assert_eq!(parity_characterize(5, Ramification::Unramified, None, None).unwrap(), Parity::Even);
        assert!(parity_characterize(2, Ramification::Ramified, Some(true), None).is_err());
        assert!(parity_characterize(3, Ramification::Ramified, None, None).is_err());
    }

    #[test]
    fn parity_matches_enumeration() {
        for (p, t, top) in [(3u64, -3i64, 3u32), (3, 3, 3), (5, 5, 3), (5, 10, 3), (3, -1, 3), (5, 2, 2)] {
            let k = LocalField::quadratic(p, t).unwrap();
            let g = UnitGroup::new(&k, top).unwrap();
            for chi in enumerate_mult_chars(&g, Some(RootOfUnity::one())) {
                let a = chi.conductor();
                let (adm, min) = chi.admissible_and_minimal().unwrap();
                if !adm || a == 0 {
                    continue;
                }
                let n = conductor_of_induced(&k, a).unwrap();
                let claim = parity_characterize(p, k.kind(), Some(min), None).unwrap();
                assert_eq!(Parity::of(n), claim, "p={p} t={t} a={a}");
            }
        }
    }

    #[test]
    fn mainkoro_rows() {
        let r = classify_local_type(&datum(7, 1, 0, Some(true))).unwrap();
        assert_eq!(r.local_type, LocalType::Steinberg);
        let r = classify_local_type(&datum(7, 2, 2, Some(true))).unwrap();
        assert_eq!(r.local_type, LocalType::PrincipalSeries);
        let r = classify_local_type(&datum(7, 4, 0, Some(true))).unwrap();
        assert_eq!(fields(&r), alloc::vec![FieldLabel::Quadratic { t: 3, ramified: false }]);
        assert_eq!(r.epsilon_p.as_deref(), Some("1"));
        assert!(classify_local_type(&datum(7, 2, 3, None)).is_err());

        // p = 7, N' = 3: chi_7(3) = -1; eps(f x chi_7) = +1, eps(f) = +1 gives sign -1
        let mut d = datum(7, 3, 0, Some(true));
        d.eps_f = Some(1);
        d.eps_twist = alloc::vec![(7, 1)];
        d.nprime_factors = Some(alloc::vec![(3, 1)]);
        let r = classify_local_type(&d).unwrap();
        assert_eq!(fields(&r), alloc::vec![FieldLabel::Quadratic { t: -21, ramified: true }]);
        assert_eq!(r.epsilon_p.as_deref(), Some("-1"));
        d.eps_twist = alloc::vec![(7, -1)];
        let r = classify_local_type(&d).unwrap();
        assert_eq!(fields(&r), alloc::vec![FieldLabel::Quadratic { t: -7, ramified: true }]);

        // p == 1 mod 4: no decision
        let mut d = datum(5, 3, 0, Some(true));
        d.eps_f = Some(1);
        d.eps_twist = alloc::vec![(5, 1)];
        d.nprime_factors = Some(Vec::new());
        let r = classify_local_type(&d).unwrap();
        assert_eq!(fields(&r).len(), 2);
        assert!(r.reasoning.iter().any(|s| s.claim.contains("cannot be told apart")));
        assert!(deduce_ramified_field(&d).is_err());
    }

    #[test]
    fn corop2_rows() {
        let with = |minimal, n_p, sign: i8| {
            let mut d = datum(2, n_p, 0, Some(minimal));
            d.eps_f = Some(1);
            d.eps_twist = alloc::vec![(-1, sign)];
            d.nprime_factors = Some(Vec::new());
            fields(&classify_local_type(&d).unwrap())
        };
        let ram = |v: &[FieldLabel]| -> Vec<i64> {
            v.iter()
                .filter_map(|f| match f {
                    FieldLabel::Quadratic { t, ramified: true } => Some(*t),
                    _ => None,
                })
                .collect()
        };
        // minimal, odd N_2: relation I -> -1, 2, -2, 3; relation II -> 6, -6
        let mut i5: Vec<i64> = ram(&with(true, 5, 1));
        i5.sort();
        assert_eq!(i5, alloc::vec![-2, -1, 2, 3]);
        let mut ii: Vec<i64> = ram(&with(true, 5, -1));
        ii.sort();
        assert_eq!(ii, alloc::vec![-6, 6]);
        // not minimal, even N_2: unramified stays possible next to the ramified ones
        let nm = with(false, 6, -1);
        assert!(nm.contains(&FieldLabel::Quadratic { t: -3, ramified: false }));
        assert_eq!(ram(&nm), alloc::vec![3]);
        let mut nm1 = ram(&with(false, 6, 1));
        nm1.sort();
        assert_eq!(nm1, alloc::vec![-6, -2, -1, 2, 6]);
        // minimal, even: unramified, the non-dihedral flag at N_2 = 4, and
        // the ramified fields with d = 2 where l(chi) = d - 1
        let m4 = with(true, 4, 1);
        assert!(m4.contains(&FieldLabel::PossiblyNonDihedral));
        assert!(m4.contains(&FieldLabel::Quadratic { t: -3, ramified: false }));
        let mut r4 = ram(&m4);
        r4.sort();
        assert_eq!(r4, alloc::vec![-1, 3]);
        assert_eq!(ram(&with(true, 6, 1)).len(), 4);
        assert!(ram(&with(true, 8, 1)).is_empty());
    }

    #[test]
    fn unknown_minimality_keeps_both_branches() {
        let r = classify_local_type(&datum(3, 4, 0, None)).unwrap();
        let LocalType::Supercuspidal { candidates } = r.local_type else { panic!() };
        assert!(candidates.iter().any(|c| c.branch == Some("p-minimal")));
        assert!(candidates.iter().any(|c| c.branch == Some("not p-minimal")));
    }

    #[test]
    fn twist_relation_values() {
        assert_eq!(twist_character_at(7, 7, &[(3, 1)]).unwrap(), -1);
        assert_eq!(twist_character_at(7, 7, &[(3, 2)]).unwrap(), 1);
        assert_eq!(twist_character_at(7, 7, &[]).unwrap(), 1);
        assert_eq!(global_epsilon_relation(-1, -1, 1), 1);
        assert_eq!(twist_character_at(2, 2, &[(3, 1)]).unwrap(), -1);
        assert_eq!(twist_character_at(2, -2, &[(3, 1)]).unwrap(), 1);
    }
}
