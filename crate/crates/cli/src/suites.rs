//! The `verify` suites: parameter grids, oracle runs, and their records.

use std::sync::Arc;
use std::time::Instant;

use epslocal_core::arith::{divisors, is_prime, legendre};
use epslocal_core::characters::{enumerate_finite_chars, enumerate_mult_chars, format_char, AddChar, FiniteFieldChar, MultChar};
use epslocal_core::classifier::{
    chi_conductor_parity, classify_local_type, conductor_of_induced, least_nonresidue, parity_characterize, FieldLabel,
    LocalType, NewformLocalDatum, Parity,
};
use epslocal_core::cyclotomic::{CycloElement, RootOfUnity, RootSum};
use epslocal_core::epsilon::gauss::{davenport_hasse, gauss_order, gauss_sum_in, gross_koblitz_unsigned, parity};
use epslocal_core::epsilon::local::deligne_twist_sides;
use epslocal_core::epsilon::theorems::{
    eps_chi_p, gap_factorial_check, principal_series, special, supercuspidal, tame_unramified, unramified_tau_check,
};
use epslocal_core::padic::ExtElement;
use epslocal_core::residue::{FiniteField, LocalField, Ramification, UnitGroup};
use epslocal_core::Error;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::params;
use crate::report::{Case, Convention, VerificationRun};

pub const SUITES: &[&str] = &[
    "gauss-modulus",
    "gross-koblitz",
    "davenport-hasse",
    "deligne-twist",
    "chip",
    "psr",
    "sp",
    "main-unram",
    "main-ram",
    "evenodd",
    "appstkl",
    "parity",
    "corollary-x0",
];

pub const DEFAULT_PRECISION: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    /// Largest prime swept; each suite has its own default.
    pub pmax: Option<u64>,
    pub precision: u32,
    pub jobs: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { pmax: None, precision: DEFAULT_PRECISION, jobs: 1 }
    }
}

const FF_GENERATOR: &str = "F_q with least irreducible monic modulus and least generator g; chi(g) = zeta_(q-1)^e";
const LOCAL_GENERATOR: &str =
    "fixed generators of U_K / U_K^level, exponents in that order; chi(pi) as listed after unif=";

fn primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

fn capped(list: &[u64], pmax: u64) -> Vec<u64> {
    list.iter().copied().filter(|&p| p <= pmax).collect()
}

/// Runs `f` over the cells on a pool of `jobs` threads; output keeps cell order.
fn sweep<T: Sync>(cells: &[T], jobs: usize, f: impl Fn(&T) -> Vec<Case> + Sync) -> Vec<Case> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    pool.install(|| cells.par_iter().map(&f).collect::<Vec<_>>()).concat()
}

fn failed(theorem: &str, parameters: Map<String, Value>, e: Error) -> Case {
    let mut c = Case::new(theorem, parameters);
    c.oracle = format!("error: {e}");
    c.equal = Some(false);
    c
}

/// `sign * c` in the standard complex embedding.
fn approx(c: &CycloElement, sign: f64) -> String {
    let (re, im) = c.complex_embed();
    format!("{:.6}{:+.6}i", sign * re + 0.0, sign * im + 0.0)
}

fn ext_digits(e: &ExtElement) -> String {
    let lead: Vec<String> = e.unit_coeffs().iter().take(3).map(|c| c.to_string()).collect();
    format!("v_pi={} unit=[{}]", e.valuation(), lead.join(","))
}

/// Runs a suite by name.
pub fn run_suite(name: &str, grid: &Grid) -> Result<VerificationRun, String> {
    let start = Instant::now();
    let (pmax, n_phi, generator, cases) = match name {
        "gauss-modulus" => {
            let pmax = grid.pmax.unwrap_or(31);
            (pmax, "finite field: psi(x) = zeta_p^Tr(x)", FF_GENERATOR, gauss_modulus(pmax, grid.jobs))
        }
        "gross-koblitz" => {
            let pmax = grid.pmax.unwrap_or(13);
            (pmax, "finite field: psi(x) = zeta_p^Tr(x)", FF_GENERATOR, gk(pmax, grid))
        }
        "davenport-hasse" => {
            let pmax = grid.pmax.unwrap_or(31);
            (pmax, "finite field: psi(x) = zeta_p^Tr(x)", FF_GENERATOR, dh(pmax, grid.jobs))
        }
        "deligne-twist" => {
            let pmax = grid.pmax.unwrap_or(7);
            (pmax, "-1", LOCAL_GENERATOR, deligne(pmax, grid.jobs))
        }
        "chip" => {
            let pmax = grid.pmax.unwrap_or(29);
            (pmax, "-1", LOCAL_GENERATOR, chip(pmax, grid.jobs))
        }
        "psr" => {
            let pmax = grid.pmax.unwrap_or(13);
            (pmax, "-1", LOCAL_GENERATOR, psr(pmax, grid))
        }
        "sp" => {
            let pmax = grid.pmax.unwrap_or(13);
            (pmax, "-1", LOCAL_GENERATOR, sp(pmax, grid.jobs))
        }
        "main-unram" => {
            let pmax = grid.pmax.unwrap_or(5);
            (pmax, "0 on Q_p, phi_K = phi o Tr", LOCAL_GENERATOR, main_unram(pmax, grid.jobs))
        }
        "main-ram" => {
            let pmax = grid.pmax.unwrap_or(11);
            (pmax, "0 on Q_p, phi_K = phi o Tr", LOCAL_GENERATOR, main_ram(pmax, grid.jobs))
        }
        "evenodd" => {
            let pmax = grid.pmax.unwrap_or(31);
            (pmax, "finite field: psi(x) = zeta_p^Tr(x)", FF_GENERATOR, evenodd(pmax, grid))
        }
        "appstkl" => {
            let pmax = grid.pmax.unwrap_or(50);
            (pmax, "finite field: psi(x) = zeta_p^Tr(x); p = 2 locally with n(phi) = -1", FF_GENERATOR, appstkl(pmax, grid))
        }
        "parity" => {
            let pmax = grid.pmax.unwrap_or(5);
            (pmax, "not used", LOCAL_GENERATOR, parity_suite(pmax, grid.jobs))
        }
        "corollary-x0" => {
            let pmax = grid.pmax.unwrap_or(31);
            (pmax, "not used", "Morita Gamma_p", corollary_x0(pmax, grid))
        }
        _ => return Err(format!("unknown suite '{name}'; expected one of {}", SUITES.join(", "))),
    };
    Ok(VerificationRun {
        suite: name.to_string(),
        grid: params! { "pmax" => pmax },
        convention: Convention { n_phi: n_phi.to_string(), generator: generator.to_string(), precision: grid.precision },
        cases,
        wall_time: start.elapsed(),
    })
}

/// `G(chi) sigma_{-1}(G(chi)) = chi(-1) q` with `sigma_{-1}` acting on
/// character values, so the left side is `G(chi) G(chi^-1)`.
pub fn gauss_modulus(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in primes(2, pmax) {
        for r in [1u32, 2] {
            let f = Arc::new(FiniteField::new(p, r).expect("small field"));
            for e in 1..f.order() - 1 {
                cells.push((f.clone(), e));
            }
        }
    }
    sweep(&cells, jobs, |(f, e)| {
        let q = f.order();
        let par = params! { "p" => f.p(), "r" => f.degree(), "chi" => e };
        let chi = FiniteFieldChar::new(f.clone(), *e);
        let run = || -> Result<Case, Error> {
            let n = gauss_order(&chi);
            let g = gauss_sum_in(&chi, n)?;
            let lhs = g.mul(&gauss_sum_in(&chi.pow(-1), n)?);
            let sign = parity(&chi)?;
            let mut rhs = RootSum::new(n);
            rhs.add_root(&sign, q as i64);
            let mut q_one = RootSum::new(n);
            q_one.add_power(0, q as i64);
            let abs_ok = g.mul(&g.galois(-1)).equals(&q_one);
            let canon = lhs.canonical();
            let oracle = if canon.iter().skip(1).all(|&c| c == 0) {
                format!("{}", canon[0])
            } else {
                String::from("irrational")
            };
            let s = if sign == RootOfUnity::one() { 1 } else { -1 };
            Ok(Case::new("gauss-modulus", par.clone())
                .compared(format!("{}", s * q as i64), oracle, lhs.equals(&rhs))
                .note(format!("|G|^2 = q: {abs_ok}")))
        };
        vec![run().unwrap_or_else(|e| failed("gauss-modulus", par.clone(), e))]
    })
}

/// `G_1(chi^r) = pi^{r(p-1)/k} Gamma_p(r/k)` for `chi = omega^{-(p-1)/k}`,
/// compared through 8 digits of the leading unit.
pub fn gk(pmax: u64, grid: &Grid) -> Vec<Case> {
    let digits = grid.precision.max(10);
    let mut cells = Vec::new();
    for p in primes(3, pmax) {
        for k in divisors(p - 1).into_iter().filter(|&k| k > 1) {
            for r in 1..k {
                cells.push((p, k, r));
            }
        }
    }
    sweep(&cells, grid.jobs, |&(p, k, r)| {
        let par = params! { "p" => p, "k" => k, "r" => r };
        let c = match gross_koblitz_unsigned(p, k, r, digits) {
            Ok(c) => c,
            Err(e) => return vec![failed("GKcoro", par, e)],
        };
        let negated = c.ring.neg(&c.rhs);
        let signed = c.ring.agrees_digits(&c.lhs, &negated, 8);
        vec![Case::new("GKcoro", par)
            .compared(ext_digits(&c.rhs), ext_digits(&c.lhs), c.agrees(8))
            .note("8 digits of the leading unit")
            .note(format!("with a leading minus sign: {signed}"))]
    })
}

/// `G_2(chi o N) = -G_1(chi)^2` for every character of `F_p^x`.
pub fn dh(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in primes(2, pmax) {
        let f = Arc::new(FiniteField::new(p, 1).expect("prime field"));
        cells.extend(enumerate_finite_chars(&f));
    }
    sweep(&cells, jobs, |chi| {
        let p = chi.field().p();
        let par = params! { "p" => p, "chi" => chi.exponent() };
        match davenport_hasse(chi, 2) {
            // the core returns -G_2(chi o N) and (-G_1(chi))^2
            Ok((l, r)) => vec![Case::new("davenport-hasse", par)
                .compared(format!("-G_1^2 = {}", approx(&r, -1.0)), format!("G_2 = {}", approx(&l, -1.0)), l == r)],
            Err(e) => vec![failed("davenport-hasse", par, e)],
        }
    })
}

fn qp_group(p: u64, level: u32) -> Arc<UnitGroup> {
    UnitGroup::new(&LocalField::rationals(p).expect("prime"), level).expect("small unit group")
}

/// `eps(alpha beta, phi) = beta^{-1}(c) eps(alpha, phi)` over `a(alpha)` in
/// `{2, 3}` and tame `beta`, plus one pair outside `a(alpha) >= 2 a(beta)`
/// per prime where the sides differ.
pub fn deligne(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[3, 5, 7], pmax) {
        let g = qp_group(p, 3);
        let phi = AddChar::with_conductor(g.field(), -1);
        let alphas: Vec<MultChar> = enumerate_mult_chars(&g, Some(RootOfUnity::one()))
            .into_iter()
            .filter(|a| matches!(a.conductor(), 2 | 3))
            .collect();
        let mut betas = Vec::new();
        for u in [RootOfUnity::one(), RootOfUnity::new(1, 4)] {
            betas.extend(enumerate_mult_chars(&g, Some(u)).into_iter().filter(|b| b.conductor() <= 1));
        }
        for a in &alphas {
            for b in &betas {
                cells.push((a.clone(), b.clone(), phi.clone()));
            }
        }
    }
    let mut out = sweep(&cells, jobs, |(a, b, phi)| {
        let par = params! {
            "p" => a.field().p(), "alpha" => format_char(a), "beta" => format_char(b),
            "a_alpha" => a.conductor(), "a_beta" => b.conductor(),
        };
        match deligne_twist_sides(a, b, phi) {
            Ok((l, r)) => match l.equals(&r) {
                Ok(eq) => vec![Case::new("dlgn", par).compared(format!("{r}"), format!("{l}"), eq)],
                Err(e) => vec![failed("dlgn", par, e)],
            },
            Err(e) => vec![failed("dlgn", par, e)],
        }
    });
    for p in capped(&[3, 5, 7], pmax) {
        out.extend(deligne_witness(p));
    }
    out
}

fn deligne_witness(p: u64) -> Option<Case> {
    let g = qp_group(p, 3);
    let phi = AddChar::with_conductor(g.field(), -1);
    let chars = enumerate_mult_chars(&g, Some(RootOfUnity::one()));
    for a in chars.iter().filter(|c| c.conductor() == 2) {
        for b in chars.iter().filter(|c| c.conductor() == 2) {
            let Ok((l, r)) = deligne_twist_sides(a, b, &phi) else { continue };
            if l.equals(&r) == Ok(false) {
                let par = params! {
                    "p" => p, "alpha" => format_char(a), "beta" => format_char(b),
                    "a_alpha" => 2, "a_beta" => 2,
                };
                return Some(
                    Case::new("dlgn-precondition", par)
                        .silent(format!("{l}"))
                        .note(format!("twist formula side: {r}"))
                        .note("a(alpha) < 2 a(beta): sides differ"),
                );
            }
        }
    }
    None
}

pub fn chip(pmax: u64, jobs: usize) -> Vec<Case> {
    let ps = capped(&[2, 3, 5, 7, 11, 13, 17, 19, 23, 29], pmax);
    sweep(&ps, jobs, |&p| {
        let par = params! { "p" => p };
        vec![match eps_chi_p(p) {
            Ok(v) => Case::from_verdict("chip", par, v),
            Err(e) => failed("chip", par, e),
        }]
    })
}

/// Principal series over every ramified `omega_p` of conductor at most 2
/// (at most 3 for p = 2) and weights 2, 3, 4.
pub fn psr(pmax: u64, grid: &Grid) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[2, 3, 5, 7, 13], pmax) {
        let g = qp_group(p, if p == 2 { 3 } else { 2 });
        for w in enumerate_mult_chars(&g, Some(RootOfUnity::one())) {
            if w.conductor() == 0 {
                continue;
            }
            for k in [2u32, 3, 4] {
                cells.push((w.clone(), k));
            }
        }
    }
    let digits = grid.precision;
    sweep(&cells, grid.jobs, |(w, k)| {
        let par = params! {
            "p" => w.field().p(), "k" => k, "omega" => format_char(w),
            "N_p" => w.conductor(), "m" => w.order(),
        };
        vec![match principal_series(*k, w, digits) {
            Ok(v) => Case::from_verdict("psr", par, v),
            Err(e) => failed("psr", par, e),
        }]
    })
}

pub fn sp(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[2, 3, 5, 7, 13], pmax) {
        for k in [2u32, 3, 4] {
            cells.push((p, k));
        }
    }
    sweep(&cells, jobs, |&(p, k)| {
        let par = params! { "p" => p, "k" => k };
        vec![match special(p, k) {
            Ok(v) => Case::from_verdict("sp", par, v),
            Err(e) => failed("sp", par, e),
        }]
    })
}

fn admissible(k: &LocalField, level: u32, conductors: &[u32]) -> Vec<MultChar> {
    let g = UnitGroup::new(k, level).expect("small unit group");
    enumerate_mult_chars(&g, Some(RootOfUnity::one()))
        .into_iter()
        .filter(|c| conductors.contains(&c.conductor()))
        .filter(|c| c.admissible_and_minimal().map(|(a, _)| a).unwrap_or(false))
        .collect()
}

/// `K` unramified, `a(chi) = 2`: the Gauss sum shortcut and `eps_p = 1`.
pub fn main_unram(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[3, 5], pmax) {
        let k = LocalField::quadratic(p, least_nonresidue(p) as i64).expect("unramified field");
        cells.extend(admissible(&k, 2, &[2]));
    }
    sweep(&cells, jobs, |chi| {
        let p = chi.field().p();
        let par = params! { "p" => p, "t" => chi.field().t(), "chi" => format_char(chi) };
        let mut out = Vec::new();
        match unramified_tau_check(chi) {
            Ok((tau_ok, c_exact)) => out.push(
                Case::new("main-unram-tau", par.clone())
                    .compared("p^2*phi_K(1/p^2)".into(), format!("tau(chi, phi_K) matches: {tau_ok}"), tau_ok)
                    .note(format!("Deligne's c is exactly p^-2: {c_exact}")),
            ),
            Err(e) => out.push(failed("main-unram-tau", par.clone(), e)),
        }
        out.push(match supercuspidal(chi) {
            Ok(v) => Case::from_verdict("main-unram", par, v),
            Err(e) => failed("main-unram", par, e),
        });
        out
    })
}

/// Ramified `K`: odd p with `a(chi)` in `{2, 3}`, and all six ramified
/// extensions of Q_2 with `a(chi) <= 4`.
pub fn main_ram(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[2, 3, 5, 7, 11], pmax) {
        if p == 2 {
            for t in [-1i64, 2, -2, 3, 6, -6] {
                let k = LocalField::quadratic(2, t).expect("ramified field");
                cells.extend(admissible(&k, 5, &[2, 3, 4]));
            }
        } else {
            let p_i = p as i64;
            for t in [-p_i, -p_i * least_nonresidue(p) as i64] {
                let k = LocalField::quadratic(p, t).expect("ramified field");
                cells.extend(admissible(&k, 3, &[2, 3]));
            }
        }
    }
    sweep(&cells, jobs, |chi| {
        let par = params! {
            "p" => chi.field().p(), "t" => chi.field().t(), "a_chi" => chi.conductor(), "chi" => format_char(chi),
        };
        vec![match supercuspidal(chi) {
            Ok(v) => Case::from_verdict("main-ram", par, v),
            Err(e) => failed("main-ram", par, e),
        }]
    })
}

fn tame_cells(p: u64, keep: impl Fn(u64) -> bool) -> Vec<FiniteFieldChar> {
    let f = Arc::new(FiniteField::new(p, 2).expect("F_{p^2}"));
    enumerate_finite_chars(&f).into_iter().filter(|c| !c.is_trivial() && keep(c.order())).collect()
}

fn tame_cases(chit: &FiniteFieldChar, digits: u32, theorems: &[&str]) -> Vec<Case> {
    let p = chit.field().p();
    let par = params! { "p" => p, "chi_tilde" => chit.exponent(), "m" => chit.order() };
    match tame_unramified(chit, digits) {
        Ok(claims) => claims
            .into_iter()
            .filter(|c| theorems.contains(&c.theorem))
            .map(|c| Case::from_verdict(c.theorem, par.clone(), c.verdict))
            .collect(),
        Err(e) => vec![failed(theorems[0], par, e)],
    }
}

/// Tame unramified supercuspidals: even orders and odd `m | p - 1`.
pub fn evenodd(pmax: u64, grid: &Grid) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[7, 13, 31], pmax) {
        cells.extend(tame_cells(p, |m| m % 2 == 0 || (p - 1) % m == 0));
    }
    let digits = grid.precision.max(8);
    sweep(&cells, grid.jobs, |c| tame_cases(c, digits, &["evenodd"]))
}

/// Orders `m | p + 1`, where the Stickelberger evaluation applies, and the
/// tame constant at p = 2.
pub fn appstkl(pmax: u64, grid: &Grid) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in primes(2, pmax) {
        cells.extend(tame_cells(p, |m| (p + 1) % m == 0));
    }
    let digits = grid.precision;
    sweep(&cells, grid.jobs, |c| tame_cases(c, digits, &["appstkl", "cp0-corollary"]))
}

/// `t` and `t'` give the same extension of Q_p.
pub fn same_field(p: u64, t: i64, u: i64) -> bool {
    let prod = t as i128 * u as i128;
    let v = epslocal_core::arith::val(prod, p);
    if v % 2 == 1 {
        return false;
    }
    let unit = prod / (p as i128).pow(v);
    if p == 2 {
        unit.rem_euclid(8) == 1
    } else {
        legendre(unit, p) == 1
    }
}

fn field_list(p: u64) -> Vec<i64> {
    if p == 2 {
        vec![-3, -1, 2, -2, 3, 6, -6]
    } else {
        let u = least_nonresidue(p) as i64;
        vec![u, -(p as i64), -(p as i64) * u]
    }
}

/// Admissible pairs grouped by `(K, a(chi), minimal)`: the parity claims
/// against the induced conductor, and the classifier run on that conductor.
pub fn parity_suite(pmax: u64, jobs: usize) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in capped(&[2, 3, 5], pmax) {
        for t in field_list(p) {
            cells.push((p, t));
        }
    }
    sweep(&cells, jobs, |&(p, t)| {
        let k = LocalField::quadratic(p, t).expect("quadratic field");
        let level = if p == 2 { 4 } else { 3 };
        let g = UnitGroup::new(&k, level).expect("small unit group");
        let mut classes: std::collections::BTreeMap<(u32, bool), usize> = Default::default();
        for chi in enumerate_mult_chars(&g, Some(RootOfUnity::one())) {
            let a = chi.conductor();
            if a == 0 {
                continue;
            }
            if let Ok((true, min)) = chi.admissible_and_minimal() {
                *classes.entry((a, min)).or_default() += 1;
            }
        }
        let mut out = Vec::new();
        for (&(a, minimal), &pairs) in &classes {
            out.extend(parity_class(&k, a, minimal, pairs));
        }
        out
    })
}

fn parity_class(k: &LocalField, a: u32, minimal: bool, pairs: usize) -> Vec<Case> {
    let p = k.p();
    let par = params! { "p" => p, "t" => k.t(), "a_chi" => a, "minimal" => minimal, "pairs" => pairs };
    let n_p = match conductor_of_induced(k, a) {
        Ok(n) => n,
        Err(e) => return vec![failed("parity", par, e)],
    };
    let name = |x: Parity| if x == Parity::Even { "even" } else { "odd" };
    let mut out = Vec::new();
    let d = k.disc_valuation();
    let flag = (p == 2 && k.kind() == Ramification::Ramified).then_some(a - 1 >= d);
    let th = if p == 2 { "n2" } else { "np" };
    let par_n = {
        let mut m = par.clone();
        m.insert("N_p".into(), n_p.into());
        m
    };
    match parity_characterize(p, k.kind(), Some(minimal), flag) {
        Ok(claim) => {
            out.push(Case::new(th, par_n.clone()).compared(
                name(claim).into(),
                name(Parity::of(n_p)).into(),
                claim == Parity::of(n_p),
            ));
        }
        Err(_) => out.push(
            Case::new(th, par_n.clone()).silent(name(Parity::of(n_p)).into()).note("l(chi) < d: no parity claimed"),
        ),
    }
    if k.kind() == Ramification::Ramified && flag != Some(false) {
        if let Ok(claim) = chi_conductor_parity(k, minimal) {
            out.push(Case::new("a-chi-parity", par_n.clone()).compared(
                name(claim).into(),
                name(Parity::of(a)).into(),
                claim == Parity::of(a),
            ));
        }
    }
    let datum = NewformLocalDatum { p, n_p, c_p: 0, minimal: Some(minimal), ..Default::default() };
    let t = k.t().unwrap_or(0);
    let found = match classify_local_type(&datum) {
        Ok(r) => match r.local_type {
            LocalType::Supercuspidal { candidates } => {
                let labels: Vec<String> = candidates.iter().map(|c| c.field.describe(p)).collect();
                let hit = candidates.iter().any(|c| match c.field {
                    FieldLabel::Quadratic { t: u, .. } => same_field(p, t, u),
                    FieldLabel::PossiblyNonDihedral => false,
                });
                Ok((labels.join("; "), hit))
            }
            other => Ok((other.name().to_string(), false)),
        },
        Err(e) => Err(e),
    };
    out.push(match found {
        Ok((labels, hit)) => Case::new("classify-induced", par_n).compared(k_label(k), labels, hit),
        Err(e) => failed("classify-induced", par_n, e),
    });
    out
}

fn k_label(k: &LocalField) -> String {
    let label = FieldLabel::Quadratic { t: k.t().unwrap_or(0), ramified: k.kind() == Ramification::Ramified };
    format!("contains {}", label.describe(k.p()))
}

/// `(Gamma_p(1/2m) / Gamma_p(1/m))^2` against its factorial form mod p,
/// odd `m > 1` dividing `p - 1`.
pub fn corollary_x0(pmax: u64, grid: &Grid) -> Vec<Case> {
    let mut cells = Vec::new();
    for p in primes(3, pmax) {
        for m in divisors(p - 1).into_iter().filter(|&m| m > 1 && m % 2 == 1) {
            cells.push((p, m));
        }
    }
    sweep(&cells, grid.jobs, |&(p, m)| {
        let par = params! { "p" => p, "m" => m };
        vec![match gap_factorial_check(p, m) {
            Ok((l, r)) => Case::new("corollary-x0", par).compared(format!("{r}"), format!("{l}"), l == r),
            Err(e) => failed("corollary-x0", par, e),
        }]
    })
}
