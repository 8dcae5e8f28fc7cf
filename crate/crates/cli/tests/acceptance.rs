//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria that fail do so for reasons recorded with the project notes;
//! the run exits nonzero only when an outcome differs from `EXPECTED` or a
//! criterion cannot be evaluated at all.

use std::process::{Command, ExitCode};

use epslocal::classify_io::classify_lines;
use epslocal::report::{Case, Status};
use epslocal::suites::{self, Grid};

/// p-adic comparisons: digits of the leading unit.
const GK_DIGITS: u32 = 8;
const GAP_DIGITS: u32 = 6;
/// Working precision handed to the suites; the gap check compares at `PRECISION - 2`.
const PRECISION: u32 = GAP_DIGITS + 4;

const EXPECTED: &[(&str, bool)] = &[
    ("1", true),
    ("2", false),
    ("3", true),
    ("4", false),
    ("5", true),
    ("6", false),
    ("7a", false),
    ("7b", false),
    ("7c", false),
    ("8", false),
    ("9", false),
    ("10", true),
    ("11", true),
];

struct Outcome {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn grid() -> Grid {
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    Grid { pmax: None, precision: PRECISION, jobs }
}

fn tally(cases: &[&Case]) -> String {
    let n = |s| cases.iter().filter(|c| c.status() == s).count();
    format!("{} cases: {} equal, {} differ, {} silent", cases.len(), n(Status::Pass), n(Status::Fail), n(Status::Silent))
}

fn all_equal(cases: &[&Case]) -> bool {
    !cases.is_empty() && cases.iter().all(|c| c.equal == Some(true))
}

fn param(c: &Case, k: &str) -> i64 {
    c.parameters.get(k).and_then(|v| v.as_i64()).unwrap_or(i64::MIN)
}

fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

fn c1(g: &Grid) -> Outcome {
    let cases = suites::gauss_modulus(31, g.jobs);
    let refs: Vec<&Case> = cases.iter().collect();
    // every nontrivial character of F_p and F_{p^2}
    let expected: u64 = primes_upto(31).iter().map(|&p| (p - 2) + (p * p - 2)).sum();
    Outcome {
        id: "1",
        pass: all_equal(&refs) && cases.len() as u64 == expected,
        detail: format!("Gauss sum modulus, q in {{p, p^2}}, p <= 31, exact: {}", tally(&refs)),
    }
}

fn c2(g: &Grid) -> Outcome {
    let cases = suites::chip(29, g.jobs);
    let refs: Vec<&Case> = cases.iter().collect();
    let bad: Vec<String> =
        cases.iter().filter(|c| c.equal != Some(true)).map(|c| format!("p={}: {}", param(c, "p"), c.oracle)).collect();
    Outcome {
        id: "2",
        pass: all_equal(&refs) && cases.len() == 10,
        detail: format!("eps(chi_p, phi), n(phi) = -1: {}; differing {:?}", tally(&refs), bad),
    }
}

fn c3(g: &Grid) -> Outcome {
    let cases = suites::dh(31, g.jobs);
    let refs: Vec<&Case> = cases.iter().collect();
    let expected: u64 = primes_upto(31).iter().map(|&p| p - 1).sum();
    Outcome {
        id: "3",
        pass: all_equal(&refs) && cases.len() as u64 == expected,
        detail: format!("G_2(chi o N) = -G_1(chi)^2, p <= 31: {}", tally(&refs)),
    }
}

fn c4(g: &Grid) -> Outcome {
    let g = Grid { precision: g.precision.max(GK_DIGITS + 2), ..g.clone() };
    let cases = suites::gk(13, &g);
    let refs: Vec<&Case> = cases.iter().collect();
    let signed = cases.iter().filter(|c| c.notes.iter().any(|n| n.ends_with("sign: true"))).count();
    Outcome {
        id: "4",
        pass: all_equal(&refs),
        detail: format!(
            "G_1(chi^r) = pi^(r(p-1)/k) Gamma_p(r/k) to {GK_DIGITS} digits, p <= 13: {}; \
             agreeing after a sign flip: {signed}",
            tally(&refs)
        ),
    }
}

fn c5(g: &Grid) -> Outcome {
    let cases = suites::deligne(7, g.jobs);
    let main: Vec<&Case> = cases.iter().filter(|c| c.theorem == "dlgn").collect();
    let witnesses = cases.iter().filter(|c| c.theorem == "dlgn-precondition").count();
    let covered = [3, 5, 7].iter().all(|&p| main.iter().any(|c| param(c, "p") == p && param(c, "a_alpha") == 3));
    Outcome {
        id: "5",
        pass: all_equal(&main) && witnesses >= 1 && covered,
        detail: format!("twist formula, p in {{3,5,7}}: {}; precondition witnesses: {witnesses}", tally(&main)),
    }
}

fn c6(g: &Grid) -> Outcome {
    let psr = suites::psr(13, g);
    let sp = suites::sp(13, g.jobs);
    let p_refs: Vec<&Case> = psr.iter().collect();
    let s_refs: Vec<&Case> = sp.iter().collect();
    let cp: Vec<&Case> = psr.iter().filter(|c| c.notes.iter().any(|n| n.starts_with("compared after"))).collect();
    let cp_ok = cp.iter().any(|c| param(c, "p") % 4 == 3 && param(c, "N_p") == 1);
    Outcome {
        id: "6",
        pass: all_equal(&p_refs) && all_equal(&s_refs) && cp_ok,
        detail: format!("psr {}; c_p branch {}; sp {}", tally(&p_refs), tally(&cp), tally(&s_refs)),
    }
}

fn c7(g: &Grid) -> Vec<Outcome> {
    let un = suites::main_unram(5, g.jobs);
    let tau: Vec<&Case> = un.iter().filter(|c| c.theorem == "main-unram-tau").collect();
    let eps: Vec<&Case> = un.iter().filter(|c| c.theorem == "main-unram").collect();
    let ram = suites::main_ram(11, g.jobs);
    let odd: Vec<&Case> = ram.iter().filter(|c| param(c, "p") != 2).collect();
    let two: Vec<&Case> = ram.iter().filter(|c| param(c, "p") == 2).collect();
    let minimal = |flag: bool| two.iter().any(|c| c.notes.iter().any(|n| n.ends_with(&format!("minimal = {flag}"))));
    let fields = [-1, 2, -2, 3, 6, -6].iter().all(|&t| two.iter().any(|c| param(c, "t") == t));
    let odd_cover = [3, 5, 7, 11].iter().all(|&p| odd.iter().any(|c| param(c, "p") == p));
    vec![
        Outcome {
            id: "7a",
            pass: all_equal(&tau) && all_equal(&eps),
            detail: format!("K unramified, a(chi) = 2: tau {}; eps_p {}", tally(&tau), tally(&eps)),
        },
        Outcome {
            id: "7b",
            pass: all_equal(&odd) && odd_cover,
            detail: format!("K ramified, odd p <= 11, a(chi) in {{2,3}}: {}", tally(&odd)),
        },
        Outcome {
            id: "7c",
            pass: all_equal(&two) && fields && minimal(true) && minimal(false),
            detail: format!(
                "p = 2, six ramified K, a(chi) <= 4: {}; both minimality flags seen: {}",
                tally(&two),
                minimal(true) && minimal(false)
            ),
        },
    ]
}

fn c8(g: &Grid) -> Outcome {
    let cases = suites::evenodd(31, g);
    let even: Vec<&Case> = cases.iter().filter(|c| param(c, "m") % 2 == 0).collect();
    let gap: Vec<&Case> = cases.iter().filter(|c| param(c, "m") % 2 == 1).collect();
    let x0 = suites::corollary_x0(31, g);
    let x0_refs: Vec<&Case> = x0.iter().collect();
    Outcome {
        id: "8",
        pass: all_equal(&even) && all_equal(&gap) && all_equal(&x0_refs),
        detail: format!(
            "even orders {}; gap (>= {GAP_DIGITS} digits) {}; factorial corollary {}",
            tally(&even),
            tally(&gap),
            tally(&x0_refs)
        ),
    }
}

fn c9(g: &Grid) -> Outcome {
    let cases = suites::appstkl(50, g);
    let ap: Vec<&Case> = cases.iter().filter(|c| c.theorem == "appstkl").collect();
    let branch = |f: &dyn Fn(i64, i64) -> bool| -> Vec<&Case> {
        ap.iter().copied().filter(|c| !c.theorem_silent && f(param(c, "p"), param(c, "m"))).collect()
    };
    let odd1 = branch(&|p, m| p % 4 == 1 && m % 2 == 1);
    let even1 = branch(&|p, m| p % 4 == 1 && m % 2 == 0);
    let three = branch(&|p, _| p % 4 == 3);
    let two = branch(&|p, _| p == 2);
    let silent: Vec<&Case> = ap.iter().copied().filter(|c| c.theorem_silent).collect();
    let silent_ok = !silent.is_empty() && silent.iter().all(|c| c.equal.is_none() && c.closed_form.is_none());
    Outcome {
        id: "9",
        pass: [&odd1, &even1, &three, &two].iter().all(|b| all_equal(b)) && silent_ok,
        detail: format!(
            "p <= 50: (m odd, p = 1 mod 4) {}; (m even, p = 1 mod 4) {}; (p = 3 mod 4) {}; eps_2 {}; silent {}",
            tally(&odd1),
            tally(&even1),
            tally(&three),
            tally(&two),
            silent.len()
        ),
    }
}

fn classify_rows() -> Result<(), String> {
    let rows: &[(&str, &[&str], &[&str])] = &[
        (r#"{"p": 7, "Np": 1, "Cp": 0}"#, &[r#""type":"Steinberg""#], &[]),
        (r#"{"p": 7, "Np": 2, "Cp": 2}"#, &[r#""type":"principal series""#], &[]),
        (r#"{"p": 7, "Np": 4, "Cp": 0, "minimal": true}"#, &["Q_7(sqrt(3)) unramified"], &[") ramified"]),
        (
            r#"{"p": 7, "Np": 3, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": -1, "Nprime_factors": [[3, 1]]}"#,
            &["Q_7(sqrt(-7)) ramified", "3(a)"],
            &["sqrt(-21)"],
        ),
        (
            r#"{"p": 7, "Np": 3, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": 1, "Nprime_factors": [[3, 1]]}"#,
            &["Q_7(sqrt(-21)) ramified", "3(b)"],
            &["sqrt(-7))"],
        ),
        (
            r#"{"p": 5, "Np": 3, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": 1, "Nprime_factors": []}"#,
            &["cannot be told apart", "Q_5(sqrt(-5))", "Q_5(sqrt(-10))"],
            &[],
        ),
        (
            r#"{"p": 2, "Np": 5, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": {"-1": -1}, "Nprime_factors": []}"#,
            &["relation II", "Q_2(sqrt(6))", "Q_2(sqrt(-6))"],
            &["sqrt(3)"],
        ),
        (
            r#"{"p": 2, "Np": 6, "Cp": 0, "minimal": false}"#,
            &["unramified and ramified K both give N_2 even", "Q_2(sqrt(-3)) unramified", "S4"],
            &[],
        ),
        (r#"{"p": 5, "Np": 2, "Cp": 3}"#, &[r#""error""#], &[]),
    ];
    for (input, must, must_not) in rows {
        let (out, _) = classify_lines(input);
        let line = out.first().ok_or("no output")?;
        if let Some(m) = must.iter().find(|m| !line.contains(*m)) {
            return Err(format!("{input}: missing {m} in {line}"));
        }
        if let Some(m) = must_not.iter().find(|m| line.contains(*m)) {
            return Err(format!("{input}: unexpected {m} in {line}"));
        }
    }
    Ok(())
}

fn c10(g: &Grid) -> Outcome {
    let cases = suites::parity_suite(5, g.jobs);
    let claimed: Vec<&Case> = cases.iter().filter(|c| matches!(c.theorem.as_str(), "np" | "n2" | "a-chi-parity")).collect();
    let induced: Vec<&Case> = cases.iter().filter(|c| c.theorem == "classify-induced").collect();
    let rows = classify_rows();
    let claimed_ok = claimed.iter().all(|c| c.equal != Some(false)) && claimed.iter().any(|c| c.equal == Some(true));
    Outcome {
        id: "10",
        pass: claimed_ok && all_equal(&induced) && rows.is_ok(),
        detail: format!(
            "parity vs enumeration {}; classify o conductor_of_induced {}; corollary rows {}",
            tally(&claimed),
            tally(&induced),
            rows.err().unwrap_or_else(|| "ok".into())
        ),
    }
}

fn c11(g: &Grid) -> Outcome {
    let serial = Grid { jobs: 1, ..g.clone() };
    let wide = Grid { jobs: 4, ..g.clone() };
    let mut same = true;
    for s in ["psr", "chip", "corollary-x0"] {
        let a = suites::run_suite(s, &serial).map(|r| r.to_jsonl());
        let b = suites::run_suite(s, &wide).map(|r| r.to_jsonl());
        same &= a.is_ok() && a == b;
    }
    let bin = env!("CARGO_BIN_EXE_epslocal");
    let run = || {
        Command::new(bin)
            .args(["verify", "sp", "--jobs", "2"])
            .env("EPSLOCAL_PRECISION", PRECISION.to_string())
            .output()
            .map(|o| o.stdout)
    };
    let (x, y) = (run(), run());
    let bin_same = matches!((&x, &y), (Ok(a), Ok(b)) if a == b && !a.is_empty());
    Outcome {
        id: "11",
        pass: same && bin_same,
        detail: format!("library reruns across job counts identical: {same}; binary reruns identical: {bin_same}"),
    }
}

fn main() -> ExitCode {
    let g = grid();
    let mut outcomes = vec![c1(&g), c2(&g), c3(&g), c4(&g), c5(&g), c6(&g)];
    outcomes.extend(c7(&g));
    outcomes.extend([c8(&g), c9(&g), c10(&g), c11(&g)]);
    let mut surprises = Vec::new();
    for o in &outcomes {
        println!("{} criterion {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.detail);
        let expected = EXPECTED.iter().find(|(id, _)| *id == o.id).map(|(_, e)| *e);
        if expected != Some(o.pass) {
            surprises.push(o.id);
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("{passed}/{} criteria pass", outcomes.len());
    if surprises.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("outcome changed for criteria {surprises:?}; update the expectations with an explanation");
        ExitCode::FAILURE
    }
}
