use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use epslocal::classify_io::classify_lines;
use epslocal::suites::{run_suite, Grid, DEFAULT_PRECISION, SUITES};
use epslocal_core::characters::FiniteFieldChar;
use epslocal_core::cyclotomic::{CyclotomicField, RootOfUnity, RootSum};
use epslocal_core::epsilon::gauss::gauss_order;
use epslocal_core::gamma::gamma_p;
use epslocal_core::residue::FiniteField;
use serde_json::json;

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "epslocal", version, about = "Gauss sums, Gamma_p and local epsilon factor checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gauss sum of chi(g) = zeta_(q-1)^chi on F_(p^r), exact and complex.
    GaussSum {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'r', default_value_t = 1)]
        r: u32,
        #[arg(long)]
        chi: u64,
        /// Additive character x -> zeta_p^Tr(s x).
        #[arg(long, default_value_t = 1)]
        scale: i64,
    },
    /// Morita's Gamma_p at a rational point, to k digits.
    GammaP {
        #[arg(short = 'p')]
        p: u64,
        /// `n` or `n/d`.
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        #[arg(short = 'k')]
        k: Option<u32>,
    },
    /// Runs a verification suite and writes JSON lines.
    Verify {
        suite: String,
        #[arg(long)]
        pmax: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// p-adic digits; overrides EPSLOCAL_PRECISION.
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Classifies newform records from a JSON-lines file.
    Classify { input: PathBuf, output: Option<PathBuf> },
}

fn precision(flag: Option<u32>) -> Result<u32, String> {
    if let Some(k) = flag {
        return Ok(k);
    }
    match std::env::var("EPSLOCAL_PRECISION") {
        Ok(v) => v.trim().parse().map_err(|_| format!("EPSLOCAL_PRECISION must be a positive integer, got '{v}'")),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn exact_string(coeffs: &[i64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match k {
            0 => format!("{c}"),
            1 => format!("{c}*z"),
            _ => format!("{c}*z^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn gauss_sum(p: u64, r: u32, e: u64, scale: i64) -> Result<String, String> {
    let f = Arc::new(FiniteField::new(p, r).map_err(|e| e.to_string())?);
    let s = f.from_int(scale);
    if s == 0 {
        return Err("the additive scale must be nonzero mod p".into());
    }
    let chi = FiniteFieldChar::new(f.clone(), e);
    let n = gauss_order(&chi);
    let mut sum = RootSum::new(n);
    for x in 1..f.order() as u32 {
        let c = chi.value(x).map_err(|e| e.to_string())?;
        sum.add_root(&c.mul(&RootOfUnity::new(f.trace(f.mul(s, x)) as i128, p)), 1);
    }
    let field = CyclotomicField::new(n);
    let g = sum.to_element(&field).map_err(|e| e.to_string())?;
    let (re, im) = g.complex_embed();
    Ok(json!({
        "p": p, "r": r, "chi": chi.exponent(), "order": chi.order(), "scale": scale,
        "ring": format!("Z[z], z = zeta_{n}"),
        "coefficients": g.coeffs(),
        "exact": exact_string(g.coeffs()),
        "complex": [re, im],
        "modulus": re.hypot(im),
        "sqrt_q": (f.order() as f64).sqrt(),
    })
    .to_string())
}

fn gamma(p: u64, z: &str, k: Option<u32>) -> Result<String, String> {
    let k = precision(k)?;
    let (n, d) = match z.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (z.trim(), "1"),
    };
    let bad = || format!("z must be n or n/d, got '{z}'");
    let n: i128 = n.parse().map_err(|_| bad())?;
    let d: i128 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    let v = gamma_p(n, d, p, k).map_err(|e| e.to_string())?;
    Ok(json!({
        "p": p, "z": format!("{n}/{d}"), "k": k,
        "value": v.to_string(),
        "digits": v.unit_digits(),
        "residue": v.residue(k).map_err(|e| e.to_string())?.to_string(),
    })
    .to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::GaussSum { p, r, chi, scale } => {
            println!("{}", gauss_sum(p, r, chi, scale)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::GammaP { p, z, k } => {
            println!("{}", gamma(p, &z, k)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, pmax, jobs, precision: k, output } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(format!("unknown suite '{suite}'; expected one of {}", SUITES.join(", ")));
            }
            let grid = Grid { pmax, precision: precision(k)?, jobs };
            let run = run_suite(&suite, &grid)?;
            emit(output.as_ref(), &run.to_jsonl())?;
            eprint!("{}", run.summary());
            Ok(if run.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Classify { input, output } => {
            let text =
                std::fs::read_to_string(&input).map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let (lines, ok) = classify_lines(&text);
            let mut body = lines.join("\n");
            if !body.is_empty() {
                body.push('\n');
            }
            emit(output.as_ref(), &body)?;
            for l in lines.iter().filter(|l| l.starts_with("{\"error\"")) {
                eprintln!("rejected: {l}");
            }
            eprintln!("classified {} records", lines.len());
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(USAGE) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("epslocal: {e}");
            ExitCode::from(USAGE)
        }
    }
}
