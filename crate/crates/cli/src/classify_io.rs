//! JSON-lines newform records in, local type reports out.
//!
//! Input fields: `p`, `Np`, `Cp`, `minimal`, `weight`, `ap`, `epsF`,
//! `epsFtwist`, `Nprime_factors`. `epsFtwist` is either a sign (the twist
//! by `chi_p`, odd p) or an object from `t` to sign; `Nprime_factors` is a
//! list of `[q, e]` pairs.

use std::collections::BTreeMap;

use epslocal_core::classifier::{classify_local_type, LocalType, LocalTypeReport, NewformLocalDatum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    p: u64,
    #[serde(rename = "Np")]
    n_p: u32,
    #[serde(rename = "Cp", default)]
    c_p: u32,
    #[serde(default)]
    minimal: Option<bool>,
    #[serde(default)]
    weight: Option<u32>,
    #[serde(default)]
    ap: Option<Value>,
    #[serde(rename = "epsF", default)]
    eps_f: Option<i8>,
    #[serde(rename = "epsFtwist", default)]
    eps_twist: Option<Twists>,
    #[serde(rename = "Nprime_factors", default)]
    nprime_factors: Option<Vec<(u64, u32)>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Twists {
    Single(i8),
    ByT(BTreeMap<String, i8>),
}

fn sign(s: i8) -> Result<i8, String> {
    if s == 1 || s == -1 {
        Ok(s)
    } else {
        Err(format!("root numbers are +1 or -1, got {s}"))
    }
}

/// Parses one input line.
pub fn parse_datum(line: &str) -> Result<NewformLocalDatum, String> {
    let r: Record = serde_json::from_str(line).map_err(|e| format!("malformed record: {e}"))?;
    let eps_twist = match r.eps_twist {
        None => Vec::new(),
        Some(Twists::Single(s)) => {
            if r.p == 2 {
                return Err("at p = 2 epsFtwist must be keyed by t in {-1, 2, -2}".into());
            }
            vec![(r.p as i64, sign(s)?)]
        }
        Some(Twists::ByT(m)) => {
            let mut v = Vec::new();
            for (t, s) in m {
                let t: i64 = t.parse().map_err(|_| format!("twist key '{t}' is not an integer"))?;
                v.push((t, sign(s)?));
            }
            v
        }
    };
    if let Some(s) = r.eps_f {
        sign(s)?;
    }
    let a_p = r.ap.map(|v| match v {
        Value::String(s) => s,
        other => other.to_string(),
    });
    Ok(NewformLocalDatum {
        p: r.p,
        n_p: r.n_p,
        c_p: r.c_p,
        minimal: r.minimal,
        weight: r.weight,
        a_p,
        eps_f: r.eps_f,
        eps_twist,
        nprime_factors: r.nprime_factors,
    })
}

#[derive(Serialize)]
struct CandidateOut {
    field: String,
    epsilon_p: Option<String>,
    branch: Option<&'static str>,
}

#[derive(Serialize)]
struct StepOut {
    claim: String,
    reference: &'static str,
}

#[derive(Serialize)]
struct ReportOut {
    line: usize,
    p: u64,
    #[serde(rename = "Np")]
    n_p: u32,
    #[serde(rename = "Cp")]
    c_p: u32,
    #[serde(rename = "type")]
    kind: &'static str,
    epsilon_p: Option<String>,
    candidates: Vec<CandidateOut>,
    reasoning: Vec<StepOut>,
}

fn render(line: usize, d: &NewformLocalDatum, r: LocalTypeReport) -> String {
    let kind = r.local_type.name();
    let candidates = match r.local_type {
        LocalType::Supercuspidal { candidates } => candidates
            .into_iter()
            .map(|c| CandidateOut { field: c.field.describe(d.p), epsilon_p: c.epsilon_p, branch: c.branch })
            .collect(),
        _ => Vec::new(),
    };
    let out = ReportOut {
        line,
        p: d.p,
        n_p: d.n_p,
        c_p: d.c_p,
        kind,
        epsilon_p: r.epsilon_p,
        candidates,
        reasoning: r.reasoning.into_iter().map(|s| StepOut { claim: s.claim, reference: s.reference }).collect(),
    };
    serde_json::to_string(&out).expect("report serializes")
}

/// One output line per non-blank input line, in input order, and whether
/// every record was accepted. Rejections become `{"line", "error"}` lines.
pub fn classify_lines(input: &str) -> (Vec<String>, bool) {
    let lines: Vec<(usize, &str)> =
        input.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty()).collect();
    let results: Vec<Result<String, (usize, String)>> = lines
        .par_iter()
        .map(|&(n, l)| {
            let d = parse_datum(l).map_err(|e| (n, e))?;
            let r = classify_local_type(&d).map_err(|e| (n, e.to_string()))?;
            Ok(render(n, &d, r))
        })
        .collect();
    let mut ok = true;
    let out = results
        .into_iter()
        .map(|r| match r {
            Ok(s) => s,
            Err((n, e)) => {
                ok = false;
                serde_json::json!({ "line": n, "error": e }).to_string()
            }
        })
        .collect();
    (out, ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steinberg_line() {
        let (out, ok) = classify_lines(r#"{"p": 7, "Np": 1, "Cp": 0, "weight": 2, "ap": -1}"#);
        assert!(ok);
        assert!(out[0].contains(r#""type":"Steinberg""#), "{}", out[0]);
        assert!(out[0].contains(r#""epsilon_p":"7^((1)/2)*a_7""#), "{}", out[0]);
    }

    #[test]
    fn field_named_from_twist_relation() {
        let rec = r#"{"p": 7, "Np": 3, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": 1, "Nprime_factors": [[3, 1]]}"#;
        let (out, ok) = classify_lines(rec);
        assert!(ok);
        assert!(out[0].contains("Q_7(sqrt(-21)) ramified"), "{}", out[0]);
        assert!(!out[0].contains("sqrt(-7))"));
    }

    #[test]
    fn two_keyed_twists() {
        let rec = r#"{"p": 2, "Np": 5, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": {"-1": -1}, "Nprime_factors": []}"#;
        let d = parse_datum(rec).unwrap();
        assert_eq!(d.eps_twist, vec![(-1, -1)]);
        assert!(parse_datum(r#"{"p": 2, "Np": 5, "epsFtwist": 1}"#).is_err());
    }

    #[test]
    fn rejections_keep_their_line() {
        let input = "{\"p\": 5, \"Np\": 2, \"Cp\": 3}\n\n{\"p\": 5, \"Np\": 0}\nnot json\n";
        let (out, ok) = classify_lines(input);
        assert!(!ok);
        assert_eq!(out.len(), 3);
        assert!(out[0].starts_with(r#"{"error":"invalid input: C_p cannot exceed N_p","line":1}"#), "{}", out[0]);
        assert!(out[1].contains(r#""line":3"#));
        assert!(out[2].contains(r#""line":4"#) && out[2].contains("malformed"));
        assert!(parse_datum(r#"{"p": 5, "Np": 2, "epsF": 3}"#).is_err());
        assert!(parse_datum(r#"{"p": 5, "Np": 2, "colour": 3}"#).is_err());
    }
}
