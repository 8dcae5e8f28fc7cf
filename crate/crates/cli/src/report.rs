//! JSON-lines records for verification runs.

use std::fmt::Write as _;
use std::time::Duration;

use epslocal_core::epsilon::theorems::Verdict;
use serde::Serialize;
use serde_json::{Map, Value};

/// Everything a run depends on besides its grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Convention {
    /// Conductor of the additive character.
    pub n_phi: String,
    /// How characters are pinned down by exponents.
    pub generator: String,
    /// p-adic digits carried, when the suite uses any.
    pub precision: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Silent,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub theorem: String,
    pub parameters: Map<String, Value>,
    pub closed_form: Option<String>,
    pub oracle: String,
    pub equal: Option<bool>,
    pub theorem_silent: bool,
    pub notes: Vec<String>,
}

impl Case {
    pub fn new(theorem: &str, parameters: Map<String, Value>) -> Self {
        Case {
            theorem: theorem.to_string(),
            parameters,
            closed_form: None,
            oracle: String::new(),
            equal: None,
            theorem_silent: false,
            notes: Vec::new(),
        }
    }

    pub fn from_verdict(theorem: &str, parameters: Map<String, Value>, v: Verdict) -> Self {
        Case {
            theorem: theorem.to_string(),
            parameters,
            theorem_silent: v.is_silent(),
            closed_form: v.closed_form,
            oracle: v.oracle,
            equal: v.equal,
            notes: v.notes,
        }
    }

    /// Both sides given, compared exactly.
    pub fn compared(mut self, closed: String, oracle: String, equal: bool) -> Self {
        self.closed_form = Some(closed);
        self.oracle = oracle;
        self.equal = Some(equal);
        self
    }

    /// Oracle only, never asserted.
    pub fn silent(mut self, oracle: String) -> Self {
        self.oracle = oracle;
        self.equal = None;
        self.theorem_silent = true;
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn status(&self) -> Status {
        match self.equal {
            Some(true) => Status::Pass,
            Some(false) => Status::Fail,
            None => Status::Silent,
        }
    }
}

/// Builds a parameter map from `(name, value)` pairs.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = serde_json::Map::new();
        $( m.insert(String::from($k), serde_json::json!($v)); )*
        m
    }};
}

#[derive(Serialize)]
struct Header<'a> {
    suite: &'a str,
    grid: &'a Map<String, Value>,
    convention: &'a Convention,
}

#[derive(Serialize)]
struct Totals {
    cases: usize,
    passed: usize,
    failed: usize,
    silent: usize,
}

#[derive(Clone, Debug)]
pub struct VerificationRun {
    pub suite: String,
    pub grid: Map<String, Value>,
    pub convention: Convention,
    pub cases: Vec<Case>,
    pub wall_time: Duration,
}

impl VerificationRun {
    pub fn count(&self, s: Status) -> usize {
        self.cases.iter().filter(|c| c.status() == s).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// Header line, one line per case, totals line. Wall time stays out so
    /// equal runs give equal bytes.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let header = Header { suite: &self.suite, grid: &self.grid, convention: &self.convention };
        out.push_str(&line(&header));
        out.push('\n');
        for c in &self.cases {
            out.push_str(&line(c));
            out.push('\n');
        }
        let totals = Totals {
            cases: self.cases.len(),
            passed: self.count(Status::Pass),
            failed: self.count(Status::Fail),
            silent: self.count(Status::Silent),
        };
        out.push_str(&serde_json::json!({ "totals": totals }).to_string());
        out.push('\n');
        out
    }

    /// Human summary: totals, wall time, and the failing and silent cases.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{}: {} cases, {} passed, {} failed, {} theorem silent ({:.2?})",
            self.suite,
            self.cases.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Silent),
            self.wall_time
        );
        for (label, st) in [("FAIL", Status::Fail), ("silent", Status::Silent)] {
            let hits: Vec<&Case> = self.cases.iter().filter(|c| c.status() == st).collect();
            for c in hits.iter().take(20) {
                let _ = writeln!(
                    s,
                    "  {label} {} {} closed={} oracle={}",
                    c.theorem,
                    Value::Object(c.parameters.clone()),
                    c.closed_form.as_deref().unwrap_or("-"),
                    c.oracle
                );
            }
            if hits.len() > 20 {
                let _ = writeln!(s, "  ... {} more {label}", hits.len() - 20);
            }
        }
        s
    }
}

fn line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report records serialize")
}
