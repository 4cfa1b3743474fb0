//! Run reports: one data structure rendered as JSON or text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use supercochain::{format_scalar, Scalar, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

/// A basis tuple at which an identity fails, with the nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub rule: String,
    pub at: Vec<String>,
    pub value: Vec<Term>,
}

impl Witness {
    pub fn new(rule: &str, at: Vec<String>, value: &[(String, Scalar)]) -> Self {
        Witness {
            rule: rule.to_string(),
            at,
            value: value
                .iter()
                .map(|(b, c)| Term {
                    basis: b.clone(),
                    coeff: format_scalar(c),
                })
                .collect(),
        }
    }

    pub fn from_violation(v: &Violation) -> Self {
        Witness::new(&v.axiom, v.at.clone(), &v.defect)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRow {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cohomology {
    pub complex: String,
    pub rows: Vec<CohomologyRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderResult {
    pub order: usize,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failing: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinitesimalResult {
    pub order: usize,
    pub cocycle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationResult {
    pub kind: String,
    pub orders: Vec<OrderResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinitesimal: Option<InfinitesimalResult>,
}

/// Seeded consistency checks run alongside a command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfTest {
    pub seed: u64,
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub file: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Cohomology>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_test: Option<SelfTest>,
    /// Wall-clock milliseconds; only present when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, file: &str) -> Self {
        Report {
            command: command.to_string(),
            file: file.to_string(),
            passed: true,
            checks: Vec::new(),
            cohomology: None,
            deformation: None,
            self_test: None,
            timing_ms: None,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(out, "{} {}", self.command, self.file).unwrap();
        for c in &self.checks {
            writeln!(out, "  [{}] {}", mark(c.passed), c.name).unwrap();
            for w in &c.witnesses {
                writeln!(out, "        {}", witness_line(w)).unwrap();
            }
        }
        if let Some(h) = &self.cohomology {
            writeln!(out, "  cohomology of the {} complex", h.complex).unwrap();
            writeln!(out, "    {:>3} {:>6} {:>6}", "n", "even", "odd").unwrap();
            let cell = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            for r in &h.rows {
                writeln!(out, "    {:>3} {:>6} {:>6}", r.n, cell(r.even), cell(r.odd)).unwrap();
            }
        }
        if let Some(d) = &self.deformation {
            writeln!(out, "  {} deformation", d.kind).unwrap();
            for o in &d.orders {
                write!(out, "    order {} [{}]", o.order, mark(o.passed)).unwrap();
                if !o.failing.is_empty() {
                    write!(out, " failing: {}", o.failing.join(", ")).unwrap();
                }
                out.push('\n');
                for w in &o.witnesses {
                    writeln!(out, "        {}", witness_line(w)).unwrap();
                }
            }
            if let Some(i) = &d.infinitesimal {
                let kind = if i.cocycle { "a cocycle" } else { "not a cocycle" };
                writeln!(out, "    infinitesimal at order {} is {}", i.order, kind).unwrap();
            }
        }
        if let Some(s) = &self.self_test {
            writeln!(out, "  self-test seed {}: {} cases, {} failures", s.seed, s.cases, s.failures.len()).unwrap();
            for f in &s.failures {
                writeln!(out, "        {f}").unwrap();
            }
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "  time {ms} ms").unwrap();
        }
        writeln!(out, "verdict: {}", mark(self.passed)).unwrap();
        out
    }
}

fn witness_line(w: &Witness) -> String {
    let value: Vec<String> = w.value.iter().map(|t| format!("{}·{}", t.coeff, t.basis)).collect();
    let value = if value.is_empty() { "0".to_string() } else { value.join(" + ") };
    format!("{} at ({}): {}", w.rule, w.at.join(", "), value)
}
