//! JSON certificates.
//!
//! Scalars are stored in canonical text form so certificates diff cleanly.
//! Everything except `timing_ms` is a function of the inputs.

use serde::{Deserialize, Serialize};

pub const TOOL: &str = "qsmooth";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NoSolution,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NoSolution => "no-solution",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraInfo {
    pub name: String,
    /// `catalog:NAME` or the file path as given.
    pub source: String,
    pub k: u32,
    pub l: u32,
    pub parameter: String,
    pub mode: String,
}

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckLine { name: name.into(), ok, detail: detail.into() }
    }
}

/// Re-evaluation of the identities at a rational parameter value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericCheck {
    pub value: String,
    pub checks: Vec<CheckLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPairW {
    pub rules: [usize; 2],
    pub word: String,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleResidue {
    pub rule: String,
    pub residue: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientW {
    pub unknown: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnsatzTermW {
    pub unknown: String,
    /// `[first leg, second leg]` pairs.
    pub pairs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerLevelW {
    pub n: usize,
    pub terms: usize,
    pub degrees_ok: bool,
    pub mu_is_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwaCandidateW {
    pub plus: String,
    pub minus: String,
    pub kappa: Option<String>,
    pub chi: Option<String>,
    pub twist_plus_ok: bool,
    pub twist_minus_ok: bool,
    pub product_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageW {
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeW {
    pub name: String,
    /// DSL text of the source and target presentations.
    pub source: String,
    pub target: String,
    pub images: Vec<ImageW>,
    pub relation_failures: Vec<RuleResidue>,
    pub star_failures: Vec<RuleResidue>,
}

/// Task-specific evidence; each variant can be re-checked without solving.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Check {
        order_violations: Vec<RuleResidue>,
        involution_failures: Vec<RuleResidue>,
        star_closure_failures: Vec<RuleResidue>,
        critical_pairs: Vec<CriticalPairW>,
        ambiguities: usize,
    },
    Nf {
        input: String,
        normal_form: String,
    },
    Grade {
        grading: String,
        group: String,
        /// Rule index, offending word and its degree.
        violations: Vec<RuleResidue>,
    },
    Connection {
        grading: String,
        ansatz: String,
        terms: Vec<AnsatzTermW>,
        coefficients: Vec<CoefficientW>,
        free_unknowns: Vec<String>,
        mu: String,
        levels: Vec<PowerLevelW>,
    },
    Gwa {
        base: String,
        candidates: Vec<GwaCandidateW>,
        plus: Option<String>,
        minus: Option<String>,
        /// Coefficients of `p` from degree 0 upwards.
        p: Vec<String>,
        verdict: Option<String>,
        gcd: Vec<String>,
        bezout_s: Vec<String>,
        bezout_t: Vec<String>,
        nakayama_direct_ok: Option<bool>,
        nakayama_inverse_ok: Option<bool>,
    },
    Tower {
        base: String,
        edges: Vec<EdgeW>,
    },
    Validation {
        order_violations: Vec<RuleResidue>,
        involution_failures: Vec<RuleResidue>,
        star_closure_failures: Vec<RuleResidue>,
        errors: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub tool: String,
    pub version: String,
    pub task: String,
    pub algebra: Option<AlgebraInfo>,
    /// DSL text of the presentation the witnesses refer to.
    pub document: Option<String>,
    pub status: Status,
    pub verdict: Option<String>,
    pub checks: Vec<CheckLine>,
    pub witness: Witness,
    pub numeric: Option<NumericCheck>,
    pub timing_ms: u64,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable report.
    pub fn to_text(&self) -> String {
        let mut out = format!("task: {}\n", self.task);
        if let Some(a) = &self.algebra {
            out.push_str(&format!("algebra: {} ({}, k={}, l={})\n", a.name, a.source, a.k, a.l));
        }
        for c in &self.checks {
            out.push_str(&format!("{:4}  {}  {}\n", if c.ok { "ok" } else { "FAIL" }, c.name, c.detail));
        }
        if let Some(n) = &self.numeric {
            out.push_str(&format!("numeric cross-check at {}:\n", n.value));
            for c in &n.checks {
                out.push_str(&format!("{:4}  {}  {}\n", if c.ok { "ok" } else { "FAIL" }, c.name, c.detail));
            }
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status.label()));
        out
    }
}
