//! The verification commands behind the `qsmooth` binary.

use std::fmt;
use std::time::Instant;

use qsmooth_core::catalog::{self, Params};
use qsmooth_core::freealg::{ambiguities, confluence_check, validate_presentation, ExprParser, ValidationReport};
use qsmooth_core::grading::{
    check_rule_homogeneity, connection_power, leg_degrees_ok, search_ansatz, solve_connection, tensor_mu, AnsatzTerm,
    ConnectionAnsatz, ConnectionSolution, Grading, PowerReport,
};
use qsmooth_core::gwa::{gwa_match, nakayama_check, recheck_smoothness, smoothness_check, GwaSpec, Smoothness};
use qsmooth_core::scalars::BigRational;
use qsmooth_core::{Element, Error, GenId, MorphismSpec, Presentation, Scalar, UniPoly};

use crate::cert::*;
use crate::dsl::{emit_dsl, parse_dsl, DslDocument, DslError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;
pub const EXIT_NO_SOLUTION: u8 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ScalarParse { .. } => EXIT_PARSE,
            Error::Unknown { .. } | Error::UnsupportedParams(_) | Error::NotHomogeneous(_) => EXIT_VALIDATION,
            Error::NoSolution => EXIT_NO_SOLUTION,
            _ => EXIT_ERROR,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        CliError::new(EXIT_PARSE, format!("parse error: {e}"))
    }
}

/// Flags shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub printed: bool,
    pub fuel: Option<u64>,
    pub param_value: Option<BigRational>,
}

impl Options {
    pub fn params(&self) -> Params {
        let d = Params::default();
        Params { k: self.k.unwrap_or(d.k), l: self.l.unwrap_or(d.l), printed: self.printed }
    }
}

/// A certificate plus the exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub cert: Certificate,
    pub code: u8,
}

/// A loaded presentation and where it came from.
pub struct Source {
    pub label: String,
    pub doc: DslDocument,
    pub params: Params,
}

impl Source {
    fn info(&self) -> AlgebraInfo {
        let p = &self.doc.presentation;
        AlgebraInfo {
            name: p.name.clone(),
            source: self.label.clone(),
            k: self.params.k,
            l: self.params.l,
            parameter: p.param.name.clone(),
            mode: p.param.mode.keyword().to_string(),
        }
    }

    fn p(&self) -> &Presentation {
        &self.doc.presentation
    }
}

/// Loads `catalog:NAME` or a DSL file.
pub fn load(spec: &str, opts: &Options) -> Result<Source, CliError> {
    let params = opts.params();
    let mut doc = match spec.strip_prefix("catalog:") {
        Some(name) => DslDocument::from_catalog(name, params)?,
        None => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| CliError::new(EXIT_ERROR, format!("cannot read `{spec}`: {e}")))?;
            parse_dsl(&text).map_err(|e| CliError::new(EXIT_PARSE, format!("{spec}: {e}")))?
        }
    };
    if let Some(f) = opts.fuel {
        doc.presentation.set_fuel(f);
    }
    Ok(Source { label: spec.to_string(), doc, params })
}

fn cert(task: &str, src: Option<&Source>, witness: Witness) -> Certificate {
    Certificate {
        tool: TOOL.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        task: task.into(),
        algebra: src.map(Source::info),
        document: src.map(|s| emit_dsl(&s.doc)),
        status: Status::Pass,
        verdict: None,
        checks: Vec::new(),
        witness,
        numeric: None,
        timing_ms: 0,
    }
}

/// Sets status and timing; `fail_code` applies when any check failed.
fn finish(mut c: Certificate, started: Instant, fail_code: u8) -> Outcome {
    let numeric_ok = c.numeric.as_ref().is_none_or(|n| n.checks.iter().all(|l| l.ok));
    let ok = c.checks.iter().all(|l| l.ok) && numeric_ok;
    if c.status == Status::Pass && !ok {
        c.status = Status::Fail;
    }
    c.timing_ms = started.elapsed().as_millis() as u64;
    let code = match c.status {
        Status::Pass => EXIT_OK,
        Status::Fail if !c.checks.iter().all(|l| l.ok) => fail_code,
        Status::Fail => EXIT_VERIFY,
        Status::NoSolution => EXIT_NO_SOLUTION,
    };
    Outcome { cert: c, code }
}

/// Runs `f` at the requested parameter value; poles are reported as skipped.
fn numeric(
    opts: &Options,
    f: impl FnOnce(&BigRational) -> qsmooth_core::Result<Vec<CheckLine>>,
) -> Option<NumericCheck> {
    let v = opts.param_value.as_ref()?;
    let checks = match f(v) {
        Ok(lines) => lines,
        Err(Error::Pole { at }) => vec![CheckLine::new("specialisation", true, format!("skipped: pole at {at}"))],
        Err(e) => vec![CheckLine::new("specialisation", false, e.to_string())],
    };
    Some(NumericCheck { value: v.to_string(), checks })
}

fn residue(name: String, p: &Presentation, e: &Element) -> RuleResidue {
    RuleResidue { rule: name, residue: p.fmt_element(e) }
}

struct ValidationW {
    order: Vec<RuleResidue>,
    involution: Vec<RuleResidue>,
    star: Vec<RuleResidue>,
}

fn validation_w(p: &Presentation, r: &ValidationReport) -> ValidationW {
    ValidationW {
        order: r
            .order_violations
            .iter()
            .map(|v| RuleResidue { rule: p.fmt_rule(v.rule), residue: p.fmt_word(&v.word) })
            .collect(),
        involution: r.involution_failures.iter().map(|(g, e)| residue(p.gen_name(*g).to_string(), p, e)).collect(),
        star: r.star_closure_failures.iter().map(|(i, e)| residue(p.fmt_rule(*i), p, e)).collect(),
    }
}

/// Refuses to run reductions on a presentation that fails validation.
fn gate(task: &str, src: &Source, started: Instant) -> Option<Outcome> {
    let report = validate_presentation(src.p());
    if report.is_ok() {
        return None;
    }
    let w = validation_w(src.p(), &report);
    let mut c = cert(
        task,
        Some(src),
        Witness::Validation {
            order_violations: w.order,
            involution_failures: w.involution,
            star_closure_failures: w.star,
            errors: report.errors.clone(),
        },
    );
    c.checks.push(CheckLine::new("validation", false, validation_summary(&report)));
    Some(finish(c, started, EXIT_VALIDATION))
}

fn validation_summary(r: &ValidationReport) -> String {
    format!(
        "{} order violations, {} involution failures, {} star-closure failures, {} errors",
        r.order_violations.len(),
        r.involution_failures.len(),
        r.star_closure_failures.len(),
        r.errors.len()
    )
}

pub fn check(src: &Source, opts: &Options) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let p = src.p();
    let report = validate_presentation(p);
    let w = validation_w(p, &report);
    let valid = report.is_ok();
    let mut checks = vec![CheckLine::new("validation", valid, validation_summary(&report))];
    let mut pairs = Vec::new();
    let n_amb = ambiguities(p).len();
    if valid {
        let cps = confluence_check(p)?;
        checks.push(CheckLine::new(
            "confluence",
            cps.is_empty(),
            format!("{n_amb} ambiguities, {} unresolved", cps.len()),
        ));
        pairs = cps
            .iter()
            .map(|c| CriticalPairW {
                rules: [c.first, c.second],
                word: p.fmt_word(&c.word),
                difference: p.fmt_element(&c.difference),
            })
            .collect();
    }
    let mut c = cert(
        "check",
        Some(src),
        Witness::Check {
            order_violations: w.order,
            involution_failures: w.involution,
            star_closure_failures: w.star,
            critical_pairs: pairs,
            ambiguities: n_amb,
        },
    );
    c.checks = checks;
    if valid {
        c.numeric = numeric(opts, |v| {
            let ps = p.specialize(v)?;
            let cps = confluence_check(&ps)?;
            Ok(vec![CheckLine::new("confluence", cps.is_empty(), format!("{} unresolved", cps.len()))])
        });
    }
    Ok(finish(c, started, if valid { EXIT_VERIFY } else { EXIT_VALIDATION }))
}

/// Parses a whole expression, reporting the column on failure.
fn parse_expr(p: &Presentation, text: &str) -> Result<Element, CliError> {
    let mut ep = ExprParser::new(p, text, 0);
    let located = |offset: usize, msg: String| {
        let col = text[..offset.min(text.len())].chars().count() + 1;
        CliError::new(EXIT_PARSE, format!("parse error in expression at column {col}: {msg}"))
    };
    let e = ep.expr().map_err(|e| located(e.offset, e.message))?;
    if ep.position() != text.len() {
        return Err(located(ep.position(), "trailing input".into()));
    }
    Ok(e)
}

pub fn nf(src: &Source, expr: &str, opts: &Options) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let p = src.p();
    let e = parse_expr(p, expr)?;
    if let Some(out) = gate("nf", src, started) {
        return Ok(out);
    }
    let nf = p.normal_form(&e)?;
    let irreducible = nf.terms().all(|(w, _)| p.is_irreducible(w));
    let mut c = cert("nf", Some(src), Witness::Nf { input: expr.to_string(), normal_form: p.fmt_element(&nf) });
    c.checks.push(CheckLine::new("normal form", irreducible, p.fmt_element(&nf)));
    c.numeric = numeric(opts, |v| {
        let ps = p.specialize(v)?;
        let direct = ps.normal_form(&e.specialize(v)?)?;
        let via = ps.normal_form(&nf.specialize(v)?)?;
        Ok(vec![CheckLine::new("NF commutes with evaluation", direct == via, ps.fmt_element(&direct))])
    });
    Ok(finish(c, started, EXIT_VERIFY))
}

fn find_grading<'a>(src: &'a Source, name: &str) -> Result<&'a Grading, CliError> {
    src.doc.grading(name).ok_or_else(|| {
        let known: Vec<&str> = src.doc.gradings.iter().map(|g| g.name()).collect();
        CliError::new(EXIT_VALIDATION, format!("unknown grading `{name}` (available: {})", known.join(", ")))
    })
}

pub fn grade(src: &Source, grading: &str, opts: &Options) -> Result<Outcome, CliError> {
    let started = Instant::now();
    if let Some(out) = gate("grade", src, started) {
        return Ok(out);
    }
    let p = src.p();
    let g = find_grading(src, grading)?;
    let mut violations = Vec::new();
    let mut checks = Vec::new();
    match g {
        Grading::Degree(d) => {
            for v in check_rule_homogeneity(p, d) {
                violations.push(RuleResidue {
                    rule: p.fmt_rule(v.rule),
                    residue: format!("{} has degree {}, lhs has {}", p.fmt_word(&v.word), v.degree, v.lhs_degree),
                });
            }
            checks.push(CheckLine::new(
                "homogeneous relations",
                violations.is_empty(),
                format!("{} rules, {} violations", p.rules().len(), violations.len()),
            ));
        }
        Grading::Involutive(s) => {
            let r = s.verify(p)?;
            for (i, e) in &r.relations.relation_failures {
                violations.push(residue(p.fmt_rule(*i), p, e));
            }
            checks.push(CheckLine::new("σ preserves relations", r.relations.relations_ok(), ""));
            checks.push(CheckLine::new("σ² = id", r.order_ok.unwrap_or(false), ""));
            checks.push(CheckLine::new("σ commutes with *", r.star_compatible, ""));
        }
    }
    let mut c = cert(
        "grade",
        Some(src),
        Witness::Grade { grading: g.name().to_string(), group: g.group().label(), violations },
    );
    c.checks = checks;
    if let Grading::Involutive(s) = g {
        c.numeric = numeric(opts, |v| {
            let ps = p.specialize(v)?;
            let images = s.sigma.iter().map(|e| e.specialize(v)).collect::<qsmooth_core::Result<Vec<_>>>()?;
            let r = qsmooth_core::freealg::verify_automorphism(&ps, &images, Some(2))?;
            Ok(vec![CheckLine::new("σ is an involutive automorphism", r.is_ok(), "")])
        });
    }
    Ok(finish(c, started, EXIT_VERIFY))
}

/// How the ansatz for `connection` is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnsatzChoice {
    /// The first ansatz in the document.
    Default,
    Named(String),
    Search(usize),
}

fn ansatz_w(p: &Presentation, a: &ConnectionAnsatz) -> Vec<AnsatzTermW> {
    a.terms
        .iter()
        .map(|t| AnsatzTermW {
            unknown: t.unknown.clone(),
            pairs: t.pairs.iter().map(|(u, v)| [p.fmt_element(u), p.fmt_element(v)]).collect(),
        })
        .collect()
}

fn levels_w(r: &PowerReport) -> Vec<PowerLevelW> {
    r.levels
        .iter()
        .map(|l| PowerLevelW { n: l.n, terms: l.terms, degrees_ok: l.degrees_ok, mu_is_one: l.mu_is_one })
        .collect()
}

pub fn connection(
    src: &Source,
    grading: &str,
    choice: &AnsatzChoice,
    power: Option<usize>,
    opts: &Options,
) -> Result<Outcome, CliError> {
    let started = Instant::now();
    if let Some(out) = gate("connection", src, started) {
        return Ok(out);
    }
    let p = src.p();
    let g = find_grading(src, grading)?;
    let found: Option<(ConnectionAnsatz, ConnectionSolution)> = match choice {
        AnsatzChoice::Search(len) => {
            let Grading::Degree(d) = g else {
                return Err(CliError::new(EXIT_VALIDATION, "--search needs a degree grading"));
            };
            search_ansatz(p, d, *len)?
        }
        AnsatzChoice::Default | AnsatzChoice::Named(_) => {
            let a = match choice {
                AnsatzChoice::Named(n) => {
                    src.doc.ansatz(n).ok_or_else(|| CliError::new(EXIT_VALIDATION, format!("unknown ansatz `{n}`")))?
                }
                _ => {
                    src.doc.ansatze.first().ok_or_else(|| {
                        CliError::new(EXIT_VALIDATION, "the document declares no ansatz; use --search")
                    })?
                }
            };
            match solve_connection(p, g, a) {
                Ok(sol) => Some((a.clone(), sol)),
                Err(Error::NoSolution) => None,
                Err(e) => return Err(e.into()),
            }
        }
    };
    let Some((ansatz, sol)) = found else {
        let name = match choice {
            AnsatzChoice::Named(n) => n.clone(),
            AnsatzChoice::Search(len) => format!("search up to length {len}"),
            AnsatzChoice::Default => src.doc.ansatze[0].name.clone(),
        };
        let mut c = cert(
            "connection",
            Some(src),
            Witness::Connection {
                grading: grading.into(),
                ansatz: name,
                terms: Vec::new(),
                coefficients: Vec::new(),
                free_unknowns: Vec::new(),
                mu: String::new(),
                levels: Vec::new(),
            },
        );
        c.status = Status::NoSolution;
        c.checks.push(CheckLine::new("μ(ω) = 1", false, "the linear system has no solution"));
        return Ok(finish(c, started, EXIT_NO_SOLUTION));
    };
    let mu = tensor_mu(p, &sol.omega)?;
    let mut checks = vec![
        CheckLine::new("μ(ω(1)) = 1", mu == Element::one(), format!("{} terms", sol.omega.len())),
        CheckLine::new("leg degrees", leg_degrees_ok(p, g, &sol.omega, 1)?, format!("grading {}", g.name())),
    ];
    let report = match power {
        Some(n) if n > 1 => {
            let r = connection_power(p, g, &sol.omega, n)?;
            for l in &r.levels[1..] {
                checks.push(CheckLine::new(
                    format!("ω({})", l.n),
                    l.degrees_ok && l.mu_is_one,
                    format!("{} terms, degrees {}, μ = 1 {}", l.terms, l.degrees_ok, l.mu_is_one),
                ));
            }
            Some(r)
        }
        _ => None,
    };
    let coefficients: Vec<CoefficientW> =
        sol.coefficients.iter().map(|(u, s)| CoefficientW { unknown: u.clone(), value: p.fmt_scalar(s) }).collect();
    let mut c = cert(
        "connection",
        Some(src),
        Witness::Connection {
            grading: grading.into(),
            ansatz: ansatz.name.clone(),
            terms: ansatz_w(p, &ansatz),
            coefficients,
            free_unknowns: sol.free_unknowns.clone(),
            mu: p.fmt_element(&mu),
            levels: report.as_ref().map(levels_w).unwrap_or_default(),
        },
    );
    c.checks = checks;
    c.numeric = numeric(opts, |v| {
        let ps = p.specialize(v)?;
        let mut lines = Vec::new();
        let m1 = tensor_mu(&ps, &sol.omega.specialize(v)?)?;
        lines.push(CheckLine::new("μ(ω(1)) = 1", m1 == Element::one(), ""));
        if let Some(r) = &report {
            let mn = tensor_mu(&ps, &r.omega.specialize(v)?)?;
            lines.push(CheckLine::new(format!("μ(ω({})) = 1", r.levels.len()), mn == Element::one(), ""));
        }
        Ok(lines)
    });
    Ok(finish(c, started, EXIT_VERIFY))
}

fn poly_w(p: &Presentation, f: &UniPoly) -> Vec<String> {
    f.coeffs().iter().map(|c| p.fmt_scalar(c)).collect()
}

pub fn gwa(src: &Source, base: &str, gen: &str, opts: &Options) -> Result<Outcome, CliError> {
    let started = Instant::now();
    if let Some(out) = gate("gwa", src, started) {
        return Ok(out);
    }
    let p = src.p();
    let report = gwa_match(p, base, gen)?;
    let candidates: Vec<GwaCandidateW> = report
        .candidates
        .iter()
        .map(|c| GwaCandidateW {
            plus: c.plus.clone(),
            minus: c.minus.clone(),
            kappa: c.kappa.as_ref().map(|s| p.fmt_scalar(s)),
            chi: c.chi.as_ref().map(|s| p.fmt_scalar(s)),
            twist_plus_ok: c.twist_plus_ok,
            twist_minus_ok: c.twist_minus_ok,
            product_ok: c.product_ok,
        })
        .collect();
    let matched = report.first_match().and_then(|m| m.spec().map(|s| (m.clone(), s)));
    let mut w = Witness::Gwa {
        base: base.into(),
        candidates,
        plus: None,
        minus: None,
        p: Vec::new(),
        verdict: None,
        gcd: Vec::new(),
        bezout_s: Vec::new(),
        bezout_t: Vec::new(),
        nakayama_direct_ok: None,
        nakayama_inverse_ok: None,
    };
    let Some((cand, spec)) = matched else {
        let mut c = cert("gwa", Some(src), w);
        c.checks.push(CheckLine::new("GWA shape", false, "neither orientation satisfies the GWA relations"));
        return Ok(finish(c, started, EXIT_VERIFY));
    };
    let smooth = smoothness_check(&spec)?;
    let nak = nakayama_check(&spec, p, &cand.plus, &cand.minus)?;
    let bezout_ok = recheck_smoothness(&spec, &smooth)?;
    let verdict = smooth.verdict.label().to_string();
    let var = p.gen_name(p.gen(base)?).to_string();
    if let Witness::Gwa {
        plus,
        minus,
        p: pw,
        verdict: vw,
        gcd,
        bezout_s,
        bezout_t,
        nakayama_direct_ok,
        nakayama_inverse_ok,
        ..
    } = &mut w
    {
        *plus = Some(cand.plus.clone());
        *minus = Some(cand.minus.clone());
        *pw = poly_w(p, &spec.p);
        *vw = Some(verdict.clone());
        *gcd = poly_w(p, &smooth.gcd);
        *bezout_s = poly_w(p, &smooth.bezout.0);
        *bezout_t = poly_w(p, &smooth.bezout.1);
        *nakayama_direct_ok = Some(nak.direct.is_ok());
        *nakayama_inverse_ok = Some(nak.inverse.is_ok());
    }
    let mut c = cert("gwa", Some(src), w);
    let pname = &p.param.name;
    c.checks = vec![
        CheckLine::new(
            "GWA shape",
            true,
            format!(
                "x+ = {}, x- = {}, κ = {}, χ = {}",
                cand.plus,
                cand.minus,
                spec.kappa.to_text(pname),
                spec.chi.to_text(pname)
            ),
        ),
        CheckLine::new("p", true, spec.p.to_text(&var, pname)),
        CheckLine::new("Bezout witness", bezout_ok, format!("gcd(p, p′) = {}", smooth.gcd.to_text(&var, pname))),
        CheckLine::new("Nakayama ν(x±) = κ^(±1) x±", nak.direct.is_ok(), ""),
        CheckLine::new("Nakayama ν(x±) = κ^(∓1) x±", nak.inverse.is_ok(), ""),
    ];
    c.verdict = Some(verdict);
    c.numeric = numeric(opts, |v| {
        let ps = p.specialize(v)?;
        let again = gwa_match(&ps, base, gen)?;
        let dp = spec.p.derivative().specialize(v)?;
        let combo =
            &(&smooth.bezout.0.specialize(v)? * &spec.p.specialize(v)?) + &(&smooth.bezout.1.specialize(v)? * &dp);
        Ok(vec![
            CheckLine::new("GWA shape", again.first_match().is_some(), ""),
            CheckLine::new("s·p + t·p′ = gcd", combo == smooth.gcd.specialize(v)?, ""),
        ])
    });
    Ok(finish(c, started, EXIT_VERIFY))
}

fn edge_w(m: &MorphismSpec, report: &qsmooth_core::freealg::MorphismReport) -> EdgeW {
    let doc = |p: &Presentation| emit_dsl(&DslDocument { presentation: p.clone(), gradings: vec![], ansatze: vec![] });
    EdgeW {
        name: m.name.clone(),
        source: doc(&m.source),
        target: doc(&m.target),
        images: m
            .images
            .iter()
            .enumerate()
            .map(|(g, e)| ImageW {
                generator: m.source.gen_name(g as GenId).to_string(),
                image: m.target.fmt_element(e),
            })
            .collect(),
        relation_failures: report
            .relation_failures
            .iter()
            .map(|(i, e)| residue(m.source.fmt_rule(*i), &m.target, e))
            .collect(),
        star_failures: report
            .star_failures
            .iter()
            .map(|(g, e)| residue(m.source.gen_name(*g).to_string(), &m.target, e))
            .collect(),
    }
}

/// The chain of maps from `base`, followed by their composite when there are several.
pub fn tower_maps(base: &str, opts: &Options) -> Result<Vec<MorphismSpec>, CliError> {
    let params = opts.params();
    let mut maps = Vec::new();
    for name in catalog::tower(base)? {
        let mut m = catalog::get_morphism(name, params)?;
        if let Some(f) = opts.fuel {
            m.source.set_fuel(f);
            m.target.set_fuel(f);
        }
        maps.push(m);
    }
    if maps.len() > 1 {
        let mut comp = maps[0].clone();
        for m in &maps[1..] {
            comp = comp.then(m)?;
        }
        maps.push(comp);
    }
    Ok(maps)
}

pub fn tower(base: &str, opts: &Options) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let maps = tower_maps(base, opts)?;
    let mut edges = Vec::new();
    let mut checks = Vec::new();
    for m in &maps {
        let r = m.verify()?;
        checks.push(CheckLine::new(
            m.name.clone(),
            r.is_ok(),
            format!(
                "{} → {}: {} relations, {} failures",
                m.source.name,
                m.target.name,
                m.source.rules().len(),
                r.relation_failures.len() + r.star_failures.len()
            ),
        ));
        edges.push(edge_w(m, &r));
    }
    let mut c = cert("tower", None, Witness::Tower { base: base.into(), edges });
    c.checks = checks;
    c.numeric = numeric(opts, |v| {
        maps.iter()
            .map(|m| Ok(CheckLine::new(m.name.clone(), m.specialize(v)?.verify_with(false)?.relations_ok(), "")))
            .collect()
    });
    Ok(finish(c, started, EXIT_VERIFY))
}

/// `catalog` without `--emit`: one line per entry.
pub fn catalog_listing(json: bool) -> String {
    let entries = catalog::list_entries();
    if json {
        let rows: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "name": e.name,
                    "mode": e.mode.keyword(),
                    "uses_k": e.uses_k,
                    "uses_l": e.uses_l,
                    "gradings": e.gradings,
                    "ansatze": e.ansatze,
                    "morphisms": e.morphisms,
                    "summary": e.summary,
                })
            })
            .collect();
        return serde_json::to_string_pretty(&rows).expect("listing serializes") + "\n";
    }
    let mut out = String::new();
    for e in entries {
        let mut params = Vec::new();
        if e.uses_k {
            params.push("k");
        }
        if e.uses_l {
            params.push("l");
        }
        out.push_str(&format!(
            "{:12} {:8} gradings [{}]  {}\n",
            e.name,
            if params.is_empty() { "-".to_string() } else { params.join(",") },
            e.gradings.join(", "),
            e.summary
        ));
    }
    out
}

pub fn catalog_emit(name: &str, opts: &Options) -> Result<String, CliError> {
    Ok(emit_dsl(&DslDocument::from_catalog(name, opts.params())?))
}

fn parse_scalar(p: &Presentation, text: &str) -> Result<Scalar, CliError> {
    Scalar::parse(text, &p.param.name).map_err(|e| CliError::new(EXIT_PARSE, format!("witness `{text}`: {e}")))
}

fn parse_poly(p: &Presentation, coeffs: &[String]) -> Result<UniPoly, CliError> {
    Ok(UniPoly::from_coeffs(coeffs.iter().map(|c| parse_scalar(p, c)).collect::<Result<_, _>>()?))
}

/// Re-verifies a certificate's witness without solving anything.
pub fn recheck(text: &str) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let orig = Certificate::from_json(text).map_err(|e| CliError::new(EXIT_PARSE, format!("certificate: {e}")))?;
    let doc = match &orig.document {
        Some(d) => Some(parse_dsl(d)?),
        None => None,
    };
    let need_doc = || doc.as_ref().ok_or_else(|| CliError::new(EXIT_PARSE, "certificate has no document"));
    let mut checks = Vec::new();
    match &orig.witness {
        Witness::Validation { .. } => {
            let p = &need_doc()?.presentation;
            checks.push(CheckLine::new("presentation still fails validation", !validate_presentation(p).is_ok(), ""));
        }
        Witness::Check { critical_pairs, .. } => {
            let p = &need_doc()?.presentation;
            let valid = validate_presentation(p).is_ok();
            checks.push(CheckLine::new("validation", valid, ""));
            if valid {
                let cps = confluence_check(p)?;
                let again: Vec<CriticalPairW> = cps
                    .iter()
                    .map(|c| CriticalPairW {
                        rules: [c.first, c.second],
                        word: p.fmt_word(&c.word),
                        difference: p.fmt_element(&c.difference),
                    })
                    .collect();
                checks.push(CheckLine::new("critical pairs reproduced", &again == critical_pairs, ""));
                checks.push(CheckLine::new("status consistent", (orig.status == Status::Pass) == cps.is_empty(), ""));
            }
        }
        Witness::Nf { input, normal_form } => {
            let p = &need_doc()?.presentation;
            let e = parse_expr(p, input)?;
            let claimed = parse_expr(p, normal_form)?;
            checks.push(CheckLine::new(
                "claimed form is irreducible",
                claimed.terms().all(|(w, _)| p.is_irreducible(w)),
                "",
            ));
            checks.push(CheckLine::new("NF(input) = claimed", p.normal_form(&e)? == claimed, ""));
        }
        Witness::Grade { grading, violations, .. } => {
            let d = need_doc()?;
            let p = &d.presentation;
            let g = d
                .grading(grading)
                .ok_or_else(|| CliError::new(EXIT_VALIDATION, format!("unknown grading `{grading}`")))?;
            let ok = match g {
                Grading::Degree(dg) => check_rule_homogeneity(p, dg).is_empty(),
                Grading::Involutive(s) => s.verify(p)?.is_ok(),
            };
            checks.push(CheckLine::new("violation list consistent", ok == violations.is_empty(), ""));
            checks.push(CheckLine::new("status consistent", (orig.status == Status::Pass) == ok, ""));
        }
        Witness::Connection { grading, ansatz, terms, coefficients, levels, .. } => {
            let d = need_doc()?;
            let p = &d.presentation;
            let g = d
                .grading(grading)
                .ok_or_else(|| CliError::new(EXIT_VALIDATION, format!("unknown grading `{grading}`")))?;
            if terms.is_empty() {
                checks.push(CheckLine::new("witness present", orig.status != Status::Pass, "no solution was claimed"));
            } else {
                let mut a = ConnectionAnsatz { name: ansatz.clone(), terms: Vec::new() };
                for t in terms {
                    let pairs = t
                        .pairs
                        .iter()
                        .map(|[u, v]| Ok((parse_expr(p, u)?, parse_expr(p, v)?)))
                        .collect::<Result<Vec<_>, CliError>>()?;
                    a.terms.push(AnsatzTerm { unknown: t.unknown.clone(), pairs });
                }
                let coeffs: Vec<Scalar> =
                    a.terms
                        .iter()
                        .map(|t| {
                            let c = coefficients.iter().find(|c| c.unknown == t.unknown).ok_or_else(|| {
                                CliError::new(EXIT_PARSE, format!("no coefficient for `{}`", t.unknown))
                            })?;
                            parse_scalar(p, &c.value)
                        })
                        .collect::<Result<_, _>>()?;
                let omega = a.instantiate(p, &coeffs)?;
                checks.push(CheckLine::new("μ(ω(1)) = 1", tensor_mu(p, &omega)? == Element::one(), ""));
                checks.push(CheckLine::new("leg degrees", leg_degrees_ok(p, g, &omega, 1)?, ""));
                if levels.len() > 1 {
                    let r = connection_power(p, g, &omega, levels.len())?;
                    checks.push(CheckLine::new("recursion levels reproduced", levels_w(&r) == *levels, ""));
                    checks.push(CheckLine::new("every level passes", r.is_ok(), ""));
                }
            }
        }
        Witness::Gwa { base, plus, minus, p: pw, verdict, gcd, bezout_s, bezout_t, candidates, .. } => {
            let p = &need_doc()?.presentation;
            match (plus, minus, verdict) {
                (Some(plus), Some(_), Some(verdict)) => {
                    let cand = candidates
                        .iter()
                        .find(|c| &c.plus == plus)
                        .ok_or_else(|| CliError::new(EXIT_PARSE, "matched candidate missing"))?;
                    let kappa = parse_scalar(p, cand.kappa.as_deref().unwrap_or(""))?;
                    let chi = parse_scalar(p, cand.chi.as_deref().unwrap_or("0"))?;
                    let spec = GwaSpec::new(kappa, chi, parse_poly(p, pw)?)?;
                    let report = qsmooth_core::gwa::SmoothnessReport {
                        verdict: if verdict == Smoothness::SmoothDim2.label() {
                            Smoothness::SmoothDim2
                        } else {
                            Smoothness::NotSmooth
                        },
                        gcd: parse_poly(p, gcd)?,
                        bezout: (parse_poly(p, bezout_s)?, parse_poly(p, bezout_t)?),
                    };
                    checks.push(CheckLine::new(
                        "Bezout identity and gcd divisibility",
                        recheck_smoothness(&spec, &report)?,
                        "",
                    ));
                    let again = gwa_match(p, base, plus)?;
                    let same = again
                        .candidates
                        .iter()
                        .any(|c| c.matched() && &c.plus == plus && c.p.as_ref() == Some(&spec.p));
                    checks.push(CheckLine::new("GWA relations reproduce p", same, ""));
                }
                _ => {
                    checks.push(CheckLine::new("witness present", orig.status != Status::Pass, "no match was claimed"))
                }
            }
        }
        Witness::Tower { edges, .. } => {
            for e in edges {
                let source = parse_dsl(&e.source)?.presentation;
                let target = parse_dsl(&e.target)?.presentation;
                let images: Vec<(&str, &str)> =
                    e.images.iter().map(|i| (i.generator.as_str(), i.image.as_str())).collect();
                let m = MorphismSpec::from_texts(&e.name, &source, &target, &images)?;
                let r = m.verify()?;
                let recorded_ok = e.relation_failures.is_empty() && e.star_failures.is_empty();
                checks.push(CheckLine::new(e.name.clone(), r.is_ok() == recorded_ok, ""));
            }
        }
    }
    let mut c = orig.clone();
    c.task = format!("recheck:{}", orig.task);
    c.checks = checks;
    c.numeric = None;
    c.status = Status::Pass;
    Ok(finish(c, started, EXIT_VERIFY))
}
