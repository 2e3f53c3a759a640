//! Text format for presentations, gradings and connection ansätze.
//!
//! ```text
//! algebra su2q over q real
//! gen alpha weight 2 star -> alphastar
//! gen alphastar weight 2 star -> alpha
//! gen beta star -> betastar
//! gen betastar star -> beta
//! rule beta.alpha -> 1/q * alpha.beta ;
//! grading Zl : Z/2 { alpha = 1, alphastar = 1, beta = 0, betastar = 0 }
//! grading Z2 : involution { U -> Ustar, Ustar -> U }
//! ansatz standard { x1: alpha ⊗ alphastar, y1: alphastar ⊗ alpha }
//! ```
//!
//! Generator declarations must start a line; they are collected before any
//! expression is read so stars may refer forward. `#` starts a comment.
//! `@` is accepted in place of `⊗`.

use std::fmt;

use qsmooth_core::catalog::{self, Params};
use qsmooth_core::freealg::{ExprParser, Star};
use qsmooth_core::grading::{AnsatzTerm, ConnectionAnsatz, DegreeGrading, Grading, GradingGroup, InvolutiveGrading};
use qsmooth_core::{Element, GenId, ParamMode, Parameter, Presentation, Word};

const KEYWORDS: &[&str] = &["algebra", "gen", "rule", "grading", "ansatz", "star", "selfadjoint", "weight"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for DslError {}

/// A parsed file: the presentation plus its named gradings and ansätze.
#[derive(Clone, Debug, PartialEq)]
pub struct DslDocument {
    pub presentation: Presentation,
    pub gradings: Vec<Grading>,
    pub ansatze: Vec<ConnectionAnsatz>,
}

impl DslDocument {
    /// A catalog entry with every grading and built-in ansatz attached.
    pub fn from_catalog(name: &str, params: Params) -> qsmooth_core::Result<Self> {
        let entry = catalog::entry(name)?;
        let presentation = catalog::get_algebra(name, params)?;
        let gradings =
            entry.gradings.iter().map(|g| catalog::get_grading(name, g, params)).collect::<Result<_, _>>()?;
        let ansatze = entry.ansatze.iter().map(|g| catalog::get_ansatz(name, g, params)).collect::<Result<_, _>>()?;
        Ok(DslDocument { presentation, gradings, ansatze })
    }

    pub fn grading(&self, name: &str) -> Option<&Grading> {
        self.gradings.iter().find(|g| g.name() == name)
    }

    pub fn ansatz(&self, name: &str) -> Option<&ConnectionAnsatz> {
        self.ansatze.iter().find(|a| a.name == name)
    }
}

/// 1-based line and column (in characters) of a byte offset.
pub fn locate(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map(|i| i + 1).unwrap_or(0);
    (line, before[line_start..].chars().count() + 1)
}

fn err_at<T>(src: &str, offset: usize, message: impl Into<String>) -> Result<T, DslError> {
    let (line, column) = locate(src, offset);
    Err(DslError { line, column, message: message.into() })
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

struct GenDecl {
    name: String,
    weight: u32,
}

/// First pass: generator names and weights, in declaration order.
fn collect_gens(src: &str) -> Result<Vec<GenDecl>, DslError> {
    let mut out: Vec<GenDecl> = Vec::new();
    let mut line_start = 0;
    for line in src.split_inclusive('\n') {
        let code = line.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut rest = code;
        while let Some(i) = rest.find(|c: char| !c.is_whitespace()) {
            let start = code.len() - rest.len() + i;
            let len = rest[i..].find(char::is_whitespace).unwrap_or(rest.len() - i);
            toks.push((start, &code[start..start + len]));
            rest = &rest[i + len..];
        }
        if toks.first().map(|t| t.1) == Some("gen") {
            let Some(&(at, name)) = toks.get(1) else {
                return err_at(src, line_start + code.trim_end().len(), "expected a generator name");
            };
            let valid = name.starts_with(is_ident_start) && name.chars().all(is_ident_char);
            if !valid {
                return err_at(src, line_start + at, format!("`{name}` is not a valid generator name"));
            }
            if KEYWORDS.contains(&name) {
                return err_at(src, line_start + at, format!("`{name}` is a keyword"));
            }
            if out.iter().any(|g| g.name == name) {
                return err_at(src, line_start + at, format!("generator `{name}` declared twice"));
            }
            let mut weight = 1;
            if toks.get(2).map(|t| t.1) == Some("weight") {
                let Some(&(wat, wtext)) = toks.get(3) else {
                    return err_at(src, line_start + code.trim_end().len(), "expected a weight");
                };
                weight = match wtext.parse::<u32>() {
                    Ok(w) if w > 0 => w,
                    _ => return err_at(src, line_start + wat, "weight must be a positive integer"),
                };
            }
            out.push(GenDecl { name: name.to_string(), weight });
        }
        line_start += line.len();
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, DslError> {
        err_at(self.src, self.pos, message)
    }

    fn skip_trivia(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_trivia();
        self.pos == self.src.len()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_trivia();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), DslError> {
        if self.eat(s) {
            Ok(())
        } else {
            self.fail(format!("expected `{s}`"))
        }
    }

    fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_trivia();
        let rest = &self.src[self.pos..];
        if !rest.starts_with(is_ident_start) {
            return None;
        }
        let len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
        Some(&rest[..len])
    }

    fn ident(&mut self) -> Result<&'a str, DslError> {
        match self.peek_ident() {
            Some(id) => {
                self.pos += id.len();
                Ok(id)
            }
            None => self.fail("expected a name"),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek_ident() == Some(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    /// Any run of non-space characters.
    fn bare_name(&mut self) -> Result<&'a str, DslError> {
        self.skip_trivia();
        let rest = &self.src[self.pos..];
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        if len == 0 {
            return self.fail("expected a name");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn int(&mut self) -> Result<i64, DslError> {
        self.skip_trivia();
        let rest = &self.src[self.pos..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - sign);
        if digits == 0 {
            return self.fail("expected an integer");
        }
        let text = &rest[..sign + digits];
        let n = text.parse().or_else(|_| self.fail("integer out of range"))?;
        self.pos += text.len();
        Ok(n)
    }

    fn gen_name(&mut self, p: &Presentation) -> Result<GenId, DslError> {
        let at = self.pos;
        let name = self.ident()?;
        p.gen_id(name).map_or_else(|| err_at(self.src, at, format!("unknown generator `{name}`")), Ok)
    }

    fn expr(&mut self, p: &Presentation) -> Result<Element, DslError> {
        self.skip_trivia();
        let mut ep = ExprParser::new(p, self.src, self.pos);
        match ep.expr() {
            Ok(e) => {
                self.pos = ep.position();
                Ok(e)
            }
            Err(e) => err_at(self.src, e.offset, e.message),
        }
    }

    /// `NAME ['^' INT] ('.' NAME ['^' INT])*` or `1`.
    fn word(&mut self, p: &Presentation) -> Result<Word, DslError> {
        self.skip_trivia();
        if self.src[self.pos..].starts_with('1') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        loop {
            let g = self.gen_name(p)?;
            let mut n = 1;
            if self.eat("^") {
                n = self.int()?;
                if n < 1 {
                    return self.fail("exponent must be positive");
                }
            }
            letters.extend(std::iter::repeat_n(g, n as usize));
            if !self.eat(".") {
                return Ok(Word(letters));
            }
        }
    }

    fn tensor_sep(&mut self) -> Result<(), DslError> {
        if self.eat("⊗") || self.eat("@") {
            Ok(())
        } else {
            self.fail("expected `⊗`")
        }
    }
}

pub fn parse_dsl(src: &str) -> Result<DslDocument, DslError> {
    let decls = collect_gens(src)?;
    let mut ps = Parser { src, pos: 0 };
    if !ps.eat_keyword("algebra") {
        return ps.fail("expected `algebra NAME over PARAM real|unitary`");
    }
    let name = ps.bare_name()?;
    if !ps.eat_keyword("over") {
        return ps.fail("expected `over`");
    }
    let param_at = ps.pos;
    let param = ps.ident()?;
    let mode = match ps.ident()? {
        "real" => ParamMode::Real,
        "unitary" => ParamMode::Unitary,
        other => return err_at(src, ps.pos - other.len(), format!("expected `real` or `unitary`, found `{other}`")),
    };
    if decls.iter().any(|g| g.name == param) {
        return err_at(src, param_at, format!("parameter `{param}` clashes with a generator"));
    }
    let mut p = Presentation::new(name, Parameter { name: param.to_string(), mode });
    for d in &decls {
        p.add_gen(&d.name, d.weight);
    }
    let mut gradings: Vec<Grading> = Vec::new();
    let mut ansatze: Vec<ConnectionAnsatz> = Vec::new();
    while !ps.at_end() {
        let at = ps.pos;
        match ps.ident().ok() {
            Some("gen") => {
                let g = ps.gen_name(&p)?;
                if ps.eat_keyword("weight") {
                    ps.int()?;
                }
                if ps.eat_keyword("selfadjoint") {
                    p.set_star(g, Star::SelfAdjoint);
                } else if ps.eat_keyword("star") {
                    ps.expect("->")?;
                    let img = ps.expr(&p)?;
                    p.set_star(g, Star::Image(img));
                } else {
                    return ps.fail("expected `selfadjoint` or `star -> EXPR`");
                }
            }
            Some("rule") => {
                let lhs_at = ps.pos;
                let lhs = ps.word(&p)?;
                if lhs.is_empty() {
                    return err_at(src, lhs_at, "a rule needs a nonempty left-hand word");
                }
                ps.expect("->")?;
                let rhs = ps.expr(&p)?;
                ps.expect(";")?;
                p.add_rule(lhs, rhs);
            }
            Some("grading") => {
                let gname = ps.ident()?.to_string();
                if gradings.iter().any(|g| g.name() == gname) {
                    return err_at(src, at, format!("grading `{gname}` declared twice"));
                }
                ps.expect(":")?;
                let kind_at = ps.pos;
                let grading = match ps.ident()? {
                    "involution" => {
                        let mut sigma: Vec<Element> = (0..p.gen_count() as GenId).map(Element::gen).collect();
                        ps.expect("{")?;
                        if !ps.eat("}") {
                            loop {
                                let g = ps.gen_name(&p)?;
                                ps.expect("->")?;
                                sigma[g as usize] = ps.expr(&p)?;
                                if ps.eat("}") {
                                    break;
                                }
                                ps.expect(",")?;
                            }
                        }
                        Grading::Involutive(InvolutiveGrading { name: gname, sigma })
                    }
                    "Z" => {
                        let group = if ps.src[ps.pos..].starts_with('/') {
                            ps.pos += 1;
                            let n_at = ps.pos;
                            let n = ps.int()?;
                            match u32::try_from(n).ok().and_then(|n| GradingGroup::cyclic(n).ok()) {
                                Some(g) => g,
                                None => return err_at(src, n_at, "cyclic order must be a positive integer"),
                            }
                        } else {
                            GradingGroup::Integers
                        };
                        let mut degrees = vec![0; p.gen_count()];
                        ps.expect("{")?;
                        if !ps.eat("}") {
                            loop {
                                let g = ps.gen_name(&p)?;
                                ps.expect("=")?;
                                degrees[g as usize] = ps.int()?;
                                if ps.eat("}") {
                                    break;
                                }
                                ps.expect(",")?;
                            }
                        }
                        Grading::Degree(DegreeGrading::new(&gname, group, degrees))
                    }
                    other => {
                        return err_at(src, kind_at, format!("expected `Z`, `Z/N` or `involution`, found `{other}`"))
                    }
                };
                gradings.push(grading);
            }
            Some("ansatz") => {
                let aname = ps.ident()?.to_string();
                if ansatze.iter().any(|a| a.name == aname) {
                    return err_at(src, at, format!("ansatz `{aname}` declared twice"));
                }
                let mut terms: Vec<AnsatzTerm> = Vec::new();
                ps.expect("{")?;
                if !ps.eat("}") {
                    loop {
                        let unknown = ps.ident()?.to_string();
                        ps.expect(":")?;
                        let u = ps.expr(&p)?;
                        ps.tensor_sep()?;
                        let v = ps.expr(&p)?;
                        match terms.iter_mut().find(|t| t.unknown == unknown) {
                            Some(t) => t.pairs.push((u, v)),
                            None => terms.push(AnsatzTerm { unknown, pairs: vec![(u, v)] }),
                        }
                        if ps.eat("}") {
                            break;
                        }
                        ps.expect(",")?;
                    }
                }
                ansatze.push(ConnectionAnsatz { name: aname, terms });
            }
            _ => return err_at(src, at, "expected `gen`, `rule`, `grading` or `ansatz`"),
        }
    }
    Ok(DslDocument { presentation: p, gradings, ansatze })
}

/// Multi-term legs are bracketed so the `⊗` split is easy to read.
fn leg(p: &Presentation, e: &Element) -> String {
    if e.len() > 1 {
        format!("[{}]", p.fmt_element(e))
    } else {
        p.fmt_element(e)
    }
}

pub fn emit_dsl(doc: &DslDocument) -> String {
    let p = &doc.presentation;
    let mut out = format!("algebra {} over {} {}\n", p.name, p.param.name, p.param.mode.keyword());
    for g in p.gens() {
        out.push_str("gen ");
        out.push_str(&g.name);
        if g.weight != 1 {
            out.push_str(&format!(" weight {}", g.weight));
        }
        match &g.star {
            Star::SelfAdjoint => out.push_str(" selfadjoint\n"),
            Star::Image(e) => out.push_str(&format!(" star -> {}\n", p.fmt_element(e))),
        }
    }
    for r in p.rules() {
        out.push_str(&format!("rule {} -> {} ;\n", p.fmt_word(&r.lhs), p.fmt_element(&r.rhs)));
    }
    for g in &doc.gradings {
        match g {
            Grading::Degree(d) => {
                let group = match d.group {
                    GradingGroup::Integers => "Z".to_string(),
                    GradingGroup::Cyclic(n) => format!("Z/{n}"),
                };
                let entries: Vec<String> =
                    p.gens().iter().zip(&d.degrees).map(|(g, k)| format!("{} = {k}", g.name)).collect();
                out.push_str(&format!("grading {} : {group} {{ {} }}\n", d.name, entries.join(", ")));
            }
            Grading::Involutive(s) => {
                let entries: Vec<String> =
                    p.gens().iter().zip(&s.sigma).map(|(g, e)| format!("{} -> {}", g.name, p.fmt_element(e))).collect();
                out.push_str(&format!("grading {} : involution {{ {} }}\n", s.name, entries.join(", ")));
            }
        }
    }
    for a in &doc.ansatze {
        let pairs: Vec<String> = a
            .terms
            .iter()
            .flat_map(|t| t.pairs.iter().map(move |(u, v)| format!("  {}: {} ⊗ {}", t.unknown, leg(p, u), leg(p, v))))
            .collect();
        if pairs.is_empty() {
            out.push_str(&format!("ansatz {} {{ }}\n", a.name));
        } else {
            out.push_str(&format!("ansatz {} {{\n{}\n}}\n", a.name, pairs.join(",\n")));
        }
    }
    out
}
