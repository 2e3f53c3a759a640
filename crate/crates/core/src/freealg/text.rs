//! Text syntax for elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ['*' word] | word
//! coeff  := scalar factors joined by '*', '/', '^' or juxtaposition
//! word   := factor ('.' factor)*
//! factor := GEN ['^' INT] | '[' expr ']'
//! ```
//!
//! A bare coefficient multiplies the identity, so `1` is the unit.

use super::element::{Element, Word};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int,
    Ident(String),
    Sym(char),
}

/// A parse failure inside an expression, located by byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextError {
    pub offset: usize,
    pub message: String,
}

impl From<TextError> for Error {
    fn from(e: TextError) -> Self {
        Error::ScalarParse { offset: e.offset, message: e.message }
    }
}

pub struct ExprParser<'a> {
    pres: &'a Presentation,
    src: &'a str,
    pos: usize,
}

impl<'a> ExprParser<'a> {
    pub fn new(pres: &'a Presentation, src: &'a str, pos: usize) -> Self {
        ExprParser { pres, src, pos }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
    }

    /// Next token with its byte span, without consuming it.
    fn peek_at(&self, from: usize) -> Option<(Tok, usize, usize)> {
        let rest = &self.src[from..];
        let trimmed = rest.trim_start();
        let start = from + rest.len() - trimmed.len();
        let mut chars = trimmed.char_indices();
        let (_, c) = chars.next()?;
        if c.is_ascii_digit() {
            let len = trimmed.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(trimmed.len());
            Some((Tok::Int, start, start + len))
        } else if c.is_alphabetic() || c == '_' {
            let len = trimmed.find(|ch: char| !(ch.is_alphanumeric() || ch == '_')).unwrap_or(trimmed.len());
            Some((Tok::Ident(trimmed[..len].to_string()), start, start + len))
        } else {
            Some((Tok::Sym(c), start, start + c.len_utf8()))
        }
    }

    fn peek(&self) -> Option<(Tok, usize, usize)> {
        self.peek_at(self.pos)
    }

    fn err<T>(&self, at: usize, message: impl Into<String>) -> std::result::Result<T, TextError> {
        Err(TextError { offset: at, message: message.into() })
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if let Some((Tok::Sym(s), _, end)) = self.peek() {
            if s == c {
                self.pos = end;
                return true;
            }
        }
        false
    }

    fn is_gen(&self, name: &str) -> bool {
        self.pres.gen_id(name).is_some()
    }

    pub fn expr(&mut self) -> std::result::Result<Element, TextError> {
        let mut acc = if self.eat_sym('-') {
            -&self.term()?
        } else {
            self.eat_sym('+');
            self.term()?
        };
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term()?;
            } else {
                self.skip_ws();
                return Ok(acc);
            }
        }
    }

    fn starts_coeff(&self, tok: &Tok) -> bool {
        match tok {
            Tok::Int => true,
            Tok::Sym('(') => true,
            Tok::Ident(name) => *name == self.pres.param.name,
            _ => false,
        }
    }

    fn starts_word(&self, tok: &Tok) -> bool {
        match tok {
            Tok::Sym('[') => true,
            Tok::Ident(name) => self.is_gen(name),
            _ => false,
        }
    }

    fn term(&mut self) -> std::result::Result<Element, TextError> {
        let Some((tok, start, _)) = self.peek() else {
            return self.err(self.src.len(), "expected a term");
        };
        if self.starts_coeff(&tok) {
            let coeff = self.coeff()?;
            // `coeff * word` or a bare coefficient
            let save = self.pos;
            if self.eat_sym('*') {
                match self.peek() {
                    Some((t, _, _)) if self.starts_word(&t) => {}
                    Some((_, at, _)) => return self.err(at, "expected a generator after `*`"),
                    None => return self.err(self.src.len(), "expected a generator after `*`"),
                }
            } else if !matches!(self.peek(), Some((t, _, _)) if self.starts_word(&t)) {
                self.pos = save;
                return Ok(Element::scalar(coeff));
            }
            let w = self.word()?;
            return Ok(w.scale(&coeff));
        }
        if self.starts_word(&tok) {
            return self.word();
        }
        match tok {
            Tok::Ident(name) => self.err(start, format!("unknown generator `{name}`")),
            _ => self.err(start, "expected a coefficient or a word"),
        }
    }

    /// Finds the extent of a coefficient and hands it to the scalar parser.
    fn coeff(&mut self) -> std::result::Result<Scalar, TextError> {
        let start = self.peek().map(|(_, s, _)| s).unwrap_or(self.pos);
        let mut depth = 0usize;
        let mut cur = self.pos;
        let mut prev_caret = false;
        let mut end = start;
        while let Some((tok, s, e)) = self.peek_at(cur) {
            let take = match &tok {
                Tok::Sym('(') => {
                    depth += 1;
                    true
                }
                Tok::Sym(')') => {
                    if depth == 0 {
                        false
                    } else {
                        depth -= 1;
                        true
                    }
                }
                _ if depth > 0 => true,
                Tok::Int | Tok::Sym('^') | Tok::Sym('/') => true,
                Tok::Sym('-') => prev_caret,
                Tok::Ident(name) => *name == self.pres.param.name,
                Tok::Sym('*') => {
                    // continues only when followed by another scalar factor
                    matches!(self.peek_at(e), Some((t, _, _)) if self.starts_coeff(&t))
                }
                _ => false,
            };
            if !take {
                break;
            }
            prev_caret = tok == Tok::Sym('^');
            cur = e;
            end = e;
            let _ = s;
        }
        if depth > 0 {
            return self.err(end, "unbalanced `(` in coefficient");
        }
        let text = &self.src[start..end];
        let var = self.pres.param.name.as_str();
        let s = Scalar::parse(text, var).map_err(|e| match e {
            Error::ScalarParse { offset, message } => TextError { offset: start + offset, message },
            other => TextError { offset: start, message: other.to_string() },
        })?;
        self.pos = end;
        Ok(s)
    }

    fn word(&mut self) -> std::result::Result<Element, TextError> {
        let mut acc = self.factor()?;
        while self.eat_sym('.') {
            let f = self.factor()?;
            acc = acc.mul_raw(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> std::result::Result<Element, TextError> {
        let base = match self.peek() {
            Some((Tok::Sym('['), _, end)) => {
                self.pos = end;
                let inner = self.expr()?;
                if !self.eat_sym(']') {
                    return self.err(self.pos, "expected `]`");
                }
                inner
            }
            Some((Tok::Ident(name), start, end)) => {
                let Some(g) = self.pres.gen_id(&name) else {
                    return self.err(start, format!("unknown generator `{name}`"));
                };
                self.pos = end;
                Element::gen(g)
            }
            Some((Tok::Int, start, end)) if &self.src[start..end] == "1" => {
                self.pos = end;
                Element::one()
            }
            Some((_, start, _)) => return self.err(start, "expected a generator"),
            None => return self.err(self.src.len(), "expected a generator"),
        };
        if self.eat_sym('^') {
            let Some((Tok::Int, s, e)) = self.peek() else {
                return self.err(self.pos, "expected a nonnegative integer exponent");
            };
            let n: usize =
                self.src[s..e].parse().map_err(|_| TextError { offset: s, message: "exponent too large".into() })?;
            self.pos = e;
            let mut acc = Element::one();
            for _ in 0..n {
                acc = acc.mul_raw(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }
}

pub(crate) fn parse_element(pres: &Presentation, text: &str) -> Result<Element> {
    let mut p = ExprParser::new(pres, text, 0);
    let e = p.expr()?;
    if p.position() != text.len() {
        return Err(Error::ScalarParse { offset: p.position(), message: "trailing input".into() });
    }
    Ok(e)
}

pub(crate) fn format_word(pres: &Presentation, w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let g = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == g {
            run += 1;
        }
        let name = pres.gen_name(g);
        parts.push(if run == 1 { name.to_string() } else { format!("{name}^{run}") });
        i += run;
    }
    parts.join(".")
}

/// Sum in increasing term order with signs pulled out, e.g. `1 - beta.betastar`.
pub(crate) fn format_element(pres: &Presentation, e: &Element) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = e.terms().collect();
    terms.sort_by(|a, b| pres.cmp_words(a.0, b.0));
    let var = pres.param.name.as_str();
    let mut out = String::new();
    for (w, c) in terms {
        let neg = c.is_negative_leading();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let wt = format_word(pres, w);
        if mag.is_one() {
            out.push_str(&wt);
            continue;
        }
        let mut ct = mag.to_text(var);
        if mag.denom().is_one() && mag.numer().term_count() > 1 {
            ct = format!("({ct})");
        }
        if w.is_empty() {
            out.push_str(&ct);
        } else {
            out.push_str(&ct);
            out.push_str(" * ");
            out.push_str(&wt);
        }
    }
    out
}
