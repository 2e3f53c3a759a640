//! Recursive-descent parser for scalar text.
//!
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := unary (('*'|'/'|<juxtaposition>) unary)*
//! unary := '-' unary | power
//! power := primary ['^' ['-'] INT]
//! primary := INT | VAR | '(' expr ')'

use num_bigint::BigInt;

use super::Scalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::ScalarParse { offset: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    var: &'a str,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::ScalarParse { offset: self.offset(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.unary()?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| Error::ScalarParse { offset: at, message: "division by zero".into() })?;
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_)) | Some(Tok::Sym('('))) {
                acc = acc * self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let at = self.offset();
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return self.err("expected integer exponent");
        };
        self.pos += 1;
        let k: i64 =
            n.try_into().map_err(|_| Error::ScalarParse { offset: at, message: "exponent too large".into() })?;
        base.pow(if neg { -k } else { k })
            .map_err(|_| Error::ScalarParse { offset: at, message: "negative power of zero".into() })
    }

    fn primary(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Scalar::big(n))
            }
            Some(Tok::Ident(name)) => {
                if name != self.var {
                    return self.err(format!("unknown symbol `{name}` (parameter is `{}`)", self.var));
                }
                self.pos += 1;
                Ok(Scalar::t())
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            _ => self.err("expected a number, the parameter, or `(`"),
        }
    }
}

pub(crate) fn parse_scalar(text: &str, var: &str) -> Result<Scalar> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, var, end: text.len() };
    if p.toks.is_empty() {
        return p.err("empty scalar");
    }
    let s = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_and_loose_forms() {
        let x = Scalar::parse("(-q^2)/(q^2 - 1)", "q").unwrap();
        let y = Scalar::parse("q^2/(1 - q^2)", "q").unwrap();
        assert_eq!(x, y);
        assert_eq!(Scalar::parse("2q^-2", "q").unwrap(), Scalar::from_int(2) * Scalar::t_pow(-2));
        assert_eq!(Scalar::parse("-3/4", "q").unwrap(), Scalar::from_ratio(-3, 4));
        assert_eq!(Scalar::parse("1/(2l^2 - 2)", "l").unwrap().to_text("l"), "1/(2l^2 - 2)");
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert!(matches!(Scalar::parse("x + 1", "q"), Err(Error::ScalarParse { offset: 0, .. })));
        assert!(matches!(Scalar::parse("1/(q - q)", "q"), Err(Error::ScalarParse { .. })));
        assert!(matches!(Scalar::parse("(q", "q"), Err(Error::ScalarParse { offset: 2, .. })));
    }
}
