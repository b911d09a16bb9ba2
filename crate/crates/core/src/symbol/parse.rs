//! Recursive-descent parser for the symbol DSL:
//!
//! ```text
//! symbol := term (("+"|"-") term)* ;
//! term   := factor ("*" factor)* ;
//! factor := base ("^" natural)? ;
//! base   := "z" | complex | "(" symbol ")"
//!         | "blaschke" "[" complex ("," complex)* "]"
//!         | "compose" "(" symbol "," symbol ")" ;
//! ```
//!
//! Bare literals are `a` or `ai`. A parenthesized group holding exactly one
//! signed literal such as `(0.5-2i)` reads as a single complex literal, as do
//! the entries of a `blaschke[...]` list.

use num_complex::Complex64;

use super::SymbolExpr;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { text: String, value: f64 },
    Ident(String),
    Punct(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position: pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let pos = i + 1;
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<f64>()
                .map_err(|_| syntax(pos, format!("malformed number '{text}'")))?;
            out.push(Token {
                tok: Tok::Num { text, value },
                pos,
            });
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
        } else if "+-*^()[],".contains(ch) {
            out.push(Token {
                tok: Tok::Punct(ch),
                pos,
            });
            i += 1;
        } else {
            return Err(syntax(pos, format!("unexpected character '{ch}'")));
        }
    }
    out.push(Token {
        tok: Tok::End,
        pos: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn peek_tok(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if !matches!(t.tok, Tok::End) {
            self.at += 1;
        }
        t
    }

    fn is_punct(&self, c: char) -> bool {
        matches!(self.peek_tok(), Tok::Punct(p) if *p == c)
    }

    fn is_imag_unit(&self) -> bool {
        matches!(self.peek_tok(), Tok::Ident(s) if s == "i")
    }

    fn expect_punct(&mut self, c: char) -> Result<()> {
        if self.is_punct(c) {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.peek().pos, format!("expected '{c}'")))
        }
    }

    fn symbol(&mut self) -> Result<SymbolExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.is_punct('+') {
                self.bump();
                lhs = SymbolExpr::add(lhs, self.term()?);
            } else if self.is_punct('-') {
                self.bump();
                lhs = SymbolExpr::sub(lhs, self.term()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<SymbolExpr> {
        let mut lhs = self.factor()?;
        while self.is_punct('*') {
            self.bump();
            lhs = SymbolExpr::mul(lhs, self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<SymbolExpr> {
        let base = self.base()?;
        if !self.is_punct('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Num { text, .. } if text.chars().all(|c| c.is_ascii_digit()) => {
                let n = text
                    .parse::<u32>()
                    .map_err(|_| syntax(t.pos, "exponent too large"))?;
                Ok(SymbolExpr::pow(base, n))
            }
            _ => Err(syntax(t.pos, "expected a natural-number exponent")),
        }
    }

    fn base(&mut self) -> Result<SymbolExpr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(name) if name == "z" => {
                self.bump();
                Ok(SymbolExpr::Var)
            }
            Tok::Ident(name) if name == "blaschke" => {
                self.bump();
                self.expect_punct('[')?;
                let mut zeros = vec![self.signed_literal()?];
                while self.is_punct(',') {
                    self.bump();
                    zeros.push(self.signed_literal()?);
                }
                self.expect_punct(']')?;
                Ok(SymbolExpr::Blaschke(zeros))
            }
            Tok::Ident(name) if name == "compose" => {
                self.bump();
                self.expect_punct('(')?;
                let outer = self.symbol()?;
                self.expect_punct(',')?;
                let inner = self.symbol()?;
                self.expect_punct(')')?;
                Ok(SymbolExpr::compose(outer, inner))
            }
            Tok::Num { .. } => {
                let v = self.unsigned_literal()?;
                Ok(SymbolExpr::Lit(v))
            }
            Tok::Punct('(') => {
                self.bump();
                let mark = self.at;
                if let Ok(c) = self.signed_literal() {
                    if self.is_punct(')') {
                        self.bump();
                        return Ok(SymbolExpr::Lit(c));
                    }
                }
                self.at = mark;
                let inner = self.symbol()?;
                self.expect_punct(')')?;
                Ok(inner)
            }
            Tok::End => Err(syntax(t.pos, "unexpected end of input")),
            _ => Err(syntax(
                t.pos,
                "expected 'z', a literal, '(', 'blaschke' or 'compose'",
            )),
        }
    }

    /// `a` or `ai`.
    fn unsigned_literal(&mut self) -> Result<Complex64> {
        let t = self.bump();
        let Tok::Num { value, .. } = t.tok else {
            return Err(syntax(t.pos, "expected a number"));
        };
        if self.is_imag_unit() {
            self.bump();
            Ok(Complex64::new(0.0, value))
        } else {
            Ok(Complex64::new(value, 0.0))
        }
    }

    /// `[+-]a`, `[+-]ai`, `[+-]a+bi` or `[+-]a-bi`.
    fn signed_literal(&mut self) -> Result<Complex64> {
        let neg = if self.is_punct('-') {
            self.bump();
            true
        } else {
            if self.is_punct('+') {
                self.bump();
            }
            false
        };
        if !matches!(self.peek_tok(), Tok::Num { .. }) {
            return Err(syntax(self.peek().pos, "expected a complex literal"));
        }
        let mut v = self.unsigned_literal()?;
        if neg {
            v = -v;
        }
        if v.im == 0.0 && !matches!(self.toks[self.at - 1].tok, Tok::Ident(_)) {
            let mark = self.at;
            let sign = if self.is_punct('+') {
                Some(1.0)
            } else if self.is_punct('-') {
                Some(-1.0)
            } else {
                None
            };
            if let Some(sign) = sign {
                self.bump();
                if let Tok::Num { value, .. } = self.peek_tok().clone() {
                    self.bump();
                    if self.is_imag_unit() {
                        self.bump();
                        return Ok(Complex64::new(v.re, sign * value));
                    }
                }
                self.at = mark;
            }
        }
        Ok(v)
    }
}

/// Parses a symbol-DSL string. Errors carry 1-based character positions.
pub fn parse_symbol(text: &str) -> Result<SymbolExpr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.symbol()?;
    match p.peek_tok() {
        Tok::End => Ok(e),
        _ => Err(syntax(p.peek().pos, "unexpected trailing input")),
    }
}
