//! Tiny arithmetic-expression evaluator for catalog constraints and
//! closed-form expected values: integers, named parameters, + - * / ^,
//! parentheses, and comparisons. All arithmetic is exact rational.

use crate::error::{Error, Result};
use crate::rat::{rint, Rat};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

pub type Params = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
    Cmp(&'static str),
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let bytes: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: i64 = bytes[i..j]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Input(format!("bad number in '{s}'")))?;
                toks.push(Tok::Num(n));
                i = j;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == '_') {
                    j += 1;
                }
                toks.push(Tok::Ident(bytes[i..j].iter().collect()));
                i = j;
            }
            '+' | '-' | '*' | '/' | '^' => {
                toks.push(Tok::Op(c));
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '>' | '<' | '=' | '!' => {
                let two = if i + 1 < bytes.len() { bytes[i + 1] } else { ' ' };
                let (op, len): (&'static str, usize) = match (c, two) {
                    ('>', '=') => (">=", 2),
                    ('<', '=') => ("<=", 2),
                    ('=', '=') => ("==", 2),
                    ('!', '=') => ("!=", 2),
                    ('>', _) => (">", 1),
                    ('<', _) => ("<", 1),
                    _ => return Err(Error::Input(format!("bad comparison in '{s}'"))),
                };
                toks.push(Tok::Cmp(op));
                i += len;
            }
            _ => return Err(Error::Input(format!("unexpected character '{c}' in '{s}'"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    params: &'a Params,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Rat> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let op = *c;
            self.pos += 1;
            let rhs = self.term()?;
            if op == '+' {
                acc += rhs;
            } else {
                acc -= rhs;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Rat> {
        let mut acc = self.power()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek() {
            let op = *c;
            self.pos += 1;
            let rhs = self.power()?;
            if op == '*' {
                acc *= rhs;
            } else {
                if rhs.is_zero() {
                    return Err(Error::Input("division by zero in expression".into()));
                }
                acc /= rhs;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Rat> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let exp = self.atom()?;
            if !exp.is_integer() || exp.is_negative() {
                return Err(Error::Input("exponent must be a non-negative integer".into()));
            }
            let e = exp.to_integer().to_u32().unwrap_or(0);
            let mut acc = rint(1);
            for _ in 0..e {
                acc *= base.clone();
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Rat> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(rint(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.params.get(&name) {
                    Some(&v) => Ok(rint(v)),
                    None => Err(Error::Input(format!("unknown parameter '{name}'"))),
                }
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(Error::Input("missing ')'".into())),
                }
            }
            other => Err(Error::Input(format!("unexpected token {other:?}"))),
        }
    }
}

/// Evaluate an arithmetic expression with integer parameters.
pub fn eval(s: &str, params: &Params) -> Result<Rat> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        params,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Input(format!("trailing tokens in '{s}'")));
    }
    Ok(v)
}

/// Evaluate a comparison "expr CMP expr". A bare expression counts as true
/// when nonzero.
pub fn eval_predicate(s: &str, params: &Params) -> Result<bool> {
    let toks = tokenize(s)?;
    let cmp_pos = toks.iter().position(|t| matches!(t, Tok::Cmp(_)));
    match cmp_pos {
        None => Ok(!eval(s, params)?.is_zero()),
        Some(pos) => {
            let op = match &toks[pos] {
                Tok::Cmp(op) => *op,
                _ => unreachable!(),
            };
            let mut left = Parser {
                toks: &toks[..pos],
                pos: 0,
                params,
            };
            let lhs = left.expr()?;
            if left.pos != pos {
                return Err(Error::Input(format!("bad predicate '{s}'")));
            }
            let mut right = Parser {
                toks: &toks[pos + 1..],
                pos: 0,
                params,
            };
            let rhs = right.expr()?;
            if right.pos != toks.len() - pos - 1 {
                return Err(Error::Input(format!("bad predicate '{s}'")));
            }
            Ok(match op {
                ">=" => lhs >= rhs,
                "<=" => lhs <= rhs,
                "==" => lhs == rhs,
                "!=" => lhs != rhs,
                ">" => lhs > rhs,
                "<" => lhs < rhs,
                _ => unreachable!(),
            })
        }
    }
}
