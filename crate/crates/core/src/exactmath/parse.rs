//! Polynomial literals such as `"4*t^3 - 2/3*t + 1"`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power ('*' power)*
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')' | '-' atom
//! ```
//!
//! `a/b` is only accepted between two integer literals; there is no general
//! division.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::form::BinaryForm;
use super::poly::UniPoly;
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column in the input.
    pub column: usize,
    pub message: String,
}

/// Sparse multivariate polynomial: exponent vector -> coefficient.
pub type MultiPoly = BTreeMap<Vec<u32>, Rational>;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = MultiPoly::new();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            acc = add(&acc, &t, sign);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            let rhs = self.power()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e: u32 = match e.try_into() {
                Ok(e) if e <= 1024 => e,
                _ => return self.err("exponent out of range"),
            };
            let mut acc = constant(Rational::one(), self.vars.len());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some('-') => {
                self.pos += 1;
                let inner = self.atom()?;
                Ok(add(&MultiPoly::new(), &inner, -1))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                let save = self.pos;
                if self.eat('/') {
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        let den = self.integer()?;
                        if den.is_zero() {
                            return self.err("zero denominator");
                        }
                        value /= Rational::from_integer(den);
                    } else {
                        self.pos = save;
                        return self.err("'/' must separate two integers");
                    }
                }
                Ok(constant(value, self.vars.len()))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(k) => {
                        let mut exps = vec![0; self.vars.len()];
                        exps[k] = 1;
                        Ok(MultiPoly::from([(exps, Rational::one())]))
                    }
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable '{name}'"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn constant(c: Rational, nvars: usize) -> MultiPoly {
    let mut m = MultiPoly::new();
    if !c.is_zero() {
        m.insert(vec![0; nvars], c);
    }
    m
}

fn add(a: &MultiPoly, b: &MultiPoly, sign: i64) -> MultiPoly {
    let mut out = a.clone();
    let s = Rational::from_integer(sign.into());
    for (k, v) in b {
        let e = out.entry(k.clone()).or_insert_with(Rational::zero);
        *e += v * &s;
        if e.is_zero() {
            out.remove(k);
        }
    }
    out
}

fn mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            let e = out.entry(k.clone()).or_insert_with(Rational::zero);
            *e += va * vb;
            if e.is_zero() {
                out.remove(&k);
            }
        }
    }
    out
}

/// Parses a literal in the given variables.
pub fn parse_multi(text: &str, vars: &[&str]) -> Result<MultiPoly, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        let c = p.peek().unwrap();
        return p.err(format!("unexpected '{c}'"));
    }
    Ok(out)
}

/// Parses a univariate literal in `t`.
pub fn parse_unipoly(text: &str) -> Result<UniPoly, ParseError> {
    let m = parse_multi(text, &["t"])?;
    let deg = m.keys().map(|k| k[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (k, v) in m {
        coeffs[k[0] as usize] = v;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Parses a literal in `t` and homogenizes it to `degree`.
pub fn parse_form(text: &str, degree: u32) -> Result<BinaryForm, ParseError> {
    let f = parse_unipoly(text)?;
    BinaryForm::homogenize(&f, degree).map_err(|e| ParseError {
        column: 1,
        message: e.to_string(),
    })
}

/// Substitutes values for some variables of a multivariate literal, keeping
/// the rest. `keep` lists the surviving variable indices in output order.
pub fn specialize(m: &MultiPoly, keep: &[usize], values: &[(usize, Rational)]) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (k, v) in m {
        let mut c = v.clone();
        for (idx, val) in values {
            for _ in 0..k[*idx] {
                c *= val;
            }
        }
        if c.is_zero() {
            continue;
        }
        let key: Vec<u32> = keep.iter().map(|&i| k[i]).collect();
        let e = out.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            out.remove(&key);
        }
    }
    out
}

/// Univariate view of a one-variable `MultiPoly`.
pub fn to_unipoly(m: &MultiPoly) -> UniPoly {
    let deg = m.keys().map(|k| k[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (k, v) in m {
        coeffs[k[0] as usize] += v;
    }
    UniPoly::from_coeffs(coeffs)
}
