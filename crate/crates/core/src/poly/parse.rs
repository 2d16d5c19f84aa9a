//! Expression parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | IDENT | '(' expr ')'
//! ```
//!
//! `i` is the imaginary unit; every other identifier must belong to the
//! declared alphabet. Positions in errors are 0-based character offsets.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::multipoly::{vars_of, MultiPoly, Vars};
use super::rational::RationalFunction;
use super::GaussianRational;
use crate::error::{Error, Result};

/// Either a polynomial or a genuine rational function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Poly(MultiPoly),
    Rational(RationalFunction),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((i, Tok::Op('-')));
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos: i,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: Vars,
}

/// Intermediate value: stays a polynomial until a non-constant division.
#[derive(Clone)]
enum Val {
    P(MultiPoly),
    R(RationalFunction),
}

impl Val {
    fn into_rational(self) -> RationalFunction {
        match self {
            Val::P(p) => RationalFunction::from_poly(p),
            Val::R(r) => r,
        }
    }

    fn simplify(r: RationalFunction) -> Val {
        match r.to_poly() {
            Some(p) => Val::P(p),
            None => Val::R(r),
        }
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.here(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Val> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = combine(acc, rhs, '+')?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = combine(acc, rhs, '-')?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Val> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = combine(acc, rhs, '*')?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.here();
                self.pos += 1;
                let rhs = self.unary()?;
                acc = combine(acc, rhs, '/').map_err(|e| match e {
                    Error::DivisionByZero => Error::Syntax {
                        pos: at,
                        message: "division by the zero polynomial".into(),
                    },
                    e => e,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Val> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(match v {
                Val::P(p) => Val::P(-p),
                Val::R(r) => Val::R(r.neg()),
            });
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Val> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Tok::Int(n)) => match u32::try_from(n) {
                Ok(e) if e <= 4096 => e,
                _ => return self.err("exponent too large"),
            },
            _ => return self.err("expected a nonnegative integer exponent"),
        };
        self.pos += 1;
        if self.peek() == Some(&Tok::Op('^')) {
            return self.err("chained exponents need parentheses");
        }
        Ok(match base {
            Val::P(p) => Val::P(p.pow(e)),
            Val::R(r) => Val::R(r.pow(e)),
        })
    }

    fn atom(&mut self) -> Result<Val> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Val::P(MultiPoly::constant(
                    &self.vars,
                    GaussianRational::real(BigRational::from_integer(n)),
                )))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "i" {
                    return Ok(Val::P(MultiPoly::constant(
                        &self.vars,
                        GaussianRational::i(),
                    )));
                }
                match MultiPoly::var(&self.vars, &name) {
                    Ok(p) => Ok(Val::P(p)),
                    Err(_) => Err(Error::UnknownVariable(name)),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            Some(Tok::Op(c)) => Err(Error::Syntax {
                pos: at,
                message: format!("unexpected `{c}`"),
            }),
            None => self.err("unexpected end of input"),
        }
    }
}

fn combine(a: Val, b: Val, op: char) -> Result<Val> {
    if let (Val::P(x), Val::P(y)) = (&a, &b) {
        match op {
            '+' => return Ok(Val::P(x + y)),
            '-' => return Ok(Val::P(x - y)),
            '*' => return Ok(Val::P(x * y)),
            _ => {
                if let Some(c) = y.constant_value() {
                    let inv = c.inv().ok_or(Error::DivisionByZero)?;
                    return Ok(Val::P(x.scale(&inv)));
                }
            }
        }
    }
    let (x, y) = (a.into_rational(), b.into_rational());
    let r = match op {
        '+' => x.add(&y),
        '-' => x.sub(&y),
        '*' => x.mul(&y),
        _ => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x.div(&y)?
        }
    };
    Ok(Val::simplify(r))
}

/// Parses `text` over the variable list `alphabet`.
pub fn parse_expr(text: &str, alphabet: &[&str]) -> Result<Parsed> {
    parse_with_vars(text, &vars_of(alphabet))
}

pub fn parse_with_vars(text: &str, vars: &Vars) -> Result<Parsed> {
    if vars.iter().any(|v| v == "i") {
        return Err(Error::Precondition(
            "`i` is reserved for the imaginary unit".into(),
        ));
    }
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        vars: vars.clone(),
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(match v {
        Val::P(poly) => Parsed::Poly(poly),
        Val::R(r) => Parsed::Rational(r),
    })
}

/// Parses text that must denote a polynomial.
pub fn parse_poly(text: &str, alphabet: &[&str]) -> Result<MultiPoly> {
    match parse_expr(text, alphabet)? {
        Parsed::Poly(p) => Ok(p),
        Parsed::Rational(r) => Err(Error::NotPolynomial(r.denom().to_string())),
    }
}

/// Parses text as a rational function (polynomials included).
pub fn parse_rational(text: &str, alphabet: &[&str]) -> Result<RationalFunction> {
    Ok(match parse_expr(text, alphabet)? {
        Parsed::Poly(p) => RationalFunction::from_poly(p),
        Parsed::Rational(r) => r,
    })
}

/// Parses a Gaussian-rational literal such as `1/2 + 3/4*i`.
pub fn parse_number(text: &str) -> Result<GaussianRational> {
    let p = parse_poly(text, &[])?;
    Ok(p.constant_value().expect("no variables"))
}
