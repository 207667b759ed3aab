//! Parser for rational-function expressions such as `"(x-1)^2*(x+1)/3"`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! input   := sum ( "/" sum )?
//! sum     := term ( ("+" | "-") term )*
//! term    := unary ( "*"? unary )*        juxtaposition multiplies: 2x, 3(x+1)
//! unary   := ("-" | "+") unary | power
//! power   := atom ( "^" integer )*
//! atom    := integer | integer "/" integer | var | "(" sum ")"
//! ```
//!
//! A `/` with digits immediately on both sides (no spaces) is part of a
//! rational literal; any other `/` is the fraction bar, and at most one bar
//! may appear, outside all parentheses. `^` binds tighter than unary minus, so
//! `-x^2` is `-(x^2)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::Rational;

/// Largest exponent accepted, to keep accidental inputs like `x^99999999` cheap to reject.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        column,
        message: message.into(),
    })
}

fn tokenize(text: &str, var: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let var: Vec<char> = var.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numer: BigInt = chars[start..i].iter().collect::<String>().parse().expect("digits");
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let dstart = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let denom: BigInt = chars[dstart..i].iter().collect::<String>().parse().expect("digits");
                if denom.is_zero() {
                    return err(dstart + 1, "zero denominator in rational literal");
                }
                out.push((Tok::Num(Rational::new(numer, denom)), col));
            } else {
                out.push((Tok::Num(Rational::from_integer(numer)), col));
            }
            continue;
        }
        if chars[i..].starts_with(&var) {
            let end = i + var.len();
            if end < chars.len() && chars[end].is_alphanumeric() {
                return err(col, format!("unknown identifier starting with '{c}'"));
            }
            out.push((Tok::Var, col));
            i = end;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return err(col, format!("unexpected character '{c}'")),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    depth: usize,
}

type QPoly = Polynomial<Rational>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn sum(&mut self) -> Result<QPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Num(_) | Tok::Var | Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) if self.depth > 0 => {
                    return err(self.col(), "only one top-level /");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QPoly> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.bump();
            let col = self.col();
            let exp = match self.peek() {
                Some(Tok::Num(q)) if q.is_integer() => q.to_integer().to_usize(),
                Some(Tok::Minus) => return err(col, "exponents must be nonnegative integers"),
                _ => return err(col, "expected an integer exponent"),
            };
            let exp = match exp {
                Some(e) if e <= MAX_EXPONENT => e,
                _ => return err(col, format!("exponent exceeds {MAX_EXPONENT}")),
            };
            self.bump();
            base = base.pow(exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QPoly> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.bump();
                Ok(Polynomial::constant(q))
            }
            Some(Tok::Var) => {
                self.bump();
                Ok(Polynomial::monomial(Rational::from_integer(1.into()), 1))
            }
            Some(Tok::LParen) => {
                self.bump();
                self.depth += 1;
                let inner = self.sum()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        self.depth -= 1;
                        Ok(inner)
                    }
                    Some(Tok::Slash) => err(self.col(), "only one top-level /"),
                    _ => err(self.col(), "expected ')'"),
                }
            }
            Some(Tok::RParen) => err(col, "unexpected ')'"),
            Some(Tok::Slash) => err(col, "expected an expression before '/'"),
            Some(_) => err(col, "expected a number, variable or '('"),
            None => err(col, "unexpected end of input"),
        }
    }
}

fn parser(text: &str, var: &str) -> Result<Parser> {
    Ok(Parser {
        toks: tokenize(text, var)?,
        pos: 0,
        end_col: text.chars().count() + 1,
        depth: 0,
    })
}

/// Parses `numerator [/ denominator]` in the variable `x`. The denominator
/// defaults to 1. No normalization happens here.
pub fn parse_rational_function(text: &str) -> Result<(QPoly, QPoly)> {
    parse_rational_function_in(text, "x")
}

pub fn parse_rational_function_in(text: &str, var: &str) -> Result<(QPoly, QPoly)> {
    let mut p = parser(text, var)?;
    let num = p.sum()?;
    let den = match p.peek() {
        None => return Ok((num, Polynomial::constant(Rational::from_integer(1.into())))),
        Some(Tok::Slash) => {
            p.bump();
            p.sum()?
        }
        Some(Tok::RParen) => return err(p.col(), "unbalanced ')'"),
        Some(_) => return err(p.col(), "unexpected token"),
    };
    match p.peek() {
        None => {}
        Some(Tok::Slash) => return err(p.col(), "only one top-level /"),
        Some(_) => return err(p.col(), "unexpected token"),
    }
    if den.is_zero() {
        return err(1, "denominator is zero");
    }
    Ok((num, den))
}

/// Parses a polynomial (no fraction bar) in the variable `var`.
pub fn parse_polynomial_in(text: &str, var: &str) -> Result<QPoly> {
    let mut p = parser(text, var)?;
    let poly = p.sum()?;
    match p.peek() {
        None => Ok(poly),
        Some(Tok::Slash) => err(p.col(), "a polynomial cannot contain a fraction bar"),
        Some(_) => err(p.col(), "unexpected token"),
    }
}
