//! Class expressions such as `(H[1,1]+H[1,2])^4 - 2*H[2,1]`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := 'H[' i ',' j ']' | 'H[' j ']' | rational | '(' expr ')'
//! ```

use std::fmt;

use flagj_core::algebra::{rational_to_string, Rational};
use flagj_core::ring::{CohClass, FlagShape, TowerRing};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassExpr {
    /// `H[level, index]`, both 1-based.
    Var(usize, usize),
    Lit(Rational),
    Neg(Box<ClassExpr>),
    Add(Box<ClassExpr>, Box<ClassExpr>),
    Sub(Box<ClassExpr>, Box<ClassExpr>),
    Mul(Box<ClassExpr>, Box<ClassExpr>),
    Pow(Box<ClassExpr>, u32),
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpr::Var(i, j) => write!(f, "H[{i},{j}]"),
            ClassExpr::Lit(r) if r.is_negative() => write!(f, "(-{})", rational_to_string(&-r)),
            ClassExpr::Lit(r) => write!(f, "{}", rational_to_string(r)),
            ClassExpr::Neg(a) => write!(f, "(-{a})"),
            ClassExpr::Add(a, b) => write!(f, "({a} + {b})"),
            ClassExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            ClassExpr::Mul(a, b) => write!(f, "{a}*{b}"),
            ClassExpr::Pow(a, e) if matches!(**a, ClassExpr::Mul(..) | ClassExpr::Pow(..)) => write!(f, "({a})^{e}"),
            ClassExpr::Pow(a, e) => write!(f, "{a}^{e}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    shape: &'a FlagShape,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(self.pos, format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(self.pos, format!("expected '{}', found end of input", c as char)),
        }
    }

    fn uint(&mut self) -> Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits").to_string();
        Ok((start, text))
    }

    fn expr(&mut self) -> Result<ClassExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = ClassExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = ClassExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ClassExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = ClassExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ClassExpr, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(ClassExpr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let (at, text) = self.uint()?;
            let e: u32 = match text.parse() {
                Ok(e) => e,
                Err(_) => return self.err(at, "exponent too large"),
            };
            return Ok(ClassExpr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ClassExpr, ParseError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.pos, "unexpected end of input"),
        };
        match self.src[start] {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            b'H' => {
                self.pos += 1;
                self.expect(b'[')?;
                let (_, a) = self.uint()?;
                let b = if self.peek() == Some(b',') {
                    self.pos += 1;
                    Some(self.uint()?.1)
                } else {
                    None
                };
                self.expect(b']')?;
                let a: usize = a.parse().unwrap_or(usize::MAX);
                let (i, j) = match b {
                    Some(b) => (a, b.parse().unwrap_or(usize::MAX)),
                    None if self.shape.levels() == 1 => (1, a),
                    None => return self.err(start, "H[j] needs a single-level space; write H[i,j]"),
                };
                if self.shape.var_index(i, j).is_none() {
                    return self.err(start, format!("unknown variable H[{i},{j}] for {}", self.shape));
                }
                Ok(ClassExpr::Var(i, j))
            }
            c if c.is_ascii_digit() => {
                let (_, num) = self.uint()?;
                let mut lit = num;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let (at, den) = self.uint()?;
                    if den.bytes().all(|d| d == b'0') {
                        return self.err(at, "zero denominator");
                    }
                    lit = format!("{lit}/{den}");
                }
                let r = flagj_core::algebra::parse_rational(&lit)
                    .map_err(|e| ParseError { pos: start, message: e.to_string() })?;
                Ok(ClassExpr::Lit(r))
            }
            c => self.err(start, format!("unexpected '{}'", c as char)),
        }
    }
}

pub fn parse_expr(src: &str, shape: &FlagShape) -> Result<ClassExpr, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, shape };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => p.err(p.pos, format!("unexpected '{}'", c as char)),
    }
}

impl ClassExpr {
    pub fn eval(&self, ring: &TowerRing) -> CohClass {
        match self {
            ClassExpr::Var(i, j) => ring.var(ring.shape().var_index(*i, *j).expect("checked while parsing")),
            ClassExpr::Lit(r) if r.is_zero() => ring.zero(),
            ClassExpr::Lit(r) => ring.one().scale(r),
            ClassExpr::Neg(a) => -&a.eval(ring),
            ClassExpr::Add(a, b) => &a.eval(ring) + &b.eval(ring),
            ClassExpr::Sub(a, b) => &a.eval(ring) - &b.eval(ring),
            ClassExpr::Mul(a, b) => &a.eval(ring) * &b.eval(ring),
            ClassExpr::Pow(a, e) => a.eval(ring).pow(*e),
        }
    }
}

pub fn parse_class_expr(src: &str, ring: &TowerRing) -> Result<CohClass, ParseError> {
    Ok(parse_expr(src, ring.shape())?.eval(ring))
}


#[cfg(test)]
mod roundtrip {
    use super::*;
    use flagj_core::algebra::rat;
    use proptest::prelude::*;

    fn leaf() -> impl Strategy<Value = ClassExpr> {
        prop_oneof![
            (1usize..=2, 1usize..=2).prop_map(|(i, j)| ClassExpr::Var(i, j)),
            (-5i64..=5, 1i64..=4).prop_map(|(p, q)| ClassExpr::Lit(rat(p) / rat(q))),
        ]
    }

    fn expr() -> impl Strategy<Value = ClassExpr> {
        leaf().prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| ClassExpr::Neg(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::Mul(Box::new(a), Box::new(b))),
                (inner, 0u32..=3).prop_map(|(a, e)| ClassExpr::Pow(Box::new(a), e)),
            ]
        })
    }

    proptest! {
        #[test]
        fn printed_expressions_parse_to_the_same_class(e in expr()) {
            let ring = TowerRing::new(&"flag:2,3;4".parse().unwrap());
            let printed = e.to_string();
            let back = parse_expr(&printed, ring.shape()).unwrap();
            prop_assert_eq!(back.eval(&ring), e.eval(&ring), "{}", printed);
        }
    }
}
