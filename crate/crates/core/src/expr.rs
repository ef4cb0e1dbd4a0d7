//! Text syntax for elements: parser, evaluator and canonical printer.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*
//! factor := atom ('^' int | '^(' nat ')')?
//! atom   := E[i,j] | F[i,j] | K[i] | Kinv[i] | Ka[i] | Kb[i;c;t] | int | q | '(' expr ')'
//! ```
//!
//! Division is only allowed by scalars.

use std::fmt;

use thiserror::Error;

use crate::pbwcore::{
    divided_power, generator, k_alpha, k_monomial, kbracket_element, Element, Kind, Monomial, PbwError, RootTable,
};
use crate::rootdata::Shape;
use crate::scalars::{gauss_factorial, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("index out of shape at byte {offset}: {msg}")]
    IndexOutOfShape { offset: usize, msg: String },
    #[error("negative divided power at byte {offset}")]
    NegativeDividedPower { offset: usize },
    #[error("negative power of a non-invertible element")]
    NegativePower,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a non-scalar element")]
    NonScalarDivisor,
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenAtom {
    E(usize, usize),
    F(usize, usize),
    K(usize),
    Kinv(usize),
    /// K_{α_i}.
    Ka(usize),
    /// [K_{α_i}; c over t].
    Kb { i: usize, c: i64, t: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<ExprAst>),
    Neg(Box<ExprAst>),
    Product(Vec<ExprAst>),
    Quotient(Box<ExprAst>, Box<ExprAst>),
    Power(Box<ExprAst>, i64),
    DividedPower(Box<ExprAst>, u32),
    Scalar(RatFunc),
    Gen(GenAtom),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    shape: Shape,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { offset: self.pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn starts_with(&mut self, kw: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(kw.as_bytes())
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.err("expected an integer");
        }
        let text: String = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        text.parse::<i64>().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn index(&mut self, what: &str, lo: usize) -> Result<usize, ExprError> {
        self.skip_ws();
        let at = self.pos;
        let v = self.int()?;
        let k = self.shape.rank() as i64;
        if v < lo as i64 || v > k {
            return Err(ExprError::IndexOutOfShape {
                offset: at,
                msg: format!("{what} index {v} not in [{lo},{k}]"),
            });
        }
        Ok(v as usize)
    }

    fn expr(&mut self) -> Result<ExprAst, ExprError> {
        let mut parts = Vec::new();
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let t = self.term()?;
        parts.push(if neg { ExprAst::Neg(Box::new(t)) } else { t });
        loop {
            if self.eat(b'+') {
                parts.push(self.term()?);
            } else if self.eat(b'-') {
                parts.push(ExprAst::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { ExprAst::Sum(parts) })
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(b'E' | b'F' | b'K' | b'q' | b'(' | b'0'..=b'9'))
    }

    fn term(&mut self) -> Result<ExprAst, ExprError> {
        let mut acc = vec![self.factor()?];
        loop {
            if self.eat(b'*') {
                acc.push(self.factor()?);
            } else if self.eat(b'/') {
                let d = self.factor()?;
                let num = if acc.len() == 1 { acc.pop().unwrap() } else { ExprAst::Product(std::mem::take(&mut acc)) };
                acc.push(ExprAst::Quotient(Box::new(num), Box::new(d)));
            } else if self.starts_atom() {
                acc.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if acc.len() == 1 { acc.pop().unwrap() } else { ExprAst::Product(acc) })
    }

    fn factor(&mut self) -> Result<ExprAst, ExprError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        if self.peek() == Some(b'(') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let n = self.int()?;
            self.expect(b')')?;
            if n < 0 {
                return Err(ExprError::NegativeDividedPower { offset: at });
            }
            let n = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
            return Ok(ExprAst::DividedPower(Box::new(base), n));
        }
        let n = self.int()?;
        Ok(match base {
            ExprAst::Scalar(s) => ExprAst::Scalar(s.pow(n)),
            b => ExprAst::Power(Box::new(b), n),
        })
    }

    fn atom(&mut self) -> Result<ExprAst, ExprError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(ExprAst::Scalar(RatFunc::q_pow(1)))
            }
            Some(b'0'..=b'9') => {
                let v = self.int()?;
                Ok(ExprAst::Scalar(RatFunc::from_int(v)))
            }
            Some(b'E') | Some(b'F') => {
                let is_e = self.src[self.pos] == b'E';
                let at = self.pos;
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.index("row", 1)?;
                self.expect(b',')?;
                let j = self.index("column", 1)?;
                self.expect(b']')?;
                if i >= j {
                    return Err(ExprError::IndexOutOfShape { offset: at, msg: format!("({i},{j}) is not a positive root") });
                }
                Ok(ExprAst::Gen(if is_e { GenAtom::E(i, j) } else { GenAtom::F(i, j) }))
            }
            Some(b'K') => {
                let g = if self.starts_with("Kinv[") {
                    self.pos += 5;
                    GenAtom::Kinv(self.index("K", 1)?)
                } else if self.starts_with("Ka[") {
                    self.pos += 3;
                    GenAtom::Ka(self.index("K", 1)?)
                } else if self.starts_with("Kb[") {
                    self.pos += 3;
                    let i = self.index("K", 1)?;
                    self.expect(b';')?;
                    let c = self.int()?;
                    self.expect(b';')?;
                    self.skip_ws();
                    let at = self.pos;
                    let t = self.int()?;
                    if t < 0 {
                        return Err(ExprError::Syntax { offset: at, msg: "bracket depth must be >= 0".into() });
                    }
                    GenAtom::Kb { i, c, t: t as u32 }
                } else if self.starts_with("K[") {
                    self.pos += 2;
                    GenAtom::K(self.index("K", 1)?)
                } else {
                    return self.err("unknown generator");
                };
                self.expect(b']')?;
                Ok(ExprAst::Gen(g))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
        }
    }
}

/// Parses `src` for the given shape.
pub fn parse(src: &str, shape: Shape) -> Result<ExprAst, ExprError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, shape };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn unit_k(shape: Shape, i: usize, e: i64) -> Result<Element, PbwError> {
    let mut mu = vec![0; shape.rank()];
    mu[i - 1] = e;
    k_monomial(shape, &mu)
}

/// Inverse of a nonzero scalar or of a single K-monomial.
fn invert(x: &Element) -> Option<Element> {
    if let Some(s) = x.as_scalar() {
        return s.inv().map(|c| Element::scalar(x.shape(), c));
    }
    if x.len() != 1 {
        return None;
    }
    let (m, c) = x.terms().iter().next().unwrap();
    if m.degree() != 0 {
        return None;
    }
    let inv: Vec<i64> = m.k_exponents().iter().map(|e| -e).collect();
    let k = k_monomial(x.shape(), &inv).ok()?;
    Some(k.scale(&c.inv()?))
}

impl ExprAst {
    pub fn evaluate(&self, shape: Shape) -> Result<Element, ExprError> {
        Ok(match self {
            ExprAst::Sum(v) => {
                let mut acc = Element::zero(shape);
                for x in v {
                    acc = &acc + &x.evaluate(shape)?;
                }
                acc
            }
            ExprAst::Neg(x) => -&x.evaluate(shape)?,
            ExprAst::Product(v) => {
                let mut acc = Element::one(shape);
                for x in v {
                    acc = &acc * &x.evaluate(shape)?;
                }
                acc
            }
            ExprAst::Quotient(a, b) => {
                let d = b.evaluate(shape)?;
                let s = d.as_scalar().ok_or(ExprError::NonScalarDivisor)?;
                let inv = s.inv().ok_or(ExprError::DivisionByZero)?;
                a.evaluate(shape)?.scale(&inv)
            }
            ExprAst::Power(b, n) => {
                let x = b.evaluate(shape)?;
                if *n >= 0 {
                    x.pow(*n as u32)
                } else {
                    invert(&x).ok_or(ExprError::NegativePower)?.pow(n.unsigned_abs() as u32)
                }
            }
            ExprAst::DividedPower(b, n) => match b.as_ref() {
                ExprAst::Gen(GenAtom::E(i, j)) => divided_power(shape, Kind::E, *i, *j, *n)?,
                ExprAst::Gen(GenAtom::F(i, j)) => divided_power(shape, Kind::F, *i, *j, *n)?,
                other => {
                    let f = RatFunc::from_laurent_int(&gauss_factorial(*n, 1));
                    other.evaluate(shape)?.pow(*n).scale(&f.inv().unwrap())
                }
            },
            ExprAst::Scalar(s) => Element::scalar(shape, s.clone()),
            ExprAst::Gen(g) => match g {
                GenAtom::E(i, j) => generator(shape, Kind::E, *i, *j)?,
                GenAtom::F(i, j) => generator(shape, Kind::F, *i, *j)?,
                GenAtom::K(i) => unit_k(shape, *i, 1)?,
                GenAtom::Kinv(i) => unit_k(shape, *i, -1)?,
                GenAtom::Ka(i) => k_alpha(shape, *i, 1)?,
                GenAtom::Kb { i, c, t } => kbracket_element(shape, *i, *c, *t)?,
            },
        })
    }
}

/// Parses and evaluates in one step.
pub fn parse_element(src: &str, shape: Shape) -> Result<Element, ExprError> {
    parse(src, shape)?.evaluate(shape)
}

fn power_suffix(n: u32) -> String {
    if n == 1 {
        String::new()
    } else {
        format!("^{n}")
    }
}

/// Text of a PBW monomial, factors joined by '*'; "1" for the identity.
pub fn print_monomial(table: &RootTable, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (id, p) in m.f_atoms() {
        let r = table.root(id);
        parts.push(format!("F[{},{}]{}", r.i, r.j, power_suffix(p)));
    }
    for (j, &e) in m.k_exponents().iter().enumerate() {
        if e > 0 {
            parts.push(format!("K[{}]{}", j + 1, power_suffix(e as u32)));
        } else if e < 0 {
            parts.push(format!("Kinv[{}]{}", j + 1, power_suffix((-e) as u32)));
        }
    }
    for (id, p) in m.e_atoms() {
        let r = table.root(id);
        parts.push(format!("E[{},{}]{}", r.i, r.j, power_suffix(p)));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Canonical text: terms in PBW order, parenthesized compound coefficients.
pub fn print_canonical(x: &Element) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let table = RootTable::new(x.shape());
    let mut out = String::new();
    for (m, c) in x.terms() {
        let neg = c.leading_negative();
        let c = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = print_monomial(&table, m);
        let coeff = if c.is_compound() { format!("({c})") } else { c.to_string() };
        if m.is_identity() {
            out.push_str(&coeff);
        } else if c.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_canonical(self))
    }
}
