//! Expression grammar shared by scalars, polynomials in `x`, and
//! noncommutative relations.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := atom ('^' exponent)?
//! atom    := integer | ident | '(' expr ')'
//! exponent:= '-'? integer | '{' '-'? integer '}' | '(' '-'? integer ')'
//! ident   := letter ('_' (digits | '{' digits (',' digits)* '}'))?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, NCWord};
use crate::scalar::{Scalar, UniPoly};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Int(BigInt),
    Var(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
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
            out.push((Tok::Int(s.parse().unwrap()), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            let mut s = String::new();
            s.push(c);
            i += 1;
            if i < chars.len() && chars[i] == '_' {
                s.push('_');
                i += 1;
                if i < chars.len() && chars[i] == '{' {
                    s.push('{');
                    i += 1;
                    while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == ',') {
                        s.push(chars[i]);
                        i += 1;
                    }
                    if i >= chars.len() || chars[i] != '}' {
                        return Err(syntax(i, "unterminated subscript"));
                    }
                    s.push('}');
                    i += 1;
                } else {
                    let before = s.len();
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        s.push(chars[i]);
                        i += 1;
                    }
                    if s.len() == before {
                        return Err(syntax(i, "expected subscript digits"));
                    }
                }
            }
            out.push((Tok::Ident(s), start));
        } else if "+-*/^(){}".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(syntax(i, &format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax {
        pos,
        msg: msg.to_string(),
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('('))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Sym('^')) {
            let pos = self.pos();
            self.at += 1;
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = if self.eat('{') {
            Some('}')
        } else if self.eat('(') {
            Some(')')
        } else {
            None
        };
        let neg = self.eat('-');
        let pos = self.pos();
        let v = match self.peek() {
            Some(Tok::Int(n)) => {
                let v: i64 = n.try_into().map_err(|_| syntax(pos, "exponent too large"))?;
                self.at += 1;
                v
            }
            _ => return Err(syntax(pos, "expected integer exponent")),
        };
        if let Some(c) = close {
            if !self.eat(c) {
                return Err(syntax(self.pos(), &format!("expected `{c}`")));
            }
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr::Var(s, pos))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.pos(), "expected `)`"));
                }
                Ok(e)
            }
            Some(Tok::Sym(c)) => Err(syntax(pos, &format!("unexpected `{c}`"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(syntax(p.pos(), "trailing input"));
    }
    Ok(e)
}

/// Interpretation of the grammar in a concrete ring.
trait Domain {
    type V;
    fn int(&self, n: &BigInt) -> Self::V;
    fn var(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn add(&self, a: Self::V, b: Self::V) -> Self::V;
    fn sub(&self, a: Self::V, b: Self::V) -> Self::V;
    fn mul(&self, a: Self::V, b: Self::V) -> Self::V;
    fn neg(&self, a: Self::V) -> Self::V;
    fn div(&self, a: Self::V, b: Self::V, pos: usize) -> Result<Self::V>;
    fn pow(&self, a: Self::V, e: i64, pos: usize) -> Result<Self::V>;
}

impl Expr {
    fn eval<D: Domain>(&self, d: &D) -> Result<D::V> {
        Ok(match self {
            Expr::Int(n) => d.int(n),
            Expr::Var(s, pos) => d.var(s, *pos)?,
            Expr::Neg(a) => {
                let a = a.eval(d)?;
                d.neg(a)
            }
            Expr::Add(a, b) => {
                let (a, b) = (a.eval(d)?, b.eval(d)?);
                d.add(a, b)
            }
            Expr::Sub(a, b) => {
                let (a, b) = (a.eval(d)?, b.eval(d)?);
                d.sub(a, b)
            }
            Expr::Mul(a, b) => {
                let (a, b) = (a.eval(d)?, b.eval(d)?);
                d.mul(a, b)
            }
            Expr::Div(a, b, pos) => {
                let (a, b) = (a.eval(d)?, b.eval(d)?);
                d.div(a, b, *pos)?
            }
            Expr::Pow(a, e, pos) => {
                let a = a.eval(d)?;
                d.pow(a, *e, *pos)?
            }
        })
    }

    pub(crate) fn eval_scalar(&self) -> Result<Scalar> {
        self.eval(&ScalarDomain)
    }

    pub(crate) fn eval_unipoly(&self) -> Result<UniPoly> {
        self.eval(&UniPolyDomain)
    }

    pub(crate) fn eval_ncpoly(&self, letter: &dyn Fn(&str) -> Option<usize>) -> Result<NCPoly> {
        self.eval(&NcDomain { letter })
    }
}

struct ScalarDomain;

impl Domain for ScalarDomain {
    type V = Scalar;
    fn int(&self, n: &BigInt) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(n.clone()))
    }
    fn var(&self, name: &str, pos: usize) -> Result<Scalar> {
        if name == "q" {
            Ok(Scalar::q())
        } else {
            Err(syntax(pos, &format!("unknown variable `{name}`")))
        }
    }
    fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        a + b
    }
    fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        a - b
    }
    fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        a * b
    }
    fn neg(&self, a: Scalar) -> Scalar {
        -a
    }
    fn div(&self, a: Scalar, b: Scalar, _pos: usize) -> Result<Scalar> {
        a.div(&b)
    }
    fn pow(&self, a: Scalar, e: i64, _pos: usize) -> Result<Scalar> {
        a.pow(e)
    }
}

struct UniPolyDomain;

impl Domain for UniPolyDomain {
    type V = UniPoly;
    fn int(&self, n: &BigInt) -> UniPoly {
        UniPoly::constant(ScalarDomain.int(n))
    }
    fn var(&self, name: &str, pos: usize) -> Result<UniPoly> {
        match name {
            "x" => Ok(UniPoly::x()),
            _ => Ok(UniPoly::constant(ScalarDomain.var(name, pos)?)),
        }
    }
    fn add(&self, a: UniPoly, b: UniPoly) -> UniPoly {
        a.add(&b)
    }
    fn sub(&self, a: UniPoly, b: UniPoly) -> UniPoly {
        a.sub(&b)
    }
    fn mul(&self, a: UniPoly, b: UniPoly) -> UniPoly {
        a.mul(&b)
    }
    fn neg(&self, a: UniPoly) -> UniPoly {
        a.neg()
    }
    fn div(&self, a: UniPoly, b: UniPoly, pos: usize) -> Result<UniPoly> {
        if !b.is_constant() {
            return Err(syntax(pos, "division by a polynomial in x"));
        }
        let inv = b.coeff(0).inv()?;
        Ok(a.scale(&inv))
    }
    fn pow(&self, a: UniPoly, e: i64, pos: usize) -> Result<UniPoly> {
        if a.is_constant() {
            return Ok(UniPoly::constant(a.coeff(0).pow(e)?));
        }
        if e < 0 {
            return Err(syntax(pos, "negative power of x"));
        }
        Ok(a.pow(e as u32))
    }
}

struct NcDomain<'a> {
    letter: &'a dyn Fn(&str) -> Option<usize>,
}

impl Domain for NcDomain<'_> {
    type V = NCPoly;
    fn int(&self, n: &BigInt) -> NCPoly {
        NCPoly::scalar(ScalarDomain.int(n))
    }
    fn var(&self, name: &str, pos: usize) -> Result<NCPoly> {
        if name == "q" {
            return Ok(NCPoly::scalar(Scalar::q()));
        }
        match (self.letter)(name) {
            Some(i) => Ok(NCPoly::monomial(NCWord::new(vec![i as u16]), Scalar::one())),
            None => Err(syntax(pos, &format!("unknown generator `{name}`"))),
        }
    }
    fn add(&self, a: NCPoly, b: NCPoly) -> NCPoly {
        a.add(&b)
    }
    fn sub(&self, a: NCPoly, b: NCPoly) -> NCPoly {
        a.sub(&b)
    }
    fn mul(&self, a: NCPoly, b: NCPoly) -> NCPoly {
        a.mul(&b)
    }
    fn neg(&self, a: NCPoly) -> NCPoly {
        a.neg()
    }
    fn div(&self, a: NCPoly, b: NCPoly, pos: usize) -> Result<NCPoly> {
        match b.as_scalar() {
            Some(c) => Ok(a.scale(&c.inv()?)),
            None => Err(syntax(pos, "division by a noncommutative polynomial")),
        }
    }
    fn pow(&self, a: NCPoly, e: i64, pos: usize) -> Result<NCPoly> {
        if let Some(c) = a.as_scalar() {
            return Ok(NCPoly::scalar(c.pow(e)?));
        }
        if e < 0 {
            return Err(syntax(pos, "negative power of a generator"));
        }
        let mut acc = NCPoly::scalar(Scalar::one());
        for _ in 0..e {
            acc = acc.mul(&a);
        }
        Ok(acc)
    }
}
