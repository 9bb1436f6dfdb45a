//! Parser for element expressions.
//!
//! ```text
//! expr    := tensor (('+' | '-') tensor)*
//! tensor  := product ('(x)' product)?
//! product := unary (('*' | '^^') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | symbol | '(' expr ')'
//! ```
//!
//! Symbols are H1, H2, H, E, F, E1, E2, F1, F2 and a. Without `(x)` an
//! expression lives in the left factor; the right factor of `(x)` accepts
//! only generators of p.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, Zero};
use thiserror::Error;

use crate::clifford::CElement;
use crate::enveloping::{u_vector, UElement};
use crate::lie::{self, Basis, GVector};
use crate::linear::{Combination, Monomial, Scalar};
use crate::sym::{ext_var, sym_vector, SymTensorElement};
use crate::ugcp::{left, right, UCElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Context {
    /// S(g)
    Symmetric,
    /// U(g)
    Enveloping,
    /// C(p)
    Clifford,
    /// S(g) ⊗ Λ(p)
    Tensor,
    /// U(g) ⊗ C(p)
    Uc,
}

impl FromStr for Context {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Context as clap::ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol '{symbol}' at position {pos}")]
    UnknownSymbol { symbol: String, pos: usize },
    #[error("context error at position {pos}: {msg}")]
    Context { pos: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Wedge,
    Caret,
    Slash,
    Tensor,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |mut j: usize| {
        while j < chars.len() && chars[j].1.is_whitespace() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            '+' => out.push((pos, Tok::Plus)),
            '-' => out.push((pos, Tok::Minus)),
            '*' => out.push((pos, Tok::Star)),
            '/' => out.push((pos, Tok::Slash)),
            ')' => out.push((pos, Tok::RParen)),
            '^' => {
                if chars.get(i + 1).map(|x| x.1) == Some('^') {
                    out.push((pos, Tok::Wedge));
                    i += 1;
                } else {
                    out.push((pos, Tok::Caret));
                }
            }
            '(' => {
                let j = skip_ws(i + 1);
                let k = skip_ws(j + 1);
                if chars.get(j).map(|x| x.1) == Some('x') && chars.get(k).map(|x| x.1) == Some(')') {
                    out.push((pos, Tok::Tensor));
                    i = k;
                } else {
                    out.push((pos, Tok::LParen));
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().map(|x| x.1).collect();
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].1.is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((pos, Tok::Sym(chars[start..=i].iter().map(|x| x.1).collect())));
            }
            other => return Err(ParseError::Syntax { pos, msg: format!("unexpected character '{other}'") }),
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Num(Scalar),
    Sym(usize, GVector),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Wedge(usize, Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Tensor(usize, Box<Ast>, Box<Ast>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.tensor()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.tensor()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.tensor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn tensor(&mut self) -> Result<Ast, ParseError> {
        let lhs = self.product()?;
        if self.peek() == Some(&Tok::Tensor) {
            let pos = self.pos();
            self.bump();
            let rhs = self.product()?;
            if self.peek() == Some(&Tok::Tensor) {
                return Err(ParseError::Context { pos: self.pos(), msg: "only two tensor factors".into() });
            }
            return Ok(Ast::Tensor(pos, Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Wedge) => {
                    let pos = self.pos();
                    self.bump();
                    lhs = Ast::Wedge(pos, Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let n: u32 = n.try_into().map_err(|_| ParseError::Syntax {
                        pos: self.toks[self.at - 1].0,
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(Ast::Pow(Box::new(base), n));
                }
                _ => {
                    self.at -= 1;
                    return self.err("expected a non-negative integer exponent");
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => Ok(Ast::Num(Scalar::new(n, d))),
                        Some(Tok::Int(_)) => {
                            Err(ParseError::Syntax { pos: self.toks[self.at - 1].0, msg: "zero denominator".into() })
                        }
                        _ => {
                            self.at -= 1;
                            self.err("expected a denominator")
                        }
                    }
                } else {
                    Ok(Ast::Num(Scalar::from_integer(n)))
                }
            }
            Some(Tok::Sym(s)) => match symbol(&s) {
                Some(v) => Ok(Ast::Sym(pos, v)),
                None => Err(ParseError::UnknownSymbol { symbol: s, pos }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.at -= 1;
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(_) => {
                self.at -= 1;
                self.err("expected a number, symbol or '('")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

fn symbol(s: &str) -> Option<GVector> {
    match s {
        "H" => Some(lie::h()),
        "a" => Some(lie::a()),
        _ => Basis::from_symbol(s).map(Basis::vector),
    }
}

fn parse_ast(text: &str) -> Result<Ast, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let ast = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(ast)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

type Embed<'a, K> = &'a dyn Fn(&GVector) -> Combination<K>;

/// How one context interprets generators on each side of `(x)`.
struct Semantics<'a, K: Monomial> {
    context: Context,
    left: Embed<'a, K>,
    /// `None` when the context has no right factor.
    right: Option<Embed<'a, K>>,
    /// Whether `^^` is allowed on the right.
    wedge: bool,
}

fn eval<K: Monomial>(ast: &Ast, side: Side, inside: bool, s: &Semantics<K>) -> Result<Combination<K>, ParseError> {
    let go = |a: &Ast, side| eval(a, side, inside, s);
    Ok(match ast {
        Ast::Num(c) => Combination::scalar(c.clone()),
        Ast::Sym(pos, v) => match side {
            Side::Left => (s.left)(v),
            Side::Right => {
                if !lie::in_p(v) {
                    return Err(ParseError::Context {
                        pos: *pos,
                        msg: "only E1, E2, F1, F2 may appear right of (x)".into(),
                    });
                }
                (s.right.expect("right side exists"))(v)
            }
        },
        Ast::Add(a, b) => go(a, side)? + go(b, side)?,
        Ast::Sub(a, b) => go(a, side)? - go(b, side)?,
        Ast::Neg(a) => -go(a, side)?,
        Ast::Mul(a, b) => go(a, side)?.product(&go(b, side)?),
        Ast::Wedge(pos, a, b) => {
            if side != Side::Right || !s.wedge {
                return Err(ParseError::Context {
                    pos: *pos,
                    msg: format!(
                        "'^^' is a wedge and needs the exterior factor of the tensor context, not {:?}",
                        s.context
                    ),
                });
            }
            go(a, side)?.product(&go(b, side)?)
        }
        Ast::Pow(a, n) => go(a, side)?.pow(*n),
        Ast::Tensor(pos, a, b) => {
            if s.right.is_none() || s.context == Context::Clifford {
                return Err(ParseError::Context {
                    pos: *pos,
                    msg: format!("'(x)' is not available in the {:?} context", s.context),
                });
            }
            if inside || side == Side::Right {
                return Err(ParseError::Context { pos: *pos, msg: "nested tensor factors".into() });
            }
            let l = eval(a, Side::Left, true, s)?;
            let r = eval(b, Side::Right, true, s)?;
            l.product(&r)
        }
    })
}

/// A parsed element together with the algebra it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Symmetric(SymTensorElement),
    Enveloping(UElement),
    Clifford(CElement),
    Tensor(SymTensorElement),
    Uc(UCElement),
}

impl Element {
    pub fn context(&self) -> Context {
        match self {
            Element::Symmetric(_) => Context::Symmetric,
            Element::Enveloping(_) => Context::Enveloping,
            Element::Clifford(_) => Context::Clifford,
            Element::Tensor(_) => Context::Tensor,
            Element::Uc(_) => Context::Uc,
        }
    }

    /// Product in the common algebra; `None` if the contexts differ.
    pub fn mul(&self, rhs: &Element) -> Option<Element> {
        Some(match (self, rhs) {
            (Element::Symmetric(x), Element::Symmetric(y)) => Element::Symmetric(x.product(y)),
            (Element::Enveloping(x), Element::Enveloping(y)) => Element::Enveloping(x.product(y)),
            (Element::Clifford(x), Element::Clifford(y)) => Element::Clifford(x.product(y)),
            (Element::Tensor(x), Element::Tensor(y)) => Element::Tensor(x.product(y)),
            (Element::Uc(x), Element::Uc(y)) => Element::Uc(x.product(y)),
            _ => return None,
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Symmetric(x) | Element::Tensor(x) => x.is_zero(),
            Element::Enveloping(x) => x.is_zero(),
            Element::Clifford(x) => x.is_zero(),
            Element::Uc(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Symmetric(x) | Element::Tensor(x) => x.fmt(f),
            Element::Enveloping(x) => x.fmt(f),
            Element::Clifford(x) => x.fmt(f),
            Element::Uc(x) => x.fmt(f),
        }
    }
}

fn clifford_vector(pos: usize, v: &GVector) -> Result<CElement, ParseError> {
    if !lie::in_p(v) {
        return Err(ParseError::Context { pos, msg: "C(p) is generated by E1, E2, F1, F2 only".into() });
    }
    Ok(crate::clifford::c_vector(v))
}

fn check_clifford_symbols(ast: &Ast) -> Result<(), ParseError> {
    match ast {
        Ast::Num(_) => Ok(()),
        Ast::Sym(pos, v) => clifford_vector(*pos, v).map(|_| ()),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) | Ast::Wedge(_, a, b) | Ast::Tensor(_, a, b) => {
            check_clifford_symbols(a)?;
            check_clifford_symbols(b)
        }
        Ast::Neg(a) | Ast::Pow(a, _) => check_clifford_symbols(a),
    }
}

/// Parses `text` as an element of the algebra named by `context`.
pub fn parse_element(text: &str, context: Context) -> Result<Element, ParseError> {
    let ast = parse_ast(text)?;
    let sym_left = |v: &GVector| sym_vector(v);
    let sym_right = |v: &GVector| {
        let mut out = SymTensorElement::zero();
        for (b, c) in v {
            out.add_scaled(&ext_var(*b), c);
        }
        out
    };
    let u_left = |v: &GVector| u_vector(v);
    let uc_left = |v: &GVector| left(&u_vector(v));
    let uc_right = |v: &GVector| right(&crate::clifford::c_vector(v));
    let cl = |v: &GVector| crate::clifford::c_vector(v);
    Ok(match context {
        Context::Symmetric => Element::Symmetric(eval(
            &ast,
            Side::Left,
            false,
            &Semantics { context, left: &sym_left, right: None, wedge: false },
        )?),
        Context::Enveloping => Element::Enveloping(eval(
            &ast,
            Side::Left,
            false,
            &Semantics { context, left: &u_left, right: None, wedge: false },
        )?),
        Context::Clifford => {
            check_clifford_symbols(&ast)?;
            Element::Clifford(eval(
                &ast,
                Side::Left,
                false,
                &Semantics { context, left: &cl, right: None, wedge: false },
            )?)
        }
        Context::Tensor => Element::Tensor(eval(
            &ast,
            Side::Left,
            false,
            &Semantics { context, left: &sym_left, right: Some(&sym_right), wedge: true },
        )?),
        Context::Uc => Element::Uc(eval(
            &ast,
            Side::Left,
            false,
            &Semantics { context, left: &uc_left, right: Some(&uc_right), wedge: false },
        )?),
    })
}
