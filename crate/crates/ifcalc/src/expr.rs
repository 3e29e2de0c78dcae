//! Parsing and evaluation of the textual input language.
//!
//! The grammar, whitespace insensitive:
//!
//! ```text
//! expr   := additive
//! additive := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := number "*" factor          scalar multiple
//!         | power
//! power  := atom ("^" number)*
//! atom   := "(" number "," number ")"  IFN literal
//!         | "X"                        the identity function
//! number := decimal | decimal "/" decimal   (fraction, one-token lookahead)
//! ```
//!
//! `(` always opens an IFN literal; there is no grouping. `/` after a bare
//! number is a fraction (`5/9`), after anything else it is division. The
//! operators `+ - * /` evaluate to `⊕ ⊖ ⊗ ⊘` on IFN values; `⊖` and `⊘`
//! report their identity fallback through the evaluation result instead of
//! failing. Mixed trees are rejected except the shift form `ifn + iff`.
//! Parse errors carry a position and print as `line:col: message`.

use crate::iff::{Iff, IffError};
use crate::ifn::{Ifn, IfnError};
use std::fmt;
use thiserror::Error;

/// A parse error at a 1-based `line:col` position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

/// Evaluation errors for well-formed trees.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error(transparent)]
    Value(#[from] IfnError),
    #[error(transparent)]
    Function(#[from] IffError),
}

/// Binary operators on IFN values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl fmt::Display for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        };
        write!(f, "{c}")
    }
}

/// A parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedExpr {
    IfnLiteral(Ifn),
    IffExpr(Iff),
    BinaryOp {
        op: BinOp,
        left: Box<ParsedExpr>,
        right: Box<ParsedExpr>,
    },
    ScalarApply {
        lambda: f64,
        inner: Box<ParsedExpr>,
    },
    PowerApply {
        base: Box<ParsedExpr>,
        exponent: f64,
    },
}

impl fmt::Display for ParsedExpr {
    /// Canonical text that reparses to the same tree. Holds for every tree
    /// the parser produces; hand-built trees that need grouping have no
    /// textual form in this grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedExpr::IfnLiteral(x) => write!(f, "{x}"),
            ParsedExpr::IffExpr(func) => write!(f, "{func}"),
            ParsedExpr::BinaryOp { op, left, right } => write!(f, "{left}{op}{right}"),
            ParsedExpr::ScalarApply { lambda, inner } => write!(f, "{lambda}*{inner}"),
            ParsedExpr::PowerApply { base, exponent } => write!(f, "{base}^{exponent}"),
        }
    }
}

/// The result of evaluating a tree: an IFN value with its accumulated
/// fallback flag, or a function.
#[derive(Debug, Clone, PartialEq)]
pub enum Evaluated {
    Ifn { value: Ifn, fallback_used: bool },
    Iff(Iff),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    X,
    Number(f64),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::LParen => write!(f, "'('"),
            Token::RParen => write!(f, "')'"),
            Token::Comma => write!(f, "','"),
            Token::Plus => write!(f, "'+'"),
            Token::Minus => write!(f, "'-'"),
            Token::Star => write!(f, "'*'"),
            Token::Slash => write!(f, "'/'"),
            Token::Caret => write!(f, "'^'"),
            Token::X => write!(f, "'X'"),
            Token::Number(n) => write!(f, "number {n}"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Spanned {
    token: Token,
    line: u32,
    col: u32,
}

fn error_at(line: u32, col: u32, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    let mut line = 1u32;
    let mut col = 1u32;
    while let Some(&c) = chars.peek() {
        let (tok_line, tok_col) = (line, col);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            chars.next();
            col += 1;
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(&mut chars),
            '(' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::LParen, line: tok_line, col: tok_col });
            }
            ')' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::RParen, line: tok_line, col: tok_col });
            }
            ',' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::Comma, line: tok_line, col: tok_col });
            }
            '+' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::Plus, line: tok_line, col: tok_col });
            }
            '-' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::Minus, line: tok_line, col: tok_col });
            }
            '*' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::Star, line: tok_line, col: tok_col });
            }
            '/' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::Slash, line: tok_line, col: tok_col });
            }
            '^' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::Caret, line: tok_line, col: tok_col });
            }
            'X' => {
                advance(&mut chars);
                tokens.push(Spanned { token: Token::X, line: tok_line, col: tok_col });
            }
            c if c.is_ascii_digit() || c == '.' => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() || d == '.' {
                        text.push(d);
                        advance(&mut chars);
                    } else {
                        break;
                    }
                }
                let value: f64 = text
                    .parse()
                    .map_err(|_| error_at(tok_line, tok_col, format!("malformed number {text:?}")))?;
                tokens.push(Spanned { token: Token::Number(value), line: tok_line, col: tok_col });
            }
            other => {
                return Err(error_at(line, col, format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end_line: u32,
    end_col: u32,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn peek_token(&self, offset: usize) -> Option<Token> {
        self.tokens.get(self.pos + offset).map(|s| s.token)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).copied();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (u32, u32) {
        match self.peek() {
            Some(s) => (s.line, s.col),
            None => (self.end_line, self.end_col),
        }
    }

    fn unexpected(&mut self, expected: &str) -> ParseError {
        let (line, col) = self.here();
        match self.peek() {
            Some(s) => error_at(line, col, format!("expected {expected}, found {}", s.token)),
            None => error_at(line, col, format!("expected {expected}, found end of input")),
        }
    }

    fn expect(&mut self, token: Token, expected: &str) -> Result<Spanned, ParseError> {
        match self.peek() {
            Some(s) if s.token == token => Ok(self.next().expect("peeked")),
            _ => Err(self.unexpected(expected)),
        }
    }

    /// A number, with the fraction lookahead: `p / q` collapses into one
    /// value when `q` is itself a bare number.
    fn number(&mut self, expected: &str) -> Result<(f64, u32, u32), ParseError> {
        let Some(s) = self.peek().copied() else {
            return Err(self.unexpected(expected));
        };
        let Token::Number(p) = s.token else {
            return Err(self.unexpected(expected));
        };
        self.next();
        if self.peek_token(0) == Some(Token::Slash) {
            if let Some(Token::Number(_)) = self.peek_token(1) {
                self.next().expect("peeked slash");
                let denom = self.next().expect("peeked denominator");
                let Token::Number(q) = denom.token else { unreachable!() };
                if q == 0.0 {
                    return Err(error_at(denom.line, denom.col, "fraction denominator is zero".to_string()));
                }
                return Ok((p / q, s.line, s.col));
            }
        }
        Ok((p, s.line, s.col))
    }

    fn atom(&mut self) -> Result<ParsedExpr, ParseError> {
        match self.peek().copied() {
            Some(Spanned { token: Token::LParen, line, col }) => {
                self.next();
                let (u, ..) = self.number("a number inside the IFN literal")?;
                self.expect(Token::Comma, "',' between IFN components")?;
                let (v, ..) = self.number("a number inside the IFN literal")?;
                self.expect(Token::RParen, "')' closing the IFN literal")?;
                let value = Ifn::new(u, v).map_err(|e| {
                    error_at(line, col, format!("invalid IFN literal ({u},{v}): {e}"))
                })?;
                Ok(ParsedExpr::IfnLiteral(value))
            }
            Some(Spanned { token: Token::X, .. }) => {
                self.next();
                Ok(ParsedExpr::IffExpr(Iff::identity()))
            }
            _ => Err(self.unexpected("an IFN literal '(u,v)' or 'X'")),
        }
    }

    fn power(&mut self) -> Result<ParsedExpr, ParseError> {
        let mut base = self.atom()?;
        while self.peek_token(0) == Some(Token::Caret) {
            self.next();
            let (exponent, ..) = self.number("an exponent after '^'")?;
            base = ParsedExpr::PowerApply { base: Box::new(base), exponent };
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<ParsedExpr, ParseError> {
        if let Some(Token::Number(_)) = self.peek_token(0) {
            let (lambda, ..) = self.number("a scalar coefficient")?;
            self.expect(Token::Star, "'*' after the scalar coefficient")?;
            let inner = self.factor()?;
            return Ok(ParsedExpr::ScalarApply { lambda, inner: Box::new(inner) });
        }
        self.power()
    }

    fn term(&mut self) -> Result<ParsedExpr, ParseError> {
        let mut left = self.factor()?;
        loop {
            let op = match self.peek_token(0) {
                Some(Token::Star) => BinOp::Mul,
                Some(Token::Slash) => BinOp::Div,
                _ => break,
            };
            self.next();
            let right = self.factor()?;
            left = ParsedExpr::BinaryOp { op, left: Box::new(left), right: Box::new(right) };
        }
        Ok(left)
    }

    fn additive(&mut self) -> Result<ParsedExpr, ParseError> {
        let mut left = self.term()?;
        loop {
            let op = match self.peek_token(0) {
                Some(Token::Plus) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => break,
            };
            self.next();
            let right = self.term()?;
            left = ParsedExpr::BinaryOp { op, left: Box::new(left), right: Box::new(right) };
        }
        Ok(left)
    }
}

/// Parses an expression, reporting failures as positioned errors.
pub fn parse(input: &str) -> Result<ParsedExpr, ParseError> {
    let tokens = tokenize(input)?;
    let lines = input.lines().count().max(1) as u32;
    let last_len = input.lines().last().map_or(0, |l| l.chars().count()) as u32;
    let mut parser = Parser { tokens, pos: 0, end_line: lines, end_col: last_len + 1 };
    if parser.peek().is_none() {
        return Err(error_at(1, 1, "empty input".to_string()));
    }
    let expr = parser.additive()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("end of input"));
    }
    Ok(expr)
}

/// Evaluates a parsed tree to an IFN value (with its fallback flag) or a
/// function.
pub fn evaluate(expr: &ParsedExpr) -> Result<Evaluated, EvalError> {
    match expr {
        ParsedExpr::IfnLiteral(x) => Ok(Evaluated::Ifn { value: *x, fallback_used: false }),
        ParsedExpr::IffExpr(f) => Ok(Evaluated::Iff(f.clone())),
        ParsedExpr::ScalarApply { lambda, inner } => match evaluate(inner)? {
            Evaluated::Ifn { value, fallback_used } => Ok(Evaluated::Ifn {
                value: value.scalar_mul(*lambda)?,
                fallback_used,
            }),
            Evaluated::Iff(f) => Ok(Evaluated::Iff(f.scalar_mul(*lambda)?)),
        },
        ParsedExpr::PowerApply { base, exponent } => match evaluate(base)? {
            Evaluated::Ifn { value, fallback_used } => Ok(Evaluated::Ifn {
                value: value.power(*exponent)?,
                fallback_used,
            }),
            Evaluated::Iff(f) => match f.as_power() {
                Some(inner_exponent) => Ok(Evaluated::Iff(Iff::power(inner_exponent * exponent)?)),
                None => Err(EvalError::TypeMismatch(
                    "only X and its powers can be raised to a power".to_string(),
                )),
            },
        },
        ParsedExpr::BinaryOp { op, left, right } => {
            let lhs = evaluate(left)?;
            let rhs = evaluate(right)?;
            match (lhs, rhs) {
                (
                    Evaluated::Ifn { value: l, fallback_used: fl },
                    Evaluated::Ifn { value: r, fallback_used: fr },
                ) => {
                    let inherited = fl || fr;
                    let (value, fallback_used) = match op {
                        BinOp::Add => (l.add(r), inherited),
                        BinOp::Mul => (l.mul(r), inherited),
                        BinOp::Sub => {
                            let out = l.sub(r);
                            (out.value, inherited || out.fallback_used)
                        }
                        BinOp::Div => {
                            let out = l.div(r);
                            (out.value, inherited || out.fallback_used)
                        }
                    };
                    Ok(Evaluated::Ifn { value, fallback_used })
                }
                (Evaluated::Ifn { value, .. }, Evaluated::Iff(f)) if *op == BinOp::Add => {
                    Ok(Evaluated::Iff(f.shift(value)))
                }
                (Evaluated::Iff(_), Evaluated::Ifn { .. }) if *op == BinOp::Add => {
                    Err(EvalError::TypeMismatch(
                        "the shift form needs the IFN on the left: (u,v)+X...".to_string(),
                    ))
                }
                _ => Err(EvalError::TypeMismatch(format!(
                    "'{op}' needs two IFN values (functions only combine via the shift form)"
                ))),
            }
        }
    }
}
