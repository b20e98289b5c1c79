//! Parser for quaternionic polynomial expressions.
//!
//! Grammar:
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := number | 'i' | 'j' | 'k' | 'z1' | 'z2' | 'conj' '(' expr ')' | '(' expr ')'
//! number := uint ['/' uint] ['i']
//! ```
//! Multiplication is noncommutative and associates left to right. Every
//! expression normalizes to the unique form f1 + f2·j; printing a normal form
//! and re-parsing it reproduces the same function.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::cpoly::{CPoly, Var};
use crate::qfunction::QFunction;
use crate::quaternion::Quaternion;
use crate::scalar::{GRat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(GRat),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0usize;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                pos += 1;
            }
            '+' => {
                out.push((Token::Plus, pos));
                pos += 1;
            }
            '-' => {
                out.push((Token::Minus, pos));
                pos += 1;
            }
            '*' => {
                out.push((Token::Star, pos));
                pos += 1;
            }
            '^' => {
                out.push((Token::Caret, pos));
                pos += 1;
            }
            '(' => {
                out.push((Token::LParen, pos));
                pos += 1;
            }
            ')' => {
                out.push((Token::RParen, pos));
                pos += 1;
            }
            '/' => {
                return Err(ParseError::new(
                    pos,
                    "'/' is only available inside rational literals like 2/3",
                ));
            }
            '0'..='9' => {
                let start = pos;
                let num = read_uint(bytes, &mut pos);
                let den = if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                        return Err(ParseError::new(pos, "expected digits after '/'"));
                    }
                    let d = read_uint(bytes, &mut pos);
                    if d.is_zero() {
                        return Err(ParseError::new(start, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let mut value = GRat::new(Rat::new(num, den), Rat::zero());
                if pos < bytes.len() && bytes[pos] == b'i' {
                    // imaginary literal such as 3i or 2/5i, unless the 'i'
                    // starts a longer identifier
                    let next_is_ident = pos + 1 < bytes.len()
                        && (bytes[pos + 1].is_ascii_alphanumeric());
                    if !next_is_ident {
                        pos += 1;
                        value = GRat::new(Rat::zero(), value.re);
                    }
                }
                out.push((Token::Number(value), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                let word = &src[start..pos];
                out.push((Token::Ident(word.to_string()), start));
            }
            other => {
                return Err(ParseError::new(pos, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

fn read_uint(bytes: &[u8], pos: &mut usize) -> BigInt {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[start..*pos])
        .unwrap()
        .parse()
        .unwrap()
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    index: usize,
    src_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Token, usize)> {
        self.tokens.get(self.index)
    }

    fn advance(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.index).cloned();
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), ParseError> {
        match self.advance() {
            Some((t, _)) if &t == want => Ok(()),
            Some((_, p)) => Err(ParseError::new(p, format!("expected {what}"))),
            None => Err(ParseError::new(self.src_len, format!("expected {what}"))),
        }
    }

    fn parse_expr(&mut self) -> Result<QFunction, ParseError> {
        let mut negate_first = false;
        if let Some((tok, _)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.advance();
                }
                Token::Minus => {
                    self.advance();
                    negate_first = true;
                }
                _ => {}
            }
        }
        let mut acc = self.parse_term()?;
        if negate_first {
            acc = -&acc;
        }
        while let Some((tok, _)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.advance();
                    let rhs = self.parse_term()?;
                    acc = &acc + &rhs;
                }
                Token::Minus => {
                    self.advance();
                    let rhs = self.parse_term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<QFunction, ParseError> {
        let mut acc = self.parse_factor()?;
        while let Some((Token::Star, _)) = self.peek() {
            self.advance();
            let rhs = self.parse_factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<QFunction, ParseError> {
        let base = self.parse_atom()?;
        if let Some((Token::Caret, _)) = self.peek() {
            self.advance();
            let (tok, p) = self
                .advance()
                .ok_or_else(|| ParseError::new(self.src_len, "expected exponent"))?;
            let n = match tok {
                Token::Number(v) if v.im.is_zero() && v.re.denom() == &BigInt::from(1) => {
                    u32::try_from(v.re.numer().clone())
                        .map_err(|_| ParseError::new(p, "exponent too large"))?
                }
                _ => return Err(ParseError::new(p, "exponent must be a nonnegative integer")),
            };
            let mut acc = QFunction::constant(&Quaternion::one());
            for _ in 0..n {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<QFunction, ParseError> {
        match self.advance() {
            Some((Token::Number(v), _)) => Ok(QFunction::from_parts(
                CPoly::constant(v),
                CPoly::zero(),
            )),
            Some((Token::Ident(name), p)) => match name.as_str() {
                "i" => Ok(QFunction::constant(&Quaternion::i())),
                "j" => Ok(QFunction::constant(&Quaternion::j())),
                "k" => Ok(QFunction::constant(&Quaternion::k())),
                "z1" => Ok(QFunction::from_parts(CPoly::var(Var::Z1), CPoly::zero())),
                "z2" => Ok(QFunction::from_parts(CPoly::var(Var::Z2), CPoly::zero())),
                "conj" => {
                    self.expect(&Token::LParen, "'(' after conj")?;
                    let inner = self.parse_expr()?;
                    self.expect(&Token::RParen, "closing ')'")?;
                    Ok(inner.conjugate())
                }
                other => Err(ParseError::new(p, format!("unknown identifier '{other}'"))),
            },
            Some((Token::LParen, _)) => {
                let inner = self.parse_expr()?;
                self.expect(&Token::RParen, "closing ')'")?;
                Ok(inner)
            }
            Some((t, p)) => Err(ParseError::new(p, format!("unexpected token {t:?}"))),
            None => Err(ParseError::new(self.src_len, "unexpected end of input")),
        }
    }
}

/// Parses an expression into its normal form f1 + f2·j.
pub fn parse_function(src: &str) -> Result<QFunction, ParseError> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut parser = Parser {
        tokens,
        index: 0,
        src_len: src.len(),
    };
    let f = parser.parse_expr()?;
    if let Some((_, p)) = parser.peek() {
        return Err(ParseError::new(*p, "trailing input after expression"));
    }
    Ok(f)
}

/// Parses a constant complex value such as "1/2-3i" or "-i".
pub fn parse_complex(src: &str) -> Result<GRat, ParseError> {
    let f = parse_function(src)?;
    let constant = f.f1().coefficient(&[0, 0, 0, 0]);
    let rebuilt = QFunction::from_parts(CPoly::constant(constant.clone()), CPoly::zero());
    if rebuilt != f {
        return Err(ParseError::new(0, "expected a constant complex value"));
    }
    Ok(constant)
}

/// Parses a constant rational value such as "-5/3".
pub fn parse_rational(src: &str) -> Result<Rat, ParseError> {
    let v = parse_complex(src)?;
    if !v.im.is_zero() {
        return Err(ParseError::new(0, "expected a real rational value"));
    }
    Ok(v.re)
}
