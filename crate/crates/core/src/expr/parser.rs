use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::ast::ExprNode;
use crate::coefficient::Coefficient;
use crate::ladder::Letter;

const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Character offset into the input (0-based).
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("lexical error: unexpected character {0:?}")]
    Lexical(char),
    #[error("syntax error: expected {expected}, found {found}")]
    Syntax { expected: String, found: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("nesting deeper than {MAX_DEPTH} levels")]
    TooDeep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    A,
    Ad,
    Int(String),
    Slash,
    Plus,
    Minus,
    Caret,
    LParen,
    RParen,
    Imag,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::A => f.write_str("`a`"),
            Tok::Ad => f.write_str("`ad`"),
            Tok::Int(s) => write!(f, "`{}`", s),
            Tok::Slash => f.write_str("`/`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Imag => f.write_str("`i`"),
        }
    }
}

fn lex(input: &str) -> Result<(Vec<(Tok, usize)>, usize), ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            'a' => {
                if matches!(chars.get(i + 1), Some('d') | Some('†')) {
                    i += 1;
                    Tok::Ad
                } else {
                    Tok::A
                }
            }
            '0'..='9' => {
                while chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                    i += 1;
                }
                Tok::Int(chars[start..=i].iter().collect())
            }
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'i' => Tok::Imag,
            other => {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::Lexical(other),
                })
            }
        };
        i += 1;
        toks.push((tok, start));
    }
    Ok((toks, chars.len()))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.pos + offset).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.position(),
            kind,
        }
    }

    fn expected(&self, what: &str) -> ParseError {
        let found = match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".to_string(),
        };
        self.err(ParseErrorKind::Syntax {
            expected: what.to_string(),
            found,
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<ExprNode, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err(ParseErrorKind::TooDeep));
        }
        let mut terms = Vec::new();
        let leading_minus = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        terms.push(if leading_minus { first.negated() } else { first });
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(self.term()?.negated());
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(ExprNode::sum(terms))
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::A) | Some(Tok::Ad) | Some(Tok::LParen)
        ) || matches!(self.peek(), Some(Tok::Int(s)) if s == "1")
    }

    fn term(&mut self) -> Result<ExprNode, ParseError> {
        let coeff = match self.peek() {
            Some(Tok::Int(_)) => {
                let lone_one = matches!(self.peek(), Some(Tok::Int(s)) if s == "1");
                let mark = self.pos;
                let c = self.coeff()?;
                // A bare `1` with nothing attached is the identity atom.
                if lone_one && self.pos == mark + 1 && !self.starts_factor() {
                    return Ok(ExprNode::Identity);
                }
                Some(c)
            }
            _ => None,
        };
        let mut factors = Vec::new();
        while self.starts_factor() {
            factors.push(self.factor()?);
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(self.expected("a term"));
        }
        let body = ExprNode::product(factors);
        Ok(match coeff {
            Some(c) => ExprNode::scaled(c, body),
            None => body,
        })
    }

    fn factor(&mut self) -> Result<ExprNode, ParseError> {
        let atom = match self.bump() {
            Some(Tok::A) => ExprNode::Letter(Letter::Annihilator),
            Some(Tok::Ad) => ExprNode::Letter(Letter::Creator),
            Some(Tok::Int(_)) => ExprNode::Identity,
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.expected("`)`"));
                }
                self.bump();
                inner
            }
            _ => {
                self.pos -= 1;
                return Err(self.expected("a factor"));
            }
        };
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let exp = self.natural("natural number")?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| self.err_before(ParseErrorKind::ExponentTooLarge))?;
            return Ok(ExprNode::power(atom, exp));
        }
        Ok(atom)
    }

    fn err_before(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.toks[self.pos - 1].1,
            kind,
        }
    }

    fn natural(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let n = s.parse().expect("lexer only emits digits");
                self.bump();
                Ok(n)
            }
            _ => Err(self.expected(what)),
        }
    }

    /// `int ('/' nat)?`
    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let num = self.natural("integer")?;
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let den = self.natural("denominator")?;
            if den.is_zero() {
                return Err(self.err_before(ParseErrorKind::ZeroDenominator));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    /// Does `('+'|'-') int ('/' nat)? 'i'` follow?
    fn imaginary_part_follows(&self) -> bool {
        if !matches!(self.peek(), Some(Tok::Plus) | Some(Tok::Minus)) {
            return false;
        }
        if !matches!(self.peek_at(1), Some(Tok::Int(_))) {
            return false;
        }
        match self.peek_at(2) {
            Some(Tok::Imag) => true,
            Some(Tok::Slash) => {
                matches!(self.peek_at(3), Some(Tok::Int(_)))
                    && matches!(self.peek_at(4), Some(Tok::Imag))
            }
            _ => false,
        }
    }

    /// `rational (('+'|'-') rational 'i')? | rational 'i'`
    fn coeff(&mut self) -> Result<Coefficient, ParseError> {
        let first = self.rational()?;
        if self.peek() == Some(&Tok::Imag) {
            self.bump();
            return Ok(Coefficient::new(BigRational::zero(), first));
        }
        if self.imaginary_part_follows() {
            let negative = self.bump() == Some(Tok::Minus);
            let im = self.rational()?;
            self.bump();
            let im = if negative { -im } else { im };
            return Ok(Coefficient::new(first, im));
        }
        Ok(Coefficient::from_rational(first))
    }
}

/// Parses an operator expression. See `GRAMMAR.md` for the accepted syntax.
pub fn parse(input: &str) -> Result<ExprNode, ParseError> {
    let (toks, end) = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        depth: 0,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.expected("`+`, `-` or end of input"));
    }
    Ok(e)
}
