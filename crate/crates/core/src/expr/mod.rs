//! Textual operator expressions.
//!
//! `ad` (or `a†`) is the creator, `a` the annihilator, juxtaposition is the
//! operator product and `^` a power. The full grammar is in `GRAMMAR.md` at
//! the root of this crate.

mod ast;
mod parser;

use std::fmt::Write;

pub use ast::ExprNode;
pub use parser::{parse, ParseError, ParseErrorKind};

use crate::ladder::{add, multiply, scale, NormalMonomial, NormalPolynomial};

/// Normal form of an expression.
pub fn evaluate(e: &ExprNode) -> NormalPolynomial {
    match e {
        ExprNode::Letter(l) => NormalPolynomial::monomial(l.monomial()),
        ExprNode::Identity => NormalPolynomial::one(),
        ExprNode::Power { base, exp } => evaluate(base).pow(*exp),
        ExprNode::Product(factors) => factors
            .iter()
            .fold(NormalPolynomial::one(), |acc, f| multiply(&acc, &evaluate(f))),
        ExprNode::Sum(terms) => terms
            .iter()
            .fold(NormalPolynomial::zero(), |acc, t| add(&acc, &evaluate(t))),
        ExprNode::Scaled { coeff, body } => scale(coeff, &evaluate(body)),
    }
}

fn format_monomial(m: NormalMonomial) -> String {
    let mut parts = Vec::new();
    for (name, n) in [("ad", m.creators), ("a", m.annihilators)] {
        match n {
            0 => {}
            1 => parts.push(name.to_string()),
            n => parts.push(format!("{}^{}", name, n)),
        }
    }
    parts.join(" ")
}

/// Canonical text of a polynomial, e.g. `ad^2 a^2 + ad a`. Parses back to
/// an expression evaluating to `p`.
pub fn format(p: &NormalPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (m, c)) in p.iter().enumerate() {
        let negative = c.is_negative_leading();
        let magnitude = if negative { -c } else { c.clone() };
        match (n, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = format_monomial(*m);
        if mono.is_empty() {
            let _ = write!(out, "{}", magnitude);
        } else if magnitude.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{} {}", magnitude, mono);
        }
    }
    out
}
