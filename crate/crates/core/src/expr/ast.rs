use std::fmt;

use crate::coefficient::Coefficient;
use crate::ladder::Letter;

/// Syntax tree of an operator expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprNode {
    Letter(Letter),
    Power { base: Box<ExprNode>, exp: u32 },
    /// Operator product, left to right. Never empty.
    Product(Vec<ExprNode>),
    /// Never empty.
    Sum(Vec<ExprNode>),
    Scaled { coeff: Coefficient, body: Box<ExprNode> },
    Identity,
}

impl ExprNode {
    /// `base^exp`, with exponent zero collapsing to the identity.
    pub fn power(base: ExprNode, exp: u32) -> ExprNode {
        if exp == 0 {
            ExprNode::Identity
        } else {
            ExprNode::Power {
                base: Box::new(base),
                exp,
            }
        }
    }

    /// Product of the factors; a single factor is returned as is and an
    /// empty list gives the identity.
    pub fn product(mut factors: Vec<ExprNode>) -> ExprNode {
        match factors.len() {
            0 => ExprNode::Identity,
            1 => factors.pop().unwrap(),
            _ => ExprNode::Product(factors),
        }
    }

    /// Sum of the terms; an empty list is the zero multiple of the identity.
    pub fn sum(mut terms: Vec<ExprNode>) -> ExprNode {
        match terms.len() {
            0 => ExprNode::scaled(Coefficient::zero(), ExprNode::Identity),
            1 => terms.pop().unwrap(),
            _ => ExprNode::Sum(terms),
        }
    }

    pub fn scaled(coeff: Coefficient, body: ExprNode) -> ExprNode {
        ExprNode::Scaled {
            coeff,
            body: Box::new(body),
        }
    }

    /// `-body`, folding the sign into an existing coefficient.
    pub fn negated(self) -> ExprNode {
        match self {
            ExprNode::Scaled { coeff, body } => ExprNode::Scaled { coeff: -coeff, body },
            other => ExprNode::scaled(Coefficient::from_integer(-1), other),
        }
    }
}

/// S-expression form, used for golden parse-tree tests.
impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, head: &str, items: &[ExprNode]) -> fmt::Result {
            write!(f, "({}", head)?;
            for item in items {
                write!(f, " {}", item)?;
            }
            f.write_str(")")
        }
        match self {
            ExprNode::Letter(l) => write!(f, "{}", l),
            ExprNode::Identity => f.write_str("1"),
            ExprNode::Power { base, exp } => write!(f, "(^ {} {})", base, exp),
            ExprNode::Product(items) => list(f, "*", items),
            ExprNode::Sum(items) => list(f, "+", items),
            ExprNode::Scaled { coeff, body } => write!(f, "(scale {} {})", coeff, body),
        }
    }
}
