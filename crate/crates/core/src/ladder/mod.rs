//! The normally ordered monomial algebra of a single bosonic mode.
//!
//! Elements are finite sums `Σ α a†^r a^s` with exact coefficients. Products
//! use the closed form for reordering `a^s a†^k`; free words in `a` and `a†`
//! are brought to normal order either by rewriting or by folding products.

mod monomial;
mod polynomial;
mod word;

pub use monomial::NormalMonomial;
pub use polynomial::{
    add, commutator_powers, join_counts, multiply, multiply_monomials, scale, sub,
    NormalPolynomial,
};
pub use word::{
    normal_order_fold, normal_order_rewrite, normal_order_word, Letter, Word, WordParseError,
};
