use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::monomial::NormalMonomial;
use super::polynomial::{multiply, NormalPolynomial};
use crate::coefficient::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `a`
    Annihilator,
    /// `a†`
    Creator,
}

impl Letter {
    pub fn monomial(self) -> NormalMonomial {
        match self {
            Letter::Annihilator => NormalMonomial::annihilator(),
            Letter::Creator => NormalMonomial::creator(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::Annihilator => "a",
            Letter::Creator => "ad",
        })
    }
}

/// A product of ladder operators in the free algebra, read left to right.
/// The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `letter^n`
    pub fn repeat(letter: Letter, n: usize) -> Self {
        Word(vec![letter; n])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Index of the leftmost `a a†` pair, if any.
    pub fn leftmost_inversion(&self) -> Option<usize> {
        self.0
            .windows(2)
            .position(|w| w == [Letter::Annihilator, Letter::Creator])
    }

    /// The monomial this word equals if it is already normally ordered.
    pub fn as_normal(&self) -> Option<NormalMonomial> {
        if self.leftmost_inversion().is_some() {
            return None;
        }
        let creators = self.0.iter().take_while(|l| **l == Letter::Creator).count();
        let annihilators = self.0.len() - creators;
        Some(NormalMonomial::new(creators as u32, annihilators as u32))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown letter {0:?}; expected `a`, `ad` or `a†`")]
pub struct WordParseError(pub String);

/// Whitespace-separated letters, e.g. `"a ad a† a"`. `"1"` or `""` is the empty word.
impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "a" => letters.push(Letter::Annihilator),
                "ad" | "a†" => letters.push(Letter::Creator),
                "1" => {}
                other => return Err(WordParseError(other.to_string())),
            }
        }
        Ok(Word(letters))
    }
}

/// Normal ordering by rewriting: the leftmost `a a†` in some word is
/// replaced by `a† a` plus the word with the pair removed, until every word
/// in the formal sum is normally ordered. Each step removes one inversion or
/// shortens the word, so the loop terminates.
pub fn normal_order_rewrite(word: &Word) -> NormalPolynomial {
    let mut pending: BTreeMap<Word, BigUint> = BTreeMap::new();
    pending.insert(word.clone(), BigUint::one());
    let mut done: BTreeMap<NormalMonomial, BigUint> = BTreeMap::new();

    while let Some((w, count)) = pending.pop_first() {
        match w.leftmost_inversion() {
            None => {
                let m = w.as_normal().expect("no inversion means normally ordered");
                *done.entry(m).or_default() += count;
            }
            Some(j) => {
                let mut swapped = w.0.clone();
                swapped.swap(j, j + 1);
                let mut contracted = w.0;
                contracted.drain(j..j + 2);
                *pending.entry(Word(swapped)).or_default() += &count;
                *pending.entry(Word(contracted)).or_default() += count;
            }
        }
    }

    NormalPolynomial::from_terms(
        done.into_iter()
            .map(|(m, c)| (Coefficient::from_biguint(c), m)),
    )
}

/// Normal ordering by left-folding the closed-form product over the letters.
pub fn normal_order_fold(word: &Word) -> NormalPolynomial {
    word.letters()
        .iter()
        .fold(NormalPolynomial::one(), |acc, l| {
            multiply(&acc, &NormalPolynomial::monomial(l.monomial()))
        })
}

/// The unique normally ordered form of `word`. Both the rewriting and the
/// folding strategy are run and must agree.
pub fn normal_order_word(word: &Word) -> NormalPolynomial {
    let rewritten = normal_order_rewrite(word);
    let folded = normal_order_fold(word);
    assert_eq!(
        rewritten, folded,
        "normal ordering strategies disagree on `{}`",
        word
    );
    rewritten
}
