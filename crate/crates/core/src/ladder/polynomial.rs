use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::NormalMonomial;
use crate::coefficient::Coefficient;

/// A finite linear combination of normally ordered monomials.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal. Iteration follows the canonical term
/// order of [`NormalMonomial`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalPolynomial {
    terms: BTreeMap<NormalMonomial, Coefficient>,
}

impl NormalPolynomial {
    pub fn zero() -> Self {
        NormalPolynomial::default()
    }

    pub fn one() -> Self {
        NormalPolynomial::monomial(NormalMonomial::IDENTITY)
    }

    pub fn monomial(m: NormalMonomial) -> Self {
        NormalPolynomial::term(Coefficient::one(), m)
    }

    pub fn term(c: Coefficient, m: NormalMonomial) -> Self {
        let mut p = NormalPolynomial::zero();
        p.add_term(m, &c);
        p
    }

    /// Collects `(coefficient, monomial)` pairs, summing repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Coefficient, NormalMonomial)>,
    {
        let mut p = NormalPolynomial::zero();
        for (c, m) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: NormalMonomial) -> Option<&Coefficient> {
        self.terms.get(&m)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&NormalMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: NormalMonomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn pow(&self, exp: u32) -> NormalPolynomial {
        let mut result = NormalPolynomial::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = multiply(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = multiply(&base, &base);
            }
        }
        result
    }
}

pub fn add(p: &NormalPolynomial, q: &NormalPolynomial) -> NormalPolynomial {
    let mut out = p.clone();
    for (m, c) in q.iter() {
        out.add_term(*m, c);
    }
    out
}

pub fn sub(p: &NormalPolynomial, q: &NormalPolynomial) -> NormalPolynomial {
    let mut out = p.clone();
    for (m, c) in q.iter() {
        out.add_term(*m, &-c);
    }
    out
}

pub fn scale(c: &Coefficient, p: &NormalPolynomial) -> NormalPolynomial {
    if c.is_zero() {
        return NormalPolynomial::zero();
    }
    NormalPolynomial {
        terms: p.iter().map(|(m, pc)| (*m, c * pc)).collect(),
    }
}

/// Integer weights `i! C(s,i) C(k,i)` for `i = 0..=min(s,k)`: the number of
/// ways to join `i` of `s` gray spots with `i` of `k` white spots.
pub fn join_counts(s: u32, k: u32) -> Vec<BigUint> {
    let top = s.min(k);
    let mut out = Vec::with_capacity(top as usize + 1);
    let mut c = BigUint::one();
    out.push(c.clone());
    for i in 0..top {
        // c_{i+1} = c_i (s-i)(k-i) / (i+1), exact at every step
        c = c * BigUint::from(s - i) * BigUint::from(k - i) / BigUint::from(i + 1);
        out.push(c.clone());
    }
    out
}

/// Closed-form product of two basis monomials:
/// `a†^r a^s · a†^k a^l = Σ_i i! C(s,i) C(k,i) a†^(r+k-i) a^(s+l-i)`.
pub fn multiply_monomials(m1: NormalMonomial, m2: NormalMonomial) -> NormalPolynomial {
    let (r, s) = (m1.creators, m1.annihilators);
    let (k, l) = (m2.creators, m2.annihilators);
    let terms = join_counts(s, k)
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            let i = i as u32;
            (
                Coefficient::from_biguint(w),
                NormalMonomial::new(r + k - i, s + l - i),
            )
        });
    NormalPolynomial::from_terms(terms)
}

pub fn multiply(p: &NormalPolynomial, q: &NormalPolynomial) -> NormalPolynomial {
    let mut out = NormalPolynomial::zero();
    for (m1, c1) in p.iter() {
        for (m2, c2) in q.iter() {
            let c = c1 * c2;
            for (m, w) in multiply_monomials(*m1, *m2).iter() {
                out.add_term(*m, &(&c * w));
            }
        }
    }
    out
}

/// Normal form of `[a^s, a†^k] = a^s a†^k - a†^k a^s`.
pub fn commutator_powers(s: u32, k: u32) -> NormalPolynomial {
    sub(
        &multiply_monomials(NormalMonomial::new(0, s), NormalMonomial::new(k, 0)),
        &NormalPolynomial::monomial(NormalMonomial::new(k, s)),
    )
}

impl<'a> Add<&'a NormalPolynomial> for &'a NormalPolynomial {
    type Output = NormalPolynomial;
    fn add(self, rhs: &'a NormalPolynomial) -> NormalPolynomial {
        add(self, rhs)
    }
}

impl<'a> Sub<&'a NormalPolynomial> for &'a NormalPolynomial {
    type Output = NormalPolynomial;
    fn sub(self, rhs: &'a NormalPolynomial) -> NormalPolynomial {
        sub(self, rhs)
    }
}

impl<'a> Mul<&'a NormalPolynomial> for &'a NormalPolynomial {
    type Output = NormalPolynomial;
    fn mul(self, rhs: &'a NormalPolynomial) -> NormalPolynomial {
        multiply(self, rhs)
    }
}

impl Neg for &NormalPolynomial {
    type Output = NormalPolynomial;
    fn neg(self) -> NormalPolynomial {
        scale(&Coefficient::from_integer(-1), self)
    }
}

/// Debug-style rendering such as `Γ^(4,3) + 2·Γ^(3,2)`.
impl fmt::Display for NormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", m)?;
            } else if c.is_real() {
                write!(f, "{}·{}", c, m)?;
            } else {
                write!(f, "({})·{}", c, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    r: u32,
    s: u32,
    coeff: Coefficient,
}

impl Serialize for NormalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (m, c) in self.iter() {
            seq.serialize_element(&TermRepr {
                r: m.creators,
                s: m.annihilators,
                coeff: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for NormalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        Ok(NormalPolynomial::from_terms(
            terms
                .into_iter()
                .map(|t| (t.coeff, NormalMonomial::new(t.r, t.s))),
        ))
    }
}
