//! Exact Gaussian-rational scalars.
//!
//! A [`Coefficient`] is a complex number whose real and imaginary parts are
//! arbitrary-precision rationals. `BigRational` keeps every fraction reduced
//! with a positive denominator, so structural equality is numeric equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::DecodeError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    re: BigRational,
    im: BigRational,
}

impl Coefficient {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coefficient { re, im }
    }

    pub fn zero() -> Self {
        Coefficient::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Coefficient::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Coefficient::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        Coefficient::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_biguint(n: BigUint) -> Self {
        Coefficient::from_integer(BigInt::from(n))
    }

    pub fn from_rational(re: BigRational) -> Self {
        Coefficient::new(re, BigRational::zero())
    }

    /// `num / den` as a real coefficient. Returns `None` for a zero denominator.
    pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Option<Self> {
        let den = den.into();
        if den.is_zero() {
            return None;
        }
        Some(Coefficient::from_rational(BigRational::new(num.into(), den)))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for nonzero real integers greater than zero.
    pub fn is_positive_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer() && self.re.is_positive()
    }

    pub fn conj(&self) -> Self {
        Coefficient::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Coefficient::new(&self.re / &norm, -(&self.im / &norm)))
    }

    /// Sign used when printing a term: the sign of the real part, or of the
    /// imaginary part when the real part vanishes.
    pub fn is_negative_leading(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_integer(n)
    }
}

impl From<BigRational> for Coefficient {
    fn from(q: BigRational) -> Self {
        Coefficient::from_rational(q)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &'a Coefficient) -> Coefficient {
        Coefficient::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &'a Coefficient) -> Coefficient {
        Coefficient::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &'a Coefficient) -> Coefficient {
        Coefficient::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::new(-self.re, -self.im)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Prints `re`, `im i`, or `re+im i` with parts as `p` or `p/q`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => {
                fmt_rational(&self.im, f)?;
                f.write_str("i")
            }
            (false, false) => {
                fmt_rational(&self.re, f)?;
                if self.im.is_positive() {
                    f.write_str("+")?;
                }
                fmt_rational(&self.im, f)?;
                f.write_str("i")
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct CoefficientRepr {
    re: RationalRepr,
    im: RationalRepr,
}

impl RationalRepr {
    fn from_rational(q: &BigRational) -> Self {
        RationalRepr {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }

    fn to_rational(&self) -> Result<BigRational, DecodeError> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| DecodeError::Malformed(format!("bad numerator {:?}", self.num)))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| DecodeError::Malformed(format!("bad denominator {:?}", self.den)))?;
        if !den.is_positive() {
            return Err(DecodeError::Malformed(format!(
                "denominator must be positive, got {}",
                den
            )));
        }
        Ok(BigRational::new(num, den))
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CoefficientRepr {
            re: RationalRepr::from_rational(&self.re),
            im: RationalRepr::from_rational(&self.im),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CoefficientRepr::deserialize(deserializer)?;
        let re = repr.re.to_rational().map_err(serde::de::Error::custom)?;
        let im = repr.im.to_rational().map_err(serde::de::Error::custom)?;
        Ok(Coefficient::new(re, im))
    }
}
