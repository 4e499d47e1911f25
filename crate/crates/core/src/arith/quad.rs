use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::factor::squarefree_decompose;
use super::{ArithError, Rational};

/// Element a + b√d of ℚ(√d), d squarefree and not 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuadRepr")]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
    pub d: i64,
}

#[derive(Deserialize)]
struct QuadRepr {
    a: Rational,
    b: Rational,
    d: i64,
}

impl TryFrom<QuadRepr> for QuadElem {
    type Error = ArithError;
    fn try_from(r: QuadRepr) -> Result<Self, ArithError> {
        QuadElem::new(r.a, r.b, r.d)
    }
}

pub(crate) fn valid_d(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let (_, sf) = squarefree_decompose(&BigInt::from(d));
    sf == BigInt::from(d)
}

impl QuadElem {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self, ArithError> {
        if !valid_d(d) {
            return Err(ArithError::BadField(d));
        }
        Ok(QuadElem { a, b, d })
    }

    /// Embeds a rational; `d` is trusted (callers hold a validated field).
    pub fn from_rational(a: Rational, d: i64) -> Self {
        QuadElem { a, b: Rational::zero(), d }
    }

    /// √d itself.
    pub fn sqrt_d(d: i64) -> Result<Self, ArithError> {
        QuadElem::new(Rational::zero(), Rational::one(), d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from(self.d) * &self.b * &self.b
    }

    pub fn trace(&self) -> Rational {
        Rational::from(2) * &self.a
    }

    fn check(&self, o: &Self) -> Result<(), ArithError> {
        if self.d != o.d {
            Err(ArithError::IncompatibleField(self.d, o.d))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        Ok(QuadElem { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        Ok(QuadElem { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        let d = Rational::from(self.d);
        Ok(QuadElem {
            a: &self.a * &o.a + d * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d,
        })
    }

    pub fn neg(&self) -> Self {
        QuadElem { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadElem { a: &c.a / &n, b: &c.b / &n, d: self.d })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadElem { a: &self.a * r, b: &self.b * r, d: self.d }
    }

    /// Complex approximation (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let s = (self.d.unsigned_abs() as f64).sqrt();
        if self.d > 0 {
            (self.a.to_f64() + self.b.to_f64() * s, 0.0)
        } else {
            (self.a.to_f64(), self.b.to_f64() * s)
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A value in ℚ or in some ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Rational(Rational),
    Quadratic(QuadElem),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

/// √r as an element of ℚ or ℚ(√d).
pub fn sqrt_scalar(r: &Rational) -> Result<Scalar, ArithError> {
    if r.is_zero() {
        return Ok(Scalar::Rational(Rational::zero()));
    }
    let nm = r.numer() * r.denom();
    let (s, k) = squarefree_decompose(&nm);
    let root = Rational::new(s, r.denom().clone());
    if k == BigInt::from(1) {
        return Ok(Scalar::Rational(root));
    }
    let d = i64::try_from(&k).map_err(|_| ArithError::Overflow(k.to_string()))?;
    Ok(Scalar::Quadratic(QuadElem { a: Rational::zero(), b: root, d }))
}
