use std::fmt::{Debug, Display};

use super::{QuadElem, Rational};

/// Coefficient field for polynomials and curve points.
///
/// Elements of ℚ(√d) carry their `d`, so constants are built "like" an
/// existing element. Mixing fields is checked by callers through
/// [`Field::compatible`]; the arithmetic methods assume compatibility.
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    fn finv(&self) -> Option<Self>;
    fn compatible(&self, o: &Self) -> bool;
    /// `Some(d)` for quadratic elements, `None` for rationals.
    fn field_d(&self) -> Option<i64>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn fdiv(&self, o: &Self) -> Option<Self> {
        o.finv().map(|i| self.fmul(&i))
    }

    fn fpow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.fmul(&base);
            }
            base = base.fmul(&base);
            e >>= 1;
        }
        acc
    }

    /// Determinant of a square matrix over this field.
    fn det(a: Vec<Vec<Self>>, like: &Self) -> Self {
        super::det_bareiss(a, like)
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn compatible(&self, _o: &Self) -> bool {
        true
    }
    fn field_d(&self) -> Option<i64> {
        None
    }
    fn det(a: Vec<Vec<Self>>, _like: &Self) -> Self {
        super::resultant::det_rational(a)
    }
}

impl Field for QuadElem {
    fn zero_like(&self) -> Self {
        QuadElem::from_rational(Rational::zero(), self.d)
    }
    fn one_like(&self) -> Self {
        QuadElem::from_rational(Rational::one(), self.d)
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        QuadElem::from_rational(q.clone(), self.d)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn fadd(&self, o: &Self) -> Self {
        self.checked_add(o).expect("quadratic field mismatch")
    }
    fn fsub(&self, o: &Self) -> Self {
        self.checked_sub(o).expect("quadratic field mismatch")
    }
    fn fmul(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("quadratic field mismatch")
    }
    fn fneg(&self) -> Self {
        self.neg()
    }
    fn finv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn compatible(&self, o: &Self) -> bool {
        self.d == o.d
    }
    fn field_d(&self) -> Option<i64> {
        Some(self.d)
    }
}
