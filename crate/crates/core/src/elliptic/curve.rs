use serde::{Deserialize, Serialize};

use super::EllipticError;
use crate::arith::{Field, Rational};

/// y² + a1xy + a3y = x³ + a2x² + a4x + a6 over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CurveRepr")]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
    pub discriminant: Rational,
    pub j: Rational,
}

#[derive(Deserialize)]
struct CurveRepr {
    a1: Rational,
    a2: Rational,
    a3: Rational,
    a4: Rational,
    a6: Rational,
}

impl TryFrom<CurveRepr> for WeierstrassCurve {
    type Error = EllipticError;
    fn try_from(r: CurveRepr) -> Result<Self, EllipticError> {
        WeierstrassCurve::new([r.a1, r.a2, r.a3, r.a4, r.a6])
    }
}

/// b2, b4, b6, b8, c4, c6, Δ of a coefficient vector.
fn invariants(a: &[Rational; 5]) -> [Rational; 7] {
    let [a1, a2, a3, a4, a6] = a;
    let r = Rational::from;
    let b2 = a1 * a1 + r(4) * a2;
    let b4 = r(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + r(4) * a6;
    let b8 = a1 * a1 * a6 + r(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - r(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + r(36) * &b2 * &b4 - r(216) * &b6;
    let disc = -(&b2 * &b2 * &b8) - r(8) * &b4 * &b4 * &b4 - r(27) * &b6 * &b6 + r(9) * &b2 * &b4 * &b6;
    [b2, b4, b6, b8, c4, c6, disc]
}

impl WeierstrassCurve {
    pub fn new(a: [Rational; 5]) -> Result<Self, EllipticError> {
        let inv = invariants(&a);
        let disc = inv[6].clone();
        if disc.is_zero() {
            return Err(EllipticError::Singular);
        }
        let j = inv[4].pow(3) / &disc;
        let [a1, a2, a3, a4, a6] = a;
        Ok(WeierstrassCurve { a1, a2, a3, a4, a6, discriminant: disc, j })
    }

    /// y² = x³ + ax + b.
    pub fn short(a: Rational, b: Rational) -> Result<Self, EllipticError> {
        WeierstrassCurve::new([Rational::zero(), Rational::zero(), Rational::zero(), a, b])
    }

    pub fn coeffs(&self) -> [Rational; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    /// [b2, b4, b6, b8].
    pub fn b_invariants(&self) -> [Rational; 4] {
        let inv = invariants(&self.coeffs());
        [inv[0].clone(), inv[1].clone(), inv[2].clone(), inv[3].clone()]
    }

    /// [c4, c6].
    pub fn c_invariants(&self) -> [Rational; 2] {
        let inv = invariants(&self.coeffs());
        [inv[4].clone(), inv[5].clone()]
    }

    pub fn j_invariant(&self) -> Rational {
        self.j.clone()
    }

    fn lift<F: Field>(&self, like: &F) -> [F; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6].map(|c| like.from_rational_like(c))
    }

    pub fn contains<F: Field>(&self, p: &EPoint<F>) -> bool {
        match p {
            EPoint::Infinity => true,
            EPoint::Affine { x, y } => {
                let [a1, a2, a3, a4, a6] = self.lift(x);
                let lhs = y.fmul(y).fadd(&a1.fmul(x).fmul(y)).fadd(&a3.fmul(y));
                let rhs = x.fmul(x).fmul(x).fadd(&a2.fmul(x).fmul(x)).fadd(&a4.fmul(x)).fadd(&a6);
                lhs == rhs
            }
        }
    }

    pub fn neg<F: Field>(&self, p: &EPoint<F>) -> EPoint<F> {
        match p {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine { x, y } => {
                let [a1, _, a3, _, _] = self.lift(x);
                EPoint::Affine { x: x.clone(), y: y.fneg().fsub(&a1.fmul(x)).fsub(&a3) }
            }
        }
    }

    /// Chord–tangent addition.
    pub fn add<F: Field>(&self, p: &EPoint<F>, q: &EPoint<F>) -> Result<EPoint<F>, EllipticError> {
        let (x1, y1, x2, y2) = match (p, q) {
            (EPoint::Infinity, _) => return Ok(q.clone()),
            (_, EPoint::Infinity) => return Ok(p.clone()),
            (EPoint::Affine { x: x1, y: y1 }, EPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        if !x1.compatible(x2) {
            return Err(EllipticError::FieldMismatch);
        }
        let [a1, a2, a3, a4, a6] = self.lift(x1);
        let (lambda, nu) = if x1 == x2 {
            let den = y1.fadd(y2).fadd(&a1.fmul(x2)).fadd(&a3);
            if den.is_zero() {
                return Ok(EPoint::Infinity);
            }
            let three = x1.from_rational_like(&Rational::from(3));
            let two = x1.from_rational_like(&Rational::from(2));
            let num_l = three.fmul(x1).fmul(x1).fadd(&two.fmul(&a2).fmul(x1)).fadd(&a4).fsub(&a1.fmul(y1));
            let num_n = x1.fmul(x1).fmul(x1).fneg().fadd(&a4.fmul(x1)).fadd(&two.fmul(&a6)).fsub(&a3.fmul(y1));
            let inv = den.finv().unwrap();
            (num_l.fmul(&inv), num_n.fmul(&inv))
        } else {
            let inv = x2.fsub(x1).finv().unwrap();
            (y2.fsub(y1).fmul(&inv), y1.fmul(x2).fsub(&y2.fmul(x1)).fmul(&inv))
        };
        let x3 = lambda.fmul(&lambda).fadd(&a1.fmul(&lambda)).fsub(&a2).fsub(x1).fsub(x2);
        let y3 = lambda.fadd(&a1).fmul(&x3).fneg().fsub(&nu).fsub(&a3);
        Ok(EPoint::Affine { x: x3, y: y3 })
    }

    pub fn sub<F: Field>(&self, p: &EPoint<F>, q: &EPoint<F>) -> Result<EPoint<F>, EllipticError> {
        self.add(p, &self.neg(q))
    }

    /// n·P by double-and-add.
    pub fn mul<F: Field>(&self, n: i64, p: &EPoint<F>) -> Result<EPoint<F>, EllipticError> {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = EPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.add(&base, &base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Model scaled by u: (x, y) ↦ (u²x, u³y), a_i ↦ u^i a_i.
    pub fn scaled(&self, u: &Rational) -> WeierstrassCurve {
        WeierstrassCurve::new([
            u * &self.a1,
            u.pow(2) * &self.a2,
            u.pow(3) * &self.a3,
            u.pow(4) * &self.a4,
            u.pow(6) * &self.a6,
        ])
        .expect("scaling preserves nonsingularity")
    }

    /// A positive integer u (the lcm of the coefficient denominators)
    /// making the scaled model integral.
    pub fn integral_scale(&self) -> Rational {
        use num_integer::Integer;
        let u = self.coeffs().iter().fold(num_bigint::BigInt::from(1), |u, c| u.lcm(c.denom()));
        Rational::from(u)
    }
}

impl<F: Field> EPoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EPoint::Infinity)
    }
}

/// Point on a Weierstrass curve with coordinates in ℚ or ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de>"))]
pub enum EPoint<F: Field> {
    Infinity,
    Affine { x: F, y: F },
}

/// Scales a point to the model returned by [`WeierstrassCurve::scaled`].
pub fn scale_point<F: Field>(p: &EPoint<F>, u: &Rational) -> EPoint<F> {
    match p {
        EPoint::Infinity => EPoint::Infinity,
        EPoint::Affine { x, y } => EPoint::Affine {
            x: x.fmul(&x.from_rational_like(&u.pow(2))),
            y: y.fmul(&y.from_rational_like(&u.pow(3))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    fn pt(x: i64, y: i64) -> EPoint<Rational> {
        EPoint::Affine { x: qi(x), y: qi(y) }
    }

    #[test]
    fn two_torsion_chord() {
        let e = WeierstrassCurve::short(qi(-1), qi(0)).unwrap();
        assert_eq!(e.add(&pt(0, 0), &pt(1, 0)).unwrap(), pt(-1, 0));
        assert_eq!(e.mul(2, &pt(0, 0)).unwrap(), EPoint::Infinity);
        assert_eq!(e.add(&pt(0, 0), &EPoint::Infinity).unwrap(), pt(0, 0));
    }

    #[test]
    fn classical_j_values() {
        assert_eq!(WeierstrassCurve::short(qi(0), qi(1)).unwrap().j, qi(0));
        assert_eq!(WeierstrassCurve::short(qi(1), qi(0)).unwrap().j, qi(1728));
        assert!(WeierstrassCurve::short(qi(0), qi(0)).is_err());
    }

    #[test]
    fn integral_scaling() {
        let e = WeierstrassCurve::new([Rational::new(1, 2), qi(0), Rational::new(1, 3), qi(0), Rational::new(5, 12)]).unwrap();
        let u = e.integral_scale();
        let s = e.scaled(&u);
        assert!(s.coeffs().iter().all(|c| c.is_integer()));
        assert_eq!(s.j, e.j);
    }
}
