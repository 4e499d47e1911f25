use serde::{Deserialize, Serialize};

use super::Genus2Error;
use crate::arith::{discriminant, sqrt_scalar, Rational, Scalar, UniPoly};

/// f = P² − Q³ with deg P ≤ 3, deg Q ≤ 2, deg f = 6 and f separable.
///
/// Such a pair is exactly a point of order 3 on the Jacobian of y² = f:
/// div(y + P) = 3D because (y + P)(P − y) = Q³, and D ~ 0 would force a
/// repeated root of f. Separability alone therefore certifies order 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompRepr")]
pub struct Decomposition {
    #[serde(rename = "P")]
    pub p: UniPoly<Rational>,
    #[serde(rename = "Q")]
    pub q: UniPoly<Rational>,
    pub f: UniPoly<Rational>,
}

#[derive(Deserialize)]
struct DecompRepr {
    #[serde(rename = "P")]
    p: UniPoly<Rational>,
    #[serde(rename = "Q")]
    q: UniPoly<Rational>,
    #[serde(default)]
    f: Option<UniPoly<Rational>>,
}

impl TryFrom<DecompRepr> for Decomposition {
    type Error = Genus2Error;
    fn try_from(r: DecompRepr) -> Result<Self, Genus2Error> {
        let d = verify_decomposition(&r.p, &r.q)?;
        if let Some(f) = r.f {
            if f != d.f {
                return Err(Genus2Error::Arith(crate::arith::ArithError::Parse(format!(
                    "supplied f = {f} differs from P² − Q³ = {}",
                    d.f
                ))));
            }
        }
        Ok(d)
    }
}

fn deg(p: &UniPoly<Rational>) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

/// Checks deg P ≤ 3, deg Q ≤ 2, and that f = P² − Q³ is a separable sextic.
pub fn verify_decomposition(p: &UniPoly<Rational>, q: &UniPoly<Rational>) -> Result<Decomposition, Genus2Error> {
    if deg(p) > 3 {
        return Err(Genus2Error::PDegree(deg(p) as usize));
    }
    if deg(q) > 2 {
        return Err(Genus2Error::QDegree(deg(q) as usize));
    }
    let f = p.mul(p).sub(&q.pow(3));
    if deg(&f) != 6 {
        return Err(Genus2Error::DegreeDrop(deg(&f)));
    }
    if discriminant(&f)?.is_zero() {
        return Err(Genus2Error::RepeatedRoots);
    }
    Ok(Decomposition { p: p.clone(), q: q.clone(), f })
}

impl Decomposition {
    pub fn marked_point(&self, x0: &Rational) -> Result<MarkedPoint, Genus2Error> {
        MarkedPoint::new(&self.f, x0)
    }
}

/// A non-Weierstrass point (x0, y0) of y² = f; y0 may be quadratic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedPoint {
    pub x0: Rational,
    pub y0: Scalar,
}

impl MarkedPoint {
    /// The point with x = x0 and y0 = +√f(x0).
    pub fn new(f: &UniPoly<Rational>, x0: &Rational) -> Result<Self, Genus2Error> {
        let v = f.eval(x0);
        if v.is_zero() {
            return Err(Genus2Error::SpecialPoint(x0.to_string()));
        }
        Ok(MarkedPoint { x0: x0.clone(), y0: sqrt_scalar(&v)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn marked_point_of_worked_example() {
        let d = verify_decomposition(&UniPoly::from_ints(&[0, 27, 54, 19]), &UniPoly::from_ints(&[-9, 0, 1])).unwrap();
        let m = d.marked_point(&qi(0)).unwrap();
        assert_eq!(m.y0, Scalar::Rational(qi(27)));
        let m = d.marked_point(&qi(1)).unwrap();
        // f(1) = 10512 = 12² · 73
        assert!(matches!(m.y0, Scalar::Quadratic(ref e) if e.d == 73 && e.b == qi(12)));
    }

    #[test]
    fn json_round_trip_rejects_inconsistent_f() {
        let d = verify_decomposition(&UniPoly::from_ints(&[1, 0, 0, 1]), &UniPoly::from_ints(&[0, 0, 1])).err();
        assert!(d.is_some(), "x^6 cancels");
        let ok = verify_decomposition(&UniPoly::from_ints(&[-1, 0, 0, 1]), &UniPoly::new(vec![qi(0), qi(0), q(-1, 1)])).unwrap();
        let s = serde_json::to_string(&ok).unwrap();
        let back: Decomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ok);
        let bad = s.replace("\"f\":[\"1\"", "\"f\":[\"2\"");
        assert!(serde_json::from_str::<Decomposition>(&bad).is_err());
    }
}
