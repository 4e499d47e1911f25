use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{EPoint, WeierstrassCurve};
use crate::arith::{Field, QuadElem, Rational};

/// Largest order of a rational torsion point over ℚ.
pub const RATIONAL_TORSION_BOUND: u32 = 12;
/// Default search bound over quadratic fields (all orders there are ≤ 18).
pub const QUADRATIC_TORSION_BOUND: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TorsionVerdict {
    Order { n: u32 },
    Infinite,
    NotTorsionUpTo { bound: u32 },
}

impl TorsionVerdict {
    pub fn order(&self) -> Option<u32> {
        match self {
            TorsionVerdict::Order { n } => Some(*n),
            _ => None,
        }
    }

    pub fn is_torsion(&self) -> bool {
        self.order().is_some()
    }
}

fn order_up_to<F: Field>(e: &WeierstrassCurve, p: &EPoint<F>, bound: u32) -> Option<u32> {
    let mut q = p.clone();
    for n in 1..=bound {
        if q.is_infinity() {
            return Some(n);
        }
        q = e.add(&q, p).ok()?;
    }
    None
}

/// Exact order of a rational point, or Infinite (order > 12 is impossible over ℚ).
pub fn torsion_order_rational(e: &WeierstrassCurve, p: &EPoint<Rational>) -> TorsionVerdict {
    match order_up_to(e, p, RATIONAL_TORSION_BOUND) {
        Some(n) => TorsionVerdict::Order { n },
        None => TorsionVerdict::Infinite,
    }
}

/// Minimal n ≤ bound with nP = O, for P over ℚ(√d).
pub fn torsion_order_quadratic(e: &WeierstrassCurve, p: &EPoint<QuadElem>, bound: u32) -> TorsionVerdict {
    match order_up_to(e, p, bound) {
        Some(n) => TorsionVerdict::Order { n },
        None => TorsionVerdict::NotTorsionUpTo { bound },
    }
}

/// Integrality check on the short model y² = x³ − 27c4·x − 54c6 of an
/// integral model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NagellLutzAudit {
    /// (A, B) of the integral short model.
    pub short_model: [Rational; 2],
    /// Multiples kP (k ≥ 1) examined, in order, on the short model.
    pub multiples_checked: u32,
    /// First multiple with non-integral coordinates; proves infinite order.
    pub first_non_integral: Option<u32>,
    /// Every finite multiple is integral with y = 0 or y² | disc.
    pub torsion_conditions_hold: bool,
}

/// Maps a long-model point to y² = x³ − 27c4·x − 54c6.
fn to_short(e: &WeierstrassCurve, p: &EPoint<Rational>) -> EPoint<Rational> {
    match p {
        EPoint::Infinity => EPoint::Infinity,
        EPoint::Affine { x, y } => {
            let b2 = &e.b_invariants()[0];
            EPoint::Affine {
                x: Rational::from(36) * x + Rational::from(3) * b2,
                y: Rational::from(108) * (Rational::from(2) * y + &e.a1 * x + &e.a3),
            }
        }
    }
}

/// Audits the multiples P, 2P, … up to the verdict's order (or `bound`
/// for non-torsion) against the Nagell–Lutz conditions.
pub fn nagell_lutz_audit(e: &WeierstrassCurve, p: &EPoint<Rational>, verdict: TorsionVerdict, bound: u32) -> NagellLutzAudit {
    let u = e.integral_scale();
    let ei = e.scaled(&u);
    let [c4, c6] = ei.c_invariants();
    let a = Rational::from(-27) * &c4;
    let b = Rational::from(-54) * &c6;
    let short = WeierstrassCurve::short(a.clone(), b.clone()).expect("isomorphic model");
    let disc = short.discriminant.to_integer().expect("integral model");
    let g = to_short(&ei, &super::curve::scale_point(p, &u));
    let limit = verdict.order().map_or(bound, |n| n.saturating_sub(1));
    let mut q = g.clone();
    let mut first_non_integral = None;
    let mut ok = true;
    for k in 1..=limit {
        if let EPoint::Affine { x, y } = &q {
            if !(x.is_integer() && y.is_integer()) {
                first_non_integral.get_or_insert(k);
                ok = false;
            } else {
                let yi = y.to_integer().unwrap();
                if !yi.is_zero() && !(&disc % (&yi * &yi)).is_zero() {
                    ok = false;
                }
            }
        }
        q = short.add(&q, &g).expect("rational points");
    }
    NagellLutzAudit { short_model: [a, b], multiples_checked: limit, first_non_integral, torsion_conditions_hold: ok }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qi, QuadElem};

    #[test]
    fn two_torsion_on_congruent_curve() {
        let e = WeierstrassCurve::short(qi(-1), qi(0)).unwrap();
        let p = EPoint::Affine { x: qi(0), y: qi(0) };
        let v = torsion_order_rational(&e, &p);
        assert_eq!(v, TorsionVerdict::Order { n: 2 });
        assert!(nagell_lutz_audit(&e, &p, v, 12).torsion_conditions_hold);
    }

    #[test]
    fn point_of_infinite_order_fails_integrality() {
        // y² = x³ − 2, P = (3, 5): 2P has non-integral x
        let e = WeierstrassCurve::short(qi(0), qi(-2)).unwrap();
        let p = EPoint::Affine { x: qi(3), y: qi(5) };
        let v = torsion_order_rational(&e, &p);
        assert_eq!(v, TorsionVerdict::Infinite);
        let audit = nagell_lutz_audit(&e, &p, v, 12);
        assert_eq!(audit.first_non_integral, Some(2));
    }

    #[test]
    fn order_three_over_quadratic_field() {
        // y² = x³ + 16 has (0, 4) of order 3; lift to ℚ(√−3).
        let e = WeierstrassCurve::short(qi(0), qi(16)).unwrap();
        let p = EPoint::Affine { x: QuadElem::from_rational(qi(0), -3), y: QuadElem::from_rational(qi(4), -3) };
        assert_eq!(torsion_order_quadratic(&e, &p, 24), TorsionVerdict::Order { n: 3 });
    }
}
