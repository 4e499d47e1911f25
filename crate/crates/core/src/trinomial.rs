//! Trinomial curves xⁿ + a·x^r·y^s + b·yᵐ = 0: the substitution
//! u = xⁿ/yᵐ, v = x^r/y^(m−s) turns them into the line u + a·v + b = 0, and
//! the group of diagonal automorphisms (x, y) ↦ (θx, ηy) fixing u and v
//! decides how the integral points can be found.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrinomialError {
    #[error("coefficient {0} must be nonzero")]
    ZeroCoefficient(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrinomialEq {
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub m: u32,
    pub a: Rational,
    pub b: Rational,
}

impl TrinomialEq {
    pub fn new(n: u32, r: u32, s: u32, m: u32, a: Rational, b: Rational) -> Result<Self, TrinomialError> {
        let eq = TrinomialEq { n, r, s, m, a, b };
        eq.validate()?;
        Ok(eq)
    }

    pub fn validate(&self) -> Result<(), TrinomialError> {
        if self.a.is_zero() {
            return Err(TrinomialError::ZeroCoefficient("a"));
        }
        if self.b.is_zero() {
            return Err(TrinomialError::ZeroCoefficient("b"));
        }
        Ok(())
    }

    /// Rows (n, −m) and (r, −(m−s)): exponents of (x, y) in u and v.
    pub fn exponent_matrix(&self) -> [[i64; 2]; 2] {
        let (n, r, s, m) = (self.n as i64, self.r as i64, self.s as i64, self.m as i64);
        [[n, -m], [r, -(m - s)]]
    }

    /// Δ = |nm − rm − sn|.
    pub fn delta(&self) -> u64 {
        let [[a, b], [c, d]] = self.exponent_matrix();
        (a * d - b * c).unsigned_abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrinomialVerdict {
    /// Δ = 0: u and v are multiplicatively dependent and the curve is a
    /// union of translates of subtori.
    TorusTranslates,
    /// Δ ≠ 0: the curve is irreducible and the quotient by G is the line
    /// u + a·v + b = 0.
    IrreducibleReduced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrinomialClass {
    pub delta: u64,
    /// Invariant factors d₁ | d₂ of G ≅ ℤ/d₁ × ℤ/d₂, ones omitted; empty if Δ = 0.
    pub elementary_divisors: Vec<u64>,
    /// gcd(n, m, r, s) = 1; G is cyclic exactly then (for Δ ≠ 0).
    pub cyclic: bool,
    pub exponent_matrix: [[i64; 2]; 2],
    /// u = x^u[0]·y^u[1], v = x^v[0]·y^v[1].
    pub u: [i64; 2],
    pub v: [i64; 2],
    pub relation: String,
    pub verdict: TrinomialVerdict,
    /// Infinitely many integral points are possible only when G is cyclic.
    pub may_have_infinitely_many: bool,
}

/// Invariant factors (d₁, d₂) of an integer 2×2 matrix, d₁ | d₂: d₁ is the
/// gcd of the entries and d₁·d₂ = |det|.
pub fn smith_normal_form_2x2(m: [[i64; 2]; 2]) -> (BigInt, BigInt) {
    let e: Vec<BigInt> = m.iter().flatten().map(|&v| BigInt::from(v)).collect();
    let d1 = e.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    let det = (&e[0] * &e[3] - &e[1] * &e[2]).abs();
    let d2 = if d1.is_zero() { BigInt::zero() } else { det / &d1 };
    (d1, d2)
}

pub fn classify(eq: &TrinomialEq) -> TrinomialClass {
    let mat = eq.exponent_matrix();
    let delta = eq.delta();
    let g = [eq.n, eq.m, eq.r, eq.s].iter().fold(0u32, |g, v| g.gcd(v));
    let (verdict, divisors) = if delta == 0 {
        (TrinomialVerdict::TorusTranslates, vec![])
    } else {
        let (d1, d2) = smith_normal_form_2x2(mat);
        let divisors = [d1, d2].iter().map(|d| d.to_u64().expect("bounded by Δ")).filter(|&d| d > 1).collect();
        (TrinomialVerdict::IrreducibleReduced, divisors)
    };
    TrinomialClass {
        delta,
        elementary_divisors: divisors,
        cyclic: g == 1,
        exponent_matrix: mat,
        u: mat[0],
        v: mat[1],
        relation: format!("u + ({})·v + ({}) = 0", eq.a, eq.b),
        verdict,
        may_have_infinitely_many: g == 1,
    }
}

/// Checks yᵐ·(u + a·v + b) = xⁿ + a·x^r·y^s + b·yᵐ on Laurent monomials.
pub fn substitution_check(eq: &TrinomialEq) -> bool {
    type Laurent = BTreeMap<[i64; 2], Rational>;
    fn push(p: &mut Laurent, e: [i64; 2], c: Rational) {
        let v = p.entry(e).or_insert_with(Rational::zero);
        *v = &*v + &c;
        if v.is_zero() {
            p.remove(&e);
        }
    }
    let c = classify(eq);
    let m = eq.m as i64;
    let mut lhs = Laurent::new();
    for (e, coef) in [(c.u, Rational::one()), (c.v, eq.a.clone()), ([0, 0], eq.b.clone())] {
        push(&mut lhs, [e[0], e[1] + m], coef);
    }
    let mut rhs = Laurent::new();
    push(&mut rhs, [eq.n as i64, 0], Rational::one());
    push(&mut rhs, [eq.r as i64, eq.s as i64], eq.a.clone());
    push(&mut rhs, [0, m], eq.b.clone());
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    fn eq(n: u32, r: u32, s: u32, m: u32) -> TrinomialEq {
        TrinomialEq::new(n, r, s, m, qi(-1), qi(-1)).unwrap()
    }

    #[test]
    fn order_five_automorphism() {
        let c = classify(&eq(4, 1, 1, 3));
        assert_eq!(c.delta, 5);
        assert_eq!(c.elementary_divisors, vec![5]);
        assert!(c.cyclic);
        assert_eq!(c.verdict, TrinomialVerdict::IrreducibleReduced);
    }

    #[test]
    fn dependent_exponents() {
        let c = classify(&eq(2, 1, 1, 2));
        assert_eq!(c.delta, 0);
        assert_eq!(c.verdict, TrinomialVerdict::TorusTranslates);
    }

    #[test]
    fn non_cyclic_group() {
        let c = classify(&eq(6, 2, 2, 4));
        assert_eq!(c.delta, 4);
        assert_eq!(c.elementary_divisors, vec![2, 2]);
        assert!(!c.cyclic);
    }

    #[test]
    fn zero_coefficient_rejected() {
        assert!(TrinomialEq::new(4, 1, 1, 3, qi(0), qi(1)).is_err());
    }
}
