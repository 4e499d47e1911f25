use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{verify_decomposition, Decomposition, Genus2Error};
use crate::arith::{discriminant, sqrt_scalar, Rational, Scalar, UniPoly};

/// y² = f(x) with f separable of degree 5 or 6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SexticModel {
    pub f: UniPoly<Rational>,
}

impl SexticModel {
    pub fn new(f: UniPoly<Rational>) -> Result<Self, Genus2Error> {
        match f.degree() {
            Some(5) | Some(6) => {}
            d => return Err(Genus2Error::ModelDegree(d.map_or(-1, |d| d as i64))),
        }
        if discriminant(&f)?.is_zero() {
            return Err(Genus2Error::NotSeparable);
        }
        Ok(SexticModel { f })
    }
}

/// Coefficients of the nodal quartic
/// a9 z² + a6 z³ + z⁴ + a8 wz + wz² + a7 w² + w³ = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticNormalForm {
    pub a9: Rational,
    pub a6: Rational,
    pub a8: Rational,
    pub a7: Rational,
}

/// Sextic coefficients of the double cover of the line pencil z = m·w.
pub fn quartic_sextic_coeffs(q: &QuarticNormalForm) -> UniPoly<Rational> {
    let r = Rational::from;
    UniPoly::new(vec![
        r(1),
        r(0),
        r(2),
        r(2) * &q.a6,
        r(1) - r(4) * &q.a7,
        r(2) * &q.a6 - r(4) * &q.a8,
        &q.a6 * &q.a6 - r(4) * &q.a9,
    ])
}

/// z² = (a6² − 4a9)m⁶ + (2a6 − 4a8)m⁵ + (1 − 4a7)m⁴ + 2a6 m³ + 2m² + 1.
pub fn quartic_to_sextic(q: &QuarticNormalForm) -> Result<SexticModel, Genus2Error> {
    let f = quartic_sextic_coeffs(q);
    if f.degree().unwrap_or(0) < 5 || discriminant(&f)?.is_zero() {
        return Err(Genus2Error::NotSeparable);
    }
    SexticModel::new(f)
}

/// μ² = aλ⁶ + λ⁵ + bλ⁴ − 1, the hyperelliptic model of y⁴ + ay² + xy + x³ + bx² = 0.
pub fn intro_family_sextic(a: &Rational, b: &Rational) -> Result<SexticModel, Genus2Error> {
    let f = UniPoly::new(vec![
        Rational::from(-1),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        b.clone(),
        Rational::one(),
        a.clone(),
    ]);
    SexticModel::new(f)
}

/// μ² = aλ⁶ − λ⁵ + bλ⁴ − 1, the same construction for the sign variant
/// y⁴ + ay² − xy − x³ + bx² = 0.
pub fn body_family_sextic(a: &Rational, b: &Rational) -> Result<SexticModel, Genus2Error> {
    let f = UniPoly::new(vec![
        Rational::from(-1),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        b.clone(),
        Rational::from(-1),
        a.clone(),
    ]);
    SexticModel::new(f)
}

/// Exact square root of a polynomial over ℚ, if it is a square.
pub fn poly_sqrt(f: &UniPoly<Rational>) -> Option<UniPoly<Rational>> {
    let n = f.degree()?;
    if n % 2 == 1 {
        return None;
    }
    let lead = match sqrt_scalar(f.lc()?).ok()? {
        Scalar::Rational(r) => r,
        Scalar::Quadratic(_) => return None,
    };
    let m = n / 2;
    // Solve for coefficients from the top down.
    let mut g = vec![Rational::zero(); m + 1];
    g[m] = lead;
    let two_lead = Rational::from(2) * &g[m];
    for k in (0..m).rev() {
        // [x^(m+k)] g² = 2 g_m g_k + Σ_{k<i<m} g_i g_(m+k−i)
        let s: Rational = (k + 1..m).map(|i| &g[i] * &g[m + k - i]).sum();
        g[k] = (&f.coeffs()[m + k] - s) / &two_lead;
    }
    let g = UniPoly::new(g);
    (g.mul(&g) == *f).then_some(g)
}

/// Searches integral Q = q2x² + q1x + q0 with |qi| ≤ height such that
/// f + Q³ is the square of a cubic P; stops at the deadline.
pub fn search_decomposition(f: &UniPoly<Rational>, height: i64, timeout: Duration) -> Option<Decomposition> {
    let start = Instant::now();
    let a6 = f.coeffs().get(6)?.clone();
    let mut order: Vec<i64> = (0..=height).flat_map(|h| if h == 0 { vec![0] } else { vec![h, -h] }).collect();
    order.dedup();
    for &q2 in &order {
        // leading coefficient of P² must be a6 + q2³
        let lead = &a6 + Rational::from(q2).pow(3);
        if !matches!(sqrt_scalar(&lead), Ok(Scalar::Rational(_))) {
            continue;
        }
        for &q1 in &order {
            if start.elapsed() > timeout {
                return None;
            }
            for &q0 in &order {
                let q = UniPoly::from_ints(&[q0, q1, q2]);
                if let Some(p) = poly_sqrt(&f.add(&q.pow(3))) {
                    if let Ok(d) = verify_decomposition(&p, &q) {
                        return Some(d);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn sqrt_recovers_squares() {
        let g = UniPoly::from_ints(&[4, -3, 0, 2]);
        assert_eq!(poly_sqrt(&g.mul(&g)).map(|h| if h.lc().unwrap().is_negative() { h.neg() } else { h }), Some(g.clone()));
        assert_eq!(poly_sqrt(&g.mul(&g).add(&UniPoly::from_ints(&[1]))), None);
    }

    #[test]
    fn search_finds_known_decomposition() {
        let p = UniPoly::from_ints(&[10, 0, 0, 2]);
        let q = UniPoly::from_ints(&[7, 0, 1]);
        let f = p.mul(&p).sub(&q.pow(3));
        let d = search_decomposition(&f, 8, Duration::from_secs(20)).unwrap();
        assert_eq!(d.f, f);
    }

    #[test]
    fn degenerate_quartic_rejected() {
        let z = QuarticNormalForm { a9: qi(0), a6: qi(0), a8: qi(0), a7: qi(0) };
        assert!(quartic_to_sextic(&z).is_err());
    }
}
