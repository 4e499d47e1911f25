//! The universal genus-2 curve with two independent 3-torsion points: three
//! decompositions f = Gᵢ² + λᵢHᵢ³ of one sextic over ℚ(r, s, t).

use serde::{Deserialize, Serialize};

use super::{quotient_ternary, FamilyError};
use crate::arith::{MultiPoly, Rational};
use crate::elliptic::aronhold_j;

/// Gᵢ = g[i]/g_den[i], λᵢ = lambda_num[i]/lambda_den[i]; all polynomials
/// in (r, s, t, x), the denominators free of x.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalFamily {
    pub g: [MultiPoly; 3],
    pub g_den: [MultiPoly; 3],
    pub h: [MultiPoly; 3],
    pub lambda_num: [MultiPoly; 3],
    pub lambda_den: [MultiPoly; 3],
}

fn poly(terms: &[(i64, [u32; 4])]) -> MultiPoly {
    let mut p = MultiPoly::zero(4);
    for (c, e) in terms {
        p.add_term(e.to_vec(), Rational::from(*c));
    }
    p
}

impl Default for UniversalFamily {
    fn default() -> Self {
        let one = poly(&[(1, [0, 0, 0, 0])]);
        // exponents of (r, s, t, x)
        let g1 = poly(&[
            (1, [0, 1, 0, 3]),
            (-1, [0, 1, 1, 3]),
            (-1, [0, 0, 0, 3]),
            (3, [1, 1, 0, 2]),
            (-3, [0, 1, 1, 2]),
            (3, [2, 1, 0, 1]),
            (-3, [1, 1, 1, 1]),
            (-1, [0, 1, 2, 0]),
            (1, [3, 1, 0, 0]),
            (1, [0, 0, 1, 0]),
        ]);
        let g2 = poly(&[
            (1, [0, 1, 0, 3]),
            (-1, [0, 1, 1, 3]),
            (1, [0, 0, 0, 3]),
            (3, [1, 1, 0, 2]),
            (-3, [0, 1, 1, 2]),
            (3, [2, 1, 0, 1]),
            (-3, [1, 1, 1, 1]),
            (-1, [0, 1, 2, 0]),
            (1, [3, 1, 0, 0]),
            (-1, [0, 0, 1, 0]),
        ]);
        let g3 = poly(&[
            (1, [0, 2, 2, 3]),
            (-1, [0, 2, 1, 3]),
            (2, [0, 1, 1, 3]),
            (1, [0, 1, 0, 3]),
            (1, [0, 0, 0, 3]),
            (3, [0, 2, 2, 2]),
            (-3, [1, 2, 1, 2]),
            (3, [0, 1, 1, 2]),
            (3, [1, 1, 0, 2]),
            (3, [1, 2, 2, 1]),
            (-3, [2, 2, 1, 1]),
            (3, [1, 1, 1, 1]),
            (3, [2, 1, 0, 1]),
            (1, [0, 2, 3, 0]),
            (-1, [3, 2, 1, 0]),
            (2, [0, 1, 2, 0]),
            (1, [3, 1, 0, 0]),
            (1, [0, 0, 1, 0]),
        ]);
        let st1 = poly(&[(1, [0, 1, 1, 0]), (1, [0, 0, 0, 0])]);
        let h1 = poly(&[(1, [0, 0, 0, 2]), (1, [1, 0, 0, 1]), (1, [0, 0, 1, 0])]);
        let h2 = poly(&[(1, [0, 0, 0, 2]), (1, [0, 0, 0, 1]), (1, [1, 0, 0, 0])]);
        let h3 = poly(&[
            (1, [0, 1, 0, 2]),
            (2, [1, 1, 0, 1]),
            (-1, [0, 1, 1, 1]),
            (-1, [0, 0, 0, 1]),
            (1, [2, 1, 0, 0]),
        ]);
        UniversalFamily {
            g: [g1, g2, g3],
            g_den: [one.clone(), one.clone(), st1.clone()],
            h: [h1, h2, h3],
            lambda_num: [poly(&[(4, [0, 1, 0, 0])]), poly(&[(4, [0, 1, 1, 0])]), poly(&[(4, [0, 0, 1, 0])])],
            lambda_den: [one.clone(), one, st1.pow(2)],
        }
    }
}

impl UniversalFamily {
    /// (Aᵢ, Bᵢ) with Gᵢ² + λᵢHᵢ³ = Aᵢ/Bᵢ and Bᵢ = g_denᵢ²·lambda_denᵢ.
    fn cleared(&self, i: usize) -> (MultiPoly, MultiPoly) {
        let gd2 = self.g_den[i].pow(2);
        let a = self.g[i].pow(2).mul(&self.lambda_den[i]).add(&self.lambda_num[i].mul(&gd2).mul(&self.h[i].pow(3)));
        (a, gd2.mul(&self.lambda_den[i]))
    }

    /// f = G₁² + λ₁H₁³ as a polynomial in (r, s, t, x), valid when B₁ = 1.
    pub fn sextic(&self) -> (MultiPoly, MultiPoly) {
        self.cleared(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalCheck {
    pub pass: bool,
    /// Pairs (i, j), 1-based, with Gᵢ² + λᵢHᵢ³ ≠ Gⱼ² + λⱼHⱼ³.
    pub mismatches: Vec<(usize, usize)>,
    /// The multiplier Bᵢ cleared from each side.
    pub denominators: Vec<String>,
}

/// Checks Gᵢ² + λᵢHᵢ³ = Gⱼ² + λⱼHⱼ³ for all pairs, exactly, by comparing
/// Aᵢ·Bⱼ with Aⱼ·Bᵢ as polynomials in (r, s, t, x).
pub fn universal_family_check(u: &UniversalFamily) -> UniversalCheck {
    let sides: Vec<_> = (0..3).map(|i| u.cleared(i)).collect();
    let mut mismatches = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let (ai, bi) = &sides[i];
            let (aj, bj) = &sides[j];
            if ai.mul(bj) != aj.mul(bi) {
                mismatches.push((i + 1, j + 1));
            }
        }
    }
    UniversalCheck { pass: mismatches.is_empty(), mismatches, denominators: sides.iter().map(|(_, b)| b.to_string()).collect() }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobianProbe {
    pub sample: [Rational; 3],
    pub step: f64,
    /// j(E₁), j(E₂), j(E₃) at the sample.
    pub j: [f64; 3],
    /// ∂jᵢ/∂(r, s, t).
    pub jacobian: [[f64; 3]; 3],
    pub determinant: f64,
    /// Determinant recomputed with step/2.
    pub determinant_half_step: f64,
    pub error_estimate: f64,
    /// |det| exceeds ten times the error estimate.
    pub significant: bool,
}

fn coeffs_f64<const N: usize>(m: &MultiPoly, at: &[f64; 3]) -> [f64; N] {
    let parts = m.coeffs_in(3);
    let pt = [at[0], at[1], at[2], 0.0];
    std::array::from_fn(|k| parts.get(k).map_or(0.0, |c| c.eval_f64(&pt)))
}

/// j-invariants of the three elliptic quotients, with Qᵢ = cᵢHᵢ and cᵢ
/// the real cube root of −λᵢ.
pub fn universal_j(u: &UniversalFamily, at: &[f64; 3]) -> Result<[f64; 3], FamilyError> {
    let pt = [at[0], at[1], at[2], 0.0];
    let mut out = [0.0; 3];
    for i in 0..3 {
        let den = u.g_den[i].eval_f64(&pt);
        let lambda = u.lambda_num[i].eval_f64(&pt) / u.lambda_den[i].eval_f64(&pt);
        let c = (-lambda).cbrt();
        let p = coeffs_f64::<4>(&u.g[i], at).map(|v| v / den);
        let q = coeffs_f64::<3>(&u.h[i], at).map(|v| c * v);
        let j = aronhold_j(&quotient_ternary(p, q)).map_err(|e| FamilyError::Unstable(format!("j{}: {e}", i + 1)))?;
        if !j.re.is_finite() {
            return Err(FamilyError::Unstable(format!("j{} is not finite", i + 1)));
        }
        out[i] = j.re;
    }
    Ok(out)
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn jacobian(u: &UniversalFamily, at: &[f64; 3], h: f64) -> Result<[[f64; 3]; 3], FamilyError> {
    let mut m = [[0.0; 3]; 3];
    for k in 0..3 {
        let (mut plus, mut minus) = (*at, *at);
        plus[k] += h;
        minus[k] -= h;
        let (jp, jm) = (universal_j(u, &plus)?, universal_j(u, &minus)?);
        for i in 0..3 {
            m[i][k] = (jp[i] - jm[i]) / (2.0 * h);
        }
    }
    Ok(m)
}

/// Central-difference Jacobian determinant of (r, s, t) ↦ (j₁, j₂, j₃),
/// with the change under step halving as the error estimate.
pub fn jacobian_rank_probe(u: &UniversalFamily, sample: &[Rational; 3], h: f64) -> Result<JacobianProbe, FamilyError> {
    let [r, s, t] = sample;
    let st1 = s * t + Rational::one();
    if s.is_zero() || t.is_zero() || st1.is_zero() {
        return Err(FamilyError::Pole(format!("(r, s, t) = ({r}, {s}, {t}) needs s, t, st + 1 nonzero")));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(FamilyError::Unstable(format!("step {h} must be positive")));
    }
    let at = sample.clone().map(|v| v.to_f64());
    let j = universal_j(u, &at)?;
    let m = jacobian(u, &at, h)?;
    let det = det3(&m);
    let det_half = det3(&jacobian(u, &at, h / 2.0)?);
    let err = (det - det_half).abs();
    if !det.is_finite() || !det_half.is_finite() {
        return Err(FamilyError::Unstable("non-finite determinant".into()));
    }
    Ok(JacobianProbe {
        sample: sample.clone(),
        step: h,
        j,
        jacobian: m,
        determinant: det,
        determinant_half_step: det_half,
        error_estimate: err,
        significant: det.abs() > 10.0 * err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn three_decompositions_agree() {
        let c = universal_family_check(&UniversalFamily::default());
        assert!(c.pass, "{:?}", c.mismatches);
    }

    #[test]
    fn mutated_coefficient_is_detected() {
        let mut u = UniversalFamily::default();
        u.g[0].add_term(vec![1, 1, 0, 2], Rational::one());
        let c = universal_family_check(&u);
        assert!(!c.pass);
        assert_eq!(c.mismatches, vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn pole_is_rejected() {
        let u = UniversalFamily::default();
        assert!(matches!(jacobian_rank_probe(&u, &[qi(2), qi(1), qi(-1)], 1e-6), Err(FamilyError::Pole(_))));
    }
}
