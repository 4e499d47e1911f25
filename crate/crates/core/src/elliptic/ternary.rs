use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::aronhold_terms::{S_TERMS, T_TERMS};
use super::EllipticError;
use crate::arith::{Field, MultiPoly, Rational};

/// Exponents of the monomial basis, in coefficient order.
pub const MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// Homogeneous cubic form in (X, Y, Z) with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryCubic {
    pub coeffs: [Rational; 10],
}

trait Coef: Clone {
    fn zero() -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn add_scaled(&self, k: i64, o: &Self) -> Self;
}

impl Coef for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn add_scaled(&self, k: i64, o: &Self) -> Self {
        self + Rational::from(k) * o
    }
}

impl Coef for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn add_scaled(&self, k: i64, o: &Self) -> Self {
        self + o * k as f64
    }
}

fn term_sum<T: Coef, const N: usize>(terms: &[(i64, [u8; N])], c: &[T; 10]) -> T {
    terms.iter().fold(T::zero(), |acc, (k, ix)| {
        let m = ix[1..].iter().fold(c[ix[0] as usize].clone(), |p, &i| p.mul(&c[i as usize]));
        acc.add_scaled(*k, &m)
    })
}

fn s_t<T: Coef>(c: &[T; 10]) -> (T, T) {
    (term_sum(&S_TERMS, c), term_sum(&T_TERMS, c))
}

impl TernaryCubic {
    pub fn new(coeffs: [Rational; 10]) -> Self {
        TernaryCubic { coeffs }
    }

    pub fn from_poly(p: &MultiPoly) -> Result<Self, EllipticError> {
        if p.arity() != 3 {
            return Err(EllipticError::NotCubic);
        }
        let mut c: [Rational; 10] = std::array::from_fn(|_| Rational::zero());
        for (e, v) in p.terms() {
            let i = MONOMIALS.iter().position(|m| m[..] == e[..]).ok_or(EllipticError::NotCubic)?;
            c[i] = v.clone();
        }
        Ok(TernaryCubic { coeffs: c })
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::zero(3);
        for (m, c) in MONOMIALS.iter().zip(&self.coeffs) {
            p.add_term(m.to_vec(), c.clone());
        }
        p
    }

    pub fn eval<F: Field>(&self, p: &[F; 3]) -> F {
        let mut acc = p[0].zero_like();
        for (m, c) in MONOMIALS.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut t = p[0].from_rational_like(c);
            for (k, &e) in m.iter().enumerate() {
                t = t.fmul(&p[k].fpow(e as u64));
            }
            acc = acc.fadd(&t);
        }
        acc
    }

    /// (∂F/∂X, ∂F/∂Y, ∂F/∂Z) at p.
    pub fn gradient<F: Field>(&self, p: &[F; 3]) -> [F; 3] {
        std::array::from_fn(|var| {
            let mut acc = p[0].zero_like();
            for (m, c) in MONOMIALS.iter().zip(&self.coeffs) {
                if c.is_zero() || m[var] == 0 {
                    continue;
                }
                let mut t = p[0].from_rational_like(&(c * Rational::from(m[var] as i64)));
                for (k, &e) in m.iter().enumerate() {
                    let e = if k == var { e - 1 } else { e };
                    t = t.fmul(&p[k].fpow(e as u64));
                }
                acc = acc.fadd(&t);
            }
            acc
        })
    }

    /// Aronhold invariants (S, T), normalized so that
    /// X³ + aXZ² + bZ³ − Y²Z has S = −48a and T = 864b.
    pub fn aronhold(&self) -> (Rational, Rational) {
        s_t(&self.coeffs)
    }

    /// T² − S³; a nonzero multiple of the discriminant of the form.
    pub fn discriminant(&self) -> Rational {
        let (s, t) = self.aronhold();
        t.pow(2) - s.pow(3)
    }

    pub fn is_smooth(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// j = 1728·S³/(S³ − T²).
    pub fn j_invariant(&self) -> Result<Rational, EllipticError> {
        let (s, t) = self.aronhold();
        let den = s.pow(3) - t.pow(2);
        if den.is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(Rational::from(1728) * s.pow(3) / den)
    }
}

/// j-invariant of a ternary cubic with complex coefficients, in floating point.
pub fn aronhold_j(coeffs: &[Complex64; 10]) -> Result<Complex64, EllipticError> {
    let (s, t) = s_t(coeffs);
    let s3 = s * s * s;
    let den = s3 - t * t;
    let scale = s3.norm().max((t * t).norm());
    if scale == 0.0 || den.norm() <= 1e-12 * scale {
        return Err(EllipticError::Singular);
    }
    Ok(s3 * 1728.0 / den)
}

/// Weierstrass-form cubic X³ + aXZ² + bZ³ − Y²Z.
pub fn weierstrass_cubic(a: &Rational, b: &Rational) -> TernaryCubic {
    let mut c: [Rational; 10] = std::array::from_fn(|_| Rational::zero());
    c[0] = Rational::one();
    c[5] = a.clone();
    c[9] = b.clone();
    c[7] = Rational::from(-1);
    TernaryCubic::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn normalization_on_weierstrass_forms() {
        for (a, b) in [(1, 0), (0, 1), (-3, 5), (7, -2)] {
            let (s, t) = weierstrass_cubic(&qi(a), &qi(b)).aronhold();
            assert_eq!(s, qi(-48 * a));
            assert_eq!(t, qi(864 * b));
        }
    }

    #[test]
    fn fermat_cubic_has_j_zero() {
        // X³ + Y³ − Z³
        let mut c: [Rational; 10] = std::array::from_fn(|_| qi(0));
        c[0] = qi(1);
        c[6] = qi(1);
        c[9] = qi(-1);
        let f = TernaryCubic::new(c.clone());
        assert_eq!(f.j_invariant().unwrap(), qi(0));
        let cz: [Complex64; 10] = std::array::from_fn(|i| Complex64::new(c[i].to_f64(), 0.0));
        assert!(aronhold_j(&cz).unwrap().norm() < 1e-9);
    }

    #[test]
    fn nodal_cubic_is_singular() {
        // Y²Z − X³ − X²Z
        let mut c: [Rational; 10] = std::array::from_fn(|_| qi(0));
        c[7] = qi(1);
        c[0] = qi(-1);
        c[2] = qi(-1);
        assert!(!TernaryCubic::new(c).is_smooth());
    }

    #[test]
    fn gradient_matches_poly_derivative() {
        let c: [Rational; 10] = std::array::from_fn(|i| qi(i as i64 * 3 - 7));
        let f = TernaryCubic::new(c);
        let p = [qi(2), qi(-1), qi(5)];
        let g = f.gradient(&p);
        let poly = f.to_poly();
        for v in 0..3 {
            assert_eq!(g[v], poly.derivative(v).eval(&p).unwrap());
        }
        assert_eq!(f.eval(&p), poly.eval(&p).unwrap());
    }
}
