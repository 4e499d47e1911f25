//! The degree-3 étale cover t³ = y + P(x) of y² = P² − Q³, its lifted
//! involution t ↦ Q/t, and the quotient cubic w³ − 3Q(x)w − 2P(x) = 0.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{discriminant, quad_solve, rational_roots, ArithError, Field, FieldDescriptor, MultiPoly, QuadElem, Rational, RootSet, UniPoly};
use crate::elliptic::TernaryCubic;
use crate::genus2::{Decomposition, Genus2Error};

/// Genus of the cover: 2g(Y) − 2 = 3(2g(X) − 2) with g(X) = 2.
pub const COVER_GENUS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("quotient cubic is singular: {0}")]
    SingularQuotient(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Genus2(#[from] Genus2Error),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// (x, y, t) ↦ (x, −y, Q(x)/t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename = "lifted_involution")]
pub struct Involution {
    pub y_image: String,
    /// t ↦ t_numerator(x) / t.
    pub t_numerator: UniPoly<Rational>,
}

/// Relations and automorphisms of the cover, in variables (x, y, t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverData {
    pub decomposition: Decomposition,
    /// t³ − y − P(x).
    pub cover_relation: MultiPoly,
    /// y² − f(x), in (x, y).
    pub curve_relation: MultiPoly,
    pub involution: Involution,
    /// The deck transformation, kept symbolic so ζ₃ never enters the field.
    pub automorphism: String,
    pub genus: u32,
    /// Q³ − (P − y)(P + y) ≡ 0 mod y² − f, i.e. ι(t)³ = P − y.
    pub involution_identity: bool,
}

/// Replaces y² by f in a polynomial in (x, y).
fn reduce_mod_curve(p: &MultiPoly, f: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(2);
    for (e, c) in p.terms() {
        let mut t = MultiPoly::from_terms(2, &[(c.clone(), &[e[0], e[1] % 2])]);
        t = t.mul(&f.pow(e[1] / 2));
        out = out.add(&t);
    }
    out
}

pub fn build_cover(d: &Decomposition) -> CoverData {
    let p2 = MultiPoly::from_uni(&d.p, 2, 0);
    let q2 = MultiPoly::from_uni(&d.q, 2, 0);
    let f2 = MultiPoly::from_uni(&d.f, 2, 0);
    let y = MultiPoly::var(2, 1);
    let expr = q2.pow(3).sub(&p2.sub(&y).mul(&p2.add(&y)));
    let identity = reduce_mod_curve(&expr, &f2).is_zero();

    let t3 = MultiPoly::var(3, 2).pow(3);
    let cover_relation = t3.sub(&MultiPoly::var(3, 1)).sub(&MultiPoly::from_uni(&d.p, 3, 0));
    CoverData {
        decomposition: d.clone(),
        cover_relation,
        curve_relation: y.pow(2).sub(&f2),
        involution: Involution { y_image: "-y".into(), t_numerator: d.q.clone() },
        automorphism: "t -> zeta3*t".into(),
        genus: COVER_GENUS,
        involution_identity: identity,
    }
}

/// Evidence for smoothness of the quotient cubic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessProbe {
    /// deg gcd(P² − Q³, 2QP′ − 3Q′P, 4P′² − 9Q′²Q): x-coordinates of affine singularities.
    pub affine_singular_degree: usize,
    pub smooth_at_infinity: bool,
    /// T² − S³ of the ternary form.
    pub ternary_discriminant: Rational,
    pub smooth: bool,
}

/// w³ − 3Q(x)w − 2P(x) = 0 and its homogenization in (X, Y, Z) = (x, w, 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCubic {
    #[serde(rename = "P")]
    pub p: UniPoly<Rational>,
    #[serde(rename = "Q")]
    pub q: UniPoly<Rational>,
    /// The affine relation in (x, w).
    pub relation: MultiPoly,
    pub ternary: TernaryCubic,
    pub probe: SmoothnessProbe,
}

fn padded(p: &UniPoly<Rational>, n: usize) -> Vec<Rational> {
    (0..n).map(|i| p.coeff_or(i, &Rational::zero())).collect()
}

fn probe(p: &UniPoly<Rational>, q: &UniPoly<Rational>, ternary: &TernaryCubic) -> SmoothnessProbe {
    let (dp, dq) = (p.derivative(), q.derivative());
    let c = |k: i64| UniPoly::constant(Rational::from(k));
    let g1 = p.mul(p).sub(&q.pow(3));
    let g2 = c(2).mul(q).mul(&dp).sub(&c(3).mul(&dq).mul(p));
    let g3 = c(4).mul(&dp).mul(&dp).sub(&c(9).mul(&dq).mul(&dq).mul(q));
    let g = [g2, g3].iter().fold(g1, |acc, h| acc.gcd(h));
    // gcd of all-zero input is zero: every x is singular
    let affine = if g.is_zero() { usize::MAX } else { g.degree().unwrap_or(0) };

    let [_, _, p2, p3] = <[Rational; 4]>::try_from(padded(p, 4)).unwrap();
    let [_, q1, q2] = <[Rational; 3]>::try_from(padded(q, 3)).unwrap();
    let a6 = p3.pow(2) - q2.pow(3);
    let smooth_at_infinity = if !a6.is_zero() {
        true
    } else {
        // Y³ − 3q2·Y − 2p3 has a repeated root y_r; (1 : y_r : 0) is smooth iff F_Z ≠ 0 there.
        let b = UniPoly::new(vec![Rational::from(-2) * &p3, Rational::from(-3) * &q2, Rational::zero(), Rational::one()]);
        let rep = b.gcd(&b.derivative());
        // a repeated root of a rational cubic is rational
        match rational_roots(&rep).first() {
            Some(yr) => !(Rational::from(-3) * &q1 * yr - Rational::from(2) * &p2).is_zero(),
            None => false,
        }
    };
    let disc = ternary.discriminant();
    SmoothnessProbe {
        affine_singular_degree: affine,
        smooth_at_infinity,
        smooth: !disc.is_zero(),
        ternary_discriminant: disc,
    }
}

/// The quotient cubic for arbitrary P (deg ≤ 3) and Q (deg ≤ 2).
pub fn elliptic_quotient_raw(p: &UniPoly<Rational>, q: &UniPoly<Rational>) -> Result<QuotientCubic, CoverError> {
    if p.degree().unwrap_or(0) > 3 || q.degree().unwrap_or(0) > 2 {
        return Err(CoverError::Inconsistent("P must have degree ≤ 3 and Q degree ≤ 2".into()));
    }
    let w = MultiPoly::var(2, 1);
    let relation = w
        .pow(3)
        .sub(&MultiPoly::from_uni(q, 2, 0).mul(&w).scale(&Rational::from(3)))
        .sub(&MultiPoly::from_uni(p, 2, 0).scale(&Rational::from(2)));
    let pc = padded(p, 4);
    let qc = padded(q, 3);
    let m2 = |r: &Rational| Rational::from(-2) * r;
    let m3 = |r: &Rational| Rational::from(-3) * r;
    let ternary = TernaryCubic::new([
        m2(&pc[3]),
        m3(&qc[2]),
        m2(&pc[2]),
        Rational::zero(),
        m3(&qc[1]),
        m2(&pc[1]),
        Rational::one(),
        Rational::zero(),
        m3(&qc[0]),
        m2(&pc[0]),
    ]);
    let probe = probe(p, q, &ternary);
    let classical = probe.affine_singular_degree == 0 && probe.smooth_at_infinity;
    if classical != probe.smooth {
        return Err(CoverError::Inconsistent(format!(
            "smoothness criteria disagree (gcd/infinity: {classical}, ternary discriminant: {})",
            probe.smooth
        )));
    }
    if !probe.smooth {
        return Err(CoverError::SingularQuotient(format!(
            "affine singular x-degree {}, smooth at infinity: {}",
            if probe.affine_singular_degree == usize::MAX { "∞".to_string() } else { probe.affine_singular_degree.to_string() },
            probe.smooth_at_infinity
        )));
    }
    Ok(QuotientCubic { p: p.clone(), q: q.clone(), relation, ternary, probe })
}

pub fn elliptic_quotient(d: &Decomposition) -> Result<QuotientCubic, CoverError> {
    elliptic_quotient_raw(&d.p, &d.q)
}

/// The three w-values above x = x0, ordered rational-ascending then the
/// conjugate pair with positive √d part first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityFiber {
    pub x0: Rational,
    pub values: RootSet,
    pub field: FieldDescriptor,
    /// disc_w of the fiber cubic; equals −108·f(x0).
    pub discriminant: Rational,
}

impl InfinityFiber {
    /// Cubic points (x0 : w : 1) over ℚ, if the fiber is rational.
    pub fn rational_points(&self) -> Option<[[Rational; 3]; 3]> {
        match &self.values {
            RootSet::Rational { roots } => {
                Some(std::array::from_fn(|i| [self.x0.clone(), roots[i].clone(), Rational::one()]))
            }
            RootSet::Quadratic { .. } => None,
        }
    }

    /// Cubic points over ℚ(√d), lifting a rational fiber if needed.
    pub fn quadratic_points(&self, d: i64) -> [[QuadElem; 3]; 3] {
        let lift = |r: &Rational| QuadElem::from_rational(r.clone(), d);
        std::array::from_fn(|i| {
            let w = match &self.values {
                RootSet::Rational { roots } => lift(&roots[i]),
                RootSet::Quadratic { roots, .. } => roots[i].clone(),
            };
            [lift(&self.x0), w, lift(&Rational::one())]
        })
    }

    /// Cyclic relabeling p_i ↦ p_(i+k), the action of the deck transformation.
    pub fn rotated(&self, k: usize) -> InfinityFiber {
        let mut out = self.clone();
        match &mut out.values {
            RootSet::Rational { roots } => roots.rotate_left(k % 3),
            RootSet::Quadratic { roots, .. } => roots.rotate_left(k % 3),
        }
        out
    }
}

pub fn infinity_fiber(d: &Decomposition, x0: &Rational) -> Result<InfinityFiber, CoverError> {
    let fx0 = d.f.eval(x0);
    if fx0.is_zero() {
        return Err(Genus2Error::SpecialPoint(x0.to_string()).into());
    }
    let (q0, p0) = (d.q.eval(x0), d.p.eval(x0));
    let cubic = UniPoly::new(vec![Rational::from(-2) * &p0, Rational::from(-3) * &q0, Rational::zero(), Rational::one()]);
    let disc = discriminant(&cubic)?;
    if disc != Rational::from(-108) * &fx0 {
        return Err(CoverError::Inconsistent(format!("fiber discriminant {disc} ≠ −108·f(x0)")));
    }
    let values = quad_solve(&cubic)?;
    let ok = match &values {
        RootSet::Rational { roots } => {
            roots.len() == 3
                && roots.windows(2).all(|w| w[0] != w[1])
                && roots.iter().cloned().sum::<Rational>().is_zero()
                && roots.iter().all(|r| cubic.eval(r).is_zero())
        }
        RootSet::Quadratic { roots, .. } => {
            let sum = roots.iter().skip(1).fold(roots[0].clone(), |a, b| a.checked_add(b).unwrap());
            roots.len() == 3
                && roots[0] != roots[1]
                && roots[1] != roots[2]
                && roots[0] != roots[2]
                && sum.a.is_zero()
                && sum.b.is_zero()
                && roots.iter().all(|r| Field::is_zero(&cubic.eval_quad(r)))
        }
    };
    if !ok {
        return Err(CoverError::Inconsistent("fiber values are not three distinct roots summing to 0".into()));
    }
    Ok(InfinityFiber { x0: x0.clone(), field: values.field(), values, discriminant: disc })
}
