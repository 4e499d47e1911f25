use serde::{Deserialize, Serialize};

use super::nagell::rational_points;
use super::{
    cubic_to_weierstrass, nagell_lutz_audit, torsion_order_quadratic, torsion_order_rational, CubicWeierstrassMap, EPoint,
    EllipticError, NagellLutzAudit, TorsionVerdict, WeierstrassCurve, QUADRATIC_TORSION_BOUND, RATIONAL_TORSION_BOUND,
};
use crate::arith::{Field, QuadElem, Rational, RootSet};
use crate::cover::{elliptic_quotient, infinity_fiber, CoverError, InfinityFiber};
use crate::genus2::Decomposition;

pub const BILU_BASIS: &str = "both differences torsion: the infinity differences are torsion on the Jacobian of the \
cover iff both sections are torsion on E, giving co-rank >= 2 as required by Bilu's criterion";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaOptions {
    /// Search bound for torsion over ℚ(√d).
    pub torsion_bound: u32,
    /// Height bound for the rational-point search on the cubic.
    pub search_height: u64,
    /// Rational points (X : Y : Z) tried first as the group origin.
    pub seed: Option<[Rational; 3]>,
    /// Number of candidate origins tried before giving up.
    pub max_seeds: usize,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions { torsion_bound: QUADRATIC_TORSION_BOUND, search_height: 10_000, seed: None, max_seeds: 16 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    BiluApplicable,
    NotApplicable,
    Inconclusive,
}

/// Why a report is inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    IrreducibleFiber,
    SingularQuotient,
    NoRationalPoint,
    MapFailure,
}

/// A point over ℚ or over the fiber's quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldPoint {
    Rational(EPoint<Rational>),
    Quadratic(EPoint<QuadElem>),
}

impl FieldPoint {
    pub fn is_infinity(&self) -> bool {
        match self {
            FieldPoint::Rational(p) => p.is_infinity(),
            FieldPoint::Quadratic(p) => p.is_infinity(),
        }
    }

    /// Exact n·P on `e`.
    pub fn mul(&self, e: &WeierstrassCurve, n: i64) -> Result<FieldPoint, EllipticError> {
        Ok(match self {
            FieldPoint::Rational(p) => FieldPoint::Rational(e.mul(n, p)?),
            FieldPoint::Quadratic(p) => FieldPoint::Quadratic(e.mul(n, p)?),
        })
    }
}

/// A curve with a marked x-coordinate; also accepts a SigmaReport.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaInput {
    pub curve: Decomposition,
    pub marked_x: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticData {
    pub weierstrass: WeierstrassCurve,
    pub j: Rational,
    /// Origin of the group law on the cubic.
    pub seed: [Rational; 3],
    /// φ(p1), φ(p2), φ(p3).
    pub images: [FieldPoint; 3],
    pub map: CubicWeierstrassMap,
}

/// Torsion orders of σ1 = φ(p1) − φ(p2) and σ2 = φ(p2) − φ(p3); serialized
/// as the certificate record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaReport {
    pub curve: Decomposition,
    pub marked_x: Rational,
    pub fiber: Option<InfinityFiber>,
    pub elliptic: Option<EllipticData>,
    pub sigma: Option<[FieldPoint; 2]>,
    pub torsion: Option<[TorsionVerdict; 2]>,
    pub sigma_orders: [Option<u32>; 2],
    /// σ1 + σ2 + (φ(p3) − φ(p1)) = O, checked exactly.
    pub sum_check: Option<bool>,
    /// Integrality audits of rational σ's (one per component).
    pub audits: Vec<NagellLutzAudit>,
    pub verdict: Verdict,
    pub reason: Option<InconclusiveReason>,
    pub basis: String,
}

struct Sections<F: Field> {
    images: [EPoint<F>; 3],
    sigma: [EPoint<F>; 2],
    sum_ok: bool,
}

fn sections<F: Field>(
    e: &WeierstrassCurve,
    map: &CubicWeierstrassMap,
    pts: &[[F; 3]; 3],
) -> Result<Sections<F>, EllipticError> {
    let images = [map.forward(&pts[0])?, map.forward(&pts[1])?, map.forward(&pts[2])?];
    let s1 = e.sub(&images[0], &images[1])?;
    let s2 = e.sub(&images[1], &images[2])?;
    let closing = e.sub(&images[2], &images[0])?;
    let sum_ok = e.add(&e.add(&s1, &s2)?, &closing)?.is_infinity();
    Ok(Sections { images, sigma: [s1, s2], sum_ok })
}

fn inconclusive(d: &Decomposition, x0: &Rational, fiber: Option<InfinityFiber>, reason: InconclusiveReason, msg: String) -> SigmaReport {
    SigmaReport {
        curve: d.clone(),
        marked_x: x0.clone(),
        fiber,
        elliptic: None,
        sigma: None,
        torsion: None,
        sigma_orders: [None, None],
        sum_check: None,
        audits: Vec::new(),
        verdict: Verdict::Inconclusive,
        reason: Some(reason),
        basis: msg,
    }
}

/// Decides torsion of the two infinity differences for the marked x-coordinate x0.
///
/// Only invalid input (a Weierstrass marked point) is an error; failures of
/// the pipeline give an Inconclusive report with a reason.
pub fn sigma_torsion(d: &Decomposition, x0: &Rational, opts: &SigmaOptions) -> Result<SigmaReport, CoverError> {
    let fiber = match infinity_fiber(d, x0) {
        Ok(f) => f,
        Err(CoverError::Arith(e)) => {
            return Ok(inconclusive(d, x0, None, InconclusiveReason::IrreducibleFiber, e.to_string()));
        }
        Err(e) => return Err(e),
    };
    let cubic = match elliptic_quotient(d) {
        Ok(c) => c,
        Err(e @ CoverError::SingularQuotient(_)) => {
            return Ok(inconclusive(d, x0, Some(fiber), InconclusiveReason::SingularQuotient, e.to_string()));
        }
        Err(e) => return Err(e),
    };

    let mut candidates: Vec<[Rational; 3]> = opts.seed.iter().cloned().collect();
    if let Some(pts) = fiber.rational_points() {
        candidates.extend(pts);
    } else if let RootSet::Quadratic { roots, .. } = &fiber.values {
        candidates.extend(roots.iter().filter(|r| r.is_rational()).map(|r| [x0.clone(), r.a.clone(), Rational::one()]));
    }
    let searched = rational_points(&cubic.ternary, opts.search_height);
    let mut last_err = None;
    for seed in candidates.into_iter().chain(searched).take(opts.max_seeds) {
        let (e, map) = match cubic_to_weierstrass(&cubic.ternary, &seed) {
            Ok(r) => r,
            Err(err) => {
                last_err = Some(err);
                continue;
            }
        };
        let report = match fiber.rational_points() {
            Some(pts) => sections(&e, &map, &pts).map(|s| {
                let torsion = s.sigma.clone().map(|p| torsion_order_rational(&e, &p));
                let audits = (0..2).map(|i| nagell_lutz_audit(&e, &s.sigma[i], torsion[i], RATIONAL_TORSION_BOUND)).collect();
                (s.images.map(FieldPoint::Rational), s.sigma.map(FieldPoint::Rational), torsion, s.sum_ok, audits)
            }),
            None => {
                let dq = match fiber.field {
                    crate::arith::FieldDescriptor::Quadratic { d } => d,
                    crate::arith::FieldDescriptor::Rational => unreachable!("rational fibers handled above"),
                };
                sections(&e, &map, &fiber.quadratic_points(dq)).map(|s| {
                    let torsion = s.sigma.clone().map(|p| torsion_order_quadratic(&e, &p, opts.torsion_bound));
                    (s.images.map(FieldPoint::Quadratic), s.sigma.map(FieldPoint::Quadratic), torsion, s.sum_ok, Vec::new())
                })
            }
        };
        let (images, sigma, torsion, sum_ok, audits) = match report {
            Ok(r) => r,
            Err(err) => {
                last_err = Some(err);
                continue;
            }
        };
        let both = torsion.iter().all(|t| t.is_torsion());
        let verdict = if both { Verdict::BiluApplicable } else { Verdict::NotApplicable };
        let basis = if both {
            BILU_BASIS.to_string()
        } else {
            "a difference of infinity points has infinite order (or none up to the bound), so the criterion's hypothesis fails"
                .to_string()
        };
        return Ok(SigmaReport {
            curve: d.clone(),
            marked_x: x0.clone(),
            fiber: Some(fiber),
            elliptic: Some(EllipticData { j: e.j.clone(), weierstrass: e, seed: map.seed.clone(), images, map }),
            sigma_orders: torsion.map(|t| t.order()),
            sigma: Some(sigma),
            torsion: Some(torsion),
            sum_check: Some(sum_ok),
            audits,
            verdict,
            reason: None,
            basis,
        });
    }
    let (reason, msg) = match last_err {
        Some(err) => (InconclusiveReason::MapFailure, err.to_string()),
        None => (InconclusiveReason::NoRationalPoint, EllipticError::NoRationalPoint(opts.search_height).to_string()),
    };
    Ok(inconclusive(d, x0, Some(fiber), reason, msg))
}
