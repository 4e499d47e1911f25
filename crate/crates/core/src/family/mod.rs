//! Parametric families of decompositions: specialization, grid scans,
//! sampled identity checks and the universal family with two 3-torsion
//! points.

mod grid;
mod identity;
mod param;
pub mod presets;
mod scan;
mod universal;

pub use grid::{grid_points, range_values, GridSpec, ParamRange};
pub use identity::{identity_check, IdentityOptions, IdentityReport, IdentityVerdict, TorsionClaim};
pub use param::{specialize, ParamFamily, Specialization};
pub use presets::{all_presets, preset, Expected, Preset, PresetSource, SexticVariant, PRESET_NAMES};
#[cfg(feature = "parallel")]
pub use scan::scan_parallel;
pub use scan::{
    recheck_certificates, scan, scan_sequential, ScanOptions, ScanOutcome, ScanReport, ScanRow, ScanSummary, SkipReason,
};
pub use universal::{
    jacobian_rank_probe, universal_family_check, universal_j, JacobianProbe, UniversalCheck, UniversalFamily,
};

use num_complex::Complex64;
use thiserror::Error;

use crate::arith::ArithError;
use crate::cover::CoverError;
use crate::elliptic::aronhold_j;
use crate::genus2::{Decomposition, Genus2Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("expected {expected} parameters, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("constraint {0} does not vanish at this point")]
    Constraint(usize),
    #[error(transparent)]
    Curve(#[from] Genus2Error),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("sample on a pole: {0}")]
    Pole(String),
    #[error("numerically unstable: {0}")]
    Unstable(String),
    #[error("invalid grid: {0}")]
    Grid(String),
}

/// Coefficients of w³ − 3Q w − 2P as a ternary cubic in (x, w, z), in the
/// monomial order of `elliptic::MONOMIALS`.
pub(crate) fn quotient_ternary(p: [f64; 4], q: [f64; 3]) -> [Complex64; 10] {
    let c = |v: f64| Complex64::new(v, 0.0);
    [
        c(-2.0 * p[3]),
        c(-3.0 * q[2]),
        c(-2.0 * p[2]),
        c(0.0),
        c(-3.0 * q[1]),
        c(-2.0 * p[1]),
        c(1.0),
        c(0.0),
        c(-3.0 * q[0]),
        c(-2.0 * p[0]),
    ]
}

/// Floating-point j-invariant of the elliptic quotient of a decomposition.
pub fn quotient_j(d: &Decomposition) -> Result<f64, FamilyError> {
    let at = |k: usize, c: &[crate::arith::Rational]| c.get(k).map_or(0.0, |v| v.to_f64());
    let p = std::array::from_fn(|k| at(k, d.p.coeffs()));
    let q = std::array::from_fn(|k| at(k, d.q.coeffs()));
    let j = aronhold_j(&quotient_ternary(p, q)).map_err(|e| FamilyError::Unstable(e.to_string()))?;
    if !j.re.is_finite() {
        return Err(FamilyError::Unstable("j is not finite".into()));
    }
    Ok(j.re)
}
