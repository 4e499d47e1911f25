//! Elliptic curves: plane cubics, Weierstrass models, group law, torsion
//! and heights, and the torsion verdict for the two infinity differences.

mod aronhold_terms;
mod curve;
mod height;
mod nagell;
mod sigma;
mod ternary;
mod torsion;

pub use curve::{scale_point, EPoint, WeierstrassCurve};
pub use height::{canonical_height, height_pairing, regulator};
pub use nagell::{cubic_to_weierstrass, normalize, rational_points, CubicWeierstrassMap};
pub use sigma::{
    sigma_torsion, EllipticData, FieldPoint, InconclusiveReason, SigmaInput, SigmaOptions, SigmaReport, Verdict, BILU_BASIS,
};
pub use ternary::{aronhold_j, weierstrass_cubic, TernaryCubic, MONOMIALS};
pub use torsion::{
    nagell_lutz_audit, torsion_order_quadratic, torsion_order_rational, NagellLutzAudit, TorsionVerdict,
    QUADRATIC_TORSION_BOUND, RATIONAL_TORSION_BOUND,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("curve is singular")]
    Singular,
    #[error("not a ternary cubic form")]
    NotCubic,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("points lie in different quadratic fields")]
    FieldMismatch,
    #[error("map is undefined at this point")]
    Undefined,
    #[error("no rational point found on the cubic with height ≤ {0}")]
    NoRationalPoint(u64),
    #[error("degenerate construction: {0}")]
    Degenerate(String),
}
