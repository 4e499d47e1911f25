//! Genus-2 models: the P² − Q³ decomposition, model conversions, invariants.

mod audit;
mod decomposition;
mod igusa;
mod models;

pub use audit::{quartic_singularity_audit, AuditReport, InfinitePoint};
pub use decomposition::{verify_decomposition, Decomposition, MarkedPoint};
pub use igusa::{igusa_clebsch, mobius_transform, IgusaClebsch};
pub use models::{
    body_family_sextic, intro_family_sextic, poly_sqrt, quartic_sextic_coeffs, quartic_to_sextic, search_decomposition,
    QuarticNormalForm, SexticModel,
};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Genus2Error {
    #[error("invalid decomposition: deg P = {0} exceeds 3")]
    PDegree(usize),
    #[error("invalid decomposition: deg Q = {0} exceeds 2")]
    QDegree(usize),
    #[error("invalid decomposition: degree drop, deg(P² − Q³) = {0} < 6")]
    DegreeDrop(i64),
    #[error("invalid decomposition: P² − Q³ has repeated roots (discriminant 0)")]
    RepeatedRoots,
    #[error("sextic model must have degree 5 or 6, got {0}")]
    ModelDegree(i64),
    #[error("model is not separable: discriminant is 0")]
    NotSeparable,
    #[error("marked point x0 = {0} is a Weierstrass point (f(x0) = 0)")]
    SpecialPoint(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
