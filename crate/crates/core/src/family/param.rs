use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::arith::{MultiPoly, Rational, UniPoly};
use crate::elliptic::SigmaInput;
use crate::genus2::{verify_decomposition, Decomposition, MarkedPoint};

/// Decompositions P_t, Q_t depending polynomially on parameters t.
///
/// `p` and `q` are polynomials in (t₁, …, tₙ, x); `x0` and the constraints
/// are polynomials in t. A `solved` entry (i, g) fixes tᵢ = g(t) on the
/// constraint locus (g must not involve tᵢ), so grids and samplers only
/// range over the remaining free parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamFamily {
    pub name: String,
    pub params: Vec<String>,
    #[serde(rename = "P")]
    pub p: MultiPoly,
    #[serde(rename = "Q")]
    pub q: MultiPoly,
    pub x0: MultiPoly,
    #[serde(default)]
    pub constraints: Vec<MultiPoly>,
    #[serde(default)]
    pub solved: Vec<(usize, MultiPoly)>,
}

/// A valid member of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization {
    pub params: Vec<Rational>,
    pub curve: Decomposition,
    pub marked: MarkedPoint,
}

impl Specialization {
    pub fn sigma_input(&self) -> SigmaInput {
        SigmaInput { curve: self.curve.clone(), marked_x: self.marked.x0.clone() }
    }
}

impl ParamFamily {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    /// Indices of the parameters not fixed by `solved`, in order.
    pub fn free_params(&self) -> Vec<usize> {
        (0..self.arity()).filter(|i| !self.solved.iter().any(|(j, _)| j == i)).collect()
    }

    /// Full parameter vector from values of the free parameters.
    pub fn complete(&self, free: &[Rational]) -> Result<Vec<Rational>, FamilyError> {
        let idx = self.free_params();
        if free.len() != idx.len() {
            return Err(FamilyError::Arity { expected: idx.len(), got: free.len() });
        }
        let mut t = vec![Rational::zero(); self.arity()];
        for (i, v) in idx.iter().zip(free) {
            t[*i] = v.clone();
        }
        for (i, g) in &self.solved {
            t[*i] = g.eval(&t)?;
        }
        Ok(t)
    }

    /// P_t and Q_t as univariate polynomials in x.
    pub fn polys_at(&self, t: &[Rational]) -> Result<(UniPoly<Rational>, UniPoly<Rational>), FamilyError> {
        if t.len() != self.arity() {
            return Err(FamilyError::Arity { expected: self.arity(), got: t.len() });
        }
        let at = |m: &MultiPoly| -> Result<UniPoly<Rational>, FamilyError> {
            let vals: Vec<Option<Rational>> = t.iter().cloned().map(Some).chain([None]).collect();
            let r = m.partial_eval(&vals)?;
            Ok(r.to_uni(self.arity()).unwrap_or_else(UniPoly::zero))
        };
        Ok((at(&self.p)?, at(&self.q)?))
    }
}

/// Evaluates the family at t: checks the constraints, then validates the
/// decomposition and that x0 is not a Weierstrass point.
pub fn specialize(fam: &ParamFamily, t: &[Rational]) -> Result<Specialization, FamilyError> {
    if t.len() != fam.arity() {
        return Err(FamilyError::Arity { expected: fam.arity(), got: t.len() });
    }
    for (i, c) in fam.constraints.iter().enumerate() {
        if !c.eval(t)?.is_zero() {
            return Err(FamilyError::Constraint(i));
        }
    }
    let (p, q) = fam.polys_at(t)?;
    let curve = verify_decomposition(&p, &q)?;
    let x0 = fam.x0.eval(t)?;
    let marked = curve.marked_point(&x0)?;
    Ok(Specialization { params: t.to_vec(), curve, marked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};
    use crate::family::presets;

    #[test]
    fn constraint_violation_is_reported() {
        let fam = presets::surface_two_torsion();
        let t = vec![qi(1), qi(1), qi(1)];
        assert!(matches!(specialize(&fam, &t), Err(FamilyError::Constraint(0))));
    }

    #[test]
    fn solved_parameter_lies_on_surface() {
        let fam = presets::surface_two_torsion();
        let t = fam.complete(&[qi(1), qi(1)]).unwrap();
        assert_eq!(t[0], q(7, 27) - q(4, 2187));
        assert!(specialize(&fam, &t).is_ok());
    }

    #[test]
    fn degree_drop_is_degenerate() {
        let fam = presets::dependent_sections();
        assert!(matches!(specialize(&fam, &[qi(1), qi(1)]), Err(FamilyError::Curve(_))));
    }
}
