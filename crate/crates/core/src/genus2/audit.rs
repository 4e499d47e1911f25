use serde::{Deserialize, Serialize};

use crate::arith::{rational_roots, resultant_in_last, MultiPoly, Rational, UniPoly};

/// A rational point (X : Y : 0) on the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinitePoint {
    pub point: [Rational; 3],
    pub multiplicity: usize,
    pub smooth: bool,
}

/// Singularity and infinity report for a plane quartic F(x, y) = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub total_degree: Option<u32>,
    pub affine_singular_points: Vec<[Rational; 2]>,
    /// Ordinary double point (nonzero Hessian) flag for each singular point.
    pub nodes: Vec<bool>,
    pub infinite_points: Vec<InfinitePoint>,
    /// Degree of the part of the infinity divisor not split over ℚ.
    pub irrational_infinite_degree: usize,
    pub unique_smooth_infinite_point: bool,
    pub valid_genus2_quartic: bool,
    pub notes: Vec<String>,
}

fn uni_in_y(f: &MultiPoly, x: &Rational) -> UniPoly<Rational> {
    f.partial_eval(&[Some(x.clone()), None]).unwrap().to_uni(1).unwrap()
}

/// Rational singular points, points at infinity and the genus-2 model checks.
pub fn quartic_singularity_audit(f: &MultiPoly) -> AuditReport {
    assert_eq!(f.arity(), 2, "quartic audit expects a bivariate polynomial");
    let mut notes = Vec::new();
    let td = f.total_degree();
    if td != Some(4) {
        notes.push(format!("total degree is {td:?}, not 4"));
    }
    let fx = f.derivative(0);
    let fy = f.derivative(1);

    // Obvious reducibility: a nonconstant content in either variable.
    let mut reducible = false;
    for var in 0..2 {
        let other = 1 - var;
        let content = f
            .coeffs_in(var)
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.to_uni(other).unwrap())
            .fold(UniPoly::zero(), |g, c| g.gcd(&c));
        if content.degree().unwrap_or(0) > 0 {
            notes.push(format!("polynomial content {content} in variable v{other}"));
            reducible = true;
        }
    }
    // Repeated factors (perfect powers): F and ∂F/∂y share a factor.
    if f.degree_in(1).unwrap_or(0) > 0 && resultant_in_last(f, &fy).is_zero() {
        notes.push("repeated factor: Res_y(F, F_y) vanishes identically".into());
        reducible = true;
    }

    let mut singular = Vec::new();
    let mut nodes = Vec::new();
    if !reducible {
        let elim = [(&fx, &fy), (f, &fy), (f, &fx)]
            .iter()
            .map(|(a, b)| resultant_in_last(a, b))
            .find(|r| !r.is_zero());
        match elim {
            Some(r) => {
                for x in rational_roots(&r) {
                    let g = uni_in_y(f, &x).gcd(&uni_in_y(&fx, &x)).gcd(&uni_in_y(&fy, &x));
                    if g.is_zero() {
                        notes.push(format!("vertical line x = {x} lies in the singular locus"));
                        continue;
                    }
                    for y in rational_roots(&g) {
                        let p = [x.clone(), y];
                        let h = |m: &MultiPoly| m.eval(&p).unwrap();
                        let hess = h(&fx.derivative(0)) * h(&fy.derivative(1)) - h(&fx.derivative(1)).pow(2);
                        nodes.push(!hess.is_zero());
                        singular.push(p);
                    }
                }
            }
            None => notes.push("elimination degenerate: all resultants vanish".into()),
        }
    }

    // Points at infinity from the top-degree homogeneous part.
    let top = td.unwrap_or(0);
    let ftop = f.homogeneous_part(top);
    let g = ftop.partial_eval(&[None, Some(Rational::one())]).unwrap().to_uni(0).unwrap();
    let mut infinite = Vec::new();
    let mut found = 0usize;
    let hom = homogenize(f, top);
    let smooth_at = |p: &[Rational; 3]| (0..3).any(|i| !hom.derivative(i).eval(p).unwrap().is_zero());
    for r in rational_roots(&g) {
        let mut m = 0;
        let mut h = g.clone();
        let lin = UniPoly::new(vec![-r.clone(), Rational::one()]);
        loop {
            let (qt, rem) = h.div_rem(&lin).unwrap();
            if !rem.is_zero() {
                break;
            }
            m += 1;
            h = qt;
        }
        let p = [r, Rational::one(), Rational::zero()];
        infinite.push(InfinitePoint { smooth: smooth_at(&p), point: p, multiplicity: m });
        found += m;
    }
    let gdeg = g.degree().unwrap_or(0);
    if (gdeg as u32) < top {
        let p = [Rational::one(), Rational::zero(), Rational::zero()];
        let m = top as usize - gdeg;
        infinite.push(InfinitePoint { smooth: smooth_at(&p), point: p, multiplicity: m });
        found += m;
    }
    let irrational = (top as usize).saturating_sub(found);
    let unique_smooth = infinite.len() == 1 && irrational == 0 && infinite[0].smooth;
    let valid = td == Some(4) && !reducible && singular.len() == 1 && nodes[0] && unique_smooth;
    AuditReport {
        total_degree: td,
        affine_singular_points: singular,
        nodes,
        infinite_points: infinite,
        irrational_infinite_degree: irrational,
        unique_smooth_infinite_point: unique_smooth,
        valid_genus2_quartic: valid,
        notes,
    }
}

/// F(X, Y, Z) = Z^deg · F(X/Z, Y/Z).
fn homogenize(f: &MultiPoly, deg: u32) -> MultiPoly {
    let mut h = MultiPoly::zero(3);
    for (e, c) in f.terms() {
        h.add_term(vec![e[0], e[1], deg - e[0] - e[1]], c.clone());
    }
    h
}
