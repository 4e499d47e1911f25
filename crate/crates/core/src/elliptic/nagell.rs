//! Plane cubic with a rational point → long Weierstrass model.
//!
//! With O the seed and L1 its tangent (meeting the cubic again at P), the
//! functions u = M/L1 and v = N/L1² span L(2O) and L(3O), where M is a line
//! through P and N = L2·L′ is a conic vanishing doubly at P (L2 is the
//! tangent at P) and once at O. The unique linear relation between
//! 1, u, u², u³, v, uv, v² is the Weierstrass equation.

use serde::{Deserialize, Serialize};

use super::{EPoint, EllipticError, TernaryCubic, WeierstrassCurve};
use crate::arith::{nullspace, rational_roots, rationals_by_height, Field, MultiPoly, Rational, UniPoly};

type Vec3 = [Rational; 3];

fn line_poly(l: &Vec3) -> MultiPoly {
    let mut p = MultiPoly::zero(3);
    for (i, c) in l.iter().enumerate() {
        let mut e = vec![0; 3];
        e[i] = 1;
        p.add_term(e, c.clone());
    }
    p
}

fn dot<F: Field>(l: &Vec3, p: &[F; 3]) -> F {
    l.iter().zip(p).fold(p[0].zero_like(), |acc, (c, x)| acc.fadd(&x.from_rational_like(c).fmul(x)))
}

fn cross<F: Field>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [
        a[1].fmul(&b[2]).fsub(&a[2].fmul(&b[1])),
        a[2].fmul(&b[0]).fsub(&a[0].fmul(&b[2])),
        a[0].fmul(&b[1]).fsub(&a[1].fmul(&b[0])),
    ]
}

fn is_null<F: Field>(p: &[F; 3]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn proportional<F: Field>(a: &[F; 3], b: &[F; 3]) -> bool {
    is_null(&cross(a, b))
}

fn unit(k: usize) -> Vec3 {
    std::array::from_fn(|i| if i == k { Rational::one() } else { Rational::zero() })
}

/// Scales so the last nonzero coordinate is 1.
pub fn normalize(p: &Vec3) -> Vec3 {
    match p.iter().rev().find(|c| !c.is_zero()) {
        Some(l) => {
            let l = l.clone();
            std::array::from_fn(|i| &p[i] / &l)
        }
        None => p.clone(),
    }
}

fn combine<F: Field>(s: &F, a: &[F; 3], t: &F, b: &[F; 3]) -> [F; 3] {
    std::array::from_fn(|i| s.fmul(&a[i]).fadd(&t.fmul(&b[i])))
}

/// Coefficients [s³, s²t, st², t³] of F(sA + tB).
fn restrict<F: Field>(c: &TernaryCubic, a: &[F; 3], b: &[F; 3]) -> [F; 4] {
    let one = a[0].one_like();
    let k0 = c.eval(a);
    let k3 = c.eval(b);
    let plus = c.eval(&combine(&one, a, &one, b)).fsub(&k0).fsub(&k3);
    let minus = c.eval(&combine(&one, a, &one.fneg(), b)).fsub(&k0).fadd(&k3);
    let half = a[0].from_rational_like(&Rational::new(1, 2));
    let k2 = plus.fadd(&minus).fmul(&half);
    let k1 = plus.fsub(&minus).fmul(&half);
    [k0, k1, k2, k3]
}

/// Residual intersection of the tangent at a smooth point A.
fn tangent_third_point(c: &TernaryCubic, a: &Vec3) -> Result<Vec3, EllipticError> {
    let tangent = c.gradient(a);
    if is_null(&tangent) {
        return Err(EllipticError::Singular);
    }
    let b = (0..3)
        .map(|k| cross(&tangent, &unit(k)))
        .find(|b| !is_null(b) && !proportional(a, b))
        .expect("a line has at least two points");
    let [_, _, k2, k3] = restrict(c, a, &b);
    if k2.is_zero() && k3.is_zero() {
        return Err(EllipticError::NotCubic);
    }
    Ok(normalize(&combine(&k3, a, &-k2, &b)))
}

/// Forward and backward maps between a plane cubic and its Weierstrass model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicWeierstrassMap {
    pub cubic: TernaryCubic,
    pub seed: Vec3,
    /// Second intersection of the tangent at the seed.
    pub tangent_point: Vec3,
    /// x = forward_x[0]/forward_x[1] as forms in (X, Y, Z).
    pub forward_x: [MultiPoly; 2],
    /// y = forward_y[0]/forward_y[1].
    pub forward_y: [MultiPoly; 2],
    /// Cubic point (X : Y : Z) as polynomials in the Weierstrass (x, y).
    pub backward: [MultiPoly; 3],
    /// Image of the tangent point, where the forward forms are 0/0.
    pub tangent_image: Option<EPoint<Rational>>,
    scale: Rational,
    l1: Vec3,
    m: Vec3,
    aux: Vec3,
}

impl CubicWeierstrassMap {
    /// Image of a cubic point, given in homogeneous coordinates.
    pub fn forward<F: Field>(&self, pt: &[F; 3]) -> Result<EPoint<F>, EllipticError> {
        if is_null(pt) || !self.cubic.eval(pt).is_zero() {
            return Err(EllipticError::NotOnCurve);
        }
        let like = &pt[0];
        let seed = self.seed.clone().map(|c| like.from_rational_like(&c));
        if proportional(pt, &seed) {
            return Ok(EPoint::Infinity);
        }
        let l = dot(&self.l1, pt);
        if l.is_zero() {
            return match &self.tangent_image {
                Some(EPoint::Affine { x, y }) => {
                    Ok(EPoint::Affine { x: like.from_rational_like(x), y: like.from_rational_like(y) })
                }
                Some(EPoint::Infinity) => Ok(EPoint::Infinity),
                None => Err(EllipticError::Undefined),
            };
        }
        let ev = |p: &MultiPoly| p.eval_in(pt).expect("ternary form");
        let x = ev(&self.forward_x[0]).fdiv(&ev(&self.forward_x[1])).unwrap();
        let y = ev(&self.forward_y[0]).fdiv(&ev(&self.forward_y[1])).unwrap();
        Ok(EPoint::Affine { x, y })
    }

    /// Cubic point (normalized up to scaling) above a Weierstrass point.
    pub fn backward<F: Field>(&self, p: &EPoint<F>) -> Result<[F; 3], EllipticError> {
        let (x, y) = match p {
            EPoint::Infinity => return Err(EllipticError::Undefined),
            EPoint::Affine { x, y } => (x, y),
        };
        let target = p.clone();
        let accept = |pt: [F; 3]| -> Option<[F; 3]> {
            (!is_null(&pt) && self.cubic.eval(&pt).is_zero() && self.forward(&pt).ok()? == target).then_some(pt)
        };
        let pt: [F; 3] = std::array::from_fn(|i| self.backward[i].eval_in(&[x.clone(), y.clone()]).unwrap());
        if let Some(pt) = accept(pt) {
            return Ok(pt);
        }
        // Degenerate fiber: fall back to the residual intersections of the
        // line M − uL1 through the tangent point.
        let u = x.fmul(&x.from_rational_like(&self.scale.recip().unwrap()));
        let line: [F; 3] = std::array::from_fn(|i| x.from_rational_like(&self.m[i]).fsub(&u.fmul(&x.from_rational_like(&self.l1[i]))));
        let aux = self.aux.clone().map(|c| x.from_rational_like(&c));
        let r = cross(&line, &aux);
        let tp = self.tangent_point.clone().map(|c| x.from_rational_like(&c));
        let [_, k1, k2, k3] = restrict(&self.cubic, &tp, &r);
        let two = x.from_rational_like(&Rational::from(2));
        let candidates = [(k2.fneg(), two.fmul(&k1)), (k3.clone(), k2.fneg()), (x.one_like(), x.zero_like())];
        candidates
            .into_iter()
            .find_map(|(s, t)| accept(combine(&s, &tp, &t, &r)))
            .ok_or(EllipticError::Undefined)
    }
}

/// Transforms a smooth plane cubic with a rational point into Weierstrass form.
pub fn cubic_to_weierstrass(
    cubic: &TernaryCubic,
    seed: &Vec3,
) -> Result<(WeierstrassCurve, CubicWeierstrassMap), EllipticError> {
    if !cubic.is_smooth() {
        return Err(EllipticError::Singular);
    }
    if is_null(seed) || !cubic.eval(seed).is_zero() {
        return Err(EllipticError::NotOnCurve);
    }
    let o = normalize(seed);
    let l1 = cubic.gradient(&o);
    let p = tangent_third_point(cubic, &o)?;
    let l2 = cubic.gradient(&p);
    let k = (0..3).find(|&k| !l1[k].is_zero()).unwrap();
    let ek = unit(k);
    let m = cross(&p, &ek);
    let lprime = if !dot(&l2, &o).is_zero() {
        cross(&o, &ek)
    } else {
        unit((0..3).find(|&i| !o[i].is_zero()).unwrap())
    };
    let (l1p, mp) = (line_poly(&l1), line_poly(&m));
    let np = line_poly(&l2).mul(&line_poly(&lprime));
    let f = cubic.to_poly();
    let cols = [
        np.pow(2),
        mp.mul(&np).mul(&l1p),
        np.mul(&l1p.pow(2)),
        mp.pow(3).mul(&l1p),
        mp.pow(2).mul(&l1p.pow(2)),
        mp.mul(&l1p.pow(3)),
        l1p.pow(4),
        f.mul(&MultiPoly::var(3, 0)),
        f.mul(&MultiPoly::var(3, 1)),
        f.mul(&MultiPoly::var(3, 2)),
    ];
    let mut rows = Vec::new();
    for i in 0..=4u32 {
        for j in 0..=4 - i {
            let e = [i, j, 4 - i - j];
            rows.push(cols.iter().map(|c| c.coeff(&e)).collect::<Vec<_>>());
        }
    }
    let ns = nullspace(&rows);
    if ns.len() != 1 || ns[0][0].is_zero() || ns[0][3].is_zero() {
        return Err(EllipticError::Degenerate(format!("relation space of dimension {}", ns.len())));
    }
    let kk = &ns[0];
    let norm = |i: usize| &kk[i] / &kk[0];
    // v² + a·uv + b·v = c·u³ + d·u² + e·u + g, then (x, y) = (cu, cv).
    let (a, b) = (norm(1), norm(2));
    let (c, d, e, g) = (-norm(3), -norm(4), -norm(5), -norm(6));
    let curve = WeierstrassCurve::new([a, d, &b * &c, &e * &c, &g * &c * &c])?;

    let cpoly = MultiPoly::constant(3, c.clone());
    let forward_x = [mp.mul(&cpoly), l1p.clone()];
    let forward_y = [np.mul(&cpoly), l1p.pow(2)];

    // Backward: on the line ℓ = M − (x/c)·L1 through P, the point where
    // N − (y/c)·L1² vanishes besides P is g2·P − g1·R, with R = ℓ × K.
    let aux = unit((0..3).find(|&i| !p[i].is_zero()).unwrap());
    let xv = MultiPoly::var(2, 0).scale(&c.recip().unwrap());
    let yv = MultiPoly::var(2, 1).scale(&c.recip().unwrap());
    let konst = |r: &Rational| MultiPoly::constant(2, r.clone());
    let ell: [MultiPoly; 3] = std::array::from_fn(|i| konst(&m[i]).sub(&xv.mul(&konst(&l1[i]))));
    let kk3: [MultiPoly; 3] = aux.clone().map(|c| konst(&c));
    let r: [MultiPoly; 3] = [
        ell[1].mul(&kk3[2]).sub(&ell[2].mul(&kk3[1])),
        ell[2].mul(&kk3[0]).sub(&ell[0].mul(&kk3[2])),
        ell[0].mul(&kk3[1]).sub(&ell[1].mul(&kk3[0])),
    ];
    let grad_n: [Rational; 3] = std::array::from_fn(|i| np.derivative(i).eval(&p).unwrap());
    let g1 = (0..3).fold(MultiPoly::zero(2), |acc, i| acc.add(&r[i].scale(&grad_n[i])));
    let l1r = (0..3).fold(MultiPoly::zero(2), |acc, i| acc.add(&r[i].scale(&l1[i])));
    let g2 = np.compose(&r).map_err(|e| EllipticError::Degenerate(e.to_string()))?.sub(&yv.mul(&l1r.pow(2)));
    let backward: [MultiPoly; 3] = std::array::from_fn(|i| g2.scale(&p[i]).sub(&g1.mul(&r[i])));

    let mut map = CubicWeierstrassMap {
        cubic: cubic.clone(),
        seed: o.clone(),
        tangent_point: p.clone(),
        forward_x,
        forward_y,
        backward,
        tangent_image: None,
        scale: c,
        l1,
        m,
        aux,
    };
    if proportional(&p, &o) {
        map.tangent_image = Some(EPoint::Infinity);
    } else {
        // P, P, P′ collinear: φ(P) = −φ(P′) when P′ ≠ P.
        let p2 = tangent_third_point(cubic, &p)?;
        if !proportional(&p2, &p) {
            map.tangent_image = Some(curve.neg(&map.forward(&p2)?));
        }
    }
    Ok((curve, map))
}

/// Rational points of a cubic, at infinity first, then affine by height of X/Z.
pub fn rational_points(cubic: &TernaryCubic, height: u64) -> impl Iterator<Item = Vec3> + '_ {
    let c = &cubic.coeffs;
    // F(X, 1, 0) = c0 X³ + c1 X² + c3 X + c6
    let at_inf = UniPoly::new(vec![c[6].clone(), c[3].clone(), c[1].clone(), c[0].clone()]);
    let mut inf: Vec<Vec3> = if at_inf.is_zero() {
        Vec::new()
    } else {
        rational_roots(&at_inf).into_iter().map(|x| [x, Rational::one(), Rational::zero()]).collect()
    };
    if c[0].is_zero() {
        inf.push([Rational::one(), Rational::zero(), Rational::zero()]);
    }
    let affine = rationals_by_height(height).flat_map(move |x| {
        // F(x, Y, 1) as a polynomial in Y
        let g = UniPoly::new(
            (0..4u32)
                .map(|j| {
                    super::ternary::MONOMIALS
                        .iter()
                        .zip(c)
                        .filter(|(m, _)| m[1] == j)
                        .map(|(m, k)| k * x.pow(m[0]))
                        .sum::<Rational>()
                })
                .collect(),
        );
        let ys = if g.is_zero() { Vec::new() } else { rational_roots(&g) };
        ys.into_iter().map(move |y| [x.clone(), y, Rational::one()])
    });
    inf.into_iter().chain(affine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    fn fermat() -> TernaryCubic {
        // X³ + Y³ − Z³
        let mut c: [Rational; 10] = std::array::from_fn(|_| qi(0));
        c[0] = qi(1);
        c[6] = qi(1);
        c[9] = qi(-1);
        TernaryCubic::new(c)
    }

    #[test]
    fn fermat_cubic_maps_to_j_zero() {
        let f = fermat();
        let (e, map) = cubic_to_weierstrass(&f, &[qi(1), qi(0), qi(1)]).unwrap();
        assert_eq!(e.j, qi(0));
        // Other rational points land on the curve.
        for pt in [[qi(0), qi(1), qi(1)], [qi(1), qi(-1), qi(0)]] {
            let img = map.forward(&pt).unwrap();
            assert!(e.contains(&img));
            assert!(proportional(&map.backward(&img).unwrap(), &pt));
        }
    }

    #[test]
    fn weierstrass_cubic_round_trip() {
        // y² = x³ − 2 has (3, 5) of infinite order
        let f = super::super::ternary::weierstrass_cubic(&qi(0), &qi(-2));
        let (e, map) = cubic_to_weierstrass(&f, &[qi(3), qi(5), qi(1)]).unwrap();
        assert_eq!(e.j, qi(0));
        let seed_img = map.forward(&[qi(3), qi(5), qi(1)]).unwrap();
        assert!(seed_img.is_infinity());
        let g = map.forward(&[qi(3), qi(-5), qi(1)]).unwrap();
        let mut q = g.clone();
        for _ in 0..6 {
            let back = map.backward(&q).unwrap();
            assert!(f.eval(&back).is_zero());
            assert_eq!(map.forward(&back).unwrap(), q);
            q = e.add(&q, &g).unwrap();
        }
    }

    #[test]
    fn singular_cubic_rejected() {
        let mut c: [Rational; 10] = std::array::from_fn(|_| qi(0));
        c[7] = qi(1);
        c[0] = qi(-1);
        c[2] = qi(-1);
        let nodal = TernaryCubic::new(c);
        assert!(matches!(cubic_to_weierstrass(&nodal, &[qi(0), qi(0), qi(1)]), Err(EllipticError::Singular)));
    }

    #[test]
    fn point_search_finds_fermat_points() {
        let pts: Vec<_> = rational_points(&fermat(), 3).collect();
        assert!(pts.contains(&[qi(-1), qi(1), qi(0)]));
        assert!(pts.contains(&[qi(0), qi(1), qi(1)]));
        assert!(pts.contains(&[qi(1), qi(0), qi(1)]));
    }
}
