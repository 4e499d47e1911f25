//! Canonical heights via the local decomposition: on an integral model, a
//! point with everywhere nonsingular reduction has
//! ĥ(Q) = λ∞(Q) + log den(x(Q)); a general P is first multiplied into
//! that subgroup, ĥ(P) = ĥ(mP)/m².

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::curve::scale_point;
use super::{EPoint, EllipticError, WeierstrassCurve};
use crate::arith::{ln_bigint, Rational};

/// Multiples tried while looking for nonsingular reduction.
const MAX_MULTIPLE: u32 = 2000;

fn numer_abs(r: &Rational) -> BigInt {
    let n = r.numer().clone();
    if n < BigInt::zero() {
        -n
    } else {
        n
    }
}

/// Whether Q reduces to a nonsingular point modulo every prime (integral model).
fn nonsingular_reduction(e: &WeierstrassCurve, x: &Rational, y: &Rational) -> bool {
    let r = Rational::from;
    let fx = &e.a1 * y - r(3) * x * x - r(2) * &e.a2 * x - &e.a4;
    let fy = r(2) * y + &e.a1 * x + &e.a3;
    let mut g = numer_abs(&fx).gcd(&numer_abs(&fy)).gcd(&numer_abs(&e.discriminant));
    // primes dividing den(x) reduce to O
    let den = x.denom().clone();
    loop {
        let h = g.gcd(&den);
        if h.is_one() {
            break;
        }
        g /= h;
    }
    g.is_one()
}

/// Archimedean local height (without the (1/12)·log|Δ| term), by the
/// Tate–Silverman series.
fn archimedean(e: &WeierstrassCurve, x: &Rational) -> f64 {
    let [b2, b4, b6, b8] = e.b_invariants().map(|b| b.to_f64());
    let (b2p, b4p, b6p, b8p) = (b2 - 12.0, b4 - b2 + 6.0, b6 - 2.0 * b4 + b2 - 4.0, b8 - 3.0 * b6 + 3.0 * b4 - b2 + 3.0);
    let xf = x.to_f64();
    let (mut t, mut beta, mut mu) = if xf.abs() < 0.5 {
        let t = 1.0 / (xf + 1.0);
        (t, false, -t.abs().ln())
    } else {
        (1.0 / xf, true, x.ln_abs())
    };
    let mut f = 1.0;
    for _ in 0..60 {
        f /= 4.0;
        let (w, z, zw) = if beta {
            let w = b6 * t.powi(4) + 2.0 * b4 * t.powi(3) + b2 * t * t + 4.0 * t;
            let z = 1.0 - b4 * t * t - 2.0 * b6 * t.powi(3) - b8 * t.powi(4);
            (w, z, z + w)
        } else {
            let w = b6p * t.powi(4) + 2.0 * b4p * t.powi(3) + b2p * t * t + 4.0 * t;
            let z = 1.0 - b4p * t * t - 2.0 * b6p * t.powi(3) - b8p * t.powi(4);
            (w, z, z - w)
        };
        if w.abs() <= 2.0 * z.abs() {
            mu += f * z.abs().ln();
            t = w / z;
        } else {
            mu += f * zw.abs().ln();
            t = w / zw;
            beta = !beta;
        }
    }
    mu
}

/// Canonical height ĥ(P), normalized so that (0, 0) on
/// y² + y = x³ − x has ĥ ≈ 0.0511114082.
pub fn canonical_height(e: &WeierstrassCurve, p: &EPoint<Rational>) -> Result<f64, EllipticError> {
    let u = e.integral_scale();
    let ei = e.scaled(&u);
    let g = scale_point(p, &u);
    let mut q = g.clone();
    for m in 1..=MAX_MULTIPLE {
        match &q {
            EPoint::Infinity => return Ok(0.0),
            EPoint::Affine { x, y } if nonsingular_reduction(&ei, x, y) => {
                let h = archimedean(&ei, x) + ln_bigint(x.denom());
                return Ok(h / (m as f64 * m as f64));
            }
            _ => q = ei.add(&q, &g)?,
        }
    }
    Err(EllipticError::Degenerate(format!("no multiple ≤ {MAX_MULTIPLE} has nonsingular reduction")))
}

/// ⟨P, Q⟩ = (ĥ(P + Q) − ĥ(P) − ĥ(Q))/2.
pub fn height_pairing(e: &WeierstrassCurve, p: &EPoint<Rational>, q: &EPoint<Rational>) -> Result<f64, EllipticError> {
    let s = e.add(p, q)?;
    Ok((canonical_height(e, &s)? - canonical_height(e, p)? - canonical_height(e, q)?) / 2.0)
}

/// Determinant of the height-pairing Gram matrix.
pub fn regulator(e: &WeierstrassCurve, pts: &[EPoint<Rational>]) -> Result<f64, EllipticError> {
    let n = pts.len();
    let mut gram = vec![vec![0.0; n]; n];
    for i in 0..n {
        gram[i][i] = canonical_height(e, &pts[i])?;
        for j in 0..i {
            let v = height_pairing(e, &pts[i], &pts[j])?;
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    Ok(det_f64(gram))
}

fn det_f64(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).unwrap();
        if a[piv][k] == 0.0 {
            return 0.0;
        }
        if piv != k {
            a.swap(piv, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let r = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= r * a[k][j];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    fn curve_37a() -> WeierstrassCurve {
        WeierstrassCurve::new([qi(0), qi(0), qi(1), qi(-1), qi(0)]).unwrap()
    }

    #[test]
    fn conductor_37_generator() {
        let h = canonical_height(&curve_37a(), &EPoint::Affine { x: qi(0), y: qi(0) }).unwrap();
        assert!((h - 0.0511114082).abs() < 1e-9, "{h}");
    }

    #[test]
    fn quadratic_in_multiples() {
        let e = curve_37a();
        let p = EPoint::Affine { x: qi(0), y: qi(0) };
        let h1 = canonical_height(&e, &p).unwrap();
        for k in 2..9 {
            let hk = canonical_height(&e, &e.mul(k, &p).unwrap()).unwrap();
            assert!((hk - (k * k) as f64 * h1).abs() < 1e-8, "{k}: {hk}");
        }
    }

    #[test]
    fn model_independence() {
        let e = curve_37a();
        let p = EPoint::Affine { x: qi(0), y: qi(0) };
        let u = qi(6);
        let h = canonical_height(&e.scaled(&u), &scale_point(&p, &u)).unwrap();
        assert!((h - canonical_height(&e, &p).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn torsion_has_zero_height() {
        let e = WeierstrassCurve::short(qi(-1), qi(0)).unwrap();
        assert_eq!(canonical_height(&e, &EPoint::Affine { x: qi(0), y: qi(0) }).unwrap(), 0.0);
        assert_eq!(canonical_height(&e, &EPoint::Infinity).unwrap(), 0.0);
    }
}
