use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ArithError, Field, MultiPoly, Rational, UniPoly};

/// Sylvester matrix for formal degrees `m = deg p`, `n = deg q`
/// (rows of p shifted n times, then rows of q shifted m times; highest
/// coefficient first). Coefficients beyond the actual degree are zero,
/// so this also works for specializations whose leading terms vanish.
pub fn sylvester_matrix<F: Field>(p: &[F], q: &[F], m: usize, n: usize, like: &F) -> Vec<Vec<F>> {
    let size = m + n;
    let z = like.zero_like();
    let coef = |v: &[F], i: usize| v.get(i).cloned().unwrap_or_else(|| z.clone());
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![z.clone(); size];
        for k in 0..=m {
            row[shift + k] = coef(p, m - k);
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![z.clone(); size];
        for k in 0..=n {
            row[shift + k] = coef(q, n - k);
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_bareiss<F: Field>(mut a: Vec<Vec<F>>, like: &F) -> F {
    let n = a.len();
    if n == 0 {
        return like.one_like();
    }
    let mut sign = false;
    let mut prev = like.one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return like.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].fmul(&a[k][k]).fsub(&a[i][k].fmul(&a[k][j]));
                a[i][j] = num.fdiv(&prev).expect("Bareiss pivot is nonzero");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.fneg()
    } else {
        d
    }
}

/// Determinant over ℚ: clear denominators row by row, then run Bareiss over
/// ℤ, where every division is exact and no gcds are taken.
pub(crate) fn det_rational(a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let out = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            scale *= l;
            out
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = Rational(BigRational::new(m[n - 1][n - 1].clone(), scale));
    if negate {
        -d
    } else {
        d
    }
}

/// Res(p, q) = lc(p)^deg q · ∏ q(α) over the roots α of p.
pub fn resultant<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> Result<F, ArithError> {
    if !p.compatible(q) {
        let dp = p.coeffs()[0].field_d().unwrap_or(0);
        let dq = q.coeffs()[0].field_d().unwrap_or(0);
        return Err(ArithError::IncompatibleField(dp, dq));
    }
    let like = match (p.lc(), q.lc()) {
        (None, None) => return Err(ArithError::BothZero),
        (Some(a), None) | (None, Some(a)) => return Ok(a.zero_like()),
        (Some(a), Some(_)) => a.clone(),
    };
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    if m == 0 {
        return Ok(p.coeffs()[0].fpow(n as u64));
    }
    if n == 0 {
        return Ok(q.coeffs()[0].fpow(m as u64));
    }
    let s = sylvester_matrix(p.coeffs(), q.coeffs(), m, n, &like);
    Ok(F::det(s, &like))
}

/// disc(p) = (−1)^(n(n−1)/2) Res(p, p′) / lc(p).
pub fn discriminant<F: Field>(p: &UniPoly<F>) -> Result<F, ArithError> {
    let n = match p.degree() {
        None | Some(0) => return Err(ArithError::ZeroPolynomial),
        Some(n) => n,
    };
    let r = resultant(p, &p.derivative())?;
    let r = r.fdiv(p.lc().unwrap()).ok_or(ArithError::DivisionByZero)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { r.fneg() } else { r })
}

/// Resultant of two polynomials over ℚ with explicitly given formal degrees.
fn resultant_formal(p: &[Rational], q: &[Rational], m: usize, n: usize) -> Rational {
    let like = Rational::zero();
    det_rational(sylvester_matrix(p, q, m, n, &like))
}

/// Newton interpolation through (x_i, y_i) with distinct x_i.
pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly<Rational> {
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        let lin = UniPoly::new(vec![-points[i].0.clone(), Rational::one()]);
        acc = acc.mul(&lin).add(&UniPoly::constant(dd[i].clone()));
    }
    acc
}

/// Res_y(a, b) for bivariate a(x, y), b(x, y), as a polynomial in x.
///
/// Uses the formal y-degrees, evaluated at enough integer x and
/// interpolated; deg_x Res ≤ deg a · deg b bounds the sample count.
pub fn resultant_in_last(a: &MultiPoly, b: &MultiPoly) -> UniPoly<Rational> {
    assert!(a.arity() == 2 && b.arity() == 2, "bivariate input expected");
    let (Some(m), Some(n)) = (a.degree_in(1), b.degree_in(1)) else {
        return UniPoly::zero();
    };
    let bound = (a.total_degree().unwrap() * b.total_degree().unwrap()) as i64;
    let coeffs = |p: &MultiPoly, x: &Rational| -> Vec<Rational> {
        p.coeffs_in(1).iter().map(|c| c.eval(&[x.clone(), Rational::zero()]).unwrap()).collect()
    };
    let pts: Vec<(Rational, Rational)> = (0..=bound)
        .map(|i| {
            let x = Rational::from(i);
            let r = resultant_formal(&coeffs(a, &x), &coeffs(b, &x), m as usize, n as usize);
            (x, r)
        })
        .collect();
    interpolate(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi, QuadElem};

    #[test]
    fn integer_determinant_matches_field_elimination() {
        let rows = |k: i64| -> Vec<Vec<Rational>> {
            (0..5).map(|i| (0..5).map(|j| q((i * 7 + j * 3 + k) % 11 - 5, (i + j + k) % 4 + 1)).collect()).collect()
        };
        for k in 0..20 {
            let a = rows(k);
            assert_eq!(det_rational(a.clone()), det_bareiss(a, &qi(0)), "k = {k}");
        }
        let singular = vec![vec![qi(1), q(1, 2)], vec![qi(2), qi(1)]];
        assert!(det_rational(singular).is_zero());
    }

    #[test]
    fn linear_resultant_is_sylvester_determinant() {
        let p = UniPoly::from_ints(&[-1, 1]);
        let q = UniPoly::from_ints(&[1, 1]);
        assert_eq!(resultant(&p, &q).unwrap(), qi(2));
    }

    #[test]
    fn shared_root_gives_zero() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(resultant(&p, &p).unwrap(), qi(0));
    }

    #[test]
    fn resultant_over_quadratic_field() {
        let p = UniPoly::from_ints(&[-2, 0, 1]).lift(3);
        let q = UniPoly::from_ints(&[0, -1, 0, 1]).lift(3);
        let r: QuadElem = resultant(&p, &q).unwrap();
        assert_eq!(r, QuadElem::from_rational(qi(-2), 3));
        let other = UniPoly::from_ints(&[1, 1]).lift(5);
        assert!(matches!(resultant(&p, &other), Err(ArithError::IncompatibleField(3, 5))));
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(discriminant(&UniPoly::from_ints(&[-1, 0, 1])).unwrap(), qi(4));
        assert_eq!(discriminant(&UniPoly::from_ints(&[1, 2, 1])).unwrap(), qi(0));
        // x^3 + px + q → −4p³ − 27q²
        assert_eq!(discriminant(&UniPoly::from_ints(&[-20, -21, 0, 1])).unwrap(), qi(4 * 9261 - 27 * 400));
        assert!(discriminant(&UniPoly::from_ints(&[5])).is_err());
    }
}
