use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::factor::squarefree_decompose;
use super::{ArithError, QuadElem, Rational, UniPoly};

/// Field generated by a set of roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDescriptor {
    Rational,
    Quadratic { d: i64 },
}

/// Roots (with multiplicity) of a polynomial of degree ≤ 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "field", rename_all = "snake_case")]
pub enum RootSet {
    Rational { roots: Vec<Rational> },
    Quadratic { d: i64, roots: Vec<QuadElem> },
}

impl RootSet {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            RootSet::Rational { .. } => FieldDescriptor::Rational,
            RootSet::Quadratic { d, .. } => FieldDescriptor::Quadratic { d: *d },
        }
    }

    pub fn len(&self) -> usize {
        match self {
            RootSet::Rational { roots } => roots.len(),
            RootSet::Quadratic { roots, .. } => roots.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Integer primitive multiple of p (positive leading coefficient).
fn integer_coeffs(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from(l.clone())).to_integer().unwrap()).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -c.clone();
        }
    }
    v
}

fn sign_changes(chain: &[UniPoly<Rational>], x: &Rational) -> usize {
    let mut last = 0;
    let mut n = 0;
    for p in chain {
        let s = p.eval(x).signum();
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

fn sturm_chain(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().unwrap_or(0) == 0 {
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).unwrap();
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

/// Integer roots of a monic integer polynomial by exact Sturm isolation at
/// half-integers (monic integer polynomials have no half-integer roots).
fn integer_roots_monic(h: &UniPoly<Rational>) -> Vec<BigInt> {
    if h.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = h.div_rem(&h.gcd(&h.derivative())).unwrap().0.monic();
    let chain = sturm_chain(&sf);
    let bound = h.coeffs().iter().map(|c| c.abs().floor()).max().unwrap() + BigInt::one();
    let half = Rational::new(1, 2);
    let at = |k: &BigInt| sign_changes(&chain, &(Rational::from(k.clone()) + &half));
    let mut out = Vec::new();
    // Stack of integer ranges [lo, hi], with V evaluated at lo−½ and hi+½.
    let lo = -bound.clone();
    let hi = bound;
    let mut stack = vec![(lo.clone(), hi.clone(), at(&(lo - 1)), at(&hi))];
    while let Some((lo, hi, vl, vh)) = stack.pop() {
        if vl <= vh {
            continue;
        }
        if lo == hi {
            if h.eval(&Rational::from(lo.clone())).is_zero() {
                out.push(lo);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let vm = at(&mid);
        stack.push((lo, mid.clone(), vl, vm));
        stack.push((mid + 1, hi, vm, vh));
    }
    out.sort();
    out
}

/// Distinct rational roots of p, ascending.
pub fn rational_roots(p: &UniPoly<Rational>) -> Vec<Rational> {
    let mut out = Vec::new();
    let Some(_) = p.degree() else { return out };
    let mut c = integer_coeffs(p);
    if c[0].is_zero() {
        out.push(Rational::zero());
        let k = c.iter().position(|x| !x.is_zero()).unwrap();
        c.drain(..k);
    }
    let n = c.len() - 1;
    if n > 0 {
        // h(v) = a_n^(n−1) g(v / a_n) is monic; its integer roots are a_n·r.
        let an = c[n].clone();
        let h: Vec<Rational> = (0..=n)
            .map(|i| if i == n { Rational::one() } else { Rational::from(&c[i] * num_traits::pow(an.clone(), n - 1 - i)) })
            .collect();
        for v in integer_roots_monic(&UniPoly::new(h)) {
            out.push(Rational::new(v, an.clone()));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn quadratic_roots(p: &UniPoly<Rational>) -> Result<RootSet, ArithError> {
    let (c, b, a) = (&p.coeffs()[0], &p.coeffs()[1], &p.coeffs()[2]);
    let disc = b * b - Rational::from(4) * a * c;
    let two_a = Rational::from(2) * a;
    if disc.is_zero() {
        let r = -b / &two_a;
        return Ok(RootSet::Rational { roots: vec![r.clone(), r] });
    }
    // disc = n/m = (n·m)/m², n·m = s²·k with k squarefree
    let nm = disc.numer() * disc.denom();
    let (s, k) = squarefree_decompose(&nm);
    let root_scale = Rational::new(s, disc.denom().clone());
    if k.is_one() {
        let mut roots = vec![(-b + &root_scale) / &two_a, (-b - &root_scale) / &two_a];
        roots.sort();
        return Ok(RootSet::Rational { roots });
    }
    let d = k.to_i64().ok_or_else(|| ArithError::Overflow(k.to_string()))?;
    let re = -b / &two_a;
    let im = (&root_scale / &two_a).abs();
    Ok(RootSet::Quadratic {
        d,
        roots: vec![QuadElem { a: re.clone(), b: im.clone(), d }, QuadElem { a: re, b: -im, d }],
    })
}

/// Roots of a polynomial of degree 1..=3 over ℚ or one quadratic extension.
///
/// Cubics must have a rational root; the quadratic cofactor may then split
/// over ℚ(√d). Order: rational roots ascending first, then a conjugate pair
/// with the positive √d part first.
pub fn quad_solve(p: &UniPoly<Rational>) -> Result<RootSet, ArithError> {
    match p.degree() {
        Some(1) => Ok(RootSet::Rational { roots: vec![-&p.coeffs()[0] / &p.coeffs()[1]] }),
        Some(2) => quadratic_roots(p),
        Some(3) => {
            let r = rational_roots(p).into_iter().next().ok_or_else(|| ArithError::UnsupportedSplitting(p.to_string()))?;
            let (cof, rem) = p.div_rem(&UniPoly::new(vec![-r.clone(), Rational::one()]))?;
            debug_assert!(rem.is_zero());
            Ok(match quadratic_roots(&cof)? {
                RootSet::Rational { mut roots } => {
                    roots.push(r);
                    roots.sort();
                    RootSet::Rational { roots }
                }
                RootSet::Quadratic { d, roots } => {
                    let mut all = vec![QuadElem::from_rational(r, d)];
                    all.extend(roots);
                    RootSet::Quadratic { d, roots: all }
                }
            })
        }
        Some(n) => Err(ArithError::Degree(n)),
        None => Err(ArithError::Degree(0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn rational_roots_with_denominators() {
        // (2x − 3)(3x + 1)(x − 5) x
        let p = UniPoly::from_ints(&[-3, 2])
            .mul(&UniPoly::from_ints(&[1, 3]))
            .mul(&UniPoly::from_ints(&[-5, 1]))
            .mul(&UniPoly::x());
        assert_eq!(rational_roots(&p), vec![q(-1, 3), qi(0), q(3, 2), qi(5)]);
        assert!(rational_roots(&UniPoly::from_ints(&[-2, 0, 1])).is_empty());
    }

    #[test]
    fn repeated_and_large_roots() {
        let r = UniPoly::from_ints(&[-1_000_000_007, 1]);
        let p = r.mul(&r).mul(&UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(rational_roots(&p), vec![qi(1_000_000_007)]);
    }

    #[test]
    fn irreducible_cubic_is_rejected() {
        let p = UniPoly::from_ints(&[-2, 0, 0, 1]);
        assert!(matches!(quad_solve(&p), Err(ArithError::UnsupportedSplitting(_))));
    }
}
