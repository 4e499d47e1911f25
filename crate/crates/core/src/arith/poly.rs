use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArithError, Field, QuadElem, Rational};

/// Dense univariate polynomial, coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de> + Field"))]
#[serde(from = "Vec<F>", into = "Vec<F>")]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> From<Vec<F>> for UniPoly<F> {
    fn from(v: Vec<F>) -> Self {
        UniPoly::new(v)
    }
}

impl<F: Field> From<UniPoly<F>> for Vec<F> {
    fn from(p: UniPoly<F>) -> Self {
        p.coeffs
    }
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        UniPoly::new(vec![c])
    }

    /// c·x^k.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        UniPoly::new(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for deg 0 = −∞.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of x^i (zero beyond the degree, built like `like`).
    pub fn coeff_or(&self, i: usize, like: &F) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| like.zero_like())
    }

    fn sample(&self) -> Option<&F> {
        self.coeffs.first()
    }

    pub fn compatible(&self, o: &Self) -> bool {
        match (self.sample(), o.sample()) {
            (Some(a), Some(b)) => a.compatible(b),
            _ => true,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.fadd(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::new(v)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.fneg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].fadd(&a.fmul(b));
            }
        }
        UniPoly::new(v)
    }

    pub fn scale(&self, c: &F) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.fmul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let Some(s) = self.sample() else {
            assert!(e > 0, "0^0 has no field sample");
            return UniPoly::zero();
        };
        let mut acc = UniPoly::constant(s.one_like());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.fmul(x).fadd(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.fmul(&c.from_rational_like(&Rational::from(i as i64))))
                .collect(),
        )
    }

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let inv = d.lc().unwrap().finv().ok_or(ArithError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let z = inv.zero_like();
        let mut qv = vec![z; r.len() - dd];
        for k in (0..qv.len()).rev() {
            let c = r[k + dd].fmul(&inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].fsub(&c.fmul(dc));
                }
            }
            qv[k] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(qv), UniPoly::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(l) => self.scale(&l.finv().unwrap()),
            None => self.clone(),
        }
    }

    /// Monic gcd (zero iff both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p(x + c).
    pub fn shift(&self, c: &F) -> Self {
        self.compose(&UniPoly::new(vec![c.clone(), c.one_like()]))
    }

    /// p(g(x)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// x^n p(1/x) for a formal degree n ≥ deg p.
    pub fn reverse(&self, n: usize) -> Self {
        let like = match self.sample() {
            Some(s) => s.clone(),
            None => return UniPoly::zero(),
        };
        UniPoly::new((0..=n).map(|i| self.coeff_or(n - i, &like)).collect())
    }
}

impl UniPoly<Rational> {
    pub fn from_ints(v: &[i64]) -> Self {
        UniPoly::new(v.iter().map(|&c| Rational::from(c)).collect())
    }

    /// The polynomial x.
    pub fn x() -> Self {
        UniPoly::from_ints(&[0, 1])
    }

    /// Embeds into ℚ(√d)[x].
    pub fn lift(&self, d: i64) -> UniPoly<QuadElem> {
        UniPoly::new(self.coeffs.iter().map(|c| QuadElem::from_rational(c.clone(), d)).collect())
    }

    pub fn eval_quad(&self, x: &QuadElem) -> QuadElem {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.fmul(x).fadd(&QuadElem::from_rational(c.clone(), x.d));
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[1, 2, 3, 4, 5]);
        let b = UniPoly::from_ints(&[-1, 0, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_finds_common_factor() {
        let f = UniPoly::from_ints(&[-1, 1]);
        let a = f.mul(&UniPoly::from_ints(&[2, 0, 1]));
        let b = f.mul(&UniPoly::from_ints(&[5, 1]));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn shift_and_eval_agree() {
        let p = UniPoly::from_ints(&[3, -1, 0, 2]);
        let s = p.shift(&qi(2));
        for x in -3..4 {
            assert_eq!(s.eval(&qi(x)), p.eval(&qi(x + 2)));
        }
    }
}
