use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArithError, Field, Rational, UniPoly};

/// Sparse multivariate polynomial over ℚ.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MultiRepr", into = "MultiRepr")]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    exp: Vec<u32>,
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct MultiRepr {
    arity: usize,
    terms: Vec<Term>,
}

impl TryFrom<MultiRepr> for MultiPoly {
    type Error = ArithError;
    fn try_from(r: MultiRepr) -> Result<Self, ArithError> {
        let mut p = MultiPoly::zero(r.arity);
        for t in r.terms {
            if t.exp.len() != r.arity {
                return Err(ArithError::Arity { expected: r.arity, got: t.exp.len() });
            }
            p.add_term(t.exp, t.coef);
        }
        Ok(p)
    }
}

impl From<MultiPoly> for MultiRepr {
    fn from(p: MultiPoly) -> Self {
        MultiRepr { arity: p.arity, terms: p.terms.into_iter().map(|(exp, coef)| Term { exp, coef }).collect() }
    }
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    /// The i-th coordinate function.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        let mut p = MultiPoly::zero(arity);
        p.add_term(e, Rational::one());
        p
    }

    /// Builds from (coefficient, exponents) pairs.
    pub fn from_terms(arity: usize, terms: &[(Rational, &[u32])]) -> Self {
        let mut p = MultiPoly::zero(arity);
        for (c, e) in terms {
            assert_eq!(e.len(), arity);
            p.add_term(e.to_vec(), c.clone());
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_uni(p: &UniPoly<Rational>, arity: usize, var: usize) -> Self {
        let mut out = MultiPoly::zero(arity);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; arity];
            e[var] = i as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity, "arity mismatch");
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity, "arity mismatch");
        let mut p = MultiPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::constant(self.arity, Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ArithError> {
        if point.len() != self.arity {
            return Err(ArithError::Arity { expected: self.arity, got: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * x.pow(k)))
            .sum())
    }

    /// Evaluation at a point with coordinates in ℚ or a quadratic field.
    pub fn eval_in<F: Field>(&self, point: &[F]) -> Result<F, ArithError> {
        if point.len() != self.arity || point.is_empty() {
            return Err(ArithError::Arity { expected: self.arity, got: point.len() });
        }
        let like = &point[0];
        Ok(self.terms.iter().fold(like.zero_like(), |acc, (e, c)| {
            let t = e.iter().zip(point).fold(like.from_rational_like(c), |t, (&k, x)| t.fmul(&x.fpow(k as u64)));
            acc.fadd(&t)
        }))
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(c.to_f64(), |acc, (&k, x)| acc * x.powi(k as i32)))
            .sum()
    }

    /// Partial derivative in `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut p = MultiPoly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut e2 = e.clone();
                e2[var] -= 1;
                p.add_term(e2, c * Rational::from(e[var] as i64));
            }
        }
        p
    }

    /// Substitutes each variable i by `images[i]` (all of a common arity).
    pub fn compose(&self, images: &[MultiPoly]) -> Result<Self, ArithError> {
        if images.len() != self.arity {
            return Err(ArithError::Arity { expected: self.arity, got: images.len() });
        }
        let out_arity = images.first().map_or(0, |p| p.arity);
        let mut out = MultiPoly::zero(out_arity);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(out_arity, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&img.pow(k));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Fixes the variables given as `Some(value)`; the arity is preserved.
    pub fn partial_eval(&self, values: &[Option<Rational>]) -> Result<Self, ArithError> {
        if values.len() != self.arity {
            return Err(ArithError::Arity { expected: self.arity, got: values.len() });
        }
        let mut p = MultiPoly::zero(self.arity);
        for (e, c) in &self.terms {
            let mut c = c.clone();
            let mut e2 = e.clone();
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    c *= v.pow(e[i]);
                    e2[i] = 0;
                }
            }
            p.add_term(e2, c);
        }
        Ok(p)
    }

    /// Univariate view in `var`; `None` if any other variable occurs.
    pub fn to_uni(&self, var: usize) -> Option<UniPoly<Rational>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut v = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            v[e[var] as usize] += c;
        }
        Some(UniPoly::new(v))
    }

    /// Writes self = Σ_k c_k · var^k; returns the c_k (free of `var`).
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![MultiPoly::zero(self.arity); deg];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            out[e[var] as usize].add_term(e2, c.clone());
        }
        out
    }

    /// Homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == deg).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("v{i}") } else { format!("v{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn family_polynomial_evaluates() {
        // b3 x^3 + b1 x + 10 in (b3, b1, x)
        let p = MultiPoly::from_terms(3, &[(qi(1), &[1, 0, 3]), (qi(1), &[0, 1, 1]), (qi(10), &[0, 0, 0])]);
        assert_eq!(p.eval(&[qi(1), qi(0), qi(1)]).unwrap(), qi(11));
        assert_eq!(MultiPoly::zero(3).eval(&[qi(5), qi(6), qi(7)]).unwrap(), qi(0));
        assert!(p.eval(&[qi(1)]).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let s = x.add(&y).mul(&x.sub(&y));
        let t = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(s, t);
        assert!(s.sub(&t).is_zero());
    }
}
