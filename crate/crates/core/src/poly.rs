//! Sparse Laurent polynomials in one variable.
//!
//! Exponents are `i64` so the same type covers `k[t]`, `k[t^-1]` and the
//! Laurent ring in which lattices at zero and at infinity are compared.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    terms: BTreeMap<i64, S>,
}

impl<S: Field> Poly<S> {
    pub fn monomial(c: S, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, S)>>(it: I) -> Self {
        let mut p = Poly { terms: BTreeMap::new() };
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> S {
        self.terms.get(&exp).cloned().unwrap_or_else(S::zero)
    }

    /// Lowest exponent present, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.terms.values().next_back()
    }

    pub fn trailing_coeff(&self) -> Option<&S> {
        self.terms.values().next()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    /// Zero or with no negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Poly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect() }
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<T: Field>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Substitute `var -> var^k` (k may be negative).
    pub fn compose_power(&self, k: i64) -> Self {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Euclidean division by degree: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let db = rhs.degree().expect("division by zero polynomial");
        let lb = rhs.leading_coeff().unwrap().clone();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.leading_coeff().unwrap().clone() / lb.clone();
            let step = Self::monomial(c, dr - db);
            r = r - step.clone() * rhs.clone();
            q = q + step;
        }
        (q, r)
    }

    /// Exact quotient in the Laurent ring, `None` when `rhs` does not divide.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if rhs.is_monomial() {
            let (k, c) = rhs.terms().next().unwrap();
            let inv = S::one() / c.clone();
            return Some(self.shift(-k).scale(&inv));
        }
        let va = self.valuation().unwrap();
        let vb = rhs.valuation().unwrap();
        let (q, r) = self.shift(-va).div_rem(&rhs.shift(-vb));
        if r.is_zero() {
            Some(q.shift(va - vb))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &S) -> S
    where
        S: Clone,
    {
        let mut acc = S::zero();
        for (e, c) in self.terms() {
            assert!(e >= 0, "eval of a Laurent term with negative exponent");
            let mut p = S::one();
            for _ in 0..e {
                p = p * x.clone();
            }
            acc = acc + c.clone() * p;
        }
        acc
    }
}

impl<S: Field> Zero for Poly<S> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Field> One for Poly<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Field> Add for Poly<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<S: Field> Sub for Poly<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<S: Field> Neg for Poly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<S: Field> Mul for Poly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a, S: Field> Mul<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &'a Poly<S>) -> Poly<S> {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<S: Field + fmt::Display> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, BigRational};

    type P = Poly<BigRational>;

    fn p(cs: &[i64]) -> P {
        P::from_terms(cs.iter().enumerate().map(|(i, &c)| (i as i64, rat_int(c))))
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[1, 2, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.exact_div(&b), Some(b.clone()));
        let (q, r) = p(&[2, 0, 1]).div_rem(&b);
        assert_eq!(q * b.clone() + r.clone(), p(&[2, 0, 1]));
        assert!(r.degree().unwrap_or(-1) < 1);
        assert_eq!(p(&[1, 0, 1]).exact_div(&b), None);
    }

    #[test]
    fn laurent_exact_division() {
        let a = p(&[1, 1]).shift(-3);
        let b = p(&[1, 1]).shift(2);
        assert_eq!(a.exact_div(&b), Some(P::monomial(rat_int(1), -5)));
        assert_eq!(a.valuation(), Some(-3));
        assert_eq!(a.degree(), Some(-2));
    }
}
