use std::fmt;

use num_traits::Zero;

use super::split::Cyclo;
use crate::poly::Poly;
use crate::scalar::{rat, BigRational};

/// A Laurent polynomial in `u = t^{1/e}` with coefficients in `Q(ζ_e)`.
#[derive(Clone, PartialEq)]
pub struct PuiseuxPoly {
    e: usize,
    inner: Poly<Cyclo>,
}

impl PuiseuxPoly {
    pub fn new(e: usize, inner: Poly<Cyclo>) -> Self {
        PuiseuxPoly { e, inner }
    }

    /// Substitutes `t = u^e`.
    pub fn from_t_poly(e: usize, p: &Poly<Cyclo>) -> Self {
        PuiseuxPoly { e, inner: p.compose_power(e as i64) }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn as_u_poly(&self) -> &Poly<Cyclo> {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// `(lowest u-exponent) / e`.
    pub fn t_valuation(&self) -> Option<BigRational> {
        self.inner.valuation().map(|v| rat(v, self.e as i64))
    }

    /// Back to a polynomial in `t` when every exponent is a multiple of `e`.
    pub fn to_t_poly(&self) -> Option<Poly<Cyclo>> {
        let e = self.e as i64;
        let mut out = Poly::zero();
        for (k, c) in self.inner.terms() {
            if k % e != 0 {
                return None;
            }
            out.add_term(k / e, c.clone());
        }
        Some(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        PuiseuxPoly { e: self.e, inner: self.inner.clone() + other.inner.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        PuiseuxPoly { e: self.e, inner: &self.inner * &other.inner }
    }
}

impl fmt::Debug for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [u = t^(1/{})]", self.inner, self.e)
    }
}
