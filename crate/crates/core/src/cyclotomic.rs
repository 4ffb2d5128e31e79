//! Exact arithmetic in `Q(zeta_e)`.
//!
//! Elements are stored as coefficient vectors in the power basis
//! `1, zeta, ..., zeta^(phi(e)-1)` and reduced modulo the cyclotomic
//! polynomial, so the ring is a field and Gaussian elimination works.
//! Order `0` denotes a bare rational that has not been tied to a field yet;
//! it is promoted on first contact with a genuine element.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::scalar::{BigRational, Field};

/// Integer coefficients of `Phi_e`, lowest degree first.
pub fn cyclotomic_poly(e: u32) -> Vec<i64> {
    assert!(e >= 1);
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&e) {
        return v.clone();
    }
    // x^e - 1 divided by Phi_k for every proper divisor k.
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for k in 1..e {
        if e.is_multiple_of(k) {
            num = div_monic(&num, &cyclotomic_poly(k));
        }
    }
    cache.lock().unwrap().insert(e, num.clone());
    num
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(e: u32) -> usize {
    cyclotomic_poly(e).len() - 1
}

#[derive(Clone)]
pub struct Cyclotomic<S = BigRational> {
    order: u32,
    coeffs: Vec<S>,
}

impl<S: Field> Cyclotomic<S> {
    pub fn rational(c: S) -> Self {
        Cyclotomic { order: 0, coeffs: vec![c] }
    }

    /// `zeta_e^k` for any integer `k`.
    pub fn zeta_pow(e: u32, k: i64) -> Self {
        let k = k.rem_euclid(e as i64) as usize;
        let mut raw = vec![S::zero(); k + 1];
        raw[k] = S::one();
        Self::from_raw(e, raw)
    }

    pub fn zeta(e: u32) -> Self {
        Self::zeta_pow(e, 1)
    }

    /// Reduce an arbitrary coefficient vector modulo `Phi_e`.
    pub fn from_raw(e: u32, mut raw: Vec<S>) -> Self {
        let phi = cyclotomic_poly(e);
        let n = phi.len() - 1;
        while raw.len() > n {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - n;
            for (j, &c) in phi.iter().take(n).enumerate() {
                if c != 0 {
                    raw[shift + j] = raw[shift + j].clone() - top.clone() * S::from_i64(c);
                }
            }
        }
        raw.resize(n, S::zero());
        Cyclotomic { order: e, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    fn promote(&self, e: u32) -> Self {
        if self.order == e {
            return self.clone();
        }
        assert_eq!(self.order, 0, "mixing cyclotomic fields of orders {} and {e}", self.order);
        let mut raw = vec![S::zero(); euler_phi(e).max(1)];
        raw[0] = self.coeffs[0].clone();
        Cyclotomic { order: e, coeffs: raw }
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else if a.order == 0 {
            (a.promote(b.order), b.clone())
        } else {
            (a.clone(), b.promote(a.order))
        }
    }

    /// Image under `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        if self.order == 0 {
            return self.clone();
        }
        let e = self.order as usize;
        let mut raw = vec![S::zero(); e];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = (e - i) % e;
            raw[j] = raw[j].clone() + c.clone();
        }
        Self::from_raw(self.order, raw)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, c: &S) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn as_rational(&self) -> Option<S> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if let Some(c) = self.as_rational() {
            return Cyclotomic { order: self.order, coeffs: self.promote_len(S::one() / c) };
        }
        // Solve (multiplication by self) * x = 1 in the power basis.
        let e = self.order;
        let n = self.coeffs.len();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let basis = Self::zeta_pow(e, j as i64);
            cols.push((self.clone() * basis).coeffs);
        }
        let mut a: Vec<Vec<S>> = (0..n)
            .map(|i| {
                let mut row: Vec<S> = (0..n).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { S::one() } else { S::zero() });
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular multiplication map");
            a.swap(c, p);
            let inv = S::one() / a[c][c].clone();
            for x in a[c].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    let pivot = a[c].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot).skip(c) {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
        }
        Cyclotomic { order: e, coeffs: a.into_iter().map(|row| row[n].clone()).collect() }
    }

    fn promote_len(&self, c: S) -> Vec<S> {
        let mut v = vec![S::zero(); self.coeffs.len()];
        v[0] = c;
        v
    }
}

impl<S: Field> PartialEq for Cyclotomic<S> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl<S: Field> fmt::Debug for Cyclotomic<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]{:?}", self.order, self.coeffs)
    }
}

impl<S: Field + fmt::Display> fmt::Display for Cyclotomic<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_rational() {
            return write!(f, "{c}");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Field> Zero for Cyclotomic<S> {
    fn zero() -> Self {
        Self::rational(S::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<S: Field> One for Cyclotomic<S> {
    fn one() -> Self {
        Self::rational(S::one())
    }
}

impl<S: Field> Add for Cyclotomic<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = Self::unify(&self, &rhs);
        Cyclotomic { order: a.order, coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl<S: Field> Sub for Cyclotomic<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Field> Neg for Cyclotomic<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.into_iter().map(|x| -x).collect() }
    }
}

impl<S: Field> Mul for Cyclotomic<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if let Some(c) = rhs.as_rational() {
            if rhs.order == 0 || self.order == rhs.order {
                return self.scale(&c);
            }
        }
        if self.order == 0 {
            return rhs.scale(&self.coeffs[0]);
        }
        let (a, b) = Self::unify(&self, &rhs);
        let n = a.coeffs.len();
        let mut raw = vec![S::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = raw[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        Self::from_raw(a.order, raw)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<S: Field> Div for Cyclotomic<S> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        if rhs.order == 0 {
            let inv = S::one() / rhs.coeffs[0].clone();
            return self.scale(&inv);
        }
        self * rhs.inverse()
    }
}

impl<S: Field> Field for Cyclotomic<S> {
    fn from_i64(n: i64) -> Self {
        Self::rational(S::from_i64(n))
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.as_rational().and_then(|c| c.to_rational())
    }
}
