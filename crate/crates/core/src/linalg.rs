//! Dense matrices over exact rings.
//!
//! Field algorithms (row reduction, inverse, kernel) work for any [`Field`].
//! Matrices over [`Poly`] get fraction-free determinant and solve, a column
//! Hermite form over `k[t]` and lattice saturation.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::scalar::{Field, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vec<T>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// Keep the first `n` columns.
    pub fn take_cols(&self, n: usize) -> Self {
        Self::from_fn(self.rows, n, |r, c| self[(r, c)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(T::zero(), |acc, c| {
                    if v[c].is_zero() {
                        acc
                    } else {
                        acc + self[(r, c)].clone() * v[c].clone()
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self[(r / rhs.rows, c / rhs.cols)].clone() * rhs[(r % rhs.rows, c % rhs.cols)].clone()
        })
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = F::one() / m[(row, c)].clone();
            for k in c..m.cols {
                m[(row, k)] = m[(row, k)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, c)].is_zero() {
                    let f = m[(r, c)].clone();
                    for k in c..m.cols {
                        if !m[(row, k)].is_zero() {
                            m[(r, k)] = m[(r, k)].clone() - f.clone() * m[(row, k)].clone();
                        }
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            out.push(v);
        }
        out
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            for r in c + 1..m.rows {
                if !m[(r, c)].is_zero() {
                    let f = m[(r, c)].clone() / piv.clone();
                    for k in c..m.cols {
                        m[(r, k)] = m[(r, k)].clone() - f.clone() * m[(c, k)].clone();
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Indices of a maximal set of linearly independent rows, greedily.
    pub fn independent_rows(&self) -> Vec<usize> {
        let (_, piv) = self.transpose().rref();
        piv
    }
}

impl<S: Field> Matrix<Poly<S>> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det_bareiss(&self) -> Poly<S> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = Poly::<S>::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).min_by_key(|&r| pivot_weight(&m[(r, k)])) else {
                return Poly::zero();
            };
            if m[(p, k)].is_zero() {
                return Poly::zero();
            }
            if p != k {
                m.swap_rows(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v.exact_div(&prev).expect("Bareiss division must be exact");
                }
                m[(i, k)] = Poly::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Fraction-free Gauss-Jordan on `[self | rhs]` for square nonsingular
    /// `self`. Returns `(D, N)` with `self * N = D * rhs` and `D = det(self)`.
    pub fn fraction_free_solve(&self, rhs: &Self) -> Option<(Poly<S>, Self)> {
        assert!(self.is_square());
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let w = n + rhs.cols;
        let mut m = Self::from_fn(n, w, |r, c| if c < n { self[(r, c)].clone() } else { rhs[(r, c - n)].clone() });
        let mut prev = Poly::<S>::one();
        for k in 0..n {
            let p = (k..n).filter(|&r| !m[(r, k)].is_zero()).min_by_key(|&r| pivot_weight(&m[(r, k)]))?;
            m.swap_rows(p, k);
            let piv = m[(k, k)].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let a = m[(i, k)].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let v = &piv * &m[(i, j)] - &a * &m[(k, j)];
                    m[(i, j)] = v.exact_div(&prev).expect("fraction-free division must be exact");
                }
                m[(i, k)] = Poly::zero();
            }
            prev = piv;
        }
        // Every diagonal entry now equals the last pivot, which is +-det.
        let d = prev;
        let n_mat = Self::from_fn(n, rhs.cols, |r, c| m[(r, n + c)].clone());
        Some((d, n_mat))
    }

    /// Column Hermite-style basis over `k[t]` of the lattice spanned by the
    /// columns. The result has full column rank and is lower echelon: column
    /// `j` has its first nonzero entry strictly below that of column `j-1`.
    pub fn column_echelon_basis(&self) -> Self {
        for x in &self.data {
            assert!(x.is_polynomial(), "lattice entries must lie in k[t]");
        }
        let mut cols: Vec<Vec<Poly<S>>> = self.to_cols().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())).collect();
        let mut basis: Vec<Vec<Poly<S>>> = Vec::new();
        for r in 0..self.rows {
            loop {
                let live: Vec<usize> = (0..cols.len()).filter(|&j| !cols[j][r].is_zero()).collect();
                if live.len() <= 1 {
                    break;
                }
                let piv = *live.iter().min_by_key(|&&j| cols[j][r].degree().unwrap()).unwrap();
                let pv = cols[piv][r].clone();
                let pcol = cols[piv].clone();
                for &j in &live {
                    if j == piv {
                        continue;
                    }
                    let (q, _) = cols[j][r].div_rem(&pv);
                    if q.is_zero() {
                        continue;
                    }
                    for (x, y) in cols[j].iter_mut().zip(&pcol) {
                        if !y.is_zero() {
                            *x = x.clone() - &q * y;
                        }
                    }
                }
            }
            if let Some(j) = (0..cols.len()).find(|&j| !cols[j][r].is_zero()) {
                let mut c = cols.swap_remove(j);
                let lc = c[r].leading_coeff().unwrap().clone();
                if lc != S::one() {
                    let inv = S::one() / lc;
                    for x in c.iter_mut() {
                        *x = x.scale(&inv);
                    }
                }
                basis.push(c);
            }
            cols.retain(|c| c.iter().any(|x| !x.is_zero()));
        }
        assert!(cols.is_empty(), "echelon reduction left stray columns");
        if basis.is_empty() {
            return Self::zeros(self.rows, 0);
        }
        Self::from_cols(basis)
    }

    /// Basis of `(span over k(t)) ∩ k[t]^n` for the column lattice.
    ///
    /// Row operations `U` with `U * B = [H; 0]` are recorded as their inverse;
    /// the first `rank` columns of `U^-1` span the saturation.
    pub fn saturate(&self) -> Self {
        for x in &self.data {
            assert!(x.is_polynomial(), "lattice entries must lie in k[t]");
        }
        let n = self.rows;
        let mut b = self.clone();
        let mut uinv = Self::identity(n);
        let mut rank = 0;
        for c in 0..b.cols {
            if rank == n {
                break;
            }
            loop {
                let live: Vec<usize> = (rank..n).filter(|&r| !b[(r, c)].is_zero()).collect();
                if live.len() <= 1 {
                    break;
                }
                let piv = *live.iter().min_by_key(|&&r| b[(r, c)].degree().unwrap()).unwrap();
                let pv = b[(piv, c)].clone();
                for &r in &live {
                    if r == piv {
                        continue;
                    }
                    let (q, _) = b[(r, c)].div_rem(&pv);
                    if q.is_zero() {
                        continue;
                    }
                    // row_r -= q row_piv; inverse op: col_piv += q col_r on U^-1.
                    for k in 0..b.cols {
                        if !b[(piv, k)].is_zero() {
                            b[(r, k)] = b[(r, k)].clone() - &q * &b[(piv, k)];
                        }
                    }
                    for k in 0..n {
                        if !uinv[(k, r)].is_zero() {
                            uinv[(k, piv)] = uinv[(k, piv)].clone() + &q * &uinv[(k, r)];
                        }
                    }
                }
            }
            if let Some(p) = (rank..n).find(|&r| !b[(r, c)].is_zero()) {
                b.swap_rows(rank, p);
                uinv.swap_cols(rank, p);
                rank += 1;
            }
        }
        uinv.take_cols(rank)
    }
}

fn pivot_weight<S: Field>(p: &Poly<S>) -> (usize, usize) {
    if p.is_zero() {
        (usize::MAX, usize::MAX)
    } else {
        (p.num_terms(), (p.degree().unwrap() - p.valuation().unwrap()) as usize)
    }
}
