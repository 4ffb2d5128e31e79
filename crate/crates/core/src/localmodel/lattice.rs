use num_traits::{One, Zero};
use serde::Serialize;

use super::split::{Cyclo, LocalModel, SplitElement};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::scalar::{rat_int, BigRational};
use crate::tableaux::{dimension, Partition};

type QPoly = Poly<BigRational>;

/// Which base ring the lattice is a module over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Over `k[t]`.
    Zero,
    /// Over `k[t^{-1}]`.
    Infinity,
}

/// A basis of homogeneous elements.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    pub e: usize,
    pub side: Side,
    pub elements: Vec<SplitElement>,
}

/// Incremental row echelon form over `Q(ζ)`.
struct Echelon {
    rows: Vec<(usize, Vec<Cyclo>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<Cyclo>) -> Vec<Cyclo> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.clone() - c.clone() * y.clone();
                    }
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether it was new.
    fn insert(&mut self, v: Vec<Cyclo>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Cyclo::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x = x.clone() - c.clone() * y.clone();
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn contains(&self, v: Vec<Cyclo>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

fn to_zero_side(side: Side, x: &SplitElement) -> SplitElement {
    match side {
        Side::Zero => x.clone(),
        Side::Infinity => x.conj(),
    }
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    /// `u`-degrees of the basis elements.
    pub fn degrees(&self) -> Vec<i64> {
        self.elements.iter().map(|x| x.homogeneous_degree().unwrap_or(0)).collect()
    }

    /// A homogeneous basis of the module spanned by homogeneous generators.
    /// Generators are taken in increasing degree per residue class, and one
    /// is kept when it is new modulo the span of those before it.
    pub fn span(model: &LocalModel, gens: &[SplitElement], side: Side) -> Result<Self> {
        let mut graded: Vec<(i64, Vec<Cyclo>)> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let z = to_zero_side(side, g);
            let k = z.homogeneous_degree().ok_or_else(|| Error::Validation("lattice generators must be homogeneous".into()))?;
            graded.push((k, model.residue_coords(k, &z.parts()[&k])?));
        }
        graded.sort_by_key(|(k, _)| *k);
        let e = model.e() as i64;
        let mut spaces: Vec<Echelon> = (0..e).map(|_| Echelon::new()).collect();
        let mut elements = Vec::new();
        for (k, a) in graded {
            if spaces[k.rem_euclid(e) as usize].insert(a.clone()) {
                let x = model.element_from_residue_coords(k, &a);
                elements.push(to_zero_side(side, &x));
            }
        }
        Ok(LatticeBasis { e: model.e(), side, elements })
    }

    /// Whether `x` lies in the lattice.
    pub fn contains(&self, model: &LocalModel, x: &SplitElement) -> Result<bool> {
        let e = model.e() as i64;
        let z = to_zero_side(self.side, x);
        let basis: Vec<(i64, Vec<Cyclo>)> = self
            .elements
            .iter()
            .map(|b| {
                let b = to_zero_side(self.side, b);
                let k = b.homogeneous_degree().expect("basis elements are homogeneous");
                Ok((k, model.residue_coords(k, &b.parts()[&k])?))
            })
            .collect::<Result<_>>()?;
        for (&k, v) in z.parts() {
            let a = model.residue_coords(k, v)?;
            let mut ech = Echelon::new();
            for (kb, ab) in &basis {
                if (kb - k).rem_euclid(e) == 0 && *kb <= k {
                    ech.insert(ab.clone());
                }
            }
            if !ech.contains(a) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_lattice(&self, model: &LocalModel, other: &Self) -> Result<bool> {
        if self.rank() != other.rank() || self.side != other.side {
            return Ok(false);
        }
        for x in &other.elements {
            if !self.contains(model, x)? {
                return Ok(false);
            }
        }
        for x in &self.elements {
            if !other.contains(model, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(k(t)·L) ∩ R_e` (or `R_{e,∞}` on the infinity side), with each basis
    /// vector placed in the lowest degree that keeps it integral.
    pub fn saturate(&self, model: &LocalModel) -> Result<Self> {
        let e = model.e() as i64;
        let mut by_residue: Vec<Vec<Vec<Cyclo>>> = vec![Vec::new(); e as usize];
        for b in &self.elements {
            let z = to_zero_side(self.side, b);
            let k = z.homogeneous_degree().expect("basis elements are homogeneous");
            by_residue[k.rem_euclid(e) as usize].push(model.residue_coords(k, &z.parts()[&k])?);
        }
        let mut elements = Vec::new();
        for (r, vecs) in by_residue.into_iter().enumerate() {
            let members = model.residue_members(r as i64).to_vec();
            let degree_of = |j: usize| model.staircase()[members[j]].iter().sum::<usize>() as i64;
            // Echelon with columns in decreasing degree: each pivot is the
            // top-degree coordinate of its row.
            let n = members.len();
            let order: Vec<usize> = (0..n).rev().collect();
            let mut ech = Echelon::new();
            for v in vecs {
                ech.insert(order.iter().map(|&j| v[j].clone()).collect());
            }
            for (p, row) in ech.rows {
                let mut a = vec![Cyclo::zero(); n];
                for (pos, &j) in order.iter().enumerate() {
                    a[j] = row[pos].clone();
                }
                let k = degree_of(order[p]);
                elements.push(to_zero_side(self.side, &model.element_from_residue_coords(k, &a)));
            }
        }
        Ok(LatticeBasis { e: self.e, side: self.side, elements })
    }
}

/// The staircase monomials: a basis of `R_e` over `k[t]`.
pub fn monomial_lattice(model: &LocalModel) -> LatticeBasis {
    LatticeBasis { e: model.e(), side: Side::Zero, elements: model.staircase().iter().map(|l| model.monomial(l)).collect() }
}

/// `R_e ∩ W_λ`, spanned by the projections of the staircase monomials.
pub fn isotypic_lattice(model: &LocalModel, lambda: &Partition) -> Result<LatticeBasis> {
    let gens = model
        .staircase()
        .iter()
        .map(|l| model.project_poly(lambda, &super::specht_poly::IntPoly::monomial(l)))
        .collect::<Result<Vec<_>>>()?;
    let basis = LatticeBasis::span(model, &gens, Side::Zero)?;
    let dim = dimension(lambda) as usize;
    if basis.rank() != dim * dim {
        return Err(Error::Consistency(format!("isotypic lattice of {lambda} has rank {}, expected {}", basis.rank(), dim * dim)));
    }
    Ok(basis)
}

/// `(Tr(b_i b_j))` as Laurent polynomials in `t`.
pub fn gram_matrix(model: &LocalModel, elements: &[SplitElement]) -> Result<Matrix<QPoly>> {
    let n = elements.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = model.trace(&elements[i].mul(&elements[j]))?;
            g[(i, j)] = v.clone();
            g[(j, i)] = v;
        }
    }
    Ok(g)
}

/// `t`-valuation of the discriminant of a homogeneous basis. Entries are
/// `g_ij t^{(k_i+k_j)/e}`, so the determinant is `det(g) t^{2Σk/e}`.
pub fn gram_valuation(model: &LocalModel, basis: &LatticeBasis) -> Result<i64> {
    let e = model.e() as i64;
    let degs: Vec<i64> = basis
        .elements
        .iter()
        .map(|x| x.homogeneous_degree().ok_or_else(|| Error::Validation("basis must be homogeneous".into())))
        .collect::<Result<_>>()?;
    let n = degs.len();
    let mut g = Matrix::<BigRational>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let s = degs[i] + degs[j];
            let tr = model.trace(&basis.elements[i].mul(&basis.elements[j]))?;
            let c = if s % e == 0 { tr.coeff(s / e) } else { BigRational::zero() };
            if tr != Poly::monomial(c.clone(), s.div_euclid(e)) {
                return Err(Error::Consistency("trace of a homogeneous product is not homogeneous".into()));
            }
            g[(i, j)] = c.clone();
            g[(j, i)] = c;
        }
    }
    finish_valuation(&g, &degs, e)
}

fn finish_valuation(g: &Matrix<BigRational>, degs: &[i64], e: i64) -> Result<i64> {
    if g.det().is_zero() {
        return Err(Error::Consistency("trace form is degenerate on the lattice".into()));
    }
    let total: i64 = 2 * degs.iter().sum::<i64>();
    if total % e != 0 {
        return Err(Error::Consistency(format!("discriminant exponent {total}/{e} is fractional")));
    }
    Ok(total / e)
}

/// The same valuation from the polynomial Gram matrix and a fraction-free
/// determinant; works for non-homogeneous bases.
pub fn gram_valuation_generic(model: &LocalModel, elements: &[SplitElement]) -> Result<i64> {
    let det = gram_matrix(model, elements)?.det_bareiss();
    det.valuation().ok_or_else(|| Error::Consistency("trace form is degenerate on the lattice".into()))
}

/// Discriminant valuation of `R_e` from monomial traces alone.
pub fn monomial_gram_valuation(model: &LocalModel) -> Result<i64> {
    let e = model.e();
    let st = model.staircase();
    let n = st.len();
    let mut g = Matrix::<BigRational>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v: Vec<usize> = st[i].iter().zip(&st[j]).map(|(a, b)| a + b).collect();
            if v.iter().sum::<usize>() % e != 0 {
                continue;
            }
            let c = model.monomial_trace_coefficient(&v);
            g[(i, j)] = c.clone();
            g[(j, i)] = c;
        }
    }
    let degs: Vec<i64> = st.iter().map(|l| l.iter().sum::<usize>() as i64).collect();
    finish_valuation(&g, &degs, e as i64)
}

fn eval_laurent(p: &QPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for (k, c) in p.terms() {
        let pw = if k >= 0 { num_traits::pow(x.clone(), k as usize) } else { num_traits::pow(x.recip(), (-k) as usize) };
        acc += c.clone() * pw;
    }
    acc
}

/// Scrollar-type invariants of a pair of lattices given by column bases in
/// common coordinates: `b0` over `k[t]`, `binf` over `k[t^{-1}]`. Returns
/// the sorted `r_i` such that some basis `v_i` of the first lattice has
/// `t^{-r_i} v_i` a basis of the second.
pub fn pair_invariants_matrix(b0: &Matrix<QPoly>, binf: &Matrix<QPoly>) -> Result<Vec<i64>> {
    let n = b0.cols();
    if binf.cols() != n || binf.rows() != b0.rows() {
        return Err(Error::SizeMismatch("lattice bases have different shapes".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let probe = rat_int(2);
    let at = b0.map(|p| eval_laurent(p, &probe));
    let rows = at.independent_rows();
    if rows.len() != n {
        return Err(Error::Validation("first basis is not linearly independent".into()));
    }
    let a = binf.select_rows(&rows);
    let r = b0.select_rows(&rows);
    let (den, num) = a.fraction_free_solve(&r).ok_or_else(|| Error::Validation("bases span different spaces".into()))?;
    if binf.mul(&num) != b0.scale(&den) {
        return Err(Error::Validation("bases span different spaces".into()));
    }
    let mut cols = num.to_cols();
    let deg = |c: &Vec<QPoly>| c.iter().filter_map(|p| p.degree()).max().expect("nonzero column");
    loop {
        let degs: Vec<i64> = cols.iter().map(deg).collect();
        let lead = Matrix::from_fn(n, n, |i, j| cols[j][i].coeff(degs[j]));
        let null = lead.nullspace();
        let Some(c) = null.into_iter().next() else {
            break;
        };
        let j0 = (0..n).filter(|&j| !c[j].is_zero()).max_by_key(|&j| degs[j]).unwrap();
        let inv = BigRational::one() / c[j0].clone();
        let mut new_col = vec![QPoly::zero(); n];
        for j in 0..n {
            if c[j].is_zero() {
                continue;
            }
            let f = c[j].clone() * inv.clone();
            for (x, y) in new_col.iter_mut().zip(&cols[j]) {
                *x = x.clone() + y.shift(degs[j0] - degs[j]).scale(&f);
            }
        }
        cols[j0] = new_col;
    }
    let shift = den.degree().expect("nonzero determinant");
    let mut out: Vec<i64> = cols.iter().map(|c| deg(c) - shift).collect();
    out.sort_unstable();
    Ok(out)
}

/// [`pair_invariants_matrix`] on split-model bases, in staircase coordinates.
pub fn lattice_pair_invariants(model: &LocalModel, b0: &LatticeBasis, binf: &LatticeBasis) -> Result<Vec<i64>> {
    if b0.side != Side::Zero || binf.side != Side::Infinity {
        return Err(Error::Validation("expected a lattice at zero and one at infinity".into()));
    }
    let to_matrix = |l: &LatticeBasis| -> Result<Matrix<QPoly>> {
        let cols = l.elements.iter().map(|x| model.rational_coords(x)).collect::<Result<Vec<_>>>()?;
        if cols.is_empty() {
            return Ok(Matrix::zeros(model.order(), 0));
        }
        Ok(Matrix::from_cols(cols))
    };
    pair_invariants_matrix(&to_matrix(b0)?, &to_matrix(binf)?)
}
