use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::puiseux::PuiseuxPoly;
use super::specht_poly::IntPoly;
use super::MAX_MODEL_E;
use crate::characters::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::{all_permutations, Perm};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::scalar::{rat_int, BigRational};
use crate::tableaux::{dimension, Partition};

pub type Cyclo = Cyclotomic<BigRational>;

/// An element of `R_e ⊗ k(t)` split into homogeneous `u`-degrees; each
/// part holds one `Q(ζ)` value per coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitElement {
    e: usize,
    parts: BTreeMap<i64, Vec<Cyclo>>,
}

fn is_zero_vec(v: &[Cyclo]) -> bool {
    v.iter().all(|c| c.is_zero())
}

impl SplitElement {
    pub fn zero(e: usize) -> Self {
        SplitElement { e, parts: BTreeMap::new() }
    }

    /// A single homogeneous part; zero vectors give the zero element.
    pub fn homogeneous(e: usize, degree: i64, values: Vec<Cyclo>) -> Self {
        let mut parts = BTreeMap::new();
        if !is_zero_vec(&values) {
            parts.insert(degree, values);
        }
        SplitElement { e, parts }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn parts(&self) -> &BTreeMap<i64, Vec<Cyclo>> {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `u`-degree when the element is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.parts.len() == 1 {
            self.parts.keys().next().copied()
        } else {
            None
        }
    }

    fn insert_part(&mut self, k: i64, v: Vec<Cyclo>) {
        match self.parts.remove(&k) {
            Some(old) => {
                let s: Vec<Cyclo> = old.into_iter().zip(v).map(|(a, b)| a + b).collect();
                if !is_zero_vec(&s) {
                    self.parts.insert(k, s);
                }
            }
            None => {
                if !is_zero_vec(&v) {
                    self.parts.insert(k, v);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, v) in &other.parts {
            out.insert_part(k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SplitElement { e: self.e, parts: self.parts.iter().map(|(&k, v)| (k, v.iter().map(|c| -c.clone()).collect())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Coordinatewise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SplitElement::zero(self.e);
        for (&a, x) in &self.parts {
            for (&b, y) in &other.parts {
                out.insert_part(a + b, x.iter().zip(y).map(|(p, q)| p.clone() * q.clone()).collect());
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return SplitElement::zero(self.e);
        }
        SplitElement { e: self.e, parts: self.parts.iter().map(|(&k, v)| (k, v.iter().map(|x| x.scale(c)).collect())).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift_t(&self, k: i64) -> Self {
        let s = k * self.e as i64;
        SplitElement { e: self.e, parts: self.parts.iter().map(|(&d, v)| (d + s, v.clone())).collect() }
    }

    /// `ζ ↦ ζ^{-1}`, `u ↦ u^{-1}`: exchanges the lattices at zero and infinity.
    pub fn conj(&self) -> Self {
        SplitElement { e: self.e, parts: self.parts.iter().map(|(&k, v)| (-k, v.iter().map(|c| c.conj()).collect())).collect() }
    }

    /// The coordinate at index `p`, as a polynomial in `u`.
    pub fn coordinate(&self, p: usize) -> PuiseuxPoly {
        PuiseuxPoly::new(self.e, Poly::from_terms(self.parts.iter().map(|(&k, v)| (k, v[p].clone()))))
    }

    pub fn num_coordinates(&self) -> usize {
        self.parts.values().next().map_or(0, |v| v.len())
    }
}

/// Linear solver for one residue class `r` of `u`-degrees mod `e`.
struct Residue {
    /// Indices into the staircase monomials with `|ℓ| ≡ r`.
    members: Vec<usize>,
    /// `e! × members` matrix of values `ζ^{⟨ℓ,π⟩}`.
    values: Matrix<Cyclo>,
    rows: Vec<usize>,
    inverse: Matrix<Cyclo>,
}

/// The model context: permutations, the staircase basis and solvers.
pub struct LocalModel {
    e: usize,
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// `right[s][p]`: index of `perms[p] ∘ perms[s]`.
    right: Vec<Vec<usize>>,
    monomials: Vec<Vec<usize>>,
    residues: Vec<Residue>,
}

/// Builds the model for `1 ≤ e ≤` [`MAX_MODEL_E`].
pub fn build_model(e: usize) -> Result<Arc<LocalModel>> {
    build_model_with_bound(e, MAX_MODEL_E)
}

/// Builds the model with an explicit bound on `e`.
pub fn build_model_with_bound(e: usize, bound: usize) -> Result<Arc<LocalModel>> {
    if e == 0 {
        return Err(Error::OutOfRange("e must be at least 1".into()));
    }
    if e > bound {
        return Err(Error::Resource(format!("e = {e} exceeds the model bound {bound} ({}! coordinates)", e)));
    }
    LocalModel::new(e).map(Arc::new)
}

fn staircase(e: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=e {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..i).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.sort_by_key(|l| (l.iter().sum::<usize>(), l.clone()));
    out
}

impl LocalModel {
    fn new(e: usize) -> Result<Self> {
        let perms = all_permutations(e);
        let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let right = perms.iter().map(|s| perms.iter().map(|p| index[&(p * s)]).collect()).collect();
        let monomials = staircase(e);
        let mut residues = Vec::with_capacity(e);
        for r in 0..e {
            let members: Vec<usize> = (0..monomials.len()).filter(|&j| monomials[j].iter().sum::<usize>() % e == r).collect();
            let values = Matrix::from_fn(perms.len(), members.len(), |p, c| zeta_pairing(e, &monomials[members[c]], &perms[p]));
            let rows = values.independent_rows();
            if rows.len() != members.len() {
                return Err(Error::Consistency(format!("staircase monomials of residue {r} are dependent")));
            }
            let inverse = values
                .select_rows(&rows)
                .inverse()
                .ok_or_else(|| Error::Consistency("singular residue block".into()))?;
            residues.push(Residue { members, values, rows, inverse });
        }
        Ok(LocalModel { e, perms, index, right, monomials, residues })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// `e!`.
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn perm_index(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Exponent vectors `0 ≤ ℓ_i < i`, sorted by total degree.
    pub fn staircase(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    /// `α^ℓ` for any exponent vector.
    pub fn monomial(&self, l: &[usize]) -> SplitElement {
        let values = self.perms.iter().map(|p| zeta_pairing(self.e, l, p)).collect();
        SplitElement::homogeneous(self.e, l.iter().sum::<usize>() as i64, values)
    }

    /// `α_i`, one-based.
    pub fn alpha(&self, i: usize) -> SplitElement {
        let mut l = vec![0; self.e];
        l[i - 1] = 1;
        self.monomial(&l)
    }

    pub fn one(&self) -> SplitElement {
        self.monomial(&vec![0; self.e])
    }

    /// `s_n(α_1, …, α_e)`.
    pub fn elementary_symmetric(&self, n: usize) -> SplitElement {
        self.evaluate(&IntPoly::elementary_symmetric(self.e, n))
    }

    /// Evaluates an integer polynomial at `x_i = α_i`.
    pub fn evaluate(&self, f: &IntPoly) -> SplitElement {
        assert_eq!(f.nvars(), self.e, "polynomial has the wrong number of variables");
        let e = self.e;
        let mut by_degree: BTreeMap<i64, Vec<(&Vec<u32>, i64)>> = BTreeMap::new();
        for (a, &c) in f.terms() {
            by_degree.entry(a.iter().map(|&x| x as i64).sum()).or_default().push((a, c));
        }
        let mut out = SplitElement::zero(e);
        for (k, terms) in by_degree {
            let values = self
                .perms
                .iter()
                .map(|p| {
                    let mut hist = vec![0i64; e];
                    for (a, c) in &terms {
                        let s: usize = a.iter().enumerate().map(|(i, &x)| x as usize * p.apply(i)).sum();
                        hist[s % e] += c;
                    }
                    Cyclo::from_raw(e as u32, hist.into_iter().map(rat_int).collect())
                })
                .collect();
            out.insert_part(k, values);
        }
        out
    }

    /// `σ·x`, with `(σx)(π) = x(π ∘ σ)` so that `σ α_i = α_{σ(i)}`.
    pub fn act(&self, sigma: &Perm, x: &SplitElement) -> SplitElement {
        let s = self.index[sigma];
        let map = &self.right[s];
        SplitElement {
            e: self.e,
            parts: x.parts.iter().map(|(&k, v)| (k, map.iter().map(|&q| v[q].clone()).collect())).collect(),
        }
    }

    /// `Σ_σ σ(x)`; every coordinate equals the trace.
    pub fn galois_sum(&self, x: &SplitElement) -> SplitElement {
        let mut out = SplitElement::zero(self.e);
        for s in &self.perms {
            out = out.add(&self.act(s, x));
        }
        out
    }

    /// `Tr(x)` as a Laurent polynomial in `t` with rational coefficients.
    pub fn trace(&self, x: &SplitElement) -> Result<Poly<BigRational>> {
        let e = self.e as i64;
        let mut out = Poly::zero();
        for (&k, v) in &x.parts {
            let s = v.iter().cloned().fold(Cyclo::zero(), |a, b| a + b);
            if s.is_zero() {
                continue;
            }
            if k % e != 0 {
                return Err(Error::Consistency(format!("trace has a u^{k} term")));
            }
            let q = s.as_rational().ok_or_else(|| Error::Consistency("trace is not rational".into()))?;
            out.add_term(k / e, q);
        }
        Ok(out)
    }

    /// Coefficients of a homogeneous part in the staircase monomials of its
    /// residue class, verified against all coordinates.
    pub(crate) fn residue_coords(&self, k: i64, values: &[Cyclo]) -> Result<Vec<Cyclo>> {
        let r = k.rem_euclid(self.e as i64) as usize;
        let res = &self.residues[r];
        let rhs: Vec<Cyclo> = res.rows.iter().map(|&i| values[i].clone()).collect();
        let a = res.inverse.mul_vec(&rhs);
        if res.values.mul_vec(&a) != values {
            return Err(Error::Consistency("vector lies outside the split algebra".into()));
        }
        Ok(a)
    }

    /// Rebuilds a homogeneous element from residue coordinates.
    pub(crate) fn element_from_residue_coords(&self, k: i64, a: &[Cyclo]) -> SplitElement {
        let r = k.rem_euclid(self.e as i64) as usize;
        SplitElement::homogeneous(self.e, k, self.residues[r].values.mul_vec(a))
    }

    /// Staircase members of the residue class of `k`, as indices.
    pub(crate) fn residue_members(&self, k: i64) -> &[usize] {
        &self.residues[k.rem_euclid(self.e as i64) as usize].members
    }

    /// Coordinates of `x` in the staircase basis, as Laurent polynomials in `t`.
    pub fn coords(&self, x: &SplitElement) -> Result<Vec<Poly<Cyclo>>> {
        let e = self.e as i64;
        let mut out = vec![Poly::zero(); self.monomials.len()];
        for (&k, v) in &x.parts {
            let a = self.residue_coords(k, v)?;
            for (c, &j) in a.into_iter().zip(self.residue_members(k)) {
                let deg = self.monomials[j].iter().sum::<usize>() as i64;
                out[j].add_term((k - deg) / e, c);
            }
        }
        Ok(out)
    }

    /// Staircase coordinates with rational coefficients.
    pub fn rational_coords(&self, x: &SplitElement) -> Result<Vec<Poly<BigRational>>> {
        self.coords(x)?
            .into_iter()
            .map(|p| {
                let mut q = Poly::zero();
                for (k, c) in p.terms() {
                    q.add_term(k, c.as_rational().ok_or_else(|| Error::Consistency("non-rational coordinate".into()))?);
                }
                Ok(q)
            })
            .collect()
    }

    /// Membership in `R_e`: every staircase coefficient lies in `k[t]`.
    pub fn in_zero_lattice(&self, x: &SplitElement) -> Result<bool> {
        Ok(self.coords(x)?.iter().all(|p| p.is_polynomial()))
    }

    /// Membership in `R_{e,∞}`, the closure over `k[t^{-1}]`.
    pub fn in_infinity_lattice(&self, x: &SplitElement) -> Result<bool> {
        self.in_zero_lattice(&x.conj())
    }

    /// `Σ_σ χ_λ(σ) σ(x)` for `x = x^a`, as an integer polynomial.
    pub fn isotypic_symmetrize(&self, lambda: &Partition, f: &IntPoly) -> Result<IntPoly> {
        check_shape(self.e, lambda)?;
        let table = CharacterTable::get(self.e)?;
        let mut out = IntPoly::zero(self.e);
        for s in &self.perms {
            let chi = table.value(lambda, &s.cycle_type());
            if chi != 0 {
                out = out.add(&f.act(s).scale(chi));
            }
        }
        Ok(out)
    }

    /// `(dim V_λ / e!) Σ_σ χ_λ(σ) σ` applied to the evaluation of `f`.
    pub fn project_poly(&self, lambda: &Partition, f: &IntPoly) -> Result<SplitElement> {
        let sym = self.isotypic_symmetrize(lambda, f)?;
        Ok(self.evaluate(&sym).scale(&self.idempotent_scale(lambda)))
    }

    /// The same projection applied to an arbitrary element.
    pub fn project(&self, lambda: &Partition, x: &SplitElement) -> Result<SplitElement> {
        check_shape(self.e, lambda)?;
        let table = CharacterTable::get(self.e)?;
        let mut out = SplitElement::zero(self.e);
        for s in &self.perms {
            let chi = table.value(lambda, &s.cycle_type());
            if chi != 0 {
                out = out.add(&self.act(s, x).scale(&rat_int(chi)));
            }
        }
        Ok(out.scale(&self.idempotent_scale(lambda)))
    }

    fn idempotent_scale(&self, lambda: &Partition) -> BigRational {
        BigRational::new(BigInt::from(dimension(lambda)), BigInt::from(self.order()))
    }

    /// Index of a staircase exponent vector.
    pub fn staircase_index(&self, l: &[usize]) -> Option<usize> {
        self.monomials.iter().position(|m| m == l)
    }
}

fn check_shape(e: usize, lambda: &Partition) -> Result<()> {
    if lambda.size() != e {
        return Err(Error::SizeMismatch(format!("{lambda} is not a partition of {e}")));
    }
    Ok(())
}

/// `ζ^{Σ ℓ_i π(i)}`.
fn zeta_pairing(e: usize, l: &[usize], p: &Perm) -> Cyclo {
    let s: usize = l.iter().enumerate().map(|(i, &x)| x * p.apply(i)).sum();
    Cyclo::zeta_pow(e as u32, s as i64)
}

impl LocalModel {
    /// `Tr(α^v) / u^{|v|}` via a histogram of `⟨v, π⟩ mod e`.
    pub(crate) fn monomial_trace_coefficient(&self, v: &[usize]) -> BigRational {
        let e = self.e;
        let mut hist = vec![0i64; e];
        for p in &self.perms {
            let s: usize = v.iter().enumerate().map(|(i, &x)| x * p.apply(i)).sum();
            hist[s % e] += 1;
        }
        let c = Cyclo::from_raw(e as u32, hist.into_iter().map(rat_int).collect());
        c.as_rational().expect("monomial traces are rational")
    }
}
