//! Explicit Specht modules in Young's seminormal form over `Q`.

use num_traits::{One, Zero};

use super::{mult, symmetric_power_unchecked, VirtualCharacter};
use crate::error::{Error, Result};
use crate::groups::{all_permutations, Perm, PermSubgroup};
use crate::linalg::Matrix;
use crate::scalar::{rat, rat_int, BigRational};
use crate::tableaux::{dimension, partitions_of, standard_tableaux, Partition, StandardTableau};

type Q = BigRational;
type QMatrix = Matrix<Q>;

/// Default degree bound for building Specht matrices.
pub const DEFAULT_SPECHT_BOUND: usize = 8;

/// Largest tensor-model dimension handled by [`fixed_isotypic_vector`].
pub const MAX_MODEL_DIM: usize = 400;

/// Matrices of the adjacent transpositions `(k k+1)` on `V_λ`.
#[derive(Clone, Debug)]
pub struct SpechtAction {
    pub lambda: Partition,
    pub tableaux: Vec<StandardTableau>,
    /// `generators[k]` represents `(k+1 k+2)`; column `j` is the image of basis vector `j`.
    pub generators: Vec<QMatrix>,
}

/// Seminormal matrices for `V_λ`, refusing degrees above `bound`.
pub fn specht_action_bounded(lambda: &Partition, bound: usize) -> Result<SpechtAction> {
    let d = lambda.size();
    if d > bound {
        return Err(Error::Resource(format!("Specht matrices for degree {d} exceed the bound {bound}")));
    }
    let tabs = standard_tableaux(lambda);
    let n = tabs.len();
    let index = |t: &StandardTableau| tabs.iter().position(|x| x == t).expect("standard tableau");
    let mut generators = Vec::with_capacity(d.saturating_sub(1));
    for k in 1..d {
        let mut m = QMatrix::zeros(n, n);
        for (j, t) in tabs.iter().enumerate() {
            let (rk, ck) = t.position(k);
            let (rk1, ck1) = t.position(k + 1);
            if rk == rk1 {
                m[(j, j)] = Q::one();
            } else if ck == ck1 {
                m[(j, j)] = -Q::one();
            } else {
                let r = (ck1 as i64 - rk1 as i64) - (ck as i64 - rk as i64);
                let swapped = swap_entries(t, k);
                let i = index(&swapped);
                m[(j, j)] = rat(1, r);
                // The tableau with k in the higher row carries the unit coefficient.
                m[(i, j)] = if rk < rk1 { Q::one() } else { Q::one() - rat(1, r * r) };
            }
        }
        generators.push(m);
    }
    Ok(SpechtAction { lambda: lambda.clone(), tableaux: tabs, generators })
}

/// Seminormal matrices for `V_λ` with the default degree bound.
pub fn specht_action(lambda: &Partition) -> Result<SpechtAction> {
    specht_action_bounded(lambda, DEFAULT_SPECHT_BOUND)
}

fn swap_entries(t: &StandardTableau, k: usize) -> StandardTableau {
    let rows = t
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| {
                    if x == k {
                        k + 1
                    } else if x == k + 1 {
                        k
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    StandardTableau::new(rows).expect("swapping non-adjacent k, k+1 keeps the tableau standard")
}

/// Indices `k` (zero based, for `(k+1 k+2)`) with `σ = s_{w[m-1]} ⋯ s_{w[0]}`.
pub fn adjacent_word(sigma: &Perm) -> Vec<usize> {
    let mut cur: Vec<usize> = sigma.images().to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        word.push(i);
    }
    word
}

/// Matrix of any permutation given generator matrices for adjacent transpositions.
pub fn matrix_from_generators(gens: &[QMatrix], dim: usize, sigma: &Perm) -> QMatrix {
    let mut m = QMatrix::identity(dim);
    for &k in adjacent_word(sigma).iter() {
        m = m.mul(&gens[k]);
    }
    m
}

fn apply_word(gens: &[QMatrix], sigma: &Perm, v: &[Q]) -> Vec<Q> {
    let mut out = v.to_vec();
    for &k in adjacent_word(sigma).iter() {
        out = gens[k].mul_vec(&out);
    }
    out
}

impl SpechtAction {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn degree(&self) -> usize {
        self.lambda.size()
    }

    pub fn matrix_of(&self, sigma: &Perm) -> QMatrix {
        matrix_from_generators(&self.generators, self.dim(), sigma)
    }

    /// Trace of a fixed permutation with cycle type `e`.
    pub fn trace_of_class(&self, e: &Partition) -> Q {
        self.matrix_of(&Perm::of_cycle_type(e)).trace()
    }

    /// Involutions, commuting of distant generators and the braid relation.
    pub fn check_relations(&self) -> Result<()> {
        let id = QMatrix::identity(self.dim());
        let g = &self.generators;
        for (k, a) in g.iter().enumerate() {
            if a.mul(a) != id {
                return Err(Error::Consistency(format!("s_{} does not square to 1 on {:?}", k + 1, self.lambda)));
            }
            if k + 1 < g.len() {
                let b = &g[k + 1];
                if a.mul(b).mul(a) != b.mul(a).mul(b) {
                    return Err(Error::Consistency(format!("braid relation fails at {} on {:?}", k + 1, self.lambda)));
                }
            }
            for b in g.iter().skip(k + 2) {
                if a.mul(b) != b.mul(a) {
                    return Err(Error::Consistency(format!("distant generators fail to commute on {:?}", self.lambda)));
                }
            }
        }
        Ok(())
    }
}

/// Which representation the fixed vector is sought in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorModel {
    /// `V_λ`.
    Irreducible,
    /// `V_λ ⊗ V_(d-1,1)`.
    WithStandard,
    /// `V_λ ⊗ Sym² V_(d-1,1)`.
    WithSymSquare,
}

/// Generator matrices and character of a tensor model.
pub struct ModelAction {
    pub dim: usize,
    pub generators: Vec<QMatrix>,
    pub character: VirtualCharacter,
}

fn sym_square(a: &QMatrix) -> QMatrix {
    let n = a.rows();
    let idx = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * n - i * (i + 1) / 2 + j
    };
    let m = n * (n + 1) / 2;
    let mut out = QMatrix::zeros(m, m);
    for i in 0..n {
        for j in i..n {
            let col = idx(i, j);
            for a1 in 0..n {
                if a[(a1, i)].is_zero() {
                    continue;
                }
                for b1 in 0..n {
                    if a[(b1, j)].is_zero() {
                        continue;
                    }
                    let r = idx(a1, b1);
                    out[(r, col)] = out[(r, col)].clone() + a[(a1, i)].clone() * a[(b1, j)].clone();
                }
            }
        }
    }
    out
}

pub fn model_action(lambda: &Partition, model: TensorModel) -> Result<ModelAction> {
    let d = lambda.size();
    let base = specht_action(lambda)?;
    let chi = VirtualCharacter::irreducible(lambda);
    if model == TensorModel::Irreducible {
        return Ok(ModelAction { dim: base.dim(), generators: base.generators, character: chi });
    }
    if d < 2 {
        return Err(Error::OutOfRange("tensor models need degree at least 2".into()));
    }
    let std = specht_action(&Partition::hook(d, 1))?;
    let (second, second_chi): (Vec<QMatrix>, VirtualCharacter) = match model {
        TensorModel::WithStandard => (std.generators.clone(), VirtualCharacter::standard(d)),
        _ => (std.generators.iter().map(sym_square).collect(), symmetric_power_unchecked(&VirtualCharacter::standard(d), 2)),
    };
    let dim = base.dim() * second.first().map_or(1, |m| m.rows());
    if dim > MAX_MODEL_DIM {
        return Err(Error::Resource(format!("tensor model of dimension {dim} exceeds {MAX_MODEL_DIM}")));
    }
    let generators = base.generators.iter().zip(&second).map(|(a, b)| a.kron(b)).collect();
    Ok(ModelAction { dim, generators, character: &chi * &second_chi })
}

/// Spans `{v : h v = v for every generator h of H}`.
fn fixed_space(model: &ModelAction, h: &PermSubgroup) -> Vec<Vec<Q>> {
    let mut basis = QMatrix::identity(model.dim);
    for g in h.generators() {
        if basis.cols() == 0 {
            break;
        }
        let m = matrix_from_generators(&model.generators, model.dim, g).sub(&QMatrix::identity(model.dim));
        let k = m.mul(&basis).nullspace();
        if k.is_empty() {
            return Vec::new();
        }
        basis = basis.mul(&QMatrix::from_cols(k));
    }
    basis.to_cols()
}

/// Central class-sum eigenvalue `|C| χ_ν(C) / dim V_ν`.
fn central_eigenvalue(nu: &Partition, e: &Partition) -> Q {
    let chi = super::character(nu, e).unwrap();
    rat_int(e.class_size() as i64 * chi) / rat_int(dimension(nu) as i64)
}

/// Projects onto the `μ`-isotypic part using central class sums.
fn isotypic_project(model: &ModelAction, mu: &Partition, v: Vec<Q>) -> Result<Vec<Q>> {
    let d = mu.size();
    let classes: Vec<Partition> = {
        let mut c = partitions_of(d);
        c.retain(|e| e.fixed_points() != d);
        c.sort_by_key(|e| (e.class_size(), e.clone()));
        c
    };
    let present: Vec<Partition> = model
        .character
        .decompose()?
        .into_iter()
        .filter(|(nu, m)| *m > 0 && nu != mu)
        .map(|(nu, _)| nu)
        .collect();
    let mut out = v;
    let mut elements_cache: Vec<(Partition, Vec<Perm>)> = Vec::new();
    for nu in present {
        let Some(e) = classes.iter().find(|e| central_eigenvalue(&nu, e) != central_eigenvalue(mu, e)) else {
            return Err(Error::Consistency(format!("central characters of {mu:?} and {nu:?} coincide")));
        };
        if !elements_cache.iter().any(|(c, _)| c == e) {
            let elems = all_permutations(d).into_iter().filter(|p| &p.cycle_type() == e).collect();
            elements_cache.push((e.clone(), elems));
        }
        let elems = &elements_cache.iter().find(|(c, _)| c == e).unwrap().1;
        let mut cv = vec![Q::zero(); out.len()];
        for s in elems {
            let w = apply_word(&model.generators, s, &out);
            for (a, b) in cv.iter_mut().zip(w) {
                *a = a.clone() + b;
            }
        }
        let wn = central_eigenvalue(&nu, e);
        let wm = central_eigenvalue(mu, e);
        let denom = wm - wn.clone();
        out = cv.into_iter().zip(&out).map(|(c, x)| (c - wn.clone() * x.clone()) / denom.clone()).collect();
    }
    Ok(out)
}

/// The vector spanning `(μ-isotypic part)^H` inside the chosen tensor model,
/// normalized so its first nonzero coordinate is `1`.
///
/// Returns `None` when that space is zero and an ambiguity error when it has
/// dimension at least two.
pub fn fixed_isotypic_vector(
    lambda: &Partition,
    mu: &Partition,
    h: &PermSubgroup,
    model: TensorModel,
) -> Result<Option<Vec<Q>>> {
    if lambda.size() != mu.size() || lambda.size() != h.degree() {
        return Err(Error::SizeMismatch("λ, μ and H must share the degree".into()));
    }
    let action = model_action(lambda, model)?;
    let m_mu = mult(&VirtualCharacter::irreducible(mu), &action.character)?;
    let fixed_in_mu = mult(&VirtualCharacter::irreducible(mu), &h.permutation_character())?;
    let expected = m_mu * fixed_in_mu;
    if expected == 0 {
        return Ok(None);
    }
    if expected > 1 {
        return Err(Error::Ambiguity(format!("(V_{mu:?}-part)^H has dimension {expected}")));
    }
    let mut vectors = Vec::new();
    for f in fixed_space(&action, h) {
        let v = isotypic_project(&action, mu, f)?;
        if v.iter().any(|x| !x.is_zero()) {
            vectors.push(v);
        }
    }
    let rank = if vectors.is_empty() { 0 } else { QMatrix::from_cols(vectors.clone()).rank() };
    if rank as i64 != expected {
        return Err(Error::Consistency(format!("fixed isotypic space has rank {rank}, characters predict {expected}")));
    }
    let v = vectors.swap_remove(0);
    let lead = v.iter().find(|x| !x.is_zero()).unwrap().clone();
    Ok(Some(v.into_iter().map(|x| x / lead.clone()).collect()))
}

/// Model matrix of `σ`, for checks on returned vectors.
pub fn model_matrix(lambda: &Partition, model: TensorModel, sigma: &Perm) -> Result<QMatrix> {
    let a = model_action(lambda, model)?;
    Ok(matrix_from_generators(&a.generators, a.dim, sigma))
}
