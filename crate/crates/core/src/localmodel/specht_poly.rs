use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::lattice::{gram_valuation, isotypic_lattice, monomial_gram_valuation, LatticeBasis, Side};
use super::split::{LocalModel, SplitElement};
use crate::error::{Error, Result};
use crate::groups::{all_permutations, Perm};
use crate::tableaux::{charge_data, charge_monomial, enumerate_partitions, standard_tableaux, Partition, StandardTableau};

/// A polynomial in `x_1, …, x_n` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: &[usize]) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps.iter().map(|&x| x as u32).collect(), 1);
        p
    }

    /// `s_n(x_1, …, x_m)`.
    pub fn elementary_symmetric(m: usize, n: usize) -> Self {
        let mut p = Self::zero(m);
        if n > m {
            return p;
        }
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            let mut a = vec![0u32; m];
            for &i in &idx {
                a[i] = 1;
            }
            p.add_term(a, 1);
            let Some(pos) = (0..n).rev().find(|&k| idx[k] < m - n + k) else {
                break;
            };
            idx[pos] += 1;
            for k in pos + 1..n {
                idx[k] = idx[k - 1] + 1;
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(exps.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, &c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero(self.nvars);
        }
        IntPoly { nvars: self.nvars, terms: self.terms.iter().map(|(a, &x)| (a.clone(), x * c)).collect() }
    }

    /// `σ·f` with `σ x_i = x_{σ(i)}`.
    pub fn act(&self, sigma: &Perm) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, &c) in &self.terms {
            let mut b = vec![0u32; self.nvars];
            for (i, &x) in a.iter().enumerate() {
                b[sigma.apply(i)] = x;
            }
            out.add_term(b, c);
        }
        out
    }

    /// Total degree when every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|a| a.iter().sum::<u32>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, &c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = a
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("x_{}", i + 1) } else { format!("x_{}^{x}", i + 1) })
                .collect();
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let mag = c.abs();
            match (vars.is_empty(), mag) {
                (true, _) => write!(f, "{mag}")?,
                (false, 1) => write!(f, "{}", vars.join(" "))?,
                (false, _) => write!(f, "{mag} {}", vars.join(" "))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All permutations preserving each block, as permutations of `0..n`.
fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let local = all_permutations(block.len());
        out = out
            .into_iter()
            .flat_map(|img| {
                local.iter().map(move |q| {
                    let mut img = img.clone();
                    for (k, &src) in block.iter().enumerate() {
                        img[src] = block[q.apply(k)];
                    }
                    img
                })
            })
            .collect();
    }
    out.into_iter().map(|img| Perm::new(img).expect("block permutation")).collect()
}

/// `R(T)`: permutations of `0..n` preserving the rows of `T`.
pub fn row_group(t: &StandardTableau) -> Vec<Perm> {
    let blocks: Vec<Vec<usize>> = t.rows().iter().map(|r| r.iter().map(|&x| x - 1).collect()).collect();
    block_group(t.size(), &blocks)
}

/// `C(T)`: permutations preserving the columns of `T`.
pub fn column_group(t: &StandardTableau) -> Vec<Perm> {
    let width = t.rows().first().map_or(0, |r| r.len());
    let blocks: Vec<Vec<usize>> =
        (0..width).map(|c| t.rows().iter().filter_map(|r| r.get(c)).map(|&x| x - 1).collect()).collect();
    block_group(t.size(), &blocks)
}

/// `x_T^{chw S}`.
pub fn chw_monomial(t: &StandardTableau, s: &StandardTableau) -> Result<IntPoly> {
    Ok(IntPoly::monomial(&charge_monomial(t, s)?))
}

/// `F_T^S = Σ_{τ∈C(T)} Σ_{σ∈R(T)} sgn(τ) τσ · x_T^{chw S}`.
pub fn higher_specht(t: &StandardTableau, s: &StandardTableau) -> Result<IntPoly> {
    let m = chw_monomial(t, s)?;
    let mut rowsum = IntPoly::zero(t.size());
    for sigma in row_group(t) {
        rowsum = rowsum.add(&m.act(&sigma));
    }
    let mut out = IntPoly::zero(t.size());
    for tau in column_group(t) {
        out = out.add(&rowsum.act(&tau).scale(tau.sign()));
    }
    Ok(out)
}

/// `G_T^S`: `F_T^S` evaluated at `x_i = α_i`.
pub fn evaluate_specht(model: &LocalModel, t: &StandardTableau, s: &StandardTableau) -> Result<SplitElement> {
    if t.size() != model.e() {
        return Err(Error::SizeMismatch(format!("tableau of size {} in a model with e = {}", t.size(), model.e())));
    }
    Ok(model.evaluate(&higher_specht(t, s)?))
}

/// Integrality report for one `G_T^S`.
#[derive(Clone, Debug, Serialize)]
pub struct SpechtCheck {
    pub shape: Partition,
    pub t: Vec<Vec<usize>>,
    pub s: Vec<Vec<usize>>,
    pub polynomial: String,
    /// `ch(S)`: the `u`-degree of `G_T^S`.
    pub charge: usize,
    /// `m(S)`: the largest charge subscript of `S`.
    pub max_subscript: usize,
    pub nonzero: bool,
    pub in_zero_lattice: bool,
    pub isotypic_pure: bool,
    /// `t^{-m(S)} G_T^S` lies in the lattice at infinity.
    pub in_infinity_lattice: bool,
    /// Smallest `t`-exponent among staircase coordinates of `G_T^S`.
    pub min_t_exponent: Option<i64>,
    /// Smallest `t^{-1}`-exponent of `t^{-m(S)} G_T^S` at infinity.
    pub min_t_inverse_exponent: Option<i64>,
}

impl SpechtCheck {
    pub fn passed(&self) -> bool {
        self.nonzero && self.in_zero_lattice && self.isotypic_pure && self.in_infinity_lattice
    }
}

pub fn check_specht(model: &LocalModel, t: &StandardTableau, s: &StandardTableau) -> Result<SpechtCheck> {
    let f = higher_specht(t, s)?;
    let g = evaluate_specht(model, t, s)?;
    let shape = t.shape().clone();
    let cd = charge_data(s);
    let pure = model.project_poly(&shape, &f)? == g;
    let zero_coords = model.coords(&g)?;
    let min_t_exponent = zero_coords.iter().filter_map(|p| p.valuation()).min();
    let scaled = g.shift_t(-(cd.max_subscript as i64));
    let inf_coords = model.coords(&scaled.conj())?;
    let min_inf = inf_coords.iter().filter_map(|p| p.valuation()).min();
    Ok(SpechtCheck {
        shape,
        t: t.rows().to_vec(),
        s: s.rows().to_vec(),
        polynomial: f.to_string(),
        charge: cd.charge,
        max_subscript: cd.max_subscript,
        nonzero: !g.is_zero(),
        in_zero_lattice: zero_coords.iter().all(|p| p.is_polynomial()),
        isotypic_pure: pure,
        in_infinity_lattice: inf_coords.iter().all(|p| p.is_polynomial()),
        min_t_exponent,
        min_t_inverse_exponent: min_inf,
    })
}

/// How the whole `{G_T^S}` family sits inside `R_e`.
#[derive(Clone, Debug, Serialize)]
pub struct SpechtFamilyReport {
    pub e: usize,
    pub family_size: usize,
    pub rank: usize,
    pub all_checks_pass: bool,
    /// Discriminant valuation of the lattice spanned by the family.
    pub family_valuation: i64,
    /// Discriminant valuation of `R_e`.
    pub full_valuation: i64,
    /// The family spans `R_e` itself.
    pub spans_directly: bool,
    /// The saturation of the family's span equals `R_e`.
    pub saturation_equals_full: bool,
    /// Per shape: the family's span equals the isotypic lattice.
    pub isotypic_spans: Vec<(Partition, bool)>,
}

pub fn specht_family_report(model: &LocalModel) -> Result<SpechtFamilyReport> {
    let e = model.e();
    let mut elements = Vec::new();
    let mut all_pass = true;
    let mut isotypic_spans = Vec::new();
    for lambda in enumerate_partitions(e)? {
        let tabs = standard_tableaux(&lambda);
        let mut mine = Vec::new();
        for t in &tabs {
            for s in &tabs {
                let check = check_specht(model, t, s)?;
                all_pass &= check.passed();
                mine.push(evaluate_specht(model, t, s)?);
            }
        }
        let span = LatticeBasis::span(model, &mine, Side::Zero)?;
        let iso = isotypic_lattice(model, &lambda)?;
        isotypic_spans.push((lambda, span.same_lattice(model, &iso)?));
        elements.extend(mine);
    }
    let family = LatticeBasis::span(model, &elements, Side::Zero)?;
    let saturated = family.saturate(model)?;
    let full = super::lattice::monomial_lattice(model);
    let family_valuation = gram_valuation(model, &family)?;
    let full_valuation = monomial_gram_valuation(model)?;
    Ok(SpechtFamilyReport {
        e,
        family_size: elements.len(),
        rank: family.rank(),
        all_checks_pass: all_pass,
        family_valuation,
        full_valuation,
        spans_directly: family.rank() == model.order() && family_valuation == full_valuation,
        saturation_equals_full: saturated.same_lattice(model, &full)?,
        isotypic_spans,
    })
}
