//! Local and global ramification of resolvents: discriminant exponents,
//! maximality of isotypic parts, the ramification of the normalization and
//! the addendum tables.

mod reference;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::characters::{character, p_lambda, VirtualCharacter};
use crate::error::{Error, Result};
use crate::groups::{close_group, p_of_subgroup, permutation_character, product_is_full, CosetAction, Perm, PermSubgroup};
use crate::scrollar::ScrollarProfile;
use crate::tableaux::{dimension, enumerate_partitions, Partition};

pub use reference::{compare_with_reference, reference_table, Discrepancy, ReferenceRow};

/// Ramification patterns of `φ`, one per labelled branch point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchData {
    pub entries: Vec<(String, Partition)>,
}

impl BranchData {
    pub fn new(entries: Vec<(String, Partition)>) -> Self {
        BranchData { entries }
    }

    /// Every pattern must be a partition of `d`.
    pub fn validate(&self, d: usize) -> Result<()> {
        for (label, e) in &self.entries {
            if e.size() != d {
                return Err(Error::Validation(format!("pattern {e} at {label} is not a partition of {d}")));
            }
        }
        Ok(())
    }

    /// `Σ_points Σ_j (e_j − 1)`.
    pub fn total_tame(&self) -> usize {
        self.entries.iter().map(|(_, e)| e.tame_exponent()).sum()
    }

    /// Repeats a pattern, labelling the copies `prefix1, prefix2, …`.
    pub fn repeated(e: &Partition, count: usize, prefix: &str) -> Self {
        BranchData { entries: (1..=count).map(|k| (format!("{prefix}{k}"), e.clone())).collect() }
    }
}

impl FromStr for BranchData {
    type Err = Error;

    /// `"2,2;4;3,1"` with labels `P1, P2, …`; an entry `label=pattern`
    /// keeps its label and `pattern*k` repeats it `k` times.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for item in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
            let (label, rest) = match item.split_once('=') {
                Some((l, r)) => (Some(l.trim().to_string()), r.trim()),
                None => (None, item),
            };
            let (pat, count) = match rest.split_once('*') {
                Some((p, c)) => {
                    (p.trim(), c.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad repeat count in `{item}`")))?)
                }
                None => (rest, 1),
            };
            let e: Partition = pat.parse()?;
            for k in 0..count {
                let l = match (&label, count) {
                    (Some(l), 1) => l.clone(),
                    (Some(l), _) => format!("{l}{}", k + 1),
                    (None, _) => format!("P{}", entries.len() + 1),
                };
                entries.push((l, e.clone()));
            }
        }
        if entries.is_empty() {
            return Err(Error::EmptyInput("no branch patterns".into()));
        }
        Ok(BranchData { entries })
    }
}

/// `e^i`: the cycle type of `ρ^i` for `ρ` of cycle type `e`.
pub fn cycle_power_type(e: &Partition, i: usize) -> Partition {
    e.power(i)
}

/// `p(λ) · dim V_λ · Σ(e_j − 1)`.
pub fn order_disc_exponent_lambda(e: &Partition, lambda: &Partition) -> Result<u64> {
    if e.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("{e} and {lambda} have different sizes")));
    }
    Ok(p_lambda(lambda) * dimension(lambda) as u64 * e.tame_exponent() as u64)
}

/// `p(H) · Σ(e_j − 1)`.
pub fn order_disc_exponent_subgroup(e: &Partition, h: &PermSubgroup) -> Result<u64> {
    check_size(e, h)?;
    Ok(p_integer(h)? * e.tame_exponent() as u64)
}

fn check_size(e: &Partition, h: &PermSubgroup) -> Result<()> {
    if e.size() != h.degree() {
        return Err(Error::SizeMismatch(format!("{e} is not a partition of {}", h.degree())));
    }
    Ok(())
}

fn p_integer(h: &PermSubgroup) -> Result<u64> {
    let p = p_of_subgroup(h)?;
    if !p.is_integer() {
        return Err(Error::Consistency(format!("p({}) = {p} is not an integer", h.name())));
    }
    p.to_integer().try_into().map_err(|_| Error::Consistency(format!("p({}) is negative", h.name())))
}

/// `Σ_{i=1}^{lcm(e)−1} n(H, e^i) / lcm(e)`.
pub fn maximal_disc_exponent(h: &PermSubgroup, e: &Partition) -> Result<u64> {
    check_size(e, h)?;
    max_exponent_from(&permutation_character(h), e)
}

fn max_exponent_from(chi: &VirtualCharacter, e: &Partition) -> Result<u64> {
    let l = e.lcm();
    let total: i64 = (1..l).map(|i| chi.degree() - chi.value(&e.power(i))).sum();
    if total < 0 || total % l as i64 != 0 {
        return Err(Error::Consistency(format!("maximal discriminant exponent {total}/{l} is not a nonnegative integer")));
    }
    Ok((total / l as i64) as u64)
}

/// `e′`: orbit sizes of `⟨ρ⟩` on `S_d / H`, with `ρ = Perm::of_cycle_type(e)`.
pub fn resolvent_local_pattern(h: &PermSubgroup, e: &Partition) -> Result<Partition> {
    check_size(e, h)?;
    Ok(CosetAction::new(h).orbit_sizes(&Perm::of_cycle_type(e)))
}

/// The character identity `2(dim − χ(e^i)) = (d − #Fix(e^i))(dim − χ((12)))`
/// for `i = 1, …, lcm(e) − 1`.
pub fn lambda_maximal_by_characters(lambda: &Partition, e: &Partition) -> Result<bool> {
    if lambda.size() != e.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {e} have different sizes")));
    }
    let d = lambda.size();
    let dim = dimension(lambda) as i64;
    let denom = if d >= 2 { dim - character(lambda, &Partition::transposition(d))? } else { 0 };
    for i in 1..e.lcm() {
        let ei = e.power(i);
        let lhs = 2 * (dim - character(lambda, &ei)?);
        let rhs = (d - ei.fixed_points()) as i64 * denom;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The closed classification: `e ∈ {(1^d), (2,1^{d−2})}`, or
/// `λ ∈ {(d), (d−1,1)}`, or `λ` has at most two rows and `e = (3,1^{d−3})`.
pub fn lambda_maximal_by_classification(lambda: &Partition, e: &Partition) -> bool {
    let d = lambda.size();
    let simple = e.tame_exponent() <= 1;
    let natural = lambda.len() == 1 || (lambda.len() == 2 && lambda.part(1) == 1);
    let three = d >= 3 && *e == Partition::cycle(d, 3) && lambda.len() <= 2;
    simple || natural || three
}

/// Whether `λ` is maximal at a point of pattern `e`. The character identity
/// and the classification must agree for `d ≥ 4`.
pub fn is_lambda_maximal(lambda: &Partition, e: &Partition) -> Result<bool> {
    let by_chars = lambda_maximal_by_characters(lambda, e)?;
    if lambda.size() >= 4 && by_chars != lambda_maximal_by_classification(lambda, e) {
        return Err(Error::Consistency(format!(
            "maximality of {lambda} at {e}: character test says {by_chars}, classification disagrees"
        )));
    }
    Ok(by_chars)
}

/// Local data of the resolvent `res_H` above a point of pattern `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalAnalysis {
    pub e: Partition,
    pub lcm: usize,
    pub tame_exponent: usize,
    pub order_disc_exponent: u64,
    pub maximal_disc_exponent: u64,
    pub local_pattern: Partition,
    /// One flag per nontrivial `λ` in `Ind_H 1`.
    pub maximal_flags: Vec<(Partition, bool)>,
}

impl LocalAnalysis {
    pub fn is_maximal(&self) -> bool {
        self.maximal_flags.iter().all(|(_, b)| *b)
    }
}

/// Precomputed subgroup data reused across many patterns.
pub struct ResolventContext<'a> {
    h: &'a PermSubgroup,
    cosets: CosetAction,
    chi: VirtualCharacter,
    p: u64,
    constituents: Vec<Partition>,
}

impl<'a> ResolventContext<'a> {
    pub fn new(h: &'a PermSubgroup) -> Result<Self> {
        let chi = permutation_character(h);
        let trivial = Partition::row(h.degree());
        let constituents =
            chi.decompose()?.into_iter().filter(|(l, m)| *m > 0 && *l != trivial).map(|(l, _)| l).collect();
        Ok(ResolventContext { h, cosets: CosetAction::new(h), chi, p: p_integer(h)?, constituents })
    }

    pub fn subgroup(&self) -> &PermSubgroup {
        self.h
    }

    pub fn index(&self) -> usize {
        self.cosets.degree()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Nontrivial irreducible constituents of `Ind_H 1`.
    pub fn constituents(&self) -> &[Partition] {
        &self.constituents
    }

    pub fn cosets(&self) -> &CosetAction {
        &self.cosets
    }

    /// Full local analysis, with the internal invariants enforced.
    pub fn analyze(&self, e: &Partition) -> Result<LocalAnalysis> {
        check_size(e, self.h)?;
        let tame = e.tame_exponent();
        let order = self.p * tame as u64;
        let maximal = max_exponent_from(&self.chi, e)?;
        let local_pattern = self.cosets.orbit_sizes(&Perm::of_cycle_type(e));
        let flags = self
            .constituents
            .iter()
            .map(|l| Ok((l.clone(), is_lambda_maximal(l, e)?)))
            .collect::<Result<Vec<_>>>()?;
        let a = LocalAnalysis {
            e: e.clone(),
            lcm: e.lcm(),
            tame_exponent: tame,
            order_disc_exponent: order,
            maximal_disc_exponent: maximal,
            local_pattern,
            maximal_flags: flags,
        };
        check_local(&a)?;
        Ok(a)
    }
}

fn check_local(a: &LocalAnalysis) -> Result<()> {
    let e = &a.e;
    if a.local_pattern.tame_exponent() as u64 != a.maximal_disc_exponent {
        return Err(Error::Consistency(format!(
            "at {e}: Σ(e′−1) = {} but the maximal discriminant exponent is {}",
            a.local_pattern.tame_exponent(),
            a.maximal_disc_exponent
        )));
    }
    if !a.lcm.is_multiple_of(a.local_pattern.lcm()) {
        return Err(Error::Consistency(format!("at {e}: lcm(e′) does not divide lcm(e)")));
    }
    if a.order_disc_exponent < a.maximal_disc_exponent {
        return Err(Error::Consistency(format!("at {e}: order discriminant below the maximal one")));
    }
    if (a.order_disc_exponent == a.maximal_disc_exponent) != a.is_maximal() {
        return Err(Error::Consistency(format!("at {e}: discriminant equality disagrees with the maximality flags")));
    }
    Ok(())
}

/// `LocalAnalysis` for one pattern without a reusable context.
pub fn analyze_local(h: &PermSubgroup, e: &Partition) -> Result<LocalAnalysis> {
    ResolventContext::new(h)?.analyze(e)
}

/// One connected component of the normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub degree: usize,
    /// `2·degree − Σ_points Σ(e′_j − 1)` over the orbits in this component.
    pub euler: i64,
    /// `1 − euler/2` when that is a nonnegative integer.
    pub genus: Option<i64>,
}

/// Global picture of `res_H C`.
#[derive(Clone, Debug, Serialize)]
pub struct ResolventGeometry {
    pub subgroup: String,
    pub index: usize,
    pub smooth: bool,
    /// Points where some constituent fails to be maximal, with those `λ`.
    pub singular_points: Vec<(String, Vec<Partition>)>,
    /// `None` when no Galois group was supplied.
    pub irreducible: Option<bool>,
    pub components: Vec<Component>,
    pub arithmetic_genus: i64,
    pub normalization_euler: i64,
    /// `Σ_points Σ(e_j − 1) = 2g + 2d − 2`.
    pub riemann_hurwitz_consistent: bool,
    pub local: Vec<(String, LocalAnalysis)>,
}

/// Smoothness, irreducibility, arithmetic genus and the normalization of
/// `res_H C` from branch data. With a Galois group `G`, inertia at each
/// point is generated by the smallest element of `G` of the given cycle
/// type, and components are the `G`-orbits on `S_d / H`.
pub fn resolvent_geometry(
    h: &PermSubgroup,
    branch: &BranchData,
    galois: Option<&PermSubgroup>,
    profile: &ScrollarProfile,
) -> Result<ResolventGeometry> {
    let d = h.degree();
    if profile.d != d {
        return Err(Error::SizeMismatch(format!("profile has degree {}, subgroup {d}", profile.d)));
    }
    branch.validate(d)?;
    let ctx = ResolventContext::new(h)?;
    let n = ctx.index();

    let mut local = Vec::new();
    let mut singular_points = Vec::new();
    let mut cache: HashMap<Partition, LocalAnalysis> = HashMap::new();
    for (label, e) in &branch.entries {
        let a = match cache.get(e) {
            Some(a) => a.clone(),
            None => {
                let a = ctx.analyze(e)?;
                cache.insert(e.clone(), a.clone());
                a
            }
        };
        let bad: Vec<Partition> = a.maximal_flags.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.clone()).collect();
        if !bad.is_empty() {
            singular_points.push((label.clone(), bad));
        }
        local.push((label.clone(), a));
    }

    let genus_q = ctx.p() as i64 * profile.total() as i64 + 1 - n as i64;

    // Orbits of coset indices, and an inertia generator per point.
    let (orbits, inertia, irreducible) = match galois {
        None => {
            let inertia = branch.entries.iter().map(|(_, e)| Perm::of_cycle_type(e)).collect::<Vec<_>>();
            (vec![(0..n).collect::<Vec<_>>()], inertia, None)
        }
        Some(g) => {
            if g.degree() != d {
                return Err(Error::SizeMismatch(format!("Galois group has degree {}, expected {d}", g.degree())));
            }
            let inertia = galois_inertia(g, branch)?;
            let orbits = galois_orbits(&ctx, g);
            let report = product_is_full(g, h)?;
            let mut a: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
            let mut b: Vec<usize> = report.component_degrees().iter().map(|&x| x as usize).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b || report.full != (orbits.len() == 1) {
                return Err(Error::Consistency(format!("orbit degrees {a:?} disagree with double cosets {b:?}")));
            }
            (orbits, inertia, Some(report.full))
        }
    };

    let mut where_is = vec![0usize; n];
    for (k, o) in orbits.iter().enumerate() {
        for &x in o {
            where_is[x] = k;
        }
    }
    let mut ramification = vec![0i64; orbits.len()];
    for rho in &inertia {
        let perm = ctx.cosets().permutation_of(rho);
        let mut seen = vec![false; n];
        for s in 0..n {
            let mut len = 0i64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = perm[x];
            }
            if len > 0 {
                ramification[where_is[s]] += len - 1;
            }
        }
    }
    let components: Vec<Component> = orbits
        .iter()
        .zip(&ramification)
        .map(|(o, &r)| {
            let euler = 2 * o.len() as i64 - r;
            let genus = (euler % 2 == 0 && euler <= 2).then_some(1 - euler / 2);
            Component { degree: o.len(), euler, genus }
        })
        .collect();
    let normalization_euler = components.iter().map(|c| c.euler).sum();

    Ok(ResolventGeometry {
        subgroup: h.name().to_string(),
        index: n,
        smooth: singular_points.is_empty(),
        singular_points,
        irreducible,
        components,
        arithmetic_genus: genus_q,
        normalization_euler,
        riemann_hurwitz_consistent: branch.total_tame() as u64 == 2 * profile.g + 2 * d as u64 - 2,
        local,
    })
}

/// Smallest element of `G` of each branch cycle type. The elements of `G`
/// with the branch cycle types must generate `G`, since inertia groups
/// generate the geometric monodromy.
fn galois_inertia(g: &PermSubgroup, branch: &BranchData) -> Result<Vec<Perm>> {
    let mut chosen = Vec::new();
    let mut pool = Vec::new();
    for (label, e) in &branch.entries {
        let of_type: Vec<&Perm> = g.elements().iter().filter(|x| &x.cycle_type() == e).collect();
        let Some(first) = of_type.first() else {
            return Err(Error::Consistency(format!("{} has no element of cycle type {e} (point {label})", g.name())));
        };
        chosen.push((*first).clone());
        pool.extend(of_type.into_iter().cloned());
    }
    let generated = close_group(g.degree(), &pool)?;
    if generated.order() != g.order() {
        return Err(Error::Consistency(format!(
            "branch cycle types generate a subgroup of order {} inside {} of order {}",
            generated.order(),
            g.name(),
            g.order()
        )));
    }
    Ok(chosen)
}

fn galois_orbits(ctx: &ResolventContext<'_>, g: &PermSubgroup) -> Vec<Vec<usize>> {
    let n = ctx.index();
    let moves: Vec<Vec<usize>> = g.generators().iter().map(|x| ctx.cosets().permutation_of(x)).collect();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orbit = vec![s];
        let mut k = 0;
        while k < orbit.len() {
            for m in &moves {
                let y = m[orbit[k]];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// One row of an addendum table; discriminants are `t`-exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AddendumRow {
    pub e: Partition,
    pub disc_curve: u64,
    pub disc_order: u64,
    pub disc_maximal: u64,
    pub e_prime: Partition,
}

#[derive(Clone, Debug, Serialize)]
pub struct AddendumTable {
    pub d: usize,
    pub subgroup: String,
    pub rows: Vec<AddendumRow>,
}

/// Every pattern `e ⊢ d`, ordered by ascending parts (`(1^d)` first).
pub fn addendum_table(h: &PermSubgroup) -> Result<AddendumTable> {
    let d = h.degree();
    let ctx = ResolventContext::new(h)?;
    let mut es = enumerate_partitions(d)?;
    es.sort_by(|a, b| a.parts().cmp(b.parts()));
    let rows = es
        .iter()
        .map(|e| {
            let a = ctx.analyze(e)?;
            Ok(AddendumRow {
                e: e.clone(),
                disc_curve: a.tame_exponent as u64,
                disc_order: a.order_disc_exponent,
                disc_maximal: a.maximal_disc_exponent,
                e_prime: a.local_pattern,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AddendumTable { d, subgroup: h.name().to_string(), rows })
}

/// `1`, `t`, `t^k`.
pub fn format_t_power(k: u64) -> String {
    match k {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{k}"),
    }
}

impl fmt::Display for AddendumTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}",
                r.e.pretty(),
                format_t_power(r.disc_curve),
                format_t_power(r.disc_order),
                format_t_power(r.disc_maximal),
                r.e_prime.pretty()
            )?;
        }
        Ok(())
    }
}
