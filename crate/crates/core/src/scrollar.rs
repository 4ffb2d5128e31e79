//! Scrollar invariants at the level of numbers: hooks, volumes, duality,
//! resolvent summaries, Maroni-type bounds and Betti numbers.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::characters::{p_lambda, VirtualCharacter};
use crate::error::{Error, Result};
use crate::groups::{p_of_subgroup, permutation_character, PermSubgroup};
use crate::scalar::{format_rational, rat, rat_int, serde_rational, BigRational};
use crate::tableaux::{binomial, dimension, Partition};

/// `(d, g, e_1 ≤ … ≤ e_{d-1})` for a degree `d` cover of genus `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollarProfile {
    pub d: usize,
    pub g: u64,
    pub e: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ScrollarProfile {
    /// Validates the profile. With `enforce_maroni` the largest invariant
    /// must satisfy `d · e_{d-1} ≤ 2g + 2d − 2`.
    pub fn new(d: usize, g: u64, mut e: Vec<u64>, enforce_maroni: bool) -> Result<Self> {
        let mut warnings = Vec::new();
        if d < 3 {
            return Err(Error::Validation(format!("degree {d} is below 3")));
        }
        if d == 3 {
            warnings.push("degree 3 is outside the main range d >= 4".to_string());
        }
        if e.len() != d - 1 {
            return Err(Error::Validation(format!("expected {} invariants, got {}", d - 1, e.len())));
        }
        e.sort_unstable();
        let total: u64 = e.iter().sum();
        if total != g + d as u64 - 1 {
            return Err(Error::Validation(format!("invariants sum to {total}, expected g + d - 1 = {}", g + d as u64 - 1)));
        }
        let top = *e.last().unwrap();
        if d as u64 * top > 2 * g + 2 * d as u64 - 2 {
            let msg = format!(
                "largest invariant {top} violates the Maroni bound (2g+2d-2)/d = {}",
                format_rational(&rat((2 * g + 2 * d as u64 - 2) as i64, d as i64))
            );
            if enforce_maroni {
                return Err(Error::Validation(msg));
            }
            warnings.push(msg);
        }
        if g >= 1 && e[0] == 0 {
            warnings.push("e_1 = 0 with g >= 1: the cover is not of the connected kind".to_string());
        }
        Ok(ScrollarProfile { d, g, e, warnings })
    }

    /// `g + d − 1`, the sum of the invariants.
    pub fn total(&self) -> u64 {
        self.g + self.d as u64 - 1
    }
}

/// A sorted multiset of scrollar invariants with a label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollarMultiset {
    pub label: String,
    pub values: Vec<u64>,
}

impl ScrollarMultiset {
    pub fn new(label: impl Into<String>, mut values: Vec<u64>) -> Self {
        values.sort_unstable();
        ScrollarMultiset { label: label.into(), values }
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// All `i`-element subset sums of `e_1, …, e_{d-1}`: the invariants of the
/// hook `(d − i, 1^i)`.
pub fn hook_scrollars(p: &ScrollarProfile, i: usize) -> Result<ScrollarMultiset> {
    if i > p.d - 1 {
        return Err(Error::OutOfRange(format!("hook index {i} outside 0..={}", p.d - 1)));
    }
    let n = p.e.len();
    let mut values = Vec::with_capacity(binomial(n, i) as usize);
    let mut idx: Vec<usize> = (0..i).collect();
    loop {
        values.push(idx.iter().map(|&k| p.e[k]).sum());
        // Advance to the next i-subset in lexicographic order.
        let Some(pos) = (0..i).rev().find(|&k| idx[k] < n - i + k) else {
            break;
        };
        idx[pos] += 1;
        for k in pos + 1..i {
            idx[k] = idx[k - 1] + 1;
        }
    }
    Ok(ScrollarMultiset::new(Partition::hook(p.d, i).to_string(), values))
}

/// `p(λ)·(g + d − 1)`.
pub fn volume(lambda: &Partition, p: &ScrollarProfile) -> Result<u64> {
    if lambda.size() != p.d {
        return Err(Error::SizeMismatch(format!("{lambda:?} is not a partition of {}", p.d)));
    }
    Ok(p_lambda(lambda) * p.total())
}

/// Invariants of `λ*` from those of `λ`: `g + d − 1 − value`, re-sorted.
pub fn dual_scrollars(m: &ScrollarMultiset, lambda: &Partition, p: &ScrollarProfile) -> Result<ScrollarMultiset> {
    if lambda.size() != p.d {
        return Err(Error::SizeMismatch(format!("{lambda:?} is not a partition of {}", p.d)));
    }
    let dim = dimension(lambda) as usize;
    if m.len() != dim {
        return Err(Error::SizeMismatch(format!("{} values given, dim V_{lambda:?} = {dim}", m.len())));
    }
    let t = p.total();
    if let Some(&bad) = m.values.iter().find(|&&v| v > t) {
        return Err(Error::Validation(format!("value {bad} exceeds g + d - 1 = {t}")));
    }
    Ok(ScrollarMultiset::new(lambda.conjugate().to_string(), m.values.iter().map(|v| t - v).collect()))
}

/// A bound `slope · g + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineBound {
    #[serde(with = "serde_rational")]
    pub slope: BigRational,
    #[serde(with = "serde_rational")]
    pub intercept: BigRational,
}

impl AffineBound {
    /// `c · (g + d − 1)`.
    pub fn times_total(c: BigRational, d: usize) -> Self {
        AffineBound { intercept: c.clone() * rat_int(d as i64 - 1), slope: c }
    }

    pub fn eval(&self, g: u64) -> BigRational {
        self.slope.clone() * rat_int(g as i64) + self.intercept.clone()
    }
}

impl fmt::Display for AffineBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*g + ({})", format_rational(&self.slope), format_rational(&self.intercept))
    }
}

/// What a Maroni-type bound is asked for.
#[derive(Clone, Debug)]
pub enum BoundTarget<'a> {
    /// Largest scrollar invariant of the resolvent of `H`; the resolvent
    /// must be irreducible.
    Subgroup(&'a PermSubgroup),
    /// Scrollar invariants of `λ`, via the Young subgroup `S_λ`.
    Partition(Partition),
    /// Splitting types of the `i`-th syzygy bundle in degree `d`.
    Schreyer { i: usize, d: usize },
}

/// Result of [`maroni_bounds`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<AffineBound>,
    pub upper: AffineBound,
}

/// `2 p(H) (g + d − 1) / [S_d : H]`, the resolvent Maroni bound rewritten
/// through the arithmetic genus of the resolvent.
pub fn maroni_bound_subgroup(h: &PermSubgroup) -> Result<AffineBound> {
    let p = p_of_subgroup(h)?;
    let n = rat_int(h.index() as i64);
    Ok(AffineBound::times_total(rat_int(2) * p / n, h.degree()))
}

/// `(d² − Σ d_i²) / (d(d − 1)) · (g + d − 1)`.
pub fn maroni_bound_partition(lambda: &Partition) -> AffineBound {
    let d = lambda.size() as i64;
    let sq: i64 = lambda.parts().iter().map(|&x| (x * x) as i64).sum();
    AffineBound::times_total(rat(d * d - sq, d * (d - 1)), lambda.size())
}

/// The interval containing every splitting type of the `i`-th syzygy bundle.
pub fn schreyer_interval(i: usize, d: usize) -> Result<(AffineBound, AffineBound)> {
    if d < 4 || i < 1 || i > d - 3 {
        return Err(Error::OutOfRange(format!("syzygy index {i} outside 1..={} for d = {d}", d.saturating_sub(3))));
    }
    let (i, dd) = (i as i64, d as i64);
    let den = dd * (dd - 1);
    let lower = AffineBound::times_total(rat(i * (i + 1) + 2, den), d);
    let upper = AffineBound::times_total(rat((i + 1) * (2 * dd - i - 2) - 2, den), d);
    Ok((lower, upper))
}

pub fn maroni_bounds(target: &BoundTarget<'_>) -> Result<BoundReport> {
    match target {
        BoundTarget::Subgroup(h) => {
            Ok(BoundReport { label: format!("resolvent of {}", h.name()), lower: None, upper: maroni_bound_subgroup(h)? })
        }
        BoundTarget::Partition(l) => Ok(BoundReport { label: format!("partition {l}"), lower: None, upper: maroni_bound_partition(l) }),
        BoundTarget::Schreyer { i, d } => {
            let (lo, hi) = schreyer_interval(*i, *d)?;
            Ok(BoundReport { label: format!("syzygy {i} in degree {d}"), lower: Some(lo), upper: hi })
        }
    }
}

/// `β_i = (d / (i + 1)) (d − 2 − i) C(d − 2, i − 1)`.
pub fn betti_number(i: usize, d: usize) -> Result<u128> {
    if d < 4 || i < 1 || i > d - 3 {
        return Err(Error::OutOfRange(format!("Betti index {i} outside 1..={} for d = {d}", d.saturating_sub(3))));
    }
    let num = d as u128 * (d - 2 - i) as u128 * binomial(d - 2, i - 1);
    debug_assert_eq!(num % (i as u128 + 1), 0);
    Ok(num / (i as u128 + 1))
}

/// `(d − i − 1, 2, 1^{i−1})`.
pub fn splitting_partition(i: usize, d: usize) -> Result<Partition> {
    if d < 4 || i < 1 || i > d - 3 {
        return Err(Error::OutOfRange(format!("syzygy index {i} outside 1..={} for d = {d}", d.saturating_sub(3))));
    }
    let mut parts = vec![d - i - 1, 2];
    parts.extend(std::iter::repeat_n(1, i - 1));
    Partition::new(parts)
}

/// What the invariant-level theory says about a resolvent.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolventSummary {
    pub subgroup: String,
    pub index: u64,
    /// Nonzero `mult(V_λ, Ind_H 1)`, in partition order, trivial one included.
    pub multiplicities: Vec<(Partition, i64)>,
    pub invariant_count: u64,
    pub total_volume: u64,
    pub arithmetic_genus: i64,
    /// `(2 g_res + 2n − 2) / n` at the profile's genus.
    #[serde(with = "serde_rational")]
    pub maroni_bound: BigRational,
    /// The full multiset when every contributing λ is a hook.
    pub full_multiset: Option<ScrollarMultiset>,
}

pub fn resolvent_summary(h: &PermSubgroup, p: &ScrollarProfile) -> Result<ResolventSummary> {
    let d = p.d;
    if h.degree() != d {
        return Err(Error::SizeMismatch(format!("{} has degree {}, profile has {d}", h.name(), h.degree())));
    }
    let chi = permutation_character(h);
    let index = chi.degree() as u64;
    let mults: Vec<(Partition, i64)> = chi.decompose()?.into_iter().filter(|(_, m)| *m != 0).collect();
    if mults.iter().any(|(_, m)| *m < 0) {
        return Err(Error::Consistency("negative multiplicity in a permutation character".into()));
    }
    let trivial = Partition::row(d);
    let nontrivial: Vec<&(Partition, i64)> = mults.iter().filter(|(l, _)| *l != trivial).collect();
    let invariant_count: u64 = nontrivial.iter().map(|(l, m)| *m as u64 * dimension(l) as u64).sum();
    let total_volume: u64 = nontrivial.iter().map(|(l, m)| *m as u64 * p_lambda(l) * p.total()).sum();
    let ph = p_of_subgroup(h)?;
    let genus_q = ph.clone() * rat_int(p.total() as i64) + rat_int(1) - rat_int(index as i64);
    if !genus_q.is_integer() {
        return Err(Error::Consistency(format!("arithmetic genus {genus_q} is not an integer")));
    }
    let arithmetic_genus = genus_q.to_integer().try_into().map_err(|_| Error::Resource("genus overflow".into()))?;
    if arithmetic_genus + index as i64 - 1 != total_volume as i64 {
        return Err(Error::Consistency(format!(
            "genus {arithmetic_genus} + index {index} - 1 differs from the volume {total_volume}"
        )));
    }
    if invariant_count + 1 != index {
        return Err(Error::Consistency(format!("{invariant_count} invariants for a resolvent of degree {index}")));
    }
    let n = rat_int(index as i64);
    let maroni_bound = (rat_int(2 * arithmetic_genus) + n.clone() * rat_int(2) - rat_int(2)) / n;
    let full_multiset = if nontrivial.iter().all(|(l, _)| l.is_hook()) {
        let mut values = Vec::new();
        for (l, m) in &nontrivial {
            let i = l.len() - 1;
            let hs = hook_scrollars(p, i)?;
            for _ in 0..*m {
                values.extend(hs.values.iter().copied());
            }
        }
        Some(ScrollarMultiset::new(format!("resolvent of {}", h.name()), values))
    } else {
        None
    };
    Ok(ResolventSummary {
        subgroup: h.name().to_string(),
        index,
        multiplicities: mults,
        invariant_count,
        total_volume,
        arithmetic_genus,
        maroni_bound,
        full_multiset,
    })
}

/// `genus + index − 1` should equal the total volume; exposed for checks.
pub fn volume_genus_gap(s: &ResolventSummary) -> i64 {
    s.arithmetic_genus + s.index as i64 - 1 - s.total_volume as i64
}

/// `Σ_λ mult · p(λ)` from a character, i.e. `p(H)` without the subgroup.
pub fn p_from_character(chi: &VirtualCharacter) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (l, m) in chi.decompose()? {
        acc += rat_int(m * p_lambda(&l) as i64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::registry;

    fn prof(d: usize, g: u64, e: &[u64]) -> ScrollarProfile {
        ScrollarProfile::new(d, g, e.to_vec(), true).unwrap()
    }

    #[test]
    fn profile_validation() {
        assert!(ScrollarProfile::new(4, 2, vec![1, 2, 2], true).is_ok());
        assert!(ScrollarProfile::new(4, 2, vec![1, 1, 2], true).is_err());
        assert!(ScrollarProfile::new(4, 2, vec![0, 0, 5], true).is_err());
        assert_eq!(ScrollarProfile::new(4, 2, vec![0, 0, 5], false).unwrap().warnings.len(), 2);
        let w = ScrollarProfile::new(4, 2, vec![0, 2, 3], false).unwrap();
        assert!(!w.warnings.is_empty());
    }

    #[test]
    fn hooks() {
        let p = prof(4, 2, &[1, 2, 2]);
        assert_eq!(hook_scrollars(&p, 0).unwrap().values, vec![0]);
        assert_eq!(hook_scrollars(&p, 1).unwrap().values, vec![1, 2, 2]);
        assert_eq!(hook_scrollars(&p, 2).unwrap().values, vec![3, 3, 4]);
        assert_eq!(hook_scrollars(&p, 3).unwrap().values, vec![5]);
        assert!(hook_scrollars(&p, 4).is_err());
    }

    #[test]
    fn volumes_and_duals() {
        let p = prof(6, 3, &[1, 1, 2, 2, 2]);
        assert_eq!(volume(&"2,2,2".parse().unwrap(), &p).unwrap(), 3 * 3 + 15);
        assert_eq!(volume(&Partition::row(6), &p).unwrap(), 0);
        assert_eq!(volume(&Partition::column(6), &p).unwrap(), 8);
        let m = ScrollarMultiset::new("6", vec![0]);
        assert_eq!(dual_scrollars(&m, &Partition::row(6), &p).unwrap().values, vec![8]);
    }

    #[test]
    fn bounds() {
        let (lo, hi) = schreyer_interval(1, 4).unwrap();
        assert_eq!(lo, AffineBound { slope: rat(1, 3), intercept: rat_int(1) });
        assert_eq!(hi, AffineBound { slope: rat(2, 3), intercept: rat_int(2) });
        let (_, hi) = schreyer_interval(2, 5).unwrap();
        assert_eq!(hi, AffineBound::times_total(rat(4, 5), 5));
        assert_eq!(maroni_bound_partition(&"2,2,1".parse().unwrap()), AffineBound::times_total(rat(4, 5), 5));
        assert_eq!(maroni_bound_partition(&"2,2,2".parse().unwrap()), AffineBound::times_total(rat(4, 5), 6));
        let agl = registry("AGL1F5", 5).unwrap();
        assert_eq!(maroni_bound_subgroup(&agl).unwrap(), AffineBound { slope: rat_int(1), intercept: rat_int(4) });
    }

    #[test]
    fn betti_and_partitions() {
        assert_eq!(betti_number(1, 4).unwrap(), 2);
        assert_eq!(betti_number(2, 5).unwrap(), 5);
        assert_eq!(betti_number(1, 6).unwrap(), 9);
        assert_eq!(splitting_partition(1, 4).unwrap().to_string(), "2,2");
        assert_eq!(splitting_partition(2, 5).unwrap().to_string(), "2,2,1");
        assert_eq!(splitting_partition(2, 6).unwrap().to_string(), "3,2,1");
        assert!(betti_number(0, 5).is_err());
    }

    #[test]
    fn resolvent_examples() {
        let p = prof(4, 2, &[1, 2, 2]);
        let s = resolvent_summary(&registry("D4", 4).unwrap(), &p).unwrap();
        assert_eq!((s.invariant_count, s.total_volume, s.arithmetic_genus), (2, 5, 3));
        assert!(s.full_multiset.is_none());
        let s = resolvent_summary(&registry("Sd-1", 4).unwrap(), &p).unwrap();
        assert_eq!(s.full_multiset.unwrap().values, vec![1, 2, 2]);
        assert_eq!(s.arithmetic_genus, 2);
        let p5 = prof(5, 4, &[2, 2, 2, 2]);
        let s = resolvent_summary(&registry("AGL1F5", 5).unwrap(), &p5).unwrap();
        assert_eq!((s.invariant_count, s.arithmetic_genus), (5, 3 * 4 + 7));
    }
}
