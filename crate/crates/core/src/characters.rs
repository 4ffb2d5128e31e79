//! Characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule evaluated through the
//! border-strip predicate of [`SkewShape`]. Tables are cached per degree.

pub mod specht;

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{dimension, factorial, partitions_of, Partition, SkewShape};

pub use specht::{fixed_isotypic_vector, specht_action, SpechtAction, TensorModel};

/// Largest degree for which full tables are built and cached.
pub const MAX_TABLE_DEGREE: usize = 14;

/// The character table of `S_d`; rows and columns both in reverse
/// lexicographic partition order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTable {
    pub d: usize,
    pub partitions: Vec<Partition>,
    /// `values[λ][e]`.
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<u128>,
}

impl CharacterTable {
    /// The cached table of `S_d`.
    pub fn get(d: usize) -> Result<Arc<CharacterTable>> {
        if d == 0 {
            return Err(Error::EmptyInput("character table of S_0".into()));
        }
        if d > MAX_TABLE_DEGREE {
            return Err(Error::Resource(format!("character table of S_{d} exceeds degree {MAX_TABLE_DEGREE}")));
        }
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().unwrap().get(&d) {
            return Ok(t.clone());
        }
        let t = Arc::new(Self::build(d));
        cache.lock().unwrap().insert(d, t.clone());
        Ok(t)
    }

    fn build(d: usize) -> Self {
        let partitions = partitions_of(d);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|e| mn(l.parts(), e.parts(), &mut memo)).collect())
            .collect();
        let class_sizes = partitions.iter().map(|e| e.class_size()).collect();
        CharacterTable { d, partitions, values, class_sizes }
    }

    pub fn index(&self, p: &Partition) -> usize {
        self.partitions.iter().position(|q| q == p).expect("partition of the table degree")
    }

    pub fn value(&self, lambda: &Partition, e: &Partition) -> i64 {
        self.values[self.index(lambda)][self.index(e)]
    }

    pub fn num_classes(&self) -> usize {
        self.partitions.len()
    }

    pub fn order(&self) -> u128 {
        factorial(self.d)
    }
}

/// Memoized Murnaghan–Nakayama recursion.
///
/// Removes a border strip of length `e[0]` in every possible way.
fn mn(lambda: &[usize], e: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if e.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), e.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = e[0];
    let size: usize = lambda.iter().sum();
    let outer = Partition::new(lambda.to_vec()).unwrap();
    let mut total = 0i64;
    for inner in sub_diagrams(lambda, size - k) {
        let skew = SkewShape::new(outer.clone(), &inner).unwrap();
        if skew.is_border_strip() {
            let sign = if skew.height().is_multiple_of(2) { 1 } else { -1 };
            total += sign * mn(&inner, &e[1..], memo);
        }
    }
    memo.insert(key, total);
    total
}

/// All partitions of `n` (as trimmed vectors) fitting inside `lambda`.
fn sub_diagrams(lambda: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(lambda: &[usize], row: usize, rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if row == lambda.len() {
            return;
        }
        let hi = lambda[row].min(cap).min(rest);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(lambda, row + 1, rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, n, usize::MAX, &mut cur, &mut out);
    out
}

/// `χ_λ(e)`.
pub fn character(lambda: &Partition, e: &Partition) -> Result<i64> {
    if lambda.size() != e.size() {
        return Err(Error::SizeMismatch(format!("λ = {lambda:?} and e = {e:?} have different sizes")));
    }
    let d = lambda.size();
    if d <= MAX_TABLE_DEGREE {
        return Ok(CharacterTable::get(d)?.value(lambda, e));
    }
    let mut memo = HashMap::new();
    Ok(mn(lambda.parts(), e.parts(), &mut memo))
}

/// `p(λ) = (dim V_λ − χ_λ((12))) / 2`; zero for `d = 1`.
pub fn p_lambda(lambda: &Partition) -> u64 {
    let d = lambda.size();
    if d < 2 {
        return 0;
    }
    let dim = dimension(lambda) as i64;
    let chi = character(lambda, &Partition::transposition(d)).unwrap();
    ((dim - chi) / 2) as u64
}

/// A class function of `S_d` with integer values, stored over all classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualCharacter {
    pub d: usize,
    /// Indexed like [`CharacterTable::partitions`].
    pub values: Vec<i64>,
}

impl VirtualCharacter {
    pub fn from_fn(d: usize, f: impl Fn(&Partition) -> i64) -> Self {
        VirtualCharacter { d, values: partitions_of(d).iter().map(f).collect() }
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let t = CharacterTable::get(lambda.size()).expect("degree within table bound");
        VirtualCharacter { d: t.d, values: t.values[t.index(lambda)].clone() }
    }

    pub fn trivial(d: usize) -> Self {
        Self::from_fn(d, |_| 1)
    }

    /// Character of `V_(d-1,1)`.
    pub fn standard(d: usize) -> Self {
        Self::from_fn(d, |e| e.fixed_points() as i64 - 1)
    }

    pub fn value(&self, e: &Partition) -> i64 {
        let idx = partitions_of(self.d).iter().position(|q| q == e).expect("class of this degree");
        self.values[idx]
    }

    pub fn degree(&self) -> i64 {
        *self.values.last().unwrap()
    }

    pub fn scale(&self, c: i64) -> Self {
        VirtualCharacter { d: self.d, values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Multiplicities of every irreducible, in table order.
    pub fn decompose(&self) -> Result<Vec<(Partition, i64)>> {
        let t = CharacterTable::get(self.d)?;
        t.partitions.iter().map(|l| Ok((l.clone(), mult(&VirtualCharacter::irreducible(l), self)?))).collect()
    }

    fn zip(&self, rhs: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.d, rhs.d, "degree mismatch");
        VirtualCharacter { d: self.d, values: self.values.iter().zip(&rhs.values).map(|(a, b)| f(*a, *b)).collect() }
    }
}

impl Add for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: Self) -> VirtualCharacter {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, rhs: Self) -> VirtualCharacter {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn mul(self, rhs: Self) -> VirtualCharacter {
        self.zip(rhs, |a, b| a * b)
    }
}

impl Neg for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        self.scale(-1)
    }
}

/// Scalar product `(1/d!) Σ_e |class(e)| V(e) W(e)`.
///
/// Characters of `S_d` are real, so no conjugation is needed.
pub fn mult(v: &VirtualCharacter, w: &VirtualCharacter) -> Result<i64> {
    if v.d != w.d {
        return Err(Error::SizeMismatch(format!("degrees {} and {}", v.d, w.d)));
    }
    let parts = partitions_of(v.d);
    let mut acc: i128 = 0;
    for (k, e) in parts.iter().enumerate() {
        acc += e.class_size() as i128 * v.values[k] as i128 * w.values[k] as i128;
    }
    let n = factorial(v.d) as i128;
    if acc % n != 0 {
        return Err(Error::Consistency(format!("scalar product {acc}/{n} is not an integer")));
    }
    Ok((acc / n) as i64)
}

/// Character of `Sym^k V` for `k ∈ {2, 3, 4}` via Newton's identity.
pub fn symmetric_power_character(v: &VirtualCharacter, k: usize) -> Result<VirtualCharacter> {
    if !(2..=4).contains(&k) {
        return Err(Error::OutOfRange(format!("symmetric power {k} outside 2..=4")));
    }
    Ok(symmetric_power_unchecked(v, k))
}

pub(crate) fn symmetric_power_unchecked(v: &VirtualCharacter, k: usize) -> VirtualCharacter {
    let parts = partitions_of(v.d);
    let values = parts
        .iter()
        .map(|e| {
            let mut h = vec![1i64];
            for n in 1..=k {
                let s: i64 = (1..=n).map(|i| v.value(&e.power(i)) * h[n - i]).sum();
                debug_assert_eq!(s % n as i64, 0);
                h.push(s / n as i64);
            }
            h[k]
        })
        .collect();
    VirtualCharacter { d: v.d, values }
}

/// Cell-move counts `(c, d, e, e')` transforming `μ` into `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCounts {
    /// Remove one cell, add one cell.
    pub c: u64,
    /// Remove two cells one after the other, then add two one after the other.
    pub d: u64,
    /// Remove a domino and add a domino of the same orientation.
    pub e: u64,
    /// Remove a domino and add a domino of the other orientation.
    pub e_prime: u64,
}

impl TensorCounts {
    /// Predicted `mult(V_μ, V_λ ⊗ V_(d-1,1))`.
    pub fn standard_multiplicity(&self, same: bool) -> i64 {
        self.c as i64 - same as i64
    }

    /// Predicted `mult(V_μ, V_λ ⊗ V_(d-2,2))`, `None` if the half is not integral.
    pub fn two_row_multiplicity(&self) -> Option<i64> {
        let s = self.d as i64 + self.e as i64 - self.e_prime as i64;
        if s % 2 != 0 {
            return None;
        }
        Some(s / 2 - self.c as i64)
    }
}

fn removals(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..p.len() {
        if p[r] > p.get(r + 1).copied().unwrap_or(0) {
            let mut q = p.to_vec();
            q[r] -= 1;
            if q[r] == 0 {
                q.pop();
            }
            out.push(q);
        }
    }
    out
}

fn additions(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..=p.len() {
        let cur = p.get(r).copied().unwrap_or(0);
        if r == 0 || p[r - 1] > cur {
            let mut q = p.to_vec();
            if r == p.len() {
                q.push(1);
            } else {
                q[r] += 1;
            }
            out.push(q);
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Orientation {
    Horizontal,
    Vertical,
}

fn domino_removals(p: &[usize]) -> Vec<(Orientation, Vec<usize>)> {
    let at = |r: usize| p.get(r).copied().unwrap_or(0);
    let mut out = Vec::new();
    for r in 0..p.len() {
        if p[r] >= at(r + 1) + 2 {
            let mut q = p.to_vec();
            q[r] -= 2;
            out.push((Orientation::Horizontal, trim(q)));
        }
        if r + 1 < p.len() && p[r] == p[r + 1] && p[r + 1] > at(r + 2) {
            let mut q = p.to_vec();
            q[r] -= 1;
            q[r + 1] -= 1;
            out.push((Orientation::Vertical, trim(q)));
        }
    }
    out
}

fn domino_additions(p: &[usize]) -> Vec<(Orientation, Vec<usize>)> {
    let at = |r: usize| p.get(r).copied().unwrap_or(0);
    let mut out = Vec::new();
    for r in 0..=p.len() {
        let above = if r == 0 { usize::MAX } else { p[r - 1] };
        if above >= at(r) + 2 {
            let mut q = p.to_vec();
            q.resize(q.len().max(r + 1), 0);
            q[r] += 2;
            out.push((Orientation::Horizontal, trim(q)));
        }
        if at(r) == at(r + 1) && above > at(r) {
            let mut q = p.to_vec();
            q.resize(q.len().max(r + 2), 0);
            q[r] += 1;
            q[r + 1] += 1;
            out.push((Orientation::Vertical, trim(q)));
        }
    }
    out
}

fn trim(mut q: Vec<usize>) -> Vec<usize> {
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

/// Enumerates the cell moves behind the tensor-product rules.
pub fn tensor_rule_counts(mu: &Partition, lambda: &Partition) -> Result<TensorCounts> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("{mu:?} and {lambda:?}")));
    }
    let target = lambda.parts();
    let m = mu.parts();
    let mut c = 0;
    for r in removals(m) {
        c += additions(&r).iter().filter(|q| q.as_slice() == target).count() as u64;
    }
    let mut d = 0;
    for r1 in removals(m) {
        for r2 in removals(&r1) {
            for a1 in additions(&r2) {
                d += additions(&a1).iter().filter(|q| q.as_slice() == target).count() as u64;
            }
        }
    }
    let (mut e, mut e_prime) = (0, 0);
    if mu.size() >= 2 {
        for (o1, r) in domino_removals(m) {
            for (o2, a) in domino_additions(&r) {
                if a.as_slice() == target {
                    if o1 == o2 {
                        e += 1;
                    } else {
                        e_prime += 1;
                    }
                }
            }
        }
    }
    Ok(TensorCounts { c, d, e, e_prime })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basic_values() {
        for d in 1..=7 {
            for e in partitions_of(d) {
                assert_eq!(character(&Partition::row(d), &e).unwrap(), 1);
            }
            for l in partitions_of(d) {
                assert_eq!(character(&l, &Partition::column(d)).unwrap() as u128, dimension(&l));
            }
            for i in 0..d {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::hook(d, i), &Partition::row(d)).unwrap(), sign);
            }
        }
        assert!(character(&p("2,1"), &p("2,2")).is_err());
    }

    #[test]
    fn p_values() {
        assert_eq!(p_lambda(&p("5")), 0);
        assert_eq!(p_lambda(&p("1^5")), 1);
        assert_eq!(p_lambda(&p("2,2,1")), 3);
        assert_eq!(p_lambda(&p("2,2,2")), 3);
        assert_eq!(p_lambda(&p("1")), 0);
    }

    #[test]
    fn adhoc_symmetric_powers() {
        let s3 = symmetric_power_character(&VirtualCharacter::standard(3), 3).unwrap();
        assert_eq!(mult(&VirtualCharacter::irreducible(&p("1^3")), &s3).unwrap(), 1);
        let s4 = symmetric_power_character(&VirtualCharacter::standard(4), 4).unwrap();
        assert_eq!(mult(&VirtualCharacter::irreducible(&p("1^4")), &s4).unwrap(), 0);
        assert!(symmetric_power_character(&s4, 5).is_err());
        let s2 = symmetric_power_character(&VirtualCharacter::standard(5), 2).unwrap();
        assert_eq!(s2.degree(), 10);
    }

    #[test]
    fn corner_count_on_diagonal() {
        let c = tensor_rule_counts(&p("5"), &p("5")).unwrap();
        assert_eq!(c.c, 1);
        let c = tensor_rule_counts(&p("3,2,1"), &p("3,2,1")).unwrap();
        assert_eq!(c.c, 3);
    }

    #[test]
    fn non_integral_product_is_flagged() {
        let half = VirtualCharacter::from_fn(3, |e| if e.parts() == [1, 1, 1] { 1 } else { 0 });
        assert!(mult(&half, &VirtualCharacter::trivial(3)).unwrap_err().is_consistency());
    }
}
