//! Permutation subgroups of `S_d`: closure, cosets, permutation characters,
//! the product criterion and the named registry.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::Serialize;

use crate::characters::VirtualCharacter;
use crate::error::{Error, Result};
use crate::scalar::{rat, rat_int, BigRational};
use crate::tableaux::{factorial, partitions_of, Partition};

/// Hard cap on the degree for element enumeration.
pub const MAX_GROUP_DEGREE: usize = 9;

/// A permutation of `{1, …, d}`, stored zero based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// From zero-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 0..{d}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(d: usize) -> Self {
        Perm { images: (0..d).collect() }
    }

    /// From one-based cycles, e.g. `&[&[1, 2, 3], &[4, 5]]`.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut used = vec![false; d];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > d {
                    return Err(Error::InvalidPermutation(format!("point {a} outside 1..{d}")));
                }
                if used[a - 1] {
                    return Err(Error::InvalidPermutation(format!("point {a} repeated in cycles")));
                }
                used[a - 1] = true;
                let b = cyc[(k + 1) % cyc.len()];
                images[a - 1] = b - 1;
            }
        }
        Perm::new(images)
    }

    /// Parses cycle notation such as `(1 2 3 4)(5 6)` or `(1,2)`; `()` is the identity.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let r = rest.trim_start();
            if r.is_empty() {
                break;
            }
            if !r.starts_with('(') {
                return Err(Error::Parse(format!("expected `(` in `{s}`")));
            }
            let close = r.find(')').ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{s}`")))?;
            let body = &r[1..close];
            let pts: std::result::Result<Vec<usize>, _> =
                body.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).map(|x| x.parse::<usize>()).collect();
            let pts = pts.map_err(|_| Error::Parse(format!("bad point in `{s}`")))?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = &r[close + 1..];
        }
        // Cycles are composed right to left, as permutations.
        let mut p = Perm::identity(d);
        for c in cycles.iter().rev() {
            let q = Perm::from_cycles(d, &[c.as_slice()])?;
            p = &q * &p;
        }
        Ok(p)
    }

    /// A fixed permutation with the given cycle type, built from consecutive blocks.
    pub fn of_cycle_type(e: &Partition) -> Self {
        let d = e.size();
        let mut images: Vec<usize> = (0..d).collect();
        let mut start = 0;
        for &c in e.parts() {
            for k in 0..c {
                images[start + k] = start + (k + 1) % c;
            }
            start += c;
        }
        Perm { images }
    }

    /// Transposition of one-based points `a`, `b`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        Perm::from_cycles(d, &[&[a, b]]).expect("valid transposition")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a zero-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// One-based cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.images[x];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut parts = Vec::new();
        for s in 0..d {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            if len > 0 {
                parts.push(len);
            }
        }
        Partition::from_unsorted(parts).expect("nonempty cycle type")
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut r = Perm::identity(self.degree());
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn order(&self) -> usize {
        self.cycle_type().lcm()
    }

    pub fn is_transposition(&self) -> bool {
        let moved = self.images.iter().enumerate().filter(|(i, &x)| *i != x).count();
        moved == 2
    }
}

/// `(a * b)(i) = a(b(i))`: apply `b` first.
impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in composition");
        Perm { images: rhs.images.iter().map(|&x| self.images[x]).collect() }
    }
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Every permutation of degree `d`, in lexicographic order of images.
pub fn all_permutations(d: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..d).collect();
    let mut out = vec![Perm { images: cur.clone() }];
    while let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) {
        let j = (i + 1..d).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Perm { images: cur.clone() });
    }
    out
}

/// A subgroup of `S_d` with its complete element list.
#[derive(Clone)]
pub struct PermSubgroup {
    d: usize,
    name: String,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    lookup: HashSet<Perm>,
    induced: OnceLock<VirtualCharacter>,
}

impl fmt::Debug for PermSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {} in S_{})", self.name, self.order(), self.d)
    }
}

/// Closes `gens` under composition.
pub fn close_group(d: usize, gens: &[Perm]) -> Result<PermSubgroup> {
    if d == 0 {
        return Err(Error::EmptyInput("degree 0".into()));
    }
    if d > MAX_GROUP_DEGREE {
        return Err(Error::Resource(format!("degree {d} exceeds the enumeration cap {MAX_GROUP_DEGREE}")));
    }
    for g in gens {
        if g.degree() != d {
            return Err(Error::SizeMismatch(format!("generator {g} has degree {}, expected {d}", g.degree())));
        }
    }
    let id = Perm::identity(d);
    let mut lookup = HashSet::new();
    lookup.insert(id.clone());
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g * &x;
            if lookup.insert(y.clone()) {
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    elements.sort();
    let name = if gens.is_empty() {
        "trivial".to_string()
    } else {
        format!("<{}>", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    };
    Ok(PermSubgroup { d, name, generators: gens.to_vec(), elements, lookup, induced: OnceLock::new() })
}

impl PermSubgroup {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> u128 {
        self.elements.len() as u128
    }

    pub fn index(&self) -> u128 {
        factorial(self.d) / self.order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.lookup.contains(p)
    }

    /// Transitive on `{1, …, d}`.
    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Orbits on `{1, …, d}` (zero based).
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.d];
        let mut out = Vec::new();
        for s in 0..self.d {
            if seen[s] {
                continue;
            }
            let mut orb = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < orb.len() {
                let x = orb[k];
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
                k += 1;
            }
            out.push(orb);
        }
        out
    }

    /// Number of elements of each cycle type, in partition order.
    pub fn cycle_type_counts(&self) -> Vec<(Partition, u128)> {
        let mut counts: HashMap<Partition, u128> = HashMap::new();
        for g in &self.elements {
            *counts.entry(g.cycle_type()).or_default() += 1;
        }
        partitions_of(self.d).into_iter().map(|e| (e.clone(), counts.get(&e).copied().unwrap_or(0))).collect()
    }

    /// `x H x^-1`.
    pub fn conjugate_by(&self, x: &Perm) -> PermSubgroup {
        let xi = x.inverse();
        let gens: Vec<Perm> = self.generators.iter().map(|g| &(x * g) * &xi).collect();
        close_group(self.d, &gens).expect("same degree").with_name(format!("{}^{}", self.name, x))
    }

    pub fn same_elements(&self, other: &PermSubgroup) -> bool {
        self.elements == other.elements
    }

    /// Conjugate inside `S_d` to `other`, by exhaustive search.
    pub fn is_conjugate_to(&self, other: &PermSubgroup) -> bool {
        if self.d != other.d || self.order() != other.order() || self.cycle_type_counts() != other.cycle_type_counts() {
            return false;
        }
        all_permutations(self.d).iter().any(|x| {
            let xi = x.inverse();
            self.generators.iter().all(|g| other.contains(&(&(x * g) * &xi)))
        })
    }

    pub fn permutation_character(&self) -> VirtualCharacter {
        permutation_character(self)
    }
}

/// Left cosets `gH` with the left action of `S_d`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// One representative per coset; the first is the identity.
    pub representatives: Vec<Perm>,
    /// `action[k][i]`: index of `s_k g_i H` where `s_k = (k+1 k+2)`.
    pub action: Vec<Vec<usize>>,
    keys: HashMap<Perm, usize>,
    elements: Vec<Perm>,
    lookup: HashSet<Perm>,
}

impl CosetAction {
    pub fn new(h: &PermSubgroup) -> Self {
        let d = h.degree();
        let key = |g: &Perm| h.elements.iter().map(|x| g * x).min().unwrap();
        let gens: Vec<Perm> = (1..d).map(|k| Perm::transposition(d, k, k + 1)).collect();
        let id = Perm::identity(d);
        let mut keys = HashMap::new();
        keys.insert(key(&id), 0usize);
        let mut reps = vec![id];
        let mut k = 0;
        while k < reps.len() {
            for s in &gens {
                let y = s * &reps[k];
                let ky = key(&y);
                if let std::collections::hash_map::Entry::Vacant(e) = keys.entry(ky) {
                    e.insert(reps.len());
                    reps.push(y);
                }
            }
            k += 1;
        }
        let mut action = Vec::with_capacity(gens.len());
        for s in &gens {
            action.push(reps.iter().map(|g| keys[&key(&(s * g))]).collect());
        }
        CosetAction { representatives: reps, action, keys, elements: h.elements.clone(), lookup: h.lookup.clone() }
    }

    pub fn degree(&self) -> usize {
        self.representatives.len()
    }

    fn key(&self, g: &Perm) -> Perm {
        self.elements.iter().map(|x| g * x).min().unwrap()
    }

    /// Coset index of `g H`.
    pub fn coset_of(&self, g: &Perm) -> usize {
        self.keys[&self.key(g)]
    }

    /// The permutation of coset indices induced by `σ`.
    pub fn permutation_of(&self, sigma: &Perm) -> Vec<usize> {
        self.representatives.iter().map(|g| self.coset_of(&(sigma * g))).collect()
    }

    /// Cosets fixed by `σ`: those `gH` with `g^-1 σ g ∈ H`.
    pub fn fixed_count(&self, sigma: &Perm) -> usize {
        self.representatives.iter().filter(|g| self.lookup.contains(&(&g.inverse() * &(sigma * *g)))).count()
    }

    /// Orbit sizes of `⟨σ⟩` on the cosets, as a partition of the index.
    pub fn orbit_sizes(&self, sigma: &Perm) -> Partition {
        let perm = self.permutation_of(sigma);
        let mut seen = vec![false; perm.len()];
        let mut sizes = Vec::new();
        for s in 0..perm.len() {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = perm[x];
            }
            if len > 0 {
                sizes.push(len);
            }
        }
        Partition::from_unsorted(sizes).unwrap()
    }

    /// Every generator orbit reaches every coset.
    pub fn is_transitive(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for a in &self.action {
                if !seen[a[x]] {
                    seen[a[x]] = true;
                    stack.push(a[x]);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// `Ind_H^{S_d} 1` by counting fixed cosets, cross-checked against the
/// class-counting formula `z_e |H ∩ class(e)| / |H|`.
pub fn permutation_character(h: &PermSubgroup) -> VirtualCharacter {
    h.induced.get_or_init(|| induced_character(h)).clone()
}

fn induced_character(h: &PermSubgroup) -> VirtualCharacter {
    let ca = CosetAction::new(h);
    let counts = h.cycle_type_counts();
    let values = partitions_of(h.degree())
        .iter()
        .zip(&counts)
        .map(|(e, (_, c))| {
            let fixed = ca.fixed_count(&Perm::of_cycle_type(e)) as i64;
            debug_assert_eq!(fixed as u128, e.centralizer_size() * c / h.order());
            fixed
        })
        .collect();
    VirtualCharacter { d: h.degree(), values }
}

/// Fixed-coset count via the class formula alone.
pub fn permutation_character_by_classes(h: &PermSubgroup) -> VirtualCharacter {
    let values = h
        .cycle_type_counts()
        .iter()
        .map(|(e, c)| (e.centralizer_size() * c / h.order()) as i64)
        .collect();
    VirtualCharacter { d: h.degree(), values }
}

/// `n(H, σ) = [S_d : H] − χ_Ind(σ)` for `σ` of cycle type `e`.
pub fn n_of(h: &PermSubgroup, e: &Partition) -> i64 {
    let chi = permutation_character(h);
    chi.degree() - chi.value(e)
}

/// `p(H)`, computed as `(d−2)! · #{transpositions ∉ H} / |H|` and as
/// `(index − χ_Ind((12))) / 2`; the two must agree.
pub fn p_of_subgroup(h: &PermSubgroup) -> Result<BigRational> {
    let d = h.degree();
    if d < 2 {
        return Err(Error::OutOfRange("p(H) needs d >= 2".into()));
    }
    let total = (d * (d - 1) / 2) as i64;
    let inside = h.elements().iter().filter(|g| g.is_transposition()).count() as i64;
    let by_count = rat_int(factorial(d - 2) as i64 * (total - inside)) / rat_int(h.order() as i64);
    let chi = permutation_character(h);
    let by_char = rat(chi.degree() - chi.value(&Partition::transposition(d)), 2);
    if by_count != by_char {
        return Err(Error::Consistency(format!("p(H) formulas disagree: {by_count} vs {by_char}")));
    }
    Ok(by_count)
}

/// One double coset `H σ G`.
#[derive(Clone, Debug, Serialize)]
pub struct DoubleCoset {
    pub representative: Perm,
    pub size: u128,
    /// `|HσG| / |H|`: degree of the matching component.
    pub degree: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub full: bool,
    pub product_size: u128,
    pub double_cosets: Vec<DoubleCoset>,
}

impl ProductReport {
    pub fn component_degrees(&self) -> Vec<u128> {
        self.double_cosets.iter().map(|c| c.degree).collect()
    }
}

/// Whether `GH = S_d`, with the double cosets `H \ S_d / G`.
pub fn product_is_full(g: &PermSubgroup, h: &PermSubgroup) -> Result<ProductReport> {
    if g.degree() != h.degree() {
        return Err(Error::SizeMismatch("G and H have different degrees".into()));
    }
    let d = g.degree();
    let mut product = HashSet::new();
    for x in g.elements() {
        for y in h.elements() {
            product.insert(x * y);
        }
    }
    let product_size = product.len() as u128;
    let full = product_size == factorial(d);
    let mut assigned: HashSet<Perm> = HashSet::new();
    let mut double_cosets = Vec::new();
    for s in all_permutations(d) {
        if assigned.contains(&s) {
            continue;
        }
        let before = assigned.len();
        for x in h.elements() {
            let xs = x * &s;
            for y in g.elements() {
                assigned.insert(&xs * y);
            }
        }
        let size = (assigned.len() - before) as u128;
        double_cosets.push(DoubleCoset { representative: s, size, degree: size / h.order() });
    }
    Ok(ProductReport { full, product_size, double_cosets })
}

fn gens_from(d: usize, cycles: &[&str]) -> Vec<Perm> {
    cycles.iter().map(|c| Perm::parse(c, d).expect("registry generator")).collect()
}

/// Named subgroups with their exact generators.
fn named(name: &str) -> Option<(usize, Vec<&'static str>)> {
    Some(match name {
        "D4" => (4, vec!["(1 2 3 4)", "(1 3)"]),
        "AGL1F5" => (5, vec!["(1 2 3 4 5)", "(1 2 4 3)"]),
        "S5prime" => (6, vec!["(1 2 3 4)", "(1 5 6 2)"]),
        "F36" => (6, vec!["(2 4 6)", "(1 5)(2 4)", "(1 4 5 2)(3 6)"]),
        "F72" => (6, vec!["(2 4 6)", "(2 4)", "(1 4)(2 5)(3 6)"]),
        "V4" => (4, vec!["(1 2)(3 4)", "(1 3)(2 4)"]),
        _ => return None,
    })
}

/// Generators of the transitive subgroups of `S_4`, `S_5`, `S_6` up to
/// conjugacy, sorted by order. Registered as `T{d}_{k}` with `k` starting at 1.
fn transitive_generators(d: usize) -> &'static [&'static [&'static str]] {
    match d {
        4 => &[
            &["(1 2 4 3)"],
            &["(1 2)(3 4)", "(1 3)(2 4)"],
            &["(2 4)", "(1 2)(3 4)"],
            &["(2 3 4)", "(1 2)(3 4)"],
            &["(3 4)", "(1 2 3)"],
        ],
        5 => &[
            &["(1 2 4 5 3)"],
            &["(2 5)(3 4)", "(1 2)(3 5)"],
            &["(2 3 4 5)", "(1 2)(3 4)"],
            &["(3 4 5)", "(1 2 3)"],
            &["(4 5)", "(1 2 3 4)"],
        ],
        6 => &[
            &["(1 2 5 6 3 4)"],
            &["(1 2)(3 4)(5 6)", "(1 3 5)(2 6 4)"],
            &["(3 5)(4 6)", "(1 3)(2 6)(4 5)"],
            &["(3 4)(5 6)", "(1 3 5)(2 4 6)"],
            &["(2 3 6)", "(1 2)(3 4)(5 6)"],
            &["(3 5)", "(1 2 3)(4 5 6)"],
            &["(3 4 5 6)", "(1 3)(2 5)(4 6)"],
            &["(3 4)(5 6)", "(1 3 2 5)(4 6)"],
            &["(3 4)(5 6)", "(1 2 3 5)(4 6)"],
            &["(3 5)(4 6)", "(1 2 3 4 5 6)"],
            &["(2 3)(5 6)", "(1 2 3 4 5 6)"],
            &["(3 6)(4 5)", "(1 2 3)(4 6 5)"],
            &["(5 6)", "(1 3 2 5)(4 6)"],
            &["(3 4 5 6)", "(1 2 3)(4 5 6)"],
            &["(4 5 6)", "(1 2 3 4)(5 6)"],
            &["(5 6)", "(1 2 3 4 5)"],
        ],
        _ => &[],
    }
}

/// Names of the transitive subgroups available for degree `d`.
pub fn transitive_names(d: usize) -> Vec<String> {
    (1..=transitive_generators(d).len()).map(|k| format!("T{d}_{k}")).collect()
}

/// Registry names with a fixed degree.
pub const NAMED_SUBGROUPS: [&str; 6] = ["D4", "AGL1F5", "S5prime", "F36", "F72", "V4"];

/// Looks up a registry name or parses a `;`-separated generator list.
///
/// Names: `D4`, `AGL1F5`, `S5prime`, `F36`, `F72`, `V4`, `T{d}_{k}`,
/// `Young:<partition>`, `Sd`, `Ad`, `Sd-1` (point stabilizer), `trivial`,
/// and `S<n>`/`A<n>` with explicit degree.
pub fn registry(name: &str, d: usize) -> Result<PermSubgroup> {
    let name = name.trim();
    if name.starts_with('(') {
        let gens = name.split(';').map(|g| Perm::parse(g, d)).collect::<Result<Vec<_>>>()?;
        return close_group(d, &gens);
    }
    if let Some((deg, gens)) = named(name) {
        if deg != d {
            return Err(Error::Validation(format!("{name} lives in S_{deg}, not S_{d}")));
        }
        return Ok(close_group(d, &gens_from(d, &gens))?.with_name(name));
    }
    if let Some(rest) = name.strip_prefix('T') {
        if let Some((a, b)) = rest.split_once('_') {
            let deg: usize = a.parse().map_err(|_| Error::UnknownSubgroup(name.into()))?;
            let k: usize = b.parse().map_err(|_| Error::UnknownSubgroup(name.into()))?;
            if deg != d {
                return Err(Error::Validation(format!("{name} lives in S_{deg}, not S_{d}")));
            }
            let list = transitive_generators(d);
            if k == 0 || k > list.len() {
                return Err(Error::UnknownSubgroup(name.into()));
            }
            return Ok(close_group(d, &gens_from(d, list[k - 1]))?.with_name(name));
        }
    }
    if let Some(p) = name.strip_prefix("Young:") {
        let lambda: Partition = p.parse()?;
        if lambda.size() != d {
            return Err(Error::Validation(format!("Young subgroup {lambda} is not a partition of {d}")));
        }
        return Ok(young_subgroup(&lambda)?.with_name(name));
    }
    let explicit = |prefix: char| -> Option<usize> {
        name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok())
    };
    match name {
        "Sd" => return Ok(symmetric_group(d)?.with_name(format!("S{d}"))),
        "Ad" => return Ok(alternating_group(d)?.with_name(format!("A{d}"))),
        "trivial" => return Ok(close_group(d, &[])?.with_name("trivial")),
        "Sd-1" => {
            if d < 2 {
                return Err(Error::OutOfRange("S_{d-1} needs d >= 2".into()));
            }
            return Ok(young_subgroup(&Partition::hook(d, 1))?.with_name(format!("S{}", d - 1)));
        }
        _ => {}
    }
    if let Some(n) = explicit('S') {
        if n != d {
            return Err(Error::Validation(format!("S{n} requested in degree {d}")));
        }
        return Ok(symmetric_group(d)?.with_name(name));
    }
    if let Some(n) = explicit('A') {
        if n != d {
            return Err(Error::Validation(format!("A{n} requested in degree {d}")));
        }
        return Ok(alternating_group(d)?.with_name(name));
    }
    Err(Error::UnknownSubgroup(name.into()))
}

/// Degree implied by a fixed-degree registry name.
pub fn registry_degree(name: &str) -> Option<usize> {
    if let Some((d, _)) = named(name.trim()) {
        return Some(d);
    }
    let rest = name.trim().strip_prefix('T')?;
    rest.split_once('_')?.0.parse().ok()
}

pub fn symmetric_group(d: usize) -> Result<PermSubgroup> {
    let gens: Vec<Perm> = (1..d).map(|k| Perm::transposition(d, k, k + 1)).collect();
    close_group(d, &gens)
}

pub fn alternating_group(d: usize) -> Result<PermSubgroup> {
    let gens: Vec<Perm> = (1..d.saturating_sub(1)).map(|k| Perm::from_cycles(d, &[&[k, k + 1, k + 2]]).unwrap()).collect();
    close_group(d, &gens)
}

/// `S_λ` acting on consecutive blocks, generated by adjacent transpositions.
pub fn young_subgroup(lambda: &Partition) -> Result<PermSubgroup> {
    let d = lambda.size();
    let mut gens = Vec::new();
    let mut start = 1;
    for &b in lambda.parts() {
        for k in start..start + b - 1 {
            gens.push(Perm::transposition(d, k, k + 1));
        }
        start += b;
    }
    Ok(close_group(d, &gens)?.with_name(format!("Young:{lambda}")))
}

impl FromStr for Perm {
    type Err = Error;
    /// Parses cycle notation, taking the degree from the largest point.
    fn from_str(s: &str) -> Result<Self> {
        let d = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|x| !x.is_empty())
            .filter_map(|x| x.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        Perm::parse(s, d)
    }
}

/// Counts permutations inside `H` with a given cycle type.
pub fn class_intersection(h: &PermSubgroup, e: &Partition) -> u128 {
    h.elements().iter().filter(|g| &g.cycle_type() == e).count() as u128
}

/// The class formula value of the permutation character, as a rational.
pub fn fixed_cosets_formula(h: &PermSubgroup, e: &Partition) -> BigRational {
    let c = class_intersection(h, e);
    let v = rat_int((e.centralizer_size() * c) as i64) / rat_int(h.order() as i64);
    debug_assert!(!v.is_zero() || c == 0);
    v
}
