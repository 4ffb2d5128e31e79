//! Partitions, Young diagrams, standard tableaux and charge statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The same type serves as a shape, a cycle type and a ramification pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// `(d)`.
    pub fn row(d: usize) -> Self {
        Partition { parts: vec![d] }
    }

    /// `(1^d)`.
    pub fn column(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    /// `(d-i, 1^i)`.
    pub fn hook(d: usize, i: usize) -> Self {
        assert!(i < d);
        let mut parts = vec![d - i];
        parts.extend(std::iter::repeat_n(1, i));
        Partition { parts }
    }

    /// Cycle type of a transposition, `(2, 1^(d-2))`.
    pub fn transposition(d: usize) -> Self {
        assert!(d >= 2);
        Self::hook(d, d - 2)
    }

    /// `(m, 1^(d-m))`.
    pub fn cycle(d: usize, m: usize) -> Self {
        assert!(m >= 1 && m <= d);
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, d - m));
        Self::from_unsorted(parts).unwrap()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let n = self.parts[0];
        let parts = (0..n).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Number of fixed points when read as a cycle type.
    pub fn fixed_points(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// `(-1)^(d - #parts)`: the sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Least common multiple of the parts.
    pub fn lcm(&self) -> usize {
        self.parts.iter().fold(1, |acc, &p| num_integer::lcm(acc, p))
    }

    /// Cycle type of `ρ^i` for `ρ` of this cycle type: a part `c` becomes
    /// `gcd(c, i)` parts of size `c / gcd(c, i)`.
    pub fn power(&self, i: usize) -> Self {
        let mut parts = Vec::new();
        for &c in &self.parts {
            let g = num_integer::gcd(c, i);
            parts.extend(std::iter::repeat_n(c / g, g));
        }
        Self::from_unsorted(parts).unwrap()
    }

    /// Σ (part − 1).
    pub fn tame_exponent(&self) -> usize {
        self.size() - self.len()
    }

    /// Cells `(row, col)` in row-major order, zero based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (0..p).map(move |c| (r, c))).collect()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.part(r) > c
    }

    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let conj = self.conjugate();
        self.parts[r] - c + conj.parts[c] - r - 1
    }

    /// Size of the centralizer of a permutation of this cycle type.
    pub fn centralizer_size(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0u128;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
            }
            z *= (p as u128).pow(m as u32) * factorial(m as usize);
        }
        z
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_size()
    }

    /// Exponent-style rendering such as `(2^2,1)`.
    pub fn pretty(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
            }
            if m == 1 {
                out.push(p.to_string());
            } else {
                out.push(format!("{p}^{m}"));
            }
        }
        format!("({})", out.join(","))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)`, `3 2 1` and exponent forms like `2^2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in t.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()) {
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => (b, m.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?),
                None => (tok, 1),
            };
            let b = base.parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{tok}` in `{s}`")))?;
            parts.extend(std::iter::repeat_n(b, mult));
        }
        Partition::new(parts).map_err(|e| match e {
            Error::InvalidPartition(m) => Error::InvalidPartition(format!("`{s}`: {m}")),
            other => other,
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d` in reverse lexicographic order.
pub fn enumerate_partitions(d: usize) -> Result<Vec<Partition>> {
    if d == 0 {
        return Err(Error::EmptyInput("partitions of 0".into()));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(d, d, &mut cur, &mut out);
    Ok(out)
}

/// Partitions of `d`, panicking on `d = 0`; a convenience for internal loops.
pub(crate) fn partitions_of(d: usize) -> Vec<Partition> {
    enumerate_partitions(d).expect("d >= 1")
}

/// Number of standard tableaux of shape `λ`, by the hook-length formula.
pub fn dimension(lambda: &Partition) -> u128 {
    let mut num = factorial(lambda.size());
    let conj = lambda.conjugate();
    for (r, c) in lambda.cells() {
        let h = lambda.parts[r] - c + conj.parts[c] - r - 1;
        num /= h as u128;
    }
    num
}

/// A standard Young tableau stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let d = shape.size();
        let mut seen = vec![false; d + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > d || seen[x] {
                return Err(Error::Validation(format!("entries of {rows:?} are not 1..{d}")));
            }
            seen[x] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            for c in 0..row.len() {
                if c + 1 < row.len() && row[c] >= row[c + 1] {
                    return Err(Error::Validation(format!("row {r} of {rows:?} not increasing")));
                }
                if r + 1 < rows.len() && c < rows[r + 1].len() && row[c] >= rows[r + 1][c] {
                    return Err(Error::Validation(format!("column {c} of {rows:?} not increasing")));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    /// The tableau filled row by row.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut k = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                (0..p)
                    .map(|_| {
                        k += 1;
                        k
                    })
                    .collect()
            })
            .collect();
        StandardTableau { shape: shape.clone(), rows }
    }

    /// The tableau filled column by column.
    pub fn column_reading(shape: &Partition) -> Self {
        let t = Self::row_reading(&shape.conjugate());
        t.transpose()
    }

    pub fn transpose(&self) -> Self {
        let conj = self.shape.conjugate();
        let rows = (0..conj.len()).map(|c| (0..conj.parts[c]).map(|r| self.rows[r][c]).collect()).collect();
        StandardTableau { shape: conj, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Cell `(row, col)` containing entry `i`.
    pub fn position(&self, i: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == i) {
                return (r, c);
            }
        }
        panic!("entry {i} not in tableau");
    }

    /// `position(i)` for all `i`, indexed by `i - 1`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                pos[x - 1] = (r, c);
            }
        }
        pos
    }

    /// Content `col - row` of the cell containing each entry, indexed by `i - 1`.
    pub fn contents(&self) -> Vec<i64> {
        self.positions().into_iter().map(|(r, c)| c as i64 - r as i64).collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flat_map(|r| r.iter().copied()).collect()
    }
}

/// All standard tableaux of shape `λ`.
///
/// Ordered by the sequence of rows receiving `1, 2, ..., d`, lexicographically.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    let d = lambda.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    fn rec(k: usize, d: usize, lambda: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        if k > d {
            out.push(StandardTableau { shape: lambda.clone(), rows: rows.clone() });
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            if len < lambda.parts[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                rec(k + 1, d, lambda, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, d, lambda, &mut rows, &mut out);
    out
}

/// Charge word of a standard tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeData {
    pub reading_word: Vec<usize>,
    /// `subscripts[i - 1] = s(i)`.
    pub subscripts: Vec<usize>,
    pub charge: usize,
    pub max_subscript: usize,
}

impl ChargeData {
    pub fn subscript(&self, i: usize) -> usize {
        self.subscripts[i - 1]
    }
}

pub fn charge_data(t: &StandardTableau) -> ChargeData {
    let word = t.reading_word();
    let d = word.len();
    let mut where_ = vec![0; d + 1];
    for (k, &x) in word.iter().enumerate() {
        where_[x] = k;
    }
    let mut s = vec![0usize; d];
    for i in 1..d {
        s[i] = if where_[i + 1] < where_[i] { s[i - 1] + 1 } else { s[i - 1] };
    }
    let charge = s.iter().sum();
    let max_subscript = s.last().copied().unwrap_or(0);
    ChargeData { reading_word: word, subscripts: s, charge, max_subscript }
}

/// Exponent vector of the monomial `x_T^{chw S}`: entry `i - 1` is the charge
/// subscript of `S` at the cell that holds `i` in `T`.
pub fn charge_monomial(t: &StandardTableau, s: &StandardTableau) -> Result<Vec<usize>> {
    if t.shape() != s.shape() {
        return Err(Error::SizeMismatch(format!("shapes {:?} and {:?} differ", t.shape(), s.shape())));
    }
    let cd = charge_data(s);
    Ok(t.positions().into_iter().map(|(r, c)| cd.subscript(s.rows[r][c])).collect())
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Vec<usize>,
}

impl SkewShape {
    /// `inner` may be empty (the zero partition) and need not be normalized.
    pub fn new(outer: Partition, inner: &[usize]) -> Result<Self> {
        let inner: Vec<usize> = inner.iter().copied().filter(|&x| x > 0).collect();
        if inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("inner shape {inner:?} not decreasing")));
        }
        if inner.len() > outer.len() || inner.iter().enumerate().any(|(i, &p)| p > outer.parts[i]) {
            return Err(Error::Validation(format!("{inner:?} does not fit inside {outer:?}")));
        }
        Ok(SkewShape { outer, inner })
    }

    fn inner_part(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len()).flat_map(|r| (self.inner_part(r)..self.outer.parts[r]).map(move |c| (r, c))).collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.iter().sum::<usize>()
    }

    /// Occupied rows minus one.
    pub fn height(&self) -> usize {
        let rows = (0..self.outer.len()).filter(|&r| self.outer.parts[r] > self.inner_part(r)).count();
        rows.saturating_sub(1)
    }

    /// Connected under 4-adjacency and free of 2x2 squares.
    pub fn is_border_strip(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let has = |r: usize, c: usize| self.outer.part(r) > c && c >= self.inner_part(r);
        for &(r, c) in &cells {
            if has(r + 1, c) && has(r, c + 1) && has(r + 1, c + 1) {
                return false;
            }
        }
        let mut seen = vec![cells[0]];
        let mut stack = vec![cells[0]];
        while let Some((r, c)) = stack.pop() {
            let mut nb = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                nb.push((r - 1, c));
            }
            if c > 0 {
                nb.push((r, c - 1));
            }
            for (a, b) in nb {
                if has(a, b) && !seen.contains(&(a, b)) {
                    seen.push((a, b));
                    stack.push((a, b));
                }
            }
        }
        seen.len() == cells.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_order() {
        let ps = enumerate_partitions(4).unwrap();
        let s: Vec<String> = ps.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(6).unwrap().len(), 11);
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("1")]);
        assert!(matches!(enumerate_partitions(0), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("5").conjugate(), p("1^5"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("(2^2,1)"), p("2,2,1"));
        assert_eq!(p("2 2 1").pretty(), "(2^2,1)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(standard_tableaux(&p("4")).len(), 1);
        assert_eq!(standard_tableaux(&p("1^4")).len(), 1);
        assert_eq!(standard_tableaux(&p("2,1")).len(), 2);
        assert_eq!(dimension(&p("2,2,1")), 5);
        assert_eq!(dimension(&p("2,2")), 2);
        assert_eq!(dimension(&p("7")), 1);
    }

    #[test]
    fn charge_of_worked_example() {
        let t = StandardTableau::new(vec![vec![1, 3, 5, 7], vec![2, 4], vec![6]]).unwrap();
        let cd = charge_data(&t);
        assert_eq!(cd.reading_word, vec![6, 2, 4, 1, 3, 5, 7]);
        assert_eq!(cd.charge, 12);
        assert_eq!(cd.max_subscript, 3);
    }

    #[test]
    fn charge_of_row_and_column() {
        let row = charge_data(&StandardTableau::row_reading(&p("5")));
        assert_eq!((row.charge, row.max_subscript), (0, 0));
        let col = charge_data(&StandardTableau::column_reading(&p("1^5")));
        assert_eq!(col.subscripts, vec![0, 1, 2, 3, 4]);
        assert_eq!((col.charge, col.max_subscript), (10, 4));
    }

    #[test]
    fn charge_monomial_of_worked_pair() {
        let s = StandardTableau::new(vec![vec![1, 3, 5, 7], vec![2, 4], vec![6]]).unwrap();
        let t = StandardTableau::new(vec![vec![1, 2, 3, 6], vec![4, 5], vec![7]]).unwrap();
        assert_eq!(charge_monomial(&t, &s).unwrap(), vec![0, 1, 2, 1, 2, 3, 3]);
    }

    #[test]
    fn invalid_tableaux() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![4, 3]]).is_err());
    }

    #[test]
    fn border_strips() {
        let s = SkewShape::new(p("3,2"), &[1]).unwrap();
        assert!(s.is_border_strip());
        assert_eq!(s.height(), 1);
        let s = SkewShape::new(p("3,3"), &[1]).unwrap();
        assert!(!s.is_border_strip());
        let s = SkewShape::new(p("3,2"), &[2]).unwrap();
        assert!(!s.is_border_strip());
        let s = SkewShape::new(p("3,2"), &[1, 1]).unwrap();
        assert!(s.is_border_strip());
        assert_eq!(s.height(), 1);
        let s = SkewShape::new(p("3,2"), &[2, 2]).unwrap();
        assert!(s.is_border_strip());
        assert_eq!(s.height(), 0);
        let s = SkewShape::new(p("3,1"), &[1]).unwrap();
        assert!(!s.is_border_strip());
        let s = SkewShape::new(p("2,2"), &[]).unwrap();
        assert!(!s.is_border_strip());
        assert!(SkewShape::new(p("2"), &[3]).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p("2,1,1").class_size(), 6);
        assert_eq!(p("2,2").class_size(), 3);
        assert_eq!(p("3,2,1").centralizer_size(), 6);
        assert_eq!(binomial(6, 2), 15);
    }
}
