//! Independent oracles and the acceptance criteria shared by the integration
//! tests and the `acceptance` runner.
#![allow(dead_code)]

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scrollar_core::characters::{
    character, mult, p_lambda, specht_action, symmetric_power_character, tensor_rule_counts, CharacterTable,
    VirtualCharacter,
};
use scrollar_core::groups::{product_is_full, registry, transitive_names, PermSubgroup, Perm};
use scrollar_core::linalg::Matrix;
use scrollar_core::localmodel::{
    build_model, build_model_with_bound, check_specht, gram_valuation, isotypic_lattice, monomial_gram_valuation,
    specht_family_report,
};
use scrollar_core::ramify::compare_with_reference;
use scrollar_core::ramify::{
    addendum_table, lambda_maximal_by_characters, lambda_maximal_by_classification,
};
use scrollar_core::scrollar::{
    dual_scrollars, hook_scrollars, resolvent_summary, schreyer_interval, volume, ScrollarProfile,
};
use scrollar_core::tableaux::{binomial, charge_data, dimension, enumerate_partitions, factorial, standard_tableaux, Partition};
use scrollar_core::{QPoly, Rational};

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

// ---------------------------------------------------------------------------
// Kostka-inversion character oracle

/// Number of ways to distribute the cycles of `e` into rows with sizes `mu`:
/// the character of the Young permutation module `M^μ` at `e`.
pub fn fixed_tabloids(mu: &[usize], e: &[usize]) -> i64 {
    fn go(cycles: &[usize], room: &mut [usize]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return room.iter().all(|&r| r == 0) as i64;
        };
        let mut n = 0;
        for j in 0..room.len() {
            if room[j] >= c {
                room[j] -= c;
                n += go(rest, room);
                room[j] += c;
            }
        }
        n
    }
    go(e, &mut mu.to_vec())
}

/// Semistandard tableaux of shape `shape` and content `content`, by peeling
/// off the largest entry as a horizontal strip.
pub fn kostka(shape: &[usize], content: &[usize]) -> i64 {
    fn strips(shape: &[usize], row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == shape.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let floor = shape.get(row + 1).copied().unwrap_or(0);
        for take in 0..=(shape[row] - floor).min(left) {
            cur.push(shape[row] - take);
            strips(shape, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let Some((&m, rest)) = content.split_last() else {
        return shape.iter().all(|&x| x == 0) as i64;
    };
    let mut inner = Vec::new();
    strips(shape, 0, m, &mut Vec::new(), &mut inner);
    inner.iter().map(|nu| kostka(nu, rest)).sum()
}

/// `χ_λ(e)` for all `λ, e ⊢ d`, from `φ^μ = Σ_λ K_{λμ} χ_λ` with the
/// unitriangular Kostka matrix inverted in dominance-compatible order.
pub fn kostka_oracle(d: usize) -> HashMap<(Partition, Partition), i64> {
    let parts = enumerate_partitions(d).unwrap();
    let mut chi: Vec<Vec<i64>> = Vec::new();
    for (k, mu) in parts.iter().enumerate() {
        let mut row: Vec<i64> = parts.iter().map(|e| fixed_tabloids(mu.parts(), e.parts())).collect();
        for (j, lambda) in parts[..k].iter().enumerate() {
            let kl = kostka(lambda.parts(), mu.parts());
            if kl != 0 {
                for (x, y) in row.iter_mut().zip(&chi[j]) {
                    *x -= kl * y;
                }
            }
        }
        assert_eq!(kostka(mu.parts(), mu.parts()), 1);
        chi.push(row);
    }
    let mut out = HashMap::new();
    for (i, l) in parts.iter().enumerate() {
        for (j, e) in parts.iter().enumerate() {
            out.insert((l.clone(), e.clone()), chi[i][j]);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Brute-force oracle for a pair of rank-n lattices in k(t)^n

/// A Laurent polynomial matrix paired with its inverse.
#[derive(Clone, Debug)]
pub struct Gluing {
    pub m: Matrix<QPoly>,
    pub inv: Matrix<QPoly>,
}

fn tp(k: i64, c: i64) -> QPoly {
    QPoly::monomial(q(c, 1), k)
}

impl Gluing {
    pub fn identity(n: usize) -> Self {
        let m = Matrix::from_fn(n, n, |i, j| if i == j { tp(0, 1) } else { QPoly::zero() });
        Gluing { inv: m.clone(), m }
    }

    /// Right-multiply by `diag(t^{-a_i})`.
    pub fn scale(&self, a: &[i64]) -> Self {
        let n = a.len();
        let d = Matrix::from_fn(n, n, |i, j| if i == j { tp(-a[i], 1) } else { QPoly::zero() });
        let di = Matrix::from_fn(n, n, |i, j| if i == j { tp(a[i], 1) } else { QPoly::zero() });
        Gluing { m: self.m.mul(&d), inv: di.mul(&self.inv) }
    }

    /// Right-multiply by the elementary matrix `1 + c t^k E_{ij}`.
    pub fn shear(&self, i: usize, j: usize, k: i64, c: i64) -> Self {
        let n = self.m.rows();
        let e = |s: i64| Matrix::from_fn(n, n, |r, col| {
            if r == col {
                tp(0, 1)
            } else if r == i && col == j {
                tp(k, s * c)
            } else {
                QPoly::zero()
            }
        });
        Gluing { m: self.m.mul(&e(1)), inv: e(-1).mul(&self.inv) }
    }
}

/// Splitting type of the pair `(k[t]^n, columns of m over k[t^{-1}])`,
/// recovered from `dim_k(k[t]^n ∩ t^s·L_∞) = Σ_i max(0, s − r_i + 1)`.
pub fn brute_force_pair(g: &Gluing, window: i64) -> Vec<i64> {
    let n = g.m.rows();
    let inv_deg = g
        .inv
        .to_cols()
        .iter()
        .flatten()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0);
    let dim_at = |s: i64| -> i64 {
        // x = Σ_j f_j e_j with deg f_j ≤ top, coefficients as unknowns.
        let top = (s + window).max(0);
        let unknowns = n * (top as usize + 1);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        // Condition: every entry of inv·x has t-degree ≤ s.
        for r in 0..n {
            for deg in (s + 1)..=(top + inv_deg) {
                let mut row = vec![Rational::zero(); unknowns];
                for j in 0..n {
                    for (k, c) in g.inv[(r, j)].terms() {
                        let need = deg - k;
                        if (0..=top).contains(&need) {
                            row[j * (top as usize + 1) + need as usize] += c.clone();
                        }
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
        (unknowns - rank) as i64
    };
    let lo = -window;
    let hi = window;
    let mut out = Vec::new();
    let mut prev = dim_at(lo - 1);
    let mut prev_jump = 0;
    for s in lo..=hi {
        let cur = dim_at(s);
        let jump = cur - prev;
        for _ in 0..(jump - prev_jump) {
            out.push(s);
        }
        prev_jump = jump;
        prev = cur;
    }
    out
}

// ---------------------------------------------------------------------------
// Random valid profiles

pub fn random_profile(rng: &mut impl Rng, d: usize) -> ScrollarProfile {
    let g: u64 = rng.gen_range(0..=60);
    let cap = (2 * g + 2 * d as u64 - 2) / d as u64;
    let mut e = vec![1u64; d - 1];
    let mut left = g;
    while left > 0 {
        let k = rng.gen_range(0..d - 1);
        if e[k] < cap {
            e[k] += 1;
            left -= 1;
        }
    }
    ScrollarProfile::new(d, g, e, true).unwrap()
}

// ---------------------------------------------------------------------------
// Acceptance criteria

pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

fn run(id: u8, title: &'static str, limit: Duration, body: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let res = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match res {
        Ok(s) => (true, s),
        Err(s) => (false, s),
    };
    if elapsed > limit {
        passed = false;
        detail = format!("{detail}; exceeded the {}s budget", limit.as_secs());
    }
    Outcome { id, title, passed, detail, elapsed }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: scrollar_core::Error) -> String {
    e.to_string()
}

pub fn criterion_1() -> Outcome {
    run(1, "golden addendum tables", Duration::from_secs(10), || {
        let expected_rows = [("D4", 4, 5), ("AGL1F5", 5, 7), ("S5prime", 6, 11)];
        let mut cells = 0;
        for (name, d, n) in expected_rows {
            let h = registry(name, d).map_err(err)?;
            let table = addendum_table(&h).map_err(err)?;
            ensure(table.rows.len() == n, || format!("{name}: {} rows, expected {n}", table.rows.len()))?;
            let diffs = compare_with_reference(&table).ok_or(format!("{name}: no reference"))?;
            let allowed: &[(&str, &str, &str)] = match name {
                "AGL1F5" => &[("2,1,1,1", "e′", "(2^3)")],
                "S5prime" => &[("4,1,1", "disc(O^H)", "t^9")],
                _ => &[],
            };
            ensure(diffs.len() == allowed.len(), || format!("{name}: {} discrepancies: {diffs:?}", diffs.len()))?;
            for (dd, (e, col, computed)) in diffs.iter().zip(allowed) {
                ensure(dd.e == part(e) && dd.column == *col && dd.computed == *computed, || {
                    format!("{name}: unexpected discrepancy {dd:?}")
                })?;
            }
            let p = scrollar_core::groups::p_of_subgroup(&h).map_err(err)?.to_integer();
            for r in &table.rows {
                let tame = r.e.tame_exponent() as u64;
                ensure(r.e_prime.tame_exponent() as u64 == r.disc_maximal, || {
                    format!("{name} {}: Σ(e′−1) ≠ maximal exponent", r.e)
                })?;
                ensure(r.disc_order == p.to_string().parse::<u64>().unwrap() * tame, || {
                    format!("{name} {}: order exponent ≠ p(H)·Σ(e_j−1)", r.e)
                })?;
                ensure(r.disc_order >= r.disc_maximal && (r.disc_order - r.disc_maximal) % 2 == 0, || {
                    format!("{name} {}: order and maximal exponents differ by an odd amount", r.e)
                })?;
                cells += 5;
            }
        }
        Ok(format!("23 rows, {cells} cells; only the two erratum cells differ and both pass the consistency checks"))
    })
}

pub fn criterion_2() -> Outcome {
    run(2, "character oracle equivalence", Duration::from_secs(60), || {
        let mut compared = 0;
        for d in 1..=7 {
            let oracle = kostka_oracle(d);
            let table = CharacterTable::get(d).map_err(err)?;
            for l in &table.partitions {
                for e in &table.partitions {
                    let mn = table.value(l, e);
                    ensure(mn == oracle[&(l.clone(), e.clone())], || {
                        format!("χ_{l}({e}): MN {mn}, Kostka {}", oracle[&(l.clone(), e.clone())])
                    })?;
                    ensure(character(l, e).map_err(err)? == mn, || format!("χ_{l}({e}) table/direct mismatch"))?;
                    compared += 1;
                }
            }
        }
        let mut traced = 0;
        for d in 1..=6 {
            for l in enumerate_partitions(d).map_err(err)? {
                let a = specht_action(&l).map_err(err)?;
                a.check_relations().map_err(err)?;
                for e in enumerate_partitions(d).map_err(err)? {
                    let tr = a.matrix_of(&Perm::of_cycle_type(&e)).trace();
                    ensure(tr == q(character(&l, &e).map_err(err)?, 1), || format!("trace of {e} on V_{l}: {tr}"))?;
                    traced += 1;
                }
            }
        }
        Ok(format!("{compared} MN values match the Kostka oracle (d ≤ 7); {traced} Specht traces match (d ≤ 6)"))
    })
}

pub fn criterion_3() -> Outcome {
    run(3, "charge statistics", Duration::from_secs(60), || {
        let mut checked = 0;
        for d in 1..=8 {
            for l in enumerate_partitions(d).map_err(err)? {
                let p = p_lambda(&l) as usize;
                let tabs = standard_tableaux(&l);
                ensure(tabs.len() as u128 == dimension(&l), || format!("{l}: tableau count"))?;
                let data: Vec<_> = tabs.iter().map(charge_data).collect();
                for i in 1..d {
                    let n = data.iter().filter(|c| c.subscript(i + 1) == c.subscript(i) + 1).count();
                    ensure(n == p, || format!("{l}, i = {i}: {n} ascents, p(λ) = {p}"))?;
                    checked += 1;
                }
                let total: usize = data.iter().map(|c| c.max_subscript).sum();
                ensure(total == p * (d - 1), || format!("{l}: Σ m(T) = {total}, p(λ)(d−1) = {}", p * (d - 1)))?;
            }
        }
        Ok(format!("{checked} (λ, i) positions and every Σ m(T) identity for d ≤ 8"))
    })
}

pub fn criterion_4() -> Outcome {
    run(4, "maximality classification", Duration::from_secs(60), || {
        let mut pairs = 0;
        let mut maximal = 0;
        for d in 2..=8 {
            let table = CharacterTable::get(d).map_err(err)?;
            let std = Partition::hook(d, 1);
            for l in &table.partitions {
                for e in &table.partitions {
                    let by_chars = lambda_maximal_by_characters(l, e).map_err(err)?;
                    let by_class = lambda_maximal_by_classification(l, e);
                    ensure(by_chars == by_class, || format!("λ = {l}, e = {e}: characters {by_chars}, classification {by_class}"))?;
                    // Multiplied-out inequality against the standard representation.
                    let lhs = (dimension(l) as i64 - table.value(l, e)) * (d as i64 - 1 - table.value(&std, &Partition::transposition(d)));
                    let rhs = (d as i64 - 1 - table.value(&std, e)) * (dimension(l) as i64 - table.value(l, &Partition::transposition(d)));
                    ensure(lhs <= rhs, || format!("inequality fails at λ = {l}, e = {e}"))?;
                    let equality = lhs == rhs;
                    ensure(equality == by_class, || format!("equality case at λ = {l}, e = {e}: {equality}"))?;
                    pairs += 1;
                    maximal += by_chars as usize;
                }
            }
            for a in d.div_ceil(2)..d {
                let l = Partition::new(vec![a, d - a]).unwrap();
                if d >= 3 {
                    let three = Partition::cycle(d, 3);
                    ensure(lambda_maximal_by_characters(&l, &three).map_err(err)?, || format!("boundary ({a},{}) fails", d - a))?;
                }
            }
        }
        Ok(format!("{pairs} pairs for d ≤ 8, {maximal} maximal, zero mismatches"))
    })
}

pub fn criterion_5(slow: bool) -> Outcome {
    let limit = if slow { 600 } else { 60 };
    run(5, "local-model discriminants", Duration::from_secs(limit), || {
        let top = if slow { 5 } else { 4 };
        let mut lines = Vec::new();
        for e in 1..=top {
            let m = build_model_with_bound(e, 5).map_err(err)?;
            let full = monomial_gram_valuation(&m).map_err(err)?;
            let expected_full = ((e - 1) * factorial(e) as usize / 2) as i64;
            ensure(full == expected_full, || format!("e = {e}: full valuation {full}, expected {expected_full}"))?;
            let mut sum = 0;
            for l in enumerate_partitions(e).map_err(err)? {
                let lat = isotypic_lattice(&m, &l).map_err(err)?;
                let v = gram_valuation(&m, &lat).map_err(err)?;
                let expected = (p_lambda(&l) * dimension(&l) as u64 * (e as u64 - 1)) as i64;
                ensure(v == expected, || format!("e = {e}, λ = {l}: valuation {v}, expected {expected}"))?;
                sum += v;
            }
            ensure(sum == full, || format!("e = {e}: per-λ sum {sum} ≠ {full}"))?;
            lines.push(format!("e={e}:{full}"));
        }
        let gated = if slow { "" } else { "; e = 5 needs SCROLLAR_SLOW_TESTS=1" };
        Ok(format!("valuations {}{gated}", lines.join(" ")))
    })
}

pub fn criterion_6() -> Outcome {
    run(6, "higher Specht integrality", Duration::from_secs(120), || {
        let mut checks = 0;
        for e in 1..=4 {
            let m = build_model(e).map_err(err)?;
            for l in enumerate_partitions(e).map_err(err)? {
                let tabs = standard_tableaux(&l);
                for t in &tabs {
                    for s in &tabs {
                        let c = check_specht(&m, t, s).map_err(err)?;
                        ensure(c.passed(), || format!("e = {e}, T = {:?}, S = {:?}: {c:?}", t.rows(), s.rows()))?;
                        checks += 1;
                    }
                }
            }
            let report = specht_family_report(&m).map_err(err)?;
            ensure(report.all_checks_pass && report.saturation_equals_full, || format!("e = {e}: {report:?}"))?;
            ensure(report.isotypic_spans.iter().all(|(_, b)| *b), || format!("e = {e}: isotypic spans {report:?}"))?;
        }
        Ok(format!("{checks} elements G_T^S pass all three tests; families saturate to the full lattice for e ≤ 4"))
    })
}

fn lambda_i(d: usize, i: usize) -> Partition {
    match i {
        0 => Partition::row(d),
        1 => Partition::hook(d, 1),
        _ if i == d => Partition::column(d),
        _ => {
            let mut v = vec![d - i, 2];
            v.extend(std::iter::repeat_n(1, i - 2));
            Partition::new(v).unwrap()
        }
    }
}

pub fn criterion_7() -> Outcome {
    run(7, "tensor rules", Duration::from_secs(60), || {
        let mut pairs = 0;
        for d in 2..=7 {
            let std = VirtualCharacter::irreducible(&Partition::hook(d, 1));
            let two = (d >= 4).then(|| VirtualCharacter::irreducible(&Partition::new(vec![d - 2, 2]).unwrap()));
            for l in enumerate_partitions(d).map_err(err)? {
                let vl = VirtualCharacter::irreducible(&l);
                for mu in enumerate_partitions(d).map_err(err)? {
                    let vm = VirtualCharacter::irreducible(&mu);
                    let c = tensor_rule_counts(&mu, &l).map_err(err)?;
                    let got = mult(&vm, &(&vl * &std)).map_err(err)?;
                    ensure(got == c.standard_multiplicity(mu == l), || format!("⊗ standard: μ = {mu}, λ = {l}: {got} vs {c:?}"))?;
                    if let Some(two) = &two {
                        let got = mult(&vm, &(&vl * two)).map_err(err)?;
                        let pred = c.two_row_multiplicity();
                        ensure(pred == Some(got), || format!("⊗ (d−2,2): μ = {mu}, λ = {l}: {got} vs {c:?}"))?;
                    }
                    pairs += 1;
                }
            }
        }
        let sym = |v: &VirtualCharacter, k| symmetric_power_character(v, k).map_err(err);
        let std3 = VirtualCharacter::irreducible(&part("2,1"));
        let std4 = VirtualCharacter::irreducible(&part("3,1"));
        let a = mult(&VirtualCharacter::irreducible(&part("1,1,1")), &sym(&std3, 3)?).map_err(err)?;
        let b = mult(&VirtualCharacter::irreducible(&part("1,1,1,1")), &sym(&std4, 4)?).map_err(err)?;
        ensure(a == 1 && b == 0, || format!("ad hoc multiplicities {a}, {b}"))?;
        for d in 5..=7 {
            let s3 = sym(&VirtualCharacter::irreducible(&Partition::hook(d, 1)), 3)?;
            let x = mult(&VirtualCharacter::irreducible(&lambda_i(d, 3)), &s3).map_err(err)?;
            let y = mult(
                &VirtualCharacter::irreducible(&lambda_i(d, d)),
                &(&VirtualCharacter::irreducible(&lambda_i(d, d - 3)) * &s3),
            )
            .map_err(err)?;
            ensure(x == 0 && y == 0, || format!("Sym³ zeros fail at d = {d}: {x}, {y}"))?;
        }
        for d in 4..=8 {
            let s2 = sym(&VirtualCharacter::irreducible(&Partition::hook(d, 1)), 2)?;
            let m = |i: usize| -> Result<i64, String> {
                mult(
                    &VirtualCharacter::irreducible(&lambda_i(d, i + 2)),
                    &(&VirtualCharacter::irreducible(&lambda_i(d, i)) * &s2),
                )
                .map_err(err)
            };
            for i in 2..=d.saturating_sub(4) {
                ensure(m(i)? == 0, || format!("double-next multiplicity at d = {d}, i = {i} is nonzero"))?;
            }
            ensure(m(d - 2)? == 1, || format!("double-next multiplicity at d = {d}, i = d−2 is not 1"))?;
        }
        Ok(format!("{pairs} (μ, λ) pairs for d ≤ 7; ad hoc, Sym³ and double-next values reproduced"))
    })
}

/// Registry subgroups of degree `d` used for resolvent summaries.
pub fn registry_sample(d: usize) -> Vec<PermSubgroup> {
    let mut names: Vec<String> = ["Sd", "Ad", "Sd-1"].iter().map(|s| s.to_string()).collect();
    names.extend(["D4", "V4", "AGL1F5", "S5prime", "F36", "F72"].iter().map(|s| s.to_string()));
    names.extend(transitive_names(d));
    for l in enumerate_partitions(d).unwrap() {
        if (factorial(d) / l.parts().iter().map(|&x| factorial(x)).product::<u128>()) <= 2520 {
            names.push(format!("Young:{}", l.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")));
        }
    }
    let mut out: Vec<PermSubgroup> = Vec::new();
    for n in names {
        if let Ok(h) = registry(&n, d) {
            if !out.iter().any(|o| o.same_elements(&h)) {
                out.push(h);
            }
        }
    }
    out
}

pub fn criterion_8() -> Outcome {
    run(8, "volume, duality and hook coherence", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5c011a);
        let mut summaries = 0;
        for d in 4..=8 {
            let subgroups = registry_sample(d);
            for _ in 0..100 {
                let p = random_profile(&mut rng, d);
                let t = p.total();
                for i in 0..d {
                    let h = hook_scrollars(&p, i).map_err(err)?;
                    let want = if i == 0 { 0 } else { binomial(d - 2, i - 1) as u64 * t };
                    ensure(h.sum() == want, || format!("{p:?}: hook {i} volume {} ≠ {want}", h.sum()))?;
                    ensure(volume(&Partition::hook(d, i), &p).map_err(err)? == want, || format!("{p:?}: volume({i})"))?;
                    let dual = dual_scrollars(&h, &Partition::hook(d, i), &p).map_err(err)?;
                    let other = hook_scrollars(&p, d - 1 - i).map_err(err)?;
                    ensure(dual.values == other.values, || format!("{p:?}: dual of hook {i}"))?;
                }
                for h in &subgroups {
                    let s = resolvent_summary(h, &p).map_err(err)?;
                    ensure(s.arithmetic_genus + s.index as i64 - 1 == s.total_volume as i64, || {
                        format!("{}: genus + index − 1 ≠ volume", h.name())
                    })?;
                    summaries += 1;
                }
            }
        }
        let (_, up4) = schreyer_interval(1, 4).map_err(err)?;
        ensure(up4.slope == q(2, 3) && up4.intercept == q(2, 1), || format!("d = 4 bound {up4}"))?;
        let (_, up5) = schreyer_interval(2, 5).map_err(err)?;
        ensure(up5.slope == q(4, 5) && up5.intercept == q(16, 5), || format!("d = 5 bound {up5}"))?;
        Ok(format!("500 random profiles, {summaries} resolvent summaries; Schreyer bounds (2/3)g+2 and (4/5)(g+4) exact"))
    })
}

pub fn criterion_9() -> Outcome {
    run(9, "resolvent irreducibility", Duration::from_secs(60), || {
        let cases: [(&str, usize, &[&str]); 3] =
            [("D4", 4, &["S4", "A4"]), ("AGL1F5", 5, &["S5", "A5"]), ("S5prime", 6, &["S6", "A6", "F36", "F72"])];
        let mut checked = 0;
        for (hname, d, full_for) in cases {
            let h = registry(hname, d).map_err(err)?;
            let targets: Vec<PermSubgroup> =
                full_for.iter().map(|n| registry(n, d)).collect::<scrollar_core::Result<_>>().map_err(err)?;
            for gname in transitive_names(d) {
                let g = registry(&gname, d).map_err(err)?;
                let report = product_is_full(&g, &h).map_err(err)?;
                let degs: u128 = report.component_degrees().iter().sum();
                ensure(degs == h.index(), || format!("{gname}, {hname}: component degrees sum to {degs}"))?;
                let expected = targets.iter().any(|t| t.order() == g.order() && t.is_conjugate_to(&g));
                ensure(report.full == expected, || format!("{gname} (order {}), {hname}: full = {}", g.order(), report.full))?;
                ensure(report.full == (report.double_cosets.len() == 1), || format!("{gname}: one component iff full"))?;
                checked += 1;
            }
        }
        Ok(format!("{checked} (G, H) pairs over the transitive registry"))
    })
}

pub fn slow_tests_enabled() -> bool {
    std::env::var("SCROLLAR_SLOW_TESTS").map(|v| v == "1").unwrap_or(false)
}

pub fn all_criteria() -> Vec<Outcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(slow_tests_enabled()),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}
