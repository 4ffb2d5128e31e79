mod support;

use scrollar_core::characters::{character, p_lambda, CharacterTable};
use scrollar_core::tableaux::{dimension, enumerate_partitions, factorial, Partition};
use support::{fixed_tabloids, kostka, kostka_oracle, part};

#[test]
fn oracle_equivalence() {
    let o = support::criterion_2();
    assert!(o.passed, "{}", o.detail);
}

#[test]
fn kostka_small_values() {
    assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(kostka(&[3, 2], &[2, 2, 1]), 2);
    assert_eq!(kostka(&[2, 2], &[3, 1]), 0);
    assert_eq!(fixed_tabloids(&[2, 1], &[1, 1, 1]), 3);
    assert_eq!(fixed_tabloids(&[2, 1], &[3]), 0);
}

#[test]
fn oracle_is_orthonormal() {
    for d in 1..=6 {
        let o = kostka_oracle(d);
        let ps = enumerate_partitions(d).unwrap();
        for a in &ps {
            for b in &ps {
                let s: i128 = ps
                    .iter()
                    .map(|e| e.class_size() as i128 * o[&(a.clone(), e.clone())] as i128 * o[&(b.clone(), e.clone())] as i128)
                    .sum();
                assert_eq!(s, if a == b { factorial(d) as i128 } else { 0 });
            }
        }
    }
}

#[test]
fn table_orthogonality_up_to_eight() {
    for d in 1..=8 {
        let t = CharacterTable::get(d).unwrap();
        for (i, a) in t.values.iter().enumerate() {
            for (j, b) in t.values.iter().enumerate() {
                let s: i128 =
                    (0..t.num_classes()).map(|k| t.class_sizes[k] as i128 * a[k] as i128 * b[k] as i128).sum();
                assert_eq!(s, if i == j { t.order() as i128 } else { 0 });
            }
        }
    }
}

#[test]
fn conjugation_twists_by_sign() {
    for d in 1..=8 {
        for l in enumerate_partitions(d).unwrap() {
            for e in enumerate_partitions(d).unwrap() {
                assert_eq!(character(&l.conjugate(), &e).unwrap(), e.sign() * character(&l, &e).unwrap());
            }
        }
    }
}

#[test]
fn hook_values_on_full_cycle() {
    for d in 2..=8 {
        for i in 0..d {
            let v = character(&Partition::hook(d, i), &part(&d.to_string())).unwrap();
            assert_eq!(v, if i % 2 == 0 { 1 } else { -1 });
        }
    }
}

#[test]
fn p_lambda_sum_identity() {
    for d in 2..=8 {
        let s: u128 = enumerate_partitions(d).unwrap().iter().map(|l| p_lambda(l) as u128 * dimension(l)).sum();
        assert_eq!(s * (d as u128 - 1), (d as u128 - 1) * factorial(d) / 2);
    }
}

/// The drop bound `χ(m,1^{d−m}) − χ(m+1,1^{d−m−1}) ≤ p(λ)` fails in a small,
/// pinned set of cases: the sign character at odd `m ≥ 3`, and `(2,1^6)` at
/// `m = 3`. Every other case up to `d = 8` satisfies it.
#[test]
fn character_drop_bound_and_its_exceptions() {
    let mut violations = Vec::new();
    for d in 3..=8 {
        for l in enumerate_partitions(d).unwrap() {
            let p = p_lambda(&l) as i64;
            for m in 2..d {
                let a = character(&l, &Partition::cycle(d, m)).unwrap();
                let b = character(&l, &Partition::cycle(d, m + 1)).unwrap();
                if a - b > p {
                    violations.push((l.to_string(), m));
                }
            }
        }
    }
    let mut expected: Vec<(String, usize)> = Vec::new();
    for d in 4..=8 {
        for m in (3..d).step_by(2) {
            expected.push((Partition::column(d).to_string(), m));
        }
        if d == 8 {
            expected.push((part("2,1,1,1,1,1,1").to_string(), 3));
        }
    }
    violations.sort();
    expected.sort();
    assert_eq!(violations, expected);
}
