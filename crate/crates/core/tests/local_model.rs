mod support;

use proptest::prelude::*;
use scrollar_core::localmodel::{build_model, pair_invariants_matrix};
use scrollar_core::Error;
use support::{brute_force_pair, Gluing};

#[test]
fn isotypic_discriminants() {
    let o = support::criterion_5(false);
    assert!(o.passed, "{}", o.detail);
}

#[test]
fn isotypic_discriminants_e5() {
    if !support::slow_tests_enabled() {
        eprintln!("skipped: set SCROLLAR_SLOW_TESTS=1");
        return;
    }
    let o = support::criterion_5(true);
    assert!(o.passed, "{}", o.detail);
}

#[test]
fn specht_integrality() {
    let o = support::criterion_6();
    assert!(o.passed, "{}", o.detail);
}

#[test]
fn resource_bound() {
    assert!(matches!(build_model(6), Err(Error::Resource(_))));
    assert!(matches!(build_model(0), Err(Error::OutOfRange(_))));
}

#[test]
fn diagonal_and_identity_pairs() {
    let id = Gluing::identity(3);
    assert_eq!(pair_invariants_matrix(&id.m, &id.m).unwrap(), vec![0, 0, 0]);
    let g = id.scale(&[4, -1, 2]);
    assert_eq!(pair_invariants_matrix(&id.m, &g.m).unwrap(), vec![-1, 2, 4]);
    assert_eq!(brute_force_pair(&g, 8), vec![-1, 2, 4]);
}

fn gluing_strategy() -> impl Strategy<Value = Gluing> {
    let step = (0usize..2, -2i64..=2, 1i64..=3, -3i64..=3);
    (proptest::collection::vec(-3i64..=3, 2), proptest::collection::vec(step, 0..5)).prop_map(|(a, steps)| {
        let mut g = Gluing::identity(2).scale(&a);
        for (i, k, c, b) in steps {
            g = g.shear(i, 1 - i, k, c);
            if b != 0 {
                g = g.scale(&[b, 0]);
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn two_by_two_pairs_match_brute_force(g in gluing_strategy()) {
        let id = Gluing::identity(2);
        let fast = pair_invariants_matrix(&id.m, &g.m).unwrap();
        let slow = brute_force_pair(&g, 24);
        prop_assert_eq!(fast.iter().sum::<i64>(), slow.iter().sum::<i64>());
        prop_assert_eq!(fast, slow);
    }
}
