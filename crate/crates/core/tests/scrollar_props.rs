mod support;

use proptest::prelude::*;
use scrollar_core::scrollar::{
    dual_scrollars, hook_scrollars, maroni_bound_partition, resolvent_summary, schreyer_interval, splitting_partition,
    ScrollarProfile,
};
use scrollar_core::tableaux::{binomial, Partition};
use support::{q, registry_sample};

fn profile() -> impl Strategy<Value = ScrollarProfile> {
    (4usize..=8, 0u64..=50, any::<u64>()).prop_map(|(d, g, seed)| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let _ = g;
        support::random_profile(&mut rng, d)
    })
}

#[test]
fn coherence_over_random_profiles() {
    let o = support::criterion_8();
    assert!(o.passed, "{}", o.detail);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hook_volume(p in profile()) {
        for i in 1..p.d {
            let h = hook_scrollars(&p, i).unwrap();
            prop_assert_eq!(h.sum(), binomial(p.d - 2, i - 1) as u64 * p.total());
        }
    }

    #[test]
    fn hook_duality(p in profile()) {
        for i in 0..p.d {
            let dual = dual_scrollars(&hook_scrollars(&p, i).unwrap(), &Partition::hook(p.d, i), &p).unwrap();
            prop_assert_eq!(dual.values, hook_scrollars(&p, p.d - 1 - i).unwrap().values);
        }
    }

    #[test]
    fn hooks_are_sorted_and_bounded(p in profile()) {
        for i in 0..p.d {
            let h = hook_scrollars(&p, i).unwrap();
            prop_assert!(h.values.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(h.values.iter().all(|&v| v <= p.total()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn resolvent_identity(p in profile()) {
        for h in registry_sample(p.d).iter().take(8) {
            let s = resolvent_summary(h, &p).unwrap();
            prop_assert_eq!(s.arithmetic_genus + s.index as i64 - 1, s.total_volume as i64);
            prop_assert_eq!(s.invariant_count + 1, s.index);
        }
    }
}

#[test]
fn schreyer_bounds() {
    let (lo, hi) = schreyer_interval(1, 4).unwrap();
    assert_eq!((lo.slope.clone(), lo.intercept.clone()), (q(1, 3), q(1, 1)));
    assert_eq!((hi.slope, hi.intercept), (q(2, 3), q(2, 1)));
    let (_, hi) = schreyer_interval(2, 5).unwrap();
    assert_eq!(hi.eval(6), q(8, 1));
    for d in 4..=8 {
        for i in 1..=d - 3 {
            let (lo, hi) = schreyer_interval(i, d).unwrap();
            let dual = schreyer_interval(d - 2 - i, d).unwrap();
            assert!(lo.slope <= hi.slope, "{i} {d}");
            // Schreyer duality: the i-th and (d−2−i)-th intervals are mirror images.
            assert_eq!(lo.slope.clone() + dual.1.slope.clone(), q(1, 1), "{i} {d}");
            let m = maroni_bound_partition(&splitting_partition(i, d).unwrap());
            assert!(m.slope <= hi.slope);
        }
    }
}
