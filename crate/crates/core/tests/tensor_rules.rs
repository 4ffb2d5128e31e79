mod support;

use scrollar_core::characters::tensor_rule_counts;
use scrollar_core::tableaux::Partition;
use support::part;

#[test]
fn tensor_identities() {
    let o = support::criterion_7();
    assert!(o.passed, "{}", o.detail);
}

#[test]
fn trivial_shape_counts() {
    for d in 2..=7 {
        let c = tensor_rule_counts(&Partition::row(d), &Partition::row(d)).unwrap();
        assert_eq!(c.c, 1);
    }
    let c = tensor_rule_counts(&part("2,1"), &part("2,1")).unwrap();
    assert_eq!(c.c, 2);
}
