mod support;

use scrollar_core::ramify::{is_lambda_maximal, lambda_maximal_by_characters};
use scrollar_core::tableaux::Partition;
use support::part;

#[test]
fn criteria_agree_exhaustively() {
    let o = support::criterion_4();
    assert!(o.passed, "{}", o.detail);
}

#[test]
fn two_row_boundary_family() {
    for d in 4..=8 {
        let three = Partition::cycle(d, 3);
        for a in d.div_ceil(2)..=d {
            let l = Partition::new(if a == d { vec![d] } else { vec![a, d - a] }).unwrap();
            assert!(is_lambda_maximal(&l, &three).unwrap(), "{l}");
        }
        assert!(!lambda_maximal_by_characters(&Partition::new(vec![d - 2, 1, 1]).unwrap(), &three).unwrap());
    }
}

#[test]
fn nontrivial_patterns_break_maximality() {
    assert!(!is_lambda_maximal(&part("2,2"), &part("4")).unwrap());
    assert!(is_lambda_maximal(&part("3,1"), &part("4")).unwrap());
    assert!(is_lambda_maximal(&part("2,2,1"), &part("2,1,1,1")).unwrap());
}
