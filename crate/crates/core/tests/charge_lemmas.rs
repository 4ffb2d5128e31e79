mod support;

#[test]
fn ascent_counts_and_maximal_subscripts() {
    let o = support::criterion_3();
    assert!(o.passed, "{}", o.detail);
}
