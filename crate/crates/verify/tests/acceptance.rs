use pushforge_verify::{run_acceptance, DEFAULT_SEED};

#[test]
fn acceptance() {
    let outcomes = run_acceptance(DEFAULT_SEED);
    let mut all = true;
    for o in &outcomes {
        println!(
            "criterion {:2} [{}] {:24} {}",
            o.index,
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
        all &= o.passed;
    }
    assert!(all, "at least one acceptance criterion failed");
}
