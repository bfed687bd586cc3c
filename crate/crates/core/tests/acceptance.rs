use coring::suite::{run_criterion, Mutation, Profile, SuiteOptions, CRITERIA};

fn run_profile(profile: Profile) {
    let opts = SuiteOptions { profile, ..Default::default() };
    let mut failed = Vec::new();
    for id in 1..=CRITERIA.len() {
        let r = run_criterion(id, &opts);
        println!("criterion {id} [{profile}] {}: {} ({} ms)", r.name, if r.passed { "PASS" } else { "FAIL" }, r.elapsed_ms);
        for line in &r.details {
            println!("    {line}");
        }
        if !r.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn quick_profile() {
    run_profile(Profile::Quick);
}

#[test]
fn full_profile() {
    run_profile(Profile::Full);
}

#[test]
fn negated_braiding_is_detected() {
    let opts = SuiteOptions { mutation: Mutation::NegatedBraiding, ..Default::default() };
    let r = run_criterion(8, &opts);
    for line in &r.details {
        println!("    {line}");
    }
    println!("criterion 8 with negated braiding: {}", if r.passed { "PASS (undetected)" } else { "FAIL (detected)" });
    assert!(!r.passed);
}
