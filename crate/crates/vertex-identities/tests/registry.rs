//! Runs every registered identity at its default sizes with a fixed seed.

use vertex_identities::verify::{list_identities, verify_identity, Status, VerifyOptions};

#[test]
fn every_registered_identity_passes_at_default_sizes() {
    let mut failures = Vec::new();
    for info in list_identities() {
        let opts = VerifyOptions {
            samples: 2,
            seed: 7,
            ..VerifyOptions::default()
        };
        let report = verify_identity(info.id, &opts);
        println!(
            "{:<22} {:<14} {:>8} ms  {:?}",
            info.id, info.mode, report.elapsed_ms, report.status
        );
        if report.status != Status::Pass {
            failures.push(format!(
                "{}: {:?} {}",
                info.id,
                report.status,
                report.first_mismatch.unwrap_or_default()
            ));
        }
    }
    assert!(failures.is_empty(), "failing identities:\n{}", failures.join("\n"));
}
