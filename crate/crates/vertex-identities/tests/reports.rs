//! Verification engine: registry shape, report determinism, and error
//! handling.

use vertex_identities::verify::{
    list_identities, verify_identity, verify_pfaffian_cauchy_binet, Report, Status, VerifyOptions,
};

#[test]
fn registry_is_well_formed() {
    let ids = list_identities();
    assert!(ids.len() >= 24, "registry too small: {}", ids.len());
    let mut seen = std::collections::HashSet::new();
    for i in &ids {
        assert!(seen.insert(i.id), "duplicate id {}", i.id);
        assert!(["rationalPoint", "seriesInX", "qSeries"].contains(&i.mode));
        assert!(["theorem", "conjecture", "classical"].contains(&i.status));
        assert!(!i.description.is_empty());
    }
}

#[test]
fn reports_are_deterministic_for_a_fixed_seed() {
    let opts = VerifyOptions {
        seed: 99,
        samples: 2,
        ..VerifyOptions::default()
    };
    let to_json = |r: &Report| {
        let mut r = r.clone();
        r.elapsed_ms = 0;
        serde_json::to_string(&r).unwrap()
    };
    for id in ["cauch-det", "hl-cauch2", "vuletic-gs"] {
        let a = verify_identity(id, &opts);
        let b = verify_identity(id, &opts);
        assert_eq!(to_json(&a), to_json(&b), "{id}");
        assert_eq!(a.status, Status::Pass, "{id}");
    }
}

#[test]
fn report_serialization_shape() {
    let r = verify_identity("stem-pf", &VerifyOptions::default());
    let json = serde_json::to_string(&r).unwrap();
    for key in ["schemaVersion", "\"id\"", "params", "seed", "mode", "status", "elapsedMs"] {
        assert!(json.contains(key), "missing {key} in {json}");
    }
    // firstMismatch is omitted on success.
    assert!(!json.contains("firstMismatch"));
    assert_eq!(Report::csv_header().split(',').count(), r.to_csv_row().split(',').count());
}

#[test]
fn unknown_ids_fail_cleanly() {
    let r = verify_identity("no-such-identity", &VerifyOptions::default());
    assert_eq!(r.status, Status::Fail);
    assert!(r.first_mismatch.unwrap().contains("unknown identity"));
}

#[test]
fn pfaffian_expansion_reports() {
    let r = verify_pfaffian_cauchy_binet(2, 5, 3);
    assert_eq!(r.status, Status::Pass);
    // Odd subset size is invalid input, reported as a failure.
    let r = verify_pfaffian_cauchy_binet(3, 5, 3);
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn seeds_change_the_sampled_points_but_not_the_verdict() {
    for seed in [1, 2, 3, 4, 5] {
        let opts = VerifyOptions {
            seed,
            samples: 1,
            ..VerifyOptions::default()
        };
        assert_eq!(verify_identity("thm1", &opts).status, Status::Pass, "seed={seed}");
    }
}
