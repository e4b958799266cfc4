use berge_core::campaign::{
    run_campaign, sample_instance, verify_sharpness, CampaignSpec, Claim, Failure, Mode, Params,
    Relation, Span, VerificationReport, DEFAULT_BUDGET,
};
use berge_core::connectivity::{is_two_connected, vertex_connectivity};
use berge_core::constructions::{binomial, h1, h2, h3};
use berge_core::hypergraph::Hypergraph;
use berge_core::io::{content_hash, parse_hypergraph, to_text, write_json};
use berge_core::search::{circumference, codiameter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec(claim: Claim, r: usize, k: usize, n: usize, mode: Mode) -> CampaignSpec {
    CampaignSpec::new(
        claim,
        Span::single(r),
        Span::single(k),
        Span::single(n),
        mode,
    )
}

fn assert_consistent(report: &VerificationReport) {
    assert_eq!(
        report.passes + report.failures.len() + report.skipped,
        report.instances_checked
    );
    assert_eq!(report.skip_reasons.values().sum::<usize>(), report.skipped);
}

/// Re-measures the failing property on the reloaded certificate.
fn remeasure(f: &Failure) -> usize {
    let h = parse_hypergraph(&f.certificate).unwrap().hypergraph;
    assert_eq!(content_hash(&h), f.hash);
    match f.property.as_str() {
        "circumference" => circumference(&h),
        "codiameter" => codiameter(&h),
        "minimum degree" => h.min_degree(),
        "incidence connectivity" => vertex_connectivity(&h.incidence_graph()).unwrap(),
        other => panic!("unexpected property {other}"),
    }
}

#[test]
fn vacuous_theorem_range() {
    let report = run_campaign(&spec(Claim::LongCycle, 3, 5, 5, Mode::Exhaustive)).unwrap();
    assert_eq!(report.instances_checked, 0);
    assert!(report.all_passed());
    assert!(report.notes.iter().any(|n| n.contains("vacuous")));
}

#[test]
fn out_of_range_specs_are_rejected() {
    // k < r + 2 violates the hypotheses
    assert!(run_campaign(&spec(Claim::LongCycle, 3, 4, 6, Mode::Exhaustive)).is_err());
    assert!(run_campaign(&spec(Claim::ShortCycle, 3, 5, 3, Mode::Exhaustive)).is_err());
    assert!(verify_sharpness(4, 3, DEFAULT_BUDGET).is_err());
}

#[test]
fn short_cycles_on_five_vertices() {
    let report = run_campaign(&spec(Claim::ShortCycle, 3, 5, 5, Mode::Exhaustive)).unwrap();
    assert_consistent(&report);
    assert!(report.all_passed(), "{:?}", report.failures);
    assert!(report.passes > 0);
    // disconnected subsets are skipped, never failed
    assert!(
        report
            .skip_reasons
            .get("not 2-connected")
            .copied()
            .unwrap_or(0)
            > 0
    );
    assert_eq!(report.heuristic.violations, 0);
}

#[test]
fn raw_counts_without_dedup() {
    let total = 1u64 << binomial(5, 3);
    let mut s = spec(Claim::ShortCycle, 3, 5, 5, Mode::Exhaustive);
    s.dedup = Some(false);
    let raw = run_campaign(&s).unwrap();
    // three h3 family members ride along with the subsets
    let subsets = raw.instances_checked as u64 - 3;
    assert_eq!(raw.duplicates, 0);
    assert_eq!(subsets, total - raw.filtered);

    let dedup = run_campaign(&spec(Claim::ShortCycle, 3, 5, 5, Mode::Exhaustive)).unwrap();
    assert_eq!(
        dedup.instances_checked as u64 - 3 + dedup.duplicates + dedup.filtered,
        total
    );
    assert!(dedup.instances_checked < raw.instances_checked);
    assert_eq!(raw.failures.len(), 0);
}

#[test]
fn degree_filter_counts() {
    let mut s = spec(Claim::LongCycle, 3, 5, 6, Mode::Exhaustive);
    s.dedup = Some(false);
    let report = run_campaign(&s).unwrap();
    assert_consistent(&report);
    assert_eq!(
        report.instances_checked as u64 + report.filtered,
        1 << binomial(6, 3)
    );
    assert!(report.all_passed());
}

#[test]
fn sampling_is_deterministic() {
    let mut s = spec(Claim::LongCycle, 3, 5, 8, Mode::Sample);
    s.samples = 12;
    s.seed = 99;
    let a = run_campaign(&s).unwrap();
    let b = run_campaign(&s).unwrap();
    assert_eq!(a.instances_checked, 12);
    assert_eq!(
        (a.passes, a.skipped, &a.failures, &a.heuristic),
        (b.passes, b.skipped, &b.failures, &b.heuristic)
    );
    assert!(a.sampling_model.is_some());

    let draw = |seed| sample_instance(8, 3, 7, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
    assert_eq!(draw(5), draw(5));
    for seed in 0..5 {
        let h = draw(seed);
        assert!(h.min_degree() >= 7);
        assert!(is_two_connected(&h));
    }
}

#[test]
fn codiameter_campaign_with_family_check() {
    let mut s = spec(Claim::Codiameter, 3, 5, 11, Mode::Sample);
    s.samples = 4;
    s.seed = 3;
    let report = run_campaign(&s).unwrap();
    assert_consistent(&report);
    assert!(report.all_passed(), "{:?}", report.failures);
    // four samples plus h1(5,3,3)
    assert_eq!(report.instances_checked, 5);
    assert_eq!(codiameter(&h1(5, 3, 3).unwrap()), 4);
}

#[test]
fn sharpness_failures_reproduce() {
    let report = verify_sharpness(5, 3, DEFAULT_BUDGET).unwrap();
    assert_consistent(&report);
    assert_eq!(report.instances_checked, 2);
    assert_eq!(report.skipped, 0);
    for f in &report.failures {
        assert_eq!(remeasure(f), f.measured, "{} {}", f.label, f.property);
    }
    // h1 meets every sharpness property
    assert!(report.failures.iter().all(|f| f.label.starts_with("h2")));
    let h = h2(5, 3, 9).unwrap();
    assert_eq!(h.min_degree(), 6);
    assert_eq!(circumference(&h), 8);
}

#[test]
fn larger_sharpness_families() {
    for (k, r) in [(6, 3), (6, 4)] {
        let report = verify_sharpness(k, r, DEFAULT_BUDGET).unwrap();
        assert_consistent(&report);
        assert_eq!(report.skipped, 0);
        assert!(
            report
                .failures
                .iter()
                .all(|f| f.property == "incidence connectivity"),
            "{:?}",
            report.failures
        );
        assert_eq!(h1(k, r, 3).unwrap().min_degree(), binomial(k - 1, r - 1));
    }
}

#[test]
fn injected_failure_round_trips() {
    let mut report = run_campaign(&spec(Claim::LongCycle, 3, 5, 5, Mode::Exhaustive)).unwrap();
    let h = h3(3, 2).unwrap();
    let measured = circumference(&h);
    report.failures.push(Failure {
        hash: content_hash(&h),
        label: "injected".into(),
        params: Params {
            r: 3,
            k: 5,
            n: h.n(),
        },
        property: "circumference".into(),
        measured,
        relation: Relation::AtLeast,
        required: 6,
        certificate: to_text(&h, None),
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    write_json(&report, &path).unwrap();
    let back: VerificationReport =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, report);
    assert!(!back.all_passed());
    let f = &back.failures[0];
    let reloaded: Hypergraph = parse_hypergraph(&f.certificate).unwrap().hypergraph;
    assert_eq!(reloaded, h);
    assert_eq!(remeasure(f), measured);
}

#[test]
fn spec_serializes_with_claim_names() {
    let s = spec(Claim::Codiameter, 3, 5, 10, Mode::Sample);
    let json = serde_json::to_value(&s).unwrap();
    assert_eq!(json["claim"], "corollary_1_9");
    let back: CampaignSpec = serde_json::from_value(json).unwrap();
    assert_eq!(back, s);
}
