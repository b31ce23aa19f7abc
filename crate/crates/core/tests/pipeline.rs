mod support;

use std::fs;

use a11y_indicator::engine::{score_frame, score_page};
use a11y_indicator::fixture::{generate_fixture, FixtureKind};
use a11y_indicator::report::parse_report;
use a11y_indicator::wcag::{default_weights, CriterionCatalog, Scope};
use a11y_indicator::AssessorReport;
use serde_json::Value;
use support::oracle;

const CATALOG_JSON: &str = include_str!("../data/wcag20_catalog.json");

fn fixture(name: &str) -> String {
    fs::read_to_string(format!(
        "{}/tests/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

fn parse(text: &str) -> AssessorReport {
    parse_report(text, &CriterionCatalog::wcag20())
        .unwrap()
        .report
}

#[test]
fn shipped_fixture_total_matches_generator_record() {
    let text = fixture("taw_like.json");
    let raw: Value = serde_json::from_str(&text).unwrap();
    let recorded = raw["total_tests"].as_u64().unwrap();
    let report = parse(&text);
    assert_eq!(report.total_tests(), recorded);
    assert_eq!(oracle::total_tests(&raw), recorded as f64);
    assert_eq!(text, generate_fixture(7, FixtureKind::PotentialHeavy));
}

#[test]
fn fixture_pair_matches_straight_line_oracle() {
    let catalog_raw: Value = serde_json::from_str(CATALOG_JSON).unwrap();
    let texts = [
        generate_fixture(7, FixtureKind::ErrorHeavy),
        generate_fixture(7, FixtureKind::PotentialHeavy),
    ];
    let raws: Vec<Value> = texts
        .iter()
        .map(|t| serde_json::from_str(t).unwrap())
        .collect();
    let reports: Vec<_> = texts.iter().map(|t| parse(t)).collect();

    let page = score_page(&reports, &CriterionCatalog::wcag20(), &default_weights()).unwrap();
    for scope in Scope::ALL {
        let expected =
            oracle::page_decision(&raws, &catalog_raw, scope.key(), oracle::TABLE_ALPHA).unwrap();
        let got = page.get(scope).unwrap().decision;
        assert!(
            (got - expected).abs() < 1e-12,
            "{scope}: {got} vs {expected}"
        );
    }
}

#[test]
fn many_fixture_pages_match_oracle() {
    let catalog_raw: Value = serde_json::from_str(CATALOG_JSON).unwrap();
    let catalog = CriterionCatalog::wcag20();
    let w = default_weights();
    for seed in 0..30 {
        for kinds in [
            [FixtureKind::Balanced, FixtureKind::ErrorHeavy],
            [FixtureKind::ErrorHeavy, FixtureKind::PotentialHeavy],
        ] {
            let texts: Vec<_> = kinds.iter().map(|k| generate_fixture(seed, *k)).collect();
            let raws: Vec<Value> = texts
                .iter()
                .map(|t| serde_json::from_str(t).unwrap())
                .collect();
            let reports: Vec<_> = texts.iter().map(|t| parse(t)).collect();
            let got = score_frame(&reports, Scope::Global, &catalog, &w)
                .unwrap()
                .decision;
            let expected =
                oracle::page_decision(&raws, &catalog_raw, "global", oracle::TABLE_ALPHA).unwrap();
            assert!(
                (got - expected).abs() < 1e-12,
                "seed {seed}: {got} vs {expected}"
            );
        }
    }
}

#[test]
fn source_order_does_not_matter() {
    let catalog = CriterionCatalog::wcag20();
    let w = default_weights();
    let reports: Vec<_> = FixtureKind::ALL
        .iter()
        .map(|k| parse(&generate_fixture(11, *k)))
        .collect();
    let reference = score_page(&reports, &catalog, &w).unwrap();
    for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let shuffled: Vec<_> = perm.iter().map(|&i| reports[i].clone()).collect();
        let page = score_page(&shuffled, &catalog, &w).unwrap();
        for (a, b) in reference.frames.iter().zip(&page.frames) {
            assert!((a.decision - b.decision).abs() < 1e-12);
            for (x, y) in a.fused.to_array().iter().zip(b.fused.to_array()) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn worked_fixture_through_parser() {
    let report = parse(&fixture("worked_single.json"));
    let page = score_page(&[report], &CriterionCatalog::wcag20(), &default_weights()).unwrap();
    let visual = page.get("visual".parse().unwrap()).unwrap();
    assert!((visual.decision - (0.8 + 0.125) / 1.55).abs() < 1e-12);
    assert_eq!(visual.level, a11y_indicator::AccessLevel::VeryBad);
}
