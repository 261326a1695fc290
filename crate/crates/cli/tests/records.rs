use proptest::prelude::*;

use qahom::dglie;
use qahom::random::{self, Bounds};
use qahom_cli::commands::{CommandKind, Options};
use qahom_cli::fixtures::{self, Fixture};
use qahom_cli::input::{self, ChainMapRecord, LieRecord, MorphismRecord, ObjectRecord};
use qahom_cli::report::{Format, Report};
use qahom_cli::selftest;

fn through_json<T: serde::Serialize + serde::de::DeserializeOwned>(value: &T) -> T {
    input::parse_record(&serde_json::to_string(value).unwrap()).expect("emitted records parse")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn object_and_morphism_records_round_trip(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let b = Bounds::default();
        let s = random::object(&mut r, b);
        let t = random::object(&mut r, b);
        let f = random::morphism(&mut r, &s, &t, b);
        let rec: ObjectRecord = through_json(&input::object_record(&s));
        prop_assert_eq!(input::object(&rec, "").unwrap(), s);
        let rec: MorphismRecord = through_json(&input::morphism_record(&f));
        prop_assert_eq!(input::morphism(&rec, "").unwrap(), f);
    }

    #[test]
    fn chain_map_records_round_trip(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let b = Bounds::default().with_max_dim(3);
        let x = random::complex(&mut r, -1, 3, b);
        let y = random::complex(&mut r, -1, 3, b);
        let f = random::chain_map(&mut r, &x, &y, b);
        let rec: ChainMapRecord = through_json(&input::chain_map_record(&f));
        prop_assert_eq!(input::chain_map(&rec, "").unwrap(), f);
    }
}

#[test]
fn lie_records_round_trip() {
    for g in [
        dglie::sl2(),
        dglie::heisenberg(),
        dglie::solvable2(),
        dglie::odd_square(),
        dglie::cone_lie(&dglie::sl2()),
    ] {
        let rec: LieRecord = through_json(&input::lie_record(&g));
        assert_eq!(input::lie(&rec, "").unwrap(), g);
    }
}

#[test]
fn machine_reports_round_trip() {
    for f in fixtures::FIXTURES {
        let report = qahom_cli::run_text(f.command, Some(f.text), &Options::default());
        let text = report.render(Format::Machine);
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back.render(Format::Machine), text);
        assert_eq!(back.status, report.status);
    }
}

#[test]
fn selftest_passes_under_several_seeds() {
    for seed in [0, 1, 20240229] {
        let out = selftest::selftest(seed);
        assert!(out.passed, "{:?}", out.lines);
    }
}

#[test]
fn corrupted_fixture_expected_to_pass_is_reported_by_name() {
    let broken = fixtures::find("broken_d2.json", CommandKind::Cohomology).unwrap();
    let mislabelled = [
        *fixtures::find("cone_identity.json", CommandKind::Cohomology).unwrap(),
        Fixture {
            expected_exit: 0,
            ..*broken
        },
    ];
    let out = selftest::run_suites(1, &mislabelled);
    assert!(!out.passed);
    let suite = &out.result["suites"][0];
    assert_eq!(suite["passed"], false);
    assert_eq!(suite["witness"]["location"]["fixture"], "broken_d2.json");
    assert_eq!(suite["witness"]["location"]["exit"], 1);
    assert!(out.result["suites"].as_array().unwrap()[1..]
        .iter()
        .all(|s| s["passed"] == true));
}
