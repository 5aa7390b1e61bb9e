use qeuler_core::enumerate::Bounds;
use qeuler_core::registry::{find, list_checks, run_all, run_check, Kind, Params, Report, Status};
use qeuler_core::Error;

const REQUIRED: &[&str] = &[
    "typeA-pentavar",
    "typeB-biv-even",
    "typeB-biv-odd",
    "typeB-alt-even",
    "typeB-alt-odd",
    "typeB-biv-altdesc-corollary",
    "typeB-fivevar",
    "typeB-recurrence",
    "typeB-hyatt",
    "typeB-minus-symmetry",
    "typeB-reciprocal",
    "reiner-egf",
    "reiner-recurrence",
    "lemma-2.1",
    "corollary-2.2",
    "passing-G",
    "signflip-B",
    "typeD-biv-even",
    "typeD-biv-odd",
    "typeD-alt-even",
    "typeD-alt-odd",
    "typeD-fivevar",
    "typeD-recurrence",
    "typeD-hyatt",
    "typeD-minus-symmetry",
    "typeD-reciprocal",
    "lemma-3.1",
    "corollary-3.2",
    "corollary-3.3",
    "X-lemma",
    "passing-H",
    "signflip-D",
    "snakes-B-q",
    "snakes-D-q",
    "springer-B-q1",
    "springer-D-q1",
    "hatB-power-relation",
    "hatD-power-relation",
];

fn run(id: &str) -> Report {
    run_check(id, &Params::default()).unwrap()
}

#[test]
fn every_required_identity_is_registered() {
    for id in REQUIRED {
        assert!(find(id).is_ok(), "{id} missing");
    }
    let mut ids: Vec<_> = list_checks().iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), list_checks().len());
    assert!(list_checks().iter().all(|c| !c.statement.is_empty()));
}

#[test]
fn unknown_identity_is_an_error() {
    assert!(matches!(
        run_check("no-such", &Params::default()),
        Err(Error::UnknownIdentity(_))
    ));
}

#[test]
fn full_suite_passes_at_desk_scale() {
    let reports = run_all(&Params::default());
    assert_eq!(reports.len(), list_checks().len());
    let failing: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| &r.identity_id)
        .collect();
    assert!(failing.is_empty(), "{failing:?}");
}

#[test]
fn series_report_carries_order_and_no_residual() {
    let r = run("typeB-biv-even");
    assert_eq!(find("typeB-biv-even").unwrap().kind, Kind::Series);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.order, Some(6));
    assert!(r.residual.is_none() && r.witness_power.is_none());
}

#[test]
fn type_d_recurrence_passes() {
    assert_eq!(run("typeD-recurrence").status, Status::Pass);
}

#[test]
fn hat_d_exponent_is_resolved_by_parity() {
    let r = run("hatD-power-relation");
    assert_eq!(r.status, Status::Pass);
    let holds: Vec<_> = r
        .readings
        .iter()
        .filter(|x| x.holds)
        .map(|x| x.name.as_str())
        .collect();
    assert!(holds.iter().any(|n| n.contains("k-1")), "{:?}", r.readings);
    assert!(r.readings.iter().any(|x| !x.holds));
}

#[test]
fn ambiguous_statements_list_their_readings() {
    for id in [
        "typeB-alt-odd",
        "typeD-alt-even",
        "typeD-fivevar",
        "passing-H",
    ] {
        let r = run(id);
        assert_eq!(r.status, Status::Pass, "{id}");
        assert!(
            r.readings.iter().any(|x| x.holds) && r.readings.iter().any(|x| !x.holds),
            "{id}"
        );
    }
    assert!(run("typeB-biv-odd").readings.is_empty());
}

#[test]
fn tight_bounds_skip_instead_of_failing() {
    let params = Params {
        bounds: Bounds {
            signed: 2,
            unsigned: 3,
        },
        ..Params::default()
    };
    let r = run_check("typeB-recurrence", &params).unwrap();
    assert_eq!(r.status, Status::Skipped);
}

#[test]
fn reports_round_trip_through_json() {
    for id in ["typeB-biv-even", "hatD-power-relation", "lemma-2.1"] {
        let r = run(id);
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
