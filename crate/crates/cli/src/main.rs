use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qeuler_core::algebra::io::{poly_to_csv, poly_to_json};
use qeuler_core::algebra::{Family, LaurentPoly};
use qeuler_core::enumerate::{poly_group, Bounds, Weight};
use qeuler_core::perm::{GroupKind, GroupSpec};
use qeuler_core::recurrence::{flip_image, hyatt_plus, recur_table};
use qeuler_core::registry::{self, Params, Report, Status};
use qeuler_core::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qeuler",
    version,
    about = "Exact q-Eulerian polynomials for the type B and D Coxeter groups"
)]
struct Cli {
    /// Worker threads for enumeration and the check suite.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force generating polynomial of a group.
    Enumerate {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        /// Index for G and H.
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i32>,
        #[arg(long, value_enum, default_value_t = WeightArg::Biv)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run identity checks from the registry.
    Check {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Compute B_n or D_n several ways and compare.
    Compare {
        #[arg(long, value_enum)]
        group: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "brute,recurrence")]
        methods: Vec<Method>,
    },
    /// List registered identity checks.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "D")]
    D,
    #[value(name = "B+")]
    BPlus,
    #[value(name = "B-")]
    BMinus,
    #[value(name = "D+")]
    DPlus,
    #[value(name = "D-")]
    DMinus,
    #[value(name = "snakeB")]
    SnakeB,
    #[value(name = "snakeD")]
    SnakeD,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
    #[value(name = "X")]
    X,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightArg {
    Biv,
    Fivevar,
    Hat,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "B")]
    B,
    #[value(name = "D")]
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Recurrence,
    Hyatt,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Recurrence => "recurrence",
            Method::Hyatt => "hyatt",
        }
    }
}

/// A failure with its exit code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            Error::UnknownIdentity(_) | Error::InvalidGroup(_) | Error::WeightMismatch { .. } => {
                EXIT_USAGE
            }
            _ => EXIT_FAIL,
        };
        Exit(code, e.to_string())
    }
}

fn group_kind(group: GroupArg, i: Option<i32>) -> Result<GroupKind, Exit> {
    let index = || i.ok_or_else(|| Exit(EXIT_USAGE, "--i is required for G and H".into()));
    Ok(match group {
        GroupArg::A => GroupKind::A,
        GroupArg::B => GroupKind::B,
        GroupArg::D => GroupKind::D,
        GroupArg::BPlus => GroupKind::BPlus,
        GroupArg::BMinus => GroupKind::BMinus,
        GroupArg::DPlus => GroupKind::DPlus,
        GroupArg::DMinus => GroupKind::DMinus,
        GroupArg::SnakeB => GroupKind::SnakeB,
        GroupArg::SnakeD => GroupKind::SnakeD,
        GroupArg::G => GroupKind::G(index()?),
        GroupArg::H => GroupKind::H(index()?),
        GroupArg::X => GroupKind::X,
    })
}

fn weight(w: WeightArg) -> Weight {
    match w {
        WeightArg::Biv => Weight::Biv,
        WeightArg::Fivevar => Weight::FiveVar,
        WeightArg::Hat => Weight::Hat,
        WeightArg::Q => Weight::Q,
    }
}

fn render(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Json => poly_to_json(p),
        Format::Csv => poly_to_csv(p).trim_end().to_string(),
        Format::Pretty => p.to_string(),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn enumerate(
    group: GroupArg,
    n: usize,
    i: Option<i32>,
    w: WeightArg,
    format: Format,
) -> Result<(), Exit> {
    let spec = GroupSpec::new(group_kind(group, i)?, n)?;
    let poly = poly_group(&spec, weight(w), &Bounds::from_env())?;
    println!("{}", render(&poly, format));
    Ok(())
}

fn pretty_report(r: &Report) -> String {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let mut line = format!("{status} {}", r.identity_id);
    if let Some(o) = r.order {
        line += &format!(" (order {o})");
    } else if let Some(n) = r.n {
        line += &format!(" (n <= {n})");
    }
    for reading in &r.readings {
        line += &format!(
            "\n    [{}] {}",
            if reading.holds { "holds" } else { "fails" },
            reading.name
        );
    }
    if r.status == Status::Fail {
        if let (Some(m), Some(l), Some(rh)) = (&r.witness_monomial, &r.lhs_coef, &r.rhs_coef) {
            line += &format!(
                "\n    n = {}: coefficient of {m} is {l} vs {rh}",
                r.n.unwrap_or(0)
            );
        }
        if let Some(k) = r.witness_power {
            line += &format!("\n    first nonzero residual at u^{k}");
        }
    }
    if let Some(note) = &r.note {
        line += &format!("\n    {note}");
    }
    line
}

fn check(id: Option<String>, order: usize, max_n: usize, format: ReportFormat) -> Result<(), Exit> {
    let params = Params {
        order,
        max_n,
        bounds: Bounds::from_env(),
    };
    let reports = match &id {
        Some(id) => vec![registry::run_check(id, &params)?],
        None => registry::run_all(&params),
    };
    match format {
        ReportFormat::Json if id.is_some() => println!("{}", json(&reports[0])),
        ReportFormat::Json => println!("{}", json(&reports)),
        ReportFormat::Pretty => {
            for r in &reports {
                println!("{}", pretty_report(r));
            }
        }
    }
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.identity_id.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Exit(
            EXIT_FAIL,
            format!("failing checks: {}", failed.join(", ")),
        ))
    }
}

fn compute(family: Family, n: usize, method: Method) -> Result<LaurentPoly, Error> {
    let kind = if family == Family::D {
        GroupKind::D
    } else {
        GroupKind::B
    };
    match method {
        Method::Brute => poly_group(&GroupSpec::new(kind, n)?, Weight::Biv, &Bounds::from_env()),
        Method::Recurrence => Ok(recur_table(family, n.max(1)).swap_remove(n)),
        Method::Hyatt => {
            if n == 0 || (family == Family::D && n == 1) {
                return Ok(recur_table(family, 1).swap_remove(n));
            }
            let plus = hyatt_plus(family, n);
            Ok(&plus + &flip_image(family, n, &plus))
        }
    }
}

#[derive(serde::Serialize)]
struct Comparison {
    group: &'static str,
    n: usize,
    methods: Vec<&'static str>,
    identical: bool,
    polynomial: serde_json::Value,
}

fn compare(group: FamilyArg, n: usize, methods: Vec<Method>) -> Result<(), Exit> {
    let (family, name) = match group {
        FamilyArg::B => (Family::B, "B"),
        FamilyArg::D => (Family::D, "D"),
    };
    if methods.is_empty() {
        return Err(Exit(EXIT_USAGE, "no methods given".into()));
    }
    let mut results = Vec::new();
    for &m in &methods {
        let start = Instant::now();
        let p = compute(family, n, m)?;
        eprintln!(
            "{:<10} {:>10.3} ms",
            m.name(),
            start.elapsed().as_secs_f64() * 1e3
        );
        results.push(p);
    }
    let identical = results.windows(2).all(|w| w[0] == w[1]);
    let report = Comparison {
        group: name,
        n,
        methods: methods.iter().map(|m| m.name()).collect(),
        identical,
        polynomial: serde_json::from_str(&poly_to_json(&results[0])).expect("valid JSON"),
    };
    println!("{}", json(&report));
    if identical {
        Ok(())
    } else {
        Err(Exit(EXIT_FAIL, "methods disagree".into()))
    }
}

fn list() {
    for c in registry::list_checks() {
        println!("{:<30} {}", c.id, c.statement);
    }
}

fn run(cli: Cli) -> Result<(), Exit> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Exit(EXIT_USAGE, "--jobs must be positive".into()));
        }
        #[cfg(feature = "parallel")]
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Exit(EXIT_FAIL, e.to_string()))?;
    }
    match cli.command {
        Command::Enumerate {
            group,
            n,
            i,
            weight,
            format,
        } => enumerate(group, n, i, weight, format),
        Command::Check {
            id,
            all: _,
            order,
            max_n,
            format,
        } => check(id, order, max_n, format),
        Command::Compare { group, n, methods } => compare(group, n, methods),
        Command::List => {
            list();
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
