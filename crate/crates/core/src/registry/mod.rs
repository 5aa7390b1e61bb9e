//! Catalogue of executable identity checks.
//!
//! Each check builds both sides of an identity from independent sources
//! (brute force, recurrences, truncated series, bijections) and compares them
//! exactly. Statements with doubtful typography carry several readings; a
//! check passes when every part has at least one reading that verifies, and
//! the report lists which readings held.

mod comb;
mod egf;
pub mod expr;

use serde::{Deserialize, Serialize};

use crate::algebra::io::QFractionJson;
use crate::algebra::LaurentPoly;
use crate::enumerate::Bounds;
use crate::error::Error;
use crate::series::SeriesReport;

/// Truncation order for series checks and largest `n` for polynomial checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub order: usize,
    pub max_n: usize,
    pub bounds: Bounds,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            order: 6,
            max_n: 6,
            bounds: Bounds::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Series,
    Polynomial,
    Bijection,
}

/// One candidate reading and whether it verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reading {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity_id: String,
    pub statement: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_monomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_coef: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_coef: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<QFractionJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub readings: Vec<Reading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

type Runner = fn(&Params) -> Result<Finding, Error>;

/// A registered identity.
#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: Kind,
    runner: Runner,
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

impl IdentityCheck {
    pub fn run(&self, params: &Params) -> Report {
        let mut report = Report {
            identity_id: self.id.to_string(),
            statement: self.statement.to_string(),
            n: None,
            order: None,
            status: Status::Pass,
            witness_monomial: None,
            lhs_coef: None,
            rhs_coef: None,
            witness_power: None,
            residual: None,
            readings: Vec::new(),
            note: None,
        };
        match (self.runner)(params) {
            Ok(f) => {
                report.n = f.n;
                report.order = f.order;
                report.readings = f.readings;
                report.note = f.note;
                match f.failure {
                    None => {}
                    Some(Failure::Poly {
                        n,
                        monomial,
                        lhs,
                        rhs,
                    }) => {
                        report.status = Status::Fail;
                        report.n = Some(n);
                        report.witness_monomial = Some(monomial);
                        report.lhs_coef = Some(lhs);
                        report.rhs_coef = Some(rhs);
                    }
                    Some(Failure::Series { power, residual }) => {
                        report.status = Status::Fail;
                        report.witness_power = Some(power);
                        report.residual = residual;
                    }
                    Some(Failure::Other { n, what }) => {
                        report.status = Status::Fail;
                        report.n = n.or(report.n);
                        report.note = Some(what);
                    }
                }
            }
            Err(e @ Error::BoundExceeded { .. }) => {
                report.status = Status::Skipped;
                report.note = Some(e.to_string());
            }
            Err(e) => {
                report.status = Status::Fail;
                report.note = Some(e.to_string());
            }
        }
        report
    }
}

/// Why a part failed.
#[derive(Clone, Debug)]
pub(crate) enum Failure {
    Poly {
        n: usize,
        monomial: String,
        lhs: String,
        rhs: String,
    },
    Series {
        power: usize,
        residual: Option<QFractionJson>,
    },
    Other {
        n: Option<usize>,
        what: String,
    },
}

/// Raw outcome of a runner before it is turned into a [`Report`].
#[derive(Clone, Debug, Default)]
pub(crate) struct Finding {
    failure: Option<Failure>,
    n: Option<usize>,
    order: Option<usize>,
    readings: Vec<Reading>,
    note: Option<String>,
}

impl Finding {
    pub(crate) fn up_to_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub(crate) fn at_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// `None` when `lhs == rhs`, otherwise the first differing monomial.
pub(crate) fn poly_mismatch(n: usize, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<Failure> {
    lhs.first_difference(rhs).map(|(e, a, b)| Failure::Poly {
        n,
        monomial: match LaurentPoly::format_monomial(&e) {
            m if m.is_empty() => "1".to_string(),
            m => m,
        },
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

pub(crate) fn series_mismatch(r: SeriesReport) -> Option<Failure> {
    r.first_bad_power.map(|power| Failure::Series {
        power,
        residual: r.residual,
    })
}

pub(crate) fn other(n: Option<usize>, what: impl Into<String>) -> Option<Failure> {
    Some(Failure::Other {
        n,
        what: what.into(),
    })
}

/// One part of an identity with its candidate readings.
pub(crate) struct Part {
    name: String,
    readings: Vec<(String, Option<Failure>)>,
}

impl Part {
    /// A part with a single, unambiguous reading.
    pub(crate) fn plain(name: impl Into<String>, outcome: Option<Failure>) -> Part {
        Part {
            name: name.into(),
            readings: vec![(String::new(), outcome)],
        }
    }

    pub(crate) fn readings(
        name: impl Into<String>,
        readings: Vec<(String, Option<Failure>)>,
    ) -> Part {
        Part {
            name: name.into(),
            readings,
        }
    }
}

/// Passes when every part has a verifying reading. A failing part reports the
/// witness of its first reading.
pub(crate) fn assemble(parts: Vec<Part>) -> Finding {
    let mut finding = Finding::default();
    let mut failed = Vec::new();
    for part in parts {
        let label = |r: &str| match (part.name.is_empty(), r.is_empty()) {
            (true, _) => r.to_string(),
            (false, true) => part.name.clone(),
            (false, false) => format!("{}: {}", part.name, r),
        };
        let ambiguous = part.readings.len() > 1;
        let holds = part.readings.iter().any(|(_, f)| f.is_none());
        if ambiguous {
            for (r, f) in &part.readings {
                finding.readings.push(Reading {
                    name: label(r),
                    holds: f.is_none(),
                });
            }
        }
        if !holds {
            if !part.name.is_empty() {
                failed.push(part.name.clone());
            }
            if finding.failure.is_none() {
                finding.failure = part.readings.into_iter().next().and_then(|(_, f)| f);
            }
        }
    }
    if !failed.is_empty() {
        finding.note = Some(format!("failing: {}", failed.join(", ")));
    }
    finding
}

/// Single-part finding.
pub(crate) fn single(outcome: Option<Failure>) -> Finding {
    assemble(vec![Part::plain("", outcome)])
}

/// Runs `f(n)` for each `n` and stops at the first failure.
pub(crate) fn for_each_n(
    ns: impl IntoIterator<Item = usize>,
    mut f: impl FnMut(usize) -> Result<Option<Failure>, Error>,
) -> Result<Option<Failure>, Error> {
    for n in ns {
        if let Some(fail) = f(n)? {
            return Ok(Some(fail));
        }
    }
    Ok(None)
}

macro_rules! check {
    ($id:literal, $kind:ident, $runner:path, $statement:literal) => {
        IdentityCheck {
            id: $id,
            statement: $statement,
            kind: Kind::$kind,
            runner: $runner,
        }
    };
}

static CATALOG: &[IdentityCheck] = &[
    // generating functions
    check!("typeA-pentavar", Series, egf::type_a_pentavar,
        "sum_{n>=1} A_n(s0,s1,t0,t1,q) u^n/[n]_q! = ((s1+t1)cosh_q(au) + a sinh_q(au) - t1 e_q(au)e_q(-au) - s1) / (s0s1 - (s0t1+s1t0)cosh_q(au) + t0t1 e_q(au)e_q(-au)), a^2 = (t0-s0)(t1-s1)"),
    check!("typeB-biv-even", Series, egf::type_b_biv_even,
        "H0 = (1-s)((1-t cosh_q(Mu))cosh_B(Mu) + t sinh_q(Mu)sinh_B(Mu)) / (1-(s+t)cosh_q(Mu)+st e_q(Mu)e_q(-Mu))"),
    check!("typeB-biv-odd", Series, egf::type_b_biv_odd,
        "H1 = M((1-s cosh_q(Mu))sinh_B(Mu) + s sinh_q(Mu)cosh_B(Mu)) / (1-(s+t)cosh_q(Mu)+st e_q(Mu)e_q(-Mu))"),
    check!("typeB-alt-even", Series, egf::type_b_alt_even,
        "even part of sum Bhat_n u^n/B_n(1,q) = (s-1)((1-t cos_q)cos_B - t sin_q sin_B) / (s + t e_q(iMu)e_q(-iMu) - (ts+1)cos_q(Mu))"),
    check!("typeB-alt-odd", Series, egf::type_b_alt_odd,
        "odd part of sum Bhat_n u^n/B_n(1,q) = -M((s-cos_q)sin_B + sin_q cos_B) / (s + t e_q(iMu)e_q(-iMu) - (ts+1)cos_q(Mu))"),
    check!("typeB-biv-altdesc-corollary", Series, egf::type_b_altdesc_corollary,
        "sum Bhat_n(s,t,1) u^n/n! = (-(s-1)(t-1)cos(Mu) - M(s+1)sin(Mu)) / (s+t-(ts+1)cos(2Mu))"),
    check!("typeB-altdesc-univariate", Series, egf::type_b_altdesc_univariate,
        "sum Bhat_n(t,t,1) u^n/n! = (-(t-1)^2 cos((1-t)u) + (t^2-1)sin((1-t)u)) / (2t - (t^2+1)cos(2(1-t)u))"),
    check!("typeB-fivevar", Series, egf::type_b_fivevar,
        "five-variable B egf over s0s1-(t0s1+s0t1)cosh_q(mu)+t0t1 e_q(mu)e_q(-mu), m^2 = (s0-t0)(s1-t1)"),
    check!("typeB-solve-system", Series, egf::type_b_solve_system,
        "(1-s)cosh_B + M sinh_B = H0(1 - s cosh_q - (s/L)sinh_q) + H1(1 - t cosh_q - tL sinh_q), L^2 = (1-s)/(1-t)"),
    check!("typeB-q1-panzeng", Series, egf::type_b_q1_panzeng,
        "at q=1 the bivariate B egf over 2^n n! is M^2 C/(M^2C^2-(s+1)(t+1)S^2) and M(s+1)S/(same), C = cosh(Mu/2), S = sinh(Mu/2)"),
    check!("panzeng-B-biv", Series, egf::panzeng_b_biv,
        "q=1 bivariate B egf over n!: even and odd parts in terms of a^2 = (1-s)(1-t)"),
    check!("panzeng-B-alt", Series, egf::panzeng_b_alt,
        "q=1 alternating B egf over n!: even and odd parts"),
    check!("reiner-egf", Series, egf::reiner_egf,
        "sum B_n(t,t,q) u^n/B_n(1,q) = (1-t)exp_B((1-t)u) / (1 - t exp((1-t)u; q))"),
    check!("typeD-biv-even", Series, egf::type_d_biv_even,
        "D0 (n>=2 even) = (ED(1-t cosh_q) + OD t(1-s)/M sinh_q) / (1-(s+t)cosh_q(Mu)+st e_q(Mu)e_q(-Mu))"),
    check!("typeD-biv-odd", Series, egf::type_d_biv_odd,
        "D1 (n>=3 odd) = (OD(1-s cosh_q) + ED s(1-t)/M sinh_q) / (1-(s+t)cosh_q(Mu)+st e_q(Mu)e_q(-Mu))"),
    check!("typeD-solve-system", Series, egf::type_d_solve_system,
        "D0(1 - s cosh_q - s(1-t)/M sinh_q) + D1(1 - t cosh_q - t(1-s)/M sinh_q) = OD + ED"),
    check!("typeD-alt-even", Series, egf::type_d_alt_even,
        "even part of sum_{n>=2} Dhat_n u^n/D_n(1,q) over s - (st+1)cos_q(Mu) + t e_q(iMu)e_q(-iMu)"),
    check!("typeD-alt-odd", Series, egf::type_d_alt_odd,
        "odd part of sum_{n>=3} Dhat_n u^n/D_n(1,q) over s - (st+1)cos_q(Mu) + t e_q(iMu)e_q(-iMu)"),
    check!("typeD-fivevar", Series, egf::type_d_fivevar,
        "five-variable D egf over s0s1-(s0t1+s1t0)cosh_q(mu)+t0t1 e_q(mu)e_q(-mu)"),
    check!("snakes-B-q", Series, egf::snakes_b_q,
        "sum S^B_n(q) u^n/B_n(1,q) = (cos_q(u)cos_B(u) + (sin_q(u) - 1)sin_B(u)) / cos_q(u)"),
    check!("snakes-D-q", Series, egf::snakes_d_q,
        "snake D egf: even part (-2cos_q^2 + cos_q(cos_D - 1) - 2sin_q^2 + sin_q sin_D)/(-cos_q), odd part (-2sin_q + u cos_q + sin_D)/(-cos_q)"),
    check!("springer-B-q1", Series, egf::springer_b_q1,
        "sum S^B_n u^n/n! = 1/(cos u - sin u)"),
    check!("springer-D-q1", Series, egf::springer_d_q1,
        "sum_{n>=1} S^D_2n u^2n/(2n)! = (cos u - cos 2u - 1)/(-cos 2u); odd part (-sin 2u + u cos 2u + sin u)/(-cos 2u)"),
    // polynomials
    check!("poincare-closed-form", Polynomial, comb::poincare_closed_form,
        "sum q^inv over A_n, B_n, D_n equals [n]!, prod [2i], [n] prod_{i<n} [2i]"),
    check!("typeB-recurrence", Polynomial, comb::type_b_recurrence,
        "recursive B_n(s,t,q) equals brute force"),
    check!("typeD-recurrence", Polynomial, comb::type_d_recurrence,
        "recursive D_n(s,t,q) equals brute force"),
    check!("typeB-hyatt", Polynomial, comb::type_b_hyatt,
        "B_n^+ = sum_m q^C(m,2) [n,m]_q B_(n-m) (s-1)^a (t-1)^b"),
    check!("typeD-hyatt", Polynomial, comb::type_d_hyatt,
        "D_n^+ = sum_m q^C(m,2) [n,m]_q D_(n-m) (s-1)^a (t-1)^b"),
    check!("hyatt-classical", Polynomial, comb::hyatt_classical,
        "at q=1, s=t: B_n^+(t) = sum_{k<n} C(n,k) B_k(t) (t-1)^(n-k-1)"),
    check!("typeB-hyatt-ladder", Polynomial, comb::type_b_hyatt_ladder,
        "q^C(j,2)[n,j]_q B_(n-j) s^a t^b = x A_(j-1) - (x-1) A_j over the sets Bhat_k"),
    check!("typeD-hyatt-ladder", Polynomial, comb::type_d_hyatt_ladder,
        "q^C(j,2)[n,j]_q D_(n-j) s^a t^b = x A_(j-1) - (x-1) A_j over the sets Dhat_k"),
    check!("typeB-minus-symmetry", Polynomial, comb::type_b_minus,
        "B_n^- = q^(n^2) s^a t^b B_n^+(1/s,1/t,1/q)"),
    check!("typeD-minus-symmetry", Polynomial, comb::type_d_minus,
        "D_n^- = q^(n(n-1)) s^a t^b D_n^+(1/s,1/t,1/q)"),
    check!("typeB-reciprocal", Polynomial, comb::type_b_reciprocal,
        "B_n = q^(n^2) s^a t^b B_n(1/s,1/t,1/q)"),
    check!("typeD-reciprocal", Polynomial, comb::type_d_reciprocal,
        "D_n = q^(n(n-1)) s^a t^b D_n(1/s,1/t,1/q)"),
    check!("signflip-B", Bijection, comb::signflip_b,
        "negating every letter complements odes, edes and inv in B_n"),
    check!("signflip-D", Bijection, comb::signflip_d,
        "negating every letter (all but the first for odd n) complements odes, edes and inv in D_n"),
    check!("reiner-recurrence", Polynomial, comb::reiner_recurrence,
        "B_n(t,t,q) = t sum_k P_n/(P_(n-k)[k]!) (1-t)^k B_(n-k)(t,t,q) + (1-t)^(n+1)"),
    check!("lemma-2.1", Polynomial, comb::lemma_2_1,
        "sum over signed r-subsets A of q^inv(f([n]-A, A)) = [n,r]_q prod_{j=0..r-1}(1+q^(n-j))"),
    check!("corollary-2.2", Polynomial, comb::corollary_2_2,
        "for each sigma in B_(n-r): sum_A q^inv(f(sigma,A)) = q^inv(sigma) [n,r]_q prod (1+q^j)"),
    check!("corollary-2.3", Polynomial, comb::corollary_2_3,
        "sum over B_(n-r) x signed r-subsets of s^edes t^odes q^inv(f) = B_(n-r) [n,r]_q prod (1+q^j)"),
    check!("easy-relation-B", Polynomial, comb::easy_relation_b,
        "qbinom(n, n-i) prod_{j=i+1..n}(1+q^j) = P_n(q) / (P_i(q) [n-i]!), with P_k the Poincare polynomial of B_k"),
    check!("lemma-3.1", Polynomial, comb::lemma_3_1,
        "sum over signed r-subsets A of q^inv_D(f_D([n]-A, A)) = [n,r]_q prod_{j=n-r..n-1}(1+q^j)"),
    check!("corollary-3.2", Polynomial, comb::corollary_3_2,
        "for each sigma in D_(n-r): sum_A q^inv_D(f_D(sigma,A)) = q^inv_D(sigma) [n,r]_q prod (1+q^j)"),
    check!("corollary-3.3", Polynomial, comb::corollary_3_3,
        "sum over D_(n-r) x signed r-subsets of s^edes t^odes q^inv_D(f_D) = D_(n-r) [n,r]_q prod (1+q^j)"),
    check!("X-lemma", Polynomial, comb::x_lemma,
        "W(X_n) = t^2 P_n/[n-1]! + t(1-t)(2 P_n/[n]! - 1) + (1-t), n >= 3"),
    check!("passing-G", Polynomial, comb::passing_g,
        "W(G_(n,i)) = x B_i P_n/(P_i [n-i]!) + (1-x) W(G_(n,i-1)), x = t for odd i, s for even i"),
    check!("passing-H", Polynomial, comb::passing_h,
        "W(H_(n,i)) = x D_i P_n/(P_i [n-i]!) + (1-x) W(H_(n,i-1)), x = t for odd i, s for even i"),
    check!("hatB-power-relation", Polynomial, comb::hat_b_power,
        "Bhat_n(s,t,q) = s^e B_n(1/s,t,q), e = k for n = 2k and k+1 for n = 2k+1"),
    check!("hatD-power-relation", Polynomial, comb::hat_d_power,
        "Dhat_n(s,t,q) = s^e D_n(1/s,t,q) for the exponent e that verifies"),
    check!("fivevar-reduction", Polynomial, comb::fivevar_reduction,
        "five-variable polynomials reduce to the bivariate ones at s0 = s1 = 1"),
    // bijections
    check!("bijection-f", Bijection, comb::bijection_f,
        "f: B_(n-i) x signed i-subsets -> G_(n,n-i) is a bijection adding inv(sigma)"),
    check!("bijection-fD", Bijection, comb::bijection_fd,
        "f_D: D_(n-i) x signed i-subsets -> H_(n,n-i) is a bijection adding inv_D(sigma), i < n"),
    check!("bijection-fpp", Bijection, comb::bijection_fpp,
        "f'': W_k x (n-k)-subsets -> What_(n-k-1) is a bijection for W = B, D"),
];

/// Every registered check, in a fixed order.
pub fn list_checks() -> &'static [IdentityCheck] {
    CATALOG
}

pub fn find(id: &str) -> Result<&'static IdentityCheck, Error> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn run_check(id: &str, params: &Params) -> Result<Report, Error> {
    Ok(find(id)?.run(params))
}

/// Runs the whole catalogue; reports come back in catalogue order.
pub fn run_all(params: &Params) -> Vec<Report> {
    run_many(CATALOG, params)
}

pub fn run_many(checks: &[IdentityCheck], params: &Params) -> Vec<Report> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        checks.par_iter().map(|c| c.run(params)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        checks.iter().map(|c| c.run(params)).collect()
    }
}

/// True when no report failed; skipped checks do not count against the suite.
pub fn suite_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = CATALOG.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            run_check("no-such", &Params::default()).unwrap_err(),
            Error::UnknownIdentity("no-such".into())
        );
    }

    #[test]
    fn readings_are_listed_only_when_ambiguous() {
        let f = assemble(vec![
            Part::plain("a", None),
            Part::readings(
                "b",
                vec![("x".into(), other(None, "no")), ("y".into(), None)],
            ),
        ]);
        assert!(f.failure.is_none());
        assert_eq!(f.readings.len(), 2);
        assert_eq!(
            f.readings[0],
            Reading {
                name: "b: x".into(),
                holds: false
            }
        );
    }
}
