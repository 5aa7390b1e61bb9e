//! Polynomial and bijection checks; both sides are exact Laurent polynomials.

use num_bigint::BigInt;

use super::{assemble, for_each_n, other, poly_mismatch, single, Failure, Finding, Params, Part};
use crate::algebra::{
    poincare, poincare_ratio, qbinom, Exponents, Family, LaurentPoly, Roster, Substitution, UPoly,
    Var, NVARS,
};
use crate::bijection::{
    map_f, map_fd, signed_subsets, verify_f, verify_fd, verify_fpp, BijectionReport,
};
use crate::enumerate::{poly_family, poly_group, poly_lemma21_sum, poly_lemma31_sum, Weight};
use crate::error::Error;
use crate::perm::{inv_b, inv_d, stats, GroupKind, GroupSpec};
use crate::recurrence::{
    at_q_one, flip_image, hyatt_plus, ratio, recur_table, s_equals_t, sign_flip_holds,
};

const R: Roster = Roster::STQ;

fn v(x: Var) -> LaurentPoly {
    LaurentPoly::var(x, R)
}

fn one() -> LaurentPoly {
    LaurentPoly::one(R)
}

/// `(1-t)^a (1-s)^b`
fn tb(a: usize, b: usize) -> LaurentPoly {
    (one() - v(Var::T)).pow(a as u32) * (one() - v(Var::S)).pow(b as u32)
}

fn q_poly(p: &UPoly) -> LaurentPoly {
    LaurentPoly::from_upoly(p, Roster::Q)
}

fn group(kind: GroupKind, n: usize, p: &Params) -> Result<LaurentPoly, Error> {
    poly_group(&GroupSpec::new(kind, n)?, Weight::Biv, &p.bounds)
}

fn whole(family: Family, n: usize, p: &Params) -> Result<LaurentPoly, Error> {
    poly_family(family, n, Weight::Biv, &p.bounds)
}

fn kinds(family: Family) -> (GroupKind, GroupKind, GroupKind) {
    match family {
        Family::D => (GroupKind::D, GroupKind::DPlus, GroupKind::DMinus),
        _ => (GroupKind::B, GroupKind::BPlus, GroupKind::BMinus),
    }
}

/// Smallest `n` at which statements about `family` start.
fn first_n(family: Family) -> usize {
    if family == Family::D {
        2
    } else {
        1
    }
}

fn checked(
    p: &Params,
    from: usize,
    f: impl FnMut(usize) -> Result<Option<Failure>, Error>,
) -> Result<Finding, Error> {
    Ok(single(for_each_n(from..=p.max_n, f)?).up_to_n(p.max_n))
}

// ---------------------------------------------------------------- Poincaré polynomials

pub(super) fn poincare_closed_form(p: &Params) -> Result<Finding, Error> {
    checked(p, 0, |n| {
        for (kind, family) in [
            (GroupKind::A, Family::A),
            (GroupKind::B, Family::B),
            (GroupKind::D, Family::D),
        ] {
            let brute = poly_group(&GroupSpec::new(kind, n)?, Weight::Q, &p.bounds)?;
            if let Some(f) = poly_mismatch(n, &brute, &q_poly(&poincare(family, n))) {
                return Ok(Some(f));
            }
        }
        Ok(None)
    })
}

// ---------------------------------------------------------------- recurrences

pub(super) fn type_b_recurrence(p: &Params) -> Result<Finding, Error> {
    let table = recur_table(Family::B, p.max_n);
    checked(p, 0, |n| {
        Ok(poly_mismatch(n, &table[n], &whole(Family::B, n, p)?))
    })
}

/// The type D recurrence in its undivided form, with `D_n` on both sides.
/// `short_t_sum` stops the `t`-sum for even `n` at `r = k - 2`.
fn d_recurrence_rhs(n: usize, d: &[LaurentPoly], short_t_sum: bool) -> LaurentPoly {
    let (s, t) = (v(Var::S), v(Var::T));
    let k = n / 2;
    let c = |m: usize| ratio(Family::D, n, m) * &d[m];
    let two = LaurentPoly::constant(2, R);
    let tt = &t * &t;
    let (r0, r1) = (ratio(Family::D, n, 0), ratio(Family::D, n, 1));
    let mut acc;
    if n.is_multiple_of(2) {
        acc = tb(k + 1, k) + &two * &t * tb(k, k) * &r0 + &tt * tb(k - 1, k) * &r1;
        let t_terms = if short_t_sum { k.saturating_sub(1) } else { k };
        for r in 0..t_terms {
            acc += &(&t * &tb(r, r + 1) * c(n - 2 * r - 1));
        }
        for r in 0..k {
            acc += &(&s * &tb(r, r) * c(n - 2 * r));
        }
    } else {
        acc = tb(k + 2, k) + &two * &t * tb(k + 1, k) * &r0 + &tt * tb(k, k) * &r1;
        for r in 0..k {
            acc += &(&s * &tb(r + 1, r) * c(n - 2 * r - 1));
        }
        for r in 0..k {
            acc += &(&t * &tb(r, r) * c(n - 2 * r));
        }
    }
    acc
}

pub(super) fn type_d_recurrence(p: &Params) -> Result<Finding, Error> {
    let table = recur_table(Family::D, p.max_n.max(1));
    let brute: Vec<LaurentPoly> = (0..=p.max_n)
        .map(|n| whole(Family::D, n, p))
        .collect::<Result<_, _>>()?;
    let recursive = for_each_n(2..=p.max_n, |n| Ok(poly_mismatch(n, &table[n], &brute[n])))?;
    let undivided = |short: bool, parity: usize| {
        (3..=p.max_n)
            .filter(|n| n % 2 == parity)
            .find_map(|n| poly_mismatch(n, &brute[n], &d_recurrence_rhs(n, &brute, short)))
    };
    let parts = vec![
        Part::plain("recursive D_n", recursive),
        Part::readings(
            "undivided recurrence, even n",
            vec![
                ("t-sum over r < k as printed".into(), undivided(false, 0)),
                ("t-sum over r <= k - 2".into(), undivided(true, 0)),
            ],
        ),
        Part::plain("undivided recurrence, odd n", undivided(false, 1)),
    ];
    Ok(assemble(parts).up_to_n(p.max_n))
}

pub(super) fn reiner_recurrence(p: &Params) -> Result<Finding, Error> {
    let t = v(Var::T);
    let one_t = one() - &t;
    let rhs = |n: usize, b: &[LaurentPoly]| {
        let mut acc = one_t.pow(n as u32 + 1);
        for k in 0..=n {
            acc += &(&t * &ratio(Family::B, n, n - k) * one_t.pow(k as u32) * &b[n - k]);
        }
        acc
    };
    let brute: Vec<LaurentPoly> = (0..=p.max_n)
        .map(|n| whole(Family::B, n, p).map(|w| s_equals_t(&w)))
        .collect::<Result<_, _>>()?;
    let top = p.max_n.max(8);
    let recursive: Vec<LaurentPoly> = recur_table(Family::B, top).iter().map(s_equals_t).collect();
    let by_brute = (1..=p.max_n).find_map(|n| poly_mismatch(n, &brute[n], &rhs(n, &brute)));
    let by_recurrence =
        (1..=top).find_map(|n| poly_mismatch(n, &recursive[n], &rhs(n, &recursive)));
    let parts = vec![
        Part::plain("brute force", by_brute),
        Part::plain("recursive B_n", by_recurrence),
    ];
    Ok(assemble(parts).up_to_n(p.max_n))
}

// ---------------------------------------------------------------- Hyatt sums

fn hyatt(family: Family, p: &Params) -> Result<Finding, Error> {
    let plus = kinds(family).1;
    checked(p, first_n(family), |n| {
        Ok(poly_mismatch(
            n,
            &hyatt_plus(family, n),
            &group(plus, n, p)?,
        ))
    })
}

pub(super) fn type_b_hyatt(p: &Params) -> Result<Finding, Error> {
    hyatt(Family::B, p)
}

pub(super) fn type_d_hyatt(p: &Params) -> Result<Finding, Error> {
    hyatt(Family::D, p)
}

/// Always runs to at least `n = 10`; no enumeration is involved.
pub(super) fn hyatt_classical(p: &Params) -> Result<Finding, Error> {
    let top = p.max_n.max(10);
    let table: Vec<LaurentPoly> = recur_table(Family::B, top)
        .iter()
        .map(|w| at_q_one(&s_equals_t(w)))
        .collect();
    let tm1 = v(Var::T) - one();
    let fail = (1..=top).find_map(|n| {
        let lhs = at_q_one(&s_equals_t(&hyatt_plus(Family::B, n)));
        let mut rhs = LaurentPoly::zero(R);
        let mut binom = BigInt::from(1);
        for (k, b) in table.iter().enumerate().take(n) {
            rhs += &(b.scale(&binom) * tm1.pow((n - k - 1) as u32));
            binom = binom * (n - k) / (k + 1);
        }
        poly_mismatch(n, &lhs, &rhs)
    });
    Ok(single(fail).up_to_n(top))
}

fn ladder(family: Family, p: &Params) -> Result<Finding, Error> {
    let (s, t) = (v(Var::S), v(Var::T));
    let hat = |k: usize| {
        if family == Family::D {
            GroupKind::HatD(k)
        } else {
            GroupKind::HatB(k)
        }
    };
    checked(p, 2, |n| {
        let a = |k: usize| {
            if k < n {
                group(hat(k), n, p)
            } else {
                Ok(LaurentPoly::zero(R))
            }
        };
        for j in 1..=n {
            let r = j / 2;
            let (x, es, et) = match (n % 2, j % 2) {
                (0, 0) => (&s, r, r),
                (0, _) => (&t, r, r + 1),
                (_, 0) => (&t, r, r),
                (_, _) => (&s, r + 1, r),
            };
            let mut e: Exponents = [0; NVARS];
            e[Var::S.index()] = es as i32;
            e[Var::T.index()] = et as i32;
            e[Var::Q.index()] = (j * (j - 1) / 2) as i32;
            let lhs =
                (LaurentPoly::from_upoly(&qbinom(n, j), R) * whole(family, n - j, p)?).shift(&e);
            let rhs = x * &a(j - 1)? - (x - &one()) * &a(j)?;
            if let Some(f) = poly_mismatch(n, &lhs, &rhs) {
                return Ok(Some(f));
            }
        }
        Ok(None)
    })
}

pub(super) fn type_b_hyatt_ladder(p: &Params) -> Result<Finding, Error> {
    ladder(Family::B, p)
}

pub(super) fn type_d_hyatt_ladder(p: &Params) -> Result<Finding, Error> {
    ladder(Family::D, p)
}

// ---------------------------------------------------------------- symmetry

fn minus(family: Family, p: &Params) -> Result<Finding, Error> {
    let (w, plus, minus) = kinds(family);
    checked(p, first_n(family), |n| {
        let wp = group(plus, n, p)?;
        let image = flip_image(family, n, &wp);
        let (wm, ww) = (group(minus, n, p)?, group(w, n, p)?);
        Ok(poly_mismatch(n, &wm, &image).or_else(|| poly_mismatch(n, &ww, &(&wp + &image))))
    })
}

pub(super) fn type_b_minus(p: &Params) -> Result<Finding, Error> {
    minus(Family::B, p)
}

pub(super) fn type_d_minus(p: &Params) -> Result<Finding, Error> {
    minus(Family::D, p)
}

fn reciprocal(family: Family, p: &Params) -> Result<Finding, Error> {
    checked(p, first_n(family), |n| {
        let w = whole(family, n, p)?;
        Ok(poly_mismatch(n, &w, &flip_image(family, n, &w)))
    })
}

pub(super) fn type_b_reciprocal(p: &Params) -> Result<Finding, Error> {
    reciprocal(Family::B, p)
}

pub(super) fn type_d_reciprocal(p: &Params) -> Result<Finding, Error> {
    reciprocal(Family::D, p)
}

fn signflip(family: Family, p: &Params) -> Result<Finding, Error> {
    let kind = kinds(family).0;
    checked(p, first_n(family), |n| {
        p.bounds.check(&GroupSpec::new(kind, n)?)?;
        Ok(if sign_flip_holds(family, n) {
            None
        } else {
            other(Some(n), "statistics are not complemented")
        })
    })
}

pub(super) fn signflip_b(p: &Params) -> Result<Finding, Error> {
    signflip(Family::B, p)
}

pub(super) fn signflip_d(p: &Params) -> Result<Finding, Error> {
    signflip(Family::D, p)
}

// ---------------------------------------------------------------- signed-subset sums

/// `[n, r]_q` times `(1 + q^j)` over `j` in `top - r + 1 ..= top`.
fn subset_closed_form(n: usize, r: usize, top: usize) -> UPoly {
    (0..r).fold(qbinom(n, r), |acc, j| {
        &acc * &(&UPoly::one() + &UPoly::monomial(top - j))
    })
}

pub(super) fn lemma_2_1(p: &Params) -> Result<Finding, Error> {
    checked(p, 0, |n| {
        Ok((0..=n).find_map(|r| {
            poly_mismatch(
                n,
                &poly_lemma21_sum(n, r),
                &q_poly(&subset_closed_form(n, r, n)),
            )
        }))
    })
}

pub(super) fn lemma_3_1(p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| {
        Ok((0..=n).find_map(|r| {
            poly_mismatch(
                n,
                &poly_lemma31_sum(n, r),
                &q_poly(&subset_closed_form(n, r, n - 1)),
            )
        }))
    })
}

/// `(sigma, sum over A of q^inv(image))` for every `sigma` in `W_(n-r)`.
fn per_sigma(
    family: Family,
    n: usize,
    r: usize,
    p: &Params,
) -> Result<Vec<(Vec<i32>, LaurentPoly)>, Error> {
    let kind = kinds(family).0;
    let spec = GroupSpec::new(kind, n - r)?;
    p.bounds.check(&GroupSpec::new(kind, n)?)?;
    let subsets = signed_subsets(n, r);
    let mut out = Vec::new();
    for sigma in spec.iter() {
        let mut terms = Vec::with_capacity(subsets.len());
        for a in &subsets {
            let inv = match family {
                Family::D => inv_d(map_fd(&sigma, a, n)?.word()),
                _ => inv_b(map_f(&sigma, a, n)?.word()),
            };
            let mut e = [0; NVARS];
            e[Var::Q.index()] = inv as i32;
            terms.push((e, BigInt::from(1)));
        }
        out.push((
            sigma.into_word(),
            LaurentPoly::from_terms(Roster::Q, terms)?,
        ));
    }
    Ok(out)
}

fn top_power(family: Family, n: usize) -> usize {
    if family == Family::D {
        n - 1
    } else {
        n
    }
}

/// `r` ranges over `0..=n` in type B and `0..n` in type D, where `f_D` needs a
/// nonempty prefix.
fn r_range(family: Family, n: usize) -> std::ops::Range<usize> {
    0..if family == Family::D { n } else { n + 1 }
}

fn per_sigma_check(family: Family, p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| {
        for r in r_range(family, n) {
            let closed = q_poly(&subset_closed_form(n, r, top_power(family, n)));
            for (sigma, sum) in per_sigma(family, n, r, p)? {
                let inv = if family == Family::D {
                    inv_d(&sigma)
                } else {
                    inv_b(&sigma)
                };
                let mut e = [0; NVARS];
                e[Var::Q.index()] = inv as i32;
                if let Some(f) = poly_mismatch(n, &sum, &closed.shift(&e)) {
                    return Ok(Some(f));
                }
            }
        }
        Ok(None)
    })
}

fn summed_check(family: Family, p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| {
        for r in r_range(family, n) {
            let closed =
                LaurentPoly::from_upoly(&subset_closed_form(n, r, top_power(family, n)), R);
            let mut acc = LaurentPoly::zero(R);
            for (sigma, sum) in per_sigma(family, n, r, p)? {
                let st = stats(family, &sigma);
                let mut e = [0; NVARS];
                e[Var::S.index()] = st.edes as i32;
                e[Var::T.index()] = st.odes as i32;
                acc += &sum.with_roster(R)?.shift(&e);
            }
            if let Some(f) = poly_mismatch(n, &acc, &(whole(family, n - r, p)? * &closed)) {
                return Ok(Some(f));
            }
        }
        Ok(None)
    })
}

pub(super) fn corollary_2_2(p: &Params) -> Result<Finding, Error> {
    per_sigma_check(Family::B, p)
}

pub(super) fn corollary_2_3(p: &Params) -> Result<Finding, Error> {
    summed_check(Family::B, p)
}

pub(super) fn corollary_3_2(p: &Params) -> Result<Finding, Error> {
    Ok(per_sigma_check(Family::D, p)?.with_note("r < n: f_D needs a nonempty prefix"))
}

pub(super) fn corollary_3_3(p: &Params) -> Result<Finding, Error> {
    Ok(summed_check(Family::D, p)?.with_note("r < n: f_D needs a nonempty prefix"))
}

/// Runs to at least `n = 8`; no enumeration is involved.
pub(super) fn easy_relation_b(p: &Params) -> Result<Finding, Error> {
    let top = p.max_n.max(8);
    let fail = (0..=top).find_map(|n| {
        (0..=n).find_map(|i| {
            let lhs = (i + 1..=n).fold(qbinom(n, n - i), |acc, j| {
                &acc * &(&UPoly::one() + &UPoly::monomial(j))
            });
            poly_mismatch(n, &q_poly(&lhs), &q_poly(&poincare_ratio(Family::B, n, i)))
        })
    });
    Ok(single(fail).up_to_n(top))
}

// ---------------------------------------------------------------- passing lemmas

fn passing(family: Family, n: usize, i: usize, p: &Params) -> Result<Option<Failure>, Error> {
    let kind = |i: i32| {
        if family == Family::D {
            GroupKind::H(i)
        } else {
            GroupKind::G(i)
        }
    };
    let x = if i % 2 == 1 { v(Var::T) } else { v(Var::S) };
    let lhs = group(kind(i as i32), n, p)?;
    let rhs = &x * &whole(family, i, p)? * ratio(family, n, i)
        + (one() - &x) * group(kind(i as i32 - 1), n, p)?;
    Ok(poly_mismatch(n, &lhs, &rhs).map(|f| match f {
        Failure::Poly {
            n,
            monomial,
            lhs,
            rhs,
        } => Failure::Poly {
            n,
            monomial: format!("{monomial} (i = {i})"),
            lhs,
            rhs,
        },
        f => f,
    }))
}

pub(super) fn passing_g(p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| for_each_n(0..=n, |i| passing(Family::B, n, i, p)))
}

/// Reported for every `i`; the lemma is only needed, and only true, from
/// `i = 2` on, where `D_i` is a genuine group polynomial.
pub(super) fn passing_h(p: &Params) -> Result<Finding, Error> {
    let all = for_each_n(1..=p.max_n, |n| {
        for_each_n(0..=n, |i| passing(Family::D, n, i, p))
    })?;
    let from_two = for_each_n(2..=p.max_n, |n| {
        for_each_n(2..=n, |i| passing(Family::D, n, i, p))
    })?;
    let part = Part::readings(
        "",
        vec![
            ("0 <= i <= n".into(), all),
            ("2 <= i <= n".into(), from_two),
        ],
    );
    Ok(assemble(vec![part]).up_to_n(p.max_n))
}

pub(super) fn x_lemma(p: &Params) -> Result<Finding, Error> {
    let t = v(Var::T);
    checked(p, 3, |n| {
        let two = LaurentPoly::constant(2, R);
        let rhs = &t * &t * ratio(Family::D, n, 1)
            + &t * &(one() - &t) * (&two * ratio(Family::D, n, 0) - one())
            + (one() - &t);
        Ok(poly_mismatch(n, &group(GroupKind::X, n, p)?, &rhs))
    })
}

// ---------------------------------------------------------------- alternating polynomials

fn hat_image(
    family: Family,
    n: usize,
    e: usize,
    p: &Params,
) -> Result<(LaurentPoly, LaurentPoly), Error> {
    let hat = poly_family(family, n, Weight::Hat, &p.bounds)?;
    let w = whole(family, n, p)?.substitute(Var::S, Substitution::Reciprocal)?;
    let mut shift = [0; NVARS];
    shift[Var::S.index()] = e as i32;
    Ok((hat, w.shift(&shift)))
}

pub(super) fn hat_b_power(p: &Params) -> Result<Finding, Error> {
    checked(p, 0, |n| {
        let (hat, image) = hat_image(Family::B, n, n.div_ceil(2), p)?;
        Ok(poly_mismatch(n, &hat, &image))
    })
}

pub(super) fn hat_d_power(p: &Params) -> Result<Finding, Error> {
    let try_exp = |parity: usize, drop: usize| -> Result<Option<Failure>, Error> {
        for n in (2..=p.max_n).filter(|n| n % 2 == parity) {
            let k = n / 2;
            let e = if parity == 0 { k - drop } else { k + 1 - drop };
            let (hat, image) = hat_image(Family::D, n, e, p)?;
            if let Some(f) = poly_mismatch(n, &hat, &image) {
                return Ok(Some(f));
            }
        }
        Ok(None)
    };
    let parts = vec![
        Part::readings(
            "n = 2k",
            vec![
                ("s^k".into(), try_exp(0, 0)?),
                ("s^(k-1)".into(), try_exp(0, 1)?),
            ],
        ),
        Part::readings(
            "n = 2k+1",
            vec![
                ("s^(k+1)".into(), try_exp(1, 0)?),
                ("s^k".into(), try_exp(1, 1)?),
            ],
        ),
    ];
    Ok(assemble(parts).up_to_n(p.max_n))
}

pub(super) fn fivevar_reduction(p: &Params) -> Result<Finding, Error> {
    let rename = |x: Var| match x {
        Var::T0 => Var::S,
        Var::T1 => Var::T,
        other => other,
    };
    checked(p, 0, |n| {
        for family in [Family::A, Family::B, Family::D] {
            let five = poly_family(family, n, Weight::FiveVar, &p.bounds)?
                .specialize(Var::S0, 1)?
                .specialize(Var::S1, 1)?
                .rename(rename, R)?;
            if let Some(f) =
                poly_mismatch(n, &five, &poly_family(family, n, Weight::Biv, &p.bounds)?)
            {
                return Ok(Some(f));
            }
        }
        Ok(None)
    })
}

// ---------------------------------------------------------------- bijections

fn bijection_outcome(r: BijectionReport) -> Option<Failure> {
    if r.holds() {
        None
    } else {
        other(
            Some(r.n),
            serde_json::to_string(&r).unwrap_or_else(|_| format!("{r:?}")),
        )
    }
}

fn bounded(kind: GroupKind, n: usize, p: &Params) -> Result<(), Error> {
    p.bounds.check(&GroupSpec::new(kind, n)?)
}

pub(super) fn bijection_f(p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| {
        bounded(GroupKind::B, n, p)?;
        Ok((0..=n).find_map(|i| bijection_outcome(verify_f(n, i))))
    })
}

pub(super) fn bijection_fd(p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| {
        bounded(GroupKind::D, n, p)?;
        Ok((0..n).find_map(|i| bijection_outcome(verify_fd(n, i))))
    })
}

pub(super) fn bijection_fpp(p: &Params) -> Result<Finding, Error> {
    checked(p, 1, |n| {
        bounded(GroupKind::B, n, p)?;
        Ok([Family::B, Family::D]
            .into_iter()
            .find_map(|fam| (0..n).find_map(|k| bijection_outcome(verify_fpp(n, k, fam)))))
    })
}
