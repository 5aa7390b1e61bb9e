//! Generating-function identities, checked as cross-multiplied residuals of
//! truncated series whose left-hand sides come from brute force.

use std::ops::RangeInclusive;

use num_bigint::BigInt;

use super::expr::{residual, Env, Frac};
use super::{assemble, series_mismatch, Failure, Finding, Params, Part};
use crate::algebra::{ExtElement, ExtensionContext, Family, LaurentPoly, Roster, Var};
use crate::enumerate::{poly_group, Weight};
use crate::error::Error;
use crate::perm::{GroupKind, GroupSpec};
use crate::recurrence::s_equals_t;
use crate::series::SeriesFamily as F;

const DEFINED_SINES: &str = "sines as defined (carrying i)";
const REAL_SINES: &str = "real sines";

fn brute(
    kind: GroupKind,
    weight: Weight,
    ns: RangeInclusive<usize>,
    p: &Params,
) -> Result<Vec<(usize, LaurentPoly)>, Error> {
    ns.map(|n| Ok((n, poly_group(&GroupSpec::new(kind, n)?, weight, &p.bounds)?)))
        .collect()
}

fn lp(r: Roster, v: Var) -> LaurentPoly {
    LaurentPoly::var(v, r)
}

fn one_minus(r: Roster, v: Var) -> LaurentPoly {
    LaurentPoly::one(r) - lp(r, v)
}

/// `(s, t, q)` with `M^2 = (1-s)(1-t)`.
fn ctx_m() -> ExtensionContext {
    let r = Roster::STQ;
    ExtensionContext::new(r).with("M", one_minus(r, Var::S) * one_minus(r, Var::T))
}

fn outcome(lhs: &Frac, num: &Frac, den: &Frac) -> Option<Failure> {
    series_mismatch(residual(lhs, num, den))
}

fn done(p: &Params, parts: Vec<Part>) -> Result<Finding, Error> {
    Ok(assemble(parts).at_order(p.order))
}

fn sines(env: &Env, real: bool, f: F, scale: &ExtElement) -> Result<Frac, Error> {
    if real {
        env.family_std(f, scale)
    } else {
        env.family(f, scale)
    }
}

fn sine_label(real: bool) -> &'static str {
    if real {
        REAL_SINES
    } else {
        DEFINED_SINES
    }
}

// ---------------------------------------------------------------- type A

pub(super) fn type_a_pentavar(p: &Params) -> Result<Finding, Error> {
    let r = Roster::FIVE;
    let square = (lp(r, Var::T0) - lp(r, Var::S0)) * (lp(r, Var::T1) - lp(r, Var::S1));
    let env = Env::new(ExtensionContext::new(r).with("alpha", square), p.order);
    let a = env.gen("alpha");
    let lhs = env.from_polys(
        &brute(GroupKind::A, Weight::FiveVar, 1..=p.order, p)?,
        Family::A,
    );
    let v = |x| env.poly(lp(r, x));
    let (s0, s1, t0, t1) = (v(Var::S0), v(Var::S1), v(Var::T0), v(Var::T1));
    let (c, s) = (env.family(F::CoshQ, &a)?, env.family(F::SinhQ, &a)?);
    let ee = env.family(F::Eq, &a)? * env.family(F::Eq, &-&a)?;
    let num = (&s1 + &t1) * &c + env.scalar(a.clone()) * &s - &t1 * &ee - &s1;
    let den = &s0 * &s1 - (&s0 * &t1 + &s1 * &t0) * &c + &t0 * &t1 * &ee;
    done(p, vec![Part::plain("", outcome(&lhs, &num, &den))])
}

// ---------------------------------------------------------------- type B, bivariate

struct BivB {
    env: Env,
    h: Frac,
    s: Frac,
    t: Frac,
    one: Frac,
    m: Frac,
    cq: Frac,
    sq: Frac,
    cb: Frac,
    sb: Frac,
    den: Frac,
}

fn biv_b(p: &Params) -> Result<BivB, Error> {
    let env = Env::new(ctx_m(), p.order);
    let m = env.gen("M");
    let h = env.from_polys(
        &brute(GroupKind::B, Weight::Biv, 0..=p.order, p)?,
        Family::B,
    );
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let cq = env.family(F::CoshQ, &m)?;
    let ee = env.family(F::Eq, &m)? * env.family(F::Eq, &-&m)?;
    let den = &one - (&s + &t) * &cq + &s * &t * &ee;
    Ok(BivB {
        sq: env.family(F::SinhQ, &m)?,
        cb: env.family(F::CoshB, &m)?,
        sb: env.family(F::SinhB, &m)?,
        m: env.scalar(m),
        env,
        h,
        s,
        t,
        one,
        cq,
        den,
    })
}

pub(super) fn type_b_biv_even(p: &Params) -> Result<Finding, Error> {
    let b = biv_b(p)?;
    let num = (&b.one - &b.s) * ((&b.one - &b.t * &b.cq) * &b.cb + &b.t * &b.sq * &b.sb);
    done(p, vec![Part::plain("", outcome(&b.h.even(), &num, &b.den))])
}

pub(super) fn type_b_biv_odd(p: &Params) -> Result<Finding, Error> {
    let b = biv_b(p)?;
    let num = &b.m * ((&b.one - &b.s * &b.cq) * &b.sb + &b.s * &b.sq * &b.cb);
    done(p, vec![Part::plain("", outcome(&b.h.odd(), &num, &b.den))])
}

/// Both parts at once: `(1-s)cosh_B + M sinh_B` against the linear system
/// in `H0`, `H1`, for either sign of `L = +-M/(1-t)`.
pub(super) fn type_b_solve_system(p: &Params) -> Result<Finding, Error> {
    let b = biv_b(p)?;
    let one_t = b.env.poly(one_minus(Roster::STQ, Var::T));
    let lhs = (&b.one - &b.s) * &b.cb + &b.m * &b.sb;
    let inv_m = b.env.inv_gen("M");
    let mut readings = Vec::new();
    for (name, sign) in [("L = M/(1-t)", 1), ("L = -M/(1-t)", -1)] {
        let sign = b.env.poly(b.env.int(sign));
        let l = (&sign * &b.m).over(&one_minus(Roster::STQ, Var::T));
        let inv_l = &sign * &one_t * &inv_m;
        let rhs = b.h.even() * (&b.one - &b.s * &b.cq - &b.s * &inv_l * &b.sq)
            + b.h.odd() * (&b.one - &b.t * &b.cq - &b.t * &l * &b.sq);
        readings.push((
            name.to_string(),
            series_mismatch((&lhs - &rhs).zero_report()),
        ));
    }
    done(p, vec![Part::readings("", readings)])
}

// ---------------------------------------------------------------- type B, alternating

struct AltB {
    env: Env,
    h: Frac,
    s: Frac,
    t: Frac,
    one: Frac,
    m: ExtElement,
    cq: Frac,
    cb: Frac,
    den: Frac,
}

fn alt_b(p: &Params) -> Result<AltB, Error> {
    let env = Env::new(ctx_m().with_i(), p.order);
    let m = env.gen("M");
    let im = env.ctx.m(&env.gen("i"), &m);
    let h = env.from_polys(
        &brute(GroupKind::B, Weight::Hat, 0..=p.order, p)?,
        Family::B,
    );
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let cq = env.family(F::CosQ, &m)?;
    let ee = env.family(F::Eq, &im)? * env.family(F::Eq, &-&im)?;
    let den = &s + &t * &ee - (&t * &s + &one) * &cq;
    Ok(AltB {
        cb: env.family(F::CosB, &m)?,
        env,
        h,
        s,
        t,
        one,
        m,
        cq,
        den,
    })
}

pub(super) fn type_b_alt_even(p: &Params) -> Result<Finding, Error> {
    let b = alt_b(p)?;
    let mut readings = Vec::new();
    for real in [false, true] {
        let sq = sines(&b.env, real, F::SinQ, &b.m)?;
        let sb = sines(&b.env, real, F::SinB, &b.m)?;
        let num = (&b.s - &b.one) * ((&b.one - &b.t * &b.cq) * &b.cb - &b.t * &sq * &sb);
        readings.push((
            sine_label(real).to_string(),
            outcome(&b.h.even(), &num, &b.den),
        ));
    }
    done(p, vec![Part::readings("", readings)])
}

pub(super) fn type_b_alt_odd(p: &Params) -> Result<Finding, Error> {
    let b = alt_b(p)?;
    let m = b.env.scalar(b.m.clone());
    let mut readings = Vec::new();
    for real in [false, true] {
        let sq = sines(&b.env, real, F::SinQ, &b.m)?;
        let sb = sines(&b.env, real, F::SinB, &b.m)?;
        let literal = -(&m * (&b.s - &b.cq * &sb + &sq * &b.cb));
        let grouped = -(&m * ((&b.s - &b.cq) * &sb + &sq * &b.cb));
        let label = sine_label(real);
        readings.push((
            format!("{label}, (s - cos_q sin_B) as printed"),
            outcome(&b.h.odd(), &literal, &b.den),
        ));
        readings.push((
            format!("{label}, (s - cos_q) sin_B"),
            outcome(&b.h.odd(), &grouped, &b.den),
        ));
    }
    done(p, vec![Part::readings("", readings)])
}

/// `q = 1`, `n!` denominators, both parities together.
pub(super) fn type_b_altdesc_corollary(p: &Params) -> Result<Finding, Error> {
    let env = Env::new(ctx_m().with_i(), p.order);
    let m = env.gen("M");
    let two_m = m.scale(&BigInt::from(2));
    let lhs = env
        .from_polys(
            &brute(GroupKind::B, Weight::Hat, 0..=p.order, p)?,
            Family::A,
        )
        .at_q_one()?;
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let cos = env.family(F::CosQ, &m)?.at_q_one()?;
    let sin = env.family_std(F::SinQ, &m)?.at_q_one()?;
    let cos2 = env.family(F::CosQ, &two_m)?.at_q_one()?;
    let num = -((&s - &one) * (&t - &one) * &cos) - env.scalar(m) * (&s + &one) * &sin;
    let den = &s + &t - (&t * &s + &one) * &cos2;
    done(p, vec![Part::plain("", outcome(&lhs, &num, &den))])
}

pub(super) fn type_b_altdesc_univariate(p: &Params) -> Result<Finding, Error> {
    let r = Roster::STQ;
    let env = Env::new(ExtensionContext::new(r).with_i(), p.order);
    let polys: Vec<_> = brute(GroupKind::B, Weight::Hat, 0..=p.order, p)?
        .into_iter()
        .map(|(n, w)| (n, s_equals_t(&w)))
        .collect();
    let lhs = env.from_polys(&polys, Family::A).at_q_one()?;
    let w = ExtElement::from_poly(one_minus(r, Var::T));
    let w2 = w.scale(&BigInt::from(2));
    let (t, one) = (env.poly(env.var(Var::T)), env.one());
    let cos = env.family(F::CosQ, &w)?.at_q_one()?;
    let sin = env.family_std(F::SinQ, &w)?.at_q_one()?;
    let cos2 = env.family(F::CosQ, &w2)?.at_q_one()?;
    let tm1 = &t - &one;
    let num = -(&tm1 * &tm1 * &cos) + (&t * &t - &one) * &sin;
    let den = env.poly(env.int(2)) * &t - (&t * &t + &one) * &cos2;
    done(p, vec![Part::plain("", outcome(&lhs, &num, &den))])
}

// ---------------------------------------------------------------- type B, q = 1 (classical forms)

pub(super) fn type_b_q1_panzeng(p: &Params) -> Result<Finding, Error> {
    let env = Env::new(ctx_m(), p.order);
    let m = env.gen("M");
    // B_n(1, 1) = 2^n n!, so this is the classical series at u/2.
    let h = env
        .from_polys(
            &brute(GroupKind::B, Weight::Biv, 0..=p.order, p)?,
            Family::B,
        )
        .at_q_one()?;
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let c = env.classical(&m, 2, Some(0));
    let sh = env.classical(&m, 2, Some(1));
    let mf = env.scalar(m);
    let m2 = &mf * &mf;
    let den = &m2 * &c * &c - (&s + &one) * (&t + &one) * &sh * &sh;
    let even = outcome(&h.even(), &(&m2 * &c), &den);
    let odd = outcome(&h.odd(), &(&mf * (&s + &one) * &sh), &den);
    done(p, vec![Part::plain("even", even), Part::plain("odd", odd)])
}

pub(super) fn panzeng_b_biv(p: &Params) -> Result<Finding, Error> {
    let env = Env::new(ctx_m(), p.order);
    let m = env.gen("M");
    let two_m = m.scale(&BigInt::from(2));
    let h = env
        .from_polys(
            &brute(GroupKind::B, Weight::Biv, 0..=p.order, p)?,
            Family::A,
        )
        .at_q_one()?;
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let alpha = env.poly(one_minus(Roster::STQ, Var::S) * one_minus(Roster::STQ, Var::T));
    let a2 = env.classical(&two_m, 1, Some(0));
    let ch = env.classical(&m, 1, Some(0));
    let sh_over_m = env.classical(&m, 1, Some(1)) * env.inv_gen("M");
    let den = &one + &s * &t - (&s + &t) * &a2;
    let even_num = (&s + &t) * &a2 + &alpha * &ch - (&one + &s * &t);
    let odd_num = (&s * &s - &one) * (&t - &one) * &sh_over_m;
    let even = outcome(&(h.even() - &one), &even_num, &den);
    let odd = outcome(&h.odd(), &odd_num, &den);
    done(p, vec![Part::plain("even", even), Part::plain("odd", odd)])
}

pub(super) fn panzeng_b_alt(p: &Params) -> Result<Finding, Error> {
    let env = Env::new(ctx_m().with_i(), p.order);
    let m = env.gen("M");
    let two_m = m.scale(&BigInt::from(2));
    let h = env
        .from_polys(
            &brute(GroupKind::B, Weight::Hat, 0..=p.order, p)?,
            Family::A,
        )
        .at_q_one()?;
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let alpha = env.poly(one_minus(Roster::STQ, Var::S) * one_minus(Roster::STQ, Var::T));
    let cos = env.family(F::CosQ, &m)?.at_q_one()?;
    let sin = env.family_std(F::SinQ, &m)?.at_q_one()?;
    let cos2 = env.family(F::CosQ, &two_m)?.at_q_one()?;
    let cosh2 = env.classical(&two_m, 1, Some(0));
    let mf = env.scalar(m);
    let den = &s + &t - (&one + &s * &t) * &cos2;
    let even_num = (&one + &s * &t) * &cos2 - &alpha * &cos - (&s + &t);
    let odd_num = -((&one + &s) * &mf * &sin);
    let even = outcome(&(h.even() - &one), &even_num, &den);
    let printed_den = &s + &t - (&one + &s * &t) * &cosh2;
    let odd = vec![
        (
            "denominator with alpha^n as printed".to_string(),
            outcome(&h.odd(), &odd_num, &printed_den),
        ),
        (
            "denominator with (-alpha)^n".to_string(),
            outcome(&h.odd(), &odd_num, &den),
        ),
    ];
    done(
        p,
        vec![Part::plain("even", even), Part::readings("odd", odd)],
    )
}

pub(super) fn reiner_egf(p: &Params) -> Result<Finding, Error> {
    let r = Roster::STQ;
    let env = Env::new(ExtensionContext::new(r), p.order);
    let polys: Vec<_> = brute(GroupKind::B, Weight::Biv, 0..=p.order, p)?
        .into_iter()
        .map(|(n, w)| (n, s_equals_t(&w)))
        .collect();
    let lhs = env.from_polys(&polys, Family::B);
    let w = ExtElement::from_poly(one_minus(r, Var::T));
    let (t, one) = (env.poly(env.var(Var::T)), env.one());
    let exp_b = env.family(F::ExpB, &w)?;
    let num = env.poly(one_minus(r, Var::T)) * &exp_b;
    let mut readings = Vec::new();
    for (name, f) in [
        ("exp(x; q) = e_q(x)", F::Eq),
        ("exp(x; q) = exp_B(x; q)", F::ExpB),
    ] {
        let den = &one - &t * env.family(f, &w)?;
        readings.push((name.to_string(), outcome(&lhs, &num, &den)));
    }
    done(p, vec![Part::readings("", readings)])
}

// ---------------------------------------------------------------- type B, five variables

pub(super) fn type_b_fivevar(p: &Params) -> Result<Finding, Error> {
    let r = Roster::FIVE;
    let v = |x| lp(r, x);
    let env = Env::new(
        ExtensionContext::new(r).with("m", (v(Var::S0) - v(Var::T0)) * (v(Var::S1) - v(Var::T1))),
        p.order,
    );
    let m = env.gen("m");
    let h = env.from_polys(
        &brute(GroupKind::B, Weight::FiveVar, 0..=p.order, p)?,
        Family::B,
    );
    let f = |x| env.poly(v(x));
    let (s0, s1, t0, t1) = (f(Var::S0), f(Var::S1), f(Var::T0), f(Var::T1));
    let (c, s) = (env.family(F::CoshQ, &m)?, env.family(F::SinhQ, &m)?);
    let (cb, sb) = (env.family(F::CoshB, &m)?, env.family(F::SinhB, &m)?);
    let ee = env.family(F::Eq, &m)? * env.family(F::Eq, &-&m)?;
    let den = &s0 * &s1 - (&t0 * &s1 + &s0 * &t1) * &c + &t0 * &t1 * &ee;
    let even_num = (&s0 - &t0) * ((&s1 - &t1 * &c) * &cb + &t1 * &s * &sb);
    let odd_num = env.scalar(m) * ((&s0 - &t0 * &c) * &sb + &t0 * &s * &cb);
    let even = outcome(&h.even(), &even_num, &den);
    let odd = outcome(&h.odd(), &odd_num, &den);
    done(p, vec![Part::plain("even", even), Part::plain("odd", odd)])
}

// ---------------------------------------------------------------- type D, bivariate

struct BivD {
    d: Frac,
    s: Frac,
    t: Frac,
    one: Frac,
    inv_m: Frac,
    cq: Frac,
    sq: Frac,
    den: Frac,
    od: Frac,
    ed: Frac,
}

fn biv_d(p: &Params) -> Result<BivD, Error> {
    let r = Roster::STQ;
    let env = Env::new(ctx_m(), p.order);
    let m = env.gen("M");
    let d = env.from_polys(
        &brute(GroupKind::D, Weight::Biv, 2..=p.order, p)?,
        Family::D,
    );
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let (cq, sq) = (env.family(F::CoshQ, &m)?, env.family(F::SinhQ, &m)?);
    let (cd, sd) = (env.family(F::CoshD, &m)?, env.family(F::SinhD, &m)?);
    let ee = env.family(F::Eq, &m)? * env.family(F::Eq, &-&m)?;
    let den = &one - (&s + &t) * &cq + &s * &t * &ee;
    let mf = env.scalar(m);
    let mu = &mf * env.u();
    let inv_m = env.inv_gen("M");
    let (one_s, one_t) = (
        env.poly(one_minus(r, Var::S)),
        env.poly(one_minus(r, Var::T)),
    );
    let two = env.poly(env.int(2));
    let od = env.u() * &t * &t * (&cq - &one)
        + (&one_t * &mf * (&sd - &mu)).over(&one_minus(r, Var::S))
        + &two * &t * &one_t * &inv_m * (&sq - &mu);
    let ed = &two * &t * (&cq - &one)
        + &one_t * (&cd - &one)
        + env.u() * &t * &t * &one_s * &inv_m * &sq;
    Ok(BivD {
        d,
        s,
        t,
        one,
        inv_m,
        cq,
        sq,
        den,
        od,
        ed,
    })
}

pub(super) fn type_d_biv_even(p: &Params) -> Result<Finding, Error> {
    let b = biv_d(p)?;
    let one_s = &b.one - &b.s;
    let num = &b.ed * (&b.one - &b.t * &b.cq) + &b.od * &b.t * &one_s * &b.inv_m * &b.sq;
    done(p, vec![Part::plain("", outcome(&b.d.even(), &num, &b.den))])
}

pub(super) fn type_d_biv_odd(p: &Params) -> Result<Finding, Error> {
    let b = biv_d(p)?;
    let one_t = &b.one - &b.t;
    let num = &b.od * (&b.one - &b.s * &b.cq) + &b.ed * &b.s * &one_t * &b.inv_m * &b.sq;
    done(p, vec![Part::plain("", outcome(&b.d.odd(), &num, &b.den))])
}

pub(super) fn type_d_solve_system(p: &Params) -> Result<Finding, Error> {
    let b = biv_d(p)?;
    let (one_s, one_t) = (&b.one - &b.s, &b.one - &b.t);
    let lhs = b.d.even() * (&b.one - &b.s * &b.cq - &b.s * &one_t * &b.inv_m * &b.sq)
        + b.d.odd() * (&b.one - &b.t * &b.cq - &b.t * &one_s * &b.inv_m * &b.sq);
    let diff = lhs - (&b.od + &b.ed);
    done(
        p,
        vec![Part::plain("", series_mismatch(diff.zero_report()))],
    )
}

// ---------------------------------------------------------------- type D, alternating

fn type_d_alt(p: &Params, odd: bool) -> Result<Finding, Error> {
    let r = Roster::STQ;
    let ctx = ctx_m().with_i().with("sqrt_s", lp(r, Var::S));
    let env = Env::new(ctx, p.order);
    let m = env.gen("M");
    let im = env.ctx.m(&env.gen("i"), &m);
    let all = env.from_polys(
        &brute(GroupKind::D, Weight::Hat, 2..=p.order, p)?,
        Family::D,
    );
    let lhs = if odd { all.odd() } else { all.even() };
    let (s, t, one) = (
        env.poly(env.var(Var::S)),
        env.poly(env.var(Var::T)),
        env.one(),
    );
    let root = env.scalar(env.gen("sqrt_s"));
    let inv_root = env.inv_gen("sqrt_s");
    let inv_m = env.inv_gen("M");
    let mf = env.scalar(m.clone());
    let mu = &mf * env.u();
    let u = env.u();
    let two = env.poly(env.int(2));
    let one_t = &one - &t;
    let s_1 = lp(r, Var::S) - LaurentPoly::one(r);

    let cq = env.family(F::CosQ, &m)?;
    let cd = env.family(F::CosD, &m)?;
    let chd = env.family(F::CoshD, &m)?;
    let ee = env.family(F::Eq, &im)? * env.family(F::Eq, &-&im)?;
    let den = &s - (&s * &t + &one) * &cq + &t * &ee;

    let mut readings = Vec::new();
    for real in [false, true] {
        let sq = sines(&env, real, F::SinQ, &m)?;
        let sd = sines(&env, real, F::SinD, &m)?;
        for recomputed in [false, true] {
            let (tod, ted) = if recomputed {
                let tod = &root * &u * &t * &t * (&cq - &one)
                    - (&one_t * &mf * &root * (&sd - &mu)).over(&s_1)
                    + &two * &t * &one_t * &root * &inv_m * (&sq - &mu);
                let ted = &two * &t * (&cq - &one)
                    + &u * &t * &t * env.poly(s_1.clone()) * &inv_m * &sq
                    + &one_t * (&cd - &one);
                (tod, ted)
            } else {
                let tod = &root * &u * &t * &t * (&cq - &one)
                    - (&one_t * &mf * &inv_root * (&sd - &mu)).over(&s_1)
                    + &two * &t * &one_t * &root * &inv_m * (&sq - &mu);
                let ted = &two * &t * (&cq - &one)
                    + (&u * &t * &t * env.poly(s_1.clone()) * &root * &inv_m * &sq)
                        .over(&lp(r, Var::S))
                    + (&one_t * (&chd - &one)).over(&lp(r, Var::T));
                (tod, ted)
            };
            for flipped in [false, true] {
                let sign = env.poly(env.int(if flipped { 1 } else { -1 }));
                let num = if odd {
                    &tod * &inv_root * (&s - &cq) + &sign * &ted * &one_t * &inv_m * &sq
                } else {
                    let c =
                        (&t * env.poly(s_1.clone()) * &root * &inv_m * &sq).over(&lp(r, Var::S));
                    &ted * (&one - &t * &cq) + &sign * &tod * &c
                };
                let name = format!(
                    "{}, {} T', {} sign",
                    sine_label(real),
                    if recomputed { "recomputed" } else { "printed" },
                    if flipped { "flipped" } else { "printed" },
                );
                readings.push((name, outcome(&lhs, &num, &den)));
            }
        }
    }
    done(p, vec![Part::readings("", readings)])
}

pub(super) fn type_d_alt_even(p: &Params) -> Result<Finding, Error> {
    type_d_alt(p, false)
}

pub(super) fn type_d_alt_odd(p: &Params) -> Result<Finding, Error> {
    type_d_alt(p, true)
}

// ---------------------------------------------------------------- type D, five variables

pub(super) fn type_d_fivevar(p: &Params) -> Result<Finding, Error> {
    let r = Roster::FIVE;
    let v = |x| lp(r, x);
    let ctx = ExtensionContext::new(r)
        .with("m", (v(Var::S0) - v(Var::T0)) * (v(Var::S1) - v(Var::T1)))
        .with("sqrt_s0s1", v(Var::S0) * v(Var::S1));
    let env = Env::new(ctx, p.order);
    let m = env.gen("m");
    let all = env.from_polys(
        &brute(GroupKind::D, Weight::FiveVar, 2..=p.order, p)?,
        Family::D,
    );
    let f = |x| env.poly(v(x));
    let (s0, s1, t0, t1) = (f(Var::S0), f(Var::S1), f(Var::T0), f(Var::T1));
    let (one, two, u) = (env.one(), env.poly(env.int(2)), env.u());
    let (c, s) = (env.family(F::CoshQ, &m)?, env.family(F::SinhQ, &m)?);
    let (cd, sd) = (env.family(F::CoshD, &m)?, env.family(F::SinhD, &m)?);
    let ee = env.family(F::Eq, &m)? * env.family(F::Eq, &-&m)?;
    let den = &s0 * &s1 - (&s0 * &t1 + &s1 * &t0) * &c + &t0 * &t1 * &ee;
    let mf = env.scalar(m);
    let mu = &mf * &u;
    let (inv_m, root, inv_root) = (
        env.inv_gen("m"),
        env.scalar(env.gen("sqrt_s0s1")),
        env.inv_gen("sqrt_s0s1"),
    );
    let (d0, d1) = (s0.clone() - &t0, s1.clone() - &t1);
    let (ps0, ps1, pt1) = (v(Var::S0), v(Var::S1), v(Var::T1));
    let s1sq = &ps1 * &ps1;

    let build = |recomputed: bool| {
        let tod_mid = if recomputed {
            (&s0 * &d1 * &mf * &inv_root).over(&(&ps1 * &(&ps0 - &v(Var::T0))))
        } else {
            (&d1 * &mf * &inv_root).over(&(&ps0 - &v(Var::T0)))
        };
        let tod = (&root * &u * &t1 * &t1 * (&c - &one)).over(&s1sq)
            + tod_mid * (&sd - &mu)
            + (&two * &t1 * &d1 * &root * &inv_m * (&s - &mu)).over(&s1sq);
        let ted_u = if recomputed {
            (&t1 * &t1 * &d0 * &inv_m).over(&ps1)
        } else {
            (&t1 * &t1 * &d0 * &root * &inv_m).over(&(&s1sq * &ps0))
        };
        let ted_last = if recomputed {
            d1.over(&ps1)
        } else {
            d1.over(&pt1)
        };
        let ted = (&two * &t1 * (&c - &one)).over(&ps1) + &u * ted_u * &s + ted_last * (&cd - &one);
        let od_coef = (&t1 * &d0 * &root * &inv_m).over(&ps0);
        let even = if recomputed {
            &s1 * &ted * (&s1 - &t1 * &c) + &s1 * &tod * &od_coef * &s
        } else {
            (&ted * (&s1 - &t1 * &c)).over(&ps0) + &tod * &od_coef * &s
        };
        let odd = (&s1 * &root * &tod * (&s0 - &t0 * &c)).over(&ps0)
            + &ted * &s1 * &t0 * &d1 * &inv_m * &s;
        (even, odd)
    };
    let (pe, po) = build(false);
    let (re, ro) = build(true);
    let even = vec![
        ("printed".to_string(), outcome(&all.even(), &pe, &den)),
        (
            "recomputed coefficients".to_string(),
            outcome(&all.even(), &re, &den),
        ),
    ];
    let odd = vec![
        ("printed".to_string(), outcome(&all.odd(), &po, &den)),
        (
            "recomputed coefficients".to_string(),
            outcome(&all.odd(), &ro, &den),
        ),
    ];
    done(
        p,
        vec![Part::readings("even", even), Part::readings("odd", odd)],
    )
}

// ---------------------------------------------------------------- snakes

fn snake_env(p: &Params) -> Env {
    Env::new(ExtensionContext::new(Roster::Q).with_i(), p.order)
}

pub(super) fn snakes_b_q(p: &Params) -> Result<Finding, Error> {
    let env = snake_env(p);
    let x = env.ctx.one();
    let lhs = env.from_polys(
        &brute(GroupKind::SnakeB, Weight::Q, 0..=p.order, p)?,
        Family::B,
    );
    let (cq, cb) = (env.family(F::CosQ, &x)?, env.family(F::CosB, &x)?);
    let mut readings = Vec::new();
    for real in [false, true] {
        let sq = sines(&env, real, F::SinQ, &x)?;
        let sb = sines(&env, real, F::SinB, &x)?;
        for (shift, sign) in [("sin_q - 1", -1), ("sin_q + 1", 1)] {
            let num = &cq * &cb + (&sq + env.poly(env.int(sign))) * &sb;
            readings.push((
                format!("{}, {shift}", sine_label(real)),
                outcome(&lhs, &num, &cq),
            ));
        }
    }
    done(p, vec![Part::readings("", readings)])
}

pub(super) fn snakes_d_q(p: &Params) -> Result<Finding, Error> {
    let env = snake_env(p);
    let x = env.ctx.one();
    let all = env.from_polys(
        &brute(GroupKind::SnakeD, Weight::Q, 2..=p.order, p)?,
        Family::D,
    );
    let (one, two) = (env.one(), env.poly(env.int(2)));
    let (cq, cd) = (env.family(F::CosQ, &x)?, env.family(F::CosD, &x)?);
    let den = -&cq;
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for real in [false, true] {
        let sq = sines(&env, real, F::SinQ, &x)?;
        let sd = sines(&env, real, F::SinD, &x)?;
        let base = -(&two * &cq * &cq) - &two * &sq * &sq + &sq * &sd;
        let label = sine_label(real);
        let printed = &base + &cq * (&cd - &one);
        let corrected = &base + &cq * (&cd + &one);
        even.push((
            format!("{label}, cos_D - 1 as printed"),
            outcome(&all.even(), &printed, &den),
        ));
        even.push((
            format!("{label}, cos_D + 1"),
            outcome(&all.even(), &corrected, &den),
        ));
        let odd_num = -(&two * &sq) + env.u() * &cq + &sd;
        odd.push((label.to_string(), outcome(&all.odd(), &odd_num, &den)));
    }
    done(
        p,
        vec![Part::readings("even", even), Part::readings("odd", odd)],
    )
}

pub(super) fn springer_b_q1(p: &Params) -> Result<Finding, Error> {
    let env = snake_env(p);
    let x = env.ctx.one();
    let lhs = env
        .from_polys(
            &brute(GroupKind::SnakeB, Weight::Q, 0..=p.order, p)?,
            Family::A,
        )
        .at_q_one()?;
    let cos = env.family(F::CosQ, &x)?.at_q_one()?;
    let sin = env.family_std(F::SinQ, &x)?.at_q_one()?;
    done(
        p,
        vec![Part::plain("", outcome(&lhs, &env.one(), &(cos - sin)))],
    )
}

pub(super) fn springer_d_q1(p: &Params) -> Result<Finding, Error> {
    let env = snake_env(p);
    let x = env.ctx.one();
    let x2 = env.ctx.constant(2);
    let all = env
        .from_polys(
            &brute(GroupKind::SnakeD, Weight::Q, 2..=p.order, p)?,
            Family::A,
        )
        .at_q_one()?;
    let one = env.one();
    let cos = env.family(F::CosQ, &x)?.at_q_one()?;
    let sin = env.family_std(F::SinQ, &x)?.at_q_one()?;
    let cos2 = env.family(F::CosQ, &x2)?.at_q_one()?;
    let sin2 = env.family_std(F::SinQ, &x2)?.at_q_one()?;
    let den = -&cos2;
    let even = vec![
        (
            "cos u - cos 2u - 1 as printed".to_string(),
            outcome(&all.even(), &(&cos - &cos2 - &one), &den),
        ),
        (
            "cos u - 1".to_string(),
            outcome(&all.even(), &(&cos - &one), &den),
        ),
    ];
    let odd_num = -sin2 + env.u() * &cos2 + sin;
    let odd = outcome(&all.odd(), &odd_num, &den);
    done(
        p,
        vec![Part::readings("even", even), Part::plain("odd", odd)],
    )
}
