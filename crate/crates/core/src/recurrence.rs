//! `B_n(s,t,q)` and `D_n(s,t,q)` from recurrences, q-Hyatt sums for the
//! positive-last-letter parts, and the sign-flip symmetry relations.
//!
//! The recurrences are used in denominator-free form: every ratio
//! `P_n / (P_m [n-m]_q!)` of Poincaré polynomials is a polynomial, and the
//! `B_n` (resp. `D_n`) term occurring on the right-hand side is moved to the
//! left and the resulting factor `(1-s)` or `(1-t)` divided out by hand.

use serde::Serialize;

use crate::algebra::{
    poincare_ratio, qbinom, Exponents, Family, LaurentPoly, Roster, Substitution, Var, NVARS,
};
use crate::enumerate::{poly_group, Bounds, Weight};
use crate::error::Error;
use crate::perm::{GroupKind, GroupSpec};

const R: Roster = Roster::STQ;

fn v(x: Var) -> LaurentPoly {
    LaurentPoly::var(x, R)
}

fn one() -> LaurentPoly {
    LaurentPoly::one(R)
}

fn one_minus(x: Var) -> LaurentPoly {
    one() - v(x)
}

/// `P_n / (P_m [n-m]_q!)` embedded in `(s, t, q)`.
pub fn ratio(family: Family, n: usize, m: usize) -> LaurentPoly {
    LaurentPoly::from_upoly(&poincare_ratio(family, n, m), R)
}

fn mono(s: i32, t: i32, q: i32) -> Exponents {
    let mut e = [0; NVARS];
    e[Var::S.index()] = s;
    e[Var::T.index()] = t;
    e[Var::Q.index()] = q;
    e
}

/// `(1-t)^a (1-s)^b`
fn tb(a: usize, b: usize) -> LaurentPoly {
    one_minus(Var::T).pow(a as u32) * one_minus(Var::S).pow(b as u32)
}

/// `B_0, ..., B_n` from the type B recurrence.
pub fn recur_b_table(n: usize) -> Vec<LaurentPoly> {
    let mut b = vec![one()];
    let (s, t) = (v(Var::S), v(Var::T));
    for m in 1..=n {
        let k = m / 2;
        let c = |j: usize| ratio(Family::B, m, j) * &b[j];
        let mut acc;
        if m % 2 == 0 {
            acc = tb(k, k);
            for r in 0..k {
                acc += &(&t * &tb(r, r) * c(m - 2 * r - 1));
            }
            for r in 1..=k {
                acc += &(&s * &tb(r, r - 1) * c(m - 2 * r));
            }
        } else {
            acc = tb(k, k + 1);
            for r in 0..=k {
                acc += &(&s * &tb(r, r) * c(m - 2 * r - 1));
            }
            for r in 1..=k {
                acc += &(&t * &tb(r - 1, r) * c(m - 2 * r));
            }
        }
        b.push(acc);
    }
    b
}

pub fn recur_b(n: usize) -> LaurentPoly {
    recur_b_table(n).pop().expect("nonempty")
}

/// `D_0, ..., D_n` from the type D recurrence, with `D_0 = D_1 = 1` and
/// `D_2 = (1 + tq)^2`.
///
/// For even `n = 2k` the sum over `D_{n-2r-1}` runs over `r <= k - 2`; the
/// `r = k - 1` term would bring in `D_1`, which the `H_{n,1}` step of the
/// derivation replaces by the three closed-form terms.
pub fn recur_d_table(n: usize) -> Vec<LaurentPoly> {
    let mut d = vec![one(), one()];
    let (s, t) = (v(Var::S), v(Var::T));
    if n >= 2 {
        d.push((one() + &t * &v(Var::Q)).pow(2));
    }
    for m in 3..=n {
        let k = m / 2;
        let c = |j: usize| ratio(Family::D, m, j) * &d[j];
        let top0 = ratio(Family::D, m, 0);
        let top1 = ratio(Family::D, m, 1);
        let tt = &t * &t;
        let mut acc;
        if m % 2 == 0 {
            acc = tb(k + 1, k - 1)
                + (&t * &tb(k, k - 1) * &top0).scale(&2.into())
                + &tt * &tb(k - 1, k - 1) * &top1;
            for r in 0..k - 1 {
                acc += &(&t * &tb(r, r) * c(m - 2 * r - 1));
            }
            for r in 1..k {
                acc += &(&s * &tb(r, r - 1) * c(m - 2 * r));
            }
        } else {
            acc = tb(k + 1, k)
                + (&t * &tb(k, k) * &top0).scale(&2.into())
                + &tt * &tb(k - 1, k) * &top1;
            for r in 0..k {
                acc += &(&s * &tb(r, r) * c(m - 2 * r - 1));
            }
            for r in 1..k {
                acc += &(&t * &tb(r - 1, r) * c(m - 2 * r));
            }
        }
        d.push(acc);
    }
    d.truncate(n + 1);
    d
}

pub fn recur_d(n: usize) -> LaurentPoly {
    recur_d_table(n).pop().expect("nonempty")
}

pub fn recur_table(family: Family, n: usize) -> Vec<LaurentPoly> {
    match family {
        Family::D => recur_d_table(n),
        _ => recur_b_table(n),
    }
}

fn binom2(m: usize) -> i32 {
    (m * m.saturating_sub(1) / 2) as i32
}

/// q-Hyatt sum for the elements whose last letter is positive, built from
/// `table[k] = W_k(s,t,q)` for `k < n` (with `D_0 = D_1 = 1` in type D).
pub fn hyatt_plus_from(n: usize, table: &[LaurentPoly]) -> LaurentPoly {
    assert!(table.len() >= n, "need W_0 .. W_(n-1)");
    let sm1 = v(Var::S) - one();
    let tm1 = v(Var::T) - one();
    let term = |m: usize, a: usize, b: usize| {
        let qb = LaurentPoly::from_upoly(&qbinom(n, m), R).shift(&mono(0, 0, binom2(m)));
        qb * &table[n - m] * sm1.pow(a as u32) * tm1.pow(b as u32)
    };
    let mut acc = LaurentPoly::zero(R);
    let k = n / 2;
    if n.is_multiple_of(2) {
        for r in 0..k {
            acc += &term(2 * r + 1, r, r);
        }
        for r in 1..=k {
            acc += &term(2 * r, r - 1, r);
        }
    } else {
        for r in 0..=k {
            acc += &term(2 * r + 1, r, r);
        }
        for r in 1..=k {
            acc += &term(2 * r, r, r - 1);
        }
    }
    acc
}

/// `B_n^+` or `D_n^+` via the q-Hyatt sum over recurrence-computed polynomials.
pub fn hyatt_plus(family: Family, n: usize) -> LaurentPoly {
    let table = recur_table(family, n.saturating_sub(1).max(1));
    hyatt_plus_from(n, &table)
}

/// Exponents `(s, t, q)` of the prefactor in the minus-symmetry and
/// reciprocity relations.
pub fn symmetry_shift(family: Family, n: usize) -> (i32, i32, i32) {
    let k = (n / 2) as i32;
    let n32 = n as i32;
    match (family, n % 2) {
        (Family::D, 0) => (k - 1, k + 1, n32 * (n32 - 1)),
        (Family::D, _) => (k, k + 1, n32 * (n32 - 1)),
        (_, 0) => (k, k, n32 * n32),
        (_, _) => (k + 1, k, n32 * n32),
    }
}

/// `q^a s^b t^c P(1/s, 1/t, 1/q)` with the prefactor of [`symmetry_shift`].
pub fn flip_image(family: Family, n: usize, p: &LaurentPoly) -> LaurentPoly {
    let (a, b, c) = symmetry_shift(family, n);
    let mut out = p.clone();
    for x in [Var::S, Var::T, Var::Q] {
        out = out
            .substitute(x, Substitution::Reciprocal)
            .expect("s,t,q in roster");
    }
    out.shift(&mono(a, b, c))
}

/// Substitutes `s -> t`.
pub fn s_equals_t(p: &LaurentPoly) -> LaurentPoly {
    p.substitute(
        Var::S,
        Substitution::Value(&LaurentPoly::var(Var::T, p.roster())),
    )
    .expect("s and t in roster")
}

/// Substitutes `q -> 1`.
pub fn at_q_one(p: &LaurentPoly) -> LaurentPoly {
    p.specialize(Var::Q, 1).expect("q in roster")
}

/// Outcome of the symmetry checks for one family and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub family: String,
    pub n: usize,
    /// `W_n^- = q^a s^b t^c W_n^+(1/s, 1/t, 1/q)`
    pub minus: bool,
    /// `W_n = W_n^+ + q^a s^b t^c W_n^+(1/s, 1/t, 1/q)`
    pub split: bool,
    /// `W_n = q^a s^b t^c W_n(1/s, 1/t, 1/q)`
    pub reciprocal: bool,
    /// The sign-flip map adds the stated constants to `odes`, `edes` and `inv`.
    pub sign_flip: bool,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.minus && self.split && self.reciprocal && self.sign_flip
    }
}

/// Brute-force check of the symmetry relations for `B_n` or `D_n`.
pub fn symmetry_check(family: Family, n: usize, bounds: &Bounds) -> Result<SymmetryReport, Error> {
    let (whole, plus, minus) = match family {
        Family::D => (GroupKind::D, GroupKind::DPlus, GroupKind::DMinus),
        _ => (GroupKind::B, GroupKind::BPlus, GroupKind::BMinus),
    };
    let get = |k| poly_group(&GroupSpec::new(k, n)?, Weight::Biv, bounds);
    let (w, wp, wm) = (get(whole)?, get(plus)?, get(minus)?);
    let image = flip_image(family, n, &wp);
    Ok(SymmetryReport {
        family: format!("{family:?}"),
        n,
        minus: wm == image,
        split: w == &wp + &image,
        reciprocal: w == flip_image(family, n, &w),
        sign_flip: sign_flip_holds(family, n),
    })
}

/// The involution negating every letter (type B, or type D with `n` even) or
/// every letter but the first (type D with `n` odd).
pub fn sign_flip(family: Family, w: &[i32]) -> Vec<i32> {
    let keep_first = family == Family::D && w.len() % 2 == 1;
    w.iter()
        .enumerate()
        .map(|(i, &x)| if keep_first && i == 0 { x } else { -x })
        .collect()
}

/// Checks `odes(w) + odes(f(w))`, `edes(w) + edes(f(w))` and
/// `inv(w) + inv(f(w))` are the stated constants over the whole group.
pub fn sign_flip_holds(family: Family, n: usize) -> bool {
    let k = (n / 2) as u32;
    let n32 = n as u32;
    let (odes, edes, inv) = match (family, n % 2) {
        (Family::D, 0) => (k + 1, k.saturating_sub(1), n32 * n32.saturating_sub(1)),
        (Family::D, _) => (k + 1, k, n32 * n32.saturating_sub(1)),
        (_, 0) => (k, k, n32 * n32),
        (_, _) => (k, k + 1, n32 * n32),
    };
    let kind = if family == Family::D {
        GroupKind::D
    } else {
        GroupKind::B
    };
    let mut ok = true;
    GroupSpec::new(kind, n).expect("valid").for_each(|w| {
        let a = crate::perm::stats(family, w);
        let b = crate::perm::stats(family, &sign_flip(family, w));
        ok &= a.odes + b.odes == odes && a.edes + b.edes == edes && a.inv + b.inv == inv;
    });
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::poly_family;

    fn brute(family: Family, n: usize) -> LaurentPoly {
        poly_family(family, n, Weight::Biv, &Bounds::default()).unwrap()
    }

    #[test]
    fn recurrence_b_matches_brute_force_small() {
        let table = recur_b_table(5);
        for (n, p) in table.iter().enumerate() {
            assert_eq!(p, &brute(Family::B, n), "n={n}");
        }
    }

    #[test]
    fn recurrence_d_matches_brute_force_small() {
        let table = recur_d_table(6);
        for (n, p) in table.iter().enumerate().skip(2) {
            assert_eq!(p, &brute(Family::D, n), "n={n}");
        }
    }

    #[test]
    fn hyatt_small() {
        for n in 1..=5 {
            let plus = poly_group(
                &GroupSpec::new(GroupKind::BPlus, n).unwrap(),
                Weight::Biv,
                &Bounds::default(),
            );
            assert_eq!(hyatt_plus(Family::B, n), plus.unwrap(), "B n={n}");
        }
        for n in 2..=5 {
            let plus = poly_group(
                &GroupSpec::new(GroupKind::DPlus, n).unwrap(),
                Weight::Biv,
                &Bounds::default(),
            );
            assert_eq!(hyatt_plus(Family::D, n), plus.unwrap(), "D n={n}");
        }
    }

    #[test]
    fn symmetry_small() {
        for n in 1..=5 {
            assert!(
                symmetry_check(Family::B, n, &Bounds::default())
                    .unwrap()
                    .holds(),
                "B n={n}"
            );
        }
        for n in 2..=5 {
            assert!(
                symmetry_check(Family::D, n, &Bounds::default())
                    .unwrap()
                    .holds(),
                "D n={n}"
            );
        }
    }
}
