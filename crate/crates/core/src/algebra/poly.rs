use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;
use super::var::{Exponents, Roster, Var, NVARS};
use crate::error::Error;

/// Sparse Laurent polynomial with integer coefficients.
///
/// Terms are kept in a `BTreeMap`, so iteration order is the canonical
/// lexicographic order on `(s, t, q, s0, s1, t0, t1)` exponents and no
/// stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    roster: Roster,
    terms: BTreeMap<Exponents, BigInt>,
}

/// How to rewrite one variable in [`LaurentPoly::substitute`].
#[derive(Clone, Copy, Debug)]
pub enum Substitution<'a> {
    /// `x -> 1/x`
    Reciprocal,
    /// `x -> -x`
    Negate,
    /// `x -> value`; negative powers need `value` to be a unit monomial.
    Value(&'a LaurentPoly),
}

fn add_exps(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = [0; NVARS];
    for k in 0..NVARS {
        out[k] = a[k] + b[k];
    }
    out
}

impl LaurentPoly {
    pub fn zero(roster: Roster) -> Self {
        LaurentPoly {
            roster,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(roster: Roster) -> Self {
        Self::constant(1, roster)
    }

    pub fn constant(c: impl Into<BigInt>, roster: Roster) -> Self {
        Self::monomial([0; NVARS], c, roster)
    }

    /// # Panics
    /// If `v` is not declared in `roster`.
    pub fn var(v: Var, roster: Roster) -> Self {
        assert!(roster.contains(v), "variable {v} not in roster {roster}");
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Self::monomial(e, 1, roster)
    }

    pub fn monomial(exps: Exponents, c: impl Into<BigInt>, roster: Roster) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { roster, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// duplicates. Fails if a term uses an undeclared variable.
    pub fn from_terms<I>(roster: Roster, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(roster);
        for (e, c) in terms {
            for v in Var::ALL {
                if e[v.index()] != 0 && !roster.contains(v) {
                    return Err(Error::VarNotInRoster(v.name(), roster));
                }
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn roster(&self) -> Roster {
        self.roster
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&[0; NVARS])
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_roster(&self, other: &Self) -> Result<(), Error> {
        if self.roster == other.roster {
            Ok(())
        } else {
            Err(Error::RosterMismatch(self.roster, other.roster))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_roster(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_roster(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_roster(other)?;
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(add_exps(ea, eb)).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            roster: self.roster,
            terms: acc,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.roster);
        }
        let terms = self.terms.iter().map(|(e, x)| (*e, x * c)).collect();
        LaurentPoly {
            roster: self.roster,
            terms,
        }
    }

    /// Multiplies by the monomial with exponent vector `e`.
    pub fn shift(&self, e: &Exponents) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (add_exps(k, e), c.clone()))
            .collect();
        LaurentPoly {
            roster: self.roster,
            terms,
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.roster);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Smallest and largest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        let i = v.index();
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] != 0)
    }

    /// Sum of coefficients, i.e. the value at all variables equal to one.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Replaces one variable according to `sub`. The roster is unchanged.
    pub fn substitute(&self, v: Var, sub: Substitution<'_>) -> Result<Self, Error> {
        if !self.roster.contains(v) {
            return Err(Error::VarNotInRoster(v.name(), self.roster));
        }
        let i = v.index();
        match sub {
            Substitution::Reciprocal => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        let mut e = *e;
                        e[i] = -e[i];
                        (e, c.clone())
                    })
                    .collect();
                Ok(LaurentPoly {
                    roster: self.roster,
                    terms,
                })
            }
            Substitution::Negate => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(e, c)| (*e, if e[i].is_odd() { -c } else { c.clone() }))
                    .collect();
                Ok(LaurentPoly {
                    roster: self.roster,
                    terms,
                })
            }
            Substitution::Value(val) => {
                self.check_roster(val)?;
                let inverse = match self.degree_range(v) {
                    Some((lo, _)) if lo < 0 => {
                        Some(val.unit_inverse().ok_or(Error::NonInvertibleSubstitution)?)
                    }
                    _ => None,
                };
                // group terms by the exponent of v, then combine with powers of val
                let mut by_power: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
                for (e, c) in &self.terms {
                    let mut rest = *e;
                    let d = rest[i];
                    rest[i] = 0;
                    by_power
                        .entry(d)
                        .or_insert_with(|| Self::zero(self.roster))
                        .add_term(rest, c.clone());
                }
                let mut out = Self::zero(self.roster);
                for (d, part) in by_power {
                    let factor = if d >= 0 {
                        val.pow(d as u32)
                    } else {
                        inverse
                            .as_ref()
                            .expect("inverse computed for negative powers")
                            .pow((-d) as u32)
                    };
                    out += &(&part * &factor);
                }
                Ok(out)
            }
        }
    }

    /// Sets `v` to an integer constant.
    pub fn specialize(&self, v: Var, value: i64) -> Result<Self, Error> {
        let c = Self::constant(value, self.roster);
        self.substitute(v, Substitution::Value(&c))
    }

    /// Inverse of a monomial with coefficient `±1`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if !(c.is_one() || (-c).is_one()) {
            return None;
        }
        let mut inv = [0; NVARS];
        for k in 0..NVARS {
            inv[k] = -e[k];
        }
        Some(Self::monomial(inv, c.clone(), self.roster))
    }

    /// Re-declares the polynomial over another roster. Fails if a variable in
    /// use would be dropped.
    pub fn with_roster(&self, roster: Roster) -> Result<Self, Error> {
        for v in self.roster.vars() {
            if !roster.contains(v) && self.uses(v) {
                return Err(Error::VarNotInRoster(v.name(), roster));
            }
        }
        Ok(LaurentPoly {
            roster,
            terms: self.terms.clone(),
        })
    }

    /// Renames variables via `map`, which must be injective on the variables in use.
    pub fn rename(&self, map: impl Fn(Var) -> Var, roster: Roster) -> Result<Self, Error> {
        let mut out = Self::zero(roster);
        for (e, c) in &self.terms {
            let mut ne = [0; NVARS];
            for v in Var::ALL {
                let d = e[v.index()];
                if d != 0 {
                    let w = map(v);
                    if !roster.contains(w) {
                        return Err(Error::VarNotInRoster(w.name(), roster));
                    }
                    ne[w.index()] += d;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|e| {
            e.iter()
                .enumerate()
                .all(|(k, d)| k == Var::Q.index() || *d == 0)
        })
    }

    /// Converts a polynomial in `q` alone with no negative powers.
    pub fn to_upoly(&self) -> Option<UPoly> {
        if !self.is_q_only() {
            return None;
        }
        let qi = Var::Q.index();
        if self.terms.keys().any(|e| e[qi] < 0) {
            return None;
        }
        let deg = self.terms.keys().map(|e| e[qi]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[qi] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    /// Embeds a univariate polynomial in `q`.
    ///
    /// # Panics
    /// If `roster` lacks `q` and `p` is not constant.
    pub fn from_upoly(p: &UPoly, roster: Roster) -> Self {
        let mut out = Self::zero(roster);
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = [0; NVARS];
            if k > 0 {
                assert!(roster.contains(Var::Q), "roster {roster} has no q");
                e[Var::Q.index()] = k as i32;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Multiplies by a univariate polynomial in `q`.
    pub fn mul_upoly(&self, p: &UPoly) -> Self {
        let qi = Var::Q.index();
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (k, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (e, c) in &self.terms {
                let mut e = *e;
                e[qi] += k as i32;
                *acc.entry(e).or_default() += a * c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly {
            roster: self.roster,
            terms: acc,
        }
    }

    /// Divides every coefficient by `d`, which must divide each exactly.
    pub fn div_exact_int(&self, d: &BigInt) -> Result<Self, Error> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (quo, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            terms.insert(*e, quo);
        }
        Ok(LaurentPoly {
            roster: self.roster,
            terms,
        })
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// First term whose coefficients differ, as `(exponents, self_coef, other_coef)`.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponents, BigInt, BigInt)> {
        let diff = self - other;
        let (e, _) = diff.terms.iter().next()?;
        Some((*e, self.coeff(e), other.coeff(e)))
    }

    /// Renders a monomial such as `s^2*t*q^-1` (empty for the unit monomial).
    pub fn format_monomial(e: &Exponents) -> String {
        let mut parts = Vec::new();
        for v in Var::ALL {
            match e[v.index()] {
                0 => {}
                1 => parts.push(v.name().to_string()),
                d => parts.push(format!("{}^{}", v.name(), d)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mono = Self::format_monomial(e);
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// # Panics
            /// On roster mismatch; use the `checked_*` form to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_roster(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_roster(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly {
            roster: self.roster,
            terms,
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x, Roster::STQ)
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&v(Var::S) + &v(Var::Q)).pow(2) - &LaurentPoly::one(Roster::STQ);
        assert_eq!(p.to_string(), "-1 + q^2 + 2*s*q + s^2");
    }

    #[test]
    fn roster_mismatch_is_an_error() {
        let a = LaurentPoly::var(Var::Q, Roster::Q);
        let b = v(Var::Q);
        assert!(matches!(a.checked_add(&b), Err(Error::RosterMismatch(..))));
    }

    #[test]
    fn reciprocal_and_negate() {
        let p = &v(Var::S).pow(2) * &v(Var::T) + v(Var::S);
        let r = p.substitute(Var::S, Substitution::Reciprocal).unwrap();
        assert_eq!(r.degree_range(Var::S), Some((-2, -1)));
        let n = p.substitute(Var::S, Substitution::Negate).unwrap();
        assert_eq!(n, &v(Var::S).pow(2) * &v(Var::T) - v(Var::S));
    }

    #[test]
    fn value_substitution_needs_units_for_negative_powers() {
        let p = v(Var::S)
            .substitute(Var::S, Substitution::Reciprocal)
            .unwrap();
        let two = LaurentPoly::constant(2, Roster::STQ);
        assert_eq!(
            p.substitute(Var::S, Substitution::Value(&two)),
            Err(Error::NonInvertibleSubstitution)
        );
        let t = v(Var::T);
        assert_eq!(
            p.substitute(Var::S, Substitution::Value(&t)).unwrap(),
            t.unit_inverse().unwrap()
        );
    }

    #[test]
    fn upoly_round_trip() {
        let p = (&LaurentPoly::one(Roster::STQ) + &v(Var::Q)).pow(3);
        let u = p.to_upoly().unwrap();
        assert_eq!(LaurentPoly::from_upoly(&u, Roster::STQ), p);
        assert!(v(Var::S).to_upoly().is_none());
    }
}
