use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use super::poly::LaurentPoly;
use super::upoly::UPoly;
use super::var::{Roster, Var};
use crate::error::Error;

/// A formal square root adjoined to the base ring: `name^2 = square`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub square: LaurentPoly,
}

/// A base roster together with up to eight quadratic generators.
///
/// Elements are combinations `sum_S c_S * prod_{g in S} g` over subsets `S`
/// of the generators, so a generator never appears squared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionContext {
    roster: Roster,
    gens: Vec<Generator>,
}

impl ExtensionContext {
    pub fn new(roster: Roster) -> Self {
        ExtensionContext {
            roster,
            gens: Vec::new(),
        }
    }

    /// Adds a generator. Panics on a duplicate name, a ninth generator or a roster mismatch.
    pub fn with(mut self, name: &str, square: LaurentPoly) -> Self {
        assert!(self.gens.len() < 8, "at most eight generators");
        assert!(self.index_of(name).is_none(), "duplicate generator {name}");
        assert_eq!(
            square.roster(),
            self.roster,
            "generator square over a different roster"
        );
        self.gens.push(Generator {
            name: name.to_string(),
            square,
        });
        self
    }

    /// Adds the imaginary unit `i` with `i^2 = -1`.
    pub fn with_i(self) -> Self {
        let sq = LaurentPoly::constant(-1, self.roster);
        self.with("i", sq)
    }

    pub fn roster(&self) -> Roster {
        self.roster
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn has(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// The generator `name` as an element.
    pub fn gen(&self, name: &str) -> Result<ExtElement, Error> {
        let k = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(ExtElement::basis(1 << k, LaurentPoly::one(self.roster)))
    }

    pub fn one(&self) -> ExtElement {
        ExtElement::from_poly(LaurentPoly::one(self.roster))
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement::zero(self.roster)
    }

    pub fn constant(&self, c: i64) -> ExtElement {
        ExtElement::from_poly(LaurentPoly::constant(c, self.roster))
    }

    pub fn var(&self, v: Var) -> ExtElement {
        ExtElement::from_poly(LaurentPoly::var(v, self.roster))
    }

    fn check(&self, a: &ExtElement) -> Result<(), Error> {
        if a.roster != self.roster {
            return Err(Error::RosterMismatch(a.roster, self.roster));
        }
        if a.parts
            .keys()
            .any(|m| (*m as usize) >> self.gens.len() != 0)
        {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// Product, reducing `g^2 -> square(g)`.
    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement, Error> {
        self.check(a)?;
        self.check(b)?;
        let mut out = ExtElement::zero(self.roster);
        for (ma, pa) in &a.parts {
            for (mb, pb) in &b.parts {
                let mut c = pa * pb;
                let common = ma & mb;
                for (k, g) in self.gens.iter().enumerate() {
                    if common & (1 << k) != 0 {
                        c = &c * &g.square;
                    }
                }
                out.add_part(ma ^ mb, c);
            }
        }
        Ok(out)
    }

    /// Panicking form of [`Self::mul`] for elements known to belong to this context.
    pub fn m(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.mul(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn pow(&self, a: &ExtElement, k: u32) -> ExtElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.m(&acc, a);
        }
        acc
    }
}

/// Element of an [`ExtensionContext`]: base-ring coefficients keyed by a
/// bitmask of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    roster: Roster,
    parts: BTreeMap<u8, LaurentPoly>,
}

impl ExtElement {
    pub fn zero(roster: Roster) -> Self {
        ExtElement {
            roster,
            parts: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::basis(0, p)
    }

    /// `p` times the product of the generators in `mask`.
    pub fn basis(mask: u8, p: LaurentPoly) -> Self {
        let mut e = Self::zero(p.roster());
        e.add_part(mask, p);
        e
    }

    pub fn roster(&self) -> Roster {
        self.roster
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u8, &LaurentPoly)> {
        self.parts.iter().map(|(m, p)| (*m, p))
    }

    pub fn part(&self, mask: u8) -> LaurentPoly {
        self.parts
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.roster))
    }

    /// The generator-free component, if the element has no other.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        match self.parts.len() {
            0 => Some(LaurentPoly::zero(self.roster)),
            1 => self.parts.get(&0).cloned(),
            _ => None,
        }
    }

    fn add_part(&mut self, mask: u8, p: LaurentPoly) {
        assert_eq!(
            p.roster(),
            self.roster,
            "roster mismatch in extension element"
        );
        if p.is_zero() {
            return;
        }
        let slot = self
            .parts
            .entry(mask)
            .or_insert_with(|| LaurentPoly::zero(p.roster()));
        *slot += &p;
        if slot.is_zero() {
            self.parts.remove(&mask);
        }
    }

    /// Applies `f` to every base-ring component.
    pub fn try_map(
        &self,
        f: impl Fn(&LaurentPoly) -> Result<LaurentPoly, Error>,
    ) -> Result<Self, Error> {
        let mut out = Self::zero(self.roster);
        for (m, p) in &self.parts {
            let img = f(p)?;
            out.roster = img.roster();
            out.add_part(*m, img);
        }
        Ok(out)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self.try_map(|c| c.checked_mul(p))
            .unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn mul_upoly(&self, p: &UPoly) -> Self {
        let mut out = Self::zero(self.roster);
        for (m, c) in &self.parts {
            out.add_part(*m, c.mul_upoly(p));
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.roster);
        for (m, p) in &self.parts {
            out.add_part(*m, p.scale(c));
        }
        out
    }

    pub fn div_exact_int(&self, d: &BigInt) -> Result<Self, Error> {
        self.try_map(|p| p.div_exact_int(d))
    }

    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.parts
            .values()
            .fold(BigInt::default(), |g, p| g.gcd(&p.content()))
    }

    /// Sum over every component of the number of terms.
    pub fn term_count(&self) -> usize {
        self.parts.values().map(LaurentPoly::len).sum()
    }

    /// Formats with generator names taken from `ctx`.
    pub fn display<'a>(&'a self, ctx: &'a ExtensionContext) -> ExtDisplay<'a> {
        ExtDisplay { e: self, ctx }
    }
}

pub struct ExtDisplay<'a> {
    e: &'a ExtElement,
    ctx: &'a ExtensionContext,
}

impl fmt::Display for ExtDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, p)) in self.e.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let names: Vec<&str> = self
                .ctx
                .gens
                .iter()
                .enumerate()
                .filter(|(j, _)| m & (1 << j) != 0)
                .map(|(_, g)| g.name.as_str())
                .collect();
            if names.is_empty() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*{}", names.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn add(self, rhs: &ExtElement) -> ExtElement {
        let mut out = self.clone();
        for (m, p) in &rhs.parts {
            out.add_part(*m, p.clone());
        }
        out
    }
}

impl Sub<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: &ExtElement) -> ExtElement {
        let mut out = self.clone();
        for (m, p) in &rhs.parts {
            out.add_part(*m, -p);
        }
        out
    }
}

impl Neg for &ExtElement {
    type Output = ExtElement;
    fn neg(self) -> ExtElement {
        let parts = self.parts.iter().map(|(m, p)| (*m, -p)).collect();
        ExtElement {
            roster: self.roster,
            parts,
        }
    }
}

impl From<LaurentPoly> for ExtElement {
    fn from(p: LaurentPoly) -> Self {
        ExtElement::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> ExtensionContext {
        let r = Roster::STQ;
        let one = LaurentPoly::one(r);
        let m2 = (&one - &LaurentPoly::var(Var::S, r)) * (&one - &LaurentPoly::var(Var::T, r));
        ExtensionContext::new(r).with("M", m2).with_i()
    }

    #[test]
    fn generators_square_to_their_values() {
        let c = ctx();
        let m = c.gen("M").unwrap();
        let i = c.gen("i").unwrap();
        assert_eq!(c.m(&i, &i), c.constant(-1));
        assert_eq!(c.m(&m, &m).as_poly().unwrap(), c.generators()[0].square);
        let im = c.m(&i, &m);
        assert_eq!(c.m(&im, &im), -&c.m(&m, &m));
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let c = ctx();
        let other = ExtElement::from_poly(LaurentPoly::one(Roster::Q));
        assert!(c.mul(&c.one(), &other).is_err());
        let wide = ExtElement::basis(1 << 5, LaurentPoly::one(Roster::STQ));
        assert_eq!(c.mul(&wide, &c.one()), Err(Error::ContextMismatch));
    }
}
