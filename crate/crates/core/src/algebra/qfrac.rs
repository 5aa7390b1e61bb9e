use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::ext::{ExtElement, ExtensionContext};
use super::poly::LaurentPoly;
use super::upoly::UPoly;
use super::var::Roster;
use crate::error::Error;

/// An extension-ring numerator over a nonzero denominator in `q` alone.
///
/// The integer content shared by numerator and denominator is removed and
/// the denominator has a positive leading coefficient, so the representation
/// is deterministic. Zero-ness only depends on the numerator.
#[derive(Clone, Debug)]
pub struct QFraction {
    num: ExtElement,
    den: UPoly,
}

impl QFraction {
    pub fn new(num: ExtElement, den: &LaurentPoly) -> Result<Self, Error> {
        let den = den
            .to_upoly()
            .filter(|d| !d.is_zero())
            .ok_or(Error::BadDenominator)?;
        Ok(Self::from_parts(num, den))
    }

    /// # Panics
    /// If `den` is zero.
    pub fn from_parts(num: ExtElement, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = QFraction { num, den };
        f.normalize();
        f
    }

    pub fn from_ext(num: ExtElement) -> Self {
        QFraction {
            num,
            den: UPoly::one(),
        }
    }

    pub fn zero(roster: Roster) -> Self {
        Self::from_ext(ExtElement::zero(roster))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = UPoly::one();
            return;
        }
        let mut g = self.num.content().gcd(&self.den.content());
        if self.den.leading().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            self.num = self.num.div_exact_int(&g).expect("content divides");
            self.den = self.den.div_int_exact(&g).expect("content divides");
        }
    }

    pub fn num(&self) -> &ExtElement {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn den_poly(&self) -> LaurentPoly {
        LaurentPoly::from_upoly(&self.den, self.num.roster())
    }

    pub fn roster(&self) -> Roster {
        self.num.roster()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &QFraction) -> QFraction {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return Self::from_parts(&self.num + &other.num, self.den.clone());
        }
        let l = self.den.lcm(&other.den);
        let a = self.num.mul_upoly(&l.div_exact(&self.den).expect("lcm"));
        let b = other.num.mul_upoly(&l.div_exact(&other.den).expect("lcm"));
        Self::from_parts(&a + &b, l)
    }

    pub fn neg(&self) -> QFraction {
        QFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &QFraction) -> QFraction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QFraction, ctx: &ExtensionContext) -> Result<QFraction, Error> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.roster()));
        }
        let num = ctx.mul(&self.num, &other.num)?;
        let den = if self.den.is_one() {
            other.den.clone()
        } else if other.den.is_one() {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Ok(Self::from_parts(num, den))
    }

    pub fn mul_ext(&self, e: &ExtElement, ctx: &ExtensionContext) -> Result<QFraction, Error> {
        Ok(Self::from_parts(ctx.mul(&self.num, e)?, self.den.clone()))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> QFraction {
        Self::from_parts(self.num.mul_poly(p), self.den.clone())
    }

    /// Divides by a polynomial in `q`.
    pub fn div_upoly(&self, d: &UPoly) -> QFraction {
        Self::from_parts(self.num.clone(), &self.den * d)
    }

    pub fn scale(&self, c: &BigInt) -> QFraction {
        Self::from_parts(self.num.scale(c), self.den.clone())
    }

    /// Applies `f` to the numerator components and `g` to the denominator.
    pub fn try_map(
        &self,
        f: impl Fn(&LaurentPoly) -> Result<LaurentPoly, Error>,
        g: impl Fn(&UPoly) -> UPoly,
    ) -> Result<QFraction, Error> {
        let den = g(&self.den);
        if den.is_zero() {
            return Err(Error::BadDenominator);
        }
        Ok(Self::from_parts(self.num.try_map(f)?, den))
    }
}

impl PartialEq for QFraction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul_upoly(&other.den) == other.num.mul_upoly(&self.den)
    }
}

impl Eq for QFraction {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn addition_uses_the_lcm() {
        let r = Roster::STQ;
        let one = ExtElement::from_poly(LaurentPoly::one(r));
        let a = QFraction::from_parts(one.clone(), UPoly::from_i64s(&[1, 1]));
        let b = QFraction::from_parts(one, UPoly::from_i64s(&[1, 2, 1]));
        let sum = a.add(&b);
        assert_eq!(sum.den(), &UPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(
            sum.num().as_poly().unwrap(),
            LaurentPoly::constant(2, r) + LaurentPoly::var(Var::Q, r)
        );
    }

    #[test]
    fn bad_denominators() {
        let r = Roster::STQ;
        let one = ExtElement::from_poly(LaurentPoly::one(r));
        assert!(QFraction::new(one.clone(), &LaurentPoly::zero(r)).is_err());
        assert!(QFraction::new(one, &LaurentPoly::var(Var::S, r)).is_err());
    }

    #[test]
    fn content_is_removed() {
        let r = Roster::STQ;
        let two = ExtElement::from_poly(LaurentPoly::constant(2, r));
        let f = QFraction::from_parts(two, UPoly::from_i64s(&[-2, -4]));
        assert_eq!(f.den(), &UPoly::from_i64s(&[1, 2]));
        assert_eq!(f.num().as_poly().unwrap(), LaurentPoly::constant(-1, r));
    }
}
