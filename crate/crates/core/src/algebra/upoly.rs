use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over the integers, lowest degree first.
///
/// Used for the `q`-only denominators of [`super::QFraction`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        UPoly(v)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn div_int_exact(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Exact quotient `self / d` over the integers, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &UPoly) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lead = d.leading();
        let mut rem = self.0.clone();
        let mut quo = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (qk, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quo[k] = qk;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quo))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &UPoly) -> UPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.leading();
        let mut rem = self.0.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            for x in rem.iter_mut() {
                *x *= &lead;
            }
            let shift = top - dd;
            for (j, dc) in d.0.iter().enumerate() {
                rem[shift + j] -= &c * dc;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        UPoly::new(rem)
    }

    /// Greatest common divisor over the integers, primitive with positive leading coefficient
    /// times the gcd of the contents.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.primitive().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    pub fn lcm(&self, other: &UPoly) -> UPoly {
        if self == other {
            return self.clone();
        }
        if other.div_exact(self).is_some() {
            return other.clone();
        }
        if self.div_exact(other).is_some() {
            return self.clone();
        }
        let g = self.gcd(other);
        let quo = other.div_exact(&g).expect("gcd divides");
        self * &quo
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = super::LaurentPoly::from_upoly(self, super::Roster::Q);
        write!(f, "{p}")
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        UPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.0.get(k).cloned().unwrap_or_default();
                    a + rhs.0.get(k).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1+q)(1+q+q^2) and (1+q)^2
        let a = UPoly::from_i64s(&[1, 2, 2, 1]);
        let b = UPoly::from_i64s(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), UPoly::from_i64s(&[1, 1]));
        assert_eq!(a.lcm(&b), UPoly::from_i64s(&[1, 3, 4, 3, 1]));
    }

    #[test]
    fn exact_division() {
        let a = UPoly::from_i64s(&[1, 0, -1]);
        assert_eq!(
            a.div_exact(&UPoly::from_i64s(&[1, 1])),
            Some(UPoly::from_i64s(&[1, -1]))
        );
        assert_eq!(a.div_exact(&UPoly::from_i64s(&[1, 2])), None);
    }
}
