//! Series with a base-ring denominator, so identities containing `1/M`,
//! `1/(1-s)` or `1/sqrt(s)` can be written as stated and checked after
//! clearing.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::algebra::{
    ExtElement, ExtensionContext, Family, LaurentPoly, QFraction, Roster, UPoly, Var,
};
use crate::error::Error;
use crate::series::{
    residual_report, series_from_polys, series_make, SeriesFamily, SeriesReport, TruncatedSeries,
};

/// Shared context and order for one identity.
#[derive(Clone)]
pub struct Env {
    pub ctx: Arc<ExtensionContext>,
    pub order: usize,
}

impl Env {
    pub fn new(ctx: ExtensionContext, order: usize) -> Self {
        Env {
            ctx: Arc::new(ctx),
            order,
        }
    }

    pub fn roster(&self) -> Roster {
        self.ctx.roster()
    }

    pub fn var(&self, v: Var) -> LaurentPoly {
        LaurentPoly::var(v, self.roster())
    }

    pub fn int(&self, c: i64) -> LaurentPoly {
        LaurentPoly::constant(c, self.roster())
    }

    pub fn gen(&self, name: &str) -> ExtElement {
        self.ctx.gen(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn lift(&self, s: TruncatedSeries) -> Frac {
        Frac {
            den: LaurentPoly::one(self.roster()),
            num: s,
        }
    }

    pub fn scalar(&self, e: ExtElement) -> Frac {
        self.lift(TruncatedSeries::constant(&self.ctx, self.order, e))
    }

    pub fn poly(&self, p: LaurentPoly) -> Frac {
        self.scalar(ExtElement::from_poly(p))
    }

    pub fn one(&self) -> Frac {
        self.poly(self.int(1))
    }

    pub fn u(&self) -> Frac {
        self.lift(TruncatedSeries::u(&self.ctx, self.order))
    }

    /// `1 / g` for a generator `g`, written as `g / g^2`.
    pub fn inv_gen(&self, name: &str) -> Frac {
        let idx = self
            .ctx
            .index_of(name)
            .unwrap_or_else(|| panic!("no generator {name}"));
        let square = self.ctx.generators()[idx].square.clone();
        self.scalar(self.gen(name)).over(&square)
    }

    pub fn family(&self, f: SeriesFamily, scale: &ExtElement) -> Result<Frac, Error> {
        Ok(self.lift(series_make(f, scale, self.order, &self.ctx)?))
    }

    /// Like [`Env::family`], with sines returned in the usual real normalisation.
    pub fn family_std(&self, f: SeriesFamily, scale: &ExtElement) -> Result<Frac, Error> {
        let s = series_make(f, scale, self.order, &self.ctx)?;
        let s = match f {
            SeriesFamily::SinQ | SeriesFamily::SinB | SeriesFamily::SinD => s.standard_sine()?,
            _ => s,
        };
        Ok(self.lift(s))
    }

    pub fn from_polys(&self, polys: &[(usize, LaurentPoly)], family: Family) -> Frac {
        self.lift(series_from_polys(polys, family, self.order, &self.ctx))
    }

    /// `sum_n scale^n u^n / (d^n n!)`, restricted to a parity when `part` is given.
    pub fn classical(&self, scale: &ExtElement, d: u64, part: Option<usize>) -> Frac {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        let mut power = self.ctx.one();
        let mut den = num_bigint::BigInt::from(1);
        for n in 0..=self.order {
            if n > 0 {
                den *= num_bigint::BigInt::from(d * n as u64);
            }
            coeffs.push(if part.is_none_or(|p| n % 2 == p) {
                QFraction::from_parts(power.clone(), UPoly::constant(den.clone()))
            } else {
                QFraction::zero(self.roster())
            });
            power = self.ctx.m(&power, scale);
        }
        self.lift(TruncatedSeries::from_coeffs(&self.ctx, coeffs))
    }
}

/// `num / den` with `den` a nonzero base-ring polynomial.
#[derive(Clone, Debug)]
pub struct Frac {
    num: TruncatedSeries,
    den: LaurentPoly,
}

impl Frac {
    pub fn over(&self, p: &LaurentPoly) -> Frac {
        assert!(!p.is_zero(), "division by zero");
        Frac {
            num: self.num.clone(),
            den: &self.den * p,
        }
    }

    pub fn even(&self) -> Frac {
        Frac {
            num: self.num.even_part(),
            den: self.den.clone(),
        }
    }

    pub fn odd(&self) -> Frac {
        Frac {
            num: self.num.odd_part(),
            den: self.den.clone(),
        }
    }

    pub fn at_q_one(&self) -> Result<Frac, Error> {
        Ok(Frac {
            num: self.num.at_q_one()?,
            den: self.den.specialize(Var::Q, 1)?,
        })
    }

    /// Report on `self = 0`; the denominator is irrelevant.
    pub fn zero_report(&self) -> SeriesReport {
        residual_report(&self.num)
    }

    fn combine(&self, other: &Frac, sub: bool) -> Frac {
        let (a, b, den) = if self.den == other.den {
            (self.num.clone(), other.num.clone(), self.den.clone())
        } else {
            (
                self.num.mul_poly(&other.den),
                other.num.mul_poly(&self.den),
                &self.den * &other.den,
            )
        };
        let num = if sub { a - b } else { a + b };
        Frac { num, den }
    }
}

/// `lhs * den - num`, the cross-multiplied residual of `lhs = num / den`.
pub fn residual(lhs: &Frac, num: &Frac, den: &Frac) -> SeriesReport {
    (lhs * den - num).zero_report()
}

macro_rules! frac_op {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Frac> for &Frac {
            type Output = Frac;
            fn $method(self, rhs: &Frac) -> Frac {
                let f: fn(&Frac, &Frac) -> Frac = $body;
                f(self, rhs)
            }
        }
        impl $tr<Frac> for Frac {
            type Output = Frac;
            fn $method(self, rhs: Frac) -> Frac {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Frac> for Frac {
            type Output = Frac;
            fn $method(self, rhs: &Frac) -> Frac {
                (&self).$method(rhs)
            }
        }
        impl $tr<Frac> for &Frac {
            type Output = Frac;
            fn $method(self, rhs: Frac) -> Frac {
                self.$method(&rhs)
            }
        }
    };
}

frac_op!(Add, add, |a, b| a.combine(b, false));
frac_op!(Sub, sub, |a, b| a.combine(b, true));
frac_op!(Mul, mul, |a, b| Frac {
    num: &a.num * &b.num,
    den: &a.den * &b.den
});

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        -self.clone()
    }
}
