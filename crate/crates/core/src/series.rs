//! Truncated power series in `u` with [`QFraction`] coefficients, the
//! q-exponential families, and division-free identity testing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::io::{qfraction_to_json, QFractionJson};
use crate::algebra::{
    poincare, qfact, ExtElement, ExtensionContext, Family, LaurentPoly, QFraction, UPoly, Var,
};
use crate::error::Error;

/// The exponential-type families. `Cos*`/`Sin*` are the even and odd parts
/// of the exponential evaluated at `i` times the scale, so `Sin*` carries a
/// factor `i`; [`TruncatedSeries::standard_sine`] removes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesFamily {
    Eq,
    CoshQ,
    SinhQ,
    CosQ,
    SinQ,
    ExpB,
    CoshB,
    SinhB,
    CosB,
    SinB,
    ExpD,
    CoshD,
    SinhD,
    CosD,
    SinD,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    All,
    Even,
    Odd,
}

impl SeriesFamily {
    fn parts(self) -> (Family, bool, Part) {
        use SeriesFamily::*;
        let base = match self {
            Eq | CoshQ | SinhQ | CosQ | SinQ => Family::A,
            ExpB | CoshB | SinhB | CosB | SinB => Family::B,
            ExpD | CoshD | SinhD | CosD | SinD => Family::D,
        };
        let (trig, part) = match self {
            Eq | ExpB | ExpD => (false, Part::All),
            CoshQ | CoshB | CoshD => (false, Part::Even),
            SinhQ | SinhB | SinhD => (false, Part::Odd),
            CosQ | CosB | CosD => (true, Part::Even),
            SinQ | SinB | SinD => (true, Part::Odd),
        };
        (base, trig, part)
    }

    pub fn name(self) -> &'static str {
        use SeriesFamily::*;
        match self {
            Eq => "e_q",
            CoshQ => "cosh_q",
            SinhQ => "sinh_q",
            CosQ => "cos_q",
            SinQ => "sin_q",
            ExpB => "exp_B",
            CoshB => "cosh_B",
            SinhB => "sinh_B",
            CosB => "cos_B",
            SinB => "sin_B",
            ExpD => "exp_D",
            CoshD => "cosh_D",
            SinhD => "sinh_D",
            CosD => "cos_D",
            SinD => "sin_D",
        }
    }
}

/// `[n]_q!`, `B_n(1,q)` or `D_n(1,q)`: the denominators of the three families.
pub fn denominator(family: Family, n: usize) -> UPoly {
    match family {
        Family::A => qfact(n),
        f => poincare(f, n),
    }
}

/// `sum_{n <= order} c_n u^n`, all coefficients over one extension context.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    ctx: Arc<ExtensionContext>,
    coeffs: Vec<QFraction>,
}

impl TruncatedSeries {
    pub fn zero(ctx: &Arc<ExtensionContext>, order: usize) -> Self {
        let z = QFraction::zero(ctx.roster());
        TruncatedSeries {
            ctx: ctx.clone(),
            coeffs: vec![z; order + 1],
        }
    }

    pub fn constant(ctx: &Arc<ExtensionContext>, order: usize, c: ExtElement) -> Self {
        let mut s = Self::zero(ctx, order);
        s.coeffs[0] = QFraction::from_ext(c);
        s
    }

    pub fn one(ctx: &Arc<ExtensionContext>, order: usize) -> Self {
        Self::constant(ctx, order, ctx.one())
    }

    /// The series `u`.
    pub fn u(ctx: &Arc<ExtensionContext>, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        if order >= 1 {
            s.coeffs[1] = QFraction::from_ext(ctx.one());
        }
        s
    }

    pub fn from_coeffs(ctx: &Arc<ExtensionContext>, coeffs: Vec<QFraction>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        TruncatedSeries {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ctx(&self) -> &Arc<ExtensionContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[QFraction] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &QFraction {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QFraction::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn compatible(&self, other: &Self) -> Result<(), Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        if !Arc::ptr_eq(&self.ctx, &other.ctx) && self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&QFraction, &QFraction) -> QFraction,
    ) -> Result<Self, Error> {
        self.compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.zip(other, QFraction::add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.zip(other, QFraction::sub)
    }

    /// Truncated Cauchy product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.compatible(other)?;
        let ctx = &self.ctx;
        let coeff = |n: usize| -> Result<QFraction, Error> {
            let mut acc = QFraction::zero(ctx.roster());
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b, ctx)?);
            }
            Ok(acc)
        };
        let coeffs = map_indices(self.order() + 1, coeff)?;
        Ok(TruncatedSeries {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn mul_ext(&self, e: &ExtElement) -> Result<Self, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul_ext(e, &self.ctx))
            .collect::<Result<_, _>>()?;
        Ok(TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.mul_poly(p)).collect();
        TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// Multiplies by `u^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.ctx, self.order());
        for n in k..=self.order() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// `u -> -u`
    pub fn negate_u(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    fn keep(&self, part: Part) -> Self {
        let z = QFraction::zero(self.ctx.roster());
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| match part {
                Part::Even if n % 2 == 1 => z.clone(),
                Part::Odd if n % 2 == 0 => z.clone(),
                _ => c.clone(),
            })
            .collect();
        TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    pub fn even_part(&self) -> Self {
        self.keep(Part::Even)
    }

    pub fn odd_part(&self) -> Self {
        self.keep(Part::Odd)
    }

    /// Converts a sine built by [`series_make`] (which carries a factor `i`)
    /// to the real sine by multiplying with `-i`.
    pub fn standard_sine(&self) -> Result<Self, Error> {
        let i = self
            .ctx
            .gen("i")
            .map_err(|_| Error::MissingImaginaryUnit("sin"))?;
        self.mul_ext(&-&i)
    }

    /// Sets `q = 1` in every coefficient.
    pub fn at_q_one(&self) -> Result<Self, Error> {
        let one = num_bigint::BigInt::from(1);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.try_map(
                    |p| p.specialize(Var::Q, 1),
                    |d| UPoly::constant(d.eval(&one)),
                )
            })
            .collect::<Result<_, _>>()?;
        Ok(TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn to_json(&self) -> Vec<QFractionJson> {
        self.coeffs
            .iter()
            .map(|c| qfraction_to_json(c, &self.ctx))
            .collect()
    }
}

#[cfg(feature = "parallel")]
fn map_indices<T: Send>(
    len: usize,
    f: impl Fn(usize) -> Result<T, Error> + Sync + Send,
) -> Result<Vec<T>, Error> {
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indices<T>(len: usize, f: impl Fn(usize) -> Result<T, Error>) -> Result<Vec<T>, Error> {
    (0..len).map(f).collect()
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{}]/({}) u^{n}", c.num().display(&self.ctx), c.den())?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(u^{})", self.order() + 1)
    }
}

macro_rules! series_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            /// # Panics
            /// On order or context mismatch.
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$method(rhs)
            }
        }
        impl $tr<TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.$method(&rhs)
            }
        }
    };
}

series_op!(Add, add, checked_add);
series_op!(Sub, sub, checked_sub);
series_op!(Mul, mul, checked_mul);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        let coeffs = self.coeffs.iter().map(QFraction::neg).collect();
        TruncatedSeries {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

/// `F(scale * u)` truncated at `order`.
///
/// Coefficient `n` is `scale^n / den_n` (times `i^n` for the trigonometric
/// families), then restricted to the even or odd part.
pub fn series_make(
    family: SeriesFamily,
    scale: &ExtElement,
    order: usize,
    ctx: &Arc<ExtensionContext>,
) -> Result<TruncatedSeries, Error> {
    let (base, trig, part) = family.parts();
    let step = if trig {
        let i = ctx
            .gen("i")
            .map_err(|_| Error::MissingImaginaryUnit(family.name()))?;
        ctx.mul(&i, scale)?
    } else {
        ctx.mul(&ctx.one(), scale)?
    };
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = ctx.one();
    for n in 0..=order {
        let wanted = match part {
            Part::All => true,
            Part::Even => n % 2 == 0,
            Part::Odd => n % 2 == 1,
        };
        coeffs.push(if wanted {
            QFraction::from_parts(power.clone(), denominator(base, n))
        } else {
            QFraction::zero(ctx.roster())
        });
        power = ctx.mul(&power, &step)?;
    }
    Ok(TruncatedSeries::from_coeffs(ctx, coeffs))
}

/// `sum_n W_n u^n / den_n` over the given `(n, W_n)` pairs, with `den_n`
/// from `family` (`[n]_q!`, `B_n(1,q)` or `D_n(1,q)`).
pub fn series_from_polys(
    polys: &[(usize, LaurentPoly)],
    family: Family,
    order: usize,
    ctx: &Arc<ExtensionContext>,
) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(ctx, order);
    for (n, p) in polys {
        if *n <= order {
            s.coeffs[*n] =
                QFraction::from_parts(ExtElement::from_poly(p.clone()), denominator(family, *n));
        }
    }
    s
}

/// Result of [`verify_fraction_identity`].
#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub zero: bool,
    pub order: usize,
    /// Lowest power of `u` with a nonzero residual coefficient.
    pub first_bad_power: Option<usize>,
    pub residual: Option<QFractionJson>,
}

/// Checks `lhs = num / den` through the truncation order without dividing:
/// the residual `clear * (lhs * den - num)` must vanish coefficientwise.
pub fn verify_fraction_identity(
    lhs: &TruncatedSeries,
    num: &TruncatedSeries,
    den: &TruncatedSeries,
    clear: &ExtElement,
) -> Result<SeriesReport, Error> {
    let residual = lhs.checked_mul(den)?.checked_sub(num)?.mul_ext(clear)?;
    Ok(residual_report(&residual))
}

/// Report for a series that should be identically zero.
pub fn residual_report(residual: &TruncatedSeries) -> SeriesReport {
    let bad = residual.first_nonzero();
    SeriesReport {
        zero: bad.is_none(),
        order: residual.order(),
        first_bad_power: bad,
        residual: bad.map(|n| qfraction_to_json(residual.coeff(n), residual.ctx())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Roster;

    fn ctx() -> Arc<ExtensionContext> {
        Arc::new(ExtensionContext::new(Roster::STQ).with_i())
    }

    #[test]
    fn exp_times_exp_of_minus_is_even() {
        let c = ctx();
        let one = c.one();
        let e = series_make(SeriesFamily::Eq, &one, 6, &c).unwrap();
        let em = series_make(SeriesFamily::Eq, &-&one, 6, &c).unwrap();
        let prod = &e * &em;
        assert!(prod.odd_part().is_zero());
        // at q = 1 this is exp(u) exp(-u) = 1
        let flat = prod.at_q_one().unwrap();
        assert!((&flat - &TruncatedSeries::one(&c, 6)).is_zero());
    }

    #[test]
    fn cos_squared_plus_sin_squared_at_q_one() {
        let c = ctx();
        let one = c.one();
        let cos = series_make(SeriesFamily::CosQ, &one, 8, &c)
            .unwrap()
            .at_q_one()
            .unwrap();
        let sin = series_make(SeriesFamily::SinQ, &one, 8, &c)
            .unwrap()
            .at_q_one()
            .unwrap()
            .standard_sine()
            .unwrap();
        let lhs = &(&cos * &cos) + &(&sin * &sin);
        assert!((&lhs - &TruncatedSeries::one(&c, 8)).is_zero());
    }

    #[test]
    fn trig_families_need_i() {
        let c = Arc::new(ExtensionContext::new(Roster::STQ));
        let err = series_make(SeriesFamily::CosB, &c.one(), 4, &c).unwrap_err();
        assert_eq!(err, Error::MissingImaginaryUnit("cos_B"));
    }

    #[test]
    fn mismatched_orders() {
        let c = ctx();
        let a = TruncatedSeries::one(&c, 3);
        let b = TruncatedSeries::one(&c, 4);
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::OrderMismatch(3, 4));
    }
}
