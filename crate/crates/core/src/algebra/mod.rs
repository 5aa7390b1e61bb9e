//! Exact arithmetic: Laurent polynomials over the integers, quadratic
//! extensions, q-fractions and q-numbers.

mod ext;
pub mod io;
mod poly;
mod qfrac;
pub mod qnum;
mod upoly;
mod var;

pub use ext::{ExtElement, ExtensionContext, Generator};
pub use poly::{LaurentPoly, Substitution};
pub use qfrac::QFraction;
pub use qnum::{poincare, poincare_ratio, qbinom, qfact, qint, Family};
pub use upoly::UPoly;
pub use var::{Exponents, Roster, Var, NVARS};
