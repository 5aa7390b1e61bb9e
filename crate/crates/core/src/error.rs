use thiserror::Error;

use crate::algebra::Roster;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("roster mismatch: {0} vs {1}")]
    RosterMismatch(Roster, Roster),
    #[error("variable `{0}` is not in roster {1}")]
    VarNotInRoster(&'static str, Roster),
    #[error("denominator must be a nonzero polynomial in q alone")]
    BadDenominator,
    #[error("cannot substitute a non-unit value into negative powers")]
    NonInvertibleSubstitution,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("extension context mismatch")]
    ContextMismatch,
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("family {0} needs generator `i` in the extension context")]
    MissingImaginaryUnit(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid signed subset: {0}")]
    InvalidSubset(String),
    #[error("weight {weight} does not apply to group {group}")]
    WeightMismatch { weight: String, group: String },
    #[error(
        "enumeration of {group} at n={n} exceeds the bound n<={max} (about {estimate} elements)"
    )]
    BoundExceeded {
        group: String,
        n: usize,
        max: usize,
        estimate: u128,
    },
    #[error("f_D is undefined here: empty prefix with an odd number of negatives")]
    ParityUnfixable,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
