use std::fmt;

use crate::error::Error;

/// Number of base-ring indeterminates known to the crate.
pub const NVARS: usize = 7;

/// Exponent vector indexed by [`Var::index`].
pub type Exponents = [i32; NVARS];

/// Base-ring indeterminates, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S,
    T,
    Q,
    S0,
    S1,
    T0,
    T1,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::S, Var::T, Var::Q, Var::S0, Var::S1, Var::T0, Var::T1];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::T => "t",
            Var::Q => "q",
            Var::S0 => "s0",
            Var::S1 => "s1",
            Var::T0 => "t0",
            Var::T1 => "t1",
        }
    }

    pub fn from_name(name: &str) -> Result<Var, Error> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The set of variables a polynomial is declared over.
///
/// Arithmetic is only defined between polynomials sharing a roster.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Roster(u8);

impl Roster {
    pub const Q: Roster = Roster(1 << 2);
    pub const TQ: Roster = Roster(0b110);
    pub const STQ: Roster = Roster(0b111);
    pub const FIVE: Roster = Roster(0b111_1100);
    pub const ALL: Roster = Roster(0b111_1111);

    pub fn new(vars: &[Var]) -> Roster {
        Roster(vars.iter().fold(0, |m, v| m | (1 << v.index())))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn is_subset(self, other: Roster) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Roster) -> Roster {
        Roster(self.0 | other.0)
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Roster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.vars().map(Var::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}
