//! Brute-force generating polynomials over subsets of `S_n`, `B_n` and `D_n`.
//!
//! Every element of a group is visited once and its statistics are tallied
//! in a dense `(edes, odes, inv)` table; ascent counts follow from the number
//! of positions. Tallies are memoised per group, so a polynomial under any
//! weight costs one walk.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::algebra::{Exponents, Family, LaurentPoly, Roster, Var, NVARS};
use crate::bijection::{signed_subsets, SignedSubset};
use crate::error::Error;
use crate::perm::{complement, inv_b, inv_d, positions_d, stats, GroupKind, GroupSpec, Stats};

/// Environment variable overriding [`Bounds::signed`].
pub const MAX_N_ENV: &str = "QEULER_MAX_N";

/// Largest `n` brute force will attempt.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub signed: usize,
    pub unsigned: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            signed: 8,
            unsigned: 9,
        }
    }
}

impl Bounds {
    /// Defaults, with `QEULER_MAX_N=k` raising or lowering the signed bound to
    /// `k` and the unsigned bound to `k + 1`.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(k) => Bounds {
                signed: k,
                unsigned: k + 1,
            },
            None => Bounds::default(),
        }
    }

    pub fn check(&self, spec: &GroupSpec) -> Result<(), Error> {
        let max = if spec.is_signed() {
            self.signed
        } else {
            self.unsigned
        };
        if spec.n > max {
            return Err(Error::BoundExceeded {
                group: spec.to_string(),
                n: spec.n,
                max,
                estimate: spec.ambient_size(),
            });
        }
        Ok(())
    }
}

/// How each element contributes a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    /// `s^edes t^odes q^inv`
    Biv,
    /// `s^easc t^odes q^inv`
    Hat,
    /// `s0^easc s1^oasc t0^edes t1^odes q^inv`
    FiveVar,
    /// `q^inv`
    Q,
}

impl Weight {
    pub fn roster(self) -> Roster {
        match self {
            Weight::Biv | Weight::Hat => Roster::STQ,
            Weight::FiveVar => Roster::FIVE,
            Weight::Q => Roster::Q,
        }
    }

    pub fn exponents(self, st: &Stats) -> Exponents {
        let mut e = [0; NVARS];
        let mut set = |v: Var, d: u32| e[v.index()] = d as i32;
        match self {
            Weight::Biv => {
                set(Var::S, st.edes);
                set(Var::T, st.odes);
            }
            Weight::Hat => {
                set(Var::S, st.easc);
                set(Var::T, st.odes);
            }
            Weight::FiveVar => {
                set(Var::S0, st.easc);
                set(Var::S1, st.oasc);
                set(Var::T0, st.edes);
                set(Var::T1, st.odes);
            }
            Weight::Q => {}
        }
        set(Var::Q, st.inv);
        e
    }
}

/// `(odd, even)` position counts for the statistics of `family` on `n` letters.
pub fn positions(family: Family, n: usize) -> (u32, u32) {
    let n32 = n as u32;
    match family {
        Family::A => (n32 / 2, n32.saturating_sub(1) / 2),
        Family::B => (n32 / 2, n32.div_ceil(2)),
        Family::D => positions_d(n),
    }
}

/// Number of elements with each `(edes, odes, inv)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    family: Family,
    n: usize,
    odd: u32,
    even: u32,
    inv_dim: usize,
    counts: Vec<u64>,
}

impl Tally {
    pub fn new(family: Family, n: usize) -> Self {
        let (odd, even) = positions(family, n);
        let inv_dim = n * n + 1;
        let len = (even as usize + 1) * (odd as usize + 1) * inv_dim;
        Tally {
            family,
            n,
            odd,
            even,
            inv_dim,
            counts: vec![0; len],
        }
    }

    fn index(&self, edes: u32, odes: u32, inv: u32) -> usize {
        (edes as usize * (self.odd as usize + 1) + odes as usize) * self.inv_dim + inv as usize
    }

    pub fn record(&mut self, w: &[i32]) {
        let st = stats(self.family, w);
        let k = self.index(st.edes, st.odes, st.inv);
        self.counts[k] += 1;
    }

    pub fn merge(mut self, other: &Tally) -> Tally {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero cells as full statistic vectors.
    pub fn entries(&self) -> impl Iterator<Item = (Stats, u64)> + '_ {
        let per_edes = (self.odd as usize + 1) * self.inv_dim;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| **c > 0)
            .map(move |(k, c)| {
                let edes = (k / per_edes) as u32;
                let odes = ((k % per_edes) / self.inv_dim) as u32;
                let inv = (k % self.inv_dim) as u32;
                let st = Stats {
                    edes,
                    odes,
                    easc: self.even - edes,
                    oasc: self.odd - odes,
                    inv,
                };
                (st, *c)
            })
    }

    pub fn to_poly(&self, weight: Weight) -> LaurentPoly {
        let terms = self
            .entries()
            .map(|(st, c)| (weight.exponents(&st), BigInt::from(c)));
        LaurentPoly::from_terms(weight.roster(), terms).expect("weights stay in their roster")
    }
}

/// Single-threaded walk over the whole group.
pub fn tally_sequential(spec: &GroupSpec) -> Tally {
    let mut t = Tally::new(spec.family(), spec.n);
    spec.for_each(|w| t.record(w));
    t
}

/// Walks the shards of the group on the rayon pool.
#[cfg(feature = "parallel")]
pub fn tally_parallel(spec: &GroupSpec) -> Tally {
    use rayon::prelude::*;

    let fresh = || Tally::new(spec.family(), spec.n);
    spec.shards()
        .par_iter()
        .fold(fresh, |mut t, prefix| {
            spec.for_each_in_shard(prefix, |w| t.record(w));
            t
        })
        .reduce(fresh, |a, b| a.merge(&b))
}

/// Uncached tally, parallel when the `parallel` feature is on.
pub fn tally_uncached(spec: &GroupSpec) -> Tally {
    #[cfg(feature = "parallel")]
    {
        tally_parallel(spec)
    }
    #[cfg(not(feature = "parallel"))]
    {
        tally_sequential(spec)
    }
}

type Slot = Arc<OnceLock<Arc<Tally>>>;

fn cache() -> &'static Mutex<HashMap<GroupSpec, Slot>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupSpec, Slot>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoised tally; no bound is applied here.
pub fn tally(spec: &GroupSpec) -> Arc<Tally> {
    let slot = cache()
        .lock()
        .expect("tally cache")
        .entry(*spec)
        .or_default()
        .clone();
    slot.get_or_init(|| Arc::new(tally_uncached(spec))).clone()
}

/// Brute-force generating polynomial of a group under a weight.
pub fn poly_group(spec: &GroupSpec, weight: Weight, bounds: &Bounds) -> Result<LaurentPoly, Error> {
    bounds.check(spec)?;
    Ok(tally(spec).to_poly(weight))
}

/// Convenience for whole groups `A_n`, `B_n`, `D_n`.
pub fn poly_family(
    family: Family,
    n: usize,
    weight: Weight,
    bounds: &Bounds,
) -> Result<LaurentPoly, Error> {
    let kind = match family {
        Family::A => GroupKind::A,
        Family::B => GroupKind::B,
        Family::D => GroupKind::D,
    };
    poly_group(&GroupSpec::new(kind, n)?, weight, bounds)
}

fn q_sum(words: impl Iterator<Item = Vec<i32>>, inv: fn(&[i32]) -> u32) -> LaurentPoly {
    let terms = words.map(|w| {
        let mut e = [0; NVARS];
        e[Var::Q.index()] = inv(&w) as i32;
        (e, BigInt::from(1))
    });
    LaurentPoly::from_terms(Roster::Q, terms).expect("q only")
}

/// The identity on `[n] - A` followed by `A` ascending.
fn identity_then(n: usize, a: &SignedSubset, flip_first: bool) -> Vec<i32> {
    let mut w = complement(n, a.ascending());
    if flip_first {
        if let Some(x) = w.first_mut() {
            *x = -*x;
        }
    }
    w.extend_from_slice(a.ascending());
    w
}

/// `sum over signed r-subsets A of q^inv_B(f([[n]-A], A))`.
pub fn poly_lemma21_sum(n: usize, r: usize) -> LaurentPoly {
    q_sum(
        signed_subsets(n, r)
            .iter()
            .map(|a| identity_then(n, a, false)),
        inv_b,
    )
}

/// `sum over signed r-subsets A of q^inv_D(f_D([[n]-A], A))`.
///
/// When `r = n` the prefix is empty and no sign can be flipped; `inv_D` does
/// not see the sign of the first letter, so the sum is unaffected.
pub fn poly_lemma31_sum(n: usize, r: usize) -> LaurentPoly {
    q_sum(
        signed_subsets(n, r)
            .iter()
            .map(|a| identity_then(n, a, a.neg_count() % 2 == 1)),
        inv_d,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize) -> LaurentPoly {
        poly_family(Family::B, n, Weight::Biv, &Bounds::default()).unwrap()
    }

    #[test]
    fn b2_by_hand() {
        // 1 + (s + t)(q + q^2 + q^3) + s t q^4
        let r = Roster::STQ;
        let v = |x| LaurentPoly::var(x, r);
        let one = LaurentPoly::one(r);
        let q = v(Var::Q);
        let want = &one
            + &((v(Var::S) + v(Var::T)) * (&q + &(&q * &q) + q.pow(3)))
            + v(Var::S) * v(Var::T) * q.pow(4);
        assert_eq!(b(2), want);
    }

    #[test]
    fn empty_group() {
        assert!(b(0).is_one());
    }

    #[test]
    fn bound_is_enforced() {
        let tight = Bounds {
            signed: 3,
            unsigned: 3,
        };
        let err = poly_family(Family::B, 4, Weight::Biv, &tight).unwrap_err();
        assert!(matches!(
            err,
            Error::BoundExceeded {
                n: 4,
                max: 3,
                estimate: 384,
                ..
            }
        ));
    }

    #[test]
    fn sequential_matches_cached() {
        let spec = GroupSpec::new(GroupKind::D, 5).unwrap();
        assert_eq!(tally_sequential(&spec), *tally(&spec));
    }
}
