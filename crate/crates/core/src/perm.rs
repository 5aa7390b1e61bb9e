//! Signed permutations, their parity-refined descent statistics and the
//! subsets of `B_n` enumerated elsewhere in the crate.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Family;
use crate::error::Error;

/// A word `w_1 ... w_n` whose absolute values are a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation(word))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i32).collect())
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    pub fn into_word(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn neg_count(&self) -> usize {
        neg_count(&self.0)
    }

    /// Membership in `D_n`: an even number of negative entries.
    pub fn is_even(&self) -> bool {
        self.neg_count().is_multiple_of(2)
    }

    pub fn stats(&self, family: Family) -> Stats {
        stats(family, &self.0)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses comma-separated entries such as `-3,2,7,-6,-4,1,5`; the Unicode
    /// minus sign is accepted too.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation(Vec::new()));
        }
        let word = s
            .split(',')
            .map(|p| {
                let p = p.trim().replace('\u{2212}', "-");
                p.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry `{p}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SignedPermutation::new(word)
    }
}

/// Parity-refined descent and ascent counts plus the length statistic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Stats {
    pub edes: u32,
    pub odes: u32,
    pub easc: u32,
    pub oasc: u32,
    pub inv: u32,
}

impl Stats {
    fn record(&mut self, odd: bool, descent: bool) {
        match (odd, descent) {
            (false, true) => self.edes += 1,
            (true, true) => self.odes += 1,
            (false, false) => self.easc += 1,
            (true, false) => self.oasc += 1,
        }
    }
}

pub fn neg_count(w: &[i32]) -> usize {
    w.iter().filter(|&&x| x < 0).count()
}

/// Classical inversions `#{i < j : w_i > w_j}`.
pub fn inv_a(w: &[i32]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            c += u32::from(w[i] > w[j]);
        }
    }
    c
}

/// `inv(w) + #{i < j : -w_i > w_j} + #negatives`.
pub fn inv_b(w: &[i32]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        c += u32::from(w[i] < 0);
        for j in i + 1..w.len() {
            c += u32::from(w[i] > w[j]) + u32::from(-w[i] > w[j]);
        }
    }
    c
}

/// `inv_B(w) - #negatives`.
pub fn inv_d(w: &[i32]) -> u32 {
    inv_b(w) - neg_count(w) as u32
}

/// Type A: positions `1..n-1`, classified by parity.
pub fn stats_a(w: &[i32]) -> Stats {
    let mut st = Stats {
        inv: inv_a(w),
        ..Stats::default()
    };
    for i in 1..w.len() {
        st.record(i % 2 == 1, w[i - 1] > w[i]);
    }
    st
}

/// Type B: positions `0..n-1` with `w_0 = 0`.
pub fn stats_b(w: &[i32]) -> Stats {
    let mut st = Stats {
        inv: inv_b(w),
        ..Stats::default()
    };
    let mut prev = 0;
    for (i, &x) in w.iter().enumerate() {
        st.record(i % 2 == 1, prev > x);
        prev = x;
    }
    st
}

/// Type D: positions `-1, 1, ..., n-1`, where `-1` is odd and is a descent
/// iff `-w_1 > w_2`.
pub fn stats_d(w: &[i32]) -> Stats {
    let mut st = Stats {
        inv: inv_d(w),
        ..Stats::default()
    };
    if w.len() >= 2 {
        st.record(true, -w[0] > w[1]);
    }
    for i in 1..w.len() {
        st.record(i % 2 == 1, w[i - 1] > w[i]);
    }
    st
}

pub fn stats(family: Family, w: &[i32]) -> Stats {
    match family {
        Family::A => stats_a(w),
        Family::B => stats_b(w),
        Family::D => stats_d(w),
    }
}

/// Number of odd and even positions carrying a D-statistic, as `(odd, even)`.
pub fn positions_d(n: usize) -> (u32, u32) {
    if n < 2 {
        return (0, 0);
    }
    let odd = (1..n).filter(|i| i % 2 == 1).count() as u32 + 1;
    let even = (1..n).filter(|i| i % 2 == 0).count() as u32;
    (odd, even)
}

/// `0 < w_1 > w_2 < w_3 > ...`
pub fn is_snake_b(w: &[i32]) -> bool {
    if w.first().is_some_and(|&x| x < 0) {
        return false;
    }
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

/// `-w_2 > w_1 > w_2 < w_3 > ...` with an even number of negatives; needs `n >= 2`.
pub fn is_snake_d(w: &[i32]) -> bool {
    if w.len() < 2 || neg_count(w) % 2 == 1 || -w[1] <= w[0] {
        return false;
    }
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

/// Which subset of a Coxeter group to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// Unsigned permutations.
    A,
    B,
    D,
    /// Last entry positive.
    BPlus,
    BMinus,
    DPlus,
    DMinus,
    /// `G_{n,i}`: elements of `B_n` whose last `n - i` entries increase
    /// (with `w_0 = 0` included when `i = -1`).
    G(i32),
    /// `H_{n,i}`: the `D_n` analogue of `G_{n,i}`.
    H(i32),
    /// Elements of `D_n` with no descent outside positions `{-1, 1}`.
    X,
    SnakeB,
    SnakeD,
    /// Elements of `B_n` whose last `k + 1` entries are positive and decreasing.
    HatB(usize),
    /// Elements of `D_n` whose last `k + 1` entries are positive and decreasing.
    HatD(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: usize,
}

fn increasing_tail(w: &[i32], from: usize) -> bool {
    w[from.min(w.len())..].windows(2).all(|p| p[0] < p[1])
}

fn positive_decreasing_tail(w: &[i32], len: usize) -> bool {
    let tail = &w[w.len() - len..];
    tail.iter().all(|&x| x > 0) && tail.windows(2).all(|p| p[0] > p[1])
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self, Error> {
        let ok = match kind {
            GroupKind::G(i) | GroupKind::H(i) => (-1..=n as i32).contains(&i),
            GroupKind::HatB(k) | GroupKind::HatD(k) => k < n,
            _ => true,
        };
        if !ok {
            return Err(Error::InvalidGroup(format!("{kind:?} at n={n}")));
        }
        Ok(GroupSpec { kind, n })
    }

    /// Statistic family used for weights: A for unsigned permutations, D for
    /// subsets of `D_n`, B otherwise.
    pub fn family(&self) -> Family {
        match self.kind {
            GroupKind::A => Family::A,
            GroupKind::D
            | GroupKind::DPlus
            | GroupKind::DMinus
            | GroupKind::H(_)
            | GroupKind::X
            | GroupKind::SnakeD
            | GroupKind::HatD(_) => Family::D,
            _ => Family::B,
        }
    }

    pub fn is_signed(&self) -> bool {
        self.kind != GroupKind::A
    }

    fn even_only(&self) -> bool {
        self.family() == Family::D
    }

    /// Membership test for a word from the ambient group (`S_n` or `B_n`).
    pub fn contains(&self, w: &[i32]) -> bool {
        if w.len() != self.n {
            return false;
        }
        if self.even_only() && neg_count(w) % 2 == 1 {
            return false;
        }
        let n = self.n;
        match self.kind {
            GroupKind::A => w.iter().all(|&x| x > 0),
            GroupKind::B | GroupKind::D => true,
            GroupKind::BPlus | GroupKind::DPlus => w.last().is_some_and(|&x| x > 0),
            GroupKind::BMinus | GroupKind::DMinus => w.last().is_some_and(|&x| x < 0),
            GroupKind::G(i) | GroupKind::H(i) => {
                if i < 0 {
                    w.iter().enumerate().all(|(k, &x)| x == k as i32 + 1)
                } else {
                    increasing_tail(w, i as usize)
                }
            }
            GroupKind::X => increasing_tail(w, 1),
            GroupKind::SnakeB => is_snake_b(w),
            GroupKind::SnakeD => is_snake_d(w),
            GroupKind::HatB(k) | GroupKind::HatD(k) => k < n && positive_decreasing_tail(w, k + 1),
        }
    }

    /// Size of the ambient group walked by the enumerator.
    pub fn ambient_size(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        if self.is_signed() {
            fact << self.n
        } else {
            fact
        }
    }

    /// Independent pieces of the ambient walk, keyed by the absolute values
    /// of the first one or two entries. Concatenating the shards in order
    /// reproduces the canonical order of [`GroupSpec::iter`].
    pub fn shards(&self) -> Vec<Vec<i32>> {
        let n = self.n as i32;
        match self.n {
            0 | 1 => vec![Vec::new()],
            _ => (1..=n)
                .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| vec![a, b]))
                .collect(),
        }
    }

    /// Visits every member whose absolute-value prefix is `prefix`, in
    /// canonical order.
    pub fn for_each_in_shard(&self, prefix: &[i32], mut f: impl FnMut(&[i32])) {
        let n = self.n;
        let k = prefix.len();
        let mut abs: Vec<i32> = prefix.to_vec();
        abs.extend((1..=n as i32).filter(|x| !prefix.contains(x)));
        let mut word = vec![0; n];
        let signed = self.is_signed();
        let even_only = self.even_only();
        loop {
            if signed {
                for mask in 0u32..(1 << n) {
                    if even_only && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    for j in 0..n {
                        let neg = mask >> (n - 1 - j) & 1 == 1;
                        word[j] = if neg { -abs[j] } else { abs[j] };
                    }
                    if self.contains(&word) {
                        f(&word);
                    }
                }
            } else if self.contains(&abs) {
                f(&abs);
            }
            if !next_permutation(&mut abs[k..]) {
                break;
            }
        }
    }

    /// Visits every member in canonical order: underlying permutation in
    /// lexicographic order, then sign vectors with `+` before `-` read left
    /// to right.
    pub fn for_each(&self, mut f: impl FnMut(&[i32])) {
        for prefix in self.shards() {
            self.for_each_in_shard(&prefix, &mut f);
        }
    }

    pub fn iter(&self) -> std::vec::IntoIter<SignedPermutation> {
        let mut out = Vec::new();
        self.for_each(|w| out.push(SignedPermutation(w.to_vec())));
        out.into_iter()
    }

    pub fn count(&self) -> u64 {
        let mut c = 0;
        self.for_each(|_| c += 1);
        c
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.kind {
            GroupKind::A => write!(f, "A_{n}"),
            GroupKind::B => write!(f, "B_{n}"),
            GroupKind::D => write!(f, "D_{n}"),
            GroupKind::BPlus => write!(f, "B_{n}^+"),
            GroupKind::BMinus => write!(f, "B_{n}^-"),
            GroupKind::DPlus => write!(f, "D_{n}^+"),
            GroupKind::DMinus => write!(f, "D_{n}^-"),
            GroupKind::G(i) => write!(f, "G_{{{n},{i}}}"),
            GroupKind::H(i) => write!(f, "H_{{{n},{i}}}"),
            GroupKind::X => write!(f, "X_{n}"),
            GroupKind::SnakeB => write!(f, "Snake^B_{n}"),
            GroupKind::SnakeD => write!(f, "Snake^D_{n}"),
            GroupKind::HatB(k) => write!(f, "Ahat^B_{{{n},{k}}}"),
            GroupKind::HatD(k) => write!(f, "Ahat^D_{{{n},{k}}}"),
        }
    }
}

/// Advances to the next permutation in lexicographic order; returns `false`
/// (leaving the slice sorted descending) when already at the last one.
pub fn next_permutation(a: &mut [i32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Absolute values `1..=n` not appearing in `w`, ascending.
pub fn complement(n: usize, w: &[i32]) -> Vec<i32> {
    (1..=n as i32)
        .filter(|x| !w.iter().any(|y| y.abs() == *x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: SignedPermutation = "-3,2,7,-6,-4,1,5".parse().unwrap();
        assert_eq!(p.to_string(), "-3,2,7,-6,-4,1,5");
        assert!("1,1".parse::<SignedPermutation>().is_err());
        assert!("1,3".parse::<SignedPermutation>().is_err());
        assert_eq!(
            "\u{2212}1".parse::<SignedPermutation>().unwrap().word(),
            &[-1]
        );
    }

    #[test]
    fn type_b_statistics_of_a_worked_example() {
        let w = [-3, 2, 7, -6, -4, 1, 5];
        let st = stats_b(&w);
        // descents at positions 0 (0 > -3) and 3 (7 > -6)
        assert_eq!((st.edes, st.odes), (1, 1));
        assert_eq!(st.edes + st.odes + st.easc + st.oasc, 7);
    }

    #[test]
    fn type_d_position_minus_one() {
        // -w1 > w2 at position -1 and w1 > w2 at position 1
        let st = stats_d(&[2, -3]);
        assert_eq!(st.odes, 2);
        assert_eq!(stats_d(&[3, -2]).odes, 1);
        assert_eq!(st.edes, 0);
        assert_eq!(positions_d(4), (3, 1));
        assert_eq!(positions_d(5), (3, 2));
    }

    #[test]
    fn inversions_of_the_longest_element() {
        let w: Vec<i32> = (1..=5).map(|x| -x).collect();
        assert_eq!(inv_b(&w), 25);
        assert_eq!(inv_d(&w), 20);
    }

    #[test]
    fn canonical_order_of_d2() {
        let g = GroupSpec::new(GroupKind::D, 2).unwrap();
        let words: Vec<Vec<i32>> = g.iter().map(SignedPermutation::into_word).collect();
        assert_eq!(
            words,
            vec![vec![1, 2], vec![-1, -2], vec![2, 1], vec![-2, -1]]
        );
    }

    #[test]
    fn group_sizes() {
        let size = |k, n| GroupSpec::new(k, n).unwrap().count();
        assert_eq!(size(GroupKind::B, 4), 384);
        assert_eq!(size(GroupKind::D, 4), 192);
        assert_eq!(size(GroupKind::A, 5), 120);
        assert_eq!(size(GroupKind::B, 0), 1);
        assert_eq!(size(GroupKind::G(-1), 3), 1);
        assert_eq!(size(GroupKind::G(0), 3), 8);
        assert_eq!(size(GroupKind::G(3), 3), 48);
        assert_eq!(size(GroupKind::BPlus, 3), 24);
        assert!(GroupSpec::new(GroupKind::G(5), 3).is_err());
    }

    #[test]
    fn snake_counts() {
        let counts: Vec<u64> = (0..=6)
            .map(|n| GroupSpec::new(GroupKind::SnakeB, n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 11, 57, 361, 2763]);
    }
}
