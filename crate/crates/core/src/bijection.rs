//! The relabelling map `h`, the bijections `f` onto `G_{n,n-i}`, `f_D` onto
//! `H_{n,n-i}` and `f''` onto the sets with a positive decreasing tail,
//! together with exhaustive checks that they are bijections.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::Family;
use crate::error::Error;
use crate::perm::{complement, inv_b, inv_d, neg_count, GroupKind, GroupSpec, SignedPermutation};

/// A set of nonzero integers with distinct absolute values, stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSubset(Vec<i32>);

impl SignedSubset {
    pub fn new(mut values: Vec<i32>, n: usize) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for &x in &values {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || !seen.insert(a) {
                return Err(Error::InvalidSubset(format!("{values:?} in [{n}]")));
            }
        }
        values.sort_unstable();
        Ok(SignedSubset(values))
    }

    /// Entries in ascending order.
    pub fn ascending(&self) -> &[i32] {
        &self.0
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

    pub fn abs_values(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.0.iter().map(|x| x.abs()).collect();
        v.sort_unstable();
        v
    }
}

/// All `r`-subsets of `[n]` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<i32>> {
    fn rec(start: i32, n: i32, r: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n as i32, r, &mut Vec::new(), &mut out);
    out
}

/// All `2^r C(n, r)` signed `r`-subsets of `[n]`.
pub fn signed_subsets(n: usize, r: usize) -> Vec<SignedSubset> {
    let mut out = Vec::new();
    for set in subsets(n, r) {
        for mask in 0u32..(1 << r) {
            let vals = set
                .iter()
                .enumerate()
                .map(|(j, &x)| if mask >> j & 1 == 1 { -x } else { x })
                .collect();
            out.push(SignedSubset::new(vals, n).expect("valid by construction"));
        }
    }
    out
}

/// Relabels `sigma` onto the ascending `targets`: an entry of absolute value
/// `k` becomes `targets[k-1]` with the same sign.
pub fn map_h(sigma: &[i32], targets: &[i32]) -> Vec<i32> {
    assert_eq!(sigma.len(), targets.len(), "h needs one target per letter");
    sigma
        .iter()
        .map(|&x| x.signum() * targets[x.unsigned_abs() as usize - 1])
        .collect()
}

/// Replaces absolute values by their ranks, keeping signs.
pub fn standardize(w: &[i32]) -> Vec<i32> {
    let mut abs: Vec<i32> = w.iter().map(|x| x.abs()).collect();
    abs.sort_unstable();
    w.iter()
        .map(|&x| x.signum() * (abs.binary_search(&x.abs()).expect("present") as i32 + 1))
        .collect()
}

fn check_sizes(sigma: &SignedPermutation, a: &SignedSubset, n: usize) -> Result<(), Error> {
    if sigma.len() + a.len() != n || a.ascending().iter().any(|x| x.unsigned_abs() as usize > n) {
        return Err(Error::InvalidSubset(format!(
            "|sigma| + |A| must equal n = {n}"
        )));
    }
    Ok(())
}

/// `f(sigma, A) = h(sigma) [A]`, an element of `G_{n, n-|A|}`.
pub fn map_f(
    sigma: &SignedPermutation,
    a: &SignedSubset,
    n: usize,
) -> Result<SignedPermutation, Error> {
    check_sizes(sigma, a, n)?;
    let mut w = map_h(sigma.word(), &complement(n, a.ascending()));
    w.extend_from_slice(a.ascending());
    SignedPermutation::new(w)
}

/// Inverse of [`map_f`] for `pi` in `G_{n, n-i}`.
pub fn map_f_inverse(
    pi: &SignedPermutation,
    i: usize,
) -> Result<(SignedPermutation, SignedSubset), Error> {
    let n = pi.len();
    if i > n {
        return Err(Error::InvalidSubset(format!(
            "subset size {i} exceeds n = {n}"
        )));
    }
    let (head, tail) = pi.word().split_at(n - i);
    if !tail.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::InvalidPermutation(format!(
            "{pi} is not in G_{{{n},{}}}",
            n - i
        )));
    }
    let a = SignedSubset::new(tail.to_vec(), n)?;
    Ok((SignedPermutation::new(standardize(head))?, a))
}

/// `f_D(sigma, A)`: like `f`, but flips the sign of the first letter of
/// `h(sigma)` when `A` has an odd number of negatives, so the image lies in `D_n`.
pub fn map_fd(
    sigma: &SignedPermutation,
    a: &SignedSubset,
    n: usize,
) -> Result<SignedPermutation, Error> {
    check_sizes(sigma, a, n)?;
    if !sigma.is_even() {
        return Err(Error::InvalidPermutation(format!(
            "{sigma} is not in D_{}",
            sigma.len()
        )));
    }
    let mut w = map_h(sigma.word(), &complement(n, a.ascending()));
    if a.neg_count() % 2 == 1 {
        let first = w.first_mut().ok_or(Error::ParityUnfixable)?;
        *first = -*first;
    }
    w.extend_from_slice(a.ascending());
    SignedPermutation::new(w)
}

/// Inverse of [`map_fd`] for `pi` in `H_{n, n-i}` with `i < n`.
pub fn map_fd_inverse(
    pi: &SignedPermutation,
    i: usize,
) -> Result<(SignedPermutation, SignedSubset), Error> {
    let n = pi.len();
    if i >= n && n > 0 {
        return Err(Error::ParityUnfixable);
    }
    let (head, tail) = pi.word().split_at(n - i);
    if !tail.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::InvalidPermutation(format!(
            "{pi} is not in H_{{{n},{}}}",
            n - i
        )));
    }
    let a = SignedSubset::new(tail.to_vec(), n)?;
    let mut head = standardize(head);
    if a.neg_count() % 2 == 1 {
        head[0] = -head[0];
    }
    Ok((SignedPermutation::new(head)?, a))
}

/// `f''(psi, A) = psi relabelled onto [n] - A, then A written decreasing`.
///
/// For type D, `psi` must lie in `D_k`.
pub fn map_fpp(
    psi: &SignedPermutation,
    a: &[i32],
    n: usize,
    family: Family,
) -> Result<SignedPermutation, Error> {
    let mut set = a.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != a.len()
        || set.iter().any(|&x| x < 1 || x as usize > n)
        || psi.len() + a.len() != n
    {
        return Err(Error::InvalidSubset(format!(
            "{a:?} is not a plain subset of [{n}] of size {}",
            n - psi.len()
        )));
    }
    if family == Family::D && !psi.is_even() {
        return Err(Error::InvalidPermutation(format!(
            "{psi} is not in D_{}",
            psi.len()
        )));
    }
    let mut w = map_h(psi.word(), &complement(n, &set));
    w.extend(set.iter().rev());
    SignedPermutation::new(w)
}

/// Inverse of [`map_fpp`]: splits off the last `n - k` letters.
pub fn map_fpp_inverse(
    pi: &SignedPermutation,
    k: usize,
) -> Result<(SignedPermutation, Vec<i32>), Error> {
    let n = pi.len();
    if k > n {
        return Err(Error::InvalidSubset(format!("k = {k} exceeds n = {n}")));
    }
    let (head, tail) = pi.word().split_at(k);
    if !(tail.iter().all(|&x| x > 0) && tail.windows(2).all(|p| p[0] > p[1])) {
        return Err(Error::InvalidPermutation(format!(
            "{pi} has no positive decreasing tail of length {}",
            n - k
        )));
    }
    let mut a = tail.to_vec();
    a.sort_unstable();
    Ok((SignedPermutation::new(standardize(head))?, a))
}

/// Outcome of an exhaustive bijectivity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub map: &'static str,
    pub n: usize,
    pub i: usize,
    pub domain: usize,
    pub image: usize,
    pub codomain: usize,
    pub image_is_codomain: bool,
    pub round_trip: bool,
    pub inv_additive: bool,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.domain == self.image && self.image_is_codomain && self.round_trip && self.inv_additive
    }
}

fn codomain(kind: GroupKind, n: usize) -> BTreeSet<Vec<i32>> {
    let g = GroupSpec::new(kind, n).expect("valid group");
    let mut set = BTreeSet::new();
    g.for_each(|w| {
        set.insert(w.to_vec());
    });
    set
}

/// Checks that `f: B_{n-i} x signed i-subsets -> G_{n,n-i}` is a bijection,
/// inverts correctly and adds `inv_B(sigma)` to `inv_B(f(id, A))`.
pub fn verify_f(n: usize, i: usize) -> BijectionReport {
    let target = codomain(GroupKind::G((n - i) as i32), n);
    let mut image = BTreeSet::new();
    let (mut domain, mut round_trip, mut additive) = (0, true, true);
    let sigmas: Vec<_> = GroupSpec::new(GroupKind::B, n - i)
        .expect("valid")
        .iter()
        .collect();
    for a in signed_subsets(n, i) {
        let base = inv_b(
            map_f(&SignedPermutation::identity(n - i), &a, n)
                .expect("sizes")
                .word(),
        );
        for sigma in &sigmas {
            domain += 1;
            let pi = map_f(sigma, &a, n).expect("sizes");
            round_trip &= map_f_inverse(&pi, i).is_ok_and(|(s, b)| &s == sigma && b == a);
            additive &= inv_b(pi.word()) == base + inv_b(sigma.word());
            image.insert(pi.into_word());
        }
    }
    BijectionReport {
        map: "f",
        n,
        i,
        domain,
        image: image.len(),
        codomain: target.len(),
        image_is_codomain: image == target,
        round_trip,
        inv_additive: additive,
    }
}

/// Same as [`verify_f`] for `f_D` onto `H_{n,n-i}`, which needs `i < n`.
pub fn verify_fd(n: usize, i: usize) -> BijectionReport {
    assert!(i < n, "f_D is a bijection only for i < n");
    let target = codomain(GroupKind::H((n - i) as i32), n);
    let mut image = BTreeSet::new();
    let (mut domain, mut round_trip, mut additive) = (0, true, true);
    let sigmas: Vec<_> = GroupSpec::new(GroupKind::D, n - i)
        .expect("valid")
        .iter()
        .collect();
    for a in signed_subsets(n, i) {
        let base = inv_d(
            map_fd(&SignedPermutation::identity(n - i), &a, n)
                .expect("sizes")
                .word(),
        );
        for sigma in &sigmas {
            domain += 1;
            let pi = map_fd(sigma, &a, n).expect("sizes");
            round_trip &= map_fd_inverse(&pi, i).is_ok_and(|(s, b)| &s == sigma && b == a);
            additive &= inv_d(pi.word()) == base + inv_d(sigma.word());
            image.insert(pi.into_word());
        }
    }
    BijectionReport {
        map: "f_D",
        n,
        i,
        domain,
        image: image.len(),
        codomain: target.len(),
        image_is_codomain: image == target,
        round_trip,
        inv_additive: additive,
    }
}

type Length = fn(&[i32]) -> u32;

/// Checks `f'': W_k x C([n], n-k) -> Ahat_{n-k-1}` for `W = B` or `D`, and
/// that `inv(f''(psi, A)) - inv(psi)` depends on `A` alone.
pub fn verify_fpp(n: usize, k: usize, family: Family) -> BijectionReport {
    assert!(k < n, "the tail must be nonempty");
    let (src, dst, inv): (GroupKind, GroupKind, Length) = match family {
        Family::D => (
            GroupKind::D,
            GroupKind::HatD(n - k - 1),
            inv_d as fn(&[i32]) -> u32,
        ),
        _ => (GroupKind::B, GroupKind::HatB(n - k - 1), inv_b),
    };
    let target = codomain(dst, n);
    let mut image = BTreeSet::new();
    let (mut domain, mut round_trip, mut additive) = (0, true, true);
    let psis: Vec<_> = GroupSpec::new(src, k).expect("valid").iter().collect();
    for a in subsets(n, n - k) {
        let base = inv(map_fpp(&SignedPermutation::identity(k), &a, n, family)
            .expect("sizes")
            .word());
        for psi in &psis {
            domain += 1;
            let pi = map_fpp(psi, &a, n, family).expect("sizes");
            round_trip &= map_fpp_inverse(&pi, k).is_ok_and(|(p, b)| &p == psi && b == a);
            additive &= inv(pi.word()) == base + inv(psi.word());
            image.insert(pi.into_word());
        }
    }
    BijectionReport {
        map: if family == Family::D { "f''_D" } else { "f''" },
        n,
        i: k,
        domain,
        image: image.len(),
        codomain: target.len(),
        image_is_codomain: image == target,
        round_trip,
        inv_additive: additive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_of_f() {
        let sigma: SignedPermutation = "-2,1,3".parse().unwrap();
        let a = SignedSubset::new(vec![1, -4, 5, -6], 7).unwrap();
        let pi = map_f(&sigma, &a, 7).unwrap();
        assert_eq!(pi.to_string(), "-3,2,7,-6,-4,1,5");
        let id = map_f(&SignedPermutation::identity(3), &a, 7).unwrap();
        assert_eq!(id.to_string(), "2,3,7,-6,-4,1,5");
        assert_eq!(map_f_inverse(&pi, 4).unwrap(), (sigma, a));
    }

    #[test]
    fn fd_flips_the_first_letter_for_odd_subsets() {
        let sigma = SignedPermutation::identity(2);
        let a = SignedSubset::new(vec![-1], 3).unwrap();
        assert_eq!(map_fd(&sigma, &a, 3).unwrap().to_string(), "-2,3,-1");
        let all_neg = SignedSubset::new(vec![-1], 1).unwrap();
        assert_eq!(
            map_fd(&SignedPermutation::identity(0), &all_neg, 1),
            Err(Error::ParityUnfixable)
        );
    }

    #[test]
    fn fpp_appends_a_decreasing_tail() {
        let psi: SignedPermutation = "-1,2".parse().unwrap();
        let pi = map_fpp(&psi, &[2, 4], 4, Family::B).unwrap();
        assert_eq!(pi.to_string(), "-1,3,4,2");
        assert!(map_fpp(&psi, &[2, 4], 4, Family::D).is_err());
    }

    #[test]
    fn small_bijections() {
        for n in 1..=4 {
            for i in 0..=n {
                assert!(verify_f(n, i).holds(), "f n={n} i={i}");
                if i < n {
                    assert!(verify_fd(n, i).holds(), "f_D n={n} i={i}");
                    assert!(verify_fpp(n, i, Family::B).holds(), "f'' n={n} k={i}");
                    assert!(verify_fpp(n, i, Family::D).holds(), "f''_D n={n} k={i}");
                }
            }
        }
    }
}
