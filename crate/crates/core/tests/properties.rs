use num_bigint::BigInt;
use proptest::prelude::*;
use qeuler_core::algebra::io::{poly_from_json, poly_to_json};
use qeuler_core::algebra::{Family, LaurentPoly, Roster, Var, NVARS};
use qeuler_core::bijection::{map_f, map_f_inverse, map_fd, map_fd_inverse, SignedSubset};
use qeuler_core::enumerate::{positions, tally_sequential, Weight};
use qeuler_core::perm::{inv_b, inv_d, stats, GroupKind, GroupSpec, SignedPermutation};
use qeuler_core::recurrence::sign_flip;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (prop::array::uniform3(-3i32..4), -5i64..6);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let terms = terms.into_iter().map(|([s, t, q], c)| {
            let mut e = [0; NVARS];
            e[Var::S.index()] = s;
            e[Var::T.index()] = t;
            e[Var::Q.index()] = q;
            (e, BigInt::from(c))
        });
        LaurentPoly::from_terms(Roster::STQ, terms).unwrap()
    })
}

fn signed_word(max: usize) -> impl Strategy<Value = Vec<i32>> {
    (0..=max).prop_flat_map(signed_word_of)
}

fn even(mut w: Vec<i32>) -> Vec<i32> {
    if w.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        w[0] = -w[0];
    }
    w
}

/// `(sigma, A, n)` with `|sigma| + |A| = n`.
fn split(max: usize) -> impl Strategy<Value = (Vec<i32>, Vec<i32>, usize)> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, r)| {
            let letters = Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle();
            (
                signed_word_of(n - r),
                letters,
                prop::collection::vec(any::<bool>(), r),
                Just(n),
            )
        })
        .prop_map(|(sigma, letters, signs, n)| {
            let a = letters
                .iter()
                .zip(&signs)
                .map(|(&x, &neg)| if neg { -x } else { x })
                .collect();
            (sigma, a, n)
        })
}

fn signed_word_of(n: usize) -> impl Strategy<Value = Vec<i32>> {
    (
        Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(w, signs)| {
            w.into_iter()
                .zip(signs)
                .map(|(x, neg)| if neg { -x } else { x })
                .collect()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(Roster::STQ), a.clone());
    }

    #[test]
    fn specialisation_is_a_ring_map(a in poly(), b in poly(), v in prop::sample::select(vec![-1i64, 1])) {
        // Only units can be substituted into Laurent monomials.
        let at = |p: &LaurentPoly| p.specialize(Var::T, v).unwrap();
        prop_assert_eq!(at(&(&a * &b)), &at(&a) * &at(&b));
        prop_assert_eq!(at(&(&a + &b)), &at(&a) + &at(&b));
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn positions_are_classified_once(w in signed_word(8)) {
        let n = w.len();
        let st = stats(Family::B, &w);
        prop_assert_eq!((st.edes + st.easc + st.odes + st.oasc) as usize, n);
        let (odd, even) = positions(Family::B, n);
        prop_assert_eq!((st.odes + st.oasc, st.edes + st.easc), (odd, even));
    }

    #[test]
    fn sign_flip_b_complements(w in signed_word(8)) {
        let n = w.len() as u32;
        let f = sign_flip(Family::B, &w);
        prop_assert_eq!(inv_b(&w) + inv_b(&f), n * n);
        let (a, b) = (stats(Family::B, &w), stats(Family::B, &f));
        let (odd, even) = positions(Family::B, w.len());
        prop_assert_eq!((a.odes + b.odes, a.edes + b.edes), (odd, even));
        prop_assert_eq!(sign_flip(Family::B, &f), w);
    }

    #[test]
    fn sign_flip_d_complements(w in signed_word(8).prop_filter("n >= 2", |w| w.len() >= 2).prop_map(even)) {
        let n = w.len() as u32;
        let f = sign_flip(Family::D, &w);
        prop_assert!(f.iter().filter(|&&x| x < 0).count() % 2 == 0);
        prop_assert_eq!(inv_d(&w) + inv_d(&f), n * (n - 1));
    }

    #[test]
    fn f_round_trips((sigma, a, n) in split(6)) {
        let sigma = SignedPermutation::new(sigma).unwrap();
        let a = SignedSubset::new(a, n).unwrap();
        let pi = map_f(&sigma, &a, n).unwrap();
        prop_assert_eq!(map_f_inverse(&pi, a.len()).unwrap(), (sigma, a));
    }

    #[test]
    fn fd_round_trips((sigma, a, n) in split(6).prop_filter("sigma nonempty", |(s, _, _)| !s.is_empty())) {
        let sigma = SignedPermutation::new(even(sigma)).unwrap();
        let a = SignedSubset::new(a, n).unwrap();
        let pi = map_fd(&sigma, &a, n).unwrap();
        prop_assert!(pi.is_even());
        prop_assert_eq!(map_fd_inverse(&pi, a.len()).unwrap(), (sigma, a));
    }
}

#[cfg(feature = "parallel")]
#[test]
fn parallel_tally_matches_sequential() {
    use qeuler_core::enumerate::tally_parallel;
    for kind in [
        GroupKind::A,
        GroupKind::B,
        GroupKind::D,
        GroupKind::SnakeD,
        GroupKind::H(3),
    ] {
        for n in 3..=6 {
            let spec = GroupSpec::new(kind, n).unwrap();
            assert_eq!(
                tally_parallel(&spec).to_poly(Weight::FiveVar),
                tally_sequential(&spec).to_poly(Weight::FiveVar),
                "{spec}"
            );
        }
    }
}
