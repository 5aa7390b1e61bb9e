//! Brute-force polynomials against an oracle that knows nothing about the
//! inversion formulas: Coxeter length comes from a breadth-first search over
//! the Cayley graph, and a descent at position `i` means `l(w s_i) < l(w)`.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use qeuler_core::algebra::{poincare, Family, LaurentPoly, Roster, UPoly, Var, NVARS};
use qeuler_core::enumerate::{poly_family, poly_group, Bounds, Weight};
use qeuler_core::perm::{stats_b, stats_d, GroupKind, GroupSpec, SignedPermutation};

/// Right action of a simple generator; `None` stands for the type-specific
/// generator at position 0 (B) or -1 (D).
fn act(family: Family, w: &[i32], gen: Option<usize>) -> Vec<i32> {
    let mut v = w.to_vec();
    match (gen, family) {
        (Some(i), _) => v.swap(i - 1, i),
        (None, Family::B) => v[0] = -v[0],
        (None, Family::D) => {
            let (a, b) = (v[0], v[1]);
            v[0] = -b;
            v[1] = -a;
        }
        (None, Family::A) => unreachable!(),
    }
    v
}

/// Generators paired with the position (and hence parity) they stand for.
fn generators(family: Family, n: usize) -> Vec<(Option<usize>, i32)> {
    let mut g: Vec<_> = (1..n).map(|i| (Some(i), i as i32)).collect();
    match family {
        Family::B if n >= 1 => g.push((None, 0)),
        Family::D if n >= 2 => g.push((None, -1)),
        _ => {}
    }
    g
}

fn lengths(family: Family, n: usize) -> HashMap<Vec<i32>, u32> {
    let gens = generators(family, n);
    let id: Vec<i32> = (1..=n as i32).collect();
    let mut seen = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let l = seen[&w];
        for &(g, _) in &gens {
            let x = act(family, &w, g);
            if !seen.contains_key(&x) {
                seen.insert(x.clone(), l + 1);
                queue.push_back(x);
            }
        }
    }
    seen
}

/// `sum s^edes t^odes q^length` with every statistic read off the Cayley graph.
fn oracle(family: Family, n: usize) -> LaurentPoly {
    let len = lengths(family, n);
    let gens = generators(family, n);
    let mut terms = Vec::new();
    for (w, &l) in &len {
        let mut e = [0; NVARS];
        e[Var::Q.index()] = l as i32;
        for &(g, pos) in &gens {
            if len[&act(family, w, g)] < l {
                let v = if pos.rem_euclid(2) == 1 {
                    Var::T
                } else {
                    Var::S
                };
                e[v.index()] += 1;
            }
        }
        terms.push((e, BigInt::from(1)));
    }
    LaurentPoly::from_terms(Roster::STQ, terms).unwrap()
}

fn q_only(p: &UPoly) -> LaurentPoly {
    LaurentPoly::from_upoly(p, Roster::STQ)
}

fn brute(family: Family, n: usize) -> LaurentPoly {
    poly_family(family, n, Weight::Biv, &Bounds::default()).unwrap()
}

#[test]
fn type_a_matches_cayley_graph() {
    for n in 1..=6 {
        assert_eq!(brute(Family::A, n), oracle(Family::A, n), "n = {n}");
    }
}

#[test]
fn type_b_matches_cayley_graph() {
    for n in 1..=6 {
        assert_eq!(brute(Family::B, n), oracle(Family::B, n), "n = {n}");
    }
}

#[test]
fn type_d_matches_cayley_graph() {
    for n in 2..=6 {
        assert_eq!(brute(Family::D, n), oracle(Family::D, n), "n = {n}");
    }
}

#[test]
fn group_orders_and_poincare_products() {
    let bounds = Bounds::default();
    for n in 1..=7usize {
        let fact: u64 = (1..=n as u64).product();
        let b = poly_family(Family::B, n, Weight::Q, &bounds).unwrap();
        assert_eq!(b.coefficient_sum(), BigInt::from(fact << n));
        // prod [2i]_q
        let prod = (1..=n).fold(UPoly::one(), |acc, i| {
            &acc * &UPoly::new(vec![BigInt::from(1); 2 * i])
        });
        assert_eq!(b.with_roster(Roster::STQ).unwrap(), q_only(&prod));
        assert_eq!(poincare(Family::B, n), prod);
        if n >= 2 {
            let d = poly_family(Family::D, n, Weight::Q, &bounds).unwrap();
            assert_eq!(d.coefficient_sum(), BigInt::from(fact << (n - 1)));
            // [n]_q prod_{i<n} [2i]_q
            let prod = (1..n).fold(UPoly::new(vec![BigInt::from(1); n]), |acc, i| {
                &acc * &UPoly::new(vec![BigInt::from(1); 2 * i])
            });
            assert_eq!(d.with_roster(Roster::STQ).unwrap(), q_only(&prod));
        }
    }
}

#[test]
fn statistics_of_worked_examples() {
    let st = stats_b(&[2, 1]);
    assert_eq!(
        (st.edes, st.odes, st.easc, st.oasc, st.inv),
        (0, 1, 1, 0, 1)
    );
    let st = stats_b(&[-3, 2, 7, -6, -4, 1, 5]);
    assert_eq!(
        (st.edes, st.odes, st.easc, st.oasc, st.inv),
        (1, 1, 3, 2, 22)
    );
    let st = stats_d(&[-1, -2]);
    assert_eq!((st.odes, st.inv), (2, 2));
    let st = stats_d(&[2, 1]);
    assert_eq!((st.odes, st.inv), (1, 1));
    let st = stats_d(&[1, 2]);
    assert_eq!((st.edes, st.odes, st.inv), (0, 0, 0));
    let w: SignedPermutation = "\u{2212}3,2,7,\u{2212}6,\u{2212}4,1,5".parse().unwrap();
    assert_eq!(w.word(), &[-3, 2, 7, -6, -4, 1, 5]);
}

#[test]
fn small_polynomials() {
    let roster = Roster::STQ;
    let s = LaurentPoly::var(Var::S, roster);
    let t = LaurentPoly::var(Var::T, roster);
    let q = LaurentPoly::var(Var::Q, roster);
    let one = LaurentPoly::one(roster);
    assert_eq!(brute(Family::B, 0), one);
    assert_eq!(brute(Family::B, 1), &one + &(&s * &q));
    let d2 = &one + &(&t * &q);
    assert_eq!(brute(Family::D, 2), &d2 * &d2);
}

#[test]
fn group_sizes_of_small_subsets() {
    let count = |kind, n| {
        poly_group(
            &GroupSpec::new(kind, n).unwrap(),
            Weight::Q,
            &Bounds::default(),
        )
        .unwrap()
        .coefficient_sum()
    };
    assert_eq!(count(GroupKind::B, 2), BigInt::from(8));
    assert_eq!(count(GroupKind::D, 2), BigInt::from(4));
    assert_eq!(count(GroupKind::SnakeB, 2), BigInt::from(3));
}

/// `n! [u^n] 1 / (cos u - sin u)`, computed over the integers from
/// `sum_k C(n,k) f_k g_(n-k) = [n = 0]`.
fn springer_numbers(top: usize) -> Vec<BigInt> {
    let g = |k: usize| BigInt::from([1, -1, -1, 1][k % 4]);
    let mut binom = vec![vec![BigInt::from(1)]];
    for n in 1..=top {
        let prev = &binom[n - 1];
        let row: Vec<BigInt> = (0..=n)
            .map(|k| {
                if k == 0 || k == n {
                    BigInt::from(1)
                } else {
                    &prev[k - 1] + &prev[k]
                }
            })
            .collect();
        binom.push(row);
    }
    let mut f: Vec<BigInt> = vec![BigInt::from(1)];
    for row in &binom[1..] {
        let n = row.len() - 1;
        let s: BigInt = (0..n).map(|k| &row[k] * &f[k] * g(n - k)).sum();
        f.push(-s);
    }
    f
}

#[test]
fn snake_counts() {
    let expected = [1, 1, 3, 11, 57, 361, 2763];
    let springer = springer_numbers(6);
    for n in 0..=6 {
        let snakes = poly_group(
            &GroupSpec::new(GroupKind::SnakeB, n).unwrap(),
            Weight::Q,
            &Bounds::default(),
        )
        .unwrap()
        .coefficient_sum();
        assert_eq!(snakes, BigInt::from(expected[n]), "n = {n}");
        assert_eq!(springer[n], BigInt::from(expected[n]), "n = {n}");
    }
}
