//! q-integers, q-factorials, q-binomials and Poincaré polynomials.

use super::upoly::UPoly;

/// Coxeter family of a Poincaré polynomial or a brute-force statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
}

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 0`.
pub fn qint(n: usize) -> UPoly {
    UPoly::from_i64s(&vec![1; n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact(n: usize) -> UPoly {
    (1..=n).fold(UPoly::one(), |acc, k| &acc * &qint(k))
}

/// Gaussian binomial via q-Pascal, zero outside `0 <= k <= n`.
pub fn qbinom(n: usize, k: usize) -> UPoly {
    if k > n {
        return UPoly::zero();
    }
    // row[j] = [m choose j]_q, updated in place with
    // [m+1 choose j] = [m choose j-1] + q^j [m choose j]
    let mut row = vec![UPoly::one()];
    for m in 0..n {
        let mut next = Vec::with_capacity(m + 2);
        for j in 0..=m + 1 {
            let left = if j > 0 {
                row[j - 1].clone()
            } else {
                UPoly::zero()
            };
            let right = if j <= m {
                &UPoly::monomial(j) * &row[j]
            } else {
                UPoly::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Length generating function of the Coxeter group of the given family and rank.
///
/// `A_n = [n]!`, `B_n = [2][4]...[2n]`, `D_n = [n] [2][4]...[2n-2]`, with
/// `D_0 = D_1 = 1`.
pub fn poincare(family: Family, n: usize) -> UPoly {
    match family {
        Family::A => qfact(n),
        Family::B => (1..=n).fold(UPoly::one(), |acc, i| &acc * &qint(2 * i)),
        Family::D => {
            if n <= 1 {
                return UPoly::one();
            }
            (1..n).fold(qint(n), |acc, i| &acc * &qint(2 * i))
        }
    }
}

/// `P_n / (P_m [n-m]!)` for `m <= n`, which is always a polynomial.
pub fn poincare_ratio(family: Family, n: usize, m: usize) -> UPoly {
    let den = &poincare(family, m) * &qfact(n - m);
    poincare(family, n)
        .div_exact(&den)
        .expect("Poincaré ratio is a polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn at_one(p: &UPoly) -> BigInt {
        p.eval(&BigInt::from(1))
    }

    #[test]
    fn small_values() {
        assert_eq!(qint(3), UPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(qbinom(4, 2), UPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(2, 3), UPoly::zero());
        assert_eq!(poincare(Family::B, 2), UPoly::from_i64s(&[1, 2, 2, 2, 1]));
    }

    #[test]
    fn group_orders_at_q_equal_one() {
        assert_eq!(at_one(&poincare(Family::A, 5)), BigInt::from(120));
        assert_eq!(at_one(&poincare(Family::B, 4)), BigInt::from(384));
        assert_eq!(at_one(&poincare(Family::D, 4)), BigInt::from(192));
        assert_eq!(at_one(&poincare(Family::D, 1)), BigInt::from(1));
    }

    #[test]
    fn ratio_of_type_b_is_binomial_times_cyclotomic_factors() {
        for n in 0..7 {
            for m in 0..=n {
                let mut want = qbinom(n, m);
                for j in m + 1..=n {
                    want = &want * &(&UPoly::one() + &UPoly::monomial(j));
                }
                assert_eq!(poincare_ratio(Family::B, n, m), want, "n={n} m={m}");
            }
        }
    }
}
