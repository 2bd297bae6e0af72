//! Exact evaluation of the counting sequences: Stirling and Bell numbers,
//! ideal ranks of the diagram monoids, tournament and generating-set counts.
//!
//! Everything is computed with arbitrary precision integers.

use crate::error::{Error, Result};
use crate::semigroup::FamilyTag;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cell::RefCell;
use std::collections::HashMap;

thread_local! {
    static MEMO: RefCell<HashMap<(&'static str, Vec<u64>), BigUint>> = RefCell::new(HashMap::new());
}

fn memo(name: &'static str, args: &[u64], f: impl FnOnce() -> BigUint) -> BigUint {
    let key = (name, args.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let v = f();
    MEMO.with(|m| m.borrow_mut().insert(key, v.clone()));
    v
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `k!! = k (k-2) (k-4) ...`, with `0!! = 1`.
pub fn double_factorial(k: u64) -> BigUint {
    (1..=k).rev().step_by(2).fold(BigUint::one(), |acc, x| acc * x)
}

/// `(2i-1)!!`, taking `(-1)!! = 1`.
pub fn odd_double_factorial(i: u64) -> BigUint {
    if i == 0 {
        BigUint::one()
    } else {
        double_factorial(2 * i - 1)
    }
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Stirling numbers of the second kind; zero outside `r <= n`.
pub fn stirling2(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one();
    }
    if r == 0 {
        return BigUint::zero();
    }
    memo("stirling2", &[n, r], || BigUint::from(r) * stirling2(n - 1, r) + stirling2(n - 1, r - 1))
}

pub fn bell(n: u64) -> BigUint {
    memo("bell", &[n], || (0..=n).map(|r| stirling2(n, r)).sum())
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Fibonacci numbers with `F_0 = 0` and `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Number of fixed-point-free permutations of `m` letters.
pub fn derangements(m: u64) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if m == 0 {
        return prev;
    }
    for k in 2..=m {
        let next = BigUint::from(k - 1) * (&prev + &cur);
        prev = cur;
        cur = next;
    }
    cur
}

/// Named access to the basic sequences with argument checking.
pub fn base_sequence(name: &str, args: &[u64]) -> Result<BigUint> {
    let bad = || Error::InvalidArgument(format!("bad arguments {args:?} for {name}"));
    Ok(match (name, args) {
        ("stirling2", &[n, r]) if r <= n => stirling2(n, r),
        ("bell", &[n]) => bell(n),
        ("catalan", &[n]) => catalan(n),
        ("double_factorial", &[k]) => double_factorial(k),
        ("binomial", &[n, k]) if k <= n => binomial(n, k),
        ("fibonacci", &[n]) => fibonacci(n),
        ("derangements", &[m]) => derangements(m),
        ("factorial", &[n]) => factorial(n),
        ("stirling2" | "bell" | "catalan" | "double_factorial" | "binomial" | "fibonacci" | "derangements"
        | "factorial", _) => return Err(bad()),
        _ => return Err(Error::InvalidArgument(format!("unknown sequence `{name}`"))),
    })
}

/// R-class count of the rank-`r` J-class of the partition monoid `P_n`:
/// the sum over `j >= r` of `S(n, j) C(j, r)`. Valid for `0 <= r <= n`.
pub fn partition_rho(n: u64, r: u64) -> BigUint {
    (r..=n).map(|j| stirling2(n, j) * binomial(j, r)).sum()
}

/// The same count via `sum_j C(n, j) S(j, r) B_{n-j}`.
pub fn partition_rho_alt(n: u64, r: u64) -> BigUint {
    (0..=n).map(|j| binomial(n, j) * stirling2(j, r) * bell(n - j)).sum()
}

/// `c_i`: zero for odd `i`, the Catalan number `C_{i/2}` for even `i`.
pub fn jones_c(i: u64) -> BigUint {
    if i % 2 == 1 {
        BigUint::zero()
    } else {
        catalan(i / 2)
    }
}

/// Ballot numbers `rho_{n,r}`: the R-class count of rank `r` in `J_n`, zero
/// when `r > n` or `n - r` is odd.
pub fn jones_rho(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    if r == n {
        return BigUint::one();
    }
    if r == 0 {
        return jones_c(n);
    }
    memo("jones_rho", &[n, r], || jones_rho(n - 1, r - 1) + jones_rho(n - 1, r + 1))
}

/// `rho_{n,r}` by splitting off the block of matched points before the
/// first free point: `sum_{i=0}^{n-1} c_i rho_{n-1-i, r-1}` for `r >= 1`.
pub fn jones_rho_by_first_free(n: u64, r: u64) -> BigUint {
    if r == 0 {
        return jones_c(n);
    }
    if r > n {
        return BigUint::zero();
    }
    (0..n).map(|i| jones_c(i) * jones_rho_by_first_free(n - 1 - i, r - 1)).sum()
}

/// Rank (equal to the idempotent rank) of the ideal `I_r` of the given
/// family.
pub fn rank_ideal(tag: FamilyTag, n: usize, r: usize) -> Result<BigUint> {
    let invalid = || Error::InvalidRank { family: format!("{tag} {n}"), r };
    let (n64, r64) = (n as u64, r as u64);
    match tag {
        FamilyTag::FullTransformation | FamilyTag::SingularTransformation => {
            if r == 0 || r >= n {
                return Err(invalid());
            }
            Ok(if r == 1 { BigUint::from(n64) } else { stirling2(n64, r64) })
        }
        FamilyTag::Partition => {
            if r >= n {
                return Err(invalid());
            }
            let v = partition_rho(n64, r64);
            debug_assert_eq!(v, partition_rho_alt(n64, r64));
            Ok(v)
        }
        FamilyTag::PlanarPartition => {
            if r >= n {
                return Err(invalid());
            }
            Ok(jones_rho(2 * n64, 2 * r64))
        }
        FamilyTag::Brauer | FamilyTag::Jones => {
            if r + 2 > n || (n - r) % 2 == 1 {
                return Err(invalid());
            }
            let k = (n64 - r64) / 2;
            Ok(if tag == FamilyTag::Brauer {
                factorial(n64) / (BigUint::from(2u32).pow(k as u32) * factorial(k) * factorial(r64))
            } else {
                BigUint::from(r64 + 1) * binomial(n64 + 1, k) / (n64 + 1)
            })
        }
    }
}

/// Number of strongly connected labelled tournaments on `n` vertices.
pub fn strong_tournaments_w(n: u64) -> BigUint {
    fn big_f(k: u64) -> BigInt {
        BigInt::from(2u32).pow((k * k.saturating_sub(1) / 2) as u32)
    }
    if n == 0 {
        return BigUint::zero();
    }
    memo("w", &[n], || {
        let mut v = big_f(n);
        for s in 1..n {
            v -= BigInt::from(binomial(n, s) * strong_tournaments_w(s)) * big_f(n - s);
        }
        v.to_biguint().expect("w_n is nonnegative")
    })
}

/// `a_0 = 1`, `a_1 = a_2 = 0`, `a_{k+1} = k a_k + k(k-1) a_{k-2}`.
pub fn partition_a(k: u64) -> BigUint {
    let mut a = vec![BigUint::one(), BigUint::zero(), BigUint::zero()];
    for j in 2..k {
        let next = BigUint::from(j) * &a[j as usize] + BigUint::from(j * (j - 1)) * &a[j as usize - 2];
        a.push(next);
    }
    a[k as usize].clone()
}

/// `b_{n,k} = sum_i (-1)^i C(k, 2i) (2i-1)!! n^{k-2i}`.
pub fn partition_b(n: u64, k: u64) -> BigInt {
    (0..=k / 2)
        .map(|i| {
            let term = BigInt::from(binomial(k, 2 * i) * odd_double_factorial(i) * BigUint::from(n).pow((k - 2 * i) as u32));
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Number of minimal idempotent generating sets of the singular part of
/// `P_n`: `sum_k C(n, k) a_k b_{n, n-k}`.
pub fn partition_gsets(n: u64) -> BigUint {
    let total: BigInt = (0..=n)
        .map(|k| BigInt::from(binomial(n, k) * partition_a(k)) * partition_b(n, n - k))
        .sum();
    total.to_biguint().expect("count is nonnegative")
}

/// Number of idempotent subsets of the top singular J-class of `J_n` that
/// generate the singular part.
pub fn jones_idgen_subsets_f(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("f_n needs n >= 2, got {n}")));
    }
    let (mut prev, mut cur) = (BigUint::one(), BigUint::from(7u32));
    if n == 2 {
        return Ok(prev);
    }
    for _ in 4..=n {
        let next = BigUint::from(5u32) * &cur + BigUint::from(6u32) * &prev;
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur, jones_idgen_subsets_closed(n));
    Ok(cur)
}

/// Closed form `(2 * 6^n + 9 (-1)^{n+1}) / 63`.
pub fn jones_idgen_subsets_closed(n: u64) -> BigUint {
    let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let num = BigInt::from(2u32) * BigInt::from(6u32).pow(n as u32) + BigInt::from(9u32) * sign;
    let (q, rem) = num.div_rem(&BigInt::from(63u32));
    assert!(rem.is_zero() && !q.is_negative());
    q.to_biguint().unwrap()
}

/// Lower and upper bounds `(c_n, e_n)` for the number of minimal idempotent
/// generating sets of the singular part of `B_n`: `c_n` is the product of
/// `i!` for `i < n` and `e_n` the derangement count of `C(n, 2)` letters.
pub fn brauer_bounds(n: u64) -> (BigUint, BigUint) {
    let c = (1..n).map(factorial).product();
    let pairs = binomial(n, 2).to_u64().expect("small degree");
    (c, derangements(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Counts set partitions of `n` points into `r` blocks by generating
    /// them all.
    fn stirling_brute(n: usize, r: usize) -> u64 {
        let mut count = 0;
        let mut labels = vec![0usize; n];
        loop {
            let valid = (0..n).all(|i| labels[i] <= labels[..i].iter().copied().max().map_or(0, |m| m + 1));
            if valid && labels.iter().copied().max().map_or(0, |m| m + 1) == r {
                count += 1;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                labels[i] += 1;
                if labels[i] < n {
                    break;
                }
                labels[i] = 0;
            }
        }
    }

    #[test]
    fn base_values() {
        assert_eq!(stirling2(7, 3), u(301));
        assert_eq!(catalan(7), u(429));
        assert_eq!(catalan(4), u(14));
        assert_eq!(derangements(6), u(265));
        assert_eq!(bell(4), u(15));
        assert_eq!(double_factorial(5), u(15));
        assert_eq!(double_factorial(0), u(1));
        assert_eq!(binomial(10, 3), u(120));
        assert_eq!(binomial(3, 5), u(0));
        assert_eq!(fibonacci(10), u(55));
        assert_eq!(derangements(0), u(1));
        assert_eq!(derangements(1), u(0));
        assert!(base_sequence("stirling2", &[2, 3]).is_err());
        assert!(base_sequence("nope", &[1]).is_err());
        assert_eq!(base_sequence("bell", &[5]).unwrap(), u(52));
    }

    #[test]
    fn stirling_matches_brute_force() {
        for n in 0..=6 {
            for r in 0..=n {
                assert_eq!(stirling2(n as u64, r as u64), u(stirling_brute(n, r)), "S({n},{r})");
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_ideal(FamilyTag::Partition, 5, 2).unwrap(), u(160));
        assert_eq!(rank_ideal(FamilyTag::Brauer, 9, 3).unwrap(), u(1260));
        assert_eq!(rank_ideal(FamilyTag::Jones, 10, 4).unwrap(), u(75));
        assert_eq!(rank_ideal(FamilyTag::FullTransformation, 5, 1).unwrap(), u(5));
        assert_eq!(rank_ideal(FamilyTag::FullTransformation, 5, 3).unwrap(), u(25));
        assert!(rank_ideal(FamilyTag::Brauer, 5, 2).is_err());
        assert!(rank_ideal(FamilyTag::Jones, 4, 4).is_err());
        assert!(rank_ideal(FamilyTag::Partition, 4, 4).is_err());
        assert!(rank_ideal(FamilyTag::FullTransformation, 4, 0).is_err());
    }

    #[test]
    fn partition_forms_agree() {
        for n in 0..=12 {
            for r in 0..=n {
                assert_eq!(partition_rho(n, r), partition_rho_alt(n, r), "n={n} r={r}");
            }
            assert_eq!(partition_rho(n, 0) + partition_rho(n, 1), partition_rho(n + 1, 0));
        }
    }

    #[test]
    fn jones_rho_table() {
        assert_eq!(jones_rho(9, 3), u(48));
        assert_eq!(jones_rho(8, 0), u(14));
        for n in 0..=14 {
            assert_eq!(jones_rho(n, n), u(1));
            for r in 0..=n + 2 {
                assert_eq!(jones_rho(n, r), jones_rho_by_first_free(n, r), "n={n} r={r}");
                if r + 2 <= n && (n - r) % 2 == 0 {
                    assert_eq!(jones_rho(n, r), rank_ideal(FamilyTag::Jones, n as usize, r as usize).unwrap());
                }
            }
        }
    }

    #[test]
    fn first_free_recurrence_needs_shifted_index() {
        // Summing c_i rho_{n-i, r-1} over i = 1..n gives rho_{2,1} = 1 and
        // rho_{3,1} = 0, which contradicts the values 0 and 2.
        let literal = |n: u64, r: u64| -> BigUint { (1..=n).map(|i| jones_c(i) * jones_rho(n - i, r - 1)).sum() };
        assert_eq!(literal(2, 1), u(1));
        assert_eq!(jones_rho(2, 1), u(0));
        assert_eq!(literal(3, 1), u(0));
        assert_eq!(jones_rho(3, 1), u(2));
    }

    #[test]
    fn tournaments() {
        let w: Vec<BigUint> = (1..=5).map(strong_tournaments_w).collect();
        assert_eq!(w, vec![u(1), u(0), u(2), u(24), u(544)]);
    }

    #[test]
    fn partition_generating_sets() {
        assert_eq!(partition_a(7), u(1140));
        assert_eq!(partition_b(6, 4), BigInt::from(1083));
        assert_eq!(partition_gsets(6), u(40915));
        assert_eq!(partition_gsets(0), u(1));
    }

    #[test]
    fn jones_subsets() {
        assert_eq!(jones_idgen_subsets_f(5).unwrap(), u(247));
        assert_eq!(jones_idgen_subsets_f(3).unwrap(), u(7));
        assert_eq!(jones_idgen_subsets_f(10).unwrap(), u(1919561));
        assert!(jones_idgen_subsets_f(1).is_err());
        for n in 2..=30 {
            assert_eq!(jones_idgen_subsets_f(n).unwrap(), jones_idgen_subsets_closed(n));
        }
    }

    #[test]
    fn brauer_bound_values() {
        assert_eq!(brauer_bounds(6).0, u(34560));
        assert_eq!(brauer_bounds(5).1, u(1334961));
        assert_eq!(brauer_bounds(3).1, u(2));
    }
}
