//! Hook lengths and cell-module dimensions for the partition, Brauer and
//! Temperley-Lieb algebras. The values are combinatorial and are only
//! dimensions of irreducibles when the algebra is semisimple.

use crate::counting::{binomial, factorial, jones_rho, rank_ideal, stirling2};
use crate::error::{Error, Result};
use crate::semigroup::FamilyTag;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a partition")));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> IntegerPartition {
        let width = self.parts.first().copied().unwrap_or(0);
        IntegerPartition { parts: (0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<IntegerPartition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let current = self.parts.get(i).copied().unwrap_or(0);
            if i == 0 || self.parts[i - 1] > current {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(IntegerPartition { parts: p });
            }
        }
        out
    }

    /// Partitions obtained by removing one box.
    pub fn remove_box(&self) -> Vec<IntegerPartition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            if self.parts[i] > next {
                let mut p = self.parts.clone();
                p[i] -= 1;
                if p[i] == 0 {
                    p.pop();
                }
                out.push(IntegerPartition { parts: p });
            }
        }
        out
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)`, and `` / `()` / `∅` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(IntegerPartition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `r` in reverse lexicographic order, starting at `(r)`.
pub fn partitions_of(r: usize) -> Vec<IntegerPartition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// Hook length of every box, row by row.
pub fn hook_lengths(lambda: &IntegerPartition) -> Vec<Vec<usize>> {
    let conj = lambda.conjugate();
    lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1).collect())
        .collect()
}

/// Number of standard tableaux of shape `lambda`, by the hook length formula.
pub fn std_tableaux_count(lambda: &IntegerPartition) -> BigUint {
    let hooks: BigUint = hook_lengths(lambda).iter().flatten().map(|&h| BigUint::from(h)).product();
    factorial(lambda.size() as u64) / hooks
}

fn check_size(n: usize, mu: &IntegerPartition) -> Result<()> {
    if mu.size() > n {
        return Err(Error::InvalidArgument(format!("|{mu}| = {} exceeds n = {n}", mu.size())));
    }
    Ok(())
}

/// Cell-module dimension for the partition algebra, in the summation form
/// `sum_{j=|mu|}^n S(n,j) C(j,|mu|)` times the number of standard tableaux.
pub fn dim_partition_algebra(n: usize, mu: &IntegerPartition) -> Result<BigUint> {
    check_size(n, mu)?;
    let r = mu.size() as u64;
    let n = n as u64;
    let sum: BigUint = (r..=n).map(|j| stirling2(n, j) * binomial(j, r)).sum();
    Ok(sum * std_tableaux_count(mu))
}

fn half_defect(n: usize, r: usize) -> Result<usize> {
    if r > n || (n - r) % 2 != 0 {
        return Err(Error::InvalidRank { family: format!("brauer {n}"), r });
    }
    Ok((n - r) / 2)
}

/// Cell-module dimension for the Brauer algebra: `n! / (2^k k! prod h(b))`
/// where `|mu| = n - 2k`.
pub fn dim_brauer_algebra(n: usize, mu: &IntegerPartition) -> Result<BigUint> {
    let k = half_defect(n, mu.size())?;
    let hooks: BigUint = hook_lengths(mu).iter().flatten().map(|&h| BigUint::from(h)).product();
    Ok(factorial(n as u64) / (BigUint::from(2u8).pow(k as u32) * factorial(k as u64) * hooks))
}

/// Cell-module dimension for the Temperley-Lieb algebra, the number of
/// R-classes of rank `r` in the Jones monoid.
pub fn dim_tl_algebra(n: usize, r: usize) -> Result<BigUint> {
    half_defect(n, r).map_err(|_| Error::InvalidRank { family: format!("jones {n}"), r })?;
    Ok(jones_rho(n as u64, r as u64))
}

/// Paths from the empty partition at level 0 to `mu` at level `n` in the
/// Bratteli diagram with half-integer levels.
pub fn bratteli_paths(n: usize, mu: &IntegerPartition) -> Result<BigUint> {
    check_size(n, mu)?;
    let mut level: BTreeMap<IntegerPartition, BigUint> = BTreeMap::new();
    level.insert(IntegerPartition::empty(), BigUint::one());
    for _ in 0..n {
        level = step(&level, IntegerPartition::remove_box);
        level = step(&level, IntegerPartition::add_box);
    }
    Ok(level.get(mu).cloned().unwrap_or_else(BigUint::zero))
}

fn step(
    level: &BTreeMap<IntegerPartition, BigUint>,
    moves: fn(&IntegerPartition) -> Vec<IntegerPartition>,
) -> BTreeMap<IntegerPartition, BigUint> {
    let mut next: BTreeMap<IntegerPartition, BigUint> = BTreeMap::new();
    for (lambda, count) in level {
        *next.entry(lambda.clone()).or_default() += count;
        for nu in moves(lambda) {
            *next.entry(nu).or_default() += count;
        }
    }
    next
}

/// DOT rendering of the Bratteli diagram up to level `n`, half levels
/// included.
pub fn bratteli_dot(n: usize) -> String {
    let mut out = String::from("digraph Bratteli {\n");
    let node = |lvl: usize, p: &IntegerPartition| format!("\"{}:{}\"", lvl as f64 / 2.0, p);
    let mut levels: Vec<Vec<IntegerPartition>> = vec![vec![IntegerPartition::empty()]];
    for h in 1..=2 * n {
        let max = h / 2;
        levels.push((0..=max).rev().flat_map(partitions_of).collect());
    }
    for (h, parts) in levels.iter().enumerate() {
        for p in parts {
            out.push_str(&format!("  {} [label=\"{}\"];\n", node(h, p), p));
        }
    }
    for h in 0..2 * n {
        for p in &levels[h] {
            let moves = if h % 2 == 0 { p.remove_box() } else { p.add_box() };
            for q in std::iter::once(p.clone()).chain(moves) {
                if levels[h + 1].contains(&q) {
                    out.push_str(&format!("  {} -> {};\n", node(h, p), node(h + 1, &q)));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `(label, dimension)` rows for every cell module of the given algebra.
pub fn all_dims(algebra: &str, n: usize) -> Result<Vec<(String, BigUint)>> {
    let mut rows = Vec::new();
    match algebra {
        "partition" => {
            for r in (0..=n).rev() {
                for mu in partitions_of(r) {
                    rows.push((mu.to_string(), dim_partition_algebra(n, &mu)?));
                }
            }
        }
        "brauer" => {
            for r in (n % 2..=n).rev().step_by(2) {
                for mu in partitions_of(r) {
                    rows.push((mu.to_string(), dim_brauer_algebra(n, &mu)?));
                }
            }
        }
        "tl" | "jones" | "temperley-lieb" => {
            for r in (n % 2..=n).rev().step_by(2) {
                rows.push((r.to_string(), dim_tl_algebra(n, r)?));
            }
        }
        _ => return Err(Error::InvalidArgument(format!("unknown algebra `{algebra}`"))),
    }
    Ok(rows)
}

/// Brauer dimension as R-class count times tableaux, for `|mu| <= n - 2`.
pub fn dim_brauer_by_rank(n: usize, mu: &IntegerPartition) -> Result<BigUint> {
    Ok(rank_ideal(FamilyTag::Brauer, n, mu.size())? * std_tableaux_count(mu))
}
