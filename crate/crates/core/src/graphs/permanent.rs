use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;

fn check_square(m: &[Vec<bool>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    Ok(n)
}

/// Exact permanent of a 0/1 matrix. Dense matrices of order at most 24 use
/// Ryser's formula; everything else uses memoized row expansion.
pub fn permanent(m: &[Vec<bool>]) -> Result<BigUint> {
    let n = check_square(m)?;
    let ones: usize = m.iter().map(|r| r.iter().filter(|&&b| b).count()).sum();
    if n > 0 && n <= 24 && 4 * ones >= n * n {
        permanent_ryser(m)
    } else {
        permanent_expansion(m)
    }
}

/// Ryser's inclusion-exclusion formula, visiting column subsets in Gray-code
/// order so each step updates the row sums by a single column.
pub fn permanent_ryser(m: &[Vec<bool>]) -> Result<BigUint> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    if n > 30 {
        return Err(Error::Guard { estimated: format!("2^{n} column subsets"), limit: "2^30".into() });
    }
    let mut row_sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut big: Option<BigInt> = None;
    let mut in_set = vec![false; n];
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let delta = if in_set[j] { -1 } else { 1 };
        in_set[j] = !in_set[j];
        size = (size as i64 + delta) as usize;
        for (i, row) in m.iter().enumerate() {
            if row[j] {
                row_sums[i] += delta;
            }
        }
        let sign: i128 = if (n - size) % 2 == 0 { 1 } else { -1 };
        let mut prod: Option<i128> = Some(sign);
        for &s in &row_sums {
            if s == 0 {
                prod = Some(0);
                break;
            }
            prod = prod.and_then(|p| p.checked_mul(s as i128));
        }
        match (prod.and_then(|p| total.checked_add(p)), &mut big) {
            (Some(t), None) => total = t,
            _ => {
                let acc = big.get_or_insert_with(|| BigInt::from(total));
                let mut p = BigInt::from(sign);
                for &s in &row_sums {
                    p *= s;
                }
                *acc += p;
            }
        }
    }
    let result = big.unwrap_or_else(|| BigInt::from(total));
    Ok(result.to_biguint().expect("permanent of a 0/1 matrix is nonnegative"))
}

/// Row-by-row expansion memoized on the set of used columns.
pub fn permanent_expansion(m: &[Vec<bool>]) -> Result<BigUint> {
    let n = check_square(m)?;
    if n > 128 {
        return Err(Error::Guard { estimated: format!("{n} rows"), limit: "128 rows".into() });
    }
    let cols: Vec<Vec<usize>> = m.iter().map(|r| (0..n).filter(|&j| r[j]).collect()).collect();
    fn go(row: usize, used: u128, cols: &[Vec<usize>], memo: &mut HashMap<u128, BigUint>) -> BigUint {
        if row == cols.len() {
            return BigUint::from(1u8);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for &j in &cols[row] {
            if used & (1 << j) == 0 {
                total += go(row + 1, used | (1 << j), cols, memo);
            }
        }
        memo.insert(used, total.clone());
        total
    }
    Ok(go(0, 0, &cols, &mut HashMap::new()))
}

/// Number of spanning subgraphs in which every vertex has in- and out-degree
/// one, which is the permanent of the adjacency matrix.
pub fn balanced_subgraph_count(adjacency: &[Vec<bool>]) -> Result<BigUint> {
    permanent(adjacency)
}

/// Every balanced spanning subgraph, each given by its edge list `(v, succ(v))`
/// in vertex order. Refuses when there are more than `limit` of them.
pub fn balanced_subgraphs(adjacency: &[Vec<bool>], limit: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    let count = balanced_subgraph_count(adjacency)?;
    if count.to_usize().map_or(true, |c| c > limit) {
        return Err(Error::Guard { estimated: count.to_string(), limit: limit.to_string() });
    }
    let n = adjacency.len();
    let mut out = Vec::new();
    let mut succ = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        a: &[Vec<bool>],
        succ: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let v = succ.len();
        if v == a.len() {
            out.push(succ.iter().copied().enumerate().collect());
            return;
        }
        for w in 0..a.len() {
            if a[v][w] && !used[w] {
                used[w] = true;
                succ.push(w);
                go(a, succ, used, out);
                succ.pop();
                used[w] = false;
            }
        }
    }
    go(adjacency, &mut succ, &mut used, &mut out);
    Ok(out)
}
