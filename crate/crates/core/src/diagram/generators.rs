use super::PartitionDiagram;
use crate::error::{Error, Result};
use std::fmt;

/// The named diagrams used throughout: projections and idempotents of the
/// top singular J-classes of the partition, Brauer and Jones monoids.
///
/// All indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Identity,
    /// `pi_i`: the point `i` is cut off from both rows.
    Pi(usize),
    /// `pi_ij`: the points `i, j, i', j'` form a single block.
    PiPair(usize, usize),
    /// `lambda_ij = pi_ij pi_j`.
    Lambda(usize, usize),
    /// `rho_ij = pi_i pi_ij`.
    Rho(usize, usize),
    /// `tau_ij`: caps `{i, j}` and `{i', j'}`.
    Tau(usize, usize),
    /// `tau_i = tau_{i,i+1}`.
    TauAdj(usize),
    /// `sigma_ijk = tau_ij tau_jk`.
    Sigma(usize, usize, usize),
    /// `lambda_i = sigma_{i,i+1,i+2}`.
    LambdaAdj(usize),
    /// `rho_i = sigma_{i+2,i+1,i}`.
    RhoAdj(usize),
}

fn check(n: usize, idx: &[usize]) -> Result<()> {
    for (a, &i) in idx.iter().enumerate() {
        if i == 0 || i > n {
            return Err(Error::InvalidIndex(format!("{i} not in 1..={n}")));
        }
        if idx[..a].contains(&i) {
            return Err(Error::InvalidIndex(format!("repeated index {i}")));
        }
    }
    Ok(())
}

/// Builds a diagram that is the identity except on the listed points, which
/// receive the given blocks.
fn patch(n: usize, blocks: &[&[i64]]) -> Result<PartitionDiagram> {
    let touched: Vec<usize> = blocks
        .iter()
        .flat_map(|b| b.iter().map(|p| p.unsigned_abs() as usize))
        .collect();
    let mut all: Vec<Vec<i64>> = blocks.iter().map(|b| b.to_vec()).collect();
    for x in 1..=n {
        if !touched.contains(&x) {
            all.push(vec![x as i64, -(x as i64)]);
        }
    }
    PartitionDiagram::from_blocks(n, &all)
}

/// Returns the diagram of degree `n` named by `g`.
pub fn generator(g: Generator, n: usize) -> Result<PartitionDiagram> {
    use Generator::*;
    let i64_ = |x: usize| x as i64;
    match g {
        Identity => Ok(PartitionDiagram::identity(n)),
        Pi(i) => {
            check(n, &[i])?;
            patch(n, &[&[i64_(i)], &[-i64_(i)]])
        }
        PiPair(i, j) => {
            check(n, &[i, j])?;
            patch(n, &[&[i64_(i), i64_(j), -i64_(i), -i64_(j)]])
        }
        Lambda(i, j) => {
            check(n, &[i, j])?;
            patch(n, &[&[i64_(i), i64_(j), -i64_(i)], &[-i64_(j)]])
        }
        Rho(i, j) => {
            check(n, &[i, j])?;
            patch(n, &[&[i64_(i)], &[i64_(j), -i64_(i), -i64_(j)]])
        }
        Tau(i, j) => {
            check(n, &[i, j])?;
            patch(n, &[&[i64_(i), i64_(j)], &[-i64_(i), -i64_(j)]])
        }
        Sigma(i, j, k) => {
            check(n, &[i, j, k])?;
            patch(n, &[&[i64_(i), i64_(j)], &[i64_(k), -i64_(i)], &[-i64_(j), -i64_(k)]])
        }
        TauAdj(i) => generator(Tau(i, i + 1), n),
        LambdaAdj(i) => generator(Sigma(i, i + 1, i + 2), n),
        RhoAdj(i) => generator(Sigma(i + 2, i + 1, i), n),
    }
}

impl Generator {
    /// Parses a generator name such as `pi3`, `pi12`, `lam31`, `tau1`,
    /// `sig214` or the long form `pi_3_12`.
    ///
    /// In the compact form each digit is one index when `n < 10`; for larger
    /// degrees the compact form denotes a single index and several indices
    /// must be separated by underscores.
    pub fn parse(name: &str, n: usize) -> Result<Self> {
        let unknown = || Error::UnknownGenerator(name.to_string());
        let name = name.trim();
        if matches!(name, "id" | "identity" | "1") {
            return Ok(Generator::Identity);
        }
        let split = name.find(|c: char| c.is_ascii_digit() || c == '_').ok_or_else(unknown)?;
        let (prefix, rest) = name.split_at(split);
        let indices: Vec<usize> = if let Some(long) = rest.strip_prefix('_') {
            long.split('_').map(|t| t.parse().map_err(|_| unknown())).collect::<Result<_>>()?
        } else if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
            if n < 10 {
                rest.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
            } else {
                vec![rest.parse().map_err(|_| unknown())?]
            }
        } else {
            return Err(unknown());
        };
        use Generator::*;
        let g = match (prefix, indices.as_slice()) {
            ("pi", &[i]) => Pi(i),
            ("pi", &[i, j]) => PiPair(i, j),
            ("lam" | "lambda", &[i]) => LambdaAdj(i),
            ("lam" | "lambda", &[i, j]) => Lambda(i, j),
            ("rho", &[i]) => RhoAdj(i),
            ("rho", &[i, j]) => Rho(i, j),
            ("tau", &[i]) => TauAdj(i),
            ("tau", &[i, j]) => Tau(i, j),
            ("sig" | "sigma", &[i, j, k]) => Sigma(i, j, k),
            _ => return Err(unknown()),
        };
        Ok(g)
    }

    /// Parses a comma separated list of generator names.
    pub fn parse_list(list: &str, n: usize) -> Result<Vec<Self>> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Generator::parse(s, n))
            .collect()
    }

    pub fn diagram(self, n: usize) -> Result<PartitionDiagram> {
        generator(self, n)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        let (prefix, idx): (&str, Vec<usize>) = match *self {
            Identity => return write!(f, "id"),
            Pi(i) => ("pi", vec![i]),
            PiPair(i, j) => ("pi", vec![i, j]),
            Lambda(i, j) => ("lam", vec![i, j]),
            Rho(i, j) => ("rho", vec![i, j]),
            Tau(i, j) => ("tau", vec![i, j]),
            TauAdj(i) => ("tau", vec![i]),
            Sigma(i, j, k) => ("sig", vec![i, j, k]),
            LambdaAdj(i) => ("lam", vec![i]),
            RhoAdj(i) => ("rho", vec![i]),
        };
        if idx.iter().all(|&i| i < 10) {
            let s: String = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "{prefix}{s}")
        } else {
            let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "{prefix}_{}", s.join("_"))
        }
    }
}
