//! The eleven reference tables, regenerated from the counting formulas.

use crate::counting::{
    brauer_bounds, fibonacci, jones_idgen_subsets_f, jones_rho, partition_a, partition_b, partition_gsets,
    rank_ideal, stirling2, strong_tournaments_w,
};
use crate::error::{Error, Result};
use crate::graphs::{balanced_subgraph_count, projection_graph};
use crate::semigroup::{FamilyTag, MonoidFamily};
use serde_json::{json, Value};

/// Largest `n` for which Table 7 computes `d_n`; beyond it the cell is `?`.
pub const D_N_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}`"))),
        }
    }
}

/// A rendered table: a corner label, column headers, and labelled rows.
/// Empty cells are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub id: usize,
    pub title: String,
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<Option<String>>)>,
}

impl Table {
    /// Value in the row labelled `row` under the column labelled `col`.
    pub fn cell(&self, row: &str, col: &str) -> Option<&str> {
        let c = self.columns.iter().position(|x| x == col)?;
        let (_, cells) = self.rows.iter().find(|(l, _)| l == row)?;
        cells.get(c)?.as_deref()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Ascii => self.ascii(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn grid(&self) -> Vec<Vec<String>> {
        let mut grid = vec![std::iter::once(self.corner.clone()).chain(self.columns.iter().cloned()).collect()];
        for (label, cells) in &self.rows {
            grid.push(
                std::iter::once(label.clone()).chain(cells.iter().map(|c| c.clone().unwrap_or_default())).collect(),
            );
        }
        grid
    }

    fn ascii(&self) -> String {
        let grid = self.grid();
        let cols = grid[0].len();
        let widths: Vec<usize> =
            (0..cols).map(|c| grid.iter().map(|r| r.get(c).map_or(0, |s| s.chars().count())).max().unwrap_or(0)).collect();
        let line = |row: &[String]| -> String {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            format!("{} | {}", cells[0], cells[1..].join("  ")).trim_end().to_string()
        };
        let mut out = format!("Table {}: {}\n", self.id, self.title);
        out.push_str(&line(&grid[0]));
        out.push('\n');
        let total: usize = widths.iter().sum::<usize>() + 2 * (cols.saturating_sub(2)) + 3;
        out.push_str(&"-".repeat(total));
        out.push('\n');
        for row in &grid[1..] {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> String {
        self.grid().iter().map(|r| r.join(",") + "\n").collect()
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(label, cells)| json!({ "label": label, "cells": cells }))
            .collect();
        let v = json!({
            "table": self.id,
            "title": self.title,
            "corner": self.corner,
            "columns": self.columns,
            "rows": rows,
        });
        serde_json::to_string(&v).expect("serializable") + "\n"
    }
}

fn sequence(id: usize, title: &str, name: &str, range: std::ops::RangeInclusive<u64>, f: impl Fn(u64) -> String) -> Table {
    Table {
        id,
        title: title.into(),
        corner: "n".into(),
        columns: range.clone().map(|n| n.to_string()).collect(),
        rows: vec![(name.into(), range.map(|n| Some(f(n))).collect())],
    }
}

fn triangle(
    id: usize,
    title: &str,
    rows: std::ops::RangeInclusive<u64>,
    cols: std::ops::RangeInclusive<u64>,
    cell: impl Fn(u64, u64) -> Option<String>,
) -> Table {
    Table {
        id,
        title: title.into(),
        corner: "n\\r".into(),
        columns: cols.clone().map(|c| c.to_string()).collect(),
        rows: rows.map(|n| (n.to_string(), cols.clone().map(|c| cell(n, c)).collect())).collect(),
    }
}

/// Minimal idempotent generating sets of the singular part of `B_n`, as
/// the permanent of the projection graph's adjacency matrix.
pub fn brauer_d(n: usize) -> Result<num_bigint::BigUint> {
    let f = MonoidFamily::new(FamilyTag::Brauer, n)?;
    let pg = projection_graph(f, n - 2)?;
    balanced_subgraph_count(&pg.graph.blue_adjacency())
}

/// Builds table `id` (1 to 11). `max_n` caps the largest row or column
/// index; the default is the range printed in the reference tables.
pub fn table(id: usize, max_n: Option<usize>) -> Result<Table> {
    let cap = |default: u64| max_n.map_or(default, |m| m as u64);
    let t = match id {
        1 => sequence(1, "strongly connected tournaments w_n", "w_n", 1..=cap(10), |n| strong_tournaments_w(n).to_string()),
        2 => {
            let m = cap(10);
            triangle(2, "Stirling numbers S(n,r)", 1..=m, 1..=m, |n, r| (r <= n).then(|| stirling2(n, r).to_string()))
        }
        3 => {
            let m = cap(10);
            triangle(3, "rank of I_r(P_n)", 1..=m, 0..=m.saturating_sub(1), |n, r| {
                rank_ideal(FamilyTag::Partition, n as usize, r as usize).ok().map(|v| v.to_string())
            })
        }
        4 => sequence(4, "the sequence a_k", "a_k", 0..=cap(10), |k| partition_a(k).to_string()),
        5 => {
            let m = cap(10);
            let mut t = triangle(5, "the numbers b_nk", 0..=m, 0..=m, |n, k| (k <= n).then(|| partition_b(n, k).to_string()));
            t.corner = "n\\k".into();
            t
        }
        6 => sequence(6, "minimal idempotent generating sets of P_n minus S_n", "|G_n|", 0..=cap(10), |n| {
            partition_gsets(n).to_string()
        }),
        7 => {
            let m = cap(7).max(2);
            let range = 2..=m;
            let mut rows: Vec<(String, Vec<Option<String>>)> = vec![("c_n".into(), vec![]), ("d_n".into(), vec![]), ("e_n".into(), vec![])];
            for n in range.clone() {
                let (c, e) = brauer_bounds(n);
                let d = if n as usize <= D_N_LIMIT { brauer_d(n as usize)?.to_string() } else { "?".into() };
                rows[0].1.push(Some(c.to_string()));
                rows[1].1.push(Some(d));
                rows[2].1.push(Some(e.to_string()));
            }
            Table {
                id: 7,
                title: "the sequences c_n, d_n, e_n".into(),
                corner: "n".into(),
                columns: range.map(|n| n.to_string()).collect(),
                rows,
            }
        }
        8 => {
            let m = cap(10);
            triangle(8, "rank of I_r(B_n)", 2..=m, 0..=m.saturating_sub(2), |n, r| {
                rank_ideal(FamilyTag::Brauer, n as usize, r as usize).ok().map(|v| v.to_string())
            })
        }
        9 => {
            let m = cap(10);
            triangle(9, "the numbers rho_nr", 0..=m, 0..=m, |n, r| {
                (r <= n && (n - r) % 2 == 0).then(|| jones_rho(n, r).to_string())
            })
        }
        10 => sequence(10, "Fibonacci numbers F_n", "F_n", 1..=cap(10), |n| fibonacci(n).to_string()),
        11 => sequence(11, "idempotent generating subsets f_n of J_n", "f_n", 2..=cap(10).max(2), |n| {
            jones_idgen_subsets_f(n).expect("n >= 2").to_string()
        }),
        _ => return Err(Error::InvalidArgument(format!("unknown table {id}; expected 1 to 11"))),
    };
    Ok(t)
}
