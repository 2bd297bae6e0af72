use super::projection_graph;
use crate::error::{Error, Result};
use crate::semigroup::{FamilyTag, MonoidFamily};
use std::collections::BTreeSet;

/// A simple undirected graph with labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub labels: Vec<String>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{l}\"];\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn pair_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{i}{j}")
    } else {
        format!("{i}_{j}")
    }
}

/// The Johnson graph J(n,2): 2-subsets of `{1..n}`, adjacent when they share
/// exactly one point.
pub fn johnson_graph(n: usize) -> Result<UndirectedGraph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("J(n,2) needs n >= 2, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut edges = BTreeSet::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            let shared = [i == k, i == l, j == k, j == l].iter().filter(|&&x| x).count();
            if shared == 1 {
                edges.insert((a, b));
            }
        }
    }
    Ok(UndirectedGraph { labels: pairs.iter().map(|&(i, j)| pair_label(i, j, n)).collect(), edges })
}

/// Checks that matching labels identifies J(n,2) with the loop-free
/// undirected graph underlying the Brauer projection graph.
pub fn iso_check(n: usize) -> Result<bool> {
    let j = johnson_graph(n)?;
    if n < 3 {
        return Ok(j.edges.is_empty());
    }
    let pg = projection_graph(MonoidFamily::new(FamilyTag::Brauer, n)?, n - 2)?;
    let g = &pg.graph;
    let map: Option<Vec<usize>> = j.labels.iter().map(|l| g.vertex_index(l)).collect();
    let Some(map) = map else { return Ok(false) };
    let blue = g.blue_edges();
    for a in 0..j.labels.len() {
        for b in 0..j.labels.len() {
            if a == b {
                continue;
            }
            let in_j = j.edges.contains(&(a.min(b), a.max(b)));
            let (u, v) = (map[a], map[b]);
            if blue.contains(&(u, v)) != in_j || blue.contains(&(v, u)) != in_j {
                return Ok(false);
            }
        }
    }
    Ok(g.vertex_count() == j.labels.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_johnson_graphs() {
        let octahedron = johnson_graph(4).unwrap();
        assert_eq!((octahedron.labels.len(), octahedron.edges.len()), (6, 12));
        let j5 = johnson_graph(5).unwrap();
        assert_eq!(j5.labels.len(), 10);
        assert!((0..10).all(|v| j5.degree(v) == 6));
        assert!(johnson_graph(1).is_err());
    }

    #[test]
    fn brauer_graph_is_johnson() {
        for n in 2..=7 {
            assert!(iso_check(n).unwrap(), "n={n}");
        }
    }
}
