use crate::error::{Error, Result};
use petgraph::graph::UnGraph;
use serde::Serialize;
use std::collections::BTreeSet;

/// A bipartite graph between a left vertex set (R-classes) and a right
/// vertex set (L-classes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub const EXHAUSTIVE_LIMIT: usize = 20;

    pub fn new(left: Vec<String>, right: Vec<String>) -> Self {
        BipartiteGraph { left, right, edges: BTreeSet::new() }
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.left.len() || j >= self.right.len() {
            return Err(Error::InvalidIndex(format!("edge ({i},{j}) out of range")));
        }
        self.edges.insert((i, j));
        Ok(())
    }

    fn neighbour_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.left.len()];
        for &(i, j) in &self.edges {
            masks[i] |= 1 << j;
        }
        masks
    }

    /// Whether every proper nonempty subset `A` of the left side has more
    /// than `|A|` neighbours.
    pub fn strong_hall(&self) -> Result<bool> {
        let (k, l) = (self.left.len(), self.right.len());
        if k != l {
            return Err(Error::Unbalanced(k, l));
        }
        if k <= Self::EXHAUSTIVE_LIMIT {
            Ok(self.strong_hall_exhaustive())
        } else {
            Ok(self.strong_hall_matching())
        }
    }

    pub(crate) fn strong_hall_exhaustive(&self) -> bool {
        let k = self.left.len();
        let masks = self.neighbour_masks();
        let full = (1u64 << k) - 1;
        // neighbourhoods built incrementally from the lowest set bit
        let mut nbhd = vec![0u64; 1 << k];
        for a in 1..full {
            let low = a.trailing_zeros() as usize;
            nbhd[a as usize] = nbhd[(a & (a - 1)) as usize] | masks[low];
            if nbhd[a as usize].count_ones() <= a.count_ones() {
                return false;
            }
        }
        true
    }

    /// Strong Hall holds exactly when deleting any left vertex and any right
    /// vertex leaves a graph with a perfect matching.
    pub(crate) fn strong_hall_matching(&self) -> bool {
        let k = self.left.len();
        if k <= 1 {
            return true;
        }
        for x in 0..k {
            for y in 0..k {
                let mut g: UnGraph<(), ()> = UnGraph::default();
                let nodes: Vec<_> = (0..2 * k).map(|_| g.add_node(())).collect();
                for &(i, j) in &self.edges {
                    if i != x && j != y {
                        g.add_edge(nodes[i], nodes[k + j], ());
                    }
                }
                if petgraph::algo::maximum_matching(&g).len() < k - 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            left: &'a [String],
            right: &'a [String],
            edges: Vec<[usize; 2]>,
        }
        let e = Export { left: &self.left, right: &self.right, edges: self.edges.iter().map(|&(i, j)| [i, j]).collect() };
        serde_json::to_string(&e).expect("serializable")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.left.iter().enumerate() {
            out.push_str(&format!("  l{i} [label=\"{l}\"];\n"));
        }
        for (j, l) in self.right.iter().enumerate() {
            out.push_str(&format!("  r{j} [label=\"{l}\"];\n"));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  l{i} -- r{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::graham_houghton;
    use crate::semigroup::{FamilyTag, MonoidFamily};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn graph(k: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        let names = |p: &str| (0..k).map(|i| format!("{p}{i}")).collect();
        let mut g = BipartiteGraph::new(names("a"), names("b"));
        for &(i, j) in edges {
            g.add_edge(i, j).unwrap();
        }
        g
    }

    #[test]
    fn small_examples() {
        let full: Vec<_> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
        assert!(graph(3, &full).strong_hall().unwrap());
        assert!(!graph(3, &[(0, 0), (1, 1), (2, 2)]).strong_hall().unwrap());
        let unbalanced = BipartiteGraph::new(vec!["a".into()], vec![]);
        assert!(matches!(unbalanced.strong_hall(), Err(Error::Unbalanced(1, 0))));
    }

    #[test]
    fn both_methods_agree() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..400 {
            let k = rng.gen_range(1..7);
            let mut g = graph(k, &[]);
            for i in 0..k {
                for j in 0..k {
                    if rng.gen_bool(0.45) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            assert_eq!(g.strong_hall_exhaustive(), g.strong_hall_matching(), "{g:?}");
        }
    }

    #[test]
    fn brauer_classes_satisfy_strong_hall() {
        for n in 4..=6 {
            let d = graham_houghton(MonoidFamily::new(FamilyTag::Brauer, n).unwrap(), n - 2).unwrap();
            assert!(d.strong_hall().unwrap(), "n={n}");
        }
    }

    #[test]
    fn exports() {
        let g = graph(2, &[(0, 1)]);
        assert_eq!(g.to_json(), r#"{"left":["a0","a1"],"right":["b0","b1"],"edges":[[0,1]]}"#);
        assert!(g.to_dot().contains("l0 -- r1"));
    }
}
