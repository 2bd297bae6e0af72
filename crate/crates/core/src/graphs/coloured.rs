use crate::error::{Error, Result};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

/// A digraph whose edges are coloured blue or red. Loops are allowed and an
/// ordered pair may carry both colours.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwoColouredDiGraph {
    labels: Vec<String>,
    blue: BTreeSet<(usize, usize)>,
    red: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Colour {
    Red,
    Blue,
}

/// Outcome of the RBR-alternating circuit test: one optional witness circuit
/// per vertex, given as the list of visited vertices from the base back to
/// the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbrVerdict {
    pub circuits: Vec<Option<Vec<usize>>>,
}

impl RbrVerdict {
    pub fn generates(&self) -> bool {
        self.circuits.iter().all(Option::is_some)
    }

    /// Vertices that are not the base of any RBR-alternating circuit.
    pub fn failures(&self) -> Vec<usize> {
        (0..self.circuits.len()).filter(|&v| self.circuits[v].is_none()).collect()
    }
}

#[derive(Serialize)]
struct JsonExport<'a> {
    vertices: &'a [String],
    blue: Vec<[usize; 2]>,
    red: Vec<[usize; 2]>,
}

impl TwoColouredDiGraph {
    pub fn new(labels: Vec<String>) -> Self {
        TwoColouredDiGraph { labels, ..Default::default() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn check(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Err(Error::InvalidIndex(format!("edge ({u},{v}) out of range")));
        }
        Ok(())
    }

    pub fn add_blue(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u, v)?;
        self.blue.insert((u, v));
        Ok(())
    }

    pub fn add_red(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u, v)?;
        self.red.insert((u, v));
        Ok(())
    }

    pub fn blue_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.blue
    }

    pub fn red_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.red
    }

    pub fn clear_red(&mut self) {
        self.red.clear();
    }

    /// Adjacency matrix of the blue edges.
    pub fn blue_adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in &self.blue {
            m[u][v] = true;
        }
        m
    }

    fn out_lists(edges: &BTreeSet<(usize, usize)>, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in edges {
            out[u].push(v);
        }
        out
    }

    /// An RBR-alternating circuit based at `base`, found by breadth-first
    /// search over states (vertex, colour of the last arc).
    pub fn rbr_circuit(&self, base: usize) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let red_out = Self::out_lists(&self.red, n);
        let blue_out = Self::out_lists(&self.blue, n);
        let state = |v: usize, c: Colour| 2 * v + (c == Colour::Blue) as usize;
        let mut parent: Vec<Option<usize>> = vec![None; 2 * n];
        let mut seen = vec![false; 2 * n];
        let start = usize::MAX;
        let mut queue = VecDeque::new();
        for &w in &red_out[base] {
            let s = state(w, Colour::Red);
            if !seen[s] {
                seen[s] = true;
                parent[s] = Some(start);
                queue.push_back(s);
            }
        }
        let goal = state(base, Colour::Red);
        while let Some(s) = queue.pop_front() {
            if s == goal {
                let mut path = Vec::new();
                let mut cur = s;
                while cur != start {
                    path.push(cur / 2);
                    cur = parent[cur].unwrap();
                }
                path.push(base);
                path.reverse();
                return Some(path);
            }
            let (v, last) = (s / 2, if s % 2 == 0 { Colour::Red } else { Colour::Blue });
            let (next, colour) = match last {
                Colour::Red => (&blue_out[v], Colour::Blue),
                Colour::Blue => (&red_out[v], Colour::Red),
            };
            for &w in next {
                let t = state(w, colour);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some(s);
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn rbr_verdict(&self) -> RbrVerdict {
        RbrVerdict { circuits: (0..self.vertex_count()).map(|v| self.rbr_circuit(v)).collect() }
    }

    /// Whether every vertex is the base of an RBR-alternating circuit.
    pub fn rbr_generates(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.rbr_circuit(v).is_some())
    }

    /// For each vertex, whether it lies on a directed cycle of red edges.
    pub fn red_circuit_vertices(&self) -> Vec<bool> {
        let n = self.vertex_count();
        let mut g: DiGraph<(), ()> = DiGraph::new();
        let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
        for &(u, v) in &self.red {
            g.add_edge(nodes[u], nodes[v], ());
        }
        let mut on_cycle = vec![false; n];
        for comp in tarjan_scc(&g) {
            if comp.len() > 1 {
                for x in comp {
                    on_cycle[x.index()] = true;
                }
            }
        }
        for &(u, v) in &self.red {
            if u == v {
                on_cycle[u] = true;
            }
        }
        on_cycle
    }

    pub fn red_circuit_cover(&self) -> bool {
        self.red_circuit_vertices().into_iter().all(|b| b)
    }

    /// Every vertex has at least one red edge in and one red edge out.
    pub fn red_degree_condition(&self) -> bool {
        let n = self.vertex_count();
        let mut has_in = vec![false; n];
        let mut has_out = vec![false; n];
        for &(u, v) in &self.red {
            has_out[u] = true;
            has_in[v] = true;
        }
        has_in.iter().zip(&has_out).all(|(&a, &b)| a && b)
    }

    pub fn to_json(&self) -> String {
        let export = JsonExport {
            vertices: &self.labels,
            blue: self.blue.iter().map(|&(u, v)| [u, v]).collect(),
            red: self.red.iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&export).expect("serializable")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{l}\"];\n"));
        }
        for &(u, v) in &self.blue {
            out.push_str(&format!("  v{u} -> v{v} [color=blue];\n"));
        }
        for &(u, v) in &self.red {
            out.push_str(&format!("  v{u} -> v{v} [color=red];\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn graph(n: usize, blue: &[(usize, usize)], red: &[(usize, usize)]) -> TwoColouredDiGraph {
        let mut g = TwoColouredDiGraph::new((1..=n).map(|i| i.to_string()).collect());
        for &(u, v) in blue {
            g.add_blue(u, v).unwrap();
        }
        for &(u, v) in red {
            g.add_red(u, v).unwrap();
        }
        g
    }

    /// Exhaustive search for based RBR circuits of bounded length.
    fn rbr_brute(g: &TwoColouredDiGraph, base: usize) -> bool {
        let n = g.vertex_count();
        // positions reachable at the end of a red arc, after an odd number of arcs
        let mut frontier: BTreeSet<usize> = g.red_edges().iter().filter(|e| e.0 == base).map(|e| e.1).collect();
        for _ in 0..=2 * n {
            if frontier.contains(&base) {
                return true;
            }
            let after_blue: BTreeSet<usize> =
                g.blue_edges().iter().filter(|e| frontier.contains(&e.0)).map(|e| e.1).collect();
            let next: BTreeSet<usize> =
                g.red_edges().iter().filter(|e| after_blue.contains(&e.0)).map(|e| e.1).collect();
            frontier = next;
        }
        false
    }

    fn triangle() -> TwoColouredDiGraph {
        // Every blue edge with loops, red 3 -> 1 and 1 -> 2.
        let mut blue = Vec::new();
        for u in 0..3 {
            for v in 0..3 {
                blue.push((u, v));
            }
        }
        graph(3, &blue, &[(2, 0), (0, 1)])
    }

    #[test]
    fn based_circuits_differ_from_containment() {
        let g = triangle();
        let verdict = g.rbr_verdict();
        assert_eq!(verdict.failures(), vec![1, 2]);
        let c = verdict.circuits[0].clone().unwrap();
        assert_eq!((c[0], *c.last().unwrap()), (0, 0));
        assert!(!g.red_circuit_cover());
    }

    #[test]
    fn red_loops_everywhere() {
        let g = graph(3, &[(0, 1), (1, 0)], &[(0, 0), (1, 1), (2, 2)]);
        assert!(g.red_circuit_cover());
        assert!(g.rbr_generates());
        assert_eq!(g.rbr_circuit(2), Some(vec![2, 2]));
    }

    #[test]
    fn random_graphs_respect_condition_chain() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..2000 {
            let n = rng.gen_range(1..6);
            let mut g = graph(n, &[], &[]);
            for u in 0..n {
                g.add_blue(u, u).unwrap();
                for v in 0..n {
                    if u < v && rng.gen_bool(0.4) {
                        g.add_blue(u, v).unwrap();
                        g.add_blue(v, u).unwrap();
                    }
                    if rng.gen_bool(0.3) {
                        g.add_red(u, v).unwrap();
                    }
                }
            }
            let rbr = g.rbr_generates();
            if g.red_circuit_cover() {
                assert!(rbr);
            }
            if rbr {
                assert!(g.red_degree_condition());
            }
            for v in 0..n {
                assert_eq!(g.rbr_circuit(v).is_some(), rbr_brute(&g, v));
                if let Some(c) = g.rbr_circuit(v) {
                    for (k, w) in c.windows(2).enumerate() {
                        let edges = if k % 2 == 0 { g.red_edges() } else { g.blue_edges() };
                        assert!(edges.contains(&(w[0], w[1])));
                    }
                    assert_eq!(c.len() % 2, 0);
                }
            }
        }
    }

    #[test]
    fn exports() {
        let g = graph(2, &[(0, 0), (0, 1)], &[(1, 0)]);
        assert_eq!(g.to_json(), r#"{"vertices":["1","2"],"blue":[[0,0],[0,1]],"red":[[1,0]]}"#);
        let dot = g.to_dot();
        assert!(dot.contains("v0 -> v0 [color=blue]"));
        assert!(dot.contains("v1 -> v0 [color=red]"));
        assert!(graph(1, &[], &[]).add_red(0, 3).is_err());
    }
}
