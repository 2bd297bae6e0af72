use crate::diagram::Transformation;
use crate::error::{Error, Result};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use std::collections::BTreeSet;

/// Decides whether a set of rank `n-1` idempotents `(i -> j)` generates the
/// singular part of the full transformation monoid of degree `n`: the digraph
/// with an arc `j -> i` for each `(i -> j)` must be a strongly connected
/// tournament.
pub fn tournament_generates(n: usize, set: &[Transformation]) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("tournament test needs n >= 3, got {n}")));
    }
    let mut arcs = BTreeSet::new();
    for t in set {
        if t.n() != n {
            return Err(Error::DegreeMismatch(t.n(), n));
        }
        if t.rank() != n - 1 {
            return Err(Error::RankMismatch { expected: n - 1, found: t.rank() });
        }
        let (i, j) = t
            .elementary_pair()
            .ok_or_else(|| Error::NotClassIdempotent(t.to_string()))?;
        arcs.insert((j - 1, i - 1));
    }
    let pairs: BTreeSet<(usize, usize)> = arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if arcs.len() != n * (n - 1) / 2 || pairs.len() != arcs.len() {
        return Ok(false);
    }
    let mut g: DiGraph<(), ()> = DiGraph::new();
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for &(a, b) in &arcs {
        g.add_edge(nodes[a], nodes[b], ());
    }
    Ok(tarjan_scc(&g).len() == 1)
}
