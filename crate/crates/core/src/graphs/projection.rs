use super::{BipartiteGraph, TwoColouredDiGraph};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::semigroup::{Element, FamilyTag, GreenKey, MonoidFamily};
use itertools::Itertools;
use std::collections::BTreeMap;

/// All projections of rank `r` in a diagram family, built directly from
/// their kernels rather than by filtering the whole monoid.
pub fn projections(family: MonoidFamily, r: usize) -> Result<Vec<PartitionDiagram>> {
    family.check_rank(r)?;
    let n = family.n;
    let mut out = Vec::new();
    match family.tag {
        FamilyTag::Partition | FamilyTag::PlanarPartition => {
            for classes in set_partitions_with_at_least(n, r) {
                let c = classes.iter().max().map_or(0, |m| m + 1);
                for transversal in (0..c).combinations(r) {
                    let mut raw = classes.clone();
                    raw.extend(classes.iter().map(|&k| if transversal.contains(&k) { k } else { k + c }));
                    out.push(PartitionDiagram::from_raw_labels(n, &raw));
                }
            }
        }
        FamilyTag::Brauer | FamilyTag::Jones => {
            let k = (n - r) / 2;
            for pairs in partial_matchings(n, k) {
                let mut raw: Vec<usize> = (0..2 * n).map(|i| i % n).collect();
                for &(a, b) in &pairs {
                    raw[b] = a;
                    raw[n + a] = n + a;
                    raw[n + b] = n + a;
                }
                out.push(PartitionDiagram::from_raw_labels(n, &raw));
            }
        }
        _ => return Err(Error::Unsupported(format!("{} has no projections", family.tag))),
    }
    out.retain(|p| family.contains(p));
    out.sort();
    Ok(out)
}

fn set_partitions_with_at_least(n: usize, min_classes: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: usize, n: usize, min: usize, out: &mut Vec<Vec<usize>>) {
        if used + (n - prefix.len()) < min {
            return;
        }
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=used {
            prefix.push(c);
            go(prefix, used.max(c + 1), n, min, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, min_classes, &mut out);
    out
}

/// Sets of `k` disjoint pairs `(a, b)`, `a < b`, of 0-based points below `n`.
fn partial_matchings(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(start: usize, free: &mut Vec<bool>, k: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let n = free.len();
        for a in start..n {
            if !free[a] {
                continue;
            }
            free[a] = false;
            for b in a + 1..n {
                if free[b] {
                    free[b] = false;
                    cur.push((a, b));
                    go(a + 1, free, k, cur, out);
                    cur.pop();
                    free[b] = true;
                }
            }
            free[a] = true;
        }
    }
    let mut out = Vec::new();
    go(0, &mut vec![true; n], k, &mut Vec::new(), &mut out);
    out
}

fn join_indices(idx: &[usize], n: usize) -> String {
    let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
    parts.join(if n < 10 { "" } else { "_" })
}

/// Vertex label of a projection, with a sort key.
///
/// In the top singular J-class the labels follow the usual names: `i` for
/// `pi_i` and `ij` for `pi_ij` in the partition monoid, `ij` for `tau_ij`
/// in the Brauer monoid and `i` for `tau_i` in the Jones monoid. Other
/// projections are labelled by their diagram notation.
pub fn projection_label(family: MonoidFamily, r: usize, p: &PartitionDiagram) -> (Vec<usize>, String) {
    let n = family.n;
    let sig = p.signature();
    let nontrivial: Vec<Vec<usize>> = sig.ker.classes().into_iter().filter(|c| c.len() > 1).collect();
    let key = match (family.tag, Some(r) == family.top_singular_rank()) {
        (FamilyTag::Partition, true) => {
            if sig.dom.len() + 1 == n {
                (1..=n).filter(|x| !sig.dom.contains(x)).collect()
            } else {
                nontrivial[0].clone()
            }
        }
        (FamilyTag::Brauer, true) => nontrivial[0].clone(),
        (FamilyTag::Jones, true) => vec![nontrivial[0][0]],
        _ => return (Vec::new(), p.to_string()),
    };
    let label = join_indices(&key, n);
    (key, label)
}

/// The projection graph of the rank-`r` J-class together with the
/// projections labelling its vertices.
#[derive(Clone, Debug)]
pub struct ProjectionGraph {
    pub family: MonoidFamily,
    pub r: usize,
    pub projections: Vec<PartitionDiagram>,
    pub graph: TwoColouredDiGraph,
}

/// Builds the projection graph: one vertex per projection of rank `r` and a
/// blue edge `p -> q` whenever `pq` still has rank `r`.
pub fn projection_graph(family: MonoidFamily, r: usize) -> Result<ProjectionGraph> {
    let mut labelled: Vec<((Vec<usize>, String), PartitionDiagram)> = projections(family, r)?
        .into_iter()
        .map(|p| (projection_label(family, r, &p), p))
        .collect();
    labelled.sort();
    let (labels, projections): (Vec<String>, Vec<PartitionDiagram>) =
        labelled.into_iter().map(|((_, l), p)| (l, p)).unzip();
    let mut graph = TwoColouredDiGraph::new(labels);
    for (i, p) in projections.iter().enumerate() {
        for (j, q) in projections.iter().enumerate() {
            if (p * q).rank() == r {
                graph.add_blue(i, j)?;
            }
        }
    }
    Ok(ProjectionGraph { family, r, projections, graph })
}

impl ProjectionGraph {
    pub fn vertex_of(&self, p: &PartitionDiagram) -> Option<usize> {
        self.projections.iter().position(|q| q == p)
    }

    /// The edge `p -> q` with `f = pq`, where `p = f f*` and `q = f* f`.
    pub fn decode_idempotent(&self, f: &PartitionDiagram) -> Result<(usize, usize)> {
        let bad = || Error::NotClassIdempotent(f.to_string());
        if !self.family.contains(f) || f.rank() != self.r || !f.is_idempotent() {
            return Err(bad());
        }
        let fs = f.star();
        let p = self.vertex_of(&(f * &fs)).ok_or_else(bad)?;
        let q = self.vertex_of(&(&fs * f)).ok_or_else(bad)?;
        if &self.projections[p] * &self.projections[q] != *f {
            return Err(bad());
        }
        Ok((p, q))
    }

    /// The idempotent attached to the edge `p -> q`.
    pub fn edge_idempotent(&self, p: usize, q: usize) -> PartitionDiagram {
        &self.projections[p] * &self.projections[q]
    }

    /// The two-coloured graph with a red edge for each idempotent of `set`.
    pub fn with_red(&self, set: &[PartitionDiagram]) -> Result<TwoColouredDiGraph> {
        let mut g = self.graph.clone();
        for f in set {
            let (p, q) = self.decode_idempotent(f)?;
            g.add_red(p, q)?;
        }
        Ok(g)
    }
}

/// Graham-Houghton graph of the rank-`r` J-class: R-classes on the left,
/// L-classes on the right, and an edge wherever the H-class contains an
/// idempotent. Computed by enumerating the J-class.
pub fn graham_houghton(family: MonoidFamily, r: usize) -> Result<BipartiteGraph> {
    family.check_rank(r)?;
    if family.tag.is_diagram() {
        let j = family.j_class_diagrams(r)?;
        let label = |p: &PartitionDiagram| projection_label(family, r, p);
        build_bipartite(&j, |a| label(&(a * &a.star())), |a| label(&(&a.star() * a)))
    } else {
        let j: Vec<_> = family.transformations()?.into_iter().filter(|t| t.rank() == r).collect();
        build_bipartite(
            &j,
            |t| (Vec::new(), t.kernel().to_string()),
            |t| {
                let im = t.image();
                (im.clone(), format!("{{{}}}", im.iter().join(",")))
            },
        )
    }
}

fn build_bipartite<E: Element>(
    j: &[E],
    left_label: impl Fn(&E) -> (Vec<usize>, String),
    right_label: impl Fn(&E) -> (Vec<usize>, String),
) -> Result<BipartiteGraph> {
    let mut left: BTreeMap<GreenKey, (Vec<usize>, String)> = BTreeMap::new();
    let mut right: BTreeMap<GreenKey, (Vec<usize>, String)> = BTreeMap::new();
    for e in j {
        left.entry(e.r_key()).or_insert_with(|| left_label(e));
        right.entry(e.l_key()).or_insert_with(|| right_label(e));
    }
    let order = |m: &BTreeMap<GreenKey, (Vec<usize>, String)>| -> Vec<(GreenKey, String)> {
        let mut v: Vec<_> = m.iter().map(|(k, l)| (l.clone(), k.clone())).collect();
        v.sort();
        v.into_iter().map(|(l, k)| (k, l.1)).collect()
    };
    let (lv, rv) = (order(&left), order(&right));
    let mut g = BipartiteGraph::new(lv.iter().map(|x| x.1.clone()).collect(), rv.iter().map(|x| x.1.clone()).collect());
    let li: BTreeMap<&GreenKey, usize> = lv.iter().enumerate().map(|(i, x)| (&x.0, i)).collect();
    let ri: BTreeMap<&GreenKey, usize> = rv.iter().enumerate().map(|(i, x)| (&x.0, i)).collect();
    for e in j.iter().filter(|e| e.is_idempotent()) {
        g.add_edge(li[&e.r_key()], ri[&e.l_key()])?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{generator, Generator};

    fn fam(tag: FamilyTag, n: usize) -> MonoidFamily {
        MonoidFamily::new(tag, n).unwrap()
    }

    #[test]
    fn projections_match_filtering() {
        for (tag, range) in [
            (FamilyTag::Partition, 1..=4),
            (FamilyTag::Brauer, 1..=5),
            (FamilyTag::Jones, 1..=7),
            (FamilyTag::PlanarPartition, 1..=3),
        ] {
            for n in range {
                let f = fam(tag, n);
                let all = f.diagrams().unwrap();
                for r in f.ranks() {
                    let mut brute: Vec<_> = all.iter().filter(|d| d.rank() == r && d.is_projection()).cloned().collect();
                    brute.sort();
                    assert_eq!(projections(f, r).unwrap(), brute, "{f} r={r}");
                }
            }
        }
    }

    #[test]
    fn jones_graph_is_a_path_with_loops() {
        for n in 2..=9 {
            let pg = projection_graph(fam(FamilyTag::Jones, n), n - 2).unwrap();
            let labels: Vec<String> = (1..n).map(|i| i.to_string()).collect();
            if n < 10 {
                let mut sorted = labels.clone();
                sorted.sort();
                assert_eq!(pg.graph.labels(), sorted.as_slice());
            }
            for (a, la) in pg.graph.labels().iter().enumerate() {
                for (b, lb) in pg.graph.labels().iter().enumerate() {
                    let (i, j): (i64, i64) = (la.parse().unwrap(), lb.parse().unwrap());
                    assert_eq!(pg.graph.blue_edges().contains(&(a, b)), (i - j).abs() <= 1);
                }
            }
        }
    }

    #[test]
    fn partition_graph_shape() {
        for n in 2..=5 {
            let pg = projection_graph(fam(FamilyTag::Partition, n), n - 1).unwrap();
            let g = &pg.graph;
            assert_eq!(g.vertex_count(), n + n * (n - 1) / 2);
            for (a, la) in g.labels().iter().enumerate() {
                for (b, lb) in g.labels().iter().enumerate() {
                    let expected = a == b
                        || (la.len() == 1 && lb.len() == 2 && lb.contains(la.as_str()))
                        || (la.len() == 2 && lb.len() == 1 && la.contains(lb.as_str()));
                    assert_eq!(g.blue_edges().contains(&(a, b)), expected, "{la} {lb}");
                }
            }
        }
    }

    #[test]
    fn red_edges_from_named_sets() {
        let pg = projection_graph(fam(FamilyTag::Partition, 2), 1).unwrap();
        let set: Vec<_> = Generator::parse_list("pi1,pi2,lam12,rho12", 2)
            .unwrap()
            .into_iter()
            .map(|g| g.diagram(2).unwrap())
            .collect();
        let g = pg.with_red(&set).unwrap();
        let named: Vec<(String, String)> =
            g.red_edges().iter().map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string())).collect();
        let mut expected = vec![
            ("1".to_string(), "1".to_string()),
            ("2".into(), "2".into()),
            ("12".into(), "2".into()),
            ("1".into(), "12".into()),
        ];
        expected.sort_by_key(|(a, b)| (g.vertex_index(a).unwrap(), g.vertex_index(b).unwrap()));
        assert_eq!(named, expected);

        let pg = projection_graph(fam(FamilyTag::Jones, 4), 2).unwrap();
        let set: Vec<_> = ["tau1", "tau3", "lam1", "lam2"].iter().map(|s| Generator::parse(s, 4).unwrap().diagram(4).unwrap()).collect();
        let g = pg.with_red(&set).unwrap();
        let named: Vec<(String, String)> =
            g.red_edges().iter().map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string())).collect();
        assert_eq!(
            named,
            vec![("1".into(), "1".into()), ("1".into(), "2".into()), ("2".into(), "3".into()), ("3".into(), "3".into())]
        );
        assert!(pg.with_red(&[]).unwrap().red_edges().is_empty());
    }

    #[test]
    fn edges_biject_with_idempotents() {
        for (f, r) in [
            (fam(FamilyTag::Partition, 3), 2),
            (fam(FamilyTag::Partition, 4), 3),
            (fam(FamilyTag::Brauer, 4), 2),
            (fam(FamilyTag::Brauer, 4), 0),
            (fam(FamilyTag::Jones, 6), 4),
            (fam(FamilyTag::Jones, 6), 2),
        ] {
            let pg = projection_graph(f, r).unwrap();
            let mut from_edges: Vec<_> = pg.graph.blue_edges().iter().map(|&(p, q)| pg.edge_idempotent(p, q)).collect();
            from_edges.sort();
            from_edges.dedup();
            assert_eq!(from_edges.len(), pg.graph.blue_edges().len());
            let mut idem: Vec<_> = f.j_class_diagrams(r).unwrap().into_iter().filter(|d| d.is_idempotent()).collect();
            idem.sort();
            assert_eq!(from_edges, idem, "{f} r={r}");
            for e in &idem {
                let (p, q) = pg.decode_idempotent(e).unwrap();
                assert_eq!(&pg.edge_idempotent(p, q), e);
            }
        }
    }

    #[test]
    fn decode_rejects_foreign_elements() {
        let pg = projection_graph(fam(FamilyTag::Jones, 4), 2).unwrap();
        let t13 = generator(Generator::Tau(1, 3), 4).unwrap();
        assert!(pg.decode_idempotent(&t13).is_err());
        assert!(pg.decode_idempotent(&PartitionDiagram::identity(4)).is_err());
    }

    #[test]
    fn graham_houghton_examples() {
        let d = graham_houghton(fam(FamilyTag::Brauer, 3), 1).unwrap();
        assert_eq!((d.left().len(), d.right().len(), d.edge_count()), (3, 3, 9));
        for n in 2..=5 {
            let d = graham_houghton(fam(FamilyTag::Partition, n), n - 1).unwrap();
            assert_eq!(d.edge_count(), (5 * n * n - 3 * n) / 2);
        }
        for n in 3..=9 {
            let d = graham_houghton(fam(FamilyTag::Jones, n), n - 2).unwrap();
            assert_eq!(d.edge_count(), 3 * (n - 1) - 2);
        }
        let t = graham_houghton(fam(FamilyTag::FullTransformation, 3), 2).unwrap();
        assert_eq!((t.left().len(), t.right().len(), t.edge_count()), (3, 3, 6));
    }
}
