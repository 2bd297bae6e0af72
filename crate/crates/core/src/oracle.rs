//! Brute-force verifiers. Everything here works from closures and explicit
//! enumeration so that it can be compared against the formulas in
//! [`crate::counting`] and the graph criteria in [`crate::graphs`].

use crate::counting::{binomial, rank_ideal};
use crate::diagram::{generator, jones_to_planar, planar_to_jones, Generator, PartitionDiagram, Transformation};
use crate::error::{Error, Result};
use crate::graphs::{
    balanced_subgraph_count, graham_houghton, projection_graph, projections, tournament_generates, ProjectionGraph,
};
use crate::semigroup::{closure, green_classes, CayleyTable, FamilyTag, MonoidFamily};
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::collections::HashSet;
use std::ops::RangeInclusive;

/// Largest number of closures a single oracle call will run.
pub const SUBSET_GUARD: u64 = 10_000_000;

/// Largest idempotent count for which all subsets are enumerated.
pub const ALL_SUBSETS_GUARD: usize = 22;

/// The singular ideal below the group of units, its multiplication table,
/// and the idempotents of its top J-class.
pub struct TopIdeal {
    pub family: MonoidFamily,
    pub r: usize,
    pub table: CayleyTable<PartitionDiagram>,
    pub idempotents: Vec<PartitionDiagram>,
    idempotent_index: Vec<u32>,
}

impl TopIdeal {
    pub fn new(family: MonoidFamily) -> Result<Self> {
        if !family.tag.is_diagram() {
            return Err(Error::Unsupported(format!("{} is not a diagram family", family.tag)));
        }
        let r = family
            .top_singular_rank()
            .ok_or_else(|| Error::InvalidArgument(format!("{family} has no singular part")))?;
        let ideal: Vec<PartitionDiagram> = family.diagrams()?.into_iter().filter(|d| d.rank() <= r).collect();
        let table = CayleyTable::new(ideal)?;
        let idempotents: Vec<PartitionDiagram> =
            table.elements().iter().filter(|d| d.rank() == r && d.is_idempotent()).cloned().collect();
        let idempotent_index = idempotents.iter().map(|e| table.index_of(e).expect("in ideal")).collect();
        Ok(TopIdeal { family, r, table, idempotents, idempotent_index })
    }

    /// Whether the chosen idempotents (by position) generate the whole ideal.
    pub fn generates(&self, chosen: &[usize]) -> bool {
        let gens: Vec<u32> = chosen.iter().map(|&i| self.idempotent_index[i]).collect();
        self.table.closure_size(&gens) == self.table.len()
    }

    /// Rank of the ideal according to the closed formula.
    pub fn rank(&self) -> Result<usize> {
        let rho = rank_ideal(self.family.tag, self.family.n, self.r)?;
        rho.to_usize().ok_or_else(|| Error::Guard { estimated: rho.to_string(), limit: usize::MAX.to_string() })
    }
}

fn guard(estimated: &BigUint, limit: u64) -> Result<()> {
    if *estimated > BigUint::from(limit) {
        return Err(Error::Guard { estimated: format!("{estimated} closures"), limit: limit.to_string() });
    }
    Ok(())
}

/// Number of idempotent subsets of the top singular J-class whose size is
/// the rank of the ideal and which generate the ideal, by direct closure.
pub fn brute_min_idgen_count(family: MonoidFamily) -> Result<BigUint> {
    let top = TopIdeal::new(family)?;
    let k = top.rank()?;
    let m = top.idempotents.len();
    guard(&binomial(m as u64, k as u64), SUBSET_GUARD)?;
    let count = (0..m).combinations(k).filter(|s| top.generates(s)).count();
    Ok(BigUint::from(count))
}

/// Subsets of `0..m` in Gray-code order, starting with the empty set.
pub fn gray_code_subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << m).map(move |k| {
        let g = k ^ (k >> 1);
        (0..m).filter(|&i| g >> i & 1 == 1).collect()
    })
}

/// Number of idempotent subsets of any size of the top singular J-class that
/// generate the ideal, by direct closure.
pub fn brute_idgen_subset_count(family: MonoidFamily) -> Result<BigUint> {
    let top = TopIdeal::new(family)?;
    let m = top.idempotents.len();
    if m > ALL_SUBSETS_GUARD {
        return Err(Error::Guard { estimated: format!("2^{m} closures"), limit: format!("2^{ALL_SUBSETS_GUARD}") });
    }
    let count = gray_code_subsets(m).filter(|s| top.generates(s)).count();
    Ok(BigUint::from(count))
}

/// Number of strongly connected tournaments on `{1..n}`, by checking every
/// orientation of the complete graph.
pub fn brute_strong_tournaments(n: usize) -> Result<BigUint> {
    if n > 6 {
        return Err(Error::Guard { estimated: format!("2^{} tournaments", n * (n.max(1) - 1) / 2), limit: "2^15".into() });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut count = 0u64;
    for mask in 0u64..1 << pairs.len() {
        let mut out = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                out[i] |= 1 << j;
            } else {
                out[j] |= 1 << i;
            }
        }
        if n > 0 && (0..n).all(|v| reach(&out, v) == (1 << n) - 1) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

fn reach(out: &[u32], v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        let fresh = out[x] & !seen;
        seen |= fresh;
        stack.extend((0..out.len()).filter(|&y| fresh >> y & 1 == 1));
    }
    seen
}

/// Outcome for one instance of a theorem check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub theorem: String,
    pub instance: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    fn push(&mut self, theorem: &str, instance: String, ok: bool, witness: impl FnOnce() -> String) {
        self.lines.push(ReportLine {
            theorem: theorem.to_string(),
            instance,
            status: if ok { "pass" } else { "fail" },
            witness: (!ok).then(witness),
        });
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status == "pass")
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.status != "pass").count()
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        self.lines.iter().map(|l| serde_json::to_string(l).expect("serializable") + "\n").collect()
    }
}

/// Identifiers accepted by [`verify_theorem`].
pub const THEOREMS: &[&str] = &[
    "rank_formula_partition",
    "rank_formula_brauer",
    "rank_formula_jones",
    "rank_formula_transformation",
    "rank_formula_planar",
    "rbr_iff_generates_partition",
    "rbr_iff_generates_brauer",
    "rbr_iff_generates_jones",
    "red_circuit_iff_generates_jones",
    "tournament_criterion",
    "product_table_partition",
    "product_table_brauer",
    "product_table_jones",
    "dropdown_partition",
    "dropdown_brauer",
    "dropdown_jones",
    "idempotent_count_jnm1",
    "balanced_iff_minimal_partition",
    "balanced_iff_minimal_brauer",
    "balanced_iff_minimal_jones",
    "strong_hall_partition",
    "strong_hall_brauer",
    "strong_hall_jones",
    "planar_jones_isomorphism",
];

fn family_suffix(id: &str) -> Option<FamilyTag> {
    let suffix = id.rsplit('_').next()?;
    match suffix {
        "partition" => Some(FamilyTag::Partition),
        "brauer" => Some(FamilyTag::Brauer),
        "jones" => Some(FamilyTag::Jones),
        "planar" => Some(FamilyTag::PlanarPartition),
        "transformation" => Some(FamilyTag::FullTransformation),
        _ => None,
    }
}

/// Checks the named statement on every degree in `range` and reports one
/// line per instance.
pub fn verify_theorem(id: &str, range: RangeInclusive<usize>) -> Result<Report> {
    if !THEOREMS.contains(&id) {
        return Err(Error::UnknownTheorem(id.to_string()));
    }
    let mut report = Report::default();
    let tag = family_suffix(id);
    for n in range {
        let prefix = id.trim_end_matches(tag.map(|t| t.name()).unwrap_or("")).trim_end_matches('_');
        match (prefix, tag) {
            ("rank_formula", Some(t)) => rank_formula(&mut report, id, t, n)?,
            ("rbr_iff_generates", Some(t)) => criterion_vs_closure(&mut report, id, t, n, Criterion::Rbr)?,
            ("red_circuit_iff_generates", Some(t)) => criterion_vs_closure(&mut report, id, t, n, Criterion::RedCircuit)?,
            ("product_table", Some(t)) => product_table(&mut report, id, t, n)?,
            ("dropdown", Some(t)) => dropdown(&mut report, id, t, n)?,
            ("balanced_iff_minimal", Some(t)) => balanced_iff_minimal(&mut report, id, t, n)?,
            ("strong_hall", Some(t)) => {
                let f = MonoidFamily::new(t, n)?;
                let Some(r) = f.top_singular_rank() else { continue };
                let ok = graham_houghton(f, r)?.strong_hall()?;
                report.push(id, format!("n={n} r={r}"), ok, || "strong Hall condition fails".into());
            }
            _ => match id {
                "tournament_criterion" => tournament_criterion(&mut report, id, n)?,
                "idempotent_count_jnm1" => {
                    let f = MonoidFamily::new(FamilyTag::Partition, n)?;
                    let found = f.j_class_diagrams(n - 1)?.iter().filter(|d| d.is_idempotent()).count();
                    let expected = (5 * n * n - 3 * n) / 2;
                    report.push(id, format!("n={n}"), found == expected, || format!("expected {expected}, found {found}"));
                }
                "planar_jones_isomorphism" => planar_jones(&mut report, id, n)?,
                _ => return Err(Error::UnknownTheorem(id.to_string())),
            },
        }
    }
    Ok(report)
}

fn rank_formula(report: &mut Report, id: &str, tag: FamilyTag, n: usize) -> Result<()> {
    let f = MonoidFamily::new(tag, n)?;
    let rows = match f.elements()? {
        crate::semigroup::Elements::Diagrams(v) => green_classes(&v),
        crate::semigroup::Elements::Transformations(v) => green_classes(&v),
    };
    for row in rows {
        let Ok(expected) = rank_ideal(tag, n, row.r) else { continue };
        // In T_n the rank is the larger of the R- and L-class counts.
        let found = if tag.is_diagram() { row.r_class_count } else { row.r_class_count.max(row.l_class_count) };
        let ok = expected == BigUint::from(found);
        report.push(id, format!("n={n} r={}", row.r), ok, || format!("formula {expected}, enumeration {found}"));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Criterion {
    Rbr,
    RedCircuit,
}

/// Subsets to test: all of them when there are few idempotents, otherwise a
/// fixed pseudo-random sample.
fn subsets_for(m: usize, sample: usize, seed: u64) -> Vec<Vec<usize>> {
    if m <= 12 {
        return gray_code_subsets(m).collect();
    }
    let mut rng = StdRng::seed_from_u64(seed);
    (0..sample)
        .map(|_| {
            let p = rng.gen_range(0.2..0.95);
            (0..m).filter(|_| rng.gen_bool(p)).collect()
        })
        .collect()
}

fn describe(set: &[usize], top: &TopIdeal) -> String {
    set.iter().map(|&i| top.idempotents[i].to_string()).join(" ")
}

fn criterion_vs_closure(report: &mut Report, id: &str, tag: FamilyTag, n: usize, c: Criterion) -> Result<()> {
    let f = MonoidFamily::new(tag, n)?;
    let top = TopIdeal::new(f)?;
    let pg = projection_graph(f, top.r)?;
    for set in subsets_for(top.idempotents.len(), 1500, n as u64) {
        let chosen: Vec<PartitionDiagram> = set.iter().map(|&i| top.idempotents[i].clone()).collect();
        let g = pg.with_red(&chosen)?;
        let verdict = match c {
            Criterion::Rbr => g.rbr_generates(),
            Criterion::RedCircuit => g.red_circuit_cover(),
        };
        let closed = top.generates(&set);
        report.push(id, format!("n={n} F={}", set.iter().join(",")), verdict == closed, || {
            format!("criterion {verdict}, closure {closed}, F = {}", describe(&set, &top))
        });
    }
    Ok(())
}

fn tournament_criterion(report: &mut Report, id: &str, n: usize) -> Result<()> {
    if !(3..=5).contains(&n) {
        return Err(Error::Guard { estimated: format!("n = {n}"), limit: "3 <= n <= 5".into() });
    }
    let singular: HashSet<Transformation> =
        MonoidFamily::new(FamilyTag::SingularTransformation, n)?.transformations()?.into_iter().collect();
    let idem: Vec<Transformation> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| Transformation::elementary(n, i, j))
        .collect::<Result<_>>()?;
    let k = n * (n - 1) / 2;
    let mut sets: Vec<Vec<Transformation>> = idem.iter().cloned().combinations(k).collect();
    if n == 5 {
        // C(20,10) sets is too many for a routine check; take every 997th.
        sets = sets.into_iter().step_by(997).collect();
    }
    for set in sets {
        let got: HashSet<Transformation> = closure(&set, |a, b| a * b).into_iter().collect();
        let closed = got == singular;
        let verdict = tournament_generates(n, &set)?;
        report.push(id, format!("n={n} X={}", set.iter().join(" ")), closed == verdict, || {
            format!("tournament {verdict}, closure {closed}")
        });
    }
    Ok(())
}

/// Whether the projection labelled `a` should be joined to the one labelled
/// `b` in the top singular J-class.
fn predicted_edge(tag: FamilyTag, a: &str, b: &str, n: usize) -> bool {
    let idx = |s: &str| -> Vec<usize> {
        if n < 10 {
            s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
        } else {
            s.split('_').map(|t| t.parse().unwrap()).collect()
        }
    };
    let (x, y) = (idx(a), idx(b));
    if x == y {
        return true;
    }
    match tag {
        FamilyTag::Partition => {
            (x.len() == 1 && y.len() == 2 && y.contains(&x[0])) || (x.len() == 2 && y.len() == 1 && x.contains(&y[0]))
        }
        FamilyTag::Brauer => x.iter().filter(|i| y.contains(i)).count() == 1,
        FamilyTag::Jones => x[0].abs_diff(y[0]) == 1,
        _ => false,
    }
}

fn named_products(tag: FamilyTag, n: usize) -> Result<Vec<(String, PartitionDiagram, PartitionDiagram)>> {
    use Generator::*;
    let g = |x: Generator| generator(x, n);
    let mut out = Vec::new();
    match tag {
        FamilyTag::Partition => {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    out.push((format!("pi_{i}{j} pi_{j} = lam_{i}{j}"), &g(PiPair(i, j))? * &g(Pi(j))?, g(Lambda(i, j))?));
                    out.push((format!("pi_{i} pi_{i}{j} = rho_{i}{j}"), &g(Pi(i))? * &g(PiPair(i, j))?, g(Rho(i, j))?));
                }
            }
        }
        FamilyTag::Brauer => {
            for (i, j, k) in (1..=n).permutations(3).map(|v| (v[0], v[1], v[2])) {
                out.push((format!("tau_{i}{j} tau_{j}{k} = sig_{i}{j}{k}"), &g(Tau(i, j))? * &g(Tau(j, k))?, g(Sigma(i, j, k))?));
            }
        }
        FamilyTag::Jones => {
            for i in 1..n.saturating_sub(1) {
                out.push((format!("tau_{i} tau_{} = lam_{i}", i + 1), &g(TauAdj(i))? * &g(TauAdj(i + 1))?, g(LambdaAdj(i))?));
                out.push((format!("tau_{} tau_{i} = rho_{i}", i + 1), &g(TauAdj(i + 1))? * &g(TauAdj(i))?, g(RhoAdj(i))?));
            }
        }
        _ => {}
    }
    Ok(out)
}

fn product_table(report: &mut Report, id: &str, tag: FamilyTag, n: usize) -> Result<()> {
    let f = MonoidFamily::new(tag, n)?;
    let Some(r) = f.top_singular_rank() else { return Ok(()) };
    let pg = projection_graph(f, r)?;
    let g = &pg.graph;
    let mut bad = Vec::new();
    for (a, la) in g.labels().iter().enumerate() {
        for (b, lb) in g.labels().iter().enumerate() {
            if g.blue_edges().contains(&(a, b)) != predicted_edge(tag, la, lb, n) {
                bad.push(format!("{la}->{lb}"));
            }
        }
    }
    report.push(id, format!("n={n} adjacency"), bad.is_empty(), || bad.join(" "));
    for (name, product, expected) in named_products(tag, n)? {
        let ok = product == expected && product.is_idempotent() && product.rank() == r;
        report.push(id, format!("n={n} {name}"), ok, || format!("product {product}"));
    }
    Ok(())
}

fn dropdown(report: &mut Report, id: &str, tag: FamilyTag, n: usize) -> Result<()> {
    let f = MonoidFamily::new(tag, n)?;
    let ranks = f.ranks();
    for w in ranks.windows(2) {
        let (r, upper) = (w[0], w[1]);
        if upper == n {
            continue;
        }
        let gens = projections(f, upper)?;
        let got: HashSet<PartitionDiagram> = closure(&gens, |a, b| a * b).into_iter().collect();
        let missing: Vec<PartitionDiagram> =
            f.j_class_diagrams(r)?.into_iter().filter(|d| !got.contains(d)).collect();
        report.push(id, format!("n={n} r={r}"), missing.is_empty(), || {
            format!("{} elements of rank {r} missing, e.g. {}", missing.len(), missing[0])
        });
    }
    Ok(())
}

fn balanced_iff_minimal(report: &mut Report, id: &str, tag: FamilyTag, n: usize) -> Result<()> {
    let f = MonoidFamily::new(tag, n)?;
    let top = TopIdeal::new(f)?;
    let pg: ProjectionGraph = projection_graph(f, top.r)?;
    let k = top.rank()?;
    let m = top.idempotents.len();
    guard(&binomial(m as u64, k as u64), SUBSET_GUARD)?;
    let edges: Vec<(usize, usize)> =
        top.idempotents.iter().map(|e| pg.decode_idempotent(e)).collect::<Result<_>>()?;
    let v = pg.graph.vertex_count();
    let mut generating = 0u64;
    let mut mismatch = None;
    for set in (0..m).combinations(k) {
        let (mut outs, mut ins) = (vec![0u8; v], vec![0u8; v]);
        for &i in &set {
            outs[edges[i].0] += 1;
            ins[edges[i].1] += 1;
        }
        let balanced = outs.iter().chain(&ins).all(|&d| d == 1);
        let closed = top.generates(&set);
        generating += closed as u64;
        if balanced != closed && mismatch.is_none() {
            mismatch = Some(format!("balanced {balanced}, closure {closed}, F = {}", describe(&set, &top)));
        }
    }
    let permanent = balanced_subgraph_count(&pg.graph.blue_adjacency())?;
    let ok = mismatch.is_none() && permanent == BigUint::from(generating);
    report.push(id, format!("n={n}"), ok, || {
        mismatch.unwrap_or_else(|| format!("closure count {generating}, permanent {permanent}"))
    });
    Ok(())
}

fn planar_jones(report: &mut Report, id: &str, n: usize) -> Result<()> {
    if n > 4 {
        return Err(Error::Guard { estimated: format!("n = {n}"), limit: "n <= 4".into() });
    }
    let planar = MonoidFamily::new(FamilyTag::PlanarPartition, n)?.diagrams()?;
    let images: Vec<PartitionDiagram> = planar.iter().map(planar_to_jones).collect::<Result<_>>()?;
    let distinct: HashSet<&PartitionDiagram> = images.iter().collect();
    let mut ok = distinct.len() == planar.len() && images.iter().all(|j| j.is_jones() && j.n() == 2 * n);
    let mut witness = String::new();
    for (a, ja) in planar.iter().zip(&images) {
        if jones_to_planar(ja)? != *a {
            ok = false;
            witness = format!("round trip fails at {a}");
        }
    }
    'outer: for (a, ja) in planar.iter().zip(&images) {
        for (b, jb) in planar.iter().zip(&images) {
            if planar_to_jones(&(a * b))? != ja * jb {
                ok = false;
                witness = format!("product {a} * {b}");
                break 'outer;
            }
        }
    }
    report.push(id, format!("n={n}"), ok, || witness);
    Ok(())
}
