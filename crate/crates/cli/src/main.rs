use clap::{Args, Parser, Subcommand};
use diagmon::counting;
use diagmon::diagram::{Generator, PartitionDiagram, Transformation};
use diagmon::graphs::{graham_houghton, johnson_graph, projection_graph, tournament_generates, TwoColouredDiGraph};
use diagmon::oracle;
use diagmon::repdims::{self, IntegerPartition};
use diagmon::semigroup::{closure, FamilyTag, MonoidFamily};
use diagmon::tables::{self, Format};
use diagmon::{Error, Result};
use serde_json::json;
use std::collections::HashSet;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "diagmon", version, about = "Exact computations for diagram monoids")]
struct Cli {
    /// Output format: ascii, csv or json.
    #[arg(long, global = true, default_value = "ascii")]
    format: String,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the reference tables 1 to 11.
    Tables {
        id: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Compose two diagrams of degree N.
    Compose { n: usize, alpha: String, beta: String },
    /// Decide whether a set of idempotents generates the singular part.
    Check {
        /// rbr, red-circuit, closure, tournament or strong-hall.
        kind: String,
        family: String,
        n: usize,
        /// Comma separated names such as "pi1,pi12,lam21", or "1->2,2->3"
        /// for transformations.
        #[arg(default_value = "")]
        set: String,
    },
    /// Export a graph as JSON or DOT.
    Graph(GraphArgs),
    /// Cell-module dimensions as CSV.
    Dims {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Check a theorem on a range of degrees, e.g. `verify rbr_iff_generates_jones 4..5`.
    Verify { theorem: String, range: String },
    /// Evaluate a counting function, e.g. `count stirling2 5 2` or `count rank partition 4 2`.
    Count { name: String, args: Vec<String> },
}

#[derive(Args)]
struct GraphArgs {
    /// projection, graham-houghton, johnson or bratteli.
    kind: String,
    /// `FAMILY N` for projection and graham-houghton, `N` otherwise.
    args: Vec<String>,
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
    /// Red edges for a projection graph, as a generator list.
    #[arg(long)]
    set: Option<String>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

/// A finished command: its text and whether the verdict was positive.
struct Outcome {
    text: String,
    verdict: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, verdict: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let format: Format = cli.format.parse()?;
    match cli.command {
        Command::Tables { id, max_n } => Ok(Outcome::ok(tables::table(id, max_n)?.render(format))),
        Command::Compose { n, alpha, beta } => compose(format, n, &alpha, &beta),
        Command::Check { kind, family, n, set } => check(format, &kind, &family, n, &set),
        Command::Graph(args) => graph(args),
        Command::Dims { algebra, n, mu } => dims(&algebra, n, mu.as_deref()),
        Command::Verify { theorem, range } => verify(&theorem, &range),
        Command::Count { name, args } => count(&name, &args),
    }
}

fn line_end(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn compose(format: Format, n: usize, alpha: &str, beta: &str) -> Result<Outcome> {
    let a = PartitionDiagram::parse(alpha, n)?;
    let b = PartitionDiagram::parse(beta, n)?;
    let c = a.compose(&b)?;
    let text = match format {
        Format::Json => json!({ "product": c.product.to_string(), "m": c.middle_components }).to_string(),
        Format::Csv => format!("product,m\n\"{}\",{}", c.product, c.middle_components),
        Format::Ascii => format!("product: {}\nm: {}", c.product, c.middle_components),
    };
    Ok(Outcome::ok(line_end(text)))
}

fn family(name: &str, n: usize) -> Result<MonoidFamily> {
    MonoidFamily::new(name.parse()?, n)
}

fn parse_diagrams(set: &str, n: usize) -> Result<Vec<PartitionDiagram>> {
    Generator::parse_list(set, n)?.into_iter().map(|g| g.diagram(n)).collect()
}

/// Parses `1->2,2->3` into the idempotents `(1 -> 2)`, `(2 -> 3)`.
fn parse_transformations(set: &str, n: usize) -> Result<Vec<Transformation>> {
    set.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (i, j) = s.split_once("->").ok_or_else(|| Error::Parse(format!("expected `i->j`, got `{s}`")))?;
            let p = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{t}`")));
            Transformation::elementary(n, p(i)?, p(j)?)
        })
        .collect()
}

fn top_rank(f: MonoidFamily) -> Result<usize> {
    f.top_singular_rank().ok_or_else(|| Error::InvalidArgument(format!("{f} has no singular part")))
}

fn verdict_text(format: Format, verdict: bool, failures: &[String], extra: serde_json::Value) -> String {
    match format {
        Format::Json => {
            let mut v = json!({ "verdict": verdict, "failures": failures });
            if let (Some(obj), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
                obj.extend(more);
            }
            line_end(v.to_string())
        }
        Format::Csv => format!("verdict,failures\n{},{}\n", verdict, failures.join(" ")),
        Format::Ascii => {
            let mut s = format!("verdict: {verdict}\n");
            if !failures.is_empty() {
                s.push_str(&format!("failures: {}\n", failures.join(" ")));
            }
            s
        }
    }
}

fn labelled(g: &TwoColouredDiGraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn check(format: Format, kind: &str, fam: &str, n: usize, set: &str) -> Result<Outcome> {
    let f = family(fam, n)?;
    match kind {
        "rbr" | "red-circuit" => {
            let pg = projection_graph(f, top_rank(f)?)?;
            let g = pg.with_red(&parse_diagrams(set, n)?)?;
            let (verdict, failures, extra) = if kind == "rbr" {
                let v = g.rbr_verdict();
                let circuits: serde_json::Map<String, serde_json::Value> = v
                    .circuits
                    .iter()
                    .enumerate()
                    .filter_map(|(i, c)| c.as_ref().map(|c| (g.label(i).to_string(), json!(labelled(&g, c)))))
                    .collect();
                (v.generates(), labelled(&g, &v.failures()), json!({ "circuits": circuits }))
            } else {
                let on = g.red_circuit_vertices();
                let bad: Vec<usize> = (0..on.len()).filter(|&v| !on[v]).collect();
                (bad.is_empty(), labelled(&g, &bad), json!({}))
            };
            let extra = match extra {
                serde_json::Value::Object(mut m) => {
                    m.insert("red_degree_condition".into(), json!(g.red_degree_condition()));
                    serde_json::Value::Object(m)
                }
                other => other,
            };
            Ok(Outcome { text: verdict_text(format, verdict, &failures, extra), verdict })
        }
        "closure" => {
            let verdict = if f.tag.is_diagram() {
                let r = top_rank(f)?;
                let gens = parse_diagrams(set, n)?;
                let got: HashSet<PartitionDiagram> = closure(&gens, |a, b| a * b).into_iter().collect();
                let want: HashSet<PartitionDiagram> = f.diagrams()?.into_iter().filter(|d| d.rank() <= r).collect();
                got == want
            } else {
                let gens = parse_transformations(set, n)?;
                let got: HashSet<Transformation> = closure(&gens, |a, b| a * b).into_iter().collect();
                let want: HashSet<Transformation> =
                    f.transformations()?.into_iter().filter(|t| t.rank() < n).collect();
                got == want
            };
            Ok(Outcome { text: verdict_text(format, verdict, &[], json!({})), verdict })
        }
        "tournament" => {
            if f.tag.is_diagram() {
                return Err(Error::Unsupported("tournament check needs the transformation family".into()));
            }
            let verdict = tournament_generates(n, &parse_transformations(set, n)?)?;
            Ok(Outcome { text: verdict_text(format, verdict, &[], json!({})), verdict })
        }
        "strong-hall" => {
            let verdict = graham_houghton(f, top_rank(f)?)?.strong_hall()?;
            Ok(Outcome { text: verdict_text(format, verdict, &[], json!({})), verdict })
        }
        _ => Err(Error::InvalidArgument(format!("unknown check `{kind}`"))),
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, got `{s}`")))
}

fn graph(args: GraphArgs) -> Result<Outcome> {
    let dot = args.dot;
    let pos = &args.args;
    let need = |k: usize| -> Result<()> {
        if pos.len() != k {
            return Err(Error::InvalidArgument(format!("graph {} takes {k} arguments", args.kind)));
        }
        Ok(())
    };
    let text = match args.kind.as_str() {
        "projection" => {
            need(2)?;
            let f = family(&pos[0], parse_usize(&pos[1])?)?;
            let pg = projection_graph(f, top_rank(f)?)?;
            let g = match &args.set {
                Some(s) => pg.with_red(&parse_diagrams(s, f.n)?)?,
                None => pg.graph,
            };
            if dot { g.to_dot() } else { g.to_json() }
        }
        "graham-houghton" => {
            need(2)?;
            let f = family(&pos[0], parse_usize(&pos[1])?)?;
            let d = graham_houghton(f, top_rank(f)?)?;
            if dot { d.to_dot() } else { d.to_json() }
        }
        "johnson" => {
            need(1)?;
            let j = johnson_graph(parse_usize(&pos[0])?)?;
            if dot {
                j.to_dot()
            } else {
                let edges: Vec<[usize; 2]> = j.edges.iter().map(|&(a, b)| [a, b]).collect();
                json!({ "vertices": j.labels, "edges": edges }).to_string()
            }
        }
        "bratteli" => {
            need(1)?;
            let n = parse_usize(&pos[0])?;
            if dot {
                repdims::bratteli_dot(n)
            } else {
                let levels: Vec<Vec<String>> = (0..=2 * n)
                    .map(|h| (0..=h / 2).rev().flat_map(repdims::partitions_of).map(|p| p.to_string()).collect())
                    .collect();
                json!({ "levels": levels }).to_string()
            }
        }
        other => return Err(Error::InvalidArgument(format!("unknown graph `{other}`"))),
    };
    let text = line_end(text);
    match args.out {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn dims(algebra: &str, n: usize, mu: Option<&str>) -> Result<Outcome> {
    let rows = match mu {
        None => repdims::all_dims(algebra, n)?,
        Some(m) => {
            let mu: IntegerPartition = m.parse()?;
            let d = match algebra {
                "partition" => repdims::dim_partition_algebra(n, &mu)?,
                "brauer" => repdims::dim_brauer_algebra(n, &mu)?,
                "tl" | "jones" | "temperley-lieb" => repdims::dim_tl_algebra(n, mu.size())?,
                _ => return Err(Error::InvalidArgument(format!("unknown algebra `{algebra}`"))),
            };
            vec![(mu.to_string(), d)]
        }
    };
    let mut out = String::from("label,dim\n");
    for (label, d) in rows {
        out.push_str(&format!("\"{label}\",{d}\n"));
    }
    Ok(Outcome::ok(out))
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    match s.split_once("..") {
        Some((a, b)) => Ok(parse_usize(a)?..=parse_usize(b.trim_start_matches('='))?),
        None => {
            let n = parse_usize(s)?;
            Ok(n..=n)
        }
    }
}

fn verify(theorem: &str, range: &str) -> Result<Outcome> {
    let report = oracle::verify_theorem(theorem, parse_range(range)?)?;
    Ok(Outcome { text: report.to_jsonl(), verdict: report.passed() })
}

fn count(name: &str, args: &[String]) -> Result<Outcome> {
    let nums = |from: usize| -> Result<Vec<u64>> { args[from..].iter().map(|a| Ok(parse_usize(a)? as u64)).collect() };
    let arity = |k: usize| -> Result<()> {
        if args.len() != k {
            return Err(Error::InvalidArgument(format!("`count {name}` takes {k} arguments")));
        }
        Ok(())
    };
    let fam = |i: usize| -> Result<MonoidFamily> { family(&args[i], parse_usize(&args[i + 1])?) };
    let value = match name {
        "stirling2" | "bell" | "catalan" | "double_factorial" | "binomial" | "fibonacci" | "derangements"
        | "factorial" => counting::base_sequence(name, &nums(0)?)?.to_string(),
        "rank" => {
            arity(3)?;
            let tag: FamilyTag = args[0].parse()?;
            counting::rank_ideal(tag, parse_usize(&args[1])?, parse_usize(&args[2])?)?.to_string()
        }
        "size" => {
            arity(2)?;
            fam(0)?.size().to_string()
        }
        "w" => {
            arity(1)?;
            counting::strong_tournaments_w(nums(0)?[0]).to_string()
        }
        "a" => {
            arity(1)?;
            counting::partition_a(nums(0)?[0]).to_string()
        }
        "b" => {
            arity(2)?;
            let v = nums(0)?;
            counting::partition_b(v[0], v[1]).to_string()
        }
        "gsets" => {
            arity(1)?;
            counting::partition_gsets(nums(0)?[0]).to_string()
        }
        "f" => {
            arity(1)?;
            counting::jones_idgen_subsets_f(nums(0)?[0])?.to_string()
        }
        "d" => {
            arity(1)?;
            tables::brauer_d(parse_usize(&args[0])?)?.to_string()
        }
        "min-gensets" => {
            arity(2)?;
            oracle::brute_min_idgen_count(fam(0)?)?.to_string()
        }
        "idgen-subsets" => {
            arity(2)?;
            oracle::brute_idgen_subset_count(fam(0)?)?.to_string()
        }
        "tournaments" => {
            arity(1)?;
            oracle::brute_strong_tournaments(parse_usize(&args[0])?)?.to_string()
        }
        "green" => {
            arity(2)?;
            let rows = fam(0)?.green_classes()?;
            let mut s = String::from(diagmon::semigroup::JClassDescriptor::CSV_HEADER);
            for r in rows {
                s.push('\n');
                s.push_str(&r.csv_row());
            }
            s
        }
        _ => return Err(Error::InvalidArgument(format!("unknown count `{name}`"))),
    };
    Ok(Outcome::ok(line_end(value)))
}
