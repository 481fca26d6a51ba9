//! `kekule`: batch analyses of graphs given as graph6 lines or edge lists.
//!
//! Every analysis command prints one JSON object per input graph, in input
//! order. The exit code is nonzero if any input failed to parse or analyze.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use kekule_core::extremal::{exhaustive_search, max_size_search, EXHAUSTIVE_HALF_ORDER_CAP};
use kekule_core::graph::{compose, star};
use kekule_core::matching::{classify_edges, EdgeClass};
use kekule_core::spanning::DEFAULT_TREE_CAP;
use kekule_core::{
    anti_kekule_number, complete, corona, cycle, encode_graph6, f, parse_graph6, path, recognize,
    recognize_oracle, sample_member, sample_pm_tree, AkValue, Graph, Recognition,
};

use input::{read_inputs, Item};

#[derive(Parser)]
#[command(name = "kekule", version, about = "Spanning trees, perfect matchings and anti-Kekulé sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every spanning tree has a perfect matching.
    Recognize(RecognizeArgs),
    /// Anti-Kekulé number.
    Ak(AkArgs),
    /// Classify each edge by its role in the perfect matchings.
    Edges(InputArgs),
    /// Generate graphs as graph6 lines.
    Gen(GenArgs),
    /// Largest member of order 2n and the graphs attaining it.
    Extremal(ExtremalArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input files (graph6, one graph per line); stdin if none.
    files: Vec<PathBuf>,
    /// Treat each input file as one graph in edge-list format.
    #[arg(long)]
    edge_list: bool,
    /// Human-readable lines instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Include the construction certificate of members.
    #[arg(long)]
    certificate: bool,
    /// Include the bad spanning tree of non-members.
    #[arg(long)]
    witness: bool,
    /// Cross-check against spanning-tree enumeration.
    #[arg(long)]
    oracle: bool,
    /// Spanning-tree cap for --oracle.
    #[arg(long, default_value_t = DEFAULT_TREE_CAP)]
    oracle_cap: usize,
}

#[derive(Args)]
struct AkArgs {
    #[command(flatten)]
    input: InputArgs,
    /// List every minimum anti-Kekulé set.
    #[arg(long)]
    all_min_sets: bool,
    /// Largest set size to search.
    #[arg(long)]
    max_k: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Corona,
    Cycle,
    Path,
    Complete,
    Compose,
    SampleG,
    SamplePmTree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Complete,
    Cycle,
    Path,
    Star,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    /// Order of the generated graph, or of the corona base.
    #[arg(long)]
    n: Option<usize>,
    /// Base graph for corona.
    #[arg(long, value_enum)]
    base: Option<Base>,
    /// Host graph for compose, in graph6.
    #[arg(long)]
    host: Option<String>,
    /// Attachment for compose as GRAPH6:ROOT, one per host vertex in order.
    #[arg(long = "part")]
    parts: Vec<String>,
    /// Half the order, for the samplers.
    #[arg(long)]
    half_order: Option<usize>,
    /// Seed for the samplers; graph i of --count uses seed + i.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    count: u64,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long)]
    half_order: usize,
    /// Search every connected labeled graph of order 2n (n <= 3).
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    exhaustive: bool,
    /// Search the graph6 lines of this file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    pretty: bool,
}

/// Result of one input: a JSON object, or an error object.
type Row = Result<Map<String, Value>, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recognize(a) => run_per_graph(&a.input, |g| recognize_row(g, &a)),
        Command::Ak(a) => run_per_graph(&a.input, |g| ak_row(g, &a)),
        Command::Edges(a) => run_per_graph(&a, edges_row),
        Command::Gen(a) => gen(&a),
        Command::Extremal(a) => extremal(&a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("kekule: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs `analyze` on every input in parallel and prints rows in input order.
/// Returns whether every row succeeded.
fn run_per_graph<F>(args: &InputArgs, analyze: F) -> Result<bool, String>
where
    F: Fn(&Graph) -> Row + Sync,
{
    let items = read_inputs(&args.files, args.edge_list).map_err(|e| e.to_string())?;
    let rows: Vec<Row> = items
        .par_iter()
        .map(|item: &Item| {
            let g = item.graph.as_ref().map_err(|e| format!("parse error: {e}"))?;
            let mut row = Map::new();
            row.insert("input".into(), json!(item.label));
            row.insert("order".into(), json!(g.order()));
            row.insert("size".into(), json!(g.size()));
            row.extend(analyze(g)?);
            Ok(row)
        })
        .collect();
    let mut ok = true;
    for (item, row) in items.iter().zip(rows) {
        let row = row.unwrap_or_else(|e| {
            ok = false;
            let mut m = Map::new();
            m.insert("input".into(), json!(item.label));
            m.insert("error".into(), json!(e));
            m
        });
        if args.pretty {
            println!("{}", pretty_line(&row));
        } else {
            println!("{}", Value::Object(row));
        }
    }
    Ok(ok)
}

fn pretty_line(row: &Map<String, Value>) -> String {
    row.iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join("  ")
}

fn recognize_row(g: &Graph, a: &RecognizeArgs) -> Row {
    let r = recognize(g).map_err(|e| e.to_string())?;
    let mut row = Map::new();
    row.insert("member".into(), json!(r.is_member()));
    match &r {
        Recognition::Member(c) if a.certificate => {
            row.insert("certificate".into(), serde_json::to_value(c).map_err(|e| e.to_string())?);
        }
        Recognition::NonMember(w) if a.witness => {
            row.insert("witness".into(), serde_json::to_value(w).map_err(|e| e.to_string())?);
        }
        _ => {}
    }
    if a.oracle {
        let o = recognize_oracle(g, a.oracle_cap).map_err(|e| e.to_string())?;
        row.insert("oracle_agrees".into(), json!(o == r.is_member()));
    }
    Ok(row)
}

fn ak_row(g: &Graph, a: &AkArgs) -> Row {
    let r = anti_kekule_number(g, a.max_k, a.all_min_sets).map_err(|e| e.to_string())?;
    let mut row = Map::new();
    let ak = match r.value {
        AkValue::Zero => json!(0),
        AkValue::NoneExists => json!("none"),
        AkValue::Number(k) => json!(k),
    };
    row.insert("ak".into(), ak);
    if let Some(sets) = r.min_sets {
        row.insert("min_sets".into(), json!(sets));
    }
    Ok(row)
}

fn class_name(c: EdgeClass) -> &'static str {
    match c {
        EdgeClass::FixedDouble => "FixedDouble",
        EdgeClass::FixedSingle => "FixedSingle",
        EdgeClass::Free => "Free",
        EdgeClass::NoPerfectMatching => "NoPerfectMatching",
    }
}

fn edges_row(g: &Graph) -> Row {
    let classes: Vec<Value> = classify_edges(g)
        .into_iter()
        .map(|(e, c)| json!({"edge": [e.0, e.1], "class": class_name(c)}))
        .collect();
    let mut row = Map::new();
    row.insert("edges".into(), Value::Array(classes));
    Ok(row)
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("--{flag} is required for this kind"))
}

fn gen(a: &GenArgs) -> Result<bool, String> {
    let err = |e: kekule_core::Error| e.to_string();
    let graphs: Vec<Graph> = match a.kind {
        GenKind::Cycle => vec![cycle(need(a.n, "n")?).map_err(err)?],
        GenKind::Path => vec![path(need(a.n, "n")?).map_err(err)?],
        GenKind::Complete => vec![complete(need(a.n, "n")?).map_err(err)?],
        GenKind::Corona => {
            let n = need(a.n, "n")?;
            let base = match need(a.base, "base")? {
                Base::Complete => complete(n),
                Base::Cycle => cycle(n),
                Base::Path => path(n),
                Base::Star => star(n.saturating_sub(1)),
            }
            .map_err(err)?;
            vec![corona(&base)]
        }
        GenKind::Compose => {
            let host = parse_graph6(a.host.as_deref().ok_or("--host is required for compose")?).map_err(err)?;
            let parts = a
                .parts
                .iter()
                .map(|p| {
                    let (g6, root) = p.rsplit_once(':').ok_or_else(|| format!("part {p:?} is not GRAPH6:ROOT"))?;
                    let root: usize = root.parse().map_err(|_| format!("bad root in {p:?}"))?;
                    Ok((parse_graph6(g6).map_err(err)?, root))
                })
                .collect::<Result<Vec<_>, String>>()?;
            vec![compose(&host, &parts).map_err(err)?.graph]
        }
        GenKind::SampleG | GenKind::SamplePmTree => {
            let half = need(a.half_order, "half-order")?;
            let seed = need(a.seed, "seed")?;
            (0..a.count)
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    match a.kind {
                        GenKind::SampleG => sample_member(half, s),
                        _ => sample_pm_tree(half, s),
                    }
                    .map_err(err)
                })
                .collect::<Result<_, _>>()?
        }
    };
    for g in &graphs {
        println!("{}", encode_graph6(g).map_err(err)?);
    }
    Ok(true)
}

fn extremal(a: &ExtremalArgs) -> Result<bool, String> {
    let n = a.half_order;
    let bound = f(n).map_err(|e| e.to_string())?;
    let outcome = match &a.file {
        None => {
            if n > EXHAUSTIVE_HALF_ORDER_CAP {
                return Err(format!("exhaustive search is limited to --half-order <= {EXHAUSTIVE_HALF_ORDER_CAP}"));
            }
            exhaustive_search(n)
        }
        Some(path) => {
            let items = read_inputs(std::slice::from_ref(path), false).map_err(|e| e.to_string())?;
            let graphs = items
                .into_iter()
                .map(|it| it.graph.map_err(|e| format!("{}: {e}", it.label)))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(g) = graphs.iter().find(|g| !g.is_connected()) {
                return Err(format!("disconnected input {}", encode_graph6(g).unwrap_or_default()));
            }
            max_size_search(graphs, n)
        }
    }
    .map_err(|e| e.to_string())?;

    let extremal: Vec<String> = outcome
        .argmax
        .iter()
        .map(|g| encode_graph6(g).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    // a file need not list every graph, so only the bound is checked there
    let matches = if a.exhaustive {
        json!(outcome.matches_known_extremal().map_err(|e| e.to_string())?)
    } else {
        Value::Null
    };
    let within = outcome.within_bound().map_err(|e| e.to_string())?;
    let row = json!({
        "n": n,
        "f": bound,
        "max_found": outcome.max_size,
        "extremal_graphs": extremal,
        "matches_paper": matches,
        "within_bound": within,
        "examined": outcome.examined,
        "members": outcome.members,
    });
    if a.pretty {
        println!("{}", serde_json::to_string_pretty(&row).map_err(|e| e.to_string())?);
    } else {
        println!("{row}");
    }
    Ok(within)
}
