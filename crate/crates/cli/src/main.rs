use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use matdegen::catalog::{self, ENTRIES};
use matdegen::decomposition::{decompose, DecomposeOptions, Decomposition, Hints};
use matdegen::degenerations::{min_above_general_with, min_above_rank4_with, DegenerationReport, SearchOptions};
use matdegen::io::{self, HypergraphJson, MatroidJson};
use matdegen::isomorphism::{automorphisms, canonical_form, group_by_symmetry, isomorphism, Perm};
use matdegen::steiner::{steiner_experiment, PlaneKind, Verdict};
use matdegen::weak_order::compare;
use matdegen::{Error, LabeledHypergraph, Matroid, Set};

#[derive(Parser)]
#[command(name = "matdegen", version, about = "Maximal matroid degenerations in the weak order")]
struct Cli {
    /// Worker threads for the searches; output does not depend on it.
    #[arg(long, global = true, env = "MATDEGEN_THREADS", default_value_t = 1)]
    threads: usize,
    /// Seed for randomized options.
    #[arg(long, global = true, env = "MATDEGEN_SEED", default_value_t = 0)]
    seed: u64,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Whether A ≤ B in the weak order (every dependent set of B is dependent in A).
    Compare { a: String, b: String },
    /// The maximal matroids strictly below M.
    MinAbove(MinAboveArgs),
    /// Candidate components of the circuit variety of M.
    Decompose(DecomposeArgs),
    /// Whether A and B are isomorphic, with a witnessing relabeling.
    Isomorphic { a: String, b: String },
    /// Order and generators of the automorphism group.
    Automorphisms { m: String },
    /// Collapses the double points of a hypergraph (or of the hypergraph of a matroid).
    Reduce { input: String },
    /// Built-in matroids.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Checks the predicted maximal degenerations of a finite plane.
    SteinerExperiment(SteinerArgs),
}

#[derive(Args)]
struct MinAboveArgs {
    m: String,
    /// Use the stratified rank-4 search.
    #[arg(long, conflicts_with = "general")]
    rank4: bool,
    /// Use the general search (the default unless M is simple of rank 4).
    #[arg(long)]
    general: bool,
    /// Group the results into orbits under the automorphisms of M.
    #[arg(long)]
    group_by_symmetry: bool,
    /// Report node, candidate and comparison counts and wall time.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_name = "N")]
    limit_nodes: Option<u64>,
}

#[derive(Args)]
struct DecomposeArgs {
    m: String,
    /// Hint file, `paper` for the shipped hint set, or `none` for no facts at all.
    #[arg(long, value_name = "FILE")]
    hints: Option<String>,
    #[arg(long, value_name = "K", default_value_t = 3)]
    max_depth: usize,
    /// Total search nodes over the whole recursion.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
        /// Apply a random relabeling drawn from `--seed`.
        #[arg(long)]
        shuffle: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Projective,
    Affine,
}

#[derive(Args)]
struct SteinerArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    q: usize,
    #[arg(long, value_name = "N")]
    limit_nodes: Option<u64>,
    /// Seconds before the search gives up.
    #[arg(long, value_name = "SECS")]
    time_limit: Option<u64>,
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

/// Output plus whether a budget cut the computation short.
struct Outcome {
    json: Value,
    text: String,
    partial: bool,
}

impl Outcome {
    fn done(json: Value, text: String) -> Outcome {
        Outcome { json, text, partial: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(4);
    }
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize") + "\n"
            } else {
                out.text
            };
            // A closed pipe is not an error of ours.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.partial {
                eprintln!("budget exhausted: results are partial");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("internal invariant failed: {msg}");
            ExitCode::from(4)
        }
    }
}

fn search_options(cli: &Cli, node_limit: Option<u64>) -> SearchOptions {
    SearchOptions {
        node_limit,
        parallel: cli.threads > 1,
        ..SearchOptions::default()
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Compare { a, b } => {
            let (ma, mb) = (load(a)?, load(b)?);
            let leq = compare(&ma, &mb)?;
            Ok(Outcome::done(json!({ "command": "compare", "leq": leq }), format!("{leq}\n")))
        }
        Command::MinAbove(args) => min_above(cli, args),
        Command::Decompose(args) => decompose_cmd(cli, args),
        Command::Isomorphic { a, b } => {
            let (ma, mb) = (load(a)?, load(b)?);
            let map = isomorphism(&ma, &mb);
            let labels: Option<Vec<usize>> = map.as_ref().map(|p| p.iter().map(|x| x + 1).collect());
            let text = match &labels {
                Some(l) => format!("true\n{}\n", join(l, " ")),
                None => "false\n".to_string(),
            };
            Ok(Outcome::done(
                json!({ "command": "isomorphic", "isomorphic": map.is_some(), "map": labels }),
                text,
            ))
        }
        Command::Automorphisms { m } => {
            let m = load(m)?;
            let group = automorphisms(&m);
            let gens: Vec<String> = group.generators.iter().map(cycles).collect();
            let orbits: Vec<Vec<usize>> = group.orbits().iter().map(|o| o.labels()).collect();
            let mut text = format!("order {}\n", group.order);
            for g in &gens {
                text.push_str(g);
                text.push('\n');
            }
            Ok(Outcome::done(
                json!({
                    "command": "automorphisms",
                    "order": group.order.to_string(),
                    "generators": gens,
                    "orbits": orbits,
                }),
                text,
            ))
        }
        Command::Reduce { input } => reduce(input),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries: Vec<Value> = ENTRIES
                    .iter()
                    .map(|e| json!({ "name": e.name, "description": e.description }))
                    .collect();
                let text: String = ENTRIES.iter().map(|e| format!("{:<12} {}\n", e.name, e.description)).collect();
                Ok(Outcome::done(json!({ "command": "catalog-list", "entries": entries }), text))
            }
            CatalogAction::Show { name, shuffle } => {
                let mut m = catalog::catalog(name)?;
                if *shuffle {
                    let mut perm: Perm = (0..m.d()).collect();
                    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(cli.seed));
                    m = m.relabel(&perm);
                }
                Ok(Outcome::done(
                    json!({ "command": "catalog-show", "name": name, "matroid": matroid_json(&m) }),
                    io::to_text(&m),
                ))
            }
        },
        Command::SteinerExperiment(args) => steiner(cli, args),
    }
}

fn min_above(cli: &Cli, args: &MinAboveArgs) -> Result<Outcome, Failure> {
    let m = load(&args.m)?;
    let opts = search_options(cli, args.limit_nodes);
    let use_rank4 = args.rank4 || (!args.general && m.rank() == 4 && m.is_simple());
    let report = if use_rank4 {
        min_above_rank4_with(&m, &opts)?
    } else {
        min_above_general_with(&m, &opts)
    };
    check_report(&report)?;
    let mut out = json!({
        "command": "min-above",
        "method": if use_rank4 { "rank4" } else { "general" },
        "source": matroid_json(&m),
        "complete": report.complete,
        "count": report.maximal.len(),
        "maximal": report.maximal.iter().map(matroid_json).collect::<Vec<_>>(),
    });
    let mut text = format!("{} maximal degenerations{}\n", report.maximal.len(), partial_note(report.complete));
    if let Some(strata) = &report.strata {
        let sizes: Vec<usize> = strata.maximal.iter().map(|s| s.len()).collect();
        text.push_str(&format!("strata {}\n", join(&sizes, " ")));
        out["strata"] = json!(sizes);
    }
    if args.group_by_symmetry {
        let group = automorphisms(&m);
        let classes = group_by_symmetry(&report.maximal, &group.generators);
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        text.push_str(&format!("classes {}\n", join(&sizes, " ")));
        out["classes"] = json!(classes
            .iter()
            .map(|c| json!({
                "size": c.members.len(),
                "members": c.members,
                "representative": matroid_json(&c.representative),
            }))
            .collect::<Vec<_>>());
    }
    if args.stats {
        let s = &report.stats;
        text.push_str(&format!(
            "nodes {} candidates {} comparisons {} wall {:.3}s\n",
            s.nodes,
            s.candidates,
            s.comparisons,
            s.wall.as_secs_f64()
        ));
        out["stats"] = json!({
            "nodes": s.nodes,
            "candidates": s.candidates,
            "comparisons": s.comparisons,
            "wall_ms": s.wall.as_millis() as u64,
        });
    }
    for d in &report.maximal {
        text.push('\n');
        text.push_str(&io::to_text(d));
    }
    Ok(Outcome { json: out, text, partial: !report.complete })
}

/// Every reported matroid must be a matroid strictly below the source.
fn check_report(report: &DegenerationReport) -> Result<(), Failure> {
    for d in &report.maximal {
        let below = compare(d, &report.source).map_err(|e| Failure::Invariant(e.to_string()))?;
        if !below || *d == report.source {
            return Err(Failure::Invariant(format!(
                "reported degeneration {} is not strictly below the input",
                io::to_json(d)
            )));
        }
    }
    Ok(())
}

fn decompose_cmd(cli: &Cli, args: &DecomposeArgs) -> Result<Outcome, Failure> {
    let m = load(&args.m)?;
    let hints = match args.hints.as_deref() {
        None => Hints::facts(),
        Some("paper") => Hints::shipped(),
        Some("none") => Hints::none(),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Hints::from_json(&text)?
        }
    };
    let opts = DecomposeOptions {
        max_depth: args.max_depth,
        node_budget: args.budget,
        search: search_options(cli, None),
    };
    let d = decompose(&m, &hints, &opts)?;
    Ok(Outcome {
        text: decomposition_text(&d),
        json: decomposition_json(&d),
        partial: !d.complete,
    })
}

fn decomposition_json(d: &Decomposition) -> Value {
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| {
            json!({
                "matroid": matroid_json(&c.matroid),
                "hash": canonical_form(&c.matroid).hash(),
                "status": c.status,
                "realizable": c.realizable,
                "closed": c.closed,
                "possibly_redundant_below": c.possibly_redundant_below,
                "provenance": c.provenance,
            })
        })
        .collect();
    json!({
        "command": "decompose",
        "source": matroid_json(&d.source),
        "complete": d.complete,
        "pruned": d.pruned,
        "nodes": d.nodes,
        "count": d.components.len(),
        "components": components,
    })
}

fn decomposition_text(d: &Decomposition) -> String {
    let mut text = format!("{} components{}\n", d.components.len(), partial_note(d.complete));
    for (i, c) in d.components.iter().enumerate() {
        let loops = c.matroid.loops();
        text.push_str(&format!(
            "\n[{}] rank {} on {} points, {} loops, realizable {:?}, status {:?}{}\n",
            i + 1,
            c.matroid.rank(),
            c.matroid.d(),
            loops.len(),
            c.realizable,
            c.status,
            if c.possibly_redundant_below.is_empty() {
                String::new()
            } else {
                let idx: Vec<usize> = c.possibly_redundant_below.iter().map(|j| j + 1).collect();
                format!(", possibly redundant (below {})", join(&idx, ","))
            }
        ));
        text.push_str(&io::to_text(&c.matroid));
    }
    text
}

fn reduce(input: &str) -> Result<Outcome, Failure> {
    let raw = read_input(input)?;
    let h = match serde_json::from_str::<HypergraphJson>(&raw) {
        Ok(j) => LabeledHypergraph::try_from(&j)?,
        Err(_) => {
            let m = load(input)?;
            LabeledHypergraph::of_matroid(&m, m.rank()).remove_vertices(m.loops())
        }
    };
    let loops: Set = h.of_type(0).fold(Set::EMPTY, |a, b| a | b);
    let (reduced, q) = h.remove_vertices(loops).reduce()?;
    let classes: Vec<Vec<usize>> = q.classes.iter().map(|c| c.labels()).collect();
    let mut text = format!("{} points after reduction\n", classes.len());
    for (i, c) in classes.iter().enumerate() {
        text.push_str(&format!("{} <- {}\n", i + 1, join(c, " ")));
    }
    for e in reduced.edges() {
        text.push_str(&format!("{} type {}\n", join(&e.set.labels(), " "), e.ty));
    }
    Ok(Outcome::done(
        json!({
            "command": "reduce",
            "removed_loops": loops.labels(),
            "classes": classes,
            "hypergraph": serde_json::to_value(HypergraphJson::from(&reduced)).expect("plain data"),
        }),
        text,
    ))
}

fn steiner(cli: &Cli, args: &SteinerArgs) -> Result<Outcome, Failure> {
    let kind = match args.kind {
        Kind::Projective => PlaneKind::Projective,
        Kind::Affine => PlaneKind::Affine,
    };
    let mut opts = search_options(cli, args.limit_nodes);
    opts.time_limit = args.time_limit.map(Duration::from_secs);
    let r = steiner_experiment(kind, args.q, &opts)?;
    let verdict = match r.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Timeout => "TIMEOUT",
    };
    let text = format!(
        "{:?} plane q={} on {} points, {} blocks: expected {}, found {}, missing {}, unexpected {}: {verdict}\n",
        r.kind,
        r.q,
        r.d,
        r.blocks,
        r.expected.len(),
        r.search.maximal.len(),
        r.missing.len(),
        r.unexpected.len()
    );
    Ok(Outcome {
        json: json!({
            "command": "steiner-experiment",
            "kind": r.kind,
            "q": r.q,
            "d": r.d,
            "blocks": r.blocks,
            "expected": r.expected.len(),
            "found": r.search.maximal.len(),
            "missing": r.missing.iter().map(matroid_json).collect::<Vec<_>>(),
            "unexpected": r.unexpected.iter().map(matroid_json).collect::<Vec<_>>(),
            "verdict": r.verdict,
        }),
        text,
        partial: r.verdict == Verdict::Timeout,
    })
}

/// `catalog:NAME`, `-` for standard input, or a file in text or JSON form.
fn load(spec: &str) -> Result<Matroid, Failure> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok(catalog::catalog(name)?);
    }
    Ok(io::parse_matroid(&read_input(spec)?)?)
}

fn read_input(spec: &str) -> Result<String, Failure> {
    if spec.starts_with("catalog:") {
        return Ok(String::new());
    }
    if spec == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("{spec}: {e}")))
}

fn matroid_json(m: &Matroid) -> Value {
    serde_json::to_value(MatroidJson::from(m)).expect("plain data")
}

fn partial_note(complete: bool) -> &'static str {
    if complete {
        ""
    } else {
        " (partial)"
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Cycle notation on 1-based labels, fixed points omitted; `()` for the identity.
fn cycles(p: &Perm) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        out.push_str(&format!("({})", join(&cycle, " ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
