//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 no node is
//! reachable from every source.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, SweepConfig};
use crate::fixtures;
use crate::graph::{load_instance, Graph, SourceSet};
use crate::graphgen::{self, EdgeModel, EdgeRule, GenConfig, GenTemplate};
use crate::search::{
    self, format_trace, AStarConfig, Objective, SolveError, SolveResult, Strategy,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_INTERSECTION: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "meetpoint",
    version,
    about = "Fair meeting-node search for S sources"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find the center or centroid of a source set.
    Solve(SolveArgs),
    /// Write the per-round event trace, optionally with DOT snapshots.
    Trace(TraceArgs),
    /// Generate a random instance.
    Gen(GenArgs),
    /// Run the randomized sweep and write CSV and table files.
    Bench(BenchArgs),
    /// Compare the straight-line estimate with true distances.
    CheckAstar(CheckAstarArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Center,
    Centroid,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Center => Objective::Center,
            ObjectiveArg::Centroid => Objective::Centroid,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Full,
    Early,
    Astar,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Graph file; the bundled worked example when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Comma-separated source ids; defaults to the file's `# sources:` line.
    #[arg(long)]
    sources: Option<String>,
    /// Reverse every arc, measuring travel toward the sources.
    #[arg(long)]
    reverse: bool,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value = "center")]
    objective: ObjectiveArg,
    /// astar with --objective centroid is experimental: it sums distances
    /// finalized under the center heuristic.
    #[arg(long, value_enum, default_value = "early")]
    strategy: StrategyArg,
    /// Heuristic scale for --strategy astar.
    #[arg(long, default_value_t = 1.0)]
    speed_divisor: f64,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    query: QueryArgs,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    query: QueryArgs,
    /// Trace output file; standard output when omitted.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Directory for `round_NNN.dot` snapshots.
    #[arg(long)]
    dot_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "edge_model", multiple = false)]
struct EdgeArgs {
    /// Exact number of directed arcs per instance.
    #[arg(long, group = "edge_model")]
    edges: Option<usize>,
    /// Probability of each ordered pair being an arc.
    #[arg(long, group = "edge_model")]
    density: Option<f64>,
}

impl EdgeArgs {
    fn rule(&self) -> EdgeRule {
        match (self.edges, self.density) {
            (Some(m), _) => EdgeRule::Count(m),
            (_, Some(p)) => EdgeRule::Density(p),
            _ => EdgeRule::Default,
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    vertices: usize,
    #[arg(long, default_value_t = 2)]
    num_sources: usize,
    #[command(flatten)]
    edge_model: EdgeArgs,
    #[arg(long, default_value_t = 1)]
    weight_min: u64,
    #[arg(long, default_value_t = 100)]
    weight_max: u64,
    /// Also place nodes uniformly in a square of this side.
    #[arg(long)]
    coords: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write `instance.graph` here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [20usize, 50, 100, 500])]
    vertices_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 5, 10])]
    sources_list: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    iterations: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    edge_model: EdgeArgs,
    /// Directory for `stats.csv` and `tables.txt`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit non-zero when any trend check fails.
    #[arg(long)]
    check_trends: bool,
}

#[derive(Debug, Args)]
struct CheckAstarArgs {
    /// Graph file with a coords block.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    speed_divisor: f64,
    /// Random ordered pairs to test; every pair when omitted.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

/// A failure carrying its exit code and one-line message.
struct Failure(i32, String);

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Failure(EXIT_USAGE, msg.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NoIntersection => Failure(EXIT_NO_INTERSECTION, e.to_string()),
            other => Failure::usage(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(a, stdout),
        Command::Trace(a) => cmd_trace(a, stdout),
        Command::Gen(a) => cmd_gen(a, stdout, stderr),
        Command::Bench(a) => cmd_bench(a, stdout),
        Command::CheckAstar(a) => cmd_check_astar(a, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn load(args: &InstanceArgs) -> Result<(Graph, SourceSet), Failure> {
    let (mut graph, listed) = match &args.graph {
        Some(path) => {
            load_instance(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => {
            let (g, s) = fixtures::worked_example();
            (g, Some(s.as_slice().to_vec()))
        }
    };
    if args.reverse {
        graph = graph.reversed();
    }
    let sources = match (&args.sources, listed) {
        (Some(csv), _) => SourceSet::parse(&graph, csv),
        (None, Some(ids)) => SourceSet::new(&graph, ids),
        (None, None) => {
            return Err(Failure::usage(
                "no --sources given and none in the graph file",
            ))
        }
    }
    .map_err(Failure::usage)?;
    Ok((graph, sources))
}

fn strategy(q: &QueryArgs) -> Strategy {
    match q.strategy {
        StrategyArg::Full => Strategy::Full,
        StrategyArg::Early => Strategy::Early,
        StrategyArg::Astar => Strategy::AStar(AStarConfig::with_speed_divisor(q.speed_divisor)),
    }
}

fn report(out: &mut dyn Write, sources: &SourceSet, r: &SolveResult) -> std::io::Result<()> {
    writeln!(out, "node={} value={}", r.node, r.value)?;
    for (j, s) in sources.iter().enumerate() {
        writeln!(
            out,
            "source {s}: dist={} explored={}",
            r.per_source_dist[j], r.per_source_explored[j]
        )?;
    }
    writeln!(
        out,
        "explored={} of {} ({}%)",
        r.explored,
        r.explored_possible,
        r.explored_pct()
    )
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> CmdResult {
    let (graph, sources) = load(&a.query.instance)?;
    let r = search::solve(
        &graph,
        &sources,
        a.query.objective.into(),
        strategy(&a.query),
        false,
    )?;
    report(out, &sources, &r)?;
    Ok(EXIT_OK)
}

fn cmd_trace(a: TraceArgs, out: &mut dyn Write) -> CmdResult {
    let (graph, sources) = load(&a.query.instance)?;
    let objective = a.query.objective.into();
    let mut engine = search::start(&graph, &sources, objective, strategy(&a.query), true)?;
    if let Some(dir) = &a.dot_dir {
        fs::create_dir_all(dir)?;
        write_snapshot(dir, 0, &graph, &engine.dist_labels())?;
        while !engine.is_done() {
            engine.step_round();
            write_snapshot(dir, engine.round(), &graph, &engine.dist_labels())?;
        }
    }
    let result = engine.finish();
    let trace = match &result {
        Ok(r) => r.trace.clone().unwrap_or_default(),
        Err(_) => {
            // The engine is consumed on failure; rerun for the events.
            let mut again = search::start(&graph, &sources, objective, strategy(&a.query), false)?;
            let mut events = Vec::new();
            while !again.is_done() {
                events.extend(again.step_round());
            }
            events
        }
    };
    let text = format_trace(&trace);
    match &a.trace {
        Some(path) => {
            fs::write(path, text)?;
            if let Ok(r) = &result {
                report(out, &sources, r)?;
            }
            writeln!(out, "trace: {} events -> {}", trace.len(), path.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    result?;
    Ok(EXIT_OK)
}

fn write_snapshot(
    dir: &Path,
    round: usize,
    graph: &Graph,
    labels: &[String],
) -> std::io::Result<()> {
    fs::write(
        dir.join(format!("round_{round:03}.dot")),
        graph.export_dot(Some(labels)),
    )
}

fn seed_or_random(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(rand::random)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let seed = seed_or_random(a.seed);
    let template = GenTemplate {
        edges: a.edge_model.rule(),
        weight_min: a.weight_min,
        weight_max: a.weight_max,
        ..GenTemplate::default()
    };
    let cfg = GenConfig {
        coords: a.coords,
        ..template.config(a.vertices, a.num_sources, seed)
    };
    let (graph, sources) = graphgen::generate(&cfg).map_err(Failure::usage)?;
    let text = format!(
        "# seed: {seed}\n{}",
        graphgen::instance_text(&graph, &sources)
    );
    match &a.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let path = dir.join("instance.graph");
            fs::write(&path, text)?;
            writeln!(
                out,
                "seed={seed} n={} arcs={} sources={} -> {}",
                graph.node_count(),
                graph.edges().len(),
                sources.to_csv(),
                path.display()
            )?;
        }
        None => {
            writeln!(err, "seed={seed}")?;
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> CmdResult {
    let seed = seed_or_random(a.seed);
    let cfg = SweepConfig {
        sources_list: a.sources_list,
        vertices_list: a.vertices_list,
        iterations: a.iterations,
        gen: GenTemplate {
            edges: a.edge_model.rule(),
            ..GenTemplate::default()
        },
        seed,
    };
    if let EdgeRule::Density(p) = cfg.gen.edges {
        // Surface a bad density before any cell runs.
        let probe = GenConfig {
            edges: EdgeModel::Density(p),
            ..GenConfig::new(2, 1, 0)
        };
        probe.validate().map_err(Failure::usage)?;
    }
    let result = bench::run_sweep(&cfg).map_err(Failure::usage)?;
    let table = result.to_text_table();
    writeln!(out, "seed={seed} iterations={}", cfg.iterations)?;
    out.write_all(table.as_bytes())?;
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("stats.csv"), result.to_csv())?;
        fs::write(dir.join("tables.txt"), &table)?;
        writeln!(out, "wrote {}", dir.join("stats.csv").display())?;
    }
    if a.check_trends {
        let report = bench::trend_checks(&result.stats());
        for c in &report.checks {
            writeln!(
                out,
                "[{}] {}",
                if c.passed { "ok" } else { "FAIL" },
                c.description
            )?;
        }
        if !report.all_passed() {
            return Err(Failure::usage(format!(
                "{} trend checks failed",
                report.failures().count()
            )));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check_astar(a: CheckAstarArgs, out: &mut dyn Write) -> CmdResult {
    let (graph, _) = load_instance(&a.graph)
        .map_err(|e| Failure::usage(format!("{}: {e}", a.graph.display())))?;
    let seed = seed_or_random(a.seed);
    let cfg = AStarConfig::with_speed_divisor(a.speed_divisor);
    let rep = search::admissibility_check(&graph, &cfg, a.samples, seed)?;
    writeln!(
        out,
        "pairs={} violations={} admissible={} seed={seed}",
        rep.pairs_checked,
        rep.violations.len(),
        rep.is_admissible()
    )?;
    for v in &rep.violations {
        writeln!(
            out,
            "violation {} -> {}: estimate={} distance={}",
            v.from, v.to, v.estimate, v.distance
        )?;
    }
    Ok(EXIT_OK)
}
