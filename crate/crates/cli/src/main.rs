use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hamres_core::bench::{median_micros, run_bench, write_csv, BenchConfig, BenchError, Outcome};
use hamres_core::groebner::GroebnerConfig;
use hamres_core::hamgraph::{
    brute_force_is_resolving, embed, format_vertex, parse_set_file, parse_vertex_list,
    HammingGraph, Vertex,
};
use hamres_core::polycore::MonomialOrder;
use hamres_core::resolver::{
    build_system, check_resolving_enumeration, check_resolving_hypercube, find_kernel_vector,
    GroebnerChecker, ResolverError, DEFAULT_ENUM_BUDGET,
};
use hamres_core::setops::{
    generate_resolving, reduce_generative, reduce_top_down, RandomSource, SetOpsConfig,
};
use hamres_core::verdict::{Method, ResolvabilityVerdict, Witness};

const EXIT_NOT_RESOLVING: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

/// Largest graph the bench harness labels with brute force.
const BENCH_VERTEX_LIMIT: u64 = 1 << 16;

/// Search steps spent looking for a witness after a verdict that has none.
const WITNESS_STEPS: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "hamres", version, about = "Resolving sets of Hamming graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a set resolves H(k, a).
    Check(CheckArgs),
    /// Shrink a resolving set.
    Reduce(ReduceArgs),
    /// Build a resolving set from random vertices.
    Generate(GenerateArgs),
    /// Distance vectors of vertices with respect to a reference set, as CSV.
    Embed(EmbedArgs),
    /// Time the checkers on generated sets and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Word length.
    #[arg(long)]
    k: usize,
    /// Alphabet size.
    #[arg(long)]
    a: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SetArgs {
    /// Inline list, e.g. `100,101,001` (`;`-separated when a > 10).
    #[arg(long)]
    vertices: Option<String>,
    /// File with one vertex per line; `#` starts a comment.
    #[arg(long)]
    set: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, value_enum, default_value_t = Ordering::Lex)]
    ordering: Ordering,
    /// Most admissible vectors an enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET as u64)]
    enum_budget: u64,
    /// Most S-pair reductions per Gröbner basis computation.
    #[arg(long, default_value_t = GroebnerConfig::default().max_reductions)]
    groebner_budget: u64,
}

impl BudgetArgs {
    fn groebner(&self) -> GroebnerConfig {
        GroebnerConfig {
            max_reductions: self.groebner_budget,
        }
    }

    fn setops(&self) -> SetOpsConfig {
        SetOpsConfig {
            ordering: self.ordering.into(),
            groebner: self.groebner(),
            enum_budget: u128::from(self.enum_budget),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Ordering {
    Lex,
    Grlex,
    Grevlex,
}

impl From<Ordering> for MonomialOrder {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Lex => MonomialOrder::Lex,
            Ordering::Grlex => MonomialOrder::GrLex,
            Ordering::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    set: SetArgs,
    /// groebner, bruteforce, enumeration or hypercube.
    #[arg(long, default_value = "groebner")]
    method: Method,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Print A, rref(A), P and the shifted polynomials before the verdict.
    #[arg(long)]
    dump: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Topdown,
    Generative,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    set: SetArgs,
    #[arg(long, value_enum, default_value_t = Strategy::Topdown)]
    strategy: Strategy,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    set: SetArgs,
    /// Vertices to embed, one per line. Defaults to every vertex of the graph.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Share of trials that use a resolving set.
    #[arg(long, default_value_t = 0.5)]
    fraction_resolving: f64,
    /// Comma-separated methods; defaults to all that apply.
    #[arg(long, value_delimiter = ',')]
    methods: Vec<Method>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV destination; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budgets: BudgetArgs,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<ResolverError> for Failure {
    fn from(e: ResolverError) -> Self {
        let code = match e {
            _ if e.is_budget() => EXIT_BUDGET,
            ResolverError::NotResolving => EXIT_NOT_RESOLVING,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e)
    }
}

fn graph(args: &GraphArgs) -> Result<HammingGraph, Failure> {
    HammingGraph::new(args.k, args.a).map_err(Failure::usage)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_set(g: &HammingGraph, args: &SetArgs) -> Result<Vec<Vertex>, Failure> {
    let set = match (&args.vertices, &args.set) {
        (Some(list), _) => parse_vertex_list(g, list).map_err(Failure::usage)?,
        (None, Some(path)) => parse_set_file(g, &read_file(path)?)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        (None, None) => unreachable!("clap requires one set source"),
    };
    if set.is_empty() {
        return Err(Failure::usage("the vertex set is empty"));
    }
    Ok(set)
}

fn print_vertices(g: &HammingGraph, r: &[Vertex]) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    for v in r {
        writeln!(out, "{}", format_vertex(g, v))?;
    }
    Ok(())
}

/// A colliding pair for a failed set, taken from the verdict if it has one.
fn witness_pair(
    g: &HammingGraph,
    r: &[Vertex],
    verdict: &ResolvabilityVerdict,
) -> Result<Option<(Vertex, Vertex)>, Failure> {
    match &verdict.witness {
        Some(Witness::Pair(x, y)) => Ok(Some((x.clone(), y.clone()))),
        Some(Witness::Kernel(z)) => Ok(Some(z.vertex_pair())),
        None => {
            let sys = build_system(g, r)?;
            Ok(find_kernel_vector(&sys, WITNESS_STEPS).map(|z| z.vertex_pair()))
        }
    }
}

fn cmd_check(args: &CheckArgs) -> Result<u8, Failure> {
    let g = graph(&args.graph)?;
    let r = read_set(&g, &args.set)?;
    let b = &args.budgets;
    let sys = build_system(&g, &r)?;
    if args.dump {
        print!("{}", sys.dump(b.ordering.into()));
    }
    let verdict = match args.method {
        Method::Groebner => {
            GroebnerChecker::new(&g, b.ordering.into(), b.groebner())?.check(&sys)?
        }
        Method::BruteForce => brute_force_is_resolving(&g, &r).map_err(ResolverError::from)?,
        Method::Enumeration => check_resolving_enumeration(&sys, u128::from(b.enum_budget))?,
        Method::Hypercube => {
            check_resolving_hypercube(&g, &r, u128::from(b.enum_budget), &b.groebner())?
        }
    };
    if verdict.resolving {
        println!("resolving");
        return Ok(0);
    }
    println!("not resolving");
    if let Some((x, y)) = witness_pair(&g, &r, &verdict)? {
        println!(
            "witness: {} {}",
            format_vertex(&g, &x),
            format_vertex(&g, &y)
        );
    }
    Ok(EXIT_NOT_RESOLVING)
}

fn cmd_reduce(args: &ReduceArgs) -> Result<u8, Failure> {
    let g = graph(&args.graph)?;
    let r = read_set(&g, &args.set)?;
    let mut rng = RandomSource::new(args.seed);
    let cfg = args.budgets.setops();
    let out = match args.strategy {
        Strategy::Topdown => reduce_top_down(&g, &r, &mut rng, &cfg)?,
        Strategy::Generative => reduce_generative(&g, &r, &mut rng, &cfg)?,
    };
    print_vertices(&g, &out)?;
    Ok(0)
}

fn cmd_generate(args: &GenerateArgs) -> Result<u8, Failure> {
    let g = graph(&args.graph)?;
    let out = generate_resolving(
        &g,
        &mut RandomSource::new(args.seed),
        &args.budgets.setops(),
    )?;
    print_vertices(&g, &out)?;
    Ok(0)
}

fn cmd_embed(args: &EmbedArgs) -> Result<u8, Failure> {
    let g = graph(&args.graph)?;
    let r = read_set(&g, &args.set)?;
    let inputs = match &args.input {
        Some(path) => parse_set_file(&g, &read_file(path)?)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => g.vertices().map_err(Failure::usage)?.collect(),
    };
    let rows = embed(&g, &r, &inputs).map_err(Failure::usage)?;
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    let mut header = vec!["vertex".to_string()];
    header.extend((1..=r.len()).map(|i| format!("d{i}")));
    let csv_err = |e: csv::Error| Failure::usage(e);
    w.write_record(&header).map_err(csv_err)?;
    for (v, d) in inputs.iter().zip(rows) {
        let mut rec = vec![format_vertex(&g, v)];
        rec.extend(d.0.iter().map(usize::to_string));
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(0)
}

fn cmd_bench(args: &BenchArgs) -> Result<u8, Failure> {
    let g = graph(&args.graph)?;
    if g.vertex_count().is_none_or(|n| n > BENCH_VERTEX_LIMIT) {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: format!(
                "H({},{}) is too large to label with brute force",
                g.k(),
                g.a()
            ),
        });
    }
    let mut cfg = BenchConfig::new(g.k(), g.a(), args.trials);
    if !args.methods.is_empty() {
        cfg.methods = args.methods.clone();
    }
    cfg.fraction_resolving = args.fraction_resolving;
    cfg.seed = args.seed;
    cfg.ordering = args.budgets.ordering.into();
    cfg.groebner = args.budgets.groebner();
    cfg.enum_budget = u128::from(args.budgets.enum_budget);
    let records = match run_bench(&cfg) {
        Ok(r) => r,
        Err(e @ BenchError::Disagreement { .. }) => {
            return Err(Failure {
                code: EXIT_DISAGREEMENT,
                message: e.to_string(),
            })
        }
        Err(BenchError::Resolver(e)) => return Err(e.into()),
        Err(e) => return Err(Failure::usage(e)),
    };
    let written = match &args.out {
        Some(path) => write_csv(&records, fs::File::create(path)?),
        None => write_csv(&records, io::stdout().lock()),
    };
    written.map_err(Failure::usage)?;
    for &m in &cfg.methods {
        let med =
            |o| median_micros(&records, m, o).map_or("-".to_string(), |t| format!("{t:.1}us"));
        eprintln!(
            "{m}: median {} on resolving sets, {} on non-resolving sets",
            med(Outcome::Resolving),
            med(Outcome::NotResolving)
        );
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("HAMRES_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Embed(a) => cmd_embed(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hamres: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
