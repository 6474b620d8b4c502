use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mulink::{
    bench_grids, check_sweep, curve_count, enumerate_conservative, extend_coloring, generate,
    medial, mu_coloring, mu_nullity, mu_regions, mu_report, mu_trace, mu_tutte, simplify,
    DualTreeOrder, Family, PlaneGraph, DEFAULT_COLORING_CAP, DEFAULT_SUITE,
    DEFAULT_TUTTE_EDGE_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "mulink",
    version,
    about = "Count the closed curves of the medial diagram of a plane multigraph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Narrate progress on stderr.
    #[arg(long, global = true)]
    log: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the curve count, cross-checking every method that fits.
    Mu(MuArgs),
    /// Sweep an instance suite and verify that all methods agree.
    Check(CheckArgs),
    /// List the conservative vertex colorings of a graph.
    Colorings(ColoringsArgs),
    /// Reduce a medial diagram with curve-preserving local moves.
    Simplify(SimplifyArgs),
    /// Describe a graph and its medial diagram.
    Info(InputArgs),
    /// Time the scalable methods on square grids.
    Bench(BenchArgs),
    /// Emit a generated instance in .pg format.
    Gen(GenArgs),
}

const FAMILY_USAGE: &str = concat!(
    "cycle N | path N | grid R C | wheel N | theta K | bouquet K | complete4 | random-grid R C",
    " | empty"
);

#[derive(Args)]
struct InputArgs {
    /// Path to a .pg file, or `-` for stdin.
    input: Option<String>,
    /// Generate the instance instead of reading one.
    #[arg(long, num_args = 1.., value_name = FAMILY_USAGE, conflicts_with = "input")]
    gen: Option<Vec<String>>,
    /// Seed for `--gen random-grid`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Trace,
    Nullity,
    Regions,
    Coloring,
    Tutte,
    All,
}

#[derive(Args)]
struct MuArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which method to run; `all` cross-checks them.
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    method: MethodArg,
    /// Edge budget for the Tutte-polynomial method.
    #[arg(long, default_value_t = DEFAULT_TUTTE_EDGE_BUDGET)]
    max_edges: usize,
    /// Emit JSON (includes per-method timings).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Instance suite, e.g. "cycles:2..8,grids:2x2..4x4,complete4".
    #[arg(long, default_value = DEFAULT_SUITE)]
    suite: String,
    /// Extra random grid-subgraph instances.
    #[arg(long, default_value_t = 0)]
    random: usize,
    /// Seed for the random instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge budget for the Tutte-polynomial method.
    #[arg(long, default_value_t = DEFAULT_TUTTE_EDGE_BUDGET)]
    max_edges: usize,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ColoringsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print at most this many colorings.
    #[arg(long, default_value_t = 64)]
    limit: usize,
    /// Also print each coloring's region labels.
    #[arg(long)]
    extend: bool,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SimplifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Stop after this many moves.
    #[arg(long, default_value_t = 10_000)]
    budget: usize,
    /// Emit JSON (includes the move list).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Grid side lengths.
    #[arg(long, value_delimiter = ',', default_value = "10,20,50,100")]
    sides: Vec<usize>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Family and its parameters.
    #[arg(num_args = 1.., value_name = FAMILY_USAGE, required = true)]
    family: Vec<String>,
    /// Seed for `random-grid`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

type CliError = Box<dyn std::error::Error>;

fn parse_family(tokens: &[String], seed: u64) -> Result<(String, PlaneGraph), CliError> {
    if tokens.first().map(String::as_str) == Some("empty") {
        return Ok(("empty".into(), PlaneGraph::empty()));
    }
    let tokens: Vec<&str> = tokens.iter().map(String::as_str).collect();
    let (name, family) = Family::parse_spec(&tokens, seed)?;
    Ok((name, generate(family)?))
}

impl InputArgs {
    fn load(&self) -> Result<(String, PlaneGraph), CliError> {
        if let Some(tokens) = &self.gen {
            return parse_family(tokens, self.seed);
        }
        match self.input.as_deref() {
            Some("-") => {
                let mut text = String::new();
                std::io::stdin().read_to_string(&mut text)?;
                Ok(("stdin".into(), PlaneGraph::parse(&text)?))
            }
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                Ok((path.to_string(), PlaneGraph::parse(&text)?))
            }
            None => Err(format!("no input: give a .pg file, `-`, or --gen ({FAMILY_USAGE})").into()),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when stdout closes early (`mulink gen ... | head`),
    // like any other filter; Rust's default turns EPIPE into a panic.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Mu(args) => cmd_mu(cli, args),
        Command::Check(args) => cmd_check(args),
        Command::Colorings(args) => cmd_colorings(cli, args),
        Command::Simplify(args) => cmd_simplify(cli, args),
        Command::Info(args) => cmd_info(cli, args),
        Command::Bench(args) => cmd_bench(args),
        Command::Gen(args) => {
            let (name, g) = parse_family(&args.family, args.seed)?;
            if cli.log {
                eprintln!(
                    "[gen] {name}: {} vertices, {} edges",
                    g.vertex_count(),
                    g.edge_count()
                );
            }
            print!("{}", g.to_pg_string());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_logged(cli: &Cli, input: &InputArgs) -> Result<(String, PlaneGraph), CliError> {
    let (name, g) = input.load()?;
    if cli.log {
        eprintln!(
            "[load] {name}: {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        );
    }
    Ok((name, g))
}

fn cmd_mu(cli: &Cli, args: &MuArgs) -> Result<ExitCode, CliError> {
    let (name, g) = load_logged(cli, &args.input)?;
    if args.method != MethodArg::All {
        let start = Instant::now();
        let mu = match args.method {
            MethodArg::Trace => mu_trace(&g)?,
            MethodArg::Nullity => mu_nullity(&g)?,
            MethodArg::Regions => mu_regions(&g)?,
            MethodArg::Coloring => mu_coloring(&g, DEFAULT_COLORING_CAP)?,
            MethodArg::Tutte => mu_tutte(&g, args.max_edges)?,
            MethodArg::All => unreachable!(),
        };
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let method = ["trace", "nullity", "regions", "coloring", "tutte"]
            [args.method as usize];
        if cli.log {
            eprintln!("[mu] {method} took {ms:.2} ms");
        }
        if args.json {
            let line = serde_json::json!({
                "instance": name, "vertices": g.vertex_count(), "edges": g.edge_count(),
                "method": method, "mu": mu, "ms": ms,
            });
            println!("{line}");
        } else {
            println!("mu = {mu}");
        }
        return Ok(ExitCode::SUCCESS);
    }

    let report = mu_report(&g, &name, args.max_edges, args.json || cli.log)?;
    if cli.log {
        if let Some(t) = &report.timings_ms {
            eprintln!(
                "[mu] trace {:.2} ms, nullity {:.2} ms, regions {:.2} ms",
                t.trace, t.nullity, t.regions
            );
        }
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        let opt = |v: Option<usize>| v.map_or("skipped".into(), |v| v.to_string());
        println!("{}: V={} E={}", report.instance, report.vertices, report.edges);
        println!("  trace    = {}", report.mu_trace);
        println!("  nullity  = {}", report.mu_nullity);
        println!("  regions  = {}", report.mu_regions);
        println!("  coloring = {}", opt(report.mu_coloring));
        println!("  tutte    = {}", opt(report.mu_tutte));
        println!("agree: {}", if report.agree { "yes" } else { "NO" });
    }
    Ok(if report.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode, CliError> {
    let outcome = check_sweep(&args.suite, args.random, args.seed, args.max_edges)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&outcome)?);
    } else {
        for line in &outcome.lines {
            println!("{line}");
        }
        if outcome.all_agree() {
            println!("checked {} instances: all methods agree", outcome.instances);
        } else {
            println!(
                "checked {} instances: {} MISMATCHES",
                outcome.instances, outcome.mismatches
            );
        }
    }
    Ok(if outcome.all_agree() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_colorings(cli: &Cli, args: &ColoringsArgs) -> Result<ExitCode, CliError> {
    let (name, g) = load_logged(cli, &args.input)?;
    let colorings = enumerate_conservative(&g, usize::MAX)?;
    let dim = colorings.len().trailing_zeros() as usize;
    let flat = args.extend.then(|| medial(&g)).transpose()?;
    let extended: Vec<Option<String>> = colorings
        .iter()
        .take(args.limit)
        .map(|c| {
            flat.as_ref()
                .map(|f| {
                    extend_coloring(&g, f, c, DualTreeOrder::BreadthFirst)
                        .map(|labels| labels.to_string())
                })
                .transpose()
        })
        .collect::<Result<_, _>>()?;

    if args.json {
        let listed: Vec<serde_json::Value> = colorings
            .iter()
            .take(args.limit)
            .zip(&extended)
            .map(|(c, ext)| match ext {
                Some(labels) => serde_json::json!({"vertices": c.to_string(), "regions": labels}),
                None => serde_json::json!(c.to_string()),
            })
            .collect();
        let out = serde_json::json!({
            "instance": name, "dim": dim, "count": colorings.len(), "colorings": listed,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("dim = {dim}, count = {}", colorings.len());
        for (c, ext) in colorings.iter().take(args.limit).zip(&extended) {
            match ext {
                Some(labels) => println!("{c} -> regions {labels}"),
                None => println!("{c}"),
            }
        }
        if colorings.len() > args.limit {
            println!("... ({} more)", colorings.len() - args.limit);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_simplify(cli: &Cli, args: &SimplifyArgs) -> Result<ExitCode, CliError> {
    let (name, g) = load_logged(cli, &args.input)?;
    let flat = medial(&g)?;
    let before = (flat.crossings(), flat.free_circles());
    let mu = curve_count(&flat);
    let outcome = simplify(&flat, args.budget);
    let after = (outcome.flat.crossings(), outcome.flat.free_circles());
    assert_eq!(
        curve_count(&outcome.flat),
        mu,
        "moves must preserve the curve count"
    );

    if args.json {
        let out = serde_json::json!({
            "instance": name,
            "crossings_before": before.0, "crossings_after": after.0,
            "free_circles_before": before.1, "free_circles_after": after.1,
            "mu": mu,
            "fully_reduced": outcome.fully_reduced,
            "moves": outcome.applied,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!(
            "crossings {} -> {}, free circles {} -> {}, mu = {mu}",
            before.0, after.0, before.1, after.1
        );
        for m in &outcome.applied {
            println!("  {}", serde_json::to_string(m)?);
        }
        println!(
            "{} moves, {}",
            outcome.applied.len(),
            if outcome.fully_reduced {
                "fully reduced"
            } else {
                "budget exhausted"
            }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_info(cli: &Cli, args: &InputArgs) -> Result<ExitCode, CliError> {
    let (name, g) = load_logged(cli, args)?;
    println!("instance   {name}");
    println!("vertices   {}", g.vertex_count());
    println!("edges      {}", g.edge_count());
    println!("components {}", g.components().count);
    if let Err(e) = g.check_planar() {
        println!("planar     no ({e})");
        return Err(e.into());
    }
    println!("planar     yes");
    let faces = g.faces();
    let outer: Vec<usize> = g.outer_face_ids().into_iter().flatten().collect();
    println!("faces      {} (outer: {outer:?})", faces.len());
    let flat = medial(&g)?;
    let shading = flat.checkerboard();
    println!("crossings  {}", flat.crossings());
    println!(
        "regions    {} ({} shaded, outer: {:?})",
        flat.region_count(),
        shading.shaded.iter().filter(|&&s| s).count(),
        flat.outer_regions()
    );
    println!("circles    {}", flat.free_circles());
    println!("mu         {}", curve_count(&flat));
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode, CliError> {
    let lines = bench_grids(&args.sides)?;
    let mut agree = true;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&lines)?);
        agree = lines.iter().all(|l| l.mu_trace == l.mu_nullity);
    } else {
        for l in &lines {
            let verdict = if l.mu_trace == l.mu_nullity {
                format!("mu={}", l.mu_trace)
            } else {
                agree = false;
                format!("MISMATCH trace={} nullity={}", l.mu_trace, l.mu_nullity)
            };
            println!(
                "{} V={} E={} {verdict} trace {:.1} ms, nullity {:.1} ms",
                l.instance, l.vertices, l.edges, l.trace_ms, l.nullity_ms
            );
        }
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
