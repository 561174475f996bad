use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cograph::difference::{DEFAULT_INTEGER_BOUND, DEFAULT_MAX_MODULUS};
use cograph::group::Strategy;
use cograph::pl::Minimality;
use cograph::Exec;
use cograph_cli::{ComposeOp, Ctx, Output, RepresentMode, TcArgs, SCHEMA};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cograph", version, about = "Edge-colored complete graphs: catalogues, realizations and chain groups")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Re-run postcondition checks; exit 1 if any fails.
    #[arg(long, global = true)]
    verify: bool,
    /// Worker threads (1 runs sequentially).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Points {
    #[arg(long)]
    points: usize,
    /// Allow sizes above the default limit.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Number of cographs on N points up to isomorphism.
    Count {
        #[arg(long)]
        points: usize,
    },
    /// One catalogue line per cograph on N points.
    Enumerate(Points),
    /// Sum cographs: values in an abelian group, edges are sums.
    #[command(subcommand)]
    Sum(SumCmd),
    /// Difference cographs: values in Z or Z_m, edges are distances.
    #[command(subcommand)]
    Diff(DiffCmd),
    /// Intersection cographs: points are sets, edges are meets.
    #[command(subcommand)]
    Isect(IsectCmd),
    /// Realize each pattern of a catalogue file.
    Represent {
        #[arg(long, value_enum)]
        mode: RepresentMode,
        #[arg(long = "in")]
        input: PathBuf,
        /// One value per class, in the order the classes are written.
        #[arg(long)]
        values: Option<String>,
        /// Modulus for sum mode; 0 means the integers.
        #[arg(long, default_value_t = 0)]
        modulus: i128,
    },
    /// PL-cographs and the linear spaces they encode.
    #[command(subcommand)]
    Pl(PlCmd),
    /// Coset enumeration for a chain group or a two-generator presentation.
    Tc {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Relator over P, Q (lowercase for inverses); repeatable.
        #[arg(long)]
        relator: Vec<String>,
        /// Subgroup generator word; repeatable. Defaults to P.
        #[arg(long)]
        subgroup: Vec<String>,
        #[arg(long, value_enum, default_value = "hlt")]
        strategy: StrategyArg,
        /// Print the coset table.
        #[arg(long)]
        table: bool,
    },
    /// Chain pairs of a built-in group and their cycle lengths.
    Chains {
        #[arg(long)]
        group: String,
    },
    /// Fibonacci wheel with N spokes.
    Wheel {
        #[arg(long)]
        spokes: usize,
    },
    /// Write every catalogue and a checksum manifest into DIR.
    Regen {
        #[arg(default_value = "catalogues")]
        dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum SumCmd {
    /// Classify each pattern of a catalogue file.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Every sum pattern on N points with its verdict and witness.
    Catalogue(Points),
}

#[derive(Subcommand)]
enum DiffCmd {
    /// Find a labeling realizing each pattern of a catalogue file.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_MODULUS)]
        max_modulus: i128,
    },
    /// Every difference pattern on N points with a witness and motif counts.
    Catalogue {
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_INTEGER_BOUND)]
        integer_bound: i128,
        #[arg(long, default_value_t = DEFAULT_MAX_MODULUS)]
        max_modulus: i128,
    },
}

#[derive(Subcommand)]
enum IsectCmd {
    /// Decide representability; list forbidden configurations otherwise.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Point sets from the union of incident edges.
    Uie {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Every representable pattern on N points with its point sets.
    Catalogue(Points),
}

#[derive(Subcommand)]
enum PlCmd {
    /// Check the two linear-space rules on each pattern of a file.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Every PL-cograph on N points.
    Catalogue(Points),
    /// Minimal linear spaces on N points.
    Minimal {
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value = "not-an-expansion")]
        reading: ReadingArg,
        #[arg(long)]
        force: bool,
    },
    /// Coordinates of every point from two anchor points.
    Coordinatize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        origin: Option<usize>,
    },
    /// Compose the two patterns of a file.
    Compose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: ComposeOp,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum StrategyArg {
    Hlt,
    Felsch,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ReadingArg {
    EveryPointOnLongLine,
    NotAnExpansion,
}

fn dispatch(ctx: Ctx, command: &Command) -> anyhow::Result<Output> {
    use cograph_cli as c;
    match command {
        Command::Count { points } => c::count(ctx, *points),
        Command::Enumerate(p) => c::enumerate(ctx, p.points, p.force),
        Command::Sum(SumCmd::Classify { input }) => c::sum_classify(ctx, input),
        Command::Sum(SumCmd::Catalogue(p)) => c::sum_catalogue(ctx, p.points, p.force),
        Command::Diff(DiffCmd::Classify { input, max_modulus }) => c::diff_classify(ctx, input, *max_modulus),
        Command::Diff(DiffCmd::Catalogue { points, integer_bound, max_modulus }) => {
            c::diff_catalogue(ctx, *points, *integer_bound, *max_modulus)
        }
        Command::Isect(IsectCmd::Check { input }) => c::isect_check(ctx, input, false),
        Command::Isect(IsectCmd::Uie { input }) => c::isect_check(ctx, input, true),
        Command::Isect(IsectCmd::Catalogue(p)) => c::isect_catalogue(ctx, p.points, p.force),
        Command::Represent { mode, input, values, modulus } => c::represent(ctx, input, *mode, values.as_deref(), *modulus),
        Command::Pl(PlCmd::Validate { input }) => c::pl_validate(ctx, input),
        Command::Pl(PlCmd::Catalogue(p)) => c::pl_catalogue(ctx, p.points, p.force),
        Command::Pl(PlCmd::Minimal { points, reading, force }) => {
            let reading = match reading {
                ReadingArg::EveryPointOnLongLine => Minimality::EveryPointOnLongLine,
                ReadingArg::NotAnExpansion => Minimality::NotAnExpansion,
            };
            c::pl_minimal(ctx, *points, reading, *force)
        }
        Command::Pl(PlCmd::Coordinatize { input, x, y, origin }) => c::pl_coordinatize(ctx, input, *x, *y, *origin),
        Command::Pl(PlCmd::Compose { input, op }) => c::pl_compose(ctx, input, *op),
        Command::Tc { p, q, n, relator, subgroup, strategy, table } => {
            let params = match (p, q, n) {
                (Some(p), Some(q), Some(n)) => Some((*p, *q, *n)),
                (None, None, None) => None,
                _ => anyhow::bail!("--p, --q and --n go together"),
            };
            let strategy = match strategy {
                StrategyArg::Hlt => Strategy::RelatorScan,
                StrategyArg::Felsch => Strategy::Felsch,
            };
            c::tc(ctx, &TcArgs { params, relators: relator.clone(), subgroup: subgroup.clone(), strategy, table: *table })
        }
        Command::Chains { group } => c::chains(ctx, group),
        Command::Wheel { spokes } => c::wheel(ctx, *spokes),
        Command::Regen { dir } => c::regen(ctx, dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match cli.threads {
        Some(1) => Exec::Sequential,
        Some(k) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    let ctx = Ctx { exec, verify: cli.verify };
    let start = Instant::now();
    let output = match dispatch(ctx, &cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = if cli.json {
        let report = json!({
            "schema": SCHEMA,
            "command": std::env::args().skip(1).collect::<Vec<_>>(),
            "result": output.json,
            "verification": output.checks,
            "wall_ms": start.elapsed().as_millis() as u64,
        });
        format!("{}\n", serde_json::to_string_pretty(&report).expect("JSON values serialize"))
    } else {
        let mut s = output.lines.join("\n");
        if !s.is_empty() {
            s.push('\n');
        }
        if cli.verify {
            s.push_str(&format!("verified {}/{}\n", output.checks.passed, output.checks.run));
        }
        s
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    for f in &output.checks.failures {
        eprintln!("verification failed: {f}");
    }
    if output.checks.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
