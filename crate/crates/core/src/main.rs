use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use convex_bottleneck::baselines::{cubic_solve, oracle_solve, BaselineError};
use convex_bottleneck::bench::{run_bench, Algo};
use convex_bottleneck::generators::{GenMode, GenSpec, DEFAULT_SPREAD};
use convex_bottleneck::geometry::{ConvexPointSet, REL_EPS};
use convex_bottleneck::io::{load_instance, InstanceFile, LoadError, MatchingFile};
use convex_bottleneck::render::render_svg;
use convex_bottleneck::solver::solve;
use convex_bottleneck::structure::{cascade_decomposition, verify_matching, CascadeDecomposition};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_SIZE: u8 = 4;

#[derive(Parser)]
#[command(name = "bnmatch", version, about = "Bottleneck non-crossing matchings of convex point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct InstanceArgs {
    /// Instance file: JSON {"points": [[x, y], ...]} or CSV lines "x,y".
    input: PathBuf,
    /// Sort points counterclockwise around their centroid before validating.
    #[arg(long)]
    sort_ccw: bool,
    /// Write the matching here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Circle,
    Valtr,
    Cluster3,
}

impl From<ModeArg> for GenMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Circle => GenMode::Circle,
            ModeArg::Valtr => GenMode::Valtr,
            ModeArg::Cluster3 => GenMode::Cluster3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Solve,
    Cubic,
}

#[derive(Subcommand)]
enum Command {
    /// Quadratic-time bottleneck matching.
    Solve(InstanceArgs),
    /// Exhaustive search over all non-crossing matchings (n <= 20).
    Oracle(InstanceArgs),
    /// Cubic interval dynamic program.
    Baseline(InstanceArgs),
    /// Check a matching file against an instance.
    Verify {
        instance: PathBuf,
        matching: PathBuf,
        #[arg(long)]
        sort_ccw: bool,
    },
    /// Generate a random strictly convex instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "circle")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SPREAD)]
        spread: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Render an instance and matching as SVG.
    Render {
        instance: PathBuf,
        matching: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        sort_ccw: bool,
    },
    /// Time an algorithm over generated instances; CSV to stdout.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value = "circle")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, value_enum, default_value = "solve")]
        algo: AlgoArg,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(e) => Failure::new(EXIT_PARSE, e.to_string()),
            LoadError::Invalid(e) => Failure::new(EXIT_VALIDATION, e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Solve(args) => {
            let points = load_instance(&args.input, args.sort_ccw)?;
            let report = solve(&points);
            emit(args.output.as_deref(), &MatchingFile::from_report(&report).to_json())
        }
        Command::Oracle(args) => {
            let points = load_instance(&args.input, args.sort_ccw)?;
            let sol = oracle_solve(&points).map_err(|e| match e {
                BaselineError::TooLarge(_) => Failure::new(EXIT_SIZE, e.to_string()),
                BaselineError::OddCount(_) => Failure::new(EXIT_VALIDATION, e.to_string()),
            })?;
            // Report the optimal matching with the fewest cascades.
            let best = sol
                .all_optimal
                .iter()
                .min_by_key(|m| {
                    CascadeDecomposition::of(m)
                        .map(|c| (c.cascade_count(), c.three_bounded_count))
                        .unwrap_or((usize::MAX, usize::MAX))
                })
                .expect("at least one matching");
            let value = best.sq_bottleneck(&points).0.sqrt();
            emit(args.output.as_deref(), &MatchingFile::from_matching(best, value).to_json())
        }
        Command::Baseline(args) => {
            let points = load_instance(&args.input, args.sort_ccw)?;
            let sol = cubic_solve(&points);
            emit(
                args.output.as_deref(),
                &MatchingFile::from_matching(&sol.matching, sol.value).to_json(),
            )
        }
        Command::Verify {
            instance,
            matching,
            sort_ccw,
        } => verify(&instance, &matching, sort_ccw),
        Command::Gen {
            n,
            mode,
            seed,
            spread,
            output,
        } => {
            if n < 4 || n % 2 == 1 {
                return Err(Failure::new(
                    EXIT_VALIDATION,
                    format!("--n must be even and at least 4, got {n}"),
                ));
            }
            let spec = GenSpec {
                n,
                mode: mode.into(),
                seed,
                jitter: spread,
            };
            let points = spec.generate();
            emit(output.as_deref(), &InstanceFile::from_points(points.points()).to_json())
        }
        Command::Render {
            instance,
            matching,
            out,
            sort_ccw,
        } => {
            let points = load_instance(&instance, sort_ccw)?;
            let m = read_matching(&matching, &points)?;
            fs::write(&out, render_svg(&points, &m.matching()))
                .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", out.display())))
        }
        Command::Bench {
            sizes,
            mode,
            seed,
            reps,
            algo,
        } => {
            if let Some(bad) = sizes.iter().find(|&&n| n < 4 || n % 2 == 1) {
                return Err(Failure::new(EXIT_VALIDATION, format!("size {bad} must be even and >= 4")));
            }
            let algo = match algo {
                AlgoArg::Solve => Algo::Solve,
                AlgoArg::Cubic => Algo::Cubic,
            };
            let result = run_bench(&sizes, mode.into(), seed, reps.max(1), algo);
            print!("{}", result.to_csv());
            Ok(())
        }
    }
}

fn read_matching(path: &Path, points: &ConvexPointSet) -> Result<MatchingFile, Failure> {
    let m = MatchingFile::read(path).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    if m.pairs.is_empty() && !points.is_empty() {
        return Err(Failure::new(EXIT_PARSE, "matching file has no pairs"));
    }
    Ok(m)
}

fn verify(instance: &Path, matching: &Path, sort_ccw: bool) -> Result<(), Failure> {
    let points = load_instance(instance, sort_ccw)?;
    let file = MatchingFile::read(matching).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let m = file.matching();
    let report = verify_matching(&points, &m);

    println!("perfect: {}", report.perfect);
    println!("nonCrossing: {}", report.non_crossing);
    println!("value: {:?} (reported {:?})", report.value, file.value);
    if let Some((a, b)) = report.longest_pair {
        println!("longestPair: [{a}, {b}]");
    }

    if !report.perfect {
        return Err(Failure::new(EXIT_VERIFY, "perfect"));
    }
    if !report.non_crossing {
        return Err(Failure::new(EXIT_VERIFY, "nonCrossing"));
    }
    if (file.value - report.value).abs() > REL_EPS * report.value.abs().max(f64::MIN_POSITIVE) {
        return Err(Failure::new(EXIT_VERIFY, "value"));
    }
    let dec = cascade_decomposition(&points, &m).map_err(|e| Failure::new(EXIT_VERIFY, e.to_string()))?;
    println!("cascades: {}", dec.cascade_count());
    println!("threeBounded: {}", dec.three_bounded_count);
    println!("ok");
    Ok(())
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
