use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use checkerboard_digraphs::board::{min_c_sparse_partition_bruteforce, optimal_c_sparse_partition, Board};
use checkerboard_digraphs::generators::{build_npartite, build_tournament};
use checkerboard_digraphs::harness::{render_table, run_suite, Suite, VerifyConfig};
use checkerboard_digraphs::io::{
    digraph_from_json, digraph_to_dot, digraph_to_json, partition_from_json, partition_to_json, partition_to_svg,
    SolveReport,
};
use checkerboard_digraphs::solvers::{solve, Constraint, Limits, Status};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ctourn", version, about = "Checkerboard tournaments, c-sparse partitions and exact dichromatic solving")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tournament,
    Npartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstraintArg {
    Acyclic,
    TriangleFree,
}

impl From<ConstraintArg> for Constraint {
    fn from(c: ConstraintArg) -> Self {
        match c {
            ConstraintArg::Acyclic => Constraint::Acyclic,
            ConstraintArg::TriangleFree => Constraint::TriangleFree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionMode {
    Construct,
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Order,
    Bounds,
    Diagonals,
    Sigma,
    Tk,
    Equivalence,
    Npartite,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Order => Suite::Order,
            SuiteArg::Bounds => Suite::Bounds,
            SuiteArg::Diagonals => Suite::Diagonals,
            SuiteArg::Sigma => Suite::Sigma,
            SuiteArg::Tk => Suite::Tk,
            SuiteArg::Equivalence => Suite::Equivalence,
            SuiteArg::Npartite => Suite::Npartite,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(clap::Args)]
struct LimitArgs {
    #[arg(long, default_value_t = Limits::default().max_nodes)]
    max_nodes: u64,
    #[arg(long, default_value_t = Limits::default().max_time.as_secs_f64())]
    max_seconds: f64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_nodes: self.max_nodes, max_time: Duration::from_secs_f64(self.max_seconds.max(0.0)) }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate T_k or the oriented n-partite graph K_n^(m)
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a digraph JSON file exactly
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "acyclic")]
        constraint: ConstraintArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Build or search a c-sparse partition of the n x n board
    Partition {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(value_enum, default_value = "construct")]
        mode: PartitionMode,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run claim suites and print a pass/fail table
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
        #[arg(long, requires = "m", value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long, requires = "n", value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        #[arg(long)]
        stretch: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Render a partition JSON file as SVG
    ExportSvg {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Generate { kind, k, n, m, format, out } => {
            let g = match kind {
                Kind::Tournament => build_tournament(k.ok_or(Failure("tournament requires --k".into()))?)?,
                Kind::Npartite => {
                    let (Some(n), Some(m)) = (n, m) else {
                        return Err(Failure("npartite requires --n and --m".into()));
                    };
                    build_npartite(n, m)?
                }
            };
            let text = match format {
                Format::Json => digraph_to_json(&g) + "\n",
                Format::Dot => digraph_to_dot(&g),
            };
            let summary = format!("{} vertices, {} arcs", g.vertex_count(), g.arc_count());
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    println!("{summary}");
                }
                None => {
                    print!("{text}");
                    eprintln!("{summary}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { input, constraint, limits } => {
            let g = digraph_from_json(&read(&input)?)?;
            let result = solve(&g, constraint.into(), limits.limits());
            println!("{}", SolveReport::from(&result).to_json());
            Ok(match result.status {
                Status::Optimal | Status::LowerBoundOnly => ExitCode::SUCCESS,
                Status::AbortedAtLimit => ExitCode::from(3),
            })
        }
        Command::Partition { n, mode, svg, out } => {
            let board = Board::square(n)?;
            let (summary, partition) = match mode {
                PartitionMode::Construct => {
                    let p = optimal_c_sparse_partition(board)?;
                    (format!("{} classes", p.len()), p)
                }
                PartitionMode::Bruteforce => {
                    let (sigma, p) = min_c_sparse_partition_bruteforce(board)?;
                    (format!("sigma = {sigma}, {} classes", p.len()), p)
                }
            };
            if let Some(path) = &svg {
                write(path, &partition_to_svg(&partition))?;
            }
            let json = partition_to_json(&partition) + "\n";
            match out {
                Some(path) => {
                    write(&path, &json)?;
                    println!("{summary}");
                }
                None => {
                    print!("{json}");
                    eprintln!("{summary}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_n, max_k, n, m, stretch, seed, limits } => {
            let config = VerifyConfig {
                max_n,
                max_k,
                npartite: n.zip(m),
                stretch,
                seed,
                limits: limits.limits(),
            };
            let claims = run_suite(suite.into(), &config);
            print!("{}", render_table(&claims));
            Ok(if claims.iter().all(|c| c.passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::ExportSvg { input, out } => {
            let p = partition_from_json(&read(&input)?)?;
            write(&out, &partition_to_svg(&p))?;
            println!("{} cells, {} classes", p.board().cell_count(), p.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
