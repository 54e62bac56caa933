use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linecover::duality::dualize_lpc;
use linecover::io::{self as formats, GeneratorSpec};
use linecover::order_type::{canonical_otr, enumerate_grid_order_types, equivalent, otr};
use linecover::plc::{kernelize, solve};
use linecover::protocol::{run_protocol, run_protocol_with_catalog, ProtocolConfig};
use linecover::vc::{vc_to_lpc, VcInstance};

/// Exact solvers, kernels and reductions for Point Line Cover.
///
/// Files use the plain-text formats described in the README; `-` reads
/// standard input. Exit status is 0 on success or a "yes" answer, 1 on a
/// "no" answer, 2 on errors.
#[derive(Debug, Parser)]
#[command(name = "linecover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a plc instance and print a cover of at most k lines.
    Solve { file: PathBuf },
    /// Apply the kernel rules and print the report and reduced instance.
    Kernelize { file: PathBuf },
    /// Turn an lpc instance into the dual plc instance.
    Dualize { file: PathBuf },
    /// Reduce a vertex cover instance (graph file) to lpc or plc.
    ReduceVc {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Target::Plc)]
        to: Target,
    },
    /// Print the order type of the points in a plc file, in file order.
    Ordertype { file: PathBuf },
    /// Print the canonical order type of the points in a plc file.
    Canon { file: PathBuf },
    /// Whether two plc files hold combinatorially equivalent point sets.
    Equiv { first: PathBuf, second: PathBuf },
    /// Build the sorted order-type catalog of n-point subsets of a g x g grid.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        grid: u32,
    },
    /// Run the order-type search protocol on a plc instance and print the transcript.
    Protocol {
        file: PathBuf,
        #[arg(long)]
        grid: u32,
        /// Use a catalog file produced by `enumerate` instead of building one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Generate a plc instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Lpc,
    Plc,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// n points sampled from k random grid lines; always coverable by k lines.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        grid: u32,
        #[arg(long)]
        seed: u64,
    },
    /// n distinct uniform points of the g x g grid.
    Uniform {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        grid: u32,
        #[arg(long)]
        seed: u64,
    },
    /// The full rows x cols lattice.
    Grid {
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
        #[arg(long)]
        k: usize,
    },
}

type Outcome = Result<(String, u8), String>;

fn read(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(buf);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn with_path<T>(path: &Path, r: linecover::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", path.display()))
}

fn yes_no(answer: bool) -> u8 {
    if answer {
        0
    } else {
        1
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Solve { file } => {
            let inst = with_path(&file, formats::parse_plc(&read(&file)?))?;
            match solve(&inst) {
                Some(cover) => {
                    let mut out = format!("yes {}\n", cover.len());
                    for line in &cover {
                        out.push_str(&formats::describe_line(line));
                        out.push('\n');
                    }
                    Ok((out, 0))
                }
                None => Ok(("no\n".into(), 1)),
            }
        }
        Command::Kernelize { file } => {
            let inst = with_path(&file, formats::parse_plc(&read(&file)?))?;
            Ok((formats::emit_kernel_report(&kernelize(&inst)), 0))
        }
        Command::Dualize { file } => {
            let lpc = with_path(&file, formats::parse_lpc(&read(&file)?))?;
            let plc = dualize_lpc(&lpc).map_err(|e| e.to_string())?;
            Ok((formats::emit_plc(&plc), 0))
        }
        Command::ReduceVc { file, seed, to } => {
            let inst: VcInstance = with_path(&file, formats::parse_graph(&read(&file)?))?;
            let lpc = vc_to_lpc(&inst, seed).map_err(|e| e.to_string())?;
            let header = format!(
                "# vertex cover reduction: {} vertices, {} edges, k = {}, seed {seed}\n",
                inst.graph.n(),
                inst.graph.edge_count(),
                inst.k
            );
            let body = match to {
                Target::Lpc => formats::emit_lpc(&lpc),
                Target::Plc => formats::emit_plc(&dualize_lpc(&lpc).map_err(|e| e.to_string())?),
            };
            Ok((header + &body, 0))
        }
        Command::Ordertype { file } => {
            let inst = with_path(&file, formats::parse_plc(&read(&file)?))?;
            let o = otr(inst.points()).map_err(|e| e.to_string())?;
            Ok((formats::emit_otr(&o), 0))
        }
        Command::Canon { file } => {
            let inst = with_path(&file, formats::parse_plc(&read(&file)?))?;
            let o = canonical_otr(inst.points()).map_err(|e| e.to_string())?;
            Ok((formats::emit_otr(&o), 0))
        }
        Command::Equiv { first, second } => {
            let a = with_path(&first, formats::parse_plc(&read(&first)?))?;
            let b = with_path(&second, formats::parse_plc(&read(&second)?))?;
            let same = equivalent(a.points(), b.points()).map_err(|e| e.to_string())?;
            Ok((format!("{same}\n"), yes_no(same)))
        }
        Command::Enumerate { n, grid } => {
            let cat = enumerate_grid_order_types(n, grid).map_err(|e| e.to_string())?;
            Ok((formats::emit_catalog(&cat), 0))
        }
        Command::Protocol {
            file,
            grid,
            catalog,
        } => {
            let inst = with_path(&file, formats::parse_plc(&read(&file)?))?;
            let cfg = ProtocolConfig::new(grid).map_err(|e| e.to_string())?;
            let transcript = match catalog {
                Some(path) => {
                    let cat = with_path(&path, formats::parse_catalog(&read(&path)?))?;
                    run_protocol_with_catalog(&inst, &cfg, &cat)
                }
                None => run_protocol(&inst, &cfg),
            }
            .map_err(|e| e.to_string())?;
            Ok((transcript.render(), yes_no(transcript.answer)))
        }
        Command::Gen { kind } => {
            let spec = match kind {
                GenKind::Planted { n, k, grid, seed } => GeneratorSpec::Planted {
                    n,
                    k,
                    g: grid,
                    seed,
                },
                GenKind::Uniform { n, k, grid, seed } => GeneratorSpec::Uniform {
                    n,
                    k,
                    g: grid,
                    seed,
                },
                GenKind::Grid { rows, cols, k } => GeneratorSpec::Grid { rows, cols, k },
            };
            let inst = formats::generate(&spec).map_err(|e| e.to_string())?;
            Ok((formats::emit_plc(&inst), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("linecover: {msg}");
            ExitCode::from(2)
        }
    }
}
