use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use contraction_core::generate::{random_connected, spider};
use contraction_core::io::{parse_edge_list, write_edge_list};
use contraction_core::kernel::kernelize;
use contraction_core::oracle::min_contractions_search;
use contraction_core::path::solve_path;
use contraction_core::reductions::{parse_bipartite, rbds_to_tree_instance};
use contraction_core::tree::solve_tree;
use contraction_core::witness::{check, parse_witness};
use contraction_core::{Graph, Mode, Target, Verdict};

/// Exit code for a yes answer or a successful command.
const YES: u8 = 0;
/// Exit code for a no answer or an invalid witness.
const NO: u8 = 1;
const ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "contract", version, about = "Path and tree contractibility by edge contractions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most K contractions turn the graph into a path or tree
    Solve {
        #[arg(value_enum)]
        target: TargetArg,
        /// Edge-list file
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Print the witness partition after the answer
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Print the exact minimum number of contractions (small graphs only)
    Oracle {
        #[arg(value_enum)]
        target: TargetArg,
        input: PathBuf,
    },
    /// Apply the bridge rule for path contractibility until it stops firing
    Kernelize {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Where to write the reduced edge list (stdout if omitted)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Where to write the contracted bridges, one per line
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a witness partition against a graph and budget
    VerifyWitness {
        #[arg(value_enum)]
        target: TargetArg,
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Write an instance as an edge list
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file (stdout if omitted)
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run solvers and oracles over seeded random instances and print CSV
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Path,
    Tree,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Path => Target::Path,
            TargetArg::Tree => Target::Tree,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Randomized,
    Deterministic,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value = "deterministic")]
    mode: ModeArg,
    /// Seed for randomized mode
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Randomized => Mode::Randomized(self.seed),
            ModeArg::Deterministic => Mode::Deterministic,
        }
    }
}

#[derive(Subcommand)]
enum Family {
    /// Connected random graph: random spanning tree plus G(n, p) edges
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Paths of equal length joined at a center vertex
    Spider {
        #[arg(long)]
        legs: usize,
        #[arg(long)]
        length: usize,
    },
    /// Tree instance built from a red-blue domination file (`|A| |B| t`
    /// header, then `i j` edges); the budget is written as a comment
    RbdsGadget { input: PathBuf },
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random instances
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 5)]
    min_n: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Budgets 0..=max_k are run on every instance
    #[arg(long, default_value_t = 3)]
    max_k: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Extra instances read from edge-list files
    #[arg(long = "input")]
    inputs: Vec<PathBuf>,
    /// Also run the exact oracles (up to this many vertices)
    #[arg(long, default_value_t = 10)]
    oracle_max_n: usize,
    /// Write 0 in the millis column so output is reproducible
    #[arg(long)]
    no_timing: bool,
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn solve(target: Target, g: &Graph, k: usize, mode: Mode) -> Result<Verdict> {
    Ok(match target {
        Target::Path => solve_path(g, k, mode)?,
        Target::Tree => solve_tree(g, k, mode)?,
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve {
            target,
            input,
            k,
            witness,
            mode,
        } => {
            let g = read_graph(&input)?;
            let target = Target::from(target);
            if target == Target::Path && !g.is_connected() {
                println!("no");
                eprintln!("input graph is disconnected, so it cannot become a path");
                return Ok(NO);
            }
            let v = solve(target, &g, k, mode.mode())?;
            if witness {
                print!("{v}");
            } else {
                println!("{}", if v.answer { "yes" } else { "no" });
            }
            Ok(if v.answer { YES } else { NO })
        }
        Command::Oracle { target, input } => {
            let g = read_graph(&input)?;
            match min_contractions_search(&g, target.into())? {
                Some(min) => {
                    println!("{min}");
                    Ok(YES)
                }
                None => {
                    println!("none");
                    eprintln!("input graph is disconnected, so it cannot become a path");
                    Ok(NO)
                }
            }
        }
        Command::Kernelize {
            input,
            k,
            output,
            trace,
        } => {
            let g = read_graph(&input)?;
            let r = kernelize(&g, k)?;
            emit(output.as_deref(), &write_edge_list(&r.reduced))?;
            if let Some(path) = trace {
                let mut text = String::new();
                for step in &r.trace {
                    let _ = writeln!(text, "{} {}", step.edge.0, step.edge.1);
                }
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            eprintln!(
                "reduced {} -> {} vertices; {}",
                g.vertex_count(),
                r.reduced.vertex_count(),
                if r.decided_no {
                    format!("more than {} remain, so the answer is no", 5 * k + 3)
                } else {
                    "undecided".to_string()
                }
            );
            Ok(YES)
        }
        Command::VerifyWitness {
            target,
            graph,
            witness,
            k,
        } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&witness)
                .with_context(|| format!("reading {}", witness.display()))?;
            // accept the output of `solve --witness` as is
            let body = match text.split_once('\n') {
                Some((first, rest)) if first.starts_with("yes") => rest,
                _ => &text,
            };
            let ws = parse_witness(body).with_context(|| format!("parsing {}", witness.display()))?;
            match check(&g, &ws, target.into(), k) {
                Ok(()) => {
                    println!("valid");
                    Ok(YES)
                }
                Err(why) => {
                    println!("invalid: {why}");
                    Ok(NO)
                }
            }
        }
        Command::Gen { family, output } => {
            let text = match family {
                Family::Random { n, p, seed } => {
                    if !(0.0..=1.0).contains(&p) {
                        bail!("edge probability {p} is outside [0, 1]");
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    write_edge_list(&random_connected(n, p, &mut rng))
                }
                Family::Cycle { n } => {
                    if n < 3 {
                        bail!("a cycle needs at least 3 vertices");
                    }
                    write_edge_list(&Graph::cycle(n))
                }
                Family::Path { n } => write_edge_list(&Graph::path(n)),
                Family::Spider { legs, length } => write_edge_list(&spider(legs, length)),
                Family::RbdsGadget { input } => {
                    let text = fs::read_to_string(&input)
                        .with_context(|| format!("reading {}", input.display()))?;
                    let r = parse_bipartite(&text)?;
                    let (g, k) = rbds_to_tree_instance(&r)?;
                    format!("# k = {k}\n{}", write_edge_list(&g))
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(YES)
        }
        Command::Bench(args) => bench(&args),
    }
}

fn bench(args: &BenchArgs) -> Result<u8> {
    if args.min_n == 0 || args.min_n > args.max_n {
        bail!("need 1 <= min-n <= max-n");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut instances: Vec<(String, Graph)> = Vec::new();
    for i in 0..args.count {
        let n = rng.random_range(args.min_n..=args.max_n);
        instances.push((format!("random-{i}"), random_connected(n, args.p, &mut rng)));
    }
    for path in &args.inputs {
        instances.push((path.display().to_string(), read_graph(path)?));
    }
    println!("instance,n,m,k,mode,answer,trials,millis");
    for (name, g) in &instances {
        let oracle = |target| -> Result<Option<usize>> {
            if g.vertex_count() > args.oracle_max_n {
                return Ok(None);
            }
            Ok(min_contractions_search(g, target)?)
        };
        let minima = [(Target::Path, oracle(Target::Path)?), (Target::Tree, oracle(Target::Tree)?)];
        for k in 0..=args.max_k {
            for (target, min) in minima {
                let runs = [
                    ("deterministic", Mode::Deterministic),
                    ("randomized", Mode::Randomized(args.seed ^ k as u64)),
                ];
                for (label, mode) in runs {
                    let start = Instant::now();
                    let v = solve(target, g, k, mode)?;
                    let millis = if args.no_timing { 0 } else { start.elapsed().as_millis() };
                    println!(
                        "{name},{},{},{k},{target}-{label},{},{},{millis}",
                        g.vertex_count(),
                        g.edge_count(),
                        if v.answer { "yes" } else { "no" },
                        v.stats.extraction_calls,
                    );
                }
                if let Some(min) = min {
                    println!(
                        "{name},{},{},{k},{target}-oracle,{},0,0",
                        g.vertex_count(),
                        g.edge_count(),
                        if min <= k { "yes" } else { "no" },
                    );
                }
            }
        }
    }
    Ok(YES)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ERROR } else { YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR)
        }
    }
}
