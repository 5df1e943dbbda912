//! `mincover`: stream minimal connected / capacitated vertex covers and
//! dominating sets, run the brute-force oracle, and build or check the
//! transversal gadgets.
//!
//! Exit status: 0 success, 1 empty family for a capacitated problem, 2 bad
//! input or usage, 3 a reduction check failed.

use std::fs;
use std::io::{self, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mincover::capacitated::{
    cap_feasible, enumerate_capacitated_with, enumerate_connected_capacitated_vc_with, is_cap_feasible,
    Assignment, CapKind, SearchStrategy,
};
use mincover::connected_ds::enumerate_cds;
use mincover::connected_vc::{enumerate_cvc, AugmentationBudget};
use mincover::graph::io::{format_capacities, format_graph, parse_bipartite, parse_capacities, parse_graph, parse_hypergraph};
use mincover::graph::{check_basic_property, BasicKind};
use mincover::min_valid_aug::{enumerate_cvc_quasipoly, min_valid_aug};
use mincover::oracle::{brute_min_valid_aug, brute_minimal, brute_transversals};
use mincover::reductions::{build_reduction, verify_reduction, ReductionKind};
use mincover::{CapacityFn, DelayStats, Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "mincover", version, about = "Enumerate minimal connected and capacitated covers and dominating sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Append one JSON line with delay statistics.
    #[arg(long, global = true)]
    stats: bool,

    /// Stop after N solutions.
    #[arg(long, global = true, value_name = "N")]
    max_solutions: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal connected vertex covers of a connected graph.
    Cvc {
        file: PathBuf,
        /// degree, claw:<d>, budget:<k> or quasipoly
        #[arg(long, default_value = "degree", value_parser = parse_mode)]
        mode: CvcMode,
    },
    /// Minimal connected dominating sets of a connected graph.
    Cds { file: PathBuf },
    /// Minimal capacitated vertex covers.
    Capvc(CapArgs),
    /// Minimal capacitated dominating sets.
    Capds(CapArgs),
    /// Minimal connected vertex covers that are also capacitated.
    Capcvc(CapArgs),
    /// Minimal valid augmentations of a bipartite instance `nL nR m`.
    Minaug { file: PathBuf },
    /// Print the gadget graph for a hypergraph.
    Reduce {
        #[arg(long, value_parser = parse_kind)]
        kind: ReductionKind,
        file: PathBuf,
        /// Where to write the capacity table (capacitated kinds).
        #[arg(long, value_name = "FILE")]
        capacity_out: Option<PathBuf>,
    },
    /// Check a gadget against brute-force minimal transversals.
    Verify {
        #[arg(long, value_parser = parse_kind)]
        kind: ReductionKind,
        file: PathBuf,
    },
    /// Brute-force minimal solutions for small inputs.
    Oracle {
        #[arg(long, value_enum)]
        problem: OracleProblem,
        file: PathBuf,
        #[command(flatten)]
        capacity: CapacitySource,
    },
}

#[derive(Args)]
struct CapacitySource {
    /// Capacity file with one `v c` line per vertex.
    #[arg(long, value_name = "FILE", conflicts_with = "capacity_all")]
    capacity: Option<PathBuf>,
    /// Give every vertex capacity Q.
    #[arg(long, value_name = "Q")]
    capacity_all: Option<usize>,
}

#[derive(Args)]
struct CapArgs {
    file: PathBuf,
    #[command(flatten)]
    capacity: CapacitySource,
    /// Print a witness assignment after each solution, as a `#` line.
    #[arg(long)]
    emit_assignment: bool,
    #[arg(long, value_enum, default_value_t = Strategy::Scan)]
    strategy: Strategy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Scan,
    Alternating,
}

impl From<Strategy> for SearchStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Scan => SearchStrategy::Scan,
            Strategy::Alternating => SearchStrategy::Alternating,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleProblem {
    Cvc,
    Cds,
    Capvc,
    Capds,
    Transversal,
    Minaug,
}

#[derive(Clone, Copy, Debug)]
enum CvcMode {
    Degree,
    Claw(usize),
    Budget(usize),
    Quasipoly,
}

fn parse_mode(s: &str) -> Result<CvcMode, String> {
    let number = |v: &str| v.parse::<usize>().map_err(|_| format!("`{v}` is not a number"));
    match s.split_once(':') {
        None if s == "degree" => Ok(CvcMode::Degree),
        None if s == "quasipoly" => Ok(CvcMode::Quasipoly),
        Some(("claw", d)) => Ok(CvcMode::Claw(number(d)?)),
        Some(("budget", k)) => Ok(CvcMode::Budget(number(k)?)),
        _ => Err("expected degree, claw:<d>, budget:<k> or quasipoly".into()),
    }
}

fn parse_kind(s: &str) -> Result<ReductionKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(2, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn load_capacity(source: &CapacitySource, g: &Graph) -> Result<CapacityFn, Failure> {
    match (&source.capacity, source.capacity_all) {
        (Some(path), _) => parse_capacities(&read(path)?, g.n()).map_err(|e| Failure(2, format!("{}: {e}", path.display()))),
        (None, Some(q)) => Ok(CapacityFn::uniform(g.n(), q)),
        (None, None) => Err(Failure(2, "capacities required: pass --capacity FILE or --capacity-all Q".into())),
    }
}

fn assignment_line(a: &Assignment) -> String {
    let pairs: Vec<String> = match a {
        Assignment::EdgeToVertex(map) => map.iter().map(|(&(u, v), &w)| format!("{u}-{v}:{w}")).collect(),
        Assignment::VertexToVertex(map) => map.iter().map(|(&u, &w)| format!("{u}:{w}")).collect(),
    };
    format!("# {}", pairs.join(" "))
}

/// Writes solutions as they arrive and enforces `--max-solutions`.
struct Output {
    out: io::StdoutLock<'static>,
    limit: Option<u64>,
    written: u64,
    closed: bool,
}

impl Output {
    fn new(limit: Option<u64>) -> Self {
        Output {
            out: io::stdout().lock(),
            limit,
            written: 0,
            closed: false,
        }
    }

    fn full(&self) -> bool {
        self.closed || self.limit.is_some_and(|l| self.written >= l)
    }

    fn line(&mut self, text: &str) {
        if writeln!(self.out, "{text}").is_err() {
            self.closed = true;
        }
    }

    /// Emits one solution (plus an optional annotation line).
    fn solution(&mut self, x: &VertexSet, note: Option<String>) -> ControlFlow<()> {
        if self.full() {
            return ControlFlow::Break(());
        }
        self.line(&x.to_line());
        if let Some(note) = note {
            self.line(&note);
        }
        self.written += 1;
        if self.full() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }

    fn family(&mut self, family: &[VertexSet], started: Instant) -> DelayStats {
        for x in family {
            if self.solution(x, None).is_break() {
                break;
            }
        }
        // batch computations: everything arrives after one gap
        let elapsed = started.elapsed();
        DelayStats {
            outputs: self.written,
            max_gap: elapsed,
            mean_gap: elapsed,
            neighborhood_calls: 0,
            discovered: family.len() as u64,
            truncated: self.written < family.len() as u64,
        }
    }

    fn stats(&mut self, enabled: bool, stats: &DelayStats) {
        if enabled {
            let json = serde_json::to_string(stats).expect("stats serialize");
            self.line(&json);
        }
        let _ = self.out.flush();
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut out = Output::new(cli.max_solutions);
    let started = Instant::now();
    let (stats, capacitated) = match cli.command {
        Command::Cvc { file, mode } => {
            let g = load_graph(&file)?;
            let sink = |x: &VertexSet| out.solution(x, None);
            let stats = match mode {
                CvcMode::Degree => enumerate_cvc(&g, AugmentationBudget::bounded_degree(&g), sink)?,
                CvcMode::Claw(d) => enumerate_cvc(&g, AugmentationBudget::claw_free(d)?, sink)?,
                CvcMode::Budget(k) => enumerate_cvc(&g, AugmentationBudget::explicit(k), sink)?,
                CvcMode::Quasipoly => enumerate_cvc_quasipoly(&g, sink)?,
            };
            (stats, false)
        }
        Command::Cds { file } => {
            let g = load_graph(&file)?;
            (enumerate_cds(&g, |x| out.solution(x, None))?, false)
        }
        Command::Capvc(args) => (run_capacitated(&args, Some(CapKind::VertexCover), &mut out)?, true),
        Command::Capds(args) => (run_capacitated(&args, Some(CapKind::DominatingSet), &mut out)?, true),
        Command::Capcvc(args) => (run_capacitated(&args, None, &mut out)?, true),
        Command::Minaug { file } => {
            let text = read(&file)?;
            let h = parse_bipartite(&text).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
            let family = min_valid_aug(&h)?;
            (out.family(&family, started), false)
        }
        Command::Reduce {
            kind,
            file,
            capacity_out,
        } => {
            let h = parse_hypergraph(&read(&file)?).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
            let inst = build_reduction(&h, kind)?;
            if let Some(c) = inst.capacity() {
                let Some(path) = capacity_out else {
                    return Err(Failure(2, format!("kind {kind} has capacities: pass --capacity-out FILE")));
                };
                fs::write(&path, format_capacities(c)).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
            }
            print!("{}", format_graph(inst.graph()));
            return Ok(0);
        }
        Command::Verify { kind, file } => {
            let h = parse_hypergraph(&read(&file)?).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
            let report = verify_reduction(&h, kind)?;
            println!("{report}");
            return Ok(if report.passed() { 0 } else { 3 });
        }
        Command::Oracle {
            problem,
            file,
            capacity,
        } => {
            let family = match problem {
                OracleProblem::Cvc | OracleProblem::Cds | OracleProblem::Capvc | OracleProblem::Capds => {
                    let g = load_graph(&file)?;
                    match problem {
                        OracleProblem::Cvc => brute_minimal(g.n(), |x| {
                            check_basic_property(&g, x, BasicKind::ConnectedVertexCover)
                        })?,
                        OracleProblem::Cds => brute_minimal(g.n(), |x| {
                            check_basic_property(&g, x, BasicKind::ConnectedDominatingSet)
                        })?,
                        _ => {
                            let c = load_capacity(&capacity, &g)?;
                            let kind = if matches!(problem, OracleProblem::Capvc) {
                                CapKind::VertexCover
                            } else {
                                CapKind::DominatingSet
                            };
                            brute_minimal(g.n(), |x| is_cap_feasible(&g, &c, x, kind))?
                        }
                    }
                }
                OracleProblem::Transversal => {
                    let h = parse_hypergraph(&read(&file)?).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
                    brute_transversals(&h)?
                }
                OracleProblem::Minaug => {
                    let h = parse_bipartite(&read(&file)?).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
                    brute_min_valid_aug(&h)?
                }
            };
            let capacitated = matches!(problem, OracleProblem::Capvc | OracleProblem::Capds);
            (out.family(&family, started), capacitated)
        }
    };
    out.stats(cli.stats, &stats);
    Ok(if capacitated && stats.outputs == 0 { 1 } else { 0 })
}

/// `kind = None` runs the connected capacitated vertex cover enumerator.
fn run_capacitated(args: &CapArgs, kind: Option<CapKind>, out: &mut Output) -> Result<DelayStats, Failure> {
    let g = load_graph(&args.file)?;
    let c = load_capacity(&args.capacity, &g)?;
    let witness_kind = kind.unwrap_or(CapKind::VertexCover);
    let sink = |x: &VertexSet| {
        let note = args.emit_assignment.then(|| {
            let a = cap_feasible(&g, &c, x, witness_kind).expect("emitted solutions are feasible");
            assignment_line(&a)
        });
        out.solution(x, note)
    };
    let stats = match kind {
        Some(kind) => enumerate_capacitated_with(&g, &c, kind, args.strategy.into(), sink)?,
        None => enumerate_connected_capacitated_vc_with(&g, &c, args.strategy.into(), sink)?,
    };
    Ok(stats)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
