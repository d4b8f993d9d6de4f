//! Command-line front end: instance generation, the exhaustive oracle,
//! single feedback runs, measurement-guided runs, and grid sweeps.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on runtime errors. Data
//! goes to the requested output file (or stdout for `oracle`); diagnostics
//! go to stderr.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::falqon::{run_falqon_with_table, FalqonParams};
use crate::graph::WeightedGraph;
use crate::harness::{
    prepare_instance, run_grid, write_cells_csv, write_runs_csv, write_summary_json,
    ExperimentSpec,
};
use crate::ising::expand_reduced_index;
use crate::mgi::{run_mgi_with_table, DtSchedule, MgiConfig, NSchedule};
use crate::qstate::StateVector;

#[derive(Parser)]
#[command(
    name = "falqon-mgi",
    version,
    about = "Feedback-based quantum optimization on weighted MaxCut, \
             with measurement-guided initialization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random complete graph and write it as an edge list.
    GenGraph {
        /// Number of vertices (at least 2).
        #[arg(long)]
        vertices: usize,
        /// Seed for the weight generator.
        #[arg(long)]
        seed: u64,
        /// Output edge-list path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance exhaustively: max cut, optimal bitstrings, ground energy.
    Oracle {
        /// Input edge-list path.
        #[arg(long)]
        graph: PathBuf,
        /// Pin this vertex to the 0 side, reporting only the matching optima.
        #[arg(long)]
        fix_vertex: Option<usize>,
        /// Overall multiplier on the cost Hamiltonian.
        #[arg(long, default_value_t = 0.25)]
        scale: f64,
    },
    /// Run plain feedback optimization and write the per-layer trace.
    Falqon {
        #[arg(long)]
        graph: PathBuf,
        /// Circuit depth.
        #[arg(long)]
        layers: usize,
        /// Time step per layer.
        #[arg(long)]
        dt: f64,
        #[command(flatten)]
        common: SolverArgs,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run measurement-guided initialization and write the per-iteration trace.
    Mgi {
        #[arg(long)]
        graph: PathBuf,
        /// Circuit depth of each inner run.
        #[arg(long)]
        layers: usize,
        /// Number of outer iterations.
        #[arg(long)]
        iterations: usize,
        /// Measurement shots per iteration.
        #[arg(long)]
        shots: u64,
        /// Fixed filter size (conflicts with --n-max/--n-min).
        #[arg(long, conflicts_with_all = ["n_max", "n_min"])]
        n: Option<usize>,
        /// Filter size at the first iteration of a linear ramp.
        #[arg(long, requires = "n_min")]
        n_max: Option<usize>,
        /// Filter size at the last iteration of a linear ramp.
        #[arg(long, requires = "n_max")]
        n_min: Option<usize>,
        /// Fixed time step (conflicts with --dt-start/--dt-end).
        #[arg(long, conflicts_with_all = ["dt_start", "dt_end"])]
        dt: Option<f64>,
        /// Time step at the first iteration of a linear ramp.
        #[arg(long, requires = "dt_end")]
        dt_start: Option<f64>,
        /// Time step at the last iteration of a linear ramp.
        #[arg(long, requires = "dt_start")]
        dt_end: Option<f64>,
        /// Seed for the measurement generator.
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        common: SolverArgs,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a parameter grid from a JSON spec and write CSVs plus a summary.
    Sweep {
        /// Sweep spec path (JSON mirror of the harness experiment spec).
        #[arg(long)]
        spec: PathBuf,
        /// Output directory for runs.csv, cells.csv, and summary.json.
        #[arg(long)]
        out: PathBuf,
        /// Worker thread cap (defaults to all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Flags shared by the solver commands.
#[derive(Args)]
struct SolverArgs {
    /// Feedback gain.
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Overall multiplier on the cost Hamiltonian.
    #[arg(long, default_value_t = 0.25)]
    scale: f64,
    /// Vertex pinned to the 0 side of the cut.
    #[arg(long, default_value_t = 0, conflicts_with = "no_fix")]
    fix_vertex: usize,
    /// Keep the full register instead of pinning a vertex.
    #[arg(long)]
    no_fix: bool,
}

impl SolverArgs {
    fn fix(&self) -> Option<usize> {
        if self.no_fix {
            None
        } else {
            Some(self.fix_vertex)
        }
    }
}

/// Parses `argv` and runs the selected command, returning the process exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

enum CliError {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Runtime(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::GenGraph { vertices, seed, out } => {
            if vertices < 2 {
                return Err(usage("--vertices must be at least 2"));
            }
            let graph = WeightedGraph::random_complete(vertices, seed)?;
            graph.write_edge_list(out)?;
            Ok(())
        }
        Command::Oracle { graph, fix_vertex, scale } => {
            let g = WeightedGraph::read_edge_list(graph)?;
            let (max_cut, optima) = g.brute_force_maxcut()?;
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "max_cut {max_cut}")?;
            match fix_vertex {
                None => {
                    let instance = prepare_instance(&g, None, scale)?;
                    for a in &optima {
                        writeln!(stdout, "optimal {a}")?;
                    }
                    writeln!(stdout, "ground_energy {}", instance.e_star)?;
                }
                Some(v) => {
                    if v >= g.n_vertices() {
                        return Err(usage(format!(
                            "--fix-vertex {v} out of range for {} vertices",
                            g.n_vertices()
                        )));
                    }
                    let instance = prepare_instance(&g, Some(v), scale)?;
                    for &idx in &instance.optima {
                        let full = expand_reduced_index(idx, v);
                        let a = crate::graph::Assignment::from_index(full as u64, g.n_vertices());
                        writeln!(stdout, "optimal {a}")?;
                    }
                    writeln!(stdout, "ground_energy {}", instance.e_star)?;
                }
            }
            Ok(())
        }
        Command::Falqon { graph, layers, dt, common, out } => {
            let g = WeightedGraph::read_edge_list(graph)?;
            let instance = prepare_instance(&g, common.fix(), common.scale)?;
            let params = FalqonParams {
                layers,
                dt,
                alpha: common.alpha,
                beta_source: Default::default(),
            };
            params.validate().map_err(|e| usage(e.to_string()))?;
            let psi0 = StateVector::uniform(instance.table.n_qubits())?;
            let trace = run_falqon_with_table(&instance.table, psi0, &params)?;
            let mut w = BufWriter::new(File::create(out)?);
            writeln!(w, "layer,beta,energy")?;
            writeln!(w, "0,,{}", trace.energies[0])?;
            for (l, (beta, energy)) in
                trace.betas.iter().zip(trace.energies.iter().skip(1)).enumerate()
            {
                writeln!(w, "{},{},{}", l + 1, beta, energy)?;
            }
            Ok(())
        }
        Command::Mgi {
            graph,
            layers,
            iterations,
            shots,
            n,
            n_max,
            n_min,
            dt,
            dt_start,
            dt_end,
            seed,
            common,
            out,
        } => {
            let n_schedule = match (n, n_max, n_min) {
                (Some(n), None, None) => NSchedule::Fixed(n),
                (None, Some(n_max), Some(n_min)) => NSchedule::Linear { n_max, n_min },
                _ => return Err(usage("provide either --n or both --n-max and --n-min")),
            };
            let dt_schedule = match (dt, dt_start, dt_end) {
                (Some(dt), None, None) => DtSchedule::Constant(dt),
                (None, Some(dt_start), Some(dt_end)) => DtSchedule::Linear { dt_start, dt_end },
                _ => return Err(usage("provide either --dt or both --dt-start and --dt-end")),
            };
            let g = WeightedGraph::read_edge_list(graph)?;
            let instance = prepare_instance(&g, common.fix(), common.scale)?;
            let config = MgiConfig::new(
                iterations,
                FalqonParams {
                    layers,
                    dt: dt_schedule.dt_at(1, iterations.max(1)),
                    alpha: common.alpha,
                    beta_source: Default::default(),
                },
                shots,
                n_schedule,
                dt_schedule,
            );
            config.validate().map_err(|e| usage(e.to_string()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let trace = run_mgi_with_table(&config, &instance.table, &instance.optima, &mut rng)?;
            let mut w = BufWriter::new(File::create(out)?);
            writeln!(w, "iteration,n_used,dt_used,final_energy,success_prob")?;
            for it in &trace.iterations {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    it.iteration, it.n_used, it.dt_used, it.final_energy, it.success_probability
                )?;
            }
            Ok(())
        }
        Command::Sweep { spec, out, workers } => {
            let started = Instant::now();
            let text = fs::read_to_string(&spec)?;
            let spec: ExperimentSpec = serde_json::from_str(&text)
                .map_err(|e| CliError::Runtime(Error::Parse(format!("sweep spec: {e}"))))?;
            spec.validate().map_err(|e| usage(e.to_string()))?;
            if workers == Some(0) {
                return Err(usage("--workers must be at least 1"));
            }
            fs::create_dir_all(&out)?;
            let output = run_grid(&spec, workers)?;
            let runs = File::create(out.join("runs.csv"))?;
            write_runs_csv(BufWriter::new(runs), &output.runs)?;
            let cells = File::create(out.join("cells.csv"))?;
            write_cells_csv(BufWriter::new(cells), &output.cells)?;
            let summary = File::create(out.join("summary.json"))?;
            write_summary_json(BufWriter::new(summary), &spec, &output.graphs, started)?;
            eprintln!(
                "sweep: {} cells x {} graphs x {} runs in {:.1}s",
                output.cells.len(),
                output.graphs.len(),
                spec.runs_per_cell,
                started.elapsed().as_secs_f64()
            );
            Ok(())
        }
    }
}
