//! Batch experiment driver: instance sets, parameter grids, per-run
//! records, deterministic aggregation, and CSV/JSON emission.
//!
//! Every run's generator is seeded from (master seed, graph id, cell id,
//! run id), so results do not depend on scheduling order or worker count,
//! and any subset of the grid can be reproduced in isolation.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::falqon::{depth_to_target, run_falqon_with_table, FalqonParams, FalqonTrace};
use crate::graph::WeightedGraph;
use crate::ising::{EnergyTable, IsingHamiltonian};
use crate::mgi::{run_mgi_with_table, DtSchedule, MgiConfig, NSchedule};
use crate::qstate::StateVector;

/// Normalized-gap threshold used for depth-to-target accounting.
pub const TARGET_GAP: f64 = 0.1;

/// Per-step tolerance when checking that an energy trace never increases.
pub const MONOTONIC_TOLERANCE: f64 = 1e-9;

/// Where the problem instances come from.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSource {
    /// `count` complete graphs; graph `i` uses seed `seed + i`.
    Generated { count: usize, n_vertices: usize, seed: u64 },
    /// Edge-list files, one graph per path.
    Files { paths: Vec<PathBuf> },
}

/// Axes of the parameter grid; cells are their cartesian product.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridAxes {
    pub layers: Vec<usize>,
    pub iterations: Vec<usize>,
    pub n_schedules: Vec<NSchedule>,
    pub dt_schedules: Vec<DtSchedule>,
    pub shots: Vec<u64>,
    #[serde(default = "default_alphas")]
    pub alphas: Vec<f64>,
}

fn default_alphas() -> Vec<f64> {
    vec![1.0]
}

/// A full sweep description; the JSON form of this struct is the sweep
/// spec file consumed by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub graph_source: GraphSource,
    /// Vertex pinned to the 0 side of the cut; `null` disables the
    /// symmetry reduction.
    #[serde(default = "default_fix_vertex")]
    pub fix_vertex: Option<usize>,
    /// Overall multiplier on the cost Hamiltonian.
    #[serde(default = "default_scale")]
    pub scale: f64,
    pub grid: GridAxes,
    pub runs_per_cell: usize,
    pub master_seed: u64,
}

fn default_fix_vertex() -> Option<usize> {
    Some(0)
}

fn default_scale() -> f64 {
    0.25
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.runs_per_cell == 0 {
            return Err(Error::InvalidArgument("runs_per_cell must be at least 1".into()));
        }
        if !self.scale.is_finite() {
            return Err(Error::InvalidArgument(format!("scale must be finite, got {}", self.scale)));
        }
        let g = &self.grid;
        if g.layers.is_empty()
            || g.iterations.is_empty()
            || g.n_schedules.is_empty()
            || g.dt_schedules.is_empty()
            || g.shots.is_empty()
            || g.alphas.is_empty()
        {
            return Err(Error::InvalidArgument("every grid axis needs at least one value".into()));
        }
        if g.layers.contains(&0) || g.iterations.contains(&0) || g.shots.contains(&0) {
            return Err(Error::InvalidArgument(
                "layers, iterations, and shots must be at least 1".into(),
            ));
        }
        if g.alphas.iter().any(|&a| a <= 0.0 || !a.is_finite()) {
            return Err(Error::InvalidArgument("gains must be positive".into()));
        }
        for ns in &g.n_schedules {
            ns.validate()?;
        }
        for ds in &g.dt_schedules {
            ds.validate()?;
        }
        match &self.graph_source {
            GraphSource::Generated { count, n_vertices, .. } => {
                if *count == 0 {
                    return Err(Error::InvalidArgument("graph count must be at least 1".into()));
                }
                if *n_vertices < 2 {
                    return Err(Error::InvalidArgument("graphs need at least 2 vertices".into()));
                }
            }
            GraphSource::Files { paths } => {
                if paths.is_empty() {
                    return Err(Error::InvalidArgument("graph file list is empty".into()));
                }
            }
        }
        Ok(())
    }

    /// Loads or generates the instance set, in stable id order.
    pub fn load_graphs(&self) -> Result<Vec<WeightedGraph>> {
        match &self.graph_source {
            GraphSource::Generated { count, n_vertices, seed } => (0..*count)
                .map(|i| WeightedGraph::random_complete(*n_vertices, seed.wrapping_add(i as u64)))
                .collect(),
            GraphSource::Files { paths } => {
                paths.iter().map(WeightedGraph::read_edge_list).collect()
            }
        }
    }
}

/// One point of the grid, in deterministic enumeration order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub cell_id: usize,
    pub layers: usize,
    pub iterations: usize,
    pub n_schedule: NSchedule,
    pub dt_schedule: DtSchedule,
    pub shots: u64,
    pub alpha: f64,
}

/// Enumerates grid cells: layers vary slowest, gains fastest.
pub fn enumerate_cells(grid: &GridAxes) -> Vec<Cell> {
    let mut cells = Vec::new();
    let mut cell_id = 0;
    for &layers in &grid.layers {
        for &iterations in &grid.iterations {
            for &n_schedule in &grid.n_schedules {
                for &dt_schedule in &grid.dt_schedules {
                    for &shots in &grid.shots {
                        for &alpha in &grid.alphas {
                            cells.push(Cell {
                                cell_id,
                                layers,
                                iterations,
                                n_schedule,
                                dt_schedule,
                                shots,
                                alpha,
                            });
                            cell_id += 1;
                        }
                    }
                }
            }
        }
    }
    cells
}

/// A graph made ready for simulation: its reduced (or full) cost diagonal,
/// the optimal basis states, and reference energies.
pub struct PreparedInstance {
    pub hamiltonian: IsingHamiltonian,
    pub table: EnergyTable,
    pub optima: Vec<usize>,
    /// Ground energy of the (possibly reduced) cost operator.
    pub e_star: f64,
    /// Energy of the uniform superposition, the loop's starting point.
    pub e_uniform: f64,
}

/// Builds the cost operator for `graph` (reduced at `fix_vertex` when
/// given), materializes its diagonal, and solves for the ground states.
pub fn prepare_instance(
    graph: &WeightedGraph,
    fix_vertex: Option<usize>,
    scale: f64,
) -> Result<PreparedInstance> {
    let hamiltonian = match fix_vertex {
        Some(v) => IsingHamiltonian::from_graph_reduced(graph, v, scale)?,
        None => IsingHamiltonian::from_graph_full(graph, scale),
    };
    let table = hamiltonian.energy_table()?;
    let (e_star, optima) = table.ground_states();
    let e_uniform =
        table.energies().iter().sum::<f64>() / table.len() as f64;
    Ok(PreparedInstance { hamiltonian, table, optima, e_star, e_uniform })
}

/// One iteration row of one run, as persisted in the per-run CSV.
#[derive(Debug, Clone)]
pub struct IterationRow {
    pub iteration: usize,
    pub n_used: usize,
    pub dt_used: f64,
    pub final_energy: f64,
    pub success_prob: f64,
}

/// Everything recorded about a single run of a single cell.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub graph_id: usize,
    pub cell_id: usize,
    pub run_id: usize,
    pub rows: Vec<IterationRow>,
    /// First outer iteration whose exact energy closes the normalized gap
    /// to [`TARGET_GAP`], counting the uniform start as 0.
    pub depth_to_target: Option<usize>,
}

impl RunRecord {
    pub fn final_success(&self) -> f64 {
        self.rows.last().map(|r| r.success_prob).unwrap_or(0.0)
    }

    pub fn final_energy(&self) -> f64 {
        self.rows.last().map(|r| r.final_energy).unwrap_or(f64::NAN)
    }
}

/// Aggregates of one cell over all graphs and runs.
#[derive(Debug, Clone)]
pub struct CellResult {
    pub cell: Cell,
    pub mean_success: f64,
    pub std_success: f64,
    /// Fraction of runs whose exact success probability exceeds 0.5.
    pub frac_above_half: f64,
    pub mean_final_energy: f64,
    pub std_final_energy: f64,
    /// Mean depth-to-target over the runs that reached it; `None` if none did.
    pub mean_depth_to_target: Option<f64>,
}

/// The full outcome of a sweep.
pub struct GridOutput {
    pub cells: Vec<CellResult>,
    pub runs: Vec<RunRecord>,
    pub graphs: Vec<GraphInfo>,
}

/// Identity of one instance, for the sweep manifest.
#[derive(Debug, Clone, Serialize)]
pub struct GraphInfo {
    pub graph_id: usize,
    pub n_vertices: usize,
    pub sha256: String,
}

fn graph_info(graph_id: usize, graph: &WeightedGraph) -> GraphInfo {
    let digest = Sha256::digest(graph.to_edge_list_string().as_bytes());
    GraphInfo {
        graph_id,
        n_vertices: graph.n_vertices(),
        sha256: format!("{digest:x}"),
    }
}

/// Generator for one run, derived from its coordinates so reruns of any
/// subset reproduce the exact stream.
pub fn run_rng(master_seed: u64, graph_id: u64, cell_id: u64, run_id: u64) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[0..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&graph_id.to_le_bytes());
    seed[16..24].copy_from_slice(&cell_id.to_le_bytes());
    seed[24..32].copy_from_slice(&run_id.to_le_bytes());
    ChaCha8Rng::from_seed(seed)
}

/// Runs the whole grid, optionally capping the rayon worker count.
///
/// Output order is the deterministic (cell, graph, run) order regardless
/// of how the work is scheduled.
pub fn run_grid(spec: &ExperimentSpec, workers: Option<usize>) -> Result<GridOutput> {
    spec.validate()?;
    let graphs = spec.load_graphs()?;
    let infos: Vec<GraphInfo> =
        graphs.iter().enumerate().map(|(id, g)| graph_info(id, g)).collect();
    let prepared: Vec<PreparedInstance> = graphs
        .iter()
        .map(|g| prepare_instance(g, spec.fix_vertex, spec.scale))
        .collect::<Result<_>>()?;
    let cells = enumerate_cells(&spec.grid);

    let mut tasks = Vec::with_capacity(cells.len() * prepared.len() * spec.runs_per_cell);
    for cell in &cells {
        for graph_id in 0..prepared.len() {
            for run_id in 0..spec.runs_per_cell {
                tasks.push((cell, graph_id, run_id));
            }
        }
    }

    let execute = |&(cell, graph_id, run_id): &(&Cell, usize, usize)| -> Result<RunRecord> {
        let instance = &prepared[graph_id];
        let mut rng = run_rng(
            spec.master_seed,
            graph_id as u64,
            cell.cell_id as u64,
            run_id as u64,
        );
        let config = MgiConfig::new(
            cell.iterations,
            FalqonParams {
                layers: cell.layers,
                dt: cell.dt_schedule.dt_at(1, cell.iterations),
                alpha: cell.alpha,
                beta_source: Default::default(),
            },
            cell.shots,
            cell.n_schedule,
            cell.dt_schedule,
        );
        let trace = run_mgi_with_table(&config, &instance.table, &instance.optima, &mut rng)?;
        let rows: Vec<IterationRow> = trace
            .iterations
            .iter()
            .map(|it| IterationRow {
                iteration: it.iteration,
                n_used: it.n_used,
                dt_used: it.dt_used,
                final_energy: it.final_energy,
                success_prob: it.success_probability,
            })
            .collect();
        let mut energies = Vec::with_capacity(rows.len() + 1);
        energies.push(instance.e_uniform);
        energies.extend(rows.iter().map(|r| r.final_energy));
        let depth = depth_to_target(&energies, instance.e_star, TARGET_GAP);
        Ok(RunRecord { graph_id, cell_id: cell.cell_id, run_id, rows, depth_to_target: depth })
    };

    let runs: Vec<RunRecord> = match workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
            pool.install(|| tasks.par_iter().map(execute).collect::<Result<_>>())?
        }
        None => tasks.par_iter().map(execute).collect::<Result<_>>()?,
    };

    let runs_per_cell = prepared.len() * spec.runs_per_cell;
    let cells_out: Vec<CellResult> = cells
        .iter()
        .enumerate()
        .map(|(i, &cell)| {
            aggregate_cell(cell, &runs[i * runs_per_cell..(i + 1) * runs_per_cell])
        })
        .collect();

    Ok(GridOutput { cells: cells_out, runs, graphs: infos })
}

/// Collapses one cell's run records into means, population standard
/// deviations, and the above-half fraction. Summation follows run order.
pub fn aggregate_cell(cell: Cell, runs: &[RunRecord]) -> CellResult {
    let n = runs.len() as f64;
    let successes: Vec<f64> = runs.iter().map(RunRecord::final_success).collect();
    let energies: Vec<f64> = runs.iter().map(RunRecord::final_energy).collect();
    let mean = |xs: &[f64]| xs.iter().sum::<f64>() / n;
    let std = |xs: &[f64], m: f64| {
        (xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / n).sqrt()
    };
    let mean_success = mean(&successes);
    let mean_final_energy = mean(&energies);
    let reached: Vec<f64> =
        runs.iter().filter_map(|r| r.depth_to_target.map(|d| d as f64)).collect();
    CellResult {
        cell,
        mean_success,
        std_success: std(&successes, mean_success),
        frac_above_half: successes.iter().filter(|&&s| s > 0.5).count() as f64 / n,
        mean_final_energy,
        std_final_energy: std(&energies, mean_final_energy),
        mean_depth_to_target: if reached.is_empty() {
            None
        } else {
            Some(reached.iter().sum::<f64>() / reached.len() as f64)
        },
    }
}

/// One baseline curve: a plain deep feedback run with no outer loop.
#[derive(Debug, Clone)]
pub struct BaselineCurve {
    pub graph_id: usize,
    pub trace: FalqonTrace,
    pub e_star: f64,
    /// First layer closing the normalized gap to `delta0`.
    pub depth_to_target: Option<usize>,
}

/// Runs plain feedback on each graph from the uniform state.
pub fn falqon_baseline(
    graphs: &[WeightedGraph],
    fix_vertex: Option<usize>,
    scale: f64,
    params: &FalqonParams,
    delta0: f64,
) -> Result<Vec<BaselineCurve>> {
    graphs
        .iter()
        .enumerate()
        .map(|(graph_id, g)| {
            let instance = prepare_instance(g, fix_vertex, scale)?;
            let psi0 = StateVector::uniform(instance.table.n_qubits())?;
            let trace = run_falqon_with_table(&instance.table, psi0, params)?;
            let depth = depth_to_target(&trace.energies, instance.e_star, delta0);
            Ok(BaselineCurve { graph_id, trace, e_star: instance.e_star, depth_to_target: depth })
        })
        .collect()
}

/// Largest candidate time step whose whole energy trace is nonincreasing
/// within [`MONOTONIC_TOLERANCE`] per step, or `None` if all fail.
pub fn monotonicity_check(
    table: &EnergyTable,
    psi0: &StateVector,
    dt_candidates: &[f64],
    layers: usize,
    alpha: f64,
) -> Result<Option<f64>> {
    let mut best: Option<f64> = None;
    for &dt in dt_candidates {
        let params = FalqonParams { layers, dt, alpha, beta_source: Default::default() };
        let trace = run_falqon_with_table(table, psi0.clone(), &params)?;
        let monotone = trace
            .energies
            .windows(2)
            .all(|pair| pair[1] <= pair[0] + MONOTONIC_TOLERANCE);
        if monotone && best.is_none_or(|b| dt > b) {
            best = Some(dt);
        }
    }
    Ok(best)
}

/// Writes the per-run CSV: one row per outer iteration of every run.
pub fn write_runs_csv<W: Write>(mut w: W, runs: &[RunRecord]) -> Result<()> {
    writeln!(w, "graph_id,cell_id,run_id,iteration,n_used,dt_used,final_energy,success_prob")?;
    for run in runs {
        for row in &run.rows {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{}",
                run.graph_id,
                run.cell_id,
                run.run_id,
                row.iteration,
                row.n_used,
                row.dt_used,
                row.final_energy,
                row.success_prob
            )?;
        }
    }
    Ok(())
}

/// Writes the aggregate CSV: one row per grid cell.
pub fn write_cells_csv<W: Write>(mut w: W, cells: &[CellResult]) -> Result<()> {
    writeln!(
        w,
        "cell_id,L,R,n_schedule,dt_schedule,shots,mean_success,std_success,\
         frac_above_half,mean_final_energy,std_final_energy,mean_depth_to_target"
    )?;
    for c in cells {
        let depth = c.mean_depth_to_target.map(|d| d.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            c.cell.cell_id,
            c.cell.layers,
            c.cell.iterations,
            c.cell.n_schedule,
            c.cell.dt_schedule,
            c.cell.shots,
            c.mean_success,
            c.std_success,
            c.frac_above_half,
            c.mean_final_energy,
            c.std_final_energy,
            depth
        )?;
    }
    Ok(())
}

/// Writes the sweep summary: spec echo, instance manifest, version, and
/// wall-clock time.
pub fn write_summary_json<W: Write>(
    w: W,
    spec: &ExperimentSpec,
    graphs: &[GraphInfo],
    started: Instant,
) -> Result<()> {
    #[derive(Serialize)]
    struct Summary<'a> {
        spec: &'a ExperimentSpec,
        instances: &'a [GraphInfo],
        software_version: &'a str,
        wall_clock_seconds: f64,
        notes: [&'a str; 1],
    }
    let summary = Summary {
        spec,
        instances: graphs,
        software_version: env!("CARGO_PKG_VERSION"),
        wall_clock_seconds: started.elapsed().as_secs_f64(),
        notes: ["shot budget is applied uniformly to every grid cell"],
    };
    serde_json::to_writer_pretty(w, &summary)
        .map_err(|e| Error::InvalidArgument(format!("summary serialization: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_spec() -> ExperimentSpec {
        ExperimentSpec {
            graph_source: GraphSource::Generated { count: 1, n_vertices: 6, seed: 3 },
            fix_vertex: Some(0),
            scale: 0.25,
            grid: GridAxes {
                layers: vec![2],
                iterations: vec![4],
                n_schedules: vec![NSchedule::Fixed(5)],
                dt_schedules: vec![DtSchedule::Constant(0.4)],
                shots: vec![200],
                alphas: vec![1.0],
            },
            runs_per_cell: 1,
            master_seed: 11,
        }
    }

    #[test]
    fn single_run_has_zero_spread() {
        let out = run_grid(&tiny_spec(), Some(1)).unwrap();
        assert_eq!(out.cells.len(), 1);
        assert_eq!(out.runs.len(), 1);
        let cell = &out.cells[0];
        assert_eq!(cell.std_success, 0.0);
        assert_eq!(cell.std_final_energy, 0.0);
        assert_eq!(out.runs[0].rows.len(), 4);
    }

    #[test]
    fn grid_output_is_deterministic_bytes() {
        let spec = ExperimentSpec {
            graph_source: GraphSource::Generated { count: 2, n_vertices: 6, seed: 5 },
            runs_per_cell: 3,
            grid: GridAxes {
                layers: vec![2, 3],
                iterations: vec![3],
                n_schedules: vec![NSchedule::Fixed(4), NSchedule::Linear { n_max: 10, n_min: 2 }],
                dt_schedules: vec![DtSchedule::Constant(0.3)],
                shots: vec![100],
                alphas: vec![1.0],
            },
            ..tiny_spec()
        };
        let render = |workers| {
            let out = run_grid(&spec, workers).unwrap();
            let mut runs = Vec::new();
            write_runs_csv(&mut runs, &out.runs).unwrap();
            let mut cells = Vec::new();
            write_cells_csv(&mut cells, &out.cells).unwrap();
            (runs, cells)
        };
        let a = render(Some(1));
        let b = render(Some(4));
        assert_eq!(a, b);
    }

    #[test]
    fn aggregates_match_run_records() {
        let spec = ExperimentSpec { runs_per_cell: 5, ..tiny_spec() };
        let out = run_grid(&spec, Some(2)).unwrap();
        let cell = &out.cells[0];
        let finals: Vec<f64> = out.runs.iter().map(RunRecord::final_success).collect();
        let mean = finals.iter().sum::<f64>() / finals.len() as f64;
        assert!((cell.mean_success - mean).abs() < 1e-12);
        let above = finals.iter().filter(|&&s| s > 0.5).count() as f64 / finals.len() as f64;
        assert_eq!(cell.frac_above_half, above);
        let energies: Vec<f64> = out.runs.iter().map(RunRecord::final_energy).collect();
        let mean_e = energies.iter().sum::<f64>() / energies.len() as f64;
        assert!((cell.mean_final_energy - mean_e).abs() < 1e-12);
    }

    #[test]
    fn cell_enumeration_is_row_major() {
        let grid = GridAxes {
            layers: vec![1, 2],
            iterations: vec![10, 20],
            n_schedules: vec![NSchedule::Fixed(5)],
            dt_schedules: vec![DtSchedule::Constant(0.1)],
            shots: vec![50],
            alphas: vec![1.0],
        };
        let cells = enumerate_cells(&grid);
        assert_eq!(cells.len(), 4);
        assert_eq!((cells[0].layers, cells[0].iterations), (1, 10));
        assert_eq!((cells[1].layers, cells[1].iterations), (1, 20));
        assert_eq!((cells[3].layers, cells[3].iterations), (2, 20));
        assert_eq!(cells[3].cell_id, 3);
    }

    #[test]
    fn monotonicity_check_picks_largest_passing_step() {
        let g = WeightedGraph::random_complete(7, 8).unwrap();
        let inst = prepare_instance(&g, Some(0), 0.25).unwrap();
        let psi0 = StateVector::uniform(6).unwrap();
        let best =
            monotonicity_check(&inst.table, &psi0, &[0.005, 0.008, 0.01], 50, 1.0).unwrap();
        assert_eq!(best, Some(0.01));

        // A ground-state start keeps every trace flat, so the largest
        // candidate always passes.
        let ground = StateVector::basis(6, inst.optima[0]).unwrap();
        let best = monotonicity_check(&inst.table, &ground, &[0.1, 2.0, 9.0], 30, 1.0).unwrap();
        assert_eq!(best, Some(9.0));
    }

    #[test]
    fn baseline_curves_are_monotone_and_reach_target() {
        let graphs = vec![WeightedGraph::random_complete(8, 2).unwrap()];
        let curves = falqon_baseline(
            &graphs,
            Some(0),
            0.25,
            &FalqonParams::new(300, 0.2),
            TARGET_GAP,
        )
        .unwrap();
        let curve = &curves[0];
        assert!(curve
            .trace
            .energies
            .windows(2)
            .all(|p| p[1] <= p[0] + MONOTONIC_TOLERANCE));
        assert!(curve.depth_to_target.is_some());
        assert!(curve.trace.final_energy() >= curve.e_star - 1e-12);
    }

    #[test]
    fn spec_validation_catches_empty_axes() {
        let mut spec = tiny_spec();
        spec.grid.layers.clear();
        assert!(spec.validate().is_err());
        let mut spec2 = tiny_spec();
        spec2.runs_per_cell = 0;
        assert!(spec2.validate().is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = tiny_spec();
        let json = serde_json::to_string(&spec).unwrap();
        let back: ExperimentSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.runs_per_cell, spec.runs_per_cell);
        assert_eq!(back.master_seed, spec.master_seed);
        assert_eq!(back.fix_vertex, spec.fix_vertex);
    }

    #[test]
    fn file_sources_load_in_path_order() {
        let dir = std::env::temp_dir().join("falqon-mgi-file-source-test");
        std::fs::create_dir_all(&dir).unwrap();
        let a = dir.join("a.txt");
        let b = dir.join("b.txt");
        WeightedGraph::random_complete(5, 1).unwrap().write_edge_list(&a).unwrap();
        WeightedGraph::random_complete(6, 2).unwrap().write_edge_list(&b).unwrap();

        let spec = ExperimentSpec {
            graph_source: GraphSource::Files { paths: vec![a, b] },
            ..tiny_spec()
        };
        let graphs = spec.load_graphs().unwrap();
        assert_eq!(graphs[0].n_vertices(), 5);
        assert_eq!(graphs[1].n_vertices(), 6);

        let missing = ExperimentSpec {
            graph_source: GraphSource::Files { paths: vec![dir.join("missing.txt")] },
            ..tiny_spec()
        };
        assert!(missing.load_graphs().is_err());
    }
}
