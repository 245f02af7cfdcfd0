//! Run orchestration: seeding, the per-ant iteration loop, worker threads,
//! convergence sampling and the final report.
//!
//! Ants are split into contiguous groups, one group per worker. In the
//! default asynchronous mode each worker walks its ants through the
//! iterations on its own and reads whatever `l_best` tours the other workers
//! have published. The synchronous mode freezes one colony snapshot per
//! iteration and applies all updates in ant order afterwards, which makes a
//! run reproducible for any worker count. Classic ACO always runs
//! synchronously because its matrix update needs every tour of the iteration.

use std::io::Write;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use parking_lot::Mutex;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::colony::{Ant, ColonyState};
use crate::construct::{
    build_full, build_partial, ConstructionScratch, HeuristicTable, PheromoneMatrix, PheromoneView,
};
use crate::error::Error;
use crate::instance::{Instance, MATRIX_LIMIT};
use crate::tour::{pct_error, Tour};
use crate::two_opt::{maybe_two_opt, TwoOptParams};

/// Which construction scheme a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Matrix-free model with partial reuse of each ant's best tour.
    #[serde(alias = "partial_aco")]
    Partial,
    /// Matrix-free model, full tour construction every iteration.
    #[serde(alias = "paco_full")]
    Paco,
    /// Pheromone matrix with evaporation and deposit.
    #[serde(alias = "classic_aco")]
    Classic,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Partial => "partial",
            Mode::Paco => "paco",
            Mode::Classic => "classic",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "partial" | "partial_aco" => Ok(Mode::Partial),
            "paco" | "paco_full" => Ok(Mode::Paco),
            "classic" | "classic_aco" => Ok(Mode::Classic),
            other => Err(Error::Config(format!("unknown mode `{other}`"))),
        }
    }
}

/// Every parameter of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub ants: usize,
    /// Colony iterations, counting the seeding iteration.
    pub iterations: u64,
    pub alpha: f64,
    pub beta: f64,
    /// Chance that an ant rebuilds only part of its best tour.
    pub partial_prob: f64,
    /// Upper bound on the rebuilt fraction of a tour.
    pub max_mod_frac: f64,
    pub two_opt_prob: f64,
    /// 2-opt position window, 0 for unbounded.
    pub two_opt_window: usize,
    pub workers: usize,
    pub seed: u64,
    /// Base pheromone of the matrix-free model.
    pub tau0: f64,
    /// Classic mode evaporation rate.
    pub rho: f64,
    /// Classic mode initial pheromone.
    pub tau_max: f64,
    /// Wall-clock limit in seconds; the iteration in flight is finished.
    pub time_budget_s: Option<f64>,
    pub sample_interval_s: f64,
    /// One frozen snapshot per iteration instead of free-running workers.
    pub synchronous: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            ants: 16,
            iterations: 100_000,
            alpha: 5.0,
            beta: 5.0,
            partial_prob: 1.0,
            max_mod_frac: 1.0,
            two_opt_prob: 0.0,
            two_opt_window: 0,
            workers: 8,
            seed: 0,
            tau0: crate::colony::DEFAULT_TAU0,
            rho: 0.5,
            tau_max: 1.0,
            time_budget_s: None,
            sample_interval_s: 1.0,
            synchronous: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let unit = |name: &str, v: f64| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::Config(format!("{name} must lie in [0, 1], got {v}")))
            }
        };
        if self.ants == 0 {
            return Err(Error::Config("need at least one ant".into()));
        }
        if self.iterations == 0 {
            return Err(Error::Config("need at least one iteration".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("need at least one worker".into()));
        }
        unit("partial_prob", self.partial_prob)?;
        unit("two_opt_prob", self.two_opt_prob)?;
        unit("rho", self.rho)?;
        if !(self.max_mod_frac > 0.0 && self.max_mod_frac <= 1.0) {
            return Err(Error::Config(format!(
                "max_mod_frac must lie in (0, 1], got {}",
                self.max_mod_frac
            )));
        }
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(Error::Config("alpha and beta must be finite".into()));
        }
        if !(self.tau0 > 0.0) || !(self.tau_max > 0.0) {
            return Err(Error::Config("tau0 and tau_max must be positive".into()));
        }
        if let Some(b) = self.time_budget_s {
            if !(b > 0.0) {
                return Err(Error::Config("time budget must be positive".into()));
            }
        }
        if !(self.sample_interval_s > 0.0) {
            return Err(Error::Config("sample interval must be positive".into()));
        }
        Ok(())
    }

    fn two_opt(&self) -> TwoOptParams {
        TwoOptParams {
            probability: self.two_opt_prob,
            window: self.two_opt_window,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSample {
    pub elapsed_s: f64,
    pub g_best_length: u64,
    pub iterations_done: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub mode: Mode,
    pub best_length: u64,
    pub best_tour: Tour,
    pub pct_error: Option<f64>,
    pub wall_time: f64,
    /// Completed colony iterations (ant constructions divided by ant count).
    pub iterations_done: u64,
    pub constructions: u64,
    pub comparisons_total: u64,
    pub two_opt_runs: u64,
    /// Final `l_best` length of every ant.
    pub ant_best_lengths: Vec<u64>,
    pub convergence: Vec<ConvergenceSample>,
}

impl RunReport {
    /// Writes the convergence trace as `elapsed_s,g_best_length,iterations_done`.
    pub fn write_convergence_csv(&self, path: impl AsRef<Path>) -> Result<(), Error> {
        let path = path.as_ref();
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        write_convergence(&self.convergence, file)
    }
}

pub fn write_convergence<W: Write>(samples: &[ConvergenceSample], out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    for s in samples {
        w.serialize(s)?;
    }
    w.flush().map_err(|e| Error::Io { path: None, source: e })?;
    Ok(())
}

struct Sampler {
    interval: f64,
    next_at: f64,
    samples: Vec<ConvergenceSample>,
}

/// State shared by all workers of one run.
struct Shared<'a> {
    inst: &'a Instance,
    heur: &'a HeuristicTable,
    cfg: &'a RunConfig,
    mode: Mode,
    colony: ColonyState,
    start: Instant,
    deadline: Option<Instant>,
    constructions: AtomicU64,
    sampler: Mutex<Sampler>,
}

impl Shared<'_> {
    fn elapsed(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }

    fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn maybe_sample(&self) {
        let elapsed = self.elapsed();
        let mut s = self.sampler.lock();
        if elapsed < s.next_at {
            return;
        }
        while s.next_at <= elapsed {
            s.next_at += s.interval;
        }
        self.push_sample(&mut s, elapsed);
    }

    fn push_sample(&self, s: &mut Sampler, elapsed: f64) {
        // g_best is read under the sampler lock, so samples stay non-increasing
        let g = self.colony.g_best().length();
        if g == u64::MAX {
            return;
        }
        s.samples.push(ConvergenceSample {
            elapsed_s: elapsed,
            g_best_length: g,
            iterations_done: self.constructions.load(Ordering::Relaxed) / self.cfg.ants as u64,
        });
    }

    /// Builds one tour for `ant` against `view`, then applies 2-opt by chance.
    fn build<V: PheromoneView + ?Sized>(
        &self,
        ant: &mut Ant,
        view: &V,
        scratch: &mut ConstructionScratch,
        iteration: u64,
    ) -> (Tour, bool) {
        let l_best = ant.l_best().cloned();
        let rng = ant.rng_mut();
        let partial = match (&l_best, self.mode) {
            (Some(lb), Mode::Partial) if iteration > 0 => {
                (rng.random::<f64>() < self.cfg.partial_prob).then_some(lb)
            }
            _ => None,
        };
        let tour = match partial {
            Some(lb) => build_partial(self.inst, self.heur, view, scratch, lb, self.cfg.max_mod_frac, rng),
            None => build_full(self.inst, self.heur, view, scratch, rng),
        };
        maybe_two_opt(self.inst, tour, &self.cfg.two_opt(), rng)
    }
}

struct WorkerOutcome {
    ants: Vec<Ant>,
    comparisons: u64,
    two_opt_runs: u64,
}

/// Runs the colony on `inst` and reports the best tour found.
pub fn run(inst: &Instance, cfg: &RunConfig, mode: Mode) -> Result<RunReport, Error> {
    cfg.validate()?;
    if mode == Mode::Classic && inst.len() > MATRIX_LIMIT {
        return Err(Error::Config(format!(
            "classic mode needs a pheromone matrix; {} cities exceeds the {MATRIX_LIMIT} limit",
            inst.len()
        )));
    }
    let heur = HeuristicTable::new(inst, cfg.beta);
    let start = Instant::now();
    let shared = Shared {
        inst,
        heur: &heur,
        cfg,
        mode,
        colony: ColonyState::new(inst.len(), cfg.ants, cfg.tau0),
        start,
        deadline: cfg
            .time_budget_s
            .map(|s| start + Duration::from_secs_f64(s)),
        constructions: AtomicU64::new(0),
        sampler: Mutex::new(Sampler {
            interval: cfg.sample_interval_s,
            next_at: cfg.sample_interval_s,
            samples: Vec::new(),
        }),
    };

    let workers = cfg.workers.min(cfg.ants);
    let ants: Vec<Ant> = (0..cfg.ants).map(|id| Ant::new(id, cfg.seed)).collect();
    let groups = partition(ants, workers);

    let outcomes = match mode {
        Mode::Classic => vec![run_classic(&shared, groups)?],
        _ if cfg.synchronous => vec![run_synchronous(&shared, groups)?],
        _ if workers == 1 => groups.into_iter().map(|g| run_worker(&shared, g)).collect(),
        _ => std::thread::scope(|s| {
            let handles: Vec<_> = groups
                .into_iter()
                .map(|g| {
                    let shared = &shared;
                    s.spawn(move || run_worker(shared, g))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect::<Vec<_>>()
        }),
    };

    let wall_time = shared.elapsed();
    {
        let mut s = shared.sampler.lock();
        shared.push_sample(&mut s, wall_time);
    }

    let best_tour = shared
        .colony
        .g_best()
        .tour()
        .expect("seeding always produces a tour");
    let mut ant_best: Vec<(usize, u64)> = outcomes
        .iter()
        .flat_map(|o| &o.ants)
        .map(|a| (a.id(), a.l_best().map_or(u64::MAX, Tour::length)))
        .collect();
    ant_best.sort_unstable();
    let constructions = shared.constructions.load(Ordering::Relaxed);
    let sampler = shared.sampler.into_inner();
    Ok(RunReport {
        mode,
        best_length: best_tour.length(),
        pct_error: inst.optimum().map(|o| pct_error(best_tour.length(), o)),
        best_tour,
        wall_time,
        iterations_done: constructions / cfg.ants as u64,
        constructions,
        comparisons_total: outcomes.iter().map(|o| o.comparisons).sum(),
        two_opt_runs: outcomes.iter().map(|o| o.two_opt_runs).sum(),
        ant_best_lengths: ant_best.into_iter().map(|(_, len)| len).collect(),
        convergence: sampler.samples,
    })
}

/// Runs full-construction P-ACO until `budget_s` seconds have passed,
/// finishing the iteration in flight.
pub fn run_timed_baseline(inst: &Instance, cfg: &RunConfig, budget_s: f64) -> Result<RunReport, Error> {
    if !(budget_s > 0.0) {
        return Err(Error::Config("time budget must be positive".into()));
    }
    let cfg = RunConfig {
        iterations: u64::MAX,
        time_budget_s: Some(budget_s),
        ..cfg.clone()
    };
    run(inst, &cfg, Mode::Paco)
}

fn partition(ants: Vec<Ant>, workers: usize) -> Vec<Vec<Ant>> {
    let m = ants.len();
    let mut groups: Vec<Vec<Ant>> = (0..workers).map(|_| Vec::new()).collect();
    for (i, ant) in ants.into_iter().enumerate() {
        groups[i * workers / m].push(ant);
    }
    groups
}

fn run_worker(shared: &Shared<'_>, mut ants: Vec<Ant>) -> WorkerOutcome {
    let mut scratch = ConstructionScratch::new(shared.inst.len(), shared.cfg.alpha);
    let mut two_opt_runs = 0;
    for iteration in 0..shared.cfg.iterations {
        if iteration > 0 && shared.out_of_time() {
            break;
        }
        for ant in &mut ants {
            let view = shared.colony.snapshot();
            let (tour, improved) = shared.build(ant, &view, &mut scratch, iteration);
            drop(view);
            two_opt_runs += improved as u64;
            shared
                .colony
                .update_l_best(ant, tour)
                .expect("constructed tours match the instance");
            shared.constructions.fetch_add(1, Ordering::Relaxed);
            shared.maybe_sample();
        }
    }
    WorkerOutcome {
        ants,
        comparisons: scratch.comparisons(),
        two_opt_runs,
    }
}

/// Builds one tour per ant against a shared view, in parallel across groups.
fn build_iteration<V: PheromoneView + Sync + ?Sized>(
    shared: &Shared<'_>,
    groups: &mut [Vec<Ant>],
    scratches: &mut [ConstructionScratch],
    view: &V,
    iteration: u64,
) -> Vec<Vec<(Tour, bool)>> {
    if groups.len() == 1 {
        let scratch = &mut scratches[0];
        return vec![groups[0]
            .iter_mut()
            .map(|ant| shared.build(ant, view, scratch, iteration))
            .collect()];
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = groups
            .iter_mut()
            .zip(scratches.iter_mut())
            .map(|(group, scratch)| {
                s.spawn(move || {
                    group
                        .iter_mut()
                        .map(|ant| shared.build(ant, view, scratch, iteration))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn run_synchronous(shared: &Shared<'_>, mut groups: Vec<Vec<Ant>>) -> Result<WorkerOutcome, Error> {
    let n = shared.inst.len();
    let mut scratches: Vec<_> = groups
        .iter()
        .map(|_| ConstructionScratch::new(n, shared.cfg.alpha))
        .collect();
    let mut two_opt_runs = 0;
    for iteration in 0..shared.cfg.iterations {
        if iteration > 0 && shared.out_of_time() {
            break;
        }
        let view = shared.colony.snapshot();
        let built = build_iteration(shared, &mut groups, &mut scratches, &view, iteration);
        drop(view);
        for (group, tours) in groups.iter_mut().zip(built) {
            for (ant, (tour, improved)) in group.iter_mut().zip(tours) {
                two_opt_runs += improved as u64;
                shared.colony.update_l_best(ant, tour)?;
                shared.constructions.fetch_add(1, Ordering::Relaxed);
            }
        }
        shared.maybe_sample();
    }
    Ok(WorkerOutcome {
        ants: groups.into_iter().flatten().collect(),
        comparisons: scratches.iter().map(ConstructionScratch::comparisons).sum(),
        two_opt_runs,
    })
}

fn run_classic(shared: &Shared<'_>, mut groups: Vec<Vec<Ant>>) -> Result<WorkerOutcome, Error> {
    let n = shared.inst.len();
    let cfg = shared.cfg;
    let mut matrix = PheromoneMatrix::new(n, cfg.rho, cfg.tau_max)?;
    let mut scratches: Vec<_> = groups
        .iter()
        .map(|_| ConstructionScratch::new(n, cfg.alpha))
        .collect();
    let mut two_opt_runs = 0;
    for iteration in 0..cfg.iterations {
        if iteration > 0 && shared.out_of_time() {
            break;
        }
        let built = build_iteration(shared, &mut groups, &mut scratches, &matrix, iteration);
        let mut tours: Vec<(usize, Tour)> = Vec::with_capacity(cfg.ants);
        for (group, built) in groups.iter().zip(built) {
            for (ant, (tour, improved)) in group.iter().zip(built) {
                two_opt_runs += improved as u64;
                tours.push((ant.id(), tour));
            }
        }
        matrix.evaporate();
        matrix.deposit(tours.iter().map(|(_, t)| t));
        let mut by_id: Vec<&mut Ant> = groups.iter_mut().flatten().collect();
        by_id.sort_by_key(|a| a.id());
        for (id, tour) in tours {
            shared.colony.update_l_best(by_id[id], tour)?;
            shared.constructions.fetch_add(1, Ordering::Relaxed);
        }
        shared.maybe_sample();
    }
    Ok(WorkerOutcome {
        ants: groups.into_iter().flatten().collect(),
        comparisons: scratches.iter().map(ConstructionScratch::comparisons).sum(),
        two_opt_runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tour::{brute_force_optimum, check_permutation};
    use rand::rngs::SmallRng;
    use rand::SeedableRng;

    fn random_instance(n: usize, seed: u64) -> Instance {
        let mut rng = SmallRng::seed_from_u64(seed);
        let coords = (0..n)
            .map(|_| (rng.random_range(0.0..1000.0), rng.random_range(0.0..1000.0)))
            .collect();
        Instance::new(format!("rand{n}"), coords).unwrap()
    }

    fn small_cfg() -> RunConfig {
        RunConfig {
            ants: 4,
            iterations: 50,
            workers: 1,
            seed: 11,
            ..RunConfig::default()
        }
    }

    #[test]
    fn validation() {
        let ok = small_cfg();
        assert!(ok.validate().is_ok());
        for bad in [
            RunConfig { ants: 0, ..ok.clone() },
            RunConfig { iterations: 0, ..ok.clone() },
            RunConfig { workers: 0, ..ok.clone() },
            RunConfig { partial_prob: 1.1, ..ok.clone() },
            RunConfig { max_mod_frac: 0.0, ..ok.clone() },
            RunConfig { two_opt_prob: -0.1, ..ok.clone() },
            RunConfig { rho: 2.0, ..ok.clone() },
            RunConfig { time_budget_s: Some(0.0), ..ok.clone() },
        ] {
            assert!(bad.validate().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn mode_names() {
        for (s, m) in [("partial", Mode::Partial), ("paco_full", Mode::Paco), ("classic", Mode::Classic)] {
            assert_eq!(s.parse::<Mode>().unwrap(), m);
        }
        assert!("greedy".parse::<Mode>().is_err());
    }

    #[test]
    fn single_iteration_is_seeding_only() {
        let inst = random_instance(20, 1);
        let cfg = RunConfig { iterations: 1, ..small_cfg() };
        let r = run(&inst, &cfg, Mode::Partial).unwrap();
        assert_eq!(r.iterations_done, 1);
        assert_eq!(r.constructions, 4);
        assert_eq!(r.comparisons_total, 4 * 20 * 19 / 2);
        assert_eq!(r.best_length, *r.ant_best_lengths.iter().min().unwrap());
    }

    #[test]
    fn paco_comparison_accounting() {
        let inst = random_instance(30, 2);
        let cfg = RunConfig { iterations: 25, ..small_cfg() };
        let r = run(&inst, &cfg, Mode::Paco).unwrap();
        assert_eq!(r.comparisons_total, 25 * 4 * 30 * 29 / 2);
    }

    #[test]
    fn deterministic_single_worker() {
        let inst = random_instance(25, 3);
        let cfg = RunConfig {
            two_opt_prob: 0.05,
            max_mod_frac: 0.3,
            partial_prob: 0.9,
            ..small_cfg()
        };
        let a = run(&inst, &cfg, Mode::Partial).unwrap();
        let b = run(&inst, &cfg, Mode::Partial).unwrap();
        assert_eq!(a.best_tour, b.best_tour);
        assert_eq!(a.comparisons_total, b.comparisons_total);
        assert_eq!(a.ant_best_lengths, b.ant_best_lengths);
        assert_eq!(a.two_opt_runs, b.two_opt_runs);
    }

    #[test]
    fn synchronous_mode_independent_of_workers() {
        let inst = random_instance(25, 4);
        let cfg = RunConfig { synchronous: true, ..small_cfg() };
        let one = run(&inst, &cfg, Mode::Partial).unwrap();
        let three = run(&inst, &RunConfig { workers: 3, ..cfg.clone() }, Mode::Partial).unwrap();
        assert_eq!(one.best_tour, three.best_tour);
        assert_eq!(one.comparisons_total, three.comparisons_total);
        assert_eq!(one.ant_best_lengths, three.ant_best_lengths);
    }

    #[test]
    fn async_multi_worker_produces_valid_tours() {
        let inst = random_instance(40, 5);
        let cfg = RunConfig { workers: 4, ants: 8, iterations: 200, ..small_cfg() };
        let r = run(&inst, &cfg, Mode::Partial).unwrap();
        check_permutation(r.best_tour.order(), 40).unwrap();
        assert_eq!(r.best_length, crate::tour::tour_length(&inst, r.best_tour.order()).unwrap());
        assert_eq!(r.iterations_done, 200);
    }

    #[test]
    fn classic_mode_runs_and_rejects_huge() {
        let inst = random_instance(15, 6);
        let r = run(&inst, &small_cfg(), Mode::Classic).unwrap();
        check_permutation(r.best_tour.order(), 15).unwrap();
        assert_eq!(r.comparisons_total, 50 * 4 * 15 * 14 / 2);
        let big = random_instance(MATRIX_LIMIT + 1, 1);
        assert!(matches!(run(&big, &small_cfg(), Mode::Classic), Err(Error::Config(_))));
    }

    #[test]
    fn tiny_instance_reaches_optimum() {
        let mut inst = random_instance(7, 8);
        let opt = brute_force_optimum(&inst).unwrap().length();
        inst.set_optimum(Some(opt));
        let cfg = RunConfig { iterations: 500, two_opt_prob: 0.01, partial_prob: 0.95, ..small_cfg() };
        let r = run(&inst, &cfg, Mode::Partial).unwrap();
        assert_eq!(r.best_length, opt);
        assert_eq!(r.pct_error, Some(0.0));
    }

    #[test]
    fn convergence_trace_is_monotone() {
        let inst = random_instance(60, 9);
        let cfg = RunConfig {
            iterations: 300,
            sample_interval_s: 0.001,
            workers: 2,
            ..small_cfg()
        };
        let r = run(&inst, &cfg, Mode::Partial).unwrap();
        assert!(r.convergence.len() >= 2);
        assert!(r.convergence.windows(2).all(|w| w[0].g_best_length >= w[1].g_best_length));
        assert_eq!(r.convergence.last().unwrap().g_best_length, r.best_length);

        let mut buf = Vec::new();
        write_convergence(&r.convergence, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("elapsed_s,g_best_length,iterations_done\n"));
        assert_eq!(text.lines().count(), r.convergence.len() + 1);
    }

    #[test]
    fn tiny_budget_finishes_seeding_iteration() {
        let inst = random_instance(200, 10);
        let cfg = RunConfig { ants: 4, workers: 2, ..RunConfig::default() };
        let r = run_timed_baseline(&inst, &cfg, 1e-9).unwrap();
        assert_eq!(r.iterations_done, 1);
        assert_eq!(r.mode, Mode::Paco);
        assert!(run_timed_baseline(&inst, &cfg, 0.0).is_err());
    }

    #[test]
    fn partition_keeps_every_ant() {
        let ants: Vec<Ant> = (0..16).map(|i| Ant::new(i, 0)).collect();
        let groups = partition(ants, 8);
        assert!(groups.iter().all(|g| g.len() == 2));
        let ids: Vec<usize> = groups.iter().flatten().map(Ant::id).collect();
        assert_eq!(ids, (0..16).collect::<Vec<_>>());
        let groups = partition((0..5).map(|i| Ant::new(i, 0)).collect(), 3);
        assert_eq!(groups.iter().map(Vec::len).sum::<usize>(), 5);
        assert!(groups.iter().all(|g| !g.is_empty()));
    }
}
