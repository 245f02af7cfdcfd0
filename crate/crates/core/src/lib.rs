//! Matrix-free ant colony optimisation for the symmetric TSP.
//!
//! Each ant remembers its best tour and pheromone is computed from those
//! tours on the fly, so memory stays linear in the number of cities. The
//! partial construction mode copies a random arc of the ant's best tour and
//! only rebuilds the remainder, which is where most of the speed comes from.
//!
//! ```no_run
//! use partial_aco::{run, Instance, Mode, RunConfig};
//!
//! let inst = Instance::from_path("pcb442.tsp")?.with_optimum(50778)?;
//! let cfg = RunConfig { iterations: 10_000, ..RunConfig::default() };
//! let report = run(&inst, &cfg, Mode::Partial)?;
//! println!("{} ({:.2}%)", report.best_length, report.pct_error.unwrap());
//! # Ok::<(), partial_aco::Error>(())
//! ```

pub mod bench;
pub mod colony;
pub mod construct;
pub mod engine;
pub mod error;
pub mod instance;
pub mod tour;
pub mod two_opt;

pub use bench::{report_speedup, run_experiment, AggregateStats, ExperimentSpec, Pairing};
pub use colony::{Ant, ColonyState, GlobalBest, LocalBest, PheromoneSnapshot};
pub use construct::{
    construct_full, construct_partial, select_next, ConstructionScratch, HeuristicTable, PheromoneMatrix,
    PheromoneView,
};
pub use engine::{run, run_timed_baseline, ConvergenceSample, Mode, RunConfig, RunReport};
pub use error::{Error, ParseError, ParseErrorKind};
pub use instance::{parse_tsplib, Instance, Optima};
pub use tour::{brute_force_optimum, tour_length, Tour};
pub use two_opt::{maybe_two_opt, two_opt, TwoOptParams};
