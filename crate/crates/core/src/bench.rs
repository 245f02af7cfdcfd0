//! Repeated seeded trials over parameter grids, with aggregate statistics.
//!
//! An [`ExperimentSpec`] names instances, a base [`RunConfig`], a grid of
//! `(max_mod_frac, partial_prob, two_opt_prob)` points and optionally a
//! baseline row that speedups are measured against. Trials run one after
//! another so wall-clock times are not skewed by each other.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::engine::{run, run_timed_baseline, Mode, RunConfig, RunReport};
use crate::error::Error;
use crate::instance::{Instance, Optima};

/// How a baseline row is paired with the rows it is compared to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pairing {
    /// Same iteration count; speedup is the ratio of mean wall times.
    EqualIterations,
    /// Baseline gets the reference's mean wall time; speedup is the ratio of
    /// iterations completed.
    TimeBudget,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Baseline {
    pub mode: Mode,
    #[serde(default)]
    pub two_opt_prob: Option<f64>,
    pub pairing: Pairing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub max_mod_frac: Vec<f64>,
    pub partial_prob: Vec<f64>,
    pub two_opt_prob: Vec<f64>,
}

impl Grid {
    pub fn single(max_mod_frac: f64, partial_prob: f64, two_opt_prob: f64) -> Self {
        Self {
            max_mod_frac: vec![max_mod_frac],
            partial_prob: vec![partial_prob],
            two_opt_prob: vec![two_opt_prob],
        }
    }

    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = Vec::new();
        for &max_mod_frac in &self.max_mod_frac {
            for &partial_prob in &self.partial_prob {
                for &two_opt_prob in &self.two_opt_prob {
                    out.push(GridPoint {
                        max_mod_frac,
                        partial_prob,
                        two_opt_prob,
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub max_mod_frac: f64,
    pub partial_prob: f64,
    pub two_opt_prob: f64,
}

/// A sweep definition, loadable from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub name: String,
    pub instances: Vec<PathBuf>,
    #[serde(default)]
    pub optima: Option<PathBuf>,
    pub trials: usize,
    pub mode: Mode,
    #[serde(default)]
    pub base: RunConfig,
    pub grid: Grid,
    #[serde(default)]
    pub baseline: Option<Baseline>,
    pub output_dir: PathBuf,
}

impl ExperimentSpec {
    pub fn from_toml(text: &str) -> Result<Self, Error> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, Error> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut spec = Self::from_toml(&text)?;
        // relative paths are taken from the config file's directory
        if let Some(dir) = path.parent() {
            let fix = |p: &mut PathBuf| {
                if p.is_relative() {
                    *p = dir.join(&*p);
                }
            };
            spec.instances.iter_mut().for_each(fix);
            if let Some(o) = spec.optima.as_mut() {
                fix(o);
            }
            fix(&mut spec.output_dir);
        }
        Ok(spec)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("spec is always serialisable")
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        let g = &self.grid;
        if g.max_mod_frac.is_empty() || g.partial_prob.is_empty() || g.two_opt_prob.is_empty() {
            return Err(Error::Config("every grid axis needs at least one value".into()));
        }
        if self.instances.is_empty() {
            return Err(Error::Config("no instances given".into()));
        }
        if let Some(missing) = self.instances.iter().find(|p| !p.exists()) {
            return Err(Error::Config(format!(
                "instance file {} does not exist",
                missing.display()
            )));
        }
        self.base.validate()
    }
}

/// Outcome of one seeded run, or the error it produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub instance: String,
    pub label: String,
    pub trial: usize,
    pub seed: u64,
    pub best_length: Option<u64>,
    pub pct_error: Option<f64>,
    pub wall_time: Option<f64>,
    pub iterations_done: Option<u64>,
    pub comparisons: Option<u64>,
    pub error: Option<String>,
}

impl RunRecord {
    fn from_result(
        instance: &str,
        label: &str,
        trial: usize,
        seed: u64,
        result: &Result<RunReport, Error>,
    ) -> Self {
        match result {
            Ok(r) => Self {
                instance: instance.into(),
                label: label.into(),
                trial,
                seed,
                best_length: Some(r.best_length),
                pct_error: r.pct_error,
                wall_time: Some(r.wall_time),
                iterations_done: Some(r.iterations_done),
                comparisons: Some(r.comparisons_total),
                error: None,
            },
            Err(e) => Self {
                instance: instance.into(),
                label: label.into(),
                trial,
                seed,
                best_length: None,
                pct_error: None,
                wall_time: None,
                iterations_done: None,
                comparisons: None,
                error: Some(e.to_string()),
            },
        }
    }
}

/// Summary of one (instance, grid point) row. `sd` columns are sample
/// standard deviations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateStats {
    pub instance: String,
    pub label: String,
    pub mode: Mode,
    pub max_mod_frac: f64,
    pub partial_prob: f64,
    pub two_opt_prob: f64,
    pub trials: usize,
    pub failures: usize,
    pub mean_error: Option<f64>,
    pub sd_error: Option<f64>,
    pub best_error: Option<f64>,
    pub worst_error: Option<f64>,
    pub mean_time: f64,
    pub sd_time: f64,
    pub mean_iterations: f64,
    pub speedup: Option<f64>,
}

/// Mean and sample standard deviation; the deviation of one value is 0.
pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

impl AggregateStats {
    /// Summarises the successful records; failed ones are only counted.
    pub fn from_records(
        instance: &str,
        label: &str,
        mode: Mode,
        point: GridPoint,
        records: &[RunRecord],
    ) -> Self {
        let ok: Vec<&RunRecord> = records.iter().filter(|r| r.error.is_none()).collect();
        let errors: Vec<f64> = ok.iter().filter_map(|r| r.pct_error).collect();
        let times: Vec<f64> = ok.iter().filter_map(|r| r.wall_time).collect();
        let iters: Vec<f64> = ok
            .iter()
            .filter_map(|r| r.iterations_done)
            .map(|i| i as f64)
            .collect();
        let (mean_error, sd_error, best_error, worst_error) = if errors.is_empty() {
            (None, None, None, None)
        } else {
            let (m, sd) = mean_sd(&errors);
            (
                Some(m),
                Some(sd),
                errors.iter().copied().reduce(f64::min),
                errors.iter().copied().reduce(f64::max),
            )
        };
        let (mean_time, sd_time) = if times.is_empty() { (0.0, 0.0) } else { mean_sd(&times) };
        Self {
            instance: instance.into(),
            label: label.into(),
            mode,
            max_mod_frac: point.max_mod_frac,
            partial_prob: point.partial_prob,
            two_opt_prob: point.two_opt_prob,
            trials: records.len(),
            failures: records.len() - ok.len(),
            mean_error,
            sd_error,
            best_error,
            worst_error,
            mean_time,
            sd_time,
            mean_iterations: if iters.is_empty() { 0.0 } else { mean_sd(&iters).0 },
            speedup: None,
        }
    }
}

/// Speedup of `reference` over `baseline` under the given pairing.
pub fn report_speedup(
    reference: &AggregateStats,
    baseline: &AggregateStats,
    pairing: Pairing,
) -> Result<f64, Error> {
    match pairing {
        Pairing::EqualIterations => {
            if reference.mean_iterations != baseline.mean_iterations {
                return Err(Error::Config(format!(
                    "equal-iteration pairing, but {} vs {} iterations",
                    reference.mean_iterations, baseline.mean_iterations
                )));
            }
            if !(reference.mean_time > 0.0) {
                return Err(Error::Config("reference time must be positive".into()));
            }
            Ok(baseline.mean_time / reference.mean_time)
        }
        Pairing::TimeBudget => {
            if !(baseline.mean_iterations > 0.0) {
                return Err(Error::Config("baseline completed no iterations".into()));
            }
            Ok(reference.mean_iterations / baseline.mean_iterations)
        }
    }
}

/// Everything a sweep produced.
#[derive(Debug, Clone, Default)]
pub struct ExperimentOutput {
    pub rows: Vec<AggregateStats>,
    pub runs: Vec<RunRecord>,
}

fn point_config(base: &RunConfig, p: GridPoint) -> RunConfig {
    RunConfig {
        max_mod_frac: p.max_mod_frac,
        partial_prob: p.partial_prob,
        two_opt_prob: p.two_opt_prob,
        ..base.clone()
    }
}

fn point_label(mode: Mode, p: GridPoint) -> String {
    format!(
        "{mode} mod={} p={} 2opt={}",
        p.max_mod_frac, p.partial_prob, p.two_opt_prob
    )
}

fn file_stem(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '.' || c == '-' { c } else { '_' })
        .collect()
}

struct Sweep<'a> {
    spec: &'a ExperimentSpec,
    out: ExperimentOutput,
    trace_dir: PathBuf,
}

impl Sweep<'_> {
    fn trials<F>(&mut self, inst: &Instance, label: &str, mut one: F) -> Result<Vec<RunRecord>, Error>
    where
        F: FnMut(u64) -> Result<RunReport, Error>,
    {
        let mut records = Vec::with_capacity(self.spec.trials);
        for trial in 0..self.spec.trials {
            let seed = self.spec.base.seed.wrapping_add(trial as u64);
            let result = one(seed);
            if let Ok(report) = &result {
                let path = self.trace_dir.join(format!(
                    "{}__{}__trial{trial}.csv",
                    file_stem(inst.name()),
                    file_stem(label)
                ));
                report.write_convergence_csv(path)?;
            }
            records.push(RunRecord::from_result(inst.name(), label, trial, seed, &result));
        }
        self.out.runs.extend(records.iter().cloned());
        Ok(records)
    }
}

/// Runs every trial of the sweep and writes the CSV and text reports to
/// `spec.output_dir`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutput, Error> {
    spec.validate()?;
    let optima = match &spec.optima {
        Some(p) => Optima::from_path(p)?,
        None => Optima::default(),
    };
    let trace_dir = spec.output_dir.join("convergence");
    std::fs::create_dir_all(&trace_dir).map_err(|e| Error::io(&trace_dir, e))?;
    let mut sweep = Sweep {
        spec,
        out: ExperimentOutput::default(),
        trace_dir,
    };
    let points = spec.grid.points();

    for path in &spec.instances {
        let mut inst = Instance::from_path(path)?;
        inst.set_optimum(optima.get(inst.name()));

        let baseline_point = |b: &Baseline| GridPoint {
            max_mod_frac: 1.0,
            partial_prob: 0.0,
            two_opt_prob: b.two_opt_prob.unwrap_or(spec.base.two_opt_prob),
        };

        let mut baseline_row = None;
        if let Some(b) = spec.baseline.as_ref().filter(|b| b.pairing == Pairing::EqualIterations) {
            let point = baseline_point(b);
            let cfg = point_config(&spec.base, point);
            let label = format!("baseline {}", point_label(b.mode, point));
            let records = sweep.trials(&inst, &label, |seed| {
                run(&inst, &RunConfig { seed, ..cfg.clone() }, b.mode)
            })?;
            let row = AggregateStats::from_records(inst.name(), &label, b.mode, point, &records);
            sweep.out.rows.push(row.clone());
            baseline_row = Some(row);
        }

        let mut first_reference = None;
        for &point in &points {
            let cfg = point_config(&spec.base, point);
            let label = point_label(spec.mode, point);
            let records = sweep.trials(&inst, &label, |seed| {
                run(&inst, &RunConfig { seed, ..cfg.clone() }, spec.mode)
            })?;
            let mut row = AggregateStats::from_records(inst.name(), &label, spec.mode, point, &records);
            if let Some(base) = &baseline_row {
                row.speedup = report_speedup(&row, base, Pairing::EqualIterations).ok();
            }
            if first_reference.is_none() {
                first_reference = Some(sweep.out.rows.len());
            }
            sweep.out.rows.push(row);
        }

        if let Some(b) = spec.baseline.as_ref().filter(|b| b.pairing == Pairing::TimeBudget) {
            let Some(ref_idx) = first_reference else { continue };
            let reference = sweep.out.rows[ref_idx].clone();
            if reference.mean_time <= 0.0 {
                continue;
            }
            let point = baseline_point(b);
            let cfg = point_config(&spec.base, point);
            let label = format!("baseline-timed {}", point_label(Mode::Paco, point));
            let budget = reference.mean_time;
            let records = sweep.trials(&inst, &label, |seed| {
                run_timed_baseline(&inst, &RunConfig { seed, ..cfg.clone() }, budget)
            })?;
            let row = AggregateStats::from_records(inst.name(), &label, Mode::Paco, point, &records);
            sweep.out.rows[ref_idx].speedup = report_speedup(&reference, &row, Pairing::TimeBudget).ok();
            sweep.out.rows.push(row);
        }
    }

    let out = sweep.out;
    write_summary_csv(&spec.output_dir.join(format!("{}_summary.csv", spec.name)), &out.rows)?;
    write_runs_csv(&spec.output_dir.join(format!("{}_runs.csv", spec.name)), &out.runs)?;
    let txt = spec.output_dir.join(format!("{}_summary.txt", spec.name));
    std::fs::write(&txt, render_table(&out.rows)).map_err(|e| Error::io(&txt, e))?;
    Ok(out)
}

pub fn write_summary_csv(path: &Path, rows: &[AggregateStats]) -> Result<(), Error> {
    let mut w = csv::Writer::from_path(path)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| Error::io(path, e))?;
    Ok(())
}

pub fn read_summary_csv(path: &Path) -> Result<Vec<AggregateStats>, Error> {
    let mut r = csv::Reader::from_path(path)?;
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn write_runs_csv(path: &Path, runs: &[RunRecord]) -> Result<(), Error> {
    let mut w = csv::Writer::from_path(path)?;
    for r in runs {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| Error::io(path, e))?;
    Ok(())
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |v| format!("{v:.2}"))
}

/// Aligned plain-text rendering of summary rows.
pub fn render_table(rows: &[AggregateStats]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<16} {:<40} {:>16} {:>7} {:>7} {:>18} {:>12} {:>9}",
        "instance", "configuration", "error % (sd)", "best", "worst", "time s (sd)", "iterations", "speedup"
    );
    for r in rows {
        let err = match (r.mean_error, r.sd_error) {
            (Some(m), Some(sd)) => format!("{m:.2} ± {sd:.2}"),
            _ => "-".into(),
        };
        let _ = writeln!(
            out,
            "{:<16} {:<40} {:>16} {:>7} {:>7} {:>18} {:>12.2} {:>9}",
            r.instance,
            r.label,
            err,
            opt(r.best_error),
            opt(r.worst_error),
            format!("{:.2} ± {:.2}", r.mean_time, r.sd_time),
            r.mean_iterations,
            r.speedup.map_or_else(|| "-".into(), |s| format!("{s:.2}x")),
        );
        if r.failures > 0 {
            let _ = writeln!(out, "{:<16} ({} of {} trials failed)", "", r.failures, r.trials);
        }
    }
    out
}

/// Built-in sweeps for the standard benchmark instances.
pub mod presets {
    use super::*;

    pub const TSPLIB_SET: [&str; 5] = ["pcb442", "d657", "rat783", "pr1002", "pr2392"];
    pub const ART_SET: [&str; 4] = ["mona-lisa100K", "vangogh120K", "venus140K", "earring200K"];
    pub const CAPS: [f64; 5] = [0.5, 0.4, 0.3, 0.2, 0.1];

    /// Preset names.
    pub const NAMES: [&str; 9] = [
        "paco",
        "partial",
        "partial-cap",
        "partial-cap-prob",
        "paco-2opt",
        "partial-2opt",
        "partial-cap-2opt",
        "art-partial",
        "art-paco-timed",
    ];

    /// Presets default to 10 trials.
    pub const DEFAULT_TRIALS: usize = 10;

    fn base() -> RunConfig {
        RunConfig {
            ants: 16,
            iterations: 100_000,
            alpha: 5.0,
            beta: 5.0,
            workers: 8,
            ..RunConfig::default()
        }
    }

    fn paths(data_dir: &Path, names: &[&str]) -> Vec<PathBuf> {
        names.iter().map(|n| data_dir.join(format!("{n}.tsp"))).collect()
    }

    fn equal_iters(two_opt_prob: f64) -> Option<Baseline> {
        Some(Baseline {
            mode: Mode::Paco,
            two_opt_prob: Some(two_opt_prob),
            pairing: Pairing::EqualIterations,
        })
    }

    pub fn get(name: &str, data_dir: &Path, output_dir: &Path, trials: usize) -> Option<ExperimentSpec> {
        let tsplib = paths(data_dir, &TSPLIB_SET);
        let art = paths(data_dir, &ART_SET);
        let (instances, mode, grid, baseline, base) = match name {
            "paco" => (tsplib, Mode::Paco, Grid::single(1.0, 0.0, 0.0), None, base()),
            "partial" => (tsplib, Mode::Partial, Grid::single(1.0, 1.0, 0.0), equal_iters(0.0), base()),
            "partial-cap" => (
                tsplib,
                Mode::Partial,
                Grid {
                    max_mod_frac: CAPS.to_vec(),
                    partial_prob: vec![1.0],
                    two_opt_prob: vec![0.0],
                },
                equal_iters(0.0),
                base(),
            ),
            "partial-cap-prob" => (
                tsplib,
                Mode::Partial,
                Grid {
                    max_mod_frac: CAPS.to_vec(),
                    partial_prob: vec![0.95],
                    two_opt_prob: vec![0.0],
                },
                equal_iters(0.0),
                base(),
            ),
            "paco-2opt" => (tsplib, Mode::Paco, Grid::single(1.0, 0.0, 0.001), None, base()),
            "partial-2opt" => (
                tsplib,
                Mode::Partial,
                Grid::single(1.0, 1.0, 0.001),
                equal_iters(0.001),
                base(),
            ),
            "partial-cap-2opt" => (
                tsplib,
                Mode::Partial,
                Grid {
                    max_mod_frac: CAPS.to_vec(),
                    partial_prob: vec![1.0],
                    two_opt_prob: vec![0.001],
                },
                equal_iters(0.001),
                base(),
            ),
            "art-partial" | "art-paco-timed" => (
                art,
                Mode::Partial,
                Grid::single(0.01, 1.0, 0.001),
                (name == "art-paco-timed").then_some(Baseline {
                    mode: Mode::Paco,
                    two_opt_prob: Some(0.001),
                    pairing: Pairing::TimeBudget,
                }),
                RunConfig {
                    two_opt_window: 500,
                    sample_interval_s: 60.0,
                    ..base()
                },
            ),
            _ => return None,
        };
        Some(ExperimentSpec {
            name: name.to_string(),
            instances,
            optima: Some(data_dir.join("optima.txt")),
            trials,
            mode,
            base,
            grid,
            baseline,
            output_dir: output_dir.to_path_buf(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(err: f64, time: f64) -> RunRecord {
        RunRecord {
            instance: "x".into(),
            label: "l".into(),
            trial: 0,
            seed: 0,
            best_length: Some(1),
            pct_error: Some(err),
            wall_time: Some(time),
            iterations_done: Some(10),
            comparisons: Some(1),
            error: None,
        }
    }

    const POINT: GridPoint = GridPoint {
        max_mod_frac: 1.0,
        partial_prob: 1.0,
        two_opt_prob: 0.0,
    };

    #[test]
    fn stats_of_two_runs() {
        let s = AggregateStats::from_records("x", "l", Mode::Partial, POINT, &[rec(2.0, 1.0), rec(4.0, 3.0)]);
        assert_eq!(s.mean_error, Some(3.0));
        assert!((s.sd_error.unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(s.best_error, Some(2.0));
        assert_eq!(s.worst_error, Some(4.0));
        assert_eq!(s.mean_time, 2.0);
    }

    #[test]
    fn single_trial_row() {
        let s = AggregateStats::from_records("x", "l", Mode::Partial, POINT, &[rec(1.5, 1.0)]);
        assert_eq!(s.mean_error, s.best_error);
        assert_eq!(s.mean_error, s.worst_error);
        assert_eq!(s.sd_error, Some(0.0));
    }

    #[test]
    fn failures_are_counted_not_averaged() {
        let mut bad = rec(0.0, 0.0);
        bad.error = Some("boom".into());
        bad.pct_error = None;
        bad.wall_time = None;
        let s = AggregateStats::from_records("x", "l", Mode::Partial, POINT, &[rec(2.0, 1.0), bad]);
        assert_eq!(s.trials, 2);
        assert_eq!(s.failures, 1);
        assert_eq!(s.mean_error, Some(2.0));
    }

    fn timed(mean_time: f64, mean_iterations: f64) -> AggregateStats {
        let mut s = AggregateStats::from_records("x", "l", Mode::Partial, POINT, &[rec(1.0, 1.0)]);
        s.mean_time = mean_time;
        s.mean_iterations = mean_iterations;
        s
    }

    #[test]
    fn speedups() {
        let same = timed(10.0, 100.0);
        assert_eq!(report_speedup(&same, &same, Pairing::EqualIterations).unwrap(), 1.0);
        let s = report_speedup(&timed(17.94, 1e5), &timed(40.53, 1e5), Pairing::EqualIterations).unwrap();
        assert_eq!(format!("{s:.2}"), "2.26");
        let s = report_speedup(&timed(3600.0, 1e5), &timed(3600.0, 83.4), Pairing::TimeBudget).unwrap();
        assert_eq!(format!("{s:.2}"), "1199.04");
        let s = report_speedup(&timed(3600.0, 1e5), &timed(3600.0, 248.1), Pairing::TimeBudget).unwrap();
        assert_eq!(format!("{s:.2}"), "403.06");
        assert!(report_speedup(&timed(1.0, 10.0), &timed(2.0, 20.0), Pairing::EqualIterations).is_err());
        assert!(report_speedup(&timed(1.0, 10.0), &timed(2.0, 0.0), Pairing::TimeBudget).is_err());
    }

    #[test]
    fn every_preset_exists() {
        let dir = Path::new("data");
        for name in presets::NAMES {
            let spec = presets::get(name, dir, Path::new("out"), 10).unwrap();
            assert_eq!(spec.trials, 10);
            assert_eq!(spec.base.ants, 16);
            assert_eq!(spec.base.iterations, 100_000);
            assert_eq!((spec.base.alpha, spec.base.beta), (5.0, 5.0));
            let back = ExperimentSpec::from_toml(&spec.to_toml()).unwrap();
            assert_eq!(back, spec);
        }
        assert!(presets::get("nope", dir, dir, 1).is_none());
        let art = presets::get("art-paco-timed", dir, dir, 10).unwrap();
        assert_eq!(art.grid.max_mod_frac, vec![0.01]);
        assert_eq!(art.base.two_opt_window, 500);
        assert_eq!(art.baseline.unwrap().pairing, Pairing::TimeBudget);
        let cap = presets::get("partial-cap-prob", dir, dir, 10).unwrap();
        assert_eq!(cap.grid.partial_prob, vec![0.95]);
        assert_eq!(cap.grid.points().len(), 5);
    }

    #[test]
    fn spec_validation() {
        let mut spec = presets::get("paco", Path::new("/nonexistent"), Path::new("out"), 1).unwrap();
        assert!(spec.validate().is_err());
        spec.trials = 0;
        assert!(matches!(spec.validate(), Err(Error::Config(_))));
    }
}
