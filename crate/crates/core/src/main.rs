use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use partial_aco::bench::{presets, render_table, run_experiment, ExperimentSpec};
use partial_aco::{run, Error, Instance, Mode, Optima, RunConfig};

#[derive(Parser)]
#[command(name = "partial-aco", version, about = "Ant colony TSP solver with partial tour reuse")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one TSPLIB instance.
    Solve(SolveArgs),
    /// Run a sweep described by a TOML file.
    Bench {
        config: PathBuf,
    },
    /// Print a built-in sweep as TOML.
    Preset {
        /// Preset name; omit to list them.
        name: Option<String>,
        /// Directory holding the .tsp files and optima.txt.
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,
        #[arg(long, default_value = "results")]
        output_dir: PathBuf,
        #[arg(long, default_value_t = presets::DEFAULT_TRIALS)]
        trials: usize,
    },
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, default_value = "partial")]
    mode: Mode,
    #[arg(long, default_value_t = 16)]
    ants: usize,
    #[arg(long = "iters", default_value_t = 100_000)]
    iterations: u64,
    #[arg(long, default_value_t = 5.0)]
    alpha: f64,
    #[arg(long, default_value_t = 5.0)]
    beta: f64,
    #[arg(long, default_value_t = 1.0)]
    partial_prob: f64,
    #[arg(long = "max-mod", default_value_t = 1.0)]
    max_mod_frac: f64,
    #[arg(long, default_value_t = 0.0)]
    two_opt_prob: f64,
    /// 0 means unbounded.
    #[arg(long, default_value_t = 0)]
    two_opt_window: usize,
    #[arg(long, default_value_t = 8)]
    workers: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stop after this many seconds.
    #[arg(long)]
    time_budget: Option<f64>,
    /// One colony snapshot per iteration; reproducible across worker counts.
    #[arg(long)]
    synchronous: bool,
    /// File of `name optimum` lines used for the error column.
    #[arg(long)]
    optima: Option<PathBuf>,
    #[arg(long)]
    convergence_csv: Option<PathBuf>,
    /// Print the best tour, one city per line.
    #[arg(long)]
    print_tour: bool,
}

fn solve(args: SolveArgs) -> Result<(), Error> {
    let mut inst = Instance::from_path(&args.instance)?;
    if let Some(path) = &args.optima {
        inst.set_optimum(Optima::from_path(path)?.get(inst.name()));
    }
    let cfg = RunConfig {
        ants: args.ants,
        iterations: args.iterations,
        alpha: args.alpha,
        beta: args.beta,
        partial_prob: args.partial_prob,
        max_mod_frac: args.max_mod_frac,
        two_opt_prob: args.two_opt_prob,
        two_opt_window: args.two_opt_window,
        workers: args.workers,
        seed: args.seed,
        time_budget_s: args.time_budget,
        synchronous: args.synchronous,
        ..RunConfig::default()
    };
    let report = run(&inst, &cfg, args.mode)?;
    println!("instance     {} ({} cities)", inst.name(), inst.len());
    println!("mode         {}", report.mode);
    println!("best length  {}", report.best_length);
    if let Some(e) = report.pct_error {
        println!("error        {e:.2}%");
    }
    println!("time         {:.3} s", report.wall_time);
    println!("iterations   {}", report.iterations_done);
    println!("comparisons  {}", report.comparisons_total);
    println!("2-opt runs   {}", report.two_opt_runs);
    if let Some(path) = &args.convergence_csv {
        report.write_convergence_csv(path)?;
    }
    if args.print_tour {
        for c in report.best_tour.order() {
            println!("{c}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Bench { config } => ExperimentSpec::from_path(&config)
            .and_then(|spec| run_experiment(&spec))
            .map(|out| print!("{}", render_table(&out.rows))),
        Command::Preset {
            name: None, ..
        } => {
            presets::NAMES.iter().for_each(|n| println!("{n}"));
            Ok(())
        }
        Command::Preset {
            name: Some(name),
            data_dir,
            output_dir,
            trials,
        } => match presets::get(&name, &data_dir, &output_dir, trials) {
            Some(spec) => {
                print!("{}", spec.to_toml());
                Ok(())
            }
            None => Err(Error::Config(format!("unknown preset `{name}`"))),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
