use std::process::Command;

use partial_aco::{Instance, Tour};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_partial-aco"))
}

fn hexagon(dir: &std::path::Path) -> std::path::PathBuf {
    let coords = (0..6)
        .map(|i| {
            let a = i as f64 * std::f64::consts::TAU / 6.0;
            (100.0 * a.cos(), 100.0 * a.sin())
        })
        .collect();
    let inst = Instance::new("hex", coords).unwrap();
    let path = dir.join("hex.tsp");
    std::fs::write(&path, inst.to_tsplib()).unwrap();
    path
}

#[test]
fn solve_prints_summary_and_writes_trace() {
    let tmp = tempfile::tempdir().unwrap();
    let tsp = hexagon(tmp.path());
    let optima = tmp.path().join("optima.txt");
    std::fs::write(&optima, "hex 600\n").unwrap();
    let trace = tmp.path().join("trace.csv");
    let out = bin()
        .args(["solve", tsp.to_str().unwrap(), "--iters", "50", "--ants", "4", "--workers", "1"])
        .args(["--partial-prob", "0.95", "--max-mod", "0.5", "--two-opt-prob", "0.01", "--seed", "3"])
        .arg("--optima")
        .arg(&optima)
        .arg("--convergence-csv")
        .arg(&trace)
        .arg("--print-tour")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("best length  600"), "{stdout}");
    assert!(stdout.contains("error        0.00%"));
    let cities: Vec<u32> = stdout
        .lines()
        .skip_while(|l| !l.starts_with("2-opt runs"))
        .skip(1)
        .map(|l| l.parse().unwrap())
        .collect();
    let inst = Instance::from_path(&tsp).unwrap();
    assert_eq!(Tour::new(&inst, cities).unwrap().length(), 600);
    let csv = std::fs::read_to_string(&trace).unwrap();
    assert!(csv.starts_with("elapsed_s,g_best_length,iterations_done"));
}

#[test]
fn solve_accepts_every_mode() {
    let tmp = tempfile::tempdir().unwrap();
    let tsp = hexagon(tmp.path());
    for mode in ["partial", "paco", "classic"] {
        let out = bin()
            .args(["solve", tsp.to_str().unwrap(), "--mode", mode, "--iters", "5", "--workers", "1"])
            .output()
            .unwrap();
        assert!(out.status.success(), "{mode}");
    }
}

#[test]
fn errors_exit_nonzero() {
    let tmp = tempfile::tempdir().unwrap();
    let missing = tmp.path().join("nope.tsp");
    let out = bin().args(["solve", missing.to_str().unwrap()]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let bad = tmp.path().join("bad.tsp");
    std::fs::write(&bad, "NAME : bad\nTYPE : ATSP\nDIMENSION : 3\nEOF\n").unwrap();
    let out = bin().args(["solve", bad.to_str().unwrap()]).output().unwrap();
    assert!(!out.status.success());

    let tsp = hexagon(tmp.path());
    let out = bin()
        .args(["solve", tsp.to_str().unwrap(), "--mode", "greedy"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let out = bin()
        .args(["solve", tsp.to_str().unwrap(), "--two-opt-prob", "2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn preset_round_trips_through_bench() {
    let tmp = tempfile::tempdir().unwrap();
    let out = bin().arg("preset").output().unwrap();
    let names = String::from_utf8(out.stdout).unwrap();
    assert_eq!(names.lines().count(), 9);

    let out = bin()
        .args(["preset", "partial-cap", "--trials", "100", "--data-dir"])
        .arg(tmp.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let toml = String::from_utf8(out.stdout).unwrap();
    let spec = partial_aco::ExperimentSpec::from_toml(&toml).unwrap();
    assert_eq!(spec.trials, 100);
    assert_eq!(spec.grid.max_mod_frac, vec![0.5, 0.4, 0.3, 0.2, 0.1]);

    assert!(!bin().args(["preset", "nope"]).output().unwrap().status.success());

    // a runnable sweep via the bench subcommand
    hexagon(tmp.path());
    let cfg = tmp.path().join("sweep.toml");
    std::fs::write(
        &cfg,
        "name = \"cli\"\ninstances = [\"hex.tsp\"]\ntrials = 2\nmode = \"partial\"\noutput_dir = \"out\"\n\
         [base]\nants = 2\niterations = 5\nworkers = 1\n\
         [grid]\nmax_mod_frac = [0.5]\npartial_prob = [1.0]\ntwo_opt_prob = [0.0]\n",
    )
    .unwrap();
    let out = bin().arg("bench").arg(&cfg).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("instance"));
    assert!(tmp.path().join("out/cli_summary.csv").exists());
}
