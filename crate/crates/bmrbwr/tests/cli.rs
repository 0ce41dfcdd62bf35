use std::path::Path;
use std::process::{Command, Output};

use bmrbwr::export::{read_convergence, read_summaries};

fn bmrbwr(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmrbwr")).args(args).env("BMRBWR_OUT", out).output().expect("spawn bmrbwr")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn run_writes_summary_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let o = bmrbwr(
        &["run", "--problem", "sphere-5", "--algo", "bwr", "--runs", "3", "--fe", "2000", "--seed", "42"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for col in ["Best", "Median", "Mean", "Worst", "Std. Dev.", "FR", "MV", "SR", "MFE"] {
        assert!(lines[0].contains(col), "{col}");
    }
    assert!(lines[1].starts_with("sphere-5") && lines[1].contains("BWR"));

    let summaries = read_summaries(&dir.path().join("sphere-5-bwr.json")).unwrap();
    assert_eq!(summaries.len(), 1);
    assert_eq!(summaries[0].summary.n_runs, 3);
    assert_eq!(summaries[0].base_seed, 42);
    let rows = read_convergence(&dir.path().join("sphere-5-bwr.csv")).unwrap();
    assert_eq!(rows.iter().filter(|r| r.record.iteration == 0).count(), 3);
    assert!(!dir.path().join("sphere-5-bmr.json").exists());
}

#[test]
fn seed_fixes_every_output_byte() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = |threads| {
        ["run", "--problem", "welded-beam", "--runs", "4", "--fe", "3000", "--seed", "9", "--threads", threads]
    };
    let oa = bmrbwr(&args("3"), a.path());
    let ob = bmrbwr(&args("1"), b.path());
    assert_eq!(oa.status.code(), Some(0));
    assert_eq!(oa.stdout, ob.stdout);
    for name in ["welded-beam-bmr.json", "welded-beam-bmr.csv", "welded-beam-bwr.json", "welded-beam-bwr.csv"] {
        assert_eq!(std::fs::read(a.path().join(name)).unwrap(), std::fs::read(b.path().join(name)).unwrap(), "{name}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bmrbwr(&["run", "--problem", "no-such"], dir.path()).status.code(), Some(1));
    assert_eq!(bmrbwr(&["run", "--problem", "sphere-5", "--pop", "2"], dir.path()).status.code(), Some(2));
    assert_eq!(bmrbwr(&["run", "--problem", "sphere-5", "--runs", "0"], dir.path()).status.code(), Some(2));
    assert_eq!(bmrbwr(&["run", "--problem", "sphere-5", "--algo", "xyz"], dir.path()).status.code(), Some(2));
    assert_eq!(bmrbwr(&["suite", "nope"], dir.path()).status.code(), Some(1));
    assert_eq!(bmrbwr(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(bmrbwr(&["list"], dir.path()).status.code(), Some(0));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(&config, r#"{ "runs": 2, "population_size": 7, "max_function_evaluations": 700, "seed": 5 }"#)
        .unwrap();
    let before = std::fs::read(&config).unwrap();
    let o = bmrbwr(
        &["run", "--problem", "booth", "--algo", "bmr", "--config", config.to_str().unwrap(), "--pop", "10"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = &read_summaries(&dir.path().join("booth-bmr.json")).unwrap()[0];
    assert_eq!(s.summary.n_runs, 2);
    assert_eq!(s.config.population_size, 10);
    assert_eq!(s.config.max_function_evaluations, 700);
    assert_eq!(s.base_seed, 5);
    assert_eq!(std::fs::read(&config).unwrap(), before);

    std::fs::write(&config, r#"{ "population": 7 }"#).unwrap();
    let o = bmrbwr(&["run", "--problem", "booth", "--config", config.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn definition_file_problem() {
    let dir = tempfile::tempdir().unwrap();
    let def = dir.path().join("ring.toml");
    std::fs::write(
        &def,
        "name = \"ring\"\nlower = [-2, -2]\nupper = [2, 2]\nobjective = \"x1^2 + x2^2\"\ninequalities = [\"1 - x1^2 - x2^2\"]\nknown_best = 1\n",
    )
    .unwrap();
    let o = bmrbwr(
        &["run", "--definition", def.to_str().unwrap(), "--algo", "bwr", "--runs", "2", "--fe", "4000"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = &read_summaries(&dir.path().join("ring-bwr.json")).unwrap()[0].summary;
    assert_eq!(s.fr, 100.0);
    assert!(s.best.unwrap() >= 1.0 && s.best.unwrap() < 1.01);
}

#[test]
fn suite_compare_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let o = bmrbwr(&["suite", "engineering-12", "--algo", "bmr,bwr", "--runs", "2", "--fe", "1000"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 1 + 24);
    let bmr = dir.path().join("engineering-12-bmr.json");
    let bwr = dir.path().join("engineering-12-bwr.json");
    assert_eq!(read_summaries(&bmr).unwrap().len(), 12);
    assert_eq!(read_summaries(&bwr).unwrap().len(), 12);

    let same = bmrbwr(&["compare", bmr.to_str().unwrap(), bmr.to_str().unwrap()], dir.path());
    assert_eq!(same.status.code(), Some(0));
    let text = stdout(&same);
    assert!(text.contains("BMR vs. BMR"));
    let similar = text.lines().find(|l| l.starts_with("Similar or equal")).unwrap();
    assert_eq!(similar.split_whitespace().skip(3).filter(|c| *c == "12").count(), 9);
    let success = text.lines().find(|l| l.starts_with("Success %")).unwrap();
    assert_eq!(success.split_whitespace().skip(2).filter(|c| *c == "100.0").count(), 9);

    let o = bmrbwr(&["compare", bwr.to_str().unwrap(), bmr.to_str().unwrap(), "--criteria", "best,mfe"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("BWR vs. BMR"));

    let single = dir.path().join("welded-beam-bwr.json");
    assert_eq!(
        bmrbwr(&["compare", single.to_str().unwrap(), bmr.to_str().unwrap()], dir.path()).status.code(),
        Some(1)
    );

    let a = dir.path().join("welded-beam-bmr.csv");
    let b = dir.path().join("welded-beam-bwr.csv");
    let o = bmrbwr(
        &["plot", a.to_str().unwrap(), b.to_str().unwrap(), "--label", "BMR,BWR", "--output", "wb.svg"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = std::fs::read_to_string(dir.path().join("wb.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert!(svg.contains(">BMR<") && svg.contains(">BWR<"));
}

#[test]
fn plot_rejects_empty_csv_and_marks_single_points() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(bmrbwr(&["plot", empty.to_str().unwrap()], dir.path()).status.code(), Some(1));
    let missing = dir.path().join("missing.csv");
    assert_eq!(bmrbwr(&["plot", missing.to_str().unwrap()], dir.path()).status.code(), Some(1));

    let one = dir.path().join("one.csv");
    std::fs::write(&one, "run_id,iteration,fe_count,best_penalized,mean_penalized\n0,0,20,5.0,7.0\n").unwrap();
    let o = bmrbwr(&["plot", one.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(dir.path().join("convergence.svg")).unwrap();
    assert_eq!(svg.matches("<circle").count(), 1);
    assert_eq!(svg.matches("<polyline").count(), 1);
}
