use std::fs;
use std::process::{Command, Output};

use hcpack::corpus::{embedded, parse_configuration, serialize_configuration};
use tempfile::TempDir;

fn hcpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcpack")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_reference_20_golden() {
    let o = hcpack(&["verify", "--paper", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n\t20\ncomputed_count\t64\nclaimed_total\t64\nlisted_count\t64\n\
         missing_edges\t0\t\nextra_edges\t0\t\nverdict\texact-match\n"
    );
}

#[test]
fn verify_reference_24_notes_the_printed_total() {
    let o = hcpack(&["verify", "--paper", "24"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("computed_count\t80\n"));
    assert!(out.contains("verdict\texact-match\n"));
    assert!(out.contains("\"Total: c(24) = y\""));
}

#[test]
fn verify_input_files() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.hexcfg", "# triangle\n0 0 0\n1 0 0\n0 1 0\n");
    let o = hcpack(&["verify", "--input", &tri]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("computed_count\t3\n"));

    let good = write(&dir, "tri.edges", "1 2\n1 3\n2 3\n");
    assert_eq!(hcpack(&["verify", "--input", &tri, "--edges", &good]).status.code(), Some(0));

    let short = write(&dir, "short.edges", "1 2\n1 3\n");
    let o = hcpack(&["verify", "--input", &tri, "--edges", &short]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("extra_edges\t1\t(F2,F3)\n"));
    assert!(stdout(&o).contains("verdict\tmismatch\n"));

    let bad = write(&dir, "bad.hexcfg", "0 0 0\n1 0\n");
    let o = hcpack(&["verify", "--input", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));

    let dup = write(&dir, "dup.hexcfg", "0 0 0\n1 0 0\n0 0 0\n");
    let o = hcpack(&["verify", "--input", &dup]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("F1") && stderr(&o).contains("F3"));

    let missing = dir.path().join("absent.hexcfg");
    assert_eq!(hcpack(&["verify", "--input", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn search_exact_examples() {
    let o = hcpack(&["search", "--n", "2", "--window", "2x1x1", "--algo", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# best_count\t1\n# status\toptimal-in-window\n"));
    assert_eq!(parse_configuration(&out).unwrap().contact_count().unwrap(), 1);

    let o = hcpack(&["search", "--n", "4", "--window", "3x3x2", "--algo", "exact"]);
    assert!(stdout(&o).contains("# best_count\t6\n"));
}

#[test]
fn search_usage_errors() {
    for args in [
        &["search", "--n", "4", "--window", "3x3", "--algo", "exact"][..],
        &["search", "--n", "40", "--window", "3x3x2", "--algo", "exact"],
        &["search", "--n", "4", "--window", "3x3x2", "--algo", "magic"],
        &["search", "--n", "0", "--window", "3x3x2", "--algo", "greedy"],
        &["frobnicate"],
    ] {
        assert_eq!(hcpack(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn search_anneal_from_reference_meets_target() {
    let dir = TempDir::new().unwrap();
    let init = write(&dir, "ref20.hexcfg", &serialize_configuration(&embedded(20).unwrap().configuration));
    let out = dir.path().join("best.hexcfg");
    let o = hcpack(&[
        "search",
        "--n",
        "20",
        "--window",
        "4x4x3",
        "--algo",
        "anneal",
        "--init",
        &init,
        "--target",
        "64",
        "--steps",
        "20000",
        "--restarts",
        "2",
        "--threads",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let best = parse_configuration(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(best.len(), 20);
    assert!(best.contact_count().unwrap() >= 64);
    assert!(stdout(&o).contains("init=given"));
}

#[test]
fn search_target_missed_exits_one() {
    let o = hcpack(&["search", "--n", "3", "--window", "3x3x1", "--algo", "greedy", "--target", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("target 4 not reached"));
}

#[test]
fn search_output_is_reproducible() {
    let args = [
        "search",
        "--n",
        "14",
        "--window",
        "4x4x3",
        "--algo",
        "anneal",
        "--seed",
        "21",
        "--restarts",
        "3",
        "--steps",
        "30000",
        "--threads",
        "1",
    ];
    let a = hcpack(&args);
    let b = hcpack(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let threaded: Vec<&str> = args[..args.len() - 1].iter().copied().chain(["3"]).collect();
    assert_eq!(hcpack(&threaded).stdout, a.stdout);
}

#[test]
fn zero_budget_exact_is_incomplete() {
    let o = hcpack(&["search", "--n", "5", "--window", "3x3x2", "--algo", "exact", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn convert_golden() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "pair.hexcfg", "0 0 0\n0 0 1\n");
    let o = hcpack(&["convert", "--input", &cfg, "--to", "cartesian"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "index,x,y,z\n1,0.0,0.0,0.0\n2,1.0,0.577350269,1.63299316\n");
    let o = hcpack(&["convert", "--input", &cfg, "--to", "edges"]);
    assert_eq!(stdout(&o), "1 2\n");
    assert_eq!(hcpack(&["convert", "--input", &cfg, "--to", "svg"]).status.code(), Some(2));
}

#[test]
fn convert_reference_configurations() {
    let dir = TempDir::new().unwrap();
    let c20 = write(&dir, "c20.hexcfg", &serialize_configuration(&embedded(20).unwrap().configuration));
    let out = stdout(&hcpack(&["convert", "--input", &c20, "--to", "cartesian"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 21);
    assert_eq!(lines[1], "1,4.0,0.0,0.0");

    let c27 = write(&dir, "c27.hexcfg", &serialize_configuration(&embedded(27).unwrap().configuration));
    let out = stdout(&hcpack(&["convert", "--input", &c27, "--to", "edges"]));
    assert_eq!(out.lines().count(), 90);

    let empty = write(&dir, "empty.hexcfg", "# nothing\n");
    assert_eq!(stdout(&hcpack(&["convert", "--input", &empty, "--to", "cartesian"])), "index,x,y,z\n");
    assert_eq!(stdout(&hcpack(&["convert", "--input", &empty, "--to", "edges"])), "");
}

#[test]
fn report_golden() {
    let o = hcpack(&["report", "--paper"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tc\tc_minus_3n\tratio\tratio_full");
    assert_eq!(lines[1], "20\t64\t4\t7.6\t7.600369326");
    assert_eq!(lines[8], "27\t90\t9\t8.0\t8.000000000");
    let err = stderr(&o);
    assert!(err.contains("n=26") && err.contains("n=27") && err.contains("above"));
    assert!(!err.contains("n=25"));

    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.hexcfg", "0 0 0\n1 0 0\n0 1 0\n");
    let o = hcpack(&["report", "--input", &tri]);
    assert_eq!(stdout(&o).lines().nth(1), Some("3\t3\t-6\t7.2\t7.211247852"));
}
