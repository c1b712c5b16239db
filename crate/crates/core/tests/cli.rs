use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn meetpoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meetpoint"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_worked_example() {
    let o = meetpoint(&[
        "solve",
        "--objective",
        "center",
        "--strategy",
        "early",
        "--sources",
        "1,6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("node=4 value=4\n"), "{text}");
    assert!(text.contains("explored=8 of 16 (50%)"));

    let o = meetpoint(&[
        "solve",
        "--objective",
        "centroid",
        "--strategy",
        "full",
        "--sources",
        "1,6",
    ]);
    assert!(stdout(&o).starts_with("node=4 value=8\n"));
    let o = meetpoint(&["solve", "--objective", "centroid", "--strategy", "early"]);
    assert!(stdout(&o).contains("(68.75%)"));
}

#[test]
fn usage_errors_exit_one() {
    let o = meetpoint(&["solve", "--sources", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate source 1"));
    assert!(o.stdout.is_empty());

    assert_eq!(
        meetpoint(&["solve", "--sources", "1,99"]).status.code(),
        Some(1)
    );
    assert_eq!(
        meetpoint(&["solve", "--strategy", "greedy"]).status.code(),
        Some(1)
    );
    assert_eq!(
        meetpoint(&["bench", "--edges", "3", "--density", "0.1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        meetpoint(&["bench", "--iterations", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(
        meetpoint(&["solve", "--graph", "/nonexistent"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(meetpoint(&[]).status.code(), Some(1));
    assert_eq!(meetpoint(&["--help"]).status.code(), Some(0));
}

#[test]
fn no_intersection_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.graph");
    fs::write(&path, "4 2 directed\n0 1 1\n2 3 1\n").unwrap();
    let o = meetpoint(&[
        "solve",
        "--graph",
        path.to_str().unwrap(),
        "--sources",
        "0,2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = meetpoint(&[
        "trace",
        "--graph",
        path.to_str().unwrap(),
        "--sources",
        "0,2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).ends_with("- finished - inf\n"), "{}", stdout(&o));
}

#[test]
fn trace_is_deterministic_and_writes_snapshots() {
    let dir = tempfile::tempdir().unwrap();
    let t1 = dir.path().join("a.trace");
    let t2 = dir.path().join("b.trace");
    let dots = dir.path().join("dots");
    for t in [&t1, &t2] {
        let o = meetpoint(&[
            "trace",
            "--strategy",
            "early",
            "--trace",
            t.to_str().unwrap(),
            "--dot-dir",
            dots.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with("node=4 value=4\n"));
    }
    let a = fs::read_to_string(&t1).unwrap();
    assert_eq!(a, fs::read_to_string(&t2).unwrap());
    let tail: Vec<_> = a.lines().rev().take(3).collect();
    assert!(tail[0].ends_with("finished 4 4"));
    assert!(tail[1].contains("source_terminated") && tail[2].contains("source_terminated"));
    assert!(dots.join("round_000.dot").exists() && dots.join("round_005.dot").exists());
    assert!(!dots.join("round_006.dot").exists());
}

#[test]
fn gen_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let o = meetpoint(&[
        "gen",
        "--vertices",
        "30",
        "--num-sources",
        "3",
        "--seed",
        "9",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let path = dir.path().join("instance.graph");
    let o = meetpoint(&[
        "solve",
        "--graph",
        path.to_str().unwrap(),
        "--strategy",
        "full",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let again = meetpoint(&[
        "gen",
        "--vertices",
        "30",
        "--num-sources",
        "3",
        "--seed",
        "9",
    ]);
    assert_eq!(stdout(&again), fs::read_to_string(&path).unwrap());

    let random = meetpoint(&["gen", "--vertices", "5"]);
    assert!(String::from_utf8_lossy(&random.stderr).starts_with("seed="));
}

fn bench(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "bench",
        "--vertices-list",
        "20,50",
        "--sources-list",
        "2,3",
        "--iterations",
        "20",
        "--seed",
        "4",
        "--out",
        dir.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    meetpoint(&args)
}

#[test]
fn bench_is_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert_eq!(bench(a.path(), &[]).status.code(), Some(0));
    assert_eq!(bench(b.path(), &[]).status.code(), Some(0));
    let csv = fs::read(a.path().join("stats.csv")).unwrap();
    assert_eq!(csv, fs::read(b.path().join("stats.csv")).unwrap());
    assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 2 + 4 * 4);
    assert!(a.path().join("tables.txt").exists());

    let one = tempfile::tempdir().unwrap();
    let o = meetpoint(&[
        "bench",
        "--vertices-list",
        "20",
        "--sources-list",
        "2",
        "--iterations",
        "1",
        "--seed",
        "1",
        "--out",
        one.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(one.path().join("stats.csv")).unwrap();
    for line in csv.lines().skip(2) {
        assert_eq!(line.split(',').nth(4), Some("0.000000"), "{line}");
    }
}

#[test]
fn check_trends_flag_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(dir.path(), &["--check-trends"]);
    let text = stdout(&o);
    assert!(text.contains("[ok]") || text.contains("[FAIL]"));
    let failed = text.contains("[FAIL]");
    assert_eq!(o.status.code(), Some(if failed { 1 } else { 0 }));
}

#[test]
fn check_astar_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.graph");
    fs::write(
        &path,
        "3 2 undirected\ncoords\n0 0\n1 0\n2 0\n0 1 0.5\n1 2 1\n",
    )
    .unwrap();
    let o = meetpoint(&[
        "check-astar",
        "--graph",
        path.to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("admissible=false"), "{text}");
    assert!(text.contains("violation 0 -> 1"));

    fs::write(
        &path,
        "3 2 undirected\ncoords\n0 0\n1 0\n2 0\n0 1 1\n1 2 1\n",
    )
    .unwrap();
    let o = meetpoint(&[
        "check-astar",
        "--graph",
        path.to_str().unwrap(),
        "--samples",
        "10",
    ]);
    assert!(stdout(&o).contains("pairs=10 violations=0 admissible=true"));
}

#[test]
fn astar_strategy_via_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.graph");
    fs::write(
        &path,
        "3 2 undirected\ncoords\n0 0\n1 0\n2 0\n0 1 1\n1 2 1\n",
    )
    .unwrap();
    let o = meetpoint(&[
        "solve",
        "--graph",
        path.to_str().unwrap(),
        "--sources",
        "0,2",
        "--strategy",
        "astar",
    ]);
    assert!(stdout(&o).starts_with("node=1 value=1\n"));
    let o = meetpoint(&["solve", "--strategy", "astar"]);
    assert_eq!(o.status.code(), Some(1));
}
