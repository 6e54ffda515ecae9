use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn palette(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_palette")).args(args).output().unwrap()
}

fn palette_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_palette"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn generate(args: &[&str]) -> String {
    let o = palette(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn gen_writes_graph_files() {
    assert_eq!(
        generate(&["gen", "--family", "kab", "--a", "1", "--b", "2"]),
        "p 3 2\ne 1 2\ne 1 3\n"
    );
    let grid = generate(&["gen", "--family", "grid", "--m", "3", "--n", "3"]);
    assert!(grid.starts_with("p 9 12\n"));
    let a = generate(&[
        "gen",
        "--family",
        "biregular",
        "--a",
        "2",
        "--b",
        "4",
        "--scale",
        "2",
        "--seed",
        "5",
    ]);
    let b = generate(&[
        "gen",
        "--family",
        "biregular",
        "--a",
        "2",
        "--b",
        "4",
        "--scale",
        "2",
        "--seed",
        "5",
    ]);
    assert_eq!(a, b);
    assert!(generate(&["gen", "--family", "star", "--leaves", "3"]).starts_with("p 4 3\n"));
}

#[test]
fn exact_on_k23() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "k23.txt",
        &generate(&["gen", "--family", "kab", "--a", "2", "--b", "3"]),
    );
    let o = palette(&["exact", &graph]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.lines().any(|l| l.ends_with("palette_index=4 proved=true")),
        "{text}"
    );
    let coloring = write(dir.path(), "k23.col", &text);
    let v = palette(&["verify", &graph, &coloring]);
    assert!(v.status.success(), "{}", stdout(&v));
    assert!(stdout(&v).starts_with("proper palettes=4"));
}

#[test]
fn color_grid_strategy() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "g45.txt",
        &generate(&["gen", "--family", "grid", "--m", "4", "--n", "5"]),
    );
    let out = dir.path().join("g45.col");
    let o = palette(&["color", "--strategy", "grid", &graph, "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "palettes=3 bound=3 theorem=grid\n");
    let v = palette(&["verify", &graph, out.to_str().unwrap()]);
    assert!(v.status.success());
}

#[test]
fn every_strategy_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, Vec<&str>); 5] = [
        ("auto", vec!["--family", "grid", "--m", "3", "--n", "4"]),
        (
            "even",
            vec!["--family", "biregular", "--a", "2", "--b", "4", "--scale", "2"],
        ),
        (
            "doubling",
            vec!["--family", "biregular", "--a", "3", "--b", "5", "--scale", "2"],
        ),
        ("kab", vec!["--family", "kab", "--a", "2", "--b", "4"]),
        (
            "biregular",
            vec!["--family", "biregular", "--a", "3", "--b", "9", "--scale", "2"],
        ),
    ];
    for (strategy, gen_args) in cases {
        let mut args = vec!["gen"];
        args.extend(gen_args);
        let graph = write(dir.path(), "g.txt", &generate(&args));
        let o = palette(&["color", "--strategy", strategy, &graph]);
        assert!(o.status.success(), "{strategy}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        assert!(text.lines().last().unwrap().starts_with("# palettes="), "{strategy}");
        let coloring = write(dir.path(), "g.col", &text);
        assert!(palette(&["verify", &graph, &coloring]).status.success(), "{strategy}");
    }
}

#[test]
fn color_reads_standard_input() {
    let graph = generate(&["gen", "--family", "kab", "--a", "2", "--b", "3"]);
    let o = palette_stdin(&["color", "--strategy", "kab"], &graph);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("# palettes=4 bound=4 theorem=complete-bipartite\n"));
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k3.txt", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let bad = write(dir.path(), "bad.col", "s 2 3\nc 1 1\nc 2 1\nc 3 2\n");
    let o = palette(&["verify", &graph, &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "violation vertex=2 edges=1,2 color=1\n");
}

#[test]
fn bounds_lines() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "g.txt",
        &generate(&["gen", "--family", "grid", "--m", "3", "--n", "3"]),
    );
    let text = stdout(&palette(&["bounds", &graph]));
    let first = text.lines().next().unwrap();
    assert_eq!(first, "lower 5 grid");
    assert!(text.lines().skip(1).all(|l| l.starts_with("upper ")));
    assert!(text.lines().any(|l| l == "upper 5 grid"), "{text}");
}

#[test]
fn classify_families() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    assert_eq!(stdout(&palette(&["classify", &k3])), "K3\n");
    let c4 = write(dir.path(), "c4.txt", "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    assert_eq!(stdout(&palette(&["classify", &c4])), "none\n");
}

#[test]
fn exit_codes() {
    assert_eq!(palette(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(palette(&["suite", "--bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "p 2 1\ne 1 3\n");
    let o = palette(&["exact", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let big = write(
        dir.path(),
        "big.txt",
        &generate(&["gen", "--family", "grid", "--m", "4", "--n", "4"]),
    );
    let o = palette(&["exact", "--max-nodes", "10", &big]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("proved=false"));
    let o = palette(&["gen", "--family", "grid", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn suite_filters_and_is_deterministic() {
    let o = palette(&["suite", "--filter", "kab/exact"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert!(text
        .lines()
        .all(|l| l.starts_with("case=kab/exact/") && l.ends_with("result=pass")));
    let empty = palette(&["suite", "--filter", "nothing-matches"]);
    assert!(empty.status.success());
    assert!(empty.stdout.is_empty());
    let one = palette(&["suite", "--filter", "grid", "--threads", "1"]);
    let many = palette(&["suite", "--filter", "grid", "--threads", "4"]);
    assert_eq!(one.stdout, many.stdout);
}
