use std::path::PathBuf;
use std::process::{Command, Output};

use hamres_core::hamgraph::{brute_force_is_resolving, parse_vertex_list, HammingGraph, Vertex};

fn hamres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hamres-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn parse_lines(g: &HammingGraph, text: &str) -> Vec<Vertex> {
    parse_vertex_list(g, &text.lines().collect::<Vec<_>>().join(",")).unwrap()
}

fn resolves(g: &HammingGraph, r: &[Vertex]) -> bool {
    brute_force_is_resolving(g, r).unwrap().resolving
}

const ALL_H32: &str = "000,001,010,011,100,101,110,111";

#[test]
fn check_exit_codes() {
    let o = hamres(&["check", "--k", "3", "--a", "2", "--vertices", "100,101,001"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "resolving\n");

    let o = hamres(&["check", "--k", "2", "--a", "2", "--vertices", "00"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("not resolving\n"));
    let witness: Vec<&str> = out
        .lines()
        .nth(1)
        .unwrap()
        .strip_prefix("witness: ")
        .unwrap()
        .split(' ')
        .collect();
    let g = HammingGraph::new(2, 2).unwrap();
    let x = parse_vertex_list(&g, witness[0]).unwrap();
    let y = parse_vertex_list(&g, witness[1]).unwrap();
    assert_ne!(x, y);
    let d = |v: &Vertex| v.symbols().iter().filter(|&&s| s != 0).count();
    assert_eq!(d(&x[0]), d(&y[0]));

    let o = hamres(&["check", "--k", "3", "--a", "2", "--vertices", "100,10"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn every_method_agrees_on_check() {
    for method in ["groebner", "bruteforce", "enumeration", "hypercube"] {
        for (set, want) in [("100,101,001", 0), ("100,101", 1)] {
            let o = hamres(&[
                "check",
                "--k",
                "3",
                "--a",
                "2",
                "--vertices",
                set,
                "--method",
                method,
            ]);
            assert_eq!(code(&o), want, "{method} on {set}");
        }
    }
    let o = hamres(&[
        "check",
        "--k",
        "3",
        "--a",
        "2",
        "--vertices",
        "100",
        "--method",
        "fast",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn check_reads_set_file() {
    let path = temp_file("set.txt", "# worked example\n100\n101\n\n001\n");
    let o = hamres(&[
        "check",
        "--k",
        "3",
        "--a",
        "2",
        "--set",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let o = hamres(&[
        "check",
        "--k",
        "3",
        "--a",
        "2",
        "--set",
        "/nonexistent/hamres",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn enumeration_budget_exhaustion_exits_3() {
    let o = hamres(&[
        "check",
        "--k",
        "3",
        "--a",
        "2",
        "--vertices",
        "100",
        "--method",
        "enumeration",
        "--enum-budget",
        "1",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn dump_lists_the_system() {
    let o = hamres(&[
        "check",
        "--k",
        "3",
        "--a",
        "2",
        "--vertices",
        "100,101,001",
        "--dump",
    ]);
    let out = stdout(&o);
    assert!(out.contains("# rref(A)\n1 0 1 0 0 1\n0 1 1 0 0 1\n0 0 0 0 1 -1\n"));
    assert!(out.ends_with("resolving\n"));
}

#[test]
fn reduce_topdown_is_minimal_and_deterministic() {
    let g = HammingGraph::new(3, 2).unwrap();
    let args = [
        "reduce",
        "--k",
        "3",
        "--a",
        "2",
        "--vertices",
        ALL_H32,
        "--seed",
        "42",
    ];
    let o = hamres(&args);
    assert_eq!(code(&o), 0);
    let out = parse_lines(&g, &stdout(&o));
    assert!(resolves(&g, &out));
    for i in 0..out.len() {
        let mut smaller = out.clone();
        smaller.remove(i);
        assert!(!resolves(&g, &smaller));
    }
    assert_eq!(stdout(&hamres(&args)), stdout(&o));
}

#[test]
fn reduce_keeps_minimal_set() {
    let o = hamres(&[
        "reduce",
        "--k",
        "4",
        "--a",
        "2",
        "--vertices",
        "0000,0001,0010,0100",
    ]);
    assert_eq!(code(&o), 0);
    let g = HammingGraph::new(4, 2).unwrap();
    let mut out = parse_lines(&g, &stdout(&o));
    out.sort();
    assert_eq!(out, parse_vertex_list(&g, "0000,0001,0010,0100").unwrap());
}

#[test]
fn reduce_generative_resolves() {
    let g = HammingGraph::new(3, 2).unwrap();
    let o = hamres(&[
        "reduce",
        "--k",
        "3",
        "--a",
        "2",
        "--vertices",
        ALL_H32,
        "--strategy",
        "generative",
        "--seed",
        "5",
    ]);
    assert_eq!(code(&o), 0);
    assert!(resolves(&g, &parse_lines(&g, &stdout(&o))));
}

#[test]
fn reduce_rejects_non_resolving_input() {
    for strategy in ["topdown", "generative"] {
        let o = hamres(&[
            "reduce",
            "--k",
            "3",
            "--a",
            "2",
            "--vertices",
            "000,111",
            "--strategy",
            strategy,
        ]);
        assert_eq!(code(&o), 1);
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn generate_resolves_within_size_bound() {
    for (k, a) in [(4, 2), (3, 3), (2, 4)] {
        let g = HammingGraph::new(k, a).unwrap();
        let args = [
            "generate",
            "--k",
            &k.to_string(),
            "--a",
            &a.to_string(),
            "--seed",
            "11",
        ]
        .map(String::from);
        let o = Command::new(env!("CARGO_BIN_EXE_hamres"))
            .args(&args)
            .output()
            .unwrap();
        assert_eq!(code(&o), 0);
        let out = parse_lines(&g, &stdout(&o));
        assert!(resolves(&g, &out));
        assert!(out.len() <= a * k);
        let again = Command::new(env!("CARGO_BIN_EXE_hamres"))
            .args(&args)
            .output()
            .unwrap();
        assert_eq!(again.stdout, o.stdout);
    }
}

#[test]
fn embed_rows() {
    let input = temp_file("input.txt", "000\n100\n");
    let o = hamres(&[
        "embed",
        "--k",
        "3",
        "--a",
        "2",
        "--vertices",
        "100,101,001",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "vertex,d1,d2,d3\n000,1,2,1\n100,0,1,2\n");

    let o = hamres(&["embed", "--k", "3", "--a", "2", "--vertices", "100,101,001"]);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    let mut coords: Vec<&str> = rows.iter().map(|r| r.split_once(',').unwrap().1).collect();
    coords.sort();
    coords.dedup();
    assert_eq!(coords.len(), 8);
}

#[test]
fn bench_agrees_across_methods() {
    let out = temp_file("bench.csv", "");
    let o = hamres(&[
        "bench",
        "--k",
        "4",
        "--a",
        "2",
        "--trials",
        "50",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_path(&out).unwrap();
    assert_eq!(
        rdr.headers().unwrap(),
        vec!["trial", "k", "a", "set_size", "method", "verdict", "micros", "seed"]
    );
    let records: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 50 * 4);
    for trial in records.chunks(4) {
        assert!(trial
            .iter()
            .all(|r| r[0] == trial[0][0] && r[5] == trial[0][5]));
        assert!(trial.iter().all(|r| r[6].parse::<f64>().unwrap() >= 0.0));
    }
    let resolving = records.iter().filter(|r| &r[5] == "resolving").count();
    assert_eq!(resolving, 25 * 4);
}

#[test]
fn bench_with_no_trials_writes_header_only() {
    let o = hamres(&["bench", "--k", "4", "--a", "2", "--trials", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "trial,k,a,set_size,method,verdict,micros,seed\n"
    );
}

#[test]
fn bench_refuses_graphs_beyond_brute_force() {
    let o = hamres(&["bench", "--k", "17", "--a", "2", "--trials", "1"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn bad_fraction_is_a_usage_error() {
    let o = hamres(&[
        "bench",
        "--k",
        "3",
        "--a",
        "2",
        "--trials",
        "1",
        "--fraction-resolving",
        "2",
    ]);
    assert_eq!(code(&o), 2);
}
