use std::io::Write;
use std::process::{Command, Output};

fn p3iso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p3iso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn iota_of_small_graphs() {
    let o = p3iso(&["iota", "Bw", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["certificate"]["value"], 1);
    let o = p3iso(&["iota", "?"]);
    assert!(stdout(&o).starts_with("iota = 0"));
    let o = p3iso(&["iota", "Bw", "--family", "k1"]);
    assert!(stdout(&o).starts_with("iota = 1"));
}

#[test]
fn iota_of_g11_from_an_edge_list() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/g11.edges");
    let o = p3iso(&["iota", fixture, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["certificate"]["value"], 3);
    assert_eq!(v["order"], 11);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(p3iso(&["iota", "@@x"]).status.code(), Some(2));
    assert_eq!(
        p3iso(&["iota", "Bw", "--family", "cycle:2"]).status.code(),
        Some(2)
    );
    assert_eq!(p3iso(&["gen", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(p3iso(&["catalog", "G8"]).status.code(), Some(2));
    assert_eq!(p3iso(&["verify", "--max-n", "10"]).status.code(), Some(2));
}

#[test]
fn isolate_reports_preconditions() {
    let g15 = stdout(&p3iso(&["catalog", "G15"]));
    let o = p3iso(&["isolate", g15.trim()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("ExceptionalGraph"));
    let c6 = stdout(&p3iso(&["gen", "cycle", "6"]));
    let o = p3iso(&["isolate", c6.trim()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("InducedC6"));
}

#[test]
fn isolate_with_trace() {
    let g = stdout(&p3iso(&["gen", "eligible", "40", "--seed", "3"]));
    let o = p3iso(&["isolate", g.trim(), "--trace", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["size"].as_u64().unwrap() <= 10);
    assert_eq!(v["within_bound"], true);
    assert!(!v["trace"].as_array().unwrap().is_empty());
    let plain = p3iso(&["isolate", g.trim(), "--trace"]);
    let trace_lines: Vec<String> = stdout(&plain).lines().skip(2).map(String::from).collect();
    assert!(!trace_lines.is_empty());
    for line in trace_lines {
        let step: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert!(step["case"].is_string());
    }
}

#[test]
fn sharpness_graph_from_gen() {
    let g = stdout(&p3iso(&["gen", "bnp3", "12"]));
    let o = p3iso(&["iota", g.trim(), "--json"]);
    assert_eq!(json(&o)["certificate"]["value"], 3);
    assert_eq!(json(&o)["order"], 12);
}

#[test]
fn catalog_formats() {
    let o = p3iso(&["catalog", "--format", "graph6"]);
    assert_eq!(stdout(&o).lines().count(), 12);
    let o = p3iso(&["catalog", "--format", "json"]);
    let names: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["name"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(names.first().map(String::as_str), Some("P3"));
    assert_eq!(names.last().map(String::as_str), Some("G15"));
    let o = p3iso(&["gen", "cycle", "11", "--format", "edges"]);
    assert!(stdout(&o).starts_with("11 11"));
}

#[test]
fn verify_small_orders() {
    let o = p3iso(&["verify", "--max-n", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["orders"]["3"]["exceptions"].as_array().unwrap().len(), 2);
    assert_eq!(v["orders"]["7"]["exceptions"].as_array().unwrap().len(), 7);
    assert_eq!(v["orders"]["6"]["exceptions"].as_array().unwrap().len(), 0);
    let seq = p3iso(&["verify", "--max-n", "7", "--json", "--sequential"]);
    assert_eq!(
        json(&seq)["orders"]["7"]["exceptions"],
        v["orders"]["7"]["exceptions"]
    );
}

#[test]
fn verify_streamed_corpus() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let corpus = stdout(&p3iso(&["enum", "--max-n", "11", "--min-n", "11"]));
    assert_eq!(corpus.lines().count(), 5524);
    file.write_all(corpus.as_bytes()).unwrap();
    writeln!(file, "not graph6").unwrap();
    let path = file.path().to_str().unwrap();
    let o = p3iso(&[
        "verify", "--stream", path, "--min-n", "11", "--max-n", "11", "--json", "--jobs", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let names: Vec<&str> = v["orders"]["11"]["exceptions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["catalog"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["C11", "G11"]);
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
}

#[test]
fn observations_pass() {
    let o = p3iso(&["check-observations", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn enum_counts() {
    let o = p3iso(&["enum", "--max-n", "8", "--count", "--json"]);
    let v = json(&o);
    assert_eq!(v["8"], 194);
    let o = p3iso(&["enum", "--max-n", "7", "--min-n", "7", "--no-c6", "--count"]);
    assert_eq!(stdout(&o).trim(), "7 57");
    let o = p3iso(&["enum", "--max-n", "4", "--all"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 2 + 4 + 11);
}

#[test]
fn json_output_is_stable() {
    let a = stdout(&p3iso(&["iota", "FhCKG", "--json"]));
    let b = stdout(&p3iso(&["iota", "FhCKG", "--json"]));
    assert_eq!(a, b);
    assert_eq!(
        json(&p3iso(&["iota", "FhCKG", "--json"]))["certificate"]["set"],
        serde_json::json!([1, 3])
    );
}
