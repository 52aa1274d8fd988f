//! End-to-end runs of the `cgx` binary: exit codes, report shapes, and the
//! published example values.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

use cgx::formats::{EmbeddingDoc, GeometryDoc, OrderingsDoc, PolygonDoc};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgx"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cgx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {:?}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn temp_path(dir: &tempfile::TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn cdim_reports_the_published_example_answer() {
    let out = run(&["cdim", &fixture("example1.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_json(&out),
        json!({"cdim": 2, "witness": [["a", "b", "c"], ["a", "c", "b"]]})
    );

    // The orderings document generates the same geometry.
    let out = run(&["cdim", &fixture("example1_orderings.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["cdim"], json!(2));
}

#[test]
fn embed_then_verify_shelling_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let emb = temp_path(&dir, "emb.json");
    let out = run(&[
        "embed",
        "shelling",
        &fixture("example1_orderings.json"),
        "-o",
        &emb,
    ]);
    assert_eq!(code(&out), 0);

    let doc: EmbeddingDoc =
        serde_json::from_str(&std::fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(doc.dimension, 2);
    assert_eq!(doc.points["a"], vec!["-3", "-3"]);
    assert_eq!(doc.points["b"], vec!["-9", "-27"]);
    assert_eq!(doc.points["c"], vec!["-27", "-9"]);
    assert_eq!(doc.q[0], vec!["0", "0"]);
    assert_eq!(doc.q[1], vec!["27", "0"]);

    let out = run(&["verify", "shelling", &emb, &fixture("example1.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out), json!({"pass": true}));
}

#[test]
fn tiny_lambda_embedding_fails_verification_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let emb = temp_path(&dir, "emb.json");
    let out = run(&[
        "embed",
        "shelling",
        &fixture("example1_orderings.json"),
        "--lambda",
        "1/100",
        "-o",
        &emb,
    ]);
    assert_eq!(code(&out), 0);

    let out = run(&["verify", "shelling", &emb, &fixture("example1.json")]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["pass"], json!(false));
    assert_eq!(report["subset"], json!(["b"]));
    assert_eq!(report["shelling_convex"], json!(true));
    assert_eq!(report["generated"], json!(false));
}

#[test]
fn shared_vertex_map_fails_verification() {
    let out = run(&[
        "verify",
        "polygons",
        &fixture("shared_vertex.json"),
        &fixture("example1.json"),
    ]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["pass"], json!(false));
    assert_eq!(report["shared_vertex"]["first"], json!("a"));
    assert_eq!(report["shared_vertex"]["second"], json!("b"));
    assert_eq!(report["shared_vertex"]["vertex"], json!(["0", "0"]));
}

#[test]
fn embed_polygons_emits_a_verifiable_map_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let map = temp_path(&dir, "map.json");
    let svg = temp_path(&dir, "map.svg");
    let out = run(&[
        "embed",
        "polygons",
        &fixture("example1.json"),
        "--svg",
        &svg,
        "-o",
        &map,
    ]);
    assert_eq!(code(&out), 0);

    let rendered = std::fs::read_to_string(&svg).unwrap();
    assert!(rendered.starts_with("<svg"));
    assert!(rendered.contains("viewBox"));

    let doc: PolygonDoc =
        serde_json::from_str(&std::fs::read_to_string(&map).unwrap()).unwrap();
    assert_eq!(doc.shapes["a"], vec![vec!["-1", "0"], vec!["1", "0"]]);
    assert_eq!(doc.shapes["b"], vec![vec!["-2", "0"], vec!["3", "0"]]);
    assert_eq!(doc.shapes["c"], vec![vec!["-3", "0"], vec!["2", "0"]]);

    let out = run(&["verify", "polygons", &map, &fixture("example1.json")]);
    assert_eq!(code(&out), 0);
}

#[test]
fn check_separates_pass_fail_and_data_errors() {
    let out = run(&["check", &fixture("example1.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out), json!({"pass": true}));

    let dir = tempfile::tempdir().unwrap();
    let bad = temp_path(&dir, "bad.json");
    std::fs::write(
        &bad,
        r#"{"ground": ["a","b","c"], "convex": [[], ["a"], ["b"], ["a","b","c"]]}"#,
    )
    .unwrap();
    let out = run(&["check", &bad]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["pass"], json!(false));
    assert_eq!(report["axioms"]["extension_violation"], json!(["a"]));
    assert_eq!(
        report["anti_exchange"]["violation"]["base"],
        json!(["a"])
    );

    // Structurally invalid families are data errors, not verdicts.
    let missing = temp_path(&dir, "missing_empty.json");
    std::fs::write(&missing, r#"{"ground": ["a"], "convex": [["a"]]}"#).unwrap();
    let out = run(&["check", &missing]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generators_compose_with_cdim_and_drel() {
    let dir = tempfile::tempdir().unwrap();

    let c4 = temp_path(&dir, "c4.json");
    assert_eq!(code(&run(&["gen", "circle", "--n", "4", "-o", &c4])), 0);
    let out = run(&["cdim", &c4]);
    assert_eq!(stdout_json(&out)["cdim"], json!(4));

    let p = temp_path(&dir, "p.json");
    assert_eq!(
        code(&run(&["gen", "poset", "--levels", "2,2,2", "-o", &p])),
        0
    );
    let out = run(&["cdim", &p]);
    assert_eq!(stdout_json(&out)["cdim"], json!(4));

    // Line geometry piped through stdin.
    let line = run(&["gen", "line", "--n", "4"]);
    assert_eq!(code(&line), 0);
    let out = run_with_stdin(&["drel", "-"], &line.stdout);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["acyclic"], json!(false));
    assert_eq!(report["cycle"], json!(["b", "c"]));
    assert_eq!(
        report["pairs"],
        json!([["a", "b"], ["a", "c"], ["b", "c"], ["c", "b"], ["d", "b"], ["d", "c"]])
    );
}

#[test]
fn limit_flag_and_env_guard_large_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let orders = temp_path(&dir, "r13.json");
    let geom = temp_path(&dir, "g13.json");
    assert_eq!(
        code(&run(&[
            "gen", "random", "--n", "13", "--m", "1", "--seed", "5", "--limit", "13", "-o",
            &orders,
        ])),
        0
    );
    assert_eq!(
        code(&run(&["gen", "orderings", &orders, "--limit", "13", "-o", &geom])),
        0
    );

    // Default limit 12 blocks; CGX_LIMIT unblocks; the flag wins over the env.
    assert_eq!(code(&run(&["cdim", &geom])), 2);
    let out = run_env(&["cdim", &geom], "CGX_LIMIT", "13");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["cdim"], json!(1));
    assert_eq!(
        code(&run_env(&["cdim", &geom, "--limit", "12"], "CGX_LIMIT", "13")),
        2
    );
    assert_eq!(code(&run_env(&["cdim", &geom], "CGX_LIMIT", "pony")), 2);
}

#[test]
fn seeded_generation_is_deterministic() {
    let a = run(&["gen", "random", "--n", "5", "--m", "2", "--seed", "9"]);
    let b = run(&["gen", "random", "--n", "5", "--m", "2", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen", "random", "--n", "5", "--m", "2", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout);

    let doc: OrderingsDoc = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc.ground.len(), 5);
    assert_eq!(doc.orderings.len(), 2);
}

#[test]
fn emitted_documents_reparse_to_equal_values() {
    let out = run(&["gen", "circle", "--n", "3"]);
    let doc: GeometryDoc = serde_json::from_slice(&out.stdout).unwrap();
    let g = doc.to_geometry().unwrap();
    assert_eq!(GeometryDoc::from_geometry(&g), doc);

    let out = run(&["embed", "shelling", &fixture("example1_orderings.json")]);
    let doc: EmbeddingDoc = serde_json::from_slice(&out.stdout).unwrap();
    let inst = doc.to_instance().unwrap();
    assert_eq!(EmbeddingDoc::from_instance(&inst), doc);

    let out = run(&["embed", "polygons", &fixture("example1.json")]);
    let doc: PolygonDoc = serde_json::from_slice(&out.stdout).unwrap();
    let map = doc.to_map().unwrap();
    assert_eq!(PolygonDoc::from_map(&map), doc);
}

#[test]
fn dim_and_compat_report_the_example_values() {
    let out = run(&["dim", &fixture("example1.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_json(&out),
        json!({
            "cdim": 2,
            "upper_bound": 2,
            "exact": 2,
            "bounds": [2, 2],
            "line_witness": null,
        })
    );

    let out = run(&["compat", &fixture("example1.json")]);
    assert_eq!(
        stdout_json(&out),
        json!({"count": 2, "orderings": [["a", "b", "c"], ["a", "c", "b"]]})
    );
}

#[test]
fn closure_and_ext_answer_element_queries() {
    let out = run(&["closure", &fixture("example1.json"), "b"]);
    assert_eq!(stdout_json(&out), json!({"closure": ["a", "b"]}));

    let out = run(&["ext", &fixture("example1.json"), "a"]);
    assert_eq!(stdout_json(&out), json!({"element": "b"}));

    // The empty set extends by the unique minimum.
    let out = run(&["ext", &fixture("example1.json")]);
    assert_eq!(stdout_json(&out), json!({"element": "a"}));

    assert_eq!(code(&run(&["ext", &fixture("example1.json"), "b"])), 2);
    assert_eq!(
        code(&run(&["ext", &fixture("example1.json"), "a", "b", "c"])),
        2
    );
    assert_eq!(code(&run(&["closure", &fixture("example1.json"), "x"])), 2);
}

#[test]
fn usage_and_data_errors_exit_two() {
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["cdim", "/nonexistent/geometry.json"])), 2);
    assert_eq!(code(&run(&["gen", "poset", "--levels", "1,2"])), 2);
    assert_eq!(code(&run(&["gen", "random", "--n", "3", "--m", "0"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = temp_path(&dir, "bad.json");
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(code(&run(&["cdim", &bad])), 2);

    // Wrong document kind for the verb.
    assert_eq!(
        code(&run(&["embed", "shelling", &fixture("example1.json")])),
        2
    );
}
