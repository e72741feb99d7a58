mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rqs_geom::cli;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("rqs").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn triangle_backends_agree() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..6u64 {
        let pts = common::distinct_points(&mut ChaCha8Rng::seed_from_u64(seed), 14, 25);
        let body = serde_json::json!({
            "format": 1,
            "points": pts.iter().map(|p| [p.x.to_string(), p.y.to_string()]).collect::<Vec<_>>(),
        });
        let input = write(&dir, "t.json", &body.to_string());
        for bound in ["1/2", "3", "10"] {
            let decision = |backend: &str| {
                let (code, out, _) = run(&["solve", "--problem", "triangle", "--input", &input, "--area-bound", bound, "--backend", backend]);
                assert_eq!(code, 0);
                serde_json::from_str::<Value>(&out).unwrap()["decision"].clone()
            };
            assert_eq!(decision("rqs"), decision("bruteforce"), "seed {seed} bound {bound}");
        }
    }
}

#[test]
fn unit_right_triangle_found() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(&dir, "t.json", r#"{"format":1,"points":[["0","0"],["1","0"],["0","1"],["10","10"]]}"#);
    let (code, out, _) = run(&["solve", "--problem", "triangle", "--input", &input, "--area-bound", "0.5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["decision"], true);
    assert_eq!(v["witness"]["points"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["format"], 1);
}

#[test]
fn depth_target_above_n_is_no() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(&dir, "d.json", r#"{"format":1,"points":[[0,0],[0.5,0.5]]}"#);
    let (code, out, _) = run(&["solve", "--problem", "disk", "--input", &input, "--depth-target", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["decision"], false);
    assert_eq!(v["ledger"], Value::Null);
}

#[test]
fn svg_written_for_disks() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(&dir, "d.json", r#"{"format":1,"points":[[0,0],[0.5,0.5],[2,1],[1,-1],[3,0]]}"#);
    let svg = dir.path().join("out.svg");
    let (code, _, _) =
        run(&["solve", "--problem", "disk", "--input", &input, "--depth-target", "2", "--emit-svg", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(svg).unwrap().starts_with("<svg"));
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(&["solve", "--problem", "disk", "--depth-target", "1"]);
    assert_eq!(code, 1);

    let bad = write(&dir, "bad.json", "{\"format\":1,\n \"points\": [[0, 0],\n");
    let (code, _, err) = run(&["solve", "--problem", "disk", "--input", &bad, "--depth-target", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");

    let old = write(&dir, "old.json", r#"{"format":2,"points":[]}"#);
    let (code, _, err) = run(&["solve", "--problem", "disk", "--input", &old, "--depth-target", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("format"));

    let tri = write(&dir, "t.json", r#"{"format":1,"points":[[0,0],[1,0],[0,1]]}"#);
    assert_eq!(run(&["solve", "--problem", "triangle", "--input", &tri]).0, 1);
    assert_eq!(run(&["solve", "--problem", "triangle", "--input", &tri, "--area-bound", "x"]).0, 1);
    assert_eq!(run(&["solve", "--problem", "triangle", "--input", &tri, "--area-bound", "1", "--emit-svg", "a.svg"]).0, 1);

    let rev = write(&dir, "iv.json", r#"{"format":1,"P":[[2,1]],"Q":[[0,5]]}"#);
    assert_eq!(run(&["solve", "--problem", "intervals", "--input", &rev]).0, 1);
}

#[test]
fn experiment_arguments_checked_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(run(&["experiment", "--experiment", "conc-lines", "--trials", "0", "--out", out]).0, 1);
    assert_eq!(run(&["experiment", "--experiment", "cost-scaling", "--sizes", "64", "--out", out]).0, 1);
    assert_eq!(run(&["experiment", "--experiment", "conc-grid", "--d", "5", "--out", out]).0, 1);
    assert!(std::fs::read_dir(out).unwrap().next().is_none());
}

#[test]
fn experiment_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let (code, line, _) = run(&["experiment", "--experiment", "conc-grid", "--n", "60", "--k", "10", "--trials", "5", "--out", out]);
    assert_eq!(code, 0);
    assert!(line.starts_with("conc-grid-2 "));
    let csv = std::fs::read_to_string(dir.path().join("conc-grid-2.csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
    let json: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("conc-grid-2.json")).unwrap()).unwrap();
    assert_eq!(json["trials"].as_array().unwrap().len(), 5);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(&dir, "l.json", r#"{"format":1,"lines":[["1","0"],["2","-1"],["-1","2"],["3","5"],["1/2","7"],["-4","1"]]}"#);
    let args = ["solve", "--problem", "p3l", "--input", &input, "--seed", "5", "--epsilon", "0.3"];
    let a = run(&args);
    assert_eq!(a, run(&args));
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["decision"], true);
    assert_eq!(v["witness"]["point"], serde_json::json!({"x": "1", "y": "1"}));
}
