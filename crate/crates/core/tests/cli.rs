use std::path::PathBuf;

use boxlab::cli::{run, ExitStatus};

struct Run {
    status: ExitStatus,
    stdout: String,
    stderr: String,
}

fn boxlab(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("boxlab").chain(args.iter().copied());
    let status = run(argv, &mut out, &mut err);
    Run {
        status,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("boxlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn circular_cover_has_chi_reps() {
    let r = boxlab(&["cover", "circular", "--k", "7", "--d", "2"]);
    assert_eq!(r.status, ExitStatus::Success);
    assert_eq!(json(&r.stdout)["reps"].as_array().unwrap().len(), 4);
    assert!(r.stderr.contains("verified"));
}

#[test]
fn over_covering_is_rejected() {
    let graph = scratch("c4.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#);
    let k4 = r#"{"0":[[0,1],[1,1]],"1":[[0,1],[1,1]],"2":[[0,1],[1,1]],"3":[[0,1],[1,1]]}"#;
    let cover = scratch(
        "k4-cover.json",
        &format!(
            r#"{{"graph":{{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}},"reps":[{{"n":4,"intervals":{k4}}}]}}"#
        ),
    );
    let r = boxlab(&[
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--cover",
        cover.to_str().unwrap(),
    ]);
    assert_eq!(r.status, ExitStatus::VerificationFailed);
    assert_eq!(r.status.code(), 1);
    assert!(r.stderr.contains("non-edge (0,2)"), "{}", r.stderr);
    assert_eq!(json(&r.stdout)["ok"], false);
}

#[test]
fn zdg_report_72() {
    let r = boxlab(&["zdg", "report", "--n", "72"]);
    assert_eq!(r.status, ExitStatus::Success);
    let v = json(&r.stdout);
    assert_eq!(v["omega_chi"], 4);
    assert_eq!(v["box_upper"], 7);
    assert_eq!(v["box_one"], false);
    assert_eq!(v["T"], serde_json::json!([12, 24, 36, 18]));
    let prime = boxlab(&["zdg", "report", "--n", "13"]);
    assert_eq!(
        json(&prime.stdout)["note"],
        "empty graph, boxicity 0 by convention"
    );
}

#[test]
fn gen_output_feeds_box_and_verify() {
    let g = boxlab(&["gen", "circular", "--k", "7", "--d", "2"]);
    assert_eq!(g.status, ExitStatus::Success);
    let graph = scratch("g72.json", &g.stdout);
    let c = boxlab(&["cover", "circular", "--k", "7", "--d", "2"]);
    let cover = scratch("g72-cover.json", &c.stdout);
    let v = boxlab(&[
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--cover",
        cover.to_str().unwrap(),
    ]);
    assert_eq!(v.status, ExitStatus::Success, "{}", v.stderr);

    let c4 = scratch("c4b.json", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let b = boxlab(&["box", "--graph", c4.to_str().unwrap(), "--max", "3"]);
    assert_eq!(b.status, ExitStatus::Success);
    assert_eq!(json(&b.stdout)["boxicity"], 2);
    assert!(b.stderr.contains("chordless-cycle"));
    let capped = boxlab(&["box", "--graph", c4.to_str().unwrap(), "--max", "1"]);
    assert_eq!(json(&capped.stdout)["boxicity"], serde_json::Value::Null);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gen", "zdg", "--n", "72"][..],
        &["gen", "zdg", "--n", "72", "--compressed"],
        &["gen", "boolean", "--k", "3"],
        &["cover", "zdg", "--n", "60"],
        &["sweep", "circular", "--dmax", "3", "--kmax", "12"],
    ] {
        let a = boxlab(args);
        let b = boxlab(args);
        assert_eq!(a.status, ExitStatus::Success, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn join_and_reduced_covers() {
    let k2 = scratch("k2.json", r#"{"n":2,"edges":[[0,1]]}"#);
    let k3 = scratch("k3.json", r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
    let e2 = scratch("e2.json", r#"{"n":2,"edges":[]}"#);
    let r = boxlab(&[
        "cover",
        "join",
        "--outer",
        k2.to_str().unwrap(),
        "--part",
        k3.to_str().unwrap(),
        "--part",
        e2.to_str().unwrap(),
        "--skip",
        "0",
    ]);
    assert_eq!(r.status, ExitStatus::Success, "{}", r.stderr);
    assert_eq!(json(&r.stdout)["reps"].as_array().unwrap().len(), 1);

    let bad = boxlab(&[
        "cover",
        "join",
        "--outer",
        k2.to_str().unwrap(),
        "--part",
        e2.to_str().unwrap(),
        "--part",
        e2.to_str().unwrap(),
        "--skip",
        "0",
    ]);
    assert_eq!(bad.status, ExitStatus::InputError);

    let k33 = scratch(
        "k33.txt",
        "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n",
    );
    let r = boxlab(&["cover", "reduced", "--graph", k33.to_str().unwrap()]);
    assert_eq!(json(&r.stdout)["reps"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(
        boxlab(&["gen", "circular", "--k", "3", "--d", "2"])
            .status
            .code(),
        2
    );
    assert_eq!(boxlab(&["frobnicate"]).status.code(), 2);
    assert_eq!(
        boxlab(&["gen", "zdg", "--n", "12", "--bogus"])
            .status
            .code(),
        2
    );
    let big = scratch("e12.json", r#"{"n":12,"edges":[]}"#);
    assert_eq!(
        boxlab(&["box", "--graph", big.to_str().unwrap(), "--max", "2"])
            .status
            .code(),
        3
    );
    let missing = boxlab(&[
        "verify",
        "--graph",
        "/nonexistent",
        "--cover",
        "/nonexistent",
    ]);
    assert_eq!(missing.status.code(), 2);
}

#[test]
fn sweeps_report_per_case() {
    let r = boxlab(&[
        "sweep", "circular", "--dmax", "6", "--kmax", "30", "--dmin", "2",
    ]);
    assert_eq!(r.status, ExitStatus::Success);
    assert_eq!(r.stdout.lines().count(), 1 + 115);
    assert!(r.stdout.lines().skip(1).all(|l| l.ends_with("pass")));

    // N = 18 = 2·3² is interval although not of the form p^n or 2p
    let z = boxlab(&["sweep", "zdg", "--nmax", "20"]);
    assert_eq!(z.status, ExitStatus::VerificationFailed);
    let failing: Vec<&str> = z.stdout.lines().filter(|l| l.ends_with("FAIL")).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].starts_with("18\t"));
}

#[test]
fn output_file_option() {
    let dir = std::env::temp_dir().join(format!("boxlab-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    let r = boxlab(&["gen", "zdg", "--n", "12", "-o", path.to_str().unwrap()]);
    assert_eq!(r.status, ExitStatus::Success);
    assert!(r.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(json(&written)["n"], 7);
}
