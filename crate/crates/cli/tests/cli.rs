//! End-to-end runs of the binary on small fixtures.

use std::path::Path;
use std::process::{Command, Output};
use sunscan::corpus::complete_sun;
use sunscan::reduction::parse_labels;
use sunscan::{emit_graph, parse_graph, Graph};

fn sunscan(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sunscan"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_fixture(dir: &Path, name: &str, g: &Graph) {
    std::fs::write(dir.join(name), emit_graph(g)).unwrap();
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn recognize_five_sun() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "s5.el", &complete_sun(5));
    let out = sunscan(dir.path(), &["recognize", "s5.el"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("CHORDAL yes\n"), "{text}");
    assert!(text.contains("STRONGLY_CHORDAL no\n"), "{text}");
    assert!(text.contains("SUN_ORDER 5\n"), "{text}");
}

#[test]
fn recognize_cycle_reports_hole() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "c6.el", &Graph::cycle(6));
    let out = sunscan(dir.path(), &["recognize", "c6.el"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("CHORDAL no\n"), "{text}");
    assert!(text.contains("HOLE "), "{text}");
    assert!(text.contains("STRONGLY_CHORDAL no\n"), "{text}");
}

#[test]
fn detect_sun_formats() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "c6.el", &Graph::cycle(6));
    write_fixture(dir.path(), "s5.el", &complete_sun(5));

    let absent = sunscan(dir.path(), &["detect-sun", "c6.el", "--order", "3"]);
    assert_eq!(absent.status.code(), Some(0));
    assert_eq!(stdout(&absent), "ABSENT\n");

    let found = sunscan(dir.path(), &["detect-sun", "s5.el"]);
    assert_eq!(found.status.code(), Some(0));
    let text = stdout(&found);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "5");
    assert_eq!(lines[1].split_whitespace().count(), 5);
    assert_eq!(lines[2].split_whitespace().count(), 5);

    let starved = sunscan(dir.path(), &["detect-sun", "s5.el", "--budget", "2"]);
    assert_eq!(starved.status.code(), Some(3));
    assert!(stdout(&starved).starts_with("INDETERMINATE "));
}

#[test]
fn reduce_f_writes_reparsable_files() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "p3.el", &Graph::path(3));
    let out = sunscan(dir.path(), &["reduce-f", "p3.el", "-k", "4", "-o", "fp3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("VERTICES 24\n"), "{text}");
    assert!(text.contains("EDGES 110\n"), "{text}");

    let product =
        parse_graph(&std::fs::read_to_string(dir.path().join("fp3.el")).unwrap()).unwrap();
    assert_eq!(product.vertex_count(), 24);
    assert_eq!(product.edge_count(), 110);
    let labels =
        parse_labels(&std::fs::read_to_string(dir.path().join("fp3.labels")).unwrap()).unwrap();
    assert_eq!(labels.len(), 24);
}

#[test]
fn reduce_f_rejects_triangles_with_usage_exit() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "k3.el", &Graph::complete(3));
    let out = sunscan(dir.path(), &["reduce-f", "k3.el", "-k", "4", "-o", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("triangle"));
}

#[test]
fn reduce_h_matches_fixture_counts() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "k4.el", &Graph::complete(4));
    let out = sunscan(dir.path(), &["reduce-h", "k4.el", "-o", "hk4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("VERTICES 10\n"), "{text}");
    assert!(text.contains("EDGES 18\n"), "{text}");

    let sun = sunscan(dir.path(), &["detect-sun", "hk4.el", "--order", "4"]);
    assert_eq!(sun.status.code(), Some(0));
    assert!(stdout(&sun).starts_with("4\n"));
}

#[test]
fn gen_trifree_is_deterministic_and_clean() {
    let dir = tempfile::tempdir().unwrap();
    let a = sunscan(dir.path(), &["gen-trifree", "--n", "9", "--edges", "12", "--seed", "7"]);
    let b = sunscan(dir.path(), &["gen-trifree", "--n", "9", "--edges", "12", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g = parse_graph(&stdout(&a)).unwrap();
    assert!(g.find_triangle().is_none());
}

#[test]
fn verify_claim1_small_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = sunscan(
        dir.path(),
        &["verify-claim1", "--n", "6", "--samples", "8", "--seed", "3"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.ends_with("CHECKED 8 VIOLATIONS 0 INDETERMINATE 0\n"), "{text}");
    // Byte-identical reruns.
    let again = sunscan(
        dir.path(),
        &["verify-claim1", "--n", "6", "--samples", "8", "--seed", "3"],
    );
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_antihole_on_gadget_and_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "p3.el", &Graph::path(3));
    sunscan(dir.path(), &["reduce-f", "p3.el", "-k", "4", "-o", "fp3"]);
    let clean = sunscan(dir.path(), &["verify-antihole", "fp3.el"]);
    assert_eq!(clean.status.code(), Some(0));
    assert_eq!(stdout(&clean), "ANTIHOLE none\n");

    write_fixture(dir.path(), "anti7.el", &Graph::cycle(7).complement());
    let dirty = sunscan(dir.path(), &["verify-antihole", "anti7.el"]);
    assert_eq!(dirty.status.code(), Some(1));
    assert!(stdout(&dirty).starts_with("ANTIHOLE "));
}

#[test]
fn oracle_reports() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "c8.el", &Graph::cycle(8));
    let out = sunscan(dir.path(), &["oracle", "stable-set", "c8.el", "-k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SIZE 4\n"), "{text}");
    assert!(text.contains("HAS_4 yes\n"), "{text}");

    write_fixture(dir.path(), "k5.el", &Graph::complete(5));
    let clique = sunscan(dir.path(), &["oracle", "clique", "k5.el", "-k", "5"]);
    assert!(stdout(&clique).contains("SIZE 5\n"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = sunscan(dir.path(), &["recognize", "nope.el"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad_flag = sunscan(dir.path(), &["detect-sun"]);
    assert_eq!(bad_flag.status.code(), Some(2));

    std::fs::write(dir.path().join("broken.el"), "3 1\n0 9\n").unwrap();
    let bad_input = sunscan(dir.path(), &["recognize", "broken.el"]);
    assert_eq!(bad_input.status.code(), Some(2));
    assert!(String::from_utf8(bad_input.stderr).unwrap().contains("line 2"));
}
