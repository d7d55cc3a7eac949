//! End-to-end tests of the `immersions` binary: spawn it the way a user
//! would and check output, file effects, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn immersions(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immersions"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "command failed (exit {:?}): {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn csv_counts(out: &Output) -> Vec<String> {
    stdout_of(out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect()
}

fn jsonl_records(out: &Output) -> Vec<serde_json::Value> {
    stdout_of(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

#[test]
fn count_frobenius_totals() {
    let out = immersions(&[
        "count",
        "--kind",
        "OO",
        "--n",
        "1..10",
        "--frobenius",
        "--format",
        "csv",
    ]);
    assert_eq!(
        csv_counts(&out),
        [
            "1",
            "4",
            "22",
            "218",
            "3028",
            "55540",
            "1235526",
            "32434108",
            "980179566",
            "33522177088"
        ]
    );
    // Totals rows leave the genus column empty.
    assert!(stdout_of(&out).lines().nth(1).unwrap().contains(",,"));
}

#[test]
fn count_huge_total_is_exact_decimal() {
    let out = immersions(&["count", "--kind", "oo", "--n", "20", "--frobenius"]);
    assert!(stdout_of(&out).contains("8384177419658944198600637096"));
}

#[test]
fn count_spherical_sequence() {
    let out = immersions(&[
        "count", "--kind", "uu", "--g", "0", "--n", "1..8", "--format", "json",
    ]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout_of(&out)).unwrap();
    let counts: Vec<&str> = rows.iter().map(|r| r["count"].as_str().unwrap()).collect();
    assert_eq!(
        counts,
        ["1", "2", "6", "19", "76", "376", "2194", "14614"]
    );
    assert!(rows.iter().all(|r| r["g"] == 0));
}

#[test]
fn count_coloured_genus_rows() {
    let out = immersions(&["count", "--kind", "uoc", "--n", "5", "--format", "csv"]);
    let body = stdout_of(&out);
    let rows: Vec<&str> = body.lines().skip(1).collect();
    assert_eq!(rows, ["uoc,5,0,198", "uoc,5,1,186", "uoc,5,2,36"]);
}

#[test]
fn count_rejects_zero_crossings() {
    let out = immersions(&["count", "--kind", "oo", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_rejects_conflicting_flags() {
    let out = immersions(&["count", "--kind", "oo", "--n", "3", "--frobenius", "--g", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = immersions(&["count", "--kind", "oo", "--n", "3", "--kink-free", "--prime"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_envelope_boundary() {
    // Past the per-genus sweep range, an unrestricted count degrades
    // gracefully to the closed-form total (genus column "all").
    let out = immersions(&["count", "--kind", "oo", "--n", "7"]);
    let text = stdout_of(&out);
    assert!(text.contains("all"), "expected totals fallback: {text}");
    assert!(text.contains("1235526"));

    // With a genus restriction or a flag filter the sweep is unavoidable,
    // so the request is refused as a usage error.
    for extra in [&["--g", "1"][..], &["--kink-free"][..]] {
        let mut args = vec!["count", "--kind", "oo", "--n", "7"];
        args.extend_from_slice(extra);
        let out = immersions(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        let msg = String::from_utf8_lossy(&out.stderr).to_string();
        assert!(msg.contains("envelope"), "unexpected message: {msg}");
    }
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

#[test]
fn list_single_visit_order_class() {
    let out = immersions(&["list", "--method", "z", "--n", "1"]);
    let records = jsonl_records(&out);
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!(r["method"], "z");
    assert_eq!(r["n"], 1);
    assert_eq!(r["g"], 0);
    assert_eq!(r["rep"], serde_json::json!([2, 1]));
    // The one-crossing curve is the kink, mirror-symmetric and reversible.
    assert_eq!(r["flags"]["kink_free"], false);
    assert_eq!(r["flags"]["achiral"], true);
    assert_eq!(r["flags"]["reversible"], true);
    assert_eq!(r["flags"]["self_swap"], serde_json::Value::Null);
}

#[test]
fn list_round_trips_against_count() {
    let out = immersions(&["list", "--kind", "uu", "--g", "0", "--n", "5"]);
    let records = jsonl_records(&out);
    assert_eq!(records.len(), 76);
    for r in &records {
        assert_eq!(r["g"], 0);
        // Dihedral gauge route: orbit length times stabilizer order is the
        // acting group's order, 2n.
        let orbit = r["orbit_len"].as_u64().unwrap();
        let stab = r["stab_order"].as_u64().unwrap();
        assert_eq!(orbit * stab, 10);
        // Quotiented listing: every involution flag is null.
        for key in ["self_swap", "achiral", "reversible"] {
            assert_eq!(r["flags"][key], serde_json::Value::Null, "{key}");
        }
    }
}

#[test]
fn list_prime_spherical_example() {
    let out = immersions(&["list", "--kind", "uu", "--g", "0", "--n", "8", "--prime"]);
    let records = jsonl_records(&out);
    assert_eq!(records.len(), 27);
    for r in &records {
        for key in ["kink_free", "irreducible", "indecomposable"] {
            assert_eq!(r["flags"][key], true, "{key}");
        }
    }
}

#[test]
fn list_white_face_orbit_arithmetic() {
    let out = immersions(&["list", "--method", "y", "--n", "4"]);
    let records = jsonl_records(&out);
    assert_eq!(records.len(), 54);
    // Full pairing-preserving group order at n=4 is 2^4·4! = 384.
    for r in &records {
        let orbit = r["orbit_len"].as_u64().unwrap();
        let stab = r["stab_order"].as_u64().unwrap();
        assert_eq!(orbit * stab, 384);
    }
}

#[test]
fn list_requires_exactly_one_selector() {
    let out = immersions(&["list", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = immersions(&["list", "--kind", "oo", "--method", "z", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["list", "--kind", "oob", "--n", "4", "--cache-dir", cache];
    let first = immersions(&args);
    let cold = stdout_of(&first);
    assert_eq!(cold.lines().count(), 37 + 16 + 1);

    let entry = dir.path().join("u-cyclic_n4.jsonl");
    let marker = dir.path().join("u-cyclic_n4.done");
    assert!(entry.exists() && marker.exists());

    let warm = stdout_of(&immersions(&args));
    assert_eq!(cold, warm, "cache hit must reproduce the listing exactly");

    // A missing completion marker invalidates the entry; the listing is
    // rebuilt rather than trusted.
    std::fs::remove_file(&marker).unwrap();
    std::fs::write(&entry, b"{\"truncated\":true}\n").unwrap();
    let rebuilt = stdout_of(&immersions(&args));
    assert_eq!(cold, rebuilt);
    assert!(marker.exists());
}

#[test]
fn list_identical_across_worker_counts() {
    let one = stdout_of(&immersions(&[
        "list", "--kind", "ou", "--n", "4", "--jobs", "1",
    ]));
    let four = stdout_of(&immersions(&[
        "list", "--kind", "ou", "--n", "4", "--jobs", "4",
    ]));
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 120);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[test]
fn verify_passes_and_reports() {
    let out = immersions(&["verify", "--sumrules", "--n", "1..3"]);
    let text = stdout_of(&out);
    assert!(text.contains("[PASS] universe-partition"));
    assert!(text.contains("verify ok"));
}

#[test]
fn verify_theorem4_json() {
    let out = immersions(&[
        "verify", "--theorem4", "--n", "1..5", "--format", "json",
    ]);
    let report: Vec<serde_json::Value> = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report.len(), 2);
    assert!(report.iter().all(|o| o["status"] == "passed"));
    assert!(report.iter().any(|o| o["name"] == "parity-identities"));
}

#[test]
fn verify_rejects_unknown_check() {
    let out = immersions(&["verify", "--check", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_lists_check_names() {
    let out = immersions(&["verify", "--list-checks"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().any(|l| l == "parity-identities"));
}

// ---------------------------------------------------------------------------
// export-diagrams
// ---------------------------------------------------------------------------

fn json_files(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
}

#[test]
fn export_unoriented_spherical_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let out = immersions(&[
        "export-diagrams",
        "--kind",
        "uu",
        "--g",
        "0",
        "--n",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(stdout_of(&out).contains("wrote 6 diagram files"));
    let files = json_files(dir.path());
    assert_eq!(files.len(), 6);
    for f in &files {
        let diagram: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(f).unwrap()).unwrap();
        assert_eq!(diagram["n"], 3);
        assert_eq!(diagram["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(diagram["closure"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn export_oriented_pair() {
    let dir = tempfile::tempdir().unwrap();
    immersions(&[
        "export-diagrams",
        "--kind",
        "uo",
        "--g",
        "0",
        "--n",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(json_files(dir.path()).len(), 2);
}

#[test]
fn export_single_kink() {
    let dir = tempfile::tempdir().unwrap();
    immersions(&[
        "export-diagrams",
        "--n",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(json_files(dir.path()).len(), 1);
}

#[test]
fn export_rejects_coloured_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let out = immersions(&[
        "export-diagrams",
        "--kind",
        "uoc",
        "--n",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
