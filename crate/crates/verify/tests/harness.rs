use std::process::{Command, Stdio};

use inertia_core::Graph;
use inertia_verify::corpus::{enumerate_labeled, sample_random, Corpus};
use inertia_verify::report::{emit_report, write_csv, write_json, Format};
use inertia_verify::run::{run_verification, Check, RunConfig, Status, COLUMNS};

fn serial(checks: impl IntoIterator<Item = Check>) -> RunConfig {
    let mut c = RunConfig::new(checks);
    c.workers = Some(1);
    c.strict = true;
    c
}

fn run(graphs: impl IntoIterator<Item = Graph>, config: &RunConfig) -> inertia_verify::RunReport {
    run_verification(&Corpus::from_graphs("g", graphs), config).unwrap()
}

#[test]
fn empty_corpus_gives_empty_reports() {
    let report = run([], &serial(Check::ALL));
    let mut csv = Vec::new();
    write_csv(&report.rows, &mut csv).unwrap();
    assert_eq!(
        String::from_utf8(csv).unwrap(),
        format!("{}\n", COLUMNS.join(","))
    );

    let mut json = Vec::new();
    write_json(&report, &mut json).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert_eq!(v["rows"], serde_json::json!([]));
    assert_eq!(v["summary"]["graphs"], 0);
}

#[test]
fn json_keys_match_csv_columns() {
    let report = run([Graph::cycle(5)], &serial(Check::ALL));
    // Keys in emitted order; `serde_json::Value` would sort them.
    let text = serde_json::to_string_pretty(&report.rows[0]).unwrap();
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \"")?.split_once("\":").map(|(k, _)| k))
        .collect();
    assert_eq!(keys, COLUMNS);

    let mut csv = Vec::new();
    write_csv(&report.rows, &mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1].split(',').count(), COLUMNS.len());
}

#[test]
fn small_rows() {
    let report = run([Graph::path(2), Graph::cycle(5)], &serial(Check::ALL));
    let k2 = &report.rows[0];
    assert_eq!((k2.p, k2.n, k2.eta, k2.m, k2.c), (1, 1, 0, 1, 0));
    assert_eq!(k2.graph6, "A_");
    let c5 = &report.rows[1];
    assert_eq!((c5.p, c5.n, c5.eta, c5.m, c5.c), (3, 2, 0, 2, 1));
    assert!(!report.has_counterexamples());
}

#[test]
fn cycle_bound_flags() {
    // (p_upper, n_upper, lower) per cycle: C_3 reaches n = m + c, C_4 both
    // lower bounds, C_5 p = m + c, C_6 none.
    let report = run((3..=6).map(Graph::cycle), &serial([Check::Bounds]));
    let flags: Vec<(bool, bool, bool, bool)> = report
        .rows
        .iter()
        .map(|r| {
            (
                r.p_upper_attained,
                r.n_upper_attained,
                r.p_lower_attained,
                r.n_lower_attained,
            )
        })
        .collect();
    assert_eq!(
        flags,
        [
            (false, true, false, false),
            (false, false, true, true),
            (true, false, false, false),
            (false, false, false, false),
        ]
    );
    assert!(report.rows.iter().all(|r| r.bounds == Some(Status::Pass)));
}

#[test]
fn two_squares_bridged_is_not_lower_extremal() {
    let g = Graph::cycle(4)
        .disjoint_union(&Graph::cycle(4))
        .extended(0, &[(0, 4)])
        .unwrap();
    let report = run([g], &serial([Check::Classifiers]));
    let r = &report.rows[0];
    assert!(!r.p_lower_attained && !r.p_lower_conditions);
    assert_eq!(r.classifiers, Some(Status::Pass));
}

#[test]
fn exhaustive_five_all_checks() {
    let corpus = enumerate_labeled(5).unwrap();
    let report = run_verification(&corpus, &serial(Check::ALL)).unwrap();
    assert_eq!(report.rows.len(), 1024);
    assert!(
        !report.has_counterexamples(),
        "{:?}",
        report.summary.counterexamples
    );
}

#[test]
fn budget_skips_and_strict_failures() {
    let big = Graph::path(16);
    let mut config = serial([Check::Difference]);
    config.strict = false;
    let lenient = run([big.clone()], &config);
    assert_eq!(lenient.rows[0].difference, Some(Status::Budget));
    assert!(!lenient.has_counterexamples());

    config.strict = true;
    let strict = run([big], &config);
    assert_eq!(strict.rows[0].difference, Some(Status::Fail));
    assert_eq!(strict.summary.counterexamples.len(), 1);
    assert_eq!(
        strict.summary.counterexamples[0].graph6,
        strict.rows[0].graph6
    );
}

#[test]
fn worker_count_does_not_change_rows() {
    let corpus = sample_random(8, 0.3, 200, 42).unwrap();
    let mut config = serial(Check::ALL);
    let one = run_verification(&corpus, &config).unwrap();
    config.workers = Some(4);
    let four = run_verification(&corpus, &config).unwrap();
    assert_eq!(one.rows, four.rows);
    assert_eq!(one.summary, four.summary);
}

#[test]
fn emit_report_names_path_on_failure() {
    let report = run([], &serial([Check::Bounds]));
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/report.json");
    let err = emit_report(&report, Format::Json, &missing).unwrap_err();
    assert!(err.to_string().contains("report.json"), "{err}");
    let ok = dir.path().join("r.csv");
    emit_report(&report, Format::Csv, &ok).unwrap();
    assert!(std::fs::read_to_string(ok)
        .unwrap()
        .starts_with("graph_id,graph6,"));
}

#[test]
fn check_lists() {
    assert_eq!(Check::parse_list("all").unwrap().len(), 8);
    assert_eq!(
        Check::parse_list("bounds, lemmas")
            .unwrap()
            .into_iter()
            .collect::<Vec<_>>(),
        [Check::Bounds, Check::Lemmas]
    );
    assert!(Check::parse_list("bounds,nope").is_err());
    assert!(Check::parse_list("").is_err());
}

fn inertia_cmd() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_inertia"));
    cmd.env_remove("INERTIA_WORKERS");
    cmd
}

/// Exit status only; the child's diagnostics are discarded.
fn quiet() -> Command {
    let mut cmd = inertia_cmd();
    cmd.stderr(Stdio::null()).stdout(Stdio::null());
    cmd
}

#[test]
fn cli_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");

    let clean = quiet()
        .args([
            "verify",
            "--corpus",
            "exhaustive:4",
            "--checks",
            "all",
            "--format",
            "json",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(clean.code(), Some(0));

    let g6 = dir.path().join("big.g6");
    std::fs::write(
        &g6,
        format!(
            ">path on 16 vertices\n{}\n",
            inertia_verify::encode_graph6(&Graph::path(16))
        ),
    )
    .unwrap();
    let strict_budget = quiet()
        .args(["verify", "--checks", "difference", "--strict", "--corpus"])
        .arg(format!("graph6:{}", g6.display()))
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(strict_budget.code(), Some(1));

    for bad in [
        vec!["verify", "--corpus", "exhaustive:7", "--out"],
        vec![
            "verify",
            "--corpus",
            "exhaustive:3",
            "--checks",
            "nope",
            "--out",
        ],
        vec![
            "verify",
            "--corpus",
            "exhaustive:3",
            "--workers",
            "0",
            "--out",
        ],
        vec![
            "verify",
            "--corpus",
            "graph6:/definitely/missing.g6",
            "--out",
        ],
    ] {
        let status = quiet().args(&bad).arg(&out).status().unwrap();
        assert_eq!(status.code(), Some(2), "{bad:?}");
    }
    let bad_env = quiet()
        .env("INERTIA_WORKERS", "many")
        .args(["verify", "--corpus", "exhaustive:2", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(bad_env.code(), Some(2));
    assert_eq!(
        quiet()
            .args([
                "generate",
                "--residue",
                "2",
                "--cycles",
                "1",
                "--steps",
                "1",
                "--seed",
                "0"
            ])
            .status()
            .unwrap()
            .code(),
        Some(2)
    );
    assert_eq!(
        quiet().args(["analyze", "A "]).status().unwrap().code(),
        Some(2)
    );
    assert_eq!(quiet().arg("frobnicate").status().unwrap().code(), Some(2));
}

#[test]
fn cli_analyze_and_generate() {
    let out = inertia_cmd().args(["analyze", "Dhc"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let row: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (row["p"].as_u64(), row["n"].as_u64(), row["m"].as_u64()),
        (Some(3), Some(2), Some(2))
    );

    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("tri.txt");
    std::fs::write(&edges, "3\n0 1\n1 2\n2 0\n").unwrap();
    let out = inertia_cmd().arg("analyze").arg(&edges).output().unwrap();
    let row: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(row["graph6"], "Bw");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3\n0 1\n1 5\n").unwrap();
    let out = inertia_cmd().arg("analyze").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let gen = |seed: &str| {
        inertia_cmd()
            .args([
                "generate",
                "--residue",
                "1",
                "--cycles",
                "2",
                "--steps",
                "4",
                "--count",
                "3",
                "--seed",
                seed,
            ])
            .output()
            .unwrap()
    };
    let a = gen("5");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, gen("5").stdout);
    let lines: Vec<&str> = std::str::from_utf8(&a.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        let g = inertia_verify::parse_graph6(line).unwrap();
        assert_eq!(g.cyclomatic_number(), 2);
    }
}
