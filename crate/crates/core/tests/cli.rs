// Copyright 2026 The qvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! End-to-end tests of the `qvf` binary.

use std::path::Path;
use std::process::{Command, Output};

fn qvf(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qvf"))
        .args(args)
        .env("QVF_OUT_DIR", dir)
        .output()
        .expect("binary runs")
}

fn ok(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data_rows(path: &Path) -> usize {
    std::fs::read_to_string(path).unwrap().lines().count() - 2
}

#[test]
fn bench_build_writes_parseable_qasm() {
    let dir = tempfile::tempdir().unwrap();
    ok(&qvf(dir.path(), &["bench", "build", "bv", "--secret", "011"]));
    let c = qvf::circuits::parse_qasm(&std::fs::read_to_string(dir.path().join("bv.qasm")).unwrap()).unwrap();
    assert_eq!(qvf::injector::enumerate_sites(&c).len(), 13);

    let out = dir.path().join("g.qasm");
    ok(&qvf(dir.path(), &["bench", "build", "grover", "--marked", "11", "--out", out.to_str().unwrap()]));
    let text = std::fs::read_to_string(&out).unwrap();
    let c = qvf::circuits::parse_qasm(&text).unwrap();
    assert_eq!(qvf::circuits::emit_qasm(&c), text);
}

#[test]
fn bench_list_shows_three_kinds() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(ok(&qvf(dir.path(), &["bench", "list"])).lines().count(), 3);
}

#[test]
fn default_bv_campaign_has_4057_rows() {
    let dir = tempfile::tempdir().unwrap();
    let stdout = ok(&qvf(dir.path(), &["campaign", "run", "bench:bv", "--jobs", "2"]));
    assert!(stdout.contains("records: 4057"), "{stdout}");
    assert!(stdout.contains("executions: 4153344"), "{stdout}");
    assert_eq!(data_rows(&dir.path().join("bv_campaign.csv")), 4057);
}

#[test]
fn coarse_grid_on_single_h() {
    let dir = tempfile::tempdir().unwrap();
    let qasm = dir.path().join("h.qasm");
    std::fs::write(&qasm, "OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nh q[0];\nmeasure q[0] -> c[0];\n").unwrap();
    let csv = dir.path().join("h.csv");
    ok(&qvf(
        dir.path(),
        &["campaign", "run", qasm.to_str().unwrap(), "--grid-step", "90", "--correct", "0", "--out", csv.to_str().unwrap()],
    ));
    assert_eq!(data_rows(&csv), 13);
}

#[test]
fn identical_seeds_give_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, jobs: &str| {
        let out = dir.path().join(name);
        ok(&qvf(
            dir.path(),
            &[
                "campaign", "run", "bench:grover", "--mode", "sampled", "--noise", "representative", "--seed", "9",
                "--grid-step", "45", "--jobs", jobs, "--out", out.to_str().unwrap(),
            ],
        ));
        std::fs::read(out).unwrap()
    };
    assert_eq!(run("a.csv", "1"), run("b.csv", "4"));
}

#[test]
fn reports_from_a_campaign() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bv.csv");
    let csv_s = csv.to_str().unwrap();
    ok(&qvf(dir.path(), &["campaign", "run", "bench:bv", "--grid-step", "45", "--out", csv_s]));

    ok(&qvf(dir.path(), &["report", "heatmap", "--in", csv_s, "--overlay"]));
    assert!(std::fs::read_to_string(dir.path().join("bv_heatmap.svg")).unwrap().starts_with("<svg"));
    ok(&qvf(dir.path(), &["report", "perqubit", "--in", csv_s, "--format", "ppm"]));
    assert!(std::fs::read(dir.path().join("bv_perqubit.ppm")).unwrap().starts_with(b"P6\n"));
    ok(&qvf(dir.path(), &["report", "hist", "--in", csv_s, "--format", "csv"]));
    assert_eq!(std::fs::read_to_string(dir.path().join("bv_hist.csv")).unwrap().lines().count(), 51);

    // delta of a file against itself is uniformly white
    let ppm = dir.path().join("self.ppm");
    ok(&qvf(dir.path(), &["report", "delta", "--in", csv_s, "--format", "ppm", "--out", ppm.to_str().unwrap()]));
    let bytes = std::fs::read(&ppm).unwrap();
    let body = bytes.splitn(4, |&b| b == b'\n').nth(3).unwrap();
    assert!(body.iter().all(|&b| b == 255));

    // the ancilla returns to baseline after its last CX
    let tl = dir.path().join("tl.csv");
    ok(&qvf(dir.path(), &["report", "timeline", "--in", csv_s, "--theta", "180", "--phi", "0", "--format", "csv", "--out", tl.to_str().unwrap()]));
    let text = std::fs::read_to_string(&tl).unwrap();
    let anc: Vec<&str> = text.lines().filter(|l| l.starts_with("3,")).collect();
    assert_eq!(anc.last().unwrap(), &"3,10,0");

    let missing = qvf(dir.path(), &["report", "timeline", "--in", csv_s, "--theta", "15", "--phi", "0"]);
    assert!(!missing.status.success());
}

#[test]
fn uniform_half_file_renders_white() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("# qvf-csv v1\n");
    text.push_str(&qvf::report::RECORD_HEADER.join(","));
    text.push('\n');
    for t in [0, 90, 180] {
        for p in [0, 90, 180, 270] {
            text.push_str(&format!("x,0,0,0,{t},{p},exact,0,0,0.5,0.5,0,0.5,0,0\n"));
        }
    }
    let csv = dir.path().join("half.csv");
    std::fs::write(&csv, text).unwrap();
    let ppm = dir.path().join("half.ppm");
    ok(&qvf(dir.path(), &["report", "heatmap", "--in", csv.to_str().unwrap(), "--format", "ppm", "--out", ppm.to_str().unwrap()]));
    let bytes = std::fs::read(&ppm).unwrap();
    let body = bytes.splitn(4, |&b| b == b'\n').nth(3).unwrap();
    assert!(!body.is_empty() && body.iter().all(|&b| b == 255));
}

#[test]
fn exit_codes_distinguish_failures() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| qvf(dir.path(), args).status.code().unwrap();

    assert_eq!(code(&["campaign", "run"]), 64);

    let bad_qasm = dir.path().join("bad.qasm");
    std::fs::write(&bad_qasm, "qreg q[1];\nfoo q[0];\n").unwrap();
    assert_eq!(code(&["campaign", "run", bad_qasm.to_str().unwrap()]), 65);

    let v2 = dir.path().join("v2.csv");
    std::fs::write(&v2, "# qvf-csv v2\n").unwrap();
    assert_eq!(code(&["report", "heatmap", "--in", v2.to_str().unwrap()]), 65);

    assert_eq!(code(&["campaign", "run", "bench:bv", "--shots", "0"]), 70);
    assert_eq!(code(&["report", "hist", "--in", "/nonexistent/r.csv"]), 74);
}
