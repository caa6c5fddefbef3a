//! End-to-end checks of the command-line surface: exit codes, machine
//! output lines, file formats and the bench matrix.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tscu"))
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tscu-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const P3: &str = "p tscu 3 2\ne 1 2\ne 2 3\ns 1\nt 3\nl 1\n";

#[test]
fn solve_brute_yes_exit_zero() {
    let dir = tempdir("solve");
    let inst = write(&dir, "p3.tscu", P3);
    let out = bin()
        .args(["solve", "--algo", "brute"])
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "YES 1");
}

#[test]
fn solve_no_exit_one() {
    let dir = tempdir("solve-no");
    let inst = write(
        &dir,
        "k4.tscu",
        "p tscu 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ns 1\nt 2\nl 2\n",
    );
    let out = bin()
        .args(["solve", "--algo", "treewidth"])
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "NO");
}

#[test]
fn solve_cograph_cap_exceeded_exits_two() {
    let dir = tempdir("cap");
    let inst = write(
        &dir,
        "p5.tscu",
        "p tscu 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1\nt 5\n",
    );
    let out = bin()
        .args(["solve", "--algo", "cograph", "--modulator-cap", "0"])
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no modulator within cap"));
}

#[test]
fn solve_auto_picks_treewidth_on_trees() {
    let dir = tempdir("auto");
    let mut text = String::from("p tscu 14 13\n");
    for i in 1..14 {
        text.push_str(&format!("e {} {}\n", i, i + 1));
    }
    text.push_str("s 1\nt 14\n");
    let inst = write(&dir, "path.tscu", &text);
    let out = bin()
        .args(["solve", "--algo", "auto"])
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(
        stderr(&out).contains("c algo treewidth"),
        "{}",
        stderr(&out)
    );
    assert_eq!(stdout(&out).trim(), "YES 1");
}

#[test]
fn solve_writes_solution_and_verify_accepts_it() {
    let dir = tempdir("roundtrip");
    let inst = write(
        &dir,
        "c6.tscu",
        "p tscu 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\ns 1\nt 4\n",
    );
    let sol = dir.join("c6.sol");
    let out = bin()
        .args(["solve", "--algo", "brute", "-o"])
        .arg(&sol)
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = bin().arg("verify").arg(&inst).arg(&sol).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("valid"));
}

#[test]
fn solve_with_supplied_decomposition() {
    let dir = tempdir("td");
    let inst = write(&dir, "p3.tscu", P3);
    let td = write(
        &dir,
        "p3.td",
        "s td 2 2 3
b 1 1 2
b 2 2 3
1 2
",
    );
    let out = bin()
        .args(["solve", "--algo", "treewidth", "--td"])
        .arg(&td)
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "YES 1");

    // a decomposition that misses an edge is rejected with the axiom name
    let bad = write(
        &dir,
        "bad.td",
        "s td 2 2 3
b 1 1 2
b 2 3
1 2
",
    );
    let out = bin()
        .args(["solve", "--algo", "treewidth", "--td"])
        .arg(&bad)
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("not inside any bag"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn verify_rejects_terminal_on_wrong_side() {
    let dir = tempdir("verify");
    let inst = write(&dir, "p3.tscu", P3);
    let sol = write(&dir, "bad.sol", "r 1\nr 3\n");
    let out = bin().arg("verify").arg(&inst).arg(&sol).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("T not blue"));
}

#[test]
fn verify_malformed_solution_exits_two() {
    let dir = tempdir("verify-bad");
    let inst = write(&dir, "p3.tscu", P3);
    let sol = write(&dir, "junk.sol", "red 1\n");
    let out = bin().arg("verify").arg(&inst).arg(&sol).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kernelize_fes_writes_kernel_and_report() {
    let dir = tempdir("kernel");
    // triangle with a pendant: rule 1 strips the pendant
    let inst = write(
        &dir,
        "tri.tscu",
        "p tscu 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\ns 1\nt 2\n",
    );
    let kern = dir.join("tri.kernel.tscu");
    let report = dir.join("tri.report.json");
    let out = bin()
        .args(["kernelize", "--rules", "fes"])
        .arg(&inst)
        .arg("-o")
        .arg(&kern)
        .arg("--report")
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let kern_text = std::fs::read_to_string(&kern).unwrap();
    assert!(kern_text.starts_with("p tscu 3 3"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["input_n"], 4);
    assert_eq!(json["output_n"], 3);
    assert_eq!(json["r1"], 1);
    assert!(json["trivially_decided"].is_null());
}

#[test]
fn kernelize_trivial_instance_reports_verdict() {
    let dir = tempdir("kernel-trivial");
    let inst = write(
        &dir,
        "p5.tscu",
        "p tscu 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1\nt 5\nl 1\n",
    );
    let kern = dir.join("p5.kernel.tscu");
    let report = dir.join("p5.report.json");
    let out = bin()
        .args(["kernelize", "--rules", "fes"])
        .arg(&inst)
        .arg("-o")
        .arg(&kern)
        .arg("--report")
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["trivially_decided"], "YES");
    // the stub instance must itself be a yes-instance
    let out = bin()
        .args(["solve", "--algo", "brute"])
        .arg(&kern)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn kernelize_vc_on_budget_free_instance() {
    let dir = tempdir("kernel-vc");
    let mut text = String::from("p tscu 9 8\n");
    for leaf in 2..=9 {
        text.push_str(&format!("e 1 {leaf}\n"));
    }
    text.push_str("s 2\nt 3\n");
    let inst = write(&dir, "star.tscu", &text);
    let kern = dir.join("star.kernel.tscu");
    let out = bin()
        .args(["kernelize", "--rules", "vc2dcs"])
        .arg(&inst)
        .arg("-o")
        .arg(&kern)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let kern_text = std::fs::read_to_string(&kern).unwrap();
    assert!(kern_text.lines().next().unwrap().starts_with("p tscu"));
}

#[test]
fn generate_random_is_deterministic_and_seed_env_overrides() {
    let dir = tempdir("gen");
    let a = dir.join("a.tscu");
    let b = dir.join("b.tscu");
    let c = dir.join("c.tscu");
    let args = [
        "generate",
        "random",
        "--kind",
        "connected",
        "--n",
        "10",
        "--m",
        "14",
        "--seed",
        "7",
        "-o",
    ];
    for out_path in [&a, &b] {
        let out = bin().args(args).arg(out_path).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
    let out = bin()
        .args(args)
        .arg(&c)
        .env("TSCU_SEED", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_ne!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&c).unwrap()
    );
}

#[test]
fn generate_sat34_and_transform_bipartite() {
    let dir = tempdir("gen-sat");
    let cnf = write(&dir, "f.cnf", "c tiny\np cnf 2 2\n1 2 0\n-1 -2 0\n");
    let inst_path = dir.join("f.tscu");
    let out = bin()
        .args(["generate", "sat34", "--cnf"])
        .arg(&cnf)
        .arg("-o")
        .arg(&inst_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&inst_path).unwrap();
    assert!(text.starts_with("p tscu 28 "));

    let small = write(&dir, "p3.tscu", "p tscu 3 2\ne 1 2\ne 2 3\ns 1\nt 3\n");
    let bip = dir.join("p3.bip.tscu");
    let out = bin()
        .args(["transform", "bipartite"])
        .arg(&small)
        .arg("-o")
        .arg(&bip)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(std::fs::read_to_string(&bip)
        .unwrap()
        .starts_with("p tscu 11 "));
}

#[test]
fn generate_mcc_with_metadata_comments() {
    let dir = tempdir("gen-mcc");
    let graph = write(&dir, "c4.tscu", "p tscu 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let classes = write(&dir, "c4.classes", "1 3\n2 4\n");
    let out_path = dir.join("mcc.tscu");
    let out = bin()
        .args(["generate", "mcc", "--graph"])
        .arg(&graph)
        .arg("--classes")
        .arg(&classes)
        .arg("-o")
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("c c1 8\nc c2 15\n"));
    assert!(text.contains("l 34"));
}

#[test]
fn bench_matrix_agreement_and_formats() {
    let dir = tempdir("bench");
    let p3 = write(&dir, "p3.tscu", P3);
    let c6 = write(
        &dir,
        "c6.tscu",
        "p tscu 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\ns 1\nt 4\n",
    );
    let manifest = write(
        &dir,
        "suite.txt",
        &format!(
            "{} brute,treewidth\n{} brute,treewidth,cograph\n",
            p3.display(),
            c6.display()
        ),
    );
    let out = bin()
        .arg("bench")
        .arg(&manifest)
        .args(["--jobs", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance,algo,verdict,optimum,ms,params"
    );
    assert_eq!(lines.count(), 5);
    assert!(text.contains("YES"));

    let out = bin()
        .arg("bench")
        .arg(&manifest)
        .args(["--format", "md"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("| instance |"));
}

#[test]
fn bench_empty_manifest_is_fine() {
    let dir = tempdir("bench-empty");
    let manifest = write(&dir, "empty.txt", "");
    let out = bin().arg("bench").arg(&manifest).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "instance,algo,verdict,optimum,ms,params"
    );
}

#[test]
fn bench_inapplicable_algorithm_becomes_error_row() {
    let dir = tempdir("bench-error");
    // K32 is far too wide for the treewidth program; auto routes around it
    let mut text = String::from("p tscu 32 496\n");
    for i in 1..=32 {
        for j in i + 1..=32 {
            text.push_str(&format!("e {i} {j}\n"));
        }
    }
    text.push_str("s 1\nt 2\n");
    let inst = write(&dir, "k32.tscu", &text);
    let manifest = write(
        &dir,
        "suite.txt",
        &format!("{} auto,treewidth\n", inst.display()),
    );
    let out = bin().arg("bench").arg(&manifest).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ERROR"), "{text}");
    assert!(text.contains("YES"), "{text}");
}

#[test]
fn bench_timeout_becomes_row() {
    let dir = tempdir("bench-timeout");
    // a 22-vertex expander-ish instance: brute force enumerates 2^20
    // candidates, far more than a millisecond of work
    let mut text = String::from("p tscu 22 44\n");
    for i in 0..22 {
        text.push_str(&format!("e {} {}\n", i + 1, (i + 1) % 22 + 1));
        text.push_str(&format!("e {} {}\n", i + 1, (i + 5) % 22 + 1));
    }
    text.push_str("s 1\nt 12\n");
    let inst = write(&dir, "big.tscu", &text);
    let manifest = write(&dir, "suite.txt", &format!("{} brute\n", inst.display()));
    let out = bin()
        .arg("bench")
        .arg(&manifest)
        .args(["--timeout", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("TIMEOUT"), "{}", stdout(&out));
}
