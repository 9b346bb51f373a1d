//! End-to-end runs of the `teamlogic` binary: outputs and exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_teamlogic"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eval_verdicts() {
    let dir = TempDir::new().unwrap();
    let empty = write(dir.path(), "empty.txt", "domain: p\n");
    let pair = write(dir.path(), "pair.txt", "domain: p,q\n00\n01\n");
    let r = run(&["eval", "bot", s(&empty)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "SAT\n"));
    let r = run(&["eval", "dep(p;q)", s(&pair)]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "UNSAT\n"));
    let r = run(&["eval", "NE", s(&empty)]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "UNSAT\n"));
}

#[test]
fn eval_reports_each_team_of_a_json_file() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "teams.json",
        r#"{"domain":["p","q"],"teams":[["00","01"],["00","11"],[]]}"#,
    );
    let r = run(&["eval", "dep(p;q)", s(&f)]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "UNSAT\nSAT\nSAT\n"));
    let r = run(&["eval", "p \\/ -p", s(&f)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "SAT\nSAT\nSAT\n"));
}

#[test]
fn errors_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let team = write(dir.path(), "t.txt", "domain: p\n1\n");
    let bad = write(dir.path(), "bad.txt", "domain: p\n10\n");
    let r = run(&["eval", "p /\\", s(&team)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("syntax error"), "{}", r.stderr);
    let r = run(&["eval", "q", s(&team)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not in the domain"), "{}", r.stderr);
    let r = run(&["eval", "p", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["translate", "dep(p;q)", "--mode", "FAST"]).code, 2);
    assert_eq!(run(&["translate", "inc(p;q)", "--mode", "POLYNEG_STRICT"]).code, 2);
    let r = run(&["equiv", "p1 /\\ p2 /\\ p3", "p4 /\\ p5", "--extra", "0"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("capacity"), "{}", r.stderr);
}

#[test]
fn equivalence() {
    let r = run(&["equiv", "~p \\./ ~p \\./ ~p", "bot /\\ ~bot", "--extra", "1"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(&["equiv", "~p \\./ ~p \\./ ~p", "bot /\\ ~bot", "--extra", "2"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("DIFFERENT"), "{}", r.stdout);
    let r = run(&["equiv", "NE \\./ NE", "NE \\/ NE"]);
    assert_eq!(r.code, 1);
    let r = run(&["equiv", "dep(p;q)", "(p (v) -p) \\/ (q (v) -q)"]);
    assert_eq!(r.code, 1);
}

#[test]
fn translate_dependence_row() {
    let r = run(&["translate", "dep(p;q)", "--mode", "EXP_LAX", "--stats", "--check"]);
    assert_eq!(r.code, 0);
    let lines: Vec<_> = r.stdout.lines().collect();
    assert_eq!(
        lines[0],
        "((((p /\\ bot) \\/ (-p /\\ top)) /\\ (q (v) -q)) \\/ (((p /\\ top) \\/ (-p /\\ bot)) /\\ (q (v) -q)))"
    );
    assert_eq!(lines[1], "length 49");
    assert!(lines[3].starts_with("agrees with the atom"));
    let r = run(&["translate", "excl(p;q)", "--mode", "polyneg-lax", "--check"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("agrees with the negated atom"));
}

fn parity_files(dir: &Path) -> (PathBuf, PathBuf) {
    let even = write(dir, "even.txt", "domain: p\n--\n0\n1\n");
    let odd = write(dir, "odd.txt", "domain: p\n0\n--\n1\n");
    (even, odd)
}

#[test]
fn minwidth_even_parity() {
    let dir = TempDir::new().unwrap();
    let (even, odd) = parity_files(dir.path());
    let r = run(&["minwidth", s(&even), s(&odd)]);
    assert_eq!(r.code, 0);
    let width: usize = r.stdout.lines().next().unwrap().strip_prefix("width ").unwrap().parse().unwrap();
    assert!(width >= 2);
    assert_eq!(width, 3);
    let r = run(&["minwidth", s(&even), s(&odd), "--max-width", "2"]);
    assert_eq!((r.code, r.stdout.trim_end()), (1, "width >= 3 (no separating formula up to width 2)"));
    let r = run(&["density", s(&even), s(&odd)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n"));
}

#[test]
fn game_dump_replays() {
    let dir = TempDir::new().unwrap();
    let (even, odd) = parity_files(dir.path());
    let win = dir.path().join("win.json");
    let r = run(&["game", s(&even), s(&odd), "--k", "3", "--dump-strategy", s(&win)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("S wins"), "{}", r.stdout);
    let text = std::fs::read_to_string(&win).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["strategy"]["children"].as_array().unwrap().len(), 2);
    let r = run(&["replay", s(&win)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.starts_with("S wins: confirmed"));

    let lose = dir.path().join("lose.json");
    let r = run(&["game", s(&even), s(&odd), "--k", "1", "--dump-strategy", s(&lose)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("density 2 exceeds resource 1"), "{}", r.stdout);
    let r = run(&["replay", s(&lose)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("D wins: confirmed"));

    let shared = write(dir.path(), "shared.txt", "domain: p\n1\n");
    let r = run(&["game", s(&shared), s(&shared), "--k", "4"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "D wins\nshared team {1}\n"));
}

#[test]
fn game_rejects_mixed_domains() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", "domain: p\n1\n");
    let b = write(dir.path(), "b.txt", "domain: q\n1\n");
    let r = run(&["game", s(&a), s(&b), "--k", "2"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("different domains"));
}

#[test]
fn dimension_and_certificates() {
    let r = run(&["dim", "dep(p1 p2;q)", "--mode", "EXP_LAX", "--json"]);
    assert_eq!(r.code, 0);
    let json: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(json["dim"], 16);
    assert_eq!(json["maximalTeams"], 16);
    assert_eq!(json["withinBound"], true);
    let r = run(&["certificate", "excl", "2"]);
    let json: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!((json["maxTeams"].as_u64(), json["impliedMinLength"].as_u64()), (Some(14), Some(4)));
    assert_eq!(run(&["certificate", "dep", "7"]).code, 3);
}

#[test]
fn sampling_is_seeded() {
    let a = run(&["sample-relax", "--count", "20", "--seed", "7"]);
    let b = run(&["sample-relax", "--count", "20", "--seed", "7"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("seed 7: 20/20"), "{}", a.stdout);
    let d = run(&["sample-relax", "--count", "20"]);
    assert_eq!(d.stdout, run(&["sample-relax", "--count", "20"]).stdout);
}

#[test]
fn bench_writes_versioned_report() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let r = run(&["bench", "--max-arity", "2", "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(json["schema"], 1);
    let rows = json["rows"].as_array().unwrap();
    let inclusion_exp = rows
        .iter()
        .find(|r| r["property"] == "Inclusion" && r["connectives"] == "∧,⊽,∨" && r["result"] == "exp")
        .expect("inclusion exp row");
    assert_eq!(inclusion_exp["boundHolds"], true);
    assert_eq!(inclusion_exp["equivalenceChecked"], true);
    for row in rows {
        for key in ["property", "atomArity", "mode", "formulaLength", "formulaWidth", "equivalenceChecked", "boundClaim", "boundHolds"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        assert_eq!(row["equivalenceChecked"], row["equivalent"].is_boolean());
    }
    let again = dir.path().join("again.json");
    run(&["bench", "--max-arity", "2", "--out", s(&again)]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
    let r = run(&["bench", "--max-arity", "2", "--no-check"]);
    assert!(!r.stdout.contains("eq=yes"));
}
