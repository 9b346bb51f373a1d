//! Golden files: the printed translation of every atom shape and mode, the
//! parity formulas, and a small benchmark report. Run with
//! `UPDATE_GOLDENS=1` to rewrite them.

use std::path::PathBuf;

use teamlogic_cli::{bench::run_bench, cmd_parity, cmd_translate, ParityForm};
use teamlogic::translate::TranslationMode;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens")
}

/// Compares `actual` with the golden file, or rewrites it when asked.
/// Returns a description of the mismatch.
fn compare(name: &str, actual: &str) -> Option<String> {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return None;
    }
    match std::fs::read_to_string(&path) {
        Ok(expected) if expected == actual => None,
        Ok(_) => Some(format!("{name}: output differs from golden file")),
        Err(e) => Some(format!("{name}: {e}")),
    }
}

fn args(prefix: &str, n: usize) -> String {
    (1..=n).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" ")
}

/// Atom texts with group sizes in 1..=2, and a file stem naming the shape.
fn atom_shapes() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for m in 1..=2 {
            for kw in ["dep", "perp", "ups"] {
                out.push((format!("{kw}({};{})", args("p", n), args("q", m)), format!("{kw}_{n}_{m}")));
            }
            for k in 1..=2 {
                out.push((
                    format!("perpc({};{};{})", args("p", n), args("r", k), args("q", m)),
                    format!("perpc_{n}_{k}_{m}"),
                ));
            }
        }
        for kw in ["inc", "excl"] {
            out.push((format!("{kw}({};{})", args("p", n), args("q", n)), format!("{kw}_{n}_{n}")));
        }
    }
    out
}

#[test]
fn translation_goldens() {
    let mut failures = Vec::new();
    let mut written = 0;
    for (atom, stem) in atom_shapes() {
        for mode in TranslationMode::ALL {
            let mut out = Vec::new();
            match cmd_translate(&atom, mode, false, false, &mut out) {
                Ok(_) => {
                    written += 1;
                    let name = format!("translate/{stem}.{}.txt", mode.name());
                    failures.extend(compare(&name, &String::from_utf8(out).unwrap()));
                }
                Err(e) => assert!(
                    e.to_string().contains("unsupported"),
                    "{atom} {}: unexpected error {e}",
                    mode.name()
                ),
            }
        }
    }
    assert!(written > 100, "only {written} translations");
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn parity_goldens() {
    let mut failures = Vec::new();
    for n in 1..=3 {
        for (form, name) in [(ParityForm::Poly, "poly"), (ParityForm::Even, "even"), (ParityForm::Odd, "odd")] {
            let mut out = Vec::new();
            cmd_parity(n, form, true, &mut out).unwrap();
            failures.extend(compare(&format!("parity/{name}_{n}.txt"), &String::from_utf8(out).unwrap()));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn bench_report_golden() {
    let report = run_bench(2, true).unwrap();
    let text = serde_json::to_string_pretty(&report).unwrap() + "\n";
    if let Some(f) = compare("bench_arity2.json", &text) {
        panic!("{f}");
    }
}
