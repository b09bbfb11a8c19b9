use std::process::Command;

use qrealize::cli::{parse_w, MatrixExport};
use qrealize::realization::{fock_matrix, FockSpace, RealizationMap, SubalgebraMode};
use qrealize::scalarfield::QScalar;
use qrealize::uqgl21::Generator;

fn qrealize(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qrealize"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn scalar(text: &str) -> QScalar {
    let x = parse_w(text).expect("entry parses");
    assert!(x.len() <= 1);
    let c = match x.terms().next() {
        Some((m, c)) => {
            assert!(m.is_identity());
            c.clone()
        }
        None => QScalar::zero(),
    };
    c
}

#[test]
fn normal_order_prints_canonical_form() {
    let (code, out, _) = qrealize(&["normal-order", "a * a+ - q^-1 * a+ * a"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t");
    let (code, out, _) = qrealize(&["normal-order", "b1 * b1+ + b1+ * b1"]);
    assert_eq!((code, out.trim()), (0, "1"));
}

#[test]
fn parse_errors_carry_a_column() {
    let (code, _, err) = qrealize(&["normal-order", "a * (t +"]);
    assert_eq!(code, 2);
    assert!(err.contains("column 9"), "{err}");
    let (code, _, err) = qrealize(&["normal-order", "E12 * a"]);
    assert_eq!(code, 2);
    assert!(err.contains("verify lemma1"), "{err}");
}

#[test]
fn verify_suites_pass() {
    for suite in [
        "relations-abstract",
        "relations-trivial",
        "relations-fermionic",
        "dyson",
    ] {
        let (code, out, err) = qrealize(&["verify", suite]);
        assert_eq!(code, 0, "{suite}: {out}{err}");
        let last = out.lines().last().expect("summary line");
        let (passed, total) = last
            .strip_suffix(" checks passed")
            .and_then(|s| s.split_once(" of "))
            .expect("summary format");
        assert_eq!(passed, total, "{last}");
        assert!(!out.contains("FAIL"));
    }
    let (code, out, _) = qrealize(&["verify", "fock", "--dim", "5", "--mode", "fermionic", "--numeric"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("q=3/2"));
}

#[test]
fn out_of_range_arguments_are_usage_errors() {
    assert_eq!(qrealize(&["verify", "induced", "--nmax", "1"]).0, 2);
    assert_eq!(qrealize(&["verify", "fock", "--dim", "33"]).0, 2);
    assert_eq!(qrealize(&["verify", "nonsense"]).0, 2);
    assert_eq!(qrealize(&["matrix", "E12", "--dim", "1", "--out", "/dev/null"]).0, 2);
    assert_eq!(qrealize(&["verify", "fock", "--q", "x"]).0, 2);
}

#[test]
fn matrix_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e12.json");
    let (code, out, err) = qrealize(&[
        "matrix",
        "E12",
        "--dim",
        "4",
        "--mode",
        "fermionic",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("16x16"), "{out}");
    let doc: MatrixExport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.dimension, 16);
    assert_eq!(doc.metadata.mode, "fermionic");
    assert_eq!(doc.basis.iter().filter(|b| b.boundary).count(), 4);

    let map = RealizationMap::new(SubalgebraMode::Fermionic).unwrap();
    let space = FockSpace::for_mode(SubalgebraMode::Fermionic, 4);
    let expected = fock_matrix(&map.image(Generator::E12), space, None).unwrap();
    let want: Vec<_> = expected.entries();
    assert_eq!(doc.entries.len(), want.len());
    for (e, (row, col, c)) in doc.entries.iter().zip(want) {
        assert_eq!((e.row, e.col), (row, col));
        assert_eq!(scalar(&e.value), c, "entry ({row}, {col})");
        // E12 raises the boson number by one.
        assert_eq!(doc.basis[e.row].n, doc.basis[e.col].n + 1);
    }
}

#[test]
fn numeric_export_has_floats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k1.json");
    let (code, _, err) = qrealize(&[
        "matrix",
        "K1",
        "--dim",
        "3",
        "--numeric",
        "--p1",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let doc: MatrixExport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let a = doc.metadata.assignment.as_ref().expect("assignment recorded");
    assert_eq!((a.q.as_str(), a.p1.as_str()), ("3/2", "7"));
    for e in &doc.entries {
        let exact: num::BigRational = e.value.parse().unwrap();
        let f = e.float.expect("float present");
        assert!((num::ToPrimitive::to_f64(&exact).unwrap() - f).abs() < 1e-12);
    }
}

#[test]
fn unwritable_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.json");
    let (code, _, err) = qrealize(&["matrix", "a", "--dim", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
}
