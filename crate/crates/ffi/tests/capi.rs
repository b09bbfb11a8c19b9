use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qrealize_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    qr_string_free(s);
    out
}

unsafe fn parse(s: &str) -> *mut QrElement {
    let mut x = ptr::null_mut();
    assert_eq!(qr_element_parse(cstr(s).as_ptr(), &mut x), QrStatus::Ok);
    x
}

unsafe fn last_error() -> String {
    let p = qr_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn fermion_anticommutator_is_one() {
    unsafe {
        let b = parse("b1");
        let bd = parse("b1+");
        let (mut x, mut y, mut s) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(qr_element_mul(b, bd, &mut x), QrStatus::Ok);
        assert_eq!(qr_element_mul(bd, b, &mut y), QrStatus::Ok);
        assert_eq!(qr_element_add(x, y, &mut s), QrStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(qr_element_render(s, &mut text), QrStatus::Ok);
        assert_eq!(take(text), "1");
        let mut d = ptr::null_mut();
        assert_eq!(qr_element_sub(s, s, &mut d), QrStatus::Ok);
        let mut zero = false;
        assert_eq!(qr_element_is_zero(d, &mut zero), QrStatus::Ok);
        assert!(zero);
        for h in [b, bd, x, y, s, d] {
            qr_element_free(h);
        }
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut x = ptr::null_mut();
        assert_eq!(qr_element_parse(cstr("a * * t").as_ptr(), &mut x), QrStatus::ParseError);
        assert!(x.is_null());
        assert!(last_error().contains("column 5"));
        assert_eq!(qr_element_parse(ptr::null(), &mut x), QrStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(qr_element_parse(bad.as_ptr().cast(), &mut x), QrStatus::InvalidUtf8);
        let mut z = false;
        assert_eq!(qr_element_is_zero(ptr::null(), &mut z), QrStatus::NullPointer);
        let ok = parse("t");
        assert!(qr_last_error().is_null());
        qr_element_free(ok);
        qr_element_free(ptr::null_mut());
        qr_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_suites() {
    unsafe {
        let mut passed = false;
        let mut report = ptr::null_mut();
        let opts = QrVerifyOptions {
            nmax: 3,
            dim: 0,
            numeric: false,
        };
        assert_eq!(
            qr_verify(cstr("lemma1").as_ptr(), &opts, &mut passed, &mut report),
            QrStatus::Ok
        );
        assert!(passed);
        assert!(take(report).ends_with("36 of 36 checks passed\n"));
        assert_eq!(
            qr_verify(cstr("dyson").as_ptr(), ptr::null(), &mut passed, &mut report),
            QrStatus::Ok
        );
        assert!(passed);
        qr_string_free(report);
        assert_eq!(
            qr_verify(cstr("everything").as_ptr(), ptr::null(), &mut passed, &mut report),
            QrStatus::InvalidArgument
        );
        assert!(report.is_null());
        let opts = QrVerifyOptions {
            nmax: 40,
            dim: 0,
            numeric: false,
        };
        assert_eq!(
            qr_verify(cstr("induced").as_ptr(), &opts, &mut passed, &mut report),
            QrStatus::InvalidArgument
        );
        assert!(last_error().contains("nmax"));
    }
}

#[test]
fn matrix_json_export() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            qr_matrix_json(cstr("E21").as_ptr(), 4, cstr("trivial").as_ptr(), true, &mut out),
            QrStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["dimension"], 8);
        assert_eq!(v["metadata"]["assignment"]["q"], "3/2");
        assert!(v["entries"].as_array().unwrap().iter().all(|e| e["float"].is_number()));
        assert_eq!(
            qr_matrix_json(cstr("E21").as_ptr(), 4, cstr("bosonic").as_ptr(), false, &mut out),
            QrStatus::InvalidArgument
        );
        assert_eq!(
            qr_matrix_json(cstr("E21").as_ptr(), 99, cstr("trivial").as_ptr(), false, &mut out),
            QrStatus::InvalidArgument
        );
        assert!(out.is_null());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(qr_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "qrealize.h"

int main(void) {
    QrElement *a = NULL, *ad = NULL, *x = NULL;
    if (qr_element_parse("a", &a) != QR_STATUS_OK) return 1;
    if (qr_element_parse("a+", &ad) != QR_STATUS_OK) return 2;
    if (qr_element_mul(a, ad, &x) != QR_STATUS_OK) return 3;
    char *text = NULL;
    if (qr_element_render(x, &text) != QR_STATUS_OK) return 4;
    printf("%s\n", text);
    qr_string_free(text);
    qr_element_free(a);
    qr_element_free(ad);
    qr_element_free(x);
    QrElement *bad = NULL;
    if (qr_element_parse("a +* t", &bad) != QR_STATUS_PARSE_ERROR) return 5;
    printf("%s\n", qr_last_error());
    bool passed = false;
    char *report = NULL;
    QrVerifyOptions opts = {0, 0, false};
    if (qr_verify("relations-trivial", &opts, &passed, &report) != QR_STATUS_OK || !passed) return 6;
    qr_string_free(report);
    return 0;
}
"#;

#[test]
fn header_compiles_and_links_from_c() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include").join("qrealize.h");
    assert!(header.exists(), "generated header missing");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "qr_element_parse",
        "qr_element_mul",
        "qr_verify",
        "qr_matrix_json",
        "qr_last_error",
        "typedef struct QrElement QrElement",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let exe = std::env::current_exe().unwrap();
    let target = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = target.join("libqrealize_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let bin = dir.path().join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("(-t^-1 + q^2*t)/(q^2 - 1)"));
    assert!(lines.next().unwrap().contains("column"));
}
