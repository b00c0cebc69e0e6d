use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use apolar_ffi::*;
use serde_json::Value;

fn parse(src: &str, vars: Option<&str>, characteristic: u64) -> (ApolarStatus, *mut ApolarPolynomial) {
    let src = CString::new(src).unwrap();
    let vars = vars.map(|v| CString::new(v).unwrap());
    let mut out = ptr::null_mut();
    let status = unsafe {
        apolar_polynomial_parse(src.as_ptr(), vars.as_ref().map_or(ptr::null(), |v| v.as_ptr()), characteristic, &mut out)
    };
    (status, out)
}

fn take_json(p: *mut c_char) -> Value {
    let text = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { apolar_string_free(p) };
    serde_json::from_str(&text).unwrap()
}

fn last_error() -> String {
    let p = apolar_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn classify_through_the_c_interface() {
    let (status, f) = parse("X^3YZ^4TU^2V^6(X^2YZT^2U-V^7)", None, 0);
    assert_eq!(status, ApolarStatus::Ok);
    unsafe {
        assert_eq!(apolar_polynomial_nvars(f), 6);
        let mut d = 0;
        assert_eq!(apolar_polynomial_degree(f, &mut d), ApolarStatus::Ok);
        assert_eq!(d, 24);
        let mut out = ptr::null_mut();
        assert_eq!(apolar_classify_json(f, true, &mut out), ApolarStatus::Ok);
        let v = take_json(out);
        assert_eq!(v["is_ci"], true);
        assert_eq!(v["verification"]["agrees"], true);
        let mut ci = false;
        assert_eq!(apolar_is_complete_intersection(f, &mut ci), ApolarStatus::Ok);
        assert!(ci);
        apolar_polynomial_free(f);
    }
}

#[test]
fn hilbert_and_lefschetz() {
    let (status, f) = parse("X1X2X3", None, 2);
    assert_eq!(status, ApolarStatus::Ok);
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(apolar_hilbert_json(f, &mut out), ApolarStatus::Ok);
        assert_eq!(take_json(out)["h_vector"], serde_json::json!([1, 3, 3, 1]));
        assert_eq!(apolar_lefschetz_json(f, ApolarMode::Weak, 0, 1, &mut out), ApolarStatus::Ok);
        let v = take_json(out);
        assert_eq!(v["wlp"], false);
        assert_eq!(v["certified"], true);
        apolar_polynomial_free(f);
    }
    let (_, f) = parse("X^2Y^2", Some("X,Y"), 0);
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(apolar_lefschetz_json(f, ApolarMode::Strong, 4, 7, &mut out), ApolarStatus::Ok);
        assert_eq!(take_json(out)["slp"], true);
        apolar_polynomial_free(f);
    }
}

#[test]
fn error_codes_and_messages() {
    assert_eq!(parse("X^2 +", None, 0).0, ApolarStatus::ParseError);
    assert!(!last_error().is_empty());
    assert_eq!(parse("X^2 + Y", None, 0).0, ApolarStatus::NotHomogeneous);
    assert_eq!(parse("X^2", None, 4).0, ApolarStatus::InvalidField);
    assert!(last_error().contains('4'));
    assert_eq!(parse("X*Z", Some("X,Y"), 0).0, ApolarStatus::ParseError);

    let (status, f) = parse("X^2Y", None, 0);
    assert_eq!(status, ApolarStatus::Ok);
    assert!(apolar_last_error().is_null());
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(apolar_classify_json(f, false, &mut out), ApolarStatus::NotBinomial);
        assert!(out.is_null());
        assert_eq!(apolar_classify_json(ptr::null(), false, &mut out), ApolarStatus::NullPointer);
        assert_eq!(apolar_hilbert_json(f, ptr::null_mut()), ApolarStatus::NullPointer);
        assert_eq!(apolar_polynomial_parse(ptr::null(), ptr::null(), 0, &mut ptr::null_mut()), ApolarStatus::NullPointer);
        let bad = [0xffu8, 0];
        let mut h = ptr::null_mut();
        assert_eq!(apolar_polynomial_parse(bad.as_ptr().cast(), ptr::null(), 0, &mut h), ApolarStatus::InvalidUtf8);
        apolar_polynomial_free(f);
        apolar_polynomial_free(ptr::null_mut());
        apolar_string_free(ptr::null_mut());
    }
    let version = unsafe { CStr::from_ptr(apolar_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

fn header_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(header_dir().join("apolar.h")).unwrap();
    for name in [
        "typedef struct ApolarPolynomial ApolarPolynomial;",
        "APOLAR_STATUS_NOT_ARTINIAN = 7",
        "apolar_polynomial_parse(",
        "apolar_polynomial_free(",
        "apolar_classify_json(",
        "apolar_hilbert_json(",
        "apolar_lefschetz_json(",
        "apolar_is_complete_intersection(",
        "apolar_string_free(",
        "apolar_last_error(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// Builds and runs the C smoke program against the static library when a C
/// compiler and the archive are available.
#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let source = manifest.join("tests/c/smoke.c");
    let dir = tempfile::tempdir().unwrap();
    let syntax = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header_dir())
        .arg(&source)
        .status()
        .unwrap();
    assert!(syntax.success(), "header does not compile as C99");

    let Some(archive) = static_library() else {
        eprintln!("static library not built; only the header was checked");
        return;
    };
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg("-I")
        .arg(header_dir())
        .arg(&source)
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "linking against {} failed", archive.display());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke program exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

fn which_cc() -> Result<PathBuf, ()> {
    let cc = std::env::var_os("CC").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("cc"));
    Command::new(&cc).arg("--version").output().map(|_| cc).map_err(|_| ())
}

fn static_library() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let archive = profile_dir.join("libapolar_ffi.a");
    archive.exists().then_some(archive)
}
