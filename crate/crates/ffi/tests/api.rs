use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use gss_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { gss_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gss_last_error()) }.to_str().unwrap().to_owned()
}

fn parse(text: &str) -> *mut GssWord {
    let c = CString::new(text).unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { gss_word_parse(c.as_ptr(), &mut w) }, GssStatus::Ok, "{text}");
    w
}

#[test]
fn word_queries() {
    let w = parse("s2 r1 s1 r1");
    let (mut n, mut sing, mut reg) = (0, 0, 0);
    unsafe {
        assert_eq!(gss_word_counts(w, &mut n, &mut sing, &mut reg), GssStatus::Ok);
        assert_eq!((n, sing, reg), (5, 2, 2));
        let mut class = GssClass::Enoki;
        assert_eq!(gss_word_class(w, &mut class), GssStatus::Ok);
        assert_eq!(class, GssClass::Intermediate);

        let mut c = ptr::null_mut();
        assert_eq!(gss_word_canonical(w, &mut c), GssStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(gss_word_to_string(c, &mut s), GssStatus::Ok);
        assert_eq!(take_string(s), "s1 r1 s2 r1");
        gss_word_free(c);

        let mut k = ptr::null_mut();
        assert_eq!(gss_twisting_coefficient(w, &mut k), GssStatus::Ok);
        assert_eq!(take_string(k), "6");
        let mut idx = ptr::null_mut();
        assert_eq!(gss_lattice_index(w, &mut idx), GssStatus::Ok);
        assert_eq!(take_string(idx), "5");

        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(gss_verify_word(w, &mut passed, &mut report), GssStatus::Ok);
        assert!(passed);
        assert!(take_string(report).contains("\"delta\":6"));
        gss_word_free(w);
    }
}

#[test]
fn forms() {
    let w = parse("s1 r1");
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(gss_form_build(w, &mut f), GssStatus::Ok);
        let mut entries = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                let mut v = 0;
                assert_eq!(gss_form_entry(f, i, j, &mut v), GssStatus::Ok);
                entries.push(v);
            }
        }
        assert_eq!(entries, vec![1, -1, -1, 2]);
        let mut pd = false;
        assert_eq!(gss_form_is_positive_definite(f, &mut pd), GssStatus::Ok);
        assert!(pd);
        let mut det = ptr::null_mut();
        assert_eq!(gss_form_determinant(f, &mut det), GssStatus::Ok);
        assert_eq!(take_string(det), "1");
        let mut v = 0;
        assert_eq!(gss_form_entry(f, 2, 0, &mut v), GssStatus::OutOfRange);
        gss_form_free(f);
        gss_word_free(w);
    }
}

#[test]
fn polynomials() {
    unsafe {
        let marks = [0usize, 1];
        let mut p = ptr::null_mut();
        assert_eq!(gss_poly_new(2, marks.as_ptr(), marks.len(), &mut p), GssStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(gss_poly_to_string(p, &mut s), GssStatus::Ok);
        assert_eq!(take_string(s), "X0*X1 + X0 + X1");
        let values = [2i64, 1];
        let mut v = ptr::null_mut();
        assert_eq!(gss_poly_eval(p, values.as_ptr(), 2, &mut v), GssStatus::Ok);
        assert_eq!(take_string(v), "5");
        assert_eq!(gss_poly_eval(p, values.as_ptr(), 1, &mut v), GssStatus::InvalidArgument);
        gss_poly_free(p);

        let mut q = ptr::null_mut();
        assert_eq!(gss_poly_new(3, ptr::null(), 0, &mut q), GssStatus::Ok);
        let mut nv = 0;
        assert_eq!(gss_poly_nvars(q, &mut nv), GssStatus::Ok);
        assert_eq!(nv, 3);
        gss_poly_free(q);

        let bad = [4usize];
        assert_eq!(gss_poly_new(3, bad.as_ptr(), 1, &mut q), GssStatus::OutOfRange);
    }
}

#[test]
fn error_reporting() {
    unsafe {
        let mut w = ptr::null_mut();
        let text = CString::new("s1 x2").unwrap();
        assert_eq!(gss_word_parse(text.as_ptr(), &mut w), GssStatus::Parse);
        assert!(w.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(gss_word_parse(ptr::null(), &mut w), GssStatus::NullPointer);
        let invalid = [0xffu8 as c_char, 0];
        assert_eq!(gss_word_parse(invalid.as_ptr(), &mut w), GssStatus::InvalidUtf8);

        let enoki = parse("r3");
        let mut s = ptr::null_mut();
        assert_eq!(gss_lattice_index(enoki, &mut s), GssStatus::NotApplicable);
        assert_eq!(gss_twisting_coefficient(enoki, &mut s), GssStatus::NotApplicable);
        assert_eq!(gss_discriminant(enoki, &mut s), GssStatus::Ok);
        assert_eq!(take_string(s), "0");
        assert!(last_error().is_empty());
        assert_eq!(gss_discriminant(enoki, ptr::null_mut()), GssStatus::NullPointer);
        gss_word_free(enoki);

        let (mut words, mut failures) = (0, 0);
        assert_eq!(gss_verify_all(6, &mut words, &mut failures), GssStatus::Ok);
        assert!(words > 0);
        assert_eq!(failures, 0);
        assert_eq!(gss_verify_all(0, &mut words, &mut failures), GssStatus::InvalidArgument);
        gss_word_free(ptr::null_mut());
        gss_string_free(ptr::null_mut());
    }
}

/// Directory holding `libgss_ffi.a`: the profile directory above `deps/`.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("gss.h").exists());
    let lib = artifact_dir().join("libgss_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gss_smoke");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&out)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .expect("cc runs");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok 0.1.0"));
}
