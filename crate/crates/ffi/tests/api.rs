use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ncgrass_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    ncg_string_free(s);
    out
}

unsafe fn last_error() -> Option<String> {
    let e = ncg_last_error();
    (!e.is_null()).then(|| take(e))
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(ncg_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn quasidet_of_diagonal_matrix() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(ncg_quat_matrix_new(2, 2, &mut m), NcgStatus::Ok);
        assert_eq!(ncg_quat_matrix_set(m, 1, 1, [0, 1, 0, 0].as_ptr(), 1), NcgStatus::Ok);
        assert_eq!(ncg_quat_matrix_set(m, 2, 2, [3, 0, 0, 0].as_ptr(), 2), NcgStatus::Ok);
        for method in [NcgMethod::Recursive, NcgMethod::Border] {
            let mut s = ptr::null_mut();
            assert_eq!(ncg_quasidet(m, 1, 1, method, &mut s), NcgStatus::Ok);
            let mut e = ptr::null_mut();
            assert_eq!(ncg_quat_matrix_get(m, 1, 1, &mut e), NcgStatus::Ok);
            assert_eq!(take(s), take(e));
        }
        assert!(last_error().is_none());
        ncg_quat_matrix_free(m);
    }
}

#[test]
fn methods_agree_on_random_matrix() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(ncg_quat_matrix_random(3, 3, 7, &mut m), NcgStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ncg_quasidet(m, 2, 3, NcgMethod::Recursive, &mut a), NcgStatus::Ok);
        assert_eq!(ncg_quasidet(m, 2, 3, NcgMethod::Border, &mut b), NcgStatus::Ok);
        assert_eq!(take(a), take(b));
        ncg_quat_matrix_free(m);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(ncg_quat_matrix_new(0, 2, &mut m), NcgStatus::InvalidArgument);
        assert!(last_error().is_some());
        assert_eq!(ncg_quat_matrix_new(2, 2, ptr::null_mut()), NcgStatus::NullPointer);

        assert_eq!(ncg_quat_matrix_new(2, 2, &mut m), NcgStatus::Ok);
        assert_eq!(ncg_quat_matrix_set(m, 3, 1, [1, 0, 0, 0].as_ptr(), 1), NcgStatus::InvalidArgument);
        assert_eq!(ncg_quat_matrix_set(m, 1, 1, [1, 0, 0, 0].as_ptr(), 0), NcgStatus::InvalidArgument);
        // zero matrix: the 1x1 minor left after deleting row/col 1 is zero
        let mut s = ptr::null_mut();
        let st = ncg_quasidet(m, 1, 1, NcgMethod::Recursive, &mut s);
        assert!(matches!(st, NcgStatus::Undefined | NcgStatus::Singular), "{st:?}");
        assert!(last_error().is_some());
        ncg_quat_matrix_free(m);
        ncg_quat_matrix_free(ptr::null_mut());
        ncg_string_free(ptr::null_mut());
        ncg_report_free(ptr::null_mut());
    }
}

#[test]
fn qp_relation_holds() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(ncg_quat_matrix_random(4, 2, 11, &mut m), NcgStatus::Ok);
        let (l, ms) = ([2usize, 3], [4usize]);
        let mut one = false;
        let st = ncg_qp_relation(m, 1, l.as_ptr(), l.len(), ms.as_ptr(), ms.len(), &mut one);
        assert_eq!(st, NcgStatus::Ok, "{:?}", last_error());
        assert!(one);
        ncg_quat_matrix_free(m);
    }
}

#[test]
fn qdet_two_by_two() {
    unsafe {
        let (r, c) = ([1usize, 2], [1usize, 2]);
        let mut s = ptr::null_mut();
        assert_eq!(ncg_qdet(2, r.as_ptr(), c.as_ptr(), 2, &mut s), NcgStatus::Ok);
        let text = take(s);
        assert!(text.contains("q"), "{text}");
        assert_eq!(ncg_qdet(9, r.as_ptr(), c.as_ptr(), 2, &mut s), NcgStatus::InvalidArgument);
    }
}

#[test]
fn run_reports_json() {
    unsafe {
        let cfg = CString::new("suite = \"quasidet\"\nseed = 3\ntrials = 1\nmax_n = 2\n").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(ncg_run(cfg.as_ptr(), &mut r), NcgStatus::Ok);
        assert_eq!(ncg_report_failures(r), 0);
        assert!(ncg_report_total(r) > 0);
        let mut s = ptr::null_mut();
        assert_eq!(ncg_report_json(r, &mut s), NcgStatus::Ok);
        let json = take(s);
        assert!(json.contains("\"suite\": \"quasidet\""), "{json}");
        ncg_report_free(r);

        let bad = CString::new("suite = \"nope\"").unwrap();
        assert_eq!(ncg_run(bad.as_ptr(), &mut r), NcgStatus::Config);
        let unknown = CString::new("colour = 1").unwrap();
        assert_eq!(ncg_run(unknown.as_ptr(), &mut r), NcgStatus::Config);
        assert!(last_error().is_some());
    }
}

#[test]
fn header_declares_api() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let h = std::fs::read_to_string(dir.join("include/ncgrass.h")).unwrap();
    for name in [
        "ncg_version", "ncg_last_error", "ncg_string_free", "ncg_quat_matrix_new", "ncg_quat_matrix_random",
        "ncg_quat_matrix_set", "ncg_quat_matrix_get", "ncg_quat_matrix_free", "ncg_quasidet", "ncg_qp_relation",
        "ncg_qdet", "ncg_run", "ncg_report_json", "ncg_report_failures", "ncg_report_total", "ncg_report_free",
        "typedef struct NcgQuatMatrix NcgQuatMatrix", "NCG_STATUS_UNDEFINED = 3",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

const SMOKE: &str = r#"
#include <stdio.h>
#include <string.h>
#include "ncgrass.h"

int main(void) {
    NcgQuatMatrix *m = NULL;
    if (ncg_quat_matrix_random(3, 3, 5, &m) != NCG_STATUS_OK) return 1;
    char *a = NULL, *b = NULL;
    if (ncg_quasidet(m, 1, 1, NCG_METHOD_RECURSIVE, &a) != NCG_STATUS_OK) return 2;
    if (ncg_quasidet(m, 1, 1, NCG_METHOD_BORDER, &b) != NCG_STATUS_OK) return 3;
    int same = strcmp(a, b) == 0;
    printf("%s\n", a);
    ncg_string_free(a);
    ncg_string_free(b);
    ncg_quat_matrix_free(m);
    if (ncg_quat_matrix_new(0, 1, &m) != NCG_STATUS_INVALID_ARGUMENT) return 4;
    char *err = ncg_last_error();
    if (err == NULL) return 5;
    ncg_string_free(err);
    return same ? 0 : 6;
}
"#;

/// Compiles and runs a C program against the static library when a C
/// compiler is on PATH.
#[test]
fn c_program_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok()) else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // test binary lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libncgrass_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built at {}, skipping", lib.display());
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("smoke.c");
    let bin = tmp.path().join("smoke");
    std::fs::write(&src, SMOKE).unwrap();
    let status = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "smoke exited with {:?}", out.status);
    assert!(!out.stdout.is_empty());
}
