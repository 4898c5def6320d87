use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use elastic_matroid_ffi::*;

fn family(spec: &str) -> *mut EmMatroid {
    let spec = CString::new(spec).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { em_matroid_from_family(spec.as_ptr(), &mut m) }, EmStatus::Ok);
    m
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(em_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn l8_through_handles() {
    let m = family("L8");
    let n = family("U(2,4)");
    unsafe {
        assert_eq!((em_matroid_size(m), em_matroid_rank(m)), (8, 3));
        let mut conn = false;
        assert_eq!(em_is_3_connected(m, &mut conn), EmStatus::Ok);
        assert!(conn);
        let mut elastic = 0;
        assert_eq!(em_elastic_elements(m, &mut elastic), EmStatus::Ok);
        assert_eq!(elastic, 0b1110_1111);
        let mut n_elastic = 0;
        assert_eq!(em_n_elastic_elements(m, n, &mut n_elastic), EmStatus::Ok);
        assert_eq!(n_elastic & 0b1111, 0b1110);
        em_matroid_free(m);
        em_matroid_free(n);
    }
}

#[test]
fn lex01_and_errors() {
    let line = CString::new("4 2 111111").unwrap();
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(em_matroid_from_lex01(line.as_ptr(), &mut m), EmStatus::Ok);
        assert_eq!(em_matroid_size(m), 4);
        em_matroid_free(m);

        let bad = CString::new("4 2 100001").unwrap();
        assert_eq!(em_matroid_from_lex01(bad.as_ptr(), &mut m), EmStatus::Parse);
        assert!(m.is_null());
        assert!(last_error().contains("exchange"));

        let garbage = CString::new("4 2 11x111").unwrap();
        assert_eq!(em_matroid_from_lex01(garbage.as_ptr(), &mut m), EmStatus::Parse);
        assert_eq!(em_matroid_from_lex01(ptr::null(), &mut m), EmStatus::NullPointer);
        assert_eq!(em_matroid_from_family(line.as_ptr(), ptr::null_mut()), EmStatus::NullPointer);
        let mut out = 0;
        assert_eq!(em_elastic_elements(ptr::null(), &mut out), EmStatus::NullPointer);
        assert_eq!(em_matroid_size(ptr::null()), 0);
        em_matroid_free(ptr::null_mut());
        em_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_returns_json() {
    let check = CString::new("LEM-BIXBY").unwrap();
    let catalog = CString::new("gen:gf2:6").unwrap();
    let mut json = ptr::null_mut();
    let mut passed = false;
    unsafe {
        assert_eq!(em_verify(check.as_ptr(), catalog.as_ptr(), 0, &mut json, &mut passed), EmStatus::Ok);
        assert!(passed);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        em_string_free(json);
        let reports: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(reports[0]["check_id"], "LEM-BIXBY");

        let unknown = CString::new("LEM-NONE").unwrap();
        assert_eq!(em_verify(unknown.as_ptr(), catalog.as_ptr(), 0, &mut json, &mut passed), EmStatus::UnknownCheck);
        assert!(last_error().contains("LEM-NONE"));
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("probe.c");
    std::fs::write(
        &source,
        "#include \"elastic_matroid.h\"\nint probe(void) { EmMatroid *m = 0; return em_matroid_from_family(\"L8\", &m) == EM_STATUS_OK; }\n",
    )
    .unwrap();
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include])
        .arg(&source)
        .status()
        .expect("C compiler available");
    assert!(status.success());
}
