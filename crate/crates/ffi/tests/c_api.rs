use std::ffi::{CStr, CString};
use std::ptr;

use kinterchange::ErrorCode;
use kinterchange_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ki_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn take(s: *mut std::ffi::c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { ki_string_free(s) };
    text
}

fn table1() -> *mut KiObjective {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ki_objective_table1(&mut h) }, KiStatus::Ok);
    assert!(!h.is_null());
    h
}

#[test]
fn status_codes_match_library() {
    let pairs = [
        (ErrorCode::InvalidK, KiStatus::InvalidK),
        (ErrorCode::CapExceeded, KiStatus::CapExceeded),
        (ErrorCode::IoError, KiStatus::IoError),
        (ErrorCode::ParseError, KiStatus::ParseError),
    ];
    for (lib, ffi) in pairs {
        assert_eq!(lib as i32, ffi as i32);
        let name = unsafe { CStr::from_ptr(ki_status_name(ffi as i32)) };
        assert_eq!(name.to_str().unwrap(), lib.name());
    }
    for code in 0..=17 {
        let name = unsafe { CStr::from_ptr(ki_status_name(code)) };
        assert_ne!(name.to_str().unwrap(), "Unknown");
    }
}

#[test]
fn evaluate_reference_table() {
    let h = table1();
    let (mut num, mut den) = (0i64, 0i64);
    for (perm, want) in [([4u8, 3, 2, 1], 3), ([2, 4, 1, 3], 2), ([1, 2, 3, 4], 0)] {
        assert_eq!(
            unsafe { ki_evaluate(h, perm.as_ptr(), 4, &mut num, &mut den) },
            KiStatus::Ok
        );
        assert_eq!((num, den), (want, 1));
    }
    let bad = [1u8, 1, 2, 3];
    assert_eq!(
        unsafe { ki_evaluate(h, bad.as_ptr(), 4, &mut num, &mut den) },
        KiStatus::DuplicateElement
    );
    assert!(last_error().contains("DuplicateElement"));
    let short = [1u8, 2, 3];
    assert_eq!(
        unsafe { ki_evaluate(h, short.as_ptr(), 3, &mut num, &mut den) },
        KiStatus::ArityMismatch
    );
    unsafe { ki_objective_free(h) };
}

#[test]
fn neighborhood_query_then_fill() {
    let s = [4u8, 3, 1, 2];
    let mut count = 0usize;
    let st = unsafe { ki_neighborhood(s.as_ptr(), 4, 2, ptr::null_mut(), 0, &mut count) };
    assert_eq!(st, KiStatus::BufferTooSmall);
    assert_eq!(count, 3);
    let mut buf = vec![0u8; count * 4];
    let st = unsafe { ki_neighborhood(s.as_ptr(), 4, 2, buf.as_mut_ptr(), count, &mut count) };
    assert_eq!(st, KiStatus::Ok);
    assert_eq!(buf, vec![3, 4, 1, 2, 4, 1, 3, 2, 4, 3, 2, 1]);
    let st = unsafe { ki_neighborhood(s.as_ptr(), 4, 7, ptr::null_mut(), 0, &mut count) };
    assert_eq!(st, KiStatus::InvalidK);
}

#[test]
fn search_distance_and_analysis() {
    let target = [1u8, 2, 3, 4];
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { ki_objective_search_distance(4, 3, target.as_ptr(), &mut h) },
        KiStatus::Ok
    );
    let mode = CString::new("strict").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ki_analyze_json(h, 2, mode.as_ptr(), &mut out) }, KiStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(report["reach_count"], 5);
    assert_eq!(report["level_count"], 7);
    let bad = CString::new("sideways").unwrap();
    assert_eq!(
        unsafe { ki_analyze_json(h, 2, bad.as_ptr(), &mut out) },
        KiStatus::InvalidConfig
    );
    unsafe { ki_objective_free(h) };
}

#[test]
fn search_from_json_config() {
    let h = table1();
    let cfg = CString::new(r#"{"kind":"F","schedule":{"fixed":{"k":3}},"starts":{"explicit":["4312"]}}"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ki_search_json(h, cfg.as_ptr(), &mut out) }, KiStatus::Ok);
    let rec: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(rec["outcome"]["status"], "optimum");
    assert_eq!(rec["trajectories"][0]["forward"], 2);
    let cfg = CString::new(r#"{"kind":"F","schedule":{"fixed":{"k":9}},"starts":{"random":{"count":1}}}"#).unwrap();
    assert_eq!(unsafe { ki_search_json(h, cfg.as_ptr(), &mut out) }, KiStatus::InvalidK);
    unsafe { ki_objective_free(h) };
}

#[test]
fn objective_documents() {
    let doc = CString::new(r#"{"kind":"inversion","n":5}"#).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ki_objective_from_json(doc.as_ptr(), &mut h) }, KiStatus::Ok);
    let s = [5u8, 4, 3, 2, 1];
    let (mut num, mut den) = (0, 0);
    assert_eq!(
        unsafe { ki_evaluate(h, s.as_ptr(), 5, &mut num, &mut den) },
        KiStatus::Ok
    );
    assert_eq!(num, 10);
    unsafe { ki_objective_free(h) };

    let bad = CString::new(r#"{"kind":"table","n":4,"values":{}}"#).unwrap();
    assert_eq!(
        unsafe { ki_objective_from_json(bad.as_ptr(), &mut h) },
        KiStatus::IncompleteTable
    );
    let missing = CString::new("/nonexistent/objective.json").unwrap();
    assert_eq!(
        unsafe { ki_objective_load(missing.as_ptr(), &mut h) },
        KiStatus::IoError
    );
}

#[test]
fn null_pointers_are_reported() {
    let mut num = 0;
    let s = [1u8, 2];
    assert_eq!(
        unsafe { ki_evaluate(ptr::null(), s.as_ptr(), 2, &mut num, &mut num) },
        KiStatus::NullPointer
    );
    assert_eq!(unsafe { ki_objective_table1(ptr::null_mut()) }, KiStatus::NullPointer);
    unsafe {
        ki_objective_free(ptr::null_mut());
        ki_string_free(ptr::null_mut());
    }
}

#[test]
fn verification_suite() {
    let mut ok = 0;
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ki_verify(&mut ok, &mut out) }, KiStatus::Ok);
    assert_eq!(ok, 1);
    let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert!(report["checks"].as_array().unwrap().len() >= 7);
    assert_eq!(unsafe { ki_verify(&mut ok, ptr::null_mut()) }, KiStatus::Ok);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(ki_version()) };
    assert_eq!(v.to_str().unwrap(), kinterchange::VERSION);
}
