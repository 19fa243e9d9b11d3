//! Exercise the C entry points the way a foreign caller would: through
//! raw pointers and NUL-terminated strings.

use std::ffi::{CStr, CString};
use std::ptr;

use drvkit_ffi::{
    drv_group_class_count, drv_group_class_of, drv_group_free, drv_group_from_name,
    drv_group_from_table, drv_group_identity, drv_group_inverse, drv_group_label, drv_group_op,
    drv_group_order, drv_last_error, drv_run_json, drv_string_free, drv_version, DrvGroup,
    DrvStatus,
};

fn c(s: &str) -> CString {
    CString::new(s).expect("no interior NUL")
}

unsafe fn last_error() -> String {
    CStr::from_ptr(drv_last_error())
        .to_string_lossy()
        .into_owned()
}

#[test]
fn version_is_a_static_string() {
    unsafe {
        let v = CStr::from_ptr(drv_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn group_handle_lifecycle() {
    unsafe {
        let mut handle: *mut DrvGroup = ptr::null_mut();
        let status = drv_group_from_name(c("Q8").as_ptr(), &mut handle);
        assert_eq!(status, DrvStatus::Ok);
        assert!(!handle.is_null());

        assert_eq!(drv_group_order(handle), 8);
        assert_eq!(drv_group_identity(handle), 0);
        // i * j = k in the canonical ordering 1,-1,i,-i,j,-j,k,-k
        assert_eq!(drv_group_op(handle, 2, 4), 6);
        assert_eq!(drv_group_inverse(handle, 2), 3);
        assert_eq!(drv_group_class_count(handle), 5);
        assert_eq!(drv_group_class_of(handle, 0), 0);
        assert_eq!(drv_group_class_of(handle, 3), drv_group_class_of(handle, 2));

        let label = drv_group_label(handle, 2);
        assert_eq!(CStr::from_ptr(label).to_str().unwrap(), "i");
        drv_string_free(label);

        // out-of-range queries degrade to sentinels, not crashes
        assert_eq!(drv_group_op(handle, 0, 99), usize::MAX);
        assert!(drv_group_label(handle, 99).is_null());

        drv_group_free(handle);
    }
}

#[test]
fn group_from_raw_table_is_validated() {
    unsafe {
        let table = [0usize, 1, 1, 0];
        let mut handle: *mut DrvGroup = ptr::null_mut();
        assert_eq!(
            drv_group_from_table(2, table.as_ptr(), &mut handle),
            DrvStatus::Ok
        );
        assert_eq!(drv_group_order(handle), 2);
        drv_group_free(handle);

        let bad = [0usize, 1, 1, 1];
        let mut handle: *mut DrvGroup = ptr::null_mut();
        assert_eq!(
            drv_group_from_table(2, bad.as_ptr(), &mut handle),
            DrvStatus::ValidationFailed
        );
        assert!(handle.is_null());
        assert!(last_error().contains("not a permutation"));
    }
}

#[test]
fn unknown_family_reports_an_error_message() {
    unsafe {
        let mut handle: *mut DrvGroup = ptr::null_mut();
        let status = drv_group_from_name(c("X7").as_ptr(), &mut handle);
        assert_eq!(status, DrvStatus::ValidationFailed);
        assert!(last_error().contains("X7"));
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut handle: *mut DrvGroup = ptr::null_mut();
        assert_eq!(
            drv_group_from_name(ptr::null(), &mut handle),
            DrvStatus::NullPointer
        );
        assert_eq!(
            drv_group_from_name(c("S3").as_ptr(), ptr::null_mut()),
            DrvStatus::NullPointer
        );
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(drv_run_json(ptr::null(), &mut out), DrvStatus::NullPointer);
    }
}

#[test]
fn run_json_dimension_request() {
    unsafe {
        let request = c(r#"{"command": "dimension", "group": "S3", "ring": "Q"}"#);
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(drv_run_json(request.as_ptr(), &mut out), DrvStatus::Ok);
        let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
        drv_string_free(out);
        let report: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(report["result"]["derivation_dimension"], 3);
        assert_eq!(report["result"]["inner_dimension"], 3);
    }
}

#[test]
fn run_json_witness_request_with_inline_derivation() {
    unsafe {
        let request = c(r#"{
                "command": "witness",
                "group": "C2",
                "ring": {"Fp": 2},
                "derivation": {"values": [
                    {"ring": {"Fp": 2}, "coeffs": ["0","0"]},
                    {"ring": {"Fp": 2}, "coeffs": ["1","1"]}
                ]}
            }"#);
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(drv_run_json(request.as_ptr(), &mut out), DrvStatus::Ok);
        let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
        drv_string_free(out);
        let report: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(report["result"]["status"], "not-inner");
    }
}

#[test]
fn run_json_validation_failures_set_the_error() {
    unsafe {
        let request = c(r#"{"command": "dimension", "group": "NOPE"}"#);
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            drv_run_json(request.as_ptr(), &mut out),
            DrvStatus::ValidationFailed
        );
        assert!(out.is_null());
        assert!(last_error().contains("NOPE"));

        let garbage = c("this is not json");
        assert_eq!(
            drv_run_json(garbage.as_ptr(), &mut out),
            DrvStatus::ValidationFailed
        );
        assert!(last_error().contains("malformed request"));
    }
}

#[test]
fn generated_header_matches_committed_copy() {
    let committed = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("drvkit.h");
    let header = std::fs::read_to_string(committed).expect("committed header exists");
    for symbol in [
        "drv_group_from_name",
        "drv_group_from_table",
        "drv_run_json",
        "drv_string_free",
        "drv_last_error",
        "DrvStatus",
        "DrvGroup",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
