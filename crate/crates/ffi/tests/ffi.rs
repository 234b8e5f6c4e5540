//! Exercises the C ABI through the exported functions, the way a
//! foreign binding would.

use equilag_ffi::{
    eqlg_input_free, eqlg_input_parse, eqlg_last_error, eqlg_run_cover,
    eqlg_run_find_lagrangian, eqlg_run_verify, eqlg_run_witt_equiv, eqlg_string_free,
    eqlg_version, EqlgInput, EqlgStatus,
};
use std::ffi::{c_char, CStr, CString};
use std::ptr;

const DOC: &str = r#"{
    "group": {"family": "cyclic", "n": 2},
    "cover": {"genus": 2, "monodromy": ["x", "e", "e", "e"]}
}"#;

fn parse(text: &str) -> *mut EqlgInput {
    let c_text = CString::new(text).unwrap();
    let mut handle: *mut EqlgInput = ptr::null_mut();
    let status = unsafe { eqlg_input_parse(c_text.as_ptr(), &mut handle) };
    assert_eq!(status, EqlgStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let out = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { eqlg_string_free(ptr) };
    out
}

#[test]
fn version_is_present() {
    let v = unsafe { CStr::from_ptr(eqlg_version()) }.to_str().unwrap();
    assert!(!v.is_empty());
}

#[test]
fn parse_rejects_garbage_with_message() {
    let c_text = CString::new("{ nope").unwrap();
    let mut handle: *mut EqlgInput = ptr::null_mut();
    let status = unsafe { eqlg_input_parse(c_text.as_ptr(), &mut handle) };
    assert_eq!(status, EqlgStatus::InvalidInput);
    assert!(handle.is_null());
    let msg = unsafe { CStr::from_ptr(eqlg_last_error()) }.to_str().unwrap();
    assert!(msg.contains("JSON"), "{msg}");
}

#[test]
fn null_arguments_are_reported() {
    let mut handle: *mut EqlgInput = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_input_parse(ptr::null(), &mut handle) },
        EqlgStatus::NullArgument
    );
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_run_cover(ptr::null(), &mut out) },
        EqlgStatus::NullArgument
    );
}

#[test]
fn cover_and_find_round_trip() {
    let handle = parse(DOC);

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { eqlg_run_cover(handle, &mut out) }, EqlgStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(report["outputs"]["module_dim"], 6);

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_run_find_lagrangian(handle, &mut out) },
        EqlgStatus::Ok
    );
    let find_report = take_string(out);
    let parsed: serde_json::Value = serde_json::from_str(&find_report).unwrap();
    assert_eq!(parsed["outputs"]["certificate"]["dim"], 3);

    // The emitted report doubles as a certificate file for verification.
    let cert = CString::new(find_report).unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_run_verify(handle, cert.as_ptr(), &mut out) },
        EqlgStatus::Ok
    );
    take_string(out);

    unsafe { eqlg_input_free(handle) };
}

#[test]
fn tampered_certificate_is_negative() {
    let handle = parse(DOC);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_run_find_lagrangian(handle, &mut out) },
        EqlgStatus::Ok
    );
    let mut report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    report["outputs"]["certificate"]["lagrangian"][0][3] =
        serde_json::Value::String("1/1".into());
    let cert = CString::new(report.to_string()).unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_run_verify(handle, cert.as_ptr(), &mut out) },
        EqlgStatus::Negative
    );
    let verdicts: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(verdicts["verdicts"][0]["pass"], false);
    unsafe { eqlg_input_free(handle) };
}

#[test]
fn witt_between_two_documents() {
    let left = parse(DOC);
    let right = parse(
        r#"{
            "group": {"family": "cyclic", "n": 2},
            "cover": {"genus": 2, "monodromy": ["x", "x", "x", "e"]}
        }"#,
    );
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { eqlg_run_witt_equiv(left, right, &mut out) },
        EqlgStatus::Ok
    );
    let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(report["outputs"]["witt"]["equivalent"], true);
    unsafe { eqlg_input_free(left) };
    unsafe { eqlg_input_free(right) };
}
