//! C ABI for the equilag pipelines.
//!
//! Inputs are parsed into opaque handles; every run returns a status
//! code and, on success, a heap-allocated JSON report that the caller
//! frees with [`eqlg_string_free`]. The most recent error message of the
//! calling thread is available through [`eqlg_last_error`].
//!
//! The matching C header lives at `include/equilag.h` and is maintained
//! by hand; `tests/header_sync.rs` keeps it aligned with the exported
//! symbols.

use equilag::input::{parse_document, ConfigDoc};
use equilag::pipeline::{
    run_chevalley_weil, run_corpus, run_cover, run_find_lagrangian, run_verify, run_witt_equiv,
    PipelineError,
};
use equilag::report::RunReport;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every run function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqlgStatus {
    /// Success; every verdict in the report passed.
    Ok = 0,
    /// The run completed but reported a verified negative (failed
    /// verification, exhausted search). The report is still returned.
    Negative = 1,
    /// Malformed or semantically invalid input.
    InvalidInput = 2,
    /// Internal failure; consult `eqlg_last_error`.
    Internal = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
}

/// Opaque handle over a validated input document.
pub struct EqlgInput {
    text: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

/// Message of the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eqlg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static version string of the library.
#[no_mangle]
pub extern "C" fn eqlg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn read_c_str<'a>(ptr: *const c_char) -> Result<&'a str, EqlgStatus> {
    if ptr.is_null() {
        set_last_error("null string argument");
        return Err(EqlgStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error("string argument is not valid UTF-8");
        EqlgStatus::InvalidInput
    })
}

/// Parse and validate an input document (JSON or TOML). On success the
/// handle is written to `out` and must be freed with `eqlg_input_free`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn eqlg_input_parse(
    text: *const c_char,
    out: *mut *mut EqlgInput,
) -> EqlgStatus {
    if out.is_null() {
        set_last_error("null output pointer");
        return EqlgStatus::NullArgument;
    }
    let text = match read_c_str(text) {
        Ok(t) => t.to_string(),
        Err(status) => return status,
    };
    match parse_document(&text) {
        Ok(_doc) => {
            let handle = Box::new(EqlgInput { text });
            *out = Box::into_raw(handle);
            EqlgStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            EqlgStatus::InvalidInput
        }
    }
}

/// Free a handle returned by `eqlg_input_parse`. Null is ignored.
///
/// # Safety
/// `input` must be a pointer previously returned by `eqlg_input_parse`
/// and not freed since.
#[no_mangle]
pub unsafe extern "C" fn eqlg_input_free(input: *mut EqlgInput) {
    if !input.is_null() {
        drop(Box::from_raw(input));
    }
}

/// Free a string returned by any run function. Null is ignored.
///
/// # Safety
/// `text` must be a pointer previously returned by a run function and
/// not freed since.
#[no_mangle]
pub unsafe extern "C" fn eqlg_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// The document text behind a handle — used to re-parse per run so the
/// handle stays immutable and shareable.
unsafe fn handle_text<'a>(input: *const EqlgInput) -> Result<&'a str, EqlgStatus> {
    if input.is_null() {
        set_last_error("null input handle");
        return Err(EqlgStatus::NullArgument);
    }
    Ok(&(*input).text)
}

fn deliver(
    result: Result<RunReport, PipelineError>,
    out_json: *mut *mut c_char,
) -> EqlgStatus {
    match result {
        Ok(report) => {
            let status = if report.all_pass() {
                EqlgStatus::Ok
            } else {
                EqlgStatus::Negative
            };
            match serde_json::to_string_pretty(&report)
                .map_err(|e| e.to_string())
                .and_then(|s| CString::new(s).map_err(|e| e.to_string()))
            {
                Ok(cstring) => {
                    unsafe { *out_json = cstring.into_raw() };
                    status
                }
                Err(e) => {
                    set_last_error(&e);
                    EqlgStatus::Internal
                }
            }
        }
        Err(e @ PipelineError::Input(_)) => {
            set_last_error(&e.to_string());
            EqlgStatus::InvalidInput
        }
        Err(e) => {
            set_last_error(&e.to_string());
            EqlgStatus::Internal
        }
    }
}

fn guarded(
    out_json: *mut *mut c_char,
    run: impl FnOnce() -> Result<RunReport, PipelineError>,
) -> EqlgStatus {
    if out_json.is_null() {
        set_last_error("null output pointer");
        return EqlgStatus::NullArgument;
    }
    match catch_unwind(AssertUnwindSafe(run)) {
        Ok(result) => deliver(result, out_json),
        Err(_) => {
            set_last_error("panic inside the library");
            EqlgStatus::Internal
        }
    }
}

/// Build the cover of a document and report cell counts and traces.
///
/// # Safety
/// `input` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eqlg_run_cover(
    input: *const EqlgInput,
    out_json: *mut *mut c_char,
) -> EqlgStatus {
    let text = match handle_text(input) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(out_json, || run_cover(text))
}

/// Run the invariant-Lagrangian pipeline on a document.
///
/// # Safety
/// `input` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eqlg_run_find_lagrangian(
    input: *const EqlgInput,
    out_json: *mut *mut c_char,
) -> EqlgStatus {
    let text = match handle_text(input) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(out_json, || run_find_lagrangian(text, &ConfigDoc::default()))
}

/// Trace-identity report for a cover document.
///
/// # Safety
/// `input` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eqlg_run_chevalley_weil(
    input: *const EqlgInput,
    out_json: *mut *mut c_char,
) -> EqlgStatus {
    let text = match handle_text(input) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(out_json, || run_chevalley_weil(text))
}

/// Witt-equivalence of the modules of two documents over one group.
///
/// # Safety
/// `left` and `right` must be live handles; `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn eqlg_run_witt_equiv(
    left: *const EqlgInput,
    right: *const EqlgInput,
    out_json: *mut *mut c_char,
) -> EqlgStatus {
    let left_text = match handle_text(left) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let right_text = match handle_text(right) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(out_json, || {
        run_witt_equiv(left_text, right_text, &ConfigDoc::default())
    })
}

/// Re-verify a certificate (a find-lagrangian report or a bare
/// `{"lagrangian": [[..]]}` JSON object) against a document.
///
/// # Safety
/// `input` must be a live handle; `certificate_json` a NUL-terminated
/// string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eqlg_run_verify(
    input: *const EqlgInput,
    certificate_json: *const c_char,
    out_json: *mut *mut c_char,
) -> EqlgStatus {
    let text = match handle_text(input) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let cert = match read_c_str(certificate_json) {
        Ok(c) => c,
        Err(s) => return s,
    };
    guarded(out_json, || run_verify(text, cert))
}

/// Run the built-in acceptance corpus with the given seed.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eqlg_run_corpus(seed: u64, out_json: *mut *mut c_char) -> EqlgStatus {
    guarded(out_json, || run_corpus(seed))
}

// Re-exported for the header-sync test.
#[doc(hidden)]
pub fn _exported_symbols() -> &'static [&'static str] {
    &[
        "eqlg_version",
        "eqlg_last_error",
        "eqlg_input_parse",
        "eqlg_input_free",
        "eqlg_string_free",
        "eqlg_run_cover",
        "eqlg_run_find_lagrangian",
        "eqlg_run_chevalley_weil",
        "eqlg_run_witt_equiv",
        "eqlg_run_verify",
        "eqlg_run_corpus",
    ]
}
