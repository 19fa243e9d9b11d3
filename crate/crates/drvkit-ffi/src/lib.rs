//! C ABI for the drvkit engine.
//!
//! Groups are opaque handles created by `drv_group_from_name` or
//! `drv_group_from_table` and released with `drv_group_free`. Everything
//! else goes through `drv_run_json`, which accepts the same request
//! object as the CLI subcommands and returns a report as a JSON string;
//! strings returned by this library are released with `drv_string_free`.
//! Functions report a `DrvStatus`; on any non-Ok status a thread-local
//! message is available from `drv_last_error`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use drvkit::group::FiniteGroup;
use drvkit::run::{execute, Request};

/// Result codes of every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DrvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Bad input data: unknown families, invalid tables, malformed JSON,
    /// uncertified derivations, cap violations.
    ValidationFailed = 3,
    /// A broken internal invariant; never expected.
    InternalError = 4,
}

/// Opaque handle to a validated finite group.
pub struct DrvGroup {
    inner: Arc<FiniteGroup>,
}

thread_local! {
    static LAST_ERROR: std::cell::RefCell<CString> =
        std::cell::RefCell::new(CString::new("").expect("empty C string"));
}

fn set_last_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(sanitized).expect("NUL stripped");
    });
}

/// Message describing the most recent failure on this thread. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn drv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn drv_version() -> *const c_char {
    static VERSION: &[u8] = concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes();
    VERSION.as_ptr().cast()
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, DrvStatus> {
    if ptr.is_null() {
        set_last_error("null pointer argument");
        return Err(DrvStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error("argument is not valid UTF-8");
        DrvStatus::InvalidUtf8
    })
}

/// Build a group from a canonical family name such as "S3" or "C2xC4".
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn drv_group_from_name(
    name: *const c_char,
    out: *mut *mut DrvGroup,
) -> DrvStatus {
    if out.is_null() {
        set_last_error("null output pointer");
        return DrvStatus::NullPointer;
    }
    let name = match read_utf8(name) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let spec = match drvkit::families::FamilySpec::parse(name) {
        Ok(s) => s,
        Err(e) => {
            set_last_error(&e.to_string());
            return DrvStatus::ValidationFailed;
        }
    };
    match drvkit::families::build_group(&spec, drvkit::group::DEFAULT_ORDER_CAP) {
        Ok(group) => {
            *out = Box::into_raw(Box::new(DrvGroup { inner: group }));
            DrvStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            DrvStatus::ValidationFailed
        }
    }
}

/// Build a group from a row-major `order`×`order` Cayley table of
/// element indices; the table is fully validated.
///
/// # Safety
/// `table` must point to `order * order` readable entries.
#[no_mangle]
pub unsafe extern "C" fn drv_group_from_table(
    order: usize,
    table: *const usize,
    out: *mut *mut DrvGroup,
) -> DrvStatus {
    if out.is_null() || (order > 0 && table.is_null()) {
        set_last_error("null pointer argument");
        return DrvStatus::NullPointer;
    }
    let flat = std::slice::from_raw_parts(table, order * order);
    let rows: Vec<Vec<usize>> = flat.chunks(order).map(<[usize]>::to_vec).collect();
    match FiniteGroup::from_table(rows) {
        Ok(group) => {
            *out = Box::into_raw(Box::new(DrvGroup { inner: group }));
            DrvStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            DrvStatus::ValidationFailed
        }
    }
}

/// Release a group handle. Passing NULL is a no-op.
///
/// # Safety
/// `group` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn drv_group_free(group: *mut DrvGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

unsafe fn group_ref<'a>(group: *const DrvGroup) -> Option<&'a DrvGroup> {
    group.as_ref()
}

/// Number of elements; 0 for a NULL handle.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_order(group: *const DrvGroup) -> usize {
    group_ref(group).map_or(0, |g| g.inner.order())
}

/// Index of the identity element.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_identity(group: *const DrvGroup) -> usize {
    group_ref(group).map_or(usize::MAX, |g| g.inner.identity())
}

/// Product of elements i and j; `usize::MAX` on a bad handle or index.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_op(group: *const DrvGroup, i: usize, j: usize) -> usize {
    match group_ref(group) {
        Some(g) if i < g.inner.order() && j < g.inner.order() => g.inner.op(i, j),
        _ => usize::MAX,
    }
}

/// Inverse of element i; `usize::MAX` on a bad handle or index.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_inverse(group: *const DrvGroup, i: usize) -> usize {
    match group_ref(group) {
        Some(g) if i < g.inner.order() => g.inner.inverse(i),
        _ => usize::MAX,
    }
}

/// Number of conjugacy classes; 0 on a bad handle.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_class_count(group: *const DrvGroup) -> usize {
    group_ref(group).map_or(0, |g| g.inner.conjugacy_classes().block_count())
}

/// Index of the conjugacy class containing element i, classes ordered by
/// least representative; `usize::MAX` on a bad handle or index.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_class_of(group: *const DrvGroup, i: usize) -> usize {
    match group_ref(group) {
        Some(g) if i < g.inner.order() => g.inner.conjugacy_classes().block_of(i),
        _ => usize::MAX,
    }
}

/// Display label of element i as a freshly allocated string; NULL on a
/// bad handle or index. Release with `drv_string_free`.
///
/// # Safety
/// `group` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn drv_group_label(group: *const DrvGroup, i: usize) -> *mut c_char {
    match group_ref(group) {
        Some(g) if i < g.inner.order() => {
            let label = g.inner.label(i).replace('\0', " ");
            CString::new(label).expect("NUL stripped").into_raw()
        }
        _ => std::ptr::null_mut(),
    }
}

/// Run one engine request described as JSON and return the report as a
/// freshly allocated JSON string in `out_report`. The request mirrors
/// the CLI: {"command": "...", "group": "S3" | {...}, "ring": ...,
/// "sigma": ..., "tau": ..., "derivation": {...}}. Release the report
/// with `drv_string_free`.
///
/// # Safety
/// `request_json` must be NUL-terminated; `out_report` must be valid.
#[no_mangle]
pub unsafe extern "C" fn drv_run_json(
    request_json: *const c_char,
    out_report: *mut *mut c_char,
) -> DrvStatus {
    if out_report.is_null() {
        set_last_error("null output pointer");
        return DrvStatus::NullPointer;
    }
    *out_report = std::ptr::null_mut();
    let text = match read_utf8(request_json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let request: Request = match serde_json::from_str(text) {
        Ok(r) => r,
        Err(e) => {
            set_last_error(&format!("malformed request: {e}"));
            return DrvStatus::ValidationFailed;
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| execute(&request)));
    match outcome {
        Ok(Ok(report)) => {
            let rendered = report.to_pretty_string().replace('\0', " ");
            *out_report = CString::new(rendered).expect("NUL stripped").into_raw();
            DrvStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(&e.to_string());
            match e {
                drvkit::run::EngineError::Validation { .. } => DrvStatus::ValidationFailed,
                drvkit::run::EngineError::Internal(_) => DrvStatus::InternalError,
            }
        }
        Err(_) => {
            set_last_error("internal assertion failure");
            DrvStatus::InternalError
        }
    }
}

/// Release a string allocated by this library. Passing NULL is a no-op.
///
/// # Safety
/// `s` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn drv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
