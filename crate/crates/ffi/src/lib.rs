//! C interface to `frobnum`.
//!
//! Every function returns a status code (`FROBNUM_OK` on success) and writes
//! its result through an out-pointer. After a failure, `frobnum_last_error`
//! describes it; the message belongs to the calling thread. Strings returned
//! through `char **` must be released with `frobnum_string_free`, groups with
//! `frobnum_group_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use frobnum::corpus::Corpus;
use frobnum::counting::{count_sylow, Caps, GroupContext};
use frobnum::hallpoly::{hall_count_order, Partition};
use frobnum::report::{to_json, CountJson, VerdictJson};
use frobnum::verify::classify_number;
use frobnum::Error;

pub const FROBNUM_OK: i32 = 0;
/// A checked statement was violated or an internal cross-check failed.
pub const FROBNUM_VIOLATION: i32 = 1;
pub const FROBNUM_PARSE_ERROR: i32 = 2;
pub const FROBNUM_CAP_EXCEEDED: i32 = 3;
pub const FROBNUM_PRECONDITION: i32 = 4;
/// Null pointer or non-UTF-8 string argument.
pub const FROBNUM_INVALID_ARGUMENT: i32 = 5;
/// The library panicked; this is a bug.
pub const FROBNUM_PANIC: i32 = 6;

/// A built group with its element table and counting caches.
pub struct FrobnumGroup {
    ctx: GroupContext,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

enum Failure {
    Lib(Error),
    Invalid(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> i32 {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FROBNUM_OK,
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            e.exit_code()
        }
        Ok(Err(Failure::Invalid(msg))) => {
            set_last_error(msg.to_string());
            FROBNUM_INVALID_ARGUMENT
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal panic: {msg}"));
            FROBNUM_PANIC
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Invalid("null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::Invalid("string argument is not UTF-8"))
}

unsafe fn group_arg<'a>(g: *const FrobnumGroup) -> Result<&'a GroupContext, Failure> {
    g.as_ref()
        .map(|g| &g.ctx)
        .ok_or(Failure::Invalid("null group handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Invalid("null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|_| Failure::Invalid("result contains NUL"))?;
    write_out(out, s.into_raw())
}

/// Builds the group described by `spec` (e.g. `"GL2(4)"`) with default caps.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobnum_group_new(spec: *const c_char, out: *mut *mut FrobnumGroup) -> i32 {
    guard(|| {
        let spec: frobnum::groups::GroupSpec = str_arg(spec)?.parse()?;
        if out.is_null() {
            return Err(Failure::Invalid("null output pointer"));
        }
        let ctx = GroupContext::from_spec(&spec, Caps::default())?;
        write_out(out, Box::into_raw(Box::new(FrobnumGroup { ctx })))
    })
}

/// Releases a group; null is ignored.
///
/// # Safety
/// `group` must come from `frobnum_group_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn frobnum_group_free(group: *mut FrobnumGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobnum_group_order(group: *const FrobnumGroup, out: *mut u64) -> i32 {
    guard(|| write_out(out, group_arg(group)?.order()))
}

/// Number of points the group acts on.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobnum_group_degree(group: *const FrobnumGroup, out: *mut u64) -> i32 {
    guard(|| write_out(out, group_arg(group)?.group().degree() as u64))
}

/// Number of subgroups of order `p^a`.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobnum_count_subgroups(
    group: *const FrobnumGroup,
    p: u64,
    a: u32,
    out: *mut u64,
) -> i32 {
    guard(|| {
        let count = group_arg(group)?.count(p, a)?.count;
        write_out(out, count)
    })
}

/// Number of Sylow p-subgroups.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobnum_count_sylow(group: *const FrobnumGroup, p: u64, out: *mut u64) -> i32 {
    guard(|| {
        let n = count_sylow(group_arg(group)?, p)?;
        write_out(out, n)
    })
}

/// The count of subgroups of order `p^a` as a JSON report.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable. Free the result with
/// `frobnum_string_free`.
#[no_mangle]
pub unsafe extern "C" fn frobnum_count_report_json(
    group: *const FrobnumGroup,
    p: u64,
    a: u32,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let report = group_arg(group)?.count(p, a)?;
        write_string(out, to_json(&CountJson::from(&*report)))
    })
}

/// Closed-form number of subgroups of order `p^a` in the abelian p-group
/// whose cyclic factors have orders `p^parts[i]`, as a decimal string.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null with `len = 0`);
/// `out` must be writable. Free the result with `frobnum_string_free`.
#[no_mangle]
pub unsafe extern "C" fn frobnum_hall_count_order(
    parts: *const u32,
    len: usize,
    a: u32,
    p: u64,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let parts = match (parts.is_null(), len) {
            (_, 0) => Vec::new(),
            (true, _) => return Err(Failure::Invalid("null partition")),
            (false, _) => std::slice::from_raw_parts(parts, len).to_vec(),
        };
        let lambda = Partition::new(parts)?;
        write_string(out, hall_count_order(&lambda, a, p)?.to_string())
    })
}

fn default_corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(Corpus::default_corpus)
}

/// Classifies `n` against the shipped corpus; the verdict is returned as JSON.
///
/// # Safety
/// `out` must be writable. Free the result with `frobnum_string_free`.
#[no_mangle]
pub unsafe extern "C" fn frobnum_classify_json(p: u64, n: u64, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let verdict = classify_number(p, n, default_corpus(), None)?;
        write_string(out, to_json(&VerdictJson::from(&verdict)))
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn frobnum_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn frobnum_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
