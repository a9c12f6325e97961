//! C interface to `kinterchange`.
//!
//! Conventions:
//! - every fallible function returns a [`KiStatus`]; `KI_STATUS_OK` is 0;
//! - on failure the message is available from [`ki_last_error_message`]
//!   on the same thread until the next call;
//! - objectives are opaque [`KiObjective`] handles released with
//!   [`ki_objective_free`];
//! - strings returned through `char **` are owned by the caller and
//!   released with [`ki_string_free`];
//! - permutations are passed as `len` bytes holding `1..=len`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kinterchange::control::{run_plan, verify_paper};
use kinterchange::landscape::{analyze, DigraphMode};
use kinterchange::objective::build_search_distance_objective;
use kinterchange::perm::{KNeighborhood, PermSpace};
use kinterchange::search::StrategyConfig;
use kinterchange::{Error, ErrorCode, Objective, Permutation};

/// Status codes; values 1 to 17 match the library's error codes.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KiStatus {
    Ok = 0,
    DuplicateElement = 1,
    ElementOutOfRange = 2,
    OrderOutOfRange = 3,
    PermutationSyntax = 4,
    WindowOutOfBounds = 5,
    InvalidK = 6,
    IndexOutOfRange = 7,
    ArityMismatch = 8,
    MissingTableEntry = 9,
    CapExceeded = 10,
    MissingObjective = 11,
    EmptyOptima = 12,
    ParseError = 13,
    IncompleteTable = 14,
    InvalidParams = 15,
    InvalidConfig = 16,
    IoError = 17,
    NullPointer = 100,
    BufferTooSmall = 101,
    InvalidUtf8 = 102,
    Panic = 103,
}

impl From<ErrorCode> for KiStatus {
    fn from(c: ErrorCode) -> Self {
        match c {
            ErrorCode::Ok => KiStatus::Ok,
            ErrorCode::DuplicateElement => KiStatus::DuplicateElement,
            ErrorCode::ElementOutOfRange => KiStatus::ElementOutOfRange,
            ErrorCode::OrderOutOfRange => KiStatus::OrderOutOfRange,
            ErrorCode::PermutationSyntax => KiStatus::PermutationSyntax,
            ErrorCode::WindowOutOfBounds => KiStatus::WindowOutOfBounds,
            ErrorCode::InvalidK => KiStatus::InvalidK,
            ErrorCode::IndexOutOfRange => KiStatus::IndexOutOfRange,
            ErrorCode::ArityMismatch => KiStatus::ArityMismatch,
            ErrorCode::MissingTableEntry => KiStatus::MissingTableEntry,
            ErrorCode::CapExceeded => KiStatus::CapExceeded,
            ErrorCode::MissingObjective => KiStatus::MissingObjective,
            ErrorCode::EmptyOptima => KiStatus::EmptyOptima,
            ErrorCode::ParseError => KiStatus::ParseError,
            ErrorCode::IncompleteTable => KiStatus::IncompleteTable,
            ErrorCode::InvalidParams => KiStatus::InvalidParams,
            ErrorCode::InvalidConfig => KiStatus::InvalidConfig,
            ErrorCode::IoError => KiStatus::IoError,
        }
    }
}

/// Opaque objective handle.
pub struct KiObjective {
    inner: Objective,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(KiStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.code().into(), format!("error[{}]: {e}", e.code().name()))
    }
}

type FfiResult<T> = Result<T, Fail>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> KiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            KiStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            KiStatus::Panic
        }
    }
}

fn null(name: &str) -> Fail {
    Fail(KiStatus::NullPointer, format!("{name} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(KiStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn read_perm(p: *const u8, len: usize) -> FfiResult<Permutation> {
    if p.is_null() {
        return Err(null("perm"));
    }
    let seq: Vec<usize> = std::slice::from_raw_parts(p, len).iter().map(|&b| b as usize).collect();
    Ok(Permutation::new(&seq)?)
}

unsafe fn objective<'a>(h: *const KiObjective) -> FfiResult<&'a Objective> {
    h.as_ref().map(|h| &h.inner).ok_or_else(|| null("objective"))
}

unsafe fn put_objective(out: *mut *mut KiObjective, f: Objective) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(KiObjective { inner: f }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).expect("json has no nul").into_raw();
    Ok(())
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ki_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code, e.g. `"InvalidK"`.
#[no_mangle]
pub extern "C" fn ki_status_name(status: i32) -> *const c_char {
    let s: &'static CStr = match status {
        0 => c"Ok",
        1 => c"DuplicateElement",
        2 => c"ElementOutOfRange",
        3 => c"OrderOutOfRange",
        4 => c"PermutationSyntax",
        5 => c"WindowOutOfBounds",
        6 => c"InvalidK",
        7 => c"IndexOutOfRange",
        8 => c"ArityMismatch",
        9 => c"MissingTableEntry",
        10 => c"CapExceeded",
        11 => c"MissingObjective",
        12 => c"EmptyOptima",
        13 => c"ParseError",
        14 => c"IncompleteTable",
        15 => c"InvalidParams",
        16 => c"InvalidConfig",
        17 => c"IoError",
        100 => c"NullPointer",
        101 => c"BufferTooSmall",
        102 => c"InvalidUtf8",
        103 => c"Panic",
        _ => c"Unknown",
    };
    s.as_ptr()
}

#[no_mangle]
pub extern "C" fn ki_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => c"unknown",
    };
    VERSION.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ki_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases an objective. Null is ignored.
///
/// # Safety
/// `h` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ki_objective_free(h: *mut KiObjective) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// The built-in four-element reference table.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_objective_table1(out: *mut *mut KiObjective) -> KiStatus {
    guard(|| put_objective(out, kinterchange::fixtures::table1_objective()))
}

/// Inversion count of order `n`; `n = 0` accepts every order.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_objective_inversion(n: usize, out: *mut *mut KiObjective) -> KiStatus {
    guard(|| put_objective(out, Objective::inversion((n != 0).then_some(n))))
}

/// `g_k(s)`: fewest k-interchanges turning `s` into `target`.
///
/// # Safety
/// `target` must point to `n` readable bytes; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_objective_search_distance(
    n: usize,
    k: usize,
    target: *const u8,
    out: *mut *mut KiObjective,
) -> KiStatus {
    guard(|| {
        let t = read_perm(target, n)?;
        put_objective(out, build_search_distance_objective(n, k, &t)?)
    })
}

/// Objective from a JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be valid for writing
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_objective_from_json(json: *const c_char, out: *mut *mut KiObjective) -> KiStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        put_objective(out, Objective::from_json_str(text)?)
    })
}

/// Objective from a JSON file.
///
/// # Safety
/// `path` must be a nul-terminated string; `out` must be valid for writing
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_objective_load(path: *const c_char, out: *mut *mut KiObjective) -> KiStatus {
    guard(|| {
        let path = read_str(path, "path")?;
        put_objective(out, Objective::load(path)?)
    })
}

/// Evaluates `f` at a permutation; the value is `numer / denom` in lowest
/// terms with `denom > 0`.
///
/// # Safety
/// `perm` must point to `len` readable bytes; `numer` and `denom` must be
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ki_evaluate(
    f: *const KiObjective,
    perm: *const u8,
    len: usize,
    numer: *mut i64,
    denom: *mut i64,
) -> KiStatus {
    guard(|| {
        let f = objective(f)?;
        let s = read_perm(perm, len)?;
        if numer.is_null() || denom.is_null() {
            return Err(null("numer/denom"));
        }
        let v = f.evaluate(&s)?;
        *numer = v.numer();
        *denom = v.denom();
        Ok(())
    })
}

/// Writes the distinct k-interchange neighbors of `perm` in lexicographic
/// order, `len` bytes each, into `buf` (room for `capacity` rows).
/// `*count` always receives the number of neighbors; if it exceeds
/// `capacity` nothing is written and `KI_STATUS_BUFFER_TOO_SMALL` is
/// returned. Pass `capacity = 0` to query the size.
///
/// # Safety
/// `perm` must point to `len` readable bytes; `buf` must be valid for
/// `capacity * len` bytes (may be null when `capacity` is 0); `count` must
/// be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ki_neighborhood(
    perm: *const u8,
    len: usize,
    k: usize,
    buf: *mut u8,
    capacity: usize,
    count: *mut usize,
) -> KiStatus {
    guard(|| {
        let s = read_perm(perm, len)?;
        if count.is_null() {
            return Err(null("count"));
        }
        let nbrs = KNeighborhood::new(len, k)?.neighbors(&s)?;
        *count = nbrs.len();
        if nbrs.len() > capacity {
            return Err(Fail(
                KiStatus::BufferTooSmall,
                format!("{} neighbors do not fit in {capacity} rows", nbrs.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        let out = std::slice::from_raw_parts_mut(buf, capacity * len);
        for (row, x) in nbrs.iter().enumerate() {
            out[row * len..(row + 1) * len].copy_from_slice(x.as_slice());
        }
        Ok(())
    })
}

/// Landscape report of `f` at window size `k` in `mode` (`"moves"`,
/// `"strict"` or `"weak"`), as JSON.
///
/// # Safety
/// `mode` must be a nul-terminated string; `out` must be valid for writing
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_analyze_json(
    f: *const KiObjective,
    k: usize,
    mode: *const c_char,
    out: *mut *mut c_char,
) -> KiStatus {
    guard(|| {
        let f = objective(f)?;
        let mode: DigraphMode = read_str(mode, "mode")?.parse()?;
        let n = f
            .arity()
            .ok_or_else(|| Fail(KiStatus::InvalidParams, "objective has no fixed order".into()))?;
        let report = analyze(f, &PermSpace::new(n)?, k, mode)?;
        put_string(out, serde_json::to_string(&report).expect("report serializes"))
    })
}

/// Runs the strategy given as a JSON config and returns the run record as
/// JSON.
///
/// # Safety
/// `config_json` must be a nul-terminated string; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_search_json(
    f: *const KiObjective,
    config_json: *const c_char,
    out: *mut *mut c_char,
) -> KiStatus {
    guard(|| {
        let f = objective(f)?;
        let cfg: StrategyConfig = serde_json::from_str(read_str(config_json, "config_json")?)
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        let record = run_plan(f, &cfg)?;
        put_string(out, serde_json::to_string(&record).expect("record serializes"))
    })
}

/// Runs the structural verification suite. `*all_passed` is 1 when every
/// check passes; the full report is returned as JSON when `out` is not null.
///
/// # Safety
/// `all_passed` must be valid for writing; `out` must be null or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ki_verify(all_passed: *mut i32, out: *mut *mut c_char) -> KiStatus {
    guard(|| {
        if all_passed.is_null() {
            return Err(null("all_passed"));
        }
        let r = verify_paper();
        *all_passed = r.passed() as i32;
        if !out.is_null() {
            put_string(out, serde_json::to_string(&r).expect("report serializes"))?;
        }
        Ok(())
    })
}
