//! C ABI over the trigonal toolkit.
//!
//! Conventions, uniform across the surface:
//!
//! * every fallible entry point returns a [`TrigStatus`]; results travel
//!   through out-parameters, written only on `TRIG_STATUS_OK`
//! * reports are opaque handles, released with [`trig_report_free`]
//! * strings handed to the caller are NUL-terminated UTF-8 owned by the
//!   caller until passed to [`trig_string_free`]; strings documented as
//!   static must not be freed
//! * after a non-OK status, [`trig_last_error_message`] describes the
//!   failure; the pointer stays valid until the next failing call on the
//!   same thread
//! * panics never cross the boundary: they are caught and surfaced as
//!   `TRIG_STATUS_PANIC`

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trigonal::diagram::DiagramStyle;
use trigonal::export::{render_presentation, ExportFormat};
use trigonal::report::{Report, Status};
use trigonal::reports::{
    lattice_report, maroni_report, order_report, plucker_report, verify_report, VerifyCheck,
};
use trigonal::words::{trigonal_presentation, weierstrass_presentation};
use trigonal::{Error, DEFAULT_SEED};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrigStatus {
    /// The call succeeded and out-parameters are populated.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Arguments were well-formed but rejected: unsupported genus, unknown
    /// check name, guarded computation without `force`, or non-UTF-8 text.
    InvalidInput = 2,
    /// The computation itself reported an error.
    Domain = 3,
    /// A panic was caught at the boundary. Memory stays valid but the
    /// out-parameters were not written.
    Panic = 4,
}

/// Vanishing-cycle diagram flavor.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrigStyle {
    /// Chain diagram, generators `t1..t{2g+2}`.
    Trigonal = 0,
    /// Ladder diagram, generators `T1..T{2g+2}`.
    Weierstrass = 1,
}

/// Rendering target for a presentation.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrigFormat {
    /// One generator-count line, then one line per relator.
    Text = 0,
    /// A GAP script defining `G := F / rels;;`.
    Gap = 1,
    /// Pretty-printed JSON.
    Json = 2,
}

/// Outcome of a single report row.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrigCheckStatus {
    Pass = 0,
    Fail = 1,
    Info = 2,
}

/// Opaque verification report. Obtain from `trig_verify` and friends,
/// inspect through the `trig_report_*` accessors, release with
/// [`trig_report_free`].
pub struct TrigReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn stash_error(msg: String) {
    let c = CString::new(msg)
        .unwrap_or_else(|_| CString::new("error text contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(err: Error) -> TrigStatus {
    let code = match err {
        Error::InvalidGenus { .. } | Error::InvalidMaroni { .. } => TrigStatus::InvalidInput,
        _ => TrigStatus::Domain,
    };
    stash_error(err.to_string());
    code
}

fn guarded(f: impl FnOnce() -> TrigStatus) -> TrigStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        stash_error("panic caught at the C boundary".to_owned());
        TrigStatus::Panic
    })
}

macro_rules! require {
    ($ptr:expr) => {
        if $ptr.is_null() {
            stash_error(format!("{} must not be NULL", stringify!($ptr)));
            return TrigStatus::NullPointer;
        }
    };
}

/// Writes `s` to `*out` as a caller-owned C string. `out` must be valid.
unsafe fn give_string(out: *mut *mut c_char, s: String) -> TrigStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TrigStatus::Ok
        }
        Err(_) => {
            stash_error("output contained an interior NUL byte".to_owned());
            TrigStatus::Domain
        }
    }
}

/// Boxes `inner` into `*out`. `out` must be valid.
unsafe fn give_report(out: *mut *mut TrigReport, inner: Report) -> TrigStatus {
    *out = Box::into_raw(Box::new(TrigReport { inner }));
    TrigStatus::Ok
}

/// Library version; static storage, do not free.
#[no_mangle]
pub extern "C" fn trig_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Seed the command-line tool uses when none is given.
#[no_mangle]
pub extern "C" fn trig_default_seed() -> u64 {
    DEFAULT_SEED
}

/// Human-readable name of a status code; static storage, do not free.
#[no_mangle]
pub extern "C" fn trig_status_name(status: TrigStatus) -> *const c_char {
    let name: &'static str = match status {
        TrigStatus::Ok => "ok\0",
        TrigStatus::NullPointer => "null pointer\0",
        TrigStatus::InvalidInput => "invalid input\0",
        TrigStatus::Domain => "domain error\0",
        TrigStatus::Panic => "panic\0",
    };
    name.as_ptr().cast()
}

/// Message for the most recent failure on this thread; static until the
/// next failing call, do not free. Empty string if nothing failed yet.
#[no_mangle]
pub extern "C" fn trig_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Renders the mapping-class presentation for genus `g` into `*out`.
///
/// # Safety
/// `out` must be valid for writes or NULL.
#[no_mangle]
pub unsafe extern "C" fn trig_presentation_render(
    g: u64,
    style: TrigStyle,
    format: TrigFormat,
    out: *mut *mut c_char,
) -> TrigStatus {
    guarded(|| {
        require!(out);
        let (style, pres) = match style {
            TrigStyle::Trigonal => (DiagramStyle::Trigonal, trigonal_presentation(g)),
            TrigStyle::Weierstrass => (DiagramStyle::Weierstrass, weierstrass_presentation(g)),
        };
        let pres = match pres {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let format = match format {
            TrigFormat::Text => ExportFormat::Text,
            TrigFormat::Gap => ExportFormat::Gap,
            TrigFormat::Json => ExportFormat::Json,
        };
        give_string(out, render_presentation(&pres, style, format))
    })
}

/// `checks` is a comma-separated list of check names, or NULL for all.
unsafe fn parse_checks(checks: *const c_char) -> Result<Vec<VerifyCheck>, TrigStatus> {
    if checks.is_null() {
        return Ok(VerifyCheck::ALL.to_vec());
    }
    let text = match CStr::from_ptr(checks).to_str() {
        Ok(t) => t,
        Err(_) => {
            stash_error("checks must be UTF-8".to_owned());
            return Err(TrigStatus::InvalidInput);
        }
    };
    let mut picked = Vec::new();
    for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name.parse::<VerifyCheck>() {
            Ok(c) => picked.push(c),
            Err(msg) => {
                stash_error(msg);
                return Err(TrigStatus::InvalidInput);
            }
        }
    }
    Ok(picked)
}

/// Runs the relator/bridge/centrality verification suite at genus `g`.
///
/// `checks` selects check families by name, comma-separated; NULL means all
/// of them. `seed` feeds the sampled quadratic-form spot checks; pass
/// [`trig_default_seed`] to reproduce the command-line tool.
///
/// # Safety
/// `checks` must be NULL or a NUL-terminated string; `out` must be valid
/// for writes or NULL.
#[no_mangle]
pub unsafe extern "C" fn trig_verify(
    g: u64,
    checks: *const c_char,
    seed: u64,
    out: *mut *mut TrigReport,
) -> TrigStatus {
    guarded(|| {
        require!(out);
        let picked = match parse_checks(checks) {
            Ok(p) => p,
            Err(code) => return code,
        };
        match verify_report(g, &picked, seed) {
            Ok(r) => give_report(out, r),
            Err(e) => fail(e),
        }
    })
}

/// Vanishing-lattice report at genus `g`: block decomposition, radical,
/// Arf invariant.
///
/// # Safety
/// `out` must be valid for writes or NULL.
#[no_mangle]
pub unsafe extern "C" fn trig_lattice(g: u64, out: *mut *mut TrigReport) -> TrigStatus {
    guarded(|| {
        require!(out);
        match lattice_report(g) {
            Ok(r) => give_report(out, r),
            Err(e) => fail(e),
        }
    })
}

/// Monodromy-image order report at genus `g`. Guarded to small genus
/// unless `force` is set.
///
/// # Safety
/// `out` must be valid for writes or NULL.
#[no_mangle]
pub unsafe extern "C" fn trig_order(g: u64, force: bool, out: *mut *mut TrigReport) -> TrigStatus {
    guarded(|| {
        require!(out);
        match order_report(g, force) {
            Ok(r) => give_report(out, r),
            Err(e) => fail(e),
        }
    })
}

/// Branch-curve numerology and dual-curve report at genus `g`.
///
/// # Safety
/// `out` must be valid for writes or NULL.
#[no_mangle]
pub unsafe extern "C" fn trig_plucker(g: u64, out: *mut *mut TrigReport) -> TrigStatus {
    guarded(|| {
        require!(out);
        match plucker_report(g) {
            Ok(r) => give_report(out, r),
            Err(e) => fail(e),
        }
    })
}

/// Maroni stratification report at genus `g`: one row per stratum plus the
/// cokernel pattern.
///
/// # Safety
/// `out` must be valid for writes or NULL.
#[no_mangle]
pub unsafe extern "C" fn trig_maroni(g: u64, out: *mut *mut TrigReport) -> TrigStatus {
    guarded(|| {
        require!(out);
        match maroni_report(g) {
            Ok(r) => give_report(out, r),
            Err(e) => fail(e),
        }
    })
}

unsafe fn report_ref<'a>(report: *const TrigReport) -> &'a Report {
    &(*report).inner
}

unsafe fn check_at<'a>(
    report: *const TrigReport,
    index: usize,
) -> Result<&'a trigonal::report::Check, TrigStatus> {
    let checks = report_ref(report).checks();
    checks.get(index).ok_or_else(|| {
        stash_error(format!("check index {index} out of range (len {})", checks.len()));
        TrigStatus::InvalidInput
    })
}

/// Whether every non-info row passed.
///
/// # Safety
/// `report` must come from this library and not be freed; `out` must be
/// valid for writes. Either may be NULL, which is reported.
#[no_mangle]
pub unsafe extern "C" fn trig_report_passed(
    report: *const TrigReport,
    out: *mut bool,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        *out = report_ref(report).passed();
        TrigStatus::Ok
    })
}

/// Number of rows in the report.
///
/// # Safety
/// Same contract as [`trig_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn trig_report_check_count(
    report: *const TrigReport,
    out: *mut usize,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        *out = report_ref(report).checks().len();
        TrigStatus::Ok
    })
}

/// Name of row `index`; caller-owned string.
///
/// # Safety
/// Same contract as [`trig_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn trig_report_check_name(
    report: *const TrigReport,
    index: usize,
    out: *mut *mut c_char,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        match check_at(report, index) {
            Ok(c) => give_string(out, c.name.clone()),
            Err(code) => code,
        }
    })
}

/// Outcome of row `index`.
///
/// # Safety
/// Same contract as [`trig_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn trig_report_check_status(
    report: *const TrigReport,
    index: usize,
    out: *mut TrigCheckStatus,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        match check_at(report, index) {
            Ok(c) => {
                *out = match c.status {
                    Status::Pass => TrigCheckStatus::Pass,
                    Status::Fail => TrigCheckStatus::Fail,
                    Status::Info => TrigCheckStatus::Info,
                };
                TrigStatus::Ok
            }
            Err(code) => code,
        }
    })
}

/// Details of row `index` (possibly empty); caller-owned string.
///
/// # Safety
/// Same contract as [`trig_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn trig_report_check_details(
    report: *const TrigReport,
    index: usize,
    out: *mut *mut c_char,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        match check_at(report, index) {
            Ok(c) => give_string(out, c.details.clone()),
            Err(code) => code,
        }
    })
}

/// Full report rendered as the command-line text format; caller-owned.
///
/// # Safety
/// Same contract as [`trig_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn trig_report_to_text(
    report: *const TrigReport,
    out: *mut *mut c_char,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        give_string(out, report_ref(report).to_string())
    })
}

/// Full report rendered as pretty-printed JSON; caller-owned.
///
/// # Safety
/// Same contract as [`trig_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn trig_report_to_json(
    report: *const TrigReport,
    out: *mut *mut c_char,
) -> TrigStatus {
    guarded(|| {
        require!(report);
        require!(out);
        give_string(out, report_ref(report).to_json())
    })
}

/// Releases a report handle. NULL is a no-op.
///
/// # Safety
/// `report` must come from this library and not already be freed.
#[no_mangle]
pub unsafe extern "C" fn trig_report_free(report: *mut TrigReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string produced by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not already be freed.
#[no_mangle]
pub unsafe extern "C" fn trig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
