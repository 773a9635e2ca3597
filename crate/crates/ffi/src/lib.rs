//! C interface to `toric-brauer`.
//!
//! Fans and reports are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`TbStatus`]; on failure the
//! message is available from [`tb_last_error`] on the same thread until the
//! next failing call. Strings handed out by the library are NUL-terminated
//! UTF-8 and must be released with [`tb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_brauer::cli::{format_structured, format_text, ALL_GROUPS};
use toric_brauer::fan::{
    parse_fan, parse_fan_unchecked, standard_fan, to_json, validate_fan, ParseOptions,
};
use toric_brauer::toric::cohomological_brauer;
use toric_brauer::{BigInt, CohomologyReport, Fan, FanError, FinAbGroup, ToricError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TbStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed fan document.
    Syntax = 3,
    /// Well-formed document describing an invalid fan.
    InvalidFan = 4,
    UnknownGenerator = 5,
    BadParameters = 6,
    /// Nonzero Čech compositions; indicates a library bug.
    Inconsistent = 7,
    /// Index past the end, or a value that does not fit the output type.
    OutOfRange = 8,
    Panic = 9,
}

/// Groups of a [`TbReport`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TbGroup {
    ClassGroup = 0,
    Picard = 1,
    RelativeBrauer = 2,
    DesingBrauer = 3,
    H2 = 4,
}

pub struct TbFan(Fan);

pub struct TbReport(CohomologyReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: TbStatus, msg: impl Into<String>) -> TbStatus {
    set_error(msg);
    status
}

fn fan_status(e: &FanError) -> TbStatus {
    match e {
        FanError::Syntax(_) => TbStatus::Syntax,
        FanError::UnknownGenerator(_) => TbStatus::UnknownGenerator,
        FanError::BadParams(_) => TbStatus::BadParameters,
        _ => TbStatus::InvalidFan,
    }
}

fn guard(f: impl FnOnce() -> TbStatus) -> TbStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(TbStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TbStatus> {
    if s.is_null() {
        return Err(fail(TbStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(TbStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TbStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TbStatus::Ok
        }
        Err(e) => fail(TbStatus::InvalidUtf8, e.to_string()),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return fail(TbStatus::NullArgument, "null pointer argument");
        }
    };
}

/// Message of the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` is null or a string returned by this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a fan document. Non-primitive rays are divided by
/// their gcd when `normalize_rays` is true.
///
/// # Safety
/// `json` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_parse(
    json: *const c_char,
    normalize_rays: bool,
    out: *mut *mut TbFan,
) -> TbStatus {
    guard(|| {
        non_null!(out);
        let doc = match read_str(json) {
            Ok(d) => d,
            Err(s) => return s,
        };
        match parse_fan(doc, ParseOptions { normalize_rays }) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(TbFan(f)));
                TbStatus::Ok
            }
            Err(e) => fail(fan_status(&e), e.to_string()),
        }
    })
}

/// Builds a named standard fan, e.g. `"projective"` with `{2}`.
///
/// # Safety
/// `name` is a NUL-terminated string, `params` points to `n_params` values
/// (or is null when `n_params` is 0) and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_generate(
    name: *const c_char,
    params: *const i64,
    n_params: usize,
    out: *mut *mut TbFan,
) -> TbStatus {
    guard(|| {
        non_null!(out);
        if params.is_null() && n_params > 0 {
            return fail(TbStatus::NullArgument, "null parameter array");
        }
        let name = match read_str(name) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let params = if n_params == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(params, n_params)
        };
        match standard_fan(name, params) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(TbFan(f)));
                TbStatus::Ok
            }
            Err(e) => fail(fan_status(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `fan` is null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_free(fan: *mut TbFan) {
    if !fan.is_null() {
        drop(Box::from_raw(fan));
    }
}

/// # Safety
/// `fan` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_rank(fan: *const TbFan) -> usize {
    (*fan).0.rank()
}

/// # Safety
/// `fan` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_ray_count(fan: *const TbFan) -> usize {
    (*fan).0.rays().len()
}

/// # Safety
/// `fan` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_cone_count(fan: *const TbFan) -> usize {
    (*fan).0.max_cones().len()
}

/// Writes the fan in the fan file format.
///
/// # Safety
/// `fan` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_to_json(fan: *const TbFan, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        non_null!(fan, out);
        write_string(out, to_json(&(*fan).0))
    })
}

/// Checks a fan document without rejecting it. `*violations` receives the
/// number of violations and `*report` one finding per line. A malformed
/// document fails with [`TbStatus::Syntax`].
///
/// # Safety
/// `json` is a NUL-terminated string; `violations` and `report` are writable.
#[no_mangle]
pub unsafe extern "C" fn tb_validate(
    json: *const c_char,
    normalize_rays: bool,
    violations: *mut usize,
    report: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(violations, report);
        let doc = match read_str(json) {
            Ok(d) => d,
            Err(s) => return s,
        };
        let mut text = String::new();
        let count = match parse_fan_unchecked(doc, ParseOptions { normalize_rays }) {
            Ok(fan) => {
                let findings = validate_fan(&fan);
                for f in &findings {
                    writeln!(text, "{f}").unwrap();
                }
                findings.iter().filter(|f| f.is_violation()).count()
            }
            Err(e @ FanError::Syntax(_)) => return fail(TbStatus::Syntax, e.to_string()),
            Err(e) => {
                writeln!(text, "violation: {e}").unwrap();
                1
            }
        };
        *violations = count;
        write_string(report, text)
    })
}

/// Computes every group of the fan.
///
/// # Safety
/// `fan` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_report_compute(fan: *const TbFan, out: *mut *mut TbReport) -> TbStatus {
    guard(|| {
        non_null!(fan, out);
        match cohomological_brauer(&(*fan).0) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(TbReport(r)));
                TbStatus::Ok
            }
            Err(ToricError::InternalInconsistency(m)) => fail(TbStatus::Inconsistent, m),
        }
    })
}

/// # Safety
/// `report` is null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tb_report_free(report: *mut TbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Rank of the unit characters.
///
/// # Safety
/// `report` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_report_units_rank(report: *const TbReport) -> usize {
    (*report).0.units_rank
}

struct Parts<'a> {
    rank: usize,
    qz: usize,
    torsion: &'a [BigInt],
    text: String,
}

fn parts(r: &CohomologyReport, g: TbGroup) -> Parts<'_> {
    match g {
        TbGroup::ClassGroup => finitely_generated(&r.class_group),
        TbGroup::Picard => finitely_generated(&r.picard),
        TbGroup::RelativeBrauer => finitely_generated(&r.relative_brauer),
        TbGroup::DesingBrauer => Parts {
            rank: 0,
            qz: r.desing_brauer.qz,
            torsion: &r.desing_brauer.torsion,
            text: r.desing_brauer.to_string(),
        },
        TbGroup::H2 => Parts {
            rank: r.h2.rank,
            qz: r.h2.qz,
            torsion: &r.h2.torsion,
            text: r.h2.to_string(),
        },
    }
}

fn finitely_generated(g: &FinAbGroup) -> Parts<'_> {
    Parts {
        rank: g.free_rank(),
        qz: 0,
        torsion: g.torsion(),
        text: g.to_string(),
    }
}

/// Free rank of a group.
///
/// # Safety
/// `report` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_report_group_rank(report: *const TbReport, group: TbGroup) -> usize {
    parts(&(*report).0, group).rank
}

/// Number of `Q/Z` summands of a group (always 0 for Cl, Pic and the
/// relative Brauer group).
///
/// # Safety
/// `report` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_report_group_qz(report: *const TbReport, group: TbGroup) -> usize {
    parts(&(*report).0, group).qz
}

/// Length of the torsion chain `t₁ | t₂ | …` of a group.
///
/// # Safety
/// `report` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn tb_report_group_torsion_len(
    report: *const TbReport,
    group: TbGroup,
) -> usize {
    parts(&(*report).0, group).torsion.len()
}

/// Torsion coefficient `index` of a group. Fails with
/// [`TbStatus::OutOfRange`] past the end or when the value exceeds `i64`;
/// [`tb_report_group_torsion_string`] has no size limit.
///
/// # Safety
/// `report` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_report_group_torsion(
    report: *const TbReport,
    group: TbGroup,
    index: usize,
    out: *mut i64,
) -> TbStatus {
    guard(|| {
        non_null!(report, out);
        let p = parts(&(*report).0, group);
        let Some(t) = p.torsion.get(index) else {
            return fail(
                TbStatus::OutOfRange,
                format!("torsion index {index} of {}", p.torsion.len()),
            );
        };
        match i64::try_from(t) {
            Ok(v) => {
                *out = v;
                TbStatus::Ok
            }
            Err(_) => fail(
                TbStatus::OutOfRange,
                format!("torsion coefficient {t} exceeds 64 bits"),
            ),
        }
    })
}

/// Torsion coefficient `index` of a group in decimal.
///
/// # Safety
/// `report` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_report_group_torsion_string(
    report: *const TbReport,
    group: TbGroup,
    index: usize,
    out: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(report, out);
        let p = parts(&(*report).0, group);
        match p.torsion.get(index) {
            Some(t) => write_string(out, t.to_string()),
            None => fail(
                TbStatus::OutOfRange,
                format!("torsion index {index} of {}", p.torsion.len()),
            ),
        }
    })
}

/// A group in text notation, e.g. `"Z (+) Z/2"`.
///
/// # Safety
/// `report` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_report_group_to_string(
    report: *const TbReport,
    group: TbGroup,
    out: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(report, out);
        write_string(out, parts(&(*report).0, group).text)
    })
}

/// The full report as the command-line tool prints it with
/// `--format structured`.
///
/// # Safety
/// `report` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_report_to_json(
    report: *const TbReport,
    out: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(report, out);
        write_string(out, format_structured(&(*report).0, &ALL_GROUPS))
    })
}

/// The full report in the command-line tool's text layout.
///
/// # Safety
/// `report` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn tb_report_to_text(
    report: *const TbReport,
    out: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(report, out);
        write_string(out, format_text(&(*report).0, &ALL_GROUPS))
    })
}
