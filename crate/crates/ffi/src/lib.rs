//! C ABI over `concordance-core`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Strings returned through `out` parameters are
//! NUL-terminated UTF-8 and must be released with [`cs_string_free`]. Every
//! fallible call returns a [`CsStatus`]; on failure the message is available
//! from [`cs_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use concordance_core::cover::{homology, order_fox, FiniteAbelianGroup, DEFAULT_ENUMERATION_BOUND};
use concordance_core::dinv::{d_twist, CorrectionTable};
use concordance_core::obstruct::{theorem1_verdict, twist_report, Outcome};
use concordance_core::{rational, Error, SeifertMatrix};
use libc::c_char;
use serde_json::{json, Value};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed or invalid Seifert matrix text.
    Parse = 3,
    InvalidArgument = 4,
    /// A group too large to enumerate.
    TooLarge = 5,
    /// The computation has no finite answer or a hypothesis failed.
    Computation = 6,
    Panic = 7,
}

/// Opaque Seifert matrix.
pub struct CsSeifert(SeifertMatrix);

/// Opaque finite abelian group in invariant-factor form.
pub struct CsGroup(FiniteAbelianGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CsStatus {
    match e {
        Error::Parse { .. }
        | Error::NotSquare { .. }
        | Error::OddDimension(_)
        | Error::NotUnimodularIntersection(_) => CsStatus::Parse,
        Error::GroupTooLarge { .. } => CsStatus::TooLarge,
        Error::InfiniteHomology
        | Error::NotMetabolizer(_)
        | Error::HypothesisViolation(_)
        | Error::NoAlignment(_) => CsStatus::Computation,
        _ => CsStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard<F>(f: F) -> CsStatus
where
    F: FnOnce() -> Result<(), (CsStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CsStatus::Panic
        }
    }
}

fn core<T>(r: concordance_core::Result<T>) -> Result<T, (CsStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (CsStatus, String) {
    (CsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CsStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (CsStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (CsStatus::InvalidArgument, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn seifert<'a>(s: *const CsSeifert) -> Result<&'a SeifertMatrix, (CsStatus, String)> {
    s.as_ref().map(|s| &s.0).ok_or_else(|| null("seifert"))
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the text format: `#` comment lines, then one row per line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_seifert_parse(text: *const c_char, out: *mut *mut CsSeifert) -> CsStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s: SeifertMatrix = core(text.parse())?;
        *out = Box::into_raw(Box::new(CsSeifert(s)));
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_seifert_twist(k: i64, out: *mut *mut CsSeifert) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(CsSeifert(SeifertMatrix::twist(k))));
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_seifert_free(s: *mut CsSeifert) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Genus, or 0 for a NULL handle.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_seifert_genus(s: *const CsSeifert) -> usize {
    s.as_ref().map_or(0, |s| s.0.genus())
}

/// Alexander polynomial as text, e.g. `-2t^2 + 5t - 2`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_alexander(s: *const CsSeifert, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let s = seifert(s)?;
        write_string(out, s.alexander().to_string())
    })
}

/// `|H₁(Σⁿ(K))|` from the resultant, in decimal.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_order_fox(s: *const CsSeifert, n: u64, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let s = seifert(s)?;
        write_string(out, core(order_fox(s, n))?.to_string())
    })
}

/// `H₁(Σⁿ(K))` as a group handle.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_homology(s: *const CsSeifert, n: u64, out: *mut *mut CsGroup) -> CsStatus {
    guard(|| {
        let s = seifert(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = core(homology(s, n))?.group;
        *out = Box::into_raw(Box::new(CsGroup(g)));
        Ok(())
    })
}

/// Number of invariant factors, or 0 for a NULL handle.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_group_factor_count(g: *const CsGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.factors().len())
}

/// The `i`-th invariant factor in decimal.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_group_factor(g: *const CsGroup, i: usize, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("group"))?;
        let d = g.0.factors().get(i).ok_or_else(|| {
            (CsStatus::InvalidArgument, format!("factor index {i} out of range"))
        })?;
        write_string(out, d.to_string())
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_group_free(g: *mut CsGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// `d(L(4k+1, 2), s₀ + j)` as `"num/den"`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_d_twist(k: i64, j: i64, out: *mut *mut c_char) -> CsStatus {
    guard(|| write_string(out, rational::format(&core(d_twist(k, j))?)))
}

/// Twist-knot sweep as a JSON array of `{k, p, dbar, class, consistent}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_twist_report_json(kmax: i64, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let rows: Vec<Value> = core(twist_report(kmax))?
            .iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "p": r.p,
                    "dbar": rational::format(&r.value),
                    "class": r.class.as_str(),
                    "consistent": r.consistent,
                })
            })
            .collect();
        write_string(out, Value::Array(rows).to_string())
    })
}

/// Square-root-order subgroup verdict as JSON. `table_json` may be NULL for
/// twist knots with `n = 2`.
///
/// # Safety
/// `s` must be a live handle, `table_json` NULL or a NUL-terminated string,
/// and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_verdict_json(
    s: *const CsSeifert,
    n: u64,
    table_json: *const c_char,
    out: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        let s = seifert(s)?;
        let table = if table_json.is_null() {
            None
        } else {
            Some(core(CorrectionTable::from_json(read_str(table_json, "table_json")?))?)
        };
        let v = core(theorem1_verdict(s, n, table.as_ref(), DEFAULT_ENUMERATION_BOUND))?;
        let factors: Vec<String> = v.group.factors().iter().map(ToString::to_string).collect();
        let mut obj = json!({ "group": factors, "verdict": v.name() });
        match &v.outcome {
            Outcome::Passes { witness } => obj["witness"] = json!(witness),
            Outcome::NoSquareOrderSubgroup { order } => obj["order"] = json!(order.to_string()),
            Outcome::NoVanishingSubgroup { evidence } => {
                obj["evidence"] = evidence
                    .iter()
                    .map(|(sub, values)| {
                        let values: Vec<String> = values.iter().map(rational::format).collect();
                        json!({ "subgroup": sub, "dbar": values })
                    })
                    .collect();
            }
        }
        write_string(out, obj.to_string())
    })
}
