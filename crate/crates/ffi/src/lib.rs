//! C ABI over `tan-core`: opaque category handles, status codes and a
//! thread-local last-error message.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tan_core::ainfty::spec::parse_category;
use tan_core::ainfty::{check_relations, check_units, AInftyCategory};
use tan_core::exactlin::{Field, SignConvention};
use tan_core::io::{element_to_json, envelope, parse_horn};
use tan_core::necklace::Necklace;
use tan_core::nerve::Nerve;
use tan_core::quasicat::{horn_compatible, horn_fill, verify_filler};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TanStatus {
    Ok = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    NullPointer = 3,
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TanSignConvention {
    Koszul = 0,
    Plain = 1,
}

impl From<TanSignConvention> for SignConvention {
    fn from(c: TanSignConvention) -> Self {
        match c {
            TanSignConvention::Koszul => SignConvention::Koszul,
            TanSignConvention::Plain => SignConvention::Plain,
        }
    }
}

/// Opaque handle to a loaded category.
pub struct TanCategory {
    inner: AInftyCategory,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Failure = (TanStatus, String);

fn invalid(msg: impl ToString) -> Failure {
    (TanStatus::InvalidInput, msg.to_string())
}

fn guard(f: impl FnOnce() -> Result<TanStatus, Failure>) -> TanStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TanStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err((TanStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(format!("{name} is not UTF-8")))
}

unsafe fn category<'a>(p: *const TanCategory) -> Result<&'a AInftyCategory, Failure> {
    p.as_ref()
        .map(|c| &c.inner)
        .ok_or_else(|| (TanStatus::NullPointer, "category is null".to_string()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err((TanStatus::NullPointer, "output pointer is null".into()));
    }
    *out = value;
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

/// Parses a JSON category spec. `field` may be null to keep the field named in
/// the spec. On success `*out` owns a handle released by `tan_category_free`.
///
/// # Safety
/// `json` and a non-null `field` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tan_category_load_json(
    json: *const c_char,
    field: *const c_char,
    out: *mut *mut TanCategory,
) -> TanStatus {
    guard(|| {
        let json = text(json, "json")?;
        let field = if field.is_null() {
            None
        } else {
            Some(text(field, "field")?.parse::<Field>().map_err(invalid)?)
        };
        let inner = parse_category(json, field).map_err(invalid)?;
        write_out(out, Box::into_raw(Box::new(TanCategory { inner })))?;
        Ok(TanStatus::Ok)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `cat` must come from `tan_category_load_json` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tan_category_free(cat: *mut TanCategory) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// Number of objects.
///
/// # Safety
/// `cat` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tan_category_object_count(cat: *const TanCategory, out: *mut usize) -> TanStatus {
    guard(|| {
        write_out(out, category(cat)?.object_count())?;
        Ok(TanStatus::Ok)
    })
}

/// Dimension of the nerve component at the necklace with comma-separated
/// bead lengths `beads` (empty for Δ⁰) between the named objects.
///
/// # Safety
/// `cat` must be a live handle; strings nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tan_nerve_dimension(
    cat: *const TanCategory,
    beads: *const c_char,
    from: *const c_char,
    to: *const c_char,
    convention: TanSignConvention,
    out: *mut usize,
) -> TanStatus {
    guard(|| {
        let a = category(cat)?;
        let t = Necklace::parse(text(beads, "beads")?).map_err(invalid)?;
        let object = |p, name| -> Result<usize, Failure> {
            let s = text(p, name)?;
            a.object(s).ok_or_else(|| invalid(format!("unknown object {s:?}")))
        };
        let (x, y) = (object(from, "from")?, object(to, "to")?);
        let nerve = Nerve::new(a, convention.into());
        write_out(out, nerve.dimension(&t, x, y))?;
        Ok(TanStatus::Ok)
    })
}

/// Checks the A∞ relations up to arity `kmax` (0 selects the default) and the
/// units. Returns `Ok` or `VerificationFailed`; when `report` is non-null it
/// receives the JSON report, released by `tan_string_free`.
///
/// # Safety
/// `cat` must be a live handle; `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn tan_check_relations(
    cat: *const TanCategory,
    kmax: usize,
    report: *mut *mut c_char,
) -> TanStatus {
    guard(|| {
        let a = category(cat)?;
        let k = if kmax == 0 { a.max_degree() + 3 } else { kmax };
        let relations = check_relations(a, k);
        let units = check_units(a);
        let passed = relations.passed() && units.passed();
        if !report.is_null() {
            let details = serde_json::json!({ "relations": relations, "units": units });
            *report = c_string(envelope("check", passed, details).to_string());
        }
        Ok(if passed { TanStatus::Ok } else { TanStatus::VerificationFailed })
    })
}

/// Fills the inner horn given as JSON and writes the filler as JSON to `*out`.
/// An incompatible horn returns `VerificationFailed` with the violations in
/// the last-error message.
///
/// # Safety
/// `cat` must be a live handle; `horn_json` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tan_horn_fill_json(
    cat: *const TanCategory,
    horn_json: *const c_char,
    convention: TanSignConvention,
    out: *mut *mut c_char,
) -> TanStatus {
    guard(|| {
        let a = category(cat)?;
        let h = parse_horn(a, text(horn_json, "horn_json")?).map_err(invalid)?;
        if out.is_null() {
            return Err((TanStatus::NullPointer, "output pointer is null".into()));
        }
        let nerve = Nerve::new(a, convention.into());
        let compat = horn_compatible(&nerve, &h).map_err(invalid)?;
        if !compat.passed() {
            return Err((TanStatus::VerificationFailed, compat.violations.join("; ")));
        }
        let z = horn_fill(&nerve, &h).map_err(invalid)?;
        let verdict = verify_filler(&nerve, &h, &z).map_err(invalid)?;
        if !verdict.passed() {
            return Err((TanStatus::VerificationFailed, verdict.violations.join("; ")));
        }
        let json = serde_json::to_string(&element_to_json(a, &z)).expect("serializable");
        *out = c_string(json);
        Ok(TanStatus::Ok)
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn tan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
