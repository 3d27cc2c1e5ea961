//! C ABI for gtskew.
//!
//! Objects are opaque handles created by `*_new` functions and released
//! with the matching `*_free`. Every fallible function returns a
//! [`GtskewStatus`]; on failure the message is available from
//! [`gtskew_last_error`] until the next call on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with [`gtskew_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gtskew::gl11::{analyze_tameness, parity_flip_tameness, Gl11ModuleSpec};
use gtskew::qaffine::{self, QCurrentRep, QVerifyOptions};
use gtskew::tableaux::{enumerate_tableaux, SkewShape};
use gtskew::yangian::{self, CurrentRep, VerifyOptions};
use gtskew::{Error, Report};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GtskewStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidShape = 3,
    ComputationError = 4,
    Panic = 5,
}

/// A validated skew shape `(m, n, r, λ, μ)`.
pub struct GtskewShape(SkewShape);

/// Drinfeld currents of the Yangian on the GT basis of a skew shape.
pub struct GtskewCurrents(CurrentRep);

/// Currents of the quantum affine superalgebra on the GT basis.
pub struct GtskewQCurrents(QCurrentRep);

/// Thin/tame verdict for a gl(1|1) tensor product.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GtskewGl11Verdict {
    pub dim: usize,
    pub thin: bool,
    pub tame: bool,
    pub flipped_tame: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(GtskewStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidShape(_) | Error::InvalidSpec(_) => GtskewStatus::InvalidShape,
            _ => GtskewStatus::ComputationError,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(GtskewStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GtskewStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GtskewStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            GtskewStatus::Panic
        }
    }
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(GtskewStatus::ComputationError, e.to_string()))?;
    put(out, c.into_raw(), "out")
}

fn json<T: serde::Serialize>(x: &T) -> Result<String, Fail> {
    serde_json::to_string(x).map_err(|e| Fail(GtskewStatus::ComputationError, e.to_string()))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next gtskew call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn gtskew_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn gtskew_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(c) => c,
        Err(_) => panic!("version string"),
    };
    V.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gtskew_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates and creates a skew shape; `lambda` has `m + n + r` entries and
/// `mu` has `r` entries (may be null when `r = 0`).
///
/// # Safety
/// `lambda` and `mu` must point to `lambda_len` and `mu_len` readable values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_shape_new(
    m: usize,
    n: usize,
    r: usize,
    lambda: *const i64,
    lambda_len: usize,
    mu: *const i64,
    mu_len: usize,
    out: *mut *mut GtskewShape,
) -> GtskewStatus {
    guard(|| {
        let lambda = slice(lambda, lambda_len, "lambda")?.to_vec();
        let mu = slice(mu, mu_len, "mu")?.to_vec();
        let shape = SkewShape::new(m, n, r, lambda, mu)?;
        put(out, Box::into_raw(Box::new(GtskewShape(shape))), "out")
    })
}

/// # Safety
/// `shape` must be null or a live handle from [`gtskew_shape_new`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_shape_free(shape: *mut GtskewShape) {
    if !shape.is_null() {
        drop(Box::from_raw(shape));
    }
}

/// Number of admissible GT tableaux, i.e. the dimension of the module.
///
/// # Safety
/// `shape` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_shape_dimension(shape: *const GtskewShape, out: *mut usize) -> GtskewStatus {
    guard(|| {
        let s = handle(shape, "shape")?;
        put(out, enumerate_tableaux(&s.0).len(), "out")
    })
}

/// The shape and its GT basis as JSON `{"shape": …, "tableaux": […]}`.
///
/// # Safety
/// `shape` must be a live handle; `out` writable. Free the result with
/// [`gtskew_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_shape_tableaux_json(shape: *const GtskewShape, out: *mut *mut c_char) -> GtskewStatus {
    guard(|| {
        let s = handle(shape, "shape")?;
        let v = serde_json::json!({"shape": s.0, "tableaux": enumerate_tableaux(&s.0)});
        put_string(out, json(&v)?)
    })
}

/// # Safety
/// `shape` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_new(shape: *const GtskewShape, out: *mut *mut GtskewCurrents) -> GtskewStatus {
    guard(|| {
        let s = handle(shape, "shape")?;
        let rep = yangian::build_current_rep(&s.0)?;
        put(out, Box::into_raw(Box::new(GtskewCurrents(rep))), "out")
    })
}

/// # Safety
/// `c` must be null or a live handle from [`gtskew_currents_new`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_free(c: *mut GtskewCurrents) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_dimension(c: *const GtskewCurrents, out: *mut usize) -> GtskewStatus {
    guard(|| put(out, handle(c, "currents")?.0.basis.len(), "out"))
}

/// ℓ-weights pairwise distinct.
///
/// # Safety
/// `c` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_is_thin(c: *const GtskewCurrents, out: *mut bool) -> GtskewStatus {
    guard(|| put(out, yangian::is_thin(&handle(c, "currents")?.0), "out"))
}

/// Thin and strongly connected along nonzero transformations.
///
/// # Safety
/// `c` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_is_irreducible(c: *const GtskewCurrents, out: *mut bool) -> GtskewStatus {
    guard(|| put(out, yangian::is_irreducible(&handle(c, "currents")?.0).irreducible, "out"))
}

/// The currents as JSON (rational functions as `{"num": […], "den": […]}`).
///
/// # Safety
/// `c` must be a live handle; `out` writable. Free with [`gtskew_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_json(c: *const GtskewCurrents, out: *mut *mut c_char) -> GtskewStatus {
    guard(|| put_string(out, json(&handle(c, "currents")?.0)?))
}

/// q-character as JSON: a list of `[ℓ-weight, multiplicity]`.
///
/// # Safety
/// `c` must be a live handle; `out` writable. Free with [`gtskew_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_qchar_json(c: *const GtskewCurrents, out: *mut *mut c_char) -> GtskewStatus {
    guard(|| put_string(out, json(&yangian::q_character(&handle(c, "currents")?.0))?))
}

fn finish(report: Report, passed: *mut bool, report_json: *mut *mut c_char) -> Result<(), Fail> {
    unsafe {
        put(passed, report.passed(), "passed")?;
        if !report_json.is_null() {
            put_string(report_json, json(&report)?)?;
        }
    }
    Ok(())
}

/// Drinfeld relations, central series, thinness, irreducibility and
/// nonvanishing. `report_json` may be null; otherwise it receives the check
/// list (free with [`gtskew_string_free`]).
///
/// # Safety
/// `c` must be a live handle; `passed` writable; `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_currents_verify(
    c: *const GtskewCurrents,
    samples: usize,
    order: usize,
    seed: u64,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> GtskewStatus {
    guard(|| {
        let rep = &handle(c, "currents")?.0;
        let opts = VerifyOptions { samples, order, seed };
        let mut report = yangian::verify_drinfeld_relations(rep, &opts)?;
        report.extend(yangian::verify_central_series(rep, order)?.0);
        report.record("thin", yangian::is_thin(rep), None);
        report.record("irreducible", yangian::is_irreducible(rep).irreducible, None);
        report.extend(yangian::check_nonvanishing(rep));
        finish(report, passed, report_json)
    })
}

/// # Safety
/// `shape` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_qcurrents_new(shape: *const GtskewShape, out: *mut *mut GtskewQCurrents) -> GtskewStatus {
    guard(|| {
        let s = handle(shape, "shape")?;
        let rep = qaffine::build_q_current_rep(&s.0)?;
        put(out, Box::into_raw(Box::new(GtskewQCurrents(rep))), "out")
    })
}

/// # Safety
/// `c` must be null or a live handle from [`gtskew_qcurrents_new`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_qcurrents_free(c: *mut GtskewQCurrents) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Modes `x_{k,a}^±` for `|a| ≤ window` as JSON, `ℚ(q)` entries as
/// `{"num": […], "den": […], "qshift": e}`.
///
/// # Safety
/// `c` must be a live handle; `out` writable. Free with [`gtskew_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gtskew_qcurrents_modes_json(
    c: *const GtskewQCurrents,
    window: i64,
    out: *mut *mut c_char,
) -> GtskewStatus {
    guard(|| {
        let rep = &handle(c, "quantum currents")?.0;
        if window < 0 {
            return Err(Fail(GtskewStatus::InvalidArgument, "window must be nonnegative".into()));
        }
        put_string(out, json(&rep.x_modes(window))?)
    })
}

/// Quantum relation suite on modes `|a| ≤ window` plus thinness,
/// irreducibility and central series.
///
/// # Safety
/// `c` must be a live handle; `passed` writable; `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_qcurrents_verify(
    c: *const GtskewQCurrents,
    window: i64,
    samples: usize,
    seed: u64,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> GtskewStatus {
    guard(|| {
        let rep = &handle(c, "quantum currents")?.0;
        if window < 1 {
            return Err(Fail(GtskewStatus::InvalidArgument, "window must be at least 1".into()));
        }
        let opts = QVerifyOptions { window, samples, seed };
        let mut report = qaffine::verify_q_relations(rep, &opts)?;
        report.record("central series is scalar", qaffine::q_central_series(rep).is_some(), None);
        report.record("thin", qaffine::is_q_thin(rep), None);
        report.record("irreducible", qaffine::is_q_irreducible(rep).irreducible, None);
        report.extend(qaffine::check_q_nonvanishing(rep));
        finish(report, passed, report_json)
    })
}

/// Verdict for `⊗ L(a_i, b_i)` given as a JSON list of `[a, b]` rational
/// strings, e.g. `[["3","0"],["-1","0"]]`.
///
/// # Safety
/// `spec_json` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gtskew_gl11_analyze(spec_json: *const c_char, out: *mut GtskewGl11Verdict) -> GtskewStatus {
    guard(|| {
        if spec_json.is_null() {
            return Err(null("spec_json"));
        }
        let text = CStr::from_ptr(spec_json)
            .to_str()
            .map_err(|e| Fail(GtskewStatus::InvalidArgument, e.to_string()))?;
        let spec: Gl11ModuleSpec =
            serde_json::from_str(text).map_err(|e| Fail(GtskewStatus::InvalidShape, e.to_string()))?;
        let v = analyze_tameness(&spec)?;
        let flipped = parity_flip_tameness(&spec)?;
        put(
            out,
            GtskewGl11Verdict {
                dim: 1 << spec.k(),
                thin: v.thin,
                tame: v.tame,
                flipped_tame: flipped.tame,
            },
            "out",
        )
    })
}
