use std::ffi::{CStr, CString};
use std::ptr;

use gtskew_ffi::*;

fn last_error() -> String {
    let p = gtskew_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    gtskew_string_free(s);
    out
}

unsafe fn shape(m: usize, n: usize, r: usize, lambda: &[i64], mu: &[i64]) -> Result<*mut GtskewShape, GtskewStatus> {
    let mut s = ptr::null_mut();
    match gtskew_shape_new(m, n, r, lambda.as_ptr(), lambda.len(), mu.as_ptr(), mu.len(), &mut s) {
        GtskewStatus::Ok => Ok(s),
        e => Err(e),
    }
}

#[test]
fn version_and_no_error() {
    let v = unsafe { CStr::from_ptr(gtskew_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    unsafe {
        let s = shape(1, 1, 0, &[1, 0], &[]).unwrap();
        assert!(gtskew_last_error().is_null());
        gtskew_shape_free(s);
    }
}

#[test]
fn shape_dimension_and_tableaux() {
    unsafe {
        let s = shape(2, 1, 0, &[2, 1, 0], &[]).unwrap();
        let mut dim = 0;
        assert_eq!(gtskew_shape_dimension(s, &mut dim), GtskewStatus::Ok);
        let mut js = ptr::null_mut();
        assert_eq!(gtskew_shape_tableaux_json(s, &mut js), GtskewStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(js)).unwrap();
        assert_eq!(v["tableaux"].as_array().unwrap().len(), dim);
        assert_eq!(v["shape"]["m"], 2);
        assert!(dim > 1);
        gtskew_shape_free(s);
    }
}

#[test]
fn invalid_input_reports_errors() {
    unsafe {
        assert_eq!(shape(1, 1, 0, &[0, 1], &[]).unwrap_err(), GtskewStatus::InvalidShape);
        assert!(last_error().contains("invalid shape"));
        let mut s = ptr::null_mut();
        assert_eq!(gtskew_shape_new(1, 1, 0, ptr::null(), 2, ptr::null(), 0, &mut s), GtskewStatus::NullPointer);
        assert!(s.is_null());
        let mut dim = 0;
        assert_eq!(gtskew_shape_dimension(ptr::null(), &mut dim), GtskewStatus::NullPointer);
        assert!(last_error().contains("shape"));
        let good = shape(1, 1, 0, &[1, 0], &[]).unwrap();
        assert_eq!(gtskew_shape_dimension(good, ptr::null_mut()), GtskewStatus::NullPointer);
        let mut q = ptr::null_mut();
        assert_eq!(gtskew_qcurrents_new(good, &mut q), GtskewStatus::Ok);
        let mut passed = false;
        assert_eq!(
            gtskew_qcurrents_verify(q, 0, 5, 0, &mut passed, ptr::null_mut()),
            GtskewStatus::InvalidArgument
        );
        gtskew_qcurrents_free(q);
        gtskew_shape_free(good);
        // freeing null is a no-op
        gtskew_shape_free(ptr::null_mut());
        gtskew_currents_free(ptr::null_mut());
        gtskew_string_free(ptr::null_mut());
    }
}

#[test]
fn yangian_currents_verify() {
    unsafe {
        let s = shape(1, 2, 0, &[2, 1, 0], &[]).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(gtskew_currents_new(s, &mut c), GtskewStatus::Ok);
        let (mut thin, mut irr, mut passed) = (false, false, false);
        assert_eq!(gtskew_currents_is_thin(c, &mut thin), GtskewStatus::Ok);
        assert_eq!(gtskew_currents_is_irreducible(c, &mut irr), GtskewStatus::Ok);
        assert!(thin && irr);
        let mut report = ptr::null_mut();
        assert_eq!(gtskew_currents_verify(c, 10, 4, 3, &mut passed, &mut report), GtskewStatus::Ok);
        let r: serde_json::Value = serde_json::from_str(&take(report)).unwrap();
        assert!(passed, "{r}");
        let mut dim = 0;
        gtskew_currents_dimension(c, &mut dim);
        let mut q = ptr::null_mut();
        assert_eq!(gtskew_currents_qchar_json(c, &mut q), GtskewStatus::Ok);
        let qchar: Vec<(serde_json::Value, usize)> = serde_json::from_str(&take(q)).unwrap();
        assert_eq!(qchar.len(), dim);
        let mut js = ptr::null_mut();
        assert_eq!(gtskew_currents_json(c, &mut js), GtskewStatus::Ok);
        assert!(take(js).contains("x_plus"));
        gtskew_currents_free(c);
        gtskew_shape_free(s);
    }
}

#[test]
fn quantum_currents_verify() {
    unsafe {
        let s = shape(1, 1, 1, &[2, 1, 0], &[1]).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(gtskew_qcurrents_new(s, &mut c), GtskewStatus::Ok);
        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(gtskew_qcurrents_verify(c, 3, 5, 1, &mut passed, &mut report), GtskewStatus::Ok);
        let r = take(report);
        assert!(passed, "{r}");
        let mut js = ptr::null_mut();
        assert_eq!(gtskew_qcurrents_modes_json(c, 1, &mut js), GtskewStatus::Ok);
        let modes: Vec<serde_json::Value> = serde_json::from_str(&take(js)).unwrap();
        assert!(modes.iter().all(|m| m["mode"].as_i64().unwrap().abs() <= 1));
        assert!(modes.iter().any(|m| m["entries"][0][2]["qshift"].is_i64()));
        gtskew_qcurrents_free(c);
        gtskew_shape_free(s);
    }
}

#[test]
fn gl11_verdicts() {
    unsafe {
        let mut v = GtskewGl11Verdict::default();
        let spec = CString::new(r#"[["3","0"],["-1","0"]]"#).unwrap();
        assert_eq!(gtskew_gl11_analyze(spec.as_ptr(), &mut v), GtskewStatus::Ok);
        assert_eq!(v, GtskewGl11Verdict { dim: 4, thin: true, tame: true, flipped_tame: false });
        let double = CString::new(r#"[["2","0"],["2","1"]]"#).unwrap();
        assert_eq!(gtskew_gl11_analyze(double.as_ptr(), &mut v), GtskewStatus::Ok);
        assert!(!v.tame && !v.thin);
        let resonant = CString::new(r#"[["1","-1"]]"#).unwrap();
        assert_eq!(gtskew_gl11_analyze(resonant.as_ptr(), &mut v), GtskewStatus::InvalidShape);
        let junk = CString::new("not json").unwrap();
        assert_eq!(gtskew_gl11_analyze(junk.as_ptr(), &mut v), GtskewStatus::InvalidShape);
        assert_eq!(gtskew_gl11_analyze(ptr::null(), &mut v), GtskewStatus::NullPointer);
    }
}
