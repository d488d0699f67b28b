use std::ffi::CStr;
use std::ptr;

use rectify_ffi::*;

#[test]
fn scalar_entry_points() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(rectify_ellint_k(1.0 / 2f64.sqrt(), &mut v), RectifyStatus::Ok);
        assert!((v - 1.854_074_677_301_37).abs() < 1e-14);
        assert_eq!(rectify_ellint_e(0.75f64.sqrt(), &mut v), RectifyStatus::Ok);
        assert!((v - 1.211_056_027_568_46).abs() < 1e-14);
        assert_eq!(rectify_ellint_f(std::f64::consts::FRAC_PI_2, 0.5, &mut v), RectifyStatus::Ok);
        let mut k = 0.0;
        rectify_ellint_k(0.5, &mut k);
        assert!((v - k).abs() < 1e-14);
        assert_eq!(rectify_ellint_einc(1.0, 0.0, &mut v), RectifyStatus::Ok);
        assert!((v - 1.0).abs() < 1e-15);
        assert_eq!(rectify_agm(1.0, 2f64.sqrt(), &mut v), RectifyStatus::Ok);
        assert!((v - 1.198_140_234_735_59).abs() < 1e-14);
    }
}

#[test]
fn excess_entry_points_agree() {
    let (mut closed, mut landen, mut series, mut finite) = (0.0, 0.0, 0.0, 0.0);
    unsafe {
        assert_eq!(rectify_excess_closed(1.0, 8f64.sqrt(), &mut closed), RectifyStatus::Ok);
        assert_eq!(rectify_excess_landen(2.0, 1.0, &mut landen), RectifyStatus::Ok);
        assert_eq!(rectify_excess_series(0.1, 1.0, 3, &mut series), RectifyStatus::Ok);
        assert_eq!(rectify_excess_finite(1.0, 8f64.sqrt(), 1e-4, &mut finite), RectifyStatus::Ok);
        assert_eq!(rectify_excess_series(0.1, 1.0, 4, &mut series), RectifyStatus::Domain);
    }
    assert!((closed - 0.265_596_407_637).abs() < 1e-11);
    assert!((closed - landen).abs() < 1e-13);
    assert!((finite - closed).abs() < 1e-6);
}

#[test]
fn checks_pass() {
    let mut r = RectifyResidual::default();
    unsafe {
        assert_eq!(rectify_check_gleichung(1.0, 0.5, &mut r), RectifyStatus::Ok);
        assert!(r.residual < 1e-12 && r.lhs > 0.0);
        assert_eq!(rectify_check_borwein(0.9, &mut r), RectifyStatus::Ok);
        assert!(r.residual < 1e-12);
        assert_eq!(rectify_check_agm_invariance(0.8, 1.0, 0.6, &mut r), RectifyStatus::Ok);
        assert!(r.residual < 1e-10);
        assert_eq!(rectify_check_landen(2.0, 1.0, 0.5, &mut r), RectifyStatus::Ok);
        assert!(r.residual < 1e-9);
        assert_eq!(rectify_check_fagnano(2.0, 1.0, 0.5, &mut r), RectifyStatus::Ok);
        assert!(r.residual < 1e-9);
        assert!((r.rhs - 0.5).abs() < 1e-15);
    }
}

#[test]
fn agm_handle_lifecycle() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(rectify_agm_new(1.0, 0.8, 1e-15, &mut h), RectifyStatus::Ok);
        let n = rectify_agm_len(h);
        assert_eq!(n, 5);
        let (mut p, mut q) = (0.0, 0.0);
        assert_eq!(rectify_agm_iterate(h, 0, &mut p, &mut q), RectifyStatus::Ok);
        assert_eq!((p, q), (1.0, 0.8));
        assert_eq!(rectify_agm_iterate(h, n, &mut p, &mut q), RectifyStatus::Domain);
        assert_eq!(rectify_agm_iterate(h, 0, ptr::null_mut(), &mut q), RectifyStatus::NullPointer);
        assert!((rectify_agm_limit(h) - 0.897_211_432_115_041).abs() < 1e-15);
        rectify_agm_free(h);

        assert_eq!(rectify_agm_len(ptr::null()), 0);
        assert!(rectify_agm_limit(ptr::null()).is_nan());
        rectify_agm_free(ptr::null_mut());
        assert_eq!(rectify_agm_new(-1.0, 1.0, 0.0, &mut h), RectifyStatus::Domain);
        assert_eq!(rectify_agm_new(1.0, 1.0, -1.0, &mut h), RectifyStatus::Domain);
    }
}

#[test]
fn svg_string_lifecycle() {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(rectify_construct_svg(2.0, 1.0, 0.5, &mut s), RectifyStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        rectify_string_free(s);
        assert!(text.contains("<svg") && text.contains(r#"data-label="K""#));

        let mut untouched = ptr::null_mut();
        assert_eq!(rectify_construct_svg(2.0, 1.0, 1.0, &mut untouched), RectifyStatus::Domain);
        assert!(untouched.is_null());
        let msg = CStr::from_ptr(rectify_last_error()).to_str().unwrap();
        assert!(msg.contains("guard band"), "{msg}");
        rectify_string_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    let mut v = 0.0;
    unsafe { rectify_ellint_k(5.0, &mut v) };
    let other = std::thread::spawn(|| unsafe { CStr::from_ptr(rectify_last_error()).to_bytes().len() }).join().unwrap();
    assert_eq!(other, 0);
    let here = unsafe { CStr::from_ptr(rectify_last_error()) }.to_str().unwrap();
    assert!(!here.is_empty());
}
