use std::ffi::{CStr, CString};
use std::ptr;

use tan_ffi::*;

fn fixture(name: &str) -> CString {
    let path = format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

fn load(name: &str) -> *mut TanCategory {
    let mut cat = ptr::null_mut();
    let status = unsafe { tan_category_load_json(fixture(name).as_ptr(), ptr::null(), &mut cat) };
    assert_eq!(status, TanStatus::Ok);
    assert!(!cat.is_null());
    cat
}

fn last_error() -> String {
    let p = tan_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn nerve_dimensions_of_the_triangle() {
    let cat = load("a2simplex.json");
    let mut n = 0usize;
    unsafe {
        assert_eq!(tan_category_object_count(cat, &mut n), TanStatus::Ok);
        assert_eq!(n, 3);
        let mut dim = 0usize;
        let st = tan_nerve_dimension(cat, c("2").as_ptr(), c("0").as_ptr(), c("2").as_ptr(), TanSignConvention::Koszul, &mut dim);
        assert_eq!((st, dim), (TanStatus::Ok, 3));
        let st = tan_nerve_dimension(cat, c("").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), TanSignConvention::Koszul, &mut dim);
        assert_eq!((st, dim), (TanStatus::Ok, 1));
        let st = tan_nerve_dimension(cat, c("2").as_ptr(), c("0").as_ptr(), c("9").as_ptr(), TanSignConvention::Koszul, &mut dim);
        assert_eq!(st, TanStatus::InvalidInput);
        assert!(last_error().contains("unknown object"));
        tan_category_free(cat);
    }
}

#[test]
fn relations_pass_and_fail() {
    unsafe {
        let good = load("m3.json");
        let mut report = ptr::null_mut();
        assert_eq!(tan_check_relations(good, 0, &mut report), TanStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(report).to_str().unwrap()).unwrap();
        assert_eq!(json["status"], "pass");
        tan_string_free(report);
        tan_category_free(good);

        let bad = load("nonassoc.json");
        assert_eq!(tan_check_relations(bad, 0, ptr::null_mut()), TanStatus::VerificationFailed);
        tan_category_free(bad);
    }
}

#[test]
fn horn_filler_round_trip() {
    unsafe {
        let cat = load("a2simplex.json");
        let mut out = ptr::null_mut();
        let st = tan_horn_fill_json(cat, fixture("horn_a2.json").as_ptr(), TanSignConvention::Koszul, &mut out);
        assert_eq!(st, TanStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(out).to_str().unwrap()).unwrap();
        assert!(json.is_object());
        tan_string_free(out);
        let st = tan_horn_fill_json(cat, c("{").as_ptr(), TanSignConvention::Koszul, &mut out);
        assert_eq!(st, TanStatus::InvalidInput);
        tan_category_free(cat);
    }
}

#[test]
fn bad_arguments_are_reported() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(tan_category_load_json(ptr::null(), ptr::null(), &mut cat), TanStatus::NullPointer);
        assert_eq!(tan_category_load_json(c("not json").as_ptr(), ptr::null(), &mut cat), TanStatus::InvalidInput);
        assert!(!last_error().is_empty());
        let st = tan_category_load_json(fixture("m3.json").as_ptr(), c("Fp:4").as_ptr(), &mut cat);
        assert_eq!(st, TanStatus::InvalidInput);
        let mut n = 0usize;
        assert_eq!(tan_category_object_count(ptr::null(), &mut n), TanStatus::NullPointer);
        let cat = load("m3.json");
        assert_eq!(tan_category_object_count(cat, &mut n), TanStatus::Ok);
        assert!(tan_last_error().is_null());
        tan_category_free(cat);
        tan_category_free(ptr::null_mut());
        tan_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(format!("{}/include/tan.h", env!("CARGO_MANIFEST_DIR"))).unwrap();
    for name in [
        "tan_category_load_json",
        "tan_category_free",
        "tan_category_object_count",
        "tan_nerve_dimension",
        "tan_check_relations",
        "tan_horn_fill_json",
        "tan_string_free",
        "tan_last_error",
        "TAN_STATUS_NULL_POINTER",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
