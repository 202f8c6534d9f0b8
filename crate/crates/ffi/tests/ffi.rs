use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use concordance_ffi::*;
use serde_json::Value;

unsafe fn take(s: *mut libc::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    cs_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(cs_last_error()).to_str().unwrap().to_owned()
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/concordance.h")
}

#[test]
fn parse_and_query() {
    unsafe {
        let text = CString::new("# stevedore\n-1 1\n0 2\n").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(cs_seifert_parse(text.as_ptr(), &mut s), CsStatus::Ok);
        assert_eq!(cs_seifert_genus(s), 1);

        let mut out = ptr::null_mut();
        assert_eq!(cs_alexander(s, &mut out), CsStatus::Ok);
        assert_eq!(take(out), "-2t^2 + 5t - 2");
        assert_eq!(cs_order_fox(s, 2, &mut out), CsStatus::Ok);
        assert_eq!(take(out), "9");

        let mut g = ptr::null_mut();
        assert_eq!(cs_homology(s, 2, &mut g), CsStatus::Ok);
        assert_eq!(cs_group_factor_count(g), 1);
        assert_eq!(cs_group_factor(g, 0, &mut out), CsStatus::Ok);
        assert_eq!(take(out), "9");
        assert_eq!(cs_group_factor(g, 1, &mut out), CsStatus::InvalidArgument);
        cs_group_free(g);
        cs_seifert_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s = ptr::null_mut();
        let bad = CString::new("1 2\n3 x\n").unwrap();
        assert_eq!(cs_seifert_parse(bad.as_ptr(), &mut s), CsStatus::Parse);
        assert!(s.is_null());
        assert!(last_error().contains("line 2"), "{}", last_error());

        let odd = CString::new("1 2 3\n4 5 6\n7 8 9\n").unwrap();
        assert_eq!(cs_seifert_parse(odd.as_ptr(), &mut s), CsStatus::Parse);
        assert_eq!(cs_seifert_parse(ptr::null(), &mut s), CsStatus::NullPointer);

        let invalid = [0x66u8, 0xff, 0];
        assert_eq!(cs_seifert_parse(invalid.as_ptr().cast(), &mut s), CsStatus::InvalidUtf8);

        let mut out = ptr::null_mut();
        assert_eq!(cs_alexander(ptr::null(), &mut out), CsStatus::NullPointer);
        assert_eq!(cs_d_twist(-2, 0, &mut out), CsStatus::InvalidArgument);
        assert_eq!(cs_twist_report_json(0, &mut out), CsStatus::InvalidArgument);

        cs_seifert_twist(2, &mut s);
        assert_eq!(cs_order_fox(s, 0, &mut out), CsStatus::InvalidArgument);
        cs_seifert_free(s);

        cs_seifert_free(ptr::null_mut());
        cs_group_free(ptr::null_mut());
        cs_string_free(ptr::null_mut());
    }
}

#[test]
fn d_twist_matches_core() {
    unsafe {
        for j in 0..9 {
            let mut out = ptr::null_mut();
            assert_eq!(cs_d_twist(2, j, &mut out), CsStatus::Ok);
            let expect = concordance_core::dinv::d_twist(2, j).unwrap();
            assert_eq!(take(out), concordance_core::rational::format(&expect));
        }
    }
}

#[test]
fn twist_report_json() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(cs_twist_report_json(3, &mut out), CsStatus::Ok);
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        let rows: Vec<(i64, u64, &str)> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["k"].as_i64().unwrap(), r["p"].as_u64().unwrap(), r["dbar"].as_str().unwrap()))
            .collect();
        assert_eq!(rows, [(1, 5, "0"), (2, 3, "0"), (3, 13, "4")]);
    }
}

#[test]
fn verdicts() {
    unsafe {
        let mut out = ptr::null_mut();
        let mut s = ptr::null_mut();

        cs_seifert_twist(2, &mut s);
        assert_eq!(cs_verdict_json(s, 2, ptr::null(), &mut out), CsStatus::Ok);
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["verdict"], "Passes");
        assert_eq!(v["group"], serde_json::json!(["9"]));
        assert_eq!(v["witness"], serde_json::json!([0, 3, 6]));

        let flat = CString::new(include_str!("../../core/tests/data/flat9.json")).unwrap();
        assert_eq!(cs_verdict_json(s, 2, flat.as_ptr(), &mut out), CsStatus::Ok, "{}", last_error());
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["verdict"], "Passes");

        let wrong = CString::new(r#"{"group":[5],"values":[[0,"0"],[1,"0"],[2,"0"],[3,"0"],[4,"0"]]}"#).unwrap();
        assert_eq!(cs_verdict_json(s, 2, wrong.as_ptr(), &mut out), CsStatus::InvalidArgument);
        cs_seifert_free(s);

        cs_seifert_twist(3, &mut s);
        assert_eq!(cs_verdict_json(s, 2, ptr::null(), &mut out), CsStatus::Ok);
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["verdict"], "Obstructed(NoSquareOrderSubgroup)");
        assert_eq!(v["order"], "13");
        cs_seifert_free(s);

        cs_seifert_twist(6, &mut s);
        assert_eq!(cs_verdict_json(s, 2, ptr::null(), &mut out), CsStatus::Ok);
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["verdict"], "Obstructed(NoVanishingSubgroup)");
        assert_eq!(v["evidence"][0]["subgroup"], serde_json::json!([0, 5, 10, 15, 20]));
        cs_seifert_free(s);
    }
}

#[test]
fn header_declares_api() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "cs_last_error",
        "cs_string_free",
        "cs_seifert_parse",
        "cs_seifert_twist",
        "cs_seifert_free",
        "cs_seifert_genus",
        "cs_alexander",
        "cs_order_fox",
        "cs_homology",
        "cs_group_factor_count",
        "cs_group_factor",
        "cs_group_free",
        "cs_d_twist",
        "cs_twist_report_json",
        "cs_verdict_json",
        "CS_STATUS_PANIC",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(header())
        .status();
    match status {
        Ok(s) => assert!(s.success()),
        Err(e) => eprintln!("no C compiler available: {e}"),
    }
}
