use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use frobnum_ffi::*;

fn group(spec: &str) -> *mut FrobnumGroup {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { frobnum_group_new(spec.as_ptr(), &mut g) }, FROBNUM_OK);
    assert!(!g.is_null());
    g
}

fn take_string(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { frobnum_string_free(s) };
    owned
}

fn last_error() -> String {
    let e = frobnum_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_owned()
}

#[test]
fn counts_through_handles() {
    let g = group("GL2(4)");
    let mut v = 0u64;
    unsafe {
        assert_eq!(frobnum_group_order(g, &mut v), FROBNUM_OK);
        assert_eq!(v, 180);
        assert_eq!(frobnum_group_degree(g, &mut v), FROBNUM_OK);
        assert_eq!(v, 15);
        assert_eq!(frobnum_count_sylow(g, 2, &mut v), FROBNUM_OK);
        assert_eq!(v, 5);
        // GL2(4) is C3 x A5: the centre, 10 subgroups of A5 and 20 diagonal ones.
        assert_eq!(frobnum_count_subgroups(g, 3, 1, &mut v), FROBNUM_OK);
        assert_eq!(v, 31);
        frobnum_group_free(g);
    }
    assert!(frobnum_last_error().is_null());
}

#[test]
fn json_reports() {
    let g = group("AbelianP(3,[2,1,1])");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(frobnum_count_report_json(g, 3, 2, &mut s), FROBNUM_OK);
        frobnum_group_free(g);
    }
    let json = take_string(s);
    assert!(json.starts_with(r#"{"a":2,"count":"22","#), "{json}");

    assert_eq!(unsafe { frobnum_classify_json(3, 46, &mut s) }, FROBNUM_OK);
    let json = take_string(s);
    assert!(json.contains(r#""status":"NO_WITNESS_IN_CORPUS","witness":null"#), "{json}");
    assert_eq!(unsafe { frobnum_classify_json(3, 19, &mut s) }, FROBNUM_OK);
    assert!(take_string(s).contains(r#""witness":{"a":1,"spec":"FrobeniusAffine(19,3)"}"#));
}

#[test]
fn hall_formula_as_decimal_string() {
    let mut s = ptr::null_mut();
    let parts = [2u32, 1, 1];
    assert_eq!(
        unsafe { frobnum_hall_count_order(parts.as_ptr(), parts.len(), 2, 3, &mut s) },
        FROBNUM_OK
    );
    assert_eq!(take_string(s), "22");
    // Large enough to overflow 64 bits: subgroups of order 5^10 in (C5)^20.
    let big = [1u32; 20];
    assert_eq!(
        unsafe { frobnum_hall_count_order(big.as_ptr(), big.len(), 10, 5, &mut s) },
        FROBNUM_OK
    );
    let text = take_string(s);
    assert!(text.len() > 20 && text.bytes().all(|b| b.is_ascii_digit()));
    assert_eq!(
        unsafe { frobnum_hall_count_order(ptr::null(), 0, 0, 3, &mut s) },
        FROBNUM_OK
    );
    assert_eq!(take_string(s), "1");
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("GL2(6)").unwrap();
    assert_eq!(unsafe { frobnum_group_new(bad.as_ptr(), &mut g) }, FROBNUM_PARSE_ERROR);
    assert!(g.is_null());
    assert!(last_error().contains("prime power"));

    let huge = CString::new("Symmetric(12)").unwrap();
    assert_eq!(unsafe { frobnum_group_new(huge.as_ptr(), &mut g) }, FROBNUM_CAP_EXCEEDED);

    assert_eq!(unsafe { frobnum_group_new(ptr::null(), &mut g) }, FROBNUM_INVALID_ARGUMENT);
    let ok = CString::new("Cyclic(9)").unwrap();
    assert_eq!(unsafe { frobnum_group_new(ok.as_ptr(), ptr::null_mut()) }, FROBNUM_INVALID_ARGUMENT);

    let g = group("Cyclic(9)");
    let mut v = 0;
    unsafe {
        assert_eq!(frobnum_count_subgroups(g, 3, 3, &mut v), FROBNUM_PRECONDITION);
        assert!(last_error().contains("does not divide"));
        assert_eq!(frobnum_count_subgroups(g, 3, 1, ptr::null_mut()), FROBNUM_INVALID_ARGUMENT);
        assert_eq!(frobnum_count_sylow(ptr::null(), 3, &mut v), FROBNUM_INVALID_ARGUMENT);
        frobnum_group_free(g);
        frobnum_group_free(ptr::null_mut());
        frobnum_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_in_sync() {
    let header = include_str!("../include/frobnum.h");
    for name in [
        "frobnum_group_new",
        "frobnum_group_free",
        "frobnum_group_order",
        "frobnum_group_degree",
        "frobnum_count_subgroups",
        "frobnum_count_sylow",
        "frobnum_count_report_json",
        "frobnum_hall_count_order",
        "frobnum_classify_json",
        "frobnum_string_free",
        "frobnum_last_error",
        "typedef struct FrobnumGroup FrobnumGroup;",
        "#define FROBNUM_PANIC 6",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; header syntax check not run");
        return;
    };
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let src = std::env::temp_dir().join(format!("frobnum_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"frobnum.h\"\nint main(void) { FrobnumGroup *g = 0; return frobnum_group_free(g), FROBNUM_OK; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", dir])
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}
