use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use congruence_euler_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ce_string_free(s);
    out
}

fn chi(group: CeGroup, m: usize, p: u64, weight: &[i64]) -> Result<*mut CeChiResult, CeStatus> {
    let mut out = ptr::null_mut();
    match unsafe { ce_chi_compute(group, m, p, weight.as_ptr(), weight.len(), &mut out) } {
        CeStatus::Ok => Ok(out),
        s => Err(s),
    }
}

#[test]
fn values_and_json() {
    let h = chi(CeGroup::Gamma1, 4, 5, &[0, 0, 0, 0]).unwrap();
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(ce_chi_result_value(h, &mut s), CeStatus::Ok);
        assert_eq!(take(s), "2");
        assert_eq!(ce_chi_result_json(h, &mut s), CeStatus::Ok);
        assert!(take(s).contains("\"group\": \"gamma1\""));
        let mut n = 0;
        assert_eq!(ce_chi_result_breakdown_len(h, &mut n), CeStatus::Ok);
        assert!(n > 0);
        ce_chi_result_free(h);
    }
    let h = chi(CeGroup::Sl, 2, 0, &[10, 0]).unwrap();
    unsafe {
        let mut s = ptr::null_mut();
        ce_chi_result_value(h, &mut s);
        assert_eq!(take(s), "-3");
        ce_chi_result_free(h);
    }
}

#[test]
fn error_codes() {
    assert_eq!(chi(CeGroup::Gamma1, 2, 3, &[0, 0]).unwrap_err(), CeStatus::InvalidInput);
    assert!(unsafe { take(ce_last_error()) }.contains("not a prime"));
    assert_eq!(chi(CeGroup::Gl, 2, 0, &[0, 1]).unwrap_err(), CeStatus::InvalidInput);
    unsafe {
        assert_eq!(ce_chi_compute(CeGroup::Gl, 2, 0, ptr::null(), 2, &mut ptr::null_mut()), CeStatus::NullPointer);
        assert_eq!(ce_chi_result_value(ptr::null(), &mut ptr::null_mut()), CeStatus::NullPointer);
        assert_eq!(ce_class_count(0, &mut 0), CeStatus::InvalidInput);
        ce_chi_result_free(ptr::null_mut());
        ce_string_free(ptr::null_mut());
    }
}

#[test]
fn class_counts_and_audit() {
    let mut n = 0;
    for (m, want) in [(2, 6), (3, 8), (11, 0)] {
        assert_eq!(unsafe { ce_class_count(m, &mut n) }, CeStatus::Ok);
        assert_eq!(n, want);
    }
    let primes = [5u64, 7];
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ce_audit_json(primes.as_ptr(), 2, 2, &mut s) }, CeStatus::Ok);
    let v: String = unsafe { take(s) };
    assert!(v.contains("\"family\": \"sl3_closed_chi\""));
    assert_eq!(unsafe { ce_audit_json(primes.as_ptr(), 2, 99, &mut s) }, CeStatus::InvalidInput);
}

#[test]
fn header_declares_the_api() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/congruence_euler.h")).unwrap();
    for name in [
        "ce_chi_compute",
        "ce_chi_result_free",
        "ce_chi_result_value",
        "ce_chi_result_json",
        "ce_last_error",
        "ce_string_free",
        "typedef struct CeChiResult CeChiResult",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR").map(PathBuf::from).unwrap_or_else(|| dir.join("../../target"));
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target.join(profile).join("libcongruence_euler_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ce_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).contains("not a prime"));
}
