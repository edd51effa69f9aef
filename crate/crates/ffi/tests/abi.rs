use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cubefactor_ffi::*;

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    cf_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = cf_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

#[test]
fn polynomial_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(cf_polynomial_new(CfFamily::Omega, 8, CfPolyMethod::GeneratingFunction, &mut p), CfStatus::Ok);
        let mut degree = 0;
        assert_eq!(cf_polynomial_degree(p, &mut degree), CfStatus::Ok);
        assert_eq!(degree, 4);
        let mut c = 0u64;
        assert_eq!(cf_polynomial_coeff_u64(p, 2, &mut c), CfStatus::Ok);
        assert_eq!(c, 5);
        let mut s = ptr::null_mut();
        assert_eq!(cf_polynomial_coeff(p, 9, &mut s), CfStatus::Ok);
        assert_eq!(take_string(s), "0");
        cf_polynomial_free(p);

        assert_eq!(cf_polynomial_new(CfFamily::Gamma, 400, CfPolyMethod::Recurrence, &mut p), CfStatus::Ok);
        let mut wide = 0u64;
        let status = (0..=200).map(|k| cf_polynomial_coeff_u64(p, k, &mut wide)).find(|&s| s != CfStatus::Ok);
        assert_eq!(status, Some(CfStatus::InvalidArgument));
        assert!(last_error().contains("64 bits"));
        cf_polynomial_free(p);
    }
}

#[test]
fn sequences() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cf_sequence_term(CfSequence::Padovan, 9, &mut s), CfStatus::Ok);
        assert_eq!(take_string(s), "9");
        assert_eq!(cf_sequence_term(CfSequence::Lucas, 5, &mut s), CfStatus::Ok);
        assert_eq!(take_string(s), "11");
        assert_eq!(cf_sequence_term(CfSequence::Fibonacci, 100, &mut s), CfStatus::Ok);
        assert_eq!(take_string(s), "354224848179261915075");
    }
}

#[test]
fn graph_and_factor() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cf_graph_new(CfFamily::Gamma, 3, &mut g), CfStatus::Ok);
        assert_eq!((cf_graph_vertex_count(g), cf_graph_edge_count(g)), (5, 5));
        let mut s = ptr::null_mut();
        assert_eq!(cf_graph_label(g, 0, &mut s), CfStatus::Ok);
        assert_eq!(take_string(s), "000");
        assert_eq!(cf_graph_label(g, 5, &mut s), CfStatus::InvalidArgument);
        assert_eq!(cf_graph_export(g, CfExportFormat::EdgeList, &mut s), CfStatus::Ok);
        assert_eq!(take_string(s).lines().count(), 5);

        let mut f = ptr::null_mut();
        assert_eq!(cf_factor_solve(g, CfSolveMethod::Structural, &mut f), CfStatus::Ok);
        assert_eq!(cf_factor_part_count(f), 2);
        let mut len = 0;
        assert_eq!(cf_factor_profile(f, ptr::null_mut(), 0, &mut len), CfStatus::Ok);
        assert_eq!(len, 3);
        assert_eq!(cf_factor_to_json(g, f, &mut s), CfStatus::Ok);
        let json = take_string(s);
        cf_factor_free(f);

        let text = CString::new(json).unwrap();
        assert_eq!(cf_factor_from_json(g, text.as_ptr(), &mut f), CfStatus::Ok);
        assert_eq!(cf_factor_verify(g, f), CfStatus::Ok);
        cf_factor_free(f);

        let bad = CString::new(r#"[{"k":1,"vertices":["000","001"]}]"#).unwrap();
        assert_eq!(cf_factor_from_json(g, bad.as_ptr(), &mut f), CfStatus::Ok);
        assert_eq!(cf_factor_verify(g, f), CfStatus::InvalidFactor);
        assert!(last_error().contains("not covered"));
        cf_factor_free(f);

        let unknown = CString::new(r#"[{"k":0,"vertices":["11"]}]"#).unwrap();
        assert_eq!(cf_factor_from_json(g, unknown.as_ptr(), &mut f), CfStatus::Parse);
        cf_graph_free(g);
    }
}

#[test]
fn errors_and_null_handles() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cf_graph_new(CfFamily::Gamma, 17, &mut g), CfStatus::CapExceeded);
        assert!(g.is_null());
        assert!(last_error().contains("cap"));
        assert_eq!(cf_graph_new(CfFamily::Gamma, 9, &mut g), CfStatus::Ok);
        let mut f = ptr::null_mut();
        assert_eq!(cf_factor_solve(g, CfSolveMethod::Exact, &mut f), CfStatus::CapExceeded);
        assert_eq!(cf_factor_solve(g, CfSolveMethod::Structural, &mut f), CfStatus::Ok);
        assert!(cf_last_error_message().is_null());
        cf_factor_free(f);
        cf_graph_free(g);

        assert_eq!(cf_polynomial_degree(ptr::null(), ptr::null_mut()), CfStatus::NullPointer);
        assert_eq!(cf_graph_vertex_count(ptr::null()), 0);
        cf_graph_free(ptr::null_mut());
        cf_string_free(ptr::null_mut());
        assert_eq!(CStr::from_ptr(cf_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

/// Compiles tests/c/smoke.c against the generated header and the static
/// library, then runs it.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("cubefactor.h").is_file());
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libcubefactor_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.is_file() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cubefactor_smoke");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
