use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use crossings_ffi::*;

fn parse(s: &str) -> *mut CrossingsPermutation {
    let text = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { crossings_perm_parse(text.as_ptr(), &mut out) }, CrossingsStatus::Ok);
    out
}

fn values(p: *const CrossingsPermutation) -> Vec<u32> {
    let n = unsafe { crossings_perm_len(p) };
    let mut buf = vec![0u32; n];
    assert_eq!(unsafe { crossings_perm_values(p, buf.as_mut_ptr(), n) }, CrossingsStatus::Ok);
    buf
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(crossings_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn theta_round_trip_through_handles() {
    let s = parse("24135867");
    let mut t = ptr::null_mut();
    let mut back = ptr::null_mut();
    unsafe {
        assert_eq!(crossings_theta(s, &mut t), CrossingsStatus::Ok);
        assert_eq!(values(t), [7, 8, 5, 3, 4, 6, 2, 1]);
        assert_eq!(crossings_theta_inverse(t, &mut back), CrossingsStatus::Ok);
        assert_eq!(values(back), values(s));
        crossings_perm_free(s);
        crossings_perm_free(t);
        crossings_perm_free(back);
    }
}

#[test]
fn stats_struct() {
    let s = parse("4,7,3,5,1,2,6");
    let mut st = CrossingsStats::default();
    unsafe {
        assert_eq!(crossings_perm_stats(s, &mut st), CrossingsStatus::Ok);
        crossings_perm_free(s);
    }
    assert_eq!(
        st,
        CrossingsStats { crs: 3, nes: 3, inv: 12, exc: 3, fp: 1, des: 2, maj: 6 }
    );
}

#[test]
fn gamma_keeps_crossings() {
    let s = parse("3142");
    let mut g = ptr::null_mut();
    let (mut a, mut b) = (CrossingsStats::default(), CrossingsStats::default());
    unsafe {
        assert_eq!(crossings_gamma(s, &mut g), CrossingsStatus::Ok);
        crossings_perm_stats(s, &mut a);
        crossings_perm_stats(g, &mut b);
        crossings_perm_free(s);
        crossings_perm_free(g);
    }
    assert_eq!((a.fp, a.exc, a.crs), (b.fp, b.exc, b.crs));
}

#[test]
fn error_codes_and_messages() {
    let mut out = ptr::null_mut();
    unsafe {
        let bad = [1u32, 1, 2];
        assert_eq!(crossings_perm_new(bad.as_ptr(), 3, &mut out), CrossingsStatus::InvalidInput);
        assert!(out.is_null());
        assert!(!last_error().is_empty());

        let s = parse("321");
        assert!(last_error().is_empty());
        assert_eq!(crossings_theta(s, &mut out), CrossingsStatus::Domain);
        assert!(last_error().contains("321"), "{}", last_error());
        let mut small = [0u32; 2];
        assert_eq!(crossings_perm_values(s, small.as_mut_ptr(), 2), CrossingsStatus::BufferTooSmall);
        crossings_perm_free(s);

        assert_eq!(crossings_theta(ptr::null(), &mut out), CrossingsStatus::NullPointer);
        assert_eq!(crossings_perm_parse(ptr::null(), &mut out), CrossingsStatus::NullPointer);
        assert_eq!(crossings_perm_len(ptr::null()), 0);
        crossings_perm_free(ptr::null_mut());
        crossings_poly_free(ptr::null_mut());

        let pats = CString::new("3x2").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(crossings_distribution(4, pats.as_ptr(), &mut p), CrossingsStatus::InvalidInput);
    }
}

#[test]
fn distribution_matches_enumeration() {
    for (n, pats) in [(4usize, "321"), (6, "132"), (5, "312,213"), (7, "")] {
        let text = CString::new(pats).unwrap();
        let mut p = ptr::null_mut();
        let want = crossings::enumerate::crs_distribution(n, &pats.parse().unwrap());
        unsafe {
            assert_eq!(crossings_distribution(n, text.as_ptr(), &mut p), CrossingsStatus::Ok);
            assert_eq!(crossings_poly_len(p), want.coeffs().len());
            for e in 0..=want.coeffs().len() {
                let mut c = -1i64;
                assert_eq!(crossings_poly_coeff(p, e, &mut c), CrossingsStatus::Ok);
                assert_eq!(c, i64::try_from(want.coeff(e)).unwrap());
            }
            let s = crossings_poly_to_string(p);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), want.to_string());
            crossings_string_free(s);
            crossings_poly_free(p);
        }
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(crossings_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Builds the staticlib into a private target dir; `cargo test` itself
/// only produces the rlib, and the outer build dir is locked while tests run.
fn static_library() -> PathBuf {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let target = Path::new(env!("CARGO_TARGET_TMPDIR")).join("ffi-build");
    let st = Command::new(env!("CARGO"))
        .args(["build", "--quiet", "--lib", "-p", "crossings-ffi", "--manifest-path"])
        .arg(root.join("../../Cargo.toml"))
        .arg("--target-dir")
        .arg(&target)
        .status()
        .unwrap();
    assert!(st.success(), "building the static library failed");
    target.join("debug/libcrossings_ffi.a")
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("h.cc");
    std::fs::write(&src, "#include \"crossings.h\"\nint main(void) { return 0; }\n").unwrap();
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let st = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Wextra", "-Werror", "-x", lang])
            .arg("-I")
            .arg(&include)
            .arg(&src)
            .status()
            .unwrap_or_else(|e| panic!("{compiler}: {e}"));
        assert!(st.success(), "{compiler} rejected the header");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = static_library();
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let st = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror"])
        .arg("-I")
        .arg(root.join("include"))
        .arg(root.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(st.success(), "C smoke program failed to build");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
