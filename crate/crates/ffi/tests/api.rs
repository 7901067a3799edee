use lml_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    lml_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(lml_last_error()).to_str().unwrap().to_owned()
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn ball_json_of_the_integers() {
    unsafe {
        let mut z = ptr::null_mut();
        assert_eq!(lml_group_new_free_abelian(1, &mut z), LmlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(lml_ball_json(z, 3, &mut out), LmlStatus::Ok);
        let v = json(&take(out));
        assert_eq!(v["schema"], 1);
        assert_eq!(v["result"]["vertex_count"], 7);
        lml_group_free(z);
    }
}

#[test]
fn verify_and_reconstruct_status_codes() {
    unsafe {
        let mut z2 = ptr::null_mut();
        assert_eq!(lml_group_new_free_abelian(2, &mut z2), LmlStatus::Ok);
        let mut k = ptr::null_mut();
        assert_eq!(lml_graph_klein(8, 6, &mut k), LmlStatus::Ok);
        assert_eq!(lml_graph_vertex_count(k), 48);
        assert_eq!(lml_graph_edge_count(k), 96);
        assert_eq!(lml_verify(z2, k, 2, ptr::null_mut()), LmlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(lml_reconstruct(z2, k, 2, &mut out), LmlStatus::Negative);
        assert_eq!(json(&take(out))["result"]["outcome"], "ambiguous_labeling");
        lml_graph_free(k);
        lml_group_free(z2);
    }
}

#[test]
fn finite_group_round_trip() {
    unsafe {
        let text = cstr("gens x y\nrel x^4\nrel y^3\nrel x y x y\nS x | y | x^-1 | y^-1 | x y\n");
        let mut g = ptr::null_mut();
        assert_eq!(lml_group_new_finite(text.as_ptr(), 100, &mut g), LmlStatus::Ok);
        assert_eq!(lml_group_generator_count(g), 5);
        let mut out = ptr::null_mut();
        assert_eq!(lml_fixing_radius_json(g, 2, 2, &mut out), LmlStatus::Ok);
        assert_eq!(json(&take(out))["result"]["r0"]["found"], 2);
        lml_group_free(g);
    }
}

#[test]
fn graph_text_round_trip() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(lml_graph_cycle(5, &mut c), LmlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(lml_graph_to_text(c, &mut out), LmlStatus::Ok);
        let text = cstr(&take(out));
        let mut d = ptr::null_mut();
        assert_eq!(lml_graph_parse(text.as_ptr(), &mut d), LmlStatus::Ok);
        assert_eq!(lml_graph_edge_count(d), 5);
        lml_graph_free(c);
        lml_graph_free(d);
    }
}

#[test]
fn witness_json() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(lml_witness_json(9, 10, 5, &mut out), LmlStatus::Ok);
        let v = json(&take(out));
        assert_eq!(v["result"]["quotient_scan"]["all_trivial"], true);
        assert_eq!(v["result"]["distance"], 6);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(lml_group_new_baumslag_solitar(0, 3, &mut g), LmlStatus::InvalidInput);
        assert!(last_error().contains("positive"));
        assert_eq!(lml_group_new_free(2, ptr::null_mut()), LmlStatus::NullPointer);
        let mut b = false;
        assert_eq!(
            lml_is_identity(ptr::null(), cstr("x").as_ptr(), &mut b),
            LmlStatus::NullPointer
        );

        assert_eq!(lml_group_new_free(2, &mut g), LmlStatus::Ok);
        assert_eq!(
            lml_group_set_generators(g, cstr("x | y").as_ptr()),
            LmlStatus::InvalidInput
        );
        assert!(
            last_error().contains("symmetric") || last_error().contains("inverse"),
            "{}",
            last_error()
        );
        assert_eq!(lml_group_set_max_vertices(g, 50), LmlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(lml_ball_json(g, 5, &mut out), LmlStatus::ResourceLimit);
        assert!(out.is_null());
        let mut k = ptr::null_mut();
        assert_eq!(lml_graph_klein(2, 1, &mut k), LmlStatus::InvalidInput);
        lml_group_free(g);
        lml_group_free(ptr::null_mut());
        lml_string_free(ptr::null_mut());
    }
}

/// `cargo test` links tests against the rlib only, so the shared library is
/// built here into a private target directory.
fn shared_library_dir() -> PathBuf {
    let target = Path::new(env!("CARGO_TARGET_TMPDIR")).join("capi");
    let status = Command::new(env!("CARGO"))
        .args([
            "build",
            "--offline",
            "--quiet",
            "-p",
            "lml-ffi",
            "--lib",
            "--target-dir",
        ])
        .arg(&target)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .status()
        .unwrap();
    assert!(status.success(), "building the shared library failed");
    target.join("debug")
}

#[test]
fn header_compiles_and_c_program_links() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include/lml.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "LML_STATUS_NEGATIVE",
        "typedef struct LmlGroup LmlGroup",
        "lml_witness_json",
        "lml_last_error",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let lib_dir = shared_library_dir();
    assert!(
        lib_dir.join("liblml_ffi.so").exists(),
        "shared library not built in {}",
        lib_dir.display()
    );
    let exe = Path::new(env!("CARGO_TARGET_TMPDIR")).join("lml_smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .arg(format!("-Wl,-rpath,{}", lib_dir.display()))
        .arg("-llml_ffi")
        .arg("-o")
        .arg(&exe)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok:"));
}
