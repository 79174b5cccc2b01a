use std::ffi::{CStr, CString};
use std::ptr;

use racg_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(racg_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    racg_string_free(s);
    out
}

fn corpus(name: &str) -> *mut RacgComplex {
    let name = CString::new(name).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { racg_complex_from_corpus(name.as_ptr(), &mut c) }, RacgStatus::Ok);
    c
}

#[test]
fn kappa_and_f_vector() {
    let c = corpus("pentagon");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(racg_complex_kappa(c, &mut s), RacgStatus::Ok);
        assert_eq!(take(s), "-1/4");

        let mut len = 0;
        assert_eq!(racg_complex_f_vector(c, ptr::null_mut(), 0, &mut len), RacgStatus::InvalidArgument);
        assert_eq!(len, 3);
        let mut buf = vec![0u64; len];
        assert_eq!(racg_complex_f_vector(c, buf.as_mut_ptr(), buf.len(), &mut len), RacgStatus::Ok);
        assert_eq!(buf, [1, 5, 5]);

        let mut n = 0;
        assert_eq!(racg_complex_vertex_count(c, &mut n), RacgStatus::Ok);
        assert_eq!(n, 5);

        let mut chi = 0;
        assert_eq!(racg_commutator_cover_euler(c, &mut chi), RacgStatus::Ok);
        assert_eq!(chi, -8);
        racg_complex_free(c);
    }
}

#[test]
fn json_round_trip() {
    let c = corpus("octahedron");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(racg_complex_to_json(c, &mut s), RacgStatus::Ok);
        let json = CString::new(take(s)).unwrap();
        let mut d = ptr::null_mut();
        assert_eq!(racg_complex_from_json(json.as_ptr(), &mut d), RacgStatus::Ok);
        let mut n = 0;
        racg_complex_vertex_count(d, &mut n);
        assert_eq!(n, 6);
        racg_complex_free(c);
        racg_complex_free(d);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut c = ptr::null_mut();
        let bad = CString::new("{\"format\":\"flag-graph\"").unwrap();
        assert_eq!(racg_complex_from_json(bad.as_ptr(), &mut c), RacgStatus::InvalidArgument);
        assert!(last_error().contains("line 1"));
        assert!(c.is_null());

        assert_eq!(racg_complex_from_json(ptr::null(), &mut c), RacgStatus::InvalidArgument);

        let p = corpus("pentagon");
        let mut s = ptr::null_mut();
        assert_eq!(racg_certify_s2(p, &mut s), RacgStatus::Precondition);
        assert!(last_error().contains("flag 2-sphere"));
        assert!(s.is_null());
        racg_complex_free(p);

        let mut n = 0;
        assert_eq!(racg_complex_vertex_count(ptr::null(), &mut n), RacgStatus::InvalidArgument);
    }
}

#[test]
fn certificates_verify() {
    let c = corpus("icosahedral-composite");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(racg_certify_s2(c, &mut s), RacgStatus::Ok);
        let cert = take(s);
        let text = CString::new(cert.clone()).unwrap();
        let mut summary = RacgVerifySummary::default();
        assert_eq!(racg_verify_cert(text.as_ptr(), &mut summary), RacgStatus::Ok);
        assert_eq!(summary.nodes, 3);
        assert_eq!(summary.andreev_leaves, 2);
        assert_eq!(last_error(), "");

        let broken = CString::new(cert.replacen("\"kappa\":\"0\"", "\"kappa\":\"1\"", 1)).unwrap();
        assert_eq!(racg_verify_cert(broken.as_ptr(), ptr::null_mut()), RacgStatus::InvalidCertificate);
        racg_complex_free(c);
    }
}

#[test]
fn l2_expressions() {
    let e = CString::new("(join (points 3) (points 3))").unwrap();
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(racg_l2_betti_expr(e.as_ptr(), &mut s), RacgStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert!(v.to_string().contains("1/4"), "{v}");
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../include/racg.h")).unwrap();
    let src = include_str!("../src/lib.rs");
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}
