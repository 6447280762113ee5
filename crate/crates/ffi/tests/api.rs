use std::ffi::CStr;
use std::ptr;

use hcpack_ffi::*;

fn c(i: i64, j: i64, k: i64) -> HcpCoord {
    HcpCoord { i, j, k }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hcp_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn lattice_functions() {
    assert_eq!(hcp_pair_form(c(0, 0, 0), c(1, 0, 0)), 12);
    assert_eq!(hcp_pair_form(c(0, 0, 0), c(0, 0, 0)), 0);
    assert!(hcp_is_contact(c(0, 0, 0), c(-1, 0, 1)));
    assert!(!hcp_is_contact(c(0, 0, 0), c(1, 0, 1)));
    let p = hcp_to_cartesian(c(0, 0, 1));
    assert_eq!(p.x, 1.0);
    assert!((p.y - (1.0f64 / 3.0).sqrt()).abs() < 1e-12);
    assert!((p.z - (8.0f64 / 3.0).sqrt()).abs() < 1e-12);
}

#[test]
fn configuration_lifecycle() {
    unsafe {
        let cfg = hcp_config_new();
        assert_eq!(hcp_config_len(cfg), 0);
        for p in [c(0, 0, 0), c(1, 0, 0), c(0, 1, 0), c(0, 0, 1)] {
            assert_eq!(hcp_config_push(cfg, p), HcpStatus::Ok);
        }
        assert_eq!(hcp_config_push(cfg, c(1, 0, 0)), HcpStatus::DuplicateCenter);
        assert!(last_error().contains("F2"));
        assert_eq!(hcp_config_len(cfg), 4);

        let mut count = 0;
        assert_eq!(hcp_config_contact_count(cfg, &mut count), HcpStatus::Ok);
        assert_eq!(count, 6);
        assert_eq!(last_error(), "");

        let mut got = c(9, 9, 9);
        assert_eq!(hcp_config_get(cfg, 3, &mut got), HcpStatus::Ok);
        assert_eq!(got, c(0, 0, 1));
        assert_eq!(hcp_config_get(cfg, 4, &mut got), HcpStatus::OutOfRange);

        let mut n = 0;
        assert_eq!(hcp_config_edges(cfg, ptr::null_mut(), 0, &mut n), HcpStatus::BufferTooSmall);
        assert_eq!(n, 6);
        let mut edges = vec![HcpEdge { a: 0, b: 0 }; n];
        assert_eq!(hcp_config_edges(cfg, edges.as_mut_ptr(), n, &mut n), HcpStatus::Ok);
        assert_eq!(edges[0], HcpEdge { a: 1, b: 2 });
        assert_eq!(edges[5], HcpEdge { a: 3, b: 4 });

        let mut needed = 0;
        assert_eq!(hcp_config_serialize(cfg, ptr::null_mut(), 0, &mut needed), HcpStatus::BufferTooSmall);
        let mut buf = vec![0 as std::ffi::c_char; needed];
        assert_eq!(hcp_config_serialize(cfg, buf.as_mut_ptr(), needed, &mut needed), HcpStatus::Ok);
        let text = CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
        assert_eq!(text, "0 0 0\n1 0 0\n0 1 0\n0 0 1\n");

        let mut parsed = ptr::null_mut();
        let src = std::ffi::CString::new(text).unwrap();
        assert_eq!(hcp_config_parse(src.as_ptr(), &mut parsed), HcpStatus::Ok);
        assert_eq!(hcp_config_len(parsed), 4);
        hcp_config_free(parsed);
        hcp_config_free(cfg);
    }
}

#[test]
fn construction_errors() {
    unsafe {
        let mut out = ptr::null_mut();
        let dup = [c(0, 0, 0), c(0, 0, 0)];
        assert_eq!(hcp_config_from_coords(dup.as_ptr(), 2, &mut out), HcpStatus::DuplicateCenter);
        assert!(out.is_null());
        assert_eq!(hcp_config_from_coords(ptr::null(), 2, &mut out), HcpStatus::NullPointer);
        assert_eq!(hcp_config_from_coords(ptr::null(), 0, &mut out), HcpStatus::Ok);
        assert_eq!(hcp_config_len(out), 0);
        hcp_config_free(out);

        let bad = c"0 0 0\n1 0\n";
        assert_eq!(hcp_config_parse(bad.as_ptr(), &mut out), HcpStatus::Parse);
        assert!(last_error().contains("line 2"));
        assert_eq!(hcp_config_parse(c"0 0 0\n0 0 0\n".as_ptr(), &mut out), HcpStatus::DuplicateCenter);
        assert_eq!(hcp_config_reference(19, &mut out), HcpStatus::OutOfRange);
        assert_eq!(hcp_config_contact_count(ptr::null(), ptr::null_mut()), HcpStatus::NullPointer);
        assert_eq!(hcp_config_len(ptr::null()), 0);
        hcp_config_free(ptr::null_mut());
        hcp_result_free(ptr::null_mut());
        let name = CStr::from_ptr(hcp_status_name(HcpStatus::BufferTooSmall));
        assert_eq!(name.to_str().unwrap(), "buffer too small");
    }
}

#[test]
fn reference_configurations() {
    let expected = [64, 67, 72, 76, 80, 84, 87, 90];
    for (n, want) in (20..=27).zip(expected) {
        let (mut exact, mut count) = (false, 0);
        assert_eq!(unsafe { hcp_verify_reference(n, &mut exact, &mut count) }, HcpStatus::Ok);
        assert!(exact);
        assert_eq!(count, want);
    }
}

#[test]
fn exact_search_through_handles() {
    unsafe {
        let mut p = hcp_search_params_default();
        p.n = 4;
        p.window = [3, 3, 2];
        let mut res = ptr::null_mut();
        assert_eq!(hcp_search(&p, &mut res), HcpStatus::Ok);
        assert_eq!(hcp_result_best_count(res), 6);
        assert!(hcp_result_is_optimal(res));
        assert!(hcp_result_nodes_explored(res) > 0);
        let witnesses = hcp_result_witness_count(res);
        assert!(witnesses >= 1);
        for w in 0..witnesses {
            let mut cfg = ptr::null_mut();
            assert_eq!(hcp_result_witness(res, w, &mut cfg), HcpStatus::Ok);
            let mut count = 0;
            assert_eq!(hcp_config_contact_count(cfg, &mut count), HcpStatus::Ok);
            assert_eq!(count, 6);
            hcp_config_free(cfg);
        }
        let mut cfg = ptr::null_mut();
        assert_eq!(hcp_result_witness(res, witnesses, &mut cfg), HcpStatus::OutOfRange);
        assert_eq!(hcp_result_best(res, &mut cfg), HcpStatus::Ok);
        assert_eq!(hcp_config_len(cfg), 4);
        hcp_config_free(cfg);
        hcp_result_free(res);
    }
}

#[test]
fn search_errors() {
    unsafe {
        let mut res = ptr::null_mut();
        let mut p = hcp_search_params_default();
        p.n = 28;
        assert_eq!(hcp_search(&p, &mut res), HcpStatus::WindowTooSmall);
        p.n = 4;
        p.window = [3, 0, 2];
        assert_eq!(hcp_search(&p, &mut res), HcpStatus::InvalidArgument);
        p.window = [3, 3, 2];
        p.n = 6;
        p.budget_seconds = 0.0;
        assert_eq!(hcp_search(&p, &mut res), HcpStatus::SearchIncomplete);
        assert!(last_error().contains("budget"));
        p.budget_seconds = f64::NAN;
        assert_eq!(hcp_search(&p, &mut res), HcpStatus::InvalidArgument);
        assert!(res.is_null());
        assert_eq!(hcp_search(ptr::null(), &mut res), HcpStatus::NullPointer);
    }
}

#[test]
fn anneal_keeps_a_given_start() {
    unsafe {
        let mut init = ptr::null_mut();
        assert_eq!(hcp_config_reference(20, &mut init), HcpStatus::Ok);
        let mut p = hcp_search_params_default();
        p.n = 20;
        p.window = [4, 4, 3];
        p.algorithm = HcpAlgorithm::Anneal;
        p.steps = 5_000;
        p.restarts = 2;
        p.initial = init;
        let mut res = ptr::null_mut();
        assert_eq!(hcp_search(&p, &mut res), HcpStatus::Ok);
        assert!(hcp_result_best_count(res) >= 64);
        assert!(!hcp_result_is_optimal(res));
        hcp_result_free(res);
        hcp_config_free(init);
    }
}
