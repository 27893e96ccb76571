use std::ffi::{c_char, CStr, CString};
use std::ptr;

use rational_tetra_ffi::*;

fn cstrs(items: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
    let owned: Vec<CString> = items.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs = owned.iter().map(|s| s.as_ptr()).collect();
    (owned, ptrs)
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    rt_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = rt_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

#[test]
fn edges_cm_and_realizability() {
    unsafe {
        let (_keep, ptrs) = cstrs(&["44", "117", "240", "125", "244", "267"]);
        let mut e = ptr::null_mut();
        assert_eq!(rt_edges_new(ptrs.as_ptr(), &mut e), RtStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(rt_edges_cm(e, &mut s), RtStatus::Ok);
        assert_eq!(take(s), (12i64 * 205920).pow(2).to_string());
        let (mut r, mut d, mut v) = (false, true, ptr::null_mut());
        assert_eq!(rt_edges_realizability(e, &mut r, &mut d, &mut v), RtStatus::Ok);
        assert!(r && !d);
        assert_eq!(take(v), "205920");
        rt_edges_free(e);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let (_keep, ptrs) = cstrs(&["1", "1", "1", "1", "1", "1/0"]);
        let mut e = ptr::null_mut();
        assert_eq!(rt_edges_new(ptrs.as_ptr(), &mut e), RtStatus::Parse);
        assert!(e.is_null());
        assert!(last_error().contains("zero denominator"));

        assert_eq!(rt_edges_new(ptr::null(), &mut e), RtStatus::NullPointer);
        assert_eq!(rt_edges_cm(ptr::null(), &mut ptr::null_mut()), RtStatus::NullPointer);

        let (_keep, ptrs) = cstrs(&["-1", "1", "1", "1", "1", "1"]);
        assert_eq!(rt_edges_new(ptrs.as_ptr(), &mut e), RtStatus::Ok);
        let (mut r, mut d, mut v) = (false, false, ptr::null_mut());
        assert_eq!(rt_edges_realizability(e, &mut r, &mut d, &mut v), RtStatus::NegativeLength);
        rt_edges_free(e);

        let mut out = ptr::null_mut();
        let name = CString::new("nope").unwrap();
        assert_eq!(rt_verify(name.as_ptr(), 0, 1, &mut out), RtStatus::InvalidArgument);
        assert!(last_error().contains("nope"));
    }
}

#[test]
fn parameters_to_point_and_descent() {
    unsafe {
        let (a, b, c) = (CString::new("3").unwrap(), CString::new("4").unwrap(), CString::new("5").unwrap());
        let (_keep, x) = cstrs(&["1", "2", "3", "4"]);
        let mut p = ptr::null_mut();
        assert_eq!(rt_point_from_parameters(a.as_ptr(), b.as_ptr(), c.as_ptr(), x.as_ptr(), false, &mut p), RtStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(rt_point_to_json(p, &mut s), RtStatus::Ok);
        assert_eq!(take(s), r#"{"edges":["3","4","7/5","5","8/5","3"],"y":"672/25","sign":-1}"#);
        rt_point_free(p);

        let zero = CString::new("0").unwrap();
        assert_eq!(
            rt_point_from_parameters(a.as_ptr(), b.as_ptr(), zero.as_ptr(), x.as_ptr(), false, &mut p),
            RtStatus::Degenerate
        );

        let (_keep, e) = cstrs(&["1", "2", "3", "1", "2", "1"]);
        let mut edges = ptr::null_mut();
        assert_eq!(rt_edges_new(e.as_ptr(), &mut edges), RtStatus::Ok);
        let mut seed = ptr::null_mut();
        assert_eq!(rt_point_seed(edges, zero.as_ptr(), &mut seed), RtStatus::Ok);
        let one = CString::new("1").unwrap();
        assert_eq!(rt_point_seed(edges, one.as_ptr(), &mut p), RtStatus::VerificationFailed);
        let mut next = ptr::null_mut();
        assert_eq!(rt_point_descend(seed, one.as_ptr(), &mut next), RtStatus::Ok);
        assert_eq!(rt_point_to_json(next, &mut s), RtStatus::Ok);
        assert_eq!(take(s), r#"{"edges":["1","2","4","1","3","2"],"y":"0","sign":1}"#);
        rt_point_free(next);
        rt_point_free(seed);
        rt_edges_free(edges);
    }
}

#[test]
fn parallel_slope_is_reported() {
    unsafe {
        let (_keep, e) = cstrs(&["2", "4", "1", "4", "2", "3"]);
        let mut edges = ptr::null_mut();
        assert_eq!(rt_edges_new(e.as_ptr(), &mut edges), RtStatus::Ok);
        let zero = CString::new("0").unwrap();
        let mut seed = ptr::null_mut();
        assert_eq!(rt_point_seed(edges, zero.as_ptr(), &mut seed), RtStatus::Ok);
        let t = CString::new("12").unwrap();
        let mut next = ptr::null_mut();
        assert_eq!(rt_point_descend(seed, t.as_ptr(), &mut next), RtStatus::ParallelSlope);
        assert!(next.is_null());
        rt_point_free(seed);
        rt_edges_free(edges);
    }
}

#[test]
fn heron_fixture() {
    unsafe {
        let (v, t) = (CString::new("1/2").unwrap(), CString::new("1").unwrap());
        let mut s = ptr::null_mut();
        assert_eq!(rt_heron_point(v.as_ptr(), t.as_ptr(), &mut s), RtStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!((json["a"].as_str(), json["b"].as_str(), json["c"].as_str()), (Some("5/12"), Some("1/4"), Some("1/3")));
    }
}

#[test]
fn search_matches_the_library() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(rt_search(3, true, false, 2, &mut s), RtStatus::Ok);
        let n = rt_search_len(s);
        assert!(n > 0);
        let mut found = false;
        for i in 0..n {
            let mut edges = [0i64; 6];
            let mut y = ptr::null_mut();
            assert_eq!(rt_search_hit(s, i, edges.as_mut_ptr(), &mut y), RtStatus::Ok);
            found |= edges == [1, 2, 3, 1, 2, 1] && take(y) == "0";
        }
        assert!(found);
        let mut y = ptr::null_mut();
        assert_eq!(rt_search_hit(s, n, [0i64; 6].as_mut_ptr(), &mut y), RtStatus::IndexOutOfRange);
        let mut csv = ptr::null_mut();
        assert_eq!(rt_search_to_csv(s, &mut csv), RtStatus::Ok);
        let lib = rational_tetra::points::hits_to_csv(
            &rational_tetra::points::search_integer_tetrahedra(
                3,
                &rational_tetra::points::SearchOptions {
                    include_degenerate: true,
                    ..Default::default()
                },
            )
            .unwrap(),
        );
        assert_eq!(take(csv), lib);
        rt_search_free(s);
        assert_eq!(rt_search_len(ptr::null()), 0);
    }
}

#[test]
fn verify_suite_over_the_boundary() {
    unsafe {
        let name = CString::new("tetrahedroid").unwrap();
        let mut v = ptr::null_mut();
        assert_eq!(rt_verify(name.as_ptr(), 0, 1, &mut v), RtStatus::Ok);
        assert!(rt_verdicts_len(v) > 0);
        assert_eq!(rt_verdicts_failures(v), 0);
        let mut s = ptr::null_mut();
        assert_eq!(rt_verdicts_to_json(v, &mut s), RtStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json.as_array().unwrap().len(), rt_verdicts_len(v));
        rt_verdicts_free(v);
    }
}
