use std::ffi::{CStr, CString};
use std::ptr;

use nbhd_ffi::*;

fn last_error() -> String {
    let p = nbhd_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    nbhd_string_free(s);
    out
}

#[test]
fn graph_lifecycle_and_queries() {
    unsafe {
        let mut c5 = ptr::null_mut();
        assert_eq!(nbhd_graph_cycle(5, &mut c5), NbhdStatus::Ok);
        assert_eq!(
            (nbhd_graph_vertex_count(c5), nbhd_graph_edge_count(c5)),
            (5, 5)
        );

        let mut chi = 0;
        let mut coloring = [usize::MAX; 5];
        assert_eq!(
            nbhd_graph_chromatic_number(c5, &mut chi, coloring.as_mut_ptr()),
            NbhdStatus::Ok
        );
        assert_eq!(chi, 3);
        assert!((0..5).all(|v| coloring[v] < 3 && coloring[v] != coloring[(v + 1) % 5]));

        let mut omega = 0;
        assert_eq!(
            nbhd_graph_clique_number(c5, &mut omega, ptr::null_mut()),
            NbhdStatus::Ok
        );
        assert_eq!(omega, 2);

        let (mut connected, mut bipartite) = (false, true);
        assert_eq!(nbhd_graph_is_connected(c5, &mut connected), NbhdStatus::Ok);
        assert_eq!(nbhd_graph_is_bipartite(c5, &mut bipartite), NbhdStatus::Ok);
        assert!(connected && !bipartite);

        let mut m = ptr::null_mut();
        assert_eq!(nbhd_graph_mycielskian(c5, &mut m), NbhdStatus::Ok);
        assert_eq!(
            (nbhd_graph_vertex_count(m), nbhd_graph_edge_count(m)),
            (11, 20)
        );

        let mut text = ptr::null_mut();
        assert_eq!(nbhd_graph_to_dimacs(c5, &mut text), NbhdStatus::Ok);
        let text = CString::new(take_string(text)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(
            nbhd_graph_from_dimacs(text.as_ptr(), &mut back),
            NbhdStatus::Ok
        );
        assert_eq!(nbhd_graph_edge_count(back), 5);

        nbhd_graph_free(back);
        nbhd_graph_free(m);
        nbhd_graph_free(c5);
        nbhd_graph_free(ptr::null_mut());
    }
}

#[test]
fn explicit_edges_and_errors() {
    unsafe {
        let edges = [0usize, 1, 1, 2, 2, 0];
        let mut g = ptr::null_mut();
        assert_eq!(nbhd_graph_new(3, edges.as_ptr(), 3, &mut g), NbhdStatus::Ok);
        assert_eq!(nbhd_graph_edge_count(g), 3);
        nbhd_graph_free(g);

        let bad = [0usize, 5];
        let mut g = ptr::null_mut();
        assert_eq!(
            nbhd_graph_new(3, bad.as_ptr(), 1, &mut g),
            NbhdStatus::Parameter
        );
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(nbhd_graph_cycle(2, ptr::null_mut()), NbhdStatus::Parameter);
        assert_eq!(
            nbhd_graph_cycle(5, ptr::null_mut()),
            NbhdStatus::NullPointer
        );

        let text = CString::new("e 1 2\n").unwrap();
        assert_eq!(
            nbhd_graph_from_dimacs(text.as_ptr(), &mut g),
            NbhdStatus::Parse
        );

        let mut chi = 0;
        assert_eq!(
            nbhd_graph_chromatic_number(ptr::null(), &mut chi, ptr::null_mut()),
            NbhdStatus::NullPointer
        );
        assert_eq!(nbhd_graph_cycle(5, &mut g), NbhdStatus::Ok);
        assert!(nbhd_last_error_message().is_null());
        nbhd_graph_free(g);
    }
}

#[test]
fn complexes_and_homology() {
    unsafe {
        let mut k4 = ptr::null_mut();
        nbhd_graph_complete(4, &mut k4);
        let mut c = ptr::null_mut();
        assert_eq!(nbhd_complex_from_graph(k4, &mut c), NbhdStatus::Ok);
        assert_eq!(nbhd_complex_facet_count(c), 4);
        let mut betti = [9usize; 3];
        let mut json = ptr::null_mut();
        assert_eq!(
            nbhd_complex_homology(c, 2, 1000, betti.as_mut_ptr(), &mut json),
            NbhdStatus::Ok
        );
        assert_eq!(betti, [0, 0, 1]);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v[2]["betti"], 1);
        let mut certified = true;
        assert_eq!(
            nbhd_complex_certify_conn_zero(c, 1000, &mut certified),
            NbhdStatus::Ok
        );
        assert!(!certified);
        assert_eq!(
            nbhd_complex_homology(c, 2, 3, betti.as_mut_ptr(), ptr::null_mut()),
            NbhdStatus::Budget
        );
        nbhd_complex_free(c);
        nbhd_graph_free(k4);

        let verts = [0usize, 1, 1, 2, 0, 2];
        let lens = [2usize, 2, 2];
        let mut circle = ptr::null_mut();
        assert_eq!(
            nbhd_complex_from_faces(3, verts.as_ptr(), lens.as_ptr(), 3, &mut circle),
            NbhdStatus::Ok
        );
        assert_eq!(
            nbhd_complex_certify_conn_zero(circle, 1000, &mut certified),
            NbhdStatus::Ok
        );
        assert!(certified);
        nbhd_complex_free(circle);
    }
}

#[test]
fn verification_reports() {
    unsafe {
        let mut pass = false;
        let mut json = ptr::null_mut();
        assert_eq!(
            nbhd_verify_corollary(2, 2, 3, 3, &mut pass, &mut json),
            NbhdStatus::Ok
        );
        assert!(pass);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!((v["chi"].as_u64(), v["omega"].as_u64()), (Some(3), Some(3)));

        let (mut h, mut k) = (ptr::null_mut(), ptr::null_mut());
        nbhd_graph_complete(3, &mut h);
        nbhd_graph_cycle(4, &mut k);
        let mut json = ptr::null_mut();
        assert_eq!(
            nbhd_verify_theorem2(h, 0, k, 0, 2, &mut pass, &mut json),
            NbhdStatus::Precondition
        );
        assert!(json.is_null());
        nbhd_graph_free(k);
        nbhd_graph_cycle(7, &mut k);
        assert_eq!(
            nbhd_verify_theorem2(h, 1, k, 3, 2, &mut pass, &mut json),
            NbhdStatus::Ok
        );
        assert!(pass);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["homology"][1]["betti"], 3);
        nbhd_graph_free(h);
        nbhd_graph_free(k);
    }
}
