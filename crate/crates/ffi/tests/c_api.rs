use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use minorcat_ffi::*;

fn graph(name: &str) -> *mut MinorcatGraph {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { minorcat_graph_from_name(name.as_ptr(), &mut g) }, MinorcatStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = minorcat_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_and_count() {
    let text = CString::new("graph C2\nvertex a\nvertex b\nedge e a b\nedge f b a\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(minorcat_graph_parse(text.as_ptr(), &mut g), MinorcatStatus::Ok);
        let (mut v, mut e, mut genus) = (0, 0, 0);
        assert_eq!(minorcat_graph_counts(g, &mut v, &mut e), MinorcatStatus::Ok);
        assert_eq!((v, e), (2, 2));
        assert_eq!(minorcat_graph_genus(g, &mut genus), MinorcatStatus::Ok);
        assert_eq!(genus, 1);
        let mut connected = false;
        assert_eq!(minorcat_graph_is_connected(g, &mut connected), MinorcatStatus::Ok);
        assert!(connected);
        minorcat_graph_free(g);
    }
}

#[test]
fn parse_errors_carry_messages() {
    let text = CString::new("vertex a\nedge e a b\n").unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { minorcat_graph_parse(text.as_ptr(), &mut g) };
    assert_eq!(status, MinorcatStatus::Parse);
    assert!(g.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());

    let name = CString::new("Q3").unwrap();
    assert_eq!(unsafe { minorcat_graph_from_name(name.as_ptr(), &mut g) }, MinorcatStatus::Parse);
}

#[test]
fn null_and_utf8_are_rejected() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { minorcat_graph_parse(ptr::null(), &mut g) }, MinorcatStatus::NullPointer);
    let bad = [0xffu8, 0xfe, 0];
    assert_eq!(
        unsafe { minorcat_graph_parse(bad.as_ptr().cast(), &mut g) },
        MinorcatStatus::InvalidUtf8
    );
    let k4 = graph("K4");
    unsafe {
        assert_eq!(minorcat_graph_is_planar(k4, ptr::null_mut()), MinorcatStatus::NullPointer);
        assert_eq!(minorcat_graph_genus(ptr::null(), &mut 0), MinorcatStatus::NullPointer);
        minorcat_graph_free(k4);
        minorcat_graph_free(ptr::null_mut());
    }
}

#[test]
fn minors_and_morphisms() {
    let (k5, k33, k4, c3, point) = (graph("K5"), graph("K3,3"), graph("K4"), graph("C3"), graph("*"));
    unsafe {
        let mut planar = true;
        assert_eq!(minorcat_graph_is_planar(k5, &mut planar), MinorcatStatus::Ok);
        assert!(!planar);
        assert_eq!(minorcat_graph_is_planar(k4, &mut planar), MinorcatStatus::Ok);
        assert!(planar);
        let mut has = false;
        assert_eq!(minorcat_has_minor(k4, c3, &mut has), MinorcatStatus::Ok);
        assert!(has);
        assert_eq!(minorcat_has_minor(k33, k5, &mut has), MinorcatStatus::Ok);
        assert!(!has);
        let mut count = 0;
        assert_eq!(minorcat_hom_count(c3, point, &mut count), MinorcatStatus::Ok);
        assert_eq!(count, 3);
        assert_eq!(minorcat_automorphism_count(c3, &mut count), MinorcatStatus::Ok);
        assert_eq!(count, 6);
        let mut iso = true;
        assert_eq!(minorcat_graph_is_isomorphic(k4, k5, &mut iso), MinorcatStatus::Ok);
        assert!(!iso);
        for g in [k5, k33, k4, c3, point] {
            minorcat_graph_free(g);
        }
    }
}

#[test]
fn torsion_through_handles() {
    let k33 = graph("K3,3");
    unsafe {
        for compute in [minorcat_swiatkowski_homology, minorcat_abrams_homology] {
            let mut h = ptr::null_mut();
            assert_eq!(compute(k33, 1, 2, &mut h), MinorcatStatus::Ok);
            let (mut rank, mut len, mut d) = (0, 0, 0);
            assert_eq!(minorcat_homology_rank(h, &mut rank), MinorcatStatus::Ok);
            assert_eq!(minorcat_homology_torsion_len(h, &mut len), MinorcatStatus::Ok);
            assert_eq!(minorcat_homology_torsion(h, 0, &mut d), MinorcatStatus::Ok);
            assert_eq!((rank, len, d), (4, 1, 2));
            assert_eq!(minorcat_homology_torsion(h, 1, &mut d), MinorcatStatus::InvalidInput);
            let mut s = ptr::null_mut();
            assert_eq!(minorcat_homology_to_string(h, &mut s), MinorcatStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "Z^4 + Z/2");
            minorcat_string_free(s);
            minorcat_homology_free(h);
        }
        minorcat_graph_free(k33);
    }
}

#[test]
fn resource_limit_is_reported() {
    let k = graph("K12");
    let mut h = ptr::null_mut();
    let status = unsafe { minorcat_abrams_homology(k, 2, 6, &mut h) };
    assert_eq!(status, MinorcatStatus::ResourceLimit);
    assert!(h.is_null());
    assert!(last_error().contains("limit"));
    unsafe { minorcat_graph_free(k) };
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(minorcat_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/minorcat.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["minorcat_graph_parse", "minorcat_homology_torsion", "MINORCAT_STATUS_PANIC"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(
        &src,
        "#include \"minorcat.h\"\n\
         int main(void) {\n\
           MinorcatGraph *g = 0;\n\
           MinorcatStatus s = minorcat_graph_from_name(\"K5\", &g);\n\
           minorcat_graph_free(g);\n\
           return s == MINORCAT_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let Ok(status) = Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&src)
        .status()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success());
}
