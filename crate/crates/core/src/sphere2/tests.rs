use super::*;
use crate::io::complex_from_value;
use crate::simplicial::builders::*;

fn susp(m: usize) -> FlagComplex {
    polygon(m).suspension()
}

fn subdivided_icosahedron() -> FlagComplex {
    subdivide_edge(&icosahedron(), "i0", "i1", "x").unwrap()
}

#[test]
fn octahedron_is_a_suspension_leaf() {
    let cert = certify(&octahedron()).unwrap();
    assert_eq!(cert.root.kind(), "suspension");
    let summary = verify(&cert).unwrap();
    assert_eq!(summary.suspension_leaves, 1);
}

#[test]
fn icosahedron_is_an_andreev_base() {
    let cert = certify(&icosahedron()).unwrap();
    match &cert.root {
        CertNode::AndreevBase { valence_four, checks, .. } => {
            assert!(valence_four.is_empty());
            assert_eq!(checks.triangles, 20);
            assert!(checks.all_pass());
        }
        other => panic!("unexpected {}", other.kind()),
    }
    verify(&cert).unwrap();
}

#[test]
fn subdivided_icosahedron_has_square_cell() {
    let l = subdivided_icosahedron();
    assert!(l.empty_circuits_4().is_empty());
    let cert = certify(&l).unwrap();
    match &cert.root {
        CertNode::AndreevBase { valence_four, checks, .. } => {
            assert_eq!(valence_four, &vec!["x".to_string()]);
            assert_eq!(checks.squares, 1);
            assert_eq!(checks.triangles, 18);
        }
        other => panic!("unexpected {}", other.kind()),
    }
    verify(&cert).unwrap();
}

#[test]
fn octahedron_composite_is_octahedron() {
    let o = octahedron();
    let c = square_compose(&o, "x1+", &o, "x1+", None).unwrap();
    assert!(c.is_isomorphic(&o));
}

#[test]
fn pentagonal_composite_is_hexagonal_suspension() {
    let s = susp(5);
    let c = square_compose(&s, "v0", &s, "v0", None).unwrap();
    assert!(c.is_isomorphic(&susp(6)));
    let cert = certify(&c).unwrap();
    assert_eq!(cert.root.kind(), "square_decomposition");
    assert!(cert.root.leaves().iter().all(|n| n.kind() == "suspension"));
}

#[test]
fn composite_splits_back_along_its_circuit() {
    let s = subdivided_icosahedron();
    let c = square_compose(&s, "x", &s, "x", None).unwrap();
    assert_eq!(c.vertex_count(), 20);
    assert_eq!(c.empty_circuits_4().len(), 1);
    let cert = certify(&c).unwrap();
    assert_eq!(cert.root.kind(), "square_decomposition");
    assert_eq!(cert.root.children().len(), 2);
    for child in cert.root.children() {
        assert_eq!(child.kind(), "andreev_base");
        let child = complex_from_value(child.complex()).unwrap().into_flag(false).unwrap();
        assert!(child.is_isomorphic(&s));
    }
    let text = cert.to_json().to_string();
    let back = Certificate::from_json(&text).unwrap();
    assert_eq!(back, cert);
    assert_eq!(verify(&back).unwrap().nodes, 3);
}

#[test]
fn larger_suspensions_decompose() {
    for m in 6..10 {
        let cert = certify(&susp(m)).unwrap();
        assert_eq!(cert.root.kind(), "square_decomposition");
        assert!(cert.root.leaves().iter().all(|n| n.kind() == "suspension"));
        verify(&cert).unwrap();
    }
}

#[test]
fn rejects_non_spheres() {
    assert!(matches!(certify(&polygon(5)), Err(Error::NotSphere(_))));
    let two = octahedron().disjoint_union(&octahedron());
    assert!(matches!(certify(&two), Err(Error::NotSphere(_))));
    assert!(matches!(certify(&cross_polytope(4)), Err(Error::NotSphere(_))));
}

#[test]
fn dual_check_preconditions() {
    let o = octahedron();
    assert!(matches!(dual_cell_check(&o, &[]), Err(Error::Precondition(_))));
    assert!(matches!(dual_cell_check(&susp(7), &[]), Err(Error::Precondition(_))));
    let l = subdivided_icosahedron();
    let x = l.index_of("x").unwrap();
    assert!(dual_cell_check(&l, &[x]).unwrap().all_pass());
}

#[test]
fn tampered_certificates_fail() {
    let s = subdivided_icosahedron();
    let c = square_compose(&s, "x", &s, "x", None).unwrap();
    let cert = certify(&c).unwrap();

    let mut t = cert.clone();
    if let CertNode::SquareDecomposition { circuit, .. } = &mut t.root {
        circuit.swap(0, 1);
    }
    assert!(verify(&t).is_err());

    let mut t = cert.clone();
    if let CertNode::SquareDecomposition { children, .. } = &mut t.root {
        children.pop();
    }
    assert!(verify(&t).is_err());

    let mut t = cert.clone();
    if let CertNode::SquareDecomposition { kappa, .. } = &mut t.root {
        *kappa = "1/8".into();
    }
    assert!(verify(&t).is_err());

    let mut t = cert;
    if let CertNode::SquareDecomposition { children, .. } = &mut t.root {
        children[0] = certify(&octahedron()).unwrap().root;
    }
    assert!(verify(&t).is_err());
}

#[test]
fn compose_preconditions() {
    let i = icosahedron();
    assert!(matches!(square_compose(&i, "i0", &i, "i0", None), Err(Error::Precondition(_))));
    let s = susp(5);
    let bad = vec![
        ("v1".to_string(), "v1".to_string()),
        ("v4".to_string(), "north".to_string()),
        ("north".to_string(), "v4".to_string()),
        ("south".to_string(), "south".to_string()),
    ];
    assert!(square_compose(&s, "v0", &s, "v0", Some(&bad)).is_err());
    let good = vec![
        ("v1".to_string(), "north".to_string()),
        ("north".to_string(), "v4".to_string()),
        ("v4".to_string(), "south".to_string()),
        ("south".to_string(), "v1".to_string()),
    ];
    let c = square_compose(&s, "v0", &s, "v0", Some(&good)).unwrap();
    assert_eq!(c.vertex_count(), 8);
}
