//! Finite simplicial and flag complexes.

pub mod builders;
mod cliques;
mod complex;
mod flag;
mod fvector;
mod iso;

pub use complex::SimplicialComplex;
pub use flag::FlagComplex;
pub use fvector::FVector;


#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;

    #[test]
    fn f_vectors() {
        assert_eq!(FlagComplex::empty().f_vector().as_slice(), &[1]);
        assert_eq!(polygon(5).f_vector().as_slice(), &[1, 5, 5]);
        assert_eq!(octahedron().f_vector().as_slice(), &[1, 6, 12, 8]);
        assert_eq!(icosahedron().f_vector().as_slice(), &[1, 12, 30, 20]);
    }

    #[test]
    fn links() {
        let o = octahedron();
        for v in 0..6 {
            assert!(o.link(&[v]).unwrap().is_isomorphic(&polygon(4)));
        }
        assert_eq!(o.link(&[]).unwrap(), o);
        let ico = icosahedron();
        for (a, b) in ico.edges() {
            assert!(ico.link(&[a, b]).unwrap().is_isomorphic(&points(2)));
        }
        assert!(o.link(&[0, 1]).is_err());
    }

    #[test]
    fn minus_and_full() {
        assert!(polygon(5).minus(&[0]).is_isomorphic(&path(4)));
        let o = octahedron();
        assert_eq!(o.full_subcomplex(&[0, 1, 2, 3, 4, 5]), o);
        assert_eq!(o.minus(&[0]).f_vector().as_slice(), &[1, 5, 8, 4]);
    }

    #[test]
    fn joins_cones_suspensions() {
        assert!(points(2).join(&points(2)).is_isomorphic(&polygon(4)));
        assert_eq!(FlagComplex::empty().cone().f_vector().as_slice(), &[1, 1]);
        assert!(polygon(4).suspension().is_isomorphic(&octahedron()));
        let j = points(2).join(&points(2));
        assert_eq!(j.labels()[0], "p0#0");
    }

    #[test]
    fn doubles() {
        assert!(polygon(4).double_along_vertex(0).unwrap().is_isomorphic(&polygon(4)));
        assert!(polygon(5).double_along_vertex(0).unwrap().is_isomorphic(&polygon(6)));
        assert!(octahedron().double_along_vertex(0).unwrap().is_isomorphic(&octahedron()));
        assert!(polygon(4).double_along_vertex(9).is_err());
    }

    #[test]
    fn empty_4_circuits() {
        assert!(octahedron().empty_circuits_4().is_empty());
        assert!(icosahedron().empty_circuits_4().is_empty());
        assert_eq!(polygon(4).empty_circuits_4().len(), 1);
        // the suspension of a hexagon has empty circuits through both poles
        assert!(!polygon(6).suspension().empty_circuits_4().is_empty());
    }

    #[test]
    fn flagness_of_general_complexes() {
        let hollow = SimplicialComplex::from_labeled(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
        assert!(!hollow.is_flag());
        assert!(polygon(4).to_simplicial().is_flag());
        let tri = SimplicialComplex::from_labeled(&[vec!["a", "b", "c"]]).unwrap();
        assert!(tri.is_flag());
        assert!(hollow.barycentric_subdivision().is_flag());
        assert_eq!(tri.barycentric_subdivision().f_vector().as_slice(), &[1, 7, 12, 6]);
    }

    #[test]
    fn simplicial_isomorphism_sees_facets() {
        let hollow = SimplicialComplex::from_labeled(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
        let tri = SimplicialComplex::from_labeled(&[vec!["x", "y", "z"]]).unwrap();
        assert!(!hollow.is_isomorphic(&tri));
        assert!(octahedron().to_simplicial().is_isomorphic(&polygon(4).suspension().to_simplicial()));
    }

    #[test]
    fn bipartite_kappa() {
        assert_eq!(complete_bipartite(3, 3).kappa(), crate::rational::q(1, 4));
    }
}
