//! Property tests for structural invariants across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use racg::coxeter::{Racg, Side};
use racg::davis::commutator_cover;
use racg::fibration::{self, OrientationAssignment, SignedFunction};
use racg::homology::{betti, betti_numbers, is_ghs, relative_betti, ChainComplex};
use racg::io::{flag_to_json, parse_complex, simplicial_to_json};
use racg::l2::{l2_betti, L2Expr};
use racg::simplicial::builders::*;
use racg::simplicial::{FlagComplex, SimplicialComplex};
use racg::sphere2;

fn flag_from_bits(n: usize, bits: &[bool]) -> FlagComplex {
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    FlagComplex::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges)
}

fn flag_complex(max: usize) -> impl Strategy<Value = FlagComplex> {
    (1..=max).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| flag_from_bits(n, &b)))
}

fn same_graph(a: &FlagComplex, b: &FlagComplex) -> bool {
    let edges = |l: &FlagComplex| {
        let mut e: Vec<(String, String)> = l.edges().into_iter().map(|(x, y)| {
            let (p, q) = (l.label(x).to_string(), l.label(y).to_string());
            if p < q { (p, q) } else { (q, p) }
        }).collect();
        e.sort();
        e
    };
    let mut la = a.labels().to_vec();
    let mut lb = b.labels().to_vec();
    la.sort();
    lb.sort();
    la == lb && edges(a) == edges(b)
}

fn small_expr() -> impl Strategy<Value = L2Expr> {
    let leaf = prop_oneof![
        (1usize..6).prop_map(L2Expr::Points),
        (4usize..8).prop_map(L2Expr::MGon),
        (0usize..3).prop_map(L2Expr::Simplex),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(L2Expr::cone),
            inner.clone().prop_map(L2Expr::susp),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| L2Expr::join(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| L2Expr::union(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // simplicial ---------------------------------------------------------

    #[test]
    fn vertex_links_are_full_flag_subcomplexes(l in flag_complex(8)) {
        for v in 0..l.vertex_count() {
            let link = l.link(&[v]).unwrap();
            prop_assert!(link.to_simplicial().is_flag());
            let full = l.full_subcomplex(&l.link_vertices(&[v]).unwrap());
            prop_assert!(same_graph(&link, &full));
        }
    }

    #[test]
    fn joins_commute_associate_and_convolve(a in flag_complex(4), b in flag_complex(4), c in flag_complex(3)) {
        let ab = a.join(&b);
        prop_assert!(ab.is_isomorphic(&b.join(&a)));
        prop_assert!(ab.join(&c).is_isomorphic(&a.join(&b.join(&c))));
        prop_assert_eq!(ab.f_vector(), a.f_vector().join(&b.f_vector()));
        prop_assert_eq!(ab.kappa(), a.kappa() * b.kappa());
    }

    #[test]
    fn doubles_have_expected_size(l in flag_complex(7), v in 0usize..7) {
        let v = v % l.vertex_count();
        let d = l.double_along_vertex(v).unwrap();
        prop_assert_eq!(d.vertex_count(), 2 * (l.vertex_count() - 1) - l.valence(v));
        prop_assert!(d.to_simplicial().is_flag());
    }

    #[test]
    fn minus_is_full_subcomplex_of_the_rest(l in flag_complex(8), mask in any::<u8>()) {
        let t: Vec<usize> = (0..l.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        let rest: Vec<usize> = (0..l.vertex_count()).filter(|v| !t.contains(v)).collect();
        prop_assert_eq!(l.minus(&t), l.full_subcomplex(&rest));
    }

    #[test]
    fn json_round_trip(l in flag_complex(8)) {
        let back = parse_complex(&flag_to_json(&l).to_string()).unwrap().into_flag(false).unwrap();
        prop_assert_eq!(&back, &l);
        let s = l.to_simplicial();
        let back = parse_complex(&simplicial_to_json(&s).to_string()).unwrap().to_simplicial();
        prop_assert_eq!(back, s);
    }

    // homology -----------------------------------------------------------

    #[test]
    fn euler_characteristic_from_betti(l in flag_complex(8)) {
        let k = l.to_simplicial();
        let b = betti_numbers(&k);
        let chi: i64 = b.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(chi, k.f_vector().euler_characteristic());
    }

    #[test]
    fn relative_to_empty_is_absolute(l in flag_complex(7)) {
        let k = l.to_simplicial();
        prop_assert_eq!(relative_betti(&k, &SimplicialComplex::empty()).unwrap(), betti(&k));
    }

    #[test]
    fn boundary_squares_to_zero(l in flag_complex(7)) {
        // construction validates ∂∘∂ = 0 and panics otherwise
        let k = l.to_simplicial();
        let c = ChainComplex::simplicial(&k, &[]);
        let f = k.f_vector();
        prop_assert_eq!(c.sizes().len(), f.dim() as usize + 1);
        prop_assert_eq!(c.betti_numbers(), betti_numbers(&k));
    }

    #[test]
    fn spheres_satisfy_poincare_duality(ms in proptest::collection::vec(0usize..4, 1..3)) {
        // joins of polygons and 0-spheres
        let mut s = FlagComplex::empty();
        for m in ms {
            let f = if m == 0 { points(2) } else { polygon(m + 3) };
            s = s.join(&f);
        }
        let k = s.to_simplicial();
        let n = k.dim();
        prop_assert!(is_ghs(&k, n).unwrap());
        let b = betti_numbers(&k);
        for i in 0..=n as usize {
            prop_assert_eq!(b.get(i).copied().unwrap_or(0), b.get(n as usize - i).copied().unwrap_or(0));
        }
    }

    // coxeter ------------------------------------------------------------

    #[test]
    fn normal_forms_are_invariant_under_rewriting(
        l in flag_complex(5),
        word in proptest::collection::vec(0usize..5, 0..10),
        moves in proptest::collection::vec((0usize..12, any::<bool>()), 0..12),
    ) {
        let w = Racg::new(l);
        let p = w.rank();
        let mut word: Vec<usize> = word.into_iter().map(|s| s % p).collect();
        let nf = w.normal_form(&word);
        prop_assert_eq!(w.normal_form(nf.letters()), nf.clone());
        for (pos, insert) in moves {
            if insert {
                let at = pos % (word.len() + 1);
                let s = pos % p;
                word.splice(at..at, [s, s]);
            } else if word.len() >= 2 {
                let i = pos % (word.len() - 1);
                if w.commute(word[i], word[i + 1]) {
                    word.swap(i, i + 1);
                }
            }
            prop_assert_eq!(w.normal_form(&word), nf.clone());
        }
        let inv = w.inverse(&nf);
        prop_assert!(w.multiply(&nf, &inv).is_identity());
    }

    #[test]
    fn special_subgroups_embed(l in flag_complex(6), mask in any::<u8>(), word in proptest::collection::vec(0usize..6, 0..8)) {
        let a: Vec<usize> = (0..l.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!a.is_empty());
        let sub = l.full_subcomplex(&a);
        let (wl, wa) = (Racg::new(l.clone()), Racg::new(sub.clone()));
        let word_a: Vec<usize> = word.iter().map(|&i| i % a.len()).collect();
        let word_l: Vec<usize> = word_a.iter().map(|&i| l.index_of(sub.label(i)).unwrap()).collect();
        prop_assert_eq!(wl.render(&wl.normal_form(&word_l)), wa.render(&wa.normal_form(&word_a)));
    }

    #[test]
    fn half_spaces_split_each_pair(l in flag_complex(4)) {
        let w = Racg::new(l);
        for x in w.ball(3) {
            for s in 0..w.rank() {
                let r = w.generator_element(s);
                let sx = w.generator_times(s, &x);
                let a = w.wall_halfspace(&r, &x).unwrap() == Side::Plus;
                let b = w.wall_halfspace(&r, &sx).unwrap() == Side::Plus;
                prop_assert!(a != b);
            }
        }
    }

    // davis --------------------------------------------------------------

    #[test]
    fn davis_cubes_are_cosets(l in flag_complex(4), n in 1usize..4) {
        let w = Racg::new(l);
        let k = w.davis_ball(n);
        let vertex_label = |id: usize| k.cell(id).label.split('|').next().unwrap().to_string();
        for cell in k.cells() {
            let (rep, sigma) = cell.label.split_once('|').unwrap();
            let rep = if rep == "ε" { w.normal_form(&[]) } else { w.normal_form_of(rep).unwrap() };
            let sigma: Vec<usize> = sigma.trim_matches(|c| c == '{' || c == '}').split(',').filter(|s| !s.is_empty())
                .map(|s| w.generator(s).unwrap()).collect();
            let mut got: Vec<String> = cell.vertices.iter().map(|&v| vertex_label(v)).collect();
            got.sort();
            let inv = w.inverse(&rep);
            let mut want: Vec<String> = w.ball(n).into_iter()
                .filter(|x| w.in_special_subgroup(&w.multiply(&inv, x), &sigma))
                .map(|x| w.render(&x)).collect();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn commutator_covers_are_connected(l in flag_complex(6)) {
        let cover = commutator_cover(&l).unwrap();
        let b = cover.betti().unwrap();
        prop_assert_eq!(b.get(0), Some(BigRational::from_integer(BigInt::from(1))));
    }

    #[test]
    fn special_subcomplexes_embed(l in flag_complex(6), mask in any::<u8>()) {
        let a: Vec<usize> = (0..l.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!a.is_empty());
        let sub = l.full_subcomplex(&a);
        let big = commutator_cover(&l).unwrap();
        let small = commutator_cover(&sub).unwrap();
        let labels: std::collections::BTreeSet<&str> = big.cells().iter().map(|c| c.label.as_str()).collect();
        for cell in small.cells() {
            // coordinates outside A fixed at −1
            let mut full = vec!['-'; l.vertex_count()];
            for (i, ch) in cell.label.chars().enumerate() {
                full[l.index_of(sub.label(i)).unwrap()] = ch;
            }
            let s: String = full.into_iter().collect();
            prop_assert!(labels.contains(s.as_str()), "{} missing", s);
        }
    }

    // l2 -----------------------------------------------------------------

    #[test]
    fn kunneth_and_cone_rules(a in small_expr(), b in small_expr()) {
        let (ra, rb) = (l2_betti(&a), l2_betti(&b));
        let rc = l2_betti(&L2Expr::cone(a.clone()));
        for (i, v) in ra.betti.values().iter().enumerate() {
            if let Some(v) = v {
                prop_assert_eq!(rc.betti.get(i), Some(v / BigRational::from_integer(2.into())));
            }
        }
        if ra.betti.is_fully_known() && rb.betti.is_fully_known() && !a.is_empty_complex() && !b.is_empty_complex() {
            let rj = l2_betti(&L2Expr::join(a, b));
            for k in 0..rj.betti.len() {
                let mut s = BigRational::zero();
                for i in 0..=k {
                    s += ra.betti.get(i).unwrap_or_default() * rb.betti.get(k - i).unwrap_or_default();
                }
                prop_assert_eq!(rj.betti.get(k), Some(s));
            }
        }
    }

    #[test]
    fn expression_values_are_sound(e in small_expr()) {
        let r = l2_betti(&e);
        prop_assert!(r.betti.is_valid());
        prop_assert!(r.satisfies_denominator_bound());
        if let (Some(sum), Some(f)) = (r.betti.alternating_sum(), e.f_vector()) {
            prop_assert_eq!(sum, f.kappa());
        }
    }

    // fibration ----------------------------------------------------------

    #[test]
    fn sheets_cover_each_quadrant_once(n in 2usize..6) {
        let mut seen = std::collections::BTreeMap::new();
        for l in 0..n {
            for q in fibration::sheet_quadrants(n, l).unwrap() {
                *seen.entry(q).or_insert(0) += 1;
            }
        }
        let all: Vec<SignedFunction> = fibration::quadrants(n).unwrap();
        prop_assert_eq!(seen.len(), all.len());
        prop_assert!(seen.values().all(|&c| c == 1));
    }

    #[test]
    fn flipping_every_sign_swaps_regions(l in flag_complex(4), mask in any::<u16>()) {
        let w = Racg::new(l);
        let d = fibration::doubling_domain(&w).unwrap();
        let m = d.class_count();
        let o = OrientationAssignment { signs: (0..m).map(|i| if mask >> (i % 16) & 1 == 1 { -1 } else { 1 }).collect() };
        let a = fibration::dplus_check(&w, &d, &o).unwrap();
        let b = fibration::dplus_check(&w, &d, &o.flipped()).unwrap();
        prop_assert_eq!(a.is_disk, b.is_disk);
        prop_assert_eq!(a.dplus.facets().len(), b.dminus.facets().len());
    }
}

// sphere2: the adjacent valence-4 scan as a standalone fact ---------------

#[test]
fn no_adjacent_valence_four_vertices_without_empty_circuits() {
    let s = subdivide_edge(&icosahedron(), "i0", "i1", "x").unwrap();
    let s2 = subdivide_edge(&s, "i6", "i7", "y").unwrap();
    let spheres = [icosahedron(), s, s2, racg::corpus::get("icosahedral-composite").unwrap()];
    for l in spheres {
        if !l.empty_circuits_4().is_empty() || sphere2::suspension_leaf(&l).is_some() {
            continue;
        }
        for (a, b) in l.edges() {
            assert!(!(l.valence(a) == 4 && l.valence(b) == 4));
        }
        assert!(sphere2::certify(&l).is_ok());
    }
}
