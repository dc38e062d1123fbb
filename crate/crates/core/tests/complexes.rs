mod common;

use flagtop::constructions::*;
use flagtop::enumerate::are_isomorphic;
use flagtop::validators::{is_eulerian, is_flag, is_flag_3_manifold, is_octahedral_sphere};
use flagtop::{Error, Face, Graph, SimplicialComplex};

fn square() -> SimplicialComplex {
    SimplicialComplex::from_facet_lists(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
}

fn lists(faces: &[Face]) -> Vec<Vec<usize>> {
    faces.iter().map(|f| f.to_vec()).collect()
}

#[test]
fn faces_of_a_square() {
    let c = square();
    assert_eq!(lists(c.faces(0)), vec![vec![0], vec![1], vec![2], vec![3]]);
    assert_eq!(lists(c.faces(1)), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    assert!(c.faces(2).is_empty());
    assert!(c.faces(-2).is_empty());
    assert_eq!(c.f_vector().counts(), &[1, 4, 4]);
    assert_eq!(c.reduced_euler_char(), -1);
}

#[test]
fn face_lists_match_the_naive_oracle() {
    for k in [cross_polytope_boundary(3).unwrap(), balanced_join(2, 9).unwrap(), remark_complex(4, 4, 4, 5).unwrap()] {
        let fast: common::Set = k.all_faces().map(|f| f.to_vec()).collect();
        assert_eq!(fast, common::faces(&k));
        assert_eq!(k.f_vector().counts(), common::f_vector(&k).as_slice());
        assert_eq!(k.reduced_euler_char(), common::reduced_euler_char(&k));
        for i in -1..=k.dim() {
            let f = k.faces(i);
            assert!(f.windows(2).all(|w| w[0].to_vec() < w[1].to_vec()), "faces({i}) not in lexicographic order");
        }
    }
    assert_eq!(cross_polytope_boundary(3).unwrap().faces(2).len(), 8);
}

#[test]
fn f_vectors_and_euler_characteristics() {
    let oct = cross_polytope_boundary(3).unwrap();
    assert_eq!(oct.f_vector().counts(), common::f_vector(&oct).as_slice());
    assert_eq!(oct.f_vector().counts(), &[1, 6, 12, 8]);
    assert_eq!(oct.reduced_euler_char(), 1);
    let j8 = balanced_join(2, 8).unwrap();
    assert_eq!(common::f_vector(&j8), vec![1, 8, 24, 32, 16]);
    assert_eq!(j8.f_vector().counts(), &[1, 8, 24, 32, 16]);
    assert_eq!(balanced_join(2, 10).unwrap().reduced_euler_char(), -1);
    assert_eq!(common::reduced_euler_char(&balanced_join(2, 10).unwrap()), -1);
}

#[test]
fn links() {
    let oct = cross_polytope_boundary(3).unwrap();
    let lk = oct.link(Face::singleton(0)).unwrap();
    assert_eq!(common::lift(&lk), common::link(&oct, &[0]));
    assert!(are_isomorphic(&lk.complex, &cycle(4).unwrap()).unwrap());

    let j8 = balanced_join(2, 8).unwrap();
    for v in 0..8 {
        let lk = j8.link(Face::singleton(v)).unwrap();
        assert_eq!(common::lift(&lk), common::link(&j8, &[v]));
        assert!(are_isomorphic(&lk.complex, &cross_polytope_boundary(3).unwrap()).unwrap());
    }

    let whole = j8.link(Face::EMPTY).unwrap();
    assert_eq!(whole.complex, j8);
    assert_eq!(oct.link(Face::of(&[0, 1])).unwrap_err(), Error::NotAFace { face: Face::of(&[0, 1]) });
    let facet_link = oct.link(oct.facets()[0]).unwrap();
    assert_eq!(facet_link.complex, SimplicialComplex::empty_face());
}

#[test]
fn restriction_and_deletion() {
    let oct = cross_polytope_boundary(3).unwrap();
    assert_eq!(oct.restriction(oct.vertex_set()).unwrap().complex, oct);
    let path = square().restriction(Face::of(&[0, 1, 2])).unwrap();
    assert_eq!(path.complex.facet_lists(), vec![vec![0, 1], vec![1, 2]]);

    let j8 = balanced_join(2, 8).unwrap();
    for v in 0..8 {
        let w = j8.link_vertices(Face::singleton(v));
        let r = j8.restriction(w).unwrap();
        assert_eq!(common::lift(&r), common::restriction(&j8, &w.to_vec()));
        assert_eq!(common::lift(&r), common::lift(&j8.link(Face::singleton(v)).unwrap()));
    }
    for k in [oct.clone(), square(), j8] {
        for bits in [0b1u64, 0b101, 0b11] {
            let w = Face::from_bits(bits);
            let d = k.deletion(w).unwrap();
            let r = k.restriction(k.vertex_set().difference(w)).unwrap();
            assert_eq!(common::lift(&d), common::lift(&r));
        }
    }
}

#[test]
fn joins_and_suspensions() {
    let s0 = two_points();
    let c4 = s0.join(&s0).unwrap();
    assert!(are_isomorphic(&c4, &cycle(4).unwrap()).unwrap());
    let j = cycle(4).unwrap().join(&cycle(4).unwrap()).unwrap();
    assert_eq!(common::edge_count(&j), 24);
    assert_eq!(j, balanced_join(2, 8).unwrap());

    let susp = square().suspension().unwrap();
    assert!(are_isomorphic(&susp, &cross_polytope_boundary(3).unwrap()).unwrap());
    let s = balanced_join(2, 8).unwrap().suspension().unwrap();
    assert_eq!(s.vertex_count(), 10);
    assert_eq!(s, suspended_join(2, 10).unwrap());
}

#[test]
fn clique_complexes() {
    let k4 = SimplicialComplex::clique_complex(&Graph::complete(4).unwrap());
    assert_eq!(k4.facet_lists(), vec![vec![0, 1, 2, 3]]);
    let c5 = SimplicialComplex::clique_complex(&Graph::cycle(5).unwrap());
    assert_eq!(c5, cycle(5).unwrap());
    let oct = SimplicialComplex::clique_complex(&Graph::complete_multipartite(&[2, 2, 2]).unwrap());
    assert_eq!(oct.facets().len(), 8);
    assert!(is_octahedral_sphere(&oct).holds);
}

#[test]
fn one_skeleton_round_trip() {
    let oct = cross_polytope_boundary(3).unwrap();
    assert_eq!(oct.one_skeleton(), Graph::complete_multipartite(&[2, 2, 2]).unwrap());
    for k in [oct, balanced_join(2, 11).unwrap(), gj(&GjSpec::new(16, vec![4, 4], vec![8]).unwrap()).unwrap()] {
        assert_eq!(SimplicialComplex::clique_complex(&k.one_skeleton()), k);
    }
    let hollow = SimplicialComplex::from_facet_lists(3, &[[0, 1], [1, 2], [0, 2]]).unwrap();
    assert_ne!(SimplicialComplex::clique_complex(&hollow.one_skeleton()), hollow);
}

#[test]
fn constructor_invariants_are_enforced() {
    assert!(matches!(
        SimplicialComplex::from_facet_lists(3, &[vec![0, 1], vec![0, 1, 2]]),
        Err(Error::NotAntichain { .. })
    ));
    assert!(matches!(
        SimplicialComplex::from_facet_lists(4, &[[0, 1], [1, 2]]),
        Err(Error::PhantomVertex { vertex: 3 })
    ));
    assert!(matches!(SimplicialComplex::from_facet_lists(2, &[[0, 2]]), Err(Error::VertexOutOfRange { .. })));
    assert!(matches!(SimplicialComplex::new(3, vec![]), Err(Error::VoidComplex)));
    assert!(matches!(SimplicialComplex::new(65, vec![Face::EMPTY]), Err(Error::TooManyVertices { .. })));
    assert_eq!(SimplicialComplex::empty_face().f_vector().counts(), &[1]);
}

#[test]
fn cycles() {
    assert_eq!(cycle(4).unwrap().f_vector().counts(), &[1, 4, 4]);
    assert_eq!(cycle(5).unwrap(), balanced_join(1, 5).unwrap());
    assert_eq!(cycle(3), Err(Error::NonFlagCycle(3)));
}

#[test]
fn balanced_joins() {
    let cases = [(2, 8, 24), (2, 9, 29), (3, 12, 60)];
    for (m, n, f1) in cases {
        let k = balanced_join(m, n).unwrap();
        assert_eq!(common::edge_count(&k), f1, "J{m}({n})");
        assert_eq!(k.dim(), 2 * m as isize - 1);
    }
    assert!(are_isomorphic(&balanced_join(3, 12).unwrap(), &cross_polytope_boundary(6).unwrap()).unwrap());
    assert!(balanced_join(2, 7).is_err());
    let spec = BalancedJoinSpec::new(3, 14).unwrap();
    assert_eq!(spec.lengths(), vec![5, 5, 4]);
    for m in 1..=4 {
        for n in 4 * m..=4 * m + 6 {
            let lengths = BalancedJoinSpec::new(m, n).unwrap().lengths();
            assert_eq!(lengths.iter().sum::<usize>(), n);
            assert_eq!(lengths.iter().filter(|&&l| l == n.div_ceil(m) && n % m != 0).count(), n % m);
            assert!(lengths.iter().all(|&l| l == n / m || l == n.div_ceil(m)));
        }
    }
}

#[test]
fn balanced_joins_are_flag_and_3_manifolds() {
    for n in 8..=14 {
        let k = balanced_join(2, n).unwrap();
        assert!(is_flag(&k).holds);
        assert!(is_flag_3_manifold(&k).unwrap().holds);
    }
    for n in 12..=15 {
        assert!(is_flag(&balanced_join(3, n).unwrap()).holds);
    }
}

#[test]
fn suspended_joins() {
    let oct = cross_polytope_boundary(3).unwrap();
    assert!(are_isomorphic(&suspended_join(1, 6).unwrap(), &oct).unwrap());
    let j = suspended_join(2, 10).unwrap();
    assert!(is_octahedral_sphere(&j).holds);
    assert!(are_isomorphic(&j, &cross_polytope_boundary(5).unwrap()).unwrap());
    // Eleven vertices: a 5-cycle joined with the octahedron.
    let c5_oct = cycle(5).unwrap().join(&oct).unwrap();
    assert!(are_isomorphic(&suspended_join(2, 11).unwrap(), &c5_oct).unwrap());
    assert_eq!(suspended_join(2, 11).unwrap().vertex_count(), 11);
    assert!(suspended_join(2, 9).is_err());
}

#[test]
fn cross_polytopes() {
    assert_eq!(cross_polytope_boundary(3).unwrap().f_vector().counts(), &[1, 6, 12, 8]);
    assert!(are_isomorphic(&cross_polytope_boundary(4).unwrap(), &balanced_join(2, 8).unwrap()).unwrap());
    assert!(are_isomorphic(&cross_polytope_boundary(5).unwrap(), &suspended_join(2, 10).unwrap()).unwrap());
    let c = cross_polytope_boundary(4).unwrap();
    let g = c.one_skeleton();
    for v in 0..8 {
        assert_eq!(g.degree(v), 6);
    }
}

#[test]
fn union_of_joins() {
    let j10 = gj(&GjSpec::new(10, vec![5], vec![5]).unwrap()).unwrap();
    assert_eq!(j10, balanced_join(2, 10).unwrap());

    let k = gj(&GjSpec::new(16, vec![4, 4], vec![8]).unwrap()).unwrap();
    assert_eq!(common::edge_count(&k), 80);
    assert!(is_flag(&k).holds && is_eulerian(&k).holds);

    let k = gj(&GjSpec::new(16, vec![4, 4], vec![4, 4]).unwrap()).unwrap();
    assert_eq!(k.f_vector(), balanced_join(2, 16).unwrap().f_vector());
    assert_eq!(k.f_vector().counts(), &[1, 16, 80, 128, 64]);

    assert!(GjSpec::new(16, vec![4, 3], vec![8]).is_err());
    assert!(GjSpec::new(16, vec![4, 4], vec![9]).is_err());
    assert!(GjSpec::unchecked_sums(vec![4], vec![9]).is_ok());
}

#[test]
fn union_of_joins_vertex_degrees() {
    for n in 8..=20 {
        for spec in gj_enumerate_specs(n) {
            let k = gj(&spec).unwrap();
            let a_len: usize = spec.a.iter().sum();
            for v in 0..n {
                let expected = if v < a_len { n.div_ceil(2) + 2 } else { n / 2 + 2 };
                assert_eq!(common::degree(&k, v), expected, "{spec:?} vertex {v}");
            }
        }
    }
}

#[test]
fn union_of_joins_is_a_manifold_iff_single_parts() {
    for n in 8..=18 {
        for spec in gj_enumerate_specs(n) {
            let single = spec.a.len() == 1 && spec.b.len() == 1;
            let k = gj(&spec).unwrap();
            assert_eq!(is_flag_3_manifold(&k).unwrap().holds, single, "{spec:?}");
        }
    }
}

#[test]
fn union_of_joins_specs() {
    let specs = |n| gj_enumerate_specs(n).into_iter().map(|s| (s.a, s.b)).collect::<Vec<_>>();
    assert_eq!(specs(8), vec![(vec![4], vec![4])]);
    assert_eq!(specs(10), vec![(vec![5], vec![5])]);
    assert_eq!(specs(16).len(), 3);
    assert!(specs(16).contains(&(vec![4, 4], vec![8])));
    // Oracle: ordered pairs of partitions, halved up to swap when n is even.
    for n in 8..=30 {
        let count = |t| partitions_with_min_part(t, 4).len();
        let (p, q) = (count(n / 2), count(n.div_ceil(2)));
        let expected = if n % 2 == 0 { p * (p + 1) / 2 } else { p * q };
        assert_eq!(gj_enumerate_specs(n).len(), expected, "n={n}");
    }
    assert_eq!(partitions_with_min_part(12, 4), vec![vec![4, 4, 4], vec![6, 6], vec![7, 5], vec![8, 4], vec![12]]);
}

#[test]
fn weak_not_normal_example() {
    let k = remark_complex(4, 4, 4, 4).unwrap();
    // L1 occupies 0..4, L3 occupies 8..12, L4 occupies 12..16.
    let lk = k.link(Face::of(&[0, 1])).unwrap();
    let expected: Vec<usize> = (8..16).collect();
    assert_eq!(lk.vertices, expected);
    assert_eq!(lk.complex.one_skeleton().components().len(), 2);
    assert!(remark_complex(4, 3, 4, 4).is_err());
}
