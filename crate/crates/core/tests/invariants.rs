use grothroot_core::pipedream::SearchLimit;
use grothroot_core::polytope::{dissect, random_acyclic_graph, root_polytope_vertices, Graph};
use grothroot_core::realization::{canonical_complex, pi, realize};
use grothroot_core::subdivision::{path_edges, q_polynomial};
use grothroot_core::{MultiPolynomial, PipeDreamComplex, Strategy};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shift_up(p: &MultiPolynomial) -> MultiPolynomial {
    let vars = vec![String::from("b")];
    let b = MultiPolynomial::var(vars.clone(), "b");
    p.substitute(&vars, &[&b + &MultiPolynomial::one(vars.clone())])
}

#[test]
fn q_of_path_is_shifted_h_of_canonical_triangulation() {
    for n in 2..=6 {
        let q = q_polynomial(&path_edges(n), &Strategy::LexFirst).unwrap();
        let h = canonical_complex(n).h_polynomial().unwrap();
        assert_eq!(q, shift_up(&h), "n = {}", n);
    }
}

#[test]
fn dissection_leaves_match_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let g = random_acyclic_graph(6, 0.8, &mut rng);
        for s in [Strategy::LexFirst, Strategy::ReverseLex, Strategy::Random(5)] {
            let d = dissect(&g, &s).unwrap();
            let q = q_polynomial(g.edges(), &s).unwrap();
            assert_eq!(d.census(), q);
            let at_zero = q.evaluate(&[BigInt::from(0)]);
            assert_eq!(BigInt::from(d.full_dimensional_leaves().len()), at_zero);
        }
    }
}

#[test]
fn leaf_simplices_cover_root_polytope_vertices() {
    let d = dissect(&Graph::path(5), &Strategy::ReverseLex).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for s in d.leaf_simplices() {
        assert!(s.is_nondegenerate());
        seen.extend(s.vertices());
    }
    assert_eq!(seen, root_polytope_vertices(&Graph::path(5)).unwrap());
}

#[test]
fn realization_dimensions() {
    for n in 3..=6 {
        let pdc = PipeDreamComplex::build(&pi(n), SearchLimit::default()).unwrap();
        let r = realize(n, SearchLimit::default()).unwrap();
        assert_eq!(pdc.complex().vertices().len(), r.vertex_map.len());
        for (p, s) in &r.facet_map {
            assert_eq!(p.elbows().len(), n - 1);
            assert_eq!(s.generators.len(), n - 1);
        }
    }
}
