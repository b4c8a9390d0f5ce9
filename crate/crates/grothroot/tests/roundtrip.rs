use grothroot::formats::{GraphJson, PipeDreamJson, PolynomialJson, ReducedFormJson, SimplexJson};
use grothroot::report::RunReport;
use grothroot_core::pipedream::{PipeDreamSet, SearchLimit};
use grothroot_core::polytope::{canonical_triangulation, random_acyclic_graph, vertex_figure_simplices};
use grothroot_core::subdivision::reduced_form;
use grothroot_core::{EdgeMonomial, Graph, MultiPolynomial, Permutation, PipeDream, ReducedForm, Simplex};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn through_text<T: Serialize + DeserializeOwned>(v: &T) -> T {
    serde_json::from_str(&serde_json::to_string(v).unwrap()).unwrap()
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (1usize..=5).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #[test]
    fn pipe_dreams(w in permutation()) {
        let set = PipeDreamSet::enumerate(&w, SearchLimit::default()).unwrap();
        for p in set.dreams() {
            let back = PipeDream::try_from(&through_text(&PipeDreamJson::from(p))).unwrap();
            prop_assert_eq!(&back, p);
        }
    }

    #[test]
    fn polynomials(terms in proptest::collection::vec((proptest::collection::vec(0u32..4, 3), any::<i64>(), any::<i64>()), 0..8)) {
        let vars = vec!["x".to_string(), "y".to_string(), "b".to_string()];
        let p = MultiPolynomial::from_terms(vars, terms.into_iter().map(|(e, a, b)| (e, BigInt::from(a) * BigInt::from(b))));
        let back = MultiPolynomial::try_from(&through_text(&PolynomialJson::from(&p))).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn graphs(seed in any::<u64>(), n in 1usize..8) {
        let g = random_acyclic_graph(n, 0.6, &mut ChaCha8Rng::seed_from_u64(seed));
        let back = Graph::try_from(&through_text(&GraphJson::from(&g))).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn reduced_forms(seed in any::<u64>(), n in 2usize..6) {
        let m = EdgeMonomial::from_graph(&grothroot_core::subdivision::path_edges(n)).unwrap();
        let r = reduced_form(&m, &grothroot_core::Strategy::Random(seed));
        let back = ReducedForm::try_from(&through_text(&ReducedFormJson::from(&r))).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn simplices() {
    for n in 2..=6 {
        for s in canonical_triangulation(n).iter().chain(vertex_figure_simplices(n).iter()) {
            let back = Simplex::try_from(&through_text(&SimplexJson::from(s))).unwrap();
            assert_eq!(&back, s);
        }
    }
    let j = SimplexJson::from(&vertex_figure_simplices(3)[0]);
    assert_eq!(j.vertices[1], vec!["1/2", "0", "-1/2"]);
}

#[test]
fn reports() {
    for args in [
        vec!["grothroot", "--json", "verify", "all", "--n", "3", "--seed", "5"],
        vec!["grothroot", "--json", "pdc", "1432"],
        vec!["grothroot", "--json", "realize", "--n", "4"],
        vec!["grothroot", "--json", "dissect", "12,23,34"],
    ] {
        let (code, out, _) = grothroot::run(args);
        assert_eq!(code, 0);
        let report: RunReport = serde_json::from_str(&out).unwrap();
        assert_eq!(report.render_json(), out);
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    let bad_poly = PolynomialJson { vars: vec!["x".into()], terms: vec![grothroot::formats::TermJson { exp: vec![1, 2], coef: "3".into() }] };
    assert!(MultiPolynomial::try_from(&bad_poly).is_err());
    let bad_coef = PolynomialJson { vars: vec!["x".into()], terms: vec![grothroot::formats::TermJson { exp: vec![1], coef: "3/2".into() }] };
    assert!(MultiPolynomial::try_from(&bad_coef).is_err());
    assert!(PipeDream::try_from(&PipeDreamJson { n: 3, crosses: vec![[3, 3]] }).is_err());
    assert!(Graph::try_from(&GraphJson { n: 3, edges: vec![[2, 1]] }).is_err());
}
