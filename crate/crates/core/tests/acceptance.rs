//! Acceptance criteria, one line each. Runs as a plain binary so the lines are always shown.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use grothroot_core::grothendieck::{groth_beta, has_nonnegative_coefficients, shifted_groth_beta, verify_groth_h};
use grothroot_core::linalg::rat;
use grothroot_core::pdc::PipeDreamComplex;
use grothroot_core::pipedream::{PipeDreamSet, SearchLimit};
use grothroot_core::polytope::{
    augment, canonical_triangulation, dissect, flow_vertices, graph_reduce, intersection_vertices, locate,
    noncrossing_alternating_trees, project_and_map, random_acyclic_graph, root_polytope_vertices,
    sample_interior_points,
};
use grothroot_core::realization::{narayana_check, pi, realize, verify_bijection, verify_face_map};
use grothroot_core::subdivision::{
    path_edges, q_polynomial, reduced_form, reducible_pairs, verify_kirillov, worked_example_script,
};
use grothroot_core::{catalan, EdgeMonomial, Graph, MultiPolynomial, Permutation, ReducedForm, Strategy};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census_1432() -> Outcome {
    let w: Permutation = "1432".parse().unwrap();
    let set = PipeDreamSet::enumerate(&w, SearchLimit::default()).map_err(|e| e.to_string())?;
    let census = set.census();
    ensure(census == vec![5, 5, 1], || format!("census {:?}", census))?;
    let by_size: Vec<usize> = (3..=5).map(|k| set.dreams().iter().filter(|p| p.crosses().len() == k).count()).collect();
    ensure(by_size == vec![5, 5, 1], || format!("by crosses {:?}", by_size))?;
    Ok("5 reduced, 5 with four crosses, 1 with five".into())
}

fn worked_reduction() -> Outcome {
    let m = EdgeMonomial::from_graph(&path_edges(4)).unwrap();
    let r = reduced_form(&m, &worked_example_script());
    let listed: [(&[(usize, usize)], u32); 11] = [
        (&[(1, 3), (1, 4), (1, 2)], 0),
        (&[(1, 3), (2, 4), (1, 4)], 0),
        (&[(1, 3), (1, 4)], 1),
        (&[(2, 4), (2, 3), (1, 3)], 0),
        (&[(2, 4), (1, 3)], 1),
        (&[(3, 4), (1, 4), (1, 2)], 0),
        (&[(3, 4), (2, 4), (1, 4)], 0),
        (&[(3, 4), (1, 4)], 1),
        (&[(1, 4), (1, 2)], 1),
        (&[(2, 4), (1, 4)], 1),
        (&[(1, 4)], 2),
    ];
    let expected = ReducedForm::from_terms(
        listed.iter().map(|(e, b)| (EdgeMonomial::new(e.to_vec(), *b).unwrap(), BigInt::from(1))),
    );
    ensure(r == expected, || format!("got {}", r))?;
    ensure(r.to_polynomial() == expected.to_polynomial(), || "polynomials differ".into())?;
    let q = r.specialize().to_string();
    ensure(q == "b^2 + 5*b + 5", || format!("Q = {}", q))?;
    Ok(format!("{} terms, Q = {}", r.len(), q))
}

fn kirillov() -> Outcome {
    for n in 2..=7 {
        let c = verify_kirillov(n, &Strategy::LexFirst).map_err(|e| e.to_string())?;
        ensure(c.passed(), || format!("n={}: Q = {}, G = {}", n, c.q_poly, c.groth))?;
    }
    let c7 = verify_kirillov(7, &Strategy::ReverseLex).map_err(|e| e.to_string())?;
    ensure(c7.passed(), || "n=7 reverse-lex".into())?;
    Ok(format!("n = 2..7, Q_P7 = {}", c7.q_poly))
}

fn groth_h() -> Outcome {
    let mut count = 0;
    for n in [4, 5] {
        for w in Permutation::all(n) {
            let c = verify_groth_h(&w).map_err(|e| e.to_string())?;
            ensure(c.q_independent, || format!("{}: depends on q: {}", w, c.lhs))?;
            ensure(c.equal, || format!("{}: {} vs {}", w, c.lhs, c.rhs))?;
            count += 1;
        }
    }
    ensure(count == 144, || format!("{} permutations", count))?;
    Ok(format!("{} permutations, q-independent and equal", count))
}

fn interior_formula() -> Outcome {
    for w in Permutation::all(4) {
        let pdc = PipeDreamComplex::build(&w, SearchLimit::default()).map_err(|e| e.to_string())?;
        let b_vars = vec![String::from("b")];
        let b = MultiPolynomial::var(b_vars.clone(), "b");
        let shifted = pdc.h_polynomial().substitute(&b_vars, &[&b + &MultiPolynomial::one(b_vars.clone())]);
        ensure(pdc.h_from_interior() == shifted, || format!("{}: {} vs {}", w, pdc.h_from_interior(), shifted))?;
    }
    Ok("24 permutations".into())
}

fn strategy_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut graphs = 0;
    let mut nontrivial = 0;
    for g_idx in 0..50 {
        let n = 2 + g_idx % 5;
        let g = random_acyclic_graph(n, 0.7, &mut rng);
        let base = q_polynomial(g.edges(), &Strategy::LexFirst).map_err(|e| e.to_string())?;
        for seed in 0..20u64 {
            let s = Strategy::Random(seed * 1000 + g_idx as u64);
            let q = q_polynomial(g.edges(), &s).map_err(|e| e.to_string())?;
            ensure(q == base, || format!("{} seed {}: {} vs {}", g, seed, q, base))?;
            let census = dissect(&g, &s).map_err(|e| e.to_string())?.census();
            ensure(census == base, || format!("{} seed {}: dissection {} vs {}", g, seed, census, base))?;
        }
        graphs += 1;
        if !reducible_pairs(g.edges()).is_empty() {
            nontrivial += 1;
        }
    }
    Ok(format!("{} graphs ({} reducible) x 20 seeds", graphs, nontrivial))
}

fn catalan_narayana() -> Outcome {
    for n in 2..=8 {
        let set = PipeDreamSet::enumerate(&pi(n), SearchLimit::default()).map_err(|e| e.to_string())?;
        let reduced = set.reduced().count();
        let trees = noncrossing_alternating_trees(n).len();
        let c = catalan((n - 1) as u32);
        ensure(BigInt::from(reduced) == c && BigInt::from(trees) == c, || {
            format!("n={}: {} pipe dreams, {} trees, Catalan {}", n, reduced, trees, c)
        })?;
        if n >= 3 {
            let b = verify_bijection(n, SearchLimit::default()).map_err(|e| e.to_string())?;
            ensure(b.passed(), || format!("n={}: bijection {:?}", n, b))?;
        }
    }
    for n in 3..=7 {
        let c = narayana_check(n, SearchLimit::default()).map_err(|e| e.to_string())?;
        ensure(c.passed(), || format!("n={}: h {:?} vs {:?}", n, c.h, c.expected))?;
    }
    Ok("Catalan for n <= 8, Narayana for n <= 7".into())
}

fn projection_check(g: &Graph) -> Result<(), String> {
    let aug = augment(g);
    let image = project_and_map(&aug, &flow_vertices(&aug));
    let roots = root_polytope_vertices(g).map_err(|e| e.to_string())?;
    ensure(image == roots, || format!("{}: projection has {} points, root polytope {}", g, image.len(), roots.len()))
}

fn root_flow() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut stepped = 0;
    for g_idx in 0..50 {
        let n = 2 + g_idx % 5;
        let g = random_acyclic_graph(n, 0.7, &mut rng);
        projection_check(&g)?;
        if let Some(&t) = reducible_pairs(g.edges()).first() {
            let (g1, g2, g3) = graph_reduce(&g, t).map_err(|e| e.to_string())?;
            for piece in [&g1, &g2, &g3] {
                projection_check(piece)?;
            }
            let v = root_polytope_vertices(&g).unwrap();
            let v1 = root_polytope_vertices(&g1).unwrap();
            let v2 = root_polytope_vertices(&g2).unwrap();
            let v3 = root_polytope_vertices(&g3).unwrap();
            let union: BTreeSet<_> = v1.union(&v2).cloned().collect();
            ensure(union == v, || format!("{}: pieces do not cover the vertices", g))?;
            let common: BTreeSet<_> = v1.intersection(&v2).cloned().collect();
            ensure(v3.is_subset(&common), || format!("{}: shared piece not in both", g))?;
            stepped += 1;
        }
    }
    Ok(format!("50 graphs, {} with a reduction step", stepped))
}

fn canonical_triangulations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut located = 0;
    let mut pairs = 0;
    for n in 2..=6 {
        let simplices = canonical_triangulation(n);
        for s in &simplices {
            let det = s.generator_determinant();
            ensure(det == rat(1) || det == rat(-1), || format!("n={}: det {} for {:?}", n, det, s.label))?;
        }
        let mut accepted = 0;
        while accepted < 1000 {
            let x = sample_interior_points(n, 1, 1_000_000, &mut rng).pop().unwrap();
            let hits = locate(&simplices, &x);
            if hits.len() == 1 && !simplices[hits[0]].contains_in_interior(&x) {
                continue;
            }
            ensure(hits.len() == 1, || format!("n={}: {} lies in {} simplices", n, x, hits.len()))?;
            accepted += 1;
        }
        located += accepted;
        for (i, a) in simplices.iter().enumerate() {
            for b in &simplices[i + 1..] {
                let common = Graph::new(n, a.label.clone()).unwrap().intersection(&Graph::new(n, b.label.clone()).unwrap());
                let expected = root_polytope_vertices(&common).unwrap();
                ensure(intersection_vertices(a, b) == expected, || format!("n={}: {:?} and {:?}", n, a.label, b.label))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("unimodular; {} points located once; {} intersections", located, pairs))
}

fn realizations() -> Outcome {
    for n in 3..=6 {
        let r = realize(n, SearchLimit::default()).map_err(|e| format!("n={}: {}", n, e))?;
        ensure(r.facet_map.len() == noncrossing_alternating_trees(n).len(), || format!("n={}", n))?;
        let f = verify_face_map(n, SearchLimit::default()).map_err(|e| e.to_string())?;
        ensure(f.passed(), || format!("n={}: {:?}", n, f.failure))?;
    }
    Ok("n = 3..6".into())
}

fn nonnegativity() -> Outcome {
    for w in Permutation::all(5) {
        let p = shifted_groth_beta(&w).map_err(|e| e.to_string())?;
        ensure(has_nonnegative_coefficients(&p), || format!("{}: {}", w, p))?;
        groth_beta(&w).map_err(|e| e.to_string())?;
    }
    Ok("120 permutations".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 pipe dream census of 1432", census_1432),
        ("2 worked reduction of x12*x23*x34", worked_reduction),
        ("3 Q_Pn equals G_pi for n = 2..7", kirillov),
        ("4 Grothendieck/h identity on S_4 and S_5", groth_h),
        ("5 interior-face formula on S_4", interior_formula),
        ("6 strategy invariance of Q_G", strategy_invariance),
        ("7 Catalan and Narayana counts", catalan_narayana),
        ("8 flow projection onto root polytopes", root_flow),
        ("9 canonical triangulation of P(P_n)", canonical_triangulations),
        ("10 realization of PD(pi_n) for n = 3..6", realizations),
        ("11 nonnegativity of shifted G_w on S_5", nonnegativity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {} ({:.2}s): {}", name, secs, detail),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {} ({:.2}s): {}", name, secs, detail);
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
