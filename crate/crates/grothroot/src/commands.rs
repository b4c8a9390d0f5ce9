//! One function per subcommand. Each returns a [`RunReport`]; errors are input errors.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{bail, Context, Result};
use grothroot_core::grothendieck::{
    double_beta_from, groth_beta_from, has_nonnegative_coefficients, shifted_groth_beta, specialize_beta,
    specialize_qt_from, verify_groth_h,
};
use grothroot_core::linalg::rat;
use grothroot_core::pipedream::{PipeDreamSet, SearchLimit};
use grothroot_core::polytope::{
    augment, canonical_triangulation, dissect, flow_vertices, graph_reduce, intersection_vertices, locate,
    noncrossing_alternating_trees, project_and_map, random_acyclic_graph, root_polytope_vertices,
    sample_interior_points, DissectionNode,
};
use grothroot_core::realization::{narayana_check, pi, realize, verify_bijection, verify_face_map};
use grothroot_core::subdivision::{
    q_polynomial, reduced_form, reducible_pairs, reduction_tree, verify_kirillov, Edge, ReductionNode,
};
use grothroot_core::{catalan, EdgeMonomial, Graph, MultiPolynomial, Permutation, PipeDreamComplex, Strategy};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::formats::{ComplexJson, GraphJson, PipeDreamJson, PolynomialJson, ReducedFormJson, SimplexJson};
use crate::report::RunReport;
use crate::svg::vertex_figure_svg;

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Settings {
    pub seed: u64,
    pub limit: SearchLimit,
    pub strategy: String,
}

impl Settings {
    pub fn strategy(&self) -> Result<Strategy> {
        Ok(Strategy::parse(&self.strategy, self.seed)?)
    }
}

pub fn parse_permutation(s: &str) -> Result<Permutation> {
    Ok(s.parse::<Permutation>()?)
}

/// `12,23,34` for single-digit vertices, or `(1,2),(2,3)`.
pub fn parse_edges(s: &str) -> Result<Vec<Edge>> {
    let s = s.trim();
    let mut out = Vec::new();
    if s.contains('(') {
        let nums: Vec<usize> = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("bad edge list {:?}", s))?;
        if !nums.len().is_multiple_of(2) {
            bail!("bad edge list {:?}", s);
        }
        out.extend(nums.chunks(2).map(|c| (c[0], c[1])));
    } else {
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let d: Vec<u32> = part.trim().chars().filter_map(|c| c.to_digit(10)).collect();
            if d.len() != 2 || part.trim().len() != 2 {
                bail!("bad edge {:?}; use 12 or (1,2)", part);
            }
            out.push((d[0] as usize, d[1] as usize));
        }
    }
    if out.is_empty() {
        bail!("empty edge list");
    }
    Ok(out)
}

fn graph_from(edges: &str, n: Option<usize>) -> Result<Graph> {
    let e = parse_edges(edges)?;
    let max = e.iter().map(|&(_, j)| j).max().unwrap_or(0);
    Ok(Graph::new(n.unwrap_or(max), e)?)
}

fn poly_json(p: &MultiPolynomial) -> serde_json::Value {
    json!({ "text": p.to_string(), "polynomial": PolynomialJson::from(p) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrothMode {
    Full,
    BetaOnly,
    Double,
    Qt,
}

pub fn groth(w: &str, mode: GrothMode, s: &Settings) -> Result<RunReport> {
    let w = parse_permutation(w)?;
    let set = PipeDreamSet::enumerate(&w, s.limit)?;
    let (label, p) = match mode {
        GrothMode::Full => ("double beta", double_beta_from(&set)),
        GrothMode::BetaOnly => ("beta", groth_beta_from(&set)),
        GrothMode::Double => ("double", specialize_beta(&double_beta_from(&set), w.n(), -1)),
        GrothMode::Qt => ("qt", specialize_qt_from(&set)),
    };
    let mut r = RunReport::new("groth", json!({ "w": w.to_string(), "mode": label }), s.seed);
    r.line(p.to_string());
    r.results = poly_json(&p);
    Ok(r)
}

pub fn pipes(w: &str, s: &Settings) -> Result<RunReport> {
    let w = parse_permutation(w)?;
    let set = PipeDreamSet::enumerate(&w, s.limit)?;
    let mut r = RunReport::new("pipes", json!({ "w": w.to_string() }), s.seed);
    let mut listed = Vec::new();
    for p in set.dreams() {
        let crosses: Vec<String> = p.crosses().iter().map(|b| b.to_string()).collect();
        r.line(format!("codim {}: {}", set.codim(p), crosses.join(" ")));
        listed.push(json!({ "codim": set.codim(p), "pipe_dream": PipeDreamJson::from(p) }));
    }
    let census = set.census();
    r.line(format!("census by codimension: {:?}", census));
    r.results = json!({ "census": census, "pipe_dreams": listed });
    Ok(r)
}

fn render_tree(node: &ReductionNode, depth: usize, out: &mut Vec<String>) {
    let pad = "  ".repeat(depth);
    match node.pair {
        Some((i, j, k)) => out.push(format!("{}{}  reduce ({},{},{})", pad, node.monomial, i, j, k)),
        None => out.push(format!("{}{}", pad, node.monomial)),
    }
    for (branch, child) in &node.children {
        out.push(format!("{}{}:", pad, branch));
        render_tree(child, depth + 1, out);
    }
}

pub fn reduce(edges: &str, show_tree: bool, s: &Settings) -> Result<RunReport> {
    let e = parse_edges(edges)?;
    let strategy = s.strategy()?;
    let m = EdgeMonomial::from_graph(&e)?;
    let form = reduced_form(&m, &strategy);
    let q = form.specialize();
    let mut r = RunReport::new("reduce", json!({ "edges": edges, "strategy": s.strategy }), s.seed);
    r.line(form.to_string());
    r.line(format!("{} terms; Q = {}", form.len(), q));
    let mut results = json!({
        "reduced_form": ReducedFormJson::from(&form),
        "text": form.to_string(),
        "terms": form.len(),
        "q": poly_json(&q),
    });
    if show_tree {
        let tree = reduction_tree(&m, &strategy);
        let mut lines = Vec::new();
        render_tree(&tree, 0, &mut lines);
        let merged = grothroot_core::ReducedForm::from_terms(tree.leaves().into_iter().map(|l| (l.clone(), BigInt::from(1))));
        r.check("tree leaves equal merged form", merged == form, format!("{} leaves", tree.leaves().len()));
        r.text.extend(lines.iter().cloned());
        results["tree"] = json!(lines);
    }
    r.results = results;
    Ok(r)
}

fn leaf_lines(node: &DissectionNode, depth: usize, out: &mut Vec<String>) {
    let pad = "  ".repeat(depth);
    match &node.step {
        None => out.push(format!("{}{}", pad, node.graph)),
        Some(step) => {
            let (i, j, k) = step.pair;
            out.push(format!("{}{}  reduce ({},{},{})", pad, node.graph, i, j, k));
            leaf_lines(&step.left, depth + 1, out);
            leaf_lines(&step.right, depth + 1, out);
            leaf_lines(&step.intersection, depth + 1, out);
        }
    }
}

pub fn dissect_cmd(edges: &str, n: Option<usize>, s: &Settings) -> Result<RunReport> {
    let g = graph_from(edges, n)?;
    let strategy = s.strategy()?;
    let d = dissect(&g, &strategy)?;
    let census = d.census();
    let q = q_polynomial(g.edges(), &strategy)?;
    let mut r = RunReport::new("dissect", json!({ "edges": edges, "strategy": s.strategy }), s.seed);
    leaf_lines(&d.root, 0, &mut r.text);
    r.line(format!("leaves by edges lost: {}", census));
    let simplices: Vec<SimplexJson> = d.leaf_simplices().iter().map(SimplexJson::from).collect();
    r.check("leaf census equals Q_G", census == q, format!("Q_G = {}", q));
    r.results = json!({
        "graph": GraphJson::from(&g),
        "leaves": d.leaves().into_iter().map(GraphJson::from).collect::<Vec<_>>(),
        "census": poly_json(&census),
        "simplices": simplices,
    });
    Ok(r)
}

pub fn trees(n: usize, s: &Settings) -> Result<RunReport> {
    s.limit.check(n)?;
    let ts = noncrossing_alternating_trees(n);
    let mut r = RunReport::new("trees", json!({ "n": n }), s.seed);
    for t in &ts {
        r.line(t.to_string());
    }
    r.results = json!({ "count": ts.len(), "trees": ts.iter().map(GraphJson::from).collect::<Vec<_>>() });
    Ok(r)
}

pub fn pdc(w: &str, h_only: bool, s: &Settings) -> Result<RunReport> {
    let w = parse_permutation(w)?;
    let pdc = PipeDreamComplex::build(&w, s.limit)?;
    let h = pdc.h_polynomial();
    let f = pdc.f_vector();
    let mut r = RunReport::new("pdc", json!({ "w": w.to_string(), "h": h_only }), s.seed);
    if h_only {
        r.line(h.to_string_ascending());
    } else {
        r.line(format!("f = {:?}", f.f));
        r.line(format!("h = {}", h.to_string_ascending()));
        for facet in pdc.complex().facet_masks() {
            let boxes: Vec<String> = pdc.complex().labels(facet).iter().map(|b| b.to_string()).collect();
            r.line(format!("facet {}", boxes.join(" ")));
        }
    }
    r.results = json!({
        "f": f.f,
        "h": poly_json(&h),
        "h_ascending": h.to_string_ascending(),
        "complex": ComplexJson::from(&pdc),
    });
    Ok(r)
}

pub fn realize_cmd(n: usize, svg: Option<&Path>, s: &Settings) -> Result<RunReport> {
    if svg.is_some() && n != 4 {
        bail!("--emit-svg draws the two-dimensional vertex figure and needs --n 4");
    }
    let mut r = RunReport::new("realize", json!({ "n": n }), s.seed);
    if n < 3 {
        r.check(format!("realize n={}", n), true, "skipped: the complex is empty");
        return Ok(r);
    }
    s.limit.check(n)?;
    match realize(n, s.limit) {
        Ok(map) => {
            for (b, p) in &map.vertex_map {
                r.line(format!("{} -> {}", b, p));
            }
            for (pd, simplex) in &map.facet_map {
                let crosses: Vec<String> = pd.crosses().iter().map(|b| b.to_string()).collect();
                r.line(format!("crosses {} -> tree {:?}", crosses.join(" "), simplex.label));
            }
            r.check(
                format!("realize n={}", n),
                true,
                format!("{} facets, {} faces, {} on the boundary", map.facet_map.len(), map.faces_checked, map.boundary_faces),
            );
            if let Some(path) = svg {
                std::fs::write(path, vertex_figure_svg(&map)).with_context(|| format!("writing {}", path.display()))?;
                r.line(format!("wrote {}", path.display()));
            }
            r.results = json!({
                "vertex_map": map.vertex_map.iter().map(|(b, p)| json!({ "box": [b.row, b.col], "point": p.to_strings() })).collect::<Vec<_>>(),
                "facets": map.facet_map.iter().map(|(pd, simplex)| json!({ "pipe_dream": PipeDreamJson::from(pd), "simplex": SimplexJson::from(simplex) })).collect::<Vec<_>>(),
            });
        }
        Err(e) => r.check(format!("realize n={}", n), false, e.to_string()),
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    GrothH,
    Kirillov,
    Bijection,
    Realize,
    Narayana,
    Strategies,
    Projection,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::GrothH => "groth-h",
            Suite::Kirillov => "kirillov",
            Suite::Bijection => "bijection",
            Suite::Realize => "realize",
            Suite::Narayana => "narayana",
            Suite::Strategies => "strategies",
            Suite::Projection => "projection",
            Suite::All => "all",
        }
    }
}

pub fn verify(suite: Suite, n: Option<usize>, w: Option<&str>, s: &Settings) -> Result<RunReport> {
    let w = w.map(parse_permutation).transpose()?;
    let n = n.or(w.as_ref().map(Permutation::n)).unwrap_or(4);
    if n == 0 {
        bail!("n must be positive");
    }
    s.limit.check(n)?;
    let strategy = s.strategy()?;
    let mut r = RunReport::new(
        "verify",
        json!({ "suite": suite.name(), "n": n, "w": w.as_ref().map(|w| w.to_string()), "strategy": s.strategy }),
        s.seed,
    );
    let all = suite == Suite::All;
    if all || suite == Suite::GrothH {
        groth_h_checks(&mut r, n, w.as_ref())?;
    }
    if all || suite == Suite::Kirillov {
        let c = verify_kirillov(n, &strategy)?;
        r.check(format!("kirillov n={}", n), c.passed(), format!("Q = {}, G = {}", c.q_poly, c.groth));
    }
    if all || suite == Suite::Bijection {
        bijection_checks(&mut r, n, s)?;
    }
    if all || suite == Suite::Realize {
        realize_checks(&mut r, n, s)?;
    }
    if all || suite == Suite::Narayana {
        if n < 3 {
            r.check(format!("narayana n={}", n), true, "skipped: needs n >= 3");
        } else {
            let c = narayana_check(n, s.limit)?;
            r.check(format!("narayana n={}", n), c.passed(), format!("h = {:?}, expected {:?}", c.h, c.expected));
        }
    }
    if all || suite == Suite::Strategies {
        strategy_checks(&mut r, n, s)?;
    }
    if all || suite == Suite::Projection {
        projection_checks(&mut r, n, s)?;
    }
    Ok(r)
}

fn groth_h_checks(r: &mut RunReport, n: usize, w: Option<&Permutation>) -> Result<()> {
    let perms: Vec<Permutation> = match w {
        Some(w) => vec![w.clone()],
        None => Permutation::all(n).collect(),
    };
    let scope = match w {
        Some(w) => w.to_string(),
        None => format!("S_{}", n),
    };
    let mut bad = Vec::new();
    let mut interior_bad = Vec::new();
    let mut negative = Vec::new();
    for w in &perms {
        let c = verify_groth_h(w)?;
        if !c.passed() {
            bad.push(format!("{}: {} vs {}", w, c.lhs, c.rhs));
        }
        let pdc = PipeDreamComplex::build(w, SearchLimit::default())?;
        let vars = vec![String::from("b")];
        let b = MultiPolynomial::var(vars.clone(), "b");
        let shifted = pdc.h_polynomial().substitute(&vars, &[&b + &MultiPolynomial::one(vars.clone())]);
        if pdc.h_from_interior() != shifted {
            interior_bad.push(w.to_string());
        }
        if !has_nonnegative_coefficients(&shifted_groth_beta(w)?) {
            negative.push(w.to_string());
        }
    }
    let count = match perms.len() {
        1 => String::from("1 permutation"),
        k => format!("{} permutations", k),
    };
    let summary = |v: &[String]| if v.is_empty() { count.clone() } else { v.join("; ") };
    r.check(format!("groth-h {}", scope), bad.is_empty(), summary(&bad));
    r.check(format!("interior-face formula {}", scope), interior_bad.is_empty(), summary(&interior_bad));
    r.check(format!("nonnegativity {}", scope), negative.is_empty(), summary(&negative));
    Ok(())
}

fn bijection_checks(r: &mut RunReport, n: usize, s: &Settings) -> Result<()> {
    let set = PipeDreamSet::enumerate(&pi(n), s.limit)?;
    let reduced = set.reduced().count();
    let trees = noncrossing_alternating_trees(n).len();
    let c = catalan(n.saturating_sub(1) as u32);
    r.check(
        format!("catalan n={}", n),
        BigInt::from(reduced) == c && BigInt::from(trees) == c,
        format!("{} pipe dreams, {} trees, Catalan {}", reduced, trees, c),
    );
    if n < 3 {
        r.check(format!("bijection n={}", n), true, "skipped: needs n >= 3");
        return Ok(());
    }
    let b = verify_bijection(n, s.limit)?;
    let detail = if b.passed() {
        format!("{} = {}", b.pipe_dreams, b.trees)
    } else {
        format!("injective {}, missing {:?}, extra {:?}", b.injective, b.missing, b.extra)
    };
    r.check(format!("bijection n={}", n), b.passed(), detail);
    let f = verify_face_map(n, s.limit)?;
    r.check(
        format!("face map n={}", n),
        f.passed(),
        f.failure.clone().unwrap_or_else(|| format!("{} interior faces", f.interior_faces)),
    );
    Ok(())
}

const LOCATE_SAMPLES: usize = 200;

fn realize_checks(r: &mut RunReport, n: usize, s: &Settings) -> Result<()> {
    if n < 3 {
        r.check(format!("realize n={}", n), true, "skipped: the complex is empty");
    } else {
        match realize(n, s.limit) {
            Ok(m) => r.check(format!("realize n={}", n), true, format!("{} facets", m.facet_map.len())),
            Err(e) => r.check(format!("realize n={}", n), false, e.to_string()),
        }
    }
    let simplices = canonical_triangulation(n);
    let bad: Vec<String> = simplices
        .iter()
        .filter(|t| n > 1 && t.generator_determinant() != rat(1) && t.generator_determinant() != rat(-1))
        .map(|t| format!("{:?}", t.label))
        .collect();
    r.check(format!("unimodular n={}", n), bad.is_empty(), if bad.is_empty() { format!("{} simplices", simplices.len()) } else { bad.join("; ") });
    if n < 2 {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut located = 0;
    let mut failure = None;
    while located < LOCATE_SAMPLES && failure.is_none() {
        let x = sample_interior_points(n, 1, 1_000_000, &mut rng).pop().expect("one sample");
        let hits = locate(&simplices, &x);
        if hits.len() == 1 && !simplices[hits[0]].contains_in_interior(&x) {
            continue;
        }
        if hits.len() != 1 {
            failure = Some(format!("{} lies in {} simplices", x, hits.len()));
        }
        located += 1;
    }
    r.check(
        format!("point location n={}", n),
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{} generic points in exactly one simplex", LOCATE_SAMPLES)),
    );
    Ok(())
}

const SAMPLE_GRAPHS: usize = 10;
const SEEDS_PER_GRAPH: u64 = 20;

fn strategy_checks(r: &mut RunReport, n: usize, s: &Settings) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut q_bad = Vec::new();
    let mut census_bad = Vec::new();
    for g_idx in 0..SAMPLE_GRAPHS {
        let g = random_acyclic_graph(n, 0.7, &mut rng);
        if g.edges().is_empty() {
            continue;
        }
        let base = q_polynomial(g.edges(), &Strategy::LexFirst)?;
        let mut strategies = vec![Strategy::ReverseLex];
        strategies.extend((0..SEEDS_PER_GRAPH).map(|k| Strategy::Random(s.seed.wrapping_mul(1000).wrapping_add(g_idx as u64 * 100 + k))));
        for st in &strategies {
            let q = q_polynomial(g.edges(), st)?;
            if q != base {
                q_bad.push(format!("{} under {:?}: {} vs {}", g, st, q, base));
            }
            if dissect(&g, st)?.census() != base {
                census_bad.push(format!("{} under {:?}", g, st));
            }
        }
    }
    let detail = |v: &[String]| if v.is_empty() { format!("{} graphs x {} strategies", SAMPLE_GRAPHS, SEEDS_PER_GRAPH + 1) } else { v.join("; ") };
    r.check(format!("strategy invariance n={}", n), q_bad.is_empty(), detail(&q_bad));
    r.check(format!("dissection census n={}", n), census_bad.is_empty(), detail(&census_bad));
    Ok(())
}

fn projection_matches(g: &Graph) -> Result<bool> {
    let aug = augment(g);
    Ok(project_and_map(&aug, &flow_vertices(&aug)) == root_polytope_vertices(g)?)
}

fn projection_checks(r: &mut RunReport, n: usize, s: &Settings) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed ^ 0x5eed);
    let mut bad = Vec::new();
    let mut stepped = 0;
    for _ in 0..SAMPLE_GRAPHS {
        let g = random_acyclic_graph(n, 0.7, &mut rng);
        if !projection_matches(&g)? {
            bad.push(g.to_string());
        }
        if let Some(&t) = reducible_pairs(g.edges()).first() {
            let (g1, g2, g3) = graph_reduce(&g, t)?;
            let v: BTreeSet<_> = root_polytope_vertices(&g1)?.union(&root_polytope_vertices(&g2)?).cloned().collect();
            let shared_ok = root_polytope_vertices(&g3)?.is_subset(&root_polytope_vertices(&g1)?);
            if !(projection_matches(&g1)? && projection_matches(&g2)? && projection_matches(&g3)? && shared_ok && v == root_polytope_vertices(&g)?) {
                bad.push(format!("{} after reducing {:?}", g, t));
            }
            stepped += 1;
        }
    }
    r.check(
        format!("flow projection n={}", n),
        bad.is_empty(),
        if bad.is_empty() { format!("{} graphs, {} reduction steps", SAMPLE_GRAPHS, stepped) } else { bad.join("; ") },
    );
    if n >= 3 {
        let ts = canonical_triangulation(n);
        let mut mismatched = 0;
        let mut pairs = 0;
        for (i, a) in ts.iter().enumerate() {
            for b in &ts[i + 1..] {
                let common = Graph::new(n, a.label.clone())?.intersection(&Graph::new(n, b.label.clone())?);
                if intersection_vertices(a, b) != root_polytope_vertices(&common)? {
                    mismatched += 1;
                }
                pairs += 1;
            }
        }
        r.check(format!("simplex intersections n={}", n), mismatched == 0, format!("{} pairs, {} mismatched", pairs, mismatched));
    }
    Ok(())
}
