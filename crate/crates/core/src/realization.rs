//! The pipe dreams of `pi_n = 1 n n-1 ... 2` against noncrossing alternating trees, and the
//! canonical triangulation of the vertex figure `V(P_n)` as a realization of `PD(pi_n)`.
//!
//! An elbow in box `(r, c)` is the edge `(c, n - r + 1)`; it is placed at the vertex-figure
//! point `(e_c - e_{n-r+1}) / (n - r + 1 - c)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::pdc::PipeDreamComplex;
use crate::perm::Permutation;
use crate::pipedream::{BoxPos, PipeDream, PipeDreamSet, SearchLimit};
use crate::polytope::{noncrossing_alternating_trees, vertex_figure_point, vertex_figure_simplices, Graph, Point, Simplex};
use crate::subdivision::Edge;

/// `1 n n-1 ... 2`.
pub fn pi(n: usize) -> Permutation {
    Permutation::one_then_reversed(n)
}

pub fn edge_of_box(n: usize, b: BoxPos) -> Edge {
    (b.col, n - b.row + 1)
}

pub fn box_of_edge(n: usize, (i, j): Edge) -> BoxPos {
    BoxPos { row: n - j + 1, col: i }
}

fn edges_of_boxes(n: usize, boxes: &[BoxPos]) -> Vec<Edge> {
    let mut e: Vec<Edge> = boxes.iter().map(|&b| edge_of_box(n, b)).collect();
    e.sort_unstable();
    e
}

/// The graph on `[n]` whose edges are the elbows of `p`.
pub fn tree_of_pipedream(p: &PipeDream) -> Result<Graph, Error> {
    let n = p.n();
    let w = pi(n);
    if !p.is_reduced_for(&w) {
        return Err(Error::NotReducedFor(w));
    }
    Graph::new(n, edges_of_boxes(n, &p.elbows()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub pipe_dreams: usize,
    pub trees: usize,
    pub injective: bool,
    /// Trees not hit by any pipe dream.
    pub missing: Vec<Graph>,
    /// Images that are not noncrossing alternating trees.
    pub extra: Vec<Graph>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.injective && self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn verify_bijection(n: usize, limit: SearchLimit) -> Result<BijectionReport, Error> {
    let set = PipeDreamSet::enumerate(&pi(n), limit)?;
    let images: Vec<Graph> = set.reduced().map(tree_of_pipedream).collect::<Result<_, _>>()?;
    let image_set: BTreeSet<Graph> = images.iter().cloned().collect();
    let trees: BTreeSet<Graph> = noncrossing_alternating_trees(n).into_iter().collect();
    Ok(BijectionReport {
        n,
        pipe_dreams: images.len(),
        trees: trees.len(),
        injective: image_set.len() == images.len(),
        missing: trees.difference(&image_set).cloned().collect(),
        extra: image_set.difference(&trees).cloned().collect(),
    })
}

/// Whether the simplex spanned by these vertex-figure points avoids every facet
/// `x_1 + ... + x_k = 0` of `V(P_n)`. The point of `(i, j)` lies off that facet exactly when
/// `i <= k < j`.
pub fn is_geometric_interior(n: usize, edges: &[Edge]) -> bool {
    (1..n).all(|k| edges.iter().any(|&(i, j)| i <= k && k < j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceMapReport {
    pub n: usize,
    pub interior_faces: usize,
    pub interior_intersections: usize,
    pub failure: Option<String>,
}

impl FaceMapReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Intersections of every nonempty subfamily of `trees` that keep at least one edge.
fn intersection_closure(trees: &[Graph]) -> BTreeSet<Graph> {
    let mut family: BTreeSet<Graph> = trees.iter().cloned().collect();
    loop {
        let items: Vec<Graph> = family.iter().cloned().collect();
        let mut added = false;
        for (a_idx, a) in items.iter().enumerate() {
            for b in &items[a_idx + 1..] {
                let c = a.intersection(b);
                if !c.edges().is_empty() && family.insert(c) {
                    added = true;
                }
            }
        }
        if !added {
            return family;
        }
    }
}

/// Interior faces of `PD(pi_n)` against interior intersections of the canonical simplices.
pub fn verify_face_map(n: usize, limit: SearchLimit) -> Result<FaceMapReport, Error> {
    let pdc = PipeDreamComplex::build(&pi(n), limit)?;
    let facets: Vec<Vec<BoxPos>> = pdc
        .complex()
        .facet_masks()
        .into_iter()
        .map(|m| pdc.complex().labels(m))
        .collect();
    let trees: Vec<Graph> = facets
        .iter()
        .map(|f| Graph::new(n, edges_of_boxes(n, f)))
        .collect::<Result<_, _>>()?;
    let interior = pdc.interior_faces();
    let mut report = FaceMapReport { n, interior_faces: interior.len(), interior_intersections: 0, failure: None };

    let mut images = BTreeSet::new();
    for face in &interior {
        let image = Graph::new(n, edges_of_boxes(n, &face.elbows))?;
        let containing: Vec<&Graph> = facets
            .iter()
            .zip(&trees)
            .filter(|(f, _)| face.elbows.iter().all(|b| f.contains(b)))
            .map(|(_, t)| t)
            .collect();
        let common = containing
            .iter()
            .skip(1)
            .fold(containing[0].clone(), |acc, t| acc.intersection(t));
        if common != image {
            report.failure = Some(format!("face {} maps to {} but its trees share {}", face.pipe_dream_label(), image, common));
            return Ok(report);
        }
        images.insert(image);
    }

    let target: BTreeSet<Graph> = intersection_closure(&trees)
        .into_iter()
        .filter(|g| is_geometric_interior(n, g.edges()))
        .collect();
    report.interior_intersections = target.len();
    if images.len() != interior.len() {
        report.failure = Some(String::from("two interior faces share an edge set"));
    } else if images != target {
        let missing = target.difference(&images).next();
        let extra = images.difference(&target).next();
        report.failure = Some(format!("intersection not hit: {:?}; face not an intersection: {:?}", missing.map(|g| format!("{}", g)), extra.map(|g| format!("{}", g))));
    }
    Ok(report)
}

trait Label {
    fn pipe_dream_label(&self) -> String;
}

impl Label for crate::pdc::InteriorFace {
    fn pipe_dream_label(&self) -> String {
        let parts: Vec<String> = self.elbows.iter().map(|b| format!("{}", b)).collect();
        format!("[{}]", parts.join(" "))
    }
}

/// Box positions placed at vertex-figure points, with the facet each reduced pipe dream
/// lands on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationMap {
    pub n: usize,
    pub vertex_map: BTreeMap<BoxPos, Point>,
    pub facet_map: Vec<(PipeDream, Simplex)>,
    pub faces_checked: usize,
    pub boundary_faces: usize,
}

impl RealizationMap {
    pub fn image(&self, boxes: &[BoxPos]) -> BTreeSet<Point> {
        boxes.iter().map(|b| self.vertex_map[b].clone()).collect()
    }
}

/// Builds the vertex map and checks facets, faces and boundary against the canonical
/// triangulation of `V(P_n)`. Requires `n >= 3`.
pub fn realize(n: usize, limit: SearchLimit) -> Result<RealizationMap, Error> {
    if n < 3 {
        return Err(Error::Realization(format!("n = {} has an empty complex", n)));
    }
    let fail = |msg: String| Err(Error::Realization(msg));
    let set = PipeDreamSet::enumerate(&pi(n), limit)?;
    let pdc = PipeDreamComplex::from_pipe_dreams(&set);

    let vertex_map: BTreeMap<BoxPos, Point> = pdc
        .staircase()
        .boxes()
        .iter()
        .map(|&b| (b, vertex_figure_point(n, edge_of_box(n, b))))
        .collect();
    let points: BTreeSet<Point> = vertex_map.values().cloned().collect();
    if points.len() != vertex_map.len() {
        return fail(String::from("vertex map is not injective"));
    }
    for p in &points {
        if crate::polytope::level(n, p) != crate::linalg::rat(1) {
            return fail(format!("{} is off the level-one hyperplane", p));
        }
    }

    let simplices = vertex_figure_simplices(n);
    let mut by_vertices: BTreeMap<BTreeSet<Point>, Simplex> =
        simplices.iter().map(|s| (s.vertex_set(), s.clone())).collect();
    for s in &simplices {
        if !s.is_nondegenerate() {
            return fail(format!("simplex of {:?} is degenerate", s.label));
        }
    }
    let mut facet_map = Vec::new();
    for p in set.reduced() {
        let image: BTreeSet<Point> = p.elbows().iter().map(|b| vertex_map[b].clone()).collect();
        match by_vertices.remove(&image) {
            Some(s) => facet_map.push((p.clone(), s)),
            None => return fail(format!("facet of {:?} has no matching simplex", p.crosses())),
        }
    }
    if !by_vertices.is_empty() {
        return fail(format!("{} simplices have no pipe dream", by_vertices.len()));
    }

    let triangulation = SimplicialComplex::from_facets(simplices.iter().map(|s| s.vertices()).collect());
    let image_faces = |faces: Vec<Vec<BoxPos>>| -> BTreeSet<BTreeSet<Point>> {
        faces
            .into_iter()
            .map(|f| f.iter().map(|b| vertex_map[b].clone()).collect())
            .collect()
    };
    let pd_faces = image_faces(pdc.faces());
    let geo_faces: BTreeSet<BTreeSet<Point>> = triangulation
        .faces()
        .into_iter()
        .map(|m| triangulation.labels(m).into_iter().collect())
        .collect();
    if pd_faces != geo_faces {
        return fail(String::from("face sets differ"));
    }

    let pd_boundary = image_faces(pdc.boundary_faces());
    let edge_of_point: BTreeMap<Point, Edge> = vertex_map
        .iter()
        .map(|(&b, p)| (p.clone(), edge_of_box(n, b)))
        .collect();
    let geo_boundary: BTreeSet<BTreeSet<Point>> = geo_faces
        .iter()
        .filter(|f| {
            let edges: Vec<Edge> = f.iter().map(|p| edge_of_point[p]).collect();
            !is_geometric_interior(n, &edges)
        })
        .cloned()
        .collect();
    if pd_boundary != geo_boundary {
        return fail(format!(
            "boundary differs: {} faces abstractly, {} on the facets of V(P_n)",
            pd_boundary.len(),
            geo_boundary.len()
        ));
    }

    Ok(RealizationMap { n, vertex_map, facet_map, faces_checked: pd_faces.len(), boundary_faces: pd_boundary.len() })
}

/// `N(m, k) = C(m, k) C(m, k - 1) / m`.
pub fn narayana(m: u64, k: u64) -> BigInt {
    if k == 0 || k > m {
        return BigInt::from(0);
    }
    BigInt::from(binomial(m, k)) * BigInt::from(binomial(m, k - 1)) / BigInt::from(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NarayanaCheck {
    pub n: usize,
    pub h: Vec<BigInt>,
    pub expected: Vec<BigInt>,
}

impl NarayanaCheck {
    pub fn passed(&self) -> bool {
        self.h == self.expected
    }
}

/// Coefficients of the h-polynomial of `PD(pi_n)` against the Narayana row `N(n-1, 1..n-1)`.
pub fn narayana_check(n: usize, limit: SearchLimit) -> Result<NarayanaCheck, Error> {
    let pdc = PipeDreamComplex::build(&pi(n), limit)?;
    let m = (n - 1) as u64;
    let mut h = pdc.f_vector().h_vector();
    while h.len() > 1 && h.last().is_some_and(|c| c == &BigInt::from(0)) {
        h.pop();
    }
    Ok(NarayanaCheck {
        n,
        h,
        expected: (1..=m).map(|k| narayana(m, k)).collect(),
    })
}

/// The abstract complex with facets `{0} ∪ T`, one per canonical simplex.
pub fn canonical_complex(n: usize) -> SimplicialComplex<Point> {
    SimplicialComplex::from_facets(crate::polytope::canonical_triangulation(n).iter().map(Simplex::vertices).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};
    use alloc::vec;

    fn bx(row: usize, col: usize) -> BoxPos {
        BoxPos { row, col }
    }

    #[test]
    fn star_tree() {
        let p = PipeDream::new(4, vec![bx(1, 3), bx(1, 2), bx(2, 2)]).unwrap();
        assert_eq!(p.elbows(), vec![bx(1, 1), bx(2, 1), bx(3, 1)]);
        assert_eq!(tree_of_pipedream(&p).unwrap(), Graph::new(4, vec![(1, 2), (1, 3), (1, 4)]).unwrap());
        let q = PipeDream::new(4, vec![bx(1, 1), bx(1, 2), bx(2, 2), bx(1, 3)]).unwrap();
        assert_eq!(tree_of_pipedream(&q), Err(Error::NotReducedFor(pi(4))));
    }

    #[test]
    fn bijections() {
        for (n, size) in [(3, 2), (4, 5), (5, 14), (6, 42)] {
            let r = verify_bijection(n, SearchLimit::default()).unwrap();
            assert!(r.passed(), "{:?}", r);
            assert_eq!((r.pipe_dreams, r.trees), (size, size));
        }
    }

    #[test]
    fn face_maps() {
        for n in 3..=6 {
            let r = verify_face_map(n, SearchLimit::default()).unwrap();
            assert!(r.passed(), "{:?}", r);
            assert_eq!(r.interior_faces, r.interior_intersections);
        }
        let pdc = PipeDreamComplex::build(&pi(4), SearchLimit::default()).unwrap();
        let interior = pdc.interior_faces();
        let codim2: Vec<_> = interior.iter().filter(|f| f.codim == 2).collect();
        assert_eq!(codim2.len(), 1);
        assert_eq!(edges_of_boxes(4, &codim2[0].elbows), vec![(1, 4)]);
        let all = noncrossing_alternating_trees(4);
        let common = all.iter().skip(1).fold(all[0].clone(), |a, t| a.intersection(t));
        assert_eq!(common.edges(), &[(1, 4)]);
        assert!(interior.iter().filter(|f| f.codim == 1).all(|f| f.elbows.len() == 2));
    }

    #[test]
    fn vertex_map_values() {
        let r = realize(4, SearchLimit::default()).unwrap();
        assert_eq!(r.vertex_map[&bx(1, 3)], Point::root(4, 3, 4));
        assert_eq!(r.vertex_map[&bx(3, 1)], Point::root(4, 1, 2));
        assert_eq!(r.vertex_map[&bx(1, 1)], Point::root(4, 1, 4).scaled(&ratio(1, 3)));
        assert_eq!(r.vertex_map.len(), 6);
        assert_eq!(r.facet_map.len(), 5);
        assert!(r.facet_map.iter().all(|(_, s)| s.generators.len() == 3));
        assert_eq!(crate::polytope::level(4, &r.vertex_map[&bx(1, 3)]), rat(1));
    }

    #[test]
    fn realizations() {
        for n in 3..=6 {
            let r = realize(n, SearchLimit::default()).unwrap();
            assert_eq!(r.vertex_map.len(), n * (n - 1) / 2);
        }
        assert!(realize(2, SearchLimit::default()).is_err());
    }

    #[test]
    fn narayana_rows() {
        let row = |n| narayana_check(n, SearchLimit::default()).unwrap();
        assert_eq!(row(3).expected, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(row(4).expected, [1, 3, 1].map(BigInt::from).to_vec());
        assert_eq!(row(5).expected, [1, 6, 6, 1].map(BigInt::from).to_vec());
        for n in 3..=7 {
            assert!(row(n).passed(), "{:?}", row(n));
        }
    }

    #[test]
    fn dimensions_agree() {
        for n in 3..=8 {
            let pdc = PipeDreamComplex::build(&pi(n), SearchLimit::default()).unwrap();
            assert_eq!(pdc.d(), n - 1);
            let s = &vertex_figure_simplices(n)[0];
            assert_eq!(s.generators.len(), n - 1);
            assert!(s.is_nondegenerate());
        }
    }

    #[test]
    fn canonical_h_matches() {
        for n in 3..=7 {
            let pdc = PipeDreamComplex::build(&pi(n), SearchLimit::default()).unwrap();
            assert_eq!(canonical_complex(n).h_polynomial().unwrap(), pdc.h_polynomial());
        }
    }
}
