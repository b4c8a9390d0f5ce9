//! Root polytopes of acyclic graphs, flow polytopes of augmented graphs, reduction-driven
//! dissections and the canonical triangulation of `P(P_n)`, all over exact rationals.
//!
//! Roots live in `R^n` with `e_i - e_j` for `i < j`. Flow vectors live in `R^{E(G~)}`, the
//! coordinates ordered as the edges of [`AugmentedGraph::edges`].

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Error;
use crate::linalg::{self, rat, Rational};
use crate::poly::{var_names, MultiPolynomial};
use crate::subdivision::{reducible_pairs, Edge, PairChooser, Strategy, Triple};

/// A graph on `[n]` with edges `(i, j)`, `i < j`, kept as a sorted multiset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Result<Self, Error> {
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i == 0 || i >= j || j > n) {
            return Err(Error::InvalidEdge(i, j));
        }
        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    pub fn path(n: usize) -> Self {
        Self { n, edges: (1..n).map(|i| (i, i + 1)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Acyclic as an undirected multigraph: a repeated edge counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &(i, j) in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    fn require_acyclic(&self) -> Result<(), Error> {
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::Cyclic)
        }
    }

    /// No `i < j < k` with `(i,j)` and `(j,k)` both edges.
    pub fn is_alternating(&self) -> bool {
        reducible_pairs(&self.edges).is_empty()
    }

    /// No `i < j < k < l` with `(i,k)` and `(j,l)` both edges.
    pub fn is_noncrossing(&self) -> bool {
        !self.edges.iter().any(|&(i, k)| {
            self.edges.iter().any(|&(j, l)| i < j && j < k && k < l)
        })
    }

    /// Graph on `[n]` with the edges common to both.
    pub fn intersection(&self, other: &Graph) -> Graph {
        let edges = self.edges.iter().copied().filter(|e| other.has_edge(*e)).collect();
        Graph { n: self.n, edges }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(i, j)| alloc::format!("({},{})", i, j)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn zero(dim: usize) -> Self {
        Point(alloc::vec![Rational::zero(); dim])
    }

    /// `e_i - e_j` in `R^n`.
    pub fn root(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::zero(n);
        p.0[i - 1] += Rational::one();
        p.0[j - 1] -= Rational::one();
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Point(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Point) -> Self {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinates as strings such as `"-1/2"`.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// `{e_p - e_q : G has an increasing path from p to q}`.
pub fn positive_roots_in_cone(g: &Graph) -> Result<BTreeSet<Point>, Error> {
    g.require_acyclic()?;
    let mut out = BTreeSet::new();
    for p in 1..=g.n {
        let mut stack = alloc::vec![p];
        let mut seen = BTreeSet::new();
        while let Some(v) = stack.pop() {
            for &(a, b) in &g.edges {
                if a == v && seen.insert(b) {
                    out.insert(Point::root(g.n, p, b));
                    stack.push(b);
                }
            }
        }
    }
    Ok(out)
}

/// `{0}` together with [`positive_roots_in_cone`].
pub fn root_polytope_vertices(g: &Graph) -> Result<BTreeSet<Point>, Error> {
    let mut v = positive_roots_in_cone(g)?;
    v.insert(Point::zero(g.n));
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Source,
    Inner(usize),
    Sink,
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Source => f.write_str("s"),
            Node::Inner(i) => write!(f, "{}", i),
            Node::Sink => f.write_str("t"),
        }
    }
}

/// `G~`: `G` plus a source `s` below `1`, a sink `t` above `n`, and edges `(s,i)`, `(i,t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedGraph {
    base: Graph,
    edges: Vec<(Node, Node)>,
}

impl AugmentedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Edges of `G` in order, then `(s, 1..n)`, then `(1..n, t)`; this fixes the flow
    /// coordinates.
    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.base.n + 2
    }
}

pub fn augment(g: &Graph) -> AugmentedGraph {
    let mut edges: Vec<(Node, Node)> =
        g.edges.iter().map(|&(i, j)| (Node::Inner(i), Node::Inner(j))).collect();
    edges.extend((1..=g.n).map(|i| (Node::Source, Node::Inner(i))));
    edges.extend((1..=g.n).map(|i| (Node::Inner(i), Node::Sink)));
    AugmentedGraph { base: g.clone(), edges }
}

/// Unit flows along the increasing `s -> t` paths, as 0/1 vectors over `E(G~)`.
pub fn flow_vertices(aug: &AugmentedGraph) -> Vec<Point> {
    let m = aug.edges.len();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    fn walk(aug: &AugmentedGraph, at: Node, path: &mut Vec<usize>, out: &mut Vec<Point>, m: usize) {
        if at == Node::Sink {
            let mut p = Point::zero(m);
            for &e in path.iter() {
                p.0[e] = Rational::one();
            }
            out.push(p);
            return;
        }
        for (idx, &(a, b)) in aug.edges.iter().enumerate() {
            if a == at {
                path.push(idx);
                walk(aug, b, path, out, m);
                path.pop();
            }
        }
    }
    walk(aug, Node::Source, &mut path, &mut out, m);
    out.sort();
    out
}

/// `f(p(x))`: drop the coordinates on edges at `s` or `t`, then send the unit vector of
/// `(i, j)` to `e_i - e_j`.
pub fn project_and_map(aug: &AugmentedGraph, points: &[Point]) -> BTreeSet<Point> {
    let n = aug.base.n;
    points
        .iter()
        .map(|x| {
            let mut y = Point::zero(n);
            for (coord, &(a, b)) in x.0.iter().zip(&aug.edges) {
                if let (Node::Inner(i), Node::Inner(j)) = (a, b) {
                    y.0[i - 1] += coord;
                    y.0[j - 1] -= coord;
                }
            }
            y
        })
        .collect()
}

/// `(G1, G2, G3)`: `(j,k) -> (i,k)`, `(i,j) -> (i,k)`, and both replaced by `(i,k)`.
pub fn graph_reduce(g: &Graph, (i, j, k): Triple) -> Result<(Graph, Graph, Graph), Error> {
    let absent = Error::PairAbsent { i, j, k };
    if !(i < j && j < k) || !g.has_edge((i, j)) || !g.has_edge((j, k)) {
        return Err(absent);
    }
    let without = |e: Edge, edges: &[Edge]| {
        let mut v = edges.to_vec();
        let pos = v.binary_search(&e).unwrap();
        v.remove(pos);
        v
    };
    let with = |e: Edge, mut v: Vec<Edge>| {
        let pos = v.binary_search(&e).unwrap_or_else(|p| p);
        v.insert(pos, e);
        Graph { n: g.n, edges: v }
    };
    let g1 = with((i, k), without((j, k), &g.edges));
    let g2 = with((i, k), without((i, j), &g.edges));
    let g3 = with((i, k), without((j, k), &without((i, j), &g.edges)));
    Ok((g1, g2, g3))
}

/// One node of a dissection tree. An internal node records the reduced pair, the two
/// pieces `G1`, `G2` and the shared facet `G3`, which is itself dissected further.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionNode {
    pub graph: Graph,
    pub step: Option<Box<DissectionStep>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionStep {
    pub pair: Triple,
    pub left: DissectionNode,
    pub right: DissectionNode,
    pub intersection: DissectionNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    pub root: DissectionNode,
}

impl DissectionNode {
    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Graph>) {
        match &self.step {
            None => out.push(&self.graph),
            Some(s) => {
                s.left.collect_leaves(out);
                s.right.collect_leaves(out);
                s.intersection.collect_leaves(out);
            }
        }
    }
}

impl Dissection {
    pub fn graph(&self) -> &Graph {
        &self.root.graph
    }

    pub fn leaves(&self) -> Vec<&Graph> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    /// Leaves with as many edges as the root: the top-dimensional simplices.
    pub fn full_dimensional_leaves(&self) -> Vec<&Graph> {
        let d = self.graph().edges.len();
        self.leaves().into_iter().filter(|g| g.edges.len() == d).collect()
    }

    /// `sum over leaves of b^(edges lost)`.
    pub fn census(&self) -> MultiPolynomial {
        let d = self.graph().edges.len();
        let mut p = MultiPolynomial::zero(var_names(&["b"]));
        for leaf in self.leaves() {
            p.add_term(alloc::vec![(d - leaf.edges.len()) as u32], BigInt::one());
        }
        p
    }

    /// `ConvHull(0, roots of leaf)` for each top-dimensional leaf.
    pub fn leaf_simplices(&self) -> Vec<Simplex> {
        self.full_dimensional_leaves()
            .into_iter()
            .map(|g| Simplex::with_origin(g.n, g.edges.clone(), g.edges.iter().map(|&(i, j)| Point::root(g.n, i, j)).collect()))
            .collect()
    }
}

pub fn dissect(g: &Graph, strategy: &Strategy) -> Result<Dissection, Error> {
    g.require_acyclic()?;
    let mut chooser = PairChooser::new(strategy);
    Ok(Dissection { root: dissect_node(g.clone(), &mut chooser) })
}

fn dissect_node(g: Graph, chooser: &mut PairChooser) -> DissectionNode {
    match chooser.choose(&g.edges) {
        None => DissectionNode { graph: g, step: None },
        Some(t) => {
            let (g1, g2, g3) = graph_reduce(&g, t).expect("chosen pair is present");
            let left = dissect_node(g1, chooser);
            let right = dissect_node(g2, chooser);
            let intersection = dissect_node(g3, chooser);
            DissectionNode { graph: g, step: Some(Box::new(DissectionStep { pair: t, left, right, intersection })) }
        }
    }
}

/// All spanning trees of `K_n`, decoded from Prüfer sequences.
pub fn spanning_trees(n: usize) -> Vec<Graph> {
    if n < 2 {
        return alloc::vec![Graph { n, edges: Vec::new() }];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(len);
        for _ in 0..len {
            seq.push(code % n + 1);
            code /= n;
        }
        out.push(prufer_decode(n, &seq));
    }
    out
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = alloc::vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (1..=n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    Graph { n, edges }
}

/// Noncrossing alternating spanning trees of `K_n`, sorted by edge list.
pub fn noncrossing_alternating_trees(n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = spanning_trees(n)
        .into_iter()
        .filter(|t| t.is_alternating() && t.is_noncrossing())
        .collect();
    out.sort();
    out
}

/// A simplex given by its vertices: optionally the origin, followed by generators. Each
/// simplex carries the edge labels its generators came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub n: usize,
    pub label: Vec<Edge>,
    pub has_origin: bool,
    pub generators: Vec<Point>,
}

impl Simplex {
    pub fn with_origin(n: usize, label: Vec<Edge>, generators: Vec<Point>) -> Self {
        Self { n, label, has_origin: true, generators }
    }

    pub fn without_origin(n: usize, label: Vec<Edge>, generators: Vec<Point>) -> Self {
        Self { n, label, has_origin: false, generators }
    }

    pub fn vertices(&self) -> Vec<Point> {
        let mut v = Vec::new();
        if self.has_origin {
            v.push(Point::zero(self.n));
        }
        v.extend(self.generators.iter().cloned());
        v
    }

    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.vertices().into_iter().collect()
    }

    /// Affine independence of the vertices.
    pub fn is_nondegenerate(&self) -> bool {
        let mut m: Vec<Vec<Rational>> = self.generators.iter().map(|g| g.0.clone()).collect();
        if !self.has_origin {
            for row in m.iter_mut() {
                row.push(Rational::one());
            }
        }
        linalg::rank(&m) == m.len()
    }

    /// Determinant of the generator matrix restricted to coordinates `1..n-1`.
    pub fn generator_determinant(&self) -> Rational {
        let k = self.n - 1;
        let m: Vec<Vec<Rational>> = self.generators.iter().map(|g| g.0[..k].to_vec()).collect();
        assert_eq!(m.len(), k, "full-dimensional simplex expected");
        linalg::determinant(&m)
    }

    /// Coefficients of `x` on the generators, with an affine constraint when the origin is
    /// not a vertex. `None` if `x` is outside the affine hull.
    pub fn coordinates(&self, x: &Point) -> Option<Vec<Rational>> {
        if self.has_origin {
            let cols: Vec<Vec<Rational>> = self.generators.iter().map(|g| g.0.clone()).collect();
            linalg::solve_columns(&cols, &x.0)
        } else {
            let cols: Vec<Vec<Rational>> = self
                .generators
                .iter()
                .map(|g| {
                    let mut c = g.0.clone();
                    c.push(Rational::one());
                    c
                })
                .collect();
            let mut target = x.0.clone();
            target.push(Rational::one());
            linalg::solve_columns(&cols, &target)
        }
    }

    pub fn contains(&self, x: &Point) -> bool {
        match self.coordinates(x) {
            None => false,
            Some(c) => {
                let sum = c.iter().fold(Rational::zero(), |a, v| a + v);
                c.iter().all(|v| !v.is_negative()) && (!self.has_origin || sum <= Rational::one())
            }
        }
    }

    /// In the relative interior: every barycentric coordinate strictly positive.
    pub fn contains_in_interior(&self, x: &Point) -> bool {
        match self.coordinates(x) {
            None => false,
            Some(c) => {
                let sum = c.iter().fold(Rational::zero(), |a, v| a + v);
                c.iter().all(|v| v.is_positive()) && (!self.has_origin || sum < Rational::one())
            }
        }
    }

    /// Inequalities `a . y <= b` over the first `n-1` coordinates describing a
    /// full-dimensional simplex with the origin inside the hyperplane `sum x = 0`.
    fn inequalities(&self) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        assert!(self.has_origin, "origin simplex expected");
        let k = self.n - 1;
        let m: Vec<Vec<Rational>> = (0..k)
            .map(|row| self.generators.iter().map(|g| g.0[row].clone()).collect())
            .collect();
        let inv = linalg::inverse(&m).expect("full-dimensional simplex");
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut total = alloc::vec![Rational::zero(); k];
        for row in &inv {
            a.push(row.iter().map(|v| -v).collect());
            b.push(Rational::zero());
            for (t, v) in total.iter_mut().zip(row) {
                *t += v;
            }
        }
        a.push(total);
        b.push(Rational::one());
        (a, b)
    }
}

/// `P(T)` for each noncrossing alternating spanning tree `T` of `K_n`.
pub fn canonical_triangulation(n: usize) -> Vec<Simplex> {
    noncrossing_alternating_trees(n)
        .into_iter()
        .map(|t| {
            let gens = t.edges.iter().map(|&(i, j)| Point::root(n, i, j)).collect();
            Simplex::with_origin(n, t.edges, gens)
        })
        .collect()
}

/// `lambda(x) = sum_k (n - k) x_k`; `lambda(e_i - e_j) = j - i`.
pub fn level(n: usize, x: &Point) -> Rational {
    x.0.iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (k, v)| acc + v * rat((n - k - 1) as i64))
}

/// `(e_i - e_j) / (j - i)`: the root scaled onto the hyperplane `lambda = 1`.
pub fn vertex_figure_point(n: usize, (i, j): Edge) -> Point {
    Point::root(n, i, j).scaled(&linalg::ratio(1, (j - i) as i64))
}

/// `P(T) ∩ {lambda = 1}` for each canonical simplex.
pub fn vertex_figure_simplices(n: usize) -> Vec<Simplex> {
    noncrossing_alternating_trees(n)
        .into_iter()
        .map(|t| {
            let gens = t.edges.iter().map(|&e| vertex_figure_point(n, e)).collect();
            Simplex::without_origin(n, t.edges, gens)
        })
        .collect()
}

/// Vertices of `P(T_a) ∩ P(T_b)` for two full-dimensional origin simplices, by exhaustive
/// basis enumeration of the joint inequality system.
pub fn intersection_vertices(a: &Simplex, b: &Simplex) -> BTreeSet<Point> {
    let n = a.n;
    let (mut ia, mut ba) = a.inequalities();
    let (ib, bb) = b.inequalities();
    ia.extend(ib);
    ba.extend(bb);
    linalg::polyhedron_vertices(&ia, &ba, n - 1)
        .into_iter()
        .map(|mut y| {
            let last = y.iter().fold(Rational::zero(), |acc, v| acc - v);
            y.push(last);
            Point(y)
        })
        .collect()
}

/// Indices of the simplices containing `x`.
pub fn locate(simplices: &[Simplex], x: &Point) -> Vec<usize> {
    simplices
        .iter()
        .enumerate()
        .filter(|(_, s)| s.contains(x))
        .map(|(i, _)| i)
        .collect()
}

/// A random acyclic graph on `[n]`: shuffle all pairs and keep each with probability
/// `density` when it joins two components.
pub fn random_acyclic_graph<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut pairs: Vec<Edge> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    pairs.shuffle(rng);
    let mut g = Graph { n, edges: Vec::new() };
    for e in pairs {
        if rng.gen_bool(density) {
            let mut trial = g.clone();
            trial.edges.push(e);
            trial.edges.sort_unstable();
            if trial.is_acyclic() {
                g = trial;
            }
        }
    }
    g
}

/// Random points of `P(P_n)` as convex combinations of all its vertices with positive
/// integer weights in `1..=scale`; the full support puts them in the interior.
pub fn sample_interior_points<R: Rng + ?Sized>(n: usize, count: usize, scale: u64, rng: &mut R) -> Vec<Point> {
    let vertices: Vec<Point> = root_polytope_vertices(&Graph::path(n)).expect("path is acyclic").into_iter().collect();
    (0..count)
        .map(|_| {
            let weights: Vec<u64> = vertices.iter().map(|_| rng.gen_range(1..=scale)).collect();
            let total: u64 = weights.iter().sum();
            let mut p = Point::zero(n);
            for (v, &w) in vertices.iter().zip(&weights) {
                p = p.add(&v.scaled(&Rational::new(BigInt::from(w), BigInt::from(total))));
            }
            p
        })
        .collect()
}
