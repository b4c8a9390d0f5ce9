//! Reduced forms in the subdivision algebra.
//!
//! A monomial is a multiset of edges `x_{ij}` (`i < j`) times a power of `b` (β). The rewrite
//! rule replaces one occurrence of `x_{ij} x_{jk}` by `x_{ik} (x_{ij} + x_{jk} + b)`, and a
//! reduced form is reached when no monomial contains such a pair.
//!
//! Termination: with `n` the largest vertex, `potential = |edges| (n-1) - sum (j - i)` is a
//! nonnegative integer that drops on every branch of every rewrite.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::grothendieck::groth_beta;
use crate::perm::Permutation;
use crate::poly::{var_names, MultiPolynomial};

pub type Edge = (usize, usize);
/// `(i, j, k)` with `i < j < k`, naming the pair `x_{ij} x_{jk}`.
pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeMonomial {
    edges: Vec<Edge>,
    beta: u32,
}

impl EdgeMonomial {
    pub fn new(mut edges: Vec<Edge>, beta: u32) -> Result<Self, Error> {
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i == 0 || i >= j) {
            return Err(Error::InvalidEdge(i, j));
        }
        edges.sort_unstable();
        Ok(Self { edges, beta })
    }

    /// The product of `x_{ij}` over the edges of a graph.
    pub fn from_graph(edges: &[Edge]) -> Result<Self, Error> {
        Self::new(edges.to_vec(), 0)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn max_vertex(&self) -> usize {
        self.edges.iter().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn is_reduced(&self) -> bool {
        reducible_pairs(&self.edges).is_empty()
    }

    pub fn potential(&self, n: usize) -> usize {
        let spread: usize = self.edges.iter().map(|&(i, j)| j - i).sum();
        self.edges.len() * n.saturating_sub(1) - spread
    }

    fn remove_one(&mut self, e: Edge) -> bool {
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                self.edges.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    fn insert(&mut self, e: Edge) {
        let pos = self.edges.binary_search(&e).unwrap_or_else(|p| p);
        self.edges.insert(pos, e);
    }
}

impl fmt::Display for EdgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.beta {
            0 => {}
            1 => parts.push("b".to_string()),
            k => parts.push(alloc::format!("b^{}", k)),
        }
        parts.extend(self.edges.iter().map(|&e| edge_var(e)));
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join("*"))
    }
}

/// Variable name of `x_{ij}`: `x12`, or `x10_12` once an index has two digits.
pub fn edge_var((i, j): Edge) -> String {
    if i < 10 && j < 10 {
        alloc::format!("x{}{}", i, j)
    } else {
        alloc::format!("x{}_{}", i, j)
    }
}

/// All `(i, j, k)` with `(i, j)` and `(j, k)` among `edges`, in lexicographic order.
pub fn reducible_pairs(edges: &[Edge]) -> Vec<Triple> {
    let mut out: Vec<Triple> = Vec::new();
    for &(i, j) in edges {
        for &(j2, k) in edges {
            if j2 == j {
                out.push((i, j, k));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// How to pick the pair to rewrite in a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    LexFirst,
    ReverseLex,
    Random(u64),
    /// Takes the first listed triple that applies; falls back to lex-first.
    Script(Vec<Triple>),
}

impl Strategy {
    /// Parses `lex`, `rlex`, `random` (using `seed`) or `script:<triples>`, where triples are
    /// `234,123` for single-digit vertices or `(2,3,4),(1,2,3)`.
    pub fn parse(s: &str, seed: u64) -> Result<Self, Error> {
        match s {
            "lex" => Ok(Strategy::LexFirst),
            "rlex" => Ok(Strategy::ReverseLex),
            "random" => Ok(Strategy::Random(seed)),
            _ => match s.strip_prefix("script:") {
                Some(rest) => parse_triples(rest).map(Strategy::Script),
                None => Err(Error::Parse(alloc::format!("unknown strategy {:?}", s))),
            },
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Strategy::parse(s, 0)
    }
}

fn parse_triples(s: &str) -> Result<Vec<Triple>, Error> {
    let bad = || Error::Parse(alloc::format!("bad triple list {:?}", s));
    let s = s.trim();
    let mut out = Vec::new();
    if s.contains('(') {
        let nums: Vec<usize> = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if !nums.len().is_multiple_of(3) {
            return Err(bad());
        }
        for c in nums.chunks(3) {
            out.push((c[0], c[1], c[2]));
        }
    } else {
        for part in s.split(',').filter(|p| !p.is_empty()) {
            let d: Vec<usize> = part
                .trim()
                .chars()
                .map(|c| c.to_digit(10).map(|v| v as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?;
            if d.len() != 3 {
                return Err(bad());
            }
            out.push((d[0], d[1], d[2]));
        }
    }
    if out.iter().any(|&(i, j, k)| !(0 < i && i < j && j < k)) {
        return Err(bad());
    }
    Ok(out)
}

/// Stateful pair chooser; the random strategy draws from a ChaCha8 stream seeded once.
pub struct PairChooser {
    strategy: Strategy,
    rng: ChaCha8Rng,
}

impl PairChooser {
    pub fn new(strategy: &Strategy) -> Self {
        let seed = match strategy {
            Strategy::Random(s) => *s,
            _ => 0,
        };
        Self { strategy: strategy.clone(), rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn choose(&mut self, edges: &[Edge]) -> Option<Triple> {
        let pairs = reducible_pairs(edges);
        if pairs.is_empty() {
            return None;
        }
        Some(match &self.strategy {
            Strategy::LexFirst => pairs[0],
            Strategy::ReverseLex => pairs[pairs.len() - 1],
            Strategy::Random(_) => pairs[self.rng.gen_range(0..pairs.len())],
            Strategy::Script(script) => script
                .iter()
                .copied()
                .find(|t| pairs.binary_search(t).is_ok())
                .unwrap_or(pairs[0]),
        })
    }
}

pub fn reducible_pair(m: &EdgeMonomial, strategy: &Strategy) -> Option<Triple> {
    PairChooser::new(strategy).choose(&m.edges)
}

/// The three monomials replacing `m` when `x_{ij} x_{jk}` is rewritten: `(j,k) -> (i,k)`,
/// `(i,j) -> (i,k)`, and both removed with `(i,k)` added and one more `b`.
pub fn reduce_once(m: &EdgeMonomial, (i, j, k): Triple) -> Result<[EdgeMonomial; 3], Error> {
    let absent = Error::PairAbsent { i, j, k };
    if !(i < j && j < k) || m.edges.binary_search(&(i, j)).is_err() || m.edges.binary_search(&(j, k)).is_err() {
        return Err(absent);
    }
    let mut g1 = m.clone();
    g1.remove_one((j, k));
    g1.insert((i, k));
    let mut g2 = m.clone();
    g2.remove_one((i, j));
    g2.insert((i, k));
    let mut g3 = m.clone();
    g3.remove_one((i, j));
    g3.remove_one((j, k));
    g3.insert((i, k));
    g3.beta += 1;
    Ok([g1, g2, g3])
}

/// A reduced form: alternating monomials with merged integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReducedForm {
    terms: BTreeMap<EdgeMonomial, BigInt>,
}

impl ReducedForm {
    pub fn terms(&self) -> impl Iterator<Item = (&EdgeMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms<I: IntoIterator<Item = (EdgeMonomial, BigInt)>>(terms: I) -> Self {
        let mut out = ReducedForm::default();
        for (m, c) in terms {
            *out.terms.entry(m).or_default() += c;
        }
        out.terms.retain(|_, c| *c != BigInt::from(0));
        out
    }

    /// Every `x_{ij} -> 1`: a polynomial in `b`.
    pub fn specialize(&self) -> MultiPolynomial {
        let mut p = MultiPolynomial::zero(var_names(&["b"]));
        for (m, c) in &self.terms {
            p.add_term(alloc::vec![m.beta], c.clone());
        }
        p
    }

    /// The form as a polynomial over the occurring `x_{ij}` (sorted) followed by `b`.
    pub fn to_polynomial(&self) -> MultiPolynomial {
        let mut edges: Vec<Edge> = self.terms.keys().flat_map(|m| m.edges.iter().copied()).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut vars: Vec<String> = edges.iter().map(|&e| edge_var(e)).collect();
        vars.push("b".to_string());
        let mut p = MultiPolynomial::zero(vars);
        for (m, c) in &self.terms {
            let mut exp = alloc::vec![0u32; edges.len() + 1];
            for e in &m.edges {
                exp[edges.binary_search(e).unwrap()] += 1;
            }
            exp[edges.len()] = m.beta;
            p.add_term(exp, c.clone());
        }
        p
    }
}

impl fmt::Display for ReducedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Rewrites until every monomial is alternating, merging like terms after each layer.
pub fn reduced_form(m: &EdgeMonomial, strategy: &Strategy) -> ReducedForm {
    let n = m.max_vertex();
    let mut chooser = PairChooser::new(strategy);
    let mut pending: BTreeMap<EdgeMonomial, BigInt> = BTreeMap::new();
    pending.insert(m.clone(), BigInt::from(1));
    let mut done = ReducedForm::default();
    while !pending.is_empty() {
        let mut next: BTreeMap<EdgeMonomial, BigInt> = BTreeMap::new();
        for (mono, coef) in pending {
            match chooser.choose(&mono.edges) {
                None => *done.terms.entry(mono).or_default() += coef,
                Some(t) => {
                    let before = mono.potential(n);
                    for child in reduce_once(&mono, t).expect("chosen pair is present") {
                        assert!(child.potential(n) < before, "potential must drop");
                        *next.entry(child).or_default() += &coef;
                    }
                }
            }
        }
        pending = next;
    }
    done.terms.retain(|_, c| *c != BigInt::from(0));
    done
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    G1,
    G2,
    G3,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::G1 => "G1",
            Branch::G2 => "G2",
            Branch::G3 => "G3",
        })
    }
}

/// Unmerged reduction tree; leaves are alternating monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionNode {
    pub monomial: EdgeMonomial,
    pub pair: Option<Triple>,
    pub children: Vec<(Branch, ReductionNode)>,
}

impl ReductionNode {
    pub fn leaves(&self) -> Vec<&EdgeMonomial> {
        if self.children.is_empty() {
            return alloc::vec![&self.monomial];
        }
        self.children.iter().flat_map(|(_, c)| c.leaves()).collect()
    }
}

pub fn reduction_tree(m: &EdgeMonomial, strategy: &Strategy) -> ReductionNode {
    let mut chooser = PairChooser::new(strategy);
    expand(m.clone(), &mut chooser)
}

fn expand(m: EdgeMonomial, chooser: &mut PairChooser) -> ReductionNode {
    match chooser.choose(&m.edges) {
        None => ReductionNode { monomial: m, pair: None, children: Vec::new() },
        Some(t) => {
            let [g1, g2, g3] = reduce_once(&m, t).expect("chosen pair is present");
            let children = alloc::vec![
                (Branch::G1, expand(g1, chooser)),
                (Branch::G2, expand(g2, chooser)),
                (Branch::G3, expand(g3, chooser)),
            ];
            ReductionNode { monomial: m, pair: Some(t), children }
        }
    }
}

/// `Q_G(b)`: the reduced form of `prod x_{ij}` over the edges of `G`, at `x_{ij} = 1`.
pub fn q_polynomial(edges: &[Edge], strategy: &Strategy) -> Result<MultiPolynomial, Error> {
    Ok(reduced_form(&EdgeMonomial::from_graph(edges)?, strategy).specialize())
}

pub fn path_edges(n: usize) -> Vec<Edge> {
    (1..n).map(|i| (i, i + 1)).collect()
}

/// The pair choices reproducing the worked reduction of `x12 x23 x34`.
pub fn worked_example_script() -> Strategy {
    Strategy::Script(alloc::vec![(2, 3, 4), (1, 2, 3), (1, 2, 4)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirillovCheck {
    pub n: usize,
    pub q_poly: MultiPolynomial,
    pub groth: MultiPolynomial,
}

impl KirillovCheck {
    pub fn passed(&self) -> bool {
        self.q_poly == self.groth
    }
}

/// `Q_{P_n}(b)` against `G_pi(b)` for `pi = 1 n n-1 ... 2`.
pub fn verify_kirillov(n: usize, strategy: &Strategy) -> Result<KirillovCheck, Error> {
    let q_poly = q_polynomial(&path_edges(n), strategy)?;
    let groth = groth_beta(&Permutation::one_then_reversed(n))?;
    Ok(KirillovCheck { n, q_poly, groth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mono(edges: &[Edge], beta: u32) -> EdgeMonomial {
        EdgeMonomial::new(edges.to_vec(), beta).unwrap()
    }

    #[test]
    fn pair_selection() {
        let m = mono(&[(1, 2), (2, 3), (3, 4)], 0);
        assert_eq!(reducible_pair(&m, &Strategy::LexFirst), Some((1, 2, 3)));
        assert_eq!(reducible_pair(&m, &Strategy::ReverseLex), Some((2, 3, 4)));
        assert_eq!(reducible_pair(&mono(&[(1, 2), (1, 3)], 0), &Strategy::LexFirst), None);
        assert_eq!(reducible_pair(&mono(&[(1, 3), (2, 3)], 0), &Strategy::LexFirst), None);
        for seed in 0..10 {
            let t = reducible_pair(&m, &Strategy::Random(seed)).unwrap();
            assert!(t == (1, 2, 3) || t == (2, 3, 4));
        }
    }

    #[test]
    fn single_rewrites() {
        let [a, b, c] = reduce_once(&mono(&[(1, 2), (2, 3)], 0), (1, 2, 3)).unwrap();
        assert_eq!((a, b, c), (mono(&[(1, 2), (1, 3)], 0), mono(&[(1, 3), (2, 3)], 0), mono(&[(1, 3)], 1)));
        let [a, b, c] = reduce_once(&mono(&[(1, 2), (2, 3), (3, 4)], 0), (2, 3, 4)).unwrap();
        assert_eq!(a, mono(&[(1, 2), (2, 4), (2, 3)], 0));
        assert_eq!(b, mono(&[(1, 2), (3, 4), (2, 4)], 0));
        assert_eq!(c, mono(&[(1, 2), (2, 4)], 1));
        let [a, b, c] = reduce_once(&mono(&[(1, 2), (1, 2), (2, 3)], 0), (1, 2, 3)).unwrap();
        assert_eq!(a, mono(&[(1, 2), (1, 3), (1, 2)], 0));
        assert_eq!(b, mono(&[(1, 2), (1, 3), (2, 3)], 0));
        assert_eq!(c, mono(&[(1, 2), (1, 3)], 1));
        assert_eq!(
            reduce_once(&mono(&[(1, 2), (1, 3)], 0), (1, 2, 3)),
            Err(Error::PairAbsent { i: 1, j: 2, k: 3 })
        );
    }

    #[test]
    fn small_reduced_forms() {
        let x12 = mono(&[(1, 2)], 0);
        let r = reduced_form(&x12, &Strategy::LexFirst);
        assert_eq!(r.len(), 1);
        assert_eq!(r.to_string(), "x12");
        let r = reduced_form(&mono(&[(1, 2), (2, 3)], 0), &Strategy::LexFirst);
        assert_eq!(r.to_string(), "x12*x13 + x13*x23 + x13*b");
        assert_eq!(q_polynomial(&path_edges(2), &Strategy::LexFirst).unwrap().to_string(), "1");
        assert_eq!(q_polynomial(&path_edges(3), &Strategy::LexFirst).unwrap().to_string(), "b + 2");
    }

    #[test]
    fn worked_example() {
        let r = reduced_form(&EdgeMonomial::from_graph(&path_edges(4)).unwrap(), &worked_example_script());
        let expected = ReducedForm::from_terms(
            [
                (vec![(1, 3), (1, 4), (1, 2)], 0),
                (vec![(1, 3), (2, 4), (1, 4)], 0),
                (vec![(1, 3), (1, 4)], 1),
                (vec![(2, 4), (2, 3), (1, 3)], 0),
                (vec![(2, 4), (1, 3)], 1),
                (vec![(3, 4), (1, 4), (1, 2)], 0),
                (vec![(3, 4), (2, 4), (1, 4)], 0),
                (vec![(3, 4), (1, 4)], 1),
                (vec![(1, 4), (1, 2)], 1),
                (vec![(2, 4), (1, 4)], 1),
                (vec![(1, 4)], 2),
            ]
            .into_iter()
            .map(|(e, b)| (mono(&e, b), BigInt::from(1))),
        );
        assert_eq!(r, expected);
        assert_eq!(r.specialize().to_string(), "b^2 + 5*b + 5");
    }

    #[test]
    fn strategies_differ_before_specialising() {
        let m = EdgeMonomial::from_graph(&path_edges(4)).unwrap();
        let lex = reduced_form(&m, &Strategy::LexFirst);
        let script = reduced_form(&m, &worked_example_script());
        assert_ne!(lex, script);
        assert_eq!(lex.specialize(), script.specialize());
    }

    #[test]
    fn tree_leaves_match_merged_form() {
        let m = EdgeMonomial::from_graph(&path_edges(5)).unwrap();
        let tree = reduction_tree(&m, &Strategy::LexFirst);
        let from_tree = ReducedForm::from_terms(tree.leaves().into_iter().map(|l| (l.clone(), BigInt::from(1))));
        assert_eq!(from_tree, reduced_form(&m, &Strategy::LexFirst));
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!(Strategy::parse("lex", 0).unwrap(), Strategy::LexFirst);
        assert_eq!(Strategy::parse("random", 9).unwrap(), Strategy::Random(9));
        assert_eq!(Strategy::parse("script:234,123,124", 0).unwrap(), worked_example_script());
        assert_eq!(Strategy::parse("script:(2,3,4),(1,2,3),(1,2,4)", 0).unwrap(), worked_example_script());
        assert!(Strategy::parse("script:321", 0).is_err());
        assert!(Strategy::parse("best", 0).is_err());
    }

    #[test]
    fn kirillov_small() {
        for n in 2..=5 {
            let c = verify_kirillov(n, &Strategy::LexFirst).unwrap();
            assert!(c.passed(), "n = {}: {} vs {}", n, c.q_poly, c.groth);
        }
        assert_eq!(verify_kirillov(4, &Strategy::LexFirst).unwrap().q_poly.to_string(), "b^2 + 5*b + 5");
    }
}
