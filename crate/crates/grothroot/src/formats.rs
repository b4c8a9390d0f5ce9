//! JSON shapes for the core types. Big integers and rationals travel as strings.

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use grothroot_core::linalg::Rational;
use grothroot_core::pipedream::{BoxPos, PipeDream};
use grothroot_core::subdivision::EdgeMonomial;
use grothroot_core::{Graph, MultiPolynomial, PipeDreamComplex, Point, ReducedForm, Simplex};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipeDreamJson {
    pub n: usize,
    pub crosses: Vec<[usize; 2]>,
}

impl From<&PipeDream> for PipeDreamJson {
    fn from(p: &PipeDream) -> Self {
        Self { n: p.n(), crosses: p.crosses().iter().map(|b| [b.row, b.col]).collect() }
    }
}

impl TryFrom<&PipeDreamJson> for PipeDream {
    type Error = anyhow::Error;

    fn try_from(j: &PipeDreamJson) -> Result<Self> {
        let crosses = j.crosses.iter().map(|&[row, col]| BoxPos { row, col }).collect();
        Ok(PipeDream::new(j.n, crosses)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<[usize; 2]>,
    pub facets: Vec<Vec<usize>>,
}

impl From<&PipeDreamComplex> for ComplexJson {
    fn from(pdc: &PipeDreamComplex) -> Self {
        let c = pdc.complex();
        Self {
            vertices: c.vertices().iter().map(|b| [b.row, b.col]).collect(),
            facets: c.facets().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&MultiPolynomial> for PolynomialJson {
    fn from(p: &MultiPolynomial) -> Self {
        Self {
            vars: p.vars().to_vec(),
            terms: p.terms().map(|(e, c)| TermJson { exp: e.clone(), coef: c.to_string() }).collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for MultiPolynomial {
    type Error = anyhow::Error;

    fn try_from(j: &PolynomialJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exp.len() != j.vars.len() {
                bail!("exponent {:?} does not match {} variables", t.exp, j.vars.len());
            }
            let c = BigInt::from_str(&t.coef).with_context(|| format!("bad coefficient {:?}", t.coef))?;
            terms.push((t.exp.clone(), c));
        }
        Ok(MultiPolynomial::from_terms(j.vars.clone(), terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self { n: g.n(), edges: g.edges().iter().map(|&(i, j)| [i, j]).collect() }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = anyhow::Error;

    fn try_from(j: &GraphJson) -> Result<Self> {
        Ok(Graph::new(j.n, j.edges.iter().map(|&[i, j]| (i, j)).collect())?)
    }
}

pub fn point_json(p: &Point) -> Vec<String> {
    p.to_strings()
}

pub fn parse_point(coords: &[String]) -> Result<Point> {
    coords
        .iter()
        .map(|s| Rational::from_str(s).map_err(|_| anyhow!("bad rational {:?}", s)))
        .collect::<Result<Vec<_>>>()
        .map(Point)
}

/// A simplex as its vertex list; when `origin` is set the first vertex is the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexJson {
    pub n: usize,
    pub label: Vec<[usize; 2]>,
    pub origin: bool,
    pub vertices: Vec<Vec<String>>,
}

impl From<&Simplex> for SimplexJson {
    fn from(s: &Simplex) -> Self {
        Self {
            n: s.n,
            label: s.label.iter().map(|&(i, j)| [i, j]).collect(),
            origin: s.has_origin,
            vertices: s.vertices().iter().map(point_json).collect(),
        }
    }
}

impl TryFrom<&SimplexJson> for Simplex {
    type Error = anyhow::Error;

    fn try_from(j: &SimplexJson) -> Result<Self> {
        let mut points = j.vertices.iter().map(|v| parse_point(v)).collect::<Result<Vec<_>>>()?;
        if points.iter().any(|p| p.dim() != j.n) {
            bail!("vertex dimension differs from n = {}", j.n);
        }
        let label = j.label.iter().map(|&[a, b]| (a, b)).collect();
        if j.origin {
            if points.is_empty() || !points[0].is_zero() {
                bail!("first vertex must be the origin");
            }
            points.remove(0);
            Ok(Simplex::with_origin(j.n, label, points))
        } else {
            Ok(Simplex::without_origin(j.n, label, points))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub edges: Vec<[usize; 2]>,
    pub beta: u32,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedFormJson {
    pub terms: Vec<MonomialJson>,
}

impl From<&ReducedForm> for ReducedFormJson {
    fn from(r: &ReducedForm) -> Self {
        Self {
            terms: r
                .terms()
                .map(|(m, c)| MonomialJson {
                    edges: m.edges().iter().map(|&(i, j)| [i, j]).collect(),
                    beta: m.beta(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&ReducedFormJson> for ReducedForm {
    type Error = anyhow::Error;

    fn try_from(j: &ReducedFormJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let m = EdgeMonomial::new(t.edges.iter().map(|&[a, b]| (a, b)).collect(), t.beta)?;
            let c = BigInt::from_str(&t.coef).with_context(|| format!("bad coefficient {:?}", t.coef))?;
            terms.push((m, c));
        }
        Ok(ReducedForm::from_terms(terms))
    }
}
