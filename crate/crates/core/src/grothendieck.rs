//! Double β-Grothendieck polynomials as weighted sums over pipe dreams, and their
//! specialisations.
//!
//! `G^b_w(x, y) = sum over P in Pipes(w) of b^codim(P) * prod_{(i,j) in cross(P)} (x_i - y_j)`
//! where `codim(P)` is the number of crosses of `P` minus `l(w)`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Error;
use crate::pdc::PipeDreamComplex;
use crate::perm::Permutation;
use crate::pipedream::{cross_factor, grothendieck_vars, PipeDreamSet, SearchLimit};
use crate::poly::{var_names, MultiPolynomial};

fn pipes(w: &Permutation) -> Result<PipeDreamSet, Error> {
    PipeDreamSet::enumerate(w, SearchLimit::default())
}

pub fn double_beta_grothendieck(w: &Permutation) -> Result<MultiPolynomial, Error> {
    Ok(double_beta_from(&pipes(w)?))
}

pub fn double_beta_from(set: &PipeDreamSet) -> MultiPolynomial {
    let n = set.permutation().n();
    let vars = grothendieck_vars(n);
    let beta_idx = vars.len() - 1;
    let mut total = MultiPolynomial::zero(vars.clone());
    for p in set.dreams() {
        let mut exp = alloc::vec![0u32; vars.len()];
        exp[beta_idx] = set.codim(p) as u32;
        let mut term = MultiPolynomial::from_terms(vars.clone(), [(exp, BigInt::from(1))]);
        for b in p.crosses() {
            term = &term * &cross_factor(&vars, *b);
        }
        total = &total + &term;
    }
    total
}

/// Variables `x1..x_{n-1}, y1..y_{n-1}` without `b`.
fn xy_vars(n: usize) -> Vec<String> {
    let mut v = grothendieck_vars(n);
    v.pop();
    v
}

/// `G_w(x, y)`: the β-version at `b = -1`.
pub fn double_grothendieck(w: &Permutation) -> Result<MultiPolynomial, Error> {
    let beta = double_beta_grothendieck(w)?;
    Ok(specialize_beta(&beta, w.n(), -1))
}

/// Substitutes `b -> value` in a polynomial over [`grothendieck_vars`].
pub fn specialize_beta(beta: &MultiPolynomial, n: usize, value: i64) -> MultiPolynomial {
    let target = xy_vars(n);
    let mut images: Vec<MultiPolynomial> = target
        .iter()
        .map(|v| MultiPolynomial::var(target.clone(), v))
        .collect();
    images.push(MultiPolynomial::constant(target.clone(), value));
    beta.substitute(&target, &images)
}

/// Substitutes every `x_i -> x_image`, `y_j -> y_image`, `b -> b_image` where the images are
/// polynomials over `target`.
pub fn substitute_xyb(
    beta: &MultiPolynomial,
    n: usize,
    target: &[String],
    x_image: &MultiPolynomial,
    y_image: &MultiPolynomial,
    b_image: &MultiPolynomial,
) -> MultiPolynomial {
    let mut images = Vec::new();
    for _ in 1..n {
        images.push(x_image.clone());
    }
    for _ in 1..n {
        images.push(y_image.clone());
    }
    images.push(b_image.clone());
    beta.substitute(target, &images)
}

pub fn qtb_vars() -> Vec<String> {
    var_names(&["q", "t", "b"])
}

/// `(q - t)^{l(w)} * sum_P [b (q - t)]^{codim(P)}`, in the variables `q, t, b`.
pub fn specialize_qt(w: &Permutation) -> Result<MultiPolynomial, Error> {
    Ok(specialize_qt_from(&pipes(w)?))
}

pub fn specialize_qt_from(set: &PipeDreamSet) -> MultiPolynomial {
    let vars = qtb_vars();
    let q = MultiPolynomial::var(vars.clone(), "q");
    let t = MultiPolynomial::var(vars.clone(), "t");
    let b = MultiPolynomial::var(vars.clone(), "b");
    let diff = &q - &t;
    let mut sum = MultiPolynomial::zero(vars.clone());
    for p in set.dreams() {
        sum = &sum + &(&b * &diff).pow(set.codim(p) as u32);
    }
    &diff.pow(set.permutation().length() as u32) * &sum
}

/// `G_w(b) = G^b_w(1, 0)`. Each weight factor `x_i - y_j` is specialised to `1 - 0` before
/// multiplying, so this stays cheap for large ranks.
pub fn groth_beta(w: &Permutation) -> Result<MultiPolynomial, Error> {
    Ok(groth_beta_from(&pipes(w)?))
}

pub fn groth_beta_from(set: &PipeDreamSet) -> MultiPolynomial {
    let vars = var_names(&["b"]);
    let factor = &MultiPolynomial::one(vars.clone()) - &MultiPolynomial::zero(vars.clone());
    let mut total = MultiPolynomial::zero(vars.clone());
    for p in set.dreams() {
        let mut term = MultiPolynomial::var(vars.clone(), "b").pow(set.codim(p) as u32);
        for _ in p.crosses() {
            term = &term * &factor;
        }
        total = &total + &term;
    }
    total
}

/// Outcome of checking `G^{b-1}_w(q, q-1) = h(PD(w), b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothHCheck {
    pub w: Permutation,
    /// Left side over `q, b` after symbolic substitution.
    pub lhs: MultiPolynomial,
    /// `h(PD(w), b)`.
    pub rhs: MultiPolynomial,
    pub q_independent: bool,
    pub equal: bool,
}

impl GrothHCheck {
    pub fn passed(&self) -> bool {
        self.q_independent && self.equal
    }
}

pub fn verify_groth_h(w: &Permutation) -> Result<GrothHCheck, Error> {
    let set = pipes(w)?;
    let beta = double_beta_from(&set);
    let target = var_names(&["q", "b"]);
    let q = MultiPolynomial::var(target.clone(), "q");
    let one = MultiPolynomial::one(target.clone());
    let b = MultiPolynomial::var(target.clone(), "b");
    let lhs = substitute_xyb(&beta, w.n(), &target, &q, &(&q - &one), &(&b - &one));
    let q_independent = lhs.degree_in(0) == 0;
    let rhs = PipeDreamComplex::from_pipe_dreams(&set).h_polynomial().rename(&[("x", "b")]);
    let equal = lhs.embed(&var_names(&["b"])).is_some_and(|l| l == rhs);
    Ok(GrothHCheck { w: w.clone(), lhs, rhs, q_independent, equal })
}

/// `G^{b-1}_w(1, 0)`, whose coefficients are expected to be nonnegative.
pub fn shifted_groth_beta(w: &Permutation) -> Result<MultiPolynomial, Error> {
    let g = groth_beta(w)?;
    let vars = var_names(&["b"]);
    let shift = &MultiPolynomial::var(vars.clone(), "b") - &MultiPolynomial::one(vars.clone());
    Ok(g.substitute(&vars, &[shift]))
}

pub fn has_nonnegative_coefficients(p: &MultiPolynomial) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}
