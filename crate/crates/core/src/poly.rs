//! Sparse multivariate polynomials with arbitrary-precision integer coefficients over a
//! declared, ordered variable set.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector, one entry per declared variable.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigInt>,
}

pub fn var_names<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

impl MultiPolynomial {
    pub fn zero(vars: Vec<String>) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let exp = alloc::vec![0; p.vars.len()];
        p.add_term(exp, c.into());
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, 1)
    }

    /// The variable `name`, which must be declared in `vars`.
    pub fn var(vars: Vec<String>, name: &str) -> Self {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("variable {} not declared", name));
        let mut exp = alloc::vec![0; vars.len()];
        exp[idx] = 1;
        let mut p = Self::zero(vars);
        p.add_term(exp, BigInt::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging like terms.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Exponents, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable sets");
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; every image lives over `target_vars`.
    pub fn substitute(&self, target_vars: &[String], images: &[MultiPolynomial]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        for img in images {
            assert_eq!(img.vars, target_vars, "image over wrong variable set");
        }
        let mut powers: Vec<Vec<MultiPolynomial>> = images
            .iter()
            .map(|img| alloc::vec![MultiPolynomial::one(target_vars.to_vec()), img.clone()])
            .collect();
        let mut out = Self::zero(target_vars.to_vec());
        for (exp, coef) in &self.terms {
            let mut term = Self::constant(target_vars.to_vec(), coef.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Re-expresses the polynomial over `target_vars`, matching variables by name.
    /// Returns `None` if a variable that actually occurs is missing from the target.
    pub fn embed(&self, target_vars: &[String]) -> Option<Self> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let pos = target_vars.iter().position(|t| t == v);
            if pos.is_none() && self.terms.keys().any(|e| e[i] != 0) {
                return None;
            }
            map.push(pos);
        }
        let mut out = Self::zero(target_vars.to_vec());
        for (exp, coef) in &self.terms {
            let mut e = alloc::vec![0; target_vars.len()];
            for (i, &k) in exp.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] += k;
                }
            }
            out.add_term(e, coef.clone());
        }
        Some(out)
    }

    /// Renames variables in place, keeping their positions.
    pub fn rename(&self, renames: &[(&str, &str)]) -> Self {
        let vars = self
            .vars
            .iter()
            .map(|v| {
                renames
                    .iter()
                    .find(|(from, _)| from == v)
                    .map(|(_, to)| to.to_string())
                    .unwrap_or_else(|| v.clone())
            })
            .collect();
        Self { vars, terms: self.terms.clone() }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// The set of weighted degrees `sum_i weights[i] * e_i` over all terms.
    pub fn weighted_degrees(&self, weights: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(&k, &w)| k as i64 * w).sum())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = BigInt::zero();
        for (exp, coef) in &self.terms {
            let mut t = coef.clone();
            for (x, &k) in point.iter().zip(exp) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    /// Coefficients `[c_0, c_1, ...]` of a univariate polynomial.
    pub fn univariate_coefficients(&self) -> Vec<BigInt> {
        assert_eq!(self.vars.len(), 1, "univariate polynomial expected");
        let deg = self.degree_in(0) as usize;
        let mut out = alloc::vec![BigInt::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        out
    }

    pub fn from_univariate(var: &str, coefficients: &[BigInt]) -> Self {
        Self::from_terms(
            var_names(&[var]),
            coefficients.iter().enumerate().map(|(i, c)| (alloc::vec![i as u32], c.clone())),
        )
    }

    /// Terms in display order: descending total degree, then descending exponent vector.
    fn sorted_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| display_order(b.0, a.0));
        t
    }

    /// Same format as `Display` but with terms in ascending order ("1 + 3*x + x^2").
    pub fn to_string_ascending(&self) -> String {
        let mut t = self.sorted_terms();
        t.reverse();
        self.render(&t)
    }

    fn render(&self, terms: &[(&Exponents, &BigInt)]) -> String {
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (exp, coef)) in terms.iter().enumerate() {
            let negative = coef.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = coef.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in self.vars.iter().zip(exp.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(alloc::format!("{}^{}", v, e)),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, abs.to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn display_order(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&self.sorted_terms()))
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn neg(self) -> MultiPolynomial {
        MultiPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.assert_same_vars(rhs);
        let mut out = MultiPolynomial::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn xy() -> Vec<String> {
        var_names(&["x", "y"])
    }

    #[test]
    fn display_orders() {
        let v = var_names(&["b"]);
        let b = MultiPolynomial::var(v.clone(), "b");
        let p = &(&b.pow(2) + &b.scale(&BigInt::from(5))) + &MultiPolynomial::constant(v, 5);
        assert_eq!(p.to_string(), "b^2 + 5*b + 5");
        assert_eq!(p.to_string_ascending(), "5 + 5*b + b^2");
        let v = var_names(&["x1", "y1", "b"]);
        let d = &MultiPolynomial::var(v.clone(), "x1") - &MultiPolynomial::var(v.clone(), "y1");
        assert_eq!(d.to_string(), "x1 - y1");
        assert_eq!((-&d).to_string(), "-x1 + y1");
        assert_eq!(MultiPolynomial::zero(v).to_string(), "0");
    }

    #[test]
    fn substitution_and_cancellation() {
        let x = MultiPolynomial::var(xy(), "x");
        let y = MultiPolynomial::var(xy(), "y");
        // (x - y)^3 with x -> q, y -> q - 1 gives 1
        let p = (&x - &y).pow(3);
        let target = var_names(&["q"]);
        let q = MultiPolynomial::var(target.clone(), "q");
        let one = MultiPolynomial::one(target.clone());
        let r = p.substitute(&target, &[q.clone(), &q - &one]);
        assert_eq!(r, MultiPolynomial::one(target));
    }

    #[test]
    fn embed_and_rename() {
        let x = MultiPolynomial::var(xy(), "x");
        let e = x.embed(&var_names(&["y", "x", "z"])).unwrap();
        assert_eq!(e.to_string(), "x");
        assert!(x.embed(&var_names(&["y"])).is_none());
        assert_eq!(x.rename(&[("x", "b")]).to_string(), "b");
    }

    #[test]
    fn univariate_roundtrip() {
        let c = vec![BigInt::from(1), BigInt::from(3), BigInt::from(1)];
        let p = MultiPolynomial::from_univariate("x", &c);
        assert_eq!(p.to_string_ascending(), "1 + 3*x + x^2");
        assert_eq!(p.univariate_coefficients(), c);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPolynomial> {
        proptest::collection::vec((0u32..3, 0u32..3, -5i64..5), 0..6).prop_map(|ts| {
            MultiPolynomial::from_terms(
                xy(),
                ts.into_iter().map(|(a, b, c)| (vec![a, b], BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&(&(&a + &b) - &b) - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -4i64..4, y in -4i64..4) {
            let pt = [BigInt::from(x), BigInt::from(y)];
            prop_assert_eq!((&a * &b).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
        }
    }
}
