//! Exact computations around pipe dreams and root polytopes.
//!
//! The crate covers five connected objects:
//!
//! * permutations of `[n]`, words in simple reflections and Demazure products ([`perm`]);
//! * pipe dreams in the staircase shape and their enumeration ([`pipedream`]);
//! * pipe dream complexes as subword complexes, with f/h-vectors ([`complex`], [`pdc`]);
//! * double β-Grothendieck polynomials and their specialisations ([`grothendieck`]);
//! * reduced forms in the subdivision algebra ([`subdivision`]), root and flow polytopes
//!   ([`polytope`]) and the realization of `PD(1 n n-1 ... 2)` as the canonical triangulation of a
//!   vertex figure ([`realization`]).
//!
//! All arithmetic is exact: integers are [`num_bigint::BigInt`] and geometry runs over
//! [`num_rational::BigRational`]. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complex;
pub mod error;
pub mod grothendieck;
pub mod linalg;
pub mod pdc;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod polytope;
pub mod realization;
pub mod subdivision;

pub use complex::{FaceVector, SimplicialComplex};
pub use error::Error;
pub use pdc::PipeDreamComplex;
pub use perm::{Permutation, Word};
pub use pipedream::{BoxPos, PipeDream, PipeDreamSet, SearchLimit};
pub use poly::MultiPolynomial;
pub use polytope::{Graph, Point, Simplex};
pub use subdivision::{EdgeMonomial, ReducedForm, Strategy};

/// Catalan number `C_m` computed from the closed binomial form.
pub fn catalan(m: u32) -> num_bigint::BigInt {
    use num_integer::binomial;
    let m = m as u64;
    num_bigint::BigInt::from(binomial(2 * m, m) / (m + 1))
}
