//! Abstract simplicial complexes given by their facets, with face counting and the
//! f-vector to h-vector transform.
//!
//! Faces are handled as bitmasks over vertex indices, so a complex may have at most 128
//! vertices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::Error;
use crate::poly::MultiPolynomial;

pub type FaceMask = u128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex<V> {
    vertices: Vec<V>,
    facets: Vec<Vec<usize>>,
}

/// Face numbers `f_{-1} = 1, f_0, ..., f_{d-1}`; `f[k]` holds `f_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceVector {
    pub f: Vec<u64>,
}

impl FaceVector {
    /// One plus the dimension of the complex.
    pub fn d(&self) -> usize {
        self.f.len() - 1
    }

    /// `h_0, ..., h_d` from `sum_i f_{i-1} (x-1)^{d-i} = sum_i h_i x^{d-i}`.
    pub fn h_vector(&self) -> Vec<BigInt> {
        let d = self.d() as u64;
        (0..=d)
            .map(|k| {
                let mut h = BigInt::zero();
                for i in 0..=k {
                    let term = BigInt::from(binomial(d - i, k - i)) * BigInt::from(self.f[i as usize]);
                    if (k - i) % 2 == 0 {
                        h += term;
                    } else {
                        h -= term;
                    }
                }
                h
            })
            .collect()
    }
}

impl<V: Ord + Clone> SimplicialComplex<V> {
    /// Builds the complex generated by `facets`. Duplicates and non-maximal sets are
    /// dropped, vertices are the union of the facets.
    pub fn from_facets(facets: Vec<Vec<V>>) -> Self {
        let vertices: Vec<V> = facets
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<V>>()
            .into_iter()
            .collect();
        assert!(vertices.len() <= 128, "at most 128 vertices");
        let mut masks: Vec<FaceMask> = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| 1u128 << vertices.binary_search(v).unwrap())
                    .fold(0, |a, b| a | b)
            })
            .collect();
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<FaceMask> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
            .collect();
        let mut facets: Vec<Vec<usize>> = maximal.into_iter().map(mask_indices).collect();
        facets.sort();
        Self { vertices, facets }
    }
}

impl<V: Clone> SimplicialComplex<V> {
    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_masks(&self) -> Vec<FaceMask> {
        self.facets.iter().map(|f| indices_mask(f)).collect()
    }

    pub fn labels(&self, mask: FaceMask) -> Vec<V> {
        mask_indices(mask).into_iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Facet size for a pure complex.
    pub fn d(&self) -> Result<usize, Error> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(self.facets.first().map_or(0, |f| f.len()))
    }

    /// Every face, including the empty face.
    pub fn faces(&self) -> BTreeSet<FaceMask> {
        let mut out = BTreeSet::new();
        for facet in self.facet_masks() {
            let mut sub = facet;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        out
    }

    pub fn is_face(&self, mask: FaceMask) -> bool {
        self.facet_masks().iter().any(|&f| f & mask == mask)
    }

    pub fn f_vector(&self) -> FaceVector {
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut f = alloc::vec![0u64; top + 1];
        for face in self.faces() {
            f[face.count_ones() as usize] += 1;
        }
        FaceVector { f }
    }

    /// `sum_i h_i x^i` in the variable `x`.
    pub fn h_polynomial(&self) -> Result<MultiPolynomial, Error> {
        self.d()?;
        Ok(MultiPolynomial::from_univariate("x", &self.f_vector().h_vector()))
    }

    /// Faces lying in the subcomplex generated by ridges that belong to exactly one facet.
    /// For a pure complex homeomorphic to a ball this is the topological boundary.
    pub fn boundary_faces(&self) -> Result<BTreeSet<FaceMask>, Error> {
        let d = self.d()?;
        let facets = self.facet_masks();
        let mut out = BTreeSet::new();
        if d == 0 {
            return Ok(out);
        }
        for &facet in &facets {
            for v in mask_indices(facet) {
                let ridge = facet & !(1u128 << v);
                let count = facets.iter().filter(|&&f| f & ridge == ridge).count();
                if count == 1 {
                    let mut sub = ridge;
                    loop {
                        out.insert(sub);
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & ridge;
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn mask_indices(mask: FaceMask) -> Vec<usize> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn indices_mask(indices: &[usize]) -> FaceMask {
    indices.iter().fold(0, |a, &i| a | 1u128 << i)
}
