//! The pipe dream complex `PD(w)`: the subword complex of the triangular word whose faces
//! are elbow sets `E` such that the crosses outside `E` still contain `w`.

use alloc::vec::Vec;

use crate::complex::{indices_mask, FaceMask, FaceVector, SimplicialComplex};
use crate::error::Error;
use crate::perm::Permutation;
use crate::pipedream::{BoxPos, PipeDream, PipeDreamSet, SearchLimit, Staircase};
use crate::poly::{var_names, MultiPolynomial};

#[derive(Clone, Debug)]
pub struct PipeDreamComplex {
    w: Permutation,
    staircase: Staircase,
    complex: SimplicialComplex<BoxPos>,
}

/// An interior face together with the pipe dream labelling it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorFace {
    pub elbows: Vec<BoxPos>,
    pub pipe_dream: PipeDream,
    pub codim: usize,
}

pub fn build_pdc(w: &Permutation) -> Result<PipeDreamComplex, Error> {
    PipeDreamComplex::build(w, SearchLimit::default())
}

impl PipeDreamComplex {
    /// Facets are the elbow sets of the reduced pipe dreams of `w`.
    pub fn build(w: &Permutation, limit: SearchLimit) -> Result<Self, Error> {
        let set = PipeDreamSet::enumerate(w, limit)?;
        Ok(Self::from_pipe_dreams(&set))
    }

    pub fn from_pipe_dreams(set: &PipeDreamSet) -> Self {
        let w = set.permutation().clone();
        let facets: Vec<Vec<BoxPos>> = set.reduced().map(|p| p.elbows()).collect();
        Self {
            staircase: Staircase::new(w.n()),
            w,
            complex: SimplicialComplex::from_facets(facets),
        }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn complex(&self) -> &SimplicialComplex<BoxPos> {
        &self.complex
    }

    pub fn staircase(&self) -> &Staircase {
        &self.staircase
    }

    /// Facet size: number of boxes minus `l(w)`.
    pub fn d(&self) -> usize {
        self.staircase.len() - self.w.length()
    }

    pub fn f_vector(&self) -> FaceVector {
        self.complex.f_vector()
    }

    pub fn h_polynomial(&self) -> MultiPolynomial {
        self.complex.h_polynomial().expect("subword complexes are pure")
    }

    /// Staircase mask of the boxes in a face.
    pub fn staircase_mask(&self, face: FaceMask) -> u128 {
        self.staircase.mask_of(&self.complex.labels(face))
    }

    /// Converts an elbow set given as boxes into a face mask of the complex, if every box is
    /// a vertex.
    pub fn face_of(&self, elbows: &[BoxPos]) -> Option<FaceMask> {
        let idx: Option<Vec<usize>> = elbows
            .iter()
            .map(|b| self.complex.vertices().binary_search(b).ok())
            .collect();
        idx.map(|i| indices_mask(&i))
    }

    /// Faces whose complementary crosses have Demazure product exactly `w`; these are the
    /// faces labelled by pipe dreams. Sorted by codimension, then by elbow set.
    pub fn interior_faces(&self) -> Vec<InteriorFace> {
        let full = self.staircase.full_mask();
        let d = self.d();
        let mut out: Vec<InteriorFace> = self
            .complex
            .faces()
            .into_iter()
            .filter_map(|face| {
                let crosses = full & !self.staircase_mask(face);
                if self.staircase.demazure_of_mask(crosses) != self.w {
                    return None;
                }
                let elbows = self.complex.labels(face);
                let codim = d - elbows.len();
                let pipe_dream = PipeDream::new(self.w.n(), self.staircase.boxes_of(crosses))
                    .expect("staircase boxes");
                Some(InteriorFace { elbows, pipe_dream, codim })
            })
            .collect();
        out.sort_by(|a, b| a.codim.cmp(&b.codim).then_with(|| a.elbows.cmp(&b.elbows)));
        out
    }

    /// `sum over interior faces of b^codim`, i.e. `h(PD(w), b + 1)`.
    pub fn h_from_interior(&self) -> MultiPolynomial {
        let vars = var_names(&["b"]);
        let mut p = MultiPolynomial::zero(vars);
        for face in self.interior_faces() {
            p.add_term(alloc::vec![face.codim as u32], 1.into());
        }
        p
    }

    pub fn is_sphere_case(&self) -> bool {
        self.d() == 0
    }

    pub fn boundary_faces(&self) -> Vec<Vec<BoxPos>> {
        self.complex
            .boundary_faces()
            .expect("pure")
            .into_iter()
            .map(|m| self.complex.labels(m))
            .collect()
    }

    pub fn faces(&self) -> Vec<Vec<BoxPos>> {
        self.complex.faces().into_iter().map(|m| self.complex.labels(m)).collect()
    }
}
