//! Finite simplicial complexes with a first-class empty face: the complex
//! of a fan, links, purity, reduced simplicial (co)homology with finitely
//! generated coefficient groups, and minimal non-faces.
//!
//! The empty face is always present, so every chain complex built here is
//! the augmented one and all homology is reduced.  Faces are vertex-index
//! sets; the orientation order is the natural order on vertex indices.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_linalg::{
    complex_cohomology, AbelianGroupInv, GradedGroups, IntMatrix, Presentation,
};
use crate::fan_core::Fan;

/// Errors from simplicial-complex construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} does not appear in any face")]
    UnusedVertex(usize),
    #[error("the given face is not a face of the complex")]
    FaceNotInComplex,
}

/// An abstract simplicial complex on vertices `0..vertex_count`, closed
/// under subsets, with the empty face always present and every vertex used.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: BTreeSet<BTreeSet<usize>>,
}

impl SimplicialComplex {
    /// Builds the closure of the given facets.  Every vertex of
    /// `0..vertex_count` must appear in some facet.
    pub fn from_facets<I, F>(vertex_count: usize, facets: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        faces.insert(BTreeSet::new());
        for facet in facets {
            let facet: Vec<usize> = facet.into_iter().collect();
            for &v in &facet {
                if v >= vertex_count {
                    return Err(SimplicialError::VertexOutOfRange(v));
                }
            }
            for mask in 0..(1usize << facet.len()) {
                faces.insert(
                    facet
                        .iter()
                        .enumerate()
                        .filter(|&(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        for v in 0..vertex_count {
            if !faces.contains(&BTreeSet::from([v])) {
                return Err(SimplicialError::UnusedVertex(v));
            }
        }
        Ok(SimplicialComplex { vertex_count, faces })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &BTreeSet<BTreeSet<usize>> {
        &self.faces
    }

    pub fn contains_face(&self, face: &BTreeSet<usize>) -> bool {
        self.faces.contains(face)
    }

    /// Dimension of the complex; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> i64 {
        self.faces.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Faces of the given dimension, in sorted order.
    pub fn faces_of_dim(&self, d: i64) -> Vec<BTreeSet<usize>> {
        self.faces.iter().filter(|f| f.len() as i64 == d + 1).cloned().collect()
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<BTreeSet<usize>> {
        self.faces
            .iter()
            .filter(|f| !self.faces.iter().any(|g| *f != g && f.is_subset(g)))
            .cloned()
            .collect()
    }

    /// Whether all maximal faces share the dimension of the complex.
    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.len() as i64 - 1 == d)
    }
}

/// The simplicial complex of a fan: vertices are rays, faces are the ray
/// sets of the cones (the zero cone gives the empty face).
pub fn complex_of_fan(fan: &Fan) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        fan.rays().len(),
        fan.max_cones().iter().map(|c| c.indices().collect::<Vec<_>>()),
    )
    .expect("a validated fan yields a valid complex")
}

/// The link of a face together with the original indices of its vertices:
/// `vertices[i]` names the vertex of `cx` represented by vertex `i` of the
/// link complex.
pub fn link_with_vertices(
    cx: &SimplicialComplex,
    face: &BTreeSet<usize>,
) -> Result<(SimplicialComplex, Vec<usize>), SimplicialError> {
    if !cx.contains_face(face) {
        return Err(SimplicialError::FaceNotInComplex);
    }
    let link_faces: Vec<&BTreeSet<usize>> = cx
        .faces
        .iter()
        .filter(|t| t.is_disjoint(face) && cx.faces.contains(&t.union(face).copied().collect()))
        .collect();
    let vertices: Vec<usize> =
        link_faces.iter().flat_map(|t| t.iter().copied()).collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
    let index_of = |v: usize| vertices.binary_search(&v).expect("link vertex");
    let complex = SimplicialComplex::from_facets(
        vertices.len(),
        link_faces.iter().map(|t| t.iter().map(|&v| index_of(v)).collect::<Vec<_>>()),
    )
    .expect("links of faces are valid complexes");
    Ok((complex, vertices))
}

/// The link of a face: all faces `t` disjoint from `face` with
/// `t ∪ face` in the complex, re-indexed onto the vertices they use.  The
/// link of the empty face is the complex itself.
pub fn link(
    cx: &SimplicialComplex,
    face: &BTreeSet<usize>,
) -> Result<SimplicialComplex, SimplicialError> {
    link_with_vertices(cx, face).map(|(complex, _)| complex)
}

/// The augmented integral chain complex of a simplicial complex: the
/// boundary matrices `∂_d: C_d -> C_(d-1)` for `d = 0..=dim`, where
/// `C_(-1) = Z` is generated by the empty face and rows/columns follow the
/// sorted face order of each dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainComplexZ {
    diffs: Vec<IntMatrix>,
}

impl ChainComplexZ {
    /// The boundary matrices; `boundaries()[d]` maps dimension `d` to
    /// `d - 1`.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.diffs
    }
}

/// Builds the augmented chain complex with the alternating-sign boundary
/// `∂[v_0 < … < v_k] = Σ_j (-1)^j [… v̂_j …]`.
pub fn augmented_chain_complex(cx: &SimplicialComplex) -> ChainComplexZ {
    let top = cx.dim();
    let mut diffs = Vec::new();
    for d in 0..=top {
        let lower = cx.faces_of_dim(d - 1);
        let upper = cx.faces_of_dim(d);
        let mut m = IntMatrix::zeros(lower.len(), upper.len());
        for (j, f) in upper.iter().enumerate() {
            for (sign, removed) in f.iter().enumerate() {
                let sub: BTreeSet<usize> = f.iter().copied().filter(|v| v != removed).collect();
                let i = lower.binary_search(&sub).expect("face closure");
                let value = if sign % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(i, j, value);
            }
        }
        diffs.push(m);
    }
    debug_assert!(diffs.windows(2).all(|w| w[0].mul(&w[1]).is_zero()));
    ChainComplexZ { diffs }
}

/// Reduced homology (or cohomology, when `cohomology` is set) of the
/// complex with coefficients in the finitely generated group `G`, indexed
/// by degrees `-1..=dim`.
///
/// Coefficients are handled by presenting each chain group `C_d ⊗ G` with
/// one generator block per face and the relation matrix of `G`, so a single
/// integral Smith-form engine serves all coefficient groups.
pub fn reduced_homology(
    cx: &SimplicialComplex,
    coefficients: &AbelianGroupInv,
    cohomology: bool,
) -> GradedGroups {
    let chain = augmented_chain_complex(cx);
    let g = Presentation::from_group(coefficients);
    let m = chain.diffs.len(); // positions 0..=m hold degrees -1..=dim
    let levels: Vec<Presentation> = (0..=m)
        .map(|p| {
            let faces = if p == 0 { 1 } else { chain.diffs[p - 1].cols() };
            Presentation::direct_sum(&vec![&g; faces])
        })
        .collect();
    let groups = if cohomology {
        let diffs: Vec<IntMatrix> =
            (0..m).map(|p| kron_identity(&chain.diffs[p].transpose(), g.gens())).collect();
        complex_cohomology(&levels, &diffs)
    } else {
        let levels_rev: Vec<Presentation> = levels.iter().rev().cloned().collect();
        let diffs: Vec<IntMatrix> =
            (0..m).map(|p| kron_identity(&chain.diffs[m - p - 1], g.gens())).collect();
        let mut h = complex_cohomology(&levels_rev, &diffs);
        h.reverse();
        h
    };
    GradedGroups::new(-1, groups)
}

/// The block matrix `m ⊗ I_k`.
fn kron_identity(m: &IntMatrix, k: usize) -> IntMatrix {
    IntMatrix::from_fn(m.rows() * k, m.cols() * k, |i, j| {
        if i % k == j % k {
            m.entry(i / k, j / k).clone()
        } else {
            BigInt::zero()
        }
    })
}

/// The inclusion-minimal vertex sets that are not faces: the monomial
/// generators of the Stanley–Reisner ideal.
pub fn minimal_nonfaces(cx: &SimplicialComplex) -> BTreeSet<BTreeSet<usize>> {
    let v = cx.vertex_count;
    let mut result = BTreeSet::new();
    for mask in 0..(1u64 << v) {
        let set: BTreeSet<usize> = (0..v).filter(|&i| mask >> i & 1 == 1).collect();
        if set.len() < 2 || cx.faces.contains(&set) {
            continue;
        }
        let minimal = set.iter().all(|drop| {
            let sub: BTreeSet<usize> = set.iter().copied().filter(|x| x != drop).collect();
            cx.faces.contains(&sub)
        });
        if minimal {
            result.insert(set);
        }
    }
    result
}
