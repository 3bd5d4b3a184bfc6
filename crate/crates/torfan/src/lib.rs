//! Exact combinatorial invariants of smooth (regular) rational polyhedral fans.
//!
//! The library decides, for the toric variety of a regular fan, whether the
//! spectral sequence relating equivariant to ordinary K-theory degenerates,
//! and computes the obstruction groups `Tor_p(K_0^T, Z)` from the fan's
//! combinatorics alone.  Everything reduces to exact integer linear algebra:
//!
//! * [`exact_linalg`] — arbitrary-precision matrices, Smith/Hermite normal
//!   forms, homology of chain complexes, finitely generated abelian groups.
//! * [`polyhedral`] — rational convex cones with dual descriptions, exact
//!   intersections, and the polyhedral "enough limits" search.
//! * [`fan_core`] — the fan data model: validation, star subdivisions
//!   (blow-ups), orbit-closure fans, completeness.
//! * [`simplicial`] — the simplicial complex of a fan, links, reduced
//!   (co)homology with finitely generated coefficients, minimal non-faces.
//! * [`sheaf`] — sheaves of finitely generated abelian groups on the fan
//!   poset: sections, flabbiness, and two independent cohomology backends.
//! * [`ktheory`] — the verdicts: flatness/degeneracy reports, subdivision
//!   safety, Tor tables, the first page of the spectral sequence, and
//!   blow-up deltas.
//!
//! All arithmetic is exact; no floating point appears anywhere.  All values
//! are immutable after construction and all operations are pure, so
//! everything is safe to use from multiple threads without coordination.

pub mod exact_linalg;
pub mod fan_core;
pub mod ktheory;
pub mod polyhedral;
pub mod sheaf;
pub mod simplicial;
