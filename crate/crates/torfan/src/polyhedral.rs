//! Exact rational convex-cone computations: dual descriptions,
//! intersections, full-dimensionality, and the polyhedral "enough limits"
//! search.
//!
//! All cones are rational polyhedral cones in a fixed ambient rank, carried
//! with *both* descriptions at all times: generators (extreme rays plus a
//! lineality basis) and inequalities (facet covectors plus an
//! implicit-equality basis).  Both sides are canonicalized — primitive
//! vectors, representatives reduced modulo the lineality/equality lattice,
//! sorted — so cone equality is literal field equality.  Everything is
//! integer arithmetic; interiority questions are yes/no algebraic questions
//! and no floating point appears.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact_linalg::{inverse_unimodular, kernel_basis, row_hnf, smith_normal_form, IntMatrix};
use crate::fan_core::{Cone, Fan};

/// Errors from polyhedral operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Cones of different ambient ranks cannot be intersected.
    #[error("ambient rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
}

/// A rational convex polyhedral cone with canonical dual descriptions.
///
/// `cone(rays + lineality)` equals `{x | <a,x> >= 0 for all facets a,
/// <e,x> = 0 for all equalities e}` at all times; the constructors keep the
/// two sides mutually consistent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCone {
    n: usize,
    /// Extreme rays: primitive, reduced modulo the lineality lattice,
    /// sorted.  Empty for a linear subspace.
    rays: Vec<Vec<BigInt>>,
    /// Canonical (Hermite) basis of the lineality lattice `C cap -C`.
    lineality: Vec<Vec<BigInt>>,
    /// Irredundant facet covectors: primitive, reduced modulo the equality
    /// lattice, sorted.
    facets: Vec<Vec<BigInt>>,
    /// Canonical (Hermite) basis of the lattice of implicit equalities,
    /// i.e. the covectors vanishing on all of `C`.
    equalities: Vec<Vec<BigInt>>,
}

impl RationalCone {
    /// The cone spanned by the given generators (any list of integer
    /// vectors; opposite pairs contribute lineality).
    pub fn from_generators(n: usize, gens: &[Vec<BigInt>]) -> Self {
        for g in gens {
            assert_eq!(g.len(), n, "generator of wrong length");
        }
        // The polar's V-description is this cone's H-description.
        let (eq_raw, facet_raw) = double_description(n, gens);
        let (equalities, facets) = canonical_v(n, &eq_raw, &facet_raw);
        let mut system: Vec<Vec<BigInt>> = facets.clone();
        for e in &equalities {
            system.push(e.clone());
            system.push(neg_vec(e));
        }
        let (lin_raw, ray_raw) = double_description(n, &system);
        let (lineality, rays) = canonical_v(n, &lin_raw, &ray_raw);
        RationalCone { n, rays, lineality, facets, equalities }
    }

    /// The cone `{x | <a,x> >= 0 for all a}`.
    pub fn from_inequalities(n: usize, ineqs: &[Vec<BigInt>]) -> Self {
        for a in ineqs {
            assert_eq!(a.len(), n, "inequality of wrong length");
        }
        let (lin_raw, ray_raw) = double_description(n, ineqs);
        let (lineality, rays) = canonical_v(n, &lin_raw, &ray_raw);
        let mut gens: Vec<Vec<BigInt>> = rays.clone();
        for l in &lineality {
            gens.push(l.clone());
            gens.push(neg_vec(l));
        }
        let (eq_raw, facet_raw) = double_description(n, &gens);
        let (equalities, facets) = canonical_v(n, &eq_raw, &facet_raw);
        RationalCone { n, rays, lineality, facets, equalities }
    }

    /// The whole ambient space.
    pub fn full_space(n: usize) -> Self {
        Self::from_inequalities(n, &[])
    }

    /// The zero cone `{0}`.
    pub fn zero_cone(n: usize) -> Self {
        Self::from_generators(n, &[])
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    /// Extreme rays (canonical representatives modulo lineality).
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// Canonical basis of the lineality lattice.
    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    /// Irredundant facet inequalities.
    pub fn facets(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    /// Canonical basis of the implicit-equality lattice.
    pub fn equalities(&self) -> &[Vec<BigInt>] {
        &self.equalities
    }

    /// Generator description: extreme rays plus the lineality basis as
    /// `+-` pairs.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg_vec(l));
        }
        g
    }

    /// Inequality description: facet covectors plus the equality basis as
    /// `+-` pairs.
    pub fn inequalities(&self) -> Vec<Vec<BigInt>> {
        let mut a = self.facets.clone();
        for e in &self.equalities {
            a.push(e.clone());
            a.push(neg_vec(e));
        }
        a
    }

    /// Ensures both descriptions are populated and mutually consistent.
    /// Constructors already canonicalize eagerly, so this is the identity;
    /// it exists (and is trivially idempotent) to make the contract
    /// explicit.
    pub fn dual_description(&self) -> RationalCone {
        self.clone()
    }

    /// The polar cone `{a | <a,x> >= 0 for all x in self}`.
    ///
    /// By the symmetry of the canonical form this is a pure field swap:
    /// facets become extreme rays and implicit equalities become lineality.
    pub fn dual(&self) -> RationalCone {
        RationalCone {
            n: self.n,
            rays: self.facets.clone(),
            lineality: self.equalities.clone(),
            facets: self.rays.clone(),
            equalities: self.lineality.clone(),
        }
    }

    pub fn contains_point(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.n);
        self.facets.iter().all(|a| !dot(a, x).is_negative())
            && self.equalities.iter().all(|e| dot(e, x).is_zero())
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        assert_eq!(self.n, other.n);
        other.generators().iter().all(|g| self.contains_point(g))
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.n - self.equalities.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Whether the cone has nonempty interior, i.e. its generators span the
    /// whole ambient space; equivalently, no inequality of the irredundant
    /// description is an implicit equality.
    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Whether the cone is `{0}`.
    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

/// Intersection of a family of cones in a common ambient rank; the empty
/// intersection is the full space.
pub fn intersect(n: usize, cones: &[&RationalCone]) -> Result<RationalCone, PolyError> {
    let mut system: Vec<Vec<BigInt>> = Vec::new();
    for c in cones {
        if c.ambient_rank() != n {
            return Err(PolyError::RankMismatch { expected: n, found: c.ambient_rank() });
        }
        system.extend(c.inequalities());
    }
    Ok(RationalCone::from_inequalities(n, &system))
}

/// Intersection of two cones; panics on rank mismatch (callers in this
/// crate always pass cones of one fan's ambient rank).
pub fn intersect_pair(a: &RationalCone, b: &RationalCone) -> RationalCone {
    intersect(a.ambient_rank(), &[a, b]).expect("ambient rank mismatch")
}

// ---------------------------------------------------------------------------
// Enough limits
// ---------------------------------------------------------------------------

/// Outcome evidence for [`enough_limits`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitsCertificate {
    /// A choice function `tau -> sigma(tau)` (one pair per cone of the fan,
    /// sorted by `tau`) whose shifted-cone intersection is full-dimensional.
    Witness(Vec<(Cone, Cone)>),
    /// The pruned search tree was exhausted without finding a witness;
    /// `branches` counts the abandoned branches.
    Exhausted { branches: usize },
}

/// Decides whether the fan admits enough limits: whether
/// `intersection over tau of (union over sigma in st(tau) of sigma + <tau>)`
/// has nonempty interior, where `st(tau)` is the set of cones having `tau`
/// as a face and `<tau>` is the linear span of `tau`.
///
/// A generic interior point of that set lies in the interior of one term
/// `sigma(tau) + <tau>` per `tau`, so the set is full-dimensional exactly
/// when some choice function yields a full-dimensional intersection; the
/// search enumerates choice functions with pruning and returns a witness
/// or reports exhaustion.
pub fn enough_limits(fan: &Fan) -> (bool, LimitsCertificate) {
    let n = fan.ambient_rank();
    // One task per cone tau: the candidate terms sigma + <tau>.  Terms
    // without full dimension can never contain a full-dimensional
    // intersection and are dropped; duplicate terms are searched once.
    let mut tasks: Vec<(Cone, Vec<(Cone, RationalCone)>)> = Vec::new();
    for tau in fan.all_cones() {
        let tau_gens = fan.cone_generators(tau);
        let mut candidates: Vec<(Cone, RationalCone)> = Vec::new();
        for sigma in fan.star(tau) {
            let mut gens = fan.cone_generators(&sigma);
            for t in &tau_gens {
                gens.push(t.clone());
                gens.push(neg_vec(t));
            }
            let term = RationalCone::from_generators(n, &gens);
            if term.is_full_dimensional()
                && !candidates.iter().any(|(_, c)| *c == term)
            {
                candidates.push((sigma, term));
            }
        }
        if candidates.is_empty() {
            // This union is a finite union of lower-dimensional cones, so
            // the whole intersection has empty interior.
            return (false, LimitsCertificate::Exhausted { branches: 1 });
        }
        tasks.push((tau.clone(), candidates));
    }
    // Most-constrained cone first keeps the branching factor low.
    tasks.sort_by_key(|(_, cands)| cands.len());

    let mut picks: Vec<(Cone, Cone)> = Vec::new();
    let mut branches = 0usize;
    if search_limits(&tasks, 0, &RationalCone::full_space(n), &mut picks, &mut branches) {
        picks.sort();
        (true, LimitsCertificate::Witness(picks))
    } else {
        (false, LimitsCertificate::Exhausted { branches })
    }
}

fn search_limits(
    tasks: &[(Cone, Vec<(Cone, RationalCone)>)],
    depth: usize,
    running: &RationalCone,
    picks: &mut Vec<(Cone, Cone)>,
    branches: &mut usize,
) -> bool {
    if depth == tasks.len() {
        return true;
    }
    let (tau, candidates) = &tasks[depth];
    // Intersect each candidate with the running cone; keep the ones still
    // full-dimensional, and among those drop any whose intersection is
    // contained in another's (choosing the smaller cone can never succeed
    // where the larger fails).
    let mut narrowed: Vec<(&Cone, RationalCone)> = Vec::new();
    for (sigma, term) in candidates {
        let meet = intersect_pair(running, term);
        if meet.is_full_dimensional() {
            narrowed.push((sigma, meet));
        }
    }
    let keep: Vec<bool> = (0..narrowed.len())
        .map(|i| {
            !(0..narrowed.len()).any(|j| {
                j != i
                    && narrowed[j].1.contains_cone(&narrowed[i].1)
                    && (narrowed[i].1 != narrowed[j].1 || j < i)
            })
        })
        .collect();
    let mut any = false;
    for (i, (sigma, meet)) in narrowed.into_iter().enumerate() {
        if !keep[i] {
            continue;
        }
        any = true;
        picks.push((tau.clone(), sigma.clone()));
        if search_limits(tasks, depth + 1, &meet, picks, branches) {
            return true;
        }
        picks.pop();
    }
    if !any {
        *branches += 1;
    }
    false
}

// ---------------------------------------------------------------------------
// Double description engine
// ---------------------------------------------------------------------------

/// Incremental double description: intersects the full space with the given
/// half-spaces one at a time, maintaining a lineality basis and an extreme
/// ray list.  Returns `(lineality basis, extreme rays)`, un-canonicalized.
fn double_description(n: usize, ineqs: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut lineality: Vec<Vec<BigInt>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut inserted: Vec<Vec<BigInt>> = Vec::new();

    for a in ineqs {
        if a.iter().all(Zero::is_zero) {
            continue; // trivial inequality
        }
        if let Some(k) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            // The hyperplane cuts the lineality space: one lineality
            // generator becomes a ray on the positive side, the others are
            // shifted into the hyperplane.
            let mut l0 = lineality.remove(k);
            if dot(a, &l0).is_negative() {
                l0 = neg_vec(&l0);
            }
            let al0 = dot(a, &l0);
            for l in &mut lineality {
                let al = dot(a, l);
                *l = primitive(&combine(&al0, l, &al, &l0));
            }
            for r in &mut rays {
                let ar = dot(a, r);
                *r = primitive(&combine(&al0, r, &ar, &l0));
            }
            rays.push(l0);
        } else {
            // Classical ray step: keep the nonnegative side, combine
            // positive/negative pairs into the hyperplane.
            let mut kept: Vec<Vec<BigInt>> = Vec::new();
            let mut pos: Vec<Vec<BigInt>> = Vec::new();
            let mut neg: Vec<Vec<BigInt>> = Vec::new();
            for r in rays.drain(..) {
                match dot(a, &r).sign() {
                    num_bigint::Sign::Plus => pos.push(r),
                    num_bigint::Sign::NoSign => kept.push(r),
                    num_bigint::Sign::Minus => neg.push(r),
                }
            }
            for p in &pos {
                for m in &neg {
                    let v = combine(&dot(a, p), m, &dot(a, m), p);
                    if v.iter().any(|x| !x.is_zero()) {
                        kept.push(primitive(&v));
                    }
                }
            }
            kept.extend(pos);
            rays = kept;
        }
        inserted.push(a.clone());

        // Deduplicate and drop non-extreme rays.  A ray is extreme exactly
        // when its tight inequalities have rank one below the rank of the
        // full inserted system (which is n minus the current lineality
        // dimension).
        let target_rank = n - lineality.len() - 1;
        let mut seen = BTreeSet::new();
        rays.retain(|r| seen.insert(r.clone()) && is_extreme(r, &inserted, target_rank));
    }
    (lineality, rays)
}

fn is_extreme(r: &[BigInt], inserted: &[Vec<BigInt>], target_rank: usize) -> bool {
    let tight: Vec<Vec<BigInt>> =
        inserted.iter().filter(|a| dot(a, r).is_zero()).cloned().collect();
    if tight.len() < target_rank {
        return false;
    }
    matrix_from_rows(r.len(), &tight).rank() == target_rank
}

/// `ca * x - cx * y`, the conic combination of `x` and `y` lying on the
/// hyperplane of the inequality being inserted.
fn combine(ca: &BigInt, x: &[BigInt], cx: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(xi, yi)| ca * xi - cx * yi).collect()
}

// ---------------------------------------------------------------------------
// Canonicalization
// ---------------------------------------------------------------------------

/// Canonicalizes a V-description: the lineality becomes the Hermite basis
/// of its saturated lattice, and each ray is replaced by the canonical
/// primitive representative of its class modulo lineality, deduplicated and
/// sorted.
fn canonical_v(
    n: usize,
    lineality_raw: &[Vec<BigInt>],
    rays_raw: &[Vec<BigInt>],
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let lineality = saturated_row_basis(n, lineality_raw);
    let rays: BTreeSet<Vec<BigInt>> = if lineality.is_empty() {
        rays_raw.iter().map(|r| primitive(r)).collect()
    } else {
        let (proj, lift) = quotient_maps(n, &lineality);
        rays_raw
            .iter()
            .filter_map(|r| {
                let q = proj.mul_vec(r);
                if q.iter().all(Zero::is_zero) {
                    None // ray lies in the lineality space
                } else {
                    Some(lift.mul_vec(&primitive(&q)))
                }
            })
            .collect()
    };
    (lineality, rays.into_iter().collect())
}

/// The Hermite basis of `span(rows) cap Z^n` (the saturation of the row
/// lattice).  Computed as the orthogonal complement of the orthogonal
/// complement.
fn saturated_row_basis(n: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let perp = orthogonal_complement(n, rows);
    if perp.is_empty() {
        return matrix_rows(&row_hnf(&matrix_from_rows(n, &identity_rows(n))));
    }
    let basis = orthogonal_complement(n, &perp);
    matrix_rows(&row_hnf(&matrix_from_rows(n, &basis)))
}

/// A lattice basis of `{x in Z^n | <r, x> = 0 for all rows r}`.
fn orthogonal_complement(n: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = matrix_from_rows(n, rows);
    let k = kernel_basis(&m);
    (0..k.cols()).map(|j| k.column(j)).collect()
}

/// For a saturated row lattice `B` of rank `k`, returns `(proj, lift)`:
/// `proj` maps `Z^n` onto the quotient `Z^(n-k)` with kernel exactly the
/// lattice, and `lift` is an integral section of `proj`.
pub(crate) fn quotient_maps(n: usize, basis_rows: &[Vec<BigInt>]) -> (IntMatrix, IntMatrix) {
    let k = basis_rows.len();
    let b = matrix_from_rows(n, basis_rows);
    let f = smith_normal_form(&b);
    debug_assert!(
        f.diagonal().iter().all(One::is_one),
        "quotient_maps requires a saturated lattice basis"
    );
    // With D = U B V = [I_k | 0], the last n-k columns of V span a
    // complement: projection = those columns transposed, section = the
    // corresponding rows of V^{-1} transposed.
    let tail: Vec<usize> = (k..n).collect();
    let proj = f.v.select_columns(&tail).transpose();
    let v_inv = inverse_unimodular(&f.v);
    let lift = v_inv.select_rows(&tail).transpose();
    debug_assert!(proj.mul(&lift) == IntMatrix::identity(n - k));
    debug_assert!(proj.mul(&b.transpose()).is_zero());
    (proj, lift)
}

// ---------------------------------------------------------------------------
// Small vector helpers
// ---------------------------------------------------------------------------

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn neg_vec(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

/// Divides out the gcd of the coordinates, preserving direction.  The zero
/// vector is returned unchanged.
pub(crate) fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

pub(crate) fn matrix_from_rows(cols: usize, rows: &[Vec<BigInt>]) -> IntMatrix {
    IntMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i)).collect()
}

pub(crate) fn bigvec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
