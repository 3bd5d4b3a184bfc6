//! The fan data model: validation, star subdivisions (blow-ups),
//! orbit-closure fans, and completeness.
//!
//! A fan here is always *regular* (smooth): every cone is generated by part
//! of a lattice basis.  Regularity implies simpliciality, so a cone is
//! stored as a set of indices into the fan's ray table and every subset of
//! that set is automatically a face.  Validation checks primitivity of the
//! rays, regularity of each maximal cone (via Smith normal form), and the
//! geometric condition that any two cones meet in a common face (via exact
//! polyhedral intersection).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_linalg::smith_normal_form;
use crate::polyhedral::{
    bigvec, intersect_pair, matrix_from_rows, primitive, quotient_maps, RationalCone,
};

/// A primitive, nonzero integer vector spanning a one-dimensional cone.
///
/// Ordering is lexicographic on coordinates; fans keep their ray tables
/// sorted in this order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RayVector {
    coords: Vec<BigInt>,
}

impl RayVector {
    /// Wraps a vector already known to be primitive and nonzero
    /// (validation happens in `validate_fan`).
    fn new(coords: Vec<BigInt>) -> Self {
        debug_assert!(coords.iter().any(|c| !c.is_zero()));
        debug_assert_eq!(primitive(&coords), coords);
        RayVector { coords }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }
}

/// A cone of a fan, stored as the sorted set of indices of its generating
/// rays in the owning fan's ray table.  The empty set is the zero cone.
///
/// Indices are only meaningful relative to the fan the cone came from;
/// operations that rebuild a fan (subdivision, orbit closure) re-index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Cone {
    indices: BTreeSet<usize>,
}

impl Cone {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Cone { indices: indices.into_iter().collect() }
    }

    pub fn zero() -> Self {
        Cone { indices: BTreeSet::new() }
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn index_set(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    /// Number of generators; equals the dimension for cones of a regular
    /// fan.
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.indices.is_subset(&other.indices)
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }
}

/// Raw fan input: a ray table and maximal cones as index lists, before any
/// validation.
#[derive(Clone, Debug)]
pub struct FanData {
    pub n: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanData {
    pub fn from_i64(n: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Self {
        FanData {
            n,
            rays: rays.iter().map(|r| bigvec(r)).collect(),
            max_cones: max_cones.iter().map(|c| c.to_vec()).collect(),
        }
    }
}

/// Validation and operation errors.  Ray and cone indices in validation
/// errors refer to the *input* order of `FanData`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("ray {0} is zero or not primitive")]
    NonPrimitiveRay(usize),
    #[error("rays {0} and {1} are equal")]
    DuplicateRay(usize, usize),
    #[error("cone {0:?} has linearly dependent generators")]
    DependentGenerators(Vec<usize>),
    #[error("cone {0:?} is not regular: its generators are not part of a lattice basis")]
    NotRegular(Vec<usize>),
    #[error("cones {0:?} and {1:?} do not intersect in a common face")]
    BadIntersection(Vec<usize>, Vec<usize>),
    #[error("ray {0} is not used by any cone")]
    UnusedRay(usize),
    #[error("the cone is not a cone of the fan")]
    ConeNotInFan,
}

/// A validated regular fan.
///
/// Rays are sorted lexicographically, maximal cones are sorted, and
/// `all_cones` is the closure of the maximal cones under subsets (always
/// containing the zero cone), so fan equality is field equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    n: usize,
    rays: Vec<RayVector>,
    max_cones: Vec<Cone>,
    all_cones: Vec<Cone>,
}

impl Fan {
    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn rays(&self) -> &[RayVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// All cones of the fan, sorted, including the zero cone.
    pub fn all_cones(&self) -> &[Cone] {
        &self.all_cones
    }

    pub fn contains_cone(&self, sigma: &Cone) -> bool {
        self.all_cones.binary_search(sigma).is_ok()
    }

    pub fn cones_of_dim(&self, d: usize) -> Vec<Cone> {
        self.all_cones.iter().filter(|c| c.dim() == d).cloned().collect()
    }

    /// Dimension of the largest cone.
    pub fn dim(&self) -> usize {
        self.max_cones.iter().map(Cone::dim).max().unwrap_or(0)
    }

    /// The star of `sigma`: all cones having `sigma` as a face.
    pub fn star(&self, sigma: &Cone) -> Vec<Cone> {
        self.all_cones.iter().filter(|c| sigma.is_face_of(c)).cloned().collect()
    }

    /// The maximal cones containing `sigma`.
    pub fn max_cones_containing(&self, sigma: &Cone) -> Vec<Cone> {
        self.max_cones.iter().filter(|c| sigma.is_face_of(c)).cloned().collect()
    }

    /// The generator vectors of a cone, in ray-index order.
    pub fn cone_generators(&self, sigma: &Cone) -> Vec<Vec<BigInt>> {
        sigma.indices().map(|i| self.rays[i].coords().to_vec()).collect()
    }

    /// The cone as an exact polyhedral cone.
    pub fn polyhedral_cone(&self, sigma: &Cone) -> RationalCone {
        RationalCone::from_generators(self.n, &self.cone_generators(sigma))
    }

    /// Looks up the cone spanned by the given ray vectors, if the fan has
    /// one (vectors need not be primitive; directions are matched).
    pub fn cone_from_ray_vectors(&self, vectors: &[Vec<BigInt>]) -> Option<Cone> {
        let mut indices = BTreeSet::new();
        for v in vectors {
            let p = RayVector { coords: primitive(v) };
            let i = self.rays.binary_search(&p).ok()?;
            indices.insert(i);
        }
        let cone = Cone { indices };
        self.contains_cone(&cone).then_some(cone)
    }
}

/// Checks a raw fan description and produces a validated [`Fan`].
///
/// Checks run in this order: primitivity of every ray, duplicate rays,
/// linear independence and regularity of every maximal cone, unused rays,
/// and finally the pairwise geometric intersection condition.  Maximal
/// cones that are duplicated or contained in another listed cone are
/// silently dropped.  Ray indices out of range are a structural error and
/// panic.
pub fn validate_fan(raw: &FanData) -> Result<Fan, FanError> {
    let n = raw.n;
    for (i, r) in raw.rays.iter().enumerate() {
        assert_eq!(r.len(), n, "ray {i} has wrong length");
        if r.iter().all(Zero::is_zero) || primitive(r) != *r {
            return Err(FanError::NonPrimitiveRay(i));
        }
    }
    for i in 0..raw.rays.len() {
        for j in i + 1..raw.rays.len() {
            if raw.rays[i] == raw.rays[j] {
                return Err(FanError::DuplicateRay(i, j));
            }
        }
    }

    // Normalize the maximal-cone list up front; an empty list denotes the
    // trivial fan consisting of the zero cone alone.
    let mut max_sets: Vec<BTreeSet<usize>> = if raw.max_cones.is_empty() {
        vec![BTreeSet::new()]
    } else {
        raw.max_cones.iter().map(|c| c.iter().copied().collect()).collect()
    };

    for (raw_cone, set) in raw.max_cones.iter().zip(&max_sets) {
        for &i in raw_cone {
            assert!(i < raw.rays.len(), "cone index {i} out of range");
        }
        if set.len() < raw_cone.len() {
            // A repeated generator is in particular a dependent one.
            return Err(FanError::DependentGenerators(raw_cone.clone()));
        }
        let gens: Vec<Vec<BigInt>> = set.iter().map(|&i| raw.rays[i].clone()).collect();
        let f = smith_normal_form(&matrix_from_rows(n, &gens));
        let diag = f.diagonal();
        if diag.len() < set.len() {
            return Err(FanError::DependentGenerators(raw_cone.clone()));
        }
        if !diag.iter().all(One::is_one) {
            return Err(FanError::NotRegular(raw_cone.clone()));
        }
    }

    for i in 0..raw.rays.len() {
        if !max_sets.iter().any(|c| c.contains(&i)) {
            return Err(FanError::UnusedRay(i));
        }
    }

    max_sets.sort();
    max_sets.dedup();
    let maximal: Vec<BTreeSet<usize>> = max_sets
        .iter()
        .filter(|c| !max_sets.iter().any(|d| *c != d && c.is_subset(d)))
        .cloned()
        .collect();

    // Geometric intersection condition: two cones must meet exactly in the
    // cone spanned by their common rays.  Checking maximal pairs suffices.
    for (a, sa) in maximal.iter().enumerate() {
        let ca = RationalCone::from_generators(
            n,
            &sa.iter().map(|&i| raw.rays[i].clone()).collect::<Vec<_>>(),
        );
        for sb in maximal.iter().skip(a + 1) {
            let cb = RationalCone::from_generators(
                n,
                &sb.iter().map(|&i| raw.rays[i].clone()).collect::<Vec<_>>(),
            );
            let common: Vec<Vec<BigInt>> =
                sa.intersection(sb).map(|&i| raw.rays[i].clone()).collect();
            let face = RationalCone::from_generators(n, &common);
            if intersect_pair(&ca, &cb) != face {
                return Err(FanError::BadIntersection(
                    sa.iter().copied().collect(),
                    sb.iter().copied().collect(),
                ));
            }
        }
    }

    // Canonical form: sort rays lexicographically and re-index the cones.
    let mut order: Vec<usize> = (0..raw.rays.len()).collect();
    order.sort_by(|&i, &j| raw.rays[i].cmp(&raw.rays[j]));
    let mut new_index = vec![0usize; raw.rays.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let rays: Vec<RayVector> =
        order.iter().map(|&i| RayVector::new(raw.rays[i].clone())).collect();
    let mut max_cones: Vec<Cone> = maximal
        .iter()
        .map(|c| Cone::new(c.iter().map(|&i| new_index[i])))
        .collect();
    max_cones.sort();

    let mut closure: BTreeSet<Cone> = BTreeSet::new();
    closure.insert(Cone::zero());
    for c in &max_cones {
        let idx: Vec<usize> = c.indices().collect();
        for mask in 0..(1usize << idx.len()) {
            closure.insert(Cone::new(
                idx.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i),
            ));
        }
    }

    Ok(Fan { n, rays, max_cones, all_cones: closure.into_iter().collect() })
}

/// The star subdivision of a fan at one of its cones: the star of `sigma`
/// is replaced by the cones joining the new ray through the sum of
/// `sigma`'s generators to the proper faces of `sigma` and the link.  For
/// fans of regular cones this is the fan of the blow-up along the orbit
/// closure of `sigma`.
///
/// Subdividing at a ray or at the zero cone changes nothing and returns
/// the fan unchanged.
pub fn star_subdivision(fan: &Fan, sigma: &Cone) -> Result<Fan, FanError> {
    if !fan.contains_cone(sigma) {
        return Err(FanError::ConeNotInFan);
    }
    if sigma.dim() <= 1 {
        return Ok(fan.clone());
    }
    let mut sum = vec![BigInt::zero(); fan.ambient_rank()];
    for g in fan.cone_generators(sigma) {
        for (s, x) in sum.iter_mut().zip(&g) {
            *s += x;
        }
    }
    let q = primitive(&sum);

    let mut rays: Vec<Vec<BigInt>> = fan.rays.iter().map(|r| r.coords.clone()).collect();
    debug_assert!(!rays.contains(&q), "barycenter ray already present in a valid fan");
    let q_index = rays.len();
    rays.push(q);

    let mut max_cones: Vec<Vec<usize>> = Vec::new();
    for m in &fan.max_cones {
        if !sigma.is_face_of(m) {
            max_cones.push(m.indices().collect());
            continue;
        }
        for r in sigma.indices() {
            let mut c: Vec<usize> = m.indices().filter(|&i| i != r).collect();
            c.push(q_index);
            max_cones.push(c);
        }
    }
    let data = FanData { n: fan.ambient_rank(), rays, max_cones };
    Ok(validate_fan(&data).expect("star subdivision of a valid fan is valid"))
}

/// The fan of the orbit closure of `sigma`: the star of `sigma` projected
/// to the quotient of the ambient lattice by the sublattice spanned by
/// `sigma`, a fan of rank `n - dim(sigma)`.
pub fn orbit_closure_fan(fan: &Fan, sigma: &Cone) -> Result<Fan, FanError> {
    if !fan.contains_cone(sigma) {
        return Err(FanError::ConeNotInFan);
    }
    let n = fan.ambient_rank();
    let m = n - sigma.dim();
    if m == 0 {
        let data = FanData { n: 0, rays: Vec::new(), max_cones: vec![Vec::new()] };
        return Ok(validate_fan(&data).expect("the trivial fan is valid"));
    }
    // Regularity of sigma makes its generators a saturated lattice basis,
    // so the quotient projection is defined over the integers.
    let (proj, _) = quotient_maps(n, &fan.cone_generators(sigma));

    let mut ray_index: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut max_cones: Vec<Vec<usize>> = Vec::new();
    for kappa in fan.max_cones_containing(sigma) {
        let mut cone = Vec::new();
        for i in kappa.indices().filter(|i| !sigma.contains_index(*i)) {
            let p = primitive(&proj.mul_vec(fan.rays[i].coords()));
            let next = rays.len();
            let idx = *ray_index.entry(p.clone()).or_insert_with(|| {
                rays.push(p);
                next
            });
            cone.push(idx);
        }
        max_cones.push(cone);
    }
    let data = FanData { n: m, rays, max_cones };
    Ok(validate_fan(&data).expect("projected star of a valid fan is valid"))
}

/// Whether the fan's support is the whole ambient space.
///
/// For a validated fan this holds exactly when every maximal cone is
/// full-dimensional and every ridge (cone of dimension `n - 1`) is a face
/// of exactly two maximal cones: then the support has no boundary facets,
/// so it is clopen and everything.
pub fn is_complete(fan: &Fan) -> bool {
    let n = fan.ambient_rank();
    if fan.max_cones.iter().any(|c| c.dim() != n) {
        return false;
    }
    let mut ridge_count: BTreeMap<Cone, usize> = BTreeMap::new();
    for m in &fan.max_cones {
        for r in m.indices() {
            let ridge = Cone::new(m.indices().filter(|&i| i != r));
            *ridge_count.entry(ridge).or_insert(0) += 1;
        }
    }
    ridge_count.values().all(|&k| k == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fan(n: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Fan {
        validate_fan(&FanData::from_i64(n, rays, max_cones)).unwrap()
    }

    fn cone_of(f: &Fan, vectors: &[&[i64]]) -> Cone {
        f.cone_from_ray_vectors(&vectors.iter().map(|v| bigvec(v)).collect::<Vec<_>>())
            .expect("cone not found")
    }

    #[test]
    fn affine_plane_fan_is_valid() {
        let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
        assert_eq!(f.rays().len(), 2);
        assert_eq!(f.all_cones().len(), 4); // 0, two rays, the quadrant
        assert_eq!(f.dim(), 2);
        assert!(!is_complete(&f));
    }

    #[test]
    fn non_regular_cone_is_rejected() {
        let raw = FanData::from_i64(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]);
        assert_eq!(validate_fan(&raw), Err(FanError::NotRegular(vec![0, 1])));
    }

    #[test]
    fn opposite_quadrants_meet_in_the_zero_cone() {
        let f = fan(
            2,
            &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
            &[&[0, 1], &[2, 3]],
        );
        assert_eq!(f.max_cones().len(), 2);
        assert!(!is_complete(&f));
    }

    #[test]
    fn structural_errors_are_reported_in_input_order() {
        let raw = FanData::from_i64(2, &[&[2, 4], &[0, 1]], &[&[0, 1]]);
        assert_eq!(validate_fan(&raw), Err(FanError::NonPrimitiveRay(0)));

        let raw = FanData::from_i64(2, &[&[1, 0], &[0, 1], &[1, 0]], &[&[0, 1], &[1, 2]]);
        assert_eq!(validate_fan(&raw), Err(FanError::DuplicateRay(0, 2)));

        let raw = FanData::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1, 2]]);
        assert_eq!(
            validate_fan(&raw),
            Err(FanError::DependentGenerators(vec![0, 1, 2]))
        );

        let raw = FanData::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1]]);
        assert_eq!(validate_fan(&raw), Err(FanError::UnusedRay(2)));
    }

    #[test]
    fn overlapping_cones_are_rejected() {
        // pos{e1,e2} and pos{(1,1),e2} overlap in a two-dimensional wedge
        // that is not a common face.
        let raw = FanData::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[1, 2]]);
        assert_eq!(
            validate_fan(&raw),
            Err(FanError::BadIntersection(vec![0, 1], vec![1, 2]))
        );
    }

    #[test]
    fn redundant_max_cones_are_dropped() {
        let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0], &[0, 1], &[0, 1]]);
        assert_eq!(f.max_cones().len(), 1);
    }

    #[test]
    fn subdividing_the_plane_inserts_the_diagonal() {
        let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
        let sigma = cone_of(&f, &[&[1, 0], &[0, 1]]);
        let s = star_subdivision(&f, &sigma).unwrap();
        assert_eq!(s.rays().len(), 3);
        let diag = cone_of(&s, &[&[1, 1]]);
        assert_eq!(diag.dim(), 1);
        assert_eq!(s.max_cones().len(), 2);
        assert!(s.max_cones().iter().all(|m| diag.is_face_of(m)));
    }

    #[test]
    fn subdividing_at_a_ray_or_the_zero_cone_is_a_no_op() {
        let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
        let ray = cone_of(&f, &[&[1, 0]]);
        assert_eq!(star_subdivision(&f, &ray).unwrap(), f);
        assert_eq!(star_subdivision(&f, &Cone::zero()).unwrap(), f);
        assert_eq!(
            star_subdivision(&f, &Cone::new([0, 5])),
            Err(FanError::ConeNotInFan)
        );
    }

    #[test]
    fn subdividing_the_projective_plane_stays_complete() {
        let f = fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(is_complete(&f));
        let sigma = cone_of(&f, &[&[1, 0], &[0, 1]]);
        let s = star_subdivision(&f, &sigma).unwrap();
        assert_eq!(s.rays().len(), 4);
        assert!(s.cone_from_ray_vectors(&[bigvec(&[1, 1])]).is_some());
        assert!(is_complete(&s));
        assert_eq!(s.max_cones().len(), 4);
    }

    #[test]
    fn disjoint_subdivisions_commute() {
        let f = fan(
            2,
            &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]],
        );
        let sv: Vec<Vec<BigInt>> = vec![bigvec(&[1, 0]), bigvec(&[0, 1])];
        let tv: Vec<Vec<BigInt>> = vec![bigvec(&[-1, 0]), bigvec(&[0, -1])];
        let subdivide = |f: &Fan, v: &[Vec<BigInt>]| {
            star_subdivision(f, &f.cone_from_ray_vectors(v).unwrap()).unwrap()
        };
        let a = subdivide(&subdivide(&f, &sv), &tv);
        let b = subdivide(&subdivide(&f, &tv), &sv);
        assert_eq!(a, b);
        assert!(is_complete(&a));
    }

    #[test]
    fn orbit_closure_of_a_ray_in_the_plane() {
        let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
        let rho = cone_of(&f, &[&[1, 0]]);
        let o = orbit_closure_fan(&f, &rho).unwrap();
        assert_eq!(o.ambient_rank(), 1);
        assert_eq!(o.rays().len(), 1);
        assert_eq!(o.max_cones().len(), 1);
        assert!(!is_complete(&o));
    }

    #[test]
    fn orbit_closure_of_a_full_dimensional_cone_is_trivial() {
        let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
        let sigma = cone_of(&f, &[&[1, 0], &[0, 1]]);
        let o = orbit_closure_fan(&f, &sigma).unwrap();
        assert_eq!(o.ambient_rank(), 0);
        assert!(o.rays().is_empty());
        assert_eq!(o.max_cones(), &[Cone::zero()]);
        assert!(is_complete(&o));
    }

    #[test]
    fn orbit_closure_in_the_projective_plane_is_a_projective_line() {
        let f = fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[0, 2]]);
        let rho = cone_of(&f, &[&[1, 0]]);
        let o = orbit_closure_fan(&f, &rho).unwrap();
        assert_eq!(o.ambient_rank(), 1);
        assert_eq!(o.rays().len(), 2);
        assert!(is_complete(&o));
    }

    #[test]
    fn orbit_closure_at_the_zero_cone_is_the_fan_itself() {
        let f = fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[0, 2]]);
        let o = orbit_closure_fan(&f, &Cone::zero()).unwrap();
        assert_eq!(o, f);
    }

    #[test]
    fn completeness_of_small_fans() {
        let p1 = fan(1, &[&[1], &[-1]], &[&[0], &[1]]);
        assert!(is_complete(&p1));
        let line = fan(1, &[&[1]], &[&[0]]);
        assert!(!is_complete(&line));
        let trivial = validate_fan(&FanData { n: 0, rays: vec![], max_cones: vec![] }).unwrap();
        assert!(is_complete(&trivial));
        // The octant example: four octants of eight, not complete.
        let oct = fan(
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[0, -1, 0],
                &[0, 0, -1],
                &[-1, 0, 0],
            ],
            &[&[0, 1, 2], &[0, 3, 2], &[0, 3, 4], &[5, 3, 4]],
        );
        assert!(!is_complete(&oct));
        assert_eq!(oct.all_cones().len(), 1 + 6 + 9 + 4);
    }

    #[test]
    fn trivial_fan_in_positive_rank() {
        let f = validate_fan(&FanData { n: 2, rays: vec![], max_cones: vec![] }).unwrap();
        assert_eq!(f.all_cones(), &[Cone::zero()]);
        assert!(!is_complete(&f));
        assert_eq!(f.dim(), 0);
    }
}
