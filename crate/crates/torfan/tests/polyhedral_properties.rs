//! Randomized properties of rational polyhedral cones.
//!
//! `RationalCone` stores canonical V- and H-descriptions, so structural
//! equality is genuine set equality; the round-trip tests below rely on
//! that.  Sign conditions are checked with plain dot products, independent
//! of the double-description machinery.

mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use torfan::exact_linalg::IntMatrix;
use torfan::polyhedral::{intersect, intersect_pair, PolyError, RationalCone};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A random cone in rank 2..=4 from a handful of small integer generators.
fn random_cone(rng: &mut ChaCha8Rng, n: usize) -> RationalCone {
    let count = rng.random_range(0..=n + 2);
    let gens: Vec<Vec<BigInt>> = (0..count)
        .map(|_| (0..n).map(|_| BigInt::from(rng.random_range(-4..=4i64))).collect())
        .collect();
    RationalCone::from_generators(n, &gens)
}

#[test]
fn descriptions_round_trip_through_either_side() {
    let mut rng = common::rng(21);
    for _ in 0..80 {
        let n = rng.random_range(2..=4usize);
        let c = random_cone(&mut rng, n);
        let from_v = RationalCone::from_generators(n, &c.generators());
        let from_h = RationalCone::from_inequalities(n, &c.inequalities());
        assert_eq!(from_v, c, "V-description round trip");
        assert_eq!(from_h, c, "H-description round trip");
    }
}

#[test]
fn double_dual_is_the_identity() {
    let mut rng = common::rng(22);
    for _ in 0..80 {
        let n = rng.random_range(2..=4usize);
        let c = random_cone(&mut rng, n);
        assert_eq!(c.dual().dual(), c);
        // Constructors canonicalize eagerly, so re-deriving the dual
        // description changes nothing.
        assert_eq!(c.dual_description(), c);
    }
}

#[test]
fn facets_and_equalities_have_the_right_signs_on_generators() {
    let mut rng = common::rng(23);
    for _ in 0..80 {
        let n = rng.random_range(2..=4usize);
        let c = random_cone(&mut rng, n);
        for f in c.facets() {
            for r in c.rays() {
                assert!(!dot(f, r).is_negative(), "facet {f:?} vs ray {r:?}");
            }
            for l in c.lineality() {
                assert!(dot(f, l).is_zero(), "facets vanish on lineality");
            }
        }
        for e in c.equalities() {
            for g in c.generators() {
                assert!(dot(e, &g).is_zero(), "equalities vanish on the cone");
            }
        }
    }
}

#[test]
fn dimension_equals_the_rank_of_the_generators() {
    let mut rng = common::rng(24);
    for _ in 0..60 {
        let n = rng.random_range(2..=4usize);
        let c = random_cone(&mut rng, n);
        let gens = c.generators();
        let m = IntMatrix::from_columns(n, &gens);
        assert_eq!(c.dim(), m.rank());
        assert_eq!(c.dim() + c.equalities().len(), n, "dim + codim = n");
        assert_eq!(c.lineality_dim(), c.lineality().len());
    }
}

#[test]
fn membership_matches_the_inequality_description() {
    let mut rng = common::rng(25);
    for _ in 0..60 {
        let n = rng.random_range(2..=4usize);
        let c = random_cone(&mut rng, n);
        // Nonnegative combinations of generators always lie in the cone.
        let gens = c.generators();
        let mut point = vec![BigInt::zero(); n];
        for g in &gens {
            let coeff = BigInt::from(rng.random_range(0..=3i64));
            for (p, x) in point.iter_mut().zip(g) {
                *p += &coeff * x;
            }
        }
        assert!(c.contains_point(&point));
        // A random point is in the cone iff it passes every facet and
        // equality test; recheck membership by hand.
        let probe: Vec<BigInt> =
            (0..n).map(|_| BigInt::from(rng.random_range(-4..=4i64))).collect();
        let by_hand = c.facets().iter().all(|f| !dot(f, &probe).is_negative())
            && c.equalities().iter().all(|e| dot(e, &probe).is_zero());
        assert_eq!(c.contains_point(&probe), by_hand);
    }
}

#[test]
fn intersection_is_commutative_associative_and_contained() {
    let mut rng = common::rng(26);
    for _ in 0..40 {
        let n = rng.random_range(2..=4usize);
        let a = random_cone(&mut rng, n);
        let b = random_cone(&mut rng, n);
        let c = random_cone(&mut rng, n);
        let ab = intersect_pair(&a, &b);
        assert_eq!(ab, intersect_pair(&b, &a));
        assert!(a.contains_cone(&ab) && b.contains_cone(&ab));
        let abc = intersect_pair(&ab, &c);
        assert_eq!(abc, intersect_pair(&a, &intersect_pair(&b, &c)));
        assert_eq!(abc, intersect(n, &[&a, &b, &c]).unwrap());
    }
}

#[test]
fn full_space_and_zero_cone_are_the_two_units() {
    let mut rng = common::rng(27);
    for _ in 0..30 {
        let n = rng.random_range(2..=4usize);
        let c = random_cone(&mut rng, n);
        let full = RationalCone::full_space(n);
        let zero = RationalCone::zero_cone(n);
        assert_eq!(intersect_pair(&c, &full), c);
        assert_eq!(intersect_pair(&c, &zero), zero);
        assert!(full.is_full_dimensional() && full.lineality_dim() == n);
        assert!(zero.is_zero_cone() && zero.dim() == 0);
    }
}

#[test]
fn mixed_ambient_ranks_are_rejected() {
    let a = RationalCone::full_space(2);
    let b = RationalCone::full_space(3);
    assert_eq!(
        intersect(2, &[&a, &b]),
        Err(PolyError::RankMismatch { expected: 2, found: 3 })
    );
}
