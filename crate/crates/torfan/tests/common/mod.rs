//! Shared fixtures for the integration tests: a corpus of small named fans,
//! deterministic random generators for matrices, simplicial complexes, and
//! fans, and a couple of conversion helpers.
//!
//! Every generator takes an explicit seeded RNG so each test is reproducible
//! from its seed alone.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use torfan::fan_core::{star_subdivision, validate_fan, Cone, Fan, FanData};
use torfan::simplicial::SimplicialComplex;

/// A fan from raw `i64` data; panics if the data is not a valid regular fan,
/// which for the fixtures below would be a bug in the test itself.
pub fn fan(n: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Fan {
    validate_fan(&FanData::from_i64(n, rays, max_cones)).expect("fixture fan must validate")
}

/// `Vec<BigInt>` from `i64` entries, for ray-vector arguments.
pub fn bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// The first quadrant in rank 2: affine, contractible, flat.
pub fn affine_plane() -> Fan {
    fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]])
}

/// The complete fan of the projective line.
pub fn projective_line() -> Fan {
    fan(1, &[&[1], &[-1]], &[&[0], &[1]])
}

/// The complete fan of the projective plane.
pub fn projective_plane() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]])
}

/// The complete fan of P^1 x P^1: four quadrants.
pub fn p1xp1() -> Fan {
    fan(
        2,
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    )
}

/// The complete fan of (P^1)^3: eight octants.
pub fn p1_cubed() -> Fan {
    fan(
        3,
        &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[-1, 0, 0],
            &[0, -1, 0],
            &[0, 0, -1],
        ],
        &[
            &[0, 1, 2],
            &[0, 1, 5],
            &[0, 4, 2],
            &[0, 4, 5],
            &[3, 1, 2],
            &[3, 1, 5],
            &[3, 4, 2],
            &[3, 4, 5],
        ],
    )
}

/// Two opposite closed quadrants meeting only at the origin: the smallest
/// fan whose total space fails flatness for a global (not link) reason.
pub fn two_opposite_quadrants() -> Fan {
    fan(
        2,
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
        &[&[0, 1], &[2, 3]],
    )
}

/// Four octants glued along common facets: not complete, yet flat, and a
/// witness that "enough limits" is strictly stronger than flatness.
pub fn octant_example() -> Fan {
    fan(
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
    )
}

/// Two rank-4 cones meeting in a 2-face whose link is two points: the
/// smallest fixture violating the link conditions.
pub fn rank4_blowup() -> Fan {
    fan(
        4,
        &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ],
        &[&[0, 1, 2, 3], &[0, 1, 4, 5]],
    )
}

/// Two triangles sharing a single vertex inside rank 3: impure link at the
/// shared ray, so the Tor-table hypotheses fail.
pub fn pinched_fan() -> Fan {
    fan(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, 0, 0], &[0, -1, 0]],
        &[&[0, 1, 2], &[3, 4, 2]],
    )
}

/// The fan corpus by name, in a fixed order.
pub fn named_fans() -> Vec<(&'static str, Fan)> {
    vec![
        ("affine-plane", affine_plane()),
        ("projective-line", projective_line()),
        ("projective-plane", projective_plane()),
        ("p1xp1", p1xp1()),
        ("p1-cubed", p1_cubed()),
        ("two-opposite-quadrants", two_opposite_quadrants()),
        ("octant-example", octant_example()),
        ("rank4-blowup", rank4_blowup()),
    ]
}

/// A deterministic RNG for a test, from a fixed seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random matrix with entries uniform in `-max_abs..=max_abs`.
pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    max_abs: i64,
) -> torfan::exact_linalg::IntMatrix {
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(-max_abs..=max_abs)).collect())
        .collect();
    torfan::exact_linalg::IntMatrix::from_rows_i64(cols, &entries)
}

/// A random simplicial complex on up to eight vertices.  Facet candidates
/// are sampled freely; unused vertices are added back as isolated points so
/// the vertex count is honest.
pub fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let v = rng.random_range(3..=8usize);
    let candidates = rng.random_range(1..=6usize);
    let mut facets: Vec<BTreeSet<usize>> = Vec::new();
    for _ in 0..candidates {
        let size = rng.random_range(1..=v.min(5));
        let mut face = BTreeSet::new();
        while face.len() < size {
            face.insert(rng.random_range(0..v));
        }
        facets.push(face);
    }
    let used: BTreeSet<usize> = facets.iter().flatten().copied().collect();
    for i in 0..v {
        if !used.contains(&i) {
            facets.push(BTreeSet::from([i]));
        }
    }
    SimplicialComplex::from_facets(v, facets).expect("random facets are nonempty and in range")
}

/// The subfan spanned by a subset of the maximal cones, with unused rays
/// dropped and the rest reindexed.  Any nonempty subset of the maximal
/// cones of a valid fan is again a valid fan.
pub fn subfan(fan: &Fan, keep: &[usize]) -> Fan {
    assert!(!keep.is_empty(), "a fan needs at least one maximal cone");
    let kept: Vec<&Cone> = keep.iter().map(|&i| &fan.max_cones()[i]).collect();
    let used: BTreeSet<usize> = kept.iter().flat_map(|c| c.indices()).collect();
    let rays: Vec<Vec<BigInt>> = used.iter().map(|&i| fan.rays()[i].coords().to_vec()).collect();
    let reindex = |old: usize| used.iter().position(|&u| u == old).unwrap();
    let max_cones: Vec<Vec<usize>> = kept
        .iter()
        .map(|c| c.indices().map(reindex).collect())
        .collect();
    let data = FanData { n: fan.ambient_rank(), rays, max_cones };
    validate_fan(&data).expect("subfan of a valid fan must validate")
}

/// A random nonempty subset of the maximal cones, as a subfan.
pub fn random_subfan(fan: &Fan, rng: &mut ChaCha8Rng) -> Fan {
    let m = fan.max_cones().len();
    let mut keep: Vec<usize> = (0..m).filter(|_| rng.random_bool(0.6)).collect();
    if keep.is_empty() {
        keep.push(rng.random_range(0..m));
    }
    subfan(fan, &keep)
}

/// A random cone of dimension at least two, if the fan has one.  Star
/// subdivision at rays or the origin would return the fan unchanged.
pub fn random_blowup_center(fan: &Fan, rng: &mut ChaCha8Rng) -> Option<Cone> {
    let targets: Vec<Cone> = fan
        .all_cones()
        .iter()
        .filter(|c| c.dim() >= 2)
        .cloned()
        .collect();
    if targets.is_empty() {
        None
    } else {
        Some(targets[rng.random_range(0..targets.len())].clone())
    }
}

/// A random valid regular fan: a random subfan of a random corpus fan,
/// then up to two random star subdivisions.
pub fn random_fan(rng: &mut ChaCha8Rng) -> Fan {
    let seeds = named_fans();
    let (_, seed_fan) = &seeds[rng.random_range(0..seeds.len())];
    let mut current = random_subfan(seed_fan, rng);
    for _ in 0..rng.random_range(0..=2usize) {
        if let Some(center) = random_blowup_center(&current, rng) {
            current = star_subdivision(&current, &center).expect("center is a cone of the fan");
        }
    }
    current
}
