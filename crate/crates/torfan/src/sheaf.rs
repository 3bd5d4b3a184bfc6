//! Sheaves of finitely generated abelian groups on the poset of cones of a
//! fan, ordered by `σ ≤ τ ⇔ τ ≺ σ` (the zero cone is the unique maximum and
//! open sets are exactly the subfans).
//!
//! A sheaf is stalk data plus compatible restriction matrices from each
//! cone to each of its proper faces.  The module computes sections over
//! subfans (an equalizer over the maximal cones), flabbiness, and sheaf
//! cohomology along two independent routes: a closed-form path for simple
//! sheaves through the orbit-closure fan, and a generic derived-inverse-
//! limit backend via the ordered-chain (bar) cochain complex.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::exact_linalg::{
    cokernel_invariants, complex_cohomology, kernel_presentation, morphism_defined,
    morphisms_equal, solve, AbelianGroupInv, IntMatrix, Presentation,
};
use crate::fan_core::{orbit_closure_fan, Cone, Fan, FanError};
use crate::simplicial::{complex_of_fan, reduced_homology};

/// Errors from sheaf construction and section computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SheafError {
    #[error("no stalk given for cone {0:?}")]
    MissingStalk(Cone),
    #[error("no restriction matrix given for the face pair ({0:?}, {1:?})")]
    MissingRestriction(Cone, Cone),
    #[error("the restriction for ({0:?}, {1:?}) is not a morphism of presented groups")]
    InvalidRestriction(Cone, Cone),
    #[error("restrictions along {0:?} -> {1:?} -> {2:?} do not compose functorially")]
    NotFunctorial(Cone, Cone, Cone),
    #[error("the given cone set is not open (not closed under faces)")]
    NotOpen,
    #[error("the cone is not a cone of the fan")]
    ConeNotInFan,
}

/// A sheaf of finitely generated abelian groups on the cone poset of a
/// fan: one presented group per cone and one restriction matrix per strict
/// face pair, functorial up to the target presentations' relations.
#[derive(Clone, Debug)]
pub struct PosetSheaf {
    fan: Fan,
    stalks: BTreeMap<Cone, Presentation>,
    res: BTreeMap<(Cone, Cone), IntMatrix>,
}

impl PosetSheaf {
    /// Validates stalk/restriction data into a sheaf: every cone needs a
    /// stalk, every strict face pair a restriction that is a well-defined
    /// morphism, and compositions must agree with the direct restrictions.
    pub fn new(
        fan: Fan,
        stalks: BTreeMap<Cone, Presentation>,
        res: BTreeMap<(Cone, Cone), IntMatrix>,
    ) -> Result<Self, SheafError> {
        for c in fan.all_cones() {
            if !stalks.contains_key(c) {
                return Err(SheafError::MissingStalk(c.clone()));
            }
        }
        for sigma in fan.all_cones() {
            for tau in fan.all_cones() {
                if !tau.is_face_of(sigma) || tau == sigma {
                    continue;
                }
                let Some(m) = res.get(&(sigma.clone(), tau.clone())) else {
                    return Err(SheafError::MissingRestriction(sigma.clone(), tau.clone()));
                };
                if !morphism_defined(m, &stalks[sigma], &stalks[tau]) {
                    return Err(SheafError::InvalidRestriction(sigma.clone(), tau.clone()));
                }
            }
        }
        let sheaf = PosetSheaf { fan, stalks, res };
        for sigma in sheaf.fan.all_cones() {
            for tau in sheaf.fan.all_cones() {
                if !tau.is_face_of(sigma) || tau == sigma {
                    continue;
                }
                for upsilon in sheaf.fan.all_cones() {
                    if !upsilon.is_face_of(tau) || upsilon == tau {
                        continue;
                    }
                    let direct = sheaf.restriction(sigma, upsilon);
                    let composed =
                        sheaf.restriction(tau, upsilon).mul(&sheaf.restriction(sigma, tau));
                    if !morphisms_equal(&direct, &composed, &sheaf.stalks[upsilon]) {
                        return Err(SheafError::NotFunctorial(
                            sigma.clone(),
                            tau.clone(),
                            upsilon.clone(),
                        ));
                    }
                }
            }
        }
        Ok(sheaf)
    }

    /// The constant sheaf: every stalk is `g`, every restriction the
    /// identity.
    pub fn constant(fan: &Fan, g: &AbelianGroupInv) -> Self {
        let p = Presentation::from_group(g);
        let stalks = fan.all_cones().iter().map(|c| (c.clone(), p.clone())).collect();
        let mut res = BTreeMap::new();
        for (sigma, tau) in strict_face_pairs(fan) {
            res.insert((sigma, tau), IntMatrix::identity(p.gens()));
        }
        Self::new(fan.clone(), stalks, res).expect("the constant sheaf is functorial")
    }

    /// The simple sheaf `g(sigma)`: stalk `g` at `sigma`, zero elsewhere,
    /// zero restrictions.
    pub fn simple(fan: &Fan, sigma: &Cone, g: &AbelianGroupInv) -> Result<Self, SheafError> {
        if !fan.contains_cone(sigma) {
            return Err(SheafError::ConeNotInFan);
        }
        let p = Presentation::from_group(g);
        let stalks: BTreeMap<Cone, Presentation> = fan
            .all_cones()
            .iter()
            .map(|c| {
                let stalk = if c == sigma { p.clone() } else { Presentation::free(0) };
                (c.clone(), stalk)
            })
            .collect();
        let mut res = BTreeMap::new();
        for (s, t) in strict_face_pairs(fan) {
            let m = IntMatrix::zeros(stalks[&t].gens(), stalks[&s].gens());
            res.insert((s, t), m);
        }
        Ok(Self::new(fan.clone(), stalks, res).expect("simple sheaves are functorial"))
    }

    /// The zero sheaf.
    pub fn zero(fan: &Fan) -> Self {
        let stalks = fan.all_cones().iter().map(|c| (c.clone(), Presentation::free(0))).collect();
        let res = strict_face_pairs(fan)
            .into_iter()
            .map(|pair| (pair, IntMatrix::zeros(0, 0)))
            .collect();
        Self::new(fan.clone(), stalks, res).expect("the zero sheaf is functorial")
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn stalk(&self, c: &Cone) -> &Presentation {
        &self.stalks[c]
    }

    /// The restriction matrix from a cone to one of its faces (identity
    /// when they coincide).
    pub fn restriction(&self, sigma: &Cone, tau: &Cone) -> IntMatrix {
        debug_assert!(tau.is_face_of(sigma));
        if sigma == tau {
            IntMatrix::identity(self.stalks[sigma].gens())
        } else {
            self.res[&(sigma.clone(), tau.clone())].clone()
        }
    }
}

fn strict_face_pairs(fan: &Fan) -> Vec<(Cone, Cone)> {
    let mut pairs = Vec::new();
    for sigma in fan.all_cones() {
        for tau in fan.all_cones() {
            if tau.is_face_of(sigma) && tau != sigma {
                pairs.push((sigma.clone(), tau.clone()));
            }
        }
    }
    pairs
}

/// The sections of the sheaf over an open set (a face-closed set of cones
/// of the fan): tuples of stalk elements over the maximal cones whose
/// restrictions agree on each pairwise intersection, computed as the
/// kernel of the difference map.
pub fn sections(sheaf: &PosetSheaf, open: &BTreeSet<Cone>) -> Result<AbelianGroupInv, SheafError> {
    Ok(sections_presentation(sheaf, open)?.0.invariants())
}

/// Sections with their presentation: returns `(S, maximal cones, L)` where
/// `L` embeds the generators of `S` into the direct sum of the stalks over
/// the maximal cones of the open set.
fn sections_presentation(
    sheaf: &PosetSheaf,
    open: &BTreeSet<Cone>,
) -> Result<(Presentation, Vec<Cone>, IntMatrix), SheafError> {
    for c in open {
        if !sheaf.fan.contains_cone(c) {
            return Err(SheafError::NotOpen);
        }
        let idx: Vec<usize> = c.indices().collect();
        for mask in 0..(1usize << idx.len()) {
            let face = Cone::new(
                idx.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i),
            );
            if !open.contains(&face) {
                return Err(SheafError::NotOpen);
            }
        }
    }
    let maximal: Vec<Cone> = open
        .iter()
        .filter(|c| !open.iter().any(|d| *c != d && c.is_face_of(d)))
        .cloned()
        .collect();
    let src_parts: Vec<&Presentation> = maximal.iter().map(|c| &sheaf.stalks[c]).collect();
    let src = Presentation::direct_sum(&src_parts);
    let src_offsets = offsets(&src_parts);

    // One block row per unordered pair: restriction from the first summand
    // minus restriction from the second, into the stalk of the meet.
    let mut meets: Vec<(usize, usize, Cone)> = Vec::new();
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            let meet = Cone::new(
                maximal[i].index_set().intersection(maximal[j].index_set()).copied(),
            );
            meets.push((i, j, meet));
        }
    }
    let dst_parts: Vec<&Presentation> = meets.iter().map(|(_, _, m)| &sheaf.stalks[m]).collect();
    let dst = Presentation::direct_sum(&dst_parts);
    let dst_offsets = offsets(&dst_parts);

    let mut diff = IntMatrix::zeros(dst.gens(), src.gens());
    for (k, (i, j, meet)) in meets.iter().enumerate() {
        let a = sheaf.restriction(&maximal[*i], meet);
        let b = sheaf.restriction(&maximal[*j], meet);
        add_block(&mut diff, dst_offsets[k], src_offsets[*i], &a, false);
        add_block(&mut diff, dst_offsets[k], src_offsets[*j], &b, true);
    }
    let (kernel, embed) = kernel_presentation(&diff, &src, &dst);
    Ok((kernel, maximal, embed))
}

fn offsets(parts: &[&Presentation]) -> Vec<usize> {
    let mut off = Vec::with_capacity(parts.len());
    let mut total = 0;
    for p in parts {
        off.push(total);
        total += p.gens();
    }
    off
}

fn add_block(m: &mut IntMatrix, row: usize, col: usize, block: &IntMatrix, negate: bool) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = if negate { -block.entry(i, j) } else { block.entry(i, j).clone() };
            m.set(row + i, col + j, m.entry(row + i, col + j) + v);
        }
    }
}

/// Whether the sheaf is flabby: for every cone, the stalk must surject
/// onto the sections over the subfan of the cone's proper faces.  Returns
/// the first offending cone otherwise.
pub fn is_flabby(sheaf: &PosetSheaf) -> (bool, Option<Cone>) {
    for sigma in sheaf.fan.all_cones() {
        if sigma.is_zero() {
            continue; // the boundary subfan is empty; sections are 0
        }
        let idx: Vec<usize> = sigma.indices().collect();
        let mut boundary: BTreeSet<Cone> = BTreeSet::new();
        for mask in 0..(1usize << idx.len()) - 1 {
            boundary.insert(Cone::new(
                idx.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i),
            ));
        }
        let (kernel, maximal, embed) =
            sections_presentation(sheaf, &boundary).expect("boundary subfans are open");
        // Stack the restrictions into the maximal boundary faces, factor
        // through the sections presentation, and test surjectivity there.
        let mut stacked = IntMatrix::zeros(0, sheaf.stalks[sigma].gens());
        for tau in &maximal {
            stacked = stacked.vstack(&sheaf.restriction(sigma, tau));
        }
        let w = solve(&embed, &stacked)
            .expect("restrictions of a functorial sheaf land in the sections");
        if !cokernel_invariants(&w, &kernel).is_zero() {
            return (false, Some(sigma.clone()));
        }
    }
    (true, None)
}

/// Sheaf cohomology of the simple sheaf `g(sigma)` on the fan, computed by
/// the closed formula: `H^i` is the reduced cohomology `H̃^(i-1)` of the
/// simplicial complex of the orbit-closure fan at `sigma`, for all `i ≥ 0`
/// (degree 0 gives `g` exactly when `sigma` is maximal).  The returned
/// list covers degrees `0 ..= n - dim(sigma)`.
pub fn simple_sheaf_cohomology(
    fan: &Fan,
    sigma: &Cone,
    g: &AbelianGroupInv,
) -> Result<Vec<AbelianGroupInv>, FanError> {
    let orbit = orbit_closure_fan(fan, sigma)?;
    let h = reduced_homology(&complex_of_fan(&orbit), g, true);
    let m = fan.ambient_rank() - sigma.dim();
    Ok((0..=m as i64).map(|i| h.get(i - 1)).collect())
}

/// Sheaf cohomology of an arbitrary poset sheaf via the derived inverse
/// limit: the cochain complex `C^p = ⊕ stalk(σ_p)` over strictly
/// descending cone towers `σ_0 ⊋ … ⊋ σ_p`, with the alternating-face
/// differential and the restriction in the last slot.  Degrees `0 ..= n`.
pub fn poset_sheaf_cohomology(sheaf: &PosetSheaf) -> Vec<AbelianGroupInv> {
    let n = sheaf.fan.ambient_rank();
    // Towers by length; a tower of length p+1 is a strictly descending
    // sequence of cones in the face order.
    let mut towers: Vec<Vec<Vec<Cone>>> =
        vec![sheaf.fan.all_cones().iter().map(|c| vec![c.clone()]).collect()];
    for _ in 0..n {
        let prev = towers.last().unwrap();
        let mut next = Vec::new();
        for t in prev {
            let last = t.last().unwrap();
            for f in sheaf.fan.all_cones() {
                if f.is_face_of(last) && f != last {
                    let mut ext = t.clone();
                    ext.push(f.clone());
                    next.push(ext);
                }
            }
        }
        towers.push(next);
    }

    let level_parts: Vec<Vec<&Presentation>> = towers
        .iter()
        .map(|ts| ts.iter().map(|t| &sheaf.stalks[t.last().unwrap()]).collect())
        .collect();
    let levels: Vec<Presentation> =
        level_parts.iter().map(|parts| Presentation::direct_sum(parts)).collect();
    let level_offsets: Vec<Vec<usize>> = level_parts.iter().map(|p| offsets(p)).collect();
    let index_of: Vec<BTreeMap<&Vec<Cone>, usize>> = towers
        .iter()
        .map(|ts| ts.iter().enumerate().map(|(i, t)| (t, i)).collect())
        .collect();

    let mut diffs = Vec::new();
    for p in 0..n {
        let mut d = IntMatrix::zeros(levels[p + 1].gens(), levels[p].gens());
        for (ci, tower) in towers[p + 1].iter().enumerate() {
            let row = level_offsets[p + 1][ci];
            for omit in 0..=p + 1 {
                let sub: Vec<Cone> = tower
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != omit)
                    .map(|(_, c)| c.clone())
                    .collect();
                let col = level_offsets[p][index_of[p][&sub]];
                let block = if omit == p + 1 {
                    sheaf.restriction(&tower[p], &tower[p + 1])
                } else {
                    IntMatrix::identity(sheaf.stalks[tower.last().unwrap()].gens())
                };
                add_block(&mut d, row, col, &block, omit % 2 == 1);
            }
        }
        diffs.push(d);
    }
    complex_cohomology(&levels, &diffs)
}
