//! The verdicts and invariants for the equivariant-to-ordinary K-theory
//! comparison on a smooth toric variety: flatness/degeneracy of the
//! Merkurjev spectral sequence, stability of the answer under subdivision,
//! the Tor obstruction table, its higher-row analogues, the first page of
//! the filtration spectral sequence with the Tor₀ rank bound, and the
//! predicted Tor change under a blow-up.
//!
//! Everything is driven by the combinatorics of the fan's simplicial
//! complex: purity, reduced (co)homology of the complex and of its face
//! links, and binomial coefficient ranks standing in for exterior powers
//! of the character lattices involved.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::exact_linalg::{tensor_and_tor1, AbelianGroupInv};
use crate::fan_core::{is_complete, orbit_closure_fan, Cone, Fan, FanError};
use crate::simplicial::{complex_of_fan, link, reduced_homology, SimplicialComplex};

/// Errors for the obstruction computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KTheoryError {
    /// The Tor formula's hypotheses (purity and the link conditions) do
    /// not hold, so no table is produced: the true answer would depend on
    /// the chosen subdivision.
    #[error("hypotheses not met: {reason}")]
    HypothesesNotMet { reason: String },
    #[error("the cone is not a cone of the fan")]
    ConeNotInFan,
    #[error("blow-up deltas need a cone of dimension at least 2")]
    DimensionTooSmall,
}

impl From<FanError> for KTheoryError {
    fn from(e: FanError) -> Self {
        match e {
            FanError::ConeNotInFan => KTheoryError::ConeNotInFan,
            other => panic!("unexpected fan error: {other}"),
        }
    }
}

/// `binom(a, b)` as an exact machine integer (inputs stay desk-scale).
pub(crate) fn binomial(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    let mut value = 1usize;
    for i in 0..b.min(a - b) {
        value = value * (a - i) / (i + 1);
    }
    value
}

/// Ranks of the Koszul homology of the face ring of a regular cone of
/// dimension `d` in rank `n`: index `i` holds `binom(n - d, i)`, the rank
/// of the `i`-th exterior power of the cone's annihilator characters.
pub fn koszul_tor_ranks(n: usize, d: usize) -> Vec<usize> {
    assert!(d <= n, "cone dimension exceeds the ambient rank");
    (0..=n - d).map(|i| binomial(n - d, i)).collect()
}

/// The flatness verdict and its constituent conditions.
///
/// `flat` holds exactly when the fan's complex is Cohen–Macaulay in the
/// combinatorial sense: the fan is pure of maximal dimension, every
/// nonempty face has a link with reduced homology concentrated in top
/// degree, and the complex itself does too.  Degeneracy of the comparison
/// spectral sequence is equivalent to flatness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub pure: bool,
    pub link_conditions_ok: bool,
    /// Faces whose link has nonzero reduced homology below top degree,
    /// with the offending degree.
    pub link_offenders: Vec<(BTreeSet<usize>, i64)>,
    pub global_ok: bool,
    pub flat: bool,
    pub merkurjev_degenerates: bool,
}

/// Nonempty faces (and optionally the empty face) whose links have
/// reduced homology below top degree.
fn link_offenders(cx: &SimplicialComplex, include_empty: bool) -> Vec<(BTreeSet<usize>, i64)> {
    let mut offenders = Vec::new();
    for face in cx.faces() {
        if face.is_empty() && !include_empty {
            continue;
        }
        let lk = link(cx, face).expect("faces of the complex have links");
        let h = reduced_homology(&lk, &AbelianGroupInv::free(1), false);
        for degree in -1..lk.dim() {
            if !h.get(degree).is_zero() {
                offenders.push((face.clone(), degree));
            }
        }
    }
    offenders
}

/// Evaluates the flatness conditions on a validated fan.
pub fn flatness_report(fan: &Fan) -> FlatnessReport {
    let n = fan.ambient_rank();
    let cx = complex_of_fan(fan);
    let pure = fan.max_cones().iter().all(|c| c.dim() == n);
    let link_offenders_list = link_offenders(&cx, false);
    let link_conditions_ok = link_offenders_list.is_empty();
    let h = reduced_homology(&cx, &AbelianGroupInv::free(1), false);
    let global_ok = (-1..cx.dim()).all(|d| h.get(d).is_zero());
    let flat = pure && link_conditions_ok && global_ok;
    FlatnessReport {
        pure,
        link_conditions_ok,
        link_offenders: link_offenders_list,
        global_ok,
        flat,
        merkurjev_degenerates: flat,
    }
}

/// Whether the Tor obstructions are independent of the chosen subdivision:
/// true iff every nonempty face's link has reduced homology concentrated
/// in top degree.  Returns the offending (face, degree) pairs otherwise.
pub fn subdivision_safe(fan: &Fan) -> (bool, Vec<(BTreeSet<usize>, i64)>) {
    let offenders = link_offenders(&complex_of_fan(fan), false);
    (offenders.is_empty(), offenders)
}

/// The table of obstruction groups `Tor_p` for `1 ≤ p ≤ n`; entries for
/// `p ≥ n` vanish identically (the defining sum is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    n: usize,
    entries: BTreeMap<usize, AbelianGroupInv>,
}

impl TorTable {
    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    /// The entry at index `p ≥ 1` (zero outside the stored range).
    pub fn get(&self, p: usize) -> AbelianGroupInv {
        self.entries.get(&p).cloned().unwrap_or_else(AbelianGroupInv::zero)
    }

    /// All stored entries, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &AbelianGroupInv)> {
        self.entries.iter().map(|(p, g)| (*p, g))
    }

    pub fn is_all_zero(&self) -> bool {
        self.entries.values().all(AbelianGroupInv::is_zero)
    }
}

fn require_hypotheses(fan: &Fan) -> Result<(), KTheoryError> {
    let n = fan.ambient_rank();
    if let Some(c) = fan.max_cones().iter().find(|c| c.dim() != n) {
        return Err(KTheoryError::HypothesesNotMet {
            reason: format!(
                "the fan is not pure: maximal cone {:?} has dimension {} < {}",
                c.index_set(),
                c.dim(),
                n
            ),
        });
    }
    let (safe, offenders) = subdivision_safe(fan);
    if !safe {
        let (face, degree) = &offenders[0];
        return Err(KTheoryError::HypothesesNotMet {
            reason: format!(
                "the link of face {face:?} has nonzero reduced homology in degree {degree}"
            ),
        });
    }
    Ok(())
}

/// The obstruction table of the fan:
/// `Tor_p = ⊕_(i=p+1..n) H̃^(i-p-1)(S_Δ, Z^binom(n,i))`, defined when the
/// fan is pure of maximal dimension and subdivision-safe.
pub fn tor_table(fan: &Fan) -> Result<TorTable, KTheoryError> {
    require_hypotheses(fan)?;
    let n = fan.ambient_rank();
    let h = reduced_homology(&complex_of_fan(fan), &AbelianGroupInv::free(1), true);
    let mut entries = BTreeMap::new();
    for p in 1..=n {
        let mut total = AbelianGroupInv::zero();
        for i in p + 1..=n {
            total = total.direct_sum(&h.get(i as i64 - p as i64 - 1).power(binomial(n, i)));
        }
        entries.insert(p, total);
    }
    Ok(TorTable { n, entries })
}

/// The obstruction table for a higher row of the equivariant K-theory,
/// given the coefficient group `K_q` of a point: the splitting
/// `Tor_p(K_q) = (Tor_p(K_0) ⊗ K_q) ⊕ Tor₁(Tor_(p-1)(K_0), K_q)`, where
/// the second summand is dropped at `p = 1` because `Tor_0` is free.
pub fn higher_tor_table(fan: &Fan, kq: &AbelianGroupInv) -> Result<TorTable, KTheoryError> {
    let base = tor_table(fan)?;
    let mut entries = BTreeMap::new();
    for p in 1..=base.n {
        let (tensor, _) = tensor_and_tor1(&base.get(p), kq);
        let mut total = tensor;
        if p >= 2 {
            let (_, tor1) = tensor_and_tor1(&base.get(p - 1), kq);
            total = total.direct_sum(&tor1);
        }
        entries.insert(p, total);
    }
    Ok(TorTable { n: base.n, entries })
}

/// The first page of the filtration spectral sequence converging to the
/// Tor groups, with the rank bound it yields for `Tor_0`.  Only nonzero
/// entries are stored; columns live in `1 ..= n+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Page {
    n: usize,
    entries: BTreeMap<(usize, i64), AbelianGroupInv>,
    tor0_rank_bound: usize,
}

impl E1Page {
    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    /// The entry at column `p`, row `q` (zero if absent).
    pub fn entry(&self, p: usize, q: i64) -> AbelianGroupInv {
        self.entries.get(&(p, q)).cloned().unwrap_or_else(AbelianGroupInv::zero)
    }

    /// All nonzero entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), &AbelianGroupInv)> {
        self.entries.iter().map(|(k, g)| (*k, g))
    }

    /// Upper bound for the rank of `Z ⊗ K_0^T(X)`: the total-degree-zero
    /// diagonal of this page bounds what survives to the limit.
    pub fn tor0_rank_bound(&self) -> usize {
        self.tor0_rank_bound
    }
}

/// The first page of the spectral sequence of the support filtration.
///
/// Column `p` collects the cones of dimension `n - p + 1`.  Full-
/// dimensional cones contribute `Z` at `q = -1` each; a middle column
/// `2 ≤ p ≤ n` holds `⊕_σ H̃^(p-2)(lk σ, Z^binom(p-1, -q-1))` for
/// `-p ≤ q ≤ -1`; the last column `p = n+1` (the zero cone) holds
/// `⊕_(i=0..n) H̃^(n+q+i)(S_Δ, Z^binom(n,i))`, whose rows at
/// `q = -p-n-1` reproduce the obstruction table.
pub fn merkurjev_e1_page(fan: &Fan) -> Result<E1Page, KTheoryError> {
    require_hypotheses(fan)?;
    let n = fan.ambient_rank();
    let cx = complex_of_fan(fan);
    let mut entries: BTreeMap<(usize, i64), AbelianGroupInv> = BTreeMap::new();
    let mut add = |p: usize, q: i64, g: AbelianGroupInv| {
        if g.is_zero() {
            return;
        }
        match entries.entry((p, q)) {
            Entry::Vacant(e) => {
                e.insert(g);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().direct_sum(&g);
                e.insert(sum);
            }
        }
    };

    if n >= 1 {
        add(1, -1, AbelianGroupInv::free(fan.max_cones().len()));
    }
    for p in 2..=n {
        for sigma in fan.cones_of_dim(n - p + 1) {
            let lk = link(&cx, sigma.index_set()).expect("fan cones are faces");
            let h = reduced_homology(&lk, &AbelianGroupInv::free(1), true);
            let g = h.get(p as i64 - 2);
            for q in -(p as i64)..=-1 {
                add(p, q, g.power(binomial(p - 1, (-q - 1) as usize)));
            }
        }
    }
    let h = reduced_homology(&cx, &AbelianGroupInv::free(1), true);
    for q in -(2 * n as i64 + 1)..=-1 {
        for i in 0..=n {
            let g = h.get(n as i64 + q + i as i64);
            add(n + 1, q, g.power(binomial(n, i)));
        }
    }

    let tor0_rank_bound =
        (1..=n + 1).map(|p| entries.get(&(p, -(p as i64))).map_or(0, |g| g.free_rank())).sum();
    Ok(E1Page { n, entries, tor0_rank_bound })
}

/// The predicted change of each `Tor_i` under the star subdivision
/// (blow-up) at a cone `sigma` of dimension `d ≥ 2`: the obstruction
/// table of the orbit-closure fan at `sigma`, raised to the power `d - 1`.
/// `invariant` reports whether all deltas vanish, i.e. whether the blow-up
/// leaves every obstruction group unchanged.
pub fn blowup_tor_delta(fan: &Fan, sigma: &Cone) -> Result<(TorTable, bool), KTheoryError> {
    if !fan.contains_cone(sigma) {
        return Err(KTheoryError::ConeNotInFan);
    }
    let d = sigma.dim();
    if d < 2 {
        return Err(KTheoryError::DimensionTooSmall);
    }
    let orbit = orbit_closure_fan(fan, sigma)?;
    let table = tor_table(&orbit)?;
    let entries = table
        .entries
        .iter()
        .map(|(p, g)| (*p, g.power(d - 1)))
        .collect::<BTreeMap<_, _>>();
    let delta = TorTable { n: table.n, entries };
    let invariant = delta.is_all_zero();
    Ok((delta, invariant))
}

/// Convenience wrapper asserting the complete-fan guarantees all at once;
/// used by tests and the self-check command.
pub fn complete_fan_is_unobstructed(fan: &Fan) -> bool {
    is_complete(fan)
        && flatness_report(fan).flat
        && tor_table(fan).map(|t| t.is_all_zero()).unwrap_or(false)
}
