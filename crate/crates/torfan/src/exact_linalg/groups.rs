//! Finitely generated abelian groups in invariant-factor form, and the
//! homology/tensor calculus on them.
//!
//! Every group computed anywhere in this crate is reported as a free rank
//! plus a divisibility chain of torsion coefficients, so group equality is
//! literal field equality and the text rendering is canonical.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{kernel_basis, smith_normal_form, solve, IntMatrix, LinalgError};

/// A finitely generated abelian group `Z^r + Z/d_1 + ... + Z/d_k` with
/// `d_1 | d_2 | ... | d_k` and every `d_i >= 2`.  The zero group is
/// `(0, [])`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AbelianGroupInv {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroupInv {
    /// The zero group.
    pub fn zero() -> Self {
        AbelianGroupInv { free_rank: 0, torsion: Vec::new() }
    }

    /// The free group `Z^r`.
    pub fn free(rank: usize) -> Self {
        AbelianGroupInv { free_rank: rank, torsion: Vec::new() }
    }

    /// The cyclic group `Z/d` (`d = 0` gives `Z`, `d = 1` the zero group).
    pub fn cyclic(d: i64) -> Self {
        Self::from_diagonal(&[BigInt::from(d)])
    }

    /// Builds a group from an arbitrary list of cyclic orders, as read off a
    /// diagonal matrix: `0` contributes a free factor, `+-1` nothing, any
    /// other `d` the factor `Z/|d|`.  The torsion list is renormalized into
    /// a divisibility chain.
    pub fn from_diagonal(diag: &[BigInt]) -> Self {
        let free_rank = diag.iter().filter(|d| d.is_zero()).count();
        let torsion: Vec<BigInt> =
            diag.iter().filter(|d| !d.is_zero() && !d.abs().is_one()).map(Signed::abs).collect();
        AbelianGroupInv { free_rank, torsion: normalize_torsion(&torsion) }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// The invariant-factor chain `d_1 | d_2 | ...`, each `>= 2`.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Direct sum, renormalized to invariant-factor form.
    pub fn direct_sum(&self, other: &AbelianGroupInv) -> AbelianGroupInv {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        AbelianGroupInv {
            free_rank: self.free_rank + other.free_rank,
            torsion: normalize_torsion(&torsion),
        }
    }

    /// Direct sum of `k` copies of the group.
    pub fn power(&self, k: usize) -> AbelianGroupInv {
        // Repeating each invariant factor k times keeps the chain sorted and
        // divisible, so no renormalization is needed.
        let mut torsion = Vec::with_capacity(self.torsion.len() * k);
        for d in &self.torsion {
            torsion.extend(std::iter::repeat_with(|| d.clone()).take(k));
        }
        AbelianGroupInv { free_rank: self.free_rank * k, torsion }
    }
}

/// Renormalizes a list of torsion coefficients (each >= 2, not necessarily
/// a chain) into a divisibility chain, via the Smith form of the diagonal
/// matrix they span.
fn normalize_torsion(torsion: &[BigInt]) -> Vec<BigInt> {
    if torsion.len() <= 1 {
        return torsion.to_vec();
    }
    if torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()) {
        return torsion.to_vec();
    }
    let n = torsion.len();
    let diag = IntMatrix::from_fn(n, n, |i, j| {
        if i == j { torsion[i].clone() } else { BigInt::zero() }
    });
    smith_normal_form(&diag)
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect()
}

impl fmt::Display for AbelianGroupInv {
    /// Canonical rendering: `0` for the zero group, otherwise terms joined
    /// by ` + ` with the free part first and the exponent omitted when 1,
    /// e.g. `Z^2 + Z/2 + Z/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            terms.push(format!("Z/{d}"));
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for AbelianGroupInv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing the canonical group rendering.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse abelian group from {input:?}: {reason}")]
pub struct GroupParseError {
    pub input: String,
    pub reason: String,
}

impl FromStr for AbelianGroupInv {
    type Err = GroupParseError;

    /// Parses the canonical rendering (`0`, `Z`, `Z^3`, `Z/4`,
    /// `Z^2 + Z/2 + Z/6`, ...).  Whitespace around terms is tolerated and
    /// terms may come in any order; the result is renormalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GroupParseError { input: s.to_string(), reason: reason.into() };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(err("empty string"));
        }
        if trimmed == "0" {
            return Ok(Self::zero());
        }
        let mut group = Self::zero();
        for term in trimmed.split('+') {
            let term = term.trim();
            let part = if term == "Z" {
                Self::free(1)
            } else if let Some(exp) = term.strip_prefix("Z^") {
                let rank: usize =
                    exp.trim().parse().map_err(|_| err("bad exponent in free part"))?;
                Self::free(rank)
            } else if let Some(modulus) = term.strip_prefix("Z/") {
                let d: BigInt =
                    modulus.trim().parse().map_err(|_| err("bad torsion modulus"))?;
                if d < BigInt::from(2) {
                    return Err(err("torsion modulus must be >= 2"));
                }
                Self::from_diagonal(&[d])
            } else {
                return Err(err("unrecognized term"));
            };
            group = group.direct_sum(&part);
        }
        Ok(group)
    }
}

/// A finite list of groups indexed by a degree range; degrees outside the
/// range are zero by contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGroups {
    min_degree: i64,
    groups: Vec<AbelianGroupInv>,
}

impl GradedGroups {
    pub fn new(min_degree: i64, groups: Vec<AbelianGroupInv>) -> Self {
        GradedGroups { min_degree, groups }
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Largest stored degree; `min_degree - 1` when empty.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.groups.len() as i64 - 1
    }

    /// The group in a given degree; zero outside the stored range.
    pub fn get(&self, degree: i64) -> AbelianGroupInv {
        let idx = degree - self.min_degree;
        if idx < 0 || idx as usize >= self.groups.len() {
            AbelianGroupInv::zero()
        } else {
            self.groups[idx as usize].clone()
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &AbelianGroupInv)> {
        self.groups.iter().enumerate().map(|(i, g)| (self.min_degree + i as i64, g))
    }

    pub fn is_all_zero(&self) -> bool {
        self.groups.iter().all(AbelianGroupInv::is_zero)
    }
}

/// Homology `ker(d_out) / im(d_in)` of two consecutive integer matrices.
///
/// `d_out` maps the middle group out, `d_in` maps into it, so the column
/// count of `d_out` must equal the row count of `d_in` and the composite
/// must vanish.  The quotient invariants come from restricting `d_in` to a
/// lattice basis of `ker(d_out)` and reading off the Smith diagonal.
pub fn homology_at(d_out: &IntMatrix, d_in: &IntMatrix) -> Result<AbelianGroupInv, LinalgError> {
    if d_out.cols() != d_in.rows() {
        return Err(LinalgError::DimensionMismatch {
            out_cols: d_out.cols(),
            in_rows: d_in.rows(),
        });
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(LinalgError::CompositionNonzero);
    }
    let k = kernel_basis(d_out);
    // im(d_in) lies inside ker(d_out) and the kernel basis is saturated, so
    // the change of basis is integral.
    let y = solve(&k, d_in).expect("image not contained in kernel despite zero composite");
    // The quotient is the cokernel of y on the kernel generators; kernel
    // generators beyond the Smith diagonal are free factors, recorded as
    // explicit zeros.
    let mut diag = smith_normal_form(&y).diagonal();
    diag.resize(k.cols(), BigInt::zero());
    Ok(AbelianGroupInv::from_diagonal(&diag))
}

/// The pair `(G (x) H, Tor_1(G, H))` over the integers.
///
/// Both functors are additive, free factors contribute no torsion product,
/// and on cyclic groups `Z/a (x) Z/b = Tor_1(Z/a, Z/b) = Z/gcd(a,b)`.
/// Results are renormalized to invariant-factor form.
pub fn tensor_and_tor1(
    g: &AbelianGroupInv,
    h: &AbelianGroupInv,
) -> (AbelianGroupInv, AbelianGroupInv) {
    use num_integer::Integer;
    let mut tensor_diag: Vec<BigInt> = Vec::new();
    let mut tor_diag: Vec<BigInt> = Vec::new();
    // Z^a (x) Z^b.
    for _ in 0..g.free_rank() * h.free_rank() {
        tensor_diag.push(BigInt::zero());
    }
    // Free factor of one side times torsion of the other.
    for d in h.torsion() {
        for _ in 0..g.free_rank() {
            tensor_diag.push(d.clone());
        }
    }
    for d in g.torsion() {
        for _ in 0..h.free_rank() {
            tensor_diag.push(d.clone());
        }
    }
    // Torsion times torsion contributes to both outputs.
    for a in g.torsion() {
        for b in h.torsion() {
            let d = a.gcd(b);
            tensor_diag.push(d.clone());
            tor_diag.push(d);
        }
    }
    (AbelianGroupInv::from_diagonal(&tensor_diag), AbelianGroupInv::from_diagonal(&tor_diag))
}
