//! Finitely presented abelian groups and homological algebra on them.
//!
//! A presentation is a cokernel `Z^g / im(R)`.  A homomorphism between
//! presented groups is a matrix on generators that carries relations into
//! relations.  Kernels, cokernels, and cohomology of complexes of presented
//! groups all reduce to bordered kernel/solve computations handled by one
//! Smith-normal-form engine; for a free complex tensored with `Z/d` the
//! matrices passed to that engine are exactly the classical mapping-cone
//! blocks of the differential stacked with `d * I`.

use num_traits::Zero;

use super::{kernel_basis, smith_normal_form, solve, AbelianGroupInv, IntMatrix};
use num_bigint::BigInt;

/// The group `Z^gens / im(rels)`, with `rels` a `gens x r` matrix whose
/// columns are the relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gens: usize,
    rels: IntMatrix,
}

impl Presentation {
    pub fn new(gens: usize, rels: IntMatrix) -> Self {
        assert_eq!(rels.rows(), gens, "relation matrix must have one row per generator");
        Presentation { gens, rels }
    }

    /// The free presentation `Z^gens`.
    pub fn free(gens: usize) -> Self {
        Presentation { gens, rels: IntMatrix::zeros(gens, 0) }
    }

    /// The canonical presentation of a group in invariant-factor form: one
    /// generator per free factor, one generator with a diagonal relation per
    /// torsion factor.
    pub fn from_group(g: &AbelianGroupInv) -> Self {
        let gens = g.free_rank() + g.torsion().len();
        let mut rels = IntMatrix::zeros(gens, g.torsion().len());
        for (k, d) in g.torsion().iter().enumerate() {
            rels.set(g.free_rank() + k, k, d.clone());
        }
        Presentation { gens, rels }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn rels(&self) -> &IntMatrix {
        &self.rels
    }

    /// Invariant factors of the presented group.
    pub fn invariants(&self) -> AbelianGroupInv {
        let mut diag = smith_normal_form(&self.rels).diagonal();
        diag.resize(self.gens, BigInt::zero());
        AbelianGroupInv::from_diagonal(&diag)
    }

    /// Direct sum: generators and relators stacked block-diagonally.
    pub fn direct_sum(parts: &[&Presentation]) -> Presentation {
        let gens = parts.iter().map(|p| p.gens).sum();
        let rel_cols = parts.iter().map(|p| p.rels.cols()).sum();
        let mut rels = IntMatrix::zeros(gens, rel_cols);
        let (mut gi, mut ri) = (0, 0);
        for p in parts {
            for i in 0..p.gens {
                for j in 0..p.rels.cols() {
                    rels.set(gi + i, ri + j, p.rels.entry(i, j).clone());
                }
            }
            gi += p.gens;
            ri += p.rels.cols();
        }
        Presentation { gens, rels }
    }
}

/// Whether `f` defines a homomorphism `src -> dst`: the relators of the
/// source must map into the relation lattice of the target.
pub fn morphism_defined(f: &IntMatrix, src: &Presentation, dst: &Presentation) -> bool {
    f.rows() == dst.gens()
        && f.cols() == src.gens()
        && solve(dst.rels(), &f.mul(src.rels())).is_some()
}

/// Whether `f` and `g` are equal as homomorphisms `src -> dst`, i.e. agree
/// on generators modulo the target's relations.
pub fn morphisms_equal(f: &IntMatrix, g: &IntMatrix, dst: &Presentation) -> bool {
    assert_eq!(f.rows(), g.rows());
    assert_eq!(f.cols(), g.cols());
    let diff = IntMatrix::from_fn(f.rows(), f.cols(), |i, j| f.entry(i, j) - g.entry(i, j));
    solve(dst.rels(), &diff).is_some()
}

/// The kernel of a homomorphism `f : src -> dst` of presented groups.
///
/// Returns the kernel as a presented group together with the matrix `L`
/// whose columns express the kernel's generators inside `Z^{src.gens}`.
/// The kernel consists of the classes of `x` with `f(x)` in the relation
/// lattice of `dst`; those `x` form the projection of
/// `ker [f | dst.rels]`, and the relations are the syzygies of `L`
/// together with the source's own relators rewritten in `L`-coordinates.
pub fn kernel_presentation(
    f: &IntMatrix,
    src: &Presentation,
    dst: &Presentation,
) -> (Presentation, IntMatrix) {
    assert_eq!(f.cols(), src.gens());
    assert_eq!(f.rows(), dst.gens());
    let bordered = f.hstack(dst.rels());
    let big_kernel = kernel_basis(&bordered);
    let l = big_kernel.select_rows(&(0..src.gens()).collect::<Vec<_>>());
    let syzygies = kernel_basis(&l);
    let rewritten =
        solve(&l, src.rels()).expect("source relations must land in the kernel lattice");
    (Presentation::new(l.cols(), syzygies.hstack(&rewritten)), l)
}

/// Invariants of the cokernel of `f : src -> dst`.
pub fn cokernel_invariants(f: &IntMatrix, dst: &Presentation) -> AbelianGroupInv {
    assert_eq!(f.rows(), dst.gens());
    Presentation::new(dst.gens(), f.hstack(dst.rels())).invariants()
}

/// Cohomology of a bounded complex of presented groups.
///
/// `levels[p]` presents the degree-`p` group and `diffs[p]` is the matrix of
/// the differential `levels[p] -> levels[p+1]` on generators (so
/// `diffs.len() == levels.len() - 1`).  The maps must be homomorphisms and
/// consecutive composites must vanish modulo relations.  Returns one group
/// per level.
pub fn complex_cohomology(levels: &[Presentation], diffs: &[IntMatrix]) -> Vec<AbelianGroupInv> {
    assert!(!levels.is_empty());
    assert_eq!(diffs.len(), levels.len() - 1);
    for (p, d) in diffs.iter().enumerate() {
        assert!(
            morphism_defined(d, &levels[p], &levels[p + 1]),
            "differential at level {p} is not a homomorphism of presented groups"
        );
    }

    let mut out = Vec::with_capacity(levels.len());
    for p in 0..levels.len() {
        let zero_out = IntMatrix::zeros(0, levels[p].gens());
        let trivial = Presentation::free(0);
        let (d_out, next) = match diffs.get(p) {
            Some(d) => (d, &levels[p + 1]),
            None => (&zero_out, &trivial),
        };
        let (cycles, l) = kernel_presentation(d_out, &levels[p], next);
        // Boundaries land in the cycle lattice because d o d = 0 modulo the
        // relations, which the kernel lattice absorbs.
        let mut rels = cycles.rels().clone();
        if p > 0 {
            let boundaries = solve(&l, &diffs[p - 1])
                .expect("composite differential nonzero modulo relations");
            rels = rels.hstack(&boundaries);
        }
        out.push(Presentation::new(cycles.gens(), rels).invariants());
    }
    out
}
