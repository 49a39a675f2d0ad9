//! Stable Grothendieck group of a truncated path algebra `kQ/J^k` and the
//! syzygy operator acting on it.
//!
//! For a path of length `l` ending at `v`, the right ideal it generates only
//! depends on `(v, l)`; call it `M^l_v`. Its class in the stable group is
//! nonzero exactly when the module exists (some path of length `l` ends at
//! `v`) and is not projective (some path of length `k - l` starts at `v`).
//! These classes form a basis, and the syzygy of `M^l_v` is
//! `⊕ M^{k-l}_w`, one summand per path of length `k - l` from `v` to `w`.
//! Everything below is integer linear algebra on that basis.

mod classify;
mod dims;
mod phi;

pub use classify::{
    check_small_phidim_remark, classify_phidim_one, is_self_injective, phidim_one_verdict,
    BulletOutcome, PhiOneReason, PhiOneVerdict, SmallPhiRemarkReport,
};
pub use dims::{f_k, gldim, phi_upper_bound, phidim_by_formula, GlobalDimension};
pub use phi::{phi_dim, phi_dim_with_report, phi_of_generators, rank_sequence, PhiReport};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmat::IntMatrix;
use crate::quiver::{PathTable, Quiver};
use crate::Error;

/// `kQ/J^k` for a quiver `Q` and truncation exponent `k >= 2`.
#[derive(Debug, Clone)]
pub struct TruncatedAlgebra {
    quiver: Quiver,
    k: usize,
    paths: PathTable,
}

impl PartialEq for TruncatedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.quiver == other.quiver
    }
}

impl Eq for TruncatedAlgebra {}

impl TruncatedAlgebra {
    pub fn new(quiver: Quiver, k: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::Domain(format!(
                "truncation exponent must be at least 2, got {k}"
            )));
        }
        let paths = PathTable::new(&quiver, k);
        Ok(TruncatedAlgebra { quiver, k, paths })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// The algebra on the opposite quiver, same `k`.
    pub fn opposite(&self) -> TruncatedAlgebra {
        TruncatedAlgebra::new(self.quiver.opposite(), self.k).expect("k already validated")
    }

    /// Same quiver truncated at `J^2`.
    pub fn radical_square_zero(&self) -> TruncatedAlgebra {
        TruncatedAlgebra::new(self.quiver.clone(), 2).expect("k = 2 is valid")
    }

    pub fn path_table(&self) -> &PathTable {
        &self.paths
    }

    /// Whether `[M^l_v]` is a nonzero stable class. `l` must be in `1..k`.
    pub fn survives(&self, v: usize, l: usize) -> bool {
        self.paths.survives(v, l, self.k)
    }

    fn check_pair(&self, v: usize, l: usize) -> Result<(), Error> {
        if v >= self.vertex_count() {
            return Err(Error::Domain(format!("vertex index {v} out of range")));
        }
        if l == 0 || l >= self.k {
            return Err(Error::Domain(format!(
                "level {l} outside 1..={} for k = {}",
                self.k - 1,
                self.k
            )));
        }
        Ok(())
    }

    /// Basis of the stable group, ordered by level then vertex.
    pub fn stable_basis(&self) -> StableBasis {
        let entries = (1..self.k)
            .flat_map(|l| (0..self.vertex_count()).map(move |v| (v, l)))
            .filter(|&(v, l)| self.survives(v, l))
            .collect();
        StableBasis::new(entries)
    }

    /// Number of paths of each length `0..=max` between every pair of
    /// vertices: `powers[m]` is the `m`-th power of the adjacency matrix.
    fn adjacency_powers(&self, max: usize) -> Vec<IntMatrix> {
        let adj = self.quiver.adjacency();
        let mut powers = vec![IntMatrix::identity(self.vertex_count())];
        for m in 1..=max {
            let next = powers[m - 1].mat_mul(&adj).expect("square");
            powers.push(next);
        }
        powers
    }

    /// Class of the syzygy of `M^l_v`, expanded in the stable basis.
    pub fn syzygy_of_generator(&self, v: usize, l: usize) -> Result<ClassVector, Error> {
        self.check_pair(v, l)?;
        if !self.survives(v, l) {
            return Err(Error::Domain(format!(
                "({}, {l}) is not a nonzero stable class",
                self.quiver.name(v)
            )));
        }
        let basis = self.stable_basis();
        let power = self.quiver.adjacency().mat_pow((self.k - l) as u64)?;
        Ok(syzygy_column(&basis, &power, v, l, self.k))
    }

    /// Matrix of the syzygy operator on the stable basis.
    pub fn syzygy_operator(&self) -> SyzygyOperator {
        let basis = self.stable_basis();
        let powers = self.adjacency_powers(self.k - 1);
        let columns: Vec<Vec<BigInt>> = basis
            .entries()
            .iter()
            .map(|&(v, l)| syzygy_column(&basis, &powers[self.k - l], v, l, self.k).coefficients)
            .collect();
        let matrix =
            IntMatrix::from_columns(basis.len(), &columns).expect("square by construction");
        SyzygyOperator { basis, matrix }
    }
}

fn syzygy_column(
    basis: &StableBasis,
    paths: &IntMatrix,
    v: usize,
    l: usize,
    k: usize,
) -> ClassVector {
    let target = k - l;
    let mut coefficients = vec![BigInt::zero(); basis.len()];
    for w in 0..paths.cols() {
        // projective summands vanish; those targets are absent from the basis
        if let Some(idx) = basis.position(w, target) {
            coefficients[idx] = paths.get(v, w).clone();
        }
    }
    ClassVector { coefficients }
}

/// Ordered basis `(vertex, level)` of the stable group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableBasis {
    entries: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl StableBasis {
    fn new(entries: Vec<(usize, usize)>) -> Self {
        let index = entries.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        StableBasis { entries, index }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, v: usize, l: usize) -> Option<usize> {
        self.index.get(&(v, l)).copied()
    }

    pub fn contains(&self, v: usize, l: usize) -> bool {
        self.index.contains_key(&(v, l))
    }

    /// Unit vector of a basis element.
    pub fn unit(&self, v: usize, l: usize) -> Option<ClassVector> {
        let idx = self.position(v, l)?;
        let mut coefficients = vec![BigInt::zero(); self.len()];
        coefficients[idx] = BigInt::from(1);
        Some(ClassVector { coefficients })
    }
}

/// Integer coordinates of a stable class in a [`StableBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVector {
    pub coefficients: Vec<BigInt>,
}

impl ClassVector {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Basis positions with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The syzygy operator on the stable group; column `i` is the syzygy of
/// basis element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyOperator {
    pub basis: StableBasis,
    pub matrix: IntMatrix,
}

impl SyzygyOperator {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}
