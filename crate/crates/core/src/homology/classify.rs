//! Structural verdicts: self-injectivity, the φ-dimension-one test, and the
//! small-φ-dimension bullets.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{phi_dim, TruncatedAlgebra};
use crate::quiver::PathLength;

/// Every connected component is an oriented cycle or a lone vertex without
/// arrows (a copy of the ground field).
pub fn is_self_injective(a: &TruncatedAlgebra) -> bool {
    let q = a.quiver();
    q.components().iter().all(|comp| {
        let sub = q.full_subquiver(comp);
        sub.is_cycle() || (sub.vertex_count() == 1 && sub.arrow_count() == 0)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiOneReason {
    /// φ-dimension is zero.
    SelfInjective,
    /// Every path is shorter than `k`, so the algebra is hereditary.
    RadicalPowerVanishes,
    /// The reduced core has invertible adjacency matrix.
    CoreInvertible,
    /// The reduced core has singular adjacency matrix.
    CoreSingular,
}

impl fmt::Display for PhiOneReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhiOneReason::SelfInjective => "self-injective",
            PhiOneReason::RadicalPowerVanishes => "J^k = 0",
            PhiOneReason::CoreInvertible => "det core ≠ 0",
            PhiOneReason::CoreSingular => "det core = 0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PhiOneVerdict {
    pub holds: bool,
    pub reason: PhiOneReason,
}

/// Decides `φdim = 1` from the quiver alone: not self-injective, and either
/// `J^k = 0` or the reduced core has nonzero determinant.
pub fn phidim_one_verdict(a: &TruncatedAlgebra) -> PhiOneVerdict {
    if is_self_injective(a) {
        return PhiOneVerdict {
            holds: false,
            reason: PhiOneReason::SelfInjective,
        };
    }
    let short = match a.quiver().longest_path_length() {
        PathLength::Finite(l) => l < a.k(),
        PathLength::Infinite => false,
    };
    if short {
        return PhiOneVerdict {
            holds: true,
            reason: PhiOneReason::RadicalPowerVanishes,
        };
    }
    let core = a.quiver().reduced_core(a.k());
    let det = core.adjacency().determinant().expect("adjacency is square");
    if !core.is_empty() && !det.is_zero() {
        PhiOneVerdict {
            holds: true,
            reason: PhiOneReason::CoreInvertible,
        }
    } else {
        PhiOneVerdict {
            holds: false,
            reason: PhiOneReason::CoreSingular,
        }
    }
}

pub fn classify_phidim_one(a: &TruncatedAlgebra) -> bool {
    phidim_one_verdict(a).holds
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BulletOutcome {
    pub applies: bool,
    /// `None` when the hypotheses do not apply.
    pub holds: Option<bool>,
}

impl BulletOutcome {
    fn check(applies: bool, conclusion: impl FnOnce() -> bool) -> Self {
        BulletOutcome {
            applies,
            holds: applies.then(conclusion),
        }
    }

    pub fn ok(&self) -> bool {
        self.holds != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallPhiRemarkReport {
    pub phidim: usize,
    /// φ-dimension at `J^2`, computed when the quiver has no sources or sinks.
    pub phidim_radical_square_zero: Option<usize>,
    /// No sources or sinks and `J^2`-value 1 ⟹ φdim = 1.
    pub rsz_one: BulletOutcome,
    /// `k >= n`, no sources or sinks and `J^2`-value 2 ⟹ φdim = 2.
    pub rsz_two: BulletOutcome,
    /// `k >= n - 1 >= 2` ⟹ φdim <= 3.
    pub large_k: BulletOutcome,
}

impl SmallPhiRemarkReport {
    pub fn all_hold(&self) -> bool {
        self.rsz_one.ok() && self.rsz_two.ok() && self.large_k.ok()
    }
}

pub fn check_small_phidim_remark(a: &TruncatedAlgebra) -> SmallPhiRemarkReport {
    let phidim = phi_dim(a);
    let n = a.vertex_count();
    let k = a.k();
    let nss = !a.quiver().has_sources_or_sinks();
    let d2 = nss.then(|| phi_dim(&a.radical_square_zero()));
    SmallPhiRemarkReport {
        phidim,
        phidim_radical_square_zero: d2,
        rsz_one: BulletOutcome::check(d2 == Some(1), || phidim == 1),
        rsz_two: BulletOutcome::check(k >= n && d2 == Some(2), || phidim == 2),
        large_k: BulletOutcome::check(n >= 3 && k + 1 >= n, || phidim <= 3),
    }
}
