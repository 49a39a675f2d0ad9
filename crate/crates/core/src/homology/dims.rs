use std::fmt;

use serde::{Serialize, Serializer};

use super::{is_self_injective, phi_dim, TruncatedAlgebra};
use crate::quiver::PathLength;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobalDimension {
    Finite(usize),
    Infinite,
}

impl fmt::Display for GlobalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalDimension::Finite(d) => write!(f, "{d}"),
            GlobalDimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Finite values as JSON numbers, infinity as the string `"infinite"`.
impl Serialize for GlobalDimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GlobalDimension::Finite(d) => s.serialize_u64(*d as u64),
            GlobalDimension::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Global dimension from the longest path `l`: infinite with an oriented
/// cycle, else `2l/k` when `k | l` and `2⌊l/k⌋ + 1` otherwise.
pub fn gldim(a: &TruncatedAlgebra) -> GlobalDimension {
    match a.quiver().longest_path_length() {
        PathLength::Infinite => GlobalDimension::Infinite,
        PathLength::Finite(l) => {
            let k = a.k();
            if l % k == 0 {
                GlobalDimension::Finite(2 * l / k)
            } else {
                GlobalDimension::Finite(2 * (l / k) + 1)
            }
        }
    }
}

/// Converts a radical-square-zero φ-dimension `m` into the level-`k` value
/// for quivers without sources or sinks.
pub fn f_k(k: usize, m: usize) -> Result<usize, Error> {
    if k < 2 {
        return Err(Error::Domain(format!("f_k needs k >= 2, got {k}")));
    }
    // for k = 2 the residues 1 and 2 already cover every m >= 1
    Ok(if m == 0 {
        0
    } else if m % k == 1 {
        2 * ((m - 1) / k) + 1
    } else if m % k == 2 % k {
        2 * ((m - 2) / k) + 2
    } else {
        2 * (m - 2).div_ceil(k) + 1
    })
}

/// Closed form for quivers without sources or sinks: `f_k` applied to the
/// φ-dimension of the same quiver truncated at `J^2`.
pub fn phidim_by_formula(a: &TruncatedAlgebra) -> Result<usize, Error> {
    if a.quiver().has_sources_or_sinks() {
        return Err(Error::Domain(
            "closed formula needs a quiver without sources or sinks".into(),
        ));
    }
    if is_self_injective(a) {
        return Err(Error::Domain(
            "closed formula does not apply to self-injective algebras".into(),
        ));
    }
    let d2 = phi_dim(&a.radical_square_zero());
    f_k(a.k(), d2)
}

/// `f_k(|Q_0|)`, the upper bound on the φ-dimension.
pub fn phi_upper_bound(a: &TruncatedAlgebra) -> usize {
    f_k(a.k(), a.vertex_count()).expect("k >= 2 is an algebra invariant")
}
