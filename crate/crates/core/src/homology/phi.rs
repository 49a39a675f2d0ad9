//! The Igusa-Todorov φ function as rank stabilization.
//!
//! The stable group is free abelian on the stable basis, so the syzygy
//! operator is injective on a subgroup exactly when it preserves its rank.
//! For the subgroup `W` spanned by a module's summands, `φ` is the first
//! index from which `rank(Ω^i W)` stays constant.
//!
//! Adjacent equality of the subgroup ranks is not enough (they can plateau
//! and later drop), so the horizon `L` is taken from the whole operator:
//! once `rank(T^L) = rank(T^{L+1})`, `T` is an automorphism of `T^L V` and
//! every subgroup rank is constant from `L` on.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::{is_self_injective, ClassVector, SyzygyOperator, TruncatedAlgebra};
use crate::exactmat::{IntMatrix, MatrixError};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    /// `r_0, ..., r_L`: ranks of the successive syzygy images of the span.
    pub rank_sequence: Vec<usize>,
    pub phi: usize,
    /// First `L` with `rank(T^L) = rank(T^{L+1})` for the full operator.
    pub stabilization_bound: usize,
}

pub fn rank_sequence(op: &SyzygyOperator, generators: &[ClassVector]) -> Result<PhiReport, Error> {
    let n = op.dim();
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(MatrixError::Shape {
            op: "rank_sequence",
            left: op.matrix.shape(),
            right: (bad.len(), 1),
        }
        .into());
    }
    let cols: Vec<Vec<BigInt>> = generators.iter().map(|g| g.coefficients.clone()).collect();
    let mut image = IntMatrix::from_columns(n, &cols)?;
    let mut power = IntMatrix::identity(n);
    let mut power_rank = n;
    let mut ranks = vec![image.rank()];
    loop {
        let next = op.matrix.mat_mul(&power)?;
        let next_rank = next.rank();
        if next_rank == power_rank {
            break;
        }
        power = next;
        power_rank = next_rank;
        image = op.matrix.mat_mul(&image)?;
        ranks.push(image.rank());
    }
    let bound = ranks.len() - 1;
    let stable = ranks[bound];
    let phi = ranks.iter().position(|&r| r == stable).unwrap_or(bound);
    Ok(PhiReport {
        rank_sequence: ranks,
        phi,
        stabilization_bound: bound,
    })
}

/// φ of the module `⊕ M^l_v` over the given `(vertex, level)` pairs.
/// Pairs whose class vanishes contribute nothing; repeats are harmless.
pub fn phi_of_generators(
    a: &TruncatedAlgebra,
    summands: &[(usize, usize)],
) -> Result<PhiReport, Error> {
    for &(v, l) in summands {
        a.check_pair(v, l)?;
    }
    let op = a.syzygy_operator();
    let distinct: BTreeSet<usize> = summands
        .iter()
        .filter_map(|&(v, l)| op.basis.position(v, l))
        .collect();
    let generators: Vec<ClassVector> = distinct
        .into_iter()
        .map(|i| {
            let (v, l) = op.basis.entries()[i];
            op.basis.unit(v, l).expect("position came from the basis")
        })
        .collect();
    rank_sequence(&op, &generators)
}

/// φ-dimension: 0 for self-injective algebras, otherwise one more than φ of
/// the sum of all `M^l_v`.
pub fn phi_dim(a: &TruncatedAlgebra) -> usize {
    phi_dim_with_report(a).0
}

/// φ-dimension together with the report for the full generator sum.
pub fn phi_dim_with_report(a: &TruncatedAlgebra) -> (usize, PhiReport) {
    let all: Vec<(usize, usize)> = a.stable_basis().entries().to_vec();
    let report = phi_of_generators(a, &all).expect("basis pairs are in range");
    let value = if is_self_injective(a) {
        0
    } else {
        1 + report.phi
    };
    (value, report)
}
