//! Radical-square-zero algebras of maximal φ-dimension.
//!
//! A quiver on `n` vertices reaches φ-dimension `n` at `J^2` when its
//! adjacency matrix is similar to `M_λ`: a nilpotent Jordan block of size
//! `n - 1` next to a single eigenvalue `λ >= 2`. Such matrices are built
//! here directly as `m · Ã M_λ Ã⁻¹`, where `Ã` has a positive last column
//! `v` and its inverse a positive last row `w`:
//!
//! 1. pick positive `v`, `w` with `<v, w> = 1`;
//! 2. complete `v` with a basis of `w^⊥` to get `Ã`;
//! 3. raise `λ` until the conjugate is entrywise nonnegative, which works
//!    because the `λ`-part of the conjugate is the positive matrix `v wᵀ`;
//! 4. clear denominators with the smallest integer `m`.
//!
//! The result is always re-checked with the general φ computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exactmat::{IntMatrix, RatMatrix};
use crate::homology::{phi_dim, TruncatedAlgebra};
use crate::quiver::Quiver;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionInput {
    pub v_n: Vec<BigRational>,
    pub w_n: Vec<BigRational>,
    /// Basis of `w^⊥`; derived from `w` when absent.
    pub perp_basis: Option<Vec<Vec<BigRational>>>,
    /// Ask for a strictly positive adjacency matrix (every vertex pair
    /// joined by an arrow).
    pub strict_positive: bool,
}

impl ConstructionInput {
    pub fn new(v_n: Vec<BigRational>, w_n: Vec<BigRational>) -> Self {
        ConstructionInput {
            v_n,
            w_n,
            perp_basis: None,
            strict_positive: false,
        }
    }

    /// `v = (1, ..., 1)`, `w = (1/n, ..., 1/n)`.
    pub fn uniform(n: usize) -> Self {
        let v = vec![BigRational::one(); n];
        let w = vec![BigRational::new(BigInt::one(), BigInt::from(n.max(1))); n];
        ConstructionInput::new(v, w)
    }

    pub fn n(&self) -> usize {
        self.v_n.len()
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.n();
        if n < 2 {
            return Err(Error::Domain(format!("construction needs n >= 2, got {n}")));
        }
        if self.w_n.len() != n {
            return Err(Error::Domain(format!(
                "v has length {n} but w has length {}",
                self.w_n.len()
            )));
        }
        if !self.v_n.iter().chain(&self.w_n).all(Signed::is_positive) {
            return Err(Error::Domain(
                "every coordinate of v and w must be strictly positive".into(),
            ));
        }
        let pairing = dot(&self.v_n, &self.w_n);
        if !pairing.is_one() {
            return Err(Error::Domain(format!("<v, w> must be 1, got {pairing}")));
        }
        if let Some(basis) = &self.perp_basis {
            if basis.len() != n - 1 || basis.iter().any(|b| b.len() != n) {
                return Err(Error::Domain(format!(
                    "perpendicular basis must hold {} vectors of length {n}",
                    n - 1
                )));
            }
            if basis.iter().any(|b| !dot(b, &self.w_n).is_zero()) {
                return Err(Error::Domain(
                    "perpendicular basis vector not orthogonal to w".into(),
                ));
            }
            let m = RatMatrix::from_rows(basis.clone(), n)?;
            if m.rank() != n - 1 {
                return Err(Error::Domain(
                    "perpendicular basis vectors are linearly dependent".into(),
                ));
            }
        }
        Ok(())
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    #[serde(serialize_with = "serialize_quiver")]
    pub quiver: Quiver,
    pub lambda: u64,
    #[serde(serialize_with = "serialize_display")]
    pub scale_m: BigInt,
    #[serde(serialize_with = "serialize_display")]
    pub conjugator: RatMatrix,
    pub achieved_phidim: usize,
}

fn serialize_quiver<S: serde::Serializer>(q: &Quiver, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// `n x n` matrix with ones on the subdiagonal of the leading
/// `(n-1)`-block and `λ` in the bottom-right corner.
pub fn canonical_m_lambda(n: usize, lambda: u64) -> Result<IntMatrix, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("M_λ needs n >= 2, got {n}")));
    }
    Ok(IntMatrix::from_fn(n, n, |r, c| {
        if r == n - 1 && c == n - 1 {
            BigInt::from(lambda)
        } else if r < n - 1 && r == c + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

/// Deterministic basis of `w^⊥`.
///
/// With `p` the last nonzero coordinate of `w`, each index `i != p`
/// contributes `e_i` when `w_i = 0` and otherwise `e_i - (w_i / w_q) e_q`,
/// `q` being the next index after `i` with `w_q != 0`. For positive `w` this
/// is the chain `e_i - (w_i / w_{i+1}) e_{i+1}`.
pub fn complete_perp_basis(w: &[BigRational]) -> Result<Vec<Vec<BigRational>>, Error> {
    let n = w.len();
    let nonzero: Vec<usize> = (0..n).filter(|&i| !w[i].is_zero()).collect();
    let Some(&last) = nonzero.last() else {
        return Err(Error::Domain("cannot complement the zero vector".into()));
    };
    let mut basis = Vec::with_capacity(n - 1);
    for i in (0..n).filter(|&i| i != last) {
        let mut v = vec![BigRational::zero(); n];
        v[i] = BigRational::one();
        if !w[i].is_zero() {
            let q = nonzero
                .iter()
                .copied()
                .find(|&j| j > i)
                .expect("i precedes the last nonzero index");
            v[q] = -(&w[i] / &w[q]);
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Smallest `λ >= 2` making `Ã M_λ Ã⁻¹` entrywise nonnegative (or strictly
/// positive when `strict`).
///
/// Needs the last column of `Ã` and the last row of `Ã⁻¹` to be strictly
/// positive, so that the coefficient of `λ` is a positive matrix.
pub fn choose_lambda(a_tilde: &RatMatrix, strict: bool) -> Result<u64, Error> {
    let n = a_tilde.rows();
    if !a_tilde.is_square() || n < 2 {
        return Err(Error::Domain(
            "conjugator must be square of size >= 2".into(),
        ));
    }
    let inv = a_tilde.rat_inverse()?;
    let last_col = a_tilde.column(n - 1);
    let last_row = inv.row(n - 1).to_vec();
    if !last_col.iter().chain(&last_row).all(Signed::is_positive) {
        return Err(Error::Domain(
            "last column of the conjugator and last row of its inverse must be positive".into(),
        ));
    }
    let base = conjugate(a_tilde, &inv, 0)?;
    let mut lambda = BigInt::from(2);
    for (i, col_i) in last_col.iter().enumerate() {
        for (j, row_j) in last_row.iter().enumerate() {
            let coeff = col_i * row_j;
            let threshold = -base.get(i, j) / coeff;
            let needed = if strict {
                threshold.floor().to_integer() + 1
            } else {
                threshold.ceil().to_integer()
            };
            lambda = lambda.max(needed);
        }
    }
    lambda
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("λ = {lambda} is too large")))
}

fn conjugate(a: &RatMatrix, inv: &RatMatrix, lambda: u64) -> Result<RatMatrix, Error> {
    let m = canonical_m_lambda(a.rows(), lambda)?.to_rational();
    Ok(a.mat_mul(&m)?.mat_mul(inv)?)
}

/// Least common multiple `m` of the denominators, with `m · matrix`.
pub fn scale_to_integer(m: &RatMatrix) -> Result<(BigInt, IntMatrix), Error> {
    if m.entries().iter().any(Signed::is_negative) {
        return Err(Error::Domain("matrix has a negative entry".into()));
    }
    let scale = m
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let factor = BigRational::from_integer(scale.clone());
    let scaled = m
        .map(|x| x * &factor)
        .to_integer()
        .expect("lcm clears every denominator");
    Ok((scale, scaled))
}

/// Runs the whole construction and checks the φ-dimension of the result.
pub fn construct_maximal(input: &ConstructionInput) -> Result<ConstructionReport, Error> {
    input.validate()?;
    let n = input.n();
    let mut columns = match &input.perp_basis {
        Some(b) => b.clone(),
        None => complete_perp_basis(&input.w_n)?,
    };
    columns.push(input.v_n.clone());
    let a_tilde = RatMatrix::from_columns(n, &columns)?;
    let lambda = choose_lambda(&a_tilde, input.strict_positive)?;
    let inv = a_tilde.rat_inverse()?;
    let conj = conjugate(&a_tilde, &inv, lambda)?;
    let (scale_m, adjacency) = scale_to_integer(&conj)?;
    let quiver = Quiver::from_adjacency(&adjacency)
        .ok_or_else(|| Error::Domain("arrow multiplicities exceed u64".into()))?;
    let achieved_phidim = phi_dim(&TruncatedAlgebra::new(quiver.clone(), 2)?);
    if achieved_phidim != n {
        return Err(Error::Inconsistent(format!(
            "constructed quiver has φ-dimension {achieved_phidim}, expected {n}"
        )));
    }
    Ok(ConstructionReport {
        quiver,
        lambda,
        scale_m,
        conjugator: a_tilde,
        achieved_phidim,
    })
}

/// Every arrow multiplicity multiplied by `m`.
pub fn scale_preserves_maximal(q: &Quiver, m: u64) -> Result<Quiver, Error> {
    if m == 0 {
        return Err(Error::Domain("scale factor must be at least 1".into()));
    }
    Ok(q.scaled(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qs(xs: &[(i64, i64)]) -> Vec<BigRational> {
        xs.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn m_lambda_examples() {
        assert_eq!(
            canonical_m_lambda(2, 2).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, 0], &[0, 2]])
        );
        assert_eq!(
            canonical_m_lambda(3, 2).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 2]])
        );
        for n in 2..7 {
            let p = canonical_m_lambda(n, 3).unwrap().mat_pow(n as u64).unwrap();
            for r in 0..n {
                for c in 0..n {
                    let expected = if r == n - 1 && c == n - 1 {
                        BigInt::from(3).pow(n as u32)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(p.get(r, c), &expected);
                }
            }
        }
        assert!(canonical_m_lambda(1, 2).is_err());
    }

    fn assert_perp_ok(w: &[BigRational], basis: &[Vec<BigRational>]) {
        assert_eq!(basis.len(), w.len() - 1);
        for b in basis {
            assert!(dot(b, w).is_zero());
        }
        let m = RatMatrix::from_rows(basis.to_vec(), w.len()).unwrap();
        assert_eq!(m.rank(), w.len() - 1);
    }

    #[test]
    fn perp_basis_examples() {
        let w = qs(&[(1, 2), (1, 2)]);
        let b = complete_perp_basis(&w).unwrap();
        assert_eq!(b, vec![qs(&[(1, 1), (-1, 1)])]);
        let mut cols = b.clone();
        cols.push(qs(&[(1, 1), (1, 1)]));
        assert_eq!(RatMatrix::from_columns(2, &cols).unwrap().rank(), 2);

        let w = qs(&[(1, 1), (0, 1), (0, 1)]);
        let b = complete_perp_basis(&w).unwrap();
        assert_eq!(
            b,
            vec![qs(&[(0, 1), (1, 1), (0, 1)]), qs(&[(0, 1), (0, 1), (1, 1)])]
        );

        let w = qs(&[(1, 4); 4]);
        let b = complete_perp_basis(&w).unwrap();
        assert_eq!(
            b,
            vec![
                qs(&[(1, 1), (-1, 1), (0, 1), (0, 1)]),
                qs(&[(0, 1), (1, 1), (-1, 1), (0, 1)]),
                qs(&[(0, 1), (0, 1), (1, 1), (-1, 1)]),
            ]
        );
        assert_perp_ok(&w, &b);

        let w = qs(&[(0, 1), (2, 3), (0, 1), (5, 1), (0, 1)]);
        assert_perp_ok(&w, &complete_perp_basis(&w).unwrap());
        assert!(complete_perp_basis(&qs(&[(0, 1), (0, 1)])).is_err());
    }

    #[test]
    fn lambda_examples() {
        let a = RatMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]);
        assert_eq!(choose_lambda(&a, false).unwrap(), 2);
        let inv = a.rat_inverse().unwrap();
        assert_eq!(
            conjugate(&a, &inv, 2).unwrap(),
            RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]])
        );
        // inverse with a zero in the last row
        let a = RatMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(matches!(choose_lambda(&a, false), Err(Error::Domain(_))));
    }

    #[test]
    fn lambda_is_minimal() {
        let w = qs(&[(1, 6), (1, 3), (1, 2)]);
        let v = qs(&[(1, 1), (1, 1), (1, 1)]);
        let mut cols = complete_perp_basis(&w).unwrap();
        cols.push(v);
        let a = RatMatrix::from_columns(3, &cols).unwrap();
        let inv = a.rat_inverse().unwrap();
        for strict in [false, true] {
            let lambda = choose_lambda(&a, strict).unwrap();
            let ok = |l: u64| {
                conjugate(&a, &inv, l).unwrap().entries().iter().all(|x| {
                    if strict {
                        x.is_positive()
                    } else {
                        !x.is_negative()
                    }
                })
            };
            assert!(ok(lambda));
            if lambda > 2 {
                assert!(!ok(lambda - 1));
            }
        }
    }

    #[test]
    fn scale_examples() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[0, 3]]);
        let (s, i) = scale_to_integer(&m).unwrap();
        assert_eq!(s, BigInt::one());
        assert_eq!(i, IntMatrix::from_i64_rows(&[&[1, 2], &[0, 3]]));
        let half =
            RatMatrix::from_rows(vec![vec![q(1, 2), q(1, 2)], vec![q(1, 2), q(1, 2)]], 2).unwrap();
        let (s, i) = scale_to_integer(&half).unwrap();
        assert_eq!(s, BigInt::from(2));
        assert_eq!(i, IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]));
        let mixed = RatMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)]], 2).unwrap();
        assert_eq!(scale_to_integer(&mixed).unwrap().0, BigInt::from(6));
        let neg = RatMatrix::from_i64_rows(&[&[1, -1]]);
        assert!(scale_to_integer(&neg).is_err());
    }

    #[test]
    fn construct_two_and_three() {
        let r = construct_maximal(&ConstructionInput::uniform(2)).unwrap();
        assert_eq!(
            r.quiver.adjacency(),
            IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]])
        );
        assert_eq!(r.lambda, 2);
        assert_eq!(r.achieved_phidim, 2);
        let r = construct_maximal(&ConstructionInput::uniform(3)).unwrap();
        assert_eq!(r.quiver.vertex_count(), 3);
        assert_eq!(r.achieved_phidim, 3);
    }

    #[test]
    fn construct_rejects_bad_input() {
        let input = ConstructionInput::new(qs(&[(1, 1), (1, 1)]), qs(&[(1, 1), (0, 1)]));
        assert!(matches!(construct_maximal(&input), Err(Error::Domain(_))));
        let input = ConstructionInput::new(qs(&[(1, 1), (1, 1)]), qs(&[(1, 1), (1, 1)]));
        assert!(matches!(construct_maximal(&input), Err(Error::Domain(_))));
        let input = ConstructionInput::new(qs(&[(1, 1)]), qs(&[(1, 1)]));
        assert!(matches!(construct_maximal(&input), Err(Error::Domain(_))));
        let mut input = ConstructionInput::uniform(3);
        input.perp_basis = Some(vec![qs(&[(1, 1), (-1, 1), (0, 1)]); 2]);
        assert!(matches!(construct_maximal(&input), Err(Error::Domain(_))));
    }

    #[test]
    fn custom_perp_basis_is_used() {
        let mut input = ConstructionInput::uniform(3);
        input.perp_basis = Some(vec![
            qs(&[(1, 1), (0, 1), (-1, 1)]),
            qs(&[(0, 1), (1, 1), (-1, 1)]),
        ]);
        let r = construct_maximal(&input).unwrap();
        assert_eq!(r.achieved_phidim, 3);
        assert_eq!(r.conjugator.column(0), qs(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn scaling_examples() {
        let q1 = Quiver::from_arrows(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(scale_preserves_maximal(&q1, 1).unwrap(), q1);
        let q3 = scale_preserves_maximal(&q1, 3).unwrap();
        assert_eq!(
            q3.adjacency(),
            IntMatrix::from_i64_rows(&[&[3, 3], &[3, 3]])
        );
        assert_eq!(phi_dim(&TruncatedAlgebra::new(q3, 2).unwrap()), 2);
        assert!(scale_preserves_maximal(&q1, 0).is_err());
    }
}
