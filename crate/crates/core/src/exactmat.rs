//! Dense exact matrices over arbitrary-precision integers and rationals.
//!
//! Everything homological in this crate reduces to ranks of integer
//! matrices, and adjacency powers grow exponentially, so arithmetic here is
//! never allowed to overflow or round. Ranks are computed by fraction-free
//! (Bareiss) elimination; an independent Smith-normal-form route is kept as
//! a cross-check.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },
    #[error("{axis} index {index} out of range (length {len})")]
    OutOfBounds {
        axis: &'static str,
        index: usize,
        len: usize,
    },
    #[error("rows have differing lengths")]
    Ragged,
}

/// Row-major dense matrix. Zero rows or zero columns are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::Ragged);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from a list of rows; `cols` fixes the width when
    /// `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, MatrixError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Removes the listed rows and columns, keeping survivors in order.
    pub fn submatrix_delete(
        &self,
        delete_rows: &BTreeSet<usize>,
        delete_cols: &BTreeSet<usize>,
    ) -> Result<Self, MatrixError> {
        if let Some(&r) = delete_rows.iter().find(|&&r| r >= self.rows) {
            return Err(MatrixError::OutOfBounds {
                axis: "row",
                index: r,
                len: self.rows,
            });
        }
        if let Some(&c) = delete_cols.iter().find(|&&c| c >= self.cols) {
            return Err(MatrixError::OutOfBounds {
                axis: "column",
                index: c,
                len: self.cols,
            });
        }
        let keep_r: Vec<usize> = (0..self.rows)
            .filter(|r| !delete_rows.contains(r))
            .collect();
        let keep_c: Vec<usize> = (0..self.cols)
            .filter(|c| !delete_cols.contains(c))
            .collect();
        Ok(self.select(&keep_r, &keep_c))
    }

    /// Submatrix on the given row and column indices (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    /// Columns placed side by side.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self, MatrixError> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(MatrixError::Ragged);
        }
        Ok(Matrix::from_fn(rows, columns.len(), |r, c| {
            columns[c][r].clone()
        }))
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Exact product `self * other`.
    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out: Self = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].clone() + a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self^e` by binary exponentiation; `self^0` is the identity.
    pub fn mat_pow(&self, mut e: u64) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Shape {
                op: "mat_pow",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mat_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::Shape {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

impl<T: Clone + Add<Output = T>> Matrix<T> {
    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::Shape {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(rows, cols).expect("ragged literal")
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        self.map(|x| x * factor)
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Rank over the rationals by fraction-free Gaussian elimination.
    ///
    /// Every intermediate entry is a minor of the input, so the division by
    /// the previous pivot is always exact.
    pub fn rank(&self) -> usize {
        bareiss(self.data.clone(), self.rows, self.cols).0
    }

    /// Determinant of a square matrix (1 for the empty matrix).
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Shape {
                op: "determinant",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let (rank, det) = bareiss(self.data.clone(), n, n);
        Ok(if rank < n { BigInt::zero() } else { det })
    }

    /// Diagonal of the Smith normal form (nonzero invariant factors, in
    /// divisibility order).
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        smith_diagonal(self)
    }

    /// Rank as the number of nonzero Smith invariants.
    pub fn rank_smith(&self) -> usize {
        self.smith_invariants().len()
    }
}

/// Returns `(rank, signed last pivot)`; the second value is the determinant
/// when the matrix is square and of full rank.
fn bareiss(mut a: Vec<BigInt>, rows: usize, cols: usize) -> (usize, BigInt) {
    let mut prev = BigInt::one();
    let mut sign_flip = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
            sign_flip = !sign_flip;
        }
        let pivot = a[r * cols + c].clone();
        for i in (r + 1)..rows {
            let factor = a[i * cols + c].clone();
            for j in (c + 1)..cols {
                let v = &pivot * &a[i * cols + j] - &factor * &a[r * cols + j];
                a[i * cols + j] = v / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    let det = if sign_flip { -prev } else { prev };
    (r, det)
}

/// Alternates row and column Hermite reduction until the matrix is
/// diagonal, then turns the diagonal into a divisibility chain with
/// `diag(a, b) ~ diag(gcd, lcm)`. Reducing above each pivot keeps the
/// entries from exploding the way plain Euclidean elimination does.
fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    loop {
        hermite_rows(&mut a);
        if is_diagonal(&a) {
            break;
        }
        a = transpose_rows(&a);
    }
    let mut diag: Vec<BigInt> = (0..a.len().min(a.first().map_or(0, Vec::len)))
        .map(|i| a[i][i].abs())
        .filter(|d| !d.is_zero())
        .collect();
    for i in 0..diag.len() {
        for j in (i + 1)..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn transpose_rows(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

fn is_diagonal(a: &[Vec<BigInt>]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// Row echelon form by unimodular row operations, with positive pivots and
/// the entries above each pivot reduced modulo it.
fn hermite_rows(a: &mut [Vec<BigInt>]) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in (r + 1)..rows {
            if a[i][c].is_zero() {
                continue;
            }
            if a[r][c].is_zero() {
                a.swap(r, i);
                continue;
            }
            // [s t; -y x] has determinant s x + t y = 1
            let e = a[r][c].extended_gcd(&a[i][c]);
            let x = &a[r][c] / &e.gcd;
            let y = &a[i][c] / &e.gcd;
            let (head, tail) = a.split_at_mut(i);
            for (u, v) in head[r][c..].iter_mut().zip(tail[0][c..].iter_mut()) {
                let top = &e.x * &*u + &e.y * &*v;
                let bottom = &x * &*v - &y * &*u;
                *u = top;
                *v = bottom;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let (above, rest) = a.split_at_mut(r);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &q * p;
            }
        }
        r += 1;
    }
}

impl RatMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_i64_rows(rows).to_rational()
    }

    /// Rank over Q: each row is scaled by the lcm of its denominators and
    /// the resulting integer matrix goes through the fraction-free route.
    pub fn rank(&self) -> usize {
        self.clear_denominators_by_row().rank()
    }

    fn clear_denominators_by_row(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            let lcm = self
                .row(r)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            for c in 0..self.cols {
                let x = self.get(r, c);
                out.set(r, c, x.numer() * (&lcm / x.denom()));
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn rat_inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Shape {
                op: "rat_inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return Err(MatrixError::Singular {
                    rank: self.rank(),
                    size: n,
                });
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let pivot = a.get(c, c).clone();
            for j in 0..n {
                a.data[c * n + j] = &a.data[c * n + j] / &pivot;
                inv.data[c * n + j] = &inv.data[c * n + j] / &pivot;
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    let av = &a.data[i * n + j] - &f * &a.data[c * n + j];
                    a.data[i * n + j] = av;
                    let iv = &inv.data[i * n + j] - &f * &inv.data[c * n + j];
                    inv.data[i * n + j] = iv;
                }
            }
        }
        Ok(inv)
    }

    /// `Some(integer matrix)` when every entry is an integer.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }
}
