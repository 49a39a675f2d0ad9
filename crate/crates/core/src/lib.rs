//! Igusa-Todorov φ-dimension, global dimension and structural
//! classification of truncated path algebras `kQ/J^k`, computed by exact
//! integer linear algebra on the syzygy operator of the stable
//! Grothendieck group.
//!
//! ```
//! use phidim::{homology, Quiver, TruncatedAlgebra};
//!
//! let q: Quiver = "vertices: a b\narrow a a\narrow a b\narrow b b\n".parse().unwrap();
//! let a = TruncatedAlgebra::new(q, 2).unwrap();
//! assert_eq!(homology::phi_dim(&a), 1);
//! ```

pub mod cli;
pub mod constructor;
pub mod corpus;
pub mod exactmat;
pub mod families;
pub mod homology;
pub mod quiver;

pub use exactmat::{IntMatrix, MatrixError, RatMatrix};
pub use homology::TruncatedAlgebra;
pub use quiver::{Direction, PathLength, Quiver};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Quiver(#[from] quiver::QuiverError),
    #[error(transparent)]
    Parse(#[from] quiver::ParseError),
    #[error("{0}")]
    Domain(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
