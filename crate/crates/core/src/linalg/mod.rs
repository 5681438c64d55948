//! Exact dense linear algebra over prime fields.
//!
//! Everything above this layer (path algebras, representations, complexes)
//! reduces to row reduction of `Mat` values over GF(p). Matrices act on row
//! vectors from the right.

mod fp;
mod mat;
mod subspace;

use thiserror::Error;

pub use fp::{is_valid_modulus, reduce_i64, Fp, DEFAULT_PRIME};
pub use mat::{express_in_rows, solve, Mat, Rref};
pub use subspace::Subspace;

pub(crate) use fp::{add_mod, mul_mod, neg_mod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}
