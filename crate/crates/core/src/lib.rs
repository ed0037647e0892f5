//! Exact computations for flat pseudo-Riemannian homogeneous spaces: affine
//! isometries of `R^n_s`, the subspaces they generate, and certificates for
//! translational isotropy.

pub mod affine;
pub mod centralizer;
pub mod certify;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod form;
pub mod holonomy;
pub mod io;
pub mod linalg;
pub mod search;

pub use error::{Error, Result};
