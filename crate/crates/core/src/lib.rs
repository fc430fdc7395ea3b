//! Exact structure analysis for finitely generated matrix algebras and
//! semigroups over the rationals, finite fields and the rational quaternions.
//!
//! Matrices act on the left of column vectors; scalars act on the right.
//! Everything here is pure computation and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod module;
pub mod quaternion;
pub mod scalars;
pub mod theorems;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace, Vector};
pub use quaternion::Quaternion;
pub use scalars::{Domain, Poly, Scalar};
