//! Exact Stokes matrices of the quantum cohomology of Grassmannians and the
//! Euler pairing of Kapranov's exceptional collection, with an entrywise
//! comparison of the two.
//!
//! All matrix content is computed with arbitrary-precision integers; floating
//! point appears only in [`stokes::canonical`].

pub mod dercat;
pub mod error;
pub mod io;
pub mod matrix;
pub mod mutations;
pub mod partitions;
pub mod stokes;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use partitions::{BoxContext, Partition, SubsetIndex};
