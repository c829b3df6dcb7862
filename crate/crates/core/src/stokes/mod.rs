//! Stokes matrices of the quantum cohomology of `P^{n-1}` and `Gr(r, n)`.
//!
//! The Grassmannian matrix is built from the projective one by taking
//! `r x r` minors: `S_{L,K} = det(C(n + l_i - k_j - 1, l_i - k_j))`.
//! Rows are indexed by `L` (left-sector cycles) and columns by `K`
//! (right-sector cycles), both in the canonical box order, which makes
//! the matrix unit lower triangular.

pub mod canonical;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::matrix::{det_exact, ExactMatrix};
use crate::partitions::{enumerate_subsets, BoxContext, SubsetIndex};
use crate::symfunc::{binomial, h_spec};

pub use canonical::{
    canonical_coords_grassmannian, canonical_coords_projective, check_admissible, is_admissible,
    order_by_line, AdmissibleLine, Admissibility, CanonicalPoint, DEFAULT_TOLERANCE,
};

/// Which way the stored matrix is laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Row `L`, column `K`; unit lower triangular in the canonical order.
    LeftByRight,
    /// Transpose of `LeftByRight`: row `K`, column `L`; unit upper
    /// triangular. This is how the projective formula is usually printed.
    RightByLeft,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StokesMatrix {
    pub ctx: BoxContext,
    pub order: Vec<SubsetIndex>,
    pub entries: ExactMatrix,
    pub orientation: Orientation,
}

impl StokesMatrix {
    pub fn transposed(&self) -> StokesMatrix {
        StokesMatrix {
            ctx: self.ctx,
            order: self.order.clone(),
            entries: self.entries.transpose(),
            orientation: match self.orientation {
                Orientation::LeftByRight => Orientation::RightByLeft,
                Orientation::RightByLeft => Orientation::LeftByRight,
            },
        }
    }

    /// Entry `S_{L,K}` regardless of storage orientation.
    pub fn entry(&self, l: usize, k: usize) -> &BigInt {
        match self.orientation {
            Orientation::LeftByRight => &self.entries[(l, k)],
            Orientation::RightByLeft => &self.entries[(k, l)],
        }
    }
}

/// `S_ij = C(n - 1 + j - i, j - i)` for `P^{n-1}`, upper triangular.
pub fn projective_stokes(n: usize) -> StokesMatrix {
    let ctx = BoxContext::new(1, n).expect("projective Stokes matrix needs n >= 2");
    let entries = ExactMatrix::from_fn(n, n, |i, j| {
        if j < i {
            BigInt::default()
        } else {
            binomial((n - 1 + j - i) as u64, (j - i) as u64)
        }
    });
    StokesMatrix { ctx, order: enumerate_subsets(ctx), entries, orientation: Orientation::RightByLeft }
}

/// `det(h_{l_i - k_j}(1^n))_{i,j}`.
pub fn stokes_entry(l: &SubsetIndex, k: &SubsetIndex, n: usize) -> BigInt {
    let r = l.len();
    let minor = ExactMatrix::from_fn(r, r, |i, j| {
        h_spec(l.indices()[i] as i64 - k.indices()[j] as i64, n)
    });
    det_exact(&minor).expect("minor is square")
}

pub fn grassmann_stokes(ctx: BoxContext) -> StokesMatrix {
    let order = enumerate_subsets(ctx);
    let size = order.len();
    let flat: Vec<BigInt> = (0..size * size)
        .into_par_iter()
        .map(|idx| stokes_entry(&order[idx / size], &order[idx % size], ctx.n))
        .collect();
    let entries = ExactMatrix::from_fn(size, size, |i, j| flat[i * size + j].clone());
    StokesMatrix { ctx, order, entries, orientation: Orientation::LeftByRight }
}
