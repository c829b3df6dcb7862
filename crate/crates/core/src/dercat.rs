//! Hom dimensions between the bundles `E_λ` of Kapranov's exceptional
//! collection on `Gr(r, n)`, and the resulting Euler pairing matrix.
//!
//! `Hom(E_λ, E_μ) = ⊕_ν R_ν^{N_{λμ}^ν}` where `N` keeps the multiplicities
//! of `ρ_λ^∨ ⊗ ρ_μ` at weights with `ν_r >= 0`. Higher Ext groups vanish
//! inside the collection, so the Euler pairing equals the Hom dimension.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::matrix::ExactMatrix;
use crate::partitions::{complement, enumerate_box, BoxContext, Partition};
use crate::symfunc::{lr_expand_bounded, schur_dim};

/// Multiplicities of `GL_r` irreducibles, keyed by dominant weight.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightMultiplicity {
    entries: BTreeMap<Partition, BigInt>,
}

impl WeightMultiplicity {
    pub fn get(&self, weight: &Partition) -> BigInt {
        self.entries.get(weight).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl FromIterator<(Partition, BigInt)> for WeightMultiplicity {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut entries = BTreeMap::new();
        for (w, m) in iter {
            *entries.entry(w).or_insert_with(BigInt::default) += m;
        }
        entries.retain(|_, m: &mut BigInt| *m > BigInt::default());
        WeightMultiplicity { entries }
    }
}

/// Decomposes `ρ_λ^∨ ⊗ ρ_μ` for `GL_r`, with `r = λ.len()`.
///
/// Uses `ρ_λ^∨ ⊗ det^{λ_1} = ρ_{λ^c}`: expand `s_{λ^c} s_μ` in at most
/// `r` rows, then shift every weight down by `λ_1`.
pub fn dual_tensor_decompose(lambda: &Partition, mu: &Partition) -> WeightMultiplicity {
    let r = lambda.len();
    assert_eq!(r, mu.len(), "weights must have the same length");
    let shift = lambda.first();
    lr_expand_bounded(&complement(lambda), mu, Some(r))
        .into_map()
        .into_iter()
        .map(|(pi, c)| {
            let w = pi.padded(r).expect("expansion is bounded to r rows").shifted(-shift);
            (w, c)
        })
        .collect()
}

/// Keeps exactly the weights whose last entry is nonnegative.
pub fn truncate(weights: &WeightMultiplicity) -> WeightMultiplicity {
    WeightMultiplicity {
        entries: weights
            .entries
            .iter()
            .filter(|(w, _)| w.last() >= 0)
            .map(|(w, m)| (w.clone(), m.clone()))
            .collect(),
    }
}

/// `dim Hom(E_λ, E_μ) = Σ_ν N_{λμ}^ν dim R_ν`.
pub fn hom_dim(lambda: &Partition, mu: &Partition, ctx: BoxContext) -> BigInt {
    truncate(&dual_tensor_decompose(lambda, mu))
        .iter()
        .map(|(nu, m)| m * schur_dim(nu, ctx.n))
        .sum()
}

/// Euler pairing of the collection, rows = source `λ`, columns = target `μ`,
/// both in the canonical box order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerMatrix {
    pub ctx: BoxContext,
    pub order: Vec<Partition>,
    pub entries: ExactMatrix,
}

pub fn euler_matrix(ctx: BoxContext) -> EulerMatrix {
    let order = enumerate_box(ctx);
    let n = order.len();
    let flat: Vec<BigInt> = (0..n * n)
        .into_par_iter()
        .map(|idx| hom_dim(&order[idx / n], &order[idx % n], ctx))
        .collect();
    let entries = ExactMatrix::from_fn(n, n, |i, j| flat[i * n + j].clone());
    EulerMatrix { ctx, order, entries }
}
