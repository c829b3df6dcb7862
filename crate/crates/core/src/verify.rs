//! Entrywise comparison of the Stokes matrix with the Euler pairing matrix.
//!
//! For every pair `(λ, μ)` in the box three numbers must agree:
//!
//! * the Stokes minor `S_{L,K}` with `K` from `λ` and `L` from `μ`,
//! * the representation sum `Σ_ν N_{λμ}^ν dim R_ν`,
//! * the skew Schur specialization `s_{μ/λ}(1^n)`.
//!
//! The Stokes matrix is stored as rows `L`, columns `K`, and the Euler matrix
//! as rows `λ` (source), columns `μ` (target), so the full-matrix identity is
//! `Euler = Stokesᵀ`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dercat::euler_matrix;
use crate::partitions::{complement, partition_to_subset, BoxContext, Partition};
use crate::stokes::grassmann_stokes;
use crate::symfunc::{lr_coefficient, lr_expand_bounded, skew_schur_spec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub stokes: BigInt,
    pub euler: BigInt,
    pub skew: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub ctx: BoxContext,
    pub matrix_size: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Full-matrix check `Euler == Stokesᵀ`, including the index legends.
    pub transpose_identity: bool,
    pub elapsed: Duration,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// JSON summary. `elapsed` is left out so output stays deterministic.
    pub fn to_json_value(&self) -> Value {
        let mismatches: Vec<Value> = self
            .mismatches
            .iter()
            .map(|m| {
                json!({
                    "lambda": m.lambda.parts(),
                    "mu": m.mu.parts(),
                    "stokes": m.stokes.to_string(),
                    "euler": m.euler.to_string(),
                    "skew": m.skew.to_string(),
                })
            })
            .collect();
        json!({
            "r": self.ctx.r,
            "n": self.ctx.n,
            "matrix_size": self.matrix_size,
            "pairs_checked": self.pairs_checked,
            "transpose_identity": self.transpose_identity,
            "mismatches": mismatches,
            "verdict": if self.passed() { "pass" } else { "fail" },
        })
    }
}

/// Runs the three-way check over every pair in the box of `ctx`.
pub fn verify(ctx: BoxContext) -> VerificationReport {
    let start = Instant::now();
    let (stokes, euler) = rayon::join(|| grassmann_stokes(ctx), || euler_matrix(ctx));
    let size = euler.order.len();

    let legends_agree = euler.order.len() == stokes.order.len()
        && euler
            .order
            .iter()
            .zip(&stokes.order)
            .all(|(lam, k)| partition_to_subset(lam, ctx).as_ref() == Ok(k));

    let mismatches: Vec<Mismatch> = (0..size * size)
        .into_par_iter()
        .filter_map(|idx| {
            let (i, j) = (idx / size, idx % size);
            let (lambda, mu) = (&euler.order[i], &euler.order[j]);
            // K indexes the column (from λ), L the row (from μ).
            let s = &stokes.entries[(j, i)];
            let e = &euler.entries[(i, j)];
            let skew = skew_schur_spec(mu, lambda, ctx.n);
            (s != e || e != &skew).then(|| Mismatch {
                lambda: lambda.clone(),
                mu: mu.clone(),
                stokes: s.clone(),
                euler: e.clone(),
                skew,
            })
        })
        .collect();

    let transpose_identity = legends_agree && euler.entries == stokes.entries.transpose();
    let pairs_checked = size * size;
    let verdict = if mismatches.is_empty() && transpose_identity && pairs_checked == size * size {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    VerificationReport {
        ctx,
        matrix_size: size,
        pairs_checked,
        mismatches,
        transpose_identity,
        elapsed: start.elapsed(),
        verdict,
    }
}

/// [`verify`] for every `1 <= r < n <= max_n`, ordered by `n` then `r`.
pub fn verify_all(max_n: usize) -> Vec<VerificationReport> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |r| BoxContext::new(r, n).expect("1 <= r < n")))
        .map(verify)
        .collect()
}

/// A checked instance of `c_{λ μ^c}^ν = c_{μ ν̃}^λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementSample {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Draws random triples with `μ_1 <= ν_r` (as `ν = ν̃ + μ_1`) and evaluates
/// both sides of the complement identity. With probability 3/4 `λ` is drawn
/// from the support of `s_μ s_ν̃` so that most samples are nonzero.
pub fn sample_complement_identity<R: Rng>(rng: &mut R, samples: usize, max_rows: usize, max_part: i64) -> Vec<ComplementSample> {
    let random_partition = |rng: &mut R, r: usize| -> Partition {
        let mut parts: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=max_part)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted nonnegative parts")
    };
    (0..samples)
        .map(|_| {
            let r = rng.gen_range(1..=max_rows);
            let mu = random_partition(rng, r);
            let nu_tilde = random_partition(rng, r);
            let support: Vec<Partition> = lr_expand_bounded(&mu, &nu_tilde, Some(r))
                .iter()
                .map(|(p, _)| p.padded(r).expect("bounded to r rows"))
                .collect();
            let lambda = if !support.is_empty() && rng.gen_bool(0.75) {
                support[rng.gen_range(0..support.len())].clone()
            } else {
                random_partition(rng, r)
            };
            let nu = nu_tilde.shifted(mu.first());
            let lhs = lr_coefficient(&nu, &lambda, &complement(&mu));
            let rhs = lr_coefficient(&lambda, &mu, &nu_tilde);
            ComplementSample { lambda, mu, nu, lhs, rhs }
        })
        .collect()
}

/// [`sample_complement_identity`] driven by a seeded [`StdRng`].
pub fn sample_complement_identity_seeded(seed: u64, samples: usize, max_rows: usize, max_part: i64) -> Vec<ComplementSample> {
    sample_complement_identity(&mut StdRng::seed_from_u64(seed), samples, max_rows, max_part)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_boxes_pass() {
        let report = verify(BoxContext::new(2, 4).unwrap());
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 36);
        assert!(report.transpose_identity);

        let report = verify(BoxContext::new(1, 6).unwrap());
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 36);
    }

    #[test]
    fn report_json_is_deterministic() {
        let a = verify(BoxContext::new(2, 5).unwrap()).to_json_value().to_string();
        let b = verify(BoxContext::new(2, 5).unwrap()).to_json_value().to_string();
        assert_eq!(a, b);
        assert!(a.contains(r#""verdict":"pass""#));
    }

    #[test]
    fn complement_identity_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let samples = sample_complement_identity(&mut rng, 40, 3, 3);
        assert!(samples.iter().all(|s| s.lhs == s.rhs), "{samples:?}");
        assert!(samples.iter().any(|s| s.lhs > BigInt::from(0)));
    }
}
