//! Symmetric functions evaluated at `x = (1, ..., 1)` and Littlewood–Richardson
//! coefficients.
//!
//! Everything here is exact. Two independent tableau enumerations are used:
//! [`lr_expand`] grows the outer shape one horizontal strip per letter, while
//! [`skew_expand`] fills a fixed skew shape cell by cell in reading order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::ExactMatrix;
use crate::partitions::{contains, Partition};

pub use crate::matrix::det_exact;

/// `C(top, k)` for nonnegative arguments.
pub fn binomial(top: u64, k: u64) -> BigInt {
    if k > top {
        return BigInt::zero();
    }
    let k = k.min(top - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= top - k + i;
        acc /= i;
    }
    acc
}

/// `h_m(1^n) = C(n + m - 1, m)`, and zero for negative degree.
pub fn h_spec(m: i64, n: usize) -> BigInt {
    assert!(n >= 1, "h_spec needs at least one variable");
    if m < 0 {
        return BigInt::zero();
    }
    binomial(n as u64 + m as u64 - 1, m as u64)
}

/// `s_{λ/μ}(1^n)` by the Jacobi–Trudi determinant `det(h_{λ_i - μ_j - i + j})`.
///
/// The shorter argument is padded with zeros. Vanishes when `μ ⊄ λ`.
pub fn skew_schur_spec(lambda: &Partition, mu: &Partition, n: usize) -> BigInt {
    let r = lambda.len().max(mu.len());
    let jt = ExactMatrix::from_fn(r, r, |i, j| {
        h_spec(lambda.part(i) - mu.part(j) - i as i64 + j as i64, n)
    });
    det_exact(&jt).expect("Jacobi-Trudi matrix is square")
}

/// `dim R_ν = s_ν(1^n)` by the hook-content formula.
///
/// Returns zero when `ν` has more than `n` nonzero rows.
pub fn schur_dim(nu: &Partition, n: usize) -> BigInt {
    assert!(nu.is_nonnegative(), "schur_dim needs a nonnegative partition, got {nu}");
    let nu = nu.trimmed();
    if nu.len() > n {
        return BigInt::zero();
    }
    let rows: Vec<usize> = nu.parts().iter().map(|&p| p as usize).collect();
    let conj = conjugate(&rows);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &len) in rows.iter().enumerate() {
        for (j, &col) in conj[..len].iter().enumerate() {
            num *= n + j - i;
            den *= len - j + col - i - 1;
        }
    }
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "hook-content quotient for {nu} is not integral");
    q
}

fn conjugate(rows: &[usize]) -> Vec<usize> {
    let width = rows.first().copied().unwrap_or(0);
    (0..width).map(|j| rows.iter().take_while(|&&l| l > j).count()).collect()
}

/// A Schur-basis expansion `Σ c_λ s_λ` with positive integer coefficients.
///
/// Keys are stored without trailing zeros; lookups accept either form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LRExpansion {
    coefficients: BTreeMap<Partition, BigInt>,
}

impl LRExpansion {
    fn from_counts(counts: BTreeMap<Vec<usize>, u64>) -> Self {
        let coefficients = counts
            .into_iter()
            .filter(|(_, c)| *c > 0)
            .map(|(shape, c)| {
                let p = Partition::new(shape.into_iter().map(|x| x as i64).collect())
                    .expect("tableau shapes are partitions")
                    .trimmed();
                (p, BigInt::from(c))
            })
            .collect();
        LRExpansion { coefficients }
    }

    /// Coefficient of `s_λ`; zero when absent.
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.coefficients.get(&lambda.trimmed()).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coefficients.iter()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn into_map(self) -> BTreeMap<Partition, BigInt> {
        self.coefficients
    }
}

fn as_rows(p: &Partition) -> Vec<usize> {
    assert!(p.is_nonnegative(), "expected a nonnegative partition, got {p}");
    p.trimmed().parts().iter().map(|&x| x as usize).collect()
}

/// `s_μ s_ν = Σ_λ c_{μν}^λ s_λ`.
pub fn lr_expand(mu: &Partition, nu: &Partition) -> LRExpansion {
    lr_expand_bounded(mu, nu, None)
}

/// As [`lr_expand`], keeping only `λ` with at most `max_rows` rows (the
/// `GL_{max_rows}` tensor product rule).
pub fn lr_expand_bounded(mu: &Partition, nu: &Partition, max_rows: Option<usize>) -> LRExpansion {
    let start = as_rows(mu);
    let content = as_rows(nu);
    let max_rows = max_rows.unwrap_or(start.len() + content.len());
    let mut search = StripSearch { content: &content, max_rows, out: BTreeMap::new() };
    if start.len() <= max_rows {
        search.letter(0, start, Vec::new());
    }
    LRExpansion::from_counts(search.out)
}

/// Grows `μ` by one horizontal strip per letter of `ν`, enforcing the
/// lattice-word condition on the reverse row reading word.
struct StripSearch<'a> {
    content: &'a [usize],
    max_rows: usize,
    out: BTreeMap<Vec<usize>, u64>,
}

impl StripSearch<'_> {
    /// `prev_counts[i]` is how many copies of the previous letter sit in row `i`.
    fn letter(&mut self, k: usize, shape: Vec<usize>, prev_counts: Vec<usize>) {
        if k == self.content.len() {
            *self.out.entry(shape).or_default() += 1;
            return;
        }
        let rows = (shape.len() + 1).min(self.max_rows);
        let mut new_shape = shape.clone();
        new_shape.resize(rows, 0);
        let mut counts = vec![0; rows];
        self.strip(k, &shape, &prev_counts, 0, self.content[k], 0, 0, &mut new_shape, &mut counts);
    }

    #[allow(clippy::too_many_arguments)]
    fn strip(
        &mut self,
        k: usize,
        old: &[usize],
        prev_counts: &[usize],
        row: usize,
        remaining: usize,
        placed: usize,
        prev_before: usize,
        new_shape: &mut Vec<usize>,
        counts: &mut Vec<usize>,
    ) {
        if remaining == 0 || row == new_shape.len() {
            if remaining == 0 {
                let mut shape = new_shape.clone();
                while shape.last() == Some(&0) {
                    shape.pop();
                }
                let mut c = counts.clone();
                c.resize(shape.len(), 0);
                self.letter(k + 1, shape, c);
            }
            return;
        }
        let old_here = old.get(row).copied().unwrap_or(0);
        let strip_cap = if row == 0 { remaining } else { old[row - 1] - old_here };
        let lattice_cap = if k == 0 { remaining } else { prev_before.saturating_sub(placed) };
        let cap = strip_cap.min(lattice_cap).min(remaining);
        let prev_here = prev_counts.get(row).copied().unwrap_or(0);
        for a in (0..=cap).rev() {
            new_shape[row] = old_here + a;
            counts[row] = a;
            self.strip(
                k,
                old,
                prev_counts,
                row + 1,
                remaining - a,
                placed + a,
                prev_before + prev_here,
                new_shape,
                counts,
            );
        }
        new_shape[row] = old_here;
        counts[row] = 0;
    }
}

/// `s_{λ/μ} = Σ_ν c_{μν}^λ s_ν`, by enumerating LR fillings of `λ/μ`.
///
/// Empty when `μ ⊄ λ`.
pub fn skew_expand(lambda: &Partition, mu: &Partition) -> LRExpansion {
    if !contains(lambda, mu) {
        return LRExpansion::default();
    }
    let outer = as_rows(lambda);
    let mut inner = as_rows(mu);
    inner.resize(outer.len(), 0);
    let mut fill = SkewFill {
        outer: &outer,
        inner: &inner,
        tableau: outer.iter().map(|&l| vec![0u8; l]).collect(),
        counts: Vec::new(),
        out: BTreeMap::new(),
    };
    let start_col = outer.first().copied().unwrap_or(0);
    fill.visit(0, start_col);
    LRExpansion::from_counts(fill.out)
}

/// The LR coefficient `c_{μν}^λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.trimmed().size() != mu.size() + nu.size() {
        return BigInt::zero();
    }
    skew_expand(lambda, mu).get(nu)
}

/// Cell-by-cell filling of a skew shape in reverse row reading order
/// (rows top to bottom, each row right to left).
struct SkewFill<'a> {
    outer: &'a [usize],
    inner: &'a [usize],
    tableau: Vec<Vec<u8>>,
    counts: Vec<usize>,
    out: BTreeMap<Vec<usize>, u64>,
}

impl SkewFill<'_> {
    /// Fill cell `(row, col - 1)`; `col` counts down to `inner[row]`.
    fn visit(&mut self, row: usize, col: usize) {
        if row == self.outer.len() {
            *self.out.entry(self.counts.clone()).or_default() += 1;
            return;
        }
        if col == self.inner[row] {
            let next_col = self.outer.get(row + 1).copied().unwrap_or(0);
            self.visit(row + 1, next_col);
            return;
        }
        let j = col - 1;
        let right_cap = if j + 1 < self.outer[row] { self.tableau[row][j + 1] as usize } else { usize::MAX };
        let above_floor = if row > 0 && j >= self.inner[row - 1] { self.tableau[row - 1][j] as usize } else { 0 };
        let hi = right_cap.min(self.counts.len() + 1);
        for v in above_floor + 1..=hi {
            // Lattice condition: never more v's than (v-1)'s so far.
            if v > 1 && self.counts.get(v - 1).copied().unwrap_or(0) >= self.counts[v - 2] {
                continue;
            }
            if v > self.counts.len() {
                self.counts.push(0);
            }
            self.counts[v - 1] += 1;
            self.tableau[row][j] = v as u8;
            self.visit(row, j);
            self.counts[v - 1] -= 1;
            if self.counts.last() == Some(&0) {
                self.counts.pop();
            }
        }
        self.tableau[row][j] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Counts semistandard fillings of `λ/μ` with entries in `1..=n`.
    fn count_skew_ssyt(lambda: &[usize], mu: &[usize], n: usize) -> u64 {
        fn go(lam: &[usize], mu: &[usize], n: usize, t: &mut Vec<Vec<usize>>, i: usize, j: usize) -> u64 {
            if i == lam.len() {
                return 1;
            }
            if j == lam[i] {
                return go(lam, mu, n, t, i + 1, mu.get(i + 1).copied().unwrap_or(0));
            }
            let left = if j > mu[i] { t[i][j - 1] } else { 1 };
            let above = if i > 0 && j >= mu[i - 1] && j < lam[i - 1] { t[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in left.max(above)..=n {
                t[i][j] = v;
                total += go(lam, mu, n, t, i, j + 1);
            }
            total
        }
        let mut mu = mu.to_vec();
        mu.resize(lambda.len(), 0);
        let mut t: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
        go(lambda, &mu, n, &mut t, 0, mu.first().copied().unwrap_or(0))
    }

    #[test]
    fn h_spec_examples() {
        assert_eq!(h_spec(0, 5), big(1));
        assert_eq!(h_spec(2, 3), big(6));
        assert_eq!(h_spec(-1, 4), big(0));
        assert_eq!(h_spec(3, 1), big(1));
    }

    #[test]
    fn skew_schur_examples() {
        assert_eq!(skew_schur_spec(&p(&[2, 1]), &p(&[2, 1]), 4), big(1));
        assert_eq!(skew_schur_spec(&p(&[1, 0]), &p(&[0, 0]), 4), big(4));
        assert_eq!(skew_schur_spec(&p(&[2, 1]), &p(&[1, 0]), 4), big(16));
        assert_eq!(count_skew_ssyt(&[2, 1], &[1, 0], 4), 16);
        // Not contained: vanishes.
        assert_eq!(skew_schur_spec(&p(&[1, 0]), &p(&[2, 0]), 4), big(0));
    }

    #[test]
    fn skew_schur_matches_tableau_count() {
        let shapes: Vec<Vec<usize>> =
            vec![vec![3, 2, 1], vec![3, 3], vec![4, 1, 1], vec![2, 2, 2], vec![3, 1]];
        for lam in &shapes {
            for mu in [vec![0], vec![1], vec![1, 1], vec![2, 1], vec![2]] {
                let lp = p(&lam.iter().map(|&x| x as i64).collect::<Vec<_>>());
                let mp = p(&mu.iter().map(|&x| x as i64).collect::<Vec<_>>());
                if !contains(&lp, &mp) {
                    continue;
                }
                for n in 1..6 {
                    assert_eq!(
                        skew_schur_spec(&lp, &mp, n),
                        big(count_skew_ssyt(lam, &mu, n) as i64),
                        "{lp}/{mp} at n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_dim_examples() {
        assert_eq!(schur_dim(&p(&[0, 0, 0]), 3), big(1));
        assert_eq!(schur_dim(&p(&[1, 0, 0, 0]), 4), big(4));
        assert_eq!(schur_dim(&p(&[2, 2]), 4), big(20));
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), big(0));
        assert_eq!(schur_dim(&p(&[1, 1]), 4), big(6));
    }

    #[test]
    fn lr_examples() {
        let e = lr_expand(&p(&[1]), &p(&[1]));
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&p(&[2])), big(1));
        assert_eq!(e.get(&p(&[1, 1])), big(1));

        let e = lr_expand(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(e.get(&p(&[3, 2, 1])), big(2));
        assert_eq!(e.get(&p(&[3, 2, 1, 0])), big(2));

        let nu = p(&[3, 1, 1]);
        let e = lr_expand(&p(&[]), &nu);
        assert_eq!(e.into_map().into_iter().collect::<Vec<_>>(), vec![(nu.clone(), big(1))]);
        let e = lr_expand(&nu, &p(&[0, 0]));
        assert_eq!(e.get(&nu), big(1));
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn bounded_rows() {
        let e = lr_expand_bounded(&p(&[1]), &p(&[1]), Some(1));
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&p(&[2])), big(1));
        let e = lr_expand_bounded(&p(&[1, 1]), &p(&[1]), Some(1));
        assert!(e.is_empty());
    }

    #[test]
    fn skew_examples() {
        let e = skew_expand(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&p(&[])), big(1));

        let e = skew_expand(&p(&[2, 1]), &p(&[1, 0]));
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&p(&[2])), big(1));
        assert_eq!(e.get(&p(&[1, 1])), big(1));

        assert!(skew_expand(&p(&[1, 0]), &p(&[2, 0])).is_empty());
    }

    #[test]
    fn skew_expand_specializes_to_jacobi_trudi() {
        for (lam, mu) in [(&[3, 2, 1][..], &[1][..]), (&[4, 2, 2], &[2, 1]), (&[3, 3, 1], &[1, 1])] {
            let (lam, mu) = (p(lam), p(mu));
            let exp = skew_expand(&lam, &mu);
            for n in 1..7 {
                let sum: BigInt = exp.iter().map(|(nu, c)| c * schur_dim(nu, n)).sum();
                assert_eq!(sum, skew_schur_spec(&lam, &mu, n));
            }
        }
    }

    #[test]
    fn lr_coefficient_lookup() {
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), big(2));
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2])), big(0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), big(20));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }
}
