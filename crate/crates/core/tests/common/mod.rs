//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's symmetric-function code.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2008;

/// Seed from `STOKES_GRASSMANN_SEED`, falling back to a fixed value.
pub fn seed() -> u64 {
    std::env::var("STOKES_GRASSMANN_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

/// All partitions of `k`, largest part first, parts in descending order.
pub fn partitions_of(k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn binomial_u128(top: u64, k: u64) -> u128 {
    if k > top {
        return 0;
    }
    let k = k.min(top - k);
    (0..k).fold(1u128, |acc, i| acc * (top - i) as u128 / (i + 1) as u128)
}

/// Content vectors of all semistandard tableaux of `shape` with entries in
/// `1..=m`, with multiplicity. Brute force, cell by cell.
pub fn ssyt_contents(shape: &[usize], m: usize) -> HashMap<Vec<u8>, i64> {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u8; m];
    let mut out = HashMap::new();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u8>>,
        content: &mut Vec<u8>,
        m: usize,
        out: &mut HashMap<Vec<u8>, i64>,
    ) {
        if idx == cells.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=m as u8 {
            grid[i][j] = v;
            content[v as usize - 1] += 1;
            fill(idx + 1, cells, grid, content, m, out);
            content[v as usize - 1] -= 1;
        }
        grid[i][j] = 0;
    }

    fill(0, &cells, &mut grid, &mut content, m, &mut out);
    out
}

fn is_weakly_decreasing(v: &[u8]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn trim(v: &[u8]) -> Vec<usize> {
    v.iter().map(|&x| x as usize).filter(|&x| x > 0).collect()
}

/// `s_μ s_ν` expanded in Schur functions by multiplying monomial expansions
/// and peeling off leading terms with Kostka numbers.
pub fn lr_by_monomials(mu: &[usize], nu: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let m = (mu.len() + nu.len()).max(1);
    let a = ssyt_contents(mu, m);
    let b = ssyt_contents(nu, m);

    let mut product: HashMap<Vec<u8>, i64> = HashMap::new();
    for (ea, ca) in &a {
        for (eb, cb) in &b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if is_weakly_decreasing(&e) {
                *product.entry(e).or_insert(0) += ca * cb;
            }
        }
    }

    let mut result = BTreeMap::new();
    loop {
        product.retain(|_, c| *c != 0);
        let Some(lead) = product.keys().max().cloned() else { break };
        let c = product[&lead];
        let shape = trim(&lead);
        for (e, k) in ssyt_contents(&shape, m) {
            if is_weakly_decreasing(&e) {
                *product.entry(e).or_insert(0) -= c * k;
            }
        }
        result.insert(shape, c);
    }
    result
}

/// Superpotential of `P^{n-1}` in the torus chart `x_1..x_{n-1}`.
pub fn superpotential(x: &[Complex64], q: Complex64) -> Complex64 {
    let prod: Complex64 = x.iter().product();
    x.iter().sum::<Complex64>() + q / prod
}

/// Newton iteration for `dW = 0`. Returns the refined point, or `None` if
/// it did not converge.
pub fn newton_critical_point(start: &[Complex64], q: Complex64) -> Option<Vec<Complex64>> {
    let d = start.len();
    let mut x = start.to_vec();
    for _ in 0..100 {
        let g = q / x.iter().product::<Complex64>();
        let grad: Vec<Complex64> = x.iter().map(|xi| Complex64::new(1.0, 0.0) - g / xi).collect();
        let mut hess: Vec<Vec<Complex64>> = (0..d)
            .map(|i| (0..d).map(|j| g / (x[i] * x[j]) * if i == j { 2.0 } else { 1.0 }).collect())
            .collect();
        let mut rhs: Vec<Complex64> = grad.iter().map(|v| -v).collect();
        let step = solve(&mut hess, &mut rhs)?;
        let scale = x.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let size = step.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (xi, s) in x.iter_mut().zip(&step) {
            *xi += s;
        }
        if size <= 1e-15 * scale {
            return Some(x);
        }
    }
    let g = q / x.iter().product::<Complex64>();
    let residual = x.iter().map(|xi| (Complex64::new(1.0, 0.0) - g / xi).norm()).fold(0.0, f64::max);
    (residual < 1e-12).then_some(x)
}

/// Gaussian elimination with partial pivoting.
fn solve(a: &mut [Vec<Complex64>], b: &mut [Complex64]) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[p][col].norm() == 0.0 {
            return None;
        }
        a.swap(col, p);
        b.swap(col, p);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            let pivot_row = a[col].clone();
            for (dst, src) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= f * src;
            }
            let t = b[col];
            b[row] -= f * t;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let s: Complex64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}
