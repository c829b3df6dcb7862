//! Braid group action on unipotent Gram matrices by mutation of
//! exceptional bases.
//!
//! The generator `b_i` replaces the basis pair `(e_i, e_{i+1})` with
//! `(e_{i+1} - χ(e_i, e_{i+1}) e_i, e_i)`, so the Gram matrix transforms by
//! the congruence `G ↦ Mᵀ G M`, with `M` the identity except for the block
//! `[[-G_{i,i+1}, 1], [1, 0]]` in rows and columns `i, i+1`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// A unit upper triangular integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnipotentMatrix(ExactMatrix);

impl UnipotentMatrix {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if !m.is_unit_upper_triangular() {
            return Err(Error::NotUnipotent);
        }
        Ok(UnipotentMatrix(m))
    }

    pub fn identity(n: usize) -> Self {
        UnipotentMatrix(ExactMatrix::identity(n))
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.0
    }
}

impl fmt::Display for UnipotentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_index(g: &UnipotentMatrix, i: usize) -> Result<(usize, usize)> {
    let max = g.size().saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok((i - 1, i))
}

/// Replaces columns `p, q` by `(x·col_p + y·col_q, z·col_p + w·col_q)` and
/// then rows likewise: the congruence by a block-identity matrix.
fn block_congruence(g: &ExactMatrix, p: usize, q: usize, block: [[&BigInt; 2]; 2]) -> ExactMatrix {
    let [[x, z], [y, w]] = block;
    let n = g.rows();
    let mut m = g.clone();
    for r in 0..n {
        let (cp, cq) = (g[(r, p)].clone(), g[(r, q)].clone());
        m[(r, p)] = x * &cp + y * &cq;
        m[(r, q)] = z * &cp + w * &cq;
    }
    let half = m.clone();
    for c in 0..n {
        let (rp, rq) = (&half[(p, c)], &half[(q, c)]);
        m[(p, c)] = x * rp + y * rq;
        m[(q, c)] = z * rp + w * rq;
    }
    m
}

/// The braid generator `b_i` (1-based).
pub fn mutate(g: &UnipotentMatrix, i: usize) -> Result<UnipotentMatrix> {
    let (p, q) = check_index(g, i)?;
    let a = -g.0[(p, q)].clone();
    let (zero, one) = (BigInt::zero(), BigInt::from(1));
    let m = block_congruence(&g.0, p, q, [[&a, &one], [&one, &zero]]);
    debug_assert!(m.is_unit_upper_triangular());
    Ok(UnipotentMatrix(m))
}

/// The inverse generator `b_i^{-1}`.
pub fn mutate_inverse(g: &UnipotentMatrix, i: usize) -> Result<UnipotentMatrix> {
    let (p, q) = check_index(g, i)?;
    let b = -g.0[(p, q)].clone();
    let (zero, one) = (BigInt::zero(), BigInt::from(1));
    let m = block_congruence(&g.0, p, q, [[&zero, &one], [&one, &b]]);
    debug_assert!(m.is_unit_upper_triangular());
    Ok(UnipotentMatrix(m))
}

/// `D G D` for the diagonal sign matrix `D`.
pub fn flip_signs(g: &UnipotentMatrix, signs: &[i8]) -> Result<UnipotentMatrix> {
    if signs.len() != g.size() {
        return Err(Error::LengthMismatch { expected: g.size(), actual: signs.len() });
    }
    let m = &g.0;
    Ok(UnipotentMatrix(ExactMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        if signs[r] * signs[c] < 0 {
            -m[(r, c)].clone()
        } else {
            m[(r, c)].clone()
        }
    })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidGenerator {
    /// 1-based strand index.
    pub index: usize,
    pub inverse: bool,
}

impl BraidGenerator {
    pub fn apply(&self, g: &UnipotentMatrix) -> Result<UnipotentMatrix> {
        if self.inverse {
            mutate_inverse(g, self.index)
        } else {
            mutate(g, self.index)
        }
    }

    pub fn inverted(self) -> Self {
        BraidGenerator { inverse: !self.inverse, ..self }
    }
}

impl fmt::Display for BraidGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.index)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

impl FromStr for BraidGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.strip_prefix('b').ok_or_else(|| Error::parse(format!("bad braid token {s:?}")))?;
        let (digits, inverse) = match body.strip_suffix("^-1") {
            Some(d) => (d, true),
            None => (body, false),
        };
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::parse(format!("bad braid token {s:?}")));
        }
        let index = digits.parse().map_err(|_| Error::parse(format!("bad braid index in {s:?}")))?;
        if index == 0 {
            return Err(Error::parse("braid generators are numbered from 1"));
        }
        Ok(BraidGenerator { index, inverse })
    }
}

/// A word in the braid generators, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord(pub Vec<BraidGenerator>);

impl BraidWord {
    pub fn apply(&self, g: &UnipotentMatrix) -> Result<UnipotentMatrix> {
        self.0.iter().try_fold(g.clone(), |acc, b| b.apply(&acc))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|b| b.inverted()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            b.fmt(f)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Whitespace-separated tokens such as `"b1 b2 b1^-1"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(BraidWord)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignMode {
    /// Matrices must match exactly.
    #[default]
    Exact,
    /// Matrices may also differ by flipping the signs of basis vectors.
    AllowSignChanges,
}

/// A word (and, with sign changes, a sign vector `D`) with
/// `H = D · word(G) · D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitWitness {
    pub word: BraidWord,
    pub signs: Option<Vec<i8>>,
}

/// Finds `D` with `D A D = B`, if any.
pub fn sign_equivalence(a: &ExactMatrix, b: &ExactMatrix) -> Option<Vec<i8>> {
    let n = a.rows();
    if b.rows() != n || a.cols() != n || b.cols() != n {
        return None;
    }
    let mut signs: Vec<i8> = vec![0; n];
    for start in 0..n {
        if signs[start] != 0 {
            continue;
        }
        signs[start] = 1;
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for q in 0..n {
                if p == q {
                    if a[(p, p)] != b[(p, p)] {
                        return None;
                    }
                    continue;
                }
                // The edge p-q is carried by whichever of (p,q), (q,p) is set.
                let (x, y) = if a[(p, q)].is_zero() { (&a[(q, p)], &b[(q, p)]) } else { (&a[(p, q)], &b[(p, q)]) };
                if x.abs() != y.abs() || a[(p, q)].abs() != b[(p, q)].abs() || a[(q, p)].abs() != b[(q, p)].abs() {
                    return None;
                }
                if x.is_zero() {
                    continue;
                }
                let rel: i8 = if x == y { 1 } else { -1 };
                let want = signs[p] * rel;
                if signs[q] == 0 {
                    signs[q] = want;
                    stack.push(q);
                } else if signs[q] != want {
                    return None;
                }
            }
        }
    }
    Some(signs)
}

/// Breadth-first search for a braid word of length at most `depth` taking
/// `g` to `h`.
///
/// `None` means nothing was found within the bound; it does not show that
/// `g` and `h` lie in different orbits.
pub fn braid_orbit_search(
    g: &UnipotentMatrix,
    h: &UnipotentMatrix,
    depth: usize,
    mode: SignMode,
) -> Result<Option<OrbitWitness>> {
    if g.size() != h.size() {
        return Err(Error::LengthMismatch { expected: g.size(), actual: h.size() });
    }
    let matches = |m: &UnipotentMatrix| -> Option<Option<Vec<i8>>> {
        match mode {
            SignMode::Exact => (m == h).then_some(None),
            SignMode::AllowSignChanges => sign_equivalence(&m.0, &h.0).map(Some),
        }
    };
    let generators: Vec<BraidGenerator> = (1..g.size())
        .flat_map(|index| [false, true].map(|inverse| BraidGenerator { index, inverse }))
        .collect();

    let mut visited: HashSet<UnipotentMatrix> = HashSet::from([g.clone()]);
    let mut queue: VecDeque<(UnipotentMatrix, BraidWord)> = VecDeque::from([(g.clone(), BraidWord::default())]);
    while let Some((m, word)) = queue.pop_front() {
        if let Some(signs) = matches(&m) {
            return Ok(Some(OrbitWitness { word, signs }));
        }
        if word.len() == depth {
            continue;
        }
        for b in &generators {
            let next = b.apply(&m)?;
            if visited.insert(next.clone()) {
                let mut w = word.clone();
                w.0.push(*b);
                queue.push_back((next, w));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(rows: &[&[i64]]) -> UnipotentMatrix {
        UnipotentMatrix::new(ExactMatrix::from_i64_rows(rows).unwrap()).unwrap()
    }

    fn unipotent(n: usize, entries: &[i64]) -> UnipotentMatrix {
        let m = ExactMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => BigInt::from(1),
            std::cmp::Ordering::Less => BigInt::from(entries[i * n + j]),
            std::cmp::Ordering::Greater => BigInt::zero(),
        });
        UnipotentMatrix::new(m).unwrap()
    }

    /// `Mᵀ G M` with explicit matrix products.
    fn congruence_oracle(g: &UnipotentMatrix, i: usize) -> ExactMatrix {
        let n = g.size();
        let (p, q) = (i - 1, i);
        let a = g.as_matrix()[(p, q)].clone();
        let mut m = ExactMatrix::identity(n);
        m[(p, p)] = -a;
        m[(p, q)] = BigInt::from(1);
        m[(q, p)] = BigInt::from(1);
        m[(q, q)] = BigInt::zero();
        m.transpose().mul(g.as_matrix()).unwrap().mul(&m).unwrap()
    }

    #[test]
    fn identity_is_fixed() {
        for i in 1..4 {
            assert_eq!(mutate(&UnipotentMatrix::identity(4), i).unwrap(), UnipotentMatrix::identity(4));
            assert_eq!(mutate_inverse(&UnipotentMatrix::identity(4), i).unwrap(), UnipotentMatrix::identity(4));
        }
    }

    #[test]
    fn projective_line() {
        // The congruence negates the off-diagonal entry.
        let g = u(&[&[1, 2], &[0, 1]]);
        let m = mutate(&g, 1).unwrap();
        assert_eq!(m.as_matrix(), &congruence_oracle(&g, 1));
        assert_eq!(m, u(&[&[1, -2], &[0, 1]]));
        assert_eq!(flip_signs(&m, &[1, -1]).unwrap(), g);
        assert_eq!(mutate(&m, 1).unwrap(), g);

        let g = u(&[&[1, 3], &[0, 1]]);
        assert_eq!(mutate_inverse(&mutate(&g, 1).unwrap(), 1).unwrap(), g);
    }

    #[test]
    fn projective_plane_helix() {
        // Mutating (O, O(1), O(2)) on P^2 stays integral and unipotent.
        let g = u(&[&[1, 3, 6], &[0, 1, 3], &[0, 0, 1]]);
        let m = mutate(&g, 1).unwrap();
        assert_eq!(m.as_matrix(), &congruence_oracle(&g, 1));
        assert_eq!(m, u(&[&[1, -3, -15], &[0, 1, 6], &[0, 0, 1]]));
    }

    #[test]
    fn index_errors() {
        let g = UnipotentMatrix::identity(3);
        assert!(matches!(mutate(&g, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(mutate(&g, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(mutate_inverse(&UnipotentMatrix::identity(1), 1).is_err());
    }

    #[test]
    fn rejects_non_unipotent() {
        assert!(UnipotentMatrix::new(ExactMatrix::from_i64_rows(&[&[1, 0], &[1, 1]]).unwrap()).is_err());
        assert!(UnipotentMatrix::new(ExactMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]).unwrap()).is_err());
        assert!(UnipotentMatrix::new(ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn word_syntax() {
        let w: BraidWord = "b1 b2  b1^-1".parse().unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "b1 b2 b1^-1");
        assert_eq!(w.inverse().to_string(), "b1 b2^-1 b1^-1");
        assert!("".parse::<BraidWord>().unwrap().is_empty());
        for bad in ["c1", "b", "b0", "b1^2", "b-1", "b+1", "b1^-1^-1"] {
            assert!(bad.parse::<BraidWord>().is_err(), "{bad}");
        }
    }

    #[test]
    fn orbit_search_examples() {
        let g = unipotent(3, &[0, 2, -1, 0, 0, 4, 0, 0, 0]);
        let found = braid_orbit_search(&g, &g, 3, SignMode::Exact).unwrap().unwrap();
        assert!(found.word.is_empty());

        let h = mutate(&g, 1).unwrap();
        let found = braid_orbit_search(&g, &h, 1, SignMode::Exact).unwrap().unwrap();
        assert_eq!(found.word.to_string(), "b1");
        assert_eq!(found.word.apply(&g).unwrap(), h);

        // b1 only flips the sign of the 2x2 entry, so 2 and 3 are unrelated.
        let a = u(&[&[1, 2], &[0, 1]]);
        let b = u(&[&[1, 3], &[0, 1]]);
        assert!(braid_orbit_search(&a, &b, 3, SignMode::Exact).unwrap().is_none());
        assert!(braid_orbit_search(&a, &b, 3, SignMode::AllowSignChanges).unwrap().is_none());

        // Sign changes relate the P^1 matrix to its mutation at depth 0.
        let m = mutate(&a, 1).unwrap();
        let found = braid_orbit_search(&a, &m, 0, SignMode::AllowSignChanges).unwrap().unwrap();
        assert!(found.word.is_empty());
        let signs = found.signs.unwrap();
        assert_eq!(flip_signs(&a, &signs).unwrap(), m);

        assert!(braid_orbit_search(&a, &UnipotentMatrix::identity(3), 1, SignMode::Exact).is_err());
    }

    /// `tr(G^{-1} Gᵀ)`, invariant under every congruence `G ↦ Mᵀ G M`.
    fn coxeter_trace(g: &UnipotentMatrix) -> BigInt {
        let n = g.size();
        let m = g.as_matrix();
        // Back substitution for the unipotent inverse.
        let mut inv = ExactMatrix::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let s: BigInt = (i + 1..=j).map(|k| &m[(i, k)] * &inv[(k, j)]).sum();
                inv[(i, j)] = -s;
            }
        }
        let prod = inv.mul(&m.transpose()).unwrap();
        (0..n).map(|i| prod[(i, i)].clone()).sum()
    }

    #[test]
    fn unrelated_by_coxeter_invariant() {
        let g = unipotent(3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let h = unipotent(3, &[0, 3, 3, 0, 0, 3, 0, 0, 0]);
        assert_ne!(coxeter_trace(&g), coxeter_trace(&h));
        assert_eq!(coxeter_trace(&g), coxeter_trace(&mutate(&g, 2).unwrap()));
        assert!(braid_orbit_search(&g, &h, 3, SignMode::Exact).unwrap().is_none());
    }

    fn arb_unipotent() -> impl Strategy<Value = UnipotentMatrix> {
        (2usize..=6, proptest::collection::vec(-5i64..=5, 36)).prop_map(|(n, e)| unipotent(n, &e))
    }

    proptest! {
        #[test]
        fn generator_matches_congruence(g in arb_unipotent(), i in 1usize..6) {
            prop_assume!(i < g.size());
            let m = mutate(&g, i).unwrap();
            prop_assert_eq!(m.as_matrix(), &congruence_oracle(&g, i));
            prop_assert!(m.as_matrix().is_unit_upper_triangular());
        }

        #[test]
        fn inverse_round_trip(g in arb_unipotent(), i in 1usize..6) {
            prop_assume!(i < g.size());
            prop_assert_eq!(&mutate_inverse(&mutate(&g, i).unwrap(), i).unwrap(), &g);
            prop_assert_eq!(&mutate(&mutate_inverse(&g, i).unwrap(), i).unwrap(), &g);
        }

        #[test]
        fn word_parse_round_trip(tokens in proptest::collection::vec((1usize..20, any::<bool>()), 0..8)) {
            let w = BraidWord(tokens.into_iter().map(|(index, inverse)| BraidGenerator { index, inverse }).collect());
            prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
        }
    }
}
