//! Sum-over-paths oracle: every descending lattice path is a word over
//! {L, R} and its weight is a product of per-step phases.
//!
//! Two phase rules are provided. [`PhaseRule::Quantum`] gives the first q
//! letters α (L) and β (R) and every later letter 1; column q of its path-sum
//! matrix has generating function (α+βt)^q (1+t)^(n−q). [`PhaseRule::Ring`]
//! gives L the phase 1 everywhere and R the phase β in the first q steps and
//! α afterwards, which reproduces K(α, β) = (1+αt)^(n−q) (1+βt)^q for every
//! α, β. The two agree whenever α = 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{Matrix, Ring};
use crate::error::{Error, Result};
use crate::krawtchouk::{KrawtchoukMatrix, Method};

/// Largest height enumerated over numeric rings.
pub const NUMERIC_BOUND: usize = 16;
/// Largest height enumerated over polynomial rings.
pub const SYMBOLIC_BOUND: usize = 12;
/// Largest n for the brute-force elementary symmetric functions.
pub const TWISTON_BOUND: usize = 24;
/// Prefix length used to split work between threads by default.
pub const DEFAULT_PREFIX_BITS: u32 = 4;

/// Enumeration bound for the ring `R`.
pub fn enumeration_bound<R: Ring>() -> usize {
    if R::SYMBOLIC {
        SYMBOLIC_BOUND
    } else {
        NUMERIC_BOUND
    }
}

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value, bound });
    }
    Ok(())
}

/// A word over {L, R}. The first letter is the most significant bit, with
/// L = 0 and R = 1, so numeric order is lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathWord {
    len: u32,
    bits: u64,
}

impl PathWord {
    pub fn new(len: u32, bits: u64) -> Result<Self> {
        check_bound("word length", len as usize, 63)?;
        if bits >> len != 0 {
            return Err(Error::parse("path word bits", format!("{bits:#b}")));
        }
        Ok(PathWord { len, bits })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// True when letter i (0-based, read from the apex) is R.
    pub fn is_right(&self, i: usize) -> bool {
        (self.bits >> (self.len as usize - 1 - i)) & 1 == 1
    }

    /// Destination p on the base line.
    pub fn right_count(&self) -> usize {
        self.bits.count_ones() as usize
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0u32;
        for ch in s.trim().chars() {
            let bit = match ch {
                'L' | 'l' => 0,
                'R' | 'r' => 1,
                _ => return Err(Error::parse("path word", s)),
            };
            len += 1;
            check_bound("word length", len as usize, 63)?;
            bits = (bits << 1) | bit;
        }
        PathWord::new(len, bits)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.is_right(i) { "R" } else { "L" })?;
        }
        Ok(())
    }
}

/// How a step's phase depends on its letter and on whether it lies in the
/// first q steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseRule {
    /// First q steps: L ↦ α, R ↦ β. Later steps: 1.
    #[default]
    Quantum,
    /// L ↦ 1. R ↦ β in the first q steps and α afterwards.
    Ring,
}

impl PhaseRule {
    fn step<'a, R: Ring>(self, right: bool, quantum: bool, alpha: &'a R, beta: &'a R, one: &'a R) -> &'a R {
        match (self, right, quantum) {
            (PhaseRule::Quantum, false, true) => alpha,
            (PhaseRule::Quantum, true, true) => beta,
            (PhaseRule::Quantum, _, false) => one,
            (PhaseRule::Ring, false, _) => one,
            (PhaseRule::Ring, true, true) => beta,
            (PhaseRule::Ring, true, false) => alpha,
        }
    }
}

fn check_depth(q: usize, len: usize) -> Result<()> {
    if q > len {
        return Err(Error::IndexOutOfRange {
            what: "q",
            index: q,
            max: len,
        });
    }
    Ok(())
}

/// Product of λ(wᵢ) over the first q letters, λ(L) = α, λ(R) = β.
pub fn path_weight<R: Ring>(w: &PathWord, q: usize, alpha: &R, beta: &R) -> Result<R> {
    path_weight_with(PhaseRule::Quantum, w, q, alpha, beta)
}

pub fn path_weight_with<R: Ring>(
    rule: PhaseRule,
    w: &PathWord,
    q: usize,
    alpha: &R,
    beta: &R,
) -> Result<R> {
    check_depth(q, w.len())?;
    let one = R::one();
    Ok((0..w.len()).fold(R::one(), |acc, i| {
        acc.mul(rule.step(w.is_right(i), i < q, alpha, beta, &one))
    }))
}

/// Next integer with the same popcount (Gosper's hack); `None` past `limit`.
fn next_same_popcount(v: u64, limit: u64) -> Option<u64> {
    if v == 0 {
        return None;
    }
    let c = v & v.wrapping_neg();
    let r = v + c;
    let next = (((r ^ v) >> 2) / c) | r;
    (next < limit).then_some(next)
}

/// Words of length n with exactly p letters R, in lexicographic order.
pub fn words_to(n: usize, p: usize) -> Result<impl Iterator<Item = PathWord>> {
    check_bound("n", n, 63)?;
    if p > n {
        return Err(Error::IndexOutOfRange {
            what: "p",
            index: p,
            max: n,
        });
    }
    let limit = 1u64 << n;
    let first = (1u64 << p) - 1;
    let len = n as u32;
    Ok(std::iter::successors(Some(first), move |&v| next_same_popcount(v, limit))
        .map(move |bits| PathWord { len, bits }))
}

/// Σ over words ending at p of their weight with quantum depth q.
pub fn path_sum<R: Ring>(n: usize, p: usize, q: usize, alpha: &R, beta: &R) -> Result<R> {
    path_sum_with(PhaseRule::Quantum, n, p, q, alpha, beta)
}

pub fn path_sum_with<R: Ring>(
    rule: PhaseRule,
    n: usize,
    p: usize,
    q: usize,
    alpha: &R,
    beta: &R,
) -> Result<R> {
    check_bound("n", n, enumeration_bound::<R>())?;
    check_depth(q, n)?;
    words_to(n, p)?.try_fold(R::zero(), |acc, w| {
        Ok(acc.add(&path_weight_with(rule, &w, q, alpha, beta)?))
    })
}

/// One (n, p, q, α, β) configuration: the paths C(p) with quantum depth q.
#[derive(Debug, Clone, PartialEq)]
pub struct PathEnsemble<R> {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub alpha: R,
    pub beta: R,
}

impl<R: Ring> PathEnsemble<R> {
    pub fn new(n: usize, p: usize, q: usize, alpha: R, beta: R) -> Result<Self> {
        for (what, index) in [("p", p), ("q", q)] {
            if index > n {
                return Err(Error::IndexOutOfRange {
                    what,
                    index,
                    max: n,
                });
            }
        }
        Ok(PathEnsemble {
            n,
            p,
            q,
            alpha,
            beta,
        })
    }

    /// |C(p)|
    pub fn size(&self) -> Result<usize> {
        Ok(words_to(self.n, self.p)?.count())
    }

    pub fn sum(&self) -> Result<R> {
        path_sum(self.n, self.p, self.q, &self.alpha, &self.beta)
    }
}

/// Adds every word with the given prefix into a partial matrix.
///
/// For a word w the weight at depth q is (quantum prefix product up to q) ×
/// (classical suffix product from q), so one forward and one backward pass
/// give all n+1 depths.
fn accumulate_prefix<R: Ring>(
    rule: PhaseRule,
    n: usize,
    prefix_bits: u32,
    prefix: u64,
    alpha: &R,
    beta: &R,
) -> Vec<R> {
    let size = n + 1;
    let one = R::one();
    let mut acc = vec![R::zero(); size * size];
    let suffix_len = n as u32 - prefix_bits;
    let mut head = vec![R::one(); size];
    let mut tail = vec![R::one(); size];
    for suffix in 0..(1u64 << suffix_len) {
        let word = PathWord {
            len: n as u32,
            bits: (prefix << suffix_len) | suffix,
        };
        for i in 0..n {
            let step = rule.step(word.is_right(i), true, alpha, beta, &one);
            head[i + 1] = head[i].mul(step);
        }
        for i in (0..n).rev() {
            let step = rule.step(word.is_right(i), false, alpha, beta, &one);
            tail[i] = tail[i + 1].mul(step);
        }
        let p = word.right_count();
        for q in 0..size {
            let slot = &mut acc[p * size + q];
            *slot = slot.add(&head[q].mul(&tail[q]));
        }
    }
    acc
}

/// The full matrix of path sums, split over 2^prefix_bits prefix classes.
/// Partial sums are combined in prefix order, so the result does not depend
/// on how many threads ran.
pub fn oracle_matrix_partitioned<R: Ring>(
    rule: PhaseRule,
    n: usize,
    alpha: &R,
    beta: &R,
    prefix_bits: u32,
) -> Result<Matrix<R>> {
    check_bound("n", n, enumeration_bound::<R>())?;
    let k = prefix_bits.min(n as u32);
    let partials: Vec<Vec<R>> = (0..(1u64 << k))
        .into_par_iter()
        .map(|prefix| accumulate_prefix(rule, n, k, prefix, alpha, beta))
        .collect();
    let size = n + 1;
    let total = partials.into_iter().fold(vec![R::zero(); size * size], |mut acc, part| {
        for (a, b) in acc.iter_mut().zip(&part) {
            *a = a.add(b);
        }
        acc
    });
    Matrix::new(size, size, total)
}

/// Path sums under [`PhaseRule::Quantum`], entry (p, q).
pub fn oracle_matrix<R: Ring>(n: usize, alpha: &R, beta: &R) -> Result<Matrix<R>> {
    oracle_matrix_partitioned(PhaseRule::Quantum, n, alpha, beta, DEFAULT_PREFIX_BITS)
}

/// Path sums under [`PhaseRule::Ring`]; equal to K(α, β).
pub fn ring_oracle_matrix<R: Ring>(n: usize, alpha: &R, beta: &R) -> Result<Matrix<R>> {
    oracle_matrix_partitioned(PhaseRule::Ring, n, alpha, beta, DEFAULT_PREFIX_BITS)
}

/// K^(n) from path sums with α = 1, β = −1.
pub fn k_pathsum(n: usize) -> Result<KrawtchoukMatrix> {
    let m = oracle_matrix(n, &BigInt::one(), &BigInt::from(-1))?;
    Ok(KrawtchoukMatrix::new(n, Method::PathSumOracle, m))
}

/// |C(p)| for every p; the counts add up to 2ⁿ.
pub fn ensemble_sizes(n: usize) -> Result<Vec<u64>> {
    check_bound("n", n, 63)?;
    (0..=n).map(|p| Ok(words_to(n, p)?.count() as u64)).collect()
}

/// e_p(σ₁, …, σₙ) with σᵢ = −1 for the first q indices and +1 after, by
/// direct enumeration of the p-subsets.
pub fn twiston_energy(n: usize, q: usize, p: usize) -> Result<BigInt> {
    check_bound("n", n, TWISTON_BOUND)?;
    for (what, index) in [("p", p), ("q", q)] {
        if index > n {
            return Err(Error::IndexOutOfRange {
                what,
                index,
                max: n,
            });
        }
    }
    let negative = ((1u64 << q) - 1) << (n - q);
    let mut total: i64 = 0;
    for w in words_to(n, p)? {
        let flips = (w.bits & negative).count_ones();
        total += if flips % 2 == 0 { 1 } else { -1 };
    }
    Ok(BigInt::from(total))
}

/// The matrix of twiston energies, entry (p, q).
pub fn twiston_matrix(n: usize) -> Result<Matrix<BigInt>> {
    let mut rows = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let row = (0..=n).map(|q| twiston_energy(n, q, p)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, BivariatePoly, GaussianInteger};
    use crate::generalized::k_symbolic;
    use crate::krawtchouk::k_genfunc;

    #[test]
    fn word_weights() {
        let w: PathWord = "RLRLLL".parse().unwrap();
        assert_eq!(w.to_string(), "RLRLLL");
        assert_eq!(w.right_count(), 2);
        assert_eq!(path_weight(&w, 4, &int(1), &int(-1)).unwrap(), int(1));
        assert_eq!(path_weight(&w, 0, &int(5), &int(7)).unwrap(), int(1));
        let rr: PathWord = "RR".parse().unwrap();
        let (a, b) = (BivariatePoly::alpha(), BivariatePoly::beta());
        assert_eq!(path_weight(&rr, 2, &a, &b).unwrap(), b.mul(&b));
        assert!(path_weight(&rr, 3, &a, &b).is_err());
        let rl: PathWord = "RL".parse().unwrap();
        assert_eq!(path_weight(&rl, 1, &a, &b).unwrap(), b);
        assert_eq!(path_weight_with(PhaseRule::Ring, &rl, 0, &a, &b).unwrap(), a);
        assert_eq!(path_weight_with(PhaseRule::Ring, &rl, 2, &a, &b).unwrap(), b);
        assert!("RXL".parse::<PathWord>().is_err());
    }

    #[test]
    fn words_in_lexicographic_order() {
        let words: Vec<String> = words_to(4, 2).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(words, ["LLRR", "LRLR", "LRRL", "RLLR", "RLRL", "RRLL"]);
        assert_eq!(words_to(3, 0).unwrap().count(), 1);
        assert_eq!(words_to(3, 3).unwrap().count(), 1);
        assert_eq!(words_to(0, 0).unwrap().count(), 1);
    }

    #[test]
    fn single_sums() {
        assert_eq!(path_sum(4, 3, 2, &int(1), &int(-1)).unwrap(), int(0));
        assert_eq!(path_sum(3, 1, 2, &int(1), &int(-1)).unwrap(), int(-1));
        for p in 0..=7 {
            assert_eq!(
                path_sum(7, p, 0, &int(1), &int(-1)).unwrap(),
                crate::algebra::binomial(7, p)
            );
        }
        assert!(matches!(
            path_sum(17, 0, 0, &int(1), &int(-1)),
            Err(Error::BoundExceeded { .. })
        ));
        let ensemble = PathEnsemble::new(4, 2, 1, int(1), int(-1)).unwrap();
        assert_eq!(ensemble.size().unwrap(), 6);
        assert_eq!(ensemble.sum().unwrap(), int(0));
    }

    fn polys(rows: &[&[&str]]) -> Matrix<BivariatePoly> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|t| BivariatePoly::parse_value(t).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn oracle_matrices() {
        let (a, b) = (BivariatePoly::alpha(), BivariatePoly::beta());
        assert_eq!(
            oracle_matrix(2, &a, &b).unwrap(),
            polys(&[&["1", "α", "α^2"], &["2", "α + β", "2αβ"], &["1", "β", "β^2"]])
        );
        assert_eq!(ring_oracle_matrix(2, &a, &b).unwrap(), k_symbolic(2).matrix);
        assert_eq!(
            oracle_matrix(4, &BivariatePoly::one(), &b).unwrap(),
            ring_oracle_matrix(4, &BivariatePoly::one(), &b).unwrap()
        );
        assert_eq!(k_pathsum(3).unwrap().matrix, k_genfunc(3).matrix);
        let i = GaussianInteger::i();
        let k3i = oracle_matrix(3, &GaussianInteger::one(), &i).unwrap();
        assert_eq!(k3i.get(1, 1), &GaussianInteger::from_ints(2, 1));
        assert_eq!(k3i.get(3, 3), &GaussianInteger::from_ints(0, -1));
        assert!(oracle_matrix(13, &BivariatePoly::alpha(), &BivariatePoly::beta()).is_err());
    }

    #[test]
    fn partition_does_not_change_result() {
        for rule in [PhaseRule::Quantum, PhaseRule::Ring] {
            let a = oracle_matrix_partitioned(rule, 9, &int(2), &int(-3), 0).unwrap();
            for bits in [1, 3, 9, 20] {
                assert_eq!(oracle_matrix_partitioned(rule, 9, &int(2), &int(-3), bits).unwrap(), a);
            }
        }
    }

    #[test]
    fn twiston_energies() {
        assert_eq!(twiston_energy(5, 3, 0).unwrap(), int(1));
        assert_eq!(twiston_energy(3, 1, 1).unwrap(), int(1));
        assert_eq!(twiston_energy(4, 2, 2).unwrap(), int(-2));
        assert_eq!(twiston_matrix(6).unwrap(), k_genfunc(6).matrix);
        assert!(twiston_energy(3, 4, 0).is_err());
    }

    #[test]
    fn ensembles_cover_all_words() {
        let sizes = ensemble_sizes(10).unwrap();
        assert_eq!(sizes.iter().sum::<u64>(), 1 << 10);
    }
}
