use num_bigint::BigInt;
use proptest::prelude::*;

use krawtchouk::algebra::{binomial, BivariatePoly, Matrix, Poly, Ring};
use krawtchouk::generalized::{k_general, k_symbolic};
use krawtchouk::krawtchouk::k_genfunc;
use krawtchouk::pathsum::{
    ensemble_sizes, oracle_matrix, oracle_matrix_partitioned, ring_oracle_matrix, twiston_matrix,
    PhaseRule,
};

/// Column q of the literal-rule oracle: coefficients of (α+βt)^q (1+t)^(n−q),
/// expanded here with an independent polynomial product.
fn literal_closed_form(n: usize, alpha: &BigInt, beta: &BigInt) -> Matrix<BigInt> {
    let one = BigInt::from(1);
    let cols: Vec<Vec<BigInt>> = (0..=n)
        .map(|q| {
            Poly::linear(alpha.clone(), beta.clone())
                .pow(q as u32)
                .mul(&Poly::linear(one.clone(), one.clone()).pow((n - q) as u32))
                .padded(n + 1)
        })
        .collect();
    Matrix::from_fn(n + 1, n + 1, |p, q| cols[q][p].clone())
}

#[test]
fn ring_rule_matches_symbolic_matrix_up_to_twelve() {
    let (a, b) = (BivariatePoly::alpha(), BivariatePoly::beta());
    for n in 0..=12 {
        assert_eq!(ring_oracle_matrix(n, &a, &b).unwrap(), k_symbolic(n).matrix, "n={n}");
    }
}

#[test]
fn literal_rule_matches_symbolic_matrix_when_alpha_is_one() {
    let (one, b) = (BivariatePoly::one(), BivariatePoly::beta());
    for n in 0..=10 {
        assert_eq!(oracle_matrix(n, &one, &b).unwrap(), k_general(n, &one, &b).matrix, "n={n}");
    }
}

#[test]
fn twiston_energies_up_to_twelve() {
    for n in 0..=12 {
        assert_eq!(twiston_matrix(n).unwrap(), k_genfunc(n).matrix, "n={n}");
    }
}

#[test]
fn every_word_lands_somewhere() {
    for n in 0..=16 {
        let sizes = ensemble_sizes(n).unwrap();
        assert_eq!(sizes.iter().sum::<u64>(), 1u64 << n);
        for (p, s) in sizes.iter().enumerate() {
            assert_eq!(BigInt::from(*s), binomial(n, p));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_rule_matches_numeric_matrix(n in 0usize..=16, a in -3i64..=3, b in -3i64..=3) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(ring_oracle_matrix(n, &a, &b).unwrap(), k_general(n, &a, &b).matrix);
    }

    #[test]
    fn literal_rule_closed_form(n in 0usize..=12, a in -3i64..=3, b in -3i64..=3) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(oracle_matrix(n, &a, &b).unwrap(), literal_closed_form(n, &a, &b));
    }

    #[test]
    fn partition_does_not_matter(n in 0usize..=10, bits in 0u32..12, a in -3i64..=3, b in -3i64..=3) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        for rule in [PhaseRule::Quantum, PhaseRule::Ring] {
            let single = oracle_matrix_partitioned(rule, n, &a, &b, 0).unwrap();
            prop_assert_eq!(oracle_matrix_partitioned(rule, n, &a, &b, bits).unwrap(), single);
        }
    }
}
