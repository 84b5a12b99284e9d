use num_bigint::BigInt;
use proptest::prelude::*;

use krawtchouk::krawtchouk::k_genfunc;
use krawtchouk::macwilliams::{
    complement, macwilliams, macwilliams_check, random_macwilliams_check, subspace_from,
    weight_character, BinaryVector,
};

fn subspace() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..=12).prop_flat_map(|n| (Just(n), prop::collection::vec(0u64..(1u64 << n), 0..=n)))
}

proptest! {
    #[test]
    fn dimensions_and_characters((n, vs) in subspace()) {
        let vectors: Vec<_> = vs.iter().map(|&b| BinaryVector::new(n, b).unwrap()).collect();
        let w = subspace_from(n, &vectors).unwrap();
        let perp = complement(&w);
        prop_assert_eq!(w.dim() + perp.dim(), n);
        prop_assert_eq!(complement(&perp), w.clone());
        let chi = weight_character(&w).unwrap();
        prop_assert_eq!(chi.counts[0], 1);
        prop_assert_eq!(chi.counts.iter().sum::<u64>(), 1u64 << w.dim());
        prop_assert!(macwilliams_check(&w).unwrap().passed());
    }

    #[test]
    fn transform_twice((n, vs) in subspace()) {
        let vectors: Vec<_> = vs.iter().map(|&b| BinaryVector::new(n, b).unwrap()).collect();
        let m = macwilliams(&subspace_from(n, &vectors).unwrap()).unwrap();
        let twice = k_genfunc(n).matrix.mul_vec(&m.k_w).unwrap();
        let expected: Vec<BigInt> = m.w.to_bigints().iter().map(|x| x << n).collect();
        prop_assert_eq!(twice, expected);
    }
}

#[test]
fn five_hundred_seeded_subspaces() {
    assert!(random_macwilliams_check(500, 12, 7).unwrap().passed());
}
