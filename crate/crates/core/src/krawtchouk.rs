//! Krawtchouk matrices and their companions: the Kac matrix M, the
//! eigenvalue matrix Λ and the binomial weights Γ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{binomial, Matrix, Poly, Ring};
use crate::error::{Error, Result};
use crate::report::Check;

/// How a Krawtchouk matrix was produced. Used to label cross-method tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    GenFunc,
    BinomialSum,
    SymTensorPower,
    PyramidRecurrence,
    PathSumOracle,
    SkewFactorization,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::GenFunc => "generating function",
            Method::BinomialSum => "binomial sum",
            Method::SymTensorPower => "symmetric tensor power",
            Method::PyramidRecurrence => "pyramid recurrence",
            Method::PathSumOracle => "path-sum oracle",
            Method::SkewFactorization => "B·D·B⁻¹",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KrawtchoukMatrix {
    pub order: usize,
    pub method: Method,
    pub matrix: Matrix<BigInt>,
}

impl KrawtchoukMatrix {
    pub fn new(order: usize, method: Method, matrix: Matrix<BigInt>) -> Self {
        KrawtchoukMatrix {
            order,
            method,
            matrix,
        }
    }

    /// Entry-wise comparison that ignores the construction tag.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

/// Column q holds the coefficients of (1+t)^(n−q) (1−t)^q.
pub fn k_genfunc(n: usize) -> KrawtchoukMatrix {
    let plus = Poly::linear(BigInt::one(), BigInt::one());
    let minus = Poly::linear(BigInt::one(), BigInt::from(-1));
    let columns: Vec<Vec<BigInt>> = (0..=n)
        .map(|q| {
            plus.pow((n - q) as u32)
                .mul(&minus.pow(q as u32))
                .padded(n + 1)
        })
        .collect();
    let m = Matrix::from_fn(n + 1, n + 1, |p, q| columns[q][p].clone());
    KrawtchoukMatrix::new(n, Method::GenFunc, m)
}

fn binsum_entry(n: usize, p: usize, q: usize) -> BigInt {
    (0..=p.min(q)).fold(BigInt::zero(), |acc, k| {
        let term = binomial(q, k) * binomial(n - q, p - k);
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// K_pq = Σ_k (−1)^k C(q,k) C(n−q, p−k).
pub fn k_binsum(n: usize) -> KrawtchoukMatrix {
    let m = Matrix::from_fn(n + 1, n + 1, |p, q| binsum_entry(n, p, q));
    KrawtchoukMatrix::new(n, Method::BinomialSum, m)
}

/// A single entry of K^(n) without building the matrix.
pub fn k_entry(n: usize, p: usize, q: usize) -> Result<BigInt> {
    for (what, index) in [("p", p), ("q", q)] {
        if index > n {
            return Err(Error::IndexOutOfRange {
                what,
                index,
                max: n,
            });
        }
    }
    Ok(binsum_entry(n, p, q))
}

/// Tridiagonal, zero diagonal, superdiagonal 1..n, subdiagonal n..1.
pub fn kac_matrix(n: usize) -> Matrix<BigInt> {
    Matrix::from_fn(n + 1, n + 1, |i, j| {
        if j == i + 1 {
            BigInt::from(j)
        } else if i == j + 1 {
            BigInt::from(n - j)
        } else {
            BigInt::zero()
        }
    })
}

/// diag(n, n−2, …, −n)
pub fn lambda_matrix(n: usize) -> Matrix<BigInt> {
    let values: Vec<BigInt> = (0..=n)
        .map(|i| BigInt::from(n as i64 - 2 * i as i64))
        .collect();
    Matrix::diag(&values)
}

/// diag(C(n,0), …, C(n,n))
pub fn gamma_matrix(n: usize) -> Matrix<BigInt> {
    let values: Vec<BigInt> = (0..=n).map(|i| binomial(n, i)).collect();
    Matrix::diag(&values)
}

/// diag(1/C(n,0), …, 1/C(n,n))
pub fn gamma_inverse(n: usize) -> Matrix<BigRational> {
    let values: Vec<BigRational> = (0..=n)
        .map(|i| BigRational::new(BigInt::one(), binomial(n, i)))
        .collect();
    Matrix::diag(&values)
}

/// S = K·Γ, i.e. column q of K scaled by C(n,q).
pub fn k_symmetric(n: usize) -> Matrix<BigInt> {
    k_genfunc(n)
        .matrix
        .mul(&gamma_matrix(n))
        .expect("square factors of equal order")
}

fn two_pow(n: usize) -> BigInt {
    BigInt::one() << n
}

/// M·K = K·Λ
pub fn master_check(n: usize) -> Check {
    let k = k_genfunc(n).matrix;
    let lhs = kac_matrix(n).mul(&k).expect("square");
    let rhs = k.mul(&lambda_matrix(n)).expect("square");
    Check::matrices("M·K = K·Λ", n, &lhs, &rhs)
}

/// K² = 2ⁿ·I
pub fn involution_check(n: usize) -> Check {
    let k = k_genfunc(n).matrix;
    let lhs = k.mul(&k).expect("square");
    let rhs = Matrix::identity(n + 1).scale(&two_pow(n));
    Check::matrices("K² = 2ⁿI", n, &lhs, &rhs)
}

/// Kᵀ = Γ⁻¹KΓ, KᵀΓ⁻¹K = 2ⁿΓ⁻¹ and KΓKᵀ = 2ⁿΓ over the rationals.
pub fn ortho_check(n: usize) -> Check {
    let k = k_genfunc(n).matrix.map(|v| BigRational::from_integer(v.clone()));
    let kt = k.transpose();
    let g = gamma_matrix(n).map(|v| BigRational::from_integer(v.clone()));
    let gi = gamma_inverse(n);
    let scale = BigRational::from_integer(two_pow(n));
    let prod = |a: &Matrix<BigRational>, b: &Matrix<BigRational>| a.mul(b).expect("square");
    Check::all(
        "orthogonality",
        [
            Check::matrices("Kᵀ = Γ⁻¹KΓ", n, &kt, &prod(&prod(&gi, &k), &g)),
            Check::matrices(
                "KᵀΓ⁻¹K = 2ⁿΓ⁻¹",
                n,
                &prod(&prod(&kt, &gi), &k),
                &gi.scale(&scale),
            ),
            Check::matrices("KΓKᵀ = 2ⁿΓ", n, &prod(&prod(&k, &g), &kt), &g.scale(&scale)),
        ],
    )
}

fn weighted_sum(a: &[BigRational], b: &[BigRational], w: impl Fn(usize) -> BigRational) -> BigRational {
    a.iter()
        .zip(b)
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, (x, y))| acc + w(i) * x * y)
}

fn check_len(n: usize, v: &[BigRational]) -> Result<()> {
    if v.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            found: v.len(),
        });
    }
    Ok(())
}

/// ⟨a, b⟩ = Σ aᵢbᵢ / C(n,i), the inner product on vectors.
pub fn vector_inner(n: usize, a: &[BigRational], b: &[BigRational]) -> Result<BigRational> {
    check_len(n, a)?;
    check_len(n, b)?;
    Ok(weighted_sum(a, b, |i| {
        BigRational::new(BigInt::one(), binomial(n, i))
    }))
}

/// ⟨α, β⟩ = Σ C(n,i) αᵢβᵢ, the inner product on covectors.
pub fn covector_inner(n: usize, a: &[BigRational], b: &[BigRational]) -> Result<BigRational> {
    check_len(n, a)?;
    check_len(n, b)?;
    Ok(weighted_sum(a, b, |i| BigRational::from_integer(binomial(n, i))))
}

/// row·K^(n) over any ring.
pub fn covector_transform<R: Ring>(n: usize, row: &[R]) -> Result<Vec<R>> {
    k_genfunc(n).matrix.map(R::from_integer).vec_mul(row)
}

/// K^(n)·column over any ring.
pub fn vector_transform<R: Ring>(n: usize, column: &[R]) -> Result<Vec<R>> {
    k_genfunc(n).matrix.map(R::from_integer).mul_vec(column)
}

/// [2ⁿ⁻ⁱ]·K = [3ⁿ⁻ⁱ], and back again up to 2ⁿ: [3ⁿ⁻ⁱ]·K = 2ⁿ·[2ⁿ⁻ⁱ].
pub fn exponential_covector_check(n: usize) -> Check {
    let powers = |base: u32| -> Vec<BigInt> { (0..=n).map(|i| BigInt::from(base).pow((n - i) as u32)).collect() };
    let (twos, threes) = (powers(2), powers(3));
    let forward = covector_transform(n, &twos).expect("length n+1");
    let back = covector_transform(n, &threes).expect("length n+1");
    let rescaled: Vec<BigInt> = twos.iter().map(|v| v * two_pow(n)).collect();
    Check::all(
        "exponential covectors",
        [
            Check::values("[2ⁿ⁻ⁱ]·K = [3ⁿ⁻ⁱ]", n, "row", &format!("{forward:?}"), &format!("{threes:?}")),
            Check::values("[3ⁿ⁻ⁱ]·K = 2ⁿ·[2ⁿ⁻ⁱ]", n, "row", &format!("{back:?}"), &format!("{rescaled:?}")),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rational};

    fn ints(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows).unwrap()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rational(x, 1)).collect()
    }

    #[test]
    fn genfunc_small_orders() {
        assert_eq!(k_genfunc(0).matrix, ints(&[&[1]]));
        assert_eq!(
            k_genfunc(2).matrix,
            ints(&[&[1, 1, 1], &[2, 0, -2], &[1, -1, 1]])
        );
        assert_eq!(k_genfunc(5).matrix.row(1), [5, 3, 1, -1, -3, -5].map(int));
        assert_eq!(k_genfunc(4).method, Method::GenFunc);
    }

    #[test]
    fn binsum_entries() {
        assert_eq!(k_binsum(3).matrix.get(1, 2), &int(-1));
        assert_eq!(k_binsum(7).matrix.get(3, 2), &int(-5));
        for p in 0..=9 {
            assert_eq!(k_binsum(9).matrix.get(p, 0), &binomial(9, p));
        }
        assert!(k_binsum(11).same_entries(&k_genfunc(11)));
    }

    #[test]
    fn single_entries() {
        assert_eq!(k_entry(4, 2, 2).unwrap(), int(-2));
        assert_eq!(k_entry(6, 3, 3).unwrap(), int(0));
        assert_eq!(k_entry(9, 0, 7).unwrap(), int(1));
        assert!(matches!(
            k_entry(3, 4, 0),
            Err(Error::IndexOutOfRange { what: "p", .. })
        ));
        assert!(k_entry(3, 0, 9).is_err());
    }

    #[test]
    fn kac_and_lambda() {
        assert_eq!(
            kac_matrix(3),
            ints(&[&[0, 1, 0, 0], &[3, 0, 2, 0], &[0, 2, 0, 3], &[0, 0, 1, 0]])
        );
        assert_eq!(kac_matrix(1), ints(&[&[0, 1], &[1, 0]]));
        let ones = vec![int(1); 6];
        assert_eq!(kac_matrix(5).vec_mul(&ones).unwrap(), vec![int(5); 6]);
        assert_eq!(lambda_matrix(3), Matrix::diag(&[int(3), int(1), int(-1), int(-3)]));
        assert_eq!(lambda_matrix(0), ints(&[&[0]]));
        assert_eq!(lambda_matrix(9).trace(), int(0));
    }

    #[test]
    fn identity_checks_hold() {
        for n in [1, 3, 12] {
            assert!(master_check(n).passed(), "master n={n}");
        }
        for n in [0, 1, 4, 12] {
            assert!(involution_check(n).passed(), "involution n={n}");
        }
        for n in 1..=6 {
            assert!(ortho_check(n).passed(), "ortho n={n}");
        }
    }

    #[test]
    fn symmetric_matrices() {
        assert_eq!(
            k_symmetric(3),
            ints(&[&[1, 3, 3, 1], &[3, 3, -3, -3], &[3, -3, -3, 3], &[1, -3, 3, -1]])
        );
        assert_eq!(k_symmetric(1), k_genfunc(1).matrix);
        assert_eq!(k_symmetric(5).get(2, 2), &int(-20));
    }

    #[test]
    fn inner_products() {
        let k = k_genfunc(3).matrix.map(|v| BigRational::from_integer(v.clone()));
        assert_eq!(vector_inner(3, &k.col(1), &k.col(1)).unwrap(), rational(8, 3));
        assert_eq!(vector_inner(3, &k.col(0), &k.col(2)).unwrap(), rational(0, 1));
        let k4 = k_genfunc(4).matrix.map(|v| BigRational::from_integer(v.clone()));
        assert_eq!(covector_inner(4, &k4.row(2), &k4.row(2)).unwrap(), rational(96, 1));
        assert!(vector_inner(3, &k.col(0), &k4.col(0)).is_err());
    }

    #[test]
    fn exponential_covectors() {
        assert_eq!(covector_transform(3, &rats(&[8, 4, 2, 1])).unwrap(), rats(&[27, 9, 3, 1]));
        assert_eq!(
            covector_transform(3, &rats(&[27, 9, 3, 1])).unwrap(),
            rats(&[64, 32, 16, 8])
        );
        assert_eq!(covector_transform(2, &rats(&[16, 4, 1])).unwrap(), rats(&[25, 15, 9]));
        assert!(covector_transform(2, &rats(&[1, 1])).is_err());
        for n in 0..=12 {
            assert!(exponential_covector_check(n).passed());
        }
    }
}
