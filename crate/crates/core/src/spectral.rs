//! Skew-diagonalization K = B·D·B⁻¹ and the eigenvectors of K over ℚ(√2).

use num_bigint::BigInt;
use serde_json::Value;

use crate::algebra::{binomial, Matrix, Ring, RootTwo};
use crate::error::{Error, Result};
use crate::krawtchouk::{k_genfunc, KrawtchoukMatrix, Method};
use crate::report::Check;

/// Sign selector for the two eigenvalues ±2^(n/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// b⁽ᵏ⁾ with b⁽ᵏ⁾ᵢ = C(k, i), padded to length n+1.
pub fn binomial_vector(n: usize, k: usize) -> Result<Vec<BigInt>> {
    if k > n {
        return Err(Error::IndexOutOfRange {
            what: "k",
            index: k,
            max: n,
        });
    }
    Ok((0..=n).map(|i| binomial(k, i)).collect())
}

/// B with B_ij = C(j, i); its columns are the binomial vectors.
pub fn binomial_matrix(n: usize) -> Matrix<BigInt> {
    Matrix::from_fn(n + 1, n + 1, |i, j| binomial(j, i))
}

/// D with D_(n−k),k = 2^k, so that column k of B·D is 2^k·b⁽ⁿ⁻ᵏ⁾.
pub fn skew_power_matrix(n: usize) -> Matrix<BigInt> {
    let values: Vec<BigInt> = (0..=n).rev().map(|k| BigInt::one() << k).collect();
    Matrix::skewdiag(&values)
}

/// diag(1, −1, 1, …)
pub fn alternating_signs(n: usize) -> Matrix<BigInt> {
    let values: Vec<BigInt> = (0..=n)
        .map(|i| BigInt::from(if i % 2 == 0 { 1 } else { -1 }))
        .collect();
    Matrix::diag(&values)
}

/// B⁻¹ = D̂·B·D̂ with D̂ = diag(1, −1, 1, …).
pub fn b_inverse(n: usize) -> Matrix<BigInt> {
    let s = alternating_signs(n);
    let m = |a: &Matrix<BigInt>, b: &Matrix<BigInt>| a.mul(b).expect("square");
    m(&m(&s, &binomial_matrix(n)), &s)
}

/// K·b⁽ᵏ⁾ = 2^k·b⁽ⁿ⁻ᵏ⁾ for every k, the collective form K·B = B·D, and
/// B·B⁻¹ = I.
pub fn binomial_transform_check(n: usize) -> Check {
    let k = k_genfunc(n).matrix;
    let b = binomial_matrix(n);
    let mut checks = Vec::new();
    for j in 0..=n {
        let lhs = k.mul_vec(&b.col(j)).expect("length n+1");
        let scale = BigInt::one() << j;
        let rhs: Vec<BigInt> = binomial_vector(n, n - j)
            .expect("in range")
            .iter()
            .map(|v| v * &scale)
            .collect();
        let name = format!("K·b({j}) = 2^{j}·b({})", n - j);
        checks.push(Check::values(
            name,
            n,
            format!("k = {j}"),
            &format!("{lhs:?}"),
            &format!("{rhs:?}"),
        ));
    }
    let kb = k.mul(&b).expect("square");
    let bd = b.mul(&skew_power_matrix(n)).expect("square");
    checks.push(Check::matrices("K·B = B·D", n, &kb, &bd));
    let id = b.mul(&b_inverse(n)).expect("square");
    checks.push(Check::matrices("B·B⁻¹ = I", n, &id, &Matrix::identity(n + 1)));
    Check::all("binomial transform", checks)
}

/// K assembled as B·D·B⁻¹.
pub fn k_from_bdbinv(n: usize) -> KrawtchoukMatrix {
    let bd = binomial_matrix(n)
        .mul(&skew_power_matrix(n))
        .expect("square");
    let m = bd.mul(&b_inverse(n)).expect("square");
    KrawtchoukMatrix::new(n, Method::SkewFactorization, m)
}

pub fn skew_factorization_check(n: usize) -> Check {
    Check::matrices(
        "K = B·D·B⁻¹",
        n,
        &k_from_bdbinv(n).matrix,
        &k_genfunc(n).matrix,
    )
}

/// X and E of the spectral decomposition K·(BX) = (BX)·E.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenFactor {
    pub order: usize,
    pub x: Matrix<RootTwo>,
    pub e: Matrix<RootTwo>,
}

impl EigenFactor {
    /// Columns of B·X are the eigenvectors.
    pub fn eigenvectors(&self) -> Matrix<RootTwo> {
        binomial_matrix(self.order)
            .map(RootTwo::from_integer)
            .mul(&self.x)
            .expect("square")
    }

    pub fn eigenvalues(&self) -> Vec<RootTwo> {
        (0..=self.order).map(|j| self.e.get(j, j).clone()).collect()
    }
}

fn upper_half(n: usize, j: usize) -> bool {
    2 * j <= n
}

/// X is diagonal 2^((n−j)/2), negated past the middle, plus the skew
/// diagonal X_(n−j),j = 2^(j/2). For even n the centre cell is written once.
pub fn eigen_factors(n: usize) -> EigenFactor {
    let x = Matrix::from_fn(n + 1, n + 1, |i, j| {
        if i == j {
            let v = RootTwo::pow2_half((n - j) as u32);
            if upper_half(n, j) {
                v
            } else {
                v.neg()
            }
        } else if i + j == n {
            RootTwo::pow2_half(j as u32)
        } else {
            RootTwo::zero()
        }
    });
    let lambda = RootTwo::pow2_half(n as u32);
    let e_diag: Vec<RootTwo> = (0..=n)
        .map(|j| {
            if upper_half(n, j) {
                lambda.clone()
            } else {
                lambda.neg()
            }
        })
        .collect();
    EigenFactor {
        order: n,
        x,
        e: Matrix::diag(&e_diag),
    }
}

/// v± = 2^((n−k)/2)·b⁽ᵏ⁾ ± 2^(k/2)·b⁽ⁿ⁻ᵏ⁾ for k ≤ n/2. At k = n/2 the two
/// terms coincide; `+` returns the single term and `−` is an error.
pub fn eigenvector(n: usize, k: usize, sign: Sign) -> Result<Vec<RootTwo>> {
    if 2 * k > n {
        return Err(Error::IndexOutOfRange {
            what: "k",
            index: k,
            max: n / 2,
        });
    }
    let lift = |v: Vec<BigInt>| -> Vec<RootTwo> { v.iter().map(RootTwo::from_integer).collect() };
    let low = lift(binomial_vector(n, k)?);
    let a = RootTwo::pow2_half((n - k) as u32);
    if 2 * k == n {
        return match sign {
            Sign::Plus => Ok(low.iter().map(|v| v.mul(&a)).collect()),
            Sign::Minus => Err(Error::ZeroEigenvector),
        };
    }
    let high = lift(binomial_vector(n, n - k)?);
    let mut b = RootTwo::pow2_half(k as u32);
    if sign == Sign::Minus {
        b = b.neg();
    }
    Ok(low
        .iter()
        .zip(&high)
        .map(|(l, h)| l.mul(&a).add(&h.mul(&b)))
        .collect())
}

pub fn eigenvalue(n: usize, sign: Sign) -> RootTwo {
    let v = RootTwo::pow2_half(n as u32);
    match sign {
        Sign::Plus => v,
        Sign::Minus => v.neg(),
    }
}

/// JSON array of `a+b√2` strings.
pub fn vector_to_json(v: &[RootTwo]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// K·(BX) = (BX)·E, E² = 2ⁿI and det X ≠ 0.
pub fn eigen_check(n: usize) -> Check {
    let f = eigen_factors(n);
    let k = k_genfunc(n).matrix.map(RootTwo::from_integer);
    let bx = f.eigenvectors();
    let lhs = k.mul(&bx).expect("square");
    let rhs = bx.mul(&f.e).expect("square");
    let e2 = f.e.mul(&f.e).expect("square");
    let scale = RootTwo::from_integer(&(BigInt::one() << n));
    let det = f.x.determinant().expect("square");
    Check::all(
        "spectral decomposition",
        [
            Check::matrices("K·(BX) = (BX)·E", n, &lhs, &rhs),
            Check::matrices("E² = 2ⁿI", n, &e2, &Matrix::identity(n + 1).scale(&scale)),
            Check::values("det X ≠ 0", n, "det X", &det.is_zero(), &false),
        ],
    )
}
