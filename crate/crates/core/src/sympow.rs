//! Tensor powers of 2×2 matrices: the symmetric group power ⊙, the
//! symmetric algebra power ⊡, the Kronecker power ⊗ and the Kronecker sum
//! power ⊠, together with the sl(2) operator dictionary.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{Matrix, Poly, Ring};
use crate::error::{Error, Result};
use crate::krawtchouk::{k_genfunc, kac_matrix, lambda_matrix, KrawtchoukMatrix, Method};
use crate::report::Check;
use crate::spectral::{b_inverse, binomial_matrix, skew_power_matrix};

/// Largest n accepted by [`kron_power`] and [`box_power`].
pub const KRON_BOUND: usize = 14;

fn mat2<R: Ring>(a: i64, b: i64, c: i64, d: i64) -> Matrix<R> {
    Matrix::from_i64_rows(&[&[a, b], &[c, d]]).expect("2x2")
}

/// H = [[1,1],[1,−1]]
pub fn hadamard<R: Ring>() -> Matrix<R> {
    mat2(1, 1, 1, -1)
}

/// F = [[0,1],[1,0]]
pub fn flip<R: Ring>() -> Matrix<R> {
    mat2(0, 1, 1, 0)
}

/// G = [[1,0],[0,−1]]
pub fn grade<R: Ring>() -> Matrix<R> {
    mat2(1, 0, 0, -1)
}

/// Matrix of the imaginary unit, [[0,1],[−1,0]].
pub fn rotation<R: Ring>() -> Matrix<R> {
    mat2(0, 1, -1, 0)
}

/// [[0,1],[0,0]], mapped to x∂y.
pub fn lowering<R: Ring>() -> Matrix<R> {
    mat2(0, 1, 0, 0)
}

/// [[0,0],[1,0]], mapped to y∂x.
pub fn raising<R: Ring>() -> Matrix<R> {
    mat2(0, 0, 1, 0)
}

fn entries2<R: Ring>(a: &Matrix<R>) -> Result<[R; 4]> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::DimensionMismatch {
            op: "2x2 input",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: 2,
            right_cols: 2,
        });
    }
    Ok([
        a.get(0, 0).clone(),
        a.get(0, 1).clone(),
        a.get(1, 0).clone(),
        a.get(1, 1).clone(),
    ])
}

/// A^⊙n on degree-n forms in the basis e_p = x^(n−p) y^p. For A = [[a,b],[c,d]]
/// column q holds the y-coefficients of (a + c·y)^(n−q) (b + d·y)^q.
pub fn sym_group_power<R: Ring>(a: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    let [a, b, c, d] = entries2(a)?;
    let left = Poly::linear(a, c);
    let right = Poly::linear(b, d);
    let columns: Vec<Vec<R>> = (0..=n)
        .map(|q| {
            left.pow((n - q) as u32)
                .mul(&right.pow(q as u32))
                .padded(n + 1)
        })
        .collect();
    Ok(Matrix::from_fn(n + 1, n + 1, |p, q| columns[q][p].clone()))
}

/// A^⊡n: the derivation α'x∂x + β'x∂y + γ'y∂x + δ'y∂y acting on degree-n
/// forms, for A = [[α',β'],[γ',δ']].
pub fn sym_algebra_power<R: Ring>(a: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    let [al, be, ga, de] = entries2(a)?;
    Ok(Matrix::from_fn(n + 1, n + 1, |p, q| {
        let count = |k: usize| R::from_i64(k as i64);
        if p == q {
            al.mul(&count(n - q)).add(&de.mul(&count(q)))
        } else if p + 1 == q {
            be.mul(&count(q))
        } else if p == q + 1 {
            ga.mul(&count(n - q))
        } else {
            R::zero()
        }
    }))
}

/// The same derivation obtained as d/dt of (I + tA)^⊙n at t = 0, computed in
/// the polynomial ring R[t].
pub fn sym_algebra_power_by_derivative<R: Ring>(a: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    entries2(a)?;
    let lifted: Matrix<Poly<R>> = Matrix::from_fn(2, 2, |i, j| {
        let c0 = if i == j { R::one() } else { R::zero() };
        Poly::linear(c0, a.get(i, j).clone())
    });
    Ok(sym_group_power(&lifted, n)?.map(|p| p.coeff(1)))
}

fn check_kron_bound(n: usize) -> Result<()> {
    if n > KRON_BOUND {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: KRON_BOUND,
        });
    }
    Ok(())
}

/// A ⊗ A ⊗ … ⊗ A (n factors, [1] for n = 0).
pub fn kron_power<R: Ring>(a: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    check_kron_bound(n)?;
    Ok((0..n).fold(Matrix::identity(1), |acc, _| acc.kronecker(a)))
}

/// Σ_k I ⊗ … ⊗ A ⊗ … ⊗ I with A in slot k.
pub fn box_power<R: Ring>(a: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    check_kron_bound(n)?;
    entries2(a)?;
    let size = 1usize << n;
    let mut acc = Matrix::zeros(size, size);
    for slot in 0..n {
        let term = (0..n).fold(Matrix::identity(1), |m: Matrix<R>, k| {
            if k == slot {
                m.kronecker(a)
            } else {
                m.kronecker(&Matrix::identity(2))
            }
        });
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Coefficients of x∂x, x∂y, y∂x, y∂y.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Operator<R> {
    pub xx: R,
    pub xy: R,
    pub yx: R,
    pub yy: R,
}

pub fn sl2_operator<R: Ring>(a: &Matrix<R>) -> Result<Sl2Operator<R>> {
    let [xx, xy, yx, yy] = entries2(a)?;
    Ok(Sl2Operator { xx, xy, yx, yy })
}

impl<R: Ring> Sl2Operator<R> {
    pub fn is_zero(&self) -> bool {
        [&self.xx, &self.xy, &self.yx, &self.yy]
            .iter()
            .all(|c| c.is_zero())
    }
}

impl<R: Ring> fmt::Display for Sl2Operator<R> {
    /// Written like `y∂x + x∂y` or `x∂x - y∂y`; the zero operator is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.xx, "x∂x"),
            (&self.xy, "x∂y"),
            (&self.yx, "y∂x"),
            (&self.yy, "y∂y"),
        ];
        let mut first = true;
        for (c, sym) in terms {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if mag != "1" {
                write!(f, "{mag}")?;
            }
            write!(f, "{sym}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// K built as H^⊙n.
pub fn k_symtensor(n: usize) -> KrawtchoukMatrix {
    let m = sym_group_power(&hadamard::<BigInt>(), n).expect("2x2 input");
    KrawtchoukMatrix::new(n, Method::SymTensorPower, m)
}

fn big_mul(a: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Matrix<BigInt> {
    a.mul(b).expect("matching square orders")
}

/// F^⊡n·H^⊙n = H^⊙n·G^⊡n, and the three factors are M, K and Λ.
pub fn master_derived_check(n: usize) -> Check {
    let f = sym_algebra_power(&flip::<BigInt>(), n).expect("2x2");
    let g = sym_algebra_power(&grade::<BigInt>(), n).expect("2x2");
    let h = k_symtensor(n).matrix;
    Check::all(
        "master equation from tensor powers",
        [
            Check::matrices("F^⊡n·H^⊙n = H^⊙n·G^⊡n", n, &big_mul(&f, &h), &big_mul(&h, &g)),
            Check::matrices("F^⊡n = M", n, &f, &kac_matrix(n)),
            Check::matrices("G^⊡n = Λ", n, &g, &lambda_matrix(n)),
            Check::matrices("H^⊙n = K", n, &h, &k_genfunc(n).matrix),
        ],
    )
}

/// F^⊙n·K = K·G^⊙n and G^⊙n·K = K·F^⊙n.
pub fn symmetry_check(n: usize) -> Check {
    let k = k_genfunc(n).matrix;
    let f = sym_group_power(&flip::<BigInt>(), n).expect("2x2");
    let g = sym_group_power(&grade::<BigInt>(), n).expect("2x2");
    Check::all(
        "tensor-power symmetries",
        [
            Check::matrices("F^⊙n·K = K·G^⊙n", n, &big_mul(&f, &k), &big_mul(&k, &g)),
            Check::matrices("G^⊙n·K = K·F^⊙n", n, &big_mul(&g, &k), &big_mul(&k, &f)),
        ],
    )
}

/// (HB₁ = B₁D₁)^⊙n: H^⊙n = B₁^⊙n·D₁^⊙n·(B₁⁻¹)^⊙n with B₁ = [[1,1],[0,1]] and
/// D₁ = [[0,2],[1,0]], and the factors are B, D and B⁻¹.
pub fn skew_derived_check(n: usize) -> Check {
    let b1 = sym_group_power(&mat2::<BigInt>(1, 1, 0, 1), n).expect("2x2");
    let d1 = sym_group_power(&mat2::<BigInt>(0, 2, 1, 0), n).expect("2x2");
    let b1inv = sym_group_power(&mat2::<BigInt>(1, -1, 0, 1), n).expect("2x2");
    let product = big_mul(&big_mul(&b1, &d1), &b1inv);
    Check::all(
        "skew factorization from tensor powers",
        [
            Check::matrices("H^⊙n = B₁^⊙n D₁^⊙n (B₁⁻¹)^⊙n", n, &k_symtensor(n).matrix, &product),
            Check::matrices("B₁^⊙n = B", n, &b1, &binomial_matrix(n)),
            Check::matrices("D₁^⊙n = D", n, &d1, &skew_power_matrix(n)),
            Check::matrices("(B₁⁻¹)^⊙n = B⁻¹", n, &b1inv, &b_inverse(n)),
        ],
    )
}

/// G^⊠n·H^⊗n = H^⊗n·F^⊠n and F^⊠n·H^⊗n = H^⊗n·G^⊠n.
pub fn box_check(n: usize) -> Result<Check> {
    let h = kron_power(&hadamard::<BigInt>(), n)?;
    let f = box_power(&flip::<BigInt>(), n)?;
    let g = box_power(&grade::<BigInt>(), n)?;
    Ok(Check::all(
        "Kronecker-sum powers",
        [
            Check::matrices("G^⊠n·H^⊗n = H^⊗n·F^⊠n", n, &big_mul(&g, &h), &big_mul(&h, &f)),
            Check::matrices("F^⊠n·H^⊗n = H^⊗n·G^⊠n", n, &big_mul(&f, &h), &big_mul(&h, &g)),
        ],
    ))
}

/// Relations among 𝐋 = L^⊡n, 𝐑 = R^⊡n, 𝐍 = G^⊡n under [X,Y] = XY − YX:
/// [𝐋,𝐑] = 𝐍, [𝐍,𝐋] = 2𝐋, [𝐍,𝐑] = −2𝐑, plus the ladder factors and the
/// spectrum of 𝐍. The half-normalized forms [𝐍,𝐋] = 𝐋, [𝐍,𝐑] = −𝐑 hold
/// for ½[X,Y] and are reported as notes.
pub fn lrn_relations_check(n: usize) -> Check {
    let l = sym_algebra_power(&lowering::<BigInt>(), n).expect("2x2");
    let r = sym_algebra_power(&raising::<BigInt>(), n).expect("2x2");
    let nn = sym_algebra_power(&grade::<BigInt>(), n).expect("2x2");
    let br = |x: &Matrix<BigInt>, y: &Matrix<BigInt>| x.commutator(y).expect("square");
    let two = BigInt::from(2);
    let mut checks = vec![
        Check::matrices("[L,R] = N", n, &br(&l, &r), &nn),
        Check::matrices("[N,L] = 2L", n, &br(&nn, &l), &l.scale(&two)),
        Check::matrices("[N,R] = -2R", n, &br(&nn, &r), &r.scale(&two).neg()),
        Check::matrices("[L,L] = 0", n, &br(&l, &l), &Matrix::zeros(n + 1, n + 1)),
    ];
    for q in 0..=n {
        if q < n {
            checks.push(Check::values(
                "R e_q = (n-q) e_(q+1)",
                n,
                format!("q = {q}"),
                r.get(q + 1, q),
                &BigInt::from(n - q),
            ));
        }
        if q > 0 {
            checks.push(Check::values(
                "L e_q = q e_(q-1)",
                n,
                format!("q = {q}"),
                l.get(q - 1, q),
                &BigInt::from(q),
            ));
        }
        checks.push(Check::values(
            "N e_q = (n-2q) e_q",
            n,
            format!("q = {q}"),
            nn.get(q, q),
            &BigInt::from(n as i64 - 2 * q as i64),
        ));
    }
    Check::all("sl(2) relations", checks).with_note(
        "with [X,Y] = XY - YX: [N,L] = 2L, [N,R] = -2R; the forms [N,L] = L, [N,R] = -R need the half bracket (XY - YX)/2",
    )
}
