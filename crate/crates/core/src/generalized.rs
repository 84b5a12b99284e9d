//! Krawtchouk matrices with phases from a commutative ring, K(α, β), and the
//! complex-phase family K(φ) with its snake figures.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{BivariatePoly, ComplexFloat, GaussianInteger, Matrix, Poly, Ring};
use crate::error::{Error, Result};
use crate::krawtchouk::k_binsum;
use crate::report::Check;

/// ⁿK(α, β): column q holds the coefficients of (1+αt)^(n−q) (1+βt)^q.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralKrawtchouk<R> {
    pub order: usize,
    pub alpha: R,
    pub beta: R,
    pub matrix: Matrix<R>,
}

impl<R: Ring> GeneralKrawtchouk<R> {
    /// Entry (p, q), or zero outside the matrix.
    pub fn entry(&self, p: isize, q: isize) -> R {
        if p < 0 || q < 0 {
            return R::zero();
        }
        self.matrix
            .try_get(p as usize, q as usize)
            .cloned()
            .unwrap_or_else(R::zero)
    }
}

pub fn k_general<R: Ring>(n: usize, alpha: &R, beta: &R) -> GeneralKrawtchouk<R> {
    let a = Poly::linear(R::one(), alpha.clone());
    let b = Poly::linear(R::one(), beta.clone());
    let columns: Vec<Vec<R>> = (0..=n)
        .map(|q| a.pow((n - q) as u32).mul(&b.pow(q as u32)).padded(n + 1))
        .collect();
    GeneralKrawtchouk {
        order: n,
        alpha: alpha.clone(),
        beta: beta.clone(),
        matrix: Matrix::from_fn(n + 1, n + 1, |p, q| columns[q][p].clone()),
    }
}

/// K(α, β) over the polynomial ring ℤ[α, β].
pub fn k_symbolic(n: usize) -> GeneralKrawtchouk<BivariatePoly> {
    k_general(n, &BivariatePoly::alpha(), &BivariatePoly::beta())
}

/// The four cross identities linking orders n−1, n and n+1:
/// (i)   α·ⁿK_pq + ⁿK_(p+1)q = ⁿ⁺¹K_(p+1)q
/// (ii)  β·ⁿK_pq + ⁿK_(p+1)q = ⁿ⁺¹K_(p+1)(q+1)
/// (iii) ⁿK_pq − ⁿK_p(q+1) = (α−β)·ⁿ⁻¹K_(p−1)q
/// (iv)  α·ⁿK_p(q+1) − β·ⁿK_pq = (α−β)·ⁿ⁻¹K_pq
/// Entries outside a matrix count as zero.
pub fn general_cross_check<R: Ring>(n: usize, alpha: &R, beta: &R) -> Check {
    let lower = k_general(n.saturating_sub(1), alpha, beta);
    let k = k_general(n, alpha, beta);
    let upper = k_general(n + 1, alpha, beta);
    let diff = alpha.sub(beta);
    let mut checks = Vec::new();
    for p in 0..=n as isize {
        for q in 0..=n as isize {
            let at = format!("(p, q) = ({p}, {q})");
            let x = k.entry(p, q);
            let below = k.entry(p + 1, q);
            checks.push(Check::values(
                "(i)",
                n,
                at.clone(),
                &alpha.mul(&x).add(&below),
                &upper.entry(p + 1, q),
            ));
            checks.push(Check::values(
                "(ii)",
                n,
                at.clone(),
                &beta.mul(&x).add(&below),
                &upper.entry(p + 1, q + 1),
            ));
            if n >= 1 && q < n as isize {
                let right = k.entry(p, q + 1);
                checks.push(Check::values(
                    "(iii)",
                    n,
                    at.clone(),
                    &x.sub(&right),
                    &diff.mul(&lower.entry(p - 1, q)),
                ));
                checks.push(Check::values(
                    "(iv)",
                    n,
                    at,
                    &alpha.mul(&right).sub(&beta.mul(&x)),
                    &diff.mul(&lower.entry(p, q)),
                ));
            }
        }
    }
    Check::all("cross identities", checks)
}

/// β·x + z = α·y + t on every 2×2 block [[x, y], [z, t]] of adjacent entries.
pub fn trace_identity_check<R: Ring>(n: usize, alpha: &R, beta: &R) -> Check {
    let k = k_general(n, alpha, beta);
    let mut checks = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let m = &k.matrix;
            let (x, y) = (m.get(p, q), m.get(p, q + 1));
            let (z, t) = (m.get(p + 1, q), m.get(p + 1, q + 1));
            checks.push(Check::values(
                "βx + z = αy + t",
                n,
                format!("block at ({p}, {q})"),
                &beta.mul(x).add(z),
                &alpha.mul(y).add(t),
            ));
        }
    }
    Check::all("trace identity", checks)
}

/// Substituting α = 1, β = −1 into the symbolic matrix gives K^(n).
pub fn specialization_check(n: usize) -> Check {
    let sym = k_symbolic(n).matrix;
    let one = BigInt::one();
    let evaluated = sym.map(|p| p.evaluate(&one, &one.neg()));
    Check::matrices("K(α,β) at (1,−1) = K", n, &evaluated, &k_binsum(n).matrix)
}

/// Phase φ for K(φ) = K(1, e^{iφ}). Multiples of π/2 stay exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phase {
    /// φ = k·π/2 for k = 0..3.
    QuarterTurns(u8),
    Radians(f64),
}

impl Phase {
    pub const HALF_PI: Phase = Phase::QuarterTurns(1);
    pub const PI: Phase = Phase::QuarterTurns(2);

    /// Snaps exact floating multiples of π/2 to the exact variant.
    pub fn from_radians(phi: f64) -> Phase {
        let turns = phi / (PI / 2.0);
        let k = turns.round();
        if (turns - k).abs() < 1e-12 {
            Phase::QuarterTurns(k.rem_euclid(4.0) as u8)
        } else {
            Phase::Radians(phi)
        }
    }

    pub fn radians(&self) -> f64 {
        match *self {
            Phase::QuarterTurns(k) => k as f64 * PI / 2.0,
            Phase::Radians(r) => r,
        }
    }

    /// e^{iφ} as a Gaussian integer, when exact.
    pub fn exact_unit(&self) -> Option<GaussianInteger> {
        match *self {
            Phase::QuarterTurns(k) => Some(match k % 4 {
                0 => GaussianInteger::from_ints(1, 0),
                1 => GaussianInteger::from_ints(0, 1),
                2 => GaussianInteger::from_ints(-1, 0),
                _ => GaussianInteger::from_ints(0, -1),
            }),
            Phase::Radians(_) => None,
        }
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts `0`, `pi/2`, `pi`, `3pi/2`, `-pi/2` (also `π`) or radians.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('π', "pi");
        let exact = match t.as_str() {
            "0" => Some(0),
            "pi/2" => Some(1),
            "pi" => Some(2),
            "3pi/2" | "3*pi/2" | "-pi/2" => Some(3),
            "-pi" => Some(2),
            _ => None,
        };
        if let Some(k) = exact {
            return Ok(Phase::QuarterTurns(k));
        }
        t.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(Phase::from_radians)
            .ok_or_else(|| Error::parse("phase", s))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Phase::QuarterTurns(0) => write!(f, "0"),
            Phase::QuarterTurns(1) => write!(f, "pi/2"),
            Phase::QuarterTurns(2) => write!(f, "pi"),
            Phase::QuarterTurns(_) => write!(f, "3pi/2"),
            Phase::Radians(r) => write!(f, "{r}"),
        }
    }
}

/// K(φ): exact over the Gaussian integers for multiples of π/2, floating
/// point otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum PhaseKrawtchouk {
    Exact(Matrix<GaussianInteger>),
    Float(Matrix<ComplexFloat>),
}

impl PhaseKrawtchouk {
    pub fn order(&self) -> usize {
        match self {
            PhaseKrawtchouk::Exact(m) => m.rows() - 1,
            PhaseKrawtchouk::Float(m) => m.rows() - 1,
        }
    }

    pub fn to_complex(&self) -> Matrix<ComplexFloat> {
        match self {
            PhaseKrawtchouk::Exact(m) => m.map(|z| {
                ComplexFloat::new(
                    z.re.to_f64().unwrap_or(f64::NAN),
                    z.im.to_f64().unwrap_or(f64::NAN),
                )
            }),
            PhaseKrawtchouk::Float(m) => m.clone(),
        }
    }
}

pub fn k_phase(n: usize, phase: Phase) -> PhaseKrawtchouk {
    match phase.exact_unit() {
        Some(unit) => PhaseKrawtchouk::Exact(k_general(n, &GaussianInteger::one(), &unit).matrix),
        None => {
            let unit = ComplexFloat::unit(phase.radians());
            PhaseKrawtchouk::Float(k_general(n, &ComplexFloat::one(), &unit).matrix)
        }
    }
}

/// One column of K(φ) as a polyline in the Argand plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Snake {
    pub column: usize,
    pub points: Vec<(f64, f64)>,
    /// Column 0 is the all-real binomial column.
    pub degenerate: bool,
}

pub fn snake_coordinates(n: usize, phase: Phase, q: usize) -> Result<Snake> {
    if q > n {
        return Err(Error::IndexOutOfRange {
            what: "q",
            index: q,
            max: n,
        });
    }
    let m = k_phase(n, phase).to_complex();
    Ok(Snake {
        column: q,
        points: m.col(q).iter().map(|z| (z.re, z.im)).collect(),
        degenerate: q == 0,
    })
}

/// Columns 1..=n, the ones drawn as snakes.
pub fn snakes(n: usize, phase: Phase) -> Vec<Snake> {
    (1..=n)
        .map(|q| snake_coordinates(n, phase, q).expect("q within 1..=n"))
        .collect()
}

/// `re,im` per line.
pub fn snake_csv(snake: &Snake) -> String {
    let mut out = String::new();
    for (re, im) in &snake.points {
        writeln!(out, "{re},{im}").expect("write to String");
    }
    out
}

/// Standalone SVG with one polyline per snake. The imaginary axis points up.
pub fn snakes_svg(snakes: &[Snake]) -> String {
    let all = snakes.iter().flat_map(|s| s.points.iter());
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in all {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(-y);
        max_y = max_y.max(-y);
    }
    let pad = 0.05 * (max_x - min_x).max(max_y - min_y).max(1.0);
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let stroke = 0.005 * w.max(h);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        min_x - pad,
        min_y - pad,
        w,
        h
    )
    .expect("write to String");
    for s in snakes {
        let pts: Vec<String> = s.points.iter().map(|(x, y)| format!("{},{}", x, -y)).collect();
        writeln!(
            out,
            r#"  <polyline data-column="{}" points="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
            s.column,
            pts.join(" "),
            stroke
        )
        .expect("write to String");
    }
    out.push_str("</svg>\n");
    out
}
