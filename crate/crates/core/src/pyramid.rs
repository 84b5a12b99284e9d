//! Sylvester–Hadamard matrices, binary weight labels, and the stacked
//! Krawtchouk pyramid with its Pascal-like planes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binomial, Matrix};
use crate::error::{Error, Result};
use crate::krawtchouk::{k_entry, k_genfunc, KrawtchoukMatrix, Method};
use crate::report::Check;

/// Largest n for the 2ⁿ×2ⁿ reduction.
pub const REDUCTION_BOUND: usize = 14;
/// Largest n for which [`sylvester`] materializes H^⊗n.
pub const SYLVESTER_BOUND: usize = 10;
/// Largest n for [`weight_labels`].
pub const LABEL_BOUND: usize = 30;

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value, bound });
    }
    Ok(())
}

/// (H^⊗n)_ab = (−1)^popcount(a & b).
fn sylvester_sign(a: usize, b: usize) -> i64 {
    if (a & b).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// H^⊗n as an explicit 2ⁿ×2ⁿ matrix.
pub fn sylvester(n: usize) -> Result<Matrix<BigInt>> {
    check_bound("n", n, SYLVESTER_BOUND)?;
    let size = 1usize << n;
    Ok(Matrix::from_fn(size, size, |a, b| BigInt::from(sylvester_sign(a, b))))
}

/// Binary weights w(k) of 0..2ⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightLabeling {
    pub n: usize,
    pub labels: Vec<u8>,
}

impl WeightLabeling {
    /// |w⁻¹(p)| for p = 0..=n.
    pub fn fiber_sizes(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for &w in &self.labels {
            counts[w as usize] += 1;
        }
        counts
    }

    /// Compares every label with the popcount of its index.
    pub fn popcount_check(&self) -> Check {
        match self
            .labels
            .iter()
            .enumerate()
            .find(|(k, &w)| k.count_ones() != w as u32)
        {
            None => Check::pass("w(k) = popcount(k)"),
            Some((k, &w)) => Check::values(
                "w(k) = popcount(k)",
                self.n,
                format!("k = {k}"),
                &(w as u32),
                &k.count_ones(),
            ),
        }
    }
}

/// 0 → 01 → 0112 → 01121223: each step appends the previous labels plus one.
pub fn weight_labels(n: usize) -> Result<WeightLabeling> {
    check_bound("n", n, LABEL_BOUND)?;
    let mut labels = Vec::with_capacity(1 << n);
    labels.push(0u8);
    for _ in 0..n {
        let shifted: Vec<u8> = labels.iter().map(|w| w + 1).collect();
        labels.extend(shifted);
    }
    Ok(WeightLabeling { n, labels })
}

/// S_pq = Σ over a of weight p and b of weight q of (H^⊗n)_ab.
///
/// Rows of H^⊗n are generated on the fly and reduced in parallel, so the
/// 2ⁿ×2ⁿ matrix is never stored.
pub fn reduce_to_symmetric(n: usize) -> Result<Matrix<BigInt>> {
    check_bound("n", n, REDUCTION_BOUND)?;
    let labels = weight_labels(n)?.labels;
    let size = n + 1;
    let total = (0..labels.len())
        .into_par_iter()
        .fold(
            || vec![0i64; size * size],
            |mut acc, a| {
                let p = labels[a] as usize;
                for (b, &q) in labels.iter().enumerate() {
                    acc[p * size + q as usize] += sylvester_sign(a, b);
                }
                acc
            },
        )
        .reduce(
            || vec![0i64; size * size],
            |mut x, y| {
                for (a, b) in x.iter_mut().zip(y) {
                    *a += b;
                }
                x
            },
        );
    Matrix::new(size, size, total.into_iter().map(BigInt::from).collect())
}

/// ⁿK_ij with zero outside 0..=n.
fn entry(k: &Matrix<BigInt>, i: isize, j: isize) -> BigInt {
    if i < 0 || j < 0 {
        return BigInt::from(0);
    }
    k.try_get(i as usize, j as usize).cloned().unwrap_or_else(|| BigInt::from(0))
}

/// The five pyramid identities for 1 ≤ n ≤ n_max:
/// (i)   ⁿK_(i+1)j + ⁿK_ij = ⁿ⁺¹K_(i+1)j
/// (ii)  ⁿK_(i+1)j − ⁿK_ij = ⁿ⁺¹K_(i+1)(j+1)
/// (iii) ⁿK_ij + ⁿK_i(j+1) = 2·ⁿ⁻¹K_ij
/// (iv)  ⁿK_ij − ⁿK_i(j+1) = 2·ⁿ⁻¹K_(i−1)j
/// (v)   on a square [[x, y], [z, t]] of adjacent entries, z = x + y + t.
///
/// Entries outside a matrix count as zero.
pub fn pyramid_cross_check(n_max: usize) -> Result<Check> {
    if n_max < 2 {
        return Err(Error::TooSmall {
            what: "n_max",
            value: n_max,
            min: 2,
        });
    }
    let ks: Vec<Matrix<BigInt>> = (0..=n_max + 1).map(|n| k_genfunc(n).matrix).collect();
    let two = BigInt::from(2);
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let (lower, k, upper) = (&ks[n - 1], &ks[n], &ks[n + 1]);
        let mut found: Option<Check> = None;
        'scan: for i in 0..=n as isize {
            for j in 0..=n as isize {
                let at = format!("(i, j) = ({i}, {j})");
                let x = entry(k, i, j);
                let below = entry(k, i + 1, j);
                let right = entry(k, i, j + 1);
                let mut local = vec![
                    Check::values("(i)", n, at.clone(), &(&below + &x), &entry(upper, i + 1, j)),
                    Check::values("(ii)", n, at.clone(), &(&below - &x), &entry(upper, i + 1, j + 1)),
                ];
                if j < n as isize {
                    local.push(Check::values(
                        "(iii)",
                        n,
                        at.clone(),
                        &(&x + &right),
                        &(&two * entry(lower, i, j)),
                    ));
                    local.push(Check::values(
                        "(iv)",
                        n,
                        at.clone(),
                        &(&x - &right),
                        &(&two * entry(lower, i - 1, j)),
                    ));
                }
                if i < n as isize && j < n as isize {
                    let t = entry(k, i + 1, j + 1);
                    local.push(Check::values("(v)", n, at, &below, &(&x + &right + t)));
                }
                if let Some(bad) = local.into_iter().find(|c| !c.passed()) {
                    found = Some(bad);
                    break 'scan;
                }
            }
        }
        if let Some(bad) = found {
            checks.push(bad);
            break;
        }
    }
    Ok(Check::all("pyramid cross identities", checks)
        .with_note("(v): in every square of adjacent entries the lower-left one is the sum of the other three"))
}

/// K^(n) stacked level by level: columns 0..n−1 of ⁿK by identity (i) and
/// the last column by identity (ii), starting from ⁰K = [1].
pub fn k_pyramid(n: usize) -> KrawtchoukMatrix {
    let mut k = Matrix::identity(1);
    for m in 1..=n {
        let prev = k;
        k = Matrix::from_fn(m + 1, m + 1, |i, j| {
            let (i, j) = (i as isize, j as isize);
            if j < m as isize {
                entry(&prev, i, j) + entry(&prev, i - 1, j)
            } else {
                entry(&prev, i, j - 1) - entry(&prev, i - 1, j - 1)
            }
        });
    }
    KrawtchoukMatrix::new(n, Method::PyramidRecurrence, k)
}

/// Orientation of a Pascal-like cut through the pyramid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// P⁺↓: a, b ↦ a + b below. Row r is column d of K^(d+r).
    WestDown,
    /// P⁻↓: a, b ↦ b − a below. Row r is column r of K^(d+r).
    EastDown,
    /// P⁺↑: (a + b)/2 above a, b. Row r is row d of K^(d+r).
    NorthUp,
    /// P⁻↑: (a − b)/2 above a, b. Row r is row r of K^(d+r).
    SouthUp,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::WestDown,
        Direction::EastDown,
        Direction::NorthUp,
        Direction::SouthUp,
    ];

    fn name(self) -> &'static str {
        match self {
            Direction::WestDown => "west-down",
            Direction::EastDown => "east-down",
            Direction::NorthUp => "north-up",
            Direction::SouthUp => "south-up",
        }
    }

    /// Row r of the plane at depth d, read directly from K^(d+r).
    pub fn closed_form_row(self, depth: usize, r: usize) -> Vec<BigInt> {
        let n = depth + r;
        let k = |p: usize, q: usize| k_entry(n, p, q).expect("in range");
        match self {
            Direction::WestDown => (0..=n).map(|p| k(p, depth)).collect(),
            Direction::EastDown => (0..=n).map(|p| k(p, r)).collect(),
            Direction::NorthUp => (0..=n).map(|q| k(depth, q)).collect(),
            Direction::SouthUp => (0..=n).map(|q| k(r, q)).collect(),
        }
    }

    /// Next row of the plane from the previous one. The upward planes need
    /// the first entry of the new row, C(d+r+1, ·), as a boundary value.
    fn step(self, prev: &[BigInt], depth: usize, r: usize) -> Vec<BigInt> {
        let len = prev.len() + 1;
        let at = |i: isize| -> BigInt {
            if i < 0 || i as usize >= prev.len() {
                BigInt::from(0)
            } else {
                prev[i as usize].clone()
            }
        };
        match self {
            Direction::WestDown => (0..len as isize).map(|i| at(i - 1) + at(i)).collect(),
            Direction::EastDown => (0..len as isize).map(|i| at(i) - at(i - 1)).collect(),
            Direction::NorthUp | Direction::SouthUp => {
                let n = depth + r + 1;
                let mut next = Vec::with_capacity(len);
                next.push(match self {
                    Direction::NorthUp => binomial(n, depth),
                    _ => binomial(n, r + 1),
                });
                for j in 0..prev.len() {
                    let v = match self {
                        Direction::NorthUp => BigInt::from(2) * &prev[j] - &next[j],
                        _ => &next[j] - BigInt::from(2) * &prev[j],
                    };
                    next.push(v);
                }
                next
            }
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "westdown" | "west" => Ok(Direction::WestDown),
            "eastdown" | "east" => Ok(Direction::EastDown),
            "northup" | "north" => Ok(Direction::NorthUp),
            "southup" | "south" => Ok(Direction::SouthUp),
            _ => Err(Error::parse("plane direction", s)),
        }
    }
}

/// A triangular slice of the pyramid; row r has d + r + 1 entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidPlane {
    pub direction: Direction,
    pub depth: usize,
    pub rows: Vec<Vec<BigInt>>,
}

impl PyramidPlane {
    /// Checks the plane's local rule on every adjacent pair. The half-rules
    /// first check that the pair sum or difference is even.
    pub fn rule_check(&self) -> Check {
        let name = format!("{} rule", self.direction);
        for (r, pair) in self.rows.windows(2).enumerate() {
            let (upper, lower) = (&pair[0], &pair[1]);
            for j in 0..upper.len() {
                let at = format!("row {r}, entry {j}");
                let (a, b) = (&lower[j], &lower[j + 1]);
                let (lhs, rhs) = match self.direction {
                    Direction::WestDown => (b.clone(), &upper[j] + &upper.get(j + 1).cloned().unwrap_or_default()),
                    Direction::EastDown => (b.clone(), upper.get(j + 1).cloned().unwrap_or_default() - &upper[j]),
                    Direction::NorthUp | Direction::SouthUp => {
                        let combined = if self.direction == Direction::NorthUp { a + b } else { a - b };
                        if (&combined % 2u32) != BigInt::from(0) {
                            return Check::values(name, self.depth, format!("{at}: parity"), &combined, &BigInt::from(0));
                        }
                        (upper[j].clone(), combined / 2)
                    }
                };
                if lhs != rhs {
                    return Check::values(name, self.depth, at, &lhs, &rhs);
                }
            }
        }
        Check::pass(name)
    }

    /// Compares every row with the matching slice of K^(d+r).
    pub fn closed_form_check(&self) -> Check {
        let name = format!("{} plane = slices of K", self.direction);
        for (r, row) in self.rows.iter().enumerate() {
            let expected = self.direction.closed_form_row(self.depth, r);
            if row != &expected {
                return Check::values(name, self.depth + r, format!("row {r}"), &join(row), &join(&expected));
            }
        }
        Check::pass(name)
    }

    /// Ragged CSV: one line per row, no header.
    pub fn to_csv(&self) -> String {
        self.rows.iter().map(|r| join(r) + "\n").collect()
    }
}

fn join(row: &[BigInt]) -> String {
    row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for PyramidPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        let widest = cells.last().map_or(0, |r| r.len());
        for row in &cells {
            let indent = (widest - row.len()) * (width + 1) / 2;
            let body: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}{}", " ".repeat(indent), body.join(" "))?;
        }
        Ok(())
    }
}

/// The first `rows` rows of a plane, seeded from K^(depth) and grown by the
/// plane's local rule.
pub fn pyramid_plane(direction: Direction, depth: usize, rows: usize) -> Result<PyramidPlane> {
    if rows == 0 {
        return Err(Error::TooSmall {
            what: "rows",
            value: 0,
            min: 1,
        });
    }
    let mut out = vec![direction.closed_form_row(depth, 0)];
    for r in 1..rows {
        let next = direction.step(&out[r - 1], depth, r - 1);
        out.push(next);
    }
    Ok(PyramidPlane {
        direction,
        depth,
        rows: out,
    })
}

/// Planes in every direction for depths 0..=depth_max, each with `rows` rows,
/// checked against their rules and closed forms.
pub fn plane_check(depth_max: usize, rows: usize) -> Result<Check> {
    let mut checks = Vec::new();
    for direction in Direction::ALL {
        for depth in 0..=depth_max {
            let plane = pyramid_plane(direction, depth, rows)?;
            checks.push(plane.rule_check());
            checks.push(plane.closed_form_check());
        }
    }
    Ok(Check::all("pyramid planes", checks))
}

/// reduce_to_symmetric(n) = S^(n), with S computed from K.
pub fn reduction_check(n: usize) -> Result<Check> {
    let reduced = reduce_to_symmetric(n)?;
    Ok(Check::matrices(
        "Hadamard reduction",
        n,
        &reduced,
        &crate::krawtchouk::k_symmetric(n),
    ))
}
