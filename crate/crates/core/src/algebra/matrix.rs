use std::fmt;

use serde_json::{json, Value};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`]. Values are immutable: every
/// operation returns a new matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::LengthMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience for tests and tables: integer literals mapped into `R`.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| R::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diag(values: &[R]) -> Self {
        let n = values.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                R::zero()
            }
        })
    }

    /// Places `values[i]` at `(i, n-1-i)` for an n-vector.
    pub fn skewdiag(values: &[R]) -> Self {
        let n = values.len();
        Matrix::from_fn(n, n, |i, j| {
            if i + j + 1 == n {
                values[i].clone()
            } else {
                R::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// Panics on out-of-range indices, like slice indexing.
    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Option<&R> {
        (i < self.rows && j < self.cols).then(|| &self.entries[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch(other, op));
        }
        Ok(())
    }

    fn mismatch(&self, other: &Self, op: &'static str) -> Error {
        Error::DimensionMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(self.mismatch(rhs, "mat_mul"));
        }
        let mut out = vec![R::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    let slot = &mut out[i * rhs.cols + j];
                    *slot = slot.add(&a.mul(b));
                }
            }
        }
        Matrix::new(self.rows, rhs.cols, out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs, "mat_add")?;
        Ok(self.zip(rhs, Ring::add))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs, "mat_sub")?;
        Ok(self.zip(rhs, Ring::sub))
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.mul(x))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entry `(p·r + i, q·c + j)` is `A[p][q]·B[i][j]` for B of shape r×c.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        let (r, c) = (rhs.rows, rhs.cols);
        Matrix::from_fn(self.rows * r, self.cols * c, |a, b| {
            self.get(a / r, b / c).mul(rhs.get(a % r, b % c))
        })
    }

    /// `XY − YX`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(R::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// `A·v` for a column vector.
    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(R::zero(), |acc, j| acc.add(&self.get(i, j).mul(&v[j])))
            })
            .collect())
    }

    /// `v·A` for a row covector.
    pub fn vec_mul(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        Ok((0..self.cols)
            .map(|j| {
                (0..self.rows).fold(R::zero(), |acc, i| acc.add(&v[i].mul(self.get(i, j))))
            })
            .collect())
    }

    /// First `(row, col)` where the two matrices differ, or a shape error.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((usize::MAX, usize::MAX));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, v)| k / self.cols == k % self.cols || v.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "ring": R::ring_name(),
            "entries": entries,
        })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |k: &str| {
            value
                .get(k)
                .ok_or_else(|| Error::Format(format!("missing field {k:?}")))
        };
        let count = |k: &str| -> Result<usize> {
            field(k)?
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| Error::Format(format!("{k:?} is not a count")))
        };
        let rows = count("rows")?;
        let cols = count("cols")?;
        let ring = field("ring")?
            .as_str()
            .ok_or_else(|| Error::Format("\"ring\" is not a string".into()))?;
        if ring != R::ring_name() {
            return Err(Error::RingMismatch {
                expected: R::ring_name(),
                found: ring.to_string(),
            });
        }
        let table = field("entries")?
            .as_array()
            .ok_or_else(|| Error::Format("\"entries\" is not an array".into()))?;
        if table.len() != rows {
            return Err(Error::LengthMismatch {
                expected: rows,
                found: table.len(),
            });
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in table {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Format("matrix row is not an array".into()))?;
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for cell in row {
                let text = cell
                    .as_str()
                    .ok_or_else(|| Error::Format("entry is not a string".into()))?;
                entries.push(R::parse_value(text)?);
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Matrix::from_json(&value)
    }

    /// One matrix row per line, comma separated, newline terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(R::parse_value).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }
}

impl<R: Field> Matrix<R> {
    /// Determinant by fraction-free-free Gaussian elimination over a field.
    pub fn determinant(&self) -> Result<R> {
        if !self.is_square() {
            return Err(self.mismatch(self, "determinant"));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = R::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(R::zero());
            };
            if pivot != col {
                a.swap(pivot, col);
                det = det.neg();
            }
            let p = a[col][col].clone();
            det = det.mul(&p);
            let p_inv = p.inv().expect("nonzero pivot is invertible");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].mul(&p_inv);
                for c in col..n {
                    let v = a[r][c].sub(&factor.mul(&a[col][c]));
                    a[r][c] = v;
                }
            }
        }
        Ok(det)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| cells[i * self.cols + j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                let cell = &cells[i * self.cols + j];
                let pad = widths[j] - cell.chars().count();
                write!(f, "{}{}", " ".repeat(pad), cell)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
