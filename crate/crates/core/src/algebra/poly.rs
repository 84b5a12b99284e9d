use std::fmt;

use num_bigint::BigInt;

use super::ring::Ring;

/// Univariate polynomial `c0 + c1·t + …` over a ring, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c0 + c1·t`
    pub fn linear(c0: R, c1: R) -> Self {
        Poly::new(vec![c0, c1])
    }

    pub fn t() -> Self {
        Poly::linear(R::zero(), R::one())
    }

    /// Coefficient of t^k (zero past the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients t^0..=t^len-1, zero padded.
    pub fn padded(&self, len: usize) -> Vec<R> {
        (0..len).map(|k| self.coeff(k)).collect()
    }
}

impl<R: Ring> Ring for Poly<R> {
    const SYMBOLIC: bool = true;

    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_integer(n: &BigInt) -> Self {
        Poly::constant(R::from_integer(n))
    }
    fn ring_name() -> String {
        format!("poly-{}", R::ring_name())
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})t", c)?,
                _ => write!(f, "({})t^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::int;

    #[test]
    fn binomial_expansion() {
        let p = Poly::linear(int(1), int(1)).pow(4);
        assert_eq!(p.coeffs(), &[int(1), int(4), int(6), int(4), int(1)]);
        let q = Poly::linear(int(1), int(-1)).mul(&Poly::linear(int(1), int(1)));
        assert_eq!(q.coeffs(), &[int(1), int(0), int(-1)]);
        assert_eq!(q.coeff(7), int(0));
    }

    #[test]
    fn trims_to_zero() {
        let p = Poly::new(vec![int(0), int(0)]);
        assert!(Ring::is_zero(&p));
        assert_eq!(p.degree(), None);
    }
}
