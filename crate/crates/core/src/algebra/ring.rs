use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Commutative ring with exact (or, for [`ComplexFloat`](super::ComplexFloat),
/// tolerance-based) equality. Every matrix and identity in the crate is
/// generic over this contract.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    /// True for polynomial rings, whose products cost far more than scalars.
    const SYMBOLIC: bool = false;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Image of an integer under the unique ring map from Z.
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Name written into serialized matrices.
    fn ring_name() -> String;

    /// Inverse of `Display`. Rings without a textual form keep the default.
    fn parse_value(s: &str) -> Result<Self> {
        Err(Error::parse("ring value", s))
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
    fn ring_name() -> String {
        "integer".into()
    }
    fn parse_value(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::parse("integer", s))
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn ring_name() -> String {
        "rational".into()
    }
    fn parse_value(s: &str) -> Result<Self> {
        let t = s.trim();
        let parsed: BigRational = t.parse().map_err(|_| Error::parse("rational", s))?;
        // Ratio's FromStr does not reject a zero denominator on every path.
        if Zero::is_zero(parsed.denom()) {
            return Err(Error::parse("rational", s));
        }
        Ok(parsed)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Rational from a pair of machine integers, normalized.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
