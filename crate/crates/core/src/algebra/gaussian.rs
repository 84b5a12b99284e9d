use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{Field, Ring};
use super::text::{split_complex, strip_plus, strip_unit};
use crate::error::{Error, Result};

/// `re + im·i` over a base ring, with i² = −1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

pub type GaussianInteger = Gaussian<BigInt>;
pub type GaussianRational = Gaussian<BigRational>;

impl<T: Ring> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian::new(T::zero(), T::one())
    }

    pub fn real(re: T) -> Self {
        Gaussian::new(re, T::zero())
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), self.im.neg())
    }

    /// re² + im², an element of the base ring.
    pub fn norm(&self) -> T {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
}

impl GaussianInteger {
    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(BigInt::from(re), BigInt::from(im))
    }
}

impl<T: Ring> Ring for Gaussian<T> {
    fn zero() -> Self {
        Gaussian::new(T::zero(), T::zero())
    }
    fn one() -> Self {
        Gaussian::new(T::one(), T::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        Gaussian::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gaussian::new(
            self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        )
    }
    fn neg(&self) -> Self {
        Gaussian::new(self.re.neg(), self.im.neg())
    }
    fn from_integer(n: &BigInt) -> Self {
        Gaussian::real(T::from_integer(n))
    }
    fn ring_name() -> String {
        format!("gaussian-{}", T::ring_name())
    }
    fn parse_value(s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::parse("gaussian value", s);
        let (re_part, im_part) = split_complex(t, "i").ok_or_else(err)?;
        let re = match re_part {
            Some(r) => T::parse_value(r).map_err(|_| err())?,
            None => T::zero(),
        };
        let im = match im_part {
            Some(m) => match strip_unit(m) {
                Some(sign) => T::from_i64(sign),
                None => T::parse_value(strip_plus(m)).map_err(|_| err())?,
            },
            None => T::zero(),
        };
        Ok(Gaussian::new(re, im))
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Gaussian::new(c.re.mul(&n), c.im.mul(&n)))
    }
}

impl<T: Ring> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_with_unit(f, &self.re, &self.im, "i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianInteger::i();
        assert_eq!(i.mul(&i), GaussianInteger::from_ints(-1, 0));
    }

    #[test]
    fn display_matches_table_style() {
        let cases = [
            ((1, 0), "1"),
            ((0, 1), "i"),
            ((0, -1), "-i"),
            ((2, 1), "2+i"),
            ((1, 2), "1+2i"),
            ((-1, 2), "-1+2i"),
            ((-3, -1), "-3-i"),
            ((0, 3), "3i"),
            ((0, 0), "0"),
        ];
        for ((re, im), text) in cases {
            let g = GaussianInteger::from_ints(re, im);
            assert_eq!(g.to_string(), text);
            assert_eq!(GaussianInteger::parse_value(text).unwrap(), g);
        }
    }

    #[test]
    fn rational_inverse() {
        let z = Gaussian::new(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), GaussianRational::one());
        assert_eq!(GaussianRational::parse_value("1/2-3/4i").unwrap().to_string(), "1/2-3/4i");
    }
}
