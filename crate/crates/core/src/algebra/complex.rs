use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ring::Ring;
use super::text::{split_complex, strip_plus, strip_unit};
use crate::error::{Error, Result};

/// Absolute per-component tolerance used by `ComplexFloat` equality.
pub const COMPLEX_TOLERANCE: f64 = 1e-9;

/// Double-precision complex number. Equality is approximate: both components
/// must agree within [`COMPLEX_TOLERANCE`].
#[derive(Debug, Clone, Copy)]
pub struct ComplexFloat {
    pub re: f64,
    pub im: f64,
}

impl ComplexFloat {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexFloat { re, im }
    }

    /// e^{iφ}
    pub fn unit(phi: f64) -> Self {
        ComplexFloat::new(phi.cos(), phi.sin())
    }
}

impl PartialEq for ComplexFloat {
    fn eq(&self, other: &Self) -> bool {
        (self.re - other.re).abs() <= COMPLEX_TOLERANCE
            && (self.im - other.im).abs() <= COMPLEX_TOLERANCE
    }
}

impl Ring for ComplexFloat {
    fn zero() -> Self {
        ComplexFloat::new(0.0, 0.0)
    }
    fn one() -> Self {
        ComplexFloat::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        ComplexFloat::new(self.re + rhs.re, self.im + rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ComplexFloat::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
    fn neg(&self) -> Self {
        ComplexFloat::new(-self.re, -self.im)
    }
    fn from_integer(n: &BigInt) -> Self {
        ComplexFloat::new(n.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn ring_name() -> String {
        "complex-float".into()
    }
    fn parse_value(s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::parse("complex value", s);
        let (re_part, im_part) = split_complex(t, "i").ok_or_else(err)?;
        let re = match re_part {
            Some(r) => r.parse::<f64>().map_err(|_| err())?,
            None => 0.0,
        };
        let im = match im_part {
            Some(m) => match strip_unit(m) {
                Some(sign) => sign as f64,
                None => strip_plus(m).parse::<f64>().map_err(|_| err())?,
            },
            None => 0.0,
        };
        Ok(ComplexFloat::new(re, im))
    }
}

impl fmt::Display for ComplexFloat {
    /// Always writes both parts so the text parses back bit-exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
