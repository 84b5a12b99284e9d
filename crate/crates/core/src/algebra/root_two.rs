use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{Field, Ring};
use super::text::{split_complex, strip_plus, strip_unit, write_with_unit};
use crate::error::{Error, Result};

const SQRT2: &str = "√2";

/// `a + b·√2` with rational parts; a field since √2 is irrational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootTwo {
    pub a: BigRational,
    pub b: BigRational,
}

impl RootTwo {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        RootTwo { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        RootTwo::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn sqrt2() -> Self {
        RootTwo::from_ints(0, 1)
    }

    /// 2^(k/2): rational for even k, a multiple of √2 for odd k.
    pub fn pow2_half(k: u32) -> Self {
        let base = BigRational::from_integer(BigInt::one() << (k / 2) as usize);
        if k % 2 == 0 {
            RootTwo::new(base, BigRational::zero())
        } else {
            RootTwo::new(BigRational::zero(), base)
        }
    }

    /// Galois conjugate a − b√2.
    pub fn conj(&self) -> Self {
        RootTwo::new(self.a.clone(), -&self.b)
    }

    /// Field norm a² − 2b².
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl Ring for RootTwo {
    fn zero() -> Self {
        RootTwo::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        RootTwo::new(BigRational::one(), BigRational::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        RootTwo::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let two = BigRational::from_integer(2.into());
        RootTwo::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
    fn neg(&self) -> Self {
        RootTwo::new(-&self.a, -&self.b)
    }
    fn from_integer(n: &BigInt) -> Self {
        RootTwo::new(BigRational::from_integer(n.clone()), BigRational::zero())
    }
    fn ring_name() -> String {
        "root-two".into()
    }
    fn parse_value(s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::parse("a+b√2 value", s);
        // Accept the radical term first too, e.g. `2√2-1`.
        if let Some(idx) = t.find(SQRT2).filter(|_| !t.ends_with(SQRT2)) {
            let (head, tail) = t.split_at(idx + SQRT2.len());
            let lead = RootTwo::parse_value(head).map_err(|_| err())?;
            let rest = BigRational::parse_value(strip_plus(tail)).map_err(|_| err())?;
            return Ok(lead.add(&RootTwo::new(rest, BigRational::zero())));
        }
        let (a_part, b_part) = split_complex(t, SQRT2).ok_or_else(err)?;
        let a = match a_part {
            Some(r) => BigRational::parse_value(r).map_err(|_| err())?,
            None => BigRational::zero(),
        };
        let b = match b_part {
            Some(m) => match strip_unit(m) {
                Some(sign) => BigRational::from_integer(sign.into()),
                None => BigRational::parse_value(strip_plus(m)).map_err(|_| err())?,
            },
            None => BigRational::zero(),
        };
        Ok(RootTwo::new(a, b))
    }
}

impl Field for RootTwo {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(RootTwo::new(c.a / &n, c.b / &n))
    }
}

impl fmt::Display for RootTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_with_unit(f, &self.a, &self.b, SQRT2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::rational;

    #[test]
    fn sqrt2_squares_to_two() {
        let r = RootTwo::sqrt2();
        assert_eq!(r.mul(&r), RootTwo::from_ints(2, 0));
    }

    #[test]
    fn half_powers_of_two() {
        assert_eq!(RootTwo::pow2_half(0), RootTwo::one());
        assert_eq!(RootTwo::pow2_half(3), RootTwo::from_ints(0, 2));
        assert_eq!(RootTwo::pow2_half(4), RootTwo::from_ints(4, 0));
        for k in 0..12 {
            let h = RootTwo::pow2_half(k);
            assert_eq!(h.mul(&h), RootTwo::from_ints(1 << k, 0));
        }
    }

    #[test]
    fn text_round_trip() {
        for text in ["-1+2√2", "2+√2", "-√2", "√2", "3", "0", "1/2-3/2√2"] {
            let v = RootTwo::parse_value(text).unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert_eq!(
            RootTwo::parse_value("2√2-1").unwrap(),
            RootTwo::from_ints(-1, 2)
        );
        assert_eq!(
            RootTwo::parse_value("1/2+√2").unwrap(),
            RootTwo::new(rational(1, 2), rational(1, 1))
        );
    }

    #[test]
    fn inverse_uses_norm() {
        let v = RootTwo::from_ints(3, 2);
        assert_eq!(v.norm(), rational(1, 1));
        assert_eq!(v.mul(&v.inv().unwrap()), RootTwo::one());
        assert!(RootTwo::zero().inv().is_none());
    }
}
