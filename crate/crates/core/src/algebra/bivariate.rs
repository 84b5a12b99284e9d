use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Integer polynomial in the two phase symbols α and β.
///
/// Keys are exponent pairs `(i, j)` of `α^i β^j`; zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn monomial(coeff: BigInt, alpha_exp: u32, beta_exp: u32) -> Self {
        let mut p = BivariatePoly::default();
        p.add_term((alpha_exp, beta_exp), coeff);
        p
    }

    pub fn alpha() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn beta() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn coeff(&self, alpha_exp: u32, beta_exp: u32) -> BigInt {
        self.terms
            .get(&(alpha_exp, beta_exp))
            .cloned()
            .unwrap_or_default()
    }

    /// The value when no α or β appears.
    pub fn constant(&self) -> Option<BigInt> {
        self.terms
            .keys()
            .all(|&k| k == (0, 0))
            .then(|| self.coeff(0, 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    fn add_term(&mut self, key: (u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Evaluation homomorphism `α ↦ a, β ↦ b` into any ring.
    pub fn evaluate<R: Ring>(&self, a: &R, b: &R) -> R {
        self.terms.iter().fold(R::zero(), |acc, (&(i, j), c)| {
            acc.add(&R::from_integer(c).mul(&a.pow(i)).mul(&b.pow(j)))
        })
    }
}

impl Ring for BivariatePoly {
    const SYMBOLIC: bool = true;

    fn zero() -> Self {
        BivariatePoly::default()
    }
    fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = BivariatePoly::default();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        BivariatePoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_integer(n: &BigInt) -> Self {
        Self::monomial(n.clone(), 0, 0)
    }
    fn ring_name() -> String {
        "bivariate-poly".into()
    }
    fn parse_value(s: &str) -> Result<Self> {
        parse_poly(s).ok_or_else(|| Error::parse("bivariate polynomial", s))
    }
}

fn write_symbol(f: &mut fmt::Formatter<'_>, sym: char, exp: u32) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{}", sym),
        e => write!(f, "{}^{}", sym, e),
    }
}

impl fmt::Display for BivariatePoly {
    /// Highest α-power first, e.g. `α^2 + 2αβ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if mag != BigInt::one() || (i == 0 && j == 0) {
                write!(f, "{}", mag)?;
            }
            write_symbol(f, 'α', i)?;
            write_symbol(f, 'β', j)?;
        }
        Ok(())
    }
}

fn parse_poly(s: &str) -> Option<BivariatePoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut out = BivariatePoly::default();
    let chars: Vec<char> = compact.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let mut sign = BigInt::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos > 0 {
            return None;
        }
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: BigInt = if pos > start {
            chars[start..pos].iter().collect::<String>().parse().ok()?
        } else {
            BigInt::one()
        };
        let (mut ai, mut bj) = (0u32, 0u32);
        let mut saw_symbol = false;
        while pos < chars.len() && !matches!(chars[pos], '+' | '-') {
            let slot = match chars[pos] {
                'α' | 'a' => &mut ai,
                'β' | 'b' => &mut bj,
                '*' => {
                    pos += 1;
                    continue;
                }
                _ => return None,
            };
            pos += 1;
            let mut exp = 1u32;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let e0 = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                exp = chars[e0..pos].iter().collect::<String>().parse().ok()?;
            }
            *slot += exp;
            saw_symbol = true;
        }
        if pos == start && !saw_symbol {
            return None;
        }
        out.add_term((ai, bj), sign * coeff);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> BivariatePoly {
        BivariatePoly::alpha()
    }
    fn b() -> BivariatePoly {
        BivariatePoly::beta()
    }

    #[test]
    fn binomial_square() {
        let s = a().add(&b());
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(1, 1), BigInt::from(2));
        assert_eq!(sq.to_string(), "α^2 + 2αβ + β^2");
    }

    #[test]
    fn cancellation_drops_terms() {
        let d = a().sub(&a());
        assert!(Ring::is_zero(&d));
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["α^2 + 2αβ", "-3β^4 + 1", "α - β", "0", "7", "-αβ^2"] {
            let p = BivariatePoly::parse_value(text).unwrap();
            assert_eq!(BivariatePoly::parse_value(&p.to_string()).unwrap(), p);
        }
        assert_eq!(
            BivariatePoly::parse_value("a^2+2ab").unwrap(),
            BivariatePoly::parse_value("α^2 + 2αβ").unwrap()
        );
        assert!(BivariatePoly::parse_value("x+1").is_err());
        assert!(BivariatePoly::parse_value("").is_err());
    }

    #[test]
    fn evaluation_at_integers() {
        let p = BivariatePoly::parse_value("α^2 + 2αβ - 3").unwrap();
        assert_eq!(p.evaluate(&BigInt::from(2), &BigInt::from(-1)), BigInt::from(-3));
    }
}
