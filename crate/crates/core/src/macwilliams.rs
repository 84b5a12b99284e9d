//! Subspaces of ℤ₂ⁿ, their weight characters, and the MacWilliams transform
//! 2^(dim W)·𝐖⊥ = K·𝐖.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::krawtchouk::k_genfunc;
use crate::report::Check;
use crate::spectral::binomial_vector;

/// Largest ambient dimension a packed vector can hold.
pub const AMBIENT_BOUND: usize = 64;
/// Largest dim W enumerated by [`weight_character`].
pub const ENUMERATION_BOUND: usize = 24;
/// Largest n accepted by [`macwilliams_check`].
pub const CHECK_BOUND: usize = 16;

/// A vector of ℤ₂ⁿ. Coordinate 1 is the most significant of the n bits, so
/// "110" is e₁ + e₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    pub n: usize,
    pub bits: u64,
}

impl BinaryVector {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        if n > AMBIENT_BOUND {
            return Err(Error::BoundExceeded {
                what: "n",
                value: n,
                bound: AMBIENT_BOUND,
            });
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::parse("binary vector", format!("{bits:#b}")));
        }
        Ok(BinaryVector { n, bits })
    }

    /// e_i, 1-based.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                what: "coordinate",
                index: i,
                max: n,
            });
        }
        BinaryVector::new(n, 1u64 << (n - i))
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn add(&self, other: &BinaryVector) -> Result<BinaryVector> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(BinaryVector {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    /// ⟨u, v⟩ mod 2
    pub fn dot(&self, other: &BinaryVector) -> u8 {
        ((self.bits & other.bits).count_ones() % 2) as u8
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > AMBIENT_BOUND {
            return Err(Error::BoundExceeded {
                what: "n",
                value: s.len(),
                bound: AMBIENT_BOUND,
            });
        }
        let mut bits = 0u64;
        for ch in s.chars() {
            let b = match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::parse("binary vector", s)),
            };
            bits = (bits << 1) | b;
        }
        BinaryVector::new(s.len(), bits)
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.n).rev() {
            f.write_str(if (self.bits >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses "110,001" into vectors.
pub fn parse_basis(text: &str) -> Result<Vec<BinaryVector>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// A subspace of ℤ₂ⁿ held by its reduced row-echelon basis, so equal
/// subspaces have equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySubspace {
    n: usize,
    basis: Vec<u64>,
}

impl BinarySubspace {
    pub fn zero(n: usize) -> Result<Self> {
        BinaryVector::new(n, 0)?;
        Ok(BinarySubspace { n, basis: Vec::new() })
    }

    pub fn full(n: usize) -> Result<Self> {
        let units = (1..=n).map(|i| BinaryVector::unit(n, i)).collect::<Result<Vec<_>>>()?;
        subspace_from(n, &units)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<BinaryVector> {
        self.basis.iter().map(|&bits| BinaryVector { n: self.n, bits }).collect()
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        v.n == self.n && reduce(&self.basis, v.bits) == 0
    }

    /// True when the basis consists of standard unit vectors.
    pub fn is_axis_spanned(&self) -> bool {
        self.basis.iter().all(|b| b.count_ones() == 1)
    }
}

impl fmt::Display for BinarySubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis().iter().map(|v| v.to_string()).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

fn pivot(row: u64) -> u32 {
    63 - row.leading_zeros()
}

fn reduce(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        if (v >> pivot(b)) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// Reduced row-echelon basis of the span. Dependent inputs drop out.
pub fn subspace_from(n: usize, vectors: &[BinaryVector]) -> Result<BinarySubspace> {
    BinaryVector::new(n, 0)?;
    let mut basis: Vec<u64> = Vec::new();
    for v in vectors {
        if v.n != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: v.n,
            });
        }
        let r = reduce(&basis, v.bits);
        if r == 0 {
            continue;
        }
        let p = pivot(r);
        for b in basis.iter_mut() {
            if (*b >> p) & 1 == 1 {
                *b ^= r;
            }
        }
        basis.push(r);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(BinarySubspace { n, basis })
}

/// W⊥ under the standard inner product mod 2.
pub fn complement(w: &BinarySubspace) -> BinarySubspace {
    let pivots: u64 = w.basis.iter().map(|&b| 1u64 << pivot(b)).fold(0, |a, b| a | b);
    let mut vectors = Vec::new();
    for free in (0..w.n).filter(|c| (pivots >> c) & 1 == 0) {
        let mut v = 1u64 << free;
        for &b in &w.basis {
            if (b >> free) & 1 == 1 {
                v |= 1u64 << pivot(b);
            }
        }
        vectors.push(BinaryVector { n: w.n, bits: v });
    }
    subspace_from(w.n, &vectors).expect("same ambient")
}

/// 𝐖ᵢ = number of vectors of weight i in W.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCharacter {
    pub counts: Vec<u64>,
}

impl WeightCharacter {
    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.counts.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl fmt::Display for WeightCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", bracket(&self.to_bigints()))
    }
}

fn bracket(v: &[BigInt]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

/// Basis vectors fixed by the prefix enumeration; the rest run in Gray-code
/// order within each task.
const PREFIX_VECTORS: usize = 6;

/// Counts the 2^(dim W) elements by weight.
pub fn weight_character(w: &BinarySubspace) -> Result<WeightCharacter> {
    let dim = w.dim();
    if dim > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "dim W",
            value: dim,
            bound: ENUMERATION_BOUND,
        });
    }
    let k = dim.min(PREFIX_VECTORS);
    let (head, tail) = w.basis.split_at(k);
    let counts = (0..1u64 << k)
        .into_par_iter()
        .map(|mask| {
            let mut counts = vec![0u64; w.n + 1];
            let mut v = head
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .fold(0u64, |acc, (_, b)| acc ^ b);
            counts[v.count_ones() as usize] += 1;
            for step in 1..1u64 << tail.len() {
                v ^= tail[step.trailing_zeros() as usize];
                counts[v.count_ones() as usize] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; w.n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(WeightCharacter { counts })
}

/// Both sides of 2^(dim W)·𝐖⊥ = K·𝐖 for one subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacWilliams {
    pub n: usize,
    pub scale: BigInt,
    pub w: WeightCharacter,
    pub w_perp: WeightCharacter,
    pub k_w: Vec<BigInt>,
}

impl MacWilliams {
    pub fn scaled_perp(&self) -> Vec<BigInt> {
        self.w_perp.counts.iter().map(|&c| &self.scale * c).collect()
    }

    pub fn holds(&self) -> bool {
        self.scaled_perp() == self.k_w
    }
}

impl fmt::Display for MacWilliams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, mark) = if self.holds() { ("=", "✓") } else { ("≠", "✗") };
        write!(f, "{}·{} {sign} K·{} {mark}", self.scale, self.w_perp, self.w)
    }
}

pub fn macwilliams(w: &BinarySubspace) -> Result<MacWilliams> {
    if w.n > CHECK_BOUND {
        return Err(Error::BoundExceeded {
            what: "n",
            value: w.n,
            bound: CHECK_BOUND,
        });
    }
    let character = weight_character(w)?;
    let perp = weight_character(&complement(w))?;
    let k_w = k_genfunc(w.n).matrix.mul_vec(&character.to_bigints())?;
    Ok(MacWilliams {
        n: w.n,
        scale: BigInt::from(1u64 << w.dim()),
        w: character,
        w_perp: perp,
        k_w,
    })
}

/// 2^(dim W)·𝐖⊥ = K·𝐖, entrywise.
pub fn macwilliams_check(w: &BinarySubspace) -> Result<Check> {
    let m = macwilliams(w)?;
    let name = "2^dim W · W⊥ = K·W";
    let check = match m.scaled_perp().iter().zip(&m.k_w).position(|(a, b)| a != b) {
        None => Check::pass(name),
        Some(i) => Check::values(name, m.n, format!("{w}, weight {i}"), &m.scaled_perp()[i], &m.k_w[i]),
    };
    Ok(check.with_note("scale factor is card W = 2^dim W"))
}

/// For W spanned by k standard unit vectors: 𝐖 = b⁽ᵏ⁾, 𝐖⊥ = b⁽ⁿ⁻ᵏ⁾, and
/// the transform reduces to K·b⁽ᵏ⁾ = 2^k·b⁽ⁿ⁻ᵏ⁾.
pub fn coordinate_subspace_note(w: &BinarySubspace) -> Result<Check> {
    if !w.is_axis_spanned() {
        return Err(Error::NotAxisSpanned);
    }
    let (n, k) = (w.n, w.dim());
    let m = macwilliams(w)?;
    let b_k = binomial_vector(n, k)?;
    let b_rest = binomial_vector(n, n - k)?;
    let direct = k_genfunc(n).matrix.mul_vec(&b_k)?;
    let scaled: Vec<BigInt> = b_rest.iter().map(|x| x << k).collect();
    let show = |v: &[BigInt]| bracket(v);
    Ok(Check::all(
        "coordinate subspace",
        [
            Check::values("W = b(k)", n, "W", &m.w.to_string(), &show(&b_k)),
            Check::values("W⊥ = b(n−k)", n, "W⊥", &m.w_perp.to_string(), &show(&b_rest)),
            Check::values("K·b(k) = 2^k·b(n−k)", n, "transform", &show(&direct), &show(&scaled)),
            Check::values("MacWilliams = binomial transform", n, "K·W", &show(&m.k_w), &show(&direct)),
        ],
    ))
}

/// A subspace of ℤ₂ⁿ spanned by up to n random vectors.
pub fn random_subspace<G: Rng>(rng: &mut G, n: usize) -> Result<BinarySubspace> {
    let count = rng.gen_range(0..=n);
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let vectors: Vec<BinaryVector> = (0..count)
        .map(|_| BinaryVector { n, bits: rng.gen::<u64>() & mask })
        .collect();
    subspace_from(n, &vectors)
}

/// The transform on `count` seeded random subspaces with 1 ≤ n ≤ n_max,
/// plus K(K·𝐖) = 2ⁿ·𝐖 on each.
pub fn random_macwilliams_check(count: usize, n_max: usize, seed: u64) -> Result<Check> {
    if n_max == 0 {
        return Err(Error::EmptyAmbient);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for _ in 0..count {
        let n = rng.gen_range(1..=n_max);
        let w = random_subspace(&mut rng, n)?;
        let check = macwilliams_check(&w)?;
        if !check.passed() {
            checks.push(check);
            break;
        }
        let m = macwilliams(&w)?;
        let twice = k_genfunc(n).matrix.mul_vec(&m.k_w)?;
        let expected: Vec<BigInt> = m.w.to_bigints().iter().map(|x| x << n).collect();
        if twice != expected {
            checks.push(Check::values("K(K·W) = 2ⁿ·W", n, w.to_string(), &bracket(&twice), &bracket(&expected)));
            break;
        }
    }
    Ok(Check::all(format!("MacWilliams on {count} random subspaces"), checks))
}
