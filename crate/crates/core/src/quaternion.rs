//! Hamilton and split quaternions over the rationals.
//!
//! Coordinates are (a, b, c, d) on the basis (1, i, j, k) or (1, i, F, G).
//! Split units satisfy i² = −1, F² = G² = 1, iF = G, FG = −i, Gi = F.

use std::fmt;

use num_rational::BigRational;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{rational, GaussianRational, Matrix, Ring};
use crate::error::{Error, Result};
use crate::report::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    Hamilton,
    Split,
}

impl Kind {
    /// Names of the three imaginary units.
    pub fn units(self) -> [&'static str; 3] {
        match self {
            Kind::Hamilton => ["i", "j", "k"],
            Kind::Split => ["i", "F", "G"],
        }
    }

    /// Basis product e_m·e_n as (sign, index). Index 0 is the unit 1.
    fn table(self, m: usize, n: usize) -> (i8, usize) {
        if m == 0 {
            return (1, n);
        }
        if n == 0 {
            return (1, m);
        }
        match self {
            Kind::Hamilton => match (m, n) {
                (1, 1) | (2, 2) | (3, 3) => (-1, 0),
                (1, 2) => (1, 3),
                (2, 1) => (-1, 3),
                (2, 3) => (1, 1),
                (3, 2) => (-1, 1),
                (3, 1) => (1, 2),
                _ => (-1, 2),
            },
            Kind::Split => match (m, n) {
                (1, 1) => (-1, 0),
                (2, 2) | (3, 3) => (1, 0),
                (1, 2) => (1, 3),
                (2, 1) => (-1, 3),
                (2, 3) => (-1, 1),
                (3, 2) => (1, 1),
                (3, 1) => (1, 2),
                _ => (-1, 2),
            },
        }
    }

    /// Sign of eₘ² in the norm: ‖q‖² = a² + b² ± c² ± d².
    fn metric(self, m: usize) -> i8 {
        match (self, m) {
            (Kind::Split, 2 | 3) => -1,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub kind: Kind,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn new(kind: Kind, a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Quaternion { kind, a, b, c, d }
    }

    pub fn from_ints(kind: Kind, a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::from_coords(kind, [a, b, c, d].map(|x| rational(x, 1)))
    }

    fn from_coords(kind: Kind, [a, b, c, d]: [BigRational; 4]) -> Self {
        Quaternion { kind, a, b, c, d }
    }

    fn coords(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn scalar(kind: Kind, a: BigRational) -> Self {
        let z = BigRational::zero();
        Quaternion::new(kind, a, z.clone(), z.clone(), z)
    }

    pub fn one(kind: Kind) -> Self {
        Self::from_ints(kind, 1, 0, 0, 0)
    }

    pub fn zero(kind: Kind) -> Self {
        Self::from_ints(kind, 0, 0, 0, 0)
    }

    /// The basis element e_m, m ∈ 0..4.
    pub fn unit(kind: Kind, m: usize) -> Self {
        let mut c = [0i64; 4];
        c[m] = 1;
        Self::from_ints(kind, c[0], c[1], c[2], c[3])
    }

    pub fn i(kind: Kind) -> Self {
        Self::unit(kind, 1)
    }

    pub fn j(kind: Kind) -> Self {
        Self::unit(kind, 2)
    }

    pub fn k(kind: Kind) -> Self {
        Self::unit(kind, 3)
    }

    pub fn is_pure(&self) -> bool {
        self.a.is_zero()
    }

    fn same_kind(&self, other: &Quaternion) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        Ok(())
    }

    fn require_pure(&self) -> Result<()> {
        if !self.is_pure() {
            return Err(Error::NotPure(self.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Quaternion) -> Result<Quaternion> {
        self.same_kind(other)?;
        let (x, y) = (self.coords(), other.coords());
        Ok(Self::from_coords(self.kind, std::array::from_fn(|m| x[m] + y[m])))
    }

    pub fn sub(&self, other: &Quaternion) -> Result<Quaternion> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Quaternion {
        self.scale(&rational(-1, 1))
    }

    pub fn scale(&self, s: &BigRational) -> Quaternion {
        Self::from_coords(self.kind, self.coords().map(|x| x * s))
    }

    pub fn mul(&self, other: &Quaternion) -> Result<Quaternion> {
        self.same_kind(other)?;
        let mut out: [BigRational; 4] = std::array::from_fn(|_| BigRational::zero());
        for (m, x) in self.coords().into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (n, y) in other.coords().into_iter().enumerate() {
                let (sign, idx) = self.kind.table(m, n);
                let term = x * y;
                out[idx] = if sign > 0 { &out[idx] + term } else { &out[idx] - term };
            }
        }
        Ok(Self::from_coords(self.kind, out))
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.kind, self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// q·q̄
    pub fn norm2(&self) -> BigRational {
        self.coords()
            .into_iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (m, x)| {
                let sq = x * x;
                if self.kind.metric(m) > 0 {
                    acc + sq
                } else {
                    acc - sq
                }
            })
    }

    pub fn inverse(&self) -> Result<Quaternion> {
        let n = self.norm2();
        if n.is_zero() {
            return Err(Error::NullQuaternion);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    /// Pu q
    pub fn pure(&self) -> Quaternion {
        Quaternion::new(self.kind, BigRational::zero(), self.b.clone(), self.c.clone(), self.d.clone())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.kind.units();
        let mut wrote = false;
        for (m, x) in self.coords().into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let negative = x < &BigRational::zero();
            let mag = if negative { -x } else { x.clone() };
            match (wrote, negative) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            let unit_mag = mag == rational(1, 1);
            match (m, unit_mag, mag.is_integer()) {
                (0, _, _) => write!(f, "{mag}")?,
                (_, true, _) => f.write_str(names[m - 1])?,
                (_, false, true) => write!(f, "{mag}{}", names[m - 1])?,
                (_, false, false) => write!(f, "({mag}){}", names[m - 1])?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn q_mul(p: &Quaternion, q: &Quaternion) -> Result<Quaternion> {
    p.mul(q)
}

pub fn q_conj(q: &Quaternion) -> Quaternion {
    q.conj()
}

pub fn q_norm2(q: &Quaternion) -> BigRational {
    q.norm2()
}

pub fn q_inverse(q: &Quaternion) -> Result<Quaternion> {
    q.inverse()
}

pub fn q_pure(q: &Quaternion) -> Quaternion {
    q.pure()
}

/// 2×2 matrix image of a quaternion: real for split, complex for Hamilton.
#[derive(Debug, Clone, PartialEq)]
pub enum QuaternionMatrix {
    Real(Matrix<BigRational>),
    Complex(Matrix<GaussianRational>),
}

impl QuaternionMatrix {
    pub fn mul(&self, other: &QuaternionMatrix) -> Result<QuaternionMatrix> {
        match (self, other) {
            (Self::Real(x), Self::Real(y)) => Ok(Self::Real(x.mul(y)?)),
            (Self::Complex(x), Self::Complex(y)) => Ok(Self::Complex(x.mul(y)?)),
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn trace_is_zero(&self) -> bool {
        match self {
            Self::Real(m) => m.trace().is_zero(),
            Self::Complex(m) => m.trace().is_zero(),
        }
    }
}

impl fmt::Display for QuaternionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Real(m) => m.fmt(f),
            Self::Complex(m) => m.fmt(f),
        }
    }
}

/// Split: i ↦ [[0,1],[−1,0]], F ↦ [[0,1],[1,0]], G ↦ [[1,0],[0,−1]].
/// Hamilton: a+bi+cj+dk ↦ [[a+di, b+ci], [−b+ci, a−di]].
pub fn to_matrix2(q: &Quaternion) -> QuaternionMatrix {
    let (a, b, c, d) = (&q.a, &q.b, &q.c, &q.d);
    match q.kind {
        Kind::Split => QuaternionMatrix::Real(
            Matrix::from_rows(vec![vec![a + d, b + c], vec![c - b, a - d]]).expect("2x2"),
        ),
        Kind::Hamilton => {
            let g = |re: BigRational, im: BigRational| GaussianRational::new(re, im);
            QuaternionMatrix::Complex(
                Matrix::from_rows(vec![
                    vec![g(a.clone(), d.clone()), g(b.clone(), c.clone())],
                    vec![g(-b, c.clone()), g(a.clone(), -d)],
                ])
                .expect("2x2"),
            )
        }
    }
}

/// g v g⁻¹
pub fn adjoint_act(g: &Quaternion, v: &Quaternion) -> Result<Quaternion> {
    v.require_pure()?;
    g.mul(v)?.mul(&g.inverse()?)
}

/// −q v q⁻¹, the reflection in the plane orthogonal to q.
pub fn reflect(q: &Quaternion, v: &Quaternion) -> Result<Quaternion> {
    q.require_pure()?;
    Ok(adjoint_act(q, v)?.neg())
}

/// ½(uv − vu)
pub fn lie_bracket(u: &Quaternion, v: &Quaternion) -> Result<Quaternion> {
    u.require_pure()?;
    v.require_pure()?;
    Ok(u.mul(v)?.sub(&v.mul(u)?)?.scale(&rational(1, 2)))
}

/// Split H = F + G.
pub fn hadamard_quaternion() -> Quaternion {
    Quaternion::from_ints(Kind::Split, 0, 0, 1, 1)
}

/// The light-like pair and the timelike unit of the split pure space.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotropicBasis {
    /// ½(F + i)
    pub r: Quaternion,
    /// ½(F − i)
    pub l: Quaternion,
    /// i
    pub n: Quaternion,
}

pub fn isotropic_basis() -> IsotropicBasis {
    let half = rational(1, 2);
    IsotropicBasis {
        r: Quaternion::from_ints(Kind::Split, 0, 1, 1, 0).scale(&half),
        l: Quaternion::from_ints(Kind::Split, 0, -1, 1, 0).scale(&half),
        n: Quaternion::i(Kind::Split),
    }
}

/// Pure split quaternion t·i + x·F + y·G.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinkowskiVector {
    pub t: BigRational,
    pub x: BigRational,
    pub y: BigRational,
}

impl MinkowskiVector {
    pub fn new(t: BigRational, x: BigRational, y: BigRational) -> Self {
        MinkowskiVector { t, x, y }
    }

    /// t² − x² − y²
    pub fn norm2(&self) -> BigRational {
        &self.t * &self.t - &self.x * &self.x - &self.y * &self.y
    }

    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(
            Kind::Split,
            BigRational::zero(),
            self.t.clone(),
            self.x.clone(),
            self.y.clone(),
        )
    }

    pub fn from_quaternion(q: &Quaternion) -> Result<Self> {
        if q.kind != Kind::Split {
            return Err(Error::KindMismatch);
        }
        q.require_pure()?;
        Ok(MinkowskiVector::new(q.b.clone(), q.c.clone(), q.d.clone()))
    }
}

/// Random quaternion with coordinates p/q, |p| ≤ 9, 1 ≤ q ≤ 6.
pub fn random_quaternion<G: rand::Rng>(rng: &mut G, kind: Kind) -> Quaternion {
    let mut coord = || rational(rng.gen_range(-9..=9), rng.gen_range(1..=6));
    let (a, b, c, d) = (coord(), coord(), coord(), coord());
    Quaternion::new(kind, a, b, c, d)
}

fn values_check(name: &str, lhs: &Quaternion, rhs: &Quaternion) -> Check {
    Check::values(name, 1, name, lhs, rhs)
}

fn product(p: &Quaternion, q: &Quaternion) -> Quaternion {
    p.mul(q).expect("same kind")
}

/// Every listed product rule of the kind's table, plus agreement of all
/// sixteen basis products with the matrix representation.
pub fn multiplication_table_check(kind: Kind) -> Check {
    let e = |m| Quaternion::unit(kind, m);
    let one = Quaternion::one(kind);
    let neg = |q: Quaternion| q.neg();
    let rules: Vec<(String, Quaternion, Quaternion)> = match kind {
        Kind::Hamilton => vec![
            ("i² = −1".into(), product(&e(1), &e(1)), neg(one.clone())),
            ("j² = −1".into(), product(&e(2), &e(2)), neg(one.clone())),
            ("k² = −1".into(), product(&e(3), &e(3)), neg(one.clone())),
            ("ij = k".into(), product(&e(1), &e(2)), e(3)),
            ("ji = −k".into(), product(&e(2), &e(1)), neg(e(3))),
            ("jk = i".into(), product(&e(2), &e(3)), e(1)),
            ("kj = −i".into(), product(&e(3), &e(2)), neg(e(1))),
            ("ki = j".into(), product(&e(3), &e(1)), e(2)),
            ("ik = −j".into(), product(&e(1), &e(3)), neg(e(2))),
            ("ijk = −1".into(), product(&product(&e(1), &e(2)), &e(3)), neg(one.clone())),
        ],
        Kind::Split => vec![
            ("i² = −1".into(), product(&e(1), &e(1)), neg(one.clone())),
            ("F² = 1".into(), product(&e(2), &e(2)), one.clone()),
            ("G² = 1".into(), product(&e(3), &e(3)), one.clone()),
            ("iF = G".into(), product(&e(1), &e(2)), e(3)),
            ("Fi = −G".into(), product(&e(2), &e(1)), neg(e(3))),
            ("FG = −i".into(), product(&e(2), &e(3)), neg(e(1))),
            ("GF = i".into(), product(&e(3), &e(2)), e(1)),
            ("Gi = F".into(), product(&e(3), &e(1)), e(2)),
            ("iG = −F".into(), product(&e(1), &e(3)), neg(e(2))),
        ],
    };
    let mut checks: Vec<Check> = rules.iter().map(|(n, l, r)| values_check(n, l, r)).collect();
    for m in 0..4 {
        for n in 0..4 {
            let lhs = to_matrix2(&product(&e(m), &e(n)));
            let rhs = to_matrix2(&e(m)).mul(&to_matrix2(&e(n))).expect("same kind");
            let name = format!("rep(e{m}e{n})");
            checks.push(Check::values(name.clone(), 1, name, &lhs, &rhs));
        }
    }
    Check::all(format!("{kind:?} multiplication table"), checks)
}

/// [i,F] = G, [F,G] = −i, [G,i] = F for split; [i,j] = k and cyclic for Hamilton.
pub fn commutation_check(kind: Kind) -> Check {
    let e = |m| Quaternion::unit(kind, m);
    let br = |x: usize, y: usize| lie_bracket(&e(x), &e(y)).expect("pure");
    let [u1, u2, u3] = kind.units();
    let expected = match kind {
        Kind::Hamilton => [e(3), e(1), e(2)],
        Kind::Split => [e(3), e(1).neg(), e(2)],
    };
    let got = [br(1, 2), br(2, 3), br(3, 1)];
    let names = [format!("[{u1},{u2}]"), format!("[{u2},{u3}]"), format!("[{u3},{u1}]")];
    Check::all(
        format!("{kind:?} commutation"),
        (0..3).map(|t| values_check(&names[t], &got[t], &expected[t])),
    )
}

/// FH = HG = 1 − i, as quaternions and as 2×2 matrices.
pub fn jhhk_check() -> Check {
    let f = Quaternion::j(Kind::Split);
    let g = Quaternion::k(Kind::Split);
    let h = hadamard_quaternion();
    let target = Quaternion::from_ints(Kind::Split, 1, -1, 0, 0);
    let fh = product(&f, &h);
    let hg = product(&h, &g);
    let matrix_fh = to_matrix2(&f).mul(&to_matrix2(&h)).expect("split");
    let matrix_hg = to_matrix2(&h).mul(&to_matrix2(&g)).expect("split");
    Check::all(
        "FH = HG",
        [
            values_check("FH", &fh, &target),
            values_check("HG", &hg, &target),
            Check::values("matrix FH = HG", 1, "2x2", &matrix_fh, &matrix_hg),
        ],
    )
}

/// One conjugation claim g v g⁻¹ = w.
pub fn conjugation_check(name: &str, g: &Quaternion, v: &Quaternion, expected: &Quaternion) -> Check {
    match adjoint_act(g, v) {
        Ok(got) => values_check(name, &got, expected),
        Err(e) => Check::values(name, 1, name, &e.to_string(), &expected.to_string()),
    }
}

/// How H acts by conjugation on i, F, G and the isotropic basis. H swaps
/// F and G and negates i, so it sends R = ½(F+i) to ½(G−i) and
/// L = ½(F−i) to ½(G+i).
pub fn hadamard_action_check() -> Check {
    let h = hadamard_quaternion();
    let basis = isotropic_basis();
    let (i, f, g) = (
        Quaternion::i(Kind::Split),
        Quaternion::j(Kind::Split),
        Quaternion::k(Kind::Split),
    );
    let half = rational(1, 2);
    let g_plus_i = g.add(&i).expect("split").scale(&half);
    let g_minus_i = g.sub(&i).expect("split").scale(&half);
    Check::all(
        "H conjugation",
        [
            conjugation_check("HiH⁻¹ = −i", &h, &i, &i.neg()),
            conjugation_check("HFH⁻¹ = G", &h, &f, &g),
            conjugation_check("HGH⁻¹ = F", &h, &g, &f),
            conjugation_check("HNH⁻¹ = −N", &h, &basis.n, &basis.n.neg()),
            conjugation_check("HLH⁻¹ = ½(G+i)", &h, &basis.l, &g_plus_i),
            conjugation_check("HRH⁻¹ = ½(G−i)", &h, &basis.r, &g_minus_i),
        ],
    )
    .with_note("H conjugation maps the light-like R, L to ½(G∓i), not to −L, −R")
}

/// The ladder claims HLH⁻¹ = −R and HRH⁻¹ = −L, checked literally.
pub fn ladder_swap_check() -> Check {
    let h = hadamard_quaternion();
    let basis = isotropic_basis();
    Check::all(
        "H swaps ladders",
        [
            conjugation_check("HLH⁻¹ = −R", &h, &basis.l, &basis.r.neg()),
            conjugation_check("HRH⁻¹ = −L", &h, &basis.r, &basis.l.neg()),
        ],
    )
}

/// Norm multiplicativity and (pq)̄ = q̄p̄ on seeded random pairs.
pub fn random_algebra_check(kind: Kind, count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..count {
        let p = random_quaternion(&mut rng, kind);
        let q = random_quaternion(&mut rng, kind);
        let pq = product(&p, &q);
        let location = format!("pair {t}: p = {p}, q = {q}");
        let lhs = pq.norm2();
        let rhs = p.norm2() * q.norm2();
        if lhs != rhs {
            return Check::values("‖pq‖² = ‖p‖²‖q‖²", t, location, &lhs, &rhs);
        }
        let lhs = pq.conj();
        let rhs = product(&q.conj(), &p.conj());
        if lhs != rhs {
            return Check::values("(pq)̄ = q̄p̄", t, location, &lhs, &rhs);
        }
    }
    Check::pass(format!("{kind:?} random norm and conjugation ({count} pairs)"))
}
