//! Named verification suites and their machine-readable reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::BivariatePoly;
use crate::error::{Error, Result};
use crate::generalized::{general_cross_check, k_symbolic, specialization_check, trace_identity_check};
use crate::krawtchouk::{
    exponential_covector_check, involution_check, k_binsum, k_genfunc, master_check, ortho_check,
    KrawtchoukMatrix,
};
use crate::macwilliams::{parse_basis, random_macwilliams_check, subspace_from};
use crate::pathsum::{k_pathsum, ring_oracle_matrix, twiston_matrix};
use crate::pyramid::{k_pyramid, plane_check, pyramid_cross_check, reduction_check, weight_labels};
use crate::quaternion::{
    commutation_check, hadamard_action_check, jhhk_check, multiplication_table_check,
    random_algebra_check, Kind,
};
use crate::report::{Check, Failure};
use crate::spectral::{binomial_transform_check, eigen_check, k_from_bdbinv, skew_factorization_check};
use crate::sympow::{
    box_check, k_symtensor, lrn_relations_check, master_derived_check, skew_derived_check,
    symmetry_check,
};

/// Path-sum, twiston and Sylvester work stops here whatever n_max is.
pub const ENUMERATION_CAP: usize = 12;
/// Symbolic (α, β) identities stop here.
pub const SYMBOLIC_CAP: usize = 8;
/// ℤ[√2] spectral checks stop here.
pub const SPECTRAL_CAP: usize = 10;
/// Kronecker-sum powers (2ⁿ×2ⁿ products) stop here.
pub const KRONECKER_CAP: usize = 7;
/// Random quaternion pairs per kind.
pub const QUATERNION_SAMPLES: usize = 1000;
/// Random subspaces in the MacWilliams suite.
pub const SUBSPACE_SAMPLES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    ConstructionEquivalence,
    Cross,
    HadamardReduction,
    Involution,
    Macwilliams,
    Master,
    Ortho,
    Pyramid,
    Quaternion,
    Spectral,
    Sympow,
    Trace,
}

impl Suite {
    /// Every suite, in name order.
    pub const ALL: [Suite; 12] = [
        Suite::ConstructionEquivalence,
        Suite::Cross,
        Suite::HadamardReduction,
        Suite::Involution,
        Suite::Macwilliams,
        Suite::Master,
        Suite::Ortho,
        Suite::Pyramid,
        Suite::Quaternion,
        Suite::Spectral,
        Suite::Sympow,
        Suite::Trace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ConstructionEquivalence => "construction-equivalence",
            Suite::Cross => "cross",
            Suite::HadamardReduction => "hadamard-reduction",
            Suite::Involution => "involution",
            Suite::Macwilliams => "macwilliams",
            Suite::Master => "master",
            Suite::Ortho => "ortho",
            Suite::Pyramid => "pyramid",
            Suite::Quaternion => "quaternion",
            Suite::Spectral => "spectral",
            Suite::Sympow => "sympow",
            Suite::Trace => "trace",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim())
            .ok_or_else(|| Error::parse("suite", s))
    }
}

/// Parses "master,ortho" or "all" into a sorted, duplicate-free list.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::parse("suite list", text));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Outcome of one suite. Serializes as
/// {"suite", "n_max", "pass", "failures": [{"n", "location", "lhs", "rhs"}]}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n_max: usize,
    pub pass: bool,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub checks: usize,
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn from_checks(suite: Suite, n_max: usize, checks: Vec<Check>) -> Self {
        let mut failures = Vec::new();
        let mut notes: Vec<String> = Vec::new();
        for c in &checks {
            if let Some(f) = &c.failure {
                let mut f = f.clone();
                f.location = format!("{}: {}", c.name, f.location);
                failures.push(f);
            }
            for note in &c.notes {
                if !notes.contains(note) {
                    notes.push(note.clone());
                }
            }
        }
        SuiteReport {
            suite: suite.name().to_string(),
            n_max,
            pass: failures.is_empty(),
            failures,
            checks: checks.len(),
            notes,
        }
    }

    fn error(suite: Suite, n_max: usize, e: Error) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            n_max,
            pass: false,
            failures: vec![Failure {
                n: n_max,
                location: "suite".into(),
                lhs: e.to_string(),
                rhs: "no error".into(),
            }],
            checks: 0,
            notes: Vec::new(),
        }
    }
}

fn same(n: usize, a: &KrawtchoukMatrix, b: &KrawtchoukMatrix) -> Check {
    Check::matrices(format!("{} = {}", a.method, b.method), n, &a.matrix, &b.matrix)
}

fn construction_equivalence(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let g = k_genfunc(n);
        checks.push(same(n, &g, &k_binsum(n)));
        checks.push(same(n, &g, &k_symtensor(n)));
        checks.push(same(n, &g, &k_pyramid(n)));
        checks.push(same(n, &g, &k_from_bdbinv(n)));
        if n <= ENUMERATION_CAP {
            checks.push(same(n, &g, &k_pathsum(n)?));
            checks.push(Check::matrices("twiston energies = K", n, &twiston_matrix(n)?, &g.matrix));
        }
    }
    Ok(checks)
}

fn symbolic_pair() -> (BivariatePoly, BivariatePoly) {
    (BivariatePoly::alpha(), BivariatePoly::beta())
}

fn cross(n_max: usize) -> Result<Vec<Check>> {
    let (a, b) = symbolic_pair();
    let (one, minus) = (BigInt::from(1), BigInt::from(-1));
    let mut checks = Vec::new();
    for n in 0..=n_max.min(SYMBOLIC_CAP) {
        checks.push(general_cross_check(n, &a, &b));
        checks.push(Check::matrices(
            "path sums with ring phases = K(α,β)",
            n,
            &ring_oracle_matrix(n, &a, &b)?,
            &k_symbolic(n).matrix,
        ));
    }
    for n in 0..=n_max {
        checks.push(general_cross_check(n, &one, &minus));
        checks.push(specialization_check(n));
    }
    checks.push(pyramid_cross_check(n_max.max(2))?);
    Ok(checks)
}

fn trace(n_max: usize) -> Vec<Check> {
    let (a, b) = symbolic_pair();
    let (one, minus) = (BigInt::from(1), BigInt::from(-1));
    let mut checks = Vec::new();
    for n in 0..=n_max {
        if n <= SYMBOLIC_CAP {
            checks.push(trace_identity_check(n, &a, &b));
        }
        checks.push(trace_identity_check(n, &one, &minus));
    }
    checks
}

fn hadamard_reduction(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max.min(ENUMERATION_CAP) {
        checks.push(reduction_check(n)?);
        checks.push(weight_labels(n)?.popcount_check());
    }
    Ok(checks)
}

fn macwilliams(n_max: usize, seed: u64) -> Result<Vec<Check>> {
    let worked = subspace_from(3, &parse_basis("110")?)?;
    let mut checks = vec![crate::macwilliams::macwilliams_check(&worked)?];
    for n in 1..=n_max.clamp(1, ENUMERATION_CAP) {
        for k in 0..=n {
            let units: Vec<_> = (1..=k)
                .map(|i| crate::macwilliams::BinaryVector::unit(n, i))
                .collect::<Result<_>>()?;
            let w = subspace_from(n, &units)?;
            checks.push(crate::macwilliams::coordinate_subspace_note(&w)?);
        }
    }
    checks.push(random_macwilliams_check(
        SUBSPACE_SAMPLES,
        n_max.clamp(1, ENUMERATION_CAP),
        seed,
    )?);
    Ok(checks)
}

fn pyramid(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = vec![pyramid_cross_check(n_max.max(2))?, plane_check(n_max, n_max + 2)?];
    for n in 0..=n_max {
        checks.push(Check::matrices("stacked pyramid = K", n, &k_pyramid(n).matrix, &k_genfunc(n).matrix));
    }
    Ok(checks)
}

fn quaternion(seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    for kind in [Kind::Hamilton, Kind::Split] {
        checks.push(multiplication_table_check(kind));
        checks.push(commutation_check(kind));
        checks.push(random_algebra_check(kind, QUATERNION_SAMPLES, seed));
    }
    checks.push(jhhk_check());
    checks.push(hadamard_action_check());
    checks
}

fn spectral(n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        checks.push(binomial_transform_check(n));
        checks.push(skew_factorization_check(n));
        checks.push(exponential_covector_check(n));
        if n <= SPECTRAL_CAP {
            checks.push(eigen_check(n));
        }
    }
    checks
}

fn sympow(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        checks.push(symmetry_check(n));
        checks.push(skew_derived_check(n));
        checks.push(lrn_relations_check(n));
        if n <= KRONECKER_CAP {
            checks.push(box_check(n)?);
        }
    }
    Ok(checks)
}

fn per_n(n_max: usize, f: impl Fn(usize) -> Check) -> Vec<Check> {
    (0..=n_max).map(f).collect()
}

/// Runs one suite for orders up to n_max. `seed` drives the random samples.
pub fn run_suite(suite: Suite, n_max: usize, seed: u64) -> SuiteReport {
    let checks: Result<Vec<Check>> = match suite {
        Suite::ConstructionEquivalence => construction_equivalence(n_max),
        Suite::Cross => cross(n_max),
        Suite::HadamardReduction => hadamard_reduction(n_max),
        Suite::Involution => Ok(per_n(n_max, involution_check)),
        Suite::Macwilliams => macwilliams(n_max, seed),
        Suite::Master => Ok(per_n(n_max, |n| {
            Check::all("master equation", [master_check(n), master_derived_check(n)])
        })),
        Suite::Ortho => Ok(per_n(n_max, ortho_check)),
        Suite::Pyramid => pyramid(n_max),
        Suite::Quaternion => Ok(quaternion(seed)),
        Suite::Spectral => Ok(spectral(n_max)),
        Suite::Sympow => sympow(n_max),
        Suite::Trace => Ok(trace(n_max)),
    };
    match checks {
        Ok(c) => SuiteReport::from_checks(suite, n_max, c),
        Err(e) => SuiteReport::error(suite, n_max, e),
    }
}

/// Runs suites in parallel; the reports come back in name order.
pub fn run_suites(suites: &[Suite], n_max: usize, seed: u64) -> Vec<SuiteReport> {
    let mut sorted = suites.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted.par_iter().map(|&s| run_suite(s, n_max, seed)).collect()
}

pub fn all_pass(reports: &[SuiteReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
