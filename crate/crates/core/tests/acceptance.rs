//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact, so the only pinned tolerances are the time
//! budgets below. A criterion listed in `EXPECTED_FAILURES` must fail; it
//! turning green is reported as an error, like any other failure.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use krawtchouk::algebra::{BivariatePoly, Matrix, Ring, RootTwo};
use krawtchouk::generalized::{
    general_cross_check, k_phase, specialization_check, trace_identity_check, Phase, PhaseKrawtchouk,
};
use krawtchouk::krawtchouk::{
    covector_transform, exponential_covector_check, involution_check, k_binsum, k_genfunc,
    k_symmetric, master_check, ortho_check, vector_transform,
};
use krawtchouk::macwilliams::{
    coordinate_subspace_note, macwilliams, parse_basis, random_subspace, subspace_from,
    BinarySubspace, BinaryVector,
};
use krawtchouk::pathsum::{oracle_matrix, twiston_matrix};
use krawtchouk::pyramid::reduce_to_symmetric;
use krawtchouk::quaternion::{
    hadamard_action_check, hadamard_quaternion, isotropic_basis, jhhk_check, ladder_swap_check,
    multiplication_table_check, random_algebra_check, Kind, Quaternion,
};
use krawtchouk::report::Check;
use krawtchouk::spectral::{binomial_transform_check, eigen_check, eigen_factors, skew_factorization_check};
use krawtchouk::sympow::{flip, grade, hadamard, master_derived_check, sym_algebra_power, sym_group_power};

/// The two light-like ladder claims HLH⁻¹ = −R, HRH⁻¹ = −L are false in
/// the split quaternions; H sends L, R to ½(G+i), ½(G−i).
const EXPECTED_FAILURES: &[u32] = &[8];

const BUDGETS: [(u32, u64); 12] = [
    (1, 1),
    (2, 30),
    (3, 5),
    (4, 5),
    (5, 5),
    (6, 10),
    (7, 1),
    (8, 2),
    (9, 30),
    (10, 20),
    (11, 1),
    (12, 60),
];

type Outcome = Result<(), String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn checked(c: Check) -> Outcome {
    match c.failure {
        None => Ok(()),
        Some(f) => Err(format!("{} at n={} {}: {} vs {}", c.name, f.n, f.location, f.lhs, f.rhs)),
    }
}

/// Column q of K holds the coefficients of (1+t)^(n−q)(1−t)^q.
fn oracle_k(n: usize) -> Matrix<BigInt> {
    let column = |q: usize| {
        let mut c = vec![BigInt::from(1)];
        for step in 0..n {
            let sign = if step < q { -1 } else { 1 };
            let mut next = vec![BigInt::from(0); c.len() + 1];
            for (i, v) in c.iter().enumerate() {
                next[i] += v;
                next[i + 1] += v * sign;
            }
            c = next;
        }
        c
    };
    let cols: Vec<_> = (0..=n).map(column).collect();
    Matrix::from_fn(n + 1, n + 1, |p, q| cols[q][p].clone())
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

const TABLE_K: [&str; 8] = [
    "1\n",
    "1,1\n1,-1\n",
    "1,1,1\n2,0,-2\n1,-1,1\n",
    "1,1,1,1\n3,1,-1,-3\n3,-1,-1,3\n1,-1,1,-1\n",
    "1,1,1,1,1\n4,2,0,-2,-4\n6,0,-2,0,6\n4,-2,0,2,-4\n1,-1,1,-1,1\n",
    "1,1,1,1,1,1\n5,3,1,-1,-3,-5\n10,2,-2,-2,2,10\n10,-2,-2,2,2,-10\n5,-3,1,1,-3,5\n1,-1,1,-1,1,-1\n",
    "1,1,1,1,1,1,1\n6,4,2,0,-2,-4,-6\n15,5,-1,-3,-1,5,15\n20,0,-4,0,4,0,-20\n\
     15,-5,-1,3,-1,-5,15\n6,-4,2,0,-2,4,-6\n1,-1,1,-1,1,-1,1\n",
    "1,1,1,1,1,1,1,1\n7,5,3,1,-1,-3,-5,-7\n21,9,1,-3,-3,1,9,21\n35,5,-5,-3,3,5,-5,-35\n\
     35,-5,-5,3,3,-5,-5,35\n21,-9,1,3,-3,-1,9,-21\n7,-5,3,-1,-1,3,-5,7\n1,-1,1,-1,1,-1,1,-1\n",
];

const TABLE_S: [&str; 6] = [
    "1\n",
    "1,1\n1,-1\n",
    "1,2,1\n2,0,-2\n1,-2,1\n",
    "1,3,3,1\n3,3,-3,-3\n3,-3,-3,3\n1,-3,3,-1\n",
    "1,4,6,4,1\n4,8,0,-8,-4\n6,0,-12,0,6\n4,-8,0,8,-4\n1,-4,6,-4,1\n",
    "1,5,10,10,5,1\n5,15,10,-10,-15,-5\n10,10,-20,-20,10,10\n10,-10,-20,20,10,-10\n\
     5,-15,10,10,-15,5\n1,-5,10,-10,5,-1\n",
];

const TABLE_K_I: [&str; 4] = [
    "1,1\n1,i\n",
    "1,1,1\n2,1+i,2i\n1,i,-1\n",
    "1,1,1,1\n3,2+i,1+2i,3i\n3,1+2i,-1+2i,-3\n1,i,-1,-i\n",
    "1,1,1,1,1\n4,3+i,2+2i,1+3i,4i\n6,3+3i,4i,-3+3i,-6\n4,1+3i,-2+2i,-3-i,-4i\n1,i,-1,-i,1\n",
];

fn tables() -> Outcome {
    for (n, want) in TABLE_K.iter().enumerate() {
        let got = k_genfunc(n).matrix.to_csv();
        ensure(&got == want, || format!("K^({n}):\n{got}expected\n{want}"))?;
    }
    for (n, want) in TABLE_S.iter().enumerate() {
        let got = k_symmetric(n).to_csv();
        ensure(&got == want, || format!("S^({n}):\n{got}expected\n{want}"))?;
    }
    Ok(())
}

fn construction_equivalence() -> Outcome {
    for n in 0..=14 {
        let want = oracle_k(n);
        let g = k_genfunc(n).matrix;
        ensure(g == want, || format!("genfunc n={n}"))?;
        ensure(k_binsum(n).matrix == want, || format!("binsum n={n}"))?;
        let h = sym_group_power(&hadamard::<BigInt>(), n).map_err(|e| e.to_string())?;
        ensure(h == want, || format!("symmetric power of H n={n}"))?;
    }
    let (one, minus) = (BigInt::from(1), BigInt::from(-1));
    for n in 0..=12 {
        let want = oracle_k(n);
        let paths = oracle_matrix(n, &one, &minus).map_err(|e| e.to_string())?;
        ensure(paths == want, || format!("path enumeration n={n}"))?;
        let twiston = twiston_matrix(n).map_err(|e| e.to_string())?;
        ensure(twiston == want, || format!("twiston energy n={n}"))?;
    }
    Ok(())
}

fn master() -> Outcome {
    for n in 0..=12 {
        checked(master_check(n))?;
        checked(master_derived_check(n))?;
        // Independently: M = ⊡ⁿF, Λ = ⊡ⁿG, K = ⊙ⁿH.
        let pow = |e: krawtchouk::Result<Matrix<BigInt>>| e.map_err(|e| e.to_string());
        let m = pow(sym_algebra_power(&flip::<BigInt>(), n))?;
        let lambda = pow(sym_algebra_power(&grade::<BigInt>(), n))?;
        let k = pow(sym_group_power(&hadamard::<BigInt>(), n))?;
        let lhs = m.mul(&k).map_err(|e| e.to_string())?;
        let rhs = k.mul(&lambda).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("⊡F·⊙H = ⊙H·⊡G fails at n={n}"))?;
        let diag: Vec<BigInt> = (0..=n).map(|i| BigInt::from(n as i64 - 2 * i as i64)).collect();
        ensure(lambda == Matrix::diag(&diag), || format!("⊡ⁿG is not diag(n−2i) at n={n}"))?;
    }
    Ok(())
}

fn involution_and_orthogonality() -> Outcome {
    for n in 0..=12 {
        checked(involution_check(n))?;
        checked(ortho_check(n))?;
        // Kᵀ·Γ⁻¹·K = 2ⁿ·Γ⁻¹ entrywise, from the oracle.
        let k = oracle_k(n);
        for i in 0..=n {
            for j in 0..=n {
                let s: BigRational = (0..=n)
                    .map(|p| BigRational::new(k.get(p, i) * k.get(p, j), binom(n, p)))
                    .sum();
                let want = if i == j {
                    BigRational::new(BigInt::from(1) << n, binom(n, i))
                } else {
                    BigRational::from_i64(0)
                };
                ensure(s == want, || format!("KᵀΓ⁻¹K at n={n}, ({i}, {j})"))?;
            }
        }
    }
    Ok(())
}

fn spectral() -> Outcome {
    for n in 0..=10 {
        checked(binomial_transform_check(n))?;
        checked(skew_factorization_check(n))?;
        checked(eigen_check(n))?;
        let values = eigen_factors(n).eigenvalues();
        let lambda = RootTwo::pow2_half(n as u32);
        for (j, v) in values.iter().enumerate() {
            let want = if 2 * j <= n { lambda.clone() } else { lambda.neg() };
            ensure(v == &want, || format!("eigenvalue {j} at n={n} is {v}"))?;
            ensure(v.mul(v) == RootTwo::from_integer(&(BigInt::from(1) << n)), || {
                format!("eigenvalue² at n={n}")
            })?;
        }
        // tr K = Σ eigenvalues.
        let trace = RootTwo::from_integer(&oracle_k(n).trace());
        let sum = values.iter().fold(RootTwo::zero(), |a, v| a.add(v));
        ensure(trace == sum, || format!("trace at n={n}: {trace} vs {sum}"))?;
    }
    Ok(())
}

fn generalized() -> Outcome {
    let (a, b) = (BivariatePoly::alpha(), BivariatePoly::beta());
    for n in 0..=8 {
        checked(general_cross_check(n, &a, &b))?;
        checked(trace_identity_check(n, &a, &b))?;
    }
    let (one, minus) = (BigInt::from(1), BigInt::from(-1));
    for n in 0..=12 {
        checked(general_cross_check(n, &one, &minus))?;
        checked(trace_identity_check(n, &one, &minus))?;
        checked(specialization_check(n))?;
    }
    Ok(())
}

fn complex_phase() -> Outcome {
    for (i, want) in TABLE_K_I.iter().enumerate() {
        let n = i + 1;
        let PhaseKrawtchouk::Exact(m) = k_phase(n, Phase::HALF_PI) else {
            return Err(format!("K(i) at n={n} is not exact"));
        };
        let got = m.to_csv();
        ensure(&got == want, || format!("K(i) n={n}:\n{got}expected\n{want}"))?;
    }
    Ok(())
}

fn quaternions() -> Outcome {
    // Row x, column y holds x·y.
    let tables = [
        (Kind::Hamilton, [["-1", "k", "-j"], ["-k", "-1", "i"], ["j", "-i", "-1"]]),
        (Kind::Split, [["-1", "G", "-F"], ["-G", "1", "-i"], ["F", "i", "1"]]),
    ];
    for (kind, table) in tables {
        for (x, row) in table.iter().enumerate() {
            for (y, want) in row.iter().enumerate() {
                let got = Quaternion::unit(kind, x + 1)
                    .mul(&Quaternion::unit(kind, y + 1))
                    .map_err(|e| e.to_string())?
                    .to_string();
                ensure(&got == want, || format!("{kind:?} table ({x}, {y}): {got}"))?;
            }
        }
        checked(multiplication_table_check(kind))?;
        checked(random_algebra_check(kind, 1000, 8))?;
    }
    checked(jhhk_check())?;
    checked(hadamard_action_check())?;
    let h = hadamard_quaternion();
    let basis = isotropic_basis();
    let conj = |v: &Quaternion| -> Result<Quaternion, String> {
        let inv = h.inverse().map_err(|e| e.to_string())?;
        h.mul(v).and_then(|x| x.mul(&inv)).map_err(|e| e.to_string())
    };
    let i = Quaternion::i(Kind::Split);
    ensure(conj(&i)? == i.neg(), || "HiH⁻¹ ≠ −i".into())?;
    ensure(conj(&basis.n)? == basis.n.neg(), || "HNH⁻¹ ≠ −N".into())?;
    let hl = conj(&basis.l)?;
    ensure(hl == basis.r.neg(), || format!("HLH⁻¹ = {hl}, −R = {}", basis.r.neg()))?;
    let hr = conj(&basis.r)?;
    ensure(hr == basis.l.neg(), || format!("HRH⁻¹ = {hr}, −L = {}", basis.l.neg()))?;
    checked(ladder_swap_check())
}

fn hadamard_reduction() -> Outcome {
    for n in 0..=12 {
        let got = reduce_to_symmetric(n).map_err(|e| e.to_string())?;
        let k = oracle_k(n);
        let want = Matrix::from_fn(n + 1, n + 1, |p, q| k.get(p, q) * binom(n, q));
        ensure(got == want, || format!("reduction n={n}"))?;
    }
    Ok(())
}

/// Weight counts of W⊥ by brute force over all of ℤ₂ⁿ.
fn perp_counts(w: &BinarySubspace) -> Vec<BigInt> {
    let n = w.ambient();
    let basis = w.basis();
    let mut counts = vec![BigInt::from(0); n + 1];
    for bits in 0..1u64 << n {
        let v = BinaryVector::new(n, bits).unwrap();
        if basis.iter().all(|b| (b.bits & bits).count_ones() % 2 == 0) {
            counts[v.weight()] += 1;
        }
    }
    counts
}

fn macwilliams_suite() -> Outcome {
    let example = subspace_from(3, &parse_basis("110").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let m = macwilliams(&example).map_err(|e| e.to_string())?;
    let want: Vec<BigInt> = [2, 2, 2, 2].map(BigInt::from).to_vec();
    ensure(m.k_w == want && m.scaled_perp() == want, || format!("n = 3 example: {m}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(500);
    for t in 0..500 {
        let n = rng.gen_range(1..=12);
        let w = random_subspace(&mut rng, n).map_err(|e| e.to_string())?;
        let m = macwilliams(&w).map_err(|e| e.to_string())?;
        let scale = BigInt::from(1) << w.dim();
        let lhs: Vec<BigInt> = perp_counts(&w).iter().map(|c| c * &scale).collect();
        ensure(lhs == m.k_w, || format!("subspace {t} ({w}): {lhs:?} vs {:?}", m.k_w))?;
    }

    for n in 1..=12 {
        for k in 0..=n {
            let units: Vec<_> = (1..=k).map(|i| BinaryVector::unit(n, i).unwrap()).collect();
            let w = subspace_from(n, &units).map_err(|e| e.to_string())?;
            checked(coordinate_subspace_note(&w).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(())
}

fn transforms() -> Outcome {
    for n in 0..=12 {
        let rat = |v: BigInt| BigRational::from_integer(v);
        for k in 0..=n {
            let b: Vec<_> = (0..=n).map(|i| rat(binom(k, i))).collect();
            let want: Vec<_> = (0..=n).map(|i| rat(binom(n - k, i) << k)).collect();
            let got = vector_transform(n, &b).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("K·b({k}) at n={n}"))?;
        }
        let pow = |base: u32| -> Vec<BigRational> {
            (0..=n).map(|i| rat(BigInt::from(base).pow((n - i) as u32))).collect()
        };
        let got = covector_transform(n, &pow(2)).map_err(|e| e.to_string())?;
        ensure(got == pow(3), || format!("[2^(n−i)]·K at n={n}"))?;
        let back = covector_transform(n, &pow(3)).map_err(|e| e.to_string())?;
        let scaled: Vec<_> = pow(2).iter().map(|x| x * rat(BigInt::from(1) << n)).collect();
        ensure(back == scaled, || format!("[3^(n−i)]·K at n={n}"))?;
        checked(exponential_covector_check(n))?;
    }
    Ok(())
}

fn end_to_end() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_krawtchouk");
    let out = Command::new(exe)
        .args(["verify", "--suites", "all", "--n-max", "6"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("verify exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let entries = report.as_array().ok_or("report is not an array")?;
    let mut names = BTreeSet::new();
    for e in entries {
        let obj = e.as_object().ok_or("entry is not an object")?;
        let keys: BTreeSet<&str> = obj.keys().map(String::as_str).collect();
        ensure(keys == BTreeSet::from(["suite", "n_max", "pass", "failures"]), || format!("keys {keys:?}"))?;
        names.insert(obj["suite"].as_str().ok_or("suite is not a string")?.to_string());
        ensure(obj["n_max"].as_u64() == Some(6), || "n_max".into())?;
        ensure(obj["pass"].as_bool() == Some(true), || format!("suite failed: {e}"))?;
        ensure(obj["failures"].as_array().is_some_and(Vec::is_empty), || "failures".into())?;
    }
    ensure(names.len() == 12, || format!("suites {names:?}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let status = Command::new(exe)
        .args(["snake", "--n", "5", "--phi", "pi/2", "--out"])
        .arg(dir.path())
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.success(), || "snake failed".into())?;
    let svg = std::fs::read_to_string(dir.path().join("snakes.svg")).map_err(|e| e.to_string())?;
    ensure(svg.matches("<polyline").count() == 5, || "svg polylines".into())?;
    let mut columns = 0;
    for q in 0..=5 {
        if let Ok(csv) = std::fs::read_to_string(dir.path().join(format!("column_{q}.csv"))) {
            columns += 1;
            let points = csv.lines().filter(|l| !l.is_empty()).count();
            ensure(points == 6, || format!("column {q} has {points} points"))?;
        }
    }
    ensure(columns == 5, || format!("{columns} column files"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "table reproduction", tables),
        (2, "construction equivalence", construction_equivalence),
        (3, "master equation", master),
        (4, "involution and orthogonality", involution_and_orthogonality),
        (5, "spectral", spectral),
        (6, "generalized identities", generalized),
        (7, "complex phase tables", complex_phase),
        (8, "quaternions", quaternions),
        (9, "hadamard reduction", hadamard_reduction),
        (10, "macwilliams", macwilliams_suite),
        (11, "transforms", transforms),
        (12, "end to end", end_to_end),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let budget = Duration::from_secs(BUDGETS.iter().find(|b| b.0 == id).unwrap().1);
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > budget {
            outcome = Err(format!("over budget: {elapsed:.2?} > {budget:?}"));
        }
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let (status, tag) = match (&outcome, expected_fail) {
            (Ok(()), false) => ("PASS", ""),
            (Err(_), true) => ("FAIL", " (expected)"),
            (Ok(()), true) => {
                unexpected += 1;
                ("PASS", " (unexpected, listed as failing)")
            }
            (Err(_), false) => {
                unexpected += 1;
                ("FAIL", "")
            }
        };
        println!("criterion {id:>2} {name:<30} {status}{tag}  {elapsed:.2?}");
        if let Err(why) = outcome {
            println!("    {}", why.replace('\n', "\n    "));
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected result(s)");
        ExitCode::FAILURE
    }
}
