use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use krawtchouk::algebra::{BivariatePoly, Matrix, Ring};
use krawtchouk::generalized::{k_general, k_phase, snake_csv, snakes, snakes_svg, Phase, PhaseKrawtchouk};
use krawtchouk::krawtchouk::{
    covector_transform, k_genfunc, k_symmetric, kac_matrix, lambda_matrix, vector_transform,
};
use krawtchouk::macwilliams::{macwilliams, parse_basis, subspace_from};
use krawtchouk::pathsum::{path_sum_with, PhaseRule};
use krawtchouk::pyramid::{pyramid_plane, sylvester, Direction};
use krawtchouk::spectral::binomial_matrix;
use krawtchouk::verify::{all_pass, parse_suites, run_suites};
use krawtchouk::Error;

/// Krawtchouk matrices: construction, transforms and identity checks.
#[derive(Parser)]
#[command(name = "krawtchouk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Krawtchouk,
    Symmetric,
    Kac,
    Lambda,
    Binomial,
    Sylvester,
    General,
    Phase,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Quantum,
    Ring,
}

#[derive(Clone, Copy, ValueEnum)]
enum SnakeFormat {
    Svg,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a matrix.
    Gen {
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        /// α for `general`; symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// β for `general`; symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// φ for `phase`: pi/2, pi, 3pi/2 or radians.
        #[arg(long, default_value = "pi/2", allow_hyphen_values = true)]
        phi: String,
    },
    /// Run verification suites and print a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suites: String,
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        workers: Option<u32>,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sum of path weights over the words ending at p with quantum depth q.
    Pathsum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_enum, default_value = "quantum")]
        rule: Rule,
    },
    /// Apply K to a column vector or a row covector.
    Transform {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "covector", required_unless_present = "covector")]
        vector: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        covector: Option<String>,
    },
    /// Columns of K(φ) as polylines in the complex plane.
    Snake {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "pi/2", allow_hyphen_values = true)]
        phi: String,
        /// Directory for snakes.svg and column_<q>.csv; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "svg")]
        format: SnakeFormat,
    },
    /// Check 2^dim W · W⊥ = K·W for a subspace of Z₂ⁿ.
    Macwilliams {
        #[arg(long)]
        n: usize,
        /// Comma-separated bit strings, e.g. 110,001.
        #[arg(long)]
        basis: String,
    },
    /// Print a Pascal-like plane of the Krawtchouk pyramid.
    Pyramid {
        #[arg(long)]
        direction: String,
        #[arg(long, default_value_t = 0)]
        depth: usize,
        #[arg(long, default_value_t = 6)]
        rows: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit<R: Ring>(m: &Matrix<R>, format: Format) -> String {
    match format {
        Format::Pretty => m.to_string(),
        Format::Json => m.to_json_string() + "\n",
        Format::Csv => m.to_csv(),
    }
}

fn parse_list(text: &str) -> Result<Vec<BigRational>, Error> {
    text.split(',').map(|t| BigRational::parse_value(t.trim())).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn gen(kind: Kind, n: usize, format: Format, alpha: Option<String>, beta: Option<String>, phi: &str) -> Result<String, Failure> {
    Ok(match kind {
        Kind::Krawtchouk => emit(&k_genfunc(n).matrix, format),
        Kind::Symmetric => emit(&k_symmetric(n), format),
        Kind::Kac => emit(&kac_matrix(n), format),
        Kind::Lambda => emit(&lambda_matrix(n), format),
        Kind::Binomial => emit(&binomial_matrix(n), format),
        Kind::Sylvester => emit(&sylvester(n)?, format),
        Kind::General => match (alpha, beta) {
            (None, None) => emit(&k_general(n, &BivariatePoly::alpha(), &BivariatePoly::beta()).matrix, format),
            (a, b) => {
                let parse = |v: Option<String>, sym: BivariatePoly| -> Result<BivariatePoly, Error> {
                    v.map_or(Ok(sym), |t| BivariatePoly::parse_value(&t))
                };
                let a = parse(a, BivariatePoly::alpha())?;
                let b = parse(b, BivariatePoly::beta())?;
                match (a.constant(), b.constant()) {
                    (Some(x), Some(y)) => emit(&k_general(n, &x, &y).matrix, format),
                    _ => emit(&k_general(n, &a, &b).matrix, format),
                }
            }
        },
        Kind::Phase => match k_phase(n, phi.parse::<Phase>()?) {
            PhaseKrawtchouk::Exact(m) => emit(&m, format),
            PhaseKrawtchouk::Float(m) => emit(&m, format),
        },
    })
}

fn pathsum(n: usize, p: usize, q: usize, alpha: &str, beta: &str, rule: Rule) -> Result<String, Failure> {
    let rule = match rule {
        Rule::Quantum => PhaseRule::Quantum,
        Rule::Ring => PhaseRule::Ring,
    };
    let a = BivariatePoly::parse_value(alpha)?;
    let b = BivariatePoly::parse_value(beta)?;
    let value = match (a.constant(), b.constant()) {
        (Some(x), Some(y)) => path_sum_with::<BigInt>(rule, n, p, q, &x, &y)?.to_string(),
        _ => path_sum_with(rule, n, p, q, &a, &b)?.to_string(),
    };
    Ok(value + "\n")
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Gen { kind, n, format, alpha, beta, phi } => gen(kind, n, format, alpha, beta, &phi),
        Command::Verify { suites, n_max, seed, workers, out } => {
            let suites = parse_suites(&suites)?;
            let reports = match workers {
                Some(w) => rayon::ThreadPoolBuilder::new()
                    .num_threads(w as usize)
                    .build()
                    .map_err(|e| Failure::Usage(e.to_string()))?
                    .install(|| run_suites(&suites, n_max, seed)),
                None => run_suites(&suites, n_max, seed),
            };
            for r in &reports {
                let status = if r.pass { "pass" } else { "FAIL" };
                eprintln!("{:<26} {status}  ({} checks)", r.suite, r.checks);
                for note in &r.notes {
                    eprintln!("    note: {note}");
                }
            }
            let json = serde_json::to_string_pretty(&reports).expect("serializable report") + "\n";
            if let Some(path) = out {
                fs::write(&path, &json).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            print!("{json}");
            if all_pass(&reports) {
                Ok(String::new())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Pathsum { n, p, q, alpha, beta, rule } => pathsum(n, p, q, &alpha, &beta, rule),
        Command::Transform { n, vector, covector } => {
            let out = match (vector, covector) {
                (Some(v), _) => vector_transform(n, &parse_list(&v)?)?,
                (None, Some(c)) => covector_transform(n, &parse_list(&c)?)?,
                (None, None) => return Err(Failure::Usage("give --vector or --covector".into())),
            };
            Ok(join(&out) + "\n")
        }
        Command::Snake { n, phi, out, format } => {
            let s = snakes(n, phi.parse::<Phase>()?);
            match out {
                Some(dir) => {
                    let io = |e: std::io::Error| Failure::Usage(format!("{}: {e}", dir.display()));
                    fs::create_dir_all(&dir).map_err(io)?;
                    fs::write(dir.join("snakes.svg"), snakes_svg(&s)).map_err(io)?;
                    for snake in &s {
                        fs::write(dir.join(format!("column_{}.csv", snake.column)), snake_csv(snake)).map_err(io)?;
                    }
                    Ok(format!("wrote {} columns to {}\n", s.len(), dir.display()))
                }
                None => Ok(match format {
                    SnakeFormat::Svg => snakes_svg(&s),
                    SnakeFormat::Csv => s.iter().map(snake_csv).collect::<Vec<_>>().join("\n"),
                }),
            }
        }
        Command::Macwilliams { n, basis } => {
            let w = subspace_from(n, &parse_basis(&basis)?)?;
            let m = macwilliams(&w)?;
            if m.holds() {
                Ok(format!("{m}\n"))
            } else {
                println!("{m}");
                Err(Failure::Check)
            }
        }
        Command::Pyramid { direction, depth, rows, format } => {
            let plane = pyramid_plane(direction.parse::<Direction>()?, depth, rows)?;
            Ok(match format {
                Format::Csv => plane.to_csv(),
                Format::Pretty => plane.to_string(),
                Format::Json => {
                    let rows: Vec<Vec<String>> = plane
                        .rows
                        .iter()
                        .map(|r| r.iter().map(|v| v.to_string()).collect())
                        .collect();
                    serde_json::json!({
                        "direction": plane.direction,
                        "depth": plane.depth,
                        "rows": rows,
                    })
                    .to_string()
                        + "\n"
                }
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
