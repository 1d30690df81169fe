//! Command implementations behind the `lpm-tutte` binary.
//!
//! Exit-code contract: 0 on success, 1 when a cross-check fails, 2 when the
//! input fails validation (the originating error name is printed to stderr).

mod bench;
mod verify;

use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lpm_core::{
    random_region, tutte_eval, tutte_polynomial, BivariatePoly, LatticeRegion, MonotonePath,
};

pub use bench::{run_bench, BenchMode, BenchReport};
pub use verify::{verify_region, CheckStatus, OracleLimits};

/// Name of the environment variable that lifts the oracle size guards.
pub const MAX_N_ENV: &str = "LPM_TUTTE_MAX_N";

#[derive(Parser)]
#[command(
    name = "lpm-tutte",
    version,
    about = "Exact Tutte polynomials of lattice path matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the Tutte polynomial of the region between two paths.
    Tutte {
        /// Lower bounding path over {N, E}.
        #[arg(long)]
        lower: String,
        /// Upper bounding path over {N, E}.
        #[arg(long)]
        upper: String,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Evaluate the Tutte polynomial exactly at a rational point.
    Eval {
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
        /// x value as an integer or "p/q".
        #[arg(long)]
        x: String,
        /// y value as an integer or "p/q".
        #[arg(long)]
        y: String,
    },
    /// Cross-check the sweep against the brute-force oracles and the
    /// circuit identities, either on one region or on random ones.
    Verify {
        #[arg(long, requires = "upper")]
        lower: Option<String>,
        #[arg(long, requires = "lower")]
        upper: Option<String>,
        /// Number of random regions to verify instead of a fixed pair.
        #[arg(long, conflicts_with = "lower")]
        random: Option<usize>,
        /// Largest ground-set size sampled in random mode.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Record ring-operation counts and wall times over a size ladder.
    Bench {
        #[arg(long, value_enum)]
        mode: BenchMode,
        /// Even ground-set sizes, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print a random valid region as "lower|upper".
    Random {
        /// Ground-set size (at least 2).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Text,
    Json,
    /// Print the pinch factorization and check it multiplies back.
    FactoredCheck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exits with code 2.
    Validation(String),
    /// A cross-check did not hold; exits with code 1.
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::CheckFailed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) | CliError::CheckFailed(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

/// Parses and validates a region from two path strings.
pub fn parse_region(lower: &str, upper: &str) -> Result<LatticeRegion, CliError> {
    let lower = MonotonePath::parse(lower).map_err(|e| CliError::Validation(e.to_string()))?;
    let upper = MonotonePath::parse(upper).map_err(|e| CliError::Validation(e.to_string()))?;
    LatticeRegion::new(lower, upper).map_err(|e| CliError::Validation(e.to_string()))
}

/// Parses an exact rational from "p/q" or a plain integer string.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let malformed = || CliError::Validation(format!("MalformedRational({text})"));
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| malformed())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| malformed())?;
    if denom.is_zero() {
        return Err(malformed());
    }
    Ok(BigRational::new(numer, denom))
}

/// Oracle size limits, honoring the `LPM_TUTTE_MAX_N` override.
pub fn oracle_limits() -> OracleLimits {
    match std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) => OracleLimits {
            enumeration: n,
            activities: n,
        },
        None => OracleLimits::default(),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Tutte {
            lower,
            upper,
            format,
        } => run_tutte(&lower, &upper, format),
        Command::Eval { lower, upper, x, y } => {
            let region = parse_region(&lower, &upper)?;
            let x = parse_rational(&x)?;
            let y = parse_rational(&y)?;
            println!("{}", tutte_eval(&region, &x, &y));
            Ok(())
        }
        Command::Verify {
            lower,
            upper,
            random,
            max_n,
            seed,
        } => run_verify(lower, upper, random, max_n, seed),
        Command::Bench {
            mode,
            sizes,
            seed,
            format,
        } => {
            let report = run_bench(mode, &sizes, seed)?;
            match format {
                ReportFormat::Text => print!("{report}"),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
            Ok(())
        }
        Command::Random { n, seed } => {
            if n < 2 {
                return Err(CliError::Validation(format!(
                    "InvalidArgument(--n must be at least 2, got {n})"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            println!("{}", random_region(n, &mut rng).spec_key());
            Ok(())
        }
    }
}

fn run_tutte(lower: &str, upper: &str, format: PolyFormat) -> Result<(), CliError> {
    let region = parse_region(lower, upper)?;
    let poly = tutte_polynomial(&region);
    match format {
        PolyFormat::Text => println!("{poly}"),
        PolyFormat::Json => println!("{}", poly.to_json()),
        PolyFormat::FactoredCheck => {
            let parts = region.split_at_pinches();
            let mut product = BivariatePoly::one();
            for (i, part) in parts.iter().enumerate() {
                let factor = tutte_polynomial(part);
                println!("factor {}: {} [{}]", i + 1, factor, part.spec_key());
                product = product.mul(&factor);
            }
            println!("product: {product}");
            if product == poly {
                println!("factored-check: PASS");
            } else {
                println!("factored-check: FAIL");
                return Err(CliError::CheckFailed(format!(
                    "FactoredCheckMismatch({})",
                    region.spec_key()
                )));
            }
        }
    }
    Ok(())
}

fn run_verify(
    lower: Option<String>,
    upper: Option<String>,
    random: Option<usize>,
    max_n: usize,
    seed: u64,
) -> Result<(), CliError> {
    let limits = oracle_limits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let regions: Vec<LatticeRegion> = match (lower, random) {
        (Some(lower), None) => {
            vec![parse_region(&lower, upper.as_deref().unwrap_or_default())?]
        }
        (None, Some(count)) => {
            if max_n < 2 {
                return Err(CliError::Validation(format!(
                    "InvalidArgument(--max-n must be at least 2, got {max_n})"
                )));
            }
            use rand::Rng;
            (0..count)
                .map(|_| {
                    let n = rng.random_range(2..=max_n);
                    random_region(n, &mut rng)
                })
                .collect()
        }
        _ => {
            return Err(CliError::Validation(
                "InvalidArgument(provide --lower/--upper or --random)".to_string(),
            ))
        }
    };

    let single = regions.len() == 1;
    let mut failures = Vec::new();
    for (idx, region) in regions.iter().enumerate() {
        let report = verify_region(region, &limits, &mut rng);
        let passed = report
            .iter()
            .filter(|c| c.status == CheckStatus::Pass)
            .count();
        let skipped = report
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Skip(_)))
            .count();
        if single {
            println!(
                "region {} n={}",
                region.spec_key(),
                region.ground_set_size()
            );
            for check in &report {
                match &check.status {
                    CheckStatus::Pass => println!("  {:<22} PASS", check.name),
                    CheckStatus::Skip(reason) => {
                        println!("  {:<22} SKIP ({reason})", check.name)
                    }
                    CheckStatus::Fail(detail) => {
                        println!("  {:<22} FAIL ({detail})", check.name)
                    }
                }
            }
        } else {
            println!(
                "region {:>4} n={:>2} {} pass={passed} skip={skipped}",
                idx + 1,
                region.ground_set_size(),
                region.spec_key()
            );
        }
        for check in &report {
            if let CheckStatus::Fail(detail) = &check.status {
                println!("FAIL {} on {}: {detail}", check.name, region.spec_key());
                println!(
                    "reproduce with: lpm-tutte verify --lower {} --upper {}",
                    region.lower(),
                    region.upper()
                );
                failures.push(format!("{}({})", check.name, region.spec_key()));
            }
        }
    }

    if failures.is_empty() {
        println!(
            "verify: PASS ({} region{})",
            regions.len(),
            if regions.len() == 1 { "" } else { "s" }
        );
        Ok(())
    } else {
        println!(
            "verify: FAIL ({} check{})",
            failures.len(),
            if failures.len() == 1 { "" } else { "s" }
        );
        Err(CliError::CheckFailed(format!(
            "VerificationFailed({})",
            failures.join(", ")
        )))
    }
}
