//! Operation-count and wall-time measurement across a ladder of sizes.
//!
//! For each size the widest band (the worst case: every stack is as tall as
//! it can be) and one seeded random region are swept; the widest-band
//! operation counts drive the consecutive-ratio and log-log-slope figures.

use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use lpm_core::{
    random_region, sweep, widest_region, LatticeRegion, PolynomialRing, RationalRing, Ring,
};

use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMode {
    /// Fixed-point evaluation over the rational ring.
    Eval,
    /// Full polynomial computation.
    Poly,
}

impl BenchMode {
    fn name(self) -> &'static str {
        match self {
            BenchMode::Eval => "eval",
            BenchMode::Poly => "poly",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub mode: String,
    pub sizes: Vec<usize>,
    /// Widest-band ring-operation totals, as decimal strings.
    pub op_counts: Vec<String>,
    /// Widest-band sweep wall times in seconds.
    pub wall_times: Vec<f64>,
    pub random_op_counts: Vec<String>,
    pub random_wall_times: Vec<f64>,
    /// Consecutive widest-band op-count ratios.
    pub ratios: Vec<f64>,
    /// Least-squares slope of log(ops) against log(n); absent for a single
    /// size.
    pub slope: Option<f64>,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.mode)?;
        writeln!(
            f,
            "{:>6} {:>14} {:>7} {:>10} {:>14} {:>10}",
            "n", "ops", "ratio", "wall_s", "ops(rand)", "wall_s(rand)"
        )?;
        for i in 0..self.sizes.len() {
            let ratio = if i == 0 {
                "-".to_string()
            } else {
                format!("{:.2}", self.ratios[i - 1])
            };
            writeln!(
                f,
                "{:>6} {:>14} {:>7} {:>10.4} {:>14} {:>10.4}",
                self.sizes[i],
                self.op_counts[i],
                ratio,
                self.wall_times[i],
                self.random_op_counts[i],
                self.random_wall_times[i],
            )?;
        }
        match self.slope {
            Some(slope) => writeln!(f, "slope: {slope:.3}"),
            None => writeln!(f, "slope: n/a (single size)"),
        }
    }
}

fn timed_sweep(region: &LatticeRegion, mode: BenchMode) -> (u64, f64) {
    match mode {
        BenchMode::Eval => {
            let ring = RationalRing::from_i64(2, 2);
            let start = Instant::now();
            let _ = sweep(region, &ring);
            (ring.ops().total(), start.elapsed().as_secs_f64())
        }
        BenchMode::Poly => {
            let ring = PolynomialRing::new();
            let start = Instant::now();
            let _ = sweep(region, &ring);
            (ring.ops().total(), start.elapsed().as_secs_f64())
        }
    }
}

fn log_log_slope(sizes: &[usize], ops: &[u64]) -> Option<f64> {
    if sizes.len() < 2 {
        return None;
    }
    let points: Vec<(f64, f64)> = sizes
        .iter()
        .zip(ops)
        .map(|(&n, &c)| ((n as f64).ln(), (c as f64).ln()))
        .collect();
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let cov: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    Some(cov / var)
}

pub fn run_bench(mode: BenchMode, sizes: &[usize], seed: u64) -> Result<BenchReport, CliError> {
    if sizes.is_empty() {
        return Err(CliError::Validation(
            "InvalidArgument(--sizes must list at least one size)".to_string(),
        ));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Validation(
            "InvalidArgument(--sizes must be strictly increasing)".to_string(),
        ));
    }
    for &n in sizes {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(CliError::Validation(format!(
                "InvalidArgument(sizes must be even and at least 2, got {n})"
            )));
        }
    }

    let mut op_counts = Vec::new();
    let mut wall_times = Vec::new();
    let mut random_op_counts = Vec::new();
    let mut random_wall_times = Vec::new();
    for &n in sizes {
        let (ops, wall) = timed_sweep(&widest_region(n), mode);
        op_counts.push(ops);
        wall_times.push(wall);

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
        let (ops, wall) = timed_sweep(&random_region(n, &mut rng), mode);
        random_op_counts.push(ops);
        random_wall_times.push(wall);
    }

    let ratios = op_counts
        .windows(2)
        .map(|w| w[1] as f64 / w[0] as f64)
        .collect();
    let slope = log_log_slope(sizes, &op_counts);
    Ok(BenchReport {
        mode: mode.name().to_string(),
        sizes: sizes.to_vec(),
        op_counts: op_counts.iter().map(u64::to_string).collect(),
        wall_times,
        random_op_counts: random_op_counts.iter().map(u64::to_string).collect(),
        random_wall_times,
        ratios,
        slope,
    })
}
