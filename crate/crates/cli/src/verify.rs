//! The per-region check battery behind `lpm-tutte verify`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use lpm_core::{
    circuit_value_det, circuit_value_trace, count_bases, count_paths_dp,
    enumerate_full_paths_with_limit, lattice_to_circuit, lattice_value_bruteforce_with_limit,
    random_rational, tutte_by_activities_with_limit, tutte_eval, tutte_polynomial, tutte_weighting,
    LatticeRegion, PolynomialRing, ACTIVITIES_MAX_N, ENUMERATION_MAX_N,
};

/// Largest stack matrix dimension fed to the exponential minor-matrix side
/// of the trace check; beyond this the check is skipped, never truncated.
const TRACE_MAX_STACK_DIM: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub enumeration: usize,
    pub activities: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            enumeration: ENUMERATION_MAX_N,
            activities: ACTIVITIES_MAX_N,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
}

fn check(name: &'static str, status: CheckStatus) -> CheckResult {
    CheckResult { name, status }
}

fn equality<T: PartialEq + std::fmt::Display>(expected: T, actual: T) -> CheckStatus {
    if expected == actual {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(format!("expected {expected}, got {actual}"))
    }
}

/// Runs every check on one region; `rng` supplies the rational sample point
/// for the circuit checks.
pub fn verify_region(
    region: &LatticeRegion,
    limits: &OracleLimits,
    rng: &mut impl Rng,
) -> Vec<CheckResult> {
    let n = region.ground_set_size();
    let weighted = tutte_weighting(region);
    let poly = tutte_polynomial(region);
    let mut results = Vec::new();

    results.push(check(
        "bruteforce-polynomial",
        if n <= limits.enumeration {
            let ring = PolynomialRing::new();
            match lattice_value_bruteforce_with_limit(&weighted, &ring, limits.enumeration) {
                Ok(expected) => equality(expected, poly.clone()),
                Err(e) => CheckStatus::Skip(e.to_string()),
            }
        } else {
            CheckStatus::Skip(format!(
                "n={n} exceeds enumeration limit {}",
                limits.enumeration
            ))
        },
    ));

    results.push(check(
        "activities-polynomial",
        if n <= limits.activities {
            match tutte_by_activities_with_limit(region, limits.activities) {
                Ok(expected) => equality(expected, poly.clone()),
                Err(e) => CheckStatus::Skip(e.to_string()),
            }
        } else {
            CheckStatus::Skip(format!(
                "n={n} exceeds activities limit {}",
                limits.activities
            ))
        },
    ));

    let x = random_rational(rng);
    let y = random_rational(rng);
    let circuit = lattice_to_circuit(&weighted, &x, &y);
    let det_value = circuit_value_det(&circuit).expect("lattice circuit is closed");

    results.push(check(
        "trace-vs-det",
        if circuit
            .iter()
            .all(|s| s.rows() <= TRACE_MAX_STACK_DIM && s.cols() <= TRACE_MAX_STACK_DIM)
        {
            match circuit_value_trace(&circuit) {
                Ok(trace_value) => equality(det_value.clone(), trace_value),
                Err(e) => CheckStatus::Fail(e.to_string()),
            }
        } else {
            CheckStatus::Skip(format!("stack dims exceed {TRACE_MAX_STACK_DIM}"))
        },
    ));

    results.push(check(
        "circuit-minus-one",
        equality(det_value - BigRational::one(), tutte_eval(region, &x, &y)),
    ));

    results.push(check(
        "duality",
        equality(tutte_polynomial(&region.transposed()), poly.swap_vars()),
    ));

    let two = BigRational::from(BigInt::from(2));
    results.push(check(
        "eval-two-two",
        equality(
            BigRational::from(BigInt::from(2).pow(n as u32)),
            tutte_eval(region, &two, &two),
        ),
    ));

    results.push(check(
        "basis-count",
        equality(count_paths_dp(region), count_bases(region)),
    ));

    // When enumeration is feasible the basis count must also match the
    // explicit path list.
    if n <= limits.enumeration {
        if let Ok(paths) = enumerate_full_paths_with_limit(region, limits.enumeration) {
            results.push(check(
                "enumeration-count",
                equality(BigInt::from(paths.len()), count_bases(region)),
            ));
        }
    }

    results
}
