//! Dense bivariate polynomials with exact integer coefficients.
//!
//! Coefficients live in a `(deg_x + 1) x (deg_y + 1)` grid, `coeffs[a][b]`
//! holding the coefficient of `x^a y^b`. The grid is kept canonical: no
//! trailing all-zero row or column, and the zero polynomial is the single
//! `[[0]]` cell. Degrees stay small here (bounded by the region extents), so
//! schoolbook multiplication is all we need.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self {
            coeffs: vec![vec![BigInt::zero()]],
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self {
            coeffs: vec![vec![c]],
        }
    }

    /// The polynomial `x`.
    pub fn var_x() -> Self {
        Self::from_terms(&[(1, 0, 1)])
    }

    /// The polynomial `y`.
    pub fn var_y() -> Self {
        Self::from_terms(&[(0, 1, 1)])
    }

    /// Builds a polynomial from `(x_degree, y_degree, coefficient)` triples;
    /// repeated monomials accumulate.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut poly = Self::zero();
        for &(a, b, c) in terms {
            poly.add_term(a, b, BigInt::from(c));
        }
        poly
    }

    fn add_term(&mut self, a: usize, b: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= a {
            let width = self.coeffs[0].len();
            self.coeffs.resize(a + 1, vec![BigInt::zero(); width]);
        }
        if self.coeffs[0].len() <= b {
            for row in &mut self.coeffs {
                row.resize(b + 1, BigInt::zero());
            }
        }
        self.coeffs[a][b] += c;
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().iter().all(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        while self.coeffs[0].len() > 1
            && self.coeffs.iter().all(|row| row.last().unwrap().is_zero())
        {
            for row in &mut self.coeffs {
                row.pop();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.is_zero())
    }

    /// Degree in `x` (0 for the zero polynomial).
    pub fn deg_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Degree in `y` (0 for the zero polynomial).
    pub fn deg_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    /// Largest `a + b` over nonzero monomials (0 for the zero polynomial).
    pub fn total_degree(&self) -> usize {
        self.iter_terms().map(|(a, b, _)| a + b).max().unwrap_or(0)
    }

    /// Coefficient of `x^a y^b`.
    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.coeffs
            .get(a)
            .and_then(|row| row.get(b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in ascending `(x_degree, y_degree)` order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(b, c)| (a, b, c))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = self.coeffs[0].len().max(other.coeffs[0].len());
        let mut coeffs = vec![vec![BigInt::zero(); cols]; rows];
        for (a, row) in coeffs.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = self.coeff(a, b) + other.coeff(a, b);
            }
        }
        let mut out = Self { coeffs };
        out.trim();
        out
    }

    /// Schoolbook convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let rows = self.coeffs.len() + other.coeffs.len() - 1;
        let cols = self.coeffs[0].len() + other.coeffs[0].len() - 1;
        let mut coeffs = vec![vec![BigInt::zero(); cols]; rows];
        for (a1, row1) in self.coeffs.iter().enumerate() {
            for (b1, c1) in row1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (a2, row2) in other.coeffs.iter().enumerate() {
                    for (b2, c2) in row2.iter().enumerate() {
                        if !c2.is_zero() {
                            coeffs[a1 + a2][b1 + b2] += c1 * c2;
                        }
                    }
                }
            }
        }
        let mut out = Self { coeffs };
        out.trim();
        out
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for row in self.coeffs.iter().rev() {
            let mut row_val = BigRational::zero();
            for c in row.iter().rev() {
                row_val = row_val * y + BigRational::from(c.clone());
            }
            acc = acc * x + row_val;
        }
        acc
    }

    /// The polynomial with `x` and `y` exchanged.
    pub fn swap_vars(&self) -> Self {
        let rows = self.coeffs[0].len();
        let cols = self.coeffs.len();
        let coeffs = (0..rows)
            .map(|b| (0..cols).map(|a| self.coeffs[a][b].clone()).collect())
            .collect();
        let mut out = Self { coeffs };
        out.trim();
        out
    }

    /// Serializes as `{"terms":[{"x":a,"y":b,"c":"<decimal>"},...]}` with
    /// terms in ascending `(x, y)` order and decimal-string coefficients.
    pub fn to_json(&self) -> String {
        let terms: Vec<JsonTerm> = self
            .iter_terms()
            .map(|(a, b, c)| JsonTerm {
                x: a,
                y: b,
                c: c.to_string(),
            })
            .collect();
        serde_json::to_string(&JsonPoly { terms }).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, PolyJsonError> {
        let parsed: JsonPoly =
            serde_json::from_str(text).map_err(|e| PolyJsonError::Malformed(e.to_string()))?;
        let mut poly = Self::zero();
        for term in parsed.terms {
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| PolyJsonError::BadCoefficient(term.c.clone()))?;
            poly.add_term(term.x, term.y, c);
        }
        Ok(poly)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyJsonError {
    #[error("MalformedPolynomialJson({0})")]
    Malformed(String),
    #[error("BadCoefficient({0})")]
    BadCoefficient(String),
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    x: usize,
    y: usize,
    c: String,
}

fn fmt_monomial(a: usize, b: usize) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{b}")),
    }
    parts.join("*")
}

impl fmt::Display for BivariatePoly {
    /// Canonical text form: terms sorted by total degree descending, then by
    /// `x`-degree descending, e.g. `x^2 + x*y + y^2 + x + y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(usize, usize, &BigInt)> = self.iter_terms().collect();
        terms.sort_by_key(|&(a, b, _)| std::cmp::Reverse((a + b, a)));
        for (i, (a, b, c)) in terms.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            let mono = fmt_monomial(a, b);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
