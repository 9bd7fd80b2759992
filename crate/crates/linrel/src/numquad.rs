//! Gauss quadrature rules from the three-term recurrence, for numeric
//! cross-checks of the exact integral formulas.
//!
//! The monic recurrence π_{n+1}(x) = (x − a_n)π_n(x) − b_n π_{n−1}(x),
//! with a_n = −B_n/A_n and b_n = C_n/(A_{n−1}A_n), defines the symmetric
//! tridiagonal Jacobi matrix whose eigenvalues are the quadrature nodes;
//! the weight of node i is h_0 times the squared first component of the
//! corresponding normalized eigenvector. An order-N rule integrates
//! polynomials of degree ≤ 2N−1 exactly (up to rounding), which covers
//! every weighted product of family polynomials evaluated here. Floating
//! point appears only in this module and only as a cross-check; exact
//! results never depend on it.

use crate::error::{Error, Result};
use crate::exactcore::{to_f64, Rat};
use crate::families::{recurrence_coeffs, validate_orthogonality, FamilySpec};
use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::gamma;

/// A Gauss rule for one family's orthogonality measure.
#[derive(Debug, Clone)]
pub struct QuadRule {
    /// Quadrature nodes, ascending, inside the support interval.
    pub nodes: Vec<f64>,
    /// Positive weights; their sum approximates the numeric h_0.
    pub weights: Vec<f64>,
    /// Family whose measure the rule integrates.
    pub family: FamilySpec,
    /// Number of nodes; exact for polynomial degree ≤ 2·order − 1.
    pub order: u32,
}

/// Numeric h_0 = ∫ w(x) dx for a family's weight, via the gamma function.
pub fn h0_value(family: &FamilySpec) -> Result<f64> {
    validate_orthogonality(family)?;
    let pi = std::f64::consts::PI;
    Ok(match family {
        FamilySpec::Hermite => pi.sqrt(),
        FamilySpec::Gegenbauer { lambda } => {
            let l = to_f64(lambda);
            pi.sqrt() * gamma(l + 0.5) / gamma(l + 1.0)
        }
        FamilySpec::Jacobi { alpha, beta } => {
            let (a, b) = (to_f64(alpha), to_f64(beta));
            2f64.powf(a + b + 1.0) * gamma(a + 1.0) * gamma(b + 1.0) / gamma(a + b + 2.0)
        }
        FamilySpec::Laguerre { alpha } => gamma(to_f64(alpha) + 1.0),
        FamilySpec::ScaledLaguerre { alpha, scale } => {
            let a = to_f64(alpha);
            gamma(a + 1.0) / to_f64(scale).powf(a + 1.0)
        }
    })
}

/// Builds an order-N Gauss rule for the family's measure by the
/// symmetric-tridiagonal eigenvalue method.
pub fn build_rule(family: &FamilySpec, order: u32) -> Result<QuadRule> {
    validate_orthogonality(family)?;
    if order == 0 {
        return Err(Error::IndexOutOfRange("quadrature order must be ≥ 1".into()));
    }
    let n = order as usize;
    // Monic recurrence data; b_k > 0 in orthogonality mode.
    let coeffs: Vec<_> = (0..order)
        .map(|k| recurrence_coeffs(family, k))
        .collect::<Result<_>>()?;
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for (k, rc) in coeffs.iter().enumerate() {
        jacobi[(k, k)] = -to_f64(&rc.b) / to_f64(&rc.a);
        if k + 1 < n {
            let b_next = to_f64(&coeffs[k + 1].c) / (to_f64(&rc.a) * to_f64(&coeffs[k + 1].a));
            if !(b_next > 0.0) {
                return Err(Error::EigenFailure(format!(
                    "nonpositive monic recurrence norm b_{} = {b_next} for {}",
                    k + 1,
                    family.name()
                )));
            }
            let off = b_next.sqrt();
            jacobi[(k, k + 1)] = off;
            jacobi[(k + 1, k)] = off;
        }
    }
    let eigen = SymmetricEigen::try_new(jacobi, f64::EPSILON, 10_000).ok_or_else(|| {
        Error::EigenFailure(format!(
            "eigen decomposition did not converge for {} at order {order}",
            family.name()
        ))
    })?;
    let h0 = h0_value(family)?;
    let mut rule: Vec<(f64, f64)> = eigen
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, &node)| {
            let first = eigen.eigenvectors[(0, i)];
            (node, h0 * first * first)
        })
        .collect();
    rule.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (nodes, weights) = rule.into_iter().unzip();
    Ok(QuadRule { nodes, weights, family: family.clone(), order })
}

/// Evaluates the degree-d family polynomial at each of the given points by
/// running the recurrence in floating point.
fn poly_values(family: &FamilySpec, degree: u32, points: &[f64]) -> Result<Vec<f64>> {
    let coeffs: Vec<(f64, f64, f64)> = (0..degree)
        .map(|k| {
            let rc = recurrence_coeffs(family, k)?;
            Ok((to_f64(&rc.a), to_f64(&rc.b), to_f64(&rc.c)))
        })
        .collect::<Result<_>>()?;
    Ok(points
        .iter()
        .map(|&x| {
            let (mut prev, mut cur) = (0.0, 1.0);
            for &(a, b, c) in &coeffs {
                (prev, cur) = (cur, (a * x + b) * cur - c * prev);
            }
            cur
        })
        .collect())
}

/// Numeric value of ∫ Π_i p_{dᵢ}(sᵢ·x) w(x) dx, with per-factor argument
/// scales (all 1 for a plain product).
///
/// The rule order is ⌈(Σ degrees + 1)/2⌉ + 5, so the polynomial integrand
/// is integrated exactly up to rounding.
pub fn quad_product_integral(
    family: &FamilySpec,
    degrees: &[u32],
    scales: &[Rat],
) -> Result<f64> {
    if degrees.len() != scales.len() {
        return Err(Error::IndexOutOfRange(format!(
            "{} scales for {} degrees",
            scales.len(),
            degrees.len()
        )));
    }
    let total: u32 = degrees.iter().sum();
    let order = (total + 1).div_ceil(2) + 5;
    let rule = build_rule(family, order)?;
    let mut integrand = vec![1.0; rule.nodes.len()];
    for (&degree, scale) in degrees.iter().zip(scales) {
        let s = to_f64(scale);
        let points: Vec<f64> = rule.nodes.iter().map(|&x| s * x).collect();
        for (acc, value) in integrand.iter_mut().zip(poly_values(&rule.family, degree, &points)?) {
            *acc *= value;
        }
    }
    Ok(rule
        .weights
        .iter()
        .zip(&integrand)
        .map(|(w, f)| w * f)
        .sum())
}

/// True when the exact h_0-normalized value and the numeric integral agree
/// within rtol 1e−10 and atol 1e−12.
pub fn cross_check(exact: &Rat, numeric: f64, h0_value: f64) -> bool {
    cross_check_with(exact, numeric, h0_value, 1e-10, 1e-12)
}

/// [`cross_check`] with caller-supplied tolerances.
pub fn cross_check_with(exact: &Rat, numeric: f64, h0_value: f64, rtol: f64, atol: f64) -> bool {
    (to_f64(exact) * h0_value - numeric).abs() <= rtol * numeric.abs() + atol
}
