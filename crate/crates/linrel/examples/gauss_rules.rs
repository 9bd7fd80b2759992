//! Build Gauss quadrature rules from the three-term recurrences and use
//! them as an independent floating-point witness for the exact integrals.
//!
//! The recurrence coefficients define a symmetric tridiagonal matrix whose
//! eigenvalues are the quadrature nodes; the squared first eigenvector
//! components, scaled by the total weight-function mass, are the weights.
//! A rule of order N integrates polynomials of degree ≤ 2N − 1 exactly up
//! to rounding, so a modest rule pins every product integral used here to
//! machine precision.
//!
//! Run with: `cargo run --example gauss_rules`

use linrel::exactcore::{qq, to_f64};
use linrel::lincoef::integral_ratio;
use linrel::numquad::{build_rule, cross_check, h0_value, quad_product_integral};
use linrel::{FamilySpec, Rat};

fn show_rule(family: &FamilySpec, order: u32) {
    let rule = build_rule(family, order).expect("rule");
    println!("{} rule of order {order}:", family.name());
    for (node, weight) in rule.nodes.iter().zip(&rule.weights) {
        println!("  node {node:>22.16}   weight {weight:>22.16}");
    }
    let mass: f64 = rule.weights.iter().sum();
    let h0 = h0_value(family).expect("h0");
    println!("  weight sum {mass:.16} vs weight-function mass {h0:.16}\n");
}

fn witness(family: &FamilySpec, degrees: &[u32]) {
    let exact = integral_ratio(family, degrees).expect("exact integral");
    let scales = vec![Rat::from_integer(1.into()); degrees.len()];
    let numeric = quad_product_integral(family, degrees, &scales).expect("quadrature");
    let h0 = h0_value(family).expect("h0");
    let agree = cross_check(&exact, numeric, h0);
    println!(
        "{} degrees {:?}: exact {exact}, exact·h0 {:.12e}, quadrature {numeric:.12e}, {}",
        family.name(),
        degrees,
        to_f64(&exact) * h0,
        if agree { "agree to 12 digits" } else { "DISAGREE" }
    );
    assert!(agree);
}

fn main() {
    show_rule(&FamilySpec::Hermite, 3);
    show_rule(&FamilySpec::Laguerre { alpha: qq(1, 2) }, 3);
    show_rule(&FamilySpec::Gegenbauer { lambda: qq(1, 2) }, 2);

    witness(&FamilySpec::Hermite, &[2, 1, 1]);
    witness(&FamilySpec::Hermite, &[4, 4, 4, 4]);
    witness(&FamilySpec::Gegenbauer { lambda: qq(1, 3) }, &[3, 3, 2]);
    witness(&FamilySpec::Jacobi { alpha: qq(1, 2), beta: qq(1, 3) }, &[2, 1, 2]);
    witness(&FamilySpec::Laguerre { alpha: qq(1, 2) }, &[2, 2, 2]);
}
