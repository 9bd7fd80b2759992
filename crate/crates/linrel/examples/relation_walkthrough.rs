//! Walk through one five-term contiguous relation step by step.
//!
//! For a product of N + 1 polynomials and a chosen pair of positions
//! (j, k), eliminating x between the two three-term recurrences yields a
//! linear identity on the weighted product integrals: one unshifted term
//! and four terms with the degree at position j or k moved by ±1. The
//! coefficients come straight from the recurrence; the residual, summed
//! with exact integral values, must be the zero rational.
//!
//! Run with: `cargo run --example relation_walkthrough`

use linrel::contiguous::{build_relation, residual_exact, ContigInstance};
use linrel::exactcore::qq;
use linrel::lincoef::integral_ratio;
use linrel::FamilySpec;
use num_traits::Zero;

fn shift_label(instance: &ContigInstance, shifts: &[i32]) -> String {
    let moved: Vec<String> = instance
        .degrees
        .iter()
        .zip(shifts)
        .map(|(d, s)| {
            let shifted = *d as i64 + *s as i64;
            if *s == 0 { d.to_string() } else { format!("{d}→{shifted}") }
        })
        .collect();
    format!("({})", moved.join(", "))
}

fn walk(family: &FamilySpec, degrees: &[u32], j: usize, k: usize) {
    println!(
        "{} degrees {:?}, shifted positions j = {j}, k = {k}",
        family.name(),
        degrees
    );
    let instance = build_relation(family, degrees, j, k).expect("relation");
    for term in &instance.terms {
        let target = shift_label(&instance, &term.shifts);
        let dropped = instance
            .degrees
            .iter()
            .zip(&term.shifts)
            .any(|(d, s)| *d as i64 + *s as i64 == -1);
        let note = if dropped { "  (degree −1 factor: term drops out)" } else { "" };
        println!("  {:>12}  ×  I{target}{note}", term.coeff.to_string());
    }
    let residual = residual_exact(
        &instance,
        |d| integral_ratio(family, d),
        "closed_form_integral",
    )
    .expect("residual");
    assert!(residual.value.is_zero());
    println!("  residual: {} (exactly zero)\n", residual.value);
}

fn main() {
    // Three Hermite factors; the relation couples positions 1 and 2.
    walk(&FamilySpec::Hermite, &[3, 5, 2], 1, 2);

    // A boundary case: lowering a degree-0 factor hits the vanishing
    // degree −1 polynomial, so that term disappears from the identity.
    walk(&FamilySpec::Hermite, &[0, 4, 2], 1, 2);

    // The same construction is uniform across families and pair choices.
    walk(&FamilySpec::Gegenbauer { lambda: qq(1, 3) }, &[2, 3, 1], 1, 3);
    walk(&FamilySpec::Jacobi { alpha: qq(1, 2), beta: qq(1, 3) }, &[2, 2, 3], 2, 3);
    walk(&FamilySpec::Laguerre { alpha: qq(1, 2) }, &[1, 2, 2], 1, 2);

    // Four factors admit six relations; show one of them.
    walk(&FamilySpec::Hermite, &[2, 2, 3, 3], 2, 4);
}
