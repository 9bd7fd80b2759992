//! Certify whole degree grids of five-term relations in parallel.
//!
//! Every degree tuple contributes one relation per pair of positions, and
//! each relation must sum to the zero rational when its integrals are
//! evaluated by the closed forms. The sweep is embarrassingly parallel;
//! results are folded deterministically, so reruns produce identical
//! reports regardless of thread count.
//!
//! Run with: `cargo run --example grid_certification`

use linrel::contiguous::{verify_suite, scaled_families};
use linrel::exactcore::{q, qq, Rat};
use linrel::lincoef::laguerre::scaled_lag_integral_ratio;
use linrel::lincoef::integral_ratio;
use linrel::FamilySpec;
use std::time::Instant;

fn certify<F>(label: &str, families: &[FamilySpec], max_degree: u32, evaluator: F)
where
    F: Fn(&[u32]) -> linrel::Result<Rat> + Sync,
{
    let started = Instant::now();
    let outcome = verify_suite(families, 0, max_degree, evaluator, "closed_form_integral");
    let pairs = families.len() * (families.len() - 1) / 2;
    println!(
        "{label:<56} tuples {:>5}  relations {:>6}  failed {}  skipped {}  [{} ms]",
        outcome.passed + outcome.failed + outcome.skipped,
        (outcome.passed + outcome.failed) * pairs,
        outcome.failed,
        outcome.skipped,
        started.elapsed().as_millis()
    );
    for witness in &outcome.witnesses {
        println!("    witness: {:?} pair ({}, {})", witness.degrees, witness.j, witness.k);
    }
}

fn main() {
    let gegenbauer = FamilySpec::Gegenbauer { lambda: qq(1, 3) };
    certify(
        "gegenbauer λ = 1/3, four factors, degrees ≤ 5",
        &vec![gegenbauer.clone(); 4],
        5,
        |d| integral_ratio(&gegenbauer, d),
    );

    certify(
        "hermite, three factors, degrees ≤ 8",
        &vec![FamilySpec::Hermite; 3],
        8,
        |d| integral_ratio(&FamilySpec::Hermite, d),
    );

    let jacobi = FamilySpec::Jacobi { alpha: qq(1, 2), beta: qq(1, 3) };
    certify(
        "jacobi (α, β) = (1/2, 1/3), three factors, degrees ≤ 6",
        &vec![jacobi.clone(); 3],
        6,
        |d| integral_ratio(&jacobi, d),
    );

    let laguerre = FamilySpec::Laguerre { alpha: qq(1, 2) };
    certify(
        "laguerre α = 1/2, three factors, degrees ≤ 6",
        &vec![laguerre.clone(); 3],
        6,
        |d| integral_ratio(&laguerre, d),
    );

    // Mixed family vector: one plain Laguerre factor and two with scaled
    // arguments; the relation machinery is the same.
    let (alpha, a, b) = (q(0), q(2), q(3));
    certify(
        "laguerre products at arguments (x, 2x, 3x), degrees ≤ 3",
        &scaled_families(&alpha, &a, &b),
        3,
        |d| scaled_lag_integral_ratio(d[0], d[1], d[2], &alpha, &a, &b),
    );
}
