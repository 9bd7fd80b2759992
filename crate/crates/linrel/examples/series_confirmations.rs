//! Two more independent confirmations of the exact integrals, neither of
//! which shares any code path with the closed forms or the oracle.
//!
//! First, the three-variable product generating functions: for Hermite
//! products the triple-product integrals are the Taylor coefficients of
//! exp(2(t₁t₂ + t₁t₃ + t₂t₃)) after dividing by n₁!n₂!n₃!, and for
//! Laguerre products they are the coefficients of a negative power of
//! 1 − e₂ + 2e₃ in the elementary symmetric pieces. Truncating the series
//! at a total degree and comparing every coefficient below it squeezes all
//! small cases at once.
//!
//! Second, the unit-argument consistency of the three-factor Gegenbauer
//! expansion: substituting x = 1 turns the expansion into a pure
//! Pochhammer identity whose two sides must cancel exactly.
//!
//! Run with: `cargo run --example series_confirmations`

use linrel::exactcore::{q, qq, Rat};
use linrel::lincoef::gegenbauer::geg_x1_identity_residual;
use linrel::polyalg::{genfun_truncation_check, GENFUN_BUDGET};
use linrel::FamilySpec;
use num_traits::Zero;

fn main() {
    println!("product generating functions, all coefficients of total degree ≤ n:");
    for family in [
        FamilySpec::Hermite,
        FamilySpec::Laguerre { alpha: q(0) },
        FamilySpec::Laguerre { alpha: qq(1, 2) },
        FamilySpec::Laguerre { alpha: qq(-1, 3) },
    ] {
        let params: Vec<String> =
            family.params().iter().map(|(k, v)| format!("{k} = {v}")).collect();
        let label = if params.is_empty() {
            family.name().to_string()
        } else {
            format!("{} ({})", family.name(), params.join(", "))
        };
        for n in 0..=GENFUN_BUDGET {
            let ok = genfun_truncation_check(&family, n).expect("series comparison");
            assert!(ok);
        }
        println!("  {label:<28} matches the integrals through total degree {GENFUN_BUDGET}");
    }

    println!("\nunit-argument residuals of the three-factor Gegenbauer expansion:");
    for lambda in [qq(1, 3), qq(1, 2), q(1), qq(3, 2)] {
        let mut checked = 0u32;
        let mut largest_support = 0u32;
        for p in 0..=5u32 {
            for m in p..=5u32 {
                for n in m..=5u32 {
                    let residual: Rat =
                        geg_x1_identity_residual(p, m, n, &lambda).expect("residual");
                    assert!(residual.is_zero(), "λ = {lambda}, degrees ({p},{m},{n})");
                    checked += 1;
                    largest_support = largest_support.max(p + m + n);
                }
            }
        }
        println!(
            "  λ = {lambda}: {checked} ordered degree triples, sums up to {largest_support}, \
             all residuals exactly 0"
        );
    }
}
