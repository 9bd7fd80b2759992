//! A cautionary check: one rising factorial, misread as a bare linear
//! factor, still reproduces the most tempting spot values.
//!
//! The Jacobi pair expansion carries the prefactor Pochhammer symbol
//! (−α−β−2m)_k. Dropping the subscript — taking the factor itself instead
//! of the rising factorial — changes nothing at k = 1, where (z)_1 = z, so
//! the single most natural spot check validates the wrong formula. Every
//! other index shifts silently: k = 0 loses the empty-product convention
//! (z)_0 = 1, and k ≥ 2 loses whole factors while still producing
//! plausible-looking rationals. This is why every closed form in this
//! crate is swept against brute-force polynomial algebra rather than
//! checked at a value or two.
//!
//! Run with: `cargo run --example prefactor_sentinel`

use linrel::exactcore::qq;
use linrel::lincoef::jacobi::{jac_a, jac_a_unsubscripted_variant};
use linrel::polyalg::oracle_linearize;
use linrel::FamilySpec;

fn main() {
    let (alpha, beta) = (qq(1, 2), qq(1, 3));
    let family = FamilySpec::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
    println!("jacobi expansion coefficients at (α, β) = (1/2, 1/3)\n");
    println!(
        "{:>12} {:>18} {:>18} {:>10}",
        "(k, m, n)", "closed form", "misread variant", "oracle"
    );

    let mut wrong = 0u32;
    for m in 0..=3u32 {
        for n in m..=3u32 {
            let oracle = oracle_linearize(&family, &[m, n]).expect("oracle");
            for k in 0..=2 * m {
                let good = jac_a(k, m, n, &alpha, &beta).expect("closed form");
                let bad = jac_a_unsubscripted_variant(k, m, n, &alpha, &beta).expect("variant");
                let reference = oracle.coeff(k + n - m);
                assert_eq!(good, reference);
                if k == 1 {
                    // (z)_1 = z: the misread is invisible exactly here.
                    assert_eq!(bad, reference);
                }
                let verdict = if bad == reference { "agrees" } else { "WRONG" };
                wrong += u32::from(bad != reference);
                println!(
                    "{:>12} {:>18} {:>18} {:>10}",
                    format!("({k}, {m}, {n})"),
                    good.to_string(),
                    bad.to_string(),
                    verdict
                );
            }
        }
    }

    println!(
        "\n{wrong} of the tabulated variant values are wrong, yet every k = 1 row agrees: \
         a one-point check would have passed."
    );
    assert!(wrong > 0);
}
