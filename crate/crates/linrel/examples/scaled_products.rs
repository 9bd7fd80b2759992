//! Laguerre products with rationally scaled arguments: two exact routes
//! and one numeric witness for ∫ L_p(x) L_m(ax) L_n(bx) x^α e^{−x} dx.
//!
//! The primary route is a finite double sum over the two inner expansions;
//! for p ≥ m the same value is also a terminating two-variable
//! hypergeometric (Kampé de Fériet) series. The library computes both
//! whenever both apply and refuses to answer if they ever disagree, so a
//! successful call is already a consistency proof; this example surfaces
//! the values and adds Gauss–Laguerre quadrature as a third opinion.
//!
//! Run with: `cargo run --example scaled_products`

use linrel::exactcore::{q, qq, Rat};
use linrel::lincoef::laguerre::{scaled_lag_integral_ratio, scaled_lag_integral_ratio_kdf};
use linrel::numquad::{cross_check, h0_value, quad_product_integral};
use linrel::FamilySpec;

fn survey(alpha: &Rat, a: &Rat, b: &Rat) {
    println!("α = {alpha}, arguments (x, {a}·x, {b}·x):");
    let measure = FamilySpec::Laguerre { alpha: alpha.clone() };
    let h0 = h0_value(&measure).expect("mass");
    let scales = [q(1), a.clone(), b.clone()];
    for p in 0..=2u32 {
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                let value = scaled_lag_integral_ratio(p, m, n, alpha, a, b).expect("double sum");
                let series = if p >= m {
                    let v = scaled_lag_integral_ratio_kdf(p, m, n, alpha, a, b).expect("series");
                    assert_eq!(v, value);
                    "double series agrees"
                } else {
                    "series route needs p ≥ m"
                };
                let numeric =
                    quad_product_integral(&measure, &[p, m, n], &scales).expect("quadrature");
                assert!(cross_check(&value, numeric, h0));
                println!("  degrees ({p},{m},{n}): {value:>18}  [{series}; quadrature agrees]");
            }
        }
    }
    println!();
}

fn main() {
    // Unit scales reduce to the plain triple product.
    survey(&qq(1, 2), &q(1), &q(1));

    // Integer and fractional scales; values grow but stay exact.
    survey(&q(0), &q(2), &q(3));
    survey(&q(0), &qq(1, 2), &q(5));

    // A single pinned value, printed with its pieces: the integral with
    // degrees (1,2,1), α = 1/2 and arguments (x, 2x, 3x).
    let value = scaled_lag_integral_ratio(1, 2, 1, &qq(1, 2), &q(2), &q(3)).expect("value");
    println!("degrees (1,2,1), α = 1/2, arguments (x, 2x, 3x): {value}");
    assert_eq!(value, qq(1935, 16));
}
