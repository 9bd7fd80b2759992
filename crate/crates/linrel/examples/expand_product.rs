//! Expand a product of classical orthogonal polynomials over its own
//! basis, exactly.
//!
//! The closed-form coefficients come from terminating hypergeometric sums;
//! the polynomial-algebra oracle recomputes the same expansion by brute
//! multiplication and change of basis. Both must agree coefficient by
//! coefficient, and substituting a rational point into both sides of the
//! expansion gives the same exact value.
//!
//! Run with: `cargo run --example expand_product`

use linrel::exactcore::{qq, Rat};
use linrel::families::family_poly;
use linrel::lincoef::coeff_vector;
use linrel::polyalg::{oracle_linearize, DensePoly};
use linrel::FamilySpec;
use num_traits::Zero;

fn expand(family: &FamilySpec, degrees: &[u32]) {
    let label: Vec<String> = degrees.iter().map(u32::to_string).collect();
    println!("{} product, degrees ({})", family.name(), label.join(", "));
    for (name, value) in family.params() {
        println!("  parameter {name} = {value}");
    }

    let vector = coeff_vector(family, degrees).expect("expansion");
    let oracle = oracle_linearize(family, degrees).expect("oracle");
    for (degree, value) in &vector {
        let check = if *value == oracle.coeff(*degree) { "confirmed" } else { "MISMATCH" };
        println!("  coefficient of degree {degree:>2}: {value}  [{check}]");
    }

    // Substitute x = 3/7 into both sides of the expansion.
    let x = qq(3, 7);
    let mut product = DensePoly::one();
    for d in degrees {
        product = &product * &family_poly(family, *d).expect("factor");
    }
    let lhs = product.eval(&x);
    let mut rhs = Rat::zero();
    for (degree, value) in &vector {
        rhs += value * family_poly(family, *degree).expect("basis").eval(&x);
    }
    assert_eq!(lhs, rhs);
    println!("  both sides at x = {x}: {lhs}\n");
}

fn main() {
    expand(&FamilySpec::Gegenbauer { lambda: qq(1, 3) }, &[2, 3]);
    expand(&FamilySpec::Gegenbauer { lambda: qq(1, 2) }, &[1, 2, 3]);
    expand(&FamilySpec::Hermite, &[2, 3, 4]);
    expand(&FamilySpec::Jacobi { alpha: qq(1, 2), beta: qq(1, 3) }, &[2, 3]);
    expand(&FamilySpec::Laguerre { alpha: qq(1, 3) }, &[1, 1]);
}
