//! Exact rational scalars and the combinatorial atoms every closed form is
//! built from: Pochhammer symbols, factorials, binomials, and floor-halving.
//!
//! All coefficient formulas in this crate reduce to products and ratios of
//!
//! ```text
//! (z)_n = z (z+1) ⋯ (z+n-1),      (z)_0 = 1,
//! ```
//!
//! evaluated over arbitrary-precision rationals. Keeping these in one place
//! fixes the conventions once: `(z)_n` vanishes exactly when `z` is one of
//! `0, -1, …, -(n-1)`, and `floor_half` rounds toward negative infinity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn q(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `num/den` from machine integers. `den` must be nonzero.
pub fn qq(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Rising factorial (Pochhammer symbol) `(z)_n = z (z+1) ⋯ (z+n-1)`.
///
/// `(z)_0 = 1` for every `z`; the product vanishes exactly when `z` is a
/// nonpositive integer with `-z < n`.
pub fn pochhammer(z: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    let mut factor = z.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Rat::zero();
        }
        acc *= &factor;
        factor += Rat::one();
    }
    acc
}

/// Product of Pochhammer symbols with a shared index,
/// `Π_i (z_i)_n`. An empty list gives 1 for every `n`.
pub fn pochhammer_list(zs: &[Rat], n: u32) -> Rat {
    zs.iter().map(|z| pochhammer(z, n)).product()
}

/// Factorial `n!` as an exact integer.
pub fn factorial(n: u32) -> Int {
    let mut acc = Int::one();
    for k in 2..=n as u64 {
        acc *= Int::from(k);
    }
    acc
}

/// Factorial `n!` as an exact rational, for use inside rational formulas.
pub fn factorial_rat(n: u32) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// `⌊x/2⌋` rounding toward negative infinity, so `floor_half(-3) = -2`.
pub fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

/// Parity test used by support and vanishing conditions.
pub fn is_even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// Smaller of two degrees.
pub fn min2(m: u32, n: u32) -> u32 {
    m.min(n)
}

/// Larger of two degrees.
pub fn max2(m: u32, n: u32) -> u32 {
    m.max(n)
}

/// True when `z` is an integer `≤ 0`; these are exactly the upper
/// parameters that terminate a hypergeometric series.
pub fn is_nonpositive_integer(z: &Rat) -> bool {
    z.is_integer() && !z.is_positive()
}

/// For a nonpositive integer `z`, the termination index `-z` as `u32`.
///
/// Returns `None` when `z` is not a nonpositive integer or `-z` does not fit.
pub fn nonpositive_integer_order(z: &Rat) -> Option<u32> {
    if !is_nonpositive_integer(z) {
        return None;
    }
    (-z.to_integer()).to_u32()
}

/// Lossy conversion to `f64` for the numeric cross-check layer.
pub fn to_f64(z: &Rat) -> f64 {
    z.to_f64()
        .unwrap_or_else(|| z.numer().to_f64().unwrap_or(f64::NAN) / z.denom().to_f64().unwrap_or(f64::NAN))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_empty_product_is_one() {
        assert_eq!(pochhammer(&qq(7, 3), 0), Rat::one());
    }

    #[test]
    fn pochhammer_half_integer_rises() {
        assert_eq!(pochhammer(&qq(3, 2), 2), qq(15, 4));
    }

    #[test]
    fn pochhammer_vanishes_past_a_nonpositive_integer() {
        assert_eq!(pochhammer(&q(-2), 3), Rat::zero());
        assert_eq!(pochhammer(&q(-2), 2), q(2));
    }

    #[test]
    fn pochhammer_list_matches_examples() {
        assert_eq!(pochhammer_list(&[q(1), q(2)], 1), q(2));
        assert_eq!(pochhammer_list(&[], 5), Rat::one());
        assert_eq!(pochhammer_list(&[qq(1, 2), qq(-1, 2)], 2), qq(-3, 16));
    }

    #[test]
    fn floor_half_rounds_toward_negative_infinity() {
        assert_eq!(floor_half(-3), -2);
        assert_eq!(floor_half(5), 2);
        assert_eq!(floor_half(-4), -2);
        assert_eq!(floor_half(0), 0);
    }

    #[test]
    fn factorial_and_binomial_small_values() {
        assert_eq!(factorial(0), Int::one());
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(binomial(6, 2), Int::from(15));
        assert_eq!(binomial(3, 5), Int::zero());
    }

    #[test]
    fn nonpositive_integer_order_detects_terminators() {
        assert_eq!(nonpositive_integer_order(&q(-4)), Some(4));
        assert_eq!(nonpositive_integer_order(&q(0)), Some(0));
        assert_eq!(nonpositive_integer_order(&qq(-1, 2)), None);
        assert_eq!(nonpositive_integer_order(&q(3)), None);
    }

    proptest! {
        /// (z)_{n+1} = (z)_n · (z + n).
        #[test]
        fn pochhammer_satisfies_rising_recurrence(num in -40i64..40, den in 1i64..12, n in 0u32..20) {
            let z = qq(num, den);
            let lhs = pochhammer(&z, n + 1);
            let rhs = pochhammer(&z, n) * (&z + q(n as i64));
            prop_assert_eq!(lhs, rhs);
        }

        /// (z)_n = 0 exactly when z ∈ {0, -1, …, -(n-1)}.
        #[test]
        fn pochhammer_zero_iff_nonpositive_integer_in_window(num in -40i64..40, den in 1i64..4, n in 1u32..16) {
            let z = qq(num, den);
            let vanishes = pochhammer(&z, n).is_zero();
            let should = z.is_integer() && {
                let zi = z.to_integer();
                zi <= Int::zero() && -zi < Int::from(n)
            };
            prop_assert_eq!(vanishes, should);
        }

        /// Π_i (z_i)_n factors over the list.
        #[test]
        fn pochhammer_list_is_product_of_factors(a in -20i64..20, b in -20i64..20, n in 0u32..10) {
            let za = q(a);
            let zb = qq(b, 3);
            let joint = pochhammer_list(&[za.clone(), zb.clone()], n);
            prop_assert_eq!(joint, pochhammer(&za, n) * pochhammer(&zb, n));
        }

        /// n! = (1)_n.
        #[test]
        fn factorial_is_pochhammer_of_one(n in 0u32..25) {
            prop_assert_eq!(factorial_rat(n), pochhammer(&q(1), n));
        }

        /// Pascal's rule for binomials.
        #[test]
        fn binomial_satisfies_pascal_rule(n in 1u32..30, k in 1u32..30) {
            prop_assume!(k <= n);
            let lhs = binomial(n, k);
            let rhs = binomial(n - 1, k - 1) + binomial(n - 1, k);
            prop_assert_eq!(lhs, rhs);
        }

        /// floor_half agrees with subtraction of the parity bit.
        #[test]
        fn floor_half_matches_parity_decomposition(x in -1000i64..1000) {
            let h = floor_half(x);
            prop_assert!(2 * h == x || 2 * h == x - 1);
            prop_assert_eq!(2 * h + i64::from(!is_even(x)), x);
        }
    }
}
