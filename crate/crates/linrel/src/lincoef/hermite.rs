//! Hermite linearization: two- and three-factor coefficients and the
//! three- and four-factor product integrals.
//!
//! With `s = p + m + n`, the expansions are
//!
//! ```text
//! H_m H_n = Σ_{k=0}^{min(m,n)}  (m choose k)(n choose k) k! 2^k  H_{m+n−2k},
//! H_p H_m H_n = Σ_{k=0}^{⌊s/2⌋}  f_k  H_{s−2k},
//! ```
//!
//! where `f_k` splits into two branches (`k ≤ p−1` and `k ≥ p` after sorting
//! `p ≤ m ≤ n`), each a factorial prefactor times a terminating ₄F₃ of
//! argument 1/4. The four-factor integral has the same two-branch shape in
//! the distinguished first degree. A factorial of a negative integer in a
//! prefactor denominator kills the value; those cases return exact zero.

use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, floor_half, is_even, q, qq, Rat};
use crate::hyper::{pfq_eval, HypSeriesSpec};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `2^e` as an exact rational for `e ≥ 0`.
fn pow2(e: u32) -> Rat {
    Rat::from_integer(BigInt::one() << e)
}

/// Two-factor linearization coefficient of `H_{m+n−2k}` in `H_m H_n`.
///
/// # Errors
/// [`Error::IndexOutOfRange`] for `k > min(m,n)`.
pub fn herm_b(k: u32, m: u32, n: u32) -> Result<Rat> {
    if k > m.min(n) {
        return Err(Error::IndexOutOfRange(format!(
            "coefficient index {k} exceeds min({m},{n})"
        )));
    }
    let num = factorial_rat(m) * factorial_rat(n) * pow2(k);
    let den = factorial_rat(k) * factorial_rat(m - k) * factorial_rat(n - k);
    Ok(num / den)
}

/// Branch of `f_k` for `k ≤ p−1` (sorted `p ≤ m ≤ n`).
fn herm_d(k: u32, p: u32, m: u32, n: u32) -> Result<Rat> {
    let (ki, pi, mi, ni) = (k as i64, p as i64, m as i64, n as i64);
    let pref = factorial_rat(m + n) * factorial_rat(p) * pow2(k)
        / (factorial_rat(k) * factorial_rat(p - k) * factorial_rat(m + n - k));
    let series = HypSeriesSpec::new(
        &[q(-ki), q(-mi), q(-ni), q(-mi - ni + ki)],
        &[q(1 + pi - ki), qq(-mi - ni, 2), qq(1 - mi - ni, 2)],
        qq(1, 4),
    );
    Ok(pref * pfq_eval(&series)?)
}

/// Branch of `f_k` for `k ≥ p` (sorted `p ≤ m ≤ n`).
fn herm_e(k: u32, p: u32, m: u32, n: u32) -> Result<Rat> {
    let (ki, pi, mi, ni) = (k as i64, p as i64, m as i64, n as i64);
    let shift = 2 * ki - 2 * pi - mi - ni;
    let pref = factorial_rat(m) * factorial_rat(n) * factorial_rat(m + n + 2 * p - 2 * k)
        * pow2(k)
        / (factorial_rat(k - p)
            * factorial_rat(m + p - k)
            * factorial_rat(n + p - k)
            * factorial_rat(p + m + n - 2 * k));
    let series = HypSeriesSpec::new(
        &[
            q(-pi),
            q(-mi - pi + ki),
            q(-ni - pi + ki),
            q(-mi - ni - pi + 2 * ki),
        ],
        &[q(1 + ki - pi), qq(shift, 2), qq(1 + shift, 2)],
        qq(1, 4),
    );
    Ok(pref * pfq_eval(&series)?)
}

/// Three-factor linearization coefficient `f_k` of `H_{s−2k}` in
/// `H_p H_m H_n`, with `s = p+m+n` and the degrees sorted internally.
///
/// Inside the index range, `k` beyond the support bound (the sum of the two
/// smallest degrees) yields 0.
///
/// # Errors
/// [`Error::IndexOutOfRange`] for `k > ⌊s/2⌋`.
pub fn herm_f(k: u32, p: u32, m: u32, n: u32) -> Result<Rat> {
    let mut d = [p, m, n];
    d.sort_unstable();
    let [p, m, n] = d;
    let s = p + m + n;
    if k > s / 2 {
        return Err(Error::IndexOutOfRange(format!(
            "coefficient index {k} exceeds {} for degrees ({p},{m},{n})",
            s / 2
        )));
    }
    if k > m + p {
        return Ok(Rat::zero());
    }
    if k + 1 <= p {
        herm_d(k, p, m, n)
    } else {
        herm_e(k, p, m, n)
    }
}

/// Integral ratio `∫ H_p H_m H_n e^{−x²} dx / √π`.
///
/// Vanishes unless the total degree is even and the degrees satisfy the
/// triangle inequality; otherwise the value is the classical factorial form.
pub fn herm_triple_integral_ratio(p: u32, m: u32, n: u32) -> Rat {
    let (pi, mi, ni) = (p as i64, m as i64, n as i64);
    if !is_even(pi + mi + ni) || mi + ni < pi || pi + ni < mi || pi + mi < ni {
        return Rat::zero();
    }
    let s2 = ((pi + mi + ni) / 2) as u32;
    factorial_rat(p) * factorial_rat(m) * factorial_rat(n) * pow2(s2)
        / (factorial_rat(((mi + ni - pi) / 2) as u32)
            * factorial_rat(((mi + pi - ni) / 2) as u32)
            * factorial_rat(((ni + pi - mi) / 2) as u32))
}

/// Shared shape of the two four-factor branches:
/// `c₁! c₂! c₃! 2^{t/2} / (g₁! g₂! g₃!) · ₄F₃(nums; dens; 1/4)` where the
/// `gᵢ` are integer halves that may be negative, in which case the value is
/// zero (`1/(−j)! = 0`).
struct QuadBranch {
    facts: [u32; 3],
    halves: [i64; 3],
    two_exp: i64,
    nums: [i64; 4],
    dens: [Rat; 3],
}

fn quad_branch_eval(b: &QuadBranch) -> Result<Rat> {
    if b.halves.iter().any(|&h| h < 0) {
        return Ok(Rat::zero());
    }
    let pref = factorial_rat(b.facts[0]) * factorial_rat(b.facts[1]) * factorial_rat(b.facts[2])
        * pow2(b.two_exp as u32)
        / (factorial_rat(b.halves[0] as u32)
            * factorial_rat(b.halves[1] as u32)
            * factorial_rat(b.halves[2] as u32));
    let nums: Vec<Rat> = b.nums.iter().map(|&v| q(v)).collect();
    let series = HypSeriesSpec::new(&nums, &b.dens, qq(1, 4));
    Ok(pref * pfq_eval(&series)?)
}

/// Integral ratio `∫ H_{d₁} H_{d₂} H_{d₃} H_{d₄} e^{−x²} dx / √π`.
///
/// The first degree is distinguished as `k` and the rest are sorted to
/// `p ≤ m ≤ n`; the value is symmetric in all four degrees. Odd total
/// degree vanishes, `k ≤ m+n−p` takes one ₄F₃ branch, larger `k` up to
/// `m+n+p` takes the reflected branch, and beyond that the integral is 0.
pub fn herm_quad_integral_ratio(d1: u32, d2: u32, d3: u32, d4: u32) -> Result<Rat> {
    let k = d1;
    let mut rest = [d2, d3, d4];
    rest.sort_unstable();
    let [p, m, n] = rest;
    let (ki, pi, mi, ni) = (k as i64, p as i64, m as i64, n as i64);
    if !is_even(ki + pi + mi + ni) {
        return Ok(Rat::zero());
    }
    if ki <= mi + ni - pi {
        quad_branch_eval(&QuadBranch {
            facts: [m, n, k + p],
            halves: [
                (mi + ni - pi - ki) / 2,
                (ki + pi + ni - mi) / 2,
                (ki + pi + mi - ni) / 2,
            ],
            two_exp: (ki + pi + mi + ni) / 2,
            nums: [
                -ki,
                -pi,
                floor_half(ni - mi - pi - ki),
                floor_half(mi - ni - pi - ki),
            ],
            dens: [
                q(1 + (mi + ni - pi - ki) / 2),
                qq(-ki - pi, 2),
                qq(1 - ki - pi, 2),
            ],
        })
    } else if ki <= mi + ni + pi {
        quad_branch_eval(&QuadBranch {
            facts: [k, p, m + n],
            halves: [
                (ki + pi - mi - ni) / 2,
                (mi + ni + pi - ki) / 2,
                (mi + ni + ki - pi) / 2,
            ],
            two_exp: (ki + pi + mi + ni) / 2,
            nums: [
                -mi,
                -ni,
                floor_half(pi - ki - mi - ni),
                floor_half(ki - pi - mi - ni),
            ],
            dens: [
                q(1 + (ki + pi - mi - ni) / 2),
                qq(-mi - ni, 2),
                qq(1 - mi - ni, 2),
            ],
        })
    } else {
        Ok(Rat::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{norm_ratio, FamilySpec};
    use crate::polyalg::{oracle_integral_ratio, oracle_linearize};
    use proptest::prelude::*;

    #[test]
    fn pair_coefficients_match_pinned_values() {
        assert_eq!(herm_b(0, 3, 7).unwrap(), q(1));
        assert_eq!(herm_b(1, 1, 1).unwrap(), q(2));
        assert_eq!(herm_b(2, 2, 3).unwrap(), q(24));
        assert!(matches!(herm_b(3, 2, 5), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn triple_coefficients_match_frozen_vector() {
        let got: Vec<Rat> = (0..=4).map(|k| herm_f(k, 2, 3, 4).unwrap()).collect();
        assert_eq!(got, vec![q(1), q(52), q(792), q(3840), q(4224)]);
        assert_eq!(herm_f(0, 1, 1, 1).unwrap(), q(1));
        assert_eq!(herm_f(1, 1, 1, 1).unwrap(), q(6));
        assert!(matches!(herm_f(3, 1, 2, 2), Err(Error::IndexOutOfRange(_))));
        // In range but beyond the support bound: exact zero.
        assert_eq!(herm_f(2, 0, 1, 5).unwrap(), q(0));
    }

    #[test]
    fn triple_integrals_match_frozen_values() {
        assert_eq!(herm_triple_integral_ratio(2, 3, 3), q(576));
        assert_eq!(herm_triple_integral_ratio(4, 2, 2), q(384));
        assert_eq!(herm_triple_integral_ratio(1, 1, 2), q(8));
        assert_eq!(herm_triple_integral_ratio(2, 0, 2), q(8));
        assert_eq!(herm_triple_integral_ratio(2, 1, 1), q(8));
        assert_eq!(herm_triple_integral_ratio(1, 1, 1), q(0));
        assert_eq!(herm_triple_integral_ratio(1, 2, 5), q(0));
    }

    #[test]
    fn quad_integrals_match_frozen_values() {
        assert_eq!(herm_quad_integral_ratio(2, 1, 1, 2).unwrap(), q(80));
        assert_eq!(herm_quad_integral_ratio(2, 2, 3, 3).unwrap(), q(11904));
        assert_eq!(herm_quad_integral_ratio(1, 2, 3, 4).unwrap(), q(8448));
        assert_eq!(herm_quad_integral_ratio(4, 4, 4, 4).unwrap(), q(94224384));
        assert_eq!(herm_quad_integral_ratio(0, 0, 0, 2).unwrap(), q(0));
        assert_eq!(herm_quad_integral_ratio(3, 3, 1, 1).unwrap(), q(672));
        assert_eq!(herm_quad_integral_ratio(5, 1, 1, 1).unwrap(), q(0));
        for n in 0..5 {
            assert_eq!(
                herm_quad_integral_ratio(0, 0, n, n).unwrap(),
                norm_ratio(&FamilySpec::Hermite, n).unwrap()
            );
        }
    }

    proptest! {
        /// Pair coefficients reproduce the polynomial oracle.
        #[test]
        fn pair_coefficients_match_oracle(m in 0u32..7, n in 0u32..7) {
            let oracle = oracle_linearize(&FamilySpec::Hermite, &[m, n]).unwrap();
            for k in 0..=m.min(n) {
                prop_assert_eq!(herm_b(k, m, n).unwrap(), oracle.coeff(m + n - 2 * k));
            }
        }

        /// Triple coefficients reproduce the polynomial oracle.
        #[test]
        fn triple_coefficients_match_oracle(p in 0u32..5, m in 0u32..5, n in 0u32..5) {
            let s = p + m + n;
            let oracle = oracle_linearize(&FamilySpec::Hermite, &[p, m, n]).unwrap();
            for k in 0..=s / 2 {
                prop_assert_eq!(herm_f(k, p, m, n).unwrap(), oracle.coeff(s - 2 * k));
            }
        }

        /// Triple integrals reproduce the polynomial oracle.
        #[test]
        fn triple_integrals_match_oracle(p in 0u32..6, m in 0u32..6, n in 0u32..6) {
            prop_assert_eq!(
                herm_triple_integral_ratio(p, m, n),
                oracle_integral_ratio(&FamilySpec::Hermite, &[p, m, n]).unwrap()
            );
        }

        /// Four-factor integrals reproduce the oracle and are symmetric under
        /// any permutation of the degrees.
        #[test]
        fn quad_integrals_match_oracle(a in 0u32..5, b in 0u32..5, c in 0u32..5, d in 0u32..5) {
            let want = oracle_integral_ratio(&FamilySpec::Hermite, &[a, b, c, d]).unwrap();
            prop_assert_eq!(herm_quad_integral_ratio(a, b, c, d).unwrap(), want.clone());
            prop_assert_eq!(herm_quad_integral_ratio(c, a, d, b).unwrap(), want.clone());
            prop_assert_eq!(herm_quad_integral_ratio(d, c, b, a).unwrap(), want);
        }
    }
}
