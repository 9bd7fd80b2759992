//! Jacobi linearization: pair coefficients and the triple product integral.
//!
//! With `n ≥ m`, the expansion of a product of two Jacobi polynomials is
//!
//! ```text
//! P_m^{(α,β)} P_n^{(α,β)} = Σ_{k=0}^{2m}  a_k  P_{k+n−m}^{(α,β)},
//! ```
//!
//! where `a_k` is a Pochhammer prefactor times a terminating, very well
//! poised ₉F₈ of unit argument. The closed form has removable singularities
//! on the lines `α = β` and `β − α = 1` (individual factors vanish but the
//! full expression stays finite), so every evaluation substitutes
//! `α ← α + ε` and takes the exact limit `ε → 0` in truncated Laurent
//! arithmetic instead of branching on parameter cases.

use super::eps::Eps;
use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, nonpositive_integer_order, q, qq, Rat};
use crate::families::{norm_ratio, validate_formal, validate_orthogonality, FamilySpec};
use num_traits::{One, Zero};

fn jac(alpha: &Rat, beta: &Rat) -> FamilySpec {
    FamilySpec::Jacobi {
        alpha: alpha.clone(),
        beta: beta.clone(),
    }
}

/// Terminating `ᵣFₛ` over truncated Laurent scalars.
///
/// Termination is read off the numerator parameters that are exact
/// nonpositive integers; parameters carrying an `ε` part never terminate
/// the series by themselves.
fn pfq_eval_eps(nums: &[Eps], dens: &[Eps], argument: &Rat) -> Result<Eps> {
    let mut t: Option<u32> = None;
    for a in nums {
        if let Some(c) = a.as_constant() {
            if let Some(o) = nonpositive_integer_order(&c) {
                t = Some(t.map_or(o, |cur| cur.min(o)));
            }
        }
    }
    let Some(t) = t else {
        return Err(Error::NonTerminating(
            "no exact nonpositive integer among numerator parameters".into(),
        ));
    };
    let mut term = Eps::one();
    let mut total = Eps::one();
    for j in 0..t {
        let je = Eps::from_i64(j as i64);
        let mut num = Eps::from_rat(argument);
        for a in nums {
            num = num.mul(&a.add(&je));
        }
        if num.is_exact_zero() {
            break;
        }
        let mut den = Eps::from_i64(j as i64 + 1);
        for b in dens {
            den = den.mul(&b.add(&je));
        }
        if den.is_exact_zero() {
            return Err(Error::DenominatorPole {
                term: j as usize + 1,
            });
        }
        term = term.mul(&num).div(&den)?;
        total = total.add(&term);
    }
    Ok(total)
}

/// Core evaluation with `n ≥ m` and `0 ≤ k ≤ 2m`. The `unsubscripted`
/// flag replaces the prefactor denominator Pochhammer `(−α−β−2m)_k` by the
/// bare factor `−α−β−2m`.
fn jac_a_impl(
    k: u32,
    m: u32,
    n: u32,
    alpha: &Rat,
    beta: &Rat,
    unsubscripted: bool,
) -> Result<Rat> {
    let (ki, mi, ni) = (k as i64, m as i64, n as i64);
    let half = qq(1, 2);
    // α ← α + ε; β stays exact.
    let a = Eps::linear(alpha, &q(1));
    let c = |r: Rat| Eps::from_rat(&r);
    let av = |r: Rat| a.add(&c(r));
    let nav = |r: Rat| a.neg().add(&c(r));

    let ab1 = av(beta + q(1));
    let pref_num = av(q(1))
        .pochhammer(n)
        .mul(&c(beta + q(1)).pochhammer(n))
        .mul(&ab1.pochhammer(2 * (n - m)))
        .mul(&ab1.pochhammer(2 * m))
        .mul(&av(beta + q(1 + 2 * (ni - mi) + 2 * ki)));
    let pref_den = c(factorial_rat(m))
        .mul(&ab1.pochhammer(m))
        .mul(&av(q(1)).pochhammer(n - m))
        .mul(&c(beta + q(1)).pochhammer(n - m))
        .mul(&av(beta + q(2)).pochhammer(2 * n))
        .mul(&ab1);

    let kn = c(q(ni - mi + 1))
        .pochhammer(k)
        .mul(&av(beta + q(2 * (ni - mi) + 1)).pochhammer(k))
        .mul(&a.add(&av(q(2 * ni + 2) + q(2) * beta)).pochhammer(k))
        .mul(&c(q(-2 * mi)).pochhammer(k))
        .mul(&av(-beta).pochhammer(k));
    let neg_ab2m = nav(-beta - q(2 * mi));
    let mut kd = c(factorial_rat(k))
        .mul(&c(q(2) * beta + q(2 * (ni - mi) + 2)).pochhammer(k))
        .mul(&av(q(ni - mi + 1)).pochhammer(k))
        .mul(&av(beta + q(2 * ni + 2)).pochhammer(k));
    kd = if unsubscripted {
        kd.mul(&neg_ab2m)
    } else {
        kd.mul(&neg_ab2m.pochhammer(k))
    };

    let hv = |e: Eps| e.mul(&c(half.clone()));
    let nums = [
        c(beta + &half + q(ni - mi)),
        hv(c(beta + &half + q(ni - mi + 2))),
        c(beta + &half),
        c(beta + q(ni + 1)),
        nav(q(-mi)),
        hv(av(beta + q(ki + 1))).add(&c(q(ni - mi))),
        hv(av(beta + q(ki + 2))).add(&c(q(ni - mi))),
        c(qq(-ki, 2)),
        c(qq(-ki + 1, 2)),
    ];
    let dens = [
        hv(c(beta + &half + q(ni - mi))),
        c(q(ni - mi + 1)),
        c(&half - q(mi)),
        av(beta + &half + q(ni + 1)),
        hv(nav(beta + q(-ki + 1))),
        hv(nav(beta + q(-ki + 2))),
        c(beta + qq(ki + 2, 2) + q(ni - mi)),
        c(beta + qq(ki + 3, 2) + q(ni - mi)),
    ];
    let series = pfq_eval_eps(&nums, &dens, &Rat::one())?;

    pref_num
        .div(&pref_den)?
        .mul(&kn.div(&kd)?)
        .mul(&series)
        .limit()
}

/// Linearization coefficient of `P_{k+|n−m|}^{(α,β)}` in
/// `P_m^{(α,β)} P_n^{(α,β)}`.
///
/// The support is `0 ≤ k ≤ 2·min(m,n)`; larger indices yield 0.
///
/// # Errors
/// [`Error::DegenerateBasis`] for degenerate `(α,β)`;
/// [`Error::FormulaPole`] when a genuine (non-removable) pole of the closed
/// form is hit.
pub fn jac_a(k: u32, m: u32, n: u32, alpha: &Rat, beta: &Rat) -> Result<Rat> {
    validate_formal(&jac(alpha, beta))?;
    let (m, n) = (m.min(n), m.max(n));
    if k > 2 * m {
        return Ok(Rat::zero());
    }
    jac_a_impl(k, m, n, alpha, beta, false)
}

/// Variant of [`jac_a`] with the prefactor Pochhammer `(−α−β−2m)_k`
/// replaced by the bare factor `−α−β−2m`.
///
/// This reproduces a plausible-looking but wrong reading of the closed form
/// and is kept as a regression sentinel: it must NOT match the polynomial
/// oracle once `min(m,n) ≥ 2`.
pub fn jac_a_unsubscripted_variant(
    k: u32,
    m: u32,
    n: u32,
    alpha: &Rat,
    beta: &Rat,
) -> Result<Rat> {
    validate_formal(&jac(alpha, beta))?;
    let (m, n) = (m.min(n), m.max(n));
    if k > 2 * m {
        return Ok(Rat::zero());
    }
    jac_a_impl(k, m, n, alpha, beta, true)
}

/// Integral ratio `∫ P_l P_m P_n (1−x)^α (1+x)^β dx / h₀`.
///
/// Vanishes outside the band `|n−m| ≤ l ≤ n+m`; inside it the value is
/// the matching pair coefficient scaled by the squared-norm ratio of the
/// integrated-against degree.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] unless `α, β > −1`.
pub fn jac_triple_integral_ratio(
    l: u32,
    m: u32,
    n: u32,
    alpha: &Rat,
    beta: &Rat,
) -> Result<Rat> {
    validate_orthogonality(&jac(alpha, beta))?;
    let (m, n) = (m.min(n), m.max(n));
    if l < n - m || l > n + m {
        return Ok(Rat::zero());
    }
    Ok(jac_a(l - (n - m), m, n, alpha, beta)? * norm_ratio(&jac(alpha, beta), l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::oracle_linearize;
    use proptest::prelude::*;

    #[test]
    fn pair_coefficients_match_frozen_values() {
        let (a, b) = (qq(1, 2), qq(1, 3));
        assert_eq!(jac_a(2, 2, 3, &a, &b).unwrap(), qq(72123, 128207));
        assert_eq!(jac_a(0, 2, 2, &a, &b).unwrap(), qq(6, 17));
        assert_eq!(jac_a(0, 0, 3, &a, &b).unwrap(), q(1));
    }

    #[test]
    fn pair_coefficients_match_spec_examples() {
        let z = q(0);
        assert_eq!(jac_a(0, 1, 1, &z, &z).unwrap(), qq(1, 3));
        assert_eq!(jac_a(1, 1, 1, &z, &z).unwrap(), q(0));
        assert_eq!(jac_a(2, 1, 1, &z, &z).unwrap(), qq(2, 3));
        // Outside the support band.
        assert_eq!(jac_a(3, 1, 4, &z, &z).unwrap(), q(0));
    }

    #[test]
    fn equal_parameters_take_the_exact_limit() {
        // α = β = 0 with m ≠ n: the removable singularity at α = β.
        let z = q(0);
        assert_eq!(jac_a(0, 1, 2, &z, &z).unwrap(), qq(2, 5));
        assert_eq!(jac_a(1, 1, 2, &z, &z).unwrap(), q(0));
        assert_eq!(jac_a(2, 1, 2, &z, &z).unwrap(), qq(3, 5));
        assert_eq!(jac_a(2, 2, 2, &q(1), &q(1)).unwrap(), q(1));
    }

    #[test]
    fn unsubscripted_variant_diverges_from_the_true_coefficient() {
        let (a, b) = (qq(1, 2), qq(1, 3));
        assert_eq!(jac_a_unsubscripted_variant(0, 2, 2, &a, &b).unwrap(), qq(-36, 493));
        assert_eq!(jac_a(0, 2, 2, &a, &b).unwrap(), qq(6, 17));
    }

    #[test]
    fn triple_integrals_match_frozen_values() {
        let z = q(0);
        assert_eq!(jac_triple_integral_ratio(2, 1, 1, &z, &z).unwrap(), qq(2, 15));
        assert_eq!(jac_triple_integral_ratio(4, 1, 1, &z, &z).unwrap(), q(0));
        let (a, b) = (qq(1, 2), qq(1, 3));
        assert_eq!(
            jac_triple_integral_ratio(2, 1, 2, &a, &b).unwrap(),
            qq(552, 20213)
        );
        assert_eq!(
            jac_triple_integral_ratio(3, 2, 2, &a, &b).unwrap(),
            qq(38640, 1736227)
        );
        assert_eq!(
            jac_triple_integral_ratio(1, 1, 1, &a, &b).unwrap(),
            qq(24, 667)
        );
        for n in 0..4 {
            assert_eq!(
                jac_triple_integral_ratio(0, n, n, &a, &b).unwrap(),
                norm_ratio(&jac(&a, &b), n).unwrap()
            );
        }
    }

    proptest! {
        /// The triple integral is symmetric in its degree arguments.
        #[test]
        fn triple_integral_is_permutation_invariant(l in 0u32..4, m in 0u32..4, n in 0u32..4) {
            let (a, b) = (qq(1, 2), qq(1, 3));
            let want = jac_triple_integral_ratio(l, m, n, &a, &b).unwrap();
            prop_assert_eq!(jac_triple_integral_ratio(m, n, l, &a, &b).unwrap(), want.clone());
            prop_assert_eq!(jac_triple_integral_ratio(n, l, m, &a, &b).unwrap(), want);
        }

        /// Pair coefficients reproduce the polynomial oracle, including on
        /// the removable-singularity lines α = β and β − α = 1.
        #[test]
        fn pair_coefficients_match_oracle(m in 0u32..4, n in 0u32..4, pi in 0usize..5) {
            let params = [
                (qq(1, 2), qq(1, 3)),
                (q(0), q(0)),
                (q(1), q(1)),
                (qq(3, 2), q(1)),
                (qq(1, 2), qq(3, 2)),
            ];
            let (alpha, beta) = &params[pi];
            let fam = jac(alpha, beta);
            let oracle = oracle_linearize(&fam, &[m, n]).unwrap();
            let lo = m.max(n) - m.min(n);
            for k in 0..= 2 * m.min(n) {
                prop_assert_eq!(
                    jac_a(k, m, n, alpha, beta).unwrap(),
                    oracle.coeff(k + lo),
                    "k={} m={} n={} alpha={} beta={}", k, m, n, alpha, beta
                );
            }
        }
    }
}
