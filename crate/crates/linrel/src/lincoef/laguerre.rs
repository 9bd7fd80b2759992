//! Laguerre linearization: pair coefficients, the triple product integral,
//! and the scaled triple product integral `∫ L_p^α(x) L_m^α(ax) L_n^α(bx)
//! x^α e^{−x} dx / Γ(α+1)`.
//!
//! The scaled integral has two independent closed forms: a folded double sum
//! valid for every degree order, and a Kampé de Fériet form valid for
//! `p ≥ m`. When both apply they are evaluated and compared on every call;
//! a mismatch is reported as an internal inconsistency rather than silently
//! preferring one route.

use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, pochhammer, q, qq, Rat};
use crate::families::{validate_orthogonality, FamilySpec};
use crate::hyper::{kdf_eval, pfq_eval, HypSeriesSpec, KdFSpec};
use num_traits::{pow::pow, One, Zero};

/// `(−1)^e` as an exact rational.
fn sign(e: u32) -> Rat {
    if e % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn check_alpha(alpha: &Rat) -> Result<()> {
    validate_orthogonality(&FamilySpec::Laguerre { alpha: alpha.clone() })
}

/// Linearization coefficient of `L_k^α` in `L_m^α L_n^α`.
///
/// The support is `|m−n| ≤ k ≤ m+n`; indices outside it yield 0.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] for `α ≤ −1`;
/// [`Error::FormulaPole`] when `(α+1)_k` vanishes (never for `α > −1`).
pub fn lag_lin_coeff(k: u32, m: u32, n: u32, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    if k < n - m || k > n + m {
        return Ok(Rat::zero());
    }
    let a1 = alpha + q(1);
    let pref = pochhammer(&qq(1, 2), m) * pochhammer(&a1, n)
        * Rat::from_integer(num_bigint::BigInt::one() << (2 * m))
        / factorial_rat(n - m);
    let poch_k = pochhammer(&a1, k);
    if poch_k.is_zero() {
        return Err(Error::FormulaPole(
            "laguerre pair coefficient denominator vanished".into(),
        ));
    }
    let kfac = sign(k + n + m) * factorial_rat(k)
        / (poch_k * factorial_rat(m + n - k) * factorial_rat(k + m - n));
    let (ki, mi, ni) = (k as i64, m as i64, n as i64);
    let series = HypSeriesSpec::new(
        &[
            -alpha - q(mi),
            qq(ni - mi - ki, 2),
            qq(ni - mi - ki + 1, 2),
        ],
        &[q(ni - mi + 1), qq(1, 2) - q(mi)],
        Rat::one(),
    );
    Ok(pref * kfac * pfq_eval(&series)?)
}

/// Integral ratio `∫ L_p^α L_m^α L_n^α x^α e^{−x} dx / Γ(α+1)`.
///
/// Vanishes outside the triangle `|m−n| ≤ p ≤ m+n`; inside it the value is
/// a Pochhammer prefactor times a terminating ₃F₂ of unit argument.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] for `α ≤ −1`.
pub fn lag_triple_integral_ratio(p: u32, m: u32, n: u32, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    let (lo, hi) = (m.min(n), m.max(n));
    let d = hi - lo;
    if p < d || p > m + n {
        return Ok(Rat::zero());
    }
    let pref = pochhammer(&(alpha + q(1)), hi)
        * sign(p + n + m)
        * Rat::from_integer(num_bigint::BigInt::one() << (2 * lo))
        * pochhammer(&qq(1, 2), lo)
        / (factorial_rat(d) * factorial_rat(m + n - p) * factorial_rat(p - d));
    let (di, pi, lo_i) = (d as i64, p as i64, lo as i64);
    let series = HypSeriesSpec::new(
        &[-alpha - q(lo_i), qq(di - pi, 2), qq(di - pi + 1, 2)],
        &[q(1 + di), qq(1, 2) - q(lo_i)],
        Rat::one(),
    );
    Ok(pref * pfq_eval(&series)?)
}

fn check_scaled_inputs(alpha: &Rat, a: &Rat, b: &Rat) -> Result<()> {
    check_alpha(alpha)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegenerateBasis(
            "scaled laguerre factor with zero scale".into(),
        ));
    }
    Ok(())
}

/// Pochhammer `(z)_e` for a signed index, as a numerator/denominator
/// contribution: `(z)_{−j} = 1/(z−j)_j`, so a negative index returns the
/// reflected product destined for the opposite side of the fraction.
fn poch_signed(z: &Rat, e: i64) -> (Rat, Rat) {
    if e >= 0 {
        (pochhammer(z, e as u32), Rat::one())
    } else {
        let j = (-e) as u32;
        (Rat::one(), pochhammer(&(z - q(-e)), j))
    }
}

/// Shared prefactor `(−a/b)^m b^p` and the degree guard for both scaled
/// routes. Returns `None` when `p > n+m`, where the integral vanishes.
fn scaled_pref(p: u32, m: u32, n: u32, a: &Rat, b: &Rat) -> Option<Rat> {
    if p > n + m {
        return None;
    }
    Some(pow(-(a / b), m as usize) * pow(b.clone(), p as usize))
}

/// Double-sum route, valid for every degree order.
fn scaled_double_sum(p: u32, m: u32, n: u32, alpha: &Rat, a: &Rat, b: &Rat) -> Result<Rat> {
    let Some(scale_pref) = scaled_pref(p, m, n, a, b) else {
        return Ok(Rat::zero());
    };
    let a1p = alpha + q(1 + p as i64);
    let pref = pochhammer(&(alpha + q(1)), n) * sign(m) * scale_pref
        / (factorial_rat(p) * factorial_rat(m) * factorial_rat(n + m - p));
    let ratio_k = -(b / a);
    let mut total = Rat::zero();
    for k in 0..=m {
        if n + m < p + k {
            continue;
        }
        for l in 0..=(n + m - p - k) {
            let mut num = pochhammer(&q(-(m as i64)), k)
                * pochhammer(&(-alpha - q(m as i64)), k)
                * pochhammer(&q(1 + p as i64), l)
                * pochhammer(&a1p, l)
                * pochhammer(&q(p as i64 - (n + m) as i64), k + l);
            let mut den = factorial_rat(k) * factorial_rat(l);
            let e = (k + l) as i64 - m as i64;
            // (−α−p)_m folded against the joint lower factor (α+p−m+1)_{k+l}.
            if e <= 0 {
                num *= pochhammer(&(alpha + q((p + 1 + k + l) as i64 - m as i64)), (-e) as u32);
            } else {
                den *= pochhammer(&a1p, e as u32);
            }
            // Joint lower factor (p+1)_{k+l−m}, index possibly negative.
            let (pn, pd) = poch_signed(&q(1 + p as i64), e);
            num *= pd;
            den *= pn;
            if den.is_zero() {
                return Err(Error::FormulaPole(
                    "scaled laguerre double-sum denominator vanished".into(),
                ));
            }
            total += num / den * pow(ratio_k.clone(), k as usize) * pow(b.clone(), l as usize);
        }
    }
    Ok(pref * total)
}

/// Kampé de Fériet route for the scaled integral ratio, valid for `p ≥ m`.
///
/// # Errors
/// [`Error::IndexOutOfRange`] for `p < m`; validity errors as for
/// [`scaled_lag_integral_ratio`].
pub fn scaled_lag_integral_ratio_kdf(
    p: u32,
    m: u32,
    n: u32,
    alpha: &Rat,
    a: &Rat,
    b: &Rat,
) -> Result<Rat> {
    check_scaled_inputs(alpha, a, b)?;
    if p < m {
        return Err(Error::IndexOutOfRange(format!(
            "double-series route requires first degree {p} >= second degree {m}"
        )));
    }
    let Some(scale_pref) = scaled_pref(p, m, n, a, b) else {
        return Ok(Rat::zero());
    };
    let (pi, mi, ni) = (p as i64, m as i64, n as i64);
    let pref = pochhammer(&(alpha + q(1)), n) * pochhammer(&(-alpha - q(pi)), m) * scale_pref
        / (factorial_rat(m) * factorial_rat(p - m) * factorial_rat(n + m - p));
    let spec = KdFSpec {
        upper_joint: vec![q(pi - ni - mi)],
        upper_first: vec![q(-mi), -alpha - q(mi)],
        upper_second: vec![q(pi + 1), alpha + q(pi + 1)],
        lower_joint: vec![q(pi - mi + 1), alpha + q(pi - mi + 1)],
        lower_first: vec![],
        lower_second: vec![],
        argument_first: -(b / a),
        argument_second: b.clone(),
    };
    Ok(pref * kdf_eval(&spec)?)
}

/// Integral ratio `∫ L_p^α(x) L_m^α(ax) L_n^α(bx) x^α e^{−x} dx / Γ(α+1)`.
///
/// Evaluated by the double-sum route; whenever the Kampé de Fériet route
/// also applies (`p ≥ m`), both are computed and must agree exactly.
///
/// Vanishes for `p > m+n`. The scales may be any nonzero rationals: the
/// factors are polynomials and the measure does not depend on them.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] for `α ≤ −1`;
/// [`Error::DegenerateBasis`] for a zero scale;
/// [`Error::InternalInconsistency`] if the two routes disagree.
pub fn scaled_lag_integral_ratio(
    p: u32,
    m: u32,
    n: u32,
    alpha: &Rat,
    a: &Rat,
    b: &Rat,
) -> Result<Rat> {
    check_scaled_inputs(alpha, a, b)?;
    let value = scaled_double_sum(p, m, n, alpha, a, b)?;
    if p >= m {
        let alt = scaled_lag_integral_ratio_kdf(p, m, n, alpha, a, b)?;
        if alt != value {
            return Err(Error::InternalInconsistency(format!(
                "scaled laguerre routes disagree for degrees ({p},{m},{n}): \
                 double sum {value}, double series {alt}"
            )));
        }
    }
    Ok(value)
}
