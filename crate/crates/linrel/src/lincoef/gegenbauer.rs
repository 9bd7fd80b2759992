//! Gegenbauer linearization: two- and three-factor coefficients, product
//! integrals, and the x = 1 consistency identity.
//!
//! With `s = p + m + n`, the expansions are
//!
//! ```text
//! C_m^λ C_n^λ = Σ_{k=0}^{min(m,n)}  B_k  C_{m+n−2k}^λ,
//! C_p^λ C_m^λ C_n^λ = Σ_{k=0}^{⌊s/2⌋}  F_k  C_{s−2k}^λ,
//! ```
//!
//! where `B_k` is a pure Pochhammer ratio and `F_k` splits into two branches
//! (`k ≤ p−1` and `k ≥ p` after sorting `p ≤ m ≤ n`), each a Pochhammer
//! prefactor times a terminating ₁₁F₁₀ of unit argument.

use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, is_even, pochhammer, q, qq, Rat};
use crate::families::{norm_ratio, validate_formal, validate_orthogonality, FamilySpec};
use crate::hyper::{pfq_eval, HypSeriesSpec};
use num_traits::{One, Zero};

fn geg(lambda: &Rat) -> FamilySpec {
    FamilySpec::Gegenbauer { lambda: lambda.clone() }
}

/// Two-factor linearization coefficient `B_k` of `C_{m+n−2k}^λ` in
/// `C_m^λ C_n^λ`.
///
/// `k` beyond `min(m,n)` lies outside the expansion's support and yields 0.
///
/// # Errors
/// [`Error::DegenerateBasis`] for degenerate `λ`; [`Error::FormulaPole`]
/// when a denominator factor vanishes (half-integer `λ ≤ 0` cases).
pub fn geg_b(k: u32, m: u32, n: u32, lambda: &Rat) -> Result<Rat> {
    validate_formal(&geg(lambda))?;
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    if k > m {
        return Ok(Rat::zero());
    }
    let two_lambda = q(2) * lambda;
    let mn = (m + n) as i64;
    let kk = k as i64;
    let num = (lambda + q(mn - 2 * kk))
        * factorial_rat(m + n - 2 * k)
        * pochhammer(lambda, k)
        * pochhammer(lambda, m - k)
        * pochhammer(lambda, n - k)
        * pochhammer(&two_lambda, m + n - k);
    let den = (lambda + q(mn - kk))
        * factorial_rat(k)
        * factorial_rat(m - k)
        * factorial_rat(n - k)
        * pochhammer(lambda, m + n - k)
        * pochhammer(&two_lambda, m + n - 2 * k);
    if den.is_zero() {
        return Err(Error::FormulaPole(
            "gegenbauer pair coefficient denominator vanished".into(),
        ));
    }
    Ok(num / den)
}

/// Branch of `F_k` for `k ≤ p−1` (sorted `p ≤ m ≤ n`).
fn geg_d(k: u32, p: u32, m: u32, n: u32, lambda: &Rat) -> Result<Rat> {
    let two_lambda = q(2) * lambda;
    let (ki, pi, mi, ni) = (k as i64, p as i64, m as i64, n as i64);
    let pref1_num = factorial_rat(m + n) * pochhammer(lambda, m) * pochhammer(lambda, n);
    let pref1_den = factorial_rat(m) * factorial_rat(n) * pochhammer(lambda, m + n);
    let pref2_num = (lambda + q(mi + ni + pi - 2 * ki))
        * factorial_rat(m + n + p - 2 * k)
        * pochhammer(lambda, k)
        * pochhammer(lambda, p - k)
        * pochhammer(lambda, m + n - k)
        * pochhammer(&two_lambda, m + n + p - k);
    let pref2_den = (lambda + q(mi + ni + pi - ki))
        * factorial_rat(k)
        * factorial_rat(p - k)
        * factorial_rat(m + n - k)
        * pochhammer(lambda, m + n + p - k)
        * pochhammer(&two_lambda, m + n + p - 2 * k);
    let den = pref1_den * pref2_den;
    if den.is_zero() {
        return Err(Error::FormulaPole(
            "gegenbauer triple coefficient denominator vanished".into(),
        ));
    }
    let series = HypSeriesSpec::new(
        &[
            lambda.clone(),
            lambda + q(pi - ki),
            q(-ki),
            q(-mi),
            q(-ni),
            q(-mi - ni + ki),
            -lambda - q(mi + ni),
            -lambda - q(mi + ni + pi - ki),
            (-lambda + q(2 - mi - ni)) / q(2),
            (-&two_lambda + q(1 - mi - ni)) / q(2),
            (-&two_lambda + q(2 - mi - ni)) / q(2),
        ],
        &[
            q(1 + pi - ki),
            -lambda + q(1 - ki),
            -lambda + q(1 - mi),
            -lambda + q(1 - ni),
            -lambda + q(1 - mi - ni + ki),
            -&two_lambda + q(1 - mi - ni),
            -&two_lambda + q(1 - mi - ni - pi + ki),
            (-lambda - q(mi + ni)) / q(2),
            q(-mi - ni) / q(2),
            q(1 - mi - ni) / q(2),
        ],
        Rat::one(),
    );
    Ok(pref1_num * pref2_num / den * pfq_eval(&series)?)
}

/// Branch of `F_k` for `k ≥ p` (sorted `p ≤ m ≤ n`).
fn geg_e(k: u32, p: u32, m: u32, n: u32, lambda: &Rat) -> Result<Rat> {
    let two_lambda = q(2) * lambda;
    let (ki, pi, mi, ni) = (k as i64, p as i64, m as i64, n as i64);
    let num = (lambda + q(mi + ni + pi - 2 * ki))
        * factorial_rat(m + n + 2 * p - 2 * k)
        * pochhammer(lambda, p)
        * pochhammer(lambda, k - p)
        * pochhammer(lambda, m + p - k)
        * pochhammer(lambda, n + p - k)
        * pochhammer(lambda, m + n + p - 2 * k)
        * pochhammer(&two_lambda, m + n + p - k);
    let den = (lambda + q(mi + ni + pi - ki))
        * factorial_rat(p)
        * factorial_rat(k - p)
        * factorial_rat(m + p - k)
        * factorial_rat(n + p - k)
        * pochhammer(lambda, m + n + p - k)
        * pochhammer(lambda, m + n + 2 * p - 2 * k)
        * pochhammer(&two_lambda, m + n + p - 2 * k);
    if den.is_zero() {
        return Err(Error::FormulaPole(
            "gegenbauer triple coefficient denominator vanished".into(),
        ));
    }
    let shift = 2 * ki - 2 * pi - mi - ni;
    let series = HypSeriesSpec::new(
        &[
            lambda.clone(),
            lambda + q(ki - pi),
            q(-pi),
            q(-mi - pi + ki),
            q(-ni - pi + ki),
            q(-mi - ni - pi + 2 * ki),
            -lambda - q(mi + ni + pi - ki),
            -lambda - q(mi + ni + 2 * pi - 2 * ki),
            (-lambda + q(shift + 2)) / q(2),
            (-&two_lambda + q(1 + shift)) / q(2),
            (-&two_lambda + q(2 + shift)) / q(2),
        ],
        &[
            q(1 + ki - pi),
            -lambda + q(1 - pi),
            -lambda + q(1 - mi - pi + ki),
            -lambda + q(1 - ni - pi + ki),
            -lambda + q(1 - mi - ni - pi + 2 * ki),
            -&two_lambda + q(1 - mi - ni - pi + ki),
            -&two_lambda + q(1 - mi - ni - 2 * pi + 2 * ki),
            (-lambda + q(shift)) / q(2),
            q(shift) / q(2),
            q(1 + shift) / q(2),
        ],
        Rat::one(),
    );
    Ok(num / den * pfq_eval(&series)?)
}

/// Three-factor linearization coefficient `F_k` of `C_{s−2k}^λ` in
/// `C_p^λ C_m^λ C_n^λ`, with `s = p+m+n` and the degrees sorted internally.
///
/// Inside the index range, `k` beyond the support bound `min₁+min₂`
/// (the two smallest degrees) yields 0.
///
/// # Errors
/// [`Error::IndexOutOfRange`] for `k > ⌊s/2⌋`; [`Error::DegenerateBasis`]
/// and [`Error::FormulaPole`] as for [`geg_b`].
pub fn geg_f(k: u32, p: u32, m: u32, n: u32, lambda: &Rat) -> Result<Rat> {
    validate_formal(&geg(lambda))?;
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
        geg_d(k, p, m, n, lambda)
    } else {
        geg_e(k, p, m, n, lambda)
    }
}

/// Integral ratio `∫ C_{d₁}^λ C_{d₂}^λ C_{d₃}^λ dμ / h₀`.
///
/// Vanishes for odd total degree or when the top degree exceeds the sum of
/// the other two; otherwise it is `B_k · h_top/h₀` at the matching index.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] for parameters without a measure;
/// [`Error::FormulaPole`] as for [`geg_b`].
pub fn geg_triple_integral_ratio(d1: u32, d2: u32, d3: u32, lambda: &Rat) -> Result<Rat> {
    validate_orthogonality(&geg(lambda))?;
    let mut d = [d1, d2, d3];
    d.sort_unstable();
    let [a, b, c] = d;
    if !is_even((a + b + c) as i64) || c > a + b {
        return Ok(Rat::zero());
    }
    let k = (a + b - c) / 2;
    Ok(geg_b(k, a, b, lambda)? * norm_ratio(&geg(lambda), c)?)
}

/// Integral ratio `∫ C_{d₁}^λ C_{d₂}^λ C_{d₃}^λ C_{d₄}^λ dμ / h₀`.
///
/// Sorted so the largest degree is matched against the three-factor
/// expansion of the rest: `F_k · h_top/h₀` with `k = (d₁+d₂+d₃−d₄)/2`.
///
/// # Errors
/// As for [`geg_triple_integral_ratio`].
pub fn geg_quad_integral_ratio(d1: u32, d2: u32, d3: u32, d4: u32, lambda: &Rat) -> Result<Rat> {
    validate_orthogonality(&geg(lambda))?;
    let mut d = [d1, d2, d3, d4];
    d.sort_unstable();
    let [a, b, c, top] = d;
    let s = a + b + c;
    if !is_even((s + top) as i64) || top > s {
        return Ok(Rat::zero());
    }
    let k = (s - top) / 2;
    Ok(geg_f(k, a, b, c, lambda)? * norm_ratio(&geg(lambda), top)?)
}

/// Residual of the x = 1 consistency identity for the three-factor
/// expansion: evaluating `C_p^λ C_m^λ C_n^λ = Σ_k F_k C_{s−2k}^λ` at
/// `x = 1`, where `C_j^λ(1) = (2λ)_j/j!`, gives
///
/// ```text
/// (2λ)_p (2λ)_m (2λ)_n / (p! m! n!)
///   = (2λ)_s/s! · Σ_k F_k · (−s/2)_k ((−s+1)/2)_k
///       / [ ((−2λ−s+1)/2)_k ((−2λ−s+2)/2)_k ].
/// ```
///
/// Returns left minus right, which must be exactly zero.
///
/// # Errors
/// As for [`geg_f`], plus [`Error::FormulaPole`] when a weight denominator
/// vanishes.
pub fn geg_x1_identity_residual(p: u32, m: u32, n: u32, lambda: &Rat) -> Result<Rat> {
    validate_formal(&geg(lambda))?;
    let two_lambda = q(2) * lambda;
    let s = p + m + n;
    let si = s as i64;
    let lhs = pochhammer(&two_lambda, p) * pochhammer(&two_lambda, m) * pochhammer(&two_lambda, n)
        / (factorial_rat(p) * factorial_rat(m) * factorial_rat(n));
    let mut sum = Rat::zero();
    for k in 0..=s / 2 {
        let f = geg_f(k, p, m, n, lambda)?;
        let w_num = pochhammer(&qq(-si, 2), k) * pochhammer(&(q(-si + 1) / q(2)), k);
        let w_den = pochhammer(&((-&two_lambda + q(1 - si)) / q(2)), k)
            * pochhammer(&((-&two_lambda + q(2 - si)) / q(2)), k);
        if w_den.is_zero() {
            return Err(Error::FormulaPole(
                "x = 1 identity weight denominator vanished".into(),
            ));
        }
        sum += f * w_num / w_den;
    }
    let rhs = pochhammer(&two_lambda, s) / factorial_rat(s) * sum;
    Ok(lhs - rhs)
}
