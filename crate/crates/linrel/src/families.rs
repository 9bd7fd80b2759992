//! The classical polynomial families: recurrence data, validity domains,
//! explicit polynomials, and norm ratios.
//!
//! Every family is generated by the three-term recurrence
//!
//! ```text
//! p_{n+1}(x) = (Aₙ x + Bₙ) pₙ(x) − Cₙ p_{n−1}(x),    p_{−1} = 0,  p₀ = 1,
//! ```
//!
//! in the classical normalizations: Gegenbauer `C_n^λ`, physicists' Hermite
//! `H_n`, Jacobi `P_n^{(α,β)}`, Laguerre `L_n^α`, and the scaled Laguerre
//! family `x ↦ L_n^α(a·x)`.
//!
//! Two validity notions are kept apart. *Formal* validity only requires the
//! recurrence to stay nondegenerate (every leading coefficient `Aₙ` defined
//! and nonzero), so coefficient identities remain meaningful as rational
//! functions of the parameters. *Orthogonality* validity additionally
//! requires a positive measure: `λ > −1/2, λ ≠ 0` (Gegenbauer),
//! `α, β > −1` (Jacobi), `α > −1` (Laguerre), and `scale > 0` on top of
//! `α > −1` for the scaled family.

use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, pochhammer, q, qq, Rat};
use crate::polyalg::DensePoly;
use num_traits::{One, Signed, Zero};

/// A classical orthogonal polynomial family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Gegenbauer (ultraspherical) `C_n^λ`, weight `(1−x²)^{λ−1/2}` on `[−1,1]`.
    Gegenbauer {
        /// Family parameter `λ`.
        lambda: Rat,
    },
    /// Physicists' Hermite `H_n`, weight `e^{−x²}` on `ℝ`.
    Hermite,
    /// Jacobi `P_n^{(α,β)}`, weight `(1−x)^α (1+x)^β` on `[−1,1]`.
    Jacobi {
        /// Exponent `α` at `x = 1`.
        alpha: Rat,
        /// Exponent `β` at `x = −1`.
        beta: Rat,
    },
    /// Laguerre `L_n^α`, weight `x^α e^{−x}` on `[0,∞)`.
    Laguerre {
        /// Exponent `α` at the origin.
        alpha: Rat,
    },
    /// Scaled Laguerre `x ↦ L_n^α(a·x)`, orthogonal for `x^α e^{−a·x}`.
    ScaledLaguerre {
        /// Exponent `α` at the origin.
        alpha: Rat,
        /// Argument scale `a`.
        scale: Rat,
    },
}

impl FamilySpec {
    /// Short lowercase name used in reports and CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Gegenbauer { .. } => "gegenbauer",
            FamilySpec::Hermite => "hermite",
            FamilySpec::Jacobi { .. } => "jacobi",
            FamilySpec::Laguerre { .. } => "laguerre",
            FamilySpec::ScaledLaguerre { .. } => "scaled-laguerre",
        }
    }

    /// Family parameters as `(name, value)` pairs, for report serialization.
    pub fn params(&self) -> Vec<(&'static str, Rat)> {
        match self {
            FamilySpec::Gegenbauer { lambda } => vec![("lambda", lambda.clone())],
            FamilySpec::Hermite => vec![],
            FamilySpec::Jacobi { alpha, beta } => {
                vec![("alpha", alpha.clone()), ("beta", beta.clone())]
            }
            FamilySpec::Laguerre { alpha } => vec![("alpha", alpha.clone())],
            FamilySpec::ScaledLaguerre { alpha, scale } => {
                vec![("alpha", alpha.clone()), ("scale", scale.clone())]
            }
        }
    }
}

/// Coefficients of one recurrence step `p_{n+1} = (a·x + b) pₙ − c·p_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    /// Leading coefficient `Aₙ`; nonzero for a nondegenerate family.
    pub a: Rat,
    /// Constant term `Bₙ`.
    pub b: Rat,
    /// Back-coupling `Cₙ`; normalized to 0 at `n = 0` where it multiplies `p_{−1} = 0`.
    pub c: Rat,
}

/// Check that the recurrence stays nondegenerate for every degree.
///
/// # Errors
/// [`Error::DegenerateBasis`] when some `Aₙ` vanishes or is undefined:
/// Gegenbauer `λ ∈ {0, −1, −2, …}`, Jacobi `α+β` an integer `≤ −2`,
/// scaled Laguerre `scale = 0`.
pub fn validate_formal(family: &FamilySpec) -> Result<()> {
    match family {
        FamilySpec::Gegenbauer { lambda } => {
            if lambda.is_integer() && !lambda.is_positive() {
                return Err(Error::DegenerateBasis(format!(
                    "gegenbauer leading coefficient vanishes at degree {}",
                    -lambda.to_integer()
                )));
            }
            Ok(())
        }
        FamilySpec::Hermite => Ok(()),
        FamilySpec::Jacobi { alpha, beta } => {
            let s = alpha + beta;
            if s.is_integer() && s <= q(-2) {
                return Err(Error::DegenerateBasis(
                    "jacobi recurrence degenerates when alpha+beta is an integer <= -2".into(),
                ));
            }
            Ok(())
        }
        FamilySpec::Laguerre { .. } => Ok(()),
        FamilySpec::ScaledLaguerre { scale, .. } => {
            if scale.is_zero() {
                return Err(Error::DegenerateBasis(
                    "scaled laguerre with zero argument scale".into(),
                ));
            }
            Ok(())
        }
    }
}

/// Check that the family parameters admit a positive orthogonality measure.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] outside the domains listed in the
/// module docs; degenerate parameter sets fail here too.
pub fn validate_orthogonality(family: &FamilySpec) -> Result<()> {
    let bad = |msg: &str| Err(Error::InvalidOrthogonalityDomain(msg.into()));
    match family {
        FamilySpec::Gegenbauer { lambda } => {
            if lambda.is_zero() || *lambda <= qq(-1, 2) {
                return bad("gegenbauer requires lambda > -1/2 and lambda != 0");
            }
            Ok(())
        }
        FamilySpec::Hermite => Ok(()),
        FamilySpec::Jacobi { alpha, beta } => {
            if *alpha <= q(-1) || *beta <= q(-1) {
                return bad("jacobi requires alpha > -1 and beta > -1");
            }
            Ok(())
        }
        FamilySpec::Laguerre { alpha } => {
            if *alpha <= q(-1) {
                return bad("laguerre requires alpha > -1");
            }
            Ok(())
        }
        FamilySpec::ScaledLaguerre { alpha, scale } => {
            if *alpha <= q(-1) {
                return bad("scaled laguerre requires alpha > -1");
            }
            if !scale.is_positive() {
                return bad("scaled laguerre requires scale > 0");
            }
            Ok(())
        }
    }
}

/// Recurrence coefficients `(Aₙ, Bₙ, Cₙ)` at degree `n`.
///
/// `C₀` is normalized to 0 for every family since it multiplies `p_{−1} = 0`.
///
/// # Errors
/// [`Error::DegenerateBasis`] from [`validate_formal`].
pub fn recurrence_coeffs(family: &FamilySpec, n: u32) -> Result<RecurrenceCoeffs> {
    validate_formal(family)?;
    let nq = q(n as i64);
    let np1 = q(n as i64 + 1);
    let coeffs = match family {
        FamilySpec::Gegenbauer { lambda } => RecurrenceCoeffs {
            a: q(2) * (&nq + lambda) / &np1,
            b: Rat::zero(),
            c: if n == 0 {
                Rat::zero()
            } else {
                (&nq + q(2) * lambda - q(1)) / &np1
            },
        },
        FamilySpec::Hermite => RecurrenceCoeffs {
            a: q(2),
            b: Rat::zero(),
            c: q(2) * &nq,
        },
        FamilySpec::Jacobi { alpha, beta } => {
            if n == 0 {
                // The generic formulas have a removable 0/0 at n = 0.
                RecurrenceCoeffs {
                    a: (alpha + beta + q(2)) / q(2),
                    b: (alpha - beta) / q(2),
                    c: Rat::zero(),
                }
            } else {
                let s = alpha + beta;
                let t = q(2) * &nq + &s; // 2n + α + β, nonzero for nondegenerate parameters
                let u = &nq + &s + q(1); // n + α + β + 1
                RecurrenceCoeffs {
                    a: (&t + q(1)) * (&t + q(2)) / (q(2) * &np1 * &u),
                    b: (alpha * alpha - beta * beta) * (&t + q(1)) / (q(2) * &np1 * &u * &t),
                    c: (&nq + alpha) * (&nq + beta) * (&t + q(2)) / (&np1 * &u * &t),
                }
            }
        }
        FamilySpec::Laguerre { alpha } => RecurrenceCoeffs {
            a: -Rat::one() / &np1,
            b: (q(2) * &nq + alpha + q(1)) / &np1,
            c: if n == 0 { Rat::zero() } else { (&nq + alpha) / &np1 },
        },
        FamilySpec::ScaledLaguerre { alpha, scale } => RecurrenceCoeffs {
            a: -scale / &np1,
            b: (q(2) * &nq + alpha + q(1)) / &np1,
            c: if n == 0 { Rat::zero() } else { (&nq + alpha) / &np1 },
        },
    };
    Ok(coeffs)
}

/// `pₙ` as a dense polynomial, generated by the recurrence.
///
/// # Errors
/// [`Error::DegenerateBasis`] from [`validate_formal`].
pub fn family_poly(family: &FamilySpec, n: u32) -> Result<DensePoly> {
    validate_formal(family)?;
    let mut prev = DensePoly::zero(); // p_{-1}
    let mut cur = DensePoly::one(); // p_0
    for k in 0..n {
        let rc = recurrence_coeffs(family, k)?;
        let next = &(&DensePoly::from_coeffs(vec![rc.b, rc.a]) * &cur) - &prev.scale(&rc.c);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Terminating-series polynomial `Σ_j Π(aᵢ)_j / (Π(bᵢ)_j · j!) · argʲ`, the
/// polynomial-argument counterpart of `pfq_eval`.
fn pfq_poly(nums: &[Rat], dens: &[Rat], arg: &DensePoly) -> Result<DensePoly> {
    let t = nums
        .iter()
        .filter_map(crate::exactcore::nonpositive_integer_order)
        .min()
        .ok_or_else(|| Error::NonTerminating("polynomial series needs a nonpositive-integer upper parameter".into()))?;
    let mut total = DensePoly::one();
    let mut term = DensePoly::one();
    for j in 0..t {
        let jq = q(j as i64);
        let mut ratio = Rat::one();
        for a in nums {
            ratio *= a + &jq;
        }
        if ratio.is_zero() {
            break;
        }
        let mut den = q(j as i64 + 1);
        for b in dens {
            den *= b + &jq;
        }
        if den.is_zero() {
            return Err(Error::FormulaPole(format!(
                "series lower parameter vanished at step {}",
                j + 1
            )));
        }
        term = term.scale(&(ratio / den));
        term = &term * arg;
        total = &total + &term;
    }
    Ok(total)
}

/// `pₙ` as a dense polynomial, from the hypergeometric closed form of the
/// family rather than the recurrence.
///
/// Gegenbauer, Jacobi, and Laguerre use their terminating ₂F₁/₁F₁ forms in
/// the argument `(1−x)/2` or `x`; Hermite uses its explicit terminating sum
/// `n! Σ_m (−1)^m (2x)^{n−2m}/(m!(n−2m)!)`.
///
/// # Errors
/// [`Error::DegenerateBasis`] for degenerate parameters;
/// [`Error::FormulaPole`] when a closed-form lower parameter hits a
/// nonpositive integer the series actually reaches.
pub fn family_poly_hyp(family: &FamilySpec, n: u32) -> Result<DensePoly> {
    validate_formal(family)?;
    let nn = n as i64;
    let half_shift = DensePoly::from_coeffs(vec![qq(1, 2), qq(-1, 2)]); // (1-x)/2
    match family {
        FamilySpec::Gegenbauer { lambda } => {
            // C_n^λ(x) = (2λ)_n/n! · ₂F₁(−n, n+2λ; λ+1/2; (1−x)/2)
            let pref = pochhammer(&(q(2) * lambda), n) / factorial_rat(n);
            let series = pfq_poly(
                &[q(-nn), q(nn) + q(2) * lambda],
                &[lambda + qq(1, 2)],
                &half_shift,
            )?;
            Ok(series.scale(&pref))
        }
        FamilySpec::Hermite => {
            // H_n(x) = n! Σ_{m≤n/2} (−1)^m (2x)^{n−2m} / (m! (n−2m)!)
            let mut coeffs = vec![Rat::zero(); n as usize + 1];
            let nfact = factorial_rat(n);
            let mut two_pow = vec![Rat::one()];
            for _ in 0..n {
                two_pow.push(two_pow.last().unwrap() * q(2));
            }
            for m in 0..=(n / 2) {
                let deg = (n - 2 * m) as usize;
                let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
                coeffs[deg] = sign * &nfact * &two_pow[deg]
                    / (factorial_rat(m) * factorial_rat(n - 2 * m));
            }
            Ok(DensePoly::from_coeffs(coeffs))
        }
        FamilySpec::Jacobi { alpha, beta } => {
            // P_n^{(α,β)}(x) = (α+1)_n/n! · ₂F₁(−n, n+α+β+1; α+1; (1−x)/2)
            let pref = pochhammer(&(alpha + q(1)), n) / factorial_rat(n);
            let series = pfq_poly(
                &[q(-nn), q(nn) + alpha + beta + q(1)],
                &[alpha + q(1)],
                &half_shift,
            )?;
            Ok(series.scale(&pref))
        }
        FamilySpec::Laguerre { alpha } => {
            // L_n^α(x) = (α+1)_n/n! · ₁F₁(−n; α+1; x)
            let pref = pochhammer(&(alpha + q(1)), n) / factorial_rat(n);
            let series = pfq_poly(&[q(-nn)], &[alpha + q(1)], &DensePoly::x())?;
            Ok(series.scale(&pref))
        }
        FamilySpec::ScaledLaguerre { alpha, scale } => {
            // L_n^α(a·x): the confluent series with argument a·x.
            let pref = pochhammer(&(alpha + q(1)), n) / factorial_rat(n);
            let arg = DensePoly::from_coeffs(vec![Rat::zero(), scale.clone()]);
            let series = pfq_poly(&[q(-nn)], &[alpha + q(1)], &arg)?;
            Ok(series.scale(&pref))
        }
    }
}

/// Norm ratio `hₙ/h₀ = ∫pₙ² dμ / ∫p₀² dμ` for the family's own measure.
///
/// Closed forms: Gegenbauer `λ(2λ)ₙ/((n+λ) n!)`, Hermite `2ⁿ n!`,
/// Jacobi `(α+1)ₙ(β+1)ₙ / ((2n+α+β+1)(α+β+2)_{n−1} n!)` (written so the
/// removable factor `α+β+1` never divides), Laguerre `(α+1)ₙ/n!`. The
/// scaled Laguerre family is orthogonal for `x^α e^{−a·x}` and its ratio
/// equals the Laguerre one: the scale cancels between `hₙ` and `h₀`.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] from [`validate_orthogonality`].
pub fn norm_ratio(family: &FamilySpec, n: u32) -> Result<Rat> {
    validate_orthogonality(family)?;
    let value = match family {
        FamilySpec::Gegenbauer { lambda } => {
            lambda * pochhammer(&(q(2) * lambda), n)
                / ((q(n as i64) + lambda) * factorial_rat(n))
        }
        FamilySpec::Hermite => {
            let mut v = factorial_rat(n);
            for _ in 0..n {
                v *= q(2);
            }
            v
        }
        FamilySpec::Jacobi { alpha, beta } => {
            if n == 0 {
                Rat::one()
            } else {
                let s = alpha + beta;
                pochhammer(&(alpha + q(1)), n) * pochhammer(&(beta + q(1)), n)
                    / ((q(2 * n as i64) + &s + q(1))
                        * pochhammer(&(&s + q(2)), n - 1)
                        * factorial_rat(n))
            }
        }
        FamilySpec::Laguerre { alpha } | FamilySpec::ScaledLaguerre { alpha, .. } => {
            pochhammer(&(alpha + q(1)), n) / factorial_rat(n)
        }
    };
    Ok(value)
}
