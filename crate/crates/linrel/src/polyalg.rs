//! Dense polynomial arithmetic and the oracle side of every verification:
//! products expanded in the monomial basis, triangular change of basis back
//! into a family, and truncated generating-function cross-checks.
//!
//! The oracle never touches a hypergeometric series. A linearization claim
//!
//! ```text
//! p_{n₁} ⋯ p_{nᵣ} = Σ_k c_k p_k
//! ```
//!
//! is checked by multiplying the recurrence-generated polynomials exactly
//! and converting back with [`to_family_basis`]; an integral claim is
//! checked through the degree-0 coefficient, since `∫ p_k dμ = h₀ δ_{k0}`
//! for the measure's own orthogonal family.

use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, pochhammer, q, Rat};
use crate::families::{family_poly, validate_orthogonality, FamilySpec};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

/// Dense univariate polynomial over exact rationals.
///
/// Invariant: the coefficient vector never ends in a zero; the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DensePoly {
    coeffs: Vec<Rat>,
}

impl DensePoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Constant polynomial.
    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Build from coefficients in increasing degree order, trimming zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients in increasing degree order (empty for zero).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitute `x ↦ a·x`.
    pub fn scale_argument(&self, a: &Rat) -> Self {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &pow;
                pow *= a;
                v
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DensePoly::from_coeffs(coeffs)
    }
}

/// A finite expansion `Σ_k c_k p_k` in some family basis; only nonzero
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinExpansion {
    /// Map from basis degree `k` to the nonzero coefficient `c_k`.
    pub coeffs: BTreeMap<u32, Rat>,
}

impl LinExpansion {
    /// Coefficient of `p_k`, zero when absent.
    pub fn coeff(&self, k: u32) -> Rat {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Store a coefficient, dropping exact zeros.
    pub fn insert(&mut self, k: u32, v: Rat) {
        if !v.is_zero() {
            self.coeffs.insert(k, v);
        }
    }

    /// Degrees with nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    /// Largest degree present, if any.
    pub fn max_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Build from `(degree, coefficient)` pairs, dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, Rat)>) -> Self {
        let mut e = Self::default();
        for (k, v) in pairs {
            e.insert(k, v);
        }
        e
    }
}

/// Expand `poly` in the basis `{p_k}` of `family` by triangular elimination
/// from the top degree down.
///
/// # Errors
/// [`Error::DegenerateBasis`] when the family itself is degenerate.
pub fn to_family_basis(poly: &DensePoly, family: &FamilySpec) -> Result<LinExpansion> {
    let mut expansion = LinExpansion::default();
    let Some(top) = poly.degree() else {
        return Ok(expansion);
    };
    let basis: Vec<DensePoly> = (0..=top as u32)
        .map(|k| family_poly(family, k))
        .collect::<Result<_>>()?;
    let mut rest = poly.clone();
    while let Some(d) = rest.degree() {
        // Leading coefficients are nonzero for nondegenerate families.
        let c = rest.coeff(d) / basis[d].coeff(d);
        rest = &rest - &basis[d].scale(&c);
        debug_assert!(rest.degree().map_or(true, |dd| dd < d));
        expansion.insert(d as u32, c);
    }
    Ok(expansion)
}

/// Oracle linearization: multiply the recurrence-generated polynomials for
/// `degrees` and expand the product back in the same family's basis.
///
/// # Errors
/// [`Error::DegenerateBasis`] when the family is degenerate.
pub fn oracle_linearize(family: &FamilySpec, degrees: &[u32]) -> Result<LinExpansion> {
    let mut product = DensePoly::one();
    for &d in degrees {
        product = &product * &family_poly(family, d)?;
    }
    to_family_basis(&product, family)
}

/// Oracle integral ratio `∫ Π_i p_{nᵢ} dμ / h₀` for the family's measure.
///
/// For the orthogonal families this is the degree-0 coefficient of
/// [`oracle_linearize`]. The scaled Laguerre family is *not* orthogonal for
/// the reference measure `x^α e^{−x}`, so its product is expanded in the
/// plain Laguerre basis of the same `α` (the measure's own family) instead,
/// where the degree-0 coefficient is again the integral ratio.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] when no positive measure exists.
pub fn oracle_integral_ratio(family: &FamilySpec, degrees: &[u32]) -> Result<Rat> {
    validate_orthogonality(family)?;
    match family {
        FamilySpec::ScaledLaguerre { alpha, scale } => {
            let scales = vec![scale.clone(); degrees.len()];
            oracle_scaled_integral_ratio(alpha, degrees, &scales)
        }
        _ => Ok(oracle_linearize(family, degrees)?.coeff(0)),
    }
}

/// Oracle integral ratio `∫ Π_i L_{nᵢ}^α(sᵢ·x) · x^α e^{−x} dx / Γ(α+1)`
/// with an individual scale per factor.
///
/// The product is expanded in the plain Laguerre basis for `α`; its
/// degree-0 coefficient is the integral ratio.
///
/// # Errors
/// [`Error::InvalidOrthogonalityDomain`] for `α ≤ −1` or a nonpositive
/// scale; [`Error::IndexOutOfRange`] when `degrees` and `scales` disagree
/// in length.
pub fn oracle_scaled_integral_ratio(alpha: &Rat, degrees: &[u32], scales: &[Rat]) -> Result<Rat> {
    if degrees.len() != scales.len() {
        return Err(Error::IndexOutOfRange(format!(
            "{} degrees vs {} scales",
            degrees.len(),
            scales.len()
        )));
    }
    let base = FamilySpec::Laguerre { alpha: alpha.clone() };
    validate_orthogonality(&base)?;
    let mut product = DensePoly::one();
    for (&d, s) in degrees.iter().zip(scales) {
        let factor_family = FamilySpec::ScaledLaguerre { alpha: alpha.clone(), scale: s.clone() };
        validate_orthogonality(&factor_family)?;
        product = &product * &family_poly(&factor_family, d)?;
    }
    Ok(to_family_basis(&product, &base)?.coeff(0))
}

/// Fixed truncation budget (maximum total degree) for
/// [`genfun_truncation_check`].
pub const GENFUN_BUDGET: u32 = 6;

/// Trivariate polynomial truncated to total degree ≤ `n`, used only for the
/// generating-function checks.
struct TriPoly {
    n: usize,
    c: Vec<Rat>,
}

impl TriPoly {
    fn zero(n: usize) -> Self {
        Self { n, c: vec![Rat::zero(); (n + 1) * (n + 1) * (n + 1)] }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * (self.n + 1) + j) * (self.n + 1) + k
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[self.idx(i, j, k)]
    }

    fn add_term(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        if i + j + k <= self.n {
            let at = self.idx(i, j, k);
            self.c[at] += v;
        }
    }

    /// Truncated product, discarding total degree beyond the budget.
    fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i1 in 0..=n {
            for j1 in 0..=n - i1 {
                for k1 in 0..=n - i1 - j1 {
                    let a = self.get(i1, j1, k1);
                    if a.is_zero() {
                        continue;
                    }
                    for i2 in 0..=n - i1 - j1 - k1 {
                        for j2 in 0..=n - i1 - j1 - k1 - i2 {
                            for k2 in 0..=n - i1 - j1 - k1 - i2 - j2 {
                                let b = rhs.get(i2, j2, k2);
                                if b.is_zero() {
                                    continue;
                                }
                                out.add_term(i1 + i2, j1 + j2, k1 + k2, a * b);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Elementary symmetric pieces `e₂ = t₁t₂ + t₁t₃ + t₂t₃` and `e₃ = t₁t₂t₃`
/// as truncated trivariate polynomials.
fn sym_pieces(n: usize) -> (TriPoly, TriPoly) {
    let mut e2 = TriPoly::zero(n);
    e2.add_term(1, 1, 0, Rat::one());
    e2.add_term(1, 0, 1, Rat::one());
    e2.add_term(0, 1, 1, Rat::one());
    let mut e3 = TriPoly::zero(n);
    e3.add_term(1, 1, 1, Rat::one());
    (e2, e3)
}

/// Verify the three-variable product generating function against the
/// integral oracle for every exponent triple of total degree ≤
/// `total_degree`.
///
/// - Hermite: the coefficient of `t₁^{n₁} t₂^{n₂} t₃^{n₃}` in
///   `exp(2(t₁t₂+t₁t₃+t₂t₃))` must equal
///   `∫ H_{n₁}H_{n₂}H_{n₃} dμ / (√π · n₁! n₂! n₃!)`.
/// - Laguerre: the coefficient in `Q^{−α−1}` with
///   `Q = 1 − (t₁t₂+t₁t₃+t₂t₃) + 2 t₁t₂t₃` must equal
///   `∫ L_{n₁}L_{n₂}L_{n₃} dμ / Γ(α+1)`, with no factorial division.
///
/// Returns `Ok(false)` on the first mismatch.
///
/// # Errors
/// [`Error::TruncationBudgetExceeded`] when `total_degree` exceeds
/// [`GENFUN_BUDGET`]; [`Error::IndexOutOfRange`] for families without a
/// product generating function here (only Hermite and Laguerre have one).
pub fn genfun_truncation_check(family: &FamilySpec, total_degree: u32) -> Result<bool> {
    if total_degree > GENFUN_BUDGET {
        return Err(Error::TruncationBudgetExceeded {
            needed: total_degree as usize,
            budget: GENFUN_BUDGET as usize,
        });
    }
    let n = total_degree as usize;
    let series = match family {
        FamilySpec::Hermite => {
            // exp(2 e₂) = Σ_j (2 e₂)^j / j!
            let (e2, _) = sym_pieces(n);
            let mut acc = TriPoly::zero(n);
            acc.add_term(0, 0, 0, Rat::one());
            let mut power = TriPoly::zero(n);
            power.add_term(0, 0, 0, Rat::one());
            for j in 1..=(n / 2).max(0) {
                power = power.mul(&e2);
                let mut coef = q(2);
                for _ in 1..j {
                    coef *= q(2);
                }
                coef /= factorial_rat(j as u32);
                for (at, v) in power.c.iter().enumerate() {
                    acc.c[at] += v * &coef;
                }
            }
            acc
        }
        FamilySpec::Laguerre { alpha } => {
            // Q^{−α−1} = Σ_j (−1)^j (α+1)_j / j! · u^j,  u = −e₂ + 2e₃.
            let (e2, e3) = sym_pieces(n);
            let mut u = TriPoly::zero(n);
            for (at, v) in e2.c.iter().enumerate() {
                u.c[at] = -v;
            }
            for (at, v) in e3.c.iter().enumerate() {
                u.c[at] += v * q(2);
            }
            let mut acc = TriPoly::zero(n);
            acc.add_term(0, 0, 0, Rat::one());
            let mut power = TriPoly::zero(n);
            power.add_term(0, 0, 0, Rat::one());
            for j in 1..=(n / 2).max(0) {
                power = power.mul(&u);
                let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                let coef = sign * pochhammer(&(alpha + q(1)), j as u32) / factorial_rat(j as u32);
                for (at, v) in power.c.iter().enumerate() {
                    acc.c[at] += v * &coef;
                }
            }
            acc
        }
        _ => {
            return Err(Error::IndexOutOfRange(
                "product generating function is available for hermite and laguerre only".into(),
            ))
        }
    };

    for n1 in 0..=n {
        for n2 in 0..=n - n1 {
            for n3 in 0..=n - n1 - n2 {
                let lhs = series.get(n1, n2, n3).clone();
                let degrees = [n1 as u32, n2 as u32, n3 as u32];
                let oracle = oracle_integral_ratio(family, &degrees)?;
                let rhs = match family {
                    FamilySpec::Hermite => {
                        oracle
                            / (factorial_rat(n1 as u32)
                                * factorial_rat(n2 as u32)
                                * factorial_rat(n3 as u32))
                    }
                    _ => oracle,
                };
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
