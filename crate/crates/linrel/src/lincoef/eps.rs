//! Truncated Laurent arithmetic in one regularizer ε, for exact limits at
//! removable singularities.
//!
//! Some closed-form coefficients are rational functions of a family
//! parameter with a removable singularity at isolated parameter values
//! (notably the Jacobi form at `α = β` and `β − α = 1`). Instead of
//! special-casing those values, the evaluation substitutes `α ← α + ε` and
//! carries every scalar as a two-coefficient Laurent window
//!
//! ```text
//! a·ε^v + b·ε^{v+1} + O(ε^{v+len}),   len ∈ {0, 1, 2},
//! ```
//!
//! with exact rational `a, b`. Multiplication and division shift `v`;
//! additive cancellation raises `v` and can shrink the trusted window.
//! `len = 0` means only the order bound survives. Taking [`Eps::limit`]
//! at the end recovers the exact ε → 0 value, reports a genuine pole, or
//! fails loudly when the window lost the constant term.
//!
//! Values built from the constructors are flagged `exact` while every
//! coefficient beyond the stored pair is known to vanish; sums and products
//! keep that flag as long as the full polynomial still fits the window, so
//! chains of exact cancellations (for instance a residual that is
//! identically zero) never degrade into a false window exhaustion.

use crate::error::{Error, Result};
use crate::exactcore::{q, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Two-coefficient truncated Laurent scalar in the regularizer ε.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Eps {
    /// Exact zero (all coefficients vanish); other fields are meaningless.
    zero: bool,
    /// True when every coefficient beyond the stored window is zero.
    exact: bool,
    /// Valuation: exponent of the leading stored coefficient.
    v: i64,
    /// Trusted stored coefficients: 0 (order bound only), 1, or 2.
    len: u8,
    /// Coefficient of ε^v; nonzero whenever `len ≥ 1`.
    a: Rat,
    /// Coefficient of ε^{v+1}; meaningful only when `len = 2`.
    b: Rat,
}

impl Eps {
    /// Exact zero.
    pub fn exact_zero() -> Self {
        Self { zero: true, exact: true, v: 0, len: 2, a: Rat::zero(), b: Rat::zero() }
    }

    /// Exact rational constant.
    pub fn from_rat(r: &Rat) -> Self {
        if r.is_zero() {
            return Self::exact_zero();
        }
        Self { zero: false, exact: true, v: 0, len: 2, a: r.clone(), b: Rat::zero() }
    }

    /// Exact machine-integer constant.
    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(&q(n))
    }

    /// The exact linear value `a0 + b0·ε`.
    pub fn linear(a0: &Rat, b0: &Rat) -> Self {
        if a0.is_zero() && b0.is_zero() {
            return Self::exact_zero();
        }
        if a0.is_zero() {
            return Self { zero: false, exact: true, v: 1, len: 2, a: b0.clone(), b: Rat::zero() };
        }
        Self { zero: false, exact: true, v: 0, len: 2, a: a0.clone(), b: b0.clone() }
    }

    /// The regularizer ε itself.
    #[cfg(test)]
    pub fn eps() -> Self {
        Self::linear(&Rat::zero(), &Rat::one())
    }

    /// Exact one.
    pub fn one() -> Self {
        Self::from_i64(1)
    }

    /// Pure order bound `O(ε^v)` with no trusted coefficients.
    fn poison(v: i64) -> Self {
        Self { zero: false, exact: false, v, len: 0, a: Rat::zero(), b: Rat::zero() }
    }

    /// True for the exact zero.
    pub fn is_exact_zero(&self) -> bool {
        self.zero
    }

    /// The value as an ε-free exact rational, when it is one.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.zero {
            return Some(Rat::zero());
        }
        if self.exact && self.v == 0 && self.b.is_zero() {
            return Some(self.a.clone());
        }
        None
    }

    /// Exclusive upper bound of trusted exponents; `None` means all of them.
    fn known(&self) -> Option<i64> {
        if self.exact {
            None
        } else {
            Some(self.v + self.len as i64)
        }
    }

    /// Trusted coefficient at exponent `e` (call only for `e` < `known`).
    fn coeff_at(&self, e: i64) -> Rat {
        if self.zero || e < self.v {
            Rat::zero()
        } else if e == self.v && self.len >= 1 {
            self.a.clone()
        } else if e == self.v + 1 && self.len == 2 {
            self.b.clone()
        } else {
            // Exact values vanish beyond their window; inexact ones are
            // never queried past `known`.
            debug_assert!(self.exact);
            Rat::zero()
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.a = -out.a;
        out.b = -out.b;
        out
    }

    /// Sum, tracking the narrower trusted window of the two operands.
    pub fn add(&self, other: &Self) -> Self {
        if self.zero {
            return other.clone();
        }
        if other.zero {
            return self.clone();
        }
        match (self.known(), other.known()) {
            (None, None) => {
                // Both exact: the sum's full coefficient support is known.
                let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
                for src in [self, other] {
                    for e in src.v..src.v + src.len as i64 {
                        let c = src.coeff_at(e);
                        if !c.is_zero() {
                            *coeffs.entry(e).or_insert_with(Rat::zero) += c;
                        }
                    }
                }
                coeffs.retain(|_, c| !c.is_zero());
                let Some((&vmin, _)) = coeffs.iter().next() else {
                    return Self::exact_zero();
                };
                let (&vmax, _) = coeffs.iter().next_back().unwrap();
                Self {
                    zero: false,
                    // Still exact only if the support fits the stored pair.
                    exact: vmax <= vmin + 1,
                    v: vmin,
                    len: 2,
                    a: coeffs.get(&vmin).cloned().unwrap_or_else(Rat::zero),
                    b: coeffs.get(&(vmin + 1)).cloned().unwrap_or_else(Rat::zero),
                }
            }
            (k1, k2) => {
                let known = match (k1, k2) {
                    (Some(x), Some(y)) => x.min(y),
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => unreachable!(),
                };
                let mut vmin = self.v.min(other.v);
                while vmin < known {
                    let c = self.coeff_at(vmin) + other.coeff_at(vmin);
                    if !c.is_zero() {
                        let b = if vmin + 1 < known {
                            self.coeff_at(vmin + 1) + other.coeff_at(vmin + 1)
                        } else {
                            Rat::zero()
                        };
                        let len = (known - vmin).min(2) as u8;
                        return Self { zero: false, exact: false, v: vmin, len, a: c, b };
                    }
                    vmin += 1;
                }
                Self::poison(known)
            }
        }
    }

    /// Difference.
    #[cfg(test)]
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product; valuations add, windows narrow to the shorter reach.
    pub fn mul(&self, other: &Self) -> Self {
        if self.zero || other.zero {
            return Self::exact_zero();
        }
        let v = self.v + other.v;
        match (self.known(), other.known()) {
            (None, None) => {
                let c0 = &self.a * &other.a;
                let c1 = &self.a * &other.b + &self.b * &other.a;
                let c2 = &self.b * &other.b;
                Self {
                    zero: false,
                    // The degree-2 coefficient falls outside the window.
                    exact: c2.is_zero(),
                    v,
                    len: 2,
                    a: c0,
                    b: c1,
                }
            }
            (k1, k2) => {
                let reach1 = k1.map(|k| k - self.v); // trusted length (∞ when None)
                let reach2 = k2.map(|k| k - other.v);
                let reach = match (reach1, reach2) {
                    (Some(x), Some(y)) => x.min(y),
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => unreachable!(),
                };
                if reach <= 0 || self.len == 0 || other.len == 0 {
                    return Self::poison(v + reach.max(0));
                }
                let len = reach.min(2) as u8;
                let a = &self.a * &other.a;
                let b = if len == 2 {
                    &self.a * &other.b + &self.b * &other.a
                } else {
                    Rat::zero()
                };
                Self { zero: false, exact: false, v, len, a, b }
            }
        }
    }

    /// Quotient.
    ///
    /// # Errors
    /// [`Error::FormulaPole`] when the divisor is exactly zero;
    /// [`Error::InternalInconsistency`] when the divisor's trusted window is
    /// empty, so its leading coefficient is unknown.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.zero {
            return Err(Error::FormulaPole(
                "division by an identically zero factor".into(),
            ));
        }
        if other.len == 0 {
            return Err(Error::InternalInconsistency(
                "division by a value whose Laurent window is exhausted".into(),
            ));
        }
        if self.zero {
            return Ok(Self::exact_zero());
        }
        // Reciprocal of ε^v (a + b ε + O(ε^len)).
        let inv_a = Rat::one() / &other.a;
        let recip = Self {
            zero: false,
            exact: other.exact && other.b.is_zero(),
            v: -other.v,
            len: other.len,
            a: inv_a.clone(),
            b: if other.len == 2 {
                -&other.b * &inv_a * &inv_a
            } else {
                Rat::zero()
            },
        };
        Ok(self.mul(&recip))
    }

    /// Rising factorial `(z)_n` over Eps scalars.
    pub fn pochhammer(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut factor = self.clone();
        for _ in 0..n {
            if factor.is_exact_zero() {
                return Self::exact_zero();
            }
            acc = acc.mul(&factor);
            factor = factor.add(&Self::one());
        }
        acc
    }

    /// The exact ε → 0 limit.
    ///
    /// # Errors
    /// [`Error::FormulaPole`] when the value diverges (negative valuation
    /// with a trusted nonzero leading coefficient);
    /// [`Error::InternalInconsistency`] when the window no longer pins the
    /// constant term.
    pub fn limit(&self) -> Result<Rat> {
        if self.zero {
            return Ok(Rat::zero());
        }
        if self.len == 0 {
            if self.v >= 1 {
                return Ok(Rat::zero());
            }
            return Err(Error::InternalInconsistency(
                "Laurent window exhausted before the constant term".into(),
            ));
        }
        if self.v < 0 {
            return Err(Error::FormulaPole(
                "expression diverges as the regularizer vanishes".into(),
            ));
        }
        if self.v == 0 {
            Ok(self.a.clone())
        } else {
            Ok(Rat::zero())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::qq;

    #[test]
    fn exact_difference_of_equal_values_is_zero() {
        let x = Eps::linear(&qq(3, 7), &q(2));
        let d = x.sub(&x);
        assert!(d.is_exact_zero());
        assert_eq!(d.limit().unwrap(), q(0));
    }

    #[test]
    fn removable_pole_cancels_exactly() {
        // (1/ε) · ε = 1.
        let one_over_eps = Eps::one().div(&Eps::eps()).unwrap();
        let back = one_over_eps.mul(&Eps::eps());
        assert_eq!(back.limit().unwrap(), q(1));

        // (ε² + ε)/ε → 1 at ε → 0.
        let num = Eps::eps().mul(&Eps::eps()).add(&Eps::eps());
        let ratio = num.div(&Eps::eps()).unwrap();
        assert_eq!(ratio.limit().unwrap(), q(1));
    }

    #[test]
    fn linear_cancellation_shifts_valuation() {
        // (1 − (1+ε))/ε = −1.
        let num = Eps::one().sub(&Eps::linear(&q(1), &q(1)));
        let ratio = num.div(&Eps::eps()).unwrap();
        assert_eq!(ratio.limit().unwrap(), q(-1));
    }

    #[test]
    fn genuine_pole_is_reported() {
        let bad = Eps::linear(&q(1), &q(1)).div(&Eps::eps().mul(&Eps::eps())).unwrap();
        assert!(matches!(bad.limit(), Err(Error::FormulaPole(_))));
    }

    #[test]
    fn division_by_exact_zero_is_a_pole() {
        assert!(matches!(
            Eps::one().div(&Eps::exact_zero()),
            Err(Error::FormulaPole(_))
        ));
    }

    #[test]
    fn inexact_cancellation_keeps_a_usable_order_bound() {
        // 1/(1+ε) is inexact: [1, −1] with O(ε²) unknown.
        let x = Eps::one().div(&Eps::linear(&q(1), &q(1))).unwrap();
        // x − 1 = −ε + O(ε²): limit 0.
        let y = x.add(&Eps::from_i64(-1));
        assert_eq!(y.limit().unwrap(), q(0));
        // (x − 1) + ε = O(ε²): all trusted coefficients cancelled, but the
        // order bound still proves the limit is 0.
        let z = y.add(&Eps::eps());
        assert_eq!(z.limit().unwrap(), q(0));
        // Dividing that bound down to order 0 must fail loudly.
        let w = z.div(&Eps::eps().mul(&Eps::eps())).unwrap();
        assert!(matches!(w.limit(), Err(Error::InternalInconsistency(_))));
    }

    #[test]
    fn pochhammer_over_eps_scalars_matches_rationals() {
        let z = Eps::from_rat(&qq(3, 2));
        assert_eq!(
            z.pochhammer(4).as_constant().unwrap(),
            crate::exactcore::pochhammer(&qq(3, 2), 4)
        );
        // (−2 + ε)_4 has a simple ε factor: the limit vanishes.
        let shifted = Eps::linear(&q(-2), &q(1)).pochhammer(4);
        assert_eq!(shifted.limit().unwrap(), q(0));
        assert!(shifted.as_constant().is_none());
    }

    #[test]
    fn constants_survive_arithmetic_exactly() {
        let x = Eps::from_rat(&qq(5, 3));
        let y = Eps::from_rat(&qq(-7, 4));
        let z = x.mul(&y).add(&Eps::one()).div(&Eps::from_i64(2)).unwrap();
        assert_eq!(z.as_constant().unwrap(), (qq(5, 3) * qq(-7, 4) + q(1)) / q(2));
    }
}
