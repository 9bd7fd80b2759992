//! Terminating generalized hypergeometric series ᵣFₛ and Kampé de Fériet
//! double series, evaluated exactly.
//!
//! ```text
//! ᵣFₛ(a₁,…,aᵣ; b₁,…,bₛ; z) = Σ_{j≥0} (a₁)_j ⋯ (aᵣ)_j / ((b₁)_j ⋯ (bₛ)_j) · zʲ/j!
//! ```
//!
//! Only terminating series are accepted: some upper parameter must be a
//! nonpositive integer, and the sum stops after `T+1` terms where `T` is the
//! smallest such `-aᵢ`. Evaluation accumulates the term ratio
//!
//! ```text
//! term_{j+1}/term_j = Π(aᵢ+j) / Π(bᵢ+j) · z/(j+1),
//! ```
//!
//! with the numerator product formed first so that a parameter terminating
//! the series earlier wins over a lower-parameter zero at the same step;
//! a lower-parameter zero that is actually reached is a
//! [`Error::DenominatorPole`].
//!
//! The double series ([`KdFSpec`]) carries joint parameters indexed by
//! `r+s` and per-variable parameters indexed by `r` and `s`:
//!
//! ```text
//! F(x,y) = Σ_{r,s} Π(a)_{r+s} Π(b)_r Π(c)_s / (Π(d)_{r+s} Π(e)_r Π(f)_s) · xʳ yˢ/(r! s!).
//! ```

use crate::error::{Error, Result};
use crate::exactcore::{factorial_rat, nonpositive_integer_order, pochhammer, q, Rat};
use num_traits::{One, Zero};

/// A generalized hypergeometric series ᵣFₛ with rational parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypSeriesSpec {
    /// Upper (numerator) parameters `a₁,…,aᵣ`.
    pub numerator_params: Vec<Rat>,
    /// Lower (denominator) parameters `b₁,…,bₛ`.
    pub denominator_params: Vec<Rat>,
    /// Series argument `z`.
    pub argument: Rat,
}

impl HypSeriesSpec {
    /// Convenience constructor from slices.
    pub fn new(numerator_params: &[Rat], denominator_params: &[Rat], argument: Rat) -> Self {
        Self {
            numerator_params: numerator_params.to_vec(),
            denominator_params: denominator_params.to_vec(),
            argument,
        }
    }

    /// Smallest `-a` over nonpositive-integer upper parameters, if any.
    pub fn termination_order(&self) -> Option<u32> {
        self.numerator_params
            .iter()
            .filter_map(nonpositive_integer_order)
            .min()
    }
}

/// Exact value of a terminating ᵣFₛ.
///
/// # Errors
/// - [`Error::NonTerminating`] when no upper parameter is a nonpositive
///   integer;
/// - [`Error::DenominatorPole`] when a lower-parameter factor `bᵢ + j`
///   vanishes at a ratio step the sum actually reaches.
pub fn pfq_eval(spec: &HypSeriesSpec) -> Result<Rat> {
    let t = spec.termination_order().ok_or_else(|| {
        Error::NonTerminating(format!(
            "no nonpositive-integer upper parameter among {:?}",
            spec.numerator_params
        ))
    })?;
    let mut total = Rat::one();
    let mut term = Rat::one();
    for j in 0..t {
        let jq = q(j as i64);
        let mut num = spec.argument.clone();
        for a in &spec.numerator_params {
            num *= a + &jq;
        }
        if num.is_zero() {
            break;
        }
        let mut den = q(j as i64 + 1);
        for b in &spec.denominator_params {
            den *= b + &jq;
        }
        if den.is_zero() {
            return Err(Error::DenominatorPole { term: j as usize + 1 });
        }
        term *= num / den;
        total += &term;
    }
    Ok(total)
}

/// A Kampé de Fériet style double hypergeometric series.
///
/// Parameter groups are indexed jointly by `r+s` or per-variable by `r`
/// (`first`) and `s` (`second`); see the module docs for the summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KdFSpec {
    /// Upper parameters indexed by `r+s`.
    pub upper_joint: Vec<Rat>,
    /// Upper parameters indexed by `r`.
    pub upper_first: Vec<Rat>,
    /// Upper parameters indexed by `s`.
    pub upper_second: Vec<Rat>,
    /// Lower parameters indexed by `r+s`.
    pub lower_joint: Vec<Rat>,
    /// Lower parameters indexed by `r`.
    pub lower_first: Vec<Rat>,
    /// Lower parameters indexed by `s`.
    pub lower_second: Vec<Rat>,
    /// First argument `x`.
    pub argument_first: Rat,
    /// Second argument `y`.
    pub argument_second: Rat,
}

/// Exact value of a terminating Kampé de Fériet double series.
///
/// Termination orders are collected per direction: `T_joint` from
/// `upper_joint`, `T_r` from `upper_first`, `T_s` from `upper_second`.
/// The double sum terminates when each direction is bounded by its own or
/// the joint order; both must be bounded or the series is rejected.
///
/// # Errors
/// - [`Error::NonTerminating`] when a direction has no bound;
/// - [`Error::DenominatorPole`] when a reached term has a vanished
///   denominator Pochhammer while its numerator is nonzero.
pub fn kdf_eval(spec: &KdFSpec) -> Result<Rat> {
    let t_joint = spec.upper_joint.iter().filter_map(nonpositive_integer_order).min();
    let t_r = spec.upper_first.iter().filter_map(nonpositive_integer_order).min();
    let t_s = spec.upper_second.iter().filter_map(nonpositive_integer_order).min();

    let r_max = match (t_r, t_joint) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::NonTerminating(
                "first-variable direction of double series is unbounded".into(),
            ))
        }
    };
    if t_s.is_none() && t_joint.is_none() {
        return Err(Error::NonTerminating(
            "second-variable direction of double series is unbounded".into(),
        ));
    }

    let mut total = Rat::zero();
    let mut x_pow = Rat::one();
    for r in 0..=r_max {
        let s_max = match (t_s, t_joint) {
            (Some(a), Some(b)) => {
                if b < r {
                    // Joint termination already cuts this row to nothing.
                    x_pow *= &spec.argument_first;
                    continue;
                }
                a.min(b - r)
            }
            (Some(a), None) => a,
            (None, Some(b)) => {
                if b < r {
                    x_pow *= &spec.argument_first;
                    continue;
                }
                b - r
            }
            (None, None) => unreachable!("checked above"),
        };
        let mut y_pow = Rat::one();
        for s in 0..=s_max {
            let mut num = x_pow.clone() * &y_pow;
            for a in &spec.upper_joint {
                num *= pochhammer(a, r + s);
            }
            for b in &spec.upper_first {
                num *= pochhammer(b, r);
            }
            for c in &spec.upper_second {
                num *= pochhammer(c, s);
            }
            if num.is_zero() {
                y_pow *= &spec.argument_second;
                continue;
            }
            let mut den = factorial_rat(r) * factorial_rat(s);
            for d in &spec.lower_joint {
                den *= pochhammer(d, r + s);
            }
            for e in &spec.lower_first {
                den *= pochhammer(e, r);
            }
            for f in &spec.lower_second {
                den *= pochhammer(f, s);
            }
            if den.is_zero() {
                return Err(Error::DenominatorPole {
                    term: (r + s) as usize + 1,
                });
            }
            total += num / den;
            y_pow *= &spec.argument_second;
        }
        x_pow *= &spec.argument_first;
    }
    Ok(total)
}

/// Expand a stacked parameter `z` into the family `z + o` for each offset.
///
/// Parameter lists that appear as consecutive shifts of one base value are
/// written `expand_stacked(z, &[0, 1, …])` so the shift structure stays
/// visible at the call site.
pub fn expand_stacked(z: &Rat, offsets: &[i64]) -> Vec<Rat> {
    offsets.iter().map(|o| z + q(*o)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{pochhammer_list, qq};
    use proptest::prelude::*;

    /// Direct summation Σ_j Π(a)_j / Π(b)_j · z^j / j!, with the same
    /// numerator-first zero handling, used to cross-check the ratio form.
    fn pfq_direct(spec: &HypSeriesSpec) -> Rat {
        let t = spec.termination_order().expect("test series terminate");
        let mut total = Rat::zero();
        let mut z_pow = Rat::one();
        for j in 0..=t {
            let num = pochhammer_list(&spec.numerator_params, j) * &z_pow;
            if !num.is_zero() {
                let den = pochhammer_list(&spec.denominator_params, j) * factorial_rat(j);
                total += num / den;
            }
            z_pow *= &spec.argument;
        }
        total
    }

    #[test]
    fn linear_case_matches_closed_form() {
        // ₂F₁(-1, b; c; z) = 1 - b z / c.
        let b = qq(7, 3);
        let c = qq(5, 2);
        let z = qq(-4, 9);
        let spec = HypSeriesSpec::new(&[q(-1), b.clone()], &[c.clone()], z.clone());
        assert_eq!(pfq_eval(&spec).unwrap(), Rat::one() - b * z / c);
    }

    #[test]
    fn zero_upper_parameter_gives_one() {
        let spec = HypSeriesSpec::new(&[q(0), qq(9, 2)], &[qq(1, 3)], q(7));
        assert_eq!(pfq_eval(&spec).unwrap(), Rat::one());
    }

    #[test]
    fn nonterminating_series_is_rejected() {
        let spec = HypSeriesSpec::new(&[qq(1, 2), q(3)], &[q(1)], qq(1, 4));
        assert!(matches!(pfq_eval(&spec), Err(Error::NonTerminating(_))));
    }

    #[test]
    fn reached_denominator_zero_is_a_pole() {
        // Lower parameter -2 vanishes at ratio step j = 2 < T = 5.
        let spec = HypSeriesSpec::new(&[q(-5), qq(1, 2)], &[q(-2)], q(1));
        assert_eq!(pfq_eval(&spec), Err(Error::DenominatorPole { term: 3 }));
    }

    #[test]
    fn numerator_termination_shadows_denominator_zero() {
        // The same -2 sits above and below; the numerator factor hits zero
        // at the same step the denominator would, so the sum ends cleanly.
        let spec = HypSeriesSpec::new(&[q(-2), qq(1, 2)], &[q(-2)], q(1));
        let direct = pfq_direct(&spec);
        assert_eq!(pfq_eval(&spec).unwrap(), direct);
    }

    #[test]
    fn expand_stacked_shifts_base() {
        assert_eq!(expand_stacked(&q(-5), &[0, 1]), vec![q(-5), q(-4)]);
        assert_eq!(
            expand_stacked(&qq(1, 2), &[0, 2]),
            vec![qq(1, 2), qq(5, 2)]
        );
    }

    #[test]
    fn kdf_reduces_to_single_series_when_second_argument_vanishes() {
        let spec = KdFSpec {
            upper_joint: vec![qq(3, 2)],
            upper_first: vec![q(-4), qq(1, 3)],
            upper_second: vec![q(-3)],
            lower_joint: vec![],
            lower_first: vec![qq(7, 2)],
            lower_second: vec![qq(2, 3)],
            argument_first: qq(5, 7),
            argument_second: Rat::zero(),
        };
        let single = HypSeriesSpec::new(
            &[qq(3, 2), q(-4), qq(1, 3)],
            &[qq(7, 2)],
            qq(5, 7),
        );
        assert_eq!(kdf_eval(&spec).unwrap(), pfq_eval(&single).unwrap());
    }

    #[test]
    fn kdf_without_bounded_directions_is_rejected() {
        let spec = KdFSpec {
            upper_joint: vec![qq(3, 2)],
            upper_first: vec![qq(1, 3)],
            upper_second: vec![q(-3)],
            lower_joint: vec![],
            lower_first: vec![qq(7, 2)],
            lower_second: vec![qq(2, 3)],
            argument_first: q(1),
            argument_second: q(1),
        };
        assert!(matches!(kdf_eval(&spec), Err(Error::NonTerminating(_))));
    }

    proptest! {
        /// Chu-Vandermonde: ₂F₁(-n, b; c; 1) = (c-b)_n / (c)_n.
        #[test]
        fn chu_vandermonde_identity(n in 0u32..9, bn in -12i64..12, ck in 0i64..8) {
            let b = qq(bn, 5);
            let c = qq(2 * ck + 1, 2); // positive half-integer keeps (c)_n nonzero
            let spec = HypSeriesSpec::new(&[q(-(n as i64)), b.clone()], &[c.clone()], q(1));
            let lhs = pfq_eval(&spec).unwrap();
            let rhs = pochhammer(&(&c - &b), n) / pochhammer(&c, n);
            prop_assert_eq!(lhs, rhs);
        }

        /// Upper-parameter order never matters.
        #[test]
        fn numerator_permutation_invariance(n in 0u32..7, a2 in -9i64..9, a3 in -9i64..9, zn in -5i64..6) {
            let nums = [q(-(n as i64)), qq(a2, 4), qq(a3, 7)];
            let dens = [qq(13, 3)];
            let z = qq(zn, 3);
            let base = pfq_eval(&HypSeriesSpec::new(&nums, &dens, z.clone())).unwrap();
            let swapped = pfq_eval(&HypSeriesSpec::new(
                &[nums[2].clone(), nums[0].clone(), nums[1].clone()],
                &dens,
                z,
            )).unwrap();
            prop_assert_eq!(base, swapped);
        }

        /// Appending the same positive parameter above and below cancels.
        #[test]
        fn matched_parameter_cancellation(n in 0u32..7, extra in 1i64..20, zn in -5i64..6) {
            let e = qq(extra, 3);
            let z = qq(zn, 4);
            let plain = HypSeriesSpec::new(&[q(-(n as i64)), qq(5, 2)], &[qq(7, 3)], z.clone());
            let padded = HypSeriesSpec::new(
                &[q(-(n as i64)), qq(5, 2), e.clone()],
                &[qq(7, 3), e],
                z,
            );
            prop_assert_eq!(pfq_eval(&plain).unwrap(), pfq_eval(&padded).unwrap());
        }

        /// Ratio accumulation agrees with direct summation.
        #[test]
        fn ratio_form_matches_direct_sum(n in 0u32..8, an in -11i64..11, bn in 1i64..11, zn in -6i64..7) {
            let spec = HypSeriesSpec::new(
                &[q(-(n as i64)), qq(an, 3)],
                &[qq(2 * bn + 1, 2)],
                qq(zn, 5),
            );
            prop_assert_eq!(pfq_eval(&spec).unwrap(), pfq_direct(&spec));
        }

        /// Double series over a rectangle: direct check against nested sums.
        #[test]
        fn kdf_matches_nested_sum(tr in 0u32..5, ts in 0u32..5, xn in -4i64..5, yn in -4i64..5) {
            let spec = KdFSpec {
                upper_joint: vec![qq(3, 2)],
                upper_first: vec![q(-(tr as i64)), qq(1, 3)],
                upper_second: vec![q(-(ts as i64)), qq(4, 3)],
                lower_joint: vec![qq(9, 2)],
                lower_first: vec![qq(7, 2)],
                lower_second: vec![qq(5, 2)],
                argument_first: qq(xn, 3),
                argument_second: qq(yn, 3),
            };
            let mut direct = Rat::zero();
            for r in 0..=tr {
                for s in 0..=ts {
                    let num = pochhammer(&qq(3, 2), r + s)
                        * pochhammer(&q(-(tr as i64)), r)
                        * pochhammer(&qq(1, 3), r)
                        * pochhammer(&q(-(ts as i64)), s)
                        * pochhammer(&qq(4, 3), s);
                    let den = pochhammer(&qq(9, 2), r + s)
                        * pochhammer(&qq(7, 2), r)
                        * pochhammer(&qq(5, 2), s)
                        * factorial_rat(r)
                        * factorial_rat(s);
                    let mut x_pow = Rat::one();
                    for _ in 0..r { x_pow *= qq(xn, 3); }
                    let mut y_pow = Rat::one();
                    for _ in 0..s { y_pow *= qq(yn, 3); }
                    direct += num / den * x_pow * y_pow;
                }
            }
            prop_assert_eq!(kdf_eval(&spec).unwrap(), direct);
        }
    }
}
