//! Five-term two-dimensional contiguous relations for weighted product
//! integrals.
//!
//! For a product of N+1 orthogonal polynomials with integral
//! 𝖯(n_1, …, n_{N+1}) = ∫ p_{n_1}(x)⋯p_{n_{N+1}}(x) w(x) dx, eliminating
//! x·p_{n_j}·p_{n_k} between the three-term recurrences of factors j and k
//! yields, for every index pair j < k, the five-term relation
//!
//! (B_{n_j}A_{n_k} − A_{n_j}B_{n_k})·𝖯
//!   − A_{n_k}·𝖯_j⁺ − C_{n_j}A_{n_k}·𝖯_j⁻
//!   + A_{n_j}·𝖯_k⁺ + C_{n_k}A_{n_j}·𝖯_k⁻ = 0,
//!
//! where 𝖯_i^± shifts degree n_i by ±1 and (A_n, B_n, C_n) are the
//! recurrence coefficients of the shifted factor's family. The relation
//! holds with the convention p_{−1} := 0, so a −1 shift at degree 0
//! contributes nothing. This module builds these relations (including
//! mixed per-factor families, which covers products with scaled
//! arguments), evaluates residuals exactly, and verifies entire degree
//! grids in parallel with per-tuple pass/fail/skip accounting.

use crate::error::{Error, Result};
use crate::exactcore::Rat;
use crate::families::{recurrence_coeffs, FamilySpec};
use num_traits::Zero;
use rayon::prelude::*;

/// One term of a five-term relation: a degree-shift vector and its exact
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContigTerm {
    /// Per-factor degree shifts; zero everywhere except ±1 in position j
    /// or k (1-based positions j, k of the owning instance).
    pub shifts: Vec<i32>,
    /// Exact coefficient multiplying the shifted integral.
    pub coeff: Rat,
}

/// A fully instantiated five-term contiguous relation for one degree tuple
/// and one index pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContigInstance {
    /// Family of each factor; uniform for plain products, per-factor for
    /// products mixing scaled arguments.
    pub families: Vec<FamilySpec>,
    /// Degrees n_1, …, n_{N+1} of the factors.
    pub degrees: Vec<u32>,
    /// First shifted position, 1-based.
    pub j: usize,
    /// Second shifted position, 1-based; j < k.
    pub k: usize,
    /// The five terms in canonical order: unshifted, +1 at j, −1 at j,
    /// +1 at k, −1 at k.
    pub terms: Vec<ContigTerm>,
}

/// An exactly evaluated relation residual; zero certifies the relation for
/// this instance and evaluator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    /// Σ coefficient · evaluator(shifted degrees), exact.
    pub value: Rat,
    /// The relation that was evaluated.
    pub instance: ContigInstance,
    /// Name of the integral formula used to evaluate the terms.
    pub evaluator_id: String,
}

/// Builds the five-term relation for factors of one family.
///
/// `j` and `k` are 1-based factor positions with `1 ≤ j < k ≤ N+1`.
/// Reports `DegenerateBasis` when a required leading recurrence
/// coefficient A_n vanishes, since the elimination divides by it.
pub fn build_relation(
    family: &FamilySpec,
    degrees: &[u32],
    j: usize,
    k: usize,
) -> Result<ContigInstance> {
    let families = vec![family.clone(); degrees.len()];
    build_relation_mixed(&families, degrees, j, k)
}

/// Builds the five-term relation with per-factor families, e.g. one plain
/// Laguerre factor and two factors with distinct argument scales.
pub fn build_relation_mixed(
    families: &[FamilySpec],
    degrees: &[u32],
    j: usize,
    k: usize,
) -> Result<ContigInstance> {
    if families.len() != degrees.len() {
        return Err(Error::IndexOutOfRange(format!(
            "{} families for {} degrees",
            families.len(),
            degrees.len()
        )));
    }
    if !(1 <= j && j < k && k <= degrees.len()) {
        return Err(Error::IndexOutOfRange(format!(
            "index pair ({j}, {k}) out of range for {} factors",
            degrees.len()
        )));
    }
    let rj = recurrence_coeffs(&families[j - 1], degrees[j - 1])?;
    let rk = recurrence_coeffs(&families[k - 1], degrees[k - 1])?;
    if rj.a.is_zero() || rk.a.is_zero() {
        return Err(Error::DegenerateBasis(format!(
            "vanishing leading recurrence coefficient for {} at degree {}",
            families[if rj.a.is_zero() { j } else { k } - 1].name(),
            degrees[if rj.a.is_zero() { j } else { k } - 1]
        )));
    }

    let shift = |pos: usize, delta: i32| {
        let mut s = vec![0i32; degrees.len()];
        s[pos - 1] = delta;
        s
    };
    let terms = vec![
        ContigTerm {
            shifts: vec![0; degrees.len()],
            coeff: &rj.b * &rk.a - &rj.a * &rk.b,
        },
        ContigTerm { shifts: shift(j, 1), coeff: -&rk.a },
        ContigTerm { shifts: shift(j, -1), coeff: -(&rj.c * &rk.a) },
        ContigTerm { shifts: shift(k, 1), coeff: rj.a.clone() },
        ContigTerm { shifts: shift(k, -1), coeff: &rk.c * &rj.a },
    ];
    Ok(ContigInstance {
        families: families.to_vec(),
        degrees: degrees.to_vec(),
        j,
        k,
        terms,
    })
}

/// Enumerates the C(N+1, 2) relations of a degree tuple, one per index
/// pair (j, k) in lexicographic order.
pub fn enumerate_relations(
    family: &FamilySpec,
    degrees: &[u32],
) -> Result<Vec<ContigInstance>> {
    let families = vec![family.clone(); degrees.len()];
    enumerate_relations_mixed(&families, degrees)
}

/// Per-factor-family variant of [`enumerate_relations`].
pub fn enumerate_relations_mixed(
    families: &[FamilySpec],
    degrees: &[u32],
) -> Result<Vec<ContigInstance>> {
    let n = degrees.len();
    if n < 2 {
        return Err(Error::IndexOutOfRange(
            "a contiguous relation needs at least two factors".into(),
        ));
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..=n {
        for k in (j + 1)..=n {
            out.push(build_relation_mixed(families, degrees, j, k)?);
        }
    }
    Ok(out)
}

/// Builds the relation for a product of one plain Laguerre factor and two
/// factors with argument scales `a` and `b` (positions 1, 2, 3 carry
/// scales 1, a, b).
pub fn scaled_relation(
    alpha: &Rat,
    a: &Rat,
    b: &Rat,
    degrees: &[u32; 3],
    pair: (usize, usize),
) -> Result<ContigInstance> {
    let families = scaled_families(alpha, a, b);
    build_relation_mixed(&families, degrees, pair.0, pair.1)
}

/// The per-factor family list of [`scaled_relation`]: Laguerre(α) and two
/// scaled variants.
pub fn scaled_families(alpha: &Rat, a: &Rat, b: &Rat) -> Vec<FamilySpec> {
    vec![
        FamilySpec::Laguerre { alpha: alpha.clone() },
        FamilySpec::ScaledLaguerre { alpha: alpha.clone(), scale: a.clone() },
        FamilySpec::ScaledLaguerre { alpha: alpha.clone(), scale: b.clone() },
    ]
}

/// Applies a term's shift vector to the instance degrees; `None` when a −1
/// shift hits degree 0, which denotes the vanishing p_{−1} term.
fn shifted_degrees(degrees: &[u32], shifts: &[i32]) -> Option<Vec<u32>> {
    degrees
        .iter()
        .zip(shifts)
        .map(|(&d, &s)| {
            let v = d as i64 + s as i64;
            u32::try_from(v).ok()
        })
        .collect()
}

/// Evaluates the relation residual exactly: Σ coefficient ·
/// evaluator(shifted degrees), with −1 shifts at degree 0 contributing 0.
///
/// The evaluator must be total on in-range tuples, returning 0 outside the
/// support of the underlying integral; its errors propagate.
pub fn residual_exact<F>(
    instance: &ContigInstance,
    evaluator: F,
    evaluator_id: &str,
) -> Result<Residual>
where
    F: Fn(&[u32]) -> Result<Rat>,
{
    let mut value = Rat::zero();
    for term in &instance.terms {
        let Some(degrees) = shifted_degrees(&instance.degrees, &term.shifts) else {
            continue;
        };
        if term.coeff.is_zero() {
            continue;
        }
        value += &term.coeff * evaluator(&degrees)?;
    }
    Ok(Residual {
        value,
        instance: instance.clone(),
        evaluator_id: evaluator_id.to_string(),
    })
}

/// A failing tuple recorded by [`verify_suite`]: the degree tuple, the
/// offending index pair, and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteWitness {
    /// Degrees of the failing tuple.
    pub degrees: Vec<u32>,
    /// First index of the failing pair, 1-based.
    pub j: usize,
    /// Second index of the failing pair, 1-based.
    pub k: usize,
    /// Evaluator that produced the failure.
    pub evaluator_id: String,
    /// Nonzero residual value, or the evaluator's inconsistency report.
    pub detail: String,
}

/// Aggregated result of verifying every relation on a degree grid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuiteOutcome {
    /// Tuples whose every index pair gave an exactly zero residual.
    pub passed: usize,
    /// Tuples with a nonzero residual or an evaluator inconsistency.
    pub failed: usize,
    /// Tuples the evaluator could not handle (poles, domain errors).
    pub skipped: usize,
    /// One record per failed tuple.
    pub witnesses: Vec<SuiteWitness>,
}

/// Verification outcome of a single degree tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleStatus {
    /// Every index pair gave an exactly zero residual.
    Pass,
    /// Some pair gave a nonzero residual or an evaluator inconsistency.
    Fail(SuiteWitness),
    /// The evaluator reported a pole or domain error for some pair.
    Skip,
}

/// One grid tuple with its verification outcome, as produced by
/// [`verify_grid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleRecord {
    /// The degree tuple.
    pub degrees: Vec<u32>,
    /// What happened when all its pairs were verified.
    pub status: TupleStatus,
}

/// All degree tuples of the given length with entries in
/// `min_degree..=max_degree`, in lexicographic order.
pub fn degree_grid(factors: usize, min_degree: u32, max_degree: u32) -> Vec<Vec<u32>> {
    if min_degree > max_degree {
        return Vec::new();
    }
    let mut grid: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..factors {
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                (min_degree..=max_degree).map(move |d| {
                    let mut next = prefix.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    grid
}

/// Verifies every index pair of every degree tuple on the grid, in
/// parallel, merging results deterministically.
///
/// A tuple passes when all its residuals are exactly zero. A nonzero
/// residual or an `InternalInconsistency` from the evaluator fails the
/// tuple and records a witness; any other evaluator error (a pole, a
/// domain violation) skips it. Errors never escape: they are folded into
/// the outcome so a verification run always produces a full report.
pub fn verify_suite<F>(
    families: &[FamilySpec],
    min_degree: u32,
    max_degree: u32,
    evaluator: F,
    evaluator_id: &str,
) -> SuiteOutcome
where
    F: Fn(&[u32]) -> Result<Rat> + Sync,
{
    fold_records(verify_grid(families, min_degree, max_degree, evaluator, evaluator_id))
}

/// Per-tuple variant of [`verify_suite`]: returns one record per grid
/// tuple, in lexicographic tuple order regardless of parallelism.
pub fn verify_grid<F>(
    families: &[FamilySpec],
    min_degree: u32,
    max_degree: u32,
    evaluator: F,
    evaluator_id: &str,
) -> Vec<TupleRecord>
where
    F: Fn(&[u32]) -> Result<Rat> + Sync,
{
    degree_grid(families.len(), min_degree, max_degree)
        .into_par_iter()
        .map(|degrees| {
            let status = verify_tuple(families, &degrees, &evaluator, evaluator_id);
            TupleRecord { degrees, status }
        })
        .collect()
}

/// Folds per-tuple records into aggregate counts plus failure witnesses.
pub fn fold_records(records: Vec<TupleRecord>) -> SuiteOutcome {
    let mut report = SuiteOutcome::default();
    for record in records {
        match record.status {
            TupleStatus::Pass => report.passed += 1,
            TupleStatus::Fail(witness) => {
                report.failed += 1;
                report.witnesses.push(witness);
            }
            TupleStatus::Skip => report.skipped += 1,
        }
    }
    report
}

fn verify_tuple<F>(
    families: &[FamilySpec],
    degrees: &[u32],
    evaluator: &F,
    evaluator_id: &str,
) -> TupleStatus
where
    F: Fn(&[u32]) -> Result<Rat>,
{
    let witness = |j: usize, k: usize, detail: String| SuiteWitness {
        degrees: degrees.to_vec(),
        j,
        k,
        evaluator_id: evaluator_id.to_string(),
        detail,
    };
    for j in 1..=degrees.len() {
        for k in (j + 1)..=degrees.len() {
            let instance = match build_relation_mixed(families, degrees, j, k) {
                Ok(instance) => instance,
                Err(_) => return TupleStatus::Skip,
            };
            match residual_exact(&instance, evaluator, evaluator_id) {
                Ok(residual) if residual.value.is_zero() => {}
                Ok(residual) => {
                    return TupleStatus::Fail(witness(
                        j,
                        k,
                        format!("nonzero residual {}", residual.value),
                    ))
                }
                Err(Error::InternalInconsistency(msg)) => {
                    return TupleStatus::Fail(witness(j, k, msg))
                }
                Err(_) => return TupleStatus::Skip,
            }
        }
    }
    TupleStatus::Pass
}

pub mod tabulated {
    //! Denominator-cleared five-term relations as conventionally tabulated
    //! per family.
    //!
    //! Each builder returns the five coefficients in the canonical term
    //! order of [`ContigInstance`]: unshifted, +1 at j, −1 at j, +1 at k,
    //! −1 at k (u = n_j, v = n_k). Every tabulated form must agree with
    //! the generator's coefficients up to one overall nonzero rational,
    //! which [`proportional`] certifies. The Jacobi forms are stated for
    //! normalized coefficients a = 𝖯/h_l rather than the integrals
    //! themselves, so their generator comparison first multiplies each
    //! generator term by the norm ratio h_{l'}/h_0 of its shifted first
    //! degree (see [`jacobi_generator_normalized`]).

    use super::ContigInstance;
    use crate::error::Result;
    use crate::exactcore::{q, Rat};
    use crate::families::{norm_ratio, FamilySpec};
    use num_traits::{One, Zero};

    /// Gegenbauer relation through index pair (j, k):
    /// (v+λ)(u+1)𝖢_j⁺ + (u+2λ−1)(v+λ)𝖢_j⁻ = (u+λ)(v+1)𝖢_k⁺ + (u+λ)(v+2λ−1)𝖢_k⁻.
    pub fn gegenbauer_terms(u: u32, v: u32, lambda: &Rat) -> [Rat; 5] {
        let (u, v) = (q(u as i64), q(v as i64));
        let two_lm1 = |d: &Rat| d + lambda + lambda - Rat::one();
        [
            Rat::zero(),
            (&v + lambda) * (&u + Rat::one()),
            two_lm1(&u) * (&v + lambda),
            -((&u + lambda) * (&v + Rat::one())),
            -((&u + lambda) * two_lm1(&v)),
        ]
    }

    /// Hermite relation through index pair (j, k):
    /// 𝖧_k⁺ − 𝖧_j⁺ − 2u𝖧_j⁻ + 2v𝖧_k⁻ = 0.
    pub fn hermite_terms(u: u32, v: u32) -> [Rat; 5] {
        [
            Rat::zero(),
            -Rat::one(),
            q(-2 * u as i64),
            Rat::one(),
            q(2 * v as i64),
        ]
    }

    /// Laguerre relation through index pair (j, k):
    /// (u+1)𝖫_j⁺ − (v+1)𝖫_k⁺ = (v+α)𝖫_k⁻ − (u+α)𝖫_j⁻ + 2(u−v)𝖫.
    pub fn laguerre_terms(u: u32, v: u32, alpha: &Rat) -> [Rat; 5] {
        scaled_laguerre_terms(u, v, alpha, &Rat::one(), &Rat::one())
    }

    /// Relation for two Laguerre-type factors whose arguments carry scales
    /// s_j and s_k:
    /// s_k(u+α)𝓛_j⁻ − s_j(v+α)𝓛_k⁻ + (s_j(2v+α+1) − s_k(2u+α+1))𝓛
    ///   − s_j(v+1)𝓛_k⁺ + s_k(u+1)𝓛_j⁺ = 0.
    pub fn scaled_laguerre_terms(
        u: u32,
        v: u32,
        alpha: &Rat,
        s_j: &Rat,
        s_k: &Rat,
    ) -> [Rat; 5] {
        let (u, v) = (q(u as i64), q(v as i64));
        let line = |d: &Rat| d + d + alpha + Rat::one();
        [
            s_j * line(&v) - s_k * line(&u),
            s_k * (&u + Rat::one()),
            s_k * (&u + alpha),
            -(s_j * (&v + Rat::one())),
            -(s_j * (&v + alpha)),
        ]
    }

    /// Jacobi relations for normalized triple-product coefficients with
    /// degrees (l, m, n) at positions (1, 2, 3), one relation per index
    /// pair, in the canonical term order for that pair.
    pub fn jacobi_terms(
        pair: (usize, usize),
        l: u32,
        m: u32,
        n: u32,
        alpha: &Rat,
        beta: &Rat,
    ) -> [Rat; 5] {
        let (l, m, n) = (q(l as i64), q(m as i64), q(n as i64));
        let ab = alpha + beta;
        // Shorthands: s(d, c) = α+β+2d+c, pl(d, c) = d+c.
        let s = |d: &Rat, c: i64| &ab + d + d + q(c);
        let one = Rat::one();
        match pair {
            // Shifts in (m, n).
            (2, 3) => [
                q(2) * (alpha - beta)
                    * &ab
                    * (&m - &n)
                    * (&ab + &m + &n + &one)
                    * s(&n, 1)
                    / (s(&m, 0) * s(&n, 0)),
                (&ab + &m + &one) * (&m + &one) * s(&n, 1) * s(&n, 2) / s(&m, 1),
                (alpha + &m) * (beta + &m) * s(&m, 2) * s(&n, 1) * s(&n, 2)
                    / (s(&m, 0) * s(&m, 1)),
                -(s(&m, 2) * (&ab + &n + &one) * (&n + &one)),
                -(s(&m, 2) * (alpha + &n) * (beta + &n) * s(&n, 2) / s(&n, 0)),
            ],
            // Shifts in (l, n).
            (1, 3) => [
                q(2) * (alpha - beta) * &ab * (&l - &n) * (&ab + &n + &l + &one)
                    / (s(&l, 0) * s(&n, 0)),
                s(&n, 2) * (alpha + &l + &one) * (beta + &l + &one) / s(&l, 3),
                &l * (&ab + &l) * s(&l, 2) * s(&n, 2) / (s(&l, -1) * s(&l, 0)),
                -(s(&l, 2) * (&ab + &n + &one) * (&n + &one) / s(&n, 1)),
                -((alpha + &n) * (beta + &n) * s(&l, 2) * s(&n, 2) / (s(&n, 1) * s(&n, 0))),
            ],
            // Shifts in (l, m).
            (1, 2) => [
                q(2) * (alpha - beta) * &ab * (&l - &m) * (&ab + &m + &l + &one)
                    / (s(&l, 0) * s(&l, 2) * s(&m, 0)),
                (alpha + &l + &one) * (beta + &l + &one) * s(&m, 2) / (s(&l, 2) * s(&l, 3)),
                &l * (&ab + &l) * s(&m, 2) / (s(&l, -1) * s(&l, 0)),
                -((&m + &one) * (&ab + &m + &one) / s(&m, 1)),
                -((alpha + &m) * (beta + &m) * s(&m, 2) / (s(&m, 0) * s(&m, 1))),
            ],
            _ => panic!("jacobi_terms: unsupported pair {pair:?}"),
        }
    }

    /// Converts a Jacobi generator instance to the normalized-coefficient
    /// scale: each term's coefficient is multiplied by h_{l'}/h_0 where l'
    /// is the term's (possibly shifted) first degree.
    pub fn jacobi_generator_normalized(instance: &ContigInstance) -> Result<[Rat; 5]> {
        let mut out = [
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        for (slot, term) in out.iter_mut().zip(&instance.terms) {
            let l = instance.degrees[0] as i64 + term.shifts[0] as i64;
            // A −1 shift below degree 0 only occurs with coefficient C_0 = 0.
            *slot = if l < 0 {
                Rat::zero()
            } else {
                &term.coeff * norm_ratio(&instance.families[0], l as u32)?
            };
        }
        Ok(out)
    }

    /// Extracts an instance's five coefficients in canonical order.
    pub fn generator_terms(instance: &ContigInstance) -> [Rat; 5] {
        let mut out = [
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        for (slot, term) in out.iter_mut().zip(&instance.terms) {
            *slot = term.coeff.clone();
        }
        out
    }

    /// True when the two coefficient lists differ by one overall nonzero
    /// rational factor, with zeros matching zeros exactly.
    pub fn proportional(lhs: &[Rat; 5], rhs: &[Rat; 5]) -> bool {
        proportional_where(lhs, rhs, &[true; 5])
    }

    /// [`proportional`] restricted to the terms marked live; positions
    /// whose term multiplies the vanishing p_{−1} carry an arbitrary
    /// coefficient and must be excluded via [`live_mask`].
    pub fn proportional_where(lhs: &[Rat; 5], rhs: &[Rat; 5], live: &[bool; 5]) -> bool {
        let mut ratio: Option<Rat> = None;
        for ((a, b), keep) in lhs.iter().zip(rhs).zip(live) {
            if !keep {
                continue;
            }
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let r = a / b;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(r0) if *r0 == r => {}
                        Some(_) => return false,
                    }
                }
            }
        }
        ratio.is_some()
    }

    /// Marks which of an instance's five terms survive the zero-extension:
    /// a term is dead when its −1 shift lands on degree 0.
    pub fn live_mask(instance: &ContigInstance) -> [bool; 5] {
        let mut live = [true; 5];
        for (flag, term) in live.iter_mut().zip(&instance.terms) {
            *flag = instance
                .degrees
                .iter()
                .zip(&term.shifts)
                .all(|(&d, &s)| d as i64 + s as i64 >= 0);
        }
        live
    }

    /// Builds the tabulated relation for a uniform family and index pair,
    /// reading n_j and n_k from the degree tuple. Jacobi is excluded here
    /// because its tabulated form lives on the normalized-coefficient
    /// scale; compare via [`jacobi_terms`] and
    /// [`jacobi_generator_normalized`] instead.
    pub fn family_terms(
        family: &FamilySpec,
        degrees: &[u32],
        j: usize,
        k: usize,
    ) -> Option<[Rat; 5]> {
        let (u, v) = (degrees[j - 1], degrees[k - 1]);
        match family {
            FamilySpec::Gegenbauer { lambda } => Some(gegenbauer_terms(u, v, lambda)),
            FamilySpec::Hermite => Some(hermite_terms(u, v)),
            FamilySpec::Laguerre { alpha } => Some(laguerre_terms(u, v, alpha)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::tabulated::{
        family_terms, generator_terms, hermite_terms, jacobi_generator_normalized, jacobi_terms,
        live_mask, proportional, proportional_where, scaled_laguerre_terms,
    };
    use super::*;
    use crate::exactcore::{q, qq};
    use crate::lincoef::{gegenbauer, hermite, jacobi, laguerre};
    use crate::polyalg;
    use proptest::prelude::*;

    fn herm_eval(d: &[u32]) -> Result<Rat> {
        Ok(hermite::herm_triple_integral_ratio(d[0], d[1], d[2]))
    }

    #[test]
    fn hermite_relation_matches_known_coefficients() {
        // (p, m, n) = (3, 5, 2), pair (1, 2): coefficients (0, −2, −4p, 2, 4m).
        let instance = build_relation(&FamilySpec::Hermite, &[3, 5, 2], 1, 2).unwrap();
        let coeffs: Vec<Rat> = instance.terms.iter().map(|t| t.coeff.clone()).collect();
        assert_eq!(coeffs, vec![q(0), q(-2), q(-12), q(2), q(20)]);
        assert_eq!(instance.terms[1].shifts, vec![1, 0, 0]);
        assert_eq!(instance.terms[2].shifts, vec![-1, 0, 0]);
        assert_eq!(instance.terms[3].shifts, vec![0, 1, 0]);
        assert_eq!(instance.terms[4].shifts, vec![0, -1, 0]);
    }

    #[test]
    fn relation_counts_follow_the_pair_count() {
        let fam = FamilySpec::Hermite;
        assert_eq!(enumerate_relations(&fam, &[1, 2]).unwrap().len(), 1);
        assert_eq!(enumerate_relations(&fam, &[1, 2, 3]).unwrap().len(), 3);
        assert_eq!(enumerate_relations(&fam, &[1, 2, 3, 4]).unwrap().len(), 6);
        assert!(enumerate_relations(&fam, &[4]).is_err());
    }

    #[test]
    fn residuals_vanish_for_hermite_triples() {
        for instance in enumerate_relations(&FamilySpec::Hermite, &[2, 1, 1]).unwrap() {
            let residual = residual_exact(&instance, herm_eval, "herm_triple").unwrap();
            assert!(residual.value.is_zero(), "pair ({}, {})", instance.j, instance.k);
        }
    }

    #[test]
    fn residuals_vanish_for_gegenbauer_triples() {
        let lambda = qq(1, 2);
        let fam = FamilySpec::Gegenbauer { lambda: lambda.clone() };
        for instance in enumerate_relations(&fam, &[2, 2, 2]).unwrap() {
            let residual = residual_exact(
                &instance,
                |d| gegenbauer::geg_triple_integral_ratio(d[0], d[1], d[2], &lambda),
                "geg_triple",
            )
            .unwrap();
            assert!(residual.value.is_zero(), "pair ({}, {})", instance.j, instance.k);
        }
    }

    #[test]
    fn out_of_support_tuples_give_zero_residual() {
        // Every shifted tuple of ([5,1,1], pair (1,2)) violates parity or
        // the triangle condition, so all five evaluator calls return 0.
        let instance = build_relation(&FamilySpec::Hermite, &[5, 1, 1], 1, 2).unwrap();
        let residual = residual_exact(&instance, herm_eval, "herm_triple").unwrap();
        assert!(residual.value.is_zero());
    }

    #[test]
    fn degree_zero_shifts_drop_the_vanishing_term() {
        // Degree 0 at position 1: the −1-at-j term is p_{-1} and is dropped;
        // the residual must still vanish identically.
        let instance = build_relation(&FamilySpec::Hermite, &[0, 1, 1], 1, 2).unwrap();
        let residual = residual_exact(&instance, herm_eval, "herm_triple").unwrap();
        assert!(residual.value.is_zero());
    }

    #[test]
    fn scaled_relation_reduces_to_plain_laguerre_at_unit_scales() {
        let alpha = qq(1, 2);
        let one = q(1);
        let scaled = scaled_relation(&alpha, &one, &one, &[2, 1, 3], (1, 3)).unwrap();
        let plain = build_relation(
            &FamilySpec::Laguerre { alpha: alpha.clone() },
            &[2, 1, 3],
            1,
            3,
        )
        .unwrap();
        for (s, p) in scaled.terms.iter().zip(&plain.terms) {
            assert_eq!(s.coeff, p.coeff);
            assert_eq!(s.shifts, p.shifts);
        }
    }

    #[test]
    fn scaled_relation_residuals_vanish() {
        let (alpha, a, b) = (q(0), q(2), q(3));
        let eval = |d: &[u32]| {
            laguerre::scaled_lag_integral_ratio(d[0], d[1], d[2], &alpha, &a, &b)
        };
        for pair in [(1, 2), (1, 3), (2, 3)] {
            let instance = scaled_relation(&alpha, &a, &b, &[1, 1, 1], pair).unwrap();
            let residual = residual_exact(&instance, eval, "scaled_lag").unwrap();
            assert!(residual.value.is_zero(), "pair {pair:?}");
        }
    }

    #[test]
    fn verify_suite_passes_hermite_grid() {
        let fams = vec![FamilySpec::Hermite; 3];
        let outcome = verify_suite(&fams, 0, 3, |d| herm_eval(d), "herm_triple");
        assert_eq!(outcome.passed, 64);
        assert_eq!(outcome.failed, 0);
        assert_eq!(outcome.skipped, 0);
        assert!(outcome.witnesses.is_empty());
    }

    #[test]
    fn verify_suite_records_failures_with_witnesses() {
        // An evaluator with a deliberate off-by-one at one tuple must
        // produce failed counts and a witness naming that tuple.
        let fams = vec![FamilySpec::Hermite; 3];
        let outcome = verify_suite(
            &fams,
            0,
            2,
            |d| {
                let mut v = hermite::herm_triple_integral_ratio(d[0], d[1], d[2]);
                if d == [2, 2, 2] {
                    v += q(1);
                }
                Ok(v)
            },
            "broken",
        );
        assert!(outcome.failed >= 1);
        assert!(outcome
            .witnesses
            .iter()
            .any(|w| w.evaluator_id == "broken" && w.detail.contains("nonzero residual")));
        assert_eq!(outcome.passed + outcome.failed + outcome.skipped, 27);
    }

    #[test]
    fn verify_suite_skips_evaluator_poles() {
        let fams = vec![FamilySpec::Hermite; 3];
        let outcome = verify_suite(
            &fams,
            1,
            2,
            |d| {
                if d[0] == 2 {
                    Err(Error::FormulaPole("synthetic".into()))
                } else {
                    herm_eval(d)
                }
            },
            "pole",
        );
        assert!(outcome.skipped >= 1);
        assert_eq!(outcome.passed + outcome.failed + outcome.skipped, 8);
    }

    #[test]
    fn inconsistency_errors_fail_rather_than_skip() {
        let fams = vec![FamilySpec::Hermite; 2];
        let outcome = verify_suite(
            &fams,
            1,
            1,
            |_| Err(Error::InternalInconsistency("routes disagree".into())),
            "dual",
        );
        assert_eq!(outcome.failed, 1);
        assert_eq!(outcome.witnesses[0].detail, "routes disagree");
    }

    #[test]
    fn degree_grid_is_lexicographic_and_sized() {
        let grid = degree_grid(2, 0, 2);
        assert_eq!(grid.len(), 9);
        assert_eq!(grid[0], vec![0, 0]);
        assert_eq!(grid[1], vec![0, 1]);
        assert_eq!(grid[8], vec![2, 2]);
        assert!(degree_grid(3, 2, 1).is_empty());
    }

    #[test]
    fn tabulated_gegenbauer_matches_generator() {
        for lambda in [qq(1, 3), qq(1, 2), q(1), qq(3, 2)] {
            let fam = FamilySpec::Gegenbauer { lambda: lambda.clone() };
            for degrees in degree_grid(3, 0, 3) {
                for (j, k) in [(1, 2), (1, 3), (2, 3)] {
                    let instance = build_relation(&fam, &degrees, j, k).unwrap();
                    let tab = family_terms(&fam, &degrees, j, k).unwrap();
                    assert!(
                        proportional_where(
                            &tab,
                            &generator_terms(&instance),
                            &live_mask(&instance)
                        ),
                        "λ={lambda} degrees={degrees:?} pair=({j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn tabulated_hermite_matches_generator_for_three_and_four_factors() {
        let fam = FamilySpec::Hermite;
        for factors in [3usize, 4] {
            for degrees in degree_grid(factors, 0, 2) {
                for j in 1..=factors {
                    for k in (j + 1)..=factors {
                        let instance = build_relation(&fam, &degrees, j, k).unwrap();
                        let tab = hermite_terms(degrees[j - 1], degrees[k - 1]);
                        assert!(
                            proportional(&tab, &generator_terms(&instance)),
                            "degrees={degrees:?} pair=({j},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tabulated_laguerre_matches_generator() {
        let alpha = qq(1, 2);
        let fam = FamilySpec::Laguerre { alpha: alpha.clone() };
        for degrees in degree_grid(3, 0, 3) {
            for (j, k) in [(1, 2), (1, 3), (2, 3)] {
                let instance = build_relation(&fam, &degrees, j, k).unwrap();
                let tab = family_terms(&fam, &degrees, j, k).unwrap();
                assert!(
                    proportional_where(&tab, &generator_terms(&instance), &live_mask(&instance)),
                    "degrees={degrees:?} pair=({j},{k})"
                );
            }
        }
    }

    #[test]
    fn tabulated_scaled_laguerre_matches_generator() {
        let alpha = qq(1, 2);
        let (a, b) = (q(2), q(3));
        let scales = [q(1), a.clone(), b.clone()];
        for degrees in degree_grid(3, 0, 2) {
            for (j, k) in [(1, 2), (1, 3), (2, 3)] {
                let degrees: [u32; 3] = [degrees[0], degrees[1], degrees[2]];
                let instance = scaled_relation(&alpha, &a, &b, &degrees, (j, k)).unwrap();
                let tab = scaled_laguerre_terms(
                    degrees[j - 1],
                    degrees[k - 1],
                    &alpha,
                    &scales[j - 1],
                    &scales[k - 1],
                );
                assert!(
                    proportional_where(&tab, &generator_terms(&instance), &live_mask(&instance)),
                    "degrees={degrees:?} pair=({j},{k})"
                );
            }
        }
    }

    #[test]
    fn tabulated_jacobi_matches_normalized_generator() {
        for (alpha, beta) in [(qq(1, 2), qq(1, 3)), (qq(3, 2), q(1))] {
            let fam = FamilySpec::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
            for m in 1u32..=2 {
                for n in m..=3 {
                    for l in (n - m).max(1)..=(n + m) {
                        for pair in [(2, 3), (1, 3), (1, 2)] {
                            let instance =
                                build_relation(&fam, &[l, m, n], pair.0, pair.1).unwrap();
                            let gen = jacobi_generator_normalized(&instance).unwrap();
                            let tab = jacobi_terms(pair, l, m, n, &alpha, &beta);
                            assert!(
                                proportional(&tab, &gen),
                                "(α,β)=({alpha},{beta}) (l,m,n)=({l},{m},{n}) pair={pair:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn proportionality_rejects_mismatches() {
        let a = [q(0), q(1), q(2), q(3), q(4)];
        let scaled = [q(0), q(2), q(4), q(6), q(8)];
        let zero_mismatch = [q(1), q(1), q(2), q(3), q(4)];
        let ratio_mismatch = [q(0), q(2), q(4), q(6), q(9)];
        assert!(proportional(&a, &scaled));
        assert!(!proportional(&a, &zero_mismatch));
        assert!(!proportional(&a, &ratio_mismatch));
    }

    #[test]
    fn degenerate_leading_coefficient_is_reported() {
        // Gegenbauer A_n = 2(n+λ)/(n+1) vanishes at λ = −n; λ = −2 is a
        // formally valid basis parameter rejected only at the shifted factor.
        let fam = FamilySpec::Gegenbauer { lambda: qq(-5, 2) };
        let mut saw_degenerate = false;
        for degrees in degree_grid(2, 0, 4) {
            match build_relation(&fam, &degrees, 1, 2) {
                Err(Error::DegenerateBasis(_)) => saw_degenerate = true,
                Ok(_) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        assert!(!saw_degenerate, "λ=-5/2 never zeroes A_n");
        let fam = FamilySpec::Gegenbauer { lambda: qq(-1, 1) };
        assert!(matches!(
            build_relation(&fam, &[1, 2], 1, 2),
            Err(Error::DegenerateBasis(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Residuals vanish with the closed-form evaluator and with the
        /// brute-force oracle alike, for every pair of every small tuple.
        #[test]
        fn residuals_vanish_for_both_evaluators(
            p in 0u32..4, m in 0u32..4, n in 0u32..4,
            lambda_num in 1i64..4,
        ) {
            let lambda = qq(lambda_num, 3);
            let fam = FamilySpec::Gegenbauer { lambda: lambda.clone() };
            for instance in enumerate_relations(&fam, &[p, m, n]).unwrap() {
                let closed = residual_exact(
                    &instance,
                    |d| gegenbauer::geg_triple_integral_ratio(d[0], d[1], d[2], &lambda),
                    "geg_triple",
                ).unwrap();
                let oracle = residual_exact(
                    &instance,
                    |d| polyalg::oracle_integral_ratio(&fam, d),
                    "oracle",
                ).unwrap();
                prop_assert!(closed.value.is_zero());
                prop_assert!(oracle.value.is_zero());
            }
        }

        /// Jacobi residuals vanish including at the parameter lines where
        /// the closed form needs its removable-singularity handling.
        #[test]
        fn jacobi_residuals_vanish(
            l in 0u32..4, m in 0u32..3, n in 0u32..3,
            which in 0usize..3,
        ) {
            let params = [(q(0), q(0)), (qq(1, 2), qq(1, 3)), (q(1), q(1))];
            let (alpha, beta) = params[which].clone();
            let fam = FamilySpec::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
            for instance in enumerate_relations(&fam, &[l, m, n]).unwrap() {
                let residual = residual_exact(
                    &instance,
                    |d| jacobi::jac_triple_integral_ratio(d[0], d[1], d[2], &alpha, &beta),
                    "jac_triple",
                ).unwrap();
                prop_assert!(residual.value.is_zero());
            }
        }
    }
}
