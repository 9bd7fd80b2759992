//! Closed-form linearization coefficients and product-integral ratios.
//!
//! Each submodule carries the hypergeometric closed forms for one family:
//! pairwise linearization coefficients (the expansion of a product of two
//! polynomials back into the family basis), their three-factor analogues, and
//! weighted product integrals normalized by h_0 so every value is an exact
//! rational. Every operation here is independently checkable against the
//! brute-force expansion oracle in [`crate::polyalg`].

mod eps;
pub mod gegenbauer;
pub mod hermite;
pub mod jacobi;
pub mod laguerre;

use crate::error::{Error, Result};
use crate::exactcore::Rat;
use crate::families::FamilySpec;

/// A request for one linearization coefficient: expand the product of the
/// family polynomials with the given degrees and return the coefficient
/// selected by `target_index`.
///
/// For two-factor queries the index is the `k` of the relevant coefficient
/// formula; for three-factor Gegenbauer/Hermite queries it selects the basis
/// degree `d_1 + d_2 + d_3 - 2k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffQuery {
    /// Family (with parameters) of every factor and of the expansion basis.
    pub family: FamilySpec,
    /// Degrees of the product factors, in any order.
    pub degrees: Vec<u32>,
    /// The k (or l) of the relevant coefficient formula.
    pub target_index: u32,
}

/// Evaluates one linearization coefficient via the closed form for the
/// query's family and factor count.
///
/// Two factors dispatch to the pairwise coefficient of each family; three
/// factors are supported for Gegenbauer and Hermite. Other shapes (including
/// every scaled-Laguerre query, whose product is not a polynomial in a single
/// scaled basis) report `IndexOutOfRange`.
pub fn coeff_query(query: &CoeffQuery) -> Result<Rat> {
    let k = query.target_index;
    match (&query.family, query.degrees.as_slice()) {
        (FamilySpec::Gegenbauer { lambda }, [m, n]) => gegenbauer::geg_b(k, *m, *n, lambda),
        (FamilySpec::Gegenbauer { lambda }, [p, m, n]) => {
            gegenbauer::geg_f(k, *p, *m, *n, lambda)
        }
        (FamilySpec::Hermite, [m, n]) => hermite::herm_b(k, *m, *n),
        (FamilySpec::Hermite, [p, m, n]) => hermite::herm_f(k, *p, *m, *n),
        (FamilySpec::Jacobi { alpha, beta }, [m, n]) => jacobi::jac_a(k, *m, *n, alpha, beta),
        (FamilySpec::Laguerre { alpha }, [m, n]) => laguerre::lag_lin_coeff(k, *m, *n, alpha),
        (family, degrees) => Err(Error::IndexOutOfRange(format!(
            "no closed-form coefficient for {} with {} factors",
            family.name(),
            degrees.len()
        ))),
    }
}

/// Enumerates the full coefficient vector for a query's family and degrees as
/// `(basis_degree, value)` pairs in decreasing basis degree, covering exactly
/// the index range of the relevant closed form.
pub fn coeff_vector(family: &FamilySpec, degrees: &[u32]) -> Result<Vec<(u32, Rat)>> {
    let index_range: Vec<(u32, u32)> = match (family, degrees) {
        // Symmetric families: index k runs to min(m,n) (two factors) or
        // floor(s/2) (three factors); basis degree is s - 2k.
        (FamilySpec::Gegenbauer { .. } | FamilySpec::Hermite, d) if d.len() == 2 => {
            let s = d[0] + d[1];
            (0..=d[0].min(d[1])).map(|k| (k, s - 2 * k)).collect()
        }
        (FamilySpec::Gegenbauer { .. } | FamilySpec::Hermite, d) if d.len() == 3 => {
            let s = d[0] + d[1] + d[2];
            (0..=s / 2).map(|k| (k, s - 2 * k)).collect()
        }
        // Jacobi: k runs to 2 min(m,n); basis degree is k + |n - m|.
        (FamilySpec::Jacobi { .. }, [m, n]) => {
            let (lo, hi) = (*m.min(n), *m.max(n));
            (0..=2 * lo).rev().map(|k| (k, k + hi - lo)).collect()
        }
        // Laguerre: the basis degree k itself runs over |n-m|..=n+m, with
        // zero coefficients below |n-m| omitted by construction.
        (FamilySpec::Laguerre { .. }, [m, n]) => {
            let (lo, hi) = (*m.min(n), *m.max(n));
            ((hi - lo)..=(hi + lo)).rev().map(|k| (k, k)).collect()
        }
        _ => {
            return Err(Error::IndexOutOfRange(format!(
                "no closed-form coefficient vector for {} with {} factors",
                family.name(),
                degrees.len()
            )))
        }
    };
    index_range
        .into_iter()
        .map(|(k, deg)| {
            let value = coeff_query(&CoeffQuery {
                family: family.clone(),
                degrees: degrees.to_vec(),
                target_index: k,
            })?;
            Ok((deg, value))
        })
        .collect()
}

/// Evaluates the h_0-normalized weighted product integral for two or three
/// factors of one family via the closed forms.
pub fn integral_ratio(family: &FamilySpec, degrees: &[u32]) -> Result<Rat> {
    match (family, degrees) {
        (FamilySpec::Gegenbauer { lambda }, [m, n]) => {
            gegenbauer::geg_triple_integral_ratio(0, *m, *n, lambda)
        }
        (FamilySpec::Gegenbauer { lambda }, [p, m, n]) => {
            gegenbauer::geg_triple_integral_ratio(*p, *m, *n, lambda)
        }
        (FamilySpec::Gegenbauer { lambda }, [q, p, m, n]) => {
            gegenbauer::geg_quad_integral_ratio(*q, *p, *m, *n, lambda)
        }
        (FamilySpec::Hermite, [m, n]) => Ok(hermite::herm_triple_integral_ratio(0, *m, *n)),
        (FamilySpec::Hermite, [p, m, n]) => Ok(hermite::herm_triple_integral_ratio(*p, *m, *n)),
        (FamilySpec::Hermite, [k, p, m, n]) => {
            hermite::herm_quad_integral_ratio(*k, *p, *m, *n)
        }
        (FamilySpec::Jacobi { alpha, beta }, [m, n]) => {
            jacobi::jac_triple_integral_ratio(0, *m, *n, alpha, beta)
        }
        (FamilySpec::Jacobi { alpha, beta }, [l, m, n]) => {
            jacobi::jac_triple_integral_ratio(*l, *m, *n, alpha, beta)
        }
        (FamilySpec::Laguerre { alpha }, [m, n]) => {
            laguerre::lag_triple_integral_ratio(0, *m, *n, alpha)
        }
        (FamilySpec::Laguerre { alpha }, [p, m, n]) => {
            laguerre::lag_triple_integral_ratio(*p, *m, *n, alpha)
        }
        (family, degrees) => Err(Error::IndexOutOfRange(format!(
            "no closed-form integral ratio for {} with {} factors",
            family.name(),
            degrees.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::qq;
    use crate::polyalg;

    #[test]
    fn coeff_query_dispatches_to_every_family() {
        let cases: Vec<(FamilySpec, Vec<u32>, u32)> = vec![
            (FamilySpec::Gegenbauer { lambda: qq(1, 2) }, vec![1, 2], 1),
            (FamilySpec::Gegenbauer { lambda: qq(1, 2) }, vec![1, 1, 2], 1),
            (FamilySpec::Hermite, vec![2, 3], 2),
            (FamilySpec::Hermite, vec![1, 1, 2], 1),
            (FamilySpec::Jacobi { alpha: qq(1, 2), beta: qq(1, 3) }, vec![2, 3], 2),
            (FamilySpec::Laguerre { alpha: qq(1, 2) }, vec![1, 1], 1),
        ];
        for (family, degrees, target_index) in cases {
            let query = CoeffQuery { family, degrees, target_index };
            assert!(coeff_query(&query).is_ok(), "query failed: {query:?}");
        }
    }

    #[test]
    fn coeff_vector_matches_oracle_expansion() {
        let families = vec![
            FamilySpec::Gegenbauer { lambda: qq(1, 3) },
            FamilySpec::Hermite,
            FamilySpec::Jacobi { alpha: qq(1, 2), beta: qq(1, 3) },
            FamilySpec::Laguerre { alpha: qq(1, 2) },
        ];
        for family in &families {
            for degrees in [[2u32, 3], [1, 4]] {
                let vector = coeff_vector(family, &degrees).unwrap();
                let expansion = polyalg::oracle_linearize(family, &degrees).unwrap();
                for (deg, value) in &vector {
                    assert_eq!(value, &expansion.coeff(*deg), "{} {degrees:?} deg {deg}",
                        family.name());
                }
                // The vector covers the oracle's full support.
                for deg in expansion.support() {
                    assert!(
                        vector.iter().any(|(d, _)| *d == deg),
                        "missing degree {deg} for {}",
                        family.name()
                    );
                }
            }
        }
    }

    #[test]
    fn three_factor_coeff_vector_matches_oracle() {
        let family = FamilySpec::Hermite;
        let vector = coeff_vector(&family, &[1, 2, 2]).unwrap();
        let expansion = polyalg::oracle_linearize(&family, &[1, 2, 2]).unwrap();
        for (deg, value) in &vector {
            assert_eq!(value, &expansion.coeff(*deg));
        }
    }

    #[test]
    fn integral_ratio_matches_oracle_across_shapes() {
        let geg = FamilySpec::Gegenbauer { lambda: qq(1, 2) };
        for degrees in [vec![2u32, 2], vec![1, 2, 3], vec![1, 1, 2, 2]] {
            let got = integral_ratio(&geg, &degrees).unwrap();
            let want = polyalg::oracle_integral_ratio(&geg, &degrees).unwrap();
            assert_eq!(got, want, "{degrees:?}");
        }
        let herm = FamilySpec::Hermite;
        for degrees in [vec![3u32, 3], vec![2, 3, 3], vec![2, 2, 3, 3]] {
            let got = integral_ratio(&herm, &degrees).unwrap();
            let want = polyalg::oracle_integral_ratio(&herm, &degrees).unwrap();
            assert_eq!(got, want, "{degrees:?}");
        }
    }

    #[test]
    fn scaled_family_queries_are_rejected() {
        let family = FamilySpec::ScaledLaguerre { alpha: qq(1, 2), scale: qq(2, 1) };
        let query = CoeffQuery { family: family.clone(), degrees: vec![1, 1], target_index: 0 };
        assert!(matches!(coeff_query(&query), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(
            coeff_vector(&family, &[1, 1]),
            Err(Error::IndexOutOfRange(_))
        ));
    }
}
