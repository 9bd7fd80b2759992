//! Exact linearization coefficients and contiguous recurrence relations for
//! classical orthogonal polynomials.
//!
//! A product of classical orthogonal polynomials expands back into the same
//! family,
//!
//! ```text
//! p_{n₁}(x) ⋯ p_{nᵣ}(x) = Σ_k c_k p_k(x),
//! ```
//!
//! and for the Gegenbauer, Hermite, Jacobi, and Laguerre families the
//! coefficients `c_k` (and the companion integrals `∫ p_{n₁} ⋯ p_{nᵣ} dμ`)
//! have closed forms built from Pochhammer symbols and terminating
//! hypergeometric series. This crate evaluates those closed forms in exact
//! rational arithmetic and verifies them along three independent routes:
//!
//! - a polynomial-algebra oracle ([`polyalg`]) that expands products in the
//!   monomial basis and changes basis back, never touching a hypergeometric
//!   series;
//! - five-term contiguous relations ([`contiguous`]) whose residuals must
//!   vanish identically in exact arithmetic;
//! - floating-point Gauss quadrature ([`numquad`]) built by the
//!   Golub-Welsch eigenvalue method.
//!
//! Modules are layered bottom-up: [`exactcore`] (rational scalars,
//! Pochhammer symbols, factorials), [`hyper`] (terminating ᵣFₛ and
//! Kampé de Fériet series), [`families`] (recurrence data and validity
//! domains per family), [`polyalg`] (dense polynomials and oracles),
//! [`lincoef`] (the closed-form coefficient and integral formulas),
//! [`contiguous`] (relation construction and suite verification),
//! [`numquad`] (Gauss rules), and [`report`] (serializable run reports).
//!
//! All exact arithmetic uses arbitrary-precision rationals; a computed
//! coefficient is either exactly right or an explicit [`Error`].

pub mod contiguous;
pub mod error;
pub mod exactcore;
pub mod families;
pub mod hyper;
pub mod lincoef;
pub mod numquad;
pub mod polyalg;
pub mod report;

pub use error::{Error, Result};
pub use exactcore::{Int, Rat};
pub use families::FamilySpec;
