//! Hilbert series of weighted Grassmannians.
//!
//! Both formula paths are evaluated in a ℤ²-graded refinement: each exponent
//! linear in `a` is paired with the same functional at `δ = (0, 1, …, n)`, so
//! that no denominator factor degenerates when entries of `a` coincide. The
//! univariate series is the exact limit `z → 1`.

mod closed;
mod laurent;
mod perm;
mod series;
mod weyl;

use num_bigint::BigInt;
use thiserror::Error;

pub use closed::{closed_series, closed_series_with_budget, signed_coset};
pub use laurent::{BiExp, BiLaurent, Exponent, Laurent, LaurentPoly};
pub use perm::{f_sigma, permutation_sign, SignedPermTerm};
pub use series::{expand, hilbert_serre_denominator, limit_z1, lowest_terms, recover_numerator, RECOVERY_MARGIN};
pub use weyl::{weyl_denominator_sides, weyl_series, weyl_series_with_budget};

use crate::grading::{degrees, is_positive, GradingParams};

/// Largest `(n+1)!` the formula paths accept by default, i.e. `n ≤ 7`.
pub const DEFAULT_BUDGET: u64 = 40320;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("grading is not positive")]
    NotPositive,
    #[error("(n+1)! = {required} exceeds the budget {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("numerator not divisible by (z-1) while the denominator vanishes at z = 1")]
    LimitDoesNotExist,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("lowest denominator coefficient {0} is not a unit")]
    NonInvertibleDenominator(BigInt),
    #[error("numerator has a term of negative degree {0}")]
    NegativeDegree(i64),
    #[error("coordinate degree {0} is not positive")]
    NonPositiveDegree(i64),
    #[error("series has {available} coefficients, at least {needed} needed")]
    WindowTooShort { needed: usize, available: usize },
    #[error("nonzero coefficient beyond the numerator at degree {degree}")]
    NonPolynomialTail { degree: usize },
    #[error("series does not have the expected Hilbert-Serre denominator")]
    InexactNumerator,
    #[error("pairing {0} is not integral")]
    NonIntegralExponent(String),
}

/// `H(t) = numerator / denominator` with `denominator = Π_I (1 − t^{deg T_I})`,
/// plus the coefficients `d_0, …, d_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertResult {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    pub series: Vec<BigInt>,
}

impl HilbertResult {
    /// The same rational function in lowest terms.
    pub fn reduced(&self) -> (LaurentPoly, LaurentPoly) {
        lowest_terms(&self.numerator, &self.denominator)
    }

    /// `denominator · series ≡ numerator` through the stored order.
    pub fn is_consistent(&self) -> bool {
        let len = self.series.len();
        let prod = &self.denominator * &LaurentPoly::from_dense(&self.series);
        prod.dense(len) == self.numerator.dense(len)
            && self.numerator.min_degree().is_none_or(|m| m >= 0)
    }
}

pub(crate) fn check_budget(p: &GradingParams, budget: u64) -> Result<(), HilbertError> {
    if !is_positive(p) {
        return Err(HilbertError::NotPositive);
    }
    let required = (1..=p.n() as u64 + 1).try_fold(1u64, |acc, i| acc.checked_mul(i)).unwrap_or(u64::MAX);
    if required > budget {
        return Err(HilbertError::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Turns the limit fraction `n1 / d1` into Hilbert-Serre form and expands it.
pub(crate) fn finish(
    p: &GradingParams,
    n1: &LaurentPoly,
    d1: &LaurentPoly,
    order: usize,
) -> Result<HilbertResult, HilbertError> {
    let degs = degrees(p).values();
    let denominator = hilbert_serre_denominator(&degs);
    let numerator = (n1 * &denominator).div_exact(d1).ok_or(HilbertError::InexactNumerator)?;
    let series = expand(&numerator, &denominator, order)?;
    Ok(HilbertResult {
        numerator,
        denominator,
        series,
    })
}

/// The `δ = (0, 1, …, n)` partner grading used for the refinement.
pub(crate) fn tie_breaker(p: &GradingParams) -> GradingParams {
    GradingParams::new(p.n(), p.k(), (0..=p.n() as i64).collect()).expect("same shape")
}
