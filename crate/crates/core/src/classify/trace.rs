//! Closed-form entries of the rank-two three-object loop.
//!
//! On the diagram `x –1– y –2– z` with
//! `C^x = [[2,−a],[−c,2]]`, `C^y = [[2,−a],[−d,2]]`, `C^z = [[2,−b],[−d,2]]`
//! the loop `t = σ_2^x σ_1^y σ_2^z σ_1^z σ_2^y σ_1^x ∈ Hom(x)` is a
//! polynomial matrix in `a, b, c, d`.

use thiserror::Error;

use crate::groupoid::evaluate_word;
use crate::matrix::IntMatrix;

use super::catalog::rank2_three_object_scheme;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("parameters must be positive")]
    NonPositive,
    #[error("closed form disagrees with the matrix product at {0:?}")]
    IdentityMismatch((i64, i64, i64, i64)),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    /// `[[t11, t12], [t21, t22]]` from the closed forms.
    pub t: [[i64; 2]; 2],
    /// The same loop as a literal matrix product.
    pub product: IntMatrix,
    /// `t11 + t22 − 2 = (ad−1)(abcd−2ac−bc−2bd+4)`.
    pub minus_two_factorization: bool,
    /// `t11 + t22 + 2 = (abd−2a−b)(acd−c−2d)`.
    pub plus_two_factorization: bool,
    /// `t22 = (1−ac) t11 + c(−abd+a+b)`.
    pub t22_relation: bool,
}

impl TraceReport {
    pub fn trace(&self) -> i64 {
        self.t[0][0] + self.t[1][1]
    }

    pub fn all_hold(&self) -> bool {
        self.minus_two_factorization
            && self.plus_two_factorization
            && self.t22_relation
            && self.product.rows() == vec![self.t[0].to_vec(), self.t[1].to_vec()]
    }
}

/// Evaluates the closed forms of `t` and checks them against the product
/// and the three factorizations.
pub fn trace_polynomials(a: i64, b: i64, c: i64, d: i64) -> Result<TraceReport, TraceError> {
    if a < 1 || b < 1 || c < 1 || d < 1 {
        return Err(TraceError::NonPositive);
    }
    let t11 = -a * b * d * d + 2 * a * d + b * d - 1;
    let t12 = a * a * b * d * d - 2 * a * a * d - 2 * a * b * d + 2 * a + b;
    let t21 = -a * b * c * d * d + 2 * a * c * d + b * c * d + b * d * d - c - 2 * d;
    let t22 = a * a * b * c * d * d - 2 * a * a * c * d - 2 * a * b * c * d - a * b * d * d
        + 2 * a * c
        + 2 * a * d
        + b * c
        + b * d
        - 1;
    let tr = t11 + t22;

    let s = rank2_three_object_scheme(a, b, c, d);
    let (end, product) = evaluate_word(&s, 0, &[0, 1, 0, 1, 0, 1]);
    debug_assert_eq!(end, 0);

    let report = TraceReport {
        t: [[t11, t12], [t21, t22]],
        product,
        minus_two_factorization: tr - 2 == (a * d - 1) * (a * b * c * d - 2 * a * c - b * c - 2 * b * d + 4),
        plus_two_factorization: tr + 2 == (a * b * d - 2 * a - b) * (a * c * d - c - 2 * d),
        t22_relation: t22 == (1 - a * c) * t11 + c * (-a * b * d + a + b),
    };
    if report.all_hold() {
        Ok(report)
    } else {
        Err(TraceError::IdentityMismatch((a, b, c, d)))
    }
}
