//! Exact scalars: cyclotomic fields, roots of unity and q-binomials.

mod cyclotomic;
mod field;
mod qbinom;
mod roots;

use thiserror::Error;

pub use cyclotomic::{
    cyclotomic_polynomial, euler_phi, precompute_cyclotomic_table, CycloScalar,
    DEFAULT_CONDUCTOR_BOUND,
};
pub use field::{format_rational, Field};
pub use qbinom::qbinom;
pub use roots::{is_primitive_pth_root, nth_root, order_of, RootOfUnity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no multiplicative order")]
    Zero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("witness unavailable in coefficient field")]
    WitnessUnavailable,
}

/// Shorthand for `zeta_L^k`.
pub fn zeta(l: u32, k: i64) -> CycloScalar {
    CycloScalar::make_root(l, k)
}
