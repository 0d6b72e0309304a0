//! The coefficient-field abstraction the noncommutative engine is generic over.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field usable as a coefficient domain.
///
/// Arithmetic is by reference so that big-number backed implementations do
/// not have to clone on every operation. Equality must be exact: there is no
/// tolerance anywhere in the engine, so floating-point types are deliberately
/// not implementors.
pub trait Field:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    /// `Some(r)` if this element is the rational number `r`.
    fn as_rational(&self) -> Option<BigRational>;

    /// Multiplicative order if this is a root of unity.
    fn root_order(&self) -> Option<u32> {
        let r = self.as_rational()?;
        if r.is_one() {
            Some(1)
        } else if (-r).is_one() {
            Some(2)
        } else {
            None
        }
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn is_one_exact(&self) -> bool {
        self == &Self::one()
    }

    /// Integer power; negative exponents invert. `None` only for `0^e`, `e < 0`.
    fn pow_i64(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Some(pow_u64(&base, e.unsigned_abs()))
    }
}

pub(crate) fn pow_u64<F: Field>(base: &F, mut e: u64) -> F {
    let mut acc = F::one();
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul_ref(&sq);
        }
        e >>= 1;
        if e > 0 {
            sq = sq.mul_ref(&sq);
        }
    }
    acc
}

impl Field for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

/// Formats a rational as `n` or `n/d`, the literal syntax of the expression grammar.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
