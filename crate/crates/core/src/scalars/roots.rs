//! Roots of unity: multiplicative orders, an exact `zeta_n^k` type, and
//! extraction of n-th roots inside cyclotomic fields.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::{prime_factors, CycloScalar};
use super::ScalarError;

/// Multiplicative order of `a` if it is a root of unity, `None` otherwise.
///
/// Roots of unity in `Q(zeta_L)` have order dividing `lcm(2, L)`, so the
/// search is finite.
pub fn order_of(a: &CycloScalar) -> Result<Option<u32>, ScalarError> {
    if a.is_zero() {
        return Err(ScalarError::Zero);
    }
    let l = a.conductor();
    let n = if l.is_multiple_of(2) { l } else { 2 * l };
    let one = CycloScalar::one();
    if a.pow(n as i64)? != one {
        return Ok(None);
    }
    let mut order = n;
    for p in prime_factors(n as u64) {
        let p = p as u32;
        while order % p == 0 && a.pow((order / p) as i64)? == one {
            order /= p;
        }
    }
    Ok(Some(order))
}

/// True iff `a` is a primitive `p`-th root of unity. Zero is never one.
pub fn is_primitive_pth_root(a: &CycloScalar, p: u32) -> bool {
    matches!(order_of(a), Ok(Some(n)) if n == p)
}

/// The root of unity `zeta_order^exponent`, stored in lowest terms.
///
/// `order` is therefore the multiplicative order of the element; order 1 is
/// the scalar 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub fn new(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(n as i64) as u32;
        if e == 0 {
            return RootOfUnity {
                order: 1,
                exponent: 0,
            };
        }
        let g = n.gcd(&e);
        RootOfUnity {
            order: n / g,
            exponent: e / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn minus_one() -> Self {
        RootOfUnity {
            order: 2,
            exponent: 1,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Membership in `R_n`, the primitive n-th roots of unity.
    pub fn in_r(&self, n: u32) -> bool {
        self.order == n
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn pow(&self, e: i64) -> Self {
        let n = self.order as i64;
        let k = (self.exponent as i64 * e.rem_euclid(n)).rem_euclid(n);
        RootOfUnity::new(self.order, k)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn to_scalar(&self) -> CycloScalar {
        CycloScalar::make_root(self.order, self.exponent as i64)
    }

    /// Discrete logarithm inside the cyclotomic field: `None` unless `a` is a root of unity.
    pub fn from_scalar(a: &CycloScalar) -> Option<Self> {
        let n = order_of(a).ok()??;
        (0..n)
            .filter(|k| n.gcd(k) == 1 || n == 1)
            .map(|k| RootOfUnity::new(n, k as i64))
            .find(|r| r.to_scalar() == *a)
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let n = self.order.lcm(&rhs.order);
        let k = self.exponent as u64 * (n / self.order) as u64
            + rhs.exponent as u64 * (n / rhs.order) as u64;
        RootOfUnity::new(n, (k % n as u64) as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({},{})", self.order, self.exponent)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Square root of a positive prime inside a cyclotomic field, via Gauss sums.
fn sqrt_prime(p: u64) -> CycloScalar {
    if p == 2 {
        return &CycloScalar::make_root(8, 1) + &CycloScalar::make_root(8, 7);
    }
    let pl = p as u32;
    let mut g = CycloScalar::zero();
    for a in 1..pl {
        let chi = legendre(a as u64, p);
        let term = CycloScalar::make_root(pl, a as i64);
        g = if chi == 1 { &g + &term } else { &g - &term };
    }
    if p % 4 == 1 {
        g
    } else {
        // g^2 = -p, so sqrt(p) = -i g
        -&(&CycloScalar::make_root(4, 1) * &g)
    }
}

fn legendre(a: u64, p: u64) -> i32 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

// Largest trial-division input for square roots of rationals.
const SQRT_FACTOR_LIMIT: u64 = 1 << 40;

/// Square root of a nonnegative rational as a cyclotomic element.
fn sqrt_nonneg_rational(r: &BigRational) -> Result<CycloScalar, ScalarError> {
    if r.is_zero() {
        return Ok(CycloScalar::zero());
    }
    // sqrt(a/b) = sqrt(a b) / b
    let prod = r.numer() * r.denom();
    let prod = prod
        .to_u64()
        .filter(|&v| v <= SQRT_FACTOR_LIMIT)
        .ok_or(ScalarError::WitnessUnavailable)?;
    let mut outside = 1u64;
    let mut inside = CycloScalar::one();
    for (p, e) in factor_u64(prod) {
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            inside = &inside * &sqrt_prime(p);
        }
    }
    let scale = BigRational::new(BigInt::from(outside), r.denom().clone());
    Ok(inside.scale(&scale))
}

fn exact_rational_root(r: &BigRational, n: u32) -> Option<BigRational> {
    let num = r.numer().abs();
    let den = r.denom().clone();
    let a = num.nth_root(n);
    let b = den.nth_root(n);
    if num::pow(&a, n) == num && num::pow(&b, n) == den {
        Some(BigRational::new(a, b))
    } else {
        None
    }
}

mod num {
    use num_bigint::BigInt;
    use num_traits::One;

    pub(super) fn pow(b: &BigInt, e: u32) -> BigInt {
        let mut acc = BigInt::one();
        for _ in 0..e {
            acc *= b;
        }
        acc
    }
}

/// Splits `a` as `r * zeta` with `r` rational and `zeta` a root of unity, if possible.
fn rational_times_root(a: &CycloScalar) -> Option<(BigRational, RootOfUnity)> {
    let l = a.conductor();
    let n = if l.is_multiple_of(2) { l } else { 2 * l };
    (0..n).find_map(|k| {
        let z = RootOfUnity::new(n, k as i64);
        let r = (a * &z.inv().to_scalar()).to_rational()?;
        Some((r, z))
    })
}

/// Some `g` with `g^n = a`, found inside a cyclotomic field.
///
/// Succeeds when `a` is a rational multiple of a root of unity whose rational
/// part has an exact rational n-th root, or an exact (n/2)-th root followed
/// by a square root (square roots of rationals are always cyclotomic).
/// Everything else reports [`ScalarError::WitnessUnavailable`].
pub fn nth_root(a: &CycloScalar, n: u32) -> Result<CycloScalar, ScalarError> {
    assert!(n >= 1);
    if a.is_zero() {
        return Ok(CycloScalar::zero());
    }
    if n == 1 {
        return Ok(a.clone());
    }
    let (r, z) = rational_times_root(a).ok_or(ScalarError::WitnessUnavailable)?;
    // n-th root of the root-of-unity part
    let mut unit = RootOfUnity::new(z.order() * n, z.exponent() as i64);
    let mut mag = r.clone();
    if r.is_negative() {
        unit = unit * RootOfUnity::new(2 * n, 1);
        mag = -r;
    }
    let rational_part = match exact_rational_root(&mag, n) {
        Some(t) => CycloScalar::from_rational(t),
        None if n.is_multiple_of(2) => {
            let t = exact_rational_root(&mag, n / 2).ok_or(ScalarError::WitnessUnavailable)?;
            sqrt_nonneg_rational(&t)?
        }
        None => return Err(ScalarError::WitnessUnavailable),
    };
    let root = &rational_part * &unit.to_scalar();
    if root.pow(n as i64)? == *a {
        Ok(root)
    } else {
        Err(ScalarError::WitnessUnavailable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(l: u32, k: i64) -> CycloScalar {
        CycloScalar::make_root(l, k)
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_of(&CycloScalar::one()).unwrap(), Some(1));
        assert_eq!(order_of(&z(6, 3)).unwrap(), Some(2));
        assert_eq!(order_of(&CycloScalar::from_int(2)).unwrap(), None);
        assert!(matches!(
            order_of(&CycloScalar::zero()),
            Err(ScalarError::Zero)
        ));
        // 1 + zeta_5 is not a root of unity
        assert_eq!(order_of(&(&CycloScalar::one() + &z(5, 1))).unwrap(), None);
        // -zeta_5 has order 10 and lives in Q(zeta_5)
        assert_eq!(order_of(&-&z(5, 1)).unwrap(), Some(10));
    }

    #[test]
    fn primitive_root_examples() {
        assert!(is_primitive_pth_root(&z(6, 3), 2));
        assert!(is_primitive_pth_root(&z(6, 2), 3));
        assert!(is_primitive_pth_root(&CycloScalar::one(), 1));
        assert!(!is_primitive_pth_root(&CycloScalar::zero(), 1));
    }

    #[test]
    fn root_of_unity_canonical() {
        assert_eq!(RootOfUnity::new(6, 3), RootOfUnity::minus_one());
        assert_eq!(RootOfUnity::new(6, 0), RootOfUnity::one());
        assert_eq!(RootOfUnity::new(10, 4), RootOfUnity::new(5, 2));
        assert_eq!(
            RootOfUnity::new(5, 1) * RootOfUnity::new(5, 4),
            RootOfUnity::one()
        );
        assert_eq!(
            RootOfUnity::new(3, 1) * RootOfUnity::new(2, 1),
            RootOfUnity::new(6, 5)
        );
        let r = RootOfUnity::new(12, 5);
        assert_eq!(RootOfUnity::from_scalar(&r.to_scalar()), Some(r));
        assert_eq!(RootOfUnity::from_scalar(&CycloScalar::from_int(3)), None);
    }

    #[test]
    fn gauss_square_roots() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let s = sqrt_prime(p);
            assert_eq!(&s * &s, CycloScalar::from_int(p as i64), "sqrt({p})");
        }
    }

    #[test]
    fn nth_roots() {
        let two = CycloScalar::from_int(2);
        let r = nth_root(&two, 2).unwrap();
        assert_eq!(&r * &r, two);
        let m1 = CycloScalar::from_int(-1);
        assert_eq!(nth_root(&m1, 2).unwrap().pow(2).unwrap(), m1);
        let eight = CycloScalar::from_int(8);
        assert_eq!(nth_root(&eight, 3).unwrap(), two);
        assert!(matches!(
            nth_root(&two, 3),
            Err(ScalarError::WitnessUnavailable)
        ));
        let w = &CycloScalar::from_int(9) * &z(7, 2);
        assert_eq!(nth_root(&w, 2).unwrap().pow(2).unwrap(), w);
        let nonunit = &CycloScalar::from_int(2) + &z(5, 1);
        assert!(matches!(
            nth_root(&nonunit, 2),
            Err(ScalarError::WitnessUnavailable)
        ));
    }
}
