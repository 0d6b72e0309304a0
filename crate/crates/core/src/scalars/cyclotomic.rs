//! Exact arithmetic in cyclotomic fields `Q(zeta_L)`.
//!
//! An element is stored as a rational polynomial in `zeta_L` of degree below
//! `phi(L)`, reduced modulo the cyclotomic polynomial `Phi_L`. Elements of
//! different conductors are lifted to the lcm of the conductors before they
//! are combined.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{format_rational, Field};
use super::ScalarError;

/// Default conductor bound for the eagerly built table of cyclotomic polynomials.
pub const DEFAULT_CONDUCTOR_BOUND: u32 = 256;

type PolyTable = RwLock<HashMap<u32, Arc<Vec<i64>>>>;

fn table() -> &'static PolyTable {
    static TABLE: OnceLock<PolyTable> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Fills the cyclotomic-polynomial cache for every conductor up to `bound`.
///
/// Conductors above the bound are still supported; their polynomials are
/// computed on first use.
pub fn precompute_cyclotomic_table(bound: u32) {
    for l in 1..=bound {
        cyclotomic_polynomial(l);
    }
}

/// Integer coefficients of `Phi_L`, lowest degree first.
///
/// Computed by dividing `x^L - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(l: u32) -> Arc<Vec<i64>> {
    assert!(l >= 1, "conductor must be positive");
    if let Some(p) = table().read().expect("cyclotomic table poisoned").get(&l) {
        return p.clone();
    }
    // x^L - 1
    let mut num = vec![0i64; l as usize + 1];
    num[0] = -1;
    num[l as usize] = 1;
    for d in 1..l {
        if l.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_monic_division(&num, &div);
        }
    }
    let poly = Arc::new(num);
    table()
        .write()
        .expect("cyclotomic table poisoned")
        .insert(l, poly.clone());
    poly
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (k, &dk) in den.iter().enumerate() {
                rem[i + k] -= c * dk;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An exact element of `Q(zeta_L)`.
#[derive(Clone)]
pub struct CycloScalar {
    conductor: u32,
    // coefficient of zeta_L^e at index e; no trailing zeros, so zero is empty
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn from_rational(r: BigRational) -> Self {
        let mut s = CycloScalar {
            conductor: 1,
            coeffs: vec![r],
        };
        s.normalize();
        s
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_rational(BigRational::new(
            num.into(),
            den.into(),
        )))
    }

    /// `zeta_L^k` in canonical form; `make_root(L, 0) == 1`.
    pub fn make_root(l: u32, k: i64) -> Self {
        assert!(l >= 1, "conductor must be positive");
        let e = k.rem_euclid(l as i64) as u32;
        let g = l.gcd(&e);
        let (l, e) = if e == 0 { (1, 0) } else { (l / g, e / g) };
        let mut dense = vec![BigRational::zero(); e as usize + 1];
        dense[e as usize] = BigRational::one();
        Self::from_dense(l, dense)
    }

    /// Builds `sum_e coeffs[e] * zeta_L^e`, reducing modulo `Phi_L`.
    pub fn from_coefficients(l: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(l >= 1, "conductor must be positive");
        Self::from_dense(l, coeffs)
    }

    fn from_dense(l: u32, dense: Vec<BigRational>) -> Self {
        let coeffs = reduce_mod_phi(dense, l);
        let mut s = CycloScalar {
            conductor: l,
            coeffs,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.len() <= 1 {
            self.conductor = 1;
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients with respect to `1, zeta_L, ..., zeta_L^{phi(L)-1}`, trailing zeros dropped.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.is_empty() {
            Some(BigRational::zero())
        } else if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Dense coefficient vector of length `phi(target)` after embedding into `Q(zeta_target)`.
    fn lifted(&self, target: u32) -> Vec<BigRational> {
        debug_assert_eq!(target % self.conductor, 0);
        let phi = euler_phi(target) as usize;
        if self.conductor == target {
            let mut v = self.coeffs.clone();
            v.resize(phi, BigRational::zero());
            return v;
        }
        let step = (target / self.conductor) as usize;
        let top = if self.coeffs.is_empty() {
            0
        } else {
            (self.coeffs.len() - 1) * step
        };
        let mut dense = vec![BigRational::zero(); top.max(phi) + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[e * step] = c.clone();
            }
        }
        let mut v = reduce_mod_phi(dense, target);
        v.resize(phi, BigRational::zero());
        v
    }

    fn common_conductor(&self, other: &Self) -> u32 {
        self.conductor.lcm(&other.conductor)
    }

    /// Re-expresses this element over the conductor `target` (a multiple of the current one).
    pub fn embed(&self, target: u32) -> Self {
        assert_eq!(
            target % self.conductor,
            0,
            "target conductor must be a multiple"
        );
        let mut s = CycloScalar {
            conductor: target,
            coeffs: self.lifted(target),
        };
        s.normalize();
        s
    }

    /// Galois action `zeta_L -> zeta_L^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: u32) -> Self {
        let l = self.conductor;
        if l == 1 {
            return self.clone();
        }
        debug_assert_eq!(k.gcd(&l), 1);
        let mut dense = vec![BigRational::zero(); l as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let t = ((e as u64 * k as u64) % l as u64) as usize;
                dense[t] += c;
            }
        }
        Self::from_dense(l, dense)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // a^{-1} = prod_{sigma != id} sigma(a) / N(a)
        let l = self.conductor;
        let mut conj = CycloScalar::one();
        for k in 2..l {
            if k.gcd(&l) == 1 {
                conj = &conj * &self.galois(k);
            }
        }
        let norm = (&conj * self)
            .to_rational()
            .expect("field norm of a cyclotomic element is rational");
        Ok(conj.scale(&norm.recip()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycloScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        self.pow_i64(e).ok_or(ScalarError::DivisionByZero)
    }
}

fn reduce_mod_phi(mut dense: Vec<BigRational>, l: u32) -> Vec<BigRational> {
    let phi_poly = cyclotomic_polynomial(l);
    let deg = phi_poly.len() - 1;
    if dense.len() > deg {
        for d in (deg..dense.len()).rev() {
            if dense[d].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[d]);
            for (k, &pk) in phi_poly.iter().enumerate().take(deg) {
                if pk != 0 {
                    dense[d - deg + k] -= &c * BigRational::from_integer(BigInt::from(pk));
                }
            }
        }
        dense.truncate(deg);
    }
    while dense.last().is_some_and(|c| c.is_zero()) {
        dense.pop();
    }
    dense
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() != other.is_rational() {
            // a non-rational normalized element never equals a rational one
            return false;
        }
        let l = self.common_conductor(other);
        self.lifted(l) == other.lifted(l)
    }
}

impl Eq for CycloScalar {}

impl Zero for CycloScalar {
    fn zero() -> Self {
        CycloScalar {
            conductor: 1,
            coeffs: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CycloScalar {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let l = self.common_conductor(rhs);
        let mut a = self.lifted(l);
        let b = rhs.lifted(l);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        let mut s = CycloScalar {
            conductor: l,
            coeffs: a,
        };
        s.normalize();
        s
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        if self.is_zero() || rhs.is_zero() {
            return CycloScalar::zero();
        }
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        let l = self.common_conductor(rhs);
        let a = self.lifted(l);
        let b = rhs.lifted(l);
        let mut prod = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloScalar::from_dense(l, prod)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

impl Field for CycloScalar {
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
        self.inv().ok()
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn as_rational(&self) -> Option<BigRational> {
        self.to_rational()
    }
    fn root_order(&self) -> Option<u32> {
        super::order_of(self).ok().flatten()
    }
}

impl From<i64> for CycloScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for CycloScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                let g = (self.conductor as usize).gcd(&e);
                let root = format!("zeta({},{})", self.conductor as usize / g, e / g);
                if mag.is_one() {
                    write!(f, "{root}")?;
                } else {
                    write!(f, "{}*{root}", format_rational(&mag))?;
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for CycloScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(l: u32, k: i64) -> CycloScalar {
        CycloScalar::make_root(l, k)
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for l in 1..=60 {
            assert_eq!(cyclotomic_polynomial(l).len() as u32 - 1, euler_phi(l));
        }
    }

    #[test]
    fn make_root_examples() {
        assert_eq!(z(1, 0), CycloScalar::one());
        assert_eq!(z(2, 1), CycloScalar::from_int(-1));
        assert_eq!(z(6, 3), CycloScalar::from_int(-1));
        assert!(z(6, 3).is_rational());
    }

    #[test]
    fn field_examples() {
        assert_eq!(&z(3, 1) * &z(3, 2), CycloScalar::one());
        let s = &(&CycloScalar::one() + &z(3, 1)) + &z(3, 2);
        assert!(s.is_zero());
        assert_eq!(
            CycloScalar::from_int(-1).inv().unwrap(),
            CycloScalar::from_int(-1)
        );
        assert!(matches!(
            CycloScalar::zero().inv(),
            Err(ScalarError::DivisionByZero)
        ));
    }

    #[test]
    fn mixed_conductors_compare_by_lifting() {
        assert_eq!(z(6, 2), z(3, 1));
        // zeta_6 computed in Q(zeta_12): zeta_12^2
        let a = &z(12, 1) * &z(12, 1);
        assert_eq!(a, z(6, 1));
        assert_ne!(z(5, 1), z(5, 2));
    }

    #[test]
    fn inverse_of_non_unit_element() {
        // 2 + zeta_5 has norm 31
        let a = &CycloScalar::from_int(2) + &z(5, 1);
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, CycloScalar::one());
    }

    #[test]
    fn display_round_shape() {
        assert_eq!(z(6, 1).to_string(), "zeta(6,1)");
        assert_eq!(
            CycloScalar::from_fraction(-3, 6).unwrap().to_string(),
            "-1/2"
        );
        let s = &CycloScalar::from_int(2) - &z(5, 2).scale(&BigRational::new(3.into(), 2.into()));
        assert_eq!(s.to_string(), "2 - 3/2*zeta(5,2)");
    }
}
