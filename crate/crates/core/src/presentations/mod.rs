//! Parameter records for the families `K`, `B`, `A(n,q)` and `C(n)`,
//! their validation, the conversion to `B`-form, and the build step that
//! produces a rewrite system together with the coalgebra table.

mod build;
mod schema;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::scalars::{is_primitive_pth_root, CycloScalar, Field, RootOfUnity, ScalarError};

pub use build::{corrupt_antipode, corrupt_commutation, Coalgebra, HopfAlgebra, SkewRule};
pub use schema::{ParamFile, ScalarJson, SCHEMA_FAMILIES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("presentation fails required conditions: {0}")]
    ConditionsFailed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Rewrite(#[from] crate::ncpoly::RewriteError),
}

/// General parameter set `(s, M, {n_i}, {p_i}, {q_i}, {alpha_i})`.
#[derive(Clone, Debug, PartialEq)]
pub struct KParams {
    pub s: usize,
    pub m: i64,
    pub n: Vec<i64>,
    pub p: Vec<u32>,
    pub q: Vec<CycloScalar>,
    pub alpha: Vec<CycloScalar>,
}

/// The coprime normal form `B(n, {p_i}, q, {alpha_i})`.
#[derive(Clone, Debug, PartialEq)]
pub struct BParams {
    pub n: i64,
    pub p: Vec<u32>,
    pub q: CycloScalar,
    pub alpha: Vec<CycloScalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ComparisonPresentation {
    /// `k<x^{+-1}, y | xy = q yx>`, `Delta(y) = y (x) 1 + x^n (x) y`.
    A { n: i64, q: CycloScalar },
    /// Grouplike `y`, skew primitive `x` with `xy = yx + y^n - y`.
    C { n: i64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum HopfPresentation {
    K(KParams),
    B(BParams),
    Comparison(ComparisonPresentation),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub description: &'static str,
    pub required: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub conditions: Vec<ConditionCheck>,
}

impl ValidationReport {
    pub fn get(&self, name: &str) -> Option<bool> {
        self.conditions
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.pass)
    }

    /// All required conditions pass.
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|c| !c.required || c.pass)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.conditions
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect()
    }

    pub fn failed_required(&self) -> Vec<&'static str> {
        self.conditions
            .iter()
            .filter(|c| c.required && !c.pass)
            .map(|c| c.name)
            .collect()
    }
}

pub const COND_RANK: &str = "rank_and_modulus";
pub const COND_PRODUCT: &str = "modulus_is_n_times_p";
pub const COND_NONZERO: &str = "q_nonzero";
pub const COND_PRIMITIVE: &str = "q_primitive";
pub const COND_COMPAT: &str = "q_compatible";
pub const COND_ALPHA: &str = "alpha_given";
pub const COND_COPRIME: &str = "p_pairwise_coprime";
pub const COND_DISTINCT: &str = "alpha_not_all_equal";
pub const COND_MINIMAL: &str = "p_at_least_two";

fn check(
    name: &'static str,
    description: &'static str,
    required: bool,
    pass: bool,
) -> ConditionCheck {
    ConditionCheck {
        name,
        description,
        required,
        pass,
    }
}

pub fn pairwise_coprime(p: &[u32]) -> bool {
    p.iter()
        .enumerate()
        .all(|(i, a)| p[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

fn alphas_not_all_equal(alpha: &[CycloScalar]) -> bool {
    alpha.iter().any(|a| *a != alpha[0])
}

impl KParams {
    pub fn new(
        m: i64,
        n: Vec<i64>,
        p: Vec<u32>,
        q: Vec<CycloScalar>,
        alpha: Vec<CycloScalar>,
    ) -> Self {
        KParams {
            s: p.len(),
            m,
            n,
            p,
            q,
            alpha,
        }
    }

    /// Fills in `n_i = M / p_i`; fails if some `p_i` does not divide `M`.
    pub fn from_modulus(
        m: i64,
        p: Vec<u32>,
        q: Vec<CycloScalar>,
        alpha: Vec<CycloScalar>,
    ) -> Result<Self, PresentationError> {
        let n = p
            .iter()
            .map(|&pi| {
                if pi == 0 || m % pi as i64 != 0 {
                    Err(PresentationError::Invalid(format!(
                        "p = {pi} does not divide M = {m}"
                    )))
                } else {
                    Ok(m / pi as i64)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(KParams::new(m, n, p, q, alpha))
    }

    fn lengths_ok(&self) -> bool {
        self.n.len() == self.s
            && self.p.len() == self.s
            && self.q.len() == self.s
            && self.alpha.len() == self.s
    }

    /// `q_{ij} = q_j^{n_i}`.
    pub fn q_ij(&self, i: usize, j: usize) -> CycloScalar {
        self.q[j].pow(self.n[i]).expect("validated q is nonzero")
    }

    /// `lambda_i = q_i^{n_i}`.
    pub fn lambda(&self, i: usize) -> CycloScalar {
        self.q[i].pow(self.n[i]).expect("validated q is nonzero")
    }

    /// Shifted parameters with `alpha_1 = 0`.
    pub fn normalized_alpha(&self) -> Vec<CycloScalar> {
        let a0 = self.alpha[0].clone();
        self.alpha.iter().map(|a| a.sub_ref(&a0)).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let shape = self.lengths_ok();
        let rank = self.s >= 2 && self.m >= 2;
        let product = shape
            && self
                .n
                .iter()
                .zip(&self.p)
                .all(|(&n, &p)| n > 0 && p > 0 && n * p as i64 == self.m);
        let nonzero = shape && self.q.iter().all(|q| !num_traits::Zero::is_zero(q));
        let primitive = product
            && nonzero
            && (0..self.s).all(|i| {
                is_primitive_pth_root(&self.q[i], self.p[i])
                    && is_primitive_pth_root(&self.lambda(i), self.p[i])
            });
        let compat = product
            && nonzero
            && (0..self.s).all(|i| {
                (i + 1..self.s).all(|j| {
                    self.q_ij(i, j)
                        .mul_ref(&self.q[i].pow(self.n[j]).unwrap())
                        .is_one_exact()
                })
            });
        let minimal = shape && self.p.iter().all(|&p| p >= 2);
        ValidationReport {
            conditions: vec![
                check(COND_RANK, "s >= 2 and M >= 2", true, rank),
                check(
                    COND_PRODUCT,
                    "n_i, p_i positive with M = n_i p_i",
                    true,
                    product,
                ),
                check(COND_NONZERO, "every q_i is nonzero", true, nonzero),
                check(
                    COND_PRIMITIVE,
                    "q_i and q_i^{n_i} are primitive p_i-th roots of unity",
                    true,
                    primitive,
                ),
                check(
                    COND_COMPAT,
                    "q_j^{n_i} = q_i^{-n_j} for i < j",
                    true,
                    compat,
                ),
                check(COND_ALPHA, "one alpha_i per generator", true, shape),
                check(
                    COND_COPRIME,
                    "gcd(p_i, p_j) = 1 for i != j",
                    false,
                    shape && pairwise_coprime(&self.p),
                ),
                check(
                    COND_DISTINCT,
                    "alpha_i != alpha_j for some i != j",
                    false,
                    shape && alphas_not_all_equal(&self.alpha),
                ),
                check(COND_MINIMAL, "p_i >= 2 for all i", true, minimal),
            ],
        }
    }

    /// Validation that also admits the degenerate rank `s = 1`.
    pub(crate) fn buildable(&self) -> Result<(), PresentationError> {
        let report = self.validate();
        let failed: Vec<_> = report
            .failed_required()
            .into_iter()
            .filter(|&c| !(c == COND_RANK && self.s == 1 && self.m >= 2))
            .collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(PresentationError::ConditionsFailed(failed.join(", ")))
        }
    }

    /// Roots `q_i` as exact roots of unity; `None` if some `q_i` is not one.
    pub fn q_roots(&self) -> Option<Vec<RootOfUnity>> {
        self.q.iter().map(RootOfUnity::from_scalar).collect()
    }
}

/// Result of the `B`-form search: the chosen parameters and every admissible exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct BFormResult {
    pub params: Option<BParams>,
    /// Exponents `k` with `q = zeta_l^k` satisfying `q^{m_i} = q_i`.
    pub candidates: Vec<u32>,
    /// `l = p_1 ... p_s`.
    pub ell: u32,
    /// Permutation applied: sorted position `t` holds original index `perm[t]`.
    pub permutation: Vec<usize>,
}

/// Searches `q = zeta_l^k` with `q^{m_i} = q_i`; requires pairwise coprime `p_i`.
pub fn to_b_form(params: &KParams) -> BFormResult {
    let mut perm: Vec<usize> = (0..params.s).collect();
    perm.sort_by_key(|&i| params.p[i]);
    let empty = |ell| BFormResult {
        params: None,
        candidates: Vec::new(),
        ell,
        permutation: perm.clone(),
    };
    if !params.lengths_ok() || !pairwise_coprime(&params.p) || params.p.iter().any(|&p| p < 2) {
        return empty(0);
    }
    let ell64: u64 = params.p.iter().map(|&p| p as u64).product();
    if ell64 > u32::MAX as u64 || params.m % ell64 as i64 != 0 {
        return empty(0);
    }
    let ell = ell64 as u32;
    let Some(roots) = params.q_roots() else {
        return empty(ell);
    };
    let candidates: Vec<u32> = (1..ell.max(2))
        .filter(|k| k.gcd(&ell) == 1 || ell == 1)
        .filter(|&k| {
            let q = RootOfUnity::new(ell, k as i64);
            (0..params.s).all(|i| q.pow((ell / params.p[i]) as i64) == roots[i])
        })
        .collect();
    let Some(&k) = candidates.first() else {
        return BFormResult {
            candidates,
            ..empty(ell)
        };
    };
    let b = BParams {
        n: params.m / ell as i64,
        p: perm.iter().map(|&i| params.p[i]).collect(),
        q: CycloScalar::make_root(ell, k as i64),
        alpha: perm.iter().map(|&i| params.alpha[i].clone()).collect(),
    };
    BFormResult {
        params: Some(b),
        candidates,
        ell,
        permutation: perm,
    }
}

impl BParams {
    pub fn new(n: i64, p: Vec<u32>, q: CycloScalar, alpha: Vec<CycloScalar>) -> Self {
        BParams { n, p, q, alpha }
    }

    pub fn ell(&self) -> u32 {
        self.p.iter().product()
    }

    pub fn validate(&self) -> Result<(), PresentationError> {
        let fail = |m: &str| Err(PresentationError::Invalid(m.to_string()));
        if self.p.is_empty() || self.alpha.len() != self.p.len() {
            return fail("p and alpha must be nonempty and of equal length");
        }
        if self.n < 1 {
            return fail("n must be positive");
        }
        if self.p[0] < 2 || self.p.windows(2).any(|w| w[0] >= w[1]) {
            return fail("p must satisfy 1 < p_1 < ... < p_s");
        }
        if !pairwise_coprime(&self.p) {
            return fail("p must be pairwise coprime");
        }
        if !is_primitive_pth_root(&self.q, self.ell()) {
            return fail("q must be a primitive l-th root of unity, l = p_1 ... p_s");
        }
        Ok(())
    }

    /// Expands to `K` parameters: `M = n l`, `n_i = M / p_i`, `q_i = q^{m_i}`.
    pub fn to_k(&self) -> KParams {
        let ell = self.ell() as i64;
        let m = self.n * ell;
        KParams::new(
            m,
            self.p.iter().map(|&p| m / p as i64).collect(),
            self.p.clone(),
            self.p
                .iter()
                .map(|&p| self.q.pow(ell / p as i64).expect("q nonzero"))
                .collect(),
            self.alpha.clone(),
        )
    }
}

impl HopfPresentation {
    /// `K` parameters for the `K`/`B` families.
    pub fn k_params(&self) -> Option<KParams> {
        match self {
            HopfPresentation::K(k) => Some(k.clone()),
            HopfPresentation::B(b) => Some(b.to_k()),
            HopfPresentation::Comparison(_) => None,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            HopfPresentation::K(_) => "K",
            HopfPresentation::B(_) => "B",
            HopfPresentation::Comparison(ComparisonPresentation::A { .. }) => "A",
            HopfPresentation::Comparison(ComparisonPresentation::C { .. }) => "C",
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            HopfPresentation::K(k) => k.validate(),
            HopfPresentation::B(b) => {
                let mut rep = b.to_k().validate();
                rep.conditions.insert(
                    0,
                    check(
                        "b_form",
                        "p increasing, pairwise coprime, q primitive l-th root",
                        true,
                        b.validate().is_ok(),
                    ),
                );
                rep
            }
            HopfPresentation::Comparison(ComparisonPresentation::A { q, .. }) => ValidationReport {
                conditions: vec![check(
                    COND_NONZERO,
                    "q is nonzero",
                    true,
                    !num_traits::Zero::is_zero(q),
                )],
            },
            HopfPresentation::Comparison(ComparisonPresentation::C { n }) => ValidationReport {
                conditions: vec![check("n_at_least_two", "n >= 2", true, *n >= 2)],
            },
        }
    }

    pub fn build(&self) -> Result<HopfAlgebra<CycloScalar>, PresentationError> {
        build::build(self)
    }

    /// Human-readable name, e.g. `B(1,{2,3},zeta(6,1),{0,1})`.
    pub fn name(&self) -> String {
        let list = |v: &[CycloScalar]| {
            v.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let ints = |v: &[u32]| {
            v.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            HopfPresentation::K(k) => format!(
                "K({{{}}},{{{}}},{{{}}},{})",
                ints(&k.p),
                list(&k.q),
                list(&k.alpha),
                k.m
            ),
            HopfPresentation::B(b) => format!(
                "B({},{{{}}},{},{{{}}})",
                b.n,
                ints(&b.p),
                b.q,
                list(&b.alpha)
            ),
            HopfPresentation::Comparison(ComparisonPresentation::A { n, q }) => {
                format!("A({n},{q})")
            }
            HopfPresentation::Comparison(ComparisonPresentation::C { n }) => format!("C({n})"),
        }
    }
}

impl From<KParams> for HopfPresentation {
    fn from(k: KParams) -> Self {
        HopfPresentation::K(k)
    }
}

impl From<BParams> for HopfPresentation {
    fn from(b: BParams) -> Self {
        HopfPresentation::B(b)
    }
}

impl From<ComparisonPresentation> for HopfPresentation {
    fn from(c: ComparisonPresentation) -> Self {
        HopfPresentation::Comparison(c)
    }
}
