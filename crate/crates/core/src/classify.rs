//! Decision procedures on parameter records: domain and `Ext` tests,
//! invariants, isomorphism witnesses and finiteness of global dimension.

use serde::Serialize;
use thiserror::Error;

use crate::hopfops::ext1_dimension;
use crate::presentations::{
    to_b_form, ComparisonPresentation, HopfPresentation, KParams, PresentationError,
};
use crate::scalars::{nth_root, CycloScalar, Field, ScalarError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("not a domain: {0}")]
    NotDomain(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn require_valid(params: &KParams) -> Result<(), ClassifyError> {
    let report = params.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(ClassifyError::Invalid(report.failed_required().join(", ")))
    }
}

/// `K` is a domain iff the `p_i` are pairwise coprime.
pub fn is_domain(params: &KParams) -> Result<bool, ClassifyError> {
    require_valid(params)?;
    Ok(crate::presentations::pairwise_coprime(&params.p))
}

/// `Ext^1(k, k) = 0` iff the `alpha_i` are not all equal.
pub fn ext_vanishes(params: &KParams) -> bool {
    params.alpha.iter().any(|a| *a != params.alpha[0])
}

/// The sorted multiset `{n_1, ..., n_s, M}`.
pub fn invariant_set(params: &KParams) -> Vec<i64> {
    let mut out = params.n.clone();
    out.push(params.m);
    out.sort_unstable();
    out
}

/// `gldim K < infinity` iff `s = 2` and `alpha_1 != alpha_2`.
pub fn gldim_finite(params: &KParams) -> bool {
    params.s == 2 && params.alpha[0] != params.alpha[1]
}

/// `A(m, r) = A(n, q)` iff `(m, r) = (n, q)` or `(m, r) = (-n, q^-1)`.
pub fn a_family_iso(m: i64, r: &CycloScalar, n: i64, q: &CycloScalar) -> bool {
    if m == n && r == q {
        return true;
    }
    m == -n && q.inverse().is_some_and(|qi| *r == qi)
}

/// Isomorphism data: `y_i -> c_i y_{pi(i)}` with `alpha'_{pi(i)} = c alpha_i`
/// up to a common shift and `c_i^{p_i} = c`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoWitness {
    /// `permutation[i]` is the index matched with `i`.
    pub permutation: Vec<usize>,
    pub c: CycloScalar,
    /// `c_i` with `c_i^{p_i} = c`, when all lie in a cyclotomic field.
    pub generator_scales: Option<Vec<CycloScalar>>,
    pub caveat: Option<String>,
}

fn permutations(s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..s).collect();
    heap(&mut cur, s, &mut out);
    out.sort();
    out
}

fn heap(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap(a, k - 1, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

fn scale_for(a: &KParams, b: &KParams, perm: &[usize]) -> Option<CycloScalar> {
    let d: Vec<CycloScalar> = a.alpha.iter().map(|x| x.sub_ref(&a.alpha[0])).collect();
    let d2: Vec<CycloScalar> = perm
        .iter()
        .map(|&j| b.alpha[j].sub_ref(&b.alpha[perm[0]]))
        .collect();
    let c = match d.iter().position(|x| !num_traits::Zero::is_zero(x)) {
        None => CycloScalar::from_int(1),
        Some(k) => d2[k].mul_ref(&d[k].inverse()?),
    };
    if num_traits::Zero::is_zero(&c) {
        return None;
    }
    d.iter()
        .zip(&d2)
        .all(|(x, y)| x.mul_ref(&c) == *y)
        .then_some(c)
}

/// Searches a permutation and a scale `c` matching the parameters of two domains.
pub fn iso_test(a: &KParams, b: &KParams) -> Result<Option<IsoWitness>, ClassifyError> {
    for p in [a, b] {
        if !is_domain(p)? {
            return Err(ClassifyError::NotDomain(format!("p = {:?}", p.p)));
        }
    }
    if a.s != b.s || a.m != b.m {
        return Ok(None);
    }
    for perm in permutations(a.s) {
        let matches = (0..a.s)
            .all(|i| a.p[i] == b.p[perm[i]] && a.q[i] == b.q[perm[i]] && a.n[i] == b.n[perm[i]]);
        if !matches {
            continue;
        }
        let Some(c) = scale_for(a, b, &perm) else {
            continue;
        };
        let scales: Result<Vec<_>, _> = a.p.iter().map(|&p| nth_root(&c, p)).collect();
        let (generator_scales, caveat) = match scales {
            Ok(v) => (Some(v), None),
            Err(ScalarError::WitnessUnavailable) => (
                None,
                Some(format!(
                    "some root c^(1/p_i) of c = {c} lies outside the cyclotomic coefficient field"
                )),
            ),
            Err(e) => return Err(ClassifyError::Invalid(e.to_string())),
        };
        return Ok(Some(IsoWitness {
            permutation: perm,
            c,
            generator_scales,
            caveat,
        }));
    }
    Ok(None)
}

/// Verdicts for one presentation; fields that do not apply to a family stay empty.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub family: &'static str,
    pub name: String,
    pub domain: Option<bool>,
    pub ext1: usize,
    pub ext_vanishes: Option<bool>,
    pub gldim_finite: Option<bool>,
    pub invariants: Option<Vec<i64>>,
    pub b_form: Option<String>,
}

pub fn classify(pres: &HopfPresentation) -> Result<ClassifyReport, ClassifyError> {
    let h = pres.build()?;
    let ext1 = ext1_dimension(&h);
    let mut report = ClassifyReport {
        family: pres.family(),
        name: pres.name(),
        domain: None,
        ext1,
        ext_vanishes: None,
        gldim_finite: None,
        invariants: None,
        b_form: None,
    };
    match pres {
        HopfPresentation::Comparison(
            ComparisonPresentation::A { .. } | ComparisonPresentation::C { .. },
        ) => {
            report.domain = Some(true);
        }
        _ => {
            let k = pres.k_params().expect("K/B family");
            require_valid(&k)?;
            report.domain = Some(is_domain(&k)?);
            report.ext_vanishes = Some(ext_vanishes(&k));
            report.gldim_finite = Some(gldim_finite(&k));
            report.invariants = Some(invariant_set(&k));
            report.b_form = to_b_form(&k).params.map(|b| HopfPresentation::B(b).name());
        }
    }
    Ok(report)
}
