use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{BParams, ComparisonPresentation, HopfPresentation, KParams, PresentationError};
use crate::scalars::CycloScalar;

pub const SCHEMA_FAMILIES: [&str; 4] = ["K", "B", "A", "C"];

/// A scalar in a parameter file: an integer, `{"L":l,"k":k}` for `zeta_l^k`,
/// or `{"L":l,"poly":[[num,den],...]}` for `sum_e (num/den) zeta_l^e`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Root {
        #[serde(rename = "L")]
        l: u32,
        k: i64,
    },
    Poly {
        #[serde(rename = "L")]
        l: u32,
        poly: Vec<(i64, i64)>,
    },
}

impl ScalarJson {
    pub fn to_scalar(&self) -> Result<CycloScalar, PresentationError> {
        match self {
            ScalarJson::Int(n) => Ok(CycloScalar::from_int(*n)),
            ScalarJson::Root { l, k } => {
                if *l == 0 {
                    return Err(PresentationError::Invalid(
                        "root of unity with L = 0".into(),
                    ));
                }
                Ok(CycloScalar::make_root(*l, *k))
            }
            ScalarJson::Poly { l, poly } => {
                if *l == 0 {
                    return Err(PresentationError::Invalid("scalar with L = 0".into()));
                }
                let coeffs = poly
                    .iter()
                    .map(|&(num, den)| {
                        if den == 0 {
                            Err(PresentationError::Invalid("zero denominator".into()))
                        } else {
                            Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(CycloScalar::from_coefficients(*l, coeffs))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    fn to_vec(&self) -> Vec<T> {
        match self {
            OneOrMany::One(t) => vec![t.clone()],
            OneOrMany::Many(v) => v.clone(),
        }
    }
}

/// The JSON parameter file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamFile {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<OneOrMany<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<OneOrMany<ScalarJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<ScalarJson>>,
}

fn missing(field: &str, family: &str) -> PresentationError {
    PresentationError::Invalid(format!("family {family} requires field \"{field}\""))
}

fn scalars(v: &[ScalarJson]) -> Result<Vec<CycloScalar>, PresentationError> {
    v.iter().map(ScalarJson::to_scalar).collect()
}

fn single<T: Clone>(v: &OneOrMany<T>, field: &str) -> Result<T, PresentationError> {
    match v.to_vec().as_slice() {
        [t] => Ok(t.clone()),
        _ => Err(PresentationError::Invalid(format!(
            "field \"{field}\" must be a single value"
        ))),
    }
}

impl ParamFile {
    pub fn to_presentation(&self) -> Result<HopfPresentation, PresentationError> {
        let fam = self.family.as_str();
        match fam {
            "K" => {
                let p = self.p.clone().ok_or_else(|| missing("p", fam))?;
                let m = self.m.ok_or_else(|| missing("M", fam))?;
                let q = scalars(&self.q.as_ref().ok_or_else(|| missing("q", fam))?.to_vec())?;
                let alpha = match &self.alpha {
                    Some(a) => scalars(a)?,
                    None => vec![CycloScalar::from_int(0); p.len()],
                };
                let params = match &self.n {
                    Some(n) => KParams::new(m, n.to_vec(), p, q, alpha),
                    None => KParams::from_modulus(m, p, q, alpha)?,
                };
                if let Some(s) = self.s {
                    if s != params.p.len() {
                        return Err(PresentationError::Invalid(format!(
                            "s = {s} but {} exponents given",
                            params.p.len()
                        )));
                    }
                }
                Ok(HopfPresentation::K(params))
            }
            "B" => {
                let p = self.p.clone().ok_or_else(|| missing("p", fam))?;
                let n = single(self.n.as_ref().ok_or_else(|| missing("n", fam))?, "n")?;
                let q =
                    single(self.q.as_ref().ok_or_else(|| missing("q", fam))?, "q")?.to_scalar()?;
                let alpha = match &self.alpha {
                    Some(a) => scalars(a)?,
                    None => vec![CycloScalar::from_int(0); p.len()],
                };
                let b = BParams::new(n, p, q, alpha);
                b.validate()?;
                Ok(HopfPresentation::B(b))
            }
            "A" => {
                let n = single(self.n.as_ref().ok_or_else(|| missing("n", fam))?, "n")?;
                let q =
                    single(self.q.as_ref().ok_or_else(|| missing("q", fam))?, "q")?.to_scalar()?;
                Ok(HopfPresentation::Comparison(ComparisonPresentation::A {
                    n,
                    q,
                }))
            }
            "C" => {
                let n = single(self.n.as_ref().ok_or_else(|| missing("n", fam))?, "n")?;
                if n < 2 {
                    return Err(PresentationError::Invalid("C(n) needs n >= 2".into()));
                }
                Ok(HopfPresentation::Comparison(ComparisonPresentation::C {
                    n,
                }))
            }
            other => Err(PresentationError::Invalid(format!(
                "unknown family \"{other}\", expected one of {}",
                SCHEMA_FAMILIES.join(", ")
            ))),
        }
    }
}
