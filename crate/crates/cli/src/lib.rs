//! Front end for `hopfgk`: parameter files, expressions and JSON reports.

pub mod expr;

use std::path::Path;

use hopfgk::classify::{classify, iso_test, ClassifyError};
use hopfgk::heckenberger::{
    infer_epsilon, lemma41_case, prop42_case, remark43_finite, supplementary_type, BraidingMatrix,
    DiagonalDatum,
};
use hopfgk::hopfops::{
    check_hopf_axioms, ext1_dimension, find_zero_divisors, linearized_relations, AxiomOptions,
    DegreeMeasure, HopfContext, HopfError, PrimitiveOptions, PrimitiveSolver, ZeroDivisorOptions,
};
use hopfgk::ncpoly::{certify_confluence_with, AmbiguityStatus, Budget, NCPoly};
use hopfgk::presentations::{
    corrupt_commutation, HopfAlgebra, HopfPresentation, ParamFile, ScalarJson,
};
use hopfgk::scalars::{CycloScalar, ScalarError};
use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use expr::{parse_expression, Expr, ParseError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// A finished report and whether its verdict is negative.
pub struct Outcome {
    pub report: Value,
    pub negative: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.negative)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Collects the inputs of one invocation for the report digest.
pub struct Invocation {
    command: &'static str,
    hasher: Sha256,
}

impl Invocation {
    pub fn new(command: &'static str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        Invocation { command, hasher }
    }

    fn absorb(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        self.absorb(text.as_bytes());
        Ok(text)
    }

    pub fn arg(&mut self, a: &str) {
        self.absorb(a.as_bytes());
    }

    fn finish(self, result: Value, verdict: &str, negative: bool) -> Outcome {
        let digest = hex::encode(self.hasher.finalize());
        Outcome {
            report: json!({
                "schema_version": SCHEMA_VERSION,
                "command": self.command,
                "input_digest": digest,
                "verdict": verdict,
                "result": result,
            }),
            negative,
        }
    }
}

pub fn load_presentation(text: &str) -> Result<HopfPresentation, CliError> {
    let file: ParamFile =
        serde_json::from_str(text).map_err(|e| input(format!("parameter file: {e}")))?;
    file.to_presentation().map_err(input)
}

fn build(pres: &HopfPresentation) -> Result<HopfAlgebra<CycloScalar>, CliError> {
    pres.build().map_err(input)
}

fn hopf_err(e: HopfError) -> CliError {
    CliError::Compute(e.to_string())
}

fn poly_json(p: &NCPoly<CycloScalar>, h: &HopfAlgebra<CycloScalar>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!([m.display(&h.alphabet).to_string(), c.to_string()]))
        .collect();
    json!({ "display": p.display(&h.alphabet), "terms": terms })
}

pub fn validate(inv: Invocation, text: &str) -> Result<Outcome, CliError> {
    let file: ParamFile =
        serde_json::from_str(text).map_err(|e| input(format!("parameter file: {e}")))?;
    let pres = match file.to_presentation() {
        Ok(p) => p,
        Err(e) => {
            let result = json!({ "valid": false, "error": e.to_string(), "conditions": [] });
            return Ok(inv.finish(result, "invalid", true));
        }
    };
    let report = pres.validate();
    let conditions: Vec<Value> = report
        .conditions
        .iter()
        .map(|c| json!({ "name": c.name, "description": c.description, "required": c.required, "pass": c.pass }))
        .collect();
    let valid = report.is_valid();
    let result = json!({ "valid": valid, "name": pres.name(), "family": pres.family(), "conditions": conditions });
    Ok(inv.finish(result, if valid { "valid" } else { "invalid" }, !valid))
}

pub fn normal_form(
    inv: Invocation,
    text: &str,
    src: &str,
    budget: u64,
) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let h = build(&pres)?;
    let e = parse_expression(src, &h.alphabet).map_err(input)?;
    let mut b = Budget::new(budget);
    let nf =
        h.rs.normal_form_with(&e.to_free(), &Default::default(), &mut b)
            .map_err(|e| CliError::Compute(e.to_string()))?;
    let result = json!({ "name": h.name, "input": src, "normal_form": poly_json(&nf, &h), "steps": b.used() });
    Ok(inv.finish(result, "ok", false))
}

pub fn pbw_check(
    inv: Invocation,
    text: &str,
    corrupt: bool,
    budget: u64,
) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let h = if corrupt {
        corrupt_commutation(&pres).map_err(input)?
    } else {
        build(&pres)?
    };
    let report = certify_confluence_with(&h.rs, &h.alphabet, Budget::new(budget))
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let unresolved: Vec<Value> = report
        .results
        .iter()
        .filter_map(|r| match &r.status {
            AmbiguityStatus::Resolved => None,
            AmbiguityStatus::Unresolved(d) => Some(json!({ "word": r.word_display, "rules": [r.labels.0, r.labels.1], "difference": d })),
        })
        .collect();
    let rules: Vec<&str> = h.rs.rules().iter().map(|r| r.label.as_str()).collect();
    let ok = report.is_confluent();
    let result = json!({
        "name": h.name,
        "rules": rules,
        "ambiguities": report.results.len(),
        "resolved": report.resolved_count(),
        "unresolved": unresolved,
        "confluent": ok,
        "steps": report.steps,
    });
    Ok(inv.finish(result, if ok { "confluent" } else { "not-confluent" }, !ok))
}

pub fn hopf_check(
    inv: Invocation,
    text: &str,
    cap: u32,
    window: Option<i64>,
    total_degree: bool,
    budget: u64,
) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let h = build(&pres)?;
    let mut opts = AxiomOptions::with_cap(cap);
    if let Some(w) = window {
        opts.window = w;
    }
    if total_degree {
        opts.measure = DegreeMeasure::Total;
    }
    opts.budget = budget;
    let r = check_hopf_axioms(&h, &opts).map_err(hopf_err)?;
    let ok = r.all_pass();
    let mut result = serde_json::to_value(&r).expect("serializable");
    result["name"] = json!(h.name);
    result["measure"] = json!(if total_degree { "total" } else { "weighted" });
    Ok(inv.finish(result, if ok { "pass" } else { "fail" }, !ok))
}

pub fn primitives(
    inv: Invocation,
    text: &str,
    weight: i64,
    cap: u32,
    window: Option<i64>,
    budget: u64,
) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let h = build(&pres)?;
    let opts = PrimitiveOptions {
        cap,
        window,
        budget,
    };
    let r = PrimitiveSolver::new(&h, &opts)
        .and_then(|s| s.solve(weight))
        .map_err(hopf_err)?;
    let basis: Vec<Value> = r.basis.iter().map(|p| poly_json(p, &h)).collect();
    let eigen: Vec<Value> = r
        .eigenspaces
        .iter()
        .map(|e| json!({ "lambda": e.lambda.to_string(), "dim_level1": e.dim_level1, "dim_generalized": e.dim_generalized }))
        .collect();
    let records: Vec<Value> = r
        .records
        .iter()
        .map(|s| {
            json!({
                "element": poly_json(&s.element, &h),
                "weight": format!("x^{}", s.weight_exponent),
                "commutator": s.commutator.to_string(),
                "level": s.level,
                "major": s.is_major,
            })
        })
        .collect();
    let result = json!({
        "name": h.name,
        "weight_exponent": r.weight_exponent,
        "cap": r.cap,
        "window": r.window,
        "ansatz_size": r.ansatz_size,
        "dim_p": r.dim_p,
        "dim_quotient": r.dim_quotient,
        "basis": basis,
        "eigenspaces": eigen,
        "records": records,
        "unresolved_dim": r.unresolved_dim,
        "closed_under_conjugation": r.closed_under_conjugation,
    });
    Ok(inv.finish(result, "ok", false))
}

pub fn ext1(inv: Invocation, text: &str) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let h = build(&pres)?;
    let rows: Vec<Value> = linearized_relations(&h)
        .iter()
        .zip(h.rs.rules())
        .map(|(row, rule)| {
            let coords: Vec<Value> = row.iter().map(|(k, c)| json!([k, c.to_string()])).collect();
            json!({ "rule": rule.label, "linear_part": coords })
        })
        .collect();
    let dim = ext1_dimension(&h);
    let result = json!({ "name": h.name, "dimension": dim, "coordinates": "t, t', y1, ..., ys", "rows": rows });
    Ok(inv.finish(result, "ok", false))
}

fn classify_err(e: ClassifyError) -> CliError {
    input(e)
}

pub fn classify_cmd(inv: Invocation, text: &str) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let r = classify(&pres).map_err(classify_err)?;
    Ok(inv.finish(serde_json::to_value(&r).expect("serializable"), "ok", false))
}

pub fn iso(inv: Invocation, a: &str, b: &str) -> Result<Outcome, CliError> {
    let pa = load_presentation(a)?;
    let pb = load_presentation(b)?;
    let (Some(ka), Some(kb)) = (pa.k_params(), pb.k_params()) else {
        return Err(input("iso compares presentations of the K/B families"));
    };
    let w = iso_test(&ka, &kb).map_err(classify_err)?;
    let found = w.is_some();
    let result = json!({ "a": pa.name(), "b": pb.name(), "isomorphic": found, "witness": w });
    Ok(inv.finish(
        result,
        if found {
            "isomorphic"
        } else {
            "not-isomorphic"
        },
        !found,
    ))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NicholsEntry {
    Datum {
        n: [u32; 2],
        q: [ScalarJson; 2],
        #[serde(default)]
        epsilon: Option<u32>,
    },
    Matrix {
        matrix: [[ScalarJson; 2]; 2],
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NicholsInput {
    One(NicholsEntry),
    Many(Vec<NicholsEntry>),
}

fn nichols_entry(e: &NicholsEntry) -> Result<Value, CliError> {
    let sc = |s: &ScalarJson| s.to_scalar().map_err(input);
    match e {
        NicholsEntry::Matrix { matrix } => {
            let m = [
                [&sc(&matrix[0][0])?, &sc(&matrix[0][1])?],
                [&sc(&matrix[1][0])?, &sc(&matrix[1][1])?],
            ];
            let q = BraidingMatrix::from_scalars(m).map_err(input)?;
            Ok(json!({ "lemma41": lemma41_case(&q) }))
        }
        NicholsEntry::Datum { n, q, epsilon } => {
            let d =
                DiagonalDatum::from_scalars(n[0], n[1], &sc(&q[0])?, &sc(&q[1])?).map_err(input)?;
            let eps = epsilon.or_else(|| infer_epsilon(&d));
            let prop42 = eps.map(|e| {
                let v = prop42_case(&d, e);
                json!({ "epsilon": e, "case": v.case, "swapped": v.swapped })
            });
            Ok(json!({
                "lemma41": lemma41_case(&d.braiding()),
                "prop42": prop42,
                "supplementary": supplementary_type(&d),
                "remark43_finite": remark43_finite(&d),
            }))
        }
    }
}

pub fn nichols(inv: Invocation, text: &str) -> Result<Outcome, CliError> {
    let parsed: NicholsInput =
        serde_json::from_str(text).map_err(|e| input(format!("nichols input: {e}")))?;
    let result = match parsed {
        NicholsInput::One(e) => nichols_entry(&e)?,
        NicholsInput::Many(v) => {
            Value::Array(v.iter().map(nichols_entry).collect::<Result<_, _>>()?)
        }
    };
    Ok(inv.finish(result, "ok", false))
}

pub fn zerodiv(inv: Invocation, text: &str, cap: u32, budget: u64) -> Result<Outcome, CliError> {
    let pres = load_presentation(text)?;
    let h = build(&pres)?;
    let opts = ZeroDivisorOptions { cap, budget };
    match find_zero_divisors(&h, &opts) {
        Ok(r) => {
            let witness = r.witness.as_ref().map(|w| {
                let ctx = HopfContext::new(&h);
                let verified = ctx.mul(&w.a, &w.b).map(|p| p.is_zero()).unwrap_or(false);
                json!({ "a": poly_json(&w.a, &h), "b": poly_json(&w.b, &h), "seed": w.seed, "product_is_zero": verified })
            });
            let verdict = if witness.is_some() {
                "zero-divisor"
            } else {
                "none-found"
            };
            let result = json!({
                "name": h.name,
                "cap": cap,
                "witness": witness,
                "seeds_tried": r.seeds_tried,
                "steps": r.steps,
                "budget_exhausted": r.budget_exhausted,
            });
            Ok(inv.finish(result, verdict, false))
        }
        Err(HopfError::Scalar(ScalarError::WitnessUnavailable)) => {
            let result = json!({ "name": h.name, "cap": cap, "witness": null, "error": "witness scalar outside the cyclotomic coefficient field" });
            Ok(inv.finish(result, "witness-unavailable", true))
        }
        Err(e) => Err(hopf_err(e)),
    }
}
