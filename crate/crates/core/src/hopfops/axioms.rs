use serde::Serialize;

use super::{HopfContext, HopfError, Tensor3, TensorPoly};
use crate::ncpoly::{Budget, NCPoly, NFMonomial, DEFAULT_STEP_BUDGET};
use crate::presentations::HopfAlgebra;
use crate::scalars::Field;

/// How the degree of a monomial is measured for the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DegreeMeasure {
    /// `sum w_i * weight(y_i)` with the rewrite system's weights.
    Weighted,
    /// `sum w_i`.
    Total,
}

#[derive(Clone, Copy, Debug)]
pub struct AxiomOptions {
    pub cap: u32,
    /// Range of `w0` is `[-window, window]`.
    pub window: i64,
    pub measure: DegreeMeasure,
    /// Rewrite step budget for the sweep.
    pub budget: u64,
}

impl AxiomOptions {
    /// Degree cap with an `x`-window of twice the cap.
    pub fn with_cap(cap: u32) -> Self {
        AxiomOptions {
            cap,
            window: 2 * cap as i64,
            measure: DegreeMeasure::Weighted,
            budget: DEFAULT_STEP_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub at: String,
    pub defect: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub monomials_checked: usize,
    pub relations_checked: usize,
    pub coassociativity: bool,
    pub counit: bool,
    pub antipode: bool,
    pub relations: bool,
    pub failures: Vec<AxiomFailure>,
    pub cap: u32,
    pub window: i64,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Normal monomials of degree at most `cap` with `|w0| <= window`.
pub fn monomial_set<F: Field>(h: &HopfAlgebra<F>, opts: &AxiomOptions) -> Vec<NFMonomial> {
    let s = h.num_y();
    let weights: Vec<u64> = match opts.measure {
        DegreeMeasure::Weighted => h.rs.y_weights().to_vec(),
        DegreeMeasure::Total => vec![1; s],
    };
    let bounds: Vec<Option<u32>> = (1..=s).map(|i| h.rs.y_bound(i)).collect();
    let mut patterns = vec![Vec::new()];
    for i in 0..s {
        let mut next = Vec::new();
        for pat in &patterns {
            let used: u64 = pat.iter().zip(&weights).map(|(&e, &w)| e as u64 * w).sum();
            let mut e = 0u32;
            while used + e as u64 * weights[i] <= opts.cap as u64 && bounds[i].is_none_or(|b| e < b)
            {
                let mut p: Vec<u32> = pat.clone();
                p.push(e);
                next.push(p);
                e += 1;
            }
        }
        patterns = next;
    }
    let mut out = Vec::new();
    for w0 in -opts.window..=opts.window {
        for pat in &patterns {
            out.push(NFMonomial::new(w0, pat.clone()));
        }
    }
    out
}

fn delta_left<F: Field>(
    ctx: &HopfContext<'_, F>,
    t: &TensorPoly<F>,
) -> Result<Tensor3<F>, HopfError> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for ((a1, a2), d) in ctx.coproduct_mono(a)?.terms() {
            out.add_term(a1.clone(), a2.clone(), b.clone(), &c.mul_ref(d));
        }
    }
    Ok(out)
}

fn delta_right<F: Field>(
    ctx: &HopfContext<'_, F>,
    t: &TensorPoly<F>,
) -> Result<Tensor3<F>, HopfError> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for ((b1, b2), d) in ctx.coproduct_mono(b)?.terms() {
            out.add_term(a.clone(), b1.clone(), b2.clone(), &c.mul_ref(d));
        }
    }
    Ok(out)
}

/// `m(S (x) id)` and `m(id (x) S)` applied to a tensor.
fn antipode_sides<F: Field>(
    ctx: &HopfContext<'_, F>,
    t: &TensorPoly<F>,
) -> Result<(NCPoly<F>, NCPoly<F>), HopfError> {
    let mut left = NCPoly::zero();
    let mut right = NCPoly::zero();
    for ((a, b), c) in t.terms() {
        let sa = ctx.antipode_mono(a)?;
        left = left.add(&ctx.mul_poly_word(&sa, &b.to_word())?.scale(c));
        let sb = ctx.antipode_mono(b)?;
        right = right.add(
            &ctx.mul(&NCPoly::monomial(a.clone(), F::one()), &sb)?
                .scale(c),
        );
    }
    Ok((left, right))
}

/// Verifies the bialgebra and antipode axioms on every monomial of the sweep,
/// and that `Delta`, `epsilon`, `S` annihilate every defining relation.
pub fn check_hopf_axioms<F: Field>(
    h: &HopfAlgebra<F>,
    opts: &AxiomOptions,
) -> Result<AxiomReport, HopfError> {
    let ctx = HopfContext::with_budget(h, Budget::new(opts.budget));
    let s = h.num_y();
    let alphabet = &h.alphabet;
    let mut failures = Vec::new();
    let mut fail = |axiom: &'static str, at: String, defect: String| {
        failures.push(AxiomFailure { axiom, at, defect })
    };
    let monos = monomial_set(h, opts);
    for m in &monos {
        let at = m.display(alphabet).to_string();
        let d = ctx.coproduct_mono(m)?;
        let l = delta_left(&ctx, &d)?;
        let r = delta_right(&ctx, &d)?;
        if l != r {
            fail(
                "coassociativity",
                at.clone(),
                format!("{} vs {} terms", l.len(), r.len()),
            );
        }
        let mut el = NCPoly::zero();
        let mut er = NCPoly::zero();
        for ((a, b), c) in d.terms() {
            if a.is_grouplike() {
                el.add_term(b.clone(), c);
            }
            if b.is_grouplike() {
                er.add_term(a.clone(), c);
            }
        }
        let me = NCPoly::monomial(m.clone(), F::one());
        if el != me || er != me {
            fail("counit", at.clone(), el.sub(&me).display(alphabet));
        }
        let unit = NCPoly::one(s).scale(&ctx.counit(&me));
        let (sl, sr) = antipode_sides(&ctx, &d)?;
        if sl != unit {
            fail(
                "antipode",
                at.clone(),
                format!("m(S(x)id) - ue = {}", sl.sub(&unit).display(alphabet)),
            );
        }
        if sr != unit {
            fail(
                "antipode",
                at.clone(),
                format!("m(id(x)S) - ue = {}", sr.sub(&unit).display(alphabet)),
            );
        }
    }
    let rules = h.rs.rules();
    for rule in rules {
        let at = rule.label.clone();
        let mut dlhs = ctx.coproduct_word(&rule.lhs)?;
        let mut elhs = ctx.counit_word(&rule.lhs);
        let mut slhs = ctx.antipode_word(&rule.lhs)?;
        for (w, c) in rule.rhs.terms() {
            let neg = c.neg_ref();
            dlhs.add_scaled(&ctx.coproduct_word(w)?, &neg);
            elhs.add_assign_ref(&ctx.counit_word(w).mul_ref(&neg));
            slhs = slhs.add(&ctx.antipode_word(w)?.scale(&neg));
        }
        if !dlhs.is_zero() {
            fail("relation_coproduct", at.clone(), dlhs.display(alphabet));
        }
        if !elhs.is_zero() {
            fail("relation_counit", at.clone(), elhs.to_string());
        }
        if !slhs.is_zero() {
            fail("relation_antipode", at.clone(), slhs.display(alphabet));
        }
    }
    let has = |name: &str| failures.iter().any(|f| f.axiom.starts_with(name));
    Ok(AxiomReport {
        monomials_checked: monos.len(),
        relations_checked: rules.len(),
        coassociativity: !has("coassociativity"),
        counit: !has("counit"),
        antipode: !has("antipode"),
        relations: !has("relation"),
        failures,
        cap: opts.cap,
        window: opts.window,
    })
}
