//! Coproduct, counit and antipode on normal forms, verification of the Hopf
//! axioms, skew primitive spaces with their commutators, `Ext^1` by
//! linearization, and the zero-divisor search.

mod axioms;
mod ext1;
pub mod linalg;
mod primitives;
mod tensor;
mod zerodiv;

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use crate::ncpoly::{
    x_power_word, Budget, FreePoly, Generator, NCPoly, NFMonomial, RewriteError, RewriteOptions,
    Word,
};
use crate::presentations::HopfAlgebra;
use crate::scalars::{Field, ScalarError};

pub use axioms::{check_hopf_axioms, AxiomFailure, AxiomOptions, AxiomReport, DegreeMeasure};
pub use ext1::{ext1_dimension, linearized_relations};
pub use primitives::{
    skew_primitives, weight_commutator, CommutatorRecord, EigenSpace, PrimitiveOptions,
    PrimitiveSolver, PrimitiveSpaceReport, SkewPrimitiveRecord,
};
pub use tensor::{Tensor3, TensorPoly};
pub use zerodiv::{find_zero_divisors, ZeroDivisorOptions, ZeroDivisorSearch, ZeroDivisorWitness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HopfError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("element is not skew primitive: {0}")]
    NotSkewPrimitive(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Evaluation context for one presentation: caches products of normal
/// monomials by generators, coproducts and antipodes, and counts rewrite
/// steps against a shared budget.
pub struct HopfContext<'a, F> {
    pub h: &'a HopfAlgebra<F>,
    mul_cache: RefCell<HashMap<(NFMonomial, Generator), NCPoly<F>>>,
    delta_cache: RefCell<HashMap<NFMonomial, TensorPoly<F>>>,
    antipode_cache: RefCell<HashMap<NFMonomial, NCPoly<F>>>,
    budget: RefCell<Budget>,
}

impl<'a, F: Field> HopfContext<'a, F> {
    pub fn new(h: &'a HopfAlgebra<F>) -> Self {
        Self::with_budget(h, Budget::default())
    }

    pub fn with_budget(h: &'a HopfAlgebra<F>, budget: Budget) -> Self {
        HopfContext {
            h,
            mul_cache: RefCell::new(HashMap::new()),
            delta_cache: RefCell::new(HashMap::new()),
            antipode_cache: RefCell::new(HashMap::new()),
            budget: RefCell::new(budget),
        }
    }

    pub fn steps_used(&self) -> u64 {
        self.budget.borrow().used()
    }

    pub fn s(&self) -> usize {
        self.h.num_y()
    }

    pub fn normal_form(&self, p: &FreePoly<F>) -> Result<NCPoly<F>, HopfError> {
        let mut b = self.budget.borrow_mut();
        Ok(self
            .h
            .rs
            .normal_form_with(p, &RewriteOptions::default(), &mut b)?)
    }

    pub fn normal_form_word(&self, w: &[Generator]) -> Result<NCPoly<F>, HopfError> {
        self.normal_form(&FreePoly::word(w.to_vec()))
    }

    /// Normal form of `m * g`.
    pub fn mul_mono_gen(&self, m: &NFMonomial, g: Generator) -> Result<NCPoly<F>, HopfError> {
        let key = (m.clone(), g);
        if let Some(p) = self.mul_cache.borrow().get(&key) {
            return Ok(p.clone());
        }
        let mut w = m.to_word();
        w.push(g);
        let p = self.normal_form_word(&w)?;
        self.mul_cache.borrow_mut().insert(key, p.clone());
        Ok(p)
    }

    /// Normal form of `p * w` for a word `w`.
    pub fn mul_poly_word(&self, p: &NCPoly<F>, w: &[Generator]) -> Result<NCPoly<F>, HopfError> {
        let mut cur = p.clone();
        for &g in w {
            let mut next = NCPoly::zero();
            for (m, c) in cur.terms() {
                for (m2, d) in self.mul_mono_gen(m, g)?.terms() {
                    next.add_term(m2.clone(), &c.mul_ref(d));
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn mul(&self, a: &NCPoly<F>, b: &NCPoly<F>) -> Result<NCPoly<F>, HopfError> {
        let mut out = NCPoly::zero();
        for (m, c) in b.terms() {
            let prod = self.mul_poly_word(a, &m.to_word())?;
            for (m2, d) in prod.terms() {
                out.add_term(m2.clone(), &d.mul_ref(c));
            }
        }
        Ok(out)
    }

    /// `Delta` of a generator as `(left word, right word, coefficient)` terms.
    fn delta_generator(&self, g: Generator) -> Vec<(Word, Word)> {
        match g {
            Generator::X | Generator::XInv => vec![(vec![g], vec![g])],
            Generator::Y(i) => {
                let r = &self.h.coalgebra.skew[i as usize - 1];
                vec![
                    (vec![g], x_power_word(r.right)),
                    (x_power_word(r.left), vec![g]),
                ]
            }
        }
    }

    /// `t * Delta(g)` in `K (x) K`.
    fn tensor_mul_gen(&self, t: &TensorPoly<F>, g: Generator) -> Result<TensorPoly<F>, HopfError> {
        let dg = self.delta_generator(g);
        let mut out = TensorPoly::zero();
        for ((a, b), c) in t.terms() {
            for (u, v) in &dg {
                let left = self.mul_poly_word(&NCPoly::monomial(a.clone(), F::one()), u)?;
                let right = self.mul_poly_word(&NCPoly::monomial(b.clone(), F::one()), v)?;
                out.add_outer(&left, &right, c);
            }
        }
        Ok(out)
    }

    /// `Delta` of an arbitrary word, multiplicatively.
    pub fn coproduct_word(&self, w: &[Generator]) -> Result<TensorPoly<F>, HopfError> {
        let s = self.s();
        let mut t = TensorPoly::simple(NFMonomial::one(s), NFMonomial::one(s), F::one());
        for &g in w {
            t = self.tensor_mul_gen(&t, g)?;
        }
        Ok(t)
    }

    pub fn coproduct_mono(&self, m: &NFMonomial) -> Result<TensorPoly<F>, HopfError> {
        if let Some(t) = self.delta_cache.borrow().get(m) {
            return Ok(t.clone());
        }
        let t = match split_last(m) {
            None => TensorPoly::simple(m.clone(), m.clone(), F::one()),
            Some((_, Generator::X | Generator::XInv)) if m.is_grouplike() => {
                TensorPoly::simple(m.clone(), m.clone(), F::one())
            }
            Some((prefix, g)) => {
                let tp = self.coproduct_mono(&prefix)?;
                self.tensor_mul_gen(&tp, g)?
            }
        };
        self.delta_cache.borrow_mut().insert(m.clone(), t.clone());
        Ok(t)
    }

    pub fn coproduct(&self, p: &NCPoly<F>) -> Result<TensorPoly<F>, HopfError> {
        let mut out = TensorPoly::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.coproduct_mono(m)?, c);
        }
        Ok(out)
    }

    pub fn counit(&self, p: &NCPoly<F>) -> F {
        let mut out = F::zero();
        for (m, c) in p.terms() {
            if m.is_grouplike() {
                out.add_assign_ref(c);
            }
        }
        out
    }

    /// Counit of a word.
    pub fn counit_word(&self, w: &[Generator]) -> F {
        if w.iter().all(|g| g.is_grouplike()) {
            F::one()
        } else {
            F::zero()
        }
    }

    /// `S(g)` of a generator as a single scaled word.
    fn antipode_generator(&self, g: Generator) -> (Word, F) {
        match g {
            Generator::X => (vec![Generator::XInv], F::one()),
            Generator::XInv => (vec![Generator::X], F::one()),
            Generator::Y(i) => {
                let r = &self.h.coalgebra.skew[i as usize - 1];
                let mut w = x_power_word(-r.left);
                w.push(g);
                w.extend(x_power_word(-r.right));
                (w, r.antipode_scale.clone())
            }
        }
    }

    /// `S` of an arbitrary word, anti-multiplicatively.
    pub fn antipode_word(&self, w: &[Generator]) -> Result<NCPoly<F>, HopfError> {
        let mut acc = NCPoly::one(self.s());
        for &g in w.iter().rev() {
            let (sw, c) = self.antipode_generator(g);
            acc = self.mul_poly_word(&acc, &sw)?.scale(&c);
        }
        Ok(acc)
    }

    pub fn antipode_mono(&self, m: &NFMonomial) -> Result<NCPoly<F>, HopfError> {
        if let Some(p) = self.antipode_cache.borrow().get(m) {
            return Ok(p.clone());
        }
        let p = match split_first(m) {
            None => NCPoly::one(self.s()),
            Some((g, rest)) => {
                let (sw, c) = self.antipode_generator(g);
                let sr = self.antipode_mono(&rest)?;
                self.mul_poly_word(&sr, &sw)?.scale(&c)
            }
        };
        self.antipode_cache
            .borrow_mut()
            .insert(m.clone(), p.clone());
        Ok(p)
    }

    pub fn antipode(&self, p: &NCPoly<F>) -> Result<NCPoly<F>, HopfError> {
        let mut out = NCPoly::zero();
        for (m, c) in p.terms() {
            out = out.add(&self.antipode_mono(m)?.scale(c));
        }
        Ok(out)
    }

    /// `g^-1 y g` for `g = x^k`.
    pub fn conjugate_by_x_power(&self, y: &NCPoly<F>, k: i64) -> Result<NCPoly<F>, HopfError> {
        let mut out = NCPoly::zero();
        for (m, c) in y.terms() {
            let mut w = x_power_word(-k);
            w.extend(m.to_word());
            w.extend(x_power_word(k));
            out = out.add(&self.normal_form_word(&w)?.scale(c));
        }
        Ok(out)
    }
}

/// `m = prefix * g` with `prefix` again in normal form.
fn split_last(m: &NFMonomial) -> Option<(NFMonomial, Generator)> {
    let mut p = m.clone();
    if let Some(i) = p.w.iter().rposition(|&e| e > 0) {
        p.w[i] -= 1;
        return Some((p, Generator::Y(i as u8 + 1)));
    }
    match p.w0.signum() {
        1 => {
            p.w0 -= 1;
            Some((p, Generator::X))
        }
        -1 => {
            p.w0 += 1;
            Some((p, Generator::XInv))
        }
        _ => None,
    }
}

/// `m = g * rest` with `rest` again in normal form.
fn split_first(m: &NFMonomial) -> Option<(Generator, NFMonomial)> {
    let mut p = m.clone();
    match p.w0.signum() {
        1 => {
            p.w0 -= 1;
            return Some((Generator::X, p));
        }
        -1 => {
            p.w0 += 1;
            return Some((Generator::XInv, p));
        }
        _ => {}
    }
    let i = p.w.iter().position(|&e| e > 0)?;
    p.w[i] -= 1;
    Some((Generator::Y(i as u8 + 1), p))
}

/// One-shot coproduct.
pub fn coproduct<F: Field>(h: &HopfAlgebra<F>, p: &NCPoly<F>) -> Result<TensorPoly<F>, HopfError> {
    HopfContext::new(h).coproduct(p)
}

pub fn counit<F: Field>(h: &HopfAlgebra<F>, p: &NCPoly<F>) -> F {
    HopfContext::new(h).counit(p)
}

pub fn antipode<F: Field>(h: &HopfAlgebra<F>, p: &NCPoly<F>) -> Result<NCPoly<F>, HopfError> {
    HopfContext::new(h).antipode(p)
}

/// The `q`-binomial expansion of `Delta(y_i^w)`:
/// `sum_j [w choose j]_lambda x^{n_i (w - j)} y_i^j (x) y_i^{w - j}`, `lambda = q_i^{n_i}`,
/// normalized, for the `K`/`B` families.
pub fn qbinom_expansion<F: Field>(
    ctx: &HopfContext<'_, F>,
    i: usize,
    w: u32,
    lambda: &F,
) -> Result<TensorPoly<F>, HopfError> {
    let s = ctx.s();
    let ni = ctx.h.coalgebra.skew[i - 1].left;
    let mut out = TensorPoly::zero();
    for j in 0..=w {
        let c = crate::scalars::qbinom(w, j, lambda)?;
        let mut word = x_power_word(ni * (w - j) as i64);
        word.extend(std::iter::repeat_n(Generator::Y(i as u8), j as usize));
        let left = ctx.normal_form_word(&word)?;
        let right = ctx.normal_form_word(&NFMonomial::y_power(i, w - j, s).to_word())?;
        out.add_outer(&left, &right, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{BParams, HopfPresentation};
    use crate::scalars::{zeta, CycloScalar};

    fn b23() -> HopfAlgebra<CycloScalar> {
        HopfPresentation::from(BParams::new(
            1,
            vec![2, 3],
            zeta(6, 1),
            vec![0.into(), 1.into()],
        ))
        .build()
        .unwrap()
    }

    fn mono(w0: i64, w: &[u32]) -> NFMonomial {
        NFMonomial::new(w0, w.to_vec())
    }

    #[test]
    fn coproduct_examples() {
        let h = b23();
        let ctx = HopfContext::new(&h);
        let d = ctx.coproduct_mono(&mono(0, &[2, 0])).unwrap();
        let mut want = TensorPoly::zero();
        want.add_term(
            mono(0, &[2, 0]),
            mono(0, &[0, 0]),
            &CycloScalar::from_int(1),
        );
        want.add_term(
            mono(6, &[0, 0]),
            mono(0, &[2, 0]),
            &CycloScalar::from_int(1),
        );
        assert_eq!(d, want);
        let d = ctx.coproduct_mono(&mono(0, &[1, 1])).unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(ctx.coproduct_mono(&mono(5, &[0, 0])).unwrap().len(), 1);
    }

    #[test]
    fn antipode_examples() {
        let h = b23();
        let ctx = HopfContext::new(&h);
        assert_eq!(
            ctx.antipode_mono(&mono(1, &[0, 0])).unwrap(),
            NCPoly::monomial(mono(-1, &[0, 0]), 1.into())
        );
        assert_eq!(
            ctx.antipode_mono(&mono(0, &[1, 0])).unwrap(),
            NCPoly::monomial(mono(-3, &[1, 0]), (-1).into())
        );
        let s12 = ctx.antipode_mono(&mono(0, &[1, 1])).unwrap();
        let s2 = ctx.antipode_mono(&mono(0, &[0, 1])).unwrap();
        let s1 = ctx.antipode_mono(&mono(0, &[1, 0])).unwrap();
        assert_eq!(s12, ctx.mul(&s2, &s1).unwrap());
    }

    #[test]
    fn counit_linear() {
        let h = b23();
        let ctx = HopfContext::new(&h);
        let mut p = NCPoly::monomial(mono(0, &[0, 0]), CycloScalar::from_int(3));
        p.add_term(mono(0, &[1, 1]), &2.into());
        assert_eq!(ctx.counit(&p), CycloScalar::from_int(3));
    }
}
