use std::collections::BTreeMap;

use thiserror::Error;

use super::poly::{FreePoly, NCPoly, NFMonomial};
use super::{Alphabet, Generator, Word};
use crate::scalars::Field;

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rewrite step budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("rule {0} is not oriented: its right-hand side does not sit below its left-hand side")]
    Unoriented(String),
    #[error("rule {0} has an empty left-hand side")]
    EmptyLhs(String),
    #[error("generator y{0} is outside the alphabet")]
    UnknownGenerator(u8),
    #[error("irreducible word is not an ordered PBW monomial: {0}")]
    NotPbwShaped(String),
    #[error("rewrite step did not decrease the monomial order at {0}")]
    OrderViolation(String),
    #[error("operands belong to a different presentation")]
    Mismatch,
}

/// One oriented relation `lhs -> rhs`.
#[derive(Clone, Debug)]
pub struct Rule<F> {
    pub lhs: Word,
    pub rhs: FreePoly<F>,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Leftmost redex, shortest left-hand side first.
    #[default]
    LeftmostInnermost,
    /// Rightmost redex, longest left-hand side first.
    RightmostOutermost,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RewriteOptions {
    pub strategy: Strategy,
    /// Check that every single step strictly decreases the monomial order.
    pub check_order: bool,
}

/// Step counter shared across a sequence of rewriting calls.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn spend(&mut self) -> Result<(), RewriteError> {
        if self.used >= self.limit {
            return Err(RewriteError::BudgetExhausted(self.limit));
        }
        self.used += 1;
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_STEP_BUDGET)
    }
}

/// Sort key of the monomial order: weighted degree (`x^{+-1}` weigh 0), then
/// the number of `x^{+-1}` letters, then left-to-right lex with
/// `x^-1 < x < y_1 < ... < y_s`.
///
/// The order is a well-order compatible with concatenation: two words with
/// equal weight and `x`-count never stand in a proper-prefix relation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct OrderKey {
    pub weight: u64,
    pub x_count: u32,
    pub word: Word,
}

/// A finite rewriting system on the alphabet `x^{+-1}, y_1..y_s`.
#[derive(Clone, Debug)]
pub struct RewriteSystem<F> {
    num_y: usize,
    y_weights: Vec<u64>,
    rules: Vec<Rule<F>>,
    by_first: Vec<Vec<usize>>,
}

impl<F: Field> RewriteSystem<F> {
    /// Builds the system and checks that every rule is oriented by the monomial order.
    pub fn new(y_weights: Vec<u64>, rules: Vec<Rule<F>>) -> Result<Self, RewriteError> {
        let num_y = y_weights.len();
        let mut by_first = vec![Vec::new(); num_y + 2];
        let rs_probe: RewriteSystem<F> = RewriteSystem {
            num_y,
            y_weights: y_weights.clone(),
            rules: Vec::new(),
            by_first: Vec::new(),
        };
        for (idx, rule) in rules.iter().enumerate() {
            let first = *rule
                .lhs
                .first()
                .ok_or_else(|| RewriteError::EmptyLhs(rule.label.clone()))?;
            for w in std::iter::once(&rule.lhs).chain(rule.rhs.terms().map(|(w, _)| w)) {
                rs_probe.check_alphabet(w)?;
            }
            let lk = rs_probe.order_key(&rule.lhs);
            if rule.rhs.terms().any(|(w, _)| rs_probe.order_key(w) >= lk) {
                return Err(RewriteError::Unoriented(rule.label.clone()));
            }
            by_first[first.index()].push(idx);
        }
        Ok(RewriteSystem {
            num_y,
            y_weights,
            rules,
            by_first,
        })
    }

    fn check_alphabet(&self, w: &[Generator]) -> Result<(), RewriteError> {
        for g in w {
            if let Generator::Y(i) = *g {
                if i == 0 || i as usize > self.num_y {
                    return Err(RewriteError::UnknownGenerator(i));
                }
            }
        }
        Ok(())
    }

    pub fn num_y(&self) -> usize {
        self.num_y
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    pub fn y_weights(&self) -> &[u64] {
        &self.y_weights
    }

    pub fn letter_weight(&self, g: Generator) -> u64 {
        match g {
            Generator::Y(i) => self.y_weights[i as usize - 1],
            _ => 0,
        }
    }

    pub fn weight(&self, w: &[Generator]) -> u64 {
        w.iter().map(|&g| self.letter_weight(g)).sum()
    }

    pub fn monomial_weight(&self, m: &NFMonomial) -> u64 {
        m.w.iter()
            .zip(&self.y_weights)
            .map(|(&e, &wt)| e as u64 * wt)
            .sum()
    }

    pub fn order_key(&self, w: &[Generator]) -> OrderKey {
        OrderKey {
            weight: self.weight(w),
            x_count: w.iter().filter(|g| g.is_grouplike()).count() as u32,
            word: w.to_vec(),
        }
    }

    /// Upper bound (exclusive) on the exponent of `y_i` in normal forms, if any.
    pub fn y_bound(&self, i: usize) -> Option<u32> {
        let g = Generator::Y(i as u8);
        self.rules
            .iter()
            .filter(|r| r.lhs.iter().all(|&l| l == g))
            .map(|r| r.lhs.len() as u32)
            .min()
    }

    /// First redex under the strategy: `(position, rule index)`.
    pub fn find_redex(&self, w: &[Generator], strategy: Strategy) -> Option<(usize, usize)> {
        let at = |pos: usize, longest: bool| -> Option<usize> {
            let cands = self.by_first[w[pos].index()]
                .iter()
                .copied()
                .filter(|&r| w[pos..].starts_with(&self.rules[r].lhs));
            if longest {
                cands.max_by_key(|&r| self.rules[r].lhs.len())
            } else {
                cands.min_by_key(|&r| self.rules[r].lhs.len())
            }
        };
        match strategy {
            Strategy::LeftmostInnermost => (0..w.len()).find_map(|p| at(p, false).map(|r| (p, r))),
            Strategy::RightmostOutermost => {
                (0..w.len()).rev().find_map(|p| at(p, true).map(|r| (p, r)))
            }
        }
    }

    pub fn is_irreducible(&self, w: &[Generator]) -> bool {
        self.find_redex(w, Strategy::LeftmostInnermost).is_none()
    }

    /// One rewrite step: replace the occurrence of rule `rule`'s lhs at `pos`.
    pub fn apply_at(&self, w: &[Generator], pos: usize, rule: usize) -> FreePoly<F> {
        let r = &self.rules[rule];
        debug_assert!(w[pos..].starts_with(&r.lhs));
        let prefix = &w[..pos];
        let suffix = &w[pos + r.lhs.len()..];
        let mut out = FreePoly::zero();
        for (rw, c) in r.rhs.terms() {
            let mut nw = Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
            nw.extend_from_slice(prefix);
            nw.extend_from_slice(rw);
            nw.extend_from_slice(suffix);
            out.add_term(nw, c);
        }
        out
    }

    /// Reads an irreducible word as a PBW monomial.
    pub fn word_to_monomial(&self, w: &[Generator]) -> Result<NFMonomial, RewriteError> {
        let mut m = NFMonomial::one(self.num_y);
        let mut i = 0;
        while i < w.len() && w[i].is_grouplike() {
            m.w0 += if w[i] == Generator::X { 1 } else { -1 };
            i += 1;
        }
        let mut last = 0u8;
        let mixed_x = m.w0.unsigned_abs() as usize != i;
        for &g in &w[i..] {
            match g {
                Generator::Y(k) if k >= last => {
                    m.w[k as usize - 1] += 1;
                    last = k;
                }
                _ => {
                    return Err(RewriteError::NotPbwShaped(
                        Alphabet::standard(self.num_y).word(w),
                    ))
                }
            }
        }
        if mixed_x {
            return Err(RewriteError::NotPbwShaped(
                Alphabet::standard(self.num_y).word(w),
            ));
        }
        Ok(m)
    }

    pub fn normal_form(&self, p: &FreePoly<F>) -> Result<NCPoly<F>, RewriteError> {
        self.normal_form_with(p, &RewriteOptions::default(), &mut Budget::default())
    }

    pub fn normal_form_word(&self, w: &[Generator]) -> Result<NCPoly<F>, RewriteError> {
        self.normal_form(&FreePoly::word(w.to_vec()))
    }

    /// Exhaustive rewriting to the irreducible fixpoint.
    ///
    /// Pending words are processed from the top of the monomial order down,
    /// so every word is expanded at most once with its accumulated coefficient.
    pub fn normal_form_with(
        &self,
        p: &FreePoly<F>,
        opts: &RewriteOptions,
        budget: &mut Budget,
    ) -> Result<NCPoly<F>, RewriteError> {
        let mut pending: BTreeMap<OrderKey, F> = BTreeMap::new();
        for (w, c) in p.terms() {
            self.check_alphabet(w)?;
            push(&mut pending, self.order_key(w), c);
        }
        let mut out = NCPoly::zero();
        while let Some((key, c)) = pending.pop_last() {
            match self.find_redex(&key.word, opts.strategy) {
                None => out.add_term(self.word_to_monomial(&key.word)?, &c),
                Some((pos, rule)) => {
                    budget.spend()?;
                    for (nw, d) in self.apply_at(&key.word, pos, rule).terms() {
                        let nk = self.order_key(nw);
                        if opts.check_order && nk >= key {
                            return Err(RewriteError::OrderViolation(
                                Alphabet::standard(self.num_y).word(&key.word),
                            ));
                        }
                        push(&mut pending, nk, &c.mul_ref(d));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks that a polynomial is made of monomials this system can produce.
    pub fn check_poly(&self, p: &NCPoly<F>) -> Result<(), RewriteError> {
        for (m, _) in p.terms() {
            if m.w.len() != self.num_y {
                return Err(RewriteError::Mismatch);
            }
            for (i, &e) in m.w.iter().enumerate() {
                if self.y_bound(i + 1).is_some_and(|b| e >= b) {
                    return Err(RewriteError::Mismatch);
                }
            }
        }
        Ok(())
    }

    /// Product in the algebra: concatenate, then normalize.
    pub fn multiply(&self, a: &NCPoly<F>, b: &NCPoly<F>) -> Result<NCPoly<F>, RewriteError> {
        self.multiply_with(a, b, &mut Budget::default())
    }

    pub fn multiply_with(
        &self,
        a: &NCPoly<F>,
        b: &NCPoly<F>,
        budget: &mut Budget,
    ) -> Result<NCPoly<F>, RewriteError> {
        self.check_poly(a)?;
        self.check_poly(b)?;
        let prod = a.to_free().mul(&b.to_free());
        self.normal_form_with(&prod, &RewriteOptions::default(), budget)
    }

    /// The same system with coefficients converted; `None` if some coefficient does not convert.
    pub fn map_coefficients<G: Field>(
        &self,
        f: impl Fn(&F) -> Option<G>,
    ) -> Option<RewriteSystem<G>> {
        let rules = self
            .rules
            .iter()
            .map(|r| {
                Some(Rule {
                    lhs: r.lhs.clone(),
                    rhs: r.rhs.map_coefficients(&f)?,
                    label: r.label.clone(),
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(RewriteSystem {
            num_y: self.num_y,
            y_weights: self.y_weights.clone(),
            rules,
            by_first: self.by_first.clone(),
        })
    }
}

fn push<F: Field>(pending: &mut BTreeMap<OrderKey, F>, key: OrderKey, c: &F) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match pending.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add_ref(c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}
