use std::collections::BTreeMap;

use crate::ncpoly::{Alphabet, NCPoly, NFMonomial};
use crate::scalars::Field;

use super::linalg::{add_entry, axpy};

/// An element of `K (x) K`, both legs in normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorPoly<F> {
    terms: BTreeMap<(NFMonomial, NFMonomial), F>,
}

/// An element of `K (x) K (x) K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<F> {
    terms: BTreeMap<(NFMonomial, NFMonomial, NFMonomial), F>,
}

impl<F: Field> TensorPoly<F> {
    pub fn zero() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn simple(a: NFMonomial, b: NFMonomial, c: F) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, &c);
        t
    }

    pub fn add_term(&mut self, a: NFMonomial, b: NFMonomial, c: &F) {
        add_entry(&mut self.terms, (a, b), c);
    }

    /// Adds `c * (a (x) b)` for polynomials `a`, `b`.
    pub fn add_outer(&mut self, a: &NCPoly<F>, b: &NCPoly<F>, c: &F) {
        for (ma, ca) in a.terms() {
            let cac = ca.mul_ref(c);
            for (mb, cb) in b.terms() {
                self.add_term(ma.clone(), mb.clone(), &cac.mul_ref(cb));
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(NFMonomial, NFMonomial), &F)> {
        self.terms.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<(NFMonomial, NFMonomial), F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, a: &NFMonomial, b: &NFMonomial) -> F {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        axpy(&mut self.terms, c, &other.terms);
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one().neg_ref());
        out
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        crate::ncpoly::format_terms(self.terms.iter().map(|((a, b), c)| {
            (
                format!("{} (x) {}", a.display(alphabet), b.display(alphabet)),
                c,
            )
        }))
    }
}

impl<F: Field> Tensor3<F> {
    pub fn zero() -> Self {
        Tensor3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, a: NFMonomial, b: NFMonomial, c: NFMonomial, coeff: &F) {
        add_entry(&mut self.terms, (a, b, c), coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(NFMonomial, NFMonomial, NFMonomial), &F)> {
        self.terms.iter()
    }
}
