use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{x_power_word, Alphabet, Generator, Word};
use crate::scalars::Field;

/// A PBW basis monomial `x^{w0} y_1^{w_1} ... y_s^{w_s}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct NFMonomial {
    pub w0: i64,
    pub w: Vec<u32>,
}

impl NFMonomial {
    pub fn one(s: usize) -> Self {
        NFMonomial {
            w0: 0,
            w: vec![0; s],
        }
    }

    pub fn x_power(k: i64, s: usize) -> Self {
        NFMonomial {
            w0: k,
            w: vec![0; s],
        }
    }

    /// `y_i^e`, `i` 1-based.
    pub fn y_power(i: usize, e: u32, s: usize) -> Self {
        let mut w = vec![0; s];
        w[i - 1] = e;
        NFMonomial { w0: 0, w }
    }

    pub fn new(w0: i64, w: Vec<u32>) -> Self {
        NFMonomial { w0, w }
    }

    /// True if the monomial is a power of the grouplike generator.
    pub fn is_grouplike(&self) -> bool {
        self.w.iter().all(|&e| e == 0)
    }

    pub fn y_degree(&self) -> u32 {
        self.w.iter().sum()
    }

    pub fn to_word(&self) -> Word {
        let mut word = x_power_word(self.w0);
        for (i, &e) in self.w.iter().enumerate() {
            word.extend(std::iter::repeat_n(Generator::Y(i as u8 + 1), e as usize));
        }
        word
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, alphabet }
    }
}

struct MonomialDisplay<'a> {
    m: &'a NFMonomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.m.w0 {
            0 => {}
            1 => parts.push(self.alphabet.grouplike.clone()),
            k => parts.push(format!("{}^{}", self.alphabet.grouplike, k)),
        }
        for (i, &e) in self.m.w.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.alphabet.skew[i].clone()),
                e => parts.push(format!("{}^{}", self.alphabet.skew[i], e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for NFMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&Alphabet::standard(self.w.len())))
    }
}

fn accumulate<K: Ord, F: Field>(terms: &mut BTreeMap<K, F>, key: K, c: &F) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().add_ref(c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// A linear combination of arbitrary words in the free algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct FreePoly<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> FreePoly<F> {
    pub fn zero() -> Self {
        FreePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn constant(c: F) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn add_term(&mut self, w: Word, c: &F) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg_ref()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &d.mul_ref(c));
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &c.mul_ref(d));
            }
        }
        out
    }

    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<FreePoly<G>> {
        let mut out = FreePoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Some(out)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> String {
        format_terms(self.terms.iter().map(|(w, c)| (alphabet.word(w), c)))
    }
}

/// An element of the algebra, stored in PBW normal form.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<F> {
    terms: BTreeMap<NFMonomial, F>,
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(s: usize) -> Self {
        Self::monomial(NFMonomial::one(s), F::one())
    }

    pub fn monomial(m: NFMonomial, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn add_term(&mut self, m: NFMonomial, c: &F) {
        accumulate(&mut self.terms, m, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&NFMonomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &NFMonomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), &d.mul_ref(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg_ref())
    }

    /// True if every monomial is a power of `x`, i.e. the element lies in the coradical.
    pub fn is_grouplike_span(&self) -> bool {
        self.terms.keys().all(NFMonomial::is_grouplike)
    }

    pub fn to_free(&self) -> FreePoly<F> {
        let mut out = FreePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.to_word(), c);
        }
        out
    }

    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<NCPoly<G>> {
        let mut out = NCPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c)?);
        }
        Some(out)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> String {
        format_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.display(alphabet).to_string(), c)),
        )
    }
}

impl<F: Field> fmt::Display for NCPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.terms.keys().next().map_or(0, |m| m.w.len());
        write!(f, "{}", self.display(&Alphabet::standard(s)))
    }
}

/// Renders `sum c * m` in the expression grammar accepted by the CLI parser.
pub(crate) fn format_terms<'a, F: Field + 'a>(
    terms: impl Iterator<Item = (String, &'a F)>,
) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let cs = c.to_string();
        let compound = cs.contains(" + ") || cs.contains(" - ");
        let (negative, body) = if !compound && cs.starts_with('-') {
            (true, cs[1..].to_string())
        } else {
            (false, cs)
        };
        let coeff = if compound { format!("({body})") } else { body };
        let term = match (coeff.as_str(), mono.as_str()) {
            (c, "1") => c.to_string(),
            ("1", m) => m.to_string(),
            (c, m) => format!("{c}*{m}"),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
