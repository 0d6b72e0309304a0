//! Noncommutative polynomials on `x, x^-1, y_1, ..., y_s`, the rewriting
//! engine that puts them in PBW normal form, and the confluence checker.

mod confluence;
mod poly;
mod rewrite;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use confluence::{
    certify_confluence, certify_confluence_with, enumerate_ambiguities, AmbiguityKind,
    AmbiguityResult, AmbiguityStatus, ConfluenceReport, Overlap,
};
pub(crate) use poly::format_terms;
pub use poly::{FreePoly, NCPoly, NFMonomial};
pub use rewrite::{
    Budget, OrderKey, RewriteError, RewriteOptions, RewriteSystem, Rule, Strategy,
    DEFAULT_STEP_BUDGET,
};

/// A letter of the free alphabet. The derived order is `x^-1 < x < y_1 < ... < y_s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Generator {
    XInv,
    X,
    /// `y_i`, 1-based.
    Y(u8),
}

impl Generator {
    /// Dense index: `x^-1 -> 0`, `x -> 1`, `y_i -> i + 1`.
    pub fn index(self) -> usize {
        match self {
            Generator::XInv => 0,
            Generator::X => 1,
            Generator::Y(i) => i as usize + 1,
        }
    }

    pub fn is_grouplike(self) -> bool {
        !matches!(self, Generator::Y(_))
    }
}

pub type Word = Vec<Generator>;

/// `x^k` as a word (`x^-1` letters for negative `k`).
pub fn x_power_word(k: i64) -> Word {
    let g = if k < 0 { Generator::XInv } else { Generator::X };
    vec![g; k.unsigned_abs() as usize]
}

/// Display names for the generators of a presentation.
///
/// The grouplike generator is always stored as `x`; `C(n)` names it `y`
/// and its skew primitive `x`, so printing goes through this table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    pub grouplike: String,
    pub skew: Vec<String>,
}

impl Alphabet {
    /// `x, y1, ..., ys`.
    pub fn standard(s: usize) -> Self {
        Alphabet {
            grouplike: "x".into(),
            skew: (1..=s).map(|i| format!("y{i}")).collect(),
        }
    }

    pub fn letter(&self, g: Generator) -> String {
        match g {
            Generator::X => self.grouplike.clone(),
            Generator::XInv => format!("{}^-1", self.grouplike),
            Generator::Y(i) => self.skew[i as usize - 1].clone(),
        }
    }

    pub fn word(&self, w: &[Generator]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&g| self.letter(g))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.grouplike, self.skew.join(", "))
    }
}
