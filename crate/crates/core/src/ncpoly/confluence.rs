use serde::Serialize;

use super::rewrite::{Budget, RewriteError, RewriteOptions, RewriteSystem};
use super::{Alphabet, Word};
use crate::scalars::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AmbiguityKind {
    /// A proper suffix of `lhs_a` is a proper prefix of `lhs_b`.
    Overlap,
    /// `lhs_b` occurs inside `lhs_a`.
    Inclusion,
}

/// An ambiguity: the word `word` is reducible by rule `rule_a` at position 0
/// and by rule `rule_b` at position `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub rule_a: usize,
    pub rule_b: usize,
    pub word: Word,
    pub offset: usize,
    pub kind: AmbiguityKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AmbiguityStatus {
    Resolved,
    /// The two reductions have different normal forms; holds their difference.
    Unresolved(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct AmbiguityResult {
    pub ambiguity: Overlap,
    pub word_display: String,
    pub labels: (String, String),
    pub status: AmbiguityStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub results: Vec<AmbiguityResult>,
    pub steps: u64,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.results
            .iter()
            .all(|r| r.status == AmbiguityStatus::Resolved)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AmbiguityResult> {
        self.results
            .iter()
            .filter(|r| r.status != AmbiguityStatus::Resolved)
    }

    pub fn resolved_count(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.status == AmbiguityStatus::Resolved)
            .count()
    }
}

/// Lists every overlap and inclusion ambiguity among the rules, self-overlaps included.
pub fn enumerate_ambiguities<F: Field>(rs: &RewriteSystem<F>) -> Vec<Overlap> {
    let rules = rs.rules();
    let mut out = Vec::new();
    for (a, ra) in rules.iter().enumerate() {
        let la = &ra.lhs;
        for (b, rb) in rules.iter().enumerate() {
            let lb = &rb.lhs;
            for k in 1..la.len().min(lb.len()) {
                if la[la.len() - k..] == lb[..k] {
                    let mut word = la.clone();
                    word.extend_from_slice(&lb[k..]);
                    out.push(Overlap {
                        rule_a: a,
                        rule_b: b,
                        word,
                        offset: la.len() - k,
                        kind: AmbiguityKind::Overlap,
                    });
                }
            }
            if a != b && lb.len() <= la.len() {
                for pos in 0..=la.len() - lb.len() {
                    if la[pos..pos + lb.len()] == lb[..] {
                        out.push(Overlap {
                            rule_a: a,
                            rule_b: b,
                            word: la.clone(),
                            offset: pos,
                            kind: AmbiguityKind::Inclusion,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Resolves every ambiguity by reducing both ways to normal form.
pub fn certify_confluence<F: Field>(
    rs: &RewriteSystem<F>,
    alphabet: &Alphabet,
) -> Result<ConfluenceReport, RewriteError> {
    certify_confluence_with(rs, alphabet, Budget::default())
}

/// As [`certify_confluence`], under an explicit step budget.
pub fn certify_confluence_with<F: Field>(
    rs: &RewriteSystem<F>,
    alphabet: &Alphabet,
    mut budget: Budget,
) -> Result<ConfluenceReport, RewriteError> {
    let opts = RewriteOptions::default();
    let mut results = Vec::new();
    for amb in enumerate_ambiguities(rs) {
        let left = rs.apply_at(&amb.word, 0, amb.rule_a);
        let right = rs.apply_at(&amb.word, amb.offset, amb.rule_b);
        let nl = rs.normal_form_with(&left, &opts, &mut budget)?;
        let nr = rs.normal_form_with(&right, &opts, &mut budget)?;
        let diff = nl.sub(&nr);
        let status = if diff.is_zero() {
            AmbiguityStatus::Resolved
        } else {
            AmbiguityStatus::Unresolved(diff.display(alphabet))
        };
        let rules = rs.rules();
        results.push(AmbiguityResult {
            word_display: alphabet.word(&amb.word),
            labels: (
                rules[amb.rule_a].label.clone(),
                rules[amb.rule_b].label.clone(),
            ),
            ambiguity: amb,
            status,
        });
    }
    Ok(ConfluenceReport {
        results,
        steps: budget.used(),
    })
}
