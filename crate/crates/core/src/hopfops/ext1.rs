use std::collections::BTreeMap;

use super::linalg::{add_entry, rank, SparseVec};
use crate::ncpoly::{Generator, Word};
use crate::presentations::HopfAlgebra;
use crate::scalars::Field;

/// Coordinates of the linearization: `0 -> t = x - 1`, `1 -> t' = x^-1 - 1`, `i + 1 -> y_i`.
fn linear_part<F: Field>(w: &Word, c: &F, out: &mut SparseVec<usize, F>) {
    let ys: Vec<u8> = w
        .iter()
        .filter_map(|g| match g {
            Generator::Y(i) => Some(*i),
            _ => None,
        })
        .collect();
    match ys.as_slice() {
        [] => {
            let nx = w.iter().filter(|&&g| g == Generator::X).count() as i64;
            let ninv = w.len() as i64 - nx;
            add_entry(out, 0, &c.mul_ref(&F::from_i64(nx)));
            add_entry(out, 1, &c.mul_ref(&F::from_i64(ninv)));
        }
        [i] => add_entry(out, *i as usize + 1, c),
        _ => {}
    }
}

/// Linear parts of the defining relations `lhs - rhs` in `m / m^2`,
/// one row per relation, columns `(t, t', y_1, ..., y_s)`.
pub fn linearized_relations<F: Field>(h: &HopfAlgebra<F>) -> Vec<SparseVec<usize, F>> {
    h.rs.rules()
        .iter()
        .map(|r| {
            let mut row = BTreeMap::new();
            linear_part(&r.lhs, &F::one(), &mut row);
            for (w, c) in r.rhs.terms() {
                linear_part(w, &c.neg_ref(), &mut row);
            }
            row
        })
        .collect()
}

/// `dim m / m^2` for the augmentation ideal `m`: `(s + 2)` minus the rank of
/// the linearized relations.
pub fn ext1_dimension<F: Field>(h: &HopfAlgebra<F>) -> usize {
    h.num_y() + 2 - rank(&linearized_relations(h))
}
