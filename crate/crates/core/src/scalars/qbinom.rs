//! Gaussian binomial coefficients over an arbitrary field.

use super::field::Field;
use super::ScalarError;

/// The Gaussian binomial `[w choose j]_q` by the Pascal recurrence
/// `C(w,j) = C(w-1,j-1) + q^j C(w-1,j)`.
///
/// The recurrence never divides, so it is valid when `q` is a root of unity.
pub fn qbinom<F: Field>(w: u32, j: u32, q: &F) -> Result<F, ScalarError> {
    if j > w {
        return Err(ScalarError::InvalidInput(format!(
            "q-binomial lower index {j} exceeds upper index {w}"
        )));
    }
    let j = j as usize;
    // row[k] = C(r, k) for the current r, k <= j
    let mut row = vec![F::zero(); j + 1];
    row[0] = F::one();
    let mut qpow = vec![F::one(); j + 1];
    for k in 1..=j {
        qpow[k] = qpow[k - 1].mul_ref(q);
    }
    for r in 1..=w as usize {
        for k in (1..=j.min(r)).rev() {
            row[k] = row[k - 1].add_ref(&qpow[k].mul_ref(&row[k]));
        }
    }
    Ok(row[j].clone())
}
