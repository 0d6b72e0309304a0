use num_integer::Integer;

use super::axioms::{monomial_set, AxiomOptions, DegreeMeasure};
use super::linalg::{kernel, SparseVec};
use super::{HopfContext, HopfError};
use crate::ncpoly::{Budget, NCPoly, NFMonomial, RewriteError};
use crate::presentations::HopfAlgebra;
use crate::scalars::{nth_root, CycloScalar, Field, ScalarError};

#[derive(Clone, Copy, Debug)]
pub struct ZeroDivisorOptions {
    /// Bound on the total `y`-degree of the right factor.
    pub cap: u32,
    /// Rewrite step budget for the whole search.
    pub budget: u64,
}

impl Default for ZeroDivisorOptions {
    fn default() -> Self {
        ZeroDivisorOptions {
            cap: 4,
            budget: 1_000_000,
        }
    }
}

/// Nonzero `a`, `b` with `a b = 0`, verified exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroDivisorWitness {
    pub a: NCPoly<CycloScalar>,
    pub b: NCPoly<CycloScalar>,
    pub seed: String,
}

#[derive(Clone, Debug)]
pub struct ZeroDivisorSearch {
    pub witness: Option<ZeroDivisorWitness>,
    pub seeds_tried: usize,
    pub steps: u64,
    pub budget_exhausted: bool,
}

struct Seed {
    left: NCPoly<CycloScalar>,
    label: String,
}

fn roots(n: u32) -> Vec<CycloScalar> {
    (0..n as i64)
        .map(|k| CycloScalar::make_root(n, k))
        .collect()
}

fn x_mono(k: i64, s: usize) -> NFMonomial {
    NFMonomial::x_power(k, s)
}

/// Proof-guided left factors `c0 + a + c2 b + c3 a b` with `a = y_i + gamma x^{n_i}`, `b = y_j`.
fn guided_seeds(
    ctx: &HopfContext<'_, CycloScalar>,
    unavailable: &mut bool,
) -> Result<Vec<Seed>, HopfError> {
    let Some(k) = &ctx.h.k else {
        return Ok(Vec::new());
    };
    let s = k.s;
    let alpha = &k.alpha;
    let mut seeds = Vec::new();
    let mut tier2 = Vec::new();
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let qq = k.q_ij(i, j);
            if qq.is_one_exact() {
                continue;
            }
            let e = qq.root_order().unwrap_or(2);
            let delta = alpha[j].sub_ref(&alpha[i]);
            let gamma = match nth_root(&delta, k.p[i]) {
                Ok(g) => g,
                Err(ScalarError::WitnessUnavailable) => {
                    *unavailable = true;
                    continue;
                }
                Err(err) => return Err(err.into()),
            };
            let mut n = 2 * e;
            let c = gamma.conductor();
            if (n as u64).lcm(&(c as u64)) <= 120 {
                n = n.lcm(&c);
            }
            let palette: Vec<CycloScalar> = std::iter::once(CycloScalar::from_int(0))
                .chain(roots(n))
                .collect();
            for gz in roots(k.p[i]).iter().map(|z| gamma.mul_ref(z)) {
                let mut a =
                    NCPoly::monomial(NFMonomial::y_power(i + 1, 1, s), CycloScalar::from_int(1));
                a.add_term(x_mono(k.n[i], s), &gz);
                let b =
                    NCPoly::monomial(NFMonomial::y_power(j + 1, 1, s), CycloScalar::from_int(1));
                let ab = ctx.mul(&a, &b)?;
                for c0 in &palette {
                    for c2 in &palette[1..] {
                        let mut left = a.add(&b.scale(c2));
                        left.add_term(NFMonomial::one(s), c0);
                        seeds.push(Seed {
                            label: format!(
                                "{c0} + (y{} + ({gz})*x^{}) + ({c2})*y{}",
                                i + 1,
                                k.n[i],
                                j + 1
                            ),
                            left: left.clone(),
                        });
                        for c3 in &palette[1..] {
                            tier2.push(Seed {
                                label: format!(
                                    "{c0} + (y{} + ({gz})*x^{}) + ({c2})*y{} + ({c3})*ab",
                                    i + 1,
                                    k.n[i],
                                    j + 1
                                ),
                                left: left.add(&ab.scale(c3)),
                            });
                        }
                    }
                }
            }
        }
    }
    seeds.extend(tier2);
    Ok(seeds)
}

/// Low-degree fallback left factors `y_i + c x^{n_i}` and `y_i`.
fn fallback_seeds(h: &HopfAlgebra<CycloScalar>) -> Vec<Seed> {
    let s = h.num_y();
    let mut seeds = Vec::new();
    for i in 0..s {
        let ni = h.coalgebra.skew[i]
            .left
            .abs()
            .max(h.coalgebra.skew[i].right.abs())
            .max(1);
        let y = NCPoly::monomial(NFMonomial::y_power(i + 1, 1, s), CycloScalar::from_int(1));
        seeds.push(Seed {
            left: y.clone(),
            label: format!("y{}", i + 1),
        });
        let order = h.rs.y_bound(i + 1).unwrap_or(2).max(2);
        for c in roots(2 * order) {
            let mut left = y.clone();
            left.add_term(x_mono(ni, s), &c);
            seeds.push(Seed {
                left,
                label: format!("y{} + ({c})*x^{ni}", i + 1),
            });
        }
    }
    seeds
}

fn total_degree_set(h: &HopfAlgebra<CycloScalar>, d: u32, window: i64) -> Vec<NFMonomial> {
    monomial_set(
        h,
        &AxiomOptions {
            cap: d,
            window,
            measure: DegreeMeasure::Total,
            budget: 0,
        },
    )
}

/// Nonzero right annihilator of `left` among monomials of total degree `<= d`.
fn right_annihilator(
    ctx: &HopfContext<'_, CycloScalar>,
    left: &NCPoly<CycloScalar>,
    monos: &[NFMonomial],
) -> Result<Option<NCPoly<CycloScalar>>, HopfError> {
    let columns = monos
        .iter()
        .map(|m| {
            let p = ctx.mul_poly_word(left, &m.to_word())?;
            Ok(p.terms()
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect::<SparseVec<_, _>>())
        })
        .collect::<Result<Vec<_>, HopfError>>()?;
    Ok(kernel(&columns).into_iter().next().map(|v| {
        let mut p = NCPoly::zero();
        for (j, c) in v {
            p.add_term(monos[j].clone(), &c);
        }
        p
    }))
}

/// Seeded search for zero divisors.
///
/// Fails with `WitnessUnavailable` when no witness was found and some
/// proof-guided seed needed a root that is not cyclotomic.
pub fn find_zero_divisors(
    h: &HopfAlgebra<CycloScalar>,
    opts: &ZeroDivisorOptions,
) -> Result<ZeroDivisorSearch, HopfError> {
    let ctx = HopfContext::with_budget(h, Budget::new(opts.budget));
    let mut unavailable = false;
    let mut seeds = guided_seeds(&ctx, &mut unavailable)?;
    seeds.extend(fallback_seeds(h));
    let max_n = h
        .coalgebra
        .skew
        .iter()
        .map(|r| r.left.abs().max(r.right.abs()))
        .max()
        .unwrap_or(1)
        .max(1);
    let mut tried = 0;
    let mut exhausted = false;
    'outer: for d in 1..=opts.cap {
        let monos = total_degree_set(h, d, d as i64 * max_n);
        for seed in &seeds {
            tried += 1;
            match right_annihilator(&ctx, &seed.left, &monos) {
                Ok(Some(right)) => {
                    let prod = ctx.mul(&seed.left, &right)?;
                    if prod.is_zero() && !right.is_zero() && !seed.left.is_zero() {
                        return Ok(ZeroDivisorSearch {
                            witness: Some(ZeroDivisorWitness {
                                a: seed.left.clone(),
                                b: right,
                                seed: seed.label.clone(),
                            }),
                            seeds_tried: tried,
                            steps: ctx.steps_used(),
                            budget_exhausted: false,
                        });
                    }
                }
                Ok(None) => {}
                Err(HopfError::Rewrite(RewriteError::BudgetExhausted(_))) => {
                    exhausted = true;
                    break 'outer;
                }
                Err(e) => return Err(e),
            }
        }
    }
    if unavailable {
        return Err(ScalarError::WitnessUnavailable.into());
    }
    Ok(ZeroDivisorSearch {
        witness: None,
        seeds_tried: tried,
        steps: ctx.steps_used(),
        budget_exhausted: exhausted,
    })
}
