use super::axioms::{monomial_set, AxiomOptions, DegreeMeasure};
use super::linalg::{dense_kernel, kernel, mat_mul, Echelon, SparseVec};
use super::{HopfContext, HopfError, TensorPoly};
use crate::ncpoly::{Budget, NCPoly, NFMonomial, DEFAULT_STEP_BUDGET};
use crate::presentations::HopfAlgebra;
use crate::scalars::Field;

#[derive(Clone, Copy, Debug)]
pub struct PrimitiveOptions {
    /// Bound on the weighted degree of the ansatz monomials.
    pub cap: u32,
    /// Range of `w0` is `[-window, window]`; `None` means `cap * M`.
    pub window: Option<i64>,
    pub budget: u64,
}

impl PrimitiveOptions {
    pub fn with_cap(cap: u32) -> Self {
        PrimitiveOptions {
            cap,
            window: None,
            budget: DEFAULT_STEP_BUDGET,
        }
    }
}

/// A nontrivial skew primitive together with its weight `x^weight_exponent`,
/// commutator and level.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewPrimitiveRecord<F> {
    pub element: NCPoly<F>,
    pub weight_exponent: i64,
    pub commutator: F,
    pub level: u32,
    /// The commutator is `1` or not a root of unity.
    pub is_major: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenSpace<F> {
    pub lambda: F,
    /// `dim P'_{g, lambda, 1}`.
    pub dim_level1: usize,
    /// Dimension of the generalized eigenspace.
    pub dim_generalized: usize,
}

/// The skew primitives of one weight, at the stated truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimitiveSpaceReport<F> {
    pub weight_exponent: i64,
    pub cap: u32,
    pub window: i64,
    pub ansatz_size: usize,
    /// Dimension of the solution space including the trivial `x^g - 1`.
    pub dim_p: usize,
    /// `dim P' = dim P / k(g - 1)`.
    pub dim_quotient: usize,
    /// Basis of `P'`, reduced modulo `x^g - 1`.
    pub basis: Vec<NCPoly<F>>,
    pub eigenspaces: Vec<EigenSpace<F>>,
    pub records: Vec<SkewPrimitiveRecord<F>>,
    /// Part of `P'` not accounted for by the eigenvalue candidates.
    pub unresolved_dim: usize,
    /// Conjugation by the weight mapped the computed space into itself.
    pub closed_under_conjugation: bool,
}

/// Weight, commutator and level of one skew primitive element.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorRecord<F> {
    pub weight_exponent: i64,
    pub commutator: F,
    /// `0` for trivial elements `c (x^g - 1)`.
    pub level: u32,
}

fn default_modulus<F: Field>(h: &HopfAlgebra<F>) -> i64 {
    match &h.k {
        Some(k) => k.m,
        None => h
            .coalgebra
            .skew
            .iter()
            .map(|r| r.left.abs().max(r.right.abs()) + 1)
            .max()
            .unwrap_or(1),
    }
}

fn tensor_key_vec<F: Field>(t: &TensorPoly<F>) -> SparseVec<(NFMonomial, NFMonomial), F> {
    t.as_map().clone()
}

fn to_sparse<F: Field>(p: &NCPoly<F>) -> SparseVec<NFMonomial, F> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

fn from_sparse<F: Field>(v: &SparseVec<NFMonomial, F>) -> NCPoly<F> {
    let mut p = NCPoly::zero();
    for (m, c) in v {
        p.add_term(m.clone(), c);
    }
    p
}

/// Scales so the largest non-grouplike monomial (or the largest monomial) has coefficient 1.
fn normalize<F: Field>(p: &NCPoly<F>) -> NCPoly<F> {
    let lead = p
        .terms()
        .filter(|(m, _)| !m.is_grouplike())
        .max_by(|a, b| (a.0.y_degree(), a.0).cmp(&(b.0.y_degree(), b.0)))
        .or_else(|| p.terms().last())
        .map(|(_, c)| c.clone());
    match lead.and_then(|c| c.inverse()) {
        Some(inv) => p.scale(&inv),
        None => p.clone(),
    }
}

fn trivial<F: Field>(g: i64, s: usize) -> NCPoly<F> {
    let mut t = NCPoly::monomial(NFMonomial::x_power(g, s), F::one());
    t.add_term(NFMonomial::one(s), &F::one().neg_ref());
    t
}

fn is_major<F: Field>(lambda: &F) -> bool {
    matches!(lambda.root_order(), None | Some(1))
}

/// Solves `Delta(y) = y (x) 1 + x^g (x) y` over a fixed monomial ansatz,
/// reusing the coproducts of the ansatz across weights.
pub struct PrimitiveSolver<'a, F> {
    ctx: HopfContext<'a, F>,
    monos: Vec<NFMonomial>,
    deltas: Vec<TensorPoly<F>>,
    cap: u32,
    window: i64,
}

impl<'a, F: Field> PrimitiveSolver<'a, F> {
    pub fn new(h: &'a HopfAlgebra<F>, opts: &PrimitiveOptions) -> Result<Self, HopfError> {
        let window = opts.window.unwrap_or(opts.cap as i64 * default_modulus(h));
        let monos = monomial_set(
            h,
            &AxiomOptions {
                cap: opts.cap,
                window,
                measure: DegreeMeasure::Weighted,
                budget: opts.budget,
            },
        );
        let ctx = HopfContext::with_budget(h, Budget::new(opts.budget));
        let deltas = monos
            .iter()
            .map(|m| ctx.coproduct_mono(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PrimitiveSolver {
            ctx,
            monos,
            deltas,
            cap: opts.cap,
            window,
        })
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// The solution space for weight `x^g`, including the trivial element.
    pub fn solution_space(&self, g: i64) -> Vec<NCPoly<F>> {
        let s = self.ctx.s();
        let one = NFMonomial::one(s);
        let xg = NFMonomial::x_power(g, s);
        let minus = F::one().neg_ref();
        let columns: Vec<_> = self
            .monos
            .iter()
            .zip(&self.deltas)
            .map(|(m, d)| {
                let mut t = d.clone();
                t.add_term(m.clone(), one.clone(), &minus);
                t.add_term(xg.clone(), m.clone(), &minus);
                tensor_key_vec(&t)
            })
            .collect();
        kernel(&columns)
            .into_iter()
            .map(|v| {
                let mut p = NCPoly::zero();
                for (j, c) in v {
                    p.add_term(self.monos[j].clone(), &c);
                }
                p
            })
            .collect()
    }

    pub fn solve(&self, g: i64) -> Result<PrimitiveSpaceReport<F>, HopfError> {
        let s = self.ctx.s();
        let space = self.solution_space(g);
        let mut ech: Echelon<NFMonomial, F> = Echelon::new();
        let offset = if g != 0 {
            ech.insert(&to_sparse(&trivial::<F>(g, s)));
            1
        } else {
            0
        };
        let mut triv_only: Echelon<NFMonomial, F> = Echelon::new();
        if g != 0 {
            triv_only.insert(&to_sparse(&trivial::<F>(g, s)));
        }
        let mut basis = Vec::new();
        for v in &space {
            let sv = to_sparse(v);
            if ech.express(&sv).is_none() {
                let rep = normalize(&from_sparse(&triv_only.reduce_fully(&sv)));
                ech.insert(&to_sparse(&rep));
                basis.push(rep);
            }
        }
        let k = basis.len();
        let mut matrix = vec![vec![F::zero(); k]; k];
        let mut closed = true;
        for (i, r) in basis.iter().enumerate() {
            let tr = self.ctx.conjugate_by_x_power(r, g)?;
            match ech.express(&to_sparse(&tr)) {
                Some(coords) => {
                    for (label, c) in coords {
                        if label >= offset {
                            matrix[label - offset][i] = c;
                        }
                    }
                }
                None => closed = false,
            }
        }
        let mut eigenspaces = Vec::new();
        let mut records = Vec::new();
        let mut accounted = 0;
        if closed {
            let mut candidates: Vec<F> = Vec::new();
            for (i, row) in matrix.iter().enumerate().take(k) {
                if !candidates.contains(&row[i]) {
                    candidates.push(row[i].clone());
                }
            }
            for lambda in candidates {
                let shifted: Vec<Vec<F>> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                if i == j {
                                    matrix[i][j].sub_ref(&lambda)
                                } else {
                                    matrix[i][j].clone()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let mut powers = vec![shifted.clone()];
                for _ in 1..k {
                    let next = mat_mul(powers.last().unwrap(), &shifted);
                    powers.push(next);
                }
                let ker1 = dense_kernel(&shifted, k);
                let gen = dense_kernel(powers.last().unwrap(), k);
                let element = |v: &[F]| {
                    let mut p = NCPoly::zero();
                    for (c, r) in v.iter().zip(&basis) {
                        p = p.add(&r.scale(c));
                    }
                    normalize(&p)
                };
                for v in &ker1 {
                    records.push(SkewPrimitiveRecord {
                        element: element(v),
                        weight_exponent: g,
                        commutator: lambda.clone(),
                        level: 1,
                        is_major: is_major(&lambda),
                    });
                }
                for v in &gen {
                    let level = (0..k)
                        .find(|&n| {
                            let col: Vec<Vec<F>> = v.iter().map(|c| vec![c.clone()]).collect();
                            mat_mul(&powers[n], &col).iter().all(|r| r[0].is_zero())
                        })
                        .map_or(k as u32, |n| n as u32 + 1);
                    if level > 1 {
                        records.push(SkewPrimitiveRecord {
                            element: element(v),
                            weight_exponent: g,
                            commutator: lambda.clone(),
                            level,
                            is_major: is_major(&lambda),
                        });
                    }
                }
                accounted += gen.len();
                eigenspaces.push(EigenSpace {
                    lambda,
                    dim_level1: ker1.len(),
                    dim_generalized: gen.len(),
                });
            }
        }
        Ok(PrimitiveSpaceReport {
            weight_exponent: g,
            cap: self.cap,
            window: self.window,
            ansatz_size: self.monos.len(),
            dim_p: space.len(),
            dim_quotient: k,
            basis,
            eigenspaces,
            records,
            unresolved_dim: k - accounted.min(k),
            closed_under_conjugation: closed,
        })
    }
}

/// `P'_{g}` for `g = x^g_exponent` at the given truncation.
pub fn skew_primitives<F: Field>(
    h: &HopfAlgebra<F>,
    g_exponent: i64,
    opts: &PrimitiveOptions,
) -> Result<PrimitiveSpaceReport<F>, HopfError> {
    PrimitiveSolver::new(h, opts)?.solve(g_exponent)
}

/// Weight, commutator and level of a skew primitive element `y`.
pub fn weight_commutator<F: Field>(
    h: &HopfAlgebra<F>,
    y: &NCPoly<F>,
) -> Result<CommutatorRecord<F>, HopfError> {
    let ctx = HopfContext::new(h);
    let s = h.num_y();
    let alphabet = &h.alphabet;
    if y.is_zero() {
        return Err(HopfError::NotSkewPrimitive("0".into()));
    }
    let mut d = ctx.coproduct(y)?;
    let mut y1 = TensorPoly::zero();
    y1.add_outer(y, &NCPoly::one(s), &F::one());
    d = d.sub(&y1);
    let mut candidates: Vec<i64> = d
        .terms()
        .filter(|((a, _), _)| a.is_grouplike())
        .map(|((a, _), _)| a.w0)
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    let g = candidates
        .into_iter()
        .find(|&g| {
            let mut want = TensorPoly::zero();
            want.add_outer(
                &NCPoly::monomial(NFMonomial::x_power(g, s), F::one()),
                y,
                &F::one(),
            );
            want == d
        })
        .ok_or_else(|| HopfError::NotSkewPrimitive(y.display(alphabet)))?;
    if y.is_grouplike_span() {
        return Ok(CommutatorRecord {
            weight_exponent: g,
            commutator: F::one(),
            level: 0,
        });
    }
    let ty = ctx.conjugate_by_x_power(y, g)?;
    let (lead, c) = y
        .terms()
        .filter(|(m, _)| !m.is_grouplike())
        .max_by(|a, b| (a.0.y_degree(), a.0).cmp(&(b.0.y_degree(), b.0)))
        .expect("non-grouplike term");
    let lambda = ty.coefficient(lead).mul_ref(&c.inverse().expect("nonzero"));
    let mut z = y.clone();
    for level in 1..=8u32 {
        let tz = ctx.conjugate_by_x_power(&z, g)?;
        z = tz.sub(&z.scale(&lambda));
        if z.is_grouplike_span() {
            return Ok(CommutatorRecord {
                weight_exponent: g,
                commutator: lambda,
                level,
            });
        }
    }
    Err(HopfError::InvalidInput(format!(
        "no commutator level up to 8 for {}",
        y.display(alphabet)
    )))
}
