use num_integer::Integer;

use super::{ComparisonPresentation, HopfPresentation, KParams, PresentationError};
use crate::ncpoly::{x_power_word, Alphabet, FreePoly, Generator, RewriteSystem, Rule};
use crate::scalars::{CycloScalar, Field};

/// Coalgebra data of one skew primitive generator `y_i`:
/// `Delta(y_i) = y_i (x) x^right + x^left (x) y_i`, `S(y_i) = scale * x^-left y_i x^-right`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewRule<F> {
    pub right: i64,
    pub left: i64,
    pub antipode_scale: F,
}

/// The generator table; `x` is always grouplike.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra<F> {
    pub skew: Vec<SkewRule<F>>,
}

/// A built presentation: rewrite system plus coalgebra table.
#[derive(Clone, Debug)]
pub struct HopfAlgebra<F> {
    pub rs: RewriteSystem<F>,
    pub coalgebra: Coalgebra<F>,
    pub alphabet: Alphabet,
    pub family: &'static str,
    pub name: String,
    /// `K` parameters with `alpha_1 = 0`, for the `K`/`B` families.
    pub k: Option<KParams>,
}

impl<F: Field> HopfAlgebra<F> {
    pub fn num_y(&self) -> usize {
        self.rs.num_y()
    }

    pub fn map_coefficients<G: Field>(
        &self,
        f: impl Fn(&F) -> Option<G>,
    ) -> Option<HopfAlgebra<G>> {
        let skew = self
            .coalgebra
            .skew
            .iter()
            .map(|r| {
                Some(SkewRule {
                    right: r.right,
                    left: r.left,
                    antipode_scale: f(&r.antipode_scale)?,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(HopfAlgebra {
            rs: self.rs.map_coefficients(&f)?,
            coalgebra: Coalgebra { skew },
            alphabet: self.alphabet.clone(),
            family: self.family,
            name: self.name.clone(),
            k: self.k.clone(),
        })
    }
}

fn y(i: usize) -> Generator {
    Generator::Y(i as u8)
}

fn rule<F: Field>(alphabet: &Alphabet, lhs: Vec<Generator>, rhs: FreePoly<F>) -> Rule<F> {
    Rule {
        label: alphabet.word(&lhs),
        lhs,
        rhs,
    }
}

fn inverse_rules<F: Field>(alphabet: &Alphabet) -> Vec<Rule<F>> {
    use Generator::{XInv, X};
    vec![
        rule(alphabet, vec![X, XInv], FreePoly::constant(F::one())),
        rule(alphabet, vec![XInv, X], FreePoly::constant(F::one())),
    ]
}

/// Rules of the `K` family; `q1x` overrides the coefficient of `y_1 x`.
fn k_rules(
    k: &KParams,
    q1x: Option<CycloScalar>,
) -> Result<Vec<Rule<CycloScalar>>, PresentationError> {
    use Generator::{XInv, X};
    let alphabet = Alphabet::standard(k.s);
    let alpha = k.normalized_alpha();
    let mut rules = inverse_rules(&alphabet);
    for i in 1..=k.s {
        let qi = match (&q1x, i) {
            (Some(c), 1) => c.clone(),
            _ => k.q[i - 1].clone(),
        };
        rules.push(rule(
            &alphabet,
            vec![y(i), X],
            FreePoly::term(vec![X, y(i)], qi),
        ));
        rules.push(rule(
            &alphabet,
            vec![y(i), XInv],
            FreePoly::term(vec![XInv, y(i)], k.q[i - 1].inv()?),
        ));
    }
    for j in 1..=k.s {
        for i in 1..j {
            rules.push(rule(
                &alphabet,
                vec![y(j), y(i)],
                FreePoly::term(vec![y(i), y(j)], k.q_ij(i - 1, j - 1)),
            ));
        }
    }
    for j in 2..=k.s {
        let mut rhs = FreePoly::word(vec![y(1); k.p[0] as usize]);
        rhs.add_term(x_power_word(k.m), &alpha[j - 1]);
        rhs.add_term(Vec::new(), &alpha[j - 1].neg_ref());
        rules.push(rule(&alphabet, vec![y(j); k.p[j - 1] as usize], rhs));
    }
    Ok(rules)
}

fn k_weights(p: &[u32]) -> Vec<u64> {
    let l = p.iter().fold(1u64, |acc, &pi| acc.lcm(&(pi as u64)));
    p.iter().map(|&pi| l / pi as u64).collect()
}

fn k_algebra(
    k: &KParams,
    family: &'static str,
    name: String,
    q1x: Option<CycloScalar>,
) -> Result<HopfAlgebra<CycloScalar>, PresentationError> {
    k.buildable()?;
    let rs = RewriteSystem::new(k_weights(&k.p), k_rules(k, q1x)?)?;
    let skew =
        k.n.iter()
            .map(|&ni| SkewRule {
                right: 0,
                left: ni,
                antipode_scale: CycloScalar::from_int(-1),
            })
            .collect();
    let mut normalized = k.clone();
    normalized.alpha = k.normalized_alpha();
    Ok(HopfAlgebra {
        rs,
        coalgebra: Coalgebra { skew },
        alphabet: Alphabet::standard(k.s),
        family,
        name,
        k: Some(normalized),
    })
}

pub(super) fn build(
    pres: &HopfPresentation,
) -> Result<HopfAlgebra<CycloScalar>, PresentationError> {
    use Generator::{XInv, X};
    let name = pres.name();
    match pres {
        HopfPresentation::K(k) => k_algebra(k, "K", name, None),
        HopfPresentation::B(b) => {
            b.validate()?;
            k_algebra(&b.to_k(), "B", name, None)
        }
        HopfPresentation::Comparison(ComparisonPresentation::A { n, q }) => {
            let alphabet = Alphabet {
                grouplike: "x".into(),
                skew: vec!["y".into()],
            };
            let qinv = q.inv()?;
            let mut rules = inverse_rules(&alphabet);
            rules.push(rule(
                &alphabet,
                vec![y(1), X],
                FreePoly::term(vec![X, y(1)], qinv),
            ));
            rules.push(rule(
                &alphabet,
                vec![y(1), XInv],
                FreePoly::term(vec![XInv, y(1)], q.clone()),
            ));
            Ok(HopfAlgebra {
                rs: RewriteSystem::new(vec![1], rules)?,
                coalgebra: Coalgebra {
                    skew: vec![SkewRule {
                        right: 0,
                        left: *n,
                        antipode_scale: CycloScalar::from_int(-1),
                    }],
                },
                alphabet,
                family: "A",
                name,
                k: None,
            })
        }
        HopfPresentation::Comparison(ComparisonPresentation::C { n }) => {
            if *n < 2 {
                return Err(PresentationError::Invalid("C(n) needs n >= 2".into()));
            }
            // The grouplike generator is stored as `x` and printed as `y`.
            let alphabet = Alphabet {
                grouplike: "y".into(),
                skew: vec!["x".into()],
            };
            let one = CycloScalar::from_int(1);
            let mut rules = inverse_rules(&alphabet);
            let mut r1 = FreePoly::word(vec![X, y(1)]);
            r1.add_term(x_power_word(*n), &one);
            r1.add_term(vec![X], &one.neg_ref());
            rules.push(rule(&alphabet, vec![y(1), X], r1));
            let mut r2 = FreePoly::word(vec![XInv, y(1)]);
            r2.add_term(x_power_word(n - 2), &one.neg_ref());
            r2.add_term(vec![XInv], &one);
            rules.push(rule(&alphabet, vec![y(1), XInv], r2));
            Ok(HopfAlgebra {
                rs: RewriteSystem::new(vec![1], rules)?,
                coalgebra: Coalgebra {
                    skew: vec![SkewRule {
                        right: n - 1,
                        left: 0,
                        antipode_scale: CycloScalar::from_int(-1),
                    }],
                },
                alphabet,
                family: "C",
                name,
                k: None,
            })
        }
    }
}

/// Negative control: the rule `y_1 x -> q_1 x y_1` with `q_1` replaced by `q_1^2`,
/// every other rule untouched.
pub fn corrupt_commutation(
    pres: &HopfPresentation,
) -> Result<HopfAlgebra<CycloScalar>, PresentationError> {
    let k = pres.k_params().ok_or_else(|| {
        PresentationError::Invalid("corruption applies to the K/B families".into())
    })?;
    let q1sq = k.q[0].mul_ref(&k.q[0]);
    k_algebra(
        &k,
        pres.family(),
        format!("{} (corrupted y1*x)", pres.name()),
        Some(q1sq),
    )
}

/// Negative control: flips the sign of the antipode on `y_i` (1-based).
pub fn corrupt_antipode<F: Field>(h: &HopfAlgebra<F>, i: usize) -> HopfAlgebra<F> {
    let mut out = h.clone();
    let r = &mut out.coalgebra.skew[i - 1];
    r.antipode_scale = r.antipode_scale.neg_ref();
    out.name = format!("{} (corrupted S(y{i}))", h.name);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::NCPoly;
    use crate::presentations::BParams;
    use crate::scalars::zeta;

    fn b23() -> HopfPresentation {
        BParams::new(1, vec![2, 3], zeta(6, 1), vec![0.into(), 1.into()]).into()
    }

    #[test]
    fn b23_has_eight_rules() {
        let h = b23().build().unwrap();
        assert_eq!(h.rs.rules().len(), 8);
        let last = h.rs.rules().last().unwrap();
        assert_eq!(last.label, "y2*y2*y2");
        assert_eq!(last.rhs.display(&h.alphabet), "-1 + x*x*x*x*x*x + y1*y1");
    }

    #[test]
    fn b23_normal_forms() {
        let h = b23().build().unwrap();
        use Generator::*;
        let nf = h.rs.normal_form_word(&[Y(2), Y(1)]).unwrap();
        assert_eq!(nf.to_string(), "y1*y2");
        let nf = h.rs.normal_form_word(&[Y(1), X]).unwrap();
        assert_eq!(nf.to_string(), "-x*y1");
        assert_eq!(h.rs.normal_form_word(&[X, XInv]).unwrap(), NCPoly::one(2));
    }

    #[test]
    fn comparison_rule_counts() {
        let a = HopfPresentation::Comparison(ComparisonPresentation::A {
            n: 1,
            q: zeta(5, 1),
        })
        .build()
        .unwrap();
        assert_eq!(a.rs.rules().len(), 4);
        let c = HopfPresentation::Comparison(ComparisonPresentation::C { n: 3 })
            .build()
            .unwrap();
        assert_eq!(c.rs.rules().len(), 4);
        let nf =
            c.rs.normal_form_word(&[Generator::Y(1), Generator::X])
                .unwrap();
        assert_eq!(nf.display(&c.alphabet), "-y + y*x + y^3");
    }

    #[test]
    fn degenerate_rank_one() {
        let k = KParams::from_modulus(7, vec![7], vec![zeta(7, 1)], vec![0.into()]).unwrap();
        let h = HopfPresentation::K(k).build().unwrap();
        assert_eq!(h.rs.rules().len(), 4);
    }
}

#[cfg(test)]
mod confluence_tests {
    use super::*;
    use crate::ncpoly::certify_confluence;
    use crate::presentations::BParams;
    use crate::scalars::zeta;

    #[test]
    fn certified_and_corrupted() {
        let pres: Vec<HopfPresentation> = vec![
            BParams::new(1, vec![2, 3], zeta(6, 1), vec![0.into(), 1.into()]).into(),
            BParams::new(
                1,
                vec![2, 3, 5],
                zeta(30, 1),
                vec![0.into(), 1.into(), 2.into()],
            )
            .into(),
            KParams::from_modulus(
                2,
                vec![2, 2],
                vec![(-1).into(), (-1).into()],
                vec![0.into(), 1.into()],
            )
            .unwrap()
            .into(),
            HopfPresentation::Comparison(ComparisonPresentation::A {
                n: 2,
                q: zeta(5, 1),
            }),
            HopfPresentation::Comparison(ComparisonPresentation::C { n: 3 }),
        ];
        for p in &pres {
            let h = p.build().unwrap();
            let rep = certify_confluence(&h.rs, &h.alphabet).unwrap();
            assert!(
                rep.is_confluent(),
                "{}: {:?}",
                p.name(),
                rep.failures().collect::<Vec<_>>()
            );
            assert!(!rep.results.is_empty());
        }
        let bad = corrupt_commutation(&pres[0]).unwrap();
        let rep = certify_confluence(&bad.rs, &bad.alphabet).unwrap();
        assert!(!rep.is_confluent());
    }
}
