use hopfgk::classify::{ext_vanishes, invariant_set, iso_test};
use hopfgk::hopfops::{check_hopf_axioms, AxiomOptions, HopfContext};
use hopfgk::ncpoly::{
    Budget, FreePoly, Generator, NCPoly, NFMonomial, RewriteOptions, Strategy as Rw,
};
use hopfgk::presentations::{
    BParams, ComparisonPresentation, HopfAlgebra, HopfPresentation, KParams,
};
use hopfgk::scalars::{nth_root, qbinom, zeta, CycloScalar, Field, RootOfUnity};
use num_rational::BigRational;
use proptest::prelude::*;

fn b23() -> HopfAlgebra<CycloScalar> {
    HopfPresentation::from(BParams::new(
        1,
        vec![2, 3],
        zeta(6, 1),
        vec![0.into(), 1.into()],
    ))
    .build()
    .unwrap()
}

fn k22() -> HopfAlgebra<CycloScalar> {
    HopfPresentation::from(KParams::new(
        2,
        vec![1, 1],
        vec![2, 2],
        vec![(-1).into(), (-1).into()],
        vec![0.into(), 1.into()],
    ))
    .build()
    .unwrap()
}

fn scalar() -> impl Strategy<Value = CycloScalar> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]),
        prop::collection::vec(-3i64..=3, 1..4),
    )
        .prop_map(|(l, cs)| {
            cs.iter()
                .enumerate()
                .fold(CycloScalar::from_int(0), |acc, (e, &c)| {
                    acc.add_ref(&zeta(l, e as i64).mul_ref(&CycloScalar::from_int(c)))
                })
        })
}

fn word(s: u8, max: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(0..s + 2, 0..max).prop_map(|v| {
        v.into_iter()
            .map(|g| match g {
                0 => Generator::XInv,
                1 => Generator::X,
                i => Generator::Y(i - 1),
            })
            .collect()
    })
}

fn nf(h: &HopfAlgebra<CycloScalar>, w: &[Generator], strategy: Rw) -> NCPoly<CycloScalar> {
    let opts = RewriteOptions {
        strategy,
        check_order: true,
    };
    h.rs.normal_form_with(&FreePoly::word(w.to_vec()), &opts, &mut Budget::default())
        .unwrap()
}

/// `[w choose j]_q` by the product formula.
fn qbinom_product(w: u32, j: u32, q: &CycloScalar) -> CycloScalar {
    let bracket = |n: u32| {
        (0..n).fold(CycloScalar::from_int(0), |acc, k| {
            acc.add_ref(&q.pow_i64(k as i64).unwrap())
        })
    };
    let fact = |n: u32| (1..=n).fold(CycloScalar::from_int(1), |acc, k| acc.mul_ref(&bracket(k)));
    fact(w).mul_ref(&fact(j).mul_ref(&fact(w - j)).inverse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        if let Some(ai) = a.inverse() {
            prop_assert!(a.mul_ref(&ai).is_one_exact());
        } else {
            prop_assert!(num_traits::Zero::is_zero(&a));
        }
    }

    #[test]
    fn qbinom_matches_product_formula(l in 2u32..13, k in 1i64..12, w in 0u32..7, j in 0u32..7) {
        let q = zeta(l, k);
        prop_assume!(j <= w);
        // the product formula divides by q-integers, which vanish once the order divides one of them
        prop_assume!((1..=w).all(|n| n % RootOfUnity::new(l, k).order() != 0));
        prop_assert_eq!(qbinom(w, j, &q).unwrap(), qbinom_product(w, j, &q));
    }

    #[test]
    fn nth_roots_of_roots_of_unity(l in 1u32..25, k in 0i64..25, n in 1u32..5) {
        let a = zeta(l, k);
        let r = nth_root(&a, n).unwrap();
        prop_assert_eq!(r.pow_i64(n as i64).unwrap(), a);
    }

    #[test]
    fn normal_form_idempotent_and_strategy_free(w in word(2, 9)) {
        let h = b23();
        let a = nf(&h, &w, Rw::LeftmostInnermost);
        let b = nf(&h, &w, Rw::RightmostOutermost);
        prop_assert_eq!(&a, &b);
        let again = h.rs.normal_form(&a.to_free()).unwrap();
        prop_assert_eq!(a, again);
    }

    #[test]
    fn multiplication_associative(u in word(2, 5), v in word(2, 5), t in word(2, 5)) {
        let h = k22();
        let ctx = HopfContext::new(&h);
        let (a, b, c) = (nf(&h, &u, Rw::default()), nf(&h, &v, Rw::default()), nf(&h, &t, Rw::default()));
        let left = ctx.mul(&ctx.mul(&a, &b).unwrap(), &c).unwrap();
        let right = ctx.mul(&a, &ctx.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let mut all = u.clone();
        all.extend(v.iter().copied());
        all.extend(t.iter().copied());
        prop_assert_eq!(left, nf(&h, &all, Rw::default()));
    }

    #[test]
    fn rational_and_cyclotomic_routes_agree(w in word(2, 8)) {
        let h = k22();
        let hr: HopfAlgebra<BigRational> = h.map_coefficients(|c| c.to_rational()).unwrap();
        let cyc = nf(&h, &w, Rw::default());
        let rat = hr.rs.normal_form(&FreePoly::word(w.clone())).unwrap();
        prop_assert_eq!(cyc.map_coefficients(|c| c.to_rational()).unwrap(), rat);
    }

    #[test]
    fn central_elements(w in word(2, 6)) {
        let h = b23();
        let ctx = HopfContext::new(&h);
        let z = nf(&h, &w, Rw::default());
        let central = [
            NCPoly::monomial(NFMonomial::x_power(6, 2), CycloScalar::from_int(1)),
            NCPoly::monomial(NFMonomial::y_power(1, 2, 2), CycloScalar::from_int(1)),
            ctx.normal_form_word(&[Generator::Y(2); 3]).unwrap(),
        ];
        for c in &central {
            prop_assert_eq!(ctx.mul(c, &z).unwrap(), ctx.mul(&z, c).unwrap());
        }
    }
}

#[test]
fn power_relation_for_all_pairs() {
    let k = BParams::new(
        1,
        vec![2, 3, 5],
        zeta(30, 1),
        vec![0.into(), 1.into(), 3.into()],
    )
    .to_k();
    let h = HopfPresentation::from(k.clone()).build().unwrap();
    let ctx = HopfContext::new(&h);
    for i in 0..3 {
        for j in 0..3 {
            let yi = ctx
                .normal_form_word(&vec![Generator::Y(i as u8 + 1); k.p[i] as usize])
                .unwrap();
            let yj = ctx
                .normal_form_word(&vec![Generator::Y(j as u8 + 1); k.p[j] as usize])
                .unwrap();
            let mut want = NCPoly::monomial(NFMonomial::x_power(k.m, 3), CycloScalar::from_int(1));
            want.add_term(NFMonomial::one(3), &CycloScalar::from_int(-1));
            let want = want.scale(&k.alpha[j].sub_ref(&k.alpha[i]));
            assert_eq!(yj.sub(&yi), want, "i = {i}, j = {j}");
        }
    }
}

#[test]
fn rational_route_hopf_axioms() {
    for pres in [
        HopfPresentation::from(ComparisonPresentation::A { n: 1, q: 1.into() }),
        HopfPresentation::from(ComparisonPresentation::C { n: 3 }),
    ] {
        let h = pres.build().unwrap();
        let hr: HopfAlgebra<BigRational> = h.map_coefficients(|c| c.to_rational()).unwrap();
        assert!(check_hopf_axioms(&hr, &AxiomOptions::with_cap(4))
            .unwrap()
            .all_pass());
    }
}

fn iso_pool() -> Vec<KParams> {
    let mut pool = Vec::new();
    for k in [1i64, 5] {
        for alpha in [[0i64, 1], [0, 2], [0, -1], [3, 4], [1, 1], [0, 0]] {
            pool.push(
                BParams::new(
                    1,
                    vec![2, 3],
                    zeta(6, k),
                    alpha.iter().map(|&a| a.into()).collect(),
                )
                .to_k(),
            );
        }
    }
    let k = BParams::new(1, vec![2, 3], zeta(6, 1), vec![0.into(), 1.into()]).to_k();
    let mut swapped = k.clone();
    swapped.n.reverse();
    swapped.p.reverse();
    swapped.q.reverse();
    swapped.alpha = vec![5.into(), 3.into()];
    pool.push(swapped);
    pool.push(BParams::new(1, vec![2, 5], zeta(10, 3), vec![0.into(), zeta(4, 1)]).to_k());
    pool.push(BParams::new(1, vec![2, 5], zeta(10, 3), vec![0.into(), 1.into()]).to_k());
    pool.push(BParams::new(1, vec![3, 4], zeta(12, 5), vec![0.into(), 1.into()]).to_k());
    assert!(pool.iter().all(|k| k.validate().is_valid()));
    pool
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn iso_is_an_equivalence(i in 0usize..16, j in 0usize..16, k in 0usize..16) {
        let pool = iso_pool();
        let (a, b, c) = (&pool[i], &pool[j], &pool[k]);
        prop_assert!(iso_test(a, a).unwrap().is_some());
        let ab = iso_test(a, b).unwrap();
        let ba = iso_test(b, a).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let (Some(x), Some(y)) = (&ab, &ba) {
            prop_assert!(x.c.mul_ref(&y.c).is_one_exact());
        }
        if let (Some(x), Some(y)) = (&ab, iso_test(b, c).unwrap()) {
            let ac = iso_test(a, c).unwrap();
            prop_assert!(ac.is_some());
            prop_assert_eq!(ac.unwrap().c, x.c.mul_ref(&y.c));
        }
        if ab.is_some() {
            prop_assert_eq!(invariant_set(a), invariant_set(b));
            prop_assert_eq!(ext_vanishes(a), ext_vanishes(b));
        }
    }
}
