//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfgk::classify::{ext_vanishes, invariant_set, is_domain, iso_test};
use hopfgk::heckenberger::{
    lemma41_case, matching_cases, omega_checks, prop42_case, prop42_hypotheses, supplementary_type,
    BraidingMatrix, DiagonalDatum, Prop42Case, SupplementaryType,
};
use hopfgk::hopfops::{
    check_hopf_axioms, ext1_dimension, find_zero_divisors, qbinom_expansion, AxiomOptions,
    DegreeMeasure, HopfContext, PrimitiveOptions, PrimitiveSolver, TensorPoly, ZeroDivisorOptions,
};
use hopfgk::ncpoly::{certify_confluence, x_power_word, Generator, NFMonomial};
use hopfgk::presentations::{
    corrupt_commutation, to_b_form, BParams, ComparisonPresentation, HopfPresentation, KParams,
};
use hopfgk::scalars::{zeta, CycloScalar, Field, RootOfUnity};
use num_integer::Integer;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<(T, Duration), String> {
    let t = Instant::now();
    let out = f();
    let dt = t.elapsed();
    ensure(dt <= limit, || format!("{what} took {dt:?} > {limit:?}"))?;
    Ok((out, dt))
}

fn b(n: i64, p: &[u32], q: CycloScalar, alpha: &[i64]) -> BParams {
    BParams::new(n, p.to_vec(), q, alpha.iter().map(|&a| a.into()).collect())
}

fn b23() -> BParams {
    b(1, &[2, 3], zeta(6, 1), &[0, 1])
}

fn b235() -> BParams {
    b(1, &[2, 3, 5], zeta(30, 1), &[0, 1, 2])
}

fn k22() -> KParams {
    KParams::new(
        2,
        vec![1, 1],
        vec![2, 2],
        vec![(-1).into(), (-1).into()],
        vec![0.into(), 1.into()],
    )
}

fn kb_instances() -> Vec<HopfPresentation> {
    vec![b23().into(), b235().into(), k22().into()]
}

fn c1_confluence() -> Check {
    let mut instances = kb_instances();
    instances.push(
        ComparisonPresentation::A {
            n: 2,
            q: zeta(5, 1),
        }
        .into(),
    );
    instances.push(ComparisonPresentation::C { n: 3 }.into());
    let mut worst = Duration::ZERO;
    let mut total = 0;
    for pres in &instances {
        let (report, dt) = timed(Duration::from_secs(10), &pres.name(), || {
            let h = pres.build().map_err(|e| e.to_string())?;
            certify_confluence(&h.rs, &h.alphabet).map_err(|e| e.to_string())
        })?;
        let report = report?;
        ensure(report.is_confluent(), || {
            format!("{} has unresolved ambiguities", pres.name())
        })?;
        total += report.results.len();
        worst = worst.max(dt);
    }
    let bad = corrupt_commutation(&b23().into()).map_err(|e| e.to_string())?;
    let report = certify_confluence(&bad.rs, &bad.alphabet).map_err(|e| e.to_string())?;
    ensure(!report.is_confluent(), || {
        "corrupted control certified confluent".into()
    })?;
    Ok(format!(
        "5 instances, {total} ambiguities resolved, control fails, max {worst:.2?}"
    ))
}

fn c2_axioms() -> Check {
    let mut out = Vec::new();
    for pres in kb_instances() {
        let h = pres.build().map_err(|e| e.to_string())?;
        // weighted degree as specified, then plain y-degree, which reaches further on B235
        let (checked, dt) = timed(Duration::from_secs(60), &pres.name(), || {
            let mut checked = 0;
            for measure in [DegreeMeasure::Weighted, DegreeMeasure::Total] {
                let opts = AxiomOptions {
                    window: 12,
                    measure,
                    ..AxiomOptions::with_cap(6)
                };
                let r = check_hopf_axioms(&h, &opts).map_err(|e| e.to_string())?;
                ensure(r.all_pass(), || {
                    format!("{} {measure:?}: {:?}", pres.name(), r.failures.first())
                })?;
                checked += r.monomials_checked;
            }
            Ok::<_, String>(checked)
        })?;
        out.push(format!(
            "{} ({} monomials, {dt:.1?})",
            pres.name(),
            checked?
        ));
    }
    Ok(out.join(", "))
}

fn ext1_of(p: impl Into<HopfPresentation>) -> Result<usize, String> {
    Ok(ext1_dimension(
        &p.into().build().map_err(|e| e.to_string())?,
    ))
}

fn c3_ext1() -> Check {
    ensure(
        ext1_of(ComparisonPresentation::A {
            n: 1,
            q: zeta(5, 1),
        })? == 1,
        || "A(1, zeta5)".into(),
    )?;
    ensure(
        ext1_of(ComparisonPresentation::A { n: 1, q: 1.into() })? == 2,
        || "A(1, 1)".into(),
    )?;
    ensure(ext1_of(b23())? == 0, || "B23 alpha (0,1)".into())?;
    ensure(ext1_of(b(1, &[2, 3], zeta(6, 1), &[0, 0]))? >= 1, || {
        "B23 alpha (0,0)".into()
    })?;
    let sets: &[&[u32]] = &[
        &[2, 3],
        &[2, 5],
        &[3, 4],
        &[2, 7],
        &[3, 5],
        &[2, 9],
        &[4, 5],
        &[2, 11],
        &[3, 7],
        &[2, 13],
        &[3, 8],
        &[4, 7],
        &[5, 6],
        &[2, 3, 5],
    ];
    let mut grid = 0;
    for p in sets {
        let ell: u32 = p.iter().product();
        let k = (2..ell).find(|k| k.gcd(&ell) == 1).unwrap_or(1);
        let s = p.len();
        for alpha in [vec![0; s], (0..s as i64).collect(), {
            let mut a = vec![3; s];
            a[s - 1] = -1;
            a
        }] {
            let params = b(1, p, zeta(ell, k as i64), &alpha);
            if !params.to_k().validate().is_valid() {
                continue;
            }
            grid += 1;
            let e = ext1_of(params.clone())?;
            let distinct = alpha.iter().any(|a| *a != alpha[0]);
            ensure((e == 0) == distinct, || {
                format!("ext1 = {e} for p = {p:?}, alpha = {alpha:?}")
            })?;
        }
    }
    ensure(grid >= 20, || format!("grid has {grid} instances"))?;
    Ok(format!("pins 1, 2, 0, >=1; grid of {grid} B instances"))
}

fn k_grid() -> Vec<KParams> {
    let mut out = Vec::new();
    for m in 2..=36i64 {
        for p1 in 2..=m as u32 {
            for p2 in p1..=m as u32 {
                if m % p1 as i64 != 0 || m % p2 as i64 != 0 {
                    continue;
                }
                let mut found = 0;
                'q: for k1 in 1..p1 as i64 {
                    for k2 in 1..p2 as i64 {
                        let k = KParams::from_modulus(
                            m,
                            vec![p1, p2],
                            vec![zeta(p1, k1), zeta(p2, k2)],
                            vec![0.into(), 1.into()],
                        )
                        .expect("divisors");
                        if k.validate().is_valid() {
                            out.push(k);
                            found += 1;
                            if found == 2 {
                                break 'q;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn c4_domain() -> Check {
    let grid = k_grid();
    let (mut domains, mut others) = (0, 0);
    for k in &grid {
        let d = is_domain(k).map_err(|e| e.to_string())?;
        let bf = to_b_form(k).params;
        ensure(d == bf.is_some(), || {
            format!("is_domain = {d} but B-form {bf:?} for {k:?}")
        })?;
        if d {
            domains += 1;
        } else {
            others += 1;
        }
    }
    ensure(grid.len() >= 30 && domains > 0 && others > 0, || {
        format!("grid {domains}/{others}")
    })?;
    let h = HopfPresentation::from(k22())
        .build()
        .map_err(|e| e.to_string())?;
    let search = find_zero_divisors(
        &h,
        &ZeroDivisorOptions {
            cap: 4,
            budget: 1_000_000,
        },
    )
    .map_err(|e| e.to_string())?;
    let w = search.witness.ok_or("no zero divisor found for K22")?;
    let ctx = HopfContext::new(&h);
    ensure(!w.a.is_zero() && !w.b.is_zero(), || {
        "trivial witness".into()
    })?;
    ensure(
        ctx.mul(&w.a, &w.b).map_err(|e| e.to_string())?.is_zero(),
        || "a*b != 0".into(),
    )?;
    ensure(search.steps <= 1_000_000, || {
        format!("{} steps", search.steps)
    })?;
    Ok(format!(
        "{} KParams ({domains} domains, {others} not); K22 witness after {} steps",
        grid.len(),
        search.steps
    ))
}

fn c5_primitives() -> Check {
    let h = HopfPresentation::from(b23())
        .build()
        .map_err(|e| e.to_string())?;
    let solver =
        PrimitiveSolver::new(&h, &PrimitiveOptions::with_cap(6)).map_err(|e| e.to_string())?;
    let mut found = Vec::new();
    for g in -12..=12 {
        let r = solver.solve(g).map_err(|e| e.to_string())?;
        ensure(r.dim_quotient <= 1, || {
            format!("dim P' = {} at x^{g}", r.dim_quotient)
        })?;
        ensure(r.eigenspaces.iter().all(|e| e.dim_level1 <= 1), || {
            format!("level-1 dim > 1 at x^{g}")
        })?;
        for rec in &r.records {
            found.push((g, rec.commutator.clone(), rec.level));
        }
    }
    let want = vec![
        (2, zeta(3, 2), 1),
        (3, CycloScalar::from_int(-1), 1),
        (6, CycloScalar::from_int(1), 1),
    ];
    ensure(found == want, || format!("got {found:?}"))?;
    Ok("weights {x^2, x^3, x^6}, commutators zeta3^2, -1, 1 at level 1".into())
}

/// Gaussian binomial by summing `t^{sum S - j(j-1)/2}` over `j`-subsets `S` of `{0, .., w-1}`.
fn gaussian(w: u32, j: u32, t: &CycloScalar) -> CycloScalar {
    let mut total = CycloScalar::from_int(0);
    for mask in 0u32..(1 << w) {
        if mask.count_ones() != j {
            continue;
        }
        let sum: u32 = (0..w).filter(|b| mask >> b & 1 == 1).sum();
        total = total.add_ref(
            &t.pow_i64((sum - j * (j.saturating_sub(1)) / 2) as i64)
                .unwrap(),
        );
    }
    total
}

fn c6_qbinom() -> Check {
    let mut instances = kb_instances();
    instances.push(b(1, &[2, 3], zeta(6, 5), &[0, 0]).into());
    instances.push(b(1, &[2, 5], zeta(10, 3), &[0, 1]).into());
    instances.push(b(1, &[3, 4], zeta(12, 5), &[1, 0]).into());
    let mut checked = 0;
    for pres in &instances {
        let h = pres.build().map_err(|e| e.to_string())?;
        let k = pres.k_params().ok_or("not a K/B instance")?;
        let ctx = HopfContext::new(&h);
        for i in 1..=k.s {
            let lambda = k.lambda(i - 1);
            for w in 0..=6u32 {
                let word = vec![Generator::Y(i as u8); w as usize];
                let delta = ctx.coproduct_word(&word).map_err(|e| e.to_string())?;
                let expansion = qbinom_expansion(&ctx, i, w, &lambda).map_err(|e| e.to_string())?;
                let mut oracle = TensorPoly::zero();
                for j in 0..=w {
                    let mut left = x_power_word(k.n[i - 1] * (w - j) as i64);
                    left.extend(std::iter::repeat_n(Generator::Y(i as u8), j as usize));
                    let l = ctx.normal_form_word(&left).map_err(|e| e.to_string())?;
                    let r = ctx
                        .normal_form_word(&NFMonomial::y_power(i, w - j, k.s).to_word())
                        .map_err(|e| e.to_string())?;
                    oracle.add_outer(&l, &r, &gaussian(w, j, &lambda));
                }
                ensure(delta == expansion && delta == oracle, || {
                    format!("{} y{i}^{w}", pres.name())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} coproducts on {} instances",
        instances.len()
    ))
}

fn z(n: u32, k: i64) -> RootOfUnity {
    RootOfUnity::new(n, k)
}

/// `(label, q11, q12 q21, q22)`, built by hand from each sub-case.
fn lemma41_table() -> Vec<(&'static str, RootOfUnity, RootOfUnity, RootOfUnity)> {
    vec![
        ("1", z(5, 1), z(1, 0), z(7, 1)),
        ("2.1", z(5, 4), z(5, 1), z(5, 4)),
        ("2.2", z(2, 1), z(5, 1), z(5, 4)),
        ("2.3", z(7, 1), z(7, 5), z(7, 2)),
        ("2.4", z(7, 1), z(7, 4), z(7, 3)),
        ("2.5", z(3, 1), z(5, 1), z(5, 4)),
        ("2.6", z(4, 1), z(8, 1), z(8, 7)),
        ("2.7", z(4, 1), z(24, 1), z(24, 23)),
        ("2.8", z(5, 2), z(30, 1), z(30, 29)),
        ("3.1", z(2, 1), z(5, 1), z(2, 1)),
        ("3.2", z(3, 1), z(3, 1), z(2, 1)),
        ("3.3", z(3, 1), z(4, 3), z(2, 1)),
        ("3.4", z(3, 2), z(12, 1), z(2, 1)),
        ("3.5", z(3, 2), z(9, 1), z(2, 1)),
        ("3.6", z(3, 2), z(24, 1), z(2, 1)),
        ("3.7", z(3, 2), z(30, 1), z(2, 1)),
        ("4.1", z(5, 1), z(5, 3), z(2, 1)),
        ("4.2", z(5, 1), z(5, 2), z(2, 1)),
        ("4.3", z(10, 1), z(5, 3), z(2, 1)),
        ("4.4", z(14, 1), z(14, 9), z(2, 1)),
        ("4.5", z(4, 3), z(8, 1), z(2, 1)),
        ("4.6", z(4, 3), z(12, 1), z(2, 1)),
        ("4.7", z(5, 4), z(20, 1), z(2, 1)),
        ("4.8", z(5, 4), z(30, 1), z(2, 1)),
        ("5.1", z(3, 1), z(4, 3), z(3, 2)),
        ("5.2", z(3, 2), z(12, 1), z(3, 2)),
        ("5.3", z(4, 3), z(24, 1), z(3, 2)),
        ("5.4", z(18, 1), z(18, 16), z(3, 2)),
        ("5.5", z(30, 1), z(30, 27), z(3, 2)),
    ]
}

fn c7_case_machine() -> Check {
    let table = lemma41_table();
    let labels: std::collections::BTreeSet<_> = hopfgk::heckenberger::case_labels().collect();
    for (label, q11, pq, q22) in &table {
        // split pq unevenly between q12 and q21
        let (q12, q21) = (*pq * z(7, 3), z(7, 4));
        let m = BraidingMatrix::new(*q11, q12, q21, *q22);
        ensure(matching_cases(&m).contains(label), || {
            format!("{label} not matched by {m:?}")
        })?;
        ensure(!lemma41_case(&m).is_none(), || {
            format!("{label}: verdict none")
        })?;
        let sw = lemma41_case(&m.swap());
        ensure(
            sw.matches.iter().any(|c| c.label == *label && c.swapped),
            || format!("{label} lost under swap"),
        )?;
    }
    let covered: std::collections::BTreeSet<_> = table.iter().map(|t| t.0).collect();
    ensure(covered == labels, || "table misses a sub-case".into())?;
    let generic = BraidingMatrix::new(z(7, 1), z(11, 1), z(1, 0), z(13, 1));
    ensure(lemma41_case(&generic).is_none(), || {
        "generic matrix matched".into()
    })?;

    let (res, dt) = timed(Duration::from_secs(300), "sweep", || {
        let mut checked = 0;
        let mut bad = 0;
        for n1 in 1..=3u32 {
            for n2 in 1..=3u32 {
                if n1.gcd(&n2) != 1 {
                    continue;
                }
                for eps in 1..=8u32 {
                    for k1 in (0..n2 * eps).filter(|k| k.gcd(&(n2 * eps)) == 1) {
                        for k2 in (0..n1 * eps).filter(|k| k.gcd(&(n1 * eps)) == 1) {
                            let d = DiagonalDatum::new(
                                n1,
                                n2,
                                z(n2 * eps, k1 as i64),
                                z(n1 * eps, k2 as i64),
                            );
                            if !prop42_hypotheses(&d, eps) {
                                continue;
                            }
                            checked += 1;
                            if !lemma41_case(&d.braiding()).is_none()
                                && prop42_case(&d, eps).case == Prop42Case::None
                            {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
        (checked, bad)
    })?;
    let (checked, bad) = res;
    ensure(bad == 0, || {
        format!("{bad} inputs match the sub-case table but no case")
    })?;
    Ok(format!(
        "{} hand matrices cover all sub-cases; sweep of {checked} data, 0 misses, {dt:.1?}",
        table.len()
    ))
}

/// Pattern membership by exponent arithmetic modulo 2520.
fn supplementary_oracle(n1: u32, n2: u32, q1: RootOfUnity, q2: RootOfUnity) -> SupplementaryType {
    const L: u64 = 2520;
    if !L.is_multiple_of(q1.order() as u64) || !L.is_multiple_of(q2.order() as u64) {
        return SupplementaryType::None;
    }
    let e = |r: RootOfUnity| r.exponent() as u64 * (L / r.order() as u64) % L;
    let ord = |x: u64| L / L.gcd(&x);
    let check = |a: u32, b: u32, x: u64, y: u64| match (a, b) {
        (1, 1) if ord(x) == 5 && y == 2 * x % L => Some(SupplementaryType::N5),
        (1, 1) if ord(x) == 7 && y == 3 * x % L => Some(SupplementaryType::N7),
        (1, 2) if ord(x) == 10 && y == 6 * x % L => Some(SupplementaryType::N10),
        (1, 3) if ord(x) == 21 && y == 15 * x % L => Some(SupplementaryType::N21),
        _ => None,
    };
    let (x, y) = (e(q1), e(q2));
    check(n1, n2, x, y)
        .or_else(|| check(n2, n1, y, x))
        .unwrap_or(SupplementaryType::None)
}

fn c8_supplementary() -> Check {
    let roots: Vec<RootOfUnity> = (1..=30u32)
        .flat_map(|n| {
            (0..n)
                .filter(move |k| n == 1 || k.gcd(&n) == 1)
                .map(move |k| z(n, k as i64))
        })
        .collect();
    let mut seen = std::collections::BTreeMap::new();
    for n1 in 1..=3 {
        for n2 in 1..=3 {
            for &q1 in &roots {
                for &q2 in &roots {
                    let t = supplementary_type(&DiagonalDatum::new(n1, n2, q1, q2));
                    let want = supplementary_oracle(n1, n2, q1, q2);
                    ensure(t == want, || {
                        format!("n = ({n1},{n2}), q = ({q1:?},{q2:?}): {t} vs {want}")
                    })?;
                    *seen.entry(t.to_string()).or_insert(0usize) += 1;
                }
            }
        }
    }
    ensure(seen.len() == 5, || format!("patterns seen: {seen:?}"))?;
    let sets: &[&[u32]] = &[
        &[2, 3],
        &[2, 5],
        &[3, 7],
        &[5, 7],
        &[2, 3, 5],
        &[3, 4],
        &[2, 7],
        &[3, 5],
    ];
    let mut grid = 0;
    for p in sets {
        let ell: u32 = p.iter().product();
        for k in (1..ell).filter(|k| k.gcd(&ell) == 1) {
            let kp = b(
                1,
                p,
                zeta(ell, k as i64),
                &(0..p.len() as i64).collect::<Vec<_>>(),
            )
            .to_k();
            let r = omega_checks(&kp).map_err(|e| e.to_string())?;
            let small = (0..kp.s).any(|i| {
                let o = RootOfUnity::from_scalar(&kp.lambda(i))
                    .expect("root of unity")
                    .order();
                o == 5 || o == 7
            });
            ensure(r.omega_prime == !small, || {
                format!("omega' wrong for p = {p:?}, k = {k}")
            })?;
            grid += 1;
        }
    }
    let counts: Vec<String> = seen.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Ok(format!(
        "sweep {}; omega' on {grid} B instances",
        counts.join(" ")
    ))
}

fn c9_iso() -> Check {
    let mut pool: Vec<KParams> = Vec::new();
    for k in [1i64, 5] {
        for alpha in [[0i64, 1], [0, 2], [0, -1], [3, 4], [1, 1], [0, 0], [2, 0]] {
            pool.push(b(1, &[2, 3], zeta(6, k), &alpha).to_k());
        }
    }
    for alpha in [[0i64, 1], [0, 3], [1, 1]] {
        pool.push(b(1, &[2, 5], zeta(10, 3), &alpha).to_k());
    }
    pool.push(b(1, &[3, 4], zeta(12, 5), &[0, 1]).to_k());
    pool.push(b(1, &[2, 3, 5], zeta(30, 7), &[0, 1, 2]).to_k());
    pool.push(b(1, &[2, 3, 5], zeta(30, 7), &[0, 2, 4]).to_k());
    for k in &pool {
        ensure(is_domain(k) == Ok(true), || {
            format!("{k:?} is not a valid domain")
        })?;
    }
    let n = pool.len();
    let mut w = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            w[i][j] = iso_test(&pool[i], &pool[j]).map_err(|e| e.to_string())?;
        }
    }
    let mut classes = 0;
    for i in 0..n {
        ensure(w[i][i].is_some(), || format!("{i} not reflexive"))?;
        if (0..i).all(|j| w[j][i].is_none()) {
            classes += 1;
        }
        for j in 0..n {
            ensure(w[i][j].is_some() == w[j][i].is_some(), || {
                format!("({i},{j}) not symmetric")
            })?;
            let Some(ij) = &w[i][j] else { continue };
            ensure(invariant_set(&pool[i]) == invariant_set(&pool[j]), || {
                format!("({i},{j}) invariants")
            })?;
            ensure(ext_vanishes(&pool[i]) == ext_vanishes(&pool[j]), || {
                format!("({i},{j}) ext")
            })?;
            for (k, jk) in w[j].iter().enumerate() {
                if let Some(jk) = jk {
                    let ik = w[i][k]
                        .as_ref()
                        .ok_or_else(|| format!("({i},{j},{k}) not transitive"))?;
                    ensure(ik.c == ij.c.mul_ref(&jk.c), || {
                        format!("({i},{j},{k}) scale")
                    })?;
                }
            }
        }
    }
    let pin = iso_test(&b23().to_k(), &b(1, &[2, 3], zeta(6, 1), &[0, 2]).to_k())
        .map_err(|e| e.to_string())?
        .ok_or("(0,1) vs (0,2) absent")?;
    ensure(pin.c == CycloScalar::from_int(2), || {
        format!("c = {}", pin.c)
    })?;
    let none = iso_test(&b23().to_k(), &b(1, &[2, 3], zeta(6, 1), &[0, 0]).to_k())
        .map_err(|e| e.to_string())?;
    ensure(none.is_none(), || "(0,1) vs (0,0) present".into())?;
    Ok(format!(
        "pool of {n} domains in {classes} classes; pins c = 2 and absent"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("PBW confluence", c1_confluence),
        ("Hopf axioms", c2_axioms),
        ("Ext1 pins and grid", c3_ext1),
        ("domain criterion", c4_domain),
        ("skew primitives of B23", c5_primitives),
        ("q-binomial coproduct", c6_qbinom),
        ("case machine", c7_case_machine),
        ("supplementary and omega", c8_supplementary),
        ("isomorphism invariants", c9_iso),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or(e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match r {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
