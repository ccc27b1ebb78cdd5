//! Acceptance suite: one PASS/FAIL line per criterion, each timed against a
//! five second budget.

mod common;

use std::collections::BTreeMap;
use std::panic;
use std::time::{Duration, Instant};

use common::*;
use monoquiver::construct::ConstructionKind;
use monoquiver::homology::verify_prop1_formula;
use monoquiver::render::ModuleDiagram;
use monoquiver::{
    achieve_gldim, build_i, check_strongly_qh, decide_gldim2_exists, gldim, pdim, relabel, render_module_quiver,
    verify_sequence_identities, Algebra, CompositionVector, ExtNat, Field, ModuleSpec, Plan, Quiver, RelationSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fin(k: usize) -> ExtNat {
    ExtNat::Finite(k)
}

fn sqh(alg: &Algebra) -> bool {
    check_strongly_qh(alg).unwrap().verdict
}

fn c1_golden_example() -> Outcome {
    let a = example_i();
    let b = example_iprime();
    ensure!(gldim(&a).unwrap() == fin(2), "gldim kQ/I = {}", gldim(&a).unwrap());
    ensure!(gldim(&b).unwrap() == fin(3), "gldim kQ/I' = {}", gldim(&b).unwrap());
    ensure!(sqh(&a) && sqh(&b), "strongly quasi-hereditary check failed");
    Ok("gldim 2 and 3, both strongly quasi-hereditary".into())
}

fn c2_example_generators() -> Outcome {
    let q = example_quiver();
    let built = build_i(&q).unwrap();
    let mut got: Vec<String> = built.generators().iter().map(|p| q.composition_string(p)).collect();
    got.sort();
    ensure!(got == ["cb", "cf", "da", "eb", "ef"], "generators {got:?}");
    let words: Vec<&[&str]> = EXAMPLE_I.iter().map(|w| &w[..]).collect();
    ensure!(
        built == RelationSet::from_names(&q, &words).unwrap(),
        "relation sets differ"
    );
    Ok(format!("{got:?}"))
}

fn c3_local_max_resolutions() -> Outcome {
    let q = Quiver::complete(4, 1);
    let alg = local_max(&q);
    let s1 = ModuleSpec::simple(&q, 1).unwrap();
    let res = resolve_checked(&alg, &s1, None);
    let expected = vec![
        BTreeMap::from([(1, 1)]),
        BTreeMap::from([(2, 1), (3, 1), (4, 1)]),
        BTreeMap::from([(1, 3), (2, 2), (3, 1)]),
    ];
    ensure!(res.complete && res.betti == expected, "S(1): {:?}", res.betti);
    let mut quivers = vec![q];
    quivers.extend(random_suite());
    for (k, q) in quivers.iter().enumerate() {
        let alg = local_max(q);
        let mismatches = verify_prop1_formula(&alg).unwrap();
        ensure!(mismatches.is_empty(), "quiver {k}: {}", mismatches[0]);
        for i in q.vertices() {
            let res = resolve_checked(&alg, &ModuleSpec::simple(q, i).unwrap(), None);
            let want = local_max_betti(q, i);
            ensure!(res.betti == want, "quiver {k}, S({i}): {:?} vs {:?}", res.betti, want);
        }
    }
    Ok(format!("{} algebras match the closed form", quivers.len()))
}

fn c4_admissibility_bound() -> Outcome {
    let mut worst = 0;
    for (k, q) in random_suite().iter().enumerate() {
        let n = q.vertex_count();
        let alg = local_max(q);
        let nil = alg.require_admissible().map_err(|e| format!("quiver {k}: {e}"))?;
        let (count, longest) = brute_force_walks(&alg, 2_000_000).ok_or(format!("quiver {k}: walk cap hit"))?;
        ensure!(longest < 2 * n - 1, "quiver {k}: longest path {longest} with n = {n}");
        ensure!(nil == longest + 1, "quiver {k}: nilpotency {nil} vs longest {longest}");
        ensure!(
            alg.dim().unwrap() == count,
            "quiver {k}: dim {} vs {count}",
            alg.dim().unwrap()
        );
        worst = worst.max(longest);
    }
    Ok(format!("50 algebras, longest nonzero path {worst}"))
}

fn c5_small_examples() -> Outcome {
    let alg = one_loop();
    let q = alg.quiver();
    ensure!(
        pdim(&alg, &ModuleSpec::simple(q, 1).unwrap()).unwrap() == ExtNat::Infinite,
        "pdim S(1) finite"
    );
    ensure!(
        pdim(&alg, &ModuleSpec::projective(q, 1).unwrap()).unwrap() == fin(0),
        "pdim P(1) != 0"
    );
    ensure!(gldim(&alg).unwrap() == ExtNat::Infinite, "gldim finite");
    ensure!(!sqh(&alg), "loop algebra reported strongly quasi-hereditary");
    for n in 2..=8 {
        let alg = linear_consecutive(n);
        let q = alg.quiver();
        for i in 1..=n {
            let spec = ModuleSpec::simple(q, i).unwrap();
            let pd = pdim(&alg, &spec).unwrap();
            ensure!(pd == fin(n - i), "A_{n}: pdim S({i}) = {pd}");
            ensure!(
                resolve_checked(&alg, &spec, None).length() == Some(n - i),
                "A_{n}: resolution length"
            );
        }
        ensure!(gldim(&alg).unwrap() == fin(n - 1), "A_{n}: gldim");
        ensure!(sqh(&alg), "A_{n}: not strongly quasi-hereditary");
    }
    Ok("loop: inf/0/inf/not SQH; A_2..A_8: pdim S(i) = n-i".into())
}

fn c6_planner() -> Outcome {
    let q = Quiver::complete(6, 1);
    let mut routes = Vec::new();
    for k in 2..=5 {
        let plan = achieve_gldim(&q, k).unwrap();
        let Plan::Certified(cert) = plan else {
            return Err(format!("target {k}: {plan:?}"));
        };
        ensure!(
            cert.verified_gldim == fin(k),
            "target {k}: verified {}",
            cert.verified_gldim
        );
        let alg = Algebra::new(q.clone(), cert.ideal.clone()).unwrap();
        ensure!(gldim(&alg).unwrap() == fin(k), "target {k}: recomputed gldim");
        ensure!(
            cert.max_relation_len() <= 3,
            "target {k}: relation of length {}",
            cert.max_relation_len()
        );
        ensure!(cert.replay(&q).unwrap() == cert.ideal, "target {k}: replay differs");
        ensure!(
            sqh(&cert.relabeled_algebra(&q).unwrap()),
            "target {k}: not strongly quasi-hereditary"
        );
        routes.push(format!("{k}:{}", cert.kind.name()));
    }
    Ok(routes.join(" "))
}

fn c7_dichotomy() -> Outcome {
    // A_4 on 1..4 that cannot be closed up: I' gives m - 1
    let q = a4_non_extendable();
    let alg = iprime(&q, 4);
    let g3 = pdim(&alg, &ModuleSpec::gamma(&q, 3).unwrap()).unwrap();
    ensure!(g3 == fin(1), "A_4 variant: pdim Gamma(3) = {g3}");
    ensure!(
        gldim(&alg).unwrap() == fin(3),
        "A_4 variant: gldim {}",
        gldim(&alg).unwrap()
    );

    // X_4 with I': m
    let q = Quiver::complete(5, 1);
    let alg = iprime(&q, 4);
    let g3 = pdim(&alg, &ModuleSpec::gamma(&q, 3).unwrap()).unwrap();
    ensure!(g3 == fin(2), "X_4, I': pdim Gamma(3) = {g3}");
    ensure!(
        gldim(&alg).unwrap() == fin(4),
        "X_4, I': gldim {}",
        gldim(&alg).unwrap()
    );

    // X_4 with I'': m - 1, and m - 3 = 1
    let alg = idoubleprime(&q, 4);
    let s1 = pdim(&alg, &ModuleSpec::simple(&q, 1).unwrap()).unwrap();
    let g1 = pdim(&alg, &ModuleSpec::gamma(&q, 1).unwrap()).unwrap();
    ensure!(
        s1 == fin(3) && g1 == fin(3),
        "X_4, I'': pdim S(1) = {s1}, pdim Gamma(1) = {g1}"
    );
    ensure!(
        gldim(&alg).unwrap() == fin(3),
        "X_4, I'': gldim {}",
        gldim(&alg).unwrap()
    );

    // X_5 with I'': pdim S(1) = m - 1 = 4 and the Gamma recurrence below m - 3
    let alg = idoubleprime(&q, 5);
    let pd = |spec: ModuleSpec| pdim(&alg, &spec).unwrap();
    let s: Vec<ExtNat> = (1..=5).map(|i| pd(ModuleSpec::simple(&q, i).unwrap())).collect();
    let g: Vec<ExtNat> = (1..=4).map(|i| pd(ModuleSpec::gamma(&q, i).unwrap())).collect();
    ensure!(s[0] == fin(4), "X_5, I'': pdim S(1) = {}", s[0]);
    ensure!(
        s[1] == fin(3) && g[1] == fin(3),
        "X_5, I'': pdim S(2) = {}, Gamma(2) = {}",
        s[1],
        g[1]
    );
    ensure!(g[0] == g[1].plus(1) && s[0] == g[0], "X_5, I'': Gamma recurrence {g:?}");
    ensure!(
        gldim(&alg).unwrap() == fin(4),
        "X_5, I'': gldim {}",
        gldim(&alg).unwrap()
    );
    Ok("A_4 variant 1/3, X_4 I' 2/4, X_4 I'' 3/3, X_5 I'' 4/4".into())
}

/// Every multiset of at most three arrows on at most three vertices.
fn small_quivers() -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        let mut choose = |picked: &[usize]| {
            let arrows = picked
                .iter()
                .enumerate()
                .map(|(k, &p)| (format!("z{k}"), pairs[p].0, pairs[p].1));
            out.push(Quiver::new(n, arrows).unwrap());
        };
        choose(&[]);
        for a in 0..pairs.len() {
            choose(&[a]);
            for b in a..pairs.len() {
                choose(&[a, b]);
                for c in b..pairs.len() {
                    choose(&[a, b, c]);
                }
            }
        }
    }
    out
}

fn c8_gldim_two_decision() -> Outcome {
    let quivers = small_quivers();
    let mut positive = 0;
    for q in &quivers {
        let arrows: Vec<(usize, usize)> = q.arrows().map(|(_, a)| (a.source, a.target)).collect();
        let loopless = arrows.iter().all(|&(s, t)| s != t);
        let composable = arrows.iter().any(|&(_, t)| arrows.iter().any(|&(s, _)| s == t));
        let want = loopless && composable;
        let decision = decide_gldim2_exists(q);
        ensure!(decision.exists == want, "{arrows:?}: decided {}", decision.exists);
        if !want {
            continue;
        }
        positive += 1;
        let (path, sigma) = decision.witness.clone().ok_or(format!("{arrows:?}: no witness"))?;
        ensure!(path.len() == 2, "{arrows:?}: witness of length {}", path.len());
        let relabeled = relabel(q, &sigma).unwrap();
        let alg = local_max(&relabeled);
        ensure!(
            gldim(&alg).unwrap() == fin(2),
            "{arrows:?}: witness algebra gldim {}",
            gldim(&alg).unwrap()
        );
        let plan = achieve_gldim(q, 2).unwrap();
        let cert = plan.certificate().ok_or(format!("{arrows:?}: no certificate"))?;
        ensure!(
            cert.kind == ConstructionKind::GldimLE2 && cert.verified_gldim == fin(2),
            "{arrows:?}: {cert:?}"
        );
    }
    Ok(format!("{} quivers, {positive} positive", quivers.len()))
}

fn c9_oracle_equivalence() -> Outcome {
    let mut golden = vec![example_i(), example_iprime(), one_loop()];
    golden.push(local_max(&Quiver::complete(4, 1)));
    golden.push(iprime(&Quiver::complete(5, 1), 4));
    golden.push(idoubleprime(&Quiver::complete(5, 1), 4));
    golden.push(iprime(&a4_non_extendable(), 4));
    golden.extend((2..=8).map(linear_consecutive));
    let random = random_suite().iter().map(local_max).collect::<Vec<_>>();
    let mut algebras = 0;
    let mut modules = 0;
    for alg in golden.iter().chain(&random) {
        if alg.dim().unwrap() > 200 {
            continue;
        }
        algebras += 1;
        for p in [2, 101] {
            modules += engines_agree(alg, Field::new(p).unwrap(), 8)?;
        }
    }
    ensure!(algebras >= 40, "only {algebras} algebras below the size limit");
    Ok(format!(
        "{algebras} algebras, {modules} module resolutions over F_2 and F_101"
    ))
}

fn c10_sequence_identities() -> Outcome {
    let q = Quiver::complete(5, 1);
    let alg = iprime(&q, 4);
    let report = verify_sequence_identities(&alg, 4).unwrap();
    if let Some(bad) = report.failures().next() {
        return Err(bad.to_string());
    }
    let cv = |spec: ModuleSpec| alg.composition_vector(&spec).unwrap();
    let expected = [
        (
            "P(1)",
            cv(ModuleSpec::projective(&q, 1).unwrap()),
            [(1, 1), (2, 1), (3, 1), (4, 3), (5, 6)].as_slice(),
        ),
        (
            "Delta(2)",
            cv(ModuleSpec::standard(&q, 2).unwrap()),
            &[(2, 1), (3, 1), (4, 1), (5, 3)],
        ),
        (
            "Gamma(1)",
            cv(ModuleSpec::gamma(&q, 1).unwrap()),
            &[(1, 1), (3, 1), (4, 2), (5, 4)],
        ),
        (
            "Gamma(2)",
            cv(ModuleSpec::gamma(&q, 2).unwrap()),
            &[(2, 1), (4, 1), (5, 2)],
        ),
    ];
    for (name, got, want) in expected {
        let want = CompositionVector::from_pairs(5, want);
        ensure!(got == want, "{name}: {got} vs {want}");
    }
    Ok(format!("{} identities", report.checks.len()))
}

fn c11_euler() -> Outcome {
    // resolve_checked asserts the identity on every complete resolution the
    // other criteria compute; here a sweep over every module of every suite
    let mut count = 0;
    let mut algebras = vec![example_i(), example_iprime(), iprime(&Quiver::complete(5, 1), 4)];
    algebras.push(idoubleprime(&Quiver::complete(5, 1), 5));
    algebras.extend((2..=8).map(linear_consecutive));
    algebras.extend(random_suite().iter().map(local_max));
    for alg in &algebras {
        for (_, spec) in test_modules(alg.quiver()) {
            if resolve_checked(alg, &spec, Some(16)).complete {
                count += 1;
            }
        }
    }
    Ok(format!("{count} complete resolutions"))
}

fn c12_renderer() -> Outcome {
    let q = Quiver::complete(4, 1);
    let alg = local_max(&q);
    let spec = ModuleSpec::projective(&q, 1).unwrap();
    let d = ModuleDiagram::build(&alg, &spec).unwrap();
    let want = BTreeMap::from([(1, 1), (2, 1), (3, 2), (4, 4)]);
    ensure!(d.label_counts() == want, "labels {:?}", d.label_counts());
    let dot = render_module_quiver(&alg, &spec).unwrap();
    let mut from_text = BTreeMap::new();
    for line in dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")) {
        let v: usize = line.split('"').nth(1).unwrap().parse().unwrap();
        *from_text.entry(v).or_insert(0) += 1;
    }
    ensure!(from_text == want, "DOT labels {from_text:?}");
    ensure!(dot.lines().filter(|l| l.contains("->")).count() == 7, "edge count");
    Ok("labels {1:1, 2:1, 3:2, 4:4}, 7 edges".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("golden example", c1_golden_example),
        ("example generators", c2_example_generators),
        ("local-maximum resolutions", c3_local_max_resolutions),
        ("admissibility bound", c4_admissibility_bound),
        ("loop and linear examples", c5_small_examples),
        ("planner on six vertices", c6_planner),
        ("A/X dichotomy", c7_dichotomy),
        ("gldim 2 decision", c8_gldim_two_decision),
        ("oracle equivalence", c9_oracle_equivalence),
        ("sequence identities", c10_sequence_identities),
        ("Euler identity", c11_euler),
        ("renderer", c12_renderer),
    ];
    let budget = Duration::from_secs(5);
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:.2?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
