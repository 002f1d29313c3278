//! Acceptance run: one PASS/FAIL line per criterion, then a single assertion over all of them.

use std::time::{Duration, Instant};

use apoly::algebra::rational::{frac, int};
use apoly::algebra::{BiPoly, Poly, TriPoly};
use apoly::cocycle::omega_counts;
use apoly::coflow::{
    a_eval, a_even_eval, a_even_poly, a_poly, at_q, b_eval, b_poly, brute_coflow_histogram, coflow_histogram, digraph_a_eval,
    specialize_q, Config,
};
use apoly::corpus::{build_corpus, named_fixture, CorpusSpec};
use apoly::identities::{is_regular, CheckReport, Status};
use apoly::io::Instance;
use apoly::matroid::{Digraph, OrientedMatroid};
use apoly::partial::{make_pom, pom_from_instance, t_poly, Variant};
use apoly::tutte::{potts, tutte};
use apoly::verify::{run_corpus, run_suite, Suite};

type Outcome = Result<(), String>;

fn corpus() -> Vec<Instance> {
    build_corpus(&CorpusSpec::default()).unwrap().into_iter().map(|e| e.instance).collect()
}

fn fixture(name: &str) -> Instance {
    named_fixture(name).unwrap().instance
}

fn y() -> TriPoly {
    TriPoly::var(1)
}

fn z() -> TriPoly {
    TriPoly::var(2)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn first_failure(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(serde_json::to_string(r).unwrap()),
    }
}

fn golden_polynomial() -> Outcome {
    let start = Instant::now();
    let om = fixture("fig-exp-Apoly").om;
    let cfg = Config::default();
    let a = a_poly(&om, &cfg).map_err(|e| e.to_string())?;
    let q = TriPoly::var(0);
    let half = (&q - &TriPoly::one()).scale(&frac(1, 2));
    let yz = &y() * &z();
    let inner = &TriPoly::one() + &(&half * &(&y() + &z()));
    let expected = &(&yz * &inner.pow(2)) + &(&(&TriPoly::one() - &yz) * &(&TriPoly::one() + &(&(&q - &TriPoly::one()) * &yz)));
    ensure(a == expected, || format!("A = {}", a.to_string_with(&["q", "y", "z"])))?;
    let at3 = specialize_q(&a, &int(3));
    let (by, bz) = (BiPoly::var(0), BiPoly::var(1));
    let byz = &by * &bz;
    let two = BiPoly::int(2);
    let golden3 = &(&(&(&BiPoly::one() + &(&two * &byz)) + &(&two * &(&byz * &bz))) + &(&two * &(&byz * &by)))
        + &(&(&byz * &bz.pow(2)) + &(&byz * &by.pow(2)));
    ensure(at3 == golden3, || format!("A(3) = {}", at3.to_string_with(&["y", "z"])))?;
    ensure(at3 == a_eval(&om, 3, &cfg).map_err(|e| e.to_string())?, || "q=3 evaluation disagrees with direct count".into())?;
    within(start, Duration::from_secs(1), "golden polynomial")
}

fn reciprocity_goldens() -> Outcome {
    let start = Instant::now();
    let om = fixture("fig-exp-Apoly").om;
    let a = a_poly(&om, &Config::default()).map_err(|e| e.to_string())?;
    let sign = if om.rank().is_multiple_of(2) { int(1) } else { int(-1) };
    let at_minus_one = specialize_q(&a, &int(-1));
    let (by, one) = (BiPoly::var(0), BiPoly::one());
    // (-1)^r A(-1, 1+y, 1) as a polynomial in y.
    let first = at_minus_one.compose(&[&one + &by, one.clone()]).scale(&sign);
    let golden1 = &(&(&by.pow(3) + &by.pow(2).scale(&int(5))) + &by.scale(&int(4))) + &one;
    ensure(first == golden1, || format!("first = {}", first.to_string_with(&["y", "z"])))?;
    // (-1)^r [y^|A|] A(-1, y, yz), read off as a polynomial in z.
    let bz = BiPoly::var(1);
    let sub = at_minus_one.compose(&[by.clone(), &by * &bz]).scale(&sign);
    let n = om.len() as u32;
    let second = BiPoly::from_terms(sub.terms().filter(|(e, _)| e[0] == n).map(|(e, c)| ([0, e[1]], c.clone())));
    let golden2 = &(&bz + &bz.pow(2).scale(&int(4))) + &bz.pow(3);
    ensure(second == golden2, || format!("second = {}", second.to_string_with(&["y", "z"])))?;
    within(start, Duration::from_secs(1), "reciprocity goldens")
}

fn negative_control() -> Outcome {
    let start = Instant::now();
    let inst = fixture("U24-assume-tu");
    let cfg = Config::default();
    ensure(!is_regular(&inst.om), || "U(2,4) was reported regular".into())?;
    let t = tutte(&inst.om, &cfg).map_err(|e| e.to_string())?;
    let (x, yy) = (BiPoly::var(0), BiPoly::var(1));
    let golden_t = &(&x.pow(2) + &x.scale(&int(2))) + &(&yy.scale(&int(2)) + &yy.pow(2));
    ensure(t == golden_t, || format!("tutte = {}", t.to_string_with(&["x", "y"])))?;
    let p = potts(&inst.om, &cfg).map_err(|e| e.to_string())?;
    let golden_p = BiPoly::from_terms(
        [([2, 4], 1), ([1, 4], -4), ([1, 3], 4), ([0, 4], 3), ([0, 3], -4), ([0, 0], 1)].map(|(e, c)| (e, int(c))),
    );
    ensure(p == golden_p, || format!("potts = {}", p.to_string_with(&["q", "y"])))?;
    // Only the zero coflow exists over Z/3, so the coflow sum is 1 while Potts is not.
    let h = brute_coflow_histogram(&inst.om, 3, &cfg).map_err(|e| e.to_string())?;
    let sum = h.to_bipoly();
    ensure(h.total() == 1 && sum == BiPoly::one(), || format!("coflow sum = {}", sum.to_string_with(&["y", "z"])))?;
    let potts3 = at_q(&p, &int(3));
    ensure(potts3 != BiPoly::one(), || "Potts at q=3 collapsed to 1".into())?;
    let reports = run_suite(Suite::Tutte, &inst, &cfg).map_err(|e| e.to_string())?;
    ensure(!reports.is_empty() && reports.iter().all(|r| r.status == Status::Xfail), || {
        format!("tutte suite on U(2,4) not all xfail: {:?}", reports.iter().map(|r| r.status).collect::<Vec<_>>())
    })?;
    within(start, Duration::from_secs(1), "negative control")
}

fn identity_suites(instances: &[Instance]) -> Outcome {
    let start = Instant::now();
    let suites = [Suite::Basic, Suite::Tutte, Suite::Expansions, Suite::Reciprocity, Suite::Duality, Suite::Recurrences];
    let reports = run_corpus(&suites, instances, &Config::default(), 4).map_err(|e| e.to_string())?;
    first_failure(&reports)?;
    ensure(reports.iter().any(|r| r.status == Status::Pass), || "no checks ran".into())?;
    within(start, Duration::from_secs(600), "identity suites")
}

fn partial_orientations(instances: &[Instance]) -> Outcome {
    let cfg = Config::default();
    let reports = run_corpus(&[Suite::Pom], instances, &cfg, 4).map_err(|e| e.to_string())?;
    first_failure(&reports)?;
    let doubled = instances.iter().filter(|i| i.name.starts_with("doubled-")).count();
    ensure(doubled > 0, || "no doubled fixtures".into())?;

    let p2 = pom_from_instance(&fixture("P2")).map_err(|e| e.to_string())?;
    let oriented = |n: usize, arcs: &[(usize, usize)]| {
        let om = OrientedMatroid::from_digraph(&Digraph::new(n, arcs.to_vec()).unwrap()).unwrap();
        make_pom(om, &[]).unwrap()
    };
    let (p0, p1) = (oriented(1, &[(0, 0)]), oriented(2, &[(0, 1)]));
    let (x, yy, one) = (BiPoly::var(0), BiPoly::var(1), BiPoly::one());
    for v in [Variant::First, Variant::Second] {
        let lhs = t_poly(&p2, v, &cfg).map_err(|e| e.to_string())?;
        let rhs = &(&(&(&x + &yy) + &one) * &t_poly(&p0, v, &cfg).map_err(|e| e.to_string())?)
            + &(&(&x + &one) * &t_poly(&p1, v, &cfg).map_err(|e| e.to_string())?);
        ensure(lhs == rhs, || format!("P2 relation fails for {v:?}"))?;
    }
    Ok(())
}

fn cocycle_classes(instances: &[Instance]) -> Outcome {
    let cfg = Config::default();
    let o = omega_counts(&fixture("fig-cocycle-classes").om, &cfg).map_err(|e| e.to_string())?;
    ensure((o.omega_geq, o.omega_gt) == (3, 1), || format!("omega counts {o:?}"))?;
    let reports = run_corpus(&[Suite::Classes], instances, &cfg, 4).map_err(|e| e.to_string())?;
    first_failure(&reports)
}

fn coloring_cross_formula(instances: &[Instance]) -> Outcome {
    let cfg = Config::default();
    let mut seen = 0;
    for inst in instances {
        let Some(d) = &inst.digraph else { continue };
        if !inst.pairs.is_empty() {
            continue;
        }
        for q in [1, 3, 5] {
            let lhs = digraph_a_eval(d, q, &cfg).map_err(|e| e.to_string())?;
            let rhs = a_eval(&inst.om, q, &cfg).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{} at q={q}", inst.name))?;
        }
        seen += 1;
    }
    ensure(seen > 0, || "no digraphs".into())
}

fn b_bridge(instances: &[Instance]) -> Outcome {
    let cfg = Config::default();
    for inst in instances {
        let Some(d) = &inst.digraph else { continue };
        if !inst.pairs.is_empty() {
            continue;
        }
        let a = specialize_q(&a_poly(&inst.om, &cfg).map_err(|e| e.to_string())?, &int(-1));
        let b = specialize_q(&b_poly(d, &cfg).map_err(|e| e.to_string())?, &int(-1));
        let sign = if d.components() % 2 == 0 { int(1) } else { int(-1) };
        ensure(a == b.scale(&sign), || {
            format!("{}: A(-1) = {}, B(-1) = {}", inst.name, a.to_string_with(&["y", "z"]), b.to_string_with(&["y", "z"]))
        })?;
    }
    Ok(())
}

fn r10_performance() -> Outcome {
    let om = fixture("R10").om;
    for (jobs, limit) in [(1, 300), (4, 120)] {
        let start = Instant::now();
        a_poly(&om, &Config::with_jobs(jobs)).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(limit), &format!("R10 with {jobs} jobs"))?;
    }
    let cfg = Config::default();
    for q in (1..=13).step_by(2) {
        let h = coflow_histogram(&om, q, &cfg).map_err(|e| e.to_string())?;
        ensure(h.total() == q.pow(5), || format!("histogram total {} at q={q}", h.total()))?;
    }
    Ok(())
}

fn lift_even(p: &TriPoly) -> Poly<4> {
    Poly::from_terms(p.terms().map(|(e, c)| ([0, e[0], e[1], e[2]], c.clone())))
}

fn degree_safety(instances: &[Instance]) -> Outcome {
    let cfg = Config::default();
    for inst in instances.iter().filter(|i| is_regular(&i.om)) {
        let om = &inst.om;
        let r = om.rank() as u64;
        let e = |x: apoly::Error| format!("{}: {x}", inst.name);
        let a = a_poly(om, &cfg).map_err(e)?;
        let node = 2 * r + 3;
        ensure(specialize_q(&a, &int(node as i64)) == a_eval(om, node, &cfg).map_err(e)?, || {
            format!("{}: a_poly at {node}", inst.name)
        })?;
        let ae = a_even_poly(om, &cfg).map_err(e)?;
        for node in [2 * r + 4, 2 * r + 6] {
            let lhs = at_q(&ae, &int(node as i64));
            ensure(lhs == lift_even(&a_even_eval(om, node, &cfg).map_err(e)?), || {
                format!("{}: a_even_poly at {node}", inst.name)
            })?;
        }
        if let Some(d) = &inst.digraph {
            let b = b_poly(d, &cfg).map_err(e)?;
            let nv = d.vertices() as u64;
            for node in [nv + 2, nv + 3] {
                ensure(specialize_q(&b, &int(node as i64)) == b_eval(d, node, &cfg).map_err(e)?, || {
                    format!("{}: b_poly at {node}", inst.name)
                })?;
            }
        }
    }
    Ok(())
}

fn main() {
    let instances = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("golden A-polynomial of the worked example", Box::new(golden_polynomial)),
        ("reciprocity goldens on the worked example", Box::new(reciprocity_goldens)),
        ("U(2,4) negative control", Box::new(negative_control)),
        ("identity suites on the default corpus", Box::new(|| identity_suites(&instances))),
        ("partial orientation suite", Box::new(|| partial_orientations(&instances))),
        ("cocycle reversing classes", Box::new(|| cocycle_classes(&instances))),
        ("coloring cross-formula", Box::new(|| coloring_cross_formula(&instances))),
        ("B-polynomial bridge at q=-1", Box::new(|| b_bridge(&instances))),
        ("R10 performance and histogram totals", Box::new(r10_performance)),
        ("degree safety re-evaluation", Box::new(|| degree_safety(&instances))),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {:>2} PASS  {name}  ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
