//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion with its
//! runtime and exits nonzero if any criterion fails or exceeds its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gred_core::catalog::{catalog_get, catalog_problem, null_cone_ideal, problem_ids, pull_back, ENTRIES};
use gred_core::checker::{
    check, orbit_check, CheckReport, Checker, Checks, Evidence, Options, RankSite, Value,
};
use gred_core::diffgeo::{jacobian, rank_at, rank_on_variety};
use gred_core::ideal::{ideal_equal, Budget, Ideal};
use gred_core::poly::{int, parse_poly, Monomial, MonomialOrder, Polynomial, Rational, Ring};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::Value as Json;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn b() -> Budget {
    Budget::default()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    let code = gred_check::run(std::iter::once("gred-check").chain(args.iter().copied()), &mut out, &mut errs);
    (code, String::from_utf8_lossy(&out).into_owned() + &String::from_utf8_lossy(&errs))
}

fn cli_json(args: &[&str]) -> Result<(i32, Json), String> {
    let dir = tempfile::tempdir().map_err(err)?;
    let path = dir.path().join("report.json");
    let path_str = path.to_str().ok_or("non-utf8 temp path")?;
    let mut full = args.to_vec();
    full.extend(["--json", path_str]);
    let (code, text) = cli(&full);
    let raw = std::fs::read_to_string(&path).map_err(|e| format!("no JSON report ({e}); output: {text}"))?;
    Ok((code, serde_json::from_str(&raw).map_err(err)?))
}

fn verdict_of<'a>(j: &'a Json, pointer: &str) -> (&'a str, &'a str) {
    let v = j.pointer(pointer);
    (
        v.and_then(|v| v["value"].as_str()).unwrap_or("missing"),
        v.and_then(|v| v["rule"].as_str()).unwrap_or("missing"),
    )
}

fn codim(i: &Ideal) -> Result<i64, String> {
    Ok(i.ring().arity() as i64 - i.dim_variety(b()).map_err(err)?)
}

fn criterion_1() -> Outcome {
    let (code, j) = cli_json(&["catalog", "run", "sl2_k3"])?;
    ensure!(code == 0, "exit code {code}");
    let (v, rule) = verdict_of(&j, "/coreduced");
    ensure!(v == "proved_yes" && rule == "reference", "coreduced = {v} ({rule})");
    let spec = catalog_get("sl2_k3").map_err(err)?;
    let n = null_cone_ideal(&spec);
    let d = n.dim_variety(b()).map_err(err)?;
    ensure!(d == 4 && spec.ring.arity() == 6, "dim null cone {d} in {} variables", spec.ring.arity());
    ensure!(codim(&n)? == 2, "codim null cone {}", codim(&n)?);
    Ok("coreduced proved_yes (reference); dim N = 4 of 6, codim 2 = k-1".into())
}

fn criterion_2() -> Outcome {
    let spec = catalog_get("so3_2v").map_err(err)?;
    let n = null_cone_ideal(&spec);
    let fs: Vec<Polynomial> = spec.invariants.iter().map(|i| i.poly.clone()).collect();
    let vr = rank_on_variety(&fs, &n, b()).map_err(err)?;
    ensure!(vr.rank == 2, "rank on N = {}", vr.rank);
    let w = spec.witness("null").ok_or("no null witness")?;
    ensure!(w.point == [1, 0, 0, 1, 0, 0].map(int), "witness {:?}", w.point);
    let r = rank_at(&jacobian(&fs).map_err(err)?, &w.point).map_err(err)?;
    ensure!(r == 2, "rank at witness = {r}");
    ensure!(codim(&n)? == 3, "codim N = {}", codim(&n)?);
    ensure!(vr.vanishing.len() == 20, "{} vanishing 3x3 minors", vr.vanishing.len());
    for m in &vr.vanishing {
        ensure!(n.rad_member(&m.value, b()).map_err(err)?, "minor {:?}/{:?} not in rad N", m.rows, m.cols);
    }
    let (code, j) = cli_json(&["catalog", "run", "so3_2v"])?;
    ensure!(code == 0, "exit code {code}");
    let (v, rule) = verdict_of(&j, "/g_reduced");
    ensure!(v == "proved_no" && rule == "Q4", "g_reduced = {v} ({rule})");
    Ok("rank 2 on N and at (1,0,0,1,0,0); codim 3; 20/20 minors in rad N; g_reduced proved_no (Q4)".into())
}

fn criterion_3() -> Outcome {
    let p = catalog_problem("sl2_k3", Some("first_copy_zero")).map_err(err)?;
    let r = check(&p, Options { all_rules: true, ..Options::default() }, Checks::ALL).map_err(err)?;
    ensure!(p.relations.len() == 2, "k = {}", p.relations.len());
    let n = codim(&null_cone_ideal(&p.spec))?;
    ensure!(n == 2, "codim N = {n}");
    ensure!(
        !r.firings.iter().any(|f| f.question == "g_saturated" && f.rule == "R4"),
        "R4 fired"
    );
    let v = r.g_saturated.as_ref().ok_or("no verdict")?;
    ensure!(v.value == Value::ProvedNo && v.rule == "R1", "g_saturated = {v}");
    Ok("codim N = 2 = k so R4 does not apply; g_saturated proved_no (R1)".into())
}

fn criterion_4() -> Outcome {
    let spec = catalog_get("so2_2v").map_err(err)?;
    let lhs = pull_back(&spec, "e^2").map_err(err)?;
    let rhs = pull_back(&spec, "f12^2 - f11*f22").map_err(err)?;
    ensure!(lhs == rhs, "e^2 = {lhs} but f12^2 - f11*f22 = {rhs}");

    let dir = tempfile::tempdir().map_err(err)?;
    let prob = dir.path().join("so2_Y.prob");
    let (code, text) = cli(&["catalog", "export", "so2_2v", "--problem", "axes"]);
    ensure!(code == 0, "export failed: {text}");
    std::fs::write(&prob, text).map_err(err)?;
    let (code, j) = cli_json(&["run", prob.to_str().unwrap(), "--check", "saturated"])?;
    ensure!(code == 0, "exit code {code}");
    let (v, rule) = verdict_of(&j, "/g_saturated");
    ensure!(v == "proved_no" && rule == "R1", "g_saturated = {v} ({rule})");
    let ev = j["g_saturated"]["evidence"].as_array().ok_or("no evidence")?;
    ensure!(
        ev.iter().any(|e| e["kind"] == "nonmember" && e["poly"] == "p1*q1"),
        "no nonmember evidence for p1*q1"
    );
    ensure!(
        ev.iter().any(|e| e["kind"] == "witness_point" && e["point"] == serde_json::json!(["1", "0", "1", "0"])),
        "no witness (1,0,1,0)"
    );

    let p = catalog_problem("so2_2v", Some("axes")).map_err(err)?;
    let apr = Checker::new(&p, Options::default()).apr_dense().map_err(err)?;
    ensure!(apr.value == Value::ProvedYes, "apr_dense = {apr}");
    let c = codim(&null_cone_ideal(&spec))?;
    ensure!(c == 2, "codim N = {c}");
    Ok("e^2 = f12^2 - f11*f22; apr_dense yes; g_saturated proved_no (R1, p1*q1, (1,0,1,0)); codim N = 2".into())
}

fn criterion_5() -> Outcome {
    let p = catalog_problem("sl2_k4", Some("two_determinants")).map_err(err)?;
    ensure!(codim(&p.y)? == 2, "codim Y = {}", codim(&p.y)?);
    let cn = codim(&null_cone_ideal(&p.spec))?;
    ensure!(cn == 3, "codim N = {cn}");
    let r = check(&p, Options::default(), Checks::ALL).map_err(err)?;
    let sat = r.g_saturated.as_ref().ok_or("no g_saturated")?;
    ensure!(sat.value == Value::ProvedYes && sat.rule == "R4", "g_saturated = {sat}");
    let red = r.g_reduced.as_ref().ok_or("no g_reduced")?;
    ensure!(red.value == Value::ProvedYes && red.rule == "Q3", "g_reduced = {red}");
    ensure!(
        red.evidence
            .iter()
            .any(|e| matches!(e, Evidence::Rank { value: 2, site: RankSite::Point(_), .. })),
        "no rank-2 witness evidence"
    );
    Ok("codim Y = 2, codim N = 3; g_saturated yes (R4); g_reduced yes (Q3, rank 2 at witness)".into())
}

fn criterion_6() -> Outcome {
    let p = catalog_problem("sl2_k4", Some("two_copies")).map_err(err)?;
    let r = check(&p, Options::default(), Checks::ALL).map_err(err)?;
    let sat = r.g_saturated.as_ref().ok_or("no g_saturated")?;
    ensure!(sat.value == Value::ProvedNo && sat.rule == "R1", "g_saturated = {sat}");
    let e1_third: Vec<String> = ["0", "0", "0", "0", "1", "0", "0", "0"].map(String::from).to_vec();
    ensure!(
        sat.evidence
            .iter()
            .any(|e| matches!(e, Evidence::WitnessPoint { point, .. } if *point == e1_third)),
        "no witness (0,0,e1,0)"
    );
    let real = r.real.as_ref().ok_or("no real verdicts")?;
    ensure!(real.almost_k_reduced.value == Value::ProvedNo, "almost_K_reduced = {}", real.almost_k_reduced);
    Ok("g_saturated proved_no (R1, witness (0,0,e1,0)); almost_K_reduced proved_no".into())
}

fn criterion_7() -> Outcome {
    let p = catalog_problem("su2_quat", Some("circle")).map_err(err)?;
    let dy = p.y.dim_variety(b()).map_err(err)?;
    ensure!(dy == 4, "dim Y = {dy}");
    let n = null_cone_ideal(&p.spec);
    let dn = n.dim_variety(b()).map_err(err)?;
    let null = p.spec.stratum_index("null").ok_or("no null stratum")?;
    let fiber = p.spec.strata[null].fiber_dim;
    ensure!(dn == 5 && fiber == 5, "dim N = {dn}, null fiber dim = {fiber}");
    // The stratum closure is N(2H) x R, one dimension more than N(V).
    let closure = &p.spec.strata[null].closure;
    let dc = closure.dim_variety(b()).map_err(err)?;
    ensure!(dc == dn + 1, "dim of null stratum closure = {dc}");
    ensure!(
        p.y.sum(closure).map_err(err)?.is_proper(b()).map_err(err)?,
        "Y misses the null stratum closure"
    );
    let r = check(&p, Options::default(), Checks::ALL).map_err(err)?;
    let st = r.strata.iter().find(|s| s.name == "null").ok_or("no null stratum report")?;
    ensure!(
        st.saturated.value == Value::ProvedNo && st.saturated.rule == "R5",
        "null stratum saturated = {}",
        st.saturated
    );
    let real = r.real.as_ref().ok_or("no real verdicts")?;
    ensure!(
        real.k_reduced.value == Value::ProvedNo && real.almost_k_reduced.value == Value::ProvedNo,
        "K_reduced = {}, almost_K_reduced = {}",
        real.k_reduced,
        real.almost_k_reduced
    );
    Ok(format!(
        "dim Y = 4; dim N = 5 = fiber dim (closure in V: {dc}); 1 not in Y + closure; null stratum proved_no (R5); K and almost-K proved_no"
    ))
}

fn criterion_8() -> Outcome {
    let spec = catalog_get("sl2_k3").map_err(err)?;
    let principal = orbit_check(&spec, spec.witness("principal").ok_or("no witness")?).map_err(err)?;
    ensure!(principal.k_reduced.value == Value::ProvedYes, "principal K_reduced = {}", principal.k_reduced);
    let origin = orbit_check(&spec, spec.witness("origin").ok_or("no witness")?).map_err(err)?;
    ensure!(
        origin.k_reduced.value == Value::ProvedNo && origin.almost_k_reduced.value == Value::ProvedNo,
        "origin = {} / {}",
        origin.k_reduced,
        origin.almost_k_reduced
    );
    Ok("principal orbit K-reduced; origin neither K- nor almost K-reduced".into())
}

fn random_poly(rng: &mut StdRng, ring: &Ring, terms: usize, max_exp: u32) -> Polynomial {
    let terms = (0..rng.gen_range(0..=terms))
        .map(|_| {
            let e = (0..ring.arity()).map(|_| rng.gen_range(0..=max_exp)).collect();
            (Monomial::from_exponents(e), int(rng.gen_range(-5..=5)))
        })
        .collect();
    Polynomial::from_terms(ring, MonomialOrder::GrevLex, terms)
}

fn suite_reports() -> Result<Vec<(String, CheckReport, gred_core::checker::Problem)>, String> {
    let mut out = Vec::new();
    for (name, _) in ENTRIES {
        for id in problem_ids(name).map_err(err)? {
            let p = catalog_problem(name, Some(id)).map_err(err)?;
            let r = check(&p, Options { all_rules: true, ..Options::default() }, Checks::ALL).map_err(err)?;
            out.push((format!("{name}.{id}"), r, p));
        }
    }
    Ok(out)
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let xyz = Ring::new(["x", "y", "z"]).map_err(err)?;

    for _ in 0..100 {
        let (f, g, h) = (
            random_poly(&mut rng, &xyz, 4, 3),
            random_poly(&mut rng, &xyz, 4, 3),
            random_poly(&mut rng, &xyz, 4, 3),
        );
        ensure!(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), "distributivity fails for {f}, {g}, {h}");
        ensure!(&(&f * &g) * &h == &f * &(&g * &h), "associativity fails");
        ensure!(&f * &g == &g * &f && &f + &g == &g + &f, "commutativity fails");
        ensure!(parse_poly(&f.to_string(), &xyz).map_err(err)? == f, "print/parse fails for {f}");
        for v in ["x", "y", "z"] {
            let d = |p: &Polynomial| p.partial_derivative(v).unwrap();
            ensure!(d(&(&f * &g)) == &(&d(&f) * &g) + &(&f * &d(&g)), "Leibniz fails for {f}, {g}");
        }
    }

    let mut catalog_ideals = 0;
    for (name, _) in ENTRIES {
        let spec = catalog_get(name).map_err(err)?;
        let mut ideals = vec![null_cone_ideal(&spec)];
        ideals.extend(spec.strata.iter().map(|s| s.closure.clone()).filter(|c| !c.generators().is_empty()));
        for id in problem_ids(name).map_err(err)? {
            ideals.push(catalog_problem(name, Some(id)).map_err(err)?.y.clone());
        }
        for i in ideals {
            catalog_ideals += 1;
            let reference = i.groebner(MonomialOrder::GrevLex, b()).map_err(err)?;
            for _ in 0..5 {
                let mut gens: Vec<Polynomial> = i
                    .generators()
                    .iter()
                    .map(|g| g.scale(&Rational::new(rng.gen_range(1..=9i64).into(), rng.gen_range(1..=4i64).into())))
                    .collect();
                gens.shuffle(&mut rng);
                let j = Ideal::new(i.ring(), gens).map_err(err)?;
                let gb = j.groebner(MonomialOrder::GrevLex, b()).map_err(err)?;
                ensure!(gb.elements() == reference.elements(), "basis depends on generator order for {i}");
                ensure!(ideal_equal(&i, &j, b()).map_err(err)?, "ideal_equal fails for {i}");
            }
        }
    }

    let so3 = catalog_get("so3_2v").map_err(err)?;
    let n = null_cone_ideal(&so3);
    let gb = n.groebner(MonomialOrder::GrevLex, b()).map_err(err)?;
    let mut member_calls = 0;
    for _ in 0..100 {
        let f = random_poly(&mut rng, &so3.ring, 4, 2);
        let g = random_poly(&mut rng, &so3.ring, 4, 2);
        let (a, c) = (int(rng.gen_range(-4..=4)), int(rng.gen_range(-4..=4)));
        let nf = gb.normal_form(&f);
        ensure!(
            gb.normal_form(&(&f.scale(&a) + &g.scale(&c))) == &nf.scale(&a) + &gb.normal_form(&g).scale(&c),
            "normal form is not linear"
        );
        ensure!(gb.normal_form(&nf) == nf, "normal form is not idempotent");
        let h = &f - &nf;
        member_calls += 1;
        ensure!(n.member(&h, b()).map_err(err)? && n.rad_member(&h, b()).map_err(err)?, "f - NF(f) not a member");
    }

    for _ in 0..100 {
        let nv = rng.gen_range(1..=8usize);
        let ring = Ring::new((0..nv).map(|i| format!("x{i}"))).map_err(err)?;
        let exps: Vec<Vec<u32>> = (0..rng.gen_range(1..=6))
            .map(|_| (0..nv).map(|_| if rng.gen_bool(0.35) { rng.gen_range(1..=2) } else { 0 }).collect())
            .collect();
        let gens = exps
            .iter()
            .map(|e| Polynomial::from_terms(&ring, MonomialOrder::GrevLex, vec![(Monomial::from_exponents(e.clone()), int(1))]))
            .collect();
        let i = Ideal::new(&ring, gens).map_err(err)?;
        let oracle = if exps.iter().any(|e| e.iter().all(|&x| x == 0)) {
            -1
        } else {
            (0u32..1 << nv)
                .filter(|set| !exps.iter().any(|e| (0..nv).all(|v| e[v] == 0 || set & (1 << v) != 0)))
                .map(|set| set.count_ones() as i64)
                .max()
                .unwrap_or(0)
        };
        let d = i.dim_variety(b()).map_err(err)?;
        ensure!(d == oracle, "dim {d} but oracle {oracle} for {i}");
    }

    let reports = suite_reports()?;
    for (id, r, p) in &reports {
        ensure!(r.conflicts().is_empty(), "{id}: conflicting verdicts {:?}", r.conflicts());
        ensure!(r.invariant_violations(p).is_empty(), "{id}: {:?}", r.invariant_violations(p));
        let mut verdicts: Vec<_> = [&r.g_saturated, &r.g_reduced, &r.coreduced].into_iter().flatten().collect();
        if let Some(d) = &r.density {
            verdicts.extend([&d.pr_dense, &d.apr_dense]);
        }
        verdicts.extend(r.strata.iter().map(|s| &s.saturated));
        for v in verdicts {
            for e in &v.evidence {
                if let Evidence::Member { poly, ideal, radical: false } = e {
                    member_calls += 1;
                    let i = Ideal::parse(&p.spec.ring, ideal).map_err(err)?;
                    let f = parse_poly(poly, &p.spec.ring).map_err(err)?;
                    ensure!(i.rad_member(&f, b()).map_err(err)?, "{id}: member but not radical member: {poly}");
                }
            }
        }
    }
    Ok(format!(
        "100 ring/Leibniz cases; {catalog_ideals} catalog ideals x 5 shuffles; 100 NF cases; {member_calls} member=>rad_member; 100 monomial dims; {} reports conflict-free",
        reports.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "SL2 coreducedness", Duration::from_secs(1), criterion_1),
        (2, "SO3 null cone not G-reduced", Duration::from_secs(5), criterion_2),
        (3, "codimension sharpness", Duration::from_secs(2), criterion_3),
        (4, "SO2 on two vectors", Duration::from_secs(2), criterion_4),
        (5, "G-reduced positive case", Duration::from_secs(10), criterion_5),
        (6, "non-cofree counterexample", Duration::from_secs(10), criterion_6),
        (7, "quaternion example", Duration::from_secs(300), criterion_7),
        (8, "orbit classification", Duration::from_secs(1), criterion_8),
        (9, "property suites", Duration::from_secs(600), criterion_9),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        let within = start.elapsed() <= limit;
        let (status, detail) = match (&outcome, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {n} [{status}] {name}: {ms:.1} ms (limit {} ms) - {detail}",
            limit.as_millis()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
