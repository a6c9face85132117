use gred_core::catalog::{catalog_get, catalog_problem, null_cone_ideal, ENTRIES, problem_ids};
use gred_core::checker::{
    check, check_coreduced, orbit_check, real_translate, CheckError, Checker, Checks, Evidence, Options, Problem,
    ProblemData, ProblemError, RankSite, Value, Verdict,
};
use gred_core::ideal::{Budget, Ideal};
use gred_core::poly::parse_poly;

fn all_rules() -> Options {
    Options {
        all_rules: true,
        ..Default::default()
    }
}

fn problem(entry: &str, id: &str) -> Problem {
    catalog_problem(entry, Some(id)).unwrap()
}

fn fired(report: &gred_core::checker::CheckReport, question: &str, rule: &str) -> bool {
    report.firings.iter().any(|f| f.question == question && f.rule == rule)
}

#[test]
fn density_examples() {
    let p = problem("sl2_k4", "two_determinants");
    let c = Checker::new(&p, Options::default());
    assert_eq!(c.pr_dense().unwrap().value, Value::ProvedYes);

    let p = problem("so2_2v", "axes");
    assert_eq!(Checker::new(&p, Options::default()).apr_dense().unwrap().value, Value::ProvedYes);

    let p = problem("so3_2v", "null_cone");
    let v = Checker::new(&p, Options::default()).pr_dense().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "component"));
}

#[test]
fn g_saturated_examples() {
    let p = problem("so2_2v", "axes");
    let v = Checker::new(&p, Options::default()).g_saturated().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "R1"));
    assert!(v.evidence.iter().any(|e| matches!(e,
        Evidence::Nonmember { poly, radical: true, .. } if poly == "p1*q1")));
    assert!(v.evidence.iter().any(|e| matches!(e,
        Evidence::WitnessPoint { point, .. } if point == &["1", "0", "1", "0"])));

    let p = problem("sl2_k4", "two_determinants");
    let v = Checker::new(&p, Options::default()).g_saturated().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedYes, "R4"));

    let p = problem("sl2_k4", "two_copies");
    let v = Checker::new(&p, Options::default()).g_saturated().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "R1"));
    assert!(v.evidence.iter().any(|e| matches!(e,
        Evidence::WitnessPoint { point, .. } if point == &["0", "0", "0", "0", "1", "0", "0", "0"])));
}

#[test]
fn g_reduced_examples() {
    let p = problem("so3_2v", "null_cone");
    let v = Checker::new(&p, Options::default()).g_reduced().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "Q4"));
    assert!(v.evidence.iter().any(|e| matches!(e, Evidence::Rank { value: 2, site: RankSite::Variety(_), .. })));

    let p = problem("sl2_k4", "two_determinants");
    let v = Checker::new(&p, Options::default()).g_reduced().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedYes, "Q3"));
    assert!(v.evidence.iter().any(|e| matches!(e, Evidence::Rank { value: 2, site: RankSite::Point(_), .. })));
}

#[test]
fn principal_orbit_is_g_reduced() {
    // The orbit of a principal point: V(D12 - 1, D13, D23) is a single closed orbit.
    let spec = catalog_get("sl2_k3").unwrap();
    let y = Ideal::parse(&spec.ring, &["a1*b2 - a2*b1 - 1", "a1*b3 - a3*b1", "a2*b3 - a3*b2"]).unwrap();
    let mut data = ProblemData::new("orbit", spec.clone(), y);
    data.relations = vec!["D12 - 1".into(), "D13".into(), "D23".into()];
    let p = Problem::new(data, Budget::default()).unwrap();
    let v = Checker::new(&p, Options::default()).g_reduced().unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedYes, "Q1"));
}

#[test]
fn stratum_saturation_examples() {
    let p = problem("so2_2v", "null_cone");
    let c = Checker::new(&p, Options::default());
    let null = p.spec.stratum_index("null").unwrap();
    assert_eq!(c.stratum_saturated(null).unwrap().value, Value::ProvedYes);

    let p = problem("su2_quat", "circle");
    let c = Checker::new(&p, Options::default());
    let v = c.stratum_saturated(p.spec.stratum_index("null").unwrap()).unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "R5"));

    // Y misses the null stratum entirely.
    let spec = catalog_get("sl2_k3").unwrap();
    let y = Ideal::parse(&spec.ring, &["a1*b2 - a2*b1 - 1"]).unwrap();
    let p = Problem::new(ProblemData::new("shell", spec, y), Budget::default()).unwrap();
    let v = Checker::new(&p, Options::default()).stratum_saturated(1).unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedYes, "vacuous"));
}

#[test]
fn coreducedness_examples() {
    let o = Options::default();
    let sl2 = catalog_get("sl2_k3").unwrap();
    let reference = catalog_problem("sl2_k3", None).unwrap().reference().cloned();
    assert_eq!(check_coreduced(&sl2, reference.as_ref(), o).unwrap().value, Value::ProvedYes);

    let so3 = catalog_get("so3_2v").unwrap();
    let v = check_coreduced(&so3, None, o).unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "Q4"));

    let so2 = catalog_get("so2_2v").unwrap();
    assert_eq!(check_coreduced(&so2, None, o).unwrap().value, Value::Unknown);

    // A reference with the wrong zero set is refused.
    let bad = Ideal::parse(&sl2.ring, &["a1"]).unwrap();
    assert_eq!(check_coreduced(&sl2, Some(&bad), o).unwrap_err(), CheckError::ReferenceMismatch);

    // Squared generators cut out the right set but are not the radical.
    let squares = Ideal::new(&sl2.ring, null_cone_ideal(&sl2).generators().iter().map(|g| g.pow(2)).collect()).unwrap();
    assert_eq!(check_coreduced(&sl2, Some(&squares), o).unwrap_err(), CheckError::ReferenceMismatch);

    // For so3 the radical also contains the 2x2 minors of (p; q).
    let so3_radical = Ideal::parse(
        &so3.ring,
        &[
            "2*p1*p3 + p2^2", "2*q1*q3 + q2^2", "p1*q3 + p2*q2 + p3*q1",
            "p1*q2 - p2*q1", "p1*q3 - p3*q1", "p2*q3 - p3*q2",
        ],
    )
    .unwrap();
    let v = check_coreduced(&so3, Some(&so3_radical), o).unwrap();
    assert_eq!((v.value, v.rule.as_str()), (Value::ProvedNo, "reference"));
    match &v.evidence[..] {
        [Evidence::Nonmember { poly, radical: false, .. }] => {
            let f = parse_poly(poly, &so3.ring).unwrap();
            assert_eq!(f, parse_poly("p1*q2 - p2*q1", &so3.ring).unwrap());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn orbit_examples() {
    let spec = catalog_get("sl2_k3").unwrap();
    let v = orbit_check(&spec, spec.witness("principal").unwrap()).unwrap();
    assert_eq!((v.k_reduced.value, v.almost_k_reduced.value), (Value::ProvedYes, Value::ProvedYes));
    for (name, _) in ENTRIES {
        let spec = catalog_get(name).unwrap();
        let v = orbit_check(&spec, spec.witness("origin").unwrap()).unwrap();
        assert_eq!((v.k_reduced.value, v.almost_k_reduced.value), (Value::ProvedNo, Value::ProvedNo), "{name}");
    }
    let so2 = catalog_get("so2_2v").unwrap();
    assert!(matches!(orbit_check(&so2, so2.witness("null").unwrap()), Err(CheckError::OrbitNotClosed(_))));
}

#[test]
fn real_translation_examples() {
    let p = problem("su2_quat", "circle");
    let r = check(&p, Options::default(), Checks::ALL).unwrap();
    let real = r.real.unwrap();
    assert_eq!(real.almost_k_reduced.value, Value::ProvedNo);
    assert_eq!(real.k_reduced.value, Value::ProvedNo);

    let p = problem("sl2_k4", "two_copies");
    let r = check(&p, Options::default(), Checks::ALL).unwrap();
    assert_eq!(r.real.unwrap().almost_k_reduced.value, Value::ProvedNo);

    let u = Verdict::unknown("none");
    let real = real_translate(&p, &u, &u).unwrap();
    assert_eq!((real.k_reduced.value, real.almost_k_reduced.value), (Value::Unknown, Value::Unknown));

    let so3 = problem("so3_2v", "null_cone");
    assert!(matches!(real_translate(&so3, &u, &u), Err(CheckError::NoRealForm(_))));
    let k4 = problem("sl2_k4", "two_determinants");
    assert!(matches!(real_translate(&k4, &u, &u), Err(CheckError::NotComplexification(_))));
}

#[test]
fn problem_validation() {
    let spec = catalog_get("so2_2v").unwrap();
    let y = Ideal::parse(&spec.ring, &["p1", "p2"]).unwrap();
    let mut data = ProblemData::new("bad", spec.clone(), y.clone());
    data.relations = vec!["f22".into()];
    let err = Problem::new(data, Budget::default()).unwrap_err();
    assert!(err.to_string().contains("does not vanish"), "{err}");

    let mut data = ProblemData::new("bad", spec.clone(), y.clone());
    data.relations = vec!["g".into()];
    assert!(Problem::new(data, Budget::default()).is_err());

    let mut data = ProblemData::new("bad", spec.clone(), y.clone());
    data.components = vec![Ideal::parse(&spec.ring, &["q1"]).unwrap()];
    assert!(matches!(Problem::new(data, Budget::default()), Err(ProblemError::Invalid { .. })));

    let empty = Ideal::parse(&spec.ring, &["p1", "p1 - 1"]).unwrap();
    assert!(Problem::new(ProblemData::new("bad", spec, empty), Budget::default()).is_err());
}

#[test]
fn budget_exhaustion_gives_unknown() {
    let p = problem("su2_quat", "circle");
    let o = Options {
        budget: Budget::new(1),
        all_rules: false,
    };
    let r = check(&p, o, Checks::ALL).unwrap();
    assert!(r.budget_exhausted);
    assert_eq!(r.g_saturated.unwrap().value, Value::Unknown);
    assert_eq!(r.g_reduced.unwrap().value, Value::Unknown);
}

/// Every bundled problem, every rule: no conflicting verdicts, all evidence
/// replays, and first-wins agrees with all-rules.
#[test]
fn catalog_suite_is_sound_and_replayable() {
    for (name, _) in ENTRIES {
        for id in problem_ids(name).unwrap() {
            let p = problem(name, id);
            let full = check(&p, all_rules(), Checks::ALL).unwrap();
            assert!(full.conflicts().is_empty(), "{name}.{id}: {:?}", full.firings);
            assert!(!full.budget_exhausted);
            let first = check(&p, Options::default(), Checks::ALL).unwrap();
            assert_eq!(first.g_saturated, full.g_saturated, "{name}.{id}");
            assert_eq!(first.g_reduced, full.g_reduced, "{name}.{id}");

            let mut verdicts: Vec<&Verdict> = [&full.g_saturated, &full.g_reduced, &full.coreduced]
                .into_iter()
                .flatten()
                .collect();
            let d = full.density.as_ref().unwrap();
            verdicts.extend([&d.pr_dense, &d.apr_dense]);
            verdicts.extend(full.strata.iter().map(|s| &s.saturated));
            for v in verdicts {
                for e in &v.evidence {
                    assert!(e.replay(&p.spec.ring, Budget::default()).unwrap(), "{name}.{id} {}: {e:?}", v.rule);
                }
            }
        }
    }
}

#[test]
fn rules_on_the_codim_sharpness_case() {
    let p = problem("sl2_k3", "first_copy_zero");
    let r = check(&p, all_rules(), Checks::ALL).unwrap();
    assert!(!fired(&r, "g_saturated", "R4"));
    assert!(fired(&r, "g_saturated", "R1"));
    assert_eq!(r.g_saturated.unwrap().rule, "R1");
}

#[test]
fn parse_poly_for_evidence_round_trip() {
    let spec = catalog_get("so3_2v").unwrap();
    let p = problem("so3_2v", "null_cone");
    for g in p.y.generators() {
        assert_eq!(&parse_poly(&g.to_string(), &spec.ring).unwrap(), g);
    }
}
