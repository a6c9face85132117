//! Three-valued verdicts on G-saturation and G-reducedness of a G-stable
//! subset `Y`, produced by named inference rules that each carry replayable
//! evidence.

mod engine;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::catalog::{locate_stratum, null_cone_ideal, pull_back, CatalogError, RepresentationSpec, WitnessPoint};
use crate::diffgeo::{jacobian, rank_at, rank_on_variety, DiffGeoError};
use crate::ideal::{first_outside_radical, ideal_equal, variety_equal, Budget, Ideal, IdealError};
use crate::poly::{parse_poly, PolyError, Polynomial, Ring};

pub use engine::Checker;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProblemError {
    #[error("invalid problem `{id}`: {message}")]
    Invalid { id: String, message: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl ProblemError {
    pub fn is_budget(&self) -> bool {
        match self {
            ProblemError::Ideal(e) => e.is_budget(),
            ProblemError::Catalog(CatalogError::Ideal(e)) => e.is_budget(),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("witness `{0}` is not marked as a closed orbit; orbit classification needs a closed orbit")]
    OrbitNotClosed(String),
    #[error("spec `{0}` declares no real form")]
    NoRealForm(String),
    #[error("problem `{0}` is not declared to be a complexification")]
    NotComplexification(String),
    #[error("the reference ideal is not the radical of the null-cone ideal")]
    ReferenceMismatch,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    DiffGeo(#[from] DiffGeoError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    ProvedYes,
    ProvedNo,
    Unknown,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Value::ProvedYes => "proved_yes",
            Value::ProvedNo => "proved_no",
            Value::Unknown => "unknown",
        })
    }
}

/// Where a rank was measured: at a point, or generically on a variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankSite {
    Point(Vec<String>),
    Variety(Vec<String>),
}

/// A fact that can be re-verified from its own fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Dim {
        note: String,
        ideal: Vec<String>,
        value: i64,
    },
    Rank {
        note: String,
        polys: Vec<String>,
        site: RankSite,
        value: usize,
    },
    Member {
        poly: String,
        ideal: Vec<String>,
        radical: bool,
    },
    Nonmember {
        poly: String,
        ideal: Vec<String>,
        radical: bool,
    },
    WitnessPoint {
        point: Vec<String>,
        zero: Vec<String>,
        nonzero: Vec<String>,
    },
    /// Trusted metadata; replays trivially.
    Fact { statement: String },
}

fn texts(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

impl Evidence {
    pub(crate) fn dim(note: impl Into<String>, i: &Ideal, value: i64) -> Evidence {
        Evidence::Dim {
            note: note.into(),
            ideal: texts(i.generators()),
            value,
        }
    }

    pub(crate) fn member(f: &Polynomial, i: &Ideal, radical: bool, holds: bool) -> Evidence {
        let (poly, ideal) = (f.to_string(), texts(i.generators()));
        if holds {
            Evidence::Member { poly, ideal, radical }
        } else {
            Evidence::Nonmember { poly, ideal, radical }
        }
    }

    pub(crate) fn fact(statement: impl Into<String>) -> Evidence {
        Evidence::Fact {
            statement: statement.into(),
        }
    }

    /// Re-executes the claim in `ring`.
    pub fn replay(&self, ring: &Ring, budget: Budget) -> Result<bool, CheckError> {
        let ideal = |gens: &[String]| Ideal::parse(ring, gens);
        let polys = |gens: &[String]| {
            gens.iter()
                .map(|g| parse_poly(g, ring))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(match self {
            Evidence::Dim { ideal: gens, value, .. } => ideal(gens)?.dim_variety(budget)? == *value,
            Evidence::Rank { polys: ps, site, value, .. } => {
                let fs = polys(ps)?;
                match site {
                    RankSite::Point(pt) => {
                        let point = parse_point(pt)?;
                        rank_at(&jacobian(&fs)?, &point)? == *value
                    }
                    RankSite::Variety(gens) => rank_on_variety(&fs, &ideal(gens)?, budget)?.rank == *value,
                }
            }
            Evidence::Member { poly, ideal: gens, radical } | Evidence::Nonmember { poly, ideal: gens, radical } => {
                let f = parse_poly(poly, ring)?;
                let i = ideal(gens)?;
                let holds = if *radical { i.rad_member(&f, budget)? } else { i.member(&f, budget)? };
                holds == matches!(self, Evidence::Member { .. })
            }
            Evidence::WitnessPoint { point, zero, nonzero } => {
                let pt = parse_point(point)?;
                let all_zero = polys(zero)?
                    .iter()
                    .map(|f| f.eval(&pt))
                    .collect::<Result<Vec<_>, _>>()?
                    .iter()
                    .all(Zero::is_zero);
                let none_zero = polys(nonzero)?
                    .iter()
                    .map(|f| f.eval(&pt))
                    .collect::<Result<Vec<_>, _>>()?
                    .iter()
                    .all(|v| !v.is_zero());
                all_zero && none_zero
            }
            Evidence::Fact { .. } => true,
        })
    }
}

fn parse_point(coords: &[String]) -> Result<Vec<crate::poly::Rational>, PolyError> {
    coords
        .iter()
        .map(|c| {
            c.parse().map_err(|_| PolyError::Syntax {
                offset: 0,
                message: format!("bad rational `{c}`"),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: Value,
    pub rule: String,
    pub evidence: Vec<Evidence>,
}

fn distinct(evidence: Vec<Evidence>) -> Vec<Evidence> {
    let mut out: Vec<Evidence> = Vec::with_capacity(evidence.len());
    for e in evidence {
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

impl Verdict {
    pub fn yes(rule: &str, evidence: Vec<Evidence>) -> Verdict {
        Verdict {
            value: Value::ProvedYes,
            rule: rule.into(),
            evidence: distinct(evidence),
        }
    }

    pub fn no(rule: &str, evidence: Vec<Evidence>) -> Verdict {
        Verdict {
            value: Value::ProvedNo,
            rule: rule.into(),
            evidence: distinct(evidence),
        }
    }

    pub fn unknown(rule: &str) -> Verdict {
        Verdict {
            value: Value::Unknown,
            rule: rule.into(),
            evidence: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.value == Value::ProvedYes
    }

    pub fn is_no(&self) -> bool {
        self.value == Value::ProvedNo
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.value, self.rule)
    }
}

/// Problem inputs before validation.
#[derive(Clone, Debug)]
pub struct ProblemData {
    pub id: String,
    pub spec: Arc<RepresentationSpec>,
    /// Generators of the ideal of `Y`.
    pub y: Ideal,
    /// Polynomials in invariant names whose zero set is `π(Y)`.
    pub relations: Vec<String>,
    /// Ideals of the irreducible components of `Y`, if known.
    pub components: Vec<Ideal>,
    /// The relations generate the ideal of `π(Y)` in the invariant ring.
    pub quotient_ideal_generated: bool,
    pub irreducible: bool,
    /// `Y` is the complexification of a real `K`-stable set.
    pub complexification: bool,
    /// A radical ideal with the same zero set as the null cone.
    pub reference: Option<Ideal>,
}

impl ProblemData {
    pub fn new(id: &str, spec: Arc<RepresentationSpec>, y: Ideal) -> ProblemData {
        ProblemData {
            id: id.into(),
            spec,
            y,
            relations: Vec::new(),
            components: Vec::new(),
            quotient_ideal_generated: false,
            irreducible: false,
            complexification: false,
            reference: None,
        }
    }
}

/// A validated problem. Dereferences to its [`ProblemData`].
#[derive(Clone, Debug)]
pub struct Problem {
    data: ProblemData,
    pulled: Vec<Polynomial>,
}

impl Deref for Problem {
    type Target = ProblemData;

    fn deref(&self) -> &ProblemData {
        &self.data
    }
}

impl Problem {
    /// Checks that `Y` is nonempty, that each relation vanishes on `Y`, that
    /// each component lies in `Y`, and that all ideals share the spec ring.
    pub fn new(data: ProblemData, budget: Budget) -> Result<Problem, ProblemError> {
        let invalid = |message: String| ProblemError::Invalid {
            id: data.id.clone(),
            message,
        };
        let ring = &data.spec.ring;
        let same_ring = |i: &Ideal| i.ring() == ring;
        if !same_ring(&data.y) || !data.components.iter().all(same_ring) || !data.reference.iter().all(same_ring) {
            return Err(PolyError::RingMismatch.into());
        }
        if !data.y.is_proper(budget)? {
            return Err(invalid("Y is empty (1 lies in its ideal)".into()));
        }
        let mut pulled = Vec::with_capacity(data.relations.len());
        for r in &data.relations {
            let f = pull_back(&data.spec, r)?;
            if !data.y.rad_member(&f, budget)? {
                return Err(invalid(format!("relation `{r}` does not vanish on Y")));
            }
            pulled.push(f);
        }
        for (i, c) in data.components.iter().enumerate() {
            if !c.is_proper(budget)? {
                return Err(invalid(format!("component {} is empty", i + 1)));
            }
            if let Some(g) = first_outside_radical(&data.y, c, budget)? {
                return Err(invalid(format!("component {} is not contained in Y (`{g}` does not vanish on it)", i + 1)));
            }
        }
        Ok(Problem { data, pulled })
    }

    /// `Y` = null cone with every positive-degree invariant as a relation.
    pub fn null_cone(spec: &Arc<RepresentationSpec>, budget: Budget) -> Result<Problem, ProblemError> {
        let mut data = ProblemData::new(&format!("{}.null_cone", spec.name), spec.clone(), null_cone_ideal(spec));
        data.relations = spec
            .invariants
            .iter()
            .filter(|i| i.poly.constant_term().is_zero())
            .map(|i| i.name.clone())
            .collect();
        data.quotient_ideal_generated = true;
        data.irreducible = spec.nullcone_irreducible == Some(true);
        Problem::new(data, budget)
    }

    pub fn data(&self) -> &ProblemData {
        &self.data
    }

    pub fn into_data(self) -> ProblemData {
        self.data
    }

    /// The relations as polynomials on `V`.
    pub fn pulled_back(&self) -> &[Polynomial] {
        &self.pulled
    }

    pub fn reference(&self) -> Option<&Ideal> {
        self.data.reference.as_ref()
    }

    pub fn ring(&self) -> &Ring {
        &self.data.spec.ring
    }
}

/// Engine settings. `all_rules` evaluates every rule instead of stopping at
/// the first that fires.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub budget: Budget,
    pub all_rules: bool,
}

/// Which questions to answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub saturated: bool,
    pub reduced: bool,
    pub density: bool,
    pub strata: bool,
    pub coreduced: bool,
    pub real: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        saturated: true,
        reduced: true,
        density: true,
        strata: true,
        coreduced: true,
        real: true,
    };

    pub const NONE: Checks = Checks {
        saturated: false,
        reduced: false,
        density: false,
        strata: false,
        coreduced: false,
        real: false,
    };
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub pr_dense: Verdict,
    pub apr_dense: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealVerdicts {
    pub k_reduced: Verdict,
    pub almost_k_reduced: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub name: String,
    pub meets_y: Option<bool>,
    pub saturated: Verdict,
}

/// One rule that fired while answering a question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Firing {
    pub question: String,
    pub rule: String,
    pub value: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub problem: String,
    pub g_saturated: Option<Verdict>,
    pub g_reduced: Option<Verdict>,
    pub density: Option<Density>,
    pub real: Option<RealVerdicts>,
    pub coreduced: Option<Verdict>,
    pub strata: Vec<StratumReport>,
    /// Every rule firing, in evaluation order (all-rules mode records more).
    pub firings: Vec<Firing>,
    pub budget_exhausted: bool,
    pub timings_ms: BTreeMap<String, f64>,
}

impl CheckReport {
    /// Questions that received both a yes and a no from different rules.
    pub fn conflicts(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for f in &self.firings {
            let clash = self
                .firings
                .iter()
                .any(|g| g.question == f.question && g.value != f.value && g.value != Value::Unknown && f.value != Value::Unknown);
            if clash && !out.contains(&f.question) {
                out.push(f.question.clone());
            }
        }
        out
    }

    /// Structural implications every report must satisfy.
    pub fn invariant_violations(&self, problem: &Problem) -> Vec<&'static str> {
        let mut bad = Vec::new();
        let value = |v: &Option<Verdict>| v.as_ref().map(|v| v.value);
        if value(&self.g_reduced) == Some(Value::ProvedYes) && value(&self.g_saturated) == Some(Value::ProvedNo) {
            bad.push("g_reduced proved_yes but g_saturated proved_no");
        }
        if let Some(r) = &self.real {
            if r.k_reduced.is_yes() && !r.almost_k_reduced.is_yes() {
                bad.push("K_reduced proved_yes without almost_K_reduced proved_yes");
            }
        }
        if problem.complexification && value(&self.g_reduced) == Some(Value::ProvedYes) {
            if let Some(d) = &self.density {
                if d.pr_dense.is_no() {
                    bad.push("complexification is G-reduced but pr_dense proved_no");
                }
            }
        }
        if !self.conflicts().is_empty() {
            bad.push("a question received both proved_yes and proved_no");
        }
        bad
    }
}

/// Runs the requested checks and assembles a report; report invariants are
/// asserted before returning.
pub fn check(problem: &Problem, options: Options, checks: Checks) -> Result<CheckReport, CheckError> {
    let checker = Checker::new(problem, options);
    let mut timings = BTreeMap::new();
    let mut timed = |name: &str, start: std::time::Instant| {
        timings.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
    };

    let start = std::time::Instant::now();
    let density = if checks.density {
        Some(Density {
            pr_dense: checker.pr_dense()?,
            apr_dense: checker.apr_dense()?,
        })
    } else {
        None
    };
    if checks.density {
        timed("density", start);
    }

    let start = std::time::Instant::now();
    let needs_sat = checks.saturated || checks.reduced || checks.real;
    let mut g_sat = if needs_sat { Some(checker.g_saturated()?) } else { None };
    if needs_sat {
        timed("g_saturated", start);
    }

    let start = std::time::Instant::now();
    let g_red = if checks.reduced || checks.real {
        Some(checker.g_reduced()?)
    } else {
        None
    };
    if g_red.is_some() {
        timed("g_reduced", start);
    }

    // A G-reduced set is G-saturated.
    if let (Some(s), Some(r)) = (&mut g_sat, &g_red) {
        if s.value == Value::Unknown && r.is_yes() {
            *s = Verdict::yes("from_g_reduced", vec![Evidence::fact(format!("g_reduced proved_yes by {}", r.rule))]);
        }
    }

    let start = std::time::Instant::now();
    let mut strata = Vec::new();
    if checks.strata {
        for (i, s) in problem.spec.strata.iter().enumerate() {
            let saturated = checker.stratum_saturated(i)?;
            strata.push(StratumReport {
                name: s.name.clone(),
                meets_y: checker.meets_if_known(i),
                saturated,
            });
        }
    }
    if checks.strata {
        timed("strata", start);
    }

    let start = std::time::Instant::now();
    let mut coreduced = None;
    if checks.coreduced && problem.reference().is_some() {
        match check_coreduced(&problem.spec, problem.reference(), options) {
            Ok(v) => coreduced = Some(v),
            Err(CheckError::Ideal(e)) if e.is_budget() => {
                checker.note_exhausted();
                coreduced = Some(Verdict::unknown("budget_exhausted"));
            }
            Err(e) => return Err(e),
        }
    }
    if coreduced.is_some() {
        timed("coreduced", start);
    }

    let mut real = None;
    if checks.real && problem.complexification && problem.spec.real_form.is_some() {
        let (s, r) = (g_sat.as_ref().expect("computed"), g_red.as_ref().expect("computed"));
        real = Some(real_translate(problem, s, r)?);
    }

    let report = CheckReport {
        problem: problem.id.clone(),
        g_saturated: if checks.saturated || checks.real { g_sat } else { None },
        g_reduced: if checks.reduced || checks.real { g_red } else { None },
        density,
        real,
        coreduced,
        strata,
        firings: checker.firings(),
        budget_exhausted: checker.exhausted(),
        timings_ms: timings,
    };

    let bad = report.invariant_violations(problem);
    assert!(bad.is_empty(), "report invariants violated for {}: {bad:?}", problem.id);
    Ok(report)
}

/// Whether the null cone is G-reduced. A reference must have the same zero
/// set; then the answer is whether it equals the null-cone ideal. Without
/// one, the G-reducedness rules run on the null-cone problem.
pub fn check_coreduced(
    spec: &Arc<RepresentationSpec>,
    reference: Option<&Ideal>,
    options: Options,
) -> Result<Verdict, CheckError> {
    let n = null_cone_ideal(spec);
    let budget = options.budget;
    match reference {
        Some(r) => {
            if !variety_equal(&n, r, budget)? {
                return Err(CheckError::ReferenceMismatch);
            }
            if ideal_equal(&n, r, budget)? {
                let evidence = r
                    .generators()
                    .iter()
                    .map(|g| Evidence::member(g, &n, false, true))
                    .collect();
                Ok(Verdict::yes("reference", evidence))
            } else {
                let mut outside = None;
                for g in r.generators() {
                    if !n.member(g, budget)? {
                        outside = Some(g);
                        break;
                    }
                }
                // Every reference generator lies in N while N is strictly larger:
                // the reference is not the radical.
                let g = outside.ok_or(CheckError::ReferenceMismatch)?;
                Ok(Verdict::no("reference", vec![Evidence::member(g, &n, false, false)]))
            }
        }
        None => {
            let problem = Problem::null_cone(spec, budget)?;
            Checker::new(&problem, options).g_reduced()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitVerdicts {
    pub stratum: String,
    pub k_reduced: Verdict,
    pub almost_k_reduced: Verdict,
}

/// Classifies the real orbit through a closed witness by its stratum.
pub fn orbit_check(spec: &RepresentationSpec, w: &WitnessPoint) -> Result<OrbitVerdicts, CheckError> {
    if !w.orbit_closed {
        return Err(CheckError::OrbitNotClosed(w.name.clone()));
    }
    let s = locate_stratum(spec, &w.point)?;
    let point: Vec<String> = w.point.iter().map(|c| c.to_string()).collect();
    let evidence = |flag: &str, holds: bool| {
        vec![
            Evidence::WitnessPoint {
                point: point.clone(),
                zero: texts(s.closure.generators()),
                nonzero: Vec::new(),
            },
            Evidence::fact(format!("stratum `{}` is {}{flag}", s.name, if holds { "" } else { "not " })),
        ]
    };
    let verdict = |holds: bool, flag: &str| {
        if holds {
            Verdict::yes("orbit", evidence(flag, true))
        } else {
            Verdict::no("orbit", evidence(flag, false))
        }
    };
    Ok(OrbitVerdicts {
        stratum: s.name.clone(),
        k_reduced: verdict(s.principal, "principal"),
        almost_k_reduced: verdict(s.almost_principal, "almost principal"),
    })
}

/// For a complexification `Y = X_C`: almost K-reduced is G-saturated and
/// K-reduced is G-reduced.
pub fn real_translate(problem: &Problem, g_saturated: &Verdict, g_reduced: &Verdict) -> Result<RealVerdicts, CheckError> {
    let form = problem
        .spec
        .real_form
        .as_ref()
        .ok_or_else(|| CheckError::NoRealForm(problem.spec.name.clone()))?;
    if !problem.complexification {
        return Err(CheckError::NotComplexification(problem.id.clone()));
    }
    let carry = |v: &Verdict, what: &str| Verdict {
        value: v.value,
        rule: "complexification".into(),
        evidence: vec![Evidence::fact(format!(
            "{what} is {} ({}) for Y = X_C, K = {}, W = {}",
            v.value, v.rule, form.group, form.module
        ))],
    };
    Ok(RealVerdicts {
        k_reduced: carry(g_reduced, "g_reduced"),
        almost_k_reduced: carry(g_saturated, "g_saturated"),
    })
}
