use std::cell::{Cell, OnceCell, RefCell};

use num_traits::{One, Zero};

use super::{texts, CheckError, Evidence, Firing, Options, Problem, RankSite, Value, Verdict};
use crate::catalog::RepresentationSpec;
use crate::diffgeo::{jacobian, rank_at, rank_on_variety, DiffGeoError};
use crate::ideal::{first_outside_radical, Budget, Ideal};
use crate::poly::{int, Polynomial, Rational};

type Found = Option<(Value, Vec<Evidence>)>;
type RuleResult = Result<Found, CheckError>;
type Rule<'p> = (&'static str, fn(&Checker<'p>) -> RuleResult);

fn yes(evidence: Vec<Evidence>) -> RuleResult {
    Ok(Some((Value::ProvedYes, evidence)))
}

fn no(evidence: Vec<Evidence>) -> RuleResult {
    Ok(Some((Value::ProvedNo, evidence)))
}

fn is_budget(e: &CheckError) -> bool {
    match e {
        CheckError::Ideal(e) | CheckError::DiffGeo(DiffGeoError::Ideal(e)) => e.is_budget(),
        CheckError::Problem(e) => e.is_budget(),
        _ => false,
    }
}

#[derive(Clone)]
struct Facts {
    meets: bool,
    ys: Ideal,
    dim: i64,
    evidence: Vec<Evidence>,
}

/// Strata generic for `Y`. When `exact`, the list is complete; otherwise it
/// holds only strata certified generic by dimension counts.
#[derive(Clone)]
struct Generic {
    exact: bool,
    strata: Vec<usize>,
}

fn memo<T: Clone>(cell: &OnceCell<Result<T, CheckError>>, f: impl FnOnce() -> Result<T, CheckError>) -> Result<T, CheckError> {
    cell.get_or_init(f).clone()
}

/// Rule engine over one problem. Intermediate facts are memoized.
pub struct Checker<'p> {
    p: &'p Problem,
    opts: Options,
    pullback: Ideal,
    exhausted: Cell<bool>,
    firings: RefCell<Vec<Firing>>,
    dim_y: OnceCell<Result<i64, CheckError>>,
    facts: Vec<OnceCell<Result<Facts, CheckError>>>,
    sat: Vec<OnceCell<Result<Verdict, CheckError>>>,
    pr: OnceCell<Result<Verdict, CheckError>>,
    apr: OnceCell<Result<Verdict, CheckError>>,
    generic: OnceCell<Result<Generic, CheckError>>,
    g_sat: OnceCell<Result<Verdict, CheckError>>,
    g_red: OnceCell<Result<Verdict, CheckError>>,
}

impl<'p> Checker<'p> {
    pub fn new(p: &'p Problem, opts: Options) -> Checker<'p> {
        let m = p.spec.strata.len();
        Checker {
            pullback: Ideal::new(p.ring(), p.pulled_back().to_vec()).expect("pulled back into the spec ring"),
            p,
            opts,
            exhausted: Cell::new(false),
            firings: RefCell::new(Vec::new()),
            dim_y: OnceCell::new(),
            facts: (0..m).map(|_| OnceCell::new()).collect(),
            sat: (0..m).map(|_| OnceCell::new()).collect(),
            pr: OnceCell::new(),
            apr: OnceCell::new(),
            generic: OnceCell::new(),
            g_sat: OnceCell::new(),
            g_red: OnceCell::new(),
        }
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted.get()
    }

    pub(crate) fn note_exhausted(&self) {
        self.exhausted.set(true);
    }

    pub fn firings(&self) -> Vec<Firing> {
        self.firings.borrow().clone()
    }

    /// `Some(meets)` once the stratum has been examined.
    pub fn meets_if_known(&self, s: usize) -> Option<bool> {
        match self.facts[s].get() {
            Some(Ok(f)) => Some(f.meets),
            _ => None,
        }
    }

    /// Budget failures become `unknown`; other errors propagate.
    fn settle(&self, r: Result<Verdict, CheckError>) -> Result<Verdict, CheckError> {
        match r {
            Err(e) if is_budget(&e) => {
                self.exhausted.set(true);
                Ok(Verdict::unknown("budget_exhausted"))
            }
            other => other,
        }
    }

    pub fn pr_dense(&self) -> Result<Verdict, CheckError> {
        self.settle(self.density(true))
    }

    pub fn apr_dense(&self) -> Result<Verdict, CheckError> {
        self.settle(self.density(false))
    }

    pub fn g_saturated(&self) -> Result<Verdict, CheckError> {
        self.settle(memo(&self.g_sat, || self.run("g_saturated", &Self::SATURATION_RULES)))
    }

    pub fn g_reduced(&self) -> Result<Verdict, CheckError> {
        self.settle(memo(&self.g_red, || self.run("g_reduced", &Self::REDUCEDNESS_RULES)))
    }

    /// Whether `Y ∩ S = π⁻¹(π(Y ∩ S))` for stratum `s`.
    pub fn stratum_saturated(&self, s: usize) -> Result<Verdict, CheckError> {
        self.settle(self.stratum_sat(s))
    }

    const SATURATION_RULES: [Rule<'p>; 9] = [
        ("R1", Self::r1_separating),
        ("R2", Self::r2_all_apr),
        ("R3", Self::r3_cofree),
        ("R4", Self::r4_codim),
        ("R5", Self::r5_fiber_dim),
        ("R6", Self::r6_stratumwise_cofree),
        ("R7", Self::r7_stratumwise_codim),
        ("R8", Self::r8_real_density),
        ("R1", Self::r1_contained),
    ];

    const REDUCEDNESS_RULES: [Rule<'p>; 9] = [
        ("Q1", Self::q1_all_pr),
        ("Q2", Self::q2_cofree),
        ("Q3", Self::q3_serre_sufficient),
        ("Q4", Self::q4_serre_necessary),
        ("Q5", Self::q5_not_saturated),
        ("Q6", Self::q6_slice),
        ("Q7", Self::q7_stratumwise_cofree),
        ("Q8", Self::q8_stratumwise_generated),
        ("Q9", Self::q9_real_density),
    ];

    fn run(&self, question: &str, rules: &[Rule<'p>]) -> Result<Verdict, CheckError> {
        let mut first: Option<Verdict> = None;
        let mut hit_budget = false;
        for (name, rule) in rules {
            match rule(self) {
                Ok(Some((value, evidence))) => {
                    self.firings.borrow_mut().push(Firing {
                        question: question.into(),
                        rule: name.to_string(),
                        value,
                    });
                    if first.is_none() {
                        first = Some(Verdict {
                            value,
                            rule: name.to_string(),
                            evidence,
                        });
                    }
                    if !self.opts.all_rules {
                        break;
                    }
                }
                Ok(None) => {}
                Err(e) if is_budget(&e) => hit_budget = true,
                Err(e) => return Err(e),
            }
        }
        Ok(first.unwrap_or_else(|| {
            if hit_budget {
                self.exhausted.set(true);
                Verdict::unknown("budget_exhausted")
            } else {
                Verdict::unknown("none")
            }
        }))
    }

    fn spec(&self) -> &RepresentationSpec {
        &self.p.spec
    }

    fn budget(&self) -> Budget {
        self.opts.budget
    }

    fn y(&self) -> &Ideal {
        &self.p.y
    }

    fn arity(&self) -> i64 {
        self.p.ring().arity() as i64
    }

    fn k(&self) -> usize {
        self.p.relations.len()
    }

    fn stratum_name(&self, s: usize) -> &str {
        &self.spec().strata[s].name
    }

    fn dim_y(&self) -> Result<i64, CheckError> {
        memo(&self.dim_y, || Ok(self.y().dim_variety(self.budget())?))
    }

    fn codim_y(&self) -> Result<i64, CheckError> {
        Ok(self.arity() - self.dim_y()?)
    }

    /// Whether `Y` meets stratum `s`, and `dim(Y ∩ closure(s))`. `Y` meets the
    /// stratum iff `Y ∩ closure(s)` is not covered by the boundary closures;
    /// the boundary union is cut out by products of one generator each.
    fn facts(&self, s: usize) -> Result<Facts, CheckError> {
        memo(&self.facts[s], || {
            let spec = self.spec();
            let name = &spec.strata[s].name;
            let ys = self.y().sum(&spec.strata[s].closure)?;
            let dim = ys.dim_variety(self.budget())?;
            let dim_ev = Evidence::dim(format!("dim(Y + closure({name}))"), &ys, dim);
            if dim < 0 {
                return Ok(Facts {
                    meets: false,
                    ys,
                    dim,
                    evidence: vec![dim_ev],
                });
            }
            let boundary: Vec<&[Polynomial]> = spec
                .boundary(s)
                .into_iter()
                .map(|t| spec.strata[t].closure.generators())
                .collect();
            if boundary.is_empty() {
                return Ok(Facts {
                    meets: true,
                    ys,
                    dim,
                    evidence: vec![dim_ev],
                });
            }
            let mut inside = Vec::new();
            for prod in products(&boundary, self.p.ring()) {
                if !ys.rad_member(&prod, self.budget())? {
                    let evidence = vec![dim_ev, Evidence::member(&prod, &ys, true, false)];
                    return Ok(Facts {
                        meets: true,
                        ys,
                        dim,
                        evidence,
                    });
                }
                inside.push(Evidence::member(&prod, &ys, true, true));
            }
            Ok(Facts {
                meets: false,
                ys,
                dim,
                evidence: inside,
            })
        })
    }

    fn meeting_strata(&self) -> Result<Vec<usize>, CheckError> {
        let mut out = Vec::new();
        for s in 0..self.spec().strata.len() {
            if self.facts(s)?.meets {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Component ideals: supplied ones, or `Y` itself when irreducible.
    fn components(&self) -> Option<Vec<&Ideal>> {
        if !self.p.components.is_empty() {
            Some(self.p.components.iter().collect())
        } else if self.p.irreducible {
            Some(vec![self.y()])
        } else {
            None
        }
    }

    fn density(&self, principal: bool) -> Result<Verdict, CheckError> {
        let cell = if principal { &self.pr } else { &self.apr };
        memo(cell, || {
            let spec = self.spec();
            let bad: Vec<usize> = (0..spec.strata.len())
                .filter(|&s| {
                    let st = &spec.strata[s];
                    !if principal { st.principal } else { st.almost_principal }
                })
                .collect();
            let dy = self.dim_y()?;
            let mut evidence = vec![Evidence::dim("dim Y", self.y(), dy)];
            let mut small = true;
            for &s in &bad {
                let f = self.facts(s)?;
                evidence.push(Evidence::dim(format!("dim(Y + closure({}))", self.stratum_name(s)), &f.ys, f.dim));
                small &= f.dim < dy;
            }
            if small {
                return Ok(Verdict::yes("dimension", evidence));
            }
            let Some(comps) = self.components() else {
                return Ok(Verdict::unknown("none"));
            };
            let mut outside = Vec::new();
            for (ci, c) in comps.iter().enumerate() {
                for &s in &bad {
                    let closure = &spec.strata[s].closure;
                    match first_outside_radical(closure, c, self.budget())? {
                        None => {
                            let mut ev = vec![Evidence::fact(format!(
                                "component {} of Y lies in closure({})",
                                ci + 1,
                                self.stratum_name(s)
                            ))];
                            ev.extend(closure.generators().iter().map(|g| Evidence::member(g, c, true, true)));
                            return Ok(Verdict::no("component", ev));
                        }
                        Some(g) => outside.push(Evidence::member(g, c, true, false)),
                    }
                }
            }
            Ok(Verdict::yes("component", outside))
        })
    }

    fn generic(&self) -> Result<Generic, CheckError> {
        memo(&self.generic, || {
            let spec = self.spec();
            let m = spec.strata.len();
            if let Some(comps) = self.components() {
                let mut strata = Vec::new();
                for c in comps {
                    let mut containing = Vec::new();
                    for s in 0..m {
                        if first_outside_radical(&spec.strata[s].closure, c, self.budget())?.is_none() {
                            containing.push(s);
                        }
                    }
                    let least = containing
                        .iter()
                        .copied()
                        .find(|&s| containing.iter().all(|&t| t == s || spec.strictly_below(t).contains(&s)));
                    match least {
                        Some(s) if !strata.contains(&s) => strata.push(s),
                        Some(_) => {}
                        None => return self.generic_by_dimension(),
                    }
                }
                strata.sort_unstable();
                return Ok(Generic { exact: true, strata });
            }
            self.generic_by_dimension()
        })
    }

    /// Strata `S` with `dim(Y ∩ closure(S)) = dim Y` while every smaller
    /// closure meets `Y` in lower dimension.
    fn generic_by_dimension(&self) -> Result<Generic, CheckError> {
        let dy = self.dim_y()?;
        let mut strata = Vec::new();
        for s in 0..self.spec().strata.len() {
            let f = self.facts(s)?;
            if !f.meets || f.dim != dy {
                continue;
            }
            let mut lower = true;
            for &t in self.spec().strictly_below(s) {
                lower &= self.facts(t)?.dim < dy;
            }
            if lower {
                strata.push(s);
            }
        }
        Ok(Generic { exact: false, strata })
    }

    /// Strata on which stratum-wise hypotheses must be checked: the generic
    /// ones when known exactly, otherwise every stratum meeting `Y`.
    fn stratumwise_targets(&self) -> Result<Vec<usize>, CheckError> {
        let g = self.generic()?;
        if g.exact {
            Ok(g.strata)
        } else {
            self.meeting_strata()
        }
    }

    fn stratum_sat(&self, s: usize) -> Result<Verdict, CheckError> {
        memo(&self.sat[s], || {
            let f = self.facts(s)?;
            if !f.meets {
                return Ok(Verdict::yes("vacuous", f.evidence));
            }
            let st = &self.spec().strata[s];
            if f.dim < st.fiber_dim as i64 {
                let mut ev = f.evidence.clone();
                ev.push(Evidence::fact(format!("fibers in stratum {} have dimension {}", st.name, st.fiber_dim)));
                return Ok(Verdict::no("R5", ev));
            }
            if self.k() > 0 {
                let ps = self.pullback.sum(&st.closure)?;
                if first_outside_radical(self.y(), &ps, self.budget())?.is_none() {
                    let ev = self
                        .y()
                        .generators()
                        .iter()
                        .map(|g| Evidence::member(g, &ps, true, true))
                        .collect();
                    return Ok(Verdict::yes("R1", ev));
                }
            }
            Ok(Verdict::unknown("none"))
        })
    }

    fn stratum_reduced(&self, s: usize) -> Result<Option<Vec<Evidence>>, CheckError> {
        let v = self.stratum_sat(s)?;
        let st = &self.spec().strata[s];
        if v.is_yes() && st.slice_coreduced == Some(true) {
            let mut ev = v.evidence;
            ev.push(Evidence::fact(format!("slice representation of {} is coreduced", st.name)));
            Ok(Some(ev))
        } else {
            Ok(None)
        }
    }

    fn g_sat_value(&self) -> Result<Verdict, CheckError> {
        memo(&self.g_sat, || self.run("g_saturated", &Self::SATURATION_RULES))
    }

    fn fact_cofree(&self) -> Evidence {
        Evidence::fact(format!("{} is cofree", self.spec().name))
    }

    // Saturation rules.

    fn separating_generator(&self) -> Result<Option<Polynomial>, CheckError> {
        if self.k() == 0 {
            return Ok(None);
        }
        Ok(first_outside_radical(self.y(), &self.pullback, self.budget())?.cloned())
    }

    fn r1_separating(&self) -> RuleResult {
        let Some(g) = self.separating_generator()? else {
            return Ok(None);
        };
        let mut ev = vec![Evidence::member(&g, &self.pullback, true, false)];
        if let Some(pt) = find_witness(self.pullback.generators(), &g) {
            ev.push(Evidence::WitnessPoint {
                point: pt.iter().map(|c| c.to_string()).collect(),
                zero: texts(self.pullback.generators()),
                nonzero: vec![g.to_string()],
            });
        }
        no(ev)
    }

    fn r1_contained(&self) -> RuleResult {
        if self.k() == 0 || self.separating_generator()?.is_some() {
            return Ok(None);
        }
        yes(self
            .y()
            .generators()
            .iter()
            .map(|g| Evidence::member(g, &self.pullback, true, true))
            .collect())
    }

    fn r2_all_apr(&self) -> RuleResult {
        let mut ev = Vec::new();
        for (s, st) in self.spec().strata.iter().enumerate() {
            if st.almost_principal {
                continue;
            }
            let f = self.facts(s)?;
            if f.meets {
                return Ok(None);
            }
            ev.extend(f.evidence);
        }
        yes(ev)
    }

    fn r3_cofree(&self) -> RuleResult {
        let d = self.density(false)?;
        if !self.spec().cofree || !d.is_yes() {
            return Ok(None);
        }
        let mut ev = vec![self.fact_cofree()];
        ev.extend(d.evidence);
        yes(ev)
    }

    fn r4_codim(&self) -> RuleResult {
        let k = self.k();
        if k == 0 {
            return Ok(None);
        }
        let d = self.density(false)?;
        if !d.is_yes() {
            return Ok(None);
        }
        let mut ev = d.evidence;
        for (s, st) in self.spec().strata.iter().enumerate() {
            if st.almost_principal || !self.facts(s)?.meets {
                continue;
            }
            if st.codim < k + 1 {
                return Ok(None);
            }
            ev.push(Evidence::dim(format!("dim closure({})", st.name), &st.closure, self.arity() - st.codim as i64));
        }
        ev.push(Evidence::fact(format!("{k} relations cut out the image of Y")));
        yes(ev)
    }

    fn r5_fiber_dim(&self) -> RuleResult {
        for s in 0..self.spec().strata.len() {
            let v = self.stratum_sat(s)?;
            if v.is_no() && v.rule == "R5" {
                return no(v.evidence);
            }
        }
        Ok(None)
    }

    fn r6_stratumwise_cofree(&self) -> RuleResult {
        if !self.spec().cofree {
            return Ok(None);
        }
        let mut ev = vec![self.fact_cofree()];
        for s in self.stratumwise_targets()? {
            let v = self.stratum_sat(s)?;
            if !v.is_yes() {
                return Ok(None);
            }
            ev.extend(v.evidence);
        }
        yes(ev)
    }

    fn r7_stratumwise_codim(&self) -> RuleResult {
        let k = self.k();
        let g = self.generic()?;
        if k == 0 || !g.exact {
            return Ok(None);
        }
        let mut ev = Vec::new();
        for &s in &g.strata {
            let v = self.stratum_sat(s)?;
            if !v.is_yes() {
                return Ok(None);
            }
            ev.extend(v.evidence);
        }
        for s in self.meeting_strata()? {
            let st = &self.spec().strata[s];
            if g.strata.contains(&s) {
                continue;
            }
            if st.codim <= k {
                return Ok(None);
            }
            ev.push(Evidence::fact(format!("non-generic stratum {} has codim {} > {k}", st.name, st.codim)));
        }
        yes(ev)
    }

    fn r8_real_density(&self) -> RuleResult {
        if !self.p.complexification {
            return Ok(None);
        }
        let d = self.density(false)?;
        if !d.is_no() {
            return Ok(None);
        }
        let mut ev = vec![Evidence::fact("Y is a complexification whose almost principal part is not dense")];
        ev.extend(d.evidence);
        no(ev)
    }

    // Reducedness rules.

    fn q1_all_pr(&self) -> RuleResult {
        let mut ev = Vec::new();
        for (s, st) in self.spec().strata.iter().enumerate() {
            if st.principal {
                continue;
            }
            let f = self.facts(s)?;
            if f.meets {
                return Ok(None);
            }
            ev.extend(f.evidence);
        }
        yes(ev)
    }

    fn q2_cofree(&self) -> RuleResult {
        let d = self.density(true)?;
        if !self.spec().cofree || !d.is_yes() {
            return Ok(None);
        }
        let mut ev = vec![self.fact_cofree()];
        ev.extend(d.evidence);
        yes(ev)
    }

    fn generated_with_codim_k(&self) -> Result<bool, CheckError> {
        let k = self.k() as i64;
        Ok(k > 0 && self.p.quotient_ideal_generated && self.codim_y()? == k)
    }

    fn q3_serre_sufficient(&self) -> RuleResult {
        if !self.generated_with_codim_k()? || !self.g_sat_value()?.is_yes() {
            return Ok(None);
        }
        let d = self.density(true)?;
        if !d.is_yes() {
            return Ok(None);
        }
        let mut ev = vec![Evidence::dim("dim Y", self.y(), self.dim_y()?)];
        ev.extend(d.evidence);
        ev.extend(self.witness_ranks()?);
        yes(ev)
    }

    /// Jacobian ranks of the relations at catalog witnesses in `Y` attaining
    /// `k`, one per known component.
    fn witness_ranks(&self) -> Result<Vec<Evidence>, CheckError> {
        let k = self.k();
        let jac = jacobian(self.p.pulled_back())?;
        let comps: Vec<&Ideal> = self.components().unwrap_or_else(|| vec![self.y()]);
        let mut found = vec![false; comps.len()];
        let mut ev = Vec::new();
        for w in &self.spec().witnesses {
            let on = |i: &Ideal| -> Result<bool, CheckError> {
                for g in i.generators() {
                    if !g.eval(&w.point)?.is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            };
            if !on(self.y())? {
                continue;
            }
            let r = rank_at(&jac, &w.point)?;
            if r != k {
                continue;
            }
            for (ci, c) in comps.iter().enumerate() {
                if !found[ci] && on(c)? {
                    found[ci] = true;
                    ev.push(Evidence::Rank {
                        note: format!("rank of the relations at witness {}", w.name),
                        polys: texts(self.p.pulled_back()),
                        site: RankSite::Point(w.point.iter().map(|c| c.to_string()).collect()),
                        value: r,
                    });
                }
            }
        }
        Ok(ev)
    }

    fn q4_serre_necessary(&self) -> RuleResult {
        if self.k() == 0 || !self.p.quotient_ideal_generated {
            return Ok(None);
        }
        let Some(comps) = self.components() else {
            return Ok(None);
        };
        for c in comps {
            let dim = c.dim_variety(self.budget())?;
            let codim = (self.arity() - dim) as usize;
            let r = rank_on_variety(self.p.pulled_back(), c, self.budget())?;
            if r.rank < codim {
                return no(vec![
                    Evidence::dim("dim of component", c, dim),
                    Evidence::Rank {
                        note: "generic rank of the relations on the component".into(),
                        polys: texts(self.p.pulled_back()),
                        site: RankSite::Variety(texts(c.generators())),
                        value: r.rank,
                    },
                    Evidence::fact("the relations generate the ideal of the image of Y"),
                ]);
            }
        }
        Ok(None)
    }

    fn q5_not_saturated(&self) -> RuleResult {
        let v = self.g_sat_value()?;
        if !v.is_no() {
            return Ok(None);
        }
        let mut ev = vec![Evidence::fact(format!("g_saturated proved_no by {}", v.rule))];
        ev.extend(v.evidence);
        no(ev)
    }

    fn q6_slice(&self) -> RuleResult {
        for s in self.generic()?.strata {
            let st = &self.spec().strata[s];
            if st.slice_coreduced == Some(false) {
                let f = self.facts(s)?;
                let mut ev = f.evidence;
                ev.push(Evidence::fact(format!("stratum {} is generic for Y; its slice is not coreduced", st.name)));
                return no(ev);
            }
        }
        Ok(None)
    }

    fn q7_stratumwise_cofree(&self) -> RuleResult {
        if !self.spec().cofree {
            return Ok(None);
        }
        let mut ev = vec![self.fact_cofree()];
        for s in self.stratumwise_targets()? {
            match self.stratum_reduced(s)? {
                Some(e) => ev.extend(e),
                None => return Ok(None),
            }
        }
        yes(ev)
    }

    fn q8_stratumwise_generated(&self) -> RuleResult {
        if !self.generated_with_codim_k()? || !self.g_sat_value()?.is_yes() {
            return Ok(None);
        }
        let mut ev = Vec::new();
        for s in self.stratumwise_targets()? {
            match self.stratum_reduced(s)? {
                Some(e) => ev.extend(e),
                None => return Ok(None),
            }
        }
        yes(ev)
    }

    fn q9_real_density(&self) -> RuleResult {
        if !self.p.complexification {
            return Ok(None);
        }
        let d = self.density(true)?;
        if !d.is_no() {
            return Ok(None);
        }
        let mut ev = vec![Evidence::fact("Y is a complexification whose principal part is not dense")];
        ev.extend(d.evidence);
        no(ev)
    }
}

/// All products taking one polynomial from each list.
fn products(lists: &[&[Polynomial]], ring: &crate::poly::Ring) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one(ring)];
    for list in lists {
        out = out.iter().flat_map(|p| list.iter().map(move |g| p * g)).collect();
    }
    out
}

/// A small integer point where every `zero` polynomial vanishes and `nonzero`
/// does not: `{0,1}^n` first, then `{0,1,-1}^n`, in lexicographic order.
fn find_witness(zero: &[Polynomial], nonzero: &Polynomial) -> Option<Vec<Rational>> {
    let n = nonzero.ring().arity();
    if n > 12 {
        return None;
    }
    for values in [vec![Rational::zero(), Rational::one()], vec![Rational::zero(), Rational::one(), int(-1)]] {
        let mut idx = vec![0usize; n];
        loop {
            let point: Vec<Rational> = idx.iter().map(|&i| values[i].clone()).collect();
            let hit = nonzero.eval(&point).map(|v| !v.is_zero()).unwrap_or(false)
                && zero.iter().all(|f| f.eval(&point).map(|v| v.is_zero()).unwrap_or(false));
            if hit {
                return Some(point);
            }
            let Some(pos) = (0..n).rev().find(|&i| idx[i] + 1 < values.len()) else {
                break;
            };
            idx[pos] += 1;
            idx[pos + 1..].iter_mut().for_each(|i| *i = 0);
        }
    }
    None
}
