//! Built-in representations `(V, G)` with their invariants, strata, witness
//! points and bundled problems.
//!
//! Orthogonal groups use split bilinear forms (`2 x1 x3 + x2^2` for SO3,
//! `2 x1 x2` for SO2) so that isotropic witness points are rational. In the
//! SO2 entry `f12^2 - f11*f22 = e^2` with `e = p1*q2 - p2*q1`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::checker::{Problem, ProblemData, ProblemError};
use crate::diffgeo::{minors_ideal, PolyMatrix};
use crate::ideal::{Budget, Ideal, IdealError};
use crate::poly::{parse_poly, PolyError, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{name}` (available: {available})")]
    UnknownEntry { name: String, available: String },
    #[error("unknown problem `{problem}` for entry `{entry}`")]
    UnknownProblem { entry: String, problem: String },
    #[error("invalid representation spec `{spec}`: {message}")]
    Invalid { spec: String, message: String },
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
    #[error("no stratum closure contains the point")]
    NoStratum,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Clone, Debug)]
pub struct Invariant {
    pub name: String,
    pub poly: Polynomial,
}

#[derive(Clone, Debug)]
pub struct StratumSpec {
    pub name: String,
    pub closure: Ideal,
    pub codim: usize,
    pub principal: bool,
    pub almost_principal: bool,
    /// Dimension of the quotient fiber through a point of the stratum.
    pub fiber_dim: usize,
    /// Whether the slice representation is coreduced, when known.
    pub slice_coreduced: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessPoint {
    pub name: String,
    pub point: Vec<Rational>,
    pub stratum: String,
    pub orbit_closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealForm {
    /// Compact group label, e.g. `SU(2)`.
    pub group: String,
    /// Real module label, e.g. `2H+R`.
    pub module: String,
}

/// Unvalidated representation data; see [`RepresentationSpec::new`].
#[derive(Clone, Debug)]
pub struct SpecData {
    pub name: String,
    pub group: String,
    pub ring: Ring,
    pub invariants: Vec<Invariant>,
    pub dim_invariant_ring: usize,
    pub strata: Vec<StratumSpec>,
    pub witnesses: Vec<WitnessPoint>,
    pub cofree: bool,
    pub stable: bool,
    pub nullcone_irreducible: Option<bool>,
    pub real_form: Option<RealForm>,
}

/// A validated representation spec. Dereferences to its [`SpecData`].
#[derive(Debug)]
pub struct RepresentationSpec {
    data: SpecData,
    invariant_ring: Ring,
    /// `below[s]`: strata whose closure is strictly contained in that of `s`.
    below: Vec<Vec<usize>>,
}

impl Deref for RepresentationSpec {
    type Target = SpecData;

    fn deref(&self) -> &SpecData {
        &self.data
    }
}

impl RepresentationSpec {
    /// Validates everything recomputable: codimensions, the cofreeness
    /// dimension count, witness strata, and the closure order.
    pub fn new(data: SpecData, budget: Budget) -> Result<RepresentationSpec, CatalogError> {
        let invalid = |message: String| CatalogError::Invalid {
            spec: data.name.clone(),
            message,
        };
        let names: Vec<&str> = data.invariants.iter().map(|i| i.name.as_str()).collect();
        let invariant_ring = Ring::new(names.iter().copied())
            .map_err(|e| invalid(format!("invariant names: {e}")))?;
        let n = data.ring.arity();
        if data.invariants.iter().any(|i| i.poly.ring() != &data.ring)
            || data.strata.iter().any(|s| s.closure.ring() != &data.ring)
        {
            return Err(PolyError::RingMismatch.into());
        }

        let mut seen = HashSet::new();
        for s in &data.strata {
            if !seen.insert(s.name.as_str()) {
                return Err(invalid(format!("duplicate stratum `{}`", s.name)));
            }
            if s.principal && !s.almost_principal {
                return Err(invalid(format!("stratum `{}` is principal but not almost principal", s.name)));
            }
            if s.fiber_dim > n {
                return Err(invalid(format!("stratum `{}` has fiber dimension above {n}", s.name)));
            }
            let dim = s.closure.dim_variety(budget)?;
            if dim < 0 {
                return Err(invalid(format!("stratum `{}` has an empty closure", s.name)));
            }
            if s.codim as i64 != n as i64 - dim {
                return Err(invalid(format!(
                    "stratum `{}` declares codim {} but its closure has codim {}",
                    s.name,
                    s.codim,
                    n as i64 - dim
                )));
            }
        }
        let principal = data.strata.iter().filter(|s| s.principal).count();
        if data.stable && principal != 1 {
            return Err(invalid(format!("stable spec needs exactly one principal stratum, found {principal}")));
        }

        let null_dim = null_cone_of(&data).dim_variety(budget)?;
        let count_ok = null_dim + data.dim_invariant_ring as i64 == n as i64;
        if count_ok != data.cofree {
            return Err(invalid(format!(
                "cofree={} but dim null cone {} + dim invariant ring {} {} {n}",
                data.cofree,
                null_dim,
                data.dim_invariant_ring,
                if count_ok { "=" } else { "!=" }
            )));
        }

        let below = closure_order(&data.strata, budget)?;

        let mut wseen = HashSet::new();
        for w in &data.witnesses {
            if !wseen.insert(w.name.as_str()) {
                return Err(invalid(format!("duplicate witness `{}`", w.name)));
            }
            if w.point.len() != n {
                return Err(invalid(format!("witness `{}` has {} coordinates, expected {n}", w.name, w.point.len())));
            }
            let si = data
                .strata
                .iter()
                .position(|s| s.name == w.stratum)
                .ok_or_else(|| invalid(format!("witness `{}` names unknown stratum `{}`", w.name, w.stratum)))?;
            if !vanishes(&data.strata[si].closure, &w.point)? {
                return Err(invalid(format!("witness `{}` is not in the closure of `{}`", w.name, w.stratum)));
            }
            for &t in &below[si] {
                if vanishes(&data.strata[t].closure, &w.point)? {
                    return Err(invalid(format!(
                        "witness `{}` lies in the closure of the smaller stratum `{}`",
                        w.name, data.strata[t].name
                    )));
                }
            }
        }

        Ok(RepresentationSpec {
            data,
            invariant_ring,
            below,
        })
    }

    pub fn data(&self) -> &SpecData {
        &self.data
    }

    /// Ring whose variables are the invariant names.
    pub fn invariant_ring(&self) -> &Ring {
        &self.invariant_ring
    }

    /// Indices of strata whose closures lie strictly inside that of `s`.
    pub fn strictly_below(&self, s: usize) -> &[usize] {
        &self.below[s]
    }

    /// Strictly smaller strata that are maximal among them; their closures
    /// cover the boundary of `s`.
    pub fn boundary(&self, s: usize) -> Vec<usize> {
        let below = &self.below[s];
        below
            .iter()
            .copied()
            .filter(|&t| !below.iter().any(|&u| self.below[u].contains(&t)))
            .collect()
    }

    pub fn stratum_index(&self, name: &str) -> Option<usize> {
        self.strata.iter().position(|s| s.name == name)
    }

    pub fn witness(&self, name: &str) -> Option<&WitnessPoint> {
        self.witnesses.iter().find(|w| w.name == name)
    }
}

fn vanishes(i: &Ideal, point: &[Rational]) -> Result<bool, PolyError> {
    for g in i.generators() {
        if !g.eval(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn closure_order(strata: &[StratumSpec], budget: Budget) -> Result<Vec<Vec<usize>>, IdealError> {
    let m = strata.len();
    // inside[t][s]: closure of t is contained in closure of s.
    let mut inside = vec![vec![false; m]; m];
    for t in 0..m {
        for s in 0..m {
            inside[t][s] = t == s
                || crate::ideal::first_outside_radical(&strata[s].closure, &strata[t].closure, budget)?.is_none();
        }
    }
    Ok((0..m)
        .map(|s| (0..m).filter(|&t| t != s && inside[t][s] && !inside[s][t]).collect())
        .collect())
}

fn null_cone_of(data: &SpecData) -> Ideal {
    let gens = data
        .invariants
        .iter()
        .filter(|i| i.poly.constant_term().is_zero())
        .map(|i| i.poly.clone())
        .collect();
    Ideal::new(&data.ring, gens).expect("invariants share the ring")
}

/// The ideal generated by invariant generators without constant term.
pub fn null_cone_ideal(spec: &RepresentationSpec) -> Ideal {
    null_cone_of(spec)
}

/// Substitutes the invariant polynomials into `expr`, which is written in
/// invariant names.
pub fn pull_back(spec: &RepresentationSpec, expr: &str) -> Result<Polynomial, CatalogError> {
    let f = parse_poly(expr, spec.invariant_ring()).map_err(|e| match e {
        PolyError::UnknownVariable(v) => CatalogError::UnknownInvariant(v),
        other => other.into(),
    })?;
    let subs: Vec<Polynomial> = spec.invariants.iter().map(|i| i.poly.clone()).collect();
    Ok(f.compose(&subs)?)
}

/// The stratum with the smallest closure containing `point`.
pub fn locate_stratum<'a>(spec: &'a RepresentationSpec, point: &[Rational]) -> Result<&'a StratumSpec, CatalogError> {
    let mut hits = Vec::new();
    for (i, s) in spec.strata.iter().enumerate() {
        if vanishes(&s.closure, point)? {
            hits.push(i);
        }
    }
    hits.iter()
        .copied()
        .find(|&i| hits.iter().all(|&j| j == i || spec.strictly_below(j).contains(&i)))
        .map(|i| &spec.strata[i])
        .ok_or(CatalogError::NoStratum)
}

/// Names and one-line descriptions of the shipped entries.
pub const ENTRIES: [(&str, &str); 6] = [
    ("sl2_k2", "SL2 on 2C^2: one determinant invariant, cofree, coreduced"),
    ("sl2_k3", "SL2 on 3C^2: determinantal null cone of codim 2, coreduced; sharpness of the codim bound"),
    ("sl2_k4", "SL2 on 4C^2: V(D12,D34) is G-reduced; 2C^2 x 0 is not G-saturated (not cofree)"),
    ("so3_2v", "SO3 on 2C^3 (split form): cofree, null cone of codim 3 is not G-reduced"),
    ("so2_2v", "SO2 on 2C^2 (split form): apr-dense union of two planes that is not G-saturated"),
    ("su2_quat", "SU2 on 2H + R complexified: smooth real X whose complexification meets the null cone"),
];

/// Validated spec by name; specs are validated once and shared.
pub fn catalog_get(name: &str) -> Result<Arc<RepresentationSpec>, CatalogError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<RepresentationSpec>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(spec) = cache.lock().expect("catalog lock").get(name) {
        return Ok(spec.clone());
    }
    let data = match name {
        "sl2_k2" => sl2(2),
        "sl2_k3" => sl2(3),
        "sl2_k4" => sl2(4),
        "so3_2v" => so3(),
        "so2_2v" => so2(),
        "su2_quat" => su2(),
        _ => {
            return Err(CatalogError::UnknownEntry {
                name: name.to_string(),
                available: ENTRIES.map(|e| e.0).join(", "),
            })
        }
    };
    let spec = Arc::new(RepresentationSpec::new(data, Budget::default())?);
    cache
        .lock()
        .expect("catalog lock")
        .insert(name.to_string(), spec.clone());
    Ok(spec)
}

/// Ids of the problems bundled with an entry; the first is the default.
pub fn problem_ids(name: &str) -> Result<&'static [&'static str], CatalogError> {
    Ok(match name {
        "sl2_k2" => &["null_cone"],
        "sl2_k3" => &["null_cone", "first_copy_zero"],
        "sl2_k4" => &["two_determinants", "two_copies"],
        "so3_2v" => &["null_cone"],
        "so2_2v" => &["axes", "null_cone"],
        "su2_quat" => &["circle"],
        _ => {
            return Err(CatalogError::UnknownEntry {
                name: name.to_string(),
                available: ENTRIES.map(|e| e.0).join(", "),
            })
        }
    })
}

/// A bundled problem; `None` selects the default.
pub fn catalog_problem(name: &str, problem: Option<&str>) -> Result<Problem, ProblemError> {
    let ids = problem_ids(name)?;
    let id = problem.unwrap_or(ids[0]);
    if !ids.contains(&id) {
        return Err(CatalogError::UnknownProblem {
            entry: name.to_string(),
            problem: id.to_string(),
        }
        .into());
    }
    let spec = catalog_get(name)?;
    let data = bundled(&spec, id)?;
    Problem::new(data, Budget::default())
}

fn bundled(spec: &Arc<RepresentationSpec>, id: &str) -> Result<ProblemData, CatalogError> {
    let ring = &spec.ring;
    let ideal = |texts: &[&str]| Ideal::parse(ring, texts);
    let rel = |texts: &[&str]| texts.iter().map(|t| t.to_string()).collect::<Vec<_>>();
    let mut p = ProblemData::new(&format!("{}.{id}", spec.name), spec.clone(), ideal(&[])?);
    match (spec.name.as_str(), id) {
        (entry, "null_cone") => {
            p.y = null_cone_ideal(spec);
            p.relations = spec.invariants.iter().map(|i| i.name.clone()).collect();
            p.quotient_ideal_generated = true;
            p.irreducible = spec.nullcone_irreducible == Some(true);
            if let Some(k) = entry.strip_prefix("sl2_k") {
                let k: usize = k.parse().expect("entry suffix");
                let entries = (1..=k)
                    .map(|i| format!("a{i}"))
                    .chain((1..=k).map(|i| format!("b{i}")))
                    .map(|v| Polynomial::var(ring, &v))
                    .collect::<Result<Vec<_>, _>>()?;
                let m = PolyMatrix::new(ring, 2, k, entries).expect("2 x k entries");
                p.reference = Some(minors_ideal(&m, 2).expect("2 <= k"));
            }
        }
        ("sl2_k3", "first_copy_zero") => {
            p.y = ideal(&["a1", "b1"])?;
            p.relations = rel(&["D12", "D13"]);
            p.quotient_ideal_generated = true;
            p.irreducible = true;
        }
        ("sl2_k4", "two_determinants") => {
            p.y = ideal(&["a1*b2 - a2*b1", "a3*b4 - a4*b3"])?;
            p.relations = rel(&["D12", "D34"]);
            p.quotient_ideal_generated = true;
            p.irreducible = true;
        }
        ("sl2_k4", "two_copies") => {
            p.y = ideal(&["a3", "b3", "a4", "b4"])?;
            p.relations = rel(&["D13", "D14", "D23", "D24", "D34"]);
            p.irreducible = true;
            p.complexification = true;
        }
        ("so2_2v", "axes") => {
            p.y = ideal(&["p1*q1", "p1*q2", "p2*q1", "p2*q2"])?;
            p.relations = rel(&["e", "f12", "f11*f22"]);
            p.components = vec![ideal(&["p1", "p2"])?, ideal(&["q1", "q2"])?];
            p.complexification = true;
        }
        ("su2_quat", "circle") => {
            p.y = ideal(&[
                "q0*p1 - p0*q1 + p2*q3 - p3*q2",
                "q0*p2 - p0*q2 + p3*q1 - p1*q3",
                "q0*p3 - p0*q3 + p1*q2 - p2*q1",
                "p0^2 + p1^2 + p2^2 + p3^2 - q0^2 - q1^2 - q2^2 - q3^2",
                "p0^2 + p1^2 + p2^2 + p3^2 - p0*q0 - p1*q1 - p2*q2 - p3*q3",
                "(p0^2 + p1^2 + p2^2 + p3^2 - 1)^2 + x^2 - 1/2",
                "p0 - q0",
                "p1 - q1",
                "p2 - q2",
                "p3 - q3",
            ])?;
            p.relations = rel(&["delta", "epsilon", "zeta", "alpha - beta", "alpha - gamma", "(alpha - 1)^2 + x^2 - 1/2"]);
            p.irreducible = true;
            p.complexification = true;
        }
        _ => unreachable!("problem ids are checked by the caller"),
    }
    Ok(p)
}

struct Builder {
    ring: Ring,
    data: SpecData,
}

impl Builder {
    fn new(name: &str, group: &str, vars: &[String]) -> Builder {
        let ring = Ring::new(vars.iter().cloned()).expect("catalog variables");
        Builder {
            data: SpecData {
                name: name.into(),
                group: group.into(),
                ring: ring.clone(),
                invariants: Vec::new(),
                dim_invariant_ring: 0,
                strata: Vec::new(),
                witnesses: Vec::new(),
                cofree: false,
                stable: true,
                nullcone_irreducible: None,
                real_form: None,
            },
            ring,
        }
    }

    fn invariant(mut self, name: &str, text: &str) -> Builder {
        let poly = parse_poly(text, &self.ring).expect("catalog invariant");
        self.data.invariants.push(Invariant { name: name.into(), poly });
        self
    }

    #[allow(clippy::too_many_arguments)]
    fn stratum(
        mut self,
        name: &str,
        closure: &[&str],
        codim: usize,
        principal: bool,
        apr: bool,
        fiber_dim: usize,
        slice: Option<bool>,
    ) -> Builder {
        self.data.strata.push(StratumSpec {
            name: name.into(),
            closure: Ideal::parse(&self.ring, closure).expect("catalog stratum"),
            codim,
            principal,
            almost_principal: apr,
            fiber_dim,
            slice_coreduced: slice,
        });
        self
    }

    fn witness(mut self, name: &str, point: &[Rational], stratum: &str, closed: bool) -> Builder {
        self.data.witnesses.push(WitnessPoint {
            name: name.into(),
            point: point.to_vec(),
            stratum: stratum.into(),
            orbit_closed: closed,
        });
        self
    }

    fn origin(self, null: &str) -> Builder {
        let zero = vec![Rational::zero(); self.ring.arity()];
        self.witness("origin", &zero, null, true)
    }
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| crate::poly::int(x)).collect()
}

/// SL2 on `k` copies of C^2 with coordinates `a_i, b_i` for copy `i`.
fn sl2(k: usize) -> SpecData {
    let vars: Vec<String> = (1..=k).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let mut b = Builder::new(&format!("sl2_k{k}"), "SL2", &vars);
    let mut dets = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let text = format!("a{i}*b{j} - a{j}*b{i}");
            b = b.invariant(&format!("D{i}{j}"), &text);
            dets.push(text);
        }
    }
    let dets: Vec<&str> = dets.iter().map(String::as_str).collect();
    b = b
        .stratum("principal", &[], 0, true, true, 3, Some(true))
        .stratum("null", &dets, k - 1, false, false, k + 1, None)
        .origin("null");
    let mut principal = vec![0; 2 * k];
    let mut null = vec![0; 2 * k];
    match k {
        2 | 3 => {
            principal[0] = 1;
            principal[3] = 1;
            null[0] = 1;
        }
        _ => {
            principal = vec![1, 0, 1, 0, 0, 1, 0, 1];
            null[4] = 1;
        }
    }
    b = b
        .witness("principal", &ints(&principal), "principal", true)
        .witness("null", &ints(&null), "null", false);
    b.data.dim_invariant_ring = 2 * k - 3;
    b.data.cofree = k == 2;
    b.data.nullcone_irreducible = Some(true);
    if k == 4 {
        b.data.real_form = Some(RealForm {
            group: "SU(2)".into(),
            module: "2C^2".into(),
        });
    }
    b.data
}

fn so3() -> SpecData {
    let vars: Vec<String> = ["p1", "p2", "p3", "q1", "q2", "q3"].map(String::from).to_vec();
    let gram = "(2*p1*p3 + p2^2)*(2*q1*q3 + q2^2) - (p1*q3 + p2*q2 + p3*q1)^2";
    let mut b = Builder::new("so3_2v", "SO3", &vars)
        .invariant("f11", "2*p1*p3 + p2^2")
        .invariant("f22", "2*q1*q3 + q2^2")
        .invariant("f12", "p1*q3 + p2*q2 + p3*q1")
        .stratum("principal", &[], 0, true, true, 3, Some(true))
        .stratum("rank1", &[gram], 1, false, false, 3, Some(true))
        .stratum(
            "null",
            &["2*p1*p3 + p2^2", "2*q1*q3 + q2^2", "p1*q3 + p2*q2 + p3*q1"],
            3,
            false,
            false,
            3,
            None,
        )
        .origin("null")
        .witness("principal", &ints(&[1, 0, 0, 0, 0, 1]), "principal", true)
        .witness("rank1", &ints(&[0, 1, 0, 0, 0, 0]), "rank1", true)
        .witness("null", &ints(&[1, 0, 0, 1, 0, 0]), "null", false);
    b.data.dim_invariant_ring = 3;
    b.data.cofree = true;
    b.data.nullcone_irreducible = Some(true);
    b.data
}

fn so2() -> SpecData {
    let vars: Vec<String> = ["p1", "p2", "q1", "q2"].map(String::from).to_vec();
    let mut b = Builder::new("so2_2v", "SO2", &vars)
        .invariant("f11", "2*p1*p2")
        .invariant("f22", "2*q1*q2")
        .invariant("f12", "p1*q2 + p2*q1")
        .invariant("e", "p1*q2 - p2*q1")
        .stratum("principal", &[], 0, true, true, 1, Some(true))
        .stratum("null", &["2*p1*p2", "2*q1*q2", "p1*q2 + p2*q1", "p1*q2 - p2*q1"], 2, false, false, 2, None)
        .origin("null")
        .witness("principal", &ints(&[1, 1, 0, 0]), "principal", true)
        .witness("null", &ints(&[1, 0, 1, 0]), "null", false);
    b.data.dim_invariant_ring = 3;
    b.data.nullcone_irreducible = Some(false);
    b.data.real_form = Some(RealForm {
        group: "SO(2)".into(),
        module: "2R^2".into(),
    });
    b.data
}

const QUAT: [(&str, &str); 6] = [
    ("alpha", "p0^2 + p1^2 + p2^2 + p3^2"),
    ("beta", "q0^2 + q1^2 + q2^2 + q3^2"),
    ("gamma", "p0*q0 + p1*q1 + p2*q2 + p3*q3"),
    ("delta", "q0*p1 - p0*q1 + p2*q3 - p3*q2"),
    ("epsilon", "q0*p2 - p0*q2 + p3*q1 - p1*q3"),
    ("zeta", "q0*p3 - p0*q3 + p1*q2 - p2*q1"),
];

/// The quaternion pair `(p, q)` with `K = SU2` acting by left multiplication,
/// plus a trivial real line `x`. Invariants are the norms of `p` and `q` and
/// the four components of `conj(q) p`.
fn su2() -> SpecData {
    let vars: Vec<String> = ["p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3", "x"]
        .map(String::from)
        .to_vec();
    let mut b = Builder::new("su2_quat", "SL2", &vars);
    for (name, text) in QUAT {
        b = b.invariant(name, text);
    }
    let null: Vec<&str> = QUAT.iter().map(|q| q.1).collect();
    let half = crate::poly::rat(1, 2);
    let zero = Rational::zero();
    let mut principal = vec![zero.clone(); 9];
    for i in [0, 1, 4, 5, 8] {
        principal[i] = half.clone();
    }
    let mut x_axis = vec![zero; 9];
    x_axis[8] = crate::poly::int(1);
    b = b
        .invariant("x", "x")
        .stratum("principal", &[], 0, true, true, 3, Some(true))
        .stratum("null", &null, 3, false, false, 5, None)
        .origin("null")
        .witness("x_axis", &x_axis, "null", true)
        .witness("principal", &principal, "principal", true);
    b.data.dim_invariant_ring = 6;
    b.data.nullcone_irreducible = Some(true);
    b.data.real_form = Some(RealForm {
        group: "SU(2)".into(),
        module: "2H+R".into(),
    });
    b.data
}

impl fmt::Display for StratumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (codim {})", self.name, self.codim)
    }
}
