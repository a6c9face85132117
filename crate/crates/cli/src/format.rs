//! The line-oriented problem-file format.
//!
//! ```text
//! problem so2_2v.axes
//! spec so2_2v
//! group SO2
//! ring p1 p2 q1 q2
//! invariants
//! f11 = 2*p1*p2
//! end
//! invariant_dim 3
//! stratum name=null codim=2 principal=false apr=false fiberdim=2
//! p1*p2
//! end
//! witness name=origin point=(0,0,0,0) stratum=null closed=true
//! flags cofree=false stable=true quotient_ideal_generated=false
//! real_form K=SO(2) W=2R^2
//! ideal Y
//! p1*q1
//! end
//! quotient_relations
//! f11*f22
//! end
//! component
//! p1
//! end
//! options order=grevlex budget=1000 checks=saturated,reduced
//! ```
//!
//! Blocks hold one polynomial per line and close with `end`; `#` starts a
//! comment. Optional blocks: `component` (repeatable) and `reference`.
//! [`export`] writes the canonical form, which [`parse`] reads back unchanged.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use gred_core::catalog::{Invariant, RealForm, RepresentationSpec, SpecData, StratumSpec, WitnessPoint};
use gred_core::checker::{Problem, ProblemData};
use gred_core::ideal::{Budget, Ideal};
use gred_core::poly::{parse_poly, MonomialOrder, Polynomial, Rational, Ring};

use crate::CheckKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("{file}:{line}: {message}")]
    Syntax { file: String, line: usize, message: String },
    #[error("{file}: {message}")]
    Invalid { file: String, message: String },
}

/// Run options stored in a problem file. Command-line flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileOptions {
    pub order: Option<MonomialOrder>,
    pub budget: Option<u64>,
    pub checks: Option<Vec<CheckKind>>,
}

impl FileOptions {
    fn is_empty(&self) -> bool {
        self.order.is_none() && self.budget.is_none() && self.checks.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub problem: Problem,
    pub options: FileOptions,
}

type Lines = Vec<(usize, String)>;
type Attrs = BTreeMap<String, String>;

#[derive(Default)]
struct Raw {
    problem: Option<String>,
    spec: Option<String>,
    group: Option<String>,
    ring: Option<(usize, Vec<String>)>,
    invariants: Option<(usize, Lines)>,
    invariant_dim: Option<usize>,
    strata: Vec<(usize, Attrs, Lines)>,
    witnesses: Vec<(usize, Attrs)>,
    flags: BTreeMap<String, bool>,
    real_form: Option<RealForm>,
    ideal: Option<(usize, Lines)>,
    relations: Lines,
    components: Vec<Lines>,
    reference: Option<Lines>,
    options: FileOptions,
}

const FLAGS: [&str; 6] = [
    "cofree",
    "stable",
    "nullcone_irreducible",
    "quotient_ideal_generated",
    "irreducible",
    "complexification",
];

/// Parses and validates a problem file. `file` labels error messages.
pub fn parse(text: &str, file: &str) -> Result<ProblemFile, FormatError> {
    let p = Parser { file };
    let raw = p.read(text)?;
    p.build(raw)
}

struct Parser<'a> {
    file: &'a str,
}

impl Parser<'_> {
    fn syntax(&self, line: usize, message: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            file: self.file.to_string(),
            line,
            message: message.into(),
        }
    }

    fn invalid(&self, message: impl Into<String>) -> FormatError {
        FormatError::Invalid {
            file: self.file.to_string(),
            message: message.into(),
        }
    }

    fn read(&self, text: &str) -> Result<Raw, FormatError> {
        let lines: Lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim().to_string()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let mut raw = Raw::default();
        let mut i = 0;
        while i < lines.len() {
            let (no, line) = &lines[i];
            let no = *no;
            i += 1;
            let tokens = tokenize(line);
            let head = tokens[0].as_str();
            let rest = &tokens[1..];
            let mut block = || -> Result<Lines, FormatError> {
                let start = i;
                while i < lines.len() {
                    if lines[i].1 == "end" {
                        let body = lines[start..i].to_vec();
                        i += 1;
                        return Ok(body);
                    }
                    i += 1;
                }
                Err(self.syntax(no, format!("`{head}` block is not closed by `end`")))
            };
            match head {
                "problem" => set_once(&mut raw.problem, self.single(no, head, rest)?, || self.dup(no, head))?,
                "spec" => set_once(&mut raw.spec, self.single(no, head, rest)?, || self.dup(no, head))?,
                "group" => set_once(&mut raw.group, self.single(no, head, rest)?, || self.dup(no, head))?,
                "ring" => {
                    if rest.is_empty() {
                        return Err(self.syntax(no, "`ring` needs at least one variable"));
                    }
                    set_once(&mut raw.ring, (no, rest.to_vec()), || self.dup(no, head))?
                }
                "invariant_dim" => {
                    let v = self.single(no, head, rest)?;
                    let d = v
                        .parse()
                        .map_err(|_| self.syntax(no, format!("`{v}` is not a natural number")))?;
                    set_once(&mut raw.invariant_dim, d, || self.dup(no, head))?
                }
                "invariants" => {
                    self.no_args(no, head, rest)?;
                    let body = block()?;
                    set_once(&mut raw.invariants, (no, body), || self.dup(no, head))?
                }
                "stratum" => {
                    let attrs = self.attrs(no, rest, &["name", "codim", "principal", "apr", "fiberdim"], &["slice_coreduced"])?;
                    let body = block()?;
                    raw.strata.push((no, attrs, body));
                }
                "witness" => {
                    let attrs = self.attrs(no, rest, &["name", "point", "stratum", "closed"], &[])?;
                    raw.witnesses.push((no, attrs));
                }
                "flags" => {
                    for (k, v) in self.attrs(no, rest, &[], &FLAGS)? {
                        let b = self.boolean(no, &k, &v)?;
                        if raw.flags.insert(k.clone(), b).is_some() {
                            return Err(self.syntax(no, format!("flag `{k}` given twice")));
                        }
                    }
                }
                "real_form" => {
                    let mut a = self.attrs(no, rest, &["K", "W"], &[])?;
                    let rf = RealForm {
                        group: a.remove("K").unwrap_or_default(),
                        module: a.remove("W").unwrap_or_default(),
                    };
                    set_once(&mut raw.real_form, rf, || self.dup(no, head))?
                }
                "ideal" => {
                    if rest.len() > 1 {
                        return Err(self.syntax(no, "expected `ideal <name>`"));
                    }
                    let body = block()?;
                    set_once(&mut raw.ideal, (no, body), || self.dup(no, head))?
                }
                "quotient_relations" => {
                    self.no_args(no, head, rest)?;
                    raw.relations.extend(block()?);
                }
                "component" => {
                    self.no_args(no, head, rest)?;
                    let body = block()?;
                    raw.components.push(body);
                }
                "reference" => {
                    self.no_args(no, head, rest)?;
                    let body = block()?;
                    set_once(&mut raw.reference, body, || self.dup(no, head))?
                }
                "options" => {
                    if !raw.options.is_empty() {
                        return Err(self.dup(no, head));
                    }
                    raw.options = self.options(no, rest)?;
                }
                "end" => return Err(self.syntax(no, "`end` without an open block")),
                other => return Err(self.syntax(no, format!("unknown keyword `{other}`"))),
            }
        }
        Ok(raw)
    }

    fn dup(&self, line: usize, head: &str) -> FormatError {
        self.syntax(line, format!("`{head}` given more than once"))
    }

    fn single(&self, line: usize, head: &str, rest: &[String]) -> Result<String, FormatError> {
        match rest {
            [v] => Ok(v.clone()),
            _ => Err(self.syntax(line, format!("`{head}` takes exactly one value"))),
        }
    }

    fn no_args(&self, line: usize, head: &str, rest: &[String]) -> Result<(), FormatError> {
        if rest.is_empty() {
            Ok(())
        } else {
            Err(self.syntax(line, format!("`{head}` takes no arguments")))
        }
    }

    fn attrs(&self, line: usize, tokens: &[String], required: &[&str], optional: &[&str]) -> Result<Attrs, FormatError> {
        let mut out = Attrs::new();
        for t in tokens {
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| self.syntax(line, format!("expected key=value, found `{t}`")))?;
            if !required.contains(&k) && !optional.contains(&k) {
                return Err(self.syntax(line, format!("unknown key `{k}`")));
            }
            if out.insert(k.to_string(), v.to_string()).is_some() {
                return Err(self.syntax(line, format!("key `{k}` given twice")));
            }
        }
        if let Some(k) = required.iter().find(|k| !out.contains_key(**k)) {
            return Err(self.syntax(line, format!("missing key `{k}`")));
        }
        Ok(out)
    }

    fn boolean(&self, line: usize, key: &str, v: &str) -> Result<bool, FormatError> {
        match v {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(self.syntax(line, format!("`{key}` must be true or false, found `{v}`"))),
        }
    }

    fn natural(&self, line: usize, key: &str, v: &str) -> Result<usize, FormatError> {
        v.parse()
            .map_err(|_| self.syntax(line, format!("`{key}` must be a natural number, found `{v}`")))
    }

    fn options(&self, line: usize, rest: &[String]) -> Result<FileOptions, FormatError> {
        let a = self.attrs(line, rest, &[], &["order", "budget", "checks"])?;
        let mut o = FileOptions::default();
        if let Some(v) = a.get("order") {
            o.order = Some(MonomialOrder::from_str(v).map_err(|e| self.syntax(line, e))?);
        }
        if let Some(v) = a.get("budget") {
            o.budget = Some(self.natural(line, "budget", v)? as u64);
        }
        if let Some(v) = a.get("checks") {
            let kinds = v
                .split(',')
                .map(|c| CheckKind::from_str(c).map_err(|e| self.syntax(line, e)))
                .collect::<Result<Vec<_>, _>>()?;
            o.checks = Some(kinds);
        }
        Ok(o)
    }

    fn poly(&self, ring: &Ring, (line, text): &(usize, String)) -> Result<Polynomial, FormatError> {
        parse_poly(text, ring).map_err(|e| self.syntax(*line, format!("`{text}`: {e}")))
    }

    fn ideal(&self, ring: &Ring, lines: &Lines) -> Result<Ideal, FormatError> {
        let gens = lines.iter().map(|l| self.poly(ring, l)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens).map_err(|e| self.invalid(e.to_string()))
    }

    fn build(&self, raw: Raw) -> Result<ProblemFile, FormatError> {
        let (ring_line, names) = raw.ring.ok_or_else(|| self.invalid("missing `ring` line"))?;
        let ring = Ring::new(names).map_err(|e| self.syntax(ring_line, e.to_string()))?;
        let (_, inv_lines) = raw.invariants.ok_or_else(|| self.invalid("missing `invariants` block"))?;
        let (_, y_lines) = raw.ideal.ok_or_else(|| self.invalid("missing `ideal` section"))?;
        let dim_inv = raw.invariant_dim.ok_or_else(|| self.invalid("missing `invariant_dim` line"))?;

        let mut invariants = Vec::new();
        for (line, text) in &inv_lines {
            let (name, body) = text
                .split_once('=')
                .ok_or_else(|| self.syntax(*line, "expected `name = polynomial`"))?;
            invariants.push(Invariant {
                name: name.trim().to_string(),
                poly: self.poly(&ring, &(*line, body.trim().to_string()))?,
            });
        }

        if let Ok(inv_ring) = Ring::new(invariants.iter().map(|i| i.name.clone())) {
            for l in &raw.relations {
                self.poly(&inv_ring, l)?;
            }
        }

        let mut strata = Vec::new();
        for (line, a, body) in &raw.strata {
            let line = *line;
            strata.push(StratumSpec {
                name: a["name"].clone(),
                closure: self.ideal(&ring, body)?,
                codim: self.natural(line, "codim", &a["codim"])?,
                principal: self.boolean(line, "principal", &a["principal"])?,
                almost_principal: self.boolean(line, "apr", &a["apr"])?,
                fiber_dim: self.natural(line, "fiberdim", &a["fiberdim"])?,
                slice_coreduced: a
                    .get("slice_coreduced")
                    .map(|v| self.boolean(line, "slice_coreduced", v))
                    .transpose()?,
            });
        }

        let mut witnesses = Vec::new();
        for (line, a) in &raw.witnesses {
            let line = *line;
            let inner = a["point"]
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| self.syntax(line, "point must be written (r1,...,rn)"))?;
            let point = inner
                .split(',')
                .map(|c| {
                    Rational::from_str(c.trim()).map_err(|_| self.syntax(line, format!("`{}` is not a rational", c.trim())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if point.len() != ring.arity() {
                return Err(self.syntax(
                    line,
                    format!("point has {} coordinates, ring has {}", point.len(), ring.arity()),
                ));
            }
            witnesses.push(WitnessPoint {
                name: a["name"].clone(),
                point,
                stratum: a["stratum"].clone(),
                orbit_closed: self.boolean(line, "closed", &a["closed"])?,
            });
        }

        let y = self.ideal(&ring, &y_lines)?;
        let components = raw
            .components
            .iter()
            .map(|c| self.ideal(&ring, c))
            .collect::<Result<Vec<_>, _>>()?;
        let reference = raw.reference.as_ref().map(|r| self.ideal(&ring, r)).transpose()?;

        let flag = |k: &str| raw.flags.get(k).copied().unwrap_or(false);
        let id = raw.problem.unwrap_or_else(|| "problem".to_string());
        let data = SpecData {
            name: raw.spec.unwrap_or_else(|| id.clone()),
            group: raw.group.unwrap_or_else(|| "G".to_string()),
            ring: ring.clone(),
            invariants,
            dim_invariant_ring: dim_inv,
            strata,
            witnesses,
            cofree: flag("cofree"),
            stable: flag("stable"),
            nullcone_irreducible: raw.flags.get("nullcone_irreducible").copied(),
            real_form: raw.real_form,
        };
        let spec = RepresentationSpec::new(data, Budget::default()).map_err(|e| self.invalid(e.to_string()))?;

        let mut pd = ProblemData::new(&id, Arc::new(spec), y);
        pd.relations = raw.relations.into_iter().map(|(_, t)| t).collect();
        pd.components = components;
        pd.quotient_ideal_generated = flag("quotient_ideal_generated");
        pd.irreducible = flag("irreducible");
        pd.complexification = flag("complexification");
        pd.reference = reference;
        let problem = Problem::new(pd, Budget::default()).map_err(|e| self.invalid(e.to_string()))?;
        Ok(ProblemFile {
            problem,
            options: raw.options,
        })
    }
}

fn set_once<T>(slot: &mut Option<T>, v: T, dup: impl FnOnce() -> FormatError) -> Result<(), FormatError> {
    if slot.is_some() {
        return Err(dup());
    }
    *slot = Some(v);
    Ok(())
}

/// Splits on whitespace outside parentheses; whitespace inside is dropped.
fn tokenize(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in line.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c.is_whitespace() {
            if depth == 0 && !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Canonical text of a problem and its options.
pub fn export(problem: &Problem, options: &FileOptions) -> String {
    let spec = &problem.spec;
    let mut s = String::new();
    let mut line = |t: String| {
        s.push_str(&t);
        s.push('\n');
    };
    line(format!("problem {}", problem.id));
    line(format!("spec {}", spec.name));
    line(format!("group {}", spec.group));
    line(format!("ring {}", spec.ring.variables().join(" ")));
    line("invariants".into());
    for i in &spec.invariants {
        line(format!("{} = {}", i.name, i.poly));
    }
    line("end".into());
    line(format!("invariant_dim {}", spec.dim_invariant_ring));
    for st in &spec.strata {
        let mut head = format!(
            "stratum name={} codim={} principal={} apr={} fiberdim={}",
            st.name, st.codim, st.principal, st.almost_principal, st.fiber_dim
        );
        if let Some(b) = st.slice_coreduced {
            let _ = write!(head, " slice_coreduced={b}");
        }
        line(head);
        for g in st.closure.generators() {
            line(g.to_string());
        }
        line("end".into());
    }
    for w in &spec.witnesses {
        let point: Vec<String> = w.point.iter().map(ToString::to_string).collect();
        line(format!(
            "witness name={} point=({}) stratum={} closed={}",
            w.name,
            point.join(","),
            w.stratum,
            w.orbit_closed
        ));
    }
    let mut flags = format!(
        "flags cofree={} stable={} quotient_ideal_generated={} irreducible={} complexification={}",
        spec.cofree, spec.stable, problem.quotient_ideal_generated, problem.irreducible, problem.complexification
    );
    if let Some(b) = spec.nullcone_irreducible {
        let _ = write!(flags, " nullcone_irreducible={b}");
    }
    line(flags);
    if let Some(rf) = &spec.real_form {
        line(format!("real_form K={} W={}", rf.group, rf.module));
    }
    line("ideal Y".into());
    for g in problem.y.generators() {
        line(g.to_string());
    }
    line("end".into());
    line("quotient_relations".into());
    for r in &problem.relations {
        line(r.clone());
    }
    line("end".into());
    for c in &problem.components {
        line("component".into());
        for g in c.generators() {
            line(g.to_string());
        }
        line("end".into());
    }
    if let Some(r) = problem.reference() {
        line("reference".into());
        for g in r.generators() {
            line(g.to_string());
        }
        line("end".into());
    }
    if !options.is_empty() {
        let mut o = String::from("options");
        if let Some(order) = options.order {
            let _ = write!(o, " order={order}");
        }
        if let Some(b) = options.budget {
            let _ = write!(o, " budget={b}");
        }
        if let Some(c) = &options.checks {
            let names: Vec<&str> = c.iter().map(|k| k.name()).collect();
            let _ = write!(o, " checks={}", names.join(","));
        }
        line(o);
    }
    s
}
