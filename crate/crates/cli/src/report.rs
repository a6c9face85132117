//! Plain-text rendering of check reports.

use std::fmt::Write as _;

use gred_core::checker::{CheckReport, Evidence, RankSite, Verdict};

fn ideal(gens: &[String]) -> String {
    format!("({})", gens.join(", "))
}

fn evidence_line(e: &Evidence) -> String {
    match e {
        Evidence::Dim { note, ideal: gens, value } => format!("{note} = {value}  [V{}]", ideal(gens)),
        Evidence::Rank { note, site, value, .. } => match site {
            RankSite::Point(p) => format!("{note} = {value} at ({})", p.join(",")),
            RankSite::Variety(g) => format!("{note} = {value} on V{}", ideal(g)),
        },
        Evidence::Member { poly, ideal: gens, radical } => {
            format!("{poly} in {}{}", if *radical { "rad" } else { "" }, ideal(gens))
        }
        Evidence::Nonmember { poly, ideal: gens, radical } => {
            format!("{poly} not in {}{}", if *radical { "rad" } else { "" }, ideal(gens))
        }
        Evidence::WitnessPoint { point, zero, nonzero } => format!(
            "point ({}) zeroes [{}], misses [{}]",
            point.join(","),
            zero.join(", "),
            nonzero.join(", ")
        ),
        Evidence::Fact { statement } => format!("fact: {statement}"),
    }
}

fn verdict(out: &mut String, indent: &str, label: &str, v: &Verdict) {
    let _ = writeln!(out, "{indent}{label}: {v}");
    for e in &v.evidence {
        let _ = writeln!(out, "{indent}    {}", evidence_line(e));
    }
}

pub fn render(r: &CheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "problem {}", r.problem);
    if let Some(v) = &r.g_saturated {
        verdict(&mut out, "", "g_saturated", v);
    }
    if let Some(v) = &r.g_reduced {
        verdict(&mut out, "", "g_reduced", v);
    }
    if let Some(d) = &r.density {
        verdict(&mut out, "", "pr_dense", &d.pr_dense);
        verdict(&mut out, "", "apr_dense", &d.apr_dense);
    }
    if !r.strata.is_empty() {
        out.push_str("strata\n");
        for s in &r.strata {
            let meets = match s.meets_y {
                Some(true) => "meets Y",
                Some(false) => "misses Y",
                None => "meets Y: unknown",
            };
            verdict(&mut out, "  ", &format!("{} ({meets}) saturated", s.name), &s.saturated);
        }
    }
    if let Some(v) = &r.coreduced {
        verdict(&mut out, "", "coreduced", v);
    }
    if let Some(real) = &r.real {
        verdict(&mut out, "", "K_reduced", &real.k_reduced);
        verdict(&mut out, "", "almost_K_reduced", &real.almost_k_reduced);
    }
    if r.budget_exhausted {
        out.push_str("step budget exhausted; affected verdicts are unknown\n");
    }
    let times: Vec<String> = r.timings_ms.iter().map(|(k, v)| format!("{k} {v:.1}")).collect();
    let _ = writeln!(out, "timings (ms): {}", times.join(", "));
    out
}
