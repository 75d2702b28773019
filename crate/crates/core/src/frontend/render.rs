use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value as Json};

use super::interp::{Entry, ResultDocument, Value};
use crate::blowup::{Chart, Component, FiberReport, GradedPresentation, GradedRow};
use crate::groebner::Ideal;
use crate::hilbert::{HilbertData, Length};
use crate::modmat::{ModulePresentation, PolyMatrix};
use crate::poly::Polynomial;

/// Version of the structured output layout.
pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

pub fn render(doc: &ResultDocument, format: Format) -> Vec<u8> {
    match format {
        Format::Text => render_text(doc).into_bytes(),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&to_json(doc)).expect("json values serialize");
            s.push('\n');
            s.into_bytes()
        }
    }
}

fn ideal_list(i: &Ideal) -> Json {
    Json::Array(i.sorted_generators().iter().map(|g| Json::String(g.to_string())).collect())
}

fn ideal_json(i: &Ideal) -> Json {
    json!({ "ring": i.ring().to_string(), "generators": ideal_list(i) })
}

fn matrix_json(m: &PolyMatrix) -> Json {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": (0..m.rows())
            .map(|i| m.row(i).iter().map(|p| p.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn module_json(p: &ModulePresentation) -> Json {
    json!({ "ring": p.ring().to_string(), "generators": p.rank0(), "relations": matrix_json(p.relations()) })
}

fn int_json(n: &BigInt) -> Json {
    match n.to_i64() {
        Some(v) => Json::from(v),
        None => Json::String(n.to_string()),
    }
}

fn length_json(l: Length) -> Json {
    match l {
        Length::Finite(n) => Json::from(n),
        Length::Infinite => Json::String("infinite".into()),
    }
}

fn opt_poly(p: &Option<Polynomial>) -> Json {
    p.as_ref().map_or(Json::Null, |p| Json::String(p.to_string()))
}

fn hilbert_json(h: &HilbertData) -> Json {
    json!({
        "numerator": h.numerator_string(),
        "numerator_coefficients": h.numerator.iter().map(int_json).collect::<Vec<_>>(),
        "dimension": h.dimension,
        "degree": h.degree,
        "length": length_json(h.length),
    })
}

fn rees_json(g: &GradedPresentation) -> Json {
    json!({
        "ring": g.ring().to_string(),
        "proj_vars": g.proj_vars().iter().map(|(n, f)| json!({"name": n, "generator": f.to_string()})).collect::<Vec<_>>(),
        "ideal": ideal_list(g.ideal()),
    })
}

fn chart_json(c: &Chart) -> Json {
    json!({
        "var": c.var,
        "ring": c.ideal.ring().to_string(),
        "renamed": renamed_json(&c.renamed),
        "ideal": ideal_list(&c.ideal),
    })
}

fn renamed_json(r: &[(String, String)]) -> Json {
    Json::Object(r.iter().map(|(a, b)| (a.clone(), Json::String(b.clone()))).collect::<Map<_, _>>())
}

fn graded_json(rows: &[GradedRow]) -> Json {
    Json::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "s": r.s,
                    "relation": r.relation.to_string(),
                    "t_power_in_t_is": r.t_power_in_t_is,
                    "t_is_in_t_power": r.t_is_in_t_power,
                    "witness": opt_poly(&r.witness),
                })
            })
            .collect(),
    )
}

fn component_json(c: &Component) -> Json {
    json!({
        "ideal": ideal_list(&c.ideal),
        "contains_fiber": c.contains_fiber,
        "nonreduced_witness": opt_poly(&c.nonreduced_witness),
    })
}

fn fiber_json(r: &FiberReport) -> Json {
    let mult = r.center_multiplicity.map_or(Json::Null, Json::from);
    json!({
        "case": r.case.to_string(),
        "center_base": ideal_json(&r.center_base),
        "deformation_var": r.deformation_var,
        "center": ideal_json(&r.center),
        "center_multiplicity": mult,
        "rees": rees_json(&r.rees),
        "t_proj_var": r.t_proj_var,
        "fiber_ring": r.fiber_ring.to_string(),
        "fiber": ideal_list(&r.fiber),
        "components": {
            "center": { "ideal": ideal_list(&r.center), "multiplicity": mult },
            "main": component_json(&r.main),
            "exceptional": component_json(&r.exceptional),
        },
        "charts": r.charts.iter().map(|c| json!({
            "var": c.var,
            "generator": c.generator.to_string(),
            "renamed": renamed_json(&c.renamed),
            "fiber": ideal_list(&c.fiber),
            "main": ideal_list(&c.main),
            "exceptional": ideal_list(&c.exceptional),
        })).collect::<Vec<_>>(),
        "intersection": ideal_list(&r.intersection),
        "intersection_matches": r.intersection_matches,
        "strict_transform_agrees": r.strict_transform_agrees,
        "graded": graded_json(&r.graded),
    })
}

/// Structured form of one value, tagged with its type.
pub fn value_json(v: &Value) -> Json {
    let (ty, body) = match v {
        Value::Poly(p) => ("poly", Json::String(p.to_string())),
        Value::Ideal(i) => ("ideal", ideal_json(i)),
        Value::Matrix(m) => ("matrix", matrix_json(m)),
        Value::Module(p) => ("module", module_json(p)),
        Value::Bool(b) => ("bool", Json::Bool(*b)),
        Value::Int(n) => ("integer", int_json(n)),
        Value::Rational(q) => ("rational", Json::String(q.to_string())),
        Value::Length(l) => ("length", length_json(*l)),
        Value::Resolution(r) => (
            "resolution",
            json!({ "ranks": r.ranks(), "maps": r.maps().iter().map(matrix_json).collect::<Vec<_>>() }),
        ),
        Value::Hilbert(h) => ("hilbert", hilbert_json(h)),
        Value::Rees(g) => ("rees", rees_json(g)),
        Value::Fiber(r) => ("fiber", fiber_json(r)),
        Value::Chart(c) => ("chart", chart_json(c)),
        Value::Graded(rows) => ("graded_compare", graded_json(rows)),
        Value::ExtCheck(r) => (
            "ext_check",
            json!({
                "kernel": module_json(&r.kernel),
                "ext1_fitting": ideal_list(&r.ext1_fitting),
                "ext2_fitting": ideal_list(&r.ext2_fitting),
                "equal": r.equal,
                "lhs_witness": opt_poly(&r.lhs_witness),
                "rhs_witness": opt_poly(&r.rhs_witness),
            }),
        ),
        Value::Pipeline(d) => (
            "pipeline",
            json!({
                "rank": d.rank,
                "length": d.length,
                "singularity_ideal": ideal_json(&d.singularity_ideal),
                "fiber": fiber_json(&d.report),
            }),
        ),
        Value::Verdict(v) => {
            let disc = match v {
                crate::pipeline::ScreenVerdict::RejectedByLengthBound => Json::Null,
                crate::pipeline::ScreenVerdict::RejectedByDiscriminant(d)
                | crate::pipeline::ScreenVerdict::NotRejected(d) => int_json(d),
            };
            ("verdict", json!({ "rejected": v.is_rejected(), "verdict": v.to_string(), "discriminant": disc }))
        }
    };
    json!({ "type": ty, "data": body })
}

fn entry_json(e: &Entry) -> Json {
    let mut m = Map::new();
    m.insert("key".into(), Json::String(e.key.clone()));
    m.insert("command".into(), Json::String(e.command.clone()));
    m.insert("line".into(), Json::from(e.line));
    m.insert("binding".into(), e.binding.clone().map_or(Json::Null, Json::String));
    match &e.outcome {
        Ok(v) => {
            m.insert("status".into(), Json::String("ok".into()));
            m.insert("value".into(), value_json(v));
        }
        Err(msg) => {
            m.insert("status".into(), Json::String("error".into()));
            m.insert("error".into(), Json::String(msg.clone()));
        }
    }
    Json::Object(m)
}

/// The structured document. Timings are left out so that equal inputs give
/// equal bytes.
pub fn to_json(doc: &ResultDocument) -> Json {
    let o = &doc.options;
    json!({
        "schema_version": SCHEMA_VERSION,
        "options": {
            "max_degree": o.limits.max_degree,
            "max_pairs": o.limits.max_pairs,
            "sat_bound": o.limits.sat_bound,
            "s_max": o.limits.s_max,
            "fail_fast": o.fail_fast,
            "seed": o.seed,
            "order": o.default_order.name(),
        },
        "aborted": doc.aborted,
        "results": doc.entries.iter().map(entry_json).collect::<Vec<_>>(),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn or_dash(p: &Option<Polynomial>) -> String {
    p.as_ref().map_or("-".into(), |p| p.to_string())
}

fn fiber_text(r: &FiberReport, out: &mut String, pad: &str) {
    let mult = r.center_multiplicity.map_or("-".to_string(), |m| m.to_string());
    let _ = writeln!(out, "{pad}case: {}", r.case);
    let _ = writeln!(out, "{pad}center: {} in {}", r.center, r.center.ring());
    let _ = writeln!(out, "{pad}rees: {}", r.rees);
    for (n, f) in r.rees.proj_vars() {
        let _ = writeln!(out, "{pad}  {n} = {f}");
    }
    let _ = writeln!(out, "{pad}fiber: {} in {}", r.fiber, r.fiber_ring);
    let _ = writeln!(out, "{pad}components:");
    let _ = writeln!(out, "{pad}  {:<12} {:>4}  {:<6} {:<10} ideal", "component", "mult", "fiber", "witness");
    let _ = writeln!(out, "{pad}  {:<12} {:>4}  {:<6} {:<10} {}", "center", mult, "-", "-", r.center);
    for c in r.components() {
        let m = if c.name == "exceptional" { mult.as_str() } else { "-" };
        let _ = writeln!(
            out,
            "{pad}  {:<12} {:>4}  {:<6} {:<10} {}",
            c.name,
            m,
            yes(c.contains_fiber),
            or_dash(&c.nonreduced_witness),
            c.ideal
        );
    }
    let _ = writeln!(out, "{pad}charts:");
    for c in &r.charts {
        let renamed: Vec<String> = c.renamed.iter().map(|(a, b)| format!("{b} = {a}/{}", c.var)).collect();
        let _ = writeln!(out, "{pad}  {} != 0 ({}){}", c.var, c.generator, if renamed.is_empty() { String::new() } else { format!(": {}", renamed.join(", ")) });
        let _ = writeln!(out, "{pad}    fiber:       {}", c.fiber);
        let _ = writeln!(out, "{pad}    main:        {}", c.main);
        let _ = writeln!(out, "{pad}    exceptional: {}", c.exceptional);
    }
    let _ = writeln!(out, "{pad}intersection: {} (matches graded presentation: {})", r.intersection, yes(r.intersection_matches));
    let _ = writeln!(out, "{pad}strict transform agrees: {}", yes(r.strict_transform_agrees));
    if !r.graded.is_empty() {
        let _ = writeln!(out, "{pad}graded pieces:");
        graded_text(&r.graded, out, &format!("{pad}  "));
    }
}

fn graded_text(rows: &[GradedRow], out: &mut String, pad: &str) {
    let _ = writeln!(out, "{pad}{:>3}  {:<16} witness", "s", "relation");
    for r in rows {
        let _ = writeln!(out, "{pad}{:>3}  {:<16} {}", r.s, r.relation.to_string(), or_dash(&r.witness));
    }
}

/// Multi-line text form of one value, each line prefixed by `pad`.
pub fn value_text(v: &Value, pad: &str) -> String {
    let mut out = String::new();
    match v {
        Value::Poly(p) => {
            let _ = writeln!(out, "{pad}{p}");
        }
        Value::Ideal(i) => {
            let _ = writeln!(out, "{pad}{i}");
        }
        Value::Matrix(m) => {
            let _ = writeln!(out, "{pad}{m}");
        }
        Value::Module(p) => {
            let _ = writeln!(out, "{pad}coker {} : {} generators over {}", p.relations(), p.rank0(), p.ring());
        }
        Value::Bool(b) => {
            let _ = writeln!(out, "{pad}{b}");
        }
        Value::Int(n) => {
            let _ = writeln!(out, "{pad}{n}");
        }
        Value::Rational(q) => {
            let _ = writeln!(out, "{pad}{q}");
        }
        Value::Length(l) => {
            let _ = writeln!(out, "{pad}{l}");
        }
        Value::Resolution(r) => {
            let ranks: Vec<String> = r.ranks().iter().map(|k| k.to_string()).collect();
            let _ = writeln!(out, "{pad}ranks: {}", ranks.join(" <- "));
            for (k, m) in r.maps().iter().enumerate() {
                let _ = writeln!(out, "{pad}d{}: {m}", k + 1);
            }
        }
        Value::Hilbert(h) => {
            let dim = h.dimension.map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(out, "{pad}numerator: {}", h.numerator_string());
            let _ = writeln!(out, "{pad}dimension: {dim}");
            let _ = writeln!(out, "{pad}degree: {}", h.degree);
            let _ = writeln!(out, "{pad}length: {}", h.length);
        }
        Value::Rees(g) => {
            let _ = writeln!(out, "{pad}{g}");
            for (n, f) in g.proj_vars() {
                let _ = writeln!(out, "{pad}  {n} = {f}");
            }
        }
        Value::Fiber(r) => fiber_text(r, &mut out, pad),
        Value::Chart(c) => {
            let _ = writeln!(out, "{pad}chart {} != 0 in {}", c.var, c.ideal.ring());
            for (a, b) in &c.renamed {
                let _ = writeln!(out, "{pad}  {b} = {a}/{}", c.var);
            }
            let _ = writeln!(out, "{pad}  ideal: {}", c.ideal);
        }
        Value::Graded(rows) => graded_text(rows, &mut out, pad),
        Value::ExtCheck(r) => {
            let _ = writeln!(out, "{pad}Fitt0 Ext1(E): {}", r.ext1_fitting);
            let _ = writeln!(out, "{pad}Fitt0 Ext2(k): {}", r.ext2_fitting);
            let _ = writeln!(out, "{pad}equal: {}", yes(r.equal));
            if let Some(w) = &r.lhs_witness {
                let _ = writeln!(out, "{pad}missing from first: {w}");
            }
            if let Some(w) = &r.rhs_witness {
                let _ = writeln!(out, "{pad}missing from second: {w}");
            }
        }
        Value::Pipeline(d) => {
            let _ = writeln!(out, "{pad}rank: {}", d.rank);
            let _ = writeln!(out, "{pad}length: {}", d.length);
            let _ = writeln!(out, "{pad}singularity ideal: {}", d.singularity_ideal);
            fiber_text(&d.report, &mut out, pad);
        }
        Value::Verdict(v) => {
            let _ = writeln!(out, "{pad}{v}");
        }
    }
    out
}

pub fn render_text(doc: &ResultDocument) -> String {
    let mut out = String::from("reeskit report\n");
    if doc.entries.is_empty() {
        out.push_str("(no results)\n");
    }
    for e in &doc.entries {
        let bind = e.binding.as_ref().map_or(String::new(), |b| format!(" -> {b}"));
        let _ = writeln!(
            out,
            "\n[{}] line {}{} ({:.1} ms)",
            e.key,
            e.line,
            bind,
            e.elapsed.as_secs_f64() * 1000.0
        );
        match &e.outcome {
            Ok(v) => out.push_str(&value_text(v, "  ")),
            Err(msg) => {
                let _ = writeln!(out, "  error: {msg}");
            }
        }
    }
    if doc.aborted {
        out.push_str("\naborted after the first error\n");
    }
    out
}
