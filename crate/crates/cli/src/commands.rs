use std::fmt::Write;

use num::complex::Complex64;
use quandlekit::parabolic::fmt_complex;
use quandlekit::polysolve::{enumerate_parabolic_colorings, SolveOptions};
use quandlekit::presentations::{
    eliminate_generators, fundamental_quandle_presentation, wirtinger_presentation, Eliminate, GroupPresentation,
    QuandlePresentation,
};
use quandlekit::quandle::{diagram_colorings, is_tricolorable};
use quandlekit::representation::{
    coloring_to_rep, conjugate_rep, gaussian_integer_evidence, same_rep_up_to_conjugacy, MoebiusRepresentation,
};
use serde_json::{json, Value};

use crate::input::{parse_quandle, read_diagram};
use crate::{repfile, CliError, DiagramInput, Report};

/// Trace tolerance for the meridian check, looser than the relator check
/// because traces of refined points carry the solver's rounding.
const TRACE_TOL: f64 = 1e-8;
/// Entries within this distance of `Z[i]` count as Gaussian integers.
const GAUSS_TOL: f64 = 1e-9;
/// Fingerprint tolerance when comparing representations.
const MATCH_TOL: f64 = 1e-8;

fn fmt_quandle(p: &QuandlePresentation, out: &mut String) {
    let _ = writeln!(out, "  generators: {}", p.generator_names.join(", "));
    for r in p.relation_strings() {
        let _ = writeln!(out, "  {r}");
    }
}

fn fmt_group(g: &GroupPresentation, out: &mut String) {
    let _ = writeln!(out, "  generators: {}", g.generator_names.join(", "));
    for r in g.relator_strings() {
        let _ = writeln!(out, "  {r}");
    }
}

pub fn present(input: &DiagramInput) -> Result<Report, CliError> {
    let (label, d) = read_diagram(input.builtin.as_deref(), input.file.as_deref())?;
    let quandle = fundamental_quandle_presentation(&d);
    let simplified = eliminate_generators(&quandle);
    let group = wirtinger_presentation(&d);
    let group_simplified = group.eliminate();
    let json = json!({
        "schema": 1,
        "command": "present",
        "input": label,
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "quandle": quandle,
        "quandle_simplified": simplified,
        "group": group,
        "group_simplified": group_simplified,
    });
    let mut table = format!("{label}: {} crossings, {} components\n", d.crossing_count(), d.component_count());
    table.push_str("quandle presentation\n");
    fmt_quandle(&quandle, &mut table);
    table.push_str("simplified quandle presentation\n");
    fmt_quandle(&simplified, &mut table);
    table.push_str("group presentation\n");
    fmt_group(&group, &mut table);
    table.push_str("simplified group presentation\n");
    fmt_group(&group_simplified, &mut table);
    Ok(Report { json, table, ok: true })
}

pub fn color(input: &DiagramInput, spec: Option<&str>, tricolor: bool) -> Result<Report, CliError> {
    let (label, d) = read_diagram(input.builtin.as_deref(), input.file.as_deref())?;
    let spec = match (spec, tricolor) {
        (Some(s), _) => s,
        (None, true) => "dihedral:3",
        (None, false) => return Err(CliError::Input("--quandle is required unless --tricolor is given".into())),
    };
    let q = parse_quandle(spec)?;
    let colorings = diagram_colorings(&d, &q);
    let names = d.arc_names();
    let listed: Vec<Value> = colorings
        .iter()
        .map(|c| Value::Object(names.iter().cloned().zip(c.assignment.iter().map(|&x| json!(x))).collect()))
        .collect();
    let mut json = json!({
        "schema": 1,
        "command": "color",
        "input": label,
        "quandle": spec,
        "quandle_size": q.size(),
        "arcs": names,
        "count": colorings.len(),
        "colorings": listed,
    });
    let mut table = format!("{label} colored by {spec} (order {}): {} colorings\n", q.size(), colorings.len());
    let _ = writeln!(table, "  {}", names.join(" "));
    for c in &colorings {
        let row: Vec<String> = c.assignment.iter().zip(names).map(|(x, n)| format!("{x:>w$}", w = n.len())).collect();
        let _ = writeln!(table, "  {}", row.join(" "));
    }
    if tricolor {
        // always with respect to the dihedral quandle of order 3
        let t = is_tricolorable(&d);
        json["tricolorable"] = json!(t);
        let _ = writeln!(table, "tricolorable: {t}");
    }
    Ok(Report { json, table, ok: true })
}

fn rep_checks(r: &MoebiusRepresentation, tolerance: f64) -> (Value, bool) {
    let dets: f64 = r.images.iter().map(|m| (m.det() - 1.0).norm()).fold(0.0, f64::max);
    let parabolic = r.meridians_parabolic(TRACE_TOL);
    let ok = r.max_residual() <= tolerance && parabolic && dets <= tolerance;
    let mut v = serde_json::to_value(r).expect("representation serializes");
    v["max_det_error"] = json!(dets);
    v["meridians_parabolic"] = json!(parabolic);
    v["nonabelian"] = json!(r.is_nonabelian(TRACE_TOL));
    v["gaussian_integers"] = serde_json::to_value(gaussian_integer_evidence(r, GAUSS_TOL)).expect("serializes");
    v["passed"] = json!(ok);
    (v, ok)
}

fn fmt_rep(r: &MoebiusRepresentation, out: &mut String) {
    for (n, m) in r.names.iter().zip(&r.images) {
        let _ = writeln!(out, "    {n} -> {m}");
    }
    let _ = writeln!(out, "    max relator residual {:.3e}", r.max_residual());
}

fn fmt_fingerprint(fp: &[Complex64]) -> String {
    fp.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>().join(", ")
}

pub fn parabolic(input: &DiagramInput, raw: bool, tolerance: f64, seed: u64, max_branches: usize) -> Result<Report, CliError> {
    let (label, d) = read_diagram(input.builtin.as_deref(), input.file.as_deref())?;
    let opts = SolveOptions { seed, max_branches, ..SolveOptions::default() };
    let s = enumerate_parabolic_colorings(&d, &opts).map_err(|e| CliError::Solver(e.to_string()))?;
    let mut reps = Vec::new();
    let mut all_ok = true;
    let mut table = format!(
        "{label}: {} raw solutions over {} branches, {} colorings, {} classes\n",
        s.raw_solutions.len(),
        s.branches,
        s.colorings.len(),
        s.classes.len()
    );
    for c in 0..s.classes.len() {
        let coloring = s.representative(c);
        let r = coloring_to_rep(coloring, &s.group).map_err(|e| CliError::Solver(e.to_string()))?;
        let (v, ok) = rep_checks(&r, tolerance);
        all_ok &= ok;
        let values: Vec<String> = s.presentation.generator_names.iter().map(|n| format!("{n}={}", coloring.get(n).unwrap())).collect();
        let _ = writeln!(table, "class {c}: {}", values.join(" "));
        let _ = writeln!(table, "  fingerprint: {}", fmt_fingerprint(&s.classes[c].fingerprint));
        fmt_rep(&r, &mut table);
        reps.push(v);
    }
    let paired = !s.classes.is_empty() && s.all_conjugate_paired();
    let _ = writeln!(table, "conjugate pairs: {:?} (all paired: {paired})", s.conjugate_pairs);
    if raw {
        table.push_str("raw solutions\n");
        for r in &s.raw_solutions {
            let vals: Vec<String> = s.variables.iter().zip(&r.values).map(|(n, z)| format!("{n}={}", fmt_complex(*z))).collect();
            let _ = writeln!(table, "  branch {:?}: {} (residual {:.1e})", r.branch, vals.join(" "), r.residual);
        }
    }
    for w in &s.warnings {
        let _ = writeln!(table, "warning: {w}");
    }
    let mut json = serde_json::to_value(&s).expect("solution set serializes");
    let obj = json.as_object_mut().expect("object");
    if !raw {
        obj.remove("raw_solutions");
    }
    obj.insert("schema".into(), json!(1));
    obj.insert("command".into(), json!("parabolic"));
    obj.insert("input".into(), json!(label));
    obj.insert("seed".into(), json!(seed));
    obj.insert("raw_solution_count".into(), json!(s.raw_solutions.len()));
    obj.insert("all_conjugate_paired".into(), json!(paired));
    obj.insert("representations".into(), Value::Array(reps));
    obj.insert("passed".into(), json!(all_ok));
    Ok(Report { json, table, ok: all_ok })
}

pub fn verify(files: &[String], tolerance: f64) -> Result<Report, CliError> {
    let reps: Vec<MoebiusRepresentation> = files.iter().map(|f| repfile::load(f)).collect::<Result<_, _>>()?;
    let mut all_ok = true;
    let mut reports = Vec::new();
    let mut table = String::new();
    for (f, r) in files.iter().zip(&reps) {
        let (v, ok) = rep_checks(r, tolerance);
        all_ok &= ok;
        let _ = writeln!(table, "{f}: {}", if ok { "pass" } else { "FAIL" });
        fmt_rep(r, &mut table);
        let _ = writeln!(table, "    meridians parabolic: {}", v["meridians_parabolic"]);
        let _ = writeln!(table, "    Gaussian integer entries: {}", v["gaussian_integers"]["all_integral"]);
        let mut v = v;
        v["file"] = json!(f);
        reports.push(v);
    }
    let mut equivalent = Vec::new();
    let mut conjugate_pairs = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if same_rep_up_to_conjugacy(&reps[i], &reps[j], MATCH_TOL) {
                equivalent.push((i, j));
            }
            if same_rep_up_to_conjugacy(&conjugate_rep(&reps[i]), &reps[j], MATCH_TOL) {
                conjugate_pairs.push((i, j));
            }
        }
    }
    if reps.len() > 1 {
        let _ = writeln!(table, "equivalent up to conjugacy: {equivalent:?}");
        let _ = writeln!(table, "complex-conjugate pairs: {conjugate_pairs:?}");
    }
    let json = json!({
        "schema": 1,
        "command": "verify",
        "tolerance": tolerance,
        "representations": reports,
        "equivalent": equivalent,
        "conjugate_pairs": conjugate_pairs,
        "passed": all_ok,
    });
    Ok(Report { json, table, ok: all_ok })
}
