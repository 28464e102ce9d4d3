//! Parabolic colorings as solutions of polynomial systems.
//!
//! After gauge fixing (first generator `[1, 0]`, second `[0, t]`, the others
//! free) every quandle relation `L ∼ R` becomes two coordinate equations of
//! `L = σ·R` for a sign `σ`, one system per sign vector. Solutions are turned
//! into colorings of all arcs, filtered (injective on the generators, not
//! reducible) and grouped into conjugacy classes by trace fingerprints.

mod fingerprint;
mod solve;
mod system;

use num::complex::Complex64;
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::parabolic::{complex_pair, par_op, par_op_inv, projective_eq, ParabolicElement};
use crate::presentations::{
    fundamental_quandle_presentation, wirtinger_presentation, Eliminate, GroupPresentation, GroupWord, QuandlePresentation,
};
use crate::roots::AberthOptions;

pub use fingerprint::{default_words, evaluate_word, fingerprints_match, matrix_fingerprint, normalize_trace, trace_fingerprint};
pub use solve::{solve_system, RawSolution};
pub use system::{build_systems, build_systems_gauged, ConstraintSystem, GaugeEntry};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum SolveError {
    #[error("presentation needs at least two generators, found {0}")]
    TooFewGenerators(usize),
    #[error("invalid gauge pair ({0}, {1})")]
    InvalidGauge(usize, usize),
    #[error("system has {found} variables, the limit is {max}")]
    TooManyVariables { found: usize, max: usize },
    #[error("{branches} sign branches exceed the limit {max}")]
    TooManyBranches { branches: usize, max: usize },
    #[error("solver stalled on branch {branch:?} with {} partial solutions", .partial.len())]
    SolverStalled { branch: Vec<i8>, partial: Vec<RawSolution> },
    #[error("branch {branch:?} has a positive-dimensional solution set")]
    PositiveDimensional { branch: Vec<i8>, samples: Vec<Vec<Complex64>> },
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub max_vars: usize,
    pub max_branches: usize,
    /// Relative residual every returned solution must reach.
    pub residual_tol: f64,
    /// Relative tolerance for merging solutions and comparing fingerprints.
    pub fingerprint_tol: f64,
    pub aberth: AberthOptions,
    pub newton_starts: usize,
    pub newton_radius: f64,
    pub seed: u64,
    /// Generators receiving `[1, 0]` and `[0, t]`; defaults to the first two.
    pub gauge: Option<(usize, usize)>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_vars: 8,
            max_branches: 1 << 12,
            residual_tol: 1e-12,
            fingerprint_tol: 1e-8,
            aberth: AberthOptions::default(),
            newton_starts: 64,
            newton_radius: 4.0,
            seed: 0,
            gauge: None,
        }
    }
}

/// A coloring of every arc, with the raw solutions that produce it.
#[derive(Clone, Debug)]
pub struct ParabolicColoring {
    pub names: Vec<String>,
    pub values: Vec<ParabolicElement<Complex64>>,
    pub raw_indices: Vec<usize>,
}

impl ParabolicColoring {
    pub fn get(&self, name: &str) -> Option<&ParabolicElement<Complex64>> {
        self.names.iter().position(|n| n == name).map(|i| &self.values[i])
    }
}

struct NamedValues<'a>(&'a [String], &'a [ParabolicElement<Complex64>]);

impl Serialize for NamedValues<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (n, v) in self.0.iter().zip(self.1) {
            m.serialize_entry(n, v)?;
        }
        m.end()
    }
}

impl Serialize for ParabolicColoring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ParabolicColoring", 2)?;
        st.serialize_field("values", &NamedValues(&self.names, &self.values))?;
        st.serialize_field("raw_indices", &self.raw_indices)?;
        st.end()
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Indices into the coloring list; the representative comes first.
    pub members: Vec<usize>,
    pub fingerprint: Vec<Complex64>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

impl Serialize for ConjugacyClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ConjugacyClass", 3)?;
        st.serialize_field("representative", &self.representative())?;
        st.serialize_field("members", &self.members)?;
        st.serialize_field("fingerprint", &self.fingerprint.iter().map(|z| complex_pair(*z)).collect::<Vec<_>>())?;
        st.end()
    }
}

/// Everything the pipeline produces for one diagram.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionSet {
    /// Simplified quandle presentation whose generators carry the gauge.
    pub presentation: QuandlePresentation,
    /// Simplified Wirtinger presentation on the same generator names.
    pub group: GroupPresentation,
    pub variables: Vec<String>,
    pub gauge: Vec<GaugeEntry>,
    pub branches: usize,
    pub raw_solutions: Vec<RawSolution>,
    pub colorings: Vec<ParabolicColoring>,
    pub classes: Vec<ConjugacyClass>,
    /// Pairs of classes with complex-conjugate fingerprints.
    pub conjugate_pairs: Vec<(usize, usize)>,
    pub fingerprint_words: Vec<String>,
    pub warnings: Vec<String>,
}

impl SolutionSet {
    /// Every class has a distinct complex-conjugate partner.
    pub fn all_conjugate_paired(&self) -> bool {
        let mut seen = vec![false; self.classes.len()];
        for &(i, j) in &self.conjugate_pairs {
            if i != j {
                seen[i] = true;
                seen[j] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Values of the presentation generators for one coloring.
    pub fn generator_values(&self, coloring: usize) -> Vec<ParabolicElement<Complex64>> {
        let c = &self.colorings[coloring];
        self.presentation.generator_names.iter().map(|n| c.get(n).expect("generator is an arc").clone()).collect()
    }

    pub fn representative(&self, class: usize) -> &ParabolicColoring {
        &self.colorings[self.classes[class].representative()]
    }
}

/// Relators of `g` rewritten over the generators of `names`; relators using
/// other generators are dropped.
fn relators_over(g: &GroupPresentation, names: &[String]) -> Vec<GroupWord> {
    let idx: Vec<Option<usize>> = g.generator_names.iter().map(|n| names.iter().position(|m| m == n)).collect();
    g.relators
        .iter()
        .filter(|r| r.letters().iter().all(|&(x, _)| idx[x].is_some()))
        .map(|r| r.map_generators(|x| idx[x].unwrap()))
        .collect()
}

fn parallel(v: &ParabolicElement<Complex64>, w: &ParabolicElement<Complex64>, eps: f64) -> bool {
    let n = |u: &ParabolicElement<Complex64>| (u.x.norm_sqr() + u.y.norm_sqr()).sqrt();
    (v.x * w.y - v.y * w.x).norm() <= eps * n(v) * n(w)
}

/// Branch systems and raw solutions of a presentation with at least two
/// generators; a single generator yields one empty solution.
pub fn solve_presentation(
    p: &QuandlePresentation,
    opts: &SolveOptions,
) -> Result<(Vec<ConstraintSystem>, Vec<RawSolution>), SolveError> {
    if p.generator_count() < 2 {
        return Ok((Vec::new(), vec![RawSolution { branch: Vec::new(), values: Vec::new(), residual: 0.0 }]));
    }
    let systems = build_systems_gauged(p, opts.gauge)?;
    if systems.len() > opts.max_branches {
        return Err(SolveError::TooManyBranches { branches: systems.len(), max: opts.max_branches });
    }
    let results: Vec<Result<Vec<RawSolution>, SolveError>> = systems.par_iter().map(|s| solve_system(s, opts)).collect();
    let mut raw = Vec::new();
    for r in results {
        raw.extend(r?);
    }
    Ok((systems, raw))
}

/// Generator values of the injective, irreducible colorings among the raw
/// solutions, merged up to sign, each with the raw solutions producing it.
pub fn injective_colorings(
    p: &QuandlePresentation,
    systems: &[ConstraintSystem],
    raw: &[RawSolution],
    eps: f64,
) -> Vec<(Vec<ParabolicElement<Complex64>>, Vec<usize>)> {
    let k = p.generator_count();
    let op = |a: &ParabolicElement<Complex64>, b: &ParabolicElement<Complex64>| par_op_inv(a, b);
    let op_inv = |a: &ParabolicElement<Complex64>, b: &ParabolicElement<Complex64>| par_op(a, b);
    let mut out: Vec<(Vec<ParabolicElement<Complex64>>, Vec<usize>)> = Vec::new();
    for (ri, r) in raw.iter().enumerate() {
        let gens = match systems.first() {
            Some(s) => s.assign(&r.values),
            None => vec![ParabolicElement::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)); k],
        };
        // a relation on a single generator still has to hold
        if k < 2
            && !p.relations.iter().all(|(l, rr)| projective_eq(&l.evaluate(&gens, &op, &op_inv), &rr.evaluate(&gens, &op, &op_inv), eps))
        {
            continue;
        }
        let injective = (0..k).all(|i| (i + 1..k).all(|j| !projective_eq(&gens[i], &gens[j], eps)));
        let reducible = k >= 2 && (1..k).all(|j| parallel(&gens[0], &gens[j], eps));
        if !injective || reducible {
            continue;
        }
        match out.iter_mut().find(|(v, _)| v.iter().zip(&gens).all(|(a, b)| projective_eq(a, b, eps))) {
            Some((_, idx)) => idx.push(ri),
            None => out.push((gens, vec![ri])),
        }
    }
    out
}

/// The full pipeline on a diagram.
pub fn enumerate_parabolic_colorings(d: &LinkDiagram, opts: &SolveOptions) -> Result<SolutionSet, SolveError> {
    let elim = fundamental_quandle_presentation(d).eliminate_with_definitions();
    let group = wirtinger_presentation(d).eliminate();
    let p = elim.presentation.clone();
    let k = p.generator_count();
    let eps = opts.fingerprint_tol;
    let op = |a: &ParabolicElement<Complex64>, b: &ParabolicElement<Complex64>| par_op_inv(a, b);
    let op_inv = |a: &ParabolicElement<Complex64>, b: &ParabolicElement<Complex64>| par_op(a, b);
    let (systems, raw) = solve_presentation(&p, opts)?;
    let names = d.arc_names().to_vec();
    let mut warnings = Vec::new();
    let (kept_values, colorings): (Vec<_>, Vec<_>) = injective_colorings(&p, &systems, &raw, eps)
        .into_iter()
        .map(|(gens, raw_indices)| {
            let c = ParabolicColoring { names: names.clone(), values: elim.extend(&gens, &op, &op_inv), raw_indices };
            (gens, c)
        })
        .unzip();

    let relators = relators_over(&group, &p.generator_names);
    let words = default_words(k, &relators);
    let fps: Vec<Vec<Complex64>> = kept_values.iter().map(|v| trace_fingerprint(v, &words)).collect();
    let mut classes: Vec<ConjugacyClass> = Vec::new();
    for (i, fp) in fps.iter().enumerate() {
        match classes.iter_mut().find(|c| fingerprints_match(&c.fingerprint, fp, eps)) {
            Some(c) => c.members.push(i),
            None => classes.push(ConjugacyClass { members: vec![i], fingerprint: fp.clone() }),
        }
    }
    // representative: the member whose t has the largest (Re, Im)
    let t_of = |c: usize| raw[colorings[c].raw_indices[0]].values.first().copied().unwrap_or_default();
    for c in &mut classes {
        c.members.sort_by(|&a, &b| solve::lex(&[t_of(b)], &[t_of(a)]).then(a.cmp(&b)));
    }
    classes.sort_by(|a, b| solve::lex(&a.fingerprint, &b.fingerprint));
    let mut conjugate_pairs = Vec::new();
    for i in 0..classes.len() {
        let conj: Vec<Complex64> = classes[i].fingerprint.iter().map(|z| normalize_trace(z.conj())).collect();
        for j in i..classes.len() {
            if fingerprints_match(&classes[j].fingerprint, &conj, eps) {
                conjugate_pairs.push((i, j));
            }
        }
    }
    if raw.iter().any(|r| r.residual > opts.residual_tol) {
        warnings.push("some raw solutions miss the residual tolerance".to_string());
    }
    Ok(SolutionSet {
        fingerprint_words: words.iter().map(|w| w.display(&p.generator_names)).collect(),
        presentation: p,
        group,
        variables: systems.first().map(|s| s.variables.clone()).unwrap_or_default(),
        gauge: systems.first().map(|s| s.gauge.clone()).unwrap_or_default(),
        branches: systems.len(),
        raw_solutions: raw,
        colorings,
        classes,
        conjugate_pairs,
        warnings,
    })
}
