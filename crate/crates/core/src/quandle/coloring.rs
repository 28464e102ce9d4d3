use serde::Serialize;

use super::{make_dihedral, FiniteQuandle};
use crate::diagram::LinkDiagram;
use crate::presentations::{fundamental_quandle_presentation, QuandleOp, QuandlePresentation, QuandleWord};

/// A quandle morphism, as the value of every generator (arc) in order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn colors_used(&self) -> usize {
        let mut v = self.assignment.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    pub fn is_constant(&self) -> bool {
        self.colors_used() <= 1
    }
}

/// Anything with a quandle presentation whose generators are colored.
pub trait Colorable {
    fn quandle_presentation(&self) -> QuandlePresentation;
}

impl Colorable for QuandlePresentation {
    fn quandle_presentation(&self) -> QuandlePresentation {
        self.clone()
    }
}

impl Colorable for LinkDiagram {
    fn quandle_presentation(&self) -> QuandlePresentation {
        fundamental_quandle_presentation(self)
    }
}

fn eval(w: &QuandleWord, vals: &[Option<usize>], q: &FiniteQuandle) -> Option<usize> {
    match w {
        QuandleWord::Gen(g) => vals[*g],
        QuandleWord::Apply(l, op, r) => {
            let (a, b) = (eval(l, vals, q)?, eval(r, vals, q)?);
            Some(match op {
                QuandleOp::Star => q.op(a, b),
                QuandleOp::StarInv => q.op_inv(a, b),
            })
        }
    }
}

/// Solves `w = target` for the leaf at the bottom of the left spine when every
/// right operand along the spine is known, e.g. `u * o = v` gives `u = v *⁻¹ o`.
fn solve_spine(w: &QuandleWord, target: usize, vals: &[Option<usize>], q: &FiniteQuandle) -> Option<(usize, usize)> {
    match w {
        QuandleWord::Gen(g) => vals[*g].is_none().then_some((*g, target)),
        QuandleWord::Apply(l, op, r) => {
            let b = eval(r, vals, q)?;
            let t = match op {
                QuandleOp::Star => q.op_inv(target, b),
                QuandleOp::StarInv => q.op(target, b),
            };
            solve_spine(l, t, vals, q)
        }
    }
}

/// Fills in forced values; returns false on a contradiction.
fn propagate(p: &QuandlePresentation, vals: &mut [Option<usize>], q: &FiniteQuandle) -> bool {
    loop {
        let mut changed = false;
        for (l, r) in &p.relations {
            match (eval(l, vals, q), eval(r, vals, q)) {
                (Some(a), Some(b)) if a != b => return false,
                (Some(a), None) => {
                    if let Some((g, v)) = solve_spine(r, a, vals, q) {
                        vals[g] = Some(v);
                        changed = true;
                    }
                }
                (None, Some(b)) => {
                    if let Some((g, v)) = solve_spine(l, b, vals, q) {
                        vals[g] = Some(v);
                        changed = true;
                    }
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(p: &QuandlePresentation, vals: &mut Vec<Option<usize>>, q: &FiniteQuandle, out: &mut Vec<Coloring>) {
    let saved = vals.clone();
    if !propagate(p, vals, q) {
        *vals = saved;
        return;
    }
    match vals.iter().position(Option::is_none) {
        None => out.push(Coloring { assignment: vals.iter().map(|v| v.unwrap()).collect() }),
        Some(g) => {
            for c in 0..q.size() {
                vals[g] = Some(c);
                search(p, vals, q, out);
                vals[g] = None;
            }
        }
    }
    *vals = saved;
}

/// All quandle morphisms from the presented quandle to `q`, sorted.
pub fn enumerate_colorings<C: Colorable + ?Sized>(source: &C, q: &FiniteQuandle) -> Vec<Coloring> {
    let p = source.quandle_presentation();
    let mut out = Vec::new();
    if q.size() == 0 {
        return out;
    }
    search(&p, &mut vec![None; p.generator_count()], q, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Arc colorings of a diagram; `assignment[arc]` is the color of that arc.
pub fn diagram_colorings(d: &LinkDiagram, q: &FiniteQuandle) -> Vec<Coloring> {
    enumerate_colorings(d, q)
}

/// Whether some coloring by the dihedral quandle of order 3 uses all colors.
pub fn is_tricolorable(d: &LinkDiagram) -> bool {
    diagram_colorings(d, &make_dihedral(3)).iter().any(|c| c.colors_used() == 3)
}
