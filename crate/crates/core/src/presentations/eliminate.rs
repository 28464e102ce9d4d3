//! Tietze elimination of generators defined by a relation.
//!
//! A generator `g` can be removed when some relation reads `g ∼ W` (a relator
//! contains `g` exactly once, for groups) with `W` free of `g`. Eliminating in
//! plain relation order can leave longer relations than necessary, so the
//! elimination order is chosen by a bounded depth-first search that minimizes
//! the number of generators left and then the total word length. Candidates
//! are explored in diagram order, and the first optimum found is kept.
//!
//! A group presentation whose relators all have the conjugation shape
//! `x y z⁻¹ y⁻¹` is the Wirtinger presentation of a quandle presentation; ties
//! are then broken in favour of the generators the quandle elimination keeps,
//! so both simplified presentations share their generators.

use std::collections::HashSet;
use std::hash::Hash;

use super::{GroupPresentation, GroupWord, QuandlePresentation, QuandleWord};

/// Search nodes explored before settling for the best presentation found so far.
const NODE_CAP: usize = 50_000;

pub trait Eliminate: Sized {
    fn eliminate(&self) -> Self;
}

pub fn eliminate_generators<P: Eliminate>(p: &P) -> P {
    p.eliminate()
}

trait State: Clone {
    type Cand;
    type Key: Eq + Hash;
    fn candidates(&self) -> Vec<Self::Cand>;
    fn apply(&self, c: &Self::Cand) -> Self;
    fn key(&self) -> Self::Key;
    fn alive(&self) -> usize;
    fn relation_count(&self) -> usize;
    fn total_size(&self) -> usize;
    fn alive_flags(&self) -> &[bool];
}

struct Search<S: State> {
    best: S,
    best_cost: (usize, usize, usize),
    nodes: usize,
    seen: HashSet<S::Key>,
    preferred: Vec<bool>,
}

impl<S: State> Search<S> {
    fn run(start: S, preferred: Vec<bool>) -> S {
        let mut s = Search { best_cost: (0, 0, 0), best: start.clone(), nodes: 0, seen: HashSet::new(), preferred };
        s.best_cost = s.cost(&start);
        s.dfs(&start);
        s.best
    }

    /// Generators left, total size, kept generators outside the preferred set.
    fn cost(&self, s: &S) -> (usize, usize, usize) {
        let off = s
            .alive_flags()
            .iter()
            .enumerate()
            .filter(|&(g, &a)| a && !self.preferred.get(g).copied().unwrap_or(true))
            .count();
        (s.alive(), s.total_size(), off)
    }

    fn dfs(&mut self, state: &S) {
        if self.nodes >= NODE_CAP {
            return;
        }
        self.nodes += 1;
        // every elimination consumes a relation
        if state.alive().saturating_sub(state.relation_count()) > self.best_cost.0 {
            return;
        }
        for c in state.candidates() {
            let child = state.apply(&c);
            if !self.seen.insert(child.key()) {
                continue;
            }
            let cost = self.cost(&child);
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best = child.clone();
            }
            self.dfs(&child);
        }
    }
}

/// Result of eliminating quandle generators, with the words that express
/// every original generator through the kept ones.
#[derive(Clone, Debug)]
pub struct QuandleElimination {
    pub presentation: QuandlePresentation,
    /// Original indices of the kept generators.
    pub kept: Vec<usize>,
    /// For every original generator, a word over the kept generators.
    pub definitions: Vec<QuandleWord>,
}

impl QuandleElimination {
    /// Extends values on the kept generators to all original generators.
    pub fn extend<T: Clone>(&self, values: &[T], op: &impl Fn(&T, &T) -> T, op_inv: &impl Fn(&T, &T) -> T) -> Vec<T> {
        self.definitions.iter().map(|w| w.evaluate(values, op, op_inv)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct GroupElimination {
    pub presentation: GroupPresentation,
    pub kept: Vec<usize>,
    pub definitions: Vec<GroupWord>,
}

#[derive(Clone)]
struct QState {
    rels: Vec<(QuandleWord, QuandleWord)>,
    alive: Vec<bool>,
    defs: Vec<Option<QuandleWord>>,
}

impl State for QState {
    type Cand = (usize, usize, QuandleWord);
    type Key = (Vec<(QuandleWord, QuandleWord)>, Vec<bool>);

    fn candidates(&self) -> Vec<Self::Cand> {
        let mut out = Vec::new();
        for (i, (l, r)) in self.rels.iter().enumerate() {
            if let Some(g) = l.as_gen() {
                if !r.contains(g) {
                    out.push((i, g, r.clone()));
                }
            }
            if let Some(g) = r.as_gen() {
                if !l.contains(g) {
                    out.push((i, g, l.clone()));
                }
            }
        }
        out
    }

    fn apply(&self, (i, g, w): &Self::Cand) -> Self {
        let rels = self
            .rels
            .iter()
            .enumerate()
            .filter(|(j, _)| j != i)
            .map(|(_, (l, r))| (l.substitute(*g, w).reduce(), r.substitute(*g, w).reduce()))
            .filter(|(l, r)| l != r)
            .collect();
        let mut defs: Vec<Option<QuandleWord>> =
            self.defs.iter().map(|d| d.as_ref().map(|d| d.substitute(*g, w).reduce())).collect();
        defs[*g] = Some(w.clone());
        let mut alive = self.alive.clone();
        alive[*g] = false;
        QState { rels, alive, defs }
    }

    fn key(&self) -> Self::Key {
        (self.rels.clone(), self.alive.clone())
    }

    fn alive(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn relation_count(&self) -> usize {
        self.rels.len()
    }

    fn total_size(&self) -> usize {
        self.rels.iter().map(|(l, r)| l.size() + r.size()).sum()
    }

    fn alive_flags(&self) -> &[bool] {
        &self.alive
    }
}

fn reindex(alive: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let kept: Vec<usize> = (0..alive.len()).filter(|&g| alive[g]).collect();
    let mut new_index = vec![usize::MAX; alive.len()];
    for (k, &g) in kept.iter().enumerate() {
        new_index[g] = k;
    }
    (kept, new_index)
}

impl QuandlePresentation {
    /// Eliminates generators and records how to recover the removed ones.
    pub fn eliminate_with_definitions(&self) -> QuandleElimination {
        let n = self.generator_count();
        let start = QState {
            rels: self.relations.iter().filter(|(l, r)| l != r).cloned().collect(),
            alive: vec![true; n],
            defs: vec![None; n],
        };
        let best = Search::run(start, Vec::new());
        let (kept, idx) = reindex(&best.alive);
        let map = |w: &QuandleWord| w.map_generators(&|g| idx[g]);
        let presentation = QuandlePresentation {
            generator_names: kept.iter().map(|&g| self.generator_names[g].clone()).collect(),
            relations: best.rels.iter().map(|(l, r)| (map(l), map(r))).collect(),
        };
        let definitions = (0..n)
            .map(|g| match &best.defs[g] {
                Some(w) => map(w),
                None => QuandleWord::gen(idx[g]),
            })
            .collect();
        QuandleElimination { presentation, kept, definitions }
    }
}

impl Eliminate for QuandlePresentation {
    fn eliminate(&self) -> Self {
        self.eliminate_with_definitions().presentation
    }
}

#[derive(Clone)]
struct GState {
    rels: Vec<GroupWord>,
    alive: Vec<bool>,
    defs: Vec<Option<GroupWord>>,
}

impl State for GState {
    type Cand = (usize, usize, GroupWord);
    type Key = (Vec<GroupWord>, Vec<bool>);

    fn candidates(&self) -> Vec<Self::Cand> {
        let mut out = Vec::new();
        for (i, r) in self.rels.iter().enumerate() {
            let mut tried = Vec::new();
            for (k, &(g, e)) in r.letters().iter().enumerate() {
                if tried.contains(&g) || r.occurrences(g) != 1 {
                    continue;
                }
                tried.push(g);
                // r ~ g^e W, so g = W^-1 when e = 1 and g = W when e = -1
                let rest = GroupWord::new(r.rotate(k).letters()[1..].to_vec());
                let def = if e > 0 { rest.inverse() } else { rest };
                out.push((i, g, def));
            }
        }
        out
    }

    fn apply(&self, (i, g, w): &Self::Cand) -> Self {
        let rels = self
            .rels
            .iter()
            .enumerate()
            .filter(|(j, _)| j != i)
            .map(|(_, r)| r.substitute(*g, w).cyclic_reduce())
            .filter(|r| !r.is_empty())
            .collect();
        let mut defs: Vec<Option<GroupWord>> =
            self.defs.iter().map(|d| d.as_ref().map(|d| d.substitute(*g, w))).collect();
        defs[*g] = Some(w.clone());
        let mut alive = self.alive.clone();
        alive[*g] = false;
        GState { rels, alive, defs }
    }

    fn key(&self) -> Self::Key {
        (self.rels.clone(), self.alive.clone())
    }

    fn alive(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn relation_count(&self) -> usize {
        self.rels.len()
    }

    fn total_size(&self) -> usize {
        self.rels.iter().map(|r| r.len()).sum()
    }

    fn alive_flags(&self) -> &[bool] {
        &self.alive
    }
}

/// Reads `x y z⁻¹ y⁻¹` (up to rotation and inversion) as the quandle relation `z * y = x`.
fn conjugation_relation(r: &GroupWord) -> Option<(QuandleWord, QuandleWord)> {
    if r.len() != 4 {
        return None;
    }
    for w in [r.clone(), r.inverse()] {
        for k in 0..4 {
            let l = w.rotate(k);
            let l = l.letters();
            let signs: Vec<i8> = l.iter().map(|&(_, e)| e).collect();
            if signs == [1, 1, -1, -1] && l[1].0 == l[3].0 && l[0].0 != l[1].0 && l[2].0 != l[1].0 {
                let (x, y, z) = (l[0].0, l[1].0, l[2].0);
                return Some((QuandleWord::op(QuandleWord::gen(z), QuandleWord::gen(y)), QuandleWord::gen(x)));
            }
        }
    }
    None
}

fn quandle_preference(p: &GroupPresentation) -> Vec<bool> {
    let rels: Option<Vec<_>> = p.relators.iter().map(conjugation_relation).collect();
    match rels {
        Some(relations) if !relations.is_empty() => {
            let q = QuandlePresentation { generator_names: p.generator_names.clone(), relations };
            let kept = q.eliminate_with_definitions().kept;
            (0..p.generator_count()).map(|g| kept.contains(&g)).collect()
        }
        _ => Vec::new(),
    }
}

impl GroupPresentation {
    pub fn eliminate_with_definitions(&self) -> GroupElimination {
        let n = self.generator_count();
        let start = GState {
            rels: self.relators.iter().map(|r| r.cyclic_reduce()).filter(|r| !r.is_empty()).collect(),
            alive: vec![true; n],
            defs: vec![None; n],
        };
        let best = Search::run(start, quandle_preference(self));
        let (kept, idx) = reindex(&best.alive);
        let map = |w: &GroupWord| w.map_generators(|g| idx[g]);
        // relators that agree up to rotation and inversion are redundant
        let mut seen = std::collections::HashSet::new();
        let relators = best.rels.iter().filter(|r| seen.insert(r.cyclic_key())).map(map).collect();
        let presentation = GroupPresentation {
            generator_names: kept.iter().map(|&g| self.generator_names[g].clone()).collect(),
            relators,
        };
        let definitions = (0..n)
            .map(|g| match &best.defs[g] {
                Some(w) => map(w),
                None => GroupWord::gen(idx[g]),
            })
            .collect();
        GroupElimination { presentation, kept, definitions }
    }
}

impl Eliminate for GroupPresentation {
    fn eliminate(&self) -> Self {
        self.eliminate_with_definitions().presentation
    }
}
