//! Oriented link diagrams.
//!
//! A diagram is stored as a signed Gauss code: every component is the cyclic
//! list of crossing passes met while walking along its orientation, and every
//! crossing carries its handedness. Arcs, the crossing table and the PD code
//! are all derived from this representation.
//!
//! Arcs are numbered canonically by first appearance while scanning the
//! crossings in order and, inside a crossing, the incoming under arc, the
//! over arc and the outgoing under arc. Crossingless components come last.
//! Because the numbering only depends on the Gauss code, parsing a PD code
//! and serializing the result gives back the same numbering.

mod builtin;
mod moves;
mod pd;

use serde::Serialize;
use thiserror::Error;

pub use builtin::{builtin, Builtin};
pub use moves::{applicable_moves, apply_reidemeister, MoveKind, ReidemeisterMove};
pub use pd::parse_pd;

pub type ArcId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn flip(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }

    /// Crossing sign: `+1` for right-handed, `−1` for left-handed.
    pub fn sign(self) -> i32 {
        match self {
            Handedness::Right => 1,
            Handedness::Left => -1,
        }
    }
}

/// A crossing of the diagram in terms of arcs.
///
/// Right-handed crossings satisfy `under_in * over = under_out`, left-handed
/// ones `under_out * over = under_in`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub over: ArcId,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub handedness: Handedness,
}

/// One passage of a component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: usize,
    pub over: bool,
}

impl Pass {
    pub fn over(crossing: usize) -> Self {
        Pass { crossing, over: true }
    }

    pub fn under(crossing: usize) -> Self {
        Pass { crossing, over: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed code at `{token}`: {reason}")]
    MalformedCode { token: String, reason: String },
    #[error("inconsistent arcs: {0}")]
    InconsistentArcs(String),
    #[error("empty diagram")]
    EmptyDiagram,
    #[error("invalid site: {0}")]
    InvalidSite(String),
}

/// An oriented link diagram; equality ignores arc names.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    components: Vec<Vec<Pass>>,
    handedness: Vec<Handedness>,
    crossings: Vec<Crossing>,
    arc_count: usize,
    component_of_arc: Vec<usize>,
    arc_names: Vec<String>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components && self.handedness == other.handedness
    }
}

impl Eq for LinkDiagram {}

/// Arc ids of the segments leaving each pass of one component, before renumbering.
fn component_arcs(comp: &[Pass], next_id: &mut usize) -> Vec<usize> {
    let len = comp.len();
    let unders: Vec<usize> = (0..len).filter(|&j| !comp[j].over).collect();
    if unders.is_empty() {
        let id = *next_id;
        *next_id += 1;
        return vec![id; len.max(1)];
    }
    let mut arc_after = vec![usize::MAX; len];
    let base = *next_id;
    *next_id += unders.len();
    for (k, &u) in unders.iter().enumerate() {
        let mut j = u;
        loop {
            arc_after[j] = base + k;
            j = (j + 1) % len;
            if !comp[j].over {
                break;
            }
        }
    }
    arc_after
}

impl LinkDiagram {
    /// Builds a diagram from a signed Gauss code and brings it to canonical
    /// form. Each crossing must be passed exactly once over and once under.
    pub fn from_gauss(components: Vec<Vec<Pass>>, handedness: Vec<Handedness>) -> Result<Self, DiagramError> {
        let n = handedness.len();
        if components.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut seen = vec![[0u8; 2]; n];
        for p in components.iter().flatten() {
            if p.crossing >= n {
                return Err(DiagramError::InconsistentArcs(format!("pass through unknown crossing {}", p.crossing)));
            }
            seen[p.crossing][p.over as usize] += 1;
        }
        if let Some(c) = seen.iter().position(|s| *s != [1, 1]) {
            return Err(DiagramError::InconsistentArcs(format!(
                "crossing {} is not passed exactly once over and once under",
                c
            )));
        }

        // provisional arc ids
        let mut next = 0;
        let arc_after: Vec<Vec<usize>> = components.iter().map(|c| component_arcs(c, &mut next)).collect();
        let mut over_arc = vec![0; n];
        let mut under_in = vec![0; n];
        let mut under_out = vec![0; n];
        for (ci, comp) in components.iter().enumerate() {
            let len = comp.len();
            for (j, p) in comp.iter().enumerate() {
                let before = arc_after[ci][(j + len - 1) % len];
                let after = arc_after[ci][j];
                if p.over {
                    over_arc[p.crossing] = after;
                } else {
                    under_in[p.crossing] = before;
                    under_out[p.crossing] = after;
                }
            }
        }

        // renumber by first appearance
        let mut rename = vec![usize::MAX; next];
        let mut count = 0;
        let mut visit = |a: usize, rename: &mut Vec<usize>| {
            if rename[a] == usize::MAX {
                rename[a] = count;
                count += 1;
            }
        };
        for c in 0..n {
            visit(under_in[c], &mut rename);
            visit(over_arc[c], &mut rename);
            visit(under_out[c], &mut rename);
        }
        for arcs in &arc_after {
            for &a in arcs {
                visit(a, &mut rename);
            }
        }

        // order components by their smallest arc, rotate each to a canonical start
        let mut order: Vec<usize> = (0..components.len()).collect();
        let min_arc = |ci: usize| arc_after[ci].iter().map(|&a| rename[a]).min().unwrap();
        order.sort_by_key(|&ci| (min_arc(ci), ci));
        let mut canon = Vec::with_capacity(components.len());
        for &ci in &order {
            let comp = &components[ci];
            if comp.is_empty() {
                canon.push(Vec::new());
                continue;
            }
            let has_under = comp.iter().any(|p| !p.over);
            // start at the under pass with the smallest crossing id, or at the
            // smallest crossing for a component that never passes under
            let start = (0..comp.len())
                .filter(|&j| !has_under || !comp[j].over)
                .min_by_key(|&j| comp[j].crossing)
                .unwrap();
            let mut rotated = comp[start..].to_vec();
            rotated.extend_from_slice(&comp[..start]);
            canon.push(rotated);
        }
        let mut component_of_arc = vec![0; count];
        for (pos, &ci) in order.iter().enumerate() {
            for &a in &arc_after[ci] {
                component_of_arc[rename[a]] = pos;
            }
        }
        let crossings = (0..n)
            .map(|c| Crossing {
                over: rename[over_arc[c]],
                under_in: rename[under_in[c]],
                under_out: rename[under_out[c]],
                handedness: handedness[c],
            })
            .collect();
        Ok(LinkDiagram {
            components: canon,
            handedness,
            crossings,
            arc_count: count,
            component_of_arc,
            arc_names: (0..count).map(|i| format!("x{}", i)).collect(),
        })
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_of_arc(&self) -> &[usize] {
        &self.component_of_arc
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// The signed Gauss code in canonical form.
    pub fn gauss_code(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn handedness(&self) -> &[Handedness] {
        &self.handedness
    }

    pub fn arc_names(&self) -> &[String] {
        &self.arc_names
    }

    /// Replaces the arc names; the length must equal the arc count.
    pub fn with_arc_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), self.arc_count, "one name per arc");
        self.arc_names = names;
        self
    }

    /// The mirror image: same Gauss code, every handedness flipped.
    pub fn mirror(&self) -> LinkDiagram {
        let mut d = self.clone();
        d.handedness = d.handedness.iter().map(|h| h.flip()).collect();
        for c in &mut d.crossings {
            c.handedness = c.handedness.flip();
        }
        d
    }

    /// Number of segments between consecutive passes; a crossingless
    /// component counts as a single segment.
    pub fn segment_count(&self) -> usize {
        self.components.iter().map(|c| c.len().max(1)).sum()
    }

    /// Component and position of a segment; segment `(c, j)` enters pass `j`.
    pub fn segment_position(&self, segment: usize) -> Option<(usize, usize)> {
        let mut s = segment;
        for (ci, c) in self.components.iter().enumerate() {
            let len = c.len().max(1);
            if s < len {
                return Some((ci, s));
            }
            s -= len;
        }
        None
    }

    pub(crate) fn segment_index(&self, comp: usize, pos: usize) -> usize {
        self.components[..comp].iter().map(|c| c.len().max(1)).sum::<usize>() + pos
    }

    /// Component and position of a pass.
    pub fn locate(&self, pass: Pass) -> (usize, usize) {
        for (ci, c) in self.components.iter().enumerate() {
            if let Some(j) = c.iter().position(|p| *p == pass) {
                return (ci, j);
            }
        }
        unreachable!("every crossing is passed over and under")
    }

    /// PD code with edge labels numbered along the components.
    pub fn to_pd(&self) -> String {
        pd::serialize(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_has_one_arc() {
        let d = LinkDiagram::from_gauss(vec![vec![]], vec![]).unwrap();
        assert_eq!(d.arc_count(), 1);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.segment_count(), 1);
    }

    #[test]
    fn rotation_does_not_change_diagram() {
        use Handedness::Left;
        let a = vec![Pass::over(0), Pass::under(1), Pass::over(2), Pass::under(0), Pass::over(1), Pass::under(2)];
        let mut b = a.clone();
        b.rotate_left(2);
        let da = LinkDiagram::from_gauss(vec![a], vec![Left; 3]).unwrap();
        let db = LinkDiagram::from_gauss(vec![b], vec![Left; 3]).unwrap();
        assert_eq!(da, db);
        assert_eq!(da.crossings(), db.crossings());
    }

    #[test]
    fn rejects_bad_pass_counts() {
        let r = LinkDiagram::from_gauss(vec![vec![Pass::over(0), Pass::over(0)]], vec![Handedness::Right]);
        assert!(matches!(r, Err(DiagramError::InconsistentArcs(_))));
    }

    #[test]
    fn mirror_flips_every_crossing() {
        let d = builtin(Builtin::Borromean);
        let m = d.mirror();
        assert_eq!(m, builtin(Builtin::BorromeanMirror));
        for (a, b) in d.crossings().iter().zip(m.crossings()) {
            assert_eq!(a.handedness, b.handedness.flip());
            assert_eq!((a.over, a.under_in, a.under_out), (b.over, b.under_in, b.under_out));
        }
    }
}
