//! Reidemeister moves on the signed Gauss code.
//!
//! Sites name segments (see [`LinkDiagram::segment_position`]) and crossing
//! ids. Validation is combinatorial: the affected passes must be adjacent
//! along their components and the signs must fit the move. Planarity of the
//! result is not checked.

use super::{DiagramError, Handedness, LinkDiagram, Pass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReidemeisterMove {
    /// Adds a kink on `segment`; the new crossing is met over first when `over_first`.
    R1Add { segment: usize, handedness: Handedness, over_first: bool },
    /// Removes a kink crossing.
    R1Remove { crossing: usize },
    /// Pushes `over_segment` across `under_segment`, creating two crossings
    /// of opposite signs; the first gets `handedness`. With `parallel` the
    /// under strand meets the new crossings in the same order as the over strand.
    R2Add { over_segment: usize, under_segment: usize, handedness: Handedness, parallel: bool },
    /// Removes a bigon formed by two crossings.
    R2Remove { first: usize, second: usize },
    /// Slides a strand across the crossing of the other two strands of a triangle.
    R3 { crossings: [usize; 3] },
}

impl ReidemeisterMove {
    pub fn kind(&self) -> MoveKind {
        match self {
            ReidemeisterMove::R1Add { .. } => MoveKind::R1Add,
            ReidemeisterMove::R1Remove { .. } => MoveKind::R1Remove,
            ReidemeisterMove::R2Add { .. } => MoveKind::R2Add,
            ReidemeisterMove::R2Remove { .. } => MoveKind::R2Remove,
            ReidemeisterMove::R3 { .. } => MoveKind::R3,
        }
    }
}

fn invalid(msg: impl Into<String>) -> DiagramError {
    DiagramError::InvalidSite(msg.into())
}

type Code = Vec<Vec<Pass>>;

fn insert_at(code: &mut Code, comp: usize, pos: usize, passes: &[Pass]) {
    let c = &mut code[comp];
    if c.is_empty() {
        c.extend_from_slice(passes);
    } else {
        let tail = c.split_off(pos);
        c.extend_from_slice(passes);
        c.extend(tail);
    }
}

/// Removes crossings and shifts the ids of the remaining ones down.
fn remove_crossings(code: &Code, hand: &[Handedness], gone: &[usize]) -> (Code, Vec<Handedness>) {
    let new_id = |c: usize| c - gone.iter().filter(|&&g| g < c).count();
    let code = code
        .iter()
        .map(|comp| {
            comp.iter()
                .filter(|p| !gone.contains(&p.crossing))
                .map(|p| Pass { crossing: new_id(p.crossing), over: p.over })
                .collect()
        })
        .collect();
    let hand = hand.iter().enumerate().filter(|(i, _)| !gone.contains(i)).map(|(_, h)| *h).collect();
    (code, hand)
}

struct View<'a> {
    d: &'a LinkDiagram,
}

impl View<'_> {
    fn check_crossing(&self, c: usize) -> Result<(), DiagramError> {
        if c < self.d.crossing_count() {
            Ok(())
        } else {
            Err(invalid(format!("no crossing {}", c)))
        }
    }

    /// `Some(+1)` if `q` directly follows `p`, `Some(-1)` if `p` follows `q`.
    /// Components of length two are ambiguous and give `None`.
    fn order(&self, p: Pass, q: Pass) -> Option<i32> {
        let (cp, jp) = self.d.locate(p);
        let (cq, jq) = self.d.locate(q);
        let len = self.d.gauss_code()[cp].len();
        if cp != cq || len < 3 {
            return None;
        }
        if jq == (jp + 1) % len {
            Some(1)
        } else if jp == (jq + 1) % len {
            Some(-1)
        } else {
            None
        }
    }

    fn adjacent(&self, p: Pass, q: Pass) -> bool {
        let (cp, jp) = self.d.locate(p);
        let (cq, jq) = self.d.locate(q);
        let len = self.d.gauss_code()[cp].len();
        cp == cq && (jq == (jp + 1) % len || jp == (jq + 1) % len)
    }
}

/// Roles of an R3 triangle: the crossings of top/middle, top/bottom and middle/bottom strands.
fn r3_roles(d: &LinkDiagram, xs: [usize; 3]) -> Option<[usize; 3]> {
    let v = View { d };
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in PERMS {
        let [tm, tb, mb] = [xs[perm[0]], xs[perm[1]], xs[perm[2]]];
        let et = v.order(Pass::over(tm), Pass::over(tb));
        let em = v.order(Pass::under(tm), Pass::over(mb));
        let eb = v.order(Pass::under(tb), Pass::under(mb));
        if let (Some(et), Some(em), Some(eb)) = (et, em, eb) {
            let s = |c: usize| d.handedness()[c].sign();
            let o = s(tm) * et * em;
            if s(tb) * et * eb == o && s(mb) * em * eb == o {
                return Some([tm, tb, mb]);
            }
        }
    }
    None
}

pub fn apply_reidemeister(d: &LinkDiagram, mv: ReidemeisterMove) -> Result<LinkDiagram, DiagramError> {
    let v = View { d };
    let n = d.crossing_count();
    let mut code: Code = d.gauss_code().to_vec();
    let mut hand = d.handedness().to_vec();
    let seg = |s: usize| d.segment_position(s).ok_or_else(|| invalid(format!("no segment {}", s)));
    match mv {
        ReidemeisterMove::R1Add { segment, handedness, over_first } => {
            let (ci, j) = seg(segment)?;
            let pair = if over_first { [Pass::over(n), Pass::under(n)] } else { [Pass::under(n), Pass::over(n)] };
            insert_at(&mut code, ci, j, &pair);
            hand.push(handedness);
        }
        ReidemeisterMove::R1Remove { crossing } => {
            v.check_crossing(crossing)?;
            if !v.adjacent(Pass::over(crossing), Pass::under(crossing)) {
                return Err(invalid(format!("crossing {} is not a kink", crossing)));
            }
            (code, hand) = remove_crossings(&code, &hand, &[crossing]);
        }
        ReidemeisterMove::R2Add { over_segment, under_segment, handedness, parallel } => {
            let (co, jo) = seg(over_segment)?;
            let (cu, ju) = seg(under_segment)?;
            let (x1, x2) = (n, n + 1);
            let over = [Pass::over(x1), Pass::over(x2)];
            let under = if parallel { [Pass::under(x1), Pass::under(x2)] } else { [Pass::under(x2), Pass::under(x1)] };
            if (co, jo) == (cu, ju) {
                insert_at(&mut code, co, jo, &[over[0], over[1], under[0], under[1]]);
            } else if co == cu && ju > jo {
                insert_at(&mut code, cu, ju, &under);
                insert_at(&mut code, co, jo, &over);
            } else {
                insert_at(&mut code, co, jo, &over);
                insert_at(&mut code, cu, ju, &under);
            }
            hand.push(handedness);
            hand.push(handedness.flip());
        }
        ReidemeisterMove::R2Remove { first, second } => {
            v.check_crossing(first)?;
            v.check_crossing(second)?;
            if first == second {
                return Err(invalid("R2 needs two distinct crossings"));
            }
            if hand[first] == hand[second] {
                return Err(invalid("R2 crossings must have opposite signs"));
            }
            if !v.adjacent(Pass::over(first), Pass::over(second)) || !v.adjacent(Pass::under(first), Pass::under(second)) {
                return Err(invalid(format!("crossings {} and {} do not bound a bigon", first, second)));
            }
            (code, hand) = remove_crossings(&code, &hand, &[first, second]);
        }
        ReidemeisterMove::R3 { crossings } => {
            for &c in &crossings {
                v.check_crossing(c)?;
            }
            if crossings[0] == crossings[1] || crossings[1] == crossings[2] || crossings[0] == crossings[2] {
                return Err(invalid("R3 needs three distinct crossings"));
            }
            let [tm, tb, mb] = r3_roles(d, crossings)
                .ok_or_else(|| invalid(format!("crossings {:?} do not form a movable triangle", crossings)))?;
            for (p, q) in [
                (Pass::over(tm), Pass::over(tb)),
                (Pass::under(tm), Pass::over(mb)),
                (Pass::under(tb), Pass::under(mb)),
            ] {
                let (ci, jp) = d.locate(p);
                let (_, jq) = d.locate(q);
                code[ci].swap(jp, jq);
            }
        }
    }
    let out = LinkDiagram::from_gauss(code, hand)?;
    debug_assert_eq!(out.component_count(), d.component_count());
    Ok(out)
}

/// Every valid move of the requested kinds, in a deterministic order.
pub fn applicable_moves(d: &LinkDiagram, kinds: &[MoveKind]) -> Vec<ReidemeisterMove> {
    let mut out = Vec::new();
    let n = d.crossing_count();
    let segs = d.segment_count();
    let hands = [Handedness::Right, Handedness::Left];
    let ok = |mv: &ReidemeisterMove| apply_reidemeister(d, *mv).is_ok();
    for kind in kinds {
        match kind {
            MoveKind::R1Add => {
                for segment in 0..segs {
                    for handedness in hands {
                        for over_first in [true, false] {
                            out.push(ReidemeisterMove::R1Add { segment, handedness, over_first });
                        }
                    }
                }
            }
            MoveKind::R1Remove => {
                out.extend((0..n).map(|crossing| ReidemeisterMove::R1Remove { crossing }).filter(ok));
            }
            MoveKind::R2Add => {
                for over_segment in 0..segs {
                    for under_segment in 0..segs {
                        for handedness in hands {
                            for parallel in [true, false] {
                                out.push(ReidemeisterMove::R2Add { over_segment, under_segment, handedness, parallel });
                            }
                        }
                    }
                }
            }
            MoveKind::R2Remove => {
                for first in 0..n {
                    for second in first + 1..n {
                        let mv = ReidemeisterMove::R2Remove { first, second };
                        if ok(&mv) {
                            out.push(mv);
                        }
                    }
                }
            }
            MoveKind::R3 => {
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            let mv = ReidemeisterMove::R3 { crossings: [a, b, c] };
                            if ok(&mv) {
                                out.push(mv);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
