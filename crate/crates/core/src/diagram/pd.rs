//! PD-code parsing and serialization.
//!
//! `X[a,b,c,d]` lists the four edge labels around a crossing counterclockwise,
//! starting at the incoming under edge, so `c` is the outgoing under edge.
//! Every label names an edge between two crossings and must occur exactly
//! twice. A crossing is right-handed (positive) when the over strand enters
//! at `d`, left-handed when it enters at `b`. A crossingless component is
//! written `Loop[a]`.
//!
//! Worked example, the left-handed trefoil `X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]`:
//! edge 4 leaves the second crossing at its under exit, so it enters the first
//! crossing at `b`; the over strand therefore enters at `b` and the first
//! crossing is left-handed, as are the other two.

use std::collections::{BTreeMap, VecDeque};

use super::{DiagramError, Handedness, LinkDiagram, Pass};

#[derive(Debug)]
enum Entry {
    Crossing([u64; 4]),
    Loop(u64),
}

fn malformed(token: &str, reason: &str) -> DiagramError {
    DiagramError::MalformedCode { token: token.trim().to_string(), reason: reason.to_string() }
}

fn parse_entries(text: &str) -> Result<Vec<Entry>, DiagramError> {
    let mut entries = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let mut rest = line.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c == ';' || c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let open = rest.find('[').ok_or_else(|| malformed(rest, "expected `X[` or `Loop[`"))?;
            let head = rest[..open].trim();
            let close = rest.find(']').ok_or_else(|| malformed(rest, "missing `]`"))?;
            if close < open {
                return Err(malformed(&rest[..=close], "unbalanced brackets"));
            }
            let token = &rest[..=close];
            let labels = rest[open + 1..close]
                .split(',')
                .map(|s| {
                    let s = s.trim();
                    s.parse::<u64>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| malformed(token, &format!("`{}` is not a positive integer label", s)))
                })
                .collect::<Result<Vec<u64>, _>>()?;
            match (head, labels.len()) {
                ("X", 4) => entries.push(Entry::Crossing([labels[0], labels[1], labels[2], labels[3]])),
                ("Loop", 1) => entries.push(Entry::Loop(labels[0])),
                ("X", _) => return Err(malformed(token, "a crossing needs exactly 4 labels")),
                ("Loop", _) => return Err(malformed(token, "a loop needs exactly 1 label")),
                _ => return Err(malformed(token, "unknown entry kind")),
            }
            rest = &rest[close + 1..];
        }
    }
    Ok(entries)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    In,
    Out,
}

impl Dir {
    fn rev(self) -> Dir {
        match self {
            Dir::In => Dir::Out,
            Dir::Out => Dir::In,
        }
    }
}

/// Slot on the other side of the crossing along the same strand.
fn across(slot: usize) -> usize {
    (slot + 2) % 4
}

struct Orienter<'a> {
    codes: &'a [[u64; 4]],
    occ: &'a BTreeMap<u64, Vec<(usize, usize)>>,
    dir: Vec<[Option<Dir>; 4]>,
}

impl Orienter<'_> {
    fn other_end(&self, c: usize, s: usize) -> (usize, usize) {
        let ends = &self.occ[&self.codes[c][s]];
        if ends[0] == (c, s) {
            ends[1]
        } else {
            ends[0]
        }
    }

    fn set(&mut self, c: usize, s: usize, d: Dir, queue: &mut VecDeque<(usize, usize)>) -> Result<(), DiagramError> {
        match self.dir[c][s] {
            Some(old) if old != d => Err(DiagramError::InconsistentArcs(format!(
                "edge {} cannot be oriented consistently",
                self.codes[c][s]
            ))),
            Some(_) => Ok(()),
            None => {
                self.dir[c][s] = Some(d);
                queue.push_back((c, s));
                Ok(())
            }
        }
    }

    fn propagate(&mut self, mut queue: VecDeque<(usize, usize)>) -> Result<(), DiagramError> {
        while let Some((c, s)) = queue.pop_front() {
            let d = self.dir[c][s].unwrap();
            let (c2, s2) = self.other_end(c, s);
            self.set(c2, s2, d.rev(), &mut queue)?;
            self.set(c, across(s), d.rev(), &mut queue)?;
        }
        Ok(())
    }

    /// Edges of the over-only strand through slot `(c, s)`.
    fn strand_edges(&self, c: usize, s: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let (mut cc, mut ss) = (c, s);
        loop {
            out.push((cc, ss));
            let (c2, s2) = self.other_end(cc, ss);
            let next = (c2, across(s2));
            if next == (c, s) || out.contains(&next) {
                break;
            }
            (cc, ss) = next;
        }
        out
    }

    /// Orientation of a component that never passes under: labels increase
    /// along it; with only two edges, the smaller label enters the crossing
    /// that comes first.
    fn default_orientation(&mut self, c: usize, s: usize) -> Result<(), DiagramError> {
        let edges = self.strand_edges(c, s);
        let labels: Vec<u64> = edges.iter().map(|&(cc, ss)| self.codes[cc][ss]).collect();
        let (k, &low) = labels.iter().enumerate().min_by_key(|(_, l)| **l).unwrap();
        let (lc, ls) = edges[k];
        let (oc, os) = self.other_end(lc, ls);
        // Orientation "low leaves (lc, ls)": the following edge is the one across (oc, os).
        let leaves_here = match edges.len() {
            1 => true,
            2 => oc < lc || (lc == oc && os < ls),
            _ => self.codes[oc][across(os)] == low + 1,
        };
        let mut queue = VecDeque::new();
        self.set(lc, ls, if leaves_here { Dir::Out } else { Dir::In }, &mut queue)?;
        self.propagate(queue)
    }
}

pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let entries = parse_entries(text)?;
    if entries.is_empty() {
        return Err(DiagramError::EmptyDiagram);
    }
    let mut codes = Vec::new();
    let mut loops = Vec::new();
    for e in &entries {
        match e {
            Entry::Crossing(c) => codes.push(*c),
            Entry::Loop(l) => loops.push(*l),
        }
    }
    let mut occ: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, code) in codes.iter().enumerate() {
        for (s, &l) in code.iter().enumerate() {
            occ.entry(l).or_default().push((c, s));
        }
    }
    for (&l, ends) in &occ {
        if ends.len() != 2 {
            return Err(DiagramError::InconsistentArcs(format!(
                "label {} occurs {} times, expected 2",
                l,
                ends.len()
            )));
        }
    }
    let mut seen_loops = Vec::new();
    for &l in &loops {
        if occ.contains_key(&l) || seen_loops.contains(&l) {
            return Err(DiagramError::InconsistentArcs(format!("loop label {} is used elsewhere", l)));
        }
        seen_loops.push(l);
    }

    let mut o = Orienter { codes: &codes, occ: &occ, dir: vec![[None; 4]; codes.len()] };
    let mut queue = VecDeque::new();
    for c in 0..codes.len() {
        o.set(c, 0, Dir::In, &mut queue)?;
        o.set(c, 2, Dir::Out, &mut queue)?;
    }
    o.propagate(queue)?;
    for c in 0..codes.len() {
        if o.dir[c][1].is_none() {
            o.default_orientation(c, 1)?;
        }
    }

    // walk the components along the orientation
    let n = codes.len();
    let mut used = vec![[false; 4]; n];
    let mut components = Vec::new();
    for c in 0..n {
        for s in 0..4 {
            if o.dir[c][s] != Some(Dir::Out) || used[c][s] {
                continue;
            }
            let mut comp = Vec::new();
            let (mut cc, mut ss) = (c, s);
            while !used[cc][ss] {
                used[cc][ss] = true;
                let (c2, s2) = o.other_end(cc, ss);
                comp.push(Pass { crossing: c2, over: s2 % 2 == 1 });
                (cc, ss) = (c2, across(s2));
            }
            // start the pass list at the crossing the walk began from
            comp.rotate_right(1);
            components.push(comp);
        }
    }
    components.extend(loops.iter().map(|_| Vec::new()));
    let handedness = (0..n)
        .map(|c| if o.dir[c][3] == Some(Dir::In) { Handedness::Right } else { Handedness::Left })
        .collect();
    LinkDiagram::from_gauss(components, handedness)
}

pub(super) fn serialize(d: &LinkDiagram) -> String {
    let n = d.crossing_count();
    // [under in, under out, over in, over out]
    let mut labels = vec![[0usize; 4]; n];
    let mut loops = Vec::new();
    for (ci, comp) in d.gauss_code().iter().enumerate() {
        if comp.is_empty() {
            loops.push(d.segment_index(ci, 0) + 1);
            continue;
        }
        let len = comp.len();
        for (j, p) in comp.iter().enumerate() {
            let entering = d.segment_index(ci, j) + 1;
            let leaving = d.segment_index(ci, (j + 1) % len) + 1;
            let base = if p.over { 2 } else { 0 };
            labels[p.crossing][base] = entering;
            labels[p.crossing][base + 1] = leaving;
        }
    }
    let mut parts: Vec<String> = (0..n)
        .map(|c| {
            let [ui, uo, oi, oo] = labels[c];
            match d.handedness()[c] {
                Handedness::Right => format!("X[{},{},{},{}]", ui, oo, uo, oi),
                Handedness::Left => format!("X[{},{},{},{}]", ui, oi, uo, oo),
            }
        })
        .collect();
    parts.extend(loops.iter().map(|l| format!("Loop[{}]", l)));
    parts.join("; ")
}
