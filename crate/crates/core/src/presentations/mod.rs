//! Wirtinger group presentations and fundamental-quandle presentations of
//! diagrams, plus Tietze-style generator elimination.

mod eliminate;
mod words;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Handedness, LinkDiagram};

pub use eliminate::{eliminate_generators, Eliminate, GroupElimination, QuandleElimination};
pub use words::{GroupWord, QuandleOp, QuandleWord};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word `{0}`")]
    MalformedWord(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    pub generator_names: Vec<String>,
    pub relators: Vec<GroupWord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuandlePresentation {
    pub generator_names: Vec<String>,
    /// Pairs `(left, right)` meaning `left ∼ right`.
    pub relations: Vec<(QuandleWord, QuandleWord)>,
}

/// One generator per arc and one relator per crossing:
/// `(u+1)·o·u⁻¹·o⁻¹` at right-handed and `o·(u+1)·o⁻¹·u⁻¹` at left-handed
/// crossings, where `u` is the incoming and `u+1` the outgoing under arc.
pub fn wirtinger_presentation(d: &LinkDiagram) -> GroupPresentation {
    let relators = d
        .crossings()
        .iter()
        .map(|c| {
            let (u, u1, o) = (c.under_in, c.under_out, c.over);
            let letters = match c.handedness {
                Handedness::Right => vec![(u1, 1), (o, 1), (u, -1), (o, -1)],
                Handedness::Left => vec![(o, 1), (u1, 1), (o, -1), (u, -1)],
            };
            GroupWord::new(letters)
        })
        .collect();
    GroupPresentation { generator_names: d.arc_names().to_vec(), relators }
}

/// One generator per arc and one relation per crossing: `u * o = u+1` at
/// right-handed and `(u+1) * o = u` at left-handed crossings.
pub fn fundamental_quandle_presentation(d: &LinkDiagram) -> QuandlePresentation {
    let relations = d
        .crossings()
        .iter()
        .map(|c| {
            let (u, u1, o) = (QuandleWord::gen(c.under_in), QuandleWord::gen(c.under_out), QuandleWord::gen(c.over));
            match c.handedness {
                Handedness::Right => (QuandleWord::op(u, o), u1),
                Handedness::Left => (QuandleWord::op(u1, o), u),
            }
        })
        .collect();
    QuandlePresentation { generator_names: d.arc_names().to_vec(), relations }
}

impl GroupPresentation {
    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators.iter().map(|r| r.display(&self.generator_names)).collect()
    }

    /// Parses a word like `C a C^-1 A^-1` over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<GroupWord, PresentationError> {
        GroupWord::parse(text, &self.generator_names)
    }
}

impl QuandlePresentation {
    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    /// Relations in fully parenthesized infix form, e.g. `(a*(c*b)) = (a*c)`.
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|(l, r)| format!("{} = {}", l.display(&self.generator_names), r.display(&self.generator_names)))
            .collect()
    }
}

#[derive(Serialize)]
struct PresentationJson<'a> {
    generators: &'a [String],
    relations: Vec<String>,
}

impl Serialize for QuandlePresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PresentationJson { generators: &self.generator_names, relations: self.relation_strings() }.serialize(s)
    }
}

impl Serialize for GroupPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            generators: &'a [String],
            relators: Vec<String>,
        }
        Json { generators: &self.generator_names, relators: self.relator_strings() }.serialize(s)
    }
}

/// Rank of the abelianization: generator count minus the rank of the integer
/// matrix of relator exponent sums.
pub fn abelianization_rank(p: &GroupPresentation) -> usize {
    let n = p.generator_count();
    let mut rows: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i128; n];
            for &(g, e) in r.letters() {
                row[g] += e as i128;
            }
            row
        })
        .collect();
    n - integer_rank(&mut rows, n)
}

/// Rank by integer row reduction (Euclid on pivot columns).
fn integer_rank(rows: &mut [Vec<i128>], ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        loop {
            // smallest nonzero magnitude in this column below the pivot row
            let pivot = (rank..rows.len()).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].abs());
            let Some(pr) = pivot else { break };
            rows.swap(rank, pr);
            let mut done = true;
            for r in rank + 1..rows.len() {
                let q = rows[r][col] / rows[rank][col];
                if q != 0 {
                    for c in col..ncols {
                        rows[r][c] -= q * rows[rank][c];
                    }
                }
                if rows[r][col] != 0 {
                    done = false;
                }
            }
            if done {
                rank += 1;
                break;
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{builtin, Builtin};

    #[test]
    fn borromean_quandle_relations() {
        let p = fundamental_quandle_presentation(&builtin(Builtin::Borromean));
        assert_eq!(
            p.relation_strings(),
            vec!["(a*C) = A", "(b*A) = B", "(c*B) = C", "(a*c) = A", "(b*a) = B", "(c*b) = C"]
        );
    }

    #[test]
    fn borromean_wirtinger() {
        let g = wirtinger_presentation(&builtin(Builtin::Borromean));
        assert_eq!(g.generator_count(), 6);
        assert_eq!(g.relator_strings()[0], "A C a^-1 C^-1");
        assert_eq!(g.relator_strings()[3], "c a c^-1 A^-1");
    }

    #[test]
    fn unknot_and_hopf() {
        let u = builtin(Builtin::Unknot);
        assert_eq!(wirtinger_presentation(&u).relators.len(), 0);
        assert_eq!(fundamental_quandle_presentation(&u).generator_count(), 1);
        let h = fundamental_quandle_presentation(&builtin(Builtin::Hopf));
        assert_eq!((h.generator_count(), h.relations.len()), (2, 2));
    }

    #[test]
    fn ranks() {
        assert_eq!(abelianization_rank(&wirtinger_presentation(&builtin(Builtin::Borromean))), 3);
        assert_eq!(abelianization_rank(&wirtinger_presentation(&builtin(Builtin::Trefoil))), 1);
        let free = GroupPresentation { generator_names: vec!["x".into(), "y".into()], relators: vec![] };
        assert_eq!(abelianization_rank(&free), 2);
    }

    #[test]
    fn integer_rank_handles_non_unit_pivots() {
        let mut rows = vec![vec![2, 4], vec![3, 6], vec![0, 0]];
        assert_eq!(integer_rank(&mut rows, 2), 1);
        let mut rows = vec![vec![2, 3], vec![3, 5]];
        assert_eq!(integer_rank(&mut rows, 2), 2);
    }
}
