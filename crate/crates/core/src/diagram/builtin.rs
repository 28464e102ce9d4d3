use std::fmt;
use std::str::FromStr;

use super::{parse_pd, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Unknot,
    Trefoil,
    Hopf,
    Borromean,
    BorromeanMirror,
}

impl Builtin {
    pub const ALL: [Builtin; 5] =
        [Builtin::Unknot, Builtin::Trefoil, Builtin::Hopf, Builtin::Borromean, Builtin::BorromeanMirror];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Unknot => "unknot",
            Builtin::Trefoil => "trefoil",
            Builtin::Hopf => "hopf",
            Builtin::Borromean => "borromean",
            Builtin::BorromeanMirror => "borromean-mirror",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_alphanumeric()).collect::<String>().to_lowercase();
        match key.as_str() {
            "unknot" => Ok(Builtin::Unknot),
            "trefoil" => Ok(Builtin::Trefoil),
            "hopf" => Ok(Builtin::Hopf),
            "borromean" => Ok(Builtin::Borromean),
            "borromeanmirror" | "mirror" => Ok(Builtin::BorromeanMirror),
            _ => Err(format!("unknown builtin `{}` (expected unknot, trefoil, hopf, borromean, borromean-mirror)", s)),
        }
    }
}

/// Left-handed trefoil.
pub const TREFOIL_PD: &str = "X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]";

/// Hopf link with two left-handed crossings.
pub const HOPF_PD: &str = "X[4,1,3,2]; X[2,3,1,4]";

/// Borromean rings. The first three crossings are right-handed and the last
/// three left-handed; arcs in order of appearance are `a, C, A, b, B, c`,
/// with `a, A` on the first circle, `b, B` on the second and `c, C` on the third.
pub const BORROMEAN_PD: &str = "X[2,12,3,11]; X[6,4,7,3]; X[10,8,11,7]; X[4,9,1,10]; X[8,1,5,2]; X[12,5,9,6]";

/// The fixed built-in diagrams.
pub fn builtin(which: Builtin) -> LinkDiagram {
    let parse = |pd: &str| parse_pd(pd).expect("built-in PD code parses");
    match which {
        Builtin::Unknot => LinkDiagram::from_gauss(vec![Vec::new()], Vec::new()).unwrap().with_arc_names(["a"]),
        Builtin::Trefoil => parse(TREFOIL_PD).with_arc_names(["a", "b", "c"]),
        Builtin::Hopf => parse(HOPF_PD).with_arc_names(["a", "b"]),
        Builtin::Borromean => parse(BORROMEAN_PD).with_arc_names(["a", "C", "A", "b", "B", "c"]),
        Builtin::BorromeanMirror => builtin(Builtin::Borromean).mirror(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Handedness;

    #[test]
    fn shapes() {
        let b = builtin(Builtin::Borromean);
        assert_eq!((b.arc_count(), b.crossing_count(), b.component_count()), (6, 6, 3));
        let mut sizes = vec![0; 3];
        for &c in b.component_of_arc() {
            sizes[c] += 1;
        }
        assert_eq!(sizes, vec![2, 2, 2]);
        let h = builtin(Builtin::Hopf);
        assert_eq!((h.arc_count(), h.crossing_count(), h.component_count()), (2, 2, 2));
        let u = builtin(Builtin::Unknot);
        assert_eq!((u.arc_count(), u.crossing_count()), (1, 0));
    }

    #[test]
    fn borromean_crossings() {
        let b = builtin(Builtin::Borromean);
        let names = b.arc_names();
        let show: Vec<(String, String, String, Handedness)> = b
            .crossings()
            .iter()
            .map(|c| (names[c.under_in].clone(), names[c.over].clone(), names[c.under_out].clone(), c.handedness))
            .collect();
        use Handedness::{Left, Right};
        let s = |a: &str, o: &str, b: &str, h| (a.to_string(), o.to_string(), b.to_string(), h);
        assert_eq!(
            show,
            vec![
                s("a", "C", "A", Right),
                s("b", "A", "B", Right),
                s("c", "B", "C", Right),
                s("A", "c", "a", Left),
                s("B", "a", "b", Left),
                s("C", "b", "c", Left),
            ]
        );
    }

    #[test]
    fn borromean_is_planar() {
        // Euler characteristic of the diagram's 4-valent graph: V - E + F = 2
        // for each connected projection; faces traced from the PD rotation system.
        let codes = [[2, 12, 3, 11], [6, 4, 7, 3], [10, 8, 11, 7], [4, 9, 1, 10], [8, 1, 5, 2], [12, 5, 9, 6]];
        let other = |c: usize, s: usize| {
            let l = codes[c][s];
            (0..6)
                .flat_map(|c2| (0..4).map(move |s2| (c2, s2)))
                .find(|&(c2, s2)| (c2, s2) != (c, s) && codes[c2][s2] == l)
                .unwrap()
        };
        let mut seen = [[false; 4]; 6];
        let mut faces = 0;
        for c in 0..6 {
            for s in 0..4 {
                if seen[c][s] {
                    continue;
                }
                faces += 1;
                let (mut cc, mut ss) = (c, s);
                while !seen[cc][ss] {
                    seen[cc][ss] = true;
                    let (c2, s2) = other(cc, ss);
                    (cc, ss) = (c2, (s2 + 1) % 4);
                }
            }
        }
        assert_eq!(6 - 12 + faces, 2);
    }

    #[test]
    fn names_parse() {
        assert_eq!("Borromean-Mirror".parse::<Builtin>().unwrap(), Builtin::BorromeanMirror);
        assert!("figure8".parse::<Builtin>().is_err());
    }
}
