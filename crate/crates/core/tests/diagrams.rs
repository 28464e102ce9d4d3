mod common;

use common::{small_quandles, smith_rank};
use proptest::prelude::*;
use quandlekit::diagram::{applicable_moves, apply_reidemeister, builtin, parse_pd, Builtin, DiagramError, LinkDiagram, MoveKind};
use quandlekit::presentations::{abelianization_rank, wirtinger_presentation};
use quandlekit::quandle::diagram_colorings;

const ALL_KINDS: [MoveKind; 5] = [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];

#[test]
fn pd_round_trip() {
    for b in Builtin::ALL {
        let d = builtin(b);
        let again = parse_pd(&d.to_pd()).unwrap();
        assert_eq!(again, d, "{b}");
        assert_eq!(again.to_pd(), d.to_pd());
    }
    assert_eq!(builtin(Builtin::Trefoil).to_pd(), "X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]");
}

#[test]
fn malformed_pd_names_the_token() {
    match parse_pd("X[1,2,3]") {
        Err(DiagramError::MalformedCode { token, .. }) => assert!(token.contains("X[1,2,3]")),
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_pd("X[1,2,3,4]").is_err());
    assert!(matches!(parse_pd(""), Err(DiagramError::EmptyDiagram)));
}

#[test]
fn component_and_arc_counts() {
    let counts: Vec<(usize, usize, usize)> = Builtin::ALL
        .iter()
        .map(|&b| {
            let d = builtin(b);
            (d.component_count(), d.arc_count(), d.crossing_count())
        })
        .collect();
    assert_eq!(counts, vec![(1, 1, 0), (1, 3, 3), (2, 2, 2), (3, 6, 6), (3, 6, 6)]);
}

fn exponent_matrix(d: &LinkDiagram) -> Vec<Vec<i64>> {
    let g = wirtinger_presentation(d);
    g.relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; g.generator_count()];
            for &(x, e) in r.letters() {
                row[x] += e as i64;
            }
            row
        })
        .collect()
}

#[test]
fn abelianization_rank_equals_component_count() {
    for b in Builtin::ALL {
        let d = builtin(b);
        let g = wirtinger_presentation(&d);
        let oracle = g.generator_count() - smith_rank(exponent_matrix(&d));
        assert_eq!(abelianization_rank(&g), oracle, "{b}");
        assert_eq!(oracle, d.component_count(), "{b}");
    }
}

#[test]
fn coloring_counts_are_reidemeister_invariant() {
    let quandles = small_quandles();
    for b in Builtin::ALL {
        let d = builtin(b);
        let before: Vec<usize> = quandles.iter().map(|(_, q)| diagram_colorings(&d, q).len()).collect();
        let moves = applicable_moves(&d, &ALL_KINDS);
        assert!(!moves.is_empty());
        for mv in moves {
            let e = apply_reidemeister(&d, mv).unwrap();
            for ((name, q), &n) in quandles.iter().zip(&before) {
                assert_eq!(diagram_colorings(&e, q).len(), n, "{b} {mv:?} {name}");
            }
        }
    }
}

#[test]
fn every_move_kind_occurs_somewhere() {
    let mut seen = std::collections::HashSet::new();
    for b in Builtin::ALL {
        let d = builtin(b);
        for mv in applicable_moves(&d, &ALL_KINDS) {
            seen.insert(mv.kind());
            // removals and triangles appear once crossings are added
            if matches!(mv.kind(), MoveKind::R1Add | MoveKind::R2Add) {
                let e = apply_reidemeister(&d, mv).unwrap();
                for back in applicable_moves(&e, &[MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3]) {
                    seen.insert(back.kind());
                }
            }
        }
    }
    assert_eq!(seen.len(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_move_sequences_keep_counts(which in 0usize..5, picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let quandles: Vec<_> = small_quandles().into_iter().filter(|(n, _)| n.starts_with("dihedral") || n.starts_with("order3")).collect();
        let start = builtin(Builtin::ALL[which]);
        let counts = |d: &LinkDiagram| quandles.iter().map(|(_, q)| diagram_colorings(d, q).len()).collect::<Vec<_>>();
        let expected = counts(&start);
        let mut d = start;
        for p in picks {
            let moves = applicable_moves(&d, &ALL_KINDS);
            if moves.is_empty() || d.crossing_count() > 10 {
                break;
            }
            d = apply_reidemeister(&d, moves[p.index(moves.len())]).unwrap();
            prop_assert_eq!(parse_pd(&d.to_pd()).unwrap(), d.clone());
        }
        prop_assert_eq!(counts(&d), expected);
    }
}
