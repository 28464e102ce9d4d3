mod common;

use common::{all_quandle_tables, brute_force_colorings, quandles_up_to_iso, small_groups, small_quandles};
use proptest::prelude::*;
use quandlekit::diagram::{builtin, Builtin};
use quandlekit::presentations::{eliminate_generators, fundamental_quandle_presentation};
use quandlekit::quandle::{
    adjoint_presentation, count_group_homs, count_quandle_homs, diagram_colorings, enumerate_colorings, make_conj,
    make_dihedral, make_eisermann, make_trivial, verify_quandle, FiniteGroup, FiniteQuandle,
};

#[test]
fn quandle_counts_by_order() {
    let counts: Vec<usize> = (1..=4).map(|n| quandles_up_to_iso(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 7]);
    assert_eq!(all_quandle_tables(3).len(), 5);
}

#[test]
fn constructed_quandles_pass_axioms() {
    for (name, q) in small_quandles() {
        assert!(verify_quandle(q.table()).is_empty(), "{name}");
    }
}

#[test]
fn colorings_match_brute_force() {
    for b in Builtin::ALL {
        let d = builtin(b);
        for (name, q) in small_quandles().into_iter().filter(|(_, q)| q.size() <= 4) {
            assert_eq!(diagram_colorings(&d, &q).len(), brute_force_colorings(&d, &q), "{b} {name}");
        }
    }
}

#[test]
fn trefoil_and_borromean_dihedral_counts() {
    let d3 = make_dihedral(3);
    assert_eq!(brute_force_colorings(&builtin(Builtin::Trefoil), &d3), 9);
    assert_eq!(brute_force_colorings(&builtin(Builtin::Borromean), &d3), 3);
    let borromean = diagram_colorings(&builtin(Builtin::Borromean), &d3);
    assert!(borromean.iter().all(|c| c.is_constant()));
}

#[test]
fn simplified_presentation_preserves_colorings() {
    for b in Builtin::ALL {
        let p = fundamental_quandle_presentation(&builtin(b));
        let s = eliminate_generators(&p);
        for (name, q) in small_quandles() {
            assert_eq!(enumerate_colorings(&p, &q).len(), enumerate_colorings(&s, &q).len(), "{b} {name}");
        }
    }
}

#[test]
fn hom_count_identity() {
    let mut qs: Vec<FiniteQuandle> = Vec::new();
    for n in 1..=4 {
        qs.extend(quandles_up_to_iso(n));
    }
    for q in &qs {
        let adj = adjoint_presentation(q);
        for (gname, g) in small_groups() {
            let lhs = count_quandle_homs(q, &g, 1).unwrap();
            let rhs = count_group_homs(&adj, &g).unwrap();
            assert_eq!(lhs, rhs, "{:?} into {gname}", q.table());
        }
    }
}

#[test]
fn inner_automorphism_composition() {
    // c *⁻¹ (a * b) = ((c *⁻¹ b) *⁻¹ a) * b
    let mut qs: Vec<FiniteQuandle> = small_quandles().into_iter().map(|(_, q)| q).collect();
    qs.extend(quandles_up_to_iso(4));
    for q in qs {
        let n = q.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(q.op_inv(c, q.op(a, b)), q.act_right(c, &[(b, -1), (a, -1), (b, 1)]));
                }
            }
        }
    }
}

#[test]
fn conj_families() {
    let s3 = FiniteGroup::symmetric(3);
    let perms = FiniteGroup::permutations(3);
    let transpositions: Vec<usize> =
        (0..6).filter(|&i| perms[i].iter().enumerate().filter(|&(x, &y)| x != y).count() == 2).collect();
    assert!(make_conj(&s3, &transpositions, 1).unwrap().isomorphic(&make_dihedral(3)));
    // conjugation in an abelian group is trivial
    let z4 = FiniteGroup::cyclic(4);
    assert!(make_conj(&z4, &[0, 1, 2, 3], 1).unwrap().isomorphic(&make_trivial(4)));
    assert_eq!(make_eisermann(2, 3).unwrap().size(), 5);
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..n, prop_oneof![Just(1i64), Just(-1i64), Just(2i64)]), 0..6)
}

proptest! {
    #[test]
    fn act_right_is_an_action(n in 3usize..8, x in 0usize..8, w1 in word_strategy(3), w2 in word_strategy(3)) {
        let q = make_dihedral(n);
        let x = x % n;
        let mut w = w1.clone();
        w.extend(w2.iter().copied());
        prop_assert_eq!(q.act_right(x, &w), q.act_right(q.act_right(x, &w1), &w2));
    }

    #[test]
    fn eisermann_axioms(m in 1usize..6, n in 1usize..6) {
        prop_assert!(verify_quandle(make_eisermann(m, n).unwrap().table()).is_empty());
    }

    #[test]
    fn hom_identity_for_dihedral_and_eisermann(n in 1usize..6, m in 1usize..3, k in 1usize..3) {
        let s3 = FiniteGroup::symmetric(3);
        for q in [make_dihedral(n), make_eisermann(m, k).unwrap()] {
            prop_assert_eq!(
                count_quandle_homs(&q, &s3, 1).unwrap(),
                count_group_homs(&adjoint_presentation(&q), &s3).unwrap()
            );
        }
    }
}
