//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use quandlekit::diagram::LinkDiagram;
use quandlekit::quandle::{make_conj, make_dihedral, make_eisermann, make_trivial, verify_quandle, FiniteGroup, FiniteQuandle};
use quandlekit::Handedness;

/// Counts arc colorings by trying every assignment.
pub fn brute_force_colorings(d: &LinkDiagram, q: &FiniteQuandle) -> usize {
    let arcs = d.arc_count();
    let n = q.size();
    let total = n.pow(arcs as u32);
    (0..total)
        .filter(|&code| {
            let color = |a: usize| code / n.pow(a as u32) % n;
            d.crossings().iter().all(|c| match c.handedness {
                Handedness::Right => q.op(color(c.under_in), color(c.over)) == color(c.under_out),
                Handedness::Left => q.op(color(c.under_out), color(c.over)) == color(c.under_in),
            })
        })
        .count()
}

/// Every quandle table on `0..n` (labelled, not up to isomorphism).
pub fn all_quandle_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    // columns are permutations fixing their own index
    let perms: Vec<Vec<usize>> = FiniteGroup::permutations(n);
    let mut out = Vec::new();
    let mut cols: Vec<&Vec<usize>> = Vec::new();
    fn rec<'a>(n: usize, perms: &'a [Vec<usize>], cols: &mut Vec<&'a Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let j = cols.len();
        if j == n {
            let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|k| cols[k][i]).collect()).collect();
            if verify_quandle(&table).is_empty() {
                out.push(table);
            }
            return;
        }
        for p in perms.iter().filter(|p| p[j] == j) {
            cols.push(p);
            rec(n, perms, cols, out);
            cols.pop();
        }
    }
    rec(n, &perms, &mut cols, &mut out);
    out
}

/// Smallest relabelled table, a canonical form up to isomorphism.
pub fn canonical_table(t: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = t.len();
    FiniteGroup::permutations(n)
        .into_iter()
        .map(|p| {
            let mut r = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..n {
                    r[p[i]][p[j]] = p[t[i][j]];
                }
            }
            r
        })
        .min()
        .unwrap()
}

/// One quandle per isomorphism class of order `n`.
pub fn quandles_up_to_iso(n: usize) -> Vec<FiniteQuandle> {
    let mut seen: Vec<Vec<Vec<usize>>> = all_quandle_tables(n).iter().map(|t| canonical_table(t)).collect();
    seen.sort();
    seen.dedup();
    seen.into_iter().map(|t| FiniteQuandle::new(t).unwrap()).collect()
}

/// `x * y = t·x + (1 − t)·y` on `Z/n`; a quandle whenever `t` is a unit.
pub fn alexander(n: usize, t: usize) -> FiniteQuandle {
    let table = (0..n).map(|x| (0..n).map(|y| (t * x + (n + 1 - t % n) * y) % n).collect()).collect();
    FiniteQuandle::new(table).unwrap()
}

/// Quandles used for invariance checks: all classes of order ≤ 4 plus
/// standard families of orders 5 and 6.
pub fn small_quandles() -> Vec<(String, FiniteQuandle)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for (k, q) in quandles_up_to_iso(n).into_iter().enumerate() {
            out.push((format!("order{n}#{k}"), q));
        }
    }
    for k in [1, 2, 3, 5, 6] {
        out.push((format!("trivial:{k}"), make_trivial(k)));
    }
    for t in 2..=3 {
        out.push((format!("alexander:5,{t}"), alexander(5, t)));
    }
    for n in 3..=6 {
        out.push((format!("dihedral:{n}"), make_dihedral(n)));
    }
    out.push(("eisermann:2,3".into(), make_eisermann(2, 3).unwrap()));
    out.push(("eisermann:3,3".into(), make_eisermann(3, 3).unwrap()));
    let s3 = FiniteGroup::symmetric(3);
    out.push(("conj:S3".into(), make_conj(&s3, &(0..6).collect::<Vec<_>>(), 1).unwrap()));
    out.push(("conj2:S3".into(), make_conj(&s3, &(0..6).collect::<Vec<_>>(), 2).unwrap()));
    out
}

pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z2", FiniteGroup::cyclic(2)),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("S3", FiniteGroup::symmetric(3)),
    ]
}

/// Rank of an integer matrix from its Smith normal form.
pub fn smith_rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        // pivot: smallest nonzero entry in the remaining block
        let Some((pi, pj)) = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(k, pi);
        for r in m.iter_mut() {
            r.swap(k, pj);
        }
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                let q = m[i][k] / m[k][k];
                for j in k..cols {
                    m[i][j] -= q * m[k][j];
                }
                if m[i][k] != 0 {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                let q = m[k][j] / m[k][k];
                for i in k..rows {
                    m[i][j] -= q * m[i][k];
                }
                if m[k][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move a smaller remainder into the pivot position
            let (pi, pj) = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| (i == k || j == k) && m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
                .unwrap();
            m.swap(k, pi);
            for r in m.iter_mut() {
                r.swap(k, pj);
            }
        }
        rank += 1;
    }
    rank
}
