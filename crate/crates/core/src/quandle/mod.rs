//! Finite quandles given by operation tables, the standard families,
//! colorings of presentations, adjoint groups and hom counting.

mod adjoint;
mod coloring;
mod families;
mod group;

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

pub use adjoint::{adjoint_presentation, count_group_homs, count_quandle_homs, HOM_SEARCH_BOUND};
pub use coloring::{diagram_colorings, enumerate_colorings, is_tricolorable, Colorable, Coloring};
pub use families::{make_conj, make_dihedral, make_eisermann, make_trivial};
pub use group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum QuandleError {
    #[error("table is not a quandle: {0:?}")]
    NotAQuandle(Vec<Violation>),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("subset is not closed under conjugation: {0}")]
    SubsetNotClosed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search space of {size} assignments exceeds the bound {bound}")]
    SearchSpaceTooLarge { size: f64, bound: f64 },
}

/// A failed quandle axiom with the indices witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `table[i][j]` lies outside `0..n`, or a row has the wrong length.
    OutOfRange { i: usize, j: usize },
    /// `i * i ≠ i`.
    Idempotence { i: usize },
    /// Rows `i1` and `i2` share their entry in column `j`.
    RightInvertibility { j: usize, i1: usize, i2: usize },
    /// `(i * j) * k ≠ (i * k) * (j * k)`.
    SelfDistributivity { i: usize, j: usize, k: usize },
}

/// Lists every axiom violation of an operation table, empty for a quandle.
pub fn verify_quandle(table: &[Vec<usize>]) -> Vec<Violation> {
    let n = table.len();
    let mut out = Vec::new();
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            out.push(Violation::OutOfRange { i, j: row.len() });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                out.push(Violation::OutOfRange { i, j });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 0..n {
        if table[i][i] != i {
            out.push(Violation::Idempotence { i });
        }
    }
    for j in 0..n {
        let mut first = vec![usize::MAX; n];
        for i in 0..n {
            let v = table[i][j];
            if first[v] == usize::MAX {
                first[v] = i;
            } else {
                out.push(Violation::RightInvertibility { j, i1: first[v], i2: i });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[table[i][k]][table[j][k]] {
                    out.push(Violation::SelfDistributivity { i, j, k });
                }
            }
        }
    }
    out
}

/// A quandle on `0..n` with `table[i][j] = i * j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteQuandle {
    table: Vec<Vec<usize>>,
    #[serde(skip)]
    inverse: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let v = verify_quandle(&table);
        if !v.is_empty() {
            return Err(QuandleError::NotAQuandle(v));
        }
        Ok(Self::from_verified(table))
    }

    pub(crate) fn from_verified(table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let mut inverse = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                inverse[table[i][j]][j] = i;
            }
        }
        FiniteQuandle { table, inverse }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// The unique `k` with `k * j = i`.
    pub fn op_inv(&self, i: usize, j: usize) -> usize {
        self.inverse[i][j]
    }

    /// The right translation `β_y: x ↦ x * y` as a permutation.
    pub fn beta(&self, y: usize) -> Vec<usize> {
        (0..self.size()).map(|x| self.table[x][y]).collect()
    }

    /// Folds `x *^{e₁} y₁ *^{e₂} y₂ …` left to right; exponents may exceed 1 in size.
    pub fn act_right(&self, x: usize, word: &[(usize, i64)]) -> usize {
        word.iter().fold(x, |acc, &(y, e)| {
            (0..e.unsigned_abs()).fold(acc, |a, _| if e > 0 { self.op(a, y) } else { self.op_inv(a, y) })
        })
    }

    /// The group generated by the right translations.
    pub fn inner_group(&self) -> InnerGroup {
        let n = self.size();
        let gens: Vec<Vec<usize>> = (0..n).map(|y| self.beta(y)).collect();
        let id: Vec<usize> = (0..n).collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        InnerGroup { elements: seen.into_iter().collect() }
    }

    /// Whether `phi` is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &FiniteQuandle, phi: &[usize]) -> bool {
        let n = self.size();
        if other.size() != n || phi.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in phi {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        (0..n).all(|i| (0..n).all(|j| phi[self.op(i, j)] == other.op(phi[i], phi[j])))
    }

    /// Searches all bijections for an isomorphism; meant for small quandles.
    pub fn isomorphic(&self, other: &FiniteQuandle) -> bool {
        fn extend(a: &FiniteQuandle, b: &FiniteQuandle, phi: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let k = phi.len();
            if k == a.size() {
                return true;
            }
            for v in 0..b.size() {
                if used[v] {
                    continue;
                }
                phi.push(v);
                used[v] = true;
                let ok = (0..=k).all(|i| {
                    (0..=k).all(|j| {
                        let ij = a.op(i, j);
                        ij > k || phi[ij] == b.op(phi[i], phi[j])
                    })
                });
                if ok && extend(a, b, phi, used) {
                    return true;
                }
                phi.pop();
                used[v] = false;
            }
            false
        }
        self.size() == other.size() && extend(self, other, &mut Vec::new(), &mut vec![false; other.size()])
    }
}

/// A permutation group given by its elements, sorted, identity first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerGroup {
    pub elements: Vec<Vec<usize>>,
}

impl InnerGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn inner_group(q: &FiniteQuandle) -> InnerGroup {
    q.inner_group()
}

pub fn act_right(x: usize, word: &[(usize, i64)], q: &FiniteQuandle) -> usize {
    q.act_right(x, word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_reports_each_axiom() {
        assert!(verify_quandle(make_trivial(3).table()).is_empty());
        assert!(verify_quandle(make_dihedral(3).table()).is_empty());
        let mut t = make_trivial(2).table().to_vec();
        t[0][0] = 1;
        let v = verify_quandle(&t);
        assert!(v.contains(&Violation::Idempotence { i: 0 }));
        assert!(v.iter().any(|x| matches!(x, Violation::RightInvertibility { j: 0, .. })));
        assert_eq!(verify_quandle(&[vec![3]]), vec![Violation::OutOfRange { i: 0, j: 0 }]);
        let bad = vec![vec![0, 2, 1], vec![1, 1, 1], vec![2, 0, 2]];
        assert!(FiniteQuandle::new(bad).is_err());
    }

    #[test]
    fn inner_groups() {
        assert_eq!(make_trivial(4).inner_group().order(), 1);
        // three reflections of a triangle generate all of S3
        assert_eq!(make_dihedral(3).inner_group().order(), 6);
        assert_eq!(make_dihedral(4).inner_group().order(), 4);
    }

    #[test]
    fn act_right_examples() {
        let d5 = make_dihedral(5);
        assert_eq!(d5.act_right(0, &[(1, 1), (2, 1)]), 2);
        assert_eq!(d5.act_right(3, &[]), 3);
        assert_eq!(d5.act_right(3, &[(4, 1), (4, -1)]), 3);
        assert_eq!(d5.act_right(3, &[(4, 2)]), 3);
    }

    #[test]
    fn op_inv_inverts_columns() {
        let q = make_eisermann(2, 3).unwrap();
        for i in 0..q.size() {
            for j in 0..q.size() {
                assert_eq!(q.op_inv(q.op(i, j), j), i);
            }
        }
    }
}
