use super::{FiniteGroup, FiniteQuandle, QuandleError};

/// `i * j = i`.
pub fn make_trivial(n: usize) -> FiniteQuandle {
    FiniteQuandle::from_verified((0..n).map(|i| vec![i; n]).collect())
}

/// `i * j = 2j − i mod n`.
pub fn make_dihedral(n: usize) -> FiniteQuandle {
    FiniteQuandle::from_verified((0..n).map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect()).collect())
}

/// `Z_m ⊔ Z_n` (elements `0..m` then `m..m+n`): `a * b = a` inside one part,
/// otherwise `a + 1` modulo the size of `a`'s part.
pub fn make_eisermann(m: usize, n: usize) -> Result<FiniteQuandle, QuandleError> {
    if m == 0 || n == 0 {
        return Err(QuandleError::InvalidParameter(format!("eisermann needs m, n ≥ 1, got {m}, {n}")));
    }
    let part = |a: usize| if a < m { (0, m) } else { (m, n) };
    let table = (0..m + n)
        .map(|a| {
            (0..m + n)
                .map(|b| {
                    let (start, size) = part(a);
                    if part(b).0 == start {
                        a
                    } else {
                        start + (a - start + 1) % size
                    }
                })
                .collect()
        })
        .collect();
    Ok(FiniteQuandle::from_verified(table))
}

/// `x * y = y⁻ⁿ x yⁿ` on a conjugation-closed subset; quandle element `k` is
/// `subset[k]`.
pub fn make_conj(g: &FiniteGroup, subset: &[usize], n_fold: i64) -> Result<FiniteQuandle, QuandleError> {
    let index = |x: usize| subset.iter().position(|&s| s == x);
    for (k, &s) in subset.iter().enumerate() {
        if s >= g.order() {
            return Err(QuandleError::InvalidParameter(format!("element {s} is not in the group")));
        }
        if subset[..k].contains(&s) {
            return Err(QuandleError::InvalidParameter(format!("element {s} is repeated")));
        }
        if let Some(h) = (0..g.order()).find(|&h| index(g.conjugate(s, h)).is_none()) {
            return Err(QuandleError::SubsetNotClosed(format!(
                "{h}⁻¹·{s}·{h} = {} is missing",
                g.conjugate(s, h)
            )));
        }
    }
    let table = subset
        .iter()
        .map(|&x| subset.iter().map(|&y| index(g.conjugate(x, g.pow(y, n_fold))).unwrap()).collect())
        .collect();
    FiniteQuandle::new(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::verify_quandle;

    #[test]
    fn families_are_quandles() {
        for n in 1..=8 {
            assert!(verify_quandle(make_trivial(n).table()).is_empty());
            assert!(verify_quandle(make_dihedral(n).table()).is_empty());
        }
        for m in 1..=4 {
            for n in 1..=4 {
                assert!(verify_quandle(make_eisermann(m, n).unwrap().table()).is_empty());
            }
        }
        assert!(make_eisermann(0, 2).is_err());
    }

    #[test]
    fn examples() {
        assert_eq!(make_dihedral(3).op(1, 2), 0);
        let e = make_eisermann(2, 3).unwrap();
        assert_eq!(e.op(0, 2), 1);
        assert_eq!(e.op(1, 3), 0);
        assert_eq!(e.op(2, 0), 3);
        assert_eq!(e.op(4, 1), 2);
        assert_eq!(e.op(3, 4), 3);
    }

    #[test]
    fn conj_of_transpositions_is_dihedral_three() {
        let s3 = FiniteGroup::symmetric(3);
        let perms = FiniteGroup::permutations(3);
        let transpositions: Vec<usize> =
            (0..6).filter(|&i| perms[i].iter().enumerate().filter(|&(x, &y)| x != y).count() == 2).collect();
        let q = make_conj(&s3, &transpositions, 1).unwrap();
        assert!(q.isomorphic(&make_dihedral(3)));
        assert!(!q.isomorphic(&make_trivial(3)));
        // a single transposition is not conjugation closed
        assert!(matches!(make_conj(&s3, &transpositions[..1], 1), Err(QuandleError::SubsetNotClosed(_))));
        // the 2-fold conjugation quandle of S3 on all elements is trivial on transpositions
        let all: Vec<usize> = (0..6).collect();
        let q2 = make_conj(&s3, &all, 2).unwrap();
        assert!(transpositions.iter().all(|&x| transpositions.iter().all(|&y| q2.op(x, y) == x)));
    }
}
