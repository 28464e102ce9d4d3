use super::{FiniteGroup, FiniteQuandle, QuandleError};
use crate::presentations::{GroupPresentation, GroupWord};

/// Largest number of assignments the exhaustive hom counters will try.
pub const HOM_SEARCH_BOUND: f64 = 1e7;

fn check_bound(base: usize, exp: usize) -> Result<(), QuandleError> {
    let size = (base as f64).powi(exp as i32);
    if size > HOM_SEARCH_BOUND {
        return Err(QuandleError::SearchSpaceTooLarge { size, bound: HOM_SEARCH_BOUND });
    }
    Ok(())
}

/// Generators are the elements of `q` (named `q0`, `q1`, …) with relators
/// `adj(a*b)·adj(b)⁻¹·adj(a)⁻¹·adj(b)` for every ordered pair.
pub fn adjoint_presentation(q: &FiniteQuandle) -> GroupPresentation {
    let n = q.size();
    let mut relators = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            relators.push(GroupWord::new(vec![(q.op(a, b), 1), (b, -1), (a, -1), (b, 1)]));
        }
    }
    GroupPresentation { generator_names: (0..n).map(|i| format!("q{i}")).collect(), relators }
}

/// Number of maps `f: q → g` with `f(x * y) = f(y)⁻ⁿ f(x) f(y)ⁿ`.
pub fn count_quandle_homs(q: &FiniteQuandle, g: &FiniteGroup, n_fold: i64) -> Result<u64, QuandleError> {
    let n = q.size();
    check_bound(g.order(), n)?;
    let pw: Vec<usize> = (0..g.order()).map(|y| g.pow(y, n_fold)).collect();
    // assign elements in order; check every pair as soon as its three values are known
    fn rec(k: usize, f: &mut Vec<usize>, q: &FiniteQuandle, g: &FiniteGroup, pw: &[usize]) -> u64 {
        let n = q.size();
        if k == n {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.order() {
            f.push(v);
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    let xy = q.op(x, y);
                    (x != k && y != k && xy != k) || xy > k || f[xy] == g.conjugate(f[x], pw[f[y]])
                })
            });
            if ok {
                total += rec(k + 1, f, q, g, pw);
            }
            f.pop();
        }
        total
    }
    Ok(rec(0, &mut Vec::new(), q, g, &pw))
}

/// Number of assignments of the generators to `g` killing every relator.
pub fn count_group_homs(p: &GroupPresentation, g: &FiniteGroup) -> Result<u64, QuandleError> {
    let n = p.generator_count();
    check_bound(g.order(), n)?;
    let table: Vec<usize> = (0..g.order()).collect();
    let kills = |f: &[usize], r: &GroupWord| {
        let inv: Vec<usize> = f.iter().map(|&x| g.inv(x)).collect();
        r.evaluate(g.identity(), f, &inv, |a, b| g.mul(*a, *b)) == g.identity()
    };
    // relators grouped by the largest generator they mention
    let mut by_last: Vec<Vec<&GroupWord>> = vec![Vec::new(); n.max(1)];
    let mut free = Vec::new();
    for r in &p.relators {
        match r.letters().iter().map(|&(x, _)| x).max() {
            Some(m) => by_last[m].push(r),
            None => free.push(r),
        }
    }
    fn rec(k: usize, f: &mut Vec<usize>, table: &[usize], by_last: &[Vec<&GroupWord>], kills: &dyn Fn(&[usize], &GroupWord) -> bool, n: usize) -> u64 {
        if k == n {
            return 1;
        }
        let mut total = 0;
        for &v in table {
            f.push(v);
            if by_last[k].iter().all(|r| kills(f, r)) {
                total += rec(k + 1, f, table, by_last, kills, n);
            }
            f.pop();
        }
        total
    }
    Ok(rec(0, &mut Vec::new(), &table, &by_last, &kills, n))
}
