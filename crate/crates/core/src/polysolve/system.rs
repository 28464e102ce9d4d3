use num::complex::Complex64;
use num::{One, Zero};
use serde::Serialize;

use super::SolveError;
use crate::parabolic::{par_op, par_op_inv, ParabolicElement};
use crate::poly::MultiPoly;
use crate::presentations::QuandlePresentation;

/// Which generator is pinned to what, e.g. `b ↦ [0, t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaugeEntry {
    pub generator: String,
    pub value: String,
}

/// The coordinate equations of one sign branch.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    /// Variable names; `t` is always variable 0.
    pub variables: Vec<String>,
    /// Two equations per relation, in relation order; some may vanish identically.
    pub polynomials: Vec<MultiPoly>,
    /// `σ` per relation: the relation is read as `L = σ·R` on representatives.
    pub sign_branch: Vec<i8>,
    pub gauge: Vec<GaugeEntry>,
    /// `order[k]` is the generator in gauge slot `k`.
    order: Vec<usize>,
}

impl ConstraintSystem {
    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    /// Representatives of the generators (in presentation order) at a point.
    pub fn assign(&self, point: &[Complex64]) -> Vec<ParabolicElement<Complex64>> {
        gauge_values(&self.order, |i| point[i], Complex64::zero(), Complex64::one())
    }

    #[cfg(test)]
    pub(crate) fn for_tests(variables: Vec<String>, polynomials: Vec<MultiPoly>) -> Self {
        let n = polynomials.len();
        ConstraintSystem { variables, polynomials, sign_branch: vec![1; n], gauge: Vec::new(), order: vec![0, 1] }
    }

    pub fn display_polynomials(&self) -> Vec<String> {
        let names: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        self.polynomials.iter().map(|p| p.display(&names)).collect()
    }
}

/// Generator values in the gauge `[1, 0]`, `[0, v₀]`, `[v₁, v₂]`, `[v₃, v₄]`, ….
fn gauge_values<T: Clone>(order: &[usize], var: impl Fn(usize) -> T, zero: T, one: T) -> Vec<ParabolicElement<T>> {
    let mut out: Vec<Option<ParabolicElement<T>>> = vec![None; order.len()];
    for (slot, &g) in order.iter().enumerate() {
        out[g] = Some(match slot {
            0 => ParabolicElement::new(one.clone(), zero.clone()),
            1 => ParabolicElement::new(zero.clone(), var(0)),
            k => ParabolicElement::new(var(2 * k - 3), var(2 * k - 2)),
        });
    }
    out.into_iter().map(Option::unwrap).collect()
}

fn variable_names(n_gens: usize) -> Vec<String> {
    let mut names = vec!["t".to_string()];
    match n_gens {
        0..=2 => {}
        3 => names.extend(["x".to_string(), "y".to_string()]),
        _ => {
            for k in 2..n_gens {
                names.push(format!("x{k}"));
                names.push(format!("y{k}"));
            }
        }
    }
    names
}

/// Gauge order with `first ↦ [1, 0]`, `second ↦ [0, t]`, the rest in order.
pub(crate) fn gauge_order(n: usize, pair: Option<(usize, usize)>) -> Vec<usize> {
    let (f, s) = pair.unwrap_or((0, 1));
    let mut order = vec![f, s];
    order.extend((0..n).filter(|&g| g != f && g != s));
    order
}

/// One system per sign vector, the all-plus branch first; bit `j` of the
/// branch index set means `σ_j = −1`.
pub fn build_systems(p: &QuandlePresentation) -> Result<Vec<ConstraintSystem>, SolveError> {
    build_systems_gauged(p, None)
}

/// As [`build_systems`], choosing which generators receive `[1, 0]` and `[0, t]`.
pub fn build_systems_gauged(
    p: &QuandlePresentation,
    gauge: Option<(usize, usize)>,
) -> Result<Vec<ConstraintSystem>, SolveError> {
    let n = p.generator_count();
    if n < 2 {
        return Err(SolveError::TooFewGenerators(n));
    }
    if let Some((f, s)) = gauge {
        if f == s || f >= n || s >= n {
            return Err(SolveError::InvalidGauge(f, s));
        }
    }
    let order = gauge_order(n, gauge);
    let variables = variable_names(n);
    let values = gauge_values(&order, MultiPoly::var, MultiPoly::zero(), MultiPoly::one());
    // the presentation's `*` acts as left conjugation on matrices, which is the inverse Par operation
    let op = |a: &ParabolicElement<MultiPoly>, b: &ParabolicElement<MultiPoly>| par_op_inv(a, b);
    let op_inv = |a: &ParabolicElement<MultiPoly>, b: &ParabolicElement<MultiPoly>| par_op(a, b);
    let sides: Vec<_> =
        p.relations.iter().map(|(l, r)| (l.evaluate(&values, &op, &op_inv), r.evaluate(&values, &op, &op_inv))).collect();
    let gauge_entries = order
        .iter()
        .enumerate()
        .map(|(slot, &g)| GaugeEntry {
            generator: p.generator_names[g].clone(),
            value: match slot {
                0 => "[1, 0]".to_string(),
                1 => "[0, t]".to_string(),
                k => format!("[{}, {}]", variables[2 * k - 3], variables[2 * k - 2]),
            },
        })
        .collect::<Vec<_>>();
    let k = sides.len();
    if k >= usize::BITS as usize - 1 {
        return Err(SolveError::TooManyBranches { branches: usize::MAX, max: usize::MAX });
    }
    let systems = (0..1usize << k)
        .map(|b| {
            let sign_branch: Vec<i8> = (0..k).map(|j| if b >> j & 1 == 1 { -1 } else { 1 }).collect();
            let polynomials = sides
                .iter()
                .zip(&sign_branch)
                .flat_map(|((l, r), &s)| {
                    let (rx, ry) = if s > 0 { (r.x.clone(), r.y.clone()) } else { (-r.x.clone(), -r.y.clone()) };
                    [l.x.clone() - rx, l.y.clone() - ry]
                })
                .collect();
            ConstraintSystem {
                variables: variables.clone(),
                polynomials,
                sign_branch,
                gauge: gauge_entries.clone(),
                order: order.clone(),
            }
        })
        .collect();
    Ok(systems)
}
