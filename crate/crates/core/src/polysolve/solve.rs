//! Solving one branch system.
//!
//! The solver first looks for constraints on `t` alone: univariate equations
//! and, when the remaining unknowns appear linearly and homogeneously, the
//! maximal minors of that linear system (a nonzero solution needs them all to
//! vanish). The squarefree part of their gcd, with the root `t = 0` removed,
//! is solved by Aberth iteration. For each root the kernel of the linear
//! system fixes the remaining unknowns up to a scale `λ`, which solves a
//! univariate equation of its own. Every candidate is refined by Gauss–Newton
//! on the full system. Systems without this structure fall back to seeded
//! multistart Newton.

use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{ConstraintSystem, SolveError, SolveOptions};
use crate::parabolic::complex_pair;
use crate::poly::{MultiPoly, UniPoly};
use crate::roots::aberth;

/// A refined solution of one branch.
#[derive(Clone, Debug, PartialEq)]
pub struct RawSolution {
    pub branch: Vec<i8>,
    pub values: Vec<Complex64>,
    /// Largest relative residual over the branch equations.
    pub residual: f64,
}

impl Serialize for RawSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RawSolution", 3)?;
        st.serialize_field("branch", &self.branch)?;
        st.serialize_field("values", &self.values.iter().map(|z| complex_pair(*z)).collect::<Vec<_>>())?;
        st.serialize_field("residual", &self.residual)?;
        st.end()
    }
}

/// Candidates whose residual stays above this after refinement are not solutions.
const REJECT_RESIDUAL: f64 = 1e-6;
/// `|t|` below this is the excluded zero vector `[0, t]`.
const ZERO_T: f64 = 1e-8;
/// Generator vectors shorter than this (relative to the point) count as zero.
/// Newton only reaches such singular points to about the square root of the
/// residual tolerance, so the bound is loose.
const ZERO_VECTOR: f64 = 1e-6;

/// Whether `t` or some `[xᵢ, yᵢ]` vanishes at the point.
fn has_zero_vector(z: &[Complex64]) -> bool {
    let scale = norm(z).max(1.0) * ZERO_VECTOR;
    z[0].norm() <= scale || z[1..].chunks(2).any(|p| p.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt() <= scale)
}

struct Numeric<'a> {
    polys: Vec<&'a MultiPoly>,
    jac: Vec<Vec<MultiPoly>>,
}

impl<'a> Numeric<'a> {
    fn new(polys: Vec<&'a MultiPoly>, n: usize) -> Self {
        let jac = polys.iter().map(|p| (0..n).map(|j| p.derivative(j)).collect()).collect();
        Numeric { polys, jac }
    }

    fn residual(&self, z: &[Complex64]) -> f64 {
        self.polys.iter().map(|p| p.eval(z).norm() / p.eval_abs(z).max(1.0)).fold(0.0, f64::max)
    }

    fn values(&self, z: &[Complex64]) -> DVector<Complex64> {
        DVector::from_iterator(self.polys.len(), self.polys.iter().map(|p| p.eval(z)))
    }

    fn jacobian(&self, z: &[Complex64], free: &[usize]) -> DMatrix<Complex64> {
        // pad to at least square so the SVD exposes the whole kernel
        let rows = self.polys.len().max(free.len());
        DMatrix::from_fn(rows, free.len(), |i, j| if i < self.polys.len() { self.jac[i][free[j]].eval(z) } else { Complex64::zero() })
    }

    /// Damped Gauss–Newton in the `free` coordinates.
    fn refine(&self, z0: &[Complex64], free: &[usize], tol: f64) -> (Vec<Complex64>, f64) {
        let mut z = z0.to_vec();
        let mut fnorm = self.values(&z).norm();
        for _ in 0..80 {
            if !fnorm.is_finite() || self.residual(&z) <= tol * 1e-2 {
                break;
            }
            let mut f = self.values(&z);
            f.resize_vertically_mut(self.polys.len().max(free.len()), Complex64::zero());
            let svd = self.jacobian(&z, free).svd(true, true);
            let Ok(step) = svd.solve(&(-f), 1e-14) else { break };
            let mut alpha = 1.0;
            let mut improved = false;
            for _ in 0..30 {
                let mut trial = z.clone();
                for (k, &j) in free.iter().enumerate() {
                    trial[j] += step[k] * alpha;
                }
                let tn = self.values(&trial).norm();
                if tn < fnorm || tn == 0.0 {
                    z = trial;
                    fnorm = tn;
                    improved = true;
                    break;
                }
                alpha *= 0.5;
            }
            if !improved || step.norm() * alpha <= 1e-16 * (1.0 + norm(&z)) {
                break;
            }
        }
        let r = self.residual(&z);
        (z, r)
    }

    fn rank(&self, z: &[Complex64], free: &[usize]) -> usize {
        let sv = self.jacobian(z, free).singular_values();
        let smax = sv.iter().cloned().fold(0.0, f64::max);
        sv.iter().filter(|&&s| s > 1e-7 * smax.max(1e-300)).count().min(free.len())
    }
}

fn norm(z: &[Complex64]) -> f64 {
    z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    let scale = norm(a).max(norm(b)).max(1.0);
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt() <= tol * scale
}

/// Determinant by cofactor expansion; matrices here are tiny.
fn det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    match m.len() {
        0 => MultiPoly::constant(crate::parabolic::gauss(1, 0)),
        1 => m[0][0].clone(),
        n => {
            let mut acc = MultiPoly::default();
            for j in 0..n {
                let minor: Vec<Vec<MultiPoly>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect()).collect();
                let term = m[0][j].clone() * det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd_opt(acc: Option<UniPoly>, p: UniPoly) -> Option<UniPoly> {
    Some(match acc {
        None => p.monic(),
        Some(a) => a.gcd(&p),
    })
}

/// Coefficients of `λ ↦ F(t₀, λ·k)`, recovered from samples on the unit circle.
fn lambda_poly(p: &MultiPoly, base: &[Complex64], dir: &[(usize, Complex64)], degree: usize) -> (Vec<Complex64>, f64) {
    let n = degree + 1;
    let mut samples = Vec::with_capacity(n);
    let mut scale: f64 = 0.0;
    for j in 0..n {
        let w = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / n as f64);
        let mut z = base.to_vec();
        for &(v, c) in dir {
            z[v] = c * w;
        }
        samples.push(p.eval(&z));
        scale = scale.max(p.eval_abs(&z));
    }
    let coeffs = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| samples[j] * Complex64::from_polar(1.0, -std::f64::consts::TAU * (j * k) as f64 / n as f64))
                .sum::<Complex64>()
                / n as f64
        })
        .collect();
    (coeffs, scale.max(1.0))
}

fn total_degree(p: &MultiPoly, vars: &[usize]) -> usize {
    p.terms().map(|(m, _)| vars.iter().map(|&v| m.get(v).copied().unwrap_or(0) as usize).sum::<usize>()).max().unwrap_or(0)
}

enum Outcome {
    Points(Vec<Vec<Complex64>>),
    Fallback,
}

/// Candidate points from the linear-elimination route.
fn eliminate(polys: &[&MultiPoly], n: usize, opts: &SolveOptions) -> Result<Outcome, ()> {
    let others: Vec<usize> = (1..n).collect();
    let mut constraint: Option<UniPoly> = None;
    let mut linear: Vec<Vec<MultiPoly>> = Vec::new();
    for p in polys {
        if let Some(u) = p.to_univariate(0) {
            constraint = gcd_opt(constraint, u);
        } else if !others.is_empty() {
            if let Some(form) = p.as_linear_form(&others) {
                if form.iter().all(|c| c.variables().iter().all(|&v| v == 0)) {
                    linear.push(form);
                }
            }
        }
    }
    let m = others.len();
    if m > 0 && linear.len() >= m {
        for rows in subsets(linear.len(), m) {
            let sub: Vec<Vec<MultiPoly>> = rows.iter().map(|&r| linear[r].clone()).collect();
            if let Some(u) = det(&sub).to_univariate(0) {
                constraint = gcd_opt(constraint, u);
            }
        }
    }
    let Some(constraint) = constraint else { return Ok(Outcome::Fallback) };
    if constraint.is_zero() {
        return Ok(Outcome::Fallback);
    }
    let reduced = constraint.saturate_at_zero().squarefree();
    if reduced.degree().unwrap_or(0) == 0 {
        return Ok(Outcome::Points(Vec::new()));
    }
    let roots = aberth(&reduced.to_f64(), opts.aberth);
    if m == 0 {
        return Ok(Outcome::Points(roots.into_iter().map(|t| vec![t]).collect()));
    }
    if linear.is_empty() {
        return Ok(Outcome::Fallback);
    }
    let mut points = Vec::new();
    for t in roots {
        let mut base = vec![Complex64::zero(); n];
        base[0] = t;
        let a = DMatrix::from_fn(linear.len().max(m), m, |i, j| {
            if i < linear.len() {
                linear[i][j].eval(&base)
            } else {
                Complex64::zero()
            }
        });
        let svd = a.svd(false, true);
        let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let vt = svd.v_t.as_ref().expect("requested V");
        let kernel: Vec<Vec<Complex64>> = (0..svd.singular_values.len())
            .filter(|&i| svd.singular_values[i] <= 1e-8 * smax.max(1.0))
            .map(|i| (0..m).map(|j| vt[(i, j)].conj()).collect())
            .collect();
        match kernel.len() {
            0 => {}
            1 => {
                let dir: Vec<(usize, Complex64)> = others.iter().copied().zip(kernel[0].iter().copied()).collect();
                let mut best: Option<Vec<Complex64>> = None;
                let mut all_vanish = true;
                for p in polys {
                    let d = total_degree(p, &others);
                    let (c, scale) = lambda_poly(p, &base, &dir, d);
                    let mut c: Vec<Complex64> = c;
                    let cmax = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
                    if cmax <= 1e-9 * scale {
                        continue;
                    }
                    all_vanish = false;
                    while c.last().is_some_and(|z| z.norm() <= 1e-10 * cmax) {
                        c.pop();
                    }
                    if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                }
                if all_vanish {
                    return Err(());
                }
                let best = best.unwrap();
                for lambda in aberth(&best, opts.aberth) {
                    if lambda.norm() <= ZERO_T {
                        continue;
                    }
                    let mut z = base.clone();
                    for &(v, c) in &dir {
                        z[v] = c * lambda;
                    }
                    points.push(z);
                }
            }
            _ => return Ok(Outcome::Fallback),
        }
    }
    Ok(Outcome::Points(points))
}

fn random_start(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let r = radius * rng.random::<f64>().sqrt();
            Complex64::from_polar(r, std::f64::consts::TAU * rng.random::<f64>())
        })
        .collect()
}

/// Isolated solutions of one branch with `t ≠ 0`, sorted lexicographically.
pub fn solve_system(s: &ConstraintSystem, opts: &SolveOptions) -> Result<Vec<RawSolution>, SolveError> {
    let n = s.variable_count();
    if n > opts.max_vars {
        return Err(SolveError::TooManyVariables { found: n, max: opts.max_vars });
    }
    let polys: Vec<&MultiPoly> = s.polynomials.iter().filter(|p| !p.is_zero()).collect();
    if polys.iter().any(|p| p.variables().is_empty()) {
        return Ok(Vec::new());
    }
    let num = Numeric::new(polys.clone(), n);
    let free: Vec<usize> = (0..n).collect();
    let positive = |samples: Vec<Vec<Complex64>>| SolveError::PositiveDimensional { branch: s.sign_branch.clone(), samples };

    let (candidates, from_newton) = match eliminate(&polys, n, opts) {
        Ok(Outcome::Points(p)) => (p, false),
        Ok(Outcome::Fallback) => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ branch_key(&s.sign_branch));
            ((0..opts.newton_starts).map(|_| random_start(&mut rng, n, opts.newton_radius)).collect(), true)
        }
        Err(()) => return Err(positive(Vec::new())),
    };

    let mut found: Vec<RawSolution> = Vec::new();
    let mut stalled = Vec::new();
    let mut degenerate: Vec<Vec<Complex64>> = Vec::new();
    for c in candidates {
        let (z, r) = num.refine(&c, &free, opts.residual_tol);
        if !r.is_finite() || has_zero_vector(&z) {
            continue;
        }
        if r > opts.residual_tol {
            if r <= REJECT_RESIDUAL && !from_newton {
                stalled.push(RawSolution { branch: s.sign_branch.clone(), values: z, residual: r });
            }
            continue;
        }
        if found.iter().any(|f| close(&f.values, &z, opts.fingerprint_tol)) {
            continue;
        }
        if from_newton && num.rank(&z, &free) < n {
            degenerate.push(z.clone());
        }
        found.push(RawSolution { branch: s.sign_branch.clone(), values: z, residual: r });
    }
    if degenerate.len() >= 2 {
        return Err(positive(degenerate));
    }
    if !stalled.is_empty() {
        found.extend(stalled);
        return Err(SolveError::SolverStalled { branch: s.sign_branch.clone(), partial: found });
    }
    found.sort_by(|a, b| lex(&a.values, &b.values));
    Ok(found)
}

fn branch_key(b: &[i8]) -> u64 {
    b.iter().fold(0u64, |acc, &s| acc.wrapping_mul(3).wrapping_add(if s > 0 { 1 } else { 2 }))
}

/// Lexicographic order by (Re, Im), blind to differences below 1e-9.
pub(crate) fn lex(a: &[Complex64], b: &[Complex64]) -> std::cmp::Ordering {
    let key = |z: &Complex64| [(z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64];
    a.iter().map(key).cmp(b.iter().map(key))
}
