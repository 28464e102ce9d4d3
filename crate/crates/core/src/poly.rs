//! Sparse multivariate and dense univariate polynomials with Gaussian rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Zero};

use crate::parabolic::{gauss_to_f64, GaussRat};

/// Exponent vector with trailing zeros trimmed, so that polynomials built in
/// different variable contexts compare equal.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(out)
}

fn exp_of(m: &[u32], var: usize) -> u32 {
    m.get(var).copied().unwrap_or(0)
}

/// Sparse polynomial: exponent vector → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl MultiPoly {
    pub fn constant(c: GaussRat) -> Self {
        let mut p = MultiPoly::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = MultiPoly::default();
        p.add_term(m, GaussRat::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut p = MultiPoly::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let entry = self.terms.entry(m.clone()).or_insert_with(GaussRat::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[u32]) -> GaussRat {
        self.terms.get(&trim(m.to_vec())).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn constant_term(&self) -> GaussRat {
        self.coefficient(&[])
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = Vec::new();
        for m in self.terms.keys() {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 && !used.contains(&i) {
                    used.push(i);
                }
            }
        }
        used.sort_unstable();
        used
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| exp_of(m, var)).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| gauss_to_f64(c) * monomial_value(m, point))
            .sum()
    }

    /// `Σ |c_α| |z^α|`, the scale used for relative residuals.
    pub fn eval_abs(&self, point: &[Complex64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| gauss_to_f64(c).norm() * monomial_value(m, point).norm())
            .sum()
    }

    pub fn eval_exact(&self, point: &[GaussRat]) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    v *= point[i].clone();
                }
            }
            acc += v;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let e = exp_of(m, var);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            out.add_term(m2, c.clone() * GaussRat::from(num::BigRational::from_integer(e.into())));
        }
        out
    }

    /// Splits the polynomial as `Σ_k coeff_k · vars[k]` when every term has
    /// degree exactly one in `vars`; returns the coefficient polynomials.
    pub fn as_linear_form(&self, vars: &[usize]) -> Option<Vec<MultiPoly>> {
        let mut coeffs = vec![MultiPoly::default(); vars.len()];
        for (m, c) in &self.terms {
            let degs: Vec<u32> = vars.iter().map(|&v| exp_of(m, v)).collect();
            if degs.iter().sum::<u32>() != 1 {
                return None;
            }
            let k = degs.iter().position(|&d| d == 1).unwrap();
            let mut m2 = m.clone();
            m2[vars[k]] = 0;
            coeffs[k].add_term(m2, c.clone());
        }
        Some(coeffs)
    }

    /// The univariate polynomial in `var`, if no other variable occurs.
    pub fn to_univariate(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs = vec![GaussRat::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            coeffs[exp_of(m, var) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// Complex conjugate of every coefficient.
    pub fn conj(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.conj())))
    }

    pub fn display(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let n = names.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("v{}", i));
                    if e == 1 {
                        n
                    } else {
                        format!("{}^{}", n, e)
                    }
                })
                .collect();
            let cs = fmt_gauss(c);
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono.join("*")
            } else if *c == -GaussRat::one() {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", cs, mono.join("*"))
            };
            parts.push(term);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }
}

fn monomial_value(m: &[u32], point: &[Complex64]) -> Complex64 {
    let mut v = Complex64::new(1.0, 0.0);
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            v *= point[i].powu(e);
        }
    }
    v
}

pub fn fmt_gauss(c: &GaussRat) -> String {
    if c.im.is_zero() {
        format!("{}", c.re)
    } else if c.re.is_zero() {
        format!("({}i)", c.im)
    } else {
        format!("({}{}{}i)", c.re, if c.im < num::BigRational::zero() { "" } else { "+" }, c.im)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&[]))
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(GaussRat::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, o: MultiPoly) -> MultiPoly {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.into_iter().map(|(m, c)| (m, -c)))
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        self + (-o)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(mono_mul(m1, m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

/// Dense univariate polynomial over Q(i), coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<GaussRat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = GaussRat::one() / l.clone();
                UniPoly::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect())
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * GaussRat::from(num::BigRational::from_integer((i as i64).into())))
                .collect(),
        )
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &[GaussRat], i: usize| v.get(i).cloned().unwrap_or_else(GaussRat::zero);
        UniPoly::new((0..n).map(|i| get(&self.coeffs, i) - get(&o.coeffs, i)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = GaussRat::one() / d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussRat::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let q = rem[k].clone() * lead_inv.clone();
            if !q.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[k - dd + j] = rem[k - dd + j].clone() - q.clone() * c.clone();
                }
            }
            quot[k - dd] = q;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn squarefree(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Removes factors of the variable: `p / t^k` with `p(0) ≠ 0`.
    pub fn saturate_at_zero(&self) -> UniPoly {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        UniPoly::new(self.coeffs[k..].to_vec())
    }

    pub fn to_f64(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(gauss_to_f64).collect()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + gauss_to_f64(c))
    }
}
