//! The parabolic quandle Par over the complex numbers.
//!
//! An element is a class `[x, y]` of nonzero vectors in C² modulo `±1`. The
//! operation and its inverse are polynomial in the coordinates, so both the
//! exact backend (`Complex<BigRational>`) and the floating backend
//! (`Complex64`) share one generic implementation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{BigInt, BigRational, Complex, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Commutative ring operations needed by the Par formulas and 2×2 matrices.
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// Gaussian rational `p + q i` with `p, q ∈ Q`.
pub type GaussRat = Complex<BigRational>;

pub fn gauss(re: i64, im: i64) -> GaussRat {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

pub fn gauss_frac(re: (i64, i64), im: (i64, i64)) -> GaussRat {
    Complex::new(
        BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
        BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
    )
}

pub fn gauss_to_f64(z: &GaussRat) -> Complex64 {
    use num::ToPrimitive;
    Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

/// A representative `(x, y)` of a class in Par.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicElement<T> {
    pub x: T,
    pub y: T,
}

impl<T> ParabolicElement<T> {
    pub fn new(x: T, y: T) -> Self {
        ParabolicElement { x, y }
    }
}

impl<T: Ring> ParabolicElement<T> {
    pub fn neg(&self) -> Self {
        ParabolicElement::new(-self.x.clone(), -self.y.clone())
    }

    /// Exact class equality: `self = ±other`.
    pub fn same_class(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }
}

/// `v * w = [x1 + x1 x2 y2 - y1 x2², x1 y2² + y1 - x2 y2 y1]`.
pub fn par_op<T: Ring>(v: &ParabolicElement<T>, w: &ParabolicElement<T>) -> ParabolicElement<T> {
    let (x1, y1) = (v.x.clone(), v.y.clone());
    let (x2, y2) = (w.x.clone(), w.y.clone());
    let x = x1.clone() + x1.clone() * x2.clone() * y2.clone() - y1.clone() * x2.clone() * x2.clone();
    let y = x1 * y2.clone() * y2.clone() + y1.clone() - x2 * y2 * y1;
    ParabolicElement::new(x, y)
}

/// Inverse of `β_w`: the unique `u` with `u * w = v`.
pub fn par_op_inv<T: Ring>(v: &ParabolicElement<T>, w: &ParabolicElement<T>) -> ParabolicElement<T> {
    let (x1, y1) = (v.x.clone(), v.y.clone());
    let (x2, y2) = (w.x.clone(), w.y.clone());
    let x = x1.clone() - x1.clone() * x2.clone() * y2.clone() + x2.clone() * x2.clone() * y1.clone();
    let y = y1.clone() - x1 * y2.clone() * y2.clone() + x2 * y2 * y1;
    ParabolicElement::new(x, y)
}

/// `P(x, y) = [[1 - xy, x²], [-y², 1 + xy]]`, the parabolic matrix fixing `[x : y]`.
pub fn to_matrix<T: Ring>(v: &ParabolicElement<T>) -> Mat2<T> {
    let xy = v.x.clone() * v.y.clone();
    Mat2::new(
        T::one() - xy.clone(),
        v.x.clone() * v.x.clone(),
        -(v.y.clone() * v.y.clone()),
        T::one() + xy,
    )
}

fn cnorm(z: Complex64) -> f64 {
    z.norm()
}

fn vec_norm(v: &ParabolicElement<Complex64>) -> f64 {
    (v.x.norm_sqr() + v.y.norm_sqr()).sqrt()
}

/// True iff `min(‖v−w‖, ‖v+w‖) ≤ ε·max(‖v‖, ‖w‖)`.
pub fn projective_eq(v: &ParabolicElement<Complex64>, w: &ParabolicElement<Complex64>, eps: f64) -> bool {
    let minus = ((v.x - w.x).norm_sqr() + (v.y - w.y).norm_sqr()).sqrt();
    let plus = ((v.x + w.x).norm_sqr() + (v.y + w.y).norm_sqr()).sqrt();
    minus.min(plus) <= eps * vec_norm(v).max(vec_norm(w))
}

/// Sign of a complex number for canonical normalization: `+1` when its
/// argument lies in `(−π/2, π/2]`, `−1` otherwise, `0` when it is below `tol`.
pub fn canonical_sign(z: Complex64, tol: f64) -> i8 {
    if cnorm(z) <= tol {
        0
    } else if z.re > tol || (z.re.abs() <= tol && z.im > 0.0) {
        1
    } else {
        -1
    }
}

/// The representative whose first nonzero coordinate has argument in `(−π/2, π/2]`.
pub fn normalize_sign(v: &ParabolicElement<Complex64>, tol: f64) -> ParabolicElement<Complex64> {
    let scale = tol * vec_norm(v).max(1.0);
    let s = match canonical_sign(v.x, scale) {
        0 => canonical_sign(v.y, scale),
        s => s,
    };
    if s < 0 {
        v.neg()
    } else {
        v.clone()
    }
}

pub(crate) fn complex_pair(z: Complex64) -> [f64; 2] {
    // avoid emitting "-0.0" so that JSON output is stable under sign flips
    let clean = |f: f64| if f == 0.0 { 0.0 } else { f };
    [clean(z.re), clean(z.im)]
}

impl Serialize for ParabolicElement<Complex64> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = normalize_sign(self, 1e-12);
        let mut st = s.serialize_struct("ParabolicElement", 2)?;
        st.serialize_field("x", &complex_pair(v.x))?;
        st.serialize_field("y", &complex_pair(v.y))?;
        st.end()
    }
}

impl fmt::Display for ParabolicElement<Complex64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = normalize_sign(self, 1e-12);
        write!(f, "[{}, {}]", fmt_complex(v.x), fmt_complex(v.y))
    }
}

pub fn fmt_complex(z: Complex64) -> String {
    let r = |f: f64| {
        let f = if f.abs() < 5e-13 { 0.0 } else { f };
        let s = format!("{:.6}", f);
        let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    };
    let (re, im) = (r(z.re), r(z.im));
    let unit = |m: &str| if m == "1" { String::new() } else { m.to_string() };
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) if im.starts_with('-') => format!("-{}i", unit(&im[1..])),
        ("0", _) => format!("{}i", unit(&im)),
        _ if im.starts_with('-') => format!("{}-{}i", re, unit(&im[1..])),
        _ => format!("{}+{}i", re, unit(&im)),
    }
}

/// A 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// Matrices produced by [`to_matrix`] and by representations have determinant one.
pub type UnimodularMatrix = Mat2<Complex64>;

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }

    /// The adjugate, which is the inverse for unimodular matrices.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn inv(&self) -> Self {
        self.adjugate()
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    pub fn neg(&self) -> Self {
        Mat2::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2 { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Equal to `I` or `−I`.
    pub fn is_plus_minus_identity(&self) -> bool {
        let i = Self::identity();
        *self == i || *self == i.neg()
    }
}

impl<T: Clone + num::Num + Neg<Output = T>> Mat2<Complex<T>> {
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }
}

impl Mat2<Complex64> {
    /// Max-entry distance, minimized over the global sign of `other`.
    pub fn dist_up_to_sign(&self, other: &Self) -> f64 {
        let d = |s: f64| {
            self.entries()
                .iter()
                .zip(other.entries().iter())
                .map(|(x, y)| (**x - **y * s).norm())
                .fold(0.0, f64::max)
        };
        d(1.0).min(d(-1.0))
    }

    pub fn max_entry(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn from_exact(m: &Mat2<GaussRat>) -> Self {
        m.map(gauss_to_f64)
    }
}

impl Serialize for Mat2<Complex64> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = [[complex_pair(self.a), complex_pair(self.b)], [complex_pair(self.c), complex_pair(self.d)]];
        rows.serialize(s)
    }
}

impl fmt::Display for Mat2<Complex64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            fmt_complex(self.a),
            fmt_complex(self.b),
            fmt_complex(self.c),
            fmt_complex(self.d)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(x: GaussRat, y: GaussRat) -> ParabolicElement<GaussRat> {
        ParabolicElement::new(x, y)
    }

    #[test]
    fn worked_examples() {
        let one0 = e(gauss(1, 0), gauss(0, 0));
        assert_eq!(par_op(&one0, &one0), one0);
        let t = gauss(2, 3);
        let b = e(gauss(0, 0), t.clone());
        assert_eq!(par_op(&one0, &b), e(gauss(1, 0), t.clone() * t.clone()));
        assert_eq!(par_op_inv(&e(gauss(1, 0), t.clone() * t.clone()), &b), one0);
        let r = par_op(&e(gauss(0, 0), gauss(1, 0)), &one0);
        assert!(r.same_class(&e(gauss(1, 0), gauss(-1, 0))));
    }

    #[test]
    fn matrices() {
        let m = to_matrix(&e(gauss(1, 0), gauss(0, 0)));
        assert_eq!(m, Mat2::new(gauss(1, 0), gauss(1, 0), gauss(0, 0), gauss(1, 0)));
        let t = gauss(1, 1);
        let m = to_matrix(&e(gauss(0, 0), t.clone()));
        assert_eq!(m, Mat2::new(gauss(1, 0), gauss(0, 0), -(t.clone() * t), gauss(1, 0)));
    }

    #[test]
    fn projective_equality() {
        let v = ParabolicElement::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 1.0));
        assert!(projective_eq(&v, &v.neg(), 1e-12));
        let a = ParabolicElement::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        let b = ParabolicElement::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        assert!(!projective_eq(&a, &b, 1e-12));
    }

    #[test]
    fn normalization_picks_positive_first_coordinate() {
        let v = ParabolicElement::new(Complex64::new(-1.0, 0.0), Complex64::new(-1.0, -1.0));
        let n = normalize_sign(&v, 1e-12);
        assert_eq!(n.x, Complex64::new(1.0, 0.0));
        let w = ParabolicElement::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, -2.0));
        assert_eq!(normalize_sign(&w, 1e-12).y, Complex64::new(0.0, 2.0));
        assert_eq!(v.to_string(), "[1, 1+i]");
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(fmt_complex(Complex64::new(2.0, -2.0)), "2-2i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 4.0)), "4i");
        assert_eq!(fmt_complex(Complex64::new(-0.0, 0.0)), "0");
    }
}
