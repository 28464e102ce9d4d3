//! Simultaneous complex root finding (Aberth–Ehrlich iteration).

use num::complex::Complex64;

#[derive(Clone, Copy, Debug)]
pub struct AberthOptions {
    pub epsilon: f64,
    pub max_iterations: usize,
}

impl Default for AberthOptions {
    fn default() -> Self {
        AberthOptions { epsilon: 1e-14, max_iterations: 200 }
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of `Σ coeffs[k] z^k`, counted with multiplicity.
///
/// Trailing zero coefficients are ignored; a constant polynomial has no roots.
pub fn aberth(coeffs: &[Complex64], opts: AberthOptions) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let lead = *c.last().unwrap();
    let c: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let n = c.len() - 1;
    if n == 1 {
        return vec![-c[0]];
    }
    // zero roots split off exactly
    let zeros = c.iter().take_while(|z| z.norm() == 0.0).count();
    if zeros > 0 {
        let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
        roots.extend(aberth(&c[zeros..], opts));
        return roots;
    }

    // Cauchy-style radius and a rotated circle as starting points.
    let radius = c[..n].iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    let r0 = (radius.powf(1.0 / n as f64)).clamp(1e-3, 1e6);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0, std::f64::consts::TAU * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();

    for _ in 0..opts.max_iterations {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = ratio / (1.0 - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step <= opts.epsilon {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fourth_roots_of_minus_four() {
        let roots = aberth(&[c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], AberthOptions::default());
        assert_eq!(roots.len(), 4);
        for expect in [c(1.0, 1.0), c(1.0, -1.0), c(-1.0, 1.0), c(-1.0, -1.0)] {
            assert!(roots.iter().any(|r| (r - expect).norm() < 1e-12), "{:?}", roots);
        }
    }

    #[test]
    fn zero_roots_and_linear() {
        let roots = aberth(&[c(0.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)], AberthOptions::default());
        let mut re: Vec<f64> = roots.iter().map(|r| r.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0]).abs() < 1e-14 && (re[1] - 2.0).abs() < 1e-12);
        assert!(aberth(&[c(3.0, 0.0)], AberthOptions::default()).is_empty());
    }

    #[test]
    fn wilkinson_like() {
        // (z-1)(z-2)...(z-6)
        let mut p = vec![c(1.0, 0.0)];
        for k in 1..=6 {
            let mut q = vec![c(0.0, 0.0); p.len() + 1];
            for (i, a) in p.iter().enumerate() {
                q[i + 1] += a;
                q[i] -= a * k as f64;
            }
            p = q;
        }
        let roots = aberth(&p, AberthOptions::default());
        for k in 1..=6 {
            assert!(roots.iter().any(|r| (r - c(k as f64, 0.0)).norm() < 1e-9));
        }
    }
}
