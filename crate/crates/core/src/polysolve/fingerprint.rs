use num::complex::Complex64;

use crate::parabolic::{canonical_sign, to_matrix, Mat2, ParabolicElement};
use crate::presentations::GroupWord;

/// Generators, ordered pairs `gᵢgⱼ` (i < j), the product of all generators
/// when there are at least three, then the given relators.
pub fn default_words(generators: usize, relators: &[GroupWord]) -> Vec<GroupWord> {
    let mut words: Vec<GroupWord> = (0..generators).map(GroupWord::gen).collect();
    for i in 0..generators {
        for j in i + 1..generators {
            words.push(GroupWord::new(vec![(i, 1), (j, 1)]));
        }
    }
    if generators >= 3 {
        words.push(GroupWord::new((0..generators).map(|g| (g, 1)).collect()));
    }
    words.extend(relators.iter().cloned());
    words
}

/// Picks `±z` with nonnegative real part, ties broken by the imaginary part.
pub fn normalize_trace(z: Complex64) -> Complex64 {
    if canonical_sign(z, 1e-9 * z.norm().max(1.0)) < 0 {
        -z
    } else {
        z
    }
}

pub fn evaluate_word(images: &[Mat2<Complex64>], w: &GroupWord) -> Mat2<Complex64> {
    let inverses: Vec<Mat2<Complex64>> = images.iter().map(Mat2::adjugate).collect();
    w.evaluate(Mat2::identity(), images, &inverses, |a, b| a.mul(b))
}

/// Sign-normalized traces of the word images.
pub fn matrix_fingerprint(images: &[Mat2<Complex64>], words: &[GroupWord]) -> Vec<Complex64> {
    words.iter().map(|w| normalize_trace(evaluate_word(images, w).trace())).collect()
}

/// Fingerprint of a coloring through `to_matrix`.
pub fn trace_fingerprint(coloring: &[ParabolicElement<Complex64>], words: &[GroupWord]) -> Vec<Complex64> {
    let images: Vec<Mat2<Complex64>> = coloring.iter().map(to_matrix).collect();
    matrix_fingerprint(&images, words)
}

/// Entrywise agreement within `eps`, relative to the entry size.
pub fn fingerprints_match(a: &[Complex64], b: &[Complex64], eps: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= eps * x.norm().max(y.norm()).max(1.0))
}
