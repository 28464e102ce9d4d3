//! Representations of link groups into SL(2, C) built from parabolic
//! colorings, with their checkable consequences: relators map to `±I`,
//! meridians have trace `±2`, and entries near Gaussian integers.

use num::complex::Complex64;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{builtin, Builtin};
use crate::parabolic::{complex_pair, gauss, to_matrix, GaussRat, Mat2, ParabolicElement};
use crate::polysolve::{default_words, evaluate_word, fingerprints_match, matrix_fingerprint, ParabolicColoring};
use crate::presentations::{wirtinger_presentation, Eliminate, GroupPresentation, GroupWord};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("no image for generator `{0}`")]
    MissingGenerator(String),
    #[error("relator mentions unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// Generator images plus verification data, all computed on construction.
#[derive(Clone, Debug)]
pub struct MoebiusRepresentation {
    pub names: Vec<String>,
    pub images: Vec<Mat2<Complex64>>,
    /// Relators over `names`.
    pub relators: Vec<GroupWord>,
    /// `min(‖ρ(r) − I‖, ‖ρ(r) + I‖)` in the max-entry norm, per relator.
    pub relator_residuals: Vec<f64>,
    pub meridian_traces: Vec<Complex64>,
    pub fingerprint: Vec<Complex64>,
}

impl MoebiusRepresentation {
    /// Builds a representation of `g` from images listed in the order of `names`.
    pub fn new(names: Vec<String>, images: Vec<Mat2<Complex64>>, g: &GroupPresentation) -> Result<Self, RepError> {
        let index: Vec<usize> = g
            .generator_names
            .iter()
            .map(|n| names.iter().position(|m| m == n).ok_or_else(|| RepError::MissingGenerator(n.clone())))
            .collect::<Result<_, _>>()?;
        let relators = g.relators.iter().map(|r| r.map_generators(|x| index[x])).collect();
        Ok(Self::with_relators(names, images, relators))
    }

    fn with_relators(names: Vec<String>, images: Vec<Mat2<Complex64>>, relators: Vec<GroupWord>) -> Self {
        let relator_residuals = relators.iter().map(|r| evaluate_word(&images, r).dist_up_to_sign(&Mat2::identity())).collect();
        let meridian_traces = images.iter().map(|m| m.trace()).collect();
        let fingerprint = matrix_fingerprint(&images, &default_words(images.len(), &relators));
        MoebiusRepresentation { names, images, relators, relator_residuals, meridian_traces, fingerprint }
    }

    pub fn image(&self, name: &str) -> Option<&Mat2<Complex64>> {
        self.names.iter().position(|n| n == name).map(|i| &self.images[i])
    }

    pub fn max_residual(&self) -> f64 {
        self.relator_residuals.iter().cloned().fold(0.0, f64::max)
    }

    /// All meridians have trace `±2` within `eps`.
    pub fn meridians_parabolic(&self, eps: f64) -> bool {
        self.meridian_traces.iter().all(|t| (t - 2.0).norm() <= eps || (t + 2.0).norm() <= eps)
    }

    /// Some pair of generator images fails to commute (up to sign).
    pub fn is_nonabelian(&self, eps: f64) -> bool {
        let n = self.images.len();
        (0..n).any(|i| {
            (i + 1..n).any(|j| {
                let (a, b) = (&self.images[i], &self.images[j]);
                a.mul(b).dist_up_to_sign(&b.mul(a)) > eps
            })
        })
    }

    /// Same group, image of generator `i` replaced by the image of `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let images = perm.iter().map(|&p| self.images[p]).collect();
        Self::with_relators(self.names.clone(), images, self.relators.clone())
    }

    /// `g ↦ M ρ(g) M⁻¹`.
    pub fn conjugated_by(&self, m: &Mat2<Complex64>) -> Self {
        let inv = m.adjugate();
        let det = m.det();
        let images = self.images.iter().map(|x| m.mul(x).mul(&inv).map(|z| z / det)).collect();
        Self::with_relators(self.names.clone(), images, self.relators.clone())
    }

    /// Fingerprint of `other`, taken with this representation's generator order and relators.
    fn fingerprint_as_self(&self, other: &Self) -> Option<Vec<Complex64>> {
        let images: Option<Vec<Mat2<Complex64>>> = self.names.iter().map(|n| other.image(n).copied()).collect();
        Some(matrix_fingerprint(&images?, &default_words(self.images.len(), &self.relators)))
    }
}

impl Serialize for MoebiusRepresentation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Images<'a>(&'a MoebiusRepresentation);
        impl Serialize for Images<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.names.len()))?;
                for (n, x) in self.0.names.iter().zip(&self.0.images) {
                    m.serialize_entry(n, x)?;
                }
                m.end()
            }
        }
        let pairs = |v: &[Complex64]| v.iter().map(|z| complex_pair(*z)).collect::<Vec<_>>();
        let mut st = s.serialize_struct("MoebiusRepresentation", 6)?;
        st.serialize_field("images", &Images(self))?;
        st.serialize_field("relators", &self.relators.iter().map(|r| r.display(&self.names)).collect::<Vec<_>>())?;
        st.serialize_field("relator_residuals", &self.relator_residuals)?;
        st.serialize_field("max_residual", &self.max_residual())?;
        st.serialize_field("meridian_traces", &pairs(&self.meridian_traces))?;
        st.serialize_field("fingerprint", &pairs(&self.fingerprint))?;
        st.end()
    }
}

/// `ρ = to_matrix ∘ coloring` on the generators of `g`.
pub fn coloring_to_rep(coloring: &ParabolicColoring, g: &GroupPresentation) -> Result<MoebiusRepresentation, RepError> {
    let values: Vec<ParabolicElement<Complex64>> = g
        .generator_names
        .iter()
        .map(|n| coloring.get(n).cloned().ok_or_else(|| RepError::MissingGenerator(n.clone())))
        .collect::<Result<_, _>>()?;
    rep_from_values(&g.generator_names, &values, g)
}

/// As [`coloring_to_rep`] for values listed in the order of `names`.
pub fn rep_from_values(
    names: &[String],
    values: &[ParabolicElement<Complex64>],
    g: &GroupPresentation,
) -> Result<MoebiusRepresentation, RepError> {
    MoebiusRepresentation::new(names.to_vec(), values.iter().map(to_matrix).collect(), g)
}

/// The simplified Wirtinger presentation of the Borromean rings, on `a, b, c`.
pub fn borromean_group() -> GroupPresentation {
    wirtinger_presentation(&builtin(Builtin::Borromean)).eliminate()
}

/// The two reference triples `⟨M₁, M₂, M₃⟩` in Z[i], the second being the
/// complex conjugate of the first.
pub fn reference_borromean_triples() -> [[Mat2<GaussRat>; 3]; 2] {
    let m1 = Mat2::new(gauss(2, 1), gauss(0, 2), gauss(-1, 0), gauss(0, -1));
    let m2 = Mat2::new(gauss(1, 0), gauss(0, 2), gauss(0, 0), gauss(1, 0));
    let m3 = Mat2::new(gauss(1, 0), gauss(0, 0), gauss(-1, 0), gauss(1, 0));
    let first = [m1, m2, m3];
    let second = first.clone().map(|m| m.conj());
    [first, second]
}

/// Generator matching of the reference triple: `a ↦ M₁`, `b ↦ M₃`, `c ↦ M₂`.
pub const REFERENCE_MATCHING: [usize; 3] = [0, 2, 1];

/// The reference triples as exact images of `a, b, c`.
pub fn reference_borromean_exact() -> [[Mat2<GaussRat>; 3]; 2] {
    reference_borromean_triples().map(|t| REFERENCE_MATCHING.map(|k| t[k].clone()))
}

/// The two reference representations of the Borromean group.
pub fn reference_borromean_reps() -> [MoebiusRepresentation; 2] {
    let g = borromean_group();
    reference_borromean_exact().map(|t| {
        let images = t.iter().map(Mat2::from_exact).collect();
        MoebiusRepresentation::new(g.generator_names.clone(), images, &g).expect("generators a, b, c")
    })
}

/// Relator images in exact arithmetic, for images listed in generator order.
pub fn exact_relator_images(images: &[Mat2<GaussRat>], relators: &[GroupWord]) -> Vec<Mat2<GaussRat>> {
    let inverses: Vec<Mat2<GaussRat>> = images.iter().map(Mat2::adjugate).collect();
    relators.iter().map(|r| r.evaluate(Mat2::identity(), images, &inverses, |a, b| a.mul(b))).collect()
}

/// Trace fingerprints agree within `eps` after sign normalization.
pub fn same_rep_up_to_conjugacy(r1: &MoebiusRepresentation, r2: &MoebiusRepresentation, eps: f64) -> bool {
    match r1.fingerprint_as_self(r2) {
        Some(fp) => r1.names.len() == r2.names.len() && fingerprints_match(&r1.fingerprint, &fp, eps),
        None => false,
    }
}

/// Entrywise complex conjugate.
pub fn conjugate_rep(r: &MoebiusRepresentation) -> MoebiusRepresentation {
    let images = r.images.iter().map(Mat2::conj).collect();
    MoebiusRepresentation::with_relators(r.names.clone(), images, r.relators.clone())
}

/// Moves a representation of the mirror diagram's group to the original
/// diagram's group: a reflection reverses every meridian and acts on
/// SL(2, C) by complex conjugation, so images become `conj(ρ(g)⁻¹)`.
pub fn mirror_transport(r: &MoebiusRepresentation, original: &GroupPresentation) -> Result<MoebiusRepresentation, RepError> {
    let images = r.images.iter().map(|m| m.adjugate().conj()).collect();
    MoebiusRepresentation::new(r.names.clone(), images, original)
}

/// Distances from matrix entries to the nearest Gaussian integers.
#[derive(Clone, Debug, Serialize)]
pub struct GaussianEvidence {
    /// Per generator, the four entry distances `[a, b, c, d]`.
    pub distances: Vec<[f64; 4]>,
    pub max_distance: f64,
    pub all_integral: bool,
    pub note: &'static str,
}

pub fn gaussian_integer_evidence(r: &MoebiusRepresentation, eps: f64) -> GaussianEvidence {
    let dist = |z: &Complex64| (z - Complex64::new(z.re.round(), z.im.round())).norm();
    let distances: Vec<[f64; 4]> = r.images.iter().map(|m| m.entries().map(dist)).collect();
    let max_distance = distances.iter().flatten().cloned().fold(0.0, f64::max);
    GaussianEvidence {
        distances,
        max_distance,
        all_integral: max_distance <= eps,
        note: "evidence for discreteness, not a proof",
    }
}
