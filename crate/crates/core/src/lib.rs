//! Quandle colorings of link diagrams, from finite quandles to parabolic
//! representations of link groups into SL(2, C).
//!
//! The pipeline for a diagram: [`fundamental_quandle_presentation`], then
//! [`eliminate_generators`], then [`enumerate_parabolic_colorings`], then
//! [`coloring_to_rep`].

pub mod diagram;
pub mod parabolic;
pub mod polysolve;
pub mod poly;
pub mod presentations;
pub mod quandle;
pub mod representation;
pub mod roots;

pub use diagram::{
    applicable_moves, apply_reidemeister, builtin, parse_pd, ArcId, Builtin, Crossing, DiagramError, Handedness,
    LinkDiagram, MoveKind, Pass, ReidemeisterMove,
};
pub use parabolic::{
    par_op, par_op_inv, projective_eq, to_matrix, GaussRat, Mat2, ParabolicElement, UnimodularMatrix,
};
pub use poly::{MultiPoly, UniPoly};
pub use polysolve::{
    build_systems, enumerate_parabolic_colorings, solve_system, trace_fingerprint, ConstraintSystem, RawSolution,
    SolutionSet, SolveError, SolveOptions,
};
pub use presentations::{
    eliminate_generators, fundamental_quandle_presentation, wirtinger_presentation, GroupPresentation, GroupWord,
    PresentationError, QuandlePresentation, QuandleWord,
};
pub use quandle::{
    adjoint_presentation, count_group_homs, count_quandle_homs, enumerate_colorings, is_tricolorable, make_conj,
    make_dihedral, make_eisermann, make_trivial, verify_quandle, Coloring, FiniteGroup, FiniteQuandle, QuandleError,
};
pub use representation::{
    coloring_to_rep, conjugate_rep, gaussian_integer_evidence, reference_borromean_reps, same_rep_up_to_conjugacy,
    MoebiusRepresentation, RepError,
};
pub use roots::{aberth, AberthOptions};
