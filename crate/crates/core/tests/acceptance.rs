//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::{brute_force_colorings, quandles_up_to_iso, small_groups, small_quandles};
use num::complex::Complex64;
use num::{One, Zero};
use quandlekit::diagram::{applicable_moves, apply_reidemeister, builtin, Builtin, MoveKind};
use quandlekit::parabolic::{gauss, gauss_frac, par_op, par_op_inv, to_matrix, GaussRat, Mat2, ParabolicElement};
use quandlekit::poly::{MultiPoly, UniPoly};
use quandlekit::polysolve::{
    build_systems, default_words, enumerate_parabolic_colorings, fingerprints_match, matrix_fingerprint,
    normalize_trace, SolutionSet, SolveOptions,
};
use quandlekit::presentations::{eliminate_generators, fundamental_quandle_presentation, wirtinger_presentation, Eliminate, GroupWord};
use quandlekit::quandle::{
    adjoint_presentation, count_group_homs, count_quandle_homs, diagram_colorings, is_tricolorable, make_dihedral,
    verify_quandle,
};
use quandlekit::representation::{
    borromean_group, coloring_to_rep, exact_relator_images, mirror_transport, reference_borromean_exact,
    reference_borromean_reps, same_rep_up_to_conjugacy, MoebiusRepresentation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn borromean() -> SolutionSet {
    enumerate_parabolic_colorings(&builtin(Builtin::Borromean), &SolveOptions::default()).expect("solver runs")
}

fn close(a: Complex64, b: Complex64, eps: f64) -> bool {
    (a - b).norm() <= eps
}

fn criterion_1() -> Check {
    let s = borromean();
    ensure!(s.raw_solutions.len() == 8, "{} raw solutions", s.raw_solutions.len());
    let targets = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)].map(|(a, b)| Complex64::new(a, b));
    for r in &s.raw_solutions {
        let (t, x, y) = (r.values[0], r.values[1], r.values[2]);
        ensure!(targets.iter().any(|&z| close(t, z, 1e-9)), "t = {t}");
        ensure!(close(y, t, 1e-9) || close(y, -t, 1e-9), "y = {y} for t = {t}");
        ensure!(close(x, (2.0 - t * t) * y / 4.0, 1e-9), "x = {x} for t = {t}");
    }
    for z in targets {
        let hits = s.raw_solutions.iter().filter(|r| close(r.values[0], z, 1e-9)).count();
        ensure!(hits == 2, "t = {z} appears {hits} times");
    }
    ensure!(s.classes.len() == 2, "{} classes", s.classes.len());
    Ok(())
}

fn reference_fingerprint(images: &[Mat2<GaussRat>; 3], words: &[GroupWord]) -> Vec<Complex64> {
    let m: Vec<Mat2<Complex64>> = images.iter().map(Mat2::from_exact).collect();
    matrix_fingerprint(&m, words)
}

fn criterion_2() -> Check {
    let s = borromean();
    let expected = [(1.0, 0.0, 0.0, 0.0), (0.0, 0.0, 1.0, 1.0), (1.0, 0.0, 1.0, 1.0)]
        .map(|(a, b, c, d)| ParabolicElement::new(Complex64::new(a, b), Complex64::new(c, d)));
    let found = (0..s.classes.len()).find(|&c| {
        let values = s.generator_values(s.classes[c].representative());
        values.iter().zip(&expected).all(|(v, e)| quandlekit::projective_eq(v, e, 1e-9))
    });
    let Some(class) = found else {
        return Err("no class has the representative a=[1,0], b=[0,1+i], c=[1,1+i]".into());
    };
    let words = default_words(3, &borromean_group().relators);
    let triple = &reference_borromean_exact()[0];
    // try every assignment of the three matrices to a, b, c
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let matched = perms.iter().any(|p| {
        let images = [triple[p[0]].clone(), triple[p[1]].clone(), triple[p[2]].clone()];
        fingerprints_match(&reference_fingerprint(&images, &words), &s.classes[class].fingerprint, 1e-9)
    });
    ensure!(matched, "class {class} fingerprint matches no relabeling of the reference triple");
    Ok(())
}

fn full_reps(s: &SolutionSet, b: Builtin) -> Vec<MoebiusRepresentation> {
    let g = wirtinger_presentation(&builtin(b));
    (0..s.classes.len()).map(|c| coloring_to_rep(s.representative(c), &g).expect("every arc is colored")).collect()
}

fn criterion_3() -> Check {
    let s = borromean();
    ensure!(s.classes.len() == 2, "{} classes", s.classes.len());
    let conj: Vec<Complex64> = s.classes[0].fingerprint.iter().map(|z| normalize_trace(z.conj())).collect();
    ensure!(fingerprints_match(&conj, &s.classes[1].fingerprint, 1e-9), "fingerprints are not conjugate");
    let m = enumerate_parabolic_colorings(&builtin(Builtin::BorromeanMirror), &SolveOptions::default())
        .map_err(|e| e.to_string())?;
    ensure!(m.classes.len() == 2, "mirror has {} classes", m.classes.len());
    let originals = full_reps(&s, Builtin::Borromean);
    let group = wirtinger_presentation(&builtin(Builtin::Borromean));
    // inverting every meridian identifies the two groups holomorphically;
    // the reflection adds complex conjugation and must land on the other class
    let class_of = |r: &MoebiusRepresentation| -> Vec<usize> {
        (0..2).filter(|&j| same_rep_up_to_conjugacy(&originals[j], r, 1e-8)).collect()
    };
    let mut targets = Vec::new();
    for r in full_reps(&m, Builtin::BorromeanMirror) {
        let inverted = MoebiusRepresentation::new(r.names.clone(), r.images.iter().map(|m| m.inv()).collect(), &group)
            .map_err(|e| e.to_string())?;
        let same = class_of(&inverted);
        ensure!(same.len() == 1, "inverted mirror class matches {same:?}");
        let moved = mirror_transport(&r, &group).map_err(|e| e.to_string())?;
        let hits = class_of(&moved);
        ensure!(hits == [1 - same[0]], "reflection of a class identified with {} lands on {hits:?}", same[0]);
        targets.push(hits[0]);
    }
    targets.sort();
    ensure!(targets == [0, 1], "transport is not a bijection: {targets:?}");
    Ok(())
}

fn criterion_4() -> Check {
    let g = borromean_group();
    ensure!(g.relators.len() == 3, "{} relators", g.relators.len());
    let s = borromean();
    for c in 0..s.classes.len() {
        let r = coloring_to_rep(s.representative(c), &g).map_err(|e| e.to_string())?;
        ensure!(r.max_residual() <= 1e-9, "class {c} residual {}", r.max_residual());
    }
    for r in reference_borromean_reps() {
        ensure!(r.max_residual() <= 1e-9, "reference residual {}", r.max_residual());
    }
    for (i, t) in reference_borromean_exact().iter().enumerate() {
        ensure!(
            exact_relator_images(t, &g.relators).iter().all(|m| m.is_plus_minus_identity()),
            "reference triple {i} is not exactly ±I on the relators"
        );
    }
    Ok(())
}

fn cyclic_class(w: &GroupWord) -> Vec<GroupWord> {
    [w.clone(), w.inverse()].iter().flat_map(|v| (0..v.len()).map(move |k| v.rotate(k))).collect()
}

fn commutator(x: &GroupWord, y: &GroupWord) -> GroupWord {
    x.concat(y).concat(&x.inverse()).concat(&y.inverse())
}

fn criterion_5() -> Check {
    let q = eliminate_generators(&fundamental_quandle_presentation(&builtin(Builtin::Borromean)));
    ensure!(q.generator_names == ["a", "b", "c"], "quandle generators {:?}", q.generator_names);
    let mut rel = q.relation_strings();
    rel.sort();
    let expected = ["(a*(c*b)) = (a*c)", "(b*(a*c)) = (b*a)", "(c*(b*a)) = (c*b)"];
    ensure!(rel == expected, "quandle relations {rel:?}");
    let g = wirtinger_presentation(&builtin(Builtin::Borromean)).eliminate();
    ensure!(g.generator_names == ["a", "b", "c"], "group generators {:?}", g.generator_names);
    let (a, b, c) = (GroupWord::gen(0), GroupWord::gen(1), GroupWord::gen(2));
    let wanted = [
        commutator(&commutator(&c.inverse(), &b), &a),
        commutator(&commutator(&a.inverse(), &c), &b),
        commutator(&commutator(&b.inverse(), &a), &c),
    ];
    ensure!(g.relators.len() == 3, "{} group relators", g.relators.len());
    for w in &wanted {
        let class = cyclic_class(w);
        ensure!(g.relators.iter().any(|r| class.contains(r)), "missing {}", w.display(&g.generator_names));
    }
    Ok(())
}

fn criterion_6() -> Check {
    let d3 = make_dihedral(3);
    let trefoil = builtin(Builtin::Trefoil);
    let rings = builtin(Builtin::Borromean);
    let unknot = builtin(Builtin::Unknot);
    for (name, d, want) in [("trefoil", &trefoil, 9), ("borromean", &rings, 3)] {
        let fast = diagram_colorings(d, &d3).len();
        let slow = brute_force_colorings(d, &d3);
        ensure!(fast == want && slow == want, "{name}: {fast} enumerated, {slow} brute force, want {want}");
    }
    ensure!(is_tricolorable(&trefoil), "trefoil not tricolorable");
    ensure!(!is_tricolorable(&rings), "borromean tricolorable");
    ensure!(!is_tricolorable(&unknot), "unknot tricolorable");
    Ok(())
}

fn random_gauss(rng: &mut ChaCha8Rng) -> GaussRat {
    let mut part = || (rng.random_range(-9i64..10), rng.random_range(1i64..6));
    gauss_frac(part(), part())
}

fn random_element(rng: &mut ChaCha8Rng) -> ParabolicElement<GaussRat> {
    loop {
        let (x, y) = (random_gauss(rng), random_gauss(rng));
        if !(x.is_zero() && y.is_zero()) {
            return ParabolicElement::new(x, y);
        }
    }
}

const ALL_KINDS: [MoveKind; 5] = [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];

fn criterion_7() -> Check {
    let quandles = small_quandles();
    for (name, q) in &quandles {
        ensure!(verify_quandle(q.table()).is_empty(), "{name} fails the axioms");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let (u, v, w) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        ensure!(par_op(&v, &v) == v, "idempotence fails at case {i}");
        ensure!(par_op_inv(&par_op(&v, &w), &w) == v, "right inverse fails at case {i}");
        ensure!(par_op(&par_op(&u, &v), &w) == par_op(&par_op(&u, &w), &par_op(&v, &w)), "distributivity fails at case {i}");
    }
    for b in Builtin::ALL {
        let d = builtin(b);
        let before: Vec<usize> = quandles.iter().map(|(_, q)| diagram_colorings(&d, q).len()).collect();
        for mv in applicable_moves(&d, &ALL_KINDS) {
            let e = apply_reidemeister(&d, mv).map_err(|e| e.to_string())?;
            for ((name, q), &n) in quandles.iter().zip(&before) {
                let after = diagram_colorings(&e, q).len();
                ensure!(after == n, "{b} {mv:?} {name}: {n} then {after}");
            }
        }
    }
    for n in 1..=4 {
        for q in quandles_up_to_iso(n) {
            let adj = adjoint_presentation(&q);
            for (gname, g) in small_groups() {
                let lhs = count_quandle_homs(&q, &g, 1).map_err(|e| e.to_string())?;
                let rhs = count_group_homs(&adj, &g).map_err(|e| e.to_string())?;
                ensure!(lhs == rhs, "{:?} into {gname}: {lhs} vs {rhs}", q.table());
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let v = ParabolicElement::new(MultiPoly::var(0), MultiPoly::var(1));
    let w = ParabolicElement::new(MultiPoly::var(2), MultiPoly::var(3));
    let (p, q) = (to_matrix(&v), to_matrix(&w));
    ensure!(p.det() == MultiPoly::one(), "det is not 1");
    ensure!(p.trace() == MultiPoly::one() + MultiPoly::one(), "trace is not 2");
    ensure!(to_matrix(&par_op(&v, &w)) == q.adjugate().mul(&p).mul(&q), "par_op is not Q⁻¹PQ");
    ensure!(to_matrix(&par_op_inv(&v, &w)) == q.mul(&p).mul(&q.adjugate()), "par_op_inv is not QPQ⁻¹");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut c = || Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
    for i in 0..1000 {
        let (v, w) = (ParabolicElement::new(c(), c()), ParabolicElement::new(c(), c()));
        let (p, q) = (to_matrix(&v), to_matrix(&w));
        ensure!(close(p.det(), Complex64::one(), 1e-9), "numeric det at case {i}");
        ensure!(close(p.trace(), Complex64::new(2.0, 0.0), 1e-12), "numeric trace at case {i}");
        let d = to_matrix(&par_op(&v, &w)).dist_up_to_sign(&q.adjugate().mul(&p).mul(&q));
        ensure!(d <= 1e-8, "numeric equivariance at case {i}: {d}");
    }
    Ok(())
}

fn criterion_9() -> Check {
    let p = eliminate_generators(&fundamental_quandle_presentation(&builtin(Builtin::Borromean)));
    let systems = build_systems(&p).map_err(|e| e.to_string())?;
    let t_only = |f: &Vec<MultiPoly>| f.iter().all(|c| c.variables().iter().all(|&v| v == 0));
    for s in &systems {
        let forms: Vec<Vec<MultiPoly>> =
            s.polynomials.iter().filter_map(|q| q.as_linear_form(&[1, 2])).filter(t_only).collect();
        if forms.len() != 2 || !s.sign_branch.iter().all(|&x| x < 0) {
            continue;
        }
        let det = forms[0][0].clone() * forms[1][1].clone() - forms[0][1].clone() * forms[1][0].clone();
        let u = det.to_univariate(0).ok_or("determinant is not univariate in t")?;
        let target = UniPoly::new(vec![gauss(4, 0), gauss(0, 0), gauss(0, 0), gauss(0, 0), gauss(1, 0)]);
        let (quot, rem) = u.div_rem(&target);
        ensure!(rem.is_zero() && quot.degree() == Some(0), "determinant {:?} is not a unit multiple of t⁴+4", u.coeffs());
        return Ok(());
    }
    Err("no branch has two linear equations in (x, y) with coefficients in t".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("Borromean raw solutions and two classes", criterion_1),
        ("coloring values and reference fingerprint", criterion_2),
        ("conjugate pairing and mirror swap", criterion_3),
        ("relator verification", criterion_4),
        ("simplified presentations", criterion_5),
        ("finite coloring counts", criterion_6),
        ("property suites", criterion_7),
        ("matrix map identities", criterion_8),
        ("elimination determinant", criterion_9),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (desc, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS - {desc} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL - {desc} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
