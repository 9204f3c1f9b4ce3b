//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Each check compares the library against an independent
//! computation or a known closed form.

mod common;

use std::path::Path;
use std::time::{Duration, Instant};

use hypertopo::doc::ModelDocument;
use hypertopo_core::covers::fixtures::{grid_klein_bottle, grid_torus, six_vertex_projective_plane};
use hypertopo_core::covers::{
    cover_is_orientable, orientation_character, oriented_double_cover, CombinatorialManifold,
};
use hypertopo_core::duality::{dual_map, reciprocal_eigen_check, DegreeSign};
use hypertopo_core::homology::{
    build_standard_space, homology, les_rank_solver, ArrowConstraint, ExactSequenceSpec, HomologyGroup, HomologyMode,
    StandardSpace,
};
use hypertopo_core::lefschetz::{
    fixed_point_index, lefschetz_number, solenoid_count, solenoid_family, toral_induced_family,
    toral_periodic_points_bruteforce, HyperbolicFixedPointData,
};
use hypertopo_core::linalg::real_roots::rat;
use hypertopo_core::linalg::{char_poly, char_poly_rat, is_roots_of_unity_only, IntMatrix, IntPoly, RatMatrix};
use hypertopo_core::structure::{permutation_h0_eigen, theorem_check, Step, Verdict};
use hypertopo_core::{BigInt, BigRational};
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, body: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let summary = body()?;
    let took = t.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{summary} in {:.3}s", took.as_secs_f64()))
}

/// Relative ranks of a bounded pair from the exact sequence, fed with the
/// absolute ranks of `X` and `A` and the listed arrow constraints.
fn relative_ranks_by_les(space: StandardSpace, constraints: &[(&str, ArrowConstraint)]) -> Result<Vec<usize>, String> {
    let pair = build_standard_space(space).map_err(|e| e.to_string())?;
    let x: Vec<usize> = homology(&pair, HomologyMode::Absolute).iter().map(|g| g.free_rank).collect();
    let a: Vec<usize> = pair.subcomplex_homology().iter().map(|g| g.free_rank).collect();
    let mut spec = ExactSequenceSpec::pair_sequence(&x, &a).map_err(|e| e.to_string())?;
    for (from, c) in constraints {
        spec = spec.constrain(from, *c).map_err(|e| e.to_string())?;
    }
    let sol = les_rank_solver(&spec).map_err(|e| e.to_string())?;
    (0..x.len())
        .map(|k| sol.rank_of(&spec, &format!("H{k}(X,A)")).ok_or_else(|| format!("H{k}(X,A) undetermined")))
        .collect()
}

fn relative_by_snf(space: StandardSpace) -> Result<Vec<HomologyGroup>, String> {
    let pair = build_standard_space(space).map_err(|e| e.to_string())?;
    Ok(homology(&pair, HomologyMode::Relative))
}

fn check_pair(space: StandardSpace, expected: &[usize], constraints: &[(&str, ArrowConstraint)]) -> Result<(), String> {
    let want: Vec<HomologyGroup> = expected.iter().map(|&r| HomologyGroup::free(r)).collect();
    let snf = relative_by_snf(space)?;
    ensure(snf == want, || format!("{space:?}: SNF gives {snf:?}"))?;
    let les = relative_ranks_by_les(space, constraints)?;
    ensure(les == expected, || format!("{space:?}: exact sequence gives {les:?}"))
}

fn criterion_1() -> Outcome {
    use ArrowConstraint::*;
    timed(Duration::from_secs(1), || {
        for g in 0..=5 {
            // Degrees 0..=3: H_0 = 0, H_1 = 0, H_2 = Z^g, H_3 = Z.
            check_pair(StandardSpace::Handlebody { genus: g }, &[0, 0, g, 1], &[("H1(A)", Epi), ("H0(A)", Rank(1))])?;
        }
        Ok("handlebody pairs g = 0..5 agree by SNF and exact sequence".into())
    })
}

fn criterion_2() -> Outcome {
    use ArrowConstraint::*;
    check_pair(
        StandardSpace::TorusTimesInterval,
        &[0, 1, 2, 1],
        &[("H2(A)", Epi), ("H1(A)", Epi), ("H0(A)", Rank(1))],
    )?;
    Ok("torus-times-interval pair is (Z, Z^2, Z, 0) by both paths".into())
}

fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows)
}

fn criterion_3() -> Outcome {
    let suite = [
        int_matrix(&[&[2, 1], &[1, 1]]),
        int_matrix(&[&[1, 1], &[1, 0]]),
        int_matrix(&[&[3, 2], &[1, 1]]),
        int_matrix(&[&[0, 1], &[1, 3]]),
        int_matrix(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]),
        int_matrix(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 1]]),
    ];
    timed(Duration::from_secs(10), || {
        for a in &suite {
            let p = char_poly(a).map_err(|e| e.to_string())?;
            ensure(!hypertopo_core::linalg::real_roots::has_unit_circle_root(&p.to_rational()), || {
                format!("{a} is not hyperbolic")
            })?;
            let family = toral_induced_family(a).map_err(|e| e.to_string())?;
            for m in 1..=10u32 {
                let by_traces = lefschetz_number(&family, m).abs();
                let by_lattice = toral_periodic_points_bruteforce(a, m).map_err(|e| e.to_string())?;
                let am = a.pow(m).map_err(|e| e.to_string())?;
                let by_det =
                    am.try_sub(&IntMatrix::identity(a.rows())).and_then(|d| d.det()).map_err(|e| e.to_string())?.abs();
                ensure(by_traces == by_lattice && by_lattice == by_det, || {
                    format!("{a}, m = {m}: traces {by_traces}, lattice {by_lattice}, det {by_det}")
                })?;
            }
        }
        Ok(format!("{} hyperbolic matrices, m = 1..10, three counts agree", suite.len()))
    })
}

fn criterion_4() -> Outcome {
    let family = solenoid_family();
    for m in 1..=20u32 {
        let closed = (1u64 << m) - 1;
        let formula = lefschetz_number(&family, m).abs();
        let brute = solenoid_count(m).map_err(|e| e.to_string())?;
        ensure(formula == BigInt::from(closed) && brute == closed, || {
            format!("m = {m}: formula {formula}, enumeration {brute}, expected {closed}")
        })?;
    }
    Ok("solenoid counts 2^m - 1 for m = 1..20".into())
}

/// A random hyperbolic derivative `P D P^-1` with its unstable dimension
/// and orientation sign read off the block structure of `D`.
fn random_hyperbolic(rng: &mut ChaCha8Rng) -> (RatMatrix, usize, i8) {
    let n = rng.gen_range(1..=4usize);
    let mut d = RatMatrix::zeros(n, n);
    let (mut u, mut delta) = (0usize, 1i8);
    let mut i = 0;
    while i < n {
        if i + 1 < n && rng.gen_bool(0.4) {
            // Rotation-scaling block with eigenvalues a ± bi.
            let a = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
            let b = rat(rng.gen_range(1..=6), rng.gen_range(1..=4));
            let modulus = &a * &a + &b * &b;
            if modulus == BigRational::one() {
                continue;
            }
            if modulus > BigRational::one() {
                u += 2;
            }
            d[(i, i)] = a.clone();
            d[(i + 1, i + 1)] = a;
            d[(i, i + 1)] = -b.clone();
            d[(i + 1, i)] = b;
            i += 2;
        } else {
            let r = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
            if r.abs() == BigRational::one() || r.is_zero() {
                continue;
            }
            if r.abs() > BigRational::one() {
                u += 1;
                if r.is_negative() {
                    delta = -delta;
                }
            }
            d[(i, i)] = r;
            i += 1;
        }
    }
    loop {
        let entries = (0..n * n).map(|_| rat(rng.gen_range(-3..=3), 1)).collect();
        let p = RatMatrix::from_vec(n, n, entries).unwrap();
        if let Ok(pinv) = p.inverse() {
            let df = p.try_mul(&d).and_then(|x| x.try_mul(&pinv)).unwrap();
            return (df, u, delta);
        }
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = 120;
    for c in 0..cases {
        let (df, u, delta) = random_hyperbolic(&mut rng);
        let data = HyperbolicFixedPointData::new(df.clone()).map_err(|e| format!("case {c}: {e}"))?;
        let idx = fixed_point_index(&data);
        let det = RatMatrix::identity(df.rows()).try_sub(&df).and_then(|m| m.det()).map_err(|e| e.to_string())?;
        let sign: i8 = if det.is_positive() { 1 } else { -1 };
        let predicted = if u % 2 == 0 { delta } else { -delta };
        ensure(
            idx.index == sign
                && idx.unstable_dimension == u
                && idx.orientation_sign == delta
                && sign == predicted
                && idx.decomposition_agrees,
            || format!("case {c}: Df = {df}, got {idx:?}, expected u = {u}, orientation {delta}, sign {sign}"),
        )?;
    }
    Ok(format!("{cases} random hyperbolic derivatives up to 4x4 agree"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(1..=4usize);
        let entries = (0..n * n).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect();
        let a = RatMatrix::from_vec(n, n, entries).unwrap();
        if a.det().map_err(|e| e.to_string())?.is_zero() {
            continue;
        }
        for sign in [DegreeSign::Plus, DegreeSign::Minus] {
            let b = dual_map(&a, sign).map_err(|e| e.to_string())?;
            let want = RatMatrix::identity(n).scale(&rat(sign.value(), 1));
            let product = b.transpose().try_mul(&a).map_err(|e| e.to_string())?;
            ensure(product == want, || format!("A = {a}, sign {sign}: B^T A = {product}"))?;
            let pa = char_poly_rat(&a).map_err(|e| e.to_string())?;
            let pb = char_poly_rat(&b).map_err(|e| e.to_string())?;
            ensure(reciprocal_eigen_check(&pa, &pb, sign).map_err(|e| e.to_string())?, || {
                format!("A = {a}, sign {sign}: spectra not reciprocal")
            })?;
        }
        done += 1;
    }
    Ok(format!("{done} invertible matrices, both signs"))
}

fn deck_free(base: &CombinatorialManifold) -> Result<bool, String> {
    let dc = oriented_double_cover(base).map_err(|e| e.to_string())?;
    Ok((0..=dc.cover.dimension())
        .all(|k| (0..dc.cover.faces(k).len()).all(|c| dc.deck.image(k, c).map(|x| x.0) != Some(c))))
}

fn criterion_7() -> Outcome {
    let surface = |tops: Vec<Vec<usize>>| CombinatorialManifold::from_simplices(2, &tops).map_err(|e| e.to_string());
    let groups = |ranks: &[usize]| ranks.iter().map(|&r| HomologyGroup::free(r)).collect::<Vec<_>>();
    for (name, base, chi, h, components) in [
        ("rp2", surface(six_vertex_projective_plane())?, 2, groups(&[1, 0, 1]), 1),
        ("klein bottle", surface(grid_klein_bottle(3))?, 0, groups(&[1, 2, 1]), 1),
        ("torus", surface(grid_torus(3))?, 0, groups(&[2, 4, 2]), 2),
    ] {
        let dc = oriented_double_cover(&base).map_err(|e| e.to_string())?;
        let got_h = homology(dc.cover.complex(), HomologyMode::Absolute);
        let got_components = orientation_character(&dc.cover).components;
        ensure(
            dc.cover.euler_characteristic() == chi
                && got_h == h
                && got_components == components
                && cover_is_orientable(&dc)
                && deck_free(&base)?,
            || format!("{name}: chi {}, H {got_h:?}, {got_components} components", dc.cover.euler_characteristic()),
        )?;
        if components == 2 {
            // Each sheet is a copy of the base.
            ensure(dc.cover.top_cells().len() == 2 * base.top_cells().len(), || format!("{name}: sheets differ"))?;
        }
    }
    Ok("covers of rp2, klein bottle and torus".into())
}

fn cycle_type_poly(perm: &[usize]) -> IntPoly {
    let mut seen = vec![false; perm.len()];
    let mut p = IntPoly::one();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            let mut c = vec![0i64; len + 1];
            c[0] = -1;
            c[len] = 1;
            p = p.mul(&IntPoly::from_i64(&c));
        }
    }
    p
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for c in 0..500 {
        let n = rng.gen_range(1..=12usize);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let s = permutation_h0_eigen(n, &perm).map_err(|e| e.to_string())?;
        let kronecker = is_roots_of_unity_only(&s.char_poly).map_err(|e| e.to_string())?;
        ensure(
            s.char_poly == cycle_type_poly(&perm)
                && s.real_eigenvalues.contains(&1)
                && s.real_eigenvalues.iter().all(|&l| l == 1 || l == -1)
                && s.roots_of_unity_only
                && kronecker,
            || format!("case {c}: permutation {perm:?} gives {s:?}"),
        )?;
    }
    Ok("500 permutation actions have real eigenvalues in {-1, 1}".into())
}

fn criterion_9() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let load = |name: &str| -> Result<_, String> {
        match ModelDocument::read(&dir.join(format!("{name}.model"))).map_err(|e| e.to_string())? {
            ModelDocument::StructureModel(d) => theorem_check(&d.to_model()).map_err(|e| e.to_string()),
            _ => Err(format!("{name} is not a structure model")),
        }
    };
    for name in ["plykin_s3", "da_t3"] {
        let r = load(name)?;
        ensure(r.verdict == Verdict::Consistent, || format!("{name}: {}", r.verdict))?;
    }
    let forbidden = [
        Step::EqualIndex,
        Step::LefschetzCounting,
        Step::ExcludeDegree0,
        Step::ExcludeDegree3,
        Step::ExcludeDegree1,
        Step::ExcludeDegree2,
    ];
    for (name, cover_step) in
        [("orientable_solenoid", false), ("anosov_torus", false), ("nonorientable_ambient_solenoid", true)]
    {
        let r = load(name)?;
        let steps: Vec<Step> = r.steps().into_iter().filter(|s| *s != Step::PeriodicGrowth).collect();
        let mut want = forbidden.to_vec();
        if cover_step {
            want.push(Step::DoubleCoverReduction);
        }
        ensure(r.verdict == Verdict::Contradiction && steps == want, || {
            format!("{name}: {} with steps {steps:?}", r.verdict)
        })?;
    }
    Ok("fixture verdicts and step traces".into())
}

fn criterion_10() -> Outcome {
    let dir = common::golden_dir();
    for (name, args) in common::CASES {
        let first = common::invoke(args);
        let second = common::invoke(args);
        let golden = std::fs::read_to_string(dir.join(format!("{name}.txt"))).map_err(|e| format!("{name}: {e}"))?;
        ensure(first == second && first == golden, || format!("{name} differs between runs or from its golden"))?;
    }
    Ok(format!("{} golden outputs reproduced twice", common::CASES.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("handlebody pair homology", criterion_1),
        ("torus-times-interval pair homology", criterion_2),
        ("toral periodic point counts", criterion_3),
        ("solenoid periodic point counts", criterion_4),
        ("fixed point index decomposition", criterion_5),
        ("duality transport", criterion_6),
        ("orientation double covers", criterion_7),
        ("permutation actions on H^0", criterion_8),
        ("attractor structure checker", criterion_9),
        ("golden determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
