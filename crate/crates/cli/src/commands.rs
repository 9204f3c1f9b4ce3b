use std::path::{Path, PathBuf};

use hypertopo_core::covers::{
    cover_is_orientable, lift_map, orientation_character, oriented_double_cover, CellularMap, LiftOutcome,
};
use hypertopo_core::duality::{dual_map, reciprocal_eigen_check, DegreeSign, DualPairing};
use hypertopo_core::homology::{
    build_standard_space, euler_characteristic_of, homology, les_rank_solver, ChainComplexPair, HomologyGroup,
    HomologyMode, LesStatus, StandardSpace,
};
use hypertopo_core::lefschetz::{
    fixed_point_index, lefschetz_number, periodic_count_formula, solenoid_count, solenoid_family, toral_induced_family,
    toral_periodic_points_bruteforce, verify_lefschetz_hopf, HyperbolicFixedPointData, InducedMapFamily,
};
use hypertopo_core::linalg::{
    char_poly, char_poly_rat, exterior_power, is_roots_of_unity_only, smith_normal_form, spectral_radius_exceeds_one,
    IntMatrix, RatMatrix, MATRIX_SIZE_LIMIT,
};
use hypertopo_core::structure::{
    eigenvalue_budget, pair_ledger, smale_order, theorem_check, SmaleOrder, StructureModel,
};
use hypertopo_core::{covers, BigInt, BigRational, Error};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::doc::{int_rows, parse_int_matrix_arg, parse_matrix_arg, rat_rows, ModelDocument};
use crate::report::{agree, yes_no, Report};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn count(x: usize) -> Value {
    Value::String(x.to_string())
}

fn check_size<T: hypertopo_core::linalg::Scalar>(m: &hypertopo_core::linalg::Matrix<T>) -> Result<()> {
    if m.rows() > MATRIX_SIZE_LIMIT || m.cols() > MATRIX_SIZE_LIMIT {
        return Err(Error::TooLarge { limit: MATRIX_SIZE_LIMIT }.into());
    }
    Ok(())
}

fn wrong_kind(cmd: &str, wanted: &str, doc: &ModelDocument) -> CliError {
    CliError::Usage(format!("{cmd} takes {wanted}, got a {} document", doc.kind()))
}

fn one_source(file: Option<&Path>, flags: &[(&str, bool)]) -> Result<()> {
    let given = usize::from(file.is_some()) + flags.iter().filter(|f| f.1).count();
    if given != 1 {
        let names: Vec<String> = flags.iter().map(|f| format!("--{}", f.0)).collect();
        return Err(CliError::Usage(format!("give exactly one of FILE, {}", names.join(", "))));
    }
    Ok(())
}

fn usage(e: String) -> CliError {
    CliError::Usage(e)
}

pub fn snf(file: Option<&Path>, matrix: Option<&str>) -> Result<Report> {
    one_source(file, &[("matrix", matrix.is_some())])?;
    let mats: Vec<(String, IntMatrix)> = match (file, matrix) {
        (_, Some(m)) => vec![("matrix".into(), parse_int_matrix_arg(m).map_err(usage)?)],
        (Some(p), _) => match ModelDocument::read(p)? {
            ModelDocument::ToralMap(d) => vec![("matrix".into(), d.to_matrix()?)],
            ModelDocument::ChainPair(d) => {
                let pair = d.to_pair()?;
                (1..=pair.top_dimension()).map(|k| (format!("d_{k}"), pair.boundary(k).clone())).collect()
            }
            other => return Err(wrong_kind("snf", "a toral_map or chain_pair document", &other)),
        },
        _ => unreachable!(),
    };
    let mut r = Report::new("snf");
    let mut out = Vec::new();
    for (name, m) in &mats {
        let s = smith_normal_form(m);
        let ok = s.u.try_mul(m).and_then(|x| x.try_mul(&s.v)).map(|x| x == s.d).unwrap_or(false);
        let factors: Vec<String> = s.invariant_factors().iter().map(ToString::to_string).collect();
        let torsion: Vec<String> = s.torsion().iter().map(ToString::to_string).collect();
        r.line(format!("{name} ({}x{}):", m.rows(), m.cols()));
        r.line(format!("  invariant factors: {}", if factors.is_empty() { "none".into() } else { factors.join(" ") }));
        r.line(format!("  rank: {}", s.rank()));
        r.line(format!("  torsion: {}", if torsion.is_empty() { "none".into() } else { torsion.join(" ") }));
        r.line(format!("  U M V = D: {}", agree(ok)));
        out.push(json!({
            "name": name,
            "invariant_factors": s.invariant_factors().iter().map(int).collect::<Vec<_>>(),
            "rank": count(s.rank()),
            "torsion": s.torsion().iter().map(int).collect::<Vec<_>>(),
            "d": int_rows(&s.d),
            "agree": ok,
        }));
    }
    r.set("matrices", out);
    Ok(r)
}

fn square_int_input(cmd: &str, file: Option<&Path>, matrix: Option<&str>) -> Result<IntMatrix> {
    one_source(file, &[("matrix", matrix.is_some())])?;
    let m = match (file, matrix) {
        (_, Some(m)) => parse_int_matrix_arg(m).map_err(usage)?,
        (Some(p), _) => match ModelDocument::read(p)? {
            ModelDocument::ToralMap(d) => d.to_matrix()?,
            other => return Err(wrong_kind(cmd, "a toral_map document", &other)),
        },
        _ => unreachable!(),
    };
    check_size(&m)?;
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    Ok(m)
}

pub fn charpoly(file: Option<&Path>, matrix: Option<&str>) -> Result<Report> {
    let a = square_int_input("charpoly", file, matrix)?;
    let p = char_poly(&a)?;
    let n = a.rows();
    let mut alt = BigInt::zero();
    for k in 0..=n {
        let t = exterior_power(&a, k)?.trace();
        if k % 2 == 0 {
            alt += t
        } else {
            alt -= t
        }
    }
    let det = IntMatrix::identity(n).try_sub(&a)?.det()?;
    let at_one = p.eval(&BigInt::one());
    let grows = spectral_radius_exceeds_one(&p)?;
    let unity = is_roots_of_unity_only(&p)?;
    let ok = alt == det && at_one == det;
    let mut r = Report::new("charpoly");
    r.line(format!("matrix: {a}"));
    r.line(format!("characteristic polynomial: {p}"));
    r.line(format!("spectral radius > 1: {}", yes_no(grows)));
    r.line(format!("roots of unity only: {}", yes_no(unity)));
    r.line(format!("sum (-1)^k tr L^k A = {alt}"));
    r.line(format!("p(1) = {at_one}"));
    r.line(format!("det(I - A) = {det}"));
    r.line(agree(ok));
    r.set("matrix", json!(int_rows(&a)))
        .set("coefficients", p.coeffs().iter().map(int).collect::<Vec<_>>())
        .set("spectral_radius_exceeds_one", grows)
        .set("roots_of_unity_only", unity)
        .set("alternating_trace", int(&alt))
        .set("det_i_minus_a", int(&det))
        .set("agree", ok);
    Ok(r)
}

fn groups_json(groups: &[HomologyGroup]) -> Value {
    groups
        .iter()
        .enumerate()
        .map(|(k, g)| {
            json!({
                "degree": k,
                "free_rank": count(g.free_rank),
                "torsion": g.torsion.iter().map(int).collect::<Vec<_>>(),
            })
        })
        .collect()
}

pub fn homology_cmd(
    file: Option<&Path>,
    space: Option<&str>,
    genus: Option<usize>,
    n: Option<usize>,
    relative: bool,
) -> Result<Report> {
    one_source(file, &[("space", space.is_some())])?;
    let (name, pair): (String, ChainComplexPair) = match (file, space) {
        (_, Some(s)) => {
            let param = match (genus, n) {
                (Some(_), Some(_)) => return Err(usage("give at most one of --genus, --n".into())),
                (g, n) => g.or(n),
            };
            let sp = StandardSpace::from_name(s, param)?;
            (describe_space(sp), build_standard_space(sp)?)
        }
        (Some(p), _) => match ModelDocument::read(p)? {
            ModelDocument::ChainPair(d) => (p.display().to_string(), d.to_pair()?),
            other => return Err(wrong_kind("homology", "a chain_pair document", &other)),
        },
        _ => unreachable!(),
    };
    let mode = if relative { HomologyMode::Relative } else { HomologyMode::Absolute };
    let groups = homology(&pair, mode);
    let from_cells = pair.euler_characteristic(mode);
    let from_groups = euler_characteristic_of(&groups);
    let mut r = Report::new("homology");
    r.line(format!("space: {name}"));
    r.line(format!("mode: {}", if relative { "relative" } else { "absolute" }));
    for (k, g) in groups.iter().enumerate() {
        r.line(format!("H_{k} = {g}"));
    }
    r.line(format!(
        "euler characteristic: cells {from_cells}, homology {from_groups} {}",
        agree(from_cells == from_groups)
    ));
    let mut additive = true;
    if relative {
        let x = euler_characteristic_of(&homology(&pair, HomologyMode::Absolute));
        let a = euler_characteristic_of(&pair.subcomplex_homology());
        additive = x == a + from_groups;
        r.line(format!("chi(X) = chi(A) + chi(X,A): {x} = {a} + {from_groups} {}", agree(additive)));
    }
    r.set("space", name)
        .set("mode", if relative { "relative" } else { "absolute" })
        .set("groups", groups_json(&groups))
        .set("euler_characteristic", from_groups.to_string())
        .set("agree", from_cells == from_groups && additive);
    Ok(r)
}

fn describe_space(s: StandardSpace) -> String {
    match s {
        StandardSpace::Surface { genus } | StandardSpace::Handlebody { genus } => {
            format!("{} (genus {genus})", s.name())
        }
        StandardSpace::Torus { n } => format!("{} (n = {n})", s.name()),
        _ => s.name().to_string(),
    }
}

pub fn les(file: &Path) -> Result<Report> {
    let spec = match ModelDocument::read(file)? {
        ModelDocument::ExactSequence(d) => d.to_spec()?,
        other => return Err(wrong_kind("les", "an exact_sequence document", &other)),
    };
    let sol = les_rank_solver(&spec)?;
    let show = |x: Option<usize>| x.map_or("?".to_string(), |v| v.to_string());
    let mut r = Report::new("les");
    let mut terms = Vec::new();
    for (i, t) in spec.terms.iter().enumerate() {
        r.line(format!("{}: rank {}", t.label, show(sol.term_ranks[i])));
        if i + 1 < spec.terms.len() {
            r.line(format!("  -> map rank {}", show(sol.arrow_ranks[i])));
        }
        terms.push(json!({
            "label": t.label,
            "rank": sol.term_ranks[i].map(count),
        }));
    }
    let status = match &sol.status {
        LesStatus::Determined => "determined".to_string(),
        LesStatus::Underdetermined(ix) => {
            let labels: Vec<&str> = ix.iter().map(|&i| spec.terms[i].label.as_str()).collect();
            format!("underdetermined: {}", labels.join(", "))
        }
    };
    r.line(format!("status: {status}"));
    r.set("terms", terms)
        .set("map_ranks", sol.arrow_ranks.iter().map(|x| x.map(count)).collect::<Vec<_>>())
        .set("status", status);
    Ok(r)
}

enum MapSource {
    Toral(IntMatrix),
    Family(String, InducedMapFamily, crate::doc::InducedFamilyDoc),
    Solenoid,
}

fn map_source(cmd: &str, file: Option<&Path>, matrix: Option<&str>, solenoid: bool) -> Result<MapSource> {
    one_source(file, &[("matrix", matrix.is_some()), ("solenoid", solenoid)])?;
    if solenoid {
        return Ok(MapSource::Solenoid);
    }
    if let Some(m) = matrix {
        let a = parse_int_matrix_arg(m).map_err(usage)?;
        check_size(&a)?;
        return Ok(MapSource::Toral(a));
    }
    let p = file.expect("checked");
    match ModelDocument::read(p)? {
        ModelDocument::ToralMap(d) => {
            let a = d.to_matrix()?;
            check_size(&a)?;
            Ok(MapSource::Toral(a))
        }
        ModelDocument::InducedFamily(d) => {
            let f = d.to_family()?;
            Ok(MapSource::Family(p.display().to_string(), f, d))
        }
        other => Err(wrong_kind(cmd, "a toral_map or induced_family document", &other)),
    }
}

impl MapSource {
    fn family(&self) -> Result<InducedMapFamily> {
        Ok(match self {
            MapSource::Toral(a) => toral_induced_family(a)?,
            MapSource::Family(_, f, _) => f.clone(),
            MapSource::Solenoid => solenoid_family(),
        })
    }

    fn describe(&self) -> String {
        match self {
            MapSource::Toral(a) => format!("toral automorphism {a}"),
            MapSource::Family(name, ..) => format!("induced family from {name}"),
            MapSource::Solenoid => "solenoid map of the solid torus".into(),
        }
    }
}

pub fn lefschetz(file: Option<&Path>, matrix: Option<&str>, solenoid: bool, m: u32) -> Result<Report> {
    let src = map_source("lefschetz", file, matrix, solenoid)?;
    let fam = src.family()?;
    let mut r = Report::new("lefschetz");
    r.line(format!("map: {}", src.describe()));
    let mut traces = Vec::new();
    for (k, a) in fam.maps().iter().enumerate() {
        let t = a.pow(m)?.trace();
        r.line(format!("tr f_{k}^{m} = {t}"));
        traces.push(int(&t));
    }
    let l = lefschetz_number(&fam, m);
    r.line(format!("L(f^{m}) = {l}"));
    r.set("map", src.describe()).set("m", m).set("traces", traces).set("lefschetz", int(&l));
    Ok(r)
}

pub fn count_cmd(file: Option<&Path>, matrix: Option<&str>, solenoid: bool, m: u32) -> Result<Report> {
    if m == 0 {
        return Err(Error::ZeroIterate.into());
    }
    let src = map_source("count", file, matrix, solenoid)?;
    let fam = src.family()?;
    let formula = periodic_count_formula(&fam, m);
    let mut r = Report::new("count");
    let mut extra: Vec<String> = Vec::new();
    let oracle: Option<BigInt> = match &src {
        MapSource::Toral(a) => {
            let det = a.pow(m)?.try_sub(&IntMatrix::identity(a.rows()))?.det()?.abs();
            extra.push(format!("|det(A^{m} - I)| = {det}"));
            r.set("determinant", int(&det));
            Some(toral_periodic_points_bruteforce(a, m)?)
        }
        MapSource::Solenoid => Some(BigInt::from(solenoid_count(m)?)),
        MapSource::Family(..) => None,
    };
    let ok = oracle.as_ref().map(|o| *o == formula.count);
    r.line(format!("N_{m} = {}", formula.count));
    r.line(format!("map: {}", src.describe()));
    r.line(format!("L(f^{m}) = {}", formula.lefschetz));
    r.line(format!("formula |L(f^{m})| = {} (assumes equal indices)", formula.count));
    for e in extra {
        r.line(e);
    }
    match (&oracle, ok) {
        (Some(o), Some(ok)) => {
            let how =
                if matches!(src, MapSource::Solenoid) { "doubling-map enumeration" } else { "lattice enumeration" };
            r.line(format!("oracle ({how}) = {o}"));
            r.line(agree(ok));
        }
        _ => {
            r.line("oracle: none for an abstract family");
        }
    }
    r.set("map", src.describe())
        .set("m", m)
        .set("lefschetz", int(&formula.lefschetz))
        .set("formula", int(&formula.count))
        .set("oracle", oracle.as_ref().map(int))
        .set("agree", ok);
    Ok(r)
}

pub fn index(file: Option<&Path>, df: Option<&str>) -> Result<Report> {
    one_source(file, &[("df", df.is_some())])?;
    let d: RatMatrix = match (file, df) {
        (_, Some(s)) => parse_matrix_arg(s).map_err(usage)?,
        (Some(p), _) => match ModelDocument::read(p)? {
            ModelDocument::ToralMap(d) => d.to_matrix()?.to_rational(),
            other => return Err(wrong_kind("index", "a toral_map document", &other)),
        },
        _ => unreachable!(),
    };
    check_size(&d)?;
    let data = HyperbolicFixedPointData::new(d.clone())?;
    let ix = fixed_point_index(&data);
    let parity: i8 = if ix.unstable_dimension.is_multiple_of(2) { 1 } else { -1 };
    let mut r = Report::new("index");
    r.line(format!("Df: {d}"));
    r.line(format!("characteristic polynomial: {}", char_poly_rat(&d)?));
    r.line(format!("unstable dimension: {}", ix.unstable_dimension));
    r.line(format!("orientation sign: {:+}", ix.orientation_sign));
    r.line(format!("sign det(I - Df) = {:+}", ix.index));
    r.line(format!("(-1)^u * orientation sign = {:+}", parity * ix.orientation_sign));
    r.line(agree(ix.decomposition_agrees));
    r.set("df", json!(rat_rows(&d)))
        .set("unstable_dimension", ix.unstable_dimension)
        .set("orientation_sign", ix.orientation_sign.to_string())
        .set("index", ix.index.to_string())
        .set("agree", ix.decomposition_agrees);
    Ok(r)
}

/// Fixed points with identical derivative are reported once with a multiplicity.
const MAX_VERIFY_POINTS: usize = 1_000_000;

pub fn verify(file: Option<&Path>, matrix: Option<&str>, solenoid: bool, m: u32) -> Result<Report> {
    if m == 0 {
        return Err(Error::ZeroIterate.into());
    }
    let src = map_source("verify", file, matrix, solenoid)?;
    let fam = src.family()?;
    // (derivative of f^m, number of fixed points carrying it)
    let groups: Vec<(RatMatrix, usize)> = match &src {
        MapSource::Toral(a) => {
            let n = toral_periodic_points_bruteforce(a, m)?;
            let n = usize::try_from(&n)
                .ok()
                .filter(|&n| n <= MAX_VERIFY_POINTS)
                .ok_or_else(|| Error::EnumerationLimit(format!("{n} fixed points exceed {MAX_VERIFY_POINTS}")))?;
            vec![(a.pow(m)?.to_rational(), n)]
        }
        MapSource::Solenoid => {
            let n = solenoid_count(m)? as usize;
            let shrink = BigRational::new(BigInt::one(), BigInt::from(10).pow(m));
            let mut d = RatMatrix::zeros(3, 3);
            d[(0, 0)] = shrink.clone();
            d[(1, 1)] = shrink;
            d[(2, 2)] = BigRational::from_integer(BigInt::from(2).pow(m));
            vec![(d, n)]
        }
        MapSource::Family(_, _, doc) => doc
            .fixed_point_derivatives(m)?
            .ok_or_else(|| usage(format!("the document lists no fixed points of f^{m}")))?
            .into_iter()
            .map(|d| (d, 1))
            .collect(),
    };
    let mut points = Vec::new();
    for (d, n) in &groups {
        let data = HyperbolicFixedPointData::new(d.clone())?;
        points.extend(std::iter::repeat_n(data, *n));
    }
    let hopf = verify_lefschetz_hopf(&fam, &points, m)?;
    let agreeing = hopf.indices.iter().all(|i| i.decomposition_agrees);
    let mut r = Report::new("verify");
    r.line(format!("map: {}", src.describe()));
    r.line(format!("m: {m}"));
    r.line(format!("fixed points of f^{m}: {}", points.len()));
    r.line(format!("index decompositions: {}", agree(agreeing)));
    r.line(format!("sum of indices = {}", hopf.index_sum));
    r.line(format!("L(f^{m}) = {}", hopf.lefschetz));
    r.line(agree(hopf.agrees));
    r.set("map", src.describe())
        .set("m", m)
        .set("fixed_points", count(points.len()))
        .set("index_sum", int(&hopf.index_sum))
        .set("lefschetz", int(&hopf.lefschetz))
        .set("agree", hopf.agrees && agreeing);
    Ok(r)
}

pub fn dual(file: Option<&Path>, matrix: Option<&str>, sign: &str, pairing: Option<&str>) -> Result<Report> {
    one_source(file, &[("matrix", matrix.is_some())])?;
    let a: RatMatrix = match (file, matrix) {
        (_, Some(s)) => parse_matrix_arg(s).map_err(usage)?,
        (Some(p), _) => match ModelDocument::read(p)? {
            ModelDocument::ToralMap(d) => d.to_matrix()?.to_rational(),
            other => return Err(wrong_kind("dual", "a toral_map document", &other)),
        },
        _ => unreachable!(),
    };
    check_size(&a)?;
    let s: i64 = sign.trim().trim_start_matches('+').parse().map_err(|_| usage(format!("bad sign {sign:?}")))?;
    let s = DegreeSign::try_from(s)?;
    let pair = match pairing {
        Some(g) => DualPairing::new(parse_int_matrix_arg(g).map_err(usage)?, s)?,
        None => DualPairing::dual_bases(a.rows(), s),
    };
    let b = match pairing {
        Some(_) => pair.transport(&a)?,
        None => dual_map(&a, s)?,
    };
    let preserved = pair.preserves(&a, &b);
    let (pa, pb) = (char_poly_rat(&a)?, char_poly_rat(&b)?);
    let reciprocal = reciprocal_eigen_check(&pa, &pb, s)?;
    let mut r = Report::new("dual");
    r.line(format!("A: {a}"));
    r.line(format!("sign: {s}"));
    r.line(format!("B: {b}"));
    r.line(format!("B^T G A = sign G: {}", agree(preserved)));
    r.line(format!("char poly A: {pa}"));
    r.line(format!("char poly B: {pb}"));
    r.line(format!("eigenvalues of B are sign / eigenvalues of A: {}", agree(reciprocal)));
    r.set("a", json!(rat_rows(&a)))
        .set("b", json!(rat_rows(&b)))
        .set("sign", s.value().to_string())
        .set("preserves_pairing", preserved)
        .set("reciprocal", reciprocal)
        .set("agree", preserved && reciprocal);
    Ok(r)
}

pub fn cover(file: Option<&Path>, surface: Option<&str>) -> Result<Report> {
    one_source(file, &[("surface", surface.is_some())])?;
    let (tops, map) = match (file, surface) {
        (_, Some(name)) => {
            let tops = match name {
                "rp2" => covers::fixtures::six_vertex_projective_plane(),
                "klein_bottle" => covers::fixtures::grid_klein_bottle(3),
                "torus" => covers::fixtures::grid_torus(3),
                other => return Err(usage(format!("unknown surface {other:?} (rp2, klein_bottle, torus)"))),
            };
            (crate::doc::CoverInputDoc { dimension: 2, simplices: tops, map: None }, None)
        }
        (Some(p), _) => match ModelDocument::read(p)? {
            ModelDocument::CoverInput(d) => {
                let map = d.map.clone();
                (d, map)
            }
            other => return Err(wrong_kind("cover", "a cover_input document", &other)),
        },
        _ => unreachable!(),
    };
    let base = tops.to_manifold()?;
    let ch = orientation_character(&base);
    let dc = oriented_double_cover(&base)?;
    let cover_groups = homology(dc.cover.complex(), HomologyMode::Absolute);
    let cover_ch = orientation_character(&dc.cover);
    let deck_free = (0..=dc.cover.dimension())
        .all(|k| (0..dc.cover.faces(k).len()).all(|c| dc.deck.image(k, c).map(|x| x.0) != Some(c)));
    let mut r = Report::new("cover");
    r.line(format!(
        "base: dimension {}, {} vertices, {} top cells",
        base.dimension(),
        base.vertex_count(),
        base.top_cells().len()
    ));
    r.line(format!("base closed: {}", yes_no(base.is_closed())));
    r.line(format!("base orientable: {}", yes_no(ch.orientable)));
    r.line(format!("base components: {}", ch.components));
    r.line(format!("base euler characteristic: {}", base.euler_characteristic()));
    if let Some(lp) = &ch.reversing_loop {
        let cells: Vec<String> = lp
            .iter()
            .map(|&t| base.top_cells()[t].iter().map(ToString::to_string).collect::<Vec<_>>().join("-"))
            .collect();
        r.line(format!("orientation-reversing loop: {}", cells.join(" ")));
    }
    r.line(format!("cover: {} vertices, {} top cells", dc.cover.vertex_count(), dc.cover.top_cells().len()));
    r.line(format!("cover euler characteristic: {}", dc.cover.euler_characteristic()));
    for (k, g) in cover_groups.iter().enumerate() {
        r.line(format!("cover H_{k} = {g}"));
    }
    r.line(format!("cover orientable: {}", yes_no(cover_is_orientable(&dc))));
    r.line(format!("cover components: {}", cover_ch.components));
    r.line(format!("deck involution fixed-point-free: {}", yes_no(deck_free)));
    let chi_ok = dc.cover.euler_characteristic() == 2 * base.euler_characteristic();
    r.line(format!("chi(cover) = 2 chi(base): {}", agree(chi_ok)));
    let lift_json = match map {
        None => Value::Null,
        Some(images) => {
            let labels = base.vertices();
            if images.len() != labels.len() {
                return Err(usage(format!("map lists {} images for {} vertices", images.len(), labels.len())));
            }
            let f = CellularMap::from_vertex_map(&base, &base, &images)?;
            match lift_map(&base, &dc, &f)? {
                LiftOutcome::Lifted(l) => {
                    let v = l.vertex_images().expect("simplicial lift");
                    let cover_labels = dc.cover.vertices();
                    let imgs: Vec<usize> = v.iter().map(|&i| cover_labels[i]).collect();
                    let shown: Vec<String> = imgs.iter().map(ToString::to_string).collect();
                    r.line(format!("map lift: lifted, cover vertex images {}", shown.join(" ")));
                    json!({ "lifted": true, "vertex_images": imgs })
                }
                LiftOutcome::Obstructed(why) => {
                    r.line(format!("map lift: obstructed ({why})"));
                    json!({ "lifted": false, "reason": why })
                }
            }
        }
    };
    r.set("base_orientable", ch.orientable)
        .set("base_euler_characteristic", base.euler_characteristic().to_string())
        .set("cover_euler_characteristic", dc.cover.euler_characteristic().to_string())
        .set("cover_homology", groups_json(&cover_groups))
        .set("cover_orientable", cover_is_orientable(&dc))
        .set("cover_components", count(cover_ch.components))
        .set("deck_fixed_point_free", deck_free)
        .set("lift", lift_json);
    Ok(r)
}

fn structure_model(cmd: &str, file: &Path) -> Result<StructureModel> {
    match ModelDocument::read(file)? {
        ModelDocument::StructureModel(d) => Ok(d.to_model()),
        other => Err(wrong_kind(cmd, "a structure_model document", &other)),
    }
}

pub fn order(file: &Path) -> Result<Report> {
    let m = structure_model("order", file)?;
    let mut r = Report::new("order");
    r.line(format!("model: {}", m.name));
    r.set("model", m.name.clone());
    match smale_order(&m)? {
        SmaleOrder::Order { ids, unique } => {
            r.line(format!("order: {}", ids.join(" < ")));
            r.line(format!("unique: {}", yes_no(unique)));
            r.set("order", ids).set("unique", unique).set("cycle", Value::Null);
        }
        SmaleOrder::Cycle(c) => {
            let mut shown = c.clone();
            shown.push(c[0].clone());
            r.line(format!("cycle: {}", shown.join(" < ")));
            r.line("not structurally stable: the relation has a cycle");
            r.set("order", Value::Null).set("cycle", c);
        }
    }
    Ok(r)
}

pub fn ledger(file: &Path) -> Result<Report> {
    let m = structure_model("ledger", file)?;
    let l = pair_ledger(&m)?;
    let mut r = Report::new("ledger");
    r.line(format!("model: {}", m.name));
    let mut pairs = Vec::new();
    for p in &l.pairs {
        r.line(format!("pair {} ({}):", p.id, p.kind.name()));
        let mut entries = Vec::new();
        for e in &p.entries {
            let rank = e.rank.map_or("?".to_string(), |x| x.to_string());
            let w = e.witness.as_ref().map(|w| format!(", char poly {w}")).unwrap_or_default();
            r.line(format!("  H^{}: rank {rank}, {}{w}", e.degree, e.class));
            entries.push(json!({
                "degree": e.degree,
                "rank": e.rank.map(count),
                "class": e.class.name(),
                "witness": e.witness.as_ref().map(|w| w.coeffs().iter().map(int).collect::<Vec<_>>()),
            }));
        }
        pairs.push(json!({ "id": p.id, "kind": p.kind.name(), "entries": entries }));
    }
    let mut budgets = Vec::new();
    r.line("budget over the whole filtration:");
    for k in 0..=3 {
        let b = eigenvalue_budget(&m, k)?;
        let names: Vec<&str> = b.classes.iter().map(|c| c.name()).collect();
        r.line(format!("  H^{k}: {{{}}}, growth admissible: {}", names.join(", "), yes_no(b.growth_admissible())));
        budgets.push(json!({ "degree": k, "classes": names, "growth_admissible": b.growth_admissible() }));
    }
    r.set("model", m.name.clone()).set("pairs", pairs).set("budgets", budgets);
    Ok(r)
}

pub fn check(file: &Path) -> Result<Report> {
    let m = structure_model("check", file)?;
    let rep = theorem_check(&m)?;
    let mut r = Report::new("check");
    r.line(format!("model: {}", m.name));
    r.line(format!("verdict: {}", rep.verdict));
    r.line("trace:");
    let mut trace = Vec::new();
    for (i, t) in rep.trace.iter().enumerate() {
        let subject = if t.subject.is_empty() { String::new() } else { format!(" [{}]", t.subject) };
        r.line(format!("  {}. {}{subject}: {}", i + 1, t.step.name(), t.detail));
        trace.push(json!({ "step": t.step.name(), "subject": t.subject, "detail": t.detail }));
    }
    r.set("model", m.name.clone()).set("verdict", rep.verdict.to_string()).set("trace", trace);
    Ok(r)
}

/// Checks every structure model in `dir`, one worker thread per file.
/// Output follows the sorted file names.
pub fn check_all(dir: &Path) -> Result<(Report, bool)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| usage(format!("cannot read directory {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "model"))
        .filter(|p| {
            std::fs::read_to_string(p)
                .ok()
                .and_then(|t| serde_json::from_str::<Value>(&t).ok())
                .is_some_and(|v| v.get("kind") == Some(&Value::from("structure_model")))
        })
        .collect();
    files.sort();
    let results: Vec<Result<Report>> = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|f| s.spawn(move || check(f))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut r = Report::new("check");
    let mut all_ok = true;
    let mut out = Vec::new();
    for (f, res) in files.iter().zip(results) {
        let name = f.file_name().expect("file").to_string_lossy().to_string();
        r.line(format!("== {name}"));
        match res {
            Ok(rep) => {
                r.line(rep.text().trim_end());
                let mut v = rep.json();
                v["file"] = name.into();
                out.push(v);
            }
            Err(e) => {
                all_ok = false;
                r.line(format!("error: {e}"));
                out.push(json!({ "file": name, "error": e.to_string() }));
            }
        }
    }
    r.set("results", out);
    Ok((r, all_ok))
}
