//! Model documents: JSON files with a `format`/`kind` envelope.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use hypertopo_core::covers::CombinatorialManifold;
use hypertopo_core::homology::{ArrowConstraint, ChainComplexPair, ExactSequenceSpec, SequenceTerm};
use hypertopo_core::lefschetz::InducedMapFamily;
use hypertopo_core::linalg::{IntMatrix, IntPoly, RatMatrix};
use hypertopo_core::structure::{Ambient, BasicSetKind, BasicSetSpec, StructureModel, TrappingTopology};
use hypertopo_core::{BigInt, BigRational};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::CliError;

pub const FORMAT_VERSION: u64 = 1;

/// Arbitrary-precision integer: accepted as a JSON number or decimal string,
/// always written as a string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = Int;
    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }
    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }
    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }
    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        BigInt::from_str(v.trim()).map(Int).map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

/// Rational number: a JSON integer or a string such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub BigRational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = Rat;
    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a fraction string")
    }
    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
        Ok(Rat(BigRational::from_integer(v.into())))
    }
    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
        Ok(Rat(BigRational::from_integer(v.into())))
    }
    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
        parse_rational(v).map(Rat).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let t = s.trim().trim_matches('"');
    let bad = || format!("not a rational number: {s:?}");
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(n, d))
    } else {
        BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| bad())
    }
}

/// Parses `[[a,b],[c,d]]` with integer or fraction entries.
pub fn parse_matrix_arg(s: &str) -> Result<RatMatrix, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix("[[")
        .and_then(|x| x.strip_suffix("]]"))
        .ok_or_else(|| format!("matrix must look like [[a,b],[c,d]], got {s:?}"))?;
    let rows: Vec<Vec<BigRational>> = inner
        .split("],[")
        .map(|r| r.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    RatMatrix::from_rows(rows).map_err(|e| e.to_string())
}

pub fn parse_int_matrix_arg(s: &str) -> Result<IntMatrix, String> {
    parse_matrix_arg(s)?.to_integer().ok_or_else(|| format!("matrix must have integer entries: {s}"))
}

pub type IntRows = Vec<Vec<Int>>;
pub type RatRows = Vec<Vec<Rat>>;

pub fn int_rows(m: &IntMatrix) -> IntRows {
    m.to_rows().into_iter().map(|r| r.into_iter().map(Int).collect()).collect()
}

pub fn rat_rows(m: &RatMatrix) -> RatRows {
    m.to_rows().into_iter().map(|r| r.into_iter().map(Rat).collect()).collect()
}

fn int_matrix(rows: &IntRows, shape: Option<(usize, usize)>) -> Result<IntMatrix, CliError> {
    let data: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
    match shape {
        Some((r, c)) if r == 0 || c == 0 => {
            if data.len() != r || data.iter().any(|row| !row.is_empty()) {
                return Err(CliError::Schema(format!("expected an empty {r}x{c} matrix")));
            }
            Ok(IntMatrix::zeros(r, c))
        }
        _ => {
            let m = IntMatrix::from_rows(data)?;
            if let Some((r, c)) = shape {
                if (m.rows(), m.cols()) != (r, c) {
                    return Err(CliError::Schema(format!("expected a {r}x{c} matrix, got {}x{}", m.rows(), m.cols())));
                }
            }
            Ok(m)
        }
    }
}

fn rat_matrix(rows: &RatRows) -> Result<RatMatrix, CliError> {
    Ok(RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect())?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainPairDoc {
    /// `cells[k]`: labels of the k-cells.
    pub cells: Vec<Vec<String>>,
    #[serde(default)]
    pub subcomplex: Vec<Vec<String>>,
    /// `boundaries[k-1]`: the matrix of `∂_k`, rows indexed by (k-1)-cells.
    pub boundaries: Vec<IntRows>,
}

impl ChainPairDoc {
    pub fn to_pair(&self) -> Result<ChainComplexPair, CliError> {
        let mut ds = Vec::with_capacity(self.boundaries.len());
        for (i, b) in self.boundaries.iter().enumerate() {
            let k = i + 1;
            let shape = match (self.cells.get(k - 1), self.cells.get(k)) {
                (Some(lo), Some(hi)) => Some((lo.len(), hi.len())),
                _ => None,
            };
            ds.push(int_matrix(b, shape)?);
        }
        Ok(ChainComplexPair::new(self.cells.clone(), self.subcomplex.clone(), ds)?)
    }

    pub fn from_pair(p: &ChainComplexPair) -> Self {
        let top = p.top_dimension();
        ChainPairDoc {
            cells: (0..=top).map(|k| p.cells(k).to_vec()).collect(),
            subcomplex: (0..=top).map(|k| p.subcomplex_labels(k)).collect(),
            boundaries: (1..=top).map(|k| int_rows(p.boundary(k))).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToralMapDoc {
    pub matrix: IntRows,
}

impl ToralMapDoc {
    pub fn to_matrix(&self) -> Result<IntMatrix, CliError> {
        int_matrix(&self.matrix, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InducedFamilyDoc {
    /// `maps[k]`: the map on the degree-k group.
    pub maps: Vec<IntRows>,
    /// Derivatives of `f^m` at the points of `Fix(f^m)`, keyed by `m`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fixed_points: BTreeMap<u32, Vec<RatRows>>,
}

impl InducedFamilyDoc {
    pub fn to_family(&self) -> Result<InducedMapFamily, CliError> {
        let maps = self.maps.iter().map(|m| int_matrix(m, None)).collect::<Result<Vec<_>, _>>()?;
        Ok(InducedMapFamily::new(maps)?)
    }

    pub fn fixed_point_derivatives(&self, m: u32) -> Result<Option<Vec<RatMatrix>>, CliError> {
        self.fixed_points.get(&m).map(|v| v.iter().map(rat_matrix).collect()).transpose()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindDoc {
    TrivialPeriodic,
    #[serde(rename = "attractor_1d")]
    Attractor1d,
    #[serde(rename = "attractor_2d_expanding")]
    Attractor2dExpanding,
    AnosovTorus,
    #[serde(rename = "attractor_3d")]
    Attractor3d,
    #[serde(rename = "nontrivial_saddle")]
    NonTrivialSaddle,
    #[serde(rename = "nontrivial_repeller")]
    NonTrivialRepeller,
}

impl From<KindDoc> for BasicSetKind {
    fn from(k: KindDoc) -> Self {
        match k {
            KindDoc::TrivialPeriodic => BasicSetKind::TrivialPeriodic,
            KindDoc::Attractor1d => BasicSetKind::Attractor1d,
            KindDoc::Attractor2dExpanding => BasicSetKind::Attractor2dExpanding,
            KindDoc::AnosovTorus => BasicSetKind::AnosovTorus,
            KindDoc::Attractor3d => BasicSetKind::Attractor3d,
            KindDoc::NonTrivialSaddle => BasicSetKind::NonTrivialSaddle,
            KindDoc::NonTrivialRepeller => BasicSetKind::NonTrivialRepeller,
        }
    }
}

impl From<BasicSetKind> for KindDoc {
    fn from(k: BasicSetKind) -> Self {
        match k {
            BasicSetKind::TrivialPeriodic => KindDoc::TrivialPeriodic,
            BasicSetKind::Attractor1d => KindDoc::Attractor1d,
            BasicSetKind::Attractor2dExpanding => KindDoc::Attractor2dExpanding,
            BasicSetKind::AnosovTorus => KindDoc::AnosovTorus,
            BasicSetKind::Attractor3d => KindDoc::Attractor3d,
            BasicSetKind::NonTrivialSaddle => KindDoc::NonTrivialSaddle,
            BasicSetKind::NonTrivialRepeller => KindDoc::NonTrivialRepeller,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrappingDoc {
    #[default]
    None,
    T2xi,
    Handlebody(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasicSetDoc {
    pub id: String,
    pub kind: KindDoc,
    pub dim_unstable: u8,
    #[serde(default = "yes")]
    pub orientable: bool,
    #[serde(default)]
    pub trapping: TrappingDoc,
    #[serde(default = "one")]
    pub period: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub spectral: BTreeMap<usize, Vec<Int>>,
}

fn yes() -> bool {
    true
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientDoc {
    pub orientable: bool,
    pub closed: bool,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureModelDoc {
    pub name: String,
    pub ambient: AmbientDoc,
    pub basic_sets: Vec<BasicSetDoc>,
    /// `[lower, upper]` pairs.
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl StructureModelDoc {
    pub fn to_model(&self) -> StructureModel {
        StructureModel {
            name: self.name.clone(),
            ambient: Ambient {
                orientable: self.ambient.orientable,
                closed: self.ambient.closed,
                dimension: self.ambient.dimension,
            },
            basic_sets: self
                .basic_sets
                .iter()
                .map(|b| BasicSetSpec {
                    id: b.id.clone(),
                    kind: b.kind.into(),
                    dim_unstable: b.dim_unstable,
                    orientable: b.orientable,
                    trapping: match b.trapping {
                        TrappingDoc::None => TrappingTopology::None,
                        TrappingDoc::T2xi => TrappingTopology::TorusTimesInterval,
                        TrappingDoc::Handlebody(g) => TrappingTopology::Handlebody(g),
                    },
                    period: b.period,
                    spectral: b
                        .spectral
                        .iter()
                        .map(|(&k, c)| (k, IntPoly::new(c.iter().map(|x| x.0.clone()).collect())))
                        .collect(),
                })
                .collect(),
            relations: self.relations.clone(),
        }
    }

    pub fn from_model(m: &StructureModel) -> Self {
        StructureModelDoc {
            name: m.name.clone(),
            ambient: AmbientDoc {
                orientable: m.ambient.orientable,
                closed: m.ambient.closed,
                dimension: m.ambient.dimension,
            },
            basic_sets: m
                .basic_sets
                .iter()
                .map(|b| BasicSetDoc {
                    id: b.id.clone(),
                    kind: b.kind.into(),
                    dim_unstable: b.dim_unstable,
                    orientable: b.orientable,
                    trapping: match b.trapping {
                        TrappingTopology::None => TrappingDoc::None,
                        TrappingTopology::TorusTimesInterval => TrappingDoc::T2xi,
                        TrappingTopology::Handlebody(g) => TrappingDoc::Handlebody(g),
                    },
                    period: b.period,
                    spectral: b
                        .spectral
                        .iter()
                        .map(|(&k, p)| (k, p.coeffs().iter().cloned().map(Int).collect()))
                        .collect(),
                })
                .collect(),
            relations: m.relations.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverInputDoc {
    pub dimension: usize,
    /// Top simplices as vertex lists.
    pub simplices: Vec<Vec<usize>>,
    /// Optional simplicial self-map: images of the vertices in ascending order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
}

impl CoverInputDoc {
    pub fn to_manifold(&self) -> Result<CombinatorialManifold, CliError> {
        Ok(CombinatorialManifold::from_simplices(self.dimension, &self.simplices)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintDoc {
    Free,
    Rank,
    Epi,
    Mono,
    Iso,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub label: String,
    #[serde(default)]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    /// Label of the term the arrow leaves.
    pub from: String,
    pub constraint: ConstraintDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExactSequenceDoc {
    pub terms: Vec<TermDoc>,
    #[serde(default)]
    pub arrows: Vec<ArrowDoc>,
}

impl ExactSequenceDoc {
    pub fn to_spec(&self) -> Result<ExactSequenceSpec, CliError> {
        let mut spec = ExactSequenceSpec::new(
            self.terms.iter().map(|t| SequenceTerm { label: t.label.clone(), rank: t.rank }).collect(),
        );
        for a in &self.arrows {
            let c = match (a.constraint, a.rank) {
                (ConstraintDoc::Rank, Some(r)) => ArrowConstraint::Rank(r),
                (ConstraintDoc::Rank, None) => {
                    return Err(CliError::Schema(format!("arrow from {} needs a rank", a.from)))
                }
                (_, Some(_)) => {
                    return Err(CliError::Schema(format!(
                        "arrow from {}: rank given without constraint \"rank\"",
                        a.from
                    )))
                }
                (ConstraintDoc::Free, None) => ArrowConstraint::Free,
                (ConstraintDoc::Epi, None) => ArrowConstraint::Epi,
                (ConstraintDoc::Mono, None) => ArrowConstraint::Mono,
                (ConstraintDoc::Iso, None) => ArrowConstraint::Iso,
                (ConstraintDoc::Zero, None) => ArrowConstraint::Zero,
            };
            spec = spec.constrain(&a.from, c)?;
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelDocument {
    ChainPair(ChainPairDoc),
    ToralMap(ToralMapDoc),
    InducedFamily(InducedFamilyDoc),
    StructureModel(StructureModelDoc),
    CoverInput(CoverInputDoc),
    ExactSequence(ExactSequenceDoc),
}

fn payload<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Schema(e.to_string()))
}

impl ModelDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelDocument::ChainPair(_) => "chain_pair",
            ModelDocument::ToralMap(_) => "toral_map",
            ModelDocument::InducedFamily(_) => "induced_family",
            ModelDocument::StructureModel(_) => "structure_model",
            ModelDocument::CoverInput(_) => "cover_input",
            ModelDocument::ExactSequence(_) => "exact_sequence",
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Schema(format!("invalid JSON: {e}")))?;
        let Value::Object(mut obj) = v else {
            return Err(CliError::Schema("document must be a JSON object".into()));
        };
        match obj.remove("format") {
            Some(Value::Number(n)) if n.as_u64() == Some(FORMAT_VERSION) => {}
            Some(other) => return Err(CliError::Schema(format!("unsupported format {other}"))),
            None => return Err(CliError::Schema("missing field `format`".into())),
        }
        let kind = match obj.remove("kind") {
            Some(Value::String(s)) => s,
            _ => return Err(CliError::Schema("missing string field `kind`".into())),
        };
        let rest = Value::Object(obj);
        Ok(match kind.as_str() {
            "chain_pair" => ModelDocument::ChainPair(payload(rest)?),
            "toral_map" => ModelDocument::ToralMap(payload(rest)?),
            "induced_family" => ModelDocument::InducedFamily(payload(rest)?),
            "structure_model" => ModelDocument::StructureModel(payload(rest)?),
            "cover_input" => ModelDocument::CoverInput(payload(rest)?),
            "exact_sequence" => ModelDocument::ExactSequence(payload(rest)?),
            other => return Err(CliError::Schema(format!("unknown kind {other:?}"))),
        })
    }

    pub fn to_value(&self) -> Value {
        let body = match self {
            ModelDocument::ChainPair(d) => serde_json::to_value(d),
            ModelDocument::ToralMap(d) => serde_json::to_value(d),
            ModelDocument::InducedFamily(d) => serde_json::to_value(d),
            ModelDocument::StructureModel(d) => serde_json::to_value(d),
            ModelDocument::CoverInput(d) => serde_json::to_value(d),
            ModelDocument::ExactSequence(d) => serde_json::to_value(d),
        }
        .expect("documents serialize");
        let Value::Object(mut obj) = body else { unreachable!("documents are structs") };
        obj.insert("format".into(), FORMAT_VERSION.into());
        obj.insert("kind".into(), self.kind().into());
        Value::Object(obj)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Schema(m) => CliError::Schema(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_is_enforced() {
        assert!(matches!(ModelDocument::parse(r#"{"kind":"toral_map","matrix":[[1]]}"#), Err(CliError::Schema(_))));
        assert!(ModelDocument::parse(r#"{"format":2,"kind":"toral_map","matrix":[[1]]}"#).is_err());
        assert!(ModelDocument::parse(r#"{"format":1,"kind":"torus","matrix":[[1]]}"#).is_err());
        let extra = r#"{"format":1,"kind":"toral_map","matrix":[[1]],"colour":"red"}"#;
        assert!(matches!(ModelDocument::parse(extra), Err(CliError::Schema(_))));
        let ok = ModelDocument::parse(r#"{"format":1,"kind":"toral_map","matrix":[[2,"1"],[1,1]]}"#).unwrap();
        assert_eq!(ModelDocument::parse(&ok.to_json_string()).unwrap(), ok);
    }

    #[test]
    fn matrix_arguments() {
        let m = parse_matrix_arg("[[2, 0], [0, 1/2]]").unwrap();
        assert_eq!(m.to_string(), "[[2,0],[0,1/2]]");
        assert!(parse_int_matrix_arg("[[1/2]]").is_err());
        assert!(parse_matrix_arg("[1,2]").is_err());
        assert!(parse_matrix_arg("[[1,2],[3]]").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn empty_boundary_matrices_take_their_shape_from_the_cells() {
        let doc = ChainPairDoc { cells: vec![vec![], vec!["e".into()]], subcomplex: vec![], boundaries: vec![vec![]] };
        let p = doc.to_pair().unwrap();
        assert_eq!((p.boundary(1).rows(), p.boundary(1).cols()), (0, 1));
    }
}
