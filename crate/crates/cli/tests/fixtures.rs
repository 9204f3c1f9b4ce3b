//! The fixture directory holds hand-written documents plus documents
//! generated from the core library's reference constructions. Generated
//! files must match their source; `UPDATE_GOLDEN=1` rewrites them.

use std::path::{Path, PathBuf};

use hypertopo::doc::{ChainPairDoc, CoverInputDoc, ModelDocument, StructureModelDoc};
use hypertopo_core::covers::fixtures::grid_klein_bottle;
use hypertopo_core::homology::{build_standard_space, StandardSpace};
use hypertopo_core::structure::fixtures;

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn generated() -> Vec<(String, ModelDocument)> {
    let mut out: Vec<(String, ModelDocument)> = fixtures::all()
        .into_iter()
        .map(|(name, m)| (name.to_string(), ModelDocument::StructureModel(StructureModelDoc::from_model(&m))))
        .collect();
    for (name, space) in
        [("handlebody_g2", StandardSpace::Handlebody { genus: 2 }), ("t2xi", StandardSpace::TorusTimesInterval)]
    {
        let pair = build_standard_space(space).unwrap();
        out.push((name.to_string(), ModelDocument::ChainPair(ChainPairDoc::from_pair(&pair))));
    }
    out.push((
        "klein_bottle".to_string(),
        ModelDocument::CoverInput(CoverInputDoc { dimension: 2, simplices: grid_klein_bottle(3), map: None }),
    ));
    out
}

#[test]
fn generated_fixtures_match_sources() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, doc) in generated() {
        let path = fixture_dir().join(format!("{name}.model"));
        if update {
            std::fs::write(&path, doc.to_json_string()).unwrap();
            continue;
        }
        let on_disk = ModelDocument::read(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, doc, "{name} is stale; rerun with UPDATE_GOLDEN=1");
    }
}

#[test]
fn every_fixture_round_trips() {
    let mut seen = 0;
    for entry in std::fs::read_dir(fixture_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("model") {
            continue;
        }
        let doc = ModelDocument::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let again = ModelDocument::parse(&doc.to_json_string()).unwrap();
        assert_eq!(doc, again, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= 15, "only {seen} fixtures found");
}

#[test]
fn structure_fixtures_convert_back_to_core_models() {
    for (name, model) in fixtures::all() {
        let path = fixture_dir().join(format!("{name}.model"));
        let ModelDocument::StructureModel(d) = ModelDocument::read(&path).unwrap() else {
            panic!("{name} is not a structure model");
        };
        assert_eq!(d.to_model(), model, "{name}");
    }
}

#[test]
fn chain_pair_fixtures_rebuild_the_standard_spaces() {
    let path = fixture_dir().join("t2xi.model");
    let ModelDocument::ChainPair(d) = ModelDocument::read(&path).unwrap() else { panic!("t2xi") };
    assert_eq!(d.to_pair().unwrap(), build_standard_space(StandardSpace::TorusTimesInterval).unwrap());
}
