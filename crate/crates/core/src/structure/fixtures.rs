//! Example models: two configurations that exist, and forbidden ones.

use alloc::string::String;
use alloc::vec::Vec;

use super::model::{Ambient, BasicSetKind, BasicSetSpec, StructureModel, TrappingTopology};

fn trivial(id: &str, u: u8) -> BasicSetSpec {
    BasicSetSpec::new(id, BasicSetKind::TrivialPeriodic, u)
}

fn rel(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|(a, b)| ((*a).into(), (*b).into())).collect()
}

fn closed(orientable: bool) -> Ambient {
    Ambient { orientable, closed: true, dimension: 3 }
}

/// Plykin attractor on the 3-sphere: four saddles and two sources complete it.
pub fn plykin_s3() -> StructureModel {
    let mut sets = alloc::vec![BasicSetSpec::new("plykin", BasicSetKind::Attractor1d, 1)
        .with_orientable(false)
        .with_trapping(TrappingTopology::Handlebody(3))];
    let saddles = ["saddle1", "saddle2", "saddle3", "saddle4"];
    sets.extend(saddles.iter().map(|s| trivial(s, 2)));
    sets.extend(["source1", "source2"].iter().map(|s| trivial(s, 3)));
    let mut relations = Vec::new();
    for s in saddles {
        relations.push(("plykin", s));
        relations.push((s, "source1"));
        relations.push((s, "source2"));
    }
    StructureModel { name: "plykin_s3".into(), ambient: closed(true), basic_sets: sets, relations: rel(&relations) }
}

/// Derived-from-Anosov map of the 3-torus: an expanding attractor and a source.
pub fn da_t3() -> StructureModel {
    StructureModel {
        name: "da_t3".into(),
        ambient: closed(true),
        basic_sets: alloc::vec![BasicSetSpec::new("da", BasicSetKind::Attractor2dExpanding, 2), trivial("source", 3)],
        relations: rel(&[("da", "source")]),
    }
}

fn solenoid(orientable_ambient: bool) -> StructureModel {
    StructureModel {
        name: if orientable_ambient { "orientable_solenoid" } else { "nonorientable_ambient_solenoid" }.into(),
        ambient: closed(orientable_ambient),
        basic_sets: alloc::vec![
            BasicSetSpec::new("solenoid", BasicSetKind::Attractor1d, 1).with_trapping(TrappingTopology::Handlebody(1)),
            trivial("saddle", 2),
            trivial("source", 3),
        ],
        relations: rel(&[("solenoid", "saddle"), ("saddle", "source"), ("solenoid", "source")]),
    }
}

/// Orientable one-dimensional attractor in a solid torus, trivial elsewhere.
pub fn orientable_solenoid() -> StructureModel {
    solenoid(true)
}

/// The same configuration in a non-orientable closed manifold.
pub fn nonorientable_ambient_solenoid() -> StructureModel {
    solenoid(false)
}

/// Anosov torus with a torus-times-interval neighborhood and a source on each side.
pub fn anosov_torus() -> StructureModel {
    StructureModel {
        name: "anosov_torus".into(),
        ambient: closed(true),
        basic_sets: alloc::vec![
            BasicSetSpec::new("torus", BasicSetKind::AnosovTorus, 1)
                .with_trapping(TrappingTopology::TorusTimesInterval),
            trivial("source1", 3),
            trivial("source2", 3),
        ],
        relations: rel(&[("torus", "source1"), ("torus", "source2")]),
    }
}

/// Non-orientable expanding attractor in a non-orientable manifold, completed
/// by four sources and eight saddles of the two possible unstable dimensions.
pub fn nonorientable_expanding() -> StructureModel {
    let mut sets =
        alloc::vec![BasicSetSpec::new("expanding", BasicSetKind::Attractor2dExpanding, 2).with_orientable(false)];
    let mut relations: Vec<(String, String)> = Vec::new();
    for i in 1..=4 {
        let (src, s2, s1) = (alloc::format!("source{i}"), alloc::format!("saddle2_{i}"), alloc::format!("saddle1_{i}"));
        sets.push(trivial(&src, 3));
        sets.push(trivial(&s2, 2));
        sets.push(trivial(&s1, 1));
        relations.push(("expanding".into(), s1.clone()));
        relations.push((s1, s2.clone()));
        relations.push((s2, src));
    }
    StructureModel { name: "nonorientable_expanding".into(), ambient: closed(false), basic_sets: sets, relations }
}

/// Every fixture with its name.
pub fn all() -> Vec<(&'static str, StructureModel)> {
    alloc::vec![
        ("plykin_s3", plykin_s3()),
        ("da_t3", da_t3()),
        ("nonorientable_expanding", nonorientable_expanding()),
        ("orientable_solenoid", orientable_solenoid()),
        ("anosov_torus", anosov_torus()),
        ("nonorientable_ambient_solenoid", nonorientable_ambient_solenoid()),
    ]
}
