use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicSetKind {
    /// A single periodic orbit.
    TrivialPeriodic,
    Attractor1d,
    Attractor2dExpanding,
    AnosovTorus,
    Attractor3d,
    NonTrivialSaddle,
    NonTrivialRepeller,
}

impl BasicSetKind {
    pub const ALL: [BasicSetKind; 7] = [
        BasicSetKind::TrivialPeriodic,
        BasicSetKind::Attractor1d,
        BasicSetKind::Attractor2dExpanding,
        BasicSetKind::AnosovTorus,
        BasicSetKind::Attractor3d,
        BasicSetKind::NonTrivialSaddle,
        BasicSetKind::NonTrivialRepeller,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasicSetKind::TrivialPeriodic => "trivial_periodic",
            BasicSetKind::Attractor1d => "attractor_1d",
            BasicSetKind::Attractor2dExpanding => "attractor_2d_expanding",
            BasicSetKind::AnosovTorus => "anosov_torus",
            BasicSetKind::Attractor3d => "attractor_3d",
            BasicSetKind::NonTrivialSaddle => "nontrivial_saddle",
            BasicSetKind::NonTrivialRepeller => "nontrivial_repeller",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn is_trivial(self) -> bool {
        self == BasicSetKind::TrivialPeriodic
    }

    pub fn is_nontrivial_attractor(self) -> bool {
        matches!(
            self,
            BasicSetKind::Attractor1d
                | BasicSetKind::Attractor2dExpanding
                | BasicSetKind::AnosovTorus
                | BasicSetKind::Attractor3d
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrappingTopology {
    Handlebody(usize),
    TorusTimesInterval,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicSetSpec {
    pub id: String,
    pub kind: BasicSetKind,
    pub dim_unstable: u8,
    pub orientable: bool,
    pub trapping: TrappingTopology,
    /// Orbit length of a trivial set; ignored for the others.
    pub period: usize,
    /// Explicit characteristic polynomials of the pair action, by degree.
    pub spectral: BTreeMap<usize, IntPoly>,
}

impl BasicSetSpec {
    pub fn new(id: &str, kind: BasicSetKind, dim_unstable: u8) -> Self {
        BasicSetSpec {
            id: id.into(),
            kind,
            dim_unstable,
            orientable: true,
            trapping: TrappingTopology::None,
            period: 1,
            spectral: BTreeMap::new(),
        }
    }

    pub fn with_trapping(mut self, t: TrappingTopology) -> Self {
        self.trapping = t;
        self
    }

    pub fn with_orientable(mut self, o: bool) -> Self {
        self.orientable = o;
        self
    }

    /// Whether all fixed points of every iterate inside the set are known to
    /// share one index: single orbits, orientable one-dimensional attractors,
    /// and Anosov tori (also one-dimensional unstable manifolds).
    pub fn indices_equal_hint(&self) -> bool {
        match self.kind {
            BasicSetKind::TrivialPeriodic | BasicSetKind::AnosovTorus => true,
            BasicSetKind::Attractor1d => self.orientable,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ambient {
    pub orientable: bool,
    pub closed: bool,
    pub dimension: usize,
}

/// `relations` holds pairs `(lower, upper)` meaning `lower ≺ upper`: the
/// stable set of `lower` meets the unstable set of `upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureModel {
    pub name: String,
    pub ambient: Ambient,
    pub basic_sets: Vec<BasicSetSpec>,
    pub relations: Vec<(String, String)>,
}

impl StructureModel {
    pub fn get(&self, id: &str) -> Option<&BasicSetSpec> {
        self.basic_sets.iter().find(|b| b.id == id)
    }

    /// Checks ids, references and the kind/trapping invariants.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedModel(m));
        if self.ambient.dimension != 3 {
            return bad(alloc::format!("ambient dimension {} is not 3", self.ambient.dimension));
        }
        let mut ids = BTreeSet::new();
        for b in &self.basic_sets {
            if b.id.is_empty() || !ids.insert(b.id.as_str()) {
                return bad(alloc::format!("basic set id {:?} is empty or repeated", b.id));
            }
            if b.dim_unstable > 3 {
                return bad(alloc::format!("{}: unstable dimension {} exceeds 3", b.id, b.dim_unstable));
            }
            if b.spectral.keys().any(|&k| k > 3) {
                return bad(alloc::format!("{}: spectral data above degree 3", b.id));
            }
            match (b.kind, b.trapping) {
                (BasicSetKind::Attractor1d, TrappingTopology::Handlebody(_)) => {}
                (BasicSetKind::Attractor1d, _) => {
                    return bad(alloc::format!("{}: a one-dimensional attractor needs a handlebody neighborhood", b.id))
                }
                (BasicSetKind::AnosovTorus, TrappingTopology::TorusTimesInterval) => {}
                (BasicSetKind::AnosovTorus, _) => {
                    return bad(alloc::format!("{}: an Anosov torus needs a torus-times-interval neighborhood", b.id))
                }
                (BasicSetKind::TrivialPeriodic, _) if b.period == 0 => {
                    return bad(alloc::format!("{}: period must be positive", b.id))
                }
                _ => {}
            }
            if b.kind.is_nontrivial_attractor() && b.dim_unstable as usize != attractor_unstable_dim(b.kind) {
                return bad(alloc::format!(
                    "{}: {} has unstable dimension {}, not {}",
                    b.id,
                    b.kind.name(),
                    attractor_unstable_dim(b.kind),
                    b.dim_unstable
                ));
            }
        }
        for (lo, hi) in &self.relations {
            for id in [lo, hi] {
                if !ids.contains(id.as_str()) {
                    return bad(alloc::format!("relation mentions unknown basic set {id}"));
                }
            }
            // the unstable set of an attractor or sink is the set itself
            let upper = self.get(hi).expect("checked above");
            if lo != hi
                && (upper.kind.is_nontrivial_attractor() || (upper.kind.is_trivial() && upper.dim_unstable == 0))
            {
                return bad(alloc::format!("{lo} cannot lie below the attractor {hi}"));
            }
        }
        Ok(())
    }
}

/// Unstable dimension forced by the attractor type.
fn attractor_unstable_dim(kind: BasicSetKind) -> usize {
    match kind {
        BasicSetKind::Attractor1d | BasicSetKind::AnosovTorus => 1,
        BasicSetKind::Attractor2dExpanding => 2,
        _ => 3,
    }
}
