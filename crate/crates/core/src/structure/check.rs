use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::ledger::{budget_of, pair_ledger, permutation_h0_eigen, ActionClass, PairRecord};
use super::model::{BasicSetKind, BasicSetSpec, StructureModel};
use super::order::{smale_order, SmaleOrder};
use crate::duality::{cohomology_transport, DegreeSign};
use crate::error::Result;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    PeriodicGrowth,
    EqualIndex,
    LefschetzCounting,
    ExcludeDegree0,
    ExcludeDegree3,
    ExcludeDegree1,
    ExcludeDegree2,
    DoubleCoverReduction,
    PremiseFails,
    GrowthAdmissible,
    OutOfHypothesis,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::PeriodicGrowth => "periodic_growth",
            Step::EqualIndex => "equal_index",
            Step::LefschetzCounting => "lefschetz_counting",
            Step::ExcludeDegree0 => "exclude_k0",
            Step::ExcludeDegree3 => "exclude_k3",
            Step::ExcludeDegree1 => "exclude_k1",
            Step::ExcludeDegree2 => "exclude_k2",
            Step::DoubleCoverReduction => "double_cover_reduction",
            Step::PremiseFails => "premise_fails",
            Step::GrowthAdmissible => "growth_admissible",
            Step::OutOfHypothesis => "out_of_hypothesis",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub step: Step,
    /// Basic set the step is about; empty for model-wide steps.
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Contradiction,
    OutOfHypothesis,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Contradiction => "contradiction",
            Verdict::OutOfHypothesis => "out_of_hypothesis",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

impl CheckReport {
    pub fn steps(&self) -> Vec<Step> {
        self.trace.iter().map(|t| t.step).collect()
    }
}

struct Tracer(Vec<TraceStep>);

impl Tracer {
    fn push(&mut self, step: Step, subject: &str, detail: String) {
        self.0.push(TraceStep { step, subject: subject.into(), detail });
    }
}

fn is_attractor(b: &BasicSetSpec) -> bool {
    b.kind.is_nontrivial_attractor() || (b.kind.is_trivial() && b.dim_unstable == 0)
}

/// Replays the exclusion argument for every non-trivial attractor of `model`.
///
/// The verdict is `Contradiction` as soon as one attractor of a forbidden
/// type (orientable one-dimensional, or Anosov torus) has all degrees
/// excluded. Models with a cycle, a non-trivial set that is not an attractor,
/// or a three-dimensional attractor are outside the checked statement.
pub fn theorem_check(model: &StructureModel) -> Result<CheckReport> {
    let mut t = Tracer(Vec::new());
    if let SmaleOrder::Cycle(c) = smale_order(model)? {
        t.push(Step::OutOfHypothesis, "", alloc::format!("cycle {}", c.join(" < ")));
        return Ok(CheckReport { verdict: Verdict::OutOfHypothesis, trace: t.0 });
    }
    let ledger = pair_ledger(model)?;
    let mut outside = false;
    for p in &ledger.pairs {
        let why = match p.kind {
            BasicSetKind::NonTrivialSaddle | BasicSetKind::NonTrivialRepeller => "non-trivial and not an attractor",
            BasicSetKind::Attractor3d => "three-dimensional attractor",
            _ => continue,
        };
        t.push(Step::OutOfHypothesis, &p.id, why.into());
        outside = true;
    }
    if outside {
        return Ok(CheckReport { verdict: Verdict::OutOfHypothesis, trace: t.0 });
    }

    let mut contradiction = false;
    for a in ledger.pairs.iter().filter(|p| p.kind.is_nontrivial_attractor()) {
        let spec = model.get(&a.id).expect("ledger id");
        // the connected piece containing `a`: everything but the other attractors
        let piece: Vec<&PairRecord> = ledger
            .pairs
            .iter()
            .filter(|p| p.id == a.id || !is_attractor(model.get(&p.id).expect("ledger id")))
            .collect();
        let bounded = !model.ambient.closed || model.basic_sets.iter().any(|b| b.id != a.id && is_attractor(b));
        contradiction |= replay(model, spec, a, &piece, bounded, &mut t)?;
    }
    let verdict = if contradiction { Verdict::Contradiction } else { Verdict::Consistent };
    Ok(CheckReport { verdict, trace: t.0 })
}

/// Returns true when every degree is excluded for the attractor `a`.
fn replay(
    model: &StructureModel,
    spec: &BasicSetSpec,
    a: &PairRecord,
    piece: &[&PairRecord],
    bounded: bool,
    t: &mut Tracer,
) -> Result<bool> {
    let id = a.id.as_str();
    t.push(Step::PeriodicGrowth, id, "non-trivial basic set: the number of fixed points of g^m is unbounded".into());
    match spec.kind {
        BasicSetKind::Attractor1d if !spec.orientable => {
            t.push(
                Step::PremiseFails,
                id,
                "non-orientable: fixed points of one iterate may carry opposite indices".into(),
            );
            return Ok(false);
        }
        BasicSetKind::Attractor2dExpanding => {
            let growth: Vec<String> = (1..=3)
                .filter(|&k| budget_of(k, piece.iter().copied()).growth_admissible())
                .map(|k| alloc::format!("{k}"))
                .collect();
            if growth.is_empty() {
                t.push(Step::PremiseFails, id, "two-dimensional unstable manifolds: indices may differ".into());
            } else {
                t.push(
                    Step::GrowthAdmissible,
                    id,
                    alloc::format!("large eigenvalues admissible in degrees {}", growth.join(", ")),
                );
            }
            return Ok(false);
        }
        _ => {}
    }
    let why = if spec.kind == BasicSetKind::AnosovTorus {
        "orientable unstable bundle of dimension one on the Anosov torus: all fixed points of g^m share one index"
    } else {
        "orientable with one-dimensional unstable manifolds: all fixed points of g^m share one index"
    };
    t.push(Step::EqualIndex, id, why.into());
    t.push(
        Step::LefschetzCounting,
        id,
        "|Fix(g^m)| = |sum (-1)^k tr g*^m on H^k| grows, so some degree carries an eigenvalue |λ| > 1".into(),
    );

    let h0 = permutation_h0_eigen(1, &[0])?;
    debug_assert!(h0.roots_of_unity_only);
    t.push(
        Step::ExcludeDegree0,
        id,
        alloc::format!("H^0 is permuted by g*: characteristic polynomial {}, real eigenvalues ±1", h0.char_poly),
    );

    let k3 = if bounded {
        "the piece has non-empty boundary, so H^3 = 0"
    } else {
        "closed connected piece: H^3 has rank one and g* = ±id"
    };
    t.push(Step::ExcludeDegree3, id, k3.into());

    let b1 = budget_of(1, piece.iter().copied());
    if b1.growth_admissible() {
        let who = b1.sources[&super::ledger::SpectralClass::Growth].join(", ");
        t.push(Step::GrowthAdmissible, id, alloc::format!("degree 1 admits growth through {who}"));
        return Ok(false);
    }
    let own = match &a.entries[1].class {
        ActionClass::ZeroGroup => String::from("H^1 of the handlebody pair vanishes"),
        ActionClass::PlusMinusId => String::from("H^1 of the torus-times-interval pair has rank one, g* = ±id"),
        c => alloc::format!("H^1 of the attractor pair is {c}"),
    };
    let names: Vec<&str> = b1.classes.iter().map(|c| c.name()).collect();
    t.push(
        Step::ExcludeDegree1,
        id,
        alloc::format!("{own}; trivial pairs are nilpotent or unipotent; budget {{{}}}", names.join(", ")),
    );

    let mut k2 = String::from(
        "λ on H^2 gives ±1/λ on H^1(M, ∂M); the pair sequence sends it to H^0(∂M) (only ±1) or to H^1(M) (excluded)",
    );
    if let ActionClass::Spectral(p) = &a.entries[2].class {
        if !p.constant().is_zero() {
            let q = cohomology_transport(&p.to_rational(), DegreeSign::Plus)?;
            k2.push_str(&alloc::format!("; transported polynomial {q}"));
        }
    }
    t.push(Step::ExcludeDegree2, id, k2);

    if !model.ambient.orientable {
        t.push(
            Step::DoubleCoverReduction,
            id,
            "ambient not orientable: the argument runs on the oriented double cover with the lifted map".into(),
        );
    }
    Ok(true)
}
