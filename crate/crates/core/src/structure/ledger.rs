use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::model::{BasicSetKind, BasicSetSpec, StructureModel, TrappingTopology};
use super::order::{smale_order, SmaleOrder};
use crate::error::{Error, Result};
use crate::linalg::real_roots::{count_real_roots, Point};
use crate::linalg::{char_poly, is_roots_of_unity_only, spectral_radius_exceeds_one, IntMatrix, IntPoly};

/// How `f*` acts on one cohomology group of a filtration pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ActionClass {
    ZeroGroup,
    Nilpotent,
    /// Only roots of unity as eigenvalues.
    Unipotent,
    PlusMinusId,
    /// No constraint beyond the rank.
    Unconstrained,
    Spectral(IntPoly),
}

impl ActionClass {
    pub fn name(&self) -> &'static str {
        match self {
            ActionClass::ZeroGroup => "zero_group",
            ActionClass::Nilpotent => "nilpotent",
            ActionClass::Unipotent => "unipotent",
            ActionClass::PlusMinusId => "plus_minus_id",
            ActionClass::Unconstrained => "rank_g_unconstrained",
            ActionClass::Spectral(_) => "spectral",
        }
    }

    /// Eigenvalue classes this action can contribute.
    pub fn spectral_classes(&self) -> BTreeSet<SpectralClass> {
        let mut out = BTreeSet::new();
        match self {
            ActionClass::ZeroGroup => {}
            ActionClass::Nilpotent => {
                out.insert(SpectralClass::Zero);
            }
            ActionClass::Unipotent => {
                out.insert(SpectralClass::RootsOfUnity);
            }
            ActionClass::PlusMinusId => {
                out.insert(SpectralClass::PlusMinusOne);
            }
            ActionClass::Unconstrained => {
                out.insert(SpectralClass::Growth);
            }
            ActionClass::Spectral(p) => {
                let (zeros, q) = p.strip_zero_roots();
                if zeros > 0 {
                    out.insert(SpectralClass::Zero);
                }
                if q.degree().unwrap_or(0) > 0 {
                    // monicity is checked when the ledger is built
                    if spectral_radius_exceeds_one(&q).unwrap_or(true) {
                        out.insert(SpectralClass::Growth);
                    } else {
                        out.insert(SpectralClass::RootsOfUnity);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ActionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionClass::Spectral(p) => write!(f, "spectral({p})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Coarse eigenvalue classes used by the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpectralClass {
    Zero,
    RootsOfUnity,
    PlusMinusOne,
    /// Some eigenvalue with `|λ| > 1` is possible.
    Growth,
}

impl SpectralClass {
    pub fn name(self) -> &'static str {
        match self {
            SpectralClass::Zero => "zero",
            SpectralClass::RootsOfUnity => "roots_of_unity",
            SpectralClass::PlusMinusOne => "plus_minus_one",
            SpectralClass::Growth => "growth",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub degree: usize,
    /// Real dimension of the group; `None` when the model does not fix it.
    pub rank: Option<usize>,
    pub class: ActionClass,
    /// Characteristic polynomial forced by the class, when it is forced.
    pub witness: Option<IntPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub id: String,
    pub kind: BasicSetKind,
    /// Four entries, degrees 0..=3.
    pub entries: Vec<LedgerEntry>,
}

/// Per basic set, in Smale order, the action on `H^k(M_i, M_{i-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLedger {
    pub pairs: Vec<PairRecord>,
}

impl PairLedger {
    pub fn pair(&self, id: &str) -> Option<&PairRecord> {
        self.pairs.iter().find(|p| p.id == id)
    }
}

fn entry(degree: usize, rank: Option<usize>, class: ActionClass) -> LedgerEntry {
    let witness = match (&class, rank) {
        (ActionClass::ZeroGroup, _) => Some(IntPoly::one()),
        (ActionClass::Nilpotent, Some(r)) => Some(IntPoly::monomial(BigInt::one(), r)),
        (ActionClass::Spectral(p), _) => Some(p.clone()),
        _ => None,
    };
    LedgerEntry { degree, rank, class, witness }
}

/// Rank-one lattice automorphisms are `±id`.
fn rank_class(r: usize) -> ActionClass {
    match r {
        0 => ActionClass::ZeroGroup,
        1 => ActionClass::PlusMinusId,
        _ => ActionClass::Unconstrained,
    }
}

fn pair_record(b: &BasicSetSpec) -> Result<PairRecord> {
    let mut entries: Vec<LedgerEntry> = match (b.kind, b.trapping) {
        (BasicSetKind::TrivialPeriodic, _) => (0..=3)
            .map(|k| {
                if k == b.dim_unstable as usize {
                    // the orbit's cells are permuted cyclically
                    let mut e = entry(k, Some(b.period), ActionClass::Unipotent);
                    e.witness = Some(IntPoly::monomial(BigInt::one(), b.period).sub(&IntPoly::one()));
                    e
                } else {
                    entry(k, Some(0), ActionClass::Nilpotent)
                }
            })
            .collect(),
        (BasicSetKind::Attractor1d, TrappingTopology::Handlebody(g)) => alloc::vec![
            entry(0, Some(0), ActionClass::ZeroGroup),
            entry(1, Some(0), ActionClass::ZeroGroup),
            entry(2, Some(g), rank_class(g)),
            entry(3, Some(1), ActionClass::PlusMinusId),
        ],
        (BasicSetKind::AnosovTorus, TrappingTopology::TorusTimesInterval) => alloc::vec![
            entry(0, Some(0), ActionClass::ZeroGroup),
            entry(1, Some(1), ActionClass::PlusMinusId),
            entry(2, Some(2), ActionClass::Unconstrained),
            entry(3, Some(1), ActionClass::PlusMinusId),
        ],
        (BasicSetKind::Attractor1d | BasicSetKind::AnosovTorus, _) => {
            return Err(Error::MalformedModel(alloc::format!("{}: missing trapping topology", b.id)))
        }
        (BasicSetKind::Attractor2dExpanding, _) => {
            // a connected piece with boundary has no relative H^0; the rest is open
            let mut v = alloc::vec![entry(0, Some(0), ActionClass::ZeroGroup)];
            v.extend((1..=3).map(|k| entry(k, None, ActionClass::Unconstrained)));
            v
        }
        _ => (0..=3).map(|k| entry(k, None, ActionClass::Unconstrained)).collect(),
    };
    for (&k, p) in &b.spectral {
        if !p.is_monic() {
            return Err(Error::MalformedModel(alloc::format!("{}: degree-{k} polynomial is not monic", b.id)));
        }
        let d = p.degree().unwrap_or(0);
        if let Some(r) = entries[k].rank {
            if r != d {
                return Err(Error::MalformedModel(alloc::format!(
                    "{}: degree-{k} polynomial has degree {d}, group has rank {r}",
                    b.id
                )));
            }
        }
        entries[k] = entry(k, Some(d), ActionClass::Spectral(p.clone()));
    }
    Ok(PairRecord { id: b.id.clone(), kind: b.kind, entries })
}

pub(crate) fn ordered_ids(model: &StructureModel) -> Result<Vec<String>> {
    match smale_order(model)? {
        SmaleOrder::Order { ids, .. } => Ok(ids),
        SmaleOrder::Cycle(c) => Err(Error::Cycle(c.join(" < "))),
    }
}

/// Cohomology ledger of every filtration pair.
pub fn pair_ledger(model: &StructureModel) -> Result<PairLedger> {
    let ids = ordered_ids(model)?;
    let pairs = ids.iter().map(|id| pair_record(model.get(id).expect("ordered id"))).collect::<Result<_>>()?;
    Ok(PairLedger { pairs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueBudget {
    pub degree: usize,
    /// Union of the pair classes in this degree.
    pub classes: BTreeSet<SpectralClass>,
    /// Which pairs contribute each class.
    pub sources: BTreeMap<SpectralClass, Vec<String>>,
}

impl EigenvalueBudget {
    pub fn growth_admissible(&self) -> bool {
        self.classes.contains(&SpectralClass::Growth)
    }
}

pub(crate) fn budget_of<'a>(degree: usize, pairs: impl IntoIterator<Item = &'a PairRecord>) -> EigenvalueBudget {
    let mut sources: BTreeMap<SpectralClass, Vec<String>> = BTreeMap::new();
    for p in pairs {
        for c in p.entries[degree].class.spectral_classes() {
            sources.entry(c).or_default().push(p.id.clone());
        }
    }
    EigenvalueBudget { degree, classes: sources.keys().copied().collect(), sources }
}

/// Admissible eigenvalue classes of `f*` on `H^k` of the whole filtration manifold.
pub fn eigenvalue_budget(model: &StructureModel, degree: usize) -> Result<EigenvalueBudget> {
    if degree > 3 {
        return Err(Error::DegreeOutOfRange { k: degree, n: 3 });
    }
    let ledger = pair_ledger(model)?;
    Ok(budget_of(degree, &ledger.pairs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSpectrum {
    pub char_poly: IntPoly,
    /// Distinct real eigenvalues, ascending.
    pub real_eigenvalues: Vec<i64>,
    pub roots_of_unity_only: bool,
}

/// Spectrum of the action on `H^0` induced by a permutation of components.
/// `permutation[i]` is the image of component `i`.
pub fn permutation_h0_eigen(components: usize, permutation: &[usize]) -> Result<PermutationSpectrum> {
    if components == 0 || permutation.len() != components {
        return Err(Error::InvalidPermutation(alloc::format!(
            "{} images for {components} components",
            permutation.len()
        )));
    }
    let mut seen = alloc::vec![false; components];
    for &j in permutation {
        if j >= components || core::mem::replace(&mut seen[j], true) {
            return Err(Error::InvalidPermutation(alloc::format!("{permutation:?} is not a bijection")));
        }
    }
    let mut m = IntMatrix::zeros(components, components);
    for (i, &j) in permutation.iter().enumerate() {
        m[(j, i)] = BigInt::one();
    }
    let p = char_poly(&m)?;
    let mut real = Vec::new();
    let mut rest = p.clone();
    for x in [-1i64, 1] {
        let (xb, lin) = (BigInt::from(x), IntPoly::linear_root(BigInt::from(x)));
        if rest.eval(&xb).is_zero() {
            real.push(x);
        }
        while rest.eval(&xb).is_zero() {
            rest = rest.checked_div(&lin).expect("exact root");
        }
    }
    // certify that ±1 are the only real roots
    if count_real_roots(&rest.to_rational(), &Point::NegInfinity, &Point::PosInfinity) != Some(0) {
        return Err(Error::InvalidPermutation("characteristic polynomial has a real root other than ±1".into()));
    }
    let roots_of_unity_only = is_roots_of_unity_only(&p)?;
    Ok(PermutationSpectrum { char_poly: p, real_eigenvalues: real, roots_of_unity_only })
}
