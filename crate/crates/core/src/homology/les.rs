//! Rank bookkeeping for exact sequences of real vector spaces.
//!
//! A sequence `0 -> t_0 -> t_1 -> ... -> t_{n-1} -> 0` is modelled by the
//! ranks `r_i` of its maps: with `r_0` and `r_n` the implicit zero maps at the
//! ends, exactness at `t_i` says `dim t_i = r_i + r_{i+1}`. Known dimensions
//! and arrow constraints become linear equations in the `r_i`; each chain of
//! linked unknowns has one free parameter, bounded by nonnegativity.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Constraint on the map `t_i -> t_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowConstraint {
    Free,
    Rank(usize),
    Epi,
    Mono,
    Iso,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTerm {
    pub label: String,
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequenceSpec {
    pub terms: Vec<SequenceTerm>,
    /// `arrows[i]` constrains `t_i -> t_{i+1}`; one fewer than the terms.
    pub arrows: Vec<ArrowConstraint>,
}

impl ExactSequenceSpec {
    pub fn new(terms: Vec<SequenceTerm>) -> Self {
        let n = terms.len().saturating_sub(1);
        ExactSequenceSpec { terms, arrows: alloc::vec![ArrowConstraint::Free; n] }
    }

    /// Constrains the arrow leaving the term labelled `from`.
    pub fn constrain(mut self, from: &str, c: ArrowConstraint) -> Result<Self> {
        let i = self
            .terms
            .iter()
            .position(|t| t.label == from)
            .filter(|&i| i + 1 < self.terms.len())
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("no arrow leaves {from}")))?;
        self.arrows[i] = c;
        Ok(self)
    }

    /// Homology sequence of a pair, from the top degree down:
    /// `H_d(A) -> H_d(X) -> H_d(X,A) -> H_{d-1}(A) -> ... -> H_0(X,A)`.
    /// Labels are `H{k}(A)`, `H{k}(X)`, `H{k}(X,A)`; relative ranks are unknown.
    pub fn pair_sequence(x_ranks: &[usize], a_ranks: &[usize]) -> Result<Self> {
        if x_ranks.len() != a_ranks.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} ranks for X, {} for A",
                x_ranks.len(),
                a_ranks.len()
            )));
        }
        let mut terms = Vec::new();
        for k in (0..x_ranks.len()).rev() {
            terms.push(SequenceTerm { label: alloc::format!("H{k}(A)"), rank: Some(a_ranks[k]) });
            terms.push(SequenceTerm { label: alloc::format!("H{k}(X)"), rank: Some(x_ranks[k]) });
            terms.push(SequenceTerm { label: alloc::format!("H{k}(X,A)"), rank: None });
        }
        Ok(Self::new(terms))
    }

    fn validate(&self) -> Result<()> {
        if self.arrows.len() + 1 != self.terms.len() && !(self.terms.is_empty() && self.arrows.is_empty()) {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} terms need {} arrows, got {}",
                self.terms.len(),
                self.terms.len().saturating_sub(1),
                self.arrows.len()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LesStatus {
    Determined,
    /// Indices of terms whose rank is not fixed by the constraints.
    Underdetermined(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LesSolution {
    pub term_ranks: Vec<Option<usize>>,
    /// Rank of the map `t_i -> t_{i+1}`, when determined.
    pub arrow_ranks: Vec<Option<usize>>,
    pub status: LesStatus,
}

impl LesSolution {
    pub fn rank_of(&self, spec: &ExactSequenceSpec, label: &str) -> Option<usize> {
        let i = spec.terms.iter().position(|t| t.label == label)?;
        self.term_ranks[i]
    }
}

/// One linear equation over the map ranks `R[0..=n]`.
#[derive(Debug, Clone)]
enum Equation {
    /// `R[j] = v`
    Pin { j: usize, v: i64, why: String },
    /// `R[j] + R[j + 1] = c`
    Link { j: usize, c: i64, why: String },
}

impl Equation {
    fn why(&self) -> &str {
        match self {
            Equation::Pin { why, .. } | Equation::Link { why, .. } => why,
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.why())
    }
}

fn equations(spec: &ExactSequenceSpec) -> Vec<Equation> {
    let n = spec.terms.len();
    let arrow = |i: usize| alloc::format!("{} -> {}", spec.terms[i].label, spec.terms[i + 1].label);
    let mut eqs = alloc::vec![
        Equation::Pin { j: 0, v: 0, why: "sequence starts with 0".into() },
        Equation::Pin { j: n, v: 0, why: "sequence ends with 0".into() },
    ];
    for i in 0..n {
        if let Some(x) = spec.terms[i].rank {
            eqs.push(Equation::Link {
                j: i,
                c: x as i64,
                why: alloc::format!("exactness at {}: rank in + rank out = {x}", spec.terms[i].label),
            });
        }
        if i + 1 < n {
            let a = arrow(i);
            match spec.arrows[i] {
                ArrowConstraint::Free => {}
                ArrowConstraint::Rank(k) => {
                    eqs.push(Equation::Pin { j: i + 1, v: k as i64, why: alloc::format!("rank of {a} = {k}") })
                }
                ArrowConstraint::Zero => eqs.push(Equation::Pin { j: i + 1, v: 0, why: alloc::format!("{a} is zero") }),
                ArrowConstraint::Epi | ArrowConstraint::Mono | ArrowConstraint::Iso => {
                    let c = spec.arrows[i];
                    if matches!(c, ArrowConstraint::Mono | ArrowConstraint::Iso) {
                        eqs.push(Equation::Pin { j: i, v: 0, why: alloc::format!("{a} is injective") });
                    }
                    if matches!(c, ArrowConstraint::Epi | ArrowConstraint::Iso) {
                        eqs.push(Equation::Pin { j: i + 2, v: 0, why: alloc::format!("{a} is surjective") });
                    }
                }
            }
        }
    }
    eqs
}

/// Per-variable solution: `R[j] = sign * t + offset` on its component.
#[derive(Clone, Copy)]
struct Affine {
    comp: usize,
    sign: i64,
    offset: i64,
}

struct Solved {
    values: Vec<Option<i64>>,
}

/// Solves the equations; `None` if they admit no nonnegative integer solution.
fn solve(n_vars: usize, eqs: &[Equation]) -> Option<Solved> {
    let mut link_c: Vec<Option<i64>> = alloc::vec![None; n_vars];
    for e in eqs {
        if let Equation::Link { j, c, .. } = e {
            match link_c[*j] {
                Some(old) if old != *c => return None,
                _ => link_c[*j] = Some(*c),
            }
        }
    }
    // walk chains of linked variables
    let mut aff: Vec<Affine> = Vec::with_capacity(n_vars);
    let mut comps = 0usize;
    for j in 0..n_vars {
        let a = match j.checked_sub(1).and_then(|p| link_c[p].map(|c| (p, c))) {
            Some((p, c)) => {
                let prev = aff[p];
                Affine { comp: prev.comp, sign: -prev.sign, offset: c - prev.offset }
            }
            None => {
                comps += 1;
                Affine { comp: comps - 1, sign: 1, offset: 0 }
            }
        };
        aff.push(a);
    }
    let mut lo = alloc::vec![i64::MIN; comps];
    let mut hi = alloc::vec![i64::MAX; comps];
    let mut pinned: Vec<Option<i64>> = alloc::vec![None; comps];
    for a in &aff {
        // sign * t + offset >= 0
        if a.sign > 0 {
            lo[a.comp] = lo[a.comp].max(-a.offset);
        } else {
            hi[a.comp] = hi[a.comp].min(a.offset);
        }
    }
    for e in eqs {
        if let Equation::Pin { j, v, .. } = e {
            let a = aff[*j];
            let t = a.sign * (v - a.offset);
            match pinned[a.comp] {
                Some(old) if old != t => return None,
                _ => pinned[a.comp] = Some(t),
            }
        }
    }
    let mut t_val: Vec<Option<i64>> = alloc::vec![None; comps];
    for c in 0..comps {
        if lo[c] > hi[c] {
            return None;
        }
        t_val[c] = match pinned[c] {
            Some(t) if t < lo[c] || t > hi[c] => return None,
            Some(t) => Some(t),
            None if lo[c] == hi[c] => Some(lo[c]),
            None => None,
        };
    }
    let values = aff.iter().map(|a| t_val[a.comp].map(|t| a.sign * t + a.offset)).collect();
    Some(Solved { values })
}

/// Solves for unknown term ranks from exactness and arrow constraints.
///
/// Inconsistent systems are reported with the first equation (in sequence
/// order) that cannot be satisfied together with those before it.
pub fn les_rank_solver(spec: &ExactSequenceSpec) -> Result<LesSolution> {
    spec.validate()?;
    let n = spec.terms.len();
    let eqs = equations(spec);
    let Some(sol) = solve(n + 1, &eqs) else {
        let bad = (1..=eqs.len()).find(|&p| solve(n + 1, &eqs[..p]).is_none()).expect("the full system is infeasible");
        return Err(Error::InconsistentSequence(alloc::format!("{}", eqs[bad - 1])));
    };
    let r = &sol.values;
    let term_ranks: Vec<Option<usize>> =
        (0..n).map(|i| spec.terms[i].rank.or_else(|| Some((r[i]? + r[i + 1]?) as usize))).collect();
    let arrow_ranks = (0..n.saturating_sub(1)).map(|i| r[i + 1].map(|v| v as usize)).collect();
    let open: Vec<usize> = (0..n).filter(|&i| term_ranks[i].is_none()).collect();
    let status = if open.is_empty() { LesStatus::Determined } else { LesStatus::Underdetermined(open) };
    Ok(LesSolution { term_ranks, arrow_ranks, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn term(label: &str, rank: Option<usize>) -> SequenceTerm {
        SequenceTerm { label: label.into(), rank }
    }

    /// `0 -> H3(M,dM) -> H2(dM) -> H2(M) -> H2(M,dM) -> H1(dM) -> H1(M) -> H1(M,dM) -> H0(dM) -> H0(M) -> H0(M,dM) -> 0`
    fn bounded_three_manifold(h2b: usize, h2m: usize, h1b: usize, h1m: usize, h0b: usize) -> ExactSequenceSpec {
        ExactSequenceSpec::new(alloc::vec![
            term("H3(M,dM)", None),
            term("H2(dM)", Some(h2b)),
            term("H2(M)", Some(h2m)),
            term("H2(M,dM)", None),
            term("H1(dM)", Some(h1b)),
            term("H1(M)", Some(h1m)),
            term("H1(M,dM)", None),
            term("H0(dM)", Some(h0b)),
            term("H0(M)", Some(1)),
            term("H0(M,dM)", None),
        ])
    }

    #[test]
    fn handlebody_instance() {
        for g in 0..=5 {
            let spec = bounded_three_manifold(1, 0, 2 * g, g, 1)
                .constrain("H1(dM)", ArrowConstraint::Epi)
                .unwrap()
                .constrain("H0(dM)", ArrowConstraint::Rank(1))
                .unwrap();
            let sol = les_rank_solver(&spec).unwrap();
            assert_eq!(sol.status, LesStatus::Determined);
            assert_eq!(sol.rank_of(&spec, "H3(M,dM)"), Some(1));
            assert_eq!(sol.rank_of(&spec, "H2(M,dM)"), Some(g));
            assert_eq!(sol.rank_of(&spec, "H1(M,dM)"), Some(0));
            assert_eq!(sol.rank_of(&spec, "H0(M,dM)"), Some(0));
        }
    }

    #[test]
    fn torus_times_interval_instance() {
        let spec = bounded_three_manifold(2, 1, 4, 2, 2)
            .constrain("H2(dM)", ArrowConstraint::Epi)
            .unwrap()
            .constrain("H1(dM)", ArrowConstraint::Epi)
            .unwrap()
            .constrain("H0(dM)", ArrowConstraint::Rank(1))
            .unwrap();
        let sol = les_rank_solver(&spec).unwrap();
        let got: Vec<_> = ["H3(M,dM)", "H2(M,dM)", "H1(M,dM)"].iter().map(|l| sol.rank_of(&spec, l)).collect();
        assert_eq!(got, alloc::vec![Some(1), Some(2), Some(1)]);
    }

    #[test]
    fn all_zero_and_empty() {
        let spec = ExactSequenceSpec::new(alloc::vec![term("a", Some(0)), term("b", None), term("c", Some(0))]);
        let sol = les_rank_solver(&spec).unwrap();
        assert_eq!(sol.term_ranks, alloc::vec![Some(0), Some(0), Some(0)]);
        let empty = ExactSequenceSpec::new(Vec::new());
        assert_eq!(les_rank_solver(&empty).unwrap().status, LesStatus::Determined);
    }

    #[test]
    fn underdetermined_is_reported() {
        // 0 -> ? -> 3 -> ? -> 0 has a one-parameter family of solutions
        let spec = ExactSequenceSpec::new(alloc::vec![term("a", None), term("b", Some(3)), term("c", None)]);
        let sol = les_rank_solver(&spec).unwrap();
        assert_eq!(sol.status, LesStatus::Underdetermined(alloc::vec![0, 2]));
    }

    #[test]
    fn inconsistency_names_first_violation() {
        // 0 -> 1 -> 0 -> 0 is not exact at the first term
        let spec = ExactSequenceSpec::new(alloc::vec![term("a", Some(1)), term("b", Some(0)), term("c", Some(0))]);
        match les_rank_solver(&spec) {
            Err(Error::InconsistentSequence(msg)) => assert!(msg.contains("exactness at b"), "{msg}"),
            other => panic!("{other:?}"),
        }
        let spec = ExactSequenceSpec::new(alloc::vec![term("a", Some(2)), term("b", Some(2))])
            .constrain("a", ArrowConstraint::Rank(1))
            .unwrap();
        assert!(matches!(les_rank_solver(&spec), Err(Error::InconsistentSequence(_))));
        let bad = ExactSequenceSpec { terms: alloc::vec![term("a", None)], arrows: alloc::vec![ArrowConstraint::Free] };
        assert!(les_rank_solver(&bad).is_err());
    }

    #[test]
    fn pair_sequence_of_a_handlebody() {
        // X = handlebody, A = boundary surface; ranks in degrees 0..=3
        let g = 3;
        let spec = ExactSequenceSpec::pair_sequence(&[1, g, 0, 0], &[1, 2 * g, 1, 0])
            .unwrap()
            .constrain("H1(A)", ArrowConstraint::Epi)
            .unwrap()
            .constrain("H0(A)", ArrowConstraint::Iso)
            .unwrap();
        let sol = les_rank_solver(&spec).unwrap();
        assert_eq!(sol.status, LesStatus::Determined);
        let rel: Vec<_> = (0..4).map(|k| sol.rank_of(&spec, &alloc::format!("H{k}(X,A)")).unwrap()).collect();
        assert_eq!(rel, alloc::vec![0, 0, g, 1]);
    }

    proptest! {
        /// Random exact sequences built from chosen map ranks are recovered
        /// when every arrow rank is given.
        #[test]
        fn recovers_random_sequences(r in proptest::collection::vec(0usize..5, 1..8), hide in proptest::collection::vec(any::<bool>(), 8)) {
            let n = r.len() + 1;
            let mut full = alloc::vec![0usize];
            full.extend(&r);
            full.push(0);
            let dims: Vec<usize> = (0..n).map(|i| full[i] + full[i + 1]).collect();
            let terms = (0..n).map(|i| term(&alloc::format!("t{i}"), if hide[i % 8] { None } else { Some(dims[i]) })).collect();
            let mut spec = ExactSequenceSpec::new(terms);
            for (i, &k) in r.iter().enumerate() {
                spec.arrows[i] = ArrowConstraint::Rank(k);
            }
            let sol = les_rank_solver(&spec).unwrap();
            prop_assert_eq!(sol.status, LesStatus::Determined);
            prop_assert_eq!(sol.term_ranks, dims.into_iter().map(Some).collect::<Vec<_>>());
        }
    }
}
