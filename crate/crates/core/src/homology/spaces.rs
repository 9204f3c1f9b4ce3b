//! Small CW models of standard low-dimensional spaces.
//!
//! Cell counts per degree:
//!
//! | space | cells | subcomplex |
//! |---|---|---|
//! | circle | 1, 1 | none |
//! | surface of genus g | 1, 2g, 1 | none |
//! | n-torus | C(n, k) in degree k | none |
//! | projective plane | 1, 1, 1 | none |
//! | Klein bottle | 1, 2, 1 | none |
//! | handlebody of genus g | 1, 2g, 1 + g, 1 | boundary surface |
//! | solid torus | handlebody of genus 1 | boundary torus |
//! | torus times interval | 2, 4, 4, 1 | both end tori |

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::complex::ChainComplexPair;
use crate::error::{Error, Result};
use crate::linalg::{k_subsets, IntMatrix};

/// Largest genus accepted by the surface and handlebody builders.
pub const MAX_GENUS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardSpace {
    Circle,
    Surface { genus: usize },
    Torus { n: usize },
    ProjectivePlane,
    KleinBottle,
    SolidTorus,
    Handlebody { genus: usize },
    TorusTimesInterval,
}

impl StandardSpace {
    /// Parses a name such as `handlebody` with its numeric parameter.
    /// Names: circle, surface, torus, rp2, klein_bottle, solid_torus, handlebody, t2xi.
    pub fn from_name(name: &str, param: Option<usize>) -> Result<Self> {
        let need = |what: &str| param.ok_or_else(|| Error::InvalidParameter(alloc::format!("{name} needs a {what}")));
        Ok(match name {
            "circle" => StandardSpace::Circle,
            "surface" => StandardSpace::Surface { genus: need("genus")? },
            "torus" => StandardSpace::Torus { n: param.unwrap_or(2) },
            "rp2" => StandardSpace::ProjectivePlane,
            "klein_bottle" => StandardSpace::KleinBottle,
            "solid_torus" => StandardSpace::SolidTorus,
            "handlebody" => StandardSpace::Handlebody { genus: need("genus")? },
            "t2xi" => StandardSpace::TorusTimesInterval,
            other => return Err(Error::InvalidParameter(alloc::format!("unknown space {other}"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            StandardSpace::Circle => "circle",
            StandardSpace::Surface { .. } => "surface",
            StandardSpace::Torus { .. } => "torus",
            StandardSpace::ProjectivePlane => "rp2",
            StandardSpace::KleinBottle => "klein_bottle",
            StandardSpace::SolidTorus => "solid_torus",
            StandardSpace::Handlebody { .. } => "handlebody",
            StandardSpace::TorusTimesInterval => "t2xi",
        }
    }
}

/// Builds the CW pair for a standard space. Bounded manifolds come with
/// their boundary as the subcomplex.
pub fn build_standard_space(space: StandardSpace) -> Result<ChainComplexPair> {
    match space {
        StandardSpace::Circle => Builder::new(1).cell(0, "v").cell(1, "e").finish(),
        StandardSpace::Surface { genus } => {
            check_genus(genus)?;
            let mut b = Builder::new(2).cell(0, "v");
            for i in 1..=genus {
                b = b.cell(1, &alloc::format!("a{i}")).cell(1, &alloc::format!("b{i}"));
            }
            // the face word is a product of commutators, so its boundary vanishes
            b.cell(2, "F").finish()
        }
        StandardSpace::Torus { n } => torus(n),
        StandardSpace::ProjectivePlane => {
            Builder::new(2).cell(0, "v").cell(1, "e").cell(2, "F").incidence(2, "F", "e", 2).finish()
        }
        StandardSpace::KleinBottle => {
            // face word a b a^-1 b
            Builder::new(2).cell(0, "v").cell(1, "a").cell(1, "b").cell(2, "F").incidence(2, "F", "b", 2).finish()
        }
        StandardSpace::SolidTorus => handlebody(1),
        StandardSpace::Handlebody { genus } => handlebody(genus),
        StandardSpace::TorusTimesInterval => torus_times_interval(),
    }
}

fn check_genus(g: usize) -> Result<()> {
    if g > MAX_GENUS {
        return Err(Error::InvalidParameter(alloc::format!("genus {g} exceeds {MAX_GENUS}")));
    }
    Ok(())
}

fn subset_label(s: &[usize]) -> String {
    if s.is_empty() {
        return "pt".into();
    }
    s.iter().map(|i| alloc::format!("x{}", i + 1)).collect()
}

fn torus(n: usize) -> Result<ChainComplexPair> {
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidParameter(alloc::format!("torus dimension {n} not in 1..=3")));
    }
    let mut b = Builder::new(n);
    for k in 0..=n {
        for s in k_subsets(n, k) {
            b = b.cell(k, &subset_label(&s));
        }
    }
    b.finish()
}

/// Boundary surface `v, a_i, b_i, F`; meridian disks `D_i` with `∂D_i = a_i`;
/// one 3-cell whose boundary is `F` (each disk appears twice with opposite
/// orientations after cutting, so those contributions cancel).
fn handlebody(genus: usize) -> Result<ChainComplexPair> {
    check_genus(genus)?;
    let mut b = Builder::new(3).cell(0, "v").boundary_cell(0, "v");
    for i in 1..=genus {
        let (a, bb) = (alloc::format!("a{i}"), alloc::format!("b{i}"));
        b = b.cell(1, &a).cell(1, &bb).boundary_cell(1, &a).boundary_cell(1, &bb);
    }
    b = b.cell(2, "F").boundary_cell(2, "F");
    for i in 1..=genus {
        let d = alloc::format!("D{i}");
        b = b.cell(2, &d).incidence(2, &d, &alloc::format!("a{i}"), 1);
    }
    b.cell(3, "B").incidence(3, "B", "F", 1).finish()
}

/// Product structure on `T^2 x [0, 1]` with `∂(σ x I) = (-1)^|σ| (σ x 1 - σ x 0)`.
fn torus_times_interval() -> Result<ChainComplexPair> {
    let base: [(&str, usize); 4] = [("pt", 0), ("x1", 1), ("x2", 1), ("x1x2", 2)];
    let mut b = Builder::new(3);
    for end in ["0", "1"] {
        for (s, k) in base {
            let l = alloc::format!("{s}*{end}");
            b = b.cell(k, &l).boundary_cell(k, &l);
        }
    }
    for (s, k) in base {
        let l = alloc::format!("{s}*I");
        let sign = if k % 2 == 0 { 1 } else { -1 };
        b = b.cell(k + 1, &l).incidence(k + 1, &l, &alloc::format!("{s}*1"), sign).incidence(
            k + 1,
            &l,
            &alloc::format!("{s}*0"),
            -sign,
        );
    }
    b.finish()
}

/// Label-driven assembly of a pair.
pub(crate) struct Builder {
    cells: Vec<Vec<String>>,
    sub: Vec<Vec<String>>,
    incidences: Vec<(usize, String, String, i64)>,
}

impl Builder {
    pub(crate) fn new(top: usize) -> Self {
        Builder {
            cells: alloc::vec![Vec::new(); top + 1],
            sub: alloc::vec![Vec::new(); top + 1],
            incidences: Vec::new(),
        }
    }

    pub(crate) fn cell(mut self, k: usize, label: &str) -> Self {
        self.cells[k].push(label.into());
        self
    }

    pub(crate) fn boundary_cell(mut self, k: usize, label: &str) -> Self {
        self.sub[k].push(label.into());
        self
    }

    /// Coefficient of the `(k-1)`-cell `face` in `∂` of the `k`-cell `cell`.
    pub(crate) fn incidence(mut self, k: usize, cell: &str, face: &str, c: i64) -> Self {
        self.incidences.push((k, cell.into(), face.into(), c));
        self
    }

    pub(crate) fn finish(self) -> Result<ChainComplexPair> {
        let top = self.cells.len() - 1;
        let mut boundaries: Vec<IntMatrix> =
            (1..=top).map(|k| IntMatrix::zeros(self.cells[k - 1].len(), self.cells[k].len())).collect();
        for (k, cell, face, c) in self.incidences {
            let find = |d: usize, l: &str| {
                self.cells[d]
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::InvalidComplex(alloc::format!("no {d}-cell {l}")))
            };
            let (col, row) = (find(k, &cell)?, find(k - 1, &face)?);
            boundaries[k - 1][(row, col)] += BigInt::from(c);
        }
        ChainComplexPair::new(self.cells, self.sub, boundaries)
    }
}
