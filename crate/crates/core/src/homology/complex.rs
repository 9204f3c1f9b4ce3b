use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};

/// Cellular chain complex of a space `X` together with a subcomplex `A`.
///
/// `boundaries[k]` is `∂_k : C_k -> C_{k-1}` with one column per `k`-cell;
/// `boundaries[0]` is the empty map out of degree zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexPair {
    cells: Vec<Vec<String>>,
    subcomplex: Vec<Vec<usize>>,
    boundaries: Vec<IntMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologyMode {
    Absolute,
    Relative,
}

/// Finitely generated abelian group `Z^free_rank + Z/t_1 + ... + Z/t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Torsion coefficients, each at least 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        HomologyGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Dimension over the reals.
    pub fn real_rank(&self) -> usize {
        self.free_rank
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| alloc::format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

impl ChainComplexPair {
    /// Builds and validates a pair.
    ///
    /// `cells[k]` labels the `k`-cells of `X`; `subcomplex[k]` lists labels of
    /// `k`-cells of `A`; `boundaries` holds `∂_1 ..= ∂_top`.
    pub fn new(cells: Vec<Vec<String>>, subcomplex: Vec<Vec<String>>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidComplex("at least degree 0 must be present".into()));
        }
        let top = cells.len() - 1;
        if boundaries.len() != top {
            return Err(Error::InvalidComplex(alloc::format!(
                "expected {top} boundary matrices, got {}",
                boundaries.len()
            )));
        }
        if subcomplex.len() > cells.len() {
            return Err(Error::InvalidComplex("subcomplex has cells above the top dimension".into()));
        }
        let mut sub_idx = Vec::with_capacity(cells.len());
        for (k, labels) in cells.iter().enumerate() {
            let unique: BTreeSet<&String> = labels.iter().collect();
            if unique.len() != labels.len() {
                return Err(Error::InvalidComplex(alloc::format!("duplicate cell label in degree {k}")));
            }
            let mut idx = Vec::new();
            for l in subcomplex.get(k).map(Vec::as_slice).unwrap_or(&[]) {
                let i = labels.iter().position(|c| c == l).ok_or_else(|| {
                    Error::InvalidComplex(alloc::format!("subcomplex cell {l} is not a {k}-cell of X"))
                })?;
                idx.push(i);
            }
            idx.sort_unstable();
            idx.dedup();
            sub_idx.push(idx);
        }
        let mut all = Vec::with_capacity(cells.len());
        all.push(IntMatrix::zeros(0, cells[0].len()));
        all.extend(boundaries);
        Self::from_parts(cells, sub_idx, all)
    }

    /// Index-based constructor; `boundaries` includes `∂_0`.
    pub(crate) fn from_parts(
        cells: Vec<Vec<String>>,
        subcomplex: Vec<Vec<usize>>,
        boundaries: Vec<IntMatrix>,
    ) -> Result<Self> {
        let pair = ChainComplexPair { cells, subcomplex, boundaries };
        pair.validate()?;
        Ok(pair)
    }

    fn validate(&self) -> Result<()> {
        for k in 0..=self.top_dimension() {
            let d = &self.boundaries[k];
            let rows = if k == 0 { 0 } else { self.cells[k - 1].len() };
            if d.rows() != rows || d.cols() != self.cells[k].len() {
                return Err(Error::InvalidComplex(alloc::format!(
                    "boundary in degree {k} is {}x{}, expected {rows}x{}",
                    d.rows(),
                    d.cols(),
                    self.cells[k].len()
                )));
            }
        }
        for k in 2..=self.top_dimension() {
            if !(&self.boundaries[k - 1] * &self.boundaries[k]).is_zero() {
                return Err(Error::BoundarySquareNonzero { degree: k });
            }
        }
        for k in 1..=self.top_dimension() {
            let below: BTreeSet<usize> = self.subcomplex[k - 1].iter().copied().collect();
            for &c in &self.subcomplex[k] {
                for r in 0..self.cells[k - 1].len() {
                    if !self.boundaries[k][(r, c)].is_zero() && !below.contains(&r) {
                        return Err(Error::InvalidComplex(alloc::format!(
                            "boundary of subcomplex cell {} meets {} outside the subcomplex",
                            self.cells[k][c],
                            self.cells[k - 1][r]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn top_dimension(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, k: usize) -> &[String] {
        self.cells.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn cell_count(&self, k: usize) -> usize {
        self.cells(k).len()
    }

    pub fn subcomplex_indices(&self, k: usize) -> &[usize] {
        self.subcomplex.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn subcomplex_labels(&self, k: usize) -> Vec<String> {
        self.subcomplex_indices(k).iter().map(|&i| self.cells[k][i].clone()).collect()
    }

    /// `∂_k` of `X` (`k = 0` gives the empty map).
    pub fn boundary(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k]
    }

    /// Same complex with an empty subcomplex.
    pub fn without_subcomplex(&self) -> Self {
        ChainComplexPair {
            cells: self.cells.clone(),
            subcomplex: alloc::vec![Vec::new(); self.cells.len()],
            boundaries: self.boundaries.clone(),
        }
    }

    /// The pair `(X, X)`.
    pub fn with_full_subcomplex(&self) -> Self {
        ChainComplexPair {
            cells: self.cells.clone(),
            subcomplex: self.cells.iter().map(|c| (0..c.len()).collect()).collect(),
            boundaries: self.boundaries.clone(),
        }
    }

    fn complement(&self, k: usize) -> Vec<usize> {
        let sub: BTreeSet<usize> = self.subcomplex_indices(k).iter().copied().collect();
        (0..self.cell_count(k)).filter(|i| !sub.contains(i)).collect()
    }

    /// Boundary matrices of the quotient complex `C(X) / C(A)`: rows and
    /// columns of subcomplex cells deleted. Includes `∂_0`.
    pub fn relative_boundaries(&self) -> Vec<IntMatrix> {
        (0..=self.top_dimension())
            .map(|k| {
                let cols = self.complement(k);
                let rows = if k == 0 { Vec::new() } else { self.complement(k - 1) };
                self.boundaries[k].submatrix(&rows, &cols)
            })
            .collect()
    }

    /// Boundary matrices of the subcomplex `A` alone. Includes `∂_0`.
    pub fn subcomplex_boundaries(&self) -> Vec<IntMatrix> {
        (0..=self.top_dimension())
            .map(|k| {
                let cols = self.subcomplex_indices(k).to_vec();
                let rows = if k == 0 { Vec::new() } else { self.subcomplex_indices(k - 1).to_vec() };
                self.boundaries[k].submatrix(&rows, &cols)
            })
            .collect()
    }

    /// Alternating count of cells of `X` (absolute) or of `X \ A` (relative).
    pub fn euler_characteristic(&self, mode: HomologyMode) -> i64 {
        (0..=self.top_dimension())
            .map(|k| {
                let n = match mode {
                    HomologyMode::Absolute => self.cell_count(k),
                    HomologyMode::Relative => self.cell_count(k) - self.subcomplex_indices(k).len(),
                } as i64;
                if k % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Integral homology of the subcomplex `A`.
    pub fn subcomplex_homology(&self) -> Vec<HomologyGroup> {
        homology_of_complex(&self.subcomplex_boundaries())
    }
}

/// Homology of a chain complex given by `∂_0, ..., ∂_top` (column convention).
pub fn homology_of_complex(boundaries: &[IntMatrix]) -> Vec<HomologyGroup> {
    let snfs: Vec<_> = boundaries.iter().map(smith_normal_form).collect();
    (0..boundaries.len())
        .map(|k| {
            let n = boundaries[k].cols();
            let rank_out = snfs[k].rank();
            let (rank_in, torsion) = match snfs.get(k + 1) {
                Some(s) => (s.rank(), s.torsion()),
                None => (0, Vec::new()),
            };
            HomologyGroup { free_rank: n - rank_out - rank_in, torsion }
        })
        .collect()
}

/// Integral homology `H_*(X)` or `H_*(X, A)`, one group per degree `0..=top`.
pub fn homology(pair: &ChainComplexPair, mode: HomologyMode) -> Vec<HomologyGroup> {
    match mode {
        HomologyMode::Absolute => homology_of_complex(&pair.boundaries),
        HomologyMode::Relative => homology_of_complex(&pair.relative_boundaries()),
    }
}

/// Real-coefficient cohomology rank: torsion dies over a field, so this is the free rank.
pub fn cohomology_rank(h: &HomologyGroup) -> usize {
    h.free_rank
}

/// Alternating sum of free ranks.
pub fn euler_characteristic_of(groups: &[HomologyGroup]) -> i64 {
    groups.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) }).sum()
}

#[cfg(test)]
fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}
