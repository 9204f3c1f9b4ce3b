use alloc::vec::Vec;

use num_bigint::BigInt;

use super::manifold::{sort_sign, CombinatorialManifold};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Cellular map sending each cell to `±` one cell of the target, or to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellularMap {
    /// Per degree, per source cell: target cell index and sign.
    images: Vec<Vec<Option<(usize, i8)>>>,
}

pub type CellularSelfMap = CellularMap;

impl CellularMap {
    pub fn new(images: Vec<Vec<Option<(usize, i8)>>>) -> Self {
        CellularMap { images }
    }

    /// Simplicial map induced by a vertex map; `vertex_map[i]` is the image of
    /// the `i`-th vertex of `src` (vertices in ascending label order), given as
    /// a vertex label of `dst`. Degenerate images go to zero.
    pub fn from_vertex_map(
        src: &CombinatorialManifold,
        dst: &CombinatorialManifold,
        vertex_map: &[usize],
    ) -> Result<Self> {
        let labels = src.vertices();
        if vertex_map.len() != labels.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                labels.len()
            )));
        }
        let lookup = |v: usize| labels.binary_search(&v).map(|i| vertex_map[i]).expect("vertex of src");
        let mut images = Vec::with_capacity(src.dimension() + 1);
        for k in 0..=src.dimension() {
            let mut row = Vec::with_capacity(src.faces(k).len());
            for f in src.faces(k) {
                let img: Vec<usize> = f.iter().map(|&v| lookup(v)).collect();
                let mut sorted = img.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() < img.len() {
                    row.push(None);
                    continue;
                }
                let target = dst.face_index(&sorted).ok_or_else(|| {
                    Error::NotChainMap(alloc::format!("image {sorted:?} of {f:?} is not a face of the target"))
                })?;
                row.push(Some((target, sort_sign(&img))));
            }
            images.push(row);
        }
        Ok(CellularMap { images })
    }

    pub fn identity(m: &CombinatorialManifold) -> Self {
        CellularMap {
            images: (0..=m.dimension()).map(|k| (0..m.faces(k).len()).map(|i| Some((i, 1))).collect()).collect(),
        }
    }

    pub fn image(&self, k: usize, cell: usize) -> Option<(usize, i8)> {
        self.images.get(k).and_then(|r| r.get(cell)).copied().flatten()
    }

    pub fn images(&self) -> &[Vec<Option<(usize, i8)>>] {
        &self.images
    }

    /// Vertex images, when every vertex goes to a vertex with sign `+1`.
    pub fn vertex_images(&self) -> Option<Vec<usize>> {
        self.images.first()?.iter().map(|x| x.and_then(|(t, s)| (s == 1).then_some(t))).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CellularMap) -> CellularMap {
        CellularMap {
            images: self
                .images
                .iter()
                .enumerate()
                .map(|(k, row)| {
                    row.iter().map(|x| x.and_then(|(t, s)| next.image(k, t).map(|(u, r)| (u, s * r)))).collect()
                })
                .collect(),
        }
    }

    /// Chain map matrix in degree `k`, `dst` cells by `src` cells.
    pub fn matrix(&self, k: usize, dst_cells: usize) -> IntMatrix {
        let row = &self.images[k];
        let mut m = IntMatrix::zeros(dst_cells, row.len());
        for (j, x) in row.iter().enumerate() {
            if let Some((t, s)) = x {
                m[(*t, j)] = BigInt::from(*s);
            }
        }
        m
    }

    /// Verifies shape and `∂ F = F ∂` in every degree.
    pub fn check_chain_map(&self, src: &CombinatorialManifold, dst: &CombinatorialManifold) -> Result<()> {
        if self.images.len() != src.dimension() + 1 {
            return Err(Error::NotChainMap(alloc::format!("expected {} degrees", src.dimension() + 1)));
        }
        for k in 0..=src.dimension() {
            if self.images[k].len() != src.faces(k).len() {
                return Err(Error::NotChainMap(alloc::format!("wrong number of {k}-cells")));
            }
            if self.images[k].iter().flatten().any(|&(t, s)| t >= dst.faces(k).len() || s.abs() != 1) {
                return Err(Error::NotChainMap(alloc::format!("invalid image in degree {k}")));
            }
        }
        for k in 1..=src.dimension() {
            let lhs = dst.complex().boundary(k) * &self.matrix(k, dst.faces(k).len());
            let rhs = &self.matrix(k - 1, dst.faces(k - 1).len()) * src.complex().boundary(k);
            if lhs != rhs {
                return Err(Error::NotChainMap(alloc::format!("boundary does not commute in degree {k}")));
            }
        }
        Ok(())
    }
}
