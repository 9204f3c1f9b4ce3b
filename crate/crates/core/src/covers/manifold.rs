use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::homology::ChainComplexPair;
use crate::linalg::IntMatrix;

/// Two top cells meeting along a codimension-1 face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualEdge {
    pub face: usize,
    pub a: usize,
    pub b: usize,
    /// `-[a:face][b:face]`: `+1` iff the standard orientations of `a` and `b`
    /// agree across the face.
    pub transition: i8,
}

/// Pure simplicial complex whose top simplices form a pseudo-manifold:
/// every codimension-1 face bounds at most two top simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialManifold {
    dimension: usize,
    /// Sorted vertex tuples, per degree, in lexicographic order.
    faces: Vec<Vec<Vec<usize>>>,
    index: Vec<BTreeMap<Vec<usize>, usize>>,
    complex: ChainComplexPair,
    edges: Vec<DualEdge>,
    orientation: Vec<Option<i8>>,
}

fn label(face: &[usize]) -> String {
    let parts: Vec<String> = face.iter().map(|v| alloc::format!("{v}")).collect();
    parts.join("-")
}

/// Sign of the permutation sorting `v` (entries distinct).
pub(crate) fn sort_sign(v: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl CombinatorialManifold {
    /// Builds the complex generated by the given top simplices (vertex lists
    /// of length `dimension + 1`).
    pub fn from_simplices(dimension: usize, tops: &[Vec<usize>]) -> Result<Self> {
        if tops.is_empty() || dimension == 0 {
            return Err(Error::NonManifold("need top simplices of positive dimension".into()));
        }
        let mut faces: Vec<BTreeSet<Vec<usize>>> = alloc::vec![BTreeSet::new(); dimension + 1];
        for t in tops {
            let mut s = t.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != dimension + 1 || t.len() != dimension + 1 {
                return Err(Error::NonManifold(alloc::format!(
                    "simplex {t:?} does not have {} distinct vertices",
                    dimension + 1
                )));
            }
            if !faces[dimension].insert(s.clone()) {
                return Err(Error::NonManifold(alloc::format!("simplex {t:?} listed twice")));
            }
            for (k, fk) in faces.iter_mut().enumerate().take(dimension) {
                for sub in crate::linalg::k_subsets(dimension + 1, k + 1) {
                    fk.insert(sub.iter().map(|&i| s[i]).collect());
                }
            }
        }
        let faces: Vec<Vec<Vec<usize>>> = faces.into_iter().map(|f| f.into_iter().collect()).collect();
        let index: Vec<BTreeMap<Vec<usize>, usize>> =
            faces.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()).collect();
        let mut boundaries = alloc::vec![IntMatrix::zeros(0, faces[0].len())];
        for k in 1..=dimension {
            let mut d = IntMatrix::zeros(faces[k - 1].len(), faces[k].len());
            for (j, f) in faces[k].iter().enumerate() {
                for i in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(i);
                    d[(index[k - 1][&g], j)] = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(d);
        }
        let cells = faces.iter().map(|fs| fs.iter().map(|f| label(f)).collect()).collect();
        let complex = ChainComplexPair::from_parts(cells, alloc::vec![Vec::new(); dimension + 1], boundaries)?;
        let edges = dual_edges(dimension, &faces, &index)?;
        let n_top = faces[dimension].len();
        Ok(CombinatorialManifold { dimension, faces, index, complex, edges, orientation: alloc::vec![None; n_top] })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn complex(&self) -> &ChainComplexPair {
        &self.complex
    }

    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        self.faces.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn top_cells(&self) -> &[Vec<usize>] {
        self.faces(self.dimension)
    }

    pub fn vertex_count(&self) -> usize {
        self.faces[0].len()
    }

    /// Vertex labels, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        self.faces[0].iter().map(|f| f[0]).collect()
    }

    pub fn face_index(&self, face: &[usize]) -> Option<usize> {
        self.index.get(face.len().checked_sub(1)?)?.get(face).copied()
    }

    pub fn dual_edges(&self) -> &[DualEdge] {
        &self.edges
    }

    /// Local orientation slots: `±1` relative to the sorted vertex order.
    pub fn orientation_slots(&self) -> &[Option<i8>] {
        &self.orientation
    }

    pub(crate) fn set_orientation(&mut self, slots: Vec<Option<i8>>) {
        self.orientation = slots;
    }

    /// Closed iff every codimension-1 face bounds exactly two top cells.
    pub fn is_closed(&self) -> bool {
        let mut count = alloc::vec![0usize; self.faces(self.dimension - 1).len()];
        for t in self.top_cells() {
            for i in 0..t.len() {
                let mut g = t.clone();
                g.remove(i);
                count[self.index[self.dimension - 1][&g]] += 1;
            }
        }
        count.iter().all(|&c| c == 2)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.complex.euler_characteristic(crate::homology::HomologyMode::Absolute)
    }

    pub(crate) fn neighbours(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = alloc::vec![Vec::new(); self.top_cells().len()];
        for (e, d) in self.edges.iter().enumerate() {
            adj[d.a].push((d.b, e));
            adj[d.b].push((d.a, e));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}

fn dual_edges(
    dimension: usize,
    faces: &[Vec<Vec<usize>>],
    index: &[BTreeMap<Vec<usize>, usize>],
) -> Result<Vec<DualEdge>> {
    // (top cell, incidence) per codimension-1 face
    let mut around: Vec<Vec<(usize, i8)>> = alloc::vec![Vec::new(); faces[dimension - 1].len()];
    for (t, f) in faces[dimension].iter().enumerate() {
        for i in 0..f.len() {
            let mut g = f.clone();
            g.remove(i);
            around[index[dimension - 1][&g]].push((t, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    let mut edges = Vec::new();
    for (g, tops) in around.iter().enumerate() {
        match tops.as_slice() {
            [] | [_] => {}
            [(a, ia), (b, ib)] => edges.push(DualEdge { face: g, a: *a, b: *b, transition: -ia * ib }),
            _ => {
                return Err(Error::NonManifold(alloc::format!(
                    "face {} bounds {} top cells",
                    label(&faces[dimension - 1][g]),
                    tops.len()
                )))
            }
        }
    }
    Ok(edges)
}

/// Result of propagating local orientations over the dual graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationCharacter {
    pub orientable: bool,
    /// Propagated orientation of each top cell (breadth-first from the lowest
    /// cell of each component, which gets `+1`).
    pub orientation: Vec<i8>,
    /// Per dual edge, `o(a) * transition * o(b)`: `+1` on every spanning-tree
    /// edge; a loop reverses orientation iff its product is `-1`.
    pub edge_character: Vec<i8>,
    pub components: usize,
    /// Top cells along a closed dual path that reverses orientation, when one exists.
    pub reversing_loop: Option<Vec<usize>>,
}

pub fn orientation_character(m: &CombinatorialManifold) -> OrientationCharacter {
    let n = m.top_cells().len();
    let adj = m.neighbours();
    let mut orientation = alloc::vec![0i8; n];
    let mut parent: Vec<Option<usize>> = alloc::vec![None; n];
    let mut components = 0;
    for root in 0..n {
        if orientation[root] != 0 {
            continue;
        }
        components += 1;
        orientation[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for &(b, e) in &adj[a] {
                if orientation[b] == 0 {
                    orientation[b] = orientation[a] * m.edges[e].transition;
                    parent[b] = Some(a);
                    queue.push_back(b);
                }
            }
        }
    }
    let edge_character: Vec<i8> = m.edges.iter().map(|d| orientation[d.a] * d.transition * orientation[d.b]).collect();
    let reversing_loop = edge_character.iter().position(|&c| c < 0).map(|e| {
        let d = m.edges[e];
        let path = |mut x: usize| {
            let mut p = alloc::vec![x];
            while let Some(q) = parent[x] {
                p.push(q);
                x = q;
            }
            p
        };
        let (pa, pb) = (path(d.a), path(d.b));
        // a -> ... -> lowest common ancestor -> ... -> b, closed by the edge b -> a
        let common = pa.iter().rev().zip(pb.iter().rev()).take_while(|(x, y)| x == y).count();
        let mut cycle: Vec<usize> = pa[..=pa.len() - common].to_vec();
        cycle.extend(pb[..pb.len() - common].iter().rev());
        cycle
    });
    OrientationCharacter {
        orientable: edge_character.iter().all(|&c| c > 0),
        orientation,
        edge_character,
        components,
        reversing_loop,
    }
}
