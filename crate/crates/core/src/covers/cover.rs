use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::manifold::{orientation_character, CombinatorialManifold};
use super::maps::{CellularMap, CellularSelfMap};
use crate::error::{Error, Result};

/// Orientation double cover with its projection and deck involution.
///
/// Cover vertex `2i + b` lies over the `i`-th base vertex (ascending label
/// order); `b = 0` is the sheet containing the standard orientation of the
/// lowest top cell at that vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCover {
    pub cover: CombinatorialManifold,
    pub projection: CellularMap,
    pub deck: CellularSelfMap,
    /// (base vertex index, base top cell) -> cover vertex on the `+1` sheet.
    sheet: BTreeMap<(usize, usize), usize>,
}

impl DoubleCover {
    /// Cover vertex over base vertex `v` seen from top cell `top` with local orientation `s`.
    pub fn lift_vertex(&self, v: usize, top: usize, s: i8) -> Option<usize> {
        self.sheet.get(&(v, top)).map(|&w| if s > 0 { w } else { w ^ 1 })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Two oriented copies of every top cell, glued so that orientations agree:
/// the local orientation `s` on one top cell continues as `s * transition`
/// across each codimension-1 face. The result is orientable; it is connected
/// iff the base is connected and non-orientable.
pub fn oriented_double_cover(base: &CombinatorialManifold) -> Result<DoubleCover> {
    let d = base.dimension();
    let tops = base.top_cells();
    let labels = base.vertices();
    let vidx = |v: usize| labels.binary_search(&v).expect("base vertex");
    let node = |t: usize, pos: usize, s: i8| ((t * (d + 1) + pos) << 1) | usize::from(s < 0);
    let mut uf = UnionFind((0..tops.len() * (d + 1) * 2).collect());
    for e in base.dual_edges() {
        let g = &base.faces(d - 1)[e.face];
        for v in g {
            let pa = tops[e.a].binary_search(v).expect("face vertex");
            let pb = tops[e.b].binary_search(v).expect("face vertex");
            for s in [1i8, -1] {
                uf.union(node(e.a, pa, s), node(e.b, pb, s * e.transition));
            }
        }
    }
    // name the two classes over each vertex
    let mut class_label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut sheet = BTreeMap::new();
    for (t, top) in tops.iter().enumerate() {
        for (pos, &v) in top.iter().enumerate() {
            let i = vidx(v);
            let (plus, minus) = (uf.find(node(t, pos, 1)), uf.find(node(t, pos, -1)));
            if plus == minus {
                return Err(Error::NonManifold(alloc::format!(
                    "the star of vertex {v} does not split into two sheets"
                )));
            }
            let lp = match (class_label.get(&plus), class_label.get(&minus)) {
                (Some(&a), Some(&b)) if a ^ 1 == b => a,
                (None, None) => {
                    class_label.insert(plus, 2 * i);
                    class_label.insert(minus, 2 * i + 1);
                    2 * i
                }
                _ => {
                    return Err(Error::NonManifold(alloc::format!(
                        "vertex {v} has more than two local orientation classes"
                    )))
                }
            };
            if lp / 2 != i {
                return Err(Error::NonManifold(alloc::format!("vertex {v} is glued to another vertex")));
            }
            sheet.insert((i, t), lp);
        }
    }
    let mut cover_tops = Vec::with_capacity(2 * tops.len());
    let mut slots = Vec::new();
    for (t, top) in tops.iter().enumerate() {
        for s in [1i8, -1] {
            let w: Vec<usize> = top.iter().map(|&v| sheet[&(vidx(v), t)] ^ usize::from(s < 0)).collect();
            cover_tops.push(w.clone());
            slots.push((w, s));
        }
    }
    let mut cover = CombinatorialManifold::from_simplices(d, &cover_tops)?;
    // cover labels are monotone over the base, so sorted order is the sheet orientation
    let mut slot_vec = alloc::vec![None; cover.top_cells().len()];
    for (w, s) in slots {
        let k = cover.face_index(&w).expect("cover top cell");
        slot_vec[k] = Some(s);
    }
    cover.set_orientation(slot_vec);
    let cover_vertices = cover.vertices();
    let down: Vec<usize> = cover_vertices.iter().map(|w| labels[w / 2]).collect();
    let projection = CellularMap::from_vertex_map(&cover, base, &down)?;
    let swap: Vec<usize> = cover_vertices.iter().map(|w| w ^ 1).collect();
    let deck = CellularMap::from_vertex_map(&cover, &cover, &swap)?;
    Ok(DoubleCover { cover, projection, deck, sheet })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftOutcome {
    Lifted(CellularSelfMap),
    /// No lift exists (or the map is outside the simplicial setting); the
    /// reason names the failing cell.
    Obstructed(String),
}

/// Lifts a simplicial self-map of the base to the cover, tracking
/// orientation: the copy of `σ` with local orientation `s` goes to the copy
/// of `f(σ)` with orientation `s * δ`, where `δ` is the sign of `f` on `σ`.
/// This is the lift that is the identity on the sheets when `f` is the
/// identity; composing with the deck map gives the other lift.
pub fn lift_map(base: &CombinatorialManifold, dc: &DoubleCover, f: &CellularSelfMap) -> Result<LiftOutcome> {
    f.check_chain_map(base, base)?;
    let labels = base.vertices();
    let Some(phi) = f.vertex_images() else {
        return Ok(LiftOutcome::Obstructed("some vertex does not map to a vertex".into()));
    };
    let phi_labels: Vec<usize> = phi.iter().map(|&i| labels[i]).collect();
    if CellularMap::from_vertex_map(base, base, &phi_labels).as_ref() != Ok(f) {
        return Ok(LiftOutcome::Obstructed("map is not simplicial".into()));
    }
    let d = base.dimension();
    let n_cover = dc.cover.vertex_count();
    let mut psi: Vec<Option<usize>> = alloc::vec![None; n_cover];
    for (t, top) in base.top_cells().iter().enumerate() {
        let Some((ft, delta)) = f.image(d, t) else {
            return Ok(LiftOutcome::Obstructed(alloc::format!("top cell {top:?} collapses")));
        };
        for &v in top {
            let i = labels.binary_search(&v).expect("base vertex");
            for s in [1i8, -1] {
                let src = dc.lift_vertex(i, t, s).expect("sheet");
                let dst = dc.lift_vertex(phi[i], ft, s * delta).expect("sheet");
                match psi[src] {
                    Some(old) if old != dst => {
                        return Ok(LiftOutcome::Obstructed(alloc::format!(
                            "cover vertex {src} over {v} has two candidate images"
                        )))
                    }
                    _ => psi[src] = Some(dst),
                }
            }
        }
    }
    let psi: Vec<usize> = psi.into_iter().map(|x| x.expect("every cover vertex lies in a top cell")).collect();
    let lifted = match CellularMap::from_vertex_map(&dc.cover, &dc.cover, &psi) {
        Ok(m) => m,
        Err(e) => return Ok(LiftOutcome::Obstructed(alloc::format!("{e}"))),
    };
    if lifted.then(&dc.projection) != dc.projection.then(f) {
        return Err(Error::MalformedModel("lift does not commute with the projection".into()));
    }
    lifted.check_chain_map(&dc.cover, &dc.cover)?;
    Ok(LiftOutcome::Lifted(lifted))
}

/// Whether the cover is orientable, as recomputed from scratch.
pub fn cover_is_orientable(dc: &DoubleCover) -> bool {
    orientation_character(&dc.cover).orientable
}
