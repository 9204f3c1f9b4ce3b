//! Triangulated surfaces used as inputs.

use alloc::vec::Vec;

/// Six-vertex projective plane (the quotient of the icosahedron by the antipodal map).
pub fn six_vertex_projective_plane() -> Vec<Vec<usize>> {
    [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2], [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4]]
        .iter()
        .map(|t| t.to_vec())
        .collect()
}

fn grid(k: usize, id: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    let mut tops = Vec::with_capacity(2 * k * k);
    for j in 0..k {
        for i in 0..k {
            tops.push(alloc::vec![id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            tops.push(alloc::vec![id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
        }
    }
    tops
}

/// `k x k` square grid on the torus, each square cut along its diagonal.
/// Simplicial for `k >= 3`.
pub fn grid_torus(k: usize) -> Vec<Vec<usize>> {
    grid(k, |i, j| (i % k) + k * (j % k))
}

/// `k x k` grid on the Klein bottle: the top edge is glued to the bottom
/// edge with a reflection. Simplicial for `k >= 3`.
pub fn grid_klein_bottle(k: usize) -> Vec<Vec<usize>> {
    grid(k, |i, j| if j >= k { (k - i % k) % k } else { (i % k) + k * j })
}
