//! The face lattice of the associahedron, indexed by leaf count.
//!
//! Faces of the polytope on `n` leaves are planar trees with `n`
//! distinguished leaves and every valence at least two; a tree with `k`
//! nodes is a face of dimension `(n - 1) - k`. Vertices are the full binary
//! trees (Catalan many) and the top cell is the corolla. Contracting one
//! edge moves up one dimension, so single contractions are exactly the
//! covering relations.
//!
//! Indexing note: we index by leaf count, so the interval (2 vertices, 1
//! edge) is `FaceLattice::new(3)`. Sources that index by the number of
//! binary operations call the same polytope K(2); their K(m) is our
//! `m + 1`-leaf lattice.

use std::collections::HashMap;

use super::enumerate::enumerate_min_valence;
use super::PlanarTree;

/// All faces of the `n`-leaf associahedron with their covering relations.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    n: usize,
    faces: Vec<PlanarTree>,
    covers: Vec<Vec<usize>>,
}

impl FaceLattice {
    /// Builds the lattice for `n >= 2` leaves.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "the face lattice needs at least two leaves");
        let faces = enumerate_min_valence(n, n - 1, 2);
        let position: HashMap<&PlanarTree, usize> =
            faces.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let covers = faces
            .iter()
            .map(|face| {
                let mut ups: Vec<usize> = face
                    .contractible_edges()
                    .into_iter()
                    .map(|edge| {
                        let up = face.contract(&edge).expect("edge listed as contractible");
                        *position.get(&up).expect("contraction stays in the lattice")
                    })
                    .collect();
                ups.sort_unstable();
                ups.dedup();
                ups
            })
            .collect();
        FaceLattice { n, faces, covers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[PlanarTree] {
        &self.faces
    }

    /// Dimension of the given face: `(n - 1) - node_count`.
    pub fn dim(&self, index: usize) -> usize {
        (self.n - 1) - self.faces[index].node_count()
    }

    /// Indices of the faces covering `index` (one edge contracted).
    pub fn covers(&self, index: usize) -> &[usize] {
        &self.covers[index]
    }

    /// Face counts by dimension, `0 ..= n - 2`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n - 1];
        for i in 0..self.faces.len() {
            counts[self.dim(i)] += 1;
        }
        counts
    }

    pub fn vertex_count(&self) -> usize {
        self.face_counts()[0]
    }

    /// Alternating sum of face counts; 1 for every `n`, since the polytope
    /// is a ball.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

/// Catalan numbers, `catalan(0) = 1`, via the recurrence
/// `C(k + 1) = C(k) * 2(2k + 1) / (k + 2)` (each step divides exactly).
pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let expected = [1u128, 1, 2, 5, 14, 42, 132, 429];
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(catalan(k), *want);
        }
    }

    #[test]
    fn interval_lattice() {
        let k3 = FaceLattice::new(3);
        assert_eq!(k3.face_counts(), vec![2, 1]);
        assert_eq!(k3.euler_characteristic(), 1);
        for i in 0..k3.faces().len() {
            if k3.dim(i) == 0 {
                assert_eq!(k3.covers(i).len(), 1);
            } else {
                assert!(k3.covers(i).is_empty());
            }
        }
    }

    #[test]
    fn pentagon_lattice() {
        let k4 = FaceLattice::new(4);
        assert_eq!(k4.face_counts(), vec![5, 5, 1]);
        assert_eq!(k4.euler_characteristic(), 1);
        // Every vertex of the pentagon lies on exactly two edges.
        for i in 0..k4.faces().len() {
            match k4.dim(i) {
                0 => assert_eq!(k4.covers(i).len(), 2),
                1 => assert_eq!(k4.covers(i).len(), 1),
                _ => assert!(k4.covers(i).is_empty()),
            }
        }
    }

    #[test]
    fn three_dimensional_counts() {
        let k5 = FaceLattice::new(5);
        assert_eq!(k5.face_counts(), vec![14, 21, 9, 1]);
        assert_eq!(k5.euler_characteristic(), 1);
        assert_eq!(k5.vertex_count() as u128, catalan(4));
    }

    #[test]
    fn covers_raise_dimension_by_one() {
        let k5 = FaceLattice::new(5);
        for i in 0..k5.faces().len() {
            for &j in k5.covers(i) {
                assert_eq!(k5.dim(j), k5.dim(i) + 1);
            }
        }
    }
}
