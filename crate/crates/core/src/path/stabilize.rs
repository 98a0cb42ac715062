//! Nullhomotopy certificates by stabilization: a closed loop of
//! configurations, once padded with one extra axis, contracts to a point in
//! two stages, and every one-cell of the contraction mesh is certified by the
//! exact segment checker.
//!
//! Stage one shrinks cube `j`'s new axis from `[0, 1]` to the slab
//! `[(j-1)/m, j/m]`; the old axes never move within a vertical, so the
//! keyframe's own separation witnesses persist, and along the diagonals the
//! old-axis separation functions agree with those of the corresponding loop
//! segment. Stage two holds the slabs fixed and contracts the loop's
//! motion straight to the basepoint: with the slabs in place, every pair of
//! cubes is permanently separated along the new axis, so arbitrary straight
//! lines between slabbed configurations are valid.

use crate::operad::{Cube, CubeConfig, Interval};
use crate::path::{PathError, PlPath};
use crate::rational::Rational;

/// The mesh of certified segments contracting a padded loop to a point.
#[derive(Clone, Debug)]
pub struct Nullhomotopy {
    lifted: PlPath,
    slabbed: PlPath,
    verticals: Vec<PlPath>,
    diagonals: Vec<PlPath>,
    spokes: Vec<PlPath>,
    basepoint: CubeConfig,
}

impl Nullhomotopy {
    /// The input loop with one padded axis.
    pub fn lifted(&self) -> &PlPath {
        &self.lifted
    }

    /// The loop with each cube confined to its slab on the new axis.
    pub fn slabbed(&self) -> &PlPath {
        &self.slabbed
    }

    /// One path per keyframe, from the lifted keyframe to the slabbed one.
    pub fn verticals(&self) -> &[PlPath] {
        &self.verticals
    }

    /// One path per segment, from a lifted keyframe to the next slabbed one;
    /// together with the verticals these triangulate stage one.
    pub fn diagonals(&self) -> &[PlPath] {
        &self.diagonals
    }

    /// One path per keyframe, from the slabbed keyframe straight to the
    /// basepoint; these triangulate stage two.
    pub fn spokes(&self) -> &[PlPath] {
        &self.spokes
    }

    /// The slabbed starting configuration everything contracts to.
    pub fn basepoint(&self) -> &CubeConfig {
        &self.basepoint
    }

    /// Total number of one-cells in the mesh.
    pub fn segment_count(&self) -> usize {
        self.lifted.segment_count()
            + self.slabbed.segment_count()
            + self.verticals.len()
            + self.diagonals.len()
            + self.spokes.len()
    }

    /// Certifies every one-cell of the mesh with the exact checker.
    pub fn certify(&self) -> Result<(), PathError> {
        self.lifted.validate()?;
        self.slabbed.validate()?;
        for path in self
            .verticals
            .iter()
            .chain(&self.diagonals)
            .chain(&self.spokes)
        {
            path.validate()?;
        }
        Ok(())
    }
}

/// Replaces each cube's last axis by its slab `[(j-1)/m, j/m]`.
fn slab_config(config: &CubeConfig) -> CubeConfig {
    let m = config.arity() as i64;
    let dim = config.dim();
    let cubes = config
        .cubes()
        .iter()
        .enumerate()
        .map(|(idx, cube)| {
            let j = idx as i64;
            let mut axes: Vec<Interval> = cube.axes()[..dim - 1].to_vec();
            axes.push(
                Interval::new(Rational::new(j, m), Rational::new(j + 1, m))
                    .expect("slabs partition the axis"),
            );
            Cube::new(axes).expect("same dimension")
        })
        .collect();
    CubeConfig::new(dim, cubes).expect("slabs are pairwise disjoint")
}

/// Builds the stabilized contraction mesh for a closed, valid loop of
/// positive arity. The certificate construction itself is cheap; call
/// [`Nullhomotopy::certify`] to run the checker over every one-cell.
pub fn stabilize_fill(loop_path: &PlPath) -> Result<Nullhomotopy, PathError> {
    if !loop_path.is_closed() {
        return Err(PathError::Assembly(
            "stabilization needs a closed loop".into(),
        ));
    }
    if loop_path.arity() == 0 {
        return Err(PathError::Assembly(
            "stabilization needs at least one cube".into(),
        ));
    }
    loop_path.validate()?;
    let lifted = loop_path.include_dim(loop_path.dim() + 1)?;
    let slab_keyframes: Vec<CubeConfig> =
        lifted.keyframes().iter().map(slab_config).collect();
    let slabbed = PlPath::new(lifted.times().to_vec(), slab_keyframes.clone())?;
    let verticals = lifted
        .keyframes()
        .iter()
        .zip(&slab_keyframes)
        .map(|(top, bottom)| PlPath::line(top.clone(), bottom.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let diagonals = (0..lifted.segment_count())
        .map(|i| PlPath::line(lifted.keyframes()[i].clone(), slab_keyframes[i + 1].clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let basepoint = slab_keyframes[0].clone();
    let spokes = slab_keyframes
        .iter()
        .map(|kf| {
            if kf == &basepoint {
                Ok(PlPath::constant(basepoint.clone()))
            } else {
                PlPath::line(kf.clone(), basepoint.clone())
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Nullhomotopy {
        lifted,
        slabbed,
        verticals,
        diagonals,
        spokes,
        basepoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::Permutation;
    use crate::path::loops::{braiding_path, two_slot_multiplication};

    /// The braiding followed by its relabelled copy: a closed loop at the
    /// planar multiplication that exchanges the slots twice.
    fn double_braiding() -> PlPath {
        let sigma = braiding_path();
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let sigma_swapped = sigma.permute(&swap).unwrap();
        sigma.concat(&sigma_swapped).unwrap()
    }

    #[test]
    fn double_braiding_closes_up() {
        let loop_path = double_braiding();
        assert!(loop_path.is_closed());
        assert_eq!(loop_path.start(), &two_slot_multiplication(2));
        assert_eq!(loop_path.validate(), Ok(()));
    }

    #[test]
    fn stabilization_mesh_certifies_in_one_more_dimension() {
        let fill = stabilize_fill(&double_braiding()).unwrap();
        assert_eq!(fill.lifted().dim(), 3);
        assert_eq!(fill.certify(), Ok(()));
        // 6 loop segments on each level, 7 verticals, 6 diagonals, 7 spokes.
        assert_eq!(fill.segment_count(), 6 + 6 + 7 + 6 + 7);
    }

    #[test]
    fn slabs_partition_the_new_axis() {
        let fill = stabilize_fill(&double_braiding()).unwrap();
        let base = fill.basepoint();
        assert_eq!(base.cube(1).axis(2).lo(), &Rational::zero());
        assert_eq!(base.cube(1).axis(2).hi(), &Rational::new(1, 2));
        assert_eq!(base.cube(2).axis(2).lo(), &Rational::new(1, 2));
        assert_eq!(base.cube(2).axis(2).hi(), &Rational::one());
    }

    #[test]
    fn open_paths_are_rejected() {
        let sigma = braiding_path();
        assert!(matches!(
            stabilize_fill(&sigma),
            Err(PathError::Assembly(_))
        ));
    }

    #[test]
    fn hexagon_loop_also_stabilizes() {
        use crate::path::loops::{assemble_hexagon, associator_path};
        let loop_path = assemble_hexagon(&braiding_path(), &associator_path())
            .unwrap()
            .to_path();
        let fill = stabilize_fill(&loop_path).unwrap();
        assert_eq!(fill.certify(), Ok(()));
    }
}
