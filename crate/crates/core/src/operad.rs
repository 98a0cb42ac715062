//! Little-cubes configurations with exact rational coordinates.
//!
//! A configuration of arity `m` in dimension `n` is a labelled list of `m`
//! axis-aligned sub-cubes of the unit cube whose interiors are pairwise
//! disjoint; disjointness is always witnessed by a separating axis. The
//! structure maps implemented here are substitution (`compose`), single-slot
//! substitution (`compose_at`), the symmetric-group action (`permute`),
//! the dimension-raising inclusion (`include_dim`), and the interval-by-cube
//! pairing (`cartesian_pairing`).

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// Errors raised by configuration constructors and structure maps.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OperadError {
    #[error("interval has lo >= hi: [{lo}, {hi}]")]
    DegenerateInterval { lo: Rational, hi: Rational },
    #[error("interval [{lo}, {hi}] leaves the unit range")]
    OutOfUnitRange { lo: Rational, hi: Rational },
    #[error("cube has no axes")]
    ZeroDimension,
    #[error("cube dimension {found} does not match configuration dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cubes {i} and {j} have overlapping interiors")]
    Overlap { i: usize, j: usize },
    #[error("expected {expected} inner configurations, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("slot index {index} out of range 1..={arity}")]
    SlotOutOfRange { index: usize, arity: usize },
    #[error("images {images:?} are not a permutation of 1..={arity}")]
    NotAPermutation { images: Vec<usize>, arity: usize },
    #[error("target dimension {target} is below current dimension {current}")]
    CannotShrinkDimension { target: usize, current: usize },
    #[error("configuration is not an ordered one-dimensional interval family")]
    NotOrdered,
}

/// A nondegenerate closed sub-interval `[lo, hi]` of the unit interval.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, OperadError> {
        if lo >= hi {
            return Err(OperadError::DegenerateInterval { lo, hi });
        }
        if lo.is_negative() || hi > Rational::one() {
            return Err(OperadError::OutOfUnitRange { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn whole() -> Self {
        Interval {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        Rational::midpoint(&self.lo, &self.hi)
    }

    /// Affine image of `inner` under the increasing affine map sending
    /// `[0, 1]` onto `self`.
    pub fn embed(&self, inner: &Interval) -> Interval {
        let len = self.length();
        Interval {
            lo: &self.lo + &len * &inner.lo,
            hi: &self.lo + &len * &inner.hi,
        }
    }
}

/// An axis-aligned sub-cube of the unit cube, one interval per axis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cube {
    axes: Vec<Interval>,
}

impl Cube {
    pub fn new(axes: Vec<Interval>) -> Result<Self, OperadError> {
        if axes.is_empty() {
            return Err(OperadError::ZeroDimension);
        }
        Ok(Cube { axes })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axis(&self, i: usize) -> &Interval {
        &self.axes[i]
    }

    pub fn axes(&self) -> &[Interval] {
        &self.axes
    }

    /// Per-axis affine embedding of `inner` into `self`.
    pub fn embed(&self, inner: &Cube) -> Result<Cube, OperadError> {
        if self.dim() != inner.dim() {
            return Err(OperadError::DimensionMismatch {
                expected: self.dim(),
                found: inner.dim(),
            });
        }
        let axes = self
            .axes
            .iter()
            .zip(&inner.axes)
            .map(|(outer, inner)| outer.embed(inner))
            .collect();
        Ok(Cube { axes })
    }

    /// True when some axis separates the two cubes, i.e. their interiors are
    /// disjoint with an axis-aligned witness.
    pub fn interiors_disjoint(&self, other: &Cube) -> bool {
        self.axes
            .iter()
            .zip(&other.axes)
            .any(|(a, b)| a.hi <= b.lo || b.hi <= a.lo)
    }
}

/// Affine embedding of one cube into another, exposed as a free function for
/// direct use in tests and oracles.
pub fn affine_embed(outer: &Cube, inner: &Cube) -> Result<Cube, OperadError> {
    outer.embed(inner)
}

/// A labelled configuration of little cubes. The label of a cube is its
/// position in the list (1-based in all user-facing indices).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubeConfig {
    dim: usize,
    cubes: Vec<Cube>,
}

impl CubeConfig {
    /// Validates dimensions and pairwise interior disjointness.
    pub fn new(dim: usize, cubes: Vec<Cube>) -> Result<Self, OperadError> {
        if dim == 0 {
            return Err(OperadError::ZeroDimension);
        }
        for cube in &cubes {
            if cube.dim() != dim {
                return Err(OperadError::DimensionMismatch {
                    expected: dim,
                    found: cube.dim(),
                });
            }
        }
        for i in 0..cubes.len() {
            for j in (i + 1)..cubes.len() {
                if !cubes[i].interiors_disjoint(&cubes[j]) {
                    return Err(OperadError::Overlap { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(CubeConfig { dim, cubes })
    }

    /// The arity-1 identity configuration: the whole unit cube.
    pub fn identity(dim: usize) -> Self {
        let axes = vec![Interval::whole(); dim.max(1)];
        CubeConfig {
            dim: dim.max(1),
            cubes: vec![Cube { axes }],
        }
    }

    /// The arity-0 configuration.
    pub fn empty(dim: usize) -> Self {
        CubeConfig {
            dim: dim.max(1),
            cubes: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.cubes.len()
    }

    pub fn cube(&self, label: usize) -> &Cube {
        &self.cubes[label - 1]
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    /// Full operadic substitution: plugs `parts[i]` into cube `i+1`. The
    /// result lists the cubes of part 1 (embedded), then part 2, and so on;
    /// disjointness holds by construction and is re-verified.
    pub fn compose(&self, parts: &[CubeConfig]) -> Result<CubeConfig, OperadError> {
        if parts.len() != self.arity() {
            return Err(OperadError::ArityMismatch {
                expected: self.arity(),
                found: parts.len(),
            });
        }
        let mut cubes = Vec::new();
        for (slot, part) in self.cubes.iter().zip(parts) {
            if part.dim != self.dim {
                return Err(OperadError::DimensionMismatch {
                    expected: self.dim,
                    found: part.dim,
                });
            }
            for inner in &part.cubes {
                cubes.push(slot.embed(inner)?);
            }
        }
        CubeConfig::new(self.dim, cubes)
    }

    /// Single-slot substitution: `self` with `inner` plugged into cube `i`.
    pub fn compose_at(&self, i: usize, inner: &CubeConfig) -> Result<CubeConfig, OperadError> {
        if i == 0 || i > self.arity() {
            return Err(OperadError::SlotOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        let parts: Vec<CubeConfig> = (1..=self.arity())
            .map(|slot| {
                if slot == i {
                    inner.clone()
                } else {
                    CubeConfig::identity(self.dim)
                }
            })
            .collect();
        self.compose(&parts)
    }

    /// Relabels cubes: the cube labelled `i` gets label `perm.image(i)`.
    pub fn permute(&self, perm: &Permutation) -> Result<CubeConfig, OperadError> {
        if perm.degree() != self.arity() {
            return Err(OperadError::NotAPermutation {
                images: perm.images().to_vec(),
                arity: self.arity(),
            });
        }
        let mut cubes = vec![None; self.arity()];
        for (idx, cube) in self.cubes.iter().enumerate() {
            cubes[perm.image(idx + 1) - 1] = Some(cube.clone());
        }
        Ok(CubeConfig {
            dim: self.dim,
            cubes: cubes.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// Pads every cube with full `[0, 1]` factors on new trailing axes.
    pub fn include_dim(&self, target: usize) -> Result<CubeConfig, OperadError> {
        if target < self.dim {
            return Err(OperadError::CannotShrinkDimension {
                target,
                current: self.dim,
            });
        }
        let cubes = self
            .cubes
            .iter()
            .map(|cube| {
                let mut axes = cube.axes.clone();
                axes.resize(target, Interval::whole());
                Cube { axes }
            })
            .collect();
        CubeConfig::new(target, cubes)
    }

    /// Prepends a full `[0, 1]` axis to every cube, raising the dimension by
    /// one without moving anything.
    pub fn prepend_full_axis(&self) -> CubeConfig {
        let cubes = self
            .cubes
            .iter()
            .map(|cube| {
                let mut axes = Vec::with_capacity(cube.dim() + 1);
                axes.push(Interval::whole());
                axes.extend(cube.axes.iter().cloned());
                Cube { axes }
            })
            .collect();
        CubeConfig {
            dim: self.dim + 1,
            cubes,
        }
    }
}

/// Pairs an ordered interval family with a configuration one dimension down:
/// the cube labelled `(i-1)*m + j` is `intervals[i] x c[j]`, so labels run in
/// lexicographic order in `(i, j)`.
pub fn cartesian_pairing(
    intervals: &IntervalConfig,
    config: &CubeConfig,
) -> Result<CubeConfig, OperadError> {
    let m = config.arity();
    let mut cubes = Vec::with_capacity(intervals.arity() * m);
    for interval in intervals.intervals() {
        for cube in config.cubes() {
            let mut axes = Vec::with_capacity(config.dim() + 1);
            axes.push(interval.clone());
            axes.extend(cube.axes().iter().cloned());
            cubes.push(Cube { axes });
        }
    }
    CubeConfig::new(config.dim() + 1, cubes)
}

/// The permutation relating the two evaluation orders of the pairing: it
/// sends the lexicographic label of `(i, j)` to the colexicographic one,
/// for `i` up to `l` and `j` up to `m`.
pub fn lex_to_colex(l: usize, m: usize) -> Permutation {
    let mut images = vec![0; l * m];
    for i in 1..=l {
        for j in 1..=m {
            images[(i - 1) * m + (j - 1)] = (j - 1) * l + i;
        }
    }
    Permutation::new(images).expect("lex/colex relabelling is a bijection")
}

/// An ordered family of sub-intervals of `[0, 1]`: consecutive intervals may
/// touch but never overlap, and labels increase left to right. These are the
/// one-dimensional configurations on which composition never permutes labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntervalConfig {
    intervals: Vec<Interval>,
}

impl IntervalConfig {
    pub fn new(intervals: Vec<Interval>) -> Result<Self, OperadError> {
        for pair in intervals.windows(2) {
            if pair[0].hi > pair[1].lo {
                return Err(OperadError::NotOrdered);
            }
        }
        Ok(IntervalConfig { intervals })
    }

    pub fn from_pairs(pairs: &[(Rational, Rational)]) -> Result<Self, OperadError> {
        let intervals = pairs
            .iter()
            .map(|(lo, hi)| Interval::new(lo.clone(), hi.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        IntervalConfig::new(intervals)
    }

    /// The arity-1 identity `([0, 1])`.
    pub fn whole() -> Self {
        IntervalConfig {
            intervals: vec![Interval::whole()],
        }
    }

    /// The arity-0 family.
    pub fn empty() -> Self {
        IntervalConfig {
            intervals: Vec::new(),
        }
    }

    /// `([0, 1/2], [1/2, 1])`: the standard two-slot multiplication.
    pub fn half_split() -> Self {
        Self::from_pairs(&[
            (Rational::zero(), Rational::new(1, 2)),
            (Rational::new(1, 2), Rational::one()),
        ])
        .expect("half split is ordered")
    }

    /// `([0, 1/2])`: the degenerate right-unit composite.
    pub fn left_half() -> Self {
        Self::from_pairs(&[(Rational::zero(), Rational::new(1, 2))]).expect("ordered")
    }

    /// `([1/2, 1])`: the degenerate left-unit composite.
    pub fn right_half() -> Self {
        Self::from_pairs(&[(Rational::new(1, 2), Rational::one())]).expect("ordered")
    }

    pub fn arity(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, label: usize) -> &Interval {
        &self.intervals[label - 1]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Substitution inside the ordered-family suboperad; agrees with
    /// `CubeConfig::compose` through `to_config`.
    pub fn compose(&self, parts: &[IntervalConfig]) -> Result<IntervalConfig, OperadError> {
        if parts.len() != self.arity() {
            return Err(OperadError::ArityMismatch {
                expected: self.arity(),
                found: parts.len(),
            });
        }
        let mut intervals = Vec::new();
        for (slot, part) in self.intervals.iter().zip(parts) {
            for inner in &part.intervals {
                intervals.push(slot.embed(inner));
            }
        }
        IntervalConfig::new(intervals)
    }

    pub fn compose_at(&self, i: usize, inner: &IntervalConfig) -> Result<IntervalConfig, OperadError> {
        if i == 0 || i > self.arity() {
            return Err(OperadError::SlotOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        let parts: Vec<IntervalConfig> = (1..=self.arity())
            .map(|slot| {
                if slot == i {
                    inner.clone()
                } else {
                    IntervalConfig::whole()
                }
            })
            .collect();
        self.compose(&parts)
    }

    /// The same family as a one-dimensional cube configuration.
    pub fn to_config(&self) -> CubeConfig {
        let cubes = self
            .intervals
            .iter()
            .map(|iv| Cube {
                axes: vec![iv.clone()],
            })
            .collect();
        CubeConfig { dim: 1, cubes }
    }

    /// Reads an ordered family back off a one-dimensional configuration.
    pub fn try_from_config(config: &CubeConfig) -> Result<Self, OperadError> {
        if config.dim() != 1 {
            return Err(OperadError::NotOrdered);
        }
        let intervals: Vec<Interval> = config
            .cubes()
            .iter()
            .map(|cube| cube.axis(0).clone())
            .collect();
        IntervalConfig::new(intervals)
    }
}

/// A permutation of `1..=degree`, stored by images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, OperadError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if img == 0 || img > degree || seen[img - 1] {
                return Err(OperadError::NotAPermutation {
                    images,
                    arity: degree,
                });
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// The transposition of `a` and `b` inside `1..=degree`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, OperadError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        if a == 0 || b == 0 || a > degree || b > degree {
            return Err(OperadError::NotAPermutation { images, arity: degree });
        }
        images.swap(a - 1, b - 1);
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` after `other`: the image of `i` is `self.image(other.image(i))`.
    pub fn after(&self, other: &Permutation) -> Result<Permutation, OperadError> {
        if self.degree() != other.degree() {
            return Err(OperadError::NotAPermutation {
                images: other.images.clone(),
                arity: self.degree(),
            });
        }
        Permutation::new(
            (1..=self.degree())
                .map(|i| self.image(other.image(i)))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (idx, &img) in self.images.iter().enumerate() {
            images[img - 1] = idx + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }
}

// JSON form of a configuration:
//   {"dim": n, "cubes": [[["lo", "hi"], ... n axes], ... m cubes]}
// with rationals as "p/q" strings ("p" when integral).

#[derive(Serialize, Deserialize)]
struct CubeConfigJson {
    dim: usize,
    cubes: Vec<Vec<(Rational, Rational)>>,
}

impl Serialize for CubeConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let cubes = self
            .cubes
            .iter()
            .map(|cube| {
                cube.axes
                    .iter()
                    .map(|iv| (iv.lo.clone(), iv.hi.clone()))
                    .collect()
            })
            .collect();
        CubeConfigJson {
            dim: self.dim,
            cubes,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CubeConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CubeConfigJson::deserialize(deserializer)?;
        let cubes = raw
            .cubes
            .into_iter()
            .map(|axes| {
                let axes = axes
                    .into_iter()
                    .map(|(lo, hi)| Interval::new(lo, hi))
                    .collect::<Result<Vec<_>, _>>()?;
                Cube::new(axes)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        CubeConfig::new(raw.dim, cubes).map_err(D::Error::custom)
    }
}

// JSON form of an ordered interval family: [["lo", "hi"], ...].

impl Serialize for IntervalConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(Rational, Rational)> = self
            .intervals
            .iter()
            .map(|iv| (iv.lo.clone(), iv.hi.clone()))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntervalConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(Rational, Rational)>::deserialize(deserializer)?;
        IntervalConfig::from_pairs(&pairs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    type Endpoints = ((i64, i64), (i64, i64));

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    fn family(pairs: &[Endpoints]) -> IntervalConfig {
        IntervalConfig::new(pairs.iter().map(|&(a, b)| iv(a, b)).collect()).unwrap()
    }

    fn config2(cubes: &[[Endpoints; 2]]) -> CubeConfig {
        let cubes = cubes
            .iter()
            .map(|axes| Cube::new(axes.iter().map(|&(a, b)| iv(a, b)).collect()).unwrap())
            .collect();
        CubeConfig::new(2, cubes).unwrap()
    }

    #[test]
    fn rejects_degenerate_and_out_of_range_intervals() {
        assert!(Interval::new(rat(1, 2), rat(1, 2)).is_err());
        assert!(Interval::new(rat(3, 4), rat(1, 2)).is_err());
        assert!(Interval::new(rat(-1, 4), rat(1, 2)).is_err());
        assert!(Interval::new(rat(1, 2), rat(5, 4)).is_err());
    }

    #[test]
    fn boundary_touching_cubes_are_accepted() {
        let c = config2(&[
            [((0, 1), (1, 2)), ((0, 1), (1, 1))],
            [((1, 2), (1, 1)), ((0, 1), (1, 1))],
        ]);
        assert_eq!(c.arity(), 2);
    }

    #[test]
    fn overlapping_cubes_are_rejected_with_labels() {
        let cubes = vec![
            Cube::new(vec![iv((0, 1), (3, 4)), iv((0, 1), (1, 1))]).unwrap(),
            Cube::new(vec![iv((1, 2), (1, 1)), iv((0, 1), (1, 1))]).unwrap(),
        ];
        assert_eq!(
            CubeConfig::new(2, cubes).unwrap_err(),
            OperadError::Overlap { i: 1, j: 2 }
        );
    }

    #[test]
    fn affine_embed_matches_hand_values() {
        // Interval case: [1/2, 1] receiving [0, 1/2].
        let outer = Cube::new(vec![iv((1, 2), (1, 1))]).unwrap();
        let inner = Cube::new(vec![iv((0, 1), (1, 2))]).unwrap();
        assert_eq!(
            affine_embed(&outer, &inner).unwrap(),
            Cube::new(vec![iv((1, 2), (3, 4))]).unwrap()
        );
        // Planar case: [0,1/2]x[0,1] receiving [1/2,1]x[1/2,1].
        let outer = Cube::new(vec![iv((0, 1), (1, 2)), iv((0, 1), (1, 1))]).unwrap();
        let inner = Cube::new(vec![iv((1, 2), (1, 1)), iv((1, 2), (1, 1))]).unwrap();
        assert_eq!(
            affine_embed(&outer, &inner).unwrap(),
            Cube::new(vec![iv((1, 4), (1, 2)), iv((1, 2), (1, 1))]).unwrap()
        );
    }

    #[test]
    fn compose_blocks_are_ordered_and_exact() {
        let mu = IntervalConfig::half_split();
        let left = mu.compose_at(1, &mu).unwrap();
        assert_eq!(
            left,
            family(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))])
        );
        let right = mu.compose_at(2, &mu).unwrap();
        assert_eq!(
            right,
            family(&[((0, 1), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (1, 1))])
        );
    }

    #[test]
    fn unit_laws_hold_exactly() {
        let mu = IntervalConfig::half_split().to_config();
        let one = CubeConfig::identity(1);
        assert_eq!(one.compose(std::slice::from_ref(&mu)).unwrap(), mu);
        assert_eq!(mu.compose(&[CubeConfig::identity(1), CubeConfig::identity(1)]).unwrap(), mu);
    }

    #[test]
    fn interchange_of_disjoint_slots() {
        // a o_1 b then o_{1+m} c equals a o_2 c then o_1 b, via the
        // associativity identity for partial composition.
        let a = IntervalConfig::half_split().to_config();
        let b = IntervalConfig::half_split().to_config();
        let c = IntervalConfig::left_half().to_config();
        let lhs = a.compose_at(1, &b).unwrap().compose_at(3, &c).unwrap();
        let rhs = a.compose_at(2, &c).unwrap().compose_at(1, &b).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn permute_half_split_gives_swapped_labels() {
        let mu = IntervalConfig::half_split().to_config();
        let tau = Permutation::transposition(2, 1, 2).unwrap();
        let swapped = mu.permute(&tau).unwrap();
        assert_eq!(swapped.cube(1).axis(0), &iv((1, 2), (1, 1)));
        assert_eq!(swapped.cube(2).axis(0), &iv((0, 1), (1, 2)));
    }

    #[test]
    fn include_dim_pads_with_full_axes() {
        let mu = IntervalConfig::half_split().to_config();
        let planar = mu.include_dim(2).unwrap();
        assert_eq!(planar.cube(1).axis(1), &Interval::whole());
        assert_eq!(planar.cube(1).axis(0), &iv((0, 1), (1, 2)));
        assert_eq!(planar.cube(2).axis(0), &iv((1, 2), (1, 1)));
        assert!(mu.include_dim(0).is_err());
    }

    #[test]
    fn pairing_labels_run_lexicographically() {
        let mu = IntervalConfig::half_split();
        let c = mu.to_config();
        let paired = cartesian_pairing(&mu, &c).unwrap();
        assert_eq!(paired.dim(), 2);
        assert_eq!(paired.arity(), 4);
        // (i, j) = (1,1), (1,2), (2,1), (2,2).
        assert_eq!(paired.cube(1).axis(0), &iv((0, 1), (1, 2)));
        assert_eq!(paired.cube(1).axis(1), &iv((0, 1), (1, 2)));
        assert_eq!(paired.cube(2).axis(0), &iv((0, 1), (1, 2)));
        assert_eq!(paired.cube(2).axis(1), &iv((1, 2), (1, 1)));
        assert_eq!(paired.cube(3).axis(0), &iv((1, 2), (1, 1)));
        assert_eq!(paired.cube(3).axis(1), &iv((0, 1), (1, 2)));
        assert_eq!(paired.cube(4).axis(0), &iv((1, 2), (1, 1)));
        assert_eq!(paired.cube(4).axis(1), &iv((1, 2), (1, 1)));
    }

    #[test]
    fn pairing_equals_composite_through_included_intervals() {
        let a = family(&[((0, 1), (1, 4)), ((1, 2), (1, 1))]);
        let c = IntervalConfig::half_split().to_config();
        let paired = cartesian_pairing(&a, &c).unwrap();
        let rho1 = c.prepend_full_axis();
        let included = a.to_config().include_dim(2).unwrap();
        let composite = included.compose(&[rho1.clone(), rho1.clone()]).unwrap();
        assert_eq!(composite, paired);
        // The other evaluation order differs by the lex/colex relabelling.
        let other = rho1.compose(&[included.clone(), included.clone()]).unwrap();
        let relabel = lex_to_colex(a.arity(), c.arity());
        assert_eq!(paired.permute(&relabel).unwrap(), other);
    }

    #[test]
    fn permutation_composition_and_inverse() {
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        let q = Permutation::transposition(3, 1, 2).unwrap();
        let pq = p.after(&q).unwrap();
        assert_eq!(pq.images(), &[3, 2, 1]);
        assert!(p.after(&p.inverse()).unwrap().is_identity());
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
    }

    #[test]
    fn config_json_round_trip_is_bit_exact() {
        let c = config2(&[
            [((0, 1), (1, 3)), ((1, 7), (2, 7))],
            [((1, 3), (2, 3)), ((0, 1), (1, 1))],
        ]);
        let s = serde_json::to_string(&c).unwrap();
        let back: CubeConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert!(s.contains("\"1/3\""));
    }

    #[test]
    fn ordered_family_round_trip_and_validation() {
        let fam = family(&[((0, 1), (1, 3)), ((1, 3), (1, 2))]);
        let s = serde_json::to_string(&fam).unwrap();
        let back: IntervalConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(back, fam);
        let bad = IntervalConfig::from_pairs(&[
            (rat(1, 2), rat(1, 1)),
            (rat(0, 1), rat(1, 2)),
        ]);
        assert!(bad.is_err());
    }
}
