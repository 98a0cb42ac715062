//! Coherence loops for the two-slot multiplication, assembled from a
//! reassociation path, unit paths, and a braiding path, plus a convex cone
//! filling for loops of ordered one-dimensional configurations.
//!
//! All corner configurations below are exact; assembling a loop checks every
//! edge endpoint against the expected corner, so a wrong substitution cannot
//! silently produce a different polygon.

use serde::Serialize;

use crate::operad::{CubeConfig, Cube, Interval, IntervalConfig, Permutation};
use crate::path::{PathError, PlPath};
use crate::rational::Rational;

/// A closed chain of paths: edge `k` runs from corner `k` to corner `k + 1`
/// (mod the edge count).
#[derive(Clone, Debug)]
pub struct CoherenceLoop {
    name: String,
    edges: Vec<PlPath>,
}

impl CoherenceLoop {
    pub fn new(name: impl Into<String>, edges: Vec<PlPath>) -> Result<Self, PathError> {
        if edges.is_empty() {
            return Err(PathError::Assembly("a loop needs at least one edge".into()));
        }
        for k in 0..edges.len() {
            let next = (k + 1) % edges.len();
            if edges[k].end() != edges[next].start() {
                return Err(PathError::Assembly(format!(
                    "edge {k} does not end where edge {next} starts"
                )));
            }
        }
        Ok(CoherenceLoop {
            name: name.into(),
            edges,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn edges(&self) -> &[PlPath] {
        &self.edges
    }

    /// The starting configuration of each edge.
    pub fn corners(&self) -> Vec<&CubeConfig> {
        self.edges.iter().map(|e| e.start()).collect()
    }

    /// The loop as a single closed path, each edge compressed into an equal
    /// share of the unit interval.
    pub fn to_path(&self) -> PlPath {
        let k = Rational::integer(self.edges.len() as i64);
        let mut times = vec![Rational::zero()];
        let mut keyframes = vec![self.edges[0].start().clone()];
        for (e, edge) in self.edges.iter().enumerate() {
            let base = Rational::integer(e as i64);
            for (t, kf) in edge.times().iter().zip(edge.keyframes()).skip(1) {
                times.push((&base + t) / &k);
                keyframes.push(kf.clone());
            }
        }
        PlPath::new(times, keyframes).expect("chained edges concatenate")
    }

    /// Certifies every segment of every edge.
    pub fn validate(&self) -> Result<(), PathError> {
        self.to_path().validate()
    }
}

/// `([0, 1/2], [1/2, 1])` as a configuration in the requested dimension.
pub fn two_slot_multiplication(dim: usize) -> CubeConfig {
    IntervalConfig::half_split()
        .to_config()
        .include_dim(dim)
        .expect("padding to a positive dimension")
}

/// Interval endpoints written as `(numer, denom)` literals.
type Endpoints = ((i64, i64), (i64, i64));

fn iv(lo: (i64, i64), hi: (i64, i64)) -> Interval {
    Interval::new(Rational::new(lo.0, lo.1), Rational::new(hi.0, hi.1)).expect("literal interval")
}

fn dim1(pairs: &[Endpoints]) -> CubeConfig {
    let cubes = pairs
        .iter()
        .map(|&(lo, hi)| Cube::new(vec![iv(lo, hi)]).expect("one axis"))
        .collect();
    CubeConfig::new(1, cubes).expect("literal configuration")
}

/// The straight-line reassociation from `(x y) z` to `x (y z)` shapes:
/// `([0,1/4],[1/4,1/2],[1/2,1])` to `([0,1/2],[1/2,3/4],[3/4,1])`. Interval
/// boundaries touch throughout, so the line is valid.
pub fn associator_path() -> PlPath {
    PlPath::line(
        dim1(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))]),
        dim1(&[((0, 1), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (1, 1))]),
    )
    .expect("two keyframes")
}

/// Grows `([1/2, 1])` back to the identity: the witness that erasing the
/// left slot of the multiplication is no loss.
pub fn left_unitor_path() -> PlPath {
    PlPath::line(dim1(&[((1, 2), (1, 1))]), dim1(&[((0, 1), (1, 1))])).expect("two keyframes")
}

/// Grows `([0, 1/2])` back to the identity.
pub fn right_unitor_path() -> PlPath {
    PlPath::line(dim1(&[((0, 1), (1, 2))]), dim1(&[((0, 1), (1, 1))])).expect("two keyframes")
}

/// The default planar braiding: the two slots shrink to quarter squares,
/// slide past each other with clearance along the second axis, and re-expand
/// with their positions exchanged. Crossing happens at time 1/2 exactly.
pub fn braiding_path() -> PlPath {
    let square = |x: ((i64, i64), (i64, i64)), y: ((i64, i64), (i64, i64))| {
        Cube::new(vec![iv(x.0, x.1), iv(y.0, y.1)]).expect("two axes")
    };
    let full = ((0, 1), (1, 1));
    let left = ((0, 1), (1, 2));
    let right = ((1, 2), (1, 1));
    let config = |a: Cube, b: Cube| CubeConfig::new(2, vec![a, b]).expect("two disjoint cubes");
    PlPath::new(
        vec![
            Rational::zero(),
            Rational::new(1, 3),
            Rational::new(2, 3),
            Rational::one(),
        ],
        vec![
            config(square(left, full), square(right, full)),
            config(square(left, left), square(right, right)),
            config(square(right, left), square(left, right)),
            config(square(right, full), square(left, full)),
        ],
    )
    .expect("four keyframes")
}

fn expect_endpoints(
    path: &PlPath,
    what: &str,
    start: &CubeConfig,
    end: &CubeConfig,
) -> Result<(), PathError> {
    if path.start() != start {
        return Err(PathError::Assembly(format!(
            "{what} must start at the standard configuration"
        )));
    }
    if path.end() != end {
        return Err(PathError::Assembly(format!(
            "{what} must end at the standard configuration"
        )));
    }
    Ok(())
}

/// The five-sided reassociation loop on four slots. The supplied path must
/// run from `([0,1/4],[1/4,1/2],[1/2,1])` to `([0,1/2],[1/2,3/4],[3/4,1])`;
/// its five substitution instances are chained, two of them reversed.
pub fn assemble_pentagon(alpha: &PlPath) -> Result<CoherenceLoop, PathError> {
    let mu = two_slot_multiplication(1);
    expect_endpoints(
        alpha,
        "the reassociation path",
        &dim1(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))]),
        &dim1(&[((0, 1), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (1, 1))]),
    )?;
    let inside_first = alpha.into_slot(&mu, 1)?;
    let on_second = alpha.plug_const(2, &mu)?;
    let inside_second = alpha.into_slot(&mu, 2)?;
    let on_third = alpha.plug_const(3, &mu)?;
    let on_first = alpha.plug_const(1, &mu)?;
    CoherenceLoop::new(
        "pentagon",
        vec![
            inside_first,
            on_second,
            inside_second,
            on_third.reverse(),
            on_first.reverse(),
        ],
    )
}

/// The three-sided unit loop: the reassociation with the middle slot erased,
/// against the two unit paths substituted into the multiplication.
pub fn assemble_unit_triangle(alpha: &PlPath) -> Result<CoherenceLoop, PathError> {
    let mu = two_slot_multiplication(1);
    expect_endpoints(
        alpha,
        "the reassociation path",
        &dim1(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))]),
        &dim1(&[((0, 1), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (1, 1))]),
    )?;
    let erased_middle = alpha.plug_const(2, &CubeConfig::empty(1))?;
    let left_unit = left_unitor_path().into_slot(&mu, 2)?;
    let right_unit = right_unitor_path().into_slot(&mu, 1)?;
    CoherenceLoop::new(
        "unit-triangle",
        vec![erased_middle, left_unit, right_unit.reverse()],
    )
}

/// The six-sided braiding loop on three planar slots. `sigma` must run from
/// the planar multiplication to its transposition; `alpha` is the
/// one-dimensional reassociation, padded to the plane. Each edge carries a
/// relabelling that makes consecutive corners agree on the nose, and the
/// loop's extracted braid word is freely trivial for the default braiding.
pub fn assemble_hexagon(sigma: &PlPath, alpha: &PlPath) -> Result<CoherenceLoop, PathError> {
    let mu2 = two_slot_multiplication(2);
    let swap = Permutation::transposition(2, 1, 2).expect("transposition");
    expect_endpoints(
        sigma,
        "the braiding path",
        &mu2,
        &mu2.permute(&swap).expect("matching arity"),
    )?;
    expect_endpoints(
        alpha,
        "the reassociation path",
        &dim1(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))]),
        &dim1(&[((0, 1), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (1, 1))]),
    )?;
    let alpha2 = alpha.include_dim(2)?;
    let swap12 = Permutation::transposition(3, 1, 2).expect("transposition");
    let rotate = Permutation::new(vec![2, 3, 1]).expect("3-cycle");
    let braid_inside_first = sigma.into_slot(&mu2, 1)?.permute(&swap12)?;
    let reassociate = alpha2.clone();
    let braid_on_first = sigma.plug_const(1, &mu2)?.permute(&rotate)?;
    let reassociate_rotated = alpha2.permute(&rotate)?;
    let braid_inside_second = sigma.into_slot(&mu2, 2)?.permute(&rotate)?;
    let reassociate_swapped = alpha2.permute(&swap12)?;
    CoherenceLoop::new(
        "hexagon",
        vec![
            braid_inside_first,
            reassociate,
            braid_on_first.reverse(),
            reassociate_rotated,
            braid_inside_second,
            reassociate_swapped.reverse(),
        ],
    )
}

/// A filling of a loop of ordered one-dimensional configurations by straight
/// spokes to a single apex. The ordered configurations of a fixed arity form
/// a convex set (all constraints are linear), so the cone over the loop stays
/// inside it; the certificate nevertheless re-checks every spoke with the
/// exact segment checker.
#[derive(Clone, Debug)]
pub struct ConeFill {
    loop_path: PlPath,
    apex: CubeConfig,
    spokes: Vec<PlPath>,
}

impl ConeFill {
    pub fn apex(&self) -> &CubeConfig {
        &self.apex
    }

    pub fn loop_path(&self) -> &PlPath {
        &self.loop_path
    }

    pub fn spokes(&self) -> &[PlPath] {
        &self.spokes
    }

    /// Total number of certified segments: the loop's plus one per spoke.
    pub fn segment_count(&self) -> usize {
        self.loop_path.segment_count() + self.spokes.len()
    }

    /// Validates the loop and every spoke.
    pub fn certify(&self) -> Result<(), PathError> {
        self.loop_path.validate()?;
        for spoke in &self.spokes {
            spoke.validate()?;
        }
        Ok(())
    }
}

/// Builds the cone: the apex is the coordinatewise average of the corner
/// configurations, and every keyframe of the assembled loop gets a straight
/// spoke to it.
pub fn cone_fill(lp: &CoherenceLoop) -> Result<ConeFill, PathError> {
    let loop_path = lp.to_path();
    if loop_path.dim() != 1 {
        return Err(PathError::Assembly(
            "cone filling needs one-dimensional configurations".into(),
        ));
    }
    for kf in loop_path.keyframes() {
        IntervalConfig::try_from_config(kf)?;
    }
    let corners = lp.corners();
    let count = Rational::integer(corners.len() as i64);
    let arity = loop_path.arity();
    let mut cubes = Vec::with_capacity(arity);
    for label in 1..=arity {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for corner in &corners {
            lo = lo + corner.cube(label).axis(0).lo();
            hi = hi + corner.cube(label).axis(0).hi();
        }
        cubes.push(Cube::new(vec![Interval::new(lo / &count, hi / &count)?])?);
    }
    let apex = CubeConfig::new(1, cubes)?;
    let spokes = loop_path
        .keyframes()
        .iter()
        .take(loop_path.keyframes().len() - 1)
        .map(|kf| PlPath::line(kf.clone(), apex.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConeFill {
        loop_path,
        apex,
        spokes,
    })
}

/// A rendering of a loop's corners for reports.
#[derive(Serialize)]
pub struct LoopSummary {
    pub name: String,
    pub corners: Vec<CubeConfig>,
    pub edge_segments: usize,
}

impl CoherenceLoop {
    pub fn summary(&self) -> LoopSummary {
        LoopSummary {
            name: self.name.clone(),
            corners: self.corners().into_iter().cloned().collect(),
            edge_segments: self.to_path().segment_count(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn dim1t(pairs: &[Endpoints]) -> CubeConfig {
        dim1(pairs)
    }

    #[test]
    fn pentagon_has_five_distinct_corners_matching_hand_values() {
        let loop_ = assemble_pentagon(&associator_path()).unwrap();
        let corners = loop_.corners();
        assert_eq!(corners.len(), 5);
        let expected = [
            dim1t(&[((0, 1), (1, 8)), ((1, 8), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))]),
            dim1t(&[((0, 1), (1, 4)), ((1, 4), (3, 8)), ((3, 8), (1, 2)), ((1, 2), (1, 1))]),
            dim1t(&[((0, 1), (1, 2)), ((1, 2), (5, 8)), ((5, 8), (3, 4)), ((3, 4), (1, 1))]),
            dim1t(&[((0, 1), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (7, 8)), ((7, 8), (1, 1))]),
            dim1t(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (3, 4)), ((3, 4), (1, 1))]),
        ];
        for (corner, want) in corners.iter().zip(&expected) {
            assert_eq!(*corner, want);
        }
        for i in 0..5 {
            for j in (i + 1)..5 {
                assert_ne!(corners[i], corners[j]);
            }
        }
        assert_eq!(loop_.validate(), Ok(()));
    }

    #[test]
    fn pentagon_cone_fill_certifies() {
        let loop_ = assemble_pentagon(&associator_path()).unwrap();
        let fill = cone_fill(&loop_).unwrap();
        assert_eq!(fill.certify(), Ok(()));
        assert_eq!(fill.spokes().len(), 5);
        // The apex averages the five corners; its first cube starts at 0.
        assert_eq!(fill.apex().cube(1).axis(0).lo(), &rat(0, 1));
    }

    #[test]
    fn unit_triangle_corners_and_fill() {
        let loop_ = assemble_unit_triangle(&associator_path()).unwrap();
        let corners = loop_.corners();
        assert_eq!(corners.len(), 3);
        assert_eq!(corners[0], &dim1t(&[((0, 1), (1, 4)), ((1, 2), (1, 1))]));
        assert_eq!(corners[1], &dim1t(&[((0, 1), (1, 2)), ((3, 4), (1, 1))]));
        assert_eq!(corners[2], &dim1t(&[((0, 1), (1, 2)), ((1, 2), (1, 1))]));
        assert_eq!(loop_.validate(), Ok(()));
        let fill = cone_fill(&loop_).unwrap();
        assert_eq!(fill.certify(), Ok(()));
    }

    #[test]
    fn default_braiding_is_valid_and_swaps_slots() {
        let sigma = braiding_path();
        assert_eq!(sigma.validate(), Ok(()));
        let mu2 = two_slot_multiplication(2);
        assert_eq!(sigma.start(), &mu2);
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(sigma.end(), &mu2.permute(&swap).unwrap());
    }

    #[test]
    fn hexagon_chains_six_decorated_edges() {
        let loop_ = assemble_hexagon(&braiding_path(), &associator_path()).unwrap();
        assert_eq!(loop_.edges().len(), 6);
        assert_eq!(loop_.validate(), Ok(()));
        let corners = loop_.corners();
        for i in 0..corners.len() {
            for j in (i + 1)..corners.len() {
                assert_ne!(corners[i], corners[j]);
            }
        }
        // Starting corner: the left-nested product with labels 1 and 2
        // exchanged.
        let mu2 = two_slot_multiplication(2);
        let nested = mu2.compose_at(1, &mu2).unwrap();
        let swap12 = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(corners[0], &nested.permute(&swap12).unwrap());
    }

    #[test]
    fn assembling_with_wrong_endpoints_is_rejected() {
        let wrong = PlPath::line(
            dim1t(&[((0, 1), (1, 4)), ((1, 4), (1, 2)), ((1, 2), (1, 1))]),
            dim1t(&[((0, 1), (1, 3)), ((1, 3), (2, 3)), ((2, 3), (1, 1))]),
        )
        .unwrap();
        assert!(matches!(
            assemble_pentagon(&wrong),
            Err(PathError::Assembly(_))
        ));
        assert!(matches!(
            assemble_hexagon(&associator_path(), &associator_path()),
            Err(PathError::Assembly(_))
        ));
    }

    #[test]
    fn cone_fill_rejects_planar_loops() {
        let loop_ = assemble_hexagon(&braiding_path(), &associator_path()).unwrap();
        assert!(matches!(cone_fill(&loop_), Err(PathError::Assembly(_))));
    }
}
