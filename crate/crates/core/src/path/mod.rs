//! Piecewise-linear paths of cube configurations, with an exact validity
//! checker.
//!
//! A path is a list of keyframe configurations at strictly increasing
//! rational times from 0 to 1, interpolated coordinatewise. Between two valid
//! keyframes, containment in the unit cube and nondegeneracy hold
//! automatically (both are convex conditions), so validity reduces to
//! pairwise interior disjointness along each segment. For one pair of cubes
//! on one segment, each "axis separates in one direction" condition is a
//! linear inequality, hence holds on a closed sub-interval of the segment;
//! the checker computes those sub-intervals exactly and either certifies that
//! they cover the segment or reports the first uncovered gap, with a rational
//! witness time inside it.

pub mod loops;
pub mod stabilize;

use std::fmt;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::operad::{Cube, CubeConfig, Interval, OperadError, Permutation};
use crate::rational::Rational;

/// An uncovered part of a segment for one pair of cubes: on the reported
/// time window no axis separates the pair. Endpoints are flagged open when
/// the endpoint itself is still covered.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SegmentViolation {
    /// 0-based index of the offending segment.
    pub segment: usize,
    /// 1-based labels of the overlapping cubes.
    pub pair: (usize, usize),
    /// Global time window that no separating condition covers.
    pub gap_lo: Rational,
    pub gap_hi: Rational,
    pub lo_open: bool,
    pub hi_open: bool,
    /// A time strictly inside the gap, at which the overlap is witnessed.
    pub witness: Rational,
}

impl fmt::Display for SegmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cubes {} and {} overlap on {}{}, {}{} of segment {} (witness t = {})",
            self.pair.0,
            self.pair.1,
            if self.lo_open { "(" } else { "[" },
            self.gap_lo,
            self.gap_hi,
            if self.hi_open { ")" } else { "]" },
            self.segment,
            self.witness,
        )
    }
}

/// Errors raised by path constructors, combinators, and the checker.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum PathError {
    #[error("a path needs at least two keyframes")]
    TooFewKeyframes,
    #[error("{times} times given for {keyframes} keyframes")]
    LengthMismatch { times: usize, keyframes: usize },
    #[error("times must start at 0 and end at 1")]
    TimeEndpoints,
    #[error("times must be strictly increasing (violated at index {index})")]
    TimesNotIncreasing { index: usize },
    #[error("keyframe {index} has dimension {found}, expected {expected}")]
    DimMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("keyframe {index} has arity {found}, expected {expected}")]
    ArityMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("time {t} is outside [0, 1]")]
    TimeOutOfRange { t: Rational },
    #[error("paths do not share an endpoint configuration")]
    EndpointMismatch,
    #[error("{0}")]
    Segment(SegmentViolation),
    #[error("assembly failed: {0}")]
    Assembly(String),
    #[error(transparent)]
    Operad(#[from] OperadError),
}

/// A piecewise-linear path of configurations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlPath {
    dim: usize,
    arity: usize,
    times: Vec<Rational>,
    keyframes: Vec<CubeConfig>,
}

impl PlPath {
    /// Structural validation only: matching lengths, strictly increasing
    /// times from 0 to 1, and uniform dimension and arity. Segment validity
    /// is checked separately by [`PlPath::validate`].
    pub fn new(times: Vec<Rational>, keyframes: Vec<CubeConfig>) -> Result<Self, PathError> {
        if keyframes.len() < 2 {
            return Err(PathError::TooFewKeyframes);
        }
        if times.len() != keyframes.len() {
            return Err(PathError::LengthMismatch {
                times: times.len(),
                keyframes: keyframes.len(),
            });
        }
        if times[0] != Rational::zero() || times[times.len() - 1] != Rational::one() {
            return Err(PathError::TimeEndpoints);
        }
        for i in 1..times.len() {
            if times[i - 1] >= times[i] {
                return Err(PathError::TimesNotIncreasing { index: i });
            }
        }
        let dim = keyframes[0].dim();
        let arity = keyframes[0].arity();
        for (index, kf) in keyframes.iter().enumerate() {
            if kf.dim() != dim {
                return Err(PathError::DimMismatch {
                    index,
                    expected: dim,
                    found: kf.dim(),
                });
            }
            if kf.arity() != arity {
                return Err(PathError::ArityMismatch {
                    index,
                    expected: arity,
                    found: kf.arity(),
                });
            }
        }
        Ok(PlPath {
            dim,
            arity,
            times,
            keyframes,
        })
    }

    /// The straight line between two configurations.
    pub fn line(from: CubeConfig, to: CubeConfig) -> Result<Self, PathError> {
        PlPath::new(vec![Rational::zero(), Rational::one()], vec![from, to])
    }

    /// The constant path at one configuration.
    pub fn constant(config: CubeConfig) -> Self {
        PlPath::line(config.clone(), config).expect("two keyframes, fixed shape")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn times(&self) -> &[Rational] {
        &self.times
    }

    pub fn keyframes(&self) -> &[CubeConfig] {
        &self.keyframes
    }

    pub fn start(&self) -> &CubeConfig {
        &self.keyframes[0]
    }

    pub fn end(&self) -> &CubeConfig {
        &self.keyframes[self.keyframes.len() - 1]
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn segment_count(&self) -> usize {
        self.keyframes.len() - 1
    }

    /// The interpolated configuration at global time `t`, re-validated from
    /// scratch; an overlap at `t` surfaces as an error.
    pub fn config_at(&self, t: &Rational) -> Result<CubeConfig, PathError> {
        if t.is_negative() || t > &Rational::one() {
            return Err(PathError::TimeOutOfRange { t: t.clone() });
        }
        let seg = match self.times.iter().rposition(|time| time <= t) {
            Some(i) if i == self.times.len() - 1 => i - 1,
            Some(i) => i,
            None => 0,
        };
        let t0 = &self.times[seg];
        let t1 = &self.times[seg + 1];
        let s = (t - t0) / (t1 - t0);
        let cubes = self.keyframes[seg]
            .cubes()
            .iter()
            .zip(self.keyframes[seg + 1].cubes())
            .map(|(a, b)| {
                let axes = a
                    .axes()
                    .iter()
                    .zip(b.axes())
                    .map(|(ia, ib)| {
                        Interval::new(
                            ia.lo() + &s * (ib.lo() - ia.lo()),
                            ia.hi() + &s * (ib.hi() - ia.hi()),
                        )
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Cube::new(axes)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CubeConfig::new(self.dim, cubes)?)
    }

    /// The same path traversed backwards.
    pub fn reverse(&self) -> PlPath {
        let times = self
            .times
            .iter()
            .rev()
            .map(|t| Rational::one() - t)
            .collect();
        let keyframes = self.keyframes.iter().rev().cloned().collect();
        PlPath {
            dim: self.dim,
            arity: self.arity,
            times,
            keyframes,
        }
    }

    /// Runs `self` on `[0, 1/2]` and `other` on `[1/2, 1]`; the endpoint
    /// configurations must agree exactly.
    pub fn concat(&self, other: &PlPath) -> Result<PlPath, PathError> {
        if self.end() != other.start() {
            return Err(PathError::EndpointMismatch);
        }
        let half = Rational::new(1, 2);
        let mut times: Vec<Rational> = self.times.iter().map(|t| t * &half).collect();
        let mut keyframes = self.keyframes.clone();
        for (t, kf) in other.times.iter().zip(&other.keyframes).skip(1) {
            times.push(&half + t * &half);
            keyframes.push(kf.clone());
        }
        PlPath::new(times, keyframes)
    }

    /// Substitutes a fixed configuration into slot `i` of every keyframe.
    /// Substitution is affine in the slot cube's coordinates, so it commutes
    /// with interpolation and preserves segment validity.
    pub fn plug_const(&self, i: usize, inner: &CubeConfig) -> Result<PlPath, PathError> {
        let keyframes = self
            .keyframes
            .iter()
            .map(|kf| kf.compose_at(i, inner))
            .collect::<Result<Vec<_>, _>>()?;
        PlPath::new(self.times.clone(), keyframes)
    }

    /// Substitutes every keyframe into slot `i` of a fixed outer
    /// configuration; affine for the same reason as `plug_const`.
    pub fn into_slot(&self, outer: &CubeConfig, i: usize) -> Result<PlPath, PathError> {
        let keyframes = self
            .keyframes
            .iter()
            .map(|kf| outer.compose_at(i, kf))
            .collect::<Result<Vec<_>, _>>()?;
        PlPath::new(self.times.clone(), keyframes)
    }

    /// Relabels every keyframe by the same permutation.
    pub fn permute(&self, perm: &Permutation) -> Result<PlPath, PathError> {
        let keyframes = self
            .keyframes
            .iter()
            .map(|kf| kf.permute(perm))
            .collect::<Result<Vec<_>, _>>()?;
        PlPath::new(self.times.clone(), keyframes)
    }

    /// Pads every keyframe with full trailing axes.
    pub fn include_dim(&self, target: usize) -> Result<PlPath, PathError> {
        let keyframes = self
            .keyframes
            .iter()
            .map(|kf| kf.include_dim(target))
            .collect::<Result<Vec<_>, _>>()?;
        PlPath::new(self.times.clone(), keyframes)
    }

    /// All uncovered gaps, at most one per (segment, pair), earliest first
    /// within each pair.
    pub fn violations(&self) -> Vec<SegmentViolation> {
        let mut found = Vec::new();
        for seg in 0..self.segment_count() {
            for i in 1..=self.arity {
                for j in (i + 1)..=self.arity {
                    if let Some(v) = self.check_pair(seg, i, j) {
                        found.push(v);
                    }
                }
            }
        }
        found
    }

    /// Certifies every segment, or returns the first gap found.
    pub fn validate(&self) -> Result<(), PathError> {
        for seg in 0..self.segment_count() {
            for i in 1..=self.arity {
                for j in (i + 1)..=self.arity {
                    if let Some(v) = self.check_pair(seg, i, j) {
                        return Err(PathError::Segment(v));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks one pair on one segment: collects the closed sub-intervals on
    /// which some axis separates the pair in some direction, and sweeps them
    /// for the first uncovered gap.
    fn check_pair(&self, seg: usize, i: usize, j: usize) -> Option<SegmentViolation> {
        let a = &self.keyframes[seg];
        let b = &self.keyframes[seg + 1];
        let mut covers: Vec<(Rational, Rational)> = Vec::new();
        for axis in 0..self.dim {
            for (left, right) in [(i, j), (j, i)] {
                // Condition: hi_left(s) - lo_right(s) <= 0, linear in s.
                let at0 = a.cube(left).axis(axis).hi() - a.cube(right).axis(axis).lo();
                let at1 = b.cube(left).axis(axis).hi() - b.cube(right).axis(axis).lo();
                if let Some(cover) = linear_nonpositive_on_unit(&at0, &(&at1 - &at0)) {
                    covers.push(cover);
                }
            }
        }
        let gap = first_uncovered_gap(&mut covers)?;
        // Map local segment coordinates to global times.
        let t0 = &self.times[seg];
        let span = &self.times[seg + 1] - t0;
        let to_global = |s: &Rational| t0 + &span * s;
        let witness_local = Rational::midpoint(&gap.0, &gap.1);
        Some(SegmentViolation {
            segment: seg,
            pair: (i, j),
            gap_lo: to_global(&gap.0),
            gap_hi: to_global(&gap.1),
            lo_open: gap.2,
            hi_open: gap.3,
            witness: to_global(&witness_local),
        })
    }
}

/// Solves `a + b s <= 0` on `[0, 1]` exactly; the solution set is a closed
/// sub-interval or empty.
fn linear_nonpositive_on_unit(a: &Rational, b: &Rational) -> Option<(Rational, Rational)> {
    let zero = Rational::zero();
    let one = Rational::one();
    if b.is_zero() {
        return if a <= &zero { Some((zero, one)) } else { None };
    }
    let root = -(a / b);
    if b.is_positive() {
        // Satisfied for s <= root.
        if root < zero {
            None
        } else {
            Some((zero, Rational::min(root, one)))
        }
    } else {
        // Satisfied for s >= root.
        if root > one {
            None
        } else {
            Some((Rational::max(root, zero), one))
        }
    }
}

/// Sweeps closed intervals inside `[0, 1]` and returns the first uncovered
/// gap `(lo, hi, lo_open, hi_open)`, or `None` when they cover everything.
fn first_uncovered_gap(
    covers: &mut [(Rational, Rational)],
) -> Option<(Rational, Rational, bool, bool)> {
    covers.sort();
    let zero = Rational::zero();
    let one = Rational::one();
    let mut covered_to: Option<Rational> = None;
    for (lo, hi) in covers.iter() {
        match &covered_to {
            None => {
                if lo > &zero {
                    return Some((zero, lo.clone(), false, true));
                }
                covered_to = Some(hi.clone());
            }
            Some(c) => {
                if lo > c {
                    return Some((c.clone(), lo.clone(), true, true));
                }
                if hi > c {
                    covered_to = Some(hi.clone());
                }
            }
        }
    }
    match covered_to {
        None => Some((zero, one, false, false)),
        Some(c) if c < one => Some((c, one, true, false)),
        Some(_) => None,
    }
}

// JSON form:
//   {"dim": n, "arity": m, "times": ["0", ...], "keyframes": [config, ...]}
// Deserialization performs the structural checks but not segment validation,
// so a structurally sound but overlapping path can be loaded and then
// reported on by `validate`.

#[derive(Serialize, Deserialize)]
struct PlPathJson {
    dim: usize,
    arity: usize,
    times: Vec<Rational>,
    keyframes: Vec<CubeConfig>,
}

impl Serialize for PlPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PlPathJson {
            dim: self.dim,
            arity: self.arity,
            times: self.times.clone(),
            keyframes: self.keyframes.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PlPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PlPathJson::deserialize(deserializer)?;
        let path = PlPath::new(raw.times, raw.keyframes).map_err(D::Error::custom)?;
        if path.dim != raw.dim || path.arity != raw.arity {
            return Err(D::Error::custom("declared dim/arity do not match keyframes"));
        }
        Ok(path)
    }
}
