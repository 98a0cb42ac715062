//! Braid words extracted from planar paths, and exact equivalence testing
//! through the Artin action on a free group.
//!
//! The strands of a planar path are the first-axis centers of its cubes,
//! piecewise-linear functions of time. Every crossing is an exact rational
//! root of a difference of centers with a strict sign change; the generator
//! index is the crossing's position among the sorted centers at that instant,
//! and the sign compares the second-axis centers of the two cubes involved.
//! Degenerate projections (ties along a whole segment, tangential touches,
//! crossings at the endpoints, triple ties, equal depths) are reported as
//! errors rather than resolved arbitrarily.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::path::{PathError, PlPath};
use crate::rational::Rational;

/// Errors raised by braid extraction.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum BraidError {
    #[error("braid extraction needs two-dimensional paths, got dimension {dim}")]
    NotPlanar { dim: usize },
    #[error(transparent)]
    InvalidPath(#[from] PathError),
    #[error("cubes {i} and {j} share a first-axis center along all of segment {segment}")]
    SegmentTie { segment: usize, i: usize, j: usize },
    #[error("cubes {i} and {j} touch tangentially at t = {t} without crossing")]
    TangentialTouch { i: usize, j: usize, t: Rational },
    #[error("cubes {i} and {j} cross at the path endpoint t = {t}")]
    EndpointCrossing { i: usize, j: usize, t: Rational },
    #[error("three or more strands meet at t = {t}")]
    AmbiguousPosition { t: Rational },
    #[error("cubes {i} and {j} cross at t = {t} with equal second-axis centers")]
    EqualDepth { i: usize, j: usize, t: Rational },
    #[error("generator index {index} is out of range for {strands} strands")]
    LetterOutOfRange { index: i64, strands: usize },
}

/// A word in the braid group on `strands` strands; letter `k > 0` is the
/// positive generator exchanging positions `k` and `k + 1`, and `-k` its
/// inverse.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self, BraidError> {
        for &letter in &letters {
            let index = letter.abs();
            if index == 0 || index as usize >= strands.max(1) {
                return Err(BraidError::LetterOutOfRange {
                    index: letter,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::LetterOutOfRange {
                index: 0,
                strands: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The word with adjacent inverse pairs cancelled repeatedly. Free
    /// reduction refines nothing about braid equivalence but gives quick
    /// certificates when a word collapses outright.
    pub fn free_reduction(&self) -> BraidWord {
        let mut stack: Vec<i64> = Vec::new();
        for &letter in &self.letters {
            if stack.last() == Some(&-letter) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// The underlying permutation of strand positions, as images of
    /// `1..=strands`: position `p` at time 0 ends at `image(p)`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut images: Vec<usize> = (1..=self.strands).collect();
        for &letter in &self.letters {
            let k = letter.unsigned_abs() as usize;
            images.swap(k - 1, k);
        }
        images
    }

    /// The images of the free generators under the induced automorphism,
    /// folded left to right by substitution. Folding this way composes the
    /// per-letter automorphisms in reverse, so the assignment is an
    /// anti-homomorphism; equality of images still decides equality of
    /// braids, because words are equal exactly when their reversals are.
    pub fn artin_images(&self) -> Vec<FreeWord> {
        let mut images: Vec<FreeWord> = (1..=self.strands as i64)
            .map(FreeWord::generator)
            .collect();
        for &letter in &self.letters {
            let step = letter_images(self.strands, letter);
            images = images
                .iter()
                .map(|w| {
                    // Replace each generator in the accumulated image by its
                    // image under the new letter.
                    w.substitute(&step)
                })
                .collect();
        }
        images
    }

    /// Exact equivalence in the braid group via the Artin action, which is
    /// faithful.
    pub fn equivalent(&self, other: &BraidWord) -> bool {
        self.strands == other.strands && self.artin_images() == other.artin_images()
    }

    pub fn is_trivial(&self) -> bool {
        self.equivalent(&BraidWord::identity(self.strands))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *letter > 0 {
                write!(f, "s{letter}")?;
            } else {
                write!(f, "s{}^-1", -letter)?;
            }
        }
        Ok(())
    }
}

/// Images of the free generators under one braid letter.
fn letter_images(strands: usize, letter: i64) -> Vec<FreeWord> {
    let k = letter.unsigned_abs() as usize;
    (1..=strands as i64)
        .map(|g| {
            let gu = g as usize;
            if letter > 0 {
                if gu == k {
                    // x_k -> x_k x_{k+1} x_k^{-1}
                    FreeWord::from_letters(vec![g, g + 1, -g])
                } else if gu == k + 1 {
                    FreeWord::generator(g - 1)
                } else {
                    FreeWord::generator(g)
                }
            } else if gu == k {
                FreeWord::generator(g + 1)
            } else if gu == k + 1 {
                // x_{k+1} -> x_{k+1}^{-1} x_k x_{k+1}
                FreeWord::from_letters(vec![-g, g - 1, g])
            } else {
                FreeWord::generator(g)
            }
        })
        .collect()
}

/// A reduced word in a free group; letter `g > 0` is a generator, `-g` its
/// inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FreeWord {
    letters: Vec<i64>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord {
            letters: Vec::new(),
        }
    }

    pub fn generator(g: i64) -> Self {
        assert!(g != 0, "generator index must be nonzero");
        FreeWord { letters: vec![g] }
    }

    pub fn from_letters(letters: Vec<i64>) -> Self {
        let mut word = FreeWord::identity();
        for letter in letters {
            word.push(letter);
        }
        word
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    fn push(&mut self, letter: i64) {
        assert!(letter != 0, "letter must be nonzero");
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &letter in &other.letters {
            out.push(letter);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Replaces generator `g` by `images[g - 1]` throughout, reducing as it
    /// goes.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::identity();
        for &letter in &self.letters {
            let image = &images[(letter.unsigned_abs() - 1) as usize];
            let piece = if letter > 0 {
                image.clone()
            } else {
                image.inverse()
            };
            out = out.multiply(&piece);
        }
        out
    }
}

/// One crossing event: exact time, exact first-axis value, sorted position,
/// and sign.
#[derive(Clone, Debug, PartialEq)]
struct Crossing {
    t: Rational,
    x: Rational,
    position: usize,
    positive: bool,
}

/// Extracts the braid word of a valid planar path. Every keyframe junction
/// is handled by comparing the signs of the center difference on the two
/// adjacent segments, so crossings that happen exactly at a keyframe are
/// neither dropped nor double-counted.
pub fn extract_braid(path: &PlPath) -> Result<BraidWord, BraidError> {
    if path.dim() != 2 {
        return Err(BraidError::NotPlanar { dim: path.dim() });
    }
    path.validate()?;
    let m = path.arity();
    let mut crossings: Vec<Crossing> = Vec::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            find_pair_crossings(path, i, j, &mut crossings)?;
        }
    }
    // Simultaneous crossings at distinct positions commute; order them by
    // first-axis value. Equal time and position would be a triple tie,
    // already rejected.
    crossings.sort_by(|a, b| (&a.t, &a.x).cmp(&(&b.t, &b.x)));
    let letters = crossings
        .iter()
        .map(|c| {
            let k = c.position as i64;
            if c.positive {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::new(m, letters)
}

/// First-axis center of cube `label` at keyframe `kf` of `path`.
fn center(path: &PlPath, kf: usize, label: usize, axis: usize) -> Rational {
    path.keyframes()[kf].cube(label).axis(axis).midpoint()
}

/// Scans the piecewise-linear difference of centers of one pair for sign
/// changes, classifying every zero exactly.
fn find_pair_crossings(
    path: &PlPath,
    i: usize,
    j: usize,
    out: &mut Vec<Crossing>,
) -> Result<(), BraidError> {
    let segs = path.segment_count();
    // d(k) = center_i - center_j at keyframe k.
    let d: Vec<Rational> = (0..=segs)
        .map(|k| center(path, k, i, 0) - center(path, k, j, 0))
        .collect();
    for seg in 0..segs {
        let (a, b) = (&d[seg], &d[seg + 1]);
        if a.is_zero() && b.is_zero() {
            return Err(BraidError::SegmentTie { segment: seg, i, j });
        }
        // Interior zero: d(s) = a + s (b - a) = 0 with 0 < s < 1 needs
        // opposite strict signs; equal signs have no zero, and a zero at an
        // endpoint is handled at the junction below.
        if a.is_positive() && b.is_negative() || a.is_negative() && b.is_positive() {
            let s = a / &(a - b);
            let t = global_time(path, seg, &s);
            record_crossing(path, i, j, &t, a.is_negative(), out)?;
        }
    }
    // Junction zeros, including the path endpoints.
    for k in 0..=segs {
        if !d[k].is_zero() {
            continue;
        }
        let t = path.times()[k].clone();
        if k == 0 || k == segs {
            return Err(BraidError::EndpointCrossing { i, j, t });
        }
        // Sign just before comes from segment k-1, just after from segment
        // k; segment-long ties were rejected above, so both are nonzero.
        let before = &d[k - 1];
        let after = &d[k + 1];
        if before.is_positive() == after.is_positive() {
            return Err(BraidError::TangentialTouch { i, j, t });
        }
        record_crossing(path, i, j, &t, before.is_negative(), out)?;
    }
    Ok(())
}

fn global_time(path: &PlPath, seg: usize, s: &Rational) -> Rational {
    let t0 = &path.times()[seg];
    let t1 = &path.times()[seg + 1];
    t0 + &(t1 - t0) * s
}

/// Validates general position at the crossing instant and appends the event.
/// `i_from_left` records whether cube `i` approaches with the smaller center.
fn record_crossing(
    path: &PlPath,
    i: usize,
    j: usize,
    t: &Rational,
    i_from_left: bool,
    out: &mut Vec<Crossing>,
) -> Result<(), BraidError> {
    let config = path
        .config_at(t)
        .expect("crossing time lies inside a validated path");
    let x = config.cube(i).axis(0).midpoint();
    let mut smaller = 0;
    for other in 1..=path.arity() {
        if other == i || other == j {
            continue;
        }
        let c = config.cube(other).axis(0).midpoint();
        if c == x {
            return Err(BraidError::AmbiguousPosition { t: t.clone() });
        }
        if c < x {
            smaller += 1;
        }
    }
    let (left, right) = if i_from_left { (i, j) } else { (j, i) };
    let left_depth = config.cube(left).axis(1).midpoint();
    let right_depth = config.cube(right).axis(1).midpoint();
    if left_depth == right_depth {
        return Err(BraidError::EqualDepth { i, j, t: t.clone() });
    }
    out.push(Crossing {
        t: t.clone(),
        x,
        position: smaller + 1,
        positive: left_depth < right_depth,
    });
    Ok(())
}
