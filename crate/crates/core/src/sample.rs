//! Seeded random generators for every structure in the crate.
//!
//! All sampling goes through a `ChaCha8Rng` so that a run is reproducible
//! from its seed alone. Rationals are kept small (single-digit numerators
//! over denominators up to 64 before arithmetic) purely for readability;
//! nothing downstream depends on the size of the numbers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use crate::envelope::{AnchoredPair, CoordPoint, Envelope};
use crate::moore::{ComparisonElement, MooreElement};
use crate::operad::{Cube, CubeConfig, Interval, IntervalConfig, Permutation};
use crate::rational::{rat, Rational};
use crate::term::{Generator, Term};
use crate::tree::{PlanarTree, TreePoint};

/// The RNG used by all samplers.
pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    SampleRng::seed_from_u64(seed)
}

/// A rational in `[0, 1]` with denominator at most 64.
pub fn unit_rational<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.gen_range(1..=64i64);
    let num = rng.gen_range(0..=den);
    Rational::new(num, den)
}

/// `count` distinct rationals in `[0, 1]`, sorted increasingly.
pub fn sorted_distinct<R: Rng>(rng: &mut R, count: usize) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        set.insert(unit_rational(rng));
    }
    set.into_iter().collect()
}

/// An ordered family of `arity` disjoint sub-intervals. Roughly a quarter
/// of draws tile the whole interval so that touching endpoints stay
/// exercised.
pub fn interval_family<R: Rng>(rng: &mut R, arity: usize) -> IntervalConfig {
    if arity == 0 {
        return IntervalConfig::empty();
    }
    let pairs: Vec<(Rational, Rational)> = if rng.gen_bool(0.25) {
        let mut cuts = sorted_distinct(rng, arity + 1);
        cuts[0] = Rational::zero();
        cuts[arity] = Rational::one();
        (0..arity)
            .map(|i| (cuts[i].clone(), cuts[i + 1].clone()))
            .collect()
    } else {
        let values = sorted_distinct(rng, 2 * arity);
        (0..arity)
            .map(|i| (values[2 * i].clone(), values[2 * i + 1].clone()))
            .collect()
    };
    IntervalConfig::from_pairs(&pairs).expect("sorted values give an ordered family")
}

const CUT_FRACTIONS: [(i64, i64); 5] = [(1, 4), (1, 3), (1, 2), (2, 3), (3, 4)];
const SHRINK_WINDOWS: [((i64, i64), (i64, i64)); 5] = [
    ((0, 1), (1, 1)),
    ((0, 1), (1, 2)),
    ((1, 4), (3, 4)),
    ((1, 2), (1, 1)),
    ((1, 3), (2, 3)),
];

/// A configuration of `arity` disjoint labelled cubes in dimension `dim`,
/// built by random binary space partition followed by per-axis shrinking
/// and a random relabelling.
pub fn cube_config<R: Rng>(rng: &mut R, dim: usize, arity: usize) -> CubeConfig {
    assert!(dim >= 1);
    if arity == 0 {
        return CubeConfig::empty(dim);
    }
    let full = (Rational::zero(), Rational::one());
    let mut regions: Vec<Vec<(Rational, Rational)>> = vec![vec![full; dim]];
    while regions.len() < arity {
        let target = rng.gen_range(0..regions.len());
        let axis = rng.gen_range(0..dim);
        let (lo, hi) = regions[target][axis].clone();
        let (p, q) = *CUT_FRACTIONS.choose(rng).expect("nonempty");
        let cut = &lo + (&hi - &lo) * rat(p, q);
        let mut right = regions[target].clone();
        regions[target][axis].1 = cut.clone();
        right[axis].0 = cut;
        regions.push(right);
    }
    for region in &mut regions {
        for (lo, hi) in region.iter_mut() {
            let ((ap, aq), (bp, bq)) = *SHRINK_WINDOWS.choose(rng).expect("nonempty");
            let len = &*hi - &*lo;
            let new_lo = &*lo + &len * rat(ap, aq);
            let new_hi = &*lo + &len * rat(bp, bq);
            *lo = new_lo;
            *hi = new_hi;
        }
    }
    regions.shuffle(rng);
    let cubes = regions
        .into_iter()
        .map(|region| {
            Cube::new(
                region
                    .into_iter()
                    .map(|(lo, hi)| Interval::new(lo, hi).expect("shrunk regions stay ordered"))
                    .collect(),
            )
            .expect("regions are nondegenerate")
        })
        .collect();
    CubeConfig::new(dim, cubes).expect("partition regions are interior-disjoint")
}

pub fn permutation<R: Rng>(rng: &mut R, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=degree).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity is a permutation")
}

const ALPHABET: [&str; 3] = ["x", "y", "z"];

/// A term with up to three letters over a three-letter alphabet.
pub fn term<R: Rng>(rng: &mut R) -> Term {
    let arity = rng.gen_range(0..=3usize);
    let shape = interval_family(rng, arity);
    let letters: Vec<Term> = (0..arity)
        .map(|_| {
            let name = *ALPHABET.choose(rng).expect("nonempty");
            Term::generator(Generator::new(name))
        })
        .collect();
    Term::apply(&shape, &letters)
}

/// An envelope element; anchored draws (positive left coordinate) carry a
/// label most of the time, and a twentieth of draws are the unit.
pub fn envelope<R: Rng>(rng: &mut R) -> Envelope {
    if rng.gen_bool(0.05) {
        return Envelope::unit();
    }
    let mut coords = sorted_distinct(rng, 2);
    if rng.gen_bool(0.25) {
        coords[0] = Rational::zero();
    }
    if rng.gen_bool(0.25) {
        coords[1] = Rational::one();
    }
    let [x, y]: [Rational; 2] = coords.try_into().expect("two values");
    let label = if x.is_positive() && rng.gen_bool(0.7) {
        Some(term(rng))
    } else {
        None
    };
    Envelope::new(x, y, label).expect("sorted distinct coordinates are valid")
}

/// An anchored pair `0 < split < end <= 1`.
pub fn anchored_pair<R: Rng>(rng: &mut R) -> AnchoredPair {
    let mut set = BTreeSet::new();
    while set.len() < 2 {
        let den = rng.gen_range(2..=64i64);
        let num = rng.gen_range(1..=den);
        set.insert(Rational::new(num, den));
    }
    let mut iter = set.into_iter();
    let split = iter.next().expect("two values");
    let end = iter.next().expect("two values");
    AnchoredPair::new(split, end).expect("sorted positive values are valid")
}

/// A point of the square with `x < y`; anchoring is only drawn when the
/// left coordinate is positive.
pub fn coord_point<R: Rng>(rng: &mut R) -> CoordPoint {
    let mut coords = sorted_distinct(rng, 2);
    if rng.gen_bool(0.2) {
        coords[0] = Rational::zero();
    }
    let [x, y]: [Rational; 2] = coords.try_into().expect("two values");
    let anchored = x.is_positive() && rng.gen_bool(0.5);
    CoordPoint::new(x, y, anchored).expect("sorted distinct coordinates are valid")
}

/// A Moore element with length up to 2.
pub fn moore<R: Rng>(rng: &mut R) -> MooreElement {
    let den = rng.gen_range(1..=32i64);
    let num = rng.gen_range(0..=2 * den);
    let length = Rational::new(num, den);
    let label = if length.is_positive() && rng.gen_bool(0.7) {
        Some(term(rng))
    } else {
        None
    };
    MooreElement::new(length, label).expect("nonnegative length is valid")
}

/// A comparison element with positive body and lengths up to 2.
pub fn comparison<R: Rng>(rng: &mut R) -> ComparisonElement {
    let part = |rng: &mut R, allow_zero: bool| {
        let den = rng.gen_range(1..=32i64);
        let num = rng.gen_range(i64::from(!allow_zero)..=2 * den);
        Rational::new(num, den)
    };
    let head = part(rng, true);
    let body = part(rng, false);
    let tail = part(rng, true);
    let label = if head.is_positive() && rng.gen_bool(0.7) {
        Some(term(rng))
    } else {
        None
    };
    ComparisonElement::new(head, body, tail, label).expect("positive body is valid")
}

/// Decorates every node of `tree` with a random family of its valence.
pub fn decorate<R: Rng>(rng: &mut R, tree: &PlanarTree) -> TreePoint {
    let labels = tree
        .valences()
        .iter()
        .map(|&v| interval_family(rng, v))
        .collect();
    TreePoint::new(tree.clone(), labels).expect("decorations match valences")
}
