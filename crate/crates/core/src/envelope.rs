//! The envelope monoid of labelled interval coordinates.
//!
//! An envelope element is a sub-interval `[x, y]` of the unit interval
//! carrying an optional label from the free algebra; the label records what
//! was absorbed into `[0, x]`. Multiplication re-parametrizes the right
//! factor into the left factor's interval and pushes labels through the
//! induced splitting, giving a monoid with unit `([0, 1], unlabelled)`. The
//! anchored-pair maps `plug` and `label_action` decompose slot substitution
//! into a coordinate part and a label part; `factor_last` inverts the
//! construction by splitting the last interval off a configuration.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::operad::{Interval, IntervalConfig, OperadError};
use crate::rational::Rational;
use crate::term::{combine_split_labels, Term};

/// Errors raised by envelope constructors and maps.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum EnvelopeError {
    #[error("coordinates must satisfy 0 <= x < y <= 1, got ({x}, {y})")]
    InvalidCoordinates { x: Rational, y: Rational },
    #[error("a labelled element needs x > 0, got x = {x}")]
    LabelNeedsRoom { x: Rational },
    #[error("anchored pair needs 0 < split < end <= 1, got ({split}, {end})")]
    InvalidPair { split: Rational, end: Rational },
    #[error("label action needs an interval with positive left endpoint")]
    ActionAtZero,
    #[error("cannot factor an empty configuration")]
    EmptyFamily,
    #[error("cannot rescale into a zero-length prefix")]
    NoPrefixRoom,
    #[error("expected {expected} labels for a configuration of arity {arity}")]
    WordLength { expected: usize, arity: usize },
    #[error("homotopy time {t} is outside [0, 1]")]
    BadTime { t: Rational },
    #[error("need at least one point")]
    EmptyList,
    #[error("anchored point needs x > 0")]
    AnchorAtZero,
    #[error(transparent)]
    Operad(#[from] OperadError),
}

/// The pair `([0, split], [split, end])` with `0 < split < end <= 1`. These
/// are the two-interval configurations whose first interval starts at zero,
/// and they mediate between coordinates and labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AnchoredPair {
    split: Rational,
    end: Rational,
}

impl AnchoredPair {
    pub fn new(split: Rational, end: Rational) -> Result<Self, EnvelopeError> {
        if !split.is_positive() || split >= end || end > Rational::one() {
            return Err(EnvelopeError::InvalidPair { split, end });
        }
        Ok(AnchoredPair { split, end })
    }

    pub fn split(&self) -> &Rational {
        &self.split
    }

    pub fn end(&self) -> &Rational {
        &self.end
    }

    /// The pair as a two-interval configuration.
    pub fn to_family(&self) -> IntervalConfig {
        IntervalConfig::from_pairs(&[
            (Rational::zero(), self.split.clone()),
            (self.split.clone(), self.end.clone()),
        ])
        .expect("anchored pair is ordered")
    }

    /// The second interval `[split, end]`, i.e. the pair's own coordinates.
    pub fn coords(&self) -> Interval {
        Interval::new(self.split.clone(), self.end.clone()).expect("split < end")
    }

    /// Affine image of `inner` under the parametrization of the second
    /// interval: the coordinate part of substitution into slot two.
    pub fn plug(&self, inner: &Interval) -> Interval {
        let len = &self.end - &self.split;
        Interval::new(
            &self.split + &len * inner.lo(),
            &self.split + &len * inner.hi(),
        )
        .expect("affine image of a nondegenerate interval")
    }

    /// The splitting produced by plugging `inner` into slot two: the first
    /// interval `[0, split]` occupies `split / plug(inner).lo` of the room to
    /// the left of the plugged copy.
    pub fn label_split(&self, inner: &Interval) -> Rational {
        &self.split / self.plug(inner).lo()
    }

    /// The label part of substitution into slot two, as an anchored pair
    /// ending at 1. Needs `inner.lo > 0`, otherwise the pair degenerates.
    pub fn label_action(&self, inner: &Interval) -> Result<AnchoredPair, EnvelopeError> {
        if !inner.lo().is_positive() {
            return Err(EnvelopeError::ActionAtZero);
        }
        AnchoredPair::new(self.label_split(inner), Rational::one())
    }
}

/// Splits substitution into slot two through `plug` and `label_action`:
/// for anchored pairs `outer` and `inner`,
/// `outer.compose_at(2, inner)` equals the anchored pair on
/// `outer.plug(inner.coords())` with `outer.label_action(...)` embedded into
/// its first slot. Exposed for tests and the self-check suites.
pub fn slot_two_decomposition(
    outer: &AnchoredPair,
    inner: &AnchoredPair,
) -> Result<(IntervalConfig, IntervalConfig), EnvelopeError> {
    let direct = outer
        .to_family()
        .compose_at(2, &inner.to_family())?;
    let plugged = outer.plug(&inner.coords());
    let coord_pair = AnchoredPair::new(plugged.lo().clone(), plugged.hi().clone())?;
    let action = outer.label_action(&inner.coords())?;
    let factored = coord_pair
        .to_family()
        .compose_at(1, &action.to_family())?;
    Ok((direct, factored))
}

/// An element of the envelope monoid: coordinates `0 <= x < y <= 1` plus an
/// optional non-unit label, present only when `x > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Envelope {
    x: Rational,
    y: Rational,
    label: Option<Term>,
}

impl Envelope {
    pub fn new(x: Rational, y: Rational, label: Option<Term>) -> Result<Self, EnvelopeError> {
        if x.is_negative() || x >= y || y > Rational::one() {
            return Err(EnvelopeError::InvalidCoordinates { x, y });
        }
        // A unit label carries no information; erase it so equality of
        // elements is equality of data.
        let label = label.filter(|t| !t.is_unit());
        if label.is_some() && !x.is_positive() {
            return Err(EnvelopeError::LabelNeedsRoom { x });
        }
        Ok(Envelope { x, y, label })
    }

    /// The monoid unit `([0, 1], unlabelled)`.
    pub fn unit() -> Self {
        Envelope {
            x: Rational::zero(),
            y: Rational::one(),
            label: None,
        }
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn label(&self) -> Option<&Term> {
        self.label.as_ref()
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.x.clone(), self.y.clone()).expect("x < y")
    }

    /// Monoid multiplication: the right factor's coordinates are read inside
    /// the left factor's interval, and labels are pushed through the split
    /// `x1 / x''` of the room left of the product interval.
    pub fn multiply(&self, rhs: &Envelope) -> Envelope {
        let len = &self.y - &self.x;
        let x = &self.x + &len * &rhs.x;
        let y = &self.x + &len * &rhs.y;
        let label = if self.label.is_none() && rhs.label.is_none() {
            None
        } else {
            // Any label forces x'' > 0: a left label needs x1 > 0 and a
            // right label needs x2 > 0, hence x'' >= min(x1, len * x2) > 0.
            let split = &self.x / &x;
            combine_split_labels(&split, self.label.as_ref(), rhs.label.as_ref())
        };
        Envelope::new(x, y, label).expect("product of valid elements is valid")
    }

    /// Collapse to the free algebra: the label is applied on `[0, x]`, so
    /// everything to the right of `x` is forgotten.
    pub fn to_term(&self) -> Term {
        match &self.label {
            None => Term::unit(),
            Some(label) => {
                let family =
                    IntervalConfig::from_pairs(&[(Rational::zero(), self.x.clone())])
                        .expect("label implies x > 0");
                Term::apply(&family, std::slice::from_ref(label))
            }
        }
    }

    /// Section of `to_term`: a term is placed at coordinates `(1/2, 1)`.
    pub fn from_term(term: &Term) -> Envelope {
        let label = if term.is_unit() {
            None
        } else {
            Some(term.clone())
        };
        Envelope {
            x: Rational::new(1, 2),
            y: Rational::one(),
            label,
        }
    }
}

/// The straight-line deformation of coordinates onto the slice `(1/2, 1)`:
/// at time 1 it is the identity and at time 0 every element sits at
/// `(1/2, 1)` with its label intact. Valid for every rational time in
/// `[0, 1]` because `y' - x' = (1 - t)/2 + t(y - x) > 0`.
pub fn homotopy_coords(t: &Rational, e: &Envelope) -> Result<Envelope, EnvelopeError> {
    if t.is_negative() || t > &Rational::one() {
        return Err(EnvelopeError::BadTime { t: t.clone() });
    }
    let half = Rational::new(1, 2);
    let x = &half + t * (&e.x - &half);
    let y = (Rational::one() - t) + t * &e.y;
    Envelope::new(x, y, e.label.clone())
}

/// The matching deformation on the free-algebra side: at time 1 the identity,
/// at time 0 the composite `to_term . from_term`, which applies `[0, 1/2]`.
pub fn homotopy_term(t: &Rational, term: &Term) -> Result<Term, EnvelopeError> {
    if t.is_negative() || t > &Rational::one() {
        return Err(EnvelopeError::BadTime { t: t.clone() });
    }
    let hi = (Rational::one() + t) / Rational::integer(2);
    let family = IntervalConfig::from_pairs(&[(Rational::zero(), hi)])
        .expect("(1 + t)/2 is positive");
    Ok(Term::apply(&family, std::slice::from_ref(term)))
}

/// Splits the last interval off a configuration: the earlier intervals,
/// rescaled by the last interval's left endpoint, form a configuration of
/// their own. For arity one the rest is empty and no rescaling happens.
pub fn factor_last(
    family: &IntervalConfig,
) -> Result<(Interval, IntervalConfig), EnvelopeError> {
    let m = family.arity();
    if m == 0 {
        return Err(EnvelopeError::EmptyFamily);
    }
    let last = family.interval(m).clone();
    if m == 1 {
        return Ok((last, IntervalConfig::empty()));
    }
    // Ordering forces last.lo >= hi of the previous interval > 0.
    let scale = last.lo();
    let pairs: Vec<(Rational, Rational)> = family.intervals()[..m - 1]
        .iter()
        .map(|iv| (iv.lo() / scale, iv.hi() / scale))
        .collect();
    let rest = IntervalConfig::from_pairs(&pairs)?;
    Ok((last, rest))
}

/// Inverse of `factor_last`: rescales `rest` into `[0, last.lo]` and appends
/// `last`.
pub fn recompose(
    last: &Interval,
    rest: &IntervalConfig,
) -> Result<IntervalConfig, EnvelopeError> {
    if rest.arity() == 0 {
        return Ok(IntervalConfig::new(vec![last.clone()])?);
    }
    if !last.lo().is_positive() {
        return Err(EnvelopeError::NoPrefixRoom);
    }
    let scale = last.lo();
    let mut pairs: Vec<(Rational, Rational)> = rest
        .intervals()
        .iter()
        .map(|iv| (iv.lo() * scale, iv.hi() * scale))
        .collect();
    pairs.push((last.lo().clone(), last.hi().clone()));
    Ok(IntervalConfig::from_pairs(&pairs)?)
}

/// Normal form of a configuration acting on a word of labels: the last
/// interval carries the coordinates, and the remaining intervals applied to
/// the word become the label. Multiplicative for composition into the last
/// slot.
pub fn normalize_action(
    family: &IntervalConfig,
    word: &[Term],
) -> Result<Envelope, EnvelopeError> {
    if family.arity() != word.len() + 1 {
        return Err(EnvelopeError::WordLength {
            expected: family.arity().saturating_sub(1),
            arity: family.arity(),
        });
    }
    let (last, rest) = factor_last(family)?;
    let label = if rest.arity() == 0 {
        None
    } else {
        Some(Term::apply(&rest, word))
    };
    Envelope::new(last.lo().clone(), last.hi().clone(), label)
}

/// A point of the interval model, with a flag recording whether it is the
/// image of an anchored pair (which requires `x > 0`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoordPoint {
    x: Rational,
    y: Rational,
    anchored: bool,
}

impl CoordPoint {
    pub fn new(x: Rational, y: Rational, anchored: bool) -> Result<Self, EnvelopeError> {
        if x.is_negative() || x >= y || y > Rational::one() {
            return Err(EnvelopeError::InvalidCoordinates { x, y });
        }
        if anchored && !x.is_positive() {
            return Err(EnvelopeError::AnchorAtZero);
        }
        Ok(CoordPoint { x, y, anchored })
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn anchored(&self) -> bool {
        self.anchored
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.x.clone(), self.y.clone()).expect("x < y")
    }

    pub fn from_interval(iv: &Interval, anchored: bool) -> Result<Self, EnvelopeError> {
        CoordPoint::new(iv.lo().clone(), iv.hi().clone(), anchored)
    }
}

/// Plugs a point into an anchored pair, keeping the point's flag. The image
/// always has positive left endpoint.
pub fn plug_point(pair: &AnchoredPair, point: &CoordPoint) -> CoordPoint {
    let image = pair.plug(&point.interval());
    CoordPoint::new(image.lo().clone(), image.hi().clone(), point.anchored)
        .expect("plug lands strictly inside (0, 1]")
}

/// The diagonal: `m` copies of one point.
pub fn diagonal(point: &CoordPoint, m: usize) -> Vec<CoordPoint> {
    vec![point.clone(); m]
}

/// Retraction of a tuple of points onto the diagonal: the left endpoint is
/// the maximum of the left endpoints and the length is the minimum of the
/// lengths. The result is anchored when any input is.
pub fn diagonal_retract(points: &[CoordPoint]) -> Result<CoordPoint, EnvelopeError> {
    let first = points.first().ok_or(EnvelopeError::EmptyList)?;
    let mut x = first.x.clone();
    let mut len = &first.y - &first.x;
    let mut anchored = first.anchored;
    for p in &points[1..] {
        x = Rational::max(x, p.x.clone());
        len = Rational::min(len, &p.y - &p.x);
        anchored = anchored || p.anchored;
    }
    let y = &x + &len;
    CoordPoint::new(x, y, anchored)
}

/// The straight-line deformation from the retracted diagonal back to the
/// tuple: time 0 is `diagonal . diagonal_retract`, time 1 the identity.
/// Every slot keeps its own flag, and every intermediate point is valid
/// because lengths interpolate between positive values.
pub fn diagonal_homotopy(
    t: &Rational,
    points: &[CoordPoint],
) -> Result<Vec<CoordPoint>, EnvelopeError> {
    if t.is_negative() || t > &Rational::one() {
        return Err(EnvelopeError::BadTime { t: t.clone() });
    }
    let base = diagonal_retract(points)?;
    points
        .iter()
        .map(|p| {
            let x = &base.x + t * (&p.x - &base.x);
            let y = &base.y + t * (&p.y - &base.y);
            CoordPoint::new(x, y, p.anchored)
        })
        .collect()
}

// JSON form: {"x": "p/q", "y": "p/q", "label": term-or-null}.

#[derive(Serialize, Deserialize)]
struct EnvelopeJson {
    x: Rational,
    y: Rational,
    label: Option<Term>,
}

impl Serialize for Envelope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        EnvelopeJson {
            x: self.x.clone(),
            y: self.y.clone(),
            label: self.label.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Envelope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = EnvelopeJson::deserialize(deserializer)?;
        Envelope::new(raw.x, raw.y, raw.label).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::term::Generator;

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    fn pair(split: (i64, i64), end: (i64, i64)) -> AnchoredPair {
        AnchoredPair::new(rat(split.0, split.1), rat(end.0, end.1)).unwrap()
    }

    fn gen(name: &str) -> Term {
        Term::generator(Generator::new(name))
    }

    fn env(x: (i64, i64), y: (i64, i64), label: Option<Term>) -> Envelope {
        Envelope::new(rat(x.0, x.1), rat(y.0, y.1), label).unwrap()
    }

    #[test]
    fn plug_matches_hand_values() {
        let a = pair((1, 2), (1, 1));
        assert_eq!(a.plug(&iv((1, 2), (1, 1))), iv((3, 4), (1, 1)));
        assert_eq!(a.plug(&iv((1, 4), (1, 2))), iv((5, 8), (3, 4)));
        let b = pair((1, 2), (3, 4));
        assert_eq!(b.plug(&iv((1, 2), (1, 1))), iv((5, 8), (3, 4)));
    }

    #[test]
    fn label_action_matches_hand_values() {
        let a = pair((1, 2), (1, 1));
        assert_eq!(
            a.label_action(&iv((1, 2), (1, 1))).unwrap(),
            pair((2, 3), (1, 1))
        );
        assert_eq!(
            a.label_action(&iv((1, 4), (1, 2))).unwrap(),
            pair((4, 5), (1, 1))
        );
        assert_eq!(
            a.label_action(&iv((0, 1), (1, 2))),
            Err(EnvelopeError::ActionAtZero)
        );
    }

    #[test]
    fn slot_two_substitution_decomposes_exactly() {
        let outer = pair((1, 2), (1, 1));
        let inner = pair((1, 2), (1, 1));
        let (direct, factored) = slot_two_decomposition(&outer, &inner).unwrap();
        let expected = IntervalConfig::from_pairs(&[
            (rat(0, 1), rat(1, 2)),
            (rat(1, 2), rat(3, 4)),
            (rat(3, 4), rat(1, 1)),
        ])
        .unwrap();
        assert_eq!(direct, expected);
        assert_eq!(factored, expected);

        let (direct, factored) =
            slot_two_decomposition(&pair((1, 3), (5, 6)), &pair((2, 7), (4, 7))).unwrap();
        assert_eq!(direct, factored);
    }

    #[test]
    fn multiplication_has_unit_and_is_associative() {
        let e = env((1, 3), (2, 3), Some(gen("x")));
        assert_eq!(Envelope::unit().multiply(&e), e);
        assert_eq!(e.multiply(&Envelope::unit()), e);

        let a = env((1, 4), (1, 2), Some(gen("x")));
        let b = env((1, 3), (5, 6), Some(gen("y")));
        let c = env((1, 2), (1, 1), Some(gen("z")));
        assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));

        let u = env((0, 1), (1, 2), None);
        assert_eq!(a.multiply(&u).multiply(&c), a.multiply(&u.multiply(&c)));
    }

    #[test]
    fn mixed_label_product_matches_hand_value() {
        let left = env((1, 2), (1, 1), Some(gen("x")));
        let right = env((0, 1), (1, 2), None);
        let product = left.multiply(&right);
        // Coordinates shrink to (1/2, 3/4); the label rides along unchanged
        // because the split is 1.
        assert_eq!(product, env((1, 2), (3, 4), Some(gen("x"))));
    }

    #[test]
    fn both_labels_combine_through_the_split() {
        let left = env((1, 2), (1, 1), Some(gen("x")));
        let right = env((1, 2), (1, 1), Some(gen("y")));
        let product = left.multiply(&right);
        assert_eq!(product.x(), &rat(3, 4));
        assert_eq!(product.y(), &rat(1, 1));
        let split = IntervalConfig::from_pairs(&[
            (rat(0, 1), rat(2, 3)),
            (rat(2, 3), rat(1, 1)),
        ])
        .unwrap();
        assert_eq!(
            product.label(),
            Some(&Term::apply(&split, &[gen("x"), gen("y")]))
        );
    }

    #[test]
    fn collapse_and_section_compose_as_expected() {
        let t = gen("x");
        let e = Envelope::from_term(&t);
        assert_eq!(e, env((1, 2), (1, 1), Some(gen("x"))));
        let back = e.to_term();
        let half = IntervalConfig::from_pairs(&[(rat(0, 1), rat(1, 2))]).unwrap();
        assert_eq!(back, Term::apply(&half, &[gen("x")]));
        assert!(Envelope::from_term(&Term::unit()).label().is_none());
    }

    #[test]
    fn coordinate_homotopy_interpolates_and_hits_endpoints() {
        let e = env((3, 4), (1, 1), Some(gen("x")));
        assert_eq!(homotopy_coords(&rat(1, 1), &e).unwrap(), e);
        assert_eq!(
            homotopy_coords(&rat(0, 1), &e).unwrap(),
            env((1, 2), (1, 1), Some(gen("x")))
        );
        assert_eq!(
            homotopy_coords(&rat(1, 2), &e).unwrap(),
            env((5, 8), (1, 1), Some(gen("x")))
        );
        assert!(homotopy_coords(&rat(3, 2), &e).is_err());
    }

    #[test]
    fn term_homotopy_interpolates_between_identity_and_collapse() {
        let t = gen("r");
        assert_eq!(homotopy_term(&rat(1, 1), &t).unwrap(), t);
        let e = Envelope::from_term(&t);
        assert_eq!(homotopy_term(&rat(0, 1), &t).unwrap(), e.to_term());
        let mid = homotopy_term(&rat(1, 2), &t).unwrap();
        let expected = IntervalConfig::from_pairs(&[(rat(0, 1), rat(3, 4))]).unwrap();
        assert_eq!(mid, Term::apply(&expected, &[gen("r")]));
        assert_eq!(homotopy_term(&rat(1, 2), &Term::unit()).unwrap(), Term::unit());
    }

    #[test]
    fn factor_last_matches_hand_value_and_round_trips() {
        let family = IntervalConfig::from_pairs(&[
            (rat(1, 8), rat(1, 4)),
            (rat(1, 2), rat(3, 4)),
        ])
        .unwrap();
        let (last, rest) = factor_last(&family).unwrap();
        assert_eq!(last, iv((1, 2), (3, 4)));
        assert_eq!(
            rest,
            IntervalConfig::from_pairs(&[(rat(1, 4), rat(1, 2))]).unwrap()
        );
        assert_eq!(recompose(&last, &rest).unwrap(), family);

        let single = IntervalConfig::from_pairs(&[(rat(0, 1), rat(1, 3))]).unwrap();
        let (last, rest) = factor_last(&single).unwrap();
        assert_eq!(rest.arity(), 0);
        assert_eq!(recompose(&last, &rest).unwrap(), single);
    }

    #[test]
    fn factoring_commutes_with_substitution_away_from_the_last_slot() {
        let family = IntervalConfig::from_pairs(&[
            (rat(1, 8), rat(1, 4)),
            (rat(1, 4), rat(3, 8)),
            (rat(1, 2), rat(3, 4)),
        ])
        .unwrap();
        let b1 = IntervalConfig::half_split();
        let b2 = IntervalConfig::from_pairs(&[(rat(1, 3), rat(2, 3))]).unwrap();
        let substituted = family
            .compose(&[b1.clone(), b2.clone(), IntervalConfig::whole()])
            .unwrap();
        let (last, rest) = factor_last(&family).unwrap();
        let (last2, rest2) = factor_last(&substituted).unwrap();
        assert_eq!(last2, last);
        assert_eq!(rest2, rest.compose(&[b1, b2]).unwrap());
    }

    #[test]
    fn normal_form_is_multiplicative_for_last_slot_composition() {
        let a1 = IntervalConfig::from_pairs(&[
            (rat(1, 8), rat(1, 4)),
            (rat(1, 2), rat(3, 4)),
        ])
        .unwrap();
        let a2 = IntervalConfig::from_pairs(&[
            (rat(1, 4), rat(1, 2)),
            (rat(1, 2), rat(1, 1)),
        ])
        .unwrap();
        let w1 = vec![gen("x")];
        let w2 = vec![gen("y")];
        let composed = a1.compose_at(2, &a2).unwrap();
        let word: Vec<Term> = w1.iter().chain(w2.iter()).cloned().collect();
        let lhs = normalize_action(&composed, &word).unwrap();
        let rhs = normalize_action(&a1, &w1)
            .unwrap()
            .multiply(&normalize_action(&a2, &w2).unwrap());
        assert_eq!(lhs, rhs);

        // Unlabelled factor on the left.
        let a0 = IntervalConfig::from_pairs(&[(rat(0, 1), rat(1, 2))]).unwrap();
        let composed = a0.compose_at(1, &a2).unwrap();
        let lhs = normalize_action(&composed, &w2).unwrap();
        let rhs = normalize_action(&a0, &[])
            .unwrap()
            .multiply(&normalize_action(&a2, &w2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn diagonal_retract_matches_hand_value_and_splits_the_diagonal() {
        let points = vec![
            CoordPoint::new(rat(1, 2), rat(1, 1), false).unwrap(),
            CoordPoint::new(rat(1, 4), rat(1, 2), false).unwrap(),
        ];
        let r = diagonal_retract(&points).unwrap();
        assert_eq!(r.x(), &rat(1, 2));
        assert_eq!(r.y(), &rat(3, 4));

        let p = CoordPoint::new(rat(1, 3), rat(2, 3), true).unwrap();
        assert_eq!(diagonal_retract(&diagonal(&p, 4)).unwrap(), p);
    }

    #[test]
    fn diagonal_homotopy_hits_endpoints_and_matches_hand_value() {
        let points = vec![
            CoordPoint::new(rat(1, 2), rat(1, 1), false).unwrap(),
            CoordPoint::new(rat(1, 4), rat(1, 2), false).unwrap(),
        ];
        assert_eq!(diagonal_homotopy(&rat(1, 1), &points).unwrap(), points);
        let r = diagonal_retract(&points).unwrap();
        assert_eq!(
            diagonal_homotopy(&rat(0, 1), &points).unwrap(),
            diagonal(&r, 2)
        );
        let mid = diagonal_homotopy(&rat(1, 2), &points).unwrap();
        assert_eq!(mid[0], CoordPoint::new(rat(1, 2), rat(7, 8), false).unwrap());
        assert_eq!(mid[1], CoordPoint::new(rat(3, 8), rat(5, 8), false).unwrap());
    }

    #[test]
    fn plugging_commutes_with_the_diagonal_homotopy() {
        let a = pair((1, 2), (1, 1));
        let points = vec![
            CoordPoint::new(rat(1, 2), rat(1, 1), false).unwrap(),
            CoordPoint::new(rat(1, 4), rat(1, 2), false).unwrap(),
        ];
        for t in [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)] {
            let lhs: Vec<CoordPoint> = diagonal_homotopy(&t, &points)
                .unwrap()
                .iter()
                .map(|p| plug_point(&a, p))
                .collect();
            let plugged: Vec<CoordPoint> =
                points.iter().map(|p| plug_point(&a, p)).collect();
            let rhs = diagonal_homotopy(&t, &plugged).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn label_split_tracks_the_plugged_homotopy_not_the_naive_one() {
        let a = pair((1, 2), (1, 1));
        let points = vec![
            CoordPoint::new(rat(1, 2), rat(1, 1), false).unwrap(),
            CoordPoint::new(rat(1, 4), rat(1, 2), false).unwrap(),
        ];
        let plugged: Vec<CoordPoint> = points.iter().map(|p| plug_point(&a, p)).collect();
        let t = rat(1, 2);
        let moved = diagonal_homotopy(&t, &points).unwrap();
        let plugged_moved = diagonal_homotopy(&t, &plugged).unwrap();
        for (m, pm) in moved.iter().zip(&plugged_moved) {
            assert_eq!(a.label_split(&m.interval()), a.split() / pm.x());
        }
        assert_eq!(a.label_split(&moved[1].interval()), rat(8, 11));

        // The splits themselves do not interpolate linearly: deforming the
        // split images directly gives a different answer.
        let splits = vec![
            CoordPoint::new(a.label_split(&points[0].interval()), rat(1, 1), false).unwrap(),
            CoordPoint::new(a.label_split(&points[1].interval()), rat(1, 1), false).unwrap(),
        ];
        let naive = diagonal_homotopy(&t, &splits).unwrap();
        assert_eq!(naive[0].x(), &rat(11, 15));
        assert_ne!(
            a.label_split(&moved[0].interval()),
            naive[0].x().clone()
        );
    }

    #[test]
    fn json_round_trip_preserves_labels() {
        let e = env((1, 3), (2, 3), Some(gen("x")));
        let s = serde_json::to_string(&e).unwrap();
        let back: Envelope = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        let bad = r#"{"x":"1/2","y":"1/4","label":null}"#;
        assert!(serde_json::from_str::<Envelope>(bad).is_err());
    }
}
