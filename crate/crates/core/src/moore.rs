//! Moore-style monoids of labelled lengths.
//!
//! A `MooreElement` is a nonnegative length with an optional label;
//! multiplication adds lengths and pushes labels through the proportional
//! split `r / (r + s)`. A `ComparisonElement` refines this to a triple
//! `(head, body, tail)` of lengths with positive body; it receives both the
//! Moore monoid and the envelope monoid by exact homomorphisms that agree on
//! splits, which is what makes the three label conventions interchangeable.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::envelope::Envelope;
use crate::rational::Rational;
use crate::term::{combine_split_labels, Term};

/// Errors raised by the length-monoid constructors.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum MooreError {
    #[error("length must be nonnegative, got {length}")]
    NegativeLength { length: Rational },
    #[error("a labelled element needs positive length, got {length}")]
    LabelNeedsLength { length: Rational },
    #[error("body must be positive, got {body}")]
    NonPositiveBody { body: Rational },
    #[error("head and tail must be nonnegative, got ({head}, {tail})")]
    NegativeEnds { head: Rational, tail: Rational },
    #[error("a labelled triple needs positive head, got {head}")]
    LabelNeedsHead { head: Rational },
}

/// A length `r >= 0` with an optional non-unit label, present only when
/// `r > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MooreElement {
    length: Rational,
    label: Option<Term>,
}

impl MooreElement {
    pub fn new(length: Rational, label: Option<Term>) -> Result<Self, MooreError> {
        if length.is_negative() {
            return Err(MooreError::NegativeLength { length });
        }
        let label = label.filter(|t| !t.is_unit());
        if label.is_some() && !length.is_positive() {
            return Err(MooreError::LabelNeedsLength { length });
        }
        Ok(MooreElement { length, label })
    }

    /// The monoid unit: length zero.
    pub fn unit() -> Self {
        MooreElement {
            length: Rational::zero(),
            label: None,
        }
    }

    pub fn length(&self) -> &Rational {
        &self.length
    }

    pub fn label(&self) -> Option<&Term> {
        self.label.as_ref()
    }

    /// Lengths add; labels are pushed through the proportional split
    /// `r / (r + s)`, which is only computed when a label is present (and is
    /// then well defined because some length is positive).
    pub fn multiply(&self, rhs: &MooreElement) -> MooreElement {
        let length = &self.length + &rhs.length;
        let label = if self.label.is_none() && rhs.label.is_none() {
            None
        } else {
            let split = &self.length / &length;
            combine_split_labels(&split, self.label.as_ref(), rhs.label.as_ref())
        };
        MooreElement { length, label }
    }

    /// The label as a point of the free algebra (unit when unlabelled).
    pub fn to_term(&self) -> Term {
        self.label.clone().unwrap_or_else(Term::unit)
    }
}

/// A triple of lengths `(head, body, tail)` with `body > 0` and the ends
/// nonnegative, plus an optional non-unit label requiring `head > 0`. The
/// triple records how much of a reference interval sits before, inside, and
/// after an element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ComparisonElement {
    head: Rational,
    body: Rational,
    tail: Rational,
    label: Option<Term>,
}

impl ComparisonElement {
    pub fn new(
        head: Rational,
        body: Rational,
        tail: Rational,
        label: Option<Term>,
    ) -> Result<Self, MooreError> {
        if !body.is_positive() {
            return Err(MooreError::NonPositiveBody { body });
        }
        if head.is_negative() || tail.is_negative() {
            return Err(MooreError::NegativeEnds { head, tail });
        }
        let label = label.filter(|t| !t.is_unit());
        if label.is_some() && !head.is_positive() {
            return Err(MooreError::LabelNeedsHead { head });
        }
        Ok(ComparisonElement {
            head,
            body,
            tail,
            label,
        })
    }

    /// The monoid unit `(0, 1, 0)`.
    pub fn unit() -> Self {
        ComparisonElement {
            head: Rational::zero(),
            body: Rational::one(),
            tail: Rational::zero(),
            label: None,
        }
    }

    pub fn head(&self) -> &Rational {
        &self.head
    }

    pub fn body(&self) -> &Rational {
        &self.body
    }

    pub fn tail(&self) -> &Rational {
        &self.tail
    }

    pub fn label(&self) -> Option<&Term> {
        self.label.as_ref()
    }

    /// The right factor is rescaled by the left body and shifted by the left
    /// head; labels are pushed through the split of the combined head.
    pub fn multiply(&self, rhs: &ComparisonElement) -> ComparisonElement {
        let head = &self.head + &self.body * &rhs.head;
        let body = &self.body * &rhs.body;
        let tail = &self.body * &rhs.tail + &self.tail;
        let label = if self.label.is_none() && rhs.label.is_none() {
            None
        } else {
            let split = &self.head / &head;
            combine_split_labels(&split, self.label.as_ref(), rhs.label.as_ref())
        };
        ComparisonElement {
            head,
            body,
            tail,
            label,
        }
    }

    /// Receives the Moore monoid: a length becomes pure head with unit body.
    pub fn from_moore(m: &MooreElement) -> ComparisonElement {
        ComparisonElement {
            head: m.length.clone(),
            body: Rational::one(),
            tail: Rational::zero(),
            label: m.label.clone(),
        }
    }

    /// Receives the envelope monoid: coordinates `(x, y)` become the lengths
    /// cut out of the unit interval.
    pub fn from_envelope(e: &Envelope) -> ComparisonElement {
        ComparisonElement {
            head: e.x().clone(),
            body: e.y() - e.x(),
            tail: Rational::one() - e.y(),
            label: e.label().cloned(),
        }
    }
}

// JSON forms: {"length": "p/q", "label": ...} and
// {"head": "p/q", "body": "p/q", "tail": "p/q", "label": ...}.

#[derive(Serialize, Deserialize)]
struct MooreJson {
    length: Rational,
    label: Option<Term>,
}

impl Serialize for MooreElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MooreJson {
            length: self.length.clone(),
            label: self.label.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MooreElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = MooreJson::deserialize(deserializer)?;
        MooreElement::new(raw.length, raw.label).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ComparisonJson {
    head: Rational,
    body: Rational,
    tail: Rational,
    label: Option<Term>,
}

impl Serialize for ComparisonElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ComparisonJson {
            head: self.head.clone(),
            body: self.body.clone(),
            tail: self.tail.clone(),
            label: self.label.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComparisonElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ComparisonJson::deserialize(deserializer)?;
        ComparisonElement::new(raw.head, raw.body, raw.tail, raw.label)
            .map_err(D::Error::custom)
    }
}
