//! Formal elements of a free interval-configuration algebra.
//!
//! A `Term` is either the unit (arity-0 configuration applied to nothing) or
//! an ordered interval family together with a word of generators, one per
//! interval. Applying a family to a list of terms flattens nested shapes by
//! operadic substitution, so equality of terms is exactly equality in the
//! free algebra on the generator set.

use serde::{Deserialize, Serialize};

use crate::operad::IntervalConfig;

/// An abstract generator, identified by name.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Generator(pub String);

impl Generator {
    pub fn new(name: impl Into<String>) -> Self {
        Generator(name.into())
    }
}

/// A point of the free algebra: a shape applied to a word of generators.
/// The unit element is the empty shape applied to the empty word.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Term {
    shape: IntervalConfig,
    word: Vec<Generator>,
}

impl Term {
    /// The basepoint: image of the arity-0 configuration.
    pub fn unit() -> Self {
        Term {
            shape: IntervalConfig::empty(),
            word: Vec::new(),
        }
    }

    /// The generator itself, i.e. the identity shape applied to it.
    pub fn generator(g: Generator) -> Self {
        Term {
            shape: IntervalConfig::whole(),
            word: vec![g],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty()
    }

    pub fn shape(&self) -> &IntervalConfig {
        &self.shape
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    /// Applies `shape` to a list of terms, one per interval. Unit arguments
    /// are absorbed (their slot is substituted away), and nested shapes are
    /// flattened, so the result is in canonical form.
    pub fn apply(shape: &IntervalConfig, args: &[Term]) -> Term {
        assert_eq!(
            shape.arity(),
            args.len(),
            "term application needs one argument per interval"
        );
        let parts: Vec<IntervalConfig> = args.iter().map(|t| t.shape.clone()).collect();
        let flat = shape
            .compose(&parts)
            .expect("substitution of valid families stays valid");
        let word = args.iter().flat_map(|t| t.word.iter().cloned()).collect();
        Term { shape: flat, word }
    }
}

/// Pushes two optional labels through a split of the unit interval: the left
/// label lands on `[0, split]`, the right on `[split, 1]`, and absent labels
/// leave their side out of the shape entirely. Callers guarantee `split > 0`
/// whenever a left label is present and `split < 1` whenever a right label
/// is, so the shapes below are always valid.
pub(crate) fn combine_split_labels(
    split: &crate::rational::Rational,
    left: Option<&Term>,
    right: Option<&Term>,
) -> Option<Term> {
    use crate::rational::Rational;
    match (left, right) {
        (None, None) => None,
        (Some(l), None) => {
            let shape = IntervalConfig::from_pairs(&[(Rational::zero(), split.clone())])
                .expect("left label implies positive split");
            Some(Term::apply(&shape, std::slice::from_ref(l)))
        }
        (None, Some(r)) => {
            let shape = IntervalConfig::from_pairs(&[(split.clone(), Rational::one())])
                .expect("right label implies split below one");
            Some(Term::apply(&shape, std::slice::from_ref(r)))
        }
        (Some(l), Some(r)) => {
            let shape = IntervalConfig::from_pairs(&[
                (Rational::zero(), split.clone()),
                (split.clone(), Rational::one()),
            ])
            .expect("two labels imply an interior split");
            Some(Term::apply(&shape, &[l.clone(), r.clone()]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::IntervalConfig;
    use crate::rational::rat;

    fn gen(name: &str) -> Term {
        Term::generator(Generator::new(name))
    }

    #[test]
    fn unit_slots_are_absorbed() {
        let mu = IntervalConfig::half_split();
        let t = Term::apply(&mu, &[gen("x"), Term::unit()]);
        assert_eq!(
            t.shape(),
            &IntervalConfig::from_pairs(&[(rat(0, 1), rat(1, 2))]).unwrap()
        );
        assert_eq!(t.word(), &[Generator::new("x")]);
    }

    #[test]
    fn nested_applications_flatten() {
        let mu = IntervalConfig::half_split();
        let inner = Term::apply(&mu, &[gen("x"), gen("y")]);
        let t = Term::apply(&mu, &[inner, gen("z")]);
        assert_eq!(
            t.shape(),
            &IntervalConfig::from_pairs(&[
                (rat(0, 1), rat(1, 4)),
                (rat(1, 4), rat(1, 2)),
                (rat(1, 2), rat(1, 1)),
            ])
            .unwrap()
        );
        assert_eq!(t.word().len(), 3);
    }

    #[test]
    fn identity_shape_is_neutral() {
        let t = Term::apply(&IntervalConfig::half_split(), &[gen("x"), gen("y")]);
        let wrapped = Term::apply(&IntervalConfig::whole(), std::slice::from_ref(&t));
        assert_eq!(wrapped, t);
    }

    #[test]
    fn empty_shape_gives_unit() {
        let t = Term::apply(&IntervalConfig::empty(), &[]);
        assert!(t.is_unit());
        assert_eq!(t, Term::unit());
    }

    #[test]
    fn json_round_trip() {
        let t = Term::apply(&IntervalConfig::half_split(), &[gen("x"), gen("y")]);
        let s = serde_json::to_string(&t).unwrap();
        let back: Term = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
