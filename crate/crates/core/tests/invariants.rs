//! Property tests over wide randomized input, driven through the same
//! samplers the self-check uses. Each property draws a fresh seed so the
//! search space is not limited to what a hand-written strategy covers.

use proptest::prelude::*;

use rand::Rng;

use cubical::braid::{BraidWord, FreeWord};
use cubical::envelope::{homotopy_coords, homotopy_term, Envelope};
use cubical::moore::ComparisonElement;
use cubical::operad::Permutation;
use cubical::path::PlPath;
use cubical::rational::Rational;
use cubical::sample;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rationals_round_trip_through_text(numer in -10_000i64..=10_000, denom in 1i64..=10_000) {
        let value = Rational::new(numer, denom);
        let back: Rational = value.to_string().parse().unwrap();
        prop_assert_eq!(back, value);
    }

    #[test]
    fn envelope_multiplication_is_associative(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let (a, b, c) = (sample::envelope(&mut r), sample::envelope(&mut r), sample::envelope(&mut r));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn term_round_trips_land_at_the_collapsed_deformation(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let term = sample::term(&mut r);
        let replayed = Envelope::from_term(&term).to_term();
        prop_assert_eq!(replayed, homotopy_term(&Rational::zero(), &term).unwrap());
    }

    #[test]
    fn collapsing_an_envelope_retracts_onto_the_standard_slice(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let envelope = sample::envelope(&mut r);
        let back = Envelope::from_term(&envelope.to_term());
        prop_assert_eq!(back.x(), &Rational::new(1, 2));
        prop_assert_eq!(back.y(), &Rational::one());
        prop_assert_eq!(back.label().is_some(), envelope.label().is_some());
        let retracted = homotopy_coords(&Rational::zero(), &envelope).unwrap();
        prop_assert_eq!(retracted.label(), envelope.label());
        prop_assert_eq!(homotopy_coords(&Rational::one(), &envelope).unwrap(), envelope);
    }

    #[test]
    fn unit_envelopes_are_neutral(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let envelope = sample::envelope(&mut r);
        prop_assert_eq!(envelope.multiply(&Envelope::unit()), envelope.clone());
        prop_assert_eq!(Envelope::unit().multiply(&envelope), envelope);
    }

    #[test]
    fn length_monoid_embeddings_are_multiplicative(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let (a, b) = (sample::moore(&mut r), sample::moore(&mut r));
        let separately = ComparisonElement::from_moore(&a).multiply(&ComparisonElement::from_moore(&b));
        prop_assert_eq!(separately, ComparisonElement::from_moore(&a.multiply(&b)));

        let (x, y) = (sample::envelope(&mut r), sample::envelope(&mut r));
        let separately = ComparisonElement::from_envelope(&x).multiply(&ComparisonElement::from_envelope(&y));
        prop_assert_eq!(separately, ComparisonElement::from_envelope(&x.multiply(&y)));
    }

    #[test]
    fn free_words_cancel_against_their_inverses(letters in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..12)) {
        let word = FreeWord::from_letters(letters);
        prop_assert!(word.multiply(&word.inverse()).letters().is_empty());
        prop_assert!(word.inverse().multiply(&word).letters().is_empty());
    }

    #[test]
    fn braid_words_cancel_against_their_inverses(letters in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..10)) {
        let word = BraidWord::new(4, letters).unwrap();
        let cancelled = word.concat(&word.inverse()).unwrap();
        prop_assert!(cancelled.is_trivial());
        prop_assert_eq!(cancelled.permutation(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn permuting_and_unpermuting_restores_a_configuration(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let arity = r.gen_range(1..=5usize);
        let dim = r.gen_range(1..=3usize);
        let config = sample::cube_config(&mut r, dim, arity);
        let perm = sample::permutation(&mut r, arity);
        let back = config.permute(&perm).unwrap().permute(&perm.inverse()).unwrap();
        prop_assert_eq!(back, config);
    }

    #[test]
    fn reversing_a_path_twice_is_the_identity(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let arity = r.gen_range(1..=3usize);
        let from = sample::cube_config(&mut r, 2, arity);
        let to = sample::cube_config(&mut r, 2, arity);
        let line = PlPath::line(from, to).unwrap();
        prop_assert_eq!(line.reverse().reverse(), line);
    }

    #[test]
    fn permutation_inverses_compose_to_the_identity(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let degree = r.gen_range(1..=6usize);
        let perm = sample::permutation(&mut r, degree);
        prop_assert_eq!(perm.after(&perm.inverse()).unwrap(), Permutation::identity(degree));
        prop_assert_eq!(perm.inverse().after(&perm).unwrap(), Permutation::identity(degree));
    }

    #[test]
    fn decorated_trees_evaluate_the_same_after_contraction(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let arity = r.gen_range(0..=3usize);
        let pool = cubical::tree::enumerate::enumerate_trees(arity, 5);
        let tree = pool[r.gen_range(0..pool.len())].clone();
        let point = sample::decorate(&mut r, &tree);
        prop_assert!(cubical::tree::coherence::contraction_invariant(&point));
    }
}
