//! Acceptance gate: one test per shipped guarantee, exact arithmetic
//! throughout, zero tolerance. Randomized criteria run through the
//! self-check suites at full trial counts on a fixed seed; structural
//! criteria re-derive their expected values here.

use std::path::Path;
use std::sync::OnceLock;

use rand::Rng;

use cubical::braid::{extract_braid, BraidWord};
use cubical::operad::Permutation;
use cubical::path::loops::{assemble_hexagon, assemble_pentagon, associator_path, braiding_path};
use cubical::path::stabilize::stabilize_fill;
use cubical::path::PlPath;
use cubical::rational::{rat, Rational};
use cubical::sample;
use cubical::suite::{run_selfcheck, RunReport};
use cubical::tree::associahedron::{catalan, FaceLattice};
use cubical::tree::coherence::{
    contraction_invariant, full_contraction_is_flat, graft_compatible, standard_point,
};
use cubical::tree::enumerate::enumerate_trees;

const SEED: u64 = 20260814;
const TRIALS: usize = 1000;

fn shared_report() -> &'static RunReport {
    static REPORT: OnceLock<RunReport> = OnceLock::new();
    REPORT.get_or_init(|| run_selfcheck(SEED, TRIALS))
}

fn assert_suite(name: &str) {
    let report = shared_report();
    let suite = report
        .suites
        .iter()
        .find(|s| s.suite == name)
        .unwrap_or_else(|| panic!("no suite named {name}"));
    for check in &suite.checks {
        assert!(
            check.passed,
            "{name}/{} failed: {}",
            check.name,
            check.witness.as_deref().unwrap_or("no witness")
        );
    }
}

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

#[test]
fn a01_operad_laws_hold_on_random_configurations() {
    assert_suite("operad-laws");
}

#[test]
fn a02_interchange_pairing_matches_both_evaluation_orders() {
    assert_suite("interchange-pairing");
}

#[test]
fn a03_envelope_monoid_laws_and_slot_decomposition_hold() {
    assert_suite("envelope-monoid");
}

#[test]
fn a04_normal_forms_retract_and_multiply() {
    assert_suite("envelope-normalization");
}

#[test]
fn a05_deformations_connect_the_two_models() {
    assert_suite("envelope-homotopies");
}

#[test]
fn a06_diagonal_deformation_commutes_with_plugging_and_splits() {
    assert_suite("diagonal-interchange");
}

#[test]
fn a07_length_monoids_embed_compatibly() {
    assert_suite("moore-comparison");
}

#[test]
fn a08_pentagon_loop_closes_and_cones_fill_it() {
    assert_suite("pentagon");
    let loop_ = assemble_pentagon(&associator_path()).expect("pentagon assembles");
    let corners = loop_.corners();
    assert_eq!(corners.len(), 5);
    for i in 0..5 {
        for j in i + 1..5 {
            assert_ne!(corners[i], corners[j], "corners {i} and {j} coincide");
        }
    }
}

#[test]
fn a09_unit_triangle_closes_and_cones_fill_it() {
    assert_suite("unit-triangle");
}

#[test]
fn a10_hexagon_word_cancels_in_the_strand_group() {
    assert_suite("hexagon-braid");
    let loop_ = assemble_hexagon(&braiding_path(), &associator_path()).expect("hexagon assembles");
    let word = extract_braid(&loop_.to_path()).expect("hexagon path is planar");
    assert_eq!(word.letters(), [1, -1, -2, 2]);
    assert!(word.is_trivial());
    let lhs = BraidWord::new(3, vec![1, 2, 1]).unwrap();
    let rhs = BraidWord::new(3, vec![2, 1, 2]).unwrap();
    assert!(lhs.equivalent(&rhs));
}

#[test]
fn a11_double_braiding_is_nontrivial_yet_stabilizes() {
    assert_suite("symmetry-stabilization");
    let sigma = braiding_path();
    let swap = Permutation::transposition(2, 1, 2).unwrap();
    let double = sigma.concat(&sigma.permute(&swap).unwrap()).unwrap();
    let word = extract_braid(&double).expect("double braiding is planar");
    assert_eq!(word.letters(), [1, 1]);
    assert!(!word.is_trivial());
    assert_eq!(word.permutation(), [1, 2]);
    let fill = stabilize_fill(&double).expect("loops stabilize");
    assert_eq!(fill.certify(), Ok(()));
}

#[test]
fn a12_path_checker_agrees_with_dense_sampling() {
    assert_suite("path-validator");

    let probes: Vec<Rational> = (0..=96).map(|k| rat(k, 96)).collect();
    let agree = |line: &PlPath| {
        let violations = line.violations();
        for t in &probes {
            let inside = violations.iter().any(|v| {
                let above = &v.gap_lo < t || (!v.lo_open && &v.gap_lo == t);
                let below = t < &v.gap_hi || (!v.hi_open && t == &v.gap_hi);
                above && below
            });
            let valid = line.config_at(t).is_ok();
            assert_eq!(
                valid, !inside,
                "checker and sampling disagree at t = {t} on {line:?}"
            );
        }
    };

    let mut r = sample::rng(SEED ^ 0xDE5E);
    let mut rejected = 0usize;
    for _ in 0..200 {
        let dim = r.gen_range(1..=2usize);
        let arity = r.gen_range(2..=3usize);
        let from = sample::cube_config(&mut r, dim, arity);
        let to = if r.gen_bool(0.5) {
            // Adversarial: move to a relabelled copy, which usually forces
            // cubes through each other.
            let pi = sample::permutation(&mut r, arity);
            from.permute(&pi).unwrap()
        } else {
            sample::cube_config(&mut r, dim, arity)
        };
        let line = PlPath::line(from, to).expect("same shape");
        if !line.violations().is_empty() {
            rejected += 1;
        }
        agree(&line);
    }
    assert!(rejected > 0, "no adversarial line was rejected");

    // The shipped crossing line is rejected with the frozen gap.
    let raw = std::fs::read_to_string(data("invalid-path.json")).expect("shipped data");
    let bad: PlPath = serde_json::from_str(&raw).expect("shipped data parses");
    let violations = bad.violations();
    assert_eq!(violations.len(), 1);
    let v = &violations[0];
    assert_eq!(v.pair, (1, 2));
    assert_eq!(v.gap_lo, Rational::zero());
    assert_eq!(v.gap_hi, Rational::one());
    assert!(v.lo_open && v.hi_open);
    assert_eq!(v.witness, rat(1, 2));
    agree(&bad);

    // The shipped braiding is accepted and reads off one positive crossing.
    let raw = std::fs::read_to_string(data("sigma.json")).expect("shipped data");
    let sigma: PlPath = serde_json::from_str(&raw).expect("shipped data parses");
    assert_eq!(sigma.validate(), Ok(()));
    assert_eq!(extract_braid(&sigma).unwrap().letters(), [1]);
}

#[test]
fn a13_tree_calculus_evaluates_coherently_and_counts_faces() {
    assert_suite("tree-coherence");
    assert_suite("associahedron");

    // Exhaustive coherence over every small tree with a fixed decoration.
    for arity in 0..=3usize {
        for tree in enumerate_trees(arity, 4) {
            let point = standard_point(&tree);
            assert!(contraction_invariant(&point), "contraction moved {tree:?}");
            assert!(full_contraction_is_flat(&point), "flattening moved {tree:?}");
        }
    }

    // Randomized coherence on larger decorated trees.
    let mut r = sample::rng(SEED ^ 0x7EE5);
    let pools: Vec<Vec<_>> = (0..=3).map(|a| enumerate_trees(a, 6)).collect();
    for _ in 0..500 {
        let arity = r.gen_range(0..=3usize);
        let tree = pools[arity][r.gen_range(0..pools[arity].len())].clone();
        let point = sample::decorate(&mut r, &tree);
        assert!(contraction_invariant(&point));
        if arity >= 1 {
            let scion_arity = r.gen_range(0..=2usize);
            let scion_tree = pools[scion_arity][r.gen_range(0..pools[scion_arity].len())].clone();
            let scion = sample::decorate(&mut r, &scion_tree);
            let index = r.gen_range(1..=arity);
            assert!(graft_compatible(&point, index, &scion).unwrap());
        }
    }

    // Face lattices up to eight leaves: Catalan-many vertices, Euler
    // characteristic of a ball, and total face counts matching the
    // little Schroeder numbers.
    let totals = [1usize, 3, 11, 45, 197, 903, 4279];
    for (offset, &total) in totals.iter().enumerate() {
        let n = offset + 2;
        let lattice = FaceLattice::new(n);
        assert_eq!(lattice.vertex_count() as u128, catalan(n - 1), "vertices at {n}");
        assert_eq!(lattice.euler_characteristic(), 1, "Euler at {n}");
        assert_eq!(lattice.faces().len(), total, "face total at {n}");
    }
}

#[test]
fn a14_reports_are_byte_identical_for_one_seed() {
    let first = serde_json::to_string(&run_selfcheck(7, 60)).expect("serializes");
    let second = serde_json::to_string(&run_selfcheck(7, 60)).expect("serializes");
    assert_eq!(first, second);
    assert!(shared_report().passed);
}
