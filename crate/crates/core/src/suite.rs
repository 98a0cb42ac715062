//! Self-check suites: every law the crate exposes, re-checked on seeded
//! random data with exact arithmetic and zero tolerance.
//!
//! A run is reproducible from `(seed, trials)` alone and the JSON report is
//! byte-identical across runs with the same parameters; wall-clock timings
//! are kept out of the serialized form for that reason.

use std::fmt::Write as _;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::braid::{extract_braid, BraidWord};
use crate::envelope::{
    diagonal, diagonal_homotopy, diagonal_retract, factor_last, homotopy_coords, homotopy_term,
    normalize_action, plug_point, recompose, slot_two_decomposition, Envelope,
};
use crate::moore::{ComparisonElement, MooreElement};
use crate::operad::{cartesian_pairing, lex_to_colex, CubeConfig, Permutation};
use crate::path::loops::{
    assemble_hexagon, assemble_pentagon, assemble_unit_triangle, associator_path, braiding_path,
    cone_fill, two_slot_multiplication,
};
use crate::path::stabilize::stabilize_fill;
use crate::path::PlPath;
use crate::rational::{rat, Rational};
use crate::sample;
use crate::term::Term;
use crate::tree::associahedron::{catalan, FaceLattice};
use crate::tree::coherence::{contraction_invariant, full_contraction_is_flat, graft_compatible};
use crate::tree::enumerate::enumerate_trees;
use crate::tree::{PlanarTree, TreePoint};

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of one suite; the elapsed time is for human output only and is
/// not serialized.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

/// Outcome of a full run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

impl RunReport {
    /// One line per check, a summary per suite, and a closing total.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut passed = 0usize;
        let mut total = 0usize;
        for suite in &self.suites {
            for check in &suite.checks {
                total += 1;
                if check.passed {
                    passed += 1;
                    let _ = writeln!(out, "[pass] {}/{}", suite.suite, check.name);
                } else {
                    let witness = check.witness.as_deref().unwrap_or("no witness");
                    let _ = writeln!(out, "[FAIL] {}/{}: {}", suite.suite, check.name, witness);
                }
            }
            let ok = suite.checks.iter().filter(|c| c.passed).count();
            let _ = writeln!(
                out,
                "suite {}: {}/{} checks ({} ms)",
                suite.suite,
                ok,
                suite.checks.len(),
                suite.elapsed_ms
            );
        }
        let _ = writeln!(
            out,
            "selfcheck: {}/{} checks passed (seed {}, trials {}) -> {}",
            passed,
            total,
            self.seed,
            self.trials,
            if self.passed { "pass" } else { "FAIL" }
        );
        out
    }
}

struct Suite {
    name: String,
    checks: Vec<CheckResult>,
    started: Instant,
}

impl Suite {
    fn new(name: &str) -> Self {
        Suite {
            name: name.to_string(),
            checks: Vec::new(),
            started: Instant::now(),
        }
    }

    fn run(&mut self, check: &str, body: impl FnOnce() -> Result<(), String>) {
        let outcome = body();
        self.checks.push(CheckResult {
            name: check.to_string(),
            passed: outcome.is_ok(),
            witness: outcome.err(),
        });
    }

    fn finish(self) -> SuiteReport {
        let passed = self.checks.iter().all(|c| c.passed);
        SuiteReport {
            suite: self.name,
            checks: self.checks,
            passed,
            elapsed_ms: self.started.elapsed().as_millis(),
        }
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn op<T, E: std::fmt::Display>(result: Result<T, E>) -> Result<T, String> {
    result.map_err(|e| e.to_string())
}

fn salted(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

const SAMPLE_TIMES: [(i64, i64); 5] = [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)];

/// Runs every suite. `trials` scales the randomized checks; structural
/// checks (the coherence loops, the lattices) always run once.
pub fn run_selfcheck(seed: u64, trials: usize) -> RunReport {
    let trials = trials.max(1);
    let suites = vec![
        operad_laws(seed, trials),
        interchange_pairing(seed, trials),
        envelope_monoid(seed, trials),
        envelope_normalization(seed, trials),
        envelope_homotopies(seed, trials),
        diagonal_interchange(seed, trials),
        moore_comparison(seed, trials),
        pentagon_suite(),
        unit_triangle_suite(),
        hexagon_braid_suite(),
        symmetry_stabilization_suite(),
        path_validator(seed, trials),
        tree_coherence(seed, trials),
        associahedron_suite(),
        determinism_subset(seed, trials),
    ];
    let passed = suites.iter().all(|s| s.passed);
    RunReport {
        seed,
        trials,
        suites,
        passed,
    }
}

fn operad_laws(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("operad-laws");
    let n = trials;

    s.run("unit-laws", || {
        let mut r = sample::rng(salted(seed, 0x11));
        for _ in 0..n {
            let dim = r.gen_range(1..=3usize);
            let arity = r.gen_range(0..=5usize);
            let c = sample::cube_config(&mut r, dim, arity);
            let ids = vec![CubeConfig::identity(dim); arity];
            let right = op(c.compose(&ids))?;
            ensure(right == c, || format!("right unit failed on {c:?}"))?;
            let left = op(CubeConfig::identity(dim).compose_at(1, &c))?;
            ensure(left == c, || format!("left unit failed on {c:?}"))?;
        }
        Ok(())
    });

    s.run("associativity", || {
        let mut r = sample::rng(salted(seed, 0x12));
        for _ in 0..n {
            let dim = r.gen_range(1..=3usize);
            let outer_arity = r.gen_range(1..=3usize);
            let a = sample::cube_config(&mut r, dim, outer_arity);
            let mids: Vec<CubeConfig> = (0..a.arity())
                .map(|_| {
                    let arity = r.gen_range(0..=3usize);
                    sample::cube_config(&mut r, dim, arity)
                })
                .collect();
            let inner_groups: Vec<Vec<CubeConfig>> = mids
                .iter()
                .map(|m| {
                    (0..m.arity())
                        .map(|_| {
                            let arity = r.gen_range(0..=2usize);
                            sample::cube_config(&mut r, dim, arity)
                        })
                        .collect()
                })
                .collect();
            let flat: Vec<CubeConfig> = inner_groups.iter().flatten().cloned().collect();
            let lhs = op(op(a.compose(&mids))?.compose(&flat))?;
            let folded: Vec<CubeConfig> = mids
                .iter()
                .zip(&inner_groups)
                .map(|(m, g)| op(m.compose(g)))
                .collect::<Result<_, _>>()?;
            let rhs = op(a.compose(&folded))?;
            ensure(lhs == rhs, || {
                format!("associativity failed on outer {a:?}")
            })?;
        }
        Ok(())
    });

    s.run("slotwise-matches-simultaneous", || {
        let mut r = sample::rng(salted(seed, 0x13));
        for _ in 0..n {
            let dim = r.gen_range(1..=3usize);
            let outer_arity = r.gen_range(1..=4usize);
            let a = sample::cube_config(&mut r, dim, outer_arity);
            let i = r.gen_range(1..=a.arity());
            let inner_arity = r.gen_range(0..=3usize);
            let inner = sample::cube_config(&mut r, dim, inner_arity);
            let direct = op(a.compose_at(i, &inner))?;
            let mut parts = vec![CubeConfig::identity(dim); a.arity()];
            parts[i - 1] = inner;
            let simultaneous = op(a.compose(&parts))?;
            ensure(direct == simultaneous, || {
                format!("slot {i} substitution disagreed on {a:?}")
            })?;
        }
        Ok(())
    });

    s.run("relabelling-group-action", || {
        let mut r = sample::rng(salted(seed, 0x14));
        for _ in 0..n {
            let dim = r.gen_range(1..=3usize);
            let arity = r.gen_range(0..=5usize);
            let c = sample::cube_config(&mut r, dim, arity);
            let pi = sample::permutation(&mut r, arity);
            let rho = sample::permutation(&mut r, arity);
            let two_steps = op(op(c.permute(&pi))?.permute(&rho))?;
            let composed = op(Permutation::new(
                (1..=arity).map(|i| rho.image(pi.image(i))).collect(),
            ))?;
            let one_step = op(c.permute(&composed))?;
            ensure(two_steps == one_step, || {
                format!("relabelling action failed on {c:?}")
            })?;
            let back = op(op(c.permute(&pi))?.permute(&pi.inverse()))?;
            ensure(back == c, || format!("inverse relabelling failed on {c:?}"))?;
        }
        Ok(())
    });

    s.run("relabelling-equivariance", || {
        let mut r = sample::rng(salted(seed, 0x15));
        for _ in 0..n {
            let dim = r.gen_range(1..=2usize);
            let outer_arity = r.gen_range(1..=3usize);
            let a = sample::cube_config(&mut r, dim, outer_arity);
            let k = a.arity();
            let pi = sample::permutation(&mut r, k);
            let parts: Vec<CubeConfig> = (0..k)
                .map(|_| {
                    let arity = r.gen_range(0..=2usize);
                    sample::cube_config(&mut r, dim, arity)
                })
                .collect();
            let rhs = op(a.compose(&parts))?;
            let pi_inv = pi.inverse();
            let rearranged: Vec<CubeConfig> =
                (1..=k).map(|j| parts[pi_inv.image(j) - 1].clone()).collect();
            let lhs = op(op(a.permute(&pi))?.compose(&rearranged))?;
            // Block sizes in the relabelled order: position j holds the
            // block of original slot pi^{-1}(j).
            let lhs_block_sizes: Vec<usize> =
                (1..=k).map(|j| parts[pi_inv.image(j) - 1].arity()).collect();
            let mut offsets = vec![0usize; k + 1];
            for j in 1..=k {
                offsets[j] = offsets[j - 1] + lhs_block_sizes[j - 1];
            }
            let mut images = Vec::new();
            for i in 1..=k {
                let block_pos = pi.image(i);
                for o in 1..=parts[i - 1].arity() {
                    images.push(offsets[block_pos - 1] + o);
                }
            }
            let beta = op(Permutation::new(images))?;
            let relabelled = op(rhs.permute(&beta))?;
            ensure(relabelled == lhs, || {
                format!("block equivariance failed on {a:?} with {pi:?}")
            })?;
        }
        Ok(())
    });

    s.run("ordered-families-embed", || {
        let mut r = sample::rng(salted(seed, 0x16));
        for _ in 0..n {
            let arity = r.gen_range(0..=5usize);
            let f = sample::interval_family(&mut r, arity);
            let round = op(crate::operad::IntervalConfig::try_from_config(
                &f.to_config(),
            ))?;
            ensure(round == f, || format!("embedding round trip failed on {f:?}"))?;
            if arity >= 1 {
                let inner_arity = r.gen_range(0..=3usize);
                let g = sample::interval_family(&mut r, inner_arity);
                let i = r.gen_range(1..=arity);
                let composed = op(f.compose_at(i, &g))?;
                let in_cubes = op(f.to_config().compose_at(i, &g.to_config()))?;
                ensure(composed.to_config() == in_cubes, || {
                    format!("family composition disagreed with cube composition on {f:?}")
                })?;
            }
        }
        Ok(())
    });

    s.finish()
}

fn interchange_pairing(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("interchange-pairing");
    let n = trials;

    s.run("pairing-is-lexicographic", || {
        let mut r = sample::rng(salted(seed, 0x21));
        for _ in 0..n {
            let l = r.gen_range(1..=3usize);
            let m = r.gen_range(1..=3usize);
            let dim = r.gen_range(1..=2usize);
            let a = sample::interval_family(&mut r, l);
            let c = sample::cube_config(&mut r, dim, m);
            let p = op(cartesian_pairing(&a, &c))?;
            for i in 1..=l {
                for j in 1..=m {
                    let cube = p.cube((i - 1) * m + j);
                    ensure(cube.axis(0) == a.interval(i), || {
                        format!("pairing label ({i},{j}) has the wrong first axis")
                    })?;
                    ensure(cube.axes()[1..] == *c.cube(j).axes(), || {
                        format!("pairing label ({i},{j}) has the wrong remaining axes")
                    })?;
                }
            }
        }
        Ok(())
    });

    s.run("pairing-evaluates-row-first", || {
        let mut r = sample::rng(salted(seed, 0x22));
        for _ in 0..n {
            let l = r.gen_range(1..=3usize);
            let m = r.gen_range(1..=3usize);
            let dim = r.gen_range(1..=2usize);
            let a = sample::interval_family(&mut r, l);
            let c = sample::cube_config(&mut r, dim, m);
            let p = op(cartesian_pairing(&a, &c))?;
            let lifted_a = op(a.to_config().include_dim(dim + 1))?;
            let lifted_c = c.prepend_full_axis();
            let row_first = op(lifted_a.compose(&vec![lifted_c.clone(); l]))?;
            ensure(p == row_first, || {
                format!("row-first evaluation disagreed for l={l}, m={m}")
            })?;
        }
        Ok(())
    });

    s.run("column-first-differs-by-relabelling", || {
        let mut r = sample::rng(salted(seed, 0x23));
        for _ in 0..n {
            let l = r.gen_range(1..=3usize);
            let m = r.gen_range(1..=3usize);
            let dim = r.gen_range(1..=2usize);
            let a = sample::interval_family(&mut r, l);
            let c = sample::cube_config(&mut r, dim, m);
            let p = op(cartesian_pairing(&a, &c))?;
            let lifted_a = op(a.to_config().include_dim(dim + 1))?;
            let lifted_c = c.prepend_full_axis();
            let column_first = op(lifted_c.compose(&vec![lifted_a.clone(); m]))?;
            let relabelled = op(p.permute(&lex_to_colex(l, m)))?;
            ensure(relabelled == column_first, || {
                format!("column-first relabelling disagreed for l={l}, m={m}")
            })?;
        }
        Ok(())
    });

    s.finish()
}

fn envelope_monoid(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("envelope-monoid");
    let n = trials;

    s.run("associativity", || {
        let mut r = sample::rng(salted(seed, 0x31));
        for _ in 0..n {
            let a = sample::envelope(&mut r);
            let b = sample::envelope(&mut r);
            let c = sample::envelope(&mut r);
            let left = a.multiply(&b).multiply(&c);
            let right = a.multiply(&b.multiply(&c));
            ensure(left == right, || {
                format!("associativity failed on {a:?}, {b:?}, {c:?}")
            })?;
        }
        Ok(())
    });

    s.run("unit-laws", || {
        let mut r = sample::rng(salted(seed, 0x32));
        let unit = Envelope::unit();
        for _ in 0..n {
            let a = sample::envelope(&mut r);
            ensure(a.multiply(&unit) == a && unit.multiply(&a) == a, || {
                format!("unit law failed on {a:?}")
            })?;
        }
        Ok(())
    });

    s.run("coordinate-composition", || {
        let mut r = sample::rng(salted(seed, 0x33));
        for _ in 0..n {
            let a = sample::envelope(&mut r);
            let b = sample::envelope(&mut r);
            let prod = a.multiply(&b);
            let len = a.y() - a.x();
            let want_x = a.x() + &len * b.x();
            let want_y = a.x() + &len * b.y();
            ensure(prod.x() == &want_x && prod.y() == &want_y, || {
                format!("coordinates of {a:?} * {b:?} were {prod:?}")
            })?;
        }
        Ok(())
    });

    s.run("labels-stay-anchored", || {
        let mut r = sample::rng(salted(seed, 0x34));
        for _ in 0..n {
            let a = sample::envelope(&mut r);
            let b = sample::envelope(&mut r);
            let prod = a.multiply(&b);
            if prod.label().is_some() {
                ensure(prod.x().is_positive(), || {
                    format!("labelled product with zero anchor: {prod:?}")
                })?;
                ensure(!prod.label().expect("checked").is_unit(), || {
                    format!("unit label survived in {prod:?}")
                })?;
            }
        }
        Ok(())
    });

    s.run("slot-two-decomposition", || {
        let mut r = sample::rng(salted(seed, 0x35));
        for _ in 0..n {
            let outer = sample::anchored_pair(&mut r);
            let inner = sample::anchored_pair(&mut r);
            let (direct, factored) = op(slot_two_decomposition(&outer, &inner))?;
            ensure(direct == factored, || {
                format!("decomposition disagreed on {outer:?} with {inner:?}")
            })?;
        }
        Ok(())
    });

    s.finish()
}

fn envelope_normalization(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("envelope-normalization");
    let n = trials;

    s.run("factor-recompose-round-trip", || {
        let mut r = sample::rng(salted(seed, 0x41));
        for _ in 0..n {
            let arity = r.gen_range(1..=5usize);
            let f = sample::interval_family(&mut r, arity);
            let (last, rest) = op(factor_last(&f))?;
            let back = op(recompose(&last, &rest))?;
            ensure(back == f, || format!("round trip failed on {f:?}"))?;
        }
        Ok(())
    });

    s.run("normal-form-multiplicativity", || {
        let mut r = sample::rng(salted(seed, 0x42));
        for _ in 0..n {
            let a = r.gen_range(1..=3usize);
            let b = r.gen_range(1..=3usize);
            let f = sample::interval_family(&mut r, a);
            let g = sample::interval_family(&mut r, b);
            let w: Vec<Term> = (0..a - 1).map(|_| sample::term(&mut r)).collect();
            let v: Vec<Term> = (0..b - 1).map(|_| sample::term(&mut r)).collect();
            let composite = op(f.compose_at(a, &g))?;
            let mut word = w.clone();
            word.extend(v.clone());
            let whole = op(normalize_action(&composite, &word))?;
            let product =
                op(normalize_action(&f, &w))?.multiply(&op(normalize_action(&g, &v))?);
            ensure(whole == product, || {
                format!("normal form was not multiplicative on {f:?} into {g:?}")
            })?;
        }
        Ok(())
    });

    s.finish()
}

fn envelope_homotopies(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("envelope-homotopies");
    let n = trials;

    s.run("coordinate-deformation-endpoints", || {
        let mut r = sample::rng(salted(seed, 0x51));
        for _ in 0..n {
            let e = sample::envelope(&mut r);
            let at_one = op(homotopy_coords(&Rational::one(), &e))?;
            ensure(at_one == e, || format!("time 1 moved {e:?}"))?;
            let at_zero = op(homotopy_coords(&Rational::zero(), &e))?;
            ensure(
                at_zero.x() == &rat(1, 2)
                    && at_zero.y() == &Rational::one()
                    && at_zero.label() == e.label(),
                || format!("time 0 sent {e:?} to {at_zero:?}"),
            )?;
        }
        Ok(())
    });

    s.run("coordinate-deformation-is-affine", || {
        let mut r = sample::rng(salted(seed, 0x52));
        let half = rat(1, 2);
        for _ in 0..n {
            let e = sample::envelope(&mut r);
            for (p, q) in SAMPLE_TIMES {
                let t = rat(p, q);
                let moved = op(homotopy_coords(&t, &e))?;
                let dx = moved.x() - &half;
                let dy = Rational::one() - moved.y();
                ensure(
                    dx == &t * (e.x() - &half) && dy == &t * (Rational::one() - e.y()),
                    || format!("time {t} was not affine on {e:?}"),
                )?;
            }
        }
        Ok(())
    });

    s.run("term-deformation-endpoints", || {
        let mut r = sample::rng(salted(seed, 0x53));
        for _ in 0..n {
            let term = sample::term(&mut r);
            let at_one = op(homotopy_term(&Rational::one(), &term))?;
            ensure(at_one == term, || format!("time 1 moved {term:?}"))?;
            let at_zero = op(homotopy_term(&Rational::zero(), &term))?;
            let round = Envelope::from_term(&term).to_term();
            ensure(at_zero == round, || {
                format!("time 0 disagreed with the round trip on {term:?}")
            })?;
        }
        Ok(())
    });

    s.run("round-trips", || {
        let mut r = sample::rng(salted(seed, 0x54));
        for _ in 0..n {
            let e = sample::envelope(&mut r);
            let back = Envelope::from_term(&e.to_term());
            ensure(back.x() == &rat(1, 2) && back.y() == &Rational::one(), || {
                format!("term image of {e:?} landed at {back:?}")
            })?;
            let unit_round = Envelope::from_term(&Envelope::unit().to_term());
            ensure(unit_round.label().is_none(), || {
                "unit picked up a label".to_string()
            })?;
        }
        Ok(())
    });

    s.finish()
}

fn diagonal_interchange(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("diagonal-interchange");
    let n = trials;

    s.run("retract-fixes-the-diagonal", || {
        let mut r = sample::rng(salted(seed, 0x61));
        for _ in 0..n {
            let p = sample::coord_point(&mut r);
            let m = r.gen_range(1..=4usize);
            let back = op(diagonal_retract(&diagonal(&p, m)))?;
            ensure(back == p, || format!("retract moved the diagonal at {p:?}"))?;
        }
        Ok(())
    });

    s.run("deformation-endpoints", || {
        let mut r = sample::rng(salted(seed, 0x62));
        for _ in 0..n {
            let m = r.gen_range(1..=4usize);
            let points: Vec<_> = (0..m).map(|_| sample::coord_point(&mut r)).collect();
            let at_one = op(diagonal_homotopy(&Rational::one(), &points))?;
            ensure(at_one == points, || format!("time 1 moved {points:?}"))?;
            let at_zero = op(diagonal_homotopy(&Rational::zero(), &points))?;
            let retract = op(diagonal_retract(&points))?;
            for (slot, q) in at_zero.iter().enumerate() {
                ensure(
                    q.x() == retract.x() && q.y() == retract.y(),
                    || format!("time 0 slot {slot} was {q:?}, not the retract"),
                )?;
                ensure(q.anchored() == points[slot].anchored(), || {
                    format!("slot {slot} lost its flag")
                })?;
            }
        }
        Ok(())
    });

    s.run("deformation-commutes-with-plugging", || {
        let mut r = sample::rng(salted(seed, 0x63));
        for _ in 0..n {
            let pair = sample::anchored_pair(&mut r);
            let m = r.gen_range(1..=4usize);
            let points: Vec<_> = (0..m).map(|_| sample::coord_point(&mut r)).collect();
            let plugged: Vec<_> = points.iter().map(|p| plug_point(&pair, p)).collect();
            for (p, q) in SAMPLE_TIMES {
                let t = rat(p, q);
                let move_then_plug: Vec<_> = op(diagonal_homotopy(&t, &points))?
                    .iter()
                    .map(|pt| plug_point(&pair, pt))
                    .collect();
                let plug_then_move = op(diagonal_homotopy(&t, &plugged))?;
                ensure(move_then_plug == plug_then_move, || {
                    format!("plugging did not commute at time {t} on {points:?}")
                })?;
            }
        }
        Ok(())
    });

    s.run("label-splits-follow-the-deformation", || {
        let mut r = sample::rng(salted(seed, 0x64));
        for _ in 0..n {
            let pair = sample::anchored_pair(&mut r);
            let m = r.gen_range(1..=4usize);
            let points: Vec<_> = (0..m).map(|_| sample::coord_point(&mut r)).collect();
            let plugged: Vec<_> = points.iter().map(|p| plug_point(&pair, p)).collect();
            for (p, q) in SAMPLE_TIMES {
                let t = rat(p, q);
                let moved = op(diagonal_homotopy(&t, &points))?;
                let moved_plugged = op(diagonal_homotopy(&t, &plugged))?;
                for i in 0..m {
                    let split = pair.label_split(&moved[i].interval());
                    let want = pair.split() / moved_plugged[i].x();
                    ensure(split == want, || {
                        format!("label split at time {t}, slot {i} was {split}, wanted {want}")
                    })?;
                }
            }
        }
        Ok(())
    });

    s.finish()
}

fn moore_comparison(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("moore-comparison");
    let n = trials;

    s.run("moore-monoid-laws", || {
        let mut r = sample::rng(salted(seed, 0x71));
        let unit = MooreElement::unit();
        for _ in 0..n {
            let a = sample::moore(&mut r);
            let b = sample::moore(&mut r);
            let c = sample::moore(&mut r);
            ensure(
                a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c)),
                || format!("associativity failed on {a:?}, {b:?}, {c:?}"),
            )?;
            ensure(a.multiply(&unit) == a && unit.multiply(&a) == a, || {
                format!("unit law failed on {a:?}")
            })?;
        }
        Ok(())
    });

    s.run("comparison-monoid-laws", || {
        let mut r = sample::rng(salted(seed, 0x72));
        let unit = ComparisonElement::unit();
        for _ in 0..n {
            let a = sample::comparison(&mut r);
            let b = sample::comparison(&mut r);
            let c = sample::comparison(&mut r);
            ensure(
                a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c)),
                || format!("associativity failed on {a:?}, {b:?}, {c:?}"),
            )?;
            ensure(a.multiply(&unit) == a && unit.multiply(&a) == a, || {
                format!("unit law failed on {a:?}")
            })?;
        }
        Ok(())
    });

    s.run("receivings-are-homomorphisms", || {
        let mut r = sample::rng(salted(seed, 0x73));
        for _ in 0..n {
            let a = sample::moore(&mut r);
            let b = sample::moore(&mut r);
            let lhs = ComparisonElement::from_moore(&a.multiply(&b));
            let rhs =
                ComparisonElement::from_moore(&a).multiply(&ComparisonElement::from_moore(&b));
            ensure(lhs == rhs, || {
                format!("length embedding broke on {a:?} * {b:?}")
            })?;
            let e = sample::envelope(&mut r);
            let f = sample::envelope(&mut r);
            let lhs = ComparisonElement::from_envelope(&e.multiply(&f));
            let rhs = ComparisonElement::from_envelope(&e)
                .multiply(&ComparisonElement::from_envelope(&f));
            ensure(lhs == rhs, || {
                format!("envelope embedding broke on {e:?} * {f:?}")
            })?;
        }
        Ok(())
    });

    s.run("units-map-to-units", || {
        let lhs = ComparisonElement::from_moore(&MooreElement::unit());
        let rhs = ComparisonElement::from_envelope(&Envelope::unit());
        ensure(
            lhs == ComparisonElement::unit() && rhs == ComparisonElement::unit(),
            || "a unit failed to map to the unit".to_string(),
        )
    });

    s.finish()
}

fn pentagon_suite() -> SuiteReport {
    let mut s = Suite::new("pentagon");
    let assembled = || assemble_pentagon(&associator_path());

    s.run("assembles-and-validates", || {
        let loop_ = op(assembled())?;
        op(loop_.validate())?;
        ensure(loop_.edges().len() == 5, || {
            format!("expected 5 edges, found {}", loop_.edges().len())
        })?;
        op(loop_.to_path().validate())
    });

    s.run("corners-are-the-five-bracketings", || {
        let loop_ = op(assembled())?;
        let corners = loop_.corners();
        ensure(corners.len() == 5, || {
            format!("expected 5 corners, found {}", corners.len())
        })?;
        for i in 0..corners.len() {
            for j in i + 1..corners.len() {
                ensure(corners[i] != corners[j], || {
                    format!("corners {i} and {j} coincide")
                })?;
            }
        }
        let mu = two_slot_multiplication(1);
        let alpha = associator_path();
        let first = op(mu.compose_at(1, alpha.start()))?;
        ensure(corners[0] == &first, || {
            "starting corner is not the fully left-bracketed product".to_string()
        })
    });

    s.run("cone-fills", || {
        let loop_ = op(assembled())?;
        let fill = op(cone_fill(&loop_))?;
        op(fill.certify())?;
        ensure(fill.spokes().len() == 5, || {
            format!("expected 5 spokes, found {}", fill.spokes().len())
        })
    });

    s.finish()
}

fn unit_triangle_suite() -> SuiteReport {
    let mut s = Suite::new("unit-triangle");
    let assembled = || assemble_unit_triangle(&associator_path());

    s.run("assembles-and-validates", || {
        let loop_ = op(assembled())?;
        op(loop_.validate())?;
        ensure(loop_.edges().len() == 3, || {
            format!("expected 3 edges, found {}", loop_.edges().len())
        })?;
        op(loop_.to_path().validate())
    });

    s.run("corners-are-the-unit-insertions", || {
        let loop_ = op(assembled())?;
        let corners = loop_.corners();
        ensure(corners.len() == 3, || {
            format!("expected 3 corners, found {}", corners.len())
        })?;
        let mu = two_slot_multiplication(1);
        ensure(corners[2] == &mu, || {
            "final corner is not the bare multiplication".to_string()
        })
    });

    s.run("cone-fills", || {
        let loop_ = op(assembled())?;
        let fill = op(cone_fill(&loop_))?;
        op(fill.certify())
    });

    s.finish()
}

fn hexagon_braid_suite() -> SuiteReport {
    let mut s = Suite::new("hexagon-braid");
    let assembled = || assemble_hexagon(&braiding_path(), &associator_path());

    s.run("assembles-and-validates", || {
        let loop_ = op(assembled())?;
        op(loop_.validate())?;
        ensure(loop_.edges().len() == 6, || {
            format!("expected 6 edges, found {}", loop_.edges().len())
        })?;
        let path = loop_.to_path();
        op(path.validate())?;
        ensure(path.is_closed(), || "hexagon path is not closed".to_string())
    });

    s.run("reads-off-a-trivial-braid", || {
        let loop_ = op(assembled())?;
        let word = op(extract_braid(&loop_.to_path()))?;
        ensure(word.letters() == [1, -1, -2, 2], || {
            format!("extracted letters {:?}", word.letters())
        })?;
        ensure(word.free_reduction().letters().is_empty(), || {
            "hexagon word did not reduce freely".to_string()
        })?;
        ensure(word.is_trivial(), || {
            "hexagon word is not the trivial braid".to_string()
        })
    });

    s.run("braid-relations-hold", || {
        let lhs = op(BraidWord::new(3, vec![1, 2, 1]))?;
        let rhs = op(BraidWord::new(3, vec![2, 1, 2]))?;
        ensure(lhs.equivalent(&rhs), || {
            "the braid relation failed in the strand group".to_string()
        })?;
        let ab = op(BraidWord::new(3, vec![1, 2]))?;
        let ba = op(BraidWord::new(3, vec![2, 1]))?;
        ensure(!ab.equivalent(&ba), || {
            "adjacent generators wrongly commuted".to_string()
        })?;
        let distant = op(BraidWord::new(4, vec![1, 3, -1, -3]))?;
        ensure(distant.is_trivial(), || {
            "distant generators failed to commute".to_string()
        })
    });

    s.finish()
}

fn symmetry_stabilization_suite() -> SuiteReport {
    let mut s = Suite::new("symmetry-stabilization");
    let double = || -> Result<PlPath, String> {
        let sigma = braiding_path();
        let swap = op(Permutation::transposition(2, 1, 2))?;
        let swapped = op(sigma.permute(&swap))?;
        op(sigma.concat(&swapped))
    };

    s.run("double-braiding-is-a-closed-loop", || {
        let loop_path = double()?;
        ensure(loop_path.is_closed(), || "loop is not closed".to_string())?;
        ensure(loop_path.start() == &two_slot_multiplication(2), || {
            "loop does not start at the planar multiplication".to_string()
        })?;
        op(loop_path.validate())
    });

    s.run("word-is-the-squared-generator", || {
        let word = op(extract_braid(&double()?))?;
        ensure(word.letters() == [1, 1], || {
            format!("extracted letters {:?}", word.letters())
        })?;
        ensure(!word.is_trivial(), || {
            "the squared generator claimed to be trivial".to_string()
        })?;
        ensure(word.permutation() == [1, 2], || {
            format!("permutation was {:?}", word.permutation())
        })
    });

    s.run("one-extra-dimension-fills-the-loop", || {
        let fill = op(stabilize_fill(&double()?))?;
        op(fill.certify())?;
        ensure(fill.lifted().dim() == 3, || {
            format!("lifted into dimension {}", fill.lifted().dim())
        })?;
        ensure(fill.segment_count() == 32, || {
            format!("mesh has {} segments", fill.segment_count())
        })
    });

    s.run("hexagon-loop-also-fills", || {
        let loop_ = op(assemble_hexagon(&braiding_path(), &associator_path()))?;
        let fill = op(stabilize_fill(&loop_.to_path()))?;
        op(fill.certify())
    });

    s.finish()
}

fn path_validator(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("path-validator");
    let n = trials.div_euclid(5).max(20);

    s.run("crossing-line-is-rejected-with-a-gap", || {
        let from = two_slot_multiplication(1);
        let swap = op(Permutation::transposition(2, 1, 2))?;
        let to = op(from.permute(&swap))?;
        let line = op(PlPath::line(from, to))?;
        let violations = line.violations();
        ensure(violations.len() == 1, || {
            format!("expected one violation, found {}", violations.len())
        })?;
        let v = &violations[0];
        ensure(
            v.pair == (1, 2)
                && v.gap_lo == Rational::zero()
                && v.gap_hi == Rational::one()
                && v.lo_open
                && v.hi_open
                && v.witness == rat(1, 2),
            || format!("violation was {v:?}"),
        )?;
        ensure(line.config_at(&v.witness).is_err(), || {
            "witness time unexpectedly produced a configuration".to_string()
        })
    });

    s.run("straight-lines-match-pointwise-sampling", || {
        let mut r = sample::rng(salted(seed, 0x81));
        let probes: Vec<Rational> = [(0, 1), (1, 7), (1, 3), (1, 2), (5, 8), (6, 7), (1, 1)]
            .iter()
            .map(|&(p, q)| rat(p, q))
            .collect();
        for _ in 0..n {
            let dim = r.gen_range(1..=2usize);
            let arity = r.gen_range(1..=3usize);
            let from = sample::cube_config(&mut r, dim, arity);
            let to = sample::cube_config(&mut r, dim, arity);
            let line = op(PlPath::line(from, to))?;
            match line.validate() {
                Ok(()) => {
                    for t in &probes {
                        ensure(line.config_at(t).is_ok(), || {
                            format!("checker accepted a line that overlaps at {t}")
                        })?;
                    }
                }
                Err(_) => {
                    let violations = line.violations();
                    ensure(!violations.is_empty(), || {
                        "rejection came without a violation".to_string()
                    })?;
                    for v in &violations {
                        ensure(line.config_at(&v.witness).is_err(), || {
                            format!("witness {} was actually valid", v.witness)
                        })?;
                    }
                }
            }
        }
        Ok(())
    });

    s.run("substitution-preserves-validity", || {
        let mut r = sample::rng(salted(seed, 0x82));
        let sigma = braiding_path();
        for _ in 0..n {
            let inner_arity = r.gen_range(0..=2usize);
            let inner = sample::cube_config(&mut r, 2, inner_arity);
            let slot = r.gen_range(1..=2usize);
            op(op(sigma.plug_const(slot, &inner))?.validate())?;
            let outer_arity = r.gen_range(1..=3usize);
            let outer = sample::cube_config(&mut r, 2, outer_arity);
            let outer_slot = r.gen_range(1..=outer.arity());
            op(op(sigma.into_slot(&outer, outer_slot))?.validate())?;
            op(op(sigma.include_dim(3))?.validate())?;
            let swap = op(Permutation::transposition(2, 1, 2))?;
            op(op(sigma.permute(&swap))?.validate())?;
        }
        Ok(())
    });

    s.run("reversal-and-joining-preserve-validity", || {
        let sigma = braiding_path();
        op(sigma.reverse().validate())?;
        let there_and_back = op(sigma.concat(&sigma.reverse()))?;
        op(there_and_back.validate())?;
        ensure(there_and_back.is_closed(), || {
            "a path joined with its reverse failed to close".to_string()
        })
    });

    s.finish()
}

fn tree_coherence(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("tree-coherence");
    let n = trials.div_euclid(2).max(10);
    let pools: Vec<Vec<PlanarTree>> = (0..=3).map(|a| enumerate_trees(a, 4)).collect();

    s.run("contraction-leaves-evaluation-alone", || {
        let mut r = sample::rng(salted(seed, 0x91));
        for _ in 0..n {
            let arity = r.gen_range(0..=3usize);
            let tree = pools[arity][r.gen_range(0..pools[arity].len())].clone();
            let point = sample::decorate(&mut r, &tree);
            ensure(contraction_invariant(&point), || {
                format!("a contraction changed the value of {point:?}")
            })?;
        }
        Ok(())
    });

    s.run("full-contraction-flattens", || {
        let mut r = sample::rng(salted(seed, 0x92));
        for _ in 0..n {
            let arity = r.gen_range(0..=3usize);
            let tree = pools[arity][r.gen_range(0..pools[arity].len())].clone();
            let point = sample::decorate(&mut r, &tree);
            ensure(full_contraction_is_flat(&point), || {
                format!("full contraction misbehaved on {point:?}")
            })?;
        }
        Ok(())
    });

    s.run("grafting-matches-slot-substitution", || {
        let mut r = sample::rng(salted(seed, 0x93));
        for _ in 0..n {
            let arity = r.gen_range(1..=3usize);
            let stock_tree = pools[arity][r.gen_range(0..pools[arity].len())].clone();
            let stock = sample::decorate(&mut r, &stock_tree);
            let scion_arity = r.gen_range(0..=2usize);
            let scion = if scion_arity == 0 && r.gen_bool(0.5) {
                TreePoint::empty()
            } else {
                let scion_tree =
                    pools[scion_arity][r.gen_range(0..pools[scion_arity].len())].clone();
                sample::decorate(&mut r, &scion_tree)
            };
            let index = r.gen_range(1..=arity);
            ensure(op(graft_compatible(&stock, index, &scion))?, || {
                format!("grafting at slot {index} disagreed with substitution")
            })?;
        }
        Ok(())
    });

    s.finish()
}

fn associahedron_suite() -> SuiteReport {
    let mut s = Suite::new("associahedron");
    let frozen: [(usize, &[usize]); 4] = [
        (3, &[2, 1]),
        (4, &[5, 5, 1]),
        (5, &[14, 21, 9, 1]),
        (6, &[42, 84, 56, 14, 1]),
    ];

    s.run("face-counts", || {
        for (leaves, want) in frozen {
            let lattice = FaceLattice::new(leaves);
            ensure(lattice.face_counts() == want, || {
                format!(
                    "{leaves}-leaf counts were {:?}, wanted {want:?}",
                    lattice.face_counts()
                )
            })?;
        }
        Ok(())
    });

    s.run("vertices-are-catalan-many", || {
        for leaves in 2..=7usize {
            let lattice = FaceLattice::new(leaves);
            ensure(
                lattice.vertex_count() as u128 == catalan(leaves - 1),
                || format!("{leaves}-leaf vertex count was {}", lattice.vertex_count()),
            )?;
        }
        Ok(())
    });

    s.run("euler-characteristic-is-one", || {
        for leaves in 2..=7usize {
            let lattice = FaceLattice::new(leaves);
            ensure(lattice.euler_characteristic() == 1, || {
                format!(
                    "{leaves}-leaf Euler characteristic was {}",
                    lattice.euler_characteristic()
                )
            })?;
        }
        Ok(())
    });

    s.run("contractions-are-covers", || {
        for leaves in 3..=6usize {
            let lattice = FaceLattice::new(leaves);
            for i in 0..lattice.faces().len() {
                for &j in lattice.covers(i) {
                    ensure(lattice.dim(j) == lattice.dim(i) + 1, || {
                        format!("a contraction jumped dimensions in the {leaves}-leaf lattice")
                    })?;
                }
                if lattice.dim(i) == leaves - 2 {
                    ensure(lattice.covers(i).is_empty(), || {
                        "the top cell claimed to have covers".to_string()
                    })?;
                }
            }
        }
        Ok(())
    });

    s.finish()
}

fn determinism_subset(seed: u64, trials: usize) -> SuiteReport {
    let mut s = Suite::new("determinism-subset");
    let n = trials.clamp(10, 100);

    let batch = |batch_seed: u64| -> Result<String, String> {
        let mut r = sample::rng(batch_seed);
        let mut values = Vec::new();
        for _ in 0..n {
            values.push(op(serde_json::to_value(sample::envelope(&mut r)))?);
            values.push(op(serde_json::to_value(sample::cube_config(&mut r, 2, 3)))?);
            values.push(op(serde_json::to_value(sample::moore(&mut r)))?);
            values.push(op(serde_json::to_value(sample::comparison(&mut r)))?);
        }
        op(serde_json::to_string(&values))
    };

    s.run("same-seed-same-bytes", || {
        let first = batch(salted(seed, 0xA1))?;
        let second = batch(salted(seed, 0xA1))?;
        ensure(first == second, || {
            "two runs with one seed produced different bytes".to_string()
        })
    });

    s.run("serialization-round-trips", || {
        let mut r = sample::rng(salted(seed, 0xA2));
        for _ in 0..n {
            let e = sample::envelope(&mut r);
            let text = op(serde_json::to_string(&e))?;
            let back: Envelope = op(serde_json::from_str(&text))?;
            ensure(back == e, || format!("envelope round trip changed {e:?}"))?;
            let (dim, arity) = (r.gen_range(1..=3usize), r.gen_range(0..=3usize));
            let c = sample::cube_config(&mut r, dim, arity);
            let text = op(serde_json::to_string(&c))?;
            let back: CubeConfig = op(serde_json::from_str(&text))?;
            ensure(back == c, || format!("configuration round trip changed {c:?}"))?;
        }
        let sigma = braiding_path();
        let text = op(serde_json::to_string(&sigma))?;
        let back: PlPath = op(serde_json::from_str(&text))?;
        ensure(back == sigma, || "path round trip changed the braiding".to_string())
    });

    s.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_a_small_run() {
        let report = run_selfcheck(0, 25);
        for suite in &report.suites {
            for check in &suite.checks {
                assert!(
                    check.passed,
                    "{}/{}: {:?}",
                    suite.suite, check.name, check.witness
                );
            }
        }
        assert!(report.passed);
        assert_eq!(report.suites.len(), 15);
    }

    #[test]
    fn reports_are_byte_identical_for_one_seed() {
        let a = serde_json::to_string(&run_selfcheck(42, 10)).unwrap();
        let b = serde_json::to_string(&run_selfcheck(42, 10)).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed"));
    }

    #[test]
    fn text_rendering_lists_every_check() {
        let report = run_selfcheck(1, 5);
        let text = report.render_text();
        let lines = text.lines().filter(|l| l.starts_with("[pass]")).count();
        let total: usize = report.suites.iter().map(|s| s.checks.len()).sum();
        assert_eq!(lines, total);
        assert!(text.contains("selfcheck:"));
    }
}
