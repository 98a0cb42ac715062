//! Command-line front end: self-check suites, coherence-loop certificates,
//! braid extraction, path validation, and tree/lattice listings.
//!
//! Every command prints a human-readable report by default, or a JSON
//! document with `--json`; `--out FILE` redirects either form. The process
//! exits 0 exactly when the command's checks pass.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cubical::braid::extract_braid;
use cubical::envelope::{homotopy_coords, slot_two_decomposition, Envelope};
use cubical::moore::{ComparisonElement, MooreElement};
use cubical::path::loops::{
    assemble_hexagon, assemble_pentagon, assemble_unit_triangle, associator_path, braiding_path,
    cone_fill, CoherenceLoop,
};
use cubical::path::stabilize::stabilize_fill;
use cubical::path::PlPath;
use cubical::rational::rat;
use cubical::sample;
use cubical::suite::run_selfcheck;
use cubical::tree::associahedron::FaceLattice;
use cubical::tree::enumerate::enumerate_trees;

#[derive(Parser)]
#[command(
    name = "cubical",
    version,
    about = "Exact-arithmetic checks for cube configurations, coherence loops, and braids"
)]
struct Cli {
    /// Seed for randomized commands; falls back to $CUBICAL_SEED, then 0.
    #[arg(long, global = true, env = "CUBICAL_SEED")]
    seed: Option<u64>,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every law suite on seeded random data.
    Selfcheck {
        /// Number of random trials per randomized check.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Assemble the five-sided reassociation loop and certify its filling.
    Pentagon,
    /// Assemble the unit triangle and certify its filling.
    Triangle,
    /// Assemble the braiding hexagon and read off its braid word.
    Hexagon,
    /// Extract the braid word of a two-dimensional path from a JSON file.
    Braid {
        /// Path file, as written by `validate-path`-compatible JSON.
        file: PathBuf,
    },
    /// Check a piecewise-linear path file for overlaps.
    ValidatePath { file: PathBuf },
    /// Enumerate trees or associahedron faces.
    #[command(subcommand)]
    Trees(TreesCommand),
    /// Walk through envelope arithmetic on seeded sample elements.
    EnvDemo,
    /// Walk through Moore and comparison arithmetic on seeded samples.
    MooreDemo,
}

#[derive(Subcommand)]
enum TreesCommand {
    /// List the trees with `n` inputs, no capped leaves, and valence >= 1.
    Enumerate {
        n: usize,
        /// Node budget (chains make the unrestricted family infinite).
        #[arg(long, default_value_t = 4)]
        max_nodes: usize,
        /// Emit GraphViz instead of a listing.
        #[arg(long)]
        dot: bool,
    },
    /// Face counts and covering relations of the associahedron on `n` leaves.
    Faces {
        n: usize,
        /// Emit the Hasse diagram as GraphViz.
        #[arg(long)]
        dot: bool,
    },
}

macro_rules! pretty {
    ($value:expr) => {
        serde_json::to_string($value).expect("serializes")
    };
}

/// What a command produced: a text report, a JSON report, and a verdict.
struct Report {
    text: String,
    json: Value,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or(0);
    let report = match build_report(&cli.command, seed) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::FAILURE;
        }
    };
    let rendered = if cli.json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("reports serialize");
        s.push('\n');
        s
    } else {
        report.text.clone()
    };
    let emitted = match &cli.out {
        Some(path) => fs::write(path, rendered).with_context(|| format!("writing {path:?}")),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(err) = emitted {
        eprintln!("error: {err:#}");
        return ExitCode::FAILURE;
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn build_report(command: &Command, seed: u64) -> Result<Report> {
    match command {
        Command::Selfcheck { trials } => Ok(selfcheck_report(seed, *trials)),
        Command::Pentagon => {
            let loop_ = assemble_pentagon(&associator_path())?;
            loop_report(loop_, "reassociation pentagon")
        }
        Command::Triangle => {
            let loop_ = assemble_unit_triangle(&associator_path())?;
            loop_report(loop_, "unit triangle")
        }
        Command::Hexagon => hexagon_report(),
        Command::Braid { file } => braid_report(file),
        Command::ValidatePath { file } => validate_report(file),
        Command::Trees(TreesCommand::Enumerate { n, max_nodes, dot }) => {
            Ok(enumerate_report(*n, *max_nodes, *dot))
        }
        Command::Trees(TreesCommand::Faces { n, dot }) => faces_report(*n, *dot),
        Command::EnvDemo => Ok(env_demo(seed)),
        Command::MooreDemo => Ok(moore_demo(seed)),
    }
}

fn selfcheck_report(seed: u64, trials: usize) -> Report {
    let report = run_selfcheck(seed, trials);
    Report {
        text: report.render_text(),
        json: serde_json::to_value(&report).expect("reports serialize"),
        passed: report.passed,
    }
}

fn loop_report(loop_: CoherenceLoop, title: &str) -> Result<Report> {
    loop_.validate()?;
    let fill = cone_fill(&loop_)?;
    fill.certify()?;
    let summary = loop_.summary();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{title}: {} edges, {} corners, all segments overlap-free",
        loop_.edges().len(),
        summary.corners.len()
    );
    for (i, corner) in summary.corners.iter().enumerate() {
        let _ = writeln!(
            text,
            "  corner {}: {}",
            i + 1,
            serde_json::to_string(corner).expect("configurations serialize")
        );
    }
    let _ = writeln!(
        text,
        "cone filling: apex + {} spokes certified",
        fill.spokes().len()
    );
    let _ = writeln!(text, "result: pass");
    Ok(Report {
        json: json!({
            "loop": summary,
            "cone_spokes": fill.spokes().len(),
            "passed": true,
        }),
        text,
        passed: true,
    })
}

fn hexagon_report() -> Result<Report> {
    let loop_ = assemble_hexagon(&braiding_path(), &associator_path())?;
    loop_.validate()?;
    let path = loop_.to_path();
    let word = extract_braid(&path)?;
    let fill = stabilize_fill(&path)?;
    fill.certify()?;
    let passed = word.is_trivial();
    let summary = loop_.summary();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "braiding hexagon: {} edges, {} corners, all segments overlap-free",
        loop_.edges().len(),
        summary.corners.len()
    );
    let _ = writeln!(text, "extracted braid word: {word}");
    let _ = writeln!(
        text,
        "freely reduced: {}",
        if word.free_reduction().letters().is_empty() {
            "empty"
        } else {
            "nonempty"
        }
    );
    let _ = writeln!(
        text,
        "stabilized filling: {} segments certified in dimension {}",
        fill.segment_count(),
        fill.lifted().dim(),
    );
    let _ = writeln!(text, "result: {}", if passed { "pass" } else { "FAIL" });
    Ok(Report {
        json: json!({
            "loop": summary,
            "letters": word.letters(),
            "strands": word.strands(),
            "freely_trivial": word.free_reduction().letters().is_empty(),
            "trivial": word.is_trivial(),
            "stabilized_segments": fill.segment_count(),
            "passed": passed,
        }),
        text,
        passed,
    })
}

fn read_path(file: &PathBuf) -> Result<PlPath> {
    let raw = fs::read_to_string(file).with_context(|| format!("reading {file:?}"))?;
    serde_json::from_str(&raw).with_context(|| format!("parsing {file:?}"))
}

fn braid_report(file: &PathBuf) -> Result<Report> {
    let path = read_path(file)?;
    let word = extract_braid(&path)?;
    let mut text = String::new();
    let _ = writeln!(text, "strands: {}", word.strands());
    let _ = writeln!(text, "word: {word}");
    let _ = writeln!(text, "permutation: {:?}", word.permutation());
    let _ = writeln!(
        text,
        "trivial: {}",
        if word.is_trivial() { "yes" } else { "no" }
    );
    Ok(Report {
        json: json!({
            "strands": word.strands(),
            "letters": word.letters(),
            "word": word.to_string(),
            "permutation": word.permutation(),
            "trivial": word.is_trivial(),
        }),
        text,
        passed: true,
    })
}

fn validate_report(file: &PathBuf) -> Result<Report> {
    let path = read_path(file)?;
    let violations = path.violations();
    let passed = violations.is_empty();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "path: dimension {}, {} cubes, {} segments",
        path.dim(),
        path.arity(),
        path.segment_count()
    );
    if passed {
        let _ = writeln!(text, "every pair stays separated on every segment");
    } else {
        for v in &violations {
            let _ = writeln!(text, "  {v}");
        }
    }
    let _ = writeln!(text, "result: {}", if passed { "pass" } else { "FAIL" });
    Ok(Report {
        json: json!({
            "dim": path.dim(),
            "arity": path.arity(),
            "segments": path.segment_count(),
            "violations": violations,
            "passed": passed,
        }),
        text,
        passed,
    })
}

fn enumerate_report(n: usize, max_nodes: usize, dot: bool) -> Report {
    let trees = enumerate_trees(n, max_nodes);
    let mut text = String::new();
    if dot {
        for tree in &trees {
            text.push_str(&tree.to_dot());
        }
    } else {
        let _ = writeln!(
            text,
            "{} trees with {n} inputs and at most {max_nodes} nodes",
            trees.len()
        );
        for tree in &trees {
            let _ = writeln!(
                text,
                "  {}",
                serde_json::to_string(tree).expect("trees serialize")
            );
        }
    }
    Report {
        json: json!({
            "n": n,
            "max_nodes": max_nodes,
            "count": trees.len(),
            "trees": trees,
        }),
        text,
        passed: true,
    }
}

fn faces_report(n: usize, dot: bool) -> Result<Report> {
    anyhow::ensure!(n >= 2, "the face lattice needs at least two leaves");
    let lattice = FaceLattice::new(n);
    let counts = lattice.face_counts();
    let mut text = String::new();
    if dot {
        text.push_str("digraph hasse {\n  rankdir=BT;\n");
        for (i, face) in lattice.faces().iter().enumerate() {
            let label = serde_json::to_string(face)
                .expect("trees serialize")
                .replace('"', "'");
            let _ = writeln!(text, "  f{i} [shape=box, label=\"{label}\"];");
            for &j in lattice.covers(i) {
                let _ = writeln!(text, "  f{i} -> f{j};");
            }
        }
        text.push_str("}\n");
    } else {
        let _ = writeln!(text, "associahedron on {n} leaves");
        for (d, count) in counts.iter().enumerate() {
            let _ = writeln!(text, "  dimension {d}: {count} faces");
        }
        let _ = writeln!(text, "  total: {}", lattice.faces().len());
        let _ = writeln!(
            text,
            "  Euler characteristic: {}",
            lattice.euler_characteristic()
        );
    }
    let passed = lattice.euler_characteristic() == 1;
    Ok(Report {
        json: json!({
            "n": n,
            "face_counts": counts,
            "total": lattice.faces().len(),
            "euler_characteristic": lattice.euler_characteristic(),
            "faces": lattice.faces(),
            "passed": passed,
        }),
        text,
        passed,
    })
}

fn env_demo(seed: u64) -> Report {
    let mut r = sample::rng(seed);
    let a = sample::envelope(&mut r);
    let b = sample::envelope(&mut r);
    let product = a.multiply(&b);
    let term = product.to_term();
    let back = Envelope::from_term(&term);
    let halfway = homotopy_coords(&rat(1, 2), &product).expect("1/2 is a valid time");
    let outer = sample::anchored_pair(&mut r);
    let inner = sample::anchored_pair(&mut r);
    let (direct, factored) =
        slot_two_decomposition(&outer, &inner).expect("anchored pairs decompose");
    let mut text = String::new();
    let _ = writeln!(text, "a        = {}", pretty!(&a));
    let _ = writeln!(text, "b        = {}", pretty!(&b));
    let _ = writeln!(text, "a * b    = {}", pretty!(&product));
    let _ = writeln!(text, "as term  = {}", pretty!(&term));
    let _ = writeln!(text, "re-read  = {}", pretty!(&back));
    let _ = writeln!(text, "halfway deformation of a * b = {}", pretty!(&halfway));
    let _ = writeln!(
        text,
        "slot-two decomposition agrees: {}",
        if direct == factored { "yes" } else { "NO" }
    );
    let passed = direct == factored;
    Report {
        json: json!({
            "a": a,
            "b": b,
            "product": product,
            "term": term,
            "from_term": back,
            "halfway": halfway,
            "decomposition_agrees": direct == factored,
            "passed": passed,
        }),
        text,
        passed,
    }
}

fn moore_demo(seed: u64) -> Report {
    let mut r = sample::rng(seed);
    let a = sample::moore(&mut r);
    let b = sample::moore(&mut r);
    let product = a.multiply(&b);
    let embedded = ComparisonElement::from_moore(&a).multiply(&ComparisonElement::from_moore(&b));
    let matches_embedding = ComparisonElement::from_moore(&product) == embedded;
    let e = sample::envelope(&mut r);
    let via_envelope = ComparisonElement::from_envelope(&e);
    let unit_ok = ComparisonElement::from_moore(&MooreElement::unit()) == ComparisonElement::unit();
    let mut text = String::new();
    let _ = writeln!(text, "a             = {}", pretty!(&a));
    let _ = writeln!(text, "b             = {}", pretty!(&b));
    let _ = writeln!(text, "a * b         = {}", pretty!(&product));
    let _ = writeln!(text, "embedded(a*b) = {}", pretty!(&embedded));
    let _ = writeln!(
        text,
        "embedding is multiplicative: {}",
        if matches_embedding { "yes" } else { "NO" }
    );
    let _ = writeln!(text, "envelope      = {}", pretty!(&e));
    let _ = writeln!(text, "as comparison = {}", pretty!(&via_envelope));
    let _ = writeln!(
        text,
        "units map to units: {}",
        if unit_ok { "yes" } else { "NO" }
    );
    let passed = matches_embedding && unit_ok;
    Report {
        json: json!({
            "a": a,
            "b": b,
            "product": product,
            "embedded_product": embedded,
            "embedding_multiplicative": matches_embedding,
            "envelope": e,
            "envelope_as_comparison": via_envelope,
            "units_map_to_units": unit_ok,
            "passed": passed,
        }),
        text,
        passed,
    }
}
