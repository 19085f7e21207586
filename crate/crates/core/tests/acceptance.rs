//! Acceptance suite, run without the libtest harness so its report is always shown. Prints one PASS/FAIL line per criterion; criteria 1 to 7 must pass,
//! criterion 8 (timing) is informational.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use latbool::arrangement::BooleanOp;
use latbool::exact::{RatPoint, Region};
use latbool::fixtures::{hand_fixtures, random_convex_cells, random_pairs, scaling_region, seed_from_env, Fixture};
use latbool::oracle::brute_nvlp;
use latbool::rounding::nvlp;
use latbool::setops::bracket;
use latbool::verify::{verify_op, Check, Criterion};
use rayon::prelude::*;

const OPS: [BooleanOp; 3] = [BooleanOp::Intersection, BooleanOp::Union, BooleanOp::Difference];
const RANDOM_PAIRS: usize = 200;
const RANDOM_CELLS: usize = 200;

struct Line {
    criterion: u8,
    title: &'static str,
    summary: String,
    failures: Vec<String>,
    blocking: bool,
}

impl Line {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn print(&self) {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let note = if self.blocking { "" } else { " (informational)" };
        println!("{status} [{}] {}: {}{note}", self.criterion, self.title, self.summary);
        for f in self.failures.iter().take(5) {
            println!("    {f}");
        }
        if self.failures.len() > 5 {
            println!("    ... {} more", self.failures.len() - 5);
        }
    }
}

fn corpus() -> Vec<Fixture> {
    let mut all = hand_fixtures();
    all.extend(random_pairs(seed_from_env(), RANDOM_PAIRS, 64));
    all
}

/// Runs every oracle check of every operation on the corpus, grouped by criterion.
fn run_checks(corpus: &[Fixture]) -> BTreeMap<Criterion, (usize, Vec<String>)> {
    let results: Vec<(String, BooleanOp, Vec<Check>)> = corpus
        .par_iter()
        .flat_map(|f| OPS.into_par_iter().map(move |op| (f.name.clone(), op, verify_op(&f.a, &f.b, op))))
        .collect();
    let mut grouped: BTreeMap<Criterion, (usize, Vec<String>)> = BTreeMap::new();
    for (name, op, checks) in results {
        for c in checks {
            let entry = grouped.entry(c.criterion).or_default();
            entry.0 += 1;
            if let Err(w) = c.outcome {
                entry.1.push(format!("{name} {}: {}: {w}", op.name(), c.property));
            }
        }
    }
    grouped
}

/// NVLP against the exhaustive oracle on random convex cells, counting vertices whose
/// nearest lattice point is not unique.
fn random_cell_nvlp() -> (usize, usize, Vec<String>) {
    let (mut cases, mut ties, mut failures) = (0, 0, Vec::new());
    for (i, cell) in random_convex_cells(seed_from_env(), RANDOM_CELLS).iter().enumerate() {
        for v in cell.boundary.vertices() {
            cases += 1;
            let slow = brute_nvlp(v, cell);
            match nvlp(v, cell) {
                Ok(fast) if fast == slow => {}
                Ok(fast) => failures.push(format!("cell {i} vertex {v}: nvlp {fast:?}, brute force {slow:?}")),
                Err(e) => failures.push(format!("cell {i} vertex {v}: {e}")),
            }
            if let Some(best) = &slow {
                let d = v.squared_distance(&best.to_rat());
                // generated cells lie in [0, 8]²
                let tied = (0..=8)
                    .flat_map(|x| (0..=8).map(move |y| RatPoint::int(x, y)))
                    .filter(|q| cell.contains(q) && v.squared_distance(q) == d)
                    .count();
                ties += usize::from(tied > 1);
            }
        }
    }
    (cases, ties, failures)
}

fn time_op(a: &Region, b: &Region) -> Duration {
    let t = Instant::now();
    bracket(a, b, BooleanOp::Intersection).expect("scaling run");
    t.elapsed()
}

/// Fastest of three runs at 1000 and at 2000 input edges.
fn scaling() -> (Duration, Duration) {
    let seed = seed_from_env();
    let inputs = |edges: usize| (scaling_region(seed, edges / 2), scaling_region(seed ^ 0x9e37, edges / 2));
    let (a1, b1) = inputs(1000);
    let (a2, b2) = inputs(2000);
    let best = |a: &Region, b: &Region| (0..3).map(|_| time_op(a, b)).min().expect("three runs");
    (best(&a1, &b1), best(&a2, &b2))
}

fn main() {
    let corpus = corpus();
    let names: Vec<&str> = corpus.iter().map(|f| f.name.as_str()).collect();
    let hand = hand_fixtures().len();
    for required in ["e2_triangles", "hole_nesting", "collinear_overlap", "lattice_free_sliver"] {
        assert!(names.contains(&required), "missing hand fixture {required}");
    }
    assert!(hand >= 12);

    let started = Instant::now();
    let grouped = run_checks(&corpus);
    let elapsed = started.elapsed();
    let ops = corpus.len() * OPS.len();
    let take = |c: Criterion| grouped.get(&c).cloned().unwrap_or_default();

    let mut lines = Vec::new();
    let specs: [(Criterion, &str); 5] = [
        (Criterion::Inclusion, "inner ⊆ exact ⊆ outer, exact oracle"),
        (Criterion::Hausdorff, "Hausdorff distance < √2 at spacing 1/8"),
        (Criterion::LatticeOutput, "rounded outputs are valid lattice regions"),
        (Criterion::VertexBounds, "vertex-count bounds"),
        (Criterion::Convexity, "reflex and convex vertex correspondence"),
    ];
    for (criterion, title) in specs {
        let (checks, failures) = take(criterion);
        lines.push(Line {
            criterion: criterion as u8,
            title,
            summary: format!("{checks} checks over {ops} operations ({hand} hand + {RANDOM_PAIRS} random pairs)"),
            failures,
            blocking: true,
        });
    }

    let (fixture_checks, mut nvlp_failures) = take(Criterion::Nvlp);
    let (cell_cases, ties, cell_failures) = random_cell_nvlp();
    nvlp_failures.extend(cell_failures);
    lines.push(Line {
        criterion: 6,
        title: "nvlp equals brute-force NVLP",
        summary: format!(
            "{fixture_checks} fixture regions, {cell_cases} vertices of {RANDOM_CELLS} random cells ({ties} with tied distances)"
        ),
        failures: nvlp_failures,
        blocking: true,
    });

    let (lemma_checks, lemma_failures) = take(Criterion::Lemmas);
    lines.push(Line {
        criterion: 7,
        title: "Lemmas 1, 2 and 5",
        summary: format!("{lemma_checks} checks over the intersection and difference results"),
        failures: lemma_failures,
        blocking: true,
    });

    let (t1, t2) = scaling();
    let ratio = t2.as_secs_f64() / t1.as_secs_f64().max(1e-9);
    lines.push(Line {
        criterion: 8,
        title: "doubling 1000 to 2000 edges costs < 4.5x",
        summary: format!("{:.3}s -> {:.3}s, ratio {ratio:.2}", t1.as_secs_f64(), t2.as_secs_f64()),
        failures: if ratio < 4.5 { vec![] } else { vec![format!("ratio {ratio:.2} ≥ 4.5")] },
        blocking: false,
    });

    println!("corpus checked in {:.1}s", elapsed.as_secs_f64());
    for line in &lines {
        line.print();
    }
    let failed: Vec<u8> = lines.iter().filter(|l| l.blocking && !l.passed()).map(|l| l.criterion).collect();
    if !failed.is_empty() {
        eprintln!("criteria failed: {failed:?}");
        std::process::exit(1);
    }
}
