//! Property checks of one operation against the oracle, grouped by acceptance criterion.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::arrangement::{BooleanOp, Convexity, ExactRegion};
use crate::decomposition::reflex_vertical_decomposition;
use crate::error::Result;
use crate::exact::{is_valid, properly_cross, rat, Orientation, RatPoint, Region, Ring, Segment};
use crate::oracle::{
    brute_nvlp, brute_nvlp_in_region, check_hausdorff, check_inclusion, lattice_closure, meets_closure_interior,
    HausdorffMode,
};
use crate::rounding::{inner_round_traced, nvlp, pixel_set};
use crate::setops::{bracket, exact_result, rounding_source, Mode, Sandwich};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    Inclusion = 1,
    Hausdorff = 2,
    LatticeOutput = 3,
    VertexBounds = 4,
    Convexity = 5,
    Nvlp = 6,
    Lemmas = 7,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub criterion: Criterion,
    pub property: String,
    /// `Err` carries a human-readable witness.
    pub outcome: std::result::Result<(), String>,
}

impl Check {
    fn new(criterion: Criterion, property: impl Into<String>, outcome: std::result::Result<(), String>) -> Self {
        Check { criterion, property: property.into(), outcome }
    }

    fn bool(criterion: Criterion, property: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        Check::new(criterion, property, if ok { Ok(()) } else { Err(detail()) })
    }

    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// Pairs of edges of `p` and of its pixel set that intersect.
pub fn pixel_incidences(p: &ExactRegion) -> usize {
    let pixels: Vec<Segment> = pixel_set(p).edges().collect();
    let edges: Vec<Segment> = p.region().edges().collect();
    edges
        .iter()
        .map(|e| {
            pixels
                .iter()
                .filter(|f| {
                    !matches!(crate::exact::segment_intersection(e, f), crate::exact::SegmentIntersection::None)
                })
                .count()
        })
        .sum()
}

fn reflex_positions(region: &Region) -> Vec<RatPoint> {
    region
        .rings()
        .iter()
        .flat_map(|r| (0..r.len()).filter(move |&i| r.turn(i) == Orientation::Right).map(move |i| r.vertex(i).clone()))
        .collect()
}

fn convex_positions(region: &Region) -> BTreeSet<RatPoint> {
    region
        .rings()
        .iter()
        .flat_map(|r| (0..r.len()).filter(move |&i| r.turn(i) == Orientation::Left).map(move |i| r.vertex(i).clone()))
        .collect()
}

/// Every ring of `inner` lying inside a convex hole-free component of `exact` must be
/// convex and alone there.
fn convex_components_preserved(inner: &Region, exact: &Region) -> std::result::Result<(), String> {
    for (ci, comp) in exact.rings().iter().enumerate() {
        let has_hole = exact.parents().contains(&Some(ci));
        if !comp.signed_area2().is_positive() || has_hole || !comp.is_convex() {
            continue;
        }
        let images: Vec<&Ring> = inner
            .rings()
            .iter()
            .filter(|r| r.vertices().iter().all(|v| comp.winding(v) != 0 || comp.on_boundary(v)))
            .collect();
        if images.len() > 1 {
            return Err(format!("component at {:?} has {} image rings", comp.min_vertex(), images.len()));
        }
        if let Some(img) = images.first() {
            if !img.is_convex() || !img.signed_area2().is_positive() {
                return Err(format!("image of component at {:?} is not convex", comp.min_vertex()));
            }
        }
    }
    Ok(())
}

/// NVLP against the exhaustive oracle for every non-lattice vertex of `p`.
pub fn nvlp_agreement(p: &ExactRegion) -> Result<std::result::Result<usize, String>> {
    let d = reflex_vertical_decomposition(p)?;
    let mut count = 0;
    for (ri, ring) in p.region().rings().iter().enumerate() {
        for (i, v) in ring.vertices().iter().enumerate() {
            if v.is_lattice() {
                continue;
            }
            let cell = d.cell_of((ri, i));
            let fast = nvlp(v, cell)?;
            let slow = brute_nvlp(v, cell);
            if fast != slow {
                return Ok(Err(format!("nvlp({v}) = {fast:?}, brute force gives {slow:?}")));
            }
            count += 1;
        }
    }
    Ok(Ok(count))
}

/// Lemma 1: the cell-restricted NVLP equals the NVLP over the whole region.
pub fn lemma1(p: &ExactRegion) -> Result<std::result::Result<(), String>> {
    let d = reflex_vertical_decomposition(p)?;
    for (ri, ring) in p.region().rings().iter().enumerate() {
        for (i, v) in ring.vertices().iter().enumerate() {
            if v.is_lattice() {
                continue;
            }
            let local = brute_nvlp(v, d.cell_of((ri, i)));
            let global = brute_nvlp_in_region(v, p.region());
            if local != global {
                return Ok(Err(format!("vertex {v}: cell gives {local:?}, region gives {global:?}")));
            }
        }
    }
    Ok(Ok(()))
}

/// Lemma 2: interior chain vertices are reflex lattice vertices of P, each vertically
/// visible from the chain's edge, in projection order along it.
pub fn lemma2(p: &ExactRegion) -> Result<std::result::Result<(), String>> {
    let trace = inner_round_traced(p)?;
    let reflex: BTreeSet<RatPoint> = p.reflex_vertices().map(|v| v.position.clone()).collect();
    for chain in &trace.chains {
        let e = &chain.edge;
        let n = chain.vertices.len();
        let mut last: Option<crate::exact::Rational> = None;
        for v in chain.vertices.iter().take(n.saturating_sub(1)).skip(1) {
            let r = v.to_rat();
            if !reflex.contains(&r) {
                return Ok(Err(format!("chain vertex {r} is not a reflex vertex of P")));
            }
            if e.a.x == e.b.x || (r.x <= e.a.x.clone().min(e.b.x.clone())) || (r.x >= e.a.x.clone().max(e.b.x.clone()))
            {
                return Ok(Err(format!("chain vertex {r} does not project into the edge interior")));
            }
            let foot_y = &e.a.y + (&e.b.y - &e.a.y) * (&r.x - &e.a.x) / (&e.b.x - &e.a.x);
            let foot = RatPoint::new(r.x.clone(), foot_y);
            if !crate::exact::is_visible(&r, &foot, p.region()).unwrap_or(false) {
                return Ok(Err(format!("chain vertex {r} is not vertically visible from its edge")));
            }
            let t = if e.a.x < e.b.x { r.x.clone() } else { -r.x.clone() };
            if last.as_ref().is_some_and(|l| &t <= l) {
                return Ok(Err(format!("chain vertex {r} is out of projection order")));
            }
            last = Some(t);
        }
    }
    Ok(Ok(()))
}

/// Lemma 5: the snapping segment of every non-lattice vertex avoids the interior of L(P).
pub fn lemma5(p: &ExactRegion) -> Result<std::result::Result<(), String>> {
    let trace = inner_round_traced(p)?;
    let closure = lattice_closure(p.region());
    for (ri, ring) in p.region().rings().iter().enumerate() {
        for (i, v) in ring.vertices().iter().enumerate() {
            if let Some(s) = &trace.snaps[ri][i] {
                if meets_closure_interior(v, &s.to_rat(), &closure) {
                    return Ok(Err(format!("segment {v} -> {} meets the interior of L(P)", s.to_rat())));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn flatten(r: Result<std::result::Result<(), String>>) -> std::result::Result<(), String> {
    match r {
        Ok(x) => x,
        Err(e) => Err(format!("error: {e}")),
    }
}

/// Every property check for one operation. Lemma checks only run for intersections and
/// differences, whose rounding source is the exact result itself.
pub fn verify_op(a: &Region, b: &Region, op: BooleanOp) -> Vec<Check> {
    verify_op_full(a, b, op).1
}

/// [`verify_op`] together with the computed bracket, when the pipeline ran.
pub fn verify_op_full(a: &Region, b: &Region, op: BooleanOp) -> (Option<Sandwich>, Vec<Check>) {
    let mut checks = Vec::new();
    let s = match bracket(a, b, op) {
        Ok(s) => s,
        Err(e) => {
            checks.push(Check::new(Criterion::Inclusion, "pipeline runs", Err(e.to_string())));
            return (None, checks);
        }
    };
    checks.extend(verify_bracket(&s, op));
    if let Ok(source) = rounding_source(a, b, op) {
        let nv = match nvlp_agreement(&source) {
            Ok(Ok(_)) => Ok(()),
            Ok(Err(w)) => Err(w),
            Err(e) => Err(e.to_string()),
        };
        checks.push(Check::new(Criterion::Nvlp, "nvlp = brute_nvlp", nv));
        if op != BooleanOp::Union {
            checks.push(Check::new(Criterion::Lemmas, "Lemma 1 cell NVLP = region NVLP", flatten(lemma1(&source))));
            checks.push(Check::new(Criterion::Lemmas, "Lemma 2 chain visibility", flatten(lemma2(&source))));
            checks.push(Check::new(Criterion::Lemmas, "Lemma 5 snap avoids L(P) interior", flatten(lemma5(&source))));
        }
    }
    (Some(s), checks)
}

/// Checks a result produced elsewhere, for example a file on disk, against the guarantees
/// of `mode` for `op` applied to `a` and `b`.
pub fn verify_result(a: &Region, b: &Region, op: BooleanOp, mode: Mode, result: &Region) -> Vec<Check> {
    let mut checks = Vec::new();
    let exact = match exact_result(a, b, op) {
        Ok(e) => e,
        Err(e) => {
            checks.push(Check::new(Criterion::Inclusion, "pipeline runs", Err(e.to_string())));
            return checks;
        }
    };
    let w = |r: std::result::Result<(), Box<crate::oracle::Witness>>| r.map_err(|w| w.to_string());
    let eighth = rat(1, 8);
    match mode {
        Mode::Exact => {
            checks.push(Check::new(Criterion::Inclusion, "result ⊆ exact", w(check_inclusion(result, exact.region()))));
            checks.push(Check::new(Criterion::Inclusion, "exact ⊆ result", w(check_inclusion(exact.region(), result))));
        }
        Mode::Inner => {
            checks.push(Check::new(Criterion::Inclusion, "inner ⊆ exact", w(check_inclusion(result, exact.region()))));
            checks.push(Check::new(
                Criterion::Hausdorff,
                "inner Hausdorff < √2",
                w(check_hausdorff(result, exact.region(), &eighth, HausdorffMode::Inner)),
            ));
        }
        Mode::Outer => {
            checks.push(Check::new(Criterion::Inclusion, "exact ⊆ outer", w(check_inclusion(exact.region(), result))));
            checks.push(Check::new(
                Criterion::Hausdorff,
                "outer Hausdorff < √2",
                w(check_hausdorff(exact.region(), result, &eighth, HausdorffMode::Outer)),
            ));
        }
    }
    if mode != Mode::Exact {
        checks.push(Check::bool(
            Criterion::LatticeOutput,
            format!("{} lattice and valid", mode.name()),
            result.is_lattice() && is_valid(result),
            || format!("{:?}", crate::exact::validate_region(result)),
        ));
    }
    checks
}

/// Checks of criteria 1 to 5 on an already computed bracket.
pub fn verify_bracket(s: &Sandwich, op: BooleanOp) -> Vec<Check> {
    let mut checks = Vec::new();
    let exact = s.exact.region();
    let w = |r: std::result::Result<(), Box<crate::oracle::Witness>>| r.map_err(|w| w.to_string());
    checks.push(Check::new(Criterion::Inclusion, "inner ⊆ exact", w(check_inclusion(&s.inner, exact))));
    checks.push(Check::new(Criterion::Inclusion, "exact ⊆ outer", w(check_inclusion(exact, &s.outer))));
    let eighth = rat(1, 8);
    checks.push(Check::new(
        Criterion::Hausdorff,
        "inner Hausdorff < √2",
        w(check_hausdorff(&s.inner, exact, &eighth, HausdorffMode::Inner)),
    ));
    checks.push(Check::new(
        Criterion::Hausdorff,
        "outer Hausdorff < √2",
        w(check_hausdorff(exact, &s.outer, &eighth, HausdorffMode::Outer)),
    ));
    for (name, r) in [("inner", &s.inner), ("outer", &s.outer)] {
        checks.push(Check::bool(
            Criterion::LatticeOutput,
            format!("{name} lattice and valid"),
            r.is_lattice() && is_valid(r),
            || format!("{:?}", crate::exact::validate_region(r)),
        ));
    }

    let big_p = exact.vertex_count();
    let k = s.exact.stats.k;
    let (ni, no) = (s.inner.vertex_count(), s.outer.vertex_count());
    if op == BooleanOp::Union {
        let h = pixel_incidences(&s.exact);
        checks.push(Check::bool(Criterion::VertexBounds, "|outer| ≤ |U| (Thm 5.4)", no <= big_p, || {
            format!("|outer|={no} |U|={big_p}")
        }));
        checks.push(Check::bool(Criterion::VertexBounds, "|inner| ≤ |U|+k+h (Thm 6.4)", ni <= big_p + k + h, || {
            format!("|inner|={ni} |U|={big_p} k={k} h={h}")
        }));
        let convex_u = convex_positions(exact);
        let bad = convex_positions(&s.outer).into_iter().find(|v| !convex_u.contains(v));
        checks.push(Check::bool(
            Criterion::Convexity,
            "convex vertices of outer are convex in U (Thm 5.5)",
            bad.is_none(),
            || format!("convex vertex {} of outer", bad.clone().expect("bad vertex")),
        ));
    } else {
        let h = pixel_incidences(&s.exact);
        checks.push(Check::bool(Criterion::VertexBounds, "|inner| ≤ |P| (Thm 1.4)", ni <= big_p, || {
            format!("|inner|={ni} |P|={big_p}")
        }));
        let lemma8 = if k == 0 { no <= big_p } else { no < big_p + 3 * k + h };
        checks.push(Check::bool(Criterion::VertexBounds, "|outer| < |P|+3k+h (Lemma 8)", lemma8, || {
            format!("|outer|={no} |P|={big_p} k={k} h={h}")
        }));
        checks.push(Check::bool(Criterion::VertexBounds, "|outer| ≤ 2n+3k", no <= 2 * big_p + 3 * k, || {
            format!("|outer|={no} n={big_p} k={k}")
        }));
        let reflex_p: BTreeSet<RatPoint> = s
            .exact
            .reflex_vertices()
            .filter(|v| v.convexity == Convexity::Reflex && v.position.is_lattice())
            .map(|v| v.position.clone())
            .collect();
        let bad = reflex_positions(&s.inner).into_iter().find(|v| !reflex_p.contains(v));
        checks.push(Check::bool(
            Criterion::Convexity,
            "reflex vertices of inner are reflex in P (Thm 1.5)",
            bad.is_none(),
            || format!("reflex vertex {} of inner", bad.clone().expect("bad vertex")),
        ));
        checks.push(Check::new(
            Criterion::Convexity,
            "convex components stay convex (Cor. 1)",
            convex_components_preserved(&s.inner, exact),
        ));
    }
    checks
}

/// Crossings between the two boundaries; used to sanity-check outputs read from disk.
pub fn boundary_crossings(a: &Region, b: &Region) -> usize {
    let eb: Vec<Segment> = b.edges().collect();
    a.edges().map(|e| eb.iter().filter(|f| properly_cross(&e, f)).count()).sum()
}
