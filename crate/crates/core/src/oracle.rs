//! Brute-force ground truth. Everything here is exhaustive and quadratic on purpose and
//! does not use the overlay engine or the decomposition.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangement::BooleanOp;
use crate::decomposition::ConvexCell;
use crate::exact::point::{ceil, floor};
use crate::exact::{
    point_in_region, properly_cross, segment_intersection, squared_distance, LatticePoint, Location, RatPoint,
    Rational, Region, Segment, SegmentIntersection,
};

/// A replayable description of a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: RatPoint,
    pub edge: Option<Segment>,
    /// Exact measured squared distance, when the check is metric.
    pub measured: Option<Rational>,
    pub classification: Option<Location>,
    pub context: String,
}

impl Witness {
    fn at(point: RatPoint, context: impl Into<String>) -> Self {
        Witness { point, edge: None, measured: None, classification: None, context: context.into() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.context, self.point)?;
        if let Some(e) = &self.edge {
            write!(f, " on edge {} -> {}", e.a, e.b)?;
        }
        if let Some(d) = &self.measured {
            write!(f, " (squared distance {})", crate::exact::point::fmt_rational(d))?;
        }
        if let Some(c) = &self.classification {
            write!(f, " (classified {c:?})")?;
        }
        Ok(())
    }
}

/// Nearest lattice point of the closed cell by full bounding-box scan, ties broken by
/// smallest `(x, y)`.
pub fn brute_nvlp(p: &RatPoint, cell: &ConvexCell) -> Option<LatticePoint> {
    let verts = cell.boundary.vertices();
    let x0 = ceil(verts.iter().map(|v| &v.x).min()?);
    let x1 = floor(verts.iter().map(|v| &v.x).max()?);
    let y0 = ceil(verts.iter().map(|v| &v.y).min()?);
    let y1 = floor(verts.iter().map(|v| &v.y).max()?);
    let mut best: Option<(Rational, LatticePoint)> = None;
    let mut x = x0;
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            let q = LatticePoint::new(x.clone(), y.clone());
            let qr = q.to_rat();
            if cell.contains(&qr) {
                let d = p.squared_distance(&qr);
                if best.as_ref().is_none_or(|(bd, bq)| d < *bd || (d == *bd && q < *bq)) {
                    best = Some((d, q));
                }
            }
            y += 1;
        }
        x += 1;
    }
    best.map(|(_, q)| q)
}

/// Nearest lattice point of the whole region visible from `p`, ties broken by smallest
/// `(x, y)`. Candidates are tried by increasing distance.
pub fn brute_nvlp_in_region(p: &RatPoint, region: &Region) -> Option<LatticePoint> {
    let (lo, hi) = region.bbox()?;
    let mut candidates: Vec<(Rational, LatticePoint)> = Vec::new();
    let mut x = ceil(&lo.x);
    while x <= floor(&hi.x) {
        let mut y = ceil(&lo.y);
        while y <= floor(&hi.y) {
            let q = LatticePoint::new(x.clone(), y.clone());
            candidates.push((p.squared_distance(&q.to_rat()), q));
            y += 1;
        }
        x += 1;
    }
    candidates.sort();
    candidates
        .into_iter()
        .find(|(_, q)| {
            let qr = q.to_rat();
            region.contains(&qr) && crate::exact::is_visible(p, &qr, region).unwrap_or(false)
        })
        .map(|(_, q)| q)
}

/// Lattice points, unit lattice segments and unit lattice squares contained in a region.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeClosure {
    pub points: BTreeSet<LatticePoint>,
    /// Unit segments by lower-left endpoint and direction (`true` = horizontal).
    pub segments: BTreeSet<(LatticePoint, bool)>,
    /// Unit squares by lower-left corner.
    pub squares: BTreeSet<LatticePoint>,
}

impl LatticeClosure {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn segment_endpoints(start: &LatticePoint, horizontal: bool) -> (RatPoint, RatPoint) {
        let a = start.to_rat();
        let b = if horizontal {
            LatticePoint { x: &start.x + 1, y: start.y.clone() }
        } else {
            LatticePoint { x: start.x.clone(), y: &start.y + 1 }
        };
        (a, b.to_rat())
    }

    fn square_corners(ll: &LatticePoint) -> [RatPoint; 4] {
        let (x, y) = (&ll.x, &ll.y);
        [
            LatticePoint { x: x.clone(), y: y.clone() }.to_rat(),
            LatticePoint { x: x + 1, y: y.clone() }.to_rat(),
            LatticePoint { x: x + 1, y: y + 1 }.to_rat(),
            LatticePoint { x: x.clone(), y: y + 1 }.to_rat(),
        ]
    }
}

/// Whether the closed segment lies in the closed region: cut it at every boundary
/// contact and test each piece's midpoint.
fn segment_inside(a: &RatPoint, b: &RatPoint, region: &Region) -> bool {
    let s = Segment::new(a.clone(), b.clone());
    let mut cuts: BTreeSet<RatPoint> = [a.clone(), b.clone()].into();
    for e in region.edges() {
        match segment_intersection(&s, &e) {
            SegmentIntersection::None => {}
            SegmentIntersection::Point(x) => {
                cuts.insert(x);
            }
            SegmentIntersection::Overlap(x, y) => {
                cuts.insert(x);
                cuts.insert(y);
            }
        }
    }
    let cuts: Vec<_> = cuts.into_iter().collect();
    point_in_region(a, region).is_inside()
        && cuts.windows(2).all(|w| point_in_region(&w[0].midpoint(&w[1]), region).is_inside())
}

/// Parameter interval of `a + t (b - a)`, `t ∈ [0, 1]`, inside a closed convex
/// counter-clockwise polygon.
fn clip(a: &RatPoint, b: &RatPoint, poly: &[RatPoint]) -> Option<(Rational, Rational)> {
    let d = b - a;
    let (mut t0, mut t1) = (Rational::zero(), Rational::one());
    for i in 0..poly.len() {
        let (u, w) = (&poly[i], &poly[(i + 1) % poly.len()]);
        let edge = w - u;
        let num = edge.perp_dot(&(a - u));
        let den = edge.perp_dot(&d);
        if den.is_zero() {
            if num.is_negative() {
                return None;
            }
            continue;
        }
        let t = -num / &den;
        if den.is_positive() {
            t0 = t0.max(t);
        } else {
            t1 = t1.min(t);
        }
        if t0 > t1 {
            return None;
        }
    }
    Some((t0, t1))
}

fn strictly_inside_square(p: &RatPoint, c: &[RatPoint; 4]) -> bool {
    c[0].x < p.x && p.x < c[2].x && c[0].y < p.y && p.y < c[2].y
}

/// A segment reaches the open interior of the unit square at `corners`.
fn reaches_open_square(a: &RatPoint, b: &RatPoint, corners: &[RatPoint; 4]) -> bool {
    match clip(a, b, corners) {
        None => false,
        Some((t0, t1)) => {
            let mid = (&t0 + &t1) / Rational::from_integer(BigInt::from(2));
            strictly_inside_square(&(a + &(b - a).scale(&mid)), corners)
        }
    }
}

/// Exhaustive scan of the region's bounding box.
pub fn lattice_closure(region: &Region) -> LatticeClosure {
    let mut out = LatticeClosure::default();
    let Some((lo, hi)) = region.bbox() else {
        return out;
    };
    let (x0, x1, y0, y1) = (ceil(&lo.x), floor(&hi.x), ceil(&lo.y), floor(&hi.y));
    let mut x = x0.clone();
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            let q = LatticePoint::new(x.clone(), y.clone());
            if region.contains(&q.to_rat()) {
                out.points.insert(q);
            }
            y += 1;
        }
        x += 1;
    }
    for p in &out.points {
        for horizontal in [true, false] {
            let (a, b) = LatticeClosure::segment_endpoints(p, horizontal);
            if out.points.contains(&b.to_lattice().expect("lattice")) && segment_inside(&a, &b, region) {
                out.segments.insert((p.clone(), horizontal));
            }
        }
    }
    for p in &out.points {
        let up = LatticePoint { x: &p.x + 1, y: p.y.clone() };
        let right = LatticePoint { x: p.x.clone(), y: &p.y + 1 };
        let sides = [(p.clone(), true), (p.clone(), false), (right, true), (up, false)];
        if !sides.iter().all(|s| out.segments.contains(s)) {
            continue;
        }
        let corners = LatticeClosure::square_corners(p);
        let (c0, c2) = (&corners[0], &corners[2]);
        let misses_box = |e: &Segment| {
            (e.a.x <= c0.x && e.b.x <= c0.x)
                || (e.a.x >= c2.x && e.b.x >= c2.x)
                || (e.a.y <= c0.y && e.b.y <= c0.y)
                || (e.a.y >= c2.y && e.b.y >= c2.y)
        };
        if region.edges().all(|e| misses_box(&e) || !reaches_open_square(&e.a, &e.b, &corners)) {
            out.squares.insert(p.clone());
        }
    }
    out
}

/// Whether the open segment `pq` meets the interior of the closure: an open unit
/// square, or the relative interior of a unit segment shared by two squares.
pub fn meets_closure_interior(p: &RatPoint, q: &RatPoint, closure: &LatticeClosure) -> bool {
    if p == q {
        return false;
    }
    for sq in &closure.squares {
        if reaches_open_square(p, q, &LatticeClosure::square_corners(sq)) {
            return true;
        }
    }
    let pq = Segment::new(p.clone(), q.clone());
    for (start, horizontal) in &closure.segments {
        let shared = if *horizontal {
            closure.squares.contains(start)
                && closure.squares.contains(&LatticePoint { x: start.x.clone(), y: &start.y - 1 })
        } else {
            closure.squares.contains(start)
                && closure.squares.contains(&LatticePoint { x: &start.x - 1, y: start.y.clone() })
        };
        if !shared {
            continue;
        }
        let (a, b) = LatticeClosure::segment_endpoints(start, *horizontal);
        if let SegmentIntersection::Overlap(..) = segment_intersection(&pq, &Segment::new(a, b)) {
            return true;
        }
    }
    false
}

/// Edges of `edges` cut at every contact with `cutters`, as directed pieces.
fn split_edges(edges: &[Segment], cutters: &[Segment]) -> Vec<Segment> {
    let mut pieces = Vec::new();
    for e in edges {
        let mut cuts: BTreeSet<RatPoint> = [e.a.clone(), e.b.clone()].into();
        for c in cutters {
            match segment_intersection(e, c) {
                SegmentIntersection::None => {}
                SegmentIntersection::Point(x) => {
                    cuts.insert(x);
                }
                SegmentIntersection::Overlap(x, y) => {
                    cuts.insert(x);
                    cuts.insert(y);
                }
            }
        }
        let mut cuts: Vec<_> = cuts.into_iter().collect();
        if cuts.first() != Some(&e.a) {
            cuts.reverse();
        }
        for w in cuts.windows(2) {
            pieces.push(Segment::new(w[0].clone(), w[1].clone()));
        }
    }
    pieces
}

/// Collinear edge of `edges` containing the whole piece, if any.
fn overlapping_edge<'a>(piece: &Segment, edges: &'a [Segment]) -> Option<&'a Segment> {
    edges
        .iter()
        .find(|e| crate::exact::on_segment(&piece.a, &e.a, &e.b) && crate::exact::on_segment(&piece.b, &e.a, &e.b))
}

/// Exact test of `inner ⊆ outer` for closed regular regions.
///
/// * no boundary edges properly cross;
/// * every piece of ∂inner (cut at ∂outer) not lying on ∂outer has its midpoint in outer;
/// * every piece of ∂inner lying on ∂outer is traversed in the same direction, so both
///   interiors are on the same side;
/// * every piece of ∂outer not lying on ∂inner has its midpoint outside the interior of inner.
pub fn check_inclusion(inner: &Region, outer: &Region) -> Result<(), Box<Witness>> {
    let ei: Vec<Segment> = inner.edges().collect();
    let eo: Vec<Segment> = outer.edges().collect();
    for a in &ei {
        for b in &eo {
            if properly_cross(a, b) {
                let p = match segment_intersection(a, b) {
                    SegmentIntersection::Point(p) => p,
                    _ => a.a.clone(),
                };
                let mut w = Witness::at(p, "boundaries cross");
                w.edge = Some(a.clone());
                return Err(Box::new(w));
            }
        }
    }
    for piece in split_edges(&ei, &eo) {
        match overlapping_edge(&piece, &eo) {
            Some(e) => {
                if (&piece.b - &piece.a).dot(&(&e.b - &e.a)).is_negative() {
                    let mut w = Witness::at(piece.midpoint(), "shared boundary with interiors on opposite sides");
                    w.edge = Some(piece);
                    return Err(Box::new(w));
                }
            }
            None => {
                let m = piece.midpoint();
                let loc = point_in_region(&m, outer);
                if loc == Location::Exterior {
                    let mut w = Witness::at(m, "inner boundary outside outer region");
                    w.edge = Some(piece);
                    w.classification = Some(loc);
                    return Err(Box::new(w));
                }
            }
        }
    }
    for piece in split_edges(&eo, &ei) {
        if overlapping_edge(&piece, &ei).is_some() {
            continue;
        }
        let m = piece.midpoint();
        let loc = point_in_region(&m, inner);
        if loc == Location::Interior {
            let mut w = Witness::at(m, "outer boundary inside inner region");
            w.edge = Some(piece);
            w.classification = Some(loc);
            return Err(Box::new(w));
        }
    }
    Ok(())
}

/// Which distance the sampled Hausdorff check measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HausdorffMode {
    /// `small` is an inner rounding of `big`: samples of `big \ small` must be close to ∂big.
    Inner,
    /// `big` is an outer rounding of `small`: samples of `big \ small` must be close to `small`.
    Outer,
}

/// Closed-membership flags of the samples `x_0 + i·step` on the horizontal line `y`.
fn row_membership(region: &Region, y: &Rational, xs: &[Rational]) -> Vec<bool> {
    let mut crossings: Vec<Rational> = Vec::new();
    let mut boundary: Vec<(Rational, Rational)> = Vec::new();
    for e in region.edges() {
        let (ya, yb) = (&e.a.y, &e.b.y);
        if ya == yb {
            if ya == y {
                let (l, h) = if e.a.x < e.b.x { (&e.a.x, &e.b.x) } else { (&e.b.x, &e.a.x) };
                boundary.push((l.clone(), h.clone()));
            }
            continue;
        }
        let (lo, hi) = if ya < yb { (ya, yb) } else { (yb, ya) };
        if y < lo || y > hi {
            continue;
        }
        let x = &e.a.x + (&e.b.x - &e.a.x) * (y - ya) / (yb - ya);
        boundary.push((x.clone(), x.clone()));
        // half-open rule: count the lower endpoint, not the upper one
        if y >= lo && y < hi {
            crossings.push(x);
        }
    }
    crossings.sort();
    let mut k = 0;
    xs.iter()
        .map(|x| {
            while k < crossings.len() && &crossings[k] < x {
                k += 1;
            }
            k % 2 == 1 || boundary.iter().any(|(l, h)| l <= x && x <= h)
        })
        .collect()
}

/// Edges bucketed on a grid of side 2, each stored in every bucket its bounding box
/// widened by 2 touches. A point closer than √2 to an edge finds it in its own bucket.
struct EdgeGrid {
    buckets: HashMap<(BigInt, BigInt), Vec<usize>>,
    edges: Vec<Segment>,
}

impl EdgeGrid {
    fn new(edges: Vec<Segment>) -> Self {
        let mut buckets: HashMap<(BigInt, BigInt), Vec<usize>> = HashMap::new();
        let two = Rational::from_integer(BigInt::from(2));
        for (i, e) in edges.iter().enumerate() {
            let (x0, x1) = if e.a.x < e.b.x { (&e.a.x, &e.b.x) } else { (&e.b.x, &e.a.x) };
            let (y0, y1) = if e.a.y < e.b.y { (&e.a.y, &e.b.y) } else { (&e.b.y, &e.a.y) };
            let bx0 = floor(&((x0 - &two) / &two));
            let bx1 = floor(&((x1 + &two) / &two));
            let by0 = floor(&((y0 - &two) / &two));
            let by1 = floor(&((y1 + &two) / &two));
            let mut bx = bx0;
            while bx <= bx1 {
                let mut by = by0.clone();
                while by <= by1 {
                    buckets.entry((bx.clone(), by.clone())).or_default().push(i);
                    by += 1;
                }
                bx += 1;
            }
        }
        EdgeGrid { buckets, edges }
    }

    /// Smallest squared distance among edges in the point's bucket, stopping early
    /// once one is below `bound`.
    fn near(&self, p: &RatPoint, bound: &Rational) -> Option<Rational> {
        let two = Rational::from_integer(BigInt::from(2));
        let key = (floor(&(&p.x / &two)), floor(&(&p.y / &two)));
        let mut best: Option<Rational> = None;
        for &i in self.buckets.get(&key).into_iter().flatten() {
            let d = squared_distance(p, &self.edges[i]);
            if &d < bound {
                return Some(d);
            }
            if best.as_ref().is_none_or(|b| &d < b) {
                best = Some(d);
            }
        }
        best
    }
}

/// Samples a grid of the given spacing over `big`'s bounding box. Every sample in `big`
/// but not in `small` must be at squared distance below 2 from ∂big (inner mode) or
/// from `small` (outer mode).
pub fn check_hausdorff(
    small: &Region,
    big: &Region,
    spacing: &Rational,
    mode: HausdorffMode,
) -> Result<(), Box<Witness>> {
    check_inclusion(small, big).map_err(|mut w| {
        w.context = format!("hausdorff precondition small ⊆ big failed: {}", w.context);
        w
    })?;
    let Some((lo, hi)) = big.bbox() else {
        return Ok(());
    };
    let target: Vec<Segment> = match mode {
        HausdorffMode::Inner => big.edges().collect(),
        HausdorffMode::Outer => small.edges().collect(),
    };
    let grid = EdgeGrid::new(target);
    let two = Rational::from_integer(BigInt::from(2));
    let start = |v: &Rational| Rational::from_integer(ceil(&(v / spacing))) * spacing;
    let mut xs = Vec::new();
    let mut x = start(&lo.x);
    while x <= hi.x {
        xs.push(x.clone());
        x += spacing;
    }
    let mut y = start(&lo.y);
    while y <= hi.y {
        let in_big = row_membership(big, &y, &xs);
        let in_small = row_membership(small, &y, &xs);
        for (i, x) in xs.iter().enumerate() {
            if !in_big[i] || in_small[i] {
                continue;
            }
            let q = RatPoint::new(x.clone(), y.clone());
            let d = grid.near(&q, &two);
            if d.as_ref().is_none_or(|d| d >= &two) {
                let mut w = Witness::at(q, "sample farther than √2");
                w.measured = d;
                return Err(Box::new(w));
            }
        }
        y += spacing;
    }
    Ok(())
}

/// Closed-set truth value of `op` at each sample.
pub fn brute_boolean(a: &Region, b: &Region, op: BooleanOp, samples: &[RatPoint]) -> Vec<bool> {
    samples.iter().map(|p| op.apply(a.contains(p), b.contains(p))).collect()
}

/// Samples are strictly inside or outside both operands (off every boundary).
pub fn off_boundary(p: &RatPoint, regions: &[&Region]) -> bool {
    regions.iter().all(|r| point_in_region(p, r) != Location::Boundary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Ring};

    fn square(x0: i64, y0: i64, x1: i64, y1: i64) -> Region {
        Region::from_rings([Ring::from_ints(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1)])])
    }

    fn e2_cell() -> ConvexCell {
        ConvexCell::from_ring(Ring::new(vec![
            RatPoint::int(0, 0),
            RatPoint::int(5, 0),
            RatPoint::new(rat(5, 2), rat(5, 2)),
        ]))
        .unwrap()
    }

    #[test]
    fn brute_nvlp_examples() {
        let c = e2_cell();
        assert_eq!(brute_nvlp(&RatPoint::int(5, 0), &c), Some(LatticePoint::new(5, 0)));
        assert_eq!(brute_nvlp(&RatPoint::new(rat(5, 2), rat(5, 2)), &c), Some(LatticePoint::new(2, 2)));
        let sliver = ConvexCell::from_ring(Ring::new(vec![
            RatPoint::new(rat(1, 3), rat(1, 4)),
            RatPoint::new(rat(2, 3), rat(1, 4)),
            RatPoint::new(rat(1, 2), rat(3, 4)),
        ]))
        .unwrap();
        assert_eq!(brute_nvlp(&RatPoint::new(rat(1, 2), rat(3, 4)), &sliver), None);
    }

    #[test]
    fn lattice_closure_examples() {
        let unit = lattice_closure(&square(0, 0, 1, 1));
        assert_eq!((unit.points.len(), unit.segments.len(), unit.squares.len()), (4, 4, 1));
        let rect = lattice_closure(&square(0, 0, 2, 1));
        assert_eq!((rect.points.len(), rect.segments.len(), rect.squares.len()), (6, 7, 2));
        let sliver = Region::from_rings([Ring::new(vec![
            RatPoint::new(rat(1, 3), rat(1, 4)),
            RatPoint::new(rat(2, 3), rat(1, 4)),
            RatPoint::new(rat(1, 2), rat(3, 4)),
        ])]);
        assert!(lattice_closure(&sliver).is_empty());
        // diagonal triangle: its hypotenuse cuts through the open unit squares
        let tri = Region::from_rings([Ring::from_ints(&[(0, 0), (2, 0), (0, 2)])]);
        let c = lattice_closure(&tri);
        assert_eq!(c.squares.len(), 1);
        assert_eq!(c.points.len(), 6);
    }

    #[test]
    fn closure_interior_meets() {
        let c = lattice_closure(&square(0, 0, 2, 2));
        assert!(meets_closure_interior(&RatPoint::new(rat(1, 2), rat(1, 2)), &RatPoint::int(3, 3), &c));
        assert!(!meets_closure_interior(&RatPoint::int(0, 0), &RatPoint::int(-1, -1), &c));
        // along the outer boundary: not interior
        assert!(!meets_closure_interior(&RatPoint::int(0, 0), &RatPoint::int(2, 0), &c));
        // along the shared middle edge: interior
        assert!(meets_closure_interior(&RatPoint::int(1, 0), &RatPoint::int(1, 2), &c));
    }

    #[test]
    fn inclusion_examples() {
        let a = square(0, 0, 4, 4);
        assert!(check_inclusion(&a, &a).is_ok());
        let w = check_inclusion(&square(0, 0, 1, 1), &square(5, 5, 6, 6)).unwrap_err();
        assert!(!square(5, 5, 6, 6).contains(&w.point));
        assert!(check_inclusion(&square(1, 1, 2, 2), &a).is_ok());
        assert!(check_inclusion(&a, &square(1, 1, 2, 2)).is_err());
        // a hole filled exactly by the candidate inner region
        let frame = Region::from_rings([
            Ring::from_ints(&[(0, 0), (3, 0), (3, 3), (0, 3)]),
            Ring::from_ints(&[(1, 1), (1, 2), (2, 2), (2, 1)]),
        ]);
        assert!(check_inclusion(&square(1, 1, 2, 2), &frame).is_err());
        assert!(check_inclusion(&frame, &square(0, 0, 3, 3)).is_ok());
        assert!(check_inclusion(&square(0, 0, 3, 3), &frame).is_err());
        assert!(check_inclusion(&Region::empty(), &frame).is_ok());
    }

    #[test]
    fn hausdorff_examples() {
        let a = square(0, 0, 4, 4);
        let eighth = rat(1, 8);
        assert!(check_hausdorff(&a, &a, &eighth, HausdorffMode::Inner).is_ok());
        assert!(check_hausdorff(&a, &a, &eighth, HausdorffMode::Outer).is_ok());
        let dilated = square(-5, -5, 9, 9);
        let w = check_hausdorff(&a, &dilated, &eighth, HausdorffMode::Outer).unwrap_err();
        assert!(dilated.contains(&w.point) && !a.contains(&w.point));
        assert!(check_hausdorff(&square(1, 1, 3, 3), &a, &eighth, HausdorffMode::Inner).is_ok());
        // the corner (0,0) is exactly √2 away from [1,3]²
        assert!(check_hausdorff(&square(1, 1, 3, 3), &a, &eighth, HausdorffMode::Outer).is_err());
        assert!(check_hausdorff(&square(1, 1, 3, 3), &square(1, 1, 4, 3), &eighth, HausdorffMode::Outer).is_ok());
        assert!(check_hausdorff(&square(2, 2, 3, 3), &square(0, 0, 6, 6), &eighth, HausdorffMode::Inner).is_err());
    }

    #[test]
    fn brute_boolean_examples() {
        let a = square(0, 0, 2, 2);
        let b = square(5, 5, 7, 7);
        let samples: Vec<RatPoint> = (0..8).map(|i| RatPoint::new(rat(2 * i + 1, 2), rat(2 * i + 1, 2))).collect();
        assert!(brute_boolean(&a, &b, BooleanOp::Intersection, &samples).iter().all(|x| !x));
        assert!(brute_boolean(&a, &a, BooleanOp::Difference, &samples).iter().all(|x| !x));
    }
}
