//! Overlay of two lattice regions into an exact Boolean result with vertex origins.

pub(crate) mod overlay;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::pairs::overlapping_cross_pairs;
use crate::exact::{
    complement_in_universe, properly_cross, validate_region, Orientation, RatPoint, Region, Ring, Segment, UniverseBox,
    UNIVERSE_MARGIN,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    OriginalA,
    OriginalB,
    Crossing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convexity {
    Convex,
    Reflex,
    Flat,
}

impl From<Orientation> for Convexity {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::Left => Convexity::Convex,
            Orientation::Right => Convexity::Reflex,
            Orientation::Collinear => Convexity::Flat,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactVertex {
    pub position: RatPoint,
    pub kind: VertexKind,
    pub convexity: Convexity,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OverlayStats {
    /// Distinct non-lattice vertices of the result.
    pub k: usize,
    /// Pairs of (A edge, B edge) crossing at a point interior to both.
    pub h: usize,
    /// Total number of input edges.
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BooleanOp {
    Intersection,
    Union,
    Difference,
}

impl BooleanOp {
    pub fn name(self) -> &'static str {
        match self {
            BooleanOp::Intersection => "intersection",
            BooleanOp::Union => "union",
            BooleanOp::Difference => "difference",
        }
    }

    /// Closed-regularized truth table on membership flags.
    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BooleanOp::Intersection => a && b,
            BooleanOp::Union => a || b,
            BooleanOp::Difference => a && !b,
        }
    }
}

/// Exact Boolean result: a region with rational vertices, each annotated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRegion {
    region: Region,
    annotations: Vec<Vec<ExactVertex>>,
    pub stats: OverlayStats,
}

impl ExactRegion {
    /// Annotates a region. Vertices found among `a_vertices` are `OriginalA`, then
    /// `b_vertices`, otherwise `Crossing`.
    pub fn annotate(
        region: Region,
        a_vertices: &BTreeSet<RatPoint>,
        b_vertices: &BTreeSet<RatPoint>,
        stats: OverlayStats,
    ) -> ExactRegion {
        let annotations = region
            .rings()
            .iter()
            .map(|ring| {
                (0..ring.len())
                    .map(|i| {
                        let p = ring.vertex(i);
                        let kind = if a_vertices.contains(p) {
                            VertexKind::OriginalA
                        } else if b_vertices.contains(p) {
                            VertexKind::OriginalB
                        } else {
                            VertexKind::Crossing
                        };
                        ExactVertex { position: p.clone(), kind, convexity: ring.turn(i).into() }
                    })
                    .collect()
            })
            .collect();
        let mut stats = stats;
        stats.k = region.vertices().filter(|p| !p.is_lattice()).collect::<BTreeSet<_>>().len();
        ExactRegion { region, annotations, stats }
    }

    /// Wraps a lattice region (every vertex original, no crossings).
    pub fn from_lattice(region: Region) -> ExactRegion {
        let verts: BTreeSet<RatPoint> = region.vertices().cloned().collect();
        let n = region.edge_count();
        ExactRegion::annotate(region, &verts, &BTreeSet::new(), OverlayStats { k: 0, h: 0, n })
    }

    /// Wraps an arbitrary region, computing convexity and the non-lattice vertex count.
    pub fn from_region(region: Region) -> ExactRegion {
        ExactRegion::from_lattice(region)
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn into_region(self) -> Region {
        self.region
    }

    pub fn vertex(&self, ring: usize, i: usize) -> &ExactVertex {
        let r = &self.annotations[ring];
        &r[i % r.len()]
    }

    pub fn ring_vertices(&self, ring: usize) -> &[ExactVertex] {
        &self.annotations[ring]
    }

    pub fn all_vertices(&self) -> impl Iterator<Item = &ExactVertex> + '_ {
        self.annotations.iter().flatten()
    }

    pub fn reflex_vertices(&self) -> impl Iterator<Item = &ExactVertex> + '_ {
        self.all_vertices().filter(|v| v.convexity == Convexity::Reflex)
    }

    pub fn is_empty(&self) -> bool {
        self.region.is_empty()
    }
}

pub(crate) fn ensure_valid(region: &Region) -> Result<()> {
    let fatal: Vec<_> = validate_region(region).into_iter().filter(|v| v.is_fatal()).collect();
    if fatal.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidRegion(fatal))
    }
}

pub(crate) fn region_from_cycles(cycles: Vec<Vec<RatPoint>>) -> Region {
    Region::from_rings(cycles.into_iter().map(Ring::new))
}

/// Regularized overlay of two regions under `op`, without validation or annotation.
pub(crate) fn overlay_regions(a: &Region, b: &Region, op: BooleanOp) -> Region {
    let ops = [a.edges().collect(), b.edges().collect()];
    region_from_cycles(overlay::overlay(&ops, |w| op.apply(w[0] != 0, w[1] != 0)))
}

/// Closure of the points with positive winding number over `rings`.
pub(crate) fn normalize_positive(rings: &[Ring]) -> Region {
    let edges: Vec<Segment> = rings.iter().flat_map(|r| r.edges()).collect();
    region_from_cycles(overlay::overlay(&[edges], |w| w[0] > 0))
}

/// Cleans up a set of rings that may touch or fold over themselves into a canonical
/// region: the closure of the points with non-zero winding number.
pub(crate) fn normalize(rings: &[Ring]) -> Region {
    let edges: Vec<Segment> = rings.iter().flat_map(|r| r.edges()).collect();
    region_from_cycles(overlay::overlay(&[edges], |w| w[0] != 0))
}

pub(crate) fn crossing_pairs(a: &Region, b: &Region) -> usize {
    let ea: Vec<Segment> = a.edges().collect();
    let eb: Vec<Segment> = b.edges().collect();
    overlapping_cross_pairs(&ea, &eb).into_iter().filter(|&(i, j)| properly_cross(&ea[i], &eb[j])).count()
}

fn exact_op(a: &Region, b: &Region, op: BooleanOp) -> ExactRegion {
    let region = overlay_regions(a, b, op);
    let stats = OverlayStats { k: 0, h: crossing_pairs(a, b), n: a.edge_count() + b.edge_count() };
    let av: BTreeSet<RatPoint> = a.vertices().cloned().collect();
    let bv: BTreeSet<RatPoint> = b.vertices().cloned().collect();
    ExactRegion::annotate(region, &av, &bv, stats)
}

/// closure(A° ∩ B°) with vertex origins and crossing statistics.
pub fn exact_intersection(a: &Region, b: &Region) -> Result<ExactRegion> {
    ensure_valid(a)?;
    ensure_valid(b)?;
    Ok(exact_op(a, b, BooleanOp::Intersection))
}

/// Boolean operation reduced to intersections and complements inside `universe`:
/// `A ∪ B = (Aᶜ ∩ Bᶜ)ᶜ` and `A \ B = A ∩ Bᶜ`.
pub fn exact_boolean(a: &Region, b: &Region, op: BooleanOp, universe: &UniverseBox) -> Result<ExactRegion> {
    ensure_valid(a)?;
    ensure_valid(b)?;
    for r in [a, b] {
        if !universe.holds(r, UNIVERSE_MARGIN) {
            return Err(Error::MarginViolation { margin: UNIVERSE_MARGIN });
        }
    }
    match op {
        BooleanOp::Intersection => Ok(exact_op(a, b, op)),
        BooleanOp::Union => {
            let ac = complement_in_universe(a, universe)?;
            let bc = complement_in_universe(b, universe)?;
            let inner = exact_op(&ac, &bc, BooleanOp::Intersection);
            let region = complement_in_universe(inner.region(), universe)?;
            let stats = OverlayStats { k: 0, h: crossing_pairs(a, b), n: a.edge_count() + b.edge_count() };
            let av: BTreeSet<RatPoint> = a.vertices().cloned().collect();
            let bv: BTreeSet<RatPoint> = b.vertices().cloned().collect();
            Ok(ExactRegion::annotate(region, &av, &bv, stats))
        }
        BooleanOp::Difference => {
            let bc = complement_in_universe(b, universe)?;
            let r = exact_op(a, &bc, BooleanOp::Intersection);
            let stats = OverlayStats { k: 0, h: crossing_pairs(a, b), n: a.edge_count() + b.edge_count() };
            let av: BTreeSet<RatPoint> = a.vertices().cloned().collect();
            let bv: BTreeSet<RatPoint> = b.vertices().cloned().collect();
            Ok(ExactRegion::annotate(r.into_region(), &av, &bv, stats))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn square(x0: i64, y0: i64, x1: i64, y1: i64) -> Region {
        Region::from_rings([Ring::from_ints(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1)])])
    }

    fn tri(c: &[(i64, i64)]) -> Region {
        Region::from_rings([Ring::from_ints(c)])
    }

    #[test]
    fn overlapping_squares() {
        let p = exact_intersection(&square(0, 0, 4, 4), &square(2, 2, 6, 6)).unwrap();
        assert_eq!(p.region(), &square(2, 2, 4, 4));
        assert_eq!(p.stats.k, 0);
        assert!(p.all_vertices().all(|v| v.position.is_lattice()));
        // the two crossings are lattice points
        assert_eq!(p.stats.h, 2);
    }

    #[test]
    fn triangles_meet_at_a_rational_crossing() {
        let a = tri(&[(0, 0), (5, 0), (0, 5)]);
        let b = tri(&[(0, 0), (5, 0), (5, 5)]);
        let p = exact_intersection(&a, &b).unwrap();
        let apex = RatPoint::new(rat(5, 2), rat(5, 2));
        assert_eq!(
            p.region(),
            &Region::from_rings([Ring::new(vec![RatPoint::int(0, 0), RatPoint::int(5, 0), apex.clone()])])
        );
        assert_eq!(p.stats.k, 1);
        let v = p.all_vertices().find(|v| v.position == apex).unwrap();
        assert_eq!(v.kind, VertexKind::Crossing);
        assert_eq!(v.convexity, Convexity::Convex);
        assert_eq!(p.region().area(), rat(25, 4));
    }

    #[test]
    fn disjoint_squares() {
        let p = exact_intersection(&square(0, 0, 1, 1), &square(3, 3, 4, 4)).unwrap();
        assert!(p.is_empty());
        assert_eq!((p.stats.k, p.stats.h), (0, 0));
    }

    #[test]
    fn boolean_examples() {
        let a = square(0, 0, 1, 1);
        let b = square(3, 3, 4, 4);
        let bx = UniverseBox::around(&[&a, &b], 3);
        let u = exact_boolean(&a, &b, BooleanOp::Union, &bx).unwrap();
        assert_eq!(u.region().rings().len(), 2);
        assert_eq!(u.stats.k, 0);
        let d = exact_boolean(&a, &a, BooleanOp::Difference, &bx).unwrap();
        assert!(d.is_empty());

        let t1 = tri(&[(0, 0), (5, 0), (0, 5)]);
        let t2 = tri(&[(0, 0), (5, 0), (5, 5)]);
        let bx = UniverseBox::around(&[&t1, &t2], 3);
        let u = exact_boolean(&t1, &t2, BooleanOp::Union, &bx).unwrap();
        assert_eq!(u.region().area(), int(25) - rat(25, 4));
        assert_eq!(u.reflex_vertices().count(), 1);
    }

    #[test]
    fn invalid_input_is_rejected() {
        let bow = tri(&[(0, 0), (2, 2), (2, 0), (0, 2)]);
        assert!(matches!(exact_intersection(&bow, &square(0, 0, 1, 1)), Err(Error::InvalidRegion(_))));
    }
}
