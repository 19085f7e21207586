use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::point::{int, sign, RatPoint, Rational};
use super::predicates::{
    cross, on_segment, orientation, segment_intersection, Orientation, Segment, SegmentIntersection,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingOrientation {
    /// Counter-clockwise: bounds filled area.
    Ccw,
    /// Clockwise: bounds a hole.
    Cw,
    /// Zero signed area (segments, collapsed rings).
    Degenerate,
}

/// Closed polygonal ring. The interior of the region lies to the left of every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vertices: Vec<RatPoint>,
}

impl Ring {
    pub fn new(vertices: Vec<RatPoint>) -> Self {
        Ring { vertices }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        Ring::new(coords.iter().map(|&(x, y)| RatPoint::int(x, y)).collect())
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<RatPoint> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &RatPoint {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn prev(&self, i: usize) -> &RatPoint {
        let n = self.vertices.len();
        &self.vertices[(i + n - 1) % n]
    }

    pub fn next(&self, i: usize) -> &RatPoint {
        &self.vertices[(i + 1) % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(self.vertex(i).clone(), self.next(i).clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    /// Twice the signed area.
    pub fn signed_area2(&self) -> Rational {
        let n = self.vertices.len();
        let mut acc = Rational::zero();
        for i in 0..n {
            acc += self.vertices[i].perp_dot(&self.vertices[(i + 1) % n]);
        }
        acc
    }

    pub fn signed_area(&self) -> Rational {
        self.signed_area2() / int(2)
    }

    pub fn orientation(&self) -> RingOrientation {
        match sign(&self.signed_area2()) {
            1 => RingOrientation::Ccw,
            -1 => RingOrientation::Cw,
            _ => RingOrientation::Degenerate,
        }
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(RatPoint::is_lattice)
    }

    pub fn reversed(&self) -> Ring {
        let mut v = self.vertices.clone();
        v.reverse();
        Ring::new(v)
    }

    /// Turn at vertex `i`, relative to an interior on the left.
    pub fn turn(&self, i: usize) -> Orientation {
        orientation(self.prev(i), self.vertex(i), self.next(i))
    }

    pub fn is_convex(&self) -> bool {
        (0..self.len()).all(|i| self.turn(i) != Orientation::Right)
    }

    /// Drops repeated and collinear vertices, then rotates the lexicographically
    /// smallest vertex to the front. Rings with fewer than three vertices are only rotated.
    pub fn canonical(&self) -> Ring {
        let mut v = self.vertices.clone();
        v.dedup();
        while v.len() > 1 && v.first() == v.last() {
            v.pop();
        }
        if v.len() >= 3 {
            let mut changed = true;
            while changed && v.len() >= 3 {
                changed = false;
                let n = v.len();
                for i in 0..n {
                    let (a, b, c) = (&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n]);
                    if a == b || cross(a, b, c).is_zero() {
                        v.remove(i);
                        changed = true;
                        break;
                    }
                }
            }
        }
        if let Some(start) = (0..v.len()).min_by(|&a, &b| v[a].cmp(&v[b])) {
            v.rotate_left(start);
        }
        Ring::new(v)
    }

    pub fn min_vertex(&self) -> Option<&RatPoint> {
        self.vertices.iter().min()
    }

    pub fn on_boundary(&self, p: &RatPoint) -> bool {
        self.edges().any(|e| on_segment(p, &e.a, &e.b))
    }

    /// Winding number of the ring around `p` (p must not be on the ring).
    pub fn winding(&self, p: &RatPoint) -> i64 {
        let mut w = 0;
        for e in self.edges() {
            w += winding_contribution(&e.a, &e.b, p);
        }
        w
    }
}

pub(crate) fn winding_contribution(a: &RatPoint, b: &RatPoint, p: &RatPoint) -> i64 {
    if a.y <= p.y {
        if b.y > p.y && cross(a, b, p).is_positive() {
            return 1;
        }
    } else if b.y <= p.y && cross(a, b, p).is_negative() {
        return -1;
    }
    0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

impl Location {
    /// Closed membership.
    pub fn is_inside(self) -> bool {
        self != Location::Exterior
    }
}

/// A collection of rings with nested holes. Filled rings are counter-clockwise,
/// holes clockwise; `parents[i]` is the smallest ring enclosing ring `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Region {
    rings: Vec<Ring>,
    parents: Vec<Option<usize>>,
}

impl Region {
    pub fn empty() -> Self {
        Region::default()
    }

    /// Canonicalizes every ring, sorts rings by their smallest vertex and recomputes nesting.
    /// Rings that collapse to nothing are dropped; segments are kept.
    pub fn from_rings(rings: impl IntoIterator<Item = Ring>) -> Self {
        let mut rings: Vec<Ring> = rings.into_iter().map(|r| r.canonical()).filter(|r| r.len() >= 2).collect();
        rings.sort_by(|a, b| a.min_vertex().cmp(&b.min_vertex()).then_with(|| a.vertices().cmp(b.vertices())));
        let parents = compute_parents(&rings);
        Region { rings, parents }
    }

    pub fn rings(&self) -> &[Ring] {
        &self.rings
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parents
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        self.rings.iter().flat_map(|r| r.edges())
    }

    pub fn edge_count(&self) -> usize {
        self.rings.iter().map(Ring::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &RatPoint> + '_ {
        self.rings.iter().flat_map(|r| r.vertices().iter())
    }

    /// Number of distinct vertex positions.
    pub fn vertex_count(&self) -> usize {
        self.vertices().collect::<BTreeSet<_>>().len()
    }

    pub fn area(&self) -> Rational {
        self.rings.iter().map(Ring::signed_area).sum()
    }

    pub fn is_lattice(&self) -> bool {
        self.rings.iter().all(Ring::is_lattice)
    }

    pub fn bbox(&self) -> Option<(RatPoint, RatPoint)> {
        let mut it = self.vertices();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for p in it {
            if p.x < lo.x {
                lo.x = p.x.clone();
            }
            if p.y < lo.y {
                lo.y = p.y.clone();
            }
            if p.x > hi.x {
                hi.x = p.x.clone();
            }
            if p.y > hi.y {
                hi.y = p.y.clone();
            }
        }
        Some((lo, hi))
    }

    pub fn locate(&self, p: &RatPoint) -> Location {
        point_in_region(p, self)
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.locate(p).is_inside()
    }

    /// Drops every ring with zero area. Hole rings are only dropped together with
    /// their own area, so the total area is unchanged.
    pub fn without_zero_area_rings(&self) -> Region {
        Region::from_rings(self.rings.iter().filter(|r| !r.signed_area2().is_zero()).cloned())
    }
}

fn ring_inside(inner: &Ring, outer: &Ring) -> bool {
    let probe = inner
        .vertices()
        .iter()
        .find(|p| !outer.on_boundary(p))
        .cloned()
        .or_else(|| inner.edges().map(|e| e.midpoint()).find(|m| !outer.on_boundary(m)));
    match probe {
        Some(p) => outer.winding(&p) != 0,
        // Every probe lies on `outer`: the rings trace the same boundary.
        None => false,
    }
}

fn ring_bbox(ring: &Ring) -> Option<(RatPoint, RatPoint)> {
    let (first, rest) = ring.vertices().split_first()?;
    let (mut lo, mut hi) = (first.clone(), first.clone());
    for p in rest {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    Some((lo, hi))
}

fn compute_parents(rings: &[Ring]) -> Vec<Option<usize>> {
    let areas: Vec<Rational> = rings.iter().map(|r| r.signed_area2().abs()).collect();
    let boxes: Vec<Option<(RatPoint, RatPoint)>> = rings.iter().map(ring_bbox).collect();
    let box_inside = |i: usize, j: usize| match (&boxes[i], &boxes[j]) {
        (Some((lo_i, hi_i)), Some((lo_j, hi_j))) => {
            lo_j.x <= lo_i.x && lo_j.y <= lo_i.y && hi_i.x <= hi_j.x && hi_i.y <= hi_j.y
        }
        _ => false,
    };
    (0..rings.len())
        .map(|i| {
            (0..rings.len())
                .filter(|&j| j != i && areas[j] > areas[i] && box_inside(i, j))
                .filter(|&j| ring_inside(&rings[i], &rings[j]))
                .min_by(|&a, &b| areas[a].cmp(&areas[b]))
        })
        .collect()
}

/// Exact closed-set classification by winding number.
pub fn point_in_region(p: &RatPoint, region: &Region) -> Location {
    let mut w = 0;
    for ring in region.rings() {
        for e in ring.edges() {
            if on_segment(p, &e.a, &e.b) {
                return Location::Boundary;
            }
            w += winding_contribution(&e.a, &e.b, p);
        }
    }
    if w != 0 {
        Location::Interior
    } else {
        Location::Exterior
    }
}

/// Whether the whole segment `pq` lies in the closed region.
///
/// The segment is cut at every contact with the boundary; each open piece is then
/// either entirely inside or entirely outside, and its midpoint decides.
pub fn is_visible(p: &RatPoint, q: &RatPoint, region: &Region) -> Result<bool> {
    for x in [p, q] {
        if !region.contains(x) {
            return Err(Error::PointNotInRegion(Box::new(x.clone())));
        }
    }
    if p == q {
        return Ok(true);
    }
    let pq = Segment::new(p.clone(), q.clone());
    let mut cuts: BTreeSet<RatPoint> = BTreeSet::new();
    cuts.insert(p.clone());
    cuts.insert(q.clone());
    for e in region.edges() {
        match segment_intersection(&pq, &e) {
            SegmentIntersection::None => {}
            SegmentIntersection::Point(x) => {
                cuts.insert(x);
            }
            SegmentIntersection::Overlap(a, b) => {
                cuts.insert(a);
                cuts.insert(b);
            }
        }
    }
    let cuts: Vec<_> = cuts.into_iter().collect();
    Ok(cuts.windows(2).all(|w| region.contains(&w[0].midpoint(&w[1]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::point::rat;

    fn unit_square() -> Region {
        Region::from_rings([Ring::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)])])
    }

    #[test]
    fn classify_unit_square() {
        let sq = unit_square();
        assert_eq!(sq.locate(&RatPoint::new(rat(1, 2), rat(1, 2))), Location::Interior);
        assert_eq!(sq.locate(&RatPoint::new(int(1), rat(1, 2))), Location::Boundary);
        assert_eq!(sq.locate(&RatPoint::int(2, 2)), Location::Exterior);
    }

    #[test]
    fn canonical_ring_collapses_collinear_and_rotates() {
        let r = Ring::from_ints(&[(2, 0), (2, 2), (0, 2), (0, 0), (1, 0)]).canonical();
        assert_eq!(r, Ring::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]));
        let needle = Ring::from_ints(&[(0, 0), (3, 0), (0, 0)]).canonical();
        assert!(needle.len() < 3);
    }

    #[test]
    fn nesting_of_hole_and_island() {
        let r = Region::from_rings([
            Ring::from_ints(&[(0, 0), (10, 0), (10, 10), (0, 10)]),
            Ring::from_ints(&[(2, 2), (2, 8), (8, 8), (8, 2)]),
            Ring::from_ints(&[(4, 4), (6, 4), (6, 6), (4, 6)]),
        ]);
        assert_eq!(r.parents(), &[None, Some(0), Some(1)]);
        assert_eq!(r.area(), int(100 - 36 + 4));
        assert_eq!(r.locate(&RatPoint::int(3, 3)), Location::Exterior);
        assert_eq!(r.locate(&RatPoint::int(5, 5)), Location::Interior);
    }

    #[test]
    fn visibility_in_u_shape() {
        let u =
            Region::from_rings([Ring::from_ints(&[(0, 0), (6, 0), (6, 6), (4, 6), (4, 2), (2, 2), (2, 6), (0, 6)])]);
        assert!(!is_visible(&RatPoint::int(1, 5), &RatPoint::int(5, 5), &u).unwrap());
        assert!(is_visible(&RatPoint::int(1, 1), &RatPoint::int(5, 1), &u).unwrap());
        // grazing the notch corner is allowed
        assert!(is_visible(&RatPoint::int(0, 0), &RatPoint::int(4, 2), &u).unwrap());
        assert!(is_visible(&RatPoint::int(1, 5), &RatPoint::int(1, 5), &u).unwrap());
        assert_eq!(
            is_visible(&RatPoint::int(3, 5), &RatPoint::int(1, 1), &u),
            Err(Error::PointNotInRegion(Box::new(RatPoint::int(3, 5))))
        );
    }

    #[test]
    fn convex_square_visibility() {
        let sq = unit_square();
        assert!(is_visible(&RatPoint::int(0, 0), &RatPoint::int(1, 1), &sq).unwrap());
    }
}
