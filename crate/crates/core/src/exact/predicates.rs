use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::point::{sign, RatPoint, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

/// Twice the signed area of triangle abc.
pub fn cross(a: &RatPoint, b: &RatPoint, c: &RatPoint) -> Rational {
    (b - a).perp_dot(&(c - a))
}

/// Sign of the determinant of (b − a, c − a).
pub fn orientation(a: &RatPoint, b: &RatPoint, c: &RatPoint) -> Orientation {
    match sign(&cross(a, b, c)) {
        1 => Orientation::Left,
        -1 => Orientation::Right,
        _ => Orientation::Collinear,
    }
}

/// Closed straight segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: RatPoint,
    pub b: RatPoint,
}

impl Segment {
    pub fn new(a: RatPoint, b: RatPoint) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        on_segment(p, &self.a, &self.b)
    }

    pub fn midpoint(&self) -> RatPoint {
        self.a.midpoint(&self.b)
    }

    /// Lexicographically ordered endpoints.
    pub fn sorted(&self) -> (&RatPoint, &RatPoint) {
        if self.a <= self.b {
            (&self.a, &self.b)
        } else {
            (&self.b, &self.a)
        }
    }

    pub(crate) fn bbox_overlaps(&self, other: &Segment) -> bool {
        let (sx0, sx1) = minmax(&self.a.x, &self.b.x);
        let (tx0, tx1) = minmax(&other.a.x, &other.b.x);
        if sx1 < tx0 || tx1 < sx0 {
            return false;
        }
        let (sy0, sy1) = minmax(&self.a.y, &self.b.y);
        let (ty0, ty1) = minmax(&other.a.y, &other.b.y);
        !(sy1 < ty0 || ty1 < sy0)
    }
}

pub(crate) fn minmax<'a>(a: &'a Rational, b: &'a Rational) -> (&'a Rational, &'a Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Closed-segment membership.
pub fn on_segment(p: &RatPoint, a: &RatPoint, b: &RatPoint) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let (x0, x1) = minmax(&a.x, &b.x);
    let (y0, y1) = minmax(&a.y, &b.y);
    x0 <= &p.x && &p.x <= x1 && y0 <= &p.y && &p.y <= y1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    None,
    Point(RatPoint),
    /// Shared collinear sub-segment, endpoints in lexicographic order.
    Overlap(RatPoint, RatPoint),
}

pub fn segment_intersection(s: &Segment, t: &Segment) -> SegmentIntersection {
    if !s.bbox_overlaps(t) {
        return SegmentIntersection::None;
    }
    let d1 = cross(&s.a, &s.b, &t.a);
    let d2 = cross(&s.a, &s.b, &t.b);
    if d1.is_zero() && d2.is_zero() {
        let (s0, s1) = s.sorted();
        let (t0, t1) = t.sorted();
        let lo = s0.max(t0);
        let hi = s1.min(t1);
        return match lo.cmp(hi) {
            Ordering::Greater => SegmentIntersection::None,
            Ordering::Equal => SegmentIntersection::Point(lo.clone()),
            Ordering::Less => SegmentIntersection::Overlap(lo.clone(), hi.clone()),
        };
    }
    let d3 = cross(&t.a, &t.b, &s.a);
    let d4 = cross(&t.a, &t.b, &s.b);
    if sign(&d1) * sign(&d2) > 0 || sign(&d3) * sign(&d4) > 0 {
        return SegmentIntersection::None;
    }
    let p = if d1.is_zero() {
        t.a.clone()
    } else if d2.is_zero() {
        t.b.clone()
    } else if d3.is_zero() {
        s.a.clone()
    } else if d4.is_zero() {
        s.b.clone()
    } else {
        let u = &d1 / (&d1 - &d2);
        &t.a + &(&t.b - &t.a).scale(&u)
    };
    SegmentIntersection::Point(p)
}

/// True iff the two segments meet in exactly one point interior to both.
pub fn properly_cross(s: &Segment, t: &Segment) -> bool {
    if !s.bbox_overlaps(t) {
        return false;
    }
    let d1 = sign(&cross(&s.a, &s.b, &t.a));
    let d2 = sign(&cross(&s.a, &s.b, &t.b));
    let d3 = sign(&cross(&t.a, &t.b, &s.a));
    let d4 = sign(&cross(&t.a, &t.b, &s.b));
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Exact squared Euclidean distance from `p` to the closed segment `e`.
pub fn squared_distance(p: &RatPoint, e: &Segment) -> Rational {
    let d = &e.b - &e.a;
    let len2 = d.squared_norm();
    if len2.is_zero() {
        return p.squared_distance(&e.a);
    }
    let t = (p - &e.a).dot(&d);
    if !t.is_positive() {
        return p.squared_distance(&e.a);
    }
    if t >= len2 {
        return p.squared_distance(&e.b);
    }
    // |cross|² / |d|² for the perpendicular foot.
    let c = d.perp_dot(&(p - &e.a));
    &c * &c / len2
}

/// Counter-clockwise angle comparison of direction vectors, measured from `reference`.
///
/// Returns the ordering of the ccw sweep angle in [0, 2π) from `reference` to `a`
/// versus to `b`. Vectors must be non-zero.
pub(crate) fn cmp_ccw_from(reference: &RatPoint, a: &RatPoint, b: &RatPoint) -> Ordering {
    let ha = half_from(reference, a);
    let hb = half_from(reference, b);
    if ha != hb {
        return ha.cmp(&hb);
    }
    // Same half-turn: a before b iff b is to the left of a.
    match sign(&a.perp_dot(b)) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

/// 0: same direction as reference; 1: (0, π); 2: exactly π; 3: (π, 2π).
fn half_from(reference: &RatPoint, v: &RatPoint) -> u8 {
    let c = sign(&reference.perp_dot(v));
    match c {
        1 => 1,
        -1 => 3,
        _ => {
            if reference.dot(v).is_positive() {
                0
            } else {
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::point::{int, rat};

    fn p(x: i64, y: i64) -> RatPoint {
        RatPoint::int(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(p(a.0, a.1), p(b.0, b.1))
    }

    #[test]
    fn orientation_basic_cases() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Left);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 1)), Orientation::Right);
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            segment_intersection(&seg((0, 0), (5, 5)), &seg((0, 5), (5, 0))),
            SegmentIntersection::Point(RatPoint::new(rat(5, 2), rat(5, 2)))
        );
        assert_eq!(segment_intersection(&seg((0, 0), (1, 0)), &seg((0, 2), (1, 2))), SegmentIntersection::None);
        assert_eq!(
            segment_intersection(&seg((0, 0), (4, 0)), &seg((2, 0), (6, 0))),
            SegmentIntersection::Overlap(p(2, 0), p(4, 0))
        );
    }

    #[test]
    fn touching_and_collinear_disjoint() {
        assert_eq!(
            segment_intersection(&seg((0, 0), (2, 0)), &seg((2, 0), (3, 5))),
            SegmentIntersection::Point(p(2, 0))
        );
        assert_eq!(
            segment_intersection(&seg((0, 0), (2, 0)), &seg((2, 0), (5, 0))),
            SegmentIntersection::Point(p(2, 0))
        );
        assert_eq!(segment_intersection(&seg((0, 0), (1, 1)), &seg((2, 2), (3, 3))), SegmentIntersection::None);
        // T-junction
        assert_eq!(
            segment_intersection(&seg((0, 0), (4, 0)), &seg((1, 0), (1, 3))),
            SegmentIntersection::Point(p(1, 0))
        );
        assert!(!properly_cross(&seg((0, 0), (4, 0)), &seg((1, 0), (1, 3))));
        assert!(properly_cross(&seg((0, 0), (4, 4)), &seg((0, 4), (4, 0))));
    }

    #[test]
    fn squared_distance_examples() {
        let e = seg((-1, 0), (1, 0));
        assert_eq!(squared_distance(&p(0, 1), &e), int(1));
        assert_eq!(squared_distance(&p(2, 0), &e), int(1));
        assert_eq!(squared_distance(&p(1, 1), &seg((0, 0), (2, 2))), int(0));
        assert_eq!(squared_distance(&p(0, 1), &seg((0, 0), (1, 1))), rat(1, 2));
    }

    #[test]
    fn ccw_ordering_from_reference() {
        let r = p(1, 0);
        let mut dirs = vec![p(0, -1), p(-1, 0), p(1, 1), p(0, 1), p(1, 0), p(1, -1)];
        dirs.sort_by(|a, b| cmp_ccw_from(&r, a, b));
        assert_eq!(dirs, vec![p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(0, -1), p(1, -1)]);
    }
}
