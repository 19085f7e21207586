use std::fmt;

use num_traits::Zero;

use super::pairs::overlapping_pairs;
use super::predicates::{cross, properly_cross, segment_intersection, Segment, SegmentIntersection};
use super::region::{Region, RingOrientation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// Zero-area ring. Representable, reported but not fatal.
    Degenerate {
        ring: usize,
    },
    DuplicateVertex {
        ring: usize,
        vertex: usize,
    },
    CollinearVertex {
        ring: usize,
        vertex: usize,
    },
    ProperCrossing {
        ring_a: usize,
        edge_a: usize,
        ring_b: usize,
        edge_b: usize,
    },
    Overlap {
        ring_a: usize,
        edge_a: usize,
        ring_b: usize,
        edge_b: usize,
    },
    /// Ring orientation disagrees with its nesting depth (e.g. a hole outside every filled ring).
    Nesting {
        ring: usize,
    },
}

impl Violation {
    pub fn is_fatal(&self) -> bool {
        !matches!(self, Violation::Degenerate { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Degenerate { ring } => write!(f, "ring {ring} is degenerate"),
            Violation::DuplicateVertex { ring, vertex } => {
                write!(f, "ring {ring} repeats vertex {vertex}")
            }
            Violation::CollinearVertex { ring, vertex } => {
                write!(f, "ring {ring} vertex {vertex} is collinear with its neighbours")
            }
            Violation::ProperCrossing { ring_a, edge_a, ring_b, edge_b } => {
                write!(f, "proper edge crossing: ring {ring_a} edge {edge_a} x ring {ring_b} edge {edge_b}")
            }
            Violation::Overlap { ring_a, edge_a, ring_b, edge_b } => {
                write!(f, "overlapping edges: ring {ring_a} edge {edge_a} and ring {ring_b} edge {edge_b}")
            }
            Violation::Nesting { ring } => write!(f, "ring {ring} has inconsistent nesting"),
        }
    }
}

/// Checks ring and region invariants exactly. Never aborts; an empty list means valid.
pub fn validate_region(region: &Region) -> Vec<Violation> {
    let mut out = Vec::new();
    let rings = region.rings();
    // Zero-width rings: every vertex on one line.
    let degenerate: Vec<bool> = rings
        .iter()
        .map(|r| r.len() < 3 || r.vertices().iter().all(|p| cross(r.vertex(0), r.vertex(1), p).is_zero()))
        .collect();
    for (ri, ring) in rings.iter().enumerate() {
        if degenerate[ri] {
            out.push(Violation::Degenerate { ring: ri });
            continue;
        }
        for i in 0..ring.len() {
            if ring.vertex(i) == ring.next(i) {
                out.push(Violation::DuplicateVertex { ring: ri, vertex: (i + 1) % ring.len() });
            } else if cross(ring.prev(i), ring.vertex(i), ring.next(i)).is_zero() {
                out.push(Violation::CollinearVertex { ring: ri, vertex: i });
            }
        }
    }

    let mut segs: Vec<Segment> = Vec::new();
    let mut owner: Vec<(usize, usize)> = Vec::new();
    for (ri, ring) in rings.iter().enumerate() {
        for (ei, e) in ring.edges().enumerate() {
            if !e.is_degenerate() {
                segs.push(e);
                owner.push((ri, ei));
            }
        }
    }
    let mut pairs = overlapping_pairs(&segs);
    pairs.sort();
    for (i, j) in pairs {
        let (ring_a, edge_a) = owner[i];
        let (ring_b, edge_b) = owner[j];
        if ring_a == ring_b && degenerate[ring_a] {
            continue;
        }
        if properly_cross(&segs[i], &segs[j]) {
            out.push(Violation::ProperCrossing { ring_a, edge_a, ring_b, edge_b });
        } else if let SegmentIntersection::Overlap(..) = segment_intersection(&segs[i], &segs[j]) {
            out.push(Violation::Overlap { ring_a, edge_a, ring_b, edge_b });
        }
    }

    let parents = region.parents();
    for (ri, ring) in rings.iter().enumerate() {
        if degenerate[ri] || ring.orientation() == RingOrientation::Degenerate {
            continue;
        }
        let mut depth = 0;
        let mut cur = parents[ri];
        while let Some(p) = cur {
            if !degenerate[p] {
                depth += 1;
            }
            cur = parents[p];
        }
        let expected = if depth % 2 == 0 { RingOrientation::Ccw } else { RingOrientation::Cw };
        if ring.orientation() != expected {
            out.push(Violation::Nesting { ring: ri });
        }
    }
    out
}

pub fn is_valid(region: &Region) -> bool {
    validate_region(region).iter().all(|v| !v.is_fatal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Ring;

    #[test]
    fn bowtie_is_a_proper_crossing() {
        let r = Region::from_rings([Ring::from_ints(&[(0, 0), (2, 2), (2, 0), (0, 2)])]);
        let v = validate_region(&r);
        assert!(v.iter().any(|v| matches!(v, Violation::ProperCrossing { .. })), "{v:?}");
    }

    #[test]
    fn vertex_on_edge_of_other_ring_is_allowed() {
        let r = Region::from_rings([
            Ring::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)]),
            Ring::from_ints(&[(4, 2), (6, 0), (6, 4)]),
        ]);
        assert_eq!(validate_region(&r), vec![]);
    }

    #[test]
    fn hole_outside_parent_is_reported() {
        let r = Region::from_rings([
            Ring::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)]),
            Ring::from_ints(&[(10, 10), (10, 12), (12, 12), (12, 10)]),
        ]);
        assert!(validate_region(&r).contains(&Violation::Nesting { ring: 1 }));
    }

    #[test]
    fn segment_ring_is_degenerate_but_not_fatal() {
        let r = Region::from_rings([Ring::from_ints(&[(2, 3), (3, 3)])]);
        assert_eq!(validate_region(&r), vec![Violation::Degenerate { ring: 0 }]);
        assert!(is_valid(&r));
    }

    #[test]
    fn shared_edge_between_rings_is_an_overlap() {
        let r = Region::from_rings([
            Ring::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]),
            Ring::from_ints(&[(2, 0), (4, 0), (4, 2), (2, 2)]),
        ]);
        assert!(validate_region(&r).iter().any(|v| matches!(v, Violation::Overlap { .. })));
    }
}
