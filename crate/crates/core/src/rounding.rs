//! Inner and outer rounding of exact regions onto the integer lattice.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{normalize_positive, overlay::overlay, region_from_cycles, Convexity, ExactRegion};
use crate::decomposition::{reflex_vertical_decomposition, ConvexCell, Decomposition, EdgeRef};
use crate::error::{Error, Result};
use crate::exact::pairs::x_stabbing;
use crate::exact::point::{ceil, floor};
use crate::exact::universe::complement_unchecked;
use crate::exact::{
    orientation, squared_distance, LatticePoint, Orientation, RatPoint, Rational, Region, Ring, Segment, UniverseBox,
    UNIVERSE_MARGIN,
};

/// Unit square of the grid around a non-lattice vertex, or a unit segment when
/// exactly one coordinate of the vertex is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pixel {
    pub anchor: RatPoint,
    pub square: Ring,
    pub degenerate: bool,
}

impl Pixel {
    /// `None` for lattice points.
    pub fn of(v: &RatPoint) -> Option<Pixel> {
        if v.is_lattice() {
            return None;
        }
        let lo = v.floor().to_rat();
        let hi = v.ceil().to_rat();
        let degenerate = lo.x == hi.x || lo.y == hi.y;
        let square = if degenerate {
            Ring::new(vec![lo, hi])
        } else {
            Ring::new(vec![
                lo.clone(),
                RatPoint::new(hi.x.clone(), lo.y.clone()),
                hi.clone(),
                RatPoint::new(lo.x.clone(), hi.y.clone()),
            ])
        };
        Some(Pixel { anchor: v.clone(), square, degenerate })
    }

    /// A full unit square containing the pixel. A degenerate pixel is extended
    /// below a horizontal segment and to the left of a vertical one.
    pub fn thickened(&self) -> Ring {
        if !self.degenerate {
            return self.square.clone();
        }
        let (a, b) = (self.square.vertex(0), self.square.vertex(1));
        let (lo, hi) = if a.y == b.y {
            (RatPoint::new(a.x.clone(), &a.y - Rational::one()), b.clone())
        } else {
            (RatPoint::new(&a.x - Rational::one(), a.y.clone()), b.clone())
        };
        Ring::new(vec![
            lo.clone(),
            RatPoint::new(hi.x.clone(), lo.y.clone()),
            hi.clone(),
            RatPoint::new(lo.x.clone(), hi.y.clone()),
        ])
    }
}

/// Replacement of an edge `pq` of P by a lattice chain from the snap of `p` to the snap
/// of `q`, through the reflex vertices vertically visible from `pq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub edge: Segment,
    pub edge_ref: EdgeRef,
    pub vertices: Vec<LatticePoint>,
}

/// y-range of a convex counter-clockwise ring on the vertical line `x`.
fn column_range(ring: &Ring, x: &Rational) -> Option<(Rational, Rational)> {
    let mut range: Option<(Rational, Rational)> = None;
    let mut add = |y: Rational| {
        range = Some(match range.take() {
            None => (y.clone(), y),
            Some((lo, hi)) => (if y < lo { y.clone() } else { lo }, if y > hi { y } else { hi }),
        });
    };
    for e in ring.edges() {
        if e.a.x == e.b.x {
            if &e.a.x == x {
                add(e.a.y.clone());
                add(e.b.y.clone());
            }
            continue;
        }
        let (x0, x1) = if e.a.x < e.b.x { (&e.a.x, &e.b.x) } else { (&e.b.x, &e.a.x) };
        if x < x0 || x > x1 {
            continue;
        }
        add(&e.a.y + (&e.b.y - &e.a.y) * (x - &e.a.x) / (&e.b.x - &e.a.x));
    }
    range
}

/// Nearest lattice point of the closed convex cell to `p`, ties broken by smallest
/// `(x, y)`. `p` must lie on the cell boundary.
///
/// Every integer column crossing the cell is visited and its best row found directly,
/// so an empty result proves the cell holds no lattice point.
pub fn nvlp(p: &RatPoint, cell: &ConvexCell) -> Result<Option<LatticePoint>> {
    if !cell.boundary.on_boundary(p) {
        return Err(Error::NotACellVertex(Box::new(p.clone())));
    }
    if p.is_lattice() {
        return Ok(p.to_lattice());
    }
    let verts = cell.boundary.vertices();
    let min_x = verts.iter().map(|v| &v.x).min().expect("non-empty cell");
    let max_x = verts.iter().map(|v| &v.x).max().expect("non-empty cell");
    let mut best: Option<(Rational, LatticePoint)> = None;
    let mut x = ceil(min_x);
    let last = floor(max_x);
    while x <= last {
        let xr = Rational::from_integer(x.clone());
        if let Some((lo, hi)) = column_range(&cell.boundary, &xr) {
            let (lo_i, hi_i) = (ceil(&lo), floor(&hi));
            if lo_i <= hi_i {
                let below = floor(&p.y).clamp(lo_i.clone(), hi_i.clone());
                let above = ceil(&p.y).clamp(lo_i, hi_i);
                for y in [below, above] {
                    let q = LatticePoint::new(x.clone(), y);
                    let d = p.squared_distance(&q.to_rat());
                    let better = match &best {
                        None => true,
                        Some((bd, bq)) => d < *bd || (d == *bd && q < *bq),
                    };
                    if better {
                        best = Some((d, q));
                    }
                }
            }
        }
        x += 1;
    }
    Ok(best.map(|(_, q)| q))
}

/// Lattice chain for edge `edge_ref`, or `None` when an endpoint has no snap.
pub fn build_chain(
    edge_ref: EdgeRef,
    edge: Segment,
    decomposition: &Decomposition,
    vp: Option<&LatticePoint>,
    vq: Option<&LatticePoint>,
) -> Option<Chain> {
    let (vp, vq) = (vp?, vq?);
    let mut vertices = vec![vp.clone()];
    for &r in decomposition.visible_reflex(edge_ref) {
        let pos =
            decomposition.position(r).to_lattice().expect("reflex vertices of a decomposed region are lattice points");
        vertices.push(pos);
    }
    vertices.push(vq.clone());
    Some(Chain { edge, edge_ref, vertices })
}

/// Repeatedly removes every unprotected reflex vertex and every collinear vertex of a
/// ring whose interior lies on its left. Returns `None` when fewer than three vertices
/// remain.
pub fn convexify_cleanup(ring: &Ring, protected: &[bool]) -> Option<Ring> {
    assert_eq!(ring.len(), protected.len(), "one protection flag per vertex");
    let mut items: Vec<(RatPoint, bool)> = ring.vertices().iter().cloned().zip(protected.iter().copied()).collect();
    // Each pass is a linear stack scan; rotating by half a ring between passes brings
    // the seam into the middle.
    let mut stable_passes = 0;
    while stable_passes < 2 {
        let before = items.len();
        items = stack_pass(items);
        merge_seam(&mut items);
        if items.len() < 3 {
            return None;
        }
        let half = items.len() / 2;
        items.rotate_left(half);
        stable_passes = if items.len() == before { stable_passes + 1 } else { 0 };
    }
    Some(Ring::new(items.into_iter().map(|(p, _)| p).collect()).canonical())
}

fn stack_pass(items: Vec<(RatPoint, bool)>) -> Vec<(RatPoint, bool)> {
    let mut stack: Vec<(RatPoint, bool)> = Vec::with_capacity(items.len());
    for (p, flag) in items {
        match stack.last_mut() {
            Some(top) if top.0 == p => {
                top.1 |= flag;
                continue;
            }
            _ => stack.push((p, flag)),
        }
        while stack.len() >= 3 {
            let n = stack.len();
            if !removable(&stack[n - 3].0, &stack[n - 2].0, &stack[n - 1].0, stack[n - 2].1) {
                break;
            }
            stack.remove(n - 2);
            if stack[n - 3].0 == stack[n - 2].0 {
                let (_, flag) = stack.pop().expect("two items");
                stack[n - 3].1 |= flag;
            }
        }
    }
    stack
}

fn merge_seam(items: &mut Vec<(RatPoint, bool)>) {
    while items.len() > 1 && items.first().map(|f| &f.0) == items.last().map(|l| &l.0) {
        let (_, flag) = items.pop().expect("len > 1");
        items[0].1 |= flag;
    }
}

fn removable(a: &RatPoint, b: &RatPoint, c: &RatPoint, protected: bool) -> bool {
    if a == b || b == c {
        return true;
    }
    if protected {
        // kept even when momentarily flat: later removals may make it reflex again
        return false;
    }
    match orientation(a, b, c) {
        // a reversal spike is left for the final normalization
        Orientation::Collinear => (b - a).dot(&(c - b)).is_positive(),
        Orientation::Right => true,
        Orientation::Left => false,
    }
}

/// Inner rounding together with the intermediate snaps and chains.
#[derive(Clone, Debug)]
pub struct InnerTrace {
    pub region: Region,
    pub decomposition: Decomposition,
    /// Snap of every vertex of P, indexed like the rings of P.
    pub snaps: Vec<Vec<Option<LatticePoint>>>,
    pub chains: Vec<Chain>,
    /// Rings of P whose component was dropped for lack of lattice points.
    pub dropped_rings: Vec<usize>,
}

/// Lattice region contained in P. See [`inner_round_traced`].
pub fn inner_round(p: &ExactRegion) -> Result<Region> {
    Ok(inner_round_traced(p)?.region)
}

pub fn inner_round_traced(p: &ExactRegion) -> Result<InnerTrace> {
    let decomposition = reflex_vertical_decomposition(p)?;
    let rings = p.region().rings();
    let parents = p.region().parents();

    let mut snaps = Vec::with_capacity(rings.len());
    for (ri, ring) in rings.iter().enumerate() {
        let mut row = Vec::with_capacity(ring.len());
        for i in 0..ring.len() {
            let v = ring.vertex(i);
            row.push(match v.to_lattice() {
                Some(l) => Some(l),
                None => nvlp(v, decomposition.cell_of((ri, i)))?,
            });
        }
        snaps.push(row);
    }

    // A ring with an unsnappable vertex removes its whole component: its outer ring
    // together with the holes directly inside it.
    let component_root = |ri: usize| -> usize {
        if rings[ri].signed_area2().is_negative() {
            parents[ri].unwrap_or(ri)
        } else {
            ri
        }
    };
    let dead_roots: HashSet<usize> =
        (0..rings.len()).filter(|&ri| snaps[ri].iter().any(Option::is_none)).map(component_root).collect();
    let dropped_rings: Vec<usize> = (0..rings.len()).filter(|&ri| dead_roots.contains(&component_root(ri))).collect();
    let mut chains = Vec::new();
    let mut out_rings = Vec::new();
    for (ri, ring) in rings.iter().enumerate() {
        if dropped_rings.contains(&ri) {
            continue;
        }
        let mut verts: Vec<RatPoint> = Vec::new();
        let mut protected: Vec<bool> = Vec::new();
        for i in 0..ring.len() {
            let j = (i + 1) % ring.len();
            let chain =
                build_chain((ri, i), ring.edge(i), &decomposition, snaps[ri][i].as_ref(), snaps[ri][j].as_ref())
                    .expect("surviving rings have every snap");
            let keep_reflex = p.vertex(ri, i).convexity == Convexity::Reflex;
            for (k, v) in chain.vertices[..chain.vertices.len() - 1].iter().enumerate() {
                verts.push(v.to_rat());
                protected.push(k == 0 && keep_reflex);
            }
            chains.push(chain);
        }
        if let Some(clean) = convexify_cleanup(&Ring::new(verts), &protected) {
            out_rings.push(clean);
        }
    }
    let region = normalize_positive(&out_rings);
    Ok(InnerTrace { region, decomposition, snaps, chains, dropped_rings })
}

/// Pixels of all non-lattice vertices of P.
pub fn pixels(p: &ExactRegion) -> Vec<Pixel> {
    let anchors: BTreeSet<&RatPoint> = p.region().vertices().filter(|v| !v.is_lattice()).collect();
    anchors.into_iter().filter_map(Pixel::of).collect()
}

/// Union of the pixels of P. Overlapping squares are merged; a degenerate pixel not
/// covered by a square stays as a two-vertex ring.
pub fn pixel_set(p: &ExactRegion) -> Region {
    let all = pixels(p);
    let squares: Vec<Ring> = all.iter().filter(|x| !x.degenerate).map(|x| x.square.clone()).collect();
    let merged = crate::arrangement::normalize(&squares);
    let mut rings: Vec<Ring> = merged.rings().to_vec();
    let mut seen = BTreeSet::new();
    for px in all.iter().filter(|x| x.degenerate) {
        let (a, b) = (px.square.vertex(0), px.square.vertex(1));
        let covered = merged.contains(&a.midpoint(b));
        if !covered && seen.insert((a.clone(), b.clone())) {
            rings.push(px.square.clone());
        }
    }
    Region::from_rings(rings)
}

/// Lattice region containing P: the complement of the inner rounding of
/// `box \ (P ∪ I)`, followed by reflex simplification and zero-area removal.
/// Degenerate pixels are thickened to unit squares before the complement is taken.
pub fn outer_round(p: &ExactRegion, universe: &UniverseBox) -> Result<Region> {
    Ok(outer_round_traced(p, universe)?.region)
}

/// Intermediate stages of the outer rounding.
#[derive(Clone, Debug)]
pub struct OuterTrace {
    /// `box \ (P ∪ I)` with thickened pixels.
    pub complement_side: Region,
    /// Inner rounding of `complement_side`.
    pub complement_inner: Region,
    /// `box \ complement_inner`, before simplification.
    pub raw: Region,
    pub region: Region,
}

pub fn outer_round_traced(p: &ExactRegion, universe: &UniverseBox) -> Result<OuterTrace> {
    if !universe.holds(p.region(), UNIVERSE_MARGIN) {
        return Err(Error::MarginViolation { margin: UNIVERSE_MARGIN });
    }
    if p.region().is_lattice() {
        let r = p.region().clone();
        return Ok(OuterTrace {
            complement_side: complement_unchecked(&r, universe),
            complement_inner: complement_unchecked(&r, universe),
            raw: r.clone(),
            region: r,
        });
    }
    let squares: Vec<Segment> = pixels(p).iter().flat_map(|px| px.thickened().edges().collect::<Vec<_>>()).collect();
    let operands = [universe.ring().edges().collect(), p.region().edges().collect(), squares];
    let q = region_from_cycles(overlay(&operands, |w| w[0] != 0 && w[1] == 0 && w[2] == 0));
    let q_inner = inner_round(&ExactRegion::from_region(q.clone()))?;
    let raw = complement_unchecked(&q_inner, universe);
    let region = remove_zero_area(&simplify_reflex(&raw, p));
    Ok(OuterTrace { complement_side: q, complement_inner: q_inner, raw, region })
}

/// Parameter interval of `a + t (b - a)`, `t ∈ [0, 1]`, inside a closed convex
/// counter-clockwise polygon.
fn clip_to_convex(a: &RatPoint, b: &RatPoint, poly: &[RatPoint]) -> Option<(Rational, Rational)> {
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
            if t > t0 {
                t0 = t;
            }
        } else if t < t1 {
            t1 = t;
        }
        if t0 > t1 {
            return None;
        }
    }
    Some((t0, t1))
}

/// Removes extraneous reflex vertices of `pbar`: a reflex vertex `r` with no vertex of P
/// at its position is dropped when `r` and both neighbours lie at distance below √2
/// from a single edge of P and the triangle cut off meets no other boundary.
pub fn simplify_reflex(pbar: &Region, p: &ExactRegion) -> Region {
    let p_vertices: BTreeSet<&RatPoint> = p.region().vertices().collect();
    let p_edges: Vec<Segment> = p.region().edges().collect();
    let two = Rational::from_integer(BigInt::from(2));
    let near = |e: &Segment, x: &RatPoint| squared_distance(x, e) < two;

    let mut rings: Vec<Vec<RatPoint>> = pbar.rings().iter().map(|r| r.vertices().to_vec()).collect();
    // Edges of P within x-distance 2 of each vertex; vertices are only ever removed.
    let positions: Vec<&RatPoint> = pbar.vertices().collect();
    let xs: Vec<&Rational> = positions.iter().map(|p| &p.x).collect();
    let nearby_lists = x_stabbing(&p_edges, &xs, &Rational::from_integer(BigInt::from(2)));
    let nearby: BTreeMap<&RatPoint, &Vec<usize>> = positions.iter().copied().zip(&nearby_lists).collect();
    loop {
        let mut changed = false;
        for ri in 0..rings.len() {
            let mut i = 0;
            while i < rings[ri].len() {
                let n = rings[ri].len();
                if n < 4 {
                    break;
                }
                let prev = &rings[ri][(i + n - 1) % n];
                let r = &rings[ri][i];
                let next = &rings[ri][(i + 1) % n];
                let qualifies = orientation(prev, r, next) == Orientation::Right
                    && !p_vertices.contains(r)
                    && nearby[r].iter().any(|&k| {
                        let e = &p_edges[k];
                        near(e, r) && near(e, prev) && near(e, next)
                    })
                    && triangle_is_free(&rings, ri, i);
                if qualifies {
                    rings[ri].remove(i);
                    changed = true;
                } else {
                    i += 1;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Region::from_rings(rings.into_iter().map(Ring::new))
}

/// Closed axis-aligned box.
struct BoundingBox {
    lo: RatPoint,
    hi: RatPoint,
}

impl BoundingBox {
    fn of(points: &[RatPoint]) -> BoundingBox {
        let mut lo = points[0].clone();
        let mut hi = points[0].clone();
        for p in &points[1..] {
            lo.x = lo.x.clone().min(p.x.clone());
            lo.y = lo.y.clone().min(p.y.clone());
            hi.x = hi.x.clone().max(p.x.clone());
            hi.y = hi.y.clone().max(p.y.clone());
        }
        BoundingBox { lo, hi }
    }

    fn meets(&self, other: &BoundingBox) -> bool {
        self.lo.x <= other.hi.x && other.lo.x <= self.hi.x && self.lo.y <= other.hi.y && other.lo.y <= self.hi.y
    }
}

/// The closed triangle `(prev, r, next)` at vertex `i` of ring `ri` meets no edge other
/// than the two at `r`, except at `prev` or `next` through an edge ending there.
fn triangle_is_free(rings: &[Vec<RatPoint>], ri: usize, i: usize) -> bool {
    let n = rings[ri].len();
    let prev = &rings[ri][(i + n - 1) % n];
    let r = &rings[ri][i];
    let next = &rings[ri][(i + 1) % n];
    // (prev, r, next) turns right, so (prev, next, r) is counter-clockwise.
    let tri = [prev.clone(), next.clone(), r.clone()];
    let tri_box = BoundingBox::of(&tri);
    for (rj, ring) in rings.iter().enumerate() {
        let m = ring.len();
        for j in 0..m {
            if rj == ri && (j == i || (j + 1) % m == i) {
                continue;
            }
            let (a, b) = (&ring[j], &ring[(j + 1) % m]);
            if !tri_box.meets(&BoundingBox::of(&[a.clone(), b.clone()])) {
                continue;
            }
            if let Some((t0, t1)) = clip_to_convex(a, b, &tri) {
                let point_only = t0 == t1;
                let at_a = t0.is_zero() && (a == prev || a == next);
                let at_b = t0.is_one() && (b == prev || b == next);
                if !(point_only && (at_a || at_b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Drops every ring with zero area.
pub fn remove_zero_area(region: &Region) -> Region {
    region.without_zero_area_rings()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::exact_intersection;
    use crate::exact::{rat, Region};

    fn e2() -> ExactRegion {
        let a = Region::from_rings([Ring::from_ints(&[(0, 0), (5, 0), (0, 5)])]);
        let b = Region::from_rings([Ring::from_ints(&[(0, 0), (5, 0), (5, 5)])]);
        exact_intersection(&a, &b).unwrap()
    }

    fn lattice(rings: &[&[(i64, i64)]]) -> ExactRegion {
        ExactRegion::from_lattice(Region::from_rings(rings.iter().map(|c| Ring::from_ints(c))))
    }

    fn cell(coords: &[(i64, i64)]) -> ConvexCell {
        ConvexCell::from_ring(Ring::from_ints(coords)).unwrap()
    }

    #[test]
    fn nvlp_examples() {
        let c = cell(&[(0, 0), (5, 0), (5, 3), (0, 3)]);
        assert_eq!(nvlp(&RatPoint::int(5, 3), &c).unwrap(), Some(LatticePoint::new(5, 3)));
        let tri = ConvexCell::from_ring(e2().region().rings()[0].clone()).unwrap();
        let apex = RatPoint::new(rat(5, 2), rat(5, 2));
        assert_eq!(nvlp(&apex, &tri).unwrap(), Some(LatticePoint::new(2, 2)));
        let sliver = ConvexCell::from_ring(Ring::new(vec![
            RatPoint::new(rat(1, 3), rat(1, 4)),
            RatPoint::new(rat(2, 3), rat(1, 4)),
            RatPoint::new(rat(1, 2), rat(3, 4)),
        ]))
        .unwrap();
        assert_eq!(nvlp(&RatPoint::new(rat(1, 2), rat(3, 4)), &sliver).unwrap(), None);
        assert!(nvlp(&RatPoint::int(9, 9), &c).is_err());
    }

    #[test]
    fn chain_examples() {
        let p = e2();
        let d = reflex_vertical_decomposition(&p).unwrap();
        let ring = &p.region().rings()[0];
        for i in 0..ring.len() {
            assert!(d.visible_reflex((0, i)).is_empty());
        }
        let c = build_chain((0, 0), ring.edge(0), &d, Some(&LatticePoint::new(0, 0)), Some(&LatticePoint::new(2, 2)))
            .unwrap();
        assert_eq!(c.vertices, vec![LatticePoint::new(0, 0), LatticePoint::new(2, 2)]);
        assert!(build_chain((0, 0), ring.edge(0), &d, None, Some(&LatticePoint::new(2, 2))).is_none());

        let l = lattice(&[&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]]);
        let d = reflex_vertical_decomposition(&l).unwrap();
        let ring = &l.region().rings()[0];
        let bottom = ring.edges().position(|e| e.a == RatPoint::int(0, 0)).unwrap();
        let c = build_chain(
            (0, bottom),
            ring.edge(bottom),
            &d,
            Some(&LatticePoint::new(0, 0)),
            Some(&LatticePoint::new(4, 0)),
        )
        .unwrap();
        assert_eq!(c.vertices, vec![LatticePoint::new(0, 0), LatticePoint::new(2, 2), LatticePoint::new(4, 0)]);
    }

    #[test]
    fn cleanup_examples() {
        let convex = Ring::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert_eq!(convexify_cleanup(&convex, &[false; 4]).unwrap(), convex);

        let dent = Ring::from_ints(&[(0, 0), (2, 1), (4, 0), (4, 4), (0, 4)]);
        assert_eq!(convexify_cleanup(&dent, &[false; 5]).unwrap(), convex);
        assert_eq!(convexify_cleanup(&dent, &[false, true, false, false, false]).unwrap(), dent);

        // (1,1) only becomes reflex once (2,1)... is gone: cascade of two removals.
        let cascade = Ring::from_ints(&[(0, 0), (1, 1), (3, 1), (4, 0), (4, 4), (0, 4)]);
        let out = convexify_cleanup(&cascade, &[false; 6]).unwrap();
        assert_eq!(out.canonical(), convex);
        assert!(out.is_convex());

        let needle = Ring::from_ints(&[(0, 0), (3, 0), (0, 0)]);
        assert!(convexify_cleanup(&needle, &[false; 3]).is_none());
    }

    #[test]
    fn inner_round_examples() {
        let sq = lattice(&[&[(2, 2), (4, 2), (4, 4), (2, 4)]]);
        assert_eq!(inner_round(&sq).unwrap(), sq.region().clone());
        let tri = inner_round(&e2()).unwrap();
        assert_eq!(tri, Region::from_rings([Ring::from_ints(&[(0, 0), (5, 0), (2, 2)])]));
        let l = lattice(&[&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]]);
        assert_eq!(inner_round(&l).unwrap(), l.region().clone());
    }

    #[test]
    fn inner_round_drops_lattice_free_sliver() {
        // thin triangle A ∩ B with no lattice point inside
        let a = Region::from_rings([Ring::from_ints(&[(0, 0), (7, 1), (0, 1)])]);
        let b = Region::from_rings([Ring::from_ints(&[(0, 1), (7, 0), (7, 1)])]);
        let p = exact_intersection(&a, &b).unwrap();
        assert!(!p.is_empty());
        assert!(inner_round(&p).unwrap().is_empty());
    }

    #[test]
    fn pixel_examples() {
        assert!(pixel_set(&lattice(&[&[(0, 0), (1, 0), (0, 1)]])).is_empty());
        let px = Pixel::of(&RatPoint::new(rat(5, 2), rat(5, 2))).unwrap();
        assert!(!px.degenerate);
        assert_eq!(px.square, Ring::from_ints(&[(2, 2), (3, 2), (3, 3), (2, 3)]));
        let seg = Pixel::of(&RatPoint::new(rat(5, 2), rat(3, 1))).unwrap();
        assert!(seg.degenerate);
        assert_eq!(seg.square, Ring::from_ints(&[(2, 3), (3, 3)]));
        assert_eq!(seg.thickened(), Ring::from_ints(&[(2, 2), (3, 2), (3, 3), (2, 3)]));
        assert_eq!(pixel_set(&e2()), Region::from_rings([Ring::from_ints(&[(2, 2), (3, 2), (3, 3), (2, 3)])]));
    }

    #[test]
    fn outer_round_examples() {
        let bx = UniverseBox::from_ints(-3, -3, 8, 8);
        let sq = lattice(&[&[(2, 2), (4, 2), (4, 4), (2, 4)]]);
        assert_eq!(outer_round(&sq, &bx).unwrap(), sq.region().clone());
        assert!(outer_round(&ExactRegion::from_lattice(Region::empty()), &bx).unwrap().is_empty());
        let out = outer_round(&e2(), &bx).unwrap();
        assert!(out.is_lattice());
        for v in e2().region().vertices() {
            assert!(out.contains(v));
        }
        assert!(out.area() > e2().region().area());
        let small = UniverseBox::from_ints(-1, -1, 6, 6);
        assert!(outer_round(&e2(), &small).is_err());
    }

    #[test]
    fn simplify_reflex_examples() {
        // P: triangle; Pbar: staircase around its hypotenuse with one extraneous corner.
        let p = ExactRegion::from_region(Region::from_rings([Ring::new(vec![
            RatPoint::int(0, 0),
            RatPoint::int(4, 0),
            RatPoint::new(rat(1, 2), rat(7, 2)),
        ])]));
        let stair =
            Region::from_rings([Ring::from_ints(&[(0, 0), (4, 0), (4, 1), (3, 1), (3, 2), (1, 2), (1, 4), (0, 4)])]);
        let out = simplify_reflex(&stair, &p);
        assert!(out.vertex_count() < stair.vertex_count());
        for v in p.region().vertices() {
            assert!(out.contains(v));
        }

        let convex = Region::from_rings([Ring::from_ints(&[(0, 0), (5, 0), (5, 5), (0, 5)])]);
        assert_eq!(simplify_reflex(&convex, &p), convex);

        // the reflex corner (3,3) is far from every edge of the small P
        let far_p = lattice(&[&[(0, 0), (1, 0), (0, 1)]]);
        let l = Region::from_rings([Ring::from_ints(&[(0, 0), (6, 0), (6, 3), (3, 3), (3, 6), (0, 6)])]);
        assert_eq!(simplify_reflex(&l, &far_p), l);
    }

    #[test]
    fn remove_zero_area_examples() {
        let needle = Ring::from_ints(&[(10, 10), (13, 10)]);
        let sq = Ring::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let mixed = Region::from_rings([needle, sq.clone()]);
        let out = remove_zero_area(&mixed);
        assert_eq!(out, Region::from_rings([sq]));
        assert_eq!(out.area(), mixed.area());
    }
}
