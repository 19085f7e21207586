//! Reflex vertical decomposition.
//!
//! Each reflex vertex shoots maximal vertical walls up and down into the interior.
//! Together with the region edges they partition the region into convex cells.
//! A wall landing in the relative interior of an edge marks its source as vertically
//! visible from that edge.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::arrangement::overlay::trace_cycles;
use crate::arrangement::{Convexity, ExactRegion, ExactVertex};
use crate::error::{Error, Result};
use crate::exact::pairs::x_stabbing;
use crate::exact::predicates::cmp_ccw_from;
use crate::exact::{int, on_segment, RatPoint, Rational, Ring, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WallDirection {
    Up,
    Down,
}

impl WallDirection {
    fn vector(self) -> RatPoint {
        match self {
            WallDirection::Up => RatPoint::new(int(0), int(1)),
            WallDirection::Down => RatPoint::new(int(0), int(-1)),
        }
    }
}

/// `(ring, index)` of a vertex or edge of the decomposed region.
pub type VertexRef = (usize, usize);
pub type EdgeRef = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub source: RatPoint,
    pub source_ref: VertexRef,
    pub direction: WallDirection,
    pub hit: RatPoint,
}

impl Wall {
    pub fn segment(&self) -> (RatPoint, RatPoint) {
        (self.source.clone(), self.hit.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCell {
    /// Counter-clockwise, collinear runs collapsed.
    pub boundary: Ring,
    /// Region vertices lying on the cell boundary.
    pub incident: Vec<VertexRef>,
}

impl ConvexCell {
    /// Canonicalizes `ring` to counter-clockwise order and checks convexity.
    pub fn from_ring(ring: Ring) -> Result<ConvexCell> {
        let mut boundary = ring.canonical();
        if boundary.signed_area2().is_negative() {
            boundary = boundary.reversed().canonical();
        }
        if boundary.len() < 3 || !boundary.is_convex() {
            return Err(Error::Invariant("cell ring is not a convex polygon".into()));
        }
        Ok(ConvexCell { boundary, incident: Vec::new() })
    }

    pub fn area(&self) -> Rational {
        self.boundary.signed_area()
    }

    /// Closed membership for a convex counter-clockwise ring.
    pub fn contains(&self, p: &RatPoint) -> bool {
        self.boundary.edges().all(|e| !(&e.b - &e.a).perp_dot(&(p - &e.a)).is_negative())
    }

    pub fn has_vertex(&self, p: &RatPoint) -> bool {
        self.boundary.vertices().contains(p)
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub cells: Vec<ConvexCell>,
    pub walls: Vec<Wall>,
    cell_of_vertex: Vec<Vec<usize>>,
    visible_reflex: HashMap<EdgeRef, Vec<VertexRef>>,
    positions: Vec<Vec<RatPoint>>,
}

impl Decomposition {
    pub fn cell_of(&self, v: VertexRef) -> &ConvexCell {
        &self.cells[self.cell_of_vertex[v.0][v.1]]
    }

    pub fn cell_index_of(&self, v: VertexRef) -> usize {
        self.cell_of_vertex[v.0][v.1]
    }

    /// Reflex vertices vertically visible from the interior of `edge`, ordered along it.
    pub fn visible_reflex(&self, edge: EdgeRef) -> &[VertexRef] {
        self.visible_reflex.get(&edge).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn position(&self, v: VertexRef) -> &RatPoint {
        &self.positions[v.0][v.1]
    }

    /// Finds the reference of a vertex by position (first occurrence).
    pub fn find_vertex(&self, p: &RatPoint) -> Option<VertexRef> {
        self.positions.iter().enumerate().find_map(|(r, ring)| ring.iter().position(|q| q == p).map(|i| (r, i)))
    }
}

/// ccw angle from `out` to `d` lies strictly inside (0, angle(out → inn)).
fn strictly_inside_sector(out: &RatPoint, inn: &RatPoint, d: &RatPoint) -> bool {
    let along_out = out.perp_dot(d).is_zero() && out.dot(d).is_positive();
    !along_out && cmp_ccw_from(out, d, inn) == std::cmp::Ordering::Less
}

fn inside_closed_sector(out: &RatPoint, inn: &RatPoint, d: &RatPoint) -> bool {
    let along_out = out.perp_dot(d).is_zero() && out.dot(d).is_positive();
    along_out || cmp_ccw_from(out, d, inn) != std::cmp::Ordering::Greater
}

/// Nearest point strictly beyond `from` on the vertical ray, over the candidate edges.
fn shoot<'a>(from: &RatPoint, dir: WallDirection, edges: impl Iterator<Item = &'a Segment>) -> Option<RatPoint> {
    let beyond = |y: &Rational| match dir {
        WallDirection::Up => y > &from.y,
        WallDirection::Down => y < &from.y,
    };
    let mut best: Option<Rational> = None;
    let mut consider = |y: Rational| {
        if beyond(&y) {
            let better = match (&best, dir) {
                (None, _) => true,
                (Some(b), WallDirection::Up) => &y < b,
                (Some(b), WallDirection::Down) => &y > b,
            };
            if better {
                best = Some(y);
            }
        }
    };
    for e in edges {
        if e.a.x == e.b.x {
            if e.a.x == from.x {
                consider(e.a.y.clone());
                consider(e.b.y.clone());
            }
            continue;
        }
        let (x0, x1) = if e.a.x < e.b.x { (&e.a.x, &e.b.x) } else { (&e.b.x, &e.a.x) };
        if &from.x < x0 || &from.x > x1 {
            continue;
        }
        let y = &e.a.y + (&e.b.y - &e.a.y) * (&from.x - &e.a.x) / (&e.b.x - &e.a.x);
        consider(y);
    }
    best.map(|y| RatPoint::new(from.x.clone(), y))
}

fn in_relative_interior(p: &RatPoint, a: &RatPoint, b: &RatPoint) -> bool {
    p != a && p != b && on_segment(p, a, b)
}

/// Decomposes `region` into convex cells. Every reflex vertex must be a lattice point.
pub fn reflex_vertical_decomposition(region: &ExactRegion) -> Result<Decomposition> {
    let rings: Vec<&Ring> = region.region().rings().iter().collect();
    let positions: Vec<Vec<RatPoint>> = rings.iter().map(|r| r.vertices().to_vec()).collect();
    let mut edge_refs: Vec<EdgeRef> = Vec::new();
    let mut edges: Vec<Segment> = Vec::new();
    for (ri, ring) in rings.iter().enumerate() {
        for (ei, e) in ring.edges().enumerate() {
            edge_refs.push((ri, ei));
            edges.push(e);
        }
    }

    let mut reflex: Vec<VertexRef> = Vec::new();
    for (ri, ring) in rings.iter().enumerate() {
        for i in 0..ring.len() {
            let ExactVertex { position: v, convexity, .. } = region.vertex(ri, i);
            if *convexity != Convexity::Reflex {
                continue;
            }
            if !v.is_lattice() {
                return Err(Error::NonLatticeReflexVertex(Box::new(v.clone())));
            }
            reflex.push((ri, i));
        }
    }
    let xs: Vec<&Rational> = reflex.iter().map(|&(ri, i)| &positions[ri][i].x).collect();
    let candidates = x_stabbing(&edges, &xs, &int(0));

    let mut walls: Vec<Wall> = Vec::new();
    let mut seen: BTreeSet<(RatPoint, RatPoint)> = BTreeSet::new();
    let mut visible: HashMap<EdgeRef, Vec<VertexRef>> = HashMap::new();
    let mut cuts: Vec<Vec<RatPoint>> = vec![Vec::new(); edges.len()];
    for (&(ri, i), cands) in reflex.iter().zip(&candidates) {
        let ring = rings[ri];
        let v = ring.vertex(i);
        let out = ring.next(i) - v;
        let inn = ring.prev(i) - v;
        for dir in [WallDirection::Up, WallDirection::Down] {
            if !strictly_inside_sector(&out, &inn, &dir.vector()) {
                continue;
            }
            let hit = shoot(v, dir, cands.iter().map(|&k| &edges[k]))
                .ok_or_else(|| Error::Invariant(format!("wall from {v} escapes the region")))?;
            for &k in cands {
                let e = &edges[k];
                if in_relative_interior(&hit, &e.a, &e.b) {
                    visible.entry(edge_refs[k]).or_default().push((ri, i));
                    cuts[k].push(hit.clone());
                }
                if in_relative_interior(v, &e.a, &e.b) {
                    cuts[k].push(v.clone());
                }
            }
            let key = if *v < hit { (v.clone(), hit.clone()) } else { (hit.clone(), v.clone()) };
            if seen.insert(key) {
                walls.push(Wall { source: v.clone(), source_ref: (ri, i), direction: dir, hit });
            }
        }
    }

    for (&(rj, ej), list) in visible.iter_mut() {
        let a = rings[rj].vertex(ej);
        let b = rings[rj].next(ej);
        let forward = a.x < b.x;
        list.sort_by(|&p, &q| {
            let (px, qx) = (&positions[p.0][p.1].x, &positions[q.0][q.1].x);
            if forward {
                px.cmp(qx)
            } else {
                qx.cmp(px)
            }
        });
        list.dedup_by(|p, q| positions[p.0][p.1] == positions[q.0][q.1]);
    }

    // Region edges cut at wall endpoints, plus both sides of every wall.
    let mut half_edges: Vec<(RatPoint, RatPoint)> = Vec::new();
    for (e, mut cut) in edges.iter().zip(cuts) {
        cut.sort_by_key(|p| e.a.squared_distance(p));
        cut.dedup();
        let mut prev = e.a.clone();
        for c in cut {
            let next = c.clone();
            half_edges.push((prev, c));
            prev = next;
        }
        half_edges.push((prev, e.b.clone()));
    }
    for w in &walls {
        half_edges.push((w.source.clone(), w.hit.clone()));
        half_edges.push((w.hit.clone(), w.source.clone()));
    }

    let mut at_position: BTreeMap<&RatPoint, Vec<VertexRef>> = BTreeMap::new();
    for (r, ring) in positions.iter().enumerate() {
        for (i, p) in ring.iter().enumerate() {
            at_position.entry(p).or_default().push((r, i));
        }
    }
    let mut cells = Vec::new();
    let mut cells_at: Vec<Vec<Vec<usize>>> = positions.iter().map(|r| vec![Vec::new(); r.len()]).collect();
    for cycle in trace_cycles(&half_edges) {
        let mut incident: Vec<VertexRef> = cycle.iter().filter_map(|p| at_position.get(p)).flatten().copied().collect();
        incident.sort();
        incident.dedup();
        let boundary = Ring::new(cycle).canonical();
        if boundary.len() < 3 || !boundary.signed_area2().is_positive() || !boundary.is_convex() {
            return Err(Error::Invariant(format!(
                "decomposition produced a non-convex cell starting at {:?}",
                boundary.min_vertex()
            )));
        }
        for &(r, i) in &incident {
            cells_at[r][i].push(cells.len());
        }
        cells.push(ConvexCell { boundary, incident });
    }

    let mut cell_of_vertex = Vec::with_capacity(rings.len());
    for (ring, at) in rings.iter().zip(&cells_at) {
        let mut row = Vec::with_capacity(ring.len());
        for (i, holders) in at.iter().enumerate() {
            let v = ring.vertex(i);
            let out = ring.next(i) - v;
            let inn = ring.prev(i) - v;
            let candidate = holders
                .iter()
                .map(|&idx| (idx, &cells[idx]))
                .filter(|(_, c)| {
                    let verts = c.boundary.vertices();
                    match verts.iter().position(|q| q == v) {
                        Some(k) => inside_closed_sector(&out, &inn, &(c.boundary.next(k) - v)),
                        None => true,
                    }
                })
                .min_by(|a, b| a.1.boundary.vertex(0).cmp(b.1.boundary.vertex(0)))
                .map(|(idx, _)| idx)
                .ok_or_else(|| Error::UnknownVertex(Box::new(v.clone())))?;
            row.push(candidate);
        }
        cell_of_vertex.push(row);
    }

    Ok(Decomposition { cells, walls, cell_of_vertex, visible_reflex: visible, positions })
}

/// The convex cell used to round vertex `v`.
pub fn nvlp_cell_of<'a>(v: &RatPoint, decomposition: &'a Decomposition) -> Result<&'a ConvexCell> {
    decomposition
        .find_vertex(v)
        .map(|r| decomposition.cell_of(r))
        .ok_or_else(|| Error::UnknownVertex(Box::new(v.clone())))
}
