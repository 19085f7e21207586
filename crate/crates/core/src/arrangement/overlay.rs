//! Regularized overlay of several edge sets.
//!
//! Every input edge is cut at all contacts with other edges. For each resulting
//! elementary piece the winding number of every operand is evaluated on both of its
//! sides, exactly, with a ray cast from an infinitesimally displaced midpoint. A piece
//! is part of the output boundary iff the keep predicate differs between its sides,
//! which drops lower-dimensional parts of the result automatically.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::exact::pairs::overlapping_pairs;
use crate::exact::point::{floor, int, RatPoint, Rational};
use crate::exact::predicates::{cmp_ccw_from, segment_intersection, Segment, SegmentIntersection};

#[derive(Clone, Debug)]
struct Piece {
    lo: RatPoint,
    hi: RatPoint,
    /// Net multiplicity per operand, counted positive along lo → hi.
    net: Vec<i64>,
}

/// Buckets edges by the vertical strips that their x-extent covers.
struct StripIndex {
    origin: BigInt,
    width: BigInt,
    buckets: Vec<Vec<usize>>,
}

impl StripIndex {
    fn build(edges: &[Segment]) -> StripIndex {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for e in edges {
            for p in [&e.a, &e.b] {
                let f = floor(&p.x);
                if lo.as_ref().is_none_or(|l| &f < l) {
                    lo = Some(f.clone());
                }
                if hi.as_ref().is_none_or(|h| &f > h) {
                    hi = Some(f);
                }
            }
        }
        let origin = lo.unwrap_or_default();
        let span: BigInt = hi.unwrap_or_default() - &origin + 1;
        let count = edges.len().clamp(1, 4096);
        let count_big = BigInt::from(count);
        let one = BigInt::from(1);
        let width: BigInt = std::cmp::max((&span + &count_big - &one) / &count_big, one.clone());
        let strips = ((&span + &width - &one) / &width).to_usize().unwrap_or(1).max(1);
        let mut index = StripIndex { origin, width, buckets: vec![Vec::new(); strips] };
        for (i, e) in edges.iter().enumerate() {
            let a = index.strip(&e.a.x);
            let b = index.strip(&e.b.x);
            for s in a.min(b)..=a.max(b) {
                index.buckets[s].push(i);
            }
        }
        index
    }

    fn strip(&self, v: &Rational) -> usize {
        let s = (floor(v) - &self.origin) / &self.width;
        s.to_usize().unwrap_or(0).min(self.buckets.len() - 1)
    }

    fn candidates(&self, p: &RatPoint) -> &[usize] {
        &self.buckets[self.strip(&p.x)]
    }
}

/// Winding number of each operand at `m + ε·n` for infinitesimal ε > 0, where `m` lies
/// on no input edge except ones collinear with the query direction's normal line.
fn side_winding(
    m: &RatPoint,
    n: &RatPoint,
    candidates: &[usize],
    edges: &[Segment],
    owner: &[usize],
    operands: usize,
) -> Vec<i64> {
    let mut w = vec![0i64; operands];
    // Rotated frame: t along n, s = cross(n, · − m).
    let frame = |p: &RatPoint| {
        let d = p - m;
        (n.dot(&d), n.perp_dot(&d))
    };
    for &i in candidates {
        let e = &edges[i];
        let (ta, sa) = frame(&e.a);
        let (tb, sb) = frame(&e.b);
        let up = !sa.is_positive() && sb.is_positive();
        let down = !sb.is_positive() && sa.is_positive();
        if !(up || down) {
            continue;
        }
        // t at s = 0: ta + (tb − ta)·(−sa)/(sb − sa); sign only.
        let t_num = &ta * (&sb - &sa) - (&tb - &ta) * &sa;
        let t_positive = if (&sb - &sa).is_positive() { t_num.is_positive() } else { t_num.is_negative() };
        if t_positive {
            w[owner[i]] += if up { 1 } else { -1 };
        }
    }
    w
}

/// Winding number of each operand at `m − ε·(1, 0)`, counted along the upward ray. `m` is
/// the midpoint of a vertical piece, so no other edge contains it except vertical ones
/// collinear with it, which the ray never crosses.
fn west_winding(m: &RatPoint, candidates: &[usize], edges: &[Segment], owner: &[usize], operands: usize) -> Vec<i64> {
    let mut w = vec![0i64; operands];
    for &i in candidates {
        let e = &edges[i];
        // Half-open in x around m.x − ε: [lo, hi) shifted by ε becomes (lo, hi].
        let leftward = e.b.x < m.x && m.x <= e.a.x;
        let rightward = e.a.x < m.x && m.x <= e.b.x;
        if !(leftward || rightward) {
            continue;
        }
        let y = &e.a.y + (&e.b.y - &e.a.y) * (&m.x - &e.a.x) / (&e.b.x - &e.a.x);
        if y > m.y {
            w[owner[i]] += if leftward { 1 } else { -1 };
        }
    }
    w
}

/// Directed output edges with the kept side on their left.
pub(crate) fn overlay_edges(operands: &[Vec<Segment>], keep: impl Fn(&[i64]) -> bool) -> Vec<(RatPoint, RatPoint)> {
    let k = operands.len();
    let mut edges: Vec<Segment> = Vec::new();
    let mut owner: Vec<usize> = Vec::new();
    for (o, segs) in operands.iter().enumerate() {
        for s in segs {
            if !s.is_degenerate() {
                edges.push(s.clone());
                owner.push(o);
            }
        }
    }
    if edges.is_empty() {
        return Vec::new();
    }

    let mut cuts: Vec<BTreeSet<RatPoint>> =
        edges.iter().map(|e| [e.a.clone(), e.b.clone()].into_iter().collect()).collect();
    for (i, j) in overlapping_pairs(&edges) {
        match segment_intersection(&edges[i], &edges[j]) {
            SegmentIntersection::None => {}
            SegmentIntersection::Point(p) => {
                cuts[i].insert(p.clone());
                cuts[j].insert(p);
            }
            SegmentIntersection::Overlap(a, b) => {
                cuts[i].insert(a.clone());
                cuts[i].insert(b.clone());
                cuts[j].insert(a);
                cuts[j].insert(b);
            }
        }
    }

    let mut pieces: Vec<Piece> = Vec::new();
    let mut by_key: HashMap<(RatPoint, RatPoint), usize> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        let forward = e.a < e.b;
        let pts: Vec<&RatPoint> = cuts[i].iter().collect();
        for w in pts.windows(2) {
            let key = (w[0].clone(), w[1].clone());
            let idx = *by_key.entry(key).or_insert_with(|| {
                pieces.push(Piece { lo: w[0].clone(), hi: w[1].clone(), net: vec![0; k] });
                pieces.len() - 1
            });
            pieces[idx].net[owner[i]] += if forward { 1 } else { -1 };
        }
    }

    let x_index = StripIndex::build(&edges);
    let up = RatPoint::new(int(0), int(1));

    let mut out = Vec::new();
    for piece in &pieces {
        let m = piece.lo.midpoint(&piece.hi);
        // Left of lo → hi is "above" for non-vertical pieces and "west" for vertical ones.
        let left = if piece.lo.x != piece.hi.x {
            side_winding(&m, &up, x_index.candidates(&m), &edges, &owner, k)
        } else {
            west_winding(&m, x_index.candidates(&m), &edges, &owner, k)
        };
        let right: Vec<i64> = left.iter().zip(&piece.net).map(|(l, n)| l - n).collect();
        match (keep(&left), keep(&right)) {
            (true, false) => out.push((piece.lo.clone(), piece.hi.clone())),
            (false, true) => out.push((piece.hi.clone(), piece.lo.clone())),
            _ => {}
        }
    }
    out
}

/// Links directed edges into closed cycles, always taking the tightest clockwise turn
/// so that cycles touching at a vertex come out as separate rings.
pub(crate) fn trace_cycles(edges: &[(RatPoint, RatPoint)]) -> Vec<Vec<RatPoint>> {
    let mut outgoing: HashMap<&RatPoint, Vec<usize>> = HashMap::new();
    for (i, (a, _)) in edges.iter().enumerate() {
        outgoing.entry(a).or_default().push(i);
    }
    let next_of = |i: usize| -> Option<usize> {
        let (u, v) = &edges[i];
        let back = u - v;
        let cands = outgoing.get(v)?;
        cands
            .iter()
            .copied()
            .filter(|&j| j != i)
            .max_by(|&a, &b| cmp_ccw_from(&back, &(&edges[a].1 - v), &(&edges[b].1 - v)))
    };
    let mut used = vec![false; edges.len()];
    let mut cycles = Vec::new();
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            used[cur] = true;
            cycle.push(edges[cur].0.clone());
            match next_of(cur) {
                Some(n) if n == start => break,
                Some(n) if !used[n] => cur = n,
                _ => break,
            }
        }
        cycles.push(cycle);
    }
    cycles
}

/// Overlay followed by cycle tracing.
pub(crate) fn overlay(operands: &[Vec<Segment>], keep: impl Fn(&[i64]) -> bool) -> Vec<Vec<RatPoint>> {
    trace_cycles(&overlay_edges(operands, keep))
}
