use super::point::Rational;
use super::predicates::{minmax, Segment};

/// Index pairs `(i, j)`, `i < j`, whose bounding boxes overlap (closed).
///
/// Sweeps segments in order of their smallest x; desk-scale inputs only.
pub(crate) fn overlapping_pairs(segments: &[Segment]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..segments.len()).collect();
    let xmin = |i: usize| minmax(&segments[i].a.x, &segments[i].b.x).0;
    let xmax = |i: usize| minmax(&segments[i].a.x, &segments[i].b.x).1;
    order.sort_by(|&a, &b| xmin(a).cmp(xmin(b)));
    let mut out = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    for &i in &order {
        let lo = xmin(i);
        active.retain(|&j| xmax(j) >= lo);
        for &j in &active {
            if segments[i].bbox_overlaps(&segments[j]) {
                out.push((i.min(j), i.max(j)));
            }
        }
        active.push(i);
    }
    out
}

/// For each query abscissa `x`, the indices of the segments whose x-range widened by
/// `margin` on both sides contains `x`. One sweep over x with an active list.
pub(crate) fn x_stabbing(segments: &[Segment], xs: &[&Rational], margin: &Rational) -> Vec<Vec<usize>> {
    let mut by_start: Vec<(Rational, usize)> =
        segments.iter().enumerate().map(|(i, s)| (minmax(&s.a.x, &s.b.x).0 - margin, i)).collect();
    by_start.sort();
    let ends: Vec<Rational> = segments.iter().map(|s| minmax(&s.a.x, &s.b.x).1 + margin).collect();
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].cmp(xs[b]));

    let mut out = vec![Vec::new(); xs.len()];
    let mut active: Vec<usize> = Vec::new();
    let mut next = 0;
    for q in order {
        let x = xs[q];
        while next < by_start.len() && &by_start[next].0 <= x {
            active.push(by_start[next].1);
            next += 1;
        }
        active.retain(|&i| &ends[i] >= x);
        out[q] = active.clone();
    }
    out
}

/// Pairs `(i, j)` with `i` from `left` and `j` from `right` whose bounding boxes overlap.
pub(crate) fn overlapping_cross_pairs(left: &[Segment], right: &[Segment]) -> Vec<(usize, usize)> {
    let all: Vec<Segment> = left.iter().chain(right.iter()).cloned().collect();
    let n = left.len();
    overlapping_pairs(&all).into_iter().filter(|&(i, j)| i < n && j >= n).map(|(i, j)| (i, j - n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatPoint;

    #[test]
    fn finds_exactly_the_overlapping_boxes() {
        let s = |a: (i64, i64), b: (i64, i64)| Segment::new(RatPoint::int(a.0, a.1), RatPoint::int(b.0, b.1));
        let segs = vec![s((0, 0), (2, 2)), s((1, 5), (3, 6)), s((2, 0), (4, 1)), s((5, 5), (6, 6))];
        let mut pairs = overlapping_pairs(&segs);
        pairs.sort();
        assert_eq!(pairs, vec![(0, 2)]);
    }

    #[test]
    fn stabbing_respects_margin() {
        let s = |a: (i64, i64), b: (i64, i64)| Segment::new(RatPoint::int(a.0, a.1), RatPoint::int(b.0, b.1));
        let segs = vec![s((0, 0), (2, 0)), s((5, 1), (3, 1)), s((4, 0), (4, 3))];
        let (x0, x3, x6) = (crate::exact::int(0), crate::exact::int(3), crate::exact::int(6));
        let hits = x_stabbing(&segs, &[&x3, &x0, &x6], &crate::exact::int(0));
        assert_eq!(hits, vec![vec![1], vec![0], vec![]]);
        let mut wide = x_stabbing(&segs, &[&x3, &x6], &crate::exact::int(1));
        wide.iter_mut().for_each(|v| v.sort());
        assert_eq!(wide, vec![vec![0, 1, 2], vec![1]]);
    }
}
