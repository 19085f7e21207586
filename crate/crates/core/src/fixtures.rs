//! Hand-built operand pairs and a seeded generator of random lattice region pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::ConvexCell;
use crate::exact::{orientation, rat, validate_region, Orientation, RatPoint, Region, Ring};

/// Seed used when `LATBOOL_SEED` is unset.
pub const DEFAULT_SEED: u64 = 0x5eed_1a77;

/// Reads the generator seed from `LATBOOL_SEED`.
pub fn seed_from_env() -> u64 {
    std::env::var("LATBOOL_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub a: Region,
    pub b: Region,
}

fn poly(coords: &[(i64, i64)]) -> Ring {
    Ring::from_ints(coords)
}

fn region(rings: Vec<Ring>) -> Region {
    Region::from_rings(rings)
}

fn fixture(name: &str, a: Vec<Ring>, b: Vec<Ring>) -> Fixture {
    Fixture { name: name.to_string(), a: region(a), b: region(b) }
}

/// Small hand-checked pairs covering the degenerate situations.
pub fn hand_fixtures() -> Vec<Fixture> {
    vec![
        fixture("e2_triangles", vec![poly(&[(0, 0), (5, 0), (0, 5)])], vec![poly(&[(0, 0), (5, 0), (5, 5)])]),
        fixture(
            "overlapping_squares",
            vec![poly(&[(0, 0), (4, 0), (4, 4), (0, 4)])],
            vec![poly(&[(2, 2), (6, 2), (6, 6), (2, 6)])],
        ),
        fixture(
            "disjoint_squares",
            vec![poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])],
            vec![poly(&[(3, 0), (4, 0), (4, 1), (3, 1)])],
        ),
        fixture(
            "hole_nesting",
            vec![poly(&[(0, 0), (10, 0), (10, 10), (0, 10)]), poly(&[(3, 3), (3, 7), (7, 7), (7, 3)])],
            vec![poly(&[(1, 4), (9, 5), (9, 6), (1, 5)])],
        ),
        fixture(
            "collinear_overlap",
            vec![poly(&[(0, 0), (4, 0), (4, 2), (0, 2)])],
            vec![poly(&[(2, 0), (6, 0), (3, 3)])],
        ),
        fixture("lattice_free_sliver", vec![poly(&[(0, 0), (3, 1), (5, 2)])], vec![poly(&[(1, 2), (2, 1), (4, 0)])]),
        fixture(
            "l_shape",
            vec![poly(&[(0, 0), (8, 0), (8, 3), (3, 3), (3, 8), (0, 8)])],
            vec![poly(&[(1, 1), (10, 2), (2, 10)])],
        ),
        fixture(
            "comb",
            vec![poly(&[
                (0, 0),
                (9, 0),
                (9, 6),
                (8, 6),
                (8, 2),
                (6, 2),
                (6, 6),
                (5, 6),
                (5, 2),
                (3, 2),
                (3, 6),
                (2, 6),
                (2, 2),
                (1, 2),
                (1, 6),
                (0, 6),
            ])],
            vec![poly(&[(-1, 3), (10, 1), (10, 4), (-1, 6)])],
        ),
        fixture(
            "identical",
            vec![poly(&[(0, 0), (6, 1), (4, 5), (1, 3)])],
            vec![poly(&[(0, 0), (6, 1), (4, 5), (1, 3)])],
        ),
        fixture(
            "vertex_touch",
            vec![poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])],
            vec![poly(&[(2, 2), (4, 2), (4, 4), (2, 4)])],
        ),
        fixture(
            "island_in_hole",
            vec![
                poly(&[(0, 0), (12, 0), (12, 12), (0, 12)]),
                poly(&[(2, 2), (2, 10), (10, 10), (10, 2)]),
                poly(&[(4, 4), (8, 4), (8, 8), (4, 8)]),
            ],
            vec![poly(&[(1, 1), (11, 6), (6, 11)])],
        ),
        fixture(
            "diamonds",
            vec![poly(&[(4, 0), (8, 4), (4, 8), (0, 4)])],
            vec![poly(&[(5, 0), (9, 4), (5, 8), (1, 4)])],
        ),
        fixture(
            "thin_cross",
            vec![poly(&[(0, 0), (13, 5), (13, 6), (0, 1)])],
            vec![poly(&[(0, 6), (13, 0), (13, 1), (0, 7)])],
        ),
        fixture(
            "box_edge",
            vec![poly(&[(0, 0), (7, 0), (7, 7), (0, 7)])],
            vec![poly(&[(-2, 3), (9, 1), (9, 9), (3, 9)])],
        ),
    ]
}

/// Star-shaped ring around `(cx, cy)`: sorted random angles, random radii in
/// `[r_min, r_max]`, rounded to the lattice.
fn star(rng: &mut impl Rng, cx: f64, cy: f64, r_min: f64, r_max: f64, max_vertices: usize) -> Ring {
    let m = rng.gen_range(3..=max_vertices);
    let mut angles: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(|a, b| a.total_cmp(b));
    let mut pts: Vec<(i64, i64)> = angles
        .iter()
        .map(|t| {
            let r = rng.gen_range(r_min..=r_max);
            ((cx + r * t.cos()).round() as i64, (cy + r * t.sin()).round() as i64)
        })
        .collect();
    pts.dedup();
    Ring::from_ints(&pts)
}

fn acceptable(r: &Region) -> bool {
    !r.is_empty() && r.rings().iter().all(|ring| ring.len() >= 3) && validate_region(r).is_empty()
}

/// One random lattice region with coordinates in `[0, size]²`, optionally with a hole.
pub fn random_region(rng: &mut impl Rng, size: i64) -> Region {
    let s = size as f64;
    loop {
        let r_max = rng.gen_range(s * 0.08..s * 0.3);
        let cx = rng.gen_range(r_max..s - r_max) + 0.5;
        let cy = rng.gen_range(r_max..s - r_max) + 0.5;
        let outer = star(rng, cx, cy, r_max * 0.5, r_max, 10);
        let mut rings = vec![outer];
        if rng.gen_bool(0.3) {
            rings.push(star(rng, cx, cy, r_max * 0.1, r_max * 0.3, 6).reversed());
        }
        let candidate = Region::from_rings(rings.clone());
        let in_range = candidate.vertices().all(|p| {
            p.x >= crate::exact::int(0)
                && p.y >= crate::exact::int(0)
                && p.x <= crate::exact::int(size)
                && p.y <= crate::exact::int(size)
        });
        if in_range && acceptable(&candidate) && candidate.rings().len() == rings.len() {
            return candidate;
        }
    }
}

/// `count` random pairs drawn from a ChaCha generator seeded with `seed`.
pub fn random_pairs(seed: u64, count: usize, size: i64) -> Vec<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| Fixture {
            name: format!("random_{i:03}"),
            a: random_region(&mut rng, size),
            b: random_region(&mut rng, size),
        })
        .collect()
}

/// `count` random convex cells with rational vertices of denominator at most 4 inside
/// `[0, 8]²`. Small denominators make equidistant lattice points common. Cells may be
/// lattice-free.
pub fn random_convex_cells(seed: u64, count: usize) -> Vec<ConvexCell> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = Vec::with_capacity(count);
    while cells.len() < count {
        let den = rng.gen_range(1..=4i64);
        let m = rng.gen_range(3..=7);
        let span = rng.gen_range(1..=8 * den);
        let (ox, oy) = (rng.gen_range(0..=8 * den - span), rng.gen_range(0..=8 * den - span));
        let pts: Vec<RatPoint> = (0..m)
            .map(|_| RatPoint::new(rat(ox + rng.gen_range(0..=span), den), rat(oy + rng.gen_range(0..=span), den)))
            .collect();
        let hull = convex_hull(pts);
        if hull.len() >= 3 {
            if let Ok(cell) = ConvexCell::from_ring(Ring::new(hull)) {
                cells.push(cell);
            }
        }
    }
    cells
}

/// Counter-clockwise convex hull without collinear points (monotone chain).
fn convex_hull(mut pts: Vec<RatPoint>) -> Vec<RatPoint> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<RatPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Orientation::Left
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RatPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Orientation::Left
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Many small random polygons in a row, for scaling measurements: about `edges` edges
/// in total, with neighbouring pieces overlapping.
pub fn scaling_region(seed: u64, edges: usize) -> Region {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rings = Vec::new();
    let mut total = 0;
    let mut x = 0.0;
    while total < edges {
        let ring = loop {
            let cand = Region::from_rings([star(&mut rng, x + 6.5, 6.5, 3.0, 6.0, 8)]);
            if acceptable(&cand) {
                break cand.rings()[0].clone();
            }
        };
        total += ring.len();
        rings.push(ring);
        x += 14.0;
    }
    Region::from_rings(rings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::is_valid;
    use crate::oracle::lattice_closure;

    #[test]
    fn convex_cells_are_convex_and_seeded() {
        let a = random_convex_cells(7, 50);
        assert_eq!(a, random_convex_cells(7, 50));
        assert!(a.iter().all(|c| c.boundary.is_convex() && c.boundary.len() >= 3));
    }

    #[test]
    fn hand_fixtures_are_valid() {
        let all = hand_fixtures();
        assert!(all.len() >= 12);
        for f in &all {
            assert!(is_valid(&f.a) && is_valid(&f.b), "{}", f.name);
            assert!(!f.a.is_empty() && !f.b.is_empty(), "{}", f.name);
        }
    }

    #[test]
    fn sliver_fixture_is_lattice_free() {
        let f = hand_fixtures().into_iter().find(|f| f.name == "lattice_free_sliver").unwrap();
        let p = crate::arrangement::exact_intersection(&f.a, &f.b).unwrap();
        assert!(p.region().area() > crate::exact::int(0));
        assert!(lattice_closure(p.region()).is_empty());
    }

    #[test]
    fn generator_is_deterministic_and_valid() {
        let a = random_pairs(7, 5, 64);
        assert_eq!(a, random_pairs(7, 5, 64));
        for f in &a {
            assert!(is_valid(&f.a) && is_valid(&f.b));
        }
    }
}
