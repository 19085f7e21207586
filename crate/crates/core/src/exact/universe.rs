use num_bigint::BigInt;

use super::point::{int, LatticePoint, RatPoint};
use super::region::{Region, Ring};
use crate::arrangement::overlay::overlay;
use crate::error::{Error, Result};

/// Margin kept between real geometry and the universe boundary. Rounding moves
/// points by less than √2 and pixels reach at most one unit, so three units keep the
/// box edge from ever interacting with the geometry.
pub const UNIVERSE_MARGIN: i64 = 3;

/// Finite stand-in for the plane, used to represent complements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniverseBox {
    pub min: LatticePoint,
    pub max: LatticePoint,
}

impl UniverseBox {
    pub fn new(min: LatticePoint, max: LatticePoint) -> Self {
        UniverseBox { min, max }
    }

    pub fn from_ints(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        UniverseBox::new(LatticePoint::new(x0, y0), LatticePoint::new(x1, y1))
    }

    /// Joint integer bounding box of the regions, grown by `margin`.
    pub fn around(regions: &[&Region], margin: i64) -> Self {
        let mut lo: Option<LatticePoint> = None;
        let mut hi: Option<LatticePoint> = None;
        for r in regions {
            if let Some((a, b)) = r.bbox() {
                let (a, b) = (a.floor(), b.ceil());
                lo = Some(match lo {
                    None => a,
                    Some(l) => LatticePoint { x: l.x.min(a.x), y: l.y.min(a.y) },
                });
                hi = Some(match hi {
                    None => b,
                    Some(h) => LatticePoint { x: h.x.max(b.x), y: h.y.max(b.y) },
                });
            }
        }
        let lo = lo.unwrap_or_else(|| LatticePoint::new(0, 0));
        let hi = hi.unwrap_or_else(|| lo.clone());
        let m = BigInt::from(margin);
        UniverseBox {
            min: LatticePoint { x: &lo.x - &m, y: &lo.y - &m },
            max: LatticePoint { x: &hi.x + &m, y: &hi.y + &m },
        }
    }

    pub fn corners(&self) -> [RatPoint; 4] {
        let (a, b) = (self.min.to_rat(), self.max.to_rat());
        [a.clone(), RatPoint::new(b.x.clone(), a.y.clone()), b.clone(), RatPoint::new(a.x.clone(), b.y.clone())]
    }

    /// Counter-clockwise boundary ring.
    pub fn ring(&self) -> Ring {
        Ring::new(self.corners().to_vec())
    }

    pub fn region(&self) -> Region {
        Region::from_rings([self.ring()])
    }

    /// Every vertex is either on the box boundary or at least `margin` inside it.
    pub fn holds(&self, region: &Region, margin: i64) -> bool {
        let (lo, hi) = (self.min.to_rat(), self.max.to_rat());
        let m = int(margin);
        region.vertices().all(|p| {
            let inside = lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
            let on_box = inside && (p.x == lo.x || p.x == hi.x || p.y == lo.y || p.y == hi.y);
            let deep = &p.x - &lo.x >= m && &hi.x - &p.x >= m && &p.y - &lo.y >= m && &hi.y - &p.y >= m;
            on_box || deep
        })
    }
}

/// closure(box \ R). The box boundary becomes the outer ring.
pub fn complement_in_universe(region: &Region, universe: &UniverseBox) -> Result<Region> {
    if !universe.holds(region, UNIVERSE_MARGIN) {
        return Err(Error::MarginViolation { margin: UNIVERSE_MARGIN });
    }
    Ok(complement_unchecked(region, universe))
}

/// closure(box \ R) without the margin check.
pub(crate) fn complement_unchecked(region: &Region, universe: &UniverseBox) -> Region {
    let box_edges = universe.ring().edges().collect();
    let r_edges = region.edges().collect();
    let cycles = overlay(&[box_edges, r_edges], |w| w[0] != 0 && w[1] == 0);
    Region::from_rings(cycles.into_iter().map(Ring::new))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let bx = UniverseBox::from_ints(0, 0, 10, 10);
        assert_eq!(complement_in_universe(&Region::empty(), &bx).unwrap(), bx.region());
        assert_eq!(complement_in_universe(&bx.region(), &bx).unwrap(), Region::empty());
        let sq = Region::from_rings([Ring::from_ints(&[(4, 4), (5, 4), (5, 5), (4, 5)])]);
        let c = complement_in_universe(&sq, &bx).unwrap();
        assert_eq!(c, Region::from_rings([bx.ring(), Ring::from_ints(&[(4, 4), (4, 5), (5, 5), (5, 4)])]));
        assert_eq!(c.parents(), &[None, Some(0)]);
        assert_eq!(complement_in_universe(&c, &bx).unwrap(), sq);
    }

    #[test]
    fn margin_is_enforced() {
        let bx = UniverseBox::from_ints(0, 0, 10, 10);
        let sq = Region::from_rings([Ring::from_ints(&[(1, 1), (5, 1), (5, 5), (1, 5)])]);
        assert_eq!(complement_in_universe(&sq, &bx), Err(Error::MarginViolation { margin: UNIVERSE_MARGIN }));
    }

    #[test]
    fn around_adds_margin() {
        let sq = Region::from_rings([Ring::from_ints(&[(1, 2), (5, 2), (5, 7), (1, 7)])]);
        assert_eq!(UniverseBox::around(&[&sq], 3), UniverseBox::from_ints(-2, -1, 8, 10));
    }
}
