//! Exact arithmetic primitives, the region data model and exact predicates.

pub(crate) mod pairs;
pub mod point;
pub mod predicates;
pub mod region;
pub mod universe;
pub mod validate;

pub use point::{int, rat, LatticePoint, RatPoint, Rational};
pub use predicates::{
    cross, on_segment, orientation, properly_cross, segment_intersection, squared_distance, Orientation, Segment,
    SegmentIntersection,
};
pub use region::{is_visible, point_in_region, Location, Region, Ring, RingOrientation};
pub use universe::{complement_in_universe, UniverseBox, UNIVERSE_MARGIN};
pub use validate::{is_valid, validate_region, Violation};
