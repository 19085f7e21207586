use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar used for every coordinate in the pipeline.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn floor(v: &Rational) -> BigInt {
    v.numer().div_floor(v.denom())
}

pub(crate) fn ceil(v: &Rational) -> BigInt {
    -((-v.numer()).div_floor(v.denom()))
}

/// Lossy conversion, only for rendering.
pub(crate) fn to_f64(v: &Rational) -> f64 {
    v.numer().to_f64().unwrap_or(f64::NAN) / v.denom().to_f64().unwrap_or(f64::NAN)
}

/// A point of Z².
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint { x: x.into(), y: y.into() }
    }

    pub fn to_rat(&self) -> RatPoint {
        RatPoint { x: Rational::from_integer(self.x.clone()), y: Rational::from_integer(self.y.clone()) }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point with exact rational coordinates. Ordering is lexicographic on (x, y).
///
/// `BigRational` keeps fractions reduced with a positive denominator, so the
/// derived equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RatPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RatPoint { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        RatPoint { x: int(x), y: int(y) }
    }

    pub fn origin() -> Self {
        RatPoint { x: Rational::zero(), y: Rational::zero() }
    }

    pub fn is_lattice(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.is_lattice().then(|| LatticePoint { x: self.x.to_integer(), y: self.y.to_integer() })
    }

    pub fn midpoint(&self, other: &RatPoint) -> RatPoint {
        let two = int(2);
        RatPoint { x: (&self.x + &other.x) / &two, y: (&self.y + &other.y) / &two }
    }

    pub fn dot(&self, other: &RatPoint) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product of two vectors.
    pub fn perp_dot(&self, other: &RatPoint) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, s: &Rational) -> RatPoint {
        RatPoint { x: &self.x * s, y: &self.y * s }
    }

    pub fn squared_norm(&self) -> Rational {
        self.dot(self)
    }

    pub fn squared_distance(&self, other: &RatPoint) -> Rational {
        (self - other).squared_norm()
    }

    pub(crate) fn floor(&self) -> LatticePoint {
        LatticePoint { x: floor(&self.x), y: floor(&self.y) }
    }

    pub(crate) fn ceil(&self) -> LatticePoint {
        LatticePoint { x: ceil(&self.x), y: ceil(&self.y) }
    }

    pub(crate) fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

impl From<LatticePoint> for RatPoint {
    fn from(p: LatticePoint) -> Self {
        p.to_rat()
    }
}

impl From<(i64, i64)> for RatPoint {
    fn from((x, y): (i64, i64)) -> Self {
        RatPoint::int(x, y)
    }
}

impl<'a> Sub<&'a RatPoint> for &'a RatPoint {
    type Output = RatPoint;
    fn sub(self, rhs: &'a RatPoint) -> RatPoint {
        RatPoint { x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl<'a> Add<&'a RatPoint> for &'a RatPoint {
    type Output = RatPoint;
    fn add(self, rhs: &'a RatPoint) -> RatPoint {
        RatPoint { x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

pub(crate) fn fmt_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.x), fmt_rational(&self.y))
    }
}

pub(crate) fn sign(v: &Rational) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
