//! The public surface: Boolean operations in exact, inner and outer mode.
//!
//! Reductions used inside the universe box `U` (joint bounding box widened by 3):
//!
//! * intersection: `inner = inner_round(A ∩ B)`, `outer = outer_round(A ∩ B)`;
//! * difference: `A \ B = A ∩ Bᶜ`, rounded like an intersection;
//! * union: with `Q = Aᶜ ∩ Bᶜ`, `outer = (inner_round Q)ᶜ` and `inner = (outer_round Q)ᶜ`.
//!
//! For unions, `k` and `h` are reported for the complement-side intersection `Q`.

use crate::arrangement::{crossing_pairs, exact_boolean, exact_intersection, BooleanOp, ExactRegion};
use crate::error::{Error, Result};
use crate::exact::universe::complement_unchecked;
use crate::exact::{complement_in_universe, Region, UniverseBox, UNIVERSE_MARGIN};
use crate::oracle::check_inclusion;
use crate::rounding::{inner_round, outer_round};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Inner,
    Outer,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Inner => "inner",
            Mode::Outer => "outer",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpRequest {
    pub op: BooleanOp,
    pub mode: Mode,
    pub a: Region,
    pub b: Region,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpOutput {
    Exact(ExactRegion),
    Rounded(Region),
}

impl OpOutput {
    pub fn region(&self) -> &Region {
        match self {
            OpOutput::Exact(e) => e.region(),
            OpOutput::Rounded(r) => r,
        }
    }

    pub fn into_region(self) -> Region {
        match self {
            OpOutput::Exact(e) => e.into_region(),
            OpOutput::Rounded(r) => r,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpStats {
    /// Edges of both operands.
    pub n: usize,
    /// Distinct non-lattice vertices of the rounded region.
    pub k: usize,
    /// Pairs of operand edges crossing at a point interior to both.
    pub h: usize,
    /// Distinct vertices of the exact result.
    pub exact_vertices: usize,
    /// Distinct vertices of the returned region.
    pub output_vertices: usize,
}

/// Joint bounding box of the operands widened by the universe margin.
pub fn universe_for(a: &Region, b: &Region) -> UniverseBox {
    UniverseBox::around(&[a, b], UNIVERSE_MARGIN)
}

/// `closure(box \ region)` with no margin requirement on `region`.
pub fn complement_within(region: &Region, universe: &UniverseBox) -> Region {
    complement_unchecked(region, universe)
}

/// The exact result and the exact region that actually gets rounded: `Q = Aᶜ ∩ Bᶜ` for
/// unions, the result itself otherwise.
fn exact_parts(a: &Region, b: &Region, op: BooleanOp, universe: &UniverseBox) -> Result<(ExactRegion, ExactRegion)> {
    let exact = exact_boolean(a, b, op, universe)?;
    let rounded = match op {
        BooleanOp::Union => {
            let ac = complement_in_universe(a, universe)?;
            let bc = complement_in_universe(b, universe)?;
            let mut q = exact_intersection(&ac, &bc)?;
            q.stats.h = crossing_pairs(a, b);
            q.stats.n = exact.stats.n;
            q
        }
        _ => exact.clone(),
    };
    Ok((exact, rounded))
}

fn round(source: &ExactRegion, op: BooleanOp, mode: Mode, universe: &UniverseBox) -> Result<Region> {
    match (op, mode) {
        (_, Mode::Exact) => Ok(source.region().clone()),
        (BooleanOp::Union, Mode::Outer) => Ok(complement_within(&inner_round(source)?, universe)),
        (BooleanOp::Union, Mode::Inner) => Ok(complement_within(&outer_round(source, universe)?, universe)),
        (_, Mode::Inner) => inner_round(source),
        (_, Mode::Outer) => outer_round(source, universe),
    }
}

/// Runs one operation and reports its statistics.
pub fn apply_with_stats(req: &OpRequest) -> Result<(OpOutput, OpStats)> {
    let (output, stats, _) = run_request(req)?;
    Ok((output, stats))
}

/// Like [`apply_with_stats`], then checks the rounded output against the exact result with
/// the exact inclusion oracle. A failed check is reported as [`Error::Invariant`].
pub fn apply_checked(req: &OpRequest) -> Result<(OpOutput, OpStats)> {
    let (output, stats, exact) = run_request(req)?;
    let check = match req.mode {
        Mode::Exact => Ok(()),
        Mode::Inner => check_inclusion(output.region(), exact.region()),
        Mode::Outer => check_inclusion(exact.region(), output.region()),
    };
    check.map_err(|w| {
        Error::Invariant(format!("{} {} rounding escapes its bound: {w}", req.mode.name(), req.op.name()))
    })?;
    Ok((output, stats))
}

fn run_request(req: &OpRequest) -> Result<(OpOutput, OpStats, ExactRegion)> {
    let universe = universe_for(&req.a, &req.b);
    let (exact, source) = exact_parts(&req.a, &req.b, req.op, &universe)?;
    let output = match req.mode {
        Mode::Exact => OpOutput::Exact(exact.clone()),
        mode => OpOutput::Rounded(round(&source, req.op, mode, &universe)?),
    };
    let stats = OpStats {
        n: exact.stats.n,
        k: source.stats.k,
        h: source.stats.h,
        exact_vertices: exact.region().vertex_count(),
        output_vertices: output.region().vertex_count(),
    };
    Ok((output, stats, exact))
}

pub fn apply(req: &OpRequest) -> Result<OpOutput> {
    Ok(apply_with_stats(req)?.0)
}

/// The interval `inner ⊆ exact ⊆ outer` of one operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sandwich {
    pub inner: Region,
    pub exact: ExactRegion,
    pub outer: Region,
    pub stats: OpStats,
}

/// The exact region the rounding pipelines start from: `Aᶜ ∩ Bᶜ` for unions, the
/// exact result otherwise.
pub fn rounding_source(a: &Region, b: &Region, op: BooleanOp) -> Result<ExactRegion> {
    Ok(exact_parts(a, b, op, &universe_for(a, b))?.1)
}

/// The exact result alone.
pub fn exact_result(a: &Region, b: &Region, op: BooleanOp) -> Result<ExactRegion> {
    exact_boolean(a, b, op, &universe_for(a, b))
}

/// All three modes at once, without checking the inclusion chain.
pub fn bracket(a: &Region, b: &Region, op: BooleanOp) -> Result<Sandwich> {
    let universe = universe_for(a, b);
    let (exact, source) = exact_parts(a, b, op, &universe)?;
    let inner = round(&source, op, Mode::Inner, &universe)?;
    let outer = round(&source, op, Mode::Outer, &universe)?;
    let stats = OpStats {
        n: exact.stats.n,
        k: source.stats.k,
        h: source.stats.h,
        exact_vertices: exact.region().vertex_count(),
        output_vertices: 0,
    };
    Ok(Sandwich { inner, exact, outer, stats })
}

/// All three modes at once, with the inclusion chain checked before returning.
pub fn sandwich(a: &Region, b: &Region, op: BooleanOp) -> Result<Sandwich> {
    let Sandwich { inner, exact, outer, stats } = bracket(a, b, op)?;
    check_inclusion(&inner, exact.region())
        .map_err(|w| Error::Invariant(format!("inner ⊄ exact for {}: {w}", op.name())))?;
    check_inclusion(exact.region(), &outer)
        .map_err(|w| Error::Invariant(format!("exact ⊄ outer for {}: {w}", op.name())))?;
    Ok(Sandwich { inner, exact, outer, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Ring;

    fn poly(coords: &[(i64, i64)]) -> Region {
        Region::from_rings([Ring::from_ints(coords)])
    }

    fn req(op: BooleanOp, mode: Mode, a: &Region, b: &Region) -> OpRequest {
        OpRequest { op, mode, a: a.clone(), b: b.clone() }
    }

    #[test]
    fn apply_examples() {
        let a = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let b = poly(&[(2, 2), (6, 2), (6, 6), (2, 6)]);
        let sq = poly(&[(2, 2), (4, 2), (4, 4), (2, 4)]);
        for mode in [Mode::Exact, Mode::Inner, Mode::Outer] {
            assert_eq!(apply(&req(BooleanOp::Intersection, mode, &a, &b)).unwrap().region(), &sq);
        }

        let t1 = poly(&[(0, 0), (5, 0), (0, 5)]);
        let t2 = poly(&[(0, 0), (5, 0), (5, 5)]);
        let inner = apply(&req(BooleanOp::Intersection, Mode::Inner, &t1, &t2)).unwrap();
        assert_eq!(inner.region(), &poly(&[(0, 0), (5, 0), (2, 2)]));

        let u1 = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let u2 = poly(&[(3, 0), (4, 0), (4, 1), (3, 1)]);
        let both = Region::from_rings(u1.rings().iter().chain(u2.rings()).cloned());
        assert_eq!(apply(&req(BooleanOp::Union, Mode::Outer, &u1, &u2)).unwrap().region(), &both);
        assert_eq!(apply(&req(BooleanOp::Union, Mode::Inner, &u1, &u2)).unwrap().region(), &both);
    }

    #[test]
    fn sandwich_examples() {
        let a = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let far = poly(&[(5, 5), (7, 5), (7, 7), (5, 7)]);
        let s = sandwich(&a, &far, BooleanOp::Intersection).unwrap();
        assert!(s.inner.is_empty() && s.exact.is_empty() && s.outer.is_empty());

        let t1 = poly(&[(0, 0), (5, 0), (0, 5)]);
        let t2 = poly(&[(0, 0), (5, 0), (5, 5)]);
        for op in [BooleanOp::Intersection, BooleanOp::Union, BooleanOp::Difference] {
            let s = sandwich(&t1, &t2, op).unwrap();
            assert!(s.inner.area() < s.exact.region().area(), "{op:?}");
            assert!(s.exact.region().area() < s.outer.area(), "{op:?}");
        }

        let s = sandwich(&t1, &t1, BooleanOp::Intersection).unwrap();
        assert_eq!((&s.inner, s.exact.region(), &s.outer), (&t1, &t1, &t1));
    }
}
