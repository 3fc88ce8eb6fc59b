//! Builds the two-parameter twist-region shadows and their torus
//! degenerations as [`ShadowDiagram`] values.
//!
//! Construction follows tangle conventions: start from the crossingless
//! zero tangle (two horizontal strands), stack half-twists on the east side
//! and along the bottom, then close the four boundary ends. The port
//! orders of the twist crossings and the choice of closure are pinned by
//! the degenerate families: one-parameter twisting must census to
//! `x(x+1)^n`, and the numerator closure of the twist column to
//! `(x+1)^n + x^2 - 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::ShadowDiagram;
use crate::dsu::DisjointSet;

/// A twist count that is either a nonnegative integer or the symbolic
/// infinity written `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedCount {
    Finite(u32),
    Infinity,
}

impl From<u32> for ExtendedCount {
    fn from(n: u32) -> Self {
        Self::Finite(n)
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinity => write!(f, "inf"),
        }
    }
}

/// Rejected twist-count token; valid forms are a nonnegative integer or
/// `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseCountError;

impl fmt::Display for ParseCountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a nonnegative integer or \"inf\"")
    }
}

impl core::error::Error for ParseCountError {}

impl FromStr for ExtendedCount {
    type Err = ParseCountError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(Self::Infinity)
        } else {
            s.parse::<u32>().map(Self::Finite).map_err(|_| ParseCountError)
        }
    }
}

/// Errors from shadow construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangleError {
    /// Both twist counts are infinite; that pair names no knot shadow.
    BothInfinite,
}

impl fmt::Display for TangleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BothInfinite => f.write_str("twist counts cannot both be \"inf\""),
        }
    }
}

impl core::error::Error for TangleError {}

/// A partial shadow with four open boundary ends, named by compass corner.
/// Boundary names need not be distinct: in the zero tangle the top strand
/// spans nw to ne and the bottom strand sw to se.
#[derive(Debug, Clone)]
pub struct Tangle {
    edge_count: usize,
    crossings: Vec<[usize; 4]>,
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
}

impl Tangle {
    /// The crossingless tangle of two horizontal strands.
    pub fn zero() -> Self {
        Self {
            edge_count: 2,
            crossings: Vec::new(),
            nw: 0,
            ne: 0,
            sw: 1,
            se: 1,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    fn fresh_edge(&mut self) -> usize {
        let e = self.edge_count;
        self.edge_count += 1;
        e
    }

    /// Adds a half-twist joining the two east ends. The crossing's ports
    /// read cyclically as old-ne, new-ne, new-se, old-se.
    pub fn twist_right(mut self) -> Self {
        let ne = self.fresh_edge();
        let se = self.fresh_edge();
        self.crossings.push([self.ne, ne, se, self.se]);
        self.ne = ne;
        self.se = se;
        self
    }

    /// Adds a half-twist joining the two south ends. The crossing's ports
    /// read cyclically as old-sw, old-se, new-se, new-sw.
    pub fn twist_bottom(mut self) -> Self {
        let sw = self.fresh_edge();
        let se = self.fresh_edge();
        self.crossings.push([self.sw, self.se, se, sw]);
        self.sw = sw;
        self.se = se;
        self
    }

    /// Closes the tangle by joining nw to sw and ne to se.
    pub fn closure_denominator(self) -> ShadowDiagram {
        let (nw, sw, ne, se) = (self.nw, self.sw, self.ne, self.se);
        self.close(nw, sw, ne, se)
    }

    /// Closes the tangle by joining nw to ne and sw to se.
    pub fn closure_numerator(self) -> ShadowDiagram {
        let (nw, ne, sw, se) = (self.nw, self.ne, self.sw, self.se);
        self.close(nw, ne, sw, se)
    }

    /// Merges the edge pairs `a~b` and `c~d`, compacts the merged classes
    /// to fresh identifiers, and seals the result as a diagram. Classes
    /// left with no crossing ports become free circles.
    fn close(self, a: usize, b: usize, c: usize, d: usize) -> ShadowDiagram {
        let mut dsu = DisjointSet::new(self.edge_count);
        dsu.union(a, b);
        dsu.union(c, d);
        let mut remap = vec![usize::MAX; self.edge_count];
        let mut classes = 0;
        for e in 0..self.edge_count {
            let root = dsu.find(e);
            if remap[root] == usize::MAX {
                remap[root] = classes;
                classes += 1;
            }
        }
        let crossings = self
            .crossings
            .into_iter()
            .map(|cr| cr.map(|e| remap[dsu.find(e)]))
            .collect();
        ShadowDiagram::new(classes, crossings, 0)
            .expect("tangle closure always yields exactly-two-port edges")
    }
}

/// The two-parameter twist shadow: `n` east half-twists followed by `r`
/// bottom half-twists, denominator closure. An infinite count on either
/// side degenerates to the torus shadow of the other count; both infinite
/// is an error.
pub fn build_two_bridge(n: ExtendedCount, r: ExtendedCount) -> Result<ShadowDiagram, TangleError> {
    use ExtendedCount::{Finite, Infinity};
    match (n, r) {
        (Finite(n), Finite(r)) => {
            let mut t = Tangle::zero();
            for _ in 0..n {
                t = t.twist_right();
            }
            for _ in 0..r {
                t = t.twist_bottom();
            }
            Ok(t.closure_denominator())
        }
        (Finite(n), Infinity) => Ok(build_torus(n)),
        (Infinity, Finite(r)) => Ok(build_torus(r)),
        (Infinity, Infinity) => Err(TangleError::BothInfinite),
    }
}

/// The shadow of the (2, k) torus knot: k east half-twists, numerator
/// closure.
pub fn build_torus(k: u32) -> ShadowDiagram {
    let mut t = Tangle::zero();
    for _ in 0..k {
        t = t.twist_right();
    }
    t.closure_numerator()
}
