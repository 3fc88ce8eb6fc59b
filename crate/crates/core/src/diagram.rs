//! Shadow diagrams, split rules, and the brute-force state census.
//!
//! A shadow diagram is the 4-valent graph left of a knot diagram once
//! over/under information is erased: crossings are 4-tuples of edge
//! identifiers in cyclic planar port order, plus a count of crossing-free
//! circles. A state picks one of the two splits at every crossing; the
//! census walks all `2^m` states with a reset-per-state disjoint-set pass
//! and histograms the resulting circle counts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::dsu::DisjointSet;
use crate::polynomial::IntPolynomial;
use crate::DEFAULT_ENUMERATION_CAP;

/// Errors from diagram construction and state enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramError {
    /// A crossing references an edge identifier outside `[0, edge_count)`.
    InvalidEdgeId { edge: usize, edge_count: usize },
    /// An edge identifier appears at a number of ports other than two.
    UnbalancedEdge { edge: usize, occurrences: usize },
    /// A state mask's length does not match the diagram's crossing count.
    MaskLengthMismatch { expected: usize, got: usize },
    /// The diagram has more crossings than the enumeration cap allows.
    TooManyCrossings { crossings: usize, cap: usize },
    /// Connected sum on a diagram with no edges and no free circles.
    EmptySummand,
    /// A splice target names a free circle of a diagram that has none.
    NoFreeCircle,
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::InvalidEdgeId { edge, edge_count } => {
                write!(f, "edge id {edge} out of range (edge count {edge_count})")
            }
            Self::UnbalancedEdge { edge, occurrences } => write!(
                f,
                "edge {edge} occupies {occurrences} crossing ports, expected exactly 2"
            ),
            Self::MaskLengthMismatch { expected, got } => {
                write!(f, "state mask has length {got}, diagram has {expected} crossings")
            }
            Self::TooManyCrossings { crossings, cap } => {
                write!(f, "too many crossings: {crossings} exceeds enumeration cap {cap}")
            }
            Self::EmptySummand => write!(f, "nothing to splice: summand has no edges or circles"),
            Self::NoFreeCircle => write!(f, "splice names a free circle, but the diagram has none"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// One of the two ways of splitting a crossing.
///
/// With crossing ports `(p0, p1, p2, p3)` in cyclic order, split `A` joins
/// the cyclically adjacent pairs `{p0,p1}` and `{p2,p3}`, split `B` the
/// pairs `{p1,p2}` and `{p3,p0}`. Which split carries which label does not
/// affect the generating polynomial (the census ranges over both); the
/// labels only matter when listing individual states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    A,
    B,
}

/// A split choice for every crossing of a diagram, packed as a bit vector:
/// bit `i` clear means crossing `i` takes split [`Split::A`], set means
/// [`Split::B`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateMask {
    bits: u64,
    len: usize,
}

impl StateMask {
    /// Packs the low `len` bits of `bits` into a mask; higher bits are
    /// ignored.
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= 64, "state masks hold at most 64 crossings");
        let bits = if len == 64 { bits } else { bits & ((1 << len) - 1) };
        Self { bits, len }
    }

    pub fn from_splits(splits: &[Split]) -> Self {
        let mut bits = 0u64;
        for (i, s) in splits.iter().enumerate() {
            if let Split::B = s {
                bits |= 1 << i;
            }
        }
        Self::new(bits, splits.len())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Split assigned to crossing `i`.
    pub fn split(&self, i: usize) -> Split {
        if self.bits >> i & 1 == 0 {
            Split::A
        } else {
            Split::B
        }
    }
}

/// How a connected sum attaches to one summand: cut a named edge, or absorb
/// one of the summand's free circles (which leaves the other summand's
/// chosen edge uncut).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpliceChoice {
    Edge(usize),
    FreeCircle,
}

/// A knot shadow: crossings as 4-tuples of edge identifiers in cyclic port
/// order, plus crossing-free circles.
///
/// Invariant: every edge identifier in `[0, edge_count)` occupies exactly
/// two crossing ports. Identifiers that would occupy zero ports are
/// converted to free circles at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowDiagram {
    edge_count: usize,
    crossings: Vec<[usize; 4]>,
    free_circles: usize,
}

impl ShadowDiagram {
    /// Validates and normalizes a diagram.
    ///
    /// Edge identifiers must lie in `[0, edge_count)` and occupy exactly
    /// zero or two ports; zero-port identifiers are removed and counted as
    /// free circles, and the remaining identifiers are compacted.
    pub fn new(
        edge_count: usize,
        crossings: Vec<[usize; 4]>,
        free_circles: usize,
    ) -> Result<Self, DiagramError> {
        let mut occurrences = vec![0usize; edge_count];
        for crossing in &crossings {
            for &edge in crossing {
                if edge >= edge_count {
                    return Err(DiagramError::InvalidEdgeId { edge, edge_count });
                }
                occurrences[edge] += 1;
            }
        }

        // Compact away unused identifiers, each one a closed curve that
        // meets no crossing.
        let mut remap = vec![usize::MAX; edge_count];
        let mut used = 0;
        let mut extra_circles = 0;
        for (edge, &occ) in occurrences.iter().enumerate() {
            match occ {
                0 => extra_circles += 1,
                2 => {
                    remap[edge] = used;
                    used += 1;
                }
                occurrences => return Err(DiagramError::UnbalancedEdge { edge, occurrences }),
            }
        }

        let crossings = crossings
            .into_iter()
            .map(|c| c.map(|e| remap[e]))
            .collect();

        Ok(Self {
            edge_count: used,
            crossings,
            free_circles: free_circles + extra_circles,
        })
    }

    /// The trivial knot: no crossings, one circle.
    pub fn unknot() -> Self {
        Self {
            edge_count: 0,
            crossings: Vec::new(),
            free_circles: 1,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// Number of closed curves left after splitting every crossing as the
    /// mask directs.
    pub fn circle_count(&self, mask: &StateMask) -> Result<usize, DiagramError> {
        if mask.len() != self.crossings.len() {
            return Err(DiagramError::MaskLengthMismatch {
                expected: self.crossings.len(),
                got: mask.len(),
            });
        }
        let mut dsu = DisjointSet::new(self.edge_count);
        self.apply_splits(&mut dsu, mask.bits);
        Ok(dsu.components() + self.free_circles)
    }

    /// Unites edge classes per the chosen split at every crossing.
    fn apply_splits(&self, dsu: &mut DisjointSet, mask: u64) {
        for (i, &[p0, p1, p2, p3]) in self.crossings.iter().enumerate() {
            if mask >> i & 1 == 0 {
                dsu.union(p0, p1);
                dsu.union(p2, p3);
            } else {
                dsu.union(p1, p2);
                dsu.union(p3, p0);
            }
        }
    }

    /// Histogram of circle counts over all `2^m` states: slot `k` holds the
    /// number of states with exactly `k` circles.
    fn state_histogram(&self, cap: usize) -> Result<Vec<u64>, DiagramError> {
        let m = self.crossings.len();
        // Masks are packed in a u64, so 63 is a structural ceiling no
        // matter how high the caller raises the cap.
        if m > cap.min(63) {
            return Err(DiagramError::TooManyCrossings {
                crossings: m,
                cap: cap.min(63),
            });
        }
        let mut counts = vec![0u64; self.edge_count + self.free_circles + 1];
        let mut dsu = DisjointSet::new(self.edge_count);
        for mask in 0..1u64 << m {
            dsu.reset();
            self.apply_splits(&mut dsu, mask);
            counts[dsu.components() + self.free_circles] += 1;
        }
        Ok(counts)
    }

    /// The generating polynomial: the sum of `x^(circle count)` over all
    /// `2^m` states, so the coefficient of `x^k` counts states with exactly
    /// `k` circles.
    ///
    /// Fails with [`DiagramError::TooManyCrossings`] beyond
    /// [`DEFAULT_ENUMERATION_CAP`]; use
    /// [`state_polynomial_with_cap`](Self::state_polynomial_with_cap) to
    /// override.
    pub fn state_polynomial(&self) -> Result<IntPolynomial, DiagramError> {
        self.state_polynomial_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn state_polynomial_with_cap(&self, cap: usize) -> Result<IntPolynomial, DiagramError> {
        let counts = self.state_histogram(cap)?;
        Ok(IntPolynomial::from_coeffs(
            counts.into_iter().map(BigInt::from).collect(),
        ))
    }

    /// Number of states with exactly `k` circles, counted directly without
    /// materializing the polynomial.
    pub fn count_states_with_circles(&self, k: usize) -> Result<u64, DiagramError> {
        self.count_states_with_circles_capped(k, DEFAULT_ENUMERATION_CAP)
    }

    pub fn count_states_with_circles_capped(
        &self,
        k: usize,
        cap: usize,
    ) -> Result<u64, DiagramError> {
        let m = self.crossings.len();
        if m > cap.min(63) {
            return Err(DiagramError::TooManyCrossings {
                crossings: m,
                cap: cap.min(63),
            });
        }
        let mut count = 0;
        let mut dsu = DisjointSet::new(self.edge_count);
        for mask in 0..1u64 << m {
            dsu.reset();
            self.apply_splits(&mut dsu, mask);
            if dsu.components() + self.free_circles == k {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Places two diagrams side by side; generating polynomials multiply.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.edge_count;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| c.map(|e| e + offset)));
        Self {
            edge_count: self.edge_count + other.edge_count,
            crossings,
            free_circles: self.free_circles + other.free_circles,
        }
    }

    /// Connected sum along the default splice targets (lowest-numbered edge
    /// of each summand, or a free circle when a summand has no edges).
    ///
    /// The generating polynomial of the result is the product of the
    /// summands' polynomials divided by `x`, independent of the choice of
    /// spliced edges.
    pub fn connected_sum(&self, other: &Self) -> Result<Self, DiagramError> {
        Ok(self.splice(self.default_splice()?, other, other.default_splice()?))
    }

    /// Connected sum along explicit splice targets.
    pub fn connected_sum_at(
        &self,
        at_self: SpliceChoice,
        other: &Self,
        at_other: SpliceChoice,
    ) -> Result<Self, DiagramError> {
        self.check_splice(at_self)?;
        other.check_splice(at_other)?;
        Ok(self.splice(at_self, other, at_other))
    }

    fn default_splice(&self) -> Result<SpliceChoice, DiagramError> {
        if self.edge_count > 0 {
            Ok(SpliceChoice::Edge(0))
        } else if self.free_circles > 0 {
            Ok(SpliceChoice::FreeCircle)
        } else {
            Err(DiagramError::EmptySummand)
        }
    }

    fn check_splice(&self, choice: SpliceChoice) -> Result<(), DiagramError> {
        match choice {
            SpliceChoice::Edge(edge) if edge >= self.edge_count => {
                Err(DiagramError::InvalidEdgeId {
                    edge,
                    edge_count: self.edge_count,
                })
            }
            SpliceChoice::FreeCircle if self.free_circles == 0 => Err(DiagramError::NoFreeCircle),
            _ => Ok(()),
        }
    }

    /// Both choices already validated. Cutting edge `e` (ports `P1`, `P2`)
    /// and edge `f` (ports `Q1`, `Q2`) cross-splices them into new edges at
    /// `{P1,Q1}` and `{P2,Q2}`. Splicing into a free circle removes the
    /// circle and leaves the other summand's edge uncut.
    fn splice(&self, at_self: SpliceChoice, other: &Self, at_other: SpliceChoice) -> Self {
        let mut result = self.disjoint_union(other);
        if let (SpliceChoice::Edge(e), SpliceChoice::Edge(f)) = (at_self, at_other) {
            let f = f + self.edge_count;
            let (_, p2) = result.edge_ports(e);
            let (q1, _) = result.edge_ports(f);
            // Reuse ids e and f for the two spliced edges: {P1,Q1} keeps e,
            // {P2,Q2} keeps f.
            result.crossings[q1.0][q1.1] = e;
            result.crossings[p2.0][p2.1] = f;
        } else {
            // At least one side is a free circle; it is absorbed.
            result.free_circles -= 1;
        }
        result
    }

    /// The two `(crossing, port)` positions occupied by an edge, in scan
    /// order.
    fn edge_ports(&self, edge: usize) -> ((usize, usize), (usize, usize)) {
        let mut found = [(0, 0); 2];
        let mut n = 0;
        for (i, crossing) in self.crossings.iter().enumerate() {
            for (j, &e) in crossing.iter().enumerate() {
                if e == edge {
                    found[n] = (i, j);
                    n += 1;
                }
            }
        }
        debug_assert_eq!(n, 2, "edge {edge} must occupy exactly two ports");
        (found[0], found[1])
    }
}
