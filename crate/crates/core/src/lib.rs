//! Exact enumeration of Kauffman states for two-bridge knot shadows.
//!
//! A *state* of a knot shadow assigns one of the two planar splits to every
//! crossing; splitting all crossings leaves a disjoint collection of closed
//! curves ("circles"). Summing `x^(number of circles)` over all `2^m` states
//! of an `m`-crossing diagram yields an integer generating polynomial whose
//! `k`-th coefficient counts the states with exactly `k` circles.
//!
//! The crate computes that polynomial along two independent routes:
//!
//! - [`diagram`]: brute-force state enumeration over explicit shadow
//!   diagrams, built from rational-tangle twists by [`tangle`];
//! - [`closed_forms`]: closed formulas and recurrences for the two-bridge
//!   family `B(n,r)` and its degenerate relatives `B(n,0)` and `B(n,inf)`.
//!
//! [`tables`] renders the coefficient arrays of the `B(n,r)` family as
//! triangles and square arrays and flattens them into integer sequences.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! ([`BigInt`]), so no input can silently overflow.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `kstates` crate layers the command-line interface on top.

#![no_std]

extern crate alloc;

pub mod closed_forms;
pub mod diagram;
pub mod polynomial;
pub mod tables;
pub mod tangle;

mod dsu;

pub use num_bigint::BigInt;

pub use diagram::{DiagramError, ShadowDiagram, Split, SpliceChoice, StateMask};
pub use polynomial::{IntPolynomial, NotDivisibleByX};
pub use tangle::{build_torus, build_two_bridge, ExtendedCount, Tangle, TangleError};

/// Default ceiling on the number of crossings the state enumerator accepts.
///
/// Enumeration walks all `2^m` states, so this is a guard against runaway
/// jobs rather than a correctness limit. Callers can raise or lower it via
/// the `*_with_cap` variants on [`ShadowDiagram`].
pub const DEFAULT_ENUMERATION_CAP: usize = 30;
