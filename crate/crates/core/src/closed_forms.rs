//! Closed forms for the twist-shadow census polynomials `B(n, r)`, their
//! coefficients, degrees, and leading terms.
//!
//! All of these are independent of the brute-force enumerator in
//! [`crate::diagram`]; the cross-validation suites check the two routes
//! against each other coefficient by coefficient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polynomial::IntPolynomial;
use crate::tangle::{ExtendedCount, TangleError};

/// `(x+1)^n`.
fn xp1(n: u32) -> IntPolynomial {
    IntPolynomial::from_ints(&[1, 1]).pow(n)
}

/// `x^2 - 1`.
fn x2m1() -> IntPolynomial {
    IntPolynomial::from_ints(&[-1, 0, 1])
}

/// Binomial coefficient, zero outside `0 <= k <= n`. The out-of-range
/// convention keeps the coefficient formula total in `k`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // Partial products are themselves binomials, so each division is exact.
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// `alpha(n) = ((x+1)^n - 1) / x`, the census of the nontrivial split
/// patterns of a single n-twist band. Coefficients are `C(n, k+1)`.
pub fn alpha(n: u32) -> IntPolynomial {
    (xp1(n) - IntPolynomial::one())
        .div_by_x()
        .expect("(x+1)^n - 1 has no constant term")
}

/// `B(n, 0) = x(x+1)^n`, the one-band closure.
pub fn b_n0(n: u32) -> IntPolynomial {
    IntPolynomial::x() * xp1(n)
}

/// `B(n, inf) = (x+1)^n + x^2 - 1`, the torus-shadow census.
pub fn b_ninf(n: u32) -> IntPolynomial {
    xp1(n) + x2m1()
}

/// The closed form
/// `B(n, r) = (((x+1)^r + x^2 - 1)(x+1)^n + (x^2 - 1)((x+1)^r - 1)) / x`,
/// valid for all finite `n, r >= 0`.
pub fn b_nr_closed(n: u32, r: u32) -> IntPolynomial {
    let numerator =
        (xp1(r) + x2m1()) * xp1(n) + x2m1() * (xp1(r) - IntPolynomial::one());
    numerator
        .div_by_x()
        .expect("both closed-form terms vanish at x = 0")
}

/// Evaluates `B(n, r)` by unrolling the band recurrence
/// `B(n, r) = B(n-1, r) + (x+1)^(n-1) B(inf, r)` from the base
/// `B(0, r) = x(x+1)^r`. The infinite column uses the companion recurrence
/// `B(n, inf) = B(n-1, 0) + B(n-1, inf)` from `B(0, inf) = x^2`.
pub fn b_nr_recurrence(n: u32, r: ExtendedCount) -> IntPolynomial {
    match r {
        ExtendedCount::Finite(r) => {
            let step = b_ninf(r);
            let band = xp1(1);
            let mut acc = IntPolynomial::x() * xp1(r);
            let mut pw = IntPolynomial::one();
            for _ in 0..n {
                acc = acc + &pw * &step;
                pw = pw * &band;
            }
            acc
        }
        ExtendedCount::Infinity => {
            let mut acc = IntPolynomial::monomial(BigInt::one(), 2);
            for k in 0..n {
                acc = acc + b_n0(k);
            }
            acc
        }
    }
}

/// The census split into four disjoint state classes by which twist bands
/// carry a nontrivial split pattern. The parts sum to `B(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateClasses {
    /// States nontrivial only in the east band: `x^2 alpha(n)`.
    pub east_only: IntPolynomial,
    /// States nontrivial only in the south band: `x^2 alpha(r)`.
    pub south_only: IntPolynomial,
    /// States nontrivial in both bands: `x alpha(n) alpha(r)`.
    pub both: IntPolynomial,
    /// The single all-trivial state: `x`.
    pub trivial: IntPolynomial,
}

impl StateClasses {
    pub fn sum(&self) -> IntPolynomial {
        &self.east_only + &self.south_only + &self.both + &self.trivial
    }
}

/// Class decomposition of the `B(n, r)` census. The state-level reading
/// assumes both bands are present (`n, r >= 1`); the polynomials themselves
/// still sum correctly at 0.
pub fn b_nr_classes(n: u32, r: u32) -> StateClasses {
    let x2 = IntPolynomial::monomial(BigInt::one(), 2);
    let an = alpha(n);
    let ar = alpha(r);
    StateClasses {
        east_only: &x2 * &an,
        south_only: &x2 * &ar,
        both: IntPolynomial::x() * &an * &ar,
        trivial: IntPolynomial::x(),
    }
}

/// Coefficient of `x^k` in `B(n, r)` as a direct binomial sum:
/// `C(n+r, k+1) + C(n, k-1) + C(r, k-1) - C(n, k+1) - C(r, k+1) - [k = 1]`.
pub fn coeff_formula(n: u32, r: u32, k: usize) -> BigInt {
    let (n, r) = (u64::from(n), u64::from(r));
    // Every term vanishes beyond k = n + r + 1.
    if k as u64 > n + r + 1 {
        return BigInt::zero();
    }
    let k = k as i64;
    let mut acc = binomial(n + r, k + 1);
    acc += binomial(n, k - 1);
    acc += binomial(r, k - 1);
    acc -= binomial(n, k + 1);
    acc -= binomial(r, k + 1);
    if k == 1 {
        acc -= 1;
    }
    acc
}

/// Number of one-circle states: `nr + 1`.
pub fn coeff_k1(n: u32, r: u32) -> BigInt {
    BigInt::from(u64::from(n) * u64::from(r) + 1)
}

/// Number of two-circle states: `n(C(r,2) + 1) + r(C(n,2) + 1)`.
pub fn coeff_k2(n: u32, r: u32) -> BigInt {
    let half = |a: u32, b: u32| BigInt::from(a) * (binomial(u64::from(b), 2) + 1);
    half(n, r) + half(r, n)
}

/// Degree of `B(n, r)`: `max(n+1, r+1, n+r-1)`.
pub fn degree_formula(n: u32, r: u32) -> usize {
    let (n, r) = (i64::from(n), i64::from(r));
    (n + 1).max(r + 1).max(n + r - 1) as usize
}

/// Leading coefficient of the census polynomial, with either count
/// possibly infinite (but not both).
pub fn leading_coeff(n: ExtendedCount, r: ExtendedCount) -> Result<BigInt, TangleError> {
    use ExtendedCount::{Finite, Infinity};
    let poly = match (n, r) {
        (Finite(n), Finite(r)) => b_nr_closed(n, r),
        (Finite(k), Infinity) | (Infinity, Finite(k)) => b_ninf(k),
        (Infinity, Infinity) => return Err(TangleError::BothInfinite),
    };
    Ok(poly
        .leading()
        .cloned()
        .expect("census polynomials are nonzero"))
}

/// The three one-parameter families with their own published closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialRow {
    /// `B(n, 1) = (x+1)^(n+1) + x^2 - 1`.
    R1,
    /// `B(n, 2) = (2x+2)(x+1)^n + (x^2-1)(x+2)`, the twist-knot shadows.
    R2,
    /// `B(n, n) = ((x+1)^(2n) + (x^2-1)(2(x+1)^n - 1)) / x`.
    Diagonal,
}

/// Evaluates the named family's own closed form; each agrees with
/// [`b_nr_closed`] at `r = 1`, `r = 2`, `r = n` respectively.
pub fn special_row(row: SpecialRow, n: u32) -> IntPolynomial {
    match row {
        SpecialRow::R1 => xp1(n + 1) + x2m1(),
        SpecialRow::R2 => {
            IntPolynomial::from_ints(&[2, 2]) * xp1(n)
                + x2m1() * IntPolynomial::from_ints(&[2, 1])
        }
        SpecialRow::Diagonal => {
            let p = xp1(n);
            let two_p = IntPolynomial::from_ints(&[2]) * &p;
            (&p * &p + x2m1() * (two_p - IntPolynomial::one()))
                .div_by_x()
                .expect("diagonal closed form vanishes at x = 0")
        }
    }
}
