//! Cross-route agreement on the full small grid: brute-force enumeration over
//! constructed diagrams must reproduce the closed form, the recurrence, and
//! the per-class decomposition, coefficient by coefficient.

use kstates_core::closed_forms::{
    b_ninf, b_nr_classes, b_nr_closed, b_nr_recurrence, coeff_formula, coeff_k1, coeff_k2,
    degree_formula, leading_coeff,
};
use kstates_core::{build_torus, build_two_bridge, BigInt, ExtendedCount, IntPolynomial};

const GRID: u32 = 7;

fn census(n: u32, r: u32) -> IntPolynomial {
    build_two_bridge(n.into(), r.into())
        .expect("finite twist counts")
        .state_polynomial()
        .expect("14 crossings is within the cap")
}

#[test]
fn all_four_routes_agree_on_the_grid() {
    for n in 0..=GRID {
        for r in 0..=GRID {
            let closed = b_nr_closed(n, r);
            assert_eq!(
                b_nr_recurrence(n, r.into()),
                closed,
                "recurrence disagrees at n={n} r={r}"
            );
            assert_eq!(
                b_nr_classes(n, r).sum(),
                closed,
                "class decomposition disagrees at n={n} r={r}"
            );
            assert_eq!(census(n, r), closed, "enumeration disagrees at n={n} r={r}");
        }
    }
}

#[test]
fn census_is_symmetric_in_the_two_twist_counts() {
    for n in 0..=GRID {
        for r in n + 1..=GRID {
            assert_eq!(census(n, r), census(r, n), "asymmetric at n={n} r={r}");
        }
    }
}

#[test]
fn state_totals_and_one_circle_counts() {
    for n in 0..=GRID {
        for r in 0..=GRID {
            let d = build_two_bridge(n.into(), r.into()).unwrap();
            assert_eq!(d.crossing_count(), (n + r) as usize);
            let p = d.state_polynomial().unwrap();
            assert_eq!(
                p.eval(&BigInt::from(1)),
                BigInt::from(1u64 << (n + r)),
                "state total wrong at n={n} r={r}"
            );
            assert_eq!(
                BigInt::from(d.count_states_with_circles(1).unwrap()),
                coeff_k1(n, r),
                "one-circle count wrong at n={n} r={r}"
            );
        }
    }
}

#[test]
fn infinite_twist_closures_match_the_torus_family() {
    use ExtendedCount::{Finite, Infinity};
    for k in 0..=8 {
        assert_eq!(
            build_torus(k).state_polynomial().unwrap(),
            b_ninf(k),
            "torus closure disagrees at k={k}"
        );
    }
    for n in 1..=8 {
        let expected = b_nr_closed(n - 1, 1);
        let east = build_two_bridge(Finite(n), Infinity).unwrap();
        let south = build_two_bridge(Infinity, Finite(n)).unwrap();
        assert_eq!(east.state_polynomial().unwrap(), expected, "n={n}, r=inf");
        assert_eq!(south.state_polynomial().unwrap(), expected, "n=inf, r={n}");
    }
}

#[test]
fn coefficient_formula_matches_the_closed_form() {
    for n in 0..=GRID {
        for r in 0..=GRID {
            let closed = b_nr_closed(n, r);
            for k in 0..=(GRID + GRID + 2) as usize {
                assert_eq!(
                    coeff_formula(n, r, k),
                    closed.coeff(k),
                    "coefficient formula wrong at n={n} r={r} k={k}"
                );
            }
            assert_eq!(coeff_k1(n, r), closed.coeff(1), "k=1 shortcut at n={n} r={r}");
            assert_eq!(coeff_k2(n, r), closed.coeff(2), "k=2 shortcut at n={n} r={r}");
        }
    }
}

#[test]
fn degree_and_leading_coefficient_match_the_census() {
    for n in 0..=GRID {
        for r in 0..=GRID {
            let p = census(n, r);
            assert_eq!(
                p.degree(),
                Some(degree_formula(n, r)),
                "degree wrong at n={n} r={r}"
            );
            assert_eq!(
                p.leading(),
                Some(&leading_coeff(n.into(), r.into()).unwrap()),
                "leading coefficient wrong at n={n} r={r}"
            );
        }
    }
}
