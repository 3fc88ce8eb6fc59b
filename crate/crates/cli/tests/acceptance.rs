//! Acceptance suite: eight end-to-end criteria, each printing one PASS or
//! FAIL line (run with `--nocapture` to see them on success).

use std::process::Command;
use std::time::Instant;

use kstates::format::{format_table, TableFormat};
use kstates::goldens::golden_csv;
use kstates::random::random_diagram;
use kstates::verify::DEFAULT_SEED;
use kstates_core::closed_forms::{
    b_ninf, b_nr_classes, b_nr_closed, b_nr_recurrence, coeff_formula, coeff_k1, coeff_k2,
    degree_formula, leading_coeff,
};
use kstates_core::tables::{render_table, TableName, TableSpec};
use kstates_core::{
    build_torus, build_two_bridge, BigInt, ExtendedCount, IntPolynomial, ShadowDiagram,
    SpliceChoice,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn criterion(number: u8, label: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("PASS criterion {number} ({label}): {detail}"),
        Err(why) => {
            println!("FAIL criterion {number} ({label}): {why}");
            panic!("criterion {number} ({label}) failed: {why}");
        }
    }
}

fn census(n: u32, r: u32) -> IntPolynomial {
    build_two_bridge(n.into(), r.into())
        .expect("finite twist counts")
        .state_polynomial()
        .expect("within cap")
}

fn golden_matrix(name: TableName) -> Vec<Vec<i64>> {
    golden_csv(name)
        .lines()
        .map(|line| line.split(',').map(|cell| cell.parse().expect("integer cell")).collect())
        .collect()
}

#[test]
fn criterion_1_figure_eight_census() {
    let start = Instant::now();
    let enumerated = census(2, 2);
    let closed = b_nr_closed(2, 2);
    let elapsed = start.elapsed();
    let expected = IntPolynomial::from_ints(&[0, 5, 8, 3]);

    let result = if enumerated != expected {
        Err(format!("enumeration produced {:?}", enumerated.coeffs()))
    } else if closed != expected {
        Err(format!("closed form produced {:?}", closed.coeffs()))
    } else if elapsed.as_millis() >= 10 {
        Err(format!("took {elapsed:?}, budget is 10 ms"))
    } else {
        Ok(format!("both routes yield 0 5 8 3 in {elapsed:?}"))
    };
    criterion(1, "figure-eight census", result);
}

#[test]
fn criterion_2_grand_equivalence_grid() {
    let start = Instant::now();
    let mut result = Ok(());
    'grid: for n in 0..=7 {
        for r in 0..=7 {
            let closed = b_nr_closed(n, r);
            let routes = [
                ("enumeration", census(n, r)),
                ("recurrence", b_nr_recurrence(n, r.into())),
                ("class sum", b_nr_classes(n, r).sum()),
            ];
            for (route, p) in routes {
                if p != closed {
                    result = Err(format!("{route} disagrees with the closed form at n={n} r={r}"));
                    break 'grid;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let result = result.and_then(|()| {
        if elapsed.as_secs() < 5 {
            Ok(format!("4 routes x 64 diagrams agree in {elapsed:?}"))
        } else {
            Err(format!("grid took {elapsed:?}, budget is 5 s"))
        }
    });
    criterion(2, "grand equivalence grid", result);
}

#[test]
fn criterion_3_table_goldens() {
    let mut result = Ok(());
    for name in TableName::ALL {
        let spec = TableSpec { name, rows: 8 };
        let rendered = format_table(&render_table(&spec), name.kind(), TableFormat::Csv) + "\n";
        if rendered != golden_csv(name) {
            result = Err(format!("rendered {} differs from its golden file", name.token()));
            break;
        }
    }
    let result = result.and_then(|()| {
        if !golden_csv(TableName::Bnnk).contains("3472") {
            Err("diagonal golden misses the 3472 spot value".into())
        } else if !golden_csv(TableName::Bnr2).contains("308") {
            Err("two-circle golden misses the 308 spot value".into())
        } else {
            Ok("all 8 rendered tables match their golden files byte-exactly".into())
        }
    });
    criterion(3, "table goldens", result);
}

#[test]
fn criterion_4_coefficient_formula() {
    let mut result = Ok(());
    'grid: for n in 0..=7u32 {
        for r in 0..=7u32 {
            let closed = b_nr_closed(n, r);
            for k in 0..=14usize {
                if coeff_formula(n, r, k) != closed.coeff(k) {
                    result = Err(format!("general formula wrong at n={n} r={r} k={k}"));
                    break 'grid;
                }
            }
            if coeff_k1(n, r) != BigInt::from(u64::from(n) * u64::from(r) + 1) {
                result = Err(format!("one-circle shortcut is not nr+1 at n={n} r={r}"));
                break 'grid;
            }
        }
    }
    let result = result.and_then(|()| {
        let k1 = golden_matrix(TableName::Bnr1);
        let k2 = golden_matrix(TableName::Bnr2);
        for n in 0..=7u32 {
            for r in 0..=7u32 {
                let (i, j) = (n as usize, r as usize);
                if coeff_k1(n, r) != BigInt::from(k1[i][j]) {
                    return Err(format!("k=1 table disagrees at n={n} r={r}"));
                }
                if coeff_k2(n, r) != BigInt::from(k2[i][j]) {
                    return Err(format!("k=2 table disagrees at n={n} r={r}"));
                }
            }
        }
        Ok("formula matches all grid coefficients and both printed tables".into())
    });
    criterion(4, "coefficient formula", result);
}

#[test]
fn criterion_5_state_count_conservation() {
    let mut result = Ok(());
    'grid: for n in 0..=7u32 {
        for r in 0..=7u32 {
            let d = build_two_bridge(n.into(), r.into()).unwrap();
            let total = census(n, r).eval(&BigInt::from(1));
            if total != BigInt::from(1u64 << (n + r)) {
                result = Err(format!("state total at n={n} r={r} is {total}, not 2^{}", n + r));
                break 'grid;
            }
            let one_circle = d.count_states_with_circles(1).unwrap();
            if BigInt::from(one_circle) != coeff_k1(n, r) {
                result = Err(format!("one-circle count at n={n} r={r} is {one_circle}"));
                break 'grid;
            }
        }
    }
    let result =
        result.map(|()| "totals are 2^(n+r) and one-circle counts are nr+1 on the grid".into());
    criterion(5, "state-count conservation", result);
}

#[test]
fn criterion_6_structural_laws() {
    fn splice_choices(d: &ShadowDiagram) -> Vec<SpliceChoice> {
        let mut choices: Vec<SpliceChoice> = (0..d.edge_count()).map(SpliceChoice::Edge).collect();
        if d.free_circles() > 0 {
            choices.push(SpliceChoice::FreeCircle);
        }
        choices
    }

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut pairs = 0u32;
    let mut result = Ok(());
    'trials: while pairs < 200 {
        for m1 in 0..=4usize {
            for m2 in 0..=4usize.min(8 - m1) {
                let d1 = random_diagram(&mut rng, m1, 2);
                let d2 = random_diagram(&mut rng, m2, 2);
                let product =
                    d1.state_polynomial().unwrap() * d2.state_polynomial().unwrap();
                if d1.disjoint_union(&d2).state_polynomial().unwrap() != product {
                    result = Err(format!("disjoint union broke the product law (pair {pairs})"));
                    break 'trials;
                }
                for c1 in splice_choices(&d1) {
                    for c2 in splice_choices(&d2) {
                        let sum = d1.connected_sum_at(c1, &d2, c2).unwrap();
                        let scaled = IntPolynomial::x() * sum.state_polynomial().unwrap();
                        if scaled != product {
                            result = Err(format!(
                                "connected sum broke the law at {c1:?}/{c2:?} (pair {pairs})"
                            ));
                            break 'trials;
                        }
                    }
                }
                pairs += 1;
            }
        }
    }
    let result = result.map(|()| {
        format!("union and sum laws hold on {pairs} seeded pairs over every splice choice")
    });
    criterion(6, "structural laws", result);
}

#[test]
fn criterion_7_degenerate_families() {
    use ExtendedCount::{Finite, Infinity};
    let mut result = Ok(());
    for k in 0..=8u32 {
        if build_torus(k).state_polynomial().unwrap() != b_ninf(k) {
            result = Err(format!("torus closure disagrees at k={k}"));
            break;
        }
    }
    let result = result.and_then(|()| {
        for n in 1..=8u32 {
            let built = build_two_bridge(Finite(n), Infinity).unwrap();
            if built.state_polynomial().unwrap() != b_nr_closed(n - 1, 1) {
                return Err(format!("infinite-column closure disagrees at n={n}"));
            }
        }
        Ok(())
    });
    let result = result.and_then(|()| {
        let degree = golden_matrix(TableName::Degree);
        let leading = golden_matrix(TableName::Leading);
        for n in 0..=7u32 {
            for r in 0..=7u32 {
                let (i, j) = (n as usize, r as usize);
                if degree_formula(n, r) != degree[i][j] as usize {
                    return Err(format!("degree table disagrees at n={n} r={r}"));
                }
                let lead = leading_coeff(n.into(), r.into()).unwrap();
                if lead != BigInt::from(leading[i][j]) {
                    return Err(format!("leading table disagrees at n={n} r={r}"));
                }
            }
        }
        Ok(())
    });
    let result = result.and_then(|()| {
        let expect_deg = [2, 2, 2, 3, 4, 5, 6, 7, 8];
        let expect_lead = [1, 1, 2, 1, 1, 1, 1, 1, 1];
        for n in 0..=8u32 {
            let p = b_ninf(n);
            if p.degree() != Some(expect_deg[n as usize]) {
                return Err(format!("infinite-column degree wrong at n={n}"));
            }
            if p.leading() != Some(&BigInt::from(expect_lead[n as usize])) {
                return Err(format!("infinite-column leading coefficient wrong at n={n}"));
            }
            if leading_coeff(Finite(n), Infinity).unwrap()
                != BigInt::from(expect_lead[n as usize])
            {
                return Err(format!("infinite-column leading formula wrong at n={n}"));
            }
        }
        Ok("torus closures, infinite columns, degrees, and leading coefficients all match".into())
    });
    criterion(7, "degenerate families", result);
}

#[test]
fn criterion_8_failure_observability() {
    let output = Command::new(env!("CARGO_BIN_EXE_kstates"))
        .env_remove("KSTATES_MAX_CROSSINGS")
        .args(["verify", "--max-n", "4", "--max-r", "4", "--inject-fault", "3,1,2"])
        .output()
        .expect("binary should run");
    let text = String::from_utf8(output.stdout).expect("utf-8 output");

    let result = if output.status.code() != Some(1) {
        Err(format!("exit code was {:?}, want 1", output.status.code()))
    } else if !text.contains("FAIL") {
        Err("no FAIL line printed".into())
    } else if !text.contains("n=3 r=1 k=2") {
        Err(format!("counterexample does not name the corrupted cell:\n{text}"))
    } else {
        Ok("a corrupted coefficient makes verify exit 1 and name (n, r, k)".into())
    };
    criterion(8, "failure observability", result);
}
